//! Catalog of symmetric-space entries and the line-oriented file format.
//!
//! Entries are blank-line separated blocks of `key = value` lines; `#`
//! starts a comment line. Every entry is validated at load time: the
//! construction is rebuilt, `rho_k` is recomputed and compared against any
//! declared fixture, the dimension is rechecked, the Hermitian flag is
//! compared against the adapted-system detection, and the spin flag of the
//! dual is compared against algebraic integrality of `rho_g - rho_k`.
//!
//! Supported keys: `name`, `family`, `params`, `construction`
//! (`classical | cartan | stub`), `hermitian`, `dual_spin`, `rho_k`
//! (fixture), `dim` (fixture; required for stubs), `rank_g`/`rank_k`
//! (stubs), `cartan` (rows separated by `;`), `noncompact_node` (1-based).

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::decision::{SpaceDescriptor, SpaceFactor, UnequalRankStub};
use crate::error::{Error, Result};
use crate::rootsys::{ClassicalFamily, RootSystem};
use crate::sympair::{Family, PairMeta, SymmetricPair};
use crate::weights::{
    is_algebraically_integral, parse_rational, LatticeSpec, Rational, WeightVector,
};

/// `U(p+q)/U(p) x U(q)`: type A with two unitary blocks.
pub fn build_aiii(p: i64, q: i64) -> Result<SymmetricPair> {
    if p < 1 || q < 1 {
        return Err(Error::domain(format!("AIII requires p, q >= 1, got {p},{q}")));
    }
    let (p, q) = (p as usize, q as usize);
    let m = p + q;
    let g = RootSystem::build_classical(ClassicalFamily::A, m - 1)?;
    let e = |i: usize| WeightVector::basis(m, i);
    let mut k_pos = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            k_pos.push(&e(i) - &e(j));
        }
    }
    for i in p..m {
        for j in i + 1..m {
            k_pos.push(&e(i) - &e(j));
        }
    }
    SymmetricPair::new(
        g,
        k_pos,
        LatticeSpec::standard(m),
        m,
        PairMeta {
            name: format!("AIII:{p},{q}"),
            family: Some(Family::AIII),
            parameters: vec![p as i64, q as i64],
            hermitian: true,
            dual_is_spin: m % 2 == 0,
        },
    )
}

/// `Sp(n)/U(n)`: type C with the unitary subgroup on the diagonal.
pub fn build_ci(n: i64) -> Result<SymmetricPair> {
    if n < 1 {
        return Err(Error::domain(format!("CI requires n >= 1, got {n}")));
    }
    let n = n as usize;
    let g = RootSystem::build_classical(ClassicalFamily::C, n)?;
    let e = |i: usize| WeightVector::basis(n, i);
    let mut k_pos = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            k_pos.push(&e(i) - &e(j));
        }
    }
    SymmetricPair::new(
        g,
        k_pos,
        LatticeSpec::standard(n),
        n,
        PairMeta {
            name: format!("CI:{n}"),
            family: Some(Family::CI),
            parameters: vec![n as i64],
            hermitian: true,
            dual_is_spin: n % 2 == 1,
        },
    )
}

/// `SO(n+2)/SO(2) x SO(n)`: the first ambient coordinate is the `SO(2)`
/// direction.
pub fn build_bdi_two(n: i64) -> Result<SymmetricPair> {
    if n < 1 {
        return Err(Error::domain(format!("BDI(2,n) requires n >= 1, got {n}")));
    }
    let n = n as usize;
    let m = n / 2;
    let ambient = m + 1;
    let g = if n % 2 == 1 {
        RootSystem::build_classical(ClassicalFamily::B, ambient)?
    } else {
        RootSystem::build_classical(ClassicalFamily::D, ambient)?
    };
    let e = |i: usize| WeightVector::basis(ambient, i);
    let mut k_pos = Vec::new();
    for i in 1..ambient {
        for j in i + 1..ambient {
            k_pos.push(&e(i) - &e(j));
            k_pos.push(&e(i) + &e(j));
        }
    }
    if n % 2 == 1 {
        for i in 1..ambient {
            k_pos.push(e(i));
        }
    }
    SymmetricPair::new(
        g,
        k_pos,
        LatticeSpec::standard(ambient),
        ambient,
        PairMeta {
            name: format!("BDI:2,{n}"),
            family: Some(Family::BDI),
            parameters: vec![2, n as i64],
            hermitian: true,
            // the n = 1 dual is the sphere, which is spin; odd n >= 3 are not
            dual_is_spin: n.is_multiple_of(2) || n == 1,
        },
    )
}

/// `SO(2n)/U(n)`: type D with the unitary subgroup on the diagonal.
pub fn build_diii(n: i64) -> Result<SymmetricPair> {
    if n < 2 {
        return Err(Error::domain(format!("DIII requires n >= 2, got {n}")));
    }
    let n = n as usize;
    let g = RootSystem::build_classical(ClassicalFamily::D, n)?;
    let e = |i: usize| WeightVector::basis(n, i);
    let mut k_pos = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            k_pos.push(&e(i) - &e(j));
        }
    }
    SymmetricPair::new(
        g,
        k_pos,
        LatticeSpec::standard(n),
        n,
        PairMeta {
            name: format!("DIII:{n}"),
            family: Some(Family::DIII),
            parameters: vec![n as i64],
            hermitian: true,
            dual_is_spin: true,
        },
    )
}

/// `Sp(p+q)/Sp(p) x Sp(q)`: type C with two symplectic blocks.
pub fn build_cii(p: i64, q: i64) -> Result<SymmetricPair> {
    if p < 1 || q < 1 {
        return Err(Error::domain(format!("CII requires p, q >= 1, got {p},{q}")));
    }
    let (p, q) = (p as usize, q as usize);
    let m = p + q;
    let g = RootSystem::build_classical(ClassicalFamily::C, m)?;
    let e = |i: usize| WeightVector::basis(m, i);
    let mut k_pos = Vec::new();
    let block = |lo: usize, hi: usize, k_pos: &mut Vec<WeightVector>| {
        for i in lo..hi {
            for j in i + 1..hi {
                k_pos.push(&e(i) - &e(j));
                k_pos.push(&e(i) + &e(j));
            }
        }
        for i in lo..hi {
            k_pos.push(e(i).scale(&crate::weights::rat(2)));
        }
    };
    block(0, p, &mut k_pos);
    block(p, m, &mut k_pos);
    SymmetricPair::new(
        g,
        k_pos,
        LatticeSpec::standard(m),
        m,
        PairMeta {
            name: format!("CII:{p},{q}"),
            family: Some(Family::CII),
            parameters: vec![p as i64, q as i64],
            hermitian: false,
            dual_is_spin: true,
        },
    )
}

/// Hermitian pair from a Cartan matrix: the compact roots are those whose
/// coefficient at the marked simple root vanishes. The weight lattice is
/// spanned by the fundamental weights of the realized system.
pub fn build_hermitian_from_cartan(
    name: &str,
    cartan: &[Vec<i64>],
    noncompact_node: usize,
    hermitian: bool,
    dual_is_spin: bool,
) -> Result<SymmetricPair> {
    let g = RootSystem::build_from_cartan(cartan)?;
    let n = g.rank();
    if noncompact_node == 0 || noncompact_node > n {
        return Err(Error::domain(format!(
            "noncompact node {noncompact_node} out of range 1..={n}"
        )));
    }
    let node = noncompact_node - 1;
    let mut k_pos = Vec::new();
    for beta in g.positive() {
        let coeffs = g
            .coefficients_on_simples(beta)
            .ok_or_else(|| Error::internal(format!("root {beta} outside simple span")))?;
        if coeffs[node].is_integer() && coeffs[node].numer().bits() == 0 {
            k_pos.push(beta.clone());
        }
    }
    let generators = fundamental_weights(&g)?;
    let lattice = LatticeSpec::new(generators, false)?;
    SymmetricPair::new(
        g,
        k_pos,
        lattice,
        n,
        PairMeta {
            name: name.to_string(),
            family: Some(Family::Exceptional),
            parameters: vec![noncompact_node as i64],
            hermitian,
            dual_is_spin,
        },
    )
}

/// Fundamental weights of a realized system, inside the span of the simple
/// roots: solve `A c = e_i` against the Cartan matrix and expand on the
/// simples.
fn fundamental_weights(g: &RootSystem) -> Result<Vec<WeightVector>> {
    let n = g.rank();
    let a = g.cartan_matrix();
    let columns: Vec<WeightVector> = (0..n)
        .map(|j| WeightVector::from_ints(&(0..n).map(|i| a[i][j]).collect::<Vec<_>>()))
        .collect();
    (0..n)
        .map(|i| {
            let target = WeightVector::basis(n, i);
            let coeffs = crate::linalg::solve_columns(&columns, &target)
                .ok_or_else(|| Error::internal("Cartan matrix is singular"))?;
            let mut w = WeightVector::zero(g.ambient_rank());
            for (c, alpha) in coeffs.iter().zip(g.simple()) {
                w = &w + &alpha.scale(c);
            }
            Ok(w)
        })
        .collect()
}

/// A named catalog entry: an equal-rank pair or an unequal-rank stub.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    pub parameters: Vec<i64>,
    pub rank_g: usize,
    pub rank_k: usize,
    pub dim_m: usize,
    pub kind: EntryKind,
}

#[derive(Debug, Clone)]
pub enum EntryKind {
    Pair(Box<SymmetricPair>),
    Stub(UnequalRankStub),
}

impl CatalogEntry {
    pub fn to_factor(&self) -> SpaceFactor {
        match &self.kind {
            EntryKind::Pair(p) => SpaceFactor::Pair(p.clone()),
            EntryKind::Stub(s) => SpaceFactor::Stub(s.clone()),
        }
    }

    /// Human-readable quotient, e.g. `U(3)/U(1)xU(2)`.
    pub fn describe(&self) -> String {
        let p = self.parameters.as_slice();
        match self.family {
            Family::AIII => format!("U({})/U({})xU({})", p[0] + p[1], p[0], p[1]),
            Family::CI => format!("Sp({})/U({})", p[0], p[0]),
            Family::BDI => format!("SO({})/SO({})xSO({})", p[0] + p[1], p[0], p[1]),
            Family::DIII => format!("SO({})/U({})", 2 * p[0], p[0]),
            Family::CII => format!("Sp({})/Sp({})xSp({})", p[0] + p[1], p[0], p[1]),
            Family::AI => format!("SL({},R)/SO({})", p[0], p[0]),
            Family::AII => format!("SU*({})/Sp({})", 2 * p[0], p[0]),
            Family::Exceptional => self.name.clone(),
            Family::Custom => self.name.clone(),
        }
    }
}

/// An ordered, validated collection of entries.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn lookup(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// The committed default catalog.
    pub fn default_catalog() -> &'static Catalog {
        static DEFAULT: OnceLock<Catalog> = OnceLock::new();
        DEFAULT.get_or_init(|| {
            Catalog::load(include_str!("../data/default.catalog"))
                .expect("default catalog is valid")
        })
    }

    /// Parses and validates catalog text.
    pub fn load(source: &str) -> Result<Catalog> {
        let mut entries = Vec::new();
        for block in split_blocks(source) {
            entries.push(load_entry(block)?);
        }
        Ok(Catalog { entries })
    }
}

struct RawBlock {
    first_line: usize,
    fields: HashMap<String, (usize, String)>,
}

fn split_blocks(source: &str) -> Vec<RawBlock> {
    let mut blocks = Vec::new();
    let mut current: Option<RawBlock> = None;
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            if let Some(b) = current.take() {
                blocks.push(b);
            }
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        let block = current.get_or_insert_with(|| RawBlock {
            first_line: line_no,
            fields: HashMap::new(),
        });
        if let Some((key, value)) = trimmed.split_once('=') {
            block
                .fields
                .insert(key.trim().to_string(), (line_no, value.trim().to_string()));
        } else {
            block.fields.insert(trimmed.to_string(), (line_no, String::new()));
        }
    }
    if let Some(b) = current.take() {
        blocks.push(b);
    }
    blocks
}

const KNOWN_KEYS: &[&str] = &[
    "name",
    "family",
    "params",
    "construction",
    "hermitian",
    "dual_spin",
    "rho_k",
    "dim",
    "rank_g",
    "rank_k",
    "cartan",
    "noncompact_node",
];

fn load_entry(block: RawBlock) -> Result<CatalogEntry> {
    for (key, (line, _)) in &block.fields {
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Error::CatalogParse {
                line: *line,
                message: format!("unknown key '{key}'"),
            });
        }
    }
    let get = |key: &str| -> Result<&str> {
        block
            .fields
            .get(key)
            .map(|(_, v)| v.as_str())
            .ok_or(Error::CatalogParse {
                line: block.first_line,
                message: format!("missing key '{key}'"),
            })
    };
    let parse_err = |key: &str, msg: String| -> Error {
        let line = block.fields.get(key).map(|(l, _)| *l).unwrap_or(block.first_line);
        Error::CatalogParse { line, message: msg }
    };

    let name = get("name")?.to_string();
    let family: Family = get("family")?
        .parse()
        .map_err(|e| parse_err("family", format!("{e}")))?;
    let parameters: Vec<i64> = match block.fields.get("params") {
        None => vec![],
        Some((line, v)) if v.is_empty() => {
            let _ = line;
            vec![]
        }
        Some((line, v)) => v
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| Error::CatalogParse {
                    line: *line,
                    message: format!("bad integer '{t}': {e}"),
                })
            })
            .collect::<Result<_>>()?,
    };
    let hermitian: bool = get("hermitian")?
        .parse()
        .map_err(|e| parse_err("hermitian", format!("{e}")))?;
    let dual_spin: bool = get("dual_spin")?
        .parse()
        .map_err(|e| parse_err("dual_spin", format!("{e}")))?;
    let declared_dim: Option<usize> = match block.fields.get("dim") {
        None => None,
        Some((line, v)) => Some(v.parse().map_err(|e| Error::CatalogParse {
            line: *line,
            message: format!("bad dim '{v}': {e}"),
        })?),
    };
    let declared_rho_k: Option<WeightVector> = match block.fields.get("rho_k") {
        None => None,
        Some((line, v)) => {
            let coords = v
                .split(',')
                .map(|t| {
                    parse_rational(t).map_err(|e| Error::CatalogParse {
                        line: *line,
                        message: format!("{e}"),
                    })
                })
                .collect::<Result<Vec<Rational>>>()?;
            Some(WeightVector::new(coords))
        }
    };

    let invalid = |message: String| Error::CatalogValidation {
        name: name.clone(),
        message,
    };

    match get("construction")? {
        "stub" => {
            let rank_g: usize = get("rank_g")?
                .parse()
                .map_err(|e| parse_err("rank_g", format!("{e}")))?;
            let rank_k: usize = get("rank_k")?
                .parse()
                .map_err(|e| parse_err("rank_k", format!("{e}")))?;
            let dim_m = declared_dim.ok_or_else(|| invalid("stub requires 'dim'".into()))?;
            if rank_g <= rank_k {
                return Err(invalid(format!(
                    "stub must have rank_g > rank_k, got {rank_g} <= {rank_k}"
                )));
            }
            Ok(CatalogEntry {
                name: name.clone(),
                family,
                parameters,
                rank_g,
                rank_k,
                dim_m,
                kind: EntryKind::Stub(UnequalRankStub {
                    name,
                    rank_g,
                    rank_k,
                    dim_m,
                    hermitian,
                    dual_is_spin: dual_spin,
                }),
            })
        }
        "classical" => {
            let pair = match (family, parameters.as_slice()) {
                (Family::AIII, [p, q]) => build_aiii(*p, *q)?,
                (Family::CI, [n]) => build_ci(*n)?,
                (Family::BDI, [2, n]) => build_bdi_two(*n)?,
                (Family::DIII, [n]) => build_diii(*n)?,
                (Family::CII, [p, q]) => build_cii(*p, *q)?,
                _ => {
                    return Err(invalid(format!(
                        "no classical construction for family {family} with params {parameters:?}"
                    )))
                }
            };
            finish_pair_entry(pair, name, family, parameters, hermitian, dual_spin, declared_dim, declared_rho_k)
        }
        "cartan" => {
            let (cartan_line, cartan_text) = block
                .fields
                .get("cartan")
                .ok_or_else(|| invalid("cartan construction requires 'cartan'".into()))?;
            let matrix: Vec<Vec<i64>> = cartan_text
                .split(';')
                .map(|row| {
                    row.split_whitespace()
                        .map(|t| {
                            t.parse::<i64>().map_err(|e| Error::CatalogParse {
                                line: *cartan_line,
                                message: format!("bad Cartan entry '{t}': {e}"),
                            })
                        })
                        .collect::<Result<Vec<i64>>>()
                })
                .collect::<Result<_>>()?;
            let node: usize = get("noncompact_node")?
                .parse()
                .map_err(|e| parse_err("noncompact_node", format!("{e}")))?;
            let pair = build_hermitian_from_cartan(&name, &matrix, node, hermitian, dual_spin)?;
            finish_pair_entry(pair, name, family, parameters, hermitian, dual_spin, declared_dim, declared_rho_k)
        }
        other => Err(parse_err(
            "construction",
            format!("unknown construction '{other}'"),
        )),
    }
}

#[allow(clippy::too_many_arguments)]
fn finish_pair_entry(
    pair: SymmetricPair,
    name: String,
    family: Family,
    parameters: Vec<i64>,
    hermitian: bool,
    dual_spin: bool,
    declared_dim: Option<usize>,
    declared_rho_k: Option<WeightVector>,
) -> Result<CatalogEntry> {
    let invalid = |message: String| Error::CatalogValidation {
        name: name.clone(),
        message,
    };
    if let Some(d) = declared_dim {
        if d != pair.dim_m() {
            return Err(invalid(format!(
                "declared dim {d} but construction yields {}",
                pair.dim_m()
            )));
        }
    }
    if let Some(rho) = &declared_rho_k {
        if rho != pair.rho_k() {
            return Err(invalid(format!(
                "declared rho_k {rho} but recomputation yields {}",
                pair.rho_k()
            )));
        }
    }
    if hermitian != pair.computed_hermitian() {
        return Err(invalid(format!(
            "declared hermitian = {hermitian} disagrees with the adapted-system test"
        )));
    }
    // Spin criterion for the simply connected dual: rho_g - rho_k must be
    // algebraically integral for the full root system.
    let spin_criterion = is_algebraically_integral(&pair.rho_p(), pair.g().positive());
    if dual_spin != spin_criterion {
        return Err(invalid(format!(
            "declared dual_spin = {dual_spin} disagrees with integrality of rho_g - rho_k"
        )));
    }
    if pair.meta().hermitian != hermitian || pair.meta().dual_is_spin != dual_spin {
        return Err(invalid(
            "constructed metadata disagrees with declared flags".into(),
        ));
    }
    Ok(CatalogEntry {
        name,
        family,
        parameters,
        rank_g: pair.rank_g(),
        rank_k: pair.rank_k(),
        dim_m: pair.dim_m(),
        kind: EntryKind::Pair(Box::new(pair)),
    })
}

/// Parses an analysis expression: an entry name, or names joined by `x`.
pub fn parse_space_expr(catalog: &Catalog, expr: &str) -> Result<SpaceDescriptor> {
    let tokens: Vec<&str> = expr.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::Descriptor("empty expression".into()));
    }
    let mut factors = Vec::new();
    let mut expect_name = true;
    for token in tokens {
        if expect_name {
            let entry = catalog
                .lookup(token)
                .ok_or_else(|| Error::UnknownEntry(token.to_string()))?;
            factors.push(entry.to_factor());
        } else if !token.eq_ignore_ascii_case("x") {
            return Err(Error::Descriptor(format!(
                "expected 'x' between factors, found '{token}'"
            )));
        }
        expect_name = !expect_name;
    }
    if expect_name {
        return Err(Error::Descriptor("trailing 'x' in expression".into()));
    }
    Ok(SpaceDescriptor { factors })
}
