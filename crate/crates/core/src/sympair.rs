//! Equal-rank symmetric pair analysis.
//!
//! A pair consists of the root system of `G` together with a choice of
//! compact positive roots `Delta_k^+ inside Delta_g^+`; the noncompact
//! positive roots are the complement. On top of that this module provides
//! the chamber-embedding set `W'`, the spinor K-type decomposition, discrete
//! series parameters (Harish-Chandra and Blattner), the K-type cone test,
//! and the exact evaluation of the three inequalities that drive the
//! uniqueness argument for the kernel parameter.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{
    mat_mul_rows, orbit_under, reflection_rows, weyl_dim, RootSystem, WeylElement,
    DEFAULT_ORBIT_GUARD,
};
use crate::weights::{
    is_regular, Integer, LatticeSpec, Rational, WeightVector,
};

/// Cartan classification labels used by the catalog, plus markers for
/// exceptional and custom entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    AIII,
    CI,
    BDI,
    DIII,
    CII,
    AI,
    AII,
    Exceptional,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::AIII => "AIII",
            Family::CI => "CI",
            Family::BDI => "BDI",
            Family::DIII => "DIII",
            Family::CII => "CII",
            Family::AI => "AI",
            Family::AII => "AII",
            Family::Exceptional => "exceptional",
            Family::Custom => "custom",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "AIII" => Ok(Family::AIII),
            "CI" => Ok(Family::CI),
            "BDI" => Ok(Family::BDI),
            "DIII" => Ok(Family::DIII),
            "CII" => Ok(Family::CII),
            "AI" => Ok(Family::AI),
            "AII" => Ok(Family::AII),
            "exceptional" => Ok(Family::Exceptional),
            "custom" => Ok(Family::Custom),
            other => Err(Error::domain(format!("unknown family '{other}'"))),
        }
    }
}

/// Descriptive metadata carried by a pair; classification inputs, not
/// derived quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct PairMeta {
    pub name: String,
    pub family: Option<Family>,
    pub parameters: Vec<i64>,
    pub hermitian: bool,
    pub dual_is_spin: bool,
}

/// An equal-rank symmetric pair `(Delta_g, Delta_k)` with noncompact roots
/// `Delta_p = Delta_g \ Delta_k`.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    g: RootSystem,
    k_positive: Vec<WeightVector>,
    k_simple: Vec<WeightVector>,
    p_positive: Vec<WeightVector>,
    rho_k: WeightVector,
    lattice: LatticeSpec,
    rank: usize,
    meta: PairMeta,
}

impl SymmetricPair {
    /// Builds and validates a pair.
    ///
    /// Checks that `k_positive` is a subset of the positive roots, that
    /// `Delta_k` is a sub-root-system (closed under its own reflections) and
    /// that the decomposition respects the symmetric grading:
    /// root sums landing in the root system satisfy `k+k -> k`, `k+p -> p`,
    /// `p+p -> k`. The half-shift flag of the lattice is recomputed as
    /// "`rho_g - rho_k` lies outside the lattice".
    pub fn new(
        g: RootSystem,
        k_positive: Vec<WeightVector>,
        mut lattice: LatticeSpec,
        rank: usize,
        meta: PairMeta,
    ) -> Result<Self> {
        let pos_set: HashSet<&WeightVector> = g.positive().iter().collect();
        for alpha in &k_positive {
            if !pos_set.contains(alpha) {
                return Err(Error::domain(format!(
                    "compact root {alpha} is not a positive root of g"
                )));
            }
        }
        let k_set: HashSet<WeightVector> = k_positive
            .iter()
            .flat_map(|a| [a.clone(), -a])
            .collect();
        for alpha in &k_set {
            for beta in &k_set {
                if !k_set.contains(&beta.reflect_in(alpha)) {
                    return Err(Error::domain(format!(
                        "compact roots not closed under reflection in {alpha}"
                    )));
                }
            }
        }
        let p_positive: Vec<WeightVector> = g
            .positive()
            .iter()
            .filter(|r| !k_set.contains(*r))
            .cloned()
            .collect();
        // Z/2 grading: the parity (compact = 0, noncompact = 1) must be
        // additive on root sums. Pairs are covered up to a global sign by
        // letting one factor range over the positive roots only.
        for a in g.roots() {
            for b in g.positive() {
                let sum = a + b;
                if g.contains_root(&sum) {
                    let parity = |r: &WeightVector| usize::from(!k_set.contains(r));
                    if parity(&sum) != (parity(a) + parity(b)) % 2 {
                        return Err(Error::domain(format!(
                            "compact/noncompact grading violated at {a} + {b}"
                        )));
                    }
                }
            }
        }
        let mut sum = WeightVector::zero(g.ambient_rank());
        for r in &k_positive {
            sum = &sum + r;
        }
        let rho_k = sum.scale(&crate::weights::ratio(1, 2));
        let k_simple = simple_subsystem_roots(&k_positive);
        let delta = g.rho() - &rho_k;
        lattice.set_allow_half_shift(!lattice.contains(&delta));
        Ok(SymmetricPair {
            g,
            k_positive,
            k_simple,
            p_positive,
            rho_k,
            lattice,
            rank,
            meta,
        })
    }

    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    pub fn k_positive(&self) -> &[WeightVector] {
        &self.k_positive
    }

    pub fn k_simple(&self) -> &[WeightVector] {
        &self.k_simple
    }

    pub fn p_positive(&self) -> &[WeightVector] {
        &self.p_positive
    }

    pub fn rho_g(&self) -> &WeightVector {
        self.g.rho()
    }

    pub fn rho_k(&self) -> &WeightVector {
        &self.rho_k
    }

    /// `rho_g - rho_k`, the half sum of the positive noncompact roots.
    pub fn rho_p(&self) -> WeightVector {
        self.g.rho() - &self.rho_k
    }

    pub fn lattice(&self) -> &LatticeSpec {
        &self.lattice
    }

    pub fn meta(&self) -> &PairMeta {
        &self.meta
    }

    pub fn rank_g(&self) -> usize {
        self.rank
    }

    pub fn rank_k(&self) -> usize {
        self.rank
    }

    /// Real dimension of the symmetric space, `2 |Delta_p^+|`.
    pub fn dim_m(&self) -> usize {
        2 * self.p_positive.len()
    }

    /// Dominance with respect to the compact positive system.
    pub fn is_k_dominant(&self, v: &WeightVector, strict: bool) -> bool {
        self.k_simple.iter().all(|alpha| {
            let p = v.dot(alpha);
            if strict {
                p.is_positive()
            } else {
                !p.is_negative()
            }
        })
    }

    /// Moves `v` into the closed compact chamber by simple reflections.
    pub fn k_dominantize(&self, v: &WeightVector) -> WeightVector {
        let mut v = v.clone();
        let bound = self.k_positive.len() + 1;
        for _ in 0..bound {
            match self
                .k_simple
                .iter()
                .position(|alpha| v.dot(alpha).is_negative())
            {
                Some(i) => v = v.reflect_in(&self.k_simple[i]),
                None => return v,
            }
        }
        unreachable!("compact dominantization did not terminate");
    }

    /// Order of the compact Weyl group, via the orbit of `rho_k`.
    pub fn k_weyl_order(&self) -> Result<usize> {
        if self.k_simple.is_empty() {
            return Ok(1);
        }
        Ok(orbit_under(&self.rho_k, &self.k_simple, DEFAULT_ORBIT_GUARD)?.len())
    }

    /// Membership of `v` in the weight lattice, enlarged by the half shift
    /// `rho_g - rho_k` when the double-cover flag is set.
    pub fn lattice_admits(&self, v: &WeightVector) -> bool {
        if self.lattice.contains(v) {
            return true;
        }
        if self.lattice.allow_half_shift() {
            let shifted = v - &self.rho_p();
            return self.lattice.contains(&shifted);
        }
        false
    }

    /// Hermitian detection for the chosen (adapted) positive system:
    /// `rho_p` orthogonal to every compact simple root and strictly positive
    /// on every noncompact positive root.
    pub fn computed_hermitian(&self) -> bool {
        if self.p_positive.is_empty() {
            return false;
        }
        let rho_p = self.rho_p();
        self.k_simple.iter().all(|a| rho_p.dot(a).is_zero())
            && self.p_positive.iter().all(|b| rho_p.dot(b).is_positive())
    }

    /// The set `W' = { w in W_g : w(P_g) subset P_k }`, enumerated as a BFS
    /// over the chambers inside the compact cone. Every prefix of a reduced
    /// word for an element of `W'` stays in `W'`, so the walk stays inside
    /// the set and the recorded words are reduced.
    pub fn enumerate_w_prime(&self) -> Result<Vec<WeylElement>> {
        let g = &self.g;
        let ambient = g.ambient_rank();
        let simple_mats: Vec<Vec<WeightVector>> = g
            .simple()
            .iter()
            .map(|a| reflection_rows(a, ambient))
            .collect();
        let mut seen: HashSet<WeightVector> = HashSet::new();
        let mut out: Vec<WeylElement> = Vec::new();
        let mut queue: VecDeque<(WeylElement, WeightVector)> = VecDeque::new();
        let id = g.identity_element();
        seen.insert(g.rho().clone());
        queue.push_back((id, g.rho().clone()));
        while let Some((w, mu)) = queue.pop_front() {
            out.push(w.clone());
            for (i, s) in simple_mats.iter().enumerate() {
                // (w s_i) rho = mu - w(alpha_i), since <rho, alpha_i^vee> = 1
                let w_alpha = w.apply(&g.simple()[i]);
                let mu_next = &mu - &w_alpha;
                if seen.contains(&mu_next) {
                    continue;
                }
                if self.is_k_dominant(&mu_next, true) {
                    if seen.len() >= DEFAULT_ORBIT_GUARD {
                        return Err(Error::OrbitGuard(DEFAULT_ORBIT_GUARD));
                    }
                    seen.insert(mu_next.clone());
                    let mut word = w.word().to_vec();
                    word.push(i);
                    let next = WeylElement::from_parts(word, mat_mul_rows(w.rows_ref(), s));
                    queue.push_back((next, mu_next));
                }
            }
        }
        out.sort_by_key(|w| (w.length(), w.word().to_vec()));
        Ok(out)
    }

    /// Parthasarathy decomposition of the spinor representation: one
    /// irreducible K-type with highest weight `w rho_g - rho_k` per `w` in
    /// `W'`, graded by `sign(w)`.
    pub fn spinor_decomposition(&self) -> Result<Vec<SpinorKType>> {
        let w_prime = self.enumerate_w_prime()?;
        w_prime
            .into_iter()
            .map(|w| {
                let hw = &w.apply(self.g.rho()) - &self.rho_k;
                if !self.is_k_dominant(&hw, false) {
                    return Err(Error::internal(format!(
                        "spinor weight {hw} is not dominant for the compact system"
                    )));
                }
                let dim = weyl_dim(&hw, &self.k_positive, &self.rho_k)?;
                let sign = w.sign();
                Ok(SpinorKType {
                    w,
                    highest_weight: hw,
                    sign,
                    dim,
                })
            })
            .collect()
    }

    /// The unique `w` in `W'` with `lambda in w(P_g)`, for `lambda` g-regular
    /// and compactly dominant.
    pub fn witness(&self, lambda: &WeightVector) -> Result<WeylElement> {
        if !is_regular(lambda, self.g.roots()) {
            return Err(Error::domain(format!("{lambda} is g-singular")));
        }
        if !self.is_k_dominant(lambda, false) {
            return Err(Error::domain(format!(
                "{lambda} is not dominant for the compact chamber"
            )));
        }
        let (_, w) = self.g.dominantize(lambda);
        debug_assert!(self.is_k_dominant(&w.apply(self.g.rho()), true));
        Ok(w)
    }

    /// Decides whether `lambda` is a Harish-Chandra parameter for this pair;
    /// returns the chamber witness when it is.
    pub fn is_harish_chandra_param(&self, lambda: &WeightVector) -> Option<WeylElement> {
        self.discrete_series(lambda).ok().map(|p| p.witness)
    }

    /// Validates `lambda` as a discrete-series parameter: g-regular,
    /// compactly dominant, and `lambda - w rho_g` in the (possibly
    /// half-shift enlarged) weight lattice.
    pub fn discrete_series(&self, lambda: &WeightVector) -> Result<DiscreteSeriesParam> {
        let w = self.witness(lambda)?;
        let diff = lambda - &w.apply(self.g.rho());
        if !self.lattice_admits(&diff) {
            return Err(Error::domain(format!(
                "{lambda} - w(rho_g) is not in the weight lattice"
            )));
        }
        let blattner = &(&(lambda + &w.apply(self.g.rho())) - &self.rho_k) - &self.rho_k;
        debug_assert!(self.is_k_dominant(&blattner, false));
        Ok(DiscreteSeriesParam {
            lambda: lambda.clone(),
            witness: w,
            blattner,
        })
    }

    /// Minimal K-type `kappa = lambda + w rho_g - 2 rho_k` of the discrete
    /// series with the given parameter.
    pub fn blattner(&self, param: &DiscreteSeriesParam) -> WeightVector {
        param.blattner.clone()
    }

    /// Decides whether `kappa_prime` lies in the K-type cone of the discrete
    /// series `pi_lambda`: is `kappa_prime - kappa` a nonnegative-integer
    /// combination of the roots pairing strictly positively with `w rho_g`?
    ///
    /// Exact bounded search; every generator has positive pairing with
    /// `w rho_g`, so coefficients are bounded by the pairing budget.
    pub fn ktype_cone_member(
        &self,
        kappa_prime: &WeightVector,
        param: &DiscreteSeriesParam,
    ) -> bool {
        let w_rho = param.witness.apply(self.g.rho());
        let target = kappa_prime - &param.blattner;
        if target.is_zero() {
            return true;
        }
        let mut gens: Vec<(WeightVector, Rational)> = self
            .g
            .roots()
            .iter()
            .filter_map(|alpha| {
                let p = alpha.dot(&w_rho);
                if p.is_positive() {
                    Some((alpha.clone(), p))
                } else {
                    None
                }
            })
            .collect();
        gens.sort_by(|a, b| b.1.cmp(&a.1));
        let budget = target.dot(&w_rho);
        if budget.is_negative() || budget.is_zero() {
            return false;
        }
        search_cone(&target, budget, &gens)
    }

    /// Exactly evaluates the chamber-maximality, cone-nonnegativity, and
    /// norm-minimality inequalities for a regular compactly-dominant
    /// `lambda`, an arbitrary `w0`, and the chamber witness `w` of `lambda`.
    ///
    /// Norm comparisons are performed on squared norms so everything stays
    /// rational. The cone inequality is reported through its mechanism (sign
    /// agreement of `lambda` and `w rho_g` on all roots), with equality
    /// recorded as vanishing of the residual
    /// `w0 rho_g + rho_k - lambda - w rho_g`.
    pub fn proof_inequalities(
        &self,
        lambda: &WeightVector,
        w0: &WeylElement,
        w: &WeylElement,
    ) -> Result<ProofInequalityReport> {
        if !is_regular(lambda, self.g.roots()) {
            return Err(Error::domain(format!("{lambda} is g-singular")));
        }
        if !self.is_k_dominant(lambda, false) {
            return Err(Error::domain(format!(
                "{lambda} is not dominant for the compact chamber"
            )));
        }
        if !self.g.is_dominant(&w.apply_inverse(lambda), false) {
            return Err(Error::domain("w is not the chamber witness of lambda"));
        }
        let rho_g = self.g.rho();
        let w_rho = w.apply(rho_g);
        let w0_rho = w0.apply(rho_g);

        let a = lambda.dot(&w0_rho);
        let b = lambda.dot(&w_rho);
        let chamber_maximality = IneqStatus {
            holds: a <= b,
            equality: a == b,
        };

        let sign_agreement = self.g.roots().iter().all(|alpha| {
            !alpha.dot(&w_rho).is_positive() || alpha.dot(lambda).is_positive()
        });
        let residual = &(&(&w0_rho + &self.rho_k) - lambda) - &w_rho;
        let cone_nonnegativity = IneqStatus {
            holds: sign_agreement,
            equality: residual.is_zero(),
        };

        let s = self.rho_k.dot(lambda);
        let lambda_sq = lambda.norm_sq();
        let rho_k_sq = self.rho_k.norm_sq();
        let (first_holds, first_eq) = if s.is_negative() {
            (true, false)
        } else {
            let lhs = &s * &s;
            let rhs = &lambda_sq * &rho_k_sq;
            (lhs <= rhs, lhs == rhs)
        };
        let second_holds = rho_k_sq <= lambda_sq;
        let second_eq = rho_k_sq == lambda_sq;
        let norm_minimality = IneqStatus {
            holds: first_holds && second_holds,
            equality: first_eq && second_eq,
        };

        Ok(ProofInequalityReport {
            chamber_maximality,
            cone_nonnegativity,
            norm_minimality,
        })
    }

    /// Block-diagonal product pair on concatenated ambient coordinates.
    pub fn product(factors: &[SymmetricPair]) -> Result<SymmetricPair> {
        if factors.is_empty() {
            return Err(Error::Descriptor("empty product".into()));
        }
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let ambient: usize = factors.iter().map(|f| f.g.ambient_rank()).sum();
        let mut positive = Vec::new();
        let mut simple = Vec::new();
        let mut k_positive = Vec::new();
        let mut generators = Vec::new();
        let mut offset = 0;
        for f in factors {
            let n = f.g.ambient_rank();
            positive.extend(f.g.positive().iter().map(|r| r.embed(ambient, offset)));
            simple.extend(f.g.simple().iter().map(|r| r.embed(ambient, offset)));
            k_positive.extend(f.k_positive.iter().map(|r| r.embed(ambient, offset)));
            generators.extend(f.lattice.embed(ambient, offset));
            offset += n;
        }
        let g = RootSystem::from_parts(ambient, positive, simple)?;
        let lattice = LatticeSpec::new(generators, false)?;
        let name = factors
            .iter()
            .map(|f| f.meta.name.clone())
            .collect::<Vec<_>>()
            .join(" x ");
        let meta = PairMeta {
            name,
            family: None,
            parameters: vec![],
            hermitian: factors.iter().all(|f| f.meta.hermitian),
            dual_is_spin: factors.iter().all(|f| f.meta.dual_is_spin),
        };
        let rank = factors.iter().map(|f| f.rank).sum();
        SymmetricPair::new(g, k_positive, lattice, rank, meta)
    }
}

/// Depth-first search for a nonnegative-integer cone decomposition.
fn search_cone(target: &WeightVector, budget: Rational, gens: &[(WeightVector, Rational)]) -> bool {
    fn rec(
        target: &WeightVector,
        budget: &Rational,
        gens: &[(WeightVector, Rational)],
        idx: usize,
    ) -> bool {
        if target.is_zero() {
            return true;
        }
        if idx == gens.len() || budget.is_negative() || budget.is_zero() {
            return false;
        }
        let (alpha, pairing) = &gens[idx];
        let max = (budget / pairing).floor().to_integer();
        let max: u64 = num_traits::ToPrimitive::to_u64(&max).unwrap_or(0);
        let mut current = target.clone();
        let mut remaining = budget.clone();
        for n in 0..=max {
            if n > 0 {
                current = &current - alpha;
                remaining -= pairing;
            }
            if rec(&current, &remaining, gens, idx + 1) {
                return true;
            }
        }
        false
    }
    rec(target, &budget, gens, 0)
}

/// Extracts the simple roots of a positive subsystem: the elements that are
/// not sums of two members.
fn simple_subsystem_roots(positive: &[WeightVector]) -> Vec<WeightVector> {
    let set: HashSet<&WeightVector> = positive.iter().collect();
    positive
        .iter()
        .filter(|alpha| {
            !positive.iter().any(|beta| {
                if beta == *alpha {
                    return false;
                }
                let diff = *alpha - beta;
                set.contains(&diff)
            })
        })
        .cloned()
        .collect()
}

/// One irreducible summand of the spinor representation.
#[derive(Debug, Clone)]
pub struct SpinorKType {
    pub w: WeylElement,
    pub highest_weight: WeightVector,
    pub sign: i64,
    pub dim: Integer,
}

/// A validated discrete-series parameter with its chamber witness and
/// minimal K-type.
#[derive(Debug, Clone)]
pub struct DiscreteSeriesParam {
    pub lambda: WeightVector,
    pub witness: WeylElement,
    pub blattner: WeightVector,
}

/// Exact status of one proof inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IneqStatus {
    pub holds: bool,
    pub equality: bool,
}

/// The three inequalities of the kernel-uniqueness argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofInequalityReport {
    pub chamber_maximality: IneqStatus,
    pub cone_nonnegativity: IneqStatus,
    pub norm_minimality: IneqStatus,
}

impl ProofInequalityReport {
    pub fn all_hold(&self) -> bool {
        self.chamber_maximality.holds
            && self.cone_nonnegativity.holds
            && self.norm_minimality.holds
    }

    pub fn all_equalities(&self) -> bool {
        self.chamber_maximality.equality
            && self.cone_nonnegativity.equality
            && self.norm_minimality.equality
    }
}
