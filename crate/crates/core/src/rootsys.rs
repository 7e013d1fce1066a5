//! Root systems: classical closed forms, Cartan-matrix generation, positive
//! systems, dominance, Weyl orbits, Weyl element bookkeeping, and the Weyl
//! dimension formula.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::Signed;

use crate::cartan;
use crate::error::{Error, Result};
use crate::linalg;
use crate::weights::{rat, ratio, Integer, Rational, WeightVector};

/// Default guard on orbit enumeration size.
pub const DEFAULT_ORBIT_GUARD: usize = 10_000_000;

/// The four classical families in their standard ambient realizations.
///
/// `A` is realized on `rank + 1` coordinates with trace-zero roots; `B`, `C`
/// and `D` on `rank` coordinates. `D` at rank 2 is accepted although it is
/// reducible (isomorphic to `A1 x A1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalFamily {
    A,
    B,
    C,
    D,
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassicalFamily::A => "A",
            ClassicalFamily::B => "B",
            ClassicalFamily::C => "C",
            ClassicalFamily::D => "D",
        };
        write!(f, "{s}")
    }
}

/// A finite root system with a chosen positive system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ambient: usize,
    roots: Vec<WeightVector>,
    root_set: HashSet<WeightVector>,
    positive: Vec<WeightVector>,
    simple: Vec<WeightVector>,
    rho: WeightVector,
}

impl RootSystem {
    /// Builds a root system from its positive roots and simple roots.
    pub(crate) fn from_parts(
        ambient: usize,
        positive: Vec<WeightVector>,
        simple: Vec<WeightVector>,
    ) -> Result<Self> {
        if positive.is_empty() {
            return Err(Error::internal("empty positive system"));
        }
        for v in positive.iter().chain(simple.iter()) {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    left: ambient,
                    right: v.dim(),
                });
            }
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| -r));
        let root_set: HashSet<WeightVector> = roots.iter().cloned().collect();
        if root_set.len() != roots.len() {
            return Err(Error::internal("positive system meets its negative"));
        }
        let mut sum = WeightVector::zero(ambient);
        for r in &positive {
            sum = &sum + r;
        }
        let rho = sum.scale(&ratio(1, 2));
        Ok(RootSystem {
            ambient,
            roots,
            root_set,
            positive,
            simple,
            rho,
        })
    }

    /// Standard ambient realization of a classical family.
    pub fn build_classical(family: ClassicalFamily, rank: usize) -> Result<Self> {
        let err = || Error::UnsupportedRank {
            family: family.to_string(),
            rank,
        };
        match family {
            ClassicalFamily::A => {
                if rank < 1 {
                    return Err(err());
                }
                let m = rank + 1;
                let mut positive = Vec::new();
                for i in 0..m {
                    for j in i + 1..m {
                        positive.push(&WeightVector::basis(m, i) - &WeightVector::basis(m, j));
                    }
                }
                let simple = (0..rank)
                    .map(|i| &WeightVector::basis(m, i) - &WeightVector::basis(m, i + 1))
                    .collect();
                RootSystem::from_parts(m, positive, simple)
            }
            ClassicalFamily::B | ClassicalFamily::C | ClassicalFamily::D => {
                let n = rank;
                let min = if family == ClassicalFamily::D { 2 } else { 1 };
                if n < min {
                    return Err(err());
                }
                let e = |i: usize| WeightVector::basis(n, i);
                let mut positive = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        positive.push(&e(i) - &e(j));
                    }
                }
                for i in 0..n {
                    for j in i + 1..n {
                        positive.push(&e(i) + &e(j));
                    }
                }
                let mut simple: Vec<WeightVector> =
                    (0..n.saturating_sub(1)).map(|i| &e(i) - &e(i + 1)).collect();
                match family {
                    ClassicalFamily::B => {
                        for i in 0..n {
                            positive.push(e(i));
                        }
                        simple.push(e(n - 1));
                    }
                    ClassicalFamily::C => {
                        for i in 0..n {
                            positive.push(e(i).scale(&rat(2)));
                        }
                        simple.push(e(n - 1).scale(&rat(2)));
                    }
                    ClassicalFamily::D => {
                        simple.push(&e(n - 2) + &e(n - 1));
                    }
                    ClassicalFamily::A => unreachable!(),
                }
                RootSystem::from_parts(n, positive, simple)
            }
        }
    }

    /// Generates a root system from an integer Cartan matrix with the
    /// convention `a[i][j] = 2 <alpha_i, alpha_j> / <alpha_i, alpha_i>`.
    ///
    /// The realization is an exact rational embedding with the standard dot
    /// product, normalized so the short roots of each component have squared
    /// length 2. Non-finite-type matrices are rejected.
    pub fn build_from_cartan(matrix: &[Vec<i64>]) -> Result<Self> {
        cartan::generate(matrix)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn roots(&self) -> &[WeightVector] {
        &self.roots
    }

    pub fn positive(&self) -> &[WeightVector] {
        &self.positive
    }

    pub fn simple(&self) -> &[WeightVector] {
        &self.simple
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> &WeightVector {
        &self.rho
    }

    pub fn contains_root(&self, v: &WeightVector) -> bool {
        self.root_set.contains(v)
    }

    /// Membership of `lambda` in the closed (or open, when `strict`) Weyl
    /// chamber of the chosen positive system.
    pub fn is_dominant(&self, lambda: &WeightVector, strict: bool) -> bool {
        self.simple.iter().all(|alpha| {
            let p = lambda.dot(alpha);
            if strict {
                p.is_positive()
            } else {
                !p.is_negative()
            }
        })
    }

    /// Orbit of `lambda` under the Weyl group, in BFS discovery order.
    pub fn weyl_orbit(&self, lambda: &WeightVector) -> Result<Vec<WeightVector>> {
        self.weyl_orbit_with_guard(lambda, DEFAULT_ORBIT_GUARD)
    }

    pub fn weyl_orbit_with_guard(
        &self,
        lambda: &WeightVector,
        guard: usize,
    ) -> Result<Vec<WeightVector>> {
        orbit_under(lambda, &self.simple, guard)
    }

    /// Order of the Weyl group, via the orbit of the regular weight `rho`.
    pub fn weyl_order(&self) -> Result<usize> {
        Ok(self.weyl_orbit(&self.rho)?.len())
    }

    /// Writes `v` in the basis of simple roots, when it lies in their span.
    pub fn coefficients_on_simples(&self, v: &WeightVector) -> Option<Vec<Rational>> {
        linalg::solve_columns(&self.simple, v)
    }

    /// The Cartan matrix of the realized simple system.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple
            .iter()
            .map(|ai| {
                self.simple
                    .iter()
                    .map(|aj| {
                        let q = (rat(2) * ai.dot(aj)) / ai.norm_sq();
                        debug_assert!(q.is_integer());
                        int_to_i64(&q.to_integer())
                    })
                    .collect()
            })
            .collect()
    }

    /// The identity Weyl element on this ambient space.
    pub fn identity_element(&self) -> WeylElement {
        WeylElement::identity(self.ambient)
    }

    /// `w * s_i` for the `i`-th simple reflection.
    pub fn extend_by_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let s = reflection_rows(&self.simple[i], self.ambient);
        let mut word = w.word.clone();
        word.push(i);
        WeylElement {
            word,
            rows: mat_mul_rows(&w.rows, &s),
        }
    }

    /// Finds `w` with `lambda in w(closure of the dominant chamber)`, i.e.
    /// `w^{-1} lambda` dominant. Returns `(w^{-1} lambda, w)`; the stored word
    /// is reduced.
    pub fn dominantize(&self, lambda: &WeightVector) -> (WeightVector, WeylElement) {
        let mut v = lambda.clone();
        let mut w = self.identity_element();
        let bound = self.positive.len() + 1;
        for _ in 0..bound {
            let neg = self
                .simple
                .iter()
                .position(|alpha| v.dot(alpha).is_negative());
            match neg {
                Some(i) => {
                    v = v.reflect_in(&self.simple[i]);
                    w = self.extend_by_simple(&w, i);
                }
                None => return (v, w),
            }
        }
        unreachable!("dominantization did not terminate");
    }

    /// Test-oriented full validation: closure under all root reflections and
    /// nonnegative-integer expansion of positives on the simple roots.
    pub fn validate_closure(&self) -> Result<()> {
        for alpha in &self.roots {
            for beta in &self.roots {
                let r = beta.reflect_in(alpha);
                if !self.contains_root(&r) {
                    return Err(Error::internal(format!(
                        "roots not closed under reflection: s_{alpha}({beta})"
                    )));
                }
            }
        }
        for beta in &self.positive {
            let coeffs = self
                .coefficients_on_simples(beta)
                .ok_or_else(|| Error::internal(format!("{beta} outside simple span")))?;
            for c in &coeffs {
                if !c.is_integer() || c.is_negative() {
                    return Err(Error::internal(format!(
                        "positive root {beta} is not a nonnegative integer combination"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Closure of `{v}` under reflections in the given roots, BFS order.
pub(crate) fn orbit_under(
    v: &WeightVector,
    reflections: &[WeightVector],
    guard: usize,
) -> Result<Vec<WeightVector>> {
    let mut seen: HashSet<WeightVector> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(x) = queue.pop_front() {
        out.push(x.clone());
        for alpha in reflections {
            if alpha.is_zero() {
                continue;
            }
            let y = x.reflect_in(alpha);
            if !seen.contains(&y) {
                if seen.len() >= guard {
                    return Err(Error::OrbitGuard(guard));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// An element of the Weyl group: an orthogonal matrix action on ambient
/// coordinates together with a word in the simple reflections.
///
/// Words produced by this crate are reduced, so `word.len()` is the Coxeter
/// length; the sign `(-1)^length` equals the determinant of the action for
/// any word, reduced or not.
#[derive(Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    /// Matrix rows; `apply` maps `v` to `rows . v`.
    rows: Vec<WeightVector>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            word: vec![],
            rows: (0..dim).map(|i| WeightVector::basis(dim, i)).collect(),
        }
    }

    pub(crate) fn from_parts(word: Vec<usize>, rows: Vec<WeightVector>) -> Self {
        WeylElement { word, rows }
    }

    pub(crate) fn rows_ref(&self) -> &[WeightVector] {
        &self.rows
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^length`; equals the determinant of the action.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &WeightVector) -> WeightVector {
        WeightVector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    /// Applies the inverse; the action is orthogonal, so this is the
    /// transpose.
    pub fn apply_inverse(&self, v: &WeightVector) -> WeightVector {
        let dim = self.rows.len();
        let coords = (0..dim)
            .map(|c| {
                self.rows
                    .iter()
                    .zip(v.coords())
                    .map(|(row, vr)| row.get(c) * vr)
                    .sum()
            })
            .collect();
        WeightVector::new(coords)
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| *r == WeightVector::basis(self.rows.len(), i))
    }

    /// Exact determinant of the matrix action.
    pub fn det(&self) -> Rational {
        let m: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        linalg::det(&m)
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for WeylElement {}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            let w: Vec<String> = self.word.iter().map(|i| format!("s{i}")).collect();
            write!(f, "{}", w.join("."))
        }
    }
}

/// Matrix rows of the reflection in `alpha`.
pub(crate) fn reflection_rows(alpha: &WeightVector, dim: usize) -> Vec<WeightVector> {
    let norm = alpha.norm_sq();
    (0..dim)
        .map(|r| {
            let mut row = WeightVector::basis(dim, r);
            let c = (rat(2) * alpha.get(r)) / &norm;
            row = &row - &alpha.scale(&c);
            row
        })
        .collect()
}

pub(crate) fn mat_mul_rows(a: &[WeightVector], b: &[WeightVector]) -> Vec<WeightVector> {
    let dim = a.len();
    (0..dim)
        .map(|r| {
            let coords = (0..dim)
                .map(|c| {
                    (0..dim)
                        .map(|k| a[r].get(k) * b[k].get(c))
                        .sum()
                })
                .collect();
            WeightVector::new(coords)
        })
        .collect()
}

/// Dimension of the irreducible representation with highest weight `kappa`,
/// by the Weyl dimension formula over the given positive system.
pub fn weyl_dim(
    kappa: &WeightVector,
    k_positive: &[WeightVector],
    rho_k: &WeightVector,
) -> Result<Integer> {
    for alpha in k_positive {
        if kappa.dot(alpha).is_negative() {
            return Err(Error::domain(format!(
                "weight {kappa} is not dominant for the given positive system"
            )));
        }
    }
    if !crate::weights::is_algebraically_integral(kappa, k_positive) {
        return Err(Error::domain(format!(
            "weight {kappa} is not algebraically integral"
        )));
    }
    let shifted = kappa + rho_k;
    let mut dim = Rational::from_integer(1.into());
    for alpha in k_positive {
        dim *= shifted.dot(alpha) / rho_k.dot(alpha);
    }
    if !dim.is_integer() || !dim.is_positive() {
        return Err(Error::internal(format!(
            "Weyl dimension formula produced {dim} for {kappa}"
        )));
    }
    Ok(dim.to_integer())
}

fn int_to_i64(n: &Integer) -> i64 {
    use num_traits::ToPrimitive;
    n.to_i64().expect("Cartan entry fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::ratio;

    fn wv(coords: &[i64]) -> WeightVector {
        WeightVector::from_ints(coords)
    }

    #[test]
    fn classical_c2() {
        let rs = RootSystem::build_classical(ClassicalFamily::C, 2).unwrap();
        let expected: HashSet<WeightVector> = [
            wv(&[1, -1]),
            wv(&[1, 1]),
            wv(&[2, 0]),
            wv(&[0, 2]),
        ]
        .into_iter()
        .collect();
        let got: HashSet<WeightVector> = rs.positive().iter().cloned().collect();
        assert_eq!(got, expected);
        assert_eq!(rs.rho(), &wv(&[2, 1]));
        rs.validate_closure().unwrap();
    }

    #[test]
    fn classical_a2_on_three_coordinates() {
        let rs = RootSystem::build_classical(ClassicalFamily::A, 2).unwrap();
        assert_eq!(rs.positive().len(), 3);
        assert_eq!(rs.rho(), &wv(&[1, 0, -1]));
        rs.validate_closure().unwrap();
    }

    #[test]
    fn classical_c1() {
        let rs = RootSystem::build_classical(ClassicalFamily::C, 1).unwrap();
        assert_eq!(rs.positive(), &[wv(&[2])]);
        assert_eq!(rs.rho(), &wv(&[1]));
    }

    #[test]
    fn positive_counts() {
        for n in 1..=5 {
            let a = RootSystem::build_classical(ClassicalFamily::A, n).unwrap();
            assert_eq!(a.positive().len(), n * (n + 1) / 2);
            let b = RootSystem::build_classical(ClassicalFamily::B, n).unwrap();
            assert_eq!(b.positive().len(), n * n);
            let c = RootSystem::build_classical(ClassicalFamily::C, n).unwrap();
            assert_eq!(c.positive().len(), n * n);
            if n >= 2 {
                let d = RootSystem::build_classical(ClassicalFamily::D, n).unwrap();
                assert_eq!(d.positive().len(), n * (n - 1));
            }
        }
        assert!(RootSystem::build_classical(ClassicalFamily::D, 1).is_err());
        assert!(RootSystem::build_classical(ClassicalFamily::A, 0).is_err());
    }

    #[test]
    fn dominance() {
        let rs = RootSystem::build_classical(ClassicalFamily::A, 2).unwrap();
        assert!(rs.is_dominant(rs.rho(), true));
        assert!(rs.is_dominant(&WeightVector::zero(3), false));
        assert!(!rs.is_dominant(&WeightVector::zero(3), true));

        let a1 = RootSystem::build_classical(ClassicalFamily::A, 1).unwrap();
        assert!(!a1.is_dominant(&wv(&[0, 1]), false));
    }

    #[test]
    fn orbits() {
        let a2 = RootSystem::build_classical(ClassicalFamily::A, 2).unwrap();
        assert_eq!(a2.weyl_orbit(&WeightVector::zero(3)).unwrap().len(), 1);
        assert_eq!(a2.weyl_orbit(a2.rho()).unwrap().len(), 6);

        let c2 = RootSystem::build_classical(ClassicalFamily::C, 2).unwrap();
        let orbit = c2.weyl_orbit(&wv(&[1, 0])).unwrap();
        let got: HashSet<WeightVector> = orbit.into_iter().collect();
        let expected: HashSet<WeightVector> =
            [wv(&[1, 0]), wv(&[-1, 0]), wv(&[0, 1]), wv(&[0, -1])]
                .into_iter()
                .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn orbit_guard_trips() {
        let c3 = RootSystem::build_classical(ClassicalFamily::C, 3).unwrap();
        assert!(matches!(
            c3.weyl_orbit_with_guard(c3.rho(), 10),
            Err(Error::OrbitGuard(10))
        ));
    }

    #[test]
    fn weyl_dimension_formula() {
        // trivial representation
        let k_plus = vec![wv(&[1, -1])];
        let rho_k = WeightVector::new(vec![ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(
            weyl_dim(&WeightVector::zero(2), &k_plus, &rho_k).unwrap(),
            1.into()
        );
        // vector representation of U(2)
        assert_eq!(weyl_dim(&wv(&[1, 0]), &k_plus, &rho_k).unwrap(), 2.into());
        // non-dominant weight rejected
        assert!(weyl_dim(&wv(&[0, 1]), &k_plus, &rho_k).is_err());
        // non-integral weight rejected
        let bad = WeightVector::new(vec![ratio(1, 3), rat(0)]);
        assert!(weyl_dim(&bad, &k_plus, &rho_k).is_err());
    }

    #[test]
    fn weyl_element_signs() {
        let a2 = RootSystem::build_classical(ClassicalFamily::A, 2).unwrap();
        let id = a2.identity_element();
        assert_eq!(id.sign(), 1);
        assert_eq!(id.det(), rat(1));

        let s0 = a2.extend_by_simple(&id, 0);
        assert_eq!(s0.sign(), -1);
        assert_eq!(s0.det(), rat(-1));

        // longest element of A2 has length 3
        let w0 = a2.extend_by_simple(&a2.extend_by_simple(&s0, 1), 0);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.sign(), -1);
        assert_eq!(w0.det(), rat(-1));
        // w0 sends rho to -rho
        assert_eq!(w0.apply(a2.rho()), -a2.rho());
    }

    #[test]
    fn dominantize_tracks_chamber() {
        let c2 = RootSystem::build_classical(ClassicalFamily::C, 2).unwrap();
        let v = wv(&[-1, 3]);
        let (dom, w) = c2.dominantize(&v);
        assert!(c2.is_dominant(&dom, false));
        assert_eq!(w.apply(&dom), v);
        assert_eq!(w.apply_inverse(&v), dom);
    }

    #[test]
    fn apply_inverse_is_inverse() {
        let b3 = RootSystem::build_classical(ClassicalFamily::B, 3).unwrap();
        let (_, w) = b3.dominantize(&wv(&[-2, 5, 1]));
        let v = wv(&[7, -3, 2]);
        assert_eq!(w.apply_inverse(&w.apply(&v)), v);
    }

    #[test]
    fn cartan_matrix_of_c2() {
        let c2 = RootSystem::build_classical(ClassicalFamily::C, 2).unwrap();
        // simple roots e1-e2 (short), 2e2 (long)
        assert_eq!(c2.cartan_matrix(), vec![vec![2, -2], vec![-1, 2]]);
    }
}
