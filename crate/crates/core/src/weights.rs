//! Exact rational weight vectors in ambient coordinates.
//!
//! All scalar products are the standard coordinate dot product, evaluated in
//! arbitrary-precision rational arithmetic. There are no tolerances anywhere:
//! regularity is an exact zero test and must never be subject to rounding.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

/// Exact rational scalar, always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::domain(format!("invalid rational '{s}': {e}")))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A weight in ambient coordinates of a fixed Cartan subalgebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVector(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        WeightVector(vec![Rational::zero(); dim])
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); dim];
        v[i] = rat(1);
        WeightVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Standard dot product. Errors on mismatched lengths.
    pub fn inner(&self, other: &WeightVector) -> Result<Rational> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.dot(other))
    }

    /// Dot product for internal use; lengths must already agree.
    pub(crate) fn dot(&self, other: &WeightVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "weight vector dimensions differ");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// Reflection `s_alpha(v) = v - 2<v,alpha>/<alpha,alpha> alpha`.
    ///
    /// An isometric involution fixing the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &WeightVector) -> Result<WeightVector> {
        if alpha.is_zero() {
            return Err(Error::ZeroRoot);
        }
        if self.dim() != alpha.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: alpha.dim(),
            });
        }
        Ok(self.reflect_in(alpha))
    }

    pub(crate) fn reflect_in(&self, alpha: &WeightVector) -> WeightVector {
        let c = (rat(2) * self.dot(alpha)) / alpha.norm_sq();
        self - &alpha.scale(&c)
    }

    pub fn scale(&self, c: &Rational) -> WeightVector {
        WeightVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Concatenation, used to embed block factors of product spaces.
    pub fn concat(&self, other: &WeightVector) -> WeightVector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeightVector(v)
    }

    /// Embeds into a larger ambient space at a coordinate offset.
    pub fn embed(&self, ambient: usize, offset: usize) -> WeightVector {
        assert!(offset + self.dim() <= ambient);
        let mut v = vec![Rational::zero(); ambient];
        for (i, c) in self.0.iter().enumerate() {
            v[offset + i] = c.clone();
        }
        WeightVector(v)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), rhs.dim(), "weight vector dimensions differ");
        WeightVector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), rhs.dim(), "weight vector dimensions differ");
        WeightVector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.0.iter().map(format_rational).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coords = strings
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(WeightVector(coords))
    }
}

/// Serde adapter serializing a [`Rational`] as a `"p/q"` string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(
        r: &Rational,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Option<Rational>`.
pub mod serde_rational_opt {
    use super::*;

    pub fn serialize<S: Serializer>(
        r: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        r.as_ref().map(format_rational).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).map_err(D::Error::custom))
            .transpose()
    }
}

/// Serde adapter serializing an [`Integer`] as a decimal string.
pub mod serde_integer {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Integer, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<Integer>().map_err(D::Error::custom)
    }
}

/// True iff `<lambda, gamma> != 0` for every root in `roots`.
pub fn is_regular(lambda: &WeightVector, roots: &[WeightVector]) -> bool {
    roots.iter().all(|r| !lambda.dot(r).is_zero())
}

/// True iff `2<alpha,kappa>/<alpha,alpha>` is an integer for every `alpha` in
/// `positive` (algebraic integrality).
pub fn is_algebraically_integral(kappa: &WeightVector, positive: &[WeightVector]) -> bool {
    positive.iter().all(|alpha| {
        let q = (rat(2) * kappa.dot(alpha)) / alpha.norm_sq();
        q.is_integer()
    })
}

/// A lattice given by an explicit basis in ambient coordinates.
///
/// `allow_half_shift` records whether the lattice has been enlarged for a
/// double cover; membership tests against the enlarged lattice live on
/// `SymmetricPair`, which knows the shift vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSpec {
    generators: Vec<WeightVector>,
    allow_half_shift: bool,
}

impl LatticeSpec {
    pub fn new(generators: Vec<WeightVector>, allow_half_shift: bool) -> Result<Self> {
        if !generators.is_empty() {
            let dim = generators[0].dim();
            for g in &generators {
                if g.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        left: dim,
                        right: g.dim(),
                    });
                }
            }
            if linalg::rank(&generators) != generators.len() {
                return Err(Error::domain("lattice generators are linearly dependent"));
            }
        }
        Ok(LatticeSpec {
            generators,
            allow_half_shift,
        })
    }

    /// The standard integral lattice `Z^n`.
    pub fn standard(n: usize) -> Self {
        LatticeSpec {
            generators: (0..n).map(|i| WeightVector::basis(n, i)).collect(),
            allow_half_shift: false,
        }
    }

    pub fn generators(&self) -> &[WeightVector] {
        &self.generators
    }

    pub fn allow_half_shift(&self) -> bool {
        self.allow_half_shift
    }

    pub(crate) fn set_allow_half_shift(&mut self, flag: bool) {
        self.allow_half_shift = flag;
    }

    /// Exact membership: is `v` an integer combination of the generators?
    ///
    /// Decided by solving the linear system over the rationals; the basis is
    /// independent, so the solution is unique when it exists.
    pub fn contains(&self, v: &WeightVector) -> bool {
        if v.is_zero() {
            return true;
        }
        if self.generators.is_empty() {
            return false;
        }
        match linalg::solve_columns(&self.generators, v) {
            Some(coeffs) => coeffs.iter().all(Rational::is_integer),
            None => false,
        }
    }

    /// Embeds the lattice into a larger ambient space at an offset.
    pub(crate) fn embed(&self, ambient: usize, offset: usize) -> Vec<WeightVector> {
        self.generators
            .iter()
            .map(|g| g.embed(ambient, offset))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(coords: &[i64]) -> WeightVector {
        WeightVector::from_ints(coords)
    }

    #[test]
    fn inner_examples() {
        let v = wv(&[1, 0, -1]);
        assert_eq!(v.inner(&v).unwrap(), rat(2));

        let a = wv(&[1, -1]);
        assert_eq!(a.inner(&a).unwrap(), rat(2));

        // <e1 + en, (n-1, n-3, ..., 1-n)> = 0, here for n = 4.
        let alpha = wv(&[1, 0, 0, 1]);
        let rho = wv(&[3, 1, -1, -3]);
        assert_eq!(alpha.inner(&rho).unwrap(), rat(0));
    }

    #[test]
    fn inner_dimension_mismatch() {
        let u = wv(&[1, 0]);
        let v = wv(&[1, 0, 0]);
        assert!(matches!(
            u.inner(&v),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflect_examples() {
        let alpha = wv(&[1, -1]);
        assert_eq!(alpha.reflect(&alpha).unwrap(), wv(&[-1, 1]));

        // orthogonal vectors are fixed
        let v = wv(&[1, 1]);
        assert_eq!(v.reflect(&alpha).unwrap(), v);

        assert_eq!(wv(&[1, 0]).reflect(&alpha).unwrap(), wv(&[0, 1]));
    }

    #[test]
    fn reflect_zero_root_rejected() {
        let v = wv(&[1, 0]);
        assert!(matches!(
            v.reflect(&WeightVector::zero(2)),
            Err(Error::ZeroRoot)
        ));
    }

    #[test]
    fn regularity_examples() {
        let delta: Vec<WeightVector> = vec![wv(&[1, -1]), wv(&[1, 1]), wv(&[2, 0]), wv(&[0, 2])];
        assert!(!is_regular(&WeightVector::zero(2), &delta));
        // rho_k of Sp(2)/U(2), up to scale: (1,-1) is singular against <(1,1),.>
        assert!(!is_regular(&wv(&[1, -1]), &delta));

        let a2: Vec<WeightVector> = vec![
            wv(&[1, -1, 0]),
            wv(&[1, 0, -1]),
            wv(&[0, 1, -1]),
            wv(&[-1, 1, 0]),
            wv(&[-1, 0, 1]),
            wv(&[0, -1, 1]),
        ];
        assert!(is_regular(&wv(&[1, -1, 0]), &a2));
        assert_eq!(is_regular(&wv(&[1, -1, 0]), &a2), {
            let neg: Vec<WeightVector> = a2.iter().map(|r| -r).collect();
            is_regular(&wv(&[1, -1, 0]), &neg)
        });
    }

    #[test]
    fn integrality_examples() {
        let k_plus = vec![wv(&[1, -1])];
        assert!(is_algebraically_integral(&WeightVector::zero(2), &k_plus));
        // rho_k itself
        let rho_k = WeightVector::new(vec![ratio(1, 2), ratio(-1, 2)]);
        assert!(is_algebraically_integral(&rho_k, &k_plus));
        // 2*(1/3)/2 = 1/3 is not an integer
        let kappa = WeightVector::new(vec![ratio(1, 3), rat(0)]);
        assert!(!is_algebraically_integral(&kappa, &k_plus));
    }

    #[test]
    fn lattice_examples() {
        let std2 = LatticeSpec::standard(2);
        assert!(std2.contains(&WeightVector::zero(2)));
        assert!(std2.contains(&wv(&[1, 0])));
        assert!(std2.contains(&wv(&[3, -7])));
        let half = WeightVector::new(vec![ratio(1, 2), ratio(1, 2)]);
        assert!(!std2.contains(&half));

        // non-standard basis
        let gens = vec![wv(&[2, 0]), wv(&[1, 1])];
        let lat = LatticeSpec::new(gens, false).unwrap();
        assert!(lat.contains(&wv(&[3, 1])));
        assert!(!lat.contains(&wv(&[1, 0])));
    }

    #[test]
    fn dependent_generators_rejected() {
        let gens = vec![wv(&[1, 0]), wv(&[2, 0])];
        assert!(LatticeSpec::new(gens, false).is_err());
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "-1/8", "3/128", "7", "-22"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }
}
