//! The A-hat genus of the compact dual, as a Borel-Hirzebruch root product.
//!
//! The product here runs over the positive roots only. Over the full root
//! set the product is the square of this value, which is never negative and
//! cannot reproduce the signed closed form for the even projective spaces;
//! the positive-system product matches it. The sign still depends on the
//! orientation, so only the absolute value and the zero/nonzero verdict are
//! orientation-free.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::sympair::SymmetricPair;
use crate::weights::{is_regular, serde_rational, Rational};

/// The genus value together with the regularity verdict it is equivalent to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenusReport {
    /// Product over the positive roots; the sign depends on the orientation.
    #[serde(with = "serde_rational")]
    pub value_up_to_sign: Rational,
    pub nonzero: bool,
    pub rho_k_regular: bool,
}

impl GenusReport {
    pub fn abs_value(&self) -> Rational {
        self.value_up_to_sign.abs()
    }
}

/// `prod over alpha in Delta_g^+ of <rho_k, alpha> / <rho_g, alpha>`.
///
/// The denominators never vanish since `rho_g` is regular; the product is
/// zero exactly when `rho_k` is g-singular.
pub fn a_hat_number(sp: &SymmetricPair) -> GenusReport {
    let rho_g = sp.rho_g();
    let rho_k = sp.rho_k();
    let mut value = Rational::one();
    for alpha in sp.g().positive() {
        value *= rho_k.dot(alpha) / rho_g.dot(alpha);
    }
    let regular = is_regular(rho_k, sp.g().roots());
    debug_assert_eq!(regular, !value.is_zero());
    GenusReport {
        nonzero: !value.is_zero(),
        rho_k_regular: regular,
        value_up_to_sign: value,
    }
}

/// Closed form for the even complex projective spaces:
/// `(-16)^{-n} * binomial(2n, n)`.
pub fn a_hat_cp_closed_form(n: u32) -> Rational {
    let binom = num_integer::binomial(BigInt::from(2 * n), BigInt::from(n));
    let mut denom = BigInt::from(16).pow(n);
    if n % 2 == 1 {
        denom = -denom;
    }
    Rational::new(binom, denom)
}

/// Multiplicativity over product spaces; the empty product is 1.
pub fn a_hat_product(factors: &[GenusReport]) -> GenusReport {
    let mut value = Rational::one();
    let mut regular = true;
    for f in factors {
        value *= &f.value_up_to_sign;
        regular &= f.rho_k_regular;
    }
    GenusReport {
        nonzero: !value.is_zero(),
        rho_k_regular: regular,
        value_up_to_sign: value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_aiii, build_ci};
    use crate::weights::{rat, ratio};

    #[test]
    fn cp2_value() {
        let report = a_hat_number(&build_aiii(2, 1).unwrap());
        assert_eq!(report.abs_value(), ratio(1, 8));
        assert!(report.nonzero);
        // block order does not change the value here
        let mirrored = a_hat_number(&build_aiii(1, 2).unwrap());
        assert_eq!(mirrored.value_up_to_sign, ratio(-1, 8));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(a_hat_cp_closed_form(0), rat(1));
        assert_eq!(a_hat_cp_closed_form(1), ratio(-1, 8));
        assert_eq!(a_hat_cp_closed_form(2), ratio(3, 128));
    }

    #[test]
    fn signed_match_for_small_projective_spaces() {
        for n in 1..=2u32 {
            let sp = build_aiii(1, (2 * n) as i64).unwrap();
            assert_eq!(a_hat_number(&sp).value_up_to_sign, a_hat_cp_closed_form(n));
        }
    }

    #[test]
    fn sp_over_u_vanishes() {
        for n in [1, 2, 3, 4] {
            let report = a_hat_number(&build_ci(n).unwrap());
            assert!(report.value_up_to_sign.is_zero());
            assert!(!report.nonzero);
            assert!(!report.rho_k_regular);
        }
    }

    #[test]
    fn degenerate_pair_has_genus_one() {
        // K = G: every factor of the product is 1
        use crate::rootsys::{ClassicalFamily, RootSystem};
        use crate::sympair::{Family, PairMeta, SymmetricPair};
        use crate::weights::LatticeSpec;
        let g = RootSystem::build_classical(ClassicalFamily::C, 2).unwrap();
        let k = g.positive().to_vec();
        let sp = SymmetricPair::new(
            g,
            k,
            LatticeSpec::standard(2),
            2,
            PairMeta {
                name: "degenerate".into(),
                family: Some(Family::Custom),
                parameters: vec![],
                hermitian: false,
                dual_is_spin: true,
            },
        )
        .unwrap();
        assert!(sp.p_positive().is_empty());
        let report = a_hat_number(&sp);
        assert_eq!(report.value_up_to_sign, rat(1));
        assert!(report.nonzero && report.rho_k_regular);
    }

    #[test]
    fn product_reports() {
        assert_eq!(a_hat_product(&[]).value_up_to_sign, rat(1));
        let cp2 = a_hat_number(&build_aiii(2, 1).unwrap());
        let zero = a_hat_number(&build_ci(2).unwrap());
        let absorbed = a_hat_product(&[cp2.clone(), zero]);
        assert!(absorbed.value_up_to_sign.is_zero());
        let squared = a_hat_product(&[cp2.clone(), cp2]);
        assert_eq!(squared.abs_value(), ratio(1, 64));
    }
}
