//! Exact symbolic computation on root systems deciding whether the Dirac
//! operator on a Riemannian symmetric space of noncompact type has point
//! spectrum.
//!
//! The decision chain is combinatorial: unequal ranks force an empty point
//! spectrum; otherwise the half sum `rho_k` of the compact positive roots is
//! either g-singular (empty point spectrum) or g-regular, in which case the
//! point spectrum is exactly `{0}` and the kernel is the discrete series
//! with Harish-Chandra parameter `rho_k`. Regularity of `rho_k` is in turn
//! equivalent to the nonvanishing of the A-hat genus of the compact dual,
//! computed here as an exact root product. Everything runs in
//! arbitrary-precision rational arithmetic; there are no tolerances.
//!
//! ```
//! use diracpoint::{analyze, build_aiii, SpaceDescriptor, Verdict};
//!
//! let pair = build_aiii(2, 1).unwrap(); // dual of U(2,1)/U(2)xU(1)
//! let report = analyze(&SpaceDescriptor::single_pair(pair)).unwrap();
//! assert_eq!(report.verdict, Verdict::PointSpectrumIsZeroOnly);
//! ```

mod cartan;
pub mod catalog;
pub mod decision;
mod error;
pub mod genus;
mod linalg;
pub mod report;
pub mod rootsys;
pub mod sympair;
pub mod weights;

pub use catalog::{
    build_aiii, build_bdi_two, build_cii, build_ci, build_diii, build_hermitian_from_cartan,
    parse_space_expr, Catalog, CatalogEntry, EntryKind,
};
pub use decision::{
    analyze, classify_irreducible, sweep, AnalysisReport, ClassificationFamily, CorollaryFlags,
    KernelReport, Reason, SpaceDescriptor, SpaceFactor, SweepRow, SweepSummary, UnequalRankStub,
    Verdict, MAX_SWEEP_RANK,
};
pub use error::{Error, Result};
pub use genus::{a_hat_cp_closed_form, a_hat_number, a_hat_product, GenusReport};
pub use report::{catalog_rows, ktypes_report, CatalogRow, KTypeRow, KTypesReport};
pub use rootsys::{
    weyl_dim, ClassicalFamily, RootSystem, WeylElement, DEFAULT_ORBIT_GUARD,
};
pub use sympair::{
    DiscreteSeriesParam, Family, IneqStatus, PairMeta, ProofInequalityReport, SpinorKType,
    SymmetricPair,
};
pub use weights::{
    format_rational, is_algebraically_integral, is_regular, parse_rational, rat, ratio, Integer,
    LatticeSpec, Rational, WeightVector,
};
