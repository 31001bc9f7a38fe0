//! Exact calculator for bigraded multiplicative spectral sequences over the
//! prime fields F_p, together with presets for the Farrell-Tate cohomology of
//! the extended Morava stabilizer group and its subgroups at height n = p - 1.
//!
//! Everything is exact: coefficients live in F_p, bases are enumerated by
//! integer degree equations, and pages are turned by Gaussian elimination.
//! There is no floating point and no truncation error; windows only bound the
//! region that is materialized, and every claim is asserted on the interior
//! region that differentials cannot enter or leave.
//!
//! The main entry points:
//!
//! * [`presets::build_preset`] constructs the cohomology rings (levels `Cp`,
//!   `F`, `N`, `G`) with their differential rules.
//! * [`sseq::SpectralSequence`] turns pages, applies differentials by the
//!   graded Leibniz rule, localizes, and tensors with exterior algebras.
//! * [`ranges`] propagates onto/isomorphism ranges along pages and derives
//!   the vanishing line symbolically; [`ranges::simulate`] checks the same
//!   bound propagation against brute-force spectral sequences of random
//!   filtered complexes.
//! * [`picard`] turns the collapse data into bounds for exotic Picard groups.
//!
//! The `examples/` directory is the guided tour; each file is runnable:
//!
//! ```text
//! cargo run --example ring_basis                 monomial bases from degree equations
//! cargo run --example closed_form_differentials  Leibniz engine vs closed forms
//! cargo run --example collapse_run               full page-by-page collapse at p = 3
//! cargo run --example vanishing_line             symbolic range propagation
//! cargo run --example necklace_dimensions        necklace count = ring dimension
//! cargo run --example picard_bounds              exotic Picard group reports
//! cargo run --example comparison_simulator       randomized check of the range lemma
//! cargo run --example chart_svg                  ASCII and SVG charts
//! ```
//!
//! A thin `tatecalc` binary exposes the same capabilities as subcommands
//! (`ring-basis`, `ss-run`, `vanishing-line`, `picard-bound`, `dims`,
//! `selftest`); see the README for flags and file formats.

pub mod algebra;
pub mod chart;
pub mod config;
pub mod fp_linalg;
pub mod picard;
pub mod presets;
pub mod ranges;
pub mod sseq;

/// Crate-wide error type. The CLI maps these onto its exit codes: usage and
/// data errors exit 1, hypothesis violations exit 2, failed internal
/// consistency checks exit 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("vector has length {got}, ambient space has dimension {want}")]
    BadVectorLength { got: usize, want: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("negative exponent on non-invertible generator `{0}`")]
    NegativeExponent(String),
    #[error("exponent {1} on exterior generator `{0}` (must be 0 or 1)")]
    ExteriorExponent(String, i64),
    #[error("element is not homogeneous: mixes bidegrees {0:?} and {1:?}")]
    NonHomogeneous((i64, i64), (i64, i64)),
    #[error("degenerate degree setup: {0}")]
    DegenerateDegrees(String),
    #[error("differential rule on page {page} has target off by {off:?} from bidegree ({r}, {r}-1)", r = .page)]
    BadRuleBidegree { page: u32, off: (i64, i64) },
    #[error("generator `{0}` appears in a differential source and cannot be inverted")]
    NotPermanentCycle(String),
    #[error("window is empty or inverted: {0}")]
    BadWindow(String),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("internal consistency check failed: {0}")]
    InternalCheck(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
