//! Exact counting and numerical verification for partitions whose parts are
//! taken from a polynomial sequence `{f(l)}`, `l >= 1`.
//!
//! The crate is organized around one source of truth for the polynomial and
//! four layers built on top of it:
//!
//! - [`ivpoly`]: integer-valued polynomials in the binomial-coefficient basis,
//!   admissibility checks, and the arithmetic invariants `Pi_f` and the
//!   modular inverse of `f(0)`.
//! - [`counting`]: exact arbitrary-precision tables `p_f(n)`, `p_f(m,n)` and
//!   `p_f(a,K;n)`, plus a brute-force enumeration oracle.
//! - [`filter`]: twisted generating functions `G_f(zeta, zeta' q)` as
//!   truncated complex q-series, and the roots-of-unity filter identity.
//! - [`saddle`]: saddle-point solver and the leading-term asymptotic for
//!   `p_f(n)`.
//! - [`expsum`]: Weyl sums, complete exponential sums with their exact bound,
//!   and the `F` / mean-square functionals used for equidistribution
//!   diagnostics.
//!
//! Everything is deterministic; finished tables are immutable and safe to
//! read from multiple threads.

pub mod arith;
pub mod counting;
pub mod expsum;
pub mod filter;
pub mod ivpoly;
pub mod saddle;
pub mod special;
pub mod tableio;

pub use counting::{brute_force, PartitionTable, PartsMatrix, ResidueTable};
pub use filter::{verify_filter_identity, FilterReport, TwistedSeries};
pub use ivpoly::IntegerValuedPoly;
pub use saddle::{solve_saddle, SaddlePoint};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("polynomial parse error: {0}")]
    Parse(String),
    #[error("polynomial is not integer-valued: binomial coefficient c_{index} = {value} is not an integer")]
    NotIntegerValued { index: usize, value: String },
    #[error("constant polynomials are not supported (degree must be >= 1)")]
    DegreeZero,
    #[error("polynomial is not admissible: {0}")]
    NotAdmissible(String),
    #[error("delta = {delta} does not divide Pi_f = {pi_f}")]
    DeltaNotDividesPi { delta: u64, pi_f: String },
    #[error("gcd(f(0), {delta}) != 1, no modular inverse exists; input is inadmissible")]
    NoModularInverse { delta: u64 },
    #[error("twist index out of range: {what}")]
    TwistOutOfRange { what: String },
    #[error("gcd(d, h) must be 1, got d = {d}, h = {h}")]
    NotCoprime { d: i64, h: u64 },
    #[error("saddle bracket failure for n = {n}: S({lo:e}) = {s_lo:e}, S({hi:e}) = {s_hi:e} after {expansions} expansions")]
    BracketFailure {
        n: u64,
        lo: f64,
        hi: f64,
        s_lo: f64,
        s_hi: f64,
        expansions: u32,
    },
    #[error("saddle solver did not reach residual {want:e} for n = {n} (got {got:e})")]
    SaddleResidual { n: u64, want: f64, got: f64 },
    #[error("truncation unsound: tail term at n_max = {n_max} is within 1e-30 of the head term (log tail {log_tail:.3}, log head {log_head:.3}); increase n_max or x")]
    TruncationUnsound {
        n_max: usize,
        log_tail: f64,
        log_head: f64,
    },
    #[error("table format error: {0}")]
    TableFormat(String),
    #[error("table mismatch: {0}")]
    TableMismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
