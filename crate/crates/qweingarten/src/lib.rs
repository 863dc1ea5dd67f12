//! Exact Weingarten calculus for the free orthogonal and free unitary
//! quantum groups.
//!
//! The Haar state of these quantum groups evaluates monomials in the
//! fundamental-corepresentation coefficients through sums of entries of a
//! Weingarten matrix: the exact inverse of the Gram matrix `n^(loop count)`
//! indexed by non-crossing pair partitions (Temperley-Lieb diagrams in
//! Frobenius form). Everything here is computed in exact rational
//! arithmetic; no floating point is involved anywhere.
//!
//! The crate is organised around that pipeline:
//!
//! - [`diagrams`]: non-crossing pair partitions, the two-colored variant
//!   for the unitary case, loop counts and the loop-distance metric.
//! - [`exactalg`]: dense big-rational matrices with exact inversion,
//!   integer polynomials in `n`, and truncated series in `n^-1`.
//! - [`weingarten`]: Gram and Weingarten matrices over the canonical
//!   diagram bases, plus a checksummed JSON cache.
//! - [`integrator`]: Haar-state integrals of generator monomials, moments
//!   of truncated characters, and the leading-order free Wick counts.
//! - [`asymptotics`]: the `1/n` expansion of the Weingarten matrix via
//!   loop-distance paths, path-count tables, and the second-order Stieltjes
//!   series in closed form.
//! - [`oracles`]: independent brute-force reference implementations used by
//!   the verification suites, never by the fast paths.
//! - [`verify`]: the named verification suites behind `qweingarten verify`.
//! - [`cli`]: the command-line interface; the `qweingarten` binary is a
//!   thin wrapper around it.
//!
//! Start with the runnable examples (`cargo run --example enumerate_diagrams`
//! and friends) for a tour of each capability.

pub mod asymptotics;
pub mod cli;
pub mod diagrams;
pub mod exactalg;
pub mod integrator;
pub mod oracles;
pub mod verify;
pub mod weingarten;

pub use diagrams::{
    delta_symbol, enumerate_colored_pairings, enumerate_pairings, loop_count, loop_distance,
    Color, ColorWord, DiagramError, MultiIndex, Pairing,
};
pub use exactalg::{ExactAlgError, InverseNSeries, PolyInN, PolyMatrix, PowerSeries, RationalMatrix};
pub use integrator::{
    integrate, joint_moment_leading_order, truncated_moment, Case, IntegratorError, MomentQuery,
    MonomialSpec,
};
pub use weingarten::{build_gram, build_weingarten, GramCase, GramSpec, WeingartenError, WeingartenTable};
