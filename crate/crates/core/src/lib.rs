//! Exact spectral tools for signed graphs.
//!
//! The central question is when adding one edge to a signed graph changes
//! the spectrum of its signed Laplacian by integers only. [`classify`]
//! answers it from neighbourhood structure; [`siv_oracle`] answers it
//! independently from characteristic polynomials. On signed complete
//! targets, [`is_sigma_completable`] decides whether a partial graph can be
//! grown edge by edge with integral variation at every step, and
//! [`plan_completion`] produces such a sequence.
//!
//! ```
//! use siv_core::{classify, siv_oracle, Parity, SignedGraph, SivVerdict};
//!
//! let p3 = SignedGraph::from_edges(3, [(1, 2, Parity::Even), (2, 3, Parity::Even)])?;
//! let verdict = classify(&p3, 1, 3, Parity::Even)?;
//! assert_eq!(verdict, SivVerdict::Type1 { lambda: 1 });
//! assert_eq!(siv_oracle(&p3, 1, 3, Parity::Even)?.verdict, verdict);
//! # Ok::<(), siv_core::GraphError>(())
//! ```
//!
//! Vertices are labelled `1..=n` throughout.

pub mod completion;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod neighborhood;
pub mod oracle;
pub mod poly;
pub mod quadratic;
pub mod siv;
pub mod spectrum;
pub mod switching;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/signed-graphs.md")]
    mod signed_graphs {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/variation.md")]
    mod variation {}
    #[doc = include_str!("../../../book/src/completion.md")]
    mod completion {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

pub use completion::{
    brute_force_completable, is_plain_integrally_completable, is_sigma_completable,
    plan_completion, quotient_decomposition, substitute, substitution_spectrum, swap_y,
    triangle_parity, x_set, y_set, CompletionError, CompletionPlan, PlanStep,
    QuotientDecomposition, SignedComplete, SubstitutionSpectrum,
};
pub use graph::{Edge, GraphError, Parity, SignedGraph};
pub use io::{parse_sg, parse_sk, write_sg, write_sk, ParseError};
pub use matrix::{laplacian_char_poly, signed_laplacian, IntMatrix};
pub use neighborhood::{edge_quantities, neighborhood_split, Block, EdgeQuantities, NeighborhoodSplit};
pub use oracle::{siv_oracle, verify_shift_identity, Certificate, SivVerdict, VerdictError};
pub use poly::IntPoly;
pub use quadratic::{QuadInt, QuadRing};
pub use siv::{
    check_type1, check_type2, classify, type2_certificate, CertificateError, Conditions,
    Type2Certificate, Type2Check,
};
pub use spectrum::{integer_spectrum, IntegerSpectrum};
pub use switching::{
    is_centered, make_centered, switch_at, switching_canonical, switching_equivalent, Equivalence,
};
