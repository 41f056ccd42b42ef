//! Exact solver and verification laboratory for the Maker-Breaker domination
//! game on small graphs.
//!
//! ```
//! use mbd_core::{families, game::{solve_all, GameValue}};
//!
//! let star = families::star(4).unwrap();
//! let values = solve_all(&star);
//! assert_eq!(values.mb, GameValue::Finite(1));
//! assert_eq!(values.smb, GameValue::Infinite);
//! ```
//!
//! Modules, bottom up: [`graph`] and [`domination`] hold the graph model,
//! [`graph6`] and [`canon`] handle I/O and isomorphism, [`game`] is the exact
//! engine, [`families`] builds the named constructions, [`criticality`]
//! decides edge-criticality, and [`atlas`] enumerates and verifies.

pub mod atlas;
pub mod canon;
pub mod criticality;
pub mod domination;
pub mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod graph6;

pub use error::{Error, Result};
pub use game::{GameValue, Invariant, Outcome};
pub use graph::{Edge, Graph, MarkedGraph, VertexSet};

/// Book chapters compiled as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/game.md")]
    mod game {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/criticality.md")]
    mod criticality {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
