//! Robinson–Schensted–Knuth machinery on the mixed alphabet, the Schur–Weyl
//! graded graph, exact Young-diagram arithmetic and an ergodic-method
//! laboratory for estimating central measures from sampled words.
//!
//! ```
//! use schurweyl_core::{rsk, Word};
//!
//! let w: Word = "2,1,2".parse().unwrap();
//! let pair = rsk::rsk(&w).unwrap();
//! assert_eq!(pair.p.to_string(), "1,2/2");
//! assert_eq!(pair.q.to_string(), "1,3/2");
//! ```

pub mod ergodic;
pub mod error;
pub mod graph;
pub mod rsk;
pub mod tableau;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
pub use tableau::{
    alphabet, CellPosition, FrobeniusCoords, InsertionRule, Symbol, Tableau, TableauKind, Word, YoungDiagram,
};
