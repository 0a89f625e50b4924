//! Letters, words, diagrams and tableaux, with the three row insertions,
//! their inverses, transposition and evacuation.

mod diagram;
mod symbol;
#[allow(clippy::module_inception)]
mod tableau;
mod word;

pub use diagram::{hook_partitions, partitions, CellPosition, FrobeniusCoords, YoungDiagram};
pub use symbol::{alphabet, Symbol};
pub use tableau::{enumerate_fillings, standard_tableaux, InsertionRule, Tableau, TableauKind};
pub use word::{all_words, Word};

pub(crate) use tableau::{insert_into_rows, reverse_from_rows};
