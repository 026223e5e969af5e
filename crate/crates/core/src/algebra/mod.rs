//! The free *-algebra on the letters `u_jk`, `u*_jk` and the presentation
//! catalogue.

mod element;
mod permutation;
mod presentation;
mod word;

pub use element::Element;
pub use permutation::Permutation;
pub use presentation::{Kind, Params, Presentation, Relation};
pub use word::{Letter, Word};
