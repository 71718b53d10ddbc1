//! Tower diagrams and tower tableaux: sliding and flight, Rothification,
//! balanced labelings of Rothe diagrams, and Schubert polynomials and
//! truncated Stanley symmetric functions computed from semi-standard tower
//! tableaux.

pub mod balanced;
pub mod error;
pub mod perm;
pub mod render;
pub mod rothify;
pub mod schubert;
pub mod tableau;
pub mod tower;

pub use balanced::RotheLabeling;
pub use error::{Error, Result};
pub use perm::{Permutation, RotheDiagram, Word};
pub use rothify::{
    flag_tableau, push_up, rothify, rothify_semistandard, tower_hook, CompleteTowerTableau,
    TowerHook,
};
pub use schubert::{
    compatible_pairs, enumerate_sstt, reading_monomial, schubert, schubert_by_compatible_pairs,
    stanley_by_balanced_labelings, stanley_truncated, tableau_leq, CompatiblePair, LabelBound,
    Monomial, Polynomial,
};
pub use tableau::{Terminated, TowerTableau};
pub use tower::{Cell, FlightResult, SlideResult, TowerDiagram};
