//! Internal contextual grammars whose selection languages are drawn from
//! subregular families.
//!
//! The crate is organised bottom-up:
//!
//! * [`regular`]: alphabets, words, regular expressions, right-linear
//!   grammars, NFAs, complete DFAs and transition monoids.
//! * [`subregular`]: decision procedures for the structural families
//!   (monoidal, finite, nilpotent, combinational, definite, suffix-closed,
//!   ordered, commutative, circular, non-counting, power-separating,
//!   union-free) and the combined [`subregular::FamilyReport`].
//! * [`resources`]: state, non-terminal and rule complexity.
//! * [`contextual`]: grammars with selection pairs, internal derivation,
//!   bounded enumeration, exact membership and the selection-splitting
//!   transformations.
//! * [`fixtures`]: the separating witness grammars, their closed forms and
//!   the hierarchy tables between the families.

pub mod contextual;
pub mod error;
pub mod fixtures;
pub mod regular;
pub mod resources;
pub mod subregular;

pub use error::{Error, ParseError, Result};
pub use regular::{Alphabet, Dfa, Letter, Nfa, RegexAst, RightLinearGrammar, Word};
