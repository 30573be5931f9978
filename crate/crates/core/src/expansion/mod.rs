//! Greedy expansions, expansions of 1, admissibility and values.

mod admissible;
mod greedy;
pub mod word;

use thiserror::Error;

pub use admissible::{
    admissible, compare_tail, first_difference, parry_classify, quasi_greedy_of_one, Admissibility,
    OneExpansions, ParryClass,
};
pub use greedy::{
    expansion_of_one, greedy_expand, resume_greedy, value_of, value_of_finite, Expansion,
    GreedyState, DEFAULT_FUEL,
};
pub use word::{lex_compare, EPWord, FiniteDigitString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("operation needs explicit base elements")]
    SymbolicModeUnsupported,
    #[error("value outside [0, 1]")]
    OutOfRange,
    #[error("expansion of 1 for shift {shift} not resolved within the fuel limit")]
    NotParry { shift: usize },
    #[error("value lies in a different field than the base")]
    FieldMismatch,
    #[error("digit does not fit in 64 bits")]
    DigitOverflow,
}
