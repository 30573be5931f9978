//! Exact arithmetic and string rewriting for alternate-base numeration.

pub mod algebraic;
pub mod bases;
pub mod classify;
pub mod cli;
pub mod expansion;
pub mod rewrite;
