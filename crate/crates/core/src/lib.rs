//! Generalized continued fractions in exact arithmetic: convergent
//! evaluation, value-preserving transforms, generation from series and
//! convergent sequences, and a catalog of expansions for `e` and `pi`.

pub mod numerics;
pub mod cf;
pub mod transforms;
pub mod generate;
pub mod catalog;
pub mod cli;
