//! Exact toolkit for Coxeter groups given by labeled diagrams.

pub mod catalog;
pub mod certify;
pub mod classify;
pub mod diagram;
pub mod exactla;
pub mod nerve;
pub mod orbit;
pub mod scalar;
pub mod tits;
