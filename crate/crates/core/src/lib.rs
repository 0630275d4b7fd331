//! Signature-based Groebner basis computation: F5 in Buchberger style.

pub mod arith;
pub mod cli;
pub mod criteria;
pub mod pairs;
pub mod signatures;
pub mod engine;
pub mod oracle;
