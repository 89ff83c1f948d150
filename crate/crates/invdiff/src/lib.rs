//! Exact arithmetic for rings of binary n-ic forms, square roots of the
//! inverse-different class, and the symmetric-pair parametrization.

pub mod arith;
pub mod classgrp;
pub mod densities;
pub mod enumerate;
pub mod etale;
pub mod ffcensus;
pub mod forms;
pub mod fp;
pub mod geometry;
pub mod linalg;
pub mod localfield;
pub mod oracles;
pub mod orbits;
pub mod poly;
pub mod suites;
pub mod zpoly;

pub use forms::{BinaryForm, Signature};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("datum not integral: {0}")]
    NotIntegral(String),
    #[error("cyclic vector search exhausted")]
    CyclicVectorExhausted,
    #[error("criterion unproven here: {0}")]
    Unproven(String),
    #[error("budget exceeded: need {need}, allowed {allowed}")]
    Budget { need: String, allowed: String },
    #[error("undecided: {0}")]
    Undecided(String),
}
