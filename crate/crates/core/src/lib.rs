pub mod automorphism;
pub mod catalog;
pub mod clifford;
pub mod error;
pub mod invariants;
pub mod jordan;
pub mod matrix;
pub mod scalar;
pub mod verify;
