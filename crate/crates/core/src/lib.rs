#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alt;
pub mod codim;
pub mod exponent;
pub mod fixtures;
pub mod lie;
pub mod linalg;
pub mod perm;
pub mod polys;
pub mod scalar;
pub mod structure;
pub mod symmetry;
