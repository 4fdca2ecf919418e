//! Numerical laboratory for local spectral laws of generalized Wigner
//! matrices whose variance profile may have a bipartite (imprimitive)
//! structure, i.e. `-1` in the spectrum of the variance matrix.

pub mod ensemble;
pub mod profile;
pub mod resolvent;
pub mod structure;
pub mod theory;
pub mod verify;
