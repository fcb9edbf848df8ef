//! Information-theoretic, emergence and cognitive-augmentation metrics.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; IO, file formats and the command line live in the
//! `infocog` companion crate.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`entropy`] | Boltzmann, Gibbs, Shannon, Hartley, joint/conditional entropy, MI, KL, Rényi |
//! | [`algorithmic`] | LZ78 parse as a computable upper-bound proxy for algorithmic information |
//! | [`physical`] | Margolus–Levitin, entropy-bit and light-speed IO limits |
//! | [`emergence`] | Stonier's exponential information and the emergent-capacity curve |
//! | [`ca`] | 1-D cellular automata bench: Langton λ, evolution, entropy, λ sweeps |
//! | [`grit`] | Structural complexity and representational information of Boolean categories |
//! | [`cogaug`] | Cognitive work, gain, augmentation factor, efficiency, power, density |
#![cfg_attr(not(test), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod algorithmic;
pub mod ca;
pub mod cogaug;
pub mod emergence;
pub mod entropy;
pub mod error;
pub mod grit;
mod math;
pub mod physical;
pub mod rng;

pub use error::{Error, ErrorKind, Result};
