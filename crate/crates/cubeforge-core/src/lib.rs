//! Construction and verification of latin cubes with pairwise disjoint subcubes.
//!
//! A latin cube (permutation cube) of order `n` is an `n x n x n` array over
//! the symbols `1..=n` in which every line -- file `(i,j,*)`, row `(i,*,k)`
//! and column `(*,j,k)` -- contains each symbol exactly once. Given a
//! partition `h1 >= h2 >= ... >= hk` of `n`, a 3-realization `LC(h1...hk)`
//! is a latin cube with pairwise disjoint subcubes of those orders; in
//! normal form the subcubes sit on the diagonal blocks `Hm x Hm x Hm`.
//!
//! The crate provides:
//! - the domain model and verifiers ([`model`], [`verify`]),
//! - closed-form generators: cyclic squares/cubes, inflation, subcube
//!   embeddings ([`construct`]),
//! - orthogonal arrays `OA(3,5,n)` and the extension pairs derived from
//!   them ([`oa`]),
//! - completion engines: latin-rectangle extension, corner-channel and
//!   back-entry fills, bipartite matching and edge coloring ([`completion`]),
//! - the paired-realization inflation route for `LC(a^2 b^1)` with `a` even
//!   or divisible by 3 ([`even`]) and the cyclic-extension assembly for
//!   `a = 1,5 (mod 6)` ([`odd`]), backed by a verified data catalog
//!   ([`catalog`]),
//! - an existence oracle, top-level constructor and bounded exhaustive
//!   search ([`dispatch`]),
//! - the `.lcube` text format and JSON export ([`format`]).
//!
//! Symbols and indices are 1-based throughout; residues mod `a` are taken
//! in `[a]` (so `0` maps to `a`).

pub mod catalog;
pub mod completion;
pub mod construct;
pub mod dispatch;
pub mod error;
pub mod even;
pub mod format;
pub mod gf;
pub mod model;
pub mod oa;
pub mod odd;
pub mod verify;

pub use error::Error;
pub use model::{
    Cube, LatinBox, PairedPack, PartialCube, Partition, Realization, Rectangle, Square,
    SubcubePlacement, Transversal,
};
pub use verify::{VerificationReport, Violation};

/// Residue of `x` modulo `a` taken in `[a]`: `0` maps to `a`.
#[inline]
pub fn residue(x: i64, a: usize) -> u16 {
    debug_assert!(a > 0);
    let a = a as i64;
    let r = x.rem_euclid(a);
    (if r == 0 { a } else { r }) as u16
}

#[cfg(test)]
mod tests {
    use super::residue;

    #[test]
    fn residue_maps_zero_to_modulus() {
        assert_eq!(residue(0, 5), 5);
        assert_eq!(residue(5, 5), 5);
        assert_eq!(residue(-1, 5), 4);
        assert_eq!(residue(13, 5), 3);
        assert_eq!(residue(-10, 5), 5);
    }
}
