//! Closed-form generators: cyclic squares and cubes, the square-to-cube
//! composition, squares and cubes with prescribed subobjects, inflation,
//! and the diagonal realization `LC(a^k)`.

use crate::completion::complete_to_square;
use crate::error::{Error, Result};
use crate::model::{Cube, Partition, Realization, Rectangle, Square};
use crate::residue;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coefficients of a cyclic construction `a1*i + a2*j (+ a3*k) + affine (mod a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCoeffs {
    pub linear: Vec<i64>,
    pub affine: i64,
}

impl CyclicCoeffs {
    pub fn square(a1: i64, a2: i64, affine: i64) -> Self {
        CyclicCoeffs {
            linear: vec![a1, a2],
            affine,
        }
    }

    pub fn cube(a1: i64, a2: i64, a3: i64, affine: i64) -> Self {
        CyclicCoeffs {
            linear: vec![a1, a2, a3],
            affine,
        }
    }

    fn check(&self, modulus: usize, arity: usize) -> Result<()> {
        if self.linear.len() != arity {
            return Err(Error::LengthMismatch {
                expected: arity,
                got: self.linear.len(),
            });
        }
        for &c in &self.linear {
            if gcd(modulus as u64, c.unsigned_abs() % modulus as u64) != 1 && modulus > 1 {
                return Err(Error::NonCoprimeCoefficient {
                    modulus,
                    coefficient: c,
                });
            }
        }
        Ok(())
    }
}

/// `L(i,j) = a1*i + a2*j + a3 (mod a)`, residues in `[a]`. Latin whenever
/// `gcd(a, a1) = gcd(a, a2) = 1`.
pub fn cyclic_square(a: usize, coeffs: &CyclicCoeffs) -> Result<Square> {
    coeffs.check(a, 2)?;
    Square::from_fn(a, |i, j| {
        residue(
            coeffs.linear[0] * i as i64 + coeffs.linear[1] * j as i64 + coeffs.affine,
            a,
        )
    })
}

/// `C(i,j,k) = a1*i + a2*j + a3*k + a4 (mod a)`, residues in `[a]`.
pub fn cyclic_cube(a: usize, coeffs: &CyclicCoeffs) -> Result<Cube> {
    coeffs.check(a, 3)?;
    Cube::from_fn(a, |i, j, k| {
        residue(
            coeffs.linear[0] * i as i64
                + coeffs.linear[1] * j as i64
                + coeffs.linear[2] * k as i64
                + coeffs.affine,
            a,
        )
    })
}

/// The canonical "arbitrary" latin cube `C(i,j,k) = i + j + k - 2 (mod n)`,
/// used wherever a construction asks for an unconstrained cube.
pub fn arbitrary_cube(n: usize) -> Result<Cube> {
    cyclic_cube(n, &CyclicCoeffs::cube(1, 1, 1, -2))
}

/// Composes a latin square into a latin cube: `C(r,c,l) = L(L(r,l), c)`.
pub fn cube_from_square(sq: &Square) -> Result<Cube> {
    let n = sq.order();
    Cube::from_fn(n, |r, c, l| sq.get(sq.get(r, l) as usize, c))
}

/// A latin square of order `n` whose top-left `m x m` block is a latin
/// square on the symbols `[m]`. Exists iff `m = n`, `m = 0` or `2m <= n`.
///
/// The block columns beyond `m` are filled cyclically on the remaining
/// symbols, then the rectangle of the first `m` rows is completed to a
/// square by column/symbol matchings.
pub fn square_with_subsquare(n: usize, m: usize) -> Result<Square> {
    if m == n || m == 0 {
        return cyclic_square(n, &CyclicCoeffs::square(1, 1, -1));
    }
    if 2 * m > n {
        return Err(Error::SubsquareTooLarge { n, m });
    }
    let t = n - m;
    let mut cells = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            let v = if j <= m {
                residue(i as i64 + j as i64 - 1, m)
            } else {
                // cyclic block on the symbols m+[n-m]; columns stay
                // distinct because m <= n - m
                m as u16 + residue(i as i64 + (j - m) as i64 - 1, t)
            };
            cells.push(v);
        }
    }
    let rect = Rectangle::from_cells(m, n, n, cells)?;
    complete_to_square(&rect)
}

/// A latin cube of order `total` whose block `[c]^3` holds only the
/// symbols `[c]`. Exists iff `total - c >= c` (or `c = total`), via the
/// square-to-cube composition of [`square_with_subsquare`].
pub fn cube_with_subcube(total: usize, c: usize) -> Result<Cube> {
    if c != total && total < 2 * c {
        return Err(Error::SubcubeTooLarge { total, c });
    }
    let sq = square_with_subsquare(total, c).map_err(|e| match e {
        Error::SubsquareTooLarge { .. } => Error::SubcubeTooLarge { total, c },
        other => other,
    })?;
    cube_from_square(&sq)
}

/// Replaces every cell of `base` by a copy of `tile` on the symbol range
/// `t*(v-1) + [t]`, producing a latin cube of order `t * n`. Applied to a
/// normal-form realization of `(h1...hk)` this yields one of `(t*h1...t*hk)`.
pub fn inflate(base: &Cube, tile: &Cube) -> Result<Cube> {
    let n = base.order();
    let t = tile.order();
    Cube::from_fn(n * t, |i, j, k| {
        let (bi, ui) = ((i - 1) / t + 1, (i - 1) % t + 1);
        let (bj, uj) = ((j - 1) / t + 1, (j - 1) % t + 1);
        let (bk, uk) = ((k - 1) / t + 1, (k - 1) % t + 1);
        let v = base.get(bi, bj, bk);
        (t as u16) * (v - 1) + tile.get(ui, uj, uk)
    })
}

/// The canonical inflation tile of order `a`: `T(i,j,k) = i + j - k (mod a)`.
pub fn inflation_tile(a: usize) -> Result<Cube> {
    cyclic_cube(a, &CyclicCoeffs::cube(1, 1, -1, 0))
}

/// A verified realization of `(a^k)`: the base cube `C(i,j,l) = i + j - l
/// (mod k)` has `C(m,m,m) = m`, so it is a normal-form `LC(1^k)`; inflating
/// by the order-`a` tile gives `LC(a^k)`.
pub fn diagonal_realization(a: usize, k: usize) -> Result<Realization> {
    let base = cyclic_cube(k, &CyclicCoeffs::cube(1, 1, -1, 0))?;
    let cube = inflate(&base, &inflation_tile(a)?)?;
    Realization::new(cube, Partition::new(vec![a; k])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SubcubePlacement;
    use crate::verify::{check_disjoint_subcubes, verify_cube, verify_square_latin};

    #[test]
    fn cyclic_square_formula() {
        let sq = cyclic_square(5, &CyclicCoeffs::square(1, 1, 0)).unwrap();
        assert_eq!(sq.get(1, 1), 2);
        assert!(verify_square_latin(&sq));
    }

    #[test]
    fn cyclic_square_rejects_non_coprime() {
        assert!(matches!(
            cyclic_square(4, &CyclicCoeffs::square(2, 1, 0)),
            Err(Error::NonCoprimeCoefficient { .. })
        ));
    }

    #[test]
    fn cyclic_square_random_coeffs_valid() {
        let sq = cyclic_square(7, &CyclicCoeffs::square(3, 5, 2)).unwrap();
        assert!(verify_square_latin(&sq));
    }

    #[test]
    fn cyclic_cube_formula() {
        let c = cyclic_cube(5, &CyclicCoeffs::cube(-1, 1, 1, 0)).unwrap();
        assert_eq!(c.get(1, 1, 1), 1);
        assert_eq!(c.get(2, 3, 4), 5);
    }

    #[test]
    fn cyclic_cube_order_nine_valid() {
        let c = cyclic_cube(9, &CyclicCoeffs::cube(-1, -1, 2, 1)).unwrap();
        assert!(verify_cube(&c).is_valid());
    }

    #[test]
    fn cube_from_square_sum_form() {
        // L = i + j - 1 gives C(r,c,l) = r + c + l - 2.
        let sq = cyclic_square(4, &CyclicCoeffs::square(1, 1, -1)).unwrap();
        let c = cube_from_square(&sq).unwrap();
        assert_eq!(c.get(1, 1, 1), 1);
        for (i, j, k) in [(2, 3, 1), (4, 4, 4), (1, 2, 3)] {
            assert_eq!(c.get(i, j, k), residue((i + j + k) as i64 - 2, 4));
        }
        assert!(verify_cube(&c).is_valid());
    }

    #[test]
    fn cube_from_square_order_one() {
        let sq = Square::from_cells(1, vec![1]).unwrap();
        let c = cube_from_square(&sq).unwrap();
        assert_eq!(c.get(1, 1, 1), 1);
    }

    #[test]
    fn subsquare_order_two() {
        let sq = square_with_subsquare(2, 1).unwrap();
        assert_eq!(sq.get(1, 1), 1);
        assert!(verify_square_latin(&sq));
    }

    #[test]
    fn subsquare_too_large() {
        assert_eq!(
            square_with_subsquare(5, 3).unwrap_err(),
            Error::SubsquareTooLarge { n: 5, m: 3 }
        );
    }

    #[test]
    fn subsquare_block_holds_small_symbols() {
        for (n, m) in [(4, 2), (5, 2), (7, 3), (9, 4)] {
            let sq = square_with_subsquare(n, m).unwrap();
            assert!(verify_square_latin(&sq), "({n},{m})");
            for i in 1..=m {
                for j in 1..=m {
                    assert!(sq.get(i, j) as usize <= m, "({n},{m}) at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn cube_with_subcube_verifies() {
        let c = cube_with_subcube(5, 2).unwrap();
        assert!(verify_cube(&c).is_valid());
        let p = SubcubePlacement::new(vec![1, 2], vec![1, 2], vec![1, 2], vec![1, 2]);
        assert!(check_disjoint_subcubes(&c, &[p]).unwrap().is_valid());
    }

    #[test]
    fn cube_subcube_block_property() {
        // the composition keeps [m]^3 on [m] whenever the square block does
        for (n, m) in [(4, 2), (5, 2), (7, 3), (9, 4)] {
            let c = cube_with_subcube(n, m).unwrap();
            for i in 1..=m {
                for j in 1..=m {
                    for k in 1..=m {
                        assert!(c.get(i, j, k) as usize <= m);
                    }
                }
            }
        }
    }

    #[test]
    fn cube_with_subcube_too_large() {
        assert_eq!(
            cube_with_subcube(3, 2).unwrap_err(),
            Error::SubcubeTooLarge { total: 3, c: 2 }
        );
    }

    #[test]
    fn cube_with_zero_subcube_is_plain() {
        let c = cube_with_subcube(4, 0).unwrap();
        assert!(verify_cube(&c).is_valid());
    }

    #[test]
    fn inflation_by_order_one_base_is_tile() {
        let base = Cube::from_cells(1, vec![1]).unwrap();
        let tile = arbitrary_cube(4).unwrap();
        assert_eq!(inflate(&base, &tile).unwrap(), tile);
    }

    #[test]
    fn diagonal_realization_base_case() {
        let r = diagonal_realization(1, 3).unwrap();
        assert_eq!(r.cube().get(1, 1, 1), 1);
        assert_eq!(r.cube().get(2, 2, 2), 2);
        assert_eq!(r.cube().get(3, 3, 3), 3);
    }

    #[test]
    fn diagonal_realization_two_cubed() {
        let r = diagonal_realization(2, 3).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.partition().parts(), &[2, 2, 2]);
    }

    #[test]
    fn diagonal_realization_single_part() {
        let r = diagonal_realization(5, 1).unwrap();
        assert_eq!(r.order(), 5);
    }

    #[test]
    fn inflating_trivial_diagonal_matches_direct() {
        let base = diagonal_realization(1, 4).unwrap();
        let inflated = inflate(base.cube(), &inflation_tile(3).unwrap()).unwrap();
        let direct = diagonal_realization(3, 4).unwrap();
        assert_eq!(&inflated, direct.cube());
    }

    #[test]
    fn cyclic_rejection_matches_gcd_exhaustively() {
        for a in 1..=12usize {
            for a1 in 1..=a as i64 {
                for a2 in 1..=a as i64 {
                    let want_ok = gcd(a as u64, a1 as u64) == 1 && gcd(a as u64, a2 as u64) == 1;
                    let got = cyclic_square(a, &CyclicCoeffs::square(a1, a2, 0));
                    assert_eq!(got.is_ok(), want_ok, "a={a}, a1={a1}, a2={a2}");
                }
            }
        }
    }
}
