//! Arithmetic in small finite fields GF(p^e), with elements encoded as
//! integers `0..q` in base-`p` digit order. Multiplication is performed on
//! polynomial representatives reduced by an irreducible monic polynomial
//! found by exhaustive search; fields up to a few hundred elements build
//! in microseconds.

use crate::error::{Error, Result};

/// Splits `q` into `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// GF(q) with precomputed addition and multiplication tables.
#[derive(Debug, Clone)]
pub struct Field {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Field {
    pub fn new(q: usize) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let poly_mod = if e == 1 {
            Vec::new()
        } else {
            find_irreducible(p, e)
        };
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; e as usize];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * p + x) };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as u16;
                // polynomial product reduced modulo the irreducible
                let mut prod = vec![0usize; 2 * e as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if e > 1 {
                    for i in (e as usize..prod.len()).rev() {
                        let c = prod[i];
                        if c == 0 {
                            continue;
                        }
                        prod[i] = 0;
                        // x^e = -poly_mod (the non-leading coefficients)
                        for (j, &m) in poly_mod.iter().enumerate() {
                            let sub = (c * m) % p;
                            prod[i - e as usize + j] = (prod[i - e as usize + j] + p - sub) % p;
                        }
                    }
                }
                mul[a * q + b] = undigits(&prod[..e as usize]) as u16;
            }
        }
        Ok(Field { q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }
}

/// Non-leading coefficients `c_0..c_{e-1}` of a monic irreducible
/// polynomial `x^e + c_{e-1} x^{e-1} + ... + c_0` over GF(p).
fn find_irreducible(p: usize, e: u32) -> Vec<usize> {
    let e = e as usize;
    let total = (p as u64).pow(e as u32);
    for code in 0..total {
        let mut coeffs = Vec::with_capacity(e);
        let mut x = code;
        for _ in 0..e {
            coeffs.push((x % p as u64) as usize);
            x /= p as u64;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

/// Tests `x^e + coeffs` for irreducibility by trial division against every
/// monic polynomial of degree `1..=e/2`.
fn is_irreducible(coeffs: &[usize], p: usize) -> bool {
    let e = coeffs.len();
    let mut full = coeffs.to_vec();
    full.push(1);
    for d in 1..=e / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = code;
            for _ in 0..d {
                div.push((x % p as u64) as usize);
                x /= p as u64;
            }
            div.push(1);
            if divides(&div, &full, p) {
                return false;
            }
        }
    }
    true
}

fn divides(div: &[usize], poly: &[usize], p: usize) -> bool {
    let mut rem = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (i, &c) in div.iter().enumerate() {
                let sub = (lead * c) % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    fn check_field_axioms(q: usize) {
        let f = Field::new(q).unwrap();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.mul(a, 0), 0);
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
        // nonzero elements form a group under multiplication: each row of
        // the Cayley table is a permutation
        for a in 1..q {
            let mut seen = vec![false; q];
            for b in 1..q {
                let ab = f.mul(a, b);
                assert_ne!(ab, 0, "zero divisor {a}*{b} in GF({q})");
                assert!(!seen[ab]);
                seen[ab] = true;
            }
        }
    }

    #[test]
    fn small_fields_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            check_field_axioms(q);
        }
    }

    #[test]
    fn non_prime_power_rejected() {
        assert!(matches!(Field::new(6), Err(Error::NotPrimePower(6))));
    }
}
