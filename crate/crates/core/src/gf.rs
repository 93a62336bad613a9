//! Finite fields GF(q) for prime powers q <= 16, as lookup tables.
//!
//! Elements are encoded as integers `0..q` whose base-p digits are the
//! polynomial coefficients (digit i is the coefficient of x^i).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: usize,
    degree: usize,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

// Low-to-high coefficients of the monic reduction polynomial (leading 1 omitted).
fn reduction_poly(p: usize, k: usize) -> Option<&'static [usize]> {
    match (p, k) {
        (_, 1) => Some(&[]),
        (2, 2) => Some(&[1, 1]),       // x^2 + x + 1
        (2, 3) => Some(&[1, 1, 0]),    // x^3 + x + 1
        (2, 4) => Some(&[1, 1, 0, 0]), // x^4 + x + 1
        (3, 2) => Some(&[1, 0]),       // x^2 + 1
        _ => None,
    }
}

impl GaloisField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::InvalidParameter(alloc::format!("{q} is not a prime power")))?;
        if q > 16 {
            return Err(Error::InvalidParameter(alloc::format!("GF({q}) unsupported, q must be <= 16")));
        }
        let red = reduction_poly(p, k)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("no reduction polynomial for GF({q})")))?;
        let digits = |mut a: usize| -> Vec<usize> {
            let mut d = vec![0; k];
            for x in d.iter_mut() {
                *x = a % p;
                a /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &x| acc * p + x);
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s) as u8;
                // schoolbook product then reduce the high coefficients
                let mut prod = vec![0usize; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    // x^k = -(red[0] + red[1] x + ...)
                    for (i, &r) in red.iter().enumerate() {
                        let t = prod[deg - k + i] + (p - (c * r) % p);
                        prod[deg - k + i] = t % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..k]) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (0..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .ok_or_else(|| Error::InvalidParameter(alloc::format!("GF({q}) table is not a field")))?
                    as u8;
            }
        }
        Ok(GaloisField { p, degree: k, q, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b] as usize)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// The nonzero squares.
    pub fn nonzero_squares(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (1..self.q).map(|x| self.mul(x, x)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            // multiplicative group has no zero divisors
            for a in 1..q {
                for b in 1..q {
                    assert_ne!(f.mul(a, b), 0);
                }
            }
        }
    }

    #[test]
    fn squares_count() {
        assert_eq!(GaloisField::new(13).unwrap().nonzero_squares().len(), 6);
        assert_eq!(GaloisField::new(9).unwrap().nonzero_squares().len(), 4);
        assert_eq!(GaloisField::new(4).unwrap().nonzero_squares().len(), 3);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(25).is_err());
    }
}
