//! Modular arithmetic over small moduli and the geometric sums
//! `e_s(k) = 1 + s + ... + s^(k-1)` that parameterize cyclic gamma functions.

use crate::error::{Error, Result};

fn check_modulus(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    Ok(())
}

/// Reduce a possibly negative integer into `[0, m)`.
pub fn reduce(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

/// `base^exp mod m`.
pub fn mod_pow(base: i64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 2);
    let m128 = m as u128;
    let mut b = reduce(base, m) as u128;
    let mut acc: u128 = 1 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least `d >= 1` with `x^d = 1 (mod m)`.
pub fn mult_order(x: i64, m: u64) -> Result<u64> {
    check_modulus(m)?;
    let r = reduce(x, m);
    if gcd(r, m) != 1 {
        return Err(Error::NotAUnit { x, m });
    }
    let mut d = 1;
    let mut y = r;
    while y != 1 {
        y = y * r % m;
        d += 1;
    }
    Ok(d)
}

/// The smallest `t` in `[2, m)` of multiplicative order `order` modulo `m`,
/// or 1 when `order == 1`.
pub fn canonical_action_exponent(order: u64, m: u64) -> Result<u64> {
    check_modulus(m)?;
    if order == 1 {
        return Ok(1);
    }
    (2..m)
        .find(|&t| gcd(t, m) == 1 && mult_order(t as i64, m).ok() == Some(order))
        .ok_or(Error::NoActionExponent { order, m })
}

/// `e_s(k) = sum_{i<k} s^i mod m`.
pub fn es(k: u64, s: i64, m: u64) -> u64 {
    let s = reduce(s, m);
    let mut acc = 0;
    let mut pow = 1 % m;
    for _ in 0..k {
        acc = (acc + pow) % m;
        pow = pow * s % m;
    }
    acc
}

/// The values `e_s(0), ..., e_s(m-1)` together with their inverse.
///
/// Construction fails unless `k -> e_s(k)` is a permutation of `Z/m`, which for
/// `m = p^n` happens exactly when `s = 1 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsTable {
    pub s: u64,
    pub modulus: u64,
    pub values: Vec<u64>,
    inverse: Vec<u64>,
}

impl EsTable {
    pub fn new(s: i64, m: u64) -> Result<Self> {
        check_modulus(m)?;
        let s = reduce(s, m);
        let mut values = Vec::with_capacity(m as usize);
        let mut acc = 0;
        let mut pow = 1;
        for _ in 0..m {
            values.push(acc);
            acc = (acc + pow) % m;
            pow = pow * s % m;
        }
        let mut inverse = vec![u64::MAX; m as usize];
        for (k, &v) in values.iter().enumerate() {
            if inverse[v as usize] != u64::MAX {
                return Err(Error::EsNotBijective { s, m });
            }
            inverse[v as usize] = k as u64;
        }
        Ok(Self {
            s,
            modulus: m,
            values,
            inverse,
        })
    }

    pub fn es(&self, k: u64) -> u64 {
        self.values[(k % self.modulus) as usize]
    }

    /// The unique `k` in `[0, m)` with `e_s(k) = r`.
    pub fn fs(&self, r: u64) -> u64 {
        self.inverse[(r % self.modulus) as usize]
    }
}

/// Inverse of `e_s` modulo `m`; see [`EsTable::fs`].
pub fn fs(r: u64, s: i64, m: u64) -> Result<u64> {
    Ok(EsTable::new(s, m)?.fs(r))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// How `p` divides `q - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PDivides {
    /// `p` does not divide `q - 1`.
    No,
    /// `p` divides `q - 1` but `p^2` does not.
    Exactly,
    /// `p^2` divides `q - 1`.
    Squared,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityProfile {
    pub p: u64,
    pub q: u64,
    pub p_divides_q_minus_1: PDivides,
    pub q_divides_p_minus_1: bool,
    /// Applicable group types among 1..=4, ascending.
    pub types: Vec<u8>,
}

pub(crate) fn validate_primes(p: u64, q: u64) -> Result<()> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    if p == 2 {
        return Err(Error::EvenP);
    }
    if p * p * q > 10_000 {
        return Err(Error::GroupTooLarge(p * p * q));
    }
    Ok(())
}

/// Which of the four families of order `p^2 q` with cyclic Sylow
/// `p`-subgroup exist for the given primes.
pub fn divisibility_profile(p: u64, q: u64) -> Result<DivisibilityProfile> {
    validate_primes(p, q)?;
    let pd = if (q - 1) % (p * p) == 0 {
        PDivides::Squared
    } else if (q - 1) % p == 0 {
        PDivides::Exactly
    } else {
        PDivides::No
    };
    let qd = (p - 1) % q == 0;
    let mut types = vec![1];
    if pd >= PDivides::Exactly {
        types.push(2);
    }
    if pd == PDivides::Squared {
        types.push(3);
    }
    if qd {
        types.push(4);
    }
    Ok(DivisibilityProfile {
        p,
        q,
        p_divides_q_minus_1: pd,
        q_divides_p_minus_1: qd,
        types,
    })
}
