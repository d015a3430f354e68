use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for all `u64`.
///
/// Miller-Rabin with the first twelve primes as witnesses, which has no
/// pseudoprimes below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A validated prime together with its residues mod 4 and mod 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeInput {
    p: u64,
}

impl PrimeInput {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // Everything downstream squares or triples p inside i64.
        if p > (1 << 40) {
            return Err(Error::Precondition(format!("p = {p} exceeds the supported range")));
        }
        Ok(PrimeInput { p })
    }

    pub fn get(self) -> u64 {
        self.p
    }

    pub fn as_i64(self) -> i64 {
        self.p as i64
    }

    pub fn residue_mod4(self) -> u64 {
        self.p % 4
    }

    pub fn residue_mod8(self) -> u64 {
        self.p % 8
    }

    pub fn is_one_mod4(self) -> bool {
        self.p % 4 == 1
    }

    pub fn is_three_mod4(self) -> bool {
        self.p % 4 == 3
    }
}

impl std::fmt::Display for PrimeInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// Primes in `[lo, hi]`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> Vec<PrimeInput> {
    (lo..=hi).filter(|&n| is_prime(n)).map(|p| PrimeInput { p }).collect()
}
