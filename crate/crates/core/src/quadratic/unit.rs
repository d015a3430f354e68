use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::PrimeInput;
use crate::error::{Error, Result};

/// Continued-fraction expansions longer than this are abandoned.
pub const PERIOD_BOUND: usize = 1_000_000;

/// A unit `ε > 1` of `Q(√p)`: `(t + u√p)/2` when `half`, else `t + u√p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticUnit {
    #[serde(with = "bigint_string")]
    pub t: BigInt,
    #[serde(with = "bigint_string")]
    pub u: BigInt,
    pub half: bool,
    pub norm: i32,
}

impl QuadraticUnit {
    /// Coordinates `(T, U)` with `ε = (T + U√p)/2`.
    pub fn halves(&self) -> (BigInt, BigInt) {
        if self.half {
            (self.t.clone(), self.u.clone())
        } else {
            (&self.t * 2, &self.u * 2)
        }
    }

    /// Checks `N(ε) = norm` against `p`.
    pub fn satisfies_norm_equation(&self, p: u64) -> bool {
        let lhs = &self.t * &self.t - BigInt::from(p) * &self.u * &self.u;
        let rhs = if self.half { 4 * self.norm } else { self.norm };
        lhs == BigInt::from(rhs) && (!self.half || self.t.is_odd() == self.u.is_odd())
    }

    /// `ε^k` in half coordinates.
    pub fn pow_halves(&self, p: u64, k: u32) -> (BigInt, BigInt) {
        let base = self.halves();
        let mut acc = (BigInt::from(2), BigInt::zero());
        for _ in 0..k {
            acc = mul_halves(&acc, &base, p);
        }
        acc
    }
}

/// `((a + b√p)/2) · ((c + d√p)/2)` in half coordinates.
fn mul_halves(x: &(BigInt, BigInt), y: &(BigInt, BigInt), p: u64) -> (BigInt, BigInt) {
    let p = BigInt::from(p);
    let t = &x.0 * &y.0 + p * &x.1 * &y.1;
    let u = &x.0 * &y.1 + &x.1 * &y.0;
    (t / 2, u / 2)
}

/// Fundamental unit `(t + u√D)/2` of the quadratic order of discriminant
/// `D > 0`, returned as `(t, u, norm)` with `t² - D·u² = 4·norm`.
///
/// Expands the reduced number `ω = (b + √D)/2`, `b` the largest integer
/// below `√D` with `b ≡ D (mod 2)`, as a purely periodic continued fraction.
/// With `ℓ` the period and `q_k` the convergent denominators, the unit is
/// `q_{ℓ-1}·ω + q_{ℓ-2}` and its norm is `(-1)^ℓ`.
pub fn unit_of_discriminant(disc: i64) -> Result<(BigInt, BigInt, i32)> {
    if disc <= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::Precondition(format!("{disc} is not a positive discriminant")));
    }
    let s = disc.sqrt();
    if s * s == disc {
        return Err(Error::Precondition(format!("{disc} is a square")));
    }
    let b = if (s - disc).rem_euclid(2) == 0 { s } else { s - 1 };
    let (mut pp, mut qq) = (b, 2i64);
    // q_{k-2}, q_{k-1}
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    let mut len = 0usize;
    loop {
        let a = Integer::div_floor(&(pp + s), &qq);
        let q_next = &q_cur * a + &q_prev;
        q_prev = std::mem::replace(&mut q_cur, q_next);
        len += 1;
        let p_next = a * qq - pp;
        let q_new = (disc - p_next * p_next) / qq;
        pp = p_next;
        qq = q_new;
        if pp == b && qq == 2 {
            break;
        }
        if len >= PERIOD_BOUND {
            return Err(Error::PeriodBound(disc));
        }
    }
    let t = &q_cur * b + &q_prev * 2;
    let u = q_cur;
    let norm = if len % 2 == 0 { 1 } else { -1 };
    Ok((t, u, norm))
}

/// Fundamental unit of the ring of integers of `Q(√p)`.
pub fn fundamental_unit(p: PrimeInput) -> Result<QuadraticUnit> {
    let pv = p.as_i64();
    if p.is_one_mod4() {
        let (t, u, norm) = unit_of_discriminant(pv)?;
        if t.is_odd() {
            Ok(QuadraticUnit { t, u, half: true, norm })
        } else {
            Ok(QuadraticUnit { t: t / 2, u: u / 2, half: false, norm })
        }
    } else {
        let (t, u, norm) = unit_of_discriminant(4 * pv)?;
        // (t + u·2√p)/2 = t/2 + u√p
        Ok(QuadraticUnit { t: t / 2, u, half: false, norm })
    }
}

/// Searches for a unit `η` with `1 < η < ε` by trying every candidate
/// coordinate `u' < u` and testing whether `p·u'² ± c` is a square
/// (`c = 4` for half-integral coordinates, else 1).
///
/// When `u` exceeds two million the search stops at the largest `u'` a
/// unit `η ≤ √ε` can have, `u'² ≤ (2u(⌊√p⌋ + 1) + 4)/p`: a non-fundamental
/// `ε` is `η^k` with `k ≥ 2`, so its fundamental unit lies below `√ε`.
pub fn smaller_unit_exists(p: PrimeInput, unit: &QuadraticUnit) -> bool {
    use num_traits::ToPrimitive;
    let pv = p.get() as u128;
    let (c, u) = if p.is_one_mod4() { (4u128, unit.halves().1) } else { (1, unit.u.clone()) };
    let Some(u) = u.to_u128() else { return false };
    let limit = if u <= 2_000_000 { u } else { ((2 * u * (pv.sqrt() + 1) + 4) / pv).sqrt() + 1 };
    (1..limit.min(u)).any(|v| {
        let n = pv * v * v;
        let is_square = |m: u128| {
            let r = m.sqrt();
            r * r == m && r > 0
        };
        is_square(n + c) || (n >= c && is_square(n - c))
    })
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
