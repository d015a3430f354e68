//! Slow, independent re-derivations used as test oracles. Nothing here calls
//! into the library's arithmetic.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::ops::{Add, Div, Mul, Sub};

use ppsp_census::ExactRational;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Small exact fraction for oracle arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac(pub i128, pub i128);

impl Frac {
    pub fn int(n: i128) -> Frac {
        Frac(n, 1)
    }

    fn norm(self) -> Frac {
        let g = gcd(self.0, self.1);
        let s = if self.1 < 0 { -1 } else { 1 };
        Frac(s * self.0 / g, s * self.1 / g)
    }

    pub fn exact(self) -> ExactRational {
        ExactRational::new(self.0 as i64, self.1 as i64)
    }

    pub fn integer(self) -> Option<i64> {
        let f = self.norm();
        (f.1 == 1).then_some(f.0 as i64)
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, o: Frac) -> Frac {
        Frac(self.0 * o.1 + o.0 * self.1, self.1 * o.1).norm()
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, o: Frac) -> Frac {
        Frac(self.0 * o.1 - o.0 * self.1, self.1 * o.1).norm()
    }
}

impl Mul<i128> for Frac {
    type Output = Frac;
    fn mul(self, k: i128) -> Frac {
        Frac(self.0 * k, self.1).norm()
    }
}

impl Div<i128> for Frac {
    type Output = Frac;
    fn div(self, k: i128) -> Frac {
        Frac(self.0, self.1 * k).norm()
    }
}

pub fn is_prime_naive(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(a/ℓ)` for an odd prime `ℓ` by listing the squares.
pub fn legendre_by_squares(a: i64, l: i64) -> i32 {
    let a = a.rem_euclid(l);
    if a == 0 {
        0
    } else if (1..l).any(|x| x * x % l == a) {
        1
    } else {
        -1
    }
}

/// `χ_D(a)` for a discriminant `D`, multiplicatively from its values at primes.
pub fn character(disc: i64, a: i64) -> i32 {
    let mut a = a;
    let mut out = 1;
    let mut l = 2;
    while a > 1 {
        if l * l > a {
            l = a;
        }
        while a % l == 0 {
            a /= l;
            out *= if l == 2 {
                match disc.rem_euclid(8) {
                    1 => 1,
                    5 => -1,
                    _ => 0,
                }
            } else {
                legendre_by_squares(disc, l)
            };
        }
        l += 1;
    }
    out
}

fn is_square_free(n: i64) -> bool {
    let n = n.abs();
    (2..).take_while(|d| d * d <= n).all(|d| n % (d * d) != 0)
}

/// Class number of `Q(√d)`, `d < 0` square-free, by
/// `h = (2 - χ(2))⁻¹ Σ_{0 < a < |D|/2} χ(a)` (with the two unit-rich fields
/// special-cased).
pub fn imaginary_class_number(d: i64) -> i64 {
    assert!(d < 0 && is_square_free(d));
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    if disc == -3 || disc == -4 {
        return 1;
    }
    let n = -disc;
    let s: i64 = (1..(n + 1) / 2).map(|a| character(disc, a) as i64).sum();
    let denom = 2 - character(disc, 2) as i64;
    assert_eq!(s % denom, 0, "half sum not divisible at D = {disc}");
    s / denom
}

fn sigma(n: i64) -> i64 {
    (1..=n).filter(|k| n % k == 0).sum()
}

/// `ζ_F(-1)` for `F = Q(√p)` by the divisor-sum formula, done naively.
pub fn zeta_naive(p: i64) -> Frac {
    let d = if p % 4 == 1 { p } else { 4 * p };
    let mut total = 0i64;
    let mut b = 0;
    while (b + 1) * (b + 1) < d {
        b += 1;
    }
    let top = b;
    b = -top;
    while b <= top {
        if (d - b * b) % 4 == 0 {
            total += sigma((d - b * b) / 4);
        }
        b += 1;
    }
    Frac(total as i128, 60).norm()
}

/// Inputs of the closed forms, each from the oracles above.
#[derive(Debug, Clone, Copy)]
pub struct OracleInputs {
    pub z: Frac,
    pub h: i128,
    pub h2: i128,
    pub h3: i128,
    pub c2: i128,
    pub c3: i128,
}

pub fn oracle_inputs(p: i64) -> OracleInputs {
    assert!(p > 5 && is_prime_naive(p));
    OracleInputs {
        z: zeta_naive(p),
        h: imaginary_class_number(-p) as i128,
        h2: imaginary_class_number(-2 * p) as i128,
        h3: imaginary_class_number(-3 * p) as i128,
        c2: if (p * p - 1) / 8 % 2 == 0 { 1 } else { -1 },
        c3: if p % 3 == 1 { 1 } else { -1 },
    }
}

pub fn oracle_h_pp(p: i64) -> Frac {
    let i = oracle_inputs(p);
    if p % 4 == 1 {
        i.z * (9 - 2 * i.c2) / 2 + Frac::int(3 * i.h) / 8 + Frac::int(i.h3 * (3 + i.c2)) / 6
    } else {
        i.z / 2 + Frac::int(i.h * (11 - 3 * i.c2)) / 8 + Frac::int(i.h3) / 6
    }
}

/// `(λ₁, λ₁₆)` for `p ≡ 1 (mod 4)`, `p ≥ 13`.
pub fn oracle_lambdas(p: i64) -> (Frac, Frac) {
    let i = oracle_inputs(p);
    let l1 = i.z / 2 + Frac::int(i.h) / 8 + Frac::int(i.h3) / 6;
    let l16 = i.z * (4 - i.c2) + Frac::int(i.h) / 4 + Frac::int(i.h3 * (2 + i.c2)) / 6;
    (l1, l16)
}

pub fn oracle_t_pp(p: i64) -> Frac {
    if p % 4 == 1 {
        let (a, b) = oracle_lambdas(p);
        return a + b;
    }
    let i = oracle_inputs(p);
    i.z / 4 + Frac::int(i.h * (17 - i.c2)) / 16 + Frac::int(i.h2) / 8 + Frac::int(i.h3) / 12
}

/// Nonzero refined counts for `p ≡ 3 (mod 4)`, `p ≥ 7`.
pub fn oracle_refined_three_mod4(p: i64) -> BTreeMap<&'static str, i64> {
    let i = oracle_inputs(p);
    let (c2, c3) = (i.c2, i.c3);
    let entries = [
        (
            "C2",
            i.z / 2 - Frac::int(i.h * (11 - 3 * c2)) / 8 - Frac::int(i.h3) / 12 + Frac(c2, 4) - Frac(c3, 2)
                + Frac(5, 4),
        ),
        ("C4", Frac::int((11 - 3 * c2) * (i.h - 1)) / 4 - Frac::int(c2 - c3)),
        ("C6", Frac::int(i.h3) / 4 - Frac(c2, 2) + Frac(c3, 2) - Frac::int(1)),
        ("Q8", Frac::int(1)),
        ("Q12", Frac::int(1 - c3)),
        ("E24", Frac(1 + c2, 2)),
    ];
    entries
        .into_iter()
        .map(|(g, v)| (g, v.integer().unwrap_or_else(|| panic!("{g} = {v:?} at p = {p}"))))
        .filter(|&(_, n)| n != 0)
        .collect()
}

/// Whether `y² = x³ + ax + b` is supersingular over `F_p`, `p ≥ 5`, by
/// checking `#E(F_p) = p + 1`.
pub fn supersingular(p: i64, a: i64, b: i64) -> bool {
    let mut squares = vec![0i64; p as usize];
    for y in 0..p {
        squares[(y * y % p) as usize] += 1;
    }
    let affine: i64 = (0..p).map(|x| squares[((x * x % p * x + a * x + b) % p) as usize]).sum();
    affine + 1 == p + 1
}

/// Supersingular curves over `F_p`-bar by automorphism group, `p ≥ 5`:
/// `j = 0` (group `C6`) and `j = 1728` (`C4`) by point counting, the rest
/// (`C2`) from the Eichler mass `(p - 1)/24`.
pub fn elliptic_oracle(p: i64) -> BTreeMap<&'static str, i64> {
    let c6 = supersingular(p, 0, 1) as i64;
    let c4 = supersingular(p, 1, 0) as i64;
    let c2 = (Frac(p as i128 - 1, 24) - Frac(c4 as i128, 4) - Frac(c6 as i128, 6)) * 2;
    let c2 = c2.integer().expect("Eichler mass leaves an integral C2 count");
    [("C2", c2), ("C4", c4), ("C6", c6)].into_iter().filter(|&(_, n)| n != 0).collect()
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for j in 1..n {
        let keep: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let minor: Vec<Vec<i64>> = keep.iter().map(|&r| keep.iter().map(|&c| m[r][c]).collect()).collect();
        let sign = if j % 2 == 1 { 1 } else { -1 };
        total += sign * m[0][j] as i128 * pfaffian(&minor);
    }
    total
}
