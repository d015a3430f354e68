use std::collections::BTreeSet;

use num_integer::{Integer, Roots};

use crate::arith::{fundamental_discriminant, PrimeInput};
use crate::error::{Error, Result};

use super::unit::fundamental_unit;

/// Primitive reduced indefinite forms `(a, b, c)` of discriminant `disc > 0`:
/// `|√D - 2|a|| < b < √D`, with `a` of either sign.
pub fn reduced_indefinite_forms(disc: i64) -> Vec<(i64, i64, i64)> {
    let s = disc.sqrt();
    assert!(disc > 0 && s * s != disc, "bad discriminant {disc}");
    let mut out = Vec::new();
    for b in 1..=s {
        if (b - disc).rem_euclid(2) != 0 {
            continue;
        }
        // a·c = (b² - D)/4 < 0
        let ac = (disc - b * b) / 4;
        for m in 1..=ac {
            if ac % m != 0 || 2 * m + b <= s || 2 * m - b > s {
                continue;
            }
            for a in [m, -m] {
                let c = -ac / a;
                if a.gcd(&b).gcd(&c) == 1 {
                    out.push((a, b, c));
                }
            }
        }
    }
    out.sort();
    out
}

/// One step of the reduction operator: `(a, b, c) ↦ (c, b', (b'² - D)/4c)`
/// with `b' ≡ -b (mod 2|c|)` and `√D - 2|c| < b' < √D`.
fn rho(form: (i64, i64, i64), disc: i64, s: i64) -> (i64, i64, i64) {
    let (_, b, c) = form;
    let m = 2 * c.abs();
    // largest b' ≤ s with b' ≡ -b (mod m)
    let b2 = s - (s + b).rem_euclid(m);
    (c, b2, (b2 * b2 - disc) / (4 * c))
}

/// Narrow class number: the number of rho-cycles of reduced forms.
pub fn narrow_class_number(disc: i64) -> u64 {
    let s = disc.sqrt();
    let mut unseen: BTreeSet<_> = reduced_indefinite_forms(disc).into_iter().collect();
    let mut cycles = 0;
    while let Some(&start) = unseen.iter().next() {
        cycles += 1;
        let mut f = start;
        loop {
            unseen.remove(&f);
            f = rho(f, disc, s);
            if f == start {
                break;
            }
            debug_assert!(unseen.contains(&f), "rho left the reduced set at {f:?}");
        }
    }
    cycles
}

/// `(h, h₊)` for `F = Q(√p)`. `h₊` counts cycles; `h` follows from the norm
/// of the fundamental unit.
pub fn class_number_real(p: PrimeInput) -> Result<(u64, u64)> {
    let disc = fundamental_discriminant(p.as_i64())?;
    let h_plus = narrow_class_number(disc);
    let unit = fundamental_unit(p)?;
    let h = if unit.norm == -1 {
        h_plus
    } else if h_plus % 2 == 0 {
        h_plus / 2
    } else {
        return Err(Error::InvariantViolation {
            identity: "narrow-class-ratio".into(),
            detail: format!("h+ = {h_plus} is odd but N(ε) = +1 for p = {p}"),
        });
    };
    Ok((h, h_plus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(p: u64) -> (u64, u64) {
        class_number_real(PrimeInput::new(p).unwrap()).unwrap()
    }

    #[test]
    fn small_primes() {
        assert_eq!(h(5), (1, 1));
        assert_eq!(h(7), (1, 2));
        assert_eq!(h(13), (1, 1));
        assert_eq!(h(2), (1, 1));
        assert_eq!(h(3), (1, 2));
    }

    #[test]
    fn class_number_three() {
        assert_eq!(h(79), (3, 6));
        assert_eq!(h(223), (3, 6));
        assert_eq!(h(229), (3, 3));
    }

    #[test]
    fn rho_preserves_reduced_set() {
        for disc in [28, 316, 229, 8, 12, 401 * 4] {
            let s = disc.sqrt();
            let forms = reduced_indefinite_forms(disc);
            for &f in &forms {
                assert!(forms.contains(&rho(f, disc, s)), "{f:?} at {disc}");
            }
        }
    }
}
