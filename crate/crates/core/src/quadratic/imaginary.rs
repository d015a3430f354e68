use num_integer::Integer;

use crate::arith::{fundamental_discriminant, is_square_free, kronecker};
use crate::error::{Error, Result};

/// Primitive reduced positive definite forms `(a, b, c)` of discriminant
/// `disc < 0`: `|b| ≤ a ≤ c`, with `b ≥ 0` whenever `|b| = a` or `a = c`.
pub fn reduced_forms(disc: i64) -> Vec<(i64, i64, i64)> {
    assert!(disc < 0 && matches!(disc.rem_euclid(4), 0 | 1), "bad discriminant {disc}");
    let n = -disc;
    let mut out = Vec::new();
    // a ≤ sqrt(|D|/3)
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                out.push((a, b, c));
            }
        }
        a += 1;
    }
    out
}

fn roots_of_unity(disc: i64) -> i64 {
    match disc {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// `h(D) = w/(2|D|) · |Σ_{a=1}^{|D|} (D/a)·a|` for a fundamental `D < 0`.
pub fn dirichlet_class_number(disc: i64) -> Result<u64> {
    if disc >= 0 {
        return Err(Error::Precondition(format!("discriminant {disc} is not negative")));
    }
    let n = -disc;
    let sum: i128 = (1..=n).map(|a| kronecker(disc, a) as i128 * a as i128).sum();
    let num = roots_of_unity(disc) as i128 * sum.abs();
    let den = 2 * n as i128;
    if num % den != 0 {
        return Err(Error::NonIntegral {
            quantity: format!("Dirichlet class number sum for D = {disc}"),
            value: format!("{num}/{den}"),
        });
    }
    Ok((num / den) as u64)
}

/// Class number of `Q(√d)` for square-free `d < 0`, by form counting and by
/// the Dirichlet sum. The two must agree.
pub fn class_number_imaginary(d: i64) -> Result<u64> {
    if d >= 0 {
        return Err(Error::Precondition(format!("d = {d} must be negative")));
    }
    if !is_square_free(d) {
        return Err(Error::NotSquareFree(d));
    }
    let disc = fundamental_discriminant(d)?;
    let by_forms = reduced_forms(disc).len() as u64;
    let by_sum = dirichlet_class_number(disc)?;
    if by_forms != by_sum {
        return Err(Error::OracleDisagreement {
            quantity: format!("h({d})"),
            left: format!("{by_forms} (reduced forms)"),
            right: format!("{by_sum} (Dirichlet sum)"),
        });
    }
    Ok(by_forms)
}
