use num_integer::Roots;

use crate::arith::{fundamental_discriminant, kronecker, ExactRational, PrimeInput};
use crate::error::{Error, Result};

fn sigma(n: i64) -> i64 {
    let mut total = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += d;
            if d * d != n {
                total += n / d;
            }
        }
        d += 1;
    }
    total
}

/// Siegel's formula: `ζ_F(-1) = (1/60) Σ a` over `b² + 4ac = d_F` with
/// `a, c > 0`. Summing over `a` for fixed `b` gives `σ((d_F - b²)/4)`.
pub fn zeta_siegel(d_f: i64) -> ExactRational {
    let mut total: i64 = 0;
    let s = d_f.sqrt();
    for b in -s..=s {
        if b * b < d_f && (d_f - b * b) % 4 == 0 {
            total += sigma((d_f - b * b) / 4);
        }
    }
    ExactRational::new(total, 60)
}

/// `ζ_F(-1) = B_{2,χ}/4 = (1/(24 d_F)) Σ_{a=1}^{d_F} χ(a)·a²`, `χ = (d_F/·)`.
pub fn zeta_bernoulli(d_f: i64) -> ExactRational {
    let sum: i128 = (1..=d_f).map(|a| kronecker(d_f, a) as i128 * (a as i128) * (a as i128)).sum();
    let sum = i64::try_from(sum).expect("Bernoulli sum fits in i64 for supported discriminants");
    ExactRational::new(sum, 24 * d_f)
}

/// `ζ_F(-1)` for `F = Q(√p)`, by both routes.
pub fn zeta_f_minus1(p: PrimeInput) -> Result<ExactRational> {
    let d_f = fundamental_discriminant(p.as_i64())?;
    let siegel = zeta_siegel(d_f);
    let bernoulli = zeta_bernoulli(d_f);
    if siegel != bernoulli {
        return Err(Error::OracleDisagreement {
            quantity: format!("zeta_F(-1) for p = {p}"),
            left: format!("{siegel} (Siegel)"),
            right: format!("{bernoulli} (Bernoulli)"),
        });
    }
    Ok(siegel)
}
