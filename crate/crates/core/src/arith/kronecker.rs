use crate::error::{Error, Result};

/// Kronecker symbol `(a/n)` for arbitrary integers.
///
/// Conventions: `(a/0)` is 1 for `a = ±1` and 0 otherwise; `(a/-1)` is the
/// sign of `a`; `(a/2)` is 0 for even `a`, 1 for `a ≡ ±1 (mod 8)` and -1
/// for `a ≡ ±3 (mod 8)`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut sign = 1;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    if n % 2 == 0 && a % 2 == 0 {
        return 0;
    }
    while n % 2 == 0 {
        n /= 2;
        if matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
    }
    // Jacobi symbol for odd positive n.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

pub fn is_square_free(d: i64) -> bool {
    let mut m = d.unsigned_abs();
    if m == 0 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= m {
        if m % f == 0 {
            m /= f;
            if m % f == 0 {
                return false;
            }
        }
        f += 1;
    }
    true
}

/// Discriminant of `Q(sqrt(d))` for square-free `d ∉ {0, 1}`.
pub fn fundamental_discriminant(d: i64) -> Result<i64> {
    if d == 0 || d == 1 {
        return Err(Error::Precondition(format!("fundamental discriminant undefined for d = {d}")));
    }
    if !is_square_free(d) {
        return Err(Error::NotSquareFree(d));
    }
    if d.rem_euclid(4) == 1 {
        Ok(d)
    } else {
        d.checked_mul(4).ok_or_else(|| Error::Precondition(format!("discriminant of {d} overflows")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Legendre symbol by listing the squares mod an odd prime.
    fn legendre_brute(a: i64, p: i64) -> i32 {
        let a = a.rem_euclid(p);
        if a == 0 {
            return 0;
        }
        if (1..p).any(|x| (x * x) % p == a) {
            1
        } else {
            -1
        }
    }

    fn small_primes(limit: i64) -> Vec<i64> {
        (3..limit).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
    }

    #[test]
    fn worked_values() {
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(-4, 11), -1);
        for a in -20..20 {
            assert_eq!(kronecker(a, 1), 1);
        }
        assert_eq!(kronecker(1, 0), 1);
        assert_eq!(kronecker(-1, 0), 1);
        assert_eq!(kronecker(2, 0), 0);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(4, 2), 0);
        assert_eq!(kronecker(-5, -1), -1);
        assert_eq!(kronecker(5, -1), 1);
    }

    #[test]
    fn agrees_with_residue_listing_below_500() {
        for p in small_primes(500) {
            for a in -60..=60 {
                assert_eq!(kronecker(a, p), legendre_brute(a, p), "({a}/{p})");
            }
        }
    }

    #[test]
    fn fundamental_discriminants() {
        assert_eq!(fundamental_discriminant(5).unwrap(), 5);
        assert_eq!(fundamental_discriminant(-7).unwrap(), -7);
        assert_eq!(fundamental_discriminant(-13).unwrap(), -52);
        assert_eq!(fundamental_discriminant(2).unwrap(), 8);
        assert_eq!(fundamental_discriminant(-1).unwrap(), -4);
        assert!(matches!(fundamental_discriminant(12), Err(Error::NotSquareFree(12))));
        assert!(fundamental_discriminant(0).is_err());
        assert!(fundamental_discriminant(1).is_err());
    }

    proptest! {
        #[test]
        fn multiplicative_in_top(a in -5000i64..5000, b in -5000i64..5000, n in 1i64..4000) {
            prop_assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        }

        #[test]
        fn multiplicative_in_bottom(a in -5000i64..5000, m in -2000i64..2000, n in -2000i64..2000) {
            prop_assume!(m != 0 && n != 0);
            prop_assert_eq!(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
        }

        #[test]
        fn discriminant_is_0_or_1_mod_4(d in -100_000i64..100_000) {
            prop_assume!(d != 0 && d != 1 && is_square_free(d));
            let disc = fundamental_discriminant(d).unwrap();
            prop_assert!(matches!(disc.rem_euclid(4), 0 | 1));
        }
    }
}
