use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{fundamental_discriminant, kronecker, ExactRational, PrimeInput};
use crate::error::{Error, Result};

use super::real::narrow_class_number;
use super::unit::{fundamental_unit, unit_of_discriminant, QuadraticUnit};
use super::zeta::zeta_f_minus1;

/// Invariants of `F = Q(√p)` and of the order `A = Z[√p]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealQuadraticProfile {
    pub p: PrimeInput,
    #[serde(rename = "d_F")]
    pub d_f: i64,
    pub unit: QuadraticUnit,
    pub h: u64,
    pub h_plus: u64,
    /// `[O_F^× : A^×]`, only for `p ≡ 1 (mod 4)`.
    pub varpi: Option<u32>,
    /// `h(A)`, only for `p ≡ 1 (mod 4)`.
    #[serde(rename = "h_A")]
    pub h_a: Option<u64>,
    pub zeta_minus1: ExactRational,
}

fn require_one_mod4(p: PrimeInput) -> Result<()> {
    if p.is_one_mod4() {
        Ok(())
    } else {
        Err(Error::ResidueClass { p: p.get(), required: "p ≡ 1 (mod 4)" })
    }
}

fn varpi_from_unit(p: PrimeInput, unit: &QuadraticUnit) -> Result<u32> {
    let varpi = if unit.half { 3 } else { 1 };
    if p.residue_mod8() == 1 && varpi != 1 {
        return Err(Error::InvariantViolation {
            identity: "varpi-mod8".into(),
            detail: format!("ϖ = {varpi} for p = {p} ≡ 1 (mod 8)"),
        });
    }
    // Independent check: the fundamental unit of Z[√p] must be ε^ϖ.
    let (t, u, _) = unit_of_discriminant(4 * p.as_i64())?;
    let order_unit = (t, u * 2);
    let power = unit.pow_halves(p.get(), varpi);
    if order_unit != power {
        return Err(Error::OracleDisagreement {
            quantity: format!("unit index for p = {p}"),
            left: format!("ε^{varpi} = ({} + {}√p)/2", power.0, power.1),
            right: format!("unit of Z[√p] = ({} + {}√p)/2", order_unit.0, order_unit.1),
        });
    }
    Ok(varpi)
}

fn order_class_number(p: PrimeInput, h: u64, varpi: u32) -> Result<u64> {
    let num = (2 - kronecker(2, p.as_i64()) as i64) as u64 * h;
    if num % varpi as u64 != 0 {
        return Err(Error::NonIntegral {
            quantity: format!("h(A) for p = {p}"),
            value: format!("{num}/{varpi}"),
        });
    }
    let h_a = num / varpi as u64;
    if h_a.is_even() {
        return Err(Error::InvariantViolation {
            identity: "odd-h-A".into(),
            detail: format!("h(A) = {h_a} for p = {p}"),
        });
    }
    Ok(h_a)
}

/// `ϖ = [O_F^× : Z[√p]^×]`: 1 when `ε ∈ Z[√p]`, 3 otherwise.
pub fn unit_index_varpi(p: PrimeInput) -> Result<u32> {
    require_one_mod4(p)?;
    varpi_from_unit(p, &fundamental_unit(p)?)
}

/// `h(A) = (2 - (2/p))·h(p)/ϖ`, which is always odd.
pub fn class_number_order_a(p: PrimeInput) -> Result<u64> {
    require_one_mod4(p)?;
    let unit = fundamental_unit(p)?;
    let h = narrow_class_number(p.as_i64()); // N(ε) = -1 here, so h = h₊
    order_class_number(p, h, varpi_from_unit(p, &unit)?)
}

/// All invariants of `Q(√p)` a census needs, with their internal
/// consistency checked.
pub fn real_quadratic_profile(p: PrimeInput) -> Result<RealQuadraticProfile> {
    let d_f = fundamental_discriminant(p.as_i64())?;
    let unit = fundamental_unit(p)?;
    if !unit.satisfies_norm_equation(p.get()) {
        return Err(Error::InvariantViolation {
            identity: "unit-pell".into(),
            detail: format!("{unit:?} for p = {p}"),
        });
    }
    if (unit.norm == 1) != p.is_three_mod4() {
        return Err(Error::InvariantViolation {
            identity: "unit-norm-residue".into(),
            detail: format!("N(ε) = {} for p = {p}", unit.norm),
        });
    }
    let h_plus = narrow_class_number(d_f);
    let h = if unit.norm == -1 {
        h_plus
    } else if h_plus.is_even() {
        h_plus / 2
    } else {
        return Err(Error::InvariantViolation {
            identity: "narrow-class-ratio".into(),
            detail: format!("h+ = {h_plus} is odd but N(ε) = +1 for p = {p}"),
        });
    };
    let (varpi, h_a) = if p.is_one_mod4() {
        let varpi = varpi_from_unit(p, &unit)?;
        (Some(varpi), Some(order_class_number(p, h, varpi)?))
    } else {
        (None, None)
    };
    let zeta_minus1 = zeta_f_minus1(p)?;
    if !zeta_minus1.is_positive() || !(&zeta_minus1 * (60 * d_f)).is_integer() {
        return Err(Error::InvariantViolation {
            identity: "zeta-integrality".into(),
            detail: format!("ζ_F(-1) = {zeta_minus1} for p = {p}"),
        });
    }
    Ok(RealQuadraticProfile { p, d_f, unit, h, h_plus, varpi, h_a, zeta_minus1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn prime(p: u64) -> PrimeInput {
        PrimeInput::new(p).unwrap()
    }

    #[test]
    fn varpi_values() {
        assert_eq!(unit_index_varpi(prime(5)).unwrap(), 3);
        assert_eq!(unit_index_varpi(prime(17)).unwrap(), 1);
        assert_eq!(unit_index_varpi(prime(13)).unwrap(), 3);
        assert!(matches!(unit_index_varpi(prime(7)), Err(Error::ResidueClass { p: 7, .. })));
    }

    #[test]
    fn order_class_numbers() {
        assert_eq!(class_number_order_a(prime(5)).unwrap(), 1);
        assert_eq!(class_number_order_a(prime(13)).unwrap(), 1);
        assert_eq!(class_number_order_a(prime(17)).unwrap(), 1);
        assert!(class_number_order_a(prime(3)).is_err());
    }

    #[test]
    fn profile_of_five() {
        let prof = real_quadratic_profile(prime(5)).unwrap();
        assert_eq!(prof.d_f, 5);
        assert_eq!((prof.h, prof.h_plus, prof.varpi, prof.h_a), (1, 1, Some(3), Some(1)));
        assert_eq!(prof.zeta_minus1, q(1, 30));
    }

    #[test]
    fn profile_of_seven() {
        let prof = real_quadratic_profile(prime(7)).unwrap();
        assert_eq!(prof.d_f, 28);
        assert_eq!((prof.h, prof.h_plus, prof.varpi, prof.h_a), (1, 2, None, None));
        assert_eq!(prof.unit.norm, 1);
    }
}
