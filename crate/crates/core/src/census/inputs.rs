use crate::arith::{kronecker, ExactRational, PrimeInput};
use crate::error::Result;
use crate::quadratic::{class_number_imaginary, RealQuadraticProfile};

/// The arithmetic data every closed-form count is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaInputs {
    pub p: PrimeInput,
    /// `(2/p)`
    pub chi2: i64,
    /// `(p/3)`
    pub chi3: i64,
    /// `(-4/p)`
    pub chi_m4: i64,
    /// `(-3/p)`
    pub chi_m3: i64,
    /// `ζ_F(-1)`
    pub zeta: ExactRational,
    /// `h(-p)`
    pub h_p: u64,
    /// `h(-2p)`, absent for `p = 2`.
    pub h_2p: Option<u64>,
    /// `h(-3p)`, absent for `p = 3`.
    pub h_3p: Option<u64>,
    pub varpi: Option<u32>,
}

impl FormulaInputs {
    pub fn new(profile: &RealQuadraticProfile) -> Result<FormulaInputs> {
        let p = profile.p;
        let pv = p.as_i64();
        Ok(FormulaInputs {
            p,
            chi2: kronecker(2, pv) as i64,
            chi3: kronecker(pv, 3) as i64,
            chi_m4: kronecker(-4, pv) as i64,
            chi_m3: kronecker(-3, pv) as i64,
            zeta: profile.zeta_minus1.clone(),
            h_p: class_number_imaginary(-pv)?,
            h_2p: if pv == 2 { None } else { Some(class_number_imaginary(-2 * pv)?) },
            h_3p: if pv == 3 { None } else { Some(class_number_imaginary(-3 * pv)?) },
            varpi: profile.varpi,
        })
    }

    pub(crate) fn hp(&self) -> ExactRational {
        ExactRational::from(self.h_p)
    }

    pub(crate) fn h2p(&self) -> ExactRational {
        ExactRational::from(self.h_2p.expect("h(-2p) is only used for odd p"))
    }

    pub(crate) fn h3p(&self) -> ExactRational {
        ExactRational::from(self.h_3p.expect("h(-3p) is only used for p ≠ 3"))
    }

    pub(crate) fn varpi(&self) -> i64 {
        self.varpi.expect("ϖ is only used for p ≡ 1 (mod 4)") as i64
    }

    pub(crate) fn pv(&self) -> u64 {
        self.p.get()
    }
}
