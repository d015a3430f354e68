/// Parity of the valuation of the scalar `γ` defining the hermitian form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Whether a self-dual lattice exists in a rank-`n` hermitian space over a
/// local quaternion algebra `B`.
///
/// The only obstruction: `B` is a division algebra, `n` is odd and the
/// valuation of `γ` is even. When `B` is split the parity is irrelevant.
pub fn hermitian_self_dual_exists(division_algebra: bool, rank: u32, ord_gamma_parity: Parity) -> bool {
    !(division_algebra && rank % 2 == 1 && ord_gamma_parity == Parity::Even)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decision_table() {
        assert!(!hermitian_self_dual_exists(true, 3, Parity::Even));
        assert!(hermitian_self_dual_exists(true, 2, Parity::Even));
        assert!(hermitian_self_dual_exists(false, 3, Parity::Even));
        assert!(hermitian_self_dual_exists(true, 3, Parity::Odd));
    }
}
