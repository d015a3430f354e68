use num_integer::Integer;

use crate::error::{Error, Result};

use super::form::{AlternatingForm, Matrix};

/// `Uᵀ·A·U = ⊕ dᵢ·J` with `d₁ | d₂ | … | dₙ` and `U` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticDecomposition {
    pub transform: Matrix,
    pub factors: Vec<u64>,
}

impl SymplecticDecomposition {
    /// Recomputes `Uᵀ·A·U` and compares it with the block form.
    pub fn reproduces(&self, form: &AlternatingForm) -> Result<bool> {
        let factors: Vec<i64> = self.factors.iter().map(|&d| d as i64).collect();
        let target = AlternatingForm::block_diagonal(&factors)?;
        Ok(form.transformed(&self.transform)? == *target.gram())
    }
}

/// Working state: `g = Uᵀ·A·U` is maintained under every basis change.
struct Reducer {
    g: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
}

impl Reducer {
    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.g.swap(a, b);
        for row in &mut self.g {
            row.swap(a, b);
        }
        for row in &mut self.u {
            row.swap(a, b);
        }
    }

    /// `e_j ← e_j + c·e_i`
    fn add(&mut self, j: usize, i: usize, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let n = self.g.len();
        let fma = |x: i128, y: i128| y.checked_mul(c).and_then(|t| x.checked_add(t)).ok_or(Error::Overflow);
        for r in 0..n {
            self.g[r][j] = fma(self.g[r][j], self.g[r][i])?;
            self.u[r][j] = fma(self.u[r][j], self.u[r][i])?;
        }
        for col in 0..n {
            self.g[j][col] = fma(self.g[j][col], self.g[i][col])?;
        }
        Ok(())
    }

    /// Position `(i, j)`, `k ≤ i < j`, of the smallest nonzero entry in the
    /// trailing block starting at `k`.
    fn min_entry(&self, k: usize) -> Option<(usize, usize)> {
        let n = self.g.len();
        let mut best: Option<(i128, usize, usize)> = None;
        for i in k..n {
            for j in i + 1..n {
                let v = self.g[i][j].abs();
                if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Symplectic basis for `f`: repeatedly bring the smallest entry to the top
/// of the remaining block, clear its two rows by Euclidean steps, and fold
/// any entry it does not divide back in so the next pivot shrinks.
pub fn symplectic_normal_form(f: &AlternatingForm) -> Result<SymplecticDecomposition> {
    let n = f.dimension();
    let mut st = Reducer {
        g: f.gram().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect(),
        u: (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect(),
    };
    let mut factors = Vec::with_capacity(n / 2);
    for k in (0..n).step_by(2) {
        loop {
            let (i, j) = st.min_entry(k).ok_or(Error::Degenerate)?;
            st.swap(k, i);
            st.swap(k + 1, j);
            if st.g[k][k + 1] < 0 {
                st.swap(k, k + 1);
            }
            let d = st.g[k][k + 1];
            let mut clean = true;
            for m in k + 2..n {
                // ψ(e_k, e_m - c·e_{k+1}) = g[k][m] - c·d
                let c = Integer::div_floor(&st.g[k][m], &d);
                st.add(m, k + 1, -c)?;
                // ψ(e_{k+1}, e_m + c·e_k) = g[k+1][m] - c·d
                let c = Integer::div_floor(&st.g[k + 1][m], &d);
                st.add(m, k, c)?;
                clean &= st.g[k][m] == 0 && st.g[k + 1][m] == 0;
            }
            if !clean {
                continue;
            }
            let stray =
                (k + 2..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).find(|&(a, b)| st.g[a][b] % d != 0);
            match stray {
                None => {
                    factors.push(d as u64);
                    break;
                }
                // e_k ← e_k + e_a puts g[a][b] into row k.
                Some((a, _)) => st.add(k, a, 1)?,
            }
        }
    }
    let transform =
        st.u.iter()
            .map(|r| r.iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
            .collect::<Result<Matrix>>()?;
    Ok(SymplecticDecomposition { transform, factors })
}
