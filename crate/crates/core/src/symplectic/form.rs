use num_integer::Integer;

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &Matrix) -> Result<i128> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition("matrix is not square".into()));
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * if n == 0 { 1 } else { a[n - 1][n - 1] })
}

/// Non-degenerate alternating form on `Z^{2n}`, given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingForm {
    gram: Matrix,
    det: i128,
}

impl AlternatingForm {
    pub fn new(gram: Matrix) -> Result<AlternatingForm> {
        let n = gram.len();
        if n == 0 || n % 2 != 0 {
            return Err(Error::NotAlternating(format!("dimension {n} is not even and positive")));
        }
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::NotAlternating("matrix is not square".into()));
        }
        for i in 0..n {
            if gram[i][i] != 0 {
                return Err(Error::NotAlternating(format!("nonzero diagonal entry at {i}")));
            }
            for j in 0..i {
                if gram[i][j].checked_neg() != Some(gram[j][i]) {
                    return Err(Error::NotAlternating(format!("entries ({i},{j}), ({j},{i})")));
                }
            }
        }
        let det = determinant(&gram)?;
        if det == 0 {
            return Err(Error::Degenerate);
        }
        Ok(AlternatingForm { gram, det })
    }

    /// `⊕ dᵢ·J` with `J = [[0, 1], [-1, 0]]`.
    pub fn block_diagonal(factors: &[i64]) -> Result<AlternatingForm> {
        let n = 2 * factors.len();
        let mut gram = vec![vec![0; n]; n];
        for (k, &d) in factors.iter().enumerate() {
            gram[2 * k][2 * k + 1] = d;
            gram[2 * k + 1][2 * k] = -d;
        }
        AlternatingForm::new(gram)
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dimension(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> i128 {
        self.det
    }

    /// gcd of all entries, the first invariant factor.
    pub fn content(&self) -> i64 {
        self.gram.iter().flatten().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// The lattice equals its dual: every invariant factor is 1.
    pub fn is_self_dual(&self) -> bool {
        self.det.abs() == 1
    }

    /// `a·L^∨ = L`: every invariant factor equals `a`.
    ///
    /// Since `d₁ | dᵢ` and `∏ dᵢ² = |det|`, this holds exactly when the
    /// content is `a` and `|det| = a^{2n}`.
    pub fn is_modular(&self, a: u64) -> bool {
        if a == 0 || self.content() as u64 != a {
            return false;
        }
        let n = self.dimension() as u32;
        (a as i128).checked_pow(n) == Some(self.det.abs())
    }

    /// `Vᵀ·gram·V` for an integer matrix `V`.
    pub fn transformed(&self, v: &Matrix) -> Result<Matrix> {
        let n = self.dimension();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i128;
                for k in 0..n {
                    for l in 0..n {
                        acc += v[k][i] as i128 * self.gram[k][l] as i128 * v[l][j] as i128;
                    }
                }
                out[i][j] = i64::try_from(acc).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(determinant(&vec![vec![2, 1], vec![7, 4]]).unwrap(), 1);
        assert_eq!(determinant(&vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]).unwrap(), -3);
        assert_eq!(determinant(&vec![vec![1, 2], vec![2, 4]]).unwrap(), 0);
    }

    #[test]
    fn validation() {
        assert!(AlternatingForm::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(AlternatingForm::new(vec![vec![1, 1], vec![-1, 0]]).is_err());
        assert!(matches!(AlternatingForm::new(vec![vec![0; 4]; 4]), Err(Error::Degenerate)));
        assert!(AlternatingForm::new(vec![vec![0]]).is_err());
    }

    #[test]
    fn duality() {
        let j = AlternatingForm::block_diagonal(&[1]).unwrap();
        assert!(j.is_self_dual() && j.is_modular(1) && !j.is_modular(2));
        let two_j = AlternatingForm::block_diagonal(&[2]).unwrap();
        assert!(!two_j.is_self_dual());
        assert!(AlternatingForm::block_diagonal(&[2, 2]).unwrap().is_modular(2));
        assert!(!AlternatingForm::block_diagonal(&[2, 6]).unwrap().is_modular(2));
        assert!(!AlternatingForm::block_diagonal(&[1, 3]).unwrap().is_self_dual());
    }
}
