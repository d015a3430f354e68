mod support;

use num_integer::Integer;
use ppsp_census::symplectic::{
    determinant, hermitian_self_dual_exists, symplectic_normal_form, AlternatingForm, Matrix, Parity,
};
use ppsp_census::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use support::pfaffian;

fn random_form(rng: &mut StdRng, n: usize) -> AlternatingForm {
    loop {
        let mut g = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let x = rng.gen_range(-9..=9);
                g[i][j] = x;
                g[j][i] = -x;
            }
        }
        if let Ok(f) = AlternatingForm::new(g) {
            return f;
        }
    }
}

fn random_unimodular(rng: &mut StdRng, n: usize) -> Matrix {
    let mut v: Matrix = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let c = rng.gen_range(-2..=2);
        for row in &mut v {
            row[b] += c * row[a];
        }
    }
    v
}

#[test]
fn random_forms_against_pfaffian() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for k in 0..500 {
        let n = if k % 2 == 0 { 4 } else { 6 };
        let f = random_form(&mut rng, n);
        let d = symplectic_normal_form(&f).unwrap();
        assert!(d.reproduces(&f).unwrap());
        assert_eq!(determinant(&d.transform).unwrap().abs(), 1);
        assert_eq!(d.factors[0] as i64, f.content());
        assert!(d.factors.windows(2).all(|w| w[1] % w[0] == 0), "{:?}", d.factors);
        let product: i128 = d.factors.iter().map(|&x| x as i128).product();
        assert_eq!(product, pfaffian(f.gram()).abs());
    }
}

#[test]
fn invariant_under_unimodular_change_of_basis() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let f = random_form(&mut rng, 4);
        let v = random_unimodular(&mut rng, 4);
        let Ok(g) = f.transformed(&v) else { continue };
        let g = AlternatingForm::new(g).unwrap();
        assert_eq!(symplectic_normal_form(&g).unwrap().factors, symplectic_normal_form(&f).unwrap().factors);
    }
}

#[test]
fn self_dual_is_one_modular() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let f = random_form(&mut rng, 4);
        assert_eq!(f.is_self_dual(), f.is_modular(1));
        let factors = symplectic_normal_form(&f).unwrap().factors;
        assert_eq!(f.is_self_dual(), factors.iter().all(|&d| d == 1));
    }
}

#[test]
fn worked_forms() {
    let j = AlternatingForm::block_diagonal(&[1]).unwrap();
    let d = symplectic_normal_form(&j).unwrap();
    assert_eq!(d.factors, vec![1]);
    assert_eq!(d.transform, vec![vec![1, 0], vec![0, 1]]);
    assert!(j.is_self_dual());
    assert!(!j.is_modular(2));
    let two_j = AlternatingForm::block_diagonal(&[2]).unwrap();
    assert_eq!(symplectic_normal_form(&two_j).unwrap().factors, vec![2]);
    assert!(!two_j.is_self_dual());
    assert!(AlternatingForm::block_diagonal(&[2, 2]).unwrap().is_modular(2));
    assert!(!AlternatingForm::block_diagonal(&[1, 3]).unwrap().is_self_dual());
    assert!(!AlternatingForm::block_diagonal(&[2, 6]).unwrap().is_modular(2));
}

#[test]
fn invalid_forms() {
    assert!(matches!(AlternatingForm::new(vec![vec![0, 1], vec![1, 0]]), Err(Error::NotAlternating(_))));
    assert!(matches!(AlternatingForm::new(vec![vec![0, 0], vec![0, 0]]), Err(Error::Degenerate)));
    assert!(AlternatingForm::new(vec![vec![0]]).is_err());
}

#[test]
fn hermitian_decision_table() {
    for division in [false, true] {
        for rank in [2u32, 3] {
            for parity in [Parity::Even, Parity::Odd] {
                let exceptional = division && rank.is_odd() && parity == Parity::Even;
                assert_eq!(hermitian_self_dual_exists(division, rank, parity), !exceptional);
            }
        }
    }
    assert!(!hermitian_self_dual_exists(true, 3, Parity::Even));
    assert!(hermitian_self_dual_exists(true, 2, Parity::Even));
    assert!(hermitian_self_dual_exists(false, 3, Parity::Even));
}
