#![allow(clippy::needless_range_loop)]

mod common;

use distpoly::families::{clique, enumerate_block_graphs};
use distpoly::graph::distance_matrix;
use distpoly::linalg::{
    bareiss_determinant, char_poly, char_poly_faddeev, char_poly_interpolation, cofactor_sum, inertia_from_charpoly,
    rank, Inertia, IntMatrix, IntPolynomial,
};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn laplace_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let term = BigInt::from(m[0][j]) * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn minor_without(m: &[Vec<i64>], r: usize, c: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
        .collect()
}

/// Sum of all signed cofactors, i.e. the entry sum of the adjugate.
fn adjugate_sum(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut total = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            let c = laplace_det(&minor_without(m, i, j));
            if (i + j) % 2 == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
    }
    total
}

fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in 0..cols {
                    let sub = &f * &a[r][k];
                    a[i][k] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn int(m: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(m).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64, symmetric: bool) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if symmetric && j < i {
                m[i][j] = m[j][i];
            } else {
                m[i][j] = rng.gen_range(-bound..=bound);
            }
        }
    }
    m
}

/// `A S Aᵀ` with `A` of shape `n × r` and `S = diag(±1)`: symmetric, rank ≤ r.
fn low_rank_symmetric(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Vec<Vec<i64>> {
    let a: Vec<Vec<i64>> = (0..n).map(|_| (0..r).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let s: Vec<i64> = (0..r).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    (0..n).map(|i| (0..n).map(|j| (0..r).map(|k| a[i][k] * s[k] * a[j][k]).sum()).collect()).collect()
}

fn float_inertia(m: &[Vec<i64>]) -> Inertia {
    let n = m.len();
    let f = DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let scale = m.iter().flatten().map(|v| v.abs()).max().unwrap_or(1).max(1) as f64 * n as f64;
    let eig = f.symmetric_eigen();
    let tol = 1e-9 * scale;
    let mut inertia = Inertia { positive: 0, zero: 0, negative: 0 };
    for &l in eig.eigenvalues.iter() {
        if l > tol {
            inertia.positive += 1;
        } else if l < -tol {
            inertia.negative += 1;
        } else {
            inertia.zero += 1;
        }
    }
    inertia
}

#[test]
fn inertia_agrees_with_floating_point_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..500 {
        let n = rng.gen_range(1..=8);
        let m = if case % 2 == 0 {
            random_matrix(&mut rng, n, 6, true)
        } else {
            let r = rng.gen_range(0..n);
            low_rank_symmetric(&mut rng, n, r)
        };
        assert_eq!(int(&m).inertia().unwrap(), float_inertia(&m), "case {case}: {m:?}");
    }
}

#[test]
fn cofactor_sums_of_cliques() {
    for t in 1..=6 {
        let d = distance_matrix(&clique(t).unwrap()).unwrap();
        let rows: Vec<Vec<i64>> =
            (0..t).map(|i| (0..t).map(|j| i64::try_from(d.get(i, j)).unwrap()).collect()).collect();
        let sign = if t % 2 == 1 { 1 } else { -1 };
        assert_eq!(bareiss_determinant(&d), BigInt::from(sign * (t as i64 - 1)));
        assert_eq!(cofactor_sum(&d), BigInt::from(sign * t as i64));
        assert_eq!(cofactor_sum(&d), adjugate_sum(&rows));
    }
}

#[test]
fn methods_agree_on_block_graph_distance_matrices() {
    for n in 2..=8 {
        for g in enumerate_block_graphs(n, 10).unwrap() {
            let d = distance_matrix(&g).unwrap();
            let p = char_poly(&d);
            assert_eq!(p, char_poly_faddeev(&d).unwrap());
            assert_eq!(p, char_poly_interpolation(&d).unwrap());
        }
    }
}

#[test]
fn larger_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in [20, 35] {
        let m = random_matrix(&mut rng, n, 50, false);
        let im = int(&m);
        assert_eq!(char_poly(&im), char_poly_interpolation(&im).unwrap());
    }
    let m = random_matrix(&mut rng, 60, 1000, true);
    let im = int(&m);
    let p = char_poly(&im);
    let n = 60;
    assert_eq!(p.coeff(0), bareiss_determinant(&im));
    assert_eq!(p.coeff(n - 1), -im.trace());
}

#[test]
fn inertia_from_products_of_linear_factors() {
    // (x − 3)(x + 2)^2 x^2
    let p = &(&IntPolynomial::linear(-3) * &IntPolynomial::linear(2).pow(2)) * &IntPolynomial::from_i64s(&[0, 0, 1]);
    assert_eq!(inertia_from_charpoly(&p).unwrap(), Inertia { positive: 1, zero: 2, negative: 2 });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn determinant_and_char_poly(seed in any::<u64>(), n in 0usize..7, bound in 1i64..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, n, bound, false);
        let im = int(&m);
        let det = laplace_det(&m);
        prop_assert_eq!(bareiss_determinant(&im), det.clone());
        let p = char_poly(&im);
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(n));
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(p.coeff(0), sign * det);
        if n > 0 {
            prop_assert_eq!(p.coeff(n - 1), -im.trace());
        }
        prop_assert_eq!(&p, &char_poly_faddeev(&im).unwrap());
        prop_assert_eq!(&p, &char_poly_interpolation(&im).unwrap());
    }

    #[test]
    fn rank_matches_rational_elimination(seed in any::<u64>(), n in 1usize..8, r in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = low_rank_symmetric(&mut rng, n, r.min(n));
        prop_assert_eq!(rank(&int(&m)), rational_rank(&m));
        let general = random_matrix(&mut rng, n, 2, false);
        prop_assert_eq!(rank(&int(&general)), rational_rank(&general));
    }

    #[test]
    fn cofactor_identity(seed in any::<u64>(), n in 1usize..6, bound in 1i64..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let symmetric = rng.gen_bool(0.5);
        let m = random_matrix(&mut rng, n, bound, symmetric);
        let im = int(&m);
        let plus_j = im.checked_add(&IntMatrix::all_ones(n)).unwrap();
        prop_assert_eq!(cofactor_sum(&im), bareiss_determinant(&plus_j) - bareiss_determinant(&im));
        prop_assert_eq!(cofactor_sum(&im), adjugate_sum(&m));
    }

    #[test]
    fn shifting_moves_roots(seed in any::<u64>(), n in 1usize..7, c in -5i64..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, n, 5, true);
        let im = int(&m);
        // det(xI − (M + cI)) = p(x − c)
        let shifted = char_poly(&im.shift_diagonal(&BigInt::from(c)));
        let p = char_poly(&im);
        for x in -3i64..=3 {
            prop_assert_eq!(shifted.eval(&BigInt::from(x)), p.eval(&BigInt::from(x - c)));
        }
    }
}
