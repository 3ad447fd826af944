//! Characteristic polynomials `det(xI − A)`.
//!
//! [`char_poly`] reduces the matrix to Hessenberg form modulo enough 31-bit
//! primes to exceed twice a coefficient bound, then lifts the coefficients by
//! Chinese remaindering. The two other routes (Faddeev–LeVerrier and
//! interpolation through Bareiss determinants) are slower but share no code
//! with it, which makes them useful as cross-checks.

use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{bareiss_determinant, IntMatrix, IntPolynomial, LinalgError};

/// Number of bits needed to bound every coefficient of `det(xI − m)` in
/// absolute value.
///
/// Every eigenvalue satisfies `|λ| ≤ R` with `R` the largest absolute row sum,
/// so the coefficient of `x^{n−k}` is at most `C(n,k)·R^k ≤ (1+R)^n`.
pub fn coefficient_bound_bits(m: &IntMatrix) -> u64 {
    let r = m.max_abs_row_sum() + 1u32;
    m.order() as u64 * r.bits() + 1
}

pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    if n == 0 {
        return IntPolynomial::one();
    }
    let needed = coefficient_bound_bits(m) + 1;
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut index = 0;
    while modulus.bits() <= needed {
        let p = nth_prime(index);
        index += 1;
        let reduced: Vec<u64> = m.entries().iter().map(|v| reduce(v, p)).collect();
        let residues = charpoly_mod(&reduced, n, p);
        let m_mod_p = reduce(&modulus, p);
        let inv = mod_pow(m_mod_p, p - 2, p);
        for (a, &r) in acc.iter_mut().zip(&residues) {
            let cur = reduce(a, p);
            let t = (r + p - cur) % p * inv % p;
            if t != 0 {
                *a += &modulus * t;
            }
        }
        modulus *= p;
    }
    let half = &modulus >> 1;
    for a in acc.iter_mut() {
        if *a > half {
            *a -= &modulus;
        }
    }
    IntPolynomial::new(acc)
}

/// Faddeev–LeVerrier recurrence. Each step divides a trace by `k`; a nonzero
/// remainder is reported as an error since it can only come from a bug.
pub fn char_poly_faddeev(m: &IntMatrix) -> Result<IntPolynomial, LinalgError> {
    let n = m.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n);
    for k in 1..=n {
        let am = m.checked_mul(&mk)?;
        mk = am.shift_diagonal(&coeffs[n - k + 1]);
        let trace = m.checked_mul(&mk)?.trace();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(LinalgError::InexactDivision { context: "Faddeev–LeVerrier trace" });
        }
        coeffs[n - k] = q;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Interpolates `det(xI − m)` from its values at `x = 0..=n` in the
/// falling-factorial basis; the forward differences are divisible by `k!`
/// for any integer polynomial.
pub fn char_poly_interpolation(m: &IntMatrix) -> Result<IntPolynomial, LinalgError> {
    let n = m.order();
    let neg = m.scale(&BigInt::from(-1));
    let mut diffs: Vec<BigInt> = (0..=n).map(|x| bareiss_determinant(&neg.shift_diagonal(&BigInt::from(x)))).collect();
    let mut result = IntPolynomial::zero();
    let mut falling = IntPolynomial::one();
    let mut factorial = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            factorial *= k;
            for i in 0..diffs.len() - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
            diffs.pop();
            falling = &falling * &IntPolynomial::linear(-(k as i64 - 1));
        }
        let (q, r) = diffs[0].div_rem(&factorial);
        if !r.is_zero() {
            return Err(LinalgError::InexactDivision { context: "forward difference" });
        }
        result = &result + &(&falling * &IntPolynomial::constant(q));
    }
    Ok(result)
}

fn reduce(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    match r.sign() {
        Sign::NoSign => 0,
        _ => r.to_u64().expect("residue below p"),
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Characteristic polynomial modulo `p` of the row-major `n×n` matrix `a`,
/// via reduction to upper Hessenberg form. Lowest power first, monic.
fn charpoly_mod(a: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i * n + m - 1] != 0) else {
            continue;
        };
        if i != m {
            for j in 0..n {
                h.swap(i * n + j, m * n + j);
            }
            for j in 0..n {
                h.swap(j * n + i, j * n + m);
            }
        }
        let inv = mod_pow(h[m * n + m - 1], p - 2, p);
        for i in m + 1..n {
            let u = h[i * n + m - 1] * inv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let sub = u * h[m * n + j] % p;
                h[i * n + j] = (h[i * n + j] + p - sub) % p;
            }
            for j in 0..n {
                h[j * n + m] = (h[j * n + m] + u * h[j * n + i]) % p;
            }
        }
    }

    // p_{m+1} = (x − h_mm) p_m − Σ_{i<m} h_im (Π_{j=i+1..m} h_{j,j−1}) p_i
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        let diag = h[m * n + m];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - diag * c % p) % p;
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = t * h[(i + 1) * n + i] % p;
            if t == 0 {
                break;
            }
            let coef = h[i * n + m] * t % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = (next[k] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 polynomials")
}

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// The `index`-th prime below 2^31, counting down.
fn nth_prime(index: usize) -> u64 {
    let mut primes = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    let mut candidate = primes.last().map_or((1u64 << 31) - 1, |&p| p - 2);
    while primes.len() <= index {
        if is_prime_u32(candidate) {
            primes.push(candidate);
        }
        candidate -= 2;
    }
    primes[index]
}

/// Deterministic Miller–Rabin for odd `n < 2^32` (bases 2, 7, 61).
fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn primes_are_prime() {
        assert_eq!(nth_prime(0), 2_147_483_647);
        for i in 0..20 {
            let p = nth_prime(i);
            assert!((3..1000u64).all(|d| !p.is_multiple_of(d) || p == d), "{p}");
        }
        assert!(!is_prime_u32(2_147_483_649));
        assert!(is_prime_u32(2_147_483_629));
    }

    #[test]
    fn known_small_polynomials() {
        let k2 = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&k2), IntPolynomial::from_i64s(&[-1, 0, 1]));
        let p3 = mat(&[&[0, 1, 2], &[1, 0, 1], &[2, 1, 0]]);
        assert_eq!(char_poly(&p3), IntPolynomial::from_i64s(&[-4, -6, 0, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(0)), IntPolynomial::one());
        assert_eq!(char_poly(&IntMatrix::zeros(3)), IntPolynomial::from_i64s(&[0, 0, 0, 1]));
    }

    #[test]
    fn routes_agree_on_non_symmetric_input() {
        let m = mat(&[&[3, -7, 0, 2], &[1, 0, 5, -1], &[0, 0, 0, 4], &[-2, 9, 1, 1]]);
        let fast = char_poly(&m);
        assert_eq!(char_poly_faddeev(&m).unwrap(), fast);
        assert_eq!(char_poly_interpolation(&m).unwrap(), fast);
    }

    #[test]
    fn large_entries_lift_correctly() {
        let big = BigInt::from(10).pow(40);
        let m = IntMatrix::from_fn(3, |i, j| if i == j { big.clone() } else { BigInt::from(i + j) });
        assert_eq!(char_poly(&m), char_poly_faddeev(&m).unwrap());
    }
}
