//! Exact evaluation of the transversal bounds.
//!
//! Every bound mixes integers with square roots, cube roots of squares, or
//! binary logarithms. All comparisons here reduce to integer inequalities by
//! squaring, cubing or exponentiating; no floating point enters a verdict.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;

/// `ceil((a*n - b*n^(2/3)) / q)` for positive `q`, `b >= 0`.
///
/// Uses `y <= c  <=>  a*n - q*c <= b*n^(2/3)  <=>  d <= 0 or d^3 <= b^3 n^2`
/// with `d = a*n - q*c`.
pub fn ceil_linear_minus_two_thirds_power(a: i128, b: i128, q: i128, n: u64) -> i64 {
    assert!(q > 0 && b >= 0);
    let n = i128::from(n);
    let at_most = |c: i128| {
        let d = a * n - q * c;
        d <= 0 || d * d * d <= b * b * b * n * n
    };
    // y <= a*n/q, so start there and walk down
    let mut c = (a * n).div_euclid(q) + 1;
    while at_most(c - 1) {
        c -= 1;
    }
    c as i64
}

/// `ceil(n/4 - n^(2/3)/90)`, the general longest path transversal bound.
pub fn path_transversal_bound(n: u64) -> i64 {
    ceil_linear_minus_two_thirds_power(45, 2, 180, n)
}

/// `ceil(n/3 - n^(2/3)/36)`, the 2-connected longest cycle transversal bound.
pub fn cycle_transversal_bound(n: u64) -> i64 {
    ceil_linear_minus_two_thirds_power(12, 1, 36, n)
}

/// `ceil(n/3)`, the longest cycle transversal bound for arbitrary graphs.
pub fn thomassen_bound(n: u64) -> u64 {
    n.div_ceil(3)
}

/// `x <= sqrt(y)` for `y >= 0`.
pub fn le_sqrt(x: i128, y: i128) -> bool {
    x <= 0 || x * x <= y
}

/// `x >= sqrt(y)` for `x >= 0`, `y >= 0`.
pub fn ge_sqrt(x: i128, y: i128) -> bool {
    x >= 0 && x * x >= y
}

/// `size <= members/alpha + sqrt(alpha*n)` for rational `alpha > 0`.
pub fn within_alpha_bound(size: u64, members: u64, alpha: Ratio<u64>, n: u64) -> bool {
    let (p, q) = (i128::from(*alpha.numer()), i128::from(*alpha.denom()));
    // size - members*q/p <= sqrt(p n / q)
    // d = size*p - members*q; d/p <= sqrt(pn/q)  <=>  d <= 0 or q d^2 <= p^3 n
    let d = i128::from(size) * p - i128::from(members) * q;
    d <= 0 || q * d * d <= p * p * p * i128::from(n)
}

/// Little-endian base-2^64 natural number, just enough for bit lengths of powers.
fn pow_limbs(base: u64, exp: u32) -> Vec<u64> {
    let mut limbs = vec![1u64];
    for _ in 0..exp {
        let mut carry = 0u128;
        for limb in &mut limbs {
            let t = u128::from(*limb) * u128::from(base) + carry;
            *limb = t as u64;
            carry = t >> 64;
        }
        if carry > 0 {
            limbs.push(carry as u64);
        }
    }
    limbs
}

fn bit_length(limbs: &[u64]) -> u64 {
    match limbs.iter().rposition(|&l| l != 0) {
        None => 0,
        Some(i) => 64 * i as u64 + u64::from(64 - limbs[i].leading_zeros()),
    }
}

/// `2^s <= n^e`, exactly.
pub fn pow2_le_power(s: u64, n: u64, e: u32) -> bool {
    if n == 0 {
        return false;
    }
    bit_length(&pow_limbs(n, e)) > s
}

/// `size <= 3k log2 n` for `n >= 2`, as `2^size <= n^(3k)`.
pub fn within_treewidth_bound(size: u64, k: u32, n: u64) -> bool {
    pow2_le_power(size, n, 3 * k)
}

/// `floor(q * log2 n)` for `n >= 1`.
fn floor_scaled_log2(n: u64, q: u32) -> u64 {
    bit_length(&pow_limbs(n, q)).saturating_sub(1)
}

/// `x <= c * sqrt(n) * log2(n)` for `n >= 2`, `x, c >= 0`.
///
/// `log2 n` is bracketed by `t/q <= log2 n < (t+1)/q` with `t = floor(q log2 n)`;
/// squaring both sides leaves integer comparisons. The bracket is refined until
/// it decides, which always happens unless the two sides are exactly equal; at
/// exact equality the comparison is true and the lower bracket reaches it when
/// `log2 n` is an integer.
pub fn le_sqrt_times_log2(x: u64, c: u64, n: u64) -> bool {
    assert!(n >= 2);
    let lhs = |q: u128| u128::from(x) * u128::from(x) * q * q;
    let rhs = |t: u128| u128::from(c) * u128::from(c) * u128::from(n) * t * t;
    let mut q: u32 = 1;
    loop {
        let t = u128::from(floor_scaled_log2(n, q));
        let qq = u128::from(q);
        if lhs(qq) <= rhs(t) {
            return true;
        }
        if lhs(qq) > rhs(t + 1) {
            return false;
        }
        if q >= 1 << 12 {
            // equality needs log2 n rational, hence an integer, which q = 1 decides
            return true;
        }
        q *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // float powf is not trustworthy on exact cubes; those are checked by hand below
    fn is_cube(n: u64) -> bool {
        (1..=n).take_while(|r| r * r * r <= n).any(|r| r * r * r == n)
    }

    fn float_ceil(a: f64, b: f64, q: f64, n: f64) -> i64 {
        ((a * n - b * n.powf(2.0 / 3.0)) / q).ceil() as i64
    }

    #[test]
    fn path_bound_small_values() {
        assert_eq!(path_transversal_bound(6), 2);
        assert_eq!(path_transversal_bound(1), 1);
        assert_eq!(path_transversal_bound(4), 1);
        for n in (1..2000u64).filter(|n| !is_cube(*n)) {
            let exact = path_transversal_bound(n);
            let approx = float_ceil(45.0, 2.0, 180.0, n as f64);
            assert_eq!(exact, approx, "n = {n}");
        }
    }

    #[test]
    fn cycle_bound_small_values() {
        assert_eq!(cycle_transversal_bound(3), 1);
        assert_eq!(cycle_transversal_bound(9), 3);
        for n in (1..2000u64).filter(|n| !is_cube(*n)) {
            assert_eq!(
                cycle_transversal_bound(n),
                float_ceil(12.0, 1.0, 36.0, n as f64),
                "n = {n}"
            );
        }
    }

    #[test]
    fn exact_cube_boundary() {
        // n = 8: n^(2/3) = 4; y = (45*8 - 8)/180 = 352/180, ceil 2
        assert_eq!(path_transversal_bound(8), 2);
        // n = 27: n^(2/3) = 9; y = (324 - 9)/36 = 8.75 -> 9
        assert_eq!(cycle_transversal_bound(27), 9);
        // n = 216: n^(2/3) = 36; y = (2592 - 36)/36 = 71 exactly
        assert_eq!(cycle_transversal_bound(216), 71);
    }

    #[test]
    fn sqrt_comparisons() {
        assert!(le_sqrt(3, 9));
        assert!(!le_sqrt(4, 15));
        assert!(le_sqrt(-1, 0));
        assert!(ge_sqrt(3, 9));
        assert!(!ge_sqrt(2, 5));
    }

    #[test]
    fn alpha_bound() {
        // 1 <= 3/2 + sqrt(6)
        assert!(within_alpha_bound(1, 3, Ratio::new(2, 1), 3));
        // 4 > 0 + sqrt(2*4) ~ 2.83
        assert!(!within_alpha_bound(4, 0, Ratio::new(2, 1), 4));
        // 3 <= 1 + sqrt(4) exactly
        assert!(within_alpha_bound(3, 2, Ratio::new(2, 1), 2));
        // alpha = 5/2: 3 <= 5*2/5 + sqrt(5/2 * 2) = 2 + sqrt 5
        assert!(within_alpha_bound(3, 5, Ratio::new(5, 2), 2));
        assert!(!within_alpha_bound(5, 5, Ratio::new(5, 2), 2));
    }

    #[test]
    fn log_comparisons() {
        assert!(pow2_le_power(3, 8, 1));
        assert!(!pow2_le_power(4, 8, 1));
        // 3 log2 7 ~ 8.42
        assert!(within_treewidth_bound(8, 1, 7));
        assert!(!within_treewidth_bound(9, 1, 7));
        assert!(pow2_le_power(200, 2, 200));
        assert!(!pow2_le_power(201, 2, 200));
        // 9 sqrt(4) log2 4 = 36 exactly
        assert!(le_sqrt_times_log2(36, 9, 4));
        assert!(!le_sqrt_times_log2(37, 9, 4));
        // 9 sqrt(10) log2 10 ~ 94.53
        assert!(le_sqrt_times_log2(94, 9, 10));
        assert!(!le_sqrt_times_log2(95, 9, 10));
    }
}
