//! Closed-form lower bounds on `(<=k)`-edges and crossings.
//!
//! * `3 C(k+2, 2)`: the simple bound, tight for `k <= floor(n/3) - 1`.
//! * `Ê_k = 3 C(k+2, 2) + sum_{j=floor(n/3)}^{k} (3j - n + 3)`.
//! * `F_k = C(n,2) - n sqrt(n^2 - 2n - 4k(k+1))`, which overtakes `Ê_k`
//!   only for `k` very close to `n/2`.
//!
//! Plugging `Ê_k` into the exact cumulative crossing formula gives a lower
//! bound on the crossing number of `K_n`; its leading coefficient tends to
//! `41/108`.

use serde::{Deserialize, Serialize};

use crate::census::CumulativeEdgeVector;
use crate::crossings::{binomial, exact_lcr_from_cumulative};
use crate::error::{Error, Result};

fn half_depth(n: u64) -> u64 {
    (n - 2) / 2
}

/// `3 C(k+2, 2)` for `0 <= k < (n-2)/2`.
pub fn bound_simple(n: u64, k: u64) -> Result<u64> {
    if n < 3 || 2 * k + 2 >= n {
        return Err(Error::OutOfRange("k", format!("{k} not below (n-2)/2 for n = {n}")));
    }
    Ok(3 * binomial(k + 2, 2))
}

fn theorem7_unchecked(n: u64, k: u64) -> u64 {
    let base = 3 * binomial(k + 2, 2);
    let start = n / 3;
    if k < start {
        return base;
    }
    // every summand 3j - n + 3 is positive for j >= floor(n/3)
    base + (start..=k).map(|j| 3 * j + 3 - n).sum::<u64>()
}

/// `Ê_k` for `0 <= k < floor((n-2)/2)`.
pub fn bound_theorem7(n: u64, k: u64) -> Result<u64> {
    if n < 4 || k >= half_depth(n) {
        return Err(Error::OutOfRange(
            "k",
            format!("{k} not below floor((n-2)/2) for n = {n}"),
        ));
    }
    Ok(theorem7_unchecked(n, k))
}

/// The divisibility closed forms of `Ê_k`, valid for `k >= floor(n/3)`:
/// `3 C(k+2,2) + 3 C(k - n/3 + 2, 2)` when `3 | n`, otherwise
/// `3 C(k+2,2) + C(3k - n + 5, 2) / 3`.
pub fn bound_theorem7_closed_form(n: u64, k: u64) -> Result<u64> {
    if k < n / 3 {
        return Err(Error::OutOfRange("k", format!("{k} below floor(n/3) for n = {n}")));
    }
    let base = 3 * binomial(k + 2, 2);
    if n.is_multiple_of(3) {
        Ok(base + 3 * binomial(k + 2 - n / 3, 2))
    } else {
        let c = binomial(3 * k + 5 - n, 2);
        debug_assert_eq!(c % 3, 0);
        Ok(base + c / 3)
    }
}

/// `F_k = C(n,2) - n sqrt(n^2 - 2n - 4k(k+1))`.
pub fn bound_lvww(n: u64, k: u64) -> Result<f64> {
    let radicand = (n * n) as i128 - 2 * n as i128 - 4 * (k as i128) * (k as i128 + 1);
    if radicand < 0 {
        return Err(Error::OutOfRange(
            "k",
            format!("n^2 - 2n - 4k(k+1) < 0 for n = {n}, k = {k}"),
        ));
    }
    Ok(binomial(n, 2) as f64 - n as f64 * (radicand as f64).sqrt())
}

/// Smallest `k < floor((n-2)/2)` with `F_k >= Ê_k`, if any.
pub fn lvww_crossover(n: u64) -> Option<u64> {
    (0..half_depth(n)).find(|&k| {
        let f = bound_lvww(n, k).expect("radicand is nonnegative for k < (n-2)/2");
        f >= theorem7_unchecked(n, k) as f64
    })
}

/// The cumulative vector `(Ê_0, ..., Ê_{m-1}, C(n,2))`.
pub fn theorem7_vector(n: u64) -> CumulativeEdgeVector {
    let m = half_depth(n);
    let mut values: Vec<u64> = (0..m).map(|k| theorem7_unchecked(n, k)).collect();
    values.push(binomial(n, 2));
    CumulativeEdgeVector { n: n as usize, values }
}

/// Lower bound on the rectilinear crossing number of `K_n`: the exact
/// cumulative crossing formula evaluated at `Ê_k`. Valid because every
/// coefficient `n - 2k - 3` with `k < floor((n-2)/2)` is nonnegative.
pub fn crossing_lower_bound_exact(n: u64) -> Result<u64> {
    if n < 4 {
        return Err(Error::OutOfRange("n", format!("{n} < 4")));
    }
    exact_lcr_from_cumulative(&theorem7_vector(n))
}

/// `sum_{k<m} (n-2k-3) Ê_k / C(n,4)`.
pub fn asymptotic_coefficient(n: u64) -> Result<f64> {
    if n < 100 {
        return Err(Error::OutOfRange("n", format!("{n} < 100")));
    }
    let sum: u128 = (0..half_depth(n))
        .map(|k| (n - 2 * k - 3) as u128 * theorem7_unchecked(n, k) as u128)
        .sum();
    Ok(sum as f64 / binomial(n, 4) as f64)
}

/// The limit of [`asymptotic_coefficient`].
pub const ASYMPTOTIC_LIMIT: f64 = 41.0 / 108.0;

/// `C(n,2) - Ê_{m-1}` with `m = floor((n-2)/2)`: an upper bound on the
/// number of halving edges of any `n`-point set.
pub fn halving_upper_bound(n: u64) -> Result<u64> {
    if n < 5 {
        return Err(Error::OutOfRange("n", format!("{n} < 5")));
    }
    Ok(binomial(n, 2) - theorem7_unchecked(n, half_depth(n) - 1))
}

fn epsilon_integrand(t: f64) -> f64 {
    if t >= 0.5 {
        return 0.0;
    }
    (1.0 - 2.0 * t) * (1.0 / 3.0 + t - 3.0 * t * t - (1.0 - 4.0 * t * t).sqrt())
}

fn simpson(f: fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
}

#[allow(clippy::too_many_arguments)]
fn adaptive_simpson(
    f: fn(f64) -> f64,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    m: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let (lm, flm, left) = simpson(f, a, fa, m, fm);
    let (rm, frm, right) = simpson(f, m, fm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_simpson(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1)
        + adaptive_simpson(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1)
}

/// `24 * integral_{t0}^{1/2} (1-2t)(1/3 + t - 3t^2 - sqrt(1-4t^2)) dt` by
/// adaptive Simpson quadrature with absolute tolerance `1e-9` on the
/// integral before scaling. The integrand vanishes at `t = 1/2`.
pub fn epsilon_integral(t0: f64) -> Result<f64> {
    if !(t0 > 0.0 && t0 <= 0.5) {
        return Err(Error::OutOfRange("t0", format!("{t0} outside (0, 1/2]")));
    }
    if t0 == 0.5 {
        return Ok(0.0);
    }
    let f: fn(f64) -> f64 = epsilon_integrand;
    let (a, b) = (t0, 0.5);
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    Ok(24.0 * adaptive_simpson(f, a, fa, b, fb, m, fm, whole, 1e-9 / 24.0, 50))
}

/// One row of the bound table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: u64,
    pub theorem7: u64,
    pub simple: u64,
    pub lvww: f64,
    pub lvww_ceil: i64,
    pub best: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundTable {
    pub n: u64,
    pub rows: Vec<BoundRow>,
}

pub fn bound_table(n: u64) -> Result<BoundTable> {
    if n < 4 {
        return Err(Error::OutOfRange("n", format!("{n} < 4")));
    }
    let rows = (0..half_depth(n))
        .map(|k| {
            let theorem7 = theorem7_unchecked(n, k);
            let simple = 3 * binomial(k + 2, 2);
            let lvww = bound_lvww(n, k).expect("radicand is nonnegative for k < (n-2)/2");
            let lvww_ceil = lvww.ceil() as i64;
            let best = theorem7.max(simple).max(lvww_ceil.max(0) as u64);
            BoundRow {
                k,
                theorem7,
                simple,
                lvww,
                lvww_ceil,
                best,
            }
        })
        .collect();
    Ok(BoundTable { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_bound_examples() {
        assert_eq!(bound_simple(30, 0).unwrap(), 3);
        assert_eq!(bound_simple(30, 1).unwrap(), 9);
        assert_eq!(bound_simple(19, 5).unwrap(), 63);
        assert!(bound_simple(6, 2).is_err());
        assert!(bound_simple(7, 2).is_ok());
    }

    #[test]
    fn theorem7_examples() {
        assert_eq!(bound_theorem7(19, 6).unwrap(), 86);
        assert_eq!(bound_theorem7(21, 8).unwrap(), 144);
        assert_eq!(bound_theorem7(17, 6).unwrap(), 89);
        assert!(bound_theorem7(19, 8).is_err());
        assert!(bound_theorem7(19, 7).is_ok());
    }

    #[test]
    fn closed_forms_agree_with_the_sum() {
        for n in 4..=300u64 {
            for k in (n / 3)..half_depth(n) {
                assert_eq!(
                    bound_theorem7_closed_form(n, k).unwrap(),
                    bound_theorem7(n, k).unwrap(),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn theorem7_dominates_simple_and_is_monotone() {
        for n in 4..=200u64 {
            let mut prev = 0;
            for k in 0..half_depth(n) {
                let t = bound_theorem7(n, k).unwrap();
                let s = 3 * binomial(k + 2, 2);
                if k < n / 3 {
                    assert_eq!(t, s);
                } else {
                    assert!(t > s);
                }
                assert!(t >= prev);
                prev = t;
            }
        }
    }

    #[test]
    fn lvww_examples() {
        // radicand zero at k = (n-2)/2
        assert_eq!(bound_lvww(20, 9).unwrap(), binomial(20, 2) as f64);
        let f = bound_lvww(20, 4).unwrap();
        assert!((f - (190.0 - 20.0 * 280f64.sqrt())).abs() < 1e-9);
        assert!((f + 144.66).abs() < 0.01);
        assert!(bound_lvww(20, 10).is_err());
    }

    #[test]
    fn crossing_lower_bounds() {
        assert_eq!(crossing_lower_bound_exact(17).unwrap(), 798);
        assert_eq!(crossing_lower_bound_exact(19).unwrap(), 1318);
        assert_eq!(crossing_lower_bound_exact(21).unwrap(), 2055);
        // small known values of the rectilinear crossing number
        let known = [(4, 0), (5, 1), (6, 3), (7, 9), (8, 19), (9, 36), (10, 62)];
        for (n, v) in known {
            assert_eq!(crossing_lower_bound_exact(n).unwrap(), v);
        }
    }

    #[test]
    fn halving_bounds() {
        assert_eq!(halving_upper_bound(13).unwrap(), 31);
        assert_eq!(halving_upper_bound(18).unwrap(), 36);
        assert_eq!(halving_upper_bound(27).unwrap(), 99);
        assert_eq!(halving_upper_bound(24).unwrap(), 60);
        assert!(halving_upper_bound(4).is_err());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_integral(0.5).unwrap(), 0.0);
        assert_eq!(epsilon_integrand(0.5), 0.0);
        let eps = epsilon_integral(0.4981).unwrap();
        assert!((1.3e-6..=1.5e-6).contains(&eps), "{eps}");
        assert!(epsilon_integral(0.0).is_err());
        assert!(epsilon_integral(0.6).is_err());
    }

    /// Independent quadrature: with t = (1 - s^2)/2 the square root becomes
    /// s sqrt(2 - s^2) and the integrand is smooth, so a plain composite
    /// Simpson rule converges fast.
    fn epsilon_by_substitution(t0: f64) -> f64 {
        let s0 = (1.0 - 2.0 * t0).sqrt();
        let h = |s: f64| {
            let t = (1.0 - s * s) / 2.0;
            s * s * s * (1.0 / 3.0 + t - 3.0 * t * t - s * (2.0 - s * s).sqrt())
        };
        let steps = 4000;
        let dx = s0 / steps as f64;
        let mut acc = h(0.0) + h(s0);
        for i in 1..steps {
            acc += if i % 2 == 1 { 4.0 } else { 2.0 } * h(i as f64 * dx);
        }
        24.0 * acc * dx / 3.0
    }

    #[test]
    fn epsilon_matches_substituted_quadrature() {
        for t0 in [0.3, 0.45, 0.49, 0.4981, 0.499] {
            let a = epsilon_integral(t0).unwrap();
            let b = epsilon_by_substitution(t0);
            assert!((a - b).abs() < 1e-9, "t0 = {t0}: {a} vs {b}");
        }
    }

    #[test]
    fn table_rows() {
        let table = bound_table(19).unwrap();
        let th: Vec<u64> = table.rows.iter().map(|r| r.theorem7).collect();
        assert_eq!(th, vec![3, 9, 18, 30, 45, 63, 86, 115]);
        for row in &table.rows {
            assert!(row.best >= row.theorem7);
            assert!(row.lvww_ceil as f64 >= row.lvww);
        }
    }
}
