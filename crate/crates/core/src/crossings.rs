//! Rectilinear crossing number of a fixed configuration: the number of
//! 4-subsets in convex position.
//!
//! Three routes are provided and must agree exactly:
//! quadruple enumeration, the weighted j-edge identity
//! `cr + sum_j j (n-j-2) e_j = 3 C(n,4)`, and its summation-by-parts form
//! over the cumulative vector `E_k`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{edge_vector_sweep, CumulativeEdgeVector, EdgeVector};
use crate::error::{Error, Result};
use crate::geometry::{orient2d, Point, PointSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub n: usize,
    pub crossings: u64,
    pub method: Method,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `(n^4 - 6n^3 + 11n^2 - 6n) / 8`, i.e. `3 C(n,4)`.
pub fn identity_constant(n: u64) -> u128 {
    let n = n as u128;
    (n * n * n * n + 11 * n * n - 6 * n * n * n - 6 * n) / 8
}

fn strictly_inside(a: Point, b: Point, c: Point, d: Point) -> bool {
    let s = orient2d(a, b, c).signum();
    orient2d(a, b, d).signum() == s && orient2d(b, c, d).signum() == s && orient2d(c, a, d).signum() == s
}

fn convex4(a: Point, b: Point, c: Point, d: Point) -> bool {
    !(strictly_inside(a, b, c, d)
        || strictly_inside(a, b, d, c)
        || strictly_inside(a, c, d, b)
        || strictly_inside(b, c, d, a))
}

/// True iff the four points are in convex position (no one of them lies in
/// the triangle of the other three).
pub fn is_convex_quadrilateral(a: Point, b: Point, c: Point, d: Point) -> Result<bool> {
    let pts = [a, b, c, d];
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if orient2d(pts[i], pts[j], pts[k]) == 0 {
            return Err(Error::Collinear((i, j, k)));
        }
    }
    Ok(convex4(a, b, c, d))
}

/// O(n^4) count of convex quadruples, partitioned over the smallest index.
pub fn crossings_bruteforce(set: &PointSet) -> CrossingReport {
    let n = set.len();
    let p = set.points();
    let crossings = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut count = 0u64;
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        if convex4(p[a], p[b], p[c], p[d]) {
                            count += 1;
                        }
                    }
                }
            }
            count
        })
        .sum();
    CrossingReport {
        n,
        crossings,
        method: Method::Bruteforce,
    }
}

fn checked_crossings(n: usize, value: i128) -> Result<u64> {
    let max = binomial(n as u64, 4) as i128;
    if value < 0 || value > max {
        return Err(Error::Internal(format!(
            "crossing count {value} outside [0, C({n},4) = {max}]"
        )));
    }
    Ok(value as u64)
}

/// `3 C(n,4) - sum_j j (n - j - 2) e_j`.
pub fn crossings_from_edge_vector(e: &EdgeVector) -> Result<u64> {
    let n = e.n as i128;
    let weighted: i128 =
        e.e.iter()
            .enumerate()
            .map(|(j, &count)| {
                let j = j as i128;
                j * (n - j - 2) * count as i128
            })
            .sum();
    checked_crossings(e.n, identity_constant(e.n as u64) as i128 - weighted)
}

pub fn crossings_via_identity(set: &PointSet) -> Result<CrossingReport> {
    let crossings = crossings_from_edge_vector(&edge_vector_sweep(set))?;
    Ok(CrossingReport {
        n: set.len(),
        crossings,
        method: Method::Identity,
    })
}

/// Crossing count from the cumulative vector:
/// `sum_{k<m} (n-2k-3) E_k - m (n-2-m) C(n,2) + 3 C(n,4)` with
/// `m = floor((n-2)/2)`.
pub fn exact_lcr_from_cumulative(cumulative: &CumulativeEdgeVector) -> Result<u64> {
    cumulative.validate()?;
    let value = lcr_weighted_sum(cumulative.n, &cumulative.values);
    checked_crossings(cumulative.n, value)
}

/// The Abel-summed form without range checks; `values` holds `E_0..=E_m`.
pub(crate) fn lcr_weighted_sum(n: usize, values: &[u64]) -> i128 {
    let m = (n - 2) / 2;
    let ni = n as i128;
    let head: i128 = values[..m]
        .iter()
        .enumerate()
        .map(|(k, &ek)| (ni - 2 * k as i128 - 3) * ek as i128)
        .sum();
    let mi = m as i128;
    head - mi * (ni - 2 - mi) * binomial_u128(n as u128, 2) as i128 + identity_constant(n as u64) as i128
}
