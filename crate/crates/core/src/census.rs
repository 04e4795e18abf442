//! j-edge census: unoriented j-edge counts `e_j`, their prefix sums `E_k`,
//! halving edges, oriented k-edges and the "good" k-edges relative to an
//! enclosing triangle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{orient2d, Point, PointSet, Vector};

/// `e_j` for `j = 0..=floor((n-2)/2)`, counting unoriented edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeVector {
    pub n: usize,
    pub e: Vec<u64>,
}

/// `E_k = sum_{j <= k} e_j` for `k = 0..=floor((n-2)/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CumulativeEdgeVector {
    pub n: usize,
    #[serde(rename = "E")]
    pub values: Vec<u64>,
}

impl EdgeVector {
    pub fn max_depth(&self) -> usize {
        self.e.len() - 1
    }

    pub fn halving(&self) -> u64 {
        *self.e.last().expect("edge vector is never empty")
    }

    pub fn total(&self) -> u64 {
        self.e.iter().sum()
    }

    pub fn cumulative(&self) -> CumulativeEdgeVector {
        cumulative(self)
    }
}

impl CumulativeEdgeVector {
    pub fn max_depth(&self) -> usize {
        self.values.len() - 1
    }

    /// Checks the vector is nondecreasing, has `floor((n-2)/2) + 1` entries
    /// and ends at `C(n, 2)`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 3 {
            return Err(Error::InconsistentEdgeVector(format!("n = {n} < 3")));
        }
        if self.values.len() != (n - 2) / 2 + 1 {
            return Err(Error::InconsistentEdgeVector(format!(
                "expected {} entries for n = {n}, got {}",
                (n - 2) / 2 + 1,
                self.values.len()
            )));
        }
        if self.values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InconsistentEdgeVector("not nondecreasing".into()));
        }
        let pairs = (n * (n - 1) / 2) as u64;
        if *self.values.last().unwrap() != pairs {
            return Err(Error::InconsistentEdgeVector(format!(
                "last entry {} differs from C(n,2) = {pairs}",
                self.values.last().unwrap()
            )));
        }
        Ok(())
    }
}

pub fn cumulative(e: &EdgeVector) -> CumulativeEdgeVector {
    let values =
        e.e.iter()
            .scan(0u64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
    CumulativeEdgeVector { n: e.n, values }
}

/// Depth of the edge `pq`: the smaller number of points on either side of
/// the line through `p` and `q`.
pub fn edge_depth(set: &PointSet, p: usize, q: usize) -> Result<usize> {
    set.check_index(p)?;
    set.check_index(q)?;
    if p == q {
        return Err(Error::OutOfRange("edge", format!("p = q = {}", p + 1)));
    }
    let (left, right) = set.side_counts(p, q);
    Ok(left.min(right))
}

/// O(n^3) reference histogram of edge depths.
pub fn edge_vector_bruteforce(set: &PointSet) -> EdgeVector {
    let n = set.len();
    let mut e = vec![0u64; set.max_depth() + 1];
    for p in 0..n {
        for q in (p + 1)..n {
            let (left, right) = set.side_counts(p, q);
            e[left.min(right)] += 1;
        }
    }
    EdgeVector { n, e }
}

/// Other points sorted counterclockwise around `center`.
fn angular_order(points: &[Point], center: usize) -> Vec<(Vector, usize)> {
    let c = points[center];
    let mut dirs: Vec<(Vector, usize)> = points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != center)
        .map(|(i, &p)| (p - c, i))
        .collect();
    dirs.sort_by(|a, b| {
        let ord = a.0.angle_cmp(b.0);
        assert!(
            ord.is_ne(),
            "points {} and {} are collinear with {}",
            a.1 + 1,
            b.1 + 1,
            center + 1
        );
        ord
    });
    dirs
}

/// For every other point `q`, the number of points strictly left of the
/// directed line `center -> q`, via a rotating half-plane count.
fn left_counts_around(points: &[Point], center: usize) -> Vec<(usize, usize)> {
    let dirs = angular_order(points, center);
    let m = dirs.len();
    let mut out = Vec::with_capacity(m);
    let mut end = 1;
    for i in 0..m {
        if end < i + 1 {
            end = i + 1;
        }
        while end < i + m && dirs[i].0.cross(dirs[end % m].0) > 0 {
            end += 1;
        }
        out.push((dirs[i].1, end - i - 1));
    }
    out
}

/// Same result as [`edge_vector_bruteforce`] in O(n^2 log n): one angular
/// sweep per point, run in parallel and summed.
pub fn edge_vector_sweep(set: &PointSet) -> EdgeVector {
    let n = set.len();
    let depth_max = set.max_depth();
    let pts = set.points();
    let e = (0..n)
        .into_par_iter()
        .map(|p| {
            let mut hist = vec![0u64; depth_max + 1];
            for (q, left) in left_counts_around(pts, p) {
                if q > p {
                    let right = n - 2 - left;
                    hist[left.min(right)] += 1;
                }
            }
            hist
        })
        .reduce(
            || vec![0u64; depth_max + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    EdgeVector { n, e }
}

pub fn halving_edge_count(set: &PointSet) -> u64 {
    edge_vector_sweep(set).halving()
}

/// Oriented counts: entry `k` (for `k = 0..=n-2`) is the number of ordered
/// pairs `(p, q)` with exactly `k` points strictly right of `p -> q`.
pub fn oriented_edge_counts(set: &PointSet) -> Vec<u64> {
    let n = set.len();
    let pts = set.points();
    (0..n)
        .into_par_iter()
        .map(|p| {
            let mut hist = vec![0u64; n - 1];
            for (_, left) in left_counts_around(pts, p) {
                hist[n - 2 - left] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; n - 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Counts ordered pairs `(p, q)` with exactly `k` points of the set and
/// exactly one vertex of `triangle` strictly right of the directed line
/// `p -> q`. The set must lie strictly inside the triangle and
/// `floor(n/3) <= k <= n/2 - 1`.
pub fn good_k_edge_count(set: &PointSet, triangle: [Point; 3], k: usize) -> Result<u64> {
    let n = set.len();
    if k < n / 3 || 2 * k + 2 > n {
        return Err(Error::OutOfRange(
            "k",
            format!("{k} outside [floor(n/3), n/2 - 1] for n = {n}"),
        ));
    }
    let [a, b, c] = triangle;
    let area = orient2d(a, b, c);
    if area == 0 {
        return Err(Error::DegenerateTriangle);
    }
    let s = area.signum();
    for (i, &p) in set.points().iter().enumerate() {
        let inside = orient2d(a, b, p) * s > 0 && orient2d(b, c, p) * s > 0 && orient2d(c, a, p) * s > 0;
        if !inside {
            return Err(Error::NotInsideTriangle(i));
        }
    }
    let pts = set.points();
    let mut count = 0;
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            let (_, right) = set.side_counts(p, q);
            if right != k {
                continue;
            }
            let vertices_right = triangle.iter().filter(|&&v| orient2d(pts[p], pts[q], v) < 0).count();
            if vertices_right == 1 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// A right triangle strictly containing every point of the set.
pub fn enclosing_triangle(set: &PointSet) -> [Point; 3] {
    let pts = set.points();
    let xmin = pts.iter().map(|p| p.x).min().unwrap();
    let xmax = pts.iter().map(|p| p.x).max().unwrap();
    let ymin = pts.iter().map(|p| p.y).min().unwrap();
    let ymax = pts.iter().map(|p| p.y).max().unwrap();
    let (x0, y0) = (xmin - 1, ymin - 1);
    let leg = 3 * ((xmax - xmin) + (ymax - ymin) + 2);
    [Point::new(x0, y0), Point::new(x0 + leg, y0), Point::new(x0, y0 + leg)]
}
