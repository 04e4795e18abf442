//! Exact planar predicates, point sets in general position, convex hulls and
//! order types.
//!
//! Coordinates are `i64` bounded in magnitude by [`MAX_COORD`] (2^60). With
//! that bound every coordinate difference fits in 62 bits and the 2x2
//! orientation determinant fits comfortably in an `i128`, so the predicates
//! below are exact without any floating-point filter.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible coordinate magnitude.
pub const MAX_COORD: i64 = 1 << 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn in_range(&self) -> bool {
        self.x.abs() <= MAX_COORD && self.y.abs() <= MAX_COORD
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Integer direction / difference vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vector {
    pub x: i64,
    pub y: i64,
}

impl Vector {
    pub const fn new(x: i64, y: i64) -> Self {
        Vector { x, y }
    }

    pub fn cross(self, other: Vector) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn dot(self, other: Vector) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// True for directions in the half-open upper half-plane `[0, pi)`.
    pub(crate) fn is_upper(self) -> bool {
        self.y > 0 || (self.y == 0 && self.x > 0)
    }

    /// Counterclockwise angular comparison over the full circle, starting at
    /// the positive x-axis. Uses half-plane tagging and the exact cross sign.
    pub(crate) fn angle_cmp(self, other: Vector) -> Ordering {
        match (self.is_upper(), other.is_upper()) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => 0.cmp(&self.cross(other)),
        }
    }
}

impl Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    fn add(self, rhs: Vector) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn from_sign<T: Ord + Default>(value: T) -> Self {
        match value.cmp(&T::default()) {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }
}

/// The determinant `|b - a, c - a|`: twice the signed area of `abc`.
#[inline]
pub fn orient2d(a: Point, b: Point, c: Point) -> i128 {
    (b - a).cross(c - a)
}

#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    Orientation::from_sign(orient2d(a, b, c))
}

/// Checks that the points are pairwise distinct and no three are collinear.
///
/// On failure the reported witness is the lexicographically smallest
/// offending pair or triple of (0-based) indices.
pub fn validate_general_position(points: &[Point]) -> Result<()> {
    let n = points.len();
    let mut by_coord: Vec<usize> = (0..n).collect();
    by_coord.sort_by_key(|&i| (points[i], i));
    let mut dup: Option<(usize, usize)> = None;
    for w in by_coord.windows(2) {
        if points[w[0]] == points[w[1]] {
            let pair = (w[0], w[1]);
            dup = Some(dup.map_or(pair, |d| d.min(pair)));
        }
    }
    if let Some((i, j)) = dup {
        return Err(Error::DuplicatePoint(i, j));
    }

    // For each i, directions to later points folded onto [0, pi); two equal
    // folded directions mean a collinear triple through i.
    for i in 0..n {
        let mut dirs: Vec<(Vector, usize)> = ((i + 1)..n)
            .map(|j| {
                let v = points[j] - points[i];
                (if v.is_upper() { v } else { -v }, j)
            })
            .collect();
        dirs.sort_by(|a, b| 0.cmp(&a.0.cross(b.0)).then(a.1.cmp(&b.1)));
        let mut best: Option<(usize, usize)> = None;
        let mut start = 0;
        while start < dirs.len() {
            let mut end = start + 1;
            while end < dirs.len() && dirs[start].0.cross(dirs[end].0) == 0 {
                end += 1;
            }
            if end - start >= 2 {
                // indices inside a run are ascending by the tie-break
                let pair = (dirs[start].1, dirs[start + 1].1);
                best = Some(best.map_or(pair, |b| b.min(pair)));
            }
            start = end;
        }
        if let Some((j, k)) = best {
            return Err(Error::Collinear((i, j, k)));
        }
    }
    Ok(())
}

/// A planar point set in general position (labels are the vector indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| !p.in_range()) {
            return Err(Error::CoordinateOutOfRange {
                index,
                x: p.x as i128,
                y: p.y as i128,
            });
        }
        validate_general_position(&points)?;
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        PointSet::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    /// Builds a set from rational coordinates by multiplying every
    /// coordinate by the least common denominator. Uniform positive scaling
    /// preserves the order type.
    pub fn from_rationals(coords: &[(BigRational, BigRational)]) -> Result<Self> {
        let mut lcm = BigInt::one();
        for (x, y) in coords {
            lcm = lcm.lcm(x.denom()).lcm(y.denom());
        }
        let scale = BigRational::from_integer(lcm);
        let mut points = Vec::with_capacity(coords.len());
        for (index, (x, y)) in coords.iter().enumerate() {
            let sx = (x * &scale).to_integer();
            let sy = (y * &scale).to_integer();
            match (sx.to_i64(), sy.to_i64()) {
                (Some(px), Some(py)) => points.push(Point::new(px, py)),
                _ => {
                    return Err(Error::CoordinateOutOfRange {
                        index,
                        x: sx.to_i128().unwrap_or(i128::MAX),
                        y: sy.to_i128().unwrap_or(i128::MAX),
                    })
                }
            }
        }
        PointSet::new(points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i, self.len()))
        }
    }

    pub fn orientation(&self, i: usize, j: usize, k: usize) -> Orientation {
        orientation(self.points[i], self.points[j], self.points[k])
    }

    /// Applies `f` to every point and revalidates.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        PointSet::new(self.points.iter().copied().map(f).collect())
    }

    pub fn with_point(&self, i: usize, p: Point) -> Result<Self> {
        self.check_index(i)?;
        let mut points = self.points.clone();
        points[i] = p;
        PointSet::new(points)
    }

    /// `floor((n - 2) / 2)`: the depth of a halving edge.
    pub fn max_depth(&self) -> usize {
        (self.len() - 2) / 2
    }

    /// Number of points strictly left / strictly right of the directed line
    /// through points `p` and `q`, ignoring `p` and `q` themselves.
    pub fn side_counts(&self, p: usize, q: usize) -> (usize, usize) {
        let (a, b) = (self.points[p], self.points[q]);
        let mut left = 0;
        let mut right = 0;
        for (i, &c) in self.points.iter().enumerate() {
            if i == p || i == q {
                continue;
            }
            match orientation(a, b, c) {
                Orientation::CounterClockwise => left += 1,
                Orientation::Clockwise => right += 1,
                Orientation::Collinear => {}
            }
        }
        (left, right)
    }
}

impl TryFrom<Vec<Point>> for PointSet {
    type Error = Error;
    fn try_from(points: Vec<Point>) -> Result<Self> {
        PointSet::new(points)
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(set: PointSet) -> Vec<Point> {
        set.points
    }
}

/// Indices of the extreme points in counterclockwise order, starting at the
/// lexicographically smallest point.
pub fn convex_hull(set: &PointSet) -> Vec<usize> {
    let pts = set.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by_key(|&i| pts[i]);

    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2 && orient2d(pts[lower[lower.len() - 2]], pts[lower[lower.len() - 1]], pts[i]) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2 && orient2d(pts[upper[upper.len() - 2]], pts[upper[upper.len() - 1]], pts[i]) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub fn is_extreme(set: &PointSet, p: usize) -> bool {
    convex_hull(set).contains(&p)
}

/// Orientation of every triple of a point set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderType {
    n: usize,
    // ccw[colex(i, j, k)] for i < j < k
    ccw: Vec<bool>,
}

fn colex_index(i: usize, j: usize, k: usize) -> usize {
    k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i
}

impl OrderType {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Orientation of the ordered triple `(i, j, k)` of distinct indices.
    pub fn orientation(&self, i: usize, j: usize, k: usize) -> Orientation {
        assert!(i != j && j != k && i != k, "orientation of a repeated index");
        let mut idx = [i, j, k];
        let mut swaps = 0;
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    swaps += 1;
                }
            }
        }
        let base = if self.ccw[colex_index(idx[0], idx[1], idx[2])] {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        };
        if swaps % 2 == 0 {
            base
        } else {
            base.reversed()
        }
    }

    /// Sorted triples `i < j < k` whose orientation differs between the two.
    pub fn diff(&self, other: &OrderType) -> Vec<(usize, usize, usize)> {
        assert_eq!(self.n, other.n, "order types of different sizes");
        let mut out = Vec::new();
        for k in 2..self.n {
            for j in 1..k {
                for i in 0..j {
                    let idx = colex_index(i, j, k);
                    if self.ccw[idx] != other.ccw[idx] {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

pub fn order_type(set: &PointSet) -> OrderType {
    let n = set.len();
    let pts = set.points();
    let total = n * (n - 1) * (n - 2) / 6;
    let mut ccw = vec![false; total];
    for k in 2..n {
        for j in 1..k {
            for i in 0..j {
                ccw[colex_index(i, j, k)] = orient2d(pts[i], pts[j], pts[k]) > 0;
            }
        }
    }
    OrderType { n, ccw }
}

/// A point with exact rational coordinates; used for positions along a motion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl RationalPoint {
    pub fn from_point(p: Point) -> Self {
        RationalPoint {
            x: BigRational::from_integer(p.x.into()),
            y: BigRational::from_integer(p.y.into()),
        }
    }

    /// `anchor + t * direction`.
    pub fn along(anchor: Point, direction: Vector, t: &BigRational) -> Self {
        let dx = BigRational::from_integer(direction.x.into());
        let dy = BigRational::from_integer(direction.y.into());
        let a = RationalPoint::from_point(anchor);
        RationalPoint {
            x: a.x + t * dx,
            y: a.y + t * dy,
        }
    }
}

pub fn rational_orientation(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Orientation {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(p(0, 0), p(1, 0), p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(p(0, 0), p(1, 1), p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(p(0, 0), p(0, 1), p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn orientation_is_exact_at_the_coordinate_bound() {
        let m = MAX_COORD;
        // nearly collinear triple with huge coordinates: det = 2^61 - ... exactly
        let a = p(-m, -m);
        let b = p(m, m - 1);
        let c = p(m - 1, m - 2);
        let expected = (b - a).cross(c - a);
        assert_eq!(orient2d(a, b, c), expected);
        assert_eq!(orientation(a, b, c), Orientation::from_sign(expected));
        assert_eq!(orientation(a, p(m, m), p(0, 0)), Orientation::Collinear);
    }

    #[test]
    fn general_position_examples() {
        assert!(PointSet::from_coords(&[(0, 0), (1, 0), (0, 1)]).is_ok());
        assert_eq!(
            PointSet::from_coords(&[(0, 0), (1, 0), (2, 0)]),
            Err(Error::Collinear((0, 1, 2)))
        );
        assert!(PointSet::from_coords(&[(0, 0), (5, 1), (10, 3), (3, 7)]).is_ok());
    }

    #[test]
    fn general_position_reports_smallest_witness() {
        // collinear triples: (1,3,4) via y = x line shifted, and (0,2,5)
        let pts = [(0, 0), (1, 5), (3, 1), (2, 6), (3, 7), (6, 2)];
        assert_eq!(
            validate_general_position(&pts.map(|(x, y)| p(x, y))),
            Err(Error::Collinear((0, 2, 5)))
        );
        assert_eq!(
            PointSet::from_coords(&[(0, 0), (4, 4), (1, 3), (4, 4)]),
            Err(Error::DuplicatePoint(1, 3))
        );
    }

    #[test]
    fn rejects_small_and_out_of_range_sets() {
        assert_eq!(PointSet::from_coords(&[(0, 0), (1, 0)]), Err(Error::TooFewPoints(2)));
        assert!(matches!(
            PointSet::from_coords(&[(0, 0), (1, 0), (0, MAX_COORD + 1)]),
            Err(Error::CoordinateOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn hull_examples() {
        let square = PointSet::from_coords(&[(2, 2), (0, 0), (0, 2), (2, 0)]).unwrap();
        assert_eq!(convex_hull(&square), vec![1, 3, 0, 2]);
        let tri = PointSet::from_coords(&[(0, 0), (10, 0), (0, 10), (2, 3)]).unwrap();
        assert_eq!(convex_hull(&tri), vec![0, 1, 2]);
    }

    #[test]
    fn order_type_examples() {
        let tri = PointSet::from_coords(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        let ot = order_type(&tri);
        assert_eq!(ot.orientation(0, 1, 2), Orientation::CounterClockwise);
        assert_eq!(ot.orientation(1, 0, 2), Orientation::Clockwise);
        assert_eq!(ot.orientation(2, 0, 1), Orientation::CounterClockwise);

        // convex pentagon indexed counterclockwise: every triple i<j<k is CCW
        let penta = PointSet::from_coords(&[(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)]).unwrap();
        let ot = order_type(&penta);
        for k in 2..5 {
            for j in 1..k {
                for i in 0..j {
                    assert_eq!(ot.orientation(i, j, k), Orientation::CounterClockwise);
                }
            }
        }

        let mirrored = penta.map(|q| p(-q.x, q.y)).unwrap();
        let mo = order_type(&mirrored);
        assert_eq!(ot.diff(&mo).len(), 10);
        for k in 2..5 {
            for j in 1..k {
                for i in 0..j {
                    assert_eq!(mo.orientation(i, j, k), ot.orientation(i, j, k).reversed());
                }
            }
        }
    }

    #[test]
    fn from_rationals_clears_denominators() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let set = PointSet::from_rationals(&[(r(0, 1), r(0, 1)), (r(1, 2), r(0, 1)), (r(0, 1), r(1, 3))]).unwrap();
        assert_eq!(set.points(), &[p(0, 0), p(3, 0), p(0, 2)]);
    }

    #[test]
    fn angle_cmp_orders_full_circle() {
        let dirs = [
            Vector::new(1, 0),
            Vector::new(1, 1),
            Vector::new(-1, 1),
            Vector::new(-1, 0),
            Vector::new(-1, -1),
            Vector::new(1, -1),
        ];
        for a in 0..dirs.len() {
            for b in 0..dirs.len() {
                assert_eq!(dirs[a].angle_cmp(dirs[b]), a.cmp(&b));
            }
        }
    }
}
