use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, rational_orientation, Orientation, PointSet, RationalPoint, Vector};
use crate::rational::simplest_direction_in_cone;

/// An oriented line through an extreme point that splits the remaining
/// points as evenly as possible. The point moves along `direction` (the
/// head), which points out of the hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalvingRay {
    pub anchor: usize,
    pub direction: Vector,
}

impl HalvingRay {
    /// Points strictly left / right of the directed line, anchor excluded.
    /// `None` if some other point lies on the line.
    pub fn split(&self, set: &PointSet) -> Option<(usize, usize)> {
        let a = set.point(self.anchor);
        let (mut left, mut right) = (0, 0);
        for (i, &x) in set.points().iter().enumerate() {
            if i == self.anchor {
                continue;
            }
            match self.direction.cross(x - a).signum() {
                1 => left += 1,
                -1 => right += 1,
                _ => return None,
            }
        }
        Some((left, right))
    }

    /// Checks every ray invariant against `set`: extreme anchor, line
    /// avoiding the other points, halving split, and head pointing away
    /// from the hull.
    pub fn is_valid_for(&self, set: &PointSet) -> bool {
        let n = set.len();
        if self.anchor >= n || self.direction.is_zero() || !crate::geometry::is_extreme(set, self.anchor) {
            return false;
        }
        let Some((l, r)) = self.split(set) else {
            return false;
        };
        if l.min(r) != (n - 1) / 2 {
            return false;
        }
        // With points on both sides, the backward direction lies inside the
        // cone of the set at the anchor iff it is between the first and
        // last points of the angular fan.
        let order = fan(set, self.anchor);
        let a = set.point(self.anchor);
        let first = set.point(order[0]) - a;
        let last = set.point(order[order.len() - 1]) - a;
        let back = -self.direction;
        first.cross(back) > 0 && back.cross(last) > 0
    }
}

/// The other points sorted counterclockwise around the extreme point `p`.
/// Valid because all of them lie in a cone of angle less than a half-turn.
pub(crate) fn fan(set: &PointSet, p: usize) -> Vec<usize> {
    let a = set.point(p);
    let mut order: Vec<usize> = (0..set.len()).filter(|&i| i != p).collect();
    order.sort_by(|&i, &j| 0.cmp(&(set.point(i) - a).cross(set.point(j) - a)));
    order
}

/// Admissible numbers of fan points before the gap holding the ray's tail.
fn halving_splits(n: usize) -> Vec<usize> {
    if n % 2 == 1 {
        vec![(n - 1) / 2]
    } else {
        vec![(n - 2) / 2, n / 2]
    }
}

/// Candidate tail directions inside the gap between two consecutive fan
/// vectors: the simplest interior direction first, then directions
/// successively closer to `to`.
fn gap_direction(from: Vector, to: Vector, attempt: usize) -> Vector {
    let mut v = simplest_direction_in_cone(from, to);
    for _ in 0..attempt {
        v = simplest_direction_in_cone(v, to);
    }
    v
}

fn ray_in_gap(set: &PointSet, p: usize, order: &[usize], split: usize, attempt: usize) -> HalvingRay {
    let a = set.point(p);
    let from = set.point(order[split - 1]) - a;
    let to = set.point(order[split]) - a;
    HalvingRay {
        anchor: p,
        direction: -gap_direction(from, to, attempt),
    }
}

fn require_extreme(set: &PointSet, p: usize) -> Result<Vec<usize>> {
    set.check_index(p)?;
    let hull = convex_hull(set);
    if !hull.contains(&p) {
        return Err(Error::NotExtreme(p));
    }
    Ok(hull)
}

/// A halving ray at the extreme point `p`, with its tail inside the median
/// angular gap around `p`.
pub fn halving_ray(set: &PointSet, p: usize) -> Result<HalvingRay> {
    halving_ray_attempt(set, p, 0)
}

/// As [`halving_ray`], taking the `attempt`-th candidate direction of the
/// median gap. Different attempts give different directions.
pub fn halving_ray_attempt(set: &PointSet, p: usize, attempt: usize) -> Result<HalvingRay> {
    require_extreme(set, p)?;
    let order = fan(set, p);
    Ok(ray_in_gap(set, p, &order, halving_splits(set.len())[0], attempt))
}

/// Halving rays at the non-consecutive extreme points `p` and `q` whose
/// tails lie in the closed half-plane bounded by line `pq` that holds at
/// least `ceil((n-2)/2)` of the other points.
pub fn halving_ray_pair(set: &PointSet, p: usize, q: usize) -> Result<(HalvingRay, HalvingRay)> {
    halving_ray_pair_attempt(set, p, q, 0)
}

pub fn halving_ray_pair_attempt(
    set: &PointSet,
    p: usize,
    q: usize,
    attempt: usize,
) -> Result<(HalvingRay, HalvingRay)> {
    let hull = require_extreme(set, p)?;
    require_extreme(set, q)?;
    let h = hull.len();
    let ip = hull.iter().position(|&v| v == p).unwrap();
    let iq = hull.iter().position(|&v| v == q).unwrap();
    if p == q || (ip + 1) % h == iq || (iq + 1) % h == ip {
        return Err(Error::ConsecutiveExtremes(p, q));
    }
    let (left, right) = set.side_counts(p, q);
    let use_left = left >= right;
    let splits = halving_splits(set.len());

    let fan_p = fan(set, p);
    let q_pos = fan_p.iter().position(|&v| v == q).unwrap();
    // Around p, points after q in the fan are left of p->q.
    let split_p = splits
        .iter()
        .copied()
        .find(|&i| if use_left { i > q_pos } else { i <= q_pos })
        .ok_or_else(|| Error::Internal(format!("no admissible gap at point {}", p + 1)))?;

    let fan_q = fan(set, q);
    let p_pos = fan_q.iter().position(|&v| v == p).unwrap();
    // Around q, points after p in the fan are right of p->q.
    let split_q = splits
        .iter()
        .copied()
        .find(|&i| if use_left { i <= p_pos } else { i > p_pos })
        .ok_or_else(|| Error::Internal(format!("no admissible gap at point {}", q + 1)))?;

    Ok((
        ray_in_gap(set, p, &fan_p, split_p, attempt),
        ray_in_gap(set, q, &fan_q, split_q, attempt),
    ))
}

/// Intersection of the supporting lines of two rays as
/// `(point, s, u)` with `point = anchor_a + s d_a = anchor_b + u d_b`;
/// `None` for parallel lines.
pub fn ray_intersection(
    set: &PointSet,
    a: &HalvingRay,
    b: &HalvingRay,
) -> Option<(RationalPoint, BigRational, BigRational)> {
    let denom = a.direction.cross(b.direction);
    if denom == 0 {
        return None;
    }
    let pa = set.point(a.anchor);
    let pb = set.point(b.anchor);
    let w = pb - pa;
    let s = BigRational::new(w.cross(b.direction).into(), denom.into());
    let u = BigRational::new(w.cross(a.direction).into(), denom.into());
    Some((RationalPoint::along(pa, a.direction, &s), s, u))
}

/// True iff the supporting lines of the two rays meet strictly inside the
/// convex hull of `set`.
pub fn rays_cross_inside(set: &PointSet, a: &HalvingRay, b: &HalvingRay) -> bool {
    let Some((x, _, _)) = ray_intersection(set, a, b) else {
        return false;
    };
    let hull = convex_hull(set);
    let h = hull.len();
    (0..h).all(|i| {
        let u = RationalPoint::from_point(set.point(hull[i]));
        let v = RationalPoint::from_point(set.point(hull[(i + 1) % h]));
        rational_orientation(&u, &v, &x) == Orientation::CounterClockwise
    })
}

/// True iff both tails (the parts behind the anchors) contain the
/// intersection point.
pub fn rays_meet_on_tails(set: &PointSet, a: &HalvingRay, b: &HalvingRay) -> bool {
    match ray_intersection(set, a, b) {
        Some((_, s, u)) => s < BigRational::zero() && u < BigRational::zero(),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    #[test]
    fn square_with_center() {
        let s = set(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        for p in 0..4 {
            let r = halving_ray(&s, p).unwrap();
            assert_eq!(r.split(&s), Some((2, 2)));
            assert!(r.is_valid_for(&s));
        }
        assert_eq!(halving_ray(&s, 4), Err(Error::NotExtreme(4)));
    }

    #[test]
    fn even_split() {
        let s = set(&[(0, 0), (9, 1), (7, 8), (1, 6), (4, 3), (5, 5)]);
        for &p in &convex_hull(&s) {
            let r = halving_ray(&s, p).unwrap();
            let (l, rr) = r.split(&s).unwrap();
            assert_eq!((l.min(rr), l.max(rr)), (2, 3));
            assert!(r.is_valid_for(&s));
        }
    }

    #[test]
    fn attempts_give_distinct_valid_rays() {
        let s = set(&[(0, 0), (9, 1), (7, 8), (1, 6), (4, 3), (5, 5), (2, 7)]);
        let mut seen = std::collections::HashSet::new();
        for attempt in 0..6 {
            let r = halving_ray_attempt(&s, 0, attempt).unwrap();
            assert!(r.is_valid_for(&s));
            assert!(seen.insert(r.direction));
        }
    }

    #[test]
    fn opposite_corners_of_a_square() {
        let s = set(&[(0, 0), (10, 0), (10, 10), (0, 10), (3, 4), (6, 7), (8, 3)]);
        let (a, b) = halving_ray_pair(&s, 0, 2).unwrap();
        assert!(a.is_valid_for(&s) && b.is_valid_for(&s));
        assert!(rays_cross_inside(&s, &a, &b));
        assert!(rays_meet_on_tails(&s, &a, &b));
        assert_eq!(halving_ray_pair(&s, 0, 1), Err(Error::ConsecutiveExtremes(0, 1)));
        assert_eq!(halving_ray_pair(&s, 0, 4), Err(Error::NotExtreme(4)));
    }

    #[test]
    fn hexagon_with_interior_point() {
        let s = set(&[(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3), (1, 1)]);
        for (p, q) in [(0, 2), (1, 3), (2, 4), (3, 5), (4, 0), (5, 1)] {
            let (a, b) = halving_ray_pair(&s, p, q).unwrap();
            assert!(a.is_valid_for(&s) && b.is_valid_for(&s));
            assert!(rays_cross_inside(&s, &a, &b), "{p} {q}");
        }
    }
}
