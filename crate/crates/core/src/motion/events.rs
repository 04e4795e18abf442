use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{orient2d, rational_orientation, Point, PointSet, RationalPoint, Vector};
use crate::rational::{format_ratio, simplest_between};

/// The moving point becomes collinear with `pair` at parameter `t`.
///
/// `center` is the one of the three points lying between the other two at
/// that moment, and `k` counts the points strictly on the center's side of
/// the line through the other two just before the event (the three points
/// themselves excluded). The crossing number changes by `2k - n + 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationEvent {
    pub moving: usize,
    pub pair: (usize, usize),
    #[serde(serialize_with = "serialize_ratio")]
    pub t: BigRational,
    pub k: usize,
    #[serde(rename = "delta")]
    pub crossing_delta: i64,
    pub center: usize,
}

pub(crate) fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

/// Unit transfer of the edge vector caused by an event of class `k` in a
/// set of `n` points: one edge leaves depth `.0` and arrives at depth `.1`.
/// `None` when the counts are unchanged, which happens at `2k = n - 3`.
pub fn edge_transfer(n: usize, k: usize) -> Option<(usize, usize)> {
    let (k2, m) = (2 * k, n - 3);
    if k2 < m {
        Some((k, k + 1))
    } else if k2 == m {
        None
    } else {
        let j = m - k;
        Some((j + 1, j))
    }
}

/// Position of `point` after moving it to parameter `t` along `direction`.
pub fn position_at(set: &PointSet, point: usize, direction: Vector, t: &BigRational) -> RationalPoint {
    RationalPoint::along(set.point(point), direction, t)
}

fn rational_coords(set: &PointSet, point: usize, at: RationalPoint) -> Vec<(BigRational, BigRational)> {
    set.points()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            if i == point {
                (at.x.clone(), at.y.clone())
            } else {
                let r = RationalPoint::from_point(p);
                (r.x, r.y)
            }
        })
        .collect()
}

/// The set with `point` moved to parameter `t` along `direction`,
/// rescaled to integer coordinates. Fails if the new position violates
/// general position (for instance when `t` is an event parameter).
pub fn moved_set(set: &PointSet, point: usize, direction: Vector, t: &BigRational) -> Result<PointSet> {
    PointSet::from_rationals(&rational_coords(set, point, position_at(set, point, direction, t)))
}

/// All mutations met while `point` moves along `anchor + t * direction`
/// for `t` in `(0, stop]` (unbounded when `stop` is `None`), sorted by
/// `t`. Errors if two events share a parameter.
pub fn motion_events(
    set: &PointSet,
    point: usize,
    direction: Vector,
    stop: Option<&BigRational>,
) -> Result<Vec<MutationEvent>> {
    set.check_index(point)?;
    if direction.is_zero() {
        return Err(Error::OutOfRange("direction", "zero vector".into()));
    }
    if let Some(s) = stop {
        if !s.is_positive() {
            return Err(Error::OutOfRange("stop", s.to_string()));
        }
    }
    let n = set.len();
    let a = set.point(point);
    let others: Vec<usize> = (0..n).filter(|&i| i != point).collect();

    // orient(a + t d, q, r) = orient(a, q, r) + t * cross(d, q - r)
    let mut raw: Vec<(BigRational, usize, usize)> = Vec::new();
    for (x, &q) in others.iter().enumerate() {
        for &r in &others[x + 1..] {
            let (pq, pr) = (set.point(q), set.point(r));
            let slope = direction.cross(pq - pr);
            if slope == 0 {
                continue;
            }
            let t = BigRational::new(BigInt::from(-orient2d(a, pq, pr)), BigInt::from(slope));
            if t.is_positive() && stop.is_none_or(|s| &t <= s) {
                raw.push((t, q, r));
            }
        }
    }
    raw.sort_by(|x, y| x.0.cmp(&y.0));
    for w in raw.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::SimultaneousEvents(format_ratio(&w[0].0)));
        }
    }

    let mut events = Vec::with_capacity(raw.len());
    let mut previous = BigRational::zero();
    for (t, q, r) in raw {
        let before = simplest_between(&previous, Some(&t));
        let at = position_at(set, point, direction, &t);
        let center = center_of(&at, point, set.point(q), q, set.point(r), r);
        let pos_before = position_at(set, point, direction, &before);
        let k = center_side_count(set, point, &pos_before, (point, q, r), center);
        events.push(MutationEvent {
            moving: point,
            pair: (q, r),
            t: t.clone(),
            k,
            crossing_delta: 2 * k as i64 - n as i64 + 3,
            center,
        });
        previous = t;
    }
    Ok(events)
}

/// The middle one of three collinear points.
fn center_of(moving_at: &RationalPoint, moving: usize, q: Point, qi: usize, r: Point, ri: usize) -> usize {
    let rq = RationalPoint::from_point(q);
    let dir = r - q;
    let dx = BigRational::from_integer(dir.x.into());
    let dy = BigRational::from_integer(dir.y.into());
    let s = (&moving_at.x - &rq.x) * &dx + (&moving_at.y - &rq.y) * &dy;
    let len = BigRational::from_integer(dir.dot(dir).into());
    if s.is_negative() {
        qi
    } else if s > len {
        ri
    } else {
        moving
    }
}

fn center_side_count(
    set: &PointSet,
    moving: usize,
    moving_pos: &RationalPoint,
    triple: (usize, usize, usize),
    center: usize,
) -> usize {
    let pos = |i: usize| {
        if i == moving {
            moving_pos.clone()
        } else {
            RationalPoint::from_point(set.point(i))
        }
    };
    let [u, v]: [usize; 2] = [triple.0, triple.1, triple.2]
        .into_iter()
        .filter(|&i| i != center)
        .collect::<Vec<_>>()
        .try_into()
        .expect("two non-center points");
    let (pu, pv) = (pos(u), pos(v));
    let side = rational_orientation(&pu, &pv, &pos(center));
    (0..set.len())
        .filter(|&x| x != triple.0 && x != triple.1 && x != triple.2)
        .filter(|&x| rational_orientation(&pu, &pv, &pos(x)) == side)
        .count()
}

/// Moves `point` to parameter `stop` along `direction` and rescales to
/// integer coordinates.
pub fn apply_motion(set: &PointSet, point: usize, direction: Vector, stop: &BigRational) -> Result<PointSet> {
    set.check_index(point)?;
    if !stop.is_positive() {
        return Err(Error::OutOfRange("stop", stop.to_string()));
    }
    moved_set(set, point, direction, stop)
}

/// Parameters strictly between consecutive events (and after the last one,
/// up to `stop`), chosen as the simplest rationals in each interval.
pub fn sample_parameters(events: &[MutationEvent], stop: &BigRational) -> Vec<BigRational> {
    let mut bounds = vec![BigRational::zero()];
    bounds.extend(events.iter().map(|e| e.t.clone()));
    let mut samples: Vec<BigRational> = bounds
        .windows(2)
        .map(|w| simplest_between(&w[0], Some(&w[1])))
        .collect();
    let last = bounds.last().unwrap();
    if last < stop {
        samples.push(simplest_between(last, Some(stop)));
    }
    samples
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::edge_vector_bruteforce;
    use crate::crossings::crossings_bruteforce;
    use crate::geometry::order_type;

    fn set(c: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn leaving_a_triangle() {
        let s = set(&[(0, 0), (10, 0), (0, 10), (1, 1)]);
        let d = Vector::new(1, 1);
        let events = motion_events(&s, 3, d, None).unwrap();
        assert_eq!(events.len(), 1);
        let e = &events[0];
        assert_eq!(e.t, r(4, 1));
        assert_eq!(e.pair, (1, 2));
        assert_eq!(e.center, 3);
        // (0,0) is on the moving point's side before the crossing
        assert_eq!(e.k, 1);
        assert_eq!(e.crossing_delta, 1);
        let after = apply_motion(&s, 3, d, &r(5, 1)).unwrap();
        assert_eq!(crossings_bruteforce(&after).crossings, 1);
        assert_eq!(crossings_bruteforce(&s).crossings, 0);
    }

    #[test]
    fn stop_before_first_event() {
        let s = set(&[(0, 0), (10, 0), (0, 10), (1, 1)]);
        assert!(motion_events(&s, 3, Vector::new(1, 1), Some(&r(7, 2)))
            .unwrap()
            .is_empty());
        assert!(motion_events(&s, 3, Vector::new(1, 1), Some(&r(0, 1))).is_err());
        assert_eq!(
            motion_events(&s, 3, Vector::new(1, 1), Some(&r(4, 1))).unwrap().len(),
            1
        );
    }

    #[test]
    fn no_events_keeps_order_type() {
        let s = set(&[(0, 0), (10, 0), (0, 10), (1, 1)]);
        let moved = apply_motion(&s, 3, Vector::new(1, 1), &r(3, 1)).unwrap();
        assert_eq!(order_type(&moved), order_type(&s));
        assert_eq!(moved.point(3), Point::new(4, 4));
        let half = apply_motion(&s, 3, Vector::new(1, 1), &r(1, 2)).unwrap();
        assert_eq!(order_type(&half), order_type(&s));
    }

    #[test]
    fn apply_at_event_is_rejected() {
        let s = set(&[(0, 0), (10, 0), (0, 10), (1, 1)]);
        assert!(matches!(
            apply_motion(&s, 3, Vector::new(1, 1), &r(4, 1)),
            Err(Error::Collinear(_))
        ));
    }

    #[test]
    fn simultaneous_events_are_reported() {
        // the lines through (-1,1),(1,-1) and through (-2,3),(2,-3) both
        // pass through the origin, which the moving point reaches at t = 3
        let s = set(&[(0, -3), (-1, 1), (1, -1), (-2, 3), (2, -3)]);
        let err = motion_events(&s, 0, Vector::new(0, 1), None).unwrap_err();
        assert!(matches!(err, Error::SimultaneousEvents(_)));
    }

    #[test]
    fn each_event_flips_one_triple_and_obeys_laws() {
        let s = set(&[(0, 0), (20, 1), (9, 17), (7, 5), (11, 6), (4, 9), (13, 3)]);
        let d = Vector::new(2, 3);
        let events = motion_events(&s, 3, d, Some(&r(10, 1))).unwrap();
        assert!(!events.is_empty());
        let samples = sample_parameters(&events, &r(10, 1));
        let configs: Vec<PointSet> = samples.iter().map(|t| moved_set(&s, 3, d, t).unwrap()).collect();
        for (i, e) in events.iter().enumerate() {
            let (before, after) = (&configs[i], &configs[i + 1]);
            let diff = order_type(before).diff(&order_type(after));
            assert_eq!(diff.len(), 1);
            let mut triple = [e.moving, e.pair.0, e.pair.1];
            triple.sort_unstable();
            assert_eq!(diff[0], (triple[0], triple[1], triple[2]));
            let dc = crossings_bruteforce(after).crossings as i64 - crossings_bruteforce(before).crossings as i64;
            assert_eq!(dc, e.crossing_delta);
            let eb = edge_vector_bruteforce(before).e;
            let ea = edge_vector_bruteforce(after).e;
            let mut expected = eb.clone();
            if let Some((from, to)) = edge_transfer(s.len(), e.k) {
                expected[from] -= 1;
                expected[to] += 1;
            }
            assert_eq!(ea, expected);
        }
    }

    #[test]
    fn transfer_table() {
        assert_eq!(edge_transfer(9, 1), Some((1, 2)));
        assert_eq!(edge_transfer(9, 3), None);
        assert_eq!(edge_transfer(9, 4), Some((3, 2)));
        assert_eq!(edge_transfer(8, 2), Some((2, 3)));
        assert_eq!(edge_transfer(8, 3), Some((3, 2)));
    }
}
