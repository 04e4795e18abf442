use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::events::{apply_motion, motion_events, serialize_ratio, MutationEvent};
use super::ray::{halving_ray_attempt, halving_ray_pair_attempt, rays_cross_inside, HalvingRay};
use crate::census::{edge_vector_sweep, EdgeVector};
use crate::crossings::crossings_from_edge_vector;
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, order_type, Point, PointSet};

/// Where a point moving along its halving ray stops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopRule {
    /// Smallest integer parameter beyond the last event of the motion.
    /// Cheaper, but on some inputs neither pair shrinks the hull.
    BeyondLastEvent,
    /// Both points of the pair stop on one line parallel to `pq` lying
    /// beyond every point of the set, so every hull vertex strictly between
    /// them on the far side becomes interior.
    #[default]
    SupportLine,
}

/// One point moved along one ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MotionStep {
    pub moved: usize,
    pub ray: HalvingRay,
    #[serde(serialize_with = "serialize_ratio")]
    pub stop: BigRational,
    pub events: Vec<MutationEvent>,
    /// Coordinates were compressed after this step.
    #[serde(skip)]
    pub compress_after: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetStats {
    pub crossings: u64,
    pub edge_vector: EdgeVector,
    pub hull_size: usize,
    pub halving: u64,
}

impl SetStats {
    pub fn of(set: &PointSet) -> Result<Self> {
        let edge_vector = edge_vector_sweep(set);
        Ok(SetStats {
            crossings: crossings_from_edge_vector(&edge_vector)?,
            halving: edge_vector.halving(),
            hull_size: convex_hull(set).len(),
            edge_vector,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<MotionStep>,
    pub before: SetStats,
    pub after: SetStats,
}

const DIRECTION_ATTEMPTS: usize = 16;
const STOP_ATTEMPTS: usize = 16;

/// Replaces coordinates by smaller ones with the same order type when
/// possible: translates the minimum corner to the origin and then divides
/// by the largest power of two (with rounding) that keeps every
/// orientation.
pub fn compress(set: &PointSet) -> PointSet {
    let min_x = set.points().iter().map(|p| p.x).min().unwrap();
    let min_y = set.points().iter().map(|p| p.y).min().unwrap();
    let shifted: Vec<Point> = set
        .points()
        .iter()
        .map(|p| Point::new(p.x - min_x, p.y - min_y))
        .collect();
    let Ok(base) = PointSet::new(shifted) else {
        return set.clone();
    };
    let reference = order_type(set);
    let max = base.points().iter().map(|p| p.x.max(p.y)).max().unwrap().max(1);
    let bits = 64 - max.leading_zeros();
    for s in (1..bits).rev() {
        let half = 1i64 << (s - 1);
        let candidate: Vec<Point> = base
            .points()
            .iter()
            .map(|p| Point::new((p.x + half) >> s, (p.y + half) >> s))
            .collect();
        if let Ok(c) = PointSet::new(candidate) {
            if order_type(&c) == reference {
                return c;
            }
        }
    }
    base
}

/// Moves along `ray` up to `stop`, or to the smallest integer parameter
/// past the last event when `stop` is `None`.
fn run_motion(set: &PointSet, ray: &HalvingRay, stop: Option<BigRational>) -> Result<(PointSet, MotionStep)> {
    let events = motion_events(set, ray.anchor, ray.direction, stop.as_ref())?;
    let stop = match stop {
        Some(s) => s,
        None => events
            .last()
            .map(|e| e.t.floor() + BigRational::one())
            .unwrap_or_else(BigRational::one),
    };
    let moved = apply_motion(set, ray.anchor, ray.direction, &stop)?;
    Ok((
        moved,
        MotionStep {
            moved: ray.anchor,
            ray: *ray,
            stop,
            events,
            compress_after: false,
        },
    ))
}

/// Applies the steps of a trace one after another, compressing
/// coordinates where the reduction did.
pub fn replay(set: &PointSet, steps: &[MotionStep]) -> Result<PointSet> {
    steps.iter().try_fold(set.clone(), |cur, step| {
        let moved = apply_motion(&cur, step.moved, step.ray.direction, &step.stop)?;
        Ok(if step.compress_after { compress(&moved) } else { moved })
    })
}

/// Stops on the common support line for the pair `(rp, rq)`; `bump`
/// selects lines farther out.
fn support_stops(set: &PointSet, rp: &HalvingRay, rq: &HalvingRay, bump: usize) -> Option<(BigRational, BigRational)> {
    let (p, q) = (set.point(rp.anchor), set.point(rq.anchor));
    let w = q - p;
    let (left, right) = set.side_counts(rp.anchor, rq.anchor);
    let sigma: i128 = if left >= right { 1 } else { -1 };
    // offset grows away from the side holding the tails
    let offset = |v: crate::geometry::Vector| -sigma * w.cross(v);
    let o_max = set.points().iter().map(|&x| offset(x - p)).max().unwrap_or(0).max(0);
    let (ap, aq) = (offset(rp.direction), offset(rq.direction));
    if ap <= 0 || aq <= 0 {
        return None;
    }
    let l = BigInt::from(ap).lcm(&BigInt::from(aq));
    let o_s: BigInt = (BigInt::from(o_max) / &l + BigInt::from(1 + bump)) * &l;
    Some((
        BigRational::new(o_s.clone(), ap.into()),
        BigRational::new(o_s, aq.into()),
    ))
}

fn try_pair(set: &PointSet, p: usize, q: usize, rule: StopRule) -> Result<Option<(PointSet, Vec<MotionStep>)>> {
    let hull_size = convex_hull(set).len();
    for attempt in 0..DIRECTION_ATTEMPTS {
        let (rp, rq) = halving_ray_pair_attempt(set, p, q, attempt)?;
        if !rays_cross_inside(set, &rp, &rq) {
            return Err(Error::Internal(format!(
                "halving rays at points {} and {} do not cross inside the hull",
                p + 1,
                q + 1
            )));
        }
        let bumps = if rule == StopRule::SupportLine {
            STOP_ATTEMPTS
        } else {
            1
        };
        for bump in 0..bumps {
            let (stop_p, stop_q) = match rule {
                StopRule::BeyondLastEvent => (None, None),
                StopRule::SupportLine => match support_stops(set, &rp, &rq, bump) {
                    Some((a, b)) => (Some(a), Some(b)),
                    None => break,
                },
            };
            let outcome = (|| -> Result<Option<(PointSet, Vec<MotionStep>)>> {
                let (mut current, step_p) = run_motion(set, &rp, stop_p)?;
                let mut steps = vec![step_p];
                // p moved along its own line away from where the two lines
                // meet, so q's ray normally stays valid
                if rq.is_valid_for(&current) {
                    let (after_q, step_q) = run_motion(&current, &rq, stop_q)?;
                    steps.push(step_q);
                    current = after_q;
                }
                if convex_hull(&current).len() >= hull_size {
                    return Ok(None);
                }
                steps.last_mut().unwrap().compress_after = true;
                Ok(Some((compress(&current), steps)))
            })();
            match outcome {
                Ok(found) => return Ok(found),
                Err(Error::SimultaneousEvents(_)) => break,
                Err(Error::Collinear(_)) | Err(Error::DuplicatePoint(..)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

/// Moves pairs of non-consecutive extreme points along halving rays until
/// the hull is a triangle, using the default stop rule.
pub fn reduce_to_triangle(set: &PointSet) -> Result<(PointSet, ReductionTrace)> {
    reduce_to_triangle_with(set, StopRule::default())
}

pub fn reduce_to_triangle_with(set: &PointSet, rule: StopRule) -> Result<(PointSet, ReductionTrace)> {
    let before = SetStats::of(set)?;
    let mut current = set.clone();
    let mut steps = Vec::new();
    loop {
        let hull = convex_hull(&current);
        let h = hull.len();
        if h == 3 {
            break;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..h {
            for b in (a + 2)..h {
                if a == 0 && b == h - 1 {
                    continue;
                }
                let (p, q) = (hull[a].min(hull[b]), hull[a].max(hull[b]));
                pairs.push((p, q));
            }
        }
        pairs.sort_unstable();
        let mut progressed = false;
        for (p, q) in pairs {
            if let Some((next, mut new_steps)) = try_pair(&current, p, q, rule)? {
                current = next;
                steps.append(&mut new_steps);
                progressed = true;
                break;
            }
        }
        if !progressed {
            return Err(Error::NoProgress(h));
        }
    }
    let after = SetStats::of(&current)?;
    Ok((current, ReductionTrace { steps, before, after }))
}

fn require_triangle(set: &PointSet) -> Result<Vec<usize>> {
    let hull = convex_hull(set);
    if hull.len() != 3 {
        return Err(Error::OutOfRange("hull size", format!("{} (expected 3)", hull.len())));
    }
    Ok(hull)
}

/// True if moving `ray.anchor` along `ray` meets no further mutation, i.e.
/// the angular order of the other points around the anchor agrees with
/// their order across the ray direction.
pub fn ray_is_settled(set: &PointSet, ray: &HalvingRay) -> bool {
    let a = set.point(ray.anchor);
    let others: Vec<usize> = (0..set.len()).filter(|&i| i != ray.anchor).collect();
    others.iter().enumerate().all(|(i, &x)| {
        others[i + 1..].iter().all(|&y| {
            let (px, py) = (set.point(x), set.point(y));
            let across = ray.direction.cross(px - py).signum();
            let around = crate::geometry::orient2d(a, px, py).signum();
            across == 0 || across == around
        })
    })
}

/// For a set with a triangular hull: true iff every extreme point is
/// settled along its halving ray.
pub fn far_extreme_check(set: &PointSet) -> Result<bool> {
    let hull = require_triangle(set)?;
    for p in hull {
        if !ray_is_settled(set, &halving_ray_attempt(set, p, 0)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Moves extreme points along their halving rays (reducing the hull again
/// whenever it grows) until `far_extreme_check` holds. Every step strictly
/// lowers the crossing number, so this terminates.
pub fn settle_far(set: &PointSet) -> Result<(PointSet, Vec<MotionStep>)> {
    let (mut current, trace) = reduce_to_triangle(set)?;
    let mut steps = trace.steps;
    'outer: loop {
        for p in require_triangle(&current)? {
            let mut moved = None;
            for attempt in 0..DIRECTION_ATTEMPTS {
                let ray = halving_ray_attempt(&current, p, attempt)?;
                if attempt == 0 && ray_is_settled(&current, &ray) {
                    break;
                }
                match run_motion(&current, &ray, None) {
                    Ok((next, mut step)) => {
                        step.compress_after = true;
                        moved = Some((compress(&next), step));
                        break;
                    }
                    Err(Error::SimultaneousEvents(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            if let Some((next, step)) = moved {
                steps.push(step);
                let (reduced, trace) = reduce_to_triangle(&next)?;
                steps.extend(trace.steps);
                current = reduced;
                continue 'outer;
            }
        }
        return Ok((current, steps));
    }
}

/// Total number of mutations recorded in a list of steps.
pub fn event_count(steps: &[MotionStep]) -> usize {
    steps.iter().map(|s| s.events.len()).sum()
}
