//! Points moving along straight lines: mutation events, halving rays and
//! the reduction of a point set to one with a triangular convex hull.

mod events;
mod ray;
mod reduce;

pub use events::{
    apply_motion, edge_transfer, motion_events, moved_set, position_at, sample_parameters, MutationEvent,
};
pub use ray::{
    halving_ray, halving_ray_attempt, halving_ray_pair, halving_ray_pair_attempt, ray_intersection, rays_cross_inside,
    rays_meet_on_tails, HalvingRay,
};
pub use reduce::{
    compress, event_count, far_extreme_check, ray_is_settled, reduce_to_triangle, reduce_to_triangle_with, replay,
    settle_far, MotionStep, ReductionTrace, SetStats, StopRule,
};
