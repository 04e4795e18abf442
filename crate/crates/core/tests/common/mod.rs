//! Shared oracles for the integration and acceptance tests.
#![allow(dead_code)]

use lcr_core::census::{cumulative, edge_vector_bruteforce};
use lcr_core::crossings::crossings_bruteforce;
use lcr_core::generate::{generate, GeneratorKind, GeneratorSpec};
use lcr_core::geometry::{convex_hull, order_type, PointSet};
use lcr_core::motion::{
    apply_motion, compress, edge_transfer, moved_set, sample_parameters, MotionStep, ReductionTrace,
};

/// `count` random-disc sets with sizes cycling through `sizes`; the radius
/// varies with the index so that both crowded and sparse sets occur.
pub fn random_sets(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<PointSet> {
    let span = sizes.end() - sizes.start() + 1;
    (0..count)
        .map(|i| {
            let spec = GeneratorSpec {
                kind: GeneratorKind::RandomDisc,
                n: sizes.start() + i % span,
                seed: seed.wrapping_mul(1_000_003).wrapping_add(i as u64),
                scale: [20, 100, 1000][i % 3],
            };
            generate(&spec).expect("random sets are generated")
        })
        .collect()
}

/// Checks one motion step against brute-force recounts between events.
/// Returns the configuration after the step.
pub fn check_step(current: &PointSet, step: &MotionStep, along_halving_ray: bool) -> Result<PointSet, String> {
    let n = current.len();
    let d = step.ray.direction;
    if along_halving_ray && !step.ray.is_valid_for(current) {
        return Err(format!("invalid halving ray {:?}", step.ray));
    }
    let samples = sample_parameters(&step.events, &step.stop);
    let mut configs = samples
        .iter()
        .map(|t| moved_set(current, step.moved, d, t).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let end = apply_motion(current, step.moved, d, &step.stop).map_err(|e| e.to_string())?;
    if configs.len() == step.events.len() {
        configs.push(end.clone());
    }
    for (i, ev) in step.events.iter().enumerate() {
        let (before, after) = (&configs[i], &configs[i + 1]);
        let diff = order_type(before).diff(&order_type(after));
        let mut triple = [ev.moving, ev.pair.0, ev.pair.1];
        triple.sort_unstable();
        if diff != vec![(triple[0], triple[1], triple[2])] {
            return Err(format!("event at t = {} flipped {diff:?}", ev.t));
        }
        let dc = crossings_bruteforce(after).crossings as i64 - crossings_bruteforce(before).crossings as i64;
        if dc != ev.crossing_delta || ev.crossing_delta != 2 * ev.k as i64 - n as i64 + 3 {
            return Err(format!(
                "event at t = {}: recount {dc}, recorded delta {} for k = {}",
                ev.t, ev.crossing_delta, ev.k
            ));
        }
        let mut expected = edge_vector_bruteforce(before).e;
        if let Some((from, to)) = edge_transfer(n, ev.k) {
            expected[from] -= 1;
            expected[to] += 1;
        }
        if edge_vector_bruteforce(after).e != expected {
            return Err(format!("event at t = {}: edge vector transfer violated", ev.t));
        }
        if along_halving_ray && (2 * ev.k + 4 > n || ev.crossing_delta >= 0) {
            return Err(format!("event along a halving ray with k = {} (n = {n})", ev.k));
        }
    }
    Ok(if step.compress_after { compress(&end) } else { end })
}

/// Verifies a complete reduction: every event by brute force, replay
/// consistency, and the before/after laws.
pub fn check_reduction(input: &PointSet, output: &PointSet, trace: &ReductionTrace) -> Result<(), String> {
    let mut current = input.clone();
    for step in &trace.steps {
        current = check_step(&current, step, true)?;
    }
    if order_type(&current) != order_type(output) {
        return Err("replayed trace does not reproduce the output order type".into());
    }
    let (b, a) = (&trace.before, &trace.after);
    if convex_hull(output).len() != 3 || a.hull_size != 3 {
        return Err(format!("output hull has {} vertices", convex_hull(output).len()));
    }
    let cr_in = crossings_bruteforce(input).crossings;
    let cr_out = crossings_bruteforce(output).crossings;
    if cr_in != b.crossings || cr_out != a.crossings || cr_out > cr_in {
        return Err(format!("crossings {cr_in} -> {cr_out}"));
    }
    let e_in = cumulative(&edge_vector_bruteforce(input)).values;
    let e_out = cumulative(&edge_vector_bruteforce(output)).values;
    if e_in.iter().zip(&e_out).any(|(x, y)| y > x) {
        return Err(format!("E vector increased: {e_in:?} -> {e_out:?}"));
    }
    if b.hull_size > 3 && e_in == e_out {
        return Err("hull shrank without any drop in the E vector".into());
    }
    if a.halving < b.halving {
        return Err(format!("halving edges {} -> {}", b.halving, a.halving));
    }
    Ok(())
}
