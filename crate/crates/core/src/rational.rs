//! Small exact-rational utilities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::geometry::Vector;

/// The simplest rational (smallest denominator, then smallest numerator)
/// strictly between `lo` and `hi`, where `0 <= lo < hi` and `hi = None`
/// stands for infinity.
pub fn simplest_between(lo: &BigRational, hi: Option<&BigRational>) -> BigRational {
    assert!(!lo.is_negative(), "simplest_between needs lo >= 0");
    if let Some(h) = hi {
        assert!(lo < h, "empty interval");
    }
    let floor = lo.floor();
    let candidate = &floor + BigRational::one();
    if hi.is_none_or(|h| &candidate < h) {
        return candidate;
    }
    let hi = hi.unwrap();
    // x = floor + 1/y with y in (1/(hi - floor), 1/(lo - floor))
    let inner_lo = (hi - &floor).recip();
    let lo_frac = lo - &floor;
    let inner_hi = if lo_frac.is_zero() { None } else { Some(lo_frac.recip()) };
    let y = simplest_between(&inner_lo, inner_hi.as_ref());
    floor + y.recip()
}

/// The simplest rational strictly between two signed rationals.
pub fn simplest_between_signed(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return BigRational::zero();
    }
    if !lo.is_negative() {
        simplest_between(lo, Some(hi))
    } else {
        -simplest_between(&-hi, Some(&-lo))
    }
}

fn rotate_quarter(v: Vector, times: u32) -> Vector {
    (0..times % 4).fold(v, |v, _| Vector::new(-v.y, v.x))
}

/// The integer vector of smallest "complexity" strictly inside the cone
/// from `from` counterclockwise to `to`. The cone must span less than a
/// half-turn (`from x to > 0`).
///
/// Axis directions are preferred; otherwise the cone is rotated into the
/// first quadrant and the simplest slope between the two boundary slopes is
/// taken.
pub fn simplest_direction_in_cone(from: Vector, to: Vector) -> Vector {
    assert!(from.cross(to) > 0, "cone must span less than a half-turn");
    let inside = |v: Vector| from.cross(v) > 0 && v.cross(to) > 0;
    for axis in [
        Vector::new(1, 0),
        Vector::new(0, 1),
        Vector::new(-1, 0),
        Vector::new(0, -1),
    ] {
        if inside(axis) {
            return axis;
        }
    }
    // No axis strictly inside: the cone sits in one closed quadrant.
    let turns = (0..4)
        .find(|&r| {
            let a = rotate_quarter(from, r);
            let b = rotate_quarter(to, r);
            a.x >= 0 && a.y >= 0 && b.x >= 0 && b.y >= 0
        })
        .expect("a cone without interior axis lies in a quadrant");
    let a = rotate_quarter(from, turns);
    let b = rotate_quarter(to, turns);
    // slopes increase counterclockwise within the first quadrant
    let lo = BigRational::new(BigInt::from(a.y), BigInt::from(a.x));
    let hi = if b.x == 0 {
        None
    } else {
        Some(BigRational::new(BigInt::from(b.y), BigInt::from(b.x)))
    };
    let slope = simplest_between(&lo, hi.as_ref());
    let (num, den) = (slope.numer().clone(), slope.denom().clone());
    let g = num.gcd(&den);
    let to_i64 = |v: BigInt| -> i64 { i64::try_from(v).expect("direction fits in i64") };
    let v = Vector::new(to_i64(&den / &g), to_i64(&num / &g));
    let back = rotate_quarter(v, (4 - turns) % 4);
    debug_assert!(inside(back));
    back
}

pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_ratio(s: &str) -> Option<BigRational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}
