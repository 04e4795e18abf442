//! Plain-text point-set format.
//!
//! ```text
//! # optional comment lines start with '#'
//! 4
//! 0 0
//! 10 0
//! 0 10
//! 3 3
//! ```
//!
//! The first non-comment line holds `n`, followed by `n` lines of two
//! whitespace-separated integers. Blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("expected point count, found {header:?}"),
    })?;

    let mut points = Vec::with_capacity(n);
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two integers, found {line:?}"),
            });
        }
        let coord = |s: &str| {
            s.parse::<i64>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid integer {s:?}"),
            })
        };
        points.push(Point::new(coord(fields[0])?, coord(fields[1])?));
    }
    if points.len() != n {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("header announces {n} points, found {}", points.len()),
        });
    }
    PointSet::new(points)
}

pub fn format_point_set(set: &PointSet) -> String {
    let mut out = String::new();
    writeln!(out, "{}", set.len()).unwrap();
    for p in set.points() {
        writeln!(out, "{} {}", p.x, p.y).unwrap();
    }
    out
}
