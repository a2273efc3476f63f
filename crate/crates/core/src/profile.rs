//! Vertical-line counting profile of a tiling.
//!
//! For `0 < c < 1`, the profile value is the number of tiles met by the
//! vertical line `x = c`. It is a step function whose breakpoints are the
//! abscissas of vertical tile edges, and its integral over `[0, 1]` equals
//! the total side length of the tiling: every tile contributes `1` over an
//! interval of length `s`.
//!
//! Values are only defined on the open intervals between breakpoints. A
//! line running along a tile edge is never evaluated, which cannot change
//! the integral.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::symmetry::{apply_symmetry, D4};
use crate::tiling::Tiling;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepProfile {
    breakpoints: Vec<Rational>,
    values: Vec<u32>,
}

impl StepProfile {
    pub fn new(breakpoints: Vec<Rational>, values: Vec<u32>) -> Result<Self> {
        let malformed = |m: &str| Err(Error::MalformedProfile(m.into()));
        if breakpoints.len() < 2 {
            return malformed("need at least two breakpoints");
        }
        if !breakpoints[0].is_zero() || !breakpoints[breakpoints.len() - 1].is_one() {
            return malformed("breakpoints must start at 0 and end at 1");
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return malformed("breakpoints must be strictly increasing");
        }
        if values.len() + 1 != breakpoints.len() {
            return malformed("need exactly one value per interval");
        }
        if values.contains(&0) {
            return malformed("values must be at least 1");
        }
        Ok(StepProfile {
            breakpoints,
            values,
        })
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `(left, right, value)` for each open interval.
    pub fn intervals(&self) -> impl Iterator<Item = (&Rational, &Rational, u32)> {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, &v)| (&w[0], &w[1], v))
    }

    pub fn integral(&self) -> Rational {
        self.intervals()
            .map(|(a, b, v)| (b - a) * rational::int(i64::from(v)))
            .sum()
    }

    /// Smallest value attained on any interval.
    pub fn min_value(&self) -> u32 {
        *self.values.iter().min().expect("profile has an interval")
    }
}

impl fmt::Display for StepProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, v) in self.intervals() {
            writeln!(
                f,
                "[{}, {}) -> {v}",
                rational::format(a),
                rational::format(b)
            )?;
        }
        Ok(())
    }
}

/// Sweeps the sorted distinct vertical edge abscissas, adding one at each
/// left edge and removing one at each right edge.
pub fn vertical_profile(t: &Tiling) -> StepProfile {
    let mut deltas: BTreeMap<Rational, i64> = BTreeMap::new();
    for tile in t.tiles() {
        *deltas.entry(tile.x.clone()).or_default() += 1;
        *deltas.entry(tile.right()).or_default() -= 1;
    }
    let mut breakpoints = Vec::with_capacity(deltas.len());
    let mut values = Vec::with_capacity(deltas.len());
    let mut running = 0i64;
    for (x, delta) in deltas {
        if !breakpoints.is_empty() {
            values.push(u32::try_from(running).expect("tile count is positive inside the square"));
        }
        breakpoints.push(x);
        running += delta;
    }
    debug_assert_eq!(running, 0);
    StepProfile::new(breakpoints, values).expect("a valid tiling yields a well-formed profile")
}

/// Profile along horizontal lines, via a quarter turn.
pub fn horizontal_profile(t: &Tiling) -> StepProfile {
    vertical_profile(&apply_symmetry(t, D4::Rot90))
}

pub fn integrate(p: &StepProfile) -> Rational {
    p.integral()
}

/// True iff the profile integral equals the total side length. This is an
/// identity; `false` means a bug.
pub fn check_staton_tyler(t: &Tiling) -> bool {
    integrate(&vertical_profile(t)) == t.sigma()
}
