//! Tiles, tilings and exact validation.
//!
//! A candidate list of tiles is a tiling of the unit square iff every tile
//! has positive side and lies inside the square, interiors are pairwise
//! disjoint, and the areas sum to exactly 1. Disjoint contained squares of
//! total area 1 cover the square, so no sweep over the plane is needed.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Axis-aligned square given by its lower-left corner and side length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    pub x: Rational,
    pub y: Rational,
    pub s: Rational,
}

impl Tile {
    pub fn new(x: Rational, y: Rational, s: Rational) -> Self {
        Tile { x, y, s }
    }

    pub fn right(&self) -> Rational {
        &self.x + &self.s
    }

    pub fn top(&self) -> Rational {
        &self.y + &self.s
    }

    pub fn area(&self) -> Rational {
        &self.s * &self.s
    }

    /// True when the open squares intersect.
    pub fn overlaps(&self, other: &Tile) -> bool {
        self.x < other.right()
            && other.x < self.right()
            && self.y < other.top()
            && other.y < self.top()
    }

    /// True when `other` lies inside this tile (closed containment).
    pub fn contains(&self, other: &Tile) -> bool {
        self.x <= other.x
            && self.y <= other.y
            && other.right() <= self.right()
            && other.top() <= self.top()
    }

    /// Number of sides of the unit square this tile touches.
    pub fn sides_touched(&self) -> usize {
        [
            self.x.is_zero(),
            self.y.is_zero(),
            self.right().is_one(),
            self.top().is_one(),
        ]
        .into_iter()
        .filter(|&b| b)
        .count()
    }

    pub fn is_corner(&self) -> bool {
        (self.x.is_zero() || self.right().is_one()) && (self.y.is_zero() || self.top().is_one())
    }

    pub fn scaled(&self, factor: &Rational, dx: &Rational, dy: &Rational) -> Tile {
        Tile {
            x: &self.x * factor + dx,
            y: &self.y * factor + dy,
            s: &self.s * factor,
        }
    }
}

/// Tiles order by `(y, x, s)`, the serialization order.
impl Ord for Tile {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.y, &self.x, &self.s).cmp(&(&other.y, &other.x, &other.s))
    }
}

impl PartialOrd for Tile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            rational::format(&self.x),
            rational::format(&self.y),
            rational::format(&self.s)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    Empty,
    NonPositiveSide { index: usize },
    OutOfBounds { index: usize },
    Overlap { first: usize, second: usize },
    AreaSum { sum: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no tiles"),
            Violation::NonPositiveSide { index } => write!(f, "tile {index} has side <= 0"),
            Violation::OutOfBounds { index } => write!(f, "tile {index} leaves the unit square"),
            Violation::Overlap { first, second } => write!(f, "tiles {first},{second} overlap"),
            Violation::AreaSum { sum } => write!(f, "area sum {} ≠ 1", rational::format(sum)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks an arbitrary candidate tile list. Indices in the report refer to
/// positions in `tiles`.
pub fn validate(tiles: &[Tile]) -> ValidationReport {
    let mut violations = Vec::new();
    if tiles.is_empty() {
        violations.push(Violation::Empty);
    }
    let one = Rational::one();
    for (index, tile) in tiles.iter().enumerate() {
        if !tile.s.is_positive() {
            violations.push(Violation::NonPositiveSide { index });
        }
        if tile.x.is_negative() || tile.y.is_negative() || tile.right() > one || tile.top() > one {
            violations.push(Violation::OutOfBounds { index });
        }
    }
    violations.extend(overlaps(tiles));
    let sum: Rational = tiles.iter().map(Tile::area).sum();
    if !tiles.is_empty() && sum != one {
        violations.push(Violation::AreaSum { sum });
    }
    ValidationReport { violations }
}

/// Overlapping pairs among tiles of positive side, found by sorting on the
/// left edge and comparing each tile only with those starting before its
/// right edge.
fn overlaps(tiles: &[Tile]) -> Vec<Violation> {
    struct Extent<'a> {
        index: usize,
        tile: &'a Tile,
        right: Rational,
        top: Rational,
    }
    let mut extents: Vec<Extent> = tiles
        .iter()
        .enumerate()
        .filter(|(_, t)| t.s.is_positive())
        .map(|(index, tile)| Extent {
            index,
            tile,
            right: tile.right(),
            top: tile.top(),
        })
        .collect();
    extents.sort_by(|a, b| a.tile.x.cmp(&b.tile.x));
    let mut found = Vec::new();
    for (i, a) in extents.iter().enumerate() {
        for b in &extents[i + 1..] {
            if b.tile.x >= a.right {
                break;
            }
            if a.tile.y < b.top && b.tile.y < a.top {
                let (first, second) = (a.index.min(b.index), a.index.max(b.index));
                found.push(Violation::Overlap { first, second });
            }
        }
    }
    found.sort_by_key(|v| match v {
        Violation::Overlap { first, second } => (*first, *second),
        _ => unreachable!(),
    });
    found
}

/// A validated tiling of the unit square.
///
/// Tiles are kept sorted by `(y, x)`, so equality is set equality and the
/// derived ordering compares serializations tile by tile.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn new(mut tiles: Vec<Tile>) -> Result<Self> {
        let report = validate(&tiles);
        if !report.is_ok() {
            return Err(Error::InvalidTiling(report.violations));
        }
        tiles.sort();
        Ok(Tiling { tiles })
    }

    /// The single tile covering the whole square.
    pub fn unit() -> Self {
        Tiling {
            tiles: vec![Tile::new(
                rational::int(0),
                rational::int(0),
                rational::int(1),
            )],
        }
    }

    /// Skips validation. The caller guarantees `tiles` is a tiling.
    pub(crate) fn from_valid(mut tiles: Vec<Tile>) -> Self {
        debug_assert!(validate(&tiles).is_ok());
        tiles.sort();
        Tiling { tiles }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    /// Always false; a tiling has at least one tile.
    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Total side length.
    pub fn sigma(&self) -> Rational {
        self.tiles.iter().map(|t| t.s.clone()).sum()
    }

    pub fn largest_side(&self) -> &Rational {
        self.tiles
            .iter()
            .map(|t| &t.s)
            .max()
            .expect("tiling is non-empty")
    }

    /// Replaces tile `index` by the four tiles of half its side in its
    /// quadrants. Adds three tiles and exactly `s` to the total length.
    pub fn subdivide_tile(&self, index: usize) -> Result<Tiling> {
        let target = self.tiles.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.len(),
        })?;
        let half = &target.s / rational::int(2);
        let mut tiles: Vec<Tile> = self
            .tiles
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, t)| t.clone())
            .collect();
        for (dx, dy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            tiles.push(Tile::new(
                &target.x + &half * rational::int(dx),
                &target.y + &half * rational::int(dy),
                half.clone(),
            ));
        }
        Ok(Tiling::from_valid(tiles))
    }
}

/// Total side length of a validated tiling.
pub fn sigma(t: &Tiling) -> Rational {
    t.sigma()
}
