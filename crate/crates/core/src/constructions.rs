//! The closed-form minimum total side length and tilings attaining it.
//!
//! For `k >= 2`, the minimum over tilings with `n` tiles is `3 - 2/k` when
//! `n = 2k` and `3 - 1/k` when `n = 2k + 3`. Every `n >= 4` except 5 has
//! exactly one of these forms.
//!
//! Builders place the big tile at the lower-right corner, the remaining
//! left column of small tiles on the left edge, and a full row of small
//! tiles across the top.

use num_traits::{One, Signed, Zero};

use crate::rational::{int, ratio, Rational};
use crate::tiling::{Tile, Tiling};
use crate::{Error, Result};

/// How a tile count decomposes for the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TileCount {
    /// `n = 2k`
    Even { k: u64 },
    /// `n = 2k + 3`
    Odd { k: u64 },
}

impl TileCount {
    pub fn of(n: usize) -> Result<TileCount> {
        let n = n as u64;
        match n {
            0..=3 | 5 => Err(Error::UnsupportedCount(n as usize)),
            _ if n.is_multiple_of(2) => Ok(TileCount::Even { k: n / 2 }),
            _ => Ok(TileCount::Odd { k: (n - 3) / 2 }),
        }
    }

    pub fn k(self) -> u64 {
        match self {
            TileCount::Even { k } | TileCount::Odd { k } => k,
        }
    }

    pub fn n(self) -> usize {
        match self {
            TileCount::Even { k } => (2 * k) as usize,
            TileCount::Odd { k } => (2 * k + 3) as usize,
        }
    }

    pub fn minimum(self) -> Rational {
        match self {
            TileCount::Even { k } => int(3) - ratio(2, k as i64),
            TileCount::Odd { k } => int(3) - ratio(1, k as i64),
        }
    }
}

/// Minimum total side length over all tilings with `n` tiles.
pub fn fm(n: usize) -> Result<Rational> {
    TileCount::of(n).map(TileCount::minimum)
}

fn check_k(k: u64) -> Result<i64> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    i64::try_from(k).map_err(|_| Error::BadParameter(format!("k = {k} is too large")))
}

/// The `2k`-tile minimal tiling: one tile of side `(k-1)/k` at the
/// lower-right corner and `2k - 1` tiles of side `1/k` in an L around it.
pub fn build_even(k: u64) -> Result<Tiling> {
    let k = check_k(k)?;
    let small = ratio(1, k);
    let mut tiles = vec![Tile::new(small.clone(), int(0), ratio(k - 1, k))];
    for row in 0..k - 1 {
        tiles.push(Tile::new(int(0), ratio(row, k), small.clone()));
    }
    for col in 0..k {
        tiles.push(Tile::new(ratio(col, k), ratio(k - 1, k), small.clone()));
    }
    Ok(Tiling::from_valid(tiles))
}

/// [`build_even`] with its top-right small tile cut into four.
pub fn build_odd_subdivide(k: u64) -> Result<Tiling> {
    let even = build_even(k)?;
    let corner = ratio(k as i64 - 1, k as i64);
    let index = even
        .tiles()
        .iter()
        .position(|t| t.x == corner && t.y == corner)
        .expect("build_even has a top-right small tile");
    even.subdivide_tile(index)
}

/// Three tiles of side 1/2 with a half-scale [`build_even`] in the
/// top-right quadrant.
pub fn build_odd_quadrant(k: u64) -> Result<Tiling> {
    let inner = build_even(k)?;
    let half = ratio(1, 2);
    let mut tiles = vec![
        Tile::new(int(0), int(0), half.clone()),
        Tile::new(half.clone(), int(0), half.clone()),
        Tile::new(int(0), half.clone(), half.clone()),
    ];
    tiles.extend(inner.tiles().iter().map(|t| t.scaled(&half, &half, &half)));
    Ok(Tiling::from_valid(tiles))
}

/// Minimal tiling for `n` tiles. `quadrant` selects the second odd family.
pub fn build_minimal(n: usize, quadrant: bool) -> Result<Tiling> {
    match TileCount::of(n)? {
        TileCount::Even { k } => build_even(k),
        TileCount::Odd { k } if quadrant => build_odd_quadrant(k),
        TileCount::Odd { k } => build_odd_subdivide(k),
    }
}

pub fn subdivide_tile(t: &Tiling, index: usize) -> Result<Tiling> {
    t.subdivide_tile(index)
}

/// Slides top-edge tile `b_index` right into the corner `(1, 1)`, moving
/// the tiles of the strip between it and the right side left by its side.
///
/// The strip is `[right(B), 1] x [1 - s_B, 1]`; every tile meeting its
/// interior must lie inside it. Total length and tile count are unchanged.
pub fn exchange_to_corner(t: &Tiling, b_index: usize) -> Result<Tiling> {
    let b = t.tiles().get(b_index).ok_or(Error::IndexOutOfRange {
        index: b_index,
        len: t.len(),
    })?;
    if !b.top().is_one() {
        return Err(Error::PreconditionUnmet(format!(
            "tile {b_index} does not touch the top edge"
        )));
    }
    let strip_width = Rational::one() - b.right();
    if strip_width.is_zero() {
        return Ok(t.clone());
    }
    let strip = StripRect {
        x0: b.right(),
        y0: Rational::one() - &b.s,
    };
    let shift = &b.s;
    let mut tiles = Vec::with_capacity(t.len());
    for (i, tile) in t.tiles().iter().enumerate() {
        if i == b_index {
            tiles.push(Tile::new(Rational::one() - &b.s, b.y.clone(), b.s.clone()));
        } else if strip.meets(tile) {
            if !strip.contains(tile) {
                return Err(Error::PreconditionUnmet(format!(
                    "tile {i} crosses the boundary of the strip right of tile {b_index}"
                )));
            }
            tiles.push(Tile::new(&tile.x - shift, tile.y.clone(), tile.s.clone()));
        } else {
            tiles.push(tile.clone());
        }
    }
    Tiling::new(tiles)
}

/// `[x0, 1] x [y0, 1]`
struct StripRect {
    x0: Rational,
    y0: Rational,
}

impl StripRect {
    fn meets(&self, tile: &Tile) -> bool {
        tile.right() > self.x0 && tile.top() > self.y0
    }

    fn contains(&self, tile: &Tile) -> bool {
        tile.x >= self.x0 && tile.y >= self.y0
    }
}

/// Indices of tiles on the top edge that are not yet in the top-right
/// corner, i.e. candidates for [`exchange_to_corner`].
pub fn exchange_candidates(t: &Tiling) -> Vec<usize> {
    t.tiles()
        .iter()
        .enumerate()
        .filter(|(_, tile)| tile.top().is_one() && (Rational::one() - tile.right()).is_positive())
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::equivalent;

    #[test]
    fn fm_values() {
        assert_eq!(fm(4).unwrap(), int(2));
        assert_eq!(fm(6).unwrap(), ratio(7, 3));
        assert_eq!(fm(7).unwrap(), ratio(5, 2));
        assert_eq!(fm(8).unwrap(), ratio(5, 2));
        assert_eq!(fm(11).unwrap(), ratio(11, 4));
        for n in [0, 1, 2, 3, 5] {
            assert_eq!(fm(n), Err(Error::UnsupportedCount(n)));
        }
        for n in 4..200 {
            if n != 5 {
                assert_eq!(TileCount::of(n).unwrap().n(), n);
            }
        }
    }

    #[test]
    fn even_builds() {
        let t = build_even(2).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.tiles().iter().all(|tile| tile.s == ratio(1, 2)));
        assert_eq!(build_even(4).unwrap().sigma(), ratio(5, 2));
        let t = build_even(10).unwrap();
        assert_eq!((t.len(), t.sigma()), (20, ratio(14, 5)));
        assert!(matches!(build_even(1), Err(Error::BadParameter(_))));
    }

    #[test]
    fn odd_builds() {
        assert_eq!(build_odd_subdivide(4).unwrap().sigma(), ratio(11, 4));
        assert_eq!(build_odd_subdivide(4).unwrap().len(), 11);
        assert_eq!(build_odd_subdivide(2).unwrap().sigma(), ratio(5, 2));
        assert_eq!(build_odd_quadrant(3).unwrap().sigma(), ratio(8, 3));
        assert_eq!(build_odd_quadrant(3).unwrap().len(), 9);
        assert!(build_odd_quadrant(0).is_err());
        for k in 2..=20 {
            let even = build_even(k).unwrap().sigma();
            let odd = build_odd_subdivide(k).unwrap().sigma();
            assert_eq!(odd - even, ratio(1, k as i64));
            assert_eq!(
                build_odd_quadrant(k).unwrap().sigma(),
                build_odd_subdivide(k).unwrap().sigma()
            );
        }
    }

    #[test]
    fn odd_families_coincide_only_for_k_two() {
        assert_eq!(
            build_odd_quadrant(2).unwrap(),
            build_odd_subdivide(2).unwrap()
        );
        for k in 3..=12 {
            assert!(!equivalent(
                &build_odd_quadrant(k).unwrap(),
                &build_odd_subdivide(k).unwrap()
            ));
        }
    }

    #[test]
    fn subdividing_top_right_gives_odd_family() {
        let even = build_even(4).unwrap();
        let index = even
            .tiles()
            .iter()
            .position(|t| t.x == ratio(3, 4) && t.y == ratio(3, 4))
            .unwrap();
        assert_eq!(
            subdivide_tile(&even, index).unwrap(),
            build_odd_subdivide(4).unwrap()
        );
    }

    #[test]
    fn exchange_at_corner_is_identity() {
        let t = build_even(4).unwrap();
        let corner = t
            .tiles()
            .iter()
            .position(|tile| tile.x == ratio(3, 4) && tile.y == ratio(3, 4))
            .unwrap();
        assert_eq!(exchange_to_corner(&t, corner).unwrap(), t);
    }

    #[test]
    fn exchange_requires_top_edge_and_closed_strip() {
        let t = build_even(3).unwrap();
        let big = t
            .tiles()
            .iter()
            .position(|tile| tile.s == ratio(2, 3))
            .unwrap();
        assert!(matches!(
            exchange_to_corner(&t, big),
            Err(Error::PreconditionUnmet(_))
        ));
        assert!(matches!(
            exchange_to_corner(&t, 99),
            Err(Error::IndexOutOfRange { .. })
        ));

        // A 2/3 tile straddles the strip right of the top-left 1/3 tile.
        let crossing = Tiling::new(vec![
            Tile::new(int(0), int(0), ratio(1, 3)),
            Tile::new(int(0), ratio(1, 3), ratio(1, 3)),
            Tile::new(int(0), ratio(2, 3), ratio(1, 3)),
            Tile::new(ratio(1, 3), ratio(1, 3), ratio(2, 3)),
            Tile::new(ratio(1, 3), int(0), ratio(1, 3)),
            Tile::new(ratio(2, 3), int(0), ratio(1, 3)),
        ])
        .unwrap();
        let b = crossing
            .tiles()
            .iter()
            .position(|tile| tile.x.is_zero() && tile.y == ratio(2, 3))
            .unwrap();
        assert!(matches!(
            exchange_to_corner(&crossing, b),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn exchange_moves_block_left() {
        // Subdivide the top tile at x = 1/2, then slide the tile at x = 1/4
        // to the corner: the block lands at x = 1/4, the corner tile at 1/2.
        let even = build_even(4).unwrap();
        let find = |t: &Tiling, x: Rational, y: Rational| {
            t.tiles()
                .iter()
                .position(|tile| tile.x == x && tile.y == y)
                .unwrap()
        };
        let shifted = subdivide_tile(&even, find(&even, ratio(1, 2), ratio(3, 4))).unwrap();
        let b = find(&shifted, ratio(1, 4), ratio(3, 4));
        let out = exchange_to_corner(&shifted, b).unwrap();
        let expected = subdivide_tile(&even, find(&even, ratio(1, 4), ratio(3, 4))).unwrap();
        assert_eq!(out, expected);
        assert_eq!(out.sigma(), shifted.sigma());
        assert_eq!(exchange_candidates(&shifted).len(), 4);
    }
}
