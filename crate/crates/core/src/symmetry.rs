//! The symmetry group of the square acting on tilings, and canonical forms.

use std::fmt;
use std::str::FromStr;

use crate::rational::{self, Rational};
use crate::tiling::{Tile, Tiling};

/// One of the eight symmetries of the unit square. Rotations are
/// counter-clockwise about the centre; `FlipH` mirrors left-right,
/// `FlipV` mirrors top-bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum D4 {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipH,
    FlipV,
    FlipMainDiag,
    FlipAntiDiag,
}

impl D4 {
    pub const ALL: [D4; 8] = [
        D4::Identity,
        D4::Rot90,
        D4::Rot180,
        D4::Rot270,
        D4::FlipH,
        D4::FlipV,
        D4::FlipMainDiag,
        D4::FlipAntiDiag,
    ];

    /// Signed permutation matrix acting on coordinates centred at (1/2, 1/2).
    pub fn matrix(self) -> [[i8; 2]; 2] {
        match self {
            D4::Identity => [[1, 0], [0, 1]],
            D4::Rot90 => [[0, -1], [1, 0]],
            D4::Rot180 => [[-1, 0], [0, -1]],
            D4::Rot270 => [[0, 1], [-1, 0]],
            D4::FlipH => [[-1, 0], [0, 1]],
            D4::FlipV => [[1, 0], [0, -1]],
            D4::FlipMainDiag => [[0, 1], [1, 0]],
            D4::FlipAntiDiag => [[0, -1], [-1, 0]],
        }
    }

    fn from_matrix(m: [[i8; 2]; 2]) -> D4 {
        *D4::ALL
            .iter()
            .find(|g| g.matrix() == m)
            .expect("signed permutation matrices form D4")
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(self, other: D4) -> D4 {
        let (a, b) = (self.matrix(), other.matrix());
        let mut m = [[0i8; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        D4::from_matrix(m)
    }

    pub fn inverse(self) -> D4 {
        // Orthogonal: the inverse is the transpose.
        let m = self.matrix();
        D4::from_matrix([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn name(self) -> &'static str {
        match self {
            D4::Identity => "identity",
            D4::Rot90 => "rot90",
            D4::Rot180 => "rot180",
            D4::Rot270 => "rot270",
            D4::FlipH => "flipH",
            D4::FlipV => "flipV",
            D4::FlipMainDiag => "flipMainDiag",
            D4::FlipAntiDiag => "flipAntiDiag",
        }
    }

    /// Image of a tile of the unit square.
    pub fn apply_tile(self, tile: &Tile) -> Tile {
        let m = self.matrix();
        let half_side = &tile.s / rational::int(2);
        let half = rational::ratio(1, 2);
        let cu = &tile.x + &half_side - &half;
        let cv = &tile.y + &half_side - &half;
        let image = |row: [i8; 2]| -> Rational {
            let u = &cu * rational::int(i64::from(row[0])) + &cv * rational::int(i64::from(row[1]));
            u + &half - &half_side
        };
        Tile::new(image(m[0]), image(m[1]), tile.s.clone())
    }

    /// Image of an integer point-set square on a `q`-grid: `(col, row, size)`.
    pub fn apply_cell(self, q: u32, col: u32, row: u32, size: u32) -> (u32, u32, u32) {
        let (c, r, q, s) = (
            i64::from(col),
            i64::from(row),
            i64::from(q),
            i64::from(size),
        );
        // Twice-centred coordinates keep everything integral.
        let cu = 2 * c + s - q;
        let cv = 2 * r + s - q;
        let m = self.matrix();
        let nu = i64::from(m[0][0]) * cu + i64::from(m[0][1]) * cv;
        let nv = i64::from(m[1][0]) * cu + i64::from(m[1][1]) * cv;
        (((nu + q - s) / 2) as u32, ((nv + q - s) / 2) as u32, size)
    }
}

impl fmt::Display for D4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for D4 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        D4::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown symmetry `{s}`"))
    }
}

pub fn apply_symmetry(t: &Tiling, g: D4) -> Tiling {
    Tiling::from_valid(t.tiles().iter().map(|tile| g.apply_tile(tile)).collect())
}

/// Least of the eight images under the tile-by-tile `(y, x, s)` order.
pub fn canonical_form(t: &Tiling) -> Tiling {
    canonical_with_symmetry(t).0
}

/// Canonical form together with a symmetry mapping `t` onto it.
pub fn canonical_with_symmetry(t: &Tiling) -> (Tiling, D4) {
    D4::ALL
        .into_iter()
        .map(|g| (apply_symmetry(t, g), g))
        .min()
        .expect("D4 is non-empty")
}

pub fn equivalent(a: &Tiling, b: &Tiling) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}
