//! The `tiling v1` text format.
//!
//! ```text
//! tiling v1 n=4
//! 0 0 1/2
//! 1/2 0 1/2
//! 0 1/2 1/2
//! 1/2 1/2 1/2
//! ```
//!
//! One header line, then one `<x> <y> <s>` line per tile (lower-left corner
//! and side), each field an integer or a fraction in lowest terms. Tiles are
//! written sorted by `(y, x)`; any order is accepted when reading.

use num_traits::Signed;

use crate::rational;
use crate::tiling::{Tile, Tiling};
use crate::{Error, Result};

const HEADER_PREFIX: &str = "tiling v1 n=";

pub fn serialize(t: &Tiling) -> String {
    let mut out = format!("{HEADER_PREFIX}{}\n", t.len());
    for tile in t.tiles() {
        out.push_str(&tile.to_string());
        out.push('\n');
    }
    out
}

/// Parses and validates. Syntax errors carry their 1-based line number; a
/// well-formed file that is not a tiling yields [`Error::InvalidTiling`].
pub fn parse(text: &str) -> Result<Tiling> {
    let tiles = parse_tiles(text)?;
    Tiling::new(tiles)
}

/// Parses without geometric validation.
pub fn parse_tiles(text: &str) -> Result<Vec<Tile>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let count_text = header.strip_prefix(HEADER_PREFIX).ok_or_else(|| {
        err(
            1,
            format!("expected `{HEADER_PREFIX}<count>`, found `{header}`"),
        )
    })?;
    if count_text.is_empty() || !count_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(1, format!("bad tile count `{count_text}`")));
    }
    let declared: usize = count_text
        .parse()
        .map_err(|_| err(1, format!("bad tile count `{count_text}`")))?;

    let mut tiles = Vec::with_capacity(declared.min(1 << 16));
    let mut last_line = 1;
    for (number, line) in lines {
        last_line = number;
        if line.is_empty() {
            return Err(err(number, "empty line".into()));
        }
        if tiles.len() == declared {
            return Err(err(
                number,
                format!("more than the declared {declared} tiles"),
            ));
        }
        let fields: Vec<&str> = line.split(' ').collect();
        if fields.len() != 3 {
            return Err(err(
                number,
                format!("expected `<x> <y> <s>`, found `{line}`"),
            ));
        }
        let mut values = Vec::with_capacity(3);
        for field in fields {
            values.push(rational::parse_strict(field).map_err(|m| err(number, m))?);
        }
        let s = values.pop().expect("three fields");
        let y = values.pop().expect("three fields");
        let x = values.pop().expect("three fields");
        if !s.is_positive() {
            return Err(err(
                number,
                format!("side {} is not positive", rational::format(&s)),
            ));
        }
        tiles.push(Tile::new(x, y, s));
    }
    if tiles.len() != declared {
        return Err(err(
            last_line,
            format!(
                "header declares {declared} tiles but {} were given",
                tiles.len()
            ),
        ));
    }
    Ok(tiles)
}
