#![allow(dead_code)]

use proptest::prelude::*;
use sqtile::constructions::{build_even, build_odd_quadrant, build_odd_subdivide};
use sqtile::enumeration::{GridTiling, Placement};
use sqtile::Tiling;

/// Grid tiling built by filling the first empty cell with a size picked
/// from `choices` (cycled), independent of the enumerator.
pub fn random_grid(q: u8, choices: &[u8]) -> GridTiling {
    let mut heights = vec![0u8; q as usize];
    let mut cells = Vec::new();
    let mut pick = choices.iter().cycle();
    loop {
        let row = *heights.iter().min().unwrap();
        if row == q {
            break;
        }
        let col = heights.iter().position(|&h| h == row).unwrap();
        let mut fit = 0;
        while col + fit < q as usize && heights[col + fit] == row && row as usize + fit < q as usize
        {
            fit += 1;
        }
        let size = 1 + pick.next().copied().unwrap_or(0) as usize % fit;
        for h in &mut heights[col..col + size] {
            *h = row + size as u8;
        }
        cells.push(Placement::new(col as u8, row, size as u8));
    }
    GridTiling::new(u32::from(q), cells).unwrap()
}

/// Grid tilings and the constructed families, with a few extra
/// subdivisions to mix denominators.
pub fn tiling_strategy() -> impl Strategy<Value = Tiling> {
    let grid = (1u8..=9, prop::collection::vec(any::<u8>(), 1..40))
        .prop_map(|(q, choices)| random_grid(q, &choices).to_tiling());
    let built = (2u64..=8, 0usize..3).prop_map(|(k, family)| match family {
        0 => build_even(k).unwrap(),
        1 => build_odd_subdivide(k).unwrap(),
        _ => build_odd_quadrant(k).unwrap(),
    });
    let base = prop_oneof![grid, built];
    (base, prop::collection::vec(any::<usize>(), 0..3)).prop_map(|(mut t, picks)| {
        for p in picks {
            t = t.subdivide_tile(p % t.len()).unwrap();
        }
        t
    })
}

/// Naive recursive count of square partitions of a `q x q` grid, by tile
/// count: scan for the first empty cell, try every size whose cells are all
/// empty.
pub fn naive_counts(q: usize) -> std::collections::BTreeMap<usize, u64> {
    fn go(
        q: usize,
        grid: &mut Vec<bool>,
        tiles: usize,
        out: &mut std::collections::BTreeMap<usize, u64>,
    ) {
        let Some(first) = grid.iter().position(|&c| !c) else {
            *out.entry(tiles).or_default() += 1;
            return;
        };
        let (row, col) = (first / q, first % q);
        for size in 1..=q {
            if row + size > q || col + size > q {
                break;
            }
            let cells: Vec<usize> = (row..row + size)
                .flat_map(|r| (col..col + size).map(move |c| r * q + c))
                .collect();
            if cells.iter().any(|&i| grid[i]) {
                break;
            }
            for &i in &cells {
                grid[i] = true;
            }
            go(q, grid, tiles + 1, out);
            for &i in &cells {
                grid[i] = false;
            }
        }
    }
    let mut out = std::collections::BTreeMap::new();
    go(q, &mut vec![false; q * q], 0, &mut out);
    out
}
