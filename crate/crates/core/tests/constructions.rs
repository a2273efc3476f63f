mod common;

use std::collections::BTreeSet;

use sqtile::constructions::{
    build_even, build_odd_quadrant, build_odd_subdivide, exchange_candidates, exchange_to_corner,
    fm, subdivide_tile,
};
use sqtile::enumeration::{GridTiling, Placement};
use sqtile::lemmas::{check_pair_sum_one, Corpus};
use sqtile::profile::check_staton_tyler;
use sqtile::rational::{int, ratio};
use sqtile::symmetry::{apply_symmetry, canonical_form, equivalent, D4};
use sqtile::tiling::validate;
use sqtile::Tiling;

#[test]
fn families_meet_the_closed_form() {
    for k in 2..=50u64 {
        let n = 2 * k as usize;
        let even = build_even(k).unwrap();
        assert_eq!(even.len(), n);
        assert_eq!(even.sigma(), fm(n).unwrap());
        assert_eq!(*even.largest_side(), ratio(k as i64 - 1, k as i64));
        assert!(check_pair_sum_one(&even));
        for odd in [
            build_odd_subdivide(k).unwrap(),
            build_odd_quadrant(k).unwrap(),
        ] {
            assert_eq!(odd.len(), n + 3);
            assert_eq!(odd.sigma(), fm(n + 3).unwrap());
            assert!(check_staton_tyler(&odd));
        }
        assert!(check_staton_tyler(&even));
    }
}

#[test]
fn even_three_reflects_across_main_diagonal() {
    let t = build_even(3).unwrap();
    let image = apply_symmetry(&t, D4::FlipMainDiag);
    let big = image
        .tiles()
        .iter()
        .find(|tile| tile.s == ratio(2, 3))
        .unwrap();
    assert_eq!((big.x.clone(), big.y.clone()), (int(0), ratio(1, 3)));
    assert_eq!(image.sigma(), ratio(7, 3));
    assert_eq!(
        apply_symmetry(&build_even(2).unwrap(), D4::Rot90),
        build_even(2).unwrap()
    );
    assert_eq!(
        canonical_form(&build_even(2).unwrap()),
        build_even(2).unwrap()
    );
}

/// Orbit of a grid tiling computed by mapping every covered cell through the
/// eight point maps of the square, independent of the library's D4 code.
fn cell_orbit(q: u8, cells: &[Placement]) -> Vec<BTreeSet<(u8, u8, u8)>> {
    type PointMap = fn(u8, u8, u8) -> (u8, u8);
    let maps: [PointMap; 8] = [
        |_, c, r| (c, r),
        |q, c, r| (q - 1 - r, c),
        |q, c, r| (q - 1 - c, q - 1 - r),
        |q, c, r| (r, q - 1 - c),
        |q, c, r| (q - 1 - c, r),
        |q, c, r| (c, q - 1 - r),
        |_, c, r| (r, c),
        |q, c, r| (q - 1 - r, q - 1 - c),
    ];
    maps.iter()
        .map(|map| {
            cells
                .iter()
                .map(|p| {
                    let corners: Vec<(u8, u8)> = [
                        (0, 0),
                        (p.size - 1, 0),
                        (0, p.size - 1),
                        (p.size - 1, p.size - 1),
                    ]
                    .iter()
                    .map(|&(dc, dr)| map(q, p.col + dc, p.row + dr))
                    .collect();
                    let col = corners.iter().map(|c| c.0).min().unwrap();
                    let row = corners.iter().map(|c| c.1).min().unwrap();
                    (row, col, p.size)
                })
                .collect()
        })
        .collect()
}

#[test]
fn three_grid_block_positions_share_a_class() {
    let with_block = |c: u8, r: u8| {
        let mut cells = vec![Placement::new(c, r, 2)];
        for row in 0..3u8 {
            for col in 0..3u8 {
                let inside = (c..c + 2).contains(&col) && (r..r + 2).contains(&row);
                if !inside {
                    cells.push(Placement::new(col, row, 1));
                }
            }
        }
        GridTiling::new(3, cells).unwrap()
    };
    let a = with_block(0, 0);
    let b = with_block(1, 1);
    let target: BTreeSet<_> = b.cells().iter().map(|p| (p.row, p.col, p.size)).collect();
    assert!(cell_orbit(3, a.cells()).contains(&target));
    assert_eq!(
        canonical_form(&a.to_tiling()),
        canonical_form(&b.to_tiling())
    );
    assert!(equivalent(&a.to_tiling(), &b.to_tiling()));
}

#[test]
fn library_symmetry_matches_point_maps() {
    let grid = common::random_grid(7, &[3, 1, 4, 1, 5, 9, 2, 6]);
    let orbit = cell_orbit(7, grid.cells());
    for (g, expected) in D4::ALL.into_iter().zip(orbit) {
        let image: BTreeSet<_> = grid
            .image(g)
            .cells()
            .iter()
            .map(|p| (p.row, p.col, p.size))
            .collect();
        assert_eq!(image, expected, "{g}");
    }
}

#[test]
fn subdivision_over_corpus_samples() {
    let corpus = Corpus::enumerated(5, 25).unwrap().tilings;
    // Deterministic spread of 100 (tiling, index) pairs.
    for i in 0..100usize {
        let t = &corpus[(i * 37) % corpus.len()];
        let index = (i * 13) % t.len();
        let out = subdivide_tile(t, index).unwrap();
        assert!(validate(out.tiles()).is_ok());
        assert_eq!(out.len(), t.len() + 3);
        assert_eq!(out.sigma() - t.sigma(), t.tiles()[index].s.clone());
    }
}

#[test]
fn exchange_over_corpus() {
    let corpus = Corpus::enumerated(5, 25).unwrap().tilings;
    let mut applied = 0;
    for t in &corpus {
        for g in D4::ALL {
            let oriented = apply_symmetry(t, g);
            for b in exchange_candidates(&oriented) {
                if let Ok(out) = exchange_to_corner(&oriented, b) {
                    applied += 1;
                    assert_eq!(out.sigma(), oriented.sigma());
                    assert_eq!(out.len(), oriented.len());
                }
            }
        }
    }
    assert!(applied > 1000, "only {applied} exchanges applied");
}

#[test]
fn exchange_restores_a_corner_block() {
    // build_even(3) with the top-middle tile cut into four: sliding the
    // top-left tile right carries the block to the left corner.
    let even = build_even(3).unwrap();
    let at = |t: &Tiling, x, y| {
        t.tiles()
            .iter()
            .position(|tile| tile.x == x && tile.y == y)
            .unwrap()
    };
    let middle = subdivide_tile(&even, at(&even, ratio(1, 3), ratio(2, 3))).unwrap();
    let out = exchange_to_corner(&middle, at(&middle, int(0), ratio(2, 3))).unwrap();
    let left = subdivide_tile(&even, at(&even, int(0), ratio(2, 3))).unwrap();
    assert!(equivalent(&out, &left));
    assert!(!equivalent(&out, &middle));
    assert_eq!(out.sigma(), ratio(8, 3));
}
