mod common;

use common::tiling_strategy;
use num_traits::{One, Zero};
use proptest::prelude::*;
use sqtile::constructions::{exchange_candidates, exchange_to_corner};
use sqtile::format::{parse, serialize};
use sqtile::profile::{horizontal_profile, integrate, vertical_profile};
use sqtile::rational::{int, Rational};
use sqtile::symmetry::{apply_symmetry, canonical_form, D4};
use sqtile::tiling::{validate, Tile};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tilings_validate_with_unit_area(t in tiling_strategy()) {
        prop_assert!(validate(t.tiles()).is_ok());
        let area: Rational = t.tiles().iter().map(Tile::area).sum();
        prop_assert!(area.is_one());
    }

    #[test]
    fn symmetry_preserves_sigma_and_inverts(t in tiling_strategy()) {
        for g in D4::ALL {
            let image = apply_symmetry(&t, g);
            prop_assert!(validate(image.tiles()).is_ok());
            prop_assert_eq!(image.sigma(), t.sigma());
            prop_assert_eq!(apply_symmetry(&image, g.inverse()), t.clone());
        }
        prop_assert_eq!(apply_symmetry(&t, D4::Identity), t);
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant(t in tiling_strategy()) {
        let c = canonical_form(&t);
        prop_assert_eq!(canonical_form(&c), c.clone());
        let orbit: std::collections::BTreeSet<_> =
            D4::ALL.iter().map(|&g| apply_symmetry(&t, g)).collect();
        prop_assert_eq!(8 % orbit.len(), 0);
        prop_assert_eq!(orbit.iter().next().unwrap(), &c);
        for image in &orbit {
            prop_assert_eq!(canonical_form(image), c.clone());
        }
    }

    #[test]
    fn profile_integral_equals_sigma(t in tiling_strategy()) {
        let sigma = t.sigma();
        prop_assert_eq!(integrate(&vertical_profile(&t)), sigma.clone());
        prop_assert_eq!(integrate(&horizontal_profile(&t)), sigma.clone());
        let p = vertical_profile(&t);
        if p.min_value() >= 3 {
            prop_assert!(sigma >= int(3));
        }
    }

    #[test]
    fn moving_any_tile_breaks_the_tiling(
        t in tiling_strategy(),
        pick in any::<usize>(),
        dir in 0usize..4,
        num in 1i64..8,
        den in 1i64..16,
    ) {
        let i = pick % t.len();
        let eps = sqtile::rational::ratio(num, den);
        let mut tiles = t.tiles().to_vec();
        let tile = &mut tiles[i];
        match dir {
            0 => tile.x += &eps,
            1 => tile.x -= &eps,
            2 => tile.y += &eps,
            _ => tile.y -= &eps,
        }
        let in_bounds = tile.x >= Rational::zero() && tile.y >= Rational::zero()
            && tile.right() <= Rational::one() && tile.top() <= Rational::one();
        prop_assume!(in_bounds);
        prop_assert!(!validate(&tiles).is_ok());
    }

    #[test]
    fn format_round_trips(t in tiling_strategy()) {
        prop_assert_eq!(parse(&serialize(&t)).unwrap(), t);
    }

    #[test]
    fn subdivision_adds_the_side(t in tiling_strategy(), pick in any::<usize>()) {
        let i = pick % t.len();
        let s = t.tiles()[i].s.clone();
        let out = t.subdivide_tile(i).unwrap();
        prop_assert_eq!(out.len(), t.len() + 3);
        prop_assert_eq!(out.sigma() - t.sigma(), s);
    }

    #[test]
    fn exchanges_keep_sigma_and_count(t in tiling_strategy(), g in 0usize..8) {
        let oriented = apply_symmetry(&t, D4::ALL[g]);
        for b in exchange_candidates(&oriented) {
            if let Ok(out) = exchange_to_corner(&oriented, b) {
                prop_assert!(validate(out.tiles()).is_ok());
                prop_assert_eq!(out.len(), oriented.len());
                prop_assert_eq!(out.sigma(), oriented.sigma());
                let moved = out.tiles().iter().any(|tile| {
                    tile == &Tile::new(int(1) - &oriented.tiles()[b].s, oriented.tiles()[b].y.clone(), oriented.tiles()[b].s.clone())
                });
                prop_assert!(moved);
            }
        }
    }
}
