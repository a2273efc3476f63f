//! Executable forms of the structural facts behind the closed-form minimum,
//! and a suite that runs them over a corpus of tilings.
//!
//! A tiling counts as minimal only when its total length equals [`fm`]
//! exactly; corpus-local minima are never used, since a bounded corpus may
//! miss tilings.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::constructions::{
    build_even, build_odd_quadrant, build_odd_subdivide, exchange_candidates, exchange_to_corner,
    fm,
};
use crate::enumeration;
use crate::profile::{check_staton_tyler, vertical_profile};
use crate::rational::{self, int, ratio, Rational};
use crate::symmetry::{apply_symmetry, canonical_form, D4};
use crate::tiling::{Tile, Tiling};
use crate::{Error, Result};

/// Upper bound on tilings explored when searching corner exchanges.
const EXCHANGE_SEARCH_LIMIT: usize = 10_000;

/// `Some(true)` for a tiling whose length equals the minimum for its count,
/// `None` when the count has no closed form.
pub fn is_minimal(t: &Tiling) -> Option<bool> {
    fm(t.len()).ok().map(|m| t.sigma() == m)
}

/// Some two distinct tiles have sides summing to exactly 1.
pub fn check_pair_sum_one(t: &Tiling) -> bool {
    let sides: BTreeSet<&Rational> = t.tiles().iter().map(|tile| &tile.s).collect();
    let one = Rational::one();
    let half = ratio(1, 2);
    t.tiles().iter().any(|tile| {
        let complement = &one - &tile.s;
        if complement == half && tile.s == half {
            t.tiles().iter().filter(|other| other.s == half).count() >= 2
        } else {
            sides.contains(&complement)
        }
    })
}

/// `2k a^2 - (4k - 2) a + (2k - 1)`: the largest total area of `2k` tiles
/// when one has side `a` and the others at most `1 - a`.
pub fn area_quadratic(k: u64, a: &Rational) -> Result<Rational> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if !a.is_positive() || *a >= Rational::one() {
        return Err(Error::BadParameter(format!(
            "side {} outside (0, 1)",
            rational::format(a)
        )));
    }
    let k = int(k as i64);
    let two = int(2);
    Ok(&two * &k * a * a - (int(4) * &k - &two) * a + (two * k - int(1)))
}

/// Largest side is at most `(k-1)/k`, where `n = 2k`, or `n = 2k + 3` for a
/// minimal odd tiling.
pub fn check_largest_tile_bound(t: &Tiling) -> Result<bool> {
    let n = t.len();
    let k = if n.is_multiple_of(2) {
        n / 2
    } else {
        match is_minimal(t) {
            Some(true) => (n - 3) / 2,
            _ => return Err(Error::ParityUnsupported(n)),
        }
    };
    let k = k as i64;
    Ok(*t.largest_side() <= ratio(k - 1, k))
}

/// Measurements for a tiling with a corner tile of side `1 - b`, where
/// `1/(k+1) < b < 1/k` for an integer `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerBound {
    pub b: Rational,
    pub k: u64,
    pub sigma: Rational,
    /// Least profile value on `(0, b)` with the big tile on the right.
    pub left_strip_min: u32,
    /// Per orientation with the big tile at the lower-right: the number of
    /// side-`b` tiles on the top edge reaching over the big tile.
    pub over_tile_counts: [u64; 2],
}

impl CornerBound {
    pub fn bound(&self) -> Rational {
        int(3) - &self.b
    }

    /// `(k+1)b + 2mb + 3(1 - b - mb)`.
    pub fn decomposition(&self, m: u64) -> Rational {
        let k = int(self.k as i64);
        let m = int(m as i64);
        let b = &self.b;
        (k + int(1)) * b + int(2) * &m * b + int(3) * (int(1) - b - m * b)
    }

    pub fn holds(&self) -> bool {
        self.sigma >= self.bound()
    }

    pub fn decomposition_holds(&self) -> bool {
        self.left_strip_min as u64 > self.k
            && self
                .over_tile_counts
                .iter()
                .all(|&m| self.sigma >= self.decomposition(m))
    }
}

/// Symmetries taking `tile` to the lower-right corner.
fn to_lower_right(tile: &Tile) -> Vec<D4> {
    D4::ALL
        .into_iter()
        .filter(|g| {
            let image = g.apply_tile(tile);
            image.y.is_zero() && image.right().is_one()
        })
        .collect()
}

pub fn corner_bound(t: &Tiling) -> Result<CornerBound> {
    let half = ratio(1, 2);
    let a = t
        .tiles()
        .iter()
        .find(|tile| tile.is_corner() && tile.s > half && !tile.s.is_one())
        .ok_or_else(|| Error::PreconditionUnmet("no corner tile with side in (1/2, 1)".into()))?;
    let b = Rational::one() - &a.s;
    let inverse = b.recip();
    if inverse.is_integer() {
        return Err(Error::PreconditionUnmet(format!(
            "b = {} is a boundary value 1/k",
            rational::format(&b)
        )));
    }
    let k = inverse.floor().to_integer();
    let k: u64 = k.try_into().expect("1/b > 2 fits");

    let orientations = to_lower_right(a);
    debug_assert_eq!(orientations.len(), 2);
    let mut over_tile_counts = [0u64; 2];
    let mut left_strip_min = u32::MAX;
    for (slot, &g) in over_tile_counts.iter_mut().zip(&orientations) {
        let image = apply_symmetry(t, g);
        *slot = image
            .tiles()
            .iter()
            .filter(|tile| tile.s == b && tile.top().is_one() && tile.right() > b)
            .count() as u64;
        let strip_min = vertical_profile(&image)
            .intervals()
            .filter(|(_, right, _)| **right <= b)
            .map(|(_, _, v)| v)
            .min()
            .expect("b is a breakpoint");
        left_strip_min = left_strip_min.min(strip_min);
    }
    Ok(CornerBound {
        b,
        k,
        sigma: t.sigma(),
        left_strip_min,
        over_tile_counts,
    })
}

/// Total length is at least `3 - b` for a qualifying corner tile of side
/// `1 - b`.
pub fn check_sigma_lower_bound(t: &Tiling) -> Result<bool> {
    corner_bound(t).map(|c| c.holds())
}

/// Some largest tile sits at a corner with tiles of the complementary side
/// at both corners sharing a side of the square with it.
pub fn has_opposite_corner_configuration(t: &Tiling) -> bool {
    let largest = t.largest_side();
    let complement = Rational::one() - largest;
    t.tiles()
        .iter()
        .filter(|tile| &tile.s == largest && tile.is_corner())
        .any(|a| {
            let g = to_lower_right(a)[0];
            let image = apply_symmetry(t, g);
            let at = |x: Rational, y: Rational| {
                image
                    .tiles()
                    .iter()
                    .any(|tile| tile.s == complement && tile.x == x && tile.y == y)
            };
            at(int(0), int(0)) && at(Rational::one() - &complement, Rational::one() - &complement)
        })
}

/// Some side of the square is covered by exactly two tiles.
pub fn has_two_tile_side(t: &Tiling) -> bool {
    D4::ALL[..4].iter().any(|&g| {
        apply_symmetry(t, g)
            .tiles()
            .iter()
            .filter(|tile| tile.y.is_zero())
            .count()
            == 2
    })
}

/// Breadth-first search over the canonical forms reachable from `t` by
/// corner exchanges along any side, stopping at the first one satisfying
/// `goal`. Explores at most a fixed number of tilings.
pub fn search_exchanges(t: &Tiling, goal: impl Fn(&Tiling) -> bool) -> Option<Tiling> {
    let start = canonical_form(t);
    if goal(&start) {
        return Some(start);
    }
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(current) = queue.pop_front() {
        for g in D4::ALL {
            let oriented = apply_symmetry(&current, g);
            for b in exchange_candidates(&oriented) {
                let Ok(moved) = exchange_to_corner(&oriented, b) else {
                    continue;
                };
                let class = canonical_form(&moved);
                if seen.contains(&class) {
                    continue;
                }
                if goal(&class) {
                    return Some(class);
                }
                if seen.len() < EXCHANGE_SEARCH_LIMIT {
                    seen.insert(class.clone());
                    queue.push_back(class);
                }
            }
        }
    }
    None
}

/// For a minimal tiling: either no side of the square is covered by just
/// two tiles, or corner exchanges (which keep the total length) reach a
/// tiling with the opposite-corner configuration.
pub fn check_opposite_corner(t: &Tiling) -> Result<bool> {
    let minimum = fm(t.len())?;
    let sigma = t.sigma();
    if sigma != minimum {
        return Err(Error::NonMinimal {
            sigma: rational::format(&sigma),
            minimum: rational::format(&minimum),
        });
    }
    if !has_two_tile_side(t) || has_opposite_corner_configuration(t) {
        return Ok(true);
    }
    Ok(search_exchanges(t, has_opposite_corner_configuration).is_some())
}

/// The sides of a tiling as a sorted multiset.
pub fn side_multiset(t: &Tiling) -> Vec<Rational> {
    let mut sides: Vec<Rational> = t.tiles().iter().map(|tile| tile.s.clone()).collect();
    sides.sort();
    sides
}

/// Minimal seven-tile tilings consist of three tiles of side 1/2 and four of
/// side 1/4.
pub fn check_seven_tile_shape(t: &Tiling) -> bool {
    let mut expected = vec![ratio(1, 4); 4];
    expected.extend(vec![ratio(1, 2); 3]);
    side_multiset(t) == expected
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    SigmaAtLeastMinimum,
    StatonTyler,
    PairSumOne,
    LargestTileEven,
    AreaQuadratic,
    CornerSigmaBound,
    LargestTileOdd,
    OppositeCorner,
    SevenTileShape,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::SigmaAtLeastMinimum,
        Check::StatonTyler,
        Check::PairSumOne,
        Check::LargestTileEven,
        Check::AreaQuadratic,
        Check::CornerSigmaBound,
        Check::LargestTileOdd,
        Check::OppositeCorner,
        Check::SevenTileShape,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::SigmaAtLeastMinimum => "sigma-at-least-minimum",
            Check::StatonTyler => "profile-integral",
            Check::PairSumOne => "pair-sum-one",
            Check::LargestTileEven => "largest-tile-even",
            Check::AreaQuadratic => "area-quadratic",
            Check::CornerSigmaBound => "corner-sigma-bound",
            Check::LargestTileOdd => "largest-tile-odd",
            Check::OppositeCorner => "opposite-corner",
            Check::SevenTileShape => "seven-tile-shape",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub tiling: Option<Tiling>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub check: Check,
    pub corpus: String,
    pub checked: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<24} {:<28} checked={:<8} violations={}",
            self.check.id(),
            self.corpus,
            self.checked,
            self.violations.len()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub description: String,
    pub tilings: Vec<Tiling>,
}

impl Corpus {
    /// The three minimal families for `k` in `2..=k_max`.
    pub fn constructions(k_max: u64) -> Result<Corpus> {
        let mut tilings = Vec::new();
        for k in 2..=k_max {
            tilings.push(build_even(k)?);
            tilings.push(build_odd_subdivide(k)?);
            tilings.push(build_odd_quadrant(k)?);
        }
        Ok(Corpus {
            description: format!("constructions k<={k_max}"),
            tilings,
        })
    }

    /// Primitive grid tilings with `q <= q_max` and at most `n_max` tiles.
    pub fn enumerated(q_max: u32, n_max: usize) -> Result<Corpus> {
        Ok(Corpus {
            description: format!("grid q<={q_max} n<={n_max}"),
            tilings: enumeration::corpus(q_max, n_max)?,
        })
    }
}

fn area_quadratic_report() -> LemmaReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    for k in 2..=10u64 {
        let boundary = ratio(k as i64 - 1, k as i64);
        let value = area_quadratic(k, &boundary).expect("k >= 2 and 0 < a < 1");
        checked += 1;
        if !value.is_one() {
            violations.push(LemmaViolation {
                tiling: None,
                detail: format!("k={k}: value {} at the boundary", rational::format(&value)),
            });
        }
        // Grid of step 1/1000 strictly inside ((k-1)/k, 1).
        let first = 1000 * (k - 1) / k + 1;
        for i in first..1000 {
            let a = ratio(i as i64, 1000);
            if a <= boundary {
                continue;
            }
            checked += 1;
            let value = area_quadratic(k, &a).expect("inside (0, 1)");
            if value >= Rational::one() {
                violations.push(LemmaViolation {
                    tiling: None,
                    detail: format!(
                        "k={k}, a={}: value {}",
                        rational::format(&a),
                        rational::format(&value)
                    ),
                });
            }
        }
    }
    LemmaReport {
        check: Check::AreaQuadratic,
        corpus: "k in 2..=10, a step 1/1000".into(),
        checked,
        violations,
    }
}

/// Runs every check over `corpus`, each restricted to the tilings it applies
/// to, plus the corpus-independent area bound.
pub fn run_suite(corpus: &Corpus) -> Vec<LemmaReport> {
    let mut reports: Vec<LemmaReport> = Check::ALL
        .iter()
        .filter(|&&c| c != Check::AreaQuadratic)
        .map(|&check| LemmaReport {
            check,
            corpus: corpus.description.clone(),
            checked: 0,
            violations: Vec::new(),
        })
        .collect();
    let mut record = |check: Check, t: &Tiling, ok: bool, detail: &dyn Fn() -> String| {
        let report = reports
            .iter_mut()
            .find(|r| r.check == check)
            .expect("every corpus check has a report");
        report.checked += 1;
        if !ok {
            report.violations.push(LemmaViolation {
                tiling: Some(t.clone()),
                detail: detail(),
            });
        }
    };

    for t in &corpus.tilings {
        let n = t.len();
        let sigma = t.sigma();
        record(Check::StatonTyler, t, check_staton_tyler(t), &|| {
            format!(
                "profile integral differs from sigma {}",
                rational::format(&sigma)
            )
        });
        let minimum = fm(n).ok();
        if let Some(minimum) = &minimum {
            record(Check::SigmaAtLeastMinimum, t, sigma >= *minimum, &|| {
                format!(
                    "n={n}: sigma {} below the minimum {}",
                    rational::format(&sigma),
                    rational::format(minimum)
                )
            });
        }
        let minimal = minimum.as_ref() == Some(&sigma);
        if n % 2 == 0 {
            let ok = check_largest_tile_bound(t).expect("even counts always apply");
            record(Check::LargestTileEven, t, ok, &|| {
                format!("n={n}: largest side {}", rational::format(t.largest_side()))
            });
        }
        if let Ok(bound) = corner_bound(t) {
            let ok = bound.holds() && bound.decomposition_holds();
            record(Check::CornerSigmaBound, t, ok, &|| {
                format!(
                    "b={}, k={}: sigma {} vs 3-b={}, strip min {}, top counts {:?}",
                    rational::format(&bound.b),
                    bound.k,
                    rational::format(&bound.sigma),
                    rational::format(&bound.bound()),
                    bound.left_strip_min,
                    bound.over_tile_counts
                )
            });
        }
        if !minimal {
            continue;
        }
        record(Check::PairSumOne, t, check_pair_sum_one(t), &|| {
            format!("n={n}: no two sides sum to 1")
        });
        if n % 2 == 1 {
            let ok = check_largest_tile_bound(t).expect("minimal odd counts apply");
            record(Check::LargestTileOdd, t, ok, &|| {
                format!("n={n}: largest side {}", rational::format(t.largest_side()))
            });
        }
        let ok = check_opposite_corner(t).expect("tiling is minimal");
        record(Check::OppositeCorner, t, ok, &|| {
            format!("n={n}: no exchange reaches the opposite-corner configuration")
        });
        if n == 7 {
            record(Check::SevenTileShape, t, check_seven_tile_shape(t), &|| {
                format!(
                    "sides {:?}",
                    side_multiset(t)
                        .iter()
                        .map(rational::format)
                        .collect::<Vec<_>>()
                )
            });
        }
    }
    reports.insert(4, area_quadratic_report());
    reports
}
