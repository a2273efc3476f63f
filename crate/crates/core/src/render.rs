//! Static SVG figures of tilings.
//!
//! The canvas is square with `(0, 0)` at the bottom-left, as in the unit
//! square's coordinates. Pixel values are exact rationals rounded to six
//! decimal places, half to even.

use std::fmt::Write;

use crate::rational::{int, to_decimal, Rational};
use crate::tiling::Tiling;

const PLACES: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub canvas: u32,
    pub stroke: Rational,
    pub fill: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            canvas: 1000,
            stroke: int(2),
            fill: false,
        }
    }
}

/// Pixel rectangle `(x, y, width)` for each tile, y axis pointing down.
pub fn pixel_rects(t: &Tiling, canvas: u32) -> Vec<(Rational, Rational, Rational)> {
    let scale = int(i64::from(canvas));
    t.tiles()
        .iter()
        .map(|tile| {
            let top = int(1) - tile.top();
            (&tile.x * &scale, top * &scale, &tile.s * &scale)
        })
        .collect()
}

/// Fill colour keyed on side length so equal tiles share a colour.
fn fill_for(side: &Rational) -> String {
    let hash = side
        .numer()
        .to_u32_digits()
        .1
        .iter()
        .chain(side.denom().to_u32_digits().1.iter())
        .fold(2166136261u32, |h, &d| (h ^ d).wrapping_mul(16777619));
    format!("hsl({}, 55%, 75%)", hash % 360)
}

pub fn render_svg(t: &Tiling, spec: &RenderSpec) -> String {
    let size = spec.canvas;
    let stroke = to_decimal(&spec.stroke, PLACES);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    for ((x, y, w), tile) in pixel_rects(t, size).iter().zip(t.tiles()) {
        let fill = if spec.fill {
            fill_for(&tile.s)
        } else {
            "none".into()
        };
        let w = to_decimal(w, PLACES);
        writeln!(
            out,
            r#"  <rect class="tile" x="{}" y="{}" width="{w}" height="{w}" fill="{fill}" stroke="black" stroke-width="{stroke}"/>"#,
            to_decimal(x, PLACES),
            to_decimal(y, PLACES),
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"  <rect class="border" x="0" y="0" width="{size}" height="{size}" fill="none" stroke="black" stroke-width="{stroke}"/>"#
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_even;

    #[test]
    fn unit_tiling_fills_canvas() {
        let svg = render_svg(&Tiling::unit(), &RenderSpec::default());
        assert_eq!(svg.matches("class=\"tile\"").count(), 1);
        assert!(svg.contains(r#"x="0.000000" y="0.000000" width="1000.000000""#));
    }

    #[test]
    fn y_axis_is_flipped() {
        let t = build_even(3).unwrap();
        let rects = pixel_rects(&t, 900);
        // The big tile sits on the bottom edge: its top is 300px down.
        assert!(rects.contains(&(int(300), int(300), int(600))));
        let svg = render_svg(
            &t,
            &RenderSpec {
                canvas: 900,
                stroke: int(1),
                fill: true,
            },
        );
        assert_eq!(svg.matches("class=\"tile\"").count(), 6);
        assert!(svg.contains("class=\"border\""));
        assert!(svg.contains("hsl("));
    }
}
