//! SVG drawings of layouts.
//!
//! Abscissas are scaled uniformly. Heights are drawn by rank: the distinct
//! `y` values are spaced evenly, highest at the top, since only their order
//! affects visibility.

use std::fmt::Write as _;

use ubv_core::layout::sightlines;
use ubv_core::{Error, Layout, Rational};

const UNIT: f64 = 60.0;
const ROW: f64 = 28.0;
const MARGIN: f64 = 24.0;
const THICKNESS: f64 = 6.0;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Overlay one dashed vertical segment per visible pair of bars.
    pub sightlines: bool,
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Renders `layout`. The output depends only on the layout and options.
pub fn render_svg(layout: &Layout, options: RenderOptions) -> Result<String, Error> {
    layout.validate()?;
    let mut heights: Vec<Rational> = layout.bars.iter().map(|b| b.y).collect();
    heights.sort_unstable();
    heights.dedup();
    let rows = heights.len().max(1);
    let min_x = layout.min_x().map_or(0.0, to_f64);
    let max_x = layout.max_x().map_or(0.0, to_f64) + 1.0;

    let width = (max_x - min_x) * UNIT + 2.0 * MARGIN;
    let height = (rows as f64 - 1.0) * ROW + 2.0 * MARGIN + ROW / 2.0;
    let px = |x: Rational| MARGIN + (to_f64(x) - min_x) * UNIT;
    let py = |y: Rational| {
        let rank = heights.binary_search(&y).expect("height was collected");
        MARGIN + ROW / 2.0 + (rows - 1 - rank) as f64 * ROW
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    if options.sightlines {
        writeln!(out, r##"<g stroke="#d62728" stroke-width="1" stroke-dasharray="3,3">"##).unwrap();
        for line in sightlines(layout)? {
            let (lo, hi) = (&layout.bars[line.lower], &layout.bars[line.upper]);
            let x = px(line.x);
            writeln!(
                out,
                r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}"/>"#,
                py(lo.y) - THICKNESS / 2.0,
                py(hi.y) + THICKNESS / 2.0
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, r##"<g fill="#1f77b4" stroke="#10466e" stroke-width="0.5">"##).unwrap();
    for bar in &layout.bars {
        writeln!(
            out,
            r#"<rect x="{:.2}" y="{:.2}" width="{UNIT:.2}" height="{THICKNESS:.2}"/>"#,
            px(bar.x),
            py(bar.y) - THICKNESS / 2.0
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g font-family="monospace" font-size="10" fill="black">"#).unwrap();
    for bar in &layout.bars {
        writeln!(out, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, px(bar.x) + 2.0, py(bar.y) - THICKNESS, bar.vertex)
            .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ubv_core::layout::rat;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn one_rect_per_bar() {
        let mut single = Layout::default();
        single.push(0, rat(0, 1), rat(0, 1));
        let svg = render_svg(&single, RenderOptions::default()).unwrap();
        // The background is drawn with a rect as well.
        assert_eq!(count(&svg, "<rect ") - 1, 1);

        let kn = ubv_core::complete::construct_kn(14).unwrap();
        let svg = render_svg(&kn, RenderOptions::default()).unwrap();
        assert_eq!(count(&svg, "<rect ") - 1, kn.len());
        assert_eq!(count(&svg, "<text "), kn.len());
    }

    #[test]
    fn stacked_pair_has_one_sightline() {
        let mut pair = Layout::default();
        pair.push(0, rat(0, 1), rat(0, 1));
        pair.push(1, rat(0, 1), rat(5, 1));
        let svg = render_svg(&pair, RenderOptions { sightlines: true }).unwrap();
        assert_eq!(count(&svg, "<line "), 1);
        assert_eq!(count(&svg, "stroke-dasharray"), 1);
        let plain = render_svg(&pair, RenderOptions::default()).unwrap();
        assert_eq!(count(&plain, "<line "), 0);
    }

    #[test]
    fn deterministic() {
        let layout = ubv_core::complete::construct_kn(20).unwrap();
        let opts = RenderOptions { sightlines: true };
        assert_eq!(render_svg(&layout, opts).unwrap(), render_svg(&layout.clone(), opts).unwrap());
    }

    #[test]
    fn heights_are_ranks() {
        let mut layout = Layout::default();
        layout.push(0, rat(0, 1), rat(0, 1));
        layout.push(1, rat(0, 1), rat(1, 1000));
        layout.push(2, rat(0, 1), rat(1000, 1));
        let svg = render_svg(&layout, RenderOptions::default()).unwrap();
        let ys: Vec<f64> = svg
            .lines()
            .filter(|l| l.starts_with("<rect x="))
            .map(|l| l.split("y=\"").nth(1).unwrap().split('"').next().unwrap().parse().unwrap())
            .collect();
        assert_eq!(ys[0] - ys[1], ys[1] - ys[2]);
    }
}
