//! Minimal deterministic SVG scatter plots for two-objective fronts.
//!
//! Output contains no timestamps or randomness: identical inputs produce
//! byte-identical files. Coordinates are written with fixed precision.

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 50.0;

struct Range {
    min: f64,
    max: f64,
}

impl Range {
    /// Bounding range of one objective across all series, padded by 5% so
    /// boundary points are not drawn on the frame. Zero spans get a unit pad.
    fn of(values: impl Iterator<Item = f64>) -> Range {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in values {
            min = min.min(v);
            max = max.max(v);
        }
        if !min.is_finite() || !max.is_finite() {
            min = 0.0;
            max = 1.0;
        }
        let span = max - min;
        let pad = if span > 0.0 { 0.05 * span } else { 0.5 };
        Range {
            min: min - pad,
            max: max + pad,
        }
    }

    fn span(&self) -> f64 {
        self.max - self.min
    }
}

fn x_pixel(v: f64, r: &Range) -> f64 {
    MARGIN_LEFT + (v - r.min) / r.span() * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
}

fn y_pixel(v: f64, r: &Range) -> f64 {
    // SVG y grows downward; objective values grow upward.
    HEIGHT - MARGIN_BOTTOM - (v - r.min) / r.span() * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
}

/// Render a scatter plot of `points`, optionally over a `reference`
/// polyline, with a title and axis extent labels.
pub fn front_plot(title: &str, points: &[[f64; 2]], reference: Option<&[[f64; 2]]>) -> String {
    let all = points
        .iter()
        .chain(reference.unwrap_or(&[]).iter())
        .copied()
        .collect::<Vec<_>>();
    let xr = Range::of(all.iter().map(|p| p[0]));
    let yr = Range::of(all.iter().map(|p| p[1]));

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{title}</text>\n",
        WIDTH / 2.0
    ));

    // Plot frame.
    svg.push_str(&format!(
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{:.2}\" height=\"{:.2}\" \
         fill=\"none\" stroke=\"black\"/>\n",
        WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    ));

    // Axis extent labels.
    svg.push_str(&format!(
        "<text x=\"{MARGIN_LEFT}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">{:.4}</text>\n",
        HEIGHT - MARGIN_BOTTOM + 18.0,
        xr.min
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">{:.4}</text>\n",
        WIDTH - MARGIN_RIGHT,
        HEIGHT - MARGIN_BOTTOM + 18.0,
        xr.max
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"end\">{:.4}</text>\n",
        MARGIN_LEFT - 6.0,
        HEIGHT - MARGIN_BOTTOM,
        yr.min
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"end\">{:.4}</text>\n",
        MARGIN_LEFT - 6.0,
        MARGIN_TOP + 12.0,
        yr.max
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\">f1</text>\n",
        (MARGIN_LEFT + WIDTH - MARGIN_RIGHT) / 2.0,
        HEIGHT - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\">f2</text>\n",
        (MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2.0
    ));

    if let Some(reference) = reference {
        if reference.len() > 1 {
            let mut path = String::new();
            for (i, p) in reference.iter().enumerate() {
                let cmd = if i == 0 { 'M' } else { 'L' };
                path.push_str(&format!(
                    "{cmd}{:.2} {:.2} ",
                    x_pixel(p[0], &xr),
                    y_pixel(p[1], &yr)
                ));
            }
            svg.push_str(&format!(
                "<path d=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
                path.trim_end()
            ));
        }
    }

    for p in points {
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#1f6fb2\" \
             fill-opacity=\"0.8\"/>\n",
            x_pixel(p[0], &xr),
            y_pixel(p[1], &yr)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
