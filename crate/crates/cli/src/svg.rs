//! SVG rendering of a polygon, an optional partition and piece circles.
//! Output depends only on the inputs, so it can be compared byte for byte.

use std::fmt::Write;

use fatcut::fatness::{max_inscribed_circle, min_enclosing_circle};
use fatcut::{Circle, Point, Polygon, Tolerance};

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 20.0;
const PALETTE: [&str; 10] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
];

pub struct SvgOptions<'a> {
    pub pieces: Option<&'a [Vec<usize>]>,
    pub circles: bool,
}

struct Frame {
    lo: Point,
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(poly: &Polygon) -> Self {
        let (lo, hi) = poly.bounding_box();
        let span = (hi.x - lo.x).max(hi.y - lo.y);
        let scale = (WIDTH - 2.0 * MARGIN) / span;
        Frame {
            lo,
            scale,
            height: (hi.y - lo.y) * scale + 2.0 * MARGIN,
        }
    }

    // SVG's y axis points down.
    fn map(&self, p: Point) -> (f64, f64) {
        (
            MARGIN + (p.x - self.lo.x) * self.scale,
            self.height - MARGIN - (p.y - self.lo.y) * self.scale,
        )
    }

    fn path(&self, pts: impl IntoIterator<Item = Point>) -> String {
        let mut d = String::new();
        for (k, p) in pts.into_iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{x:.3} {y:.3} ", if k == 0 { "M" } else { "L" });
        }
        d.push('Z');
        d
    }

    fn circle(&self, out: &mut String, c: &Circle, class: &str, stroke: &str) {
        let (x, y) = self.map(c.center);
        let _ = writeln!(
            out,
            r#"  <circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="none" stroke="{stroke}" stroke-dasharray="4 3"/>"#,
            c.radius * self.scale
        );
    }
}

pub fn render(poly: &Polygon, opts: &SvgOptions<'_>, tol: Tolerance) -> String {
    let frame = Frame::new(poly);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{h:.3}" viewBox="0 0 {WIDTH:.0} {h:.3}">"#,
        h = frame.height
    );
    let whole: Vec<usize> = (0..poly.len()).collect();
    let pieces: Vec<&[usize]> = match opts.pieces {
        Some(ps) => ps.iter().map(|p| p.as_slice()).collect(),
        None => vec![whole.as_slice()],
    };
    if opts.pieces.is_some() {
        for (k, piece) in pieces.iter().enumerate() {
            let d = frame.path(piece.iter().map(|&v| poly.vertex(v)));
            let _ = writeln!(
                out,
                r##"  <path class="piece" d="{d}" fill="{}" stroke="#555555" stroke-width="1"/>"##,
                PALETTE[k % PALETTE.len()]
            );
        }
    }
    let _ = writeln!(
        out,
        r#"  <path class="outline" d="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        frame.path(poly.vertices().iter().copied())
    );
    if opts.circles {
        for piece in &pieces {
            let sub = poly.sub_polygon(piece).expect("pieces are simple");
            frame.circle(&mut out, &min_enclosing_circle(&sub, tol), "mcc", "#1f78b4");
            frame.circle(&mut out, &max_inscribed_circle(&sub, tol), "mic", "#e31a1c");
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn bare_polygon_is_one_path() {
        let svg = render(
            &square(),
            &SvgOptions {
                pieces: None,
                circles: false,
            },
            Tolerance::default(),
        );
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn lower_left_maps_to_bottom_margin() {
        let f = Frame::new(&square());
        let (x, y) = f.map(Point::new(0.0, 0.0));
        assert_eq!(x, MARGIN);
        assert_eq!(y, f.height - MARGIN);
    }
}
