use std::fmt::Write;

use super::{Decomposition, Domain, Orientation, Point, Ring};

/// Extra layer drawn on top of the domain.
#[derive(Clone, Debug)]
pub enum Overlay<'a> {
    Rects(&'a Decomposition),
    Points { label: String, points: Vec<Point> },
    Path { label: String, points: Vec<Point> },
}

fn points_attr(ring: &Ring) -> String {
    ring.vertices
        .iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the domain (internal units, y axis pointing up) as a standalone SVG document.
pub fn render_svg(d: &Domain, overlays: &[Overlay<'_>]) -> String {
    let b = d.bbox();
    let (w, h) = (b.xmax - b.xmin, b.ymax - b.ymin);
    let pad = (w.max(h) / 20).max(1);
    let stroke = (w.max(h) as f64 / 400.0).max(0.05);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        b.xmin - pad,
        b.ymin - pad,
        w + 2 * pad,
        h + 2 * pad
    );
    // flip so that y grows upwards
    let _ = writeln!(
        s,
        r#"<g transform="translate(0,{}) scale(1,-1)" stroke-width="{stroke}">"#,
        b.ymin + b.ymax
    );
    let _ = writeln!(
        s,
        r##"<polygon class="outer" points="{}" fill="#f4f1de" stroke="#222"/>"##,
        points_attr(&d.outer)
    );
    for hole in &d.holes {
        let _ = writeln!(
            s,
            r##"<polygon class="hole" points="{}" fill="#9a9a9a" stroke="#222"/>"##,
            points_attr(hole)
        );
    }

    for overlay in overlays {
        match overlay {
            Overlay::Rects(dec) => {
                let (class, color) = match dec.orientation {
                    Orientation::Horizontal => ("hdec", "#3d5a80"),
                    Orientation::Vertical => ("vdec", "#e07a5f"),
                };
                let _ = writeln!(s, r#"<g class="{class}" fill="none" stroke="{color}">"#);
                for r in &dec.rects {
                    let _ = writeln!(
                        s,
                        r#"<rect x="{}" y="{}" width="{}" height="{}"><title>{}{}</title></rect>"#,
                        r.xmin,
                        r.ymin,
                        r.width(),
                        r.height(),
                        &class[..1],
                        r.id
                    );
                }
                s.push_str("</g>\n");
            }
            Overlay::Points { label, points } => {
                let radius = stroke * 4.0;
                let _ = writeln!(s, r##"<g class="{label}" fill="#d62828">"##);
                for p in points {
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{}" cy="{}" r="{radius}"><title>{label} {p}</title></circle>"#,
                        p.x, p.y
                    );
                }
                s.push_str("</g>\n");
            }
            Overlay::Path { label, points } => {
                let pts = points
                    .iter()
                    .map(|p| format!("{},{}", p.x, p.y))
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(
                    s,
                    r##"<polyline class="{label}" points="{pts}" fill="none" stroke="#2a9d8f"/>"##
                );
            }
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::horizontal_decomposition;
    use super::*;

    #[test]
    fn square_has_one_polygon() {
        let d = Domain::parse(SQUARE).unwrap();
        let svg = render_svg(&d, &[]);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn donut_overlays() {
        let d = Domain::parse(DONUT).unwrap();
        let h = horizontal_decomposition(&d);
        let svg = render_svg(&d, &[Overlay::Rects(&h)]);
        assert_eq!(svg.matches("<rect").count(), 4);
        let svg = render_svg(
            &d,
            &[Overlay::Points {
                label: "diameter".into(),
                points: vec![Point::from_input(3, 7), Point::from_input(11, 7)],
            }],
        );
        assert_eq!(svg.matches("<circle").count(), 2);
    }
}
