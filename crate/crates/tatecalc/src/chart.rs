//! Deterministic chart emission for spectral sequence pages.
//!
//! Charts use the Adams convention: x is the stem t - s and y is the
//! filtration s, so a d_r differential points one column left and r rows up,
//! and a horizontal vanishing line really is horizontal. A document carries
//! one panel per requested page; each panel records the interior
//! F_p-dimension at every spot (the dots, with multiplicities) and the spots
//! supporting a nonzero differential on that page (the arrows).
//!
//! Both renderers are plain string builders over ordered containers, so the
//! same document always produces the same bytes; the SVG uses integer pixel
//! coordinates only and is emitted by hand rather than through a plotting
//! library.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::sseq::SpectralSequence;
use crate::{Error, Result};

/// A nonzero differential on one panel, in chart coordinates (stem,
/// filtration).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartArrow {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub page: u32,
}

/// The dots and arrows of one page.
#[derive(Clone, Debug, Default)]
pub struct ChartPanel {
    pub page: u32,
    /// (stem, filtration) -> F_p-dimension at that spot.
    pub dots: BTreeMap<(i64, i64), usize>,
    pub arrows: Vec<ChartArrow>,
}

/// A multi-panel chart with a legend.
#[derive(Clone, Debug, Default)]
pub struct ChartDocument {
    pub title: String,
    pub legend: Vec<String>,
    pub panels: Vec<ChartPanel>,
}

impl ChartDocument {
    /// Every arrow must start and end on dots of its own panel.
    pub fn validate(&self) -> Result<()> {
        for panel in &self.panels {
            for arrow in &panel.arrows {
                if !panel.dots.contains_key(&arrow.from) || !panel.dots.contains_key(&arrow.to) {
                    return Err(Error::InternalCheck(format!(
                        "arrow ({}, {}) -> ({}, {}) on page {} misses its dots",
                        arrow.from.0, arrow.from.1, arrow.to.0, arrow.to.1, panel.page
                    )));
                }
            }
        }
        Ok(())
    }

    /// Chart-coordinate bounding box over all panels, None when every panel
    /// is empty.
    fn bounds(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut bounds: Option<((i64, i64), (i64, i64))> = None;
        for panel in &self.panels {
            for &(x, y) in panel.dots.keys() {
                let ((x0, x1), (y0, y1)) = bounds.unwrap_or(((x, x), (y, y)));
                bounds = Some(((x0.min(x), x1.max(x)), (y0.min(y), y1.max(y))));
            }
        }
        bounds
    }

    /// Renders every panel as a text grid (rows are filtrations, top-down;
    /// columns are stems) followed by its arrow list. Cells show the
    /// dimension: `.` for zero, the digit for 1..=9, `+` beyond.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        for line in &self.legend {
            let _ = writeln!(out, "# {}", line);
        }
        let Some(((x_min, x_max), (y_min, y_max))) = self.bounds() else {
            let _ = writeln!(out, "(all panels empty)");
            return out;
        };
        for panel in &self.panels {
            let _ = writeln!(out);
            let _ = writeln!(out, "page {} (x = stem t-s, y = filtration s)", panel.page);
            for y in (y_min..=y_max).rev() {
                let _ = write!(out, "{:>5} |", y);
                for x in x_min..=x_max {
                    let c = match panel.dots.get(&(x, y)).copied().unwrap_or(0) {
                        0 => '.',
                        d @ 1..=9 => (b'0' + d as u8) as char,
                        _ => '+',
                    };
                    let _ = write!(out, " {}", c);
                }
                let _ = writeln!(out);
            }
            let _ = write!(out, "      +");
            for _ in x_min..=x_max {
                let _ = write!(out, "--");
            }
            let _ = writeln!(out);
            let _ = write!(out, "       ");
            for x in x_min..=x_max {
                let _ = write!(out, "{}", if x % 10 == 0 { " ^" } else { "  " });
            }
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "stems {} ..= {}, carets at multiples of 10",
                x_min, x_max
            );
            if panel.arrows.is_empty() {
                let _ = writeln!(out, "no differentials on this page");
            } else {
                for arrow in &panel.arrows {
                    let _ = writeln!(
                        out,
                        "d{}: ({}, {}) -> ({}, {})",
                        arrow.page, arrow.from.0, arrow.from.1, arrow.to.0, arrow.to.1
                    );
                }
            }
        }
        out
    }

    /// Renders the document as standalone SVG with integer coordinates:
    /// panels stacked vertically, dots as circles (dimension printed beside
    /// a dot when it exceeds 1), differentials as arrows.
    pub fn to_svg(&self) -> String {
        const CELL: i64 = 14;
        const PAD: i64 = 56;
        const HEAD: i64 = 34;
        const FOOT: i64 = 30;

        let ((x_min, x_max), (y_min, y_max)) = self
            .bounds()
            .unwrap_or(((0, 1), (0, 1)));
        let grid_w = (x_max - x_min + 1) * CELL;
        let grid_h = (y_max - y_min + 1) * CELL;
        let panel_h = HEAD + grid_h + FOOT;
        let width = PAD * 2 + grid_w;
        let legend_h = 18 * (1 + self.legend.len() as i64);
        let height = legend_h + panel_h * self.panels.len() as i64 + 10;

        let px = |x: i64| PAD + (x - x_min) * CELL + CELL / 2;

        let mut out = String::new();
        let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
        let _ = writeln!(
            out,
            r##"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="11">"##,
            w = width,
            h = height
        );
        let _ = writeln!(
            out,
            r##"<defs><marker id="tip" markerWidth="7" markerHeight="7" refX="6" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="#bb2222"/></marker></defs>"#
        );
        let _ = writeln!(
            out,
            r##"<rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>"##,
            width, height
        );
        let _ = writeln!(
            out,
            r##"<text x="{}" y="14" font-size="13">{}</text>"##,
            PAD,
            xml_escape(&self.title)
        );
        for (i, line) in self.legend.iter().enumerate() {
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{}" fill="#555555">{}</text>"##,
                PAD,
                32 + 18 * i as i64,
                xml_escape(line)
            );
        }

        for (idx, panel) in self.panels.iter().enumerate() {
            let top = legend_h + panel_h * idx as i64;
            let py = |y: i64| top + HEAD + (y_max - y) * CELL + CELL / 2;
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{}" font-size="12">page {}</text>"##,
                PAD,
                top + 22,
                panel.page
            );
            // Axes: a baseline below the lowest filtration and a left rail.
            let base = py(y_min) + CELL / 2;
            let rail = PAD - CELL / 2;
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888"/>"##,
                rail,
                base,
                PAD + grid_w,
                base
            );
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888"/>"##,
                rail,
                top + HEAD,
                rail,
                base
            );
            for x in x_min..=x_max {
                if x % 10 == 0 {
                    let _ = writeln!(
                        out,
                        r##"<text x="{}" y="{}" text-anchor="middle" fill="#555555">{}</text>"##,
                        px(x),
                        base + 14,
                        x
                    );
                    let _ = writeln!(
                        out,
                        r##"<line x1="{cx}" y1="{}" x2="{cx}" y2="{}" stroke="#888888"/>"##,
                        base,
                        base + 4,
                        cx = px(x)
                    );
                }
            }
            for y in y_min..=y_max {
                if y % 5 == 0 {
                    let _ = writeln!(
                        out,
                        r##"<text x="{}" y="{}" text-anchor="end" fill="#555555">{}</text>"##,
                        rail - 4,
                        py(y) + 4,
                        y
                    );
                }
            }
            for arrow in &panel.arrows {
                let _ = writeln!(
                    out,
                    r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#bb2222" marker-end="url(#tip)"/>"##,
                    px(arrow.from.0),
                    py(arrow.from.1),
                    px(arrow.to.0),
                    py(arrow.to.1)
                );
            }
            for (&(x, y), &dim) in &panel.dots {
                let _ = writeln!(
                    out,
                    r##"<circle cx="{}" cy="{}" r="3" fill="#111111"/>"##,
                    px(x),
                    py(y)
                );
                if dim > 1 {
                    let _ = writeln!(
                        out,
                        r##"<text x="{}" y="{}" fill="#111111">{}</text>"##,
                        px(x) + 4,
                        py(y) - 4,
                        dim
                    );
                }
            }
        }
        let _ = writeln!(out, "</svg>");
        out
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Builds a chart of the given pages from a computed spectral sequence:
/// dots are the interior dimensions, arrows the interior spots supporting a
/// nonzero differential on their page. Arrows whose target leaves the
/// interior region are omitted rather than drawn into untrusted territory.
pub fn chart_from_pages(
    ss: &mut SpectralSequence,
    pages: &[u32],
    title: &str,
) -> Result<ChartDocument> {
    let mut wanted: Vec<u32> = pages.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    if let Some(&max) = wanted.last() {
        ss.compute_through(max)?;
    }
    let window = ss.window();
    let mut doc = ChartDocument {
        title: title.to_string(),
        legend: vec![
            "dots: F_p-dimension per (stem, filtration); '.' is zero".to_string(),
            format!(
                "interior region: s in [{}, {}], t in [{}, {}]",
                window.interior_s().0,
                window.interior_s().1,
                window.interior_t().0,
                window.interior_t().1
            ),
        ],
        panels: Vec::new(),
    };
    for &page in &wanted {
        let mut panel = ChartPanel {
            page,
            dots: BTreeMap::new(),
            arrows: Vec::new(),
        };
        for ((s, t), dim) in ss.interior_dims(page)? {
            if dim > 0 {
                panel.dots.insert((t - s, s), dim);
            }
        }
        for ((s, t), _) in ss.interior_dims(page)? {
            let target = (s + page as i64, t + page as i64 - 1);
            if !window.interior_contains(target.0, target.1) {
                continue;
            }
            if let Some(m) = ss.differential_matrix(page, s, t) {
                if !m.is_zero() {
                    panel.arrows.push(ChartArrow {
                        from: (t - s, s),
                        to: (target.1 - target.0, target.0),
                        page,
                    });
                }
            }
        }
        doc.panels.push(panel);
    }
    doc.validate()?;
    Ok(doc)
}
