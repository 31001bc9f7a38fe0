//! Emit ASCII and SVG charts of a spectral sequence run.
//!
//! Charts use the Adams convention (x = stem t - s, y = filtration s), one
//! panel per page: dots carry the F_p-dimension of each interior spot and
//! arrows mark the spots supporting a nonzero differential. Rendering is
//! deterministic down to the byte -- ordered containers in, hand-emitted
//! integer-coordinate SVG out -- so charts can be golden-file tested.
//!
//! Run with: cargo run --example chart_svg

use tatecalc::chart::chart_from_pages;
use tatecalc::presets::{build_preset, Level};
use tatecalc::sseq::PageWindow;

fn main() -> tatecalc::Result<()> {
    // A compact window keeps the ASCII panel readable; the margin must
    // still cover the longest differential (9 at p = 3).
    let preset = build_preset(3, Level::F, true)?;
    let window = PageWindow::new(0, 24, -36, 36, 9)?;
    let mut ss = preset.spectral_sequence(window)?;

    let mut pages = ss.rule_pages();
    pages.push(ss.settled_page());
    let doc = chart_from_pages(&mut ss, &pages, "level F, p = 3, beta inverted")?;
    doc.validate()?;

    println!("{}", doc.to_ascii());

    let svg = doc.to_svg();
    let path = std::env::temp_dir().join("tatecalc_chart.svg");
    std::fs::write(&path, &svg).map_err(|e| {
        tatecalc::Error::Config(format!("cannot write {}: {}", path.display(), e))
    })?;
    println!("wrote SVG ({} bytes) to {}", svg.len(), path.display());

    // Byte stability: rebuilding the document reproduces the output
    // exactly.
    let mut again = preset.spectral_sequence(PageWindow::new(0, 24, -36, 36, 9)?)?;
    let doc2 = chart_from_pages(&mut again, &pages, "level F, p = 3, beta inverted")?;
    assert_eq!(doc2.to_svg(), svg);
    println!("re-rendering is byte-identical");
    Ok(())
}
