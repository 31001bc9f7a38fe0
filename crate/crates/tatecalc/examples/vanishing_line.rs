//! Derive horizontal vanishing lines by symbolic range propagation.
//!
//! A map of spectral sequences that is onto above filtration M0 and an
//! isomorphism above M1 on one page stays controlled on the next:
//!
//!   (M0, M1) on page r  ->  (max(M0, M1 - r), max(M1, M0 + r)) on page r+1.
//!
//! Comparing a preset against the zero spectral sequence starts the
//! recursion at (vcd, vcd + 1) on page 2 -- everything above the vcd dies
//! by then -- and iterating to the settled page 2n^2 + 2 yields the
//! horizontal vanishing line s = 2n^2 + vcd + 1.
//!
//! Run with: cargo run --example vanishing_line

use tatecalc::presets::Level;
use tatecalc::ranges::{propagate, vanishing_line, RangeBound, Threshold};

fn main() -> tatecalc::Result<()> {
    // The raw calculus, one step at a time.
    let mut bound = RangeBound::new(2, Threshold::Finite(4), Threshold::Finite(5))?;
    println!("propagating a page-2 bound (onto above 4, iso above 5):");
    for _ in 0..5 {
        println!(
            "  page {:>2}: onto from s >= {}, iso from s >= {}",
            bound.page, bound.onto_from, bound.iso_from
        );
        bound = propagate(bound);
    }
    println!("  ...");
    println!();

    // The derived lines for every level with a vcd. The F level has vcd 0
    // (it is a finite group up to center), N has n, G has n^2.
    for (p, level) in [
        (3u32, Level::G),
        (3, Level::F),
        (5, Level::N),
        (5, Level::G),
        (7, Level::G),
    ] {
        let line = vanishing_line(p, level)?;
        println!(
            "p = {}, level {}: zero above s = {} from page {} on",
            p,
            level,
            line.line - 1,
            line.page
        );
        println!("  vanishing line: page {}, s = {}", line.page, line.line);
        let last = line.trace.last().expect("trace is never empty");
        println!(
            "  final trace entry: onto from s >= {}, iso from s >= {}",
            last.onto_from, last.iso_from
        );
    }
    println!();
    println!("the iso threshold of the last entry is the line itself: above");
    println!("it the settled page agrees with the zero spectral sequence.");
    Ok(())
}
