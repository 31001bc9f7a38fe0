//! Enumerate monomial bases of the preset cohomology rings.
//!
//! Every preset ring is generated by alpha, beta, Delta (and exterior
//! classes a_0 .. a_{n-1} at the N and G levels), so a bidegree (s, t) pins
//! the exponents down to the integer solutions of two degree equations.
//! `basis_in_bidegree` enumerates those solutions exactly -- no truncation,
//! no floating point.
//!
//! Run with: cargo run --example ring_basis

use tatecalc::presets::{build_preset, HeightContext, Level};

fn main() -> tatecalc::Result<()> {
    // The smallest interesting prime for the diagonal story: p = 5, height
    // n = 4. The level-N ring carries exterior classes a_0 .. a_3.
    let p = 5;
    let ctx = HeightContext::new(p)?;
    let n = ctx.n;
    let preset = build_preset(p, Level::N, false)?;
    let ring = &preset.presentation;

    println!("level N at p = {} (height n = {})", p, n);
    println!("generator bidegrees:");
    for g in ring.generators() {
        println!("  {:<6} at (s, t) = ({}, {})", g.name, g.s, g.t);
    }

    // The bidegree featured by the Picard bound: (2n + 1, 2n) = (9, 8).
    let (s, t) = (2 * n + 1, 2 * n);
    println!();
    println!("basis at (s, t) = ({}, {}):", s, t);
    for m in ring.basis_in_bidegree(s, t) {
        println!("  {}", ring.format_monomial(&m));
    }
    println!("dimension: {}", ring.dimension(s, t));

    // A few more spots, including empty ones: the ring is sparse, living
    // only in internal degrees divisible by 2n.
    println!();
    println!("dimensions near the diagonal:");
    for (s, t) in [(9, 8), (9, 10), (10, 8), (13, 12), (0, 0)] {
        println!("  dim({:>2}, {:>2}) = {}", s, t, ring.dimension(s, t));
    }

    // The same machinery works for the beta-inverted (Farrell-Tate) ring:
    // beta gains negative exponents and every t-column becomes periodic.
    let tate = build_preset(p, Level::N, true)?;
    println!();
    println!(
        "beta-inverted dimension at ({}, {}): {}",
        s,
        t,
        tate.presentation.dimension(s, t)
    );
    println!(
        "beta-inverted dimension at ({}, {}): {} (beta^-1 opens negative powers)",
        s,
        t - 4 * p as i64 * n,
        tate.presentation.dimension(s, t - 4 * p as i64 * n)
    );
    Ok(())
}
