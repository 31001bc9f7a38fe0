//! Stress-test the range-propagation calculus on random filtered complexes.
//!
//! The vanishing-line derivation rests on one lemma: if a map of spectral
//! sequences is onto above filtration M0 and an isomorphism above M1 on
//! page r, then on page r + 1 it is onto above max(M0, M1 - r) and an
//! isomorphism above max(M1, M0 + r). The simulator manufactures random
//! filtered cochain complexes with a prescribed (M0, M1) on page 2 -- junk
//! summands hidden by random filtration-preserving changes of basis -- and
//! brute-forces every page, spot by spot, checking the propagated bounds
//! against actual ranks.
//!
//! Run with: cargo run --example comparison_simulator

use tatecalc::fp_linalg::Fp;
use tatecalc::ranges::simulate::{
    simulate_comparison, simulate_suite, SimulationOutcome, SimulationSizes,
};
use tatecalc::ranges::{RangeBound, Threshold};

fn main() -> tatecalc::Result<()> {
    let sizes = SimulationSizes::default();
    println!(
        "instance shape: F_{}, {} total degrees, filtrations 0..{}, {} shared pieces, {}+{} junk pieces, pages 2..={}",
        sizes.prime,
        sizes.total_degrees,
        sizes.filtration_levels,
        sizes.shared_pieces,
        sizes.source_junk,
        sizes.target_junk,
        sizes.max_page
    );

    // A few individual seeds, with the number of (page, filtration, degree)
    // spots each one checked.
    println!();
    for seed in 0..5u64 {
        match simulate_comparison(seed, &sizes)? {
            SimulationOutcome::Clear {
                pages_checked,
                sites_checked,
            } => println!(
                "  seed {}: clear ({} pages, {} spots checked)",
                seed, pages_checked, sites_checked
            ),
            SimulationOutcome::Violated(v) => println!("  seed {}: VIOLATION {:?}", seed, v),
        }
    }

    // A larger parallel batch.
    let report = simulate_suite(0, 400, &sizes)?;
    println!();
    println!(
        "batch: {}/{} instances clear, violations: {}",
        report.clear,
        report.runs,
        match &report.first_violation {
            None => "none".to_string(),
            Some((seed, v)) => format!("first at seed {}: {:?}", seed, v),
        }
    );
    assert!(report.first_violation.is_none());

    // The thresholds really are sharp at the starting page: a bound that
    // claims too much is caught immediately. Verify by checking a zero map
    // onto a nonzero target against an "onto everywhere" claim.
    use tatecalc::ranges::simulate::{verify_bounds, FilteredComplex, FilteredMap};
    let f = Fp::new(3)?;
    let empty = FilteredComplex::empty(f, 2);
    let dot = FilteredComplex::single_dot(f, 2, 0, 4)?;
    let zero_map = FilteredMap::zero(&empty, &dot);
    let lying = RangeBound::new(2, Threshold::Finite(0), Threshold::Finite(0))?;
    match verify_bounds(&empty, &dot, &zero_map, lying, 4, 6)? {
        SimulationOutcome::Violated(v) => {
            println!();
            println!(
                "lying bound caught: {} fails at page {}, spot (s, u) = ({}, {})",
                v.kind, v.page, v.s, v.u
            );
        }
        SimulationOutcome::Clear { .. } => panic!("the lying bound must be caught"),
    }
    Ok(())
}
