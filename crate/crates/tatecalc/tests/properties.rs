//! Randomized structural invariants of the engine.
//!
//! - The closed-form differentials square to zero on every preset ring.
//! - The early differential is a graded derivation on the whole ring; the
//!   late one satisfies the Leibniz rule on the survivor-shaped monomials
//!   it is defined on.
//! - Threshold propagation is monotone, preserves onto <= iso, and the
//!   trace helper agrees with single steps.
//! - The integer degree-equation solvers enumerate exactly the monomial
//!   bases computed independently by the ring presentations.

use std::sync::OnceLock;

use proptest::prelude::*;

use tatecalc::algebra::{solve_degree_equations, solve_late_target_equations, Element, Monomial};
use tatecalc::presets::{build_preset, Level};
use tatecalc::ranges::{propagate, propagate_through, RangeBound, Threshold};
use tatecalc::sseq::{PageWindow, SpectralSequence};

const PRIMES: [u32; 3] = [3, 5, 7];

/// One spectral sequence per (prime, level, inverted) triple. The window
/// only matters for page computations, not for the formal differential, so
/// a tiny one keeps construction cheap.
fn engines() -> &'static Vec<(u32, bool, SpectralSequence)> {
    static ENGINES: OnceLock<Vec<(u32, bool, SpectralSequence)>> = OnceLock::new();
    ENGINES.get_or_init(|| {
        let mut out = Vec::new();
        for &p in &PRIMES {
            for level in [Level::F, Level::N] {
                for inverted in [false, true] {
                    let preset = build_preset(p, level, inverted).unwrap();
                    // The margin must cover the longest differential.
                    let margin = preset.context.late_rule_page() as i64;
                    let window = PageWindow::new(0, 2, -10, 10, margin).unwrap();
                    out.push((p, inverted, preset.spectral_sequence(window).unwrap()));
                }
            }
        }
        out
    })
}

/// Builds alpha^a beta^b Delta^d a_I in the given engine's ring, clamping
/// the beta exponent to be nonnegative when beta is not invertible and
/// masking the exterior factors down to the generators that exist.
fn raw_monomial(
    ss: &SpectralSequence,
    inverted: bool,
    alpha: bool,
    beta: i64,
    delta: i64,
    mask: u8,
) -> Monomial {
    let pres = ss.presentation();
    let beta = if inverted { beta } else { beta.abs() };
    let ext_names: Vec<String> = pres
        .generators()
        .iter()
        .skip(3)
        .map(|g| g.name.clone())
        .collect();
    let mut pairs: Vec<(&str, i64)> = vec![
        ("alpha", alpha as i64),
        ("beta", beta),
        ("Delta", delta),
    ];
    for (i, name) in ext_names.iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            pairs.push((name, 1));
        }
    }
    pres.monomial(&pairs).unwrap()
}

/// Checks d(xy) = d(x) y + (-1)^{|x|} x d(y) for the page-r differential,
/// with |x| the total parity of x.
fn leibniz_holds(ss: &SpectralSequence, r: u32, x: &Element, y: &Element) -> bool {
    let pres = ss.presentation();
    let xy = pres.multiply(x, y).unwrap();
    let lhs = ss.apply_differential(r, &xy).unwrap();
    let dx_y = pres
        .multiply(&ss.apply_differential(r, x).unwrap(), y)
        .unwrap();
    let x_dy = pres
        .multiply(x, &ss.apply_differential(r, y).unwrap())
        .unwrap();
    let sign = match pres.element_bidegree(x) {
        Some((s, t)) if (s + t).rem_euclid(2) == 1 => -1,
        _ => 1,
    };
    let rhs = pres.add(&dx_y, &pres.scale(&x_dy, sign)).unwrap();
    lhs == rhs
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 500,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn differentials_square_to_zero(
        alpha in any::<bool>(),
        beta in -6i64..=6,
        delta in -4i64..=4,
        mask in 0u8..64,
        coeff in 1i64..=4,
    ) {
        for (p, inverted, ss) in engines() {
            let pres = ss.presentation();
            let m = raw_monomial(ss, *inverted, alpha, beta, delta, mask);
            let x = pres.scale(&pres.element_from_monomial(m).unwrap(), coeff);
            for r in ss.rule_pages() {
                let dx = ss.apply_differential(r, &x).unwrap();
                let ddx = ss.apply_differential(r, &dx).unwrap();
                prop_assert!(
                    ddx.is_zero(),
                    "d_{} applied twice is nonzero at p = {}",
                    r,
                    p
                );
            }
        }
    }

    #[test]
    fn early_differential_is_a_derivation(
        xa in any::<bool>(), xb in -5i64..=5, xd in -3i64..=3, xm in 0u8..64,
        ya in any::<bool>(), yb in -5i64..=5, yd in -3i64..=3, ym in 0u8..64,
    ) {
        for (p, inverted, ss) in engines() {
            let pres = ss.presentation();
            let early = ss.rule_pages()[0];
            let x = pres
                .element_from_monomial(raw_monomial(ss, *inverted, xa, xb, xd, xm))
                .unwrap();
            let y = pres
                .element_from_monomial(raw_monomial(ss, *inverted, ya, yb, yd, ym))
                .unwrap();
            prop_assert!(
                leibniz_holds(ss, early, &x, &y),
                "Leibniz fails for d_{} at p = {}",
                early,
                p
            );
        }
    }

    #[test]
    fn late_differential_is_a_derivation_on_survivors(
        xe in any::<bool>(), xb in -5i64..=5, xl in -2i64..=2, xm in 0u8..64,
        ye in any::<bool>(), yb in -5i64..=5, yl in -2i64..=2, ym in 0u8..64,
    ) {
        // Survivor shape: beta^b Delta^{pk} a_I without alpha, or
        // alpha beta^b Delta^{n + pk} a_I; only these carry the late
        // differential, so the Leibniz check is restricted to them.
        for (p, inverted, ss) in engines() {
            let n = (*p - 1) as i64;
            let pres = ss.presentation();
            let late = *ss.rule_pages().last().unwrap();
            let xd = if xe { n + *p as i64 * xl } else { *p as i64 * xl };
            let yd = if ye { n + *p as i64 * yl } else { *p as i64 * yl };
            let x = pres
                .element_from_monomial(raw_monomial(ss, *inverted, xe, xb, xd, xm))
                .unwrap();
            let y = pres
                .element_from_monomial(raw_monomial(ss, *inverted, ye, yb, yd, ym))
                .unwrap();
            prop_assert!(
                leibniz_holds(ss, late, &x, &y),
                "Leibniz fails for d_{} at p = {}",
                late,
                p
            );
        }
    }

    #[test]
    fn threshold_propagation_is_monotone(
        page in 2u32..40,
        onto_inf in any::<bool>(),
        m0 in -30i64..=30,
        gap in 0i64..=25,
        steps in 0u32..30,
    ) {
        let onto = if onto_inf {
            Threshold::MinusInfinity
        } else {
            Threshold::Finite(m0)
        };
        let iso = match onto {
            Threshold::MinusInfinity => Threshold::Finite(m0),
            Threshold::Finite(a) => Threshold::Finite(a + gap),
        };
        let start = RangeBound::new(page, onto, iso).unwrap();
        let trace = propagate_through(start, page + steps);
        prop_assert_eq!(trace.len() as u32, steps + 1);
        prop_assert_eq!(trace[0], start);
        for w in trace.windows(2) {
            prop_assert_eq!(w[1], propagate(w[0]));
            prop_assert_eq!(w[1].page, w[0].page + 1);
            // Thresholds only ever tighten upward...
            prop_assert_eq!(w[1].onto_from.max(w[0].onto_from), w[1].onto_from);
            prop_assert_eq!(w[1].iso_from.max(w[0].iso_from), w[1].iso_from);
            // ...and the iso threshold stays above the onto threshold.
            prop_assert_eq!(w[1].iso_from.max(w[1].onto_from), w[1].iso_from);
        }
    }

    #[test]
    fn threshold_shift_matches_admission(
        a in proptest::option::of(-40i64..=40),
        b in proptest::option::of(-40i64..=40),
        d in -15i64..=15,
        s in -60i64..=60,
    ) {
        let lift = |o: Option<i64>| o.map(Threshold::Finite).unwrap_or(Threshold::MinusInfinity);
        let (ta, tb) = (lift(a), lift(b));
        prop_assert_eq!(ta.plus(d).admits(s), ta.admits(s - d));
        prop_assert!(Threshold::MinusInfinity.admits(s));
        prop_assert_eq!(Threshold::MinusInfinity.plus(d), Threshold::MinusInfinity);
        // max is the conjunction of admission conditions.
        prop_assert_eq!(ta.max(tb).admits(s), ta.admits(s) && tb.admits(s));
        prop_assert_eq!(ta.max(tb), tb.max(ta));
        prop_assert_eq!(ta.max(ta), ta);
    }

    #[test]
    fn degree_solver_matches_basis_enumeration(
        p_idx in 0usize..3,
        eps in any::<bool>(),
        m in -8i64..=8,
        k in -5i64..=5,
        bits in 0u8..64,
        js in 0i64..=2,
        jt in -1i64..=1,
    ) {
        let p = PRIMES[p_idx];
        let n = (p - 1) as i64;
        let mask_bits = (bits as i64) & ((1i64 << n) - 1);
        let size = mask_bits.count_ones() as i64;
        let weight: i64 = (0..n).filter(|i| (mask_bits >> i) & 1 == 1).sum();

        // Seed a bidegree from a known solution, then jitter it; jittered
        // bidegrees are usually empty on both sides, which must also agree.
        let s0 = eps as i64 + 2 * m + size;
        let t0 = 2 * n * eps as i64 + 2 * p as i64 * n * (m + n * k + p as i64 * weight);
        let (s, t) = (s0 + js, t0 + jt);

        let sols = solve_degree_equations(p, s, t).unwrap();
        let mut from_solver: Vec<Vec<i64>> = sols
            .iter()
            .map(|sol| {
                let mut e = vec![sol.alpha as i64, sol.beta, sol.delta];
                e.extend(sol.mask.iter().map(|&b| b as i64));
                e
            })
            .collect();
        from_solver.sort();
        from_solver.dedup();
        prop_assert_eq!(from_solver.len(), sols.len(), "solver repeated a solution");

        let pres = build_preset(p, Level::N, true).unwrap().presentation;
        let mut basis: Vec<Vec<i64>> = pres
            .basis_in_bidegree(s, t)
            .iter()
            .map(|mono| mono.exponents().to_vec())
            .collect();
        basis.sort();
        prop_assert_eq!(&from_solver, &basis);

        if js == 0 && jt == 0 {
            let mut probe = vec![eps as i64, m, k];
            probe.extend((0..n).map(|i| (mask_bits >> i) & 1));
            prop_assert!(from_solver.contains(&probe), "seeded solution missing");
        }

        // The mask-free solutions are exactly the three-generator ring's
        // basis in the same bidegree.
        let f_pres = build_preset(p, Level::F, true).unwrap().presentation;
        let mask_free = from_solver.iter().filter(|e| e[3..].iter().all(|&b| b == 0)).count();
        prop_assert_eq!(mask_free, f_pres.dimension(s, t));

        // The late-target solver picks out the alpha-free solutions whose
        // Delta exponent is divisible by p.
        let late = solve_late_target_equations(p, s, t).unwrap();
        let mut from_late: Vec<Vec<i64>> = late
            .iter()
            .map(|sol| {
                let mut e = vec![0, sol.beta, p as i64 * sol.delta_over_p];
                e.extend(sol.mask.iter().map(|&b| b as i64));
                e
            })
            .collect();
        from_late.sort();
        let filtered: Vec<Vec<i64>> = from_solver
            .iter()
            .filter(|e| e[0] == 0 && e[2].rem_euclid(p as i64) == 0)
            .cloned()
            .collect();
        prop_assert_eq!(from_late, filtered);
    }
}

#[test]
fn fully_relaxed_bound_is_a_fixed_point() {
    let b = RangeBound::new(7, Threshold::MinusInfinity, Threshold::MinusInfinity).unwrap();
    let next = propagate(b);
    assert_eq!(next.onto_from, Threshold::MinusInfinity);
    assert_eq!(next.iso_from, Threshold::MinusInfinity);
    assert_eq!(next.page, 8);
}
