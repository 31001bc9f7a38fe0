//! Shipped ring presentations and differential rules at height n = p - 1.
//!
//! Four levels are provided. The C_p level is the transfer-quotient ring
//! F_{p^n}[alpha, beta, delta^{+-1}]/(alpha^2) with delta in bidegree
//! (0, 2p); it carries no differential rules here and is excluded from the
//! downstream pipelines. The F level is F_p[alpha, beta, Delta^{+-1}] /
//! (alpha^2) with alpha at (1, 2n), beta at (2, 2pn), Delta at (0, 2pn^2).
//! The N and G levels share one ring: the F ring tensored with an exterior
//! algebra on a_0, ..., a_{n-1} with a_i at (1, 2p^2 n i); they differ only
//! in their virtual cohomological dimension (n versus n^2), which feeds the
//! vanishing line and the Picard reports.
//!
//! The differentials, identical at the F, N, and G levels, are generated
//! multiplicatively by d_{2n+1}(Delta) = alpha beta^n and
//! d_{2n^2+1}(Delta^n alpha) = beta^{n^2+1}, with every a_i a rule-free
//! permanent cycle. The `inverted` flag switches beta between a polynomial
//! and an invertible generator; the inverted ring computes Farrell-Tate
//! cohomology, which agrees with ordinary cohomology above the vcd.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    height_of, AlgebraPresentation, CoefficientField, Domain, GeneratorSpec,
};
use crate::sseq::{DifferentialRule, PageWindow, SpectralSequence};
use crate::{Error, Result};

/// Numerology shared by every preset at one prime: the height n = p - 1 and
/// the derived page numbers and bidegrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightContext {
    pub p: u32,
    pub n: i64,
}

impl HeightContext {
    pub fn new(p: u32) -> Result<Self> {
        let n = height_of(p)?;
        Ok(HeightContext { p, n })
    }

    pub fn alpha_bidegree(&self) -> (i64, i64) {
        (1, 2 * self.n)
    }

    pub fn beta_bidegree(&self) -> (i64, i64) {
        (2, 2 * self.p as i64 * self.n)
    }

    pub fn delta_bidegree(&self) -> (i64, i64) {
        (0, 2 * self.p as i64 * self.n * self.n)
    }

    /// The C_p-level periodicity class sits at (0, 2p).
    pub fn small_delta_bidegree(&self) -> (i64, i64) {
        (0, 2 * self.p as i64)
    }

    pub fn exterior_bidegree(&self, i: i64) -> (i64, i64) {
        (1, 2 * (self.p as i64) * (self.p as i64) * self.n * i)
    }

    /// Page of the first differential, 2n + 1.
    pub fn first_rule_page(&self) -> u32 {
        (2 * self.n + 1) as u32
    }

    /// Page of the last differential, 2n^2 + 1.
    pub fn late_rule_page(&self) -> u32 {
        (2 * self.n * self.n + 1) as u32
    }

    /// Page on which every preset spectral sequence has settled.
    pub fn settled_page(&self) -> u32 {
        self.late_rule_page() + 1
    }
}

/// Which group's cohomology ring to build: the cyclic subgroup C_p, a
/// maximal finite subgroup F, its normalizer N, or the full group G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Cp,
    F,
    N,
    G,
}

impl Level {
    pub fn parse(tag: &str) -> Result<Level> {
        match tag.to_ascii_lowercase().as_str() {
            "cp" | "c_p" => Ok(Level::Cp),
            "f" => Ok(Level::F),
            "n" => Ok(Level::N),
            "g" => Ok(Level::G),
            other => Err(Error::Config(format!(
                "unknown level '{}' (expected cp, f, n, or g)",
                other
            ))),
        }
    }

    /// Virtual cohomological dimension at height n; undefined for C_p.
    pub fn vcd(&self, n: i64) -> Result<i64> {
        match self {
            Level::F => Ok(0),
            Level::N => Ok(n),
            Level::G => Ok(n * n),
            Level::Cp => Err(Error::Config(
                "the C_p level has no vcd-based pipeline".to_string(),
            )),
        }
    }
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Level::Cp => write!(f, "C_p"),
            Level::F => write!(f, "F"),
            Level::N => write!(f, "N"),
            Level::G => write!(f, "G"),
        }
    }
}

/// A shipped presentation plus its differential rules.
#[derive(Clone, Debug)]
pub struct Preset {
    pub context: HeightContext,
    pub level: Level,
    pub inverted: bool,
    pub presentation: AlgebraPresentation,
    pub rules: Vec<DifferentialRule>,
}

impl Preset {
    /// The spectral sequence of this preset on the given window.
    pub fn spectral_sequence(&self, window: PageWindow) -> Result<SpectralSequence> {
        SpectralSequence::new(self.presentation.clone(), self.rules.clone(), window)
    }

    /// The smallest window whose interior contains every bidegree the
    /// shipped claims refer to: s in [0, 4n^2 + 4n], t symmetric out to
    /// 4pn^2 + 4pn, margin 2n^2 + 1.
    pub fn default_window(&self) -> PageWindow {
        default_window(&self.context)
    }
}

pub fn default_window(ctx: &HeightContext) -> PageWindow {
    let (p, n) = (ctx.p as i64, ctx.n);
    let s_max = 4 * n * n + 4 * n;
    let t_max = 4 * p * n * n + 4 * p * n;
    let margin = 2 * n * n + 1;
    PageWindow::new(0, s_max, -t_max, t_max, margin).expect("default window is well formed")
}

/// Builds the ring and rules for one level at one odd prime. `inverted`
/// makes beta invertible (the Farrell-Tate variant).
pub fn build_preset(p: u32, level: Level, inverted: bool) -> Result<Preset> {
    let context = HeightContext::new(p)?;
    let n = context.n;
    let beta_domain = if inverted {
        Domain::Invertible
    } else {
        Domain::Polynomial
    };
    let (alpha_s, alpha_t) = context.alpha_bidegree();
    let (beta_s, beta_t) = context.beta_bidegree();

    if level == Level::Cp {
        let (ds, dt) = context.small_delta_bidegree();
        let presentation = AlgebraPresentation::new(
            p,
            vec![
                GeneratorSpec::new("alpha", alpha_s, alpha_t, Domain::Exterior),
                GeneratorSpec::new("beta", beta_s, beta_t, beta_domain),
                GeneratorSpec::new("delta", ds, dt, Domain::Invertible),
            ],
            CoefficientField::PrimePower(n as u32),
            Some("beta"),
        )?;
        return Ok(Preset {
            context,
            level,
            inverted,
            presentation,
            rules: Vec::new(),
        });
    }

    let (delta_s, delta_t) = context.delta_bidegree();
    let mut generators = vec![
        GeneratorSpec::new("alpha", alpha_s, alpha_t, Domain::Exterior),
        GeneratorSpec::new("beta", beta_s, beta_t, beta_domain),
        GeneratorSpec::new("Delta", delta_s, delta_t, Domain::Invertible),
    ];
    if matches!(level, Level::N | Level::G) {
        for i in 0..n {
            let (es, et) = context.exterior_bidegree(i);
            generators.push(GeneratorSpec::new(&format!("a{}", i), es, et, Domain::Exterior));
        }
    }
    let presentation = AlgebraPresentation::new(p, generators, CoefficientField::Prime, Some("beta"))?;

    let first = DifferentialRule::new(
        &presentation,
        context.first_rule_page(),
        presentation.monomial(&[("Delta", 1)])?,
        presentation.element_from_monomial(presentation.monomial(&[("alpha", 1), ("beta", n)])?)?,
    )?;
    let late = DifferentialRule::new(
        &presentation,
        context.late_rule_page(),
        presentation.monomial(&[("Delta", n), ("alpha", 1)])?,
        presentation.element_from_monomial(presentation.monomial(&[("beta", n * n + 1)])?)?,
    )?;

    Ok(Preset {
        context,
        level,
        inverted,
        presentation,
        rules: vec![first, late],
    })
}

/// True when every nonzero bidegree of the preset's ring inside the window
/// has t divisible by 2(p - 1).
pub fn sparsity_check(preset: &Preset, window: &PageWindow) -> bool {
    let q = 2 * preset.context.n;
    preset
        .presentation
        .monomials_in_window((window.s_min, window.s_max), (window.t_min, window.t_max))
        .keys()
        .all(|&(_, t)| t.rem_euclid(q) == 0)
}

/// True when every nonzero bidegree with s > vcd inside the window has
/// t = 2n e + 2pn l for some e in {0, 1} and integer l. Defined for the N
/// and G levels.
pub fn degree_form_check(preset: &Preset, window: &PageWindow) -> Result<bool> {
    if !matches!(preset.level, Level::N | Level::G) {
        return Err(Error::Hypothesis(
            "degree form check applies to the N and G levels".to_string(),
        ));
    }
    let n = preset.context.n;
    let p = preset.context.p as i64;
    let vcd = preset.level.vcd(n)?;
    let period = 2 * p * n;
    Ok(preset
        .presentation
        .monomials_in_window((window.s_min, window.s_max), (window.t_min, window.t_max))
        .keys()
        .filter(|&&(s, _)| s > vcd)
        .all(|&(_, t)| {
            let r = t.rem_euclid(period);
            r == 0 || r == 2 * n
        }))
}

/// Verifies that no class on the (t+1, t) diagonal with n^2 <= t <= 4pn is
/// hit by the late differential in the beta-inverted N/G spectral sequence.
/// Runs two independent routes and insists they agree: a direct matrix
/// computation
/// of the d_{2n^2+1} images, and the emptiness of the survivor degree
/// equations one column over.
pub fn check_no_late_targets(p: u32) -> Result<bool> {
    let context = HeightContext::new(p)?;
    let n = context.n;
    if n * n <= 2 * n + 1 {
        return Err(Error::Hypothesis(format!(
            "no-late-target check needs n^2 > 2n + 1, so p >= 5 (got p = {})",
            p
        )));
    }
    let pi = p as i64;
    let t_lo = n * n;
    let t_hi = 4 * pi * n;
    let margin = 2 * n * n + 1;
    // Window large enough that the whole diagonal box and its source box
    // are interior.
    let s_lo = (t_lo - 2 * n * n).min(0) - margin;
    let s_hi = t_hi + 1 + margin;
    let window = PageWindow::new(
        s_lo,
        s_hi,
        t_lo - 2 * n * n - margin,
        t_hi + margin,
        margin,
    )?;
    let preset = build_preset(p, Level::N, true)?;
    let mut ss = preset.spectral_sequence(window)?;
    ss.compute_through(context.settled_page())?;

    let late = context.late_rule_page();
    let mut all_clear = true;
    for t in t_lo..=t_hi {
        let (src_s, src_t) = (t - 2 * n * n, t - 2 * n * n);
        let matrix_clear = match ss.differential_matrix(late, src_s, src_t) {
            None => true,
            Some(m) => m.is_zero(),
        };
        let equation_clear = crate::algebra::solve_late_target_equations(p, t + 1, t)?.is_empty();
        if matrix_clear != equation_clear {
            return Err(Error::InternalCheck(format!(
                "late-target routes disagree at t = {}: matrix {} vs equations {}",
                t, matrix_clear, equation_clear
            )));
        }
        all_clear &= matrix_clear;
    }
    Ok(all_clear)
}

/// Counts binary necklaces (cyclic strings of length n up to rotation) with
/// an even number of zeros and an even number of ones, by canonical-rotation
/// enumeration. n must be even and at most 24.
pub fn necklace_count(n: u32) -> Result<u64> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::Hypothesis(format!(
            "necklace count is defined for even lengths, got {}",
            n
        )));
    }
    if n > 24 {
        return Err(Error::Hypothesis(format!(
            "necklace enumeration is capped at length 24, got {}",
            n
        )));
    }
    let mut count = 0u64;
    let total = 1u32 << n;
    let mask = total - 1;
    for word in 0..total {
        let ones = word.count_ones();
        if ones % 2 != 0 || (n - ones) % 2 != 0 {
            continue;
        }
        // Keep only the lexicographically smallest rotation.
        let mut canonical = true;
        for shift in 1..n {
            let rotated = ((word >> shift) | (word << (n - shift))) & mask;
            if rotated < word {
                canonical = false;
                break;
            }
        }
        if canonical {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_numerology() {
        let ctx = HeightContext::new(5).unwrap();
        assert_eq!(ctx.n, 4);
        assert_eq!(ctx.alpha_bidegree(), (1, 8));
        assert_eq!(ctx.beta_bidegree(), (2, 40));
        assert_eq!(ctx.delta_bidegree(), (0, 160));
        assert_eq!(ctx.exterior_bidegree(3), (1, 600));
        assert_eq!(ctx.first_rule_page(), 9);
        assert_eq!(ctx.late_rule_page(), 33);
        assert_eq!(ctx.settled_page(), 34);
        assert!(HeightContext::new(4).is_err());
    }

    #[test]
    fn f_preset_shape() {
        let preset = build_preset(5, Level::F, true).unwrap();
        let gens = preset.presentation.generators();
        assert_eq!(gens.len(), 3);
        assert_eq!((gens[0].s, gens[0].t), (1, 8));
        assert_eq!((gens[1].s, gens[1].t), (2, 40));
        assert_eq!((gens[2].s, gens[2].t), (0, 160));
        assert_eq!(gens[1].domain, Domain::Invertible);
        assert_eq!(preset.rules.len(), 2);
        assert_eq!(preset.rules[0].page, 9);
        assert_eq!(preset.rules[1].page, 33);
        let plain = build_preset(5, Level::F, false).unwrap();
        assert_eq!(plain.presentation.generators()[1].domain, Domain::Polynomial);
    }

    #[test]
    fn n_preset_exterior_part() {
        let preset = build_preset(3, Level::N, true).unwrap();
        let gens = preset.presentation.generators();
        assert_eq!(gens.len(), 5);
        assert_eq!(gens[3].name, "a0");
        assert_eq!((gens[3].s, gens[3].t), (1, 0));
        assert_eq!(gens[4].name, "a1");
        assert_eq!((gens[4].s, gens[4].t), (1, 36));
    }

    #[test]
    fn n_and_g_share_a_ring() {
        let n = build_preset(5, Level::N, true).unwrap();
        let g = build_preset(5, Level::G, true).unwrap();
        assert_eq!(n.presentation, g.presentation);
        assert_eq!(n.rules, g.rules);
        assert_ne!(Level::N.vcd(4).unwrap(), Level::G.vcd(4).unwrap());
    }

    #[test]
    fn cp_preset_shape() {
        let preset = build_preset(5, Level::Cp, false).unwrap();
        let gens = preset.presentation.generators();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[2].name, "delta");
        assert_eq!((gens[2].s, gens[2].t), (0, 10));
        assert_eq!(
            preset.presentation.coefficient_field(),
            CoefficientField::PrimePower(4)
        );
        assert!(preset.rules.is_empty());
    }

    #[test]
    fn default_window_dimensions() {
        let ctx = HeightContext::new(3).unwrap();
        let w = default_window(&ctx);
        assert_eq!((w.s_min, w.s_max), (0, 24));
        assert_eq!((w.t_min, w.t_max), (-72, 72));
        assert_eq!(w.margin, 9);
        assert!(!w.interior_is_empty());
    }

    #[test]
    fn sparsity_holds_on_main_presets_not_cp() {
        for p in [3u32, 5] {
            for level in [Level::F, Level::N, Level::G] {
                let preset = build_preset(p, level, true).unwrap();
                let w = preset.default_window();
                assert!(sparsity_check(&preset, &w), "p={} level={}", p, level);
            }
        }
        // The C_p ring has classes in t = 2p, not divisible by 2(p-1).
        let cp = build_preset(5, Level::Cp, false).unwrap();
        let w = cp.default_window();
        assert!(!sparsity_check(&cp, &w));
    }

    #[test]
    fn degree_form_holds_on_n_and_g() {
        for p in [3u32, 5] {
            for level in [Level::N, Level::G] {
                let preset = build_preset(p, level, true).unwrap();
                let w = preset.default_window();
                assert!(degree_form_check(&preset, &w).unwrap());
            }
        }
        let f = build_preset(5, Level::F, true).unwrap();
        assert!(degree_form_check(&f, &f.default_window()).is_err());
    }

    #[test]
    fn no_late_targets_small_primes() {
        assert!(check_no_late_targets(5).unwrap());
        assert!(matches!(check_no_late_targets(3), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn necklace_oracle_values() {
        assert_eq!(necklace_count(2).unwrap(), 2);
        assert_eq!(necklace_count(4).unwrap(), 4);
        assert_eq!(necklace_count(6).unwrap(), 8);
        assert_eq!(necklace_count(10).unwrap(), 56);
        assert!(necklace_count(5).is_err());
        assert!(necklace_count(26).is_err());
    }

    #[test]
    fn necklace_matches_ring_dimension() {
        // The (2n+1, 2n) dimension of the N ring counts the same objects.
        for p in [5u32, 7] {
            let ctx = HeightContext::new(p).unwrap();
            let preset = build_preset(p, Level::N, true).unwrap();
            let dim = preset.presentation.dimension(2 * ctx.n + 1, 2 * ctx.n);
            assert_eq!(dim as u64, necklace_count(ctx.n as u32).unwrap(), "p = {}", p);
        }
    }

    #[test]
    fn level_parsing() {
        assert_eq!(Level::parse("CP").unwrap(), Level::Cp);
        assert_eq!(Level::parse("g").unwrap(), Level::G);
        assert!(Level::parse("q").is_err());
        assert_eq!(Level::G.to_string(), "G");
    }
}
