//! The multiplicative spectral sequence engine.
//!
//! A spectral sequence here is an algebra presentation, a set of differential
//! rules, and a bidegree window. Page r at a bidegree is a subquotient Z/B of
//! the page-2 vector space there, stored as echelon bases for the cycle
//! subspace Z, the boundary subspace B, and a canonical list of coset
//! representatives. Turning a page intersects Z with the kernel of d_r and
//! adds the incoming image to B, all by exact elimination over F_p.
//!
//! Differentials are given by rules `d_r(source) = target`. A source with a
//! single exponent-one generator extends to all monomials by the graded
//! Leibniz rule with total-parity Koszul signs. A composite monomial source
//! (like the late differential on Delta^n alpha) acts by exact division: it
//! differentiates exactly the monomials it divides, and the cofactor is
//! required to be a cycle on that page, which holds for every ring shipped
//! here because the cofactor is built from rule-free generators.
//!
//! Windows only bound what is materialized. A differential of length r moves
//! (s, t) to (s + r, t + r - 1), so near the window boundary a class can
//! appear to survive because its killer fell outside the window. Such edge
//! artifacts may emit differential values that no longer lie in the cycle
//! space of their target; the engine discards those values when the source
//! sits within the cumulative reach of the processed differentials from the
//! window boundary, and treats them as a hard internal error otherwise.
//! Claims are only ever asserted on the window interior (the box shrunk by
//! `margin` in s and `margin - 1` in t), where the shipped rings' exponent
//! bookkeeping keeps edge artifacts away from live classes.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraPresentation, Domain, Element, GeneratorSpec, Monomial};
use crate::fp_linalg::{echelon_basis, express_in_rows, subquotient_reps, FpMatrix};
use crate::{Error, Result};

/// A bidegree box with a safety margin. The interior is the box shrunk by
/// `margin` in s and by `margin - 1` in t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageWindow {
    pub s_min: i64,
    pub s_max: i64,
    pub t_min: i64,
    pub t_max: i64,
    pub margin: i64,
}

impl PageWindow {
    pub fn new(s_min: i64, s_max: i64, t_min: i64, t_max: i64, margin: i64) -> Result<Self> {
        if s_min > s_max || t_min > t_max {
            return Err(Error::BadWindow(format!(
                "s in [{}, {}], t in [{}, {}]",
                s_min, s_max, t_min, t_max
            )));
        }
        if margin < 0 {
            return Err(Error::BadWindow(format!("negative margin {}", margin)));
        }
        Ok(PageWindow {
            s_min,
            s_max,
            t_min,
            t_max,
            margin,
        })
    }

    pub fn contains(&self, s: i64, t: i64) -> bool {
        s >= self.s_min && s <= self.s_max && t >= self.t_min && t <= self.t_max
    }

    pub fn interior_s(&self) -> (i64, i64) {
        (self.s_min + self.margin, self.s_max - self.margin)
    }

    pub fn interior_t(&self) -> (i64, i64) {
        let shrink = (self.margin - 1).max(0);
        (self.t_min + shrink, self.t_max - shrink)
    }

    pub fn interior_contains(&self, s: i64, t: i64) -> bool {
        let (s0, s1) = self.interior_s();
        let (t0, t1) = self.interior_t();
        s >= s0 && s <= s1 && t >= t0 && t <= t1
    }

    pub fn interior_is_empty(&self) -> bool {
        let (s0, s1) = self.interior_s();
        let (t0, t1) = self.interior_t();
        s0 > s1 || t0 > t1
    }
}

/// One multiplicative differential rule `d_page(source) = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialRule {
    pub page: u32,
    pub source: Monomial,
    pub target: Element,
}

impl DifferentialRule {
    pub fn new(
        pres: &AlgebraPresentation,
        page: u32,
        source: Monomial,
        target: Element,
    ) -> Result<Self> {
        if page < 2 {
            return Err(Error::Config(format!("differential on page {} (min 2)", page)));
        }
        pres.validate_monomial(&source)?;
        let (ss, st) = pres.bidegree(&source);
        if let Some((ts, tt)) = pres.element_bidegree(&target) {
            let off = (ts - ss - page as i64, tt - st - (page as i64 - 1));
            if off != (0, 0) {
                return Err(Error::BadRuleBidegree { page, off });
            }
        }
        Ok(DifferentialRule {
            page,
            source,
            target,
        })
    }
}

/// Page data at one bidegree: a subquotient of the page-2 space there.
/// All vectors are in page-2 monomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageSpace {
    /// Echelon basis of the accumulated cycle subspace.
    pub cycles: Vec<Vec<u32>>,
    /// Echelon basis of the accumulated boundary subspace.
    pub boundaries: Vec<Vec<u32>>,
    /// Canonical coset representatives of cycles modulo boundaries.
    pub reps: Vec<Vec<u32>>,
}

impl PageSpace {
    fn full(dim: usize) -> Self {
        let id: Vec<Vec<u32>> = (0..dim)
            .map(|i| {
                let mut v = vec![0u32; dim];
                v[i] = 1;
                v
            })
            .collect();
        PageSpace {
            cycles: id.clone(),
            boundaries: Vec::new(),
            reps: id,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

type SpacesMap = BTreeMap<(i64, i64), PageSpace>;
type DiffsMap = BTreeMap<(i64, i64), FpMatrix>;

/// A bigraded multiplicative spectral sequence over F_p, materialized on a
/// window. Page 2 is the free module on the presentation's monomials.
#[derive(Clone, Debug)]
pub struct SpectralSequence {
    presentation: AlgebraPresentation,
    rules: Vec<DifferentialRule>,
    window: PageWindow,
    /// Monomial basis of page 2 per bidegree; coordinate order everywhere.
    e2: BTreeMap<(i64, i64), Vec<Monomial>>,
    /// Pages computed so far. Pages between rule pages share their data.
    spaces: BTreeMap<u32, Arc<SpacesMap>>,
    /// Differential matrices in page coordinates, per rule page.
    diffs: BTreeMap<u32, Arc<DiffsMap>>,
    computed_through: u32,
}

impl SpectralSequence {
    pub fn new(
        presentation: AlgebraPresentation,
        rules: Vec<DifferentialRule>,
        window: PageWindow,
    ) -> Result<Self> {
        for rule in &rules {
            // Re-validate against this presentation; rules may have been
            // built elsewhere.
            DifferentialRule::new(&presentation, rule.page, rule.source.clone(), rule.target.clone())?;
            if window.margin < rule.page as i64 {
                return Err(Error::BadWindow(format!(
                    "margin {} is smaller than differential length {}",
                    window.margin, rule.page
                )));
            }
        }
        let e2 = presentation
            .monomials_in_window((window.s_min, window.s_max), (window.t_min, window.t_max));
        let page2: SpacesMap = e2
            .iter()
            .map(|(&key, monos)| (key, PageSpace::full(monos.len())))
            .collect();
        let mut spaces = BTreeMap::new();
        spaces.insert(2, Arc::new(page2));
        Ok(SpectralSequence {
            presentation,
            rules,
            window,
            e2,
            spaces,
            diffs: BTreeMap::new(),
            computed_through: 2,
        })
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn rules(&self) -> &[DifferentialRule] {
        &self.rules
    }

    pub fn window(&self) -> PageWindow {
        self.window
    }

    pub fn computed_through(&self) -> u32 {
        self.computed_through
    }

    /// Pages carrying a rule, ascending.
    pub fn rule_pages(&self) -> Vec<u32> {
        let mut pages: Vec<u32> = self.rules.iter().map(|r| r.page).collect();
        pages.sort_unstable();
        pages.dedup();
        pages
    }

    /// The page on which everything has settled: one past the last rule.
    pub fn settled_page(&self) -> u32 {
        self.rule_pages().last().map_or(2, |&r| r + 1)
    }

    pub fn rules_at(&self, r: u32) -> Vec<&DifferentialRule> {
        self.rules.iter().filter(|rule| rule.page == r).collect()
    }

    /// Monomial basis of page 2 at a bidegree (empty slice if none).
    pub fn e2_basis(&self, s: i64, t: i64) -> &[Monomial] {
        self.e2.get(&(s, t)).map_or(&[], |v| v.as_slice())
    }

    pub fn page_space(&self, r: u32, s: i64, t: i64) -> Option<&PageSpace> {
        self.spaces.get(&r).and_then(|m| m.get(&(s, t)))
    }

    pub fn page_dim(&self, r: u32, s: i64, t: i64) -> usize {
        self.page_space(r, s, t).map_or(0, |sp| sp.dim())
    }

    /// Nonzero dimensions of page r, keyed by bidegree.
    pub fn page_dims(&self, r: u32) -> Result<BTreeMap<(i64, i64), usize>> {
        let spaces = self
            .spaces
            .get(&r)
            .ok_or_else(|| Error::Config(format!("page {} not computed (through {})", r, self.computed_through)))?;
        Ok(spaces
            .iter()
            .filter(|(_, sp)| sp.dim() > 0)
            .map(|(&k, sp)| (k, sp.dim()))
            .collect())
    }

    /// Nonzero dimensions of page r restricted to the window interior.
    pub fn interior_dims(&self, r: u32) -> Result<BTreeMap<(i64, i64), usize>> {
        Ok(self
            .page_dims(r)?
            .into_iter()
            .filter(|&((s, t), _)| self.window.interior_contains(s, t))
            .collect())
    }

    /// The d_r matrix at a bidegree in page coordinates: columns index the
    /// source page basis, rows the target page basis. None when the page
    /// carries no rule or the bidegree is dead.
    pub fn differential_matrix(&self, r: u32, s: i64, t: i64) -> Option<&FpMatrix> {
        self.diffs.get(&r).and_then(|m| m.get(&(s, t)))
    }

    /// Converts a homogeneous element in the window to page-2 coordinates.
    pub fn element_to_vector(&self, s: i64, t: i64, x: &Element) -> Result<Vec<u32>> {
        let basis = self.e2_basis(s, t);
        let mut v = vec![0u32; basis.len()];
        for (mono, c) in x.terms() {
            let (ms, mt) = self.presentation.bidegree(mono);
            if (ms, mt) != (s, t) {
                return Err(Error::NonHomogeneous((s, t), (ms, mt)));
            }
            let idx = basis.iter().position(|b| b == mono).ok_or_else(|| {
                Error::InternalCheck(format!(
                    "monomial {} missing from page-2 basis at ({}, {})",
                    self.presentation.format_monomial(mono),
                    s,
                    t
                ))
            })?;
            v[idx] = c;
        }
        Ok(v)
    }

    pub fn vector_to_element(&self, s: i64, t: i64, v: &[u32]) -> Result<Element> {
        let basis = self.e2_basis(s, t);
        if v.len() != basis.len() {
            return Err(Error::BadVectorLength {
                got: v.len(),
                want: basis.len(),
            });
        }
        let terms: Vec<(Monomial, u32)> = basis
            .iter()
            .cloned()
            .zip(v.iter().copied())
            .filter(|(_, c)| *c != 0)
            .collect();
        self.presentation.element(&terms)
    }

    /// Representatives of the page-r basis at a bidegree, as ring elements.
    pub fn page_basis_elements(&self, r: u32, s: i64, t: i64) -> Result<Vec<Element>> {
        match self.page_space(r, s, t) {
            None => Ok(Vec::new()),
            Some(sp) => sp
                .reps
                .iter()
                .map(|v| self.vector_to_element(s, t, v))
                .collect(),
        }
    }

    /// Applies the page-r differential to a homogeneous element by the
    /// Leibniz rule (generator sources) and exact division (composite
    /// sources). The element should be written in monomials that survive to
    /// page r; on earlier monomials the formula is still the canonical
    /// derivation extension but has no page-r meaning.
    pub fn apply_differential(&self, r: u32, x: &Element) -> Result<Element> {
        let pres = &self.presentation;
        let mut acc = Element::zero();
        for (mono, coeff) in x.terms() {
            for rule in self.rules_at(r) {
                let term = self.rule_term(rule, mono)?;
                if term.is_zero() {
                    continue;
                }
                acc = pres.add(&acc, &pres.scale(&term, coeff as i64))?;
            }
        }
        Ok(acc)
    }

    /// The contribution of one rule to d(mono).
    fn rule_term(&self, rule: &DifferentialRule, mono: &Monomial) -> Result<Element> {
        let pres = &self.presentation;
        let gens = pres.generators();
        let support: Vec<(usize, i64)> = rule
            .source
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
            .collect();
        if support.len() == 1 && support[0].1 == 1 {
            // Leibniz: d(... g^e ...) = +- e * (... g^{e-1} ...) * target,
            // with a sign for moving the odd operator d past the prefix and
            // the odd-degree part of the target past the suffix.
            let (gi, _) = support[0];
            let e = mono.exponent(gi);
            let factor = pres.field().reduce(e);
            if factor == 0 {
                return Ok(Element::zero());
            }
            let prefix: i64 = (0..gi).map(|j| mono.exponent(j) * gens[j].parity() as i64).sum();
            let suffix: i64 = (gi + 1..gens.len())
                .map(|j| mono.exponent(j) * gens[j].parity() as i64)
                .sum();
            let target_parity = (gens[gi].parity() + 1) % 2;
            let sign_exp = prefix + target_parity as i64 * suffix;
            let mut exps = mono.exponents().to_vec();
            exps[gi] -= 1;
            let q = Monomial::from_exponents(exps);
            pres.validate_monomial(&q)?;
            let q = pres.element_from_monomial(q)?;
            let term = pres.multiply(&q, &rule.target)?;
            let c = if sign_exp.rem_euclid(2) == 1 {
                -(factor as i64)
            } else {
                factor as i64
            };
            Ok(pres.scale(&term, c))
        } else {
            // Composite source u: d is nonzero exactly on multiples of u,
            // d(u * y) = sign * target * y for the normal-ordering sign of
            // u * y. The cofactor must be a page cycle; rings built here
            // only reach this with cofactors in rule-free generators.
            for &(gi, ue) in &support {
                if gens[gi].domain != Domain::Invertible && mono.exponent(gi) < ue {
                    return Ok(Element::zero());
                }
            }
            let mut exps = mono.exponents().to_vec();
            for &(gi, ue) in &support {
                exps[gi] -= ue;
            }
            let y = Monomial::from_exponents(exps);
            pres.validate_monomial(&y)?;
            let Some((prod, sigma)) = pres.monomial_mul(&rule.source, &y)? else {
                return Ok(Element::zero());
            };
            if &prod != mono {
                return Err(Error::InternalCheck(format!(
                    "division by composite source failed on {}",
                    pres.format_monomial(mono)
                )));
            }
            let y = pres.element_from_monomial(y)?;
            let term = pres.multiply(&rule.target, &y)?;
            Ok(pres.scale(&term, sigma as i64))
        }
    }

    /// Computes pages up through `r_max` (page data for every 2 <= r <=
    /// r_max and differential matrices for every rule page below it).
    pub fn compute_through(&mut self, r_max: u32) -> Result<()> {
        while self.computed_through < r_max {
            self.turn_page(self.computed_through)?;
        }
        Ok(())
    }

    /// Turns page r into page r+1. Page r must already be computed.
    pub fn turn_page(&mut self, r: u32) -> Result<()> {
        if !self.spaces.contains_key(&r) {
            return Err(Error::Config(format!(
                "cannot turn page {}: computed through {}",
                r, self.computed_through
            )));
        }
        if self.computed_through >= r + 1 {
            return Ok(());
        }
        let current = Arc::clone(&self.spaces[&r]);
        if self.rules_at(r).is_empty() {
            // No differentials: the next page shares the same data.
            self.spaces.insert(r + 1, current);
            self.computed_through = r + 1;
            return Ok(());
        }
        let f = self.presentation.field();
        let shift = (r as i64, r as i64 - 1);
        // Cumulative reach of every differential processed through this
        // page. Sources farther than this from the window boundary have
        // exact page data; values that misbehave there are engine bugs.
        let processed: Vec<i64> = self
            .rule_pages()
            .into_iter()
            .filter(|&q| q <= r)
            .map(|q| q as i64)
            .collect();
        let reach_s: i64 = processed.iter().sum();
        let reach_t: i64 = processed.iter().map(|q| q - 1).sum();
        let w = self.window;
        let trusted = move |s: i64, t: i64| {
            s - reach_s >= w.s_min
                && s + reach_s <= w.s_max
                && t - reach_t >= w.t_min
                && t + reach_t <= w.t_max
        };

        // Phase 1: differential matrices and raw image vectors, one source
        // bidegree at a time. Results are keyed deterministically, so the
        // assembly below does not depend on the worker count.
        let keys: Vec<(i64, i64)> = current
            .iter()
            .filter(|(_, sp)| sp.dim() > 0)
            .map(|(&k, _)| k)
            .collect();
        let phase1: Vec<((i64, i64), FpMatrix, Vec<Vec<u32>>)> = keys
            .par_iter()
            .map(|&(s, t)| -> Result<((i64, i64), FpMatrix, Vec<Vec<u32>>)> {
                let sp = &current[&(s, t)];
                let target_key = (s + shift.0, t + shift.1);
                let target_dim_e2 = self.e2_basis(target_key.0, target_key.1).len();
                let target_space = current.get(&target_key);
                let target_page_dim = target_space.map_or(0, |tsp| tsp.dim());
                let mut matrix = FpMatrix::zero(f, target_page_dim, sp.dim());
                let mut images: Vec<Vec<u32>> = Vec::new();
                if !self.window.contains(target_key.0, target_key.1) {
                    // Outgoing differential leaves the window; treat as zero.
                    // Only non-interior bidegrees can hit this.
                    return Ok(((s, t), FpMatrix::zero(f, 0, sp.dim()), images));
                }
                for (col, rep) in sp.reps.iter().enumerate() {
                    let x = self.vector_to_element(s, t, rep)?;
                    let dx = self.apply_differential(r, &x)?;
                    if dx.is_zero() {
                        images.push(vec![0u32; target_dim_e2]);
                        continue;
                    }
                    let value = self.element_to_vector(target_key.0, target_key.1, &dx)?;
                    if value.iter().all(|&c| c == 0) {
                        images.push(value);
                        continue;
                    }
                    // The value must lie in the target's accumulated cycle
                    // subspace: express it over representatives followed by
                    // boundaries. A dead target still absorbs values into
                    // its boundary part. Failures from untrusted sources
                    // are window-edge artifacts and are dropped.
                    let expressed = match target_space {
                        None => None,
                        Some(tsp) => {
                            let mut rows = tsp.reps.clone();
                            rows.extend(tsp.boundaries.iter().cloned());
                            express_in_rows(f, target_dim_e2, &rows, &value)?
                        }
                    };
                    let Some(coeffs) = expressed else {
                        if trusted(s, t) {
                            return Err(Error::InternalCheck(format!(
                                "differential value escapes the page at ({}, {})",
                                target_key.0, target_key.1
                            )));
                        }
                        images.push(vec![0u32; target_dim_e2]);
                        continue;
                    };
                    for (row, &c) in coeffs.iter().take(target_page_dim).enumerate() {
                        matrix.set(row, col, c);
                    }
                    images.push(value);
                }
                Ok(((s, t), matrix, images))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut diffs: DiffsMap = BTreeMap::new();
        let mut incoming: BTreeMap<(i64, i64), Vec<Vec<u32>>> = BTreeMap::new();
        for (key, matrix, images) in phase1 {
            let target_key = (key.0 + shift.0, key.1 + shift.1);
            diffs.insert(key, matrix);
            let nonzero: Vec<Vec<u32>> = images.into_iter().filter(|w| w.iter().any(|&c| c != 0)).collect();
            if !nonzero.is_empty() {
                incoming.entry(target_key).or_default().extend(nonzero);
            }
        }

        // Phase 2: new page spaces per bidegree.
        let empty: Vec<Vec<u32>> = Vec::new();
        let next: SpacesMap = keys
            .par_iter()
            .map(|&key| -> Result<((i64, i64), PageSpace)> {
                let (s, t) = key;
                let sp = &current[&key];
                let e2_dim = self.e2_basis(s, t).len();
                let matrix = &diffs[&key];
                // Kernel of d_r in page coordinates, lifted to page-2 coords.
                let kernel_page = if matrix.rows() == 0 {
                    FpMatrix::identity(f, sp.dim()).row_vecs()
                } else {
                    matrix.kernel_basis()
                };
                let mut z_rows: Vec<Vec<u32>> = sp.boundaries.clone();
                for kv in &kernel_page {
                    let mut v = vec![0u32; e2_dim];
                    for (i, &c) in kv.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for (j, slot) in v.iter_mut().enumerate() {
                            *slot = f.add(*slot, f.mul(c, sp.reps[i][j]));
                        }
                    }
                    z_rows.push(v);
                }
                let cycles = echelon_basis(f, e2_dim, &z_rows)?;
                let mut b_rows = sp.boundaries.clone();
                b_rows.extend(incoming.get(&key).unwrap_or(&empty).iter().cloned());
                let boundaries = echelon_basis(f, e2_dim, &b_rows)?;
                let reps = subquotient_reps(f, e2_dim, &cycles, &boundaries)?;
                Ok((key, PageSpace {
                    cycles,
                    boundaries,
                    reps,
                }))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, sp)| sp.dim() > 0 || !sp.boundaries.is_empty() || !sp.cycles.is_empty())
            .collect();

        self.diffs.insert(r, Arc::new(diffs));
        self.spaces.insert(r + 1, Arc::new(next));
        self.computed_through = r + 1;
        Ok(())
    }

    /// Localizes at a generator: its domain becomes invertible and the whole
    /// spectral sequence is rebuilt on the same window. Errors if the
    /// generator divides any differential source, which would break its
    /// permanence. Returns the localized spectral sequence together with the
    /// induced map.
    pub fn invert_class(&self, name: &str) -> Result<(SpectralSequence, LocalizationMap)> {
        let idx = self.presentation.generator_index(name)?;
        for rule in &self.rules {
            if rule.source.exponent(idx) != 0 {
                return Err(Error::NotPermanentCycle(name.to_string()));
            }
        }
        let localized_pres = self.presentation.with_domain(name, Domain::Invertible)?;
        let localized = SpectralSequence::new(localized_pres, self.rules.clone(), self.window)?;
        let mut e2_inclusion = BTreeMap::new();
        for (&key, monos) in &self.e2 {
            let target = localized.e2_basis(key.0, key.1);
            let mut map = Vec::with_capacity(monos.len());
            for m in monos {
                let pos = target.iter().position(|b| b == m).ok_or_else(|| {
                    Error::InternalCheck(format!(
                        "localization lost the monomial {}",
                        self.presentation.format_monomial(m)
                    ))
                })?;
                map.push(pos);
            }
            e2_inclusion.insert(key, map);
        }
        Ok((localized, LocalizationMap { e2_inclusion }))
    }

    /// Tensors with an exterior algebra on rule-free generators. The result
    /// is a fresh spectral sequence on the same window whose pages split as
    /// direct sums of shifted copies of the originals, one per exterior
    /// exponent mask; the splitting is a consequence of the rules not
    /// involving the new generators.
    pub fn tensor_exterior(&self, new_generators: &[GeneratorSpec]) -> Result<SpectralSequence> {
        let pres = self.presentation.extended_with(new_generators)?;
        let pad = new_generators.len();
        let rules: Vec<DifferentialRule> = self
            .rules
            .iter()
            .map(|rule| -> Result<DifferentialRule> {
                let mut source = rule.source.exponents().to_vec();
                source.extend(std::iter::repeat(0).take(pad));
                let terms: Vec<(Monomial, u32)> = rule
                    .target
                    .terms()
                    .map(|(m, c)| {
                        let mut exps = m.exponents().to_vec();
                        exps.extend(std::iter::repeat(0).take(pad));
                        (Monomial::from_exponents(exps), c)
                    })
                    .collect();
                DifferentialRule::new(&pres, rule.page, Monomial::from_exponents(source), pres.element(&terms)?)
            })
            .collect::<Result<_>>()?;
        SpectralSequence::new(pres, rules, self.window)
    }
}

/// The page-2 inclusion induced by localizing a generator, per bidegree:
/// entry j of a bidegree's vector is the index of the source's j-th basis
/// monomial inside the localized basis.
#[derive(Clone, Debug)]
pub struct LocalizationMap {
    e2_inclusion: BTreeMap<(i64, i64), Vec<usize>>,
}

impl LocalizationMap {
    pub fn indices(&self, s: i64, t: i64) -> Option<&[usize]> {
        self.e2_inclusion.get(&(s, t)).map(|v| v.as_slice())
    }

    /// Pushes a source page-2 vector into localized page-2 coordinates.
    pub fn push_vector(&self, s: i64, t: i64, v: &[u32], target_dim: usize) -> Result<Vec<u32>> {
        let idx = self.indices(s, t).unwrap_or(&[]);
        if v.len() != idx.len() {
            return Err(Error::BadVectorLength {
                got: v.len(),
                want: idx.len(),
            });
        }
        let mut out = vec![0u32; target_dim];
        for (&c, &j) in v.iter().zip(idx) {
            out[j] = c;
        }
        Ok(out)
    }

    /// The induced map on page r at a bidegree, in page coordinates
    /// (rows: localized page basis, columns: source page basis).
    pub fn page_matrix(
        &self,
        source: &SpectralSequence,
        localized: &SpectralSequence,
        r: u32,
        s: i64,
        t: i64,
    ) -> Result<FpMatrix> {
        let f = source.presentation().field();
        let src_dim = source.page_dim(r, s, t);
        let dst_dim = localized.page_dim(r, s, t);
        let mut out = FpMatrix::zero(f, dst_dim, src_dim);
        let Some(src_space) = source.page_space(r, s, t) else {
            return Ok(out);
        };
        let dst_e2 = localized.e2_basis(s, t).len();
        for (col, rep) in src_space.reps.iter().enumerate() {
            let w = self.push_vector(s, t, rep, dst_e2)?;
            if dst_dim == 0 {
                continue;
            }
            let dst_space = localized.page_space(r, s, t).expect("nonzero dim has a space");
            let mut rows = dst_space.reps.clone();
            rows.extend(dst_space.boundaries.iter().cloned());
            let coeffs = express_in_rows(f, dst_e2, &rows, &w)?.ok_or_else(|| {
                Error::InternalCheck(format!(
                    "localized image of a cycle is not a cycle at ({}, {})",
                    s, t
                ))
            })?;
            for (row, &c) in coeffs.iter().take(dst_dim).enumerate() {
                out.set(row, col, c);
            }
        }
        Ok(out)
    }
}
