//! Empirical validation of the threshold calculus on random filtered
//! cochain complexes.
//!
//! A filtered complex here is a finite cochain complex of F_p vector spaces
//! whose basis vectors carry filtration levels, with a differential that
//! never lowers filtration. Its pages are computed from first principles:
//! Z_r(s, u) is the set of filtration->=s vectors whose differential lands
//! in filtration s + r, and E_r(s, u) divides Z_r(s, u) by
//! Z_{r-1}(s+1, u) + D Z_{r-1}(s-r+1, u-1). No truncation is involved, so
//! page data is exact and the propagated onto/iso thresholds can be checked
//! directly against ranks of the induced page maps.
//!
//! Instances are built from elementary pieces (a dot, or an arrow joining
//! consecutive degrees) and then hidden behind random filtration-preserving
//! changes of basis. A map with prescribed thresholds (M0, M1) sends
//! shared-part to shared-part, kills source junk placed below filtration
//! M1, and misses target junk placed below filtration M0.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::fp_linalg::{echelon_basis, express_in_rows, subquotient_reps, Fp, FpMatrix};
use crate::ranges::{propagate_through, RangeBound, Threshold};
use crate::{Error, Result};

/// Size knobs for one random instance.
#[derive(Clone, Copy, Debug)]
pub struct SimulationSizes {
    pub prime: u32,
    /// Complexes live in total degrees 0..total_degrees.
    pub total_degrees: usize,
    /// Filtration levels are drawn from 0..filtration_levels.
    pub filtration_levels: i64,
    /// Elementary pieces in the shared part.
    pub shared_pieces: usize,
    /// Extra source pieces, placed below the iso threshold.
    pub source_junk: usize,
    /// Extra target pieces, placed below the onto threshold.
    pub target_junk: usize,
    /// Pages are verified for 2..=max_page.
    pub max_page: u32,
}

impl Default for SimulationSizes {
    fn default() -> Self {
        SimulationSizes {
            prime: 5,
            total_degrees: 4,
            filtration_levels: 6,
            shared_pieces: 6,
            source_junk: 3,
            target_junk: 3,
            max_page: 9,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Onto,
    Iso,
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckKind::Onto => write!(f, "onto"),
            CheckKind::Iso => write!(f, "iso"),
        }
    }
}

/// A concrete spot where a propagated bound failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonViolation {
    pub page: u32,
    pub s: i64,
    pub u: i64,
    pub kind: CheckKind,
    pub map_rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimulationOutcome {
    Clear { pages_checked: u32, sites_checked: u64 },
    Violated(ComparisonViolation),
}

impl SimulationOutcome {
    pub fn is_clear(&self) -> bool {
        matches!(self, SimulationOutcome::Clear { .. })
    }
}

/// An elementary filtered complex: either a single basis vector, or two in
/// consecutive degrees joined by the differential (filtration rising from
/// tail to head).
#[derive(Clone, Copy, Debug)]
enum Piece {
    Dot { u: usize, level: i64 },
    Arrow { u: usize, tail: i64, head: i64 },
}

/// A finite cochain complex of based F_p spaces with basis filtration
/// levels and a filtration-non-decreasing differential.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    field: Fp,
    /// Filtration level of each basis vector, per total degree.
    filt: Vec<Vec<i64>>,
    /// d[u] maps degree u to degree u + 1; the last entry has zero rows.
    d: Vec<FpMatrix>,
}

/// Page data at one (filtration, total degree) spot; all vectors in the
/// coordinates of that total degree.
struct PageData {
    denom: Vec<Vec<u32>>,
    reps: Vec<Vec<u32>>,
}

impl FilteredComplex {
    /// A complex with the given number of total degrees and no basis
    /// vectors at all.
    pub fn empty(field: Fp, total_degrees: usize) -> FilteredComplex {
        FilteredComplex {
            field,
            filt: vec![Vec::new(); total_degrees],
            d: (0..total_degrees)
                .map(|_| FpMatrix::zero(field, 0, 0))
                .collect(),
        }
    }

    /// A complex with one basis vector, in total degree `u` at the given
    /// filtration level.
    pub fn single_dot(
        field: Fp,
        total_degrees: usize,
        u: usize,
        level: i64,
    ) -> Result<FilteredComplex> {
        if u >= total_degrees {
            return Err(Error::Config(format!(
                "degree {} outside 0..{}",
                u, total_degrees
            )));
        }
        FilteredComplex::from_pieces(field, total_degrees, &[Piece::Dot { u, level }])
    }

    fn from_pieces(field: Fp, total_degrees: usize, pieces: &[Piece]) -> Result<Self> {
        let mut filt: Vec<Vec<i64>> = vec![Vec::new(); total_degrees];
        let mut arrows: Vec<(usize, usize, usize)> = Vec::new();
        for piece in pieces {
            match *piece {
                Piece::Dot { u, level } => {
                    filt[u].push(level);
                }
                Piece::Arrow { u, tail, head } => {
                    if u + 1 >= total_degrees || head < tail {
                        return Err(Error::Config("malformed arrow piece".to_string()));
                    }
                    filt[u].push(tail);
                    let col = filt[u].len() - 1;
                    filt[u + 1].push(head);
                    let row = filt[u + 1].len() - 1;
                    arrows.push((u, row, col));
                }
            }
        }
        let mut d: Vec<FpMatrix> = (0..total_degrees)
            .map(|u| {
                let rows = if u + 1 < total_degrees { filt[u + 1].len() } else { 0 };
                FpMatrix::zero(field, rows, filt[u].len())
            })
            .collect();
        for (u, row, col) in arrows {
            d[u].set(row, col, 1);
        }
        let complex = FilteredComplex { field, filt, d };
        complex.validate()?;
        Ok(complex)
    }

    pub fn total_degrees(&self) -> usize {
        self.filt.len()
    }

    pub fn dim(&self, u: i64) -> usize {
        if u < 0 || u as usize >= self.filt.len() {
            0
        } else {
            self.filt[u as usize].len()
        }
    }

    fn validate(&self) -> Result<()> {
        for u in 0..self.filt.len() {
            let m = &self.d[u];
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    if m.get(row, col) != 0 && self.filt[u + 1][row] < self.filt[u][col] {
                        return Err(Error::InternalCheck(format!(
                            "differential lowers filtration at degree {}",
                            u
                        )));
                    }
                }
            }
            if u + 1 < self.filt.len() && self.d[u].rows() > 0 {
                let square = self.d[u + 1].matmul(&self.d[u])?;
                if !square.is_zero() {
                    return Err(Error::InternalCheck(format!(
                        "differential does not square to zero at degree {}",
                        u
                    )));
                }
            }
        }
        Ok(())
    }

    /// Replaces the basis by a random filtration-preserving automorphism in
    /// every degree, returning the conjugated complex along with the change
    /// of basis and its inverse per degree.
    fn shuffled(&self, rng: &mut ChaCha8Rng) -> Result<(FilteredComplex, Vec<FpMatrix>, Vec<FpMatrix>)> {
        let f = self.field;
        let mut g: Vec<FpMatrix> = Vec::new();
        let mut g_inv: Vec<FpMatrix> = Vec::new();
        for levels in &self.filt {
            let m = random_filtered_automorphism(f, levels, rng);
            let inv = m
                .inverse()?
                .ok_or_else(|| Error::InternalCheck("automorphism is singular".to_string()))?;
            g.push(m);
            g_inv.push(inv);
        }
        let mut d = Vec::new();
        for u in 0..self.filt.len() {
            if u + 1 < self.filt.len() {
                d.push(g[u + 1].matmul(&self.d[u])?.matmul(&g_inv[u])?);
            } else {
                d.push(self.d[u].clone());
            }
        }
        let out = FilteredComplex {
            field: f,
            filt: self.filt.clone(),
            d,
        };
        out.validate()?;
        Ok((out, g, g_inv))
    }

    /// Echelon basis of Z_r(s, u): filtration >= s vectors whose
    /// differential lands in filtration >= s + r.
    fn cycle_space(&self, r: i64, s: i64, u: i64) -> Result<Vec<Vec<u32>>> {
        let f = self.field;
        let dim = self.dim(u);
        if dim == 0 {
            return Ok(Vec::new());
        }
        let uu = u as usize;
        let cols: Vec<usize> = (0..dim).filter(|&i| self.filt[uu][i] >= s).collect();
        if cols.is_empty() {
            return Ok(Vec::new());
        }
        let kill: Vec<usize> = if uu + 1 < self.filt.len() {
            (0..self.filt[uu + 1].len())
                .filter(|&j| self.filt[uu + 1][j] < s + r)
                .collect()
        } else {
            Vec::new()
        };
        let mut sub = FpMatrix::zero(f, kill.len(), cols.len());
        for (rr, &j) in kill.iter().enumerate() {
            for (cc, &i) in cols.iter().enumerate() {
                sub.set(rr, cc, self.d[uu].get(j, i));
            }
        }
        let kernel = if kill.is_empty() {
            FpMatrix::identity(f, cols.len()).row_vecs()
        } else {
            sub.kernel_basis()
        };
        let embedded: Vec<Vec<u32>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![0u32; dim];
                for (cc, &i) in cols.iter().enumerate() {
                    v[i] = k[cc];
                }
                v
            })
            .collect();
        echelon_basis(f, dim, &embedded)
    }

    /// Page data E_r(s, u) = Z_r(s,u) / (Z_{r-1}(s+1,u) + D Z_{r-1}(s-r+1,u-1)).
    fn page(&self, r: i64, s: i64, u: i64) -> Result<PageData> {
        let f = self.field;
        let dim = self.dim(u);
        let cycles = self.cycle_space(r, s, u)?;
        let mut denom_rows = self.cycle_space(r - 1, s + 1, u)?;
        if u >= 1 {
            let below = self.cycle_space(r - 1, s - r + 1, u - 1)?;
            let m = &self.d[(u - 1) as usize];
            for z in below {
                denom_rows.push(m.mul_vec(&z)?);
            }
        }
        let denom = echelon_basis(f, dim, &denom_rows)?;
        let reps = subquotient_reps(f, dim, &cycles, &denom)?;
        Ok(PageData { denom, reps })
    }

    pub fn page_dim(&self, r: i64, s: i64, u: i64) -> Result<usize> {
        Ok(self.page(r, s, u)?.reps.len())
    }
}

/// A filtration-preserving chain map between filtered complexes, stored as
/// one matrix per total degree.
#[derive(Clone, Debug)]
pub struct FilteredMap {
    blocks: Vec<FpMatrix>,
}

impl FilteredMap {
    /// The zero map between two complexes with the same number of total
    /// degrees.
    pub fn zero(source: &FilteredComplex, target: &FilteredComplex) -> FilteredMap {
        let blocks = (0..source.filt.len().max(target.filt.len()))
            .map(|u| {
                FpMatrix::zero(
                    source.field,
                    target.dim(u as i64),
                    source.dim(u as i64),
                )
            })
            .collect();
        FilteredMap { blocks }
    }

    fn validate(&self, source: &FilteredComplex, target: &FilteredComplex) -> Result<()> {
        for u in 0..source.filt.len() {
            let m = &self.blocks[u];
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    if m.get(row, col) != 0 && target.filt[u][row] < source.filt[u][col] {
                        return Err(Error::InternalCheck(
                            "map lowers filtration".to_string(),
                        ));
                    }
                }
            }
            if u + 1 < source.filt.len() {
                let left = target.d[u].matmul(&self.blocks[u])?;
                let right = self.blocks[u + 1].matmul(&source.d[u])?;
                if left != right {
                    return Err(Error::InternalCheck(format!(
                        "map does not commute with the differential at degree {}",
                        u
                    )));
                }
            }
        }
        Ok(())
    }

    /// The induced matrix on page r at (s, u), rows indexing the target
    /// page basis.
    fn page_matrix(
        &self,
        source: &FilteredComplex,
        target: &FilteredComplex,
        src_page: &PageData,
        dst_page: &PageData,
        r: i64,
        s: i64,
        u: i64,
    ) -> Result<FpMatrix> {
        let _ = (r, s);
        let f = source.field;
        let dst_dim_amb = target.dim(u);
        let mut out = FpMatrix::zero(f, dst_page.reps.len(), src_page.reps.len());
        if dst_dim_amb == 0 {
            return Ok(out);
        }
        let mut rows = dst_page.reps.clone();
        rows.extend(dst_page.denom.iter().cloned());
        for (col, rep) in src_page.reps.iter().enumerate() {
            let w = self.blocks[u as usize].mul_vec(rep)?;
            let coeffs = express_in_rows(f, dst_dim_amb, &rows, &w)?.ok_or_else(|| {
                Error::InternalCheck(
                    "image of a cycle is not a cycle in the target complex".to_string(),
                )
            })?;
            for (row, &c) in coeffs.iter().take(dst_page.reps.len()).enumerate() {
                out.set(row, col, c);
            }
        }
        Ok(out)
    }
}

fn random_filtered_automorphism(f: Fp, levels: &[i64], rng: &mut ChaCha8Rng) -> FpMatrix {
    let n = levels.len();
    let mut g = FpMatrix::identity(f, n);
    if n == 0 {
        return g;
    }
    for _ in 0..(2 * n + 4) {
        if rng.random_bool(0.3) {
            // Scale one basis vector.
            let i = rng.random_range(0..n);
            let c = rng.random_range(1..f.p);
            for row in 0..n {
                g.set(row, i, f.mul(g.get(row, i), c));
            }
        } else {
            // Add a multiple of a deeper-filtration vector.
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            if i == j || levels[j] < levels[i] {
                continue;
            }
            let c = rng.random_range(1..f.p);
            for row in 0..n {
                let v = f.add(g.get(row, i), f.mul(c, g.get(row, j)));
                g.set(row, i, v);
            }
        }
    }
    g
}

fn random_pieces(
    rng: &mut ChaCha8Rng,
    count: usize,
    total_degrees: usize,
    level_cap: i64,
) -> Vec<Piece> {
    let mut pieces = Vec::new();
    if level_cap <= 0 {
        return pieces;
    }
    for _ in 0..count {
        let u = rng.random_range(0..total_degrees);
        if u + 1 == total_degrees || rng.random_bool(0.4) {
            pieces.push(Piece::Dot {
                u,
                level: rng.random_range(0..level_cap),
            });
        } else {
            let tail = rng.random_range(0..level_cap);
            let head = rng.random_range(tail..level_cap);
            pieces.push(Piece::Arrow { u, tail, head });
        }
    }
    pieces
}

/// Checks the propagated onto/iso thresholds for a concrete map of
/// filtered complexes, page by page and spot by spot. `start` is the bound
/// assumed on page 2.
pub fn verify_bounds(
    source: &FilteredComplex,
    target: &FilteredComplex,
    map: &FilteredMap,
    start: RangeBound,
    max_page: u32,
    filtration_levels: i64,
) -> Result<SimulationOutcome> {
    map.validate(source, target)?;
    let trace = propagate_through(start, max_page);
    let mut sites = 0u64;
    for bound in &trace {
        let r = bound.page as i64;
        for u in 0..source.total_degrees().max(target.total_degrees()) as i64 {
            for s in 0..filtration_levels {
                let src_page = source.page(r, s, u)?;
                let dst_page = target.page(r, s, u)?;
                let matrix = map.page_matrix(source, target, &src_page, &dst_page, r, s, u)?;
                let rank = matrix.rank();
                sites += 1;
                if bound.onto_from.admits(s) && rank != dst_page.reps.len() {
                    return Ok(SimulationOutcome::Violated(ComparisonViolation {
                        page: bound.page,
                        s,
                        u,
                        kind: CheckKind::Onto,
                        map_rank: rank,
                        source_dim: src_page.reps.len(),
                        target_dim: dst_page.reps.len(),
                    }));
                }
                if bound.iso_from.admits(s)
                    && (rank != dst_page.reps.len() || src_page.reps.len() != dst_page.reps.len())
                {
                    return Ok(SimulationOutcome::Violated(ComparisonViolation {
                        page: bound.page,
                        s,
                        u,
                        kind: CheckKind::Iso,
                        map_rank: rank,
                        source_dim: src_page.reps.len(),
                        target_dim: dst_page.reps.len(),
                    }));
                }
            }
        }
    }
    Ok(SimulationOutcome::Clear {
        pages_checked: max_page - 1,
        sites_checked: sites,
    })
}

/// Generates one random instance with prescribed page-2 thresholds and
/// verifies every propagated bound on it.
pub fn simulate_comparison(seed: u64, sizes: &SimulationSizes) -> Result<SimulationOutcome> {
    let f = Fp::new(sizes.prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let levels = sizes.filtration_levels;
    if sizes.total_degrees == 0 || levels <= 0 {
        return Err(Error::Config("simulation needs a nonempty shape".to_string()));
    }
    let no_junk = sizes.source_junk == 0 && sizes.target_junk == 0;
    let (m0, m1) = if no_junk {
        (Threshold::MinusInfinity, Threshold::MinusInfinity)
    } else {
        let m0 = rng.random_range(0..=levels);
        (Threshold::Finite(m0), Threshold::Finite(rng.random_range(m0..=levels)))
    };
    let shared = random_pieces(&mut rng, sizes.shared_pieces, sizes.total_degrees, levels);
    let src_cap = match m1 {
        Threshold::Finite(v) => v,
        Threshold::MinusInfinity => 0,
    };
    let tgt_cap = match m0 {
        Threshold::Finite(v) => v,
        Threshold::MinusInfinity => 0,
    };
    let src_junk = random_pieces(&mut rng, sizes.source_junk, sizes.total_degrees, src_cap);
    let tgt_junk = random_pieces(&mut rng, sizes.target_junk, sizes.total_degrees, tgt_cap);

    // The source is shared + junk; the target is shared + its own junk. The
    // plain map keeps the shared block, kills source junk, misses target
    // junk; random basis changes then hide the splitting on both sides.
    let shared_complex = FilteredComplex::from_pieces(f, sizes.total_degrees, &shared)?;
    let mut src_pieces = shared.clone();
    src_pieces.extend_from_slice(&src_junk);
    let mut tgt_pieces = shared;
    tgt_pieces.extend_from_slice(&tgt_junk);
    let source_plain = FilteredComplex::from_pieces(f, sizes.total_degrees, &src_pieces)?;
    let target_plain = FilteredComplex::from_pieces(f, sizes.total_degrees, &tgt_pieces)?;

    let (source, _, g_inv) = source_plain.shuffled(&mut rng)?;
    let (target, h, _) = target_plain.shuffled(&mut rng)?;

    let mut blocks = Vec::new();
    for u in 0..sizes.total_degrees {
        let shared_dim = shared_complex.dim(u as i64);
        let mut pi = FpMatrix::zero(f, target_plain.dim(u as i64), source_plain.dim(u as i64));
        for i in 0..shared_dim {
            pi.set(i, i, 1);
        }
        blocks.push(h[u].matmul(&pi)?.matmul(&g_inv[u])?);
    }
    let map = FilteredMap { blocks };

    let start = RangeBound::new(2, m0, m1)?;
    verify_bounds(&source, &target, &map, start, sizes.max_page, levels)
}

/// Report for a seeded batch of simulations.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub runs: u64,
    pub clear: u64,
    pub first_violation: Option<(u64, ComparisonViolation)>,
}

/// Runs `count` seeded simulations in parallel (deterministic per seed) and
/// aggregates the outcomes.
pub fn simulate_suite(base_seed: u64, count: u64, sizes: &SimulationSizes) -> Result<SuiteReport> {
    let outcomes: Vec<(u64, SimulationOutcome)> = (0..count)
        .into_par_iter()
        .map(|k| {
            let seed = base_seed.wrapping_add(k);
            simulate_comparison(seed, sizes).map(|o| (seed, o))
        })
        .collect::<Result<_>>()?;
    let clear = outcomes.iter().filter(|(_, o)| o.is_clear()).count() as u64;
    let first_violation = outcomes.into_iter().find_map(|(seed, o)| match o {
        SimulationOutcome::Violated(v) => Some((seed, v)),
        SimulationOutcome::Clear { .. } => None,
    });
    Ok(SuiteReport {
        runs: count,
        clear,
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex_of(f: Fp, degrees: usize, pieces: &[Piece]) -> FilteredComplex {
        FilteredComplex::from_pieces(f, degrees, pieces).unwrap()
    }

    #[test]
    fn dot_lives_forever() {
        let f = Fp::new(3).unwrap();
        let c = complex_of(f, 2, &[Piece::Dot { u: 0, level: 2 }]);
        for r in 1..8 {
            assert_eq!(c.page_dim(r, 2, 0).unwrap(), 1);
            assert_eq!(c.page_dim(r, 3, 0).unwrap(), 0);
            assert_eq!(c.page_dim(r, 0, 0).unwrap(), 0, "page {} at s=0", r);
        }
    }

    #[test]
    fn arrow_kills_both_ends_on_schedule() {
        let f = Fp::new(5).unwrap();
        // Tail at filtration 1, head at filtration 4: a d_3 arrow. Both
        // classes live on pages 1..=3 and die on page 4.
        let c = complex_of(f, 2, &[Piece::Arrow { u: 0, tail: 1, head: 4 }]);
        for r in 1..=3 {
            assert_eq!(c.page_dim(r, 1, 0).unwrap(), 1, "tail page {}", r);
            assert_eq!(c.page_dim(r, 4, 1).unwrap(), 1, "head page {}", r);
        }
        for r in 4..8 {
            assert_eq!(c.page_dim(r, 1, 0).unwrap(), 0, "tail page {}", r);
            assert_eq!(c.page_dim(r, 4, 1).unwrap(), 0, "head page {}", r);
        }
    }

    #[test]
    fn shuffling_preserves_page_dims() {
        let f = Fp::new(5).unwrap();
        let pieces = [
            Piece::Dot { u: 0, level: 0 },
            Piece::Arrow { u: 0, tail: 0, head: 3 },
            Piece::Arrow { u: 1, tail: 2, head: 2 },
            Piece::Dot { u: 2, level: 4 },
        ];
        let c = complex_of(f, 3, &pieces);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (shuffled, _, _) = c.shuffled(&mut rng).unwrap();
        for r in 1..7 {
            for u in 0..3 {
                for s in 0..6 {
                    assert_eq!(
                        c.page_dim(r, s, u).unwrap(),
                        shuffled.page_dim(r, s, u).unwrap(),
                        "page {} at ({}, {})",
                        r,
                        s,
                        u
                    );
                }
            }
        }
    }

    #[test]
    fn identity_map_is_iso_everywhere() {
        let sizes = SimulationSizes {
            source_junk: 0,
            target_junk: 0,
            ..SimulationSizes::default()
        };
        for seed in 0..8 {
            let outcome = simulate_comparison(seed, &sizes).unwrap();
            assert!(outcome.is_clear(), "seed {}: {:?}", seed, outcome);
        }
    }

    #[test]
    fn seeded_batch_is_clear() {
        let report = simulate_suite(0, 64, &SimulationSizes::default()).unwrap();
        assert_eq!(report.clear, report.runs);
        assert!(report.first_violation.is_none());
    }

    #[test]
    fn lying_bounds_are_caught() {
        // Source empty, target one dot at filtration 4, zero map: claiming
        // the map is onto from s >= 0 must produce an onto violation at the
        // dot's spot.
        let f = Fp::new(3).unwrap();
        let source = FilteredComplex::empty(f, 2);
        let target = FilteredComplex::single_dot(f, 2, 0, 4).unwrap();
        let map = FilteredMap::zero(&source, &target);
        let start = RangeBound::new(2, Threshold::Finite(0), Threshold::Finite(0)).unwrap();
        let outcome = verify_bounds(&source, &target, &map, start, 4, 6).unwrap();
        match outcome {
            SimulationOutcome::Violated(v) => {
                assert_eq!(v.kind, CheckKind::Onto);
                assert_eq!((v.s, v.u), (4, 0));
                assert_eq!(v.target_dim, 1);
            }
            SimulationOutcome::Clear { .. } => panic!("violation not detected"),
        }
    }

    #[test]
    fn determinism_per_seed() {
        let sizes = SimulationSizes::default();
        let a = simulate_comparison(42, &sizes).unwrap();
        let b = simulate_comparison(42, &sizes).unwrap();
        assert_eq!(a, b);
    }
}
