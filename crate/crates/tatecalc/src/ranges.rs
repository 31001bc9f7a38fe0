//! Surjectivity and isomorphism range propagation for maps of spectral
//! sequences, and the horizontal vanishing lines it produces.
//!
//! The calculus: if a map of spectral sequences is onto for filtration
//! s >= M0 and an isomorphism for s >= M1 >= M0 on page r, then on page
//! r + 1 it is onto for s >= max(M0, M1 - r) and an isomorphism for
//! s >= max(M1, M0 + r). Iterating from (M0, M1) = (d, d + 1) on page 2,
//! where d is the virtual cohomological dimension, gives an isomorphism for
//! s >= d + r - 1 on page r. Comparing against the beta-inverted spectral
//! sequence, which is identically zero on its settled page, yields the
//! vanishing line s = 2n^2 + vcd + 1 on page 2n^2 + 2.
//!
//! The calculus is implemented symbolically here and validated empirically
//! by [`simulate::simulate_comparison`], which brute-forces the pages of
//! random filtered cochain complexes.

pub mod simulate;

use serde::{Deserialize, Serialize};

use crate::presets::{HeightContext, Level};
use crate::Result;

/// A filtration threshold; the sentinel means "holds everywhere".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Threshold {
    MinusInfinity,
    Finite(i64),
}

impl Threshold {
    pub fn max(self, other: Threshold) -> Threshold {
        match (self, other) {
            (Threshold::MinusInfinity, b) => b,
            (a, Threshold::MinusInfinity) => a,
            (Threshold::Finite(a), Threshold::Finite(b)) => Threshold::Finite(a.max(b)),
        }
    }

    pub fn plus(self, d: i64) -> Threshold {
        match self {
            Threshold::MinusInfinity => Threshold::MinusInfinity,
            Threshold::Finite(a) => Threshold::Finite(a + d),
        }
    }

    /// True when the condition `s >= self` holds.
    pub fn admits(self, s: i64) -> bool {
        match self {
            Threshold::MinusInfinity => true,
            Threshold::Finite(a) => s >= a,
        }
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Threshold::MinusInfinity => write!(f, "-inf"),
            Threshold::Finite(a) => write!(f, "{}", a),
        }
    }
}

/// On page `page`, the map is onto for s >= onto_from and an isomorphism
/// for s >= iso_from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeBound {
    pub page: u32,
    pub onto_from: Threshold,
    pub iso_from: Threshold,
}

impl RangeBound {
    pub fn new(page: u32, onto_from: Threshold, iso_from: Threshold) -> Result<Self> {
        if iso_from.max(onto_from) != iso_from {
            return Err(crate::Error::Config(format!(
                "iso threshold {} below onto threshold {}",
                iso_from, onto_from
            )));
        }
        Ok(RangeBound {
            page,
            onto_from,
            iso_from,
        })
    }
}

/// One page-turn of the threshold calculus.
pub fn propagate(b: RangeBound) -> RangeBound {
    let r = b.page as i64;
    RangeBound {
        page: b.page + 1,
        onto_from: b.onto_from.max(b.iso_from.plus(-r)),
        iso_from: b.iso_from.max(b.onto_from.plus(r)),
    }
}

/// Iterates `propagate` from a starting bound through the given page,
/// returning the full derivation (starting bound first).
pub fn propagate_through(start: RangeBound, page: u32) -> Vec<RangeBound> {
    let mut trace = vec![start];
    let mut bound = start;
    while bound.page < page {
        bound = propagate(bound);
        trace.push(bound);
    }
    trace
}

/// E_r is zero for s >= line, all t, for every r >= page.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingLine {
    pub page: u32,
    pub line: i64,
    /// The threshold derivation from page 2 up to `page`.
    pub trace: Vec<RangeBound>,
}

/// The horizontal vanishing line for the given level's spectral sequence:
/// page 2n^2 + 2 and line s = 2n^2 + vcd + 1. The derivation iterates the
/// threshold calculus on the comparison map to the beta-inverted spectral
/// sequence, starting from onto at s >= vcd and iso at s >= vcd + 1, and
/// uses that the inverted side has settled to zero by that page.
pub fn vanishing_line(p: u32, level: Level) -> Result<VanishingLine> {
    let ctx = HeightContext::new(p)?;
    let d = level.vcd(ctx.n)?;
    let settled = ctx.settled_page();
    let start = RangeBound::new(2, Threshold::Finite(d), Threshold::Finite(d + 1))?;
    let trace = propagate_through(start, settled);
    let last = trace.last().expect("trace is never empty");
    let line = 2 * ctx.n * ctx.n + d + 1;
    debug_assert_eq!(last.iso_from, Threshold::Finite(line));
    Ok(VanishingLine {
        page: settled,
        line,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn propagate_matches_closed_form() {
        // From (2, d, d+1) the iso threshold on page r is d + r - 1.
        for d in [0i64, 2, 4, 16] {
            let start =
                RangeBound::new(2, Threshold::Finite(d), Threshold::Finite(d + 1)).unwrap();
            let mut bound = start;
            for r in 2..40u32 {
                assert_eq!(bound.page, r);
                assert_eq!(bound.onto_from, Threshold::Finite(d));
                assert_eq!(bound.iso_from, Threshold::Finite(d + r as i64 - 1));
                bound = propagate(bound);
            }
        }
    }

    #[test]
    fn propagate_is_monotone() {
        let mut bound =
            RangeBound::new(3, Threshold::Finite(-4), Threshold::Finite(7)).unwrap();
        for _ in 0..30 {
            let next = propagate(bound);
            assert_eq!(next.onto_from.max(bound.onto_from), next.onto_from);
            assert_eq!(next.iso_from.max(bound.iso_from), next.iso_from);
            assert_eq!(next.iso_from.max(next.onto_from), next.iso_from);
            bound = next;
        }
    }

    #[test]
    fn sentinels_stay_everywhere() {
        let start = RangeBound::new(
            2,
            Threshold::MinusInfinity,
            Threshold::MinusInfinity,
        )
        .unwrap();
        let trace = propagate_through(start, 12);
        for b in trace {
            assert_eq!(b.onto_from, Threshold::MinusInfinity);
            assert_eq!(b.iso_from, Threshold::MinusInfinity);
        }
    }

    #[test]
    fn trivial_bound_growth() {
        // (r, 0, 0) propagates to (r+1, 0, r).
        let b = RangeBound::new(5, Threshold::Finite(0), Threshold::Finite(0)).unwrap();
        let next = propagate(b);
        assert_eq!(next.onto_from, Threshold::Finite(0));
        assert_eq!(next.iso_from, Threshold::Finite(5));
    }

    #[test]
    fn vanishing_lines_by_level() {
        let v = vanishing_line(3, Level::G).unwrap();
        assert_eq!((v.page, v.line), (10, 13));
        let v = vanishing_line(3, Level::F).unwrap();
        assert_eq!((v.page, v.line), (10, 9));
        let v = vanishing_line(5, Level::N).unwrap();
        assert_eq!((v.page, v.line), (34, 37));
        let v = vanishing_line(5, Level::F).unwrap();
        assert_eq!((v.page, v.line), (34, 33));
        // The line difference between a group and F is exactly the vcd.
        for p in [3u32, 5, 7] {
            let n = HeightContext::new(p).unwrap().n;
            let f = vanishing_line(p, Level::F).unwrap().line;
            for level in [Level::N, Level::G] {
                let g = vanishing_line(p, level).unwrap().line;
                assert_eq!(g - f, level.vcd(n).unwrap());
            }
        }
        assert!(vanishing_line(3, Level::Cp).is_err());
    }

    #[test]
    fn derivation_trace_shape() {
        let v = vanishing_line(3, Level::G).unwrap();
        assert_eq!(v.trace.len(), 9);
        assert_eq!(v.trace[0].page, 2);
        assert_eq!(v.trace.last().unwrap().page, 10);
        assert_eq!(v.trace.last().unwrap().iso_from, Threshold::Finite(13));
        for w in v.trace.windows(2) {
            assert_eq!(propagate(w[0]), w[1]);
        }
    }
}
