//! Dense exact linear algebra over the prime fields F_p.
//!
//! Matrices are row-major with entries reduced to `0..p`. Everything here is
//! deterministic: reduced row echelon form normalizes pivots to 1 and clears
//! above and below, kernel bases are indexed by free columns in increasing
//! order, and quotient bases pick the non-pivot coordinates as canonical
//! representatives. The rest of the crate leans on that determinism for
//! byte-stable output.

use crate::{Error, Result};

/// Field arithmetic mod a prime that fits comfortably in u32.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by Fermat's little theorem. Panics on zero,
    /// which is always a caller bug in this crate.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(field: Fp, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, size: usize) -> Self {
        let mut m = Self::zero(field, size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors, reducing entries mod p. All rows
    /// must have the same length; `cols` disambiguates the zero-row case.
    pub fn from_rows(field: Fp, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut m = Self::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::BadVectorLength {
                    got: r.len(),
                    want: cols,
                });
            }
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % field.p);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn matmul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::BadVectorLength {
                got: v.len(),
                want: self.cols,
            });
        }
        let f = self.field;
        let mut out = vec![0u32; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u32;
            for j in 0..self.cols {
                acc = f.add(acc, f.mul(self.get(i, j), v[j] % f.p));
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns, in strictly
    /// increasing order. Pivots are normalized to 1 and their columns are
    /// cleared both above and below, so the result is unique.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(r0) = found else { continue };
            if r0 != pivot_row {
                for c in 0..m.cols {
                    let a = m.get(pivot_row, c);
                    let b = m.get(r0, c);
                    m.set(pivot_row, c, b);
                    m.set(r0, c, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col));
            for c in 0..m.cols {
                m.set(pivot_row, c, f.mul(inv, m.get(pivot_row, c)));
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(pivot_row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column of the
    /// echelon form, in increasing free-column order. Each vector has a 1 in
    /// its free column, so the basis itself is in echelon position.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let (ech, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(ech.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs` for a column vector, returning the canonical
    /// solution with all free variables set to zero, or None if inconsistent.
    pub fn solve(&self, rhs: &[u32]) -> Result<Option<Vec<u32>>> {
        if rhs.len() != self.rows {
            return Err(Error::BadVectorLength {
                got: rhs.len(),
                want: self.rows,
            });
        }
        let f = self.field;
        let mut aug = FpMatrix::zero(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, rhs[r] % f.p);
        }
        let (ech, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = ech.get(row, self.cols);
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix via Gauss-Jordan, or None if singular.
    pub fn inverse(&self) -> Result<Option<FpMatrix>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let f = self.field;
        let n = self.rows;
        let mut aug = FpMatrix::zero(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (ech, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return Ok(None);
        }
        let mut inv = FpMatrix::zero(f, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, ech.get(r, n + c));
            }
        }
        Ok(Some(inv))
    }
}

impl std::fmt::Display for FpMatrix {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(fmt, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Echelonizes a list of vectors (as rows) and drops zero rows, producing a
/// canonical basis of their span.
pub fn echelon_basis(field: Fp, dim: usize, vectors: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let m = FpMatrix::from_rows(field, dim, vectors)?;
    let (ech, pivots) = m.rref();
    Ok((0..pivots.len()).map(|r| ech.row(r).to_vec()).collect())
}

/// Expresses `target` as a linear combination of `rows`, returning the
/// coefficient vector, or None if `target` is outside their span.
pub fn express_in_rows(field: Fp, dim: usize, rows: &[Vec<u32>], target: &[u32]) -> Result<Option<Vec<u32>>> {
    if target.len() != dim {
        return Err(Error::BadVectorLength {
            got: target.len(),
            want: dim,
        });
    }
    let m = FpMatrix::from_rows(field, dim, rows)?;
    m.transpose().solve(target)
}

/// Canonical coset representatives of a subquotient span(cycles)/span(denom):
/// reduce each cycle echelon row against the denominator echelon rows and
/// re-echelonize the survivors. Both inputs must already be echelon bases
/// (as produced by `echelon_basis`); the denominator must lie inside the
/// cycle span for the result to be meaningful.
pub(crate) fn subquotient_reps(
    field: Fp,
    dim: usize,
    cycles: &[Vec<u32>],
    denom: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>> {
    let pivots: Vec<usize> = denom
        .iter()
        .map(|row| row.iter().position(|&c| c != 0).expect("echelon row is nonzero"))
        .collect();
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    for z in cycles {
        let mut v = z.clone();
        for (b, &pc) in denom.iter().zip(&pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            for (slot, &bv) in v.iter_mut().zip(b) {
                *slot = field.sub(*slot, field.mul(c, bv));
            }
        }
        if v.iter().any(|&c| c != 0) {
            reduced.push(v);
        }
    }
    echelon_basis(field, dim, &reduced)
}

/// A canonical basis for the quotient of F_p^space_dim by a subspace.
///
/// Representatives are the ambient coordinates that are not pivot columns of
/// the subspace's echelon basis. The projection matrix maps an ambient vector
/// to its quotient coordinates; composing it with the inclusion that sends
/// representative k to the ambient basis vector e_{representatives[k]} gives
/// the identity, and the projection kills exactly the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub representatives: Vec<usize>,
    pub projection: FpMatrix,
}

pub fn quotient_basis(field: Fp, space_dim: usize, subspace: &[Vec<u32>]) -> Result<QuotientBasis> {
    let m = FpMatrix::from_rows(field, space_dim, subspace)?;
    let (ech, pivots) = m.rref();
    let mut is_pivot = vec![false; space_dim];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let representatives: Vec<usize> = (0..space_dim).filter(|&c| !is_pivot[c]).collect();
    let mut projection = FpMatrix::zero(field, representatives.len(), space_dim);
    for (out_row, &rep) in representatives.iter().enumerate() {
        projection.set(out_row, rep, 1);
        // Reducing the ambient basis vector e_{pivot} modulo the subspace
        // leaves minus the non-pivot part of the corresponding echelon row.
        for (row, &pc) in pivots.iter().enumerate() {
            projection.set(out_row, pc, field.neg(ech.get(row, rep)));
        }
    }
    Ok(QuotientBasis {
        representatives,
        projection,
    })
}
