//! Exact arithmetic over GF(2), GF(3) and GF(5), and dense matrices whose
//! column ranks define linear matroids.

use std::fmt;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// One of the supported prime moduli.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u8);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);
    pub const FIVE: Prime = Prime(5);

    pub fn new(p: u32) -> Result<Self> {
        match p {
            2 | 3 | 5 => Ok(Prime(p as u8)),
            _ => Err(Error::Capability(format!(
                "GF({p}) is not supported; use 2, 3 or 5"
            ))),
        }
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(self.0 as i64) as u8
    }

    /// Multiplicative inverse of a nonzero residue, found by exhaustion.
    pub fn inverse(self, v: u8) -> Option<u8> {
        let p = self.0;
        (1..p).find(|&w| (v as u16 * w as u16) % p as u16 == 1)
    }

    fn inverse_table(self) -> [u8; 5] {
        let mut t = [0u8; 5];
        for v in 1..self.0 {
            t[v as usize] = self
                .inverse(v)
                .expect("every nonzero residue of a prime modulus is invertible");
        }
        t
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

/// A residue modulo a supported prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u8,
    p: Prime,
}

impl FieldElem {
    pub fn new(p: Prime, v: i64) -> Self {
        FieldElem {
            value: p.reduce(v),
            p,
        }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        self.p.inverse(self.value).map(|value| FieldElem { value, p: self.p })
    }
}

impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    fn add(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.p, o.p);
        FieldElem::new(self.p, self.value as i64 + o.value as i64)
    }
}

impl std::ops::Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.p, o.p);
        FieldElem::new(self.p, self.value as i64 - o.value as i64)
    }
}

impl std::ops::Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.p, o.p);
        FieldElem::new(self.p, self.value as i64 * o.value as i64)
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(self.p, -(self.value as i64))
    }
}

/// A dense matrix over GF(p) with labelled columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
    labels: Vec<String>,
}

impl FieldMatrix {
    /// Ingests a signed integer grid, reducing every entry mod `p`. Columns are
    /// labelled `1..=cols`.
    pub fn from_literal<R: AsRef<[i64]>>(p: Prime, grid: &[R]) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in grid.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&v| p.reduce(v)));
        }
        Ok(FieldMatrix {
            p,
            rows,
            cols,
            entries,
            labels: (1..=cols).map(|c| c.to_string()).collect(),
        })
    }

    /// `[I_r | A]` for an `r`-row literal `A`.
    pub fn identity_augmented<R: AsRef<[i64]>>(p: Prime, a: &[R]) -> Result<Self> {
        let r = a.len();
        let grid: Vec<Vec<i64>> = a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut out: Vec<i64> = (0..r).map(|j| i64::from(i == j)).collect();
                out.extend_from_slice(row.as_ref());
                out
            })
            .collect();
        Self::from_literal(p, &grid)
    }

    /// Replaces the column labels; they must be distinct and one per column.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.cols {
            return Err(Error::Shape(format!(
                "{} labels for {} columns",
                labels.len(),
                self.cols
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Label(format!("duplicate column label `{}`", w[0])));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> FieldElem {
        FieldElem {
            value: self.entries[row * self.cols + col],
            p: self.p,
        }
    }

    /// Overwrites one entry (reduced mod p). Used to build perturbed copies.
    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        self.entries[row * self.cols + col] = self.p.reduce(v);
    }

    pub fn column(&self, col: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.entries[r * self.cols + col]).collect()
    }

    /// The entries as signed integers, with `p - 1` written as `-1` for odd p.
    pub fn to_signed_grid(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let v = self.entries[r * self.cols + c] as i64;
                        if self.p.get() > 2 && v == self.p.get() as i64 - 1 {
                            -1
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Keeps the listed columns, in the order given.
    pub fn select_columns(&self, cols: &[usize]) -> FieldMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                entries.push(self.entries[r * self.cols + c]);
            }
        }
        FieldMatrix {
            p: self.p,
            rows: self.rows,
            cols: cols.len(),
            entries,
            labels: cols.iter().map(|&c| self.labels[c].clone()).collect(),
        }
    }

    pub fn column_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Label(format!("unknown column label `{label}`")))
    }

    /// Rank of the columns with the given labels.
    pub fn rank_of_labels<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<usize> {
        let mut mask: u64 = 0;
        for l in labels {
            mask |= 1 << self.column_index(l)?;
        }
        Ok(self.rank_of_columns(mask))
    }

    /// Rank over GF(p) of the columns in `mask` (bit `c` selects column `c`).
    pub fn rank_of_columns(&self, mask: u64) -> usize {
        let inv = self.p.inverse_table();
        let p = self.p.get() as u16;
        let picked: Vec<usize> = (0..self.cols).filter(|c| mask >> c & 1 == 1).collect();
        // Work on the transpose: one row per selected column.
        let mut m: Vec<Vec<u8>> = picked.iter().map(|&c| self.column(c)).collect();
        let mut rank = 0;
        for col in 0..self.rows {
            let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let scale = inv[m[rank][col] as usize] as u16;
            for v in m[rank].iter_mut() {
                *v = ((*v as u16 * scale) % p) as u8;
            }
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == rank || row[col] == 0 {
                    continue;
                }
                let f = row[col] as u16;
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = ((*v as u16 + p * p - f * pv as u16) % p) as u8;
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        self.rank_of_columns(if self.cols == 64 { u64::MAX } else { (1u64 << self.cols) - 1 })
    }

    /// Rank of a column subset given as a [`Mask`].
    pub fn rank_of_mask(&self, mask: Mask) -> usize {
        self.rank_of_columns(mask as u64)
    }

    /// Masks of the labelled columns.
    pub fn mask_of_labels<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<Mask> {
        let mut m = 0;
        for l in labels {
            m |= 1 << self.column_index(l)?;
        }
        Ok(m)
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}x{}  [{}]", self.p, self.rows, self.cols, self.labels.join(" "))?;
        for row in self.to_signed_grid() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The points of PG(r-1, p) as the columns of an `r`-row matrix, each
/// normalised so that its first nonzero coordinate is 1. Columns are listed
/// in lexicographic order of their coordinate vectors.
pub fn pg_points(p: Prime, r: usize) -> Result<FieldMatrix> {
    let supported = matches!((p.get(), r), (2, 1..=4) | (3, 1..=3));
    if !supported {
        return Err(Error::Capability(format!(
            "PG({}, {}) is outside the supported range",
            r as i64 - 1,
            p.get()
        )));
    }
    let q = p.get() as usize;
    let mut columns: Vec<Vec<i64>> = Vec::new();
    for code in 1..q.pow(r as u32) {
        // Most significant digit first gives lexicographic order.
        let v: Vec<i64> = (0..r)
            .rev()
            .map(|i| ((code / q.pow(i as u32)) % q) as i64)
            .collect();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            columns.push(v);
        }
    }
    let grid: Vec<Vec<i64>> = (0..r).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    FieldMatrix::from_literal(p, &grid)
}

/// Whether some nonzero linear functional is nonzero on every column.
/// Functionals are searched up to scaling (first nonzero coordinate 1).
pub fn affine_over_gf3(m: &FieldMatrix) -> Result<bool> {
    if m.prime() != Prime::THREE {
        return Err(Error::Precondition(format!(
            "affine test needs a GF(3) matrix, got {}",
            m.prime()
        )));
    }
    Ok(separating_functional(m).is_some())
}

/// A functional witnessing [`affine_over_gf3`], if any.
pub fn separating_functional(m: &FieldMatrix) -> Option<Vec<u8>> {
    let functionals = pg_points_unchecked(m.prime(), m.rows());
    'next: for w in functionals {
        for c in 0..m.cols() {
            let dot: u32 = (0..m.rows()).map(|r| w[r] as u32 * m.get(r, c).value() as u32).sum();
            if dot % m.prime().get() as u32 == 0 {
                continue 'next;
            }
        }
        return Some(w);
    }
    None
}

fn pg_points_unchecked(p: Prime, r: usize) -> Vec<Vec<u8>> {
    let q = p.get() as usize;
    (1..q.pow(r as u32))
        .map(|code| {
            (0..r)
                .rev()
                .map(|i| ((code / q.pow(i as u32)) % q) as u8)
                .collect::<Vec<u8>>()
        })
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Rank of an arbitrary column subset (given as indices) of `m`, convenience
/// for callers holding element lists.
pub fn mat_rank(m: &FieldMatrix, cols: &[usize]) -> usize {
    m.rank_of_columns(bits::mask_of(cols.iter().copied()) as u64)
}
