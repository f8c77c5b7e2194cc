//! The matroid engine.
//!
//! Every matroid, whatever its source, is compiled once into the same form: the
//! sorted list of its bases as bitmasks, plus the rank of every subset of the
//! ground set. The rank table is derived from the bases and is what all
//! queries read; it is never constructed independently of them.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::family::{FamilyKind, SetFamily};
use crate::gf::FieldMatrix;

/// Where a matroid came from. Not part of equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Linear,
    Graphic,
    Circuits,
    Bases,
    Uniform,
    Derived,
}

/// Minimum circuit (or cocircuit) size. Matroids without circuits have
/// infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// How the elements of a minor relate to those of the matroid it came from.
/// Survivors keep their relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    kept: Vec<usize>,
    old_n: usize,
}

impl Relabel {
    pub fn identity(n: usize) -> Self {
        Relabel {
            kept: (0..n).collect(),
            old_n: n,
        }
    }

    fn keeping(keep: Mask, old_n: usize) -> Self {
        Relabel {
            kept: bits::elements(keep).collect(),
            old_n,
        }
    }

    /// New label → old label.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.kept.iter().position(|&k| k == old)
    }

    pub fn new_to_old(&self, new: usize) -> usize {
        self.kept[new]
    }

    pub fn kept_mask(&self) -> Mask {
        bits::mask_of(self.kept.iter().copied())
    }

    /// Old-label mask → new-label mask; elements that did not survive are
    /// dropped.
    pub fn to_new(&self, old: Mask) -> Mask {
        bits::compress(old, self.kept_mask())
    }

    pub fn to_old(&self, new: Mask) -> Mask {
        bits::expand(new, self.kept_mask())
    }

    /// `self` followed by `next` (which relabels the output of `self`).
    pub fn then(&self, next: &Relabel) -> Relabel {
        Relabel {
            kept: next.kept.iter().map(|&k| self.kept[k]).collect(),
            old_n: self.old_n,
        }
    }
}

/// A matroid on `{0, .., n-1}`, `n <= 16`.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Arc<[Mask]>,
    ranks: Arc<[u8]>,
    provenance: Provenance,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matroid on {} elements, rank {}, {} bases",
            self.n,
            self.rank,
            self.bases.len()
        )
    }
}

fn check_capacity(n: usize, what: &str) -> Result<()> {
    if n > MAX_ELEMENTS {
        Err(Error::Capacity(format!(
            "{what} has {n} elements; at most {MAX_ELEMENTS} are supported"
        )))
    } else {
        Ok(())
    }
}

/// Rank of every subset, given the set of bases: independent sets are the
/// subsets of bases, and a dependent set has the rank of its best
/// one-element deletion.
fn rank_table_from_bases(n: usize, bases: &[Mask]) -> Vec<u8> {
    let size = 1usize << n;
    let mut indep = vec![false; size];
    for &b in bases {
        indep[b as usize] = true;
    }
    for x in (0..size).rev() {
        if indep[x] {
            continue;
        }
        indep[x] = (0..n).any(|e| x >> e & 1 == 0 && indep[x | 1 << e]);
    }
    rank_table_from_independence(n, &indep)
}

fn rank_table_from_independence(n: usize, indep: &[bool]) -> Vec<u8> {
    let mut ranks = vec![0u8; 1 << n];
    for x in 1..ranks.len() {
        ranks[x] = if indep[x] {
            x.count_ones() as u8
        } else {
            bits::elements(x as Mask)
                .map(|e| ranks[x ^ (1 << e)])
                .max()
                .unwrap_or(0)
        };
    }
    ranks
}

fn bases_from_table(n: usize, ranks: &[u8]) -> (usize, Vec<Mask>) {
    let r = ranks[(1usize << n) - 1] as usize;
    let bases = bits::k_subsets(n, r)
        .filter(|&b| ranks[b as usize] as usize == r)
        .collect();
    (r, bases)
}

impl Matroid {
    /// Trusted constructor from a rank table that is already known to come
    /// from a matroid (restrictions, duals).
    pub(crate) fn from_rank_table(n: usize, ranks: Vec<u8>, provenance: Provenance) -> Self {
        debug_assert_eq!(ranks.len(), 1 << n);
        let (rank, bases) = bases_from_table(n, &ranks);
        Matroid {
            n,
            rank,
            bases: bases.into(),
            ranks: ranks.into(),
            provenance,
        }
    }

    fn from_trusted_bases(n: usize, mut bases: Vec<Mask>, provenance: Provenance) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let rank = bases.first().map_or(0, |&b| bits::size(b));
        let ranks = rank_table_from_bases(n, &bases);
        Matroid {
            n,
            rank,
            bases: bases.into(),
            ranks: ranks.into(),
            provenance,
        }
    }

    /// Builds a matroid from an explicit family of bases, checking that the
    /// family is nonempty, equicardinal and satisfies basis exchange.
    pub fn from_bases(n: usize, bases: Vec<Mask>) -> Result<Self> {
        check_capacity(n, "basis family")?;
        if bases.is_empty() {
            return Err(Error::Axiom("a matroid has at least one basis".into()));
        }
        if bases.iter().any(|&b| b & !bits::full(n) != 0) {
            return Err(Error::Axiom("basis outside the ground set".into()));
        }
        let r = bits::size(bases[0]);
        if bases.iter().any(|&b| bits::size(b) != r) {
            return Err(Error::Axiom("bases of different sizes".into()));
        }
        let m = Self::from_trusted_bases(n, bases, Provenance::Bases);
        if let Some(v) = m.exchange_violation(usize::MAX) {
            return Err(Error::Axiom(v.to_string()));
        }
        Ok(m)
    }

    /// The vector matroid of the columns of `m`.
    pub fn from_matrix(m: &FieldMatrix) -> Result<Self> {
        let n = m.cols();
        check_capacity(n, "matrix")?;
        let r = m.rank();
        let bases = bits::k_subsets(n, r)
            .filter(|&b| m.rank_of_mask(b) == r)
            .collect();
        Ok(Self::from_trusted_bases(n, bases, Provenance::Linear))
    }

    /// The cycle matroid of a multigraph given by its edge list; edge `i` is
    /// element `i`. Self-loops become matroid loops.
    pub fn from_graph(edges: &[(usize, usize)]) -> Result<Self> {
        let n = edges.len();
        check_capacity(n, "graph")?;
        let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let acyclic = |set: Mask| {
            let mut parent: Vec<usize> = (0..vertices).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for e in bits::elements(set) {
                let (a, b) = edges[e];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return false;
                }
                parent[ra] = rb;
            }
            true
        };
        // A spanning forest is a maximum acyclic set; find its size greedily.
        let mut forest: Mask = 0;
        for e in 0..n {
            if acyclic(forest | 1 << e) {
                forest |= 1 << e;
            }
        }
        let r = bits::size(forest);
        let bases = bits::k_subsets(n, r).filter(|&b| acyclic(b)).collect();
        Ok(Self::from_trusted_bases(n, bases, Provenance::Graphic))
    }

    /// The matroid whose circuits are exactly the given sets. Rejects
    /// families that are not antichains or that violate the circuit axioms.
    pub fn from_circuits(n: usize, circuits: &[Mask]) -> Result<Self> {
        check_capacity(n, "circuit family")?;
        for (i, &c) in circuits.iter().enumerate() {
            if c == 0 {
                return Err(Error::Axiom("the empty set cannot be a circuit".into()));
            }
            if c & !bits::full(n) != 0 {
                return Err(Error::Axiom(format!(
                    "circuit {} lies outside the ground set",
                    bits::fmt_mask(c)
                )));
            }
            if let Some(&d) = circuits
                .iter()
                .enumerate()
                .find(|&(j, &d)| j != i && d & c == d)
                .map(|(_, d)| d)
            {
                return Err(Error::Axiom(format!(
                    "circuits {} and {} are nested",
                    bits::fmt_mask(d),
                    bits::fmt_mask(c)
                )));
            }
        }
        let size = 1usize << n;
        let mut dependent = vec![false; size];
        for &c in circuits {
            dependent[c as usize] = true;
        }
        for x in 1..size {
            if !dependent[x] {
                dependent[x] = bits::elements(x as Mask).any(|e| dependent[x ^ (1 << e)]);
            }
        }
        let indep: Vec<bool> = dependent.iter().map(|d| !d).collect();
        let maximal: Vec<Mask> = (0..size as Mask)
            .filter(|&x| indep[x as usize] && (0..n).all(|e| x >> e & 1 == 1 || !indep[(x | 1 << e) as usize]))
            .collect();
        let r = bits::size(maximal[0]);
        if let Some(&b) = maximal.iter().find(|&&b| bits::size(b) != r) {
            return Err(Error::Axiom(format!(
                "maximal independent sets {} and {} differ in size",
                bits::fmt_mask(maximal[0]),
                bits::fmt_mask(b)
            )));
        }
        let ranks = rank_table_from_independence(n, &indep);
        if let Some((x, e, f)) = local_submodularity_violation(n, &ranks) {
            return Err(Error::Axiom(format!(
                "rank is not submodular at {} with {e}, {f}",
                bits::fmt_mask(x)
            )));
        }
        let m = Matroid {
            n,
            rank: r,
            bases: maximal.into(),
            ranks: ranks.into(),
            provenance: Provenance::Circuits,
        };
        if let Some(v) = m.exchange_violation(4_000_000) {
            return Err(Error::Axiom(v.to_string()));
        }
        Ok(m)
    }

    /// `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        check_capacity(n, "uniform matroid")?;
        if r > n {
            return Err(Error::Precondition(format!("U_{{{r},{n}}} needs r <= n")));
        }
        let bases = bits::k_subsets(n, r).collect();
        Ok(Self::from_trusted_bases(n, bases, Provenance::Uniform))
    }

    /// The matroid with no elements.
    pub fn empty() -> Self {
        Self::from_trusted_bases(0, vec![0], Provenance::Derived)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    pub fn ground(&self) -> Mask {
        bits::full(self.n)
    }

    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// The rank of every subset, indexed by mask.
    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank_of(&self, x: Mask) -> usize {
        self.ranks[x as usize] as usize
    }

    /// Rank straight from the definition, `max |B ∩ X|` over bases. Slow;
    /// kept as an oracle for the table.
    pub fn rank_via_bases(&self, x: Mask) -> usize {
        self.bases.iter().map(|&b| bits::size(b & x)).max().unwrap_or(0)
    }

    #[inline]
    pub fn is_independent(&self, x: Mask) -> bool {
        self.rank_of(x) == bits::size(x)
    }

    pub fn is_basis(&self, x: Mask) -> bool {
        bits::size(x) == self.rank && self.is_independent(x)
    }

    /// `r*(X) = |X| + r(E - X) - r(E)`.
    pub fn corank_of(&self, x: Mask) -> usize {
        bits::size(x) + self.rank_of(self.ground() & !x) - self.rank
    }

    /// First failure of the basis exchange axiom, if any. Checks every pair of
    /// bases when there are at most `max_pairs` of them, and a deterministic
    /// sample of that many pairs otherwise.
    pub fn exchange_violation(&self, max_pairs: usize) -> Option<ExchangeViolation> {
        let k = self.bases.len();
        let check = |b1: Mask, b2: Mask| -> Option<ExchangeViolation> {
            for x in bits::elements(b1 & !b2) {
                let ok = bits::elements(b2 & !b1).any(|y| self.is_basis((b1 & !(1 << x)) | 1 << y));
                if !ok {
                    return Some(ExchangeViolation { b1, b2, x });
                }
            }
            None
        };
        if k.saturating_mul(k) <= max_pairs {
            for &b1 in self.bases.iter() {
                for &b2 in self.bases.iter() {
                    if let Some(v) = check(b1, b2) {
                        return Some(v);
                    }
                }
            }
            None
        } else {
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % k as u64) as usize
            };
            (0..max_pairs).find_map(|_| check(self.bases[next()], self.bases[next()]))
        }
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        let ranks: Vec<u8> = (0..=full)
            .map(|x| (bits::size(x) + self.rank_of(full & !x) - self.rank) as u8)
            .collect();
        let mut bases: Vec<Mask> = self.bases.iter().map(|&b| full & !b).collect();
        bases.sort_unstable();
        Matroid {
            n: self.n,
            rank: self.n - self.rank,
            bases: bases.into(),
            ranks: ranks.into(),
            provenance: Provenance::Derived,
        }
    }

    /// `M | keep`, relabelled densely.
    pub fn restrict(&self, keep: Mask) -> (Matroid, Relabel) {
        let keep = keep & self.ground();
        let ranks = bits::pull_back(keep, |x| self.ranks[x as usize], 0);
        let m = Matroid::from_rank_table(bits::size(keep), ranks, Provenance::Derived);
        (m, Relabel::keeping(keep, self.n))
    }

    /// `M \ d`.
    pub fn delete(&self, d: Mask) -> (Matroid, Relabel) {
        self.restrict(self.ground() & !d)
    }

    /// `M / c`, computed as `(M* \ c)*`.
    pub fn contract(&self, c: Mask) -> (Matroid, Relabel) {
        let (m, relabel) = self.dual().delete(c);
        (m.dual(), relabel)
    }

    /// `M / c \ d` for disjoint `c`, `d` given in this matroid's labels.
    pub fn minor(&self, contract: Mask, delete: Mask) -> Result<(Matroid, Relabel)> {
        if contract & delete != 0 {
            return Err(Error::Precondition(format!(
                "contract set {} and delete set {} overlap",
                bits::fmt_mask(contract),
                bits::fmt_mask(delete)
            )));
        }
        let (mc, r1) = self.contract(contract);
        let (m, r2) = mc.delete(r1.to_new(delete));
        Ok((m, r1.then(&r2)))
    }

    /// The matroid obtained by renaming element `e` to `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        debug_assert_eq!(perm.len(), self.n);
        let map = |x: Mask| bits::elements(x).fold(0, |acc, e| acc | 1 << perm[e]);
        let bases: Vec<Mask> = self.bases.iter().map(|&b| map(b)).collect();
        Matroid::from_trusted_bases(self.n, bases, self.provenance)
    }

    /// Minimal dependent sets, ordered by size and then by mask.
    pub fn circuits(&self) -> SetFamily {
        let mut found: Vec<Mask> = (1..=self.ground())
            .filter(|&x| {
                !self.is_independent(x)
                    && bits::elements(x).all(|e| self.is_independent(x & !(1 << e)))
            })
            .collect();
        found.sort_unstable_by_key(|&x| (bits::size(x), x));
        SetFamily::new(self.n, FamilyKind::Circuits, found)
    }

    pub fn cocircuits(&self) -> SetFamily {
        self.dual().circuits().with_kind(FamilyKind::Cocircuits)
    }

    pub fn triangles(&self) -> SetFamily {
        let members = self.circuits().iter().filter(|&c| bits::size(c) == 3).collect();
        SetFamily::new(self.n, FamilyKind::Triangles, members)
    }

    /// Flats of rank `r - 1`.
    pub fn hyperplanes(&self) -> SetFamily {
        let mut members: Vec<Mask> = self
            .cocircuits()
            .iter()
            .map(|d| self.ground() & !d)
            .collect();
        members.sort_unstable_by_key(|&x| (bits::size(x), x));
        SetFamily::new(self.n, FamilyKind::Hyperplanes, members)
    }

    /// All closed sets.
    pub fn flats(&self) -> SetFamily {
        let mut members: Vec<Mask> = (0..=self.ground()).filter(|&x| self.closure(x) == x).collect();
        members.sort_unstable_by_key(|&x| (bits::size(x), x));
        SetFamily::new(self.n, FamilyKind::Flats, members)
    }

    pub fn closure(&self, x: Mask) -> Mask {
        let r = self.rank_of(x);
        (0..self.n)
            .filter(|&e| self.rank_of(x | 1 << e) == r)
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn loops(&self) -> Mask {
        self.closure(0)
    }

    pub fn coloops(&self) -> Mask {
        (0..self.n)
            .filter(|&e| self.rank_of(self.ground() & !(1 << e)) < self.rank)
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn girth(&self) -> Girth {
        self.circuits()
            .iter()
            .next()
            .map_or(Girth::Infinite, |c| Girth::Finite(bits::size(c)))
    }

    pub fn cogirth(&self) -> Girth {
        self.dual().girth()
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        if self.loops() != 0 {
            return false;
        }
        (0..self.n).all(|e| (e + 1..self.n).all(|f| self.rank_of(1 << e | 1 << f) == 2))
    }

    pub fn is_cosimple(&self) -> bool {
        self.dual().is_simple()
    }

    /// Deletes loops and all but the lowest-labelled member of each parallel
    /// class.
    pub fn simplify(&self) -> (Matroid, Relabel) {
        let mut drop = self.loops();
        for e in 0..self.n {
            if drop >> e & 1 == 1 {
                continue;
            }
            for f in e + 1..self.n {
                if drop >> f & 1 == 0 && self.rank_of(1 << e | 1 << f) == 1 {
                    drop |= 1 << f;
                }
            }
        }
        self.delete(drop)
    }
}

/// A witnessed failure of basis exchange: no `y` in `b2 - b1` makes
/// `b1 - x + y` a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub b1: Mask,
    pub b2: Mask,
    pub x: usize,
}

impl fmt::Display for ExchangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "basis exchange fails for B1={} B2={} x={}",
            bits::fmt_mask(self.b1),
            bits::fmt_mask(self.b2),
            self.x
        )
    }
}

/// Checks `r(X) + r(X+e+f) <= r(X+e) + r(X+f)` everywhere; together with unit
/// increase this characterises matroid rank functions.
fn local_submodularity_violation(n: usize, ranks: &[u8]) -> Option<(Mask, usize, usize)> {
    for x in 0..(1usize << n) {
        for e in 0..n {
            if x >> e & 1 == 1 {
                continue;
            }
            let xe = x | 1 << e;
            if ranks[xe] < ranks[x] || ranks[xe] > ranks[x] + 1 {
                return Some((x as Mask, e, e));
            }
            for f in e + 1..n {
                if x >> f & 1 == 1 {
                    continue;
                }
                let xf = x | 1 << f;
                if ranks[x] as u16 + ranks[xe | 1 << f] as u16 > ranks[xe] as u16 + ranks[xf] as u16 {
                    return Some((x as Mask, e, f));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::mask_of;
    use crate::gf::Prime;

    fn fano() -> Matroid {
        let m = crate::gf::pg_points(Prime::TWO, 3).unwrap();
        Matroid::from_matrix(&m).unwrap()
    }

    #[test]
    fn uniform_basics() {
        let u25 = Matroid::uniform(2, 5).unwrap();
        assert_eq!((u25.n(), u25.rank(), u25.bases().len()), (5, 2, 10));
        for t in bits::k_subsets(5, 3) {
            assert_eq!(u25.rank_of(t), 2);
        }
        assert_eq!(u25.rank_of(0), 0);
        assert_eq!(u25.dual(), Matroid::uniform(3, 5).unwrap());
        assert_eq!(Matroid::uniform(3, 5).unwrap().girth(), Girth::Finite(4));
        assert!(Matroid::uniform(4, 3).is_err());
    }

    #[test]
    fn matrix_identity_is_free() {
        let i3 = FieldMatrix::identity_augmented(Prime::TWO, &[[0i64; 0]; 3]).unwrap();
        let m = Matroid::from_matrix(&i3).unwrap();
        assert_eq!(m.bases(), &[0b111]);
        assert_eq!(m.girth(), Girth::Infinite);
        assert_eq!(m.coloops(), 0b111);
    }

    #[test]
    fn graph_matroids() {
        let single = Matroid::from_graph(&[(0, 1)]).unwrap();
        assert_eq!(single, Matroid::uniform(1, 1).unwrap());
        let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let m = Matroid::from_graph(&k5).unwrap();
        assert_eq!((m.n(), m.rank()), (10, 4));
        // Spanning trees of K5: Cayley gives 5^3.
        assert_eq!(m.bases().len(), 125);
        let looped = Matroid::from_graph(&[(0, 0), (0, 1)]).unwrap();
        assert_eq!(looped.loops(), 0b01);
    }

    #[test]
    fn circuits_build_uniform() {
        let all3: Vec<Mask> = bits::k_subsets(5, 3).collect();
        assert_eq!(Matroid::from_circuits(5, &all3).unwrap(), Matroid::uniform(2, 5).unwrap());
        assert_eq!(
            Matroid::from_circuits(4, &[0b1111]).unwrap(),
            Matroid::uniform(3, 4).unwrap()
        );
    }

    #[test]
    fn circuits_reject_non_matroids() {
        // Two triangles sharing one element without the elimination circuit.
        let bad = [mask_of([0, 1, 2]), mask_of([2, 3, 4])];
        assert!(matches!(Matroid::from_circuits(5, &bad), Err(Error::Axiom(_))));
        let nested = [mask_of([0, 1]), mask_of([0, 1, 2])];
        assert!(matches!(Matroid::from_circuits(3, &nested), Err(Error::Axiom(_))));
    }

    #[test]
    fn fano_round_trip_through_circuits() {
        let f7 = fano();
        let again = Matroid::from_circuits(7, f7.circuits().members()).unwrap();
        assert_eq!(again, f7);
    }

    #[test]
    fn fano_cocircuits_have_size_four() {
        let f7 = fano();
        let cocircuits = f7.cocircuits();
        assert_eq!(cocircuits.len(), 7);
        assert!(cocircuits.iter().all(|d| bits::size(d) == 4));
        assert_eq!(f7.dual().cogirth(), Girth::Finite(3));
        assert_eq!(f7.triangles().len(), 7);
    }

    #[test]
    fn u25_cocircuits() {
        let u25 = Matroid::uniform(2, 5).unwrap();
        let expected: Vec<Mask> = bits::k_subsets(5, 4).collect();
        assert_eq!(u25.cocircuits().members(), &expected[..]);
    }

    #[test]
    fn from_bases_validates() {
        assert!(Matroid::from_bases(3, vec![]).is_err());
        assert!(Matroid::from_bases(3, vec![0b011, 0b100]).is_err());
        // {01, 23} fails exchange.
        assert!(matches!(
            Matroid::from_bases(4, vec![0b0011, 0b1100]),
            Err(Error::Axiom(_))
        ));
        let m = Matroid::from_bases(3, vec![0b011, 0b101, 0b110]).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn minors_and_relabels() {
        let f7 = fano();
        assert_eq!(f7.delete(0).0, f7);
        let (m, rl) = f7.minor(0b1, 0b10).unwrap();
        assert_eq!((m.n(), m.rank()), (5, 2));
        assert_eq!(rl.kept(), &[2, 3, 4, 5, 6]);
        assert_eq!(rl.old_to_new(4), Some(2));
        assert_eq!(rl.old_to_new(1), None);
        assert!(f7.minor(0b1, 0b1).is_err());
        // Deleting everything leaves the empty matroid.
        assert_eq!(f7.delete(f7.ground()).0, Matroid::empty());
    }

    #[test]
    fn closure_and_simplification() {
        let f7 = fano();
        for &b in f7.bases() {
            assert_eq!(f7.closure(b), f7.ground());
        }
        // Double every element of U_{2,3}: a graph triangle with doubled edges
        // plus a loop.
        let g = Matroid::from_graph(&[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (2, 2)]).unwrap();
        assert!(!g.is_simple());
        let (s, rl) = g.simplify();
        assert_eq!(rl.kept(), &[0, 2, 4]);
        assert!(s.is_simple());
        assert!(s.girth().at_least(3));
        assert_eq!(s.loops(), 0);
    }

    #[test]
    fn empty_matroid() {
        let e = Matroid::empty();
        assert_eq!((e.n(), e.rank()), (0, 0));
        assert_eq!(e.girth(), Girth::Infinite);
        assert_eq!(e.cogirth(), Girth::Infinite);
        assert!(e.is_simple());
    }

    #[test]
    fn capacity_limits() {
        let wide: Vec<(usize, usize)> = (0..17).map(|i| (i, i + 1)).collect();
        assert!(matches!(Matroid::from_graph(&wide), Err(Error::Capacity(_))));
        let m = FieldMatrix::from_literal(Prime::TWO, &[vec![1i64; 17]]).unwrap();
        assert!(matches!(Matroid::from_matrix(&m), Err(Error::Capacity(_))));
    }
}
