//! Isomorphism, fingerprints, and minor containment.
//!
//! Isomorphism search assigns the elements of the first matroid in label
//! order, trying images in label order within the same signature class, and
//! checks the rank of every subset of the assigned prefix as it goes. The
//! first complete assignment found is therefore the lexicographically least
//! bijection.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::matroid::Matroid;

/// Isomorphism-invariant summary of a matroid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub r: usize,
    pub bases: usize,
    /// `circuits[k]` = number of circuits of size `k`.
    pub circuits: Vec<usize>,
    pub cocircuits: Vec<usize>,
    /// For each element, the circuit-size histogram of circuits through it
    /// followed by the cocircuit one; sorted across elements.
    pub elements: Vec<Vec<usize>>,
}

impl Fingerprint {
    pub fn of(m: &Matroid) -> Self {
        let mut elements = element_signatures(m);
        elements.sort();
        Fingerprint {
            n: m.n(),
            r: m.rank(),
            bases: m.bases().len(),
            circuits: m.circuits().size_histogram(),
            cocircuits: m.cocircuits().size_histogram(),
            elements,
        }
    }

    /// A compact string form, usable as a hash key or in reports.
    pub fn token(&self) -> String {
        let hist = |h: &[usize]| h.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".");
        let elems: Vec<String> = self.elements.iter().map(|e| hist(e)).collect();
        format!(
            "n{}r{}b{}|c{}|d{}|{}",
            self.n,
            self.r,
            self.bases,
            hist(&self.circuits),
            hist(&self.cocircuits),
            elems.join(",")
        )
    }
}

fn histograms_through(n: usize, family: impl Iterator<Item = Mask>) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; n + 1]; n];
    for c in family {
        let k = bits::size(c);
        for e in bits::elements(c) {
            out[e][k] += 1;
        }
    }
    out
}

/// Per-element signatures, indexed by element.
pub fn element_signatures(m: &Matroid) -> Vec<Vec<usize>> {
    let through_c = histograms_through(m.n(), m.circuits().iter());
    let through_d = histograms_through(m.n(), m.cocircuits().iter());
    through_c
        .into_iter()
        .zip(through_d)
        .map(|(mut c, d)| {
            c.extend(d);
            c
        })
        .collect()
}

/// Numbers each element by its signature so that two elements can only be
/// matched when their class ids agree.
fn classes(a: &[Vec<usize>], b: &[Vec<usize>]) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let ids: BTreeMap<&Vec<usize>, u32> = sa.iter().zip(0..).collect();
    Some((a.iter().map(|s| ids[s]).collect(), b.iter().map(|s| ids[s]).collect()))
}

/// Backtracking over rank tables of equal size: finds `map` with
/// `a[X] == b[map(X)]` for every `X`, lexicographically least.
fn find_bijection(n: usize, a: &[u8], b: &[u8], class_a: &[u32], class_b: &[u32]) -> Option<Vec<usize>> {
    struct Search<'t> {
        n: usize,
        a: &'t [u8],
        b: &'t [u8],
        class_a: &'t [u32],
        class_b: &'t [u32],
        img: Vec<Mask>,
        map: Vec<usize>,
        used: Mask,
    }

    impl Search<'_> {
        fn go(&mut self, k: usize) -> bool {
            if k == self.n {
                return true;
            }
            let lo = 1usize << k;
            for c in 0..self.n {
                let bit = 1 << c;
                if self.used & bit != 0 || self.class_a[k] != self.class_b[c] {
                    continue;
                }
                let fits = (0..lo).all(|s| self.a[s | lo] == self.b[(self.img[s] | bit) as usize]);
                if !fits {
                    continue;
                }
                for s in 0..lo {
                    self.img[s | lo] = self.img[s] | bit;
                }
                self.map[k] = c;
                self.used |= bit;
                if self.go(k + 1) {
                    return true;
                }
                self.used &= !bit;
            }
            false
        }
    }

    let mut search = Search {
        n,
        a,
        b,
        class_a,
        class_b,
        img: vec![0; 1 << n],
        map: vec![0; n],
        used: 0,
    };
    search.go(0).then_some(search.map)
}

/// A bijection `f` (as `f[e]` for each element `e` of `a`) under which the
/// bases of `a` are exactly the bases of `b`.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return None;
    }
    let (ca, cb) = classes(&element_signatures(a), &element_signatures(b))?;
    let map = find_bijection(a.n(), a.rank_table(), b.rank_table(), &ca, &cb)?;
    debug_assert_eq!(a.relabel(&map), *b);
    Some(map)
}

/// `target ≅ host / contract \ delete`, with `mapping[t]` the host element
/// playing the role of target element `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub contract: Mask,
    pub delete: Mask,
    pub mapping: Vec<usize>,
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "contract {} delete {} mapping {:?}",
            bits::fmt_mask(self.contract),
            bits::fmt_mask(self.delete),
            self.mapping
        )
    }
}

impl MinorWitness {
    /// Recomputes the minor and compares it with the relabelled target.
    pub fn replay(&self, host: &Matroid, target: &Matroid) -> Result<(), String> {
        if self.contract & self.delete != 0 {
            return Err("contract and delete sets overlap".into());
        }
        if (self.contract | self.delete) & !host.ground() != 0 {
            return Err("witness names elements outside the host".into());
        }
        let (minor, relabel) = host.minor(self.contract, self.delete).map_err(|e| e.to_string())?;
        if self.mapping.len() != target.n() || minor.n() != target.n() {
            return Err(format!(
                "minor has {} elements, target {}, mapping {}",
                minor.n(),
                target.n(),
                self.mapping.len()
            ));
        }
        let mut perm = Vec::with_capacity(target.n());
        let mut seen: Mask = 0;
        for &h in &self.mapping {
            let i = relabel
                .old_to_new(h)
                .ok_or_else(|| format!("mapping sends an element to removed host element {h}"))?;
            if seen >> i & 1 == 1 {
                return Err(format!("mapping hits host element {h} twice"));
            }
            seen |= 1 << i;
            perm.push(i);
        }
        if target.relabel(&perm) == minor {
            Ok(())
        } else {
            Err("relabelled target differs from the minor".into())
        }
    }
}

/// Cheap invariants of a rank table on `n` elements.
struct Shape {
    bases: usize,
    signatures: Vec<Vec<u16>>,
}

impl Shape {
    fn of(n: usize, ranks: &[u8]) -> Self {
        let r = ranks[ranks.len() - 1];
        let mut bases = 0;
        let mut signatures = vec![vec![0u16; n + 1]; n];
        for x in 1..ranks.len() {
            let size = x.count_ones() as usize;
            let rank = ranks[x] as usize;
            if rank == size {
                bases += usize::from(rank == r as usize);
                continue;
            }
            let circuit = rank + 1 == size && bits::elements(x as Mask).all(|e| ranks[x ^ (1 << e)] as usize == rank);
            if circuit {
                for e in bits::elements(x as Mask) {
                    signatures[e][size] += 1;
                }
            }
        }
        Shape { bases, signatures }
    }

    fn sorted(&self) -> Vec<Vec<u16>> {
        let mut s = self.signatures.clone();
        s.sort();
        s
    }
}

/// Searches for `target` as a minor of `host`. Contract sets are independent
/// sets of size `r(host) - r(target)` taken in increasing mask order; for each,
/// delete sets are taken in increasing mask order. The first witness found is
/// replayed before it is returned. `None` means no minor exists.
pub fn has_minor(host: &Matroid, target: &Matroid) -> Option<MinorWitness> {
    let found = search_minor(host, target);
    if let Some(w) = &found {
        assert!(target.n() <= host.n() && target.rank() <= host.rank());
        if let Err(why) = w.replay(host, target) {
            panic!("minor search produced a bad witness ({why}): {w}");
        }
    }
    found
}

fn search_minor(host: &Matroid, target: &Matroid) -> Option<MinorWitness> {
    let (n, r) = (host.n(), host.rank());
    let (tn, tr) = (target.n(), target.rank());
    if tn > n || tr > r || tn - tr > n - r {
        return None;
    }
    let k = r - tr;
    let del = n - tn - k;
    let t_ranks = target.rank_table();
    let t_shape = Shape::of(tn, t_ranks);
    let t_sorted = t_shape.sorted();
    let ranks = host.rank_table();

    for c in bits::k_subsets(n, k) {
        if ranks[c as usize] as usize != k {
            continue;
        }
        let rest = host.ground() & !c;
        for d_local in bits::k_subsets(n - k, del) {
            let d = bits::expand(d_local, rest);
            let keep = rest & !d;
            if ranks[(keep | c) as usize] as usize != r {
                continue;
            }
            let local = bits::pull_back(keep, |x| ranks[(x | c) as usize] - k as u8, 0);
            let shape = Shape::of(tn, &local);
            if shape.bases != t_shape.bases || shape.sorted() != t_sorted {
                continue;
            }
            let (ca, cb) = classes_u16(&t_shape.signatures, &shape.signatures);
            if let Some(map) = find_bijection(tn, t_ranks, &local, &ca, &cb) {
                let kept: Vec<usize> = bits::elements(keep).collect();
                return Some(MinorWitness {
                    contract: c,
                    delete: d,
                    mapping: map.into_iter().map(|i| kept[i]).collect(),
                });
            }
        }
    }
    None
}

fn classes_u16(a: &[Vec<u16>], b: &[Vec<u16>]) -> (Vec<u32>, Vec<u32>) {
    let mut all: Vec<&Vec<u16>> = a.iter().chain(b).collect();
    all.sort();
    all.dedup();
    let id = |s: &Vec<u16>| all.binary_search(&s).expect("present") as u32;
    (a.iter().map(id).collect(), b.iter().map(id).collect())
}
