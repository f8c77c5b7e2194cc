//! Exhaustive scans over point sets of small projective geometries.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::constructions::Catalog;
use crate::error::{Error, Result};
use crate::gf::{pg_points, FieldMatrix, Prime};
use crate::iso::{has_minor, is_isomorphic, Fingerprint, MinorWitness};
use crate::m4::{in_m4, minor_in_m4};
use crate::matroid::Matroid;
use crate::spec::MatroidSpec;

/// One isomorphism class of simple, cogirth-at-least-4 restrictions.
#[derive(Clone, Debug, Serialize)]
pub struct SurvivorClass {
    pub n: usize,
    pub r: usize,
    /// Point set of the first representative found.
    pub points: Vec<usize>,
    /// Catalog name of the first expected minor found, if any.
    pub minor: Option<String>,
    pub witness: Option<MinorWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub r: usize,
    pub classes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub field: u32,
    pub rank: usize,
    pub universe: usize,
    pub subsets: usize,
    pub qualifying_subsets: usize,
    pub expected_minors: Vec<String>,
    pub classes: Vec<SurvivorClass>,
    /// Survivors with none of the expected minors, as replayable specs.
    pub failures: Vec<MatroidSpec>,
    pub census: Vec<CensusRow>,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Minors every survivor must have: those expected matroids whose rank fits
/// inside the host and which are representable over the field.
pub fn expected_minors(field: u32, rank: usize) -> Result<&'static [&'static str]> {
    match (field, rank) {
        (2, 3) | (2, 4) => Ok(&["F7", "MK33DUAL", "MK5"]),
        (3, 3) => Ok(&["F7MINUS", "P7"]),
        _ => Err(Error::Capability(format!(
            "sweeps cover (field, rank) in {{(2,3), (2,4), (3,3)}}; got ({field},{rank})"
        ))),
    }
}

/// Every restriction of `PG(rank - 1, field)` that is simple with cogirth at
/// least 4, up to isomorphism, checked for one of the expected minors.
pub fn sweep(field: u32, rank: usize, cat: &Catalog) -> Result<SweepResult> {
    let names = expected_minors(field, rank)?;
    let points = pg_points(Prime::new(field)?, rank)?;
    let universe = Matroid::from_matrix(&points)?;
    let ranks = universe.rank_table();
    let n = universe.n();

    let mut qualifying = 0;
    let mut reps: HashMap<Fingerprint, Vec<(Mask, Matroid)>> = HashMap::new();
    let mut order: Vec<(Fingerprint, usize)> = Vec::new();
    for s in 1..=universe.ground() {
        if !minor_in_m4(ranks, 0, s) {
            continue;
        }
        qualifying += 1;
        let (m, _) = universe.restrict(s);
        let fp = Fingerprint::of(&m);
        let bucket = reps.entry(fp.clone()).or_default();
        if bucket.iter().all(|(_, r)| is_isomorphic(r, &m).is_none()) {
            order.push((fp, bucket.len()));
            bucket.push((s, m));
        }
    }

    let targets: Vec<(&str, &Matroid)> = names
        .iter()
        .map(|&name| Ok((name, cat.matroid(name)?)))
        .collect::<Result<_>>()?;
    let mut classes = Vec::new();
    let mut failures = Vec::new();
    let mut census: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (fp, i) in &order {
        let (s, m) = &reps[fp][*i];
        assert!(in_m4(m), "survivor fails the membership re-check");
        *census.entry((m.n(), m.rank())).or_default() += 1;
        let found = targets
            .iter()
            .find_map(|(name, t)| has_minor(m, t).map(|w| (name.to_string(), w)));
        let cols: Vec<usize> = bits::elements(*s).collect();
        if found.is_none() {
            failures.push(MatroidSpec::from_matrix(&points.select_columns(&cols)));
        }
        let (minor, witness) = found.unzip();
        classes.push(SurvivorClass {
            n: m.n(),
            r: m.rank(),
            points: cols,
            minor,
            witness,
        });
    }

    Ok(SweepResult {
        field,
        rank,
        universe: n,
        subsets: (1usize << n) - 1,
        qualifying_subsets: qualifying,
        expected_minors: names.iter().map(|s| s.to_string()).collect(),
        classes,
        failures,
        census: census
            .into_iter()
            .map(|((n, r), classes)| CensusRow { n, r, classes })
            .collect(),
    })
}

/// Result of looking for a matroid among the `k`-point sets of a geometry.
#[derive(Clone, Debug, Serialize)]
pub struct PointSetScan {
    pub subsets: usize,
    pub spanning: usize,
    pub fingerprint_matches: usize,
    pub isomorphs: Vec<Vec<usize>>,
}

/// Scans every `target.n()`-subset of the columns of `points` for a copy of
/// `target`.
pub fn scan_point_sets(points: &FieldMatrix, target: &Matroid) -> Result<PointSetScan> {
    let universe = Matroid::from_matrix(points)?;
    let want = Fingerprint::of(target);
    let mut scan = PointSetScan {
        subsets: 0,
        spanning: 0,
        fingerprint_matches: 0,
        isomorphs: Vec::new(),
    };
    for s in bits::k_subsets(universe.n(), target.n()) {
        scan.subsets += 1;
        if universe.rank_of(s) != target.rank() {
            continue;
        }
        scan.spanning += 1;
        let (m, _) = universe.restrict(s);
        if Fingerprint::of(&m) != want {
            continue;
        }
        scan.fingerprint_matches += 1;
        if is_isomorphic(&m, target).is_some() {
            scan.isomorphs.push(bits::elements(s).collect());
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    #[test]
    fn binary_plane_has_only_the_fano_plane() {
        let r = sweep(2, 3, &catalog()).unwrap();
        assert!(r.passed());
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].points.len(), 7);
        assert_eq!(r.classes[0].minor.as_deref(), Some("F7"));
    }

    #[test]
    fn unsupported_pairs() {
        assert!(matches!(sweep(3, 4, &catalog()), Err(Error::Capability(_))));
        assert!(matches!(sweep(5, 3, &catalog()), Err(Error::Capability(_))));
    }

    #[test]
    fn fano_points_in_the_plane() {
        let cat = catalog();
        let plane = pg_points(Prime::TWO, 3).unwrap();
        let scan = scan_point_sets(&plane, cat.matroid("F7").unwrap()).unwrap();
        assert_eq!(scan.isomorphs.len(), 1);
    }
}
