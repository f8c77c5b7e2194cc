//! The battery of machine-checked claims behind `verify-paper`.
//!
//! Claim ids are stable strings; the book lists what each one checks.

use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::constructions::{
    self, build_mr, long_lines, lines_from_letters, mr_labels, mr_prescribed_sets, Catalog, Sources,
    O7_LABELS, O7_LINES, P7_LABELS, P7_LINES, UNAVOIDABLE,
};
use crate::error::Error;
use crate::gf::{self, Prime};
use crate::iso::{has_minor, is_isomorphic};
use crate::m4::{element_structure, in_m4, is_minor_minimal_m4};
use crate::report::{ClaimReport, Status, Timer};
use crate::sweep::{scan_point_sets, sweep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Catalog,
    Lemmas,
    Duals,
    Sweeps,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "catalog" => Ok(Suite::Catalog),
            "lemmas" => Ok(Suite::Lemmas),
            "duals" => Ok(Suite::Duals),
            "sweeps" => Ok(Suite::Sweeps),
            _ => Err(Error::Spec(format!(
                "unknown suite `{s}` (expected all, catalog, lemmas, duals or sweeps)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::All => "all",
            Suite::Catalog => "catalog",
            Suite::Lemmas => "lemmas",
            Suite::Duals => "duals",
            Suite::Sweeps => "sweeps",
        };
        f.write_str(s)
    }
}

/// Runs a suite against the standard catalog.
pub fn verify_paper(suite: Suite) -> Vec<ClaimReport> {
    verify_with(suite, &Sources::default())
}

/// Runs a suite against a catalog built from `src`. Claims are sorted by id.
pub fn verify_with(suite: Suite, src: &Sources) -> Vec<ClaimReport> {
    let t = Timer::start();
    let cat = match Catalog::build(src) {
        Ok(cat) => cat,
        Err(e) => return vec![t.fail("CAT-build", e.to_string())],
    };
    let mut out = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Catalog) {
        out.extend(catalog_claims(&cat, src));
    }
    if want(Suite::Lemmas) {
        out.extend(lemma_claims(&cat));
    }
    if want(Suite::Duals) {
        out.extend(dual_claims(&cat));
    }
    if want(Suite::Sweeps) {
        out.extend(sweep_claims(&cat));
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Audits, figure matrices, the Q9 facts and the nine structural claims.
pub fn catalog_claims(cat: &Catalog, src: &Sources) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for e in cat.entries() {
        let t = Timer::start();
        let bad = e.audit();
        let x = e.expected;
        out.push(t.check(
            &format!("CAT-audit-{}", e.name),
            bad.is_empty(),
            if bad.is_empty() {
                format!("n={} r={} girth={} cogirth={}", x.n, x.r, x.girth, x.cogirth)
            } else {
                bad.join("; ")
            },
        ));
    }

    for (id, name, labels, lines) in [
        ("CAT-P7-lines", "P7", &P7_LABELS, &P7_LINES[..]),
        ("CAT-O7-lines", "O7", &O7_LABELS, &O7_LINES[..]),
    ] {
        let t = Timer::start();
        let got = long_lines(&cat.get(name).unwrap().matroid);
        let want = lines_from_letters(labels, lines);
        let show = |ls: &[bits::Mask]| {
            ls.iter()
                .map(|&l| bits::elements(l).map(|e| labels[e]).collect::<String>())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push(t.check(id, got == want, format!("lines {} (expected {})", show(&got), show(&want))));
    }

    out.extend(constructions::verify_figure_matrices(src, cat));
    out.extend(q9_claims(cat));

    for name in UNAVOIDABLE {
        let m = &cat.get(name).unwrap().matroid;
        let t = Timer::start();
        out.push(t.check(
            &format!("THM1.2-in-m4-{name}"),
            in_m4(m),
            format!("girth {}, cogirth {}, simple {}", m.girth(), m.cogirth(), m.is_simple()),
        ));
        out.push(element_structure(m, &format!("THM1.2-structure-{name}")));
        out.push(is_minor_minimal_m4(m, &format!("THM1.2-minimality-{name}")));
    }
    out
}

/// Q9 is affine over GF(3) and is not a restriction of PG(3,2).
pub fn q9_claims(cat: &Catalog) -> Vec<ClaimReport> {
    let q9 = cat.get("Q9").unwrap();
    let mut out = Vec::new();

    let t = Timer::start();
    let id = "Q9-affine-gf3";
    out.push(match q9.matrix.as_ref().map(gf::affine_over_gf3) {
        Some(Ok(true)) => {
            let f = gf::separating_functional(q9.matrix.as_ref().unwrap()).unwrap_or_default();
            t.pass(id, format!("functional {f:?} is nonzero on every column"))
        }
        Some(Ok(false)) => t.fail(id, "every functional vanishes on some column"),
        Some(Err(e)) => t.fail(id, e.to_string()),
        None => t.fail(id, "no matrix recorded"),
    });

    let t = Timer::start();
    let id = "Q9-not-binary";
    let scan = gf::pg_points(Prime::TWO, 4).and_then(|pg| scan_point_sets(&pg, &q9.matroid));
    out.push(match scan {
        Ok(s) => t.check(
            id,
            s.isomorphs.is_empty() && s.subsets == 5005,
            format!(
                "{} 9-point sets of PG(3,2), {} spanning, {} fingerprint matches, isomorphs {:?}",
                s.subsets, s.spanning, s.fingerprint_matches, s.isomorphs
            ),
        ),
        Err(e) => t.fail(id, e.to_string()),
    });
    out
}

/// The `M_r` identities.
pub fn lemma_claims(cat: &Catalog) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for r in [6, 7] {
        let t = Timer::start();
        let id = format!("L3.9-r{r}");
        let big = build_mr(r).unwrap();
        let small = build_mr(r - 2).unwrap();
        let labels = mr_labels(r);
        let at = |name: &str| labels.iter().position(|l| l == name).unwrap();
        let c = 1 << at("a1") | 1 << at("a2");
        let d = 1 << at("b1") | 1 << at("b2");
        let (minor, relabel) = big.minor(c, d).unwrap();
        out.push(match is_isomorphic(&minor, &small) {
            Some(map) => {
                let pairs: Vec<String> = map
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| format!("{}->{}", labels[relabel.new_to_old(i)], mr_labels(r - 2)[j]))
                    .collect();
                t.pass(&id, format!("M{r}/a1,a2\\b1,b2 = M{}: {}", r - 2, pairs.join(" ")))
            }
            None => t.fail(&id, format!("M{r}/a1,a2\\b1,b2 is not isomorphic to M{}", r - 2)),
        });
    }

    let t = Timer::start();
    let (m6, m4) = (build_mr(6).unwrap(), build_mr(4).unwrap());
    out.push(match has_minor(&m6, &m4) {
        Some(w) => t.pass("MR-r6-contains-r4", format!("first witness: {w}")),
        None => t.fail("MR-r6-contains-r4", "M4 is not a minor of M6"),
    });

    for (id, r, name) in [("MR-K5", 4, "MK5"), ("MR-K222", 5, "MK222")] {
        let t = Timer::start();
        let m = build_mr(r).unwrap();
        out.push(match is_isomorphic(&m, cat.matroid(name).unwrap()) {
            Some(map) => t.pass(id, format!("bijection {map:?}")),
            None => t.fail(id, format!("M{r} is not isomorphic to {name}")),
        });
    }

    for r in 4..=7 {
        let t = Timer::start();
        let m = build_mr(r).unwrap();
        let labels = mr_labels(r);
        let (tri, coc) = mr_prescribed_sets(r);
        let circuits = m.circuits();
        let cocircuits = m.cocircuits();
        let name = |x: bits::Mask| {
            bits::elements(x).map(|e| labels[e].as_str()).collect::<Vec<_>>().join(",")
        };
        let missing: Vec<String> = tri
            .iter()
            .filter(|&&x| !circuits.contains(x))
            .map(|&x| format!("triangle {{{}}}", name(x)))
            .chain(
                coc.iter()
                    .filter(|&&x| !cocircuits.contains(x))
                    .map(|&x| format!("cocircuit {{{}}}", name(x))),
            )
            .collect();
        out.push(t.check(
            &format!("MR-structure-r{r}"),
            missing.is_empty(),
            if missing.is_empty() {
                format!("all {} triangles and {} 4-cocircuits present", tri.len(), coc.len())
            } else {
                format!("missing {}", missing.join("; "))
            },
        ));
    }
    out
}

/// Every dual of the nine has girth at least 4 and cogirth at least 3.
pub fn dual_claims(cat: &Catalog) -> Vec<ClaimReport> {
    UNAVOIDABLE
        .iter()
        .map(|name| {
            let t = Timer::start();
            let d = cat.matroid(name).unwrap().dual();
            let (g, cg) = (d.girth(), d.cogirth());
            t.check(
                &format!("DUAL-{name}"),
                g.at_least(4) && cg.at_least(3),
                format!("dual girth {g}, cogirth {cg}"),
            )
        })
        .collect()
}

pub fn sweep_claims(cat: &Catalog) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for (field, rank) in [(2, 3), (2, 4), (3, 3)] {
        let t = Timer::start();
        let id = format!("SWEEP-gf{field}-r{rank}");
        out.push(match sweep(field, rank, cat) {
            Ok(s) => {
                let census: Vec<String> = s.census.iter().map(|c| format!("({},{})x{}", c.n, c.r, c.classes)).collect();
                let mut ok = s.passed();
                let mut detail = format!(
                    "{} qualifying subsets, {} classes, census {}, {} failures",
                    s.qualifying_subsets,
                    s.classes.len(),
                    census.join(" "),
                    s.failures.len()
                );
                if (field, rank) == (2, 3) {
                    // A 7-element class with an F7 minor is F7 itself.
                    let sole_fano = s.classes.len() == 1
                        && s.classes[0].n == 7
                        && s.classes[0].minor.as_deref() == Some("F7");
                    ok &= sole_fano;
                    detail.push_str(if sole_fano { "; sole survivor F7" } else { "; survivors are not exactly F7" });
                }
                t.check(&id, ok, detail)
            }
            Err(e) => t.fail(&id, e.to_string()),
        });
    }
    out
}

/// Count of claims with each status.
pub fn tally(claims: &[ClaimReport]) -> (usize, usize, usize) {
    claims.iter().fold((0, 0, 0), |(p, f, s), c| match c.status {
        Status::Pass => (p + 1, f, s),
        Status::Fail => (p, f + 1, s),
        Status::Skipped => (p, f, s + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("Lemmas".parse::<Suite>().unwrap(), Suite::Lemmas);
        assert!("everything".parse::<Suite>().is_err());
        assert_eq!(Suite::Duals.to_string(), "duals");
    }

    #[test]
    fn duals_pass() {
        let claims = verify_paper(Suite::Duals);
        assert_eq!(claims.len(), 9);
        assert!(claims.iter().all(|c| c.passed()), "{claims:#?}");
    }
}
