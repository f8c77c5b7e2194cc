//! Membership and minor-minimality for the class of simple matroids whose
//! cocircuits all have at least four elements.

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::report::{ClaimReport, Timer};

/// Largest ground set for which minimality is decided (3^n minors).
pub const MINIMALITY_LIMIT: usize = 13;

/// Girth at least 3 and cogirth at least 4.
pub fn in_m4(m: &Matroid) -> bool {
    m.girth().at_least(3) && m.cogirth().at_least(4)
}

/// Membership of the minor `M / c | s` read straight off `M`'s rank table,
/// where `s` is disjoint from `c`: the minor's rank function is
/// `X ↦ r(X ∪ c) - r(c)` on subsets of `s`.
///
/// A cocircuit with at most three elements lies inside some three-element
/// subset `Y` of `s` (or `Y = s` when `|s| <= 3`), and exists exactly when
/// removing some such `Y` drops the rank.
pub fn minor_in_m4(ranks: &[u8], c: Mask, s: Mask) -> bool {
    let rc = ranks[c as usize];
    let r = |x: Mask| ranks[(x | c) as usize] - rc;
    let elems: Vec<usize> = bits::elements(s).collect();
    for (i, &e) in elems.iter().enumerate() {
        if r(1 << e) == 0 {
            return false;
        }
        if elems[i + 1..].iter().any(|&f| r(1 << e | 1 << f) < 2) {
            return false;
        }
    }
    let rs = r(s);
    let k = elems.len().min(3);
    if k == 0 {
        return true;
    }
    bits::k_subsets(elems.len(), k).all(|y| r(s & !bits::expand(y, s)) == rs)
}

/// A proper minor `M / c \ d` in the class, if any. Minors are visited by
/// the number of removed elements, so the first one found is as large as
/// possible. The empty minor is not counted: it lies in the class
/// vacuously and is a minor of everything.
pub fn minimality_violation(m: &Matroid) -> Result<Option<(Mask, Mask)>> {
    if m.n() > MINIMALITY_LIMIT {
        return Err(Error::Capacity(format!(
            "minimality is decided for at most {MINIMALITY_LIMIT} elements; got {}",
            m.n()
        )));
    }
    let n = m.n();
    let ranks = m.rank_table();
    for k in 1..n {
        for removed in bits::k_subsets(n, k) {
            for c in bits::submasks(removed) {
                if minor_in_m4(ranks, c, m.ground() & !removed) {
                    return Ok(Some((c, removed & !c)));
                }
            }
        }
    }
    Ok(None)
}

/// Passes when `m` is in the class and no proper nonempty minor is.
/// Matroids above [`MINIMALITY_LIMIT`] are reported as skipped.
pub fn is_minor_minimal_m4(m: &Matroid, id: &str) -> ClaimReport {
    let t = Timer::start();
    if !in_m4(m) {
        return t.fail(
            id,
            format!("not in the class: girth {}, cogirth {}", m.girth(), m.cogirth()),
        );
    }
    match minimality_violation(m) {
        Err(e) => t.finish(id, crate::report::Status::Skipped, e.to_string()),
        Ok(None) => t.pass(
            id,
            format!("all {} proper nonempty minors fall outside the class", 3usize.pow(m.n() as u32) - 2),
        ),
        Ok(Some((c, d))) => {
            let (minor, _) = m.minor(c, d).expect("disjoint");
            debug_assert!(in_m4(&minor));
            t.fail(
                id,
                format!(
                    "proper minor in the class: contract {} delete {} ({} elements, rank {})",
                    bits::fmt_mask(c),
                    bits::fmt_mask(d),
                    minor.n(),
                    minor.rank()
                ),
            )
        }
    }
}

/// Every element lies in a triangle and in a 4-element cocircuit.
pub fn element_structure(m: &Matroid, id: &str) -> ClaimReport {
    let t = Timer::start();
    let triangles = m.triangles();
    let quads: Vec<Mask> = m.cocircuits().iter().filter(|&d| bits::size(d) == 4).collect();
    let lacking: Vec<String> = (0..m.n())
        .filter_map(|e| {
            let tri = triangles.containing(e).next().is_some();
            let quad = quads.iter().any(|d| d >> e & 1 == 1);
            match (tri, quad) {
                (true, true) => None,
                (false, true) => Some(format!("{e}: no triangle")),
                (true, false) => Some(format!("{e}: no 4-cocircuit")),
                (false, false) => Some(format!("{e}: neither")),
            }
        })
        .collect();
    if lacking.is_empty() {
        t.pass(
            id,
            format!(
                "{} triangles and {} 4-cocircuits cover all {} elements",
                triangles.len(),
                quads.len(),
                m.n()
            ),
        )
    } else {
        t.fail(id, lacking.join("; "))
    }
}
