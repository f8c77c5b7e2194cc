//! Shortcut computations checked against slow definitions.

use cogirth::bits;
use cogirth::constructions::{catalog, UNAVOIDABLE};
use cogirth::gf::{pg_points, Prime};
use cogirth::iso::element_signatures;
use cogirth::m4::{in_m4, minimality_violation};
use cogirth::{has_minor, is_isomorphic, Fingerprint, Matroid};

/// Minimality by building every proper minor and asking the girth/cogirth
/// definition directly.
fn minimal_by_definition(m: &Matroid) -> bool {
    for removed in 1..m.ground() {
        for c in bits::submasks(removed) {
            let (minor, _) = m.minor(c, removed & !c).unwrap();
            if in_m4(&minor) {
                return false;
            }
        }
    }
    in_m4(m)
}

#[test]
fn minimality_agrees_with_definition_on_small_members() {
    let cat = catalog();
    for name in ["U25", "F7", "F7MINUS", "P7", "Q9", "MK33DUAL"] {
        let m = cat.matroid(name).unwrap();
        assert!(minimal_by_definition(m), "{name}");
        assert_eq!(minimality_violation(m).unwrap(), None, "{name}");
    }
    // PG(2,3) itself is in the class and not minimal.
    let plane = Matroid::from_matrix(&pg_points(Prime::THREE, 3).unwrap()).unwrap();
    assert!(in_m4(&plane));
    assert!(minimality_violation(&plane).unwrap().is_some());
}

/// Isomorphism by trying every permutation.
fn isomorphic_by_brute_force(a: &Matroid, b: &Matroid) -> bool {
    fn permute(k: usize, perm: &mut Vec<usize>, a: &Matroid, b: &Matroid) -> bool {
        if k == perm.len() {
            return a.relabel(perm) == *b;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(k + 1, perm, a, b) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    a.n() == b.n() && permute(0, &mut (0..a.n()).collect(), a, b)
}

#[test]
fn isomorphism_agrees_with_brute_force_on_sevens() {
    let cat = catalog();
    let sevens = ["F7", "F7MINUS", "P7", "O7", "F7STAR"];
    for x in sevens {
        for y in sevens {
            let (a, b) = (cat.matroid(x).unwrap(), cat.matroid(y).unwrap());
            assert_eq!(is_isomorphic(a, b).is_some(), isomorphic_by_brute_force(a, b), "{x} {y}");
        }
    }
}

#[test]
fn fingerprints_separate_catalog_classes() {
    // Any two catalog members with different fingerprints are also not
    // isomorphic by exhaustive search over permutations that respect n only.
    let cat = catalog();
    let small: Vec<_> = cat.entries().iter().filter(|e| e.matroid.n() <= 7).collect();
    for a in &small {
        for b in &small {
            if Fingerprint::of(&a.matroid) != Fingerprint::of(&b.matroid) {
                assert!(!isomorphic_by_brute_force(&a.matroid, &b.matroid), "{} {}", a.name, b.name);
            }
        }
    }
    for a in cat.entries() {
        for b in cat.entries() {
            let same_fp = Fingerprint::of(&a.matroid) == Fingerprint::of(&b.matroid);
            if !same_fp {
                assert!(is_isomorphic(&a.matroid, &b.matroid).is_none());
            }
        }
    }
}

#[test]
fn iso_is_symmetric_on_catalog() {
    let cat = catalog();
    for a in cat.entries() {
        for b in cat.entries() {
            let ab = is_isomorphic(&a.matroid, &b.matroid);
            let ba = is_isomorphic(&b.matroid, &a.matroid);
            assert_eq!(ab.is_some(), ba.is_some(), "{} {}", a.name, b.name);
            if let Some(f) = ab {
                let mut inv = vec![0; f.len()];
                for (i, &j) in f.iter().enumerate() {
                    inv[j] = i;
                }
                assert_eq!(b.matroid.relabel(&inv), a.matroid);
            }
        }
    }
}

#[test]
fn nine_are_pairwise_non_isomorphic() {
    let cat = catalog();
    for (i, x) in UNAVOIDABLE.iter().enumerate() {
        for y in &UNAVOIDABLE[i + 1..] {
            assert!(is_isomorphic(cat.matroid(x).unwrap(), cat.matroid(y).unwrap()).is_none(), "{x} {y}");
        }
    }
}

#[test]
fn minor_containment_is_transitive_along_mr_chain() {
    let m6 = cogirth::build_mr(6).unwrap();
    let m4 = cogirth::build_mr(4).unwrap();
    assert!(has_minor(&m6, &m4).is_some());
    // Minors of M4 reached by one contraction and one deletion.
    for (c, d) in [(0b1, 0b10), (0b100000, 0b1000), (0b1000000000, 0b1)] {
        let (p, _) = m4.minor(c, d).unwrap();
        assert!(has_minor(&m4, &p).is_some());
        assert!(has_minor(&m6, &p).is_some());
    }
}

#[test]
fn witness_for_the_m6_identity_replays() {
    // The specific minor named by the identity is checked by replay; the
    // search itself may return a different, earlier witness.
    let m6 = cogirth::build_mr(6).unwrap();
    let m4 = cogirth::build_mr(4).unwrap();
    let labels = cogirth::constructions::mr_labels(6);
    let at = |s: &str| labels.iter().position(|l| l == s).unwrap();
    let c = 1 << at("a1") | 1 << at("a2");
    let d = 1 << at("b1") | 1 << at("b2");
    let (minor, relabel) = m6.minor(c, d).unwrap();
    let f = is_isomorphic(&m4, &minor).unwrap();
    let w = cogirth::MinorWitness {
        contract: c,
        delete: d,
        mapping: f.iter().map(|&i| relabel.new_to_old(i)).collect(),
    };
    assert!(w.replay(&m6, &m4).is_ok());
}

#[test]
fn signatures_are_invariant() {
    let cat = catalog();
    let q9 = cat.matroid("Q9").unwrap();
    let perm = [3, 1, 4, 0, 5, 8, 2, 6, 7];
    let moved = q9.relabel(&perm);
    let before = element_signatures(q9);
    let after = element_signatures(&moved);
    for e in 0..9 {
        assert_eq!(before[e], after[perm[e]]);
    }
}
