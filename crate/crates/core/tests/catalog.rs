use cogirth::constructions::{catalog, k222_figure_matrix, Sources};
use cogirth::claims::q9_claims;
use cogirth::gf::affine_over_gf3;
use cogirth::{Catalog, Girth, Matroid};

#[test]
fn expected_tuples() {
    let cat = catalog();
    let tuple = |name: &str| {
        let m = cat.matroid(name).unwrap();
        (m.n(), m.rank())
    };
    assert_eq!(tuple("Q9"), (9, 4));
    assert_eq!(tuple("MK33DUAL"), (9, 4));
    assert_eq!(tuple("MK5"), (10, 4));
    assert_eq!(tuple("MK222"), (12, 5));
    assert_eq!(tuple("H12"), (12, 5));
    for name in ["F7", "F7MINUS", "P7"] {
        assert_eq!(tuple(name), (7, 3));
    }
    assert_eq!(tuple("U25"), (5, 2));
    assert_eq!(cat.matroid("F7STAR").unwrap().girth(), Girth::Finite(4));
}

#[test]
fn k5_has_125_bases() {
    // Cayley: K5 has 5^3 spanning trees.
    assert_eq!(catalog().matroid("MK5").unwrap().bases().len(), 125);
}

#[test]
fn octahedron_drawing_matches_matrix_labels() {
    // The [I5|A5] columns carry x-labels; reordering them to x1..x12 gives
    // a matroid isomorphic to the labelled octahedron.
    let src = Sources::default();
    let m = k222_figure_matrix(&src).unwrap();
    let order: Vec<usize> = (1..=12).map(|i| m.column_index(&format!("x{i}")).unwrap()).collect();
    let sorted = Matroid::from_matrix(&m.select_columns(&order)).unwrap();
    let oct = catalog().matroid("MK222").unwrap().clone();
    assert!(cogirth::is_isomorphic(&sorted, &oct).is_some());
}

#[test]
fn q9_is_affine() {
    let cat = catalog();
    assert!(affine_over_gf3(cat.get("Q9").unwrap().matrix.as_ref().unwrap()).unwrap());
}

/// Every single-entry perturbation of the Q9 matrix is caught by the Q9 or
/// 13-element extension checks.
#[test]
fn every_q9_perturbation_is_caught() {
    let base = Sources::default();
    for i in 0..4 {
        for j in 0..5 {
            let mut src = base.clone();
            src.q9[i][j] = (src.q9[i][j] + 1).rem_euclid(3);
            let cat = match Catalog::build(&src) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let mut reports = q9_claims(&cat);
            reports.extend(cogirth::constructions::verify_figure_matrices(&src, &cat));
            reports.extend(cat.get("Q9").unwrap().audit().into_iter().map(|s| {
                cogirth::report::Timer::start().fail("audit", s)
            }));
            assert!(reports.iter().any(|r| r.failed()), "entry ({i},{j}) slipped through");
        }
    }
}
