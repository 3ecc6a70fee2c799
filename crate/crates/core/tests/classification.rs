use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vdw_core::random::random_complex;
use vdw_core::{
    has_linear_resolution, hochster_betti, ideal_table, is_chordal, is_cohen_macaulay, is_flag,
    is_gorenstein, is_level, is_vertex_decomposable, make_vdw, summarize, verify_range, FieldSpec,
    SimplicialComplex, VdwParams,
};

fn vdw(n: usize, k: usize) -> SimplicialComplex {
    make_vdw(VdwParams::new(n, k).unwrap())
}

/// Quadratic generators: linear iff the 1-skeleton is chordal.
fn check_froberg(c: &SimplicialComplex) {
    if !is_flag(c) || !c.isolated_vertices().is_empty() {
        return;
    }
    let ideal = ideal_table(&hochster_betti(c, FieldSpec::Rationals).unwrap()).unwrap();
    if ideal.is_empty() {
        return;
    }
    let chordal = is_chordal(&c.one_skeleton()).is_chordal();
    assert_eq!(has_linear_resolution(&ideal).unwrap(), chordal, "{c:?}");
}

#[test]
fn froberg_on_flag_complexes() {
    for n in 3..=10 {
        for k in 1..n {
            check_froberg(&vdw(n, k));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        check_froberg(&random_complex(&mut rng, 7, 8));
    }
}

#[test]
fn gorenstein_cells_are_five_two_and_principal() {
    for n in 3..=12 {
        for k in 1..n - 1 {
            let expected = (n, k) == (5, 2) || k == n - 2;
            assert_eq!(
                is_gorenstein(&vdw(n, k), FieldSpec::Rationals).unwrap(),
                expected,
                "({n},{k})"
            );
        }
    }
}

#[test]
fn gorenstein_and_linear_means_one_generator() {
    for n in 3..=12 {
        for k in 1..n - 1 {
            let c = vdw(n, k);
            let table = hochster_betti(&c, FieldSpec::Rationals).unwrap();
            let ideal = ideal_table(&table).unwrap();
            if is_gorenstein(&c, FieldSpec::Rationals).unwrap()
                && has_linear_resolution(&ideal).unwrap()
            {
                assert_eq!(ideal.column_total(0), 1, "({n},{k})");
            }
        }
    }
}

#[test]
fn cohen_macaulay_cells_are_level() {
    for n in 2..=12 {
        for k in 1..n {
            let c = vdw(n, k);
            if is_cohen_macaulay(&c, FieldSpec::Rationals) {
                assert!(is_level(&c, FieldSpec::Rationals).unwrap(), "({n},{k})");
            }
        }
    }
}

#[test]
fn vertex_decomposable_iff_cohen_macaulay_on_vdw() {
    for n in 2..=12 {
        for k in 1..n {
            let c = vdw(n, k);
            assert_eq!(
                is_vertex_decomposable(&c).unwrap(),
                is_cohen_macaulay(&c, FieldSpec::Rationals),
                "({n},{k})"
            );
        }
    }
}

#[test]
fn type_is_positive_for_nonzero_ideals() {
    for n in 2..=10 {
        for k in 1..n - 1 {
            let summary =
                summarize(&hochster_betti(&vdw(n, k), FieldSpec::Rationals).unwrap()).unwrap();
            assert!(summary.cm_type >= 1, "({n},{k})");
        }
    }
}

#[test]
fn sweep_disagrees_only_on_principal_gorenstein_cells() {
    for report in verify_range(8, FieldSpec::Rationals).unwrap() {
        if report.agreement {
            continue;
        }
        assert_eq!(report.k + 2, report.n, "({},{})", report.n, report.k);
        assert_eq!(report.mismatches, vec!["gorenstein".to_string()]);
    }
}
