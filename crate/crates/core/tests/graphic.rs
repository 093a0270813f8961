use matroid_core::catalog::get_named;
use matroid_core::minor::graphic_obstruction;
use matroid_core::{check_graphic_cocircuits, is_graphic, verify_witness, BinaryMatroid, Graph};

#[test]
fn k4_cocircuits_are_all_graphic() {
    let r = check_graphic_cocircuits(&Graph::complete(4).cycle_matroid()).unwrap();
    assert_eq!(r.checks.len(), 7);
    assert!(r.all_graphic);
}

#[test]
fn empty_matroid_is_vacuously_fine() {
    let r = check_graphic_cocircuits(&BinaryMatroid::empty()).unwrap();
    assert!(r.checks.is_empty() && r.all_graphic);
}

#[test]
fn dual_of_g18_has_a_non_graphic_cocircuit() {
    let m = get_named("g18").unwrap().dual();
    let r = check_graphic_cocircuits(&m).unwrap();
    assert!(!r.all_graphic);
    let bad = r.checks.iter().find(|c| !c.graphic).unwrap();
    assert!(bad.obstruction.is_some());
}

#[test]
fn obstruction_witnesses_verify() {
    for name in ["F7", "F7*", "M*(K5)", "M*(K33)"] {
        let m = get_named(name).unwrap();
        let (ex, w) = graphic_obstruction(&m).unwrap().unwrap();
        assert!(
            verify_witness(&m, &get_named(&ex).unwrap(), &w).unwrap(),
            "{name}"
        );
    }
    // every case matrix is a graphic matroid or the dual of one
    for name in ["g7", "g18"] {
        assert!(is_graphic(&get_named(name).unwrap()).unwrap(), "{name}");
    }
}

#[test]
#[ignore = "slow in debug builds"]
fn larger_case_matrices_are_graphic() {
    for name in ["g1", "g24", "g29"] {
        assert!(is_graphic(&get_named(name).unwrap()).unwrap(), "{name}");
    }
}
