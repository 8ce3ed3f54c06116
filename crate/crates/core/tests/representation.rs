use z22osc::fock::{generator_matrix, matrix_of, Cutoff, SparseOperator};
use z22osc::verify::{check_ccr, check_witten};
use z22osc::{Generator, Mode, Polynomial};

#[test]
fn ccr_holds_on_the_safe_subspace_at_several_cutoffs() {
    for n in [3, 4, 6] {
        let report = check_ccr(Cutoff::new(n).unwrap()).unwrap();
        assert!(report.passed(), "cutoff {n}: {:?}", report.notes);
        assert!(report.residual().unwrap() <= 1e-12);
    }
}

#[test]
fn fermion_species_commute_exactly() {
    let c = Cutoff::new(4).unwrap();
    for (x, y) in [
        (
            Generator::Annihilate(Mode::F1),
            Generator::Annihilate(Mode::F2),
        ),
        (Generator::Create(Mode::F1), Generator::Annihilate(Mode::F2)),
        (Generator::Create(Mode::F1), Generator::Create(Mode::F2)),
    ] {
        let (mx, my) = (generator_matrix(x, c), generator_matrix(y, c));
        assert_eq!(&mx * &my, &my * &mx, "{x} {y}");
    }
}

#[test]
fn full_truncation_breaks_the_boson_ccr_only_at_the_top_level() {
    let c = Cutoff::new(3).unwrap();
    let b = generator_matrix(Generator::Annihilate(Mode::B), c);
    let bd = generator_matrix(Generator::Create(Mode::B), c);
    let defect = &b.commutator(&bd) - &SparseOperator::identity(c.dim());
    assert!(defect.max_abs() > 1.0);
    assert_eq!(
        matrix_of(&Polynomial::identity(), c),
        SparseOperator::identity(c.dim())
    );
}

#[test]
fn witten_check_passes() {
    let report = check_witten(Cutoff::new(4).unwrap()).unwrap();
    assert!(report.passed(), "{:?}", report.notes);
}
