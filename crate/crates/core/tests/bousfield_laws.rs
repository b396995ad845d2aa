use bousfield_core::bousfield::{lattice_representative, phi_map, verify_main_theorem};
use bousfield_core::builtin;
use bousfield_core::enumerate::{lattice_corpus, monoid_corpus};
use bousfield_core::oracle;
use bousfield_core::support::SupportObject;
use bousfield_core::{BousfieldClass, BousfieldLattice, CMonoid0};

#[test]
fn general_monoids_against_oracles() {
    for m in monoid_corpus(5).unwrap().items {
        let report = oracle::check_monoid(&m).unwrap();
        assert!(report.ok(), "{:?}", report.mismatches);
        let bl = BousfieldLattice::enumerate(&m);
        for i in 0..bl.len() {
            for j in 0..bl.len() {
                assert!(bl.leq(bl.tensor(i, j), bl.meet(i, j)));
                let x = SupportObject::new(&m, bl.representative(i)).unwrap();
                let y = SupportObject::new(&m, bl.representative(j)).unwrap();
                let sum = bousfield_core::support::coproduct(&m, [x, y]).unwrap();
                assert_eq!(bl.index_of(&sum), bl.join(i, j));
            }
        }
    }
}

#[test]
fn meet_monoid_laws() {
    for l in lattice_corpus(6, true).unwrap().items {
        let m = CMonoid0::from_lattice_meet(&l);
        let bl = BousfieldLattice::enumerate(&m);
        // every class is A(k_l) for l the join of a support
        for s in m.nonzero().subsets() {
            let x = SupportObject::new(&m, s).unwrap();
            let rep = lattice_representative(&l, &x);
            assert_eq!(
                BousfieldClass::of(&x),
                BousfieldClass::of(&SupportObject::generator(&m, rep))
            );
        }
        let tl = bl.to_lattice();
        assert!(tl.is_distributive());
        for i in 0..bl.len() {
            assert_eq!(bl.negation(bl.negation(i)), i);
            for j in 0..bl.len() {
                assert_eq!(bl.meet(i, j), bl.tensor(i, j));
            }
        }
    }
}

#[test]
fn phi_preserves_joins_of_all_subsets() {
    for l in lattice_corpus(6, true).unwrap().items {
        let r = phi_map(&l).unwrap();
        assert!(r.arbitrary_joins_checked);
        assert!(r.holds());
    }
}

#[test]
fn main_theorem_on_small_corpus() {
    for l in lattice_corpus(7, true).unwrap().items {
        let r = verify_main_theorem(&l).unwrap();
        assert!(r.holds(), "{:?}", l.names());
        assert_eq!(r.booleanization.algebra.len(), r.phi.bousfield.len());
    }
    for l in [builtin::two_points_and_generic(), builtin::dense_point()] {
        assert!(verify_main_theorem(&l).unwrap().holds());
    }
}

#[test]
fn implication_refused_outside_frames() {
    // Implication exists exactly on the distributive Bousfield lattices.
    let mut saw_non_frame = false;
    for m in monoid_corpus(5).unwrap().items {
        let bl = BousfieldLattice::enumerate(&m);
        let distributive = bl.to_lattice().is_distributive();
        assert_eq!(bl.implication(0, 0).is_ok(), distributive);
        saw_non_frame |= !distributive;
    }
    println!("non-distributive Bousfield lattice found in corpus: {saw_non_frame}");
}
