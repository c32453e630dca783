//! Acceptance suite: one test per criterion, each printing a pass line
//! once its assertions have gone through. Everything is exhaustive at desk
//! scale; the frozen counts come from the enumeration oracle and are
//! cross-checked against the published values for labeled posets and
//! labeled lattices.

use dualis_core::filters::{check_optimal_routes, check_prime_complements, Deductive};
use dualis_core::fixtures;
use dualis_core::logic::{FiniteAlgebra, LogicPresentation, TermBuilder};
use dualis_core::poset::for_each_labeled_poset;
use dualis_core::properties;
use dualis_core::representation::{
    build_representation, check_base_independence, check_section_4_isos, check_theorem_3_3,
    ClosureBase,
};
use dualis_core::semilattice::{
    check_envelope, check_prime_complement_characterizations, MeetSemilattice,
};
use dualis_core::space::{
    b_structures, check_natural_isos, check_xi, dual_space, verify_space, SpaceError,
};
use dualis_core::subset::Subset;

/// Labeled posets on 0..=5 elements, from the enumeration oracle.
const LABELED_POSETS: [u64; 6] = [1, 1, 3, 19, 219, 4231];
/// Labeled meet-semilattices with top (equivalently labeled lattices,
/// since finite meet-semilattices with top have all joins).
const LABELED_SEMILATTICES: [u64; 6] = [0, 1, 2, 6, 36, 380];
/// The distributive ones. On five elements the 140 non-distributive
/// instances are exactly the 20 labelings of the diamond plus the 120 of
/// the pentagon.
const LABELED_DISTRIBUTIVE: [u64; 6] = [0, 1, 2, 6, 36, 240];

/// The fixture pairs every per-algebra criterion runs over.
fn fixture_pairs() -> Vec<(LogicPresentation, FiniteAlgebra)> {
    vec![
        (fixtures::l_top_meet(), fixtures::c2_meet_algebra()),
        (fixtures::l_top_meet(), fixtures::c3_meet_algebra()),
        (fixtures::l_top_meet(), fixtures::m4_algebra()),
        (fixtures::l_hil(), fixtures::h2()),
        (fixtures::l_hil(), fixtures::g3()),
        (fixtures::l_pos(), fixtures::m4_pos_algebra()),
        (fixtures::l_hey(), fixtures::c3_heyting()),
        (fixtures::l_bot(), fixtures::c3_heyting_bot()),
    ]
}

#[test]
fn acceptance_1_semilattice_characterization_sweep() {
    let mut semilattice_counts = [0u64; 6];
    let mut distributive_counts = [0u64; 6];
    for n in 0..=5usize {
        let mut posets = 0u64;
        for_each_labeled_poset(n, |p| {
            posets += 1;
            let Some(m) = MeetSemilattice::from_poset(p) else {
                return;
            };
            semilattice_counts[n] += 1;
            // the three distributivity characterizations must agree
            let distributive = m
                .is_distributive()
                .expect("distributivity characterizations disagree");
            let irr = m.irreducible_filters();
            let opt = m.optimal_filters();
            assert!(irr.is_subfamily_of(&opt), "irreducible filter escapes the optimal ones");
            if distributive {
                distributive_counts[n] += 1;
                assert_eq!(irr, opt, "distributive instance with irreducible != optimal");
                let report = check_prime_complement_characterizations(&m);
                assert!(report.passed(), "{}", report.render());
            }
        });
        assert_eq!(posets, LABELED_POSETS[n], "labeled poset count changed at n={n}");
    }
    assert_eq!(semilattice_counts, LABELED_SEMILATTICES);
    assert_eq!(distributive_counts, LABELED_DISTRIBUTIVE);
    println!(
        "acceptance 1 (characterization sweep over {} semilattices): PASS",
        semilattice_counts.iter().sum::<u64>()
    );
}

#[test]
fn acceptance_2_envelope_universality_sweep() {
    let mut checked = 0u64;
    for n in 1..=5usize {
        for_each_labeled_poset(n, |p| {
            let Some(m) = MeetSemilattice::from_poset(p) else {
                return;
            };
            if !m.is_distributive().expect("characterizations agree") {
                return;
            }
            let report = check_envelope(&m).expect("envelope construction");
            assert!(report.passed(), "n={n}: {}", report.render());
            checked += 1;
        });
    }
    assert_eq!(checked, LABELED_DISTRIBUTIVE.iter().sum::<u64>());
    println!("acceptance 2 (envelope universality on {checked} distributive instances): PASS");
}

#[test]
fn acceptance_3_optimal_filter_routes_cross_validation() {
    for (logic, algebra) in fixture_pairs() {
        let ded = Deductive::new(&logic, &algebra).unwrap();
        assert!(ded.is_s_algebra(), "{}/{} not reduced", logic.name, algebra.name);
        assert!(
            ded.is_filter_distributive_on(),
            "{}/{} filter lattice not distributive",
            logic.name,
            algebra.name
        );
        let report = check_optimal_routes(&ded).unwrap();
        assert!(report.passed(), "{}/{}: {}", logic.name, algebra.name, report.render());
        assert!(report.notes.is_empty(), "route comparison ran outside hypotheses");
        let primes = check_prime_complements(&ded);
        assert!(primes.passed(), "{}/{}: {}", logic.name, algebra.name, primes.render());
    }
    println!("acceptance 3 (two-route optimal and irreducible filters on all fixtures): PASS");
}

#[test]
fn acceptance_4_representation_reports() {
    for (logic, algebra) in fixture_pairs() {
        let ded = Deductive::new(&logic, &algebra).unwrap();
        let base = ClosureBase::optimal(&ded).unwrap();
        let (repr, build_report) = build_representation(&ded, base).unwrap();
        assert!(build_report.passed(), "{}/{}: {}", logic.name, algebra.name, build_report.render());
        let r33 = check_theorem_3_3(&ded, &repr).unwrap();
        assert!(r33.passed(), "{}/{}: {}", logic.name, algebra.name, r33.render());
        let r4 = check_section_4_isos(&ded).unwrap();
        assert!(r4.passed(), "{}/{}: {}", logic.name, algebra.name, r4.render());
        let base_free = check_base_independence(&ded).unwrap();
        assert!(base_free.passed(), "{}/{}: {}", logic.name, algebra.name, base_free.render());
    }
    println!("acceptance 4 (representation and hull-semilattice reports clean): PASS");
}

#[test]
fn acceptance_5_space_axioms() {
    for (logic, algebra) in fixture_pairs() {
        let space = dual_space(&logic, &algebra).unwrap();
        let verify = verify_space(&space).unwrap();
        assert!(verify.passed(), "{}/{}: {}", logic.name, algebra.name, verify.render());
        let xi = check_xi(&space).unwrap();
        assert!(xi.passed(), "{}/{}: {}", logic.name, algebra.name, xi.render());
        let (_, bs) = b_structures(&space).unwrap();
        assert!(bs.passed(), "{}/{}: {}", logic.name, algebra.name, bs.render());
        // the bottom-element and bottom-family biconditionals were part of
        // the verification; assert they ran
        assert!(verify.check("bottom-member").is_some());
        assert!(verify.check("bottom-family-by-intersection").is_some());
    }
    // the trivial algebra dualizes to the empty space and stays clean
    let logic = fixtures::l_top_meet();
    let trivial = FiniteAlgebra::trivial(&logic.signature);
    let space = dual_space(&logic, &trivial).unwrap();
    assert_eq!(space.points(), 0);
    assert_eq!(space.family.len(), 1);
    let verify = verify_space(&space).unwrap();
    assert!(verify.passed(), "empty space: {}", verify.render());
    let xi = check_xi(&space).unwrap();
    assert!(xi.passed(), "empty space: {}", xi.render());
    let (_, bs) = b_structures(&space).unwrap();
    assert!(bs.passed(), "empty space: {}", bs.render());
    println!("acceptance 5 (space axioms on all fixture duals and the empty space): PASS");
}

#[test]
fn acceptance_6_category_laws() {
    let logic = fixtures::l_top_meet();
    let homs = fixtures::meet_hom_corpus();
    assert!(homs.len() >= 6, "corpus must carry at least six homomorphisms");
    assert!(homs.iter().any(|h| h.name.starts_with("id_")));
    // a composable pair exists and its composite is in scope of the checks
    let (f, g, _) = fixtures::composable_pair();
    assert_eq!(f.target.name, g.source.name);
    let report = check_natural_isos(&logic, &homs).unwrap();
    assert!(report.passed(), "{}", report.render());
    // the same laws hold for the implication corpus
    let hil = fixtures::l_hil();
    let hil_report = check_natural_isos(&hil, &fixtures::hil_hom_corpus()).unwrap();
    assert!(hil_report.passed(), "{}", hil_report.render());
    println!("acceptance 6 (functor laws, star laws, naturality squares): PASS");
}

#[test]
fn acceptance_7_property_ladder() {
    // conjunction on the meet-logic fixtures
    let meet = fixtures::l_top_meet();
    let pc_witness = meet.witnesses.pc.clone().unwrap();
    for algebra in [fixtures::c2_meet_algebra(), fixtures::c3_meet_algebra(), fixtures::m4_algebra()] {
        let report = properties::check_pc(&meet, &pc_witness, &algebra).unwrap();
        assert!(report.passed(), "{}: {}", algebra.name, report.render());
    }
    // negative control: an implication posing as a conjunction fails the
    // transfer at (0,0)
    let hil = fixtures::l_hil();
    let b = TermBuilder::new(&hil.signature);
    let fake_pc = b.op("imp", vec![b.var(0), b.var(1)]);
    let control = properties::check_pc(&hil, &fake_pc, &fixtures::h2()).unwrap();
    let transfer = control.check("conjunction-transfer").unwrap();
    assert!(!transfer.passed());
    assert!(transfer.failures[0].contains("(a,b)=(0,0)"), "{}", transfer.failures[0]);

    // disjunction on the positive diamond, with the identity and the chain
    // embedding as the supplied homomorphisms
    let pos = fixtures::l_pos();
    let nabla = pos.witnesses.pdi.clone().unwrap();
    let m4p = fixtures::m4_pos_algebra();
    let homs = vec![
        fixtures::HomFixture {
            name: "id_M4".into(),
            logic: pos.clone(),
            source: m4p.clone(),
            target: m4p.clone(),
            map: vec![0, 1, 2, 3],
        },
        fixtures::HomFixture {
            name: "c2_into_m4".into(),
            logic: pos.clone(),
            source: fixtures::c2_pos_algebra(),
            target: m4p.clone(),
            map: vec![0, 3],
        },
    ];
    let pdi = properties::check_pdi(&pos, &nabla, &m4p, &homs).unwrap();
    assert!(pdi.passed(), "{}", pdi.render());
    assert!(pdi.check("single-disjunction-unions-images").is_some());
    // negative control: the meet term posing as a disjunction fails the
    // transfer at the empty parameter set on the incomparable pair
    let fake_nabla = {
        let b = TermBuilder::new(&meet.signature);
        vec![b.op("and", vec![b.var(0), b.var(1)])]
    };
    let control = properties::check_pdi(&meet, &fake_nabla, &fixtures::m4_algebra(), &[]).unwrap();
    let transfer = control.check("disjunction-transfer").unwrap();
    assert!(!transfer.passed());
    assert!(
        transfer.failures.iter().any(|w| w.contains("X={}") && w.contains("(a,b)=(1,2)")),
        "documented witness missing: {:?}",
        transfer.failures
    );

    // dual-side disjunction checks on the positive diamond and on the cube;
    // at finite scale the family of any verified dual is all up-sets of the
    // point order, so both report union-closed and otherwise clean. The
    // splitting condition runs against the dual of the chain embedding.
    let space = dual_space(&pos, &m4p).unwrap();
    let (embed_rel, embed_src, embed_tgt, _) =
        dualis_core::space::dual_morphism(&[0, 3], &pos, &fixtures::c2_pos_algebra(), &m4p)
            .unwrap();
    let single =
        properties::check_pdi_single_dual(&space, &[(&embed_rel, &embed_src, &embed_tgt)])
            .unwrap();
    assert!(single.passed(), "{}", single.render());
    assert!(single.check("morphism-image-splitting").is_some());
    let cube_space = dual_space(&meet, &fixtures::cube_algebra()).unwrap();
    let cube = properties::check_pdi_single_dual(&cube_space, &[]).unwrap();
    assert!(cube.check("family-union-closed").unwrap().passed());
    assert!(cube.passed(), "{}", cube.render());

    // deduction-detachment on the implication fixtures
    let ddt = hil.witnesses.ddt.clone().unwrap();
    let uddt_h2 = properties::check_uddt(&hil, &ddt, &fixtures::h2()).unwrap();
    assert!(uddt_h2.passed(), "{}", uddt_h2.render());
    let hey = fixtures::l_hey();
    let hey_ddt = hey.witnesses.ddt.clone().unwrap();
    let c3h = fixtures::c3_heyting();
    let uddt_c3 = properties::check_uddt(&hey, &hey_ddt, &c3h).unwrap();
    assert!(uddt_c3.passed(), "{}", uddt_c3.render());
    // the two hand-computed residuation instances on the two-point dual:
    // image(m -> 0) is empty, image(1 -> m) is the image of m
    {
        let ded = Deductive::new(&hey, &c3h).unwrap();
        let (repr, _) = build_representation(&ded, ClosureBase::optimal(&ded).unwrap()).unwrap();
        let space = dual_space(&hey, &c3h).unwrap();
        let res = |u: &Subset, v: &Subset| -> Subset {
            space.poset.down_closure(&u.intersection(&v.complement())).complement()
        };
        let imp = |x: usize, y: usize| c3h.apply(2, &[x, y]);
        assert_eq!(res(&repr.phi[1], &repr.phi[0]), Subset::empty(2));
        assert_eq!(repr.phi[imp(1, 0)], Subset::empty(2));
        assert_eq!(res(&repr.phi[2], &repr.phi[1]), repr.phi[1]);
        assert_eq!(repr.phi[imp(2, 1)], repr.phi[1]);
    }
    // negative control: the meet term posing as an implication
    let fake_ddt = {
        let b = TermBuilder::new(&meet.signature);
        b.op("and", vec![b.var(0), b.var(1)])
    };
    let control = properties::check_uddt(&meet, &fake_ddt, &fixtures::m4_algebra()).unwrap();
    assert!(!control.check("deduction-transfer").unwrap().passed());

    // inconsistent element on the falsum chain; without a falsum the dual
    // conditions hold but no closed term is inconsistent
    let bot = fixtures::l_bot();
    let pie = properties::check_pie(&bot, bot.witnesses.pie.as_ref(), &fixtures::c3_heyting_bot())
        .unwrap();
    assert!(pie.passed(), "{}", pie.render());
    let no_bot = properties::check_pie(&hil, None, &fixtures::h2()).unwrap();
    assert!(!no_bot.check("inconsistent-term").unwrap().passed());
    assert!(no_bot.check("empty-image-of-bottom").unwrap().passed());

    // quotient transfer across the degenerate algebra
    let homs = vec![fixtures::HomFixture {
        name: "d2_const_top".into(),
        logic: meet.clone(),
        source: fixtures::d2_degenerate(),
        target: fixtures::m4_algebra(),
        map: vec![3, 3],
    }];
    let qt = properties::quotient_transfer_check(&meet, &homs).unwrap();
    assert!(qt.passed(), "{}", qt.render());

    println!("acceptance 7 (property ladder with negative controls): PASS");
}

#[test]
fn acceptance_8_theorem_free_branch() {
    let logic = fixtures::l_meet_only();
    let c2 = fixtures::c2_meet_only();
    let ded = Deductive::new(&logic, &c2).unwrap();
    let empty = Subset::empty(2);
    assert!(ded.filters().contains(&empty), "empty set must be a filter");
    assert!(ded.optimal_filters().unwrap().contains(&empty), "empty set must be optimal");
    match dual_space(&logic, &c2) {
        Err(SpaceError::Gate(reason)) => {
            assert!(reason.contains("theorems required"), "unexpected gate reason: {reason}")
        }
        other => panic!("expected the theorems gate, got {other:?}"),
    }
    println!("acceptance 8 (theorem-free branch and dualization gate): PASS");
}
