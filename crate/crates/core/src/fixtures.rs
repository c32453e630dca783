//! Shipped fixture logics, algebras and homomorphisms. These are the
//! structures the verification suites run on; the CLI fixture documents
//! mirror them.
//!
//! Element index conventions: chains are numbered bottom-up, the diamond
//! `m4` is 0, a, b, 1 = 0..4, the five-element diamond `m3` is 0, a, b, c, 1
//! = 0..5, and the cube uses bit-mask indices with meet = bitwise and.

use crate::logic::{
    Assertions, FiniteAlgebra, LogicPresentation, Rule, Signature, Term, TermBuilder, Witnesses,
};
use crate::semilattice::MeetSemilattice;

fn p() -> Term {
    Term::Var(0)
}
fn q() -> Term {
    Term::Var(1)
}
fn r() -> Term {
    Term::Var(2)
}

/// Conjunction-with-top logic: `and`/2, `top`/0 with the projection and
/// pairing rules and the top axiom.
pub fn l_top_meet() -> LogicPresentation {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    let b = TermBuilder::new(&sig);
    let rules = vec![
        Rule::new(vec![], b.op("top", vec![])),
        Rule::new(vec![p(), q()], b.op("and", vec![p(), q()])),
        Rule::new(vec![b.op("and", vec![p(), q()])], p()),
        Rule::new(vec![b.op("and", vec![p(), q()])], q()),
    ];
    let witnesses = Witnesses { pc: Some(b.op("and", vec![p(), q()])), ..Default::default() };
    LogicPresentation::new(
        "LTOP",
        sig.clone(),
        rules,
        Assertions { congruential: true, filter_distributive: true, has_theorems: true, protoalgebraic: false },
        witnesses,
    )
    .unwrap()
}

/// Theorem-free conjunction logic: `and`/2 only, no axioms.
pub fn l_meet_only() -> LogicPresentation {
    let sig = Signature::new(&[("and", 2)]).unwrap();
    let b = TermBuilder::new(&sig);
    let rules = vec![
        Rule::new(vec![p(), q()], b.op("and", vec![p(), q()])),
        Rule::new(vec![b.op("and", vec![p(), q()])], p()),
        Rule::new(vec![b.op("and", vec![p(), q()])], q()),
    ];
    let witnesses = Witnesses { pc: Some(b.op("and", vec![p(), q()])), ..Default::default() };
    LogicPresentation::new(
        "LMEET",
        sig.clone(),
        rules,
        Assertions { congruential: true, filter_distributive: true, has_theorems: false, protoalgebraic: false },
        witnesses,
    )
    .unwrap()
}

/// Hilbert implication logic: modus ponens plus the K and S axioms.
pub fn l_hil() -> LogicPresentation {
    let sig = Signature::new(&[("imp", 2)]).unwrap();
    let b = TermBuilder::new(&sig);
    let imp = |x: Term, y: Term| b.op("imp", vec![x, y]);
    let rules = vec![
        Rule::new(vec![p(), imp(p(), q())], q()),
        Rule::new(vec![], imp(p(), imp(q(), p()))),
        Rule::new(
            vec![],
            imp(
                imp(p(), imp(q(), r())),
                imp(imp(p(), q()), imp(p(), r())),
            ),
        ),
    ];
    let witnesses = Witnesses { ddt: Some(imp(p(), q())), ..Default::default() };
    LogicPresentation::new(
        "LHIL",
        sig.clone(),
        rules,
        Assertions { congruential: true, filter_distributive: true, has_theorems: true, protoalgebraic: true },
        witnesses,
    )
    .unwrap()
}

/// Positive logic: conjunction with top extended by a binary join with the
/// introduction, idempotence, commutation, association and distribution
/// rules that make it a single-formula disjunction on the algebras here.
pub fn l_pos() -> LogicPresentation {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("top", 0)]).unwrap();
    let b = TermBuilder::new(&sig);
    let and = |x: Term, y: Term| b.op("and", vec![x, y]);
    let or = |x: Term, y: Term| b.op("or", vec![x, y]);
    let rules = vec![
        Rule::new(vec![], b.op("top", vec![])),
        Rule::new(vec![p(), q()], and(p(), q())),
        Rule::new(vec![and(p(), q())], p()),
        Rule::new(vec![and(p(), q())], q()),
        Rule::new(vec![p()], or(p(), q())),
        Rule::new(vec![q()], or(p(), q())),
        Rule::new(vec![or(p(), p())], p()),
        Rule::new(vec![or(p(), q())], or(q(), p())),
        Rule::new(vec![or(p(), or(q(), r()))], or(or(p(), q()), r())),
        Rule::new(vec![and(p(), or(q(), r()))], or(and(p(), q()), and(p(), r()))),
    ];
    let witnesses = Witnesses {
        pc: Some(and(p(), q())),
        pdi: Some(vec![or(p(), q())]),
        ..Default::default()
    };
    LogicPresentation::new(
        "LPOS",
        sig.clone(),
        rules,
        Assertions { congruential: true, filter_distributive: true, has_theorems: true, protoalgebraic: false },
        witnesses,
    )
    .unwrap()
}

fn heyting_rules(sig: &Signature) -> Vec<Rule> {
    let b = TermBuilder::new(sig);
    let and = |x: Term, y: Term| b.op("and", vec![x, y]);
    let or = |x: Term, y: Term| b.op("or", vec![x, y]);
    let imp = |x: Term, y: Term| b.op("imp", vec![x, y]);
    vec![
        Rule::new(vec![], b.op("top", vec![])),
        Rule::new(vec![p(), imp(p(), q())], q()),
        Rule::new(vec![], imp(p(), imp(q(), p()))),
        Rule::new(
            vec![],
            imp(imp(p(), imp(q(), r())), imp(imp(p(), q()), imp(p(), r()))),
        ),
        Rule::new(vec![], imp(and(p(), q()), p())),
        Rule::new(vec![], imp(and(p(), q()), q())),
        Rule::new(vec![], imp(p(), imp(q(), and(p(), q())))),
        Rule::new(vec![], imp(p(), or(p(), q()))),
        Rule::new(vec![], imp(q(), or(p(), q()))),
        Rule::new(
            vec![],
            imp(imp(p(), r()), imp(imp(q(), r()), imp(or(p(), q()), r()))),
        ),
    ]
}

/// Intuitionistic-style logic over and/or/imp/top, presented by modus
/// ponens and the usual axiom schemes.
pub fn l_hey() -> LogicPresentation {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("imp", 2), ("top", 0)]).unwrap();
    let b = TermBuilder::new(&sig);
    let rules = heyting_rules(&sig);
    let witnesses = Witnesses {
        pc: Some(b.op("and", vec![p(), q()])),
        pdi: Some(vec![b.op("or", vec![p(), q()])]),
        ddt: Some(b.op("imp", vec![p(), q()])),
        ..Default::default()
    };
    LogicPresentation::new(
        "LHEY",
        sig.clone(),
        rules,
        Assertions { congruential: true, filter_distributive: true, has_theorems: true, protoalgebraic: true },
        witnesses,
    )
    .unwrap()
}

/// The Heyting-style logic extended with a falsum constant and ex falso.
pub fn l_bot() -> LogicPresentation {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("imp", 2), ("top", 0), ("bot", 0)]).unwrap();
    let b = TermBuilder::new(&sig);
    let mut rules = heyting_rules(&sig);
    rules.push(Rule::new(vec![b.op("bot", vec![])], p()));
    let witnesses = Witnesses {
        pc: Some(b.op("and", vec![p(), q()])),
        pdi: Some(vec![b.op("or", vec![p(), q()])]),
        ddt: Some(b.op("imp", vec![p(), q()])),
        pie: Some(b.op("bot", vec![])),
    };
    LogicPresentation::new(
        "LBOT",
        sig.clone(),
        rules,
        Assertions { congruential: true, filter_distributive: true, has_theorems: true, protoalgebraic: true },
        witnesses,
    )
    .unwrap()
}

// ---------------------------------------------------------------------
// algebras

/// The diamond 0 < a,b < 1 as a meet algebra with top.
pub fn m4_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new(
        "M4",
        &sig,
        4,
        vec![
            vec![0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3],
            vec![3],
        ],
    )
    .unwrap()
}

/// The five-element diamond 0 < a,b,c < 1 as a meet algebra.
pub fn m3_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    let meet = |x: usize, y: usize| {
        if x == y {
            x
        } else if x == 4 {
            y
        } else if y == 4 {
            x
        } else {
            0
        }
    };
    let mut table = Vec::new();
    for x in 0..5 {
        for y in 0..5 {
            table.push(meet(x, y));
        }
    }
    FiniteAlgebra::new("M3", &sig, 5, vec![table, vec![4]]).unwrap()
}

fn chain_meet_table(n: usize) -> Vec<usize> {
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            t.push(x.min(y));
        }
    }
    t
}

pub fn c2_meet_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new("C2", &sig, 2, vec![chain_meet_table(2), vec![1]]).unwrap()
}

pub fn c3_meet_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new("C3", &sig, 3, vec![chain_meet_table(3), vec![2]]).unwrap()
}

/// The 2x2x2 cube as a meet algebra: bit-mask elements, meet = bitwise and.
pub fn cube_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    let mut table = Vec::new();
    for x in 0..8usize {
        for y in 0..8usize {
            table.push(x & y);
        }
    }
    FiniteAlgebra::new("CUBE", &sig, 8, vec![table, vec![7]]).unwrap()
}

/// Two-element chain in the bare-meet signature (for the theorem-free logic).
pub fn c2_meet_only() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2)]).unwrap();
    FiniteAlgebra::new("C2", &sig, 2, vec![chain_meet_table(2)]).unwrap()
}

/// Degenerate two-element algebra whose meet is constantly the top.
pub fn d2_degenerate() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new("D2", &sig, 2, vec![vec![1, 1, 1, 1], vec![1]]).unwrap()
}

/// Two-element implication algebra with the classical table.
pub fn h2() -> FiniteAlgebra {
    let sig = Signature::new(&[("imp", 2)]).unwrap();
    FiniteAlgebra::new("H2", &sig, 2, vec![vec![1, 1, 0, 1]]).unwrap()
}

/// Three-element Goedel chain, implication reduct.
pub fn g3() -> FiniteAlgebra {
    let sig = Signature::new(&[("imp", 2)]).unwrap();
    FiniteAlgebra::new("G3", &sig, 3, vec![vec![2, 2, 2, 0, 2, 2, 0, 1, 2]]).unwrap()
}

fn chain_join_table(n: usize) -> Vec<usize> {
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            t.push(x.max(y));
        }
    }
    t
}

fn goedel_imp_table(n: usize) -> Vec<usize> {
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            t.push(if x <= y { n - 1 } else { y });
        }
    }
    t
}

/// The three-element chain as a Heyting algebra.
pub fn c3_heyting() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("imp", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new(
        "C3H",
        &sig,
        3,
        vec![chain_meet_table(3), chain_join_table(3), goedel_imp_table(3), vec![2]],
    )
    .unwrap()
}

/// The three-element Heyting chain with falsum interpreted.
pub fn c3_heyting_bot() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("imp", 2), ("top", 0), ("bot", 0)]).unwrap();
    FiniteAlgebra::new(
        "C3H",
        &sig,
        3,
        vec![chain_meet_table(3), chain_join_table(3), goedel_imp_table(3), vec![2], vec![0]],
    )
    .unwrap()
}

/// Two-element chain with joins, for the positive logic.
pub fn c2_pos_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new(
        "C2",
        &sig,
        2,
        vec![chain_meet_table(2), chain_join_table(2), vec![1]],
    )
    .unwrap()
}

/// The diamond with joins, for the positive logic.
pub fn m4_pos_algebra() -> FiniteAlgebra {
    let sig = Signature::new(&[("and", 2), ("or", 2), ("top", 0)]).unwrap();
    FiniteAlgebra::new(
        "M4",
        &sig,
        4,
        vec![
            vec![0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3],
            vec![0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3],
            vec![3],
        ],
    )
    .unwrap()
}

// ---------------------------------------------------------------------
// semilattice fixtures

pub fn m4_semilattice() -> MeetSemilattice {
    MeetSemilattice::from_meet_table(4, m4_algebra().table(0).to_vec()).unwrap()
}

pub fn m3_semilattice() -> MeetSemilattice {
    MeetSemilattice::from_meet_table(5, m3_algebra().table(0).to_vec()).unwrap()
}

pub fn chain_semilattice(n: usize) -> MeetSemilattice {
    MeetSemilattice::from_meet_table(n, chain_meet_table(n)).unwrap()
}

/// The pentagon 0 < a < 1, 0 < b < c < 1 with a incomparable to b and c.
pub fn n5_semilattice() -> MeetSemilattice {
    // indices: 0, a=1, b=2, c=3, top=4
    let meet = |x: usize, y: usize| -> usize {
        if x == y {
            return x;
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        match (lo, hi) {
            (_, 4) => lo,
            (0, _) => 0,
            (1, _) => 0,
            (2, 3) => 2,
            _ => unreachable!(),
        }
    };
    let mut table = Vec::new();
    for x in 0..5 {
        for y in 0..5 {
            table.push(meet(x, y));
        }
    }
    MeetSemilattice::from_meet_table(5, table).unwrap()
}

pub fn cube_semilattice() -> MeetSemilattice {
    MeetSemilattice::from_meet_table(8, cube_algebra().table(0).to_vec()).unwrap()
}

// ---------------------------------------------------------------------
// homomorphism corpus

/// A named homomorphism between two fixture algebras of the same logic.
pub struct HomFixture {
    pub name: String,
    pub logic: LogicPresentation,
    pub source: FiniteAlgebra,
    pub target: FiniteAlgebra,
    pub map: Vec<usize>,
}

impl HomFixture {
    fn new(
        name: &str,
        logic: LogicPresentation,
        source: FiniteAlgebra,
        target: FiniteAlgebra,
        map: Vec<usize>,
    ) -> Self {
        source
            .check_homomorphism(&logic.signature, &map, &target)
            .unwrap_or_else(|e| panic!("fixture {name} is not a homomorphism: {e}"));
        HomFixture { name: name.to_string(), logic, source, target, map }
    }
}

/// The meet-logic homomorphism corpus: identities, an embedding, an
/// automorphism, composites and two collapses.
pub fn meet_hom_corpus() -> Vec<HomFixture> {
    let l = l_top_meet;
    vec![
        HomFixture::new("id_C2", l(), c2_meet_algebra(), c2_meet_algebra(), vec![0, 1]),
        HomFixture::new("id_C3", l(), c3_meet_algebra(), c3_meet_algebra(), vec![0, 1, 2]),
        HomFixture::new("id_M4", l(), m4_algebra(), m4_algebra(), vec![0, 1, 2, 3]),
        HomFixture::new("c2_into_m4", l(), c2_meet_algebra(), m4_algebra(), vec![0, 3]),
        HomFixture::new("m4_swap", l(), m4_algebra(), m4_algebra(), vec![0, 2, 1, 3]),
        HomFixture::new("c3_into_m4", l(), c3_meet_algebra(), m4_algebra(), vec![0, 1, 3]),
        HomFixture::new("m4_onto_c2", l(), m4_algebra(), c2_meet_algebra(), vec![0, 1, 0, 1]),
        HomFixture::new("c3_onto_c2", l(), c3_meet_algebra(), c2_meet_algebra(), vec![0, 1, 1]),
    ]
}

/// Composable pair used by the functor-law checks: first `c2_into_m4`, then
/// `m4_swap`.
pub fn composable_pair() -> (HomFixture, HomFixture, HomFixture) {
    let f = HomFixture::new("c2_into_m4", l_top_meet(), c2_meet_algebra(), m4_algebra(), vec![0, 3]);
    let g = HomFixture::new("m4_swap", l_top_meet(), m4_algebra(), m4_algebra(), vec![0, 2, 1, 3]);
    let gf_map: Vec<usize> = f.map.iter().map(|&x| g.map[x]).collect();
    let gf = HomFixture::new("swap_after_embed", l_top_meet(), c2_meet_algebra(), m4_algebra(), gf_map);
    (f, g, gf)
}

/// Implication-logic homomorphisms.
pub fn hil_hom_corpus() -> Vec<HomFixture> {
    vec![
        HomFixture::new("id_H2", l_hil(), h2(), h2(), vec![0, 1]),
        HomFixture::new("h2_into_g3", l_hil(), h2(), g3(), vec![0, 2]),
        HomFixture::new("g3_onto_h2", l_hil(), g3(), h2(), vec![0, 1, 1]),
    ]
}
