//! Ordered point spaces carrying an algebra of up-sets: the duals of
//! reduced algebras of a filter-distributive finitary congruential logic
//! with theorems.
//!
//! Finite restatements used throughout (the topology is discrete):
//! compactness holds outright, "clopen up-set" means up-set, and a dense
//! subset is the whole carrier. Each axiom checker states the restatement
//! it verifies.

use crate::filters::{Deductive, EngineError};
use crate::genspace::{order_morphism, star_compose, GenPriestleyMorphism, GenPriestleySpace};
use crate::logic::{assignments, evaluate, FiniteAlgebra, LogicPresentation};
use crate::poset::FinitePoset;
use crate::report::{Checker, Report};
use crate::representation::{
    build_representation, s_semilattice, ClosureBase, RepresentationError, SSemilattice,
};
use crate::semilattice::{is_sup_homomorphism, FamilySemilattice, SemilatticeError};
use crate::subset::{SetFamily, Subset};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("gate: {0}")]
    Gate(String),
    #[error("axiom {check} fails: {witness}")]
    Axiom { check: String, witness: String },
    #[error("engine error: {0}")]
    Engine(#[from] EngineError),
    #[error("representation error: {0}")]
    Representation(#[from] RepresentationError),
    #[error("semilattice error: {0}")]
    Semilattice(#[from] SemilatticeError),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Relations between space carriers, with the box operator. The morphism
/// axioms are checked by [`verify_morphism`].
pub type SPriestleyMorphism = GenPriestleyMorphism;

/// A finite point space with an indexed family of up-sets carrying an
/// algebra of the logic's type.
///
/// Assemble raw spaces only for feeding [`verify_space`] (the I/O path and
/// negative controls); everything downstream assumes a space that has
/// passed verification, or came out of [`dual_space`].
#[derive(Clone, Debug)]
pub struct SPriestleySpace {
    pub logic: LogicPresentation,
    /// The points with their order.
    pub poset: FinitePoset,
    /// The family of up-sets, canonically indexed.
    pub family: SetFamily,
    /// The algebra structure on family indices.
    pub algebra: FiniteAlgebra,
    /// Computed designated subset: points whose missing family members form
    /// a non-empty up-directed collection.
    pub xb: Subset,
}

fn compute_xb(poset: &FinitePoset, family: &SetFamily) -> Subset {
    let mut xb = Subset::empty(poset.size());
    for x in 0..poset.size() {
        let missing: Vec<&Subset> = family.iter().filter(|u| !u.contains(x)).collect();
        let directed = !missing.is_empty()
            && missing.iter().all(|u| {
                missing
                    .iter()
                    .all(|v| missing.iter().any(|w| u.is_subset_of(w) && v.is_subset_of(w)))
            });
        if directed {
            xb.insert(x);
        }
    }
    xb
}

impl SPriestleySpace {
    pub fn assemble(
        logic: LogicPresentation,
        poset: FinitePoset,
        family: SetFamily,
        algebra: FiniteAlgebra,
    ) -> SPriestleySpace {
        assert_eq!(family.width(), poset.size(), "family width mismatch");
        assert_eq!(algebra.size(), family.len(), "algebra carrier must index the family");
        let xb = compute_xb(&poset, &family);
        SPriestleySpace { logic, poset, family, algebra, xb }
    }

    pub fn points(&self) -> usize {
        self.poset.size()
    }

    /// The deductive engine over the family algebra.
    pub fn engine(&self) -> Result<Deductive<'_>, EngineError> {
        Deductive::new(&self.logic, &self.algebra)
    }

    /// The point map sending `x` to the set of family members containing it.
    pub fn xi(&self, x: usize) -> Subset {
        let mut s = Subset::empty(self.family.len());
        for (i, u) in self.family.iter().enumerate() {
            if u.contains(x) {
                s.insert(i);
            }
        }
        s
    }

    /// Intersection of the members named by a set of family indices; the
    /// whole point set for the empty index set.
    pub fn intersect_members(&self, v: &Subset) -> Subset {
        v.iter().fold(Subset::full(self.points()), |acc, i| acc.intersection(&self.family.member(i)))
    }
}

/// The dual space of a reduced algebra: optimal filters ordered by
/// inclusion, carrying the image of the representation map with the
/// transported algebra structure. The assertion gates (theorems,
/// congruentiality, filter distributivity) are enforced up front, and the
/// axioms are verified before returning.
pub fn dual_space(
    logic: &LogicPresentation,
    algebra: &FiniteAlgebra,
) -> Result<SPriestleySpace, SpaceError> {
    if !logic.assertions.has_theorems {
        return Err(SpaceError::Gate(format!(
            "theorems required: logic {} is not asserted to have theorems",
            logic.name
        )));
    }
    if !logic.assertions.congruential || !logic.assertions.filter_distributive {
        return Err(SpaceError::Gate(format!(
            "logic {} must be asserted congruential and filter-distributive",
            logic.name
        )));
    }
    let ded = Deductive::new(logic, algebra)?;
    if !ded.is_s_algebra() {
        return Err(SpaceError::Gate(format!(
            "algebra {} is not reduced for {}",
            algebra.name, logic.name
        )));
    }
    if !ded.is_filter_distributive_on() {
        return Err(SpaceError::Gate(format!(
            "filter lattice of {} is not distributive",
            algebra.name
        )));
    }
    let base = ClosureBase::optimal(&ded)?;
    let (repr, repr_report) = build_representation(&ded, base)?;
    if !repr_report.passed() {
        let c = repr_report.checks.iter().find(|c| !c.passed()).unwrap();
        return Err(SpaceError::Axiom { check: c.id.clone(), witness: c.failures[0].clone() });
    }
    let k = repr.base.len();
    let poset = FinitePoset::new(k, |i, j| {
        repr.base.family.member(i).is_subset_of(&repr.base.family.member(j))
    })
    .expect("inclusion is a poset");
    let space = SPriestleySpace::assemble(
        logic.clone(),
        poset,
        repr.image_family.clone(),
        relabel_image_algebra(&repr),
    );
    let report = verify_space(&space)?;
    if let Some(c) = report.checks.iter().find(|c| !c.passed()) {
        return Err(SpaceError::Axiom { check: c.id.clone(), witness: c.failures[0].clone() });
    }
    Ok(space)
}

/// The representation's image algebra already lives on canonical image
/// indices, which coincide with family indices.
fn relabel_image_algebra(repr: &crate::representation::Representation) -> FiniteAlgebra {
    repr.image.clone()
}

/// Families of up to `max members` non-empty index subsets, as bit masks.
fn nonempty_mask_families(mask_count: u64, max_members: usize) -> Vec<Vec<u64>> {
    let masks: Vec<u64> = (1..mask_count).collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_members {
        let mut next = Vec::new();
        for idxs in &layer {
            let start = idxs.last().map(|&i| i + 1).unwrap_or(0);
            for i in start..masks.len() {
                let mut v = idxs.clone();
                v.push(i);
                out.push(v.iter().map(|&j| masks[j]).collect());
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// Verifies the space axioms in finite form, their alternate shapes, and
/// the surrounding structural facts about generation and bottoms.
pub fn verify_space(space: &SPriestleySpace) -> Result<Report, SpaceError> {
    let mut report = Report::new();
    let n = space.points();
    let bn = space.family.len();
    let ded_b = space.engine()?;

    // reduced: the order coincides with the separation quasiorder of the
    // family
    let mut pr1 = Checker::new("reduced-referential", "order-is-the-separation-quasiorder");
    for x in 0..n {
        for y in 0..n {
            let preceq = space.family.iter().all(|u| !u.contains(x) || u.contains(y));
            pr1.instance(space.poset.leq(x, y) == preceq, || {
                format!("pair ({x},{y}): leq={} separation={}", space.poset.leq(x, y), preceq)
            });
        }
    }
    report.push(pr1.finish());

    // soundness of every presented rule in the set algebra: intersected
    // premise values lie inside the conclusion value
    let mut sound = Checker::new("rules-sound-on-family", "presented-rules-hold-in-the-set-algebra");
    for rule in &space.logic.rules {
        let nvars = rule.variables().iter().max().map(|&v| v + 1).unwrap_or(0);
        for assignment in assignments(bn, nvars) {
            let prem = rule.premises.iter().fold(Subset::full(n), |acc, t| {
                let idx = evaluate(t, &space.algebra, &assignment).expect("assigned");
                acc.intersection(&space.family.member(idx))
            });
            let concl_idx = evaluate(&rule.conclusion, &space.algebra, &assignment).expect("assigned");
            sound.instance(prem.is_subset_of(&space.family.member(concl_idx)), || {
                format!("rule `{}` at {:?}", rule.render(&space.logic.signature), assignment)
            });
        }
    }
    report.push(sound.finish());

    // generation matches intersection: a member above an intersection of
    // finitely many members is generated by them, and conversely
    let mut pr2 = Checker::new("intersection-generates", "member-above-intersection-is-generated");
    for v_bits in 1..(1u64 << bn) {
        let v = Subset::from_raw(bn, v_bits);
        let inter = space.intersect_members(&v);
        let generated = ded_b.generate(&v);
        for u in 0..bn {
            let lhs = inter.is_subset_of(&space.family.member(u));
            let rhs = generated.contains(u);
            pr2.instance(lhs == rhs, || {
                format!("V={v:?} U={u}: intersection-inclusion={lhs} generated={rhs}")
            });
        }
    }
    report.push(pr2.finish());

    // compactness is automatic on finite carriers
    let mut pr3 = Checker::new("compactness", "compactness-trivial-on-finite-carriers");
    pr3.instance(true, || unreachable!());
    report.push(pr3.finish());

    // the family consists of up-sets and contains the whole point set
    let mut pr4 = Checker::new("family-of-up-sets-with-top", "family-members-are-up-sets-containing-carrier");
    pr4.instance(space.family.contains(&Subset::full(n)), || "carrier missing from family".to_string());
    for u in space.family.iter() {
        pr4.instance(space.poset.is_up_set(u), || format!("member {u:?} is not an up-set"));
    }
    report.push(pr4.finish());

    // denseness of the designated set degenerates to the whole carrier
    let mut pr5 = Checker::new("designated-dense", "designated-points-exhaust-the-carrier");
    pr5.instance(space.xb == Subset::full(n), || format!("designated set {:?} is proper", space.xb));
    report.push(pr5.finish());

    // alternate axiom shapes: separation as a subbasis condition, and the
    // up-sets being exactly the union-intersection closure plus the empty set
    let mut pr3p = Checker::new("family-separates-points", "family-separates-distinct-points");
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let separated = space.family.iter().any(|u| u.contains(x) != u.contains(y));
            pr3p.instance(separated, || format!("points {x} and {y} are indistinguishable"));
        }
    }
    report.push(pr3p.finish());

    let bcap = space.family.close_under(|a, b| a.intersection(b));
    let bcapcup = bcap.close_under(|a, b| a.union(b));
    let mut pr4p = Checker::new("up-sets-from-family", "up-sets-are-union-intersection-closure");
    pr4p.instance(space.family.contains(&Subset::full(n)), || {
        "carrier missing from family".to_string()
    });
    let mut expected = bcapcup.clone();
    expected.insert(Subset::empty(n));
    pr4p.instance(crate::genspace::up_sets(&space.poset) == expected, || {
        format!("up-sets differ from closure: {:?} vs {expected:?}", crate::genspace::up_sets(&space.poset))
    });
    report.push(pr4p.finish());

    // from the alternate shape back: closure-described spaces are reduced
    let mut reduced = Checker::new("closure-implies-reduced", "alternate-axioms-force-reducedness");
    if space.family.contains(&Subset::full(n))
        && crate::genspace::up_sets(&space.poset) == expected
    {
        for x in 0..n {
            for y in 0..n {
                let preceq = space.family.iter().all(|u| !u.contains(x) || u.contains(y));
                reduced.instance(preceq == space.poset.leq(x, y), || format!("pair ({x},{y})"));
            }
        }
    }
    report.push(reduced.finish());

    // the specialization order of the family algebra is inclusion
    let mut spec = Checker::new("specialization-is-inclusion", "family-specialization-order-is-inclusion");
    for i in 0..bn {
        for j in 0..bn {
            spec.instance(
                ded_b.leq_s(i, j) == space.family.member(i).is_subset_of(&space.family.member(j)),
                || format!("members {i},{j}"),
            );
        }
    }
    report.push(spec.finish());

    // three-way equivalence between point-level coverage, generation, and
    // hulls over the optimal base of the family algebra; tuple size adapts
    // to keep the enumeration bounded. On spaces too broken to represent
    // the family algebra, the breakage is itself the failure record.
    let mut l517 = Checker::new("coverage-generation-hulls", "coverage-iff-generation-iff-hull-coverage");
    match ClosureBase::optimal(&ded_b)
        .and_then(|base| build_representation(&ded_b, base).map(|(r, _)| r))
    {
        Err(e) => l517.fail(format!("family algebra cannot be represented: {e}")),
        Ok(repr_b) => {
        let total = 1u64 << bn;
        let inter: Vec<Subset> =
            (0..total).map(|bits| space.intersect_members(&Subset::from_raw(bn, bits))).collect();
        let hull: Vec<Subset> =
            (0..total).map(|bits| repr_b.phi_hat(&Subset::from_raw(bn, bits))).collect();
        let max_members = if bn <= 6 { 3 } else { 2 };
        for family in nonempty_mask_families(total, max_members) {
            if family.is_empty() {
                continue;
            }
            for v_bits in 1..total {
                let lhs = inter[v_bits as usize]
                    .is_subset_of(&family.iter().fold(Subset::empty(n), |acc, &u| acc.union(&inter[u as usize])));
                let mid = family
                    .iter()
                    .fold(Subset::full(bn), |acc, &u| {
                        acc.intersection(&ded_b.generate(&Subset::from_raw(bn, u)))
                    })
                    .is_subset_of(&ded_b.generate(&Subset::from_raw(bn, v_bits)));
                let rhs = hull[v_bits as usize].is_subset_of(
                    &family
                        .iter()
                        .fold(Subset::empty(repr_b.base.len()), |acc, &u| acc.union(&hull[u as usize])),
                );
                l517.instance(lhs == mid && mid == rhs, || {
                    format!("family={family:?} V={v_bits:#b}: coverage={lhs} generation={mid} hulls={rhs}")
                });
            }
        }
        }
    }
    report.push(l517.finish());

    // bottom element of the family algebra iff the empty member is present
    let mut l518a = Checker::new("bottom-member", "bottom-element-iff-empty-member");
    let has_empty = space.family.contains(&Subset::empty(n));
    let has_bottom = (0..bn).any(|i| (0..bn).all(|j| ded_b.leq_s(i, j)));
    l518a.instance(has_empty == has_bottom, || {
        format!("empty member present: {has_empty}, bottom element present: {has_bottom}")
    });
    report.push(l518a.finish());

    // bottom family of the family algebra iff some finite subfamily has
    // empty intersection
    let mut l518b = Checker::new("bottom-family-by-intersection", "bottom-family-iff-empty-intersection");
    let (has_family, _) = ded_b.bottom_family();
    let empty_inter = (0..(1u64 << bn))
        .any(|bits| space.intersect_members(&Subset::from_raw(bn, bits)).is_empty());
    l518b.instance(has_family == empty_inter, || {
        format!("bottom family: {has_family}, empty intersection reachable: {empty_inter}")
    });
    report.push(l518b.finish());

    // every bottom family of the family algebra intersects to nothing
    let mut r519 = Checker::new("bottom-families-intersect-empty", "bottom-families-have-empty-intersection");
    for d_bits in 1..(1u64 << bn) {
        let d = Subset::from_raw(bn, d_bits);
        let antichain = d.iter().all(|a| {
            d.iter().all(|b| a == b || (!ded_b.leq_s(a, b) && !ded_b.leq_s(b, a)))
        });
        if antichain && ded_b.generate(&d).is_full() {
            r519.instance(space.intersect_members(&d).is_empty(), || {
                format!("bottom family {d:?} has non-empty intersection")
            });
        }
    }
    report.push(r519.finish());

    Ok(report)
}

/// Verifies the point map: injectivity, landing in (and exhausting) the
/// optimal filters with designated points matching the irreducible ones,
/// the order isomorphism, and the inverse relationship with the family
/// algebra's own representation.
pub fn check_xi(space: &SPriestleySpace) -> Result<Report, SpaceError> {
    let mut report = Report::new();
    let n = space.points();
    let bn = space.family.len();
    let ded_b = space.engine()?;
    let xi: Vec<Subset> = (0..n).map(|x| space.xi(x)).collect();

    let mut inj = Checker::new("point-map-injective", "point-map-separates-points");
    for x in 0..n {
        for y in (x + 1)..n {
            inj.instance(xi[x] != xi[y], || format!("points {x},{y} have equal images"));
        }
        inj.instance(ded_b.is_filter(&xi[x]), || format!("image of {x} is not a filter"));
    }
    report.push(inj.finish());

    let opt = ded_b.optimal_filters()?;
    let irr = ded_b.irreducible_filters();

    let mut land = Checker::new("point-map-lands-optimal", "points-map-to-optimal-filters");
    for x in 0..n {
        land.instance(opt.contains(&xi[x]), || format!("image of {x} not optimal"));
        if space.xb.contains(x) {
            land.instance(irr.contains(&xi[x]), || format!("designated {x} not irreducible"));
        }
    }
    report.push(land.finish());

    let mut onto = Checker::new("point-map-onto", "point-map-exhausts-optimal-filters");
    let image = SetFamily::from_members(bn, xi.iter().copied());
    onto.instance(image == opt, || format!("image {image:?} vs optimal {opt:?}"));
    let desig = SetFamily::from_members(bn, space.xb.iter().map(|x| xi[x]));
    onto.instance(desig == irr, || format!("designated image {desig:?} vs irreducible {irr:?}"));
    report.push(onto.finish());

    let mut ord = Checker::new("point-map-order-iso", "point-map-is-an-order-isomorphism");
    for x in 0..n {
        for y in 0..n {
            ord.instance(space.poset.leq(x, y) == xi[x].is_subset_of(&xi[y]), || {
                format!("pair ({x},{y})")
            });
        }
    }
    report.push(ord.finish());

    // preimages of the family algebra representation recover the members
    let mut inv = Checker::new("representation-preimage", "point-map-inverts-the-representation");
    let (repr_b, _) = build_representation(&ded_b, ClosureBase::optimal(&ded_b)?)?;
    for u in 0..bn {
        // the representation of member u, transported to points through xi
        let mut pulled = Subset::empty(n);
        for x in 0..n {
            let p = opt.index_of(&xi[x]).expect("onto already checked");
            if repr_b.phi[u].contains(p) {
                pulled.insert(x);
            }
        }
        inv.instance(pulled == space.family.member(u), || {
            format!("member {u}: pulled {pulled:?} vs {:?}", space.family.member(u))
        });
    }
    // the representation is injective on the family algebra, so it is an
    // isomorphism with the preimage map as inverse
    inv.instance(
        SetFamily::from_members(repr_b.base.len(), repr_b.phi.iter().copied()).len() == bn,
        || "family representation not injective".to_string(),
    );
    report.push(inv.finish());

    Ok(report)
}

/// The intersection and union-intersection closures of the family, with
/// the structural isomorphisms tying them to the hull semilattice of the
/// family algebra.
pub struct BStructures {
    pub meet_closure: FamilySemilattice,
    pub lattice_closure: FamilySemilattice,
    pub hulls: SSemilattice,
}

pub fn b_structures(space: &SPriestleySpace) -> Result<(BStructures, Report), SpaceError> {
    let mut report = Report::new();
    let n = space.points();
    let bn = space.family.len();
    let ded_b = space.engine()?;
    let bcap = space.family.close_under(|a, b| a.intersection(b));
    let bcapcup = bcap.close_under(|a, b| a.union(b));
    let meet_closure = FamilySemilattice::new(&bcap)?;
    let lattice_closure = FamilySemilattice::new(&bcapcup)?;
    let (repr_b, _) = build_representation(&ded_b, ClosureBase::optimal(&ded_b)?)?;
    let (hulls, hull_report) = s_semilattice(&ded_b, &repr_b)?;
    report.merge(hull_report);

    // admissible up-sets (maximal points of the complement designated) are
    // exactly the intersection closure
    let mut p526 = Checker::new("admissibles-are-meet-closure", "admissible-up-sets-equal-intersection-closure");
    let admissible = SetFamily::from_members(
        n,
        crate::genspace::up_sets(&space.poset)
            .iter()
            .filter(|u| space.poset.max_elements(&u.complement()).is_subset_of(&space.xb))
            .copied(),
    );
    p526.instance(admissible == bcap, || format!("admissible {admissible:?} vs closure {bcap:?}"));
    report.push(p526.finish());

    // every non-empty up-set is the union of the non-empty closure members
    // below it
    let mut p513 = Checker::new("up-sets-decompose", "up-sets-are-unions-of-closure-members");
    for u in crate::genspace::up_sets(&space.poset).iter() {
        if u.is_empty() {
            continue;
        }
        let rebuilt = bcap
            .iter()
            .filter(|w| !w.is_empty() && w.is_subset_of(u))
            .fold(Subset::empty(n), |acc, w| acc.union(w));
        p513.instance(rebuilt == *u, || format!("up-set {u:?} rebuilt as {rebuilt:?}"));
    }
    report.push(p513.finish());

    // the identity embedding of the intersection closure into the
    // union-intersection closure preserves finite-join behaviour
    let mut p521 = Checker::new("closure-embedding-sup-hom", "identity-into-lattice-closure-is-sup-homomorphism");
    let embed: Vec<usize> = (0..bcap.len())
        .map(|i| bcapcup.index_of(&bcap.member(i)).expect("closure member"))
        .collect();
    match is_sup_homomorphism(&embed, &meet_closure.semilattice, &lattice_closure.semilattice) {
        Ok(ok) => p521.instance(ok, || "embedding loses join behaviour".to_string()),
        Err(e) => p521.fail(format!("embedding not a homomorphism: {e}")),
    }
    report.push(p521.finish());

    // intersections correspond to hulls: member-wise well-defined bijection
    // preserving meet, top and order
    let mut iso = Checker::new("meet-closure-is-hull-semilattice", "intersections-match-hulls");
    let mut assigned: Vec<Option<usize>> = vec![None; bcap.len()];
    for v_bits in 0..(1u64 << bn) {
        let v = Subset::from_raw(bn, v_bits);
        let inter = space.intersect_members(&v);
        let hull = repr_b.phi_hat(&v);
        let ci = bcap.index_of(&inter).expect("closure member");
        let hi = hulls.members.index_of(&hull).expect("hull member");
        match assigned[ci] {
            None => assigned[ci] = Some(hi),
            Some(prev) => iso.instance(prev == hi, || {
                format!("intersection {inter:?} reached hulls {prev} and {hi}")
            }),
        }
    }
    let map: Vec<usize> = assigned.iter().map(|o| o.expect("every member reachable")).collect();
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    iso.instance(sorted.len() == map.len() && map.len() == hulls.members.len(), || {
        "intersection-to-hull map is not a bijection".to_string()
    });
    for i in 0..bcap.len() {
        for j in 0..bcap.len() {
            iso.instance(
                bcap.member(i).is_subset_of(&bcap.member(j))
                    == hulls.members.member(map[i]).is_subset_of(&hulls.members.member(map[j])),
                || format!("order mismatch at members {i},{j}"),
            );
            let meet_here = meet_closure.semilattice.meet(i, j);
            let meet_there = hulls.lattice.semilattice.meet(map[i], map[j]);
            iso.instance(map[meet_here] == meet_there, || format!("meet mismatch at {i},{j}"));
        }
    }
    iso.instance(map[meet_closure.semilattice.top()] == hulls.lattice.semilattice.top(), || {
        "top mismatch".to_string()
    });
    report.push(iso.finish());

    // the union-intersection closure is the distributive envelope of the
    // hull semilattice: the canonical assignment is a lattice isomorphism
    let mut p522 = Checker::new("lattice-closure-is-envelope", "union-closure-matches-hull-envelope");
    let envelope = hulls.lattice.semilattice.distributive_envelope()?;
    let g: Vec<usize> = (0..bcapcup.len())
        .map(|wi| {
            let w = bcapcup.member(wi);
            let image = bcap
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_subset_of(&w))
                .fold(Subset::empty(envelope.sigma.point_count()), |acc, (ci, _)| {
                    acc.union(&envelope.sigma.of(map[ci]))
                });
            envelope.family.index_of(&image).unwrap_or(usize::MAX)
        })
        .collect();
    for (wi, &gi) in g.iter().enumerate() {
        p522.instance(gi != usize::MAX, || {
            format!("member {:?} does not land in the envelope", bcapcup.member(wi))
        });
    }
    if g.iter().all(|&gi| gi != usize::MAX) {
        let mut gs = g.clone();
        gs.sort_unstable();
        gs.dedup();
        p522.instance(gs.len() == g.len() && g.len() == envelope.family.len(), || {
            "envelope assignment is not a bijection".to_string()
        });
        for i in 0..bcapcup.len() {
            for j in 0..bcapcup.len() {
                let meet_lhs = bcapcup
                    .index_of(&bcapcup.member(i).intersection(&bcapcup.member(j)))
                    .unwrap();
                let join_lhs =
                    bcapcup.index_of(&bcapcup.member(i).union(&bcapcup.member(j))).unwrap();
                let meet_rhs = envelope
                    .family
                    .index_of(&envelope.family.member(g[i]).intersection(&envelope.family.member(g[j])))
                    .unwrap();
                let join_rhs = envelope.join(g[i], g[j]);
                p522.instance(g[meet_lhs] == meet_rhs && g[join_lhs] == join_rhs, || {
                    format!("lattice operations mismatch at {i},{j}")
                });
            }
        }
    }
    report.push(p522.finish());

    // the bare ordered space with its designated points is a generalized
    // Priestley space whose admissibles are the intersection closure
    let mut p527 = Checker::new("underlying-generalized-space", "underlying-space-is-generalized-priestley");
    match GenPriestleySpace::new(space.poset.clone(), space.xb) {
        Ok(gspace) => {
            p527.instance(gspace.admissibles == bcap, || {
                format!("admissibles {:?} vs closure {bcap:?}", gspace.admissibles)
            });
        }
        Err(e) => p527.fail(format!("axioms fail: {e}")),
    }
    report.push(p527.finish());

    Ok((BStructures { meet_closure, lattice_closure, hulls }, report))
}

/// The dual relation of an algebra homomorphism, as a morphism between the
/// dual spaces (contravariantly). Checks the transport identities, the
/// morphism axioms, and that the relation also passes the generalized
/// Priestley morphism axioms of the underlying spaces.
pub fn dual_morphism(
    hom: &[usize],
    logic: &LogicPresentation,
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
) -> Result<(SPriestleyMorphism, SPriestleySpace, SPriestleySpace, Report), SpaceError> {
    source
        .check_homomorphism(&logic.signature, hom, target)
        .map_err(|e| SpaceError::Shape(format!("not a homomorphism: {e}")))?;
    let ded1 = Deductive::new(logic, source)?;
    let ded2 = Deductive::new(logic, target)?;
    let sp_target_algebra = dual_space(logic, target)?; // source space of the relation
    let sp_source_algebra = dual_space(logic, source)?; // target space of the relation
    let (repr1, _) = build_representation(&ded1, ClosureBase::optimal(&ded1)?)?;
    let (repr2, _) = build_representation(&ded2, ClosureBase::optimal(&ded2)?)?;

    let src_points = repr2.base.family.len();
    let tgt_points = repr1.base.family.len();
    let rows: Vec<Subset> = (0..src_points)
        .map(|pi| {
            let p = repr2.base.family.member(pi);
            let preimage = Subset::from_elems(
                source.size(),
                &(0..source.size()).filter(|&a| p.contains(hom[a])).collect::<Vec<_>>(),
            );
            let mut row = Subset::empty(tgt_points);
            for qi in 0..tgt_points {
                if preimage.is_subset_of(&repr1.base.family.member(qi)) {
                    row.insert(qi);
                }
            }
            row
        })
        .collect();
    let rel = SPriestleyMorphism::new(rows, tgt_points);

    let mut report = Report::new();

    // inverse images of complemented representations transport
    let mut inv = Checker::new("inverse-transport", "relation-preimages-transport-representations");
    for a in 0..source.size() {
        let mut lhs = Subset::empty(src_points);
        for x in 0..src_points {
            if !rel.rows[x].intersection(&repr1.phi[a].complement()).is_empty() {
                lhs.insert(x);
            }
        }
        inv.instance(lhs == repr2.phi[hom[a]].complement(), || format!("element {a}"));
    }
    report.push(inv.finish());

    // boxes transport representations, and the box map is a homomorphism
    // between the family algebras
    let mut boxes = Checker::new("box-transport", "boxes-transport-representations");
    for a in 0..source.size() {
        boxes.instance(rel.box_of(&repr1.phi[a]) == repr2.phi[hom[a]], || {
            format!("element {a}: {:?} vs {:?}", rel.box_of(&repr1.phi[a]), repr2.phi[hom[a]])
        });
    }
    report.push(boxes.finish());

    report.merge(verify_morphism(&rel, &sp_target_algebra, &sp_source_algebra)?);

    // also a generalized Priestley morphism between the underlying spaces
    let mut gen = Checker::new("generalized-morphism", "space-morphisms-are-generalized-morphisms");
    let g1 = GenPriestleySpace::new(sp_target_algebra.poset.clone(), sp_target_algebra.xb)
        .map_err(|e| SpaceError::Axiom { check: "underlying-space".into(), witness: e.to_string() })?;
    let g2 = GenPriestleySpace::new(sp_source_algebra.poset.clone(), sp_source_algebra.xb)
        .map_err(|e| SpaceError::Axiom { check: "underlying-space".into(), witness: e.to_string() })?;
    let gen_report = crate::genspace::check_gen_priestley_morphism(&rel, &g1, &g2);
    gen.instance(gen_report.passed(), || gen_report.render());
    report.push(gen.finish());

    Ok((rel, sp_target_algebra, sp_source_algebra, report))
}

/// Checks the two morphism axioms of a relation between verified spaces:
/// boxes of members are members and the box map is an algebra
/// homomorphism, and non-pairs are witnessed by a member.
pub fn verify_morphism(
    rel: &SPriestleyMorphism,
    sp1: &SPriestleySpace,
    sp2: &SPriestleySpace,
) -> Result<Report, SpaceError> {
    if rel.source_points() != sp1.points() || rel.target_points != sp2.points() {
        return Err(SpaceError::Shape(format!(
            "relation is {}x{}, spaces have {} and {} points",
            rel.source_points(),
            rel.target_points,
            sp1.points(),
            sp2.points()
        )));
    }
    let mut report = Report::new();
    let mut prr1 = Checker::new("box-is-homomorphism", "box-operator-is-a-family-homomorphism");
    let mut box_map = Vec::with_capacity(sp2.family.len());
    for u in sp2.family.iter() {
        match sp1.family.index_of(&rel.box_of(u)) {
            Some(i) => box_map.push(i),
            None => {
                prr1.fail(format!("box of {u:?} = {:?} is not a member", rel.box_of(u)));
                box_map.push(usize::MAX);
            }
        }
    }
    if box_map.iter().all(|&i| i != usize::MAX) {
        let sig = &sp1.logic.signature;
        prr1.instance(
            sp2.algebra.check_homomorphism(sig, &box_map, &sp1.algebra).is_ok(),
            || "box map is not an algebra homomorphism".to_string(),
        );
    }
    report.push(prr1.finish());

    let mut prr2 = Checker::new("witnessed-non-pairs", "non-pairs-witnessed-by-members");
    for x in 0..rel.source_points() {
        for y in 0..rel.target_points {
            if rel.contains(x, y) {
                continue;
            }
            let witnessed =
                sp2.family.iter().any(|u| !u.contains(y) && rel.rows[x].is_subset_of(u));
            prr2.instance(witnessed, || format!("pair ({x},{y}) has no witness"));
        }
    }
    report.push(prr2.finish());
    Ok(report)
}

/// The box map of a verified morphism as an index map between the family
/// algebras (target family to source family).
pub fn box_index_map(
    rel: &SPriestleyMorphism,
    sp1: &SPriestleySpace,
    sp2: &SPriestleySpace,
) -> Result<Vec<usize>, SpaceError> {
    sp2.family
        .iter()
        .map(|u| {
            sp1.family
                .index_of(&rel.box_of(u))
                .ok_or_else(|| SpaceError::Shape(format!("box of {u:?} is not a member")))
        })
        .collect()
}

/// Composition of morphisms through the final space's family, plus the
/// order-identity laws around it.
pub fn star(
    s: &SPriestleyMorphism,
    r: &SPriestleyMorphism,
    sp3: &SPriestleySpace,
) -> SPriestleyMorphism {
    star_compose(s, r, &sp3.family)
}

/// Verifies the identity and absorption laws of the order morphisms around
/// a morphism `rel` from `sp1` to `sp2`, and that composition through the
/// order agrees with plain relational composition.
pub fn check_identity_laws(
    rel: &SPriestleyMorphism,
    sp1: &SPriestleySpace,
    sp2: &SPriestleySpace,
) -> Report {
    let mut report = Report::new();
    let le1 = order_morphism(&sp1.poset);
    let le2 = order_morphism(&sp2.poset);

    let mut ck = Checker::new("order-identity-laws", "order-morphisms-are-identities");
    // box of the order is the identity on members
    for u in sp1.family.iter() {
        ck.instance(le1.box_of(u) == *u, || format!("box of order moves {u:?}"));
    }
    // relational composition with the order is absorbed
    let post = le2.compose_after(rel); // order after rel
    let pre = rel.compose_after(&le1); // rel after order
    ck.instance(post == *rel, || "post-composition with the order changed the relation".to_string());
    ck.instance(pre == *rel, || "pre-composition with the order changed the relation".to_string());
    // star against the order agrees with relational composition
    ck.instance(star(&le2, rel, sp2) == post, || "star with target order differs".to_string());
    ck.instance(star(rel, &le1, sp2) == pre, || "star with source order differs".to_string());
    // absorption inclusions
    for x in 0..rel.source_points() {
        for z in 0..rel.target_points {
            let via1 = (0..sp1.points()).any(|y| sp1.poset.leq(x, y) && rel.contains(y, z));
            let via2 = (0..sp2.points()).any(|y| rel.contains(x, y) && sp2.poset.leq(y, z));
            ck.instance(!via1 || rel.contains(x, z), || format!("left absorption fails at ({x},{z})"));
            ck.instance(!via2 || rel.contains(x, z), || format!("right absorption fails at ({x},{z})"));
        }
    }
    report.push(ck.finish());
    report
}

/// The canonical relation from a space to the dual space of its family
/// algebra: a point relates to every optimal filter above its point-map
/// image. Returns the relation, the rebuilt space, and the verification
/// that it is an isomorphism with the expected box behaviour.
pub fn canonical_relation(
    space: &SPriestleySpace,
) -> Result<(SPriestleyMorphism, SPriestleySpace, Report), SpaceError> {
    let rebuilt = dual_space(&space.logic, &space.algebra)?;
    let ded_b = space.engine()?;
    let opt = ded_b.optimal_filters()?;
    debug_assert_eq!(opt.len(), rebuilt.points());
    let rows: Vec<Subset> = (0..space.points())
        .map(|x| {
            let xi = space.xi(x);
            let mut row = Subset::empty(opt.len());
            for (pi, p) in opt.iter().enumerate() {
                if xi.is_subset_of(p) {
                    row.insert(pi);
                }
            }
            row
        })
        .collect();
    let rel = SPriestleyMorphism::new(rows, opt.len());
    let mut report = verify_morphism(&rel, space, &rebuilt)?;

    // the box recovers members from their images in the rebuilt family
    let mut boxes = Checker::new("canonical-box-inverts", "canonical-box-recovers-members");
    let (repr_b, _) = build_representation(&ded_b, ClosureBase::optimal(&ded_b)?)?;
    for u in 0..space.family.len() {
        let image_points = repr_b.phi[u];
        // the rebuilt family member for phi(u)
        let member = rebuilt.family.index_of(&image_points).map(|i| rebuilt.family.member(i));
        match member {
            Some(m) => boxes.instance(rel.box_of(&m) == space.family.member(u), || {
                format!("member {u}: box {:?} vs {:?}", rel.box_of(&m), space.family.member(u))
            }),
            None => boxes.fail(format!("image of member {u} missing from rebuilt family")),
        }
    }
    report.push(boxes.finish());

    // isomorphism: the inverse relation composes to the two orders
    let mut iso = Checker::new("canonical-relation-iso", "canonical-relation-is-an-isomorphism");
    let inverse_rows: Vec<Subset> = (0..opt.len())
        .map(|pi| {
            let p = opt.member(pi);
            let mut row = Subset::empty(space.points());
            for x in 0..space.points() {
                if p.is_subset_of(&space.xi(x)) {
                    row.insert(x);
                }
            }
            row
        })
        .collect();
    let inverse = SPriestleyMorphism::new(inverse_rows, space.points());
    let back = star(&inverse, &rel, space);
    let forth = star(&rel, &inverse, &rebuilt);
    iso.instance(back == order_morphism(&space.poset), || "inverse after relation is not the order".to_string());
    iso.instance(forth == order_morphism(&rebuilt.poset), || "relation after inverse is not the order".to_string());
    report.push(iso.finish());

    Ok((rel, rebuilt, report))
}

/// A named space with its verified data, used by the corpus checks.
struct CorpusSpace {
    algebra_name: String,
    space: SPriestleySpace,
}

/// Functor laws and both naturality squares over a homomorphism corpus:
/// identities dualize to orders, composites dualize to star composites in
/// reverse order, star is associative on all composable triples, the
/// representation square commutes, and the canonical relations intertwine
/// every dual morphism with the dual of its box map.
pub fn check_natural_isos(
    logic: &LogicPresentation,
    homs: &[crate::fixtures::HomFixture],
) -> Result<Report, SpaceError> {
    let mut report = Report::new();
    let mut spaces: Vec<CorpusSpace> = Vec::new();
    let mut morphisms: Vec<(String, usize, usize, SPriestleyMorphism)> = Vec::new();

    let space_index = |spaces: &mut Vec<CorpusSpace>, algebra: &FiniteAlgebra| -> Result<usize, SpaceError> {
        if let Some(i) = spaces.iter().position(|s| s.algebra_name == algebra.name) {
            return Ok(i);
        }
        let space = dual_space(logic, algebra)?;
        spaces.push(CorpusSpace { algebra_name: algebra.name.clone(), space });
        Ok(spaces.len() - 1)
    };

    let mut functor = Checker::new("functor-laws", "duals-of-identities-and-composites");
    for hom in homs {
        let (rel, sp_src, sp_tgt, rel_report) =
            dual_morphism(&hom.map, logic, &hom.source, &hom.target)?;
        if !rel_report.passed() {
            functor.fail(format!("dual of {} fails checks: {}", hom.name, rel_report.render()));
            continue;
        }
        // identity homs dualize to the order
        let is_identity =
            hom.source.name == hom.target.name && hom.map.iter().enumerate().all(|(i, &v)| i == v);
        if is_identity {
            functor.instance(rel == order_morphism(&sp_src.poset), || {
                format!("dual of identity {} is not the order", hom.name)
            });
        }
        let si = space_index(&mut spaces, &hom.target)?; // relation source: dual of target
        let ti = space_index(&mut spaces, &hom.source)?; // relation target: dual of source
        debug_assert_eq!(sp_src.points(), spaces[si].space.points());
        debug_assert_eq!(sp_tgt.points(), spaces[ti].space.points());
        morphisms.push((hom.name.clone(), si, ti, rel));
    }

    // composites dualize to star composites in reverse order
    for f in homs {
        for g in homs {
            if f.target.name != g.source.name {
                continue;
            }
            let composite: Vec<usize> = f.map.iter().map(|&x| g.map[x]).collect();
            let (rel_gf, _, _, _) = dual_morphism(&composite, logic, &f.source, &g.target)?;
            let (rel_f, _, sp_f_tgt, _) = dual_morphism(&f.map, logic, &f.source, &f.target)?;
            let (rel_g, _, _, _) = dual_morphism(&g.map, logic, &g.source, &g.target)?;
            let starred = star(&rel_f, &rel_g, &sp_f_tgt);
            functor.instance(rel_gf == starred, || {
                format!("dual of {} then {} differs from the star composite", f.name, g.name)
            });
        }
    }
    report.push(functor.finish());

    // order morphisms are two-sided identities and star is associative on
    // every composable triple
    for (i, s) in spaces.iter().enumerate() {
        morphisms.push((format!("order_{}", s.algebra_name), i, i, order_morphism(&s.space.poset)));
    }
    let mut laws = Checker::new("star-category-laws", "star-identities-and-associativity");
    for (_, si, ti, rel) in &morphisms {
        report.merge(check_identity_laws(rel, &spaces[*si].space, &spaces[*ti].space));
    }
    for (n1, s1, t1, r1) in &morphisms {
        for (n2, s2, t2, r2) in &morphisms {
            if t1 != s2 {
                continue;
            }
            for (n3, s3, t3, r3) in &morphisms {
                if t2 != s3 {
                    continue;
                }
                let left = star(r3, &star(r2, r1, &spaces[*t2].space), &spaces[*t3].space);
                let right = star(&star(r3, r2, &spaces[*t3].space), r1, &spaces[*t3].space);
                laws.instance(left == right, || {
                    format!("associativity fails on {n1};{n2};{n3} ({s1},{t1},{s2},{t2},{s3},{t3})")
                });
            }
        }
    }
    report.push(laws.finish());

    // representation square: the box of a dual relation transports the
    // representation exactly as the homomorphism does (checked inside
    // dual_morphism, re-checked here end to end)
    let mut square = Checker::new("representation-square", "representation-commutes-with-duals");
    for hom in homs {
        let ded1 = Deductive::new(logic, &hom.source)?;
        let ded2 = Deductive::new(logic, &hom.target)?;
        let (repr1, _) = build_representation(&ded1, ClosureBase::optimal(&ded1)?)?;
        let (repr2, _) = build_representation(&ded2, ClosureBase::optimal(&ded2)?)?;
        let (rel, _, _, _) = dual_morphism(&hom.map, logic, &hom.source, &hom.target)?;
        for a in 0..hom.source.size() {
            square.instance(rel.box_of(&repr1.phi[a]) == repr2.phi[hom.map[a]], || {
                format!("square fails for {} at element {a}", hom.name)
            });
        }
    }
    report.push(square.finish());

    // canonical relations intertwine morphisms with the duals of their box
    // maps, and the pointwise equivalence behind it holds
    let mut nat = Checker::new("canonical-naturality", "canonical-relations-intertwine-morphisms");
    for (name, si, ti, rel) in &morphisms {
        let sp1 = &spaces[*si].space;
        let sp2 = &spaces[*ti].space;
        let (t1, _rebuilt1, t1_report) = canonical_relation(sp1)?;
        let (t2, rebuilt2, t2_report) = canonical_relation(sp2)?;
        nat.instance(t1_report.passed(), || format!("canonical relation of source of {name} fails"));
        nat.instance(t2_report.passed(), || format!("canonical relation of target of {name} fails"));
        let boxes = box_index_map(rel, sp1, sp2)?;
        let (dual_box, _, _, _) = dual_morphism(&boxes, logic, &sp2.algebra, &sp1.algebra)?;
        // pointwise: related points map to related optimal filters
        let ded1 = sp1.engine()?;
        let ded2 = sp2.engine()?;
        let opt1 = ded1.optimal_filters()?;
        let opt2 = ded2.optimal_filters()?;
        for x in 0..sp1.points() {
            let xi1 = opt1.index_of(&sp1.xi(x)).expect("onto");
            for y in 0..sp2.points() {
                let xi2 = opt2.index_of(&sp2.xi(y)).expect("onto");
                nat.instance(rel.contains(x, y) == dual_box.contains(xi1, xi2), || {
                    format!("{name}: pointwise square fails at ({x},{y})")
                });
            }
        }
        let lhs = star(&dual_box, &t1, &rebuilt2);
        let rhs = star(&t2, rel, &rebuilt2);
        nat.instance(lhs == rhs, || format!("naturality square fails for {name}"));
    }
    report.push(nat.finish());

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dual_space_of_m4_under_the_meet_logic() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let space = dual_space(&logic, &m4).unwrap();
        assert_eq!(space.points(), 2);
        assert_eq!(space.family.len(), 4);
        assert_eq!(space.xb, Subset::full(2));
        assert!(!space.poset.leq(0, 1) && !space.poset.leq(1, 0));
    }

    #[test]
    fn dual_space_of_h2_transports_the_implication_table() {
        let logic = fixtures::l_hil();
        let h2 = fixtures::h2();
        let space = dual_space(&logic, &h2).unwrap();
        assert_eq!(space.points(), 1);
        assert_eq!(space.family.len(), 2);
        // family members: the empty set and the whole point set
        let empty_idx = space.family.index_of(&Subset::empty(1)).unwrap();
        let full_idx = space.family.index_of(&Subset::full(1)).unwrap();
        let imp = |x: usize, y: usize| space.algebra.apply(0, &[x, y]);
        assert_eq!(imp(empty_idx, empty_idx), full_idx);
        assert_eq!(imp(full_idx, empty_idx), empty_idx);
        assert_eq!(imp(empty_idx, full_idx), full_idx);
        assert_eq!(imp(full_idx, full_idx), full_idx);
    }

    #[test]
    fn dual_space_of_the_trivial_algebra_is_empty() {
        let logic = fixtures::l_top_meet();
        let trivial = FiniteAlgebra::trivial(&logic.signature);
        let space = dual_space(&logic, &trivial).unwrap();
        assert_eq!(space.points(), 0);
        assert_eq!(space.family.len(), 1);
        assert_eq!(space.algebra.size(), 1);
    }

    #[test]
    fn theorem_free_logic_is_gated() {
        let logic = fixtures::l_meet_only();
        let c2 = fixtures::c2_meet_only();
        match dual_space(&logic, &c2) {
            Err(SpaceError::Gate(msg)) => assert!(msg.contains("theorems required")),
            other => panic!("expected a gate error, got {other:?}"),
        }
    }

    #[test]
    fn verify_space_is_clean_on_fixture_duals() {
        let meet = fixtures::l_top_meet();
        let hil = fixtures::l_hil();
        for (logic, algebra) in [
            (&meet, fixtures::m4_algebra()),
            (&meet, fixtures::c3_meet_algebra()),
            (&hil, fixtures::h2()),
            (&hil, fixtures::g3()),
        ] {
            let space = dual_space(logic, &algebra).unwrap();
            let report = verify_space(&space).unwrap();
            assert!(report.passed(), "{}: {}", algebra.name, report.render());
        }
    }

    #[test]
    fn corrupted_space_fails_the_closure_axiom() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let space = dual_space(&logic, &m4).unwrap();
        // drop the whole point set from the family; the algebra keeps its
        // indices so the top constant now denotes a smaller member
        let full = Subset::full(space.points());
        let family = SetFamily::from_members(
            space.points(),
            space.family.iter().filter(|u| **u != full).copied(),
        );
        let mut tables = Vec::new();
        for conn in 0..space.logic.signature.len() {
            let arity = space.logic.signature.arity(conn);
            tables.push(vec![0usize; family.len().pow(arity as u32)]);
        }
        let algebra =
            FiniteAlgebra::new("corrupted", &space.logic.signature, family.len(), tables).unwrap();
        let corrupted =
            SPriestleySpace::assemble(logic.clone(), space.poset.clone(), family, algebra);
        let report = verify_space(&corrupted).unwrap();
        assert!(!report.passed());
        let failing = report.check("family-of-up-sets-with-top").unwrap();
        assert!(!failing.passed(), "dropping the carrier must fail the family axiom");
        assert!(!report.check("up-sets-from-family").unwrap().passed());
    }

    #[test]
    fn xi_reports_are_clean_on_fixture_duals() {
        let meet = fixtures::l_top_meet();
        let hil = fixtures::l_hil();
        for (logic, algebra) in [
            (&meet, fixtures::m4_algebra()),
            (&hil, fixtures::h2()),
        ] {
            let space = dual_space(logic, &algebra).unwrap();
            let report = check_xi(&space).unwrap();
            assert!(report.passed(), "{}: {}", algebra.name, report.render());
        }
    }

    #[test]
    fn b_structures_on_the_m4_dual() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let space = dual_space(&logic, &m4).unwrap();
        let (bs, report) = b_structures(&space).unwrap();
        assert!(report.passed(), "{}", report.render());
        // the family is already intersection closed; unions add nothing new
        assert_eq!(bs.meet_closure.family.len(), 4);
        assert_eq!(bs.lattice_closure.family.len(), 4);
    }

    #[test]
    fn dual_morphism_of_the_embedding() {
        let logic = fixtures::l_top_meet();
        let c2 = fixtures::c2_meet_algebra();
        let m4 = fixtures::m4_algebra();
        let (rel, sp_src, sp_tgt, mut report) = dual_morphism(&[0, 3], &logic, &c2, &m4).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(rel.source_points(), 2); // dual of m4
        assert_eq!(rel.target_points, 1); // dual of c2
        // every optimal filter of m4 pulls back into the single point
        assert!(rel.rows.iter().all(|r| r.is_full()));
        report.merge(check_identity_laws(&rel, &sp_src, &sp_tgt));
        assert!(report.passed());
    }

    #[test]
    fn order_is_a_morphism_with_identity_box() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let space = dual_space(&logic, &m4).unwrap();
        let le = order_morphism(&space.poset);
        let report = verify_morphism(&le, &space, &space).unwrap();
        assert!(report.passed(), "{}", report.render());
        for u in space.family.iter() {
            assert_eq!(le.box_of(u), *u);
        }
    }

    #[test]
    fn canonical_relation_is_an_isomorphism() {
        let logic = fixtures::l_top_meet();
        for algebra in [fixtures::m4_algebra(), fixtures::c3_meet_algebra()] {
            let space = dual_space(&logic, &algebra).unwrap();
            let (_, _, report) = canonical_relation(&space).unwrap();
            assert!(report.passed(), "{}: {}", algebra.name, report.render());
        }
    }

    #[test]
    fn natural_isos_hold_on_the_meet_corpus() {
        let logic = fixtures::l_top_meet();
        let homs = fixtures::meet_hom_corpus();
        let report = check_natural_isos(&logic, &homs).unwrap();
        assert!(report.passed(), "{}", report.render());
    }
}
