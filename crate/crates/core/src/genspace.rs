//! Generalized Priestley spaces at finite scale, their duals, and the
//! relational morphisms between them.
//!
//! On a finite carrier the topology is discrete, so "clopen up-set" means
//! up-set, denseness of the designated set means equality with the whole
//! carrier, and compactness is automatic. Every axiom is checked in that
//! restated form, next to which it is documented.

use crate::poset::FinitePoset;
use crate::report::{Checker, Report};
use crate::semilattice::{is_sup_homomorphism, FamilySemilattice, MeetSemilattice, SemilatticeError, SigmaRepresentation};
use crate::subset::{SetFamily, Subset};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenSpaceError {
    #[error("semilattice error: {0}")]
    Semilattice(#[from] SemilatticeError),
    #[error("axiom {axiom} fails: {witness}")]
    Axiom { axiom: &'static str, witness: String },
}

/// A finite generalized Priestley space: a poset of points with a
/// designated subset, carrying the computed family of admissible up-sets.
#[derive(Clone, Debug)]
pub struct GenPriestleySpace {
    pub poset: FinitePoset,
    pub designated: Subset,
    /// Admissible up-sets: up-sets whose complement has all its maximal
    /// points designated. Cached at construction.
    pub admissibles: SetFamily,
}

/// Up-sets of a poset, as a canonical family.
pub fn up_sets(poset: &FinitePoset) -> SetFamily {
    SetFamily::from_members(
        poset.size(),
        poset.carrier().subsets().filter(|u| poset.is_up_set(u)),
    )
}

fn admissible_family(poset: &FinitePoset, designated: &Subset) -> SetFamily {
    SetFamily::from_members(
        poset.size(),
        up_sets(poset)
            .iter()
            .filter(|u| poset.max_elements(&u.complement()).is_subset_of(designated))
            .copied(),
    )
}

impl GenPriestleySpace {
    /// Validates the axioms in their finite form:
    /// denseness of the designated set (= equality with the carrier),
    /// the fixed-point description of the designated set through the
    /// admissibles, and separation of the order by the admissibles.
    pub fn new(poset: FinitePoset, designated: Subset) -> Result<Self, GenSpaceError> {
        let admissibles = admissible_family(&poset, &designated);
        let space = GenPriestleySpace { poset, designated, admissibles };
        let report = space.verify();
        if let Some(check) = report.checks.iter().find(|c| !c.passed()) {
            return Err(GenSpaceError::Axiom {
                axiom: "generalized-priestley",
                witness: format!("{}: {}", check.id, check.failures[0]),
            });
        }
        Ok(space)
    }

    pub fn points(&self) -> usize {
        self.poset.size()
    }

    /// The dual meet-semilattice of admissible up-sets under intersection.
    pub fn admissible_semilattice(&self) -> Result<FamilySemilattice, SemilatticeError> {
        FamilySemilattice::new(&self.admissibles)
    }

    /// Runs the axiom checks and the two structural facts about the union
    /// closure of the admissibles.
    pub fn verify(&self) -> Report {
        let mut report = Report::new();
        let n = self.points();

        // denseness degenerates to equality with the carrier
        let mut ds2 = Checker::new("designated-dense", "designated-set-dense");
        ds2.instance(self.designated == Subset::full(n), || {
            format!("designated {:?} is a proper subset of the carrier", self.designated)
        });
        report.push(ds2.finish());

        // the designated points are exactly those whose missing admissibles
        // form a non-empty up-directed family
        let mut ds3 = Checker::new("designated-fixed-point", "designated-set-characterization");
        for x in 0..n {
            let missing: Vec<Subset> =
                self.admissibles.iter().filter(|u| !u.contains(x)).copied().collect();
            let directed = !missing.is_empty()
                && missing.iter().all(|u| {
                    missing.iter().all(|v| {
                        missing.iter().any(|w| u.is_subset_of(w) && v.is_subset_of(w))
                    })
                });
            ds3.instance(self.designated.contains(x) == directed, || {
                format!("point {x}: designated={} directed={}", self.designated.contains(x), directed)
            });
        }
        report.push(ds3.finish());

        // the admissibles separate the order
        let mut ds4 = Checker::new("order-separation", "order-determined-by-admissibles");
        for x in 0..n {
            for y in 0..n {
                let sep = self
                    .admissibles
                    .iter()
                    .all(|u| !u.contains(x) || u.contains(y));
                ds4.instance(self.poset.leq(x, y) == sep, || {
                    format!("pair ({x},{y}): leq={} separation={}", self.poset.leq(x, y), sep)
                });
            }
        }
        report.push(ds4.finish());

        // union closure of the admissibles: all non-empty up-sets, plus the
        // empty set exactly when it is admissible
        let mut cl = Checker::new("admissible-union-closure", "union-closure-of-admissibles");
        let closure = self.admissibles.close_under(|a, b| a.union(b));
        let expected = SetFamily::from_members(
            n,
            up_sets(&self.poset)
                .iter()
                .filter(|u| !u.is_empty() || self.admissibles.contains(u))
                .copied(),
        );
        cl.instance(closure == expected, || {
            format!("closure {closure:?} expected {expected:?}")
        });
        report.push(cl.finish());

        // the union closure is the distributive envelope of the admissibles:
        // the identity embedding preserves finite-join behaviour and every
        // closure member is the union of the admissibles below it
        let mut env = Checker::new("union-closure-is-envelope", "union-closure-as-distributive-envelope");
        match (FamilySemilattice::new(&self.admissibles), FamilySemilattice::new(&closure)) {
            (Ok(adm), Ok(cls)) => {
                let embed: Vec<usize> = (0..self.admissibles.len())
                    .map(|i| closure.index_of(&self.admissibles.member(i)).expect("closure extends"))
                    .collect();
                match is_sup_homomorphism(&embed, &adm.semilattice, &cls.semilattice) {
                    Ok(ok) => env.instance(ok, || "identity embedding loses join behaviour".to_string()),
                    Err(e) => env.fail(format!("identity embedding not a homomorphism: {e}")),
                }
                for w in closure.iter() {
                    let rebuilt = self
                        .admissibles
                        .iter()
                        .filter(|u| u.is_subset_of(w))
                        .fold(Subset::empty(n), |acc, u| acc.union(u));
                    env.instance(rebuilt == *w, || format!("member {w:?} is not join-covered"));
                }
            }
            (Err(e), _) | (_, Err(e)) => env.fail(format!("closure not a semilattice: {e}")),
        }
        report.push(env.finish());

        report
    }
}

/// The dual space of a distributive meet-semilattice: optimal filters
/// ordered by inclusion, with the irreducible ones designated. Also checks
/// that the admissibles come out as exactly the image of the
/// representation map.
pub fn gen_priestley_dual(
    m: &MeetSemilattice,
) -> Result<(GenPriestleySpace, SigmaRepresentation), GenSpaceError> {
    let sigma = m.sigma()?;
    let opt = &sigma.base;
    let irr = m.irreducible_filters();
    let k = opt.len();
    let poset = FinitePoset::new(k, |i, j| opt.member(i).is_subset_of(&opt.member(j)))
        .expect("inclusion order is a poset");
    let mut designated = Subset::empty(k);
    for (i, f) in opt.iter().enumerate() {
        if irr.contains(f) {
            designated.insert(i);
        }
    }
    let space = GenPriestleySpace::new(poset, designated)?;
    let image = SetFamily::from_members(k, sigma.map.iter().copied());
    if space.admissibles != image {
        return Err(GenSpaceError::Axiom {
            axiom: "admissibles-are-the-representation-image",
            witness: format!("admissibles {:?} vs image {:?}", space.admissibles, image),
        });
    }
    Ok((space, sigma))
}

/// The evaluation map sending a point to the set of admissibles containing
/// it, as a filter of the dual semilattice.
pub struct EpsilonMap {
    /// Per point, the subset of admissible-family indices containing it.
    pub map: Vec<Subset>,
    /// The dual semilattice the values are filters of.
    pub dual: FamilySemilattice,
}

/// Computes the evaluation map and verifies it is an order isomorphism
/// onto the optimal filters of the dual semilattice, matching designated
/// points with irreducible filters.
pub fn eval_epsilon(space: &GenPriestleySpace) -> Result<(EpsilonMap, Report), GenSpaceError> {
    let dual = space.admissible_semilattice()?;
    let k = dual.family.len();
    let n = space.points();
    let map: Vec<Subset> = (0..n)
        .map(|x| {
            let mut s = Subset::empty(k);
            for (i, u) in dual.family.iter().enumerate() {
                if u.contains(x) {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let mut report = Report::new();

    let opt = dual.semilattice.optimal_filters();
    let irr = dual.semilattice.irreducible_filters();

    let mut ck = Checker::new("evaluation-into-optimals", "evaluation-lands-in-optimal-filters");
    for x in 0..n {
        ck.instance(opt.contains(&map[x]), || format!("point {x}: {:?} not optimal", map[x]));
        if space.designated.contains(x) {
            ck.instance(irr.contains(&map[x]), || {
                format!("designated point {x}: {:?} not irreducible", map[x])
            });
        }
    }
    report.push(ck.finish());

    let mut onto = Checker::new("evaluation-bijective", "evaluation-onto-optimal-filters");
    let image = SetFamily::from_members(k, map.iter().copied());
    onto.instance(image.len() == n, || "evaluation not injective".to_string());
    onto.instance(image == opt, || format!("image {image:?} vs optimal filters {opt:?}"));
    let desig_image =
        SetFamily::from_members(k, space.designated.iter().map(|x| map[x]));
    onto.instance(desig_image == irr, || {
        format!("designated image {desig_image:?} vs irreducible {irr:?}")
    });
    report.push(onto.finish());

    let mut ord = Checker::new("evaluation-order-iso", "evaluation-preserves-and-reflects-order");
    for x in 0..n {
        for y in 0..n {
            ord.instance(
                space.poset.leq(x, y) == map[x].is_subset_of(&map[y]),
                || format!("pair ({x},{y})"),
            );
        }
    }
    report.push(ord.finish());

    Ok((EpsilonMap { map, dual }, report))
}

/// A relation between the points of two spaces, stored row-wise: `rows[x]`
/// is the set of points related to `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPriestleyMorphism {
    pub rows: Vec<Subset>,
    pub target_points: usize,
}

impl GenPriestleyMorphism {
    pub fn new(rows: Vec<Subset>, target_points: usize) -> Self {
        for r in &rows {
            assert_eq!(r.width(), target_points, "row width mismatch");
        }
        GenPriestleyMorphism { rows, target_points }
    }

    pub fn source_points(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// The box operator: points whose whole image lies inside `u`.
    pub fn box_of(&self, u: &Subset) -> Subset {
        assert_eq!(u.width(), self.target_points, "width mismatch");
        let mut out = Subset::empty(self.rows.len());
        for (x, row) in self.rows.iter().enumerate() {
            if row.is_subset_of(u) {
                out.insert(x);
            }
        }
        out
    }

    /// Whether every image is a principal up-set of the target order.
    pub fn is_functional(&self, target: &FinitePoset) -> bool {
        self.rows.iter().all(|row| {
            (0..target.size()).any(|y| *row == target.up_of(y))
        })
    }

    /// Plain relational composition `self . first` (apply `first`, then
    /// `self`).
    pub fn compose_after(&self, first: &GenPriestleyMorphism) -> GenPriestleyMorphism {
        let rows = first
            .rows
            .iter()
            .map(|mid| {
                let mut out = Subset::empty(self.target_points);
                for y in mid.iter() {
                    out = out.union(&self.rows[y]);
                }
                out
            })
            .collect();
        GenPriestleyMorphism::new(rows, self.target_points)
    }
}

/// The identity morphism of a space: its order relation.
pub fn order_morphism(poset: &FinitePoset) -> GenPriestleyMorphism {
    GenPriestleyMorphism::new((0..poset.size()).map(|x| poset.up_of(x)).collect(), poset.size())
}

/// Checks the two morphism axioms of `rel` from `x1` to `x2`: boxes of
/// admissibles are admissible, and non-related pairs are witnessed by an
/// admissible separating them.
pub fn check_gen_priestley_morphism(
    rel: &GenPriestleyMorphism,
    x1: &GenPriestleySpace,
    x2: &GenPriestleySpace,
) -> Report {
    let mut report = Report::new();
    let mut dsr1 = Checker::new("box-preserves-admissibles", "boxes-of-admissibles-admissible");
    for u in x2.admissibles.iter() {
        dsr1.instance(x1.admissibles.contains(&rel.box_of(u)), || {
            format!("box of {u:?} = {:?} not admissible", rel.box_of(u))
        });
    }
    report.push(dsr1.finish());

    let mut dsr2 = Checker::new("witnessed-non-membership", "non-pairs-witnessed-by-admissible");
    for x in 0..rel.source_points() {
        for y in 0..rel.target_points {
            if rel.contains(x, y) {
                continue;
            }
            let witnessed =
                x2.admissibles.iter().any(|u| !u.contains(y) && rel.rows[x].is_subset_of(u));
            dsr2.instance(witnessed, || format!("pair ({x},{y}) has no separating admissible"));
        }
    }
    report.push(dsr2.finish());
    report
}

/// The dual relation of a homomorphism `h : m1 -> m2`, a morphism from the
/// dual space of `m2` to the dual space of `m1`: an optimal filter `P` of
/// `m2` relates to `Q` of `m1` when the preimage of `P` sits inside `Q`.
/// Verifies that boxes of the representation images transport along `h`,
/// and that the relation is functional whenever `h` is a sup-homomorphism.
pub fn relation_of_hom(
    h: &[usize],
    m1: &MeetSemilattice,
    m2: &MeetSemilattice,
) -> Result<(GenPriestleyMorphism, Report), GenSpaceError> {
    let (space2, sigma1) = gen_priestley_dual(m1)?; // dual of m1: target
    let (_space1, sigma2) = gen_priestley_dual(m2)?; // dual of m2: source
    let src = &sigma2.base; // optimal filters of m2
    let tgt = &sigma1.base; // optimal filters of m1
    let rows: Vec<Subset> = src
        .iter()
        .map(|p| {
            let preimage = Subset::from_elems(
                m1.size(),
                &(0..m1.size()).filter(|&a| p.contains(h[a])).collect::<Vec<_>>(),
            );
            let mut row = Subset::empty(tgt.len());
            for (qi, q) in tgt.iter().enumerate() {
                if preimage.is_subset_of(q) {
                    row.insert(qi);
                }
            }
            row
        })
        .collect();
    let rel = GenPriestleyMorphism::new(rows, tgt.len());

    let mut report = Report::new();
    let mut transport = Checker::new("box-transports-representation", "boxes-transport-along-homomorphism");
    for a in 0..m1.size() {
        transport.instance(rel.box_of(&sigma1.of(a)) == sigma2.of(h[a]), || {
            format!("element {a}: box {:?} vs image {:?}", rel.box_of(&sigma1.of(a)), sigma2.of(h[a]))
        });
    }
    report.push(transport.finish());

    if is_sup_homomorphism(h, m1, m2)? {
        let mut func = Checker::new("sup-hom-gives-functional-dual", "functional-duals-of-sup-homomorphisms");
        func.instance(rel.is_functional(&space2.poset), || {
            "dual of a sup-homomorphism is not functional".to_string()
        });
        report.push(func.finish());
    }
    Ok((rel, report))
}

/// Composition in the dual category: `(x, z)` is related exactly when every
/// admissible of the final space whose double box contains `x` also
/// contains `z`. Plain relational composition does not stay inside the
/// morphism class; this operation does.
pub fn star_compose(
    s: &GenPriestleyMorphism,
    r: &GenPriestleyMorphism,
    x3_admissibles: &SetFamily,
) -> GenPriestleyMorphism {
    assert_eq!(r.target_points, s.source_points(), "middle spaces differ");
    let n1 = r.source_points();
    let n3 = s.target_points;
    let rows: Vec<Subset> = (0..n1)
        .map(|x| {
            let mut row = Subset::full(n3);
            for u in x3_admissibles.iter() {
                if r.box_of(&s.box_of(u)).contains(x) {
                    row = row.intersection(u);
                }
            }
            row
        })
        .collect();
    GenPriestleyMorphism::new(rows, n3)
}
