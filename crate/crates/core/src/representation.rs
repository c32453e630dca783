//! Representation of a reduced algebra inside the up-sets of a closure
//! base of its filters, the induced meet-semilattice of finite
//! intersections, and the executable isomorphism checks tying the filter
//! and ideal structure of the algebra to that semilattice.

use crate::filters::{Deductive, EngineError};
use crate::logic::FiniteAlgebra;
use crate::report::{Checker, Report};
use crate::semilattice::{FamilySemilattice, SemilatticeError};
use crate::subset::{SetFamily, Subset};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepresentationError {
    #[error("engine error: {0}")]
    Engine(#[from] EngineError),
    #[error("semilattice error: {0}")]
    Semilattice(#[from] SemilatticeError),
    #[error("family is not a closure base: filter {0} is not an intersection of members")]
    NotClosureBase(String),
    #[error("optimal-kind base contains a non-optimal filter {0}")]
    NotOptimal(String),
    #[error("representation map not injective at ({0}, {1}); the algebra is not reduced")]
    NotInjective(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    AllOptimal,
    AllIrreducible,
    Custom,
}

/// A family of filters such that every filter is an intersection of
/// members. Intersecting the empty subfamily yields the whole carrier, so
/// the improper filter never needs to be a member.
#[derive(Clone, Debug)]
pub struct ClosureBase {
    pub family: SetFamily,
    pub kind: BaseKind,
}

impl ClosureBase {
    fn validate(ded: &Deductive, family: &SetFamily, kind: BaseKind) -> Result<(), RepresentationError> {
        for f in ded.filters().iter() {
            let inter = family
                .iter()
                .filter(|p| f.is_subset_of(p))
                .fold(ded.carrier(), |acc, p| acc.intersection(p));
            if inter != *f {
                return Err(RepresentationError::NotClosureBase(format!("{f:?}")));
            }
        }
        if kind == BaseKind::AllOptimal {
            let opt = ded.optimal_filters()?;
            if let Some(bad) = family.iter().find(|p| !opt.contains(p)) {
                return Err(RepresentationError::NotOptimal(format!("{bad:?}")));
            }
        }
        Ok(())
    }

    pub fn optimal(ded: &Deductive) -> Result<Self, RepresentationError> {
        let family = ded.optimal_filters()?;
        Self::validate(ded, &family, BaseKind::AllOptimal)?;
        Ok(ClosureBase { family, kind: BaseKind::AllOptimal })
    }

    pub fn irreducible(ded: &Deductive) -> Result<Self, RepresentationError> {
        let family = ded.irreducible_filters();
        Self::validate(ded, &family, BaseKind::AllIrreducible)?;
        Ok(ClosureBase { family, kind: BaseKind::AllIrreducible })
    }

    pub fn custom(ded: &Deductive, family: SetFamily) -> Result<Self, RepresentationError> {
        Self::validate(ded, &family, BaseKind::Custom)?;
        Ok(ClosureBase { family, kind: BaseKind::Custom })
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }
}

/// The representation of an algebra over a closure base: each element maps
/// to the set of base members containing it, and the operations are
/// transported onto the image.
#[derive(Clone, Debug)]
pub struct Representation {
    pub base: ClosureBase,
    /// Element -> subset of base indices.
    pub phi: Vec<Subset>,
    /// The image algebra, living on canonical image indices.
    pub image: FiniteAlgebra,
    /// Element -> image index, and back.
    pub image_of: Vec<usize>,
    pub elem_of: Vec<usize>,
    /// The image values in canonical order.
    pub image_family: SetFamily,
}

impl Representation {
    /// Intersection of the images of a set of elements; all base points for
    /// the empty set.
    pub fn phi_hat(&self, b: &Subset) -> Subset {
        b.iter().fold(Subset::full(self.base.len()), |acc, a| acc.intersection(&self.phi[a]))
    }

    /// The image of an element set as a set of image indices.
    pub fn image_set(&self, b: &Subset) -> Subset {
        Subset::from_elems(
            self.image.size(),
            &b.iter().map(|a| self.image_of[a]).collect::<Vec<_>>(),
        )
    }

    /// Preimage of a set of image indices.
    pub fn preimage_set(&self, g: &Subset) -> Subset {
        Subset::from_elems(
            self.phi.len(),
            &(0..self.phi.len()).filter(|&a| g.contains(self.image_of[a])).collect::<Vec<_>>(),
        )
    }
}

/// Builds the representation over a base and verifies it is an algebra and
/// order isomorphism onto its image, plus the finite-intersection
/// non-degeneracy fact (no non-empty finite set of elements is contained in
/// exactly the improper filter).
pub fn build_representation(
    ded: &Deductive,
    base: ClosureBase,
) -> Result<(Representation, Report), RepresentationError> {
    let n = ded.size();
    let k = base.len();
    let phi: Vec<Subset> = (0..n)
        .map(|a| {
            let mut s = Subset::empty(k);
            for (i, p) in base.family.iter().enumerate() {
                if p.contains(a) {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    for a in 0..n {
        for b in (a + 1)..n {
            if phi[a] == phi[b] {
                return Err(RepresentationError::NotInjective(a, b));
            }
        }
    }
    let image_family = SetFamily::from_members(k, phi.iter().copied());
    let image_of: Vec<usize> =
        (0..n).map(|a| image_family.index_of(&phi[a]).expect("image member")).collect();
    let mut elem_of = vec![0usize; n];
    for a in 0..n {
        elem_of[image_of[a]] = a;
    }
    let sig = &ded.logic.signature;
    let tables: Vec<Vec<usize>> = (0..sig.len())
        .map(|conn| {
            crate::logic::assignments(n, sig.arity(conn))
                .map(|img_args| {
                    let args: Vec<usize> = img_args.iter().map(|&i| elem_of[i]).collect();
                    image_of[ded.algebra.apply(conn, &args)]
                })
                .collect()
        })
        .collect();
    let image = FiniteAlgebra::new(&format!("phi[{}]", ded.algebra.name), sig, n, tables)
        .expect("transported tables are total");

    let repr = Representation { base, phi, image, image_of, elem_of, image_family };
    let mut report = Report::new();

    // algebra isomorphism onto the image
    let mut hom = Checker::new("representation-homomorphism", "representation-is-an-isomorphism");
    for conn in 0..sig.len() {
        for args in crate::logic::assignments(n, sig.arity(conn)) {
            let img_args: Vec<usize> = args.iter().map(|&a| repr.image_of[a]).collect();
            hom.instance(
                repr.image.apply(conn, &img_args) == repr.image_of[ded.algebra.apply(conn, &args)],
                || format!("operation {} at {:?}", sig.name(conn), args),
            );
        }
    }
    report.push(hom.finish());

    // order isomorphism with the specialization quasiorder
    let mut ord = Checker::new("representation-order-iso", "representation-reflects-specialization");
    for a in 0..n {
        for b in 0..n {
            ord.instance(
                ded.leq_s(a, b) == repr.phi[a].is_subset_of(&repr.phi[b]),
                || format!("pair ({a},{b})"),
            );
        }
    }
    report.push(ord.finish());

    // no non-empty finite element set is contained in exactly the improper
    // filter
    let mut nd = Checker::new("no-singleton-improper-hull", "finite-hulls-avoid-improper-only");
    if let Some(improper_idx) = repr.base.family.index_of(&ded.carrier()) {
        let bad = Subset::singleton(repr.base.len(), improper_idx);
        for b in ded.carrier().subsets() {
            if b.is_empty() {
                continue;
            }
            nd.instance(repr.phi_hat(&b) != bad, || format!("B={b:?} hull is the improper point"));
        }
    } else {
        nd.instance(true, || unreachable!());
    }
    report.push(nd.finish());

    Ok((repr, report))
}

/// Filter generation transported through the representation: membership in
/// a generated filter is inclusion of hulls, and generation commutes with
/// taking images. Also checks the irreducibility criterion through
/// up-directed image complements.
pub fn check_theorem_3_3(ded: &Deductive, repr: &Representation) -> Result<Report, RepresentationError> {
    let mut report = Report::new();
    let n = ded.size();
    let img_ded = Deductive::new(ded.logic, &repr.image)?;

    // (1) images of base members form a closure base for the image algebra
    let mut c1 = Checker::new("image-base-is-closure-base", "image-of-base-is-a-base");
    let image_base: Vec<Subset> = repr.base.family.iter().map(|p| repr.image_set(p)).collect();
    for f in img_ded.filters().iter() {
        let inter = image_base
            .iter()
            .filter(|p| f.is_subset_of(p))
            .fold(img_ded.carrier(), |acc, p| acc.intersection(p));
        c1.instance(inter == *f, || format!("image filter {f:?} not an intersection"));
    }
    report.push(c1.finish());

    // (2) three-way membership equivalence
    let mut c2 = Checker::new("generation-versus-hulls", "membership-iff-hull-inclusion");
    for b in ded.carrier().subsets() {
        let fg = ded.generate(&b);
        let img_fg = img_ded.generate(&repr.image_set(&b));
        for a in 0..n {
            let m1 = fg.contains(a);
            let m2 = repr.phi_hat(&b).is_subset_of(&repr.phi[a]);
            let m3 = img_fg.contains(repr.image_of[a]);
            c2.instance(m1 == m2 && m2 == m3, || {
                format!("a={a} B={b:?}: generated={m1} hull={m2} image={m3}")
            });
        }
    }
    report.push(c2.finish());

    // (3) generation commutes with the image map
    let mut c3 = Checker::new("generation-commutes-with-image", "image-of-generated-filter");
    for b in ded.carrier().subsets() {
        let lhs = img_ded.generate(&repr.image_set(&b));
        let rhs = repr.image_set(&ded.generate(&b));
        c3.instance(lhs == rhs, || format!("B={b:?}: {lhs:?} vs {rhs:?}"));
    }
    report.push(c3.finish());

    // (4) generated filters agree exactly when hulls agree
    let mut c4 = Checker::new("hulls-determine-generation", "equal-hulls-iff-equal-filters");
    for b1 in ded.carrier().subsets() {
        for b2 in ded.carrier().subsets() {
            let lhs = ded.generate(&b1) == ded.generate(&b2);
            let rhs = repr.phi_hat(&b1) == repr.phi_hat(&b2);
            c4.instance(lhs == rhs, || format!("B={b1:?} B'={b2:?}: filters={lhs} hulls={rhs}"));
        }
    }
    report.push(c4.finish());

    // irreducibility through up-directed image complements, over the
    // optimal filters
    let mut c5 = Checker::new("irreducible-by-image-complement", "irreducibility-via-updirected-images");
    let irr = ded.irreducible_filters();
    for f in ded.optimal_filters()?.iter() {
        let images: Vec<Subset> =
            f.complement().iter().map(|a| repr.phi[a]).collect();
        let directed = !images.is_empty()
            && images.iter().all(|u| {
                images.iter().all(|v| {
                    images.iter().any(|w| u.is_subset_of(w) && v.is_subset_of(w))
                })
            });
        c5.instance(irr.contains(f) == directed, || {
            format!("F={f:?}: irreducible={} image-directed={}", irr.contains(f), directed)
        });
    }
    report.push(c5.finish());

    Ok(report)
}

/// The meet-semilattice of finite intersections of representation images.
#[derive(Clone, Debug)]
pub struct SSemilattice {
    /// Members as subsets of the base point space, canonically ordered.
    pub members: SetFamily,
    /// The semilattice structure on member indices.
    pub lattice: FamilySemilattice,
    /// Element -> member index of its image.
    pub class_of: Vec<usize>,
    /// The top member (hull of the empty set).
    pub top_index: usize,
}

impl SSemilattice {
    /// Member index of the hull of an element set.
    pub fn hull_index(&self, repr: &Representation, b: &Subset) -> usize {
        self.members.index_of(&repr.phi_hat(b)).expect("hull is a member")
    }

    /// Preimage of a set of member indices.
    pub fn preimage(&self, g: &Subset) -> Subset {
        Subset::from_elems(
            self.class_of.len(),
            &(0..self.class_of.len()).filter(|&a| g.contains(self.class_of[a])).collect::<Vec<_>>(),
        )
    }

    /// Image of an element set as member indices.
    pub fn image(&self, b: &Subset) -> Subset {
        Subset::from_elems(
            self.members.len(),
            &b.iter().map(|a| self.class_of[a]).collect::<Vec<_>>(),
        )
    }
}

/// Builds the semilattice of finite-intersection hulls and checks its
/// basic shape: bottom behaviour against bottom families, and the
/// non-empty-hull description when the logic has axioms.
pub fn s_semilattice(
    ded: &Deductive,
    repr: &Representation,
) -> Result<(SSemilattice, Report), RepresentationError> {
    let members = SetFamily::from_members(
        repr.base.len(),
        ded.carrier().subsets().map(|b| repr.phi_hat(&b)),
    );
    let lattice = FamilySemilattice::new(&members)?;
    let class_of: Vec<usize> =
        (0..ded.size()).map(|a| members.index_of(&repr.phi[a]).expect("image member")).collect();
    let top_index = members.index_of(&Subset::full(repr.base.len())).expect("empty hull");
    let sl = SSemilattice { members, lattice, class_of, top_index };

    let mut report = Report::new();
    let mut bot = Checker::new("bottom-versus-bottom-family", "bottom-member-iff-bottom-family");
    let (has_family, _) = ded.bottom_family();
    bot.instance(
        has_family == sl.members.contains(&Subset::empty(repr.base.len())),
        || "bottom family does not match the empty member".to_string(),
    );
    if has_family {
        let bottom = sl.lattice.semilattice.bottom();
        bot.instance(
            sl.members.member(bottom).is_empty(),
            || format!("bottom member {:?} is not the empty set", sl.members.member(bottom)),
        );
    }
    report.push(bot.finish());

    if ded.logic.has_axioms() {
        let mut ne = Checker::new("nonempty-hull-description", "hulls-of-nonempty-sets-suffice");
        let nonempty = SetFamily::from_members(
            repr.base.len(),
            ded.carrier().subsets().filter(|b| !b.is_empty()).map(|b| repr.phi_hat(&b)),
        );
        ne.instance(nonempty == sl.members, || "non-empty hulls miss a member".to_string());
        report.push(ne.finish());
    }

    Ok((sl, report))
}

/// Families of up to `max_members` subsets of the carrier (as vectors of
/// subsets, empty family included).
fn subset_families(carrier: Subset, max_members: usize) -> Vec<Vec<Subset>> {
    let all: Vec<Subset> = carrier.subsets().collect();
    let mut out: Vec<Vec<Subset>> = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_members {
        let mut next = Vec::new();
        for idxs in &layer {
            let start = idxs.last().map(|&i| i + 1).unwrap_or(0);
            for i in start..all.len() {
                let mut v = idxs.clone();
                v.push(i);
                out.push(v.iter().map(|&j| all[j]).collect());
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// The filter- and ideal-structure transfer between an algebra and its
/// semilattice of hulls: generation equivalences, the filter-lattice
/// isomorphism, strong-ideal against Frink-ideal transfer with primeness,
/// and (under per-algebra filter distributivity) the union covering
/// equivalence and the optimal-filter isomorphism.
pub fn check_section_4_isos(ded: &Deductive) -> Result<Report, RepresentationError> {
    let base = ClosureBase::optimal(ded)?;
    let (repr, mut report) = build_representation(ded, base)?;
    let (sl, sl_report) = s_semilattice(ded, &repr)?;
    report.merge(sl_report);
    let msl = &sl.lattice.semilattice;

    // generation equivalence: intersections of generated filters against
    // principal filters of hulls, for families of up to three generator sets
    let mut c43 = Checker::new("generation-equivalence", "filter-generation-matches-hull-order");
    for family in subset_families(ded.carrier(), 3) {
        for b in ded.carrier().subsets() {
            let lhs = family
                .iter()
                .fold(ded.carrier(), |acc, bi| acc.intersection(&ded.generate(bi)))
                .is_subset_of(&ded.generate(&b));
            let rhs = family
                .iter()
                .fold(Subset::full(msl.size()), |acc, bi| {
                    acc.intersection(&msl.poset().up_of(sl.hull_index(&repr, bi)))
                })
                .is_subset_of(&msl.poset().up_of(sl.hull_index(&repr, &b)));
            c43.instance(lhs == rhs, || format!("family={family:?} B={b:?}: {lhs} vs {rhs}"));
        }
    }
    report.push(c43.finish());

    // filter transfer both ways, with mutually inverse maps
    let mut c44 = Checker::new("filter-lattice-iso", "filters-transfer-to-hull-semilattice");
    let fi_a = ded.filters();
    let fi_m = msl.filters();
    let mut images = Vec::new();
    for f in fi_a.iter() {
        let gen = msl.filter_generate(&sl.image(f));
        c44.instance(fi_m.contains(&gen), || format!("image of {f:?} generates a non-filter"));
        c44.instance(sl.preimage(&gen) == *f, || format!("preimage roundtrip fails on {f:?}"));
        images.push(gen);
    }
    for g in fi_m.iter() {
        let pre = sl.preimage(g);
        c44.instance(ded.is_filter(&pre), || format!("preimage of {g:?} not a filter"));
        let phi_a = Subset::from_elems(msl.size(), &sl.class_of);
        let back = msl.filter_generate(&g.intersection(&phi_a));
        c44.instance(back == *g, || format!("generation roundtrip fails on {g:?}"));
    }
    let image_family = SetFamily::from_members(msl.size(), images.clone());
    c44.instance(
        image_family.len() == fi_a.len() && fi_a.len() == fi_m.len(),
        || format!("counts differ: {} vs {} vs {}", fi_a.len(), image_family.len(), fi_m.len()),
    );
    for (i, f) in fi_a.iter().enumerate() {
        for (j, g) in fi_a.iter().enumerate() {
            c44.instance(f.is_subset_of(g) == images[i].is_subset_of(&images[j]), || {
                format!("order mismatch between filters {i} and {j}")
            });
        }
    }
    report.push(c44.finish());

    // strong ideals land on down-sets of hull images and transfer as Frink
    // ideals with primeness, both directions
    let mut c46 = Checker::new("strong-ideal-transfer", "strong-ideals-transfer-as-frink-ideals");
    let strong = ded.strong_s_ideals()?;
    for i in strong.iter() {
        let img = sl.image(i);
        let generated = msl.poset().frink_ideal_generate(&img);
        let down = msl.poset().down_closure(&img);
        c46.instance(generated == down, || {
            format!("generated Frink ideal of {i:?} differs from the down-set")
        });
        c46.instance(msl.poset().is_frink_ideal(&generated), || {
            format!("transfer of {i:?} is not a Frink ideal")
        });
        c46.instance(sl.preimage(&generated) == *i, || {
            format!("preimage roundtrip fails on strong ideal {i:?}")
        });
        if ded.is_s_prime(i) {
            c46.instance(msl.is_wedge_prime(&generated), || {
                format!("primeness lost through transfer of {i:?}")
            });
        }
    }
    for j in msl.poset().frink_ideals().iter() {
        if !msl.is_wedge_prime(j) {
            continue;
        }
        let pre = sl.preimage(j);
        c46.instance(
            matches!(ded.is_strong_s_ideal(&pre), Ok(true)),
            || format!("preimage of prime Frink ideal {j:?} not strong"),
        );
        let back = msl.poset().frink_ideal_generate(&sl.image(&pre));
        c46.instance(back == *j, || format!("image roundtrip fails on {j:?}"));
        c46.instance(ded.is_s_prime(&pre), || format!("preimage of {j:?} not prime"));
    }
    report.push(c46.finish());

    if ded.is_filter_distributive_on() && ded.is_s_algebra() {
        // union covering: hulls are covered by finitely many hulls exactly
        // when the corresponding generated filters intersect accordingly
        let mut c49 = Checker::new("union-covering-equivalence", "hull-unions-match-filter-intersections");
        for family in subset_families(ded.carrier(), 3) {
            if family.is_empty() {
                continue;
            }
            for b in ded.carrier().subsets() {
                let lhs = family
                    .iter()
                    .fold(ded.carrier(), |acc, bi| acc.intersection(&ded.generate(bi)))
                    .is_subset_of(&ded.generate(&b));
                let union = family
                    .iter()
                    .fold(Subset::empty(repr.base.len()), |acc, bi| acc.union(&repr.phi_hat(bi)));
                let rhs = repr.phi_hat(&b).is_subset_of(&union);
                c49.instance(lhs == rhs, || format!("family={family:?} B={b:?}"));
            }
        }
        report.push(c49.finish());

        // optimal filters correspond through the same pair of maps
        let mut c411 = Checker::new("optimal-filter-iso", "optimal-filters-transfer-to-hull-semilattice");
        let opt_a = ded.optimal_filters()?;
        let opt_m = msl.optimal_filters();
        let mut opt_images = Vec::new();
        for f in opt_a.iter() {
            if f.is_empty() {
                continue;
            }
            let gen = msl.filter_generate(&sl.image(f));
            c411.instance(opt_m.contains(&gen), || format!("image of optimal {f:?} not optimal"));
            c411.instance(sl.preimage(&gen) == *f, || format!("roundtrip fails on {f:?}"));
            opt_images.push(gen);
        }
        for g in opt_m.iter() {
            c411.instance(opt_a.contains(&sl.preimage(g)), || {
                format!("preimage of optimal {g:?} not optimal")
            });
        }
        let nonempty_count = opt_a.iter().filter(|f| !f.is_empty()).count();
        c411.instance(
            SetFamily::from_members(msl.size(), opt_images.clone()).len() == nonempty_count
                && nonempty_count == opt_m.len(),
            || "optimal filter counts differ".to_string(),
        );
        for (i, f) in opt_a.iter().filter(|f| !f.is_empty()).enumerate() {
            for (j, g) in opt_a.iter().filter(|f| !f.is_empty()).enumerate() {
                c411.instance(
                    f.is_subset_of(g) == opt_images[i].is_subset_of(&opt_images[j]),
                    || format!("optimal order mismatch at ({i},{j})"),
                );
            }
        }
        report.push(c411.finish());
    }

    Ok(report)
}

/// The hull semilattices over the optimal and over the irreducible base
/// are isomorphic through matching hulls of the same generator sets.
pub fn check_base_independence(ded: &Deductive) -> Result<Report, RepresentationError> {
    let mut report = Report::new();
    let (repr_o, _) = build_representation(ded, ClosureBase::optimal(ded)?)?;
    let (repr_i, _) = build_representation(ded, ClosureBase::irreducible(ded)?)?;
    let (sl_o, _) = s_semilattice(ded, &repr_o)?;
    let (sl_i, _) = s_semilattice(ded, &repr_i)?;

    let mut ck = Checker::new("base-independence", "hull-semilattices-independent-of-base");
    ck.instance(sl_o.members.len() == sl_i.members.len(), || {
        format!("member counts differ: {} vs {}", sl_o.members.len(), sl_i.members.len())
    });
    // the correspondence hull_o(B) <-> hull_i(B) is well defined and an
    // order isomorphism
    for b1 in ded.carrier().subsets() {
        for b2 in ded.carrier().subsets() {
            let lhs = repr_o.phi_hat(&b1).is_subset_of(&repr_o.phi_hat(&b2));
            let rhs = repr_i.phi_hat(&b1).is_subset_of(&repr_i.phi_hat(&b2));
            ck.instance(lhs == rhs, || format!("hull order differs at B={b1:?}, B'={b2:?}"));
        }
    }
    report.push(ck.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn representation_of_h2_over_the_optimal_base() {
        let logic = fixtures::l_hil();
        let h2 = fixtures::h2();
        let ded = Deductive::new(&logic, &h2).unwrap();
        let base = ClosureBase::optimal(&ded).unwrap();
        assert_eq!(base.len(), 1);
        let (repr, report) = build_representation(&ded, base).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(repr.phi[1], Subset::full(1));
        assert_eq!(repr.phi[0], Subset::empty(1));
    }

    #[test]
    fn hull_of_empty_set_is_the_whole_base() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        let (repr, _) = build_representation(&ded, ClosureBase::optimal(&ded).unwrap()).unwrap();
        assert_eq!(repr.phi_hat(&Subset::empty(4)), Subset::full(repr.base.len()));
    }

    #[test]
    fn theorem_3_3_reports_are_clean_on_fixtures() {
        let meet = fixtures::l_top_meet();
        let hil = fixtures::l_hil();
        let cases: Vec<(&crate::logic::LogicPresentation, FiniteAlgebra)> = vec![
            (&meet, fixtures::m4_algebra()),
            (&meet, fixtures::c3_meet_algebra()),
            (&hil, fixtures::h2()),
        ];
        for (logic, algebra) in cases {
            let ded = Deductive::new(logic, &algebra).unwrap();
            let (repr, rep_report) =
                build_representation(&ded, ClosureBase::optimal(&ded).unwrap()).unwrap();
            assert!(rep_report.passed(), "{}", rep_report.render());
            let report = check_theorem_3_3(&ded, &repr).unwrap();
            assert!(report.passed(), "{}: {}", algebra.name, report.render());
        }
    }

    #[test]
    fn hull_semilattice_of_m4_is_the_diamond_again() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        let (repr, _) = build_representation(&ded, ClosureBase::optimal(&ded).unwrap()).unwrap();
        let (sl, report) = s_semilattice(&ded, &repr).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(sl.members.len(), 4);
        assert_eq!(*sl.lattice.semilattice.poset(), *fixtures::m4_semilattice().poset());
    }

    #[test]
    fn hull_semilattice_of_h2_is_the_two_chain() {
        let logic = fixtures::l_hil();
        let h2 = fixtures::h2();
        let ded = Deductive::new(&logic, &h2).unwrap();
        let (repr, _) = build_representation(&ded, ClosureBase::optimal(&ded).unwrap()).unwrap();
        let (sl, _) = s_semilattice(&ded, &repr).unwrap();
        assert_eq!(sl.members.len(), 2);
        assert!(sl.members.contains(&Subset::empty(1)));
    }

    #[test]
    fn section_4_reports_are_clean_on_fixtures() {
        let meet = fixtures::l_top_meet();
        let hil = fixtures::l_hil();
        for (logic, algebra) in [
            (&meet, fixtures::m4_algebra()),
            (&meet, fixtures::c2_meet_algebra()),
            (&hil, fixtures::h2()),
        ] {
            let ded = Deductive::new(logic, &algebra).unwrap();
            let report = check_section_4_isos(&ded).unwrap();
            assert!(report.passed(), "{}: {}", algebra.name, report.render());
        }
    }

    #[test]
    fn bases_give_the_same_hull_semilattice() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        let report = check_base_independence(&ded).unwrap();
        assert!(report.passed(), "{}", report.render());
    }
}
