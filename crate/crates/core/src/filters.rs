//! Deductive filters of a rule-presented logic on a finite algebra, and
//! everything built directly on top of them: generated filters, the
//! specialization quasiorder, quotients, ideal notions, optimal and
//! irreducible filters, primeness and the separation searches.
//!
//! A subset is a filter exactly when it is closed under every ground
//! instance of every presented rule; the presentation generates the least
//! finitary substitution-invariant consequence, so on a finite algebra this
//! closure condition is the whole story.

use crate::limits::carrier_cap;
use crate::logic::{assignments, evaluate, FiniteAlgebra, LogicError, LogicPresentation};
use crate::report::{Checker, Report};
use crate::subset::{SetFamily, Subset};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("algebra does not fit the logic's signature: {0}")]
    SignatureMismatch(LogicError),
    #[error("strong-ideal routes disagree on {0}: definition route {1}, down-set route {2}")]
    StrongIdealRouteMismatch(String, bool, bool),
    #[error("the induced equivalence is not a congruence: operation `{op}`, arguments {args:?} vs {args_alt:?}")]
    NotCongruence { op: String, args: Vec<usize>, args_alt: Vec<usize> },
    #[error("separation hypothesis violated: {0}")]
    SeparationHypothesis(String),
    #[error("separation search failed with hypotheses satisfied; this is a bug: F={0}, I={1}")]
    SeparationSearchFailed(String, String),
}

/// A logic presentation paired with a finite algebra of matching type.
/// Ground rule instances and subset closures are cached, so keep one of
/// these per (logic, algebra) pair when running many checks.
pub struct Deductive<'a> {
    pub logic: &'a LogicPresentation,
    pub algebra: &'a FiniteAlgebra,
    /// Per ground rule instance: the set of premise values and the
    /// conclusion value.
    instances: Vec<(Subset, usize)>,
    closures: OnceLock<Vec<Subset>>,
    filters_cache: OnceLock<SetFamily>,
}

impl<'a> Deductive<'a> {
    pub fn new(
        logic: &'a LogicPresentation,
        algebra: &'a FiniteAlgebra,
    ) -> Result<Self, EngineError> {
        // revalidate the algebra against this signature
        FiniteAlgebra::new(&algebra.name, &logic.signature, algebra.size(), {
            (0..logic.signature.len()).map(|i| algebra.table(i).to_vec()).collect()
        })
        .map_err(EngineError::SignatureMismatch)?;
        let n = algebra.size();
        let mut instances = Vec::new();
        for rule in &logic.rules {
            let nvars = rule.variables().iter().max().map(|&v| v + 1).unwrap_or(0);
            for assignment in assignments(n, nvars) {
                let mut prem = Subset::empty(n);
                for p in &rule.premises {
                    prem.insert(evaluate(p, algebra, &assignment).expect("vars assigned"));
                }
                let concl = evaluate(&rule.conclusion, algebra, &assignment).expect("vars assigned");
                instances.push((prem, concl));
            }
        }
        instances.sort();
        instances.dedup();
        // drop instances whose conclusion already sits among the premises
        instances.retain(|(prem, concl)| !prem.contains(*concl));
        Ok(Deductive {
            logic,
            algebra,
            instances,
            closures: OnceLock::new(),
            filters_cache: OnceLock::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.size())
    }

    /// Filter test: closure under every ground rule instance.
    pub fn is_filter(&self, f: &Subset) -> bool {
        assert_eq!(f.width(), self.size(), "width mismatch");
        self.instances.iter().all(|(prem, concl)| !prem.is_subset_of(f) || f.contains(*concl))
    }

    /// Least filter containing `b`, computed as a closure fixpoint.
    pub fn generate(&self, b: &Subset) -> Subset {
        if let Some(cache) = self.closures.get() {
            return cache[b.raw() as usize];
        }
        self.generate_uncached(b)
    }

    fn generate_uncached(&self, b: &Subset) -> Subset {
        assert_eq!(b.width(), self.size(), "width mismatch");
        let mut cur = *b;
        loop {
            let mut changed = false;
            for (prem, concl) in &self.instances {
                if !cur.contains(*concl) && prem.is_subset_of(&cur) {
                    cur.insert(*concl);
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    fn closure_table(&self) -> &Vec<Subset> {
        self.closures.get_or_init(|| {
            assert!(self.size() <= carrier_cap(), "carrier exceeds enumeration cap");
            (0..(1u64 << self.size()))
                .map(|bits| self.generate_uncached(&Subset::from_raw(self.size(), bits)))
                .collect()
        })
    }

    pub fn principal(&self, a: usize) -> Subset {
        self.generate(&Subset::singleton(self.size(), a))
    }

    /// All filters, by enumerating the subsets of the carrier.
    pub fn filters(&self) -> &SetFamily {
        self.filters_cache.get_or_init(|| {
            let table = self.closure_table();
            SetFamily::from_members(
                self.size(),
                (0..(1u64 << self.size()))
                    .map(|bits| Subset::from_raw(self.size(), bits))
                    .filter(|f| table[f.raw() as usize] == *f),
            )
        })
    }

    pub fn filter_join(&self, f: &Subset, g: &Subset) -> Subset {
        self.generate(&f.union(g))
    }

    /// Specialization quasiorder: `a <= b` iff the principal filter of `b`
    /// is contained in that of `a`. Returned as up-set rows.
    pub fn specialization(&self) -> Vec<Subset> {
        let n = self.size();
        let principals: Vec<Subset> = (0..n).map(|a| self.principal(a)).collect();
        (0..n)
            .map(|a| {
                let mut row = Subset::empty(n);
                for b in 0..n {
                    if principals[b].is_subset_of(&principals[a]) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect()
    }

    pub fn leq_s(&self, a: usize, b: usize) -> bool {
        self.principal(b).is_subset_of(&self.principal(a))
    }

    pub fn equiv_s(&self, a: usize, b: usize) -> bool {
        self.principal(a) == self.principal(b)
    }

    /// The algebra is reduced exactly when the specialization quasiorder is
    /// a partial order.
    pub fn is_s_algebra(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| a == b || !(self.equiv_s(a, b))))
    }

    /// The specialization order as a poset, available on reduced algebras.
    pub fn specialization_poset(&self) -> Option<crate::poset::FinitePoset> {
        if !self.is_s_algebra() {
            return None;
        }
        let rows = self.specialization();
        crate::poset::FinitePoset::new(self.size(), |a, b| rows[a].contains(b)).ok()
    }

    /// Quotient by the induced equivalence, with the filter-lattice
    /// transfer verified. Fails with a witness when the equivalence is not
    /// a congruence.
    pub fn tarski_quotient(&self) -> Result<Quotient, EngineError> {
        let n = self.size();
        // class representative: least equivalent element
        let rep: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| self.equiv_s(a, b)).unwrap())
            .collect();
        let mut class_reps: Vec<usize> = rep.clone();
        class_reps.sort_unstable();
        class_reps.dedup();
        let class_of: Vec<usize> =
            (0..n).map(|a| class_reps.iter().position(|&r| r == rep[a]).unwrap()).collect();

        let sig = &self.logic.signature;
        // congruence check with witness
        for conn in 0..sig.len() {
            let arity = sig.arity(conn);
            for args in assignments(n, arity) {
                for pos in 0..arity {
                    for alt in 0..n {
                        if !self.equiv_s(args[pos], alt) {
                            continue;
                        }
                        let mut args_alt = args.clone();
                        args_alt[pos] = alt;
                        let lhs = self.algebra.apply(conn, &args);
                        let rhs = self.algebra.apply(conn, &args_alt);
                        if !self.equiv_s(lhs, rhs) {
                            return Err(EngineError::NotCongruence {
                                op: sig.name(conn).to_string(),
                                args,
                                args_alt,
                            });
                        }
                    }
                }
            }
        }

        let k = class_reps.len();
        let tables: Vec<Vec<usize>> = (0..sig.len())
            .map(|conn| {
                let arity = sig.arity(conn);
                assignments(k, arity)
                    .map(|class_args| {
                        let args: Vec<usize> = class_args.iter().map(|&c| class_reps[c]).collect();
                        class_of[self.algebra.apply(conn, &args)]
                    })
                    .collect()
            })
            .collect();
        let quotient_name = format!("{}/~", self.algebra.name);
        let quotient = FiniteAlgebra::new(&quotient_name, sig, k, tables)
            .expect("quotient tables are total by construction");

        // verify the filter-lattice transfer through the projection
        let mut report = Report::new();
        let mut ck = Checker::new("quotient-filter-bijection", "filters-transfer-through-quotient");
        {
            let qd = Deductive::new(self.logic, &quotient).expect("same signature");
            let fi_a = self.filters();
            let fi_q = qd.filters();
            let mut images = Vec::new();
            for f in fi_a.iter() {
                let img = Subset::from_elems(
                    k,
                    &f.iter().map(|a| class_of[a]).collect::<Vec<_>>(),
                );
                ck.instance(fi_q.contains(&img), || format!("projected filter {f:?} not a filter"));
                let back = Subset::from_elems(
                    n,
                    &(0..n).filter(|&a| img.contains(class_of[a])).collect::<Vec<_>>(),
                );
                ck.instance(back == *f, || format!("projection roundtrip failed on {f:?}"));
                images.push(img);
            }
            let image_family = SetFamily::from_members(k, images);
            ck.instance(
                image_family.len() == fi_a.len() && image_family.len() == fi_q.len(),
                || {
                    format!(
                        "filter counts differ: source {}, image {}, quotient {}",
                        fi_a.len(),
                        image_family.len(),
                        fi_q.len()
                    )
                },
            );
        }
        report.push(ck.finish());
        Ok(Quotient { algebra: quotient, projection: class_of, report })
    }

    /// Distributivity of the filter lattice, tested on every triple.
    pub fn is_filter_distributive_on(&self) -> bool {
        let fi = self.filters();
        for f in fi.iter() {
            for g in fi.iter() {
                for h in fi.iter() {
                    let lhs = f.intersection(&self.filter_join(g, h));
                    let rhs = self.filter_join(&f.intersection(g), &f.intersection(h));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Ideal condition: whenever the principal filters of finitely many
    /// members all contain the principal filter of `a`, `a` belongs. All
    /// subsets of `i` are enumerated.
    pub fn is_s_ideal(&self, i: &Subset) -> bool {
        assert_eq!(i.width(), self.size(), "width mismatch");
        for sub in i.subsets() {
            let inter = sub
                .iter()
                .fold(self.carrier(), |acc, b| acc.intersection(&self.principal(b)));
            for a in 0..self.size() {
                if inter.is_subset_of(&self.principal(a)) && !i.contains(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn s_ideals(&self) -> SetFamily {
        SetFamily::from_members(
            self.size(),
            self.carrier().subsets().filter(|i| self.is_s_ideal(i)),
        )
    }

    /// The extra condition that makes an ideal strong: finitely many
    /// members dominating a finitely generated filter force that filter to
    /// meet the ideal. `B` ranges over non-empty subsets only.
    fn strong_condition(&self, i: &Subset) -> bool {
        for sub in i.subsets() {
            let inter = sub
                .iter()
                .fold(self.carrier(), |acc, b| acc.intersection(&self.principal(b)));
            for b in self.carrier().subsets() {
                if b.is_empty() {
                    continue;
                }
                let fg = self.generate(&b);
                if inter.is_subset_of(&fg) && fg.intersection(i).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn is_down_set_spec(&self, i: &Subset) -> bool {
        for a in i.iter() {
            for b in 0..self.size() {
                if self.leq_s(b, a) && !i.contains(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Strong-ideal test. The definition route (ideal condition plus the
    /// strong condition) is the oracle; on reduced algebras of logics
    /// asserted congruential, the down-set shortcut is computed too and a
    /// disagreement is an error, never an answer.
    pub fn is_strong_s_ideal(&self, i: &Subset) -> Result<bool, EngineError> {
        let oracle = self.is_s_ideal(i) && self.strong_condition(i);
        if self.logic.assertions.congruential && self.is_s_algebra() {
            let fast = self.is_down_set_spec(i) && self.strong_condition(i);
            if fast != oracle {
                return Err(EngineError::StrongIdealRouteMismatch(format!("{i:?}"), oracle, fast));
            }
        }
        Ok(oracle)
    }

    pub fn strong_s_ideals(&self) -> Result<SetFamily, EngineError> {
        let mut members = Vec::new();
        for i in self.carrier().subsets() {
            if self.is_strong_s_ideal(&i)? {
                members.push(i);
            }
        }
        Ok(SetFamily::from_members(self.size(), members))
    }

    /// A non-empty antichain of the specialization quasiorder generating
    /// the whole algebra. Finite algebras always have one; the smallest is
    /// returned together with `true`.
    pub fn bottom_family(&self) -> (bool, Option<Subset>) {
        let n = self.size();
        let mut best: Option<Subset> = None;
        for u in self.carrier().subsets() {
            if u.is_empty() {
                continue;
            }
            let antichain = u.iter().all(|a| {
                u.iter().all(|b| a == b || (!self.leq_s(a, b) && !self.leq_s(b, a)))
            });
            if !antichain || !self.generate(&u).is_full() {
                continue;
            }
            match best {
                Some(prev) if prev.len() <= u.len() => {}
                _ => best = Some(u),
            }
        }
        debug_assert!(best.is_some() || n == 0);
        (best.is_some(), best)
    }

    /// Optimal filters by the maximal-pair definition, exhausting strong
    /// ideals.
    pub fn optimal_filters(&self) -> Result<SetFamily, EngineError> {
        let fi = self.filters();
        let strong = self.strong_s_ideals()?;
        let mut out = Vec::new();
        for f in fi.iter() {
            let witnessed = strong.iter().any(|i| {
                f.intersection(i).is_empty()
                    && fi
                        .iter()
                        .all(|g| !(f.is_subset_of(g) && *g != *f && g.intersection(i).is_empty()))
                    && strong
                        .iter()
                        .all(|j| !(i.is_subset_of(j) && *j != *i && j.intersection(f).is_empty()))
            });
            if witnessed {
                out.push(*f);
            }
        }
        Ok(SetFamily::from_members(self.size(), out))
    }

    /// Complement route for optimal filters: filters whose complement is a
    /// strong ideal. Coincides with the definition route under
    /// filter-distributivity on a reduced algebra.
    pub fn optimal_filters_via_complements(&self) -> Result<SetFamily, EngineError> {
        let mut out = Vec::new();
        for f in self.filters().iter() {
            if self.is_strong_s_ideal(&f.complement())? {
                out.push(*f);
            }
        }
        Ok(SetFamily::from_members(self.size(), out))
    }

    /// Proper meet-irreducible elements of the filter lattice.
    pub fn irreducible_filters(&self) -> SetFamily {
        let fi = self.filters();
        let full = self.carrier();
        let mut out = Vec::new();
        for f in fi.iter() {
            if *f == full {
                continue;
            }
            let mut irreducible = true;
            'outer: for g in fi.iter() {
                for h in fi.iter() {
                    if g.intersection(h) == *f && *g != *f && *h != *f {
                        irreducible = false;
                        break 'outer;
                    }
                }
            }
            if irreducible {
                out.push(*f);
            }
        }
        SetFamily::from_members(self.size(), out)
    }

    /// Complement route for irreducible filters: filters whose complement
    /// is a non-empty up-directed down-set of the specialization quasiorder.
    pub fn irreducible_filters_via_complements(&self) -> SetFamily {
        let n = self.size();
        let mut out = Vec::new();
        for f in self.filters().iter() {
            let c = f.complement();
            if c.is_empty() || !self.is_down_set_spec(&c) {
                continue;
            }
            let updirected = c.iter().all(|a| {
                c.iter().all(|b| c.iter().any(|x| self.leq_s(a, x) && self.leq_s(b, x)))
            });
            if updirected {
                out.push(*f);
            }
        }
        SetFamily::from_members(n, out)
    }

    /// Primeness of a subset: proper, and every non-empty finite generator
    /// set whose filter meets it already meets it.
    pub fn is_s_prime(&self, x: &Subset) -> bool {
        assert_eq!(x.width(), self.size(), "width mismatch");
        if x.is_full() {
            return false;
        }
        for b in self.carrier().subsets() {
            if b.is_empty() {
                continue;
            }
            if !self.generate(&b).intersection(x).is_empty() && b.intersection(x).is_empty() {
                return false;
            }
        }
        true
    }

    /// Searches for an optimal filter extending `f` and avoiding the strong
    /// ideal `i`. Hypothesis violations are reported before the search; a
    /// failed search under valid hypotheses is a bug.
    pub fn separate_optimal(&self, f: &Subset, i: &Subset) -> Result<Subset, EngineError> {
        if !self.is_filter(f) {
            return Err(EngineError::SeparationHypothesis(format!("{f:?} is not a filter")));
        }
        if !self.is_strong_s_ideal(i)? {
            return Err(EngineError::SeparationHypothesis(format!("{i:?} is not a strong ideal")));
        }
        if !f.intersection(i).is_empty() {
            return Err(EngineError::SeparationHypothesis("filter and ideal intersect".to_string()));
        }
        self.optimal_filters()?
            .iter()
            .find(|q| f.is_subset_of(q) && q.intersection(i).is_empty())
            .copied()
            .ok_or_else(|| EngineError::SeparationSearchFailed(format!("{f:?}"), format!("{i:?}")))
    }

    /// Same search against an order ideal of the specialization quasiorder,
    /// producing an irreducible filter.
    pub fn separate_irreducible(&self, f: &Subset, i: &Subset) -> Result<Subset, EngineError> {
        if !self.is_filter(f) {
            return Err(EngineError::SeparationHypothesis(format!("{f:?} is not a filter")));
        }
        let order_ideal = !i.is_empty()
            && self.is_down_set_spec(i)
            && i.iter().all(|a| {
                i.iter().all(|b| i.iter().any(|x| self.leq_s(a, x) && self.leq_s(b, x)))
            });
        if !order_ideal {
            return Err(EngineError::SeparationHypothesis(format!("{i:?} is not an order ideal")));
        }
        if !f.intersection(i).is_empty() {
            return Err(EngineError::SeparationHypothesis("filter and ideal intersect".to_string()));
        }
        self.irreducible_filters()
            .iter()
            .find(|q| f.is_subset_of(q) && q.intersection(i).is_empty())
            .copied()
            .ok_or_else(|| EngineError::SeparationSearchFailed(format!("{f:?}"), format!("{i:?}")))
    }
}

/// Result of a successful quotient by the induced equivalence.
pub struct Quotient {
    pub algebra: FiniteAlgebra,
    /// Element -> class index.
    pub projection: Vec<usize>,
    /// Verification of the filter-lattice transfer.
    pub report: Report,
}

/// Cross-validates the two routes to optimal and irreducible filters. Under
/// per-algebra filter-distributivity on a reduced algebra the routes must
/// agree (a mismatch is recorded as a failure); otherwise a disagreement is
/// merely noted.
pub fn check_optimal_routes(ded: &Deductive) -> Result<Report, EngineError> {
    let mut report = Report::new();
    let hypotheses = ded.is_filter_distributive_on() && ded.is_s_algebra();
    let opt_def = ded.optimal_filters()?;
    let opt_compl = ded.optimal_filters_via_complements()?;
    let irr_lat = ded.irreducible_filters();
    let irr_compl = ded.irreducible_filters_via_complements();
    if hypotheses {
        let mut c1 = Checker::new("optimal-two-routes", "optimal-vs-strong-ideal-complement");
        c1.instance(opt_def == opt_compl, || {
            format!("definition route {opt_def:?} vs complement route {opt_compl:?}")
        });
        report.push(c1.finish());
        let mut c2 = Checker::new("irreducible-two-routes", "irreducible-vs-order-ideal-complement");
        c2.instance(irr_lat == irr_compl, || {
            format!("lattice route {irr_lat:?} vs complement route {irr_compl:?}")
        });
        report.push(c2.finish());
    } else if opt_def != opt_compl || irr_lat != irr_compl {
        report.notes.push(format!(
            "routes compared without distributivity/reducedness on {}: optimal {:?} vs {:?}, irreducible {:?} vs {:?}",
            ded.algebra.name, opt_def, opt_compl, irr_lat, irr_compl
        ));
    }
    // irreducible filters are always optimal
    let mut c3 = Checker::new("irreducible-subset-of-optimal", "irreducibles-are-optimal");
    c3.instance(irr_lat.is_subfamily_of(&opt_def), || {
        format!("irreducible {irr_lat:?} not within optimal {opt_def:?}")
    });
    report.push(c3.finish());
    Ok(report)
}

/// Checks that non-empty subsets are filters exactly when their complement
/// is prime.
pub fn check_prime_complements(ded: &Deductive) -> Report {
    let mut report = Report::new();
    let mut ck = Checker::new("filter-iff-prime-complement", "filters-versus-prime-complements");
    for x in ded.carrier().subsets() {
        if x.is_empty() {
            continue;
        }
        let lhs = ded.is_filter(&x);
        let rhs = ded.is_s_prime(&x.complement());
        ck.instance(lhs == rhs, || format!("X={x:?} filter={lhs} prime-complement={rhs}"));
    }
    report.push(ck.finish());
    report
}

/// Inverse images of filters along a homomorphism are filters.
pub fn check_inverse_images(
    logic: &LogicPresentation,
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
    hom: &[usize],
) -> Result<Report, EngineError> {
    source
        .check_homomorphism(&logic.signature, hom, target)
        .map_err(EngineError::SignatureMismatch)?;
    let ds = Deductive::new(logic, source)?;
    let dt = Deductive::new(logic, target)?;
    let mut report = Report::new();
    let mut ck = Checker::new("inverse-image-filters", "filter-preimages-along-homomorphisms");
    for f in dt.filters().iter() {
        let pre = Subset::from_elems(
            source.size(),
            &(0..source.size()).filter(|&a| f.contains(hom[a])).collect::<Vec<_>>(),
        );
        ck.instance(ds.is_filter(&pre), || format!("preimage of {f:?} not a filter"));
    }
    report.push(ck.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn filters_of_the_meet_logic_on_m4() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        let expected = SetFamily::from_members(
            4,
            vec![
                Subset::singleton(4, 3),
                Subset::from_elems(4, &[1, 3]),
                Subset::from_elems(4, &[2, 3]),
                Subset::full(4),
            ],
        );
        assert_eq!(*ded.filters(), expected);
    }

    #[test]
    fn filters_of_the_hilbert_logic_on_h2() {
        let logic = fixtures::l_hil();
        let h2 = fixtures::h2();
        let ded = Deductive::new(&logic, &h2).unwrap();
        let expected =
            SetFamily::from_members(2, vec![Subset::singleton(2, 1), Subset::full(2)]);
        assert_eq!(*ded.filters(), expected);
    }

    #[test]
    fn theorem_free_conjunction_logic_admits_the_empty_filter() {
        let logic = fixtures::l_meet_only();
        let c2 = fixtures::c2_meet_only();
        let ded = Deductive::new(&logic, &c2).unwrap();
        assert!(ded.filters().contains(&Subset::empty(2)));
        let opt = ded.optimal_filters().unwrap();
        assert!(opt.contains(&Subset::empty(2)));
    }

    #[test]
    fn specialization_on_m4_is_the_lattice_order() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        assert!(ded.is_s_algebra());
        let poset = ded.specialization_poset().unwrap();
        assert_eq!(poset, *fixtures::m4_semilattice().poset());
    }

    #[test]
    fn degenerate_algebra_collapses_to_the_trivial_quotient() {
        let logic = fixtures::l_top_meet();
        let d2 = fixtures::d2_degenerate();
        let ded = Deductive::new(&logic, &d2).unwrap();
        assert!(!ded.is_s_algebra());
        assert_eq!(*ded.filters(), SetFamily::from_members(2, vec![Subset::full(2)]));
        let q = ded.tarski_quotient().unwrap();
        assert_eq!(q.algebra.size(), 1);
        assert!(q.report.passed(), "{}", q.report.render());
        // trivial algebras are reduced
        let trivial = FiniteAlgebra::trivial(&logic.signature);
        let dt = Deductive::new(&logic, &trivial).unwrap();
        assert!(dt.is_s_algebra());
    }

    #[test]
    fn filter_distributivity_per_algebra() {
        let logic = fixtures::l_top_meet();
        assert!(Deductive::new(&logic, &fixtures::m4_algebra()).unwrap().is_filter_distributive_on());
        assert!(!Deductive::new(&logic, &fixtures::m3_algebra()).unwrap().is_filter_distributive_on());
        let hil = fixtures::l_hil();
        assert!(Deductive::new(&hil, &fixtures::h2()).unwrap().is_filter_distributive_on());
    }

    #[test]
    fn strong_ideals_and_bottom_families_on_m4() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        assert_eq!(ded.bottom_family(), (true, Some(Subset::singleton(4, 0))));
        assert_eq!(ded.is_strong_s_ideal(&Subset::from_elems(4, &[0, 1])), Ok(true));
        // finite algebras have bottom families, so the empty set is never strong
        assert_eq!(ded.is_strong_s_ideal(&Subset::empty(4)), Ok(false));
    }

    #[test]
    fn optimal_filters_both_routes_on_fixtures() {
        let logic = fixtures::l_top_meet();
        for algebra in [fixtures::m4_algebra(), fixtures::c3_meet_algebra(), fixtures::c2_meet_algebra()] {
            let ded = Deductive::new(&logic, &algebra).unwrap();
            let report = check_optimal_routes(&ded).unwrap();
            assert!(report.passed(), "{}: {}", algebra.name, report.render());
        }
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        assert_eq!(
            ded.optimal_filters().unwrap(),
            SetFamily::from_members(4, vec![Subset::from_elems(4, &[1, 3]), Subset::from_elems(4, &[2, 3])])
        );
        let hil = fixtures::l_hil();
        let h2 = fixtures::h2();
        let dh = Deductive::new(&hil, &h2).unwrap();
        assert_eq!(
            dh.optimal_filters().unwrap(),
            SetFamily::from_members(2, vec![Subset::singleton(2, 1)])
        );
    }

    #[test]
    fn irreducible_filters_on_the_three_chain() {
        let logic = fixtures::l_top_meet();
        let c3 = fixtures::c3_meet_algebra();
        let ded = Deductive::new(&logic, &c3).unwrap();
        assert_eq!(
            ded.irreducible_filters(),
            SetFamily::from_members(3, vec![Subset::singleton(3, 2), Subset::from_elems(3, &[1, 2])])
        );
    }

    #[test]
    fn primeness_examples() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        assert!(ded.is_s_prime(&Subset::from_elems(4, &[0, 1, 2])));
        assert!(!ded.is_s_prime(&Subset::full(4)));
        assert!(!ded.is_s_prime(&Subset::singleton(4, 0)));
        assert!(check_prime_complements(&ded).passed());
    }

    #[test]
    fn separation_examples() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let ded = Deductive::new(&logic, &m4).unwrap();
        let q = ded
            .separate_optimal(&Subset::singleton(4, 3), &Subset::from_elems(4, &[0, 1]))
            .unwrap();
        assert_eq!(q, Subset::from_elems(4, &[2, 3]));
        let q2 = ded
            .separate_irreducible(&Subset::from_elems(4, &[1, 3]), &Subset::singleton(4, 0))
            .unwrap();
        assert_eq!(q2, Subset::from_elems(4, &[1, 3]));
        let hil = fixtures::l_hil();
        let h2 = fixtures::h2();
        let dh = Deductive::new(&hil, &h2).unwrap();
        let q3 = dh.separate_optimal(&Subset::singleton(2, 1), &Subset::singleton(2, 0)).unwrap();
        assert_eq!(q3, Subset::singleton(2, 1));
        // hypothesis violations are reported before searching
        assert!(matches!(
            ded.separate_optimal(&Subset::from_elems(4, &[1, 2]), &Subset::empty(4)),
            Err(EngineError::SeparationHypothesis(_))
        ));
    }

    #[test]
    fn inverse_images_of_filters_are_filters() {
        let logic = fixtures::l_top_meet();
        let c2 = fixtures::c2_meet_algebra();
        let m4 = fixtures::m4_algebra();
        let report = check_inverse_images(&logic, &c2, &m4, &[0, 3]).unwrap();
        assert!(report.passed(), "{}", report.render());
    }
}
