//! Finite posets over index carriers, with the order-level filter and ideal
//! notions: order filters/ideals, Frink ideals and their generation.
//!
//! All quantifiers over "finite subsets" in the definitions are realized
//! literally by enumerating subsets of the (finite) carrier, so every
//! predicate here is total and usable as an oracle by the rest of the crate.

use crate::limits::carrier_cap;
use crate::subset::{SetFamily, Subset};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("carrier of size {0} exceeds the configured cap of {1}")]
    CarrierTooLarge(usize, usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
}

/// A finite poset on elements `0..size`. The empty poset is legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    size: usize,
    /// `up[i]` is the principal up-set of `i`, i.e. `{j : i <= j}`.
    up: Vec<Subset>,
    /// `down[i]` is the principal down-set of `i`.
    down: Vec<Subset>,
}

impl FinitePoset {
    /// Builds a poset from a `leq` predicate, validating the order axioms.
    ///
    /// Construction allows anything up to the bit-vector width; the
    /// configurable carrier cap is enforced by the operations that enumerate
    /// all subsets of the carrier.
    pub fn new(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        if size > crate::subset::MAX_WIDTH {
            return Err(PosetError::CarrierTooLarge(size, crate::subset::MAX_WIDTH));
        }
        let mut up = vec![Subset::empty(size); size];
        let mut down = vec![Subset::empty(size); size];
        for i in 0..size {
            for j in 0..size {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        for i in 0..size {
            if !up[i].contains(i) {
                return Err(PosetError::NotReflexive(i));
            }
            for j in 0..size {
                if i != j && up[i].contains(j) && up[j].contains(i) {
                    return Err(PosetError::NotAntisymmetric(i, j));
                }
                if up[i].contains(j) {
                    for k in 0..size {
                        if up[j].contains(k) && !up[i].contains(k) {
                            return Err(PosetError::NotTransitive(i, j, k));
                        }
                    }
                }
            }
        }
        Ok(FinitePoset { size, up, down })
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        FinitePoset::new(size, |i, j| i == j || pairs.contains(&(i, j)))
    }

    /// The chain 0 < 1 < .. < size-1.
    pub fn chain(size: usize) -> Self {
        FinitePoset::new(size, |i, j| i <= j).expect("chain is a poset")
    }

    pub fn antichain(size: usize) -> Self {
        FinitePoset::new(size, |i, j| i == j).expect("antichain is a poset")
    }

    pub fn empty() -> Self {
        FinitePoset::new(0, |_, _| false).expect("empty poset")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn up_of(&self, i: usize) -> Subset {
        self.up[i]
    }

    pub fn down_of(&self, i: usize) -> Subset {
        self.down[i]
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.size)
    }

    /// The up-closure of a set of elements.
    pub fn up_closure(&self, u: &Subset) -> Subset {
        assert_eq!(u.width(), self.size, "width mismatch");
        u.iter().fold(Subset::empty(self.size), |acc, a| acc.union(&self.up[a]))
    }

    pub fn down_closure(&self, u: &Subset) -> Subset {
        assert_eq!(u.width(), self.size, "width mismatch");
        u.iter().fold(Subset::empty(self.size), |acc, a| acc.union(&self.down[a]))
    }

    pub fn is_up_set(&self, u: &Subset) -> bool {
        self.up_closure(u) == *u
    }

    pub fn is_down_set(&self, u: &Subset) -> bool {
        self.down_closure(u) == *u
    }

    /// Maximal elements of `u` within `u`.
    pub fn max_elements(&self, u: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for a in u.iter() {
            if self.up[a].intersection(u).len() == 1 {
                out.insert(a);
            }
        }
        out
    }

    pub fn min_elements(&self, u: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for a in u.iter() {
            if self.down[a].intersection(u).len() == 1 {
                out.insert(a);
            }
        }
        out
    }

    /// Upper bounds of `u` in the whole carrier; the full carrier for `u` empty.
    pub fn upper_bounds(&self, u: &Subset) -> Subset {
        u.iter().fold(Subset::full(self.size), |acc, a| acc.intersection(&self.up[a]))
    }

    pub fn lower_bounds(&self, u: &Subset) -> Subset {
        u.iter().fold(Subset::full(self.size), |acc, a| acc.intersection(&self.down[a]))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.size).find(|&b| self.up[b].is_full())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.size).find(|&t| self.down[t].is_full())
    }

    /// Whether every pair in `u` has an upper bound inside `u`. The empty set
    /// counts as directed; callers wanting the order-ideal notion conjoin
    /// non-emptiness themselves.
    pub fn is_up_directed(&self, u: &Subset) -> bool {
        for a in u.iter() {
            for b in u.iter() {
                if b < a {
                    continue;
                }
                if self.up[a].intersection(&self.up[b]).intersection(u).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_down_directed(&self, u: &Subset) -> bool {
        for a in u.iter() {
            for b in u.iter() {
                if b < a {
                    continue;
                }
                if self.down[a].intersection(&self.down[b]).intersection(u).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// An order filter is a non-empty down-directed up-set.
    pub fn is_order_filter(&self, u: &Subset) -> bool {
        !u.is_empty() && self.is_up_set(u) && self.is_down_directed(u)
    }

    /// An order ideal is a non-empty up-directed down-set.
    pub fn is_order_ideal(&self, u: &Subset) -> bool {
        !u.is_empty() && self.is_down_set(u) && self.is_up_directed(u)
    }

    fn assert_enumerable(&self) {
        assert!(
            self.size <= carrier_cap(),
            "carrier of size {} exceeds the subset-enumeration cap {}",
            self.size,
            carrier_cap()
        );
    }

    pub fn order_filters(&self) -> SetFamily {
        self.assert_enumerable();
        SetFamily::from_members(
            self.size,
            self.carrier().subsets().filter(|u| self.is_order_filter(u)),
        )
    }

    pub fn order_ideals(&self) -> SetFamily {
        self.assert_enumerable();
        SetFamily::from_members(
            self.size,
            self.carrier().subsets().filter(|u| self.is_order_ideal(u)),
        )
    }

    /// Frink ideal test: for every finite `I' ⊆ I`, every lower bound of the
    /// set of upper bounds of `I'` must already lie in `I`. All subsets of
    /// `I` are enumerated.
    pub fn is_frink_ideal(&self, ideal: &Subset) -> bool {
        assert_eq!(ideal.width(), self.size, "width mismatch");
        self.assert_enumerable();
        for sub in ideal.subsets() {
            let hull = self.lower_bounds(&self.upper_bounds(&sub));
            if !hull.is_subset_of(ideal) {
                return false;
            }
        }
        true
    }

    /// Least Frink ideal containing `b`: an element enters iff some finite
    /// `B' ⊆ b` has all its upper bounds above it.
    pub fn frink_ideal_generate(&self, b: &Subset) -> Subset {
        assert_eq!(b.width(), self.size, "width mismatch");
        self.assert_enumerable();
        let mut out = Subset::empty(self.size);
        for sub in b.subsets() {
            out = out.union(&self.lower_bounds(&self.upper_bounds(&sub)));
        }
        out
    }

    pub fn frink_ideals(&self) -> SetFamily {
        self.assert_enumerable();
        SetFamily::from_members(
            self.size,
            self.carrier().subsets().filter(|u| self.is_frink_ideal(u)),
        )
    }

    /// Covering pairs (i, j): i < j with nothing strictly between. This is
    /// the transitive reduction used for Hasse diagrams.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if !self.lt(i, j) {
                    continue;
                }
                let between = (0..self.size).any(|k| self.lt(i, k) && self.lt(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The dual poset (order reversed).
    pub fn opposite(&self) -> FinitePoset {
        FinitePoset { size: self.size, up: self.down.clone(), down: self.up.clone() }
    }

    /// Restriction of the order to an index-subset, relabelled 0..k in the
    /// order the elements appear in `u`.
    pub fn restrict(&self, u: &Subset) -> (FinitePoset, Vec<usize>) {
        let elems: Vec<usize> = u.iter().collect();
        let p = FinitePoset::new(elems.len(), |i, j| self.leq(elems[i], elems[j]))
            .expect("restriction of a poset is a poset");
        (p, elems)
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinitePoset(n={}, covers={:?})", self.size, self.covers())
    }
}

/// Enumerates every labeled poset on `size` elements, passing each to `f`.
///
/// Candidates are generated as strict-order bit matrices and filtered by
/// transitivity; sizes beyond 5 get expensive quickly and the sweeps in this
/// crate stay at 5.
pub fn for_each_labeled_poset(size: usize, mut f: impl FnMut(&FinitePoset)) {
    assert!(size <= 5, "labeled-poset enumeration is intended for size <= 5");
    if size == 0 {
        f(&FinitePoset::empty());
        return;
    }
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let npairs = pairs.len();
    'cand: for mask in 0u64..(1 << npairs) {
        let mut strict = vec![false; size * size];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                strict[i * size + j] = true;
            }
        }
        for i in 0..size {
            for j in 0..size {
                if strict[i * size + j] {
                    if strict[j * size + i] {
                        continue 'cand; // antisymmetry
                    }
                    for k in 0..size {
                        if strict[j * size + k] && !strict[i * size + k] {
                            continue 'cand; // transitivity
                        }
                    }
                }
            }
        }
        let p = FinitePoset::new(size, |i, j| i == j || strict[i * size + j])
            .expect("filtered candidate is a poset");
        f(&p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The diamond 0 < a,b < 1 with a,b incomparable; elements 0,a,b,1 are
    /// indices 0,1,2,3. This is the four-element Boolean lattice.
    pub fn m4() -> FinitePoset {
        FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn up_closure_examples() {
        let c3 = FinitePoset::chain(3);
        assert_eq!(c3.up_closure(&Subset::singleton(3, 1)), Subset::from_elems(3, &[1, 2]));
        assert_eq!(c3.up_closure(&Subset::empty(3)), Subset::empty(3));
        let m4 = m4();
        assert_eq!(m4.up_closure(&Subset::singleton(4, 0)), Subset::full(4));
    }

    #[test]
    fn order_filters_and_ideals_examples() {
        let c3 = FinitePoset::chain(3);
        let ideals = c3.order_ideals();
        assert_eq!(
            ideals,
            SetFamily::from_members(
                3,
                vec![
                    Subset::from_elems(3, &[0]),
                    Subset::from_elems(3, &[0, 1]),
                    Subset::full(3),
                ]
            )
        );
        let m4 = m4();
        let filters = m4.order_filters();
        assert_eq!(
            filters,
            SetFamily::from_members(
                4,
                vec![
                    Subset::from_elems(4, &[3]),
                    Subset::from_elems(4, &[1, 3]),
                    Subset::from_elems(4, &[2, 3]),
                    Subset::full(4),
                ]
            )
        );
        assert!(FinitePoset::empty().order_filters().is_empty());
    }

    #[test]
    fn frink_ideal_examples() {
        let m4 = m4();
        // {0,a,b}: upper bounds of {a,b} are {1}, every element is a lower
        // bound of {1}, so 1 would have to belong.
        assert!(!m4.is_frink_ideal(&Subset::from_elems(4, &[0, 1, 2])));
        assert!(m4.is_frink_ideal(&Subset::from_elems(4, &[0, 1])));
        // empty set is a Frink ideal exactly on bottomless posets
        let v = FinitePoset::antichain(2);
        assert!(v.is_frink_ideal(&Subset::empty(2)));
        assert!(!m4.is_frink_ideal(&Subset::empty(4)));
    }

    #[test]
    fn frink_generation_examples() {
        let m4 = m4();
        assert_eq!(m4.frink_ideal_generate(&Subset::empty(4)), Subset::singleton(4, 0));
        assert_eq!(
            m4.frink_ideal_generate(&Subset::singleton(4, 1)),
            Subset::from_elems(4, &[0, 1])
        );
        let c2 = FinitePoset::chain(2);
        assert_eq!(c2.frink_ideal_generate(&Subset::singleton(2, 1)), Subset::full(2));
    }

    #[test]
    fn directedness_and_max() {
        let m4 = m4();
        assert_eq!(m4.max_elements(&Subset::from_elems(4, &[0, 1, 2])), Subset::from_elems(4, &[1, 2]));
        assert!(!m4.is_up_directed(&Subset::from_elems(4, &[1, 2])));
        let c3 = FinitePoset::chain(3);
        assert!(c3.is_up_directed(&Subset::from_elems(3, &[0, 1])));
        assert!(m4.is_up_directed(&Subset::empty(4)));
    }

    #[test]
    fn labeled_poset_counts_match_the_literature() {
        // 1, 1, 3, 19, 219 labeled posets on 0..=4 elements
        let mut counts = Vec::new();
        for n in 0..=4 {
            let mut c = 0u64;
            for_each_labeled_poset(n, |_| c += 1);
            counts.push(c);
        }
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn covers_of_m4() {
        assert_eq!(m4().covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    fn arb_poset(max_size: usize) -> impl Strategy<Value = FinitePoset> {
        (1..=max_size)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
            .prop_map(|(n, edges)| {
                // seed only i<j edges, then transitively close; stays a poset
                let mut strict = vec![false; n * n];
                for i in 0..n {
                    for j in (i + 1)..n {
                        if edges[i * n + j] {
                            strict[i * n + j] = true;
                        }
                    }
                }
                for k in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if strict[i * n + k] && strict[k * n + j] {
                                strict[i * n + j] = true;
                            }
                        }
                    }
                }
                FinitePoset::new(n, |i, j| i == j || strict[i * n + j]).unwrap()
            })
    }

    proptest! {
        /// Frink generation is a closure operator and lands on Frink ideals.
        #[test]
        fn frink_generation_is_a_closure_operator(p in arb_poset(6), bits in any::<u64>()) {
            let b = Subset::from_raw(p.size(), bits & Subset::full(p.size()).raw());
            let gen = p.frink_ideal_generate(&b);
            prop_assert!(b.is_subset_of(&gen));
            prop_assert!(p.is_frink_ideal(&gen));
            prop_assert_eq!(p.frink_ideal_generate(&gen), gen);
            // monotone in the generators
            for sub in b.subsets() {
                prop_assert!(p.frink_ideal_generate(&sub).is_subset_of(&gen));
            }
        }

        /// Every order ideal is a down-set Frink ideal.
        #[test]
        fn order_ideals_are_frink_ideals(p in arb_poset(5)) {
            for ideal in p.order_ideals().iter() {
                prop_assert!(p.is_frink_ideal(ideal));
                prop_assert!(p.is_down_set(ideal));
            }
        }

        /// up_closure is idempotent and returns up-sets.
        #[test]
        fn up_closure_idempotent(p in arb_poset(6), bits in any::<u64>()) {
            let u = Subset::from_raw(p.size(), bits & Subset::full(p.size()).raw());
            let c = p.up_closure(&u);
            prop_assert!(p.is_up_set(&c));
            prop_assert_eq!(p.up_closure(&c), c);
        }
    }
}
