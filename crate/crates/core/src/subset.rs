//! Fixed-width bit vectors over a finite carrier, and canonically ordered
//! families of them. These are the working representation for every set of
//! elements, set of filters, set of ideals, etc. in the crate.

use std::fmt;

/// Hard limit on carrier sizes: subsets are packed into a single `u64`.
pub const MAX_WIDTH: usize = 64;

/// A subset of a carrier `{0, .., width-1}`, stored as a bit vector.
///
/// Equality and ordering are only meaningful between subsets of the same
/// width; mixing widths is a caller bug and asserted against.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    width: usize,
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_WIDTH, "carrier too large: {width}");
        Subset { bits: 0, width }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_WIDTH, "carrier too large: {width}");
        let bits = if width == 64 { !0 } else { (1u64 << width) - 1 };
        Subset { bits, width }
    }

    pub fn singleton(width: usize, elem: usize) -> Self {
        let mut s = Subset::empty(width);
        s.insert(elem);
        s
    }

    pub fn from_elems(width: usize, elems: &[usize]) -> Self {
        let mut s = Subset::empty(width);
        for &e in elems {
            s.insert(e);
        }
        s
    }

    pub fn from_raw(width: usize, bits: u64) -> Self {
        assert!(width <= MAX_WIDTH);
        debug_assert!(bits & !Subset::full(width).bits == 0);
        Subset { bits, width }
    }

    pub fn raw(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, elem: usize) -> bool {
        assert!(elem < self.width, "element {elem} out of carrier");
        self.bits & (1 << elem) != 0
    }

    pub fn insert(&mut self, elem: usize) {
        assert!(elem < self.width, "element {elem} out of carrier");
        self.bits |= 1 << elem;
    }

    pub fn remove(&mut self, elem: usize) {
        assert!(elem < self.width, "element {elem} out of carrier");
        self.bits &= !(1 << elem);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Subset::full(self.width)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset { bits: self.bits | other.bits, width: self.width }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset { bits: self.bits & other.bits, width: self.width }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset { bits: self.bits & !other.bits, width: self.width }
    }

    /// Complement relative to the carrier.
    pub fn complement(&self) -> Subset {
        Subset { bits: !self.bits & Subset::full(self.width).bits, width: self.width }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_width(other);
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.width).filter(move |i| bits & (1 << i) != 0)
    }

    /// Iterates over all subsets of `self`, in increasing raw-bit order
    /// (so the empty set comes first and `self` last).
    pub fn subsets(&self) -> SubsetsOf {
        SubsetsOf { mask: self.bits, current: 0, width: self.width, done: false }
    }

    fn check_width(&self, other: &Subset) {
        assert_eq!(self.width, other.width, "width mismatch: {} vs {}", self.width, other.width);
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

// Canonical total order: lexicographic on the bit sequence b0, b1, ...
// Reversing the word makes bit 0 most significant, so plain integer
// comparison of the reversed words realizes it.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.width
            .cmp(&other.width)
            .then(self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Iterator over all sub-masks of a mask, empty set first.
pub struct SubsetsOf {
    mask: u64,
    current: u64,
    width: usize,
    done: bool,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let out = Subset { bits: self.current, width: self.width };
        if self.current == self.mask {
            self.done = true;
        } else {
            // standard sub-mask enumeration trick
            self.current = (self.current.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

/// A duplicate-free list of subsets of a common carrier, kept in the
/// canonical order. Families compare structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    width: usize,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new(width: usize) -> Self {
        SetFamily { width, members: Vec::new() }
    }

    pub fn from_members(width: usize, members: impl IntoIterator<Item = Subset>) -> Self {
        let mut v: Vec<Subset> = members.into_iter().collect();
        for m in &v {
            assert_eq!(m.width(), width, "family member width mismatch");
        }
        v.sort();
        v.dedup();
        SetFamily { width, members: v }
    }

    /// Every subset of a carrier of size `width`, in canonical order.
    pub fn powerset(width: usize) -> Self {
        let full = Subset::full(width);
        SetFamily::from_members(width, full.subsets())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn index_of(&self, s: &Subset) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    pub fn member(&self, idx: usize) -> Subset {
        self.members[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subset> {
        self.members.iter()
    }

    pub fn insert(&mut self, s: Subset) {
        assert_eq!(s.width(), self.width);
        if let Err(pos) = self.members.binary_search(&s) {
            self.members.insert(pos, s);
        }
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// Intersection of all members; the full carrier if the family is empty.
    pub fn intersect_all(&self) -> Subset {
        self.members
            .iter()
            .fold(Subset::full(self.width), |acc, m| acc.intersection(m))
    }

    /// Closes the family under a binary operation until a fixpoint.
    pub fn close_under(&self, op: impl Fn(&Subset, &Subset) -> Subset) -> SetFamily {
        let mut members = self.members.clone();
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = members.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let c = op(a, b);
                    if !members.contains(&c) {
                        members.push(c);
                        changed = true;
                    }
                }
            }
        }
        SetFamily::from_members(self.width, members)
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

impl FromIterator<Subset> for SetFamily {
    fn from_iter<T: IntoIterator<Item = Subset>>(iter: T) -> Self {
        let v: Vec<Subset> = iter.into_iter().collect();
        let width = v.first().map(|s| s.width()).unwrap_or(0);
        SetFamily::from_members(width, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_order_is_lexicographic_on_bits() {
        // width 2: {} < {1} < {0} < {0,1} when read as bit sequences 00,01,10,11
        let e = Subset::empty(2);
        let b1 = Subset::singleton(2, 1);
        let b0 = Subset::singleton(2, 0);
        let f = Subset::full(2);
        let mut v = vec![f, b0, e, b1];
        v.sort();
        assert_eq!(v, vec![e, b1, b0, f]);
    }

    #[test]
    fn subsets_enumerates_the_whole_powerset() {
        let s = Subset::from_elems(5, &[0, 2, 4]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(&s)));
        assert_eq!(subs[0], Subset::empty(5));
        assert_eq!(*subs.last().unwrap(), s);
    }

    #[test]
    fn family_dedups_and_sorts() {
        let a = Subset::singleton(3, 0);
        let b = Subset::singleton(3, 2);
        let fam = SetFamily::from_members(3, vec![b, a, b, a]);
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.index_of(&a), Some(1));
        assert_eq!(fam.index_of(&b), Some(0));
    }

    proptest! {
        #[test]
        fn complement_is_involutive(bits in 0u64..256, width in 1usize..9) {
            let s = Subset::from_raw(width, bits & Subset::full(width).raw());
            prop_assert_eq!(s.complement().complement(), s);
        }

        #[test]
        fn family_membership_agrees_with_linear_scan(
            raw in proptest::collection::vec(0u64..64, 0..12),
            probe in 0u64..64,
        ) {
            let members: Vec<Subset> = raw.iter().map(|&b| Subset::from_raw(6, b)).collect();
            let fam = SetFamily::from_members(6, members.clone());
            let p = Subset::from_raw(6, probe);
            prop_assert_eq!(fam.contains(&p), members.contains(&p));
        }
    }
}
