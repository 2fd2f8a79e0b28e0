//! Sets of element indices of a single ring.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::ring::{Elem, FiniteRing};

/// What a subset was computed as. Only informational; equality ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsetLabel {
    Units,
    Jacobson,
    Delta,
    Nilpotents,
    Potents(u32),
    Center,
    Ideal,
    Image,
    Custom,
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetLabel::Units => f.write_str("units"),
            SubsetLabel::Jacobson => f.write_str("jacobson"),
            SubsetLabel::Delta => f.write_str("delta"),
            SubsetLabel::Nilpotents => f.write_str("nilpotents"),
            SubsetLabel::Potents(2) => f.write_str("idempotents"),
            SubsetLabel::Potents(3) => f.write_str("tripotents"),
            SubsetLabel::Potents(n) => write!(f, "potents({n})"),
            SubsetLabel::Center => f.write_str("center"),
            SubsetLabel::Ideal => f.write_str("ideal"),
            SubsetLabel::Image => f.write_str("image"),
            SubsetLabel::Custom => f.write_str("custom"),
        }
    }
}

/// A bit-per-element subset of one ring.
///
/// Binary operations assert that both operands belong to the same ring.
#[derive(Clone)]
pub struct ElementSubset {
    ring_id: u64,
    label: SubsetLabel,
    members: FixedBitSet,
}

impl ElementSubset {
    pub fn empty(ring: &FiniteRing, label: SubsetLabel) -> Self {
        ElementSubset {
            ring_id: ring.id(),
            label,
            members: FixedBitSet::with_capacity(ring.order()),
        }
    }

    pub fn full(ring: &FiniteRing, label: SubsetLabel) -> Self {
        let mut s = Self::empty(ring, label);
        s.members.insert_range(..);
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(
        ring: &FiniteRing,
        label: SubsetLabel,
        elems: I,
    ) -> Self {
        let mut s = Self::empty(ring, label);
        for x in elems {
            s.insert(x);
        }
        s
    }

    /// Collects every element satisfying `pred`.
    pub fn filter<F: FnMut(Elem) -> bool>(
        ring: &FiniteRing,
        label: SubsetLabel,
        mut pred: F,
    ) -> Self {
        let mut s = Self::empty(ring, label);
        for x in 0..ring.order() {
            if pred(x) {
                s.members.insert(x);
            }
        }
        s
    }

    pub fn label(&self) -> SubsetLabel {
        self.label
    }

    pub fn with_label(mut self, label: SubsetLabel) -> Self {
        self.label = label;
        self
    }

    pub fn belongs_to(&self, ring: &FiniteRing) -> bool {
        self.ring_id == ring.id()
    }

    pub fn capacity(&self) -> usize {
        self.members.len()
    }

    pub fn insert(&mut self, x: Elem) {
        self.members.insert(x);
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity()
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    fn check_same(&self, other: &ElementSubset) {
        assert_eq!(
            self.ring_id, other.ring_id,
            "subset operation across different rings"
        );
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.check_same(other);
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        self.check_same(other);
        let mut members = self.members.clone();
        members.union_with(&other.members);
        ElementSubset {
            ring_id: self.ring_id,
            label: SubsetLabel::Custom,
            members,
        }
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        self.check_same(other);
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        ElementSubset {
            ring_id: self.ring_id,
            label: SubsetLabel::Custom,
            members,
        }
    }

    pub fn difference(&self, other: &ElementSubset) -> ElementSubset {
        self.check_same(other);
        let mut members = self.members.clone();
        members.difference_with(&other.members);
        ElementSubset {
            ring_id: self.ring_id,
            label: SubsetLabel::Custom,
            members,
        }
    }

    pub fn complement(&self) -> ElementSubset {
        let mut members = self.members.clone();
        members.toggle_range(..);
        ElementSubset {
            ring_id: self.ring_id,
            label: SubsetLabel::Custom,
            members,
        }
    }

    /// `{a + b : a ∈ self, b ∈ other}`.
    pub fn sum_set(&self, ring: &FiniteRing, other: &ElementSubset) -> ElementSubset {
        self.check_same(other);
        assert!(self.belongs_to(ring));
        let mut out = ElementSubset::empty(ring, SubsetLabel::Custom);
        for a in self.iter() {
            for b in other.iter() {
                out.insert(ring.add(a, b));
            }
        }
        out
    }

    /// `{x + s : s ∈ self}`.
    pub fn translate(&self, ring: &FiniteRing, x: Elem) -> ElementSubset {
        assert!(self.belongs_to(ring));
        ElementSubset::from_elems(
            ring,
            SubsetLabel::Custom,
            self.iter().map(|s| ring.add(x, s)),
        )
    }
}

impl PartialEq for ElementSubset {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.members == other.members
    }
}

impl Eq for ElementSubset {}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.label, self.to_vec())
    }
}

impl Serialize for ElementSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
