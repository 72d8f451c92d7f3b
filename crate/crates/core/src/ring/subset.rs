use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

use super::ElementId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    Units,
    Idempotents,
    Nilpotents,
    Center,
    Radical,
    Custom,
}

/// A set of elements of one ring, stored as a bitset over element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSubset {
    kind: SubsetKind,
    members: BitVec,
}

impl ElementSubset {
    pub fn empty(kind: SubsetKind, order: usize) -> Self {
        ElementSubset {
            kind,
            members: bitvec![0; order],
        }
    }

    pub fn from_predicate(kind: SubsetKind, order: usize, mut pred: impl FnMut(ElementId) -> bool) -> Self {
        let mut members = bitvec![0; order];
        for i in 0..order {
            if pred(ElementId(i as u32)) {
                members.set(i, true);
            }
        }
        ElementSubset { kind, members }
    }

    pub fn from_ids(kind: SubsetKind, order: usize, ids: impl IntoIterator<Item = ElementId>) -> Self {
        let mut s = Self::empty(kind, order);
        for x in ids {
            s.insert(x);
        }
        s
    }

    pub fn with_kind(mut self, kind: SubsetKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> SubsetKind {
        self.kind
    }

    /// Size of the ambient ring.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.members.get(x.index()).map(|b| *b).unwrap_or(false)
    }

    /// Returns true when `x` was not yet present.
    pub fn insert(&mut self, x: ElementId) -> bool {
        let fresh = !self.contains(x);
        self.members.set(x.index(), true);
        fresh
    }

    pub fn len(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.members.not_any()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter_ones().map(|i| ElementId(i as u32))
    }

    pub fn ids(&self) -> Vec<u32> {
        self.members.iter_ones().map(|i| i as u32).collect()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn same_members(&self, other: &ElementSubset) -> bool {
        self.members == other.members
    }
}

/// An ideal of a ring. `two_sided` is set only after verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealHandle {
    pub(crate) members: ElementSubset,
    pub(crate) two_sided: bool,
}

impl IdealHandle {
    pub fn members(&self) -> &ElementSubset {
        &self.members
    }

    pub fn is_two_sided(&self) -> bool {
        self.two_sided
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter()
    }

    pub fn ids(&self) -> Vec<u32> {
        self.members.ids()
    }
}
