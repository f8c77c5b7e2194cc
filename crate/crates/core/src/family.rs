use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Circuits,
    Cocircuits,
    Triangles,
    Hyperplanes,
    Flats,
}

/// A sorted, duplicate-free list of subsets of `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    kind: FamilyKind,
    members: Vec<Mask>,
}

impl SetFamily {
    /// Members are kept in the order given (callers sort by size, then mask)
    /// but duplicates are rejected in debug builds.
    pub fn new(n: usize, kind: FamilyKind, members: Vec<Mask>) -> Self {
        debug_assert!({
            let mut m = members.clone();
            m.sort_unstable();
            m.windows(2).all(|w| w[0] != w[1])
        });
        SetFamily { n, kind, members }
    }

    pub(crate) fn with_kind(mut self, kind: FamilyKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Mask> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, x: Mask) -> bool {
        self.members.contains(&x)
    }

    pub fn containing(&self, e: usize) -> impl Iterator<Item = Mask> + '_ {
        self.iter().filter(move |&m| m >> e & 1 == 1)
    }

    /// `hist[k]` = number of members of size `k`.
    pub fn size_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.n + 1];
        for m in self.iter() {
            hist[bits::size(m)] += 1;
        }
        hist
    }

    /// No member contains another.
    pub fn is_antichain(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, &a)| self.members.iter().enumerate().all(|(j, &b)| i == j || a & b != a))
    }

    /// Members as sorted element lists.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.iter().map(|m| bits::elements(m).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_and_antichain() {
        let f = SetFamily::new(4, FamilyKind::Circuits, vec![0b0011, 0b1100, 0b0101]);
        assert_eq!(f.size_histogram(), vec![0, 0, 3, 0, 0]);
        assert!(f.is_antichain());
        assert_eq!(f.containing(0).count(), 2);
        let g = SetFamily::new(4, FamilyKind::Flats, vec![0b0001, 0b0011]);
        assert!(!g.is_antichain());
        assert_eq!(g.to_lists(), vec![vec![0], vec![0, 1]]);
    }
}
