use crate::element_set::ElementSet;
use crate::matroid::Matroid;

/// A total order on the circuits of a matroid. Every circuit index used by
/// the presentations is a position in this order.
#[derive(Debug, Clone)]
pub struct CircuitOrder<'m> {
    matroid: &'m Matroid,
    circuits: Vec<ElementSet>,
}

impl<'m> CircuitOrder<'m> {
    /// Circuits sorted by size, then lexicographically.
    pub fn canonical(matroid: &'m Matroid) -> Self {
        let mut circuits = matroid.circuits().to_vec();
        circuits.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        CircuitOrder { matroid, circuits }
    }

    /// The order placing canonical circuit `perm[i]` at position `i`.
    pub fn permuted(matroid: &'m Matroid, perm: &[usize]) -> Self {
        let canonical = Self::canonical(matroid);
        assert_eq!(perm.len(), canonical.len(), "permutation length");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(!std::mem::replace(&mut seen[p], true), "not a permutation");
        }
        CircuitOrder {
            matroid,
            circuits: perm.iter().map(|&p| canonical.circuits[p]).collect(),
        }
    }

    pub fn matroid(&self) -> &'m Matroid {
        self.matroid
    }

    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn circuit(&self, i: usize) -> ElementSet {
        self.circuits[i]
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn union(&self, ids: &[usize]) -> ElementSet {
        ids.iter()
            .fold(ElementSet::EMPTY, |acc, &i| acc.union(self.circuits[i]))
    }

    /// Dimension of the union of the given circuits.
    pub fn dim(&self, ids: &[usize]) -> isize {
        self.matroid.dim(self.union(ids))
    }
}
