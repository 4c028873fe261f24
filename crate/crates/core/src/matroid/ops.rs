use super::Matroid;
use crate::element_set::ElementSet;
use crate::error::MatroidError;

/// Renumbers `s ⊆ keep` to positions inside `keep`, preserving order.
pub(crate) fn compress(s: ElementSet, keep: ElementSet) -> ElementSet {
    debug_assert!(s.is_subset(keep));
    keep.iter()
        .enumerate()
        .filter(|&(_, e)| s.contains(e))
        .map(|(i, _)| i)
        .collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

impl Matroid {
    /// The dual matroid; its circuits are the cocircuits of `self`.
    pub fn dual(&self) -> Matroid {
        let mut d = Matroid::from_circuits(self.ground_size, self.cocircuits())
            .expect("cocircuits of a matroid satisfy the circuit axioms");
        d.set_labels(self.labels.clone());
        d
    }

    /// Restriction to `E \ t`, with elements renumbered in order.
    pub fn delete(&self, t: ElementSet) -> Matroid {
        let keep = self.ground().difference(t);
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.is_subset(keep))
            .map(|&c| compress(c, keep))
            .collect();
        let mut m = Matroid::from_circuits(keep.len(), circuits)
            .expect("restriction of a matroid is a matroid");
        m.set_labels(
            self.labels
                .as_ref()
                .map(|l| keep.iter().map(|e| l[e].clone()).collect()),
        );
        m
    }

    /// Contraction of `t`, computed as `(M* \ t)*`.
    pub fn contract(&self, t: ElementSet) -> Matroid {
        self.dual().delete(t).dual()
    }

    /// `M \ deleted / contracted` for disjoint sets given in the indices of
    /// `self`.
    pub fn minor(&self, deleted: ElementSet, contracted: ElementSet) -> Matroid {
        assert!(
            deleted.is_disjoint(contracted),
            "minor sets must be disjoint"
        );
        let keep = self.ground().difference(deleted);
        self.delete(deleted).contract(compress(contracted, keep))
    }

    /// Relaxes the circuit-hyperplane `c`: the result has bases
    /// `bases(M) ∪ {c}`.
    pub fn relax(&self, c: ElementSet) -> Result<Matroid, MatroidError> {
        if !self.is_circuit(c) || c.len() != self.rank || self.closure(c) != c {
            return Err(MatroidError::NotCircuitHyperplane(c));
        }
        let mut bases = self.bases();
        bases.push(c);
        let mut m = Matroid::from_bases(self.ground_size, bases)?;
        m.set_labels(self.labels.clone());
        Ok(m)
    }

    /// Blocks of the relation "lie on a common circuit"; elements on no
    /// circuit are singleton blocks. Sorted by smallest element.
    pub fn connected_components(&self) -> Vec<ElementSet> {
        let n = self.ground_size;
        let mut parent: Vec<usize> = (0..n).collect();
        for c in &self.circuits {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut blocks: Vec<ElementSet> = Vec::new();
        let mut root_block = vec![usize::MAX; n];
        for e in 0..n {
            let r = find(&mut parent, e);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(ElementSet::EMPTY);
            }
            blocks[root_block[r]].insert(e);
        }
        blocks
    }

    pub fn num_components(&self) -> usize {
        self.connected_components().len()
    }
}

/// Direct sum; the elements of `b` are shifted past those of `a`.
pub fn direct_sum(a: &Matroid, b: &Matroid) -> Result<Matroid, MatroidError> {
    let shift = a.ground_size;
    let mut circuits = a.circuits.clone();
    circuits.extend(b.circuits.iter().map(|c| c.map(|e| e + shift)));
    let mut m = Matroid::from_circuits(shift + b.ground_size, circuits)?;
    if a.labels.is_some() || b.labels.is_some() {
        let labels = (0..a.ground_size)
            .map(|e| a.label(e))
            .chain((0..b.ground_size).map(|e| b.label(e)))
            .collect();
        m.set_labels(Some(labels));
    }
    Ok(m)
}
