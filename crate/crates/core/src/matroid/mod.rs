//! Matroids on a dense ground set `0..n`, stored by their circuits.
//!
//! A [`Matroid`] is immutable once built. Construction validates the circuit
//! (or basis) axioms and caches the rank of every subset, so rank queries are
//! a table lookup.

mod iso;
mod ops;

use std::sync::Arc;

use crate::element_set::{k_subsets, ElementSet};
use crate::error::{Axiom, MatroidError};

pub use iso::{has_dual_fano_minor, has_fano_minor, is_isomorphic};
pub use ops::direct_sum;

/// Largest ground set a [`Matroid`] accepts; the rank cache has `2^n` entries.
pub const MAX_GROUND: usize = 20;

#[derive(Clone)]
pub struct Matroid {
    ground_size: usize,
    labels: Option<Vec<String>>,
    /// Sorted lexicographically (see the `Ord` impl of [`ElementSet`]).
    circuits: Vec<ElementSet>,
    rank: usize,
    rank_table: Arc<[u8]>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground_size == other.ground_size
            && self.circuits == other.circuits
            && self.labels == other.labels
    }
}

impl Eq for Matroid {}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("ground_size", &self.ground_size)
            .field("rank", &self.rank)
            .field("circuits", &self.circuits)
            .finish()
    }
}

/// A union of circuits together with its dimension `|F| - rk(F) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitUnion {
    pub circuit_indices: Vec<usize>,
    pub union_set: ElementSet,
    pub dim: isize,
}

fn check_ground(n: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND {
        Err(MatroidError::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

fn check_range(n: usize, s: ElementSet, what: &str) -> Result<(), MatroidError> {
    if !s.is_subset(ElementSet::full(n)) {
        return Err(MatroidError::axiom(
            Axiom::Range,
            format!("{what} {s} not within 0..{n}"),
        ));
    }
    Ok(())
}

/// Rank of every subset, given a "contains a circuit" table.
fn rank_table_from_dependence(n: usize, dependent: &[bool]) -> Vec<u8> {
    let size = 1usize << n;
    let mut rank = vec![0u8; size];
    for mask in 1..size {
        let s = ElementSet::from_bits(mask as u32);
        rank[mask] = if !dependent[mask] {
            s.len() as u8
        } else {
            s.iter().map(|e| rank[mask & !(1 << e)]).max().unwrap_or(0)
        };
    }
    rank
}

impl Matroid {
    /// Builds a matroid from its circuit family, checking minimality and
    /// circuit elimination.
    pub fn from_circuits(
        ground_size: usize,
        circuits: Vec<ElementSet>,
    ) -> Result<Matroid, MatroidError> {
        check_ground(ground_size)?;
        let mut circuits = circuits;
        for &c in &circuits {
            if c.is_empty() {
                return Err(MatroidError::axiom(Axiom::Range, "empty circuit"));
            }
            check_range(ground_size, c, "circuit")?;
        }
        circuits.sort();
        circuits.dedup();
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return Err(MatroidError::axiom(
                        Axiom::Minimality,
                        format!("{a} and {b} are nested"),
                    ));
                }
            }
        }

        let size = 1usize << ground_size;
        let mut dependent = vec![false; size];
        for c in &circuits {
            dependent[c.bits() as usize] = true;
        }
        for mask in 1..size {
            if dependent[mask] {
                continue;
            }
            let mut rest = mask;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                if dependent[mask ^ low] {
                    dependent[mask] = true;
                    break;
                }
                rest ^= low;
            }
        }

        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                let both = a.union(b);
                for e in a.intersection(b) {
                    if !dependent[both.without(e).bits() as usize] {
                        return Err(MatroidError::axiom(
                            Axiom::Elimination,
                            format!("no circuit inside ({a} ∪ {b}) \\ {{{e}}}"),
                        ));
                    }
                }
            }
        }

        let rank_table = rank_table_from_dependence(ground_size, &dependent);
        Ok(Matroid {
            ground_size,
            labels: None,
            rank: rank_table[size - 1] as usize,
            circuits,
            rank_table: rank_table.into(),
        })
    }

    /// Builds a matroid from its bases, checking basis exchange. Circuits
    /// are the minimal subsets contained in no basis.
    pub fn from_bases(ground_size: usize, bases: Vec<ElementSet>) -> Result<Matroid, MatroidError> {
        check_ground(ground_size)?;
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        let Some(first) = bases.first() else {
            return Err(MatroidError::EmptyFamily);
        };
        let r = first.len();
        for &b in &bases {
            check_range(ground_size, b, "basis")?;
            if b.len() != r {
                return Err(MatroidError::axiom(
                    Axiom::Exchange,
                    format!("bases {first} and {b} have different sizes"),
                ));
            }
        }
        let size = 1usize << ground_size;
        let mut independent = vec![false; size];
        for b in &bases {
            independent[b.bits() as usize] = true;
        }
        for &b1 in &bases {
            for &b2 in &bases {
                for x in b1.difference(b2) {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|y| independent[b1.without(x).with(y).bits() as usize]);
                    if !ok {
                        return Err(MatroidError::axiom(
                            Axiom::Exchange,
                            format!("no exchange for {x} between {b1} and {b2}"),
                        ));
                    }
                }
            }
        }
        // Downward closure: a set is independent iff some basis contains it.
        for mask in (0..size).rev() {
            if independent[mask] {
                continue;
            }
            let mut absent = !(mask as u32) & ElementSet::full(ground_size).bits();
            while absent != 0 {
                let low = absent & absent.wrapping_neg();
                if independent[mask | low as usize] {
                    independent[mask] = true;
                    break;
                }
                absent ^= low;
            }
        }
        let dependent: Vec<bool> = independent.iter().map(|&i| !i).collect();
        let mut circuits = Vec::new();
        for k in 1..=ground_size {
            for s in k_subsets(ground_size, k) {
                if dependent[s.bits() as usize]
                    && s.iter().all(|e| !dependent[s.without(e).bits() as usize])
                {
                    circuits.push(s);
                }
            }
        }
        circuits.sort();
        let rank_table = rank_table_from_dependence(ground_size, &dependent);
        Ok(Matroid {
            ground_size,
            labels: None,
            rank: r,
            circuits,
            rank_table: rank_table.into(),
        })
    }

    /// Attaches display names to the elements.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Matroid, MatroidError> {
        if labels.len() != self.ground_size {
            return Err(MatroidError::LabelCount {
                expected: self.ground_size,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.ground_size));
        self.labels = labels;
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `e`: its label, or the index.
    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of `s` (cached).
    #[inline]
    pub fn rank_of(&self, s: ElementSet) -> usize {
        debug_assert!(s.is_subset(self.ground()));
        self.rank_table[s.bits() as usize] as usize
    }

    /// Rank of `s` by greedy growth of an independent subset, straight from
    /// the circuit family. Agrees with [`Matroid::rank_of`].
    pub fn greedy_rank(&self, s: ElementSet) -> usize {
        let mut indep = ElementSet::EMPTY;
        for e in s {
            let cand = indep.with(e);
            if !self.circuits.iter().any(|c| c.is_subset(cand)) {
                indep = cand;
            }
        }
        indep.len()
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn is_circuit(&self, s: ElementSet) -> bool {
        self.circuits.binary_search(&s).is_ok()
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let r = self.rank_of(s);
        self.ground()
            .iter()
            .filter(|&e| self.rank_of(s.with(e)) == r)
            .collect()
    }

    pub fn bases(&self) -> Vec<ElementSet> {
        k_subsets(self.ground_size, self.rank)
            .filter(|&b| self.is_independent(b))
            .collect()
    }

    /// Circuits of the dual matroid: minimal sets meeting every basis.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        let ground = self.ground();
        let r = self.rank;
        let codependent = |a: ElementSet| self.rank_of(ground.difference(a)) < r;
        let mut out: Vec<ElementSet> = Vec::new();
        for k in 1..=self.ground_size {
            for s in k_subsets(self.ground_size, k) {
                if codependent(s) && s.iter().all(|e| !codependent(s.without(e))) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// `|F| - rk(F) - 1`; for a union of circuits this is its dimension.
    pub fn dim(&self, f: ElementSet) -> isize {
        f.len() as isize - self.rank_of(f) as isize - 1
    }

    /// Union of the named circuits with its dimension.
    pub fn circuit_union(&self, circuit_indices: &[usize]) -> CircuitUnion {
        let union_set = circuit_indices
            .iter()
            .fold(ElementSet::EMPTY, |acc, &i| acc.union(self.circuits[i]));
        let mut idx = circuit_indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        CircuitUnion {
            circuit_indices: idx,
            union_set,
            dim: self.dim(union_set),
        }
    }

    /// Dimension of the union of the named circuits. The index set must be
    /// nonempty.
    pub fn dim_of_union(&self, circuit_indices: &[usize]) -> isize {
        assert!(!circuit_indices.is_empty(), "empty circuit index set");
        self.circuit_union(circuit_indices).dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_indices(v.iter().copied())
    }

    fn u24() -> Matroid {
        Matroid::from_circuits(
            4,
            vec![
                set(&[0, 1, 2]),
                set(&[0, 1, 3]),
                set(&[0, 2, 3]),
                set(&[1, 2, 3]),
            ],
        )
        .unwrap()
    }

    /// Brute-force rank: largest subset of `s` containing no circuit.
    fn brute_rank(m: &Matroid, s: ElementSet) -> usize {
        s.subsets()
            .filter(|t| !m.circuits().iter().any(|c| c.is_subset(*t)))
            .map(|t| t.len())
            .max()
            .unwrap()
    }

    #[test]
    fn uniform_from_circuits() {
        let m = u24();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.circuits().len(), 4);
        for s in m.ground().subsets() {
            assert_eq!(m.rank_of(s), brute_rank(&m, s));
            assert_eq!(m.greedy_rank(s), brute_rank(&m, s));
        }
        assert_eq!(m.rank_of(set(&[0, 1, 2])), 2);
        assert_eq!(m.rank_of(ElementSet::EMPTY), 0);
    }

    #[test]
    fn free_matroid() {
        let m = Matroid::from_circuits(3, vec![]).unwrap();
        assert_eq!(m.rank(), 3);
        assert!(m.circuits().is_empty());
    }

    #[test]
    fn nested_circuits_rejected() {
        let err = Matroid::from_circuits(2, vec![set(&[0]), set(&[0, 1])]).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::AxiomViolation {
                axiom: Axiom::Minimality,
                ..
            }
        ));
    }

    #[test]
    fn elimination_failure_rejected() {
        // {0,1} and {1,2} force a circuit inside {0,2}.
        let err = Matroid::from_circuits(3, vec![set(&[0, 1]), set(&[1, 2])]).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::AxiomViolation {
                axiom: Axiom::Elimination,
                ..
            }
        ));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(Matroid::from_circuits(3, vec![set(&[0, 5])]).is_err());
        assert!(Matroid::from_circuits(3, vec![ElementSet::EMPTY]).is_err());
        assert!(matches!(
            Matroid::from_circuits(21, vec![]),
            Err(MatroidError::GroundSetTooLarge(21))
        ));
    }

    #[test]
    fn from_bases_uniform() {
        let m = Matroid::from_bases(4, k_subsets(4, 2).collect()).unwrap();
        assert_eq!(m, u24());
        let free = Matroid::from_bases(3, vec![set(&[0, 1, 2])]).unwrap();
        assert!(free.circuits().is_empty());
        assert_eq!(free.rank(), 3);
    }

    #[test]
    fn from_bases_errors() {
        assert_eq!(
            Matroid::from_bases(3, vec![]),
            Err(MatroidError::EmptyFamily)
        );
        let err = Matroid::from_bases(3, vec![set(&[0, 1]), set(&[2])]).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::AxiomViolation {
                axiom: Axiom::Exchange,
                ..
            }
        ));
        // {0,1},{2,3}: removing 0 from the first needs {2,1} or {3,1}.
        let err = Matroid::from_bases(4, vec![set(&[0, 1]), set(&[2, 3])]).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::AxiomViolation {
                axiom: Axiom::Exchange,
                ..
            }
        ));
    }

    #[test]
    fn bases_round_trip() {
        let m = u24();
        let again = Matroid::from_bases(4, m.bases()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn dimension_of_unions() {
        let m = u24();
        for i in 0..4 {
            assert_eq!(m.dim_of_union(&[i]), 0);
        }
        assert_eq!(m.dim_of_union(&[0, 1]), 1);
        assert_eq!(m.dim_of_union(&[0, 1, 2, 3]), 1);
    }

    #[test]
    fn cocircuits_of_u24() {
        let m = u24();
        assert_eq!(m.cocircuits(), m.circuits().to_vec());
    }

    #[test]
    fn closure_of_circuit() {
        let m = u24();
        assert_eq!(m.closure(set(&[0, 1])), m.ground());
        assert_eq!(m.closure(set(&[0])), set(&[0]));
    }
}
