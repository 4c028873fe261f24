//! Finitely presented abelian groups in additive notation.

mod kernel;
mod normal_form;
mod sparse;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

pub use kernel::{kernel_presentation, subgroup_invariants};
pub use normal_form::{hnf, pivot_columns, snf, NormalForm};
pub use sparse::SparseVector;

use crate::error::LatticeError;
use crate::scalar::Scalar;
use crate::symbol::{GeneratorSymbol, RelationTag};

/// Isomorphism type of a finitely generated abelian group: `Z^free_rank`
/// plus cyclic factors `Z/d` with each `d` dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupInvariants<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: Scalar> GroupInvariants<T> {
    pub fn trivial() -> Self {
        GroupInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Adds `extra` free summands.
    pub fn with_extra_free_rank(&self, extra: usize) -> Self {
        GroupInvariants {
            free_rank: self.free_rank + extra,
            torsion: self.torsion.clone(),
        }
    }
}

impl<T: Scalar> fmt::Display for GroupInvariants<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Generators with symbolic names plus integer relation vectors; a relation
/// `r` asserts `sum r[i] * gen[i] = 0`.
#[derive(Debug, Clone)]
pub struct Presentation<T> {
    labels: Vec<GeneratorSymbol>,
    index: HashMap<GeneratorSymbol, usize>,
    relations: Vec<SparseVector<T>>,
    tags: Vec<RelationTag>,
    normal_form: OnceLock<NormalForm<T>>,
}

impl<T: Scalar> Presentation<T> {
    /// Free group on the given generators. Labels must be distinct.
    pub fn new(labels: Vec<GeneratorSymbol>) -> Self {
        let index: HashMap<GeneratorSymbol, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        assert_eq!(
            index.len(),
            labels.len(),
            "generator labels must be distinct"
        );
        Presentation {
            labels,
            index,
            relations: Vec::new(),
            tags: Vec::new(),
            normal_form: OnceLock::new(),
        }
    }

    /// `n` anonymous generators `b0 .. b{n-1}`.
    pub fn anonymous(n: usize) -> Self {
        Self::new((0..n).map(GeneratorSymbol::Basis).collect())
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[GeneratorSymbol] {
        &self.labels
    }

    pub fn index_of(&self, symbol: &GeneratorSymbol) -> Option<usize> {
        self.index.get(symbol).copied()
    }

    pub fn relations(&self) -> &[SparseVector<T>] {
        &self.relations
    }

    pub fn tags(&self) -> &[RelationTag] {
        &self.tags
    }

    pub fn add_relation(&mut self, relation: SparseVector<T>, tag: RelationTag) {
        if let Some(i) = relation.max_index() {
            assert!(i < self.num_generators(), "relation index {i} out of range");
        }
        self.relations.push(relation);
        self.tags.push(tag);
        self.normal_form = OnceLock::new();
    }

    /// Adds a relation given as `(symbol, coefficient)` terms.
    pub fn add_symbolic_relation(&mut self, terms: &[(GeneratorSymbol, i64)], tag: RelationTag) {
        let v = self.vector(terms);
        self.add_relation(v, tag);
    }

    /// Vector of a formal combination of named generators.
    pub fn vector(&self, terms: &[(GeneratorSymbol, i64)]) -> SparseVector<T> {
        SparseVector::from_i64_pairs(terms.iter().map(|(s, c)| {
            let i = self
                .index_of(s)
                .unwrap_or_else(|| panic!("{s} is not a generator"));
            (i, *c)
        }))
    }

    pub fn normal_form(&self) -> &NormalForm<T> {
        self.normal_form
            .get_or_init(|| NormalForm::new(self.num_generators(), &self.relations))
    }

    pub fn invariants(&self) -> GroupInvariants<T> {
        let nf = self.normal_form();
        GroupInvariants {
            free_rank: nf.free_rank(),
            torsion: nf.torsion(),
        }
    }

    fn check_len(&self, v: &[T]) -> Result<(), LatticeError> {
        if v.len() == self.num_generators() {
            Ok(())
        } else {
            Err(LatticeError::DimensionMismatch {
                expected: self.num_generators(),
                got: v.len(),
            })
        }
    }

    /// Canonical residue of `v` modulo the relations.
    pub fn reduce(&self, v: &[T]) -> Result<Vec<T>, LatticeError> {
        self.check_len(v)?;
        Ok(self.normal_form().reduce(v))
    }

    pub fn elements_equal(&self, v: &[T], w: &[T]) -> Result<bool, LatticeError> {
        Ok(self.reduce(v)? == self.reduce(w)?)
    }

    /// Whether the sparse element `v` is the identity of the group.
    pub fn is_identity(&self, v: &SparseVector<T>) -> bool {
        self.normal_form().is_relation(v)
    }
}
