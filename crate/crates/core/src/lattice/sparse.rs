use crate::scalar::Scalar;

/// Integer vector stored as `(index, nonzero value)` pairs sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVector<T> {
    entries: Vec<(usize, T)>,
}

impl<T: Scalar> SparseVector<T> {
    pub fn new() -> Self {
        SparseVector {
            entries: Vec::new(),
        }
    }

    /// Builds from unsorted pairs; repeated indices are summed and zeros
    /// dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, T)>>(pairs: I) -> Self {
        let mut entries: Vec<(usize, T)> = pairs.into_iter().collect();
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, T)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVector { entries: out }
    }

    /// Convenience for small-integer coefficient lists.
    pub fn from_i64_pairs<I: IntoIterator<Item = (usize, i64)>>(pairs: I) -> Self {
        Self::from_pairs(pairs.into_iter().map(|(i, v)| (i, T::from_i64_exact(v))))
    }

    pub fn from_dense(v: &[T]) -> Self {
        SparseVector {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<T> {
        let mut v = vec![T::zero(); len];
        for (i, x) in &self.entries {
            v[*i] = x.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Largest index present, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, idx: usize) -> T {
        match self.entries.binary_search_by_key(&idx, |(i, _)| *i) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// `self - factor * other`.
    pub fn sub_scaled(&self, factor: &T, other: &SparseVector<T>) -> SparseVector<T> {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                out.push((b[j].0, -(factor.clone() * b[j].1.clone())));
                j += 1;
            } else {
                let v = a[i].1.clone() - factor.clone() * b[j].1.clone();
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVector { entries: out }
    }

    pub fn add(&self, other: &SparseVector<T>) -> SparseVector<T> {
        self.sub_scaled(&-T::one(), other)
    }

    pub fn scaled(&self, factor: &T) -> SparseVector<T> {
        if factor.is_zero() {
            return SparseVector::new();
        }
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> SparseVector<T> {
        self.scaled(&-T::one())
    }

    /// Dot product with a dense vector.
    pub fn dot(&self, dense: &[T]) -> T {
        let mut acc = T::zero();
        for (i, v) in &self.entries {
            acc += v.clone() * dense[*i].clone();
        }
        acc
    }
}
