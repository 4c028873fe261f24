use super::normal_form::{hnf, pivot_columns};
use super::{GroupInvariants, Presentation, SparseVector};
use crate::error::LatticeError;
use crate::scalar::Scalar;
use crate::symbol::RelationTag;

/// Coordinates of `v` over the rows of an echelon basis, or `None` when `v`
/// is outside their span over the integers.
fn echelon_coordinates<T: Scalar>(echelon: &[Vec<T>], pivots: &[usize], v: &[T]) -> Option<Vec<T>> {
    let mut v = v.to_vec();
    let mut coords = Vec::with_capacity(echelon.len());
    for (row, &p) in echelon.iter().zip(pivots) {
        let (q, r) = v[p].div_rem(&row[p]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= q.clone() * y.clone();
                }
            }
        }
        coords.push(q);
    }
    v.iter().all(|x| x.is_zero()).then_some(coords)
}

/// Presentation of the kernel of the homomorphism `p -> Z^k` induced by
/// `lambda` (one sparse row per target coordinate).
///
/// The kernel lattice is computed as the saturated integer kernel of
/// `lambda`: an HNF of `[lambda^T | I]` leaves the kernel basis in the rows
/// whose `lambda^T` part vanishes. Each relation of `p` is then rewritten in
/// that basis.
pub fn kernel_presentation<T: Scalar>(
    p: &Presentation<T>,
    lambda: &[SparseVector<T>],
) -> Result<Presentation<T>, LatticeError> {
    let n = p.num_generators();
    let k = lambda.len();
    for row in lambda {
        if let Some(i) = row.max_index() {
            if i >= n {
                return Err(LatticeError::DimensionMismatch {
                    expected: n,
                    got: i + 1,
                });
            }
        }
    }
    for (idx, r) in p.relations().iter().enumerate() {
        if lambda.iter().any(|row| !dot_sparse(row, r).is_zero()) {
            return Err(LatticeError::IllDefined { relation: idx });
        }
    }
    let mut augmented = vec![vec![T::zero(); k + n]; n];
    for (t, row) in lambda.iter().enumerate() {
        for (g, v) in row.entries() {
            augmented[*g][t] = v.clone();
        }
    }
    for (g, row) in augmented.iter_mut().enumerate() {
        row[k + g] = T::one();
    }
    let h = hnf(&augmented);
    let basis: Vec<Vec<T>> = h
        .into_iter()
        .filter(|row| row[..k].iter().all(|x| x.is_zero()))
        .map(|row| row[k..].to_vec())
        .collect();
    let pivots = pivot_columns(&basis);
    let mut out = Presentation::anonymous(basis.len());
    for (r, tag) in p.relations().iter().zip(p.tags()) {
        let coords = echelon_coordinates(&basis, &pivots, &r.to_dense(n))
            .expect("relations in the kernel lie in the saturated kernel basis");
        out.add_relation(SparseVector::from_dense(&coords), tag.clone());
    }
    Ok(out)
}

fn dot_sparse<T: Scalar>(a: &SparseVector<T>, b: &SparseVector<T>) -> T {
    let mut acc = T::zero();
    for (i, x) in a.entries() {
        let y = b.get(*i);
        if !y.is_zero() {
            acc += x.clone() * y;
        }
    }
    acc
}

/// Invariants of the subgroup of `p` generated by the classes of `gens`.
///
/// With `W` the lattice spanned by `gens` and the relations, the subgroup
/// is `W / R`; the relations are written in an HNF basis of `W`.
pub fn subgroup_invariants<T: Scalar>(
    p: &Presentation<T>,
    gens: &[SparseVector<T>],
) -> Result<GroupInvariants<T>, LatticeError> {
    let n = p.num_generators();
    for g in gens {
        if let Some(i) = g.max_index() {
            if i >= n {
                return Err(LatticeError::DimensionMismatch {
                    expected: n,
                    got: i + 1,
                });
            }
        }
    }
    let spanning: Vec<Vec<T>> = gens
        .iter()
        .chain(p.relations())
        .map(|v| v.to_dense(n))
        .collect();
    let basis = hnf(&spanning);
    let pivots = pivot_columns(&basis);
    let mut sub = Presentation::anonymous(basis.len());
    for r in p.relations() {
        let coords = echelon_coordinates(&basis, &pivots, &r.to_dense(n))
            .expect("relations lie in the lattice they help span");
        sub.add_relation(
            SparseVector::from_dense(&coords),
            RelationTag::new("relation", []),
        );
    }
    Ok(sub.invariants())
}
