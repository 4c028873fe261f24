use std::collections::BTreeSet;

use super::sparse::SparseVector;
use crate::scalar::{div_floor, Scalar};

fn sub_row<T: Scalar>(target: &mut [T], factor: &T, source: &[T]) {
    if factor.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= factor.clone() * s.clone();
        }
    }
}

/// Row-style Hermite normal form: nonzero rows only, each with a positive
/// pivot strictly right of the previous one, entries above a pivot reduced
/// into `[0, pivot)`. The row lattice is unchanged.
pub fn hnf<T: Scalar>(rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let mut found = false;
        loop {
            let pivot = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&i, &j| m[i][c].abs().cmp(&m[j][c].abs()).then(i.cmp(&j)));
            let Some(p) = pivot else { break };
            found = true;
            m.swap(r, p);
            let (head, tail) = m.split_at_mut(r + 1);
            let prow = &head[r];
            let mut clean = true;
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&prow[c]);
                sub_row(row, &q, prow);
                if !row[c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let (head, tail) = m.split_at_mut(r);
        let prow = &tail[0];
        for row in head.iter_mut() {
            let q = div_floor(&row[c], &prow[c]);
            sub_row(row, &q, prow);
        }
        r += 1;
    }
    m.truncate(r);
    m.retain(|row| row.iter().any(|x| !x.is_zero()));
    m
}

/// Column index of the first nonzero entry of each row of an echelon form.
pub fn pivot_columns<T: Scalar>(echelon: &[Vec<T>]) -> Vec<usize> {
    echelon
        .iter()
        .map(|row| {
            row.iter()
                .position(|x| !x.is_zero())
                .expect("echelon rows are nonzero")
        })
        .collect()
}

/// Diagonal of the Smith normal form: `min(rows, cols)` nonnegative
/// entries, each dividing the next, zeros last.
pub fn snf<T: Scalar>(rows: &[Vec<T>]) -> Vec<T> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let size = nrows.min(ncols);
    let mut diag = Vec::with_capacity(size);
    for t in 0..size {
        // Smallest nonzero entry of the trailing block as the pivot.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            diag.resize(size, T::zero());
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            // Clear column t.
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let (head, tail) = m.split_at_mut(i);
                sub_row(&mut tail[0][t..], &q, &head[t][t..]);
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t.
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let v = row[t].clone();
                    if !v.is_zero() {
                        row[j] -= q.clone() * v;
                    }
                }
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // Move the smallest remainder in row/column t to the pivot.
                let mut best = (t, t);
                for i in t + 1..nrows {
                    if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..ncols {
                    if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    m.swap(t, best.0);
                }
                if best.1 != t {
                    for row in m.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            // Pivot must divide the rest of the block.
            let offender =
                (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match offender {
                Some(i) => {
                    let (head, tail) = m.split_at_mut(i);
                    let src = tail[0].clone();
                    for (x, s) in head[t].iter_mut().zip(src) {
                        *x += s;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Reduction machinery for the relation lattice of a presentation.
///
/// Relations are first eliminated sparsely on `±1` pivots: each such pivot
/// expresses one generator through the others. What remains is a small
/// dense lattice kept in Hermite normal form. Reducing a vector substitutes
/// the eliminated generators in order and then reduces against the HNF, so
/// the residue is the HNF residue for a column order that puts the
/// eliminated generators first.
#[derive(Debug, Clone)]
pub struct NormalForm<T> {
    num_generators: usize,
    eliminations: Vec<(usize, SparseVector<T>)>,
    residual_cols: Vec<usize>,
    residual_pos: Vec<Option<usize>>,
    hnf: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> NormalForm<T> {
    pub fn new(num_generators: usize, relations: &[SparseVector<T>]) -> Self {
        let mut rows: Vec<Option<SparseVector<T>>> = relations
            .iter()
            .map(|r| (!r.is_zero()).then(|| r.clone()))
            .collect();
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); num_generators];
        let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (i, r) in rows.iter().enumerate() {
            if let Some(r) = r {
                for (c, _) in r.entries() {
                    col_rows[*c].insert(i);
                }
                queue.insert((r.nnz(), i));
            }
        }
        let mut parked: BTreeSet<usize> = BTreeSet::new();
        let mut eliminated = vec![false; num_generators];
        let mut eliminations = Vec::new();

        while let Some((_, pr)) = queue.pop_first() {
            let prow = rows[pr].as_ref().expect("queued rows are alive");
            let pivot_col = prow
                .entries()
                .iter()
                .filter(|(_, v)| v.is_unit())
                .map(|(c, _)| *c)
                .min_by_key(|&c| (col_rows[c].len(), c));
            let Some(pc) = pivot_col else {
                parked.insert(pr);
                continue;
            };
            let prow = rows[pr].take().expect("queued rows are alive");
            let psign = prow.get(pc);
            for (c, _) in prow.entries() {
                col_rows[*c].remove(&pr);
            }
            let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
            for r in targets {
                let old = rows[r].take().expect("indexed rows are alive");
                if !queue.remove(&(old.nnz(), r)) {
                    parked.remove(&r);
                }
                let factor = old.get(pc) * psign.clone();
                let new = old.sub_scaled(&factor, &prow);
                for (c, _) in prow.entries() {
                    if new.get(*c).is_zero() {
                        col_rows[*c].remove(&r);
                    } else {
                        col_rows[*c].insert(r);
                    }
                }
                if !new.is_zero() {
                    queue.insert((new.nnz(), r));
                    rows[r] = Some(new);
                }
            }
            debug_assert!(col_rows[pc].is_empty());
            eliminated[pc] = true;
            eliminations.push((pc, prow));
        }

        let residual_cols: Vec<usize> = (0..num_generators).filter(|&c| !eliminated[c]).collect();
        let mut residual_pos = vec![None; num_generators];
        for (k, &c) in residual_cols.iter().enumerate() {
            residual_pos[c] = Some(k);
        }
        let dense: Vec<Vec<T>> = parked
            .iter()
            .map(|&r| {
                let mut v = vec![T::zero(); residual_cols.len()];
                for (c, x) in rows[r].as_ref().expect("parked rows are alive").entries() {
                    v[residual_pos[*c].expect("parked rows avoid eliminated columns")] = x.clone();
                }
                v
            })
            .collect();
        let hnf = hnf(&dense);
        let pivots = pivot_columns(&hnf);
        NormalForm {
            num_generators,
            eliminations,
            residual_cols,
            residual_pos,
            hnf,
            pivots,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    /// Number of generators removed by unit-pivot elimination.
    pub fn num_eliminated(&self) -> usize {
        self.eliminations.len()
    }

    /// Dense Hermite form of what is left after elimination.
    pub fn residual_hnf(&self) -> &[Vec<T>] {
        &self.hnf
    }

    pub fn free_rank(&self) -> usize {
        self.residual_cols.len() - self.hnf.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<T> {
        snf(&self.hnf).into_iter().filter(|d| !d.is_one()).collect()
    }

    /// Canonical residue of `v` modulo the relation lattice.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.num_generators);
        let mut v = v.to_vec();
        for (c, row) in &self.eliminations {
            if v[*c].is_zero() {
                continue;
            }
            let factor = v[*c].clone() * row.get(*c);
            for (i, x) in row.entries() {
                v[*i] -= factor.clone() * x.clone();
            }
            debug_assert!(v[*c].is_zero());
        }
        let mut w: Vec<T> = self.residual_cols.iter().map(|&c| v[c].clone()).collect();
        for (row, &p) in self.hnf.iter().zip(&self.pivots) {
            let q = div_floor(&w[p], &row[p]);
            sub_row(&mut w, &q, row);
        }
        let mut out = vec![T::zero(); self.num_generators];
        for (k, &c) in self.residual_cols.iter().enumerate() {
            out[c] = std::mem::replace(&mut w[k], T::zero());
        }
        out
    }

    /// Whether `v` lies in the relation lattice.
    pub fn is_relation(&self, v: &SparseVector<T>) -> bool {
        self.reduce(&v.to_dense(self.num_generators))
            .iter()
            .all(|x| x.is_zero())
    }

    /// Whether generator `g` survives elimination (its residue can be nonzero).
    pub fn is_residual(&self, g: usize) -> bool {
        self.residual_pos[g].is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn det2(a: &[Vec<i64>]) -> i64 {
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    /// Whether `v` is an integer combination of the rows of an echelon form.
    fn in_row_lattice(echelon: &[Vec<i64>], v: &[i64]) -> bool {
        let mut v = v.to_vec();
        for (row, p) in echelon.iter().zip(pivot_columns(echelon)) {
            if v[p] % row[p] != 0 {
                return false;
            }
            let q = v[p] / row[p];
            for (x, r) in v.iter_mut().zip(row) {
                *x -= q * r;
            }
        }
        v.iter().all(|&x| x == 0)
    }

    #[test]
    fn hnf_identity() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(hnf(&id), id);
    }

    #[test]
    fn hnf_drops_zero_rows() {
        assert_eq!(hnf(&m(&[&[2, 4], &[0, 0]])), m(&[&[2, 4]]));
    }

    #[test]
    fn hnf_preserves_lattice() {
        let a = m(&[&[4, 6], &[6, 4]]);
        let h = hnf(&a);
        assert_eq!(h.len(), 2);
        assert_eq!(det2(&h).abs(), 20);
        assert_eq!(h[1][0], 0);
        assert!(h[0][0] > 0 && h[1][1] > 0);
        assert!((0..h[1][1]).contains(&h[0][1]));
        for row in &a {
            assert!(in_row_lattice(&h, row));
        }
        assert_eq!(h, m(&[&[2, 8], &[0, 10]]));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            snf(&m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 0]])),
            vec![1, 2, 0]
        );
        assert_eq!(snf(&m(&[&[4, 6], &[6, 4]])), vec![2, 10]);
        assert_eq!(snf::<i64>(&[]), Vec::<i64>::new());
        assert_eq!(snf(&m(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(snf(&m(&[&[0, 0, 0]])), vec![0]);
    }

    #[test]
    fn normal_form_small_presentation() {
        // eta, a, b, c with 2 eta = 0 and a - b + c - eta = 0.
        let rels = vec![
            SparseVector::<i64>::from_pairs([(0, 2)]),
            SparseVector::from_pairs([(1, 1), (2, -1), (3, 1), (0, -1)]),
        ];
        let nf = NormalForm::new(4, &rels);
        assert_eq!(nf.free_rank(), 2);
        assert_eq!(nf.torsion(), vec![2]);
        assert!(nf.is_relation(&rels[0]));
        assert!(nf.is_relation(&rels[1]));
        // a + c - b and eta agree.
        assert_eq!(nf.reduce(&[0, 1, -1, 1]), nf.reduce(&[1, 0, 0, 0]));
        assert_ne!(nf.reduce(&[0, 1, 0, 0]), nf.reduce(&[0, 0, 0, 0]));
    }

    #[test]
    fn normal_form_trivial_group() {
        let nf = NormalForm::new(1, &[SparseVector::<i64>::from_pairs([(0, 1)])]);
        assert_eq!(nf.free_rank(), 0);
        assert!(nf.torsion().is_empty());
        let free = NormalForm::<i64>::new(3, &[]);
        assert_eq!(free.free_rank(), 3);
    }
}
