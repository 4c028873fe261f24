#![allow(dead_code)]

use std::sync::OnceLock;

use itg_core::catalog;
use itg_core::element_set::{k_subsets, ElementSet};
use itg_core::matroid::{is_isomorphic, Matroid};

/// Every matroid on `0..n+1` whose deletion of element `n` is `base`.
fn extensions(base: &Matroid) -> Vec<Matroid> {
    let n = base.ground_size();
    let e = n;
    let bases = base.bases();
    let r = base.rank();
    let mut out = Vec::new();
    // e a coloop.
    out.push(Matroid::from_bases(n + 1, bases.iter().map(|b| b.with(e)).collect()).unwrap());
    if r == 0 {
        out.push(Matroid::from_bases(n + 1, bases).unwrap());
        return out;
    }
    let candidates: Vec<ElementSet> = k_subsets(n, r - 1)
        .filter(|s| base.is_independent(*s))
        .collect();
    for pick in 0u32..(1 << candidates.len()) {
        let mut family = bases.clone();
        family.extend(
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, s)| s.with(e)),
        );
        if let Ok(m) = Matroid::from_bases(n + 1, family) {
            out.push(m);
        }
    }
    out
}

/// All matroids on the labelled ground sets `0..n` for `n = 0..=6`, indexed
/// by `n`.
pub fn labelled() -> &'static [Vec<Matroid>] {
    static ALL: OnceLock<Vec<Vec<Matroid>>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut levels = vec![vec![
            Matroid::from_bases(0, vec![ElementSet::EMPTY]).unwrap()
        ]];
        for _ in 0..6 {
            let next = levels.last().unwrap().iter().flat_map(extensions).collect();
            levels.push(next);
        }
        levels
    })
}

/// One representative per isomorphism class, for each `n = 0..=6`.
pub fn iso_classes() -> &'static [Vec<Matroid>] {
    static REPS: OnceLock<Vec<Vec<Matroid>>> = OnceLock::new();
    REPS.get_or_init(|| {
        labelled()
            .iter()
            .map(|level| {
                let mut reps: Vec<Matroid> = Vec::new();
                for m in level {
                    if !reps.iter().any(|r| is_isomorphic(r, m).is_some()) {
                        reps.push(m.clone());
                    }
                }
                reps
            })
            .collect()
    })
}

pub fn catalog_all() -> Vec<(&'static str, Matroid)> {
    catalog::NAMES
        .iter()
        .map(|&n| (n, catalog::get(n).unwrap()))
        .collect()
}

/// Renumbers `s ⊆ keep` to positions inside `keep`.
pub fn compress(s: ElementSet, keep: ElementSet) -> ElementSet {
    keep.iter()
        .enumerate()
        .filter(|&(_, e)| s.contains(e))
        .map(|(i, _)| i)
        .collect()
}

/// `m` with element `e` renamed to `perm[e]`.
pub fn relabel(m: &Matroid, perm: &[usize]) -> Matroid {
    Matroid::from_circuits(
        m.ground_size(),
        m.circuits().iter().map(|c| c.map(|e| perm[e])).collect(),
    )
    .unwrap()
}

/// Matroid of the columns of an `r x n` matrix over `GF(p)`.
pub fn column_matroid(rows: &[Vec<u8>], p: u8) -> Matroid {
    let n = rows.first().map_or(0, Vec::len);
    let r = rows.len();
    let rank_mod_p = |cols: &[usize]| -> usize {
        let mut m: Vec<Vec<i64>> = (0..r)
            .map(|i| cols.iter().map(|&j| rows[i][j] as i64 % p as i64).collect())
            .collect();
        let p = p as i64;
        let mut rank = 0;
        for c in 0..cols.len() {
            let Some(piv) = (rank..r).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
            for i in 0..r {
                if i != rank && m[i][c] != 0 {
                    let f = m[i][c] * inv % p;
                    let pivot_row = m[rank].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x = ((*x - f * y) % p + p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    };
    let full = rank_mod_p(&(0..n).collect::<Vec<_>>());
    let bases = k_subsets(n, full)
        .filter(|s| rank_mod_p(&s.to_vec()) == full)
        .collect();
    Matroid::from_bases(n, bases).unwrap()
}
