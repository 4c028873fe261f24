use std::sync::OnceLock;

use super::Matroid;
use crate::catalog;
use crate::element_set::{k_subsets, ElementSet};

/// Per-element count of circuits of each size through it.
fn signatures(m: &Matroid) -> Vec<Vec<usize>> {
    let n = m.ground_size();
    let mut sig = vec![vec![0usize; n + 1]; n];
    for c in m.circuits() {
        for e in c.iter() {
            sig[e][c.len()] += 1;
        }
    }
    sig
}

fn size_histogram(m: &Matroid) -> Vec<usize> {
    let mut h = vec![0usize; m.ground_size() + 1];
    for c in m.circuits() {
        h[c.len()] += 1;
    }
    h
}

struct Search<'a> {
    a: &'a Matroid,
    b: &'a Matroid,
    sig_a: Vec<Vec<usize>>,
    sig_b: Vec<Vec<usize>>,
    /// Circuits of `a` whose largest element is `i`.
    closing: Vec<Vec<ElementSet>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, i: usize) -> bool {
        let n = self.a.ground_size();
        if i == n {
            return true;
        }
        for t in 0..n {
            if self.used[t] || self.sig_a[i] != self.sig_b[t] {
                continue;
            }
            self.image[i] = t;
            let consistent = self.closing[i].iter().all(|c| {
                let mapped = c.map(|e| self.image[e]);
                self.b.is_circuit(mapped)
            });
            if !consistent {
                continue;
            }
            self.used[t] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[t] = false;
        }
        false
    }
}

/// An element bijection `f` with `f(C)` a circuit of `b` for every circuit
/// `C` of `a`, if one exists. `result[e]` is the image of element `e`.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if a.ground_size() != b.ground_size()
        || a.rank() != b.rank()
        || size_histogram(a) != size_histogram(b)
    {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let n = a.ground_size();
    let mut closing = vec![Vec::new(); n];
    for &c in a.circuits() {
        closing[c.last().expect("circuits are nonempty")].push(c);
    }
    let mut search = Search {
        a,
        b,
        sig_a,
        sig_b,
        closing,
        image: vec![0; n],
        used: vec![false; n],
    };
    // Equal circuit counts plus an injective circuit map make it onto.
    search.extend(0).then_some(search.image)
}

fn fano() -> &'static Matroid {
    static F7: OnceLock<Matroid> = OnceLock::new();
    F7.get_or_init(catalog::fano)
}

fn dual_fano() -> &'static Matroid {
    static F7_DUAL: OnceLock<Matroid> = OnceLock::new();
    F7_DUAL.get_or_init(|| catalog::fano().dual())
}

/// Whether some `M \ D / T` on 7 elements is isomorphic to `target`.
fn has_minor_like(m: &Matroid, target: &Matroid) -> bool {
    let n = m.ground_size();
    let k = target.ground_size();
    if n < k {
        return false;
    }
    let ground = m.ground();
    for removed in k_subsets(n, n - k) {
        for contracted in removed.subsets() {
            let deleted = removed.difference(contracted);
            // rk(M \ D / T) = rk(E \ D) - rk(T)
            let minor_rank = m.rank_of(ground.difference(deleted)) - m.rank_of(contracted);
            if minor_rank != target.rank() {
                continue;
            }
            let minor = m.minor(deleted, contracted);
            if is_isomorphic(&minor, target).is_some() {
                return true;
            }
        }
    }
    false
}

/// Whether the Fano matroid is a minor of `m` (exhaustive search).
pub fn has_fano_minor(m: &Matroid) -> bool {
    has_minor_like(m, fano())
}

/// Whether the dual Fano matroid is a minor of `m` (exhaustive search).
pub fn has_dual_fano_minor(m: &Matroid) -> bool {
    has_minor_like(m, dual_fano())
}
