//! Enumeration of the circuit configurations the presentations are built
//! from: lines (dimension-one unions of circuits), quadruples and
//! quintuples inside a line, bracket symbols, and triangle families.
//!
//! Dimension is strictly monotone on unions of circuits, so two distinct
//! circuits inside a line already span it. Every configuration living in a
//! line is therefore found by enumerating the circuits contained in that
//! line.

use std::collections::BTreeSet;

use super::order::CircuitOrder;
use crate::element_set::ElementSet;

/// A dimension-one union of circuits and the circuits it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub set: ElementSet,
    /// Circuit indices (order positions), ascending.
    pub circuits: Vec<usize>,
}

/// All lines, sorted by their element set.
pub fn lines(order: &CircuitOrder<'_>) -> Vec<Line> {
    let m = order.matroid();
    let mut sets = BTreeSet::new();
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            let u = order.circuit(i).union(order.circuit(j));
            if m.dim(u) == 1 {
                sets.insert(u);
            }
        }
    }
    sets.into_iter()
        .map(|set| Line {
            set,
            circuits: (0..order.len())
                .filter(|&c| order.circuit(c).is_subset(set))
                .collect(),
        })
        .collect()
}

fn k_combinations(items: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), out);
}

fn line_subsets(order: &CircuitOrder<'_>, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for line in lines(order) {
        k_combinations(&line.circuits, k, &mut out);
    }
    out.sort();
    out
}

/// Sets `{a<b<c<d}` of circuits whose union has dimension one.
pub fn line_quadruples(order: &CircuitOrder<'_>) -> Vec<[usize; 4]> {
    line_subsets(order, 4)
        .into_iter()
        .map(|v| [v[0], v[1], v[2], v[3]])
        .collect()
}

/// Sets `{a<b<c<d<e}` of circuits whose union has dimension one.
pub fn line_quintuples(order: &CircuitOrder<'_>) -> Vec<[usize; 5]> {
    line_subsets(order, 5)
        .into_iter()
        .map(|v| [v[0], v[1], v[2], v[3], v[4]])
        .collect()
}

/// The three pairings `(ab|cd), (ac|bd), (ad|bc)` of every line quadruple.
pub fn q2_symbols(order: &CircuitOrder<'_>) -> Vec<[usize; 4]> {
    line_quadruples(order)
        .into_iter()
        .flat_map(|[a, b, c, d]| [[a, b, c, d], [a, c, b, d], [a, d, b, c]])
        .collect()
}

/// Number of generators of the small presentation (pairings plus `eta`).
pub fn g_count(order: &CircuitOrder<'_>) -> usize {
    3 * line_quadruples(order).len() + 1
}

/// Whether `[a b|c d]` satisfies the square-bracket generator condition:
/// the four circuits span a line and each cross pair spans all of it.
pub fn is_square_symbol(order: &CircuitOrder<'_>, [a, b, c, d]: [usize; 4]) -> bool {
    let l = order.union(&[a, b, c, d]);
    order.matroid().dim(l) == 1
        && [a, b].iter().all(|&k| {
            [c, d]
                .iter()
                .all(|&j| order.circuit(k).union(order.circuit(j)) == l)
        })
}

/// Whether `(a b|c d)` is a generator of the small presentation.
pub fn is_paren_symbol(order: &CircuitOrder<'_>, [a, b, c, d]: [usize; 4]) -> bool {
    a < b && c < d && a < c && b != c && b != d && order.dim(&[a, b, c, d]) == 1
}

/// All square-bracket generators, ordered quadruples with repeats allowed
/// inside a pair.
pub fn g2_symbols(order: &CircuitOrder<'_>) -> Vec<[usize; 4]> {
    let mut out = BTreeSet::new();
    for line in lines(order) {
        let cs = &line.circuits;
        for &a in cs {
            for &b in cs {
                for &c in cs {
                    for &d in cs {
                        let q = [a, b, c, d];
                        if is_square_symbol(order, q) {
                            out.insert(q);
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Number of generators of the large presentation (symbols plus `xi`).
pub fn big_g_count(order: &CircuitOrder<'_>) -> usize {
    g2_symbols(order).len() + 1
}

/// Square-bracket symbols contributed by a line holding `k` circuits:
/// ordered pairs of disjoint circuit pairs, each pair possibly repeated.
pub fn square_symbols_per_line(k: usize) -> usize {
    if k < 2 {
        return 0;
    }
    // (aa|cc), (aa|cd), (ab|cc), (ab|cd) with distinct letters.
    k * (k - 1) + 2 * k * (k - 1) * (k - 2) + k * (k - 1) * (k - 2) * k.saturating_sub(3)
}

/// Paren symbols contributed by a line holding `k` circuits.
pub fn paren_symbols_per_line(k: usize) -> usize {
    if k < 4 {
        return 0;
    }
    3 * (k * (k - 1) * (k - 2) * (k - 3) / 24)
}

/// The nine-circuit configuration of the triangle relations: a triangle
/// `j[0..3]` spanning a plane, and two transversal triples `j[3..6]`,
/// `j[6..9]` with `j[s+3], j[s+6]` on the line opposite `j[s]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TriangleFamily {
    pub j: [usize; 9],
    /// `line_sets[s]` is the union of the two triangle circuits other than `j[s]`.
    pub line_sets: [ElementSet; 3],
    pub plane_set: ElementSet,
}

impl TriangleFamily {
    pub fn triangle(&self) -> [usize; 3] {
        [self.j[0], self.j[1], self.j[2]]
    }

    /// The two transversal circuits on the line opposite triangle slot `s`.
    pub fn transversals(&self, s: usize) -> [usize; 2] {
        [self.j[s + 3], self.j[s + 6]]
    }
}

/// Every 9-tuple satisfying the triangle-family conditions, sorted.
pub fn triangle_families(order: &CircuitOrder<'_>) -> Vec<TriangleFamily> {
    let m = order.matroid();
    let n = order.len();
    let mut out = Vec::new();
    for c1 in 0..n {
        for c2 in 0..n {
            if c2 == c1 || order.dim(&[c1, c2]) != 1 {
                continue;
            }
            for c3 in 0..n {
                if c3 == c1 || c3 == c2 || order.dim(&[c1, c3]) != 1 || order.dim(&[c2, c3]) != 1 {
                    continue;
                }
                let tri = [c1, c2, c3];
                let plane = order.union(&tri);
                if m.dim(plane) != 2 {
                    continue;
                }
                let line_sets = [
                    order.union(&[c2, c3]),
                    order.union(&[c1, c3]),
                    order.union(&[c1, c2]),
                ];
                let candidates: Vec<Vec<usize>> = line_sets
                    .iter()
                    .map(|&l| {
                        (0..n)
                            .filter(|c| !tri.contains(c) && order.circuit(*c).is_subset(l))
                            .collect()
                    })
                    .collect();
                let mut transversals = Vec::new();
                for &t1 in &candidates[0] {
                    for &t2 in &candidates[1] {
                        for &t3 in &candidates[2] {
                            if order.dim(&[t1, t2, t3]) == 1 {
                                transversals.push([t1, t2, t3]);
                            }
                        }
                    }
                }
                for a in &transversals {
                    for b in &transversals {
                        out.push(TriangleFamily {
                            j: [c1, c2, c3, a[0], a[1], a[2], b[0], b[1], b[2]],
                            line_sets,
                            plane_set: plane,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Families used by the small presentation: increasing triangle, and not
/// `j4 >= j7 && j5 >= j8 && j6 >= j9`.
pub fn s5_families(order: &CircuitOrder<'_>) -> Vec<TriangleFamily> {
    triangle_families(order)
        .into_iter()
        .filter(|f| {
            let j = &f.j;
            j[0] < j[1] && j[1] < j[2] && !(j[3] >= j[6] && j[4] >= j[7] && j[5] >= j[8])
        })
        .collect()
}
