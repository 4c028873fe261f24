//! Identities of the bracket values `<a b|c d>` in the paren presentation:
//! the symmetries P1 to P3, the permutation invariance of the three-term
//! quadruple product (A1) and of the three-term triangle product (A2).
//!
//! Configuration sets larger than the exhaustive limit are sampled with a
//! seeded generator, so results only depend on the seed.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::configs::{g2_symbols, triangle_families, TriangleFamily};
use super::order::CircuitOrder;
use super::tmi0::bracket_sum;
use super::FailureLog;
use crate::lattice::Presentation;
use crate::scalar::Scalar;

/// Every permutation of `0..4`.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The permutations of a triangle family generated by relabelling the
/// triangle (transversals travel with their line) and by swapping the two
/// transversal triples: `(triangle permutation, swap)`.
pub fn triangle_symmetries() -> Vec<([usize; 3], bool)> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    perms
        .into_iter()
        .flat_map(|p| [(p, false), (p, true)])
        .collect()
}

/// The three brackets of the triangle product after applying a symmetry.
pub fn triangle_brackets(f: &TriangleFamily, perm: [usize; 3], swap: bool) -> [[usize; 4]; 3] {
    let j = &f.j;
    let term = |a: usize, b: usize, c: usize| {
        let [t, u] = f.transversals(c);
        let (t, u) = if swap { (u, t) } else { (t, u) };
        [j[a], j[b], t, u]
    };
    let [s0, s1, s2] = perm;
    [term(s0, s1, s2), term(s1, s2, s0), term(s2, s0, s1)]
}

/// The three brackets of the quadruple product for `q` permuted by `s`.
pub fn quadruple_brackets(q: [usize; 4], s: [usize; 4]) -> [[usize; 4]; 3] {
    let [a, b, c, d] = s.map(|i| q[i]);
    [[a, b, c, d], [a, d, b, c], [a, c, d, b]]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Coverage {
    pub checked: usize,
    pub total: usize,
}

impl Coverage {
    pub fn exhaustive(&self) -> bool {
        self.checked == self.total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppendixOptions {
    pub seed: u64,
    /// Configuration sets up to this size are checked exhaustively.
    pub exhaustive_limit: usize,
}

impl Default for AppendixOptions {
    fn default() -> Self {
        AppendixOptions {
            seed: 0,
            exhaustive_limit: 10_000,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct AppendixReport {
    pub p1: Coverage,
    pub p2: Coverage,
    pub p3: Coverage,
    pub a1: Coverage,
    pub a2: Coverage,
    pub failures: FailureLog,
}

fn select<X: Clone>(items: Vec<X>, opts: &AppendixOptions, salt: u64) -> (Vec<X>, Coverage) {
    let total = items.len();
    if total <= opts.exhaustive_limit {
        return (
            items,
            Coverage {
                checked: total,
                total,
            },
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut picked = index::sample(&mut rng, total, opts.exhaustive_limit).into_vec();
    picked.sort_unstable();
    let chosen = picked.into_iter().map(|i| items[i].clone()).collect();
    (
        chosen,
        Coverage {
            checked: opts.exhaustive_limit,
            total,
        },
    )
}

struct Evaluator<'a, 'm, T> {
    order: &'a CircuitOrder<'m>,
    p: &'a Presentation<T>,
}

impl<T: Scalar> Evaluator<'_, '_, T> {
    /// Reduced value of `sum factor * <d>`, or `None` if some bracket is
    /// undefined.
    fn value(&self, brackets: &[(i64, [usize; 4])]) -> Option<Vec<T>> {
        let v = bracket_sum(self.order, self.p, brackets).ok()?;
        Some(
            self.p
                .normal_form()
                .reduce(&v.to_dense(self.p.num_generators())),
        )
    }

    fn is_zero(&self, brackets: &[(i64, [usize; 4])]) -> bool {
        self.value(brackets)
            .is_some_and(|v| v.iter().all(|x| x.is_zero()))
    }
}

fn fmt_quad(q: [usize; 4]) -> String {
    format!("<{} {}|{} {}>", q[0], q[1], q[2], q[3])
}

/// Runs P1 to P3, A1 and A2 against the paren presentation `p` built on
/// `order`.
pub fn check_appendix<T: Scalar>(
    order: &CircuitOrder<'_>,
    p: &Presentation<T>,
    opts: &AppendixOptions,
) -> AppendixReport {
    let eval = Evaluator { order, p };
    let mut report = AppendixReport::default();
    let configs = g2_symbols(order);

    let p1_items: Vec<[usize; 4]> = configs.iter().copied().filter(|q| q[2] == q[3]).collect();
    let (items, cov) = select(p1_items, opts, 1);
    report.p1 = cov;
    for q in items {
        if !eval.is_zero(&[(1, q)]) {
            report.failures.record("P1".into(), fmt_quad(q));
        }
    }

    let (items, cov) = select(configs.clone(), opts, 2);
    report.p2 = cov;
    for &[a, b, c, d] in &items {
        if !eval.is_zero(&[(1, [a, b, c, d]), (-1, [c, d, a, b])]) {
            report.failures.record("P2".into(), fmt_quad([a, b, c, d]));
        }
    }
    let (items, cov) = select(configs.clone(), opts, 3);
    report.p3 = cov;
    for &[a, b, c, d] in &items {
        if !eval.is_zero(&[(1, [a, b, c, d]), (1, [a, b, d, c])]) {
            report.failures.record("P3".into(), fmt_quad([a, b, c, d]));
        }
    }

    let distinct: Vec<[usize; 4]> = configs
        .into_iter()
        .filter(|&[a, b, _, _]| a != b)
        .filter(|&[_, _, c, d]| c != d)
        .collect();
    let (items, cov) = select(distinct, opts, 4);
    report.a1 = cov;
    let perms = permutations4();
    for q in items {
        let base = eval.value(&quadruple_brackets(q, [0, 1, 2, 3]).map(|t| (1, t)));
        for &s in &perms {
            let v = eval.value(&quadruple_brackets(q, s).map(|t| (1, t)));
            if v.is_none() || v != base {
                report
                    .failures
                    .record("A1".into(), format!("{} under {s:?}", fmt_quad(q)));
            }
        }
    }

    let (items, cov) = select(triangle_families(order), opts, 5);
    report.a2 = cov;
    let syms = triangle_symmetries();
    for f in items {
        let base = eval.value(&triangle_brackets(&f, [0, 1, 2], false).map(|t| (1, t)));
        for &(perm, swap) in &syms {
            let v = eval.value(&triangle_brackets(&f, perm, swap).map(|t| (1, t)));
            if v.is_none() || v != base {
                report
                    .failures
                    .record("A2".into(), format!("{:?} under {perm:?} swap={swap}", f.j));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes() {
        assert_eq!(permutations4().len(), 24);
        assert_eq!(triangle_symmetries().len(), 12);
    }

    #[test]
    fn identity_symmetry_reproduces_relation() {
        let f = TriangleFamily {
            j: [0, 1, 2, 3, 4, 5, 6, 7, 8],
            line_sets: Default::default(),
            plane_set: Default::default(),
        };
        assert_eq!(
            triangle_brackets(&f, [0, 1, 2], false),
            [[0, 1, 5, 8], [1, 2, 3, 6], [2, 0, 4, 7]]
        );
        assert_eq!(
            triangle_brackets(&f, [0, 1, 2], true),
            [[0, 1, 8, 5], [1, 2, 6, 3], [2, 0, 7, 4]]
        );
    }

    #[test]
    fn quadruple_identity() {
        assert_eq!(
            quadruple_brackets([5, 6, 7, 8], [0, 1, 2, 3]),
            [[5, 6, 7, 8], [5, 8, 6, 7], [5, 7, 8, 6]]
        );
    }
}
