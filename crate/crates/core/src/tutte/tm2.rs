//! The square-bracket presentation: generator `xi` and the symbols
//! `[a b|c d]`, relation families R1 to R7.

use super::configs::{g2_symbols, is_square_symbol, lines, triangle_families};
use super::order::CircuitOrder;
use crate::lattice::Presentation;
use crate::scalar::Scalar;
use crate::symbol::{GeneratorSymbol, RelationTag};

fn sq(idx: [usize; 4]) -> GeneratorSymbol {
    GeneratorSymbol::square(idx)
}

/// Builds the presentation; `fano_type` says whether the matroid has a
/// Fano or dual-Fano minor (relation R2).
pub fn build_tm2<T: Scalar>(order: &CircuitOrder<'_>, fano_type: bool) -> Presentation<T> {
    let symbols = g2_symbols(order);
    let mut labels = vec![GeneratorSymbol::Xi];
    labels.extend(symbols.iter().copied().map(sq));
    let mut p = Presentation::<T>::new(labels);
    let xi = GeneratorSymbol::Xi;

    p.add_symbolic_relation(&[(xi.clone(), 2)], RelationTag::new("R1", []));
    if fano_type {
        p.add_symbolic_relation(&[(xi.clone(), 1)], RelationTag::new("R2", []));
    }
    for &[a, b, c, d] in &symbols {
        if c == d {
            p.add_symbolic_relation(&[(sq([a, b, c, c]), 1)], RelationTag::new("R3", [a, b, c]));
        }
        // The swap is its own inverse; one relation per unordered pair.
        if (a, b) < (c, d) {
            p.add_symbolic_relation(
                &[(sq([a, b, c, d]), 1), (sq([c, d, a, b]), -1)],
                RelationTag::new("R4", [a, b, c, d]),
            );
        }
    }

    let valid = |q: [usize; 4]| is_square_symbol(order, q);
    for line in lines(order) {
        let cs = &line.circuits;
        for &i1 in cs {
            for &i2 in cs {
                for &i3 in cs {
                    for &i4 in cs {
                        let t1 = [i1, i2, i3, i4];
                        if valid(t1) {
                            let t2 = [i1, i4, i2, i3];
                            let t3 = [i1, i3, i4, i2];
                            if valid(t2) && valid(t3) {
                                p.add_symbolic_relation(
                                    &[(sq(t1), 1), (sq(t2), 1), (sq(t3), 1), (xi.clone(), -1)],
                                    RelationTag::new("R6", t1),
                                );
                            }
                        }
                        for &i5 in cs {
                            let (s1, s2, s3) =
                                ([i1, i2, i3, i4], [i1, i2, i4, i5], [i1, i2, i5, i3]);
                            if valid(s1) && valid(s2) && valid(s3) {
                                p.add_symbolic_relation(
                                    &[(sq(s1), 1), (sq(s2), 1), (sq(s3), 1)],
                                    RelationTag::new("R5", [i1, i2, i3, i4, i5]),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    for fam in triangle_families(order) {
        let j = fam.j;
        let terms = [
            [j[0], j[1], j[5], j[8]],
            [j[1], j[2], j[3], j[6]],
            [j[2], j[0], j[4], j[7]],
        ];
        if terms.iter().all(|&t| valid(t)) {
            p.add_symbolic_relation(&terms.map(|t| (sq(t), 1)), RelationTag::new("R7", j));
        }
    }
    p
}
