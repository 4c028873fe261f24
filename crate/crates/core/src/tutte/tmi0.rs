//! The small presentation: generator `eta` and the paren symbols
//! `(a b|c d)` with `a<b, c<d, a<c`, relation families S1 to S5.

use super::bracket::{bracket_normalize, SignedSymbol};
use super::configs::{line_quadruples, line_quintuples, q2_symbols, s5_families};
use super::order::CircuitOrder;
use crate::lattice::{Presentation, SparseVector};
use crate::scalar::Scalar;
use crate::symbol::{GeneratorSymbol, RelationTag};

/// Which version of the ten five-circuit equations to instantiate.
///
/// Each equation is the three-term relation `(xy|..)(xy|..)(xy|..)^-1 = 1`
/// for one fixed pair `xy`; in order the pairs are 12, 13, 14, 15, 23, 24,
/// 25, 34, 35, 45. `Uncorrected` keeps the commonly quoted sixth equation
/// `(13|24)(24|35)(15|23)^-1 = 1`, which breaks that pattern: together with
/// the fourth equation it forces `(15|34) = 1`. `Corrected` uses
/// `(13|24)(24|35)(15|24)^-1 = 1` and is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum S4Equations {
    Uncorrected,
    #[default]
    Corrected,
}

/// The ten equations as `(sign, [p, q, r, s])` over positions 0..5 of the
/// quintuple.
fn s4_table(variant: S4Equations) -> [[(i64, [usize; 4]); 3]; 10] {
    let sixth_last = match variant {
        S4Equations::Uncorrected => [0, 4, 1, 2],
        S4Equations::Corrected => [0, 4, 1, 3],
    };
    [
        [(1, [0, 1, 2, 3]), (1, [0, 1, 3, 4]), (-1, [0, 1, 2, 4])],
        [(1, [0, 2, 1, 3]), (1, [0, 2, 3, 4]), (-1, [0, 2, 1, 4])],
        [(1, [0, 3, 1, 2]), (1, [0, 3, 2, 4]), (-1, [0, 3, 1, 4])],
        [(1, [0, 4, 1, 2]), (1, [0, 4, 2, 3]), (-1, [0, 4, 1, 3])],
        [(1, [0, 3, 1, 2]), (1, [1, 2, 3, 4]), (-1, [0, 4, 1, 2])],
        [(1, [0, 2, 1, 3]), (1, [1, 3, 2, 4]), (-1, sixth_last)],
        [(1, [0, 2, 1, 4]), (1, [1, 4, 2, 3]), (-1, [0, 3, 1, 4])],
        [(1, [0, 1, 2, 3]), (1, [1, 4, 2, 3]), (-1, [0, 4, 2, 3])],
        [(1, [0, 1, 2, 4]), (1, [1, 3, 2, 4]), (-1, [0, 3, 2, 4])],
        [(1, [0, 1, 3, 4]), (1, [1, 2, 3, 4]), (-1, [0, 2, 3, 4])],
    ]
}

/// Adds the value of a bracket to a term list.
pub(crate) fn push_signed(terms: &mut Vec<(GeneratorSymbol, i64)>, s: SignedSymbol, factor: i64) {
    if let SignedSymbol::Term { sign, symbol } = s {
        terms.push((symbol, factor * i64::from(sign)));
    }
}

/// Group element `sum factor_k * <d_k>` in the small presentation.
pub fn bracket_sum<T: Scalar>(
    order: &CircuitOrder<'_>,
    p: &Presentation<T>,
    brackets: &[(i64, [usize; 4])],
) -> Result<SparseVector<T>, crate::error::TutteError> {
    let mut terms = Vec::new();
    for &(factor, d) in brackets {
        push_signed(&mut terms, bracket_normalize(order, d)?, factor);
    }
    Ok(p.vector(&terms))
}

pub fn build_tmi0<T: Scalar>(
    order: &CircuitOrder<'_>,
    fano_type: bool,
    s4: S4Equations,
) -> Presentation<T> {
    let mut labels = vec![GeneratorSymbol::Eta];
    labels.extend(q2_symbols(order).into_iter().map(GeneratorSymbol::paren));
    let mut p = Presentation::<T>::new(labels);
    let eta = GeneratorSymbol::Eta;
    let pa = GeneratorSymbol::paren;

    p.add_symbolic_relation(&[(eta.clone(), 2)], RelationTag::new("S1", []));
    if fano_type {
        p.add_symbolic_relation(&[(eta.clone(), 1)], RelationTag::new("S2", []));
    }
    for [a, b, c, d] in line_quadruples(order) {
        p.add_symbolic_relation(
            &[
                (pa([a, b, c, d]), 1),
                (pa([a, d, b, c]), 1),
                (pa([a, c, b, d]), -1),
                (eta.clone(), -1),
            ],
            RelationTag::new("S3", [a, b, c, d]),
        );
    }
    let table = s4_table(s4);
    for j in line_quintuples(order) {
        for (k, eq) in table.iter().enumerate() {
            let terms: Vec<(GeneratorSymbol, i64)> = eq
                .iter()
                .map(|&(sign, pos)| (pa(pos.map(|x| j[x])), sign))
                .collect();
            let mut args = j.to_vec();
            args.push(k + 1);
            p.add_symbolic_relation(&terms, RelationTag::new("S4", args));
        }
    }
    for fam in s5_families(order) {
        let j = fam.j;
        let v = bracket_sum(
            order,
            &p,
            &[
                (1, [j[0], j[1], j[5], j[8]]),
                (1, [j[1], j[2], j[3], j[6]]),
                (1, [j[2], j[0], j[4], j[7]]),
            ],
        )
        .expect("triangle family brackets lie on lines");
        p.add_relation(v, RelationTag::new("S5", j));
    }
    p
}
