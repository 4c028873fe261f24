//! The extended Tutte group on circuit and cocircuit incidences, with the
//! degree map whose kernel is the inner Tutte group.

use crate::element_set::ElementSet;
use crate::lattice::{self, SparseVector};
use crate::matroid::Matroid;
use crate::scalar::Scalar;
use crate::symbol::{GeneratorSymbol, RelationTag};

/// Presentation of the extended group together with the degree map and
/// the generators of the Tutte subgroup.
#[derive(Debug, Clone)]
pub struct ExtendedPresentation<T> {
    pub presentation: lattice::Presentation<T>,
    /// One row per coordinate of `Z^E x Z^circuits x Z^cocircuits`.
    pub lambda: Vec<SparseVector<T>>,
    /// `eps`, `C(x) - C(y)` and `D(x) - D(y)` for consecutive elements.
    pub tutte_subgroup: Vec<SparseVector<T>>,
    pub circuits: Vec<ElementSet>,
    pub cocircuits: Vec<ElementSet>,
}

pub fn build_extended<T: Scalar>(m: &Matroid) -> ExtendedPresentation<T> {
    let circuits = m.circuits().to_vec();
    let cocircuits = m.cocircuits();
    let mut labels = vec![GeneratorSymbol::Epsilon];
    for (c, set) in circuits.iter().enumerate() {
        labels.extend(set.iter().map(|element| GeneratorSymbol::CircuitElem {
            circuit: c,
            element,
        }));
    }
    for (d, set) in cocircuits.iter().enumerate() {
        labels.extend(set.iter().map(|element| GeneratorSymbol::CocircuitElem {
            cocircuit: d,
            element,
        }));
    }
    let mut p = lattice::Presentation::<T>::new(labels);
    let eps = GeneratorSymbol::Epsilon;
    p.add_symbolic_relation(&[(eps.clone(), 2)], RelationTag::new("eps2", []));
    for (c, cset) in circuits.iter().enumerate() {
        for (d, dset) in cocircuits.iter().enumerate() {
            let meet = cset.intersection(*dset);
            if meet.len() != 2 {
                continue;
            }
            let x = meet.first().expect("two elements");
            let y = meet.last().expect("two elements");
            let ce = |element| GeneratorSymbol::CircuitElem {
                circuit: c,
                element,
            };
            let de = |element| GeneratorSymbol::CocircuitElem {
                cocircuit: d,
                element,
            };
            p.add_symbolic_relation(
                &[
                    (ce(x), 1),
                    (de(x), 1),
                    (ce(y), -1),
                    (de(y), -1),
                    (eps.clone(), -1),
                ],
                RelationTag::new("CD", [c, d, x, y]),
            );
        }
    }

    let n = m.ground_size();
    let nc = circuits.len();
    let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); n + nc + cocircuits.len()];
    for (g, label) in p.labels().iter().enumerate() {
        match *label {
            GeneratorSymbol::CircuitElem { circuit, element } => {
                rows[element].push((g, T::one()));
                rows[n + circuit].push((g, T::one()));
            }
            GeneratorSymbol::CocircuitElem { cocircuit, element } => {
                rows[element].push((g, -T::one()));
                rows[n + nc + cocircuit].push((g, T::one()));
            }
            _ => {}
        }
    }
    let lambda = rows.into_iter().map(SparseVector::from_pairs).collect();

    let mut tutte_subgroup = vec![p.vector(&[(eps, 1)])];
    for (c, set) in circuits.iter().enumerate() {
        let els = set.to_vec();
        for w in els.windows(2) {
            tutte_subgroup.push(p.vector(&[
                (
                    GeneratorSymbol::CircuitElem {
                        circuit: c,
                        element: w[0],
                    },
                    1,
                ),
                (
                    GeneratorSymbol::CircuitElem {
                        circuit: c,
                        element: w[1],
                    },
                    -1,
                ),
            ]));
        }
    }
    for (d, set) in cocircuits.iter().enumerate() {
        let els = set.to_vec();
        for w in els.windows(2) {
            tutte_subgroup.push(p.vector(&[
                (
                    GeneratorSymbol::CocircuitElem {
                        cocircuit: d,
                        element: w[0],
                    },
                    1,
                ),
                (
                    GeneratorSymbol::CocircuitElem {
                        cocircuit: d,
                        element: w[1],
                    },
                    -1,
                ),
            ]));
        }
    }

    ExtendedPresentation {
        presentation: p,
        lambda,
        tutte_subgroup,
        circuits,
        cocircuits,
    }
}

/// The inner Tutte group as the kernel of the degree map.
pub fn kernel_method<T: Scalar>(m: &Matroid) -> lattice::Presentation<T> {
    let ext = build_extended::<T>(m);
    lattice::kernel_presentation(&ext.presentation, &ext.lambda)
        .expect("the degree map kills every defining relation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn u24_generator_count() {
        let ext = build_extended::<i64>(&catalog::uniform(2, 4));
        assert_eq!(ext.presentation.num_generators(), 25);
        assert_eq!(ext.lambda.len(), 4 + 4 + 4);
    }

    #[test]
    fn lambda_kills_relations() {
        for name in ["U_2(4)", "M(K4)", "F7"] {
            let ext = build_extended::<i64>(&catalog::get(name).unwrap());
            let n = ext.presentation.num_generators();
            for r in ext.presentation.relations() {
                let dense = r.to_dense(n);
                assert!(ext.lambda.iter().all(|row| row.dot(&dense) == 0), "{name}");
            }
        }
    }

    #[test]
    fn u24_kernel() {
        let k = kernel_method::<i64>(&catalog::uniform(2, 4));
        let inv = k.invariants();
        assert_eq!((inv.free_rank, inv.torsion), (2, vec![2]));
    }
}
