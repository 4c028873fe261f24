//! The named matroids of the generator-count comparison table.
//!
//! Whirl, Q6 and P6 come from relaxing triangles of M(K4) one at a time;
//! F7- relaxes one line of the Fano plane. R6 and P7 are given by their
//! three-point lines (rank 3, every other triple is a basis).

use crate::element_set::{k_subsets, ElementSet};
use crate::error::InputError;
use crate::matroid::Matroid;

/// Catalog keys, in table order.
pub const NAMES: [&str; 14] = [
    "U_2(4)", "U_2(5)", "U_3(5)", "M(K4)", "W3", "Q6", "P6", "U_3(6)", "R6", "F7", "F7*", "F7-",
    "(F7-)*", "P7",
];

/// Lines of the Fano plane as the difference set `{0,1,3}` mod 7.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 3],
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 0],
    [5, 6, 1],
    [6, 0, 2],
];

/// Lines of P7, read off the ternary representation with columns
/// `e1, e2, e3, (-1,1,1), (1,1,0), (1,0,1), (0,1,1)`.
pub const P7_LINES: [[usize; 3]; 5] = [[0, 1, 4], [0, 2, 5], [1, 2, 6], [0, 3, 6], [3, 4, 5]];

/// The two disjoint lines of R6.
pub const R6_LINES: [[usize; 3]; 2] = [[0, 1, 2], [3, 4, 5]];

pub fn uniform(rank: usize, n: usize) -> Matroid {
    Matroid::from_bases(n, k_subsets(n, rank).collect()).expect("uniform matroids are valid")
}

/// Rank-3 matroid whose only dependent triples are `lines`.
pub fn rank3_from_lines(n: usize, lines: &[[usize; 3]]) -> Matroid {
    let lines: Vec<ElementSet> = lines
        .iter()
        .map(|l| ElementSet::from_indices(l.iter().copied()))
        .collect();
    let bases = k_subsets(n, 3).filter(|b| !lines.contains(b)).collect();
    Matroid::from_bases(n, bases).expect("line configuration must be a matroid")
}

/// Cycle matroid of a graph given as an edge list.
pub fn graphic(num_vertices: usize, edges: &[(usize, usize)]) -> Matroid {
    let n = edges.len();
    let acyclic = |s: ElementSet| {
        let mut parent: Vec<usize> = (0..num_vertices).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        s.iter().all(|e| {
            let (u, v) = edges[e];
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            parent[a] = b;
            a != b
        })
    };
    let forest_size = (0..=n)
        .rev()
        .find(|&k| k_subsets(n, k).any(&acyclic))
        .unwrap_or(0);
    let bases = k_subsets(n, forest_size).filter(|&s| acyclic(s)).collect();
    Matroid::from_bases(n, bases).expect("graphic matroids are valid")
}

pub fn complete_graph_k4() -> Matroid {
    graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn fano() -> Matroid {
    rank3_from_lines(7, &FANO_LINES)
}

/// Relaxes the first (lexicographically) three-element circuit.
fn relax_first_triangle(m: &Matroid) -> Matroid {
    let tri = *m
        .circuits()
        .iter()
        .find(|c| c.len() == 3)
        .expect("matroid has a triangle to relax");
    m.relax(tri)
        .expect("triangles of these matroids are circuit-hyperplanes")
}

pub fn whirl3() -> Matroid {
    relax_first_triangle(&complete_graph_k4())
}

pub fn q6() -> Matroid {
    relax_first_triangle(&whirl3())
}

pub fn p6() -> Matroid {
    relax_first_triangle(&q6())
}

pub fn fano_minus() -> Matroid {
    relax_first_triangle(&fano())
}

/// Looks up a catalog matroid by its table key.
pub fn get(name: &str) -> Result<Matroid, InputError> {
    let m = match name {
        "U_2(4)" => uniform(2, 4),
        "U_2(5)" => uniform(2, 5),
        "U_3(5)" => uniform(3, 5),
        "U_3(6)" => uniform(3, 6),
        "M(K4)" => complete_graph_k4(),
        "W3" => whirl3(),
        "Q6" => q6(),
        "P6" => p6(),
        "R6" => rank3_from_lines(6, &R6_LINES),
        "F7" => fano(),
        "F7*" => fano().dual(),
        "F7-" => fano_minus(),
        "(F7-)*" => fano_minus().dual(),
        "P7" => rank3_from_lines(7, &P7_LINES),
        _ => return Err(InputError::UnknownName(name.to_string())),
    };
    Ok(m)
}
