//! Presentations of the inner Tutte group of a matroid.
//!
//! Three routes lead to the same group: the kernel of the degree map on the
//! extended Tutte group, the square-bracket presentation on ordered circuit
//! quadruples, and the paren presentation on unordered line quadruples.

pub mod appendix;
pub mod bracket;
pub mod configs;
pub mod extended;
pub mod maps;
pub mod order;
pub mod tm2;
pub mod tmi0;

use std::fmt;
use std::str::FromStr;

pub use bracket::{bracket_normalize, SignedSymbol};
pub use configs::{
    big_g_count, g2_symbols, g_count, line_quadruples, lines, q2_symbols, s5_families,
    triangle_families, Line, TriangleFamily,
};
pub use extended::{build_extended, ExtendedPresentation};
pub use maps::{phi_psi_maps, verify_isomorphism, verify_isomorphism_with, GeneratorMaps};
pub use order::CircuitOrder;
pub use tm2::build_tm2;
pub use tmi0::{build_tmi0, S4Equations};

use crate::error::TutteError;
use crate::lattice::{self, GroupInvariants};
use crate::matroid::{has_dual_fano_minor, has_fano_minor, Matroid};
use crate::scalar::Scalar;

/// Whether `m` has a Fano or dual-Fano minor.
pub fn has_fano_type_minor(m: &Matroid) -> bool {
    has_fano_minor(m) || has_dual_fano_minor(m)
}

/// How to compute the inner Tutte group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Kernel,
    Tm2,
    Tmi0,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Kernel, Method::Tm2, Method::Tmi0];

    pub fn name(self) -> &'static str {
        match self {
            Method::Kernel => "kernel",
            Method::Tm2 => "tm2",
            Method::Tmi0 => "tmi0",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Presentation of the inner Tutte group produced by `method`.
pub fn inner_presentation<T: Scalar>(m: &Matroid, method: Method) -> lattice::Presentation<T> {
    let order = CircuitOrder::canonical(m);
    match method {
        Method::Kernel => extended::kernel_method(m),
        Method::Tm2 => build_tm2(&order, has_fano_type_minor(m)),
        Method::Tmi0 => build_tmi0(&order, has_fano_type_minor(m), S4Equations::Corrected),
    }
}

pub fn inner_invariants<T: Scalar>(m: &Matroid, method: Method) -> GroupInvariants<T> {
    inner_presentation::<T>(m, method).invariants()
}

/// Invariants of the Tutte subgroup of the extended group.
pub fn tutte_group_invariants<T: Scalar>(m: &Matroid) -> GroupInvariants<T> {
    let ext = build_extended::<T>(m);
    lattice::subgroup_invariants(&ext.presentation, &ext.tutte_subgroup)
        .expect("subgroup generators have the presentation's length")
}

/// Failing instances grouped by check family.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FailureLog {
    by_family: Vec<(String, usize)>,
    first: Option<String>,
    total: usize,
}

impl FailureLog {
    pub fn record(&mut self, family: String, instance: String) {
        if self.first.is_none() {
            self.first = Some(format!("{family}: {instance}"));
        }
        self.total += 1;
        match self.by_family.iter_mut().find(|(f, _)| *f == family) {
            Some((_, n)) => *n += 1,
            None => self.by_family.push((family, 1)),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn by_family(&self) -> &[(String, usize)] {
        &self.by_family
    }

    pub fn merge(&mut self, other: FailureLog) {
        if self.first.is_none() {
            self.first = other.first;
        }
        self.total += other.total;
        for (family, n) in other.by_family {
            match self.by_family.iter_mut().find(|(f, _)| *f == family) {
                Some((_, k)) => *k += n,
                None => self.by_family.push((family, n)),
            }
        }
    }

    pub fn into_result(self) -> Result<(), TutteError> {
        match self.first {
            None => Ok(()),
            Some(first) => Err(TutteError::VerificationFailure {
                first,
                total: self.total,
                by_family: self.by_family,
            }),
        }
    }
}
