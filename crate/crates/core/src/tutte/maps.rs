//! The generator maps between the square-bracket and paren presentations,
//! and the executable check that they induce mutually inverse
//! isomorphisms.

use super::bracket::bracket_normalize;
use super::order::CircuitOrder;
use super::tmi0::{push_signed, S4Equations};
use super::{has_fano_type_minor, FailureLog};
use crate::error::TutteError;
use crate::lattice::{GroupInvariants, Presentation, SparseVector};
use crate::scalar::Scalar;
use crate::symbol::{GeneratorSymbol, QuadKind};

/// Images of generators: `phi[g]` is the image of square-presentation
/// generator `g` in the paren presentation, `psi[h]` the image of paren
/// generator `h` in the square presentation.
#[derive(Debug, Clone)]
pub struct GeneratorMaps<T> {
    pub phi: Vec<SparseVector<T>>,
    pub psi: Vec<SparseVector<T>>,
}

/// Applies a map given by generator images to an element.
pub fn apply<T: Scalar>(images: &[SparseVector<T>], v: &SparseVector<T>) -> SparseVector<T> {
    let mut terms = Vec::new();
    for (g, c) in v.entries() {
        terms.extend(
            images[*g]
                .entries()
                .iter()
                .map(|(i, x)| (*i, x.clone() * c.clone())),
        );
    }
    SparseVector::from_pairs(terms)
}

pub fn phi_psi_maps<T: Scalar>(
    order: &CircuitOrder<'_>,
    tm2: &Presentation<T>,
    tmi0: &Presentation<T>,
) -> Result<GeneratorMaps<T>, TutteError> {
    let mut phi = Vec::with_capacity(tm2.num_generators());
    for label in tm2.labels() {
        let v = match label {
            GeneratorSymbol::Xi => tmi0.vector(&[(GeneratorSymbol::Eta, 1)]),
            GeneratorSymbol::Quad {
                idx,
                kind: QuadKind::Square,
            } => {
                let mut terms = Vec::new();
                push_signed(&mut terms, bracket_normalize(order, *idx)?, 1);
                tmi0.vector(&terms)
            }
            other => {
                return Err(TutteError::InvalidConfiguration(format!(
                    "{other} is not a square-presentation generator"
                )))
            }
        };
        phi.push(v);
    }
    let mut psi = Vec::with_capacity(tmi0.num_generators());
    for label in tmi0.labels() {
        let target = match label {
            GeneratorSymbol::Eta => GeneratorSymbol::Xi,
            GeneratorSymbol::Quad {
                idx,
                kind: QuadKind::Paren,
            } => GeneratorSymbol::square(*idx),
            other => {
                return Err(TutteError::InvalidConfiguration(format!(
                    "{other} is not a paren-presentation generator"
                )))
            }
        };
        if tm2.index_of(&target).is_none() {
            return Err(TutteError::InvalidConfiguration(format!(
                "{label} has no square counterpart"
            )));
        }
        psi.push(tm2.vector(&[(target, 1)]));
    }
    Ok(GeneratorMaps { phi, psi })
}

/// Outcome of a successful isomorphism check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismReport<T> {
    pub tm2_generators: usize,
    pub tmi0_generators: usize,
    /// Relations of the square presentation whose images were checked.
    pub tm2_relations: usize,
    /// Relations of the paren presentation whose images were checked.
    pub tmi0_relations: usize,
    pub invariants: GroupInvariants<T>,
}

/// Maps a relation family of one presentation to the name of the check
/// that its image vanishes.
fn check_family(tag: &str) -> String {
    match tag.strip_prefix('R') {
        Some(k) => format!("VR{k}"),
        None => format!("VS{}", tag.trim_start_matches('S')),
    }
}

/// Checks, for the given presentations and maps, that every relation maps
/// to the identity, that `phi` after `psi` is the identity on paren
/// generators, that `psi` after `phi` is the identity in the square group,
/// and that the invariants agree.
pub fn check_maps<T: Scalar>(
    tm2: &Presentation<T>,
    tmi0: &Presentation<T>,
    maps: &GeneratorMaps<T>,
) -> FailureLog {
    let mut log = FailureLog::default();
    for (r, tag) in tm2.relations().iter().zip(tm2.tags()) {
        if !tmi0.is_identity(&apply(&maps.phi, r)) {
            log.record(check_family(tag.family), tag.to_string());
        }
    }
    for (s, tag) in tmi0.relations().iter().zip(tmi0.tags()) {
        if !tm2.is_identity(&apply(&maps.psi, s)) {
            log.record(check_family(tag.family), tag.to_string());
        }
    }
    for (h, label) in tmi0.labels().iter().enumerate() {
        let unit = SparseVector::from_i64_pairs([(h, 1)]);
        if apply(&maps.phi, &apply(&maps.psi, &unit)) != unit {
            log.record("phi-psi".to_string(), label.to_string());
        }
    }
    for (g, label) in tm2.labels().iter().enumerate() {
        let unit = SparseVector::from_i64_pairs([(g, 1)]);
        let back = apply(&maps.psi, &apply(&maps.phi, &unit));
        if !tm2.is_identity(&back.sub_scaled(&T::one(), &unit)) {
            log.record("psi-phi".to_string(), label.to_string());
        }
    }
    let (a, b) = (tm2.invariants(), tmi0.invariants());
    if a != b {
        log.record("invariants".to_string(), format!("{a} vs {b}"));
    }
    log
}

/// Builds both presentations for `order` and runs [`check_maps`].
pub fn verify_isomorphism_with<T: Scalar>(
    order: &CircuitOrder<'_>,
    s4: S4Equations,
) -> Result<IsomorphismReport<T>, TutteError> {
    let fano_type = has_fano_type_minor(order.matroid());
    let tm2 = super::tm2::build_tm2::<T>(order, fano_type);
    let tmi0 = super::tmi0::build_tmi0::<T>(order, fano_type, s4);
    let maps = phi_psi_maps(order, &tm2, &tmi0)?;
    check_maps(&tm2, &tmi0, &maps).into_result()?;
    Ok(IsomorphismReport {
        tm2_generators: tm2.num_generators(),
        tmi0_generators: tmi0.num_generators(),
        tm2_relations: tm2.relations().len(),
        tmi0_relations: tmi0.relations().len(),
        invariants: tmi0.invariants(),
    })
}

/// [`verify_isomorphism_with`] for the canonical order and corrected
/// five-circuit equations.
pub fn verify_isomorphism<T: Scalar>(
    m: &crate::matroid::Matroid,
) -> Result<IsomorphismReport<T>, TutteError> {
    verify_isomorphism_with(&CircuitOrder::canonical(m), S4Equations::Corrected)
}
