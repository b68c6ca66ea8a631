//! The three comparison quantities and the inequality chain between them.
//!
//! For two functions `f1, f2` and a finite group `G`:
//!
//! * the sup-norm distance ignores the group entirely;
//! * the natural pseudo-distance `d_G` is the minimum over `g` in `G` of
//!   `|f1 - f2 . g|` in sup norm, the ground-truth dissimilarity modulo the
//!   invariance group;
//! * the family pseudo-metric `D` is the maximum over a family of operators
//!   of the matching distance between the diagrams of `F(f1)` and `F(f2)`.
//!
//! When every family member is equivariant and non-expansive, the chain
//! `D <= d_G <= sup` holds; [`verify_inequalities`] measures all three and
//! reports whether the chain and the per-operator stability bound survive at
//! a given tolerance. Groups and families are finite here, so the defining
//! infimum and supremum are realized as an exact min and max.

use crate::error::{Error, Result};
use crate::function::{sup_distance, CircularFunction};
use crate::group::{act, GroupElement, TransformGroup};
use crate::matching::bottleneck;
use crate::operators::{apply_operator, validate_geneo, AxiomReport, OperatorFamily};
use crate::persistence::sublevel_diagram;

/// Measured quantities and verdicts for one function pair.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub sup_norm: f64,
    pub d_g: f64,
    /// First group element achieving `d_g` in enumeration order.
    pub argmin_g: GroupElement,
    pub d_family_match: f64,
    /// Label of the first operator achieving the family maximum, if any.
    pub argmax_op: Option<String>,
    pub per_op_distances: Vec<(String, f64)>,
    /// Axiom certification recorded per family member.
    pub axiom_reports: Vec<(String, AxiomReport)>,
    /// `d_family_match <= d_g + tolerance` and `d_g <= sup_norm + tolerance`.
    pub chain_ok: bool,
    /// Per operator: matching distance of the transformed diagrams is at most
    /// the sup distance of the transformed functions, plus tolerance.
    pub stability_ok: bool,
    pub tolerance: f64,
    pub seed: u64,
}

fn check_sizes(f1: &CircularFunction, f2: &CircularFunction) -> Result<()> {
    if f1.len() != f2.len() {
        return Err(Error::SizeMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    Ok(())
}

/// Natural pseudo-distance: exact minimum over the group of
/// `sup_distance(f1, f2 . g)`, with the first minimizer in enumeration order.
pub fn natural_pseudo_distance(
    f1: &CircularFunction,
    f2: &CircularFunction,
    group: &TransformGroup,
) -> Result<(f64, GroupElement)> {
    check_sizes(f1, f2)?;
    if group.n() != f1.len() {
        return Err(Error::SizeMismatch {
            left: group.n(),
            right: f1.len(),
        });
    }
    let mut best = f64::INFINITY;
    let mut argmin = GroupElement::identity(group.n());
    for g in group.elements() {
        let d = sup_distance(f1, &act(&g, f2)?)?;
        if d < best {
            best = d;
            argmin = g;
        }
    }
    Ok((best, argmin))
}

/// Family pseudo-metric: maximum over the family of the matching distance
/// between the diagrams of the transformed functions. The empty family gives
/// 0 by convention (supremum over an empty set of nonnegative quantities).
pub fn family_matching_distance(
    f1: &CircularFunction,
    f2: &CircularFunction,
    family: &OperatorFamily,
) -> Result<(f64, Option<String>)> {
    let (value, label, _) = family_distances(f1, f2, family)?;
    Ok((value, label))
}

/// Per-operator measurements shared by the family distance and the verifier.
struct OperatorRow {
    label: String,
    match_distance: f64,
    transformed_sup: f64,
}

/// Shared evaluation returning the max, its label, and every per-operator
/// distance alongside the transformed functions' sup distances.
fn family_distances(
    f1: &CircularFunction,
    f2: &CircularFunction,
    family: &OperatorFamily,
) -> Result<(f64, Option<String>, Vec<OperatorRow>)> {
    check_sizes(f1, f2)?;
    let mut best = 0.0f64;
    let mut label = None;
    let mut rows = Vec::with_capacity(family.len());
    for op in family.ops() {
        let t1 = apply_operator(op, f1);
        let t2 = apply_operator(op, f2);
        let match_distance = bottleneck(&sublevel_diagram(&t1), &sublevel_diagram(&t2))?.distance;
        let transformed_sup = sup_distance(&t1, &t2)?;
        let op_label = op.label();
        if label.is_none() || match_distance > best {
            best = match_distance;
            label = Some(op_label.clone());
        }
        rows.push(OperatorRow {
            label: op_label,
            match_distance,
            transformed_sup,
        });
    }
    if rows.is_empty() {
        return Ok((0.0, None, rows));
    }
    Ok((best, label, rows))
}

/// Measures the full chain for one pair: sup norm, natural pseudo-distance,
/// family matching distance, per-operator stability, and a fresh axiom
/// certification of every family member (`trials` seeded trials).
pub fn verify_inequalities(
    f1: &CircularFunction,
    f2: &CircularFunction,
    group: &TransformGroup,
    family: &OperatorFamily,
    tolerance: f64,
    trials: u32,
    seed: u64,
) -> Result<VerificationReport> {
    let sup_norm = sup_distance(f1, f2)?;
    let (d_g, argmin_g) = natural_pseudo_distance(f1, f2, group)?;
    let (d_family_match, argmax_op, rows) = family_distances(f1, f2, family)?;

    let stability_ok = rows
        .iter()
        .all(|row| row.match_distance <= row.transformed_sup + tolerance);
    let per_op_distances = rows
        .into_iter()
        .map(|row| (row.label, row.match_distance))
        .collect();

    let axiom_reports = family
        .ops()
        .iter()
        .map(|op| (op.label(), validate_geneo(op, group, trials, seed)))
        .collect();

    let chain_ok = d_family_match <= d_g + tolerance && d_g <= sup_norm + tolerance;

    Ok(VerificationReport {
        sup_norm,
        d_g,
        argmin_g,
        d_family_match,
        argmax_op,
        per_op_distances,
        axiom_reports,
        chain_ok,
        stability_ok,
        tolerance,
        seed,
    })
}
