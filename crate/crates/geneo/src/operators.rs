//! A declarative algebra of candidate equivariant non-expansive operators.
//!
//! An [`OperatorSpec`] describes an operator `F` on circular functions. Every
//! constructor except [`OperatorSpec::Reflect`] is equivariant under the
//! cyclic rotation group and non-expansive in sup norm by construction;
//! `reflect` is shipped deliberately as a known negative so the validator has
//! a true counterexample in its standard library (it is non-expansive but not
//! rotation-equivariant).
//!
//! The two axioms are certified numerically by [`validate_geneo`]: seeded
//! random inputs, exhaustive quantification over the group for equivariance,
//! and random pairs for the expansiveness ratio. Certification reports, it
//! never proves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::function::{sup_distance, CircularFunction};
use crate::group::{act, GroupElement, TransformGroup};
use crate::rng::{random_function, SplitMix64};

/// Slack absorbed when checking weight-sum constraints at parse time.
pub const WEIGHT_SUM_SLACK: f64 = 1e-12;

/// Equivariance violations up to this bound count as a pass.
pub const EQUIVARIANCE_TOL: f64 = 1e-9;

/// Expansiveness ratios up to `1 + EXPANSIVENESS_TOL` count as a pass.
pub const EXPANSIVENESS_TOL: f64 = 1e-9;

/// One `(shift, weight)` term of a weighted shift sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftTerm {
    pub shift: i64,
    pub weight: f64,
}

/// One weighted member of a convex combination.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedPart {
    pub op: OperatorSpec,
    pub weight: f64,
}

/// Description of a candidate operator on circular functions.
///
/// Shifts are grid steps and are reduced modulo the sample count when the
/// operator is applied, so one description works for every N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OperatorSpec {
    /// `F(f) = f`.
    Identity,
    /// `F(f) = f + b` pointwise.
    ConstantOffset { b: f64 },
    /// `F(f) = f . r_s` (rotate the samples by `s` grid steps).
    GridRotation { s: i64 },
    /// `F(f) = f . q_0`. Non-expansive, but not equivariant under rotations.
    Reflect,
    /// `F(f)(i) = max over shifts s of f(i + s)`.
    TranslateMax { shifts: Vec<i64> },
    /// `F(f)(i) = min over shifts s of f(i + s)`.
    TranslateMin { shifts: Vec<i64> },
    /// `F(f)(i) = sum of w_k * f(i + s_k)`; requires `sum |w_k| <= 1`.
    WeightedShiftSum { terms: Vec<ShiftTerm> },
    /// Pointwise maximum of two operator results.
    PointwiseMax {
        left: Box<OperatorSpec>,
        right: Box<OperatorSpec>,
    },
    /// Left-to-right composition: the first listed operator is applied first.
    Compose { ops: Vec<OperatorSpec> },
    /// `F(f) = sum of w_k * F_k(f)` with nonnegative weights summing to 1.
    ConvexCombination { parts: Vec<WeightedPart> },
}

impl OperatorSpec {
    /// Checks the constructor constraints that make the operator well formed
    /// (and non-expansive where the constraint exists for that reason).
    /// Returns a human-readable description of the first violation.
    pub fn check_constraints(&self) -> std::result::Result<(), String> {
        match self {
            OperatorSpec::Identity | OperatorSpec::Reflect | OperatorSpec::GridRotation { .. } => {
                Ok(())
            }
            OperatorSpec::ConstantOffset { b } => {
                if b.is_finite() {
                    Ok(())
                } else {
                    Err(format!("constant_offset needs a finite b, got {b}"))
                }
            }
            OperatorSpec::TranslateMax { shifts } | OperatorSpec::TranslateMin { shifts } => {
                if shifts.is_empty() {
                    Err("shift set must be nonempty".to_string())
                } else {
                    Ok(())
                }
            }
            OperatorSpec::WeightedShiftSum { terms } => {
                let mut sum = 0.0;
                for t in terms {
                    if !t.weight.is_finite() {
                        return Err(format!("non-finite weight {}", t.weight));
                    }
                    sum += t.weight.abs();
                }
                if sum > 1.0 + WEIGHT_SUM_SLACK {
                    Err(format!(
                        "weighted_shift_sum needs sum |w| <= 1, got {sum}"
                    ))
                } else {
                    Ok(())
                }
            }
            OperatorSpec::PointwiseMax { left, right } => {
                left.check_constraints()?;
                right.check_constraints()
            }
            OperatorSpec::Compose { ops } => {
                if ops.is_empty() {
                    return Err("compose needs at least one operator".to_string());
                }
                ops.iter().try_for_each(OperatorSpec::check_constraints)
            }
            OperatorSpec::ConvexCombination { parts } => {
                let mut sum = 0.0;
                for p in parts {
                    if !p.weight.is_finite() || p.weight < 0.0 {
                        return Err(format!(
                            "convex_combination weights must be nonnegative, got {}",
                            p.weight
                        ));
                    }
                    sum += p.weight;
                    p.op.check_constraints()?;
                }
                if (sum - 1.0).abs() > WEIGHT_SUM_SLACK {
                    Err(format!(
                        "convex_combination weights must sum to 1, got {sum}"
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Canonical textual label used in reports.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::Identity => write!(f, "identity"),
            OperatorSpec::ConstantOffset { b } => write!(f, "constant_offset({b})"),
            OperatorSpec::GridRotation { s } => write!(f, "grid_rotation({s})"),
            OperatorSpec::Reflect => write!(f, "reflect"),
            OperatorSpec::TranslateMax { shifts } => {
                write!(f, "translate_max{{{}}}", join_i64(shifts))
            }
            OperatorSpec::TranslateMin { shifts } => {
                write!(f, "translate_min{{{}}}", join_i64(shifts))
            }
            OperatorSpec::WeightedShiftSum { terms } => {
                let body: Vec<String> = terms
                    .iter()
                    .map(|t| format!("({},{})", t.shift, t.weight))
                    .collect();
                write!(f, "weighted_shift_sum[{}]", body.join(","))
            }
            OperatorSpec::PointwiseMax { left, right } => {
                write!(f, "pointwise_max({left}, {right})")
            }
            OperatorSpec::Compose { ops } => {
                let body: Vec<String> = ops.iter().map(OperatorSpec::to_string).collect();
                write!(f, "compose({})", body.join(", "))
            }
            OperatorSpec::ConvexCombination { parts } => {
                let body: Vec<String> = parts
                    .iter()
                    .map(|p| format!("({},{})", p.op, p.weight))
                    .collect();
                write!(f, "convex_combination[{}]", body.join(","))
            }
        }
    }
}

fn join_i64(xs: &[i64]) -> String {
    xs.iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// An ordered finite family of operators. The order matters only for
/// reporting; the family pseudo-metric is a max over members. A family may
/// be empty.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorFamily {
    ops: Vec<OperatorSpec>,
    name: String,
}

impl OperatorFamily {
    /// Builds a family, checking each member's constructor constraints.
    /// Violations carry the index of the offending member.
    pub fn new(ops: Vec<OperatorSpec>, name: impl Into<String>) -> crate::Result<Self> {
        for (index, op) in ops.iter().enumerate() {
            op.check_constraints()
                .map_err(|message| crate::Error::ConstraintViolation { index, message })?;
        }
        Ok(Self {
            ops,
            name: name.into(),
        })
    }

    pub fn ops(&self) -> &[OperatorSpec] {
        &self.ops
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

/// Applies an operator to a function. The result always has the same sample
/// count as the input.
pub fn apply_operator(op: &OperatorSpec, phi: &CircularFunction) -> CircularFunction {
    let n = phi.len();
    match op {
        OperatorSpec::Identity => phi.clone(),
        OperatorSpec::ConstantOffset { b } => {
            CircularFunction::from_values_unchecked(phi.values().iter().map(|v| v + b).collect())
        }
        OperatorSpec::GridRotation { s } => {
            act(&GroupElement::rotation(*s, n), phi).expect("rotation built for this n")
        }
        OperatorSpec::Reflect => {
            act(&GroupElement::reflection(0, n), phi).expect("reflection built for this n")
        }
        OperatorSpec::TranslateMax { shifts } => CircularFunction::from_values_unchecked(
            (0..n)
                .map(|i| {
                    shifts
                        .iter()
                        .map(|s| phi.at(i as i64 + s))
                        .fold(f64::NEG_INFINITY, f64::max)
                })
                .collect(),
        ),
        OperatorSpec::TranslateMin { shifts } => CircularFunction::from_values_unchecked(
            (0..n)
                .map(|i| {
                    shifts
                        .iter()
                        .map(|s| phi.at(i as i64 + s))
                        .fold(f64::INFINITY, f64::min)
                })
                .collect(),
        ),
        OperatorSpec::WeightedShiftSum { terms } => CircularFunction::from_values_unchecked(
            (0..n)
                .map(|i| {
                    terms
                        .iter()
                        .map(|t| t.weight * phi.at(i as i64 + t.shift))
                        .sum()
                })
                .collect(),
        ),
        OperatorSpec::PointwiseMax { left, right } => {
            let a = apply_operator(left, phi);
            let b = apply_operator(right, phi);
            CircularFunction::from_values_unchecked(
                a.values()
                    .iter()
                    .zip(b.values())
                    .map(|(x, y)| x.max(*y))
                    .collect(),
            )
        }
        OperatorSpec::Compose { ops } => {
            let mut out = phi.clone();
            for inner in ops {
                out = apply_operator(inner, &out);
            }
            out
        }
        OperatorSpec::ConvexCombination { parts } => {
            let mut acc = vec![0.0; n];
            for p in parts {
                let contribution = apply_operator(&p.op, phi);
                for (slot, v) in acc.iter_mut().zip(contribution.values()) {
                    *slot += p.weight * v;
                }
            }
            CircularFunction::from_values_unchecked(acc)
        }
    }
}

/// A recorded equivariance counterexample: `F(f . g)` differs from `(F f) . g`.
#[derive(Debug, Clone)]
pub struct EquivarianceWitness {
    pub input: CircularFunction,
    pub element: GroupElement,
    pub violation: f64,
}

/// A recorded expansiveness counterexample: the sup-norm ratio exceeded 1.
#[derive(Debug, Clone)]
pub struct ExpansivenessWitness {
    pub first: CircularFunction,
    pub second: CircularFunction,
    pub ratio: f64,
}

/// Measured outcome of the two-axiom certification.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    /// Largest observed `|F(f . g)(x) - (F(f) . g)(x)|` over all trials,
    /// group elements and sample points.
    pub max_equivariance_violation: f64,
    /// Largest observed `|F(f1) - F(f2)| / |f1 - f2|` in sup norm; pairs with
    /// zero denominator are skipped.
    pub max_expansiveness_ratio: f64,
    pub trials: u32,
    pub seed: u64,
    /// Up to three counterexamples per axiom, in discovery order.
    pub equivariance_witnesses: Vec<EquivarianceWitness>,
    pub expansiveness_witnesses: Vec<ExpansivenessWitness>,
}

impl AxiomReport {
    /// Both axioms hold within tolerance.
    pub fn passes(&self) -> bool {
        self.max_equivariance_violation <= EQUIVARIANCE_TOL
            && self.max_expansiveness_ratio <= 1.0 + EXPANSIVENESS_TOL
    }
}

const MAX_WITNESSES: usize = 3;

/// Randomized certification of the two operator axioms against a group.
///
/// Each trial draws fresh functions from its own SplitMix64 stream derived
/// from `seed`, quantifies equivariance over every group element, and checks
/// the expansiveness ratio on one random pair. Deterministic given the seed;
/// failures are reported, never thrown.
pub fn validate_geneo(
    op: &OperatorSpec,
    group: &TransformGroup,
    trials: u32,
    seed: u64,
) -> AxiomReport {
    let n = group.n();
    let elements = group.elements();
    let mut report = AxiomReport {
        max_equivariance_violation: 0.0,
        max_expansiveness_ratio: 0.0,
        trials,
        seed,
        equivariance_witnesses: Vec::new(),
        expansiveness_witnesses: Vec::new(),
    };

    let mut seeder = SplitMix64::new(seed);
    let trial_seeds: Vec<u64> = (0..trials).map(|_| seeder.next_u64()).collect();

    for trial_seed in trial_seeds {
        let mut rng = SplitMix64::new(trial_seed);
        let phi = random_function(n, &mut rng, 1.0);
        let pair_a = random_function(n, &mut rng, 1.0);
        let pair_b = random_function(n, &mut rng, 1.0);

        let f_phi = apply_operator(op, &phi);
        for g in &elements {
            let lhs = apply_operator(op, &act(g, &phi).expect("group n matches"));
            let rhs = act(g, &f_phi).expect("group n matches");
            let violation = lhs
                .values()
                .iter()
                .zip(rhs.values())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            if violation > report.max_equivariance_violation {
                report.max_equivariance_violation = violation;
            }
            if violation > EQUIVARIANCE_TOL
                && report.equivariance_witnesses.len() < MAX_WITNESSES
            {
                report.equivariance_witnesses.push(EquivarianceWitness {
                    input: phi.clone(),
                    element: *g,
                    violation,
                });
            }
        }

        let denominator = sup_distance(&pair_a, &pair_b).expect("equal n by construction");
        if denominator > 0.0 {
            let numerator =
                sup_distance(&apply_operator(op, &pair_a), &apply_operator(op, &pair_b))
                    .expect("equal n by construction");
            let ratio = numerator / denominator;
            if ratio > report.max_expansiveness_ratio {
                report.max_expansiveness_ratio = ratio;
            }
            if ratio > 1.0 + EXPANSIVENESS_TOL
                && report.expansiveness_witnesses.len() < MAX_WITNESSES
            {
                report.expansiveness_witnesses.push(ExpansivenessWitness {
                    first: pair_a.clone(),
                    second: pair_b.clone(),
                    ratio,
                });
            }
        }
    }

    report
}
