//! Growth profiles and the full run report.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coxeter::CoxeterData;
use crate::frieze::{detect_period, frieze_points, FriezeError, FriezeTrace};
use crate::quiver::{Diagram, Permutation, Quiver, ReprType};
use crate::recurrence::{
    e_required_t_max, e_step, min_annihilator, subsample, verify_type_a, verify_type_d,
    verify_type_e, RecurrenceError,
};
use crate::util::{round_sig, round_vec};
use crate::variety::{estimate_dimension, DimensionReport, VarietyError};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const WILD_T_MAX: usize = 7;
pub const TAME_T_MAX: usize = 60;
pub const FINITE_T_MAX: usize = 50;
pub const DEFAULT_MAX_ORDER: usize = 12;

/// Coxeter number of a Dynkin diagram.
pub fn coxeter_number(d: &Diagram) -> Option<usize> {
    match *d {
        Diagram::A(n) => Some(n + 1),
        Diagram::D(n) => Some(2 * n - 2),
        Diagram::E(6) => Some(12),
        Diagram::E(7) => Some(18),
        Diagram::E(8) => Some(30),
        _ => None,
    }
}

/// Horizon long enough for every certificate of the given type.
pub fn default_t_max(repr: Option<&ReprType>, n: usize) -> usize {
    match repr {
        Some(ReprType::Finite(d)) => {
            let h = coxeter_number(d).unwrap_or(n + 1);
            FINITE_T_MAX.max(2 * (h + 2) + n)
        }
        Some(ReprType::Tame(Diagram::AffineE(n))) => {
            e_required_t_max(*n).expect("Ẽ has 7, 8 or 9 vertices")
        }
        Some(ReprType::Tame(Diagram::AffineD(n))) => TAME_T_MAX.max(6 * (n - 3) + 1),
        Some(ReprType::Tame(Diagram::AffineA { p, q })) => {
            TAME_T_MAX.max(2 * num_integer::lcm(*p, *q) + 1)
        }
        Some(ReprType::Tame(_)) => TAME_T_MAX,
        Some(ReprType::Wild) => WILD_T_MAX,
        None => FINITE_T_MAX,
    }
}

/// `L(t) = (ln f_i(t))_i`, scaled by `ρ^{-t}` in the wild case.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthProfile {
    pub wild: bool,
    pub rho: f64,
    pub vn: Option<Vec<f64>>,
    pub logs: Vec<Vec<f64>>,
    pub normalized: Option<Vec<Vec<f64>>>,
    /// `⟨u, vₙ⟩` for `u = L(T)/ρ^T`, the least-squares multiple of `vₙ`.
    pub eta: Option<f64>,
    /// Angle in radians between `L(T)/ρ^T` and `vₙ`.
    pub angle: Option<f64>,
    pub warning: Option<String>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn growth_profile(trace: &FriezeTrace, cox: &CoxeterData, wild: bool) -> GrowthProfile {
    let logs = trace.logs().to_vec();
    let rho = cox.rho();
    let vn = cox.spectral.vn.clone();
    if !wild || vn.is_none() {
        return GrowthProfile {
            wild,
            rho,
            vn,
            logs,
            normalized: None,
            eta: None,
            angle: None,
            warning: Some("quiver is not wild; only logarithms are reported".to_string()),
        };
    }
    let v = vn.clone().expect("checked above");
    let normalized: Vec<Vec<f64>> = logs
        .iter()
        .enumerate()
        .map(|(t, l)| {
            let scale = rho.powi(t as i32);
            l.iter().map(|x| x / scale).collect()
        })
        .collect();
    let u = normalized.last().expect("trace has P_0");
    let eta = dot(u, &v);
    let norm_u = dot(u, u).sqrt();
    let angle = if norm_u > 0.0 {
        Some((eta / norm_u).clamp(-1.0, 1.0).acos())
    } else {
        None
    };
    GrowthProfile {
        wild,
        rho,
        vn,
        logs,
        normalized: Some(normalized),
        eta: Some(eta),
        angle,
        warning: None,
    }
}

impl GrowthProfile {
    pub fn to_json(&self) -> Value {
        let rows = |m: &Vec<Vec<f64>>| m.iter().map(|r| round_vec(r)).collect::<Vec<_>>();
        json!({
            "wild": self.wild,
            "rho": round_sig(self.rho),
            "vn": self.vn.as_deref().map(round_vec),
            "L": rows(&self.logs),
            "L_over_rho_t": self.normalized.as_ref().map(rows),
            "eta": self.eta.map(round_sig),
            "angle_to_vn": self.angle.map(round_sig),
            "warning": self.warning,
        })
    }
}

/// One comparison `f_i(t+1) >= 2^{d}` with `d` the largest coordinate of
/// `dim τ^{-t} P(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthBound {
    pub vertex: usize,
    pub t: usize,
    pub exponent: BigInt,
    pub holds: bool,
}

/// Checks the exponential lower bound from dimension vectors at every vertex
/// and every `t` with both the orbit and the trace available.
pub fn growth_bound_checks(trace: &FriezeTrace, cox: &CoxeterData) -> Vec<GrowthBound> {
    let n = trace.quiver().n();
    let last = trace.t_max();
    let mut out = Vec::new();
    for i in 0..n {
        for (t, dim) in cox.dim_vectors(i, last.saturating_sub(1)).iter().enumerate() {
            if t + 1 > last {
                break;
            }
            let d = dim.iter().max().expect("n >= 1").clone();
            let f = &trace.point(t + 1)[i];
            let holds = u64::try_from(&d).is_ok_and(|d| f.bits() > d);
            out.push(GrowthBound {
                vertex: i,
                t,
                exponent: d,
                holds,
            });
        }
    }
    out
}

/// Per-type stride for the per-vertex annihilators in the recurrence report.
pub fn annihilator_step(repr: Option<&ReprType>) -> usize {
    match repr {
        Some(ReprType::Tame(Diagram::AffineA { p, q })) => num_integer::lcm(*p, *q),
        Some(ReprType::Tame(Diagram::AffineD(n))) => {
            if n % 2 == 1 {
                n - 3
            } else {
                2 * (n - 3)
            }
        }
        Some(ReprType::Tame(Diagram::AffineE(n))) => e_step(*n).unwrap_or(1),
        _ => 1,
    }
}

/// Recurrence report dispatched on the classification.
pub fn recurrence_report(
    trace: &FriezeTrace,
    repr: Option<&ReprType>,
    max_order: usize,
) -> Result<Value, RecurrenceError> {
    let theorem = match repr {
        Some(ReprType::Tame(Diagram::AffineA { .. })) => verify_type_a(trace)?.to_json(),
        Some(ReprType::Tame(Diagram::AffineD(_))) => verify_type_d(trace)?.to_json(),
        Some(ReprType::Tame(Diagram::AffineE(_))) => verify_type_e(trace)?.to_json(),
        Some(ReprType::Finite(_)) => json!({ "period": detect_period(trace) }),
        _ => Value::Null,
    };
    let step = annihilator_step(repr);
    let mut per_vertex = Vec::new();
    for i in 0..trace.quiver().n() {
        let sub = subsample(&trace.sequence(i), step, 0);
        let order = max_order.min(sub.len().saturating_sub(1) / 2);
        let entry = match min_annihilator(&sub, order)? {
            Some(mut a) => {
                a.step = step;
                a.vertex = Some(i);
                a.to_json()
            }
            None => json!({
                "vertex": i + 1,
                "step": step,
                "residue": 0,
                "order": Value::Null,
                "searched_up_to": order,
            }),
        };
        per_vertex.push(entry);
    }
    Ok(json!({ "theorem": theorem, "annihilators": per_vertex }))
}

/// Options for a full run.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub t_max: Option<usize>,
    pub digit_cap: usize,
    pub max_order: usize,
    pub degree_bound: usize,
    pub modulus_bound: usize,
    pub holdout: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            t_max: None,
            digit_cap: crate::frieze::DEFAULT_DIGIT_CAP,
            max_order: DEFAULT_MAX_ORDER,
            degree_bound: crate::variety::DEFAULT_DEGREE_BOUND,
            modulus_bound: crate::variety::DEFAULT_MODULUS_BOUND,
            holdout: crate::variety::DEFAULT_HOLDOUT,
        }
    }
}

/// Everything computed for one quiver.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub input: Quiver,
    pub quiver: Quiver,
    pub permutation: Permutation,
    pub classification: Option<ReprType>,
    pub coxeter: CoxeterData,
    pub trace: FriezeTrace,
    pub recurrence: Result<Value, RecurrenceError>,
    pub dimension: Result<DimensionReport, VarietyError>,
    pub growth: GrowthProfile,
}

impl RunReport {
    pub fn run(input: &Quiver, opts: &RunOptions) -> Result<Self, FriezeError> {
        let (quiver, permutation) = input.admissible_relabel()?;
        let classification = quiver.classify().ok();
        let coxeter = CoxeterData::compute(&quiver).map_err(|e| match e {
            crate::coxeter::CoxeterError::Quiver(q) => FriezeError::Quiver(q),
            other => unreachable!("admissible quiver: {other}"),
        })?;
        let t_max = opts
            .t_max
            .unwrap_or_else(|| default_t_max(classification.as_ref(), quiver.n()));
        let trace = frieze_points(&quiver, t_max, opts.digit_cap)?;
        let recurrence = recurrence_report(&trace, classification.as_ref(), opts.max_order);
        let dimension =
            estimate_dimension(&trace, opts.degree_bound, opts.modulus_bound, opts.holdout);
        let wild = classification.as_ref().is_some_and(ReprType::is_wild);
        let growth = growth_profile(&trace, &coxeter, wild);
        Ok(RunReport {
            input: input.clone(),
            quiver,
            permutation,
            classification,
            coxeter,
            trace,
            recurrence,
            dimension,
            growth,
        })
    }

    /// Graph classification and spectral radius agree on wildness.
    pub fn agreement(&self) -> Option<bool> {
        self.classification
            .as_ref()
            .map(|c| c.is_wild() == self.coxeter.spectral.exceeds_one())
    }

    pub fn to_json(&self) -> Value {
        let err = |e: &dyn std::fmt::Display| json!({ "error": e.to_string() });
        json!({
            "version": VERSION,
            "input": self.input.to_text(),
            "quiver": self.quiver.to_text(),
            "relabeling": self.permutation.to_labels(),
            "classification": self.classification.as_ref().map(ToString::to_string),
            "agreement": self.agreement(),
            "coxeter": self.coxeter.to_json(),
            "trace": {
                "t_max": self.trace.t_max(),
                "truncated": self.trace.truncated(),
                "digit_cap": self.trace.digit_cap(),
                "max_digits": self.trace.max_digits(),
            },
            "recurrence": match &self.recurrence {
                Ok(v) => v.clone(),
                Err(e) => err(e),
            },
            "dimension": match &self.dimension {
                Ok(d) => d.to_json(),
                Err(e) => err(e),
            },
            "growth": self.growth.wild.then(|| self.growth.to_json()),
        })
    }
}
