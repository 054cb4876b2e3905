//! Exact frieze sequences: the points `P_t = (f_1(t), …, f_n(t))`.
//!
//! With an admissible labeling, `f_i(t+1)` depends on `f_j(t)` for arrows
//! `j -> i` and on `f_j(t+1)` for arrows `i -> j`; the latter have `j < i`,
//! so one sweep in increasing vertex order computes the next point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::quiver::{Quiver, QuiverError};
use crate::util::round_sig;

/// Default cap on decimal digits of any coordinate.
pub const DEFAULT_DIGIT_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("inexact division at vertex {vertex} computing step {t}")]
    InexactDivision { vertex: usize, t: usize },
    #[error("point has {got} coordinates, quiver has {n} vertices")]
    Dimension { got: usize, n: usize },
    #[error("coordinate {vertex} of the previous point is not positive")]
    NonPositive { vertex: usize },
    #[error("max coordinate decreased from t={} to t={t}", t - 1)]
    GrowthNotMonotone { t: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezePoint {
    pub t: usize,
    pub coords: Vec<BigInt>,
}

impl FriezePoint {
    pub fn ones(n: usize) -> Self {
        FriezePoint {
            t: 0,
            coords: vec![BigInt::one(); n],
        }
    }

    pub fn logs(&self) -> Vec<f64> {
        self.coords.iter().map(ln_big).collect()
    }
}

/// Arrow lists per vertex with multiplicities, prepared once per quiver.
struct Stepper {
    /// `incoming[i]`: `(j, k)` for `k` arrows `j -> i`.
    incoming: Vec<Vec<(usize, u32)>>,
    /// `outgoing[i]`: `(j, k)` for `k` arrows `i -> j`, all with `j < i`.
    outgoing: Vec<Vec<(usize, u32)>>,
}

impl Stepper {
    fn new(q: &Quiver) -> Result<Self, FriezeError> {
        q.check_admissible()?;
        let counts = q.arrow_counts();
        let n = q.n();
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        for (s, row) in counts.iter().enumerate() {
            for (t, &k) in row.iter().enumerate().filter(|(_, &k)| k > 0) {
                outgoing[s].push((t, k as u32));
                incoming[t].push((s, k as u32));
            }
        }
        Ok(Stepper { incoming, outgoing })
    }

    fn step(&self, prev: &FriezePoint) -> Result<FriezePoint, FriezeError> {
        let n = self.incoming.len();
        if prev.coords.len() != n {
            return Err(FriezeError::Dimension {
                got: prev.coords.len(),
                n,
            });
        }
        if let Some(v) = prev.coords.iter().position(|x| !x.is_positive()) {
            return Err(FriezeError::NonPositive { vertex: v + 1 });
        }
        let t = prev.t + 1;
        let mut next: Vec<BigInt> = Vec::with_capacity(n);
        for i in 0..n {
            let mut prod = BigInt::one();
            for &(j, k) in &self.incoming[i] {
                prod *= pow(&prev.coords[j], k);
            }
            for &(j, k) in &self.outgoing[i] {
                prod *= pow(&next[j], k);
            }
            prod += 1u32;
            let (q, r) = prod.div_rem(&prev.coords[i]);
            if !r.is_zero() {
                return Err(FriezeError::InexactDivision { vertex: i + 1, t });
            }
            next.push(q);
        }
        Ok(FriezePoint { t, coords: next })
    }
}

fn pow(x: &BigInt, k: u32) -> BigInt {
    if k == 1 {
        x.clone()
    } else {
        x.pow(k)
    }
}

/// One application of the frieze recursion. The quiver must be admissibly
/// labeled; a non-exact division is reported instead of rounded.
pub fn frieze_step(q: &Quiver, prev: &FriezePoint) -> Result<FriezePoint, FriezeError> {
    Stepper::new(q)?.step(prev)
}

/// Natural logarithm of a positive big integer from its bit length and top
/// 64 bits; relative accuracy is independent of magnitude.
pub fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "ln of a non-positive integer");
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits in u64") as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Decimal digit count estimated from the bit length (exact up to ±1).
pub fn approx_decimal_digits(x: &BigInt) -> usize {
    (x.bits() as f64 * std::f64::consts::LOG10_2).floor() as usize + 1
}

/// Points `P_0..=P_T` of a quiver's frieze with their logarithms.
#[derive(Debug, Clone)]
pub struct FriezeTrace {
    quiver: Quiver,
    points: Vec<FriezePoint>,
    logs: Vec<Vec<f64>>,
    truncated: bool,
    digit_cap: usize,
}

impl FriezeTrace {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn points(&self) -> &[FriezePoint] {
        &self.points
    }

    pub fn logs(&self) -> &[Vec<f64>] {
        &self.logs
    }

    /// Index of the last computed point.
    pub fn t_max(&self) -> usize {
        self.points.len() - 1
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether the digit cap stopped the computation before the requested horizon.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn digit_cap(&self) -> usize {
        self.digit_cap
    }

    pub fn point(&self, t: usize) -> &[BigInt] {
        &self.points[t].coords
    }

    /// `f_i(0), f_i(1), …` for one 0-based vertex.
    pub fn sequence(&self, vertex: usize) -> Vec<BigInt> {
        self.points.iter().map(|p| p.coords[vertex].clone()).collect()
    }

    pub fn sequence_ref(&self, vertex: usize) -> impl Iterator<Item = &BigInt> + '_ {
        self.points.iter().map(move |p| &p.coords[vertex])
    }

    /// Approximate digit count of the largest coordinate at each step.
    pub fn max_digits(&self) -> Vec<usize> {
        self.points
            .iter()
            .map(|p| p.coords.iter().map(approx_decimal_digits).max().unwrap_or(1))
            .collect()
    }

    /// Checks that `max_i f_i(t)` never decreases for `t >= 1`.
    pub fn check_monotone_growth(&self) -> Result<(), FriezeError> {
        let maxes: Vec<&BigInt> = self
            .points
            .iter()
            .map(|p| p.coords.iter().max().expect("nonempty point"))
            .collect();
        for t in 2..maxes.len() {
            if maxes[t] < maxes[t - 1] {
                return Err(FriezeError::GrowthNotMonotone { t });
            }
        }
        Ok(())
    }

    /// CSV with header `t,f_1,…,f_n` and exact decimal integers.
    pub fn to_csv(&self) -> String {
        let n = self.quiver.n();
        let mut out = String::from("t");
        for i in 1..=n {
            out.push_str(&format!(",f_{i}"));
        }
        out.push('\n');
        for p in &self.points {
            out.push_str(&p.t.to_string());
            for c in &p.coords {
                out.push(',');
                out.push_str(&c.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "quiver": self.quiver.to_text(),
            "n": self.quiver.n(),
            "t_max": self.t_max(),
            "truncated": self.truncated,
            "digit_cap": self.digit_cap,
            "points": self.points.iter().map(|p| json!({
                "t": p.t,
                "coords": p.coords.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "logs": self.logs.iter()
                .map(|l| l.iter().map(|&x| round_sig(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Computes `P_0..=P_{t_max}`, stopping early (and flagging truncation) as
/// soon as a coordinate would exceed `digit_cap` decimal digits. The point
/// that crosses the cap is not kept.
pub fn frieze_points(q: &Quiver, t_max: usize, digit_cap: usize) -> Result<FriezeTrace, FriezeError> {
    let stepper = Stepper::new(q)?;
    let mut points = vec![FriezePoint::ones(q.n())];
    let mut truncated = false;
    for _ in 0..t_max {
        let next = stepper.step(points.last().expect("nonempty"))?;
        if next.coords.iter().any(|c| approx_decimal_digits(c) > digit_cap) {
            truncated = true;
            break;
        }
        points.push(next);
    }
    let logs = points.iter().map(FriezePoint::logs).collect();
    Ok(FriezeTrace {
        quiver: q.clone(),
        points,
        logs,
        truncated,
        digit_cap,
    })
}

/// Smallest `p > 0` with `P_{t+p} = P_t` throughout the trace, accepted only
/// when the trace covers at least two full periods plus `n` extra steps.
pub fn detect_period(trace: &FriezeTrace) -> Option<usize> {
    let last = trace.t_max();
    let n = trace.quiver.n();
    let pts = &trace.points;
    (1..)
        .take_while(|&p| 2 * p + n <= last)
        .find(|&p| (0..=last - p).all(|t| pts[t + p].coords == pts[t].coords))
}
