//! Linear recurrences of frieze sequences.
//!
//! Minimal annihilators come from exact Hankel kernels. The type-specific
//! checks derive the step constants from the data and then confirm the
//! recurrence on every available window.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::frieze::FriezeTrace;
use crate::linalg::{integer_kernel, poly_mul, primitive};
use crate::quiver::{Diagram, QuiverError, ReprType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("insufficient data: need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("horizon too short: need t_max >= {required}, got {got}")]
    HorizonTooShort { required: usize, got: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("quiver is {found}, expected {expected}")]
    WrongType { expected: &'static str, found: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// Integer polynomial `c_0 + c_1 x + … + c_k x^k` with
/// `Σ_j c_j a_{t+j} = 0` on the target subsequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    /// Low-to-high, primitive, positive leading coefficient.
    pub coeffs: Vec<BigInt>,
    pub order: usize,
    pub step: usize,
    pub residue: usize,
    pub vertex: Option<usize>,
}

impl Annihilator {
    fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = primitive(coeffs);
        if coeffs.last().is_some_and(Signed::is_negative) {
            coeffs = coeffs.into_iter().map(|c| -c).collect();
        }
        Annihilator {
            order: coeffs.len() - 1,
            coeffs,
            step: 1,
            residue: 0,
            vertex: None,
        }
    }

    pub fn annihilates(&self, seq: &[BigInt]) -> bool {
        annihilates(&self.coeffs, seq)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertex": self.vertex.map(|v| v + 1),
            "step": self.step,
            "residue": self.residue,
            "order": self.order,
            "coeffs": self.coeffs.iter().map(BigInt::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Whether `Σ_j coeffs_j a_{t+j} = 0` for every window that fits.
pub fn annihilates(coeffs: &[BigInt], seq: &[BigInt]) -> bool {
    count_annihilated_windows(coeffs, seq).is_some()
}

/// Number of windows checked, or `None` at the first failing window.
pub fn count_annihilated_windows(coeffs: &[BigInt], seq: &[BigInt]) -> Option<usize> {
    let k = coeffs.len().saturating_sub(1);
    if seq.len() <= k {
        return Some(0);
    }
    for w in seq.windows(k + 1) {
        let s: BigInt = coeffs
            .iter()
            .zip(w)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, a)| c * a)
            .sum();
        if !s.is_zero() {
            return None;
        }
    }
    Some(seq.len() - k)
}

fn hankel(seq: &[BigInt], k: usize) -> Vec<Vec<BigInt>> {
    seq.windows(k + 1).map(<[BigInt]>::to_vec).collect()
}

/// Least-order annihilator with order at most `max_order`.
///
/// Candidates are found from the kernel of the Hankel matrix on the first
/// `2·max_order + 4` terms and then confirmed on every window of `seq`; a
/// candidate that fails the full check falls back to the full Hankel kernel.
pub fn min_annihilator(seq: &[BigInt], max_order: usize) -> Result<Option<Annihilator>, RecurrenceError> {
    let needed = 2 * max_order + 1;
    if seq.len() < needed {
        return Err(RecurrenceError::InsufficientData {
            needed,
            got: seq.len(),
        });
    }
    if seq.iter().all(Zero::is_zero) {
        return Ok(Some(Annihilator::from_coeffs(vec![BigInt::one()])));
    }
    let prefix = &seq[..seq.len().min(2 * max_order + 4)];
    for k in 1..=max_order {
        let basis = integer_kernel(&hankel(prefix, k), k + 1);
        if basis.is_empty() {
            continue;
        }
        if let Some(v) = basis.into_iter().find(|v| annihilates(v, seq)) {
            return Ok(Some(Annihilator::from_coeffs(v)));
        }
        if prefix.len() < seq.len() {
            let full = integer_kernel(&hankel(seq, k), k + 1);
            if let Some(v) = full.into_iter().find(|v| annihilates(v, seq)) {
                return Ok(Some(Annihilator::from_coeffs(v)));
            }
        }
    }
    Ok(None)
}

/// Elements at indices `residue, residue + step, …`.
pub fn subsample<T: Clone>(seq: &[T], step: usize, residue: usize) -> Vec<T> {
    assert!(step > 0 && residue < step, "need 0 <= residue < step");
    seq.iter().skip(residue).step_by(step).cloned().collect()
}

/// The integer `C` with `f_i(t+m) = C f_i(t) - f_i(t-m)` for every listed
/// vertex and every `t` in range, if it exists. Needs at least `2m + 2` points.
pub fn derive_step_constant(trace: &FriezeTrace, vertices: &[usize], step: usize) -> Option<BigInt> {
    let pts = trace.points();
    if step == 0 || pts.len() < 2 * step + 2 || vertices.is_empty() {
        return None;
    }
    let mut constant: Option<BigInt> = None;
    for t in step..pts.len() - step {
        for &i in vertices {
            let num = &pts[t + step].coords[i] + &pts[t - step].coords[i];
            let (q, r) = num.div_rem(&pts[t].coords[i]);
            if !r.is_zero() {
                return None;
            }
            match &constant {
                None => constant = Some(q),
                Some(c) if *c != q => return None,
                _ => {}
            }
        }
    }
    constant
}

/// The integer `A` with `f(t+3s) = A f(t+2s) - A f(t+s) + f(t)` for every
/// listed vertex and every `t` in range, if it exists.
pub fn derive_order3_constant(trace: &FriezeTrace, vertices: &[usize], step: usize) -> Option<BigInt> {
    let pts = trace.points();
    if step == 0 || pts.len() < 3 * step + 2 || vertices.is_empty() {
        return None;
    }
    let mut constant: Option<BigInt> = None;
    for t in 0..pts.len() - 3 * step {
        for &i in vertices {
            let f = |d: usize| &pts[t + d * step].coords[i];
            let num = f(3) - f(0);
            let den = f(2) - f(1);
            if den.is_zero() {
                if !num.is_zero() {
                    return None;
                }
                continue;
            }
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return None;
            }
            match &constant {
                None => constant = Some(q),
                Some(c) if *c != q => return None,
                _ => {}
            }
        }
    }
    constant
}

/// Chebyshev table `C_0 = 2, C_1 = c1, C_j = c1·C_{j-1} - C_{j-2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceletConstants {
    pub c1: BigInt,
    pub table: Vec<BigInt>,
}

pub fn chebyshev_table(c1: &BigInt, j_max: usize) -> BraceletConstants {
    assert!(j_max >= 1);
    let mut table = vec![BigInt::from(2), c1.clone()];
    for j in 2..=j_max {
        let next = c1 * &table[j - 1] - &table[j - 2];
        table.push(next);
    }
    BraceletConstants {
        c1: c1.clone(),
        table,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeAReport {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub constant: Option<BigInt>,
    /// Number of `(vertex, t)` instances checked.
    pub checked: usize,
    pub all_hold: bool,
}

impl TypeAReport {
    pub fn to_json(&self) -> Value {
        json!({
            "type": format!("Ã({},{})", self.p, self.q),
            "m": self.m,
            "C": self.constant.as_ref().map(BigInt::to_string),
            "checked": self.checked,
            "all_hold": self.all_hold,
        })
    }
}

fn tame_diagram(trace: &FriezeTrace) -> Result<Diagram, RecurrenceError> {
    match trace.quiver().classify()? {
        ReprType::Tame(d) => Ok(d),
        other => Err(RecurrenceError::WrongType {
            expected: "tame",
            found: other.to_string(),
        }),
    }
}

/// `f_i(t+m) = C f_i(t) - f_i(t-m)` with `m = lcm(p, q)` on an Ã(p,q) trace.
pub fn verify_type_a(trace: &FriezeTrace) -> Result<TypeAReport, RecurrenceError> {
    let (p, q) = match tame_diagram(trace)? {
        Diagram::AffineA { p, q } => (p, q),
        d => {
            return Err(RecurrenceError::WrongType {
                expected: "Ã",
                found: d.to_string(),
            })
        }
    };
    let m = p.lcm(&q);
    let n = trace.quiver().n();
    let required = 2 * m + 1;
    if trace.t_max() < required {
        return Err(RecurrenceError::HorizonTooShort {
            required,
            got: trace.t_max(),
        });
    }
    let all: Vec<usize> = (0..n).collect();
    let constant = derive_step_constant(trace, &all, m);
    let mut checked = 0;
    let mut all_hold = constant.is_some();
    if let Some(c) = &constant {
        let pts = trace.points();
        for t in m..pts.len() - m {
            for i in 0..n {
                checked += 1;
                if pts[t + m].coords[i] != c * &pts[t].coords[i] - &pts[t - m].coords[i] {
                    all_hold = false;
                }
            }
        }
    }
    Ok(TypeAReport {
        p,
        q,
        m,
        constant,
        checked,
        all_hold,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDReport {
    pub n: usize,
    pub leaves: Vec<usize>,
    pub non_leaves: Vec<usize>,
    /// Leaf constant at step `n-3` (odd `n` only).
    pub c1: Option<BigInt>,
    /// Leaf constant at step `2(n-3)`.
    pub c2: Option<BigInt>,
    /// `p` required for the non-leaf order-3 recurrence: 1 for odd `n`, 2 for even.
    pub p_required: usize,
    /// Non-leaf `C_{2p}` derived from the order-3 recurrence, for `p = 1, 2`.
    pub c_2p: [Option<BigInt>; 2],
    pub chebyshev_c2: Option<bool>,
    pub chebyshev_c4: Option<bool>,
    pub non_leaf_c2_matches_leaf: Option<bool>,
    pub all_hold: bool,
}

impl TypeDReport {
    pub fn to_json(&self) -> Value {
        let s = |x: &Option<BigInt>| x.as_ref().map(BigInt::to_string);
        json!({
            "type": format!("D̃_{}", self.n - 1),
            "n": self.n,
            "leaves": self.leaves.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "non_leaves": self.non_leaves.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "C1": s(&self.c1),
            "C2": s(&self.c2),
            "p_required": self.p_required,
            "non_leaf_C2": s(&self.c_2p[0]),
            "non_leaf_C4": s(&self.c_2p[1]),
            "chebyshev_C2_eq_C1sq_minus_2": self.chebyshev_c2,
            "chebyshev_C4_eq_C2sq_minus_2": self.chebyshev_c4,
            "non_leaf_C2_matches_leaf_C2": self.non_leaf_c2_matches_leaf,
            "all_hold": self.all_hold,
        })
    }
}

/// Leaf and non-leaf recurrences on a D̃ trace with `n >= 5` vertices.
///
/// Leaves: order 2 at step `2(n-3)` for every `n`, and at step `n-3` for odd
/// `n`. Non-leaves: order 3 at step `p(n-3)` with constant `C_{2p} + 1`.
pub fn verify_type_d(trace: &FriezeTrace) -> Result<TypeDReport, RecurrenceError> {
    let n = match tame_diagram(trace)? {
        Diagram::AffineD(n) => n,
        d => {
            return Err(RecurrenceError::WrongType {
                expected: "D̃",
                found: d.to_string(),
            })
        }
    };
    let s = n - 3;
    let p_required = if n % 2 == 1 { 1 } else { 2 };
    let required = 3 * p_required * s + 1;
    if trace.t_max() < required.max(4 * s + 1) {
        return Err(RecurrenceError::HorizonTooShort {
            required: required.max(4 * s + 1),
            got: trace.t_max(),
        });
    }
    let q = trace.quiver();
    let leaves = q.leaves();
    let non_leaves: Vec<usize> = (0..n).filter(|v| !leaves.contains(v)).collect();

    let c1 = (n % 2 == 1)
        .then(|| derive_step_constant(trace, &leaves, s))
        .flatten();
    let c2 = derive_step_constant(trace, &leaves, 2 * s);
    let derive_2p = |p: usize| {
        derive_order3_constant(trace, &non_leaves, p * s).map(|a| a - BigInt::one())
    };
    let c_2p = [derive_2p(1), derive_2p(2)];

    let sq_minus_2 = |c: &BigInt| c * c - BigInt::from(2);
    let chebyshev_c2 = match (&c1, &c2) {
        (Some(a), Some(b)) => Some(sq_minus_2(a) == *b),
        _ => None,
    };
    let c2_any = c2.clone().or_else(|| c_2p[0].clone());
    let chebyshev_c4 = match (&c2_any, &c_2p[1]) {
        (Some(a), Some(b)) => Some(sq_minus_2(a) == *b),
        _ => None,
    };
    let non_leaf_c2_matches_leaf = match (&c2, &c_2p[0]) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let all_hold = c2.is_some()
        && (n % 2 == 0 || c1.is_some())
        && c_2p[p_required - 1].is_some()
        && chebyshev_c2 != Some(false)
        && chebyshev_c4 != Some(false)
        && non_leaf_c2_matches_leaf != Some(false);
    Ok(TypeDReport {
        n,
        leaves,
        non_leaves,
        c1,
        c2,
        p_required,
        c_2p,
        chebyshev_c2,
        chebyshev_c4,
        non_leaf_c2_matches_leaf,
        all_hold,
    })
}

/// `(x - 1) ∏_{w=1}^{6} (x² - t_w x + 1)`, where `t_w = ρ^w + ρ^{-w}` for a
/// root `ρ` of `x² - cN x + 1`. Low-to-high, degree 13.
pub fn build_e_annihilator(c_n: &BigInt) -> Result<Vec<BigInt>, RecurrenceError> {
    if *c_n <= BigInt::from(2) {
        return Err(RecurrenceError::PreconditionViolated(format!(
            "constant must exceed 2, got {c_n}"
        )));
    }
    let t = chebyshev_table(c_n, 6).table;
    let mut poly = vec![-BigInt::one(), BigInt::one()];
    for tw in &t[1..] {
        poly = poly_mul(&poly, &[BigInt::one(), -tw, BigInt::one()]);
    }
    Ok(poly)
}

/// Subsampling stride for Ẽ with `n` vertices.
pub fn e_step(n: usize) -> Option<usize> {
    match n {
        7 => Some(6),
        8 => Some(12),
        9 => Some(30),
        _ => None,
    }
}

/// Degree bound of the annihilators of the subsampled Ẽ sequences.
pub fn e_degree_bound(n: usize) -> Option<usize> {
    match n {
        7 => Some(12),
        8 => Some(29),
        9 => Some(169),
        _ => None,
    }
}

/// Horizon giving every residue class at least `d_n + 13` windows of the
/// degree-13 annihilator.
pub fn e_required_t_max(n: usize) -> Option<usize> {
    Some(e_step(n)? * (e_degree_bound(n)? + 26) - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeEReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub c_n: Option<BigInt>,
    /// Vertices whose residue-0 subsequence has annihilator `x² - cN x + 1`.
    pub order2_vertices: Vec<usize>,
    pub annihilator: Option<Vec<BigInt>>,
    /// Fewest windows checked over all `(vertex, residue)` pairs.
    pub min_windows: usize,
    /// `(vertex, residue)` pairs where the annihilator failed.
    pub failures: Vec<(usize, usize)>,
    pub all_hold: bool,
}

impl TypeEReport {
    pub fn to_json(&self) -> Value {
        json!({
            "type": format!("Ẽ_{}", self.n - 1),
            "m": self.m,
            "d": self.d,
            "C": self.c_n.as_ref().map(BigInt::to_string),
            "order2_vertices": self.order2_vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "annihilator": self.annihilator.as_ref()
                .map(|a| a.iter().map(BigInt::to_string).collect::<Vec<_>>()),
            "min_windows": self.min_windows,
            "failures": self.failures.iter().map(|&(v, r)| (v + 1, r)).collect::<Vec<_>>(),
            "all_hold": self.all_hold,
        })
    }
}

/// Derives `cN` from an order-2 subsequence and checks the degree-13
/// annihilator on every `(vertex, residue)` subsequence.
pub fn verify_type_e(trace: &FriezeTrace) -> Result<TypeEReport, RecurrenceError> {
    let n = match tame_diagram(trace)? {
        Diagram::AffineE(n) => n,
        d => {
            return Err(RecurrenceError::WrongType {
                expected: "Ẽ",
                found: d.to_string(),
            })
        }
    };
    let m = e_step(n).expect("Ẽ has 7, 8 or 9 vertices");
    let d = e_degree_bound(n).expect("Ẽ has 7, 8 or 9 vertices");
    let required = e_required_t_max(n).expect("Ẽ has 7, 8 or 9 vertices");
    if trace.t_max() < required {
        return Err(RecurrenceError::HorizonTooShort {
            required,
            got: trace.t_max(),
        });
    }

    let seqs: Vec<Vec<BigInt>> = (0..n).map(|i| trace.sequence(i)).collect();
    let mut c_n: Option<BigInt> = None;
    let mut order2_vertices = Vec::new();
    for (i, seq) in seqs.iter().enumerate() {
        let sub = subsample(seq, m, 0);
        let Some(ann) = min_annihilator(&sub, 2)? else {
            continue;
        };
        let c = &ann.coeffs;
        if ann.order == 2 && c[0].is_one() && c[2].is_one() && -&c[1] > BigInt::from(2) {
            let value = -&c[1];
            match &c_n {
                None => c_n = Some(value),
                Some(prev) if *prev != value => {
                    return Err(RecurrenceError::PreconditionViolated(format!(
                        "inconsistent order-2 constants {prev} and {value}"
                    )))
                }
                _ => {}
            }
            order2_vertices.push(i);
        }
    }

    let Some(c) = c_n.clone() else {
        return Ok(TypeEReport {
            n,
            m,
            d,
            c_n: None,
            order2_vertices,
            annihilator: None,
            min_windows: 0,
            failures: Vec::new(),
            all_hold: false,
        });
    };
    let poly = build_e_annihilator(&c)?;
    let mut min_windows = usize::MAX;
    let mut failures = Vec::new();
    for (i, seq) in seqs.iter().enumerate() {
        for r in 0..m {
            let sub = subsample(seq, m, r);
            match count_annihilated_windows(&poly, &sub) {
                Some(w) => min_windows = min_windows.min(w),
                None => failures.push((i, r)),
            }
        }
    }
    if min_windows == usize::MAX {
        min_windows = 0;
    }
    let all_hold = failures.is_empty() && min_windows >= d + 13;
    Ok(TypeEReport {
        n,
        m,
        d,
        c_n,
        order2_vertices,
        annihilator: Some(poly),
        min_windows,
        failures,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::{frieze_points, DEFAULT_DIGIT_CAP};
    use crate::quiver::parse_quiver;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn trace(text: &str, t_max: usize) -> FriezeTrace {
        let q = parse_quiver(text).unwrap().admissible_relabel().unwrap().0;
        frieze_points(&q, t_max, DEFAULT_DIGIT_CAP).unwrap()
    }

    #[test]
    fn kronecker_first_coordinate() {
        let tr = trace("n=2; 2->1; 2->1", 10);
        let a = min_annihilator(&tr.sequence(0), 3).unwrap().unwrap();
        assert_eq!(a.coeffs, ints(&[1, -7, 1]));
        assert_eq!(a.order, 2);
    }

    #[test]
    fn trivial_sequences() {
        let a = min_annihilator(&ints(&[5, 5, 5, 5, 5]), 2).unwrap().unwrap();
        assert_eq!(a.coeffs, ints(&[-1, 1]));
        let a = min_annihilator(&ints(&[1, 2, 4, 8, 16]), 2).unwrap().unwrap();
        assert_eq!(a.coeffs, ints(&[-2, 1]));
        let a = min_annihilator(&ints(&[0, 0, 0]), 1).unwrap().unwrap();
        assert_eq!(a.coeffs, ints(&[1]));
    }

    #[test]
    fn insufficient_data() {
        assert_eq!(
            min_annihilator(&ints(&[1, 2, 3]), 2),
            Err(RecurrenceError::InsufficientData { needed: 5, got: 3 })
        );
    }

    #[test]
    fn no_annihilator_within_order() {
        // 1, 2, 4, 8, 16 followed by 31 (the circle-division numbers): order 5.
        let seq = ints(&[1, 2, 4, 8, 16, 31, 57, 99, 163, 256, 386]);
        assert_eq!(min_annihilator(&seq, 2).unwrap(), None);
        let a = min_annihilator(&seq, 5).unwrap().unwrap();
        // (x - 1)^5
        assert_eq!(a.coeffs, ints(&[-1, 5, -10, 10, -5, 1]));
    }

    #[test]
    fn affine_a21_subsequence() {
        let tr = trace("n=3; 2->1; 3->1; 3->2", 20);
        let sub = subsample(&tr.sequence(0), 2, 0);
        assert_eq!(sub[..3], ints(&[1, 11, 571]));
        let a = min_annihilator(&sub, 3).unwrap().unwrap();
        assert_eq!(a.coeffs, ints(&[1, -52, 1]));
    }

    #[test]
    fn subsample_cases() {
        let a: Vec<i32> = (0..6).collect();
        assert_eq!(subsample(&a, 2, 1), vec![1, 3, 5]);
        assert_eq!(subsample(&a, 1, 0), a);
    }

    #[test]
    fn step_constants() {
        let tr = trace("n=2; 2->1; 2->1", 10);
        assert_eq!(derive_step_constant(&tr, &[0, 1], 1), Some(BigInt::from(7)));
        let tr = trace("n=3; 2->1; 3->1; 3->2", 20);
        assert_eq!(derive_step_constant(&tr, &[0, 1, 2], 2), Some(BigInt::from(52)));
        // Wrong stride: no constant.
        assert_eq!(derive_step_constant(&tr, &[0, 1, 2], 1), None);
        let wild = trace("n=3; 2->1; 3->1; 3->1; 3->2", 5);
        assert_eq!(derive_step_constant(&wild, &[0, 1, 2], 1), None);
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_table(&BigInt::from(7), 2).table, ints(&[2, 7, 47]));
        assert_eq!(chebyshev_table(&BigInt::from(3), 3).table, ints(&[2, 3, 7, 18]));
        let t = chebyshev_table(&BigInt::from(11), 5).table;
        assert_eq!(t[0], BigInt::from(2));
        assert_eq!(t[2], BigInt::from(11 * 11 - 2));
    }

    #[test]
    fn e_annihilator_shape() {
        let p = build_e_annihilator(&BigInt::from(7)).unwrap();
        assert_eq!(p.len(), 14);
        assert!((0..14).all(|i| p[i] == -&p[13 - i]));
        // Oracle: multiply out (x-1)(x^2 - t_w x + 1) with t = 7, 47, 322, …
        let t = [7i64, 47, 322, 2207, 15127, 103682];
        let mut oracle = ints(&[-1, 1]);
        for tw in t {
            oracle = poly_mul(&oracle, &ints(&[1, -tw, 1]));
        }
        assert_eq!(p, oracle);
        assert!(matches!(
            build_e_annihilator(&BigInt::from(2)),
            Err(RecurrenceError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn e_annihilator_traces_match_powers_of_rho() {
        for c in [3i64, 7] {
            let rho = (c as f64 + ((c * c - 4) as f64).sqrt()) / 2.0;
            let t = chebyshev_table(&BigInt::from(c), 6).table;
            for (w, tw) in t.iter().enumerate() {
                let exact = rho.powi(w as i32) + rho.powi(-(w as i32));
                let tw: f64 = tw.to_string().parse().unwrap();
                assert!((tw - exact).abs() < 1e-6 * exact.max(1.0));
            }
        }
        let t3: Vec<i64> = chebyshev_table(&BigInt::from(3), 6).table[1..]
            .iter()
            .map(|x| x.to_string().parse().unwrap())
            .collect();
        assert_eq!(t3, vec![3, 7, 18, 47, 123, 322]);
    }

    #[test]
    fn type_a_kronecker_and_a21() {
        let r = verify_type_a(&trace("n=2; 2->1; 2->1", 12)).unwrap();
        assert_eq!((r.m, r.constant.clone()), (1, Some(BigInt::from(7))));
        assert!(r.all_hold);
        let r = verify_type_a(&trace("n=3; 2->1; 3->1; 3->2", 20)).unwrap();
        assert_eq!((r.m, r.constant.clone()), (2, Some(BigInt::from(52))));
        assert!(r.all_hold);
    }

    #[test]
    fn type_a_rejects_other_types() {
        let err = verify_type_a(&trace("n=3; 2->1; 3->1; 3->1; 3->2", 3)).unwrap_err();
        assert!(matches!(err, RecurrenceError::WrongType { .. }));
        let err = verify_type_a(&trace("n=2; 2->1; 2->1", 2)).unwrap_err();
        assert!(matches!(err, RecurrenceError::HorizonTooShort { required: 3, got: 2 }));
    }

    #[test]
    fn type_d_worked_example() {
        let r = verify_type_d(&trace("n=6; 3->1; 3->2; 4->3; 5->4; 6->4", 60)).unwrap();
        assert_eq!(r.leaves, vec![0, 1, 4, 5]);
        assert_eq!(r.p_required, 2);
        assert!(r.c2.is_some());
        assert!(r.c_2p[1].is_some());
        assert_eq!(r.chebyshev_c4, Some(true));
        assert!(r.all_hold, "{r:?}");
    }

    #[test]
    fn type_d_star() {
        let r = verify_type_d(&trace("n=5; 2->1; 3->1; 4->1; 5->1", 40)).unwrap();
        assert_eq!(r.p_required, 1);
        assert!(r.c1.is_some());
        assert_eq!(r.chebyshev_c2, Some(true));
        assert!(r.all_hold, "{r:?}");
    }
}
