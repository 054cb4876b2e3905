//! Vanishing polynomials on coordinate-pair projections of frieze points and
//! the resulting dimension verdict for the frieze variety.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::frieze::{detect_period, FriezeTrace};
use crate::linalg::integer_kernel;
use crate::quiver::{Diagram, ReprType};
use crate::recurrence::e_step;

pub const DEFAULT_DEGREE_BOUND: usize = 4;
pub const DEFAULT_MODULUS_BOUND: usize = 6;
pub const DEFAULT_HOLDOUT: usize = 3;
/// Fitting rows beyond the number of monomials; later points only verify.
const FIT_SLACK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("insufficient points: need {needed}, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error(
        "horizon too short for pair ({}, {}) at m={m}, d={d}: need {needed} points per residue class, got {got}",
        .pair.0 + 1, .pair.1 + 1
    )]
    HorizonTooShort {
        pair: (usize, usize),
        m: usize,
        d: usize,
        needed: usize,
        got: usize,
    },
}

/// Monomials `x^a y^b` with `a + b <= d`, by total degree, then by falling `a`.
pub fn monomials(d: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity((d + 1) * (d + 2) / 2);
    for total in 0..=d as u32 {
        for a in (0..=total).rev() {
            out.push((a, total - a));
        }
    }
    out
}

pub fn monomial_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

fn powers(x: &BigInt, d: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for k in 1..=d {
        let next = &p[k - 1] * x;
        p.push(next);
    }
    p
}

fn evaluation_row(x: &BigInt, y: &BigInt, d: usize, monos: &[(u32, u32)]) -> Vec<BigInt> {
    let px = powers(x, d);
    let py = powers(y, d);
    monos
        .iter()
        .map(|&(a, b)| &px[a as usize] * &py[b as usize])
        .collect()
}

/// Nonzero integer polynomial in two frieze coordinates, fitted on one
/// residue class of `t` modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingPolynomial {
    pub vars: (usize, usize),
    pub residue: usize,
    pub modulus: usize,
    pub degree: usize,
    pub monomials: Vec<(u32, u32)>,
    /// Primitive, first nonzero entry positive.
    pub coeffs: Vec<BigInt>,
}

impl VanishingPolynomial {
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let row = evaluation_row(x, y, self.degree, &self.monomials);
        self.coeffs.iter().zip(&row).map(|(c, v)| c * v).sum()
    }

    pub fn vanishes_at(&self, x: &BigInt, y: &BigInt) -> bool {
        self.eval(x, y).is_zero()
    }

    /// Nonzero terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> BTreeMap<(u32, u32), BigInt> {
        self.monomials
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&m, c)| (m, c.clone()))
            .collect()
    }

    /// Actual total degree of the nonzero terms.
    pub fn total_degree(&self) -> usize {
        self.terms()
            .keys()
            .map(|&(a, b)| (a + b) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Whether `self` is a rational multiple of the polynomial with the given terms.
    pub fn is_multiple_of(&self, other: &BTreeMap<(u32, u32), BigInt>) -> bool {
        let mine = self.terms();
        if mine.len() != other.len() || mine.keys().ne(other.keys()) {
            return false;
        }
        let (&k0, a0) = mine.iter().next().expect("nonzero polynomial");
        let b0 = &other[&k0];
        mine.iter().all(|(k, a)| a * b0 == &other[k] * a0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vars": [self.vars.0 + 1, self.vars.1 + 1],
            "m": self.modulus,
            "r": self.residue,
            "monomials": self.monomials.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "coeffs": self.coeffs.iter().map(BigInt::to_string).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VanishingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (xi, yi) = (self.vars.0 + 1, self.vars.1 + 1);
        let mut first = true;
        for ((a, b), c) in self.terms().into_iter().rev() {
            let neg = c < BigInt::zero();
            let mag = if neg { -c } else { c };
            if first {
                write!(f, "{}", if neg { "-" } else { "" })?;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors = Vec::new();
            for (var, e) in [(xi, a), (yi, b)] {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{var}")),
                    _ => factors.push(format!("x{var}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Integer kernel of the degree-`d` evaluation matrix on `points`.
///
/// The earliest points are fitted and the last `holdout` (at least) are used
/// only for verification; every returned polynomial vanishes exactly on all
/// of `points`. The metadata fields are placeholders for the caller to set.
pub fn vanishing_kernel(
    points: &[(BigInt, BigInt)],
    d: usize,
    holdout: usize,
) -> Result<Vec<VanishingPolynomial>, VarietyError> {
    let cols = monomial_count(d);
    let needed = cols + holdout;
    if points.len() < needed {
        return Err(VarietyError::InsufficientPoints {
            needed,
            got: points.len(),
        });
    }
    let monos = monomials(d);
    let fit = (points.len() - holdout).min(cols + FIT_SLACK);
    let rows: Vec<Vec<BigInt>> = points[..fit]
        .iter()
        .map(|(x, y)| evaluation_row(x, y, d, &monos))
        .collect();
    Ok(integer_kernel(&rows, cols)
        .into_iter()
        .map(|coeffs| VanishingPolynomial {
            vars: (0, 1),
            residue: 0,
            modulus: 1,
            degree: d,
            monomials: monos.clone(),
            coeffs,
        })
        .filter(|p| points[fit..].iter().all(|(x, y)| p.vanishes_at(x, y)))
        .collect())
}

/// Projection of the points with `t ≡ residue (mod modulus)` to coordinates `(i, j)`.
pub fn projected_points(
    trace: &FriezeTrace,
    pair: (usize, usize),
    modulus: usize,
    residue: usize,
) -> Vec<(BigInt, BigInt)> {
    trace
        .points()
        .iter()
        .skip(residue)
        .step_by(modulus)
        .map(|p| (p.coords[pair.0].clone(), p.coords[pair.1].clone()))
        .collect()
}

/// Vanishing polynomials for one coordinate pair, one list per residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRelation {
    pub pair: (usize, usize),
    pub modulus: usize,
    pub degree: usize,
    pub per_residue: Vec<Vec<VanishingPolynomial>>,
}

impl PairRelation {
    /// Product over residues of the first polynomial of each class, as terms.
    pub fn product(&self) -> BTreeMap<(u32, u32), BigInt> {
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::from([((0, 0), BigInt::one())]);
        for polys in &self.per_residue {
            let mut next: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
            for ((a1, b1), c1) in &acc {
                for ((a2, b2), c2) in polys[0].terms() {
                    *next.entry((a1 + a2, b1 + b2)).or_default() += c1 * &c2;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        acc
    }

    /// Whether the product polynomial vanishes at every point of the trace.
    pub fn product_vanishes_on(&self, trace: &FriezeTrace) -> bool {
        let prod = self.product();
        if prod.is_empty() {
            return false;
        }
        trace.points().iter().all(|p| {
            let (x, y) = (&p.coords[self.pair.0], &p.coords[self.pair.1]);
            prod.iter()
                .map(|(&(a, b), c)| c * x.pow(a) * y.pow(b))
                .sum::<BigInt>()
                .is_zero()
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.per_residue
                .iter()
                .flatten()
                .map(VanishingPolynomial::to_json)
                .collect(),
        )
    }
}

/// Outcome of a search grid for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchLog {
    pub tested: Vec<(usize, usize)>,
    pub skipped: Vec<(usize, usize)>,
}

/// Moduli suggested by the diagram, before the plain range `1..=M`.
pub fn structural_moduli(repr: Option<&ReprType>) -> Vec<usize> {
    match repr {
        Some(ReprType::Tame(Diagram::AffineA { p, q })) => vec![p.lcm(q)],
        Some(ReprType::Tame(Diagram::AffineD(n))) => {
            let s = if n % 2 == 1 { n - 3 } else { 2 * (n - 3) };
            (1..=s).filter(|d| s % d == 0).collect()
        }
        Some(ReprType::Tame(Diagram::AffineE(n))) => e_step(*n).into_iter().collect(),
        _ => Vec::new(),
    }
}

fn modulus_order(structural: &[usize], modulus_bound: usize) -> Vec<usize> {
    let mut order: Vec<usize> = structural
        .iter()
        .copied()
        .filter(|&m| m >= 1 && m <= modulus_bound)
        .collect();
    for m in 1..=modulus_bound {
        if !order.contains(&m) {
            order.push(m);
        }
    }
    order
}

/// Searches moduli (structural ones first, then `1..=M`) and degrees
/// `1..=D` for per-residue vanishing polynomials on the pair projection.
/// Cells whose residue classes are too short are skipped and logged.
pub fn pair_relation_search(
    trace: &FriezeTrace,
    pair: (usize, usize),
    degree_bound: usize,
    modulus_bound: usize,
    holdout: usize,
    structural: &[usize],
) -> (Option<PairRelation>, SearchLog) {
    let mut log = SearchLog::default();
    for m in modulus_order(structural, modulus_bound) {
        let classes: Vec<Vec<(BigInt, BigInt)>> =
            (0..m).map(|r| projected_points(trace, pair, m, r)).collect();
        for d in 1..=degree_bound {
            let mut per_residue = Vec::with_capacity(m);
            let mut testable = true;
            for (r, pts) in classes.iter().enumerate() {
                match vanishing_kernel(pts, d, holdout) {
                    Err(_) => {
                        testable = false;
                        break;
                    }
                    Ok(polys) if polys.is_empty() => break,
                    Ok(polys) => per_residue.push(
                        polys
                            .into_iter()
                            .map(|p| VanishingPolynomial {
                                vars: pair,
                                residue: r,
                                modulus: m,
                                ..p
                            })
                            .collect::<Vec<_>>(),
                    ),
                }
            }
            if !testable {
                log.skipped.push((m, d));
                continue;
            }
            log.tested.push((m, d));
            if per_residue.len() == m {
                let rel = PairRelation {
                    pair,
                    modulus: m,
                    degree: d,
                    per_residue,
                };
                return (Some(rel), log);
            }
        }
    }
    (None, log)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    One,
    AtLeastTwo,
}

impl Verdict {
    pub fn expected_for(repr: &ReprType) -> Verdict {
        match repr {
            ReprType::Finite(_) => Verdict::Zero,
            ReprType::Tame(_) => Verdict::One,
            ReprType::Wild => Verdict::AtLeastTwo,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Zero => "Zero",
            Verdict::One => "One",
            Verdict::AtLeastTwo => "AtLeastTwo",
        })
    }
}

/// Bounded-search record behind an `AtLeastTwo` verdict. It is not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustionRecord {
    pub degree_bound: usize,
    pub modulus_bound: usize,
    pub holdout: usize,
    pub points_used: usize,
    pub pair: (usize, usize),
    pub log: SearchLog,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Period(usize),
    Relations(Vec<PairRelation>),
    Exhaustion(ExhaustionRecord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub expected: Option<Verdict>,
    pub warning: Option<String>,
}

impl DimensionReport {
    pub fn agrees(&self) -> Option<bool> {
        self.expected.map(|e| e == self.verdict)
    }

    pub fn relation(&self, pair: (usize, usize)) -> Option<&PairRelation> {
        match &self.evidence {
            Evidence::Relations(rels) => rels.iter().find(|r| r.pair == pair),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let evidence = match &self.evidence {
            Evidence::Period(p) => json!({ "period": p }),
            Evidence::Relations(rels) => json!({
                "relations": rels.iter().map(|r| json!({
                    "vars": [r.pair.0 + 1, r.pair.1 + 1],
                    "m": r.modulus,
                    "d": r.degree,
                    "polynomials": r.to_json(),
                })).collect::<Vec<_>>(),
            }),
            Evidence::Exhaustion(e) => json!({
                "exhaustion": {
                    "note": "bounded search only; absence of a relation is not a proof",
                    "degree_bound": e.degree_bound,
                    "modulus_bound": e.modulus_bound,
                    "holdout": e.holdout,
                    "points_used": e.points_used,
                    "vars": [e.pair.0 + 1, e.pair.1 + 1],
                    "tested": e.log.tested.iter().map(|&(m, d)| json!({"m": m, "d": d})).collect::<Vec<_>>(),
                    "skipped": e.log.skipped.iter().map(|&(m, d)| json!({"m": m, "d": d})).collect::<Vec<_>>(),
                    "kernel_found": false,
                }
            }),
        };
        json!({
            "verdict": self.verdict.to_string(),
            "expected": self.expected.map(|v| v.to_string()),
            "agrees": self.agrees(),
            "warning": self.warning,
            "evidence": evidence,
        })
    }
}

/// Zero if the trace is periodic, One if every coordinate pair has
/// per-residue relations, AtLeastTwo otherwise. The verdict is compared with
/// the graph classification and a disagreement is reported as a warning.
pub fn estimate_dimension(
    trace: &FriezeTrace,
    degree_bound: usize,
    modulus_bound: usize,
    holdout: usize,
) -> Result<DimensionReport, VarietyError> {
    let q = trace.quiver();
    let repr = q.classify().ok();
    let expected = repr.as_ref().map(Verdict::expected_for);
    let finish = |verdict: Verdict, evidence: Evidence| {
        let warning = match expected {
            Some(e) if e != verdict => Some(format!(
                "WARNING: dimension verdict {verdict} disagrees with classification {} (expected {e})",
                repr.as_ref().expect("expected implies classification")
            )),
            None => Some("classification unavailable for this quiver".to_string()),
            _ => None,
        };
        DimensionReport {
            verdict,
            evidence,
            expected,
            warning,
        }
    };

    if let Some(p) = detect_period(trace) {
        return Ok(finish(Verdict::Zero, Evidence::Period(p)));
    }
    let structural = structural_moduli(repr.as_ref());
    let n = q.n();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (rel, log) =
                pair_relation_search(trace, (i, j), degree_bound, modulus_bound, holdout, &structural);
            match rel {
                Some(r) => relations.push(r),
                None if log.tested.is_empty() => {
                    let m = modulus_order(&structural, modulus_bound).first().copied().unwrap_or(1);
                    return Err(VarietyError::HorizonTooShort {
                        pair: (i, j),
                        m,
                        d: 1,
                        needed: monomial_count(1) + holdout,
                        got: projected_points(trace, (i, j), m, m - 1).len(),
                    });
                }
                None => {
                    let record = ExhaustionRecord {
                        degree_bound,
                        modulus_bound,
                        holdout,
                        points_used: trace.len(),
                        pair: (i, j),
                        log,
                    };
                    return Ok(finish(Verdict::AtLeastTwo, Evidence::Exhaustion(record)));
                }
            }
        }
    }
    Ok(finish(Verdict::One, Evidence::Relations(relations)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::{frieze_points, DEFAULT_DIGIT_CAP};
    use crate::quiver::parse_quiver;

    fn trace(text: &str, t_max: usize) -> FriezeTrace {
        let q = parse_quiver(text).unwrap().admissible_relabel().unwrap().0;
        frieze_points(&q, t_max, DEFAULT_DIGIT_CAP).unwrap()
    }

    fn terms(v: &[((u32, u32), i64)]) -> BTreeMap<(u32, u32), BigInt> {
        v.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
    }

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(x, y)| (BigInt::from(x), BigInt::from(y))).collect()
    }

    #[test]
    fn monomial_layout() {
        assert_eq!(monomials(1), vec![(0, 0), (1, 0), (0, 1)]);
        assert_eq!(monomials(2).len(), 6);
        assert_eq!(monomial_count(4), 15);
    }

    #[test]
    fn kronecker_kernel() {
        // Kronecker frieze points are (F_{4t-1}, F_{4t+1}) in Fibonacci numbers.
        let mut fib = vec![0i64, 1];
        while fib.len() < 40 {
            let k = fib.len();
            fib.push(fib[k - 1] + fib[k - 2]);
        }
        let pts: Vec<(i64, i64)> = std::iter::once((1, 1))
            .chain((1..10).map(|t| (fib[4 * t - 1], fib[4 * t + 1])))
            .collect();
        assert_eq!(pts[3], (89, 233));
        let ker = vanishing_kernel(&pairs(&pts), 2, 3).unwrap();
        assert_eq!(ker.len(), 1);
        assert!(ker[0].is_multiple_of(&terms(&[((2, 0), 1), ((1, 1), -3), ((0, 2), 1), ((0, 0), 1)])));
        assert_eq!(ker[0].to_string(), "x1^2 - 3*x1*x2 + x2^2 + 1");
    }

    #[test]
    fn constant_points() {
        let pts = pairs(&[(1, 1); 8]);
        let ker = vanishing_kernel(&pts, 1, 3).unwrap();
        assert_eq!(ker.len(), 2);
        let x_minus_1 = terms(&[((0, 0), -1), ((1, 0), 1)]);
        let y_minus_1 = terms(&[((0, 0), -1), ((0, 1), 1)]);
        for p in &ker {
            assert!(p.vanishes_at(&BigInt::one(), &BigInt::one()));
        }
        // The kernel is spanned by x - 1 and y - 1.
        let span_ok = |p: &VanishingPolynomial| {
            let t = p.terms();
            t.keys().all(|k| x_minus_1.contains_key(k) || y_minus_1.contains_key(k))
        };
        assert!(ker.iter().all(span_ok));
    }

    #[test]
    fn insufficient_points() {
        assert_eq!(
            vanishing_kernel(&pairs(&[(1, 2), (3, 4)]), 1, 3),
            Err(VarietyError::InsufficientPoints { needed: 6, got: 2 })
        );
    }

    #[test]
    fn holdout_rejects_spurious_fit() {
        // Six points on y = x, then one off the line.
        let mut v: Vec<(i64, i64)> = (1..=6).map(|k| (k, k)).collect();
        v.push((7, 8));
        assert!(vanishing_kernel(&pairs(&v), 1, 1).unwrap().is_empty());
        v.pop();
        assert_eq!(vanishing_kernel(&pairs(&v), 1, 1).unwrap().len(), 1);
    }

    #[test]
    fn kronecker_pair_search() {
        let tr = trace("n=2; 2->1; 2->1", 30);
        let (rel, log) = pair_relation_search(&tr, (0, 1), 4, 4, 3, &[1]);
        let rel = rel.unwrap();
        assert_eq!((rel.modulus, rel.degree), (1, 2));
        assert_eq!(log.tested, vec![(1, 1), (1, 2)]);
        let target = terms(&[((2, 0), 1), ((1, 1), -3), ((0, 2), 1), ((0, 0), 1)]);
        assert!(rel.per_residue[0][0].is_multiple_of(&target));
        assert!(rel.product_vanishes_on(&tr));
    }

    #[test]
    fn affine_a21_pair_search() {
        let tr = trace("n=3; 2->1; 3->1; 3->2", 40);
        let (rel, _) = pair_relation_search(&tr, (1, 2), 4, 6, 3, &[2]);
        let rel = rel.unwrap();
        assert_eq!((rel.modulus, rel.degree), (2, 2));
        let even = terms(&[((2, 0), 2), ((1, 1), -6), ((0, 2), 3), ((0, 0), 1)]);
        let odd = terms(&[((2, 0), 3), ((1, 1), -6), ((0, 2), 2), ((0, 0), 1)]);
        assert!(rel.per_residue[0].iter().any(|p| p.is_multiple_of(&even)));
        assert!(rel.per_residue[1].iter().any(|p| p.is_multiple_of(&odd)));
        assert!(rel.product_vanishes_on(&tr));
    }

    #[test]
    fn monotone_in_degree() {
        let tr = trace("n=2; 2->1; 2->1", 40);
        let pts = projected_points(&tr, (0, 1), 1, 0);
        let sizes: Vec<usize> = (1..=4)
            .map(|d| vanishing_kernel(&pts, d, 3).unwrap().len())
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "{sizes:?}");
        assert!(sizes[1] >= 1);
    }

    #[test]
    fn verdicts() {
        let r = estimate_dimension(&trace("n=1", 10), 4, 6, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Zero);
        assert_eq!(r.evidence, Evidence::Period(2));
        assert_eq!(r.agrees(), Some(true));

        let r = estimate_dimension(&trace("n=2; 2->1", 20), 4, 6, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Zero);

        let r = estimate_dimension(&trace("n=2; 2->1; 2->1", 30), 4, 6, 3).unwrap();
        assert_eq!(r.verdict, Verdict::One);
        assert!(r.warning.is_none());

        let wild = trace("n=3; 2->1; 3->1; 3->1; 3->2", 7);
        let r = estimate_dimension(&wild, 4, 4, 3).unwrap();
        assert_eq!(r.verdict, Verdict::AtLeastTwo);
        assert_eq!(r.agrees(), Some(true));
        let Evidence::Exhaustion(rec) = &r.evidence else { panic!() };
        assert_eq!(rec.log.tested, vec![(1, 1)]);
    }

    #[test]
    fn too_short_horizon() {
        let wild = trace("n=3; 2->1; 3->1; 3->1; 3->2", 3);
        assert!(matches!(
            estimate_dimension(&wild, 4, 4, 3),
            Err(VarietyError::HorizonTooShort { pair: (0, 1), m: 1, d: 1, .. })
        ));
    }

    #[test]
    fn disagreement_warns() {
        // Degree 1 at modulus 1 cannot capture the two conics of this tame quiver.
        let tr = trace("n=3; 2->1; 3->1; 3->2", 12);
        let r = estimate_dimension(&tr, 1, 1, 3).unwrap();
        assert_eq!(r.verdict, Verdict::AtLeastTwo);
        assert_eq!(r.agrees(), Some(false));
        assert!(r.warning.unwrap().starts_with("WARNING"));
    }
}
