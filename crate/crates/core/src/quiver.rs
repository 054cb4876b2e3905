//! Acyclic quivers: parsing, admissible relabeling and ADE/affine recognition.
//!
//! Vertices are stored 0-based; the text and JSON formats use labels `1..=n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("loop arrow at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("quiver has an oriented cycle")]
    Cycle,
    #[error("quiver must have at least one vertex")]
    Empty,
    #[error("labeling is not admissible: arrow {0} -> {1} does not decrease the label")]
    NotAdmissible(usize, usize),
    #[error("underlying graph is disconnected")]
    Disconnected,
}

/// A finite acyclic quiver. Parallel arrows are repeated entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver from 0-based arrows, rejecting loops, out-of-range
    /// vertices and oriented cycles.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        if n == 0 {
            return Err(QuiverError::Empty);
        }
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if s == t {
                return Err(QuiverError::Loop(s + 1));
            }
        }
        let q = Quiver { n, arrows };
        if q.sink_order().is_none() {
            return Err(QuiverError::Cycle);
        }
        Ok(q)
    }

    /// Builds a quiver from 1-based arrows, as written in the text format.
    pub fn from_labels(n: usize, arrows: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let mut zero_based = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v, n });
                }
            }
            zero_based.push((s - 1, t - 1));
        }
        Self::new(n, zero_based)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arrows as 0-based `(source, target)` pairs, in input order.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// `counts[i][j]` is the number of arrows `i -> j`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let mut c = vec![vec![0; self.n]; self.n];
        for &(s, t) in &self.arrows {
            c[s][t] += 1;
        }
        c
    }

    /// Undirected edge multiplicities of the underlying multigraph.
    pub fn edge_counts(&self) -> Vec<Vec<usize>> {
        let mut c = vec![vec![0; self.n]; self.n];
        for &(s, t) in &self.arrows {
            c[s][t] += 1;
            c[t][s] += 1;
        }
        c
    }

    /// Every arrow goes from a larger to a smaller label.
    pub fn is_admissible(&self) -> bool {
        self.arrows.iter().all(|&(s, t)| s > t)
    }

    pub fn check_admissible(&self) -> Result<(), QuiverError> {
        match self.arrows.iter().find(|&&(s, t)| s <= t) {
            Some(&(s, t)) => Err(QuiverError::NotAdmissible(s + 1, t + 1)),
            None => Ok(()),
        }
    }

    /// Vertices ordered so that each one is a sink once the earlier ones are
    /// removed, breaking ties by smallest label. `None` if there is a cycle.
    fn sink_order(&self) -> Option<Vec<usize>> {
        let mut out_deg = vec![0usize; self.n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(s, t) in &self.arrows {
            out_deg[s] += 1;
            preds[t].push(s);
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..self.n).filter(|&v| out_deg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &p in &preds[v] {
                out_deg[p] -= 1;
                if out_deg[p] == 0 {
                    ready.insert(p);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Relabels the quiver so that every arrow `i -> j` has `i > j`.
    ///
    /// The returned permutation maps old 0-based labels to new ones. Already
    /// admissible quivers come back unchanged with the identity permutation.
    pub fn admissible_relabel(&self) -> Result<(Quiver, Permutation), QuiverError> {
        let order = self.sink_order().ok_or(QuiverError::Cycle)?;
        let mut map = vec![0; self.n];
        for (new, &old) in order.iter().enumerate() {
            map[old] = new;
        }
        let perm = Permutation(map);
        Ok((self.permuted(&perm), perm))
    }

    /// Applies a relabeling `old -> perm[old]`, keeping arrow order.
    pub fn permuted(&self, perm: &Permutation) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| (perm.0[s], perm.0[t]))
                .collect(),
        }
    }

    /// The same quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.edge_counts();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if adj[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Degree-one vertices of the underlying graph.
    pub fn leaves(&self) -> Vec<usize> {
        let adj = self.edge_counts();
        (0..self.n)
            .filter(|&v| adj[v].iter().sum::<usize>() == 1)
            .collect()
    }

    /// Recognizes the underlying multigraph as Dynkin, affine or neither.
    pub fn classify(&self) -> Result<ReprType, QuiverError> {
        if !self.is_connected() {
            return Err(QuiverError::Disconnected);
        }
        Ok(classify_connected(self))
    }

    /// Text form: `n=<n>` followed by one `a->b` line per arrow.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for &(a, b) in &self.arrows {
            s.push_str(&format!("{}->{}\n", a + 1, b + 1));
        }
        s
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for &(a, b) in &self.arrows {
            write!(f, "; {}->{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// Relabeling of vertices: entry `old` holds the new 0-based label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// 1-based pairs `(old, new)`, the form used in reports.
    pub fn to_labels(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().map(|(i, &j)| (i + 1, j + 1)).collect()
    }
}

/// Named diagrams. `AffineD` and `AffineE` carry the vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diagram {
    A(usize),
    D(usize),
    E(usize),
    /// Cycle with `p` arrows one way and `q` the other, `p >= q >= 1`.
    AffineA { p: usize, q: usize },
    AffineD(usize),
    AffineE(usize),
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Diagram::A(n) => write!(f, "A_{n}"),
            Diagram::D(n) => write!(f, "D_{n}"),
            Diagram::E(n) => write!(f, "E_{n}"),
            Diagram::AffineA { p, q } => write!(f, "Ã({p},{q})"),
            Diagram::AffineD(n) => write!(f, "D̃_{}", n - 1),
            Diagram::AffineE(n) => write!(f, "Ẽ_{}", n - 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReprType {
    Finite(Diagram),
    Tame(Diagram),
    Wild,
}

impl ReprType {
    pub fn is_wild(&self) -> bool {
        matches!(self, ReprType::Wild)
    }

    pub fn diagram(&self) -> Option<Diagram> {
        match *self {
            ReprType::Finite(d) | ReprType::Tame(d) => Some(d),
            ReprType::Wild => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ReprType::Finite(_) => "Finite",
            ReprType::Tame(_) => "Tame",
            ReprType::Wild => "Wild",
        }
    }
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReprType::Finite(d) => write!(f, "Finite {d}"),
            ReprType::Tame(d) => write!(f, "Tame {d}"),
            ReprType::Wild => write!(f, "Wild"),
        }
    }
}

fn classify_connected(q: &Quiver) -> ReprType {
    let n = q.n;
    let adj = q.edge_counts();
    let max_mult = adj.iter().flatten().copied().max().unwrap_or(0);
    if max_mult >= 3 {
        return ReprType::Wild;
    }
    if max_mult == 2 {
        // Only the Kronecker quiver survives: two vertices, one double edge.
        return if n == 2 && q.arrows.len() == 2 {
            ReprType::Tame(affine_a_params(q))
        } else {
            ReprType::Wild
        };
    }
    let edges = q.arrows.len();
    let degrees: Vec<usize> = adj.iter().map(|r| r.iter().sum()).collect();
    if edges + 1 == n {
        classify_tree(&adj, &degrees)
    } else if edges == n && degrees.iter().all(|&d| d == 2) {
        ReprType::Tame(affine_a_params(q))
    } else {
        ReprType::Wild
    }
}

/// Walks the unique cycle from vertex 0 and counts arrows along and against
/// the direction of travel.
fn affine_a_params(q: &Quiver) -> Diagram {
    let n = q.n;
    let mut used = vec![false; q.arrows.len()];
    let (mut along, mut against) = (0, 0);
    let mut at = 0;
    for _ in 0..q.arrows.len() {
        let (idx, &(s, t)) = q
            .arrows
            .iter()
            .enumerate()
            .find(|&(i, &(s, t))| !used[i] && (s == at || t == at))
            .expect("cycle walk");
        used[idx] = true;
        if s == at {
            along += 1;
            at = t;
        } else {
            against += 1;
            at = s;
        }
    }
    debug_assert_eq!(at, 0);
    debug_assert_eq!(along + against, n);
    Diagram::AffineA {
        p: along.max(against),
        q: along.min(against),
    }
}

/// Lengths of the arms hanging off a branch vertex, sorted ascending.
fn arm_lengths(adj: &[Vec<usize>], degrees: &[usize], center: usize) -> Vec<usize> {
    let mut arms = Vec::new();
    for start in (0..adj.len()).filter(|&w| adj[center][w] > 0) {
        let (mut prev, mut cur, mut len) = (center, start, 1);
        while degrees[cur] == 2 {
            let next = (0..adj.len())
                .find(|&w| w != prev && adj[cur][w] > 0)
                .expect("path continues");
            prev = cur;
            cur = next;
            len += 1;
        }
        // A branch vertex inside an arm is not a star shape.
        if degrees[cur] != 1 {
            return Vec::new();
        }
        arms.push(len);
    }
    arms.sort_unstable();
    arms
}

fn classify_tree(adj: &[Vec<usize>], degrees: &[usize]) -> ReprType {
    let n = adj.len();
    if n <= 2 || degrees.iter().all(|&d| d <= 2) {
        return ReprType::Finite(Diagram::A(n));
    }
    let branch: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    if max_deg >= 5 {
        return ReprType::Wild;
    }
    if max_deg == 4 {
        return if n == 5 {
            ReprType::Tame(Diagram::AffineD(5))
        } else {
            ReprType::Wild
        };
    }
    match branch.len() {
        1 => match arm_lengths(adj, degrees, branch[0]).as_slice() {
            [1, 1, _] => ReprType::Finite(Diagram::D(n)),
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => ReprType::Finite(Diagram::E(n)),
            [2, 2, 2] | [1, 3, 3] | [1, 2, 5] => ReprType::Tame(Diagram::AffineE(n)),
            _ => ReprType::Wild,
        },
        2 => {
            let two_leaves = |v: usize| {
                (0..n).filter(|&w| adj[v][w] > 0 && degrees[w] == 1).count() == 2
            };
            if branch.iter().all(|&b| two_leaves(b)) {
                ReprType::Tame(Diagram::AffineD(n))
            } else {
                ReprType::Wild
            }
        }
        _ => ReprType::Wild,
    }
}

/// Parses the text format (`n=<int>` then `a->b` statements, separated by
/// newlines or `;`, `#` comments) or a JSON object `{"n":..,"arrows":[[a,b],..]}`.
pub fn parse_quiver(text: &str) -> Result<Quiver, QuiverError> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut n: Option<usize> = None;
    let mut arrows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for stmt in line.split(';') {
            let col = offset + 1 + (stmt.len() - stmt.trim_start().len());
            offset += stmt.len() + 1;
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let syntax = |msg: String| QuiverError::Syntax {
                line: lineno + 1,
                col,
                msg,
            };
            if let Some(rest) = stmt.strip_prefix("n=").or_else(|| stmt.strip_prefix("n =")) {
                if n.is_some() {
                    return Err(syntax("vertex count given twice".into()));
                }
                let v: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("invalid vertex count `{}`", rest.trim())))?;
                n = Some(v);
            } else if let Some((a, b)) = stmt.split_once("->") {
                if n.is_none() {
                    return Err(syntax("arrow before `n=` declaration".into()));
                }
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| syntax(format!("invalid vertex `{}`", s.trim())))
                };
                arrows.push((parse(a)?, parse(b)?));
            } else {
                return Err(syntax(format!("unrecognized statement `{stmt}`")));
            }
        }
    }
    let n = n.ok_or(QuiverError::Syntax {
        line: 1,
        col: 1,
        msg: "missing `n=` declaration".into(),
    })?;
    Quiver::from_labels(n, &arrows)
}

#[derive(Deserialize)]
struct JsonQuiver {
    n: usize,
    #[serde(default)]
    arrows: Vec<(usize, usize)>,
}

fn parse_json(text: &str) -> Result<Quiver, QuiverError> {
    let jq: JsonQuiver = serde_json::from_str(text).map_err(|e| QuiverError::Syntax {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    Quiver::from_labels(jq.n, &jq.arrows)
}

/// Arrow multiplicity summary keyed by 1-based `(source, target)`.
pub fn arrow_multiset(q: &Quiver) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for &(s, t) in q.arrows() {
        *m.entry((s + 1, t + 1)).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Quiver {
        parse_quiver(text).unwrap()
    }

    #[test]
    fn parses_kronecker() {
        let k = q("n=2; 2->1; 2->1");
        assert_eq!(k.n(), 2);
        assert_eq!(k.arrows(), &[(1, 0), (1, 0)]);
    }

    #[test]
    fn parses_single_vertex() {
        let s = q("n=1");
        assert_eq!(s.n(), 1);
        assert!(s.arrows().is_empty());
    }

    #[test]
    fn parses_multiline_with_comments() {
        let w = q("# wild example\nn=3\n2->1\n3->1 # double\n3->1\n3->2\n");
        assert_eq!(arrow_multiset(&w).get(&(3, 1)), Some(&2));
        assert_eq!(w.arrows().len(), 4);
    }

    #[test]
    fn parses_json() {
        let k = q(r#"{"n": 2, "arrows": [[2,1],[2,1]]}"#);
        assert_eq!(k, q("n=2; 2->1; 2->1"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_quiver("n=2; 2->2"),
            Err(QuiverError::Loop(2))
        ));
        assert!(matches!(
            parse_quiver("n=2; 3->1"),
            Err(QuiverError::VertexOutOfRange { vertex: 3, n: 2 })
        ));
        assert!(matches!(
            parse_quiver("n=2; 1->2; 2->1"),
            Err(QuiverError::Cycle)
        ));
        match parse_quiver("n=2\n2=>1") {
            Err(QuiverError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 1)),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_quiver("n=3; 2->x") {
            Err(QuiverError::Syntax { line, col, .. }) => assert_eq!((line, col), (1, 6)),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse_quiver("1->2"), Err(QuiverError::Syntax { .. })));
        assert!(matches!(parse_quiver("n=0"), Err(QuiverError::Empty)));
    }

    #[test]
    fn relabel_a2() {
        let (r, perm) = q("n=2; 1->2").admissible_relabel().unwrap();
        assert_eq!(r.arrows(), &[(1, 0)]);
        assert_eq!(perm.to_labels(), vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn relabel_identity_on_admissible() {
        let w = q("n=3; 2->1; 3->1; 3->1; 3->2");
        let (r, perm) = w.admissible_relabel().unwrap();
        assert!(perm.is_identity());
        assert_eq!(r, w);
        let (r1, p1) = q("n=1").admissible_relabel().unwrap();
        assert!(p1.is_identity());
        assert_eq!(r1.n(), 1);
    }

    #[test]
    fn relabel_is_idempotent() {
        let x = q("n=4; 1->2; 1->3; 4->3; 2->4");
        let (once, _) = x.admissible_relabel().unwrap();
        assert!(once.is_admissible());
        let (twice, perm) = once.admissible_relabel().unwrap();
        assert!(perm.is_identity());
        assert_eq!(once, twice);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            q("n=2; 2->1; 2->1").classify().unwrap(),
            ReprType::Tame(Diagram::AffineA { p: 1, q: 1 })
        );
        assert_eq!(
            q("n=3; 2->1; 3->1; 3->2").classify().unwrap(),
            ReprType::Tame(Diagram::AffineA { p: 2, q: 1 })
        );
        assert_eq!(
            q("n=3; 2->1; 3->1; 3->1; 3->2").classify().unwrap(),
            ReprType::Wild
        );
        assert_eq!(
            q("n=3; 3->2; 2->1").classify().unwrap(),
            ReprType::Finite(Diagram::A(3))
        );
        assert_eq!(q("n=1").classify().unwrap(), ReprType::Finite(Diagram::A(1)));
    }

    #[test]
    fn classify_stars_and_trees() {
        // D_4
        assert_eq!(
            q("n=4; 2->1; 3->1; 4->1").classify().unwrap(),
            ReprType::Finite(Diagram::D(4))
        );
        // D̃_4: four leaves around a center
        assert_eq!(
            q("n=5; 2->1; 3->1; 4->1; 5->1").classify().unwrap(),
            ReprType::Tame(Diagram::AffineD(5))
        );
        // D̃_5 of the worked example
        assert_eq!(
            q("n=6; 3->1; 3->2; 4->3; 5->4; 6->4").classify().unwrap(),
            ReprType::Tame(Diagram::AffineD(6))
        );
        // E_6, Ẽ_6
        assert_eq!(
            q("n=6; 2->1; 3->2; 4->3; 5->4; 6->3").classify().unwrap(),
            ReprType::Finite(Diagram::E(6))
        );
        assert_eq!(
            q("n=7; 2->1; 7->2; 7->6; 6->5; 7->4; 4->3").classify().unwrap(),
            ReprType::Tame(Diagram::AffineE(7))
        );
        // six leaves around a center
        assert_eq!(
            q("n=6; 2->1; 3->1; 4->1; 5->1; 6->1").classify().unwrap(),
            ReprType::Wild
        );
        // triangle with a tail
        assert_eq!(
            q("n=4; 2->1; 3->1; 3->2; 4->3").classify().unwrap(),
            ReprType::Wild
        );
        // double edge plus another vertex
        assert_eq!(
            q("n=3; 2->1; 2->1; 3->2").classify().unwrap(),
            ReprType::Wild
        );
    }

    #[test]
    fn affine_a_orientations() {
        // 4-cycle 1-2-3-4-1 with two arrows each way, both patterns.
        assert_eq!(
            q("n=4; 2->1; 3->2; 3->4; 4->1").classify().unwrap(),
            ReprType::Tame(Diagram::AffineA { p: 2, q: 2 })
        );
        assert_eq!(
            q("n=4; 2->1; 2->3; 4->3; 4->1").classify().unwrap(),
            ReprType::Tame(Diagram::AffineA { p: 2, q: 2 })
        );
        assert_eq!(
            q("n=4; 2->1; 3->2; 4->3; 4->1").classify().unwrap(),
            ReprType::Tame(Diagram::AffineA { p: 3, q: 1 })
        );
    }

    #[test]
    fn disconnected_is_rejected() {
        assert_eq!(q("n=2").classify(), Err(QuiverError::Disconnected));
    }

    #[test]
    fn classify_invariant_under_opposite_and_relabel() {
        let x = q("n=6; 3->1; 3->2; 4->3; 5->4; 6->4");
        let t = x.classify().unwrap();
        assert_eq!(x.opposite().classify().unwrap(), t);
        let perm = Permutation(vec![5, 3, 1, 0, 2, 4]);
        assert_eq!(x.permuted(&perm).classify().unwrap(), t);
    }

    #[test]
    fn text_round_trip() {
        let w = q("n=3; 2->1; 3->1; 3->1; 3->2");
        assert_eq!(parse_quiver(&w.to_text()).unwrap(), w);
    }
}
