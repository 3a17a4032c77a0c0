//! Bipartite graphs, difference graphs and covers by bicliques or
//! difference graphs.
//!
//! A difference graph is stored as its degree sequence `f` (a partition of its
//! edge count): row `i` is adjacent to columns `0..f[i]`. Covers embed members
//! into a host graph by listing rows and columns explicitly; a difference
//! member lists its rows in nesting order so its shape is checked in one pass.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::bits::BitSet;
use crate::poset::{Poset, PosetError};
use crate::realizer::Ple;

/// Largest argument accepted by [`count_partitions`].
pub const MAX_PARTITION_ARG: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex ({row}, {col}) outside a {rows}x{cols} bipartite graph (1-based)")]
    IdRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("invalid height-two classes: {0}")]
    Classes(String),
    #[error("sequence is not a ple: {} appears before {} but {} < {}", .0 + 1, .1 + 1, .1 + 1, .0 + 1)]
    NotPle(usize, usize),
    #[error("argument {0} exceeds the supported bound {MAX_PARTITION_ARG}")]
    Overflow(usize),
}

/// A bipartite graph with rows `0..rows` and columns `0..cols`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    rows: usize,
    cols: usize,
    adj: Vec<BitSet>,
    col_adj: Vec<BitSet>,
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("edges", &self.edges())
            .finish()
    }
}

impl BipartiteGraph {
    /// Duplicate edges are merged.
    pub fn new(rows: usize, cols: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = BipartiteGraph::empty(rows, cols);
        for &(r, c) in edges {
            if r >= rows || c >= cols {
                return Err(GraphError::IdRange {
                    row: r + 1,
                    col: c + 1,
                    rows,
                    cols,
                });
            }
            g.add_edge(r, c);
        }
        Ok(g)
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        BipartiteGraph {
            rows,
            cols,
            adj: vec![BitSet::new(cols); rows],
            col_adj: vec![BitSet::new(rows); cols],
        }
    }

    pub(crate) fn add_edge(&mut self, r: usize, c: usize) {
        self.adj[r].insert(c);
        self.col_adj[c].insert(r);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex_count(&self) -> usize {
        self.rows + self.cols
    }

    #[inline]
    pub fn has_edge(&self, r: usize, c: usize) -> bool {
        r < self.rows && self.adj[r].contains(c)
    }

    pub fn row_neighbors(&self, r: usize) -> &BitSet {
        &self.adj[r]
    }

    pub fn col_neighbors(&self, c: usize) -> &BitSet {
        &self.col_adj[c]
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .flat_map(|r| self.adj[r].iter().map(move |c| (r, c)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum()
    }

    pub fn transpose(&self) -> BipartiteGraph {
        BipartiteGraph {
            rows: self.cols,
            cols: self.rows,
            adj: self.col_adj.clone(),
            col_adj: self.adj.clone(),
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(BitSet::is_empty) || self.col_adj.iter().any(BitSet::is_empty)
    }
}

/// A difference graph `H(a, b; f)`, stored by its non-increasing degree
/// sequence `f` with every entry at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferenceGraph {
    f: Vec<usize>,
}

impl DifferenceGraph {
    pub fn from_partition(parts: &[usize]) -> Result<Self, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::Partition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(GraphError::Partition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(GraphError::Partition(format!(
                "parts must be non-increasing: {parts:?}"
            )));
        }
        Ok(DifferenceGraph { f: parts.to_vec() })
    }

    pub fn to_partition(&self) -> Vec<usize> {
        self.f.clone()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.f
    }

    pub fn rows(&self) -> usize {
        self.f.len()
    }

    pub fn cols(&self) -> usize {
        self.f[0]
    }

    pub fn edge_count(&self) -> usize {
        self.f.iter().sum()
    }

    /// `H(b, a; g)` with `g(j) = max{i : f(i) >= j}`: the conjugate partition.
    pub fn transpose(&self) -> DifferenceGraph {
        let g = (1..=self.cols())
            .map(|j| self.f.iter().take_while(|&&fi| fi >= j).count())
            .collect();
        DifferenceGraph { f: g }
    }

    pub fn to_graph(&self) -> BipartiteGraph {
        let mut g = BipartiteGraph::empty(self.rows(), self.cols());
        for (r, &d) in self.f.iter().enumerate() {
            for c in 0..d {
                g.add_edge(r, c);
            }
        }
        g
    }

    /// The whole graph as a single cover member of itself.
    pub fn as_member(&self) -> CoverMember {
        CoverMember {
            rows: (0..self.rows()).collect(),
            cols: (0..self.cols()).collect(),
            shape: Shape::Diff(self.f.clone()),
        }
    }
}

/// Partitions of `m`, parts non-increasing, in reverse lexicographic order.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// Exact partition number `p(m)` by Euler's pentagonal-number recurrence.
pub fn count_partitions(m: usize) -> Result<BigUint, GraphError> {
    if m > MAX_PARTITION_ARG {
        return Err(GraphError::Overflow(m));
    }
    let mut p: Vec<BigUint> = Vec::with_capacity(m + 1);
    p.push(BigUint::from(1u32));
    for k in 1..=m {
        let mut plus = BigUint::default();
        let mut minus = BigUint::default();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let target = if j % 2 == 1 { &mut plus } else { &mut minus };
            *target += &p[k - g1];
            if g2 <= k {
                *target += &p[k - g2];
            }
        }
        p.push(plus - minus);
    }
    Ok(p.swap_remove(m))
}

/// Shape of an embedded cover member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Complete bipartite on the listed rows and columns.
    Rect,
    /// Difference graph: listed row `i` is adjacent to the first `f[i]`
    /// listed columns.
    Diff(Vec<usize>),
}

/// A subgraph of a host bipartite graph used as a cover member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverMember {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub shape: Shape,
}

impl CoverMember {
    pub fn rect(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        CoverMember {
            rows,
            cols,
            shape: Shape::Rect,
        }
    }

    pub fn diff(rows: Vec<usize>, cols: Vec<usize>, f: Vec<usize>) -> Self {
        CoverMember {
            rows,
            cols,
            shape: Shape::Diff(f),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match &self.shape {
            Shape::Rect => self
                .rows
                .iter()
                .flat_map(|&r| self.cols.iter().map(move |&c| (r, c)))
                .collect(),
            Shape::Diff(f) => self
                .rows
                .iter()
                .zip(f)
                .flat_map(|(&r, &d)| self.cols[..d.min(self.cols.len())].iter().map(move |&c| (r, c)))
                .collect(),
        }
    }

    pub fn is_biclique(&self) -> bool {
        match &self.shape {
            Shape::Rect => true,
            Shape::Diff(f) => f.iter().all(|&d| d == self.cols.len()),
        }
    }

    /// Structural check of the shape, independent of any host.
    fn shape_defect(&self) -> Option<String> {
        if self.rows.is_empty() || self.cols.is_empty() {
            return Some("member needs at least one row and one column".into());
        }
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        let mut cols = self.cols.clone();
        cols.sort_unstable();
        if rows.windows(2).any(|w| w[0] == w[1]) || cols.windows(2).any(|w| w[0] == w[1]) {
            return Some("repeated vertex".into());
        }
        if let Shape::Diff(f) = &self.shape {
            if f.len() != self.rows.len() {
                return Some(format!(
                    "{} degrees for {} rows",
                    f.len(),
                    self.rows.len()
                ));
            }
            if f.windows(2).any(|w| w[0] < w[1]) {
                return Some("degrees are not non-increasing".into());
            }
            if f.contains(&0) {
                return Some("isolated row".into());
            }
            if f[0] != self.cols.len() {
                return Some("isolated column".into());
            }
        }
        None
    }
}

impl fmt::Display for CoverMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.shape {
            Shape::Rect => write!(f, "rect: {} | {}", join(&self.rows), join(&self.cols)),
            Shape::Diff(deg) => {
                let degs: Vec<String> = deg.iter().map(|d| d.to_string()).collect();
                write!(
                    f,
                    "diff: {} | {} | {}",
                    join(&self.rows),
                    join(&self.cols),
                    degs.join(",")
                )
            }
        }
    }
}

/// A family of cover members over some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverFamily {
    pub members: Vec<CoverMember>,
}

impl CoverFamily {
    pub fn new(members: Vec<CoverMember>) -> Self {
        CoverFamily { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Per-vertex multiplicities `(rows, cols)` over a `rows x cols` host.
    pub fn multiplicities(&self, rows: usize, cols: usize) -> (Vec<usize>, Vec<usize>) {
        let mut rm = vec![0; rows];
        let mut cm = vec![0; cols];
        for m in &self.members {
            for &r in &m.rows {
                rm[r] += 1;
            }
            for &c in &m.cols {
                cm[c] += 1;
            }
        }
        (rm, cm)
    }

    pub fn total_vertices(&self) -> usize {
        self.members.iter().map(CoverMember::vertex_count).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Biclique,
    Difference,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    Shape { member: usize, reason: String },
    ForeignEdge { member: usize, edge: (usize, usize) },
    UncoveredEdge { edge: (usize, usize) },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::Shape { member, reason } => {
                write!(f, "shape error in member {}: {reason}", member + 1)
            }
            CoverViolation::ForeignEdge { member, edge } => write!(
                f,
                "member {} uses edge ({}, {}) which is not in the host",
                member + 1,
                edge.0 + 1,
                edge.1 + 1
            ),
            CoverViolation::UncoveredEdge { edge } => {
                write!(f, "edge ({}, {}) is not covered", edge.0 + 1, edge.1 + 1)
            }
        }
    }
}

/// Multiplicity profile of a verified cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub row_mult: Vec<usize>,
    pub col_mult: Vec<usize>,
    pub max_row_mult: usize,
    pub max_col_mult: usize,
    pub max_mult: usize,
    /// Sum of member vertex counts.
    pub total_vertices: usize,
}

/// Checks that `family` covers exactly the edges of `host` with members of
/// the given kind.
pub fn verify_cover(
    host: &BipartiteGraph,
    family: &CoverFamily,
    kind: CoverKind,
) -> Result<CoverReport, CoverViolation> {
    let mut covered = BipartiteGraph::empty(host.rows(), host.cols());
    for (k, m) in family.members.iter().enumerate() {
        if let Some(reason) = m.shape_defect() {
            return Err(CoverViolation::Shape { member: k, reason });
        }
        if kind == CoverKind::Biclique && !m.is_biclique() {
            return Err(CoverViolation::Shape {
                member: k,
                reason: "member is not a biclique".into(),
            });
        }
        if let Some(&r) = m.rows.iter().find(|&&r| r >= host.rows()) {
            return Err(CoverViolation::Shape {
                member: k,
                reason: format!("row {} outside host", r + 1),
            });
        }
        if let Some(&c) = m.cols.iter().find(|&&c| c >= host.cols()) {
            return Err(CoverViolation::Shape {
                member: k,
                reason: format!("column {} outside host", c + 1),
            });
        }
        let mut edges = m.edges();
        edges.sort_unstable();
        for (r, c) in edges {
            if !host.has_edge(r, c) {
                return Err(CoverViolation::ForeignEdge {
                    member: k,
                    edge: (r, c),
                });
            }
            covered.add_edge(r, c);
        }
    }
    if let Some(edge) = host.edges().into_iter().find(|&(r, c)| !covered.has_edge(r, c)) {
        return Err(CoverViolation::UncoveredEdge { edge });
    }
    let (row_mult, col_mult) = family.multiplicities(host.rows(), host.cols());
    let max_row_mult = row_mult.iter().copied().max().unwrap_or(0);
    let max_col_mult = col_mult.iter().copied().max().unwrap_or(0);
    Ok(CoverReport {
        max_mult: max_row_mult.max(max_col_mult),
        max_row_mult,
        max_col_mult,
        total_vertices: family.total_vertices(),
        row_mult,
        col_mult,
    })
}

/// The two classes of a poset of height at most two: every relation goes
/// from `a` to `b`, and neither class has internal relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightTwoClasses {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl HeightTwoClasses {
    /// `a` = minimal elements (isolated elements included), `b` = the rest.
    pub fn of(p: &Poset) -> Result<Self, GraphError> {
        let height = p.height();
        if height > 2 {
            return Err(PosetError::Height { height }.into());
        }
        let a = p.minimal_elements();
        let b = (0..p.len()).filter(|&x| !p.below(x).is_empty()).collect();
        Ok(HeightTwoClasses { a, b })
    }

    /// Explicit classes, checked against `p`.
    pub fn new(p: &Poset, a: Vec<usize>, b: Vec<usize>) -> Result<Self, GraphError> {
        let mut side = vec![None; p.len()];
        for (&x, is_b) in a.iter().map(|x| (x, false)).chain(b.iter().map(|x| (x, true))) {
            if x >= p.len() {
                return Err(GraphError::Classes(format!("element {} out of range", x + 1)));
            }
            if side[x].replace(is_b).is_some() {
                return Err(GraphError::Classes(format!("element {} listed twice", x + 1)));
            }
        }
        if let Some(x) = side.iter().position(Option::is_none) {
            return Err(GraphError::Classes(format!("element {} unassigned", x + 1)));
        }
        for (x, y) in p.relations() {
            if side[x] != Some(false) || side[y] != Some(true) {
                return Err(GraphError::Classes(format!(
                    "relation {} < {} does not go from A to B",
                    x + 1,
                    y + 1
                )));
            }
        }
        Ok(HeightTwoClasses { a, b })
    }

    /// `(is_in_a, index within its class)` for every element.
    fn positions(&self, n: usize) -> Vec<(bool, usize)> {
        let mut pos = vec![(false, 0); n];
        for (i, &x) in self.a.iter().enumerate() {
            pos[x] = (true, i);
        }
        for (j, &y) in self.b.iter().enumerate() {
            pos[y] = (false, j);
        }
        pos
    }
}

/// Critical-pair graph of a height-two poset: rows are class `a`, columns are
/// class `b`, and `a_i b_j` is an edge iff the two are incomparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPairGraph {
    pub graph: BipartiteGraph,
    pub classes: HeightTwoClasses,
}

pub fn critical_pair_graph(p: &Poset) -> Result<CriticalPairGraph, GraphError> {
    let classes = HeightTwoClasses::of(p)?;
    Ok(critical_pair_graph_with(p, classes))
}

pub fn critical_pair_graph_with(p: &Poset, classes: HeightTwoClasses) -> CriticalPairGraph {
    let mut graph = BipartiteGraph::empty(classes.a.len(), classes.b.len());
    for (i, &x) in classes.a.iter().enumerate() {
        for (j, &y) in classes.b.iter().enumerate() {
            if p.incomparable(x, y) {
                graph.add_edge(i, j);
            }
        }
    }
    CriticalPairGraph { graph, classes }
}

/// Height-two poset whose critical pairs are the edges of `g`: row `i` is
/// element `i`, column `j` is element `rows + j`, and `a < b` iff `ab` is not
/// an edge.
pub fn poset_from_bipartite(g: &BipartiteGraph) -> (Poset, HeightTwoClasses) {
    let a = g.rows();
    let p = Poset::from_predicate(g.vertex_count(), |x, y| x < a && y >= a && !g.has_edge(x, y - a));
    let classes = HeightTwoClasses {
        a: (0..a).collect(),
        b: (a..g.vertex_count()).collect(),
    };
    (p, classes)
}

/// Difference graph `H(L)` read off a ple, embedded in the poset's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PleGraph {
    /// Class-`a` elements, by non-increasing degree then id.
    pub rows: Vec<usize>,
    /// Class-`b` elements in the order they occur in the ple.
    pub cols: Vec<usize>,
    pub f: Vec<usize>,
}

impl PleGraph {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .zip(&self.f)
            .flat_map(|(&a, &d)| self.cols[..d].iter().map(move |&b| (a, b)))
            .collect()
    }

    /// The same subgraph as a cover member of the critical-pair graph.
    pub fn to_member(&self, cpg: &CriticalPairGraph) -> Option<CoverMember> {
        if self.is_empty() {
            return None;
        }
        let pos = cpg.classes.positions(cpg.graph.vertex_count());
        Some(CoverMember::diff(
            self.rows.iter().map(|&x| pos[x].1).collect(),
            self.cols.iter().map(|&y| pos[y].1).collect(),
            self.f.clone(),
        ))
    }
}

/// Trims the leading class-`a` block and trailing class-`b` block of `ple`,
/// then returns the graph of pairs `ab` with `b` listed before `a`.
pub fn ple_to_difference_graph(
    p: &Poset,
    classes: &HeightTwoClasses,
    ple: &Ple,
) -> Result<PleGraph, GraphError> {
    let seq = ple.elements();
    for (i, &x) in seq.iter().enumerate() {
        if x >= p.len() {
            return Err(GraphError::Classes(format!("element {} out of range", x + 1)));
        }
        if let Some(&y) = seq[i + 1..].iter().find(|&&y| p.lt(y, x)) {
            return Err(GraphError::NotPle(x, y));
        }
    }
    let pos = classes.positions(p.len());
    let in_a = |x: usize| pos[x].0;
    let start = seq.iter().position(|&x| !in_a(x)).unwrap_or(seq.len());
    let end = seq.iter().rposition(|&x| in_a(x)).map_or(0, |i| i + 1);
    if start >= end {
        return Ok(PleGraph {
            rows: Vec::new(),
            cols: Vec::new(),
            f: Vec::new(),
        });
    }
    let core = &seq[start..end];
    let cols: Vec<usize> = core.iter().copied().filter(|&x| !in_a(x)).collect();
    let mut rows: Vec<(usize, usize)> = Vec::new();
    let mut seen_b = 0;
    for &x in core {
        if in_a(x) {
            rows.push((x, seen_b));
        } else {
            seen_b += 1;
        }
    }
    rows.sort_by(|l, r| r.1.cmp(&l.1).then(l.0.cmp(&r.0)));
    Ok(PleGraph {
        f: rows.iter().map(|r| r.1).collect(),
        rows: rows.into_iter().map(|r| r.0).collect(),
        cols,
    })
}

/// Whether the row neighbourhoods of `edges` (restricted to its own vertex
/// set) form a chain under inclusion. Used to check difference-graph shape
/// directly on an edge set.
pub fn has_nested_rows(edges: &[(usize, usize)]) -> bool {
    let mut by_row: std::collections::BTreeMap<usize, std::collections::BTreeSet<usize>> =
        Default::default();
    for &(r, c) in edges {
        by_row.entry(r).or_default().insert(c);
    }
    let mut hoods: Vec<_> = by_row.into_values().collect();
    hoods.sort_by_key(|h| std::cmp::Reverse(h.len()));
    hoods.windows(2).all(|w| w[1].is_subset(&w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::standard_example;

    #[test]
    fn partition_roundtrip_small() {
        let h = DifferenceGraph::from_partition(&[3, 2]).unwrap();
        assert_eq!((h.rows(), h.cols(), h.edge_count()), (2, 3, 5));
        assert_eq!(h.to_partition(), vec![3, 2]);
        assert!(DifferenceGraph::from_partition(&[2, 3]).is_err());
        assert!(DifferenceGraph::from_partition(&[2, 0]).is_err());
        assert!(DifferenceGraph::from_partition(&[]).is_err());
    }

    #[test]
    fn transpose_examples() {
        let h = DifferenceGraph::from_partition(&[3, 2]).unwrap();
        assert_eq!(h.transpose().to_partition(), vec![2, 2, 1]);
        let star = DifferenceGraph::from_partition(&[4]).unwrap();
        assert_eq!(star.transpose().to_partition(), vec![1, 1, 1, 1]);
        assert_eq!(h.transpose().to_graph(), h.to_graph().transpose());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions(0).unwrap(), BigUint::from(1u32));
        assert_eq!(count_partitions(1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_partitions(5).unwrap(), BigUint::from(7u32));
        assert_eq!(count_partitions(12).unwrap(), BigUint::from(77u32));
        assert_eq!(count_partitions(100).unwrap(), BigUint::from(190_569_292u64));
        assert!(count_partitions(MAX_PARTITION_ARG + 1).is_err());
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn critical_pairs_of_standard_example() {
        let (s3, _) = standard_example(3);
        let cpg = critical_pair_graph(&s3).unwrap();
        assert_eq!(cpg.graph.edges(), vec![(0, 0), (1, 1), (2, 2)]);
        assert!(critical_pair_graph(&Poset::chain(3)).is_err());
    }

    #[test]
    fn poset_from_graphs() {
        let (p, _) = poset_from_bipartite(&BipartiteGraph::empty(2, 2));
        assert_eq!(p.relations().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let k22 = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(poset_from_bipartite(&k22).0, Poset::antichain(4));
        let m3 = BipartiteGraph::new(3, 3, &[(0, 0), (1, 1), (2, 2)]).unwrap();
        let (p, classes) = poset_from_bipartite(&m3);
        assert!(p.is_isomorphic(&standard_example(3).0));
        assert_eq!(critical_pair_graph_with(&p, classes).graph, m3);
    }

    #[test]
    fn explicit_classes_are_checked() {
        let c2 = Poset::chain(2);
        assert!(HeightTwoClasses::new(&c2, vec![1], vec![0]).is_err());
        assert!(HeightTwoClasses::new(&c2, vec![0], vec![]).is_err());
        assert!(HeightTwoClasses::new(&c2, vec![0], vec![1]).is_ok());
    }

    #[test]
    fn ple_graph_block_rule() {
        // a1 = 0, a2 = 1, b1 = 2, b2 = 3, b3 = 4, all incomparable.
        let p = Poset::antichain(5);
        let classes = HeightTwoClasses::new(&p, vec![0, 1], vec![2, 3, 4]).unwrap();
        let g = ple_to_difference_graph(&p, &classes, &Ple::new(vec![2, 3, 0, 4, 1])).unwrap();
        assert_eq!(g.f, vec![3, 2]);
        assert_eq!(g.rows, vec![1, 0]);
        let mut e = g.edges();
        e.sort_unstable();
        assert_eq!(e, vec![(0, 2), (0, 3), (1, 2), (1, 3), (1, 4)]);

        let single = ple_to_difference_graph(&p, &classes, &Ple::new(vec![2, 0])).unwrap();
        assert_eq!(single.edges(), vec![(0, 2)]);
        let trimmed = ple_to_difference_graph(&p, &classes, &Ple::new(vec![0, 2])).unwrap();
        assert!(trimmed.is_empty());
    }

    #[test]
    fn ple_graph_rejects_bad_order() {
        let (s2, _) = standard_example(2);
        let classes = HeightTwoClasses::of(&s2).unwrap();
        // a1 < b2 so b2 may not precede a1.
        assert!(matches!(
            ple_to_difference_graph(&s2, &classes, &Ple::new(vec![3, 0])),
            Err(GraphError::NotPle(3, 0))
        ));
    }

    #[test]
    fn cover_checks() {
        let k22 = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let whole = CoverFamily::new(vec![CoverMember::rect(vec![0, 1], vec![0, 1])]);
        let rep = verify_cover(&k22, &whole, CoverKind::Biclique).unwrap();
        assert_eq!(rep.max_mult, 1);
        assert_eq!(rep.total_vertices, 4);

        let h3 = DifferenceGraph::from_partition(&[3, 2, 1]).unwrap();
        let fig = CoverFamily::new(vec![
            CoverMember::rect(vec![0, 1, 2], vec![0]),
            CoverMember::rect(vec![0], vec![1, 2]),
            CoverMember::rect(vec![1], vec![1]),
        ]);
        let rep = verify_cover(&h3.to_graph(), &fig, CoverKind::Biclique).unwrap();
        assert_eq!(rep.max_mult, 2);

        let one = BipartiteGraph::new(1, 1, &[(0, 0)]).unwrap();
        assert_eq!(
            verify_cover(&one, &CoverFamily::default(), CoverKind::Biclique),
            Err(CoverViolation::UncoveredEdge { edge: (0, 0) })
        );
        let foreign = CoverFamily::new(vec![CoverMember::rect(vec![0], vec![0, 1])]);
        assert!(matches!(
            verify_cover(&BipartiteGraph::new(1, 2, &[(0, 0)]).unwrap(), &foreign, CoverKind::Biclique),
            Err(CoverViolation::ForeignEdge { .. })
        ));
    }

    #[test]
    fn difference_members_need_difference_kind() {
        let h = DifferenceGraph::from_partition(&[2, 1]).unwrap();
        let fam = CoverFamily::new(vec![h.as_member()]);
        assert!(verify_cover(&h.to_graph(), &fam, CoverKind::Difference).is_ok());
        assert!(matches!(
            verify_cover(&h.to_graph(), &fam, CoverKind::Biclique),
            Err(CoverViolation::Shape { .. })
        ));
        let bad = CoverFamily::new(vec![CoverMember::diff(vec![0, 1], vec![0, 1], vec![1, 2])]);
        assert!(matches!(
            verify_cover(&h.to_graph(), &bad, CoverKind::Difference),
            Err(CoverViolation::Shape { .. })
        ));
    }

    #[test]
    fn nestedness() {
        assert!(has_nested_rows(&[(0, 0), (0, 1), (1, 0)]));
        assert!(!has_nested_rows(&[(0, 1), (1, 0)]));
    }
}
