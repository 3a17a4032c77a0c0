//! Exact solvers for dim, ldim, lbc, ldc and tdc on small instances.
//!
//! Every solver returns a witness that re-verifies through the checkers in
//! [`crate::realizer`] and [`crate::diffgraph`] and attains the reported value.
//! Budgets are hard: exceeding one is an error, never a truncated answer.
//!
//! `exact_ldim` and `exact_cover_number` search by growing members: each
//! unmet requirement is met either by inserting the missing element(s) into a
//! member already chosen or by opening a new two-element member. Any optimal
//! family can be reached this way (each partial member stays a subsequence of
//! one optimal member), so the frequency bound never cuts off an optimum.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bits::BitSet;
use crate::diffgraph::{BipartiteGraph, CoverFamily, CoverMember};
use crate::poset::{linear_extensions, Poset};
use crate::realizer::{LocalRealizer, Ple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance size {size} exceeds the budget of {max}")]
    BudgetExceeded { size: usize, max: usize },
    #[error("node limit of {limit} reached")]
    NodeLimit { limit: u64 },
    #[error("time limit of {limit_ms} ms reached")]
    Timeout { limit_ms: u128 },
    #[error("the empty poset has no realizer")]
    EmptyPoset,
}

/// Limits for one solve call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    /// Elements for poset solvers, edges for cover solvers.
    pub max_size: usize,
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
}

impl SolveBudget {
    pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

    pub fn dim() -> Self {
        Self::with_size(8)
    }

    pub fn ldim() -> Self {
        Self::with_size(6)
    }

    pub fn cover() -> Self {
        Self::with_size(20)
    }

    pub fn with_size(max_size: usize) -> Self {
        SolveBudget {
            max_size,
            node_limit: Self::DEFAULT_NODE_LIMIT,
            time_limit: None,
        }
    }

    fn check_size(&self, size: usize) -> Result<(), SolveError> {
        if size > self.max_size {
            return Err(SolveError::BudgetExceeded {
                size,
                max: self.max_size,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub stats: SolveStats,
}

struct Meter {
    nodes: u64,
    limit: u64,
    start: Instant,
    time_limit: Option<Duration>,
}

impl Meter {
    fn new(budget: &SolveBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            start: Instant::now(),
            time_limit: budget.time_limit,
        }
    }

    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(SolveError::NodeLimit { limit: self.limit });
        }
        if let Some(t) = self.time_limit {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > t {
                return Err(SolveError::Timeout {
                    limit_ms: t.as_millis(),
                });
            }
        }
        Ok(())
    }

    fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

// ---------------------------------------------------------------------------
// dim

/// Dimension by minimum set cover of Inc(P) with linear extensions.
pub fn exact_dim(p: &Poset, budget: &SolveBudget) -> Result<SolveResult<Vec<Ple>>, SolveError> {
    if p.is_empty() {
        return Err(SolveError::EmptyPoset);
    }
    budget.check_size(p.len())?;
    let mut meter = Meter::new(budget);
    let exts = linear_extensions(p);
    let reqs = p.incomparable_pairs();
    if reqs.is_empty() {
        return Ok(SolveResult {
            value: 1,
            witness: vec![Ple::new(exts[0].clone())],
            stats: meter.stats(),
        });
    }

    // Requirement (x, y) is met by an extension that lists y before x.
    let mut sets: Vec<(BitSet, usize)> = Vec::new();
    let mut seen = HashSet::new();
    for (e, ext) in exts.iter().enumerate() {
        let mut pos = vec![0; p.len()];
        for (i, &x) in ext.iter().enumerate() {
            pos[x] = i;
        }
        let mask = BitSet::from_indices(
            reqs.len(),
            reqs.iter()
                .enumerate()
                .filter(|(_, &(x, y))| pos[y] < pos[x])
                .map(|(r, _)| r),
        );
        if seen.insert(mask.clone()) {
            sets.push((mask, e));
        }
    }
    // Drop extensions whose reversal set is strictly contained in another's.
    let maximal: Vec<(BitSet, usize)> = sets
        .iter()
        .filter(|(m, _)| !sets.iter().any(|(o, _)| o != m && m.is_subset(o)))
        .cloned()
        .collect();

    let all = BitSet::from_indices(reqs.len(), 0..reqs.len());
    for k in 1.. {
        let mut chosen = Vec::new();
        if cover_dfs(&maximal, &all, k, &mut chosen, &mut meter)? {
            let witness = chosen.iter().map(|&s| Ple::new(exts[maximal[s].1].clone())).collect();
            return Ok(SolveResult {
                value: k,
                witness,
                stats: meter.stats(),
            });
        }
    }
    unreachable!()
}

fn cover_dfs(
    sets: &[(BitSet, usize)],
    uncovered: &BitSet,
    k: usize,
    chosen: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<bool, SolveError> {
    meter.tick()?;
    if uncovered.is_empty() {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    // Branch on the uncovered requirement met by the fewest sets.
    let mut best: Option<(usize, Vec<usize>)> = None;
    for r in uncovered.iter() {
        let cands: Vec<usize> = (0..sets.len()).filter(|&s| sets[s].0.contains(r)).collect();
        if best.as_ref().is_none_or(|b| cands.len() < b.1.len()) {
            best = Some((r, cands));
        }
    }
    let (_, cands) = best.unwrap();
    for s in cands {
        let mut rest = uncovered.clone();
        for r in sets[s].0.iter() {
            rest.remove(r);
        }
        chosen.push(s);
        if cover_dfs(sets, &rest, k - 1, chosen, meter)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// ldim

/// Local dimension by iterative deepening on the target frequency.
pub fn exact_ldim(p: &Poset, budget: &SolveBudget) -> Result<SolveResult<LocalRealizer>, SolveError> {
    if p.is_empty() {
        return Err(SolveError::EmptyPoset);
    }
    budget.check_size(p.len())?;
    let mut meter = Meter::new(budget);
    let n = p.len();
    if n == 1 {
        let r = LocalRealizer::new(1, vec![Ple::new(vec![0])]).expect("valid singleton");
        return Ok(SolveResult {
            value: 1,
            witness: r,
            stats: meter.stats(),
        });
    }
    // Requirement (x, y): some ple lists x before y.
    let reqs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && !p.lt(y, x))
        .collect();
    let start = if p.incomparable_pairs().is_empty() { 1 } else { 2 };
    for target in start.. {
        let mut search = PleSearch {
            p,
            reqs: &reqs,
            target,
            ples: Vec::new(),
            freq: vec![0; n],
            before: vec![vec![0; n]; n],
            failed: HashSet::new(),
        };
        if search.dfs(&mut meter)? {
            let mut ples: Vec<Ple> = Vec::new();
            for seq in search.ples {
                let ple = Ple::new(seq);
                if !ples.contains(&ple) {
                    ples.push(ple);
                }
            }
            let witness = LocalRealizer::new(n, ples).expect("search keeps ids valid");
            debug_assert_eq!(witness.mu(), target);
            return Ok(SolveResult {
                value: witness.mu(),
                witness,
                stats: meter.stats(),
            });
        }
    }
    unreachable!()
}

struct PleSearch<'a> {
    p: &'a Poset,
    reqs: &'a [(usize, usize)],
    target: usize,
    ples: Vec<Vec<usize>>,
    freq: Vec<usize>,
    /// `before[x][y]`: number of ples listing x before y.
    before: Vec<Vec<u32>>,
    failed: HashSet<Vec<Vec<usize>>>,
}

/// One way to extend the family: insert elements into ple `ple`
/// (`ple == ples.len()` opens a new ple). Insertions are applied in order.
#[derive(Clone, Debug)]
struct PleMove {
    ple: usize,
    inserts: [(usize, usize); 2],
    count: usize,
}

impl PleSearch<'_> {
    fn key(&self) -> Vec<Vec<usize>> {
        let mut k = self.ples.clone();
        k.sort_unstable();
        k
    }

    /// Positions `q` at which `e` may be inserted into `seq`.
    fn window(&self, seq: &[usize], e: usize) -> (usize, usize) {
        let lo = seq
            .iter()
            .rposition(|&z| self.p.lt(z, e))
            .map_or(0, |i| i + 1);
        let hi = seq.iter().position(|&z| self.p.lt(e, z)).unwrap_or(seq.len());
        (lo, hi)
    }

    fn moves_for(&self, x: usize, y: usize, out: &mut Vec<PleMove>) {
        let cap = |e: usize| self.freq[e] < self.target;
        for (k, seq) in self.ples.iter().enumerate() {
            if self.ples[..k].contains(seq) {
                continue;
            }
            let px = seq.iter().position(|&z| z == x);
            let py = seq.iter().position(|&z| z == y);
            match (px, py) {
                (Some(_), Some(_)) => {}
                (Some(i), None) if cap(y) => {
                    let (lo, hi) = self.window(seq, y);
                    for q in lo.max(i + 1)..=hi {
                        out.push(PleMove {
                            ple: k,
                            inserts: [(y, q), (0, 0)],
                            count: 1,
                        });
                    }
                }
                (None, Some(j)) if cap(x) => {
                    let (lo, hi) = self.window(seq, x);
                    for q in lo..=hi.min(j) {
                        out.push(PleMove {
                            ple: k,
                            inserts: [(x, q), (0, 0)],
                            count: 1,
                        });
                    }
                }
                (None, None) if cap(x) && cap(y) => {
                    let (ylo, yhi) = self.window(seq, y);
                    let (xlo, xhi) = self.window(seq, x);
                    // y goes to qy in the original sequence, then x to qx <= qy
                    // in the sequence that now contains y.
                    for qy in ylo..=yhi {
                        for qx in xlo..=xhi.min(qy) {
                            out.push(PleMove {
                                ple: k,
                                inserts: [(y, qy), (x, qx)],
                                count: 2,
                            });
                        }
                    }
                }
                _ => {}
            }
        }
        if cap(x) && cap(y) {
            out.push(PleMove {
                ple: self.ples.len(),
                inserts: [(x, 0), (y, 1)],
                count: 2,
            });
        }
    }

    fn insert(&mut self, k: usize, e: usize, q: usize) {
        let seq = &mut self.ples[k];
        for &z in &seq[..q] {
            self.before[z][e] += 1;
        }
        for &z in &seq[q..] {
            self.before[e][z] += 1;
        }
        seq.insert(q, e);
        self.freq[e] += 1;
    }

    fn remove(&mut self, k: usize, e: usize) {
        let seq = &mut self.ples[k];
        let q = seq.iter().position(|&z| z == e).expect("element present");
        seq.remove(q);
        for &z in &seq[..q] {
            self.before[z][e] -= 1;
        }
        for &z in &seq[q..] {
            self.before[e][z] -= 1;
        }
        self.freq[e] -= 1;
    }

    fn apply(&mut self, mv: &PleMove) {
        if mv.ple == self.ples.len() {
            self.ples.push(Vec::new());
        }
        for &(e, q) in &mv.inserts[..mv.count] {
            self.insert(mv.ple, e, q);
        }
    }

    fn undo(&mut self, mv: &PleMove) {
        for &(e, _) in mv.inserts[..mv.count].iter().rev() {
            self.remove(mv.ple, e);
        }
        if self.ples[mv.ple].is_empty() {
            self.ples.pop();
        }
    }

    fn dfs(&mut self, meter: &mut Meter) -> Result<bool, SolveError> {
        meter.tick()?;
        let mut best: Option<Vec<PleMove>> = None;
        let mut buf = Vec::new();
        for &(x, y) in self.reqs {
            if self.before[x][y] > 0 {
                continue;
            }
            buf.clear();
            self.moves_for(x, y, &mut buf);
            if best.as_ref().is_none_or(|b| buf.len() < b.len()) {
                best = Some(buf.clone());
                if buf.is_empty() {
                    break;
                }
            }
        }
        let Some(moves) = best else {
            return Ok(true);
        };
        if moves.is_empty() {
            return Ok(false);
        }
        let key = self.key();
        if self.failed.contains(&key) {
            return Ok(false);
        }
        for mv in &moves {
            self.apply(mv);
            if self.dfs(meter)? {
                return Ok(true);
            }
            self.undo(mv);
        }
        self.failed.insert(key);
        Ok(false)
    }
}

// ---------------------------------------------------------------------------
// cover numbers

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverObjective {
    /// Local complete bipartite cover number.
    Lbc,
    /// Local difference graph cover number.
    Ldc,
    /// Total difference graph cover number.
    Tdc,
}

impl CoverObjective {
    fn bicliques_only(self) -> bool {
        self == CoverObjective::Lbc
    }
}

/// Exact cover number with a witness family.
pub fn exact_cover_number(
    g: &BipartiteGraph,
    objective: CoverObjective,
    budget: &SolveBudget,
) -> Result<SolveResult<CoverFamily>, SolveError> {
    budget.check_size(g.edge_count())?;
    let mut meter = Meter::new(budget);
    if g.edge_count() == 0 {
        return Ok(SolveResult {
            value: 0,
            witness: CoverFamily::default(),
            stats: meter.stats(),
        });
    }
    let mut search = CoverSearch::new(g, objective);
    match objective {
        CoverObjective::Lbc | CoverObjective::Ldc => {
            for t in 1.. {
                search.reset(t);
                if search.dfs(&mut meter)? {
                    let witness = search.witness();
                    let value = local_value(g, &witness);
                    debug_assert_eq!(value, t);
                    return Ok(SolveResult {
                        value,
                        witness,
                        stats: meter.stats(),
                    });
                }
            }
            unreachable!()
        }
        CoverObjective::Tdc => {
            // Incumbent: the cheaper of all row stars or all column stars,
            // each of which is a biclique.
            let row_stars: Vec<CoverMember> = (0..g.rows())
                .filter(|&r| !g.row_neighbors(r).is_empty())
                .map(|r| CoverMember::rect(vec![r], g.row_neighbors(r).iter().collect()))
                .collect();
            let col_stars: Vec<CoverMember> = (0..g.cols())
                .filter(|&c| !g.col_neighbors(c).is_empty())
                .map(|c| CoverMember::rect(g.col_neighbors(c).iter().collect(), vec![c]))
                .collect();
            let cost = |m: &[CoverMember]| m.iter().map(CoverMember::vertex_count).sum::<usize>();
            let mut best = if cost(&row_stars) <= cost(&col_stars) {
                CoverFamily::new(row_stars)
            } else {
                CoverFamily::new(col_stars)
            };
            // Look for anything strictly cheaper until none exists.
            loop {
                let bound = best.total_vertices();
                search.reset(bound - 1);
                if search.dfs(&mut meter)? {
                    best = search.witness();
                    debug_assert!(best.total_vertices() < bound);
                } else {
                    break;
                }
            }
            Ok(SolveResult {
                value: best.total_vertices(),
                witness: best,
                stats: meter.stats(),
            })
        }
    }
}

fn local_value(g: &BipartiteGraph, f: &CoverFamily) -> usize {
    let (r, c) = f.multiplicities(g.rows(), g.cols());
    r.into_iter().chain(c).max().unwrap_or(0)
}

/// Members are vertex sequences; vertex `v < rows` is a row, otherwise the
/// column `v - rows`. A member's edges are the pairs (row, column) with the
/// column listed before the row. Biclique members keep every column before
/// every row.
struct CoverSearch<'a> {
    g: &'a BipartiteGraph,
    objective: CoverObjective,
    rows: usize,
    /// Per-vertex cap (local objectives) or total vertex cap (tdc).
    limit: usize,
    members: Vec<Vec<usize>>,
    mult: Vec<usize>,
    total: usize,
    covered: Vec<Vec<u32>>,
    failed: HashSet<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug)]
struct CoverMove {
    member: usize,
    inserts: [(usize, usize); 2],
    count: usize,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a BipartiteGraph, objective: CoverObjective) -> Self {
        CoverSearch {
            g,
            objective,
            rows: g.rows(),
            limit: 0,
            members: Vec::new(),
            mult: vec![0; g.vertex_count()],
            total: 0,
            covered: vec![vec![0; g.cols()]; g.rows()],
            failed: HashSet::new(),
        }
    }

    fn reset(&mut self, limit: usize) {
        self.limit = limit;
        self.members.clear();
        self.mult.iter_mut().for_each(|m| *m = 0);
        self.total = 0;
        self.covered.iter_mut().for_each(|r| r.iter_mut().for_each(|c| *c = 0));
        // For tdc a smaller limit only fails more, so failures stay valid.
        if self.objective != CoverObjective::Tdc {
            self.failed.clear();
        }
    }

    fn is_row(&self, v: usize) -> bool {
        v < self.rows
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        match (self.is_row(a), self.is_row(b)) {
            (true, false) => self.g.has_edge(a, b - self.rows),
            (false, true) => self.g.has_edge(b, a - self.rows),
            _ => true,
        }
    }

    fn room(&self, added: &[usize]) -> bool {
        match self.objective {
            CoverObjective::Tdc => self.total + added.len() <= self.limit,
            _ => added.iter().all(|&v| self.mult[v] < self.limit),
        }
    }

    /// Insertion points for vertex `v` into `seq`.
    fn slots(&self, seq: &[usize], v: usize) -> Vec<usize> {
        if self.objective.bicliques_only() {
            let ok = seq.iter().all(|&z| self.is_row(z) == self.is_row(v) || self.adjacent(z, v));
            if !ok {
                return Vec::new();
            }
            // Rows go last, columns first.
            return vec![if self.is_row(v) { seq.len() } else { 0 }];
        }
        let row = self.is_row(v);
        // Every column before a row must be adjacent to it.
        (0..=seq.len())
            .filter(|&q| {
                if row {
                    seq[..q].iter().all(|&z| self.is_row(z) || self.adjacent(z, v))
                } else {
                    seq[q..].iter().all(|&z| !self.is_row(z) || self.adjacent(z, v))
                }
            })
            .collect()
    }

    fn moves_for(&self, r: usize, c: usize, out: &mut Vec<CoverMove>) {
        let cv = self.rows + c;
        for (k, seq) in self.members.iter().enumerate() {
            if self.members[..k].contains(seq) {
                continue;
            }
            let pr = seq.iter().position(|&z| z == r);
            let pc = seq.iter().position(|&z| z == cv);
            match (pr, pc) {
                (Some(_), Some(_)) => {}
                (None, Some(j)) if self.room(&[r]) => {
                    for q in self.slots(seq, r).into_iter().filter(|&q| q > j) {
                        out.push(CoverMove {
                            member: k,
                            inserts: [(r, q), (0, 0)],
                            count: 1,
                        });
                    }
                }
                (Some(i), None) if self.room(&[cv]) => {
                    for q in self.slots(seq, cv).into_iter().filter(|&q| q <= i) {
                        out.push(CoverMove {
                            member: k,
                            inserts: [(cv, q), (0, 0)],
                            count: 1,
                        });
                    }
                }
                (None, None) if self.room(&[r, cv]) => {
                    for qc in self.slots(seq, cv) {
                        let mut with_c = seq.clone();
                        with_c.insert(qc, cv);
                        for qr in self.slots(&with_c, r).into_iter().filter(|&q| q > qc) {
                            out.push(CoverMove {
                                member: k,
                                inserts: [(cv, qc), (r, qr)],
                                count: 2,
                            });
                        }
                    }
                }
                _ => {}
            }
        }
        if self.room(&[r, cv]) {
            out.push(CoverMove {
                member: self.members.len(),
                inserts: [(cv, 0), (r, 1)],
                count: 2,
            });
        }
    }

    fn mark(&mut self, k: usize, v: usize, q: usize, delta: i32) {
        // Edges gained or lost by v sitting at position q of member k.
        let seq = &self.members[k];
        let rows = self.rows;
        let touched: Vec<(usize, usize)> = if v < rows {
            seq[..q].iter().filter(|&&z| z >= rows).map(|&z| (v, z - rows)).collect()
        } else {
            seq[q..].iter().filter(|&&z| z < rows).map(|&z| (z, v - rows)).collect()
        };
        for (r, c) in touched {
            let cell = &mut self.covered[r][c];
            *cell = (*cell as i32 + delta) as u32;
        }
    }

    fn apply(&mut self, mv: &CoverMove) {
        if mv.member == self.members.len() {
            self.members.push(Vec::new());
        }
        for &(v, q) in &mv.inserts[..mv.count] {
            self.members[mv.member].insert(q, v);
            self.mark(mv.member, v, q, 1);
            self.mult[v] += 1;
            self.total += 1;
        }
    }

    fn undo(&mut self, mv: &CoverMove) {
        for &(v, _) in mv.inserts[..mv.count].iter().rev() {
            let q = self.members[mv.member].iter().position(|&z| z == v).unwrap();
            self.mark(mv.member, v, q, -1);
            self.members[mv.member].remove(q);
            self.mult[v] -= 1;
            self.total -= 1;
        }
        if self.members[mv.member].is_empty() {
            self.members.pop();
        }
    }

    fn dfs(&mut self, meter: &mut Meter) -> Result<bool, SolveError> {
        meter.tick()?;
        let mut best: Option<Vec<CoverMove>> = None;
        let mut buf = Vec::new();
        for (r, c) in self.g.edges() {
            if self.covered[r][c] > 0 {
                continue;
            }
            buf.clear();
            self.moves_for(r, c, &mut buf);
            if best.as_ref().is_none_or(|b| buf.len() < b.len()) {
                best = Some(buf.clone());
                if buf.is_empty() {
                    break;
                }
            }
        }
        let Some(moves) = best else {
            return Ok(true);
        };
        if moves.is_empty() {
            return Ok(false);
        }
        let key = {
            let mut k = self.members.clone();
            k.sort_unstable();
            k
        };
        if self.failed.contains(&key) {
            return Ok(false);
        }
        for mv in &moves {
            self.apply(mv);
            if self.dfs(meter)? {
                return Ok(true);
            }
            self.undo(mv);
        }
        self.failed.insert(key);
        Ok(false)
    }

    /// Current members as a cover family, trimmed of isolated vertices.
    fn witness(&self) -> CoverFamily {
        let rows = self.rows;
        let mut members: Vec<CoverMember> = Vec::new();
        for seq in &self.members {
            let start = seq.iter().position(|&z| z >= rows).unwrap_or(seq.len());
            let end = seq.iter().rposition(|&z| z < rows).map_or(0, |i| i + 1);
            if start >= end {
                continue;
            }
            let core = &seq[start..end];
            let cols: Vec<usize> = core.iter().filter(|&&z| z >= rows).map(|&z| z - rows).collect();
            let mut rs: Vec<(usize, usize)> = Vec::new();
            let mut seen = 0;
            for &z in core {
                if z < rows {
                    rs.push((z, seen));
                } else {
                    seen += 1;
                }
            }
            let member = if self.objective.bicliques_only() {
                let mut r: Vec<usize> = rs.iter().map(|x| x.0).collect();
                let mut c = cols;
                r.sort_unstable();
                c.sort_unstable();
                CoverMember::rect(r, c)
            } else {
                rs.sort_by(|l, r| r.1.cmp(&l.1).then(l.0.cmp(&r.0)));
                CoverMember::diff(
                    rs.iter().map(|x| x.0).collect(),
                    cols,
                    rs.iter().map(|x| x.1).collect(),
                )
            };
            if !members.contains(&member) {
                members.push(member);
            }
        }
        CoverFamily::new(members)
    }
}
