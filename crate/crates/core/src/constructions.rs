//! Constructive upper bounds. Every operation emits a witness that the
//! checkers in [`crate::realizer`] and [`crate::diffgraph`] accept.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::diffgraph::{
    critical_pair_graph, verify_cover, BipartiteGraph, CoverFamily, CoverKind, CoverMember,
    CoverReport, DifferenceGraph, GraphError, HeightTwoClasses,
};
use crate::poset::{Poset, PosetError};
use crate::realizer::{verify_local_realizer, LocalRealizer, Ple, RealizerError, Violation};
use crate::solvers::{exact_ldim, SolveBudget, SolveError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    Param(String),
    #[error("poset has height {height}, expected at most 2")]
    Height { height: usize },
    #[error("chain error: {0}")]
    Chain(String),
    #[error("internal error: augmented order is cyclic")]
    InternalCycle,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("poset has {size} elements, need at least {min}")]
    Size { size: usize, min: usize },
    #[error("input realizer is invalid: {0}")]
    InvalidInput(Violation),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Realizer(#[from] RealizerError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn check_realizer(p: &Poset, r: &LocalRealizer) -> Result<usize> {
    match verify_local_realizer(p, r)? {
        Ok(cert) => Ok(cert.mu),
        Err(v) => Err(ConstructionError::InvalidInput(v)),
    }
}

fn check_extension(p: &Poset, seq: &[usize], name: &str) -> Result<()> {
    if !p.is_linear_extension(seq) {
        return Err(ConstructionError::Param(format!("{name} is not a linear extension")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// biclique partitions and the height-two realizer

/// Default block size `max(1, floor(log2 a - 2 log2 log2 max(a, 4)))`.
pub fn default_block_size(a: usize) -> usize {
    let a = a.max(1) as f64;
    let raw = a.log2() - 2.0 * a.max(4.0).log2().log2();
    (raw.floor() as i64).max(1) as usize
}

/// Edge partition of `g` into bicliques: rows are cut into consecutive
/// blocks of `b`, and inside each block the columns are grouped by their
/// neighbourhood trace. Every column lies in at most `ceil(rows / b)`
/// members and every row in at most `2^(b-1)`.
pub fn block_trace_cover(g: &BipartiteGraph, b: usize) -> Result<CoverFamily> {
    if b == 0 {
        return Err(ConstructionError::Param("block size must be at least 1".into()));
    }
    let mut members = Vec::new();
    for start in (0..g.rows()).step_by(b) {
        let end = (start + b).min(g.rows());
        // Traces keyed by first appearance so output follows column order.
        let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in 0..g.cols() {
            let trace: Vec<usize> = (start..end).filter(|&r| g.has_edge(r, c)).collect();
            if trace.is_empty() {
                continue;
            }
            match index.get(&trace) {
                Some(&k) => groups[k].1.push(c),
                None => {
                    index.insert(trace.clone(), groups.len());
                    groups.push((trace, vec![c]));
                }
            }
        }
        members.extend(groups.into_iter().map(|(rows, cols)| CoverMember::rect(rows, cols)));
    }
    Ok(CoverFamily::new(members))
}

/// Output of [`height2_local_realizer_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Height2Construction {
    pub realizer: LocalRealizer,
    pub classes: HeightTwoClasses,
    pub block_size: usize,
    /// Block-trace cover of the critical-pair graph, in class indices.
    pub cover: CoverFamily,
    pub cover_report: CoverReport,
}

/// Local realizer of a poset of height at most two: two linear extensions
/// with reversed class orders plus one ple per biclique of a block-trace
/// cover of the critical-pair graph.
pub fn height2_local_realizer(p: &Poset) -> Result<LocalRealizer> {
    Ok(height2_local_realizer_with(p, None)?.realizer)
}

pub fn height2_local_realizer_with(p: &Poset, block_size: Option<usize>) -> Result<Height2Construction> {
    if p.is_empty() {
        return Err(ConstructionError::Param("empty poset".into()));
    }
    let height = p.height();
    if height > 2 {
        return Err(ConstructionError::Height { height });
    }
    let cpg = critical_pair_graph(p)?;
    let (a, b) = (&cpg.classes.a, &cpg.classes.b);
    let block_size = block_size.unwrap_or_else(|| default_block_size(a.len()));
    let cover = block_trace_cover(&cpg.graph, block_size)?;
    let cover_report = verify_cover(&cpg.graph, &cover, CoverKind::Biclique)
        .expect("block-trace cover is a biclique partition");

    let l1: Vec<usize> = a.iter().chain(b).copied().collect();
    let l2: Vec<usize> = a.iter().rev().chain(b.iter().rev()).copied().collect();
    let mut ples = vec![Ple::new(l1.clone())];
    if l2 != l1 {
        ples.push(Ple::new(l2));
    }
    for m in &cover.members {
        let seq = m
            .cols
            .iter()
            .map(|&j| b[j])
            .chain(m.rows.iter().map(|&i| a[i]))
            .collect();
        ples.push(Ple::new(seq));
    }
    let realizer = LocalRealizer::new(p.len(), ples)?;
    Ok(Height2Construction {
        realizer,
        classes: cpg.classes,
        block_size,
        cover,
        cover_report,
    })
}

/// Local realizer of the split of a poset, with the bound it implies. The
/// realizer comes from the height-two construction at the block size that
/// minimises its frequency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBound {
    pub split: Poset,
    pub realizer: LocalRealizer,
    pub mu: usize,
    /// `2 * mu - 1`, an upper bound on the local dimension of the input.
    pub ldim_upper: usize,
}

pub fn ldim_bound_via_split(p: &Poset) -> Result<SplitBound> {
    if p.is_empty() {
        return Err(ConstructionError::Param("empty poset".into()));
    }
    let n = p.len();
    let q = Poset::from_predicate(2 * n, |x, y| x < n && y >= n && p.le(x, y - n));
    // Small splits are sensitive to the block size, so take the best one.
    let mut best: Option<LocalRealizer> = None;
    for b in 1..=n {
        let r = height2_local_realizer_with(&q, Some(b))?.realizer;
        if best.as_ref().is_none_or(|cur| r.mu() < cur.mu()) {
            best = Some(r);
        }
    }
    let realizer = best.expect("n >= 1");
    let mu = realizer.mu();
    Ok(SplitBound {
        split: q,
        realizer,
        mu,
        ldim_upper: 2 * mu - 1,
    })
}

// ---------------------------------------------------------------------------
// products

/// Realizer of `P x Q` (pair `(x, y)` has id `x * |Q| + y`) with
/// `mu((x, y)) = mu(x, rp) + mu(y, rq)` for every element.
pub fn product_realizer(
    p: &Poset,
    q: &Poset,
    rp: &LocalRealizer,
    rq: &LocalRealizer,
    l0: &[usize],
    m0: &[usize],
) -> Result<LocalRealizer> {
    check_realizer(p, rp)?;
    check_realizer(q, rq)?;
    check_extension(p, l0, "L0")?;
    check_extension(q, m0, "M0")?;
    let m = q.len();
    let mut ples = Vec::with_capacity(rp.len() + rq.len());
    for li in rp.ples() {
        let seq = li
            .elements()
            .iter()
            .flat_map(|&a| m0.iter().map(move |&b| a * m + b))
            .collect();
        ples.push(Ple::new(seq));
    }
    for mj in rq.ples() {
        let seq = mj
            .elements()
            .iter()
            .flat_map(|&b| l0.iter().map(move |&a| a * m + b))
            .collect();
        ples.push(Ple::new(seq));
    }
    Ok(LocalRealizer::new(p.len() * m, ples)?)
}

/// Realizer of the Boolean lattice on `n` atoms with frequency `n`
/// everywhere, by iterated products of 2-chains. Ids are subset bitmasks as
/// in [`crate::generators::boolean_lattice`].
pub fn boolean_lattice_realizer(n: usize) -> Result<LocalRealizer> {
    if n == 0 || n > 12 {
        return Err(ConstructionError::Param(format!("need 1 <= n <= 12, got {n}")));
    }
    let two = Poset::chain(2);
    let r2 = LocalRealizer::new(2, vec![Ple::new(vec![0, 1])])?;
    let mut p = two.clone();
    let mut r = r2.clone();
    for _ in 1..n {
        let l0 = p.topological_order();
        let next = r.clone();
        r = product_realizer(&p, &two, &next, &r2, &l0, &[0, 1])?;
        p = Poset::from_predicate(p.len() * 2, |u, v| u != v && u & v == u);
    }
    // Iterated product ids put the first factor in the top bit.
    let map: Vec<usize> = (0..1usize << n)
        .map(|id| (0..n).filter(|b| id >> b & 1 == 1).map(|b| 1 << (n - 1 - b)).sum())
        .collect();
    Ok(r.lift(&map, 1 << n))
}

// ---------------------------------------------------------------------------
// Bogart extensions and removals

/// A linear extension with every `x` in `ca` below all elements incomparable
/// to it and every `y` in `cb` above all elements incomparable to it.
pub fn bogart_extension(p: &Poset, ca: &[usize], cb: &[usize]) -> Result<Ple> {
    for &x in ca.iter().chain(cb) {
        if x >= p.len() {
            return Err(PosetError::IdRange { id: x + 1, n: p.len() }.into());
        }
    }
    if !p.is_chain(ca) {
        return Err(ConstructionError::Chain(format!("{} is not a chain", ids(ca))));
    }
    if !p.is_chain(cb) {
        return Err(ConstructionError::Chain(format!("{} is not a chain", ids(cb))));
    }
    for &x in ca {
        if let Some(&y) = cb.iter().find(|&&y| !p.incomparable(x, y)) {
            return Err(ConstructionError::Chain(format!(
                "{} and {} are not incomparable",
                x + 1,
                y + 1
            )));
        }
    }
    let mut rels: Vec<(usize, usize)> = p.relations().collect();
    for &x in ca {
        rels.extend((0..p.len()).filter(|&z| p.incomparable(x, z)).map(|z| (x, z)));
    }
    for &y in cb {
        rels.extend((0..p.len()).filter(|&z| p.incomparable(z, y)).map(|z| (z, y)));
    }
    let augmented = Poset::new(p.len(), &rels).map_err(|_| ConstructionError::InternalCycle)?;
    Ok(Ple::new(augmented.topological_order()))
}

fn ids(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// The four removal rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Removal {
    /// Two chains, every element of one incomparable to every element of
    /// the other; local dimension grows by at most 2.
    TwoChains { c1: Vec<usize>, c2: Vec<usize> },
    /// One chain; local dimension grows by at most 2.
    OneChain { c: Vec<usize> },
    /// `x` minimal, `y` maximal, `x || y`; grows by at most 1.
    MinMaxPair { x: usize, y: usize },
    /// `x` minimal, `y` maximal, `x < y`, nothing incomparable to both;
    /// grows by at most 1.
    SpecialPair { x: usize, y: usize },
}

impl Removal {
    pub fn removed(&self) -> Vec<usize> {
        let mut out = match self {
            Removal::TwoChains { c1, c2 } => c1.iter().chain(c2).copied().collect(),
            Removal::OneChain { c } => c.clone(),
            Removal::MinMaxPair { x, y } | Removal::SpecialPair { x, y } => vec![*x, *y],
        };
        out.sort_unstable();
        out
    }

    /// The bound on how much the frequency may grow.
    pub fn max_delta(&self) -> usize {
        match self {
            Removal::TwoChains { .. } | Removal::OneChain { .. } => 2,
            _ => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Removal::TwoChains { .. } => "two-chain",
            Removal::OneChain { .. } => "one-chain",
            Removal::MinMaxPair { .. } => "minmax-pair",
            Removal::SpecialPair { .. } => "special-pair",
        }
    }

    /// Checks the rule's hypotheses on `p`.
    pub fn check(&self, p: &Poset) -> Result<()> {
        let n = p.len();
        let removed = self.removed();
        if let Some(&x) = removed.iter().find(|&&x| x >= n) {
            return Err(PosetError::IdRange { id: x + 1, n }.into());
        }
        if removed.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConstructionError::Precondition("removed elements must be distinct".into()));
        }
        if removed.len() >= n {
            return Err(ConstructionError::Precondition("the remaining poset must be nonempty".into()));
        }
        let pre = |ok: bool, clause: &str| {
            if ok {
                Ok(())
            } else {
                Err(ConstructionError::Precondition(clause.to_string()))
            }
        };
        match self {
            Removal::TwoChains { c1, c2 } => {
                pre(p.is_chain(c1), "C1 must be a chain")?;
                pre(p.is_chain(c2), "C2 must be a chain")?;
                pre(
                    c1.iter().all(|&x| c2.iter().all(|&y| p.incomparable(x, y))),
                    "every element of C1 must be incomparable to every element of C2",
                )
            }
            Removal::OneChain { c } => pre(p.is_chain(c), "C must be a chain"),
            Removal::MinMaxPair { x, y } => {
                pre(n >= 3, "the poset must have at least 3 elements")?;
                pre(p.below(*x).is_empty(), "x must be minimal")?;
                pre(p.above(*y).is_empty(), "y must be maximal")?;
                pre(p.incomparable(*x, *y), "x and y must be incomparable")
            }
            Removal::SpecialPair { x, y } => {
                pre(n >= 3, "the poset must have at least 3 elements")?;
                pre(p.below(*x).is_empty(), "x must be minimal")?;
                pre(p.above(*y).is_empty(), "y must be maximal")?;
                pre(p.lt(*x, *y), "x must be below y")?;
                pre(
                    (0..n).all(|z| !(p.incomparable(z, *x) && p.incomparable(z, *y))),
                    "no element may be incomparable to both x and y",
                )
            }
        }
    }
}

/// A local realizer of `p` built from one of the reduced poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalOutcome {
    pub removal: Removal,
    pub realizer: LocalRealizer,
    pub reduced_mu: usize,
    pub mu: usize,
}

impl RemovalOutcome {
    pub fn delta(&self) -> isize {
        self.mu as isize - self.reduced_mu as isize
    }
}

/// The reduced poset and its `new id -> old id` map.
pub fn reduce(p: &Poset, removal: &Removal) -> (Poset, Vec<usize>) {
    p.remove(&removal.removed())
}

/// Applies a removal rule: `reduced` must be a local realizer of
/// `reduce(p, removal).0`.
pub fn removal_construction(
    p: &Poset,
    removal: &Removal,
    reduced: &LocalRealizer,
) -> Result<RemovalOutcome> {
    removal.check(p)?;
    let (q, map) = reduce(p, removal);
    let reduced_mu = check_realizer(&q, reduced)?;
    let lifted = reduced.lift(&map, p.len());
    let ples = match removal {
        Removal::TwoChains { c1, c2 } => {
            let mut ples = lifted.into_ples();
            ples.push(bogart_extension(p, c1, c2)?);
            ples.push(bogart_extension(p, c2, c1)?);
            ples
        }
        Removal::OneChain { c } => {
            let mut ples = lifted.into_ples();
            ples.push(bogart_extension(p, c, &[])?);
            ples.push(bogart_extension(p, &[], c)?);
            ples
        }
        Removal::MinMaxPair { x, y } => {
            let mut ples = wrap_anchor(lifted, map[0], *x, *y);
            // y before its incomparables, x after its incomparables: this
            // reverses every pair the wrapped ples list the other way.
            ples.push(bogart_extension(p, &[*y], &[*x])?);
            ples
        }
        Removal::SpecialPair { x, y } => {
            let mut ples = wrap_anchor(lifted, map[0], *x, *y);
            let ix: Vec<usize> = (0..p.len()).filter(|&z| p.incomparable(z, *x)).collect();
            let iy: Vec<usize> = (0..p.len()).filter(|&z| p.incomparable(z, *y)).collect();
            if !ix.is_empty() {
                let mut seq = topo_within(p, &ix);
                seq.push(*x);
                ples.push(Ple::new(seq));
            }
            if !iy.is_empty() {
                let mut seq = vec![*y];
                seq.extend(topo_within(p, &iy));
                ples.push(Ple::new(seq));
            }
            ples
        }
    };
    let realizer = LocalRealizer::new(p.len(), ples)?;
    let mu = realizer.mu();
    Ok(RemovalOutcome {
        removal: removal.clone(),
        realizer,
        reduced_mu,
        mu,
    })
}

/// Puts `x` in front of and `y` behind every ple containing `anchor`.
fn wrap_anchor(r: LocalRealizer, anchor: usize, x: usize, y: usize) -> Vec<Ple> {
    r.into_ples()
        .into_iter()
        .map(|ple| {
            if ple.contains(anchor) {
                let mut seq = vec![x];
                seq.extend_from_slice(ple.elements());
                seq.push(y);
                Ple::new(seq)
            } else {
                ple
            }
        })
        .collect()
}

/// `elements` sorted by a linear extension of the induced order.
fn topo_within(p: &Poset, elements: &[usize]) -> Vec<usize> {
    p.induced(elements)
        .topological_order()
        .into_iter()
        .map(|i| elements[i])
        .collect()
}

/// A local realizer of `p`: exact when the solver fits the budget, else one
/// linear extension plus a reversing pair for each incomparable pair it
/// lists in order.
pub fn realizer_within_budget(p: &Poset, budget: &SolveBudget) -> LocalRealizer {
    match exact_ldim(p, budget) {
        Ok(res) => res.witness,
        Err(_) => {
            let l0 = p.topological_order();
            let mut ples = vec![Ple::new(l0.clone())];
            for (i, &x) in l0.iter().enumerate() {
                for &y in &l0[i + 1..] {
                    if p.incomparable(x, y) {
                        ples.push(Ple::new(vec![y, x]));
                    }
                }
            }
            LocalRealizer::new(p.len(), ples).expect("ids in range")
        }
    }
}

/// Exact local dimensions before and after a removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LdimCertificate {
    pub ldim: usize,
    pub reduced_ldim: usize,
    pub allowed: usize,
}

impl LdimCertificate {
    pub fn holds(&self) -> bool {
        self.ldim <= self.reduced_ldim + self.allowed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRemoval {
    pub x: usize,
    pub y: usize,
    pub outcome: RemovalOutcome,
    /// Present when both exact solves fit the budget.
    pub certificate: std::result::Result<LdimCertificate, SolveError>,
}

/// The removal rule that applies to a poset of height at most two.
pub fn choose_height2_pair(p: &Poset) -> Result<Removal> {
    let n = p.len();
    if n < 3 {
        return Err(ConstructionError::Size { size: n, min: 3 });
    }
    let height = p.height();
    if height > 2 {
        return Err(ConstructionError::Height { height });
    }
    let mins = p.minimal_elements();
    let maxs = p.maximal_elements();
    for &x in &mins {
        for &y in &maxs {
            if x != y && p.incomparable(x, y) {
                return Ok(Removal::MinMaxPair { x, y });
            }
        }
    }
    // Every minimal element is below every maximal one.
    let classes = HeightTwoClasses::of(p)?;
    Ok(Removal::SpecialPair {
        x: classes.a[0],
        y: classes.b[0],
    })
}

/// A pair whose removal lowers the local dimension by at most one, for a
/// poset of height at most two, with the constructive realizer and (within
/// budget) an exact certificate.
pub fn removable_pair_height2(p: &Poset, budget: &SolveBudget) -> Result<PairRemoval> {
    let removal = choose_height2_pair(p)?;
    let (q, _) = reduce(p, &removal);
    let reduced = realizer_within_budget(&q, budget);
    let outcome = removal_construction(p, &removal, &reduced)?;
    let certificate = certify(p, &q, 1, budget);
    let (x, y) = match removal {
        Removal::MinMaxPair { x, y } | Removal::SpecialPair { x, y } => (x, y),
        _ => unreachable!(),
    };
    Ok(PairRemoval {
        x,
        y,
        outcome,
        certificate,
    })
}

fn certify(
    p: &Poset,
    q: &Poset,
    allowed: usize,
    budget: &SolveBudget,
) -> std::result::Result<LdimCertificate, SolveError> {
    Ok(LdimCertificate {
        ldim: exact_ldim(p, budget)?.value,
        reduced_ldim: exact_ldim(q, budget)?.value,
        allowed,
    })
}

/// Four elements whose removal lowers the local dimension by at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleRemoval {
    /// Removed elements, ascending, in the input's ids.
    pub removed: Vec<usize>,
    /// Removal steps, each in the ids of the poset it applies to.
    pub steps: Vec<Removal>,
    pub realizer: LocalRealizer,
    pub reduced_mu: usize,
    pub mu: usize,
    pub certificate: std::result::Result<LdimCertificate, SolveError>,
}

/// Picks the removal steps for a poset with at least five elements.
pub fn choose_quadruple(p: &Poset) -> Result<Vec<Removal>> {
    let n = p.len();
    if n < 5 {
        return Err(ConstructionError::Size { size: n, min: 5 });
    }
    let height = p.height();
    if height >= 4 {
        let c = p.longest_chain()[..4].to_vec();
        return Ok(vec![Removal::OneChain { c }]);
    }
    if height <= 2 {
        let first = choose_height2_pair(p)?;
        let (q, _) = reduce(p, &first);
        return Ok(vec![first, choose_height2_pair(&q)?]);
    }
    let chains = three_chains(p);
    for &(a, b, c) in &chains {
        if let Some(z) = (0..n).find(|&z| p.incomparable(z, a) && p.incomparable(z, c)) {
            return Ok(vec![Removal::TwoChains {
                c1: vec![a, b, c],
                c2: vec![z],
            }]);
        }
    }
    let (a0, _, c0) = chains[0];
    let first = Removal::SpecialPair { x: a0, y: c0 };
    let (q, _) = reduce(p, &first);
    let second = if q.height() <= 2 {
        choose_height2_pair(&q)?
    } else {
        let (a1, _, c1) = three_chains(&q)[0];
        Removal::SpecialPair { x: a1, y: c1 }
    };
    Ok(vec![first, second])
}

fn three_chains(p: &Poset) -> Vec<(usize, usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in p.above(a).iter() {
            for c in p.above(b).iter() {
                out.push((a, b, c));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn removable_quadruple(p: &Poset, budget: &SolveBudget) -> Result<QuadrupleRemoval> {
    let steps = choose_quadruple(p)?;
    // Posets along the way, with maps back to the input's ids.
    let mut stages = vec![(p.clone(), (0..p.len()).collect::<Vec<_>>())];
    for step in &steps {
        let (cur, to_orig) = stages.last().unwrap();
        let (next, map) = reduce(cur, step);
        let next_orig = map.iter().map(|&i| to_orig[i]).collect();
        stages.push((next, next_orig));
    }
    let (last, kept) = stages.last().unwrap();
    let mut realizer = realizer_within_budget(last, budget);
    let reduced_mu = realizer.mu();
    for (k, step) in steps.iter().enumerate().rev() {
        realizer = removal_construction(&stages[k].0, step, &realizer)?.realizer;
    }
    let mut removed: Vec<usize> = (0..p.len()).filter(|x| !kept.contains(x)).collect();
    removed.sort_unstable();
    let certificate = certify(p, last, 2, budget);
    Ok(QuadrupleRemoval {
        removed,
        steps,
        mu: realizer.mu(),
        realizer,
        reduced_mu,
        certificate,
    })
}

// ---------------------------------------------------------------------------
// Young-diagram covers

/// Biclique partition of a difference graph with multiplicity at most
/// `ceil(log2(m + 1))`, `m` the row count: take the top half of the rows
/// against the columns they all share, then recurse on the two leftover
/// diagrams.
pub fn young_cover(h: &DifferenceGraph) -> CoverFamily {
    let f = h.degrees();
    let mut out = Vec::new();
    young_rec(f, 0, f.len(), 0, &mut out);
    CoverFamily::new(out)
}

fn young_rec(f: &[usize], lo: usize, hi: usize, c0: usize, out: &mut Vec<CoverMember>) {
    let hi = (lo..hi).find(|&i| f[i] <= c0).unwrap_or(hi);
    let m = hi - lo;
    if m == 0 {
        return;
    }
    let h = m.div_ceil(2);
    let width = f[lo + h - 1];
    out.push(CoverMember::rect((lo..lo + h).collect(), (c0..width).collect()));
    young_rec(f, lo + h, hi, c0, out);
    young_rec(f, lo, lo + h - 1, width, out);
}

/// Cover of the staircase `H_n`, `n = 2^k - 1`, with its verified profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseCover {
    pub k: usize,
    pub n: usize,
    pub graph: BipartiteGraph,
    pub family: CoverFamily,
    pub report: CoverReport,
    /// Whether the maximum multiplicity is at most `log2(n + 1) - 1`.
    pub meets_target: bool,
}

/// Staircase graph `H_n` (row `i` adjacent to columns `0..n - i`).
pub fn staircase_graph(n: usize) -> BipartiteGraph {
    DifferenceGraph::from_partition(&(1..=n).rev().collect::<Vec<_>>())
        .expect("staircase is a partition")
        .to_graph()
}

type Rects = Vec<(Vec<usize>, Vec<usize>)>;

fn span(a: usize, b: usize) -> Vec<usize> {
    (a..b).collect()
}

fn staircase_rects(k: usize) -> Rects {
    match k {
        2 => vec![(span(0, 3), span(0, 1)), (span(0, 1), span(1, 3)), (span(1, 2), span(1, 2))],
        3 => vec![
            (span(0, 3), span(0, 5)),
            (span(0, 1), span(5, 7)),
            (span(1, 2), span(5, 6)),
            (span(3, 5), span(0, 3)),
            (span(3, 4), span(3, 4)),
            (span(5, 7), span(0, 1)),
            (span(5, 6), span(1, 2)),
        ],
        _ => {
            let n: usize = (1 << k) - 1;
            let s = n.div_ceil(2);
            let mut sub = staircase_rects(k - 1);
            let (rmax, cmax) = rect_maxima(&sub, s - 1);
            // The sub-cover's rows meet the square, so they take the side
            // with the smaller multiplicity.
            if rmax > cmax {
                sub = sub.into_iter().map(|(r, c)| (c, r)).collect();
            }
            let shift = |xs: &[usize]| xs.iter().map(|x| x + s).collect::<Vec<_>>();
            let mut out = vec![(span(0, s), span(0, s))];
            out.extend(sub.iter().map(|(r, c)| (r.clone(), shift(c))));
            // Transposed copy below the square: its columns meet the square.
            out.extend(sub.iter().map(|(r, c)| (shift(c), r.clone())));
            out
        }
    }
}

fn rect_maxima(rects: &Rects, n: usize) -> (usize, usize) {
    let mut rows = vec![0; n];
    let mut cols = vec![0; n];
    for (r, c) in rects {
        r.iter().for_each(|&i| rows[i] += 1);
        c.iter().for_each(|&j| cols[j] += 1);
    }
    (
        rows.into_iter().max().unwrap_or(0),
        cols.into_iter().max().unwrap_or(0),
    )
}

pub fn staircase_cover(k: usize) -> Result<StaircaseCover> {
    if !(2..=12).contains(&k) {
        return Err(ConstructionError::Param(format!("need 2 <= k <= 12, got {k}")));
    }
    let n = (1 << k) - 1;
    let graph = staircase_graph(n);
    let members = staircase_rects(k)
        .into_iter()
        .map(|(r, c)| CoverMember::rect(r, c))
        .collect();
    let family = CoverFamily::new(members);
    let report = verify_cover(&graph, &family, CoverKind::Biclique)
        .map_err(|v| ConstructionError::Param(format!("staircase cover failed to verify: {v}")))?;
    let meets_target = report.max_mult < k;
    Ok(StaircaseCover {
        k,
        n,
        graph,
        family,
        report,
        meets_target,
    })
}

// ---------------------------------------------------------------------------
// Boolean lattice lower-bound arithmetic

/// Exact evaluation of the counting inequality behind the Boolean-lattice
/// lower bound, at `l = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    /// `ceil(n / e)`.
    pub k: usize,
    /// `ceil(2 ln n)`.
    pub b: usize,
    /// `(n / b) * C(n - b, k - b)`.
    pub lhs: BigRational,
    /// `C(n, k)`.
    pub rhs: BigRational,
    /// Whether `C(n, k) / C(n - b, k - b) >= (n / k)^b`.
    pub chain_holds: bool,
    /// `k < b`, so `C(n - b, k - b) = 0` and the chain holds vacuously.
    pub degenerate: bool,
    /// `n / (2 e ln n)`.
    pub bound_value: f64,
}

impl BoundReport {
    /// `rhs / lhs`: the least `l` the inequality allows, if `lhs > 0`.
    pub fn ell_lower(&self) -> Option<BigRational> {
        (!self.lhs.is_zero()).then(|| &self.rhs / &self.lhs)
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn boolean_lb_report(n: usize) -> Result<BoundReport> {
    if !(8..=100_000).contains(&n) {
        return Err(ConstructionError::Param(format!("need 8 <= n <= 100000, got {n}")));
    }
    let e = std::f64::consts::E;
    let ln = (n as f64).ln();
    let k = (n as f64 / e).ceil() as usize;
    let b = (2.0 * ln).ceil() as usize;
    let big = |x: BigUint| BigInt::from(x);
    let tail = if k >= b { binomial(n - b, k - b) } else { BigUint::zero() };
    let full = binomial(n, k);
    let lhs = BigRational::new(big(BigUint::from(n) * &tail), BigInt::from(b));
    let rhs = BigRational::from_integer(big(full.clone()));
    // C(n,k) * k^b >= n^b * C(n-b,k-b), cross-multiplied.
    let chain_holds = full * BigUint::from(k).pow(b as u32) >= BigUint::from(n).pow(b as u32) * tail;
    Ok(BoundReport {
        n,
        k,
        b,
        lhs,
        rhs,
        chain_holds,
        degenerate: k < b,
        bound_value: n as f64 / (2.0 * e * ln),
    })
}

fn approx(r: &BigRational) -> String {
    match r.to_f64() {
        Some(v) if v.is_finite() => format!("{v:.6e}"),
        _ => "inf".into(),
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ell = self.ell_lower().map_or("undefined".to_string(), |r| approx(&r));
        let rows = [
            ("n", self.n.to_string()),
            ("k", self.k.to_string()),
            ("b", self.b.to_string()),
            ("lhs", approx(&self.lhs)),
            ("rhs", approx(&self.rhs)),
            ("ell_lower", ell),
            ("chain_holds", self.chain_holds.to_string()),
            ("degenerate", self.degenerate.to_string()),
            ("bound_value", format!("{:.4}", self.bound_value)),
        ];
        for (key, value) in rows {
            writeln!(f, "{key:<12} {value}")?;
        }
        Ok(())
    }
}
