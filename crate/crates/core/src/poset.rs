//! Finite strict partial orders.
//!
//! Elements are dense indices `0..n`. The strict relation is stored transitively
//! closed as one bit row per element in each direction, so every comparability
//! query is a single bit test. The text formats use 1-based ids; everything in
//! the library API is 0-based.

use crate::bits::BitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation closes a cycle through element {}", .element + 1)]
    Cycle { element: usize },
    #[error("element id {id} is outside 1..={n}")]
    IdRange { id: usize, n: usize },
    #[error("invalid parameters: {0}")]
    Param(String),
    #[error("poset would have {size} elements, above the cap of {cap}")]
    Size { size: usize, cap: usize },
    #[error("poset has height {height}, expected at most 2")]
    Height { height: usize },
    #[error("elements {} are not a chain", fmt_ids(.0))]
    NotAChain(Vec<usize>),
}

pub(crate) fn fmt_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A finite poset on `0..n`, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `up[i]` holds every `j` with `i < j`.
    up: Vec<BitSet>,
    /// `down[j]` holds every `i` with `i < j`.
    down: Vec<BitSet>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rels: Vec<(usize, usize)> = self.relations().collect();
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("lt", &rels)
            .finish()
    }
}

impl Poset {
    /// Builds the transitive closure of `relations` on `0..n`.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut up = vec![BitSet::new(n); n];
        for &(i, j) in relations {
            for id in [i, j] {
                if id >= n {
                    return Err(PosetError::IdRange { id: id + 1, n });
                }
            }
            if i == j {
                return Err(PosetError::Cycle { element: i });
            }
            up[i].insert(j);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        if let Some(element) = (0..n).find(|&i| up[i].contains(i)) {
            return Err(PosetError::Cycle { element });
        }
        Ok(Self::from_closed_rows(up))
    }

    fn from_closed_rows(up: Vec<BitSet>) -> Self {
        let n = up.len();
        let mut down = vec![BitSet::new(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        Poset { n, up, down }
    }

    /// Builds a poset from a comparison predicate that is already a strict
    /// order (transitive and irreflexive). Used by generators whose order is
    /// closed by construction; the result is revalidated in debug builds.
    pub(crate) fn from_predicate(n: usize, lt: impl Fn(usize, usize) -> bool) -> Self {
        let mut up = vec![BitSet::new(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if i != j && lt(i, j) {
                    row.insert(j);
                }
            }
        }
        let p = Self::from_closed_rows(up);
        debug_assert!(p.validate().is_ok());
        p
    }

    pub fn chain(n: usize) -> Self {
        Self::from_predicate(n, |i, j| i < j)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_predicate(n, |_, _| false)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    #[inline]
    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        i != j && !self.comparable(i, j)
    }

    /// Elements strictly above `i`.
    pub fn above(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// Elements strictly below `i`.
    pub fn below(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    /// Every strict relation `(i, j)` with `i < j`, in lexicographic order.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.up[i].iter().map(move |j| (i, j)))
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(BitSet::count).sum()
    }

    /// Covering pairs of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .filter(|&(i, j)| {
                let mut between = self.up[i].clone();
                between.intersect_with(&self.down[j]);
                between.is_empty()
            })
            .collect()
    }

    /// Inc(P): ordered incomparable pairs, lexicographic.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.incomparable(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// Number of elements on a longest chain (0 for the empty poset).
    pub fn height(&self) -> usize {
        self.levels().into_iter().max().map_or(0, |h| h + 1)
    }

    /// `levels()[i]` is the number of elements on a longest chain ending
    /// strictly below `i`.
    fn levels(&self) -> Vec<usize> {
        let order = self.topological_order();
        let mut level = vec![0usize; self.n];
        for &j in &order {
            level[j] = self.down[j].iter().map(|i| level[i] + 1).max().unwrap_or(0);
        }
        level
    }

    /// A longest chain, listed bottom to top. Among longest chains the one
    /// found first by a lowest-id greedy descent from the top is returned.
    pub fn longest_chain(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let level = self.levels();
        let top_level = *level.iter().max().unwrap();
        let mut cur = (0..self.n).find(|&i| level[i] == top_level).unwrap();
        let mut chain = vec![cur];
        while level[cur] > 0 {
            cur = self.down[cur]
                .iter()
                .find(|&i| level[i] + 1 == level[cur])
                .unwrap();
            chain.push(cur);
        }
        chain.reverse();
        chain
    }

    /// The unique linear extension that always takes the lowest available id.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = (0..self.n).map(|i| self.down[i].count()).collect();
        let mut ready: std::collections::BTreeSet<usize> =
            (0..self.n).filter(|&i| indeg[i] == 0).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(i) = ready.pop_first() {
            out.push(i);
            for j in self.up[i].iter() {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        out
    }

    /// Whether `seq` lists distinct elements consistently with the order.
    pub fn is_ple(&self, seq: &[usize]) -> bool {
        let mut seen = BitSet::new(self.n);
        for &x in seq {
            if x >= self.n || seen.contains(x) {
                return false;
            }
            // Nothing already placed may lie above x.
            let mut clash = self.up[x].clone();
            clash.intersect_with(&seen);
            if !clash.is_empty() {
                return false;
            }
            seen.insert(x);
        }
        true
    }

    pub fn is_linear_extension(&self, seq: &[usize]) -> bool {
        seq.len() == self.n && self.is_ple(seq)
    }

    pub fn is_chain(&self, elements: &[usize]) -> bool {
        elements.iter().enumerate().all(|(k, &x)| {
            elements[k + 1..]
                .iter()
                .all(|&y| x != y && self.comparable(x, y))
        })
    }

    /// Sorts a chain bottom to top.
    pub fn sort_chain(&self, elements: &[usize]) -> Result<Vec<usize>, PosetError> {
        if !self.is_chain(elements) {
            return Err(PosetError::NotAChain(elements.to_vec()));
        }
        let mut out = elements.to_vec();
        out.sort_by_key(|&x| self.down[x].count());
        Ok(out)
    }

    /// The subposet induced on `elements`, relabelled `0..k` in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        Poset::from_predicate(elements.len(), |a, b| self.lt(elements[a], elements[b]))
    }

    /// Deletes `removed` and returns the induced poset on the complement
    /// together with the relabelling `new id -> old id` (ascending).
    pub fn remove(&self, removed: &[usize]) -> (Poset, Vec<usize>) {
        let gone = BitSet::from_indices(self.n, removed.iter().copied());
        let keep: Vec<usize> = (0..self.n).filter(|&i| !gone.contains(i)).collect();
        (self.induced(&keep), keep)
    }

    /// Rechecks irreflexivity, transitivity and antisymmetry.
    pub fn validate(&self) -> Result<(), PosetError> {
        for i in 0..self.n {
            if self.lt(i, i) {
                return Err(PosetError::Cycle { element: i });
            }
            for j in self.up[i].iter() {
                if self.lt(j, i) {
                    return Err(PosetError::Cycle { element: i });
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return Err(PosetError::Param(format!(
                        "relation not transitively closed at {}<{}",
                        i + 1,
                        j + 1
                    )));
                }
                if !self.down[j].contains(i) {
                    return Err(PosetError::Param("up/down rows disagree".into()));
                }
            }
        }
        Ok(())
    }

    /// Relabels elements: element `i` of `self` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let mut inv = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Poset::from_predicate(self.n, |a, b| self.lt(inv[a], inv[b]))
    }

    /// Canonical form under relabelling: the lexicographically smallest
    /// comparability matrix (row-major bits) over all permutations, pruned by
    /// requiring the relabelling to be a linear extension. Exhaustive, so only
    /// meant for small posets.
    pub fn canonical_form(&self) -> Vec<bool> {
        assert!(self.n <= 10, "canonical form is exhaustive; n = {}", self.n);
        let n = self.n;
        let mut best: Option<Vec<bool>> = None;
        let mut order = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.canon_rec(&mut order, &mut used, &mut best);
        best.unwrap_or_default()
    }

    fn canon_rec(&self, order: &mut Vec<usize>, used: &mut [bool], best: &mut Option<Vec<bool>>) {
        let n = self.n;
        if order.len() == n {
            // Position k holds old element order[k]; row-major upper bits.
            let mut bits = Vec::with_capacity(n * (n - 1) / 2);
            for a in 0..n {
                for b in a + 1..n {
                    bits.push(self.lt(order[a], order[b]));
                }
            }
            if best.as_ref().is_none_or(|cur| bits < *cur) {
                *best = Some(bits);
            }
            return;
        }
        for x in 0..n {
            if used[x] || self.down[x].iter().any(|d| !used[d]) {
                continue;
            }
            used[x] = true;
            order.push(x);
            self.canon_rec(order, used, best);
            order.pop();
            used[x] = false;
        }
    }

    /// Isomorphism test by backtracking over maps that preserve the
    /// (up-degree, down-degree) profile of every element.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        if self.n != other.n || self.relation_count() != other.relation_count() {
            return false;
        }
        let profile = |p: &Poset| -> Vec<(usize, usize)> {
            (0..p.n).map(|x| (p.up[x].count(), p.down[x].count())).collect()
        };
        let (ps, po) = (profile(self), profile(other));
        let (mut a, mut b) = (ps.clone(), po.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| self.down[x].count());
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.iso_rec(other, &order, 0, &ps, &po, &mut map, &mut used)
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_rec(
        &self,
        other: &Poset,
        order: &[usize],
        k: usize,
        ps: &[(usize, usize)],
        po: &[(usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(k) else {
            return true;
        };
        for y in 0..other.n {
            if used[y] || ps[x] != po[y] {
                continue;
            }
            let consistent = order[..k].iter().all(|&z| {
                self.lt(z, x) == other.lt(map[z], y) && self.lt(x, z) == other.lt(y, map[z])
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.iso_rec(other, order, k + 1, ps, po, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
}

/// All linear extensions, in lexicographic order of the id sequence.
pub fn linear_extensions(p: &Poset) -> Vec<Vec<usize>> {
    fn rec(p: &Poset, placed: &mut Vec<usize>, used: &mut BitSet, out: &mut Vec<Vec<usize>>) {
        if placed.len() == p.len() {
            out.push(placed.clone());
            return;
        }
        for x in 0..p.len() {
            if used.contains(x) || !p.below(x).is_subset(used) {
                continue;
            }
            used.insert(x);
            placed.push(x);
            rec(p, placed, used, out);
            placed.pop();
            used.remove(x);
        }
    }
    let mut out = Vec::new();
    let mut used = BitSet::new(p.len());
    rec(p, &mut Vec::with_capacity(p.len()), &mut used, &mut out);
    out
}

/// Every poset on `n` elements up to isomorphism, each as a representative
/// with a linear-extension labelling. Built by adding a new maximal element
/// above every down-set of every class on `n - 1` elements.
pub fn posets_up_to_iso(n: usize) -> Vec<Poset> {
    assert!(n <= 7, "exhaustive poset enumeration is limited to n <= 7");
    let mut classes = vec![Poset::antichain(0)];
    for size in 1..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for p in &classes {
            for ideal in down_sets(p) {
                let m = size - 1;
                let mut rels: Vec<(usize, usize)> = p.relations().collect();
                rels.extend(ideal.iter().map(|i| (i, m)));
                let q = Poset::new(size, &rels).expect("down-set extension is acyclic");
                if seen.insert(q.canonical_form()) {
                    next.push(q);
                }
            }
        }
        classes = next;
    }
    classes
}

/// All down-closed subsets of `p`.
fn down_sets(p: &Poset) -> Vec<BitSet> {
    let n = p.len();
    let mut out = Vec::new();
    let order = p.topological_order();
    // Decide membership along a linear extension from the top, so that when x
    // is excluded everything above it is already known to be excluded.
    fn rec(p: &Poset, order: &[usize], k: usize, cur: &mut BitSet, out: &mut Vec<BitSet>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        let x = order[k - 1];
        // x may join only if everything above it has joined.
        if p.above(x).is_subset(cur) {
            cur.insert(x);
            rec(p, order, k - 1, cur, out);
            cur.remove(x);
        }
        rec(p, order, k - 1, cur, out);
    }
    // Building from the top makes `cur` an up-set; complement it.
    let mut ups = Vec::new();
    rec(p, &order, n, &mut BitSet::new(n), &mut ups);
    for up in ups {
        out.push(BitSet::from_indices(n, (0..n).filter(|&i| !up.contains(i))));
    }
    out
}
