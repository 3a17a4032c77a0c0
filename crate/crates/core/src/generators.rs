//! Named poset families, the split construction and Cartesian products.
//!
//! Every generator returns an [`ElementMap`] alongside the poset so that
//! dense ids can be traced back to the structured labels they stand for.

use std::collections::HashMap;
use std::fmt;

use crate::poset::{Poset, PosetError};

/// Default cap on the number of elements a product may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 4096;

/// Structured name of a generated element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Plain element `i` (0-based) of a chain or antichain.
    Id(usize),
    /// Minimal element `a_i` of a standard example.
    Low(usize),
    /// Maximal element `b_i` of a standard example.
    High(usize),
    /// The minimal copy `x'` of an element in a split.
    Lower(Box<Label>),
    /// The maximal copy `x''` of an element in a split.
    Upper(Box<Label>),
    /// An element of a Cartesian product.
    Pair(Box<Label>, Box<Label>),
    /// A subset of `{1..n}`, stored sorted and 1-based.
    Set(Vec<usize>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Id(i) => write!(f, "{}", i + 1),
            Label::Low(i) => write!(f, "a{}", i + 1),
            Label::High(i) => write!(f, "b{}", i + 1),
            Label::Lower(x) => write!(f, "{x}'"),
            Label::Upper(x) => write!(f, "{x}''"),
            Label::Pair(x, y) => write!(f, "({x},{y})"),
            Label::Set(s) => {
                let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// Bijection between element ids and labels.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ElementMap {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl ElementMap {
    pub fn new(labels: Vec<Label>) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect::<HashMap<_, _>>();
        assert_eq!(index.len(), labels.len(), "labels must be distinct");
        ElementMap { labels, index }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(Label::Id).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> &Label {
        &self.labels[id]
    }

    pub fn id(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }
}

/// The generator families available by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Chain(usize),
    Antichain(usize),
    StandardExample(usize),
    BooleanLattice(usize),
    /// Layers `s < t` of the Boolean lattice on `n` atoms.
    Layers { s: usize, t: usize, n: usize },
}

pub fn generate(family: Family) -> Result<(Poset, ElementMap), PosetError> {
    match family {
        Family::Chain(n) => {
            positive(n)?;
            Ok((Poset::chain(n), ElementMap::identity(n)))
        }
        Family::Antichain(n) => {
            positive(n)?;
            Ok((Poset::antichain(n), ElementMap::identity(n)))
        }
        Family::StandardExample(n) => {
            positive(n)?;
            Ok(standard_example(n))
        }
        Family::BooleanLattice(n) => {
            positive(n)?;
            if n > 12 {
                return Err(PosetError::Size {
                    size: 1 << n.min(63),
                    cap: DEFAULT_ELEMENT_CAP,
                });
            }
            Ok(boolean_lattice(n))
        }
        Family::Layers { s, t, n } => {
            positive(n)?;
            if s >= t || t > n {
                return Err(PosetError::Param(format!(
                    "layers need 0 <= s < t <= n, got s={s} t={t} n={n}"
                )));
            }
            if n > 16 {
                return Err(PosetError::Param(format!("layers limited to n <= 16, got {n}")));
            }
            Ok(layers(s, t, n))
        }
    }
}

fn positive(n: usize) -> Result<(), PosetError> {
    if n == 0 {
        return Err(PosetError::Param("family size must be at least 1".into()));
    }
    Ok(())
}

/// `S_n`: `a_i` is id `i`, `b_i` is id `n + i`, and `a_i < b_j` iff `i != j`.
pub fn standard_example(n: usize) -> (Poset, ElementMap) {
    let p = Poset::from_predicate(2 * n, |x, y| x < n && y >= n && x != y - n);
    let labels = (0..n).map(Label::Low).chain((0..n).map(Label::High)).collect();
    (p, ElementMap::new(labels))
}

/// The subset lattice on `{1..n}`; element id is the subset's bitmask.
pub fn boolean_lattice(n: usize) -> (Poset, ElementMap) {
    let size = 1usize << n;
    let p = Poset::from_predicate(size, |x, y| x != y && x & y == x);
    let labels = (0..size).map(|mask| Label::Set(mask_to_set(mask, n))).collect();
    (p, ElementMap::new(labels))
}

fn mask_to_set(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Combinations of `{0..n}` of size `k` in lexicographic order, as bitmasks.
fn combinations(n: usize, k: usize) -> Vec<usize> {
    fn rec(start: usize, n: usize, k: usize, mask: usize, out: &mut Vec<usize>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, mask | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// `P(s,t;n)`: the `s`-subsets followed by the `t`-subsets, each in
/// lexicographic order, ordered by inclusion.
pub fn layers(s: usize, t: usize, n: usize) -> (Poset, ElementMap) {
    let mut masks = combinations(n, s);
    masks.extend(combinations(n, t));
    let p = Poset::from_predicate(masks.len(), |x, y| {
        masks[x] != masks[y] && masks[x] & masks[y] == masks[x]
    });
    let labels = masks.iter().map(|&m| Label::Set(mask_to_set(m, n))).collect();
    (p, ElementMap::new(labels))
}

/// The split of `p`: `x'` is id `x`, `x''` is id `n + x`, and `x' < y''`
/// iff `x <= y` in `p`.
pub fn split(p: &Poset, map: &ElementMap) -> Result<(Poset, ElementMap), PosetError> {
    if p.is_empty() {
        return Err(PosetError::Param("split of an empty poset".into()));
    }
    let n = p.len();
    let q = Poset::from_predicate(2 * n, |x, y| x < n && y >= n && p.le(x, y - n));
    let labels = (0..n)
        .map(|x| Label::Lower(Box::new(map.label(x).clone())))
        .chain((0..n).map(|x| Label::Upper(Box::new(map.label(x).clone()))))
        .collect();
    Ok((q, ElementMap::new(labels)))
}

/// Cartesian product; the pair `(x, y)` gets id `x * |q| + y`.
pub fn product(
    p: &Poset,
    pmap: &ElementMap,
    q: &Poset,
    qmap: &ElementMap,
    cap: usize,
) -> Result<(Poset, ElementMap), PosetError> {
    if p.is_empty() || q.is_empty() {
        return Err(PosetError::Param("product factors must be nonempty".into()));
    }
    let size = p.len().saturating_mul(q.len());
    if size > cap {
        return Err(PosetError::Size { size, cap });
    }
    let m = q.len();
    let prod = Poset::from_predicate(size, |u, v| {
        let (a, b) = (u / m, u % m);
        let (c, d) = (v / m, v % m);
        u != v && p.le(a, c) && q.le(b, d)
    });
    let mut labels = Vec::with_capacity(size);
    for x in 0..p.len() {
        for y in 0..m {
            labels.push(Label::Pair(
                Box::new(pmap.label(x).clone()),
                Box::new(qmap.label(y).clone()),
            ));
        }
    }
    Ok((prod, ElementMap::new(labels)))
}
