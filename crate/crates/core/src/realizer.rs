//! Partial linear extensions, local realizers and their certificate checks.
//!
//! A [`Violation`] pair `(x, y)` always names an order "x before y" that the
//! family was required to exhibit but does not (or, for `NotAPle`, a pair the
//! ple lists in the wrong order).

use std::fmt;

use thiserror::Error;

use crate::bits::BitSet;
use crate::poset::Poset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizerError {
    #[error("element id {id} is outside 1..={n}")]
    IdRange { id: usize, n: usize },
    #[error("ple {} lists element {} twice", .ple + 1, .element + 1)]
    Duplicate { ple: usize, element: usize },
    #[error("ple {} is empty", .ple + 1)]
    EmptyPle { ple: usize },
    #[error("realizer is for {found} elements but the poset has {expected}")]
    SizeMismatch { expected: usize, found: usize },
}

/// A partial linear extension, least element first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ple(pub Vec<usize>);

impl Ple {
    pub fn new(order: Vec<usize>) -> Self {
        Ple(order)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.0.iter().position(|&e| e == x)
    }

    /// Renames every element through `map` (`old -> new`).
    pub fn relabel(&self, map: &[usize]) -> Ple {
        Ple(self.0.iter().map(|&x| map[x]).collect())
    }
}

impl fmt::Display for Ple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", ids.join(" "))
    }
}

/// A family of ples over a ground set `0..n`.
///
/// Construction checks ids and distinctness only; whether the family is a
/// local realizer of some poset is decided by [`verify_local_realizer`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRealizer {
    n: usize,
    ples: Vec<Ple>,
}

impl LocalRealizer {
    pub fn new(n: usize, ples: Vec<Ple>) -> Result<Self, RealizerError> {
        for (k, ple) in ples.iter().enumerate() {
            if ple.is_empty() {
                return Err(RealizerError::EmptyPle { ple: k });
            }
            let mut seen = BitSet::new(n);
            for &x in ple.elements() {
                if x >= n {
                    return Err(RealizerError::IdRange { id: x + 1, n });
                }
                if seen.contains(x) {
                    return Err(RealizerError::Duplicate { ple: k, element: x });
                }
                seen.insert(x);
            }
        }
        Ok(LocalRealizer { n, ples })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ples(&self) -> &[Ple] {
        &self.ples
    }

    pub fn into_ples(self) -> Vec<Ple> {
        self.ples
    }

    pub fn len(&self) -> usize {
        self.ples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ples.is_empty()
    }

    /// Frequency of every element.
    pub fn freq(&self) -> Vec<usize> {
        let mut freq = vec![0; self.n];
        for ple in &self.ples {
            for &x in ple.elements() {
                freq[x] += 1;
            }
        }
        freq
    }

    pub fn mu(&self) -> usize {
        self.freq().into_iter().max().unwrap_or(0)
    }

    pub fn mu_stats(&self) -> MuStats {
        let freq = self.freq();
        MuStats {
            mu: freq.iter().copied().max().unwrap_or(0),
            total: freq.iter().sum(),
            freq,
        }
    }

    /// Moves the family onto a larger ground set through `map` (`old -> new`).
    pub fn lift(&self, map: &[usize], n: usize) -> LocalRealizer {
        LocalRealizer {
            n,
            ples: self.ples.iter().map(|p| p.relabel(map)).collect(),
        }
    }
}

/// Frequency accounting of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuStats {
    pub mu: usize,
    pub freq: Vec<usize>,
    /// Sum of ple lengths.
    pub total: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    NotAPle,
    ComparabilityUnwitnessed,
    IncomparabilityUnreversed,
    /// A realizer member that leaves out an element (realizers only).
    MissingElement,
    /// The family has no members.
    EmptyFamily,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::NotAPle => "not-a-ple",
            ViolationKind::ComparabilityUnwitnessed => "comparability-unwitnessed",
            ViolationKind::IncomparabilityUnreversed => "incomparability-unreversed",
            ViolationKind::MissingElement => "missing-element",
            ViolationKind::EmptyFamily => "empty-family",
        })
    }
}

/// The first defect found in a family. `ple` is set for `NotAPle` and
/// `MissingElement`; `pair` for every kind except `EmptyFamily` (for
/// `MissingElement` both entries name the missing element).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub ple: Option<usize>,
    pub pair: Option<(usize, usize)>,
}

impl Violation {
    fn pair(kind: ViolationKind, x: usize, y: usize) -> Self {
        Violation {
            kind,
            ple: None,
            pair: Some((x, y)),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(k) = self.ple {
            write!(f, " in ple {}", k + 1)?;
        }
        match (self.kind, self.pair) {
            (ViolationKind::MissingElement, Some((x, _))) => write!(f, ": element {}", x + 1),
            (ViolationKind::NotAPle, Some((x, y))) => {
                write!(f, ": {} listed before {} but {} < {}", x + 1, y + 1, y + 1, x + 1)
            }
            (_, Some((x, y))) => write!(f, ": no ple has {} before {}", x + 1, y + 1),
            _ => Ok(()),
        }
    }
}

/// Result of a successful local-realizer check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub mu: usize,
    pub freq: Vec<usize>,
}

/// Outcome of a verification: an error for malformed input, otherwise either
/// a certificate or the first violation.
pub type Verdict<T> = Result<Result<T, Violation>, RealizerError>;

/// First pair `(x, y)` listed in the wrong order by `ple`, scanning pairs
/// lexicographically by position.
fn ple_defect(p: &Poset, ple: &Ple) -> Option<(usize, usize)> {
    let seq = ple.elements();
    for (i, &x) in seq.iter().enumerate() {
        for &y in &seq[i + 1..] {
            if p.lt(y, x) {
                return Some((x, y));
            }
        }
    }
    None
}

/// `before[x]` = every `y` such that some ple lists `x` before `y`.
fn before_sets(n: usize, ples: &[Ple]) -> Vec<BitSet> {
    let mut before = vec![BitSet::new(n); n];
    for ple in ples {
        let seq = ple.elements();
        for (i, &x) in seq.iter().enumerate() {
            for &y in &seq[i + 1..] {
                before[x].insert(y);
            }
        }
    }
    before
}

fn check_ground(p: &Poset, r: &LocalRealizer) -> Result<(), RealizerError> {
    if r.ground_size() != p.len() {
        return Err(RealizerError::SizeMismatch {
            expected: p.len(),
            found: r.ground_size(),
        });
    }
    Ok(())
}

/// Checks that `r` is a local realizer of `p`.
///
/// Scan order: ples by index (first misordered pair within each), then the
/// ordered pairs `(x, y)` lexicographically.
pub fn verify_local_realizer(p: &Poset, r: &LocalRealizer) -> Verdict<Certificate> {
    check_ground(p, r)?;
    if r.is_empty() {
        return Ok(Err(Violation {
            kind: ViolationKind::EmptyFamily,
            ple: None,
            pair: None,
        }));
    }
    for (k, ple) in r.ples().iter().enumerate() {
        if let Some(pair) = ple_defect(p, ple) {
            return Ok(Err(Violation {
                kind: ViolationKind::NotAPle,
                ple: Some(k),
                pair: Some(pair),
            }));
        }
    }
    let n = p.len();
    let before = before_sets(n, r.ples());
    for (x, bx) in before.iter().enumerate() {
        for y in 0..n {
            if x == y || bx.contains(y) {
                continue;
            }
            if p.lt(x, y) {
                return Ok(Err(Violation::pair(ViolationKind::ComparabilityUnwitnessed, x, y)));
            }
            if !p.lt(y, x) {
                return Ok(Err(Violation::pair(ViolationKind::IncomparabilityUnreversed, x, y)));
            }
        }
    }
    let stats = r.mu_stats();
    Ok(Ok(Certificate {
        mu: stats.mu,
        freq: stats.freq,
    }))
}

/// Checks that every member is a full linear extension and that every
/// incomparable pair is reversed by some member.
pub fn verify_realizer(p: &Poset, family: &[Ple]) -> Verdict<()> {
    let r = LocalRealizer::new(p.len(), family.to_vec())?;
    if r.is_empty() {
        return Ok(Err(Violation {
            kind: ViolationKind::EmptyFamily,
            ple: None,
            pair: None,
        }));
    }
    for (k, ple) in r.ples().iter().enumerate() {
        if let Some(pair) = ple_defect(p, ple) {
            return Ok(Err(Violation {
                kind: ViolationKind::NotAPle,
                ple: Some(k),
                pair: Some(pair),
            }));
        }
        if ple.len() < p.len() {
            let missing = (0..p.len()).find(|&x| !ple.contains(x)).unwrap();
            return Ok(Err(Violation {
                kind: ViolationKind::MissingElement,
                ple: Some(k),
                pair: Some((missing, missing)),
            }));
        }
    }
    let before = before_sets(p.len(), r.ples());
    for (x, y) in p.incomparable_pairs() {
        if !before[x].contains(y) {
            return Ok(Err(Violation::pair(ViolationKind::IncomparabilityUnreversed, x, y)));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, ples: &[&[usize]]) -> LocalRealizer {
        LocalRealizer::new(n, ples.iter().map(|p| Ple::new(p.to_vec())).collect()).unwrap()
    }

    #[test]
    fn chain_single_extension() {
        let c = Poset::chain(3);
        let cert = verify_local_realizer(&c, &fam(3, &[&[0, 1, 2]])).unwrap().unwrap();
        assert_eq!(cert.mu, 1);
    }

    #[test]
    fn antichain_missing_reversal() {
        let a = Poset::antichain(2);
        let v = verify_local_realizer(&a, &fam(2, &[&[0, 1]])).unwrap().unwrap_err();
        assert_eq!(v.kind, ViolationKind::IncomparabilityUnreversed);
        assert_eq!(v.pair, Some((1, 0)));
    }

    #[test]
    fn misordered_ple_reported_first() {
        let c = Poset::chain(2);
        let v = verify_local_realizer(&c, &fam(2, &[&[0, 1], &[1, 0]]))
            .unwrap()
            .unwrap_err();
        assert_eq!(v.kind, ViolationKind::NotAPle);
        assert_eq!(v.ple, Some(1));
    }

    #[test]
    fn unwitnessed_comparability() {
        let c = Poset::chain(3);
        let v = verify_local_realizer(&c, &fam(3, &[&[0, 1], &[1, 2]]))
            .unwrap()
            .unwrap_err();
        assert_eq!(v.kind, ViolationKind::ComparabilityUnwitnessed);
        assert_eq!(v.pair, Some((0, 2)));
    }

    #[test]
    fn one_element_poset() {
        let p = Poset::chain(1);
        assert_eq!(verify_local_realizer(&p, &fam(1, &[&[0]])).unwrap().unwrap().mu, 1);
        let empty = verify_local_realizer(&p, &fam(1, &[])).unwrap().unwrap_err();
        assert_eq!(empty.kind, ViolationKind::EmptyFamily);
    }

    #[test]
    fn malformed_families() {
        assert!(matches!(
            LocalRealizer::new(2, vec![Ple::new(vec![0, 0])]),
            Err(RealizerError::Duplicate { .. })
        ));
        assert!(matches!(
            LocalRealizer::new(2, vec![Ple::new(vec![2])]),
            Err(RealizerError::IdRange { id: 3, n: 2 })
        ));
        assert!(matches!(
            LocalRealizer::new(2, vec![Ple::new(vec![])]),
            Err(RealizerError::EmptyPle { .. })
        ));
        let r = fam(3, &[&[0]]);
        assert!(verify_local_realizer(&Poset::chain(2), &r).is_err());
    }

    #[test]
    fn realizers() {
        let ok = verify_realizer(&Poset::chain(2), &[Ple::new(vec![0, 1])]).unwrap();
        assert!(ok.is_ok());
        let a = Poset::antichain(2);
        assert!(verify_realizer(&a, &[Ple::new(vec![0, 1]), Ple::new(vec![1, 0])])
            .unwrap()
            .is_ok());
        let v = verify_realizer(&a, &[Ple::new(vec![0])]).unwrap().unwrap_err();
        assert_eq!(v.kind, ViolationKind::MissingElement);
    }

    #[test]
    fn mu_counts() {
        assert_eq!(fam(2, &[&[0, 1], &[1, 0]]).mu(), 2);
        let s = fam(1, &[&[0], &[0], &[0]]).mu_stats();
        assert_eq!((s.mu, s.total), (3, 3));
    }
}
