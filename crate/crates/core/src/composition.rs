//! Compositions of a positive integer and subsets of `[n-1]`.
//!
//! A [`Composition`] and an [`IndexSet`] are two views of the same object at a
//! fixed degree `n`: `set` sends `(a1, ..., ak)` to its partial sums, and
//! `comp` recovers the composition from those sums.
//!
//! Compositions are ordered canonically: parts are compared left to right with
//! the larger part first, and a proper prefix sorts before its extensions. So
//! the compositions of 3 enumerate as `(3), (2,1), (1,2), (1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("a composition must have at least one part")]
    Empty,
    #[error("composition parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("cannot parse composition from {0:?}")]
    Parse(String),
    #[error("index set element {element} is outside [1, {}]", .degree - 1)]
    OutOfRange { element: usize, degree: usize },
    #[error("index set elements must be strictly increasing")]
    NotIncreasing,
    #[error("degree must be positive")]
    ZeroDegree,
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::ZeroPart(pos));
        }
        Ok(Self { parts })
    }

    /// The single-part composition `(n)`.
    pub fn row(n: usize) -> Result<Self, CompositionError> {
        Self::new(vec![n])
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Result<Self, CompositionError> {
        Self::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false: the empty composition cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Partial sums `{a1, a1+a2, ..., a1+...+a(k-1)}`, with ambient degree `n`.
    pub fn set(&self) -> IndexSet {
        let mut acc = 0;
        let elements = self.parts[..self.parts.len() - 1]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        IndexSet {
            degree: self.degree(),
            elements,
        }
    }

    pub fn peak(&self) -> IndexSet {
        self.set().peak()
    }

    /// True when `alpha` is obtained from `self` by summing consecutive parts.
    pub fn refines(&self, alpha: &Composition) -> bool {
        if self.degree() != alpha.degree() {
            return false;
        }
        let mut fine = self.parts.iter();
        for &target in &alpha.parts {
            let mut sum = 0;
            while sum < target {
                match fine.next() {
                    Some(p) => sum += p,
                    None => return false,
                }
            }
            if sum != target {
                return false;
            }
        }
        true
    }

    /// Every part except possibly the last is at least 2.
    pub fn is_peak(&self) -> bool {
        self.parts[..self.parts.len() - 1].iter().all(|&p| p >= 2)
    }

    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    /// Every composition refining `self`, in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.degree();
        let fixed = self.set();
        let free: Vec<usize> = (1..n).filter(|i| !fixed.contains(*i)).collect();
        let mut out: Vec<Composition> = (0u64..1 << free.len())
            .map(|mask| {
                let mut elements: Vec<usize> = fixed.elements.clone();
                elements.extend(
                    free.iter()
                        .enumerate()
                        .filter(|(j, _)| mask >> j & 1 == 1)
                        .map(|(_, &i)| i),
                );
                elements.sort_unstable();
                IndexSet { degree: n, elements }.comp()
            })
            .collect();
        out.sort();
        out
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.parts.iter().zip(&other.parts) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.parts.len().cmp(&other.parts.len())
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = CompositionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    /// Parses the comma-separated form `3,2,5,1` (no spaces).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|tok| {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(CompositionError::Parse(s.to_string()));
                }
                tok.parse::<usize>()
                    .map_err(|_| CompositionError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

/// A subset of `[1, n-1]` together with its ambient degree `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IndexSet {
    degree: usize,
    elements: Vec<usize>,
}

impl IndexSet {
    /// `elements` must be strictly increasing and lie in `[1, degree-1]`.
    pub fn new(degree: usize, elements: Vec<usize>) -> Result<Self, CompositionError> {
        if degree == 0 {
            return Err(CompositionError::ZeroDegree);
        }
        if let Some(&e) = elements.iter().find(|&&e| e == 0 || e >= degree) {
            return Err(CompositionError::OutOfRange { element: e, degree });
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CompositionError::NotIncreasing);
        }
        Ok(Self { degree, elements })
    }

    /// Like [`IndexSet::new`] but sorts and deduplicates first.
    pub fn from_unsorted(
        degree: usize,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, CompositionError> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Self::new(degree, elements)
    }

    pub fn empty(degree: usize) -> Result<Self, CompositionError> {
        Self::new(degree, Vec::new())
    }

    /// The subset of `[n-1]` whose bit `i-1` is set in `mask`.
    pub(crate) fn from_mask(degree: usize, mask: u64) -> Self {
        let elements = (1..degree).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        Self { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.elements.iter().all(|&i| other.contains(i))
    }

    /// `comp_n(X) = (x1, x2-x1, ..., n-xr)`.
    pub fn comp(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.elements.len() + 1);
        let mut prev = 0;
        for &x in &self.elements {
            parts.push(x - prev);
            prev = x;
        }
        parts.push(self.degree - prev);
        Composition { parts }
    }

    /// `{i in X : i-1 not in X and i != 1}`.
    pub fn peak(&self) -> IndexSet {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&i| i != 1 && !self.contains(i - 1))
            .collect();
        IndexSet {
            degree: self.degree,
            elements,
        }
    }

    /// Membership in the symmetric difference `X △ (X+1)`: exactly one of
    /// `i` and `i-1` lies in `X`.
    pub fn in_shifted_difference(&self, i: usize) -> bool {
        self.contains(i) != (i >= 1 && self.contains(i - 1))
    }

    /// True when every element of `peak` lies in `self △ (self + 1)`.
    pub fn admits_peak_set(&self, peak: &IndexSet) -> bool {
        peak.elements.iter().all(|&i| self.in_shifted_difference(i))
    }

    /// All subsets of `[n-1]`.
    pub fn all_subsets(degree: usize) -> impl Iterator<Item = IndexSet> {
        let bits = degree.saturating_sub(1);
        (0u64..1 << bits).map(move |mask| IndexSet::from_mask(degree, mask))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, e) in self.elements.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// All compositions of `n` in canonical order. Empty for `n = 0`.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn extend(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining).rev() {
            prefix.push(first);
            extend(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn peak_compositions(n: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(Composition::is_peak).collect()
}
