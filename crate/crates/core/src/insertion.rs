//! Bumping insertion into Young-type composition fillings, reading insertion
//! with a recording tableau, and generation of recording tableaux of peak
//! shape.

use std::fmt;

use thiserror::Error;

use crate::composition::Composition;
use crate::tableau::{self, Family, Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("{0} already occurs in the filling")]
    Duplicate(usize),
    #[error("entries must be positive integers")]
    ZeroEntry,
    #[error("row {0} is empty")]
    EmptyRow(usize),
    #[error("filling {0} violates the row, first-column or triple conditions")]
    NotInsertable(Filling),
    #[error("({0}) is not a peak composition")]
    NotPeak(Composition),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// A possibly empty filling with distinct positive entries, rows bottom to
/// top.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Filling {
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, InsertionError> {
        if let Some(r) = rows.iter().position(Vec::is_empty) {
            return Err(InsertionError::EmptyRow(r + 1));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(InsertionError::ZeroEntry);
        }
        let mut seen: Vec<usize> = rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(InsertionError::Duplicate(w[0]));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.rows.iter().flatten().any(|&v| v == k)
    }

    pub fn to_tableau(&self) -> Option<Tableau> {
        if self.is_empty() {
            None
        } else {
            Some(Tableau::from_values(self.rows.clone()).expect("nonempty rows"))
        }
    }

    fn is_insertable(&self) -> bool {
        self.to_tableau()
            .is_none_or(|t| tableau::young_row_column_conditions(&t))
    }
}

impl TryFrom<&Tableau> for Filling {
    type Error = InsertionError;

    fn try_from(t: &Tableau) -> Result<Self, Self::Error> {
        Filling::new(
            t.rows()
                .iter()
                .map(|row| row.iter().map(|e| e.value).collect())
                .collect(),
        )
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_tableau() {
            Some(t) => write!(f, "{t}"),
            None => f.write_str("empty"),
        }
    }
}

/// An entry of the augmented diagram: each row ends in an infinite sentinel.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum AugmentedEntry {
    Finite(usize),
    Infinity,
}

/// One step of an insertion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    /// `value` filled box `(column, row)`, displacing `bumped` if finite.
    Placed {
        value: usize,
        column: usize,
        row: usize,
        bumped: Option<usize>,
    },
    /// `value` started a new row at index `row`.
    NewRow { value: usize, row: usize },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Placed {
                value,
                column,
                row,
                bumped: Some(b),
            } => write!(f, "{value} -> ({column},{row}) bumps {b}"),
            Step::Placed {
                value, column, row, ..
            } => write!(f, "{value} -> ({column},{row})"),
            Step::NewRow { value, row } => write!(f, "{value} -> new-row {row}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Inserted {
    pub filling: Filling,
    /// The box `(column, row)` created by the insertion.
    pub new_box: (usize, usize),
    /// Set when the insertion created a new row, shifting higher rows up.
    pub new_row: Option<usize>,
    pub steps: Vec<Step>,
}

/// Inserts `k` into `t`.
///
/// Boxes of the augmented diagram are scanned from the rightmost column to
/// column 2, top to bottom within a column. The first box with left
/// neighbour `≤ k0 <` occupant receives `k0`; a finite occupant is bumped and
/// the scan continues from the next box. A value left over at the end of the
/// scan starts a new row in the first column.
pub fn insert_entry(t: &Filling, k: usize) -> Result<Inserted, InsertionError> {
    if k == 0 {
        return Err(InsertionError::ZeroEntry);
    }
    if t.contains(k) {
        return Err(InsertionError::Duplicate(k));
    }
    if !t.is_insertable() {
        return Err(InsertionError::NotInsertable(t.clone()));
    }
    let mut rows = t.rows.clone();
    let widest = rows.iter().map(Vec::len).max().unwrap_or(0);
    let scan: Vec<(usize, usize)> = (2..=widest + 1)
        .rev()
        .flat_map(|c| {
            let rows = &rows;
            (0..rows.len())
                .rev()
                .filter(move |&r| rows[r].len() + 1 >= c)
                .map(move |r| (c, r))
        })
        .collect();

    let mut steps = Vec::new();
    let mut k0 = k;
    let mut placed_at = None;
    for (c, r) in scan {
        let row = &mut rows[r];
        let left = row[c - 2];
        let occupant = match row.get(c - 1) {
            Some(&v) => AugmentedEntry::Finite(v),
            None => AugmentedEntry::Infinity,
        };
        if !(left <= k0 && AugmentedEntry::Finite(k0) < occupant) {
            continue;
        }
        match occupant {
            AugmentedEntry::Infinity => {
                row.push(k0);
                steps.push(Step::Placed {
                    value: k0,
                    column: c,
                    row: r + 1,
                    bumped: None,
                });
                placed_at = Some((c, r + 1));
                break;
            }
            AugmentedEntry::Finite(v) => {
                row[c - 1] = k0;
                steps.push(Step::Placed {
                    value: k0,
                    column: c,
                    row: r + 1,
                    bumped: Some(v),
                });
                k0 = v;
            }
        }
    }

    let (new_box, new_row) = match placed_at {
        Some(b) => (b, None),
        None => {
            let r_star = 1 + rows.iter().filter(|row| row[0] < k0).count();
            rows.insert(r_star - 1, vec![k0]);
            steps.push(Step::NewRow {
                value: k0,
                row: r_star,
            });
            ((1, r_star), Some(r_star))
        }
    };
    let filling = Filling { rows };
    if !filling.is_insertable() {
        return Err(InsertionError::NotInsertable(filling));
    }
    Ok(Inserted {
        filling,
        new_box,
        new_row,
        steps,
    })
}

/// The insertion tableau `p` and recording tableau `q` of a reading
/// insertion.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InsertionResult {
    pub p: Tableau,
    pub q: Tableau,
}

/// Result of inserting a word letter by letter into the empty filling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordInsertion {
    pub p: Filling,
    /// Records at which step each box was created.
    pub q: Filling,
    pub trace: Vec<Inserted>,
}

pub fn insert_word(word: &[usize]) -> Result<WordInsertion, InsertionError> {
    let mut p = Filling::empty();
    let mut q: Vec<Vec<usize>> = Vec::new();
    let mut trace = Vec::with_capacity(word.len());
    for (j, &k) in word.iter().enumerate() {
        let ins = insert_entry(&p, k)?;
        let (c, r) = ins.new_box;
        match ins.new_row {
            Some(r_star) => q.insert(r_star - 1, vec![j + 1]),
            None => {
                debug_assert_eq!(q[r - 1].len() + 1, c);
                q[r - 1].push(j + 1);
            }
        }
        p = ins.filling.clone();
        trace.push(ins);
    }
    Ok(WordInsertion {
        p,
        q: Filling { rows: q },
        trace,
    })
}

/// Reading insertion with the steps of each letter.
pub fn reading_insertion_traced(
    t: &Tableau,
) -> Result<(InsertionResult, Vec<Inserted>), InsertionError> {
    let word = tableau::reading_word(t)?;
    let run = insert_word(&word)?;
    let result = InsertionResult {
        p: run.p.to_tableau().expect("nonempty word"),
        q: run.q.to_tableau().expect("nonempty word"),
    };
    Ok((result, run.trace))
}

/// Inserts the reading word of a standard immaculate tableau.
pub fn reading_insertion(t: &Tableau) -> Result<InsertionResult, InsertionError> {
    Ok(reading_insertion_traced(t)?.0)
}

fn require_peak(alpha: &Composition) -> Result<(), InsertionError> {
    if alpha.is_peak() {
        Ok(())
    } else {
        Err(InsertionError::NotPeak(alpha.clone()))
    }
}

/// Recording tableaux of peak shape whose row strip shape is the reverse of
/// `alpha`, in depth-first order with lower rows tried first.
pub fn generate_dirts(alpha: &Composition) -> Result<Vec<Tableau>, InsertionError> {
    require_peak(alpha)?;
    let parts = alpha.parts();
    let k = parts.len();
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![(1..=parts[k - 1]).collect()]];
    let mut m = parts[k - 1];
    for &block in parts[..k - 1].iter().rev() {
        let mut next = Vec::new();
        for rows in &level {
            let mut rows = rows.clone();
            rows.insert(0, vec![m + 1, m + 2]);
            place_block(&mut rows, m + 3, m + block, 2, &mut next);
        }
        level = next;
        m += block;
    }
    Ok(level
        .into_iter()
        .map(|rows| Tableau::from_values(rows).expect("nonempty rows"))
        .collect())
}

/// Places `v..=last`, each at the end of a row whose new box is strictly
/// right of column `prev`, never extending a row of length `j` that has a row
/// of length `j+1` below it.
fn place_block(
    rows: &mut Vec<Vec<usize>>,
    v: usize,
    last: usize,
    prev: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if v > last {
        out.push(rows.clone());
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        if len + 1 <= prev || rows[..r].iter().any(|below| below.len() == len + 1) {
            continue;
        }
        rows[r].push(v);
        place_block(rows, v + 1, last, len + 1, out);
        rows[r].pop();
    }
}

/// Whether `alpha` is `(2,...,2,a)` or `(2,...,2,a,1)`, i.e. whether the
/// expansion of its Q-function has a single term.
pub fn is_single_term(alpha: &Composition) -> Result<bool, InsertionError> {
    require_peak(alpha)?;
    let parts = alpha.parts();
    let k = parts.len();
    let twos = |prefix: &[usize]| prefix.iter().all(|&p| p == 2);
    Ok(twos(&parts[..k - 1]) || (k >= 2 && parts[k - 1] == 1 && twos(&parts[..k - 2])))
}

/// Counts pairs `(P, Q)` with `P` an SPYCT and `Q` a generated recording
/// tableau of the same shape.
pub fn count_pairs(alpha: &Composition) -> Result<usize, InsertionError> {
    let mut total = 0;
    for q in generate_dirts(alpha)? {
        total += tableau::enumerate(Family::Spyct, q.shape())?.len();
    }
    Ok(total)
}
