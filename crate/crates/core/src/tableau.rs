//! Fillings of composition diagrams and the tableau families built on them.
//!
//! Boxes are addressed as `(column, row)`, both 1-based, with row 1 at the
//! bottom. Rows are stored bottom to top.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::composition::{Composition, CompositionError, IndexSet};
use crate::standardize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("shape ({0}) is not a peak composition")]
    NotPeakShape(Composition),
    #[error("filling is not in {0}")]
    NotMember(Family),
    #[error("a tableau needs at least one row")]
    NoRows,
    #[error("row {0} is empty")]
    EmptyRow(usize),
    #[error("shape ({shape}) does not match the row lengths")]
    ShapeMismatch { shape: Composition },
    #[error("entries must be positive integers")]
    ZeroEntry,
    #[error("weight has a zero before a nonzero entry")]
    WeightNotComposition,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Composition(#[from] CompositionError),
}

/// A letter of the alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Entry {
    pub value: usize,
    pub marked: bool,
}

impl Entry {
    pub fn plain(value: usize) -> Self {
        Self {
            value,
            marked: false,
        }
    }

    pub fn marked(value: usize) -> Self {
        Self {
            value,
            marked: true,
        }
    }

    pub fn unmarked(self) -> Self {
        Self::plain(self.value)
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.value, !self.marked).cmp(&(other.value, !other.marked))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Entry {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, marked) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(TableauError::Parse(s.to_string()));
        }
        let value: usize = digits
            .parse()
            .map_err(|_| TableauError::Parse(s.to_string()))?;
        if value == 0 {
            return Err(TableauError::ZeroEntry);
        }
        Ok(Self { value, marked })
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.marked {
            serializer.serialize_str(&self.to_string())
        } else {
            serializer.serialize_u64(self.value as u64)
        }
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(usize),
            Text(String),
        }
        let entry = match Raw::deserialize(deserializer)? {
            Raw::Number(value) => Entry::plain(value),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom)?,
        };
        if entry.value == 0 {
            return Err(serde::de::Error::custom(TableauError::ZeroEntry));
        }
        Ok(entry)
    }
}

/// The seven tableau families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Mpct,
    Smpct,
    Spct,
    Spyct,
    Sit,
    Syct,
    Dirt,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Mpct,
        Family::Smpct,
        Family::Spct,
        Family::Spyct,
        Family::Sit,
        Family::Syct,
        Family::Dirt,
    ];

    pub fn requires_peak_shape(self) -> bool {
        matches!(
            self,
            Family::Mpct | Family::Smpct | Family::Spct | Family::Spyct
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Mpct => "MPCT",
            Family::Smpct => "SMPCT",
            Family::Spct => "SPCT",
            Family::Spyct => "SPYCT",
            Family::Sit => "SIT",
            Family::Syct => "SYCT",
            Family::Dirt => "DIRT",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| TableauError::Parse(s.to_string()))
    }
}

/// A filling of the diagram of a composition.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    shape: Composition,
    rows: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Composition,
    rows: Vec<Vec<Entry>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = TableauError;

    fn try_from(raw: RawTableau) -> Result<Self, Self::Error> {
        let t = Tableau::new(raw.rows)?;
        if t.shape != raw.shape {
            return Err(TableauError::ShapeMismatch { shape: raw.shape });
        }
        Ok(t)
    }
}

impl Tableau {
    /// Builds a tableau from its rows, bottom row first.
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self, TableauError> {
        if rows.is_empty() {
            return Err(TableauError::NoRows);
        }
        if let Some(r) = rows.iter().position(Vec::is_empty) {
            return Err(TableauError::EmptyRow(r + 1));
        }
        if rows.iter().flatten().any(|e| e.value == 0) {
            return Err(TableauError::ZeroEntry);
        }
        let shape = Composition::new(rows.iter().map(Vec::len).collect())?;
        Ok(Self { shape, rows })
    }

    /// Unmarked tableau from plain values, bottom row first.
    pub fn from_values(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        Self::new(
            rows.into_iter()
                .map(|row| row.into_iter().map(Entry::plain).collect())
                .collect(),
        )
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.shape.degree()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Entry in box `(c, r)`, 1-based, row 1 at the bottom.
    pub fn get(&self, c: usize, r: usize) -> Option<Entry> {
        if c == 0 || r == 0 {
            return None;
        }
        self.rows.get(r - 1)?.get(c - 1).copied()
    }

    pub fn value(&self, c: usize, r: usize) -> Option<usize> {
        self.get(c, r).map(|e| e.value)
    }

    /// Every box with its entry, rows bottom to top, left to right.
    pub fn boxes(&self) -> impl Iterator<Item = ((usize, usize), Entry)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &e)| ((c + 1, r + 1), e))
        })
    }

    pub fn has_marks(&self) -> bool {
        self.rows.iter().flatten().any(|e| e.marked)
    }

    /// Plain values row by row, bottom row first.
    pub fn values(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|e| e.value).collect())
            .collect()
    }

    pub fn first_column(&self) -> Vec<Entry> {
        self.rows.iter().map(|row| row[0]).collect()
    }

    /// Applies `f` to every entry, keeping the shape.
    pub fn map_entries(&self, mut f: impl FnMut((usize, usize), Entry) -> Entry) -> Tableau {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, &e)| f((c + 1, r + 1), e))
                    .collect()
            })
            .collect();
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }

    /// For a filling using each of `1..=n` exactly once (marks ignored),
    /// `positions()[v]` is the box holding `v`; index 0 is unused.
    pub fn positions(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.degree();
        let mut pos = vec![(0, 0); n + 1];
        for ((c, r), e) in self.boxes() {
            if e.value > n || pos[e.value] != (0, 0) {
                return None;
            }
            pos[e.value] = (c, r);
        }
        Some(pos)
    }

    /// Entries scanned bottom to top, left to right.
    pub fn canonical_key(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Text form, rows top to bottom, one per line.
    pub fn to_grid(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(|e| format!("{:>width$}", e.to_string())).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key()
            .cmp(other.canonical_key())
            .then_with(|| self.shape.cmp(&other.shape))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    /// Rows bottom to top separated by `/`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    /// Parses `1',2',5/3',4,9` (rows bottom to top).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|tok| tok.trim().parse::<Entry>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Tableau::new(rows)
    }
}

// ---------------------------------------------------------------------------
// Conditions shared by the families.

/// Uses each of `1..=n` exactly once by absolute value.
fn is_standard(t: &Tableau, allow_marks: bool) -> bool {
    (allow_marks || !t.has_marks()) && t.positions().is_some()
}

fn rows_strictly_increasing(t: &Tableau) -> bool {
    t.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
}

fn first_column_increasing_upward(t: &Tableau) -> bool {
    t.rows.windows(2).all(|w| w[0][0] < w[1][0])
}

fn first_column_increasing_downward(t: &Tableau) -> bool {
    t.rows.windows(2).all(|w| w[0][0] > w[1][0])
}

/// Whether the boxes with absolute value at most `k` form the diagram of a
/// peak composition. The empty subdiagram counts as peak.
fn sublevel_is_peak_diagram(t: &Tableau, k: usize) -> bool {
    let mut lengths = Vec::with_capacity(t.rows.len());
    let mut ended = false;
    for row in &t.rows {
        let len = row.iter().filter(|e| e.value <= k).count();
        if row[..len].iter().any(|e| e.value > k) {
            return false;
        }
        if len == 0 {
            ended = true;
        } else if ended {
            return false;
        } else {
            lengths.push(len);
        }
    }
    lengths.len() <= 1 || lengths[..lengths.len() - 1].iter().all(|&l| l >= 2)
}

fn peak_sublevels(t: &Tableau) -> bool {
    let top = t
        .rows
        .iter()
        .flatten()
        .map(|e| e.value)
        .max()
        .unwrap_or(0)
        .max(t.degree());
    (1..=top).all(|k| sublevel_is_peak_diagram(t, k))
}

/// If `T(c,r) < T(c+1,r')` with `r' < r`, then `(c+1,r)` exists and
/// `T(c+1,r) < T(c+1,r')`.
fn triple_rule(t: &Tableau) -> bool {
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &upper) in row.iter().enumerate() {
            for lower_row in &t.rows[..r] {
                let Some(&lower) = lower_row.get(c + 1) else {
                    continue;
                };
                if upper < lower {
                    match row.get(c + 1) {
                        Some(&right) if right < lower => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// If `Q(c,r) > Q(c,r')` with `r' < r`, then `(c+1,r')` exists and
/// `Q(c,r) > Q(c+1,r')`.
fn dirt_column_rule(t: &Tableau) -> bool {
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &upper) in row.iter().enumerate() {
            for lower_row in &t.rows[..r] {
                let Some(&lower) = lower_row.get(c) else {
                    continue;
                };
                if upper > lower {
                    match lower_row.get(c + 1) {
                        Some(&right) if upper > right => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// Maximal runs `a, a+1, ...` with each step strictly to the right.
/// Requires a standard filling.
fn strips_of(pos: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let n = pos.len() - 1;
    let mut strips: Vec<Vec<usize>> = Vec::new();
    for v in 1..=n {
        if v > 1 && pos[v].0 > pos[v - 1].0 {
            strips.last_mut().expect("strip started at 1").push(v);
        } else {
            strips.push(vec![v]);
        }
    }
    strips
}

fn require_peak(t: &Tableau) -> Result<(), TableauError> {
    if t.shape.is_peak() {
        Ok(())
    } else {
        Err(TableauError::NotPeakShape(t.shape.clone()))
    }
}

// ---------------------------------------------------------------------------
// Validators.

/// Counts `wt(T)_i` of `i` and `i'`, trimmed after the last nonzero count.
fn weight_counts(t: &Tableau) -> Vec<usize> {
    let top = t.rows.iter().flatten().map(|e| e.value).max().unwrap_or(0);
    let mut counts = vec![0; top];
    for e in t.rows.iter().flatten() {
        counts[e.value - 1] += 1;
    }
    counts
}

fn mpct_conditions(t: &Tableau) -> bool {
    // weakly increasing rows, no repeated marked letter in a row
    let rows_ok = t
        .rows
        .iter()
        .all(|row| row.windows(2).all(|w| w[0] < w[1] || (w[0] == w[1] && !w[0].marked)));
    if !rows_ok || !first_column_increasing_upward(t) || !peak_sublevels(t) {
        return false;
    }
    // an unmarked i at (2,r) forbids i or i' at (1,r+1)
    let corner_ok = t.rows.windows(2).all(|w| match w[0].get(1) {
        Some(e) if !e.marked => w[1][0].value != e.value,
        _ => true,
    });
    corner_ok && weight_counts(t).iter().all(|&c| c > 0)
}

/// Membership in `MPCT(shape)`: the four defining conditions plus a weight
/// that is a composition.
pub fn is_mpct(t: &Tableau) -> Result<bool, TableauError> {
    require_peak(t)?;
    Ok(mpct_conditions(t))
}

pub fn is_smpct(t: &Tableau) -> Result<bool, TableauError> {
    require_peak(t)?;
    Ok(is_standard(t, true) && mpct_conditions(t))
}

pub fn is_spct(t: &Tableau) -> Result<bool, TableauError> {
    require_peak(t)?;
    Ok(is_sit(t) && peak_sublevels(t))
}

pub fn is_spyct(t: &Tableau) -> Result<bool, TableauError> {
    require_peak(t)?;
    Ok(is_syct(t) && peak_sublevels(t))
}

pub fn is_sit(t: &Tableau) -> bool {
    is_standard(t, false) && rows_strictly_increasing(t) && first_column_increasing_upward(t)
}

pub fn is_syct(t: &Tableau) -> bool {
    is_sit(t) && triple_rule(t)
}

pub fn is_dirt(t: &Tableau) -> bool {
    if !is_standard(t, false)
        || !rows_strictly_increasing(t)
        || !first_column_increasing_downward(t)
        || !dirt_column_rule(t)
    {
        return false;
    }
    let pos = t.positions().expect("standard");
    strips_of(&pos).iter().all(|strip| pos[strip[0]].0 == 1)
}

/// Rows increase, the first column increases upward and the triple rule holds.
/// Entries need only be distinct.
pub(crate) fn young_row_column_conditions(t: &Tableau) -> bool {
    rows_strictly_increasing(t) && first_column_increasing_upward(t) && triple_rule(t)
}

pub fn is_member(family: Family, t: &Tableau) -> Result<bool, TableauError> {
    match family {
        Family::Mpct => is_mpct(t),
        Family::Smpct => is_smpct(t),
        Family::Spct => is_spct(t),
        Family::Spyct => is_spyct(t),
        Family::Sit => Ok(is_sit(t)),
        Family::Syct => Ok(is_syct(t)),
        Family::Dirt => Ok(is_dirt(t)),
    }
}

fn require(family: Family, t: &Tableau) -> Result<(), TableauError> {
    if is_member(family, t)? {
        Ok(())
    } else {
        Err(TableauError::NotMember(family))
    }
}

// ---------------------------------------------------------------------------
// Statistics.

pub(crate) fn descent_up_unchecked(t: &Tableau) -> IndexSet {
    let pos = t.positions().expect("standard filling");
    let n = t.degree();
    IndexSet::from_unsorted(n, (1..n).filter(|&i| pos[i + 1].1 > pos[i].1))
        .expect("descents lie in [n-1]")
}

pub(crate) fn descent_left_unchecked(t: &Tableau) -> IndexSet {
    let pos = t.positions().expect("standard filling");
    let n = t.degree();
    IndexSet::from_unsorted(n, (1..n).filter(|&i| pos[i + 1].0 <= pos[i].0))
        .expect("descents lie in [n-1]")
}

pub(crate) fn descent_marked_unchecked(s: &Tableau) -> IndexSet {
    let n = s.degree();
    let mut pos = vec![(0, 0); n + 1];
    let mut marked = vec![false; n + 1];
    for ((c, r), e) in s.boxes() {
        pos[e.value] = (c, r);
        marked[e.value] = e.marked;
    }
    let des = (1..n).filter(|&i| {
        let (row_i, row_next) = (pos[i].1, pos[i + 1].1);
        (!marked[i] && row_i < row_next) || (marked[i + 1] && row_next <= row_i)
    });
    IndexSet::from_unsorted(n, des).expect("descents lie in [n-1]")
}

/// `{i : i+1 strictly above i}` for a standard immaculate tableau.
pub fn descent_up(t: &Tableau) -> Result<IndexSet, TableauError> {
    require(Family::Sit, t)?;
    Ok(descent_up_unchecked(t))
}

/// `{i : i+1 weakly left of i}` for a standard Young composition tableau.
pub fn descent_left(t: &Tableau) -> Result<IndexSet, TableauError> {
    require(Family::Syct, t)?;
    Ok(descent_left_unchecked(t))
}

/// Descents of a standard marked tableau: `i` unmarked and strictly below
/// `i+1`, or `i+1` marked and weakly below `i`.
pub fn descent_marked(s: &Tableau) -> Result<IndexSet, TableauError> {
    require(Family::Smpct, s)?;
    Ok(descent_marked_unchecked(s))
}

pub fn peak_up(t: &Tableau) -> Result<IndexSet, TableauError> {
    descent_up(t).map(|d| d.peak())
}

pub fn peak_left(t: &Tableau) -> Result<IndexSet, TableauError> {
    descent_left(t).map(|d| d.peak())
}

/// Number of occurrences of `i` or `i'` for each `i`.
pub fn weight(t: &Tableau) -> Result<Composition, TableauError> {
    let counts = weight_counts(t);
    if counts.contains(&0) {
        return Err(TableauError::WeightNotComposition);
    }
    Ok(Composition::new(counts)?)
}

/// Rows read left to right, top row first.
pub fn reading_word(t: &Tableau) -> Result<Vec<usize>, TableauError> {
    require(Family::Sit, t)?;
    Ok(t.rows.iter().rev().flatten().map(|e| e.value).collect())
}

pub fn row_strips(q: &Tableau) -> Result<Vec<Vec<usize>>, TableauError> {
    require(Family::Dirt, q)?;
    Ok(strips_of(&q.positions().expect("standard")))
}

/// Lengths of the row strips in order of their first entries.
pub fn row_strip_shape(q: &Tableau) -> Result<Composition, TableauError> {
    let lengths = row_strips(q)?.iter().map(Vec::len).collect();
    Ok(Composition::new(lengths)?)
}

// ---------------------------------------------------------------------------
// Enumeration.

#[derive(Clone, Copy, PartialEq, Eq)]
enum ColumnOne {
    Upward,
    Downward,
}

/// Places `1..=n` in increasing order so rows fill left to right, the first
/// column fills in the stated direction, and (optionally) every sublevel is a
/// peak diagram. Candidates passing `accept` are returned.
fn standard_fillings(
    shape: &Composition,
    column_one: ColumnOne,
    peak_prune: bool,
    accept: impl Fn(&Tableau) -> bool,
) -> Vec<Tableau> {
    struct Search<'a, F> {
        shape: &'a [usize],
        column_one: ColumnOne,
        peak_prune: bool,
        accept: F,
        rows: Vec<Vec<usize>>,
        out: Vec<Tableau>,
    }

    impl<F: Fn(&Tableau) -> bool> Search<'_, F> {
        fn column_one_open(&self, r: usize) -> bool {
            match self.column_one {
                ColumnOne::Upward => self.rows[..r].iter().all(|row| !row.is_empty()),
                ColumnOne::Downward => self.rows[r + 1..].iter().all(|row| !row.is_empty()),
            }
        }

        fn peak_ok(&self) -> bool {
            let started: Vec<usize> = self
                .rows
                .iter()
                .map(Vec::len)
                .take_while(|&l| l > 0)
                .collect();
            started.len() <= 1 || started[..started.len() - 1].iter().all(|&l| l >= 2)
        }

        fn place(&mut self, v: usize, n: usize) {
            if v > n {
                let t = Tableau::from_values(self.rows.clone()).expect("complete filling");
                if (self.accept)(&t) {
                    self.out.push(t);
                }
                return;
            }
            for r in 0..self.shape.len() {
                let len = self.rows[r].len();
                if len == self.shape[r] || (len == 0 && !self.column_one_open(r)) {
                    continue;
                }
                self.rows[r].push(v);
                if !self.peak_prune || self.peak_ok() {
                    self.place(v + 1, n);
                }
                self.rows[r].pop();
            }
        }
    }

    let mut search = Search {
        shape: shape.parts(),
        column_one,
        peak_prune,
        accept,
        rows: vec![Vec::new(); shape.len()],
        out: Vec::new(),
    };
    search.place(1, shape.degree());
    search.out.sort();
    search.out
}

fn enumerate_smpct(alpha: &Composition) -> Vec<Tableau> {
    let n = alpha.degree();
    let mut out = Vec::new();
    for q in standard_fillings(alpha, ColumnOne::Upward, true, |t| {
        is_spct(t).unwrap_or(false)
    }) {
        for mask in 0u64..1 << n {
            let s = q.map_entries(|_, e| Entry {
                value: e.value,
                marked: mask >> (e.value - 1) & 1 == 1,
            });
            if mpct_conditions(&s) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

fn enumerate_mpct(alpha: &Composition) -> Vec<Tableau> {
    let mut out = Vec::new();
    for s in enumerate_smpct(alpha) {
        let coarsest = descent_marked_unchecked(&s).comp();
        for beta in coarsest.refinements() {
            out.push(standardize::destandardize(&s, &beta).expect("beta refines comp(Des(S))"));
        }
    }
    out.sort();
    out
}

/// Every tableau of `family` with shape `alpha`, in canonical order.
///
/// Standard families are generated by placing `1..=n` in increasing order
/// with pruning, then filtered by the family's validator. MPCTs are generated
/// by destandardising each SMPCT over every admissible weight.
pub fn enumerate(family: Family, alpha: &Composition) -> Result<Vec<Tableau>, TableauError> {
    if family.requires_peak_shape() && !alpha.is_peak() {
        return Err(TableauError::NotPeakShape(alpha.clone()));
    }
    let up = ColumnOne::Upward;
    Ok(match family {
        Family::Mpct => enumerate_mpct(alpha),
        Family::Smpct => enumerate_smpct(alpha),
        Family::Spct => standard_fillings(alpha, up, true, |t| is_spct(t).unwrap_or(false)),
        Family::Spyct => standard_fillings(alpha, up, true, |t| is_spyct(t).unwrap_or(false)),
        Family::Sit => standard_fillings(alpha, up, false, is_sit),
        Family::Syct => standard_fillings(alpha, up, false, is_syct),
        Family::Dirt => standard_fillings(alpha, ColumnOne::Downward, false, is_dirt),
    })
}
