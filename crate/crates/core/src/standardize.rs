//! Standardisation of marked tableaux, its inverse over refinements, and the
//! marking fibres over a standard peak composition tableau.

use thiserror::Error;

use crate::composition::{Composition, IndexSet};
use crate::tableau::{self, Entry, Family, Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StandardizeError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("({beta}) does not refine ({coarsest})")]
    NotRefinement {
        beta: Composition,
        coarsest: Composition,
    },
    #[error("degree mismatch: tableau has degree {tableau}, argument has degree {argument}")]
    DegreeMismatch { tableau: usize, argument: usize },
    #[error("peak set {peak} is not contained in {descents} △ ({descents}+1)")]
    InadmissibleDescents { peak: IndexSet, descents: IndexSet },
}

fn require(family: Family, t: &Tableau) -> Result<(), StandardizeError> {
    if tableau::is_member(family, t)? {
        Ok(())
    } else {
        Err(TableauError::NotMember(family).into())
    }
}

/// Relabels an MPCT by `1..=n`. For each letter `i` in turn, the boxes holding
/// `i'` are numbered bottom to top, then the boxes holding `i` along rows from
/// the highest row down. Marks are kept.
pub fn standardize(t: &Tableau) -> Result<Tableau, StandardizeError> {
    require(Family::Mpct, t)?;
    let mut boxes: Vec<((usize, usize), Entry)> = t.boxes().collect();
    boxes.sort_by(|&((ca, ra), a), &((cb, rb), b)| {
        a.cmp(&b).then_with(|| {
            if a.marked {
                ra.cmp(&rb)
            } else {
                rb.cmp(&ra).then(ca.cmp(&cb))
            }
        })
    });
    let mut label: Vec<Vec<usize>> = t.rows().iter().map(|row| vec![0; row.len()]).collect();
    for (next, ((c, r), _)) in boxes.into_iter().enumerate() {
        label[r - 1][c - 1] = next + 1;
    }
    Ok(t.map_entries(|(c, r), e| Entry {
        value: label[r - 1][c - 1],
        marked: e.marked,
    }))
}

/// The unique MPCT with weight `beta` standardising to `s`: entries of `s` in
/// the `j`-th block of `beta` become `j`, keeping marks.
pub fn destandardize(s: &Tableau, beta: &Composition) -> Result<Tableau, StandardizeError> {
    require(Family::Smpct, s)?;
    if beta.degree() != s.degree() {
        return Err(StandardizeError::DegreeMismatch {
            tableau: s.degree(),
            argument: beta.degree(),
        });
    }
    let coarsest = tableau::descent_marked_unchecked(s).comp();
    if !beta.refines(&coarsest) {
        return Err(StandardizeError::NotRefinement {
            beta: beta.clone(),
            coarsest,
        });
    }
    let mut block_of = Vec::with_capacity(s.degree() + 1);
    block_of.push(0);
    for (j, &part) in beta.parts().iter().enumerate() {
        block_of.extend(std::iter::repeat_n(j + 1, part));
    }
    let t = s.map_entries(|_, e| Entry {
        value: block_of[e.value],
        marked: e.marked,
    });
    debug_assert!(tableau::is_mpct(&t).unwrap_or(false));
    Ok(t)
}

/// Clears every mark of a standard marked tableau.
pub fn unmark(s: &Tableau) -> Result<Tableau, StandardizeError> {
    require(Family::Smpct, s)?;
    let q = s.map_entries(|_, e| e.unmarked());
    assert!(
        tableau::is_spct(&q).unwrap_or(false),
        "unmarking an SMPCT must give an SPCT"
    );
    Ok(q)
}

/// All SMPCTs `S` with `unmark(S) = q` and descent set `d`.
///
/// Write `up(i)` for `i+1` strictly above `i` in `q`. The descent status of
/// `i` in a marking depends on one mark only: if `up(i)`, `i` is a descent
/// iff `i` is unmarked; otherwise iff `i+1` is marked. Matching `d` therefore
/// forces the mark on every entry except those `p` with `up(p-1)` (or `p = 1`)
/// and not `up(p)` (or `p = n`), where it is free. There is one free entry per
/// maximal run of descents plus the initial run, i.e. `|Peak↑(q)| + 1` of
/// them. An entry constrained from both sides sits at a peak `p`, where the
/// two constraints agree exactly when `p` lies in `d △ (d+1)`.
pub fn marking_fiber(q: &Tableau, d: &IndexSet) -> Result<Vec<Tableau>, StandardizeError> {
    require(Family::Spct, q)?;
    let n = q.degree();
    if d.degree() != n {
        return Err(StandardizeError::DegreeMismatch {
            tableau: n,
            argument: d.degree(),
        });
    }
    let des_up = tableau::descent_up_unchecked(q);
    let peak = des_up.peak();
    if !d.admits_peak_set(&peak) {
        return Err(StandardizeError::InadmissibleDescents {
            peak,
            descents: d.clone(),
        });
    }

    let up = |i: usize| des_up.contains(i);
    let mut forced: Vec<Option<bool>> = vec![None; n + 1];
    let mut free = Vec::new();
    for p in 1..=n {
        if p < n && up(p) {
            forced[p] = Some(!d.contains(p));
        } else if p > 1 && !up(p - 1) {
            forced[p] = Some(d.contains(p - 1));
        } else {
            free.push(p);
        }
    }
    debug_assert_eq!(free.len(), peak.len() + 1);

    let mut fiber: Vec<Tableau> = (0u64..1 << free.len())
        .map(|choice| {
            let mut marks: Vec<bool> = forced.iter().map(|m| m.unwrap_or(false)).collect();
            for (j, &p) in free.iter().enumerate() {
                marks[p] = choice >> j & 1 == 1;
            }
            q.map_entries(|_, e| Entry {
                value: e.value,
                marked: marks[e.value],
            })
        })
        .collect();
    debug_assert!(fiber
        .iter()
        .all(|s| tableau::descent_marked_unchecked(s) == *d));
    fiber.sort();
    Ok(fiber)
}
