//! Exhaustive checks of the expansion identities and the insertion
//! bijection over every peak composition up to a degree bound.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::composition::{peak_compositions, Composition, IndexSet};
use crate::insertion;
use crate::qsym::{self, to_monomial, Basis, QSymElement};
use crate::standardize;
use crate::tableau::{self, Family, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    TripleAgreement,
    Unmark,
    Bijection,
    Expansion,
    Dirts,
    Characterisation,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::TripleAgreement,
        Check::Unmark,
        Check::Bijection,
        Check::Expansion,
        Check::Dirts,
        Check::Characterisation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TripleAgreement => "triple-agreement",
            Check::Unmark => "unmark",
            Check::Bijection => "bijection",
            Check::Expansion => "expansion",
            Check::Dirts => "dirts",
            Check::Characterisation => "characterisation",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub theorem: Check,
    pub alpha: Composition,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub theorem: Check,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_degree: usize,
    pub checks: Vec<CheckRecord>,
    pub timings: Vec<Timing>,
    pub elapsed: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs each selected check on every peak composition of degree `1..=max_n`.
pub fn run(checks: &[Check], max_n: usize) -> VerifyReport {
    let start = Instant::now();
    let mut records = Vec::new();
    let mut timings = Vec::new();
    for &check in checks {
        let began = Instant::now();
        for n in 1..=max_n {
            for alpha in peak_compositions(n) {
                records.push(check_alpha(check, &alpha));
            }
        }
        timings.push(Timing {
            theorem: check,
            seconds: began.elapsed().as_secs_f64(),
        });
    }
    VerifyReport {
        max_degree: max_n,
        checks: records,
        timings,
        elapsed: start.elapsed().as_secs_f64(),
    }
}

pub fn check_alpha(check: Check, alpha: &Composition) -> CheckRecord {
    let outcome = match check {
        Check::TripleAgreement => triple_agreement(alpha),
        Check::Unmark => unmark_fibers(alpha),
        Check::Bijection => bijection(alpha),
        Check::Expansion => expansion(alpha),
        Check::Dirts => dirts(alpha),
        Check::Characterisation => characterisation(alpha),
    };
    let (pass, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CheckRecord {
        theorem: check,
        alpha: alpha.clone(),
        pass,
        detail,
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn triple_agreement(alpha: &Composition) -> Outcome {
    let err = |e: qsym::QSymError| e.to_string();
    let m = to_monomial(&qsym::qsq_via_mpct(alpha).map_err(err)?);
    let f = to_monomial(&qsym::qsq_via_smpct(alpha).map_err(err)?);
    let k = to_monomial(&qsym::qsq_via_spct(alpha).map_err(err)?);
    ensure(m == f, || "MPCT and SMPCT sums differ".into())?;
    ensure(f == k, || "SMPCT and SPCT sums differ".into())?;
    Ok(format!("{} monomial terms", m.len()))
}

fn unmark_fibers(alpha: &Composition) -> Outcome {
    let n = alpha.degree();
    let spct = tableau::enumerate(Family::Spct, alpha).map_err(|e| e.to_string())?;
    let mut fibers: BTreeMap<Tableau, QSymElement> = BTreeMap::new();
    for s in tableau::enumerate(Family::Smpct, alpha).map_err(|e| e.to_string())? {
        let q = standardize::unmark(&s).map_err(|e| e.to_string())?;
        let des = tableau::descent_marked(&s).map_err(|e| e.to_string())?;
        fibers
            .entry(q)
            .or_insert_with(|| QSymElement::zero(n, Basis::Fundamental).expect("n > 0"))
            .add_term(des.comp(), 1)
            .map_err(|e| e.to_string())?;
    }
    ensure(fibers.keys().eq(spct.iter()), || {
        "unmarked SMPCTs are not exactly the SPCTs".into()
    })?;
    for q in &spct {
        let peak = tableau::peak_up(q).map_err(|e| e.to_string())?;
        let f_sum = &fibers[q];
        let k = QSymElement::basis_element(Basis::Peak, &peak.comp()).expect("peak comp");
        let expected = qsym::peak_to_fundamental(&k).expect("peak basis");
        ensure(*f_sum == expected, || format!("F-sum over fiber of {q} differs"))?;
        let size = 1usize << (peak.len() + 1);
        for d in IndexSet::all_subsets(n) {
            let direct = f_sum.coefficient(&d.comp());
            let by_rule = match standardize::marking_fiber(q, &d) {
                Ok(fiber) => {
                    ensure(fiber.len() == size, || {
                        format!("fiber of ({q}, {d}) has {} elements, expected {size}", fiber.len())
                    })?;
                    fiber.len()
                }
                Err(_) => 0,
            };
            ensure(BigInt::from(by_rule) == direct, || {
                format!("marking_fiber({q}, {d}) has {by_rule} elements, direct count {direct}")
            })?;
        }
    }
    Ok(format!("{} fibers", spct.len()))
}

/// `(c, r)` of each letter of the reading word of `t`.
fn reading_positions(t: &Tableau) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in (1..=t.num_rows()).rev() {
        for c in 1..=t.rows()[r - 1].len() {
            out.push((c, r));
        }
    }
    out
}

fn leading_columns(t: &Tableau, width: usize) -> Vec<Vec<usize>> {
    t.values()
        .into_iter()
        .map(|row| row.into_iter().take(width).collect())
        .collect()
}

fn bijection(alpha: &Composition) -> Outcome {
    let sit = tableau::enumerate(Family::Sit, alpha).map_err(|e| e.to_string())?;
    let spct: HashSet<Tableau> = tableau::enumerate(Family::Spct, alpha)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let reversed = alpha.reversed();
    let mut pairs = HashSet::new();
    for t in &sit {
        let (res, trace) = insertion::reading_insertion_traced(t).map_err(|e| e.to_string())?;
        let (p, q) = (&res.p, &res.q);
        ensure(tableau::is_syct(p), || format!("P({t}) = {p} is not an SYCT"))?;
        ensure(tableau::is_dirt(q), || format!("Q({t}) = {q} is not a DIRT"))?;
        ensure(p.shape() == q.shape(), || format!("shapes of P, Q differ for {t}"))?;
        let strips = tableau::row_strip_shape(q).map_err(|e| e.to_string())?;
        ensure(strips == reversed, || {
            format!("row strip shape of Q({t}) is ({strips})")
        })?;
        let des_t = tableau::descent_up(t).map_err(|e| e.to_string())?;
        let des_p = tableau::descent_left(p).map_err(|e| e.to_string())?;
        ensure(des_t == des_p, || format!("Des of {t} and {p} differ"))?;
        ensure(leading_columns(p, 1) == leading_columns(t, 1), || {
            format!("first column of {t} not preserved")
        })?;

        let positions = reading_positions(t);
        let mut last_col: Option<(usize, usize)> = None;
        for (ins, &(c, r)) in trace.iter().zip(&positions) {
            let new_col = ins.new_box.0;
            ensure(new_col >= c, || {
                format!("entry at ({c},{r}) of {t} created a box in column {new_col}")
            })?;
            if let Some((prev_row, prev_col)) = last_col {
                if prev_row == r {
                    ensure(new_col > prev_col, || {
                        format!("new boxes from row {r} of {t} do not move right")
                    })?;
                }
            }
            last_col = Some((r, new_col));
        }

        let is_spyct = p.shape().is_peak() && tableau::is_spyct(p).unwrap_or(false);
        if spct.contains(t) {
            ensure(is_spyct, || format!("P({t}) = {p} is not an SPYCT"))?;
            let peak_t = tableau::peak_up(t).map_err(|e| e.to_string())?;
            let peak_p = tableau::peak_left(p).map_err(|e| e.to_string())?;
            ensure(peak_t == peak_p, || format!("peak sets of {t} and {p} differ"))?;
            ensure(q.shape().is_peak(), || format!("Q({t}) has non-peak shape"))?;
            ensure(leading_columns(p, 2) == leading_columns(t, 2), || {
                format!("first two columns of {t} not preserved")
            })?;
        } else {
            ensure(!is_spyct, || format!("P({t}) = {p} is an SPYCT but {t} is not an SPCT"))?;
        }
        ensure(pairs.insert(res.clone()), || format!("pair for {t} repeats"))?;
    }
    let counted = insertion::count_pairs(alpha).map_err(|e| e.to_string())?;
    ensure(counted == spct.len(), || {
        format!("|SPCT| = {} but {counted} (P, Q) pairs", spct.len())
    })?;
    Ok(format!("{} SITs, {} SPCTs", sit.len(), spct.len()))
}

fn expansion(alpha: &Composition) -> Outcome {
    let err = |e: qsym::QSymError| e.to_string();
    let coeffs = qsym::expand_qsq_in_pyqs(alpha).map_err(err)?;
    ensure(coeffs.keys().all(Composition::is_peak), || {
        "coefficient on a non-peak composition".into()
    })?;
    let lhs = to_monomial(&qsym::qsq_via_spct(alpha).map_err(err)?);
    let rhs = to_monomial(&qsym::pyqs_combination(alpha.degree(), &coeffs).map_err(err)?);
    ensure(lhs == rhs, || "expansion identity fails".into())?;
    let total: usize = coeffs.values().sum();
    Ok(format!("{} terms, coefficient sum {total}", coeffs.len()))
}

fn dirts(alpha: &Composition) -> Outcome {
    let generated = insertion::generate_dirts(alpha).map_err(|e| e.to_string())?;
    let as_set: BTreeSet<Tableau> = generated.iter().cloned().collect();
    ensure(as_set.len() == generated.len(), || "duplicate output".into())?;
    let reversed = alpha.reversed();
    let mut filtered = BTreeSet::new();
    for beta in peak_compositions(alpha.degree()) {
        for q in tableau::enumerate(Family::Dirt, &beta).map_err(|e| e.to_string())? {
            if tableau::row_strip_shape(&q).map_err(|e| e.to_string())? == reversed {
                filtered.insert(q);
            }
        }
    }
    ensure(as_set == filtered, || {
        format!("generated {} DIRTs, filter finds {}", as_set.len(), filtered.len())
    })?;
    Ok(format!("{} DIRTs", generated.len()))
}

fn characterisation(alpha: &Composition) -> Outcome {
    let single = insertion::is_single_term(alpha).map_err(|e| e.to_string())?;
    let count = insertion::generate_dirts(alpha)
        .map_err(|e| e.to_string())?
        .len();
    ensure(single == (count == 1), || {
        format!("pattern says {single}, {count} DIRTs generated")
    })?;
    Ok(format!("{count} DIRTs"))
}
