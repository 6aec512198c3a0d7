//! Worked examples with their published values.

use std::collections::BTreeMap;

use peakqsym::insertion::{generate_dirts, insert_entry, reading_insertion, Filling};
use peakqsym::qsym::{
    self, expand_qsq_in_pyqs, fundamental_to_monomial, peak_to_fundamental, pyqs, qsq_via_mpct,
    qsq_via_smpct, qsq_via_spct, to_monomial, Basis, QSymElement,
};
use peakqsym::standardize::{destandardize, standardize};
use peakqsym::tableau::{descent_marked, descent_up, enumerate, weight, Family};
use peakqsym::{IndexSet, Tableau};

use super::checks::Check;
use super::comp;

fn t(s: &str) -> Tableau {
    s.parse().expect("tableau literal")
}

fn sum(basis: Basis, n: usize, terms: &[(&[usize], i64)]) -> QSymElement {
    QSymElement::from_terms(n, basis, terms.iter().map(|&(p, c)| (comp(p), c))).expect("terms")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn qsq_33_in_peak() -> Check {
    let want = sum(
        Basis::Peak,
        6,
        &[(&[3, 3], 1), (&[2, 2, 2], 1), (&[2, 3, 1], 1), (&[2, 4], 1)],
    );
    let got = qsq_via_spct(&comp(&[3, 3])).map_err(err)?;
    expect_eq("Q~(3,3) via SPCT", got.terms().collect::<Vec<_>>(), want.terms().collect())?;
    expect_eq("Q~(3,3) via MPCT", to_monomial(&qsq_via_mpct(&comp(&[3, 3])).map_err(err)?), to_monomial(&want))?;
    expect_eq("Q~(3,3) via SMPCT", to_monomial(&qsq_via_smpct(&comp(&[3, 3])).map_err(err)?), to_monomial(&want))?;
    let spct = enumerate(Family::Spct, &comp(&[3, 3])).map_err(err)?;
    expect_eq(
        "SPCT(3,3)",
        spct.clone(),
        ["1,2,3/4,5,6", "1,2,4/3,5,6", "1,2,5/3,4,6", "1,2,6/3,4,5"].map(t).to_vec(),
    )?;
    let des: Vec<Vec<usize>> = spct
        .iter()
        .map(|q| descent_up(q).map(|d| d.elements().to_vec()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    expect_eq("Des of SPCT(3,3)", des, vec![vec![3], vec![2, 4], vec![2, 5], vec![2]])
}

pub fn pyqs_33_in_peak() -> Check {
    let want = sum(Basis::Peak, 6, &[(&[3, 3], 1), (&[2, 2, 2], 1), (&[2, 3, 1], 1)]);
    let got = pyqs(&comp(&[3, 3])).map_err(err)?;
    expect_eq("S~(3,3)", got.terms().collect::<Vec<_>>(), want.terms().collect())?;
    expect_eq(
        "SPYCT(3,3)",
        enumerate(Family::Spyct, &comp(&[3, 3])).map_err(err)?,
        ["1,2,3/4,5,6", "1,2,4/3,5,6", "1,2,6/3,4,5"].map(t).to_vec(),
    )
}

fn pyqs_expansion(alpha: &[usize], terms: &[&[usize]]) -> Check {
    let coeffs = expand_qsq_in_pyqs(&comp(alpha)).map_err(err)?;
    let want: BTreeMap<_, usize> = terms.iter().map(|p| (comp(p), 1)).collect();
    expect_eq(&format!("coefficients of Q~{alpha:?}"), coeffs.clone(), want)?;
    let n = alpha.iter().sum();
    let lhs = to_monomial(&qsq_via_spct(&comp(alpha)).map_err(err)?);
    let rhs = to_monomial(&qsym::pyqs_combination(n, &coeffs).map_err(err)?);
    expect_eq(&format!("Q~{alpha:?} in M"), lhs, rhs)
}

pub fn qsq_32_in_pyqs() -> Check {
    pyqs_expansion(&[3, 2], &[&[3, 2], &[2, 3]])
}

pub fn qsq_323_in_pyqs() -> Check {
    pyqs_expansion(&[3, 2, 3], &[&[3, 2, 3], &[2, 3, 3], &[2, 2, 4]])?;
    expect_eq(
        "generate_dirts(3,2,3)",
        generate_dirts(&comp(&[3, 2, 3])).map_err(err)?,
        ["6,7,8/4,5/1,2,3", "6,7/4,5,8/1,2,3", "6,7/4,5/1,2,3,8"].map(t).to_vec(),
    )
}

pub fn fundamental_31() -> Check {
    let f = QSymElement::basis_element(Basis::Fundamental, &comp(&[3, 1])).map_err(err)?;
    let want = sum(
        Basis::Monomial,
        4,
        &[(&[3, 1], 1), (&[2, 1, 1], 1), (&[1, 2, 1], 1), (&[1, 1, 1, 1], 1)],
    );
    let got = fundamental_to_monomial(&f).map_err(err)?;
    expect_eq("F(3,1)", got.terms().collect::<Vec<_>>(), want.terms().collect())
}

pub fn peak_31() -> Check {
    let k = QSymElement::basis_element(Basis::Peak, &comp(&[3, 1])).map_err(err)?;
    let want = sum(
        Basis::Fundamental,
        4,
        &[(&[3, 1], 4), (&[2, 2], 4), (&[1, 2, 1], 4), (&[1, 1, 2], 4)],
    );
    let got = peak_to_fundamental(&k).map_err(err)?;
    expect_eq("K(3,1)", got.terms().collect::<Vec<_>>(), want.terms().collect())
}

pub const EXAMPLE_MPCT: &str = "1',2',3/2',2,4,4,5'/4,4,4,5'/5',6,6";
pub const EXAMPLE_SMPCT: &str = "1',2',5/3',4,9,10,11'/6,7,8,12'/13',14,15";

pub fn standardisation() -> Check {
    let m = t(EXAMPLE_MPCT);
    expect_eq("wt(T)", weight(&m).map_err(err)?, comp(&[1, 3, 1, 5, 3, 2]))?;
    let s = standardize(&m).map_err(err)?;
    expect_eq("Std(T)", s.clone(), t(EXAMPLE_SMPCT))?;
    expect_eq(
        "Des(Std T)",
        descent_marked(&s).map_err(err)?,
        IndexSet::new(15, vec![1, 5, 10]).map_err(err)?,
    )?;
    let back = destandardize(&s, &comp(&[1, 3, 1, 5, 3, 2])).map_err(err)?;
    expect_eq("destandardize", back, m)
}

pub fn insertion_examples() -> Check {
    let before = Filling::new(vec![vec![3, 4], vec![5, 6, 12], vec![8, 9, 11]]).map_err(err)?;
    let after = insert_entry(&before, 10).map_err(err)?;
    expect_eq(
        "insert 10",
        after.filling.rows().to_vec(),
        vec![vec![3, 4, 12], vec![5, 6, 11], vec![8, 9, 10]],
    )?;
    let cases = [
        ("1,2,3/4,5", "1,2,3/4,5", "3,4,5/1,2"),
        ("1,2,4/3,5", "1,2,4/3,5", "3,4,5/1,2"),
        ("1,2,5/3,4", "1,2/3,4,5", "3,4/1,2,5"),
    ];
    expect_eq(
        "SPCT(3,2)",
        enumerate(Family::Spct, &comp(&[3, 2])).map_err(err)?,
        cases.iter().map(|c| t(c.0)).collect(),
    )?;
    for (tab, p, q) in cases {
        let res = reading_insertion(&t(tab)).map_err(err)?;
        expect_eq(&format!("P({tab})"), res.p, t(p))?;
        expect_eq(&format!("Q({tab})"), res.q, t(q))?;
    }
    Ok(())
}

pub fn all() -> Vec<(&'static str, Check)> {
    vec![
        ("Q~(3,3) in the peak basis", qsq_33_in_peak()),
        ("S~(3,3) in the peak basis", pyqs_33_in_peak()),
        ("Q~(3,2) = S~(3,2) + S~(2,3)", qsq_32_in_pyqs()),
        ("Q~(3,2,3) in the S~ basis", qsq_323_in_pyqs()),
        ("F(3,1) in the monomial basis", fundamental_31()),
        ("K(3,1) in the fundamental basis", peak_31()),
        ("standardisation and its inverse", standardisation()),
        ("insertion and reading insertion", insertion_examples()),
    ]
}
