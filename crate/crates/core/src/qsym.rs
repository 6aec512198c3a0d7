//! Homogeneous quasisymmetric functions in the monomial, fundamental and peak
//! bases, with exact integer coefficients.
//!
//! Only the downward changes of basis `K -> F -> M` are provided. Two elements
//! compare equal when their monomial expansions agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::composition::{Composition, IndexSet};
use crate::insertion::{self, InsertionError};
use crate::tableau::{self, Family, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSymError {
    #[error("({0}) is not a peak composition")]
    NotPeak(Composition),
    #[error("term ({composition}) has degree {found}, expected {expected}")]
    DegreeMismatch {
        composition: Composition,
        expected: usize,
        found: usize,
    },
    #[error("expected an element in the {expected} basis, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Insertion(#[from] InsertionError),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "M")]
    Monomial,
    #[serde(rename = "F")]
    Fundamental,
    #[serde(rename = "K")]
    Peak,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "M",
            Basis::Fundamental => "F",
            Basis::Peak => "K",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A finite integer combination of basis functions of one degree.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct QSymElement {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymElement {
    pub fn zero(degree: usize, basis: Basis) -> Result<Self, QSymError> {
        if degree == 0 {
            return Err(QSymError::ZeroDegree);
        }
        Ok(Self {
            degree,
            basis,
            terms: BTreeMap::new(),
        })
    }

    /// The single basis function indexed by `alpha`.
    pub fn basis_element(basis: Basis, alpha: &Composition) -> Result<Self, QSymError> {
        let mut e = Self::zero(alpha.degree(), basis)?;
        e.add_term(alpha.clone(), 1)?;
        Ok(e)
    }

    pub fn from_terms<C: Into<BigInt>>(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Composition, C)>,
    ) -> Result<Self, QSymError> {
        let mut e = Self::zero(degree, basis)?;
        for (alpha, coeff) in terms {
            e.add_term(alpha, coeff)?;
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Nonzero terms in canonical composition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, alpha: &Composition) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `coeff` times the basis function at `alpha`.
    pub fn add_term(
        &mut self,
        alpha: Composition,
        coeff: impl Into<BigInt>,
    ) -> Result<(), QSymError> {
        if alpha.degree() != self.degree {
            return Err(QSymError::DegreeMismatch {
                expected: self.degree,
                found: alpha.degree(),
                composition: alpha,
            });
        }
        if self.basis == Basis::Peak && !alpha.is_peak() {
            return Err(QSymError::NotPeak(alpha));
        }
        self.add_unchecked(alpha, coeff.into());
        Ok(())
    }

    fn add_unchecked(&mut self, alpha: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            // re-borrow to remove the key just emptied
            let keys: Vec<Composition> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in keys {
                self.terms.remove(&k);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), QSymError> {
        if self.basis != other.basis {
            return Err(QSymError::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        if self.degree != other.degree {
            let composition = other
                .terms
                .keys()
                .next()
                .cloned()
                .unwrap_or_else(|| Composition::row(other.degree).expect("positive degree"));
            return Err(QSymError::DegreeMismatch {
                composition,
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// Sum of two elements in the same basis and degree.
    pub fn try_add(&self, other: &Self) -> Result<Self, QSymError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (alpha, coeff) in &other.terms {
            out.add_unchecked(alpha.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, QSymError> {
        self.try_add(&other.scaled(&-BigInt::one()))
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        let mut out = Self {
            degree: self.degree,
            basis: self.basis,
            terms: BTreeMap::new(),
        };
        for (alpha, coeff) in &self.terms {
            out.add_unchecked(alpha.clone(), coeff * factor);
        }
        out
    }

    fn require_basis(&self, expected: Basis) -> Result<(), QSymError> {
        if self.basis == expected {
            Ok(())
        } else {
            Err(QSymError::BasisMismatch {
                expected,
                found: self.basis,
            })
        }
    }
}

impl PartialEq for QSymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return self.is_zero() && other.is_zero();
        }
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            to_monomial(self).terms == to_monomial(other).terms
        }
    }
}

impl Eq for QSymElement {}

#[derive(Serialize, Deserialize)]
struct RawElement {
    degree: usize,
    basis: Basis,
    terms: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    composition: Composition,
    coeff: Coefficient,
}

/// JSON coefficient: a number when it fits `i64`, a decimal string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

impl From<QSymElement> for RawElement {
    fn from(e: QSymElement) -> Self {
        RawElement {
            degree: e.degree,
            basis: e.basis,
            terms: e
                .terms
                .into_iter()
                .map(|(composition, c)| RawTerm {
                    composition,
                    coeff: match c.to_i64() {
                        Some(small) => Coefficient::Small(small),
                        None => Coefficient::Big(c.to_string()),
                    },
                })
                .collect(),
        }
    }
}

impl TryFrom<RawElement> for QSymElement {
    type Error = String;

    fn try_from(raw: RawElement) -> Result<Self, Self::Error> {
        let mut e = QSymElement::zero(raw.degree, raw.basis).map_err(|e| e.to_string())?;
        for term in raw.terms {
            let coeff = match term.coeff {
                Coefficient::Small(c) => BigInt::from(c),
                Coefficient::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| format!("bad coefficient {s:?}"))?,
            };
            e.add_term(term.composition, coeff)
                .map_err(|e| e.to_string())?;
        }
        Ok(e)
    }
}

// ---------------------------------------------------------------------------
// Changes of basis.

/// `F_alpha = sum of M_beta over beta refining alpha`.
pub fn fundamental_to_monomial(e: &QSymElement) -> Result<QSymElement, QSymError> {
    e.require_basis(Basis::Fundamental)?;
    let mut out = QSymElement::zero(e.degree, Basis::Monomial)?;
    for (alpha, coeff) in &e.terms {
        for beta in alpha.refinements() {
            out.add_unchecked(beta, coeff.clone());
        }
    }
    Ok(out)
}

/// `K_alpha = 2^(|Peak(alpha)|+1) * sum of F_beta` over `beta` with
/// `Peak(alpha) ⊆ set(beta) △ (set(beta)+1)`.
pub fn peak_to_fundamental(e: &QSymElement) -> Result<QSymElement, QSymError> {
    e.require_basis(Basis::Peak)?;
    let mut out = QSymElement::zero(e.degree, Basis::Fundamental)?;
    for (alpha, coeff) in &e.terms {
        let peak = alpha.peak();
        let factor = BigInt::one() << (peak.len() + 1);
        let scaled = coeff * &factor;
        for d in IndexSet::all_subsets(e.degree) {
            if d.admits_peak_set(&peak) {
                out.add_unchecked(d.comp(), scaled.clone());
            }
        }
    }
    Ok(out)
}

pub fn to_monomial(e: &QSymElement) -> QSymElement {
    match e.basis {
        Basis::Monomial => e.clone(),
        Basis::Fundamental => fundamental_to_monomial(e).expect("fundamental basis"),
        Basis::Peak => {
            let f = peak_to_fundamental(e).expect("peak basis");
            fundamental_to_monomial(&f).expect("fundamental basis")
        }
    }
}

// ---------------------------------------------------------------------------
// Named families.

fn require_peak(alpha: &Composition) -> Result<(), QSymError> {
    if alpha.is_peak() {
        Ok(())
    } else {
        Err(QSymError::NotPeak(alpha.clone()))
    }
}

/// `Q~_alpha` as the sum of `M_wt(T)` over `T` in `MPCT(alpha)`.
pub fn qsq_via_mpct(alpha: &Composition) -> Result<QSymElement, QSymError> {
    require_peak(alpha)?;
    let mut out = QSymElement::zero(alpha.degree(), Basis::Monomial)?;
    for t in tableau::enumerate(Family::Mpct, alpha)? {
        out.add_unchecked(tableau::weight(&t)?, BigInt::one());
    }
    Ok(out)
}

/// `Q~_alpha` as the sum of `F_comp(Des(S))` over `S` in `SMPCT(alpha)`.
pub fn qsq_via_smpct(alpha: &Composition) -> Result<QSymElement, QSymError> {
    require_peak(alpha)?;
    let mut out = QSymElement::zero(alpha.degree(), Basis::Fundamental)?;
    for s in tableau::enumerate(Family::Smpct, alpha)? {
        out.add_unchecked(tableau::descent_marked(&s)?.comp(), BigInt::one());
    }
    Ok(out)
}

/// `Q~_alpha` as the sum of `K_comp(Peak↑(T))` over `T` in `SPCT(alpha)`.
pub fn qsq_via_spct(alpha: &Composition) -> Result<QSymElement, QSymError> {
    require_peak(alpha)?;
    let mut out = QSymElement::zero(alpha.degree(), Basis::Peak)?;
    for t in tableau::enumerate(Family::Spct, alpha)? {
        out.add_unchecked(tableau::peak_up(&t)?.comp(), BigInt::one());
    }
    Ok(out)
}

/// `S~_alpha` as the sum of `K_comp(Peak←(T))` over `T` in `SPYCT(alpha)`.
pub fn pyqs(alpha: &Composition) -> Result<QSymElement, QSymError> {
    require_peak(alpha)?;
    let mut out = QSymElement::zero(alpha.degree(), Basis::Peak)?;
    for t in tableau::enumerate(Family::Spyct, alpha)? {
        out.add_unchecked(tableau::peak_left(&t)?.comp(), BigInt::one());
    }
    Ok(out)
}

/// The dual immaculate function: sum of `F_comp(Des↑(T))` over `SIT(alpha)`.
pub fn dual_immaculate(alpha: &Composition) -> Result<QSymElement, QSymError> {
    let mut out = QSymElement::zero(alpha.degree(), Basis::Fundamental)?;
    for t in tableau::enumerate(Family::Sit, alpha)? {
        out.add_unchecked(tableau::descent_up(&t)?.comp(), BigInt::one());
    }
    Ok(out)
}

/// The Young quasisymmetric Schur function: sum of `F_comp(Des←(T))` over
/// `SYCT(alpha)`.
pub fn young_qs(alpha: &Composition) -> Result<QSymElement, QSymError> {
    let mut out = QSymElement::zero(alpha.degree(), Basis::Fundamental)?;
    for t in tableau::enumerate(Family::Syct, alpha)? {
        out.add_unchecked(tableau::descent_left(&t)?.comp(), BigInt::one());
    }
    Ok(out)
}

/// Coefficients `c(alpha, beta)` of `Q~_alpha` in the `S~` basis: the number
/// of generated DIRTs of shape `beta`.
pub fn expand_qsq_in_pyqs(alpha: &Composition) -> Result<BTreeMap<Composition, usize>, QSymError> {
    require_peak(alpha)?;
    let mut coeffs = BTreeMap::new();
    for q in insertion::generate_dirts(alpha)? {
        *coeffs.entry(q.shape().clone()).or_insert(0) += 1;
    }
    Ok(coeffs)
}

/// `sum of c_beta * S~_beta`, written in the peak basis.
pub fn pyqs_combination(
    degree: usize,
    coeffs: &BTreeMap<Composition, usize>,
) -> Result<QSymElement, QSymError> {
    let mut out = QSymElement::zero(degree, Basis::Peak)?;
    for (beta, &c) in coeffs {
        out = out.try_add(&pyqs(beta)?.scaled(&BigInt::from(c)))?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Rendering.

/// Function families that appear in printed identities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symbol {
    Monomial,
    Fundamental,
    Peak,
    QSchurQ,
    PeakYoung,
    DualImmaculate,
    YoungQs,
}

impl From<Basis> for Symbol {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Monomial => Symbol::Monomial,
            Basis::Fundamental => Symbol::Fundamental,
            Basis::Peak => Symbol::Peak,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Notation {
    Text,
    Latex,
}

impl Symbol {
    fn text_tag(self) -> &'static str {
        match self {
            Symbol::Monomial => "M",
            Symbol::Fundamental => "F",
            Symbol::Peak => "K",
            Symbol::QSchurQ => "Q~",
            Symbol::PeakYoung => "S~",
            Symbol::DualImmaculate => "DI",
            Symbol::YoungQs => "YS",
        }
    }

    fn latex_tag(self) -> &'static str {
        match self {
            Symbol::Monomial => "M",
            Symbol::Fundamental => "F",
            Symbol::Peak => "K",
            Symbol::QSchurQ => "\\tilde{Q}",
            Symbol::PeakYoung => "\\tilde{S}",
            Symbol::DualImmaculate => "\\mathfrak{S}",
            Symbol::YoungQs => "\\mathcal{S}",
        }
    }

    /// `K[3,1]` or `K_{(3,1)}`.
    pub fn render(self, alpha: &Composition, notation: Notation) -> String {
        match notation {
            Notation::Text => format!("{}[{alpha}]", self.text_tag()),
            Notation::Latex => format!("{}_{{({alpha})}}", self.latex_tag()),
        }
    }
}

/// Renders `sum of coeff * symbol_alpha` in the given order.
pub fn render_sum<'a>(
    terms: impl IntoIterator<Item = (Symbol, &'a Composition, BigInt)>,
    notation: Notation,
) -> String {
    let mut out = String::new();
    for (symbol, alpha, coeff) in terms {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        let (plus, minus, times) = match notation {
            Notation::Text => (" + ", " - ", "*"),
            Notation::Latex => ("+", "-", ""),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { minus } else { plus });
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude}{times}"));
        }
        out.push_str(&symbol.render(alpha, notation));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_element(e: &QSymElement, notation: Notation) -> String {
    let symbol = Symbol::from(e.basis);
    render_sum(e.terms().map(|(a, c)| (symbol, a, c.clone())), notation)
}

/// `lhs = rhs` with the given left-hand label.
pub fn render_identity(lhs: Symbol, alpha: &Composition, rhs: &str, notation: Notation) -> String {
    format!("{} = {rhs}", lhs.render(alpha, notation))
}
