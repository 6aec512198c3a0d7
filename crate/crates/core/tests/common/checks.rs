//! Property checks shared by the proptest suite and the acceptance gate.
//! Each returns a description of the first violation found.

use std::collections::BTreeSet;

use peakqsym::standardize::{destandardize, marking_fiber, standardize};
use peakqsym::tableau::{self, enumerate, Family};
use peakqsym::{Composition, IndexSet, Tableau};

use super::*;

pub type Check = Result<(), String>;

fn fail<T>(msg: String) -> Result<T, String> {
    Err(msg)
}

pub fn set_comp_round_trip(parts: &[usize]) -> Check {
    let alpha = comp(parts);
    let n = alpha.degree();
    let set = alpha.set();
    if set.elements().iter().copied().collect::<BTreeSet<_>>() != naive_set(parts) {
        return fail(format!("set({alpha}) = {set}"));
    }
    if set.comp() != alpha {
        return fail(format!("comp(set({alpha})) = {}", set.comp()));
    }
    let back = IndexSet::new(n, set.elements().to_vec()).map_err(|e| e.to_string())?;
    if back.comp().parts() != naive_comp(n, &naive_set(parts)) {
        return fail(format!("comp of {back} disagrees with oracle"));
    }
    let peak: BTreeSet<usize> = alpha.peak().elements().iter().copied().collect();
    if peak != naive_peak_set(&naive_set(parts)) {
        return fail(format!("Peak({alpha}) = {}", alpha.peak()));
    }
    if alpha.is_peak() != naive_is_peak(parts) {
        return fail(format!("is_peak({alpha})"));
    }
    Ok(())
}

pub fn set_round_trip(n: usize, elements: &BTreeSet<usize>) -> Check {
    let set = IndexSet::new(n, elements.iter().copied().collect()).map_err(|e| e.to_string())?;
    let again = set.comp().set();
    if again != set {
        return fail(format!("set(comp({set})) = {again}"));
    }
    Ok(())
}

/// `beta` refines `alpha` iff `set(alpha) ⊆ set(beta)`.
pub fn refinement_matches_sets(beta: &[usize], alpha: &[usize]) -> Check {
    let (b, a) = (comp(beta), comp(alpha));
    let by_sets = naive_set(alpha).is_subset(&naive_set(beta));
    if b.refines(&a) != by_sets || naive_refines(beta, alpha) != by_sets {
        return fail(format!("({b}) refines ({a}): sets say {by_sets}"));
    }
    if a.set().is_subset(&b.set()) != by_sets {
        return fail(format!("is_subset for ({a}), ({b})"));
    }
    Ok(())
}

/// Std and its inverse on one MPCT.
pub fn std_round_trip(t: &Tableau) -> Check {
    let s = standardize(t).map_err(|e| e.to_string())?;
    let expected = tableau_of(&naive_standardize(&grid_of(t)));
    if s != expected {
        return fail(format!("Std({t}) = {s}, oracle {expected}"));
    }
    if !naive_smpct(&grid_of(&s)) {
        return fail(format!("Std({t}) = {s} is not an SMPCT"));
    }
    let w = comp(&naive_weight(&grid_of(t)));
    let back = destandardize(&s, &w).map_err(|e| e.to_string())?;
    if back != *t {
        return fail(format!("destandardize(Std({t}), {w}) = {back}"));
    }
    let des: BTreeSet<usize> = naive_des_marked(&grid_of(&s));
    let coarsest = naive_comp(s.degree(), &des);
    if !naive_refines(w.parts(), &coarsest) {
        return fail(format!("wt({t}) does not refine comp(Des(Std))"));
    }
    Ok(())
}

/// Destandardising `s` over every admissible weight and standardising back.
pub fn destd_round_trip(s: &Tableau) -> Check {
    let n = s.degree();
    let des = naive_des_marked(&grid_of(s));
    let coarsest = naive_comp(n, &des);
    for beta in naive_compositions(n) {
        let result = destandardize(s, &comp(&beta));
        match (naive_refines(&beta, &coarsest), result) {
            (true, Ok(t)) => {
                if !naive_mpct(&grid_of(&t)) || naive_weight(&grid_of(&t)) != beta {
                    return fail(format!("destandardize({s}, {beta:?}) = {t}"));
                }
                let again = standardize(&t).map_err(|e| e.to_string())?;
                if again != *s {
                    return fail(format!("Std(destandardize({s}, {beta:?})) = {again}"));
                }
            }
            (false, Err(_)) => {}
            (expected, got) => {
                return fail(format!(
                    "destandardize({s}, {beta:?}): admissible {expected}, got {got:?}"
                ))
            }
        }
    }
    Ok(())
}

/// The library enumerator against the brute-force oracle for one shape.
pub fn enumerator_matches_oracle(family: Family, parts: &[usize]) -> Check {
    let alpha = comp(parts);
    let listed = enumerate(family, &alpha).map_err(|e| e.to_string())?;
    let as_set: BTreeSet<Tableau> = listed.iter().cloned().collect();
    if as_set.len() != listed.len() {
        return fail(format!("{family}({alpha}) lists duplicates"));
    }
    if !listed.windows(2).all(|w| w[0] < w[1]) {
        return fail(format!("{family}({alpha}) not in canonical order"));
    }
    let oracle = match family {
        Family::Mpct => brute_force_mpct(parts),
        Family::Smpct => brute_force_smpct(parts),
        Family::Spct => brute_force(parts, naive_spct),
        Family::Spyct => brute_force(parts, naive_spyct),
        Family::Sit => brute_force(parts, naive_sit),
        Family::Syct => brute_force(parts, naive_syct),
        Family::Dirt => brute_force(parts, naive_dirt),
    };
    if as_set != oracle {
        return fail(format!(
            "{family}({alpha}): enumerator {} tableaux, oracle {}",
            as_set.len(),
            oracle.len()
        ));
    }
    for t in &listed {
        if !tableau::is_member(family, t).map_err(|e| e.to_string())? {
            return fail(format!("validator rejects {t} in {family}"));
        }
    }
    Ok(())
}

/// The library validator against the naive one on a single filling.
pub fn validator_matches_oracle(g: &Grid) -> Check {
    let t = tableau_of(g);
    let peak = naive_is_peak(t.shape().parts());
    let cases: [(Family, fn(&Grid) -> bool); 7] = [
        (Family::Mpct, naive_mpct),
        (Family::Smpct, naive_smpct),
        (Family::Spct, naive_spct),
        (Family::Spyct, naive_spyct),
        (Family::Sit, naive_sit),
        (Family::Syct, naive_syct),
        (Family::Dirt, naive_dirt),
    ];
    for (family, naive) in cases {
        match tableau::is_member(family, &t) {
            Ok(got) if got == naive(g) => {}
            Err(_) if family.requires_peak_shape() && !peak => {}
            other => return fail(format!("{family} on {t}: {other:?}, oracle {}", naive(g))),
        }
    }
    Ok(())
}

/// The marking fibre rule against all `2^n` markings.
pub fn fiber_matches_oracle(q: &Tableau) -> Check {
    let n = q.degree();
    for d in IndexSet::all_subsets(n) {
        let dset: BTreeSet<usize> = d.elements().iter().copied().collect();
        let oracle = brute_force_fiber(q, &dset);
        let got: BTreeSet<Tableau> = match marking_fiber(q, &d) {
            Ok(v) => v.into_iter().collect(),
            Err(_) => BTreeSet::new(),
        };
        if got != oracle {
            return fail(format!(
                "fiber({q}, {d}): rule {} markings, oracle {}",
                got.len(),
                oracle.len()
            ));
        }
    }
    Ok(())
}

/// Generated DIRTs against the brute-force DIRT filter.
pub fn dirts_match_oracle(parts: &[usize]) -> Check {
    let got: BTreeSet<Tableau> = peakqsym::insertion::generate_dirts(&comp(parts))
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let oracle = brute_force_dirts(parts);
    if got != oracle {
        return fail(format!(
            "generate_dirts({parts:?}): {} vs oracle {}",
            got.len(),
            oracle.len()
        ));
    }
    Ok(())
}

/// Reading insertion of one SIT: P is an SYCT with the same descents, Q is
/// a DIRT with reversed row strip shape, first column kept.
pub fn reading_insertion_laws(t: &Tableau) -> Check {
    let g = grid_of(t);
    let res = peakqsym::insertion::reading_insertion(t).map_err(|e| e.to_string())?;
    let (p, q) = (grid_of(&res.p), grid_of(&res.q));
    if !naive_syct(&p) || !naive_dirt(&q) {
        return fail(format!("reading insertion of {t} gave ({}, {})", res.p, res.q));
    }
    if res.p.shape() != res.q.shape() {
        return fail(format!("shapes differ for {t}"));
    }
    let strips: Vec<usize> = naive_row_strips(&q).iter().map(Vec::len).collect();
    let reversed: Vec<usize> = t.shape().parts().iter().rev().copied().collect();
    if strips != reversed {
        return fail(format!("row strips of Q({t}) are {strips:?}"));
    }
    if naive_des_up(&g) != naive_des_left(&p) {
        return fail(format!("descents of {t} and {} differ", res.p));
    }
    let col1 = |g: &Grid| g.iter().map(|row| row[0].0).collect::<Vec<_>>();
    if col1(&g) != col1(&p) {
        return fail(format!("first column of {t} changed"));
    }
    if naive_spct(&g) != naive_spyct(&p) {
        return fail(format!("SPCT/SPYCT status differs for {t}"));
    }
    if naive_spct(&g) {
        let peak_t = naive_peak_set(&naive_des_up(&g));
        let peak_p = naive_peak_set(&naive_des_left(&p));
        if peak_t != peak_p {
            return fail(format!("peak sets differ for {t}"));
        }
    }
    Ok(())
}

/// Monomial expansion of `F_alpha` against the set-containment oracle.
pub fn fundamental_matches_oracle(parts: &[usize]) -> Check {
    use peakqsym::qsym::{fundamental_to_monomial, Basis, QSymElement};
    let alpha = comp(parts);
    let f = QSymElement::basis_element(Basis::Fundamental, &alpha).map_err(|e| e.to_string())?;
    let m = fundamental_to_monomial(&f).map_err(|e| e.to_string())?;
    let got: BTreeSet<Vec<usize>> = m.terms().map(|(b, _)| b.parts().to_vec()).collect();
    let oracle: BTreeSet<Vec<usize>> = naive_fundamental_support(parts).into_iter().collect();
    if got != oracle || m.terms().any(|(_, c)| *c != 1.into()) {
        return fail(format!("F[{alpha}] monomial expansion"));
    }
    Ok(())
}

/// All compositions with degree in `1..=max_n`.
pub fn all_compositions(max_n: usize) -> Vec<Vec<usize>> {
    (1..=max_n).flat_map(naive_compositions).collect()
}

pub fn all_peak_compositions(max_n: usize) -> Vec<Vec<usize>> {
    (1..=max_n).flat_map(naive_peak_compositions).collect()
}

pub fn composition_of(parts: &[usize]) -> Composition {
    comp(parts)
}
