//! Classification of primitive vectors in `Λ̂₁`.

use crate::error::ClassifierError;
use crate::types::{Ambient, OrbitClass, OrbitInvariants};
use crate::Result;
use lattice_core::disc::{DiscElement, DiscriminantGroup};
use lattice_core::standard::{e8, lambda_hat};
use lattice_core::vector::is_zero;
use lattice_core::{GramLattice, Int};
use nikulin_model::{delta_hat, div_hat1, e1, e2, in_lambda_hat1, is_primitive1, l_vector, sigma_hat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::OnceLock;

pub(crate) fn lambda_hat_cached() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(lambda_hat)
}

pub(crate) fn e8m2_disc() -> &'static DiscriminantGroup {
    static CELL: OnceLock<DiscriminantGroup> = OnceLock::new();
    CELL.get_or_init(|| {
        DiscriminantGroup::new(&e8(-2)).expect("E8(-2) has a discriminant group")
    })
}

/// Residue of half the E8 block of a rank-16 vector, with the value of the
/// discriminant form on it (0 or 1).
pub(crate) fn e8_residue(v: &[Int]) -> Result<(DiscElement, u8)> {
    let disc = e8m2_disc();
    let m: Vec<Int> = v[6..14].to_vec();
    let e = disc.residue_of_scaled(&m, &Int::from(2))?;
    let qb = if disc.qbar2(&e)?.is_zero() { 0u8 } else { 1u8 };
    Ok((e, qb))
}

/// Accumulate `k · src` into `dst`.
pub(crate) fn acc(dst: &mut [Int], src: &[Int], k: i64) {
    let k = Int::from(k);
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d += &k * s;
    }
}

/// Negate a representative supported purely on the exceptional pair when its
/// leading coordinate is negative, so the canonical output is the familiar
/// positive combination (`δ̂` rather than `−δ̂`, `h₁` rather than `−h₁`).
pub(crate) fn orient_h_block(rep: &mut [Int]) {
    if rep[..14].iter().all(|c| c.is_zero()) && rep[14] < Int::zero() {
        for c in rep.iter_mut() {
            *c = -c.clone();
        }
    }
}

/// Canonical representative of hat-side case `case` with parameter `i`.
///
/// The `L₀` (for `2L_i` rows) and `L₀ = L_{i+1}` (for `2L_{i+1}` rows)
/// occurrences are replaced by 0 — the class is unchanged and the output is
/// the simplest member, e.g. case 2 at `i = 0` yields `δ̂` itself.
pub(crate) fn rep_hat(case: u8, i: &Int) -> Vec<Int> {
    let mut rep = vec![Int::zero(); 16];
    let two_l = |rep: &mut [Int], idx: &Int| {
        if !idx.is_zero() {
            let l = l_vector(idx);
            acc(rep, &l, 2);
        } else {
            // 2L₀ contributes 2f; the class also contains the form without
            // it, which is the canonical choice.
        }
    };
    let two_l_next = |rep: &mut [Int], idx: &Int| {
        let next = idx + Int::one();
        if !next.is_zero() {
            let l = l_vector(&next);
            acc(rep, &l, 2);
        }
    };
    match case {
        1 => {
            // Case 1 keeps the literal L_i: it is never the zero vector.
            let l = l_vector(i);
            acc(&mut rep, &l, 1);
        }
        2 => {
            two_l(&mut rep, i);
            acc(&mut rep, &delta_hat(), -1);
        }
        3 => {
            two_l_next(&mut rep, i);
            acc(&mut rep, &e2(), 1);
            acc(&mut rep, &delta_hat(), -1);
        }
        4 => {
            two_l(&mut rep, i);
            acc(&mut rep, &delta_hat(), -1);
            acc(&mut rep, &sigma_hat(), -1);
        }
        5 => {
            two_l_next(&mut rep, i);
            acc(&mut rep, &e2(), 1);
            acc(&mut rep, &delta_hat(), -1);
            acc(&mut rep, &sigma_hat(), -1);
        }
        6 => {
            two_l(&mut rep, i);
            acc(&mut rep, &e1(), 1);
        }
        7 => {
            two_l(&mut rep, i);
            acc(&mut rep, &e1(), 1);
            acc(&mut rep, &delta_hat(), -1);
        }
        8 => {
            two_l(&mut rep, i);
            acc(&mut rep, &e1(), 1);
            acc(&mut rep, &delta_hat(), -1);
            acc(&mut rep, &sigma_hat(), -1);
        }
        9 => {
            two_l_next(&mut rep, i);
            acc(&mut rep, &e2(), 1);
        }
        _ => unreachable!("case ids are 1..=9"),
    }
    orient_h_block(&mut rep);
    rep
}

/// Invariants of a primitive vector in `Λ̂₁`: norm, divisibility relative to
/// `Λ̂₁`, and — when the divisibility is 2 — the residue `ē` of half the E8
/// projection with its discriminant-form value.
pub fn invariants_hat(v: &[Int]) -> Result<OrbitInvariants> {
    if is_zero(v) {
        return Err(ClassifierError::Lattice(
            lattice_core::LatticeError::ZeroVector,
        ));
    }
    if !in_lambda_hat1(v) {
        return Err(ClassifierError::Model(nikulin_model::ModelError::NotInHat1));
    }
    if !is_primitive1(v)? {
        return Err(ClassifierError::Imprimitive);
    }
    let q = lambda_hat_cached().norm(v)?;
    let div = div_hat1(v)?;
    let (e_bar, qbar) = if div == Int::from(2) {
        let (e, qb) = e8_residue(v)?;
        (Some(e), Some(qb))
    } else {
        (None, None)
    };
    Ok(OrbitInvariants {
        q,
        div,
        e_bar,
        qbar,
        hat_div1: None,
    })
}

fn exact_div(num: Int, den: i64) -> Int {
    let (q, r) = num.div_rem(&Int::from(den));
    debug_assert!(r.is_zero(), "case parameter division must be exact");
    q
}

/// Classify a primitive vector of `Λ̂₁` into one of the nine case rows.
pub fn classify_hat(v: &[Int]) -> Result<OrbitClass> {
    let invariants = invariants_hat(v)?;
    let q = invariants.q.clone();
    let div = invariants.div.clone();

    let (case_id, i) = if div.is_one() {
        (1u8, exact_div(q.clone(), 2))
    } else if div == Int::from(2) {
        let e_zero = invariants
            .e_bar
            .as_ref()
            .map(DiscElement::is_zero)
            .unwrap_or(true);
        let qbar = invariants.qbar.unwrap_or(0);
        let q_mod8 = q.mod_floor(&Int::from(8));
        let q_mod8: i64 = i64::try_from(&q_mod8).expect("residue is small");
        match (q_mod8, e_zero, qbar) {
            (6, true, _) => (2, exact_div(&q + Int::from(2), 8)),
            (6, false, 0) => (3, exact_div(&q + Int::from(2), 8)),
            (4, true, _) => (4, exact_div(&q + Int::from(4), 8)),
            (4, false, 0) => (5, exact_div(&q + Int::from(4), 8)),
            (4, false, 1) => (6, exact_div(&q + Int::from(4), 8)),
            (2, false, 1) => (7, exact_div(&q + Int::from(6), 8)),
            (0, false, 1) => (8, exact_div(&q + Int::from(8), 8)),
            (0, false, 0) => (9, exact_div(q.clone(), 8)),
            _ => {
                return Err(ClassifierError::InfeasibleInvariants {
                    q,
                    div,
                    detail: format!(
                        "no case row matches (q mod 8, ē = 0, q̄) = ({q_mod8}, {e_zero}, {qbar})"
                    ),
                });
            }
        }
    } else {
        return Err(ClassifierError::InfeasibleInvariants {
            q,
            div,
            detail: "divisibility in Λ̂₁ must be 1 or 2 for primitive vectors".into(),
        });
    };

    let representative = rep_hat(case_id, &i);
    Ok(OrbitClass {
        ambient: Ambient::LambdaHat1,
        case_id,
        i,
        representative,
        invariants,
    })
}
