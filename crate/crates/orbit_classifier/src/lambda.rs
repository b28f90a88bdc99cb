//! Classification of primitive vectors in `Λ`, with the twist cross-check.

use crate::error::ClassifierError;
use crate::hat::{acc, classify_hat, e8_residue, orient_h_block};
use crate::types::{Ambient, OrbitClass, OrbitInvariants};
use crate::Result;
use lattice_core::standard::{e8, lambda};
use lattice_core::vector::{is_primitive, is_zero};
use lattice_core::{GramLattice, Int};
use nikulin_model::{
    delta_prime, e1_sup1, e2_sup1, h1, hat_div1_predicate, l2_vector, twist_ray_to_hat,
    twist_ray_to_lambda,
};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::OnceLock;

pub(crate) fn lambda_cached() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(lambda)
}

fn e8m1_cached() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(|| e8(-1))
}

/// Canonical representative of `Λ`-side case `case` with parameter `i`.
pub(crate) fn rep_lambda(case: u8, i: &Int) -> Vec<Int> {
    let mut rep = vec![Int::zero(); 16];
    let l2 = |rep: &mut [Int], idx: &Int, scale: i64| {
        if !idx.is_zero() {
            let l = l2_vector(idx);
            acc(rep, &l, scale);
        }
    };
    let l2_next = |rep: &mut [Int], idx: &Int, scale: i64| {
        let next = idx + Int::one();
        if !next.is_zero() {
            let l = l2_vector(&next);
            acc(rep, &l, scale);
        }
    };
    match case {
        1 => {
            let l = l2_vector(i);
            acc(&mut rep, &l, 1);
        }
        2 => {
            l2(&mut rep, i, 2);
            acc(&mut rep, &delta_prime(), -1);
        }
        3 => {
            l2_next(&mut rep, i, 2);
            acc(&mut rep, &e2_sup1(), 2);
            acc(&mut rep, &delta_prime(), -1);
        }
        4 => {
            l2(&mut rep, i, 1);
            acc(&mut rep, &h1(), -1);
        }
        5 => {
            l2_next(&mut rep, i, 1);
            acc(&mut rep, &e2_sup1(), 1);
            acc(&mut rep, &h1(), -1);
        }
        6 => {
            l2(&mut rep, i, 1);
            acc(&mut rep, &e1_sup1(), 1);
        }
        7 => {
            l2(&mut rep, i, 2);
            acc(&mut rep, &e1_sup1(), 2);
            acc(&mut rep, &delta_prime(), -1);
        }
        8 => {
            l2(&mut rep, i, 1);
            acc(&mut rep, &e1_sup1(), 1);
            acc(&mut rep, &h1(), -1);
        }
        9 => {
            l2_next(&mut rep, i, 1);
            acc(&mut rep, &e2_sup1(), 1);
        }
        _ => unreachable!("case ids are 1..=9"),
    }
    orient_h_block(&mut rep);
    rep
}

fn exact_div(num: Int, den: i64) -> Int {
    let (q, r) = num.div_rem(&Int::from(den));
    debug_assert!(r.is_zero(), "case parameter division must be exact");
    q
}

/// Direct dispatch on the `Λ`-side condition table.
fn dispatch_direct(
    v: &[Int],
    q: &Int,
    div: &Int,
    pred: bool,
) -> Result<(u8, Int)> {
    let infeasible = |detail: &str| ClassifierError::InfeasibleInvariants {
        q: q.clone(),
        div: div.clone(),
        detail: detail.to_string(),
    };
    if pred {
        return Ok((1, exact_div(q.clone(), 4)));
    }
    let four = Int::from(4);
    if *div == Int::from(2) {
        let q_mod4: i64 = i64::try_from(&q.mod_floor(&four)).expect("small residue");
        if q_mod4 == 2 {
            return Ok((4, exact_div(q + Int::from(2), 4)));
        }
        let q_mod16: i64 = i64::try_from(&q.mod_floor(&Int::from(16))).expect("small residue");
        let e8_div4 = v[6..14].iter().all(|c| c.mod_floor(&four).is_zero());
        return match (q_mod16, e8_div4) {
            (12, true) => Ok((2, exact_div(q + Int::from(4), 16))),
            (12, false) => Ok((3, exact_div(q + Int::from(4), 16))),
            (4, false) => Ok((7, exact_div(q + Int::from(12), 16))),
            (4, true) => Err(infeasible(
                "divisibility 2 with q ≡ 4 mod 16 forces an E8 part nonzero mod 4",
            )),
            _ => Err(infeasible(
                "divisibility-2 norms are ≡ 2 mod 4 or ≡ 4, 12 mod 16",
            )),
        };
    }
    if div.is_one() {
        let m: Vec<Int> = v[6..14].to_vec();
        let q_e8 = e8m1_cached().norm(&m)?;
        let e8_mod4: i64 = i64::try_from(&q_e8.mod_floor(&four)).expect("small residue");
        let q_mod4: i64 = i64::try_from(&q.mod_floor(&four)).expect("small residue");
        return match (q_mod4, e8_mod4) {
            (2, 0) => Ok((5, exact_div(q + Int::from(2), 4))),
            (2, 2) => Ok((6, exact_div(q + Int::from(2), 4))),
            (0, 2) => Ok((8, exact_div(q + Int::from(4), 4))),
            (0, 0) => Ok((9, exact_div(q.clone(), 4))),
            _ => Err(infeasible("even lattice norms are even")),
        };
    }
    Err(infeasible(
        "divisibility in Λ must be 1 or 2 for primitive vectors",
    ))
}

/// Classify a primitive vector of `Λ` into one of the nine case rows.
///
/// The class is computed twice: directly from the condition table on
/// `(q, div, E8-part mod 4, transported-divisibility predicate)`, and through
/// the twist (`twist_ray_to_hat` → hat classification → `twist_ray_to_lambda`
/// of the representative). The two paths must agree exactly; a disagreement
/// surfaces as [`ClassifierError::InternalMismatch`].
pub fn classify_lambda(v: &[Int]) -> Result<OrbitClass> {
    if is_zero(v) {
        return Err(ClassifierError::Lattice(
            lattice_core::LatticeError::ZeroVector,
        ));
    }
    if !is_primitive(v) {
        return Err(ClassifierError::Imprimitive);
    }
    let l = lambda_cached();
    let q = l.norm(v)?;
    let div = l.divisibility(v)?;
    let pred = hat_div1_predicate(v)?;

    let (case_id, i) = dispatch_direct(v, &q, &div, pred)?;
    let representative = rep_lambda(case_id, &i);

    // Path (b): transport through the twist and compare.
    let vhat = twist_ray_to_hat(v)?;
    let hat = classify_hat(&vhat)?;
    let rep_back = twist_ray_to_lambda(&hat.representative)?;
    if hat.case_id != case_id || hat.i != i || rep_back != representative {
        return Err(ClassifierError::InternalMismatch(format!(
            "direct path gives case {case_id} at i = {i}, twist path gives case {} at i = {} \
             (representatives {:?} vs {:?})",
            hat.case_id, hat.i, representative, rep_back
        )));
    }

    // ē and q̄ of the transported ray, when its hat-side divisibility is 2.
    let (e_bar, qbar) = if hat.invariants.div == Int::from(2) {
        let (e, qb) = e8_residue(&vhat)?;
        (Some(e), Some(qb))
    } else {
        (None, None)
    };
    Ok(OrbitClass {
        ambient: Ambient::Lambda,
        case_id,
        i,
        representative,
        invariants: OrbitInvariants {
            q,
            div,
            e_bar,
            qbar,
            hat_div1: Some(pred),
        },
    })
}
