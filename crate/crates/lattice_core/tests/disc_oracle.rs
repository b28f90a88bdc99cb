//! Independent oracle for discriminant-group computations.
//!
//! Contract under test: `DiscriminantGroup` computes `A_L = L∨/L` with the
//! right order, invariant factors, residue arithmetic, and discriminant
//! quadratic form.
//!
//! Oracles used here, all independent of the SNF/Bareiss code paths:
//! * determinants recomputed by plain rational Gauss elimination;
//! * the identity |A_L| = |det G| for nondegenerate lattices;
//! * closed-form counts for the even plus-type form on (Z/2)⁸: among the 256
//!   elements exactly 136 are isotropic (including zero) and 120 are not —
//!   these counts drive the orbit sizes {1, 120, 135} used elsewhere.

use lattice_core::{standard, DiscriminantGroup, GramLattice, Int, Rat};
use num_traits::{One, Signed, Zero};

// ====================================================================
// Oracle: rational Gauss-elimination determinant (no Bareiss, no SNF).
// ====================================================================

fn oracle_det(l: &GramLattice) -> Rat {
    let n = l.rank();
    let mut a: Vec<Vec<Rat>> = l
        .gram()
        .iter()
        .map(|row| row.iter().map(|c| Rat::from_integer(c.clone())).collect())
        .collect();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col].clone();
        let p = a[col][col].clone();
        for i in col + 1..n {
            let f = &a[i][col] / &p;
            for j in col..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

fn assert_det(l: &GramLattice, expect: i64) {
    assert_eq!(
        oracle_det(l),
        Rat::from_integer(Int::from(expect)),
        "oracle determinant of {}",
        l.name()
    );
    assert_eq!(l.det(), Int::from(expect), "Bareiss determinant of {}", l.name());
}

#[test]
fn frozen_determinants_of_standard_lattices() {
    assert_det(&standard::hyperbolic(1), -1);
    assert_det(&standard::hyperbolic(2), -4);
    assert_det(&standard::e8(-1), 1);
    assert_det(&standard::e8(-2), 256);
    assert_det(&standard::lambda(), -256);
    assert_det(&standard::lambda_hat(), -256);
    assert_det(&standard::lambda_hat2(), 512);
    assert_det(&standard::lambda_hat3(), 2);
    assert_det(&standard::lambda_k3(), -1);
    assert_det(&standard::lambda_k3_two(), 2);
}

// ====================================================================
// Group orders and invariant factors, frozen.
// ====================================================================

fn factors_of(l: &GramLattice) -> Vec<i64> {
    DiscriminantGroup::new(l)
        .unwrap()
        .invariant_factors()
        .iter()
        .map(|d| i64::try_from(d).unwrap())
        .collect()
}

#[test]
fn frozen_invariant_factors() {
    assert_eq!(factors_of(&standard::e8(-2)), vec![2; 8]);
    assert_eq!(factors_of(&standard::lambda()), vec![2; 8]);
    assert_eq!(factors_of(&standard::lambda_hat()), vec![2; 8]);
    assert_eq!(factors_of(&standard::lambda_hat2()), vec![2; 9]);
    assert_eq!(factors_of(&standard::lambda_hat3()), vec![2]);
    assert_eq!(factors_of(&standard::lambda_k3()), Vec::<i64>::new());
    assert_eq!(factors_of(&standard::lambda_k3_two()), vec![2]);

    // The abstract even-sum sublattice U³ ⊕ E8(−2) ⊕ (−2)²: order 1024.
    let abstract_hat1 = standard::lambda_hat3()
        .direct_sum(&standard::e8(-2), "tmp")
        .direct_sum(&standard::rank_one(-2), "U3+E8(-2)+(-2)^2");
    let a = DiscriminantGroup::new(&abstract_hat1).unwrap();
    assert_eq!(a.invariant_factors(), vec![Int::from(2); 10].as_slice());
    assert_eq!(a.order(), Int::from(1024));
}

#[test]
fn order_equals_absolute_determinant() {
    for l in [
        standard::hyperbolic(2),
        standard::e8(-2),
        standard::lambda(),
        standard::lambda_hat(),
        standard::lambda_hat2(),
        standard::lambda_hat3(),
        standard::lambda_k3_two(),
    ] {
        let a = DiscriminantGroup::new(&l).unwrap();
        assert_eq!(a.order(), oracle_det(&l).to_integer().abs(), "for {}", l.name());
    }
}

// ====================================================================
// Residues and the discriminant form on E8(−2).
// ====================================================================

#[test]
fn e8_minus_two_residues_have_frozen_qbar() {
    let l = standard::e8(-2);
    let a = DiscriminantGroup::new(&l).unwrap();
    let two = Int::from(2);

    // ē₁ = [b₁/2]: q(b₁/2) = −4/4 = −1 ≡ 1 (mod 2Z).
    let mut b1 = vec![Int::zero(); 8];
    b1[0] = Int::one();
    let e1 = a.residue_of_scaled(&b1, &two).unwrap();
    assert!(!e1.is_zero());
    assert_eq!(a.qbar2(&e1).unwrap(), Rat::from_integer(Int::one()));

    // ē₂ = [(b₁+b₃)/2]: q = −8/4 = −2 ≡ 0 (mod 2Z).
    let mut b13 = vec![Int::zero(); 8];
    b13[0] = Int::one();
    b13[2] = Int::one();
    let e2 = a.residue_of_scaled(&b13, &two).unwrap();
    assert!(!e2.is_zero());
    assert_ne!(e1, e2);
    assert_eq!(a.qbar2(&e2).unwrap(), Rat::zero());

    // Both are 2-torsion.
    assert!(a.add(&e1, &e1).is_zero());
    assert!(a.add(&e2, &e2).is_zero());
}

#[test]
fn e8_minus_two_qbar_histogram_matches_plus_type_counts() {
    // Oracle (closed form): the even plus-type quadratic form on (Z/2)⁸ has
    // 2⁷ + 2³ = 136 isotropic elements (zero included) and 120 anisotropic.
    let l = standard::e8(-2);
    let a = DiscriminantGroup::new(&l).unwrap();
    let mut isotropic = 0u32;
    let mut anisotropic = 0u32;
    for e in a.enumerate().unwrap() {
        let q = a.qbar2(&e).unwrap();
        if q.is_zero() {
            isotropic += 1;
        } else {
            assert_eq!(q, Rat::from_integer(Int::one()), "values lie in Z/2");
            anisotropic += 1;
        }
    }
    assert_eq!(isotropic, 136);
    assert_eq!(anisotropic, 120);
}

#[test]
fn lambda_hat3_generator_has_qbar_three_halves() {
    // A = Z/2 generated by [δ/2] with q(δ/2) = −1/2 ≡ 3/2 (mod 2Z).
    let l = standard::lambda_hat3();
    let a = DiscriminantGroup::new(&l).unwrap();
    assert_eq!(a.order(), Int::from(2));
    let mut delta = vec![Int::zero(); 7];
    delta[6] = Int::one();
    let g = a.residue_of_scaled(&delta, &Int::from(2)).unwrap();
    assert!(!g.is_zero());
    assert_eq!(a.qbar2(&g).unwrap(), Rat::new(Int::from(3), Int::from(2)));
}

#[test]
fn generator_lifts_are_dual_vectors_with_unit_residue() {
    for l in [standard::lambda(), standard::lambda_hat2()] {
        let a = DiscriminantGroup::new(&l).unwrap();
        for k in 0..a.num_generators() {
            let lift = a.generator_lift(k).to_vec();
            let back = a.residue_of_rational(&lift).unwrap();
            let mut expect = vec![Int::zero(); a.num_generators()];
            expect[k] = Int::one();
            assert_eq!(back.residues(), expect.as_slice(), "lift {k} of {}", l.name());
        }
    }
}
