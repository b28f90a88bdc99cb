//! Effective Eichler normalization.
//!
//! In an even lattice `L = U ⊕ U ⊕ M` (two orthogonal unimodular hyperbolic
//! planes split off), the Eichler criterion says that a primitive vector is
//! determined up to the stable orthogonal group by its norm, its divisibility
//! `r`, and its residue class in the discriminant group. This module makes the
//! criterion effective: it reduces a vector to the canonical form
//!
//! ```text
//! v_can = s₀·e₁ + r·f₁ + c ,     c = r·(canonical lift of [v/r]) ∈ M ,
//! ```
//!
//! by an explicit sequence of Eichler transvections `t(e, a)` with base
//! vectors in the two hyperbolic planes, and certifies the result. Given two
//! vectors with the same invariants, composing one reduction with the inverse
//! of the other yields an isometry mapping the first to the second that acts
//! trivially on the discriminant group.
//!
//! The reduction itself is a two-dimensional Euclidean algorithm on the plane
//! coordinates, followed by a folding of the remaining pairings into a single
//! coefficient and a final translation placing the `M`-part. Every operation
//! is replayed on the basis to produce the matrix, and the outcome is checked
//! against the canonical form, so any internal misstep surfaces as an error
//! rather than a wrong answer.

use crate::disc_action::disc_action_is_trivial;
use crate::error::EngineError;
use crate::isometry::Isometry;
use crate::Result;
use lattice_core::disc::DiscriminantGroup;
use lattice_core::matrix::rounded_div;
use lattice_core::rational::{scaled_rat, to_int_vec};
use lattice_core::vector::is_primitive;
use lattice_core::{GramLattice, Int, Rat};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A certified Eichler normalization: an isometry together with the number of
/// transvections it was assembled from.
#[derive(Debug, Clone)]
pub struct EichlerNormalization {
    /// The certified isometry `φ` with `φ(v) = w`.
    pub isometry: Isometry,
    /// How many transvections were composed to build `φ`.
    pub transvections: usize,
}

/// Hard cap on the number of transvections per reduction. The reduction is a
/// Euclidean descent and stays far below this in practice; the cap converts a
/// hypothetical non-termination bug into a clean internal error.
const OP_BUDGET: usize = 100_000;

/// One recorded transvection `t(basis[e], a)` with cached pairing data.
struct Op {
    e: usize,
    a: Vec<Int>,
    ga: Vec<Int>,
    half_qa: Int,
}

impl Op {
    /// Apply the transvection (or its inverse) to a coordinate vector `x`
    /// while maintaining its pairing vector `y = G·x`.
    fn apply(&self, gram: &[Vec<Int>], invert: bool, x: &mut [Int], y: &mut [Int]) {
        let pe = y[self.e].clone();
        let mut pa: Int = self.a.iter().zip(y.iter()).map(|(ai, yi)| ai * yi).sum();
        if invert {
            pa = -pa;
        }
        let k = &pa + &self.half_qa * &pe;
        for i in 0..x.len() {
            let t = &pe * &self.a[i];
            if invert {
                x[i] -= t;
            } else {
                x[i] += t;
            }
        }
        x[self.e] -= &k;
        for i in 0..y.len() {
            let t = &pe * &self.ga[i];
            if invert {
                y[i] -= t;
            } else {
                y[i] += t;
            }
            let t = &k * &gram[self.e][i];
            y[i] -= t;
        }
    }
}

/// Mutable reduction state: the vector, its pairing vector, and the op log.
struct Reducer<'a> {
    lattice: &'a GramLattice,
    x: Vec<Int>,
    y: Vec<Int>,
    ops: Vec<Op>,
}

fn unit(n: usize, j: usize, s: i64) -> Vec<Int> {
    let mut v = vec![Int::zero(); n];
    v[j] = Int::from(s);
    v
}

fn scaled_unit(n: usize, j: usize, s: &Int) -> Vec<Int> {
    let mut v = vec![Int::zero(); n];
    v[j] = s.clone();
    v
}

impl<'a> Reducer<'a> {
    fn new(lattice: &'a GramLattice, x: Vec<Int>) -> Result<Self> {
        let y = lattice.basis_pairings(&x)?;
        Ok(Self { lattice, x, y, ops: Vec::new() })
    }

    /// Record and apply `t(basis[e], a)`.
    fn op(&mut self, e: usize, a: Vec<Int>) -> Result<()> {
        if self.ops.len() >= OP_BUDGET {
            return Err(EngineError::NormalizationBudget);
        }
        debug_assert!(e < 4, "transvection bases live in the two U planes");
        let ga = self.lattice.basis_pairings(&a)?;
        debug_assert!(ga[e].is_zero(), "translate must be orthogonal to the base");
        let qa: Int = a.iter().zip(ga.iter()).map(|(ai, gi)| ai * gi).sum();
        let (half_qa, rem) = qa.div_rem(&Int::from(2));
        debug_assert!(rem.is_zero(), "translate norms are even");
        let op = Op { e, a, ga, half_qa };
        op.apply(self.lattice.gram(), false, &mut self.x, &mut self.y);
        self.ops.push(op);
        Ok(())
    }

    /// Phase 1: make the `f₂`-coefficient nonzero so the Euclidean phase has a
    /// working pivot.
    fn phase1(&mut self) -> Result<()> {
        let n = self.lattice.rank();
        if !self.x[3].is_zero() {
            return Ok(());
        }
        if !self.x[1].is_zero() {
            // b₂ ← −b₁.
            return self.op(3, unit(n, 0, 1));
        }
        if !self.x[0].is_zero() {
            // b₂ ← −a₁.
            return self.op(3, unit(n, 1, 1));
        }
        if !self.x[2].is_zero() {
            // b₂ ← −a₂ (the plane-one coordinates vanish here).
            let mut a = unit(n, 0, 1);
            a[1] = Int::from(1);
            return self.op(3, a);
        }
        for j in 4..n {
            if !self.y[j].is_zero() {
                // b₂ ← −(x, m_j).
                return self.op(3, unit(n, j, 1));
            }
        }
        Err(EngineError::CertificationFailed(
            "reduction started from the zero vector".into(),
        ))
    }

    /// Phase 2: Euclidean descent driving the plane-one coordinates to zero,
    /// folding their content into the `f₂`-coefficient.
    ///
    /// Each round first reduces `a₁` and `b₁` modulo the pivot `b₂` with
    /// transvections based at `e₂` — these touch neither the pivot nor the
    /// other plane-one coordinate and dirty only the `e₂`-coefficient, which
    /// phase 3 owns — and then folds one nonzero remainder into the pivot
    /// with a transvection based at `f₂`. The fold leaves `|b₂|` at most half
    /// of the remainder, so the pivot at least halves in every round and the
    /// loop terminates after logarithmically many rounds, no matter how the
    /// fold's side effects on the other coordinates behave.
    fn phase2(&mut self) -> Result<()> {
        let n = self.lattice.rank();
        let mut guard = 0usize;
        loop {
            guard += 1;
            if guard > 10_000 {
                return Err(EngineError::NormalizationBudget);
            }
            debug_assert!(!self.x[3].is_zero(), "phase 2 needs a nonzero pivot");
            // Reduce b₁, then a₁, modulo the pivot: |a₁|, |b₁| ≤ |b₂|/2.
            let s = -rounded_div(&self.x[1], &self.x[3]);
            if !s.is_zero() {
                self.op(2, scaled_unit(n, 1, &s))?;
            }
            let s = -rounded_div(&self.x[0], &self.x[3]);
            if !s.is_zero() {
                self.op(2, scaled_unit(n, 0, &s))?;
            }
            if self.x[0].is_zero() && self.x[1].is_zero() {
                return Ok(());
            }
            // Fold a nonzero remainder r into the pivot: b₂ ← b₂ mod± r,
            // replacing a zero result by ∓r. Either way |b₂| shrinks.
            if !self.x[1].is_zero() {
                let s = rounded_div(&self.x[3], &self.x[1]);
                self.op(3, scaled_unit(n, 0, &s))?;
                if self.x[3].is_zero() {
                    self.op(3, unit(n, 0, 1))?;
                }
            } else {
                let s = rounded_div(&self.x[3], &self.x[0]);
                self.op(3, scaled_unit(n, 1, &s))?;
                if self.x[3].is_zero() {
                    self.op(3, unit(n, 1, 1))?;
                }
            }
        }
    }

    /// Phase 3: shrink the `f₂`-coefficient to ± the divisibility by folding
    /// in every pairing it does not yet divide.
    fn phase3(&mut self) -> Result<()> {
        let n = self.lattice.rank();
        let mut guard = 0usize;
        loop {
            guard += 1;
            if guard > 4096 {
                return Err(EngineError::NormalizationBudget);
            }
            let b2 = self.x[3].clone();
            debug_assert!(!b2.is_zero());
            let mut translate: Option<Vec<Int>> = None;
            if !(&self.x[2] % &b2).is_zero() {
                // Load the e₂-coefficient into the first plane: t(e₁, −f₂).
                translate = Some(unit(n, 3, -1));
            } else {
                for j in 4..n {
                    if !(&self.y[j] % &b2).is_zero() {
                        translate = Some(unit(n, j, -1));
                        break;
                    }
                }
            }
            match translate {
                None => return Ok(()),
                Some(a) => {
                    self.op(0, a)?;
                    self.phase2()?;
                }
            }
        }
    }

    /// Phases 5–7: install the canonical shape `(s₀, r | 0, 0 | c)`.
    fn phase567(&mut self, r: &Int, c: &[Int]) -> Result<()> {
        let n = self.lattice.rank();
        let b2 = self.x[3].clone();
        if b2.abs() != *r {
            return Err(EngineError::CertificationFailed(
                "pivot did not reach the divisibility".into(),
            ));
        }
        // P5: transfer the pivot to the f₁-slot with positive sign.
        let s = if b2.is_positive() { Int::from(1) } else { Int::from(-1) };
        self.op(2, scaled_unit(n, 1, &s))?;
        debug_assert_eq!(self.x[1], *r);
        // P6: clear the second plane using b₁ = r.
        let (q2, rem2) = self.x[2].div_rem(r);
        if !rem2.is_zero() {
            return Err(EngineError::CertificationFailed(
                "plane-two coefficient not divisible by the pivot".into(),
            ));
        }
        if !q2.is_zero() {
            self.op(0, scaled_unit(n, 2, &-q2))?;
        }
        let (q3, rem3) = self.x[3].div_rem(r);
        if !rem3.is_zero() || q3.abs() != Int::from(1) {
            return Err(EngineError::CertificationFailed(
                "pivot transfer left a bad f₂-coefficient".into(),
            ));
        }
        self.op(0, scaled_unit(n, 3, &-q3))?;
        debug_assert!(self.x[2].is_zero() && self.x[3].is_zero());
        // P7: translate the M-part onto the canonical representative c.
        if self.x[4..] != c[4..] {
            let mut a = vec![Int::zero(); n];
            for j in 4..n {
                let (q, rem) = (&self.x[j] - &c[j]).div_rem(r);
                if !rem.is_zero() {
                    return Err(EngineError::CertificationFailed(
                        "M-part does not match the canonical residue".into(),
                    ));
                }
                a[j] = -q;
            }
            self.op(0, a)?;
        }
        Ok(())
    }
}

/// Reduce `x` to the canonical form `(s₀, r | 0, 0 | c)`, returning the op log.
fn reduce_to_canonical(
    lattice: &GramLattice,
    x: &[Int],
    r: &Int,
    c: &[Int],
    expected: &[Int],
) -> Result<Vec<Op>> {
    let mut red = Reducer::new(lattice, x.to_vec())?;
    red.phase1()?;
    red.phase2()?;
    red.phase3()?;
    red.phase567(r, c)?;
    if red.x != expected {
        return Err(EngineError::CertificationFailed(
            "reduction did not reach the canonical form".into(),
        ));
    }
    Ok(red.ops)
}

/// Check that the first four basis vectors span `U ⊕ U` split off from the
/// rest of the lattice.
fn check_u_square(lattice: &GramLattice) -> Result<()> {
    let n = lattice.rank();
    if n < 4 {
        return Err(EngineError::NoUSquare);
    }
    let g = lattice.gram();
    let u = [[0i64, 1], [1, 0]];
    for p in 0..2 {
        for i in 0..2 {
            for j in 0..2 {
                if g[2 * p + i][2 * p + j] != Int::from(u[i][j]) {
                    return Err(EngineError::NoUSquare);
                }
            }
        }
    }
    for i in 0..2 {
        for j in 2..4 {
            if !g[i][j].is_zero() {
                return Err(EngineError::NoUSquare);
            }
        }
    }
    for i in 0..4 {
        for j in 4..n {
            if !g[i][j].is_zero() {
                return Err(EngineError::NoUSquare);
            }
        }
    }
    Ok(())
}

/// Map `v` to `w` by a certified product of Eichler transvections.
///
/// Both vectors must be primitive in an even lattice whose first four basis
/// vectors form `U ⊕ U` orthogonal to the rest. The invariant triple — norm,
/// divisibility, discriminant residue — must agree; otherwise
/// [`EngineError::InvariantMismatch`] reports which parts differ. The returned
/// isometry satisfies `φ(v) = w` and acts trivially on the discriminant
/// group; both facts are verified before returning.
pub fn eichler_normalize(
    lattice: &GramLattice,
    v: &[Int],
    w: &[Int],
) -> Result<EichlerNormalization> {
    check_u_square(lattice)?;
    if !lattice.is_even() {
        return Err(EngineError::OddLattice);
    }
    if v.len() != lattice.rank() || w.len() != lattice.rank() {
        return Err(EngineError::Lattice(lattice_core::LatticeError::RankMismatch {
            expected: lattice.rank(),
            found: if v.len() != lattice.rank() { v.len() } else { w.len() },
        }));
    }
    if !is_primitive(v) || !is_primitive(w) {
        return Err(EngineError::Imprimitive);
    }
    let q_v = lattice.norm(v)?;
    let q_w = lattice.norm(w)?;
    let r_v = lattice.divisibility(v)?;
    let r_w = lattice.divisibility(w)?;
    let disc = DiscriminantGroup::new(lattice)?;
    let norm_ok = q_v == q_w;
    let div_ok = r_v == r_w;
    let residue_ok = if div_ok {
        disc.residue_of_scaled(v, &r_v)? == disc.residue_of_scaled(w, &r_w)?
    } else {
        true
    };
    if !(norm_ok && div_ok && residue_ok) {
        return Err(EngineError::InvariantMismatch {
            norm: !norm_ok,
            div: !div_ok,
            residue: !residue_ok,
        });
    }

    // Canonical data of the class: c = r·(canonical lift of the residue) with
    // the hyperbolic-plane coordinates (integral for unimodular planes)
    // dropped, and the forced e₁-coefficient s₀ = (q − q(c)) / 2r.
    let n = lattice.rank();
    let rho = disc.residue_of_scaled(v, &r_v)?;
    let mut lift = disc.canonical_fractional_lift(&rho);
    for coord in lift.iter_mut().take(4) {
        if !coord.is_integer() {
            return Err(EngineError::CertificationFailed(
                "canonical lift is fractional on a unimodular plane".into(),
            ));
        }
        *coord = Rat::zero();
    }
    let c = to_int_vec(&scaled_rat(&lift, &Rat::from_integer(r_v.clone()))).ok_or_else(|| {
        EngineError::CertificationFailed("canonical residue lift did not clear".into())
    })?;
    let q_c = lattice.norm(&c)?;
    let (s0, rem) = (&q_v - &q_c).div_rem(&(Int::from(2) * &r_v));
    if !rem.is_zero() {
        return Err(EngineError::CertificationFailed(
            "canonical norm congruence failed".into(),
        ));
    }
    let mut expected = c.clone();
    expected[0] = s0;
    expected[1] = r_v.clone();

    let ops_v = reduce_to_canonical(lattice, v, &r_v, &c, &expected)?;
    let ops_w = reduce_to_canonical(lattice, w, &r_v, &c, &expected)?;

    // Assemble φ = (ops_w)⁻¹ ∘ ops_v column by column.
    let gram = lattice.gram();
    let mut matrix = vec![vec![Int::zero(); n]; n];
    for j in 0..n {
        let mut x = vec![Int::zero(); n];
        x[j] = Int::from(1);
        let mut y: Vec<Int> = gram[j].clone();
        for op in &ops_v {
            op.apply(gram, false, &mut x, &mut y);
        }
        for op in ops_w.iter().rev() {
            op.apply(gram, true, &mut x, &mut y);
        }
        for i in 0..n {
            matrix[i][j] = x[i].clone();
        }
    }
    let isometry = Isometry::new(lattice, matrix).map_err(|_| {
        EngineError::CertificationFailed("assembled matrix is not an isometry".into())
    })?;
    if isometry.apply(v)? != w {
        return Err(EngineError::CertificationFailed(
            "assembled isometry does not map v to w".into(),
        ));
    }
    if !disc_action_is_trivial(&disc, &isometry)? {
        return Err(EngineError::CertificationFailed(
            "assembled isometry moves the discriminant group".into(),
        ));
    }
    Ok(EichlerNormalization {
        isometry,
        transvections: ops_v.len() + ops_w.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transvection::eichler_transvection;
    use lattice_core::standard::{lambda, lambda_hat2, lambda_hat3};
    use lattice_core::vector::veci;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn canonical_example_in_u3_minus_two() {
        // v = 2(e₁ − f₁) − δ and w = 2(−e₁ + f₁) − δ share
        // (norm, divisibility, residue) = (−10, 2, [δ/2]).
        let l = lambda_hat3();
        let v = veci(&[2, -2, 0, 0, 0, 0, -1]);
        let w = veci(&[-2, 2, 0, 0, 0, 0, -1]);
        let norm = eichler_normalize(&l, &v, &w).unwrap();
        assert_eq!(norm.isometry.apply(&v).unwrap(), w);
        assert!(norm.transvections > 0);
    }

    #[test]
    fn former_limit_cycle_pair_normalizes() {
        // Regression: this vector once drove the plane reduction into a
        // six-transvection limit cycle at (0, 2, −1, 2) — the old zigzag
        // strategy re-dirtied one plane coordinate while clearing the other.
        // The pivot-halving reduction must connect it to a scrambled partner
        // with the same invariants.
        let l = lambda_hat3();
        let v = veci(&[-2, 8, -7, -2, -5, 10, -1]);
        let w = veci(&[-21, -288, -4, -89, 12, 152, -91]);
        let norm = eichler_normalize(&l, &v, &w).unwrap();
        assert_eq!(norm.isometry.apply(&v).unwrap(), w);
        let norm = eichler_normalize(&l, &v, &v).unwrap();
        assert!(norm.isometry.is_identity());
    }

    #[test]
    fn normalizing_a_vector_to_itself_gives_the_identity() {
        let l = lambda_hat3();
        let v = veci(&[3, 5, -2, 7, 1, -4, 3]);
        let norm = eichler_normalize(&l, &v, &v).unwrap();
        assert!(norm.isometry.is_identity());
    }

    #[test]
    fn invariant_mismatches_are_reported_by_kind() {
        let l = lambda_hat3();
        // Norms differ.
        let v = veci(&[1, 1, 0, 0, 0, 0, 0]);
        let w = veci(&[1, 2, 0, 0, 0, 0, 0]);
        match eichler_normalize(&l, &v, &w) {
            Err(EngineError::InvariantMismatch { norm, div, residue }) => {
                assert!(norm && !div && !residue);
            }
            other => panic!("expected norm mismatch, got {other:?}"),
        }
        // Divisibilities differ: q = −2 with div 1 versus div 2.
        let v = veci(&[1, -1, 0, 0, 0, 0, 0]);
        let w = veci(&[0, 0, 0, 0, 0, 0, 1]);
        match eichler_normalize(&l, &v, &w) {
            Err(EngineError::InvariantMismatch { norm, div, .. }) => {
                assert!(!norm && div);
            }
            other => panic!("expected div mismatch, got {other:?}"),
        }
        // Residues differ: two (−4, 2) roots of E8(−2) in different classes.
        let l2 = lambda_hat2();
        let mut v = vec![Int::zero(); 15];
        v[6] = Int::from(1);
        let mut w = vec![Int::zero(); 15];
        w[7] = Int::from(1);
        match eichler_normalize(&l2, &v, &w) {
            Err(EngineError::InvariantMismatch { norm, div, residue }) => {
                assert!(!norm && !div && residue);
            }
            other => panic!("expected residue mismatch, got {other:?}"),
        }
    }

    #[test]
    fn structural_preconditions() {
        // Lambda has U(2) planes, not U.
        let l = lambda();
        let v = veci(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(matches!(
            eichler_normalize(&l, &v, &v),
            Err(EngineError::NoUSquare)
        ));
        // Imprimitive input.
        let l3 = lambda_hat3();
        let v = veci(&[2, 2, 0, 0, 0, 0, 0]);
        assert!(matches!(
            eichler_normalize(&l3, &v, &v),
            Err(EngineError::Imprimitive)
        ));
    }

    /// Scramble `v` by a random certified product of transvections, so the
    /// pair (v, scrambled) is guaranteed to share all invariants.
    fn scramble(l: &GramLattice, v: &[Int], rng: &mut ChaCha8Rng) -> Vec<Int> {
        let n = l.rank();
        let mut w = v.to_vec();
        let rounds = rng.gen_range(1..=6);
        for _ in 0..rounds {
            let plane = rng.gen_range(0..2usize);
            let base = 2 * plane + rng.gen_range(0..2usize);
            let mut a = vec![Int::zero(); n];
            // Translate supported on the other plane and the M-part.
            let other = 2 * (1 - plane);
            a[other] = Int::from(rng.gen_range(-3i64..=3));
            a[other + 1] = Int::from(rng.gen_range(-3i64..=3));
            for coord in a.iter_mut().take(n).skip(4) {
                *coord = Int::from(rng.gen_range(-2i64..=2));
            }
            let t = eichler_transvection(l, &unit(n, base, 1), &a).unwrap();
            w = t.apply(&w).unwrap();
        }
        w
    }

    #[test]
    fn fuzz_pairs_normalize_and_certify() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x00e1c41e);
        for l in [lambda_hat3(), lambda_hat2()] {
            let n = l.rank();
            for _ in 0..40 {
                let v: Vec<Int>;
                loop {
                    let cand: Vec<Int> =
                        (0..n).map(|_| Int::from(rng.gen_range(-9i64..=9))).collect();
                    if !cand.iter().all(|c| c.is_zero()) {
                        v = lattice_core::vector::primitive_part(&cand).unwrap();
                        break;
                    }
                }
                let w = scramble(&l, &v, &mut rng);
                let norm = eichler_normalize(&l, &v, &w).unwrap();
                assert_eq!(norm.isometry.apply(&v).unwrap(), w);
            }
        }
    }
}
