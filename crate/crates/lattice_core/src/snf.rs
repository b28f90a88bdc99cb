//! Smith normal form of square integer matrices, with unimodular transforms.

use crate::{matrix, Int};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Smith normal form `left · m · right = diag(diag)`.
///
/// `left` and `right` are unimodular; `diag` is non-negative with each entry
/// dividing the next.
#[derive(Debug, Clone)]
pub struct Snf {
    /// Diagonal entries, divisibility-ordered.
    pub diag: Vec<Int>,
    /// Row transform (unimodular).
    pub left: Vec<Vec<Int>>,
    /// Column transform (unimodular).
    pub right: Vec<Vec<Int>>,
}

/// Compute the Smith normal form of a square integer matrix.
///
/// The implementation is the classical pivot-and-reduce algorithm: bring the
/// absolutely smallest nonzero entry of the working block to the pivot, clear
/// its row and column by nearest-integer division, and repair the divisibility
/// chain by folding offending entries into the pivot row. All row operations
/// are mirrored on `left`, all column operations on `right`, so the identity
/// `left · m · right = D` holds exactly (and is asserted before returning).
pub fn smith_normal_form(m: &[Vec<Int>]) -> Snf {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut left = matrix::identity(n);
    let mut right = matrix::identity(n);

    // Row/column elementary operations, mirrored on the transforms.
    fn swap_rows(a: &mut [Vec<Int>], left: &mut [Vec<Int>], i: usize, j: usize) {
        a.swap(i, j);
        left.swap(i, j);
    }
    fn swap_cols(a: &mut [Vec<Int>], right: &mut [Vec<Int>], i: usize, j: usize) {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in right.iter_mut() {
            row.swap(i, j);
        }
    }
    fn add_row(a: &mut [Vec<Int>], left: &mut [Vec<Int>], dst: usize, src: usize, k: &Int) {
        for j in 0..a[dst].len() {
            let t = k * &a[src][j];
            a[dst][j] += t;
        }
        for j in 0..left[dst].len() {
            let t = k * &left[src][j];
            left[dst][j] += t;
        }
    }
    fn add_col(a: &mut [Vec<Int>], right: &mut [Vec<Int>], dst: usize, src: usize, k: &Int) {
        for row in a.iter_mut() {
            let t = k * &row[src];
            row[dst] += t;
        }
        for row in right.iter_mut() {
            let t = k * &row[src];
            row[dst] += t;
        }
    }
    fn negate_row(a: &mut [Vec<Int>], left: &mut [Vec<Int>], i: usize) {
        for c in a[i].iter_mut() {
            *c = -c.clone();
        }
        for c in left[i].iter_mut() {
            *c = -c.clone();
        }
    }
    // Nearest-integer quotient, so remainders shrink at every step.
    fn rounded_div(num: &Int, den: &Int) -> Int {
        let (mut q, r) = num.div_rem(den);
        let two_r = r.abs() * Int::from(2);
        if two_r > den.abs() {
            if (num.sign() == den.sign()) || r.is_zero() {
                q += 1;
            } else {
                q -= 1;
            }
        }
        q
    }

    for t in 0..n {
        'pivot: loop {
            // Find the absolutely smallest nonzero entry of the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if a[i][j].abs() < a[bi][bj].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // trailing block is zero
            };
            if pi != t {
                swap_rows(&mut a, &mut left, t, pi);
            }
            if pj != t {
                swap_cols(&mut a, &mut right, t, pj);
            }

            // Reduce column and row against the pivot.
            let mut clean = true;
            for i in t + 1..n {
                if !a[i][t].is_zero() {
                    let q = rounded_div(&a[i][t], &a[t][t]);
                    add_row(&mut a, &mut left, i, t, &(-q));
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = rounded_div(&a[t][j], &a[t][t]);
                    add_col(&mut a, &mut right, j, t, &(-q));
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot; // a smaller pivot candidate now exists
            }

            // Divisibility repair: the pivot must divide the rest of the block.
            for i in t + 1..n {
                for j in t + 1..n {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        add_row(&mut a, &mut left, t, i, &Int::from(1));
                        continue 'pivot;
                    }
                }
            }
            if a[t][t].is_negative() {
                negate_row(&mut a, &mut left, t);
            }
            break 'pivot;
        }
    }

    let diag: Vec<Int> = (0..n).map(|i| a[i][i].clone()).collect();
    // Exact verification of the decomposition and the divisibility chain.
    let product = matrix::mat_mul(&matrix::mat_mul(&left, m), &right);
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { diag[i].clone() } else { Int::zero() };
            assert_eq!(product[i][j], expect, "SNF decomposition must be exact");
        }
    }
    for i in 1..n {
        if !diag[i - 1].is_zero() {
            assert!(
                (&diag[i] % &diag[i - 1]).is_zero(),
                "SNF divisibility chain violated"
            );
        } else {
            assert!(diag[i].is_zero(), "zero diagonal entries must come last");
        }
    }
    Snf { diag, left, right }
}
