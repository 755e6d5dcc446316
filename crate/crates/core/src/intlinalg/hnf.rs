use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{floor_quot, sub_multiple_rows, IntMatrix};

/// Row-style Hermite normal form `h = u * a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

/// Row-style Hermite normal form: `h` is in echelon form with positive
/// pivots, entries above each pivot reduced into `[0, pivot)`, and zero
/// rows at the bottom. `u` is unimodular.
pub fn hnf(a: &IntMatrix) -> HnfResult {
    let mut rows = a.clone().into_rows();
    let mut u = IntMatrix::identity(a.rows()).into_rows();
    echelonize(&mut rows, a.cols(), Some(&mut u));
    HnfResult {
        h: IntMatrix::from_rows(a.cols(), rows).expect("shape preserved"),
        u: IntMatrix::from_rows(a.rows(), u).expect("shape preserved"),
    }
}

/// In-place Hermite reduction of `rows` (each of length `cols`), mirroring
/// every row operation on `track` when given. Returns the pivot column of
/// each nonzero row.
///
/// Pivots are chosen by minimal absolute value to keep entries small.
pub(crate) fn echelonize(
    rows: &mut [Vec<BigInt>],
    cols: usize,
    mut track: Option<&mut Vec<Vec<BigInt>>>,
) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let mut have_pivot = false;
        loop {
            let best = (r..m)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&x, &y| rows[x][c].magnitude().cmp(rows[y][c].magnitude()));
            let Some(p) = best else { break };
            have_pivot = true;
            rows.swap(p, r);
            if let Some(t) = track.as_deref_mut() {
                t.swap(p, r);
            }
            let mut clean = true;
            for i in r + 1..m {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = floor_quot(&rows[i][c], &rows[r][c]);
                sub_multiple_rows(rows, i, r, &q, c);
                if let Some(t) = track.as_deref_mut() {
                    sub_multiple_rows(t, i, r, &q, 0);
                }
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !have_pivot {
            continue;
        }
        if rows[r][c].is_negative() {
            for v in &mut rows[r][c..] {
                *v = -std::mem::take(v);
            }
            if let Some(t) = track.as_deref_mut() {
                for v in &mut t[r] {
                    *v = -std::mem::take(v);
                }
            }
        }
        for i in 0..r {
            if rows[i][c].is_zero() {
                continue;
            }
            let q = floor_quot(&rows[i][c], &rows[r][c]);
            sub_multiple_rows(rows, i, r, &q, c);
            if let Some(t) = track.as_deref_mut() {
                sub_multiple_rows(t, i, r, &q, 0);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Checks the shape conditions of a row-style Hermite normal form.
pub(crate) fn is_hermite(h: &IntMatrix) -> bool {
    let mut last: Option<usize> = None;
    let mut seen_zero = false;
    for (r, row) in h.row_vecs().iter().enumerate() {
        match row.iter().position(|v| !v.is_zero()) {
            None => seen_zero = true,
            Some(c) => {
                if seen_zero || last.is_some_and(|l| c <= l) || !row[c].is_positive() {
                    return false;
                }
                for above in 0..r {
                    let v = h.get(above, c);
                    if v.is_negative() || v >= &row[c] {
                        return false;
                    }
                }
                last = Some(c);
            }
        }
    }
    true
}

impl HnfResult {
    /// Re-verifies `h = u * a`, unimodularity of `u`, and the echelon shape.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        self.u.checked_mul(a).is_ok_and(|ua| ua == self.h)
            && self.u.is_unimodular()
            && is_hermite(&self.h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(3);
        let r = hnf(&id);
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);
    }

    #[test]
    fn zero_matrix() {
        let z = IntMatrix::zeros(2, 3);
        let r = hnf(&z);
        assert_eq!(r.h, z);
        assert_eq!(r.u, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        // By hand: already echelon, pivots 2 and 6, and 4 lies in [0, 6).
        let a = IntMatrix::from_i64(&[&[2, 4], &[0, 6]]);
        let r = hnf(&a);
        assert_eq!(r.h, a);
        assert!(r.verify(&a));
    }

    #[test]
    fn reduces_above_pivot() {
        let a = IntMatrix::from_i64(&[&[1, 9], &[0, 4]]);
        let r = hnf(&a);
        assert_eq!(r.h, IntMatrix::from_i64(&[&[1, 1], &[0, 4]]));
        assert!(r.verify(&a));
    }

    #[test]
    fn negative_and_rank_deficient() {
        let a = IntMatrix::from_i64(&[&[-3, 6, 1], &[6, -12, -2], &[0, 0, 5]]);
        let r = hnf(&a);
        assert!(r.verify(&a));
        assert!(r.h.row(2).iter().all(|v| v.is_zero()));
    }
}
