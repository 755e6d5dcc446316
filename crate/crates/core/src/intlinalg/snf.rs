use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{floor_quot, IntMatrix};

/// Which factorization identity an [`SnfResult`] satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnfConvention {
    /// `d = u * a * v`.
    DiagonalEqualsUAV,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub convention: SnfConvention,
}

impl SnfResult {
    /// Diagonal entries `d[0][0], d[1][1], ...` up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Re-verifies the factorization, unimodularity, diagonal shape, sign
    /// and divisibility chain by exact arithmetic.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let SnfConvention::DiagonalEqualsUAV = self.convention;
        let Ok(ua) = self.u.checked_mul(a) else {
            return false;
        };
        let Ok(uav) = ua.checked_mul(&self.v) else {
            return false;
        };
        if uav != self.d || !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(Signed::is_negative) {
            return false;
        }
        diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        })
    }
}

/// Smith normal form with unimodular transforms, `d = u * a * v`.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&d, t..m, t..n) else {
            break;
        };
        move_to_pivot(&mut d, &mut u, &mut v, t, pi, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = floor_quot(d.get(i, t), d.get(t, t));
                d.sub_row_multiple(i, t, &q);
                u.sub_row_multiple(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = floor_quot(d.get(t, j), d.get(t, t));
                d.sub_col_multiple(j, t, &q);
                v.sub_col_multiple(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                // a remainder smaller than the pivot is left in row or column t
                let row_min = min_entry(&d, t..t + 1, t..n);
                let col_min = min_entry(&d, t..m, t..t + 1);
                let best = [row_min, col_min]
                    .into_iter()
                    .flatten()
                    .min_by(|x, y| d.get(x.0, x.1).magnitude().cmp(d.get(y.0, y.1).magnitude()))
                    .expect("nonzero remainder exists");
                move_to_pivot(&mut d, &mut u, &mut v, t, best.0, best.1);
                continue;
            }
            // pivot must divide the whole trailing block
            let offender =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % d.get(t, t)).is_zero()));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    d.sub_row_multiple(t, i, &minus_one);
                    u.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult {
        d,
        u,
        v,
        convention: SnfConvention::DiagonalEqualsUAV,
    }
}

fn min_entry(
    d: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.magnitude() < d.get(bi, bj).magnitude()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn move_to_pivot(
    d: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    if i != t {
        d.swap_rows(i, t);
        u.swap_rows(i, t);
    }
    if j != t {
        d.swap_cols(j, t);
        v.swap_cols(j, t);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(a: &IntMatrix) -> Vec<i64> {
        let r = snf(a);
        assert!(r.verify(a));
        r.diagonal()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 12
        assert_eq!(diag(&IntMatrix::from_i64(&[&[2, 4], &[0, 6]])), vec![2, 6]);
    }

    #[test]
    fn identity() {
        assert_eq!(diag(&IntMatrix::identity(4)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn single_relation_row() {
        let a = IntMatrix::from_i64(&[&[2, 2, 2]]);
        let r = snf(&a);
        assert!(r.verify(&a));
        assert_eq!(r.d, IntMatrix::from_i64(&[&[2, 0, 0]]));
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is diagonal but not Smith: the chain forces (1, 6)
        assert_eq!(diag(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(
            diag(&IntMatrix::from_i64(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]])),
            vec![2, 2, 60]
        );
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(diag(&IntMatrix::zeros(2, 3)), vec![0, 0]);
        let e = IntMatrix::zeros(0, 3);
        assert!(snf(&e).verify(&e));
    }
}
