use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hnf::echelonize;
use super::{IntMatrix, LinalgError};

/// Why an integer system has no solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateKind {
    /// The rational solution is unique on the pivot coordinates and the
    /// coordinate `pivot` is not an integer; `denominator` is its reduced
    /// denominator. `row` is the original row carrying that pivot.
    Divisibility {
        pivot: usize,
        row: usize,
        denominator: BigInt,
    },
    /// Row `row` contradicts the rows before it even over the rationals.
    InconsistentRow { row: usize },
}

/// A rational row combination `w` with `w * a` integral and `w * b` not an
/// integer. Any integer `x` with `a * x = b` would make `w * b = (w * a) * x`
/// an integer, so the certificate is checkable without trusting the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub kind: CertificateKind,
    /// Sparse multipliers `(row index, w_row)`, rows ascending.
    pub multipliers: Vec<(usize, BigRational)>,
}

impl InfeasibilityCertificate {
    /// `w * b`, which must be non-integral.
    pub fn combined_rhs(&self, b: &[BigInt]) -> BigRational {
        self.multipliers
            .iter()
            .map(|(r, w)| w * BigRational::from_integer(b[*r].clone()))
            .sum()
    }

    /// `w * a`, which must be integral.
    pub fn combined_row(&self, a: &IntMatrix) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); a.cols()];
        for (r, w) in &self.multipliers {
            for (slot, v) in acc.iter_mut().zip(a.row(*r)) {
                if !v.is_zero() {
                    *slot += w * BigRational::from_integer(v.clone());
                }
            }
        }
        acc
    }

    pub fn verify(&self, a: &IntMatrix, b: &[BigInt]) -> bool {
        if b.len() != a.rows() || self.multipliers.iter().any(|(r, _)| *r >= a.rows()) {
            return false;
        }
        self.combined_row(a).iter().all(BigRational::is_integer)
            && !self.combined_rhs(b).is_integer()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiophantineOutcome {
    Solution(Vec<BigInt>),
    NoSolution(InfeasibilityCertificate),
}

impl DiophantineOutcome {
    pub fn is_solution(&self) -> bool {
        matches!(self, DiophantineOutcome::Solution(_))
    }

    /// Re-checks a witness by substitution or a certificate by recombination.
    pub fn verify(&self, a: &IntMatrix, b: &[BigInt]) -> bool {
        match self {
            DiophantineOutcome::Solution(x) => a.mul_vec(x).is_ok_and(|ax| ax == b),
            DiophantineOutcome::NoSolution(cert) => cert.verify(a, b),
        }
    }
}

/// Decides `a * x = b` over the integers.
///
/// Zero and duplicate rows are dropped first. The remaining rows are brought
/// to lower echelon form by unimodular column operations (`a * v = l`),
/// after which `l * y = b` is solved by forward substitution and `x = v * y`.
pub fn solve_diophantine(a: &IntMatrix, b: &[BigInt]) -> Result<DiophantineOutcome, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::Dimension(format!(
            "{} rows but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();

    // active rows, deduplicated
    let mut active: Vec<usize> = Vec::new();
    let mut seen: HashMap<&[BigInt], usize> = HashMap::new();
    for r in 0..a.rows() {
        let row = a.row(r);
        if row.iter().all(Zero::is_zero) {
            if !b[r].is_zero() {
                let w = BigRational::new(BigInt::one(), BigInt::from(2) * &b[r]);
                return Ok(no_solution(
                    CertificateKind::InconsistentRow { row: r },
                    vec![(r, w)],
                ));
            }
            continue;
        }
        match seen.get(row) {
            Some(&first) if b[first] == b[r] => {}
            Some(&first) => {
                let w = BigRational::new(BigInt::one(), BigInt::from(2) * (&b[r] - &b[first]));
                return Ok(no_solution(
                    CertificateKind::InconsistentRow { row: r },
                    vec![(first, -w.clone()), (r, w)],
                ));
            }
            None => {
                seen.insert(row, r);
                active.push(r);
            }
        }
    }

    // transpose of the active system: row k of `t` is column k of the active rows
    let m = active.len();
    let mut t: Vec<Vec<BigInt>> = (0..n)
        .map(|c| active.iter().map(|&r| a.get(r, c).clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = IntMatrix::identity(n).into_rows();
    // t' = u t, so (active a) u^T = t'^T =: l, lower echelon.
    let pivot_rows = echelonize(&mut t, m, Some(&mut u));
    let l = |i: usize, k: usize| -> &BigInt { &t[k][i] };

    let mut y: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut next = 0usize;
    for i in 0..m {
        let bi = &b[active[i]];
        let known: BigInt = (0..next).map(|k| l(i, k) * &y[k]).sum();
        if next < pivot_rows.len() && pivot_rows[next] == i {
            let residual = bi - &known;
            let (q, rem) = residual.div_rem(l(i, next));
            if rem.is_zero() {
                y[next] = q;
                next += 1;
                continue;
            }
            let value = BigRational::new(residual, l(i, next).clone());
            let mut w = vec![BigRational::zero(); next + 1];
            w[next] = BigRational::new(BigInt::one(), l(i, next).clone());
            back_substitute(&mut w, next, &pivot_rows, &l, None);
            let multipliers = w
                .into_iter()
                .enumerate()
                .map(|(k, wk)| (active[pivot_rows[k]], wk))
                .collect();
            let kind = CertificateKind::Divisibility {
                pivot: next,
                row: active[i],
                denominator: value.denom().clone(),
            };
            return Ok(no_solution(kind, multipliers));
        } else if known != *bi {
            // w = e_i + (pivot-row part), chosen so that w L = 0
            let mut w = vec![BigRational::zero(); next];
            back_substitute(&mut w, next, &pivot_rows, &l, Some(i));
            let scale = BigRational::new(BigInt::one(), BigInt::from(2) * (bi - &known));
            let mut multipliers: Vec<(usize, BigRational)> = w
                .into_iter()
                .enumerate()
                .map(|(k, wk)| (active[pivot_rows[k]], wk * &scale))
                .collect();
            multipliers.push((active[i], scale));
            return Ok(no_solution(
                CertificateKind::InconsistentRow { row: active[i] },
                multipliers,
            ));
        }
    }

    // x = u^T y
    let x: Vec<BigInt> = (0..n)
        .map(|c| {
            (0..n)
                .map(|k| &u[k][c] * &y[k])
                .filter(|v| !v.is_zero())
                .sum()
        })
        .collect();
    debug_assert_eq!(a.mul_vec(&x).ok().as_deref(), Some(b));
    Ok(DiophantineOutcome::Solution(x))
}

/// Fills `w[0..upto]` so that `w * L` vanishes on the pivot columns `< upto`.
///
/// With `extra = None`, `w[upto]` is already set and participates; with
/// `extra = Some(i)`, a coefficient `1` on (non-pivot) row `i` is implied.
fn back_substitute<'a>(
    w: &mut [BigRational],
    upto: usize,
    pivot_rows: &[usize],
    l: &impl Fn(usize, usize) -> &'a BigInt,
    extra: Option<usize>,
) {
    let top = if extra.is_some() { upto } else { upto + 1 };
    for k in (0..upto).rev() {
        let mut s = BigRational::zero();
        for kk in k + 1..top {
            let entry = l(pivot_rows[kk], k);
            if !entry.is_zero() && !w[kk].is_zero() {
                s += &w[kk] * BigRational::from_integer(entry.clone());
            }
        }
        if let Some(i) = extra {
            s += BigRational::from_integer(l(i, k).clone());
        }
        w[k] = -s / BigRational::from_integer(l(pivot_rows[k], k).clone());
    }
}

fn no_solution(
    kind: CertificateKind,
    mut multipliers: Vec<(usize, BigRational)>,
) -> DiophantineOutcome {
    multipliers.retain(|(_, w)| !w.is_zero());
    multipliers.sort_by_key(|(r, _)| *r);
    DiophantineOutcome::NoSolution(InfeasibilityCertificate { kind, multipliers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(a: &IntMatrix, b: &[i64]) -> DiophantineOutcome {
        let b = ints(b);
        let out = solve_diophantine(a, &b).unwrap();
        assert!(out.verify(a, &b), "outcome failed re-verification: {out:?}");
        out
    }

    #[test]
    fn identity_returns_rhs() {
        let out = check(&IntMatrix::identity(3), &[4, -7, 0]);
        assert_eq!(out, DiophantineOutcome::Solution(ints(&[4, -7, 0])));
    }

    #[test]
    fn three_does_not_divide_one() {
        let out = check(&IntMatrix::from_i64(&[&[3]]), &[1]);
        match out {
            DiophantineOutcome::NoSolution(c) => {
                assert_eq!(
                    c.kind,
                    CertificateKind::Divisibility {
                        pivot: 0,
                        row: 0,
                        denominator: BigInt::from(3)
                    }
                )
            }
            other => panic!("expected no solution, got {other:?}"),
        }
    }

    #[test]
    fn two_divides_four() {
        assert_eq!(
            check(&IntMatrix::from_i64(&[&[2]]), &[4]),
            DiophantineOutcome::Solution(ints(&[2]))
        );
    }

    #[test]
    fn underdetermined_gcd() {
        // 15x + 10y = 195, 6x + 7y = 87 has the solution (11, 3)
        let out = check(&IntMatrix::from_i64(&[&[15, 10], &[6, 7]]), &[195, 87]);
        assert_eq!(out, DiophantineOutcome::Solution(ints(&[11, 3])));
        // 2x - 2y = 1 is unsolvable
        assert!(!check(&IntMatrix::from_i64(&[&[2, -2]]), &[1]).is_solution());
        assert!(check(&IntMatrix::from_i64(&[&[1, 2, 0], &[1, 0, 2]]), &[2, 4]).is_solution());
        assert!(!check(&IntMatrix::from_i64(&[&[1, 2, 0], &[1, 0, 2]]), &[2, 1]).is_solution());
    }

    #[test]
    fn rational_inconsistency() {
        let out = check(&IntMatrix::from_i64(&[&[1, 1], &[2, 2]]), &[1, 3]);
        assert!(matches!(
            out,
            DiophantineOutcome::NoSolution(InfeasibilityCertificate {
                kind: CertificateKind::InconsistentRow { row: 1 },
                ..
            })
        ));
        assert!(!check(&IntMatrix::from_i64(&[&[0, 0]]), &[5]).is_solution());
        assert!(!check(&IntMatrix::from_i64(&[&[1, 3], &[1, 3]]), &[2, 5]).is_solution());
    }

    #[test]
    fn zero_and_duplicate_rows_are_harmless() {
        let a = IntMatrix::from_i64(&[&[0, 0], &[1, 1], &[1, 1], &[0, 2]]);
        assert!(check(&a, &[0, 3, 3, 4]).is_solution());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(solve_diophantine(&IntMatrix::identity(2), &ints(&[1])).is_err());
    }

    #[test]
    fn forged_certificate_is_rejected() {
        let a = IntMatrix::from_i64(&[&[2]]);
        let b = ints(&[4]);
        let cert = InfeasibilityCertificate {
            kind: CertificateKind::InconsistentRow { row: 0 },
            multipliers: vec![(0, BigRational::new(BigInt::one(), BigInt::from(3)))],
        };
        assert!(!cert.verify(&a, &b));
    }
}
