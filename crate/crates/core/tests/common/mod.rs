#![allow(dead_code)]

use std::collections::HashMap;

use fnsplit_core::intlinalg::IntMatrix;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows.iter().map(|r| ints(r)).collect()).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> (Vec<Vec<i64>>, usize) {
    let m = rng.gen_range(1..=max_dim);
    let n = rng.gen_range(1..=max_dim);
    let rows = (0..m)
        .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    (rows, n)
}

/// Half the systems have a right-hand side `a x0` with `x0` in `[-4, 4]`;
/// the rest add a small perturbation, which usually destroys solvability.
pub fn random_system(rng: &mut ChaCha8Rng) -> (Vec<Vec<i64>>, usize, Vec<i64>) {
    let (rows, n) = random_matrix(rng, 5, 6);
    let x0: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
    let perturb = rng.gen_bool(0.5);
    let b = rows
        .iter()
        .map(|r| {
            let v: i64 = r.iter().zip(&x0).map(|(a, x)| a * x).sum();
            if perturb {
                v + rng.gen_range(-3..=3)
            } else {
                v
            }
        })
        .collect();
    (rows, n, b)
}

fn odometer(len: usize, bound: i64, mut visit: impl FnMut(&[i64])) {
    let mut x = vec![-bound; len];
    loop {
        visit(&x);
        let mut k = 0;
        loop {
            if k == len {
                return;
            }
            if x[k] < bound {
                x[k] += 1;
                break;
            }
            x[k] = -bound;
            k += 1;
        }
    }
}

/// Exhaustive search for `a x = b` with `x` in `[-bound, bound]^cols`,
/// meeting in the middle over a split of the columns.
pub fn box_search(a: &[Vec<i64>], cols: usize, b: &[i64], bound: i64) -> Option<Vec<i64>> {
    let left = cols / 2;
    let partial = |x: &[i64], offset: usize| -> Vec<i64> {
        a.iter()
            .map(|r| {
                r[offset..offset + x.len()]
                    .iter()
                    .zip(x)
                    .map(|(p, q)| p * q)
                    .sum()
            })
            .collect()
    };
    let mut table: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    odometer(left, bound, |x| {
        table.entry(partial(x, 0)).or_insert_with(|| x.to_vec());
    });
    let mut found = None;
    odometer(cols - left, bound, |y| {
        if found.is_some() {
            return;
        }
        let need: Vec<i64> = b
            .iter()
            .zip(partial(y, left))
            .map(|(bi, v)| bi - v)
            .collect();
        if let Some(x) = table.get(&need) {
            let mut full = x.clone();
            full.extend_from_slice(y);
            found = Some(full);
        }
    });
    found
}
