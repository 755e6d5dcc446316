//! The abelianized kernel `K/H` of the strand-forgetting map
//! `P_{n+1}(N_g) -> P_n(N_g)`.
//!
//! `K` is free on `B[i,n+1]` (`1 <= i <= n`) and `r[n+1,l]` (`1 <= l <= g`).
//! In `K/H` the surface relation for strand `n+1` expresses `B[n,n+1]`
//! through the others, leaving a free abelian group of rank `n+g-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::presentation::{Relation, RelationFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("invalid parameters n = {n}, g = {g}: need n >= 1 and g >= 1")]
    InvalidParameters { n: usize, g: usize },
    #[error("kernel generator {0:?} out of range")]
    OutOfRange(KernelGeneratorId),
}

/// `KB(i)` is `B[i,n+1]`, `KRho(l)` is `r[n+1,l]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KernelGeneratorId {
    KB(usize),
    KRho(usize),
}

/// Ordered basis `(KB(1), ..., KB(n-1), KRho(1), ..., KRho(g))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelBasis {
    n: usize,
    g: usize,
}

impl KernelBasis {
    pub fn new(n: usize, g: usize) -> Result<Self, KernelError> {
        if n < 1 || g < 1 {
            return Err(KernelError::InvalidParameters { n, g });
        }
        Ok(Self { n, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn rank(&self) -> usize {
        self.n + self.g - 1
    }

    pub fn elements(&self) -> Vec<KernelGeneratorId> {
        (1..self.n)
            .map(KernelGeneratorId::KB)
            .chain((1..=self.g).map(KernelGeneratorId::KRho))
            .collect()
    }

    /// Coordinate index of a basis element; `None` for `KB(n)` and out-of-range ids.
    pub fn index_of(&self, id: KernelGeneratorId) -> Option<usize> {
        match id {
            KernelGeneratorId::KB(i) if (1..self.n).contains(&i) => Some(i - 1),
            KernelGeneratorId::KRho(l) if (1..=self.g).contains(&l) => Some(self.n - 1 + l - 1),
            _ => None,
        }
    }

    /// Braid-style label of a coordinate, e.g. `B[1,3]` or `r[3,2]` for `n = 2`.
    pub fn label(&self, idx: usize) -> String {
        match self.elements()[idx] {
            KernelGeneratorId::KB(i) => format!("B[{},{}]", i, self.n + 1),
            KernelGeneratorId::KRho(l) => format!("r[{},{}]", self.n + 1, l),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.rank()).map(|i| self.label(i)).collect()
    }

    /// Coordinates of a single generator, with `KB(n)` rewritten as
    /// `-KB(1) - ... - KB(n-1) + 2 KRho(1) + ... + 2 KRho(g)`.
    pub fn generator_vector(&self, id: KernelGeneratorId) -> Result<KernelVector, KernelError> {
        if let Some(idx) = self.index_of(id) {
            return Ok(KernelVector::unit(self.rank(), idx));
        }
        match id {
            KernelGeneratorId::KB(i) if i == self.n => {
                let coords = (1..self.n)
                    .map(|_| BigInt::from(-1))
                    .chain((1..=self.g).map(|_| BigInt::from(2)))
                    .collect();
                Ok(KernelVector(coords))
            }
            _ => Err(KernelError::OutOfRange(id)),
        }
    }

    pub fn canonical(
        &self,
        raw: &BTreeMap<KernelGeneratorId, BigInt>,
    ) -> Result<KernelVector, KernelError> {
        let mut acc = KernelVector::zero(self.rank());
        for (&id, c) in raw {
            acc = acc + self.generator_vector(id)?.scale(c);
        }
        Ok(acc)
    }

    /// Renders a vector as `(c1, c2, ...)` followed by the basis legend.
    pub fn render(&self, v: &KernelVector) -> String {
        format!("{v} over ({})", self.labels().join(", "))
    }
}

/// Integer coordinates over a [`KernelBasis`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelVector(pub Vec<BigInt>);

impl KernelVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank])
    }

    pub fn unit(rank: usize, idx: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[idx] = BigInt::from(1);
        v
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for KernelVector {
    type Output = KernelVector;
    fn add(self, rhs: KernelVector) -> KernelVector {
        assert_eq!(self.len(), rhs.len(), "kernel vector length mismatch");
        KernelVector(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for KernelVector {
    type Output = KernelVector;
    fn sub(self, rhs: KernelVector) -> KernelVector {
        self + (-rhs)
    }
}

impl Neg for KernelVector {
    type Output = KernelVector;
    fn neg(self) -> KernelVector {
        KernelVector(self.0.into_iter().map(|a| -a).collect())
    }
}

impl fmt::Display for KernelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Rewrites a raw combination of kernel generators over the basis.
pub fn canonical(
    raw: &BTreeMap<KernelGeneratorId, BigInt>,
    n: usize,
    g: usize,
) -> Result<KernelVector, KernelError> {
    KernelBasis::new(n, g)?.canonical(raw)
}

/// Class in `K/H` by which a relation fails when re-read in `P_{n+1}`:
/// `KB(i)` for the surface relation of strand `i`, zero otherwise.
pub fn kappa(rel: &Relation, basis: &KernelBasis) -> KernelVector {
    match rel.family {
        RelationFamily::SurfaceC { i } => basis
            .generator_vector(KernelGeneratorId::KB(i))
            .expect("strand index in range"),
        _ => KernelVector::zero(basis.rank()),
    }
}
