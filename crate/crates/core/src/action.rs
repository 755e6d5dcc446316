//! Conjugation action of `P_n(N_g)` on `K/H` as unimodular integer matrices.
//!
//! Columns are images of basis vectors. `B[i,j]` acts trivially; `r[k,l]`
//! negates `KB(k)` and sends `KRho(l)` to `KRho(l) - KB(k)`, with `KB(n)`
//! rewritten over the basis. Composition satisfies
//! `word_action(u v) = word_action(u) * word_action(v)`, so applying
//! `word_action(w)` to `v` gives the class of `w v w^-1`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::intlinalg::IntMatrix;
use crate::kernel::{KernelBasis, KernelGeneratorId, KernelVector};
use crate::presentation::GroupStructure;
use crate::words::{GenKind, GeneratorId, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix(IntMatrix);

impl ActionMatrix {
    pub fn identity(rank: usize) -> Self {
        Self(IntMatrix::identity(rank))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn apply(&self, v: &KernelVector) -> KernelVector {
        KernelVector(
            self.0
                .mul_vec(v.coords())
                .expect("vector length matches matrix"),
        )
    }

    pub fn compose(&self, rhs: &ActionMatrix) -> ActionMatrix {
        ActionMatrix(&self.0 * &rhs.0)
    }

    /// Exact integer inverse; the matrices are unimodular by construction.
    pub fn inverse(&self) -> ActionMatrix {
        ActionMatrix(
            self.0
                .inverse_unimodular()
                .expect("action matrices are unimodular"),
        )
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant().expect("square")
    }

    pub fn is_unimodular(&self) -> bool {
        self.0.is_unimodular()
    }

    /// Table with rows and columns labeled by the kernel basis.
    pub fn render(&self, basis: &KernelBasis) -> String {
        let labels = basis.labels();
        let cells: Vec<Vec<String>> = (0..self.dim())
            .map(|r| {
                (0..self.dim())
                    .map(|c| self.0.get(r, c).to_string())
                    .collect()
            })
            .collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let col_w = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(labels.iter().map(String::len))
            .max()
            .unwrap_or(1);
        let mut out = format!("{:label_w$}", "");
        for l in &labels {
            out.push_str(&format!(" {l:>col_w$}"));
        }
        out.push('\n');
        for (label, row) in labels.iter().zip(&cells) {
            out.push_str(&format!("{label:label_w$}"));
            for c in row {
                out.push_str(&format!(" {c:>col_w$}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ActionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn basis_for(gen: &GeneratorId) -> KernelBasis {
    let a = gen.alphabet();
    KernelBasis::new(a.n(), a.g()).expect("alphabet parameters are positive")
}

/// Action of a single coset representative.
pub fn generator_action(gen: &GeneratorId) -> ActionMatrix {
    let basis = basis_for(gen);
    let rank = basis.rank();
    let mut m = IntMatrix::identity(rank);
    if let GenKind::Rho(k, l) = gen.kind() {
        if let Some(idx) = basis.index_of(KernelGeneratorId::KB(k)) {
            m.set(idx, idx, -BigInt::one());
        }
        let col = basis
            .index_of(KernelGeneratorId::KRho(l))
            .expect("rho index in range");
        let shift = basis
            .generator_vector(KernelGeneratorId::KB(k))
            .expect("strand index in range");
        for (r, s) in shift.coords().iter().enumerate() {
            if !s.is_zero() {
                let v = m.get(r, col) - s;
                m.set(r, col, v);
            }
        }
    }
    ActionMatrix(m)
}

/// Product of generator actions (inverse letters by exact inversion) in word order.
pub fn word_action(w: &Word) -> ActionMatrix {
    let a = w.alphabet();
    let rank = a.n() + a.g() - 1;
    w.letters()
        .iter()
        .fold(ActionMatrix::identity(rank), |acc, letter| {
            let m = generator_action(&letter.gen());
            let m = if letter.is_inverse() { m.inverse() } else { m };
            acc.compose(&m)
        })
}

/// Precomputed generator matrices and inverses for one `(n, g)`.
#[derive(Debug, Clone)]
pub struct ActionTable {
    basis: KernelBasis,
    forward: HashMap<GeneratorId, ActionMatrix>,
    backward: HashMap<GeneratorId, ActionMatrix>,
}

impl ActionTable {
    pub fn new(gens: &[GeneratorId]) -> Self {
        let basis = gens.first().map(basis_for).expect("at least one generator");
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for gen in gens {
            let m = generator_action(gen);
            backward.insert(*gen, m.inverse());
            forward.insert(*gen, m);
        }
        Self {
            basis,
            forward,
            backward,
        }
    }

    pub fn basis(&self) -> &KernelBasis {
        &self.basis
    }

    pub fn letter(&self, letter: &Letter) -> &ActionMatrix {
        let table = if letter.is_inverse() {
            &self.backward
        } else {
            &self.forward
        };
        table.get(&letter.gen()).expect("generator in table")
    }

    pub fn generator(&self, gen: &GeneratorId) -> &ActionMatrix {
        &self.forward[gen]
    }

    pub fn word(&self, w: &Word) -> ActionMatrix {
        w.letters()
            .iter()
            .fold(ActionMatrix::identity(self.basis.rank()), |acc, l| {
                acc.compose(self.letter(l))
            })
    }
}

/// Invertible matrices of a fixed dimension under multiplication.
#[derive(Debug, Clone, Copy)]
pub struct MatrixGroup {
    pub dim: usize,
}

impl GroupStructure for MatrixGroup {
    type Element = ActionMatrix;

    fn identity(&self) -> ActionMatrix {
        ActionMatrix::identity(self.dim)
    }

    fn multiply(&self, a: &ActionMatrix, b: &ActionMatrix) -> ActionMatrix {
        a.compose(b)
    }

    fn inverse(&self, a: &ActionMatrix) -> ActionMatrix {
        a.inverse()
    }

    fn equal(&self, a: &ActionMatrix, b: &ActionMatrix) -> bool {
        a == b
    }
}
