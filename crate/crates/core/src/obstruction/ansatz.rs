use std::collections::HashMap;

use num_bigint::BigInt;

use super::{LinearForm, ObstructionError, SymbolicVector, Unknown};
use crate::action::ActionTable;
use crate::kernel::{KernelBasis, KernelGeneratorId};
use crate::words::{Alphabet, GenKind, GeneratorId, Letter, Word};

/// Generic tails for every generator, with fresh unknowns.
#[derive(Debug, Clone)]
pub struct SectionAnsatz {
    alphabet: Alphabet,
    basis: KernelBasis,
    actions: ActionTable,
    tails: Vec<SymbolicVector>,
    unknowns: Vec<Unknown>,
    columns: HashMap<Unknown, usize>,
}

pub fn build_ansatz(n: usize, g: usize) -> Result<SectionAnsatz, ObstructionError> {
    if n < 1 || g < 2 {
        return Err(ObstructionError::InvalidParameters { n, g });
    }
    let alphabet = Alphabet::new(n, g).map_err(|_| ObstructionError::InvalidParameters { n, g })?;
    let basis = KernelBasis::new(n, g).map_err(|_| ObstructionError::InvalidParameters { n, g })?;
    let gens = alphabet.generators();
    let mut tails = Vec::with_capacity(gens.len());
    let mut unknowns = Vec::new();
    for gen in &gens {
        let coords = basis
            .elements()
            .into_iter()
            .map(|e| {
                let u = match (gen.kind(), e) {
                    (GenKind::B(i, j), KernelGeneratorId::KRho(r)) => Unknown::Alpha { i, j, r },
                    (GenKind::B(i, j), KernelGeneratorId::KB(q)) => Unknown::Beta { i, j, q },
                    (GenKind::Rho(k, l), KernelGeneratorId::KRho(r)) => Unknown::Gamma { k, l, r },
                    (GenKind::Rho(k, l), KernelGeneratorId::KB(q)) => Unknown::Eta { k, l, q },
                };
                unknowns.push(u);
                LinearForm::var(u)
            })
            .collect();
        tails.push(SymbolicVector(coords));
    }
    unknowns.sort();
    let columns = unknowns.iter().enumerate().map(|(c, u)| (*u, c)).collect();
    Ok(SectionAnsatz {
        alphabet,
        basis,
        actions: ActionTable::new(&gens),
        tails,
        unknowns,
        columns,
    })
}

impl SectionAnsatz {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn basis(&self) -> &KernelBasis {
        &self.basis
    }

    pub fn actions(&self) -> &ActionTable {
        &self.actions
    }

    /// All unknowns in column order.
    pub fn unknowns(&self) -> &[Unknown] {
        &self.unknowns
    }

    pub fn column(&self, u: &Unknown) -> Option<usize> {
        self.columns.get(u).copied()
    }

    pub fn tail(&self, gen: &GeneratorId) -> &SymbolicVector {
        &self.tails[self.alphabet.index_of(gen)]
    }

    /// Tail `v` with `s(x^e) = x^e v`: the stored tail for `e = +1`, and
    /// `-(action of x)(tail)` for `e = -1`.
    pub fn lift_tail(&self, letter: &Letter) -> SymbolicVector {
        let t = self.tail(&letter.gen());
        if letter.is_inverse() {
            -t.apply(self.actions.generator(&letter.gen()))
        } else {
            t.clone()
        }
    }

    /// Tail `v` with `s(w) = w v`. Each letter's tail is moved right past
    /// the remaining suffix `S`, which transforms it by the action of `S^-1`.
    pub fn normalize_tail(&self, w: &Word) -> SymbolicVector {
        let rank = self.basis.rank();
        let mut acc = SymbolicVector::zero(rank);
        let mut suffix_inv = crate::action::ActionMatrix::identity(rank);
        for letter in w.letters().iter().rev() {
            acc = acc + self.lift_tail(letter).apply(&suffix_inv);
            suffix_inv = suffix_inv.compose(self.actions.letter(&letter.inverted()));
        }
        acc
    }

    /// Unknown count `C(n,2)(g+n-1) + n g (g+n-1)`.
    pub fn expected_unknowns(n: usize, g: usize) -> usize {
        (n * (n - 1) / 2) * (g + n - 1) + n * g * (g + n - 1)
    }

    /// Column-ordered coefficient vector of a form (the constant is dropped).
    pub fn coefficients(&self, form: &LinearForm) -> Vec<BigInt> {
        let mut v = vec![BigInt::default(); self.unknowns.len()];
        for (u, c) in form.terms() {
            v[self.columns[u]] = c.clone();
        }
        v
    }

    /// The form `sum c_u u` with `c` in column order.
    pub fn form_from_coefficients(&self, coeffs: &[BigInt]) -> LinearForm {
        let mut f = LinearForm::zero();
        for (u, c) in self.unknowns.iter().zip(coeffs) {
            f.add_term(*u, c);
        }
        f
    }
}
