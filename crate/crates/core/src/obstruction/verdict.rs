use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::{
    build_ansatz, generate_constraints, ConstraintSystem, LinearForm, ObstructionError,
    SectionAnsatz, Unknown,
};
use crate::intlinalg::{
    solve_diophantine, AffineRowSpace, CertificateKind, DiophantineOutcome, Implication,
    InfeasibilityCertificate,
};
use crate::presentation::{build_presentation, FamilySet, Presentation};
use crate::report::{bigint_value, rational_value};

pub const VERDICT_SCHEMA: &str = "fnsplit/v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// No integer solution; the certificate re-checks independently.
    Obstructed(InfeasibilityCertificate),
    /// An integer assignment in column order satisfying every row.
    Unobstructed(Vec<BigInt>),
}

/// A distinguished linear form and the value the system forces on it, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormDiagnostic {
    pub form: LinearForm,
    pub forced: Option<BigRational>,
}

/// `Delta = sum_{l<n} gamma(l,1,1)` and `L = sum_{i<n} beta(i,n,i)`, for `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    /// The rational relaxation has a solution.
    pub rationally_consistent: bool,
    pub delta: Option<FormDiagnostic>,
    pub l: Option<FormDiagnostic>,
    /// Does `L = 0` follow from the system?
    pub l_zero: Option<Implication>,
    /// Does `(n+g-2) Delta = n-1` follow from the system?
    pub delta_identity: Option<Implication>,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub n: usize,
    pub g: usize,
    pub system: ConstraintSystem,
    pub outcome: Outcome,
    pub diagnostics: Diagnostics,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self.outcome, Outcome::Obstructed(_))
    }

    pub fn tag(&self) -> &'static str {
        if self.is_obstructed() {
            "obstructed"
        } else {
            "unobstructed"
        }
    }

    /// Re-checks the witness by substitution or the certificate by recombination.
    pub fn verify(&self) -> bool {
        match &self.outcome {
            Outcome::Unobstructed(x) => self.system.is_satisfied_by(x),
            Outcome::Obstructed(cert) => cert.verify(&self.system.a, &self.system.b),
        }
    }

    /// Self-describing structured document.
    pub fn to_json(&self) -> Value {
        let s = &self.system;
        let fam = s.family_rows();
        let outcome = match &self.outcome {
            Outcome::Unobstructed(x) => json!({
                "witness": s.unknowns.iter().zip(x).map(|(u, v)| json!([u.to_string(), bigint_value(v)])).collect::<Vec<_>>(),
            }),
            Outcome::Obstructed(cert) => {
                let kind = match &cert.kind {
                    CertificateKind::Divisibility {
                        pivot,
                        row,
                        denominator,
                    } => json!({
                        "type": "divisibility",
                        "pivot": pivot,
                        "row": row,
                        "denominator": bigint_value(denominator),
                    }),
                    CertificateKind::InconsistentRow { row } => {
                        json!({ "type": "inconsistent_row", "row": row })
                    }
                };
                let multipliers: Vec<Value> = cert
                    .multipliers
                    .iter()
                    .map(|(r, w)| {
                        let p = s.provenance[*r];
                        json!({
                            "row": r,
                            "relation": p.relation,
                            "family": p.family.to_string(),
                            "coordinate": p.coordinate,
                            "weight": rational_value(w),
                        })
                    })
                    .collect();
                json!({
                    "certificate": {
                        "kind": kind,
                        "multipliers": multipliers,
                        "combined_rhs": rational_value(&cert.combined_rhs(&s.b)),
                    }
                })
            }
        };
        let form_json = |d: &Option<FormDiagnostic>| match d {
            None => Value::Null,
            Some(d) => json!({
                "form": d.form.to_string(),
                "forced": d.forced.as_ref().map(rational_value),
            }),
        };
        let imp_json = |i: &Option<Implication>| match i {
            None => Value::Null,
            Some(i) => json!({
                "implied": i.implied,
                "lattice_multiplier": i.lattice_multiplier.as_ref().map(bigint_value),
            }),
        };
        json!({
            "schema": VERDICT_SCHEMA,
            "n": self.n,
            "g": self.g,
            "families": s.families.to_string(),
            "unknowns": s.unknowns.len(),
            "rows": s.rows(),
            "family_rows": { "a": fam[0], "b": fam[1], "c": fam[2], "d": fam[3] },
            "verdict": self.tag(),
            "verified": self.verify(),
            "outcome": outcome,
            "diagnostics": {
                "rationally_consistent": self.diagnostics.rationally_consistent,
                "delta": form_json(&self.diagnostics.delta),
                "l": form_json(&self.diagnostics.l),
                "l_zero": imp_json(&self.diagnostics.l_zero),
                "delta_identity": imp_json(&self.diagnostics.delta_identity),
            },
        })
    }
}

/// `Delta` and `L` as forms; `None` for `n = 1`.
pub(crate) fn delta_and_l(n: usize) -> Option<(LinearForm, LinearForm)> {
    (n >= 2).then(|| {
        let delta = (1..n).fold(LinearForm::zero(), |acc, l| {
            acc + LinearForm::var(Unknown::Gamma { k: l, l: 1, r: 1 })
        });
        let l = (1..n).fold(LinearForm::zero(), |acc, i| {
            acc + LinearForm::var(Unknown::Beta { i, j: n, q: i })
        });
        (delta, l)
    })
}

fn diagnose(
    ansatz: &SectionAnsatz,
    system: &ConstraintSystem,
    space: &AffineRowSpace,
    n: usize,
    g: usize,
) -> Diagnostics {
    let rationally_consistent = space.is_rationally_consistent();
    let Some((delta, l)) = delta_and_l(n) else {
        return Diagnostics {
            rationally_consistent,
            delta: None,
            l: None,
            l_zero: None,
            delta_identity: None,
        };
    };
    debug_assert_eq!(system.unknowns, ansatz.unknowns());
    let dc = ansatz.coefficients(&delta);
    let lc = ansatz.coefficients(&l);
    let scaled: Vec<BigInt> = dc.iter().map(|c| c * BigInt::from(n + g - 2)).collect();
    Diagnostics {
        rationally_consistent,
        delta: Some(FormDiagnostic {
            forced: space.forced_value(&dc),
            form: delta,
        }),
        l: Some(FormDiagnostic {
            forced: space.forced_value(&lc),
            form: l,
        }),
        l_zero: Some(space.implies(&lc, &BigInt::zero())),
        delta_identity: Some(space.implies(&scaled, &BigInt::from(n - 1))),
    }
}

/// Builds the full constraint system and decides it over the integers.
pub fn check_splitting(n: usize, g: usize) -> Result<Verdict, ObstructionError> {
    check_splitting_with(n, g, FamilySet::ALL)
}

/// As [`check_splitting`], restricted to the given relation families.
pub fn check_splitting_with(
    n: usize,
    g: usize,
    families: FamilySet,
) -> Result<Verdict, ObstructionError> {
    let ansatz = build_ansatz(n, g)?;
    let p: Presentation =
        build_presentation(n, g).map_err(|_| ObstructionError::InvalidParameters { n, g })?;
    let system = generate_constraints(&ansatz, &p, families);
    let outcome =
        match solve_diophantine(&system.a, &system.b).expect("dimensions agree by construction") {
            DiophantineOutcome::Solution(x) => Outcome::Unobstructed(x),
            DiophantineOutcome::NoSolution(cert) => Outcome::Obstructed(cert),
        };
    let space =
        AffineRowSpace::new(&system.a, &system.b).expect("dimensions agree by construction");
    let diagnostics = diagnose(&ansatz, &system, &space, n, g);
    Ok(Verdict {
        n,
        g,
        system,
        outcome,
        diagnostics,
    })
}
