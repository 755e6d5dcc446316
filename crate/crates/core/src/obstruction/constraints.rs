use num_bigint::BigInt;

use super::{LinearForm, SectionAnsatz, Unknown};
use crate::intlinalg::IntMatrix;
use crate::kernel::kappa;
use crate::presentation::{FamilySet, Presentation, RelationFamily};

/// Origin of one constraint row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowProvenance {
    /// Index into the presentation's relation list.
    pub relation: usize,
    pub family: RelationFamily,
    /// Kernel basis coordinate compared by this row.
    pub coordinate: usize,
}

/// `a x = b` over the ansatz unknowns, one row per (relation, coordinate).
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub families: FamilySet,
    pub unknowns: Vec<Unknown>,
    pub a: IntMatrix,
    pub b: Vec<BigInt>,
    pub provenance: Vec<RowProvenance>,
}

impl ConstraintSystem {
    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    /// Row counts per family `[a, b, c, d]`.
    pub fn family_rows(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for p in &self.provenance {
            counts[(p.family.letter() as u8 - b'a') as usize] += 1;
        }
        counts
    }

    /// Left-hand side of row `r` as a form.
    pub fn row_form(&self, r: usize) -> LinearForm {
        let mut f = LinearForm::zero();
        for (u, c) in self.unknowns.iter().zip(self.a.row(r)) {
            f.add_term(*u, c);
        }
        f
    }

    /// `lhs = rhs` rendering of row `r`.
    pub fn equation(&self, r: usize) -> String {
        format!("{} = {}", self.row_form(r), self.b[r])
    }

    /// Whether `x` satisfies every row exactly.
    pub fn is_satisfied_by(&self, x: &[BigInt]) -> bool {
        x.len() == self.unknowns.len() && self.a.mul_vec(x).is_ok_and(|ax| ax == self.b)
    }
}

/// Rows of `tail(rhs) - tail(lhs) = kappa(relation)` for every relation in
/// `families`, in presentation order and then basis order.
pub fn generate_constraints(
    ansatz: &SectionAnsatz,
    p: &Presentation,
    families: FamilySet,
) -> ConstraintSystem {
    let basis = ansatz.basis();
    let cols = ansatz.unknowns().len();
    let mut rows = Vec::new();
    let mut b = Vec::new();
    let mut provenance = Vec::new();
    for (idx, rel) in p.relations().iter().enumerate() {
        if !families.contains(&rel.family) {
            continue;
        }
        let diff = ansatz.normalize_tail(&rel.rhs) - ansatz.normalize_tail(&rel.lhs);
        let k = kappa(rel, basis);
        for (coord, (form, kc)) in diff.0.iter().zip(k.coords()).enumerate() {
            rows.push(ansatz.coefficients(form));
            b.push(kc - &form.constant);
            provenance.push(RowProvenance {
                relation: idx,
                family: rel.family,
                coordinate: coord,
            });
        }
    }
    ConstraintSystem {
        families,
        unknowns: ansatz.unknowns().to_vec(),
        a: IntMatrix::from_rows(cols, rows).expect("rows have one entry per unknown"),
        b,
        provenance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::build_ansatz;
    use crate::presentation::{build_presentation, ArtinCase, RhoRhoCase};
    use num_traits::Zero;

    fn system(n: usize, g: usize) -> (SectionAnsatz, Presentation, ConstraintSystem) {
        let a = build_ansatz(n, g).unwrap();
        let p = build_presentation(n, g).unwrap();
        let s = generate_constraints(&a, &p, FamilySet::ALL);
        (a, p, s)
    }

    fn rows_of(s: &ConstraintSystem, fam: RelationFamily) -> Vec<String> {
        (0..s.rows())
            .filter(|&r| s.provenance[r].family == fam)
            .map(|r| s.equation(r))
            .collect()
    }

    #[test]
    fn rho_rho_commuting_rows() {
        let (_, _, s) = system(3, 3);
        let rows = rows_of(
            &s,
            RelationFamily::RhoRhoB {
                i: 1,
                j: 2,
                k: 1,
                l: 2,
                case: RhoRhoCase::KLess,
            },
        );
        // KB(1) and KB(2) coordinates
        assert_eq!(rows[0], "gamma(2,2,1) + 2 eta(2,2,1) = 0");
        assert_eq!(rows[1], "gamma(1,1,2) + 2 eta(1,1,2) = 0");
        assert!(rows[2..].iter().all(|r| r == "0 = 0"));
    }

    #[test]
    fn rho_rho_equal_index_rows() {
        let (_, _, s) = system(3, 3);
        let rows = rows_of(
            &s,
            RelationFamily::RhoRhoB {
                i: 1,
                j: 2,
                k: 1,
                l: 1,
                case: RhoRhoCase::KEqual,
            },
        );
        assert_eq!(rows[0], "-beta(1,2,1) + gamma(2,1,1) + 2 eta(2,1,1) = 0");
        assert_eq!(rows[1], "-beta(1,2,2) + gamma(1,1,1) + 2 eta(1,1,2) = 0");
        for r in 1..=3 {
            assert_eq!(rows[1 + r], format!("-alpha(1,2,{r}) = 0"));
        }
    }

    #[test]
    fn commuting_artin_rows_vanish() {
        let (_, p, s) = system(4, 2);
        let fam = RelationFamily::ArtinA {
            r: 1,
            s: 2,
            i: 3,
            j: 4,
            case: ArtinCase::Commuting,
        };
        assert!(p.relations().iter().any(|r| r.family == fam));
        assert!(rows_of(&s, fam).iter().all(|r| r == "0 = 0"));
    }

    #[test]
    fn surface_row_on_first_strand() {
        let (_, _, s) = system(2, 3);
        let rows = rows_of(&s, RelationFamily::SurfaceC { i: 1 });
        // 1 - 2 sum eta(1,l,1) - sum gamma(1,l,l) = beta(1,2,1) - 2 sum eta(1,l,1)
        assert_eq!(
            rows[0],
            "beta(1,2,1) + gamma(1,1,1) + gamma(1,2,2) + gamma(1,3,3) = 1"
        );
    }

    #[test]
    fn provenance_is_total_and_deterministic() {
        let (a, p, s) = system(3, 3);
        assert_eq!(s.provenance.len(), s.rows());
        assert_eq!(s.rows(), p.relations().len() * a.basis().rank());
        let again = generate_constraints(&a, &p, FamilySet::ALL);
        assert_eq!(again.a, s.a);
        assert_eq!(again.b, s.b);
        let bcd = generate_constraints(&a, &p, FamilySet::parse("bcd").unwrap());
        assert_eq!(bcd.family_rows()[0], 0);
        assert_eq!(bcd.rows(), s.rows() - s.family_rows()[0]);
    }

    #[test]
    fn single_strand_system() {
        let (_, _, s) = system(1, 3);
        assert_eq!(s.rows(), 3);
        // surface kappa is 2 (KRho(1) + KRho(2) + KRho(3)), so every row is inhomogeneous
        assert!(s.b.iter().all(|v| !v.is_zero()));
    }
}
