//! The presentation of the pure braid group `P_n(N_g)` of a non-orientable
//! surface of genus `g`, with generators `B[i,j]`, `r[k,l]` and four
//! families of relations:
//!
//! * (a) Artin relations among the `B[i,j]`,
//! * (b) conjugation of `r[j,l]` by `r[i,k]`, `i < j`,
//! * (c) surface relations `r[i,1]^2 ... r[i,g]^2 = B[1,i] ... B[i,n]`,
//! * (d) conjugation of `B[i,j]` by `r[k,l]`, `k != j`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlinalg::{snf, AffineRowSpace, IntMatrix};
use crate::words::{Alphabet, GeneratorId, Letter, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("invalid parameters n = {n}, g = {g}: need n >= 1 and g >= 2")]
    InvalidParameters { n: usize, g: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Which case of the Artin relation `B[r,s] B[i,j] B[r,s]^-1 = ...` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArtinCase {
    /// `i < r < s < j` or `r < s < i < j`
    Commuting,
    /// `r < i = s < j`
    SharedMiddle,
    /// `i = r < s < j`
    SharedStart,
    /// `r < i < s < j`
    Interleaved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RhoRhoCase {
    KLess,
    KEqual,
    KGreater,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RhoBCase {
    /// `k < i` or `j < k`
    Outside,
    /// `k = i`
    KEqualsI,
    /// `i < k < j`
    Between,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationFamily {
    ArtinA {
        r: usize,
        s: usize,
        i: usize,
        j: usize,
        case: ArtinCase,
    },
    RhoRhoB {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        case: RhoRhoCase,
    },
    SurfaceC {
        i: usize,
    },
    RhoBD {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        case: RhoBCase,
    },
}

impl RelationFamily {
    /// `'a'`, `'b'`, `'c'` or `'d'`.
    pub fn letter(&self) -> char {
        match self {
            RelationFamily::ArtinA { .. } => 'a',
            RelationFamily::RhoRhoB { .. } => 'b',
            RelationFamily::SurfaceC { .. } => 'c',
            RelationFamily::RhoBD { .. } => 'd',
        }
    }

    pub fn case_name(&self) -> &'static str {
        match self {
            RelationFamily::ArtinA { case, .. } => match case {
                ArtinCase::Commuting => "commuting",
                ArtinCase::SharedMiddle => "r<i=s<j",
                ArtinCase::SharedStart => "i=r<s<j",
                ArtinCase::Interleaved => "r<i<s<j",
            },
            RelationFamily::RhoRhoB { case, .. } => match case {
                RhoRhoCase::KLess => "k<l",
                RhoRhoCase::KEqual => "k=l",
                RhoRhoCase::KGreater => "k>l",
            },
            RelationFamily::SurfaceC { .. } => "surface",
            RelationFamily::RhoBD { case, .. } => match case {
                RhoBCase::Outside => "outside",
                RhoBCase::KEqualsI => "k=i",
                RhoBCase::Between => "i<k<j",
            },
        }
    }

    /// Named indices in a fixed order.
    pub fn indices(&self) -> Vec<(&'static str, usize)> {
        match *self {
            RelationFamily::ArtinA { r, s, i, j, .. } => {
                vec![("r", r), ("s", s), ("i", i), ("j", j)]
            }
            RelationFamily::RhoRhoB { i, j, k, l, .. }
            | RelationFamily::RhoBD { i, j, k, l, .. } => {
                vec![("i", i), ("j", j), ("k", k), ("l", l)]
            }
            RelationFamily::SurfaceC { i } => vec![("i", i)],
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())?;
        for (name, v) in self.indices() {
            write!(f, " {name}={v}")?;
        }
        write!(f, " {}", self.case_name())
    }
}

/// Subset of the four relation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySet {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl FamilySet {
    pub const ALL: FamilySet = FamilySet {
        a: true,
        b: true,
        c: true,
        d: true,
    };

    /// Parses a string of family letters such as `"abcd"` or `"bcd"`.
    pub fn parse(s: &str) -> Option<FamilySet> {
        let mut set = FamilySet {
            a: false,
            b: false,
            c: false,
            d: false,
        };
        if s.is_empty() {
            return None;
        }
        for ch in s.chars() {
            match ch {
                'a' => set.a = true,
                'b' => set.b = true,
                'c' => set.c = true,
                'd' => set.d = true,
                _ => return None,
            }
        }
        Some(set)
    }

    pub fn contains(&self, family: &RelationFamily) -> bool {
        match family.letter() {
            'a' => self.a,
            'b' => self.b,
            'c' => self.c,
            _ => self.d,
        }
    }
}

impl Default for FamilySet {
    fn default() -> Self {
        Self::ALL
    }
}

impl fmt::Display for FamilySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (on, ch) in [(self.a, 'a'), (self.b, 'b'), (self.c, 'c'), (self.d, 'd')] {
            if on {
                write!(f, "{ch}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    alphabet: Alphabet,
    generators: Vec<GeneratorId>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> usize {
        self.alphabet.n()
    }

    pub fn g(&self) -> usize {
        self.alphabet.g()
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Relation counts per family `[a, b, c, d]`.
    pub fn family_counts(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for rel in &self.relations {
            counts[(rel.family.letter() as u8 - b'a') as usize] += 1;
        }
        counts
    }

    /// Rows are relations, columns generators; entry = exponent sum of
    /// `lhs` minus that of `rhs`.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let rows = self
            .relations
            .iter()
            .map(|rel| {
                rel.lhs
                    .exponent_sums()
                    .iter()
                    .zip(rel.rhs.exponent_sums())
                    .map(|(l, r)| BigInt::from(l - r))
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(self.generators.len(), rows).expect("rows have generator length")
    }
}

struct Builder {
    alphabet: Alphabet,
}

impl Builder {
    fn b(&self, i: usize, j: usize) -> GeneratorId {
        self.alphabet.b(i, j).expect("index in range")
    }

    fn rho(&self, k: usize, l: usize) -> GeneratorId {
        self.alphabet.rho(k, l).expect("index in range")
    }

    fn word(&self, letters: Vec<Letter>) -> Word {
        Word::new(self.alphabet, letters)
            .expect("letters over the alphabet")
            .reduce()
    }

    /// `x y x^-1`
    fn conj(&self, x: GeneratorId, y: GeneratorId) -> Word {
        self.word(vec![x.pos(), y.pos(), x.neg()])
    }
}

/// Builds the presentation of `P_n(N_g)` for `n >= 1`, `g >= 2`.
///
/// Conjugation relations keep the conjugating word on the left-hand side.
/// Powers are written out letter by letter. For `n = 1` only the single
/// surface relation `r[1,1]^2 ... r[1,g]^2 = 1` remains.
pub fn build_presentation(n: usize, g: usize) -> Result<Presentation, PresentationError> {
    if n < 1 || g < 2 {
        return Err(PresentationError::InvalidParameters { n, g });
    }
    let alphabet = Alphabet::new(n, g)?;
    let bld = Builder { alphabet };
    let mut relations = Vec::new();

    // (a)
    for r in 1..=n {
        for s in r + 1..=n {
            for i in 1..=n {
                for j in i + 1..=n {
                    let case = if (i < r && s < j) || s < i {
                        ArtinCase::Commuting
                    } else if r < i && i == s && s < j {
                        ArtinCase::SharedMiddle
                    } else if i == r && s < j {
                        ArtinCase::SharedStart
                    } else if r < i && i < s && s < j {
                        ArtinCase::Interleaved
                    } else {
                        continue;
                    };
                    let (bij, brj, bsj) = (bld.b(i, j), bld.b(r, j), bld.b(s, j));
                    let rhs = match case {
                        ArtinCase::Commuting => bld.word(vec![bij.pos()]),
                        ArtinCase::SharedMiddle => {
                            bld.word(vec![bij.neg(), brj.neg(), bij.pos(), brj.pos(), bij.pos()])
                        }
                        ArtinCase::SharedStart => bld.word(vec![bsj.neg(), bij.pos(), bsj.pos()]),
                        ArtinCase::Interleaved => bld.word(vec![
                            bsj.neg(),
                            brj.neg(),
                            bsj.pos(),
                            brj.pos(),
                            bij.pos(),
                            brj.neg(),
                            bsj.neg(),
                            brj.pos(),
                            bsj.pos(),
                        ]),
                    };
                    relations.push(Relation {
                        family: RelationFamily::ArtinA { r, s, i, j, case },
                        lhs: bld.conj(bld.b(r, s), bij),
                        rhs,
                    });
                }
            }
        }
    }

    // (b)
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=g {
                for l in 1..=g {
                    let bij = bld.b(i, j);
                    let (rjk, rjl) = (bld.rho(j, k), bld.rho(j, l));
                    let (case, rhs) = match k.cmp(&l) {
                        std::cmp::Ordering::Less => (RhoRhoCase::KLess, bld.word(vec![rjl.pos()])),
                        std::cmp::Ordering::Equal => (
                            RhoRhoCase::KEqual,
                            bld.word(vec![rjk.neg(), bij.neg(), rjk.pos(), rjk.pos()]),
                        ),
                        std::cmp::Ordering::Greater => (
                            RhoRhoCase::KGreater,
                            bld.word(vec![
                                rjk.neg(),
                                bij.neg(),
                                rjk.pos(),
                                bij.neg(),
                                rjl.pos(),
                                bij.pos(),
                                rjk.neg(),
                                bij.pos(),
                                rjk.pos(),
                            ]),
                        ),
                    };
                    relations.push(Relation {
                        family: RelationFamily::RhoRhoB { i, j, k, l, case },
                        lhs: bld.conj(bld.rho(i, k), rjl),
                        rhs,
                    });
                }
            }
        }
    }

    // (c)
    for i in 1..=n {
        let lhs = (1..=g)
            .flat_map(|l| [bld.rho(i, l).pos(), bld.rho(i, l).pos()])
            .collect();
        let rhs = (1..i)
            .map(|a| bld.b(a, i).pos())
            .chain((i + 1..=n).map(|b| bld.b(i, b).pos()))
            .collect();
        relations.push(Relation {
            family: RelationFamily::SurfaceC { i },
            lhs: bld.word(lhs),
            rhs: bld.word(rhs),
        });
    }

    // (d)
    for i in 1..=n {
        for j in i + 1..=n {
            for k in (1..=n).filter(|&k| k != j) {
                for l in 1..=g {
                    let bij = bld.b(i, j);
                    let rjl = bld.rho(j, l);
                    let (case, rhs) = if k < i || j < k {
                        (RhoBCase::Outside, bld.word(vec![bij.pos()]))
                    } else if k == i {
                        (
                            RhoBCase::KEqualsI,
                            bld.word(vec![rjl.neg(), bij.neg(), rjl.pos()]),
                        )
                    } else {
                        let bkj = bld.b(k, j);
                        (
                            RhoBCase::Between,
                            bld.word(vec![
                                rjl.neg(),
                                bkj.neg(),
                                rjl.pos(),
                                bkj.neg(),
                                bij.pos(),
                                bkj.pos(),
                                rjl.neg(),
                                bkj.pos(),
                                rjl.pos(),
                            ]),
                        )
                    };
                    relations.push(Relation {
                        family: RelationFamily::RhoBD { i, j, k, l, case },
                        lhs: bld.conj(bld.rho(k, l), bij),
                        rhs,
                    });
                }
            }
        }
    }

    Ok(Presentation {
        alphabet,
        generators: alphabet.generators(),
        relations,
    })
}

/// Isomorphism type `Z^free_rank + Z/d_1 + ... + Z/d_k` with `d_1 | ... | d_k`, all `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    #[serde(serialize_with = "crate::report::ser_bigints")]
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Invariant factors of the exponent-sum relation matrix.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let m = p.exponent_matrix();
    let s = snf(&m);
    let factors = s.invariant_factors();
    Abelianization {
        free_rank: p.generators().len() - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// A group given by identity, multiplication, inversion and an equality test.
pub trait GroupStructure {
    type Element: Clone;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn equal(&self, a: &Self::Element, b: &Self::Element) -> bool;

    fn evaluate(&self, word: &Word, eval: &dyn Fn(&GeneratorId) -> Self::Element) -> Self::Element {
        word.letters().iter().fold(self.identity(), |acc, letter| {
            let x = eval(&letter.gen());
            let x = if letter.is_inverse() {
                self.inverse(&x)
            } else {
                x
            };
            self.multiply(&acc, &x)
        })
    }
}

/// The one-element group.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialGroup;

impl GroupStructure for TrivialGroup {
    type Element = ();

    fn identity(&self) {}
    fn multiply(&self, _: &(), _: &()) {}
    fn inverse(&self, _: &()) {}
    fn equal(&self, _: &(), _: &()) -> bool {
        true
    }
}

/// `Z^gens` modulo the integer span of the exponent-sum relation rows.
#[derive(Debug, Clone)]
pub struct ExponentSumQuotient {
    gens: usize,
    lattice: AffineRowSpace,
}

impl ExponentSumQuotient {
    pub fn new(p: &Presentation) -> Self {
        let m = p.exponent_matrix();
        let zeros = vec![BigInt::zero(); m.rows()];
        let lattice = AffineRowSpace::new(&m, &zeros).expect("matching lengths");
        Self {
            gens: m.cols(),
            lattice,
        }
    }

    /// Image of a generator: the corresponding unit vector.
    pub fn generator(&self, p: &Presentation, gen: &GeneratorId) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.gens];
        v[p.alphabet().index_of(gen)] = BigInt::one();
        v
    }
}

impl GroupStructure for ExponentSumQuotient {
    type Element = Vec<BigInt>;

    fn identity(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.gens]
    }

    fn multiply(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inverse(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }

    fn equal(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> bool {
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.lattice
            .implies(&diff, &BigInt::zero())
            .lattice_multiplier
            .is_some_and(|m| m.is_one())
    }
}

/// Relations whose two sides evaluate to different elements.
pub fn check_relations_under<'p, G: GroupStructure>(
    p: &'p Presentation,
    group: &G,
    eval: &dyn Fn(&GeneratorId) -> G::Element,
) -> Vec<&'p Relation> {
    p.relations()
        .iter()
        .filter(|rel| {
            !group.equal(
                &group.evaluate(&rel.lhs, eval),
                &group.evaluate(&rel.rhs, eval),
            )
        })
        .collect()
}

pub const PRESENTATION_FORMAT: &str = "fnsplit-presentation v1";

/// Line-oriented export: header, `n`, `g`, one `gen` line per generator and
/// one `rel lhs = rhs  # family` line per relation.
pub fn to_text(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(PRESENTATION_FORMAT);
    out.push('\n');
    out.push_str(&format!("n {}\ng {}\n", p.n(), p.g()));
    for gen in p.generators() {
        out.push_str(&format!("gen {gen}\n"));
    }
    for rel in p.relations() {
        out.push_str(&format!(
            "rel {} = {}  # {}\n",
            rel.lhs, rel.rhs, rel.family
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub family: char,
    pub case: String,
    pub indices: Vec<(String, usize)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub format: String,
    pub n: usize,
    pub g: usize,
    pub generators: Vec<String>,
    pub relations: Vec<RelationDoc>,
}

/// Structured export mirroring [`to_text`].
pub fn to_document(p: &Presentation) -> PresentationDoc {
    PresentationDoc {
        format: PRESENTATION_FORMAT.to_string(),
        n: p.n(),
        g: p.g(),
        generators: p.generators().iter().map(ToString::to_string).collect(),
        relations: p
            .relations()
            .iter()
            .map(|rel| RelationDoc {
                family: rel.family.letter(),
                case: rel.family.case_name().to_string(),
                indices: rel
                    .family
                    .indices()
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
                lhs: rel.lhs.to_string(),
                rhs: rel.rhs.to_string(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_single_surface_relation() {
        let p = build_presentation(1, 3).unwrap();
        assert_eq!(p.generators().len(), 3);
        assert_eq!(p.relations().len(), 1);
        let rel = &p.relations()[0];
        assert_eq!(rel.family, RelationFamily::SurfaceC { i: 1 });
        assert_eq!(
            rel.lhs.to_string(),
            "r[1,1] r[1,1] r[1,2] r[1,2] r[1,3] r[1,3]"
        );
        assert!(rel.rhs.is_empty());
    }

    #[test]
    fn n2_g3_counts() {
        // (a): no pair of distinct B's; (b): 1*3*3; (c): 2; (d): 1*1*3
        let p = build_presentation(2, 3).unwrap();
        assert_eq!(p.generators().len(), 7);
        assert_eq!(p.relations().len(), 14);
        assert_eq!(p.family_counts(), [0, 9, 2, 3]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            build_presentation(0, 3),
            Err(PresentationError::InvalidParameters { .. })
        ));
        assert!(build_presentation(2, 1).is_err());
    }

    #[test]
    fn relations_are_reduced() {
        let p = build_presentation(4, 3).unwrap();
        for rel in p.relations() {
            assert!(
                rel.lhs.is_reduced() && rel.rhs.is_reduced(),
                "{}",
                rel.family
            );
        }
    }

    #[test]
    fn transcribed_conjugations() {
        let p = build_presentation(3, 2).unwrap();
        let find = |fam: RelationFamily| {
            p.relations()
                .iter()
                .find(|r| r.family == fam)
                .unwrap()
                .clone()
        };
        let rel = find(RelationFamily::RhoRhoB {
            i: 1,
            j: 2,
            k: 1,
            l: 1,
            case: RhoRhoCase::KEqual,
        });
        assert_eq!(rel.lhs.to_string(), "r[1,1] r[2,1] r[1,1]^-1");
        assert_eq!(rel.rhs.to_string(), "r[2,1]^-1 B[1,2]^-1 r[2,1] r[2,1]");
        let rel = find(RelationFamily::RhoBD {
            i: 1,
            j: 3,
            k: 2,
            l: 2,
            case: RhoBCase::Between,
        });
        assert_eq!(rel.lhs.to_string(), "r[2,2] B[1,3] r[2,2]^-1");
        assert_eq!(
            rel.rhs.to_string(),
            "r[3,2]^-1 B[2,3]^-1 r[3,2] B[2,3]^-1 B[1,3] B[2,3] r[3,2]^-1 B[2,3] r[3,2]"
        );
        let rel = find(RelationFamily::SurfaceC { i: 2 });
        assert_eq!(rel.rhs.to_string(), "B[1,2] B[2,3]");
        let rel = find(RelationFamily::ArtinA {
            r: 1,
            s: 2,
            i: 2,
            j: 3,
            case: ArtinCase::SharedMiddle,
        });
        assert_eq!(
            rel.rhs.to_string(),
            "B[2,3]^-1 B[1,3]^-1 B[2,3] B[1,3] B[2,3]"
        );
    }

    #[test]
    fn abelianization_n1() {
        let ab = abelianization(&build_presentation(1, 3).unwrap());
        assert_eq!(
            ab,
            Abelianization {
                free_rank: 2,
                torsion: vec![BigInt::from(2)]
            }
        );
        assert_eq!(ab.to_string(), "Z^2 + Z/2");
    }

    #[test]
    fn trivial_group_satisfies_everything() {
        let p = build_presentation(3, 3).unwrap();
        assert!(check_relations_under(&p, &TrivialGroup, &|_| ()).is_empty());
    }

    #[test]
    fn family_set_parse() {
        assert_eq!(FamilySet::parse("abcd"), Some(FamilySet::ALL));
        let bcd = FamilySet::parse("dcb").unwrap();
        assert!(!bcd.a && bcd.b && bcd.c && bcd.d);
        assert_eq!(bcd.to_string(), "bcd");
        assert_eq!(FamilySet::parse("abx"), None);
        assert_eq!(FamilySet::parse(""), None);
    }

    #[test]
    fn text_export_header_and_lines() {
        let p = build_presentation(2, 2).unwrap();
        let text = to_text(&p);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], PRESENTATION_FORMAT);
        assert_eq!(lines[1], "n 2");
        assert_eq!(lines.iter().filter(|l| l.starts_with("gen ")).count(), 5);
        assert_eq!(
            lines.iter().filter(|l| l.starts_with("rel ")).count(),
            p.relations().len()
        );
        assert!(lines.contains(&"rel r[1,1] r[1,1] r[1,2] r[1,2] = B[1,2]  # c i=1 surface"));
    }
}
