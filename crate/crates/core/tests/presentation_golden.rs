use fnsplit_core::presentation::{
    abelianization, build_presentation, check_relations_under, to_document, to_text,
    Abelianization, ExponentSumQuotient, GroupStructure, TrivialGroup, PRESENTATION_FORMAT,
};
use num_bigint::BigInt;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn relation_counts_match_closed_forms() {
    for n in 1..=5 {
        for g in 2..=5 {
            let p = build_presentation(n, g).unwrap();
            // (a): two commuting orders of four indices, the interleaved one, and two shared-index cases
            let expected = [
                3 * binom(n, 4) + 2 * binom(n, 3),
                binom(n, 2) * g * g,
                n,
                binom(n, 2) * (n - 1) * g,
            ];
            assert_eq!(p.family_counts(), expected, "n = {n}, g = {g}");
            assert_eq!(p.generators().len(), n * (n - 1) / 2 + n * g);
        }
    }
}

#[test]
fn two_strands_genus_three_counts() {
    let p = build_presentation(2, 3).unwrap();
    assert_eq!(p.generators().len(), 7);
    assert_eq!(p.relations().len(), 14);
    assert_eq!(p.family_counts(), [0, 9, 2, 3]);
}

#[test]
fn words_use_listed_generators_and_are_reduced() {
    let p = build_presentation(4, 3).unwrap();
    for rel in p.relations() {
        for w in [&rel.lhs, &rel.rhs] {
            assert!(w.is_reduced());
            assert!(w
                .letters()
                .iter()
                .all(|l| p.generators().contains(&l.gen())));
        }
    }
}

#[test]
fn construction_is_deterministic() {
    let a = build_presentation(3, 4).unwrap();
    let b = build_presentation(3, 4).unwrap();
    assert_eq!(a.relations(), b.relations());
    assert_eq!(to_text(&a), to_text(&b));
}

#[test]
fn rejects_out_of_range() {
    assert!(build_presentation(0, 3).is_err());
    assert!(build_presentation(3, 1).is_err());
}

#[test]
fn abelianization_single_strand() {
    for g in 2..=6 {
        let ab = abelianization(&build_presentation(1, g).unwrap());
        assert_eq!(
            ab,
            Abelianization {
                free_rank: g - 1,
                torsion: vec![BigInt::from(2)]
            }
        );
    }
}

#[test]
fn abelianization_two_strands_genus_three() {
    // frozen from an independent SNF of the 14 x 7 exponent matrix
    let ab = abelianization(&build_presentation(2, 3).unwrap());
    assert_eq!(
        ab,
        Abelianization {
            free_rank: 4,
            torsion: vec![BigInt::from(2), BigInt::from(2)]
        }
    );
    assert_eq!(ab.to_string(), "Z^4 + Z/2 + Z/2");
}

#[test]
fn relations_hold_in_quotients() {
    for (n, g) in [(1, 3), (2, 3), (3, 2), (3, 4)] {
        let p = build_presentation(n, g).unwrap();
        assert!(check_relations_under(&p, &TrivialGroup, &|_| ()).is_empty());
        let q = ExponentSumQuotient::new(&p);
        assert!(check_relations_under(&p, &q, &|gen| q.generator(&p, gen)).is_empty());
    }
}

#[test]
fn quotient_detects_a_nontrivial_element() {
    // r[1,1] has infinite order in the abelianization of P_1(N_3)
    let p = build_presentation(1, 3).unwrap();
    let q = ExponentSumQuotient::new(&p);
    let x = q.generator(&p, &p.generators()[0]);
    assert!(!q.equal(&x, &q.identity()));
    let sq = q.multiply(&x, &x);
    let all: Vec<BigInt> = vec![BigInt::from(2); 3];
    assert!(!q.equal(&sq, &q.identity()));
    assert!(q.equal(&all, &q.identity()));
}

#[test]
fn exports_share_a_versioned_header() {
    let p = build_presentation(2, 3).unwrap();
    let text = to_text(&p);
    assert!(text.starts_with(PRESENTATION_FORMAT));
    let doc = to_document(&p);
    assert_eq!(doc.format, PRESENTATION_FORMAT);
    assert_eq!(doc.relations.len(), 14);
    let json = serde_json::to_string(&doc).unwrap();
    let back: fnsplit_core::presentation::PresentationDoc = serde_json::from_str(&json).unwrap();
    assert_eq!(back, doc);
    let one = to_text(&build_presentation(1, 3).unwrap());
    assert!(one.contains("rel r[1,1] r[1,1] r[1,2] r[1,2] r[1,3] r[1,3] = 1  # c i=1 surface"));
}
