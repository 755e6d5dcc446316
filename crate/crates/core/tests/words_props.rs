use fnsplit_core::words::{Alphabet, Letter, Word};
use proptest::prelude::*;

// seven generators: B[1,2], r[1,1..3], r[2,1..3]
fn alphabet() -> Alphabet {
    Alphabet::new(2, 3).unwrap()
}

fn letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    let gens = alphabet().generators();
    prop::collection::vec((0..gens.len(), any::<bool>()), 0..=max_len).prop_map(move |v| {
        v.into_iter()
            .map(|(i, inv)| if inv { gens[i].neg() } else { gens[i].pos() })
            .collect()
    })
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    letters(max_len).prop_map(|l| Word::new(alphabet(), l).unwrap())
}

/// Deletes the first cancelling pair until none is left.
fn naive_reduce(mut v: Vec<Letter>) -> Vec<Letter> {
    while let Some(p) = (0..v.len().saturating_sub(1))
        .find(|&i| v[i].gen() == v[i + 1].gen() && v[i].is_inverse() != v[i + 1].is_inverse())
    {
        v.drain(p..p + 2);
    }
    v
}

fn raw_concat(u: &Word, v: &Word) -> Word {
    Word::new(
        alphabet(),
        u.letters().iter().chain(v.letters()).copied().collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_matches_naive_cancellation(w in word(40)) {
        prop_assert_eq!(w.reduce().letters().to_vec(), naive_reduce(w.letters().to_vec()));
    }

    #[test]
    fn reduce_is_idempotent_and_shortening(w in word(40)) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.reduce().letters().to_vec(), r.letters().to_vec());
    }

    #[test]
    fn word_times_inverse_is_empty(w in word(40)) {
        prop_assert!(w.concat(&w.invert()).unwrap().is_empty());
        prop_assert!(naive_reduce(raw_concat(&w, &w.invert()).letters().to_vec()).is_empty());
    }

    #[test]
    fn invert_is_an_involution(w in word(40)) {
        prop_assert_eq!(w.invert().invert().letters().to_vec(), w.letters().to_vec());
    }

    #[test]
    fn concat_is_associative(u in word(15), v in word(15), w in word(15)) {
        let left = u.concat(&v).unwrap().concat(&w).unwrap();
        let right = u.concat(&v.concat(&w).unwrap()).unwrap();
        prop_assert_eq!(left.letters().to_vec(), right.letters().to_vec());
        let oracle = naive_reduce(raw_concat(&raw_concat(&u, &v), &w).letters().to_vec());
        prop_assert_eq!(left.letters().to_vec(), oracle);
    }

    #[test]
    fn concat_with_empty_reduces(w in word(30)) {
        let e = Word::empty(alphabet());
        prop_assert_eq!(w.concat(&e).unwrap().letters().to_vec(), w.reduce().letters().to_vec());
    }

    #[test]
    fn text_roundtrip(w in word(30)) {
        let back = Word::parse(alphabet(), &w.to_string()).unwrap();
        prop_assert_eq!(back.letters().to_vec(), w.letters().to_vec());
    }
}

#[test]
fn fixed_examples() {
    let a = alphabet();
    let x = a.rho(1, 2).unwrap();
    let y = a.b(1, 2).unwrap();
    assert!(Word::new(a, vec![x.pos(), x.neg()])
        .unwrap()
        .reduce()
        .is_empty());
    assert!(Word::empty(a).reduce().is_empty());
    let w = Word::new(a, vec![x.pos(), y.neg()]).unwrap();
    assert_eq!(w.invert().letters(), &[y.pos(), x.neg()]);
    assert!(Word::empty(a).invert().is_empty());
    assert_eq!(w.to_string(), "r[1,2] B[1,2]^-1");
}

#[test]
fn alphabet_mismatch_and_bad_tokens() {
    let a = alphabet();
    let other = Alphabet::new(3, 3).unwrap();
    assert!(Word::empty(a).concat(&Word::empty(other)).is_err());
    assert!(Word::parse(a, "B[1,3]").is_err());
    assert!(Word::parse(a, "r[1,4]").is_err());
    assert!(Word::parse(a, "B[2,1]").is_err());
    assert!(Word::parse(a, "x[1,1]").is_err());
    assert!(Word::parse(a, "1").unwrap().is_empty());
}
