use nomsig_core::surface::{parse_signature, parse_sort, parse_term};
use nomsig_core::syntax::{Atom, DataSort, Sort, Term};
use proptest::prelude::*;

const SIG: &str = "
sort S;
sort R(_:S);
op k : S;
op g(_:S) : S;
op f(_:S, _:S) : S;
op lift(X:[x:S] S, Y:S) : R(X[Y]) / x # Y;
op pair(A:S, B:[y:S] R(A)) : R(g(A));
";

#[test]
fn signature_round_trip() {
    let sig = parse_signature(SIG).unwrap();
    let printed = sig.to_string();
    let again = parse_signature(&printed).unwrap();
    assert_eq!(sig, again);
    assert_eq!(printed, again.to_string());
}

fn atom() -> impl Strategy<Value = Atom> {
    (prop::sample::select(vec!["a", "b", "c"]), 0u32..3).prop_map(|(n, i)| Atom::indexed(n, i))
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![atom().prop_map(Term::Atom), Just(Term::constant("k"))];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("g", vec![t])),
            (inner.clone(), inner.clone()).prop_map(|(t, u)| Term::app("f", vec![t, u])),
            (atom(), inner.clone()).prop_map(|(a, t)| Term::abs(a, DataSort::constant("S"), t)),
            (atom(), inner.clone(), inner).prop_map(|(a, s, t)| Term::abs(
                a,
                DataSort::new("R", vec![s]),
                t
            )),
        ]
    })
}

proptest! {
    #[test]
    fn term_round_trip(t in term()) {
        let sig = parse_signature(SIG).unwrap();
        let back = parse_term(&t.to_string(), &sig).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn sort_round_trip(t in term(), a in atom()) {
        let sig = parse_signature(SIG).unwrap();
        let s = Sort::abs(a, DataSort::constant("S"), Sort::data("R", vec![t]));
        prop_assert_eq!(parse_sort(&s.to_string(), &sig).unwrap(), s);
    }
}

#[test]
fn errors_carry_positions() {
    let err = parse_signature("sort S;\nop f(_:S) : S\nop g : S;").unwrap_err();
    assert_eq!(err.line, 3);
    let err = parse_signature("sort S;\nop f(_:T) : S;").unwrap_err();
    assert_eq!((err.line, err.col), (2, 8));
}

#[test]
fn unchecked_terms() {
    use nomsig_core::surface::parse_term_unchecked;
    let t = parse_term_unchecked("[a:Term] f(a, k(), b)").unwrap();
    assert_eq!(t.to_string(), "[a:Term] f(a,k,b)");
    assert!(parse_term_unchecked("f(a").is_err());
    assert!(parse_term_unchecked("X[a]").is_ok());
}
