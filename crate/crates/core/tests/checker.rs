use nomsig_core::check::replay;
use nomsig_core::surface::{parse_context, parse_signature, parse_sort, parse_term};
use nomsig_core::syntax::Telescope;
use nomsig_core::{alpha_eq, check_signature, check_signature_report, CheckedSignature};

const FOL: &str = "
sort Term; sort Form; sort D(_:Form);
op zero : Term;
op succ(_:Term) : Term;
op eq(_:Term, _:Term) : Form;
op bot : Form;
op imp(_:Form, _:Form) : Form;
op forall(_:[x:Term] Form) : Form;
op rho(T:Term) : D(eq(T,T));
op imp_i(P:Form, Q:Form, _:[h:D(P)] D(Q)) : D(imp(P,Q)) / h # Q;
op forall_i(P:[y:Term] Form, _:[x:Term] D(P[x])) : D(forall(P)) / x # P;
op forall_e(P:[y:Term] Form, T:Term, _:D(forall(P))) : D(P[T]);
";

fn fol() -> CheckedSignature {
    check_signature(&parse_signature(FOL).unwrap()).unwrap()
}

fn infer(sig: &CheckedSignature, ctx: &str, t: &str) -> Result<String, String> {
    let gamma = parse_context(ctx, sig.signature()).unwrap();
    let t = parse_term(t, sig.signature()).unwrap();
    sig.infer_sort(&Telescope::empty(), &gamma, &t)
        .map(|s| s.to_string())
        .map_err(|e| e.class().to_string())
}

#[test]
fn implication_witness() {
    let sig = fol();
    let s = infer(&sig, "", "imp_i(bot, bot, [h:D(bot)] h)").unwrap();
    let expected = parse_sort("D(imp(bot,bot))", sig.signature()).unwrap();
    let got = parse_sort(&s, sig.signature()).unwrap();
    assert!(alpha_eq(&got, &expected).unwrap());
}

#[test]
fn concretion_in_result_sort() {
    let sig = fol();
    let s = infer(
        &sig,
        "a:Term",
        "forall_e([y:Term] eq(y,y), succ(a), forall_i([y:Term] eq(y,y), [x:Term] rho(x)))",
    )
    .unwrap();
    assert_eq!(s, "D(eq(succ(a),succ(a)))");
}

#[test]
fn error_classes() {
    let sig = fol();
    let cases = [
        ("", "imp_i(bot)", "arity-mismatch"),
        ("", "imp(zero, bot)", "sort-mismatch"),
        ("", "succ(a)", "unbound-atom"),
        (
            "x:Term",
            "forall_i([y:Term] eq(y,x), [x:Term] rho(x))",
            "sort-mismatch",
        ),
        ("", "imp_i(bot, bot, [h:D(bot)] zero)", "sort-mismatch"),
    ];
    for (ctx, t, class) in cases {
        assert_eq!(infer(&sig, ctx, t), Err(class.to_string()), "{t}");
    }
}

#[test]
fn signature_errors() {
    let bad = [
        ("sort S; sort S;", "duplicate-declaration"),
        ("sort S; op f(X:S, X:S) : S;", "duplicate-parameter"),
        (
            "sort S; op f(X:S) : S / a # X;",
            "ill-formed-freshness-context",
        ),
        (
            "sort S; sort P(_:S); op g(X:S, Z:S) : P(X[Z]);",
            "not-an-abstraction",
        ),
        ("sort S; op k : S; op f : S(k);", "arity-mismatch"),
    ];
    for (text, class) in bad {
        let sig = parse_signature(text).unwrap();
        let report = check_signature_report(&sig);
        let classes: Vec<_> = report
            .results
            .iter()
            .filter_map(|(_, r)| r.as_ref().err().map(|e| e.class()))
            .collect();
        assert_eq!(classes, vec![class], "{text}");
    }
}

#[test]
fn derivations_replay() {
    let sig = fol();
    let gamma = parse_context("a:Term", sig.signature()).unwrap();
    for t in [
        "imp_i(bot, bot, [h:D(bot)] h)",
        "forall_i([y:Term] eq(y,y), [x:Term] rho(x))",
        "forall_e([y:Term] eq(y,y), succ(a), forall_i([y:Term] eq(y,y), [x:Term] rho(x)))",
        "[b:Term] eq(a,b)",
    ] {
        let t = parse_term(t, sig.signature()).unwrap();
        let (_, d) = sig.derive_sort(&gamma, &t).unwrap();
        assert!(replay(&sig, &d).unwrap() >= 1);
    }
}

#[test]
fn tampered_derivation_is_rejected() {
    let sig = fol();
    let t = parse_term("imp_i(bot, bot, [h:D(bot)] h)", sig.signature()).unwrap();
    let (_, mut d) = sig.derive_sort(&Default::default(), &t).unwrap();
    d.conclusion = d
        .conclusion
        .replace("imp(bot,bot)", "imp(bot,imp(bot,bot))");
    assert!(replay(&sig, &d).is_err());
    let (_, mut d) = sig.derive_sort(&Default::default(), &t).unwrap();
    d.rule = "var1".into();
    assert!(replay(&sig, &d).is_err());
}
