mod common;

use proptest::prelude::*;
use taxisect::script::{execute, parse, run, ErrorKind, Span, Value};
use taxisect_core::{Point, Rational};

#[test]
fn corpus_is_large_enough_and_passes() {
    let corpus = common::corpus();
    assert!(corpus.len() >= 10, "only {} scripts", corpus.len());
    for (name, src) in &corpus {
        let ex = run(src).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(ex.passed(), "{name}: {:?}", ex.failures);
        assert!(ex.assertions > 0, "{name} asserts nothing");
    }
}

#[test]
fn pretty_print_round_trips() {
    for (name, src) in common::corpus() {
        let parsed = parse(&src).unwrap();
        let printed = parsed.to_string();
        let reparsed = parse(&printed).unwrap_or_else(|e| panic!("{name}: {e}\n{printed}"));
        assert_eq!(reparsed.without_spans(), parsed.without_spans(), "{name}");
        assert_eq!(reparsed.to_string(), printed, "{name}: printing is not a fixed point");
    }
}

#[test]
fn execution_is_deterministic() {
    for (name, src) in common::corpus() {
        let script = parse(&src).unwrap();
        assert_eq!(execute(&script).unwrap(), execute(&script).unwrap(), "{name}");
    }
}

#[test]
fn worked_examples() {
    let ex = run("A = point(0,0)\nB = point(3,3)\nC = nsect(A,B,3)\nassert_eq tdist(A,C) 2").unwrap();
    assert!(ex.failures.is_empty());

    let ex = run("assert_eq measure((0,0), (1,0), (1,1)) 1").unwrap();
    assert!(ex.failures.is_empty());

    let ex = run("assert_eq tdist((0,0),(2,2)) 5").unwrap();
    assert_eq!(ex.failures.len(), 1);
    assert_eq!(ex.failures[0].expected, Value::Rational(5.into()));
    assert_eq!(ex.failures[0].actual, Value::Rational(4.into()));

    let ex = run("A = (0, 0)\nB = (2, 1)\nC = nsect(A, B, 4)").unwrap();
    assert_eq!(ex.env.get("C"), Some(&Value::Point(Point::new(Rational::frac(1, 2), Rational::frac(1, 4)))));
}

#[test]
fn crlf_sources_behave_like_lf() {
    for (name, src) in common::corpus() {
        let crlf = src.replace('\n', "\r\n");
        assert_eq!(run(&crlf).unwrap(), run(&src).unwrap(), "{name}");
    }
}

const GOOD: [&str; 6] = [
    "p{} = (1, 2)",
    "c{} = circle((0, 0), 3)",
    "r{} = tdist((0, 0), (1/2, -3))",
    "s{} = segment((0, 0), (4, 1))",
    "n{} = nsect((0, 0), (4, 1), 3)",
    "assert_eq measure((0, 0), (1, 0), (0, 1)) 2",
];

const BAD: [(&str, ErrorKind); 9] = [
    ("x = tdist((0, 0), q)", ErrorKind::Unbound),
    ("x = tdist((0, 0), 3)", ErrorKind::Type),
    ("x = 7/0", ErrorKind::Domain),
    ("x = nsect((1, 1), (1, 1), 3)", ErrorKind::Domain),
    ("x = circle((0, 0), -1)", ErrorKind::Domain),
    ("x = section((0, 0), (1, 0), (2, 0), 2)", ErrorKind::Domain),
    ("x = intersect(circle((0, 0), 1), circle((1, 0), 1))", ErrorKind::Type),
    ("x = vertex(circle((0, 0), 1), \"NE\")", ErrorKind::Domain),
    ("assert_eq (1, 1) 1", ErrorKind::Type),
];

proptest! {
    /// Wherever the bad statement sits, the error points into it.
    #[test]
    fn runtime_errors_are_located(good in prop::collection::vec(0..GOOD.len(), 0..8), bad in 0..BAD.len(), indent in 0usize..4, blank in any::<bool>()) {
        let mut lines: Vec<String> = good.iter().enumerate().map(|(i, &g)| GOOD[g].replace("{}", &i.to_string())).collect();
        if blank {
            lines.push("# a comment".into());
        }
        let (stmt, kind) = BAD[bad];
        let bad_line = format!("{}{stmt}", " ".repeat(indent));
        lines.push(bad_line.clone());
        lines.push("after = (0, 0)".into());
        let src = lines.join("\n");
        let err = run(&src).unwrap_err();
        prop_assert_eq!(err.kind, kind);
        let Span { line, col } = err.span;
        prop_assert_eq!(line, lines.len() - 1);
        prop_assert!(col > indent && col <= bad_line.len(), "col {} outside {:?}", col, bad_line);
    }

    /// Rationals written as p/q or as decimals evaluate exactly.
    #[test]
    fn literals_are_exact(n in -10_000i64..10_000, d in 1i64..10_000, k in 0u32..5) {
        let ex = run(&format!("x = {n}/{d}")).unwrap();
        prop_assert_eq!(ex.env.get("x"), Some(&Value::Rational(Rational::frac(n, d))));
        let scale = 10i64.pow(k);
        let text = format!("{}{}.{:0width$}", if n < 0 { "-" } else { "" }, n.abs() / scale, n.abs() % scale, width = k as usize);
        let text = if k == 0 { format!("{n}") } else { text };
        let ex = run(&format!("y = {text}")).unwrap();
        prop_assert_eq!(ex.env.get("y"), Some(&Value::Rational(Rational::frac(n, scale))));
    }
}
