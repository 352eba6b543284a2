//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance`. Criteria run concurrently and
//! print in order. The process fails if any criterion is red, except a
//! criterion listed in `KNOWN_RED` whose failure matches the recorded
//! counterexample exactly.

use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::{json, Value};

use cstar_semigroup::quantum::rep;
use cstar_semigroup::report::Report;
use cstar_semigroup::suites::{
    coideal_check, descent_check, fourier_check, grading_check, grouplike_check, haar_check,
    inclusion_exclusion_23, inverse_check, norm_test_symbols, norms_check, shift37_check,
    symbol_check, weakhopf_check, Budget,
};
use cstar_semigroup::NumericalSemigroup;

const KNOWN_RED: &[u32] = &[9];

struct Verdict {
    pass: bool,
    detail: String,
    /// For a red criterion: whether the failure is the analysed one.
    as_analysed: bool,
}

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::build(gens).expect("valid generators")
}

fn corpus() -> [NumericalSemigroup; 3] {
    [sg(&[1]), sg(&[2, 3]), sg(&[3, 5])]
}

fn all_pass(reports: &[Report]) -> Verdict {
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {}", r.claim, r.parameters["generators"]))
        .collect();
    Verdict {
        pass: failing.is_empty(),
        detail: if failing.is_empty() {
            format!("{} reports", reports.len())
        } else {
            format!("failing: {}", failing.join("; "))
        },
        as_analysed: false,
    }
}

fn per_semigroup(f: impl Fn(&NumericalSemigroup) -> Report) -> Verdict {
    all_pass(&corpus().iter().map(f).collect::<Vec<_>>())
}

fn c1() -> Verdict {
    let budget = Budget { words: 1000, ..Budget::default() };
    per_semigroup(|s| inverse_check(s, &budget).unwrap())
}

fn c2() -> Verdict {
    let budget = Budget { elements: 500, ..Budget::default() };
    per_semigroup(|s| grading_check(s, &budget).unwrap())
}

fn c3() -> Verdict {
    let budget = Budget { elements: 500, ..Budget::default() };
    per_semigroup(|s| symbol_check(s, &budget).unwrap())
}

fn c4() -> Verdict {
    let budget = Budget { elements: 500, ..Budget::default() };
    let mut reports = Vec::new();
    for s in corpus() {
        reports.push(weakhopf_check(&s, &budget).unwrap());
        reports.push(coideal_check(&s, 4).unwrap());
    }
    all_pass(&reports)
}

fn c5() -> Verdict {
    let budget = Budget { functionals: 200, ..Budget::default() };
    per_semigroup(|s| haar_check(s, &budget).unwrap())
}

fn c6() -> Verdict {
    let r = grouplike_check(&sg(&[2, 3]), 4, 3).unwrap();
    let mut v = all_pass(std::slice::from_ref(&r));
    v.detail = format!("found {} among {} elements", r.computed["found"], r.computed["elements_searched"]);
    v
}

fn c7() -> Verdict {
    let r = shift37_check();
    let mut v = all_pass(std::slice::from_ref(&r));
    v.detail = format!(
        "printed order fails at {}; tensor witness {}",
        r.computed["printed_order_failure"]["member"],
        r.witness.as_ref().map_or(Value::Null, |w| w["pair"].clone())
    );
    v
}

fn morphism(from: &str, to: &str, m: i64) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_sg"))
        .args(["morphism", "--from", from, "--to", to, "--mult", &m.to_string(), "--max-len", "6"])
        .output()
        .expect("sg runs");
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), doc)
}

fn c8() -> Verdict {
    let mut missing = Vec::new();
    for m in 1..=6 {
        let (code, doc) = morphism("2,3", "1", m);
        if code != 1 || doc["witness"].is_null() {
            missing.push(m);
        }
    }
    let (code, doc) = morphism("1", "1", 1);
    let identity_clean = code == 0 && doc["witness"].is_null();
    // The zero multiplier is a genuine (trivial) morphism.
    let (zero_code, _) = morphism("2,3", "1", 0);
    Verdict {
        pass: missing.is_empty() && identity_clean,
        detail: format!(
            "m=1..6 without witness: {missing:?}; identity consistent: {identity_clean}; m=0 consistent: {}",
            zero_code == 0
        ),
        as_analysed: false,
    }
}

fn c9() -> Verdict {
    let window = 16;
    let x = inclusion_exclusion_23();
    let ie = descent_check(&sg(&[2, 3]), 4, 0, window).unwrap();
    let ie_ok = rep(&x).is_zero() && ie.iter().all(|r| r.pass);
    let naturals = descent_check(&sg(&[1]), 6, 4, window).unwrap();
    let by_claim = |claim: &str| naturals.iter().find(|r| r.claim == claim).expect("report present");
    let injective = by_claim("rep is injective on monomial combinations").pass;
    let zero = by_claim("corner diagram commutes at a = 0").pass;
    let positive = by_claim("corner diagram commutes for a > 0").pass;
    let negative = by_claim("corner diagram commutes for a < 0");
    // Recorded counterexample: x = T_1 T_1*, a = -1, pair (1, 0); the
    // tensor side is empty while P_{-1} x e_1 = e_1.
    let witness = negative.witness.clone().unwrap_or(Value::Null);
    let recorded = witness["a"] == json!(-1)
        && witness["pair"] == json!([1, 0])
        && witness["tensor_side"] == json!([])
        && witness["operator_side"] == json!([[1, "1"]]);
    Verdict {
        pass: ie_ok && injective && zero && positive && negative.pass,
        detail: format!(
            "inclusion-exclusion witness: {ie_ok}; injective on ℤ₊: {injective}; corner a=0: {zero}; a>0: {positive}; a<0: {} (witness {})",
            negative.pass, witness
        ),
        as_analysed: ie_ok && injective && zero && positive && !negative.pass && recorded,
    }
}

fn c10() -> Verdict {
    let dims = [64, 128, 256, 512];
    let symbols = norm_test_symbols();
    let mut reports = vec![
        norms_check(&sg(&[1]), &symbols, &dims).unwrap(),
        norms_check(&sg(&[2, 3]), &symbols, &dims).unwrap(),
    ];
    let budget = Budget { elements: 500, ..Budget::default() };
    reports.extend(corpus().iter().map(|s| fourier_check(s, &budget).unwrap()));
    all_pass(&reports)
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Verdict); 10] = [
        (1, "inverse-semigroup laws", c1),
        (2, "grading and faithfulness", c2),
        (3, "symbol, ideal and stabilisation", c3),
        (4, "weak Hopf axioms and coideal", c4),
        (5, "Haar state and convolution", c5),
        (6, "group-like rigidity over <2,3>", c6),
        (7, "successor map over <2,3>", c7),
        (8, "morphism obstructions from <2,3> to N", c8),
        (9, "descent and corner diagram", c9),
        (10, "truncated norms, Fourier projection, gauge action", c10),
    ];
    let start = Instant::now();
    let verdicts: Vec<Verdict> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria.iter().map(|(_, _, f)| scope.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut ok = true;
    for ((id, title, _), v) in criteria.iter().zip(&verdicts) {
        let tag = if v.pass { "PASS" } else { "FAIL" };
        let known = !v.pass && KNOWN_RED.contains(id) && v.as_analysed;
        let suffix = if known { " [known red, counterexample as recorded]" } else { "" };
        println!("{tag} {id:>2} {title}: {}{suffix}", v.detail);
        ok &= v.pass || known;
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
