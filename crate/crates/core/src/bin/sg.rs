use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use cstar_semigroup::dual::convolve;
use cstar_semigroup::expr::{parse_free, parse_functional};
use cstar_semigroup::morphism::quantum_morphism_falsify;
use cstar_semigroup::numeric::{laurent_sup_norm, operator_norm, truncate, DEFAULT_TOLERANCE};
use cstar_semigroup::quantum::{coproduct, group_like_detect, rep};
use cstar_semigroup::report::{free_json, laurent_json, operator_json, tensor_json, SCHEMA_VERSION};
use cstar_semigroup::suites::{run_suite, Budget, SUITES};
use cstar_semigroup::{Error, FreeElement, NumericalSemigroup, OperatorElement, Scalar};

#[derive(Parser)]
#[command(name = "sg", version, about = "Semigroup C*-algebras of numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Gens {
    /// Comma-separated generators; `1` is the natural numbers.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    gens: Vec<i64>,
}

#[derive(Args)]
struct WithExpr {
    #[command(flatten)]
    gens: Gens,
    #[arg(long)]
    expr: String,
}

#[derive(Subcommand)]
enum Command {
    /// Gaps, Frobenius number and order type.
    Info(Gens),
    /// Canonical operator form and images of the first basis vectors.
    Eval {
        #[command(flatten)]
        input: WithExpr,
        #[arg(long, default_value_t = 8)]
        basis: usize,
    },
    /// Symbol as a Laurent polynomial.
    Symbol(WithExpr),
    /// Toeplitz lift of the symbol plus an ideal part.
    Split(WithExpr),
    /// Norm of the N×N truncation against the sup norm of the symbol.
    Norm {
        #[command(flatten)]
        input: WithExpr,
        #[arg(long)]
        dim: usize,
    },
    /// Coproduct of a free element, optionally applied to basis pairs.
    Coproduct {
        #[command(flatten)]
        input: WithExpr,
        #[arg(long)]
        pairs: Option<usize>,
    },
    /// Whether a free element is a group-like isometry.
    Grouplike(WithExpr),
    /// Haar state of a free element.
    Haar(WithExpr),
    /// Convolution of two functionals evaluated on a free element.
    Convolve {
        #[command(flatten)]
        input: WithExpr,
        #[arg(long, num_args = 1, required = true)]
        functional: Vec<String>,
    },
    /// Search for an obstruction to `T_a ↦ T_{m·a}`.
    Morphism {
        #[arg(long, value_delimiter = ',', required = true)]
        from: Vec<i64>,
        #[arg(long, value_delimiter = ',', required = true)]
        to: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        mult: i64,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Run a property suite.
    Check {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_parser = suite_names())]
        suite: String,
        #[arg(long, default_value_t = Budget::default().seed)]
        seed: u64,
    },
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

enum Outcome {
    Pass(Value),
    Fail(Value),
}

fn document(command: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    Value::Object(map)
}

fn scalar_value(v: &Scalar) -> Value {
    match v {
        Scalar::Exact(q) => json!({"exact": q.to_string()}),
        Scalar::Approx(z) => json!({"approx": [z.re, z.im]}),
    }
}

fn setup(input: &WithExpr) -> Result<(NumericalSemigroup, FreeElement), Error> {
    let s = NumericalSemigroup::build(&input.gens.gens)?;
    let x = parse_free(&input.expr, &s)?;
    Ok((s, x))
}

fn basis_images(a: &OperatorElement, s: &NumericalSemigroup, n: usize) -> Result<Value, Error> {
    (0..n)
        .map(|i| {
            let d = s.element_at(i);
            let image: Vec<Value> = a.apply(d)?.iter().map(|(t, c)| json!([t, c.to_string()])).collect();
            Ok(json!({"member": d, "image": image}))
        })
        .collect::<Result<Vec<_>, Error>>()
        .map(Value::Array)
}

fn run(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Info(g) => {
            let s = NumericalSemigroup::build(&g.gens)?;
            Outcome::Pass(document(
                "info",
                json!({
                    "generators": s.generators(),
                    "gaps": s.gaps(),
                    "frobenius": s.frobenius(),
                    "conductor": s.conductor(),
                    "totally_ordered": s.is_totally_ordered(),
                }),
            ))
        }
        Command::Eval { input, basis } => {
            let (s, x) = setup(&input)?;
            let a = rep(&x);
            Outcome::Pass(document(
                "eval",
                json!({
                    "generators": s.generators(),
                    "free": free_json(&x),
                    "operator": operator_json(&a),
                    "basis_images": basis_images(&a, &s, basis)?,
                }),
            ))
        }
        Command::Symbol(input) => {
            let (s, x) = setup(&input)?;
            let f = rep(&x).symbol();
            Outcome::Pass(document(
                "symbol",
                json!({"generators": s.generators(), "symbol": laurent_json(&f), "text": f.to_string()}),
            ))
        }
        Command::Split(input) => {
            let (s, x) = setup(&input)?;
            let a = rep(&x);
            let (f, k) = a.split();
            let exact = OperatorElement::toeplitz_lift(&f, &s).add(&k)? == a && k.in_ideal();
            let body = json!({
                "generators": s.generators(),
                "symbol": laurent_json(&f),
                "ideal_part": operator_json(&k),
                "pass": exact,
            });
            if exact {
                Outcome::Pass(document("split", body))
            } else {
                Outcome::Fail(document("split", body))
            }
        }
        Command::Norm { input, dim } => {
            let (s, x) = setup(&input)?;
            let a = rep(&x);
            let f = a.symbol();
            let norm = operator_norm(&truncate(&a, dim)?, DEFAULT_TOLERANCE)?;
            let samples = (64 * f.max_abs_exponent() as usize).max(4096);
            let (sup, bound) = laurent_sup_norm(&f, samples)?;
            Outcome::Pass(document(
                "norm",
                json!({
                    "generators": s.generators(),
                    "dimension": dim,
                    "truncated_norm": norm,
                    "symbol_sup_norm": sup,
                    "sup_error_bound": bound,
                    "gap": sup - norm,
                }),
            ))
        }
        Command::Coproduct { input, pairs } => {
            let (s, x) = setup(&input)?;
            let t = coproduct(&x);
            let mut body = json!({"generators": s.generators(), "coproduct": tensor_json(&t)});
            if let Some(n) = pairs {
                let mut images = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let (c, d) = (s.element_at(i), s.element_at(j));
                        let image = t.apply((c, d))?;
                        if !image.is_empty() {
                            let terms: Vec<Value> =
                                image.iter().map(|((u, v), k)| json!([[u, v], k.to_string()])).collect();
                            images.push(json!({"pair": [c, d], "image": terms}));
                        }
                    }
                }
                body["pair_images"] = Value::Array(images);
            }
            Outcome::Pass(document("coproduct", body))
        }
        Command::Grouplike(input) => {
            let (s, x) = setup(&input)?;
            let found = group_like_detect(&x);
            Outcome::Pass(document(
                "grouplike",
                json!({"generators": s.generators(), "group_like": found.is_some(), "index": found}),
            ))
        }
        Command::Haar(input) => {
            let (s, x) = setup(&input)?;
            let v = cstar_semigroup::dual::haar().eval(&x);
            Outcome::Pass(document("haar", json!({"generators": s.generators(), "value": scalar_value(&v)})))
        }
        Command::Convolve { input, functional } => {
            let [f, g] = functional.as_slice() else {
                return Err(Error::Precondition("convolve takes exactly two --functional".into()));
            };
            let (s, x) = setup(&input)?;
            let (f, g) = (parse_functional(f)?, parse_functional(g)?);
            let h = convolve(&f, &g);
            Outcome::Pass(document(
                "convolve",
                json!({
                    "generators": s.generators(),
                    "functional": h.to_string(),
                    "value": scalar_value(&h.eval(&x)),
                }),
            ))
        }
        Command::Morphism { from, to, mult, max_len } => {
            let source = NumericalSemigroup::build(&from)?;
            let target = NumericalSemigroup::build(&to)?;
            let out = quantum_morphism_falsify(&source, &target, mult, max_len)?;
            let body = json!({
                "from": source.generators(),
                "to": target.generators(),
                "multiplier": mult,
                "max_word_len": max_len,
                "words": out.words,
                "classes": out.classes,
                "relations": out.relations,
                "consistent": out.witness.is_none(),
                "witness": out.witness.as_ref().map(|w| w.describe()),
            });
            if out.witness.is_some() {
                Outcome::Fail(document("morphism", body))
            } else {
                Outcome::Pass(document("morphism", body))
            }
        }
        Command::Check { gens, suite, seed } => {
            let s = NumericalSemigroup::build(&gens.gens)?;
            let budget = Budget { seed, ..Budget::default() };
            let reports = run_suite(&s, &suite, &budget)?
                .ok_or_else(|| Error::Precondition(format!("unknown suite {suite}")))?;
            for r in &reports {
                eprintln!("{}", r.line());
            }
            let pass = reports.iter().all(|r| r.pass);
            let body = json!({
                "generators": s.generators(),
                "suite": suite,
                "seed": seed,
                "pass": pass,
                "reports": reports,
            });
            if pass {
                Outcome::Pass(document("check", body))
            } else {
                Outcome::Fail(document("check", body))
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(Outcome::Pass(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail(v)) => {
            println!("{v}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
