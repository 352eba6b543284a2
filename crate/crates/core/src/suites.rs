//! Property suites over a chosen semigroup. Each check returns a [`Report`];
//! the CLI `check` subcommand and the acceptance tests both run these.

use std::collections::BTreeSet;

use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::corpus::{alphabet, random_free_element, random_operator_element, random_word};
use crate::dual::{convolve, haar, haar_property_check, measure_convolution_check, Functional};
use crate::error::Result;
use crate::free::FreeElement;
use crate::laurent::LaurentPolynomial;
use crate::morphism::{distinct_monomials, monomial_relations};
use crate::numeric::{
    fourier_project, gauge_twist, norm_convergence, shift_example_check, DEFAULT_TOLERANCE,
};
use crate::operator::OperatorElement;
use crate::quantum::{
    coassociativity_check, coideal_decomposition, coproduct, corner_diagram_check,
    descent_witness, group_like_detect, rep, weak_hopf_check,
};
use crate::report::{free_json, Report};
use crate::scalar::{Coefficient, GaussianRational, Scalar};
use crate::semigroup::NumericalSemigroup;
use crate::translation::{format_word, Letter, PartialTranslation};

type Op = OperatorElement<GaussianRational>;

pub const SUITES: &[&str] = &[
    "order", "inverse", "grading", "symbol", "weakhopf", "haar", "coideal", "descent", "fourier",
    "norms", "shift37",
];

/// Corpus sizes for the randomised suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub words: usize,
    pub elements: usize,
    pub functionals: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            words: 1000,
            elements: 500,
            functionals: 200,
            seed: 0x5eed,
        }
    }
}

fn gens_json(s: &NumericalSemigroup) -> Value {
    json!(s.generators())
}

fn rng_for(budget: &Budget, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(budget.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// The natural quasi-order `a ≤ b ⟺ b − a ∈ S` on a window of members.
pub fn order_check(s: &NumericalSemigroup) -> Result<Report> {
    let window = s.conductor() + 3 * s.max_generator();
    let members: Vec<i64> = s.members_in(0, window + 1).collect();
    let mut failures = Vec::new();
    for &a in &members {
        if !s.natural_below(a, a)? {
            failures.push(json!({"reflexive": a}));
        }
        for &b in &members {
            let ab = s.natural_below(a, b)?;
            if ab && a != b && s.natural_below(b, a)? {
                failures.push(json!({"antisymmetric": [a, b]}));
            }
            for &c in &members {
                if ab && s.natural_below(b, c)? && !s.natural_below(a, c)? {
                    failures.push(json!({"transitive": [a, b, c]}));
                }
                if ab && !s.natural_below(a + c, b + c)? {
                    failures.push(json!({"translation": [a, b, c]}));
                }
            }
        }
    }
    let total = s.is_totally_ordered();
    let pass = failures.is_empty() && total == s.gaps().is_empty();
    let mut r = Report::new("natural order is a translation-invariant partial order; total iff S has no gaps", pass)
        .parameters(json!({"generators": gens_json(s), "window": window}))
        .computed(json!({"totally_ordered": total, "gaps": s.gaps(), "frobenius": s.frobenius()}))
        .expected(json!({"totally_ordered": s.gaps().is_empty()}));
    if let Some(w) = failures.first() {
        r = r.witness(w.clone());
    }
    Ok(r)
}

/// Inverse-semigroup laws on random words.
pub fn inverse_check(s: &NumericalSemigroup, budget: &Budget) -> Result<Report> {
    let mut rng = rng_for(budget, 1);
    let max_len = 8;
    let mut failure: Option<Value> = None;
    for _ in 0..budget.words {
        let w1 = random_word(&mut rng, s, max_len);
        let w2 = random_word(&mut rng, s, max_len);
        let v = PartialTranslation::evaluate_word(s, &w1)?;
        let w = PartialTranslation::evaluate_word(s, &w2)?;
        let vs = v.adjoint();
        let e = v.compose(&vs)?;
        let f = w.compose(&w.adjoint())?;
        let checks = [
            ("V V* V = V", v.compose(&vs)?.compose(&v)? == v),
            ("V* V V* = V*", vs.compose(&v)?.compose(&vs)? == vs),
            ("ind(VW) = ind V + ind W", v.compose(&w)?.index() == v.index() + w.index()),
            ("idempotents commute", e.compose(&f)? == f.compose(&e)?),
            ("V V* is a projection", e.is_projection()),
        ];
        if let Some((law, _)) = checks.iter().find(|(_, ok)| !ok) {
            failure = Some(json!({"law": law, "v": format_word(&w1), "w": format_word(&w2)}));
            break;
        }
    }
    let mut r = Report::new("inverse-semigroup laws for monomials", failure.is_none())
        .parameters(json!({"generators": gens_json(s), "pairs": budget.words, "max_word_len": max_len}))
        .computed(json!({"failures": usize::from(failure.is_some())}))
        .expected(json!({"failures": 0}));
    if let Some(w) = failure {
        r = r.witness(w);
    }
    Ok(r)
}

/// Window on which a non-zero element must act non-trivially.
fn faithfulness_window(a: &Op) -> i64 {
    let s = a.semigroup();
    2 * (s.conductor() + a.index_span()) + a.stabilization_threshold()
}

/// Graded decomposition, index arithmetic of products and faithfulness.
pub fn grading_check(s: &NumericalSemigroup, budget: &Budget) -> Result<Report> {
    let mut rng = rng_for(budget, 2);
    let mut failure: Option<&str> = None;
    let mut zeros_seen = 0;
    for _ in 0..budget.elements {
        let a = random_operator_element(&mut rng, s, 4, 5);
        let b = random_operator_element(&mut rng, s, 4, 5);
        // Include guaranteed zero elements in the faithfulness corpus.
        let a = if rng.gen_bool(0.1) { a.sub(&a)? } else { a };
        let resum = a.indices().try_fold(Op::zero(s), |acc, c| acc.add(&a.grade(c)))?;
        if resum != a {
            failure = Some("A = Σ_c Q_c(A)");
            break;
        }
        let ab = a.multiply(&b)?;
        let indices: BTreeSet<i64> = a
            .indices()
            .flat_map(|x| b.indices().map(move |y| x + y))
            .chain(ab.indices())
            .collect();
        for c in indices {
            let mut expect = Op::zero(s);
            for x in a.indices() {
                expect = expect.add(&a.grade(x).multiply(&b.grade(c - x))?)?;
            }
            if ab.grade(c) != expect {
                failure = Some("Q_c(AB) = Σ_{a+b=c} Q_a(A) Q_b(B)");
            }
        }
        if ab.indices().any(|c| !a.indices().any(|x| b.indices().any(|y| x + y == c))) {
            failure = Some("indices of AB are sums of indices");
        }
        let all_grades_zero = a.indices().all(|c| a.grade(c).is_zero());
        let window = faithfulness_window(&a);
        let acts_trivially = s
            .members_in(0, window + 1)
            .all(|d| a.apply(d).map(|v| v.is_empty()).unwrap_or(false));
        if all_grades_zero != a.is_zero() || acts_trivially != a.is_zero() {
            failure = Some("A = 0 ⟺ all Q_c(A) = 0 ⟺ A acts trivially");
        }
        zeros_seen += usize::from(a.is_zero());
        if failure.is_some() {
            break;
        }
    }
    let mut r = Report::new("graded decomposition, product index arithmetic, faithfulness", failure.is_none())
        .parameters(json!({"generators": gens_json(s), "elements": budget.elements}))
        .computed(json!({"zero_elements_seen": zeros_seen}))
        .expected(json!({"failures": 0}));
    if let Some(w) = failure {
        r = r.witness(json!({"law": w}));
    }
    Ok(r)
}

fn letter_op(s: &NumericalSemigroup, l: Letter) -> Result<Op> {
    Ok(Op::from_monomial(&PartialTranslation::from_letter(s, l)?))
}

/// Symbol multiplicativity, the split, commutators in the ideal, and
/// stabilisation of `T_e* A T_e` on the Toeplitz lift.
pub fn symbol_check(s: &NumericalSemigroup, budget: &Budget) -> Result<Report> {
    let mut rng = rng_for(budget, 3);
    let mut failure: Option<&str> = None;
    for _ in 0..budget.elements {
        let a = random_operator_element(&mut rng, s, 4, 5);
        let b = random_operator_element(&mut rng, s, 4, 5);
        let (fa, fb) = (a.symbol(), b.symbol());
        if a.multiply(&b)?.symbol() != fa.mul(&fb) {
            failure = Some("symbol(AB) = symbol(A) symbol(B)");
        } else if a.adjoint().symbol() != fa.conj_reflect() {
            failure = Some("symbol(A*) = conj(symbol(A))");
        } else {
            let (f, k) = a.split();
            if Op::toeplitz_lift(&f, s).add(&k)? != a || !k.in_ideal() {
                failure = Some("A = 𝕋_f + k with k ∈ K");
            }
            let lift = Op::toeplitz_lift(&fa, s);
            let mut e = s.next_member(a.stabilization_threshold());
            for _ in 0..3 {
                if a.conjugate(e)? != lift {
                    failure = Some("T_e* A T_e = 𝕋_f beyond the threshold");
                }
                e = s.next_member(e + 1);
            }
        }
        if failure.is_some() {
            break;
        }
    }
    let letters = alphabet(s);
    let mut commutators = 0;
    for &l1 in &letters {
        for &l2 in &letters {
            let (u, v) = (letter_op(s, l1)?, letter_op(s, l2)?);
            let c = u.multiply(&v)?.sub(&v.multiply(&u)?)?;
            commutators += 1;
            if !c.in_ideal() {
                failure = Some("generator commutators lie in K");
            }
        }
    }
    let mut r = Report::new("symbol is a *-homomorphism; split; K contains commutators; conjugation stabilises", failure.is_none())
        .parameters(json!({"generators": gens_json(s), "elements": budget.elements}))
        .computed(json!({"generator_commutators": commutators}))
        .expected(json!({"failures": 0}));
    if let Some(w) = failure {
        r = r.witness(json!({"law": w}));
    }
    Ok(r)
}

/// Weak Hopf axioms, coassociativity, multiplicativity of `Δ` and the
/// diagonal consistency with `rep`.
pub fn weakhopf_check(s: &NumericalSemigroup, budget: &Budget) -> Result<Report> {
    let mut rng = rng_for(budget, 4);
    let mut failure: Option<Value> = None;
    for _ in 0..budget.elements {
        let x = random_free_element(&mut rng, s, 5, 6);
        let y = random_free_element(&mut rng, s, 3, 4);
        let outcome = weak_hopf_check(&x);
        let law = if !outcome.first_holds {
            Some("m(id⊗T⊗id)(Δ⊗id)Δ = id")
        } else if !outcome.second_holds {
            Some("m(T⊗id⊗T)(Δ⊗id)Δ = T")
        } else if !coassociativity_check(&x) {
            Some("(Δ⊗id)Δ = (id⊗Δ)Δ")
        } else if coproduct(&x.multiply(&y)?) != coproduct(&x).multiply(&coproduct(&y))? {
            Some("Δ(xy) = Δ(x)Δ(y)")
        } else {
            let r = rep(&x);
            let dx = coproduct(&x);
            let window = faithfulness_window(&r);
            let mut bad = None;
            for a in s.members_in(0, window + 1) {
                let diagonal: std::collections::BTreeMap<i64, GaussianRational> = dx
                    .apply((a, a))?
                    .into_iter()
                    .map(|((u, _), c)| (u, c))
                    .collect();
                if diagonal != r.apply(a)? {
                    bad = Some("Δ(x)(e_a⊗e_a) = x e_a on the diagonal");
                    break;
                }
            }
            bad
        };
        if let Some(law) = law {
            failure = Some(json!({"law": law, "x": free_json(&x)}));
            break;
        }
    }
    let mut r = Report::new("weak Hopf axioms, coassociativity, multiplicative Δ, diagonal consistency", failure.is_none())
        .parameters(json!({"generators": gens_json(s), "elements": budget.elements, "max_word_len": 6, "max_terms": 5}))
        .computed(json!({"failures": usize::from(failure.is_some())}))
        .expected(json!({"failures": 0}));
    if let Some(w) = failure {
        r = r.witness(w);
    }
    Ok(r)
}

/// `Δ(VW − WV) = (VW − WV)⊗VW + WV⊗(VW − WV)` for all pairs of distinct
/// monomials from words of length `≤ max_len`.
pub fn coideal_check(s: &NumericalSemigroup, max_len: usize) -> Result<Report> {
    let monomials = distinct_monomials(s, max_len)?;
    let mut pairs = 0usize;
    let mut nonzero = 0usize;
    let mut failure: Option<Value> = None;
    'outer: for (w1, v) in &monomials {
        for (w2, w) in &monomials {
            let d = coideal_decomposition(v, w)?;
            pairs += 1;
            nonzero += usize::from(!d.commutator.is_zero());
            if !d.exact || !d.in_ideal {
                failure = Some(json!({"v": format_word(w1), "w": format_word(w2), "exact": d.exact, "in_ideal": d.in_ideal}));
                break 'outer;
            }
        }
    }
    let mut r = Report::new("commutators span a coideal inside K", failure.is_none())
        .parameters(json!({"generators": gens_json(s), "max_word_len": max_len}))
        .computed(json!({"monomials": monomials.len(), "pairs": pairs, "non_zero_commutators": nonzero}))
        .expected(json!({"failures": 0}));
    if let Some(w) = failure {
        r = r.witness(w);
    }
    Ok(r)
}

fn random_functional(rng: &mut ChaCha8Rng, s: &NumericalSemigroup, depth: u32) -> Functional {
    let pick = if depth == 0 { rng.gen_range(0..2) } else { rng.gen_range(0..4) };
    match pick {
        0 => Functional::MatrixCoeff {
            a: s.element_at(rng.gen_range(0..6)),
            b: s.element_at(rng.gen_range(0..6)),
        },
        1 => Functional::point_mass(Rational64::new(rng.gen_range(0..12), 12)),
        2 => Functional::LinCombo(vec![
            (GaussianRational::integer(rng.gen_range(-2..=2)), random_functional(rng, s, depth - 1)),
            (GaussianRational::complex(0, 1), random_functional(rng, s, depth - 1)),
        ]),
        _ => convolve(&random_functional(rng, s, depth - 1), &random_functional(rng, s, depth - 1)),
    }
}

fn agree(a: &Scalar, b: &Scalar) -> bool {
    a.agrees(b, 1e-10)
}

/// Haar absorption, associativity and commutativity of convolution, point
/// masses under convolution, and the ideal behaviour of both kinds.
pub fn haar_check(s: &NumericalSemigroup, budget: &Budget) -> Result<Report> {
    let mut rng = rng_for(budget, 5);
    let mut failure: Option<&str> = None;
    for _ in 0..budget.functionals {
        let f = random_functional(&mut rng, s, 2);
        let g = random_functional(&mut rng, s, 1);
        let h = random_functional(&mut rng, s, 1);
        let x = random_free_element(&mut rng, s, 5, 6);
        let alpha = Rational64::new(rng.gen_range(0..60), 60);
        let beta = Rational64::new(rng.gen_range(0..60), 60);
        if !haar_property_check(&f, &x, 1e-10) {
            failure = Some("h × φ = φ × h = φ(I)·h");
        } else if !agree(&convolve(&convolve(&f, &g), &h).eval(&x), &convolve(&f, &convolve(&g, &h)).eval(&x)) {
            failure = Some("(ξ × η) × ζ = ξ × (η × ζ)");
        } else if !agree(&convolve(&f, &g).eval(&x), &convolve(&g, &f).eval(&x)) {
            failure = Some("ξ × η = η × ξ");
        } else if !measure_convolution_check(alpha, beta, &x, 1e-10) {
            failure = Some("δ_α × δ_β = δ_{α+β}");
        } else if haar().eval(&x) != Scalar::Exact(rep(&x).apply(0)?.remove(&0).unwrap_or_else(GaussianRational::zero)) {
            failure = Some("h(x) = ⟨rep(x) e_0, e_0⟩");
        }
        if failure.is_some() {
            break;
        }
    }
    // Point masses see only the symbol; the Haar state does not.
    let mut haar_sees_ideal = false;
    for &l in &alphabet(s) {
        let v = FreeElement::monomial(&PartialTranslation::from_letter(s, l)?);
        let comm = v.multiply(&v.adjoint())?.sub(&v.adjoint().multiply(&v)?)?;
        debug_assert!(rep(&comm).in_ideal());
        for k in 0..12 {
            let pm = Functional::point_mass(Rational64::new(k, 12));
            if pm.eval(&comm).to_complex().norm() > 1e-12 {
                failure = Some("point masses vanish on K");
            }
        }
        haar_sees_ideal |= haar().eval(&comm) != Scalar::zero();
    }
    if !haar_sees_ideal {
        failure = Some("the Haar state is non-zero on K");
    }
    let mut r = Report::new("Haar absorption; convolution associative and commutative; point masses convolve by angle addition", failure.is_none())
        .parameters(json!({"generators": gens_json(s), "cases": budget.functionals}))
        .computed(json!({"haar_non_zero_on_ideal": haar_sees_ideal}))
        .expected(json!({"failures": 0}))
        .tolerance(1e-10);
    if let Some(w) = failure {
        r = r.witness(json!({"law": w}));
    }
    Ok(r)
}

/// Exhaustive search for group-like isometries among elements with at most
/// `max_terms` monomials (words of length `≤ max_len`).
pub fn grouplike_check(s: &NumericalSemigroup, max_len: usize, max_terms: usize) -> Result<Report> {
    let monomials: Vec<PartialTranslation> =
        distinct_monomials(s, max_len)?.into_iter().map(|(_, v)| v).collect();
    let single_coefficients = [
        GaussianRational::integer(1),
        GaussianRational::integer(-1),
        GaussianRational::integer(2),
        GaussianRational::complex(1, 1),
    ];
    let multi_coefficients = [GaussianRational::integer(1), GaussianRational::integer(-1)];
    let mut found: BTreeSet<i64> = BTreeSet::new();
    let mut searched = 0usize;
    let mut consider = |x: FreeElement| {
        searched += 1;
        if let Some(c) = group_like_detect(&x) {
            found.insert(c);
        }
    };
    for v in &monomials {
        for c in &single_coefficients {
            consider(FreeElement::monomial(v).scale(c));
        }
    }
    let n = monomials.len();
    let mut combos: Vec<Vec<usize>> = Vec::new();
    if max_terms >= 2 {
        combos.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])));
    }
    if max_terms >= 3 {
        combos.extend(
            (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| vec![i, j, k]))),
        );
    }
    for combo in combos {
        let k = combo.len();
        for signs in 0..(1usize << k) {
            let terms = combo.iter().enumerate().map(|(t, &i)| {
                (multi_coefficients[(signs >> t) & 1].clone(), monomials[i].clone())
            });
            consider(FreeElement::from_terms(s, terms)?);
        }
    }
    let expected: BTreeSet<i64> = monomials
        .iter()
        .filter(|v| v.is_total())
        .map(PartialTranslation::index)
        .collect();
    let pass = found == expected && found.iter().all(|&c| s.contains(c));
    Ok(Report::new("group-like isometries are exactly the T_c", pass)
        .parameters(json!({"generators": gens_json(s), "max_word_len": max_len, "max_terms": max_terms}))
        .computed(json!({"found": found, "elements_searched": searched, "monomials": n}))
        .expected(json!({"total_monomial_indices": expected})))
}

/// `1_{2+S} + 1_{3+S} − 1_{S∖{0}} − 1_{{d≥5}}` over ⟨2,3⟩, as words.
pub fn inclusion_exclusion_23() -> FreeElement {
    let s = NumericalSemigroup::build(&[2, 3]).expect("valid generators");
    let word = |w: &[Letter]| PartialTranslation::evaluate_word(&s, w).expect("generator letters");
    let terms = [
        (1, word(&[Letter::shift(2), Letter::star(2)])),
        (1, word(&[Letter::shift(3), Letter::star(3)])),
        (-1, word(&[Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)])),
        (-1, word(&[Letter::shift(2), Letter::star(2), Letter::shift(3), Letter::star(3)])),
    ];
    FreeElement::from_terms(&s, terms.into_iter().map(|(c, v)| (GaussianRational::integer(c), v)))
        .expect("same semigroup")
}

fn relation_element(s: &NumericalSemigroup, relation: &[(BigRational, usize)], monomials: &[PartialTranslation]) -> FreeElement {
    FreeElement::from_terms(
        s,
        relation
            .iter()
            .map(|(c, i)| (GaussianRational::new(c.clone(), BigRational::zero()), monomials[*i].clone())),
    )
    .expect("same semigroup")
}

/// Whether `Δ` descends along `rep`: linear relations among monomials and
/// their tensor witnesses, plus the corner diagram on each monomial.
pub fn descent_check(s: &NumericalSemigroup, max_len: usize, offsets: i64, window: i64) -> Result<Vec<Report>> {
    let named = distinct_monomials(s, max_len)?;
    let monomials: Vec<PartialTranslation> = named.iter().map(|(_, v)| v.clone()).collect();
    let relations = monomial_relations(s, &monomials);
    let mut witnessed = 0usize;
    let mut first: Option<Value> = None;
    for relation in &relations {
        let x = relation_element(s, relation, &monomials);
        assert!(rep(&x).is_zero());
        if let Some(w) = descent_witness(&x, window)? {
            witnessed += 1;
            if first.is_none() {
                let terms: Vec<Value> = relation
                    .iter()
                    .map(|(c, i)| json!([c.to_string(), format_word(&named[*i].0)]))
                    .collect();
                let values: Vec<Value> = w.values.iter().map(|((u, v), c)| json!([[u, v], c.to_string()])).collect();
                first = Some(json!({"relation": terms, "pair": [w.pair.0, w.pair.1], "values": values}));
            }
        }
    }
    let total = s.gaps().is_empty();
    let (claim, pass) = if total {
        ("rep is injective on monomial combinations", relations.is_empty())
    } else {
        ("monomial dependences exist and Δ separates them", !relations.is_empty() && witnessed > 0)
    };
    let mut relation_report = Report::new(claim, pass)
        .parameters(json!({"generators": gens_json(s), "max_word_len": max_len, "window": window}))
        .computed(json!({"monomials": monomials.len(), "relations": relations.len(), "relations_with_tensor_witness": witnessed}))
        .expected(json!({"relations_zero": total}));
    if let Some(w) = first {
        relation_report = relation_report.witness(w);
    }
    let mut reports = vec![relation_report];

    if s == &NumericalSemigroup::build(&[2, 3])? {
        let x = inclusion_exclusion_23();
        let w = descent_witness(&x, window)?;
        let pair = w.as_ref().map(|w| json!([w.pair.0, w.pair.1]));
        let values: Option<Vec<Value>> = w
            .as_ref()
            .map(|w| w.values.iter().map(|((u, v), c)| json!([[u, v], c.to_string()])).collect());
        let pass = rep(&x).is_zero() && w.as_ref().map(|w| w.pair) == Some((2, 3));
        reports.push(
            Report::new("inclusion–exclusion relation over ⟨2,3⟩ has rep = 0 and tensor witness (2,3)", pass)
                .parameters(json!({"x": free_json(&x), "window": window}))
                .computed(json!({"rep_is_zero": rep(&x).is_zero(), "pair": pair, "values": values}))
                .expected(json!({"pair": [2, 3], "values": [[[2, 3], "-1"]]})),
        );
    }

    // Corner diagram: a = 0 always; a ≠ 0 is expected to commute only for
    // totally ordered S.
    let params = json!({"generators": gens_json(s), "max_word_len": max_len, "offsets": [-offsets, offsets], "window": window});
    let corner = |range: Vec<i64>| -> Result<(Vec<Value>, Option<Value>)> {
        let mut per_offset = Vec::new();
        let mut first = None;
        for a in range {
            let mut failures = 0usize;
            for (word, v) in &named {
                if let Some(f) = corner_diagram_check(&FreeElement::monomial(v), a, window)? {
                    failures += 1;
                    if first.is_none() {
                        let side = |m: &std::collections::BTreeMap<i64, GaussianRational>| -> Vec<Value> {
                            m.iter().map(|(u, c)| json!([u, c.to_string()])).collect()
                        };
                        first = Some(json!({
                            "a": a,
                            "word": format_word(word),
                            "pair": [f.pair.0, f.pair.1],
                            "tensor_side": side(&f.tensor_side),
                            "operator_side": side(&f.operator_side),
                        }));
                    }
                }
            }
            per_offset.push(json!({"a": a, "failing_monomials": failures}));
        }
        Ok((per_offset, first))
    };
    let mut push = |claim: &str, range: Vec<i64>, expect_commutes: bool| -> Result<()> {
        let (per_offset, first) = corner(range)?;
        let pass = first.is_none() == expect_commutes;
        let mut r = Report::new(claim, pass)
            .parameters(params.clone())
            .computed(json!({"monomials": named.len(), "per_offset": per_offset}))
            .expected(json!({"commutes": expect_commutes}));
        if let Some(w) = first {
            r = r.witness(w);
        }
        reports.push(r);
        Ok(())
    };
    push("corner diagram commutes at a = 0", vec![0], true)?;
    if total {
        push("corner diagram commutes for a > 0", (1..=offsets).collect(), true)?;
        push("corner diagram commutes for a < 0", (-offsets..0).rev().collect(), true)?;
    } else if offsets > 0 {
        push("corner diagram fails off the diagonal", (-offsets..=offsets).filter(|&a| a != 0).collect(), false)?;
    }
    Ok(reports)
}

/// Fourier averaging recovers graded components; the gauge action is a
/// group action.
pub fn fourier_check(s: &NumericalSemigroup, budget: &Budget) -> Result<Report> {
    let mut rng = rng_for(budget, 6);
    let mut worst_fourier: f64 = 0.0;
    let mut worst_action: f64 = 0.0;
    let cases = (budget.elements / 5).max(1);
    for _ in 0..cases {
        let a = random_operator_element(&mut rng, s, 4, 5);
        let span = a.index_span();
        let samples = 2 * span as usize + 2 + rng.gen_range(0..8);
        for c in -span - 1..=span + 1 {
            let got = fourier_project(&a, c, samples)?;
            worst_fourier = worst_fourier.max(got.max_deviation(&a.grade(c).to_numeric()));
        }
        let (t1, t2) = (rng.gen_range(-PI_F..PI_F), rng.gen_range(-PI_F..PI_F));
        let composed = gauge_twist(&gauge_twist(&a, t1), t2);
        worst_action = worst_action.max(gauge_twist(&a, t1 + t2).max_deviation(&composed));
    }
    let pass = worst_fourier <= 1e-9 && worst_action <= 1e-12;
    Ok(Report::new("Fourier averaging recovers Q_c; gauge action composes", pass)
        .parameters(json!({"generators": gens_json(s), "elements": cases}))
        .computed(json!({"max_fourier_deviation": worst_fourier, "max_action_deviation": worst_action}))
        .expected(json!({"fourier_tolerance": 1e-9, "action_tolerance": 1e-12})))
}

const PI_F: f64 = std::f64::consts::PI;

/// Test symbols for the norm comparison.
pub fn norm_test_symbols() -> Vec<LaurentPolynomial> {
    let q = GaussianRational::integer;
    let t = |terms: &[(i64, GaussianRational)]| LaurentPolynomial::from_terms(terms.iter().cloned());
    vec![
        t(&[(0, q(3))]),
        t(&[(1, q(1)), (-1, q(1))]),
        t(&[(2, q(1)), (-3, q(1))]),
        t(&[(1, q(1))]),
        t(&[(0, q(1)), (2, q(1))]),
        t(&[(1, q(2)), (-1, q(-1)), (0, q(1))]),
        t(&[(3, GaussianRational::complex(0, 1)), (-2, q(1)), (0, GaussianRational::ratio(1, 2))]),
        t(&[(2, q(1)), (-2, q(1)), (1, q(-1))]),
        t(&[(4, q(1)), (0, q(-2)), (-1, GaussianRational::complex(1, 1))]),
        t(&[(1, q(1)), (2, q(1)), (3, q(1))]),
    ]
}

/// `‖truncate(𝕋_f, N)‖` increases to `‖f‖_∞`.
pub fn norms_check(s: &NumericalSemigroup, symbols: &[LaurentPolynomial], dimensions: &[usize]) -> Result<Report> {
    let band = 0.05;
    let mut rows = Vec::new();
    let mut pass = true;
    for f in symbols {
        let out = norm_convergence(f, s, dimensions, DEFAULT_TOLERANCE)?;
        pass &= out.pass(band);
        rows.push(json!({
            "symbol": f.to_string(),
            "norms": out.norms,
            "sup_norm": out.sup_norm,
            "sup_error_bound": out.sup_error_bound,
            "monotone": out.monotone,
            "gap": out.final_gap,
        }));
    }
    Ok(Report::new("truncated Toeplitz norms approach the sup norm of the symbol", pass)
        .parameters(json!({"generators": gens_json(s), "dimensions": dimensions, "power_iteration_tolerance": DEFAULT_TOLERANCE}))
        .computed(json!(rows))
        .expected(json!({"monotone": true, "gap_at_most": band}))
        .tolerance(band))
}

/// The successor map over ⟨2,3⟩ and its diagonal coproduct.
pub fn shift37_check() -> Report {
    let ex = shift_example_check(12);
    let printed = ex.printed_failure.as_ref().map(|(d, image)| {
        json!({"member": d, "image": image.iter().map(|(t, c)| json!([t, c.to_string()])).collect::<Vec<_>>()})
    });
    let mismatch = ex.tensor_mismatch.as_ref().map(|m| {
        json!({
            "pair": [m.pair.0, m.pair.1],
            "coproduct": m.coproduct_side.iter().map(|((u, v), c)| json!([[u, v], c.to_string()])).collect::<Vec<_>>(),
            "shift_tensor_shift": [m.shift_side.0, m.shift_side.1],
        })
    });
    let pass = ex.corrected_failure.is_none()
        && ex.printed_failure.as_ref().map(|(d, _)| *d) == Some(0)
        && ex.tensor_mismatch.as_ref().map(|m| m.pair) == Some((0, 2))
        && ex.diagonal_agrees;
    let mut r = Report::new("successor map on ⟨2,3⟩ and its coproduct", pass)
        .parameters(json!({"generators": [2, 3], "basis_checked": 50, "pair_window": 12}))
        .computed(json!({
            "corrected_order_failure": ex.corrected_failure,
            "printed_order_failure": printed,
            "diagonal_agrees": ex.diagonal_agrees,
            "corrected_free_terms": free_json(&ex.corrected),
        }))
        .expected(json!({
            "corrected_order_failure": null,
            "printed_order_failure_member": 0,
            "tensor_mismatch_pair": [0, 2],
            "diagonal_agrees": true,
        }))
        .note("T_2(I - P) + T_2*T_3 is the successor map; the printed order (I - P)T_2 + T_2*T_3 sends e_0 to 0");
    if let Some(m) = mismatch {
        r = r.witness(m);
    }
    r
}

/// Runs one named suite, or all of them in [`SUITES`] order.
pub fn run_suite(s: &NumericalSemigroup, suite: &str, budget: &Budget) -> Result<Option<Vec<Report>>> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Ok(None);
    };
    let mut reports = Vec::new();
    for name in names {
        match name {
            "order" => reports.push(order_check(s)?),
            "inverse" => reports.push(inverse_check(s, budget)?),
            "grading" => reports.push(grading_check(s, budget)?),
            "symbol" => reports.push(symbol_check(s, budget)?),
            "weakhopf" => reports.push(weakhopf_check(s, budget)?),
            "haar" => reports.push(haar_check(s, budget)?),
            "coideal" => reports.push(coideal_check(s, 4)?),
            "descent" => reports.extend(descent_check(s, 6, 4, 16)?),
            "fourier" => reports.push(fourier_check(s, budget)?),
            "norms" => reports.push(norms_check(s, &norm_test_symbols(), &[64, 128, 256, 512])?),
            "shift37" => reports.push(shift37_check()),
            _ => unreachable!("suite names are validated above"),
        }
    }
    Ok(Some(reports))
}
