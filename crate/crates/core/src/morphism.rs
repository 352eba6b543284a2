//! Search for obstructions to a `*`-morphism `T_a ↦ T_{m·a}` between the
//! semigroup C*-algebras of two numerical semigroups.
//!
//! Two kinds of inconsistency are looked for among words of bounded length:
//! a pair of words equal as operators over the source whose images differ,
//! and more generally a linear relation among distinct source monomials
//! whose image combination is non-zero.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::corpus::enumerate_words;
use crate::error::{Error, Result};
use crate::operator::OperatorElement;
use crate::scalar::GaussianRational;
use crate::semigroup::NumericalSemigroup;
use crate::translation::{format_word, Letter, PartialTranslation};

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Equal over the source, different images.
    WordPair {
        left: Vec<Letter>,
        right: Vec<Letter>,
    },
    /// `Σ λ_i w_i = 0` over the source with non-zero image.
    Relation(Vec<(BigRational, Vec<Letter>)>),
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::WordPair { left, right } => {
                format!("{} = {}", format_word(left), format_word(right))
            }
            Witness::Relation(terms) => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|(c, w)| format!("({c})·{}", format_word(w)))
                    .collect();
                format!("{} = 0", parts.join(" + "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FalsifierOutcome {
    pub words: usize,
    /// Distinct source monomials among the enumerated words.
    pub classes: usize,
    /// Independent source relations found.
    pub relations: usize,
    pub witness: Option<Witness>,
}

fn image_word(word: &[Letter], m: i64) -> Vec<Letter> {
    word.iter()
        .map(|l| Letter {
            generator: m * l.generator,
            starred: l.starred,
        })
        .collect()
}

/// Basis of the rational nullspace of the columns, one vector per free
/// column in increasing order.
fn nullspace(columns: &[Vec<bool>]) -> Vec<Vec<BigRational>> {
    let n = columns.len();
    let rows = columns.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if columns[c][r] {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let delta = &f * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// The first word (in enumeration order) for each distinct monomial of
/// length `≤ max_len`.
pub fn distinct_monomials(
    s: &NumericalSemigroup,
    max_len: usize,
) -> Result<Vec<(Vec<Letter>, PartialTranslation)>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for word in enumerate_words(s, max_len) {
        let pt = PartialTranslation::evaluate_word(s, &word)?;
        if seen.insert(pt.clone()) {
            out.push((word, pt));
        }
    }
    Ok(out)
}

/// A basis of all linear relations `Σ λ_i V_i = 0` (as operators) among
/// the given distinct monomials, each relation listed as
/// `(coefficient, position)` pairs. Relations never mix indices.
pub fn monomial_relations(
    s: &NumericalSemigroup,
    monomials: &[PartialTranslation],
) -> Vec<Vec<(BigRational, usize)>> {
    let mut by_index: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, v) in monomials.iter().enumerate() {
        by_index.entry(v.index()).or_default().push(i);
    }
    let mut out = Vec::new();
    for group in by_index.values().filter(|g| g.len() > 1) {
        // Indicator columns on members below the largest threshold, plus the
        // common tail value.
        let limit = group
            .iter()
            .map(|&i| monomials[i].domain().threshold())
            .max()
            .unwrap_or(0);
        let columns: Vec<Vec<bool>> = group
            .iter()
            .map(|&i| {
                s.members_in(0, limit)
                    .map(|d| monomials[i].in_domain(d))
                    .chain(std::iter::once(true))
                    .collect()
            })
            .collect();
        for kernel in nullspace(&columns) {
            let mut relation: Vec<(BigRational, usize)> = kernel
                .into_iter()
                .zip(group.iter().copied())
                .filter(|(c, _)| !c.is_zero())
                .collect();
            // Normalise the sign so the first coefficient is positive.
            if relation.first().is_some_and(|(c, _)| c.is_negative()) {
                for (c, _) in relation.iter_mut() {
                    *c = -c.clone();
                }
            }
            out.push(relation);
        }
    }
    out
}

fn combination<'a>(
    s: &NumericalSemigroup,
    terms: impl IntoIterator<Item = (&'a BigRational, &'a PartialTranslation)>,
) -> OperatorElement {
    terms.into_iter().fold(OperatorElement::zero(s), |acc, (c, v)| {
        let coef = GaussianRational::new(c.clone(), BigRational::zero());
        acc.add(&OperatorElement::from_monomial(v).scale(&coef))
            .expect("same semigroup")
    })
}

/// Semi-decision procedure: `None` means consistent up to `max_len`, never
/// that a morphism exists.
pub fn quantum_morphism_falsify(
    source: &NumericalSemigroup,
    target: &NumericalSemigroup,
    m: i64,
    max_len: usize,
) -> Result<FalsifierOutcome> {
    if m < 0 || !source.morphism_multipliers(target, m).contains(&m) {
        return Err(Error::InvalidMultiplier(m));
    }
    let words = enumerate_words(source, max_len);
    let mut classes: BTreeMap<PartialTranslation, (Vec<Letter>, PartialTranslation)> =
        BTreeMap::new();
    let mut order: Vec<PartialTranslation> = Vec::new();
    for word in &words {
        let pt = PartialTranslation::evaluate_word(source, word)?;
        let image = PartialTranslation::evaluate_word(target, &image_word(word, m))?;
        match classes.get(&pt) {
            Some((first, first_image)) => {
                if *first_image != image {
                    return Ok(FalsifierOutcome {
                        words: words.len(),
                        classes: classes.len(),
                        relations: 0,
                        witness: Some(Witness::WordPair {
                            left: first.clone(),
                            right: word.clone(),
                        }),
                    });
                }
            }
            None => {
                order.push(pt.clone());
                classes.insert(pt, (word.clone(), image));
            }
        }
    }

    let relations = monomial_relations(source, &order);
    for relation in &relations {
        debug_assert!(combination(source, relation.iter().map(|(c, i)| (c, &order[*i]))).is_zero());
        let image = combination(
            target,
            relation.iter().map(|(c, i)| (c, &classes[&order[*i]].1)),
        );
        if !image.is_zero() {
            let witness = relation
                .iter()
                .map(|(c, i)| (c.clone(), classes[&order[*i]].0.clone()))
                .collect();
            return Ok(FalsifierOutcome {
                words: words.len(),
                classes: classes.len(),
                relations: relations.len(),
                witness: Some(Witness::Relation(witness)),
            });
        }
    }
    Ok(FalsifierOutcome {
        words: words.len(),
        classes: classes.len(),
        relations: relations.len(),
        witness: None,
    })
}
