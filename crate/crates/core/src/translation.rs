//! Monomials of the regular representation as partial translations
//! `d ↦ d + c` on `S` with eventually full domains.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A subset of `S` that contains every member from some threshold on.
///
/// Denotes `members_below ∪ { s ∈ S : s ≥ threshold }`; the threshold is the
/// least value admitting this representation, so structural equality is set
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventualSet {
    threshold: i64,
    members_below: Vec<i64>,
}

impl EventualSet {
    /// Tabulates `{ d ∈ S : pred(d) }`, where `pred` must hold for every
    /// member `d ≥ bound`.
    pub fn tabulate(s: &NumericalSemigroup, bound: i64, pred: impl Fn(i64) -> bool) -> Self {
        let bound = bound.max(s.conductor());
        debug_assert!(
            s.members_in(bound, bound + s.max_generator() + 1).all(&pred),
            "predicate is not eventually true"
        );
        let inside: Vec<(i64, bool)> = s.members_in(0, bound).map(|d| (d, pred(d))).collect();
        let threshold = inside
            .iter()
            .rev()
            .find(|(_, keep)| !keep)
            .map_or(0, |(d, _)| d + 1);
        let members_below = inside
            .into_iter()
            .filter(|&(d, keep)| keep && d < threshold)
            .map(|(d, _)| d)
            .collect();
        Self {
            threshold,
            members_below,
        }
    }

    pub fn full() -> Self {
        Self {
            threshold: 0,
            members_below: Vec::new(),
        }
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn members_below(&self) -> &[i64] {
        &self.members_below
    }

    pub fn is_full(&self) -> bool {
        self.threshold == 0
    }

    pub fn contains(&self, s: &NumericalSemigroup, d: i64) -> bool {
        if d >= self.threshold {
            s.contains(d)
        } else {
            self.members_below.binary_search(&d).is_ok()
        }
    }

    pub fn intersect(&self, s: &NumericalSemigroup, other: &Self) -> Self {
        let bound = self.threshold.max(other.threshold);
        Self::tabulate(s, bound, |d| self.contains(s, d) && other.contains(s, d))
    }
}

/// One elementary factor `T_a` or `T_a*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: i64,
    pub starred: bool,
}

impl Letter {
    pub fn shift(generator: i64) -> Self {
        Self {
            generator,
            starred: false,
        }
    }

    pub fn star(generator: i64) -> Self {
        Self {
            generator,
            starred: true,
        }
    }

    pub fn adjoint(self) -> Self {
        Self {
            starred: !self.starred,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "T*({})", self.generator)
        } else {
            write!(f, "T({})", self.generator)
        }
    }
}

/// Renders a word in operator-product order, e.g. `T*(3)*T(2)`.
pub fn format_word(word: &[Letter]) -> String {
    word.iter().map(Letter::to_string).collect::<Vec<_>>().join("*")
}

/// A monomial `V` acting by `e_d ↦ e_{d+index}` for `d` in its domain and
/// `e_d ↦ 0` otherwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialTranslation {
    semigroup: NumericalSemigroup,
    index: i64,
    domain: EventualSet,
}

impl PartialTranslation {
    fn new(semigroup: NumericalSemigroup, index: i64, domain: EventualSet) -> Self {
        let pt = Self {
            semigroup,
            index,
            domain,
        };
        debug_assert!(pt.image_stays_in_semigroup());
        pt
    }

    fn image_stays_in_semigroup(&self) -> bool {
        let s = &self.semigroup;
        let limit = self.domain.threshold + s.conductor() + s.max_generator();
        s.members_in(0, limit)
            .filter(|&d| self.domain.contains(s, d))
            .all(|d| s.contains(d + self.index))
    }

    /// `T_a` (full domain) or `T_a*` (domain `a + S`).
    pub fn elementary(s: &NumericalSemigroup, a: i64, starred: bool) -> Result<Self> {
        s.ensure_member(a)?;
        if starred {
            let domain = EventualSet::tabulate(s, a + s.conductor(), |d| s.contains(d - a));
            Ok(Self::new(s.clone(), -a, domain))
        } else {
            Ok(Self::new(s.clone(), a, EventualSet::full()))
        }
    }

    pub fn identity(s: &NumericalSemigroup) -> Self {
        Self::new(s.clone(), 0, EventualSet::full())
    }

    /// The maximal-domain translation by `c`, equal to `T_a* T_b` whenever
    /// `c = b − a`.
    pub fn max_translation(s: &NumericalSemigroup, c: i64) -> Self {
        let domain = EventualSet::tabulate(s, s.conductor() - c, |d| s.contains(d + c));
        Self::new(s.clone(), c, domain)
    }

    pub fn from_letter(s: &NumericalSemigroup, letter: Letter) -> Result<Self> {
        Self::elementary(s, letter.generator, letter.starred)
    }

    /// Evaluates a word given in operator-product order (rightmost letter
    /// acts first).
    pub fn evaluate_word(s: &NumericalSemigroup, word: &[Letter]) -> Result<Self> {
        let (first, rest) = word.split_first().ok_or(Error::EmptyWord)?;
        rest.iter().try_fold(Self::from_letter(s, *first)?, |acc, &l| {
            acc.compose(&Self::from_letter(s, l)?)
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn domain(&self) -> &EventualSet {
        &self.domain
    }

    pub fn in_domain(&self, d: i64) -> bool {
        self.domain.contains(&self.semigroup, d)
    }

    /// Operator product `self ∘ other` (`other` acts first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.semigroup != other.semigroup {
            return Err(Error::MixedSemigroups);
        }
        let s = &self.semigroup;
        let shift = other.index;
        let bound = other.domain.threshold.max(self.domain.threshold - shift);
        let domain = EventualSet::tabulate(s, bound, |d| {
            other.in_domain(d) && self.in_domain(d + shift)
        });
        Ok(Self::new(s.clone(), self.index + other.index, domain))
    }

    /// The inverse in the inverse semigroup: `(−c, D + c)`.
    pub fn adjoint(&self) -> Self {
        let s = &self.semigroup;
        let c = self.index;
        let bound = (self.domain.threshold + c).max(s.conductor() + c);
        let domain = EventualSet::tabulate(s, bound, |e| self.in_domain(e - c));
        Self::new(s.clone(), -c, domain)
    }

    /// `Some(d + c)` if `d` lies in the domain.
    pub fn apply(&self, d: i64) -> Result<Option<i64>> {
        self.semigroup.ensure_member(d)?;
        Ok(self.in_domain(d).then_some(d + self.index))
    }

    pub fn is_projection(&self) -> bool {
        self.index == 0
    }

    /// Whether the domain is all of `S`.
    pub fn is_total(&self) -> bool {
        self.domain.is_full()
    }
}

impl fmt::Display for PartialTranslation {
    /// `PT(c; {m1,m2,…}; N)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let below: Vec<String> = self.domain.members_below.iter().map(i64::to_string).collect();
        write!(
            f,
            "PT({}; {{{}}}; {})",
            self.index,
            below.join(","),
            self.domain.threshold
        )
    }
}

impl fmt::Debug for PartialTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{random_semigroup, random_word};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::build(gens).unwrap()
    }

    /// Basis action of a word computed letter by letter, independent of
    /// domain tabulation.
    fn word_action(s: &NumericalSemigroup, word: &[Letter], d: i64) -> Option<i64> {
        word.iter().rev().try_fold(d, |pos, l| {
            if l.starred {
                s.contains(pos - l.generator).then_some(pos - l.generator)
            } else {
                Some(pos + l.generator)
            }
        })
    }

    fn assert_action(pt: &PartialTranslation, expect: impl Fn(i64) -> Option<i64>, upto: i64) {
        let s = pt.semigroup().clone();
        for d in s.members_in(0, upto + 1) {
            assert_eq!(pt.apply(d).unwrap(), expect(d), "{pt} at e_{d}");
        }
    }

    #[test]
    fn elementary_examples() {
        let s = sg(&[2, 3]);
        let t2 = PartialTranslation::elementary(&s, 2, false).unwrap();
        assert_eq!(t2.index(), 2);
        assert!(t2.is_total());

        let t3s = PartialTranslation::elementary(&s, 3, true).unwrap();
        assert_eq!(t3s.index(), -3);
        assert_eq!(t3s.to_string(), "PT(-3; {3}; 5)");
        assert_action(&t3s, |d| s.contains(d - 3).then_some(d - 3), 20);

        let z = NumericalSemigroup::naturals();
        let back = PartialTranslation::elementary(&z, 1, true).unwrap();
        assert_eq!(back.to_string(), "PT(-1; {}; 1)");

        assert_eq!(
            PartialTranslation::elementary(&s, 1, false).unwrap_err(),
            Error::NotAMember(1)
        );
    }

    #[test]
    fn compose_examples() {
        let s = sg(&[2, 3]);
        let t3s = PartialTranslation::elementary(&s, 3, true).unwrap();
        let t2 = PartialTranslation::elementary(&s, 2, false).unwrap();
        let v = t3s.compose(&t2).unwrap();
        assert_eq!(v.index(), -1);
        assert_action(&v, |d| (d >= 3).then_some(d - 1), 20);

        let t3 = PartialTranslation::elementary(&s, 3, false).unwrap();
        let t5 = t2.compose(&t3).unwrap();
        assert_eq!(t5, PartialTranslation::elementary(&s, 5, false).unwrap());

        let word = [Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)];
        let p = PartialTranslation::evaluate_word(&s, &word).unwrap();
        assert_eq!(p.index(), 0);
        assert_action(&p, |d| (d >= 2).then_some(d), 10);
    }

    #[test]
    fn compose_rejects_mixed_semigroups() {
        let a = PartialTranslation::identity(&sg(&[2, 3]));
        let b = PartialTranslation::identity(&sg(&[1]));
        assert_eq!(a.compose(&b).unwrap_err(), Error::MixedSemigroups);
    }

    #[test]
    fn adjoint_examples() {
        let s = sg(&[2, 3]);
        let t2 = PartialTranslation::elementary(&s, 2, false).unwrap();
        assert_eq!(t2.adjoint(), PartialTranslation::elementary(&s, 2, true).unwrap());

        let v = PartialTranslation::max_translation(&s, -1);
        assert_action(&v, |d| (d >= 3).then_some(d - 1), 20);
        let w = v.adjoint();
        assert_eq!(w.index(), 1);
        assert_action(&w, |d| (d >= 2).then_some(d + 1), 20);

        let p = PartialTranslation::evaluate_word(
            &s,
            &[Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)],
        )
        .unwrap();
        assert_eq!(p.adjoint(), p);
    }

    #[test]
    fn apply_examples() {
        let s = sg(&[2, 3]);
        let m1 = PartialTranslation::max_translation(&s, 1);
        assert_eq!(m1.apply(0).unwrap(), None);
        let t2 = PartialTranslation::elementary(&s, 2, false).unwrap();
        assert_eq!(t2.apply(5).unwrap(), Some(7));
        assert_eq!(t2.apply(1).unwrap_err(), Error::NotAMember(1));
    }

    #[test]
    fn max_translation_examples() {
        let s = sg(&[2, 3]);
        let m1 = PartialTranslation::max_translation(&s, 1);
        assert_eq!(m1.to_string(), "PT(1; {}; 1)");
        assert_action(&m1, |d| (d >= 2).then_some(d + 1), 20);
        assert_eq!(
            PartialTranslation::max_translation(&s, 3),
            PartialTranslation::elementary(&s, 3, false).unwrap()
        );
        assert_eq!(
            PartialTranslation::max_translation(&s, -2),
            PartialTranslation::elementary(&s, 2, true).unwrap()
        );
    }

    #[test]
    fn max_translation_agrees_with_star_shift_products() {
        for gens in [&[1][..], &[2, 3], &[3, 5]] {
            let s = sg(gens);
            for c in -9..=9 {
                let mt = PartialTranslation::max_translation(&s, c);
                let mut checked = 0;
                for a in s.members_in(0, 40) {
                    let b = a + c;
                    if !s.contains(b) {
                        continue;
                    }
                    let ta = PartialTranslation::elementary(&s, a, false).unwrap();
                    let tb = PartialTranslation::elementary(&s, b, false).unwrap();
                    assert_eq!(ta.adjoint().compose(&tb).unwrap(), mt);
                    checked += 1;
                    if checked == 3 {
                        break;
                    }
                }
                assert_eq!(checked, 3);
            }
        }
    }

    #[test]
    fn evaluate_word_examples() {
        let s = sg(&[2, 3]);
        let p = PartialTranslation::evaluate_word(
            &s,
            &[Letter::shift(2), Letter::star(2), Letter::shift(3), Letter::star(3)],
        )
        .unwrap();
        assert_eq!(p.index(), 0);
        assert_action(&p, |d| (d >= 5).then_some(d), 30);
        assert_eq!(
            PartialTranslation::evaluate_word(&s, &[Letter::star(3)]).unwrap(),
            PartialTranslation::elementary(&s, 3, true).unwrap()
        );
        assert_eq!(
            PartialTranslation::evaluate_word(&s, &[]).unwrap_err(),
            Error::EmptyWord
        );
    }

    #[test]
    fn random_words_obey_inverse_semigroup_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let s = random_semigroup(&mut rng);
            let w1 = random_word(&mut rng, &s, 8);
            let w2 = random_word(&mut rng, &s, 8);
            let v = PartialTranslation::evaluate_word(&s, &w1).unwrap();
            let w = PartialTranslation::evaluate_word(&s, &w2).unwrap();
            let vs = v.adjoint();
            assert_eq!(v.compose(&vs).unwrap().compose(&v).unwrap(), v);
            assert_eq!(vs.compose(&v).unwrap().compose(&vs).unwrap(), vs);
            let vw = v.compose(&w).unwrap();
            assert_eq!(vw.index(), v.index() + w.index());

            // Canonical form reproduces the letter-by-letter action.
            let window = 2 * (s.frobenius() + 8 * s.max_generator()) + 2;
            for d in s.members_in(0, window) {
                assert_eq!(v.apply(d).unwrap(), word_action(&s, &w1, d));
                assert_eq!(
                    vw.apply(d).unwrap(),
                    w.apply(d).unwrap().and_then(|e| v.apply(e).unwrap())
                );
            }

            // Conjugating by T_e stabilises at the domain threshold.
            let target = PartialTranslation::max_translation(&s, v.index());
            let mut e = s.next_member(v.domain().threshold());
            for _ in 0..5 {
                let te = PartialTranslation::elementary(&s, e, false).unwrap();
                let conj = te.adjoint().compose(&v.compose(&te).unwrap()).unwrap();
                assert_eq!(conj, target);
                e = s.next_member(e + 1);
            }
        }
    }

    #[test]
    fn projections_commute_and_intersect() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let s = random_semigroup(&mut rng);
            let v = PartialTranslation::evaluate_word(&s, &random_word(&mut rng, &s, 6)).unwrap();
            let w = PartialTranslation::evaluate_word(&s, &random_word(&mut rng, &s, 6)).unwrap();
            let p = v.adjoint().compose(&v).unwrap();
            let q = w.compose(&w.adjoint()).unwrap();
            assert!(p.is_projection() && q.is_projection());
            let pq = p.compose(&q).unwrap();
            assert_eq!(pq, q.compose(&p).unwrap());
            assert_eq!(pq.domain(), &p.domain().intersect(&s, q.domain()));
            assert_eq!(pq.compose(&pq).unwrap(), pq);
        }
    }

    #[test]
    fn equal_actions_give_identical_values() {
        let s = sg(&[2, 3]);
        // T_2* T_3 and T_3 T_2* T_2 T_2* ... share no syntax but some share action.
        let a = PartialTranslation::evaluate_word(&s, &[Letter::star(2), Letter::shift(3)]).unwrap();
        let b = PartialTranslation::evaluate_word(
            &s,
            &[Letter::star(2), Letter::shift(3), Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)],
        )
        .unwrap();
        let agree = s
            .members_in(0, 40)
            .all(|d| a.apply(d).unwrap() == b.apply(d).unwrap());
        assert_eq!(agree, a == b);
        assert_eq!(a, PartialTranslation::max_translation(&s, 1));
    }
}
