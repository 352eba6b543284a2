//! Numerical semigroups: finitely generated submonoids of the non-negative
//! integers whose generators have gcd 1, so that the difference group is ℤ.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    generators: Vec<i64>,
    gaps: Vec<i64>,
    frobenius: i64,
}

/// A numerical semigroup `S ⊂ ℤ₊`.
///
/// Cheap to clone; two values compare equal iff they denote the same set
/// (generators are reduced to the minimal generating set on construction).
#[derive(Clone)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// Gaps are sieved up to `max · min` of the generators, which bounds the
    /// Frobenius number from above.
    pub fn build(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = generators.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let mut gens: Vec<i64> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let gcd = gens.iter().fold(0i64, |acc, g| acc.gcd(g));
        if gcd != 1 {
            return Err(Error::GcdNotOne(gcd));
        }

        let bound = gens[0] * gens[gens.len() - 1];
        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for n in 1..=bound as usize {
            member[n] = gens.iter().any(|&g| g as usize <= n && member[n - g as usize]);
        }
        let gaps: Vec<i64> = (1..=bound).filter(|&n| !member[n as usize]).collect();
        let frobenius = gaps.last().copied().unwrap_or(-1);

        // A generator is redundant when it splits into two non-zero members.
        let minimal: Vec<i64> = gens
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|a| member[a as usize] && member[(g - a) as usize]))
            .collect();

        Ok(Self {
            inner: Arc::new(Inner {
                generators: minimal,
                gaps,
                frobenius,
            }),
        })
    }

    /// The non-negative integers.
    pub fn naturals() -> Self {
        Self::build(&[1]).expect("{1} generates ℤ₊")
    }

    pub fn generators(&self) -> &[i64] {
        &self.inner.generators
    }

    pub fn gaps(&self) -> &[i64] {
        &self.inner.gaps
    }

    /// Largest integer outside `S`, or −1 when `S = ℤ₊`.
    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    /// Every `n ≥ conductor` is a member.
    pub fn conductor(&self) -> i64 {
        self.inner.frobenius + 1
    }

    pub fn max_generator(&self) -> i64 {
        *self.inner.generators.last().expect("non-empty")
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.inner.frobenius {
            true
        } else {
            self.inner.gaps.binary_search(&n).is_err()
        }
    }

    pub fn ensure_member(&self, n: i64) -> Result<()> {
        if self.contains(n) {
            Ok(())
        } else {
            Err(Error::NotAMember(n))
        }
    }

    /// The `i`-th smallest member (`s_0 = 0`).
    pub fn element_at(&self, i: usize) -> i64 {
        // Members in [0, conductor) number conductor − #gaps.
        let small = (self.conductor() as usize) - self.inner.gaps.len();
        if i >= small {
            return self.conductor() + (i - small) as i64;
        }
        let mut seen = 0;
        for n in 0..self.conductor() {
            if self.contains(n) {
                if seen == i {
                    return n;
                }
                seen += 1;
            }
        }
        unreachable!("index {i} below the small-member count")
    }

    /// Position of a member in the increasing enumeration.
    pub fn position(&self, n: i64) -> Option<usize> {
        if !self.contains(n) {
            return None;
        }
        let gaps_below = self.inner.gaps.partition_point(|&g| g < n);
        Some(n as usize - gaps_below)
    }

    /// Members in `[lo, hi)`, increasing.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..hi).filter(move |&n| self.contains(n))
    }

    /// First member `≥ n`.
    pub fn next_member(&self, n: i64) -> i64 {
        (n.max(0)..).find(|&m| self.contains(m)).expect("S is cofinite")
    }

    /// The natural quasi-order: `a ≼ b` iff `b − a ∈ S`.
    pub fn natural_below(&self, a: i64, b: i64) -> Result<bool> {
        self.ensure_member(a)?;
        self.ensure_member(b)?;
        Ok(self.contains(b - a))
    }

    /// Whether the natural order is total.
    ///
    /// Checked pairwise on all members up to `frobenius + max generator`; for a
    /// numerical semigroup the answer must coincide with `gaps = ∅`.
    pub fn is_totally_ordered(&self) -> bool {
        let bound = self.frobenius() + self.max_generator();
        let members: Vec<i64> = self.members_in(0, bound + 1).collect();
        let pairwise = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| self.contains(b - a) || self.contains(a - b))
        });
        assert_eq!(
            pairwise,
            self.inner.gaps.is_empty(),
            "totality must coincide with the absence of gaps"
        );
        pairwise
    }

    /// Multipliers `m ∈ [0, bound]` with `m·g ∈ target` for every generator
    /// `g` of `self`. Additive maps `S₁ → S₂` extend to ℤ, hence are exactly
    /// these multiplications; `m = 0` is the trivial morphism.
    pub fn morphism_multipliers(&self, target: &NumericalSemigroup, bound: i64) -> Vec<i64> {
        (0..=bound.max(-1))
            .filter(|&m| self.generators().iter().all(|&g| target.contains(m * g)))
            .collect()
    }

    /// All `m` with `m·S = S`. Always `{1}` for a numerical semigroup.
    pub fn automorphism_multipliers(&self) -> Vec<i64> {
        // m·S = S forces m to divide the smallest positive member.
        let smallest = self.element_at(1);
        let window = self.conductor() + 2 * self.max_generator() + 1;
        let result: Vec<i64> = (1..=smallest)
            .filter(|&m| {
                let into = self.generators().iter().all(|&g| self.contains(m * g));
                let onto = self
                    .members_in(0, window)
                    .all(|n| n % m == 0 && self.contains(n / m));
                into && onto
            })
            .collect();
        assert_eq!(result, vec![1], "Aut(S) of a numerical semigroup is trivial");
        result
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.generators == other.inner.generators
    }
}

impl Eq for NumericalSemigroup {}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return Ordering::Equal;
        }
        self.inner.generators.cmp(&other.inner.generators)
    }
}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.generators.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Membership by enumerating non-negative combinations directly.
    fn brute_members(gens: &[i64], limit: i64) -> Vec<i64> {
        let mut reach = std::collections::BTreeSet::from([0i64]);
        let mut frontier = vec![0i64];
        while let Some(n) = frontier.pop() {
            for &g in gens {
                let m = n + g;
                if m <= limit && reach.insert(m) {
                    frontier.push(m);
                }
            }
        }
        reach.into_iter().collect()
    }

    #[test]
    fn build_examples() {
        let z = NumericalSemigroup::build(&[1]).unwrap();
        assert!(z.gaps().is_empty());
        assert_eq!(z.frobenius(), -1);

        let s = NumericalSemigroup::build(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.frobenius(), 1);

        let t = NumericalSemigroup::build(&[3, 5]).unwrap();
        assert_eq!(t.gaps(), &[1, 2, 4, 7]);
        assert_eq!(t.frobenius(), 7);
        let members = brute_members(&[3, 5], 15);
        let gaps: Vec<i64> = (0..=15).filter(|n| !members.contains(n)).collect();
        assert_eq!(gaps, vec![1, 2, 4, 7]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(NumericalSemigroup::build(&[]).unwrap_err(), Error::EmptyGenerators);
        assert_eq!(NumericalSemigroup::build(&[2, 4]).unwrap_err(), Error::GcdNotOne(2));
        assert_eq!(NumericalSemigroup::build(&[0, 1]).unwrap_err(), Error::NonPositiveGenerator(0));
    }

    #[test]
    fn generators_are_minimised() {
        let s = NumericalSemigroup::build(&[4, 2, 3, 5]).unwrap();
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s, NumericalSemigroup::build(&[2, 3]).unwrap());
    }

    #[test]
    fn contains_and_enumeration() {
        let s = NumericalSemigroup::build(&[2, 3]).unwrap();
        assert!(s.contains(0));
        assert!(!s.contains(1));
        assert!(!s.contains(-2));
        assert_eq!(s.element_at(0), 0);
        assert_eq!(s.element_at(1), 2);
        let t = NumericalSemigroup::build(&[3, 5]).unwrap();
        assert!(!t.contains(7));
        assert_eq!(t.element_at(4), 8);
        assert_eq!(t.element_at(5), 9);
        assert_eq!(t.position(9), Some(5));
        assert_eq!(t.position(7), None);
    }

    #[test]
    fn natural_order_examples() {
        let s = NumericalSemigroup::build(&[2, 3]).unwrap();
        assert!(s.natural_below(0, 5).unwrap());
        assert!(!s.natural_below(2, 3).unwrap());
        assert!(s.natural_below(2, 7).unwrap());
        assert_eq!(s.natural_below(1, 3).unwrap_err(), Error::NotAMember(1));
    }

    #[test]
    fn totality_examples() {
        assert!(NumericalSemigroup::naturals().is_totally_ordered());
        assert!(!NumericalSemigroup::build(&[2, 3]).unwrap().is_totally_ordered());
        assert!(!NumericalSemigroup::build(&[2, 5]).unwrap().is_totally_ordered());
    }

    #[test]
    fn totality_iff_no_gaps_small_frobenius() {
        // Every numerical semigroup with Frobenius number ≤ 30 is generated by
        // its members in [1, 61]; sweep generator pairs and triples instead.
        for a in 1..=12i64 {
            for b in a..=12 {
                for c in [None, Some(b + 1), Some(b + 2)] {
                    let mut gens = vec![a, b];
                    gens.extend(c);
                    let Ok(s) = NumericalSemigroup::build(&gens) else { continue };
                    if s.frobenius() > 30 {
                        continue;
                    }
                    assert_eq!(s.is_totally_ordered(), s.gaps().is_empty());
                }
            }
        }
    }

    #[test]
    fn morphism_multiplier_examples() {
        let z = NumericalSemigroup::naturals();
        let s = NumericalSemigroup::build(&[2, 3]).unwrap();
        assert_eq!(z.morphism_multipliers(&z, 5), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(s.morphism_multipliers(&z, 4), vec![0, 1, 2, 3, 4]);
        assert_eq!(z.morphism_multipliers(&s, 4), vec![0, 2, 3, 4]);
    }

    #[test]
    fn automorphisms_are_trivial() {
        for gens in [&[1][..], &[2, 3], &[3, 5], &[4, 6, 9]] {
            let s = NumericalSemigroup::build(gens).unwrap();
            assert_eq!(s.automorphism_multipliers(), vec![1]);
        }
    }

    fn arb_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
        prop::collection::vec(1i64..12, 1..4)
            .prop_filter_map("gcd 1", |g| NumericalSemigroup::build(&g).ok())
    }

    proptest! {
        #[test]
        fn sieve_matches_brute_force(gens in prop::collection::vec(1i64..10, 1..4)) {
            if let Ok(s) = NumericalSemigroup::build(&gens) {
                let limit = 100;
                let members = brute_members(&gens, limit);
                for n in 0..=limit {
                    prop_assert_eq!(s.contains(n), members.binary_search(&n).is_ok());
                }
            }
        }

        #[test]
        fn closed_under_addition(s in arb_semigroup(), i in 0usize..40, j in 0usize..40) {
            let (a, b) = (s.element_at(i), s.element_at(j));
            prop_assert!(s.contains(a + b));
        }

        #[test]
        fn natural_order_is_an_order(s in arb_semigroup(), i in 0usize..20, j in 0usize..20, k in 0usize..20) {
            let (a, b, c) = (s.element_at(i), s.element_at(j), s.element_at(k));
            prop_assert!(s.natural_below(a, a).unwrap());
            if s.natural_below(a, b).unwrap() && s.natural_below(b, c).unwrap() {
                prop_assert!(s.natural_below(a, c).unwrap());
            }
            if s.natural_below(a, b).unwrap() && s.natural_below(b, a).unwrap() {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn enumeration_is_strictly_increasing(s in arb_semigroup()) {
            let listed: Vec<i64> = (0..60).map(|i| s.element_at(i)).collect();
            prop_assert!(listed.windows(2).all(|w| w[0] < w[1]));
            let direct: Vec<i64> = s.members_in(0, listed[59] + 1).collect();
            prop_assert_eq!(&listed, &direct);
        }
    }
}
