//! Cycle indices for species carrying an action of the two-element group.
//!
//! A `TwoGroupCycleIndex` stores one ordinary cycle index per group element
//! (the identity `e` and the involution `τ`). The plethysm rule follows the
//! group structure: substituting into `p[m]` consults the slot of `τ^m`, so
//! odd indices draw on the `τ` slot and even indices on the `e` slot.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cycle_index::{plethysm_with, CycleIndex, SubstitutionTable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoGroupCycleIndex {
    at_e: CycleIndex,
    at_tau: CycleIndex,
}

impl TwoGroupCycleIndex {
    /// Pairs two slots; both must share a truncation.
    pub fn new(at_e: CycleIndex, at_tau: CycleIndex) -> Self {
        assert_eq!(
            at_e.truncation(),
            at_tau.truncation(),
            "both slots must share a truncation"
        );
        TwoGroupCycleIndex { at_e, at_tau }
    }

    /// Lifts an ordinary cycle index along the trivial action: both slots
    /// become `f`.
    pub fn lift_trivial(f: &CycleIndex) -> Self {
        TwoGroupCycleIndex { at_e: f.clone(), at_tau: f.clone() }
    }

    pub fn at_e(&self) -> &CycleIndex {
        &self.at_e
    }

    pub fn at_tau(&self) -> &CycleIndex {
        &self.at_tau
    }

    pub fn truncation(&self) -> u32 {
        self.at_e.truncation()
    }

    pub fn truncated(&self, truncation: u32) -> TwoGroupCycleIndex {
        TwoGroupCycleIndex {
            at_e: self.at_e.truncated(truncation),
            at_tau: self.at_tau.truncated(truncation),
        }
    }

    /// Group-equivariant plethysm `self ∘ g`. The `e` slot composes
    /// ordinarily; in the `τ` slot, `p[m]` is replaced by the index-scaled
    /// copy of `g`'s slot at `τ^m`.
    pub fn plethysm(&self, g: &TwoGroupCycleIndex, truncation: u32) -> Result<TwoGroupCycleIndex> {
        debug_assert!(truncation <= self.truncation().min(g.truncation()));
        if !g.at_e.constant_term().is_zero() || !g.at_tau.constant_term().is_zero() {
            return Err(Error::ConstantTermInComposition);
        }
        let at_e = self.at_e.plethysm(&g.at_e, truncation)?;
        let table = SubstitutionTable::from_choice(
            |part| {
                if part % 2 == 1 {
                    g.at_tau.clone()
                } else {
                    g.at_e.clone()
                }
            },
            truncation,
        );
        let at_tau = plethysm_with(&self.at_tau, &table, truncation);
        Ok(TwoGroupCycleIndex { at_e, at_tau })
    }

    /// Cycle index of the quotient under the group action: the average of
    /// the two slots.
    pub fn quotient(&self) -> CycleIndex {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        self.at_e.add(&self.at_tau).scale(&half)
    }

    /// Serializes both slots, each tagged and in the ordinary cache format.
    pub fn to_cache_text(&self) -> String {
        format!(
            "slot=e\n{}slot=tau\n{}",
            self.at_e.to_cache_text(),
            self.at_tau.to_cache_text()
        )
    }

    pub fn from_cache_text(text: &str) -> Result<TwoGroupCycleIndex> {
        let rest = text
            .strip_prefix("slot=e\n")
            .ok_or_else(|| Error::Cache("missing slot=e header".into()))?;
        let (e_text, tau_text) = rest
            .split_once("slot=tau\n")
            .ok_or_else(|| Error::Cache("missing slot=tau header".into()))?;
        let at_e = CycleIndex::from_cache_text(e_text)?;
        let at_tau = CycleIndex::from_cache_text(tau_text)?;
        if at_e.truncation() != at_tau.truncation() {
            return Err(Error::Cache("slot truncations differ".into()));
        }
        Ok(TwoGroupCycleIndex { at_e, at_tau })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sample(truncation: u32) -> CycleIndex {
        CycleIndex::from_terms(
            truncation,
            vec![
                (Partition::single(1), rat(2, 1)),
                (Partition::new(vec![1, 1]), rat(1, 3)),
                (Partition::single(2), rat(-1, 2)),
            ],
        )
    }

    #[test]
    fn lift_copies_both_slots() {
        let p1 = CycleIndex::p1(3);
        let lifted = TwoGroupCycleIndex::lift_trivial(&p1);
        assert_eq!(lifted.at_e(), &p1);
        assert_eq!(lifted.at_tau(), &p1);

        let zero = CycleIndex::zero(3);
        let lifted_zero = TwoGroupCycleIndex::lift_trivial(&zero);
        assert!(lifted_zero.at_e().is_zero());
        assert!(lifted_zero.at_tau().is_zero());
    }

    #[test]
    fn quotient_of_lift_is_identity() {
        let f = sample(4);
        let lifted = TwoGroupCycleIndex::lift_trivial(&f);
        assert_eq!(lifted.quotient(), f);
    }

    #[test]
    fn quotient_averages_slots() {
        let f = TwoGroupCycleIndex::new(
            CycleIndex::monomial(Partition::single(1), rat(2, 1), 2),
            CycleIndex::zero(2),
        );
        assert_eq!(f.quotient(), CycleIndex::p1(2));
    }

    #[test]
    fn degenerate_action_composes_ordinarily() {
        let f = TwoGroupCycleIndex::new(sample(6), sample(6));
        let g = TwoGroupCycleIndex::lift_trivial(&CycleIndex::from_terms(
            6,
            vec![
                (Partition::single(1), rat(1, 1)),
                (Partition::single(2), rat(1, 1)),
            ],
        ));
        let composed = f.plethysm(&g, 6).unwrap();
        assert_eq!(composed.at_tau(), composed.at_e());
        assert_eq!(
            composed.at_e(),
            &sample(6).plethysm(g.at_e(), 6).unwrap()
        );
    }

    #[test]
    fn tau_slot_uses_parity() {
        // f = p[2] at tau: even index, so the e slot of g is consulted
        let f = TwoGroupCycleIndex::lift_trivial(&CycleIndex::monomial(
            Partition::single(2),
            rat(1, 1),
            6,
        ));
        let g = TwoGroupCycleIndex::new(
            CycleIndex::p1(6),
            CycleIndex::monomial(Partition::single(1), rat(3, 1), 6),
        );
        let composed = f.plethysm(&g, 6).unwrap();
        // tau slot: p[2] -> (g at e)(p[2], p[4], ...) = p[2]
        assert_eq!(
            composed.at_tau(),
            &CycleIndex::monomial(Partition::single(2), rat(1, 1), 6)
        );

        // f = p[3] at tau: odd index, so the tau slot of g is consulted
        let f3 = TwoGroupCycleIndex::lift_trivial(&CycleIndex::monomial(
            Partition::single(3),
            rat(1, 1),
            6,
        ));
        let composed3 = f3.plethysm(&g, 6).unwrap();
        assert_eq!(
            composed3.at_tau(),
            &CycleIndex::monomial(Partition::single(3), rat(3, 1), 6)
        );
    }

    #[test]
    fn plethysm_rejects_constant_terms() {
        let f = TwoGroupCycleIndex::lift_trivial(&CycleIndex::p1(3));
        let g = TwoGroupCycleIndex::lift_trivial(&CycleIndex::one(3));
        assert_eq!(f.plethysm(&g, 3), Err(Error::ConstantTermInComposition));
    }

    #[test]
    fn cache_text_round_trips() {
        let f = TwoGroupCycleIndex::new(sample(4), sample(4).scale(&rat(-2, 5)));
        let text = f.to_cache_text();
        let back = TwoGroupCycleIndex::from_cache_text(&text).unwrap();
        assert_eq!(back, f);
        assert!(text.starts_with("slot=e\ntruncation=4\n"));
        assert!(text.contains("slot=tau\ntruncation=4\n"));
    }
}
