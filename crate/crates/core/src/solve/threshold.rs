//! Propagation of answer thresholds from a goal to its subgoals.
//!
//! Each rule guarantees: if a subgoal's value is below its threshold then the
//! enclosing expression is below the enclosing threshold. Pruning on these
//! thresholds therefore only removes derivations whose answers would fall
//! below the query threshold.

use crate::algebra::HedgeId;
use crate::connectives::Implication;
use crate::domain::Level;
use crate::TruthSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdContext {
    /// Body of a rule with this implication and truth value.
    Rule(Implication, Level),
    Hedge(HedgeId),
    ConjG,
    ConjL,
    Disj,
}

/// Threshold for the subgoals under `ctx`, or `None` when no value of the
/// subgoals can reach `t` (the branch is cut).
pub fn next_threshold(space: &TruthSpace, t: Level, ctx: ThresholdContext) -> Option<Level> {
    let n = space.top();
    match ctx {
        ThresholdContext::Rule(Implication::Godel, r) => (r >= t).then_some(t),
        ThresholdContext::Rule(Implication::Lukasiewicz, r) => {
            if t == Level::BOTTOM {
                Some(Level::BOTTOM)
            } else {
                (r >= t).then(|| Level(n.0 + t.0 - r.0))
            }
        }
        ThresholdContext::Hedge(h) => space.inverse().least_preimage_at_least(h, t),
        // C_L(a, b) ≤ min(a, b), so each conjunct must itself reach t.
        ThresholdContext::ConjG | ThresholdContext::ConjL => Some(t),
        // One disjunct may carry the whole value.
        ThresholdContext::Disj => Some(Level::BOTTOM),
    }
}
