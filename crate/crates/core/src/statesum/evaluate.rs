use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_traits::{One, Zero};

use super::diagram::{Event, Orientation, TangleDiagram};
use super::walk::{traverse, Step};
use crate::error::{Error, Result};
use crate::traces::TruncatedSeries;
use crate::verma::crossing_coeff;
use crate::BivariateLaurent;

/// One state index per crossing, in diagram (bottom to top) order.
pub type StateAssignment = Vec<u32>;

/// The walk with crossings renumbered `0..N` in diagram order.
struct Plan {
    steps: Vec<PlanStep>,
    signs: Vec<i32>,
}

enum PlanStep {
    /// `a`: the strand that gains `i`.
    Cross { crossing: usize, on_a: bool },
    /// Factor `s q^{-2ε}` (cap) or `s^{-1} q^{2ε}` (cup) when run left to right.
    Turn { cap: bool, orientation: Orientation },
}

fn plan(d: &TangleDiagram) -> Result<Plan> {
    let mut index = vec![usize::MAX; d.events().len()];
    let mut signs = Vec::new();
    for (k, ev) in d.events().iter().enumerate() {
        if let Event::Crossing { sign, .. } = ev {
            index[k] = signs.len();
            signs.push(*sign);
        }
    }
    let steps = traverse(d)?
        .into_iter()
        .map(|s| match s {
            Step::Cross { event, from_left } => {
                let c = index[event];
                // positive: a enters on the right; negative: on the left
                PlanStep::Cross { crossing: c, on_a: (signs[c] > 0) != from_left }
            }
            Step::Turn { event, orientation } => {
                PlanStep::Turn { cap: matches!(d.events()[event], Event::Cap { .. }), orientation }
            }
        })
        .collect();
    Ok(Plan { steps, signs })
}

fn turn_factor(cap: bool, orientation: Orientation, label: u32) -> Option<BivariateLaurent> {
    if orientation == Orientation::L {
        return None;
    }
    let e = label as i32;
    Some(if cap { BivariateLaurent::mono(-2 * e, 1, 1) } else { BivariateLaurent::mono(2 * e, -1, 1) })
}

/// `D(i_1, …, i_N)` without the quadratic prefactor. Labels start at 0 at
/// the bottom; the `a` strand of a crossing gains `i`, the other loses it.
pub fn evaluate_state(d: &TangleDiagram, state: &[u32]) -> Result<BivariateLaurent> {
    let plan = plan(d)?;
    if state.len() != plan.signs.len() {
        return Err(Error::Parameter(format!("{} state indices for {} crossings", state.len(), plan.signs.len())));
    }
    let mut label: i64 = 0;
    let mut a_in = vec![0u32; state.len()];
    let mut b_in = vec![0u32; state.len()];
    let mut value = BivariateLaurent::one();
    for (k, step) in plan.steps.iter().enumerate() {
        match *step {
            PlanStep::Cross { crossing, on_a } => {
                let i = state[crossing] as i64;
                if on_a {
                    a_in[crossing] = label as u32;
                    label += i;
                } else {
                    b_in[crossing] = label as u32;
                    label -= i;
                }
                if label < 0 {
                    return Err(Error::InconsistentState { event: k });
                }
            }
            PlanStep::Turn { cap, orientation } => {
                if let Some(f) = turn_factor(cap, orientation, label as u32) {
                    value = &value * &f;
                }
            }
        }
    }
    // the strand leaving at the top carries label 0
    if label != 0 {
        return Err(Error::InconsistentState { event: plan.steps.len() });
    }
    for (c, &sign) in plan.signs.iter().enumerate() {
        value = &value * &crossing_coeff(sign, a_in[c], b_in[c], state[c]);
    }
    Ok(value)
}

/// `Σ D(i)` over consistent states with every `i_k ≤ bound`. The sum is
/// carried along the strand: partial states that agree on the current label
/// and on the crossings passed only once so far are merged, so shared
/// prefixes are multiplied out once.
pub fn f_infinity_statesum(d: &TangleDiagram, bound: u32) -> Result<TruncatedSeries> {
    let plan = plan(d)?;
    // losing passes still ahead of each step; a label above `bound` times
    // that can never return to 0
    let mut losses_ahead = vec![0u32; plan.steps.len() + 1];
    for k in (0..plan.steps.len()).rev() {
        let lose = matches!(plan.steps[k], PlanStep::Cross { on_a: false, .. });
        losses_ahead[k] = losses_ahead[k + 1] + lose as u32;
    }
    // open[c] = (i, first input label) while crossing c has been passed once
    type Key = (u32, Vec<Option<(u32, u32)>>);
    let mut layer: HashMap<Key, BivariateLaurent> =
        HashMap::from([((0, vec![None; plan.signs.len()]), BivariateLaurent::one())]);
    for (k, step) in plan.steps.iter().enumerate() {
        let cap = bound * losses_ahead[k + 1];
        let mut next: HashMap<Key, BivariateLaurent> = HashMap::with_capacity(layer.len());
        let mut push = |key: Key, v: BivariateLaurent| {
            if key.0 > cap || v.is_zero() {
                return;
            }
            match next.entry(key) {
                Entry::Occupied(mut e) => *e.get_mut() += &v,
                Entry::Vacant(e) => {
                    e.insert(v);
                }
            }
        };
        for ((label, open), acc) in layer {
            match *step {
                PlanStep::Turn { cap, orientation } => {
                    let v = match turn_factor(cap, orientation, label) {
                        Some(f) => &acc * &f,
                        None => acc,
                    };
                    push((label, open), v);
                }
                PlanStep::Cross { crossing, on_a } => match open[crossing] {
                    Some((i, first)) => {
                        if !on_a && label < i {
                            continue;
                        }
                        let (a, b, out) = if on_a { (label, first, label + i) } else { (first, label, label - i) };
                        let c = crossing_coeff(plan.signs[crossing], a, b, i);
                        let mut open = open;
                        open[crossing] = None;
                        push((out, open), &acc * &c);
                    }
                    None => {
                        let top = if on_a { bound } else { bound.min(label) };
                        for i in 0..=top {
                            let out = if on_a { label + i } else { label - i };
                            let mut o = open.clone();
                            o[crossing] = Some((i, label));
                            push((out, o), acc.clone());
                        }
                    }
                },
            }
        }
        layer = next;
    }
    let value = layer.into_values().fold(BivariateLaurent::zero(), |t, v| t + v);
    Ok(TruncatedSeries { value, state_bound: bound, writhe: d.writhe(), strands: 0, normalized: false })
}
