//! Diagonal sums of the braid action, shared by the trace and homological
//! formulations.
//!
//! For each closure label `(0, k_2, …, k_n)` the basis vector is pushed
//! through the generators (last letter first) and the coefficient that comes
//! back to the starting label is kept. Crossing states are capped at
//! `state_bound`, labels at `label_bound`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::rings::{Scalar, Specialization};
use crate::verma::{crossing_coeff, place_outputs, split_inputs, BraidWord};
use crate::BivariateLaurent;

pub(crate) struct TraceSpec<'a, S: Specialization> {
    pub spec: &'a S,
    pub state_bound: Option<u32>,
    pub label_bound: Option<u32>,
    /// Optional basis change: generator entries are multiplied by
    /// `twist(out) / twist(in)`, given as a monomial exponent `[e_q, e_s]`.
    pub twist: Option<&'a (dyn Fn(&[u32]) -> [i32; 2] + Sync)>,
    /// Weight of the diagonal entry at a closure label.
    pub weight: &'a (dyn Fn(&[u32]) -> S::Target + Sync),
}

fn odometer(max: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; max.len()]];
    for p in 1..max.len() {
        let mut next = Vec::with_capacity(out.len() * (max[p] as usize + 1));
        for v in &out {
            for k in 0..=max[p] {
                let mut w = v.clone();
                w[p] = k;
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// `targets[j][p]`: the closure label the strand sitting at position `p`
/// after `j + 1` letters has to reach. Strands keep moving under the
/// remaining letters, so labels are compared along strands, not positions.
fn suffix_targets(start: &[u32], letters: &[i32]) -> Vec<Vec<u32>> {
    let mut t = start.to_vec();
    let mut out = vec![Vec::new(); letters.len()];
    // letters act last-first; walk the steps backwards from the top
    for (j, &l) in letters.iter().enumerate() {
        out[letters.len() - 1 - j] = t.clone();
        let p = l.unsigned_abs() as usize - 1;
        t.swap(p, p + 1);
    }
    out
}

/// Label caps per level (letters applied so far) and position. Following
/// the closed strand from the open end, a label is the running total of
/// what it gained minus what it lost, and must be back at 0 at the end, so
/// it is at most `bound` times the gaining passes behind it and the losing
/// passes ahead of it.
fn arc_caps(braid: &BraidWord, bound: u32, fallback: u32) -> Vec<Vec<u32>> {
    let n = braid.strands();
    let letters: Vec<i32> = braid.letters().iter().rev().copied().collect();
    let len = letters.len();
    let mut visit = vec![vec![None; n]; len + 1];
    let mut gains = Vec::new();
    let (mut pos, mut level) = (0usize, 0usize);
    visit[0][0] = Some(0);
    loop {
        if level == len {
            if pos == 0 {
                break;
            }
            level = 0;
            visit[0][pos] = Some(gains.len());
            continue;
        }
        let l = letters[level];
        let p = l.unsigned_abs() as usize - 1;
        if pos == p || pos == p + 1 {
            gains.push((l > 0) == (pos == p + 1));
            pos = if pos == p { p + 1 } else { p };
        }
        level += 1;
        visit[level][pos] = Some(gains.len());
    }
    let total_loss = gains.iter().filter(|g| !**g).count();
    let mut gained = vec![0usize; gains.len() + 1];
    let mut lost = vec![0usize; gains.len() + 1];
    for (k, &g) in gains.iter().enumerate() {
        gained[k + 1] = gained[k] + g as usize;
        lost[k + 1] = lost[k] + !g as usize;
    }
    visit
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    Some(k) => (bound as usize * gained[*k].min(total_loss - lost[*k])) as u32,
                    None => fallback,
                })
                .collect()
        })
        .collect()
}

fn distance(a: &[u32], b: &[u32]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (*x as i64 - *y as i64).unsigned_abs()).sum()
}

pub(crate) fn diagonal_sum<S: Specialization>(braid: &BraidWord, ts: &TraceSpec<'_, S>) -> S::Target {
    let n = braid.strands();
    let letters = braid.letters();
    let max_label = match (ts.label_bound, ts.state_bound) {
        (Some(l), _) => l,
        (None, Some(b)) => b * letters.len() as u32,
        (None, None) => panic!("an unbounded trace needs a label or state bound"),
    };
    let caps: Vec<Vec<u32>> = match ts.state_bound {
        Some(b) => arc_caps(braid, b, max_label)
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.min(max_label)).collect())
            .collect(),
        None => vec![vec![max_label; n]; letters.len() + 1],
    };
    let starts = odometer(&caps[0]);
    starts
        .par_iter()
        .map(|start| {
            let v = propagate(start, letters, ts, &caps);
            match v.get(start) {
                Some(c) => c.mul_ref(&(ts.weight)(start)),
                None => S::Target::zero(),
            }
        })
        .reduce(S::Target::zero, |a, b| a + b)
}

fn propagate<S: Specialization>(start: &[u32], letters: &[i32], ts: &TraceSpec<'_, S>, caps: &[Vec<u32>]) -> HashMap<Vec<u32>, S::Target> {
    let mut vec: HashMap<Vec<u32>, S::Target> = HashMap::from([(start.to_vec(), <S::Target as One>::one())]);
    let targets = suffix_targets(start, letters);
    for (step, &letter) in letters.iter().rev().enumerate() {
        let remaining = (letters.len() - step - 1) as u64;
        let sign = letter.signum();
        let p = letter.unsigned_abs() as usize - 1;
        let mut next: HashMap<Vec<u32>, S::Target> = HashMap::with_capacity(vec.len() * 2);
        for (label, c) in &vec {
            let (a, b) = split_inputs(sign, label[p], label[p + 1]);
            let top = ts.state_bound.map_or(b, |bd| bd.min(b));
            for i in 0..=top {
                if ts.label_bound.is_some_and(|l| a + i > l) {
                    break;
                }
                let (l, r) = place_outputs(sign, a + i, b - i);
                if l > caps[step + 1][p] || r > caps[step + 1][p + 1] {
                    continue;
                }
                let mut out = label.clone();
                out[p] = l;
                out[p + 1] = r;
                if let Some(bd) = ts.state_bound {
                    if distance(&out, &targets[step]) > 2 * bd as u64 * remaining {
                        continue;
                    }
                }
                let mut coeff = crossing_coeff(sign, a, b, i);
                if let Some(tw) = ts.twist {
                    let (to, from) = (tw(&out), tw(label));
                    coeff = coeff.shift(&[to[0] - from[0], to[1] - from[1]]);
                }
                let coeff = ts.spec.apply(&coeff);
                if coeff.is_zero() {
                    continue;
                }
                let term = c.mul_ref(&coeff);
                next.entry(out).or_insert_with(S::Target::zero).add_assign_ref(&term);
            }
        }
        next.retain(|_, v| !v.is_zero());
        vec = next;
    }
    vec
}

/// `∏_{p ≥ 2} (s q^{-2 k_p})^{e}` as a monomial exponent.
pub(crate) fn pivot_exponent(label: &[u32], e: i32) -> [i32; 2] {
    let tail = &label[1..];
    let sum: i32 = tail.iter().map(|&k| k as i32).sum();
    [-2 * sum * e, tail.len() as i32 * e]
}

pub(crate) fn monomial<S: Specialization>(spec: &S, exp: [i32; 2]) -> S::Target {
    spec.apply(&BivariateLaurent::mono(exp[0], exp[1], 1))
}
