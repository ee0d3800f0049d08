//! Davenport–Schinzel checks, the greedy pair of subsequences, and
//! alternating runs of face boundary labels.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

pub fn has_immediate_repeat<T: PartialEq>(seq: &[T]) -> bool {
    seq.windows(2).any(|w| w[0] == w[1])
}

/// No subsequence `a, b, a, b` with `a ≠ b`.
pub fn is_abab_free<T: Ord>(seq: &[T]) -> bool {
    let symbols: Vec<&T> = seq.iter().collect::<BTreeSet<_>>().into_iter().collect();
    for a in &symbols {
        for b in &symbols {
            if a == b {
                continue;
            }
            let pattern = [*a, *b, *a, *b];
            let mut k = 0;
            for x in seq {
                if x == pattern[k] {
                    k += 1;
                    if k == 4 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DsReport {
    pub length: usize,
    pub symbols: usize,
    pub bound: usize,
    /// Abab-free without immediate repeats.
    pub admissible: bool,
    /// `length ≤ 2n − 1`; only asserted for admissible sequences.
    pub within_bound: bool,
}

impl DsReport {
    /// False only when an admissible sequence exceeds the bound.
    pub fn holds(&self) -> bool {
        !self.admissible || self.within_bound
    }
}

pub fn ds_bound_check<T: Ord>(seq: &[T]) -> DsReport {
    let symbols = seq.iter().collect::<BTreeSet<_>>().len();
    let bound = (2 * symbols).saturating_sub(1);
    DsReport {
        length: seq.len(),
        symbols,
        bound,
        admissible: !has_immediate_repeat(seq) && is_abab_free(seq),
        within_bound: seq.len() <= bound,
    }
}

const DS_GUARD: usize = 4;

/// Longest admissible sequence over `n` symbols, by exhaustive search, with a
/// witness. Symbols are introduced in order of first appearance.
pub fn ds_max_length(n: usize) -> Result<(usize, Vec<u32>)> {
    if n > DS_GUARD {
        return Err(Error::SizeGuard {
            guard: "ds_max_length symbols",
            limit: DS_GUARD,
            actual: n,
        });
    }
    fn extend(n: u32, seq: &mut Vec<u32>, used: u32, best: &mut Vec<u32>) {
        if seq.len() > best.len() {
            *best = seq.clone();
        }
        for s in 0..(used + 1).min(n) {
            if seq.last() == Some(&s) {
                continue;
            }
            seq.push(s);
            if is_abab_free(seq) {
                extend(n, seq, used.max(s + 1), best);
            }
            seq.pop();
        }
    }
    let mut best = Vec::new();
    extend(n as u32, &mut Vec::new(), 0, &mut best);
    Ok((best.len(), best))
}

/// Greedy pair of subsequences without consecutive repeats: position `j` of
/// each input is kept when it differs from the last element kept from that
/// input. Fails if some index repeats in both inputs at once.
pub fn greedy_subsequences<T: PartialEq + Clone>(s1: &[T], s2: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    if s1.len() != s2.len() || s1.is_empty() {
        return Err(Error::Precondition(
            "sequences must be nonempty and of equal length".into(),
        ));
    }
    if let Some(j) = (0..s1.len() - 1).find(|&j| s1[j] == s1[j + 1] && s2[j] == s2[j + 1]) {
        return Err(Error::Precondition(format!(
            "both sequences repeat at index {j}"
        )));
    }
    let keep = |s: &[T]| {
        let mut out = vec![s[0].clone()];
        for x in &s[1..] {
            if out.last() != Some(x) {
                out.push(x.clone());
            }
        }
        out
    };
    Ok((keep(s1), keep(s2)))
}

/// Maximal stretches of a cyclic label sequence using at most two labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Runs {
    /// The canonical rotation the partition is taken on.
    pub labels: Vec<usize>,
    /// Half-open ranges into `labels`; the last may wrap past the end.
    pub runs: Vec<(usize, usize)>,
    /// Distinct labels.
    pub owners: usize,
}

impl Runs {
    pub fn m(&self) -> usize {
        self.runs.len()
    }

    /// `m ≤ 2|S''| − 1`, with `S''` the distinct labels.
    pub fn within_bound(&self) -> bool {
        self.m() < 2 * self.owners.max(1)
    }
}

fn least_rotation(labels: &[usize]) -> usize {
    let k = labels.len();
    (0..k)
        .min_by(|&a, &b| {
            (0..k)
                .map(|i| labels[(a + i) % k])
                .cmp((0..k).map(|i| labels[(b + i) % k]))
        })
        .unwrap_or(0)
}

/// Partitions a cyclic boundary label sequence into alternating runs:
/// starting from the lexicographically least rotation, each run is the
/// longest stretch using at most two distinct labels. A last run that fits
/// together with the first is merged into it across the wrap.
pub fn alternating_runs(labels: &[usize]) -> Runs {
    let start = least_rotation(labels);
    let rotated: Vec<usize> = labels[start..]
        .iter()
        .chain(&labels[..start])
        .copied()
        .collect();
    let owners = rotated.iter().collect::<BTreeSet<_>>().len();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < rotated.len() {
        let mut seen: Vec<usize> = Vec::with_capacity(2);
        let mut j = i;
        while j < rotated.len() {
            let x = rotated[j];
            if !seen.contains(&x) {
                if seen.len() == 2 {
                    break;
                }
                seen.push(x);
            }
            j += 1;
        }
        runs.push((i, j));
        i = j;
    }
    if runs.len() > 1 {
        let (ls, le) = *runs.last().unwrap();
        let (fs, fe) = runs[0];
        let union: BTreeSet<usize> = rotated[ls..le]
            .iter()
            .chain(&rotated[fs..fe])
            .copied()
            .collect();
        if union.len() <= 2 {
            runs.pop();
            runs[0] = (ls, fe + rotated.len());
        }
    }
    Runs {
        labels: rotated,
        runs,
        owners,
    }
}
