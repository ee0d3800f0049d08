use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::coloring::degeneracy_peel;
use super::vc::{edge_masks, VC_GUARD};
use super::Hypergraph;
use crate::error::{Error, Result};

/// How vertex subsets are chosen when measuring linearity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinearityMode {
    /// Every nonempty subset; needs at most 20 vertices.
    Exhaustive,
    /// The full set, every set left along the degeneracy peel, and `count`
    /// random subsets. The result is a lower bound on the true constant.
    Samples { count: usize, seed: u64 },
}

/// The largest ratio of Delaunay edges to vertices over the examined traces.
#[derive(Clone, Debug, Serialize)]
pub struct LinearityProfile {
    pub mode: LinearityMode,
    /// Delaunay edges of the maximizing trace.
    pub pairs: usize,
    /// Size of the maximizing subset.
    pub size: usize,
    pub argmax: Vec<u32>,
    pub examined: usize,
}

impl LinearityProfile {
    pub fn c(&self) -> f64 {
        if self.size == 0 {
            0.0
        } else {
            self.pairs as f64 / self.size as f64
        }
    }

    /// `⌈c⌉`, computed exactly.
    pub fn c_ceil(&self) -> usize {
        if self.size == 0 {
            0
        } else {
            self.pairs.div_ceil(self.size)
        }
    }

    /// Whether `value ≤ 2c + 1`, compared exactly.
    pub fn within_two_c_plus_one(&self, value: usize) -> bool {
        value * self.size.max(1) <= 2 * self.pairs + self.size.max(1)
    }
}

fn delaunay_count_masked(masks: &[u32], set: u32, seen: &mut HashSet<u32>) -> usize {
    seen.clear();
    for &m in masks {
        let t = m & set;
        if t.count_ones() == 2 {
            seen.insert(t);
        }
    }
    seen.len()
}

/// Measures `c = max |E_2(trace(H, V'))| / |V'|` over the subsets chosen by
/// `mode`.
pub fn linearity_profile(h: &Hypergraph, mode: LinearityMode) -> Result<LinearityProfile> {
    let n = h.num_vertices();
    let mut best = LinearityProfile {
        mode,
        pairs: 0,
        size: n.min(1),
        argmax: h.universe().iter().take(1).copied().collect(),
        examined: 0,
    };
    fn consider(
        best: &mut LinearityProfile,
        pairs: usize,
        size: usize,
        subset: &dyn Fn() -> Vec<u32>,
    ) {
        best.examined += 1;
        if size > 0 && pairs * best.size > best.pairs * size {
            best.pairs = pairs;
            best.size = size;
            best.argmax = subset();
        }
    }
    match mode {
        LinearityMode::Exhaustive => {
            if n > VC_GUARD {
                return Err(Error::SizeGuard {
                    guard: "exhaustive linearity universe",
                    limit: VC_GUARD,
                    actual: n,
                });
            }
            let masks: Vec<u32> = edge_masks(h)
                .into_iter()
                .filter(|m| m.count_ones() >= 2)
                .collect();
            let mut seen = HashSet::new();
            for set in 1u32..(1u32 << n) {
                let pairs = delaunay_count_masked(&masks, set, &mut seen);
                let universe = h.universe();
                consider(&mut best, pairs, set.count_ones() as usize, &|| {
                    (0..n)
                        .filter(|&i| set & (1 << i) != 0)
                        .map(|i| universe[i])
                        .collect()
                });
            }
        }
        LinearityMode::Samples { count, seed } => {
            let peel = degeneracy_peel(h);
            for (i, &pairs) in peel.remaining_edges.iter().enumerate() {
                let order = &peel.order;
                consider(&mut best, pairs, n - i, &|| {
                    let mut s = order[i..].to_vec();
                    s.sort_unstable();
                    s
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                if n == 0 {
                    break;
                }
                let k = rng.gen_range(1..=n);
                let mut subset: Vec<u32> = sample(&mut rng, n, k)
                    .into_iter()
                    .map(|i| h.universe()[i])
                    .collect();
                subset.sort_unstable();
                let pairs = h.trace(&subset).delaunay_of().len();
                consider(&mut best, pairs, subset.len(), &|| subset.clone());
            }
        }
    }
    Ok(best)
}

/// `|E_{≤k}|`: hyperedges with at most `k` vertices.
pub fn count_hyperedges_le_k(h: &Hypergraph, k: usize) -> usize {
    h.edges().iter().filter(|e| e.len() <= k).count()
}

/// Pairs of vertices lying together in some hyperedge of size at most `k`.
pub fn k_good_pairs(h: &Hypergraph, k: usize) -> usize {
    let mut pairs = HashSet::new();
    for e in h.edges().iter().filter(|e| e.len() <= k) {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    pairs.len()
}

const CLIQUE_VERTEX_GUARD: usize = 60;
const CLIQUE_SIZE_GUARD: usize = 6;

/// Number of copies of `K_h` in the simple graph on `vertices` with `edges`.
pub fn count_cliques(vertices: &[u32], edges: &[(u32, u32)], h: usize) -> Result<u64> {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() > CLIQUE_VERTEX_GUARD {
        return Err(Error::SizeGuard {
            guard: "clique count vertices",
            limit: CLIQUE_VERTEX_GUARD,
            actual: vs.len(),
        });
    }
    if h > CLIQUE_SIZE_GUARD {
        return Err(Error::SizeGuard {
            guard: "clique size",
            limit: CLIQUE_SIZE_GUARD,
            actual: h,
        });
    }
    let idx = |v: u32| {
        vs.binary_search(&v)
            .map_err(|_| Error::Precondition(format!("edge endpoint {v} is not a vertex")))
    };
    let mut adj = vec![0u64; vs.len()];
    for &(a, b) in edges {
        let (i, j) = (idx(a)?, idx(b)?);
        if i != j {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    if h == 0 {
        return Ok(1);
    }
    // Extend cliques only by higher-indexed vertices so each is counted once.
    fn extend(adj: &[u64], cand: u64, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let higher = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
            total += extend(adj, adj[v] & cand & higher, left - 1);
        }
        total
    }
    let all = if vs.len() == 64 {
        !0
    } else {
        (1u64 << vs.len()) - 1
    };
    Ok(extend(&adj, all, h))
}

/// `t_{c,h} = (2c)^{h−1}/h!`, the per-vertex bound on copies of `K_h` in a
/// `c`-linear graph.
pub fn t_ch(c: f64, h: usize) -> f64 {
    (2.0 * c).powi(h as i32 - 1) / factorial(h)
}

fn factorial(h: usize) -> f64 {
    (1..=h).map(|i| i as f64).product()
}

/// `b_{c,k} = 1 + Σ_{h=2}^{k} (2eck)^{h−1}/h!`, the per-vertex bound on
/// `|E_{≤k}|` for `c`-linear hypergraphs.
pub fn b_ck(c: f64, k: usize) -> f64 {
    let x = 2.0 * std::f64::consts::E * c * k as f64;
    1.0 + (2..=k)
        .map(|h| x.powi(h as i32 - 1) / factorial(h))
        .sum::<f64>()
}
