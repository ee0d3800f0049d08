use super::Hypergraph;
use crate::error::{Error, Result};

pub(crate) const VC_GUARD: usize = 20;

pub(crate) fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << h.index_of(v)))
        .collect()
}

/// Compresses the bits of `x` selected by `mask` into the low bits.
fn extract(x: u32, mask: u32) -> u32 {
    let (mut out, mut bit, mut m) = (0u32, 0u32, mask);
    while m != 0 {
        let low = m & m.wrapping_neg();
        if x & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        m ^= low;
    }
    out
}

fn shattered(set: u32, masks: &[u32], seen: &mut Vec<bool>) -> bool {
    let k = set.count_ones();
    let need = 1usize << k;
    if masks.len() < need {
        return false;
    }
    seen.clear();
    seen.resize(need, false);
    let mut distinct = 0;
    for &m in masks {
        let t = extract(m & set, set) as usize;
        if !seen[t] {
            seen[t] = true;
            distinct += 1;
            if distinct == need {
                return true;
            }
        }
    }
    false
}

/// Size of the largest shattered vertex set. A set `V'` is shattered when
/// every subset of it, the empty set included, equals `h ∩ V'` for some
/// hyperedge `h`. With no hyperedges nothing is shattered and the result is 0.
pub fn vc_dimension(h: &Hypergraph) -> Result<usize> {
    let n = h.num_vertices();
    if n > VC_GUARD {
        return Err(Error::SizeGuard {
            guard: "vc_dimension universe",
            limit: VC_GUARD,
            actual: n,
        });
    }
    let masks = edge_masks(h);
    let mut seen = Vec::new();
    if !shattered(0, &masks, &mut seen) {
        return Ok(0);
    }
    // Shattered sets are closed under taking subsets, so grow level by level.
    let mut level: Vec<u32> = vec![0];
    let mut best = 0;
    loop {
        let mut next = Vec::new();
        for &s in &level {
            let top = 32 - s.leading_zeros() as usize;
            for v in top..n {
                let t = s | 1 << v;
                let subsets_ok = (0..n)
                    .filter(|&u| t & (1 << u) != 0 && u != v)
                    .all(|u| level.binary_search(&(t & !(1 << u))).is_ok());
                if subsets_ok && shattered(t, &masks, &mut seen) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return Ok(best);
        }
        next.sort_unstable();
        next.dedup();
        best += 1;
        level = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(h: &Hypergraph) -> usize {
        let n = h.num_vertices();
        let masks = edge_masks(h);
        let mut best = 0;
        let mut any = false;
        for set in 0u32..(1 << n) {
            let mut traces: Vec<u32> = masks.iter().map(|m| m & set).collect();
            traces.sort_unstable();
            traces.dedup();
            if traces.len() == 1 << set.count_ones() {
                any = true;
                best = best.max(set.count_ones() as usize);
            }
        }
        if any {
            best
        } else {
            0
        }
    }

    #[test]
    fn nonempty_subsets_of_three() {
        let all: Vec<Vec<u32>> = (1u32..8)
            .map(|m| {
                (0..3)
                    .filter(|b| m & (1 << b) != 0)
                    .map(|b| b + 1)
                    .collect()
            })
            .collect();
        // No hyperedge avoids {1, 2, 3}, so the empty trace is missing.
        assert_eq!(
            vc_dimension(&Hypergraph::from_edges(all.clone())).unwrap(),
            2
        );
        let mut with_outside = all;
        with_outside.push(vec![4]);
        assert_eq!(
            vc_dimension(&Hypergraph::from_edges(with_outside)).unwrap(),
            3
        );
    }

    #[test]
    fn single_hyperedge() {
        let h = Hypergraph::from_edges(vec![vec![1, 2]]);
        assert_eq!(vc_dimension(&h).unwrap(), 0);
        let g = Hypergraph::new([1, 2, 3], vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(vc_dimension(&g).unwrap(), 1);
    }

    #[test]
    fn guard() {
        let h = Hypergraph::from_edges(vec![(0..21).collect()]);
        assert!(matches!(vc_dimension(&h), Err(Error::SizeGuard { .. })));
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            edges in prop::collection::vec(prop::collection::vec(0u32..8, 0..6), 0..30)
        ) {
            let h = Hypergraph::new(0..8, edges).unwrap();
            prop_assert_eq!(vc_dimension(&h).unwrap(), brute(&h));
        }
    }
}
