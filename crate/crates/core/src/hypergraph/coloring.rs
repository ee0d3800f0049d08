use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{Coloring, Hypergraph, Verdict};
use crate::error::{Error, Result};

/// A degeneracy peel of the Delaunay graph of shrinking traces.
#[derive(Clone, Debug, Serialize)]
pub struct Peel {
    /// Vertices in removal order.
    pub order: Vec<u32>,
    /// Delaunay degree of each vertex when it was removed.
    pub degrees: Vec<usize>,
    /// Delaunay neighbors of each vertex when it was removed.
    pub neighbors: Vec<Vec<u32>>,
    /// Delaunay edge count of the trace on the remaining vertices, before
    /// each removal.
    pub remaining_edges: Vec<usize>,
}

impl Peel {
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// The vertex sets still present before each removal.
    pub fn remaining_sets(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.order.len()).map(move |i| &self.order[i..])
    }
}

struct PeelState {
    adj: Vec<BTreeSet<usize>>,
    support: HashMap<(usize, usize), u32>,
    queue: BTreeSet<(usize, usize)>,
    alive: Vec<bool>,
}

impl PeelState {
    fn set_degree(&mut self, v: usize, old: usize) {
        if self.alive[v] {
            self.queue.remove(&(old, v));
            self.queue.insert((self.adj[v].len(), v));
        }
    }

    fn add_pair(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        let s = self.support.entry(key).or_insert(0);
        *s += 1;
        if *s == 1 {
            let (da, db) = (self.adj[a].len(), self.adj[b].len());
            self.adj[a].insert(b);
            self.adj[b].insert(a);
            self.set_degree(a, da);
            self.set_degree(b, db);
        }
    }

    fn remove_pair(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        let s = self.support.get_mut(&key).expect("pair is supported");
        *s -= 1;
        if *s == 0 {
            self.support.remove(&key);
            let (da, db) = (self.adj[a].len(), self.adj[b].len());
            self.adj[a].remove(&b);
            self.adj[b].remove(&a);
            self.set_degree(a, da);
            self.set_degree(b, db);
        }
    }
}

/// Repeatedly removes a vertex of minimum degree in the Delaunay graph of the
/// trace on the remaining vertices, ties broken by smallest id.
pub fn degeneracy_peel(h: &Hypergraph) -> Peel {
    let n = h.num_vertices();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| h.index_of(v)).collect())
        .collect();
    let mut incident = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let mut alive_count: Vec<usize> = edges.iter().map(Vec::len).collect();
    let mut st = PeelState {
        adj: vec![BTreeSet::new(); n],
        support: HashMap::new(),
        queue: (0..n).map(|v| (0, v)).collect(),
        alive: vec![true; n],
    };
    for e in &edges {
        if e.len() == 2 {
            st.add_pair(e[0], e[1]);
        }
    }
    let mut peel = Peel {
        order: Vec::with_capacity(n),
        degrees: Vec::with_capacity(n),
        neighbors: Vec::with_capacity(n),
        remaining_edges: Vec::with_capacity(n),
    };
    while let Some((deg, v)) = st.queue.pop_first() {
        peel.order.push(h.universe()[v]);
        peel.degrees.push(deg);
        peel.remaining_edges.push(st.support.len());
        peel.neighbors
            .push(st.adj[v].iter().map(|&u| h.universe()[u]).collect());
        st.alive[v] = false;
        for &ei in &incident[v] {
            let before = alive_count[ei];
            alive_count[ei] -= 1;
            if before == 2 || before == 3 {
                let rest: Vec<usize> = edges[ei].iter().copied().filter(|&u| st.alive[u]).collect();
                if before == 2 {
                    st.remove_pair(v, rest[0]);
                } else {
                    st.add_pair(rest[0], rest[1]);
                }
            }
        }
    }
    peel
}

/// Proper coloring by reverse peel order: each vertex takes the smallest
/// color absent from its Delaunay neighbors at removal time. Every hyperedge
/// of size at least two passes through size two while peeling, so the result
/// is always proper, and it uses at most `1 + max peel degree` colors.
pub fn degeneracy_color(h: &Hypergraph) -> Coloring {
    color_from_peel(&degeneracy_peel(h))
}

pub(crate) fn color_from_peel(peel: &Peel) -> Coloring {
    let mut colors: BTreeMap<u32, u32> = BTreeMap::new();
    for (v, nb) in peel.order.iter().zip(&peel.neighbors).rev() {
        let used: BTreeSet<u32> = nb.iter().filter_map(|u| colors.get(u).copied()).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colors.insert(*v, c);
    }
    Coloring { colors }
}

/// Every hyperedge of size at least two sees two colors.
pub fn check_proper(h: &Hypergraph, coloring: &Coloring) -> Verdict {
    for e in h.edges().iter().filter(|e| e.len() >= 2) {
        let first = coloring.get(e[0]);
        if e.iter().all(|&v| coloring.get(v) == first) {
            return Verdict::Fails(e.clone());
        }
    }
    Verdict::Holds
}

/// Every hyperedge has a color occurring exactly once in it.
pub fn check_cf(h: &Hypergraph, coloring: &Coloring) -> Verdict {
    let mut counts: HashMap<Option<u32>, usize> = HashMap::new();
    for e in h.edges() {
        counts.clear();
        for &v in e {
            *counts.entry(coloring.get(v)).or_insert(0) += 1;
        }
        if !counts.iter().any(|(c, &k)| c.is_some() && k == 1) {
            return Verdict::Fails(e.clone());
        }
    }
    Verdict::Holds
}

#[derive(Clone, Debug, Serialize)]
pub struct CfColoring {
    pub coloring: Coloring,
    pub rounds: usize,
    /// Palette of the proper coloring in each round.
    pub round_palettes: Vec<usize>,
}

/// Conflict-free coloring by iterated proper coloring: each round properly
/// colors the trace on the surviving vertices, gives the largest color class
/// (ties to the smallest color) the round's final color, and removes it.
pub fn cf_color(
    h: &Hypergraph,
    mut proper: impl FnMut(&Hypergraph) -> Coloring,
) -> Result<CfColoring> {
    let mut remaining: Vec<u32> = h.universe().to_vec();
    let mut out = CfColoring {
        coloring: Coloring::default(),
        rounds: 0,
        round_palettes: Vec::new(),
    };
    let mut current = h.clone();
    while !remaining.is_empty() {
        let round = out.rounds;
        let c = proper(&current);
        let mut classes: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &v in &remaining {
            if let Some(col) = c.get(v) {
                classes.entry(col).or_default().push(v);
            }
        }
        out.round_palettes.push(classes.len());
        let chosen = classes
            .iter()
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(a.0)))
            .map(|(_, vs)| vs.clone())
            .unwrap_or_default();
        if chosen.is_empty() {
            return Err(Error::FrameworkStall { round });
        }
        for &v in &chosen {
            out.coloring.colors.insert(v, round as u32);
        }
        remaining.retain(|v| chosen.binary_search(v).is_err());
        current = current.trace(&remaining);
        out.rounds += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hg(edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::from_edges(edges.iter().map(|e| e.to_vec()))
    }

    #[test]
    fn path_needs_two_colors() {
        let h = hg(&[&[1, 2], &[2, 3]]);
        let c = degeneracy_color(&h);
        assert_eq!(c.palette(), 2);
        assert!(check_proper(&h, &c).holds());
    }

    #[test]
    fn big_hyperedge_without_pairs_is_still_split() {
        let h = hg(&[&[1, 2, 3, 4, 5]]);
        let peel = degeneracy_peel(&h);
        assert_eq!(peel.order, vec![1, 2, 3, 4, 5]);
        assert_eq!(peel.degrees, vec![0, 0, 0, 1, 0]);
        let c = degeneracy_color(&h);
        assert_eq!(c.palette(), 2);
        assert!(check_proper(&h, &c).holds());
    }

    #[test]
    fn proper_checks() {
        let h = hg(&[&[1, 2]]);
        let distinct = Coloring::from_pairs([(1, 0), (2, 1)]);
        assert!(check_proper(&h, &distinct).holds());
        let constant = Coloring::from_pairs([(1, 0), (2, 0)]);
        assert_eq!(check_proper(&h, &constant), Verdict::Fails(vec![1, 2]));
    }

    #[test]
    fn cf_checks() {
        let h = hg(&[&[1, 2]]);
        assert!(!check_cf(&h, &Coloring::from_pairs([(1, 0), (2, 0)])).holds());
        let t = hg(&[&[1, 2, 3]]);
        assert!(check_cf(&t, &Coloring::from_pairs([(1, 0), (2, 0), (3, 1)])).holds());
        assert!(check_cf(&t, &Coloring::from_pairs([(1, 0), (2, 1), (3, 2)])).holds());
    }

    #[test]
    fn cf_without_hyperedges() {
        let h = Hypergraph::new(0..6, Vec::<Vec<u32>>::new()).unwrap();
        let cf = cf_color(&h, degeneracy_color).unwrap();
        assert_eq!(cf.rounds, 1);
        assert_eq!(cf.coloring.palette(), 1);
    }

    #[test]
    fn cf_on_nested_prefixes() {
        let n = 64u32;
        let h = Hypergraph::from_edges((1..=n).map(|k| (1..=k).collect()));
        let cf = cf_color(&h, degeneracy_color).unwrap();
        assert!(check_cf(&h, &cf.coloring).holds());
        assert!(cf.coloring.palette() <= 2 * 7 + 1);
    }

    #[test]
    fn cf_on_one_hyperedge() {
        let h = Hypergraph::from_edges(vec![(1..=8).collect()]);
        let cf = cf_color(&h, degeneracy_color).unwrap();
        assert!(check_cf(&h, &cf.coloring).holds());
        assert!(cf.coloring.palette() <= 2 * 3 + 1);
    }

    #[test]
    fn broken_colorer_stalls() {
        let h = hg(&[&[1, 2]]);
        let err = cf_color(&h, |_| Coloring::default()).unwrap_err();
        assert!(matches!(err, Error::FrameworkStall { round: 0 }));
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        prop::collection::vec(prop::collection::vec(0u32..14, 1..6), 0..25)
            .prop_map(Hypergraph::from_edges)
    }

    proptest! {
        #[test]
        fn degeneracy_is_proper_and_bounded(h in arb_hypergraph()) {
            let peel = degeneracy_peel(&h);
            let c = color_from_peel(&peel);
            prop_assert!(check_proper(&h, &c).holds());
            prop_assert!(c.palette() <= 1 + peel.max_degree());
        }

        #[test]
        fn cf_framework_is_conflict_free(h in arb_hypergraph()) {
            let cf = cf_color(&h, degeneracy_color).unwrap();
            prop_assert!(check_cf(&h, &cf.coloring).holds());
            prop_assert!(cf.coloring.is_total_on(&h));
        }
    }
}
