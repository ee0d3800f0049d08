//! Finite hypergraphs over `u32` vertex ids: traces, Delaunay graphs,
//! proper and conflict-free colorings, VC-dimension and counting.

mod coloring;
mod counting;
mod vc;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub use coloring::{
    cf_color, check_cf, check_proper, degeneracy_color, degeneracy_peel, CfColoring, Peel,
};
pub use counting::{
    b_ck, count_cliques, count_hyperedges_le_k, k_good_pairs, linearity_profile, t_ch,
    LinearityMode, LinearityProfile,
};
pub use vc::vc_dimension;

/// A set system: sorted, deduplicated, nonempty hyperedges over a sorted
/// vertex universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hypergraph {
    universe: Vec<u32>,
    edges: Vec<Vec<u32>>,
}

fn normalize(edges: impl IntoIterator<Item = Vec<u32>>) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = edges
        .into_iter()
        .map(|mut e| {
            e.sort_unstable();
            e.dedup();
            e
        })
        .filter(|e| !e.is_empty())
        .collect();
    out.sort();
    out.dedup();
    out
}

impl Hypergraph {
    /// Fails if a hyperedge mentions a vertex outside the universe.
    pub fn new(
        universe: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self> {
        let mut universe: Vec<u32> = universe.into_iter().collect();
        universe.sort_unstable();
        universe.dedup();
        let edges = normalize(edges);
        for e in &edges {
            if let Some(v) = e.iter().find(|v| universe.binary_search(v).is_err()) {
                return Err(Error::Precondition(format!(
                    "hyperedge {e:?} uses vertex {v} outside the universe"
                )));
            }
        }
        Ok(Hypergraph { universe, edges })
    }

    /// Universe taken to be the union of the hyperedges.
    pub fn from_edges(edges: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let edges = normalize(edges);
        let mut universe: Vec<u32> = edges.iter().flatten().copied().collect();
        universe.sort_unstable();
        universe.dedup();
        Hypergraph { universe, edges }
    }

    pub fn universe(&self) -> &[u32] {
        &self.universe
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.universe.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn index_of(&self, v: u32) -> usize {
        self.universe.binary_search(&v).expect("vertex in universe")
    }

    /// Restriction to `subset`: the distinct nonempty sets `h ∩ subset`.
    pub fn trace(&self, subset: &[u32]) -> Hypergraph {
        let mut keep: Vec<u32> = subset
            .iter()
            .copied()
            .filter(|v| self.universe.binary_search(v).is_ok())
            .collect();
        keep.sort_unstable();
        keep.dedup();
        let edges = normalize(self.edges.iter().map(|e| {
            e.iter()
                .copied()
                .filter(|v| keep.binary_search(v).is_ok())
                .collect::<Vec<u32>>()
        }));
        Hypergraph {
            universe: keep,
            edges,
        }
    }

    /// The Delaunay graph: hyperedges of size two, as sorted pairs.
    pub fn delaunay_of(&self) -> Vec<(u32, u32)> {
        self.edges
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| (e[0], e[1]))
            .collect()
    }
}

/// A vertex coloring with colors `0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Coloring {
    pub colors: BTreeMap<u32, u32>,
}

impl Coloring {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Coloring {
            colors: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, v: u32) -> Option<u32> {
        self.colors.get(&v).copied()
    }

    /// Number of distinct colors used.
    pub fn palette(&self) -> usize {
        let mut c: Vec<u32> = self.colors.values().copied().collect();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn is_total_on(&self, h: &Hypergraph) -> bool {
        h.universe().iter().all(|v| self.colors.contains_key(v))
    }
}

/// Outcome of a coloring check, with a violating hyperedge on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Holds,
    Fails(Vec<u32>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}
