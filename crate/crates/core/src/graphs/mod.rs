//! Delaunay graphs `D(S, C)`, intersection hypergraphs `H(S, F)` and `H(S)`,
//! tangency counts, and checks of the linear edge bounds.

mod bounds;
mod planarity;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{
    candidate_pairs_within, curves_meet, family_intersections, incidences, BBox, Color, Curve,
    CurveFamily, IntersectionKind,
};
use crate::hypergraph::Hypergraph;

pub use bounds::{
    planarity_audit, three_curve_face_bound, verify_grounded_bound, verify_tangency_bound,
    BoundReport, BoundStatus, ConnectorAudit,
};
pub use planarity::is_planar;

/// Edges between shapes joined by a connector meeting exactly those two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelaunayGraph {
    pub vertices: usize,
    /// Each edge `(s, t)` with `s < t`, and the connectors realizing it.
    pub witnesses: BTreeMap<(usize, usize), Vec<usize>>,
}

impl DelaunayGraph {
    pub fn num_edges(&self) -> usize {
        self.witnesses.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.witnesses.keys().copied().collect()
    }

    /// Every edge joins a red shape to a blue one.
    pub fn bipartite_by_color(&self, shapes: &[Curve]) -> bool {
        self.witnesses.keys().all(|&(a, b)| {
            let (ca, cb) = (shapes[a].color(), shapes[b].color());
            ca != cb && ca != Color::Neutral && cb != Color::Neutral
        })
    }
}

/// One hyperedge per member of `F` that meets some shape; repeated vertex
/// sets are merged and keep all their witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeomHypergraph {
    pub vertices: usize,
    pub edges: BTreeMap<Vec<usize>, Vec<usize>>,
}

impl GeomHypergraph {
    fn from_sets(vertices: usize, sets: Vec<Vec<usize>>) -> Self {
        let mut edges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (w, set) in sets.into_iter().enumerate() {
            if !set.is_empty() {
                edges.entry(set).or_default().push(w);
            }
        }
        GeomHypergraph { vertices, edges }
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// The abstract hypergraph on vertex ids `0..n`.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(
            0..self.vertices as u32,
            self.edges
                .keys()
                .map(|e| e.iter().map(|&v| v as u32).collect()),
        )
        .expect("hyperedges use shape ids")
    }
}

/// `D(S, C)`. A connector meeting a number of shapes other than two adds
/// nothing.
pub fn delaunay_graph(shapes: &CurveFamily, connectors: &CurveFamily) -> DelaunayGraph {
    let hits = incidences(&connectors.curves, &shapes.curves);
    let mut witnesses: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (c, h) in hits.iter().enumerate() {
        if let [a, b] = h[..] {
            witnesses.entry((a, b)).or_default().push(c);
        }
    }
    DelaunayGraph {
        vertices: shapes.len(),
        witnesses,
    }
}

/// `H(S, F)`: for every member of `F`, the shapes it meets.
pub fn intersection_hypergraph(shapes: &CurveFamily, ranges: &CurveFamily) -> GeomHypergraph {
    GeomHypergraph::from_sets(shapes.len(), incidences(&ranges.curves, &shapes.curves))
}

/// `H(S)`: for every shape, the other shapes it meets. Witness `i` is shape `i`.
pub fn neighborhood_hypergraph(shapes: &CurveFamily) -> GeomHypergraph {
    let n = shapes.len();
    let boxes: Vec<BBox> = shapes.iter().map(Curve::bbox).collect();
    let mut nb = vec![Vec::new(); n];
    for (i, j) in candidate_pairs_within(&boxes) {
        if curves_meet(&shapes[i], &shapes[j]) {
            nb[i].push(j);
            nb[j].push(i);
        }
    }
    for s in &mut nb {
        s.sort_unstable();
    }
    GeomHypergraph::from_sets(n, nb)
}

/// Unordered pairs of shapes that touch: their only common point is interior
/// to both and not a crossing.
pub fn count_tangencies(shapes: &CurveFamily) -> Result<usize> {
    let pairs: BTreeSet<(usize, usize)> = family_intersections(&shapes.curves)?
        .into_iter()
        .filter(|r| r.kind == IntersectionKind::Touching)
        .map(|r| r.owners)
        .collect();
    Ok(pairs.len())
}

/// Whether no two connectors meet.
pub fn pairwise_disjoint(curves: &[Curve]) -> bool {
    let boxes: Vec<BBox> = curves.iter().map(Curve::bbox).collect();
    candidate_pairs_within(&boxes)
        .into_iter()
        .all(|(i, j)| !curves_meet(&curves[i], &curves[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        gen_crossing_connectors, gen_grid, gen_grounded_lshapes, LShapeSpread,
    };
    use crate::geometry::Point;
    use crate::rng::trial_rng;

    fn seg(x0: i64, y0: i64, x1: i64, y1: i64) -> Curve {
        Curve::segment(
            Point::from_ints(x0, y0),
            Point::from_ints(x1, y1),
            Color::Red,
        )
        .unwrap()
    }

    #[test]
    fn grid_connectors_give_all_crossing_pairs() {
        let g = gen_grid(2, 2, &mut trial_rng(4, 0));
        let c = gen_crossing_connectors(&g).unwrap();
        let d = delaunay_graph(&g, &c);
        assert_eq!(d.num_edges(), 4);
        assert!(d.bipartite_by_color(&g.curves));
        assert_eq!(
            delaunay_graph(&g, &CurveFamily::connectors(vec![])).num_edges(),
            0
        );
    }

    #[test]
    fn connector_through_three_shapes_adds_nothing() {
        let s = CurveFamily::shapes(vec![seg(0, 0, 0, 4), seg(2, 0, 2, 4), seg(4, 0, 4, 4)]);
        let c = CurveFamily::connectors(vec![seg(-1, 2, 5, 2)]);
        assert_eq!(delaunay_graph(&s, &c).num_edges(), 0);
        let h = intersection_hypergraph(&s, &c);
        assert_eq!(h.edges.keys().collect::<Vec<_>>(), vec![&vec![0, 1, 2]]);
    }

    #[test]
    fn neighborhood_examples() {
        let cross = CurveFamily::shapes(vec![seg(0, 0, 2, 2), seg(0, 2, 2, 0)]);
        let h = neighborhood_hypergraph(&cross);
        assert_eq!(
            h.edges.keys().cloned().collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        let apart = CurveFamily::shapes(vec![seg(0, 0, 1, 0), seg(0, 1, 1, 1), seg(0, 2, 1, 2)]);
        assert_eq!(neighborhood_hypergraph(&apart).num_edges(), 0);
        assert_eq!(count_tangencies(&cross).unwrap(), 0);
    }

    #[test]
    fn tangency_needs_a_unique_contact() {
        // A V touching a segment at its bend.
        let v = Curve::new(
            vec![
                Point::from_ints(0, 2),
                Point::from_ints(2, 0),
                Point::from_ints(4, 2),
            ],
            Color::Blue,
        )
        .unwrap();
        let s = CurveFamily::shapes(vec![seg(0, 0, 4, 0), v.clone()]);
        assert_eq!(count_tangencies(&s).unwrap(), 1);
        // A zigzag crossing the V twice never counts.
        let z = Curve::new(
            vec![
                Point::from_ints(0, 1),
                Point::from_ints(2, 3),
                Point::from_ints(4, 1),
            ],
            Color::Red,
        )
        .unwrap();
        assert_eq!(
            count_tangencies(&CurveFamily::shapes(vec![v, z])).unwrap(),
            0
        );
    }

    #[test]
    fn lshape_neighborhoods_match_pairwise_tests() {
        let ls = gen_grounded_lshapes(6, LShapeSpread::default(), &mut trial_rng(6, 0));
        let curves: Vec<Curve> = ls.iter().map(|l| l.to_curve(Color::Neutral)).collect();
        let h = neighborhood_hypergraph(&CurveFamily::shapes(curves.clone()));
        for (set, owners) in &h.edges {
            for &i in owners {
                let brute: Vec<usize> = (0..6)
                    .filter(|&j| j != i && curves_meet(&curves[i], &curves[j]))
                    .collect();
                assert_eq!(&brute, set);
            }
        }
    }

    #[test]
    fn delaunay_is_the_size_two_part_of_h() {
        let g = gen_grid(3, 3, &mut trial_rng(2, 0));
        let c = gen_crossing_connectors(&g).unwrap();
        let d = delaunay_graph(&g, &c);
        let pairs: Vec<(u32, u32)> = d
            .edges()
            .iter()
            .map(|&(a, b)| (a as u32, b as u32))
            .collect();
        assert_eq!(
            intersection_hypergraph(&g, &c)
                .to_hypergraph()
                .delaunay_of(),
            pairs
        );
    }
}
