//! Planar arrangement of a curve family as a half-edge structure.
//!
//! Every curve vertex and every intersection point becomes a node. Nodes that
//! are curve endpoints or intersection points are the arrangement's vertices;
//! the remaining nodes are bends of a single curve and only shape the edges.
//! An edge is a maximal piece of a curve between two vertices. Faces are
//! recovered from boundary walks: half-edge `h` is followed by the outgoing
//! half-edge immediately clockwise from its twin, which keeps the face on the
//! left of every walk.

mod audit;
mod locate;

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    angle_cmp, candidate_pairs_within, segment_intersection, BBox, Curve, CurveFamily, Point,
    Rational, SegmentIntersection,
};

pub use audit::{audit_walks, AuditFailure, WalkAudit, WalkAuditReport};
pub use locate::grounded_witness;

#[derive(Clone, Debug)]
pub struct Node {
    pub point: Point,
    /// Curve endpoint or intersection point.
    pub is_vertex: bool,
    /// Outgoing half-edges in counter-clockwise order of direction.
    pub out: Vec<usize>,
}

/// A straight piece of one curve segment between two consecutive nodes.
#[derive(Clone, Debug)]
pub struct Link {
    pub from: usize,
    pub to: usize,
    pub curve: usize,
    pub edge: usize,
}

/// A maximal sub-curve between two vertices.
#[derive(Clone, Debug)]
pub struct Edge {
    pub curve: usize,
    pub links: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Walk {
    pub half_edges: Vec<usize>,
    /// Counter-clockwise walk surrounding a bounded face.
    pub is_outer: bool,
    pub face: usize,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    pub outer: Option<usize>,
    pub inner: Vec<usize>,
}

impl Face {
    pub fn is_unbounded(&self) -> bool {
        self.outer.is_none()
    }

    pub fn walks(&self) -> impl Iterator<Item = usize> + '_ {
        self.outer.iter().copied().chain(self.inner.iter().copied())
    }
}

/// One row of the face report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceRow {
    pub face: usize,
    pub size: usize,
    pub distinct_edges: usize,
    pub walks: usize,
    pub unbounded: bool,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    curves: Vec<Curve>,
    nodes: Vec<Node>,
    links: Vec<Link>,
    edges: Vec<Edge>,
    walks: Vec<Walk>,
    faces: Vec<Face>,
    walk_of: Vec<usize>,
    components: usize,
    node_at: HashMap<Point, usize>,
    /// Node ids along each segment of each curve, first vertex to last.
    seg_nodes: Vec<Vec<Vec<usize>>>,
}

fn origin_of(links: &[Link], h: usize) -> usize {
    let l = &links[h / 2];
    if h.is_multiple_of(2) {
        l.from
    } else {
        l.to
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Builds the arrangement, rejecting overlaps, shared endpoints and points
/// common to three or more curves.
pub fn build_arrangement(family: &CurveFamily) -> Result<Arrangement> {
    Arrangement::build(&family.curves)
}

impl Arrangement {
    pub fn build(curves: &[Curve]) -> Result<Arrangement> {
        let mut segs: Vec<(usize, usize)> = Vec::new();
        let mut boxes: Vec<BBox> = Vec::new();
        for (i, c) in curves.iter().enumerate() {
            for (k, (a, b)) in c.segments().enumerate() {
                segs.push((i, k));
                boxes.push(BBox::of_points([a, b].into_iter()));
            }
        }

        let mut on_seg: Vec<Vec<Vec<Point>>> = curves
            .iter()
            .map(|c| {
                c.segments()
                    .map(|(a, b)| vec![a.clone(), b.clone()])
                    .collect()
            })
            .collect();
        let mut owners: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for (s, t) in candidate_pairs_within(&boxes) {
            let ((i, k), (j, m)) = (segs[s], segs[t]);
            if i == j {
                continue;
            }
            let (a0, a1) = (&curves[i].vertices()[k], &curves[i].vertices()[k + 1]);
            let (b0, b1) = (&curves[j].vertices()[m], &curves[j].vertices()[m + 1]);
            match segment_intersection(a0, a1, b0, b1) {
                SegmentIntersection::Empty => {}
                SegmentIntersection::DegenerateOverlap => {
                    return Err(Error::degeneracy(format!("curves {i} and {j} overlap")));
                }
                SegmentIntersection::SinglePoint(p) => {
                    if curves[i].is_endpoint(&p) && curves[j].is_endpoint(&p) {
                        return Err(Error::degeneracy(format!(
                            "curves {i} and {j} share the endpoint {p:?}"
                        )));
                    }
                    let o = owners.entry(p.clone()).or_default();
                    for c in [i, j] {
                        if !o.contains(&c) {
                            o.push(c);
                        }
                    }
                    if o.len() > 2 {
                        return Err(Error::degeneracy(format!(
                            "curves {o:?} pass through {p:?}"
                        )));
                    }
                    on_seg[i][k].push(p.clone());
                    on_seg[j][m].push(p);
                }
            }
        }

        let mut all_points: BTreeMap<Point, bool> = BTreeMap::new();
        for c in curves {
            let v = c.vertices();
            for (idx, p) in v.iter().enumerate() {
                let end = idx == 0 || idx == v.len() - 1;
                *all_points.entry(p.clone()).or_insert(false) |= end;
            }
        }
        for p in owners.keys() {
            all_points.insert(p.clone(), true);
        }
        let mut nodes = Vec::with_capacity(all_points.len());
        let mut node_at = HashMap::with_capacity(all_points.len());
        for (p, is_vertex) in all_points {
            node_at.insert(p.clone(), nodes.len());
            nodes.push(Node {
                point: p,
                is_vertex,
                out: Vec::new(),
            });
        }

        let mut links = Vec::new();
        let mut seg_nodes = Vec::with_capacity(curves.len());
        for (i, c) in curves.iter().enumerate() {
            let mut per_curve = Vec::with_capacity(c.num_segments());
            for (k, (a, b)) in c.segments().enumerate() {
                let pts = &mut on_seg[i][k];
                pts.sort();
                pts.dedup();
                if b < a {
                    pts.reverse();
                }
                let ids: Vec<usize> = pts.iter().map(|p| node_at[p]).collect();
                for w in ids.windows(2) {
                    links.push(Link {
                        from: w[0],
                        to: w[1],
                        curve: i,
                        edge: usize::MAX,
                    });
                }
                per_curve.push(ids);
            }
            seg_nodes.push(per_curve);
        }

        for h in 0..2 * links.len() {
            nodes[origin_of(&links, h)].out.push(h);
        }
        for n in 0..nodes.len() {
            let dirs: Vec<(usize, crate::geometry::Vector)> = nodes[n]
                .out
                .iter()
                .map(|&h| {
                    let t = origin_of(&links, h ^ 1);
                    (h, nodes[t].point.sub(&nodes[n].point))
                })
                .collect();
            let mut dirs = dirs;
            dirs.sort_by(|a, b| angle_cmp(&a.1, &b.1));
            nodes[n].out = dirs.into_iter().map(|(h, _)| h).collect();
        }

        let mut arr = Arrangement {
            curves: curves.to_vec(),
            nodes,
            links,
            edges: Vec::new(),
            walks: Vec::new(),
            faces: Vec::new(),
            walk_of: Vec::new(),
            components: 0,
            node_at,
            seg_nodes,
        };
        arr.assign_edges();
        arr.trace_walks()?;
        Ok(arr)
    }

    fn assign_edges(&mut self) {
        for start in 0..self.links.len() {
            if self.links[start].edge != usize::MAX {
                continue;
            }
            let id = self.edges.len();
            let mut chain = vec![start];
            self.links[start].edge = id;
            // Extend through bend nodes in both directions.
            for forward in [true, false] {
                let mut cur = start;
                loop {
                    let l = &self.links[cur];
                    let node = if forward { l.to } else { l.from };
                    if self.nodes[node].is_vertex {
                        break;
                    }
                    let next = self.nodes[node]
                        .out
                        .iter()
                        .map(|h| h / 2)
                        .find(|&x| x != cur)
                        .expect("bend nodes have degree two");
                    if self.links[next].edge != usize::MAX {
                        break;
                    }
                    self.links[next].edge = id;
                    if forward {
                        chain.push(next);
                    } else {
                        chain.insert(0, next);
                    }
                    cur = next;
                }
            }
            self.edges.push(Edge {
                curve: self.links[start].curve,
                links: chain,
            });
        }
    }

    pub(crate) fn origin(&self, h: usize) -> usize {
        origin_of(&self.links, h)
    }

    pub(crate) fn target(&self, h: usize) -> usize {
        origin_of(&self.links, h ^ 1)
    }

    /// The half-edge following `h` on the walk that keeps its face on the left.
    pub fn next(&self, h: usize) -> usize {
        let t = self.target(h);
        let out = &self.nodes[t].out;
        let pos = out.iter().position(|&x| x == h ^ 1).unwrap();
        out[(pos + out.len() - 1) % out.len()]
    }

    fn trace_walks(&mut self) -> Result<()> {
        let nh = 2 * self.links.len();
        let mut walk_of = vec![usize::MAX; nh];
        let mut walks = Vec::new();
        for start in 0..nh {
            if walk_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut hs = Vec::new();
            let mut area = Rational::zero();
            let mut h = start;
            loop {
                walk_of[h] = id;
                hs.push(h);
                let (a, b) = (
                    &self.nodes[self.origin(h)].point,
                    &self.nodes[self.target(h)].point,
                );
                area += &a.x * &b.y - &a.y * &b.x;
                h = self.next(h);
                if h == start {
                    break;
                }
            }
            walks.push(Walk {
                half_edges: hs,
                is_outer: area.is_positive(),
                face: usize::MAX,
            });
        }
        self.walk_of = walk_of;

        let mut faces = vec![Face {
            id: 0,
            outer: None,
            inner: Vec::new(),
        }];
        for (w, walk) in walks.iter_mut().enumerate() {
            if walk.is_outer {
                walk.face = faces.len();
                faces.push(Face {
                    id: faces.len(),
                    outer: Some(w),
                    inner: Vec::new(),
                });
            }
        }
        self.walks = walks;
        self.faces = faces;

        let mut uf = UnionFind((0..self.nodes.len()).collect());
        for l in &self.links {
            uf.union(l.from, l.to);
        }
        self.components = (0..self.nodes.len()).filter(|&n| uf.find(n) == n).count();

        for w in 0..self.walks.len() {
            if !self.walks[w].is_outer {
                let f = self.enclosing_face(w)?;
                self.walks[w].face = f;
                self.faces[f].inner.push(w);
            }
        }
        Ok(())
    }

    /// Face surrounding the component whose outer boundary is walk `w`.
    fn enclosing_face(&self, w: usize) -> Result<usize> {
        let mut chain = vec![w];
        loop {
            let cur = *chain.last().unwrap();
            if self.walks[cur].face != usize::MAX {
                break;
            }
            let top = self.walks[cur]
                .half_edges
                .iter()
                .map(|&h| self.origin(h))
                .max_by(|&a, &b| {
                    let (p, q) = (&self.nodes[a].point, &self.nodes[b].point);
                    p.y.cmp(&q.y).then(p.x.cmp(&q.x))
                })
                .unwrap();
            match self.ray_up(&self.nodes[top].point) {
                None => {
                    chain.push(usize::MAX);
                    break;
                }
                Some(hit) => {
                    let h = self.half_edge_facing_down(&hit)?;
                    let hw = self.walk_of[h];
                    if self.walks[hw].is_outer {
                        chain.push(hw);
                        break;
                    }
                    chain.push(hw);
                }
            }
        }
        let last = chain.pop().unwrap();
        let face = if last == usize::MAX {
            0
        } else {
            self.walks[last].face
        };
        Ok(face)
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn unbounded_face(&self) -> usize {
        0
    }

    pub fn num_vertices(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_vertex).count()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Connected components of the underlying plane graph.
    pub fn components(&self) -> usize {
        self.components
    }

    /// Face on the left of half-edge `h`.
    pub fn face_of_half_edge(&self, h: usize) -> usize {
        self.walks[self.walk_of[h]].face
    }

    /// Vertex degree, counting edges rather than curve pieces.
    pub fn degree(&self, node: usize) -> usize {
        self.nodes[node].out.len()
    }

    /// Walk length in edges; an edge traversed on both sides counts twice.
    pub fn walk_size(&self, w: usize) -> usize {
        self.walks[w]
            .half_edges
            .iter()
            .filter(|&&h| self.nodes[self.origin(h)].is_vertex)
            .count()
    }

    /// Positions along walk `w` where an edge starts, as node ids in order.
    pub fn walk_vertices(&self, w: usize) -> Vec<usize> {
        self.walks[w]
            .half_edges
            .iter()
            .map(|&h| self.origin(h))
            .filter(|&n| self.nodes[n].is_vertex)
            .collect()
    }

    /// Distinct edges along walk `w`, sorted.
    pub fn walk_edges(&self, w: usize) -> Vec<usize> {
        let mut e: Vec<usize> = self.walks[w]
            .half_edges
            .iter()
            .map(|&h| self.links[h / 2].edge)
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// `|F|`: boundary edges with cut-edges counted twice.
    pub fn face_size(&self, f: usize) -> usize {
        self.faces[f].walks().map(|w| self.walk_size(w)).sum()
    }

    /// `E_F`: the distinct edges on the boundary of `f`, sorted.
    pub fn boundary_edges(&self, f: usize) -> Vec<usize> {
        let mut e: Vec<usize> = self.faces[f]
            .walks()
            .flat_map(|w| {
                self.walks[w]
                    .half_edges
                    .iter()
                    .map(|&h| self.links[h / 2].edge)
            })
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Curve ids along the boundary of `f`, one label per edge traversal,
    /// grouped by walk.
    pub fn walk_labels(&self, w: usize) -> Vec<usize> {
        self.walks[w]
            .half_edges
            .iter()
            .filter(|&&h| self.nodes[self.origin(h)].is_vertex)
            .map(|&h| self.links[h / 2].curve)
            .collect()
    }

    /// For every edge, the faces on its two sides (smaller id first).
    pub fn face_adjacency(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|e| {
                let h = 2 * e.links[0];
                let (a, b) = (self.face_of_half_edge(h), self.face_of_half_edge(h + 1));
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub fn face_report(&self) -> Vec<FaceRow> {
        self.faces
            .iter()
            .map(|f| FaceRow {
                face: f.id,
                size: self.face_size(f.id),
                distinct_edges: self.boundary_edges(f.id).len(),
                walks: f.walks().count(),
                unbounded: f.is_unbounded(),
            })
            .collect()
    }

    /// `V - E + F - (1 + components)`; zero on every valid arrangement.
    pub fn euler_defect(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
            - 1
            - self.components as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Color;

    fn seg(x0: i64, y0: i64, x1: i64, y1: i64, color: Color) -> Curve {
        Curve::segment(Point::from_ints(x0, y0), Point::from_ints(x1, y1), color).unwrap()
    }

    fn grid2() -> Vec<Curve> {
        vec![
            seg(0, 1, 3, 1, Color::Red),
            seg(0, 2, 3, 2, Color::Red),
            seg(1, 0, 1, 3, Color::Blue),
            seg(2, 0, 2, 3, Color::Blue),
        ]
    }

    #[test]
    fn single_segment() {
        let arr = Arrangement::build(&[seg(0, 0, 1, 0, Color::Red)]).unwrap();
        assert_eq!(
            (arr.num_vertices(), arr.num_edges(), arr.num_faces()),
            (2, 1, 1)
        );
        assert_eq!(arr.face_size(0), 2);
        assert_eq!(arr.boundary_edges(0).len(), 1);
        assert_eq!(arr.euler_defect(), 0);
    }

    #[test]
    fn two_by_two_grid() {
        let arr = Arrangement::build(&grid2()).unwrap();
        assert_eq!(arr.num_vertices(), 12);
        assert_eq!(arr.num_edges(), 12);
        assert_eq!(arr.num_faces(), 2);
        assert_eq!(arr.components(), 1);
        assert_eq!(arr.face_size(1), 4);
        assert_eq!(arr.boundary_edges(1).len(), 4);
        assert_eq!(arr.face_size(0), 20);
    }

    #[test]
    fn disjoint_segments() {
        let arr = Arrangement::build(&[seg(0, 0, 1, 0, Color::Red), seg(0, 1, 1, 1, Color::Red)])
            .unwrap();
        assert_eq!(
            (arr.num_vertices(), arr.num_edges(), arr.num_faces()),
            (4, 2, 1)
        );
        assert_eq!(arr.components(), 2);
        assert_eq!(arr.euler_defect(), 0);
    }

    #[test]
    fn bends_do_not_count_as_vertices() {
        let v = Curve::new(
            vec![
                Point::from_ints(0, 1),
                Point::from_ints(1, 0),
                Point::from_ints(2, 1),
            ],
            Color::Blue,
        )
        .unwrap();
        let arr = Arrangement::build(&[v, seg(0, 0, 2, 0, Color::Red)]).unwrap();
        // The V touches the segment at its bend, which therefore becomes a vertex.
        assert_eq!(arr.num_vertices(), 5);
        assert_eq!(arr.num_edges(), 4);
        assert_eq!(arr.num_faces(), 1);
        assert_eq!(arr.euler_defect(), 0);
    }

    #[test]
    fn nested_component_lies_in_the_inner_face() {
        let mut curves = vec![
            seg(0, 1, 10, 1, Color::Red),
            seg(0, 9, 10, 9, Color::Red),
            seg(1, 0, 1, 10, Color::Blue),
            seg(9, 0, 9, 10, Color::Blue),
        ];
        curves.push(seg(4, 5, 6, 5, Color::Red));
        let arr = Arrangement::build(&curves).unwrap();
        assert_eq!(arr.num_faces(), 2);
        assert_eq!(arr.face(1).inner.len(), 1);
        assert_eq!(arr.face_size(1), 4 + 2);
        assert_eq!(arr.euler_defect(), 0);
    }

    #[test]
    fn rejects_degenerate_input() {
        let overlap = [seg(0, 0, 2, 0, Color::Red), seg(1, 0, 3, 0, Color::Blue)];
        assert!(matches!(
            Arrangement::build(&overlap),
            Err(Error::Degeneracy(_))
        ));
        let triple = [
            seg(-1, 0, 1, 0, Color::Red),
            seg(0, -1, 0, 1, Color::Blue),
            seg(-1, -1, 1, 1, Color::Neutral),
        ];
        assert!(matches!(
            Arrangement::build(&triple),
            Err(Error::Degeneracy(_))
        ));
        let shared = [seg(0, 0, 1, 0, Color::Red), seg(1, 0, 1, 1, Color::Blue)];
        assert!(matches!(
            Arrangement::build(&shared),
            Err(Error::Degeneracy(_))
        ));
    }

    #[test]
    fn every_half_edge_lies_on_one_walk() {
        let arr = Arrangement::build(&grid2()).unwrap();
        let total: usize = arr.walks().iter().map(|w| w.half_edges.len()).sum();
        assert_eq!(total, 2 * arr.links().len());
        let sizes: usize = (0..arr.num_faces()).map(|f| arr.face_size(f)).sum();
        assert_eq!(sizes, 2 * arr.num_edges());
    }
}
