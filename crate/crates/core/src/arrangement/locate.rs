use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Signed;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::geometry::{
    angle_cmp, candidate_pairs_between, on_segment, rat, segment_intersection, BBox, Curve,
    CurveFamily, Point, Rational, SegmentIntersection, Vector,
};

/// Where an upward ray first meets the arrangement.
pub(crate) enum Hit {
    Node(usize),
    Link(usize, Point),
}

fn down() -> Vector {
    Vector::new(rat(0), rat(-1))
}

impl Arrangement {
    /// First point strictly above `p` on the vertical line through it.
    pub(crate) fn ray_up(&self, p: &Point) -> Option<Hit> {
        let mut best: Option<(Rational, Hit)> = None;
        for (li, l) in self.links.iter().enumerate() {
            let (a, b) = (&self.nodes[l.from].point, &self.nodes[l.to].point);
            let (lo, hi) = if a.x <= b.x { (a, b) } else { (b, a) };
            if p.x < lo.x || p.x > hi.x {
                continue;
            }
            let (y, hit) = if lo.x == hi.x {
                let (low, node) = if a.y < b.y {
                    (&a.y, l.from)
                } else {
                    (&b.y, l.to)
                };
                (low.clone(), Hit::Node(node))
            } else if p.x == a.x {
                (a.y.clone(), Hit::Node(l.from))
            } else if p.x == b.x {
                (b.y.clone(), Hit::Node(l.to))
            } else {
                let y = &a.y + (&b.y - &a.y) * (&p.x - &a.x) / (&b.x - &a.x);
                let q = Point::new(p.x.clone(), y.clone());
                (y, Hit::Link(li, q))
            };
            if y <= p.y {
                continue;
            }
            if best.as_ref().is_none_or(|(by, _)| y < *by) {
                best = Some((y, hit));
            }
        }
        best.map(|(_, h)| h)
    }

    /// The half-edge whose left side contains the points just below `hit`.
    pub(crate) fn half_edge_facing_down(&self, hit: &Hit) -> Result<usize> {
        match hit {
            Hit::Node(n) => self.wedge_half_edge(*n, &down()),
            Hit::Link(l, q) => self.side_half_edge(*l, &down(), q),
        }
    }

    /// Half-edge whose face contains the directions immediately
    /// counter-clockwise of its own direction, up to the next one.
    fn wedge_half_edge(&self, node: usize, d: &Vector) -> Result<usize> {
        let out = &self.nodes[node].out;
        let here = &self.nodes[node].point;
        let dir = |h: usize| self.nodes[self.target(h)].point.sub(here);
        let mut chosen = *out.last().unwrap();
        for &h in out {
            match angle_cmp(&dir(h), d) {
                Ordering::Less => chosen = h,
                Ordering::Equal => {
                    return Err(Error::degeneracy(format!(
                        "direction runs along an edge at {here:?}"
                    )))
                }
                Ordering::Greater => break,
            }
        }
        Ok(chosen)
    }

    fn side_half_edge(&self, link: usize, d: &Vector, at: &Point) -> Result<usize> {
        let l = &self.links[link];
        let u = self.nodes[l.to].point.sub(&self.nodes[l.from].point);
        let c = u.cross(d);
        if c.is_positive() {
            Ok(2 * link)
        } else if c.is_negative() {
            Ok(2 * link + 1)
        } else {
            Err(Error::degeneracy(format!(
                "direction runs along an edge at {at:?}"
            )))
        }
    }

    /// Face entered when leaving `q`, a point on curve `curve`, in direction `d`.
    fn face_leaving(&self, curve: usize, q: &Point, d: &Vector) -> Result<usize> {
        if let Some(&n) = self.node_at.get(q) {
            return Ok(self.face_of_half_edge(self.wedge_half_edge(n, d)?));
        }
        let v = self.curves[curve].vertices();
        let k = (0..v.len() - 1)
            .find(|&k| on_segment(q, &v[k], &v[k + 1]))
            .expect("point lies on the curve");
        let ids = &self.seg_nodes[curve][k];
        let reversed = v[k + 1] < v[k];
        let pos = ids.partition_point(|&n| {
            let p = &self.nodes[n].point;
            if reversed {
                p > q
            } else {
                p < q
            }
        });
        let (from, to) = (ids[pos - 1], ids[pos]);
        let link = self.nodes[from]
            .out
            .iter()
            .map(|h| h / 2)
            .find(|&l| {
                let l = &self.links[l];
                (l.from == from && l.to == to) || (l.from == to && l.to == from)
            })
            .expect("consecutive nodes are linked");
        Ok(self.face_of_half_edge(self.side_half_edge(link, d, q)?))
    }

    /// The face containing `p`, or `OnBoundary` if `p` lies on a curve.
    pub fn locate(&self, p: &Point) -> Result<usize> {
        if self.node_at.contains_key(p) {
            return Err(Error::OnBoundary(Box::new(p.clone())));
        }
        for l in &self.links {
            if on_segment(p, &self.nodes[l.from].point, &self.nodes[l.to].point) {
                return Err(Error::OnBoundary(Box::new(p.clone())));
            }
        }
        match self.ray_up(p) {
            None => Ok(0),
            Some(hit) => Ok(self.face_of_half_edge(self.half_edge_facing_down(&hit)?)),
        }
    }

    /// Faces of the arrangement that share a point with `c`, sorted.
    pub fn faces_met_by(&self, c: &Curve) -> Result<Vec<usize>> {
        let boxes: Vec<BBox> = self.curves.iter().map(Curve::bbox).collect();
        let cand: Vec<usize> = candidate_pairs_between(&[c.bbox()], &boxes)
            .into_iter()
            .map(|(_, j)| j)
            .collect();
        self.faces_met_with_candidates(c, &cand)
    }

    fn faces_met_with_candidates(&self, c: &Curve, cand: &[usize]) -> Result<Vec<usize>> {
        let mut contacts: BTreeSet<(Point, usize)> = BTreeSet::new();
        for &s in cand {
            for (a0, a1) in c.segments() {
                for (b0, b1) in self.curves[s].segments() {
                    match segment_intersection(a0, a1, b0, b1) {
                        SegmentIntersection::Empty => {}
                        SegmentIntersection::SinglePoint(q) => {
                            contacts.insert((q, s));
                        }
                        SegmentIntersection::DegenerateOverlap => {
                            return Err(Error::degeneracy(format!("connector overlaps curve {s}")));
                        }
                    }
                }
            }
        }
        if contacts.is_empty() {
            return Ok(vec![self.locate(c.first())?]);
        }
        let mut faces = BTreeSet::new();
        let v = c.vertices();
        for (q, s) in &contacts {
            let dirs: Vec<Vector> = match v.iter().position(|x| x == q) {
                Some(k) => [k.checked_sub(1), Some(k + 1).filter(|&j| j < v.len())]
                    .into_iter()
                    .flatten()
                    .map(|j| v[j].sub(q))
                    .collect(),
                None => {
                    let k = (0..v.len() - 1)
                        .find(|&k| on_segment(q, &v[k], &v[k + 1]))
                        .unwrap();
                    vec![v[k].sub(q), v[k + 1].sub(q)]
                }
            };
            for d in dirs {
                faces.insert(self.face_leaving(*s, q, &d)?);
            }
        }
        Ok(faces.into_iter().collect())
    }

    /// A face met by every curve of `connectors`, preferring the smallest id.
    pub fn common_face(&self, connectors: &[Curve]) -> Result<Option<usize>> {
        if connectors.is_empty() {
            return Ok(Some(0));
        }
        let boxes: Vec<BBox> = self.curves.iter().map(Curve::bbox).collect();
        let cboxes: Vec<BBox> = connectors.iter().map(Curve::bbox).collect();
        let mut cand = vec![Vec::new(); connectors.len()];
        for (i, j) in candidate_pairs_between(&cboxes, &boxes) {
            cand[i].push(j);
        }
        let mut common: Option<BTreeSet<usize>> = None;
        for (c, cand) in connectors.iter().zip(&cand) {
            let met: BTreeSet<usize> = self
                .faces_met_with_candidates(c, cand)?
                .into_iter()
                .collect();
            let next: BTreeSet<usize> = match common {
                None => met,
                Some(prev) => prev.intersection(&met).copied().collect(),
            };
            if next.is_empty() {
                return Ok(None);
            }
            common = Some(next);
        }
        Ok(common.and_then(|s| s.into_iter().next()))
    }
}

/// A face of the arrangement of `shapes` that every connector meets, if any.
/// With no connectors this is the unbounded face.
pub fn grounded_witness(shapes: &CurveFamily, connectors: &CurveFamily) -> Result<Option<usize>> {
    let arr = Arrangement::build(&shapes.curves)?;
    arr.common_face(&connectors.curves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ratio, Color};

    fn seg(x0: i64, y0: i64, x1: i64, y1: i64) -> Curve {
        Curve::segment(
            Point::from_ints(x0, y0),
            Point::from_ints(x1, y1),
            Color::Red,
        )
        .unwrap()
    }

    fn grid2() -> Arrangement {
        Arrangement::build(&[
            seg(0, 1, 3, 1),
            seg(0, 2, 3, 2),
            seg(1, 0, 1, 3),
            seg(2, 0, 2, 3),
        ])
        .unwrap()
    }

    #[test]
    fn locate_basic() {
        let arr = grid2();
        assert_eq!(arr.locate(&Point::from_ints(100, -7)).unwrap(), 0);
        let centre = Point::new(ratio(3, 2), ratio(3, 2));
        assert_eq!(arr.locate(&centre).unwrap(), 1);
        assert!(matches!(
            arr.locate(&Point::new(ratio(1, 2), rat(1))),
            Err(Error::OnBoundary(_))
        ));
        assert!(matches!(
            arr.locate(&Point::from_ints(1, 1)),
            Err(Error::OnBoundary(_))
        ));
    }

    #[test]
    fn locate_through_a_vertex() {
        let arr = grid2();
        assert_eq!(arr.locate(&Point::from_ints(1, -1)).unwrap(), 0);
        assert_eq!(arr.locate(&Point::new(ratio(3, 2), rat(-1))).unwrap(), 0);
        // The ray from (5,1) passes exactly through the apex crossing.
        let tri =
            Arrangement::build(&[seg(-1, 0, 11, 0), seg(-1, -1, 6, 6), seg(11, -1, 4, 6)]).unwrap();
        let inside = tri.locate(&Point::from_ints(5, 1)).unwrap();
        assert_ne!(inside, 0);
        assert_eq!(tri.locate(&Point::from_ints(5, 7)).unwrap(), 0);
        assert_eq!(tri.locate(&Point::from_ints(5, -3)).unwrap(), 0);
        assert_eq!(tri.face_size(inside), 3);
    }

    #[test]
    fn grounded_witness_cases() {
        let shapes = CurveFamily::shapes(vec![seg(0, 0, 4, 0), seg(5, 0, 5, 4)]);
        let empty = CurveFamily::connectors(vec![]);
        assert_eq!(grounded_witness(&shapes, &empty).unwrap(), Some(0));
        let conn = CurveFamily::connectors(vec![seg(2, -1, 6, 3).with_color(Color::Neutral)]);
        assert_eq!(grounded_witness(&shapes, &conn).unwrap(), Some(0));
    }
}
