//! Curve-level intersection: classification of contact points and family-wide
//! general-position validation.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::curve::{Curve, CurveFamily};
use super::kernel::{
    angle_cmp, on_segment, segment_intersection, BBox, Point, SegmentIntersection, Vector,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IntersectionKind {
    /// The four local branches alternate around the point.
    Crossing,
    /// Interior to both curves, not a crossing, and the pair's only common point.
    Touching,
    /// An endpoint of one curve lying in the interior of the other.
    EndpointContact,
    /// Interior non-crossing contact of a pair that meets elsewhere too.
    Grazing,
}

/// An intersection point of two curves with its classification.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Intersection {
    pub point: Point,
    pub kind: IntersectionKind,
}

/// An intersection point tagged with the indices of the two curves involved
/// (`owners.0 < owners.1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IntersectionRecord {
    pub owners: (usize, usize),
    pub point: Point,
    pub kind: IntersectionKind,
}

#[allow(clippy::large_enum_variant)]
enum Location {
    Endpoint,
    Interior(Vector, Vector),
}

fn locate_on_curve(c: &Curve, p: &Point) -> Option<Location> {
    let v = c.vertices();
    if let Some(k) = v.iter().position(|q| q == p) {
        if k == 0 || k == v.len() - 1 {
            return Some(Location::Endpoint);
        }
        return Some(Location::Interior(v[k - 1].sub(p), v[k + 1].sub(p)));
    }
    c.segments()
        .find(|(a, b)| on_segment(p, a, b))
        .map(|(a, b)| Location::Interior(a.sub(p), b.sub(p)))
}

/// Branch directions of two curves at a common interior point alternate in
/// cyclic order.
fn branches_alternate(first: (Vector, Vector), second: (Vector, Vector)) -> bool {
    let mut dirs = [
        (first.0, 0u8),
        (first.1, 0u8),
        (second.0, 1u8),
        (second.1, 1u8),
    ];
    dirs.sort_by(|a, b| angle_cmp(&a.0, &b.0));
    dirs[0].1 != dirs[1].1 && dirs[1].1 != dirs[2].1 && dirs[2].1 != dirs[3].1
}

fn raw_points(c1: &Curve, c2: &Curve) -> Result<BTreeSet<Point>> {
    let mut points = BTreeSet::new();
    if !c1.bbox().overlaps(&c2.bbox()) {
        return Ok(points);
    }
    for (a0, a1) in c1.segments() {
        for (b0, b1) in c2.segments() {
            match segment_intersection(a0, a1, b0, b1) {
                SegmentIntersection::Empty => {}
                SegmentIntersection::SinglePoint(p) => {
                    points.insert(p);
                }
                SegmentIntersection::DegenerateOverlap => {
                    return Err(Error::degeneracy(format!(
                        "segments {a0:?}-{a1:?} and {b0:?}-{b1:?} overlap"
                    )));
                }
            }
        }
    }
    Ok(points)
}

/// All intersection points of two curves, classified. The result is sorted by
/// point and does not depend on argument order.
pub fn curve_intersections(c1: &Curve, c2: &Curve) -> Result<Vec<Intersection>> {
    let points = raw_points(c1, c2)?;
    let unique = points.len() == 1;
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        let l1 = locate_on_curve(c1, &p).expect("intersection point lies on the first curve");
        let l2 = locate_on_curve(c2, &p).expect("intersection point lies on the second curve");
        let kind = match (l1, l2) {
            (Location::Endpoint, Location::Endpoint) => {
                return Err(Error::degeneracy(format!(
                    "curves share the endpoint {p:?}"
                )));
            }
            (Location::Endpoint, _) | (_, Location::Endpoint) => IntersectionKind::EndpointContact,
            (Location::Interior(a, b), Location::Interior(c, d)) => {
                if branches_alternate((a, b), (c, d)) {
                    IntersectionKind::Crossing
                } else if unique {
                    IntersectionKind::Touching
                } else {
                    IntersectionKind::Grazing
                }
            }
        };
        out.push(Intersection { point: p, kind });
    }
    Ok(out)
}

/// True if the curves have at least one common point. Never fails: overlaps
/// count as meeting.
pub fn curves_meet(c1: &Curve, c2: &Curve) -> bool {
    if !c1.bbox().overlaps(&c2.bbox()) {
        return false;
    }
    c1.segments().any(|(a0, a1)| {
        c2.segments()
            .any(|(b0, b1)| segment_intersection(a0, a1, b0, b1) != SegmentIntersection::Empty)
    })
}

/// Index pairs `(i, j)`, `i < j`, whose boxes overlap. Sorted.
pub fn candidate_pairs_within(boxes: &[BBox]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&a, &b| boxes[a].min_x.cmp(&boxes[b].min_x).then(a.cmp(&b)));
    let mut active: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for &i in &order {
        active.retain(|&j| boxes[j].max_x >= boxes[i].min_x);
        for &j in &active {
            if boxes[i].min_y <= boxes[j].max_y && boxes[j].min_y <= boxes[i].max_y {
                out.push((i.min(j), i.max(j)));
            }
        }
        active.push(i);
    }
    out.sort_unstable();
    out
}

/// Index pairs `(i, j)` with `a[i]` overlapping `b[j]`. Sorted.
pub fn candidate_pairs_between(a: &[BBox], b: &[BBox]) -> Vec<(usize, usize)> {
    let mut items: Vec<(bool, usize)> = (0..a.len())
        .map(|i| (false, i))
        .chain((0..b.len()).map(|j| (true, j)))
        .collect();
    let bx = |item: &(bool, usize)| if item.0 { &b[item.1] } else { &a[item.1] };
    items.sort_by(|p, q| bx(p).min_x.cmp(&bx(q).min_x).then(p.cmp(q)));
    let mut active_a: Vec<usize> = Vec::new();
    let mut active_b: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for item in &items {
        let cur = bx(item);
        if item.0 {
            active_a.retain(|&i| a[i].max_x >= cur.min_x);
            for &i in &active_a {
                if a[i].min_y <= cur.max_y && cur.min_y <= a[i].max_y {
                    out.push((i, item.1));
                }
            }
            active_b.push(item.1);
        } else {
            active_b.retain(|&j| b[j].max_x >= cur.min_x);
            for &j in &active_b {
                if b[j].min_y <= cur.max_y && cur.min_y <= b[j].max_y {
                    out.push((item.1, j));
                }
            }
            active_a.push(item.1);
        }
    }
    out.sort_unstable();
    out
}

/// Every pairwise intersection in the family, sorted by owners then point.
pub fn family_intersections(curves: &[Curve]) -> Result<Vec<IntersectionRecord>> {
    let boxes: Vec<BBox> = curves.iter().map(Curve::bbox).collect();
    let mut out = Vec::new();
    for (i, j) in candidate_pairs_within(&boxes) {
        for x in curve_intersections(&curves[i], &curves[j])? {
            out.push(IntersectionRecord {
                owners: (i, j),
                point: x.point,
                kind: x.kind,
            });
        }
    }
    Ok(out)
}

/// Every pair of curves meets in at most one point.
pub fn is_one_intersecting(family: &CurveFamily) -> Result<bool> {
    let boxes: Vec<BBox> = family.iter().map(Curve::bbox).collect();
    for (i, j) in candidate_pairs_within(&boxes) {
        if raw_points(&family[i], &family[j])?.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Curves of the same color (red or blue) never meet.
pub fn same_color_disjoint(family: &CurveFamily) -> bool {
    let boxes: Vec<BBox> = family.iter().map(Curve::bbox).collect();
    candidate_pairs_within(&boxes).into_iter().all(|(i, j)| {
        family[i].color() != family[j].color() || !curves_meet(&family[i], &family[j])
    })
}

/// For every curve of `a`, the sorted indices of the curves of `b` it meets.
pub fn incidences(a: &[Curve], b: &[Curve]) -> Vec<Vec<usize>> {
    let ba: Vec<BBox> = a.iter().map(Curve::bbox).collect();
    let bb: Vec<BBox> = b.iter().map(Curve::bbox).collect();
    let mut out = vec![Vec::new(); a.len()];
    for (i, j) in candidate_pairs_between(&ba, &bb) {
        if curves_meet(&a[i], &b[j]) {
            out[i].push(j);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    SelfIntersection {
        curve: usize,
        detail: String,
    },
    Overlap {
        curves: (usize, usize),
    },
    SharedEndpoint {
        curves: (usize, usize),
        point: Point,
    },
    TriplePoint {
        point: Point,
        curves: Vec<usize>,
    },
}

/// Reports every departure from general position: self-intersections,
/// collinear overlaps, shared endpoints and points common to three or more
/// curves. An empty result means the family is in general position.
pub fn validate_general_position(family: &CurveFamily) -> Vec<Violation> {
    validate_curves(&family.curves)
}

pub fn validate_curves(curves: &[Curve]) -> Vec<Violation> {
    let mut violations = Vec::new();
    for (i, c) in curves.iter().enumerate() {
        if let Err(e) = Curve::new(c.vertices().to_vec(), c.color()) {
            violations.push(Violation::SelfIntersection {
                curve: i,
                detail: e.to_string(),
            });
        }
    }
    let boxes: Vec<BBox> = curves.iter().map(Curve::bbox).collect();
    let mut at_point: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for (i, j) in candidate_pairs_within(&boxes) {
        match raw_points(&curves[i], &curves[j]) {
            Err(_) => violations.push(Violation::Overlap { curves: (i, j) }),
            Ok(points) => {
                for p in points {
                    if curves[i].is_endpoint(&p) && curves[j].is_endpoint(&p) {
                        violations.push(Violation::SharedEndpoint {
                            curves: (i, j),
                            point: p.clone(),
                        });
                    }
                    let owners = at_point.entry(p).or_default();
                    owners.insert(i);
                    owners.insert(j);
                }
            }
        }
    }
    for (point, owners) in at_point {
        if owners.len() >= 3 {
            violations.push(Violation::TriplePoint {
                point,
                curves: owners.into_iter().collect(),
            });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Color;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Curve {
        Curve::segment(p(a.0, a.1), p(b.0, b.1), Color::Red).unwrap()
    }

    fn poly(pts: &[(i64, i64)], color: Color) -> Curve {
        Curve::new(pts.iter().map(|&(x, y)| p(x, y)).collect(), color).unwrap()
    }

    #[test]
    fn v_shape_touches_horizontal_segment() {
        let h = seg((-1, 0), (3, 0));
        let v = poly(&[(0, 1), (1, 0), (2, 1)], Color::Blue);
        let xs = curve_intersections(&h, &v).unwrap();
        assert_eq!(
            xs,
            vec![Intersection {
                point: p(1, 0),
                kind: IntersectionKind::Touching
            }]
        );
    }

    #[test]
    fn perpendicular_segments_cross() {
        let xs = curve_intersections(&seg((0, 0), (2, 0)), &seg((1, -1), (1, 1))).unwrap();
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].kind, IntersectionKind::Crossing);
    }

    #[test]
    fn disjoint_segments_have_no_records() {
        assert!(
            curve_intersections(&seg((0, 0), (1, 0)), &seg((0, 1), (1, 1)))
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn bend_crossing_through_vertex() {
        // The polyline passes straight through the segment at its bend.
        let h = seg((-2, 0), (2, 0));
        let z = poly(&[(-1, -2), (0, 0), (1, 2)], Color::Blue);
        let xs = curve_intersections(&h, &z).unwrap();
        assert_eq!(xs[0].kind, IntersectionKind::Crossing);
    }

    #[test]
    fn endpoint_in_interior() {
        let xs = curve_intersections(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 3))).unwrap();
        assert_eq!(xs[0].kind, IntersectionKind::EndpointContact);
    }

    #[test]
    fn shared_endpoint_and_overlap_are_errors() {
        assert!(curve_intersections(&seg((0, 0), (2, 0)), &seg((2, 0), (2, 3))).is_err());
        assert!(curve_intersections(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))).is_err());
    }

    #[test]
    fn double_contact_is_not_touching() {
        // W-shaped curve that dips onto the segment twice.
        let h = seg((-1, 0), (5, 0));
        let w = poly(&[(0, 1), (1, 0), (2, 1), (3, 0), (4, 1)], Color::Blue);
        let xs = curve_intersections(&h, &w).unwrap();
        assert_eq!(xs.len(), 2);
        assert!(xs.iter().all(|x| x.kind == IntersectionKind::Grazing));
    }

    #[test]
    fn one_intersecting_detection() {
        let h = seg((0, 0), (6, 0));
        let s = poly(&[(1, 1), (2, -1), (3, -1), (4, 1)], Color::Blue);
        let fam = CurveFamily::shapes(vec![h.clone(), s.clone()]);
        let xs = curve_intersections(&h, &s).unwrap();
        assert_eq!(xs.len(), 2);
        assert!(xs.iter().all(|x| x.kind == IntersectionKind::Crossing));
        assert!(!is_one_intersecting(&fam).unwrap());
        let cross = CurveFamily::shapes(vec![
            seg((0, 0), (2, 2)),
            seg((0, 2), (2, 0)),
            seg((1, -1), (1, 3)),
        ]);
        // Three segments through (1,1) form a triple point but are still 1-intersecting.
        assert!(is_one_intersecting(&cross).unwrap());
        assert!(is_one_intersecting(&CurveFamily::shapes(vec![])).unwrap());
    }

    #[test]
    fn validation_reports() {
        let concurrent = CurveFamily::shapes(vec![
            seg((0, 0), (2, 2)),
            seg((0, 2), (2, 0)),
            seg((1, -1), (1, 3)),
        ]);
        let v = validate_general_position(&concurrent);
        assert!(
            matches!(&v[..], [Violation::TriplePoint { curves, .. }] if curves == &vec![0, 1, 2])
        );

        let grid = CurveFamily::shapes(vec![
            seg((0, 1), (3, 1)),
            seg((0, 2), (3, 2)),
            seg((1, 0), (1, 3)),
            seg((2, 0), (2, 3)),
        ]);
        assert!(validate_general_position(&grid).is_empty());

        let twins = CurveFamily::shapes(vec![seg((0, 0), (1, 1)), seg((0, 0), (1, 1))]);
        assert!(validate_general_position(&twins)
            .iter()
            .any(|v| matches!(v, Violation::Overlap { .. })));
    }

    #[test]
    fn candidate_pairs_match_brute_force() {
        let curves = [
            seg((0, 0), (4, 0)),
            seg((1, -1), (1, 1)),
            seg((5, 5), (6, 6)),
            seg((3, -2), (3, 2)),
            seg((-3, 3), (10, 3)),
        ];
        let boxes: Vec<BBox> = curves.iter().map(Curve::bbox).collect();
        let mut brute = Vec::new();
        for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                if boxes[i].overlaps(&boxes[j]) {
                    brute.push((i, j));
                }
            }
        }
        assert_eq!(candidate_pairs_within(&boxes), brute);
        let mut brute_between = Vec::new();
        for i in 0..2 {
            for j in 0..boxes.len() {
                if boxes[i].overlaps(&boxes[j]) {
                    brute_between.push((i, j));
                }
            }
        }
        assert_eq!(candidate_pairs_between(&boxes[..2], &boxes), brute_between);
    }
}
