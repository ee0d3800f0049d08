//! Shared helpers for the integration tests.
#![allow(dead_code)]

use tanglab::geometry::{
    family_intersections, incidences, on_segment, ratio, Color, Curve, CurveFamily,
    IntersectionKind, Point, Rational, Vector,
};
use tanglab::graphs::pairwise_disjoint;

/// Directions of the two branches of `c` leaving `p`, which lies in its
/// interior.
fn branches(c: &Curve, p: &Point) -> Vec<Vector> {
    let v = c.vertices();
    if let Some(k) = v.iter().position(|q| q == p) {
        return vec![v[k - 1].sub(p), v[k + 1].sub(p)];
    }
    c.segments()
        .find(|(a, b)| on_segment(p, a, b))
        .map(|(a, b)| vec![a.sub(p), b.sub(p)])
        .unwrap_or_default()
}

/// Replaces every touching pair by a short segment from a point of one
/// curve to a point of the other near the touching point. Returns the
/// connectors and the touching pairs they stand for, in the same order.
pub fn tangencies_to_connectors(shapes: &CurveFamily) -> (CurveFamily, Vec<(usize, usize)>) {
    let touches: Vec<_> = family_intersections(&shapes.curves)
        .expect("valid family")
        .into_iter()
        .filter(|r| r.kind == IntersectionKind::Touching)
        .collect();
    let pairs: Vec<(usize, usize)> = touches.iter().map(|r| r.owners).collect();
    let mut eps: Rational = ratio(1, 4);
    for _ in 0..40 {
        let connectors: Vec<Curve> = touches
            .iter()
            .map(|r| {
                let (i, j) = r.owners;
                let bi = branches(&shapes.curves[i], &r.point);
                let bj = branches(&shapes.curves[j], &r.point);
                let (u, w) = bi
                    .iter()
                    .flat_map(|u| bj.iter().map(move |w| (u, w)))
                    .find(|(u, w)| u.cross(w) != ratio(0, 1))
                    .expect("touching curves are not collinear at the contact");
                Curve::segment(
                    r.point.offset(&u.scale(&eps)),
                    r.point.offset(&w.scale(&eps)),
                    Color::Neutral,
                )
                .expect("distinct endpoints")
            })
            .collect();
        let hits = incidences(&connectors, &shapes.curves);
        let exact = hits.iter().zip(&pairs).all(|(h, &(i, j))| {
            let mut h = h.clone();
            h.sort_unstable();
            h[..] == [i.min(j), i.max(j)]
        });
        if exact && pairwise_disjoint(&connectors) {
            return (CurveFamily::connectors(connectors), pairs);
        }
        eps /= ratio(2, 1);
    }
    panic!("no small enough connector offset");
}
