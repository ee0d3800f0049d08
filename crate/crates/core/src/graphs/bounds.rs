use serde::Serialize;

use super::{count_tangencies, delaunay_graph, is_planar, pairwise_disjoint};
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::geometry::{incidences, is_one_intersecting, same_color_disjoint, Color, CurveFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum BoundStatus {
    Pass,
    Violation,
    PreconditionFailed(String),
}

/// Outcome of checking `measured ≤ bound` on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub check: String,
    pub n: usize,
    pub measured: usize,
    pub bound: i64,
    pub slack: i64,
    pub status: BoundStatus,
}

impl BoundReport {
    fn new(check: &str, n: usize, measured: usize, bound: i64) -> Self {
        let slack = bound - measured as i64;
        BoundReport {
            check: check.to_string(),
            n,
            measured,
            bound,
            slack,
            status: if slack >= 0 {
                BoundStatus::Pass
            } else {
                BoundStatus::Violation
            },
        }
    }

    fn precondition(mut self, reason: impl Into<String>) -> Self {
        self.status = BoundStatus::PreconditionFailed(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == BoundStatus::Pass
    }

    pub fn violated(&self) -> bool {
        self.status == BoundStatus::Violation
    }
}

/// The connector conditions shared by the grounded and single-face bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectorAudit {
    /// Connectors meeting a number of shapes other than two.
    pub not_two: Vec<usize>,
    /// Connectors repeating a pair already joined by an earlier connector.
    pub repeated_pair: Vec<usize>,
    pub pairwise_disjoint: bool,
}

impl ConnectorAudit {
    pub fn run(shapes: &CurveFamily, connectors: &CurveFamily) -> Self {
        let hits = incidences(&connectors.curves, &shapes.curves);
        let mut seen = std::collections::BTreeSet::new();
        let mut audit = ConnectorAudit {
            not_two: Vec::new(),
            repeated_pair: Vec::new(),
            pairwise_disjoint: pairwise_disjoint(&connectors.curves),
        };
        for (c, h) in hits.iter().enumerate() {
            if h.len() != 2 {
                audit.not_two.push(c);
            } else if !seen.insert((h[0], h[1])) {
                audit.repeated_pair.push(c);
            }
        }
        audit
    }

    pub fn failure(&self) -> Option<String> {
        if let Some(c) = self.not_two.first() {
            Some(format!("connector {c} does not meet exactly two shapes"))
        } else if let Some(c) = self.repeated_pair.first() {
            Some(format!("connector {c} joins an already joined pair"))
        } else if !self.pairwise_disjoint {
            Some("connectors are not pairwise disjoint".into())
        } else {
            None
        }
    }
}

fn red_blue_only(shapes: &CurveFamily) -> bool {
    shapes
        .iter()
        .all(|c| matches!(c.color(), Color::Red | Color::Blue))
}

/// Tangencies of a red/blue family with disjoint same-colored curves are at
/// most `11n − 11`. By default every pair must meet at most once; with
/// `allow_multi_crossing` pairs may cross repeatedly as long as no bounded
/// face has only two vertices.
pub fn verify_tangency_bound(
    shapes: &CurveFamily,
    allow_multi_crossing: bool,
) -> Result<BoundReport> {
    let n = shapes.len();
    let measured = count_tangencies(shapes)?;
    let report = BoundReport::new("tangencies", n, measured, 11 * n as i64 - 11);
    if !red_blue_only(shapes) {
        return Ok(report.precondition("curves must be red or blue"));
    }
    if !same_color_disjoint(shapes) {
        return Ok(report.precondition("two curves of the same color meet"));
    }
    if !allow_multi_crossing {
        if !is_one_intersecting(shapes)? {
            return Ok(report.precondition("two curves meet more than once"));
        }
    } else {
        let arr = Arrangement::build(&shapes.curves)?;
        if let Some(f) = (1..arr.num_faces()).find(|&f| arr.face_size(f) == 2) {
            return Ok(report.precondition(format!("face {f} has two vertices")));
        }
    }
    Ok(report)
}

/// `|D(S, C)| ≤ 13n − 11` for axis-parallel segments and `33n − 25` for
/// general curves, when all connectors start in one common face.
pub fn verify_grounded_bound(
    shapes: &CurveFamily,
    connectors: &CurveFamily,
) -> Result<BoundReport> {
    let n = shapes.len();
    let measured = delaunay_graph(shapes, connectors).num_edges();
    let report = if shapes.is_axis_parallel_segments() {
        BoundReport::new("grounded-axis-parallel", n, measured, 13 * n as i64 - 11)
    } else {
        BoundReport::new("grounded", n, measured, 33 * n as i64 - 25)
    };
    if let Some(reason) = ConnectorAudit::run(shapes, connectors).failure() {
        return Ok(report.precondition(reason));
    }
    let arr = Arrangement::build(&shapes.curves)?;
    if arr.common_face(&connectors.curves)?.is_none() {
        return Ok(report.precondition("no face meets every connector"));
    }
    Ok(report)
}

/// `|C| ≤ 5|S| + 2|F| − 3` when every connector meets face `face` of the
/// arrangement of `S`, and `|F|` is the face size.
pub fn three_curve_face_bound(
    shapes: &CurveFamily,
    connectors: &CurveFamily,
    face: usize,
) -> Result<BoundReport> {
    let arr = Arrangement::build(&shapes.curves)?;
    let n = shapes.len();
    let size = arr.face_size(face);
    let report = BoundReport::new(
        "single-face",
        n,
        connectors.len(),
        5 * n as i64 + 2 * size as i64 - 3,
    );
    if let Some(reason) = ConnectorAudit::run(shapes, connectors).failure() {
        return Ok(report.precondition(reason));
    }
    for (i, c) in connectors.iter().enumerate() {
        if !arr.faces_met_by(c)?.contains(&face) {
            return Ok(report.precondition(format!("connector {i} misses face {face}")));
        }
    }
    Ok(report)
}

/// With disjoint shapes and disjoint connectors `D(S, C)` is planar: at most
/// `3n − 3` edges, or `2n − 2` when every edge joins a red and a blue shape.
/// Graphs on at most 200 vertices are also run through a planarity test.
pub fn planarity_audit(shapes: &CurveFamily, connectors: &CurveFamily) -> Result<BoundReport> {
    let n = shapes.len();
    let d = delaunay_graph(shapes, connectors);
    let bipartite = d.bipartite_by_color(&shapes.curves);
    let bound = if bipartite {
        2 * n as i64 - 2
    } else {
        3 * n as i64 - 3
    };
    let check = if bipartite {
        "planar-bipartite"
    } else {
        "planar"
    };
    let mut report = BoundReport::new(check, n, d.num_edges(), bound);
    if !super::pairwise_disjoint(&shapes.curves) {
        return Ok(report.precondition("shapes are not pairwise disjoint"));
    }
    if !pairwise_disjoint(&connectors.curves) {
        return Ok(report.precondition("connectors are not pairwise disjoint"));
    }
    if n <= 200 && !is_planar(n, &d.edges()) {
        report.status = BoundStatus::Violation;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_comb, gen_crossing_connectors, gen_grid, gen_touching_family};
    use crate::geometry::{Curve, Point};
    use crate::rng::trial_rng;

    fn seg(x0: i64, y0: i64, x1: i64, y1: i64, color: Color) -> Curve {
        Curve::segment(Point::from_ints(x0, y0), Point::from_ints(x1, y1), color).unwrap()
    }

    #[test]
    fn one_touching_pair() {
        let s = CurveFamily::shapes(vec![
            seg(0, 0, 4, 0, Color::Red),
            Curve::new(
                vec![
                    Point::from_ints(0, 2),
                    Point::from_ints(2, 0),
                    Point::from_ints(4, 2),
                ],
                Color::Blue,
            )
            .unwrap(),
        ]);
        let r = verify_tangency_bound(&s, false).unwrap();
        assert_eq!((r.measured, r.bound, r.passed()), (1, 11, true));
    }

    #[test]
    fn touching_family_bound() {
        let s = gen_touching_family(100, &mut trial_rng(1, 0)).unwrap();
        let r = verify_tangency_bound(&s, false).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.measured >= 50 && r.measured <= 1089);
    }

    #[test]
    fn tangency_preconditions() {
        let same = CurveFamily::shapes(vec![
            seg(0, 0, 2, 2, Color::Red),
            seg(0, 2, 2, 0, Color::Red),
        ]);
        let r = verify_tangency_bound(&same, false).unwrap();
        assert!(matches!(r.status, BoundStatus::PreconditionFailed(_)));
        let neutral = CurveFamily::shapes(vec![seg(0, 0, 2, 2, Color::Neutral)]);
        assert!(!verify_tangency_bound(&neutral, false).unwrap().passed());
    }

    #[test]
    fn lens_is_rejected_only_when_bounded() {
        let v = Curve::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 4),
                Point::from_ints(4, 0),
            ],
            Color::Blue,
        )
        .unwrap();
        let s = CurveFamily::shapes(vec![seg(-1, 1, 5, 1, Color::Red), v]);
        assert!(matches!(
            verify_tangency_bound(&s, false).unwrap().status,
            BoundStatus::PreconditionFailed(_)
        ));
        assert!(matches!(
            verify_tangency_bound(&s, true).unwrap().status,
            BoundStatus::PreconditionFailed(_)
        ));
        // A red stub poking into the lens gives its face a third vertex.
        let v = Curve::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(20, 40),
                Point::from_ints(40, 0),
            ],
            Color::Blue,
        )
        .unwrap();
        let s = CurveFamily::shapes(vec![
            seg(-10, 10, 50, 10, Color::Red),
            v,
            seg(19, 20, 19, 50, Color::Red),
        ]);
        assert!(!verify_tangency_bound(&s, false).unwrap().passed());
        assert!(verify_tangency_bound(&s, true).unwrap().passed());
    }

    #[test]
    fn two_segments_one_connector() {
        let s = CurveFamily::shapes(vec![
            seg(0, 0, 0, -4, Color::Blue),
            seg(2, 0, 2, -4, Color::Blue),
        ]);
        let c = CurveFamily::connectors(vec![seg(-1, -1, 3, -1, Color::Neutral)]);
        let r = verify_grounded_bound(&s, &c).unwrap();
        assert_eq!((r.measured, r.bound, r.passed()), (1, 15, true));
        let f = three_curve_face_bound(&s, &c, 0).unwrap();
        assert!(f.passed());
        assert_eq!(f.bound, 5 * 2 + 2 * 4 - 3);
    }

    #[test]
    fn comb_is_grounded() {
        let (s, c) = gen_comb(6);
        let r = verify_grounded_bound(&s, &c).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.measured, 6);
    }

    #[test]
    fn dense_grid_is_not_grounded() {
        let g = gen_grid(68, 68, &mut trial_rng(0, 0));
        let c = gen_crossing_connectors(&g).unwrap();
        let r = verify_grounded_bound(&g, &c).unwrap();
        // Both the axis-parallel and the general formula are exceeded.
        assert_eq!((r.n, r.measured, r.bound), (136, 4624, 13 * 136 - 11));
        assert!(r.measured > 33 * 136 - 25);
        assert!(matches!(r.status, BoundStatus::PreconditionFailed(_)));
    }

    #[test]
    fn planarity_of_disjoint_instances() {
        let s = CurveFamily::shapes(vec![
            seg(0, 0, 0, 4, Color::Red),
            seg(2, 0, 2, 4, Color::Blue),
            seg(4, 0, 4, 4, Color::Red),
        ]);
        let c = CurveFamily::connectors(vec![
            seg(-1, 1, 3, 1, Color::Neutral),
            seg(1, 3, 5, 3, Color::Neutral),
        ]);
        let r = planarity_audit(&s, &c).unwrap();
        assert_eq!(
            (r.check.as_str(), r.measured, r.bound),
            ("planar-bipartite", 2, 4)
        );
        assert!(r.passed());
    }
}
