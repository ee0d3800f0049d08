use serde::Serialize;

use super::Arrangement;
use crate::error::{Error, Result};

/// Vertex counts along one boundary walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkAudit {
    pub face: usize,
    pub walk: usize,
    /// The walk surrounds its face.
    pub outer: bool,
    pub size: usize,
    /// Appearances of crossing points (degree four).
    pub crossings: usize,
    /// Appearances of free segment endpoints (degree one).
    pub endpoints: usize,
    /// Appearances of endpoints lying on another segment (degree three).
    pub junctions: usize,
    pub distinct_edges: usize,
    /// Whether the turn identity holds; `None` when it is not claimed
    /// (single-edge walks and walks through junctions).
    pub identity: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditFailure {
    pub face: usize,
    pub walk: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkAuditReport {
    pub n: usize,
    pub walks: Vec<WalkAudit>,
    /// `(face, |E_F|)` for every face.
    pub face_edges: Vec<(usize, usize)>,
    pub failures: Vec<AuditFailure>,
}

impl WalkAuditReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn max_face_edges(&self) -> usize {
        self.face_edges.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }
}

/// Checks the turn identities `x = 2y - 4` (walks inside a face) and
/// `x = 2y + 4` (the walk around a bounded face), `e <= x` on every walk with
/// more than two edges, and `|E_F| <= 4n - 4` on every face. Requires more
/// than one curve, all axis-parallel segments.
pub fn audit_walks(arr: &Arrangement) -> Result<WalkAuditReport> {
    let n = arr.curves().len();
    if n < 2 {
        return Err(Error::Precondition(
            "the walk audit needs at least two segments".into(),
        ));
    }
    if !arr.curves().iter().all(|c| c.is_axis_parallel_segment()) {
        return Err(Error::Precondition(
            "the walk audit needs axis-parallel segments".into(),
        ));
    }
    let mut walks = Vec::new();
    let mut failures = Vec::new();
    let mut face_edges = Vec::new();
    for face in arr.faces() {
        for w in face.walks() {
            let mut audit = WalkAudit {
                face: face.id,
                walk: w,
                outer: arr.walks()[w].is_outer,
                size: arr.walk_size(w),
                crossings: 0,
                endpoints: 0,
                junctions: 0,
                distinct_edges: arr.walk_edges(w).len(),
                identity: None,
            };
            for v in arr.walk_vertices(w) {
                match arr.degree(v) {
                    1 => audit.endpoints += 1,
                    4 => audit.crossings += 1,
                    _ => audit.junctions += 1,
                }
            }
            if audit.size > 2 && audit.junctions == 0 {
                let (x, y) = (audit.crossings as i64, audit.endpoints as i64);
                let expected = if audit.outer { 2 * y + 4 } else { 2 * y - 4 };
                audit.identity = Some(x == expected);
                if x != expected {
                    failures.push(AuditFailure {
                        face: face.id,
                        walk: Some(w),
                        reason: format!(
                            "x = {x} but 2y {} 4 = {expected}",
                            if audit.outer { '+' } else { '-' }
                        ),
                    });
                }
                if audit.distinct_edges > audit.crossings {
                    failures.push(AuditFailure {
                        face: face.id,
                        walk: Some(w),
                        reason: format!("e = {} exceeds x = {x}", audit.distinct_edges),
                    });
                }
            }
            walks.push(audit);
        }
        let e = arr.boundary_edges(face.id).len();
        if e > 4 * n - 4 {
            failures.push(AuditFailure {
                face: face.id,
                walk: None,
                reason: format!("|E_F| = {e} exceeds 4n - 4 = {}", 4 * n - 4),
            });
        }
        face_edges.push((face.id, e));
    }
    Ok(WalkAuditReport {
        n,
        walks,
        face_edges,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Color, Curve, Point};

    fn seg(x0: i64, y0: i64, x1: i64, y1: i64) -> Curve {
        Curve::segment(
            Point::from_ints(x0, y0),
            Point::from_ints(x1, y1),
            Color::Red,
        )
        .unwrap()
    }

    #[test]
    fn plus_sign() {
        let arr = Arrangement::build(&[seg(-1, 0, 1, 0), seg(0, -1, 0, 1)]).unwrap();
        let report = audit_walks(&arr).unwrap();
        assert!(report.is_ok());
        assert_eq!(report.walks.len(), 1);
        let w = &report.walks[0];
        assert_eq!((w.crossings, w.endpoints, w.identity), (4, 4, Some(true)));
    }

    #[test]
    fn junctions_are_recorded_separately() {
        let arr = Arrangement::build(&[seg(-1, 0, 1, 0), seg(0, 0, 0, 1)]).unwrap();
        let report = audit_walks(&arr).unwrap();
        assert!(report.is_ok());
        assert_eq!(report.walks[0].junctions, 3);
        assert_eq!(report.walks[0].identity, None);
    }

    #[test]
    fn preconditions() {
        let one = Arrangement::build(&[seg(0, 0, 1, 0)]).unwrap();
        assert!(matches!(audit_walks(&one), Err(Error::Precondition(_))));
        let diag = Arrangement::build(&[seg(0, 0, 1, 1), seg(0, 1, 1, 2)]).unwrap();
        assert!(matches!(audit_walks(&diag), Err(Error::Precondition(_))));
    }
}
