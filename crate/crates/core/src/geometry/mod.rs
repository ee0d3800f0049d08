//! Exact geometric primitives, curve intersection classification and input
//! validation.

mod curve;
mod intersect;
mod kernel;

pub use curve::{curve_order, Color, Curve, CurveFamily, FamilyRole, LShape};
pub use intersect::{
    candidate_pairs_between, candidate_pairs_within, curve_intersections, curves_meet,
    family_intersections, incidences, is_one_intersecting, same_color_disjoint, validate_curves,
    validate_general_position, Intersection, IntersectionKind, IntersectionRecord, Violation,
};
pub use kernel::{
    angle_cmp, on_segment, orient, rat, ratio, segment_intersection, to_f64, BBox, Point, Rational,
    SegmentIntersection, Vector,
};
