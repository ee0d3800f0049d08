use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::kernel::{segment_intersection, BBox, Point, Rational, SegmentIntersection};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
    Neutral,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Neutral => "neutral",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            "neutral" => Ok(Color::Neutral),
            other => Err(format!("unknown color `{other}`")),
        }
    }
}

/// A simple polygonal chain with a color tag.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Curve {
    vertices: Vec<Point>,
    color: Color,
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.color, self.vertices)
    }
}

impl Curve {
    /// Builds a curve, rejecting repeated consecutive vertices, fold-backs and
    /// self-intersections.
    pub fn new(vertices: Vec<Point>, color: Color) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidCurve(
                "a curve needs at least two vertices".into(),
            ));
        }
        for (i, w) in vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(Error::InvalidCurve(format!(
                    "vertices {i} and {} coincide at {:?}",
                    i + 1,
                    w[0]
                )));
            }
        }
        let curve = Curve { vertices, color };
        if let Some(msg) = curve.self_intersection() {
            return Err(Error::InvalidCurve(msg));
        }
        Ok(curve)
    }

    pub fn segment(a: Point, b: Point, color: Color) -> Result<Self> {
        Curve::new(vec![a, b], color)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn with_color(&self, color: Color) -> Curve {
        Curve {
            vertices: self.vertices.clone(),
            color,
        }
    }

    pub fn num_segments(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn first(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Point {
        self.vertices.last().unwrap()
    }

    pub fn is_endpoint(&self, p: &Point) -> bool {
        p == self.first() || p == self.last()
    }

    pub fn bbox(&self) -> BBox {
        BBox::of_points(self.vertices.iter())
    }

    pub fn is_axis_parallel_segment(&self) -> bool {
        self.vertices.len() == 2
            && (self.vertices[0].x == self.vertices[1].x
                || self.vertices[0].y == self.vertices[1].y)
    }

    /// Translates every vertex by `(dx, dy)`.
    pub fn translated(&self, dx: &Rational, dy: &Rational) -> Curve {
        Curve {
            vertices: self
                .vertices
                .iter()
                .map(|p| Point::new(&p.x + dx, &p.y + dy))
                .collect(),
            color: self.color,
        }
    }

    fn self_intersection(&self) -> Option<String> {
        let segs: Vec<_> = self.segments().collect();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let r = segment_intersection(segs[i].0, segs[i].1, segs[j].0, segs[j].1);
                match (j == i + 1, r) {
                    (_, SegmentIntersection::DegenerateOverlap) => {
                        return Some(format!("segments {i} and {j} overlap"));
                    }
                    (true, SegmentIntersection::SinglePoint(p)) if &p == segs[i].1 => {}
                    (_, SegmentIntersection::Empty) => {}
                    (_, SegmentIntersection::SinglePoint(p)) => {
                        return Some(format!("segments {i} and {j} meet at {p:?}"));
                    }
                }
            }
        }
        None
    }
}

/// An L-shape: a vertical segment whose bottom endpoint is the left endpoint
/// of a horizontal segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LShape {
    pub corner: Point,
    pub height: Rational,
    pub width: Rational,
}

impl LShape {
    pub fn new(corner: Point, height: Rational, width: Rational) -> Result<Self> {
        if !height.is_positive() || !width.is_positive() {
            return Err(Error::InvalidCurve(
                "L-shape height and width must be positive".into(),
            ));
        }
        Ok(LShape {
            corner,
            height,
            width,
        })
    }

    pub fn top(&self) -> Point {
        Point::new(self.corner.x.clone(), &self.corner.y + &self.height)
    }

    pub fn right_end(&self) -> Point {
        Point::new(&self.corner.x + &self.width, self.corner.y.clone())
    }

    /// The three-vertex polyline: top of the vertical part, corner, right end.
    pub fn to_curve(&self, color: Color) -> Curve {
        Curve {
            vertices: vec![self.top(), self.corner.clone(), self.right_end()],
            color,
        }
    }

    /// Recognizes a curve of the form `top, corner, right end`.
    pub fn from_curve(curve: &Curve) -> Result<Self> {
        let v = curve.vertices();
        if v.len() != 3 {
            return Err(Error::InvalidCurve(
                "an L-shape has exactly three vertices".into(),
            ));
        }
        let (top, corner, right) = (&v[0], &v[1], &v[2]);
        if top.x != corner.x || corner.y != right.y {
            return Err(Error::InvalidCurve(format!("{curve:?} is not an L-shape")));
        }
        LShape::new(corner.clone(), &top.y - &corner.y, &right.x - &corner.x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyRole {
    /// The shape family `S`.
    Shapes,
    /// The connecting family `C` (or a family `F` of ranges).
    Connectors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub curves: Vec<Curve>,
    pub role: FamilyRole,
}

impl CurveFamily {
    pub fn shapes(curves: Vec<Curve>) -> Self {
        CurveFamily {
            curves,
            role: FamilyRole::Shapes,
        }
    }

    pub fn connectors(curves: Vec<Curve>) -> Self {
        CurveFamily {
            curves,
            role: FamilyRole::Connectors,
        }
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Curve> {
        self.curves.iter()
    }

    pub fn is_axis_parallel_segments(&self) -> bool {
        self.curves.iter().all(Curve::is_axis_parallel_segment)
    }

    /// Sub-family of the curves with the given colors, in original order.
    pub fn filter_colors(&self, colors: &[Color]) -> CurveFamily {
        CurveFamily {
            curves: self
                .curves
                .iter()
                .filter(|c| colors.contains(&c.color()))
                .cloned()
                .collect(),
            role: self.role,
        }
    }
}

impl std::ops::Index<usize> for CurveFamily {
    type Output = Curve;

    fn index(&self, i: usize) -> &Curve {
        &self.curves[i]
    }
}

/// Lexicographic comparison used to make outputs deterministic.
pub fn curve_order(a: &Curve, b: &Curve) -> Ordering {
    a.vertices.cmp(&b.vertices).then(a.color.cmp(&b.color))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::kernel::rat;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn rejects_short_and_repeated() {
        assert!(Curve::new(vec![p(0, 0)], Color::Red).is_err());
        assert!(Curve::new(vec![p(0, 0), p(0, 0)], Color::Red).is_err());
    }

    #[test]
    fn rejects_fold_back() {
        assert!(Curve::new(vec![p(0, 0), p(2, 0), p(1, 0)], Color::Red).is_err());
    }

    #[test]
    fn rejects_self_crossing() {
        let c = Curve::new(vec![p(0, 0), p(2, 2), p(2, 0), p(0, 2)], Color::Blue);
        assert!(c.is_err());
    }

    #[test]
    fn straight_continuation_is_fine() {
        assert!(Curve::new(vec![p(0, 0), p(1, 0), p(2, 0)], Color::Red).is_ok());
    }

    #[test]
    fn lshape_round_trip() {
        let l = LShape::new(p(3, -5), rat(5), rat(4)).unwrap();
        let c = l.to_curve(Color::Neutral);
        assert_eq!(c.vertices(), &[p(3, 0), p(3, -5), p(7, -5)]);
        assert_eq!(LShape::from_curve(&c).unwrap(), l);
        assert!(LShape::new(p(0, 0), rat(0), rat(1)).is_err());
    }
}
