//! Exact primitives: rationals, points, orientation, segment intersection and
//! angular ordering of direction vectors.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A point with exact rational coordinates. Ordered lexicographically by
/// `(x, y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn sub(&self, other: &Point) -> Vector {
        Vector {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn offset(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = rat(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::format::parse_point(&text).map_err(serde::de::Error::custom)
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// A free vector (difference of two points).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    pub x: Rational,
    pub y: Rational,
}

impl Vector {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vector { x, y }
    }

    pub fn cross(&self, other: &Vector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn scale(&self, k: &Rational) -> Vector {
        Vector::new(&self.x * k, &self.y * k)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn neg(&self) -> Vector {
        Vector::new(-&self.x, -&self.y)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// 0 for directions in the half-open upper half plane `[0, pi)`, 1 otherwise.
    fn half(&self) -> u8 {
        if self.y.is_positive() || (self.y.is_zero() && self.x.is_positive()) {
            0
        } else {
            1
        }
    }
}

fn sign(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

/// Counter-clockwise angular order of nonzero directions, starting at the
/// positive x axis. Parallel directions pointing the same way compare equal.
pub fn angle_cmp(a: &Vector, b: &Vector) -> Ordering {
    a.half().cmp(&b.half()).then_with(|| sign(&b.cross(a)))
}

/// Sign of the turn `a -> b -> c`: `Greater` for counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    sign(&b.sub(a).cross(&c.sub(a)))
}

/// Axis-aligned bounding box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBox {
    pub min_x: Rational,
    pub min_y: Rational,
    pub max_x: Rational,
    pub max_y: Rational,
}

impl BBox {
    pub fn of_points<'a>(mut points: impl Iterator<Item = &'a Point>) -> BBox {
        let first = points.next().expect("bounding box of an empty point set");
        let mut b = BBox {
            min_x: first.x.clone(),
            min_y: first.y.clone(),
            max_x: first.x.clone(),
            max_y: first.y.clone(),
        };
        for p in points {
            if p.x < b.min_x {
                b.min_x = p.x.clone();
            }
            if p.x > b.max_x {
                b.max_x = p.x.clone();
            }
            if p.y < b.min_y {
                b.min_y = p.y.clone();
            }
            if p.y > b.max_y {
                b.max_y = p.y.clone();
            }
        }
        b
    }

    pub fn overlaps(&self, other: &BBox) -> bool {
        self.min_x <= other.max_x
            && other.min_x <= self.max_x
            && self.min_y <= other.max_y
            && other.min_y <= self.max_y
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.min_x <= p.x && p.x <= self.max_x && self.min_y <= p.y && p.y <= self.max_y
    }

    pub fn union(&self, other: &BBox) -> BBox {
        BBox {
            min_x: self.min_x.clone().min(other.min_x.clone()),
            min_y: self.min_y.clone().min(other.min_y.clone()),
            max_x: self.max_x.clone().max(other.max_x.clone()),
            max_y: self.max_y.clone().max(other.max_y.clone()),
        }
    }
}

/// Result of intersecting two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Empty,
    SinglePoint(Point),
    /// The intersection is a segment of positive length.
    DegenerateOverlap,
}

fn segment_boxes_overlap(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> bool {
    let (ax_lo, ax_hi) = if a0.x <= a1.x {
        (&a0.x, &a1.x)
    } else {
        (&a1.x, &a0.x)
    };
    let (bx_lo, bx_hi) = if b0.x <= b1.x {
        (&b0.x, &b1.x)
    } else {
        (&b1.x, &b0.x)
    };
    if ax_hi < bx_lo || bx_hi < ax_lo {
        return false;
    }
    let (ay_lo, ay_hi) = if a0.y <= a1.y {
        (&a0.y, &a1.y)
    } else {
        (&a1.y, &a0.y)
    };
    let (by_lo, by_hi) = if b0.y <= b1.y {
        (&b0.y, &b1.y)
    } else {
        (&b1.y, &b0.y)
    };
    !(ay_hi < by_lo || by_hi < ay_lo)
}

/// Exact intersection of segments `a0a1` and `b0b1` (both of positive length).
pub fn segment_intersection(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> SegmentIntersection {
    if !segment_boxes_overlap(a0, a1, b0, b1) {
        return SegmentIntersection::Empty;
    }
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        // Collinear: order along the line lexicographically.
        let (alo, ahi) = if a0 <= a1 { (a0, a1) } else { (a1, a0) };
        let (blo, bhi) = if b0 <= b1 { (b0, b1) } else { (b1, b0) };
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        return match lo.cmp(hi) {
            Ordering::Greater => SegmentIntersection::Empty,
            Ordering::Equal => SegmentIntersection::SinglePoint(lo.clone()),
            Ordering::Less => SegmentIntersection::DegenerateOverlap,
        };
    }
    if o1 == o2 {
        return SegmentIntersection::Empty;
    }
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    if o3 == o4 {
        return SegmentIntersection::Empty;
    }
    if o1 == Ordering::Equal {
        return SegmentIntersection::SinglePoint(b0.clone());
    }
    if o2 == Ordering::Equal {
        return SegmentIntersection::SinglePoint(b1.clone());
    }
    if o3 == Ordering::Equal {
        return SegmentIntersection::SinglePoint(a0.clone());
    }
    if o4 == Ordering::Equal {
        return SegmentIntersection::SinglePoint(a1.clone());
    }
    let da = a1.sub(a0);
    let db = b1.sub(b0);
    let t = b0.sub(a0).cross(&db) / da.cross(&db);
    SegmentIntersection::SinglePoint(a0.offset(&da.scale(&t)))
}

/// True if `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && (a.x.clone().min(b.x.clone()) <= p.x)
        && (p.x <= a.x.clone().max(b.x.clone()))
        && (a.y.clone().min(b.y.clone()) <= p.y)
        && (p.y <= a.y.clone().max(b.y.clone()))
}
