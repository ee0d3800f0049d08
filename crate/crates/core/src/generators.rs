//! Instance generators, including the extremal constructions: crossing grids
//! with near-crossing connectors, tight faces, touching families, triangular
//! grids and grounded instances.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::geometry::{
    curves_meet, incidences, on_segment, rat, ratio, to_f64, Color, Curve, CurveFamily, LShape,
    Point, Rational,
};
use crate::lshape_cf::{Grounded, GroundedFamily};

fn seg(a: Point, b: Point, color: Color) -> Curve {
    Curve::segment(a, b, color).expect("generator emits distinct endpoints")
}

fn iseg(x0: i64, y0: i64, x1: i64, y1: i64, color: Color) -> Curve {
    seg(Point::from_ints(x0, y0), Point::from_ints(x1, y1), color)
}

/// `k` distinct values from `1..=range`, in random order.
fn distinct<R: Rng>(rng: &mut R, k: usize, range: usize) -> Vec<i64> {
    rand::seq::index::sample(rng, range, k)
        .into_iter()
        .map(|v| v as i64 + 1)
        .collect()
}

/// `h` red horizontal and `v` blue vertical segments, every horizontal
/// crossing every vertical, with pairwise distinct coordinates.
pub fn gen_grid<R: Rng>(h: usize, v: usize, rng: &mut R) -> CurveFamily {
    let ys = distinct(rng, h, 3 * h);
    let xs = distinct(rng, v, 3 * v);
    let (w, t) = (3 * v as i64 + 1, 3 * h as i64 + 1);
    let mut curves: Vec<Curve> = ys.iter().map(|&y| iseg(0, y, w, y, Color::Red)).collect();
    curves.extend(xs.iter().map(|&x| iseg(x, 0, x, t, Color::Blue)));
    CurveFamily::shapes(curves)
}

/// `n` random axis-parallel segments, red horizontals and blue verticals,
/// with all coordinates distinct so the family is in general position.
pub fn gen_axis_parallel<R: Rng>(n: usize, rng: &mut R) -> CurveFamily {
    let nh = rng.gen_range(0..=n);
    // Endpoints are odd, fixed coordinates even, so nothing coincides.
    let mut ends: Vec<i64> = (0..2 * n as i64).map(|v| 2 * v + 1).collect();
    let mut fixed: Vec<i64> = (1..=n as i64).map(|v| 2 * v).collect();
    ends.shuffle(rng);
    fixed.shuffle(rng);
    let curves = (0..n)
        .map(|k| {
            let (a, b) = (ends[2 * k], ends[2 * k + 1]);
            let (lo, hi, c) = (a.min(b), a.max(b), fixed[k]);
            if k < nh {
                iseg(lo, c, hi, c, Color::Red)
            } else {
                iseg(c, lo, c, hi, Color::Blue)
            }
        })
        .collect();
    CurveFamily::shapes(curves)
}

/// One short connector per crossing of a grid, crossing exactly the two
/// segments through it and no other connector.
pub fn gen_crossing_connectors(grid: &CurveFamily) -> Result<CurveFamily> {
    let horizontal: Vec<&Curve> = grid.iter().filter(|c| c.first().y == c.last().y).collect();
    let vertical: Vec<&Curve> = grid.iter().filter(|c| c.first().x == c.last().x).collect();
    if horizontal.len() + vertical.len() != grid.len() {
        return Err(Error::Precondition(
            "a grid consists of axis-parallel segments".into(),
        ));
    }
    let mut xs: Vec<&Rational> = vertical.iter().map(|c| &c.first().x).collect();
    let mut ys: Vec<&Rational> = horizontal.iter().map(|c| &c.first().y).collect();
    let min_gap = |vals: &mut Vec<&Rational>| -> Option<Rational> {
        vals.sort();
        vals.windows(2).map(|w| w[1] - w[0]).min()
    };
    let gap = [min_gap(&mut xs), min_gap(&mut ys)]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or_else(|| rat(1));
    let span = |c: &Curve, vertical: bool| {
        let (a, b) = if vertical {
            (&c.first().y, &c.last().y)
        } else {
            (&c.first().x, &c.last().x)
        };
        if a < b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    };
    let d = &gap / rat(4);
    let mut out = Vec::new();
    for hs in &horizontal {
        let y = &hs.first().y;
        let (hx0, hx1) = span(hs, false);
        for vs in &vertical {
            let x = &vs.first().x;
            let (vy0, vy1) = span(vs, true);
            if hx0 < *x && *x < hx1 && vy0 < *y && *y < vy1 {
                let two_d = &d * rat(2);
                let a = Point::new(x - &two_d, y + &d);
                let b = Point::new(x + &d, y - &two_d);
                out.push(seg(a, b, Color::Neutral));
            }
        }
    }
    let hits = incidences(&out, &grid.curves);
    if let Some(i) = hits.iter().position(|h| h.len() != 2) {
        return Err(Error::degeneracy(format!(
            "connector {i} meets {} segments; the grid spacing is too tight",
            hits[i].len()
        )));
    }
    Ok(CurveFamily::connectors(out))
}

/// A full `h` by `v` grid whose unbounded face has exactly `4(h + v) - 4`
/// boundary edges.
pub fn gen_tight_face(h: usize, v: usize) -> Result<CurveFamily> {
    if h < 2 || v < 2 {
        return Err(Error::Precondition("a tight face needs h, v >= 2".into()));
    }
    let (h, v) = (h as i64, v as i64);
    let mut curves: Vec<Curve> = (1..=h).map(|y| iseg(0, y, v + 1, y, Color::Red)).collect();
    curves.extend((1..=v).map(|x| iseg(x, 0, x, h + 1, Color::Blue)));
    Ok(CurveFamily::shapes(curves))
}

/// `n` curves: pairwise disjoint red horizontal segments and blue V-shaped
/// curves, each of the first `floor(n/2)` blue curves touching one red
/// segment at its apex. Every other pair is disjoint.
pub fn gen_touching_family<R: Rng>(n: usize, rng: &mut R) -> Result<CurveFamily> {
    if n < 2 {
        return Err(Error::Precondition("a touching family needs n >= 2".into()));
    }
    let reds = n / 2;
    let blues = n - reds;
    let mut columns: Vec<i64> = (0..blues as i64).collect();
    columns.shuffle(rng);
    let heights = distinct(rng, blues, 4 * blues);
    let mut curves = Vec::with_capacity(n);
    let mut vs = Vec::with_capacity(blues);
    for (k, (&col, &y)) in columns.iter().zip(&heights).enumerate() {
        let base = 64 * col;
        let apex_x = base + rng.gen_range(16..48);
        let left = apex_x - rng.gen_range(1..16);
        let right = apex_x + rng.gen_range(1..16);
        let rise = rng.gen_range(1..20);
        if k < reds {
            let lo = base + rng.gen_range(1..16);
            let hi = base + 63 - rng.gen_range(1..16);
            curves.push(iseg(lo, y, hi, y, Color::Red));
        }
        let apex_y = if k < reds { y } else { y + 1 };
        let v = Curve::new(
            vec![
                Point::from_ints(left, apex_y + rise),
                Point::from_ints(apex_x, apex_y),
                Point::from_ints(right, apex_y + rng.gen_range(1..20)),
            ],
            Color::Blue,
        )?;
        vs.push(v);
    }
    curves.extend(vs);
    Ok(CurveFamily::shapes(curves))
}

#[derive(Clone, Copy, Debug)]
pub struct LShapeSpread {
    /// Widths are drawn log-uniformly from one to this many x-slots.
    pub max_width_slots: u32,
}

impl Default for LShapeSpread {
    fn default() -> Self {
        LShapeSpread {
            max_width_slots: 256,
        }
    }
}

/// `n` grounded L-shapes with tops on the x-axis, in integer coordinates.
/// Corner abscissae are multiples of four, right ends are `2 mod 4`, and
/// depths are distinct, so no two shapes share a coordinate.
pub fn gen_grounded_family<R: Rng>(n: usize, spread: LShapeSpread, rng: &mut R) -> GroundedFamily {
    let slots = distinct(rng, n, 2 * n.max(1));
    let mut depths: Vec<i64> = (1..=n as i64).collect();
    depths.shuffle(rng);
    let max_log = (spread.max_width_slots.max(1) as f64).log2();
    let mut rights = HashSet::with_capacity(n);
    let mut shapes = Vec::with_capacity(n);
    for (&slot, &depth) in slots.iter().zip(&depths) {
        let x = 4 * slot;
        let drawn = (0..16)
            .map(|_| x + 4 * (2f64.powf(rng.gen_range(0.0..=max_log)).floor() as i64 - 1) + 2)
            .find(|r| !rights.contains(r));
        // Narrow spreads can run out of free right ends; then take the next free one.
        let right = drawn.unwrap_or_else(|| {
            (0..)
                .map(|k| x + 2 + 4 * k)
                .find(|r| !rights.contains(r))
                .unwrap()
        });
        rights.insert(right);
        shapes.push(Grounded { x, right, depth });
    }
    GroundedFamily { shapes }
}

pub fn gen_grounded_lshapes<R: Rng>(n: usize, spread: LShapeSpread, rng: &mut R) -> Vec<LShape> {
    gen_grounded_family(n, spread, rng).to_lshapes()
}

/// A triangular grid of `n / 3` horizontal (red), vertical (blue) and
/// diagonal (neutral) segments. The diagonals are shifted by a quarter so
/// every triple point opens into a small triangle. Returns the segments and
/// one connector per face that has two non-consecutive boundary edges of
/// different directions; each connector joins two such edges inside its face.
pub fn gen_triangular_grid(n: usize) -> Result<(CurveFamily, CurveFamily)> {
    if n < 9 || !n.is_multiple_of(3) {
        return Err(Error::Precondition(
            "a triangular grid needs n divisible by 3, n >= 9".into(),
        ));
    }
    let m = (n / 3) as i64;
    let lo = rat(-m - 1);
    let hi = rat(2 * m + 1);
    let mut curves = Vec::with_capacity(n);
    for j in 0..m {
        curves.push(seg(
            Point::new(lo.clone(), rat(j)),
            Point::new(hi.clone(), rat(j)),
            Color::Red,
        ));
    }
    for i in 0..m {
        curves.push(seg(
            Point::new(rat(i), lo.clone()),
            Point::new(rat(i), hi.clone()),
            Color::Blue,
        ));
    }
    let k0 = m / 2;
    for k in k0..k0 + m {
        // The line x + y = k + 1/4, clipped to the square [lo, hi]^2.
        let c = rat(k) + ratio(1, 4);
        let a = Point::new(&c - &hi, hi.clone());
        let b = Point::new(hi.clone(), &c - &hi);
        curves.push(seg(a, b, Color::Neutral));
    }
    let shapes = CurveFamily::shapes(curves);
    let arr = Arrangement::build(&shapes.curves)?;
    let mut connectors = Vec::new();
    for face in arr.faces() {
        let Some(w) = face.outer else { continue };
        let hs = &arr.walks()[w].half_edges;
        let len = hs.len();
        let color = |h: usize| arr.curves()[arr.links()[h / 2].curve].color();
        let pair = (0..len)
            .flat_map(|a| (a + 2..len).map(move |b| (a, b)))
            .find(|&(a, b)| !(a == 0 && b == len - 1) && color(hs[a]) != color(hs[b]));
        let Some((a, b)) = pair else { continue };
        let third = |h: usize| {
            let p = &arr.nodes()[arr.origin(h)].point;
            let q = &arr.nodes()[arr.target(h)].point;
            let t = ratio(1, 3);
            Point::new(&p.x + (&q.x - &p.x) * &t, &p.y + (&q.y - &p.y) * &t)
        };
        connectors.push(seg(third(hs[a]), third(hs[b]), Color::Neutral));
    }
    let hits = incidences(&connectors, &shapes.curves);
    debug_assert!(hits.iter().all(|h| h.len() == 2));
    Ok((shapes, CurveFamily::connectors(connectors)))
}

/// An odd value strictly between two even values at least two apart.
fn odd_between<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> i64 {
    lo + 1 + 2 * rng.gen_range(0..(hi - lo) / 2)
}

/// A grounded instance of axis-parallel segments: blue verticals and red
/// horizontals below the x-axis on even coordinates (verticals on multiples
/// of four, horizontals on `2 mod 4`, so no endpoint lies on another
/// segment), and connectors shaped
/// as L's hanging from `y = 1` on odd coordinates. Every connector meets
/// exactly two segments, no two connectors meet the same pair, and the
/// connectors are pairwise disjoint. All connectors start in the unbounded
/// face, so the instance is grounded there.
pub fn gen_grounded_segments<R: Rng>(
    n: usize,
    attempts: usize,
    rng: &mut R,
) -> Result<(CurveFamily, CurveFamily)> {
    if n < 2 {
        return Err(Error::Precondition(
            "a grounded instance needs n >= 2".into(),
        ));
    }
    let nv = n / 2;
    let nh = n - nv;
    let size = 2 * n as i64;
    // Verticals: (x, y_top, y_bottom); horizontals: (y, x_left, x_right).
    let vx = distinct(rng, nv, size as usize);
    let hy = distinct(rng, nh, size as usize);
    // Lengths are log-uniform, so short and long segments both occur.
    let max_log = (size as f64).log2();
    let length = |rng: &mut R| 2f64.powf(rng.gen_range(0.0..=max_log)).ceil() as i64;
    let verts: Vec<(i64, i64, i64)> = vx
        .iter()
        .map(|&x| {
            let top = rng.gen_range(0..size);
            let bottom = top + length(rng);
            (4 * x, -4 * top, -4 * bottom)
        })
        .collect();
    let hors: Vec<(i64, i64, i64)> = hy
        .iter()
        .map(|&y| {
            let left = rng.gen_range(0..size);
            let right = left + length(rng);
            (-4 * y + 2, 4 * left + 2, 4 * right + 2)
        })
        .collect();

    // Connector L: vertical at x from 1 down to -d, horizontal to x + w.
    let hits_of = |x: i64, d: i64, w: i64| -> Vec<usize> {
        let mut hits = Vec::new();
        for (i, &(vxi, top, bottom)) in verts.iter().enumerate() {
            // Horizontal part at y = -d meets the vertical if x < vxi < x + w.
            if x < vxi && vxi < x + w && bottom < -d && -d < top {
                hits.push(i);
            }
        }
        for (j, &(y, left, right)) in hors.iter().enumerate() {
            if left < x && x < right && y > -d {
                hits.push(nv + j);
            }
        }
        hits
    };

    let mut used_pairs = BTreeSet::new();
    let mut used_x = HashSet::new();
    let mut used_d = HashSet::new();
    let mut accepted: Vec<(i64, i64, i64)> = Vec::new();
    for _ in 0..attempts {
        // Aim at exactly two shapes: the drop crosses `j` horizontals and
        // the foot crosses `2 - j` verticals.
        let x = 2 * rng.gen_range(0..=4 * size) + 1;
        let mut crossed: Vec<i64> = hors
            .iter()
            .filter(|&&(_, l, r)| l < x && x < r)
            .map(|&(y, _, _)| y)
            .collect();
        crossed.sort_unstable_by(|a, b| b.cmp(a));
        let j = rng.gen_range(0..=crossed.len().min(2));
        let upper = if j == 0 { 0 } else { crossed[j - 1] };
        let lower = crossed.get(j).copied().unwrap_or(-8 * size - 4);
        // With feet to place, drop to the depth of some vertical on the right.
        let (lower, upper) = if j < 2 {
            let reach: Vec<(i64, i64)> = verts
                .iter()
                .filter(|&&(vx, top, bottom)| vx > x && bottom < upper && lower < top)
                .map(|&(_, top, bottom)| (bottom.max(lower), top.min(upper)))
                .collect();
            match reach.choose(rng) {
                Some(&span) => span,
                None => continue,
            }
        } else {
            (lower, upper)
        };
        let d = -odd_between(rng, lower, upper);
        let mut feet: Vec<i64> = verts
            .iter()
            .filter(|&&(vx, top, bottom)| vx > x && bottom < -d && -d < top)
            .map(|&(vx, _, _)| vx)
            .collect();
        feet.sort_unstable();
        let k = 2 - j;
        if feet.len() < k {
            continue;
        }
        let left = if k == 0 { x + 1 } else { feet[k - 1] };
        // Short feet leave room for more disjoint connectors.
        let right = feet.get(k).copied().unwrap_or(i64::MAX).min(left + 4);
        if right - left < 2 {
            continue;
        }
        let w = odd_between(rng, left, right) - x;
        if used_x.contains(&x) || used_x.contains(&(x + w)) || used_d.contains(&d) {
            continue;
        }
        let hits = hits_of(x, d, w);
        if hits.len() != 2 {
            continue;
        }
        let pair = (hits[0], hits[1]);
        if used_pairs.contains(&pair) {
            continue;
        }
        let clash = accepted.iter().any(|&(ax, ad, aw)| {
            let (l, r) = if ax < x {
                ((ax, ad, aw), (x, d, w))
            } else {
                ((x, d, w), (ax, ad, aw))
            };
            l.0 < r.0 && r.0 < l.0 + l.2 && r.1 > l.1
        });
        if clash {
            continue;
        }
        used_pairs.insert(pair);
        used_x.insert(x);
        used_x.insert(x + w);
        used_d.insert(d);
        accepted.push((x, d, w));
    }

    let mut shapes: Vec<Curve> = verts
        .iter()
        .map(|&(x, top, bottom)| iseg(x, top, x, bottom, Color::Blue))
        .collect();
    shapes.extend(hors.iter().map(|&(y, l, r)| iseg(l, y, r, y, Color::Red)));
    let connectors = accepted
        .iter()
        .map(|&(x, d, w)| {
            Curve::new(
                vec![
                    Point::from_ints(x, 1),
                    Point::from_ints(x, -d),
                    Point::from_ints(x + w, -d),
                ],
                Color::Neutral,
            )
            .expect("connector is an L")
        })
        .collect();
    Ok((
        CurveFamily::shapes(shapes),
        CurveFamily::connectors(connectors),
    ))
}

/// Pairwise disjoint L-shaped connectors hanging from a line above `shapes`,
/// each meeting at least one shape. Connector coordinates sit on half
/// integers, so with integer shapes every contact is a proper crossing.
/// All connectors start in the unbounded face.
pub fn gen_hanging_connectors<R: Rng>(
    shapes: &CurveFamily,
    attempts: usize,
    rng: &mut R,
) -> CurveFamily {
    if shapes.is_empty() {
        return CurveFamily::connectors(Vec::new());
    }
    let bbox = shapes
        .iter()
        .map(Curve::bbox)
        .reduce(|a, b| a.union(&b))
        .expect("nonempty family");
    let lo_x = to_f64(&bbox.min_x).floor() as i64 - 1;
    let hi_x = to_f64(&bbox.max_x).ceil() as i64 + 1;
    let lo_y = to_f64(&bbox.min_y).floor() as i64 - 1;
    let top_y = to_f64(&bbox.max_y).ceil() as i64 + 1;
    let top = rat(top_y);
    let half = ratio(1, 2);
    let mut accepted: Vec<Curve> = Vec::new();
    for _ in 0..attempts {
        let x = rat(rng.gen_range(lo_x..hi_x)) + &half;
        let y = rat(rng.gen_range(lo_y..top_y)) + &half;
        let w = rat(rng.gen_range(1..=(hi_x - lo_x).max(2) / 2));
        let corner = Point::new(x.clone(), y.clone());
        let end = Point::new(&x + &w, y);
        if shapes.iter().any(|c| {
            c.segments()
                .any(|(a, b)| on_segment(&corner, a, b) || on_segment(&end, a, b))
        }) {
            continue;
        }
        let c = Curve::new(
            vec![Point::new(x, top.clone()), corner, end],
            Color::Neutral,
        )
        .expect("connector is an L");
        if accepted.iter().any(|a| curves_meet(a, &c)) {
            continue;
        }
        if shapes.iter().any(|s| curves_meet(s, &c)) {
            accepted.push(c);
        }
    }
    CurveFamily::connectors(accepted)
}

/// A comb: `teeth` red horizontal teeth hanging off nothing, interleaved with
/// `teeth` blue verticals, and one connector per adjacent tooth/vertical pair
/// reaching in from the unbounded face.
pub fn gen_comb(teeth: usize) -> (CurveFamily, CurveFamily) {
    let mut shapes = Vec::new();
    let mut connectors = Vec::new();
    for k in 0..teeth as i64 {
        let x = 10 * k;
        shapes.push(iseg(x, -2, x + 4, -2, Color::Red));
        shapes.push(iseg(x + 6, -1, x + 6, -8, Color::Blue));
        connectors.push(
            Curve::new(
                vec![
                    Point::from_ints(x + 3, 1),
                    Point::from_ints(x + 3, -3),
                    Point::from_ints(x + 7, -3),
                ],
                Color::Neutral,
            )
            .expect("connector is an L"),
        );
    }
    (
        CurveFamily::shapes(shapes),
        CurveFamily::connectors(connectors),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{
        curve_intersections, family_intersections, is_one_intersecting, same_color_disjoint,
        validate_curves, IntersectionKind,
    };
    use crate::rng::trial_rng;

    #[test]
    fn grid_realizes_every_crossing() {
        let g = gen_grid(3, 4, &mut trial_rng(1, 0));
        assert_eq!(g.len(), 7);
        let recs = family_intersections(&g.curves).unwrap();
        assert_eq!(recs.len(), 12);
        assert!(recs.iter().all(|r| r.kind == IntersectionKind::Crossing));
        assert!(validate_curves(&g.curves).is_empty());
    }

    #[test]
    fn crossing_connectors() {
        let g = gen_grid(2, 2, &mut trial_rng(3, 0));
        let c = gen_crossing_connectors(&g).unwrap();
        assert_eq!(c.len(), 4);
        let one = gen_crossing_connectors(&gen_grid(1, 1, &mut trial_rng(3, 1))).unwrap();
        assert_eq!(one.len(), 1);
        let mut all = g.curves.clone();
        all.extend(c.curves.clone());
        assert!(validate_curves(&all).is_empty());
    }

    #[test]
    fn touching_family_counts() {
        for n in [2, 3, 10, 11] {
            let f = gen_touching_family(n, &mut trial_rng(5, n as u64)).unwrap();
            assert_eq!(f.len(), n);
            assert!(is_one_intersecting(&f).unwrap());
            assert!(same_color_disjoint(&f));
            let touching = family_intersections(&f.curves)
                .unwrap()
                .iter()
                .filter(|r| r.kind == IntersectionKind::Touching)
                .count();
            assert_eq!(touching, n / 2);
        }
    }

    #[test]
    fn grounded_family_is_in_general_position() {
        let shapes = gen_grounded_lshapes(40, LShapeSpread::default(), &mut trial_rng(9, 0));
        let curves: Vec<Curve> = shapes.iter().map(|l| l.to_curve(Color::Neutral)).collect();
        assert!(validate_curves(&curves).is_empty());
        assert!(shapes.iter().all(|l| l.top().y == rat(0)));
    }

    #[test]
    fn grounded_segments_audit() {
        let (s, c) = gen_grounded_segments(30, 2000, &mut trial_rng(11, 0)).unwrap();
        assert!(!c.is_empty());
        let hits = incidences(&c.curves, &s.curves);
        assert!(hits.iter().all(|h| h.len() == 2));
        let pairs: BTreeSet<&Vec<usize>> = hits.iter().collect();
        assert_eq!(pairs.len(), c.len());
        let mut all = s.curves.clone();
        all.extend(c.curves.clone());
        assert!(validate_curves(&all).is_empty());
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                assert!(curve_intersections(&c[i], &c[j]).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn triangular_grid_connectors() {
        let (s, c) = gen_triangular_grid(9).unwrap();
        assert_eq!(s.len(), 9);
        assert!(c.len() >= 4);
        assert!(incidences(&c.curves, &s.curves)
            .iter()
            .all(|h| h.len() == 2));
    }

    #[test]
    fn axis_parallel_families_are_in_general_position() {
        for t in 0..20 {
            let f = gen_axis_parallel(2 + t, &mut trial_rng(12, t as u64));
            assert_eq!(f.len(), 2 + t);
            assert!(f.is_axis_parallel_segments());
            assert!(same_color_disjoint(&f));
            assert!(validate_curves(&f.curves).is_empty());
        }
    }

    #[test]
    fn hanging_connectors_are_disjoint_and_grounded() {
        let s = gen_axis_parallel(12, &mut trial_rng(13, 0));
        let c = gen_hanging_connectors(&s, 200, &mut trial_rng(13, 1));
        assert!(!c.is_empty());
        assert!(incidences(&c.curves, &s.curves)
            .iter()
            .all(|h| !h.is_empty()));
        let mut all = s.curves.clone();
        all.extend(c.curves.clone());
        assert!(validate_curves(&all).is_empty());
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                assert!(!curves_meet(&c[i], &c[j]));
            }
        }
        let arr = Arrangement::build(&s.curves).unwrap();
        assert_eq!(
            arr.common_face(&c.curves).unwrap(),
            Some(arr.unbounded_face())
        );
    }
}
