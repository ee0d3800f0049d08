//! Conflict-free coloring of grounded L-shapes by divide and conquer on a
//! vertical line, with one palette block per recursion depth.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{gen_grounded_family, LShapeSpread};
use crate::geometry::{rat, LShape, Point, Rational};
use crate::hypergraph::{cf_color, degeneracy_color, Hypergraph};
use crate::rng::trial_rng;

/// A grounded L-shape with its top on the x-axis: a vertical part from
/// `(x, 0)` down to `(x, -depth)` and a horizontal part from there to
/// `(right, -depth)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Grounded {
    pub x: i64,
    pub right: i64,
    pub depth: i64,
}

impl Grounded {
    /// Whether the horizontal extent `[x, right]` contains `x0`.
    pub fn spans(&self, x0: i64) -> bool {
        self.x <= x0 && x0 <= self.right
    }

    pub fn to_lshape(&self) -> LShape {
        LShape::new(
            Point::new(rat(self.x), rat(-self.depth)),
            rat(self.depth),
            rat(self.right - self.x),
        )
        .expect("positive extents")
    }
}

/// Two grounded shapes meet exactly when the one further right starts below
/// the other's horizontal part and before its right end.
pub fn grounded_meet(a: &Grounded, b: &Grounded) -> bool {
    let (l, r) = if a.x < b.x { (a, b) } else { (b, a) };
    r.x < l.right && r.depth > l.depth
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroundedFamily {
    pub shapes: Vec<Grounded>,
}

impl GroundedFamily {
    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// Positive extents, and no coordinate shared between two shapes: all
    /// corner abscissae and right ends are distinct, and so are depths.
    pub fn validate(&self) -> Result<()> {
        let mut xs = BTreeSet::new();
        let mut depths = BTreeSet::new();
        for (i, s) in self.shapes.iter().enumerate() {
            if s.right <= s.x || s.depth <= 0 {
                return Err(Error::InvalidCurve(format!("shape {i} has an empty part")));
            }
            if !xs.insert(s.x) || !xs.insert(s.right) || !depths.insert(s.depth) {
                return Err(Error::degeneracy(format!("shape {i} shares a coordinate")));
            }
        }
        Ok(())
    }

    pub fn to_lshapes(&self) -> Vec<LShape> {
        self.shapes.iter().map(Grounded::to_lshape).collect()
    }

    /// Converts L-shapes whose tops lie on one horizontal line, replacing
    /// coordinates by their ranks. Ranks keep every comparison the
    /// intersection test makes, so the intersection graph is unchanged.
    pub fn from_lshapes(shapes: &[LShape]) -> Result<Self> {
        let Some(first) = shapes.first() else {
            return Ok(GroundedFamily::default());
        };
        let line = first.top().y;
        if let Some(i) = shapes.iter().position(|s| s.top().y != line) {
            return Err(Error::Precondition(format!(
                "shape {i} does not have its top on the common line"
            )));
        }
        let mut xs: Vec<Rational> = shapes
            .iter()
            .flat_map(|s| [s.corner.x.clone(), s.right_end().x])
            .collect();
        xs.sort();
        let mut ys: Vec<Rational> = shapes.iter().map(|s| s.corner.y.clone()).collect();
        ys.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) || ys.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::degeneracy("L-shapes share a coordinate"));
        }
        let rank = |v: &[Rational], q: &Rational| v.binary_search(q).unwrap() as i64;
        let n = ys.len() as i64;
        let family = GroundedFamily {
            shapes: shapes
                .iter()
                .map(|s| Grounded {
                    x: rank(&xs, &s.corner.x),
                    right: rank(&xs, &s.right_end().x),
                    // Lower corners get larger depths.
                    depth: n - rank(&ys, &s.corner.y),
                })
                .collect(),
        };
        Ok(family)
    }

    pub fn intersects(&self, i: usize, j: usize) -> bool {
        i != j && grounded_meet(&self.shapes[i], &self.shapes[j])
    }

    /// `N(ℓ)` for every shape: the other shapes it meets, sorted.
    pub fn neighborhoods(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut by_x: Vec<usize> = (0..n).collect();
        by_x.sort_by_key(|&i| self.shapes[i].x);
        let xs: Vec<i64> = by_x.iter().map(|&i| self.shapes[i].x).collect();
        let mut out = vec![Vec::new(); n];
        for (pos, &a) in by_x.iter().enumerate() {
            let sa = self.shapes[a];
            let end = xs.partition_point(|&x| x < sa.right);
            for &b in &by_x[pos + 1..end] {
                if self.shapes[b].depth > sa.depth {
                    out[a].push(b as u32);
                    out[b].push(a as u32);
                }
            }
        }
        for nb in &mut out {
            nb.sort_unstable();
        }
        out
    }
}

/// A partition of some shapes by the vertical line `x = x0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub x0: i64,
    /// Shapes entirely left of the line.
    pub left: Vec<usize>,
    /// Shapes whose horizontal extent contains `x0`.
    pub middle: Vec<usize>,
    /// Shapes entirely right of the line.
    pub right: Vec<usize>,
}

pub fn split_at(family: &GroundedFamily, members: &[usize], x0: i64) -> Split {
    let mut s = Split {
        x0,
        left: Vec::new(),
        middle: Vec::new(),
        right: Vec::new(),
    };
    for &i in members {
        let g = &family.shapes[i];
        if g.right < x0 {
            s.left.push(i);
        } else if g.x > x0 {
            s.right.push(i);
        } else {
            s.middle.push(i);
        }
    }
    s
}

/// Splits at the corner abscissa of the shape with sorted position
/// `⌊(m−1)/2⌋`, so both sides get at most `m/2` shapes.
pub fn split(family: &GroundedFamily, members: &[usize]) -> Split {
    let mut xs: Vec<i64> = members.iter().map(|&i| family.shapes[i].x).collect();
    xs.sort_unstable();
    let x0 = xs.get(xs.len().saturating_sub(1) / 2).copied().unwrap_or(0);
    split_at(family, members, x0)
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelLog {
    pub depth: usize,
    pub nodes: usize,
    pub middle_shapes: usize,
    /// Shapes moved into a middle part because a hyperedge straddled the line.
    pub promoted: usize,
    pub hyperedges: usize,
    /// Size of this depth's palette block.
    pub palette: usize,
    pub max_rounds: usize,
    /// Largest proper-coloring palette seen in any round at this depth.
    pub max_round_palette: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CfResult {
    /// Color of each shape, by index.
    pub colors: Vec<u32>,
    pub palette: usize,
    pub depth: usize,
    pub levels: Vec<LevelLog>,
    /// Whether some shapes got the shared color outside the depth blocks.
    pub shared_color: bool,
    pub verified: bool,
}

struct Node {
    members: Vec<usize>,
    edges: Vec<Vec<u32>>,
}

/// Conflict-free coloring of the neighborhood hypergraph `{N(ℓ)}`.
///
/// Every neighborhood is handled at the first recursion node whose middle
/// part it meets. A neighborhood meeting both outer parts but not the middle
/// moves its smallest shape into the middle. The middle part is colored with
/// the iterated framework over its traces, using the depth's palette block,
/// so a color unique inside the middle stays unique in the neighborhood.
/// Shapes lying in no middle hyperedge all get one shared color.
pub fn cf_color_grounded(family: &GroundedFamily) -> Result<CfResult> {
    family.validate()?;
    let n = family.len();
    let mut edges: Vec<Vec<u32>> = family
        .neighborhoods()
        .into_iter()
        .filter(|e| !e.is_empty())
        .collect();
    edges.sort();
    edges.dedup();
    let mut local = vec![u32::MAX; n];
    let mut depth_of = vec![0usize; n];
    let mut levels = Vec::new();
    let mut frontier = vec![Node {
        members: (0..n).collect(),
        edges,
    }];
    let mut side = vec![0u8; n];
    while !frontier.is_empty() {
        let depth = levels.len();
        let mut log = LevelLog {
            depth,
            nodes: 0,
            middle_shapes: 0,
            promoted: 0,
            hyperedges: 0,
            palette: 0,
            max_rounds: 0,
            max_round_palette: 0,
        };
        let mut next = Vec::new();
        for node in frontier {
            if node.members.is_empty() {
                continue;
            }
            log.nodes += 1;
            let sp = split(family, &node.members);
            for &i in &sp.left {
                side[i] = 1;
            }
            for &i in &sp.middle {
                side[i] = 2;
            }
            for &i in &sp.right {
                side[i] = 3;
            }
            let mut changed = true;
            while changed {
                changed = false;
                for e in &node.edges {
                    let mut seen = [false; 4];
                    for &v in e {
                        seen[side[v as usize] as usize] = true;
                    }
                    if !seen[2] && seen[1] && seen[3] {
                        side[e[0] as usize] = 2;
                        log.promoted += 1;
                        changed = true;
                    }
                }
            }
            let (mut left, mut middle, mut right) = (Vec::new(), Vec::new(), Vec::new());
            for &i in &node.members {
                match side[i] {
                    1 => left.push(i),
                    2 => middle.push(i as u32),
                    _ => right.push(i),
                }
            }
            let (mut h2, mut e1, mut e3) = (Vec::new(), Vec::new(), Vec::new());
            for e in node.edges {
                let inside: Vec<u32> = e
                    .iter()
                    .copied()
                    .filter(|&v| side[v as usize] == 2)
                    .collect();
                if !inside.is_empty() {
                    h2.push(inside);
                } else if side[e[0] as usize] == 1 {
                    e1.push(e);
                } else {
                    e3.push(e);
                }
            }
            log.hyperedges += h2.len();
            log.middle_shapes += middle.len();
            let mut covered: Vec<u32> = h2.iter().flatten().copied().collect();
            covered.sort_unstable();
            covered.dedup();
            let h = Hypergraph::new(covered.iter().copied(), h2)?;
            let cf = cf_color(&h, degeneracy_color)?;
            log.palette = log.palette.max(cf.coloring.palette());
            log.max_rounds = log.max_rounds.max(cf.rounds);
            log.max_round_palette = log
                .max_round_palette
                .max(cf.round_palettes.iter().copied().max().unwrap_or(0));
            for &v in &covered {
                local[v as usize] = cf.coloring.get(v).expect("total coloring");
                depth_of[v as usize] = depth;
            }
            next.push(Node {
                members: left,
                edges: e1,
            });
            next.push(Node {
                members: right,
                edges: e3,
            });
        }
        frontier = next;
        if log.nodes > 0 {
            levels.push(log);
        }
    }
    // Shapes in no middle hyperedge share one extra color, never unique in
    // any hyperedge that needs it.
    let neutral = local.contains(&u32::MAX);
    let mut offsets = Vec::with_capacity(levels.len());
    let mut total = usize::from(neutral);
    for l in &levels {
        offsets.push(total);
        total += l.palette;
    }
    let colors: Vec<u32> = (0..n)
        .map(|i| match local[i] {
            u32::MAX => 0,
            c => offsets[depth_of[i]] as u32 + c,
        })
        .collect();
    if let Err((shape, neighborhood)) = cf_verify(family, &colors) {
        return Err(Error::CfCheckFailure {
            shape,
            neighborhood,
        });
    }
    let palette = colors.iter().collect::<BTreeSet<_>>().len();
    Ok(CfResult {
        colors,
        palette,
        depth: levels.len(),
        levels,
        shared_color: neutral,
        verified: true,
    })
}

/// Checks that every nonempty neighborhood has a color occurring exactly
/// once in it. On failure returns the shape and its neighborhood.
pub fn cf_verify(
    family: &GroundedFamily,
    colors: &[u32],
) -> std::result::Result<(), (usize, Vec<usize>)> {
    let mut count = std::collections::HashMap::new();
    for (i, nb) in family.neighborhoods().into_iter().enumerate() {
        if nb.is_empty() {
            continue;
        }
        count.clear();
        for &v in &nb {
            *count.entry(colors[v as usize]).or_insert(0usize) += 1;
        }
        if !count.values().any(|&k| k == 1) {
            return Err((i, nb.into_iter().map(|v| v as usize).collect()));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub trials: usize,
    pub max_palette: usize,
    pub mean_palette: f64,
    pub max_depth: usize,
    pub all_verified: bool,
    /// Value of the fitted curve at this `n`.
    pub fitted: f64,
}

/// Least-squares fit `palette ≈ a + b·log₂²n` of the per-size maxima.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub a: f64,
    pub b: f64,
    /// Largest ratio of a measured maximum to the fitted value.
    pub max_ratio_to_fit: f64,
}

impl GrowthReport {
    pub fn palette_at(&self, n: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.max_palette)
    }
}

fn log2_sq(n: usize) -> f64 {
    let l = (n.max(1) as f64).log2();
    l * l
}

/// Colors `trials` random grounded families at each size and fits the
/// palette growth. Trial `t` at size index `k` draws from stream
/// `k * trials + t` of `seed`.
pub fn palette_growth_report(
    sizes: &[usize],
    trials: usize,
    seed: u64,
    spread: LShapeSpread,
) -> Result<GrowthReport> {
    let mut rows = Vec::with_capacity(sizes.len());
    for (k, &n) in sizes.iter().enumerate() {
        let mut row = GrowthRow {
            n,
            trials,
            max_palette: 0,
            mean_palette: 0.0,
            max_depth: 0,
            all_verified: true,
            fitted: 0.0,
        };
        for t in 0..trials {
            let mut rng = trial_rng(seed, (k * trials + t) as u64);
            let family = gen_grounded_family(n, spread, &mut rng);
            let res = cf_color_grounded(&family)?;
            row.max_palette = row.max_palette.max(res.palette);
            row.mean_palette += res.palette as f64 / trials.max(1) as f64;
            row.max_depth = row.max_depth.max(res.depth);
            row.all_verified &= res.verified;
        }
        rows.push(row);
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (log2_sq(r.n), r.max_palette as f64))
        .collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let (mx, my) = (sx / m.max(1.0), sy / m.max(1.0));
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let b = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let a = my - b * mx;
    let mut max_ratio_to_fit: f64 = 0.0;
    for r in &mut rows {
        r.fitted = a + b * log2_sq(r.n);
        max_ratio_to_fit = max_ratio_to_fit.max(r.max_palette as f64 / r.fitted);
    }
    Ok(GrowthReport {
        rows,
        a,
        b,
        max_ratio_to_fit,
    })
}

/// Grounded family read from L-shapes given as curves, with the rank
/// compression of [`GroundedFamily::from_lshapes`].
pub fn grounded_from_curves(curves: &[crate::geometry::Curve]) -> Result<GroundedFamily> {
    let shapes = curves
        .iter()
        .map(LShape::from_curve)
        .collect::<Result<Vec<_>>>()?;
    GroundedFamily::from_lshapes(&shapes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{curves_meet, Color};
    use proptest::prelude::*;

    fn g(x: i64, right: i64, depth: i64) -> Grounded {
        Grounded { x, right, depth }
    }

    #[test]
    fn meet_rule() {
        assert!(grounded_meet(&g(0, 10, 1), &g(4, 12, 3)));
        assert!(!grounded_meet(&g(0, 10, 3), &g(4, 12, 1)));
        assert!(!grounded_meet(&g(0, 2, 1), &g(4, 12, 3)));
    }

    #[test]
    fn single_and_disjoint() {
        let one = GroundedFamily {
            shapes: vec![g(0, 2, 1)],
        };
        let r = cf_color_grounded(&one).unwrap();
        assert_eq!(r.palette, 1);
        let disjoint = GroundedFamily {
            shapes: (0..20).map(|i| g(4 * i, 4 * i + 2, i + 1)).collect(),
        };
        let r = cf_color_grounded(&disjoint).unwrap();
        assert_eq!(r.palette, 1);
    }

    #[test]
    fn split_examples() {
        let all = GroundedFamily {
            shapes: (0..6).map(|i| g(4 * i, 100 + 4 * i, i + 1)).collect(),
        };
        let s = split_at(&all, &[0, 1, 2, 3, 4, 5], 50);
        assert!(s.left.is_empty() && s.right.is_empty());
        assert_eq!(s.middle.len(), 6);
        let clusters = GroundedFamily {
            shapes: vec![g(0, 2, 1), g(4, 6, 2), g(100, 102, 3), g(104, 106, 4)],
        };
        let s = split_at(&clusters, &[0, 1, 2, 3], 50);
        assert!(s.middle.is_empty());
        assert_eq!((s.left, s.right), (vec![0, 1], vec![2, 3]));
    }

    #[test]
    fn verify_examples() {
        let tri = GroundedFamily {
            shapes: vec![g(0, 10, 1), g(2, 11, 2), g(4, 12, 3)],
        };
        assert_eq!(
            tri.neighborhoods(),
            vec![vec![1, 2], vec![0, 2], vec![0, 1]]
        );
        assert!(cf_verify(&tri, &[0, 1, 2]).is_ok());
        assert_eq!(cf_verify(&tri, &[0, 0, 1]), Err((2, vec![0, 1])));
        let pair = GroundedFamily {
            shapes: vec![g(0, 10, 1), g(2, 11, 2)],
        };
        assert!(cf_verify(&pair, &[0, 0]).is_ok());
    }

    #[test]
    fn staircase() {
        let n = 40;
        let stairs = GroundedFamily {
            shapes: (0..n).map(|i| g(4 * i, 4 * n + 2 + 4 * i, i + 1)).collect(),
        };
        let r = cf_color_grounded(&stairs).unwrap();
        assert!(r.verified);
        let blocks: usize = r.levels.iter().map(|l| l.palette).sum();
        assert!(blocks + usize::from(r.shared_color) >= r.palette);
    }

    #[test]
    fn lshape_round_trip_keeps_intersections() {
        let mut rng = trial_rng(5, 0);
        let fam = gen_grounded_family(30, LShapeSpread::default(), &mut rng);
        let back = GroundedFamily::from_lshapes(&fam.to_lshapes()).unwrap();
        assert_eq!(back.neighborhoods(), fam.neighborhoods());
    }

    #[test]
    fn ties_are_rejected() {
        let ls = GroundedFamily {
            shapes: vec![g(0, 4, 1), g(4, 8, 2)],
        }
        .to_lshapes();
        assert!(GroundedFamily::from_lshapes(&ls).is_err());
    }

    #[test]
    fn growth_report_fits() {
        let rep = palette_growth_report(&[16, 64, 256], 2, 9, LShapeSpread::default()).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.rows.iter().all(|r| r.all_verified));
    }

    proptest! {
        #[test]
        fn neighborhoods_match_exact_geometry(seed in 0u64..500, n in 1usize..14) {
            let mut rng = trial_rng(seed, 1);
            let fam = gen_grounded_family(n, LShapeSpread { max_width_slots: 8 }, &mut rng);
            let curves: Vec<_> = fam.to_lshapes().iter().map(|l| l.to_curve(Color::Neutral)).collect();
            let nb = fam.neighborhoods();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        prop_assert_eq!(nb[i].contains(&(j as u32)), curves_meet(&curves[i], &curves[j]));
                    }
                }
            }
        }

        #[test]
        fn split_bounds_and_separation(seed in 0u64..500, n in 1usize..60) {
            let mut rng = trial_rng(seed, 2);
            let fam = gen_grounded_family(n, LShapeSpread::default(), &mut rng);
            let members: Vec<usize> = (0..n).collect();
            let s = split(&fam, &members);
            prop_assert!(2 * s.left.len() <= n && 2 * s.right.len() <= n);
            for &a in &s.left {
                for &b in &s.right {
                    prop_assert!(!fam.intersects(a, b));
                }
            }
        }

        #[test]
        fn pipeline_is_conflict_free(seed in 0u64..1000, n in 1usize..120, w in 1u32..300) {
            let mut rng = trial_rng(seed, 3);
            let fam = gen_grounded_family(n, LShapeSpread { max_width_slots: w }, &mut rng);
            let r = cf_color_grounded(&fam).unwrap();
            prop_assert!(cf_verify(&fam, &r.colors).is_ok());
            let bound = (n as f64).log2().ceil() as usize + 1;
            prop_assert!(r.depth <= bound);
        }
    }
}
