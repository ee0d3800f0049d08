use std::path::Path;

use serde::Serialize;

use tanglab::arrangement::{audit_walks, Arrangement};
use tanglab::format::{parse_hyperedges, print_instance};
use tanglab::graphs::{
    intersection_hypergraph, neighborhood_hypergraph, planarity_audit, three_curve_face_bound,
    verify_grounded_bound, verify_tangency_bound, BoundReport, BoundStatus,
};
use tanglab::hypergraph::{
    b_ck, cf_color, check_cf, check_proper, count_hyperedges_le_k, degeneracy_color,
    linearity_profile, vc_dimension, Hypergraph, LinearityMode,
};
use tanglab::lshape_cf::{cf_color_grounded, grounded_from_curves};
use tanglab::sequences::{ds_bound_check, ds_max_length};
use tanglab::svg::{render_arrangement, render_colored_lshapes, render_curves};

use crate::args::{ArrangeReport, BoundCheck, RunSpec, SourceArgs};
use crate::output::Sink;
use crate::{load, read, write_bundle, CliError, Verdict};

pub fn generate(spec: &RunSpec, source: &SourceArgs, sink: &Sink) -> Result<Verdict, CliError> {
    let inst = load(spec, source)?;
    sink.file("instance.txt", &print_instance(&inst), true)?;
    sink.svg("instance.svg", || {
        let conn = inst.connectors.as_ref().map_or(&[][..], |c| &c.curves[..]);
        render_curves(&inst.shapes.curves, conn)
    })?;
    Ok(Verdict::Pass)
}

#[derive(Serialize)]
struct ArrangementSummary {
    curves: usize,
    vertices: usize,
    edges: usize,
    faces: usize,
    components: usize,
    euler_defect: i64,
    face_size_total: usize,
    max_face_size: usize,
    max_face_edges: usize,
}

pub fn arrange(
    spec: &RunSpec,
    source: &SourceArgs,
    report: ArrangeReport,
    sink: &Sink,
) -> Result<Verdict, CliError> {
    let inst = load(spec, source)?;
    let arr = Arrangement::build(&inst.shapes.curves)?;
    let faces = arr.face_report();
    let total: usize = faces.iter().map(|f| f.size).sum();
    let mut verdict = Verdict::Pass
        .and(arr.euler_defect() == 0)
        .and(total == 2 * arr.num_edges());
    match report {
        ArrangeReport::Summary => sink.rows(
            "summary",
            &[ArrangementSummary {
                curves: arr.curves().len(),
                vertices: arr.num_vertices(),
                edges: arr.num_edges(),
                faces: arr.num_faces(),
                components: arr.components(),
                euler_defect: arr.euler_defect(),
                face_size_total: total,
                max_face_size: faces.iter().map(|f| f.size).max().unwrap_or(0),
                max_face_edges: faces.iter().map(|f| f.distinct_edges).max().unwrap_or(0),
            }],
        )?,
        ArrangeReport::Faces => sink.rows("faces", &faces)?,
        ArrangeReport::Walks => {
            let audit = audit_walks(&arr)?;
            sink.rows("walks", &audit.walks)?;
            for f in &audit.failures {
                eprintln!("face {} walk {:?}: {}", f.face, f.walk, f.reason);
            }
            verdict = verdict.and(audit.is_ok());
        }
    }
    if verdict == Verdict::Fail {
        write_bundle(sink, "arrange", &inst, &faces, "arrange --report walks")?;
    }
    sink.svg("arrangement.svg", || render_arrangement(&arr, true))?;
    Ok(verdict)
}

#[derive(Serialize)]
struct BoundRow {
    check: String,
    n: usize,
    measured: usize,
    bound: i64,
    slack: i64,
    status: &'static str,
    reason: String,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        let (status, reason) = match &r.status {
            BoundStatus::Pass => ("pass", String::new()),
            BoundStatus::Violation => ("violation", String::new()),
            BoundStatus::PreconditionFailed(why) => ("precondition-failed", why.clone()),
        };
        BoundRow {
            check: r.check.clone(),
            n: r.n,
            measured: r.measured,
            bound: r.bound,
            slack: r.slack,
            status,
            reason,
        }
    }
}

#[derive(Serialize)]
struct DsMaxRow {
    symbols: usize,
    max_length: usize,
    bound: usize,
    witness: String,
}

#[derive(Serialize)]
struct DsRow {
    length: usize,
    symbols: usize,
    bound: usize,
    admissible: bool,
    within_bound: bool,
}

pub struct BoundOptions<'a> {
    pub check: BoundCheck,
    pub exhaustive: bool,
    pub sequence: Option<&'a str>,
    pub face: Option<usize>,
    pub allow_multi_crossing: bool,
}

fn ds(source: &SourceArgs, opts: &BoundOptions, sink: &Sink) -> Result<Verdict, CliError> {
    if let Some(seq) = opts.sequence {
        let symbols: Vec<&str> = seq
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let r = ds_bound_check(&symbols);
        sink.rows(
            "ds",
            &[DsRow {
                length: r.length,
                symbols: r.symbols,
                bound: r.bound,
                admissible: r.admissible,
                within_bound: r.within_bound,
            }],
        )?;
        return Ok(Verdict::Pass.and(r.holds()));
    }
    if !opts.exhaustive {
        return Err(CliError::Input(
            "--check ds needs --sequence or --exhaustive with --n".into(),
        ));
    }
    let n = source
        .n
        .as_ref()
        .ok_or_else(|| CliError::Input("--check ds --exhaustive needs --n".into()))?;
    let mut rows = Vec::new();
    let mut verdict = Verdict::Pass;
    for &k in &n.0 {
        let (len, witness) = ds_max_length(k)?;
        let bound = (2 * k).saturating_sub(1);
        verdict = verdict.and(len <= bound);
        let witness: String = witness
            .iter()
            .map(|&s| char::from(b'a' + s as u8))
            .collect();
        rows.push(DsMaxRow {
            symbols: k,
            max_length: len,
            bound,
            witness,
        });
    }
    sink.rows("ds", &rows)?;
    Ok(verdict)
}

pub fn bounds(
    spec: &RunSpec,
    source: &SourceArgs,
    opts: BoundOptions,
    sink: &Sink,
) -> Result<Verdict, CliError> {
    if opts.check == BoundCheck::Ds {
        return ds(source, &opts, sink);
    }
    let inst = load(spec, source)?;
    let shapes = &inst.shapes;
    let connectors = || {
        inst.connectors
            .as_ref()
            .ok_or_else(|| CliError::Input("this check needs a connector family".into()))
    };
    let report = match opts.check {
        BoundCheck::Tangency => verify_tangency_bound(shapes, opts.allow_multi_crossing)?,
        BoundCheck::Grounded => verify_grounded_bound(shapes, connectors()?)?,
        BoundCheck::SingleFace => {
            let face = match opts.face {
                Some(f) => f,
                None => Arrangement::build(&shapes.curves)?.unbounded_face(),
            };
            three_curve_face_bound(shapes, connectors()?, face)?
        }
        BoundCheck::Planarity => planarity_audit(shapes, connectors()?)?,
        BoundCheck::FaceComplexity => {
            let audit = audit_walks(&Arrangement::build(&shapes.curves)?)?;
            let n = shapes.len();
            let measured = audit.max_face_edges();
            let bound = 4 * n as i64 - 4;
            let status = match audit.failures.first() {
                Some(f) => {
                    eprintln!("face {} walk {:?}: {}", f.face, f.walk, f.reason);
                    BoundStatus::Violation
                }
                None if measured as i64 > bound => BoundStatus::Violation,
                None => BoundStatus::Pass,
            };
            BoundReport {
                check: "face-complexity".into(),
                n,
                measured,
                bound,
                slack: bound - measured as i64,
                status,
            }
        }
        BoundCheck::Ds => unreachable!(),
    };
    sink.rows("bounds", &[BoundRow::from(&report)])?;
    if report.violated() {
        write_bundle(
            sink,
            &report.check,
            &inst,
            &report,
            &format!("bounds --check {}", report.check),
        )?;
        return Ok(Verdict::Fail);
    }
    Ok(Verdict::Pass)
}

#[derive(Serialize)]
struct AnalysisRow {
    vertices: usize,
    hyperedges: usize,
    linearity: &'static str,
    c_pairs: usize,
    c_size: usize,
    c: f64,
    proper_palette: usize,
    proper: bool,
    cf_palette: usize,
    cf_rounds: usize,
    cf: bool,
    vc_dimension: Option<usize>,
    e_le_2: usize,
    b_2n: f64,
    e_le_3: usize,
    b_3n: f64,
    e_le_4: usize,
    b_4n: f64,
}

#[derive(Serialize)]
struct VertexColors {
    vertex: u32,
    proper: u32,
    cf: u32,
}

pub fn analyze(
    spec: &RunSpec,
    source: &SourceArgs,
    hyperedges: Option<&Path>,
    exhaustive: bool,
    samples: usize,
    sink: &Sink,
) -> Result<Verdict, CliError> {
    let h = match hyperedges {
        Some(path) => Hypergraph::from_edges(parse_hyperedges(&read(path)?)?),
        None => {
            let inst = load(spec, source)?;
            match &inst.connectors {
                Some(c) => intersection_hypergraph(&inst.shapes, c).to_hypergraph(),
                None => neighborhood_hypergraph(&inst.shapes).to_hypergraph(),
            }
        }
    };
    let mode = if exhaustive {
        LinearityMode::Exhaustive
    } else {
        LinearityMode::Samples {
            count: samples,
            seed: spec.seed,
        }
    };
    let profile = linearity_profile(&h, mode)?;
    let proper = degeneracy_color(&h);
    let cf = cf_color(&h, degeneracy_color)?;
    let vc = if h.num_vertices() <= 20 {
        Some(vc_dimension(&h)?)
    } else {
        None
    };
    let n = h.num_vertices() as f64;
    let c = profile.c();
    let counts: Vec<usize> = (2..=4).map(|k| count_hyperedges_le_k(&h, k)).collect();
    let bounds: Vec<f64> = (2..=4).map(|k| b_ck(c, k) * n).collect();
    let row = AnalysisRow {
        vertices: h.num_vertices(),
        hyperedges: h.num_edges(),
        linearity: if exhaustive { "exhaustive" } else { "samples" },
        c_pairs: profile.pairs,
        c_size: profile.size,
        c,
        proper_palette: proper.palette(),
        proper: check_proper(&h, &proper).holds(),
        cf_palette: cf.coloring.palette(),
        cf_rounds: cf.rounds,
        cf: check_cf(&h, &cf.coloring).holds(),
        vc_dimension: vc,
        e_le_2: counts[0],
        b_2n: bounds[0],
        e_le_3: counts[1],
        b_3n: bounds[1],
        e_le_4: counts[2],
        b_4n: bounds[2],
    };
    let mut verdict = Verdict::Pass
        .and(row.proper && row.cf)
        .and(profile.within_two_c_plus_one(row.proper_palette));
    // A sampled profile only bounds c from below, so these hold for certain
    // only against the exhaustive one.
    if exhaustive {
        verdict = verdict
            .and(vc.is_none_or(|d| d <= 2 * profile.c_ceil() + 1))
            .and(counts.iter().zip(&bounds).all(|(&e, &b)| e as f64 <= b));
    }
    sink.rows("analysis", &[row])?;
    if sink.dir.is_some() {
        let colors: Vec<VertexColors> = h
            .universe()
            .iter()
            .map(|&v| VertexColors {
                vertex: v,
                proper: proper.get(v).unwrap_or(0),
                cf: cf.coloring.get(v).unwrap_or(0),
            })
            .collect();
        sink.rows("coloring", &colors)?;
    }
    Ok(verdict)
}

#[derive(Serialize)]
struct ShapeColor {
    shape: usize,
    color: u32,
}

pub fn color_cf(spec: &RunSpec, source: &SourceArgs, sink: &Sink) -> Result<Verdict, CliError> {
    let inst = load(spec, source)?;
    let family = grounded_from_curves(&inst.shapes.curves)?;
    let res = cf_color_grounded(&family)?;
    let rows: Vec<ShapeColor> = res
        .colors
        .iter()
        .enumerate()
        .map(|(shape, &color)| ShapeColor { shape, color })
        .collect();
    sink.rows("coloring", &rows)?;
    let log = serde_json::to_string_pretty(&res).map_err(|e| CliError::Output(e.to_string()))?;
    sink.file("levels.json", &(log + "\n"), false)?;
    sink.svg("coloring.svg", || {
        render_colored_lshapes(&family, &res.colors)
    })?;
    eprintln!(
        "{} shapes, {} colors, depth {}, verified: {}",
        family.len(),
        res.palette,
        res.depth,
        res.verified
    );
    if !res.verified {
        write_bundle(sink, "color-cf", &inst, &res, "color-cf")?;
        return Ok(Verdict::Fail);
    }
    Ok(Verdict::Pass)
}
