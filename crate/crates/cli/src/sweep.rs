use rayon::prelude::*;
use serde::Serialize;

use tanglab::arrangement::{audit_walks, Arrangement};
use tanglab::format::Instance;
use tanglab::generators::{
    gen_axis_parallel, gen_grounded_family, gen_grounded_segments, gen_hanging_connectors,
    gen_touching_family, LShapeSpread,
};
use tanglab::geometry::{Color, CurveFamily};
use tanglab::graphs::{
    planarity_audit, verify_grounded_bound, verify_tangency_bound, BoundReport, BoundStatus,
};
use tanglab::lshape_cf::cf_color_grounded;
use tanglab::rng::trial_rng;

use crate::args::{RunSpec, SweepCheck};
use crate::output::Sink;
use crate::{write_bundle, CliError, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub check: &'static str,
    pub n: usize,
    pub trial: usize,
    pub measured: usize,
    pub bound: Option<i64>,
    pub slack: Option<i64>,
    pub status: &'static str,
    pub reason: String,
}

impl SweepRow {
    fn from_report(check: SweepCheck, trial: usize, r: &BoundReport) -> Self {
        let (status, reason) = match &r.status {
            BoundStatus::Pass => ("pass", String::new()),
            BoundStatus::Violation => ("violation", String::new()),
            BoundStatus::PreconditionFailed(why) => ("precondition-failed", why.clone()),
        };
        SweepRow {
            check: check.name(),
            n: r.n,
            trial,
            measured: r.measured,
            bound: Some(r.bound),
            slack: Some(r.slack),
            status,
            reason,
        }
    }

    fn failed(&self) -> bool {
        self.status == "violation" || self.status == "cf-failure"
    }
}

struct Trial {
    row: SweepRow,
    instance: Instance,
}

fn run_trial(
    check: SweepCheck,
    n: usize,
    trial: usize,
    seed: u64,
    stream: u64,
) -> Result<Trial, CliError> {
    let rng = &mut trial_rng(seed, stream);
    let (row, instance) = match check {
        SweepCheck::GroundedDelaunay => {
            let (shapes, connectors) = gen_grounded_segments(n, 20 * n, rng)?;
            let r = verify_grounded_bound(&shapes, &connectors)?;
            (
                SweepRow::from_report(check, trial, &r),
                Instance::with_connectors(shapes, connectors),
            )
        }
        SweepCheck::Tangency => {
            let shapes = gen_touching_family(n, rng)?;
            let r = verify_tangency_bound(&shapes, false)?;
            (
                SweepRow::from_report(check, trial, &r),
                Instance::shapes_only(shapes),
            )
        }
        SweepCheck::FaceComplexity => {
            let shapes = gen_axis_parallel(n, rng);
            let audit = audit_walks(&Arrangement::build(&shapes.curves)?)?;
            let measured = audit.max_face_edges();
            let bound = 4 * n as i64 - 4;
            let reason = audit
                .failures
                .first()
                .map(|f| f.reason.clone())
                .unwrap_or_default();
            let ok = audit.is_ok() && measured as i64 <= bound;
            let row = SweepRow {
                check: check.name(),
                n,
                trial,
                measured,
                bound: Some(bound),
                slack: Some(bound - measured as i64),
                status: if ok { "pass" } else { "violation" },
                reason,
            };
            (row, Instance::shapes_only(shapes))
        }
        SweepCheck::Planarity => {
            let all = gen_axis_parallel(n, rng);
            let connectors = gen_hanging_connectors(&all, 10 * n, rng);
            let reds = all.filter_colors(&[Color::Red]);
            let r = planarity_audit(&reds, &connectors)?;
            (
                SweepRow::from_report(check, trial, &r),
                Instance::with_connectors(reds, connectors),
            )
        }
        SweepCheck::Cf => {
            let family = gen_grounded_family(n, LShapeSpread::default(), rng);
            let res = cf_color_grounded(&family)?;
            let row = SweepRow {
                check: check.name(),
                n,
                trial,
                measured: res.palette,
                bound: None,
                slack: None,
                status: if res.verified { "pass" } else { "cf-failure" },
                reason: String::new(),
            };
            let curves = family
                .to_lshapes()
                .iter()
                .map(|l| l.to_curve(Color::Neutral))
                .collect();
            (row, Instance::shapes_only(CurveFamily::shapes(curves)))
        }
    };
    Ok(Trial { row, instance })
}

fn rerun_command(check: SweepCheck) -> &'static str {
    match check {
        SweepCheck::GroundedDelaunay => "bounds --check grounded",
        SweepCheck::Tangency => "bounds --check tangency",
        SweepCheck::FaceComplexity => "bounds --check face-complexity",
        SweepCheck::Planarity => "bounds --check planarity",
        SweepCheck::Cf => "color-cf",
    }
}

/// Trial `t` at size index `k` uses stream `k * trials + t` of the seed, so
/// rows do not depend on scheduling.
pub fn sweep(
    spec: &RunSpec,
    check: SweepCheck,
    sizes: &[usize],
    trials: usize,
    sink: &Sink,
) -> Result<Verdict, CliError> {
    let jobs: Vec<(usize, usize, usize)> = sizes
        .iter()
        .enumerate()
        .flat_map(|(k, &n)| (0..trials).map(move |t| (k, n, t)))
        .collect();
    let results: Vec<Trial> = jobs
        .par_iter()
        .map(|&(k, n, t)| run_trial(check, n, t, spec.seed, (k * trials + t) as u64))
        .collect::<Result<_, _>>()?;
    let mut verdict = Verdict::Pass;
    for tr in results.iter().filter(|tr| tr.row.failed()) {
        verdict = Verdict::Fail;
        let name = format!("{}-n{}-t{}", check.name(), tr.row.n, tr.row.trial);
        write_bundle(sink, &name, &tr.instance, &tr.row, rerun_command(check))?;
    }
    let rows: Vec<SweepRow> = results.into_iter().map(|tr| tr.row).collect();
    sink.rows("sweep", &rows)?;
    Ok(verdict)
}
