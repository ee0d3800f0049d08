//! The `tanglab` command line: generators, arrangement reports, bound checks,
//! hypergraph analysis, conflict-free coloring and seeded sweeps.

pub mod args;
mod commands;
pub mod output;
mod sweep;

use std::path::Path;
use std::process::ExitCode;

use serde::Serialize;
use thiserror::Error;

use tanglab::format::{parse_instance, print_instance, Instance};
use tanglab::generators::{
    gen_axis_parallel, gen_comb, gen_crossing_connectors, gen_grid, gen_grounded_lshapes,
    gen_grounded_segments, gen_hanging_connectors, gen_tight_face, gen_touching_family,
    gen_triangular_grid, LShapeSpread,
};
use tanglab::geometry::{Color, CurveFamily};
use tanglab::rng::trial_rng;

pub use args::RunSpec;
use args::{Command, Kind, SourceArgs};
use output::Sink;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] tanglab::Error),
    #[error("cannot write output: {0}")]
    Output(String),
}

/// Whether every assertion-class check of the run held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn and(self, ok: bool) -> Verdict {
        if ok {
            self
        } else {
            Verdict::Fail
        }
    }
}

/// Exit status: 0 when every check held, 1 on a verifier failure, 2 on bad
/// input or an output error.
pub fn exit_code(result: &Result<Verdict, CliError>) -> ExitCode {
    match result {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(CliError::Core(
            tanglab::Error::CfCheckFailure { .. } | tanglab::Error::FrameworkStall { .. },
        )) => ExitCode::from(1),
        Err(_) => ExitCode::from(2),
    }
}

pub fn run(spec: &RunSpec) -> Result<Verdict, CliError> {
    let sink = Sink {
        dir: spec.out.clone(),
        format: spec.format,
        svg: spec.svg,
    };
    match &spec.command {
        Command::Generate(source) => commands::generate(spec, source, &sink),
        Command::Arrange { source, report } => commands::arrange(spec, source, *report, &sink),
        Command::Bounds {
            source,
            check,
            exhaustive,
            sequence,
            face,
            allow_multi_crossing,
        } => commands::bounds(
            spec,
            source,
            commands::BoundOptions {
                check: *check,
                exhaustive: *exhaustive,
                sequence: sequence.as_deref(),
                face: *face,
                allow_multi_crossing: *allow_multi_crossing,
            },
            &sink,
        ),
        Command::Analyze {
            source,
            hyperedges,
            exhaustive,
            samples,
        } => commands::analyze(
            spec,
            source,
            hyperedges.as_deref(),
            *exhaustive,
            *samples,
            &sink,
        ),
        Command::ColorCf(source) => commands::color_cf(spec, source, &sink),
        Command::Sweep { check, n, trials } => sweep::sweep(spec, *check, &n.0, *trials, &sink),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Draws one instance from a generator.
pub fn generate_instance(
    kind: Kind,
    n: usize,
    h: Option<usize>,
    v: Option<usize>,
    seed: u64,
    trial: u64,
) -> Result<Instance, CliError> {
    let rng = &mut trial_rng(seed, trial);
    let (h, v) = (h.unwrap_or(n / 2), v.unwrap_or(n - n / 2));
    let inst = match kind {
        Kind::Grid => {
            let shapes = gen_grid(h, v, rng);
            let connectors = gen_crossing_connectors(&shapes)?;
            Instance::with_connectors(shapes, connectors)
        }
        Kind::TightFace => Instance::shapes_only(gen_tight_face(h, v)?),
        Kind::Touching => Instance::shapes_only(gen_touching_family(n, rng)?),
        Kind::AxisParallel => Instance::shapes_only(gen_axis_parallel(n, rng)),
        Kind::Hanging => {
            let shapes = gen_axis_parallel(n, rng);
            let connectors = gen_hanging_connectors(&shapes, 10 * n, rng);
            Instance::with_connectors(shapes, connectors)
        }
        Kind::GroundedSegments => {
            let (shapes, connectors) = gen_grounded_segments(n, 20 * n, rng)?;
            Instance::with_connectors(shapes, connectors)
        }
        Kind::GroundedLshapes => {
            let curves = gen_grounded_lshapes(n, LShapeSpread::default(), rng)
                .iter()
                .map(|l| l.to_curve(Color::Neutral))
                .collect();
            Instance::shapes_only(CurveFamily::shapes(curves))
        }
        Kind::Triangular => {
            let (shapes, connectors) = gen_triangular_grid(n)?;
            Instance::with_connectors(shapes, connectors)
        }
        Kind::Comb => {
            let (shapes, connectors) = gen_comb(n);
            Instance::with_connectors(shapes, connectors)
        }
    };
    Ok(inst)
}

/// The instance named by `--input` or drawn from `--kind`.
fn load(spec: &RunSpec, source: &SourceArgs) -> Result<Instance, CliError> {
    match (&source.input, source.kind) {
        (Some(path), _) => Ok(parse_instance(&read(path)?)?),
        (None, Some(kind)) => {
            let n = source.n.as_ref().map_or(16, |s| s.first());
            generate_instance(kind, n, source.h, source.v, spec.seed, source.trial)
        }
        (None, None) => Err(CliError::Input(
            "give --input FILE or --kind GENERATOR".into(),
        )),
    }
}

/// Writes `instance.txt`, `report.json` and `rerun.txt` under
/// `<out>/falsification/<name>` (or `./falsification/<name>`).
fn write_bundle<R: Serialize>(
    sink: &Sink,
    name: &str,
    instance: &Instance,
    report: &R,
    rerun: &str,
) -> Result<(), CliError> {
    let base = sink.dir.clone().unwrap_or_else(|| ".".into());
    let dir = base.join("falsification").join(name);
    let report =
        serde_json::to_string_pretty(report).map_err(|e| CliError::Output(e.to_string()))?;
    output::write_file(&dir.join("instance.txt"), &print_instance(instance))?;
    output::write_file(&dir.join("report.json"), &(report + "\n"))?;
    output::write_file(
        &dir.join("rerun.txt"),
        &format!("tanglab {rerun} --input instance.txt\n"),
    )?;
    eprintln!("falsification bundle written to {}", dir.display());
    Ok(())
}
