use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// A list of sizes: `64`, `4,8,16`, or `64..1024` for the doubling
/// sequence 64, 128, ... up to 1024 inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sizes(pub Vec<usize>);

impl Sizes {
    pub fn first(&self) -> usize {
        self.0[0]
    }
}

impl FromStr for Sizes {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a size"))
        };
        let sizes = if let Some((a, b)) = s.split_once("..") {
            let (lo, hi) = (num(a)?, num(b)?);
            if lo == 0 || lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            std::iter::successors(Some(lo), |&k| k.checked_mul(2))
                .take_while(|&k| k <= hi)
                .collect()
        } else {
            s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
        };
        if sizes.is_empty() {
            return Err("no sizes given".into());
        }
        Ok(Sizes(sizes))
    }
}

impl fmt::Display for Sizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

/// Everything that determines a run.
#[derive(Clone, Debug, Parser, Serialize)]
#[command(
    name = "tanglab",
    version,
    about = "Curve arrangements, Delaunay-graph bounds and conflict-free coloring"
)]
pub struct RunSpec {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Directory for artifacts; tables go to stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Also write an SVG rendering (needs `--out`).
    #[arg(long, global = true)]
    pub svg: bool,
}

#[derive(Clone, Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Write a generated instance in the text format.
    Generate(SourceArgs),
    /// Build the arrangement of the shapes and report on it.
    Arrange {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = ArrangeReport::Summary)]
        report: ArrangeReport,
    },
    /// Check one of the bounds.
    Bounds {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum)]
        check: BoundCheck,
        /// Exhaustive search where the check supports it.
        #[arg(long)]
        exhaustive: bool,
        /// Comma-separated symbols for `--check ds`.
        #[arg(long)]
        sequence: Option<String>,
        /// Face id for `--check single-face`; the unbounded face by default.
        #[arg(long)]
        face: Option<usize>,
        /// Let tangency inputs cross repeatedly.
        #[arg(long)]
        allow_multi_crossing: bool,
    },
    /// Measure the intersection hypergraph of an instance or a hypergraph file.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Hypergraph file, one hyperedge of vertex ids per line.
        #[arg(long, conflicts_with_all = ["input", "kind"])]
        hyperedges: Option<PathBuf>,
        /// Exhaustive linearity profile (at most 20 vertices).
        #[arg(long)]
        exhaustive: bool,
        /// Random subsets examined by the sampled linearity profile.
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Conflict-free coloring of a grounded L-shape family.
    ColorCf(SourceArgs),
    /// Run a check over many random trials, one CSV row per trial.
    Sweep {
        #[arg(long, value_enum)]
        check: SweepCheck,
        #[arg(long)]
        n: Sizes,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct SourceArgs {
    /// Instance file in the text format.
    #[arg(long, conflicts_with = "kind")]
    pub input: Option<PathBuf>,
    /// Generator to draw the instance from.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub n: Option<Sizes>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub v: Option<usize>,
    /// Random stream index under `--seed`.
    #[arg(long, default_value_t = 0)]
    pub trial: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Horizontals crossing verticals, with one connector per crossing.
    Grid,
    TightFace,
    Touching,
    AxisParallel,
    /// Axis-parallel segments with disjoint connectors hanging from above.
    Hanging,
    GroundedSegments,
    GroundedLshapes,
    Triangular,
    Comb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrangeReport {
    Summary,
    Faces,
    Walks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundCheck {
    Tangency,
    Grounded,
    FaceComplexity,
    SingleFace,
    Planarity,
    Ds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepCheck {
    GroundedDelaunay,
    Tangency,
    FaceComplexity,
    Planarity,
    Cf,
}

impl SweepCheck {
    pub fn name(self) -> &'static str {
        match self {
            SweepCheck::GroundedDelaunay => "grounded-delaunay",
            SweepCheck::Tangency => "tangency",
            SweepCheck::FaceComplexity => "face-complexity",
            SweepCheck::Planarity => "planarity",
            SweepCheck::Cf => "cf",
        }
    }
}
