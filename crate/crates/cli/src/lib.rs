//! Command-line front end: `kh`, `jones`, `family` and `kkh` subcommands.

pub mod report;
mod render;

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kkh_core::cube::build_complex_with_cap;
use kkh_core::homology::{homology_dims, poincare_polynomial};
use kkh_core::kauffman::{enumerate_choices, family_members, FamilyOptions};
use kkh_core::kkh::{kkh_with, member_id};
use kkh_core::oracle::{euler_characteristic, state_sum_jones_with_cap};
use kkh_core::{parse_graph, parse_pd, Error, LaurentPolynomial, LinkDiagram};
use sha2::{Digest, Sha256};

use report::*;

pub const ORIENTATION_RULE: &str = "PD tuples list arcs counterclockwise from the incoming under-strand; \
a component follows its PD under-passages when they agree, otherwise it runs from its least label \
toward the smaller neighbouring label";
pub const MEMBER_ORIENTATION_RULE: &str =
    "family members take the relative component orientation with the least total linking number";
pub const GRADING_RULE: &str = "i = |s| - n_-, j = deg(v) + i + n_+ - n_-";
pub const HOMOLOGY_RULE: &str = "unreduced, rational coefficients; Kh(unknot) = Q(0,1) + Q(0,-1)";

#[derive(Debug, Parser)]
#[command(name = "kkh", version, about = "Khovanov homology of links and Khovanov-Kauffman homology of embedded graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Khovanov homology of a link diagram
    Kh(CommonArgs),
    /// Jones polynomial of a link diagram by the state sum
    Jones(CommonArgs),
    /// Kauffman family of an embedded graph
    Family(CommonArgs),
    /// Khovanov-Kauffman homology of an embedded graph
    Kkh(CommonArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Kh(_) => "kh",
            Command::Jones(_) => "jones",
            Command::Family(_) => "family",
            Command::Kkh(_) => "kkh",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Kh(a) | Command::Jones(a) | Command::Family(a) | Command::Kkh(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Input file: PD code for kh/jones, graph PD code for family/kkh
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Collapse family members with equal homology (default)
    #[arg(long, conflicts_with = "multiset")]
    pub dedupe: bool,
    /// Keep every family member, one per replacement choice
    #[arg(long)]
    pub multiset: bool,
    /// Only join cyclically adjacent half-edges at vertices
    #[arg(long)]
    pub adjacent_only: bool,
    /// Largest crossing count accepted by the exponential stages
    #[arg(long, env = "KKH_CAP", default_value_t = kkh_core::DEFAULT_CROSSING_CAP)]
    pub cap: usize,
    /// Verify d∘d = 0 on every complex built
    #[arg(long)]
    pub check_d2: bool,
    /// With `family`, compute each member's homology
    #[arg(long)]
    pub invariants: bool,
}

/// A failed run: message plus process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else if e.is_resource_error() {
            EXIT_RESOURCE
        } else {
            EXIT_INVARIANT
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output of a successful run. `violation` is set when an internal check
/// failed; the report is still printed but the exit code is nonzero.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub elapsed: Duration,
    pub violation: Option<String>,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => render::table(&self.report, self.elapsed),
        }
    }
}

pub fn run(cmd: &Command) -> Result<Outcome, Failure> {
    let args = cmd.args();
    let start = Instant::now();
    let bytes = std::fs::read(&args.file).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("cannot read {}: {e}", args.file.display()),
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
        code: EXIT_INPUT,
        message: format!("{} is not valid UTF-8", args.file.display()),
    })?;
    let graph_cmd = matches!(cmd, Command::Family(_) | Command::Kkh(_));
    let conventions = Conventions {
        orientation: ORIENTATION_RULE.into(),
        grading: GRADING_RULE.into(),
        homology: HOMOLOGY_RULE.into(),
        crossing_cap: args.cap,
        family: graph_cmd.then(|| if args.multiset { "multiset" } else { "dedupe" }.into()),
        vertex_pairs: graph_cmd.then(|| if args.adjacent_only { "adjacent" } else { "all" }.into()),
        member_orientation: graph_cmd.then(|| MEMBER_ORIENTATION_RULE.into()),
    };
    let (result, violation) = match cmd {
        Command::Kh(_) => kh(&text, args)?,
        Command::Jones(_) => (jones(&text, args)?, None),
        Command::Family(_) => family(&text, args)?,
        Command::Kkh(_) => kkh(&text, args)?,
    };
    Ok(Outcome {
        report: Report {
            command: cmd.name().into(),
            input: InputInfo {
                file: display_name(&args.file),
                sha256: hex::encode(Sha256::digest(&bytes)),
            },
            conventions,
            result,
        },
        elapsed: start.elapsed(),
        violation,
    })
}

fn display_name(p: &Path) -> String {
    p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
}

fn homology_of(d: &LinkDiagram, args: &CommonArgs) -> Result<kkh_core::GradedDims, Error> {
    let c = build_complex_with_cap(d, args.cap)?;
    if args.check_d2 {
        c.check_d_squared()?;
    }
    homology_dims(&c)
}

fn verdict(euler: &LaurentPolynomial, jones: &LaurentPolynomial) -> Option<String> {
    (euler != jones).then(|| format!("Euler characteristic {euler} differs from Jones polynomial {jones}"))
}

fn kh(text: &str, args: &CommonArgs) -> Result<(Payload, Option<String>), Failure> {
    let d = parse_pd(text)?;
    let dims = homology_of(&d, args)?;
    let euler = euler_characteristic(&dims);
    let jones = state_sum_jones_with_cap(&d, args.cap)?;
    let violation = verdict(&euler, &jones);
    Ok((
        Payload::Kh(KhPayload {
            crossings: d.crossing_count(),
            components: d.component_count(),
            n_plus: d.n_plus(),
            n_minus: d.n_minus(),
            dims: dim_entries(&dims),
            poincare: poincare_polynomial(&dims).to_string(),
            euler: (&euler).into(),
            jones: (&jones).into(),
            euler_equals_jones: violation.is_none(),
            d_squared_checked: args.check_d2,
        }),
        violation,
    ))
}

fn jones(text: &str, args: &CommonArgs) -> Result<Payload, Failure> {
    let d = parse_pd(text)?;
    let jones = state_sum_jones_with_cap(&d, args.cap)?;
    Ok(Payload::Jones(JonesPayload {
        crossings: d.crossing_count(),
        components: d.component_count(),
        n_plus: d.n_plus(),
        n_minus: d.n_minus(),
        jones: (&jones).into(),
    }))
}

fn family_options(args: &CommonArgs) -> FamilyOptions {
    FamilyOptions {
        dedupe: !args.multiset,
        adjacent_only: args.adjacent_only,
        cap: args.cap,
        compute_dims: args.invariants,
    }
}

fn check_members<'a>(links: impl Iterator<Item = &'a LinkDiagram>, args: &CommonArgs) -> Result<(), Error> {
    if args.check_d2 {
        for l in links {
            build_complex_with_cap(l, args.cap)?.check_d_squared()?;
        }
    }
    Ok(())
}

fn family(text: &str, args: &CommonArgs) -> Result<(Payload, Option<String>), Failure> {
    let g = parse_graph(text)?;
    let opts = family_options(args);
    let members = family_members(&g, &opts)?;
    check_members(members.iter().map(|m| &m.link), args)?;
    let show_dims = args.invariants;
    let members = members
        .into_iter()
        .map(|m| FamilyMemberReport {
            id: member_id(&m.link),
            choice: m.choice.describe(&g),
            pd: m.link.canonical().to_pd_string(),
            crossings: m.link.crossing_count(),
            components: m.link.component_count(),
            dims: m.dims.filter(|_| show_dims).map(|d| dim_entries(&d)),
        })
        .collect();
    Ok((
        Payload::Family(FamilyPayload {
            choices: enumerate_choices(&g, args.adjacent_only).len(),
            members,
        }),
        None,
    ))
}

fn kkh(text: &str, args: &CommonArgs) -> Result<(Payload, Option<String>), Failure> {
    let g = parse_graph(text)?;
    let r = kkh_with(&g, &family_options(args))?;
    check_members(r.members.iter().map(|m| &m.link), args)?;
    let jones_sum = r
        .members
        .iter()
        .map(|m| state_sum_jones_with_cap(&m.link, args.cap))
        .sum::<Result<LaurentPolynomial, Error>>()?;
    let violation = verdict(&r.total_euler, &jones_sum);
    let members = r
        .members
        .iter()
        .map(|m| KkhMemberReport {
            id: m.id.clone(),
            choice: m.choice.clone(),
            pd: m.link.canonical().to_pd_string(),
            dims: dim_entries(&m.dims),
            euler: (&m.euler).into(),
        })
        .collect();
    Ok((
        Payload::Kkh(KkhPayload {
            members,
            total: KkhTotal {
                dims: dim_entries(&r.total),
                poincare: poincare_polynomial(&r.total).to_string(),
                euler: (&r.total_euler).into(),
            },
            jones_sum: (&jones_sum).into(),
            euler_equals_jones: violation.is_none(),
            d_squared_checked: args.check_d2,
        }),
        violation,
    ))
}
