//! `schubert-git`: semistable Schubert varieties, their minimal elements and GIT quotients.
//!
//! Exit codes: 0 on success, 1 when a verification or consistency check fails,
//! 2 when the flags do not describe a valid request.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_git::catalog::{catalog_entry, check_entry, CatalogRecord};
use schubert_git::codec::{
    format_rational, parse_chi, AnalyzeJson, AntichainJson, CaseJson, CatalogCaseJson,
    CosetElementJson, DecomposeJson, ElementJson, EnumerateJson, MinimalJson, QuotientJson, SummandJson,
};
use schubert_git::git::{parabolic_of, LinearizationContext, MinusculeCoset};
use schubert_git::quotient::{decompose_rk, hilbert_series, quotient_from_minimal, total_dimension, QuotientKind};
use schubert_git::verify::{run_all, run_criterion, to_verify_json, CRITERIA};
use schubert_git::weyl::{maximal_parabolic, DEFAULT_GUARD};
use schubert_git::{Basis, CosetSystem, Error, RootSystem, TypeLabel, WeightVec};

use render::{emit, Report};

#[derive(Parser, Debug)]
#[command(name = "schubert-git", version, about = "Semistable Schubert varieties and their GIT quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest coset the engine may enumerate.
    #[arg(long, global = true, env = "SCHUBERT_GIT_GUARD", default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// A, B, C, D, E6 or E7.
    #[arg(long = "type")]
    label: TypeLabel,
    /// Lie rank.
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// `w_{s,r}` for a minuscule `ω_r`.
    Minimal {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Semistability verdicts on `W^J` for an arbitrary dominant character.
    Analyze {
        #[command(flatten)]
        system: SystemArgs,
        /// Fundamental-weight coordinates, e.g. `0,2,2,5`.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long)]
        s: usize,
    },
    /// The GIT quotient of `X(w_{s,r})` and its invariant dimensions.
    Quotient {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 3)]
        d_max: u32,
        /// Degree of the decomposed piece (type A matrix cases).
        #[arg(long, default_value_t = 1)]
        k_deg: usize,
    },
    /// Irreducible summands of the degree-`k` invariants in type A.
    Decompose {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        k_deg: usize,
    },
    /// Minimal coset representatives, by length.
    Enumerate {
        #[command(flatten)]
        system: SystemArgs,
        /// Use `J = S \ {α_r}`.
        #[arg(long, conflicts_with = "j")]
        r: Option<usize>,
        /// Explicit `J`, e.g. `1,3`; empty means the whole group.
        #[arg(long)]
        j: Option<String>,
    },
    /// Closed forms against the search for every minuscule case.
    Catalog {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// The acceptance sweep.
    Verify {
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=CRITERIA.len() as i64))]
        criterion: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UniquenessViolated(_) | Error::Inconsistent(_) => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn root_system(args: &SystemArgs) -> Result<RootSystem, Failure> {
    Ok(RootSystem::new(args.label, args.rank)?)
}

fn minimal(sys: &RootSystem, r: usize, s: usize, guard: usize) -> Result<Report, Failure> {
    let mc = MinusculeCoset::with_guard(sys, r, guard)?;
    let min = mc.minimal(s)?;
    Ok(Report::Minimal(MinimalJson {
        case: CaseJson {
            label: sys.label(),
            n: sys.rank(),
            r,
            s,
        },
        word: min.w.normal_word_string(sys),
        pairing: format_rational(&min.pairing),
        ss_eq_s: min.ss_eq_s,
        length: min.w.length(),
        m: min.m,
        q: min.q,
    }))
}

fn analyze(sys: &RootSystem, chi: &str, s: usize, guard: usize) -> Result<Report, Failure> {
    let coords = parse_chi(chi)?;
    if coords.len() != sys.rank() {
        return Err(Error::DimensionMismatch {
            expected: sys.rank(),
            got: coords.len(),
        }
        .into());
    }
    let chi = WeightVec::from_ints(&coords, Basis::Weight);
    let ctx = LinearizationContext::with_guard(sys, &chi, s, guard)?;
    let antichain = ctx.minimal_admitting_indices();
    let mut elements = Vec::with_capacity(ctx.coset().len());
    for (idx, w) in ctx.coset().elements().iter().enumerate() {
        let pairing = ctx.pairing_at(idx);
        elements.push(ElementJson {
            word: w.normal_word_string(sys),
            length: w.length(),
            pairing: format_rational(&pairing),
            admits: ctx.admits_semistable(w)?.0,
            admits_t: ctx.admits_semistable_t(w)?,
            ss_eq_s: ctx.stable_equals_semistable(w)?,
        });
    }
    Ok(Report::Analyze(AnalyzeJson {
        label: sys.label(),
        n: sys.rank(),
        chi: coords,
        chi_root: ctx.chi_root().iter().map(format_rational).collect(),
        j: parabolic_of(ctx.chi()),
        s,
        minimal_admitting: antichain
            .iter()
            .map(|&i| AntichainJson {
                word: ctx.coset().elements()[i].normal_word_string(sys),
                pairing: format_rational(&ctx.pairing_at(i)),
            })
            .collect(),
        ss_eq_s_whole_space: ctx.ss_equals_s_whole_space()?,
        elements,
    }))
}

fn quotient(sys: &RootSystem, r: usize, s: usize, d_max: u32, k_deg: usize, guard: usize) -> Result<Report, Failure> {
    let mc = MinusculeCoset::with_guard(sys, r, guard)?;
    let min = mc.minimal(s)?;
    let report = quotient_from_minimal(sys, &min)?;
    let hilbert = hilbert_series(&mc, &min, &report, d_max)?;
    let decomposition = match report.kind {
        QuotientKind::MatrixProj { .. } => decompose_rk(sys.rank() + 1, r, s, k_deg)?,
        _ => Vec::new(),
    };
    Ok(Report::Quotient(QuotientJson::from_report(&report, &hilbert, &decomposition)))
}

fn decompose(sys: &RootSystem, r: usize, s: usize, k_deg: usize) -> Result<Report, Failure> {
    if sys.label() != TypeLabel::A {
        return Err(Failure::Usage("decompose requires --type A".into()));
    }
    let parts = decompose_rk(sys.rank() + 1, r, s, k_deg)?;
    Ok(Report::Decompose(DecomposeJson {
        n: sys.rank(),
        r,
        s,
        k_deg,
        total: total_dimension(&parts) as u64,
        summands: parts.iter().map(SummandJson::from).collect(),
    }))
}

fn enumerate(sys: &RootSystem, r: Option<usize>, j: Option<&str>, guard: usize) -> Result<Report, Failure> {
    let j_set = match (r, j) {
        (Some(r), _) => {
            sys.fundamental_weight(r)?;
            maximal_parabolic(sys.rank(), r)
        }
        (None, Some(list)) if !list.trim().is_empty() => {
            let mut v: Vec<usize> = list
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad J entry {t:?}"))))
                .collect::<Result<_, _>>()?;
            v.sort_unstable();
            v.dedup();
            v
        }
        _ => Vec::new(),
    };
    let coset = CosetSystem::enumerate_guarded(sys, &j_set, guard)?;
    Ok(Report::Enumerate(EnumerateJson {
        label: sys.label(),
        n: sys.rank(),
        j: j_set,
        size: coset.len(),
        elements: coset
            .elements()
            .iter()
            .map(|w| CosetElementJson {
                word: w.normal_word_string(sys),
                length: w.length(),
            })
            .collect(),
    }))
}

fn catalog(sys: &RootSystem, guard: usize) -> Result<Report, Failure> {
    let mut cases = Vec::new();
    for r in sys.minuscule_nodes() {
        let mc = MinusculeCoset::with_guard(sys, r, guard)?;
        for s in 1..=sys.rank() {
            let entry = catalog_entry(sys, r, s)?;
            let check = check_entry(&mc, &entry)?;
            cases.push(CatalogCaseJson::new(&CatalogRecord::from(&entry), &check));
        }
    }
    Ok(Report::Catalog(cases))
}

fn run(cli: &Cli) -> Result<(Report, bool), Failure> {
    let report = match &cli.command {
        Command::Minimal { system, r, s } => minimal(&root_system(system)?, *r, *s, cli.guard)?,
        Command::Analyze { system, chi, s } => analyze(&root_system(system)?, chi, *s, cli.guard)?,
        Command::Quotient {
            system,
            r,
            s,
            d_max,
            k_deg,
        } => quotient(&root_system(system)?, *r, *s, *d_max, *k_deg, cli.guard)?,
        Command::Decompose { system, r, s, k_deg } => decompose(&root_system(system)?, *r, *s, *k_deg)?,
        Command::Enumerate { system, r, j } => enumerate(&root_system(system)?, *r, j.as_deref(), cli.guard)?,
        Command::Catalog { system } => catalog(&root_system(system)?, cli.guard)?,
        Command::Verify { criterion } => {
            let results = match criterion {
                Some(id) => run_criterion(*id).into_iter().collect(),
                None => run_all(),
            };
            Report::Verify(results.iter().map(|r| r.line()).collect(), to_verify_json(&results))
        }
    };
    let ok = report.passed();
    Ok((report, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            if let Err(e) = emit(&report, cli.format) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
