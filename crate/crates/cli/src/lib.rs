//! Command-line front end: argument parsing, triple resolution and report
//! rendering for the `prym` binary.

mod render;
pub mod report;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prym_core::lattice::subgroups_up_to_conjugacy;
use prym_core::perm::parse_cycles;
use prym_core::prym::{
    admissibility_table, check_hypothesis, scan, scan_subgroups, search_signatures, GroupContext,
    Realizability, SearchBounds, Triple,
};
use prym_core::verify::{run_case, CASES};
use prym_core::{realize_group, Error, Permutation, Subgroup};

use report::*;

const AFTER_HELP: &str = "\
Group specs: sym(n), alt(n), dihedral(p), cyclic(n), weylA(n), weylD(n), rot(G),
product(G,H), perm(degree;(1,2);(1,2,3)).

Subgroups: --subgroup \"gens:(1,2);(3,4,5)\" (1-based cycles, one generator per ';')
or --subgroup \"order:N\" (first conjugacy class of order N giving a passing triple).

Representations (indices as listed by `table`): --reps auto | degree:N | index:i,j

CSV columns:
  table        character,degree,<one column per class representative>
  scan         subgroup_order,subgroup_index,reps,degrees,field_degree,d,b,b1,q,deg_k,c,identities_pass
  admissible   label,class_order,class_size,A,mixed_cosets,fixed_dims,generates
  signatures   signature,branch_points,genus_x,dim_p,fixed_points,realizable,crosscheck,certified
  verify-paper case,check,pass,divergence,detail

Exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 resource cap reached.";

#[derive(Debug, Parser)]
#[command(name = "prym", version, about = "Exact Hecke-algebra computations for Prym-Tyurin varieties", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes, complex characters and rational irreducible representations.
    Table,
    /// Every passing triple over the conjugacy classes of subgroups.
    Scan,
    /// Hypothesis check and admissibility table for one triple.
    Admissible,
    /// Admissibility table plus certified geometric signatures.
    Signatures,
    /// Run the regression cases.
    VerifyPaper {
        /// One of the case names, or `all`.
        #[arg(long, default_value = "all")]
        case: String,
        /// Odd prime for the dihedral-product case.
        #[arg(long)]
        p: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[arg(long, global = true)]
    pub subgroup: Option<String>,
    #[arg(long, global = true, default_value = "auto")]
    pub reps: String,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: u64,
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub order_cap: u64,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub index_cap: Option<u64>,
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_r: u64,
    #[arg(long, global = true, default_value_t = 6)]
    pub max_branch_points: u32,
    #[arg(long, global = true, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: u64,
    /// Also list signatures balancing positive and negative fixed-point terms.
    #[arg(long, global = true)]
    pub allow_mixed: bool,
}

impl RunConfig {
    fn bounds(&self) -> SearchBounds {
        SearchBounds {
            index_cap: self.index_cap.map_or(usize::MAX, |c| c as usize),
            max_r: self.max_r as usize,
            max_branch_points: self.max_branch_points,
            node_budget: self.node_budget,
            allow_mixed: self.allow_mixed,
            ..SearchBounds::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    VerificationFailure = 1,
    Usage = 2,
    CapReached = 3,
}

/// Maps library errors onto exit codes.
pub fn exit_for(e: &Error) -> Exit {
    match e {
        Error::OrderCapExceeded { .. } => Exit::CapReached,
        Error::HypothesisViolation(_) | Error::InternalFault(_) => Exit::VerificationFailure,
        _ => Exit::Usage,
    }
}

/// Runs a parsed command on a worker pool of the configured size.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Exit, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.config.threads as usize)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut buf = Vec::new();
    let code = pool.install(|| dispatch(cli, &mut buf))?;
    out.write_all(&buf)
        .map_err(|e| Error::InvalidArgument(format!("writing output: {e}")))?;
    Ok(code)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Exit, Error> {
    let cfg = &cli.config;
    if let Command::VerifyPaper { case, p } = &cli.command {
        return verify(case, *p, cfg.format, out);
    }
    let spec = cfg
        .group
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--group is required".into()))?;
    let ctx = GroupContext::new(realize_group(spec, cfg.order_cap as usize)?)?;
    let group = GroupInfo {
        spec: spec.to_string(),
        order: ctx.group.order(),
    };
    match cli.command {
        Command::Table => {
            let r = table_report(&ctx, group);
            render::table(&r, cfg.format, out)?;
            Ok(Exit::Success)
        }
        Command::Scan => {
            let r = scan_report(&ctx, group, cfg)?;
            render::scan(&r, cfg.format, out)?;
            Ok(if r.complete {
                Exit::Success
            } else {
                Exit::CapReached
            })
        }
        Command::Admissible | Command::Signatures => {
            let with_signatures = matches!(cli.command, Command::Signatures);
            let r = triple_report(&ctx, group, cfg, with_signatures)?;
            render::triple(&r, cfg.format, out)?;
            Ok(if r.hypothesis.pass {
                Exit::Success
            } else {
                Exit::VerificationFailure
            })
        }
        Command::VerifyPaper { .. } => unreachable!(),
    }
}

fn table_report(ctx: &GroupContext, group: GroupInfo) -> TableReport {
    let g = &ctx.group;
    let t = &ctx.table;
    TableReport {
        schema: SCHEMA,
        group,
        classes: t
            .classes
            .iter()
            .map(|c| ClassRow {
                representative: g.element(c.representative).to_string(),
                size: c.size,
                element_order: c.element_order,
            })
            .collect(),
        characters: t
            .chars
            .iter()
            .map(|chi| CharacterRow {
                degree: chi.degree,
                values: chi
                    .values
                    .iter()
                    .map(|v| v.in_smallest_field().to_string())
                    .collect(),
            })
            .collect(),
        rational: ctx
            .irreps
            .iter()
            .enumerate()
            .map(|(index, w)| RationalRow {
                index,
                degree: w.n,
                field_degree: w.field_degree,
                orbit: w.orbit.clone(),
                trace_values: w.trace_values.clone(),
            })
            .collect(),
    }
}

fn subgroup_info(ctx: &GroupContext, h: &Subgroup) -> SubgroupInfo {
    SubgroupInfo {
        order: h.order(),
        index: ctx.group.order() / h.order(),
        generators: h
            .generators()
            .iter()
            .map(|&x| ctx.group.element(x).to_string())
            .collect(),
    }
}

fn rep_info(ctx: &GroupContext, reps: &[usize]) -> Vec<RepInfo> {
    reps.iter()
        .map(|&i| RepInfo {
            index: i,
            degree: ctx.irreps[i].n,
            field_degree: ctx.irreps[i].field_degree,
        })
        .collect()
}

fn hecke_info(t: &Triple) -> HeckeInfo {
    HeckeInfo {
        d: t.dc.count(),
        b: t.tuple.b,
        b1: t.tuple.b1,
        q: t.tuple.q,
        deg_k: t.tuple.deg_k,
        c: t.tuple.c,
    }
}

fn scan_report(ctx: &GroupContext, group: GroupInfo, cfg: &RunConfig) -> Result<ScanReport, Error> {
    let result = scan(ctx, &cfg.bounds())?;
    Ok(ScanReport {
        schema: SCHEMA,
        group,
        complete: result.complete,
        triples: result
            .triples
            .iter()
            .map(|s| ScanRow {
                subgroup: subgroup_info(ctx, &s.triple.subgroup),
                reps: rep_info(ctx, &s.triple.reps),
                hecke: hecke_info(&s.triple),
                identities_pass: s.triple.identities.all_pass(),
            })
            .collect(),
    })
}

enum RepSelector {
    Auto,
    Degree(u64),
    Indices(Vec<usize>),
}

fn parse_reps(text: &str) -> Result<RepSelector, Error> {
    let bad = |msg: &str| Error::InvalidArgument(format!("--reps {text:?}: {msg}"));
    if text == "auto" {
        return Ok(RepSelector::Auto);
    }
    if let Some(n) = text.strip_prefix("degree:") {
        return n
            .trim()
            .parse()
            .map(RepSelector::Degree)
            .map_err(|_| bad("expected degree:N"));
    }
    if let Some(list) = text.strip_prefix("index:") {
        let v: Result<Vec<usize>, _> = list.split(',').map(|s| s.trim().parse()).collect();
        return v
            .map(RepSelector::Indices)
            .map_err(|_| bad("expected index:i,j,..."));
    }
    Err(bad("expected auto, degree:N or index:i,j"))
}

fn parse_subgroup(ctx: &GroupContext, text: &str, cfg: &RunConfig) -> Result<Vec<Subgroup>, Error> {
    if let Some(gens) = text.strip_prefix("gens:") {
        let degree = ctx.group.degree();
        let mut perms = Vec::new();
        let mut offset = "gens:".len();
        for part in gens.split(';') {
            let cycles = parse_cycles(part, offset)?;
            perms.push(Permutation::from_cycles(degree, &cycles)?);
            offset += part.len() + 1;
        }
        return Ok(vec![ctx.group.subgroup_closure(&perms)?]);
    }
    if let Some(n) = text.strip_prefix("order:") {
        let n: usize = n.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("--subgroup {text:?}: expected order:N"))
        })?;
        if n == 0 || !ctx.group.order().is_multiple_of(n) {
            return Err(Error::InvalidArgument(format!("no subgroup of order {n}")));
        }
        let index_cap = cfg.bounds().index_cap.min(ctx.group.order() / n);
        let classes = subgroups_up_to_conjugacy(&ctx.group, index_cap, cfg.bounds().work_cap);
        let found: Vec<Subgroup> = classes
            .subgroups
            .into_iter()
            .filter(|h| h.order() == n)
            .collect();
        if found.is_empty() {
            return Err(if classes.complete {
                Error::InvalidArgument(format!("no subgroup of order {n}"))
            } else {
                Error::OrderCapExceeded {
                    order: ctx.group.order() as u128,
                    cap: cfg.bounds().work_cap,
                }
            });
        }
        return Ok(found);
    }
    Err(Error::InvalidArgument(format!(
        "--subgroup {text:?}: expected gens:(..);(..) or order:N"
    )))
}

/// Representations passing the hypothesis with `h`, if the selector finds any.
fn select_reps(
    ctx: &GroupContext,
    h: &Subgroup,
    sel: &RepSelector,
    cfg: &RunConfig,
) -> Result<Option<Vec<usize>>, Error> {
    match sel {
        RepSelector::Auto => {
            let bounds = SearchBounds {
                verify_identities: false,
                ..cfg.bounds()
            };
            Ok(scan_subgroups(ctx, std::slice::from_ref(h), &bounds)?
                .into_iter()
                .next()
                .map(|s| s.triple.reps))
        }
        RepSelector::Degree(n) => {
            for i in ctx.nontrivial_irreps() {
                if ctx.irreps[i].n == *n && check_hypothesis(ctx, h, &[i])?.pass {
                    return Ok(Some(vec![i]));
                }
            }
            Ok(None)
        }
        RepSelector::Indices(v) => Ok(check_hypothesis(ctx, h, v)?.pass.then(|| v.clone())),
    }
}

fn triple_report(
    ctx: &GroupContext,
    group: GroupInfo,
    cfg: &RunConfig,
    with_signatures: bool,
) -> Result<TripleReport, Error> {
    let text = cfg
        .subgroup
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--subgroup is required".into()))?;
    let candidates = parse_subgroup(ctx, text, cfg)?;
    let sel = parse_reps(&cfg.reps)?;
    let mut chosen = None;
    for h in &candidates {
        if let Some(reps) = select_reps(ctx, h, &sel, cfg)? {
            chosen = Some((h.clone(), reps));
            break;
        }
    }
    let Some((h, reps)) = chosen else {
        // Explicit indices get a full failure report; other selectors found nothing.
        if let RepSelector::Indices(v) = &sel {
            let h = &candidates[0];
            return Ok(TripleReport {
                schema: SCHEMA,
                group,
                subgroup: subgroup_info(ctx, h),
                reps: rep_info(ctx, v),
                hypothesis: check_hypothesis(ctx, h, v)?,
                hecke: None,
                identities: Vec::new(),
                admissible: Vec::new(),
                signatures: None,
                note: Some("hypothesis fails; nothing further computed".into()),
            });
        }
        return Err(Error::HypothesisViolation(format!(
            "no representations selected by {:?} pass the hypothesis for this subgroup",
            cfg.reps
        )));
    };
    let hypothesis = check_hypothesis(ctx, &h, &reps)?;
    let triple = Triple::new(ctx, &h, &reps)?;
    let rows = admissibility_table(ctx, &h, &reps, &triple.tuple)?;
    let admissible: Vec<AdmissibleRow> = rows
        .iter()
        .map(|r| AdmissibleRow {
            label: r.label.clone(),
            class_order: r.class_order,
            class_size: r.class_size,
            a: r.a,
            mixed_cosets: r.mixed_cosets,
            fixed_dims: r.fixed_dims.clone(),
            generates: r.generates,
        })
        .collect();
    let mut note = None;
    let signatures = if with_signatures {
        let reports = search_signatures(ctx, &triple, &rows, &cfg.bounds(), &|_| true)?;
        if !rows.iter().any(|r| r.admissible()) {
            note = Some("no admissible classes; no signature is fixed-point free".into());
        }
        Some(
            reports
                .iter()
                .map(|r| SignatureRow {
                    entries: r
                        .signature
                        .entries
                        .iter()
                        .map(|&(c, m)| EntryRow {
                            class: rows[c].label.clone(),
                            m,
                        })
                        .collect(),
                    branch_points: r.signature.branch_points(),
                    genus_x: r.genus_x,
                    dim_p: r.dim_p,
                    fixed_points: r.fixed_points,
                    realizable: r.realizable.label().to_string(),
                    witness: match &r.realizable {
                        Realizability::Yes(w) => Some(
                            w.iter()
                                .map(|&x| ctx.group.element(x).to_string())
                                .collect(),
                        ),
                        _ => None,
                    },
                    crosscheck: r.crosscheck,
                    certified: r.certified,
                })
                .collect(),
        )
    } else {
        None
    };
    Ok(TripleReport {
        schema: SCHEMA,
        group,
        subgroup: subgroup_info(ctx, &h),
        reps: rep_info(ctx, &reps),
        hypothesis,
        hecke: Some(hecke_info(&triple)),
        identities: triple.identities.checks.clone(),
        admissible,
        signatures,
        note,
    })
}

fn verify(
    case: &str,
    p: Option<usize>,
    format: Format,
    out: &mut dyn Write,
) -> Result<Exit, Error> {
    let names: Vec<&str> = if case == "all" {
        CASES.to_vec()
    } else {
        vec![case]
    };
    let cases = names
        .iter()
        .map(|name| run_case(name, p))
        .collect::<Result<Vec<_>, _>>()?;
    let r = VerifyReport {
        schema: SCHEMA,
        pass: cases.iter().all(|c| c.pass),
        cases,
    };
    render::verify(&r, format, out)?;
    Ok(if r.pass {
        Exit::Success
    } else {
        Exit::VerificationFailure
    })
}
