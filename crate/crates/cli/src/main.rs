//! Command line front end: instance checks, group reports, example
//! families, and subset search, all emitting stable JSON on stdout.
//!
//! Exit codes: 0 predicate holds / report emitted, 1 usage error,
//! 2 resource cap, 3 predicate fails, 4 undecided.

use clap::{Args, Parser, Subcommand};
use qproots::decide::{
    check, gen_brandl, gen_quadratic_triple, search, verify_instance_str, GroupSpec, Instance,
    Predicate, SuppliedGroup, Verdict,
};
use qproots::groups::{
    covers_sets, frobenius_catalog, frobenius_structure, joint_core_trivial_sets, lemma24_check,
    min_cover_m, Perm, PermGroup,
};
use qproots::parse::parse_poly;
use qproots::{Config, Error};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qproots", version, about = "Roots mod p and in Q_p for all primes p")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    cfg: ConfigFlags,
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Also write the JSON report to a file.
    #[arg(long, global = true, value_name = "PATH")]
    report_file: Option<PathBuf>,
}

/// Every cap is also settable through QPROOTS_* environment variables;
/// flags win.
#[derive(Args)]
struct ConfigFlags {
    #[arg(long, global = true)]
    group_order_cap: Option<usize>,
    #[arg(long, global = true)]
    splitting_degree_cap: Option<usize>,
    #[arg(long, global = true)]
    subgroup_enum_cap: Option<usize>,
    #[arg(long, global = true)]
    padic_node_cap: Option<usize>,
    #[arg(long, global = true)]
    prime_sample_count: Option<usize>,
    #[arg(long, global = true)]
    oracle_scan_bound: Option<u64>,
    #[arg(long, global = true)]
    factor_degree_cap: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

impl ConfigFlags {
    fn build(&self) -> Config {
        let mut c = Config::from_env();
        if let Some(v) = self.group_order_cap {
            c.group_order_cap = v;
        }
        if let Some(v) = self.splitting_degree_cap {
            c.splitting_degree_cap = v;
        }
        if let Some(v) = self.subgroup_enum_cap {
            c.subgroup_enum_cap = v;
        }
        if let Some(v) = self.padic_node_cap {
            c.padic_node_cap = v;
        }
        if let Some(v) = self.prime_sample_count {
            c.prime_sample_count = v;
        }
        if let Some(v) = self.oracle_scan_bound {
            c.oracle_scan_bound = v;
        }
        if let Some(v) = self.factor_degree_cap {
            c.factor_degree_cap = v;
        }
        if let Some(v) = self.seed {
            c.prng_seed = v;
        }
        c
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide a predicate for a polynomial or an explicit factor product.
    Check {
        /// Polynomial text: "(x^3-2)(x^2+x+1)", "x^4+1", or "[c0,c1,...]".
        input: String,
        #[arg(long, default_value = "weak")]
        predicate: String,
        /// "auto" (compute the group), "sample-only", or a supplied-group
        /// JSON file {degree, generators, blocks} with 1-based labels.
        #[arg(long, default_value = "auto")]
        group: String,
    },
    /// Reports about a permutation group given by generators.
    Group {
        /// JSON file {degree, generators:["(1 2)",...]} with 1-based cycles.
        generators_file: PathBuf,
        /// Subgroup generator files; test covering by their conjugates.
        #[arg(long)]
        covers: Vec<PathBuf>,
        /// Frobenius structure (kernel/complement and all flags).
        #[arg(long)]
        frobenius: bool,
        /// Check that subgroups meeting the kernel trivially embed in a
        /// conjugate of the complement.
        #[arg(long)]
        lemma24: bool,
        /// Smallest covering with trivial joint core using at most M
        /// maximal classes.
        #[arg(long, value_name = "M")]
        min_cover: Option<usize>,
    },
    /// Emit a family instance (optionally checking it) or the catalog.
    Family {
        #[command(subcommand)]
        which: FamilyCmd,
    },
    /// Check every m-subset of a polynomial pool.
    Search {
        /// Text file, one polynomial per line; '#' starts a comment.
        pool_file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "weak")]
        predicate: String,
        /// Cap on the number of subsets examined.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// (x^r - 2) times the r-th cyclotomic polynomial, r an odd prime.
    Brandl {
        r: u64,
        #[arg(long)]
        check: Option<String>,
    },
    /// (x^2-a)(x^2-b)(x^2-ab).
    QuadraticTriple {
        a: i64,
        b: i64,
        #[arg(long)]
        check: Option<String>,
    },
    /// All catalog Frobenius groups of order at most N.
    FrobeniusCatalog { max_order: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = cli.cfg.build();
    let out = Output {
        pretty: cli.pretty,
        report_file: cli.report_file.clone(),
    };
    let code = match run(&cli.cmd, &cfg, &out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invalid(_) | Error::Parse(_) => 1,
                Error::Resource(_) | Error::Internal(_) => 2,
            }
        }
    };
    ExitCode::from(code)
}

struct Output {
    pretty: bool,
    report_file: Option<PathBuf>,
}

impl Output {
    fn emit(&self, report: &serde_json::Value) -> Result<(), Error> {
        let compact = serde_json::to_string(report).map_err(|e| Error::internal(e.to_string()))?;
        if self.pretty {
            let pretty = serde_json::to_string_pretty(report)
                .map_err(|e| Error::internal(e.to_string()))?;
            println!("{pretty}");
        } else {
            println!("{compact}");
        }
        if let Some(path) = &self.report_file {
            std::fs::write(path, compact + "\n")
                .map_err(|e| Error::invalid(format!("cannot write report file: {e}")))?;
        }
        Ok(())
    }
}

fn run(cmd: &Cmd, cfg: &Config, out: &Output) -> Result<u8, Error> {
    match cmd {
        Cmd::Check {
            input,
            predicate,
            group,
        } => cmd_check(input, predicate, group, cfg, out),
        Cmd::Group {
            generators_file,
            covers,
            frobenius,
            lemma24,
            min_cover,
        } => cmd_group(generators_file, covers, *frobenius, *lemma24, *min_cover, cfg, out),
        Cmd::Family { which } => cmd_family(which, cfg, out),
        Cmd::Search {
            pool_file,
            m,
            predicate,
            budget,
        } => cmd_search(pool_file, *m, predicate, *budget, cfg, out),
    }
}

fn parse_predicate(s: &str) -> Result<Predicate, Error> {
    match s {
        "weak" => Ok(Predicate::Weak),
        "strong" => Ok(Predicate::Strong),
        _ => Err(Error::invalid(format!(
            "predicate must be weak or strong, got '{s}'"
        ))),
    }
}

fn verdict_exit(v: &Verdict) -> u8 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => 3,
        Verdict::Undecided(_) => 4,
    }
}

fn cmd_check(
    input: &str,
    predicate: &str,
    group: &str,
    cfg: &Config,
    out: &Output,
) -> Result<u8, Error> {
    let predicate = parse_predicate(predicate)?;
    let mut inst = verify_instance_str(input, cfg)?;
    inst = match group {
        "auto" => inst,
        "sample-only" => inst.with_group(GroupSpec::SampledOnly),
        path => inst.with_group(GroupSpec::Supplied(read_supplied_group(
            Path::new(path),
            cfg,
        )?)),
    };
    run_check(&inst, predicate, cfg, out)
}

fn run_check(
    inst: &Instance,
    predicate: Predicate,
    cfg: &Config,
    out: &Output,
) -> Result<u8, Error> {
    let report = check(inst, predicate, cfg)?;
    let value = serde_json::to_value(&report).map_err(|e| Error::internal(e.to_string()))?;
    out.emit(&value)?;
    Ok(verdict_exit(&report.verdict))
}

fn read_json(path: &Path) -> Result<serde_json::Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::parse(format!("bad JSON in {}: {e}", path.display())))
}

fn read_group_file(path: &Path, cap: usize) -> Result<(PermGroup, serde_json::Value), Error> {
    let v = read_json(path)?;
    let degree = v
        .get("degree")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| Error::parse("group file needs a numeric 'degree'"))? as usize;
    let gens = v
        .get("generators")
        .and_then(|g| g.as_array())
        .ok_or_else(|| Error::parse("group file needs a 'generators' array"))?;
    let mut perms = Vec::with_capacity(gens.len());
    for g in gens {
        let s = g
            .as_str()
            .ok_or_else(|| Error::parse("generators must be cycle-notation strings"))?;
        perms.push(Perm::parse_cycles(s, degree)?);
    }
    Ok((PermGroup::closure(&perms, cap)?, v))
}

/// Supplied-group file: {degree, generators, blocks}, blocks listing the
/// 1-based point labels of each factor's roots.
fn read_supplied_group(path: &Path, cfg: &Config) -> Result<SuppliedGroup, Error> {
    let (group, v) = read_group_file(path, cfg.group_order_cap)?;
    let raw = v
        .get("blocks")
        .and_then(|b| b.as_array())
        .ok_or_else(|| Error::parse("supplied-group file needs a 'blocks' array"))?;
    let mut blocks = Vec::with_capacity(raw.len());
    for b in raw {
        let pts = b
            .as_array()
            .ok_or_else(|| Error::parse("each block must be an array of labels"))?;
        let mut block = Vec::with_capacity(pts.len());
        for p in pts {
            let label = p
                .as_u64()
                .filter(|&l| l >= 1 && (l as usize) <= group.degree())
                .ok_or_else(|| Error::parse("block labels must be in 1..=degree"))?;
            block.push(label as usize - 1);
        }
        blocks.push(block);
    }
    Ok(SuppliedGroup { group, blocks })
}

fn cmd_group(
    generators_file: &Path,
    covers: &[PathBuf],
    frobenius: bool,
    lemma24: bool,
    min_cover: Option<usize>,
    cfg: &Config,
    out: &Output,
) -> Result<u8, Error> {
    let (g, _) = read_group_file(generators_file, cfg.group_order_cap)?;
    let mut report = serde_json::json!({
        "order": g.order(),
        "degree": g.degree(),
    });
    let obj = report.as_object_mut().unwrap();
    if !covers.is_empty() {
        let mut subs = Vec::with_capacity(covers.len());
        for path in covers {
            let (h, _) = read_group_file(path, cfg.group_order_cap)?;
            subs.push(g.subgroup_indices(&h)?);
        }
        let cover = covers_sets(&g, &subs)?;
        obj.insert(
            "joint_core_trivial".into(),
            joint_core_trivial_sets(&g, &subs)?.into(),
        );
        obj.insert(
            "covers".into(),
            serde_json::to_value(&cover).map_err(|e| Error::internal(e.to_string()))?,
        );
    }
    if frobenius || lemma24 {
        let fs = frobenius_structure(&g)?;
        match &fs {
            Some(fs_val) => {
                obj.insert(
                    "frobenius".into(),
                    serde_json::to_value(fs_val).map_err(|e| Error::internal(e.to_string()))?,
                );
                if lemma24 {
                    let rep = lemma24_check(&g, fs_val, cfg.subgroup_enum_cap)?;
                    obj.insert(
                        "lemma24".into(),
                        serde_json::to_value(&rep)
                            .map_err(|e| Error::internal(e.to_string()))?,
                    );
                }
            }
            None => {
                obj.insert("frobenius".into(), serde_json::Value::Null);
                if lemma24 {
                    return Err(Error::invalid("lemma24 requires a Frobenius group"));
                }
            }
        }
    }
    if let Some(m) = min_cover {
        let mc = min_cover_m(&g, m, cfg.subgroup_enum_cap)?;
        obj.insert(
            "min_cover".into(),
            serde_json::to_value(&mc).map_err(|e| Error::internal(e.to_string()))?,
        );
    }
    out.emit(&report)?;
    Ok(0)
}

fn instance_json(inst: &Instance) -> serde_json::Value {
    let group_order = match &inst.group {
        GroupSpec::Supplied(sg) => Some(sg.group.order()),
        _ => None,
    };
    serde_json::json!({
        "factors": inst.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "expanded": inst.product().to_string(),
        "exceptional_primes": inst.exceptional_primes,
        "supplied_group_order": group_order,
    })
}

fn cmd_family(which: &FamilyCmd, cfg: &Config, out: &Output) -> Result<u8, Error> {
    let (inst, check_pred) = match which {
        FamilyCmd::Brandl { r, check } => (gen_brandl(*r, cfg)?, check.clone()),
        FamilyCmd::QuadraticTriple { a, b, check } => {
            (gen_quadratic_triple(*a, *b, cfg)?, check.clone())
        }
        FamilyCmd::FrobeniusCatalog { max_order } => {
            let cat = frobenius_catalog(*max_order, cfg.group_order_cap)?;
            let entries: Vec<serde_json::Value> = cat
                .iter()
                .map(|g| {
                    serde_json::json!({
                        "order": g.order(),
                        "degree": g.degree(),
                        "generators": g
                            .generators()
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            out.emit(&serde_json::Value::Array(entries))?;
            return Ok(0);
        }
    };
    let mut report = instance_json(&inst);
    match check_pred {
        Some(pred) => {
            let predicate = parse_predicate(&pred)?;
            let rep = check(&inst, predicate, cfg)?;
            report.as_object_mut().unwrap().insert(
                "report".into(),
                serde_json::to_value(&rep).map_err(|e| Error::internal(e.to_string()))?,
            );
            out.emit(&report)?;
            Ok(verdict_exit(&rep.verdict))
        }
        None => {
            out.emit(&report)?;
            Ok(0)
        }
    }
}

fn cmd_search(
    pool_file: &Path,
    m: usize,
    predicate: &str,
    budget: usize,
    cfg: &Config,
    out: &Output,
) -> Result<u8, Error> {
    let predicate = parse_predicate(predicate)?;
    let text = std::fs::read_to_string(pool_file)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", pool_file.display())))?;
    let mut pool = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        pool.push(parse_poly(line)?);
    }
    eprintln!("pool of {} candidates, subsets of size {m}", pool.len());
    let outcome = search(&pool, m, predicate, budget, cfg)?;
    eprintln!(
        "examined {} subsets, {} hit(s)",
        outcome.examined,
        outcome.hits.len()
    );
    let value = serde_json::to_value(&outcome).map_err(|e| Error::internal(e.to_string()))?;
    out.emit(&value)?;
    Ok(if outcome.exhausted { 2 } else { 0 })
}
