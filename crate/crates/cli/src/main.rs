//! klbasis: enumeration, Kazhdan-Lusztig tables, and verification suites
//! from the command line.
//!
//! Exit codes are a stable contract for CI: 0 success, 1 verification
//! failure, 2 usage error, 3 resource cap exceeded. JSON outputs carry a
//! `schema` tag matching the files under schemas/v1/.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use klbasis_core::caps;
use klbasis_core::error::Error;
use klbasis_core::heckemod::{kl_basis, KLSide, KLTable, ParabolicContext};
use klbasis_core::shapes::{
    all_compositions, enumerate_row_standard, enumerate_standard, Composition, MapVariant,
    Tableau,
};
use klbasis_core::verify::{run_all, run_suite, SuiteOptions};
use klbasis_core::weyl::{self, Family};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_VERIFY_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "klbasis", version, about = "Exact Weyl group, Kazhdan-Lusztig, and Specht computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Write the rendered output to this path instead of stdout. The file
    /// is written once, after the whole computation succeeds.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Cap on the order of any fully enumerated group (default 10000, env
    /// CAP_GROUP_ORDER).
    #[arg(long, global = true)]
    max_group_order: Option<usize>,

    /// Cap on the number of minimal coset representatives (default 2000,
    /// env CAP_COSETS).
    #[arg(long, global = true)]
    max_cosets: Option<usize>,

    /// Seed recorded with the run. Every current computation is exhaustive
    /// and deterministic, so this only tags the report.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Reading map from tableaux to coset representatives.
    #[arg(long, value_enum, default_value_t = VariantArg::InverseTop, global = true)]
    variant: VariantArg,

    /// Change-of-basis normalization recorded with the run; the discovery
    /// suite sweeps both regardless.
    #[arg(long, value_enum, default_value_t = AVariantArg::PVersion, global = true)]
    a_variant: AVariantArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List group elements, coset representatives, compositions, or tableaux.
    #[command(group(ArgGroup::new("what")
        .required(true)
        .args(["compositions", "group", "reps", "std", "row_std"])))]
    #[command(group(ArgGroup::new("shape_any").args(["shape", "shape_b"])))]
    Enumerate {
        /// Weyl group family.
        #[arg(long = "type", value_enum)]
        family: FamilyArg,

        /// Window size: A acts on d letters, B on [-d, d].
        #[arg(long)]
        d: usize,

        /// All compositions of the family at this d, with J and Young
        /// subgroup data.
        #[arg(long)]
        compositions: bool,

        /// Every group element with its length.
        #[arg(long)]
        group: bool,

        /// Minimal coset representatives of W_J \ W for --J.
        #[arg(long, requires = "j")]
        reps: bool,

        /// Standard tableaux of --shape / --shape-b.
        #[arg(long, requires = "shape_any")]
        std: bool,

        /// Row-standard tableaux of --shape / --shape-b.
        #[arg(long, requires = "shape_any")]
        row_std: bool,

        /// Comma-separated generator indices; '' is the empty set.
        #[arg(long = "J")]
        j: Option<String>,

        /// Type A shape as comma-separated parts, e.g. 2,2.
        #[arg(long)]
        shape: Option<String>,

        /// Type B shape as positive half and center part, e.g. 2:3 for the
        /// centro-symmetric composition (2,3,2).
        #[arg(long)]
        shape_b: Option<String>,
    },

    /// Compute the m- and p-tables of a parabolic KL basis.
    Kl {
        /// Weyl group family.
        #[arg(long = "type", value_enum)]
        family: FamilyArg,

        /// Window size.
        #[arg(long)]
        d: usize,

        /// Comma-separated generator indices; '' is the empty set.
        #[arg(long = "J", default_value = "")]
        j: String,

        /// Degree side of the KL basis.
        #[arg(long, value_enum)]
        side: SideArg,
    },

    /// Run verification suites and exit nonzero on any failed check.
    Verify {
        /// Suite name (lengths, table, hooks, bijection, kl, action,
        /// specht, crt, discovery, controls), or all suites when omitted.
        #[arg(long)]
        suite: Option<String>,

        /// Restrict suites to one family.
        #[arg(long = "type", value_enum)]
        family: Option<FamilyArg>,

        /// Lower the suites' maximum window size (alias --max-d).
        #[arg(long, alias = "max-d")]
        d: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Pretty => "pretty",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Positive,
    Negative,
}

impl From<SideArg> for KLSide {
    fn from(s: SideArg) -> KLSide {
        match s {
            SideArg::Positive => KLSide::Positive,
            SideArg::Negative => KLSide::Negative,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    InverseTop,
    InverseBottom,
    PlainTop,
    PlainBottom,
}

impl From<VariantArg> for MapVariant {
    fn from(v: VariantArg) -> MapVariant {
        match v {
            VariantArg::InverseTop => MapVariant::InverseTop,
            VariantArg::InverseBottom => MapVariant::InverseBottom,
            VariantArg::PlainTop => MapVariant::PlainTop,
            VariantArg::PlainBottom => MapVariant::PlainBottom,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AVariantArg {
    PVersion,
    MVersion,
}

/// One computed result rendered for all three formats plus the verification
/// verdict that decides the exit code.
struct Rendered {
    json: Value,
    csv: String,
    pretty: String,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    for (flag, var, value) in [
        ("--max-group-order", caps::GROUP_ORDER_ENV, cli.max_group_order),
        ("--max-cosets", caps::COSET_ENV, cli.max_cosets),
    ] {
        if let Some(v) = value {
            if v == 0 {
                return Err(Error::Parse(format!("{flag} must be positive")));
            }
            std::env::set_var(var, v.to_string());
        }
    }

    let rendered = match &cli.command {
        Command::Enumerate {
            family,
            d,
            compositions,
            group,
            reps,
            std,
            row_std,
            j,
            shape,
            shape_b,
        } => cmd_enumerate(
            &cli,
            (*family).into(),
            *d,
            EnumerateWhat {
                compositions: *compositions,
                group: *group,
                reps: *reps,
                std: *std,
                row_std: *row_std,
            },
            j.as_deref(),
            shape.as_deref(),
            shape_b.as_deref(),
        )?,
        Command::Kl { family, d, j, side } => {
            cmd_kl(&cli, (*family).into(), *d, j, (*side).into())?
        }
        Command::Verify { suite, family, d } => {
            cmd_verify(&cli, suite.as_deref(), family.map(Into::into), *d)?
        }
    };

    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&rendered.json).expect("valid json") + "\n",
        Format::Csv => rendered.csv,
        Format::Pretty => rendered.pretty,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{body}"),
    }
    Ok(if rendered.failed {
        ExitCode::from(EXIT_VERIFY_FAILURE)
    } else {
        ExitCode::SUCCESS
    })
}

/// The configuration echo carried by every JSON output.
fn config_json(cli: &Cli, command: &str, detail: Value) -> Value {
    let variant: MapVariant = cli.variant.into();
    json!({
        "command": command,
        "format": cli.format.name(),
        "seed": cli.seed,
        "variant": variant.to_string(),
        "a_variant": match cli.a_variant {
            AVariantArg::PVersion => "p-version",
            AVariantArg::MVersion => "m-version",
        },
        "caps": {
            "group_order": caps::group_order_cap(),
            "cosets": caps::coset_cap(),
        },
        "selector": detail,
    })
}

fn parse_j(s: &str) -> Result<Vec<usize>, Error> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad generator index {:?} in J", p.trim())))
        })
        .collect()
}

fn parse_shape(
    family: Family,
    shape: Option<&str>,
    shape_b: Option<&str>,
) -> Result<Composition, Error> {
    match (family, shape, shape_b) {
        (Family::A, Some(s), None) => {
            let parts = s
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad shape part {:?}", p.trim())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Composition::new(Family::A, parts)
        }
        (Family::B, None, Some(s)) => {
            let (half_str, center_str) = s
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("--shape-b wants half:center, got {s:?}")))?;
            let mut parts = Vec::new();
            if !half_str.trim().is_empty() {
                for p in half_str.split(',') {
                    parts.push(p.trim().parse::<usize>().map_err(|_| {
                        Error::Parse(format!("bad shape part {:?}", p.trim()))
                    })?);
                }
            }
            let center = center_str
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad center part {:?}", center_str.trim())))?;
            let mut full = parts.clone();
            full.push(center);
            full.extend(parts.iter().rev());
            Composition::new(Family::B, full)
        }
        (Family::A, _, Some(_)) => Err(Error::Parse(
            "--shape-b is for --type B; type A shapes use --shape".into(),
        )),
        (Family::B, Some(_), _) => Err(Error::Parse(
            "--type B shapes use --shape-b (positive half:center)".into(),
        )),
        (_, None, None) => Err(Error::Parse(
            "--std/--row-std need --shape (type A) or --shape-b (type B)".into(),
        )),
    }
}

/// Young subgroup shape as a human-readable product.
fn young_desc(c: &Composition) -> String {
    let parts = c.parts();
    match c.family() {
        Family::A => parts
            .iter()
            .map(|p| format!("S{p}"))
            .collect::<Vec<_>>()
            .join(" x "),
        Family::B => {
            let m = parts.len() / 2;
            let mut factors = vec![format!("B{}", (parts[m] - 1) / 2)];
            factors.extend(parts[..m].iter().map(|p| format!("S{p}")));
            factors.join(" x ")
        }
    }
}

struct EnumerateWhat {
    compositions: bool,
    group: bool,
    reps: bool,
    std: bool,
    row_std: bool,
}

fn tableau_rows(t: &Tableau) -> Vec<Vec<i32>> {
    t.rows().to_vec()
}

fn tableau_pretty(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(
    cli: &Cli,
    family: Family,
    d: usize,
    what: EnumerateWhat,
    j: Option<&str>,
    shape: Option<&str>,
    shape_b: Option<&str>,
) -> Result<Rendered, Error> {
    if what.compositions {
        let rows = all_compositions(family, d);
        let config = config_json(cli, "enumerate", json!({"family": family, "d": d, "what": "compositions"}));
        let json = json!({
            "schema": "klbasis/v1/enumerate",
            "config": config,
            "count": rows.len(),
            "compositions": rows.iter().map(|c| json!({
                "parts": c.parts(),
                "J": c.to_j(),
                "subgroup": young_desc(c),
                "subgroup_order": c.young_subgroup_order(),
                "row_standard_count": c.row_standard_count(),
            })).collect::<Vec<_>>(),
        });
        let mut csv = String::from("parts,J,subgroup,subgroup_order,row_standard_count\n");
        let mut pretty = format!("{} compositions, family {:?}, d={}\n", rows.len(), family, d);
        for c in &rows {
            let parts = c
                .parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let jset = c
                .to_j()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            csv.push_str(&format!(
                "\"{parts}\",\"{jset}\",\"{}\",{},{}\n",
                young_desc(c),
                c.young_subgroup_order(),
                c.row_standard_count()
            ));
            pretty.push_str(&format!(
                "  ({parts})  J={{{jset}}}  W_J = {} (order {}), |rStd| = {}\n",
                young_desc(c),
                c.young_subgroup_order(),
                c.row_standard_count()
            ));
        }
        return Ok(Rendered { json, csv, pretty, failed: false });
    }

    if what.group {
        let table = weyl::group_table(family, d)?;
        let config = config_json(cli, "enumerate", json!({"family": family, "d": d, "what": "group"}));
        let json = json!({
            "schema": "klbasis/v1/enumerate",
            "config": config,
            "count": table.order(),
            "elements": (0..table.order()).map(|i| json!({
                "window": table.element(i).one_line(),
                "length": table.length_of(i),
            })).collect::<Vec<_>>(),
        });
        let mut csv = String::from("window,length\n");
        let mut pretty = format!("group order {}, family {:?}, d={}\n", table.order(), family, d);
        for i in 0..table.order() {
            csv.push_str(&format!("\"{}\",{}\n", table.element(i).one_line(), table.length_of(i)));
            pretty.push_str(&format!("  {}  len {}\n", table.element(i).one_line(), table.length_of(i)));
        }
        return Ok(Rendered { json, csv, pretty, failed: false });
    }

    if what.reps {
        let j = parse_j(j.unwrap_or(""))?;
        let reps = weyl::minimal_coset_reps(family, d, &j, caps::coset_cap())?;
        let table = weyl::group_table(family, d)?;
        let config = config_json(cli, "enumerate", json!({"family": family, "d": d, "what": "reps", "J": j}));
        let json = json!({
            "schema": "klbasis/v1/enumerate",
            "config": config,
            "count": reps.len(),
            "reps": reps.iter().map(|w| json!({
                "window": w.one_line(),
                "length": table.length_of(table.index(w).expect("rep is in the table")),
            })).collect::<Vec<_>>(),
        });
        let mut csv = String::from("window,length\n");
        let mut pretty = format!(
            "{} minimal coset representatives, family {:?}, d={}, J={:?}\n",
            reps.len(),
            family,
            d,
            j
        );
        for w in &reps {
            let len = table.length_of(table.index(w).expect("rep is in the table"));
            csv.push_str(&format!("\"{}\",{}\n", w.one_line(), len));
            pretty.push_str(&format!("  {}  len {}\n", w.one_line(), len));
        }
        return Ok(Rendered { json, csv, pretty, failed: false });
    }

    // Tableau listings.
    let shape = parse_shape(family, shape, shape_b)?;
    let (kind, tableaux) = if what.std {
        ("std", enumerate_standard(&shape)?)
    } else {
        debug_assert!(what.row_std);
        ("row-std", enumerate_row_standard(&shape)?)
    };
    let config = config_json(
        cli,
        "enumerate",
        json!({"family": family, "d": d, "what": kind, "shape": shape.parts()}),
    );
    let json = json!({
        "schema": "klbasis/v1/enumerate",
        "config": config,
        "count": tableaux.len(),
        "shape": shape.parts(),
        "tableaux": tableaux.iter().map(tableau_rows).collect::<Vec<_>>(),
    });
    let mut csv = String::from("index,rows\n");
    let mut pretty = format!(
        "{} {} tableaux of shape ({}), family {:?}\n",
        tableaux.len(),
        if what.std { "standard" } else { "row-standard" },
        shape
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
        family
    );
    for (i, t) in tableaux.iter().enumerate() {
        csv.push_str(&format!("{},\"{}\"\n", i, tableau_pretty(t)));
        pretty.push_str(&format!("  {}\n", tableau_pretty(t)));
    }
    Ok(Rendered { json, csv, pretty, failed: false })
}

fn kl_pretty(table: &KLTable) -> String {
    let ctx = table.ctx();
    let n = table.n();
    let mut out = format!(
        "KL tables: family {:?}, d={}, J={:?}, side {}\n",
        ctx.family(),
        ctx.d(),
        ctx.j_set(),
        table.side()
    );
    out.push_str("reps:\n");
    for x in 0..n {
        out.push_str(&format!("  {x}: {}\n", ctx.rep(x).one_line()));
    }
    out.push_str("nonzero m entries:\n");
    for x in 0..n {
        for w in 0..n {
            let f = table.m(x, w);
            if !f.is_zero() {
                out.push_str(&format!(
                    "  m({}, {}) = {}\n",
                    ctx.rep(x).one_line(),
                    ctx.rep(w).one_line(),
                    f
                ));
            }
        }
    }
    out.push_str("nonzero p entries:\n");
    for x in 0..n {
        for w in 0..n {
            let f = table.p(x, w);
            if !f.is_zero() {
                out.push_str(&format!(
                    "  p({}, {}) = {}\n",
                    ctx.rep(x).one_line(),
                    ctx.rep(w).one_line(),
                    f
                ));
            }
        }
    }
    out
}

fn cmd_kl(cli: &Cli, family: Family, d: usize, j: &str, side: KLSide) -> Result<Rendered, Error> {
    let j = parse_j(j)?;
    let ctx = ParabolicContext::new(family, d, &j)?;
    let table = kl_basis(&ctx, side).with_p();
    let config = config_json(
        cli,
        "kl",
        json!({"family": family, "d": d, "J": j, "side": side}),
    );
    let json = json!({
        "schema": "klbasis/v1/kl",
        "config": config,
        "table": table.to_json(),
    });
    Ok(Rendered {
        json,
        csv: table.to_csv(),
        pretty: kl_pretty(&table),
        failed: false,
    })
}

fn csv_escape(s: &str) -> String {
    s.replace('"', "\"\"")
}

fn cmd_verify(
    cli: &Cli,
    suite: Option<&str>,
    family: Option<Family>,
    max_d: Option<usize>,
) -> Result<Rendered, Error> {
    let opts = SuiteOptions { family, max_d };
    let reports = match suite {
        None | Some("all") => run_all(&opts)?,
        Some(name) => vec![run_suite(name, &opts)?],
    };
    let pass = reports.iter().all(|r| r.pass);
    let config = config_json(
        cli,
        "verify",
        json!({
            "suite": suite.unwrap_or("all"),
            "family": family,
            "max_d": max_d,
        }),
    );
    let json = json!({
        "schema": "klbasis/v1/verify",
        "config": config,
        "pass": pass,
        "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    let mut csv = String::from("suite,check,pass,detail\n");
    let mut pretty = String::new();
    for r in &reports {
        for c in &r.checks {
            csv.push_str(&format!(
                "{},\"{}\",{},\"{}\"\n",
                r.suite,
                csv_escape(&c.name),
                c.pass,
                csv_escape(&c.detail)
            ));
        }
        pretty.push_str(&r.summary());
    }
    pretty.push_str(&format!("verify: {}\n", if pass { "PASS" } else { "FAIL" }));
    Ok(Rendered {
        json,
        csv,
        pretty,
        failed: !pass,
    })
}
