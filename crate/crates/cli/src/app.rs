//! Argument parsing and verb dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use drg_cayley_core::catalog::{self, build_with, census_row, entries, table_caption, CensusRow, RowStatus};
use drg_cayley_core::cayley::{
    cayley_graph, coset_quotient, distance_sets, equitable_quotient, ConnectionSet, QuotientMatrix,
};
use drg_cayley_core::cayleyness::{is_cayley_with_array, CayleyVerdict};
use drg_cayley_core::designs::{find_difference_set, incidence_graph_of_development, verify_difference_set};
use drg_cayley_core::drg::{
    check_distance_regular, fmt_eigen, gh_cayley_feasible, gq_cayley_feasible, halving_obstruction, spectrum_numeric,
    spectrum_of_array, srg_parameters, DrgCheck, IntersectionArray, SNAP_TOL,
};
use drg_cayley_core::graph::Graph;
use drg_cayley_core::groups::{Elem, Group};
use drg_cayley_core::{graph6, Budget, Error};

use crate::io::{parse_graph, parse_group_table, write_edge_list, write_group_table, DataDir, Deadline};

const EXIT_HELP: &str = "\
Exit codes:
  0  every check passed (a \"no\" verdict counts as passing when it matches --expect)
  1  a check failed, or is-cayley answered \"no\" without --expect no
  2  usage error
  3  a search ran out of budget; the verdict is reported as \"unknown\"";

#[derive(Debug, Parser)]
#[command(name = "drg-cayley", version, about = "Distance-regular graphs of small valency and their Cayley structure", after_help = EXIT_HELP)]
pub struct Cli {
    /// Output format; each verb has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seconds allowed for each search.
    #[arg(long, global = true, default_value_t = 300.0)]
    pub budget: f64,
    /// Worker threads for the census (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory holding graph6 assets and group tables (default: $DRG_DATA, then ./data).
    #[arg(long, global = true)]
    pub data: Option<PathBuf>,
    /// Vertex and element ordering. Only the canonical order exists.
    #[arg(long, global = true, value_enum, default_value = "canonical")]
    pub seed_order: SeedOrder,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Tsv,
    Md,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedOrder {
    Canonical,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Catalog name (see `build --list`).
    #[arg(long, conflicts_with_all = ["graph", "g6"])]
    pub name: Option<String>,
    /// File holding graph6 or an edge list.
    #[arg(long, conflicts_with = "g6")]
    pub graph: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
}

#[derive(Debug, Args)]
pub struct GroupInput {
    /// Group: cyclic:N, dihedral:ORDER, elementary-abelian:P:K, abelian:M1,M2,..,
    /// symmetric:N, alternating:N, metacyclic:N:M:R, field:Q[:DIM], semifield:Q,
    /// armanios-wells, gen-dihedral:<group>, file:<table>; join factors with `*`.
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a catalog graph.
    Build {
        name: Option<String>,
        /// List the catalog names.
        #[arg(long)]
        list: bool,
    },
    /// Order, diameter, girths, bipartiteness, valency.
    Metrics(GraphInput),
    /// Intersection array, or the vertex pair that refutes distance-regularity.
    DrgCheck(GraphInput),
    /// Adjacency spectrum of a graph, or the eigenvalues of an array.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Intersection array in brace notation, e.g. "{3,2;1,1}".
        #[arg(long, conflicts_with_all = ["name", "graph", "g6"])]
        array: Option<String>,
    },
    /// Derived graph: complement, line, bipartite-double, distance:I, halved:PART, antipodal-quotient.
    Derive {
        kind: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Cayley graph of a group and connection set.
    Cayley {
        #[command(flatten)]
        group: GroupInput,
        /// Comma-separated element labels.
        #[arg(long)]
        set: String,
    },
    /// Distance classes S_i of a Cayley graph and the status of N_d.
    DistanceSets {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long)]
        set: String,
    },
    /// Quotient matrix of the coset partition of a subgroup.
    Quotient {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long)]
        set: String,
        /// Comma-separated labels generating the subgroup.
        #[arg(long)]
        subgroup: String,
        /// Use right cosets even when the subgroup is not normal.
        #[arg(long)]
        right_cosets: bool,
    },
    /// Decide whether a graph is a Cayley graph.
    IsCayley {
        #[command(flatten)]
        input: GraphInput,
        /// Expected verdict; the exit code reports agreement.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        /// Write the witnessing group table and connection set into this directory.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Divisibility tests: `gq S`, `gh S`, or `halving ARRAY`.
    Feasibility { kind: FeasibilityKind, arg: String },
    /// Verify (--set) or find (--k, --lambda) a difference set.
    Diffset {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long, conflicts_with_all = ["k", "lambda"])]
        set: Option<String>,
        #[arg(long, requires = "lambda")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        lambda: Option<usize>,
        /// Print the incidence graph of the development instead.
        #[arg(long)]
        incidence: bool,
    },
    /// Rebuild the catalog tables and check every row.
    Census {
        /// Table number 1-4; all tables when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: Option<u8>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FeasibilityKind {
    Gq,
    Gh,
    Halving,
}

/// Failure of a verb, mapped to an exit code.
#[derive(Debug)]
enum Fail {
    Usage(String),
    Check(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::GroupAxiom(_) | Error::Graph6(_) | Error::UnknownName(_) => {
                Fail::Usage(e.to_string())
            }
            _ => Fail::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

struct Ctx {
    format: Option<Format>,
    budget: f64,
    data: DataDir,
}

impl Ctx {
    fn deadline(&self) -> Deadline {
        Deadline::seconds(self.budget)
    }

    fn fmt(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn graph(&self, input: &GraphInput) -> Result<Graph, Fail> {
        if let Some(name) = &input.name {
            return Ok(build_with(name, &|a| self.data.asset(a))?.graph);
        }
        if let Some(path) = &input.graph {
            let p = self.data.locate(&path.to_string_lossy());
            let text = std::fs::read_to_string(&p).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?;
            return Ok(parse_graph(&text)?);
        }
        if let Some(g6) = &input.g6 {
            return Ok(graph6::decode(g6)?);
        }
        Err(Fail::Usage("one of --name, --graph or --g6 is required".into()))
    }

    fn group(&self, spec: &str) -> Result<Group, Fail> {
        let factors: Vec<&str> = spec.split('*').map(str::trim).collect();
        let mut g = self.factor(factors[0])?;
        for f in &factors[1..] {
            g = Group::direct_product(&g, &self.factor(f)?)?;
        }
        Ok(g)
    }

    fn factor(&self, spec: &str) -> Result<Group, Fail> {
        let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let nums = |s: &str, sep: char| -> Result<Vec<usize>, Fail> {
            s.split(sep)
                .map(|x| x.trim().parse().map_err(|_| Fail::Usage(format!("group {spec:?}: {x:?} is not a number"))))
                .collect()
        };
        let arity = |v: Vec<usize>, k: std::ops::RangeInclusive<usize>| -> Result<Vec<usize>, Fail> {
            if k.contains(&v.len()) {
                Ok(v)
            } else {
                Err(Fail::Usage(format!("group {spec:?}: wrong number of parameters")))
            }
        };
        Ok(match kind {
            "cyclic" => Group::cyclic(arity(nums(rest, ':')?, 1..=1)?[0])?,
            "dihedral" => Group::dihedral(arity(nums(rest, ':')?, 1..=1)?[0])?,
            "elementary-abelian" => {
                let v = arity(nums(rest, ':')?, 2..=2)?;
                Group::elementary_abelian(v[0], v[1])?
            }
            "abelian" => Group::abelian(&nums(rest, ',')?)?,
            "symmetric" => Group::symmetric(arity(nums(rest, ':')?, 1..=1)?[0])?,
            "alternating" => Group::alternating(arity(nums(rest, ':')?, 1..=1)?[0])?,
            "metacyclic" => {
                let v = arity(nums(rest, ':')?, 3..=3)?;
                Group::metacyclic(v[0], v[1], v[2])?
            }
            "field" => {
                let v = arity(nums(rest, ':')?, 1..=2)?;
                Group::field_additive(v[0], v.get(1).copied().unwrap_or(1))?
            }
            "semifield" => Group::semifield_plane_group(arity(nums(rest, ':')?, 1..=1)?[0])?,
            "armanios-wells" => Group::armanios_wells_group().group,
            "gen-dihedral" => self.factor(rest)?.generalized_dihedral_extension()?,
            "file" => {
                let p = self.data.locate(rest);
                let text = std::fs::read_to_string(&p).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?;
                parse_group_table(&text)?
            }
            _ => return Err(Fail::Usage(format!("unknown group kind {kind:?}"))),
        })
    }
}

fn labels(g: &Group, text: &str) -> Result<Vec<Elem>, Fail> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|l| g.find_label(l).ok_or_else(|| Fail::Usage(format!("no element labelled {l:?}"))))
        .collect()
}

fn label_list(g: &Group, xs: &[Elem]) -> String {
    xs.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(",")
}

fn opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

fn md_table(out: Out, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    writeln!(out, "| {} |", header.join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(header.len()))?;
    for r in rows {
        writeln!(out, "| {} |", r.join(" | "))?;
    }
    Ok(())
}

fn tsv(out: Out, rows: &[Vec<String>]) -> std::io::Result<()> {
    for r in rows {
        writeln!(out, "{}", r.join("\t"))?;
    }
    Ok(())
}

fn emit_json(out: Out, mut v: Value) -> std::io::Result<()> {
    v.as_object_mut().expect("object").insert("schema".into(), json!(1));
    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
}

/// Key/value output shared by the small verbs.
fn emit_pairs(out: Out, fmt: Format, pairs: &[(&str, String)]) -> std::io::Result<()> {
    match fmt {
        Format::Json => {
            let obj: serde_json::Map<String, Value> =
                pairs.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect();
            emit_json(out, Value::Object(obj))
        }
        Format::Md => md_table(
            out,
            &["key", "value"],
            &pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect::<Vec<_>>(),
        ),
        _ => tsv(out, &pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect::<Vec<_>>()),
    }
}

fn emit_graph(out: Out, fmt: Format, g: &Graph) -> std::io::Result<()> {
    match fmt {
        Format::Tsv => out.write_all(write_edge_list(g).replace(' ', "\t").as_bytes()),
        Format::Json => emit_json(out, json!({ "n": g.order(), "edges": g.edges(), "graph6": graph6::encode(g) })),
        Format::Md => md_table(
            out,
            &["n", "edges", "graph6"],
            &[vec![g.order().to_string(), g.edge_count().to_string(), format!("`{}`", graph6::encode(g))]],
        ),
        Format::Graph6 => writeln!(out, "{}", graph6::encode(g)),
    }
}

/// Parses `argv` (including the program name), runs the verb and returns
/// the exit code.
pub fn run<I, T>(argv: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let ctx = Ctx { format: cli.format, budget: cli.budget, data: DataDir::resolve(cli.data.as_deref()) };
    match dispatch(&ctx, &cli.command, out) {
        Ok(code) => code,
        Err(Fail::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Fail::Check(m)) => {
            let _ = writeln!(err, "check failed: {m}");
            1
        }
    }
}

fn dispatch(ctx: &Ctx, cmd: &Command, out: Out) -> Result<i32, Fail> {
    match cmd {
        Command::Build { name, list } => build(ctx, name.as_deref(), *list, out),
        Command::Metrics(input) => metrics(ctx, input, out),
        Command::DrgCheck(input) => drg_check(ctx, input, out),
        Command::Spectrum { input, array } => spectrum(ctx, input, array.as_deref(), out),
        Command::Derive { kind, input } => derive(ctx, kind, input, out),
        Command::Cayley { group, set } => {
            let g = ctx.group(&group.group)?;
            let s = ConnectionSet::new(&g, &labels(&g, set)?)?;
            emit_graph(out, ctx.fmt(Format::Graph6), &cayley_graph(&g, &s))?;
            Ok(0)
        }
        Command::DistanceSets { group, set } => dist_sets(ctx, &group.group, set, out),
        Command::Quotient { group, set, subgroup, right_cosets } => {
            quotient(ctx, &group.group, set, subgroup, *right_cosets, out)
        }
        Command::IsCayley { input, expect, witness } => is_cayley_verb(ctx, input, *expect, witness.as_ref(), out),
        Command::Feasibility { kind, arg } => feasibility(ctx, *kind, arg, out),
        Command::Diffset { group, set, k, lambda, incidence } => {
            diffset(ctx, &group.group, set.as_deref(), k.zip(*lambda), *incidence, out)
        }
        Command::Census { table } => census(ctx, *table, out),
    }
}

fn build(ctx: &Ctx, name: Option<&str>, list: bool, out: Out) -> Result<i32, Fail> {
    if list {
        for n in catalog::NAMES {
            writeln!(out, "{n}")?;
        }
        return Ok(0);
    }
    let name = name.ok_or_else(|| Fail::Usage("build needs a catalog name or --list".into()))?;
    let b = build_with(name, &|a| ctx.data.asset(a))?;
    match ctx.fmt(Format::Graph6) {
        Format::Json => {
            let cayley = b.cayley.as_ref().map(|w| {
                json!({ "group": w.group_name, "order": w.group.order(), "connection_set": w.connection_set.labels(&w.group) })
            });
            emit_json(
                out,
                json!({ "name": name, "n": b.graph.order(), "edges": b.graph.edges(), "graph6": graph6::encode(&b.graph), "cayley": cayley }),
            )?;
        }
        Format::Md => {
            let c = b
                .cayley
                .as_ref()
                .map_or("-".into(), |w| format!("Cay({}, {{{}}})", w.group_name, w.connection_set.labels(&w.group)));
            md_table(
                out,
                &["Name", "n", "edges", "Construction", "graph6"],
                &[vec![
                    name.into(),
                    b.graph.order().to_string(),
                    b.graph.edge_count().to_string(),
                    c,
                    format!("`{}`", graph6::encode(&b.graph)),
                ]],
            )?;
        }
        f => emit_graph(out, f, &b.graph)?,
    }
    Ok(0)
}

fn metrics(ctx: &Ctx, input: &GraphInput, out: Out) -> Result<i32, Fail> {
    let g = ctx.graph(input)?;
    let m = g.metrics();
    let pairs = [
        ("n", g.order().to_string()),
        ("edges", g.edge_count().to_string()),
        ("valency", opt(g.regular_degree())),
        ("connected", m.is_connected.to_string()),
        ("bipartite", m.is_bipartite.to_string()),
        ("diameter", opt(m.diameter)),
        ("girth", opt(m.girth)),
        ("odd_girth", opt(m.odd_girth)),
        ("even_girth", opt(m.even_girth)),
    ];
    emit_pairs(out, ctx.fmt(Format::Tsv), &pairs)?;
    Ok(0)
}

fn drg_check(ctx: &Ctx, input: &GraphInput, out: Out) -> Result<i32, Fail> {
    let g = ctx.graph(input)?;
    let fmt = ctx.fmt(Format::Tsv);
    match check_distance_regular(&g)? {
        DrgCheck::Regular(a) => {
            let mut pairs =
                vec![("array", a.to_string()), ("n", g.order().to_string()), ("diameter", a.diameter().to_string())];
            if let Some((n, k, l, mu)) = srg_parameters(&a) {
                pairs.push(("srg", format!("({n},{k},{l},{mu})")));
            }
            emit_pairs(out, fmt, &pairs)?;
            Ok(0)
        }
        DrgCheck::Refused(w) => {
            emit_pairs(out, fmt, &[("refused", w.to_string())])?;
            Ok(1)
        }
    }
}

fn spectrum(ctx: &Ctx, input: &GraphInput, array: Option<&str>, out: Out) -> Result<i32, Fail> {
    let fmt = ctx.fmt(Format::Tsv);
    if let Some(text) = array {
        let a: IntersectionArray = text.parse()?;
        let ev = spectrum_of_array(&a);
        let rows: Vec<Vec<String>> = ev
            .iter()
            .map(|e| vec![fmt_eigen(e.value), if e.is_rational() { "rational".into() } else { "irrational".into() }])
            .collect();
        match fmt {
            Format::Json => emit_json(
                out,
                json!({ "array": a.to_string(), "eigenvalues": ev.iter().map(|e| json!({ "value": e.value, "exact": e.exact })).collect::<Vec<_>>() }),
            )?,
            Format::Md => md_table(out, &["eigenvalue", "kind"], &rows)?,
            _ => tsv(out, &rows)?,
        }
        return Ok(0);
    }
    let g = ctx.graph(input)?;
    let s = spectrum_numeric(&g)?;
    let rows: Vec<Vec<String>> = s.values.iter().map(|&(v, m)| vec![fmt_eigen(v), m.to_string()]).collect();
    match fmt {
        Format::Json => emit_json(
            out,
            json!({ "spectrum": s.values.iter().map(|&(v, m)| json!({ "value": v, "multiplicity": m })).collect::<Vec<_>>() }),
        )?,
        Format::Md => md_table(out, &["eigenvalue", "multiplicity"], &rows)?,
        _ => tsv(out, &rows)?,
    }
    Ok(0)
}

fn derive(ctx: &Ctx, kind: &str, input: &GraphInput, out: Out) -> Result<i32, Fail> {
    let g = ctx.graph(input)?;
    let (k, arg) = kind.split_once(':').unwrap_or((kind, ""));
    let num = || arg.parse::<usize>().map_err(|_| Fail::Usage(format!("{k} needs a number, as in {k}:1")));
    let h = match k {
        "complement" => g.complement(),
        "line" => g.line_graph(),
        "bipartite-double" => g.bipartite_double(),
        "distance" => g.distance_graph(num()?)?,
        "halved" => {
            let part = u8::try_from(num()?).map_err(|_| Fail::Usage("part must be 0 or 1".into()))?;
            g.halved(part)?.0
        }
        "antipodal-quotient" => g.antipodal_quotient()?.0,
        _ => return Err(Fail::Usage(format!("unknown derivation {kind:?}"))),
    };
    emit_graph(out, ctx.fmt(Format::Graph6), &h)?;
    Ok(0)
}

fn dist_sets(ctx: &Ctx, spec: &str, set: &str, out: Out) -> Result<i32, Fail> {
    let g = ctx.group(spec)?;
    let s = ConnectionSet::new(&g, &labels(&g, set)?)?;
    let ds = distance_sets(&g, &s)?;
    match ctx.fmt(Format::Tsv) {
        Format::Json => emit_json(
            out,
            json!({
                "sets": ds.sets.iter().map(|x| x.iter().map(|&e| g.label(e)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "n_d_is_subgroup": ds.n_d_is_subgroup,
                "n_d_is_normal": ds.n_d_is_normal,
            }),
        )?,
        fmt => {
            let mut rows: Vec<Vec<String>> = ds
                .sets
                .iter()
                .enumerate()
                .map(|(i, x)| vec![format!("S_{i}"), x.len().to_string(), label_list(&g, x)])
                .collect();
            rows.push(vec!["N_d subgroup".into(), ds.n_d_is_subgroup.to_string(), String::new()]);
            rows.push(vec!["N_d normal".into(), ds.n_d_is_normal.to_string(), String::new()]);
            if fmt == Format::Md {
                md_table(out, &["set", "size", "elements"], &rows)?;
            } else {
                tsv(out, &rows)?;
            }
        }
    }
    Ok(0)
}

fn quotient(ctx: &Ctx, spec: &str, set: &str, sub: &str, right: bool, out: Out) -> Result<i32, Fail> {
    let g = ctx.group(spec)?;
    let s = ConnectionSet::new(&g, &labels(&g, set)?)?;
    let h = g.closure(&labels(&g, sub)?);
    let q: QuotientMatrix = if right {
        equitable_quotient(&cayley_graph(&g, &s), &g.right_cosets(&h))?
    } else {
        coset_quotient(&g, &s, &h)?
    };
    let spec_g = spectrum_numeric(&cayley_graph(&g, &s))?;
    let qs = q.spectrum();
    let bad = q.eigenvalue_violation(&spec_g, SNAP_TOL);
    match ctx.fmt(Format::Tsv) {
        Format::Json => emit_json(
            out,
            json!({
                "parts": q.parts.len(),
                "matrix": q.entries,
                "eigenvalues": qs.distinct(),
                "contained_in_spectrum": bad.is_none(),
            }),
        )?,
        fmt => {
            let rows: Vec<Vec<String>> = q.entries.iter().map(|r| r.iter().map(usize::to_string).collect()).collect();
            if fmt == Format::Md {
                let header: Vec<String> = (0..rows.len()).map(|i| format!("P{i}")).collect();
                md_table(out, &header.iter().map(String::as_str).collect::<Vec<_>>(), &rows)?;
            } else {
                tsv(out, &rows)?;
            }
            writeln!(out, "eigenvalues: {qs}")?;
            writeln!(out, "contained in spectrum: {}", if bad.is_none() { "yes" } else { "no" })?;
        }
    }
    Ok(if bad.is_some() { 1 } else { 0 })
}

fn is_cayley_verb(
    ctx: &Ctx,
    input: &GraphInput,
    expect: Option<Expect>,
    witness: Option<&PathBuf>,
    out: Out,
) -> Result<i32, Fail> {
    let g = ctx.graph(input)?;
    let array = match check_distance_regular(&g) {
        Ok(DrgCheck::Regular(a)) => Some(a),
        _ => None,
    };
    let budget = ctx.deadline();
    let v = is_cayley_with_array(&g, array.as_ref(), &budget)?;
    let fmt = ctx.fmt(Format::Tsv);
    if let (CayleyVerdict::Yes { group, connection_set, .. }, Some(dir)) = (&v, witness) {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("group.tbl"), write_group_table(group))?;
        std::fs::write(dir.join("connection-set.txt"), format!("{}\n", connection_set.labels(group)))?;
    }
    match fmt {
        Format::Json => {
            let mut obj = json!({ "verdict": v.to_string(), "n": g.order() });
            if let CayleyVerdict::Yes { group, connection_set, aut_order } = &v {
                obj["aut_order"] = json!(aut_order.to_string());
                obj["group_order"] = json!(group.order());
                obj["connection_set"] = json!(connection_set.labels(group));
            }
            emit_json(out, obj)?;
        }
        _ => {
            writeln!(out, "{v}")?;
            if let CayleyVerdict::Yes { group, connection_set, .. } = &v {
                writeln!(out, "connection set: {}", connection_set.labels(group))?;
            }
        }
    }
    Ok(match (&v, expect) {
        (CayleyVerdict::Unknown(_), _) => 3,
        (CayleyVerdict::Yes { .. }, None | Some(Expect::Yes)) => 0,
        (CayleyVerdict::No(_), Some(Expect::No)) => 0,
        _ => 1,
    })
}

fn feasibility(ctx: &Ctx, kind: FeasibilityKind, arg: &str, out: Out) -> Result<i32, Fail> {
    let s = || arg.parse::<usize>().map_err(|_| Fail::Usage(format!("{arg:?} is not an order s")));
    let (feasible, reason) = match kind {
        FeasibilityKind::Gq => {
            let v = gq_cayley_feasible(s()?);
            (v.feasible, v.reason)
        }
        FeasibilityKind::Gh => {
            let v = gh_cayley_feasible(s()?);
            (v.feasible, v.reason)
        }
        FeasibilityKind::Halving => {
            let a: IntersectionArray = arg.parse()?;
            let n = a.order().ok_or_else(|| Fail::Usage("array has non-integral vertex counts".into()))?;
            if n % 4 != 2 {
                (true, format!("not applicable: n = {n} is not 2 mod 4"))
            } else {
                let h = halving_obstruction(&a);
                let msg = h.message(n);
                (!h.obstructed, if h.obstructed { format!("infeasible: {msg}") } else { format!("feasible: {msg}") })
            }
        }
    };
    match ctx.fmt(Format::Tsv) {
        Format::Json => emit_json(out, json!({ "feasible": feasible, "reason": reason }))?,
        _ => writeln!(out, "{reason}")?,
    }
    Ok(if feasible { 0 } else { 1 })
}

fn diffset(
    ctx: &Ctx,
    spec: &str,
    set: Option<&str>,
    find: Option<(usize, usize)>,
    incidence: bool,
    out: Out,
) -> Result<i32, Fail> {
    let g = ctx.group(spec)?;
    let found = match (set, find) {
        (Some(text), _) => match verify_difference_set(&g, &labels(&g, text)?)? {
            Ok(d) => d,
            Err(r) => {
                writeln!(
                    out,
                    "not a difference set: {} arises {} times, expected {}",
                    g.label(r.element),
                    r.count,
                    r.expected
                )?;
                return Ok(1);
            }
        },
        (None, Some((k, l))) => match find_difference_set(&g, k, l, &ctx.deadline()) {
            Ok(Some(d)) => d,
            Ok(None) => {
                writeln!(out, "none: no ({}, {k}, {l}) difference set in this group", g.order())?;
                return Ok(1);
            }
            Err(Error::BudgetExceeded) => {
                writeln!(out, "unknown (budget exceeded)")?;
                return Ok(3);
            }
            Err(e) => return Err(e.into()),
        },
        (None, None) => return Err(Fail::Usage("diffset needs --set or --k with --lambda".into())),
    };
    if incidence {
        let (_, _, graph) = incidence_graph_of_development(&g, &found.elements)?;
        emit_graph(out, ctx.fmt(Format::Graph6), &graph)?;
        return Ok(0);
    }
    let (v, k, l) = found.params;
    let pairs = [("params", format!("({v},{k},{l})")), ("set", label_list(&g, &found.elements))];
    emit_pairs(out, ctx.fmt(Format::Tsv), &pairs)?;
    Ok(0)
}

const CENSUS_HEADER: [&str; 10] =
    ["Intersection array", "n", "d", "g", "Name", "Cayley", "Reference", "Computed", "Status", "Detail"];

fn census_cells(r: &CensusRow) -> Vec<String> {
    let e = &r.entry;
    let detail = match &r.status {
        RowStatus::Failed(m) => format!("{m}; {}", r.detail),
        _ => r.detail.clone(),
    };
    let detail = if e.note.is_empty() { detail } else { format!("{detail} [{}]", e.note) };
    vec![
        e.array.to_string(),
        e.n.to_string(),
        e.d.to_string(),
        e.g.to_string(),
        e.name.to_string(),
        r.expected_cayley().to_string(),
        e.reference.to_string(),
        r.computed_cayley.clone(),
        r.status.label().to_string(),
        detail,
    ]
}

fn census(ctx: &Ctx, table: Option<u8>, out: Out) -> Result<i32, Fail> {
    let rows: Vec<CensusRow> = entries()
        .into_par_iter()
        .filter(|e| table.is_none_or(|t| e.table == t))
        .map(|e| {
            let budget = ctx.budget;
            census_row(&e, &move || Box::new(Deadline::seconds(budget)) as Box<dyn Budget>, &|a| ctx.data.asset(a))
        })
        .collect();
    let tables: Vec<u8> = table.map_or(vec![1, 2, 3, 4], |t| vec![t]);
    match ctx.fmt(Format::Md) {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "table": r.entry.table,
                        "array": r.entry.array,
                        "n": r.entry.n,
                        "d": r.entry.d,
                        "g": r.entry.g,
                        "name": r.entry.name,
                        "cayley": r.expected_cayley(),
                        "reference": r.entry.reference,
                        "computed": r.computed.iter().map(|(n, d, g, a)| json!({ "n": n, "d": d, "g": g, "array": a })).collect::<Vec<_>>(),
                        "computed_cayley": r.computed_cayley,
                        "status": r.status.label(),
                        "failure": match &r.status { RowStatus::Failed(m) => Some(m.clone()), _ => None },
                        "detail": r.detail,
                        "note": r.entry.note,
                    })
                })
                .collect();
            emit_json(out, json!({ "rows": v }))?;
        }
        Format::Tsv | Format::Graph6 => {
            let mut all = vec![std::iter::once("Table").chain(CENSUS_HEADER).map(String::from).collect::<Vec<_>>()];
            all.extend(
                rows.iter().map(|r| std::iter::once(r.entry.table.to_string()).chain(census_cells(r)).collect()),
            );
            tsv(out, &all)?;
        }
        Format::Md => {
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "Table {t}: {}", table_caption(*t))?;
                writeln!(out)?;
                let body: Vec<Vec<String>> = rows.iter().filter(|r| r.entry.table == *t).map(census_cells).collect();
                md_table(out, &CENSUS_HEADER, &body)?;
            }
        }
    }
    if rows.iter().any(|r| matches!(r.status, RowStatus::Failed(_))) {
        Ok(1)
    } else if rows.iter().any(|r| r.status == RowStatus::Unknown) {
        Ok(3)
    } else {
        Ok(0)
    }
}
