use super::{parse_euler_program, parse_point, parse_polynomial};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ZeroDim, DEFAULT_PROBE_TRIALS};
use crate::hodge::{
    adjoint_rank_mod_p, adjoint_space_dim, euler_nodal_threefold, euler_resolution, mhs_dims, node_bound, pole_adjoint_threshold,
    smooth_hodge_numbers, EulerPolynomial,
};
use crate::pencil::{
    indicial_exponents, picard_fuchs, picard_fuchs_experimental, unipotency_class, Pencil, PicardFuchs, Point,
};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::scalars::{rational_roots, Field, Fp, RatFun, Rational, UPoly, DEFAULT_PRIMES};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "nodal-hodge", version, about = "Exact Hodge-theoretic invariants of nodal hypersurfaces and pencils")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    /// Seed for randomized probes and parameter choices.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads for independent modular runs.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hodge numbers and bounds for hypersurfaces in P^4.
    Hodge {
        #[command(subcommand)]
        cmd: HodgeCmd,
    },
    /// Count the singular points of a hypersurface modulo primes.
    Nodes(NodesArgs),
    /// Dimension of numerators satisfying adjoint conditions at the nodes.
    Adjoint(AdjointArgs),
    /// Euler polynomials from a term program or of a nodal threefold.
    Euler(EulerArgs),
    /// Weight-graded dimensions of H^3 of a nodal threefold.
    Mhs(MhsArgs),
    /// Picard-Fuchs operator of a pencil F - t*G.
    PicardFuchs(PfArgs),
}

#[derive(Subcommand, Debug)]
pub enum HodgeCmd {
    /// h30, h21, h12, h03 of a smooth hypersurface of degree D.
    Smooth {
        #[arg(long)]
        deg: u32,
    },
    /// Maximal node count h21 for degree D.
    NodeBound {
        #[arg(long)]
        deg: u32,
    },
    /// Adjoint threshold N for pole order n.
    Threshold {
        #[arg(long)]
        n: i64,
    },
}

#[derive(Args, Debug)]
pub struct FormArgs {
    /// File holding the polynomial; `t` is allowed and must then be fixed.
    #[arg(long)]
    pub poly: PathBuf,
    /// Number of variables x0 .. x{N-1} in the file.
    #[arg(long)]
    pub vars: usize,
    /// Value of the pencil parameter t.
    #[arg(long)]
    pub t: Option<String>,
    /// Substitute x{N-1} = -(x0 + ... + x{N-2}) before computing.
    #[arg(long)]
    pub restrict: bool,
}

#[derive(Args, Debug)]
pub struct NodesArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Primes for the modular runs.
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Also run over Q.
    #[arg(long)]
    pub rational: bool,
}

#[derive(Args, Debug)]
pub struct AdjointArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// File of rational projective points, one per line. Without it the rank is computed mod p.
    #[arg(long)]
    pub sigma: Option<PathBuf>,
    #[arg(long)]
    pub pole: u32,
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    /// Primes for the modular mode.
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
pub struct EulerArgs {
    /// File holding a term program.
    #[arg(long)]
    pub program: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Option<EulerCmd>,
}

#[derive(Subcommand, Debug)]
pub enum EulerCmd {
    /// Threefold with m nodes and smooth-deformation numbers h30 = a, h21 = b.
    Nodal {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// Report the resolution instead.
        #[arg(long)]
        resolution: bool,
    },
}

#[derive(Args, Debug)]
pub struct MhsArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    /// dim H^2 of the nodal threefold.
    #[arg(long)]
    pub h2: Option<u64>,
}

#[derive(Args, Debug)]
pub struct PfArgs {
    /// File holding F - t*G.
    #[arg(long)]
    pub pencil: PathBuf,
    #[arg(long)]
    pub vars: usize,
    /// Reduce inside the permutation invariants.
    #[arg(long)]
    pub symmetric: bool,
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Skip the generic smoothness check; the output is flagged.
    #[arg(long)]
    pub experimental: bool,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse().map_err(|_| Error::Validation(format!("not a rational number: '{s}'")))
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(1..=50), rng.gen_range(1..=7)).expect("nonzero denominator")
}

fn depends_on_t(p: &Polynomial<RatFun>) -> bool {
    p.terms().iter().any(|(_, c)| c.as_constant().is_none())
}

fn specialize(p: &Polynomial<RatFun>, t: Option<&Rational>, restrict: bool) -> Result<Polynomial<Rational>> {
    let q = match t {
        Some(t) => p.at_t(t)?,
        None => p.to_rational()?,
    };
    if restrict {
        q.restrict_to_hyperplane()
    } else {
        Ok(q)
    }
}

fn primes_or_default(p: &[u64]) -> Vec<u64> {
    if p.is_empty() {
        DEFAULT_PRIMES.to_vec()
    } else {
        p.to_vec()
    }
}

/// Singular-scheme degree and reducedness modulo `p`.
fn nodes_mod_p(f: &Polynomial<Rational>, p: u64, seed: u64) -> Result<Value> {
    let fp = f.map_coeffs(&p, |c| Fp::from_rational(&p, c))?;
    let gb = buchberger(&fp.partial_derivatives(), &MonomialOrder::grevlex(f.nvars()))?;
    Ok(match gb.zero_dim_degree()? {
        ZeroDim::Degree(d) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
            let reduced = d == 0 || gb.reducedness_probe(DEFAULT_PROBE_TRIALS, &mut rng)?;
            json!({"prime": p, "degree": d, "reduced": reduced})
        }
        ZeroDim::NotZeroDimensional => json!({"prime": p, "degree": null, "reduced": null}),
    })
}

fn nodes_over_q(f: &Polynomial<Rational>, seed: u64) -> Result<Value> {
    let gb = buchberger(&f.partial_derivatives(), &MonomialOrder::grevlex(f.nvars()))?;
    Ok(match gb.zero_dim_degree()? {
        ZeroDim::Degree(d) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let reduced = d == 0 || gb.reducedness_probe(DEFAULT_PROBE_TRIALS, &mut rng)?;
            json!({"degree": d, "reduced": reduced})
        }
        ZeroDim::NotZeroDimensional => json!({"degree": null, "reduced": null}),
    })
}

fn homogeneous_degree(f: &Polynomial<Rational>) -> Result<u32> {
    match f.is_homogeneous() {
        (true, Some(d)) => Ok(d),
        _ => Err(Error::Validation("the polynomial must be a nonzero homogeneous form".into())),
    }
}

fn run_nodes(a: &NodesArgs, seed: u64) -> Result<Value> {
    let src = read(&a.form.poly)?;
    let p = parse_polynomial(&src, a.form.vars, true)?;
    let pencil = depends_on_t(&p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let given = a.form.t.as_deref().map(parse_rational).transpose()?;
    if !pencil && given.is_some() {
        return Err(Error::Validation("--t given but the polynomial does not involve t".into()));
    }
    let primes = primes_or_default(&a.primes);
    let attempts = if pencil && given.is_none() { 5 } else { 1 };
    let mut redraws = Vec::new();
    let mut t = given.clone();
    for attempt in 0..attempts {
        if pencil && given.is_none() {
            t = Some(small_rational(&mut rng));
        }
        let f = specialize(&p, t.as_ref(), a.form.restrict)?;
        let deg = homogeneous_degree(&f)?;
        let runs = primes.par_iter().map(|&q| nodes_mod_p(&f, q, seed)).collect::<Result<Vec<_>>>()?;
        let degrees: Vec<&Value> = runs.iter().map(|r| &r["degree"]).collect();
        let agree = degrees.windows(2).all(|w| w[0] == w[1]);
        let all_reduced = runs.iter().all(|r| r["reduced"] == json!(true));
        let ok = agree && !degrees[0].is_null() && all_reduced;
        if !ok && attempt + 1 < attempts {
            let tv = t.as_ref().expect("pencil").to_string();
            eprintln!("notice: t = {tv} gives no consistent node count; drawing a new value");
            redraws.push(json!(tv));
            continue;
        }
        let node_count = if degrees[0].is_null() {
            json!("NOT_ZERO_DIMENSIONAL")
        } else if agree && all_reduced {
            degrees[0].clone()
        } else {
            Value::Null
        };
        let mut out = json!({
            "polynomial_degree": deg,
            "vars": f.nvars(),
            "t": t.as_ref().map(|x| x.to_string()),
            "primes": primes,
            "per_prime": runs,
            "agree": agree,
            "degree": if agree { degrees[0].clone() } else { Value::Null },
            "reduced": all_reduced,
            "node_count": node_count,
            "redrawn": redraws,
        });
        if a.rational {
            out["rational"] = nodes_over_q(&f, seed)?;
        }
        return Ok(out);
    }
    unreachable!("the final attempt always returns")
}

fn run_adjoint(a: &AdjointArgs, seed: u64) -> Result<Value> {
    let src = read(&a.form.poly)?;
    let p = parse_polynomial(&src, a.form.vars, true)?;
    let t = a.form.t.as_deref().map(parse_rational).transpose()?;
    if depends_on_t(&p) && t.is_none() {
        return Err(Error::Validation("the polynomial involves t; pass --t".into()));
    }
    let f = specialize(&p, t.as_ref(), a.form.restrict)?;
    if let Some(path) = &a.sigma {
        let text = read(path)?;
        let mut pts = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            pts.push(parse_point(line, i + 1)?);
        }
        let r = adjoint_space_dim(&f, &pts, a.pole, a.order)?;
        return Ok(json!({"mode": "rational", "points": pts.len(), "report": r}));
    }
    if a.order != 1 {
        return Err(Error::Validation("the modular mode supports only --order 1; pass --sigma for higher orders".into()));
    }
    let primes = primes_or_default(&a.primes);
    let reports = primes
        .par_iter()
        .map(|&q| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q);
            adjoint_rank_mod_p(&f, a.pole, q, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let agree = reports.windows(2).all(|w| w[0].rank == w[1].rank && w[0].nodes == w[1].nodes);
    Ok(json!({
        "mode": "mod_p",
        "reports": reports,
        "agree": agree,
        "rank": if agree { json!(reports[0].rank) } else { Value::Null },
        "dimension": if agree { json!(reports[0].dimension) } else { Value::Null },
    }))
}

fn euler_json(e: &EulerPolynomial) -> Value {
    let mut v = serde_json::to_value(e).expect("serializable");
    v["polynomial"] = json!(e.to_string());
    v
}

fn run_euler(a: &EulerArgs) -> Result<Value> {
    match (&a.program, &a.cmd) {
        (Some(path), None) => Ok(euler_json(&parse_euler_program(&read(path)?)?)),
        (None, Some(EulerCmd::Nodal { m, a, b, resolution })) => {
            let e = if *resolution { euler_resolution(*m, *a, *b)? } else { euler_nodal_threefold(*m, *a, *b)? };
            Ok(euler_json(&e))
        }
        _ => Err(Error::Validation("pass either --program FILE or the nodal subcommand".into())),
    }
}

fn singular_points_json(pf: &PicardFuchs) -> (Vec<Point>, Vec<String>) {
    let locus = pf.operator.singular_locus();
    let roots = rational_roots(&locus);
    let mut rest = locus.clone();
    for r in &roots {
        let lin = UPoly::from_coeffs(&(), vec![r.neg(), Rational::int(1)]);
        rest = rest.div_exact(&lin).expect("root divides");
    }
    let mut points: Vec<Point> = roots.into_iter().map(Point::Finite).collect();
    let mut labels: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    if rest.degree().unwrap_or(0) > 0 {
        labels.push(format!("roots of {}", rest.render("t")));
    }
    if pf.operator.singular_at_infinity() {
        points.push(Point::Infinity);
        labels.push("infinity".into());
    }
    (points, labels)
}

fn picard_fuchs_json(pf: &PicardFuchs, pencil: &Pencil, experimental: bool) -> Value {
    let op = &pf.operator;
    let r = op.order();
    let (points, labels) = singular_points_json(pf);
    let mut exps = Map::new();
    let mut classes = Map::new();
    let mut regular = Map::new();
    let mut at_infinity = None;
    for p in &points {
        let ind = indicial_exponents(op, p);
        let class = unipotency_class(&ind, r);
        exps.insert(p.to_string(), serde_json::to_value(&ind.exponents).expect("serializable"));
        classes.insert(p.to_string(), json!(class.to_string()));
        regular.insert(p.to_string(), json!(ind.regular));
        if *p == Point::Infinity {
            at_infinity = Some(ind);
        }
    }
    // verification-layer normalization: gauge to exponents 0 at infinity, then z = t^-d
    let normalization = at_infinity
        .and_then(|ind| {
            let first = ind.exponents.first()?.as_rational()?.clone();
            let all_equal = ind.regular && ind.exponents.iter().all(|e| e.as_rational() == Some(&first));
            if !all_equal || !first.is_integer() {
                return None;
            }
            let z = op.to_theta().gauge(&first).pushforward(pencil.degree()).ok()?;
            let zd = z.as_theta().to_d_form();
            let at0 = indicial_exponents(&zd, &Point::Finite(Rational::int(0)));
            Some(json!({
                "gauge": format!("t^{first}"),
                "variable": format!("z = t^-{}", pencil.degree()),
                "theta_form": z.coeffs.iter().map(|c| c.render("z")).collect::<Vec<_>>(),
                "exponents_z0": at0.exponents,
                "unipotency_z0": unipotency_class(&at0, r).to_string(),
            }))
        })
        .unwrap_or(Value::Null);
    json!({
        "order": r,
        "coeffs": op.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "singular_points": labels,
        "exponents": exps,
        "regular": regular,
        "unipotency": classes,
        "normalization": normalization,
        "space_dim": pf.space_dim,
        "path": pf.path,
        "experimental": experimental,
    })
}

fn run_picard_fuchs(a: &PfArgs, seed: u64) -> Result<Value> {
    let src = read(&a.pencil)?;
    let p = parse_polynomial(&src, a.vars, true)?;
    let pencil = Pencil::from_fiber(&p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pf = if a.experimental {
        picard_fuchs_experimental(&pencil, a.max_order, a.symmetric)?
    } else {
        picard_fuchs(&pencil, a.max_order, a.symmetric, &mut rng)?
    };
    Ok(picard_fuchs_json(&pf, &pencil, a.experimental))
}

/// Execute a parsed command line.
pub fn execute(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::Hodge { cmd } => match cmd {
            HodgeCmd::Smooth { deg } => Ok(serde_json::to_value(smooth_hodge_numbers(*deg)?).expect("serializable")),
            HodgeCmd::NodeBound { deg } => Ok(json!({"degree": deg, "node_bound": node_bound(*deg)?})),
            HodgeCmd::Threshold { n } => Ok(json!({"n": n, "threshold": pole_adjoint_threshold(*n)?})),
        },
        Command::Nodes(a) => run_nodes(a, cli.seed),
        Command::Adjoint(a) => run_adjoint(a, cli.seed),
        Command::Euler(a) => run_euler(a),
        Command::Mhs(a) => Ok(serde_json::to_value(mhs_dims(a.m, a.a, a.b, a.h2)?).expect("serializable")),
        Command::PicardFuchs(a) => run_picard_fuchs(a, cli.seed),
    }
}

fn flatten(v: &Value, prefix: &str, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(x, &key(k), out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, &key(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.replace(['\t', '\n'], " "))),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Render a result: pretty JSON, or a two-line TSV with one key path per column.
pub fn render(v: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(v).expect("serializable"),
        OutputFormat::Tsv => {
            let mut cols = Vec::new();
            flatten(v, "", &mut cols);
            let head: Vec<&str> = cols.iter().map(|(k, _)| k.as_str()).collect();
            let vals: Vec<&str> = cols.iter().map(|(_, v)| v.as_str()).collect();
            format!("{}\n{}", head.join("\t"), vals.join("\t"))
        }
    }
}

/// Run the command line; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads must be positive");
            return 1;
        }
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    match execute(&cli) {
        Ok(v) => {
            // a closed pipe on stdout is not an error of the computation
            let _ = writeln!(std::io::stdout(), "{}", render(&v, cli.output));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_user_error() {
                1
            } else {
                2
            }
        }
    }
}
