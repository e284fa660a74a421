use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use hivenet::collections::{invert_gz, invert_horn};
use hivenet::hive::{self, ConeCheck, HornOptions, HornTriple};
use hivenet::multipath::{eigenvalue_vector, enumerate_kpaths, l_map, m_map, max_kpath_weight};
use hivenet::network;
use hivenet::recombine::{self, canonical_decomposition, Variant};
use hivenet::sample::{random_network, NetworkShape};
use hivenet::spectra::{principal_tableau, sample_horn_instance, HornSample};
use hivenet::{Edge, Multipath, PlanarNetwork, Point, Vertex, Tableau, TropicalWeight, Weighting};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::format::{
    format_rational, parse_list, parse_rational, read_json, read_network, read_tableau, read_weighting, to_json,
    write_json, FloatTableauFile, GdPathFile, MatrixFile, MultipathFile, NetworkFile, TableauFile, WeightingFile,
};
use crate::render::{render, RenderOptions};
use crate::report::{RunReport, Verdict};
use crate::{
    CheckCmd, Cli, Command, DecomposeArgs, EvalCmd, GenCmd, HornArgs, InvertCmd, OutArg, Output, RecombineArgs,
    RecombineCmd, RenderArgs, SpectraCmd, TableauArg, VariantArg, WeightsCmd,
};

/// Denominator used when rounding sampled spectra to rationals.
const SPECTRUM_DENOMINATOR: i64 = 1_000_000;

struct Ctx {
    seed: u64,
    cap: usize,
    echo: Vec<String>,
}

impl Ctx {
    fn report(&self, verdict: Verdict) -> RunReport {
        RunReport::new(self.echo.clone(), verdict)
    }
}

pub(crate) fn dispatch(cli: &Cli, echo: Vec<String>) -> anyhow::Result<Output> {
    let ctx = Ctx { seed: cli.seed, cap: cli.cap, echo };
    match &cli.command {
        Command::Gen(cmd) => gen(&ctx, cmd),
        Command::Weights(cmd) => weights(&ctx, cmd),
        Command::Eval(cmd) => eval(&ctx, cmd),
        Command::Check(cmd) => check(&ctx, cmd),
        Command::Invert(cmd) => invert(&ctx, cmd),
        Command::Recombine(cmd) => recombine_cmd(&ctx, cmd),
        Command::Decompose(args) => decompose(&ctx, args),
        Command::Spectra(cmd) => spectra(&ctx, cmd),
        Command::Render(args) => render_cmd(&ctx, args),
    }
}

/// Writes `doc` to `-o` if given; otherwise hands it back for printing and
/// records it in the report.
fn emit<T: Serialize>(mut report: RunReport, key: &str, doc: &T, out: &OutArg) -> anyhow::Result<Output> {
    match &out.out {
        Some(path) => {
            write_json(path, doc)?;
            report.witness("written", path.display().to_string());
            Ok(Output { report, document: None })
        }
        None => {
            report.witness(key, doc);
            Ok(Output { report, document: Some(to_json(doc)) })
        }
    }
}

fn gen(ctx: &Ctx, cmd: &GenCmd) -> anyhow::Result<Output> {
    let (net, out) = match cmd {
        GenCmd::Gamma0 { n, out } => (network::gamma0(*n)?, out),
        GenCmd::Delta0 { n, out } => (network::delta0(*n)?, out),
        GenCmd::Horn { n, out } => (network::horn_network(*n)?, out),
        GenCmd::Concat { left, right, out } => {
            let (g, d) = (read_network(left)?, read_network(right)?);
            (network::concatenate(&g, &shift_to(&d, g.b())?)?, out)
        }
        GenCmd::Random { rank, max_edges, out } => {
            if *rank == 0 {
                bail!("rank must be positive");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            (random_network(&mut rng, &NetworkShape::small(*rank, *max_edges)), out)
        }
    };
    let mut report = ctx.report(Verdict::Ok);
    report.witness("rank", net.rank());
    report.witness("edges", net.edges().len());
    emit(report, "network", &NetworkFile::from_network(&net), out)
}

/// Translates `net` horizontally so that its strip starts at `a`.
fn shift_to(net: &PlanarNetwork, a: &hivenet::Rational) -> anyhow::Result<PlanarNetwork> {
    let dx = a - net.a();
    let moved = |p: &Point| Point::new(&p.x + &dx, p.y.clone());
    let vertices = net.vertices().iter().map(|v| Vertex { id: v.id, pos: moved(&v.pos) }).collect();
    let edges = net
        .edges()
        .iter()
        .map(|e| Edge { bends: e.bends.iter().map(moved).collect(), ..e.clone() })
        .collect();
    let (a, b) = (net.a() + &dx, net.b() + &dx);
    Ok(match net.middle() {
        Some(m) => PlanarNetwork::with_middle(a, b, m + &dx, vertices, edges)?,
        None => PlanarNetwork::new(a, b, vertices, edges)?,
    })
}

fn weights(ctx: &Ctx, cmd: &WeightsCmd) -> anyhow::Result<Output> {
    let (w, out) = match cmd {
        WeightsCmd::Random { net, lo, hi, den, out } => {
            if lo > hi || *den <= 0 {
                bail!("need lo <= hi and den > 0");
            }
            let net = read_network(net)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            (Weighting::random_rational(&net, &mut rng, *lo, *hi, *den), out)
        }
        WeightsCmd::Zero { net, out } => (Weighting::zero(&read_network(net)?), out),
    };
    emit(ctx.report(Verdict::Ok), "weights", &WeightingFile::from_weighting(&w), out)
}

fn load_pair(input: &crate::NetWeights) -> anyhow::Result<(PlanarNetwork, Weighting)> {
    let net = read_network(&input.net)?;
    let w = read_weighting(&input.weights, &net)?;
    Ok((net, w))
}

fn violations(check: &ConeCheck) -> Vec<String> {
    check.violations.iter().map(|v| format!("{:?} rhombus at (k={}, i={})", v.family, v.k, v.i)).collect()
}

fn weight_strings(ws: &[TropicalWeight]) -> Vec<String> {
    ws.iter().map(ToString::to_string).collect()
}

fn eval(ctx: &Ctx, cmd: &EvalCmd) -> anyhow::Result<Output> {
    match cmd {
        EvalCmd::L { input, brute } => {
            let (net, w) = load_pair(input)?;
            let (l, lambda) = eigenvalue_vector(&net, &w)?;
            let mut report = ctx.report(Verdict::Ok);
            report.witness("l", weight_strings(&l));
            let lambda: Vec<String> =
                lambda.iter().map(|x| x.as_ref().map_or_else(|| "undefined".to_string(), format_rational)).collect();
            report.witness("lambda", lambda);
            let witnesses: Vec<Option<MultipathFile>> = (1..l.len())
                .map(|k| max_kpath_weight(&net, &w, k).1.as_ref().map(MultipathFile::from_multipath))
                .collect();
            report.witness("maximizers", witnesses);
            if *brute {
                for (k, lk) in l.iter().enumerate().skip(1) {
                    let best = enumerate_kpaths(&net, k, ctx.cap)?
                        .iter()
                        .map(|m| m.weight(&w))
                        .fold(TropicalWeight::NegInf, TropicalWeight::max_plus);
                    if &best != lk {
                        bail!("exhaustive search gives l_{k} = {best}, flow gives {lk}");
                    }
                }
                report.witness("brute_force", "agrees");
            }
            Ok(Output { report, document: None })
        }
        EvalCmd::Tableau { input, out } => {
            let (net, w) = load_pair(input)?;
            let t = l_map(&net, &w)?;
            let check = hive::in_c2(&t);
            let mut report = ctx.report(Verdict::member(check.member));
            report.violations = violations(&check);
            emit(report, "tableau", &TableauFile::from_tableau(&t), out)
        }
        EvalCmd::Hive { input, out } => {
            let (net, w) = load_pair(input)?;
            let t = m_map(&net, &w)?;
            let check = hive::in_c3(&t);
            let mut report = ctx.report(Verdict::member(check.member));
            report.violations = violations(&check);
            if let Ok(triple) = hive::boundary_outer(&t) {
                report.witness("boundary", TripleFile::from_triple(&triple));
            }
            emit(report, "tableau", &TableauFile::from_tableau(&t), out)
        }
    }
}

/// A Horn triple on disk: three comma-separated lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleFile {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
}

impl TripleFile {
    fn from_triple(t: &HornTriple) -> Self {
        let join = |v: &[hivenet::Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(",");
        TripleFile { lambda: join(&t.lambda), mu: join(&t.mu), nu: join(&t.nu) }
    }

    fn to_triple(&self) -> anyhow::Result<HornTriple> {
        Ok(HornTriple::new(parse_list(&self.lambda)?, parse_list(&self.mu)?, parse_list(&self.nu)?))
    }
}

fn cone_check(ctx: &Ctx, arg: &TableauArg, c3: bool) -> anyhow::Result<Output> {
    let t = read_tableau(&arg.tableau)?;
    let slack = parse_rational(&arg.slack)?;
    let check = if c3 { hive::in_c3_with_slack(&t, &slack) } else { hive::in_c2_with_slack(&t, &slack) };
    let mut report = ctx.report(Verdict::member(check.member));
    report.violations = violations(&check);
    Ok(Output { report, document: None })
}

fn check(ctx: &Ctx, cmd: &CheckCmd) -> anyhow::Result<Output> {
    match cmd {
        CheckCmd::C2(arg) => cone_check(ctx, arg, false),
        CheckCmd::C3(arg) => cone_check(ctx, arg, true),
        CheckCmd::Gz { tableau } => {
            let t = read_tableau(tableau)?;
            let gz = hive::boundary_horizontal(&t)?;
            let member = hive::in_gz(&gz);
            let mut report = ctx.report(Verdict::member(member));
            report.witness("gz", TableauFile::from_tableau(&gz.to_tableau()));
            Ok(Output { report, document: None })
        }
        CheckCmd::Horn(args) => horn(ctx, args),
    }
}

fn horn(ctx: &Ctx, args: &HornArgs) -> anyhow::Result<Output> {
    let triple = match &args.triple {
        Some(path) => read_json::<TripleFile>(path)?.to_triple()?,
        None => {
            let get = |s: &Option<String>, name: &str| -> anyhow::Result<Vec<hivenet::Rational>> {
                parse_list(s.as_deref().ok_or_else(|| anyhow!("--{name} is required"))?)
                    .with_context(|| format!("--{name}"))
            };
            HornTriple::new(get(&args.lambda, "lambda")?, get(&args.mu, "mu")?, get(&args.nu, "nu")?)
        }
    };
    let opts = HornOptions { cap: args.max_n, slack: parse_rational(&args.slack)? };
    match hive::horn_feasible(&triple, &opts) {
        Ok(v) => {
            let mut report = ctx.report(Verdict::feasible(v.feasible));
            if let Some(w) = v.witness {
                report.witness("hive", TableauFile::from_tableau(&w));
            }
            Ok(Output { report, document: None })
        }
        // Unsorted triples and triples violating the trace identity lie
        // outside the cone; they are answers, not input errors.
        Err(e @ (hivenet::Error::TraceMismatch | hivenet::Error::NotSorted(_))) => {
            let mut report = ctx.report(Verdict::Infeasible);
            report.violations.push(e.to_string());
            Ok(Output { report, document: None })
        }
        Err(e) => Err(e.into()),
    }
}

fn invert(ctx: &Ctx, cmd: &InvertCmd) -> anyhow::Result<Output> {
    let (tableau, net_out, out, horn) = match cmd {
        InvertCmd::Gz { tableau, net_out, out } => (tableau, net_out, out, false),
        InvertCmd::Horn { tableau, net_out, out } => (tableau, net_out, out, true),
    };
    let t = read_tableau(tableau)?;
    let check = if horn { hive::in_c3(&t) } else { hive::in_c2(&t) };
    if !check.member {
        let mut report = ctx.report(Verdict::NonMember);
        report.violations = violations(&check);
        return Ok(Output { report, document: None });
    }
    let (net, w) = if horn {
        (network::horn_network(t.n())?, invert_horn(&t)?)
    } else {
        (network::gamma0(t.n().max(1))?, invert_gz(&t)?)
    };
    let back = if horn { m_map(&net, &w)? } else { l_map(&net, &w)? };
    if back != t {
        bail!("inverted weighting does not reproduce the tableau");
    }
    if let Some(path) = net_out {
        write_json(path, &NetworkFile::from_network(&net))?;
    }
    let mut report = ctx.report(Verdict::Member);
    report.witness("round_trip", true);
    emit(report, "weights", &WeightingFile::from_weighting(&w), out)
}

fn recombine_cmd(ctx: &Ctx, cmd: &RecombineCmd) -> anyhow::Result<Output> {
    let (args, balance) = match cmd {
        RecombineCmd::Shift(a) => (a, false),
        RecombineCmd::Balance(a) => (a, true),
    };
    let RecombineArgs { net, k, f, g, weights } = args;
    let net = read_network(net)?;
    let f = read_json::<MultipathFile>(f)?.to_multipath(&net)?;
    let g = read_json::<MultipathFile>(g)?.to_multipath(&net)?;
    let (even, odd) = if balance {
        recombine::recombine_balance(&net, *k, &f, &g)?
    } else {
        recombine::recombine_shift(&net, *k, &f, &g)?
    };
    let mut report = ctx.report(Verdict::Ok);
    report.witness("even", MultipathFile::from_multipath(&even));
    report.witness("odd", MultipathFile::from_multipath(&odd));
    if let Some(path) = weights {
        let w = read_weighting(path, &net)?;
        let pair = |a: &Multipath, b: &Multipath| [a.weight(&w).to_string(), b.weight(&w).to_string()];
        report.witness("input_weights", pair(&f, &g));
        report.witness("output_weights", pair(&even, &odd));
        let sum = |a: &Multipath, b: &Multipath| sum_weights(&a.weight(&w), &b.weight(&w));
        if sum(&f, &g) != sum(&even, &odd) {
            bail!("recombination changed the total weight");
        }
        report.witness("total", sum(&f, &g).to_string());
    }
    Ok(Output { report, document: None })
}

fn sum_weights(a: &TropicalWeight, b: &TropicalWeight) -> TropicalWeight {
    match (a, b) {
        (TropicalWeight::Finite(x), TropicalWeight::Finite(y)) => TropicalWeight::Finite(x + y),
        _ => TropicalWeight::NegInf,
    }
}

fn decompose(ctx: &Ctx, args: &DecomposeArgs) -> anyhow::Result<Output> {
    let gd = read_network(&args.net)?;
    let alpha = read_json::<GdPathFile>(&args.alpha)?.to_gd_path(&gd)?;
    let beta = read_json::<GdPathFile>(&args.beta)?.to_gd_path(&gd)?;
    let theta = recombine::union(&gd, &alpha, &beta)?;
    let dec = canonical_decomposition(&theta);
    let mut report = ctx.report(Verdict::Ok);
    report.witness("type", theta.kind());
    let chains: Vec<_> = dec
        .chains
        .iter()
        .map(|c| {
            let edges: Vec<_> = c.edges.iter().map(|&j| theta.edges()[j].chain.clone()).collect();
            json!({ "class": format!("{:?}", c.class()), "edges": edges })
        })
        .collect();
    report.witness("chains", chains);
    let c = dec.counts();
    report.witness(
        "counts",
        json!({ "Q00": c.q00, "QL0": c.l0, "Q0R": c.r0, "QLR": c.lr, "QLL": c.ll, "QRR": c.rr, "closed": c.closed }),
    );
    let q = dec.len();
    report.witness("alternating_colorings", if q < 128 { (1u128 << q).to_string() } else { format!("2^{q}") });
    if args.colorings {
        if q >= 64 || (1u64 << q) as usize > ctx.cap {
            return Err(hivenet::Error::ExplosionGuard(ctx.cap).into());
        }
        let all: Vec<String> = dec
            .alternating_colorings(&theta)
            .map(|col| col.colors.iter().map(|c| if *c == recombine::Color::Red { 'R' } else { 'G' }).collect())
            .collect();
        report.witness("colorings", all);
    }
    let w = args.weights.as_deref().map(|p| read_weighting(p, &gd)).transpose()?;
    if let Some(w) = &w {
        report.witness("union_weight", theta.weight(w).to_string());
    }
    if let Some((k, i)) = args.split {
        let variant = match args.variant {
            VariantArg::First => Variant::First,
            VariantArg::Second => Variant::Second,
            VariantArg::Third => Variant::Third,
        };
        let (red, green) = recombine::split(&theta, k, i, variant)?;
        report.witness("red", GdPathFile::from_gd_path(&red));
        report.witness("green", GdPathFile::from_gd_path(&green));
        if let Some(w) = &w {
            let total = sum_weights(&red.weight(w), &green.weight(w));
            if total != theta.weight(w) {
                bail!("split changed the total weight");
            }
        }
    }
    Ok(Output { report, document: None })
}

fn spectra(ctx: &Ctx, cmd: &SpectraCmd) -> anyhow::Result<Output> {
    match cmd {
        SpectraCmd::Sample { n, scale, check } => {
            if *n == 0 || *n > 6 {
                bail!("n must lie in 1..=6");
            }
            if !(scale.is_finite() && *scale > 0.0) {
                bail!("scale must be positive");
            }
            let s: HornSample = sample_horn_instance(*n, ctx.seed, *scale)?;
            let mut report = ctx.report(Verdict::Ok);
            report.witness("a", MatrixFile::from_matrix(&s.a));
            report.witness("b", MatrixFile::from_matrix(&s.b));
            report.witness("c", MatrixFile::from_matrix(&s.c));
            report.witness("spectra", json!({ "lambda": s.lambda, "mu": s.mu, "nu": s.nu }));
            let triple = s.rationalized(SPECTRUM_DENOMINATOR);
            report.witness("triple", TripleFile::from_triple(&triple));
            if *check {
                let opts = HornOptions { cap: 6, slack: hivenet::weight::ratio(1, 10_000) };
                let v = hive::horn_feasible(&triple, &opts)?;
                report.verdict = Verdict::feasible(v.feasible);
            }
            Ok(Output { report, document: None })
        }
        SpectraCmd::Tableau { matrix, slack } => {
            let m = read_json::<MatrixFile>(matrix)?.to_matrix()?;
            let t: Tableau<f64> = principal_tableau(&m)?;
            let check = hive::in_c2_with_slack(&t, slack);
            let mut report = ctx.report(Verdict::member(check.member));
            report.violations = violations(&check);
            report.witness("tableau", FloatTableauFile::from_tableau(&t));
            Ok(Output { report, document: None })
        }
    }
}

fn render_cmd(ctx: &Ctx, args: &RenderArgs) -> anyhow::Result<Output> {
    let net = read_network(&args.net)?;
    let w = args.weights.as_deref().map(|p| read_weighting(p, &net)).transpose()?;
    let mut highlight = BTreeSet::new();
    if let Some(path) = &args.highlight {
        let mp = read_json::<MultipathFile>(path)?;
        for id in mp.paths.iter().flatten() {
            if !net.has_edge(*id) {
                bail!("highlighted edge {id} is not in the network");
            }
            highlight.insert(*id);
        }
    }
    let opts = RenderOptions { weights: w.as_ref(), highlight, edge_ids: args.edge_ids };
    let text = render(&net, &opts, args.format);
    let mut report = ctx.report(Verdict::Ok);
    match &args.out.out {
        Some(path) => {
            write_text(path, &text)?;
            report.witness("written", path.display().to_string());
            Ok(Output { report, document: None })
        }
        None => {
            report.witness("document", &text);
            Ok(Output { report, document: Some(text) })
        }
    }
}

fn write_text(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
