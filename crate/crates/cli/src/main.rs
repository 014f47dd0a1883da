use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use drinfeld::algebra::{bracket, big_d, FieldParams, Fq, Frac, Poly, PrimePower};
use drinfeld::carlitz::{carlitz_action, carlitz_exp, u_a_series, zeta_ratio, LatticeSpec};
use drinfeld::check::{run_suite, CheckConfig, SUITES};
use drinfeld::forms::{eisenstein, false_eisenstein, g_form, petrov_form, FormExpansion};
use drinfeld::goss::{goss_closed, goss_genseries, goss_recursion, GossTable};
use drinfeld::operators::{hecke_t, hecke_u_frac, hecke_v_frac, serre_d, theta_r, OperatorReport};
use drinfeld::series::USeries;
use drinfeld::vadic::{
    a_pow_s, boost_experiment, false_e_decomposition_check, false_e_mod_prime, goss_family, petrov_goss_experiment,
    prec_for, WeightS,
};
use drinfeld::Error;

const EXIT_DOMAIN: u8 = 1;
const EXIT_FAILED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "drinfeld", version, about = "Drinfeld modular forms over F_q[θ]: exact u-expansions and operators")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// Field size q = p^e.
    #[arg(long, global = true, default_value_t = 3)]
    q: u32,
    /// Modulus of F_q over F_p as ascending coefficients, e.g. 1,0,1 (extension fields only).
    #[arg(long, global = true, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// The prime ℘: a coefficient list such as [1,1] or a JSON polynomial; defaults to θ.
    #[arg(long, global = true)]
    prime: Option<String>,
    /// Truncation order N of u-expansions.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    trunc: u64,
    /// ℘-adic precision M.
    #[arg(long = "padic-prec", global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    padic_prec: u32,
    #[arg(long, global = true, value_enum, env = "DRINFELD_FORMAT", default_value = "json")]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Goss polynomials G_1..G_k of a lattice.
    Goss {
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// carlitz, division:ℓ, basis:[…] or finite:[α_0,α_1,…].
        #[arg(long, default_value = "carlitz")]
        lattice: String,
        #[arg(long, value_enum, default_value = "recursion")]
        method: GossMethod,
    },
    /// The Carlitz module: exp, C_a, u_a and ζ_C(k)/π̃^k.
    Carlitz {
        #[arg(long, value_enum)]
        what: CarlitzWhat,
        /// The polynomial a for action and u-a.
        #[arg(long)]
        a: Option<String>,
        /// Weight k for zeta.
        #[arg(long)]
        k: Option<u64>,
        /// Number of τ-terms for exp.
        #[arg(long, default_value_t = 4)]
        terms: u32,
    },
    /// Eisenstein series E_k.
    Eis {
        #[arg(long)]
        k: u64,
    },
    /// g_d = -L_d E_{q^d-1}.
    Gd {
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Reduce coefficients modulo bracket:i, dfact:i or a polynomial.
        #[arg(long = "reduce-mod")]
        reduce_mod: Option<String>,
    },
    /// The false Eisenstein series E = Σ a·u_a.
    FalseE,
    /// Petrov's form f_{k,n} = Σ a^{k-n} G_n(u_a).
    Petrov {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Θ^r on an input series or form.
    Theta {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        src: Source,
    },
    /// Serre operator 𝒟^r on a form of known weight.
    Serre {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        src: Source,
    },
    /// Hecke operators U_ℓ, V_ℓ and T_ℓ.
    Hecke {
        #[arg(long, value_enum)]
        op: HeckeOp,
        #[arg(long)]
        ell: String,
        #[command(flatten)]
        src: Source,
    },
    /// ℘-adic weights, families and convergence.
    Vadic {
        #[command(subcommand)]
        cmd: VadicCmd,
    },
    /// Run property suites.
    Check {
        /// A suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VadicCmd {
    /// a^s modulo ℘^M.
    PowS {
        #[arg(long)]
        a: String,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// The family f̂_{s,n} modulo (u^N, ℘^M).
    Family {
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// E = Σ_{j<J} ℘^j V_℘^j(f̂_{1,1}).
    EDecomp {
        #[arg(long, default_value_t = 3)]
        j: u32,
    },
    /// ℘-adic convergence depths.
    Converge {
        #[arg(long, value_enum, default_value = "petrov")]
        experiment: Experiment,
        #[arg(long = "i-max", default_value_t = 3)]
        i_max: u32,
        /// Expected depths, comma separated (petrov only).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        schedule: Option<Vec<i64>>,
        /// The form f for the boost experiment.
        #[arg(long, default_value = "eis:2")]
        form: String,
    },
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// An integer weight, embedded in S_℘.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["x", "y"])]
    k: Option<i64>,
    /// x mod q^d - 1.
    #[arg(long)]
    x: Option<u64>,
    /// y mod p^j.
    #[arg(long)]
    y: Option<u128>,
}

#[derive(Args, Debug)]
struct Source {
    /// A u-series as JSON; without "trunc" it is an exact polynomial.
    #[arg(long, conflicts_with = "form")]
    input: Option<String>,
    /// eis:k, g:d, false-e or petrov:k,n.
    #[arg(long)]
    form: Option<String>,
    /// Weight of --input.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<i64>,
    /// Type of --input.
    #[arg(long = "type")]
    typ: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GossMethod {
    Recursion,
    Genseries,
    Closed,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CarlitzWhat {
    Exp,
    Action,
    #[value(name = "u-a")]
    UA,
    Zeta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HeckeOp {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "V", alias = "v")]
    V,
    #[value(name = "T", alias = "t")]
    T,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Experiment {
    Petrov,
    Boost,
}

enum Fail {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Fail>;

/// Command output: JSON, its text rendering, and whether a check failed.
struct Out {
    json: Value,
    text: String,
    failed: bool,
}

impl Out {
    fn ok(json: Value, text: String) -> Self {
        Out { json, text, failed: false }
    }
}

struct Ctx {
    field: Fq,
    trunc: usize,
    prec: u32,
    prime: Poly,
    seed: u64,
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn parse_json(s: &str) -> Res<Value> {
    serde_json::from_str(s).map_err(|e| usage(format!("invalid JSON {s:?}: {e}")))
}

/// Accepts `{"coeffs":[…]}`, a bare list `[…]`, or `theta`.
fn parse_poly(field: &Fq, s: &str) -> Res<Poly> {
    let s = s.trim();
    if s == "theta" || s == "θ" {
        return Ok(Poly::theta(field));
    }
    let v = parse_json(s)?;
    let v = if v.is_array() { json!({ "coeffs": v }) } else { v };
    Poly::from_json(field, &v).map_err(|e| usage(e.to_string()))
}

fn parse_fracs(field: &Fq, s: &str) -> Res<Vec<Frac>> {
    let v = parse_json(s)?;
    let arr = v.as_array().ok_or_else(|| usage(format!("expected a JSON list, got {s}")))?;
    arr.iter().map(|x| Frac::from_json(field, x).map_err(|e| usage(e.to_string()))).collect()
}

fn parse_lattice(field: &Fq, s: &str) -> Res<LatticeSpec> {
    if s == "carlitz" {
        return Ok(LatticeSpec::carlitz(field));
    }
    let (kind, arg) = s.split_once(':').ok_or_else(|| usage(format!("unknown lattice {s:?}")))?;
    match kind {
        "division" => Ok(LatticeSpec::division(&parse_poly(field, arg)?)?),
        "basis" => Ok(LatticeSpec::from_basis(field, &parse_fracs(field, arg)?)?),
        "finite" => Ok(LatticeSpec::finite(field, parse_fracs(field, arg)?)?),
        _ => Err(usage(format!("unknown lattice kind {kind:?}"))),
    }
}

fn parse_index(s: &str, what: &str) -> Res<u32> {
    s.parse().map_err(|_| usage(format!("bad {what} index {s:?}")))
}

fn parse_modulus(field: &Fq, s: &str) -> Res<Poly> {
    match s.split_once(':') {
        Some(("bracket", i)) => Ok(bracket(field, parse_index(i, "bracket")?)?),
        Some(("dfact", i)) => Ok(big_d(field, parse_index(i, "dfact")?)),
        _ => parse_poly(field, s),
    }
}

fn parse_form(ctx: &Ctx, s: &str) -> Res<FormExpansion> {
    let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| usage(format!("bad number in form {s:?}")));
    let f = match kind {
        "eis" => eisenstein(&ctx.field, num(arg)?, ctx.trunc)?,
        "g" => g_form(&ctx.field, num(arg)? as u32, ctx.trunc)?,
        "false-e" => false_eisenstein(&ctx.field, ctx.trunc)?,
        "petrov" => {
            let (k, n) = arg.split_once(',').ok_or_else(|| usage("petrov form needs petrov:k,n"))?;
            petrov_form(&ctx.field, num(k)?, num(n)?, ctx.trunc)?
        }
        _ => return Err(usage(format!("unknown form {s:?}"))),
    };
    Ok(f)
}

fn load_source(ctx: &Ctx, src: &Source) -> Res<FormExpansion> {
    match (&src.input, &src.form) {
        (Some(input), None) => {
            let v = parse_json(input)?;
            let zero = Frac::zero(&ctx.field);
            let series = USeries::from_json_with(&v, &zero, ctx.trunc, |c| Frac::from_json(&ctx.field, c))?;
            let q1 = ctx.field.q() as u64 - 1;
            Ok(FormExpansion {
                series,
                weight: src.weight.unwrap_or(-1),
                typ: src.typ.unwrap_or(0) % q1,
                label: "input".into(),
                modular: false,
            })
        }
        (None, Some(form)) => {
            if src.weight.is_some() || src.typ.is_some() {
                return Err(usage("--weight and --type apply to --input only"));
            }
            parse_form(ctx, form)
        }
        _ => Err(usage("give exactly one of --input or --form")),
    }
}

fn form_out(f: &FormExpansion) -> Out {
    let text = format!("{} (weight {}, type {}):\n{}", f.label, f.weight, f.typ, f.series);
    Out::ok(f.to_json(), text)
}

fn report_out(r: &OperatorReport) -> Out {
    Out::ok(r.to_json(), format!("{} on {}: {}", r.operator, r.input_label, r.output))
}

fn known(x: i64) -> Option<i64> {
    (x >= 0).then_some(x)
}

fn cmd_goss(ctx: &Ctx, k: usize, lattice: &str, method: GossMethod) -> Res<Out> {
    let lat = parse_lattice(&ctx.field, lattice)?;
    let table = match method {
        GossMethod::Recursion => goss_recursion(&lat, k),
        GossMethod::Genseries => goss_genseries(&lat, k),
        GossMethod::Closed | GossMethod::All => {
            let rec = goss_recursion(&lat, k);
            if matches!(method, GossMethod::All) && goss_genseries(&lat, k).rows() != rec.rows() {
                return Err(Error::Falsified("recursion and generating series disagree".into()).into());
            }
            for m in 1..=k {
                if goss_closed(&lat, m - 1).coeffs() != rec.goss(m).coeffs() {
                    return Err(Error::Falsified(format!("closed form disagrees at G_{m}")).into());
                }
            }
            rec
        }
    };
    let text = (1..=k).map(|m| format!("G_{m} = {}", table.goss(m))).collect::<Vec<_>>().join("\n");
    Ok(Out::ok(table.to_json(), text))
}

fn cmd_carlitz(ctx: &Ctx, what: CarlitzWhat, a: Option<&str>, k: Option<u64>, terms: u32) -> Res<Out> {
    let need_a = || a.ok_or_else(|| usage("--a is required")).and_then(|s| parse_poly(&ctx.field, s));
    Ok(match what {
        CarlitzWhat::Exp => {
            let e = carlitz_exp(&ctx.field, terms);
            Out::ok(e.to_json(), e.to_string())
        }
        CarlitzWhat::Action => {
            let c = carlitz_action(&need_a()?);
            Out::ok(c.to_json(), c.to_string())
        }
        CarlitzWhat::UA => {
            let s = u_a_series(&need_a()?, ctx.trunc)?;
            Out::ok(s.to_json_with("u", Poly::to_json), s.to_string())
        }
        CarlitzWhat::Zeta => {
            let k = k.ok_or_else(|| usage("--k is required"))?;
            let z = zeta_ratio(&ctx.field, k)?;
            Out::ok(json!({ "k": k, "zeta_ratio": z.to_json() }), z.to_string())
        }
    })
}

fn cmd_gd(ctx: &Ctx, d: u32, reduce: Option<&str>) -> Res<Out> {
    let g = g_form(&ctx.field, d, ctx.trunc)?;
    let Some(m) = reduce else { return Ok(form_out(&g)) };
    let modulus = parse_modulus(&ctx.field, m)?;
    let integral = g.integral_series().ok_or_else(|| Error::Falsified(format!("g_{d} is not integral")))?;
    let reduced = integral.try_map(&Poly::zero(&ctx.field), |c| c.rem(&modulus))?;
    let json = json!({
        "label": g.label,
        "modulus": modulus.to_json(),
        "series": reduced.to_json_with("u", Poly::to_json),
    });
    Ok(Out::ok(json, format!("{} mod ({modulus}):\n{reduced}", g.label)))
}

fn cmd_theta(ctx: &Ctx, r: usize, src: &Source) -> Res<Out> {
    let f = load_source(ctx, src)?;
    let mut table = GossTable::new(&LatticeSpec::carlitz(&ctx.field));
    let out = theta_r(&mut table, &f.series, r)?;
    let q1 = ctx.field.q() as u64 - 1;
    let w = known(f.weight);
    Ok(report_out(&OperatorReport {
        input_label: f.label.clone(),
        input_weight: w,
        input_type: w.map(|_| f.typ),
        operator: format!("theta^{r}"),
        params: json!({ "r": r }),
        output: out,
        output_weight: w.map(|k| k + 2 * r as i64),
        output_type: w.map(|_| (f.typ + r as u64) % q1),
    }))
}

fn cmd_serre(ctx: &Ctx, r: usize, src: &Source) -> Res<Out> {
    let f = load_source(ctx, src)?;
    if f.weight < 0 {
        return Err(usage("serre needs a form or --weight"));
    }
    let mut table = GossTable::new(&LatticeSpec::carlitz(&ctx.field));
    let d = serre_d(&mut table, &f, r)?;
    Ok(report_out(&OperatorReport {
        input_label: f.label.clone(),
        input_weight: Some(f.weight),
        input_type: Some(f.typ),
        operator: format!("serre^{r}"),
        params: json!({ "r": r }),
        output: d.series,
        output_weight: Some(d.weight),
        output_type: Some(d.typ),
    }))
}

fn cmd_hecke(ctx: &Ctx, op: HeckeOp, ell: &str, src: &Source) -> Res<Out> {
    let ell = parse_poly(&ctx.field, ell)?;
    let f = load_source(ctx, src)?;
    let w = known(f.weight);
    let (name, out) = match op {
        HeckeOp::U => ("U", hecke_u_frac(&f.series, &ell)?),
        HeckeOp::V => ("V", hecke_v_frac(&f.series, &ell)?),
        HeckeOp::T => {
            let k = w.ok_or_else(|| usage("T needs a form or --weight"))?;
            ("T", hecke_t(&f.series, &ell, k as u64)?)
        }
    };
    Ok(report_out(&OperatorReport {
        input_label: f.label.clone(),
        input_weight: w,
        input_type: w.map(|_| f.typ),
        operator: name.into(),
        params: json!({ "ell": ell.to_json() }),
        output: out,
        output_weight: w,
        output_type: w.map(|_| f.typ),
    }))
}

fn weight(ctx: &Ctx, w: &WeightArgs, prec: u32) -> Res<WeightS> {
    match (w.k, w.x, w.y) {
        (Some(k), None, None) => Ok(WeightS::embed(&ctx.prime, k, prec)?),
        (None, Some(x), Some(y)) => Ok(WeightS::new(&ctx.prime, x, y, prec)?),
        _ => Err(usage("give --k, or both --x and --y")),
    }
}

fn cmd_vadic(ctx: &Ctx, cmd: &VadicCmd) -> Res<Out> {
    let p = ctx.field.p();
    match cmd {
        VadicCmd::PowS { a, w } => {
            let a = parse_poly(&ctx.field, a)?;
            let ring = PrimePower::new(&ctx.prime, ctx.prec)?;
            let s = weight(ctx, w, prec_for(p, ctx.prec))?;
            let v = a_pow_s(&a, &s, &ring)?;
            let json = json!({
                "a": a.to_json(),
                "s": s.to_json(),
                "prime": ctx.prime.to_json(),
                "prec": ctx.prec,
                "value": v.rep().to_json(),
            });
            Ok(Out::ok(json, format!("({a})^{s} = {v} mod ({})^{}", ctx.prime, ctx.prec)))
        }
        VadicCmd::Family { n, w } => {
            if *n == 0 {
                return Err(usage("families need --n >= 1"));
            }
            let table = GossTable::build(&LatticeSpec::carlitz(&ctx.field), *n as usize);
            let den = table.row(*n as usize - 1).iter().filter_map(|b| b.ord(&ctx.prime).finite()).min().unwrap_or(0);
            let s = weight(ctx, w, prec_for(p, ctx.prec + (-den).max(0) as u32))?;
            let fam = goss_family(&ctx.prime, &s, *n, ctx.trunc, ctx.prec)?;
            let text = format!(
                "fhat(s={s}, n={n}) mod ({})^{}, hypotheses {}:\n{}",
                ctx.prime,
                ctx.prec,
                fam.hypotheses,
                fam.series.series()
            );
            Ok(Out::ok(fam.to_json(), text))
        }
        VadicCmd::EDecomp { j } => {
            let ok = false_e_decomposition_check(&ctx.prime, ctx.trunc, *j)?;
            let ord = false_e_mod_prime(&ctx.prime, ctx.trunc)?;
            let json = json!({
                "prime": ctx.prime.to_json(),
                "trunc": ctx.trunc,
                "j": j,
                "identity_holds": ok,
                "ord_e_minus_fhat": ord.to_string(),
            });
            let text = format!("E = Σ_(j<{j}) ℘^j V^j(fhat_11) mod u^{}: {ok}; ord(E - fhat_11) = {ord}", ctx.trunc);
            Ok(Out { json, text, failed: !ok })
        }
        VadicCmd::Converge { experiment, i_max, schedule, form } => {
            let r = match experiment {
                Experiment::Petrov => {
                    petrov_goss_experiment(&ctx.prime, *i_max, ctx.trunc, ctx.prec, schedule.as_deref())?
                }
                Experiment::Boost => {
                    if schedule.is_some() {
                        return Err(usage("the boost schedule is fixed"));
                    }
                    boost_experiment(&parse_form(ctx, form)?, &ctx.prime, *i_max, ctx.prec)?
                }
            };
            let text = r
                .rows
                .iter()
                .map(|row| format!("i={} weight={} modular={} depth={:?}", row.i, row.weight, row.modular, row.depth))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Out { json: r.to_json(), text: format!("{}\n{text}", r.label), failed: !r.ok() })
        }
    }
}

fn cmd_check(ctx: &Ctx, suite: &str, k: usize) -> Res<Out> {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(usage(format!("unknown suite {suite:?}; expected one of {SUITES:?} or all")));
    }
    let mut cfg = CheckConfig::new(&ctx.field);
    cfg.k = k;
    cfg.trunc = ctx.trunc;
    cfg.seed = ctx.seed;
    cfg.prime = ctx.prime.clone();
    cfg.prec = ctx.prec;
    let reports = run_suite(suite, &cfg)?;
    let failed = reports.iter().any(|r| !r.passed());
    let mut text = Vec::new();
    for r in &reports {
        for l in &r.lines {
            text.push(format!("[{}] {}: {} ({})", if l.passed { "pass" } else { "FAIL" }, r.suite, l.name, l.detail));
        }
    }
    let json = json!({ "passed": !failed, "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() });
    Ok(Out { json, text: text.join("\n"), failed })
}

fn field_of(g: &Global) -> Res<Fq> {
    let params = match &g.modulus {
        None => FieldParams::from_q(g.q)?,
        Some(m) => {
            let base = FieldParams::from_q(g.q)?;
            FieldParams::new(base.p, base.e, Some(m.clone()))?
        }
    };
    Ok(Fq::new(params))
}

fn run(cli: &Cli) -> Res<Out> {
    let field = field_of(&cli.global)?;
    let prime = match &cli.global.prime {
        Some(s) => parse_poly(&field, s)?,
        None => Poly::theta(&field),
    };
    if !prime.is_monic() || !prime.is_irreducible() {
        return Err(Error::NotIrreducible(prime.to_string()).into());
    }
    let ctx = Ctx {
        field,
        trunc: cli.global.trunc as usize,
        prec: cli.global.padic_prec,
        prime,
        seed: cli.global.seed,
    };
    match &cli.cmd {
        Cmd::Goss { k, lattice, method } => cmd_goss(&ctx, *k, lattice, *method),
        Cmd::Carlitz { what, a, k, terms } => cmd_carlitz(&ctx, *what, a.as_deref(), *k, *terms),
        Cmd::Eis { k } => Ok(form_out(&eisenstein(&ctx.field, *k, ctx.trunc)?)),
        Cmd::Gd { d, reduce_mod } => cmd_gd(&ctx, *d, reduce_mod.as_deref()),
        Cmd::FalseE => Ok(form_out(&false_eisenstein(&ctx.field, ctx.trunc)?)),
        Cmd::Petrov { k, n } => Ok(form_out(&petrov_form(&ctx.field, *k, *n, ctx.trunc)?)),
        Cmd::Theta { r, src } => cmd_theta(&ctx, *r, src),
        Cmd::Serre { r, src } => cmd_serre(&ctx, *r, src),
        Cmd::Hecke { op, ell, src } => cmd_hecke(&ctx, *op, ell, src),
        Cmd::Vadic { cmd } => cmd_vadic(&ctx, cmd),
        Cmd::Check { suite, k } => cmd_check(&ctx, suite, *k),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.global.format {
                Format::Json => println!("{}", out.json),
                Format::Text => println!("{}", out.text),
            }
            if out.failed {
                ExitCode::from(EXIT_FAILED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Fail::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_falsification() { EXIT_FAILED } else { EXIT_DOMAIN })
        }
    }
}
