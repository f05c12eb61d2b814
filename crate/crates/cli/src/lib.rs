//! Command-line front end: argument definitions, dispatch and report rendering.

pub mod parse;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use iterfield::classify::{
    classify_b, field_of_definition, poly_classify_a, poly_classify_an, ratfunc_in_an_direct_with_limit,
    report_with_limit, BVerdict, PeriodicData, PolyVerdict, ShapeMode, ShapeWitness,
};
use iterfield::families::{counterexample_map, lattes_phi, lattes_translated, rotation_map, Curve, RotationSpec};
use iterfield::numfield::{NumberField, Subfield};
use iterfield::pgl2::{
    check_prop42, eigen_data, power_class, proj_rational, ratio_power_degree, root_decompose, Mat2, Prop42Verdict,
    RootOutcome,
};
use iterfield::polyrat::{Mobius, ProjPoint, RatFunc};
use iterfield::Error as CoreError;

use parse::{parse_angle, parse_elem, parse_field, parse_matrix, parse_ratfunc, ParseError};

/// Largest angle denominator accepted by `family rotation`; the map lives in
/// `Q(ζ_{4q})`.
const MAX_ROTATION_DENOMINATOR: u64 = 60;

#[derive(Parser, Debug)]
#[command(name = "iterfield", version, about = "Fields of definition of iterated rational maps")]
pub struct Cli {
    /// Base field: `Q` or a monic irreducible polynomial in `a`, e.g. "a^2-3".
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Number of iterates examined by reports.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_iter: u32,
    /// Largest iterate degree that will be expanded.
    #[arg(long, global = true, env = "ITERFIELD_MAX_DEGREE", default_value_t = 10_000)]
    pub max_degree: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field of iterates, membership in A and B, rational periodic points.
    Analyze {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
    },
    /// A single membership test.
    Classify {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Iterate index, for poly-an and direct.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Prints the n-th iterate.
    Iterate {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long)]
        n: usize,
    },
    /// Prints l^-1 o f o l for l = (p x + q)/(r x + s) given as [[p, q], [r, s]].
    Conjugate {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        mobius: String,
    },
    /// Builds a map from one of the built-in families and analyzes it.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Powers, eigenvalues and root decomposition of a 2x2 matrix.
    Pgl2 {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        n: u64,
        /// Also write A = M D M^-1 with K'-rational M.
        #[arg(long)]
        decompose: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// tan(θ/2) -> tan((kθ + φ)/2), with φ = π/S_n(k) or φ = pπ/q.
    Rotation {
        #[arg(long)]
        k: u64,
        #[arg(long, conflicts_with = "phi", required_unless_present = "phi")]
        n: Option<u32>,
        /// Angle as `p/q`, meaning pπ/q.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
    },
    /// Lattès map of y^2 = x^3 + A x + B for multiplication by d, optionally
    /// followed by translation by the 2-torsion point with the given x.
    Lattes {
        #[arg(long = "a", allow_hyphen_values = true)]
        coeff_a: String,
        #[arg(long = "b", allow_hyphen_values = true)]
        coeff_b: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        torsion_x: Option<String>,
    },
    /// The quadratic map over Q(√3) whose second iterate is rational.
    Counterexample,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    PolyAn,
    PolyA,
    B,
    Direct,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Core(CoreError::ResourceLimit(_)) => 4,
            CliError::Core(e) if e.is_precondition() => 3,
            CliError::Core(_) => 2,
        }
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn precondition(msg: impl Into<String>) -> CliError {
    CliError::Core(CoreError::Precondition(msg.into()))
}

/// Runs a parsed command and returns what should be written to stdout.
pub fn run(cli: &Cli) -> Res<String> {
    let field = || parse_field(&cli.field);
    let out = match &cli.command {
        Command::Analyze { function } => {
            let k = field()?;
            let f = parse_ratfunc(function, &k)?;
            analysis(cli, &f, json!(null))?
        }
        Command::Classify { function, mode, n } => {
            let k = field()?;
            classify(cli, &parse_ratfunc(function, &k)?, *mode, *n)?
        }
        Command::Iterate { function, n } => {
            let k = field()?;
            iterate(cli, &parse_ratfunc(function, &k)?, *n)?
        }
        Command::Conjugate { function, mobius } => {
            let k = field()?;
            let f = parse_ratfunc(function, &k)?;
            let [p, q, r, s] = parse_matrix(mobius, &k)?;
            let ell = Mobius::new(p, q, r, s)?;
            let g = f.conjugate(&ell);
            let j = json!({
                "field": field_json(&k),
                "function": f.to_string(),
                "mobius": mobius_str(&ell),
                "conjugate": g.to_string(),
            });
            Output { json: j, text: format!("{g}\n") }
        }
        Command::Family { family } => {
            let (f, info) = build_family(cli, family)?;
            analysis(cli, &f, info)?
        }
        Command::Pgl2 { matrix, n, decompose } => {
            let k = field()?;
            let [p, q, r, s] = parse_matrix(matrix, &k)?;
            pgl2(&Mat2::new(p, q, r, s)?, *n, *decompose)?
        }
    };
    Ok(if cli.json {
        let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
        s.push('\n');
        s
    } else {
        out.text
    })
}

struct Output {
    json: Value,
    text: String,
}

fn field_json(k: &NumberField) -> Value {
    if k.is_rationals() {
        json!({ "modulus": "Q", "degree": 1 })
    } else {
        json!({ "modulus": k.modulus().display_in("a"), "degree": k.degree() })
    }
}

fn field_str(k: &NumberField) -> String {
    if k.is_rationals() {
        "Q".to_string()
    } else {
        format!("Q[a]/({})", k.modulus().display_in("a"))
    }
}

fn mobius_str(m: &Mobius) -> String {
    let e = m.entries().map(|x| x.to_string());
    format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
}

fn check_iterate_degree(cli: &Cli, f: &RatFunc, n: usize) -> Res<()> {
    let d = f.degree() as f64;
    if d.powi(n as i32) > cli.max_degree as f64 {
        return Err(CoreError::ResourceLimit(format!(
            "iterate {n} of a degree-{} map exceeds --max-degree {}",
            f.degree(),
            cli.max_degree
        ))
        .into());
    }
    Ok(())
}

/// Serializes a witness after checking it against `f` once more.
fn witness_json(w: &ShapeWitness, f: &RatFunc, mode: ShapeMode) -> Res<Value> {
    if !w.verify_mode(f, mode) {
        return Err(CoreError::Inconsistent("witness failed re-verification".into()).into());
    }
    let s = &w.shape;
    Ok(json!({
        "conjugator": mobius_str(&w.ell),
        "a": s.a.to_string(),
        "k": s.k,
        "t": s.t,
        "g": s.g.to_string(),
    }))
}

fn witness_text(w: &ShapeWitness) -> String {
    let s = &w.shape;
    format!(
        "conjugating by {} gives ({}) * x^{} * g(x^{}) with g = {}",
        mobius_str(&w.ell),
        s.a,
        s.k,
        s.t,
        s.g
    )
}

fn with_witness(mut v: Value, w: Option<&ShapeWitness>, f: &RatFunc, mode: ShapeMode) -> Res<Value> {
    if let Some(w) = w {
        v["witness"] = witness_json(w, f, mode)?;
    }
    Ok(v)
}

fn b_json(b: &BVerdict, f: &RatFunc) -> Res<Value> {
    Ok(match b {
        BVerdict::Member(w) => with_witness(json!({ "member": true }), Some(w), f, ShapeMode::Coprime)?,
        BVerdict::NotMember(why) => json!({ "member": false, "obstruction": why }),
    })
}

fn b_text(b: &BVerdict) -> String {
    match b {
        BVerdict::Member(w) => format!("B: member\n  {}\n", witness_text(w)),
        BVerdict::NotMember(why) => format!("B: not a member ({why})\n"),
    }
}

fn verdict_text(label: &str, v: &PolyVerdict) -> String {
    let mut s = format!("{label}: {} ({})\n", if v.member { "member" } else { "not a member" }, v.reason);
    if let Some(w) = &v.witness {
        let _ = writeln!(s, "  {}", witness_text(w));
    }
    s
}

fn points(ps: &[ProjPoint]) -> Value {
    ps.iter().map(|p| Value::String(p.to_string())).collect()
}

fn pairs(ps: &[(ProjPoint, ProjPoint)]) -> Value {
    ps.iter().map(|(p, q)| json!([p.to_string(), q.to_string()])).collect()
}

fn periodic_json(p: &PeriodicData) -> Value {
    json!({
        "identity": p.identity,
        "involution": p.involution,
        "fixed": points(&p.fixed),
        "two_cycles": pairs(&p.two_cycles),
        "irrational_partner": pairs(&p.irrational_partner),
        "fixed_preimages": pairs(&p.fixed_preimages),
    })
}

fn periodic_text(p: &PeriodicData) -> String {
    let list = |ps: &[ProjPoint]| {
        if ps.is_empty() {
            "none".to_string()
        } else {
            ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        }
    };
    let plist = |ps: &[(ProjPoint, ProjPoint)]| {
        if ps.is_empty() {
            "none".to_string()
        } else {
            ps.iter().map(|(p, q)| format!("{p} -> {q}")).collect::<Vec<_>>().join(", ")
        }
    };
    let mut s = String::new();
    if p.identity {
        s.push_str("the map is the identity\n");
    } else if p.involution {
        s.push_str("the map is an involution\n");
    }
    let _ = writeln!(s, "rational fixed points: {}", list(&p.fixed));
    let _ = writeln!(s, "rational 2-cycles: {}", plist(&p.two_cycles));
    let _ = writeln!(s, "rational points with irrational 2-cycle partner: {}", plist(&p.irrational_partner));
    let _ = writeln!(s, "rational preimages of fixed points: {}", plist(&p.fixed_preimages));
    s
}

fn subfield_json(s: &Subfield, stabilized_at: usize, bounded: bool) -> Value {
    json!({
        "degree": s.degree(),
        "minpoly": s.minpoly().display_in("z"),
        "generator": s.primitive().to_string(),
        "stabilized_at": stabilized_at,
        "bounded": bounded,
    })
}

fn analysis(cli: &Cli, f: &RatFunc, family: Value) -> Res<Output> {
    let max_n = cli.max_iter as usize;
    check_iterate_degree(cli, f, max_n)?;
    let rep = report_with_limit(f, max_n, Some(cli.max_degree))?;
    let k = f.field();

    let an_n = rep.first_rational_iterate.unwrap_or(max_n);
    let an_member = rep.first_rational_iterate.is_some();
    let an_witness = match f.as_poly() {
        Some(p) => poly_classify_an(p, an_n as u32)?.witness.filter(|_| an_member),
        None => None,
    };
    let a_member = rep.in_a;

    let fi = &rep.iterates;
    let iterates: Value =
        fi.degrees.iter().enumerate().map(|(i, d)| json!({ "n": i + 1, "degree_over_Q": d })).collect();
    let mut j = json!({
        "field": field_json(k),
        "function": f.to_string(),
        "field_of_definition": { "degree": rep.field_of_definition.degree(),
                                 "minpoly": rep.field_of_definition.minpoly().display_in("z") },
        "iterates": iterates,
        "field_of_iterates": subfield_json(&fi.field, fi.stabilized_at, fi.upper_bound_only),
        "classification": {
            "A_n": with_witness(json!({ "n": an_n, "member": an_member }), an_witness.as_ref(), f,
                                ShapeMode::Divides(an_n as u32))?,
            "A": with_witness(json!({ "member": a_member }), rep.a_witness.as_ref(), f, ShapeMode::Coprime)?,
            "B": b_json(&rep.b, f)?,
        },
        "periodic_points": periodic_json(&rep.periodic),
    });
    if !family.is_null() {
        j["family"] = family;
    }

    let mut s = String::new();
    let _ = writeln!(s, "field: {}", field_str(k));
    let _ = writeln!(s, "f(x) = {f}");
    let _ = writeln!(s, "field of definition: degree {}", rep.field_of_definition.degree());
    s.push_str("   n  [Q(f^n):Q]\n");
    for (i, d) in fi.degrees.iter().enumerate() {
        let _ = writeln!(s, "{:>4}  {}", i + 1, d);
    }
    let _ = writeln!(
        s,
        "field of iterates: degree {}{}, minimal polynomial {}, last shrank at n = {}",
        fi.field.degree(),
        if fi.upper_bound_only { " (upper bound)" } else { "" },
        fi.field.minpoly().display_in("z"),
        fi.stabilized_at
    );
    match rep.first_rational_iterate {
        Some(n) => {
            let _ = writeln!(s, "A_{n}: member (first iterate over Q)");
        }
        None => {
            let _ = writeln!(s, "A_n: no iterate up to n = {max_n} is over Q");
        }
    }
    if let Some(w) = &an_witness {
        let _ = writeln!(s, "  {}", witness_text(w));
    }
    let _ = writeln!(
        s,
        "A: {}",
        match a_member {
            Some(true) => "member",
            Some(false) => "not a member",
            None => "undecided (not a polynomial and not in B)",
        }
    );
    if let Some(w) = &rep.a_witness {
        let _ = writeln!(s, "  {}", witness_text(w));
    }
    s.push_str(&b_text(&rep.b));
    s.push_str(&periodic_text(&rep.periodic));
    Ok(Output { json: j, text: s })
}

fn classify(cli: &Cli, f: &RatFunc, mode: Mode, n: Option<u32>) -> Res<Output> {
    let need_n = || n.ok_or_else(|| CliError::Usage(format!("--mode {} needs --n", mode_name(mode))));
    let need_poly = || {
        f.as_poly().ok_or_else(|| precondition(format!("--mode {} needs a polynomial", mode_name(mode))))
    };
    if f.is_constant() {
        return Err(CoreError::ConstantInput.into());
    }
    let (key, body, text) = match mode {
        Mode::PolyAn => {
            let n = need_n()?;
            let v = poly_classify_an(need_poly()?, n)?;
            let body = with_witness(
                json!({ "n": n, "member": v.member, "reason": v.reason }),
                v.witness.as_ref(),
                f,
                ShapeMode::Divides(n),
            )?;
            ("A_n", body, verdict_text(&format!("A_{n}"), &v))
        }
        Mode::PolyA => {
            let v = poly_classify_a(need_poly()?)?;
            let body = with_witness(
                json!({ "member": v.member, "reason": v.reason }),
                v.witness.as_ref(),
                f,
                ShapeMode::Coprime,
            )?;
            ("A", body, verdict_text("A", &v))
        }
        Mode::B => {
            let b = classify_b(f)?;
            ("B", b_json(&b, f)?, b_text(&b))
        }
        Mode::Direct => {
            let n = need_n()?;
            check_iterate_degree(cli, f, n as usize)?;
            let member = ratfunc_in_an_direct_with_limit(f, n as usize, Some(cli.max_degree))?;
            let text = format!(
                "A_{n}: {} (iterate {n} computed directly)\n",
                if member { "member" } else { "not a member" }
            );
            ("A_n", json!({ "n": n, "member": member, "method": "direct" }), text)
        }
    };
    let mut classification = serde_json::Map::new();
    classification.insert(key.to_string(), body);
    let j = json!({
        "field": field_json(f.field()),
        "function": f.to_string(),
        "classification": classification,
    });
    Ok(Output { json: j, text })
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::PolyAn => "poly-an",
        Mode::PolyA => "poly-a",
        Mode::B => "b",
        Mode::Direct => "direct",
    }
}

fn iterate(cli: &Cli, f: &RatFunc, n: usize) -> Res<Output> {
    check_iterate_degree(cli, f, n)?;
    let g = f.iterate(n);
    let fd = field_of_definition(&g);
    let j = json!({
        "field": field_json(f.field()),
        "function": f.to_string(),
        "n": n,
        "iterate": g.to_string(),
        "degree": g.degree(),
        "degree_over_Q": fd.degree(),
    });
    Ok(Output { json: j, text: format!("{g}\n") })
}

fn build_family(cli: &Cli, family: &Family) -> Res<(RatFunc, Value)> {
    Ok(match family {
        Family::Rotation { k, n, phi } => {
            if *k == 0 {
                return Err(CliError::Usage("--k must be positive".into()));
            }
            let (p, q) = match (n, phi) {
                (Some(n), _) => {
                    if *n == 0 {
                        return Err(CliError::Usage("--n must be positive".into()));
                    }
                    let q = iterfield::classify::sn(*k, *n);
                    let q = u64::try_from(q).ok().filter(|&q| q <= MAX_ROTATION_DENOMINATOR).ok_or_else(|| {
                        CoreError::ResourceLimit(format!(
                            "angle denominator S_n(k) exceeds {MAX_ROTATION_DENOMINATOR}"
                        ))
                    })?;
                    (1, q)
                }
                (None, Some(phi)) => parse_angle(phi)?,
                (None, None) => unreachable!("clap requires --n or --phi"),
            };
            if q > MAX_ROTATION_DENOMINATOR {
                return Err(CoreError::ResourceLimit(format!(
                    "angle denominator exceeds {MAX_ROTATION_DENOMINATOR}"
                ))
                .into());
            }
            let f = rotation_map(RotationSpec::new(*k, p, q));
            (f, json!({ "name": "rotation", "k": k, "phi": format!("{p}*pi/{q}") }))
        }
        Family::Lattes { coeff_a, coeff_b, d, torsion_x } => {
            let field = parse_field(&cli.field)?;
            let curve = Curve::new(parse_elem(coeff_a, &field)?, parse_elem(coeff_b, &field)?)?;
            let deg = (*d as usize).pow(2);
            if deg > cli.max_degree {
                return Err(CoreError::ResourceLimit(format!("degree {deg} exceeds --max-degree")).into());
            }
            let (f, tx) = match torsion_x {
                Some(t) => {
                    let xq = parse_elem(t, &field)?;
                    (lattes_translated(&curve, *d as usize, &xq)?, Value::String(xq.to_string()))
                }
                None => (lattes_phi(&curve, *d as usize), Value::Null),
            };
            let info = json!({
                "name": "lattes",
                "curve": { "a": curve.a().to_string(), "b": curve.b().to_string() },
                "d": d,
                "torsion_x": tx,
            });
            (f, info)
        }
        Family::Counterexample => (counterexample_map(), json!({ "name": "counterexample" })),
    })
}

fn pgl2(a: &Mat2, n: u64, decompose: bool) -> Res<Output> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let (power, power_rational) = power_class(a, n);
    let already = proj_rational(a);
    let least = if already {
        Some(1)
    } else {
        let mut p = a.clone();
        let mut found = None;
        for m in 1..=n {
            if m > 1 {
                p = p.mul(a);
            }
            if proj_rational(&p) {
                found = Some(m);
                break;
            }
        }
        found
    };
    let verdict = match least {
        Some(_) if already => "projectively rational".to_string(),
        Some(m) => format!("A^{m} is projectively rational"),
        None => format!("no power projectively rational (checked n <= {n})"),
    };

    let e = eigen_data(a)?;
    let ext = &e.extension;
    let mut eig = json!({
        "extension": if ext.is_rationals() { "Q".to_string() } else { ext.modulus().display_in("b") },
        "a_in_extension": e.embedding.image().display_in("b"),
        "lambda1": e.lambda1.display_in("b"),
        "lambda2": e.lambda2.display_in("b"),
        "diagonalizable": e.diagonalizable,
    });
    let mut s = String::new();
    let _ = writeln!(s, "A = {}", a.display_in("a"));
    let _ = writeln!(s, "A^{n} = {} (projectively rational: {power_rational})", power.display_in("a"));
    let _ = writeln!(s, "verdict: {verdict}");
    let _ = writeln!(
        s,
        "eigenvalues: {}, {} in Q[b]/({}) with a = {}",
        e.lambda1.display_in("b"),
        e.lambda2.display_in("b"),
        ext.modulus().display_in("b"),
        e.embedding.image().display_in("b")
    );
    if e.diagonalizable {
        let deg = ratio_power_degree(a, n)?;
        eig["ratio_power_degree"] = json!(deg);
        let _ = writeln!(s, "[Q((l1/l2)^{n}):Q] = {deg}");
    } else {
        let v = check_prop42(a, n)?;
        let txt = match v {
            Prop42Verdict::TriviallyConsistent => "A is projectively rational".to_string(),
            Prop42Verdict::Consistent { checked } => format!("no power up to {checked} is projectively rational"),
            Prop42Verdict::Violated { n } => format!("A^{n} is projectively rational although A is not"),
        };
        eig["unipotent_check"] = json!(txt);
        let _ = writeln!(s, "not diagonalizable: {txt}");
    }

    let mut j = json!({
        "field": field_json(a.field()),
        "matrix": a.display_in("a"),
        "n": n,
        "power": power.display_in("a"),
        "power_projectively_rational": power_rational,
        "least_rational_power": least,
        "verdict": verdict,
        "eigen": eig,
    });
    if decompose {
        match root_decompose(a, n)? {
            RootOutcome::RationalAlready => {
                j["decomposition"] = json!({ "rational_already": true });
                s.push_str("decomposition: A is already projectively rational\n");
            }
            RootOutcome::Decomposed(d) => {
                let target = d.embedding.target();
                j["decomposition"] = json!({
                    "rational_already": false,
                    "field": target.modulus().display_in("b"),
                    "a_in_field": d.embedding.image().display_in("b"),
                    "k_prime": { "degree": d.k_prime.degree(), "minpoly": d.k_prime.minpoly().display_in("z") },
                    "f": { "degree": d.f.degree(), "minpoly": d.f.minpoly().display_in("z") },
                    "m": d.m.display_in("b"),
                    "d": d.d.display_in("b"),
                    "swapped": d.swapped,
                    "bounds_hold": d.bounds_hold,
                });
                let _ = writeln!(
                    s,
                    "decomposition over Q[b]/({}) with a = {}:",
                    target.modulus().display_in("b"),
                    d.embedding.image().display_in("b")
                );
                let _ = writeln!(s, "  M = {}", d.m.display_in("b"));
                let _ = writeln!(s, "  D = {}", d.d.display_in("b"));
                let _ = writeln!(
                    s,
                    "  [K':Q] = {}, [F:Q] = {}, bounds hold: {}{}",
                    d.k_prime.degree(),
                    d.f.degree(),
                    d.bounds_hold,
                    if d.swapped { ", eigenvalues swapped" } else { "" }
                );
            }
        }
    }
    Ok(Output { json: j, text: s })
}
