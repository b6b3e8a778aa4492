//! Batch command surface over the potts library. Every command reads its
//! arguments, runs one library operation, and prints a single JSON document
//! (CSV for the census table on request). Output is deterministic: key order
//! is fixed by the output structs, randomized commands take an explicit
//! `--seed`, and the same request always produces the same bytes.
//!
//! Exit codes: 0 success, 1 domain error (with an `{"error": {code,
//! message}}` document), 2 malformed input.

pub mod golden;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::Value;

use potts::curve::{aut_order_oracle, classify_aut, is_isomorphic, IsoWitness, PottsModel, Variant};
use potts::cyclotomic::{cyclotomic_phi, half_trace_chi, half_trace_psi, reduce_mod_p};
use potts::field::{is_prime, make_field, primitive_root_of_unity, Field, FieldElem};
use potts::halftrace::{fibre_mod_p, Fibre};
use potts::moduli::{census_tame, census_wild, cusp_combinatorics, CensusReport, CuspDescriptor,
    JLimit, CENSUS_EXTENSION_CAP};
use potts::pgl2::{
    classify_subgroup, order_by_powering, subgroup_closure, survey_order_p, ProjMap, ProjPoint,
};
use potts::picard::{hodge_characters, picard_descriptor, PicardDescriptor};
use potts::poly::DEFAULT_SPLITTING_CAP;
use potts::selftest::{run_all, CriterionOutcome, SELFTEST_SEED};
use potts::wildnorm::NormContext;
use potts::Error;

const CLOSURE_CAP: u64 = 1 << 20;

#[derive(Parser)]
#[command(name = "potts", version, about = "Exact computations on N-state Potts curves")]
struct Cli {
    /// Base field as "p" or "p^s".
    #[arg(long, global = true)]
    field: Option<String>,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = SELFTEST_SEED)]
    seed: u64,

    /// Largest extension degree searched for splitting fields and witnesses.
    #[arg(long, global = true)]
    cap_splitting: Option<usize>,

    /// Largest group closure / enumeration size.
    #[arg(long, global = true, default_value_t = CLOSURE_CAP)]
    cap_closure: u64,

    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,

    /// CSV output where a table form exists (the census).
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Projective-line transformations over the base field.
    Pgl2 {
        #[command(subcommand)]
        cmd: Pgl2Cmd,
    },
    /// Cyclotomic and half-trace polynomials.
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Curve models: invariants, isomorphism, automorphisms.
    Curve {
        #[command(subcommand)]
        cmd: CurveCmd,
    },
    /// Norm-form identities in wild characteristic.
    Wildnorm {
        #[command(subcommand)]
        cmd: WildnormCmd,
    },
    /// Line-bundle characters and unit-group torsion.
    Picard {
        #[command(subcommand)]
        cmd: PicardCmd,
    },
    /// Censuses, cusp combinatorics, coefficient-ring fibres.
    Moduli {
        #[command(subcommand)]
        cmd: ModuliCmd,
    },
    /// Run the full acceptance battery; nonzero exit on any failure.
    Selftest,
}

#[derive(Subcommand)]
enum Pgl2Cmd {
    /// Order of one transformation, given as a 2x2 matrix.
    Order {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Classify the subgroup generated by a list of matrices.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        generators: String,
    },
    /// Count order-p elements and collect their fixed points.
    Survey,
}

#[derive(Subcommand)]
enum PolyCmd {
    /// n-th cyclotomic polynomial, integer coefficients.
    Phi {
        #[arg(long)]
        n: u64,
    },
    /// Folded polynomial with Phi_n(t) = t^(phi(n)/2) psi_n(t + 1/t).
    Psi {
        #[arg(long)]
        n: u64,
    },
    /// Minimal polynomial of the half trace, dyadic coefficients.
    Chi {
        #[arg(long)]
        n: u64,
    },
    /// The half-trace minimal polynomial reduced mod p.
    Reduce {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Model summary: coefficients, invariant, smoothness.
    Info(ModelArgs),
    /// Isomorphism test between two models over the base field.
    Iso {
        #[arg(long, allow_hyphen_values = true)]
        m1: String,
        #[arg(long, allow_hyphen_values = true)]
        m2: String,
    },
    /// Automorphism-group classification, optionally cross-checked.
    Aut {
        #[command(flatten)]
        model: ModelArgs,
        /// Recompute the order from the branch-set stabilizer.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(clap::Args)]
struct ModelArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::Tame)]
    variant: VariantArg,
    #[arg(long = "N")]
    n: u64,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Tame,
    Wild,
}

#[derive(Subcommand)]
enum WildnormCmd {
    /// Check the resultant closed form on seeded random contexts.
    VerifyResultant {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
    },
    /// The invariant of one norm-form context.
    J {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        psi: String,
        #[arg(long = "U", allow_hyphen_values = true, default_value = "1")]
        u: String,
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum PicardCmd {
    /// Eigencharacters of the scaling and involution on differentials.
    Characters {
        #[arg(long = "N")]
        n: u64,
    },
    /// Shape of the unit-group component in characteristic p.
    Wild {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum ModuliCmd {
    /// One class per invariant value, with explicit witnesses.
    Census {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long = "N")]
        n: u64,
    },
    /// Boundary-curve combinatorics for odd N.
    Cusps {
        #[arg(long = "N")]
        n: u64,
    },
    /// Fibre shape of the coefficient ring mod p.
    Ring {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        p: u64,
    },
}

enum Fail {
    Domain(Error),
    Malformed(String),
    /// A complete document that must still exit nonzero (failed selftest).
    Report(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Domain(e)
    }
}

type CmdResult = Result<String, Fail>;

/// Runs one request and returns (output document, exit code). The binary is
/// a thin wrapper; tests call this directly and compare bytes.
pub fn dispatch(args: &[&str]) -> (String, i32) {
    let cli = match Cli::try_parse_from(std::iter::once("potts").chain(args.iter().copied())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (e.to_string().trim_end().to_string(), code);
        }
    };
    match run_command(&cli) {
        Ok(doc) => (doc, 0),
        Err(Fail::Domain(e)) => {
            let doc = serde_json::json!({
                "error": { "code": e.code(), "message": e.to_string() }
            });
            (doc.to_string(), 1)
        }
        Err(Fail::Malformed(msg)) => (msg, 2),
        Err(Fail::Report(doc)) => (doc, 1),
    }
}

fn run_command(cli: &Cli) -> CmdResult {
    match &cli.cmd {
        Cmd::Pgl2 { cmd } => run_pgl2(cli, cmd),
        Cmd::Poly { cmd } => run_poly(cli, cmd),
        Cmd::Curve { cmd } => run_curve(cli, cmd),
        Cmd::Wildnorm { cmd } => run_wildnorm(cli, cmd),
        Cmd::Picard { cmd } => run_picard(cli, cmd),
        Cmd::Moduli { cmd } => run_moduli(cli, cmd),
        Cmd::Selftest => run_selftest(),
    }
}

fn to_doc<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output structs serialize")
}

// ---- input parsing ------------------------------------------------------

fn req_field(cli: &Cli) -> Result<Field, Fail> {
    let spec = cli
        .field
        .as_deref()
        .ok_or_else(|| Fail::Malformed("missing required --field".into()))?;
    parse_field(spec)
}

fn parse_field(spec: &str) -> Result<Field, Fail> {
    let (p, s) = match spec.split_once('^') {
        Some((p, s)) => (
            p.parse::<u64>().map_err(|_| bad_field(spec))?,
            s.parse::<usize>().map_err(|_| bad_field(spec))?,
        ),
        None => (spec.parse::<u64>().map_err(|_| bad_field(spec))?, 1),
    };
    Ok(make_field(p, s)?)
}

fn bad_field(spec: &str) -> Fail {
    Fail::Malformed(format!("--field wants \"p\" or \"p^s\", got {spec:?}"))
}

/// An element is a plain integer or a little-endian coefficient array.
fn elem_from_value(field: &Field, v: &Value) -> Result<FieldElem, Fail> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| field.from_int(i))
            .ok_or_else(|| Fail::Malformed(format!("element {n} is not an integer"))),
        Value::Array(xs) => {
            let mut coeffs = Vec::with_capacity(xs.len());
            for x in xs {
                coeffs.push(
                    x.as_i64()
                        .ok_or_else(|| Fail::Malformed(format!("bad coefficient {x}")))?,
                );
            }
            Ok(field.from_coeffs(&coeffs)?)
        }
        other => Err(Fail::Malformed(format!("element wants a number or array, got {other}"))),
    }
}

fn parse_elem(field: &Field, text: &str) -> Result<FieldElem, Fail> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Fail::Malformed(format!("bad element: {e}")))?;
    elem_from_value(field, &v)
}

fn parse_matrix(field: &Field, v: &Value) -> Result<ProjMap, Fail> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == 2)
        .ok_or_else(|| Fail::Malformed("matrix wants [[a,b],[c,d]]".into()))?;
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cols = row
            .as_array()
            .filter(|c| c.len() == 2)
            .ok_or_else(|| Fail::Malformed("matrix wants [[a,b],[c,d]]".into()))?;
        for e in cols {
            entries.push(elem_from_value(field, e)?);
        }
    }
    let entries: [FieldElem; 4] = entries.try_into().expect("checked 2x2");
    Ok(ProjMap::new(field, entries)?)
}

fn parse_model(field: &Field, text: &str) -> Result<PottsModel, Fail> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Fail::Malformed(format!("bad model: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Fail::Malformed("model wants {variant, N, A, B}".into()))?;
    let n = obj
        .get("N")
        .and_then(Value::as_u64)
        .ok_or_else(|| Fail::Malformed("model is missing \"N\"".into()))?;
    let a = elem_from_value(field, obj.get("A").unwrap_or(&Value::Null))?;
    let b = elem_from_value(field, obj.get("B").unwrap_or(&Value::Null))?;
    match obj.get("variant").and_then(Value::as_str).unwrap_or("tame") {
        "tame" => Ok(PottsModel::tame(n, a, b)),
        "wild" => Ok(PottsModel::wild(n, a, b)),
        other => Err(Fail::Malformed(format!("unknown variant {other:?}"))),
    }
}

fn build_model(field: &Field, args: &ModelArgs) -> Result<PottsModel, Fail> {
    let a = parse_elem(field, &args.a)?;
    let b = parse_elem(field, &args.b)?;
    Ok(match args.variant {
        VariantArg::Tame => PottsModel::tame(args.n, a, b),
        VariantArg::Wild => PottsModel::wild(args.n, a, b),
    })
}

// ---- output forms -------------------------------------------------------

fn elem_out(e: &FieldElem) -> Vec<u64> {
    e.coeffs().to_vec()
}

fn field_spec(f: &Field) -> String {
    if f.degree() == 1 {
        f.p().to_string()
    } else {
        format!("{}^{}", f.p(), f.degree())
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Tame => "tame",
        Variant::Wild => "wild",
    }
}

fn point_out(p: &ProjPoint) -> Value {
    match p {
        ProjPoint::Finite(e) => Value::from(elem_out(e)),
        ProjPoint::Infinity => Value::String("inf".into()),
    }
}

// ---- pgl2 ---------------------------------------------------------------

#[derive(Serialize)]
struct OrderOut {
    order: u64,
}

#[derive(Serialize)]
struct ClassifyOut {
    class: String,
    order: u64,
    aliases: Vec<String>,
    size: u64,
}

#[derive(Serialize)]
struct SurveyOut {
    count: u64,
    size: u64,
    fixed_union: Vec<Value>,
}

fn run_pgl2(cli: &Cli, cmd: &Pgl2Cmd) -> CmdResult {
    let field = req_field(cli)?;
    match cmd {
        Pgl2Cmd::Order { matrix } => {
            let v: Value = serde_json::from_str(matrix)
                .map_err(|e| Fail::Malformed(format!("bad matrix: {e}")))?;
            let g = parse_matrix(&field, &v)?;
            let order = match order_by_powering(&g) {
                Ok(n) => n,
                Err(Error::IdentityElement) => 1,
                Err(e) => return Err(e.into()),
            };
            Ok(to_doc(&OrderOut { order }))
        }
        Pgl2Cmd::Classify { generators } => {
            let v: Value = serde_json::from_str(generators)
                .map_err(|e| Fail::Malformed(format!("bad generators: {e}")))?;
            let list = v
                .as_array()
                .ok_or_else(|| Fail::Malformed("generators want an array of matrices".into()))?;
            let mut gens = Vec::with_capacity(list.len());
            for m in list {
                gens.push(parse_matrix(&field, m)?);
            }
            let closure = subgroup_closure(&gens, cli.cap_closure as usize)?;
            let class = classify_subgroup(&closure)?;
            Ok(to_doc(&ClassifyOut {
                class: class.tag.to_string(),
                order: class.order,
                aliases: class.aliases,
                size: closure.len() as u64,
            }))
        }
        Pgl2Cmd::Survey => {
            let survey = survey_order_p(&field, cli.cap_closure)?;
            let mut points = survey.fixed_union;
            points.sort();
            Ok(to_doc(&SurveyOut {
                count: survey.count,
                size: points.len() as u64,
                fixed_union: points.iter().map(point_out).collect(),
            }))
        }
    }
}

// ---- poly ---------------------------------------------------------------

#[derive(Serialize)]
struct IntPolyOut {
    n: u64,
    degree: u64,
    coeffs: Vec<i64>,
}

#[derive(Serialize)]
struct ChiOut {
    n: u64,
    degree: u64,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct ReduceOut {
    n: u64,
    p: u64,
    degree: u64,
    coeffs: Vec<Vec<u64>>,
}

fn run_poly(cli: &Cli, cmd: &PolyCmd) -> CmdResult {
    match cmd {
        PolyCmd::Phi { n } => {
            let f = cyclotomic_phi(*n);
            Ok(to_doc(&IntPolyOut {
                n: *n,
                degree: f.deg().unwrap_or(0) as u64,
                coeffs: f.coeffs().to_vec(),
            }))
        }
        PolyCmd::Psi { n } => {
            let f = half_trace_psi(*n)?;
            Ok(to_doc(&IntPolyOut {
                n: *n,
                degree: f.deg().unwrap_or(0) as u64,
                coeffs: f.coeffs().to_vec(),
            }))
        }
        PolyCmd::Chi { n } => {
            let f = half_trace_chi(*n)?;
            Ok(to_doc(&ChiOut {
                n: *n,
                degree: f.deg().unwrap_or(0) as u64,
                coeffs: f.coeffs().iter().map(|d| d.to_string()).collect(),
            }))
        }
        PolyCmd::Reduce { n } => {
            let field = req_field(cli)?;
            let f = reduce_mod_p(&half_trace_chi(*n)?, field.p())?;
            Ok(to_doc(&ReduceOut {
                n: *n,
                p: field.p(),
                degree: f.deg().unwrap_or(0) as u64,
                coeffs: f.coeffs().iter().map(elem_out).collect(),
            }))
        }
    }
}

// ---- curve --------------------------------------------------------------

#[derive(Serialize)]
struct InfoOut {
    variant: &'static str,
    #[serde(rename = "N")]
    n: u64,
    field: String,
    #[serde(rename = "A")]
    a: Vec<u64>,
    #[serde(rename = "B")]
    b: Vec<u64>,
    genus: u64,
    smooth: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<Vec<u64>>,
}

#[derive(Serialize)]
struct WitnessOut {
    kind: &'static str,
    field: String,
    value: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverted: Option<bool>,
}

#[derive(Serialize)]
struct IsoOut {
    isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_class_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

#[derive(Serialize)]
struct AutOut {
    class: String,
    order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_order: Option<u64>,
}

fn run_curve(cli: &Cli, cmd: &CurveCmd) -> CmdResult {
    let field = req_field(cli)?;
    let cap = cli.cap_splitting.unwrap_or(DEFAULT_SPLITTING_CAP);
    match cmd {
        CurveCmd::Info(args) => {
            let m = build_model(&field, args)?;
            let (smooth, j) = match m.j_invariant() {
                Ok(j) => (true, Some(elem_out(&j))),
                Err(Error::SingularModel) => (false, None),
                Err(e) => return Err(e.into()),
            };
            Ok(to_doc(&InfoOut {
                variant: variant_name(m.variant()),
                n: m.n(),
                field: field_spec(&field),
                a: elem_out(m.a()),
                b: elem_out(m.b()),
                genus: m.n() - 1,
                smooth,
                j,
            }))
        }
        CurveCmd::Iso { m1, m2 } => {
            let m1 = parse_model(&field, m1)?;
            let m2 = parse_model(&field, m2)?;
            let report = is_isomorphic(&m1, &m2, cap)?;
            let witness = report.witness.map(|w| match w {
                IsoWitness::Lambda { value, inverted } => WitnessOut {
                    kind: "lambda",
                    field: field_spec(value.field()),
                    value: elem_out(&value),
                    inverted: Some(inverted),
                },
                IsoWitness::Shift { value } => WitnessOut {
                    kind: "shift",
                    field: field_spec(value.field()),
                    value: elem_out(&value),
                    inverted: None,
                },
            });
            Ok(to_doc(&IsoOut {
                isomorphic: report.geometric,
                chi_class_match: report.chi_class_match,
                witness,
            }))
        }
        CurveCmd::Aut { model, oracle } => {
            let m = build_model(&field, model)?;
            let c = classify_aut(&m)?;
            let oracle_order = if *oracle {
                Some(aut_order_oracle(&m)?.aut_order)
            } else {
                None
            };
            Ok(to_doc(&AutOut {
                class: c.tag.to_string(),
                order: c.order,
                oracle_order,
            }))
        }
    }
}

// ---- wildnorm -----------------------------------------------------------

#[derive(Serialize)]
struct ContextOut {
    p: u64,
    field: String,
    t: Vec<u64>,
    psi: Vec<u64>,
    #[serde(rename = "U")]
    u: Vec<u64>,
    #[serde(rename = "A")]
    a: Vec<u64>,
    #[serde(rename = "B")]
    b: Vec<u64>,
}

#[derive(Serialize)]
struct VerifyOut {
    trials: u64,
    failures: u64,
    example_context: ContextOut,
}

#[derive(Serialize)]
struct JOut {
    j: Vec<u64>,
}

fn context_out(ctx: &NormContext) -> ContextOut {
    let (u, a, b) = ctx.coefficients();
    ContextOut {
        p: ctx.p(),
        field: field_spec(ctx.field()),
        t: elem_out(ctx.t()),
        psi: elem_out(ctx.psi()),
        u: elem_out(u),
        a: elem_out(a),
        b: elem_out(b),
    }
}

fn run_wildnorm(cli: &Cli, cmd: &WildnormCmd) -> CmdResult {
    let field = req_field(cli)?;
    match cmd {
        WildnormCmd::VerifyResultant { p, trials } => {
            let z = primitive_root_of_unity(&field, *p)?;
            let q = field.q();
            let mut rng = StdRng::seed_from_u64(cli.seed);
            let mut failures = 0;
            let mut example = None;
            for _ in 0..*trials {
                let t = z.pow(rng.gen_range(1..*p));
                let psi = field.from_index(rng.gen_range(0..q));
                let u = field.from_index(rng.gen_range(1..q));
                let a = field.from_index(rng.gen_range(0..q));
                let b = field.from_index(rng.gen_range(0..q));
                let ctx = NormContext::new(*p, t, psi, u, a, b)?;
                if !ctx.verify_resultant_identity()? {
                    failures += 1;
                }
                if example.is_none() {
                    example = Some(context_out(&ctx));
                }
            }
            let example_context =
                example.ok_or_else(|| Fail::Malformed("--trials must be positive".into()))?;
            Ok(to_doc(&VerifyOut { trials: *trials, failures, example_context }))
        }
        WildnormCmd::J { p, t, psi, u, a, b } => {
            let ctx = NormContext::new(
                *p,
                parse_elem(&field, t)?,
                parse_elem(&field, psi)?,
                parse_elem(&field, u)?,
                parse_elem(&field, a)?,
                parse_elem(&field, b)?,
            )?;
            Ok(to_doc(&JOut { j: elem_out(&ctx.wild_j()?) }))
        }
    }
}

// ---- picard -------------------------------------------------------------

#[derive(Serialize)]
struct CharactersOut {
    #[serde(rename = "N")]
    n: u64,
    field: String,
    phi: Vec<u64>,
    characters: Vec<[u64; 2]>,
    top_wedge: Vec<u64>,
}

#[derive(Serialize)]
struct WildPicardOut {
    p: u64,
    m: u64,
    exponent: u64,
}

#[derive(Serialize)]
struct TamePicardOut {
    #[serde(rename = "N")]
    n: u64,
    order: u64,
    factors: [u64; 2],
}

/// Least odd prime that is 1 mod 2N, so the scaling character has full order.
fn default_hodge_field(n: u64) -> Result<Field, Fail> {
    let mut l = 2 * n + 1;
    loop {
        if is_prime(l) {
            return Ok(make_field(l, 1)?);
        }
        l += 2 * n;
    }
}

fn run_picard(cli: &Cli, cmd: &PicardCmd) -> CmdResult {
    match cmd {
        PicardCmd::Characters { n } => {
            let field = match &cli.field {
                Some(spec) => parse_field(spec)?,
                None => default_hodge_field(*n)?,
            };
            let h = hodge_characters(*n, &field)?;
            Ok(to_doc(&CharactersOut {
                n: *n,
                field: field_spec(&field),
                phi: elem_out(&h.phi),
                characters: h.characters.iter().map(|c| [c.eps as u64, c.k]).collect(),
                top_wedge: elem_out(&h.top_wedge),
            }))
        }
        PicardCmd::Wild { p } => match picard_descriptor(Variant::Wild, *p, *p)? {
            PicardDescriptor::WildUnits { p, m, exponent } => {
                Ok(to_doc(&WildPicardOut { p, m, exponent }))
            }
            PicardDescriptor::TameFinite { n, order, factors } => {
                Ok(to_doc(&TamePicardOut { n, order, factors }))
            }
        },
    }
}

// ---- moduli -------------------------------------------------------------

#[derive(Serialize)]
struct AssignmentOut {
    #[serde(rename = "A")]
    a: Vec<u64>,
    #[serde(rename = "B")]
    b: Vec<u64>,
    j: Vec<u64>,
    class: u64,
}

#[derive(Serialize)]
struct CensusOut {
    variant: &'static str,
    #[serde(rename = "N")]
    n: u64,
    field: String,
    models: u64,
    distinct_j: u64,
    classes: u64,
    expected: u64,
    matches: bool,
    max_witness_degree: u64,
    assignments: Vec<AssignmentOut>,
}

#[derive(Serialize)]
struct CuspOut {
    components: u64,
    genera: [u64; 2],
    nodes: u64,
    j_limit: &'static str,
    genus_accounting: u64,
}

#[derive(Serialize)]
struct CuspsOut {
    #[serde(rename = "N")]
    n: u64,
    at_infinity: CuspOut,
    at_zero: CuspOut,
}

#[derive(Serialize)]
struct FibreOut {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<bool>,
}

fn census_doc(report: &CensusReport, field: &Field, csv: bool) -> String {
    if csv {
        let mut out = String::from("A,B,j,class");
        for (a, b, j, class) in &report.assignments {
            out.push_str(&format!("\n{},{},{},{}", a.index(), b.index(), j.index(), class));
        }
        return out;
    }
    to_doc(&CensusOut {
        variant: variant_name(report.variant),
        n: report.n,
        field: field_spec(field),
        models: report.models,
        distinct_j: report.distinct_j,
        classes: report.classes,
        expected: report.expected,
        matches: report.matches,
        max_witness_degree: report.max_witness_degree as u64,
        assignments: report
            .assignments
            .iter()
            .map(|(a, b, j, class)| AssignmentOut {
                a: elem_out(a),
                b: elem_out(b),
                j: elem_out(j),
                class: *class,
            })
            .collect(),
    })
}

fn cusp_out(c: &CuspDescriptor) -> CuspOut {
    CuspOut {
        components: c.components,
        genera: [c.genera.0, c.genera.1],
        nodes: c.nodes,
        j_limit: match c.j_limit {
            JLimit::Zero => "zero",
            JLimit::Infinity => "infinity",
        },
        genus_accounting: c.genus_accounting(),
    }
}

fn run_moduli(cli: &Cli, cmd: &ModuliCmd) -> CmdResult {
    match cmd {
        ModuliCmd::Census { variant, n } => {
            let field = req_field(cli)?;
            let cap = cli.cap_splitting.unwrap_or(CENSUS_EXTENSION_CAP);
            let report = match variant {
                VariantArg::Tame => census_tame(*n, &field, cap)?,
                VariantArg::Wild => census_wild(*n, &field, cap)?,
            };
            Ok(census_doc(&report, &field, cli.csv))
        }
        ModuliCmd::Cusps { n } => {
            if *n < 3 || *n % 2 == 0 {
                return Err(Error::EvenN(*n).into());
            }
            let (at_infinity, at_zero) = cusp_combinatorics(*n);
            Ok(to_doc(&CuspsOut {
                n: *n,
                at_infinity: cusp_out(&at_infinity),
                at_zero: cusp_out(&at_zero),
            }))
        }
        ModuliCmd::Ring { n, p } => {
            let out = match fibre_mod_p(*n, *p)? {
                Fibre::Empty => FibreOut {
                    kind: "empty",
                    components: None,
                    multiplicity: None,
                    reduced: None,
                },
                Fibre::Shape { components, multiplicity, reduced } => FibreOut {
                    kind: "shape",
                    components: Some(components),
                    multiplicity: Some(multiplicity),
                    reduced: Some(reduced),
                },
            };
            Ok(to_doc(&out))
        }
    }
}

// ---- selftest -----------------------------------------------------------

/// Criterion 13: every recorded request reproduces its recorded bytes, and a
/// second run agrees with the first.
pub fn golden_battery_outcome() -> CriterionOutcome {
    let mut detail = Vec::new();
    for (name, args, expected) in golden::BATTERY {
        let (first, code) = dispatch(args);
        if code != 0 {
            detail.push(format!("{name}: exit {code}"));
            continue;
        }
        let (second, _) = dispatch(args);
        if first != second {
            detail.push(format!("{name}: two runs disagree"));
        }
        if format!("{first}\n") != *expected {
            detail.push(format!("{name}: output differs from the recorded document"));
        }
    }
    if detail.is_empty() {
        CriterionOutcome {
            id: 13,
            label: "command battery reproduces recorded outputs",
            pass: true,
            detail: format!("{} requests, byte-identical", golden::BATTERY.len()),
        }
    } else {
        CriterionOutcome {
            id: 13,
            label: "command battery reproduces recorded outputs",
            pass: false,
            detail: detail.join("; "),
        }
    }
}

/// All criteria: the twelve library checks plus the golden battery.
pub fn full_battery() -> Vec<CriterionOutcome> {
    let mut all = run_all();
    all.push(golden_battery_outcome());
    all
}

#[derive(Serialize)]
struct SelftestOut {
    failures: u64,
    criteria: Vec<SelftestLine>,
}

#[derive(Serialize)]
struct SelftestLine {
    id: u32,
    label: &'static str,
    pass: bool,
    detail: String,
}

fn run_selftest() -> CmdResult {
    let outcomes = full_battery();
    let failures = outcomes.iter().filter(|o| !o.pass).count() as u64;
    let doc = to_doc(&SelftestOut {
        failures,
        criteria: outcomes
            .into_iter()
            .map(|o| SelftestLine { id: o.id, label: o.label, pass: o.pass, detail: o.detail })
            .collect(),
    });
    if failures > 0 {
        return Err(Fail::Report(doc));
    }
    Ok(doc)
}
