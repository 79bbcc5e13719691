//! Command-line front end. [`run`] parses arguments, dispatches to the library
//! and writes one report; the exit status is 0 on success, 2 when a
//! verification does not hold and 1 on usage or input errors.

pub mod config;
pub mod report;

use alcovelab::adlv::{self, HyperbolicReading, SlopeClassGL2};
use alcovelab::affweyl::{ExtAffWeylElem, ExtAffineWeyl, ParahoricType};
use alcovelab::ff::Gf;
use alcovelab::fforacle::{self, Level, SearchParams, Target};
use alcovelab::kottwitz::{self, NewtonVector};
use alcovelab::localmodel::{self, ChainConfig};
use alcovelab::rootdata::{FiniteWeylElem, GroupKind, RootDatum};
use alcovelab::{acceptance, admperm, caps, q, q_to_string, Q};
use clap::Parser;
use config::*;
use report::*;
use serde::Serialize;
use std::io::Write;
use std::sync::Mutex;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Output of a subcommand: the rendered report and whether its checks held.
struct Outcome {
    text: String,
    verified: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(alcovelab::Error),
    Other(anyhow::Error),
}

impl From<alcovelab::Error> for Failure {
    fn from(e: alcovelab::Error) -> Self {
        Failure::Library(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.into())
    }
}

type Res<T> = Result<T, Failure>;

// The element cap is process-wide, so runs inside one process take turns.
static RUN_LOCK: Mutex<()> = Mutex::new(());

fn usage<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure::Usage(msg.into()))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    run_config(&cfg, out, err)
}

/// Runs an already parsed configuration.
pub fn run_config(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let _guard = RUN_LOCK.lock().unwrap_or_else(|p| p.into_inner());
    if cfg.print_config {
        return match serde_json::to_string_pretty(cfg) {
            Ok(s) => {
                let _ = writeln!(out, "{s}");
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        };
    }
    caps::set_element_cap(cfg.cap.map(|c| c as usize));
    let result = dispatch(cfg);
    caps::set_element_cap(None);
    match result {
        Ok(o) => {
            let _ = write!(out, "{}", o.text);
            if !o.text.ends_with('\n') {
                let _ = writeln!(out);
            }
            if o.verified {
                EXIT_OK
            } else {
                let _ = writeln!(err, "verification failed");
                EXIT_MISMATCH
            }
        }
        Err(f) => {
            let msg = match f {
                Failure::Usage(m) => format!("usage error: {m}"),
                Failure::Library(alcovelab::Error::CapExceeded { what, cap }) => {
                    format!("cap exceeded: {what} needs more than {cap} elements; raise it with --cap")
                }
                Failure::Library(alcovelab::Error::InvalidInput(m)) => format!("invalid input: {m}"),
                Failure::Library(e) => format!("error: {e}"),
                Failure::Other(e) => format!("error: {e}"),
            };
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cfg: &RunConfig) -> Res<Outcome> {
    let f = cfg.format;
    match &cfg.command {
        Command::Adm(a) => set_command("adm", a, f, admperm::adm),
        Command::Perm(a) => set_command("perm", a, f, admperm::perm),
        Command::Compare(a) => compare(a, f),
        Command::AdmK(a) => adm_k(a, f),
        Command::Bgmu(a) => bgmu(a, f),
        Command::Chailength(a) => chai(a, f),
        Command::Dimbasic(a) => dimbasic(a, f),
        Command::AdlvClassify(a) => classify(a, f),
        Command::AdlvGrid(a) => grid(a, f),
        Command::OracleInvw(a) => invw(a, f),
        Command::OracleSearch(a) => search(a, f),
        Command::LocalmodelCount(a) => local(a, f),
        Command::FixturesVerify => fixtures(f),
    }
}

fn weyl(g: &GroupArgs) -> Res<ExtAffineWeyl> {
    Ok(ExtAffineWeyl::new(RootDatum::new(g.group.into(), g.n)?))
}

fn json<T: Serialize>(r: &T) -> Res<String> {
    Ok(serde_json::to_string_pretty(r)? + "\n")
}

fn no_format<T>(cmd: &str, f: Format) -> Res<T> {
    usage(format!("{cmd} does not support --format {}", format!("{f:?}").to_lowercase()))
}

fn ok(text: String) -> Res<Outcome> {
    Ok(Outcome { text, verified: true })
}

#[derive(Serialize)]
struct SetReport {
    command: &'static str,
    group: Group,
    n: usize,
    mu: Vec<i64>,
    size: usize,
    elements: Vec<ElementOut>,
}

fn set_command(
    name: &'static str,
    a: &MuArgs,
    f: Format,
    compute: fn(&ExtAffineWeyl, &[i64]) -> alcovelab::Result<Vec<ExtAffWeylElem>>,
) -> Res<Outcome> {
    let aw = weyl(&a.group)?;
    let set = compute(&aw, &a.mu.0)?;
    let elements = ElementOut::all(&aw, &set);
    match f {
        Format::Json => ok(json(&SetReport {
            command: name,
            group: a.group.group,
            n: a.group.n,
            mu: a.mu.0.clone(),
            size: set.len(),
            elements,
        })?),
        Format::Csv => ok(csv_rows(elements.iter().map(ElementRow::from))?),
        Format::Dot => {
            let index: std::collections::HashMap<&ExtAffWeylElem, usize> =
                set.iter().enumerate().map(|(i, x)| (x, i)).collect();
            let edges: Vec<(usize, usize)> = admperm::hasse_edges(&aw, &set)
                .iter()
                .map(|(x, y)| (index[x], index[y]))
                .collect();
            let labels: Vec<String> = set.iter().map(|x| x.to_string()).collect();
            ok(hasse_dot(name, &labels, &edges))
        }
    }
}

#[derive(Serialize)]
struct CompareOut {
    group: Group,
    n: usize,
    mu: Vec<i64>,
    equal: bool,
    adm_size: usize,
    perm_size: usize,
    adm_only: Vec<ElementOut>,
    perm_only: Vec<ElementOut>,
}

#[derive(Serialize)]
struct CompareRow {
    mu: String,
    equal: bool,
    adm_size: usize,
    perm_size: usize,
    adm_only: usize,
    perm_only: usize,
}

fn compare(a: &MuArgs, f: Format) -> Res<Outcome> {
    let aw = weyl(&a.group)?;
    let r = admperm::compare_adm_perm(&aw, &a.mu.0)?;
    let text = match f {
        Format::Json => json(&CompareOut {
            group: a.group.group,
            n: a.group.n,
            mu: a.mu.0.clone(),
            equal: r.equal,
            adm_size: r.adm_size,
            perm_size: r.perm_size,
            adm_only: ElementOut::all(&aw, &r.adm_only),
            perm_only: ElementOut::all(&aw, &r.perm_only),
        })?,
        Format::Csv => csv_rows([CompareRow {
            mu: a.mu.to_string(),
            equal: r.equal,
            adm_size: r.adm_size,
            perm_size: r.perm_size,
            adm_only: r.adm_only.len(),
            perm_only: r.perm_only.len(),
        }])?,
        Format::Dot => return no_format("compare", f),
    };
    Ok(Outcome { text, verified: r.equal })
}

#[derive(Serialize)]
struct Surjectivity {
    perm_k_size: usize,
    image_size: usize,
    surjective: bool,
    missing_from_image: Vec<String>,
    image_outside_perm_k: Vec<String>,
}

#[derive(Serialize)]
struct AdmKOut {
    group: Group,
    n: usize,
    mu: Vec<i64>,
    k: Vec<usize>,
    size: usize,
    cosets: Vec<ElementOut>,
    equals_perm_k: bool,
    perm_image: Surjectivity,
}

fn adm_k(a: &AdmKArgs, f: Format) -> Res<Outcome> {
    let aw = weyl(&a.mu.group)?;
    let k = match &a.k {
        None => aw.special_maximal(),
        Some(list) => {
            if list.0.iter().any(|&i| i < 0) {
                return usage("--k entries must be non-negative");
            }
            ParahoricType {
                k: list.0.iter().map(|&i| i as usize).collect(),
            }
        }
    };
    let mu = &a.mu.mu.0;
    let cosets = admperm::adm_k(&aw, mu, &k)?;
    let pk = admperm::perm_k(&aw, mu, &k)?;
    let equal = admperm::compare_sets(&cosets, &pk).equal;
    let s = admperm::perm_k_surjectivity(&aw, mu, &k)?;
    let elements = ElementOut::all(&aw, &cosets);
    let text = match f {
        Format::Json => json(&AdmKOut {
            group: a.mu.group.group,
            n: a.mu.group.n,
            mu: mu.clone(),
            k: k.k.clone(),
            size: cosets.len(),
            cosets: elements,
            equals_perm_k: equal,
            perm_image: Surjectivity {
                perm_k_size: s.perm_k_size,
                image_size: s.image_size,
                surjective: s.missing_from_image.is_empty(),
                missing_from_image: s.missing_from_image.iter().map(|x| x.to_string()).collect(),
                image_outside_perm_k: s.image_outside_perm_k.iter().map(|x| x.to_string()).collect(),
            },
        })?,
        Format::Csv => csv_rows(elements.iter().map(ElementRow::from))?,
        Format::Dot => return no_format("admK", f),
    };
    Ok(Outcome { text, verified: equal })
}

fn slopes_text(nv: &NewtonVector) -> Vec<String> {
    nv.slopes.iter().map(q_to_string).collect()
}

#[derive(Serialize)]
struct ClassOut {
    index: usize,
    slopes: Vec<String>,
    kappa: i64,
    basic: bool,
    rank: i64,
}

#[derive(Serialize)]
struct ClassRow {
    index: usize,
    slopes: String,
    kappa: i64,
    basic: bool,
    rank: i64,
}

#[derive(Serialize)]
struct ChecksOut {
    unique_min_basic: bool,
    unique_max_ordinary: bool,
    ranked: bool,
    rank_is_chai_length: bool,
    pair_joins: bool,
    triple_joins: bool,
    injective: bool,
}

#[derive(Serialize)]
struct BgmuOut {
    group: Group,
    n: usize,
    mu: Vec<i64>,
    size: usize,
    basic_index: usize,
    ordinary_index: usize,
    elements: Vec<ClassOut>,
    hasse: Vec<[usize; 2]>,
    checks: ChecksOut,
}

fn bgmu(a: &MuArgs, f: Format) -> Res<Outcome> {
    let rd = RootDatum::new(a.group.group.into(), a.group.n)?;
    let mu = &a.mu.0;
    let p = kottwitz::enumerate_bgmu(&rd, mu)?;
    let c = kottwitz::check_poset(&rd, mu, &p);
    let verified = c.all();
    let elements: Vec<ClassOut> = p
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| ClassOut {
            index: i,
            slopes: slopes_text(&e.newton),
            kappa: e.kappa,
            basic: e.basic,
            rank: p.rank[i],
        })
        .collect();
    let text = match f {
        Format::Json => json(&BgmuOut {
            group: a.group.group,
            n: a.group.n,
            mu: mu.clone(),
            size: p.elements.len(),
            basic_index: p.basic_index(),
            ordinary_index: p.ordinary_index(mu),
            hasse: p.hasse.iter().map(|&(x, y)| [x, y]).collect(),
            elements,
            checks: ChecksOut {
                unique_min_basic: c.unique_min_basic,
                unique_max_ordinary: c.unique_max_ordinary,
                ranked: c.ranked,
                rank_is_chai_length: c.rank_is_chai_length,
                pair_joins: c.pair_joins,
                triple_joins: c.triple_joins,
                injective: c.injective,
            },
        })?,
        Format::Csv => csv_rows(elements.iter().map(|e| ClassRow {
            index: e.index,
            slopes: e.slopes.join(","),
            kappa: e.kappa,
            basic: e.basic,
            rank: e.rank,
        }))?,
        Format::Dot => {
            let labels: Vec<String> = elements.iter().map(|e| format!("({})", e.slopes.join(","))).collect();
            hasse_dot("bgmu", &labels, &p.hasse)
        }
    };
    Ok(Outcome { text, verified })
}

#[derive(Serialize)]
struct ChaiOut {
    group: Group,
    n: usize,
    mu: Vec<i64>,
    from: Vec<String>,
    to: Vec<String>,
    length: i64,
}

fn newton(r: &RatList) -> Res<NewtonVector> {
    match r.values() {
        Ok(slopes) => Ok(NewtonVector { slopes }),
        Err(e) => usage(e),
    }
}

fn chai(a: &ChaiArgs, f: Format) -> Res<Outcome> {
    let rd = RootDatum::new(a.mu.group.group.into(), a.mu.group.n)?;
    let (b, b2) = (newton(&a.from)?, newton(&a.to)?);
    let length = kottwitz::chai_length(&rd, &a.mu.mu.0, &b, &b2)?;
    let out = ChaiOut {
        group: a.mu.group.group,
        n: a.mu.group.n,
        mu: a.mu.mu.0.clone(),
        from: slopes_text(&b),
        to: slopes_text(&b2),
        length,
    };
    match f {
        Format::Json => ok(json(&out)?),
        Format::Csv => ok(csv_rows([(out.from.join(","), out.to.join(","), out.length)].iter().map(
            |(from, to, length)| {
                #[derive(Serialize)]
                struct Row<'a> {
                    from: &'a str,
                    to: &'a str,
                    length: i64,
                }
                Row { from, to, length: *length }
            },
        ))?),
        Format::Dot => no_format("chailength", f),
    }
}

#[derive(Serialize)]
struct DimOut {
    group: Group,
    n: usize,
    mu: Vec<i64>,
    two_rho_mu: i64,
    via_length: i64,
    via_floor_sum: i64,
    agree: bool,
}

fn dimbasic(a: &MuArgs, f: Format) -> Res<Outcome> {
    let rd = RootDatum::new(a.group.group.into(), a.group.n)?;
    let d = kottwitz::conj_dim_basic_forms(&rd, &a.mu.0)?;
    let agree = d.via_length == d.via_floor_sum;
    let out = DimOut {
        group: a.group.group,
        n: a.group.n,
        mu: a.mu.0.clone(),
        two_rho_mu: d.two_rho_mu,
        via_length: d.via_length,
        via_floor_sum: d.via_floor_sum,
        agree,
    };
    let text = match f {
        Format::Json => json(&out)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                mu: String,
                two_rho_mu: i64,
                via_length: i64,
                via_floor_sum: i64,
                agree: bool,
            }
            csv_rows([Row {
                mu: a.mu.to_string(),
                two_rho_mu: out.two_rho_mu,
                via_length: out.via_length,
                via_floor_sum: out.via_floor_sum,
                agree,
            }])?
        }
        Format::Dot => return no_format("dimbasic", f),
    };
    Ok(Outcome { text, verified: agree })
}

fn slope_class(r: &RatList) -> Res<SlopeClassGL2> {
    let v = match r.values() {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    if v.len() != 2 {
        return usage("--lambda needs two slopes");
    }
    let twice = |x: &Q| -> Res<i64> {
        let y = x * q(2);
        if !y.is_integer() {
            return usage(format!("slope {} is not a multiple of 1/2", q_to_string(x)));
        }
        i64::try_from(y.to_integer()).or_else(|_| usage("slope out of range"))
    };
    Ok(SlopeClassGL2::from_halves(twice(&v[0])?, twice(&v[1])?)?)
}

#[derive(Serialize)]
struct ClassifiedOut {
    #[serde(flatten)]
    element: ElementOut,
    passes: bool,
}

#[derive(Serialize)]
struct ClassifyOut {
    mu: Vec<i64>,
    lambda: Vec<String>,
    reading: Reading,
    union_nonempty: bool,
    in_bgmu: bool,
    conjectural: bool,
    elements: Vec<ClassifiedOut>,
}

fn reading(r: Reading) -> HyperbolicReading {
    match r {
        Reading::Either => HyperbolicReading::EitherOrder,
        Reading::Dominant => HyperbolicReading::Dominant,
    }
}

fn classify(a: &ClassifyArgs, f: Format) -> Res<Outcome> {
    let aw = ExtAffineWeyl::new(RootDatum::gl(2)?);
    let lam = slope_class(&a.lambda)?;
    let mu = &a.mu.0;
    let adm = admperm::adm(&aw, mu)?;
    let mut elements = Vec::new();
    for w in &adm {
        elements.push(ClassifiedOut {
            element: ElementOut::new(&aw, w),
            passes: adlv::xw_nonempty_gl2_with(&aw, &lam, w, reading(a.reading))?,
        });
    }
    let verdict = adlv::x_mu_b_nonempty(&aw.rd, mu, &lam.sigma_class(&aw.rd)?)?;
    let union_nonempty = elements.iter().any(|e| e.passes);
    let out = ClassifyOut {
        mu: mu.clone(),
        lambda: lam.slopes().iter().map(q_to_string).collect(),
        reading: a.reading,
        union_nonempty,
        in_bgmu: verdict.nonempty,
        conjectural: verdict.conjectural,
        elements,
    };
    let text = match f {
        Format::Json => json(&out)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                label: &'a str,
                length: usize,
                kappa: i64,
                passes: bool,
            }
            csv_rows(out.elements.iter().map(|e| Row {
                label: &e.element.label,
                length: e.element.length,
                kappa: e.element.kappa,
                passes: e.passes,
            }))?
        }
        Format::Dot => return no_format("adlv-classify", f),
    };
    Ok(Outcome {
        text,
        verified: union_nonempty == verdict.nonempty,
    })
}

#[derive(Serialize)]
struct GridRowOut {
    mu: String,
    lambda: String,
    adm_size: usize,
    passing: String,
    passing_dominant_reading: String,
    union_nonempty: bool,
    in_bgmu: bool,
    kappa_ok: bool,
    translation_ok: bool,
    coherent: bool,
}

#[derive(Serialize)]
struct GridOut {
    mu_bound: i64,
    lambda_bound: i64,
    rows: Vec<GridRowOut>,
    incoherent: usize,
}

fn labels(xs: &[ExtAffWeylElem]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn grid(a: &GridArgs, f: Format) -> Res<Outcome> {
    if a.mu_bound < 0 || a.lambda_bound < 0 {
        return usage("bounds must be non-negative");
    }
    let aw = ExtAffineWeyl::new(RootDatum::gl(2)?);
    let rows: Vec<GridRowOut> = adlv::gl2_grid(&aw, a.mu_bound, a.lambda_bound)?
        .iter()
        .map(|r| GridRowOut {
            mu: join(&r.mu),
            lambda: r.lambda.label(),
            adm_size: r.adm.len(),
            passing: labels(&r.passing),
            passing_dominant_reading: labels(&r.passing_alt),
            union_nonempty: r.union_nonempty,
            in_bgmu: r.in_bgmu,
            kappa_ok: r.kappa_ok,
            translation_ok: r.translation_ok,
            coherent: r.coherent(),
        })
        .collect();
    let incoherent = rows.iter().filter(|r| !r.coherent).count();
    let text = match f {
        Format::Json => json(&GridOut {
            mu_bound: a.mu_bound,
            lambda_bound: a.lambda_bound,
            rows,
            incoherent,
        })?,
        Format::Csv => csv_rows(rows.iter())?,
        Format::Dot => return no_format("adlv-grid", f),
    };
    Ok(Outcome {
        text,
        verified: incoherent == 0,
    })
}

fn require_gl_rank(n: usize) -> Res<ExtAffineWeyl> {
    Ok(ExtAffineWeyl::new(RootDatum::new(GroupKind::Gl, n)?))
}

#[derive(Serialize)]
struct InvwOut {
    n: usize,
    q: u32,
    g: String,
    h: String,
    iwahori: ElementOut,
    hyperspecial: Vec<i64>,
}

fn invw(a: &InvwArgs, f: Format) -> Res<Outcome> {
    let aw = require_gl_rank(a.n)?;
    let field = Gf::extension(a.q, 1)?;
    let g = fforacle::parse_bspec(&a.g, a.n)?;
    let h = fforacle::parse_bspec(&a.h, a.n)?;
    let x = fforacle::inv_iwahori(&field, &aw, &g, &h)?;
    let hs = fforacle::inv_hyperspecial(&field, &g, &h)?;
    let out = InvwOut {
        n: a.n,
        q: a.q,
        g: a.g.clone(),
        h: a.h.clone(),
        iwahori: ElementOut::new(&aw, &x),
        hyperspecial: hs,
    };
    match f {
        Format::Json => ok(json(&out)?),
        Format::Csv => ok(csv_rows([ElementRow::from(&out.iwahori)])?),
        Format::Dot => no_format("oracle-invw", f),
    }
}

/// Parses `t=1,0;w=2,1`.
pub fn parse_element(aw: &ExtAffineWeyl, s: &str) -> alcovelab::Result<ExtAffWeylElem> {
    let bad = || alcovelab::Error::InvalidInput(format!("element `{s}`: expected t=a,b,..;w=i,j,.."));
    let mut t = None;
    let mut w = None;
    for part in s.split(';') {
        let (key, val) = part.split_once('=').ok_or_else(bad)?;
        let ints: Vec<i64> = val
            .split(',')
            .map(|v| v.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match key.trim() {
            "t" => t = Some(ints),
            "w" => w = Some(ints.iter().map(|&v| v as i32).collect::<Vec<i32>>()),
            _ => return Err(bad()),
        }
    }
    let len = aw.rd.full_len();
    let x = ExtAffWeylElem {
        t: t.unwrap_or_else(|| vec![0; len]),
        w: w.map(|img| FiniteWeylElem { img }).unwrap_or_else(|| FiniteWeylElem::identity(len)),
    };
    aw.check(&x)?;
    Ok(x)
}

#[derive(Serialize)]
struct WitnessOut {
    m: u32,
    field_size: u32,
    cell: String,
    word: Vec<usize>,
    coords: Vec<String>,
    g: Vec<Vec<String>>,
    realized: ElementOut,
    realized_hyperspecial: Vec<i64>,
    phi_stable: bool,
}

#[derive(Serialize)]
struct SearchOut {
    n: usize,
    b: String,
    target: String,
    level: LevelArg,
    q: u32,
    m_max: u32,
    depth: usize,
    found: bool,
    exhaustive: bool,
    points_scanned: u64,
    witness: Option<WitnessOut>,
    expectation_met: Option<bool>,
}

fn search(a: &SearchArgs, f: Format) -> Res<Outcome> {
    let aw = require_gl_rank(a.n)?;
    let b = fforacle::parse_bspec(&a.b, a.n)?;
    let params = SearchParams {
        q: a.q,
        m_max: a.m_max,
        depth: a.depth,
    };
    let (target, label, r) = match (&a.w, &a.mu) {
        (Some(ws), _) => {
            let w = parse_element(&aw, ws)?;
            let r = fforacle::search_xw(&aw, &w, &b, &params)?;
            (Target::Exact(w.clone()), w.to_string(), r)
        }
        (None, Some(mu)) => {
            let level = match a.level {
                LevelArg::Iwahori => Level::Iwahori,
                LevelArg::Hyperspecial => Level::Hyperspecial,
            };
            let r = fforacle::search_xmub(&aw, &mu.0, &b, level, &params)?;
            let target = match level {
                Level::Iwahori => Target::InSet(admperm::adm(&aw, &mu.0)?.into_iter().collect()),
                Level::Hyperspecial => Target::Hyperspecial(aw.rd.dominant_rep(&mu.0)?.0),
            };
            (target, format!("mu={mu}"), r)
        }
        (None, None) => return usage("oracle-search needs --w or --mu"),
    };
    let witness = match &r.found {
        Some(wit) => Some(WitnessOut {
            m: wit.m,
            field_size: wit.field.size,
            cell: wit.cell.to_string(),
            word: wit.word.clone(),
            coords: wit.coords.iter().map(|&c| wit.field.format(c)).collect(),
            g: wit.g.format(&wit.field),
            realized: ElementOut::new(&aw, &wit.realized),
            realized_hyperspecial: wit.realized_hyperspecial.clone(),
            phi_stable: fforacle::verify_phi_stability(&aw, &b, a.q, wit, &target)?,
        }),
        None => None,
    };
    let found = witness.is_some();
    let expectation_met = a.expect.map(|e| match e {
        Expect::Found => found,
        Expect::Empty => !found && r.exhaustive,
    });
    let verified = expectation_met.unwrap_or(true) && witness.as_ref().is_none_or(|w| w.phi_stable);
    let out = SearchOut {
        n: a.n,
        b: a.b.clone(),
        target: label,
        level: a.level,
        q: a.q,
        m_max: a.m_max,
        depth: a.depth,
        found,
        exhaustive: r.exhaustive,
        points_scanned: r.points_scanned,
        witness,
        expectation_met,
    };
    let text = match f {
        Format::Json => json(&out)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                b: &'a str,
                target: &'a str,
                found: bool,
                exhaustive: bool,
                points_scanned: u64,
            }
            csv_rows([Row {
                b: &out.b,
                target: &out.target,
                found,
                exhaustive: out.exhaustive,
                points_scanned: out.points_scanned,
            }])?
        }
        Format::Dot => return no_format("oracle-search", f),
    };
    Ok(Outcome { text, verified })
}

#[derive(Serialize)]
struct PerQ {
    q: u32,
    count: u64,
    predicted: Option<u64>,
}

#[derive(Serialize)]
struct PolyOut {
    coeffs: Vec<i64>,
    degree: usize,
    degree_bound: usize,
    integral: bool,
}

#[derive(Serialize)]
struct LocalOut {
    group: Group,
    n: usize,
    r: usize,
    chain: Vec<usize>,
    q: u32,
    count: u64,
    predicted: Option<u64>,
    #[serde(rename = "match")]
    matches: Option<bool>,
    per_q: Vec<PerQ>,
    polynomial: Option<PolyOut>,
}

fn local(a: &LocalArgs, f: Format) -> Res<Outcome> {
    if a.chain.0.iter().any(|&i| i < 0) {
        return usage("--chain entries must be non-negative");
    }
    let chain: Vec<usize> = a.chain.0.iter().map(|&i| i as usize).collect();
    let cfg = match a.group.group {
        Group::Gl => {
            let Some(r) = a.r else {
                return usage("--r is required for gl");
            };
            ChainConfig::gl(a.group.n, r, &chain, a.q)?
        }
        Group::Gsp => {
            if a.r.is_some_and(|r| r != a.group.n) {
                return usage("gsp local models have r = n");
            }
            ChainConfig::gsp(a.group.n, &chain, a.q)?
        }
    };
    let mut qs: Vec<u32> = vec![a.q];
    if let Some(extra) = &a.qs {
        for &v in &extra.0 {
            if v < 2 || v > u32::MAX as i64 {
                return usage(format!("field size {v} out of range"));
            }
            if !qs.contains(&(v as u32)) {
                qs.push(v as u32);
            }
        }
    }
    let mut per_q = Vec::new();
    for &qv in &qs {
        let c = cfg.with_q(qv)?;
        per_q.push(PerQ {
            q: qv,
            count: localmodel::count(&c)?,
            predicted: localmodel::predicted_for(&c)?,
        });
    }
    let polynomial = if a.qs.is_some() {
        let pts: Vec<(i64, i64)> = per_q.iter().map(|p| (p.q as i64, p.count as i64)).collect();
        let c = localmodel::fit_polynomial(&pts)?;
        Some(PolyOut {
            degree: c.len() - 1,
            integral: c.iter().all(|x| x.is_integer()),
            coeffs: c
                .iter()
                .map(|x| i64::try_from(x.to_integer()).unwrap_or(i64::MAX))
                .collect(),
            degree_bound: cfg.generic_dim(),
        })
    } else {
        None
    };
    let all_match = per_q.iter().all(|p| p.predicted.is_none_or(|v| v == p.count));
    let head = &per_q[0];
    let out = LocalOut {
        group: a.group.group,
        n: a.group.n,
        r: cfg.r,
        chain: cfg.chain.clone(),
        q: a.q,
        count: head.count,
        predicted: head.predicted,
        matches: head.predicted.map(|p| p == head.count),
        polynomial,
        per_q,
    };
    let text = match f {
        Format::Json => json(&out)?,
        Format::Csv => csv_rows(out.per_q.iter())?,
        Format::Dot => return no_format("localmodel-count", f),
    };
    Ok(Outcome {
        text,
        verified: all_match,
    })
}

#[derive(Serialize)]
struct CriterionOut {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct FixturesOut {
    passed: usize,
    failed: usize,
    criteria: Vec<CriterionOut>,
}

fn fixtures(f: Format) -> Res<Outcome> {
    let criteria: Vec<CriterionOut> = acceptance::run_all()
        .into_iter()
        .map(|v| CriterionOut {
            id: v.id,
            name: v.name,
            pass: v.pass,
            detail: v.detail,
        })
        .collect();
    let failed = criteria.iter().filter(|c| !c.pass).count();
    let text = match f {
        Format::Json => json(&FixturesOut {
            passed: criteria.len() - failed,
            failed,
            criteria,
        })?,
        Format::Csv => csv_rows(criteria.iter())?,
        Format::Dot => return no_format("fixtures-verify", f),
    };
    Ok(Outcome {
        text,
        verified: failed == 0,
    })
}
