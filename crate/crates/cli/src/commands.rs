use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use racb_core::auto::{check_far_wing_fixator, verify_fixed_point_theorem, MovingWitness};
use racb_core::building::{Building, Chamber};
use racb_core::coxeter::{
    enumerate_reps, firm_rearrangement, firmness, firmness_witness_position, word_poset,
    CoxeterDiagram, Word,
};
use racb_core::flex::{flex_set, verify_flex_theorem};
use racb_core::lab::{d_of, k_of, max_bounded_chain_sequence, DEFAULT_LAB_CAP};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::{Command, Format, Opts};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] racb_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Core(racb_core::Error::CapExceeded { .. }) => 3,
            CliError::Core(racb_core::Error::Inconsistent(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Computed,
    Verified,
    Falsified,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Computed | Outcome::Verified => 0,
            Outcome::Falsified => 1,
        }
    }

    fn verdict(ok: bool) -> Self {
        if ok {
            Outcome::Verified
        } else {
            Outcome::Falsified
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn command_name(cmd: Command) -> &'static str {
    match cmd {
        Command::Firmness => "firmness",
        Command::Reps => "reps",
        Command::Poset => "poset",
        Command::Dn => "dn",
        Command::Fb => "fb",
        Command::Kw => "kw",
        Command::Ball => "ball",
        Command::Flex => "flex",
        Command::VerifyFlex => "verify-flex",
        Command::Fixedpoint => "fixedpoint",
        Command::FarWing => "far-wing",
    }
}

/// What a command produced: the JSON body, an optional non-JSON rendering
/// for stdout, and a one-line summary for stderr.
struct Output {
    body: Map<String, Value>,
    rendered: Option<String>,
    summary: String,
    outcome: Outcome,
}

impl Output {
    fn new(body: Value, summary: String, outcome: Outcome) -> Self {
        let Value::Object(body) = body else {
            unreachable!("command bodies are objects")
        };
        Output { body, rendered: None, summary, outcome }
    }
}

struct Ctx<'a> {
    opts: &'a Opts,
    diagram: CoxeterDiagram,
    cap: usize,
}

impl Ctx<'_> {
    fn building(&self) -> CliResult<Building> {
        let b = Building::new(self.diagram.clone())?;
        Ok(match self.opts.cap {
            Some(cap) => b.with_cap(cap),
            None => b,
        })
    }

    fn word(&self) -> CliResult<Word> {
        let text = require(&self.opts.word, "--word")?;
        Ok(Word::parse(&self.diagram, text)?)
    }

    fn chamber(&self, b: &Building, text: Option<&String>) -> CliResult<Chamber> {
        Ok(b.parse_chamber(text.map(String::as_str).unwrap_or(""))?)
    }
}

fn require<'a, T>(value: &'a Option<T>, flag: &str) -> CliResult<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("missing required flag {flag}")))
}

pub fn run(cmd: Command, opts: &Opts) -> CliResult<Outcome> {
    let path = require(&opts.diagram, "--diagram")?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let diagram = CoxeterDiagram::from_json(&text)?;
    let hash = hex::encode(Sha256::digest(diagram.to_json().as_bytes()));
    let ctx = Ctx {
        opts,
        diagram,
        cap: opts.cap.unwrap_or(DEFAULT_LAB_CAP),
    };
    if opts.format == Format::Dot && cmd != Command::Ball {
        return Err(CliError::Usage("--format dot is only available for ball".into()));
    }
    if opts.format == Format::Csv && !matches!(cmd, Command::Ball | Command::Flex) {
        return Err(CliError::Usage("--format csv is only available for ball and flex".into()));
    }

    let out = match cmd {
        Command::Firmness => cmd_firmness(&ctx)?,
        Command::Reps => cmd_reps(&ctx)?,
        Command::Poset => cmd_poset(&ctx)?,
        Command::Dn => cmd_dn(&ctx)?,
        Command::Fb => cmd_fb(&ctx)?,
        Command::Kw => cmd_kw(&ctx)?,
        Command::Ball => cmd_ball(&ctx)?,
        Command::Flex => cmd_flex(&ctx)?,
        Command::VerifyFlex => cmd_verify_flex(&ctx)?,
        Command::Fixedpoint => cmd_fixedpoint(&ctx)?,
        Command::FarWing => cmd_far_wing(&ctx)?,
    };

    let mut report = Map::new();
    report.insert("command".into(), json!(command_name(cmd)));
    report.insert("diagram_sha256".into(), json!(hash));
    report.insert("params".into(), params(opts));
    report.extend(out.body);
    let json_text = serde_json::to_string_pretty(&Value::Object(report.clone()))
        .expect("report serializes")
        + "\n";

    if let Some(path) = &opts.report {
        write_file(path, &json_text)?;
    }
    match (opts.format, out.rendered) {
        (Format::Json, _) => print!("{json_text}"),
        (_, Some(rendered)) => print!("{rendered}"),
        (_, None) => print!("{}", render_text(&report)),
    }
    eprintln!("{}: {}", command_name(cmd), out.summary);
    Ok(out.outcome)
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Parameter echo. Thread count and output paths are left out so that the
/// report depends only on the computation.
fn params(opts: &Opts) -> Value {
    let mut m = Map::new();
    let mut put = |k: &str, v: Value| {
        if !v.is_null() {
            m.insert(k.into(), v);
        }
    };
    put("word", json!(opts.word));
    put("center", json!(opts.center));
    put("gate", json!(opts.gate));
    put("gen", json!(opts.gen));
    put("n", json!(opts.n));
    put("radius", json!(opts.radius));
    put("b", json!(opts.b));
    put("cap", json!(opts.cap));
    Value::Object(m)
}

/// `key: value` lines for the text format; nested values stay compact JSON.
fn render_text(report: &Map<String, Value>) -> String {
    let mut s = String::new();
    for (k, v) in report {
        match v {
            Value::String(t) => writeln!(s, "{k}: {t}").unwrap(),
            other => writeln!(s, "{k}: {other}").unwrap(),
        }
    }
    s
}

fn cmd_firmness(ctx: &Ctx) -> CliResult<Output> {
    let d = &ctx.diagram;
    let w = ctx.word()?;
    let poset = word_poset(d, &w)?;
    let relations: Vec<[usize; 2]> = poset.relations().into_iter().map(|(i, j)| [i, j]).collect();
    let mut i_sets = Vec::new();
    for i in 1..=poset.len() {
        i_sets.push(poset.i_set(i)?.into_iter().collect::<Vec<_>>());
    }
    let f = i_sets.iter().map(|s| s.len() + 1).max().unwrap_or(0);
    let witness = if w.is_empty() {
        Value::Null
    } else {
        let pos = firmness_witness_position(d, &w)?;
        let rearranged = firm_rearrangement(d, &w, pos)?;
        json!({
            "position": pos,
            "rearrangement": rearranged.to_text(d),
            "firm_prefix": Word::from(rearranged.letters()[..f].to_vec()).to_text(d),
        })
    };
    let summary = format!("F# = {f} for `{}`", w.to_text(d));
    Ok(Output::new(
        json!({
            "word": w.to_text(d),
            "length": w.len(),
            "F": f,
            "firm": !w.is_empty() && racb_core::coxeter::reduce(d, &w)?.descents(d).len() == 1,
            "relations": relations,
            "i_sets": i_sets,
            "witness": witness,
        }),
        summary,
        Outcome::Computed,
    ))
}

fn cmd_reps(ctx: &Ctx) -> CliResult<Output> {
    let d = &ctx.diagram;
    let w = ctx.word()?;
    let reps: Vec<String> = enumerate_reps(d, &w)?.iter().map(|r| r.to_text(d)).collect();
    let summary = format!("{} reduced representations", reps.len());
    Ok(Output::new(
        json!({ "word": w.to_text(d), "count": reps.len(), "reps": reps }),
        summary,
        Outcome::Computed,
    ))
}

fn cmd_poset(ctx: &Ctx) -> CliResult<Output> {
    let d = &ctx.diagram;
    let w = ctx.word()?;
    let poset = word_poset(d, &w)?;
    let relations: Vec<[usize; 2]> = poset.relations().into_iter().map(|(i, j)| [i, j]).collect();
    let letters: Vec<&str> = w.letters().iter().map(|&s| d.name(s)).collect();
    let summary = format!("{} relations on {} positions", relations.len(), w.len());
    Ok(Output::new(
        json!({ "word": w.to_text(d), "letters": letters, "relations": relations }),
        summary,
        Outcome::Computed,
    ))
}

fn cmd_dn(ctx: &Ctx) -> CliResult<Output> {
    let n = *require(&ctx.opts.n, "--n")?;
    let bound = d_of(&ctx.diagram, n, ctx.cap)?;
    let summary = format!("d({n}) = {}", bound.d);
    Ok(Output::new(
        json!({ "n": bound.n, "d": bound.d, "checked_up_to_length": bound.checked_up_to_length }),
        summary,
        Outcome::Computed,
    ))
}

fn cmd_fb(ctx: &Ctx) -> CliResult<Output> {
    let d = &ctx.diagram;
    let b = *require(&ctx.opts.b, "--b")?;
    let res = max_bounded_chain_sequence(d, b, ctx.cap)?;
    let witness = Word::from(res.witness.steps.clone()).to_text(d);
    let summary = format!("f({b}) = {}", res.length);
    Ok(Output::new(
        json!({ "b": b, "f": res.length, "witness": witness }),
        summary,
        Outcome::Computed,
    ))
}

fn cmd_kw(ctx: &Ctx) -> CliResult<Output> {
    let d = &ctx.diagram;
    let w = ctx.word()?;
    let g = racb_core::coxeter::reduce(d, &w)?;
    if g.length() != w.len() {
        return Err(racb_core::Error::NotReduced { word: w.to_text(d), reduced: g.to_text(d) }.into());
    }
    let k = k_of(d, &g, ctx.cap)?;
    let summary = format!("k = {k}");
    Ok(Output::new(
        json!({ "word": g.to_text(d), "F": firmness(d, &g), "k": k }),
        summary,
        Outcome::Computed,
    ))
}

fn chamber_rows(b: &Building, c0: &Chamber, chambers: &[Chamber]) -> Vec<Value> {
    chambers
        .iter()
        .map(|c| json!({ "chamber": b.format_chamber(c), "distance": b.gallery_distance(c0, c) }))
        .collect()
}

fn csv(b: &Building, c0: &Chamber, chambers: &[Chamber]) -> String {
    let mut s = String::from("chamber,distance\n");
    for c in chambers {
        writeln!(s, "\"{}\",{}", b.format_chamber(c), b.gallery_distance(c0, c)).unwrap();
    }
    s
}

fn dot(b: &Building, chambers: &[Chamber]) -> String {
    let index: std::collections::BTreeMap<&Chamber, usize> =
        chambers.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut s = String::from("graph ball {\n");
    for (i, c) in chambers.iter().enumerate() {
        writeln!(s, "  c{i} [label=\"{}\"];", b.format_chamber(c)).unwrap();
    }
    let mut edges = BTreeSet::new();
    for (i, c) in chambers.iter().enumerate() {
        for t in b.diagram().generators() {
            for y in b.panel(c, t) {
                if let Some(&j) = index.get(&y) {
                    if i < j {
                        edges.insert((i, j, t));
                    }
                }
            }
        }
    }
    for (i, j, t) in edges {
        writeln!(s, "  c{i} -- c{j} [label=\"{}\"];", b.diagram().name(t)).unwrap();
    }
    s.push_str("}\n");
    s
}

fn cmd_ball(ctx: &Ctx) -> CliResult<Output> {
    let b = ctx.building()?;
    let c0 = ctx.chamber(&b, ctx.opts.center.as_ref())?;
    let radius = *require(&ctx.opts.radius, "--radius")?;
    let ball = b.ball(&c0, radius)?;
    let summary = format!("{} chambers within distance {radius}", ball.len());
    let mut out = Output::new(
        json!({ "size": ball.len(), "chambers": chamber_rows(&b, &c0, &ball) }),
        summary,
        Outcome::Computed,
    );
    out.rendered = match ctx.opts.format {
        Format::Dot => Some(dot(&b, &ball)),
        Format::Csv => Some(csv(&b, &c0, &ball)),
        _ => None,
    };
    Ok(out)
}

fn cmd_flex(ctx: &Ctx) -> CliResult<Output> {
    let b = ctx.building()?;
    let c0 = ctx.chamber(&b, ctx.opts.center.as_ref())?;
    let n = *require(&ctx.opts.n, "--n")?;
    let radius = *require(&ctx.opts.radius, "--radius")?;
    let flex = flex_set(&b, &c0, n, radius)?;
    let summary = format!("|Flex(c0, {n})| = {}", flex.len());
    let mut out = Output::new(
        json!({ "size": flex.len(), "chambers": chamber_rows(&b, &c0, &flex) }),
        summary,
        Outcome::Computed,
    );
    if ctx.opts.format == Format::Csv {
        out.rendered = Some(csv(&b, &c0, &flex));
    }
    Ok(out)
}

fn chamber_list(b: &Building, xs: &[Chamber]) -> Vec<String> {
    xs.iter().map(|c| b.format_chamber(c)).collect()
}

fn cmd_verify_flex(ctx: &Ctx) -> CliResult<Output> {
    let b = ctx.building()?;
    let c0 = ctx.chamber(&b, ctx.opts.center.as_ref())?;
    let n = *require(&ctx.opts.n, "--n")?;
    let radius = *require(&ctx.opts.radius, "--radius")?;
    let r = verify_flex_theorem(&b, &c0, n, radius)?;
    let summary = format!(
        "closure {} vs flex {}: {}",
        r.closure_size,
        r.flex_size,
        if r.passed() { "equal" } else { "DIFFERENT" }
    );
    Ok(Output::new(
        json!({
            "equal": r.equal,
            "within_bound": r.within_bound,
            "passed": r.passed(),
            "flex_size": r.flex_size,
            "closure_size": r.closure_size,
            "max_distance": r.max_distance,
            "d_of_n": r.d_of_n,
            "only_in_closure": chamber_list(&b, &r.only_in_closure),
            "only_in_flex": chamber_list(&b, &r.only_in_flex),
        }),
        summary,
        Outcome::verdict(r.passed()),
    ))
}

fn witness_json(b: &Building, w: &MovingWitness) -> Value {
    json!({
        "chamber": b.format_chamber(&w.chamber),
        "firm": b.format_chamber(&w.firm),
        "gate": b.format_chamber(&w.gate),
        "gen": b.diagram().name(w.gen),
        "theta": w.theta,
        "image": b.format_chamber(&w.image),
    })
}

fn cmd_fixedpoint(ctx: &Ctx) -> CliResult<Output> {
    let b = ctx.building()?;
    let c0 = ctx.chamber(&b, ctx.opts.center.as_ref())?;
    let n = *require(&ctx.opts.n, "--n")?;
    let radius = *require(&ctx.opts.radius, "--radius")?;
    let r = verify_fixed_point_theorem(&b, &c0, n, radius)?;
    let summary = format!(
        "{} generators, fixed {} / flex {} / ball {}: {}",
        r.generators,
        r.fixed_set_size,
        r.flex_size,
        r.ball_size,
        if r.passed() { "ok" } else { "FAILED" }
    );
    let witnesses: Vec<Value> = r.witnesses.iter().map(|w| witness_json(&b, w)).collect();
    Ok(Output::new(
        json!({
            "passed": r.passed(),
            "applicable": r.applicable(),
            "fixed_equals_flex": r.fixed_equals_flex,
            "flex_fixed": r.flex_fixed,
            "panels": r.panels,
            "generators": r.generators,
            "fixed_set_size": r.fixed_set_size,
            "flex_size": r.flex_size,
            "ball_size": r.ball_size,
            "flex_moved": chamber_list(&b, &r.flex_moved),
            "inapplicable": chamber_list(&b, &r.inapplicable),
            "missing": chamber_list(&b, &r.missing),
            "witnesses": witnesses,
        }),
        summary,
        Outcome::verdict(r.passed()),
    ))
}

fn cmd_far_wing(ctx: &Ctx) -> CliResult<Output> {
    let b = ctx.building()?;
    let c0 = ctx.chamber(&b, ctx.opts.center.as_ref())?;
    let e = ctx.chamber(&b, Some(require(&ctx.opts.gate, "--gate")?))?;
    let s = ctx.diagram.generator(require(&ctx.opts.gen, "--gen")?)?;
    let radius = *require(&ctx.opts.radius, "--radius")?;
    let holds = check_far_wing_fixator(&b, &c0, radius, &e, s)?;
    let summary = format!(
        "wing group at panel({}, {}) {} ball(c0, {radius})",
        b.format_chamber(&e),
        ctx.diagram.name(s),
        if holds { "fixes" } else { "does NOT fix" }
    );
    Ok(Output::new(json!({ "holds": holds }), summary, Outcome::verdict(holds)))
}
