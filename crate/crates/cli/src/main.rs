use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use secantlab::groebner::{parse_ideal_text, Budget};
use secantlab::hilbert::dim_degree_in;
use secantlab::modres::{free_resolution, graded_depth};
use secantlab::oracle::{predict, verify, VarietyDescriptor};
use secantlab::poly::{Field, MonomialOrder};
use secantlab::report::Report;
use secantlab::variety::{
    depth_at, implicitize, multiplicity_at, plane_curve_embed, projectively_empty, rational_normal_curve,
    read_fixture, same_radical, secant_join, singular_locus, veronese, write_fixture, EmbeddedVariety,
    PointOnVariety,
};
use secantlab::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "secantlab", version, about = "Secant varieties, resolutions and singularity invariants")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct RunConfig {
    /// Coefficient field: `qq` or `fp:<p>`. Defaults to the input's field.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Order for Hilbert computations: grevlex, lex, elim:<k>, weight:<w,..>.
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Seconds; must be positive.
    #[arg(long, global = true, env = "SECANTLAB_TIMEOUT")]
    timeout: Option<f64>,
    #[arg(long, global = true)]
    json: bool,
    /// Directory searched for bare fixture names.
    #[arg(long, global = true, default_value = "fixtures")]
    fixture_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Family {
    Rnc,
    Veronese,
    PlaneCurveEmbed,
    FromFile,
}

#[derive(Subcommand)]
enum Command {
    /// Write a variety fixture (`.ideal` plus `.meta.json`).
    Construct {
        family: Family,
        /// `d` for rnc, `k` for veronese, an ideal file for the file-based families.
        param: String,
        /// Embedding degree for plane-curve-embed.
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Run pipeline stages on a fixture.
    Analyze {
        fixture: String,
        /// Comma-separated subset of secant,dim,degree,singlocus,betti,depth,mult.
        #[arg(long, default_value = "dim,degree")]
        tasks: String,
        /// Homogeneous coordinates, e.g. `1,0,0,0,0`.
        #[arg(long)]
        point: Option<String>,
    },
    /// Print the oracle's verdict for a descriptor (JSON text or a file).
    Predict { descriptor: String },
    /// Compare the oracle's verdict with computations on a fixture.
    Verify {
        descriptor: String,
        fixture: String,
        #[arg(long)]
        point: String,
    },
}

fn input_error(msg: impl Into<String>) -> Error {
    Error::contract(msg)
}

impl RunConfig {
    fn field(&self) -> Result<Option<Field>, Error> {
        match &self.field {
            None => Ok(None),
            Some(s) => s.parse().map(Some),
        }
    }

    fn order(&self) -> Result<MonomialOrder, Error> {
        self.order.parse()
    }

    fn budget(&self) -> Result<Budget, Error> {
        let b = match self.timeout {
            None => Budget::unlimited(),
            Some(t) if t > 0.0 && t.is_finite() => Budget::with_timeout(Duration::from_secs_f64(t)),
            Some(_) => return Err(input_error("timeout must be positive")),
        };
        Ok(b.degree_cap(self.degree_cap))
    }

    fn fixture_path(&self, name: &str) -> PathBuf {
        let p = Path::new(name);
        if p.exists() {
            return p.to_path_buf();
        }
        let with_ext = self.fixture_dir.join(format!("{name}.ideal"));
        if with_ext.exists() {
            with_ext
        } else {
            self.fixture_dir.join(name)
        }
    }

    fn load(&self, name: &str) -> Result<(EmbeddedVariety, String), Error> {
        let path = self.fixture_path(name);
        let text = fs::read_to_string(&path)?;
        let fx = read_fixture(&path)?;
        let x = match self.field()? {
            Some(f) if f != fx.variety.ring().field() => fx.variety.change_field(f)?,
            _ => fx.variety,
        };
        Ok((x, text))
    }
}

fn read_descriptor(arg: &str) -> Result<(VarietyDescriptor, String), Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)?
    };
    let d: VarietyDescriptor = serde_json::from_str(&text)?;
    d.validate()?;
    Ok((d, text))
}

fn emit(cfg: &RunConfig, report: &Report) {
    if cfg.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn report_exit(report: &Report) -> u8 {
    if report.has_failure() {
        EXIT_FAIL
    } else if report.items.iter().any(|i| i.note.as_deref().is_some_and(|n| n.starts_with("budget"))) {
        EXIT_BUDGET
    } else {
        0
    }
}

fn construct(
    cfg: &RunConfig,
    family: Family,
    param: &str,
    k: u32,
    out: &Path,
    name: Option<&str>,
) -> Result<u8, Error> {
    let field = cfg.field()?.unwrap_or(Field::Prime(secantlab::poly::DEFAULT_PRIME));
    let budget = cfg.budget()?;
    let parse_int = |s: &str| s.parse::<u32>().map_err(|_| input_error(format!("expected an integer, got `{s}`")));
    let (x, stem) = match family {
        Family::Rnc => {
            let d = parse_int(param)?;
            (implicitize(&rational_normal_curve(d as usize, field)?, &budget)?, format!("C{d}"))
        }
        Family::Veronese => {
            let k = parse_int(param)?;
            (implicitize(&veronese(k, field)?, &budget)?, format!("V{k}"))
        }
        Family::PlaneCurveEmbed => {
            let file = parse_ideal_text(&fs::read_to_string(cfg.fixture_path(param))?)?;
            let ideal = file.ideal.change_field(field)?;
            if ideal.gens().len() != 1 {
                return Err(input_error("plane curve file must hold exactly one generator"));
            }
            let stem = Path::new(param)
                .file_stem()
                .map_or("curve".to_string(), |s| s.to_string_lossy().into_owned());
            (plane_curve_embed(&ideal.gens()[0], k, &budget)?, format!("{stem}_k{k}"))
        }
        Family::FromFile => {
            let fx = read_fixture(&cfg.fixture_path(param))?;
            let x = match cfg.field()? {
                Some(f) => fx.variety.change_field(f)?,
                None => fx.variety,
            };
            let stem = Path::new(param)
                .file_stem()
                .map_or("fixture".to_string(), |s| s.to_string_lossy().into_owned());
            (x, stem)
        }
    };
    let path = write_fixture(out, name.unwrap_or(&stem), &x)?;
    if cfg.json {
        println!("{}", json!({"ideal": path, "meta": x.meta, "generators": x.ideal.gens().len()}));
    } else {
        println!("{}", path.display());
    }
    Ok(0)
}

const TASKS: [&str; 7] = ["secant", "dim", "degree", "singlocus", "betti", "depth", "mult"];

fn analyze(cfg: &RunConfig, fixture: &str, tasks: &str, point: Option<&str>, argv: Vec<String>) -> Result<u8, Error> {
    let tasks: Vec<&str> = tasks.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    if let Some(bad) = tasks.iter().find(|t| !TASKS.contains(t)) {
        return Err(input_error(format!("unknown task `{bad}`")));
    }
    let want = |t: &str| tasks.contains(&t);
    let (x, text) = cfg.load(fixture)?;
    let budget = cfg.budget()?;
    let order = cfg.order()?;
    let field = x.ring().field();
    let pt = match point {
        Some(p) => Some(PointOnVariety::parse(field, p)?),
        None if want("mult") => return Err(input_error("task mult needs --point")),
        None => None,
    };
    let mut report = Report::new(argv, &[&text, point.unwrap_or("")]);

    // stages run on the secant variety when it is requested
    let target = if want("secant") {
        match secant_join(&x, &budget) {
            Ok(s) => {
                report.record("secant_generators", json!(s.ideal.gens().len()));
                s
            }
            Err(e) if e.is_budget() => {
                report.skip("secant", None, format!("budget exhausted: {e}"));
                emit(cfg, &report);
                return Ok(EXIT_BUDGET);
            }
            Err(e) => return Err(e),
        }
    } else {
        x.clone()
    };

    let mut budget_hit = false;
    let mut stage = |report: &mut Report, name: &str, f: &mut dyn FnMut() -> Result<serde_json::Value, Error>| match f() {
        Ok(v) => report.record(name, v),
        Err(e) if e.is_budget() => {
            budget_hit = true;
            report.skip(name, None, format!("budget exhausted: {e}"));
        }
        Err(e) => report.fail(name, None, e.to_string()),
    };

    if want("dim") || want("degree") {
        stage(&mut report, "hilbert", &mut || Ok(dim_degree_in(&target.ideal, &order, &budget)?.to_json()));
        if let Some(h) = report.item("hilbert").and_then(|i| i.computed.clone()) {
            if want("dim") {
                report.record("dim", h["dim"].clone());
            }
            if want("degree") {
                report.record("degree", h["degree"].clone());
            }
        }
    }
    if want("betti") {
        stage(&mut report, "betti", &mut || {
            let r = free_resolution(&target.ideal, true, &budget)?;
            Ok(json!({
                "betti": r.betti().triples(),
                "pd": r.pd(),
                "depth": r.nvars - r.pd(),
            }))
        });
    }
    if want("depth") {
        stage(&mut report, "graded_depth", &mut || {
            let d = graded_depth(&target.ideal, &budget)?;
            let h = dim_degree_in(&target.ideal, &MonomialOrder::Grevlex, &budget)?;
            Ok(json!({"depth": d, "krull_dim": h.krull_dim, "acm": d == h.krull_dim}))
        });
        if let Some(p) = &pt {
            stage(&mut report, "depth_at_point", &mut || Ok(json!(depth_at(&target, p, &budget)?)));
        }
    }
    if want("singlocus") {
        stage(&mut report, "singular_locus", &mut || {
            let sl = singular_locus(&target.ideal, None, &budget)?;
            let mut out = json!({"codim": sl.codim, "minors": sl.minors});
            if want("secant") {
                out["equals_X"] = json!(same_radical(&sl.ideal, &x.ideal, &budget)?);
            } else {
                out["empty"] = json!(projectively_empty(&sl.ideal, &budget)?);
            }
            Ok(out)
        });
    }
    if want("mult") {
        let p = pt.as_ref().unwrap();
        stage(&mut report, "multiplicity", &mut || Ok(json!(multiplicity_at(&target, p, &budget)?)));
    }
    if let Ok(gb) = target.ideal.groebner(&MonomialOrder::Grevlex, &budget) {
        report.stats.absorb(&gb.stats);
    }
    emit(cfg, &report);
    Ok(if report.has_failure() {
        EXIT_FAIL
    } else if budget_hit {
        EXIT_BUDGET
    } else {
        0
    })
}

fn run(cli: Cli, argv: Vec<String>) -> Result<u8, Error> {
    let cfg = &cli.config;
    cfg.budget()?;
    cfg.order()?;
    cfg.field()?;
    match &cli.cmd {
        Command::Construct {
            family,
            param,
            k,
            out,
            name,
        } => construct(cfg, *family, param, *k, out, name.as_deref()),
        Command::Analyze { fixture, tasks, point } => analyze(cfg, fixture, tasks, point.as_deref(), argv),
        Command::Predict { descriptor } => {
            let (d, _) = read_descriptor(descriptor)?;
            let v = predict(&d)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(0)
        }
        Command::Verify {
            descriptor,
            fixture,
            point,
        } => {
            let (d, _) = read_descriptor(descriptor)?;
            let (x, _) = cfg.load(fixture)?;
            let pt = PointOnVariety::parse(x.ring().field(), point)?;
            let mut report = verify(&d, &x, &pt, &cfg.budget()?)?;
            report.command = argv;
            emit(cfg, &report);
            Ok(report_exit(&report))
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli, argv) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { EXIT_BUDGET } else { EXIT_INPUT })
        }
    }
}
