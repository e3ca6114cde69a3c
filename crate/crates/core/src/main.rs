use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dp5::dp5::fixed::{fixed_curves, FixedCurveRecord};
use dp5::dp5::residual::{enumerate_fixed_quartics, line_index, residual_quartic};
use dp5::dp5::Dp5Model;
use dp5::hilbert::{hilbert_function, hilbert_polynomial};
use dp5::homspaces::tangent_dimensions;
use dp5::par::{set_execution, Execution};
use dp5::poly::{render_ideal, IdealText};
use dp5::properties::PropertyConfig;
use dp5::suite::{run_suite, Selector, SuiteOptions};
use dp5::{Error, Ideal, MonomialOrder, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

impl Order {
    fn monomial_order(self) -> MonomialOrder {
        match self {
            Order::Lex => MonomialOrder::Lex,
            Order::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dp5",
    version,
    about = "Exact ideal computations on the quintic del Pezzo threefold"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Term order for Gröbner bases and comparisons
    #[arg(long, value_enum, default_value = "grevlex", global = true)]
    order: Order,

    /// Upper end of the Hilbert function window
    #[arg(long, default_value_t = 8, global = true)]
    check_degree: u32,

    /// Run every parallel section on the calling thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification checks; exit status 0 iff all pass
    Suite {
        #[arg(default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Selector::NAMES))]
        selector: String,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = PropertyConfig::default().seed)]
        seed: u64,
        /// Randomized cases per property family
        #[arg(long, default_value_t = PropertyConfig::default().cases)]
        cases: usize,
    },
    /// Reduced Gröbner basis
    Gb { file: PathBuf },
    /// Hilbert polynomial and Hilbert function window
    Hp { file: PathBuf },
    /// Ideal quotient I : J
    Quotient { file: PathBuf, by: PathBuf },
    /// Saturation by J, or by the irrelevant ideal when J is omitted
    Saturate { file: PathBuf, by: Option<PathBuf> },
    /// Eliminate the named variables
    Eliminate {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
    },
    /// Containment relation between two ideals
    Compare { left: PathBuf, right: PathBuf },
    /// Tangent dimensions Hom(I, S/I)_0, optionally relative to I_X
    Tangent {
        file: PathBuf,
        #[arg(long)]
        within: Option<PathBuf>,
    },
    /// Torus-fixed curves of the given degree
    Fixed {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        degree: u32,
        /// Also compute tangent dimensions
        #[arg(long)]
        tangent: bool,
    },
    /// Residual quartic of a fixed line
    Residual {
        #[arg(long)]
        line: String,
        /// Two distinct positions among the line's five generators
        #[arg(long, value_delimiter = ',', required = true)]
        pick: Vec<usize>,
    },
}

fn read_ideal(path: &Path) -> Result<Ideal> {
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let parsed = IdealText::parse(&text)?;
    Ideal::new(&parsed.ring, parsed.gens)
}

fn read_pair(a: &Path, b: &Path) -> Result<(Ideal, Ideal)> {
    let i = read_ideal(a)?;
    let j = read_ideal(b)?;
    if i.context() != j.context() {
        return Err(Error::Invalid(format!(
            "{} and {} declare different rings",
            a.display(),
            b.display()
        )));
    }
    Ok((i, j))
}

fn ideal_json(i: &Ideal) -> serde_json::Value {
    json!({
        "ring": i.context().names(),
        "weights": i.context().weights(),
        "gens": i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn emit_ideal(format: Format, i: &Ideal) -> String {
    match format {
        Format::Text => render_ideal(i.context(), i.generators()),
        Format::Json => serde_json::to_string_pretty(&ideal_json(i)).expect("json"),
    }
}

fn record_json(r: &FixedCurveRecord) -> serde_json::Value {
    json!({
        "degree": r.degree,
        "provenance": r.provenance,
        "label": r.label,
        "hilbert_polynomial": r.hilbert.to_string(),
        "gens": r.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "tangent": r.tangent.map(|t| json!({"ambient": t.ambient, "relative": t.relative})),
    })
}

fn record_text(r: &FixedCurveRecord) -> String {
    let mut out = format!("# {}\n", r);
    out.push_str(&render_ideal(r.ideal.context(), r.ideal.generators()));
    out
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let order = cli.order.monomial_order();
    let fmt = cli.format;
    let out = match cli.command {
        Command::Suite {
            selector,
            output,
            seed,
            cases,
        } => {
            let selector: Selector = selector.parse()?;
            let opts = SuiteOptions {
                properties: PropertyConfig {
                    seed,
                    cases,
                    check_degree: cli.check_degree,
                },
            };
            let report = run_suite(selector, &opts);
            let text = match fmt {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            let passed = report.passed();
            if let Some(path) = output {
                fs::write(&path, &text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
                return Ok((String::new(), passed));
            }
            return Ok((text, passed));
        }
        Command::Gb { file } => {
            let i = read_ideal(&file)?;
            let gb = i.gb(&order);
            let gens: Vec<String> = gb.elements().iter().map(|g| g.display_in(&order)).collect();
            match fmt {
                Format::Text => {
                    let mut s = render_ideal(i.context(), &[]);
                    for g in gens {
                        s.push_str(&g);
                        s.push('\n');
                    }
                    s
                }
                Format::Json => serde_json::to_string_pretty(&json!({
                    "ring": i.context().names(),
                    "weights": i.context().weights(),
                    "order": format!("{:?}", cli.order).to_lowercase(),
                    "gens": gens,
                }))
                .expect("json"),
            }
        }
        Command::Hp { file } => {
            let i = read_ideal(&file)?;
            let hp = hilbert_polynomial(&i)?;
            let hf = (0..=cli.check_degree)
                .map(|d| hilbert_function(&i, d))
                .collect::<Result<Vec<_>>>()?;
            match fmt {
                Format::Text => {
                    let mut s = format!("{hp}\n");
                    if let Some((d, g)) = hp.curve_data() {
                        s.push_str(&format!("degree {d}, genus {g}\n"));
                    }
                    let hf: Vec<String> = hf.iter().map(|v| v.to_string()).collect();
                    s.push_str(&format!("HF(0..={}): {}\n", cli.check_degree, hf.join(" ")));
                    s
                }
                Format::Json => {
                    let curve = hp.curve_data().map(|(d, g)| json!({"degree": d, "genus": g}));
                    serde_json::to_string_pretty(&json!({
                        "hilbert_polynomial": hp.to_string(),
                        "curve": curve,
                        "hilbert_function": hf,
                    }))
                    .expect("json")
                }
            }
        }
        Command::Quotient { file, by } => {
            let (i, j) = read_pair(&file, &by)?;
            let q = i.quotient(&j)?;
            if let Some(w) = &q.warning {
                eprintln!("warning: {w}");
            }
            emit_ideal(fmt, &q.ideal)
        }
        Command::Saturate { file, by } => {
            let s = match by {
                Some(by) => {
                    let (i, j) = read_pair(&file, &by)?;
                    i.saturation(&j)?
                }
                None => read_ideal(&file)?.saturate_irrelevant()?,
            };
            emit_ideal(fmt, &Ideal::new(s.context(), s.reduced_generators())?)
        }
        Command::Eliminate { file, vars } => {
            let i = read_ideal(&file)?;
            let names: Vec<&str> = vars.iter().map(|s| s.trim()).collect();
            let e = i.eliminate(&names)?;
            emit_ideal(fmt, &Ideal::new(e.context(), e.reduced_generators())?)
        }
        Command::Compare { left, right } => {
            let (i, j) = read_pair(&left, &right)?;
            let c = i.compare_in(&j, &order);
            match fmt {
                Format::Text => format!("{c}\n"),
                Format::Json => serde_json::to_string_pretty(&json!({"relation": c.to_string()})).expect("json"),
            }
        }
        Command::Tangent { file, within } => {
            let (i, x) = match within {
                Some(p) => {
                    let (i, x) = read_pair(&file, &p)?;
                    (i, Some(x))
                }
                None => (read_ideal(&file)?, None),
            };
            let t = tangent_dimensions(&i, x.as_ref())?;
            match fmt {
                Format::Text => match t.relative {
                    Some(r) => format!("ambient {}\nrelative {r}\n", t.ambient),
                    None => format!("ambient {}\n", t.ambient),
                },
                Format::Json => {
                    serde_json::to_string_pretty(&json!({"ambient": t.ambient, "relative": t.relative})).expect("json")
                }
            }
        }
        Command::Fixed { degree, tangent } => {
            let model = Dp5Model::shared();
            let mut records = if degree == 4 {
                let en = enumerate_fixed_quartics(model, false)?;
                en.quartics.into_iter().map(|q| q.curve).collect()
            } else {
                fixed_curves(model, degree)?
            };
            if tangent {
                for r in &mut records {
                    r.compute_tangent(model)?;
                }
            }
            match fmt {
                Format::Text => records.iter().map(record_text).collect::<Vec<_>>().join("\n"),
                Format::Json => {
                    serde_json::to_string_pretty(&records.iter().map(record_json).collect::<Vec<_>>()).expect("json")
                }
            }
        }
        Command::Residual { line, pick } => {
            if pick.len() != 2 {
                return Err(Error::Invalid(format!(
                    "--pick needs two positions, got {}",
                    pick.len()
                )));
            }
            let model = Dp5Model::shared();
            let q = residual_quartic(model, line_index(&line)?, (pick[0], pick[1]))?;
            match fmt {
                Format::Text => {
                    let mut s = format!("# E5: HP {}\n", q.e5_hilbert);
                    s.push_str(&format!("# L is a component: {}\n", q.contains_line));
                    if let Some(sec) = &q.secant {
                        s.push_str(&format!("# HP(C + L) = {sec}\n"));
                    }
                    s + &record_text(&q.curve)
                }
                Format::Json => serde_json::to_string_pretty(&json!({
                    "line": line,
                    "pick": [q.pick.0, q.pick.1],
                    "e5_hilbert_polynomial": q.e5_hilbert.to_string(),
                    "contains_line": q.contains_line,
                    "secant_hilbert_polynomial": q.secant.as_ref().map(|s| s.to_string()),
                    "curve": record_json(&q.curve),
                }))
                .expect("json"),
            }
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if cli.sequential {
        set_execution(Execution::Sequential);
    }
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if !out.is_empty() && !out.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
