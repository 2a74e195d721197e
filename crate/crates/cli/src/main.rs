use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quadeuclid::classify::{classify_field, classify_range_with};
use quadeuclid::figure::render_case_svg;
use quadeuclid::ideal::{class_group, class_number, primes_above};
use quadeuclid::lattice::covering_verdict;
use quadeuclid::report::{cover_report, emit_report, motzkin_report, Format};
use quadeuclid::{Execution, FracIdeal, MotzkinState, QuadField, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "quadeuclid",
    version,
    about = "Euclidean ideal classes in imaginary quadratic fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide which fields Q(√-D) have a Euclidean ideal class.
    Classify {
        #[arg(long, conflicts_with = "d", required_unless_present = "d")]
        dmax: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        json: bool,
        /// Disable the data-parallel driver.
        #[arg(long)]
        sequential: bool,
    },
    /// Covering verdict for one ideal.
    Cover {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
    },
    /// Grow the level sets for a candidate ideal.
    Motzkin {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 10_000)]
        max_levels: usize,
        /// Stop once every inverse of an integral ideal of norm <= this is in.
        #[arg(long)]
        max_norm: u64,
        /// Continue from a saved state file.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Write the final state here.
        #[arg(long)]
        save: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Draw the fundamental cell and covering disks as SVG.
    Figure {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Class number, reduced forms and the classes of small primes.
    Classgroup {
        #[arg(long)]
        d: i64,
    },
}

#[derive(Args, Debug, Clone)]
struct Target {
    #[arg(long)]
    d: i64,
    /// Use the first degree-one prime over this rational prime.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3), required_unless_present = "ideal")]
    prime: Option<u64>,
    /// Integral ideal aZ + (b+ω)Z given as `a,b`.
    #[arg(long, conflicts_with = "prime")]
    ideal: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Classify,
    Motzkin,
    Cover,
    Figure,
    ClassGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
}

/// Everything one invocation needs, after flag parsing.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub d: Option<i64>,
    pub prime_over: Option<u64>,
    pub ideal: Option<(i64, i64)>,
    pub d_max: Option<i64>,
    pub max_levels: usize,
    pub max_inverse_norm: u64,
    pub output_path: Option<PathBuf>,
    pub resume: Option<PathBuf>,
    pub format: OutputFormat,
    pub exec: Execution,
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<quadeuclid::Error> for Failure {
    fn from(e: quadeuclid::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn exec_for(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn parse_ideal(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("--ideal expects `a,b`, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Result<Self, Failure> {
        let mut cfg = RunConfig {
            command: CommandKind::Classify,
            d: None,
            prime_over: None,
            ideal: None,
            d_max: None,
            max_levels: 0,
            max_inverse_norm: 0,
            output_path: None,
            resume: None,
            format: OutputFormat::Text,
            exec: Execution::default(),
        };
        let set_target = |cfg: &mut RunConfig, t: Target| -> Result<(), Failure> {
            cfg.d = Some(t.d);
            cfg.prime_over = t.prime;
            cfg.ideal = t.ideal.as_deref().map(parse_ideal).transpose()?;
            Ok(())
        };
        let json = |j: bool| {
            if j {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            }
        };
        match cli.command {
            Command::Classify {
                dmax,
                d,
                json: j,
                sequential,
            } => {
                cfg.d_max = dmax;
                cfg.d = d;
                cfg.format = json(j);
                cfg.exec = exec_for(sequential);
            }
            Command::Cover { target, json: j } => {
                cfg.command = CommandKind::Cover;
                set_target(&mut cfg, target)?;
                cfg.format = json(j);
            }
            Command::Motzkin {
                target,
                max_levels,
                max_norm,
                resume,
                save,
                json: j,
                sequential,
            } => {
                cfg.command = CommandKind::Motzkin;
                set_target(&mut cfg, target)?;
                cfg.max_levels = max_levels;
                cfg.max_inverse_norm = max_norm;
                cfg.resume = resume;
                cfg.output_path = save;
                cfg.format = json(j);
                cfg.exec = exec_for(sequential);
            }
            Command::Figure { target, output } => {
                cfg.command = CommandKind::Figure;
                set_target(&mut cfg, target)?;
                cfg.output_path = Some(output);
                cfg.format = OutputFormat::Svg;
            }
            Command::Classgroup { d } => {
                cfg.command = CommandKind::ClassGroup;
                cfg.d = Some(d);
            }
        }
        Ok(cfg)
    }

    fn field(&self) -> Result<QuadField, Failure> {
        let d = self
            .d
            .ok_or_else(|| Failure::Usage("--d is required".into()))?;
        Ok(QuadField::new(d)?)
    }

    fn ideal(&self) -> Result<FracIdeal, Failure> {
        let field = self.field()?;
        if let Some((a, b)) = self.ideal {
            return Ok(FracIdeal::from_parts(
                &field,
                Rational::from_integer(1.into()),
                a.into(),
                b.into(),
            )?);
        }
        let p = self
            .prime_over
            .ok_or_else(|| Failure::Usage("one of --prime or --ideal is required".into()))?;
        primes_above(&field, p)?
            .into_iter()
            .find(|(_, f)| *f == 1)
            .map(|(i, _)| i)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "{p} is inert in Q(√-{}); no degree-one prime",
                    field.d()
                ))
            })
    }

    fn text_format(&self) -> Format {
        match self.format {
            OutputFormat::Json => Format::Json,
            _ => Format::Text,
        }
    }
}

fn run(cfg: &RunConfig) -> Result<String, Failure> {
    match cfg.command {
        CommandKind::Classify => {
            let verdicts = match (cfg.d_max, cfg.d) {
                (Some(dmax), _) => classify_range_with(dmax, cfg.exec)?,
                (None, Some(d)) => vec![classify_field(d)?],
                (None, None) => return Err(Failure::Usage("--dmax or --d is required".into())),
            };
            Ok(emit_report(&verdicts, cfg.text_format()))
        }
        CommandKind::Cover => {
            let c = cfg.ideal()?;
            Ok(cover_report(&c, &covering_verdict(&c), cfg.text_format()))
        }
        CommandKind::Motzkin => {
            let c = cfg.ideal()?;
            let mut state = match &cfg.resume {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let state = MotzkinState::from_text(&text)?;
                    if state.c() != &c {
                        return Err(Failure::Usage(format!(
                            "saved state is for C = {} in Q(√-{}), not {c}",
                            state.c(),
                            state.field().d()
                        )));
                    }
                    state.with_execution(cfg.exec)
                }
                None => MotzkinState::new(&c, cfg.max_inverse_norm)?.with_execution(cfg.exec),
            };
            state.resume(cfg.max_levels, cfg.max_inverse_norm);
            if let Some(path) = &cfg.output_path {
                std::fs::write(path, state.to_text())
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let out = motzkin_report(&state, cfg.text_format());
            if !state.violations().is_empty() {
                eprint!("{out}");
                let v = &state.violations()[0];
                return Err(Failure::Invariant(format!(
                    "{} level-law violation(s); first: {:?} law at level {} for {}",
                    state.violations().len(),
                    v.law,
                    v.level,
                    v.ideal
                )));
            }
            Ok(out)
        }
        CommandKind::Figure => {
            let c = cfg.ideal()?;
            let path = cfg.output_path.as_ref().expect("figure has an output path");
            render_case_svg(c.field().d(), &c, path)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        CommandKind::ClassGroup => {
            let field = cfg.field()?;
            let h = class_number(&field);
            let mut s = format!("D={} disc={} h={h}\n", field.d(), field.disc());
            for label in class_group(&field) {
                s.push_str(&format!("form {} order {}\n", label.form, label.order()));
            }
            for p in [2u64, 3] {
                for (i, f) in primes_above(&field, p)? {
                    if f == 1 {
                        let cl = i.class();
                        s.push_str(&format!(
                            "prime over {p}: {i} class {} order {}\n",
                            cl.form,
                            cl.order()
                        ));
                    }
                }
            }
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| run(&cfg));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(2)
        }
    }
}
