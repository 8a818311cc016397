use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rbhopf::instances::{
    build, named_cartan, parse_weight, resolve_mode, run_nichols_rank, run_serre_check, Instance, RunError,
    SuiteArgs, INSTANCE_NAMES,
};
use rbhopf::report::{Format, Verdict};
use rbhopf::shuffle::{parse_cartan_config, CartanConfig, WORD_LIMIT};
use rbhopf::verify::SamplePlan;
use rbhopf::ScalarMode;

#[derive(Parser)]
#[command(name = "rbhopf", version, about = "Exact checks of Rota-Baxter projections on Hopf module algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Named instance; defaults to `uqplus` when --cartan is given.
    #[arg(long)]
    instance: Option<String>,
    /// Cartan config file.
    #[arg(long)]
    cartan: Option<PathBuf>,
    /// generic | cyclotomic:L | rational | rational:Q0
    #[arg(long)]
    scalar: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of sampled pairs, triples or elements.
    #[arg(long, visible_alias = "samples", default_value_t = 100)]
    pairs: usize,
    #[arg(long, default_value_t = 2)]
    max_degree: u32,
    /// Evaluate samples on a thread pool; results are unchanged.
    #[arg(long)]
    parallel: bool,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Lines,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Side {
    Right,
    Left,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rota-Baxter identity for the projection on one side. With --weight ν
    /// the operator checked is −ν·P at weight ν.
    RbVerify {
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        common: Common,
    },
    /// P(P(m)) = P(m) for the projection on one side.
    Idempotency {
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[command(flatten)]
        common: Common,
    },
    /// Image and kernel of the projection are subalgebras.
    Decomposition {
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[command(flatten)]
        common: Common,
    },
    /// Hopf algebra axioms.
    CheckHopf {
        #[command(flatten)]
        common: Common,
    },
    /// Hopf module algebra axioms on one side.
    CheckHopfModule {
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[command(flatten)]
        common: Common,
    },
    /// Yetter-Drinfeld module algebra axioms.
    CheckYd {
        #[command(flatten)]
        common: Common,
    },
    /// Rank of a content-graded Nichols algebra component.
    NicholsRank {
        /// Letter multiplicities, e.g. 2,1.
        #[arg(long, value_delimiter = ',', required = true)]
        content: Vec<u32>,
        /// Exit 1 unless the rank equals this.
        #[arg(long)]
        expect: Option<usize>,
        /// Lift the guard on the number of words.
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        common: Common,
    },
    /// q-Serre relations for all ordered letter pairs, or for --pair i,j.
    SerreCheck {
        #[arg(long, value_delimiter = ',', num_args = 2)]
        pair: Option<Vec<u32>>,
        #[command(flatten)]
        common: Common,
    },
    /// Quantum shuffle product of the given word elements, left to right.
    Shuffle {
        #[arg(required = true)]
        elements: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Product in a smash product instance.
    Smash {
        #[arg(long, required = true, allow_hyphen_values = true)]
        eval: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Applies P_R or P_L to an element.
    Project {
        #[arg(long, value_enum)]
        side: Side,
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// Product in the bosonization of a Cartan config, optionally projected.
    BosonizeEval {
        #[arg(long, value_enum)]
        project: Option<Side>,
        #[arg(required = true)]
        elements: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// shuffle | smash | multiply | project-right | project-left | coproduct
    Eval {
        op: String,
        #[arg(required = true)]
        elements: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Lists instances with their suites and ops.
    Instances {
        #[command(flatten)]
        common: Common,
    },
}

impl OutFormat {
    fn format(self) -> Format {
        match self {
            OutFormat::Text => Format::Text,
            OutFormat::Lines => Format::Lines,
        }
    }
}

struct Context {
    common: Common,
    requested: Option<ScalarMode>,
    cartan: Option<CartanConfig>,
}

impl Context {
    fn new(common: Common) -> Result<Self, RunError> {
        let requested = match &common.scalar {
            Some(s) => Some(s.parse::<ScalarMode>()?),
            None => None,
        };
        let cartan = match &common.cartan {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| RunError::Usage(format!("cannot read {}: {e}", path.display())))?;
                let cfg = parse_cartan_config(&text, requested.as_ref())
                    .map_err(|e| RunError::Usage(format!("{}: {e}", path.display())))?;
                Some(cfg)
            }
            None => None,
        };
        Ok(Context { common, requested, cartan })
    }

    fn instance_name(&self) -> Result<String, RunError> {
        match (&self.common.instance, &self.cartan) {
            (Some(n), _) => Ok(n.clone()),
            (None, Some(_)) => Ok("uqplus".into()),
            (None, None) => Err(RunError::Usage("give --instance NAME or --cartan FILE".into())),
        }
    }

    fn instance(&self) -> Result<Instance, RunError> {
        let name = self.instance_name()?;
        if self.cartan.is_some() && name != "uqplus" {
            return Err(RunError::Usage(format!("--cartan applies to instance `uqplus`, not `{name}`")));
        }
        let mode = resolve_mode(&name, self.requested.as_ref(), self.cartan.as_ref())?;
        build(&name, &mode, self.cartan.as_ref())
    }

    /// Cartan data from --cartan, or from a `uqplus-*` instance name.
    fn cartan_config(&self) -> Result<CartanConfig, RunError> {
        if let Some(c) = &self.cartan {
            return Ok(c.clone());
        }
        let name = self.instance_name()?;
        let cfg = named_cartan(&name)
            .ok_or_else(|| RunError::Usage(format!("`{name}` has no Cartan datum; use --cartan")))?;
        resolve_mode(&name, self.requested.as_ref(), None)?;
        Ok(cfg)
    }

    fn plan(&self, mode: &ScalarMode) -> SamplePlan {
        SamplePlan::new(mode.clone(), self.common.seed)
            .with_samples(self.common.pairs)
            .with_max_degree(self.common.max_degree)
            .with_parallel(self.common.parallel)
    }

    fn echo(&self, v: Verdict, instance: &str, mode: &ScalarMode) -> Verdict {
        let mut v = v;
        let mut head = vec![
            ("instance".to_string(), instance.to_string()),
            ("scalar".to_string(), mode.to_string()),
        ];
        head.append(&mut v.params);
        head.extend([
            ("seed".to_string(), self.common.seed.to_string()),
            ("samples".to_string(), self.common.pairs.to_string()),
            ("max-degree".to_string(), self.common.max_degree.to_string()),
            ("parallel".to_string(), self.common.parallel.to_string()),
        ]);
        v.params = head;
        v
    }
}

fn emit(v: &Verdict, format: OutFormat) -> ExitCode {
    print!("{}", v.render(format.format()));
    if v.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit_value(value: &str, format: OutFormat) -> ExitCode {
    match format {
        OutFormat::Text => println!("{value}"),
        OutFormat::Lines => println!("result={value}"),
    }
    ExitCode::SUCCESS
}

fn suite(common: Common, name: &str, side: Option<Side>, weight: Option<&str>) -> Result<ExitCode, RunError> {
    let ctx = Context::new(common)?;
    let inst = ctx.instance()?;
    let key = match side {
        Some(s) => format!("{name}:{}", s.name()),
        None => name.to_string(),
    };
    let mut args = SuiteArgs::new(ctx.plan(&inst.mode));
    if let Some(w) = weight {
        args = args.with_weight(parse_weight(w)?);
    }
    let mut v = inst.run(&key, &args)?;
    if let Some(s) = side {
        v.params.push(("side".into(), s.name().into()));
    }
    let v = ctx.echo(v, &inst.name, &inst.mode);
    Ok(emit(&v, ctx.common.format))
}

fn eval(common: Common, op: &str, elements: &[String]) -> Result<ExitCode, RunError> {
    let ctx = Context::new(common)?;
    let inst = ctx.instance()?;
    let value = inst.eval(op, elements)?;
    Ok(emit_value(&value, ctx.common.format))
}

fn run(cli: Cli) -> Result<ExitCode, RunError> {
    match cli.command {
        Command::RbVerify { side, weight, common } => suite(common, "rb-verify", Some(side), Some(&weight)),
        Command::Idempotency { side, common } => suite(common, "idempotency", Some(side), None),
        Command::Decomposition { side, common } => suite(common, "decomposition", Some(side), None),
        Command::CheckHopf { common } => suite(common, "check-hopf", None, None),
        Command::CheckHopfModule { side, common } => suite(common, "check-hopf-module", Some(side), None),
        Command::CheckYd { common } => suite(common, "check-yd", None, None),
        Command::NicholsRank { content, expect, allow_large, common } => {
            let ctx = Context::new(common)?;
            let cfg = ctx.cartan_config()?;
            let mut v = run_nichols_rank(&cfg, &content, allow_large, expect)?;
            v.params.push(("cartan".into(), cfg.cartan.to_string()));
            v.params.push(("word-limit".into(), WORD_LIMIT.to_string()));
            let name = ctx.instance_name()?;
            let v = ctx.echo(v, &name, cfg.cartan.mode());
            Ok(emit(&v, ctx.common.format))
        }
        Command::SerreCheck { pair, common } => {
            let ctx = Context::new(common)?;
            let cfg = ctx.cartan_config()?;
            let pair = pair.map(|p| (p[0], p[1]));
            let mut v = run_serre_check(&cfg, pair)?;
            v.params.push(("cartan".into(), cfg.cartan.to_string()));
            let name = ctx.instance_name()?;
            let v = ctx.echo(v, &name, cfg.cartan.mode());
            Ok(emit(&v, ctx.common.format))
        }
        Command::Shuffle { elements, common } => eval(common, "shuffle", &elements),
        Command::Smash { eval: elements, common } => eval(common, "smash", &elements),
        Command::Project { side, element, common } => {
            eval(common, &format!("project-{}", side.name()), std::slice::from_ref(&element))
        }
        Command::BosonizeEval { project, elements, common } => {
            let ctx = Context::new(common)?;
            if ctx.cartan.is_none() && !ctx.common.instance.as_deref().is_some_and(|n| n.starts_with("uqplus")) {
                return Err(RunError::Usage("bosonize-eval needs --cartan or a uqplus-* instance".into()));
            }
            let inst = ctx.instance()?;
            let mut value = inst.eval("smash", &elements)?;
            if let Some(side) = project {
                value = inst.eval(&format!("project-{}", side.name()), &[value])?;
            }
            Ok(emit_value(&value, ctx.common.format))
        }
        Command::Eval { op, elements, common } => eval(common, &op, &elements),
        Command::Instances { common } => {
            let ctx = Context::new(common)?;
            for name in INSTANCE_NAMES {
                let built = if *name == "uqplus" {
                    match &ctx.cartan {
                        Some(c) => build(name, c.cartan.mode(), Some(c)),
                        None => {
                            println!("{name}: needs --cartan");
                            continue;
                        }
                    }
                } else {
                    resolve_mode(name, None, None).and_then(|m| build(name, &m, None))
                };
                let inst = built?;
                let suites: Vec<_> = inst.suites().collect();
                let ops: Vec<_> = inst.ops().collect();
                println!("{name} [{}]: suites {}; ops {}", inst.mode, suites.join(" "), ops.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let kind = match e {
                RunError::Usage(_) => "error",
                RunError::Resource(_) => "resource guard",
            };
            eprintln!("{kind}: {e}");
            ExitCode::from(2)
        }
    }
}
