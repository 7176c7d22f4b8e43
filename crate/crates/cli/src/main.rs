use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lisse_cli::commands::{cmd_affine, cmd_jet, cmd_lisse, cmd_virasoro, cmd_vpa_check};
use lisse_cli::{resolve, CommandError, InputFile, Overrides, Report};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "lisse", version, about = "Jet schemes, vertex Poisson checks and C2-cofiniteness tests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jet ideal, reduced basis and dimension of a presentation.
    Jet(Common),
    /// Lisse verdict for a C2-algebra presentation.
    Lisse(Common),
    /// Randomized check of the vertex Poisson identities.
    VpaCheck(Common),
    /// Virasoro vacuum module: Gram kernels, C2 image and verdict.
    Virasoro(Common),
    /// Affine closure argument and graded dimension comparison.
    Affine(Common),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Args)]
struct Common {
    /// Input file; standard input when omitted.
    input: Option<PathBuf>,
    /// Jet order (default 1).
    #[arg(long)]
    order: Option<u32>,
    /// Highest Virasoro level examined (default 6).
    #[arg(long)]
    cutoff: Option<u32>,
    /// Random samples for vpa-check (default 100).
    #[arg(long)]
    samples: Option<usize>,
    /// RNG seed (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Weight bound for random elements and graded counts (default 4).
    #[arg(long)]
    max_weight: Option<u32>,
    /// Central charge as a rational literal.
    #[arg(long = "c", allow_hyphen_values = true)]
    central_charge: Option<String>,
    /// Minimal-series pair.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    minimal: Option<Vec<i64>>,
    /// Root vector name for `affine` (default: first basis element).
    #[arg(long)]
    root: Option<String>,
    /// Power of the root vector for `affine` (default 2).
    #[arg(long)]
    power: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

impl Common {
    fn overrides(&self) -> Overrides {
        Overrides {
            order: self.order,
            cutoff: self.cutoff,
            samples: self.samples,
            seed: self.seed,
            max_weight: self.max_weight,
            central_charge: self.central_charge.clone(),
            minimal: self.minimal.as_ref().map(|v| (v[0], v[1])),
            root: self.root.clone(),
            power: self.power,
        }
    }
}

fn read_input(common: &Common, optional: bool) -> Result<Vec<u8>, String> {
    match &common.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read(p).map_err(|e| format!("{}: {e}", p.display())),
        None if optional => Ok(Vec::new()),
        _ => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map_err(|e| format!("<stdin>: {e}"))?;
            Ok(buf)
        }
    }
}

fn run(cli: Cli) -> Result<(Report, bool), (String, u8)> {
    let (name, common) = match &cli.command {
        Command::Jet(c) => ("jet", c),
        Command::Lisse(c) => ("lisse", c),
        Command::VpaCheck(c) => ("vpa-check", c),
        Command::Virasoro(c) => ("virasoro", c),
        Command::Affine(c) => ("affine", c),
    };
    let flags = common.overrides();
    let optional = name == "virasoro" && (flags.central_charge.is_some() || flags.minimal.is_some());
    let bytes = read_input(common, optional).map_err(|e| (e, EXIT_INPUT))?;
    let source = common.input.as_ref().map_or("<stdin>".to_string(), |p| p.display().to_string());
    let text = String::from_utf8(bytes.clone()).map_err(|_| (format!("{source}: input is not UTF-8"), EXIT_INPUT))?;
    let fail = |e: CommandError| match e {
        CommandError::Input(e) => (format!("{source}:{e}"), EXIT_INPUT),
        CommandError::Usage(m) => (m, EXIT_INPUT),
    };
    let file = InputFile::parse(&text).map_err(|e| fail(e.into()))?;
    let settings = resolve(&file, &flags).map_err(fail)?;
    let report = match &cli.command {
        Command::Jet(_) => cmd_jet(&file, &settings, &bytes),
        Command::Lisse(_) => cmd_lisse(&file, &settings, &bytes),
        Command::VpaCheck(_) => cmd_vpa_check(&file, &settings, &bytes),
        Command::Virasoro(_) => cmd_virasoro(&settings, &bytes),
        Command::Affine(_) => cmd_affine(&file, &settings, &bytes),
    }
    .map_err(fail)?;
    let is_check = matches!(cli.command, Command::Lisse(_) | Command::VpaCheck(_) | Command::Affine(_));
    Ok((report, is_check))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Jet(c) | Command::Lisse(c) | Command::VpaCheck(c) | Command::Virasoro(c) | Command::Affine(c) => c.format,
    };
    match run(cli) {
        Ok((report, is_check)) => {
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => print!("{}", report.to_structured()),
            }
            let negative = is_check && report.verdict.as_ref().is_some_and(|v| !v.passed);
            if negative {
                ExitCode::from(EXIT_NEGATIVE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
