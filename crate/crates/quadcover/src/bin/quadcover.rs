use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use quadcover::{run, CliError, Command, Context};

#[derive(Parser, Debug)]
#[command(
    name = "quadcover",
    version,
    about = "Binary quadratic forms and the double covers they define"
)]
struct Cli {
    /// JSON input file, or `-` for stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Output file, or `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Algebra and module structure carried by a form.
    FormToCover,
    /// Norm form of a trace-zero action.
    CoverToForm,
    /// Form -> cover -> form, for one form or `{"ring", "count"}` random ones.
    Roundtrip,
    /// Form dual to a quadratic polynomial.
    Dual,
    /// Generator of the kernel of Sym^2 E -> Sym^2_A E.
    KernelGen,
    /// Conic in P(E) as the spectrum of a quadratic algebra.
    ProjCheck,
    /// Generic discriminant in elementary symmetric functions.
    Discriminant {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Whether an algebra is R[T]/(T^2 - u^2).
    Standard,
    /// The subalgebra R + tN.
    Pinch,
    /// Isomorphism after adjoining a square root of t.
    Split,
    /// Module of differentials and its annihilator.
    Differentials,
    /// Runs the invariant suite.
    VerifyIdentities,
}

impl Cmd {
    fn command(&self) -> (Command, Option<usize>) {
        match self {
            Cmd::FormToCover => (Command::FormToCover, None),
            Cmd::CoverToForm => (Command::CoverToForm, None),
            Cmd::Roundtrip => (Command::Roundtrip, None),
            Cmd::Dual => (Command::Dual, None),
            Cmd::KernelGen => (Command::KernelGen, None),
            Cmd::ProjCheck => (Command::ProjCheck, None),
            Cmd::Discriminant { n } => (Command::Discriminant, *n),
            Cmd::Standard => (Command::Standard, None),
            Cmd::Pinch => (Command::Pinch, None),
            Cmd::Split => (Command::Split, None),
            Cmd::Differentials => (Command::Differentials, None),
            Cmd::VerifyIdentities => (Command::VerifyIdentities, None),
        }
    }
}

fn read_input(path: &str) -> Result<Value, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::malformed("io", e.to_string(), "stdin"))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::malformed("io", e.to_string(), path))?
    };
    serde_json::from_str(&text).map_err(|e| {
        CliError::malformed(
            "bad_json",
            e.to_string(),
            format!("{path}:{}:{}", e.line(), e.column()),
        )
    })
}

fn execute(cli: &Cli) -> Result<Value, CliError> {
    let (command, n) = cli.command.command();
    let ctx = Context::from_env(cli.seed)?;
    let needs_input = !matches!(command, Command::VerifyIdentities)
        && !(command == Command::Discriminant && n.is_some());
    let payload = match (&cli.input, needs_input) {
        (Some(path), _) => Some(read_input(path)?),
        (None, true) => Some(read_input("-")?),
        (None, false) => None,
    };
    run(command, payload.as_ref(), n, &ctx)
}

fn emit(cli: &Cli, doc: &Value) -> io::Result<()> {
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
        Format::Text => quadcover::text::render(doc),
    };
    if cli.output == "-" {
        io::stdout().write_all(body.as_bytes())
    } else {
        fs::write(&cli.output, body)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, code) = match execute(&cli) {
        Ok(doc) => (doc, 0),
        Err(e) => {
            eprintln!("quadcover: {e}");
            (e.to_json(), e.exit_code())
        }
    };
    if let Err(e) = emit(&cli, &doc) {
        eprintln!("quadcover: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
