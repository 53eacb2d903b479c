use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qskein::quantum::{delta, qint};
use qskein::tail::{sb_state_sum, tail_85, tail_85_double_sum};
use qskein::verify::{self, Suite};
use qskein::{bubble_coeff, bubble_expand, theta, BubbleParams, Error, Method};

const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TailMethod {
    Direct,
    DoubleSum,
}

/// Exact bubble skein coefficients, theta evaluations and the 8_5 tail.
#[derive(Parser, Debug)]
#[command(name = "qskein", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "QSKEIN_FORMAT", default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quantum integer [n].
    Qint {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Loop value Δ_n = (-1)^n [n+1].
    Delta {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Bubble coefficient ⌈m n; k l⌉_i, or the full expansion when --i is omitted.
    Bubble {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
        /// Bottom-left color; defaults to m + k - l.
        #[arg(long = "m-prime")]
        m_prime: Option<i64>,
        /// Bottom-right color; defaults to n + k - l.
        #[arg(long = "n-prime")]
        n_prime: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
        #[arg(long, default_value = "closed")]
        method: Method,
    },
    /// Theta graph evaluation Λ(m, n, k).
    Theta {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
    },
    /// First coefficients of the 8_5 tail.
    Tail85 {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        #[arg(long, value_enum, default_value = "direct")]
        method: TailMethod,
    },
    /// Exact all-B state sum S_B^(n) of the 8_5 family.
    Sbsum {
        #[arg(long)]
        n: i64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Grid bound (number of coefficients for the tail suite).
        #[arg(long)]
        max: Option<i64>,
    },
}

struct Output {
    command: &'static str,
    params: Value,
    text: String,
    result: Value,
    ok: bool,
}

fn run(cmd: &Command) -> Result<Output, Error> {
    let out = match *cmd {
        Command::Qint { n } => {
            let v = qint(n);
            Output { command: "qint", params: json!({ "n": n }), text: v.to_string(), result: json!(&v), ok: true }
        }
        Command::Delta { n } => {
            let v = delta(n);
            Output { command: "delta", params: json!({ "n": n }), text: v.to_string(), result: json!(&v), ok: true }
        }
        Command::Bubble { m, n, k, l, m_prime, n_prime, i, method } => {
            let p = BubbleParams::new(m, n, m_prime.unwrap_or(m + k - l), n_prime.unwrap_or(n + k - l), k, l)?;
            let params = json!({
                "m": p.m, "n": p.n, "m_prime": p.m_prime, "n_prime": p.n_prime,
                "k": p.k, "l": p.l, "i": i, "method": method.to_string(),
            });
            match i {
                Some(i) => {
                    let q = if p.k >= p.l { p } else { p.rotated() };
                    let v = bubble_coeff(method, q.m, q.n, q.k, q.l, i)?;
                    Output { command: "bubble", params, text: v.to_string(), result: json!(&v), ok: true }
                }
                None => {
                    let terms = bubble_expand(&p, method)?;
                    let text = terms
                        .iter()
                        .map(|t| format!("i={} labels=({}, {}) {}", t.i, t.top_label, t.bottom_label, t.coeff))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Output { command: "bubble", params, text, result: json!(&terms), ok: true }
                }
            }
        }
        Command::Theta { m, n, k } => {
            let v = theta(m, n, k)?;
            let params = json!({ "m": m, "n": n, "k": k });
            Output { command: "theta", params, text: v.to_string(), result: json!(&v), ok: true }
        }
        Command::Tail85 { terms, method } => {
            let t = match method {
                TailMethod::Direct => tail_85(terms as usize),
                TailMethod::DoubleSum => tail_85_double_sum(terms as usize),
            };
            let name = match method {
                TailMethod::Direct => "direct",
                TailMethod::DoubleSum => "double-sum",
            };
            let params = json!({ "terms": terms, "method": name });
            Output { command: "tail85", params, text: t.to_string(), result: json!(&t), ok: true }
        }
        Command::Sbsum { n } => {
            let v = sb_state_sum(n)?;
            Output { command: "sbsum", params: json!({ "n": n }), text: v.value.to_string(), result: json!(&v), ok: true }
        }
        Command::Verify { suite, max } => {
            let r = verify::run(suite, max);
            let params = json!({ "suite": suite.name(), "max": max });
            Output { command: "verify", params, text: r.to_string(), ok: r.passed(), result: json!(&r) }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => {
                    let envelope = json!({
                        "command": out.command,
                        "params": out.params,
                        "result": out.result,
                        "format_version": FORMAT_VERSION,
                    });
                    println!("{}", serde_json::to_string_pretty(&envelope).expect("envelope serializes"));
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ (Error::InvalidParams(_) | Error::ConstraintViolation(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
