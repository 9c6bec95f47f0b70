//! Command dispatcher behind the `vactab` binary.
//!
//! Every subcommand reads and writes UTF-8 JSON with stable, canonical
//! ordering, so identical invocations produce byte-identical output.
//! Exit codes: 0 success, 1 domain error (bad input data, bounds), 2
//! usage error (unrecognized flags, missing arguments).

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use vactab::counting;
use vactab::di_map;
use vactab::vacillating::{self, VacillatingTableau};
use vactab::{
    BiColoredSetPartition, DiImage, IntegerSequence, Involution, PartialTableau, Partition,
    SetPartition,
};

/// Default guard: largest `k` for counting enumeration.
const DEFAULT_MAX_K_COUNT: usize = 10;
/// Default guard: largest `k` for explicit listings.
const DEFAULT_MAX_K_LIST: usize = 6;
/// Default guard: largest `n` for exhaustive identity sweeps.
const DEFAULT_MAX_N_SWEEP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    DomainError,
    UsageError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::DomainError => 1,
            Status::UsageError => 2,
        }
    }
}

/// Outcome of one invocation: a JSON payload on success, diagnostics on
/// failure. `status != Ok` implies an empty payload.
#[derive(Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Option<Value>,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: Status::Ok,
            payload: Some(payload),
            diagnostics: Vec::new(),
        }
    }

    fn domain(message: String) -> Self {
        CommandResult {
            status: Status::DomainError,
            payload: None,
            diagnostics: vec![message],
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "vactab",
    about = "Tableau dynamics, vacillating tableaux and exact enumeration",
    disable_help_subcommand = true
)]
struct Cli {
    /// Ignore the built-in size guards.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SeqArg {
    /// Comma-separated integer sequence, e.g. `4,4`; empty for k = 0.
    #[arg(long, default_value = "")]
    seq: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the delete-insert map over the alphabet [n].
    Di {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        seq: SeqArg,
    },
    /// Recover the integer sequence from a delete-insert image.
    DiInverse {
        #[arg(long)]
        n: usize,
        /// File holding the image JSON: {"tableau", "vt", "shape"}.
        #[arg(long)]
        input: PathBuf,
    },
    /// Compute the limiting vacillating tableau of a sequence.
    Limit {
        #[command(flatten)]
        seq: SeqArg,
    },
    /// Check that the simplified shape sequence is stable across a
    /// margin of alphabet sizes beyond the guaranteed threshold.
    StabilizeCheck {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long, default_value_t = 4)]
        margin: usize,
    },
    /// Find an integer sequence whose limiting tableau is the input.
    Realize {
        /// File holding a simplified vacillating tableau (step array).
        #[arg(long)]
        vt: PathBuf,
    },
    /// Count or list simplified / limiting vacillating tableaux.
    Enumerate {
        #[arg(long)]
        k: usize,
        /// Restrict full steps to always add a box.
        #[arg(long)]
        limiting: bool,
        /// End shape as comma-separated parts, e.g. `2,1`.
        #[arg(long)]
        shape: Option<String>,
        /// Emit explicit listings instead of counts.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate n^k = sum of f^lambda * m_k^lambda, exactly.
    VerifyIdentity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Cross-check per-shape bins by running all n^k sequences.
        #[arg(long)]
        sweep: bool,
    },
    /// Report a_k and c_k (A004211) and whether they agree.
    Count {
        #[arg(long)]
        k: usize,
    },
    /// Map a simplified vacillating tableau to (blocks, tableau).
    Psi {
        #[arg(long)]
        vt: PathBuf,
    },
    /// Rebuild the vacillating tableau from (blocks, tableau).
    PsiInverse {
        #[arg(long)]
        blocks: PathBuf,
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Merge blocks along an involution into a bi-colored partition.
    Phi {
        #[arg(long)]
        blocks: PathBuf,
        #[arg(long)]
        involution: PathBuf,
    },
    /// Split a bi-colored partition back into (blocks, involution).
    PhiInverse {
        #[arg(long)]
        input: PathBuf,
    },
    /// Validate a vacillating tableau file against a flavor.
    Validate {
        #[arg(long)]
        vt: PathBuf,
        /// One of `n`, `simplified`, `limiting`.
        #[arg(long, default_value = "simplified")]
        flavor: String,
        /// Required when flavor is `n`.
        #[arg(long)]
        n: Option<usize>,
    },
}

fn env_bound(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn parse_seq(raw: &str) -> Result<IntegerSequence, String> {
    let values: Result<Vec<u32>, _> = raw
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<u32>())
        .collect();
    let values = values.map_err(|e| format!("malformed sequence {raw:?}: {e}"))?;
    IntegerSequence::new(values).map_err(|e| e.to_string())
}

fn parse_shape(raw: &str) -> Result<Partition, String> {
    let parts: Result<Vec<usize>, _> = raw
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>())
        .collect();
    let parts = parts.map_err(|e| format!("malformed shape {raw:?}: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON in {}: {e}", path.display()))
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

/// Parses `argv` (including the program name) and executes it.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap treats --help/--version as "errors" with zero exit
            let status = if err.use_stderr() {
                Status::UsageError
            } else {
                Status::Ok
            };
            return CommandResult {
                status,
                payload: None,
                diagnostics: vec![err.to_string()],
            };
        }
    };
    match execute(cli.command, cli.force) {
        Ok(payload) => CommandResult::ok(payload),
        Err(message) => CommandResult::domain(message),
    }
}

fn execute(command: Command, force: bool) -> Result<Value, String> {
    match command {
        Command::Di { n, seq } => {
            let seq = parse_seq(&seq.seq)?;
            let img = di_map::di_forward(&seq, n).map_err(|e| e.to_string())?;
            Ok(to_value(&img))
        }
        Command::DiInverse { n, input } => {
            let img: DiImage = read_json(&input)?;
            let seq = di_map::di_inverse(&img, n).map_err(|e| e.to_string())?;
            Ok(to_value(&seq))
        }
        Command::Limit { seq } => {
            let seq = parse_seq(&seq.seq)?;
            Ok(to_value(&di_map::limiting_vt(&seq)))
        }
        Command::StabilizeCheck { seq, margin } => {
            if margin == 0 {
                return Err("margin must be at least 1".into());
            }
            let seq = parse_seq(&seq.seq)?;
            let stable = di_map::check_stabilization(&seq, margin);
            Ok(json!({
                "sequence": to_value(&seq),
                "margin": margin,
                "stable": stable,
            }))
        }
        Command::Realize { vt } => {
            let v: VacillatingTableau = read_json(&vt)?;
            let seq = di_map::realize_sequence(&v).map_err(|e| e.to_string())?;
            Ok(to_value(&seq))
        }
        Command::Enumerate {
            k,
            limiting,
            shape,
            list,
        } => {
            let shape = shape.as_deref().map(parse_shape).transpose()?;
            if list {
                let bound = if force {
                    usize::MAX
                } else {
                    env_bound("VACTAB_MAX_K_LIST", DEFAULT_MAX_K_LIST)
                };
                let listing = vacillating::enumerate_listing(k, limiting, shape.as_ref(), bound)
                    .map_err(|e| e.to_string())?;
                Ok(to_value(&listing))
            } else {
                let bound = if force {
                    usize::MAX
                } else {
                    env_bound("VACTAB_MAX_K_COUNT", DEFAULT_MAX_K_COUNT)
                };
                let table =
                    vacillating::enumerate_counts(k, limiting, bound).map_err(|e| e.to_string())?;
                match shape {
                    Some(s) => Ok(json!({"shape": to_value(&s), "count": to_value(&table.get(&s))})),
                    None => Ok(to_value(&table)),
                }
            }
        }
        Command::VerifyIdentity { n, k, sweep } => {
            let max_n = if force {
                usize::MAX
            } else {
                env_bound("VACTAB_MAX_N_SWEEP", DEFAULT_MAX_N_SWEEP)
            };
            if sweep && n > max_n {
                return Err(format!(
                    "n = {n} exceeds sweep bound {max_n} (use --force to override)"
                ));
            }
            let report = counting::verify_identity(n, k, sweep).map_err(|e| e.to_string())?;
            Ok(to_value(&report))
        }
        Command::Count { k } => {
            let a = counting::a_k_formula(k);
            let c = counting::c_k_formula(k);
            let agree = a == c;
            Ok(json!({"a_k": to_value(&a), "c_k": to_value(&c), "agree": agree}))
        }
        Command::Psi { vt } => {
            let v: VacillatingTableau = read_json(&vt)?;
            let (blocks, tableau) = vactab::bijections::psi(&v).map_err(|e| e.to_string())?;
            Ok(json!({"blocks": to_value(&blocks), "tableau": to_value(&tableau)}))
        }
        Command::PsiInverse { blocks, tableau, k } => {
            let b: SetPartition = read_json(&blocks)?;
            let t: PartialTableau = read_json(&tableau)?;
            let v = vactab::bijections::psi_inverse(&b, &t, k).map_err(|e| e.to_string())?;
            Ok(to_value(&v))
        }
        Command::Phi { blocks, involution } => {
            let b: SetPartition = read_json(&blocks)?;
            let sigma: Involution = read_json(&involution)?;
            let bc = vactab::bijections::phi(&b, &sigma).map_err(|e| e.to_string())?;
            Ok(to_value(&bc))
        }
        Command::PhiInverse { input } => {
            let bc: BiColoredSetPartition = read_json(&input)?;
            let (b, sigma) = vactab::bijections::phi_inverse(&bc).map_err(|e| e.to_string())?;
            Ok(json!({"blocks": to_value(&b), "involution": to_value(&sigma)}))
        }
        Command::Validate { vt, flavor, n } => {
            let steps: Vec<Partition> = read_json(&vt)?;
            let outcome = match flavor.as_str() {
                "n" => {
                    let n = n.ok_or_else(|| "--n is required for flavor `n`".to_string())?;
                    vacillating::validate_n_vacillating(&steps, n)
                }
                "simplified" => vacillating::validate_simplified(&steps),
                "limiting" => vacillating::validate_limiting(&steps),
                other => return Err(format!("unknown flavor {other:?}")),
            };
            Ok(match outcome {
                Ok(()) => json!({"valid": true, "violation": Value::Null}),
                Err(v) => json!({"valid": false, "violation": v}),
            })
        }
    }
}
