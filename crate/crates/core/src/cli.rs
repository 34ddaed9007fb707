//! Command-line front end.
//!
//! Words use the shared format (signed integers separated by spaces or
//! commas). Commands that take words read them from the arguments, or one per
//! line from standard input when none are given; `#` starts a comment.
//!
//! Exit codes: 0 success, 1 not a half-twist power (or a failed check),
//! 2 parse/validation error, 3 undecided within the budget.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::combing::{comb_with, in_a_n, Budget, CombError};
use crate::halftwist::{classify_with, random_half_twist_power, verify_power, Classification};
use crate::word_problem::equal;

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_POWER: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "halftwist", about = "Half-twist recognition in braid groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Strand count.
    #[arg(short = 'n', value_parser = clap::value_parser!(u16).range(2..))]
    pub n: u16,
    /// Emit one JSON object per result.
    #[arg(long)]
    pub json: bool,
    /// Syllable budget for combing.
    #[arg(long)]
    pub budget: Option<usize>,
}

impl Common {
    fn budget(&self) -> Budget {
        match self.budget {
            Some(b) => Budget { comb_syllables: b },
            None => Budget::default(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether each word is a power of a half-twist.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Print the half-twist root of each word.
    Root {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Rewrite combed braids over a1..a(n-1).
    Comb {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Decide equality of two braids.
    Equal {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Print the crossing-index matrix.
    Cr {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Generate half-twist powers with known root and conjugator.
    Gen {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 8)]
        conj_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Check a certificate: root^k = word and P⁻¹ σ1^k P = word.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        root: String,
        #[arg(long, allow_hyphen_values = true)]
        conjugator: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

/// Collects the words to process: arguments, or else non-comment input lines.
fn gather(words: &[String], input: &mut dyn BufRead) -> std::io::Result<Vec<(usize, String)>> {
    if !words.is_empty() {
        return Ok(words.iter().cloned().enumerate().map(|(i, w)| (i + 1, w)).collect());
    }
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if !body.is_empty() {
            out.push((i + 1, body.to_string()));
        }
    }
    Ok(out)
}

fn word_json(w: &BraidWord) -> Value {
    json!(w.to_signed())
}

fn classification_json(input: &BraidWord, c: &Classification) -> Value {
    let (verdict, k, root, conj, step) = match c {
        Classification::NotPower { reason } => ("not_power", None, None, None, Some(reason.tag())),
        Classification::Identity => ("identity", Some(0), None, None, None),
        Classification::Power {
            k,
            root,
            conjugator,
        } => ("power", Some(*k), Some(word_json(root)), Some(word_json(conjugator)), None),
        Classification::Undecided { .. } => ("undecided", None, None, None, None),
    };
    json!({
        "schema": SCHEMA,
        "input": word_json(input),
        "verdict": verdict,
        "k": k,
        "root": root,
        "conjugator": conj,
        "failed_step": step,
    })
}

fn classification_text(c: &Classification) -> String {
    match c {
        Classification::NotPower { reason } => format!("not-power failed_step={reason}"),
        Classification::Identity => "identity".to_string(),
        Classification::Power {
            k,
            root,
            conjugator,
        } => format!("power k={k} root=[{root}] conjugator=[{conjugator}]"),
        Classification::Undecided { limit } => format!("undecided budget={limit}"),
    }
}

fn exit_for(c: &Classification) -> i32 {
    match c {
        Classification::Power { .. } | Classification::Identity => EXIT_OK,
        Classification::NotPower { .. } => EXIT_NOT_POWER,
        Classification::Undecided { .. } => EXIT_UNDECIDED,
    }
}

/// Later codes win in the order 0 < 1 < 3 < 2.
fn worse(a: i32, b: i32) -> i32 {
    let rank = |c| match c {
        EXIT_OK => 0,
        EXIT_NOT_POWER => 1,
        EXIT_UNDECIDED => 2,
        _ => 3,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn report_error(
    out: &mut dyn Write,
    err: &mut dyn Write,
    json: bool,
    line: usize,
    msg: &str,
) -> std::io::Result<()> {
    writeln!(err, "error: input {line}: {msg}")?;
    if json {
        writeln!(out, "{}", json!({"schema": SCHEMA, "line": line, "error": msg}))?;
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(cli.command, input, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(
    command: Command,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    match command {
        Command::Classify { common, words } => classify_cmd(&common, &words, false, input, out, err),
        Command::Root { common, words } => classify_cmd(&common, &words, true, input, out, err),
        Command::Comb { common, words } => {
            let n = common.n as usize;
            let mut code = EXIT_OK;
            for (line, text) in gather(&words, input)? {
                let w = match BraidWord::parse(n, &text) {
                    Ok(w) => w,
                    Err(e) => {
                        report_error(out, err, common.json, line, &e.to_string())?;
                        code = worse(code, EXIT_INPUT);
                        continue;
                    }
                };
                let result = if in_a_n(&w) {
                    comb_with(&w, &common.budget())
                } else {
                    Err(CombError::NotCombed)
                };
                let (this, value, text) = match &result {
                    Ok(f) => (EXIT_OK, json!(f.to_string()), f.to_string()),
                    Err(CombError::NotCombed) => (EXIT_NOT_POWER, Value::Null, "not-combed".into()),
                    Err(CombError::BudgetExceeded { .. }) => {
                        (EXIT_UNDECIDED, Value::Null, "undecided".into())
                    }
                };
                code = worse(code, this);
                if common.json {
                    let status = match &result {
                        Ok(_) => "combed",
                        Err(CombError::NotCombed) => "not_combed",
                        Err(_) => "undecided",
                    };
                    writeln!(
                        out,
                        "{}",
                        json!({"schema": SCHEMA, "input": word_json(&w), "verdict": status, "free_word": value})
                    )?;
                } else {
                    writeln!(out, "{text}")?;
                }
            }
            Ok(code)
        }
        Command::Equal {
            common,
            left,
            right,
        } => {
            let n = common.n as usize;
            let parsed = BraidWord::parse(n, &left).and_then(|u| Ok((u, BraidWord::parse(n, &right)?)));
            let (u, v) = match parsed {
                Ok(p) => p,
                Err(e) => {
                    report_error(out, err, common.json, 1, &e.to_string())?;
                    return Ok(EXIT_INPUT);
                }
            };
            let eq = equal(&u, &v).expect("same strand count");
            if common.json {
                writeln!(out, "{}", json!({"schema": SCHEMA, "equal": eq}))?;
            } else {
                writeln!(out, "{eq}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Cr { common, words } => {
            let n = common.n as usize;
            let mut code = EXIT_OK;
            for (line, text) in gather(&words, input)? {
                match BraidWord::parse(n, &text) {
                    Ok(w) => {
                        let m = w.crossing_matrix();
                        if common.json {
                            writeln!(
                                out,
                                "{}",
                                json!({"schema": SCHEMA, "input": word_json(&w), "crossing": m.rows()})
                            )?;
                        } else {
                            writeln!(out, "{m}")?;
                        }
                    }
                    Err(e) => {
                        report_error(out, err, common.json, line, &e.to_string())?;
                        code = worse(code, EXIT_INPUT);
                    }
                }
            }
            Ok(code)
        }
        Command::Gen {
            common,
            k,
            conj_len,
            seed,
            count,
        } => {
            if k == 0 {
                writeln!(err, "error: --k must be nonzero")?;
                return Ok(EXIT_INPUT);
            }
            let n = common.n as usize;
            for s in seed..seed + count as u64 {
                let inst = random_half_twist_power(n, k, conj_len, s);
                if common.json {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "n": n,
                            "k": k,
                            "seed": s,
                            "word": word_json(&inst.word),
                            "root": word_json(&inst.root),
                            "conjugator": word_json(&inst.conjugator),
                        })
                    )?;
                } else {
                    writeln!(
                        out,
                        "# seed={s} k={k} root=[{}] conjugator=[{}]",
                        inst.root, inst.conjugator
                    )?;
                    writeln!(out, "{}", inst.word)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            common,
            k,
            root,
            conjugator,
            word,
        } => {
            let n = common.n as usize;
            let parsed = (|| {
                Ok::<_, crate::error::BraidError>((
                    BraidWord::parse(n, &word)?,
                    BraidWord::parse(n, &root)?,
                    BraidWord::parse(n, &conjugator)?,
                ))
            })();
            let (w, r, p) = match parsed {
                Ok(x) => x,
                Err(e) => {
                    report_error(out, err, common.json, 1, &e.to_string())?;
                    return Ok(EXIT_INPUT);
                }
            };
            let ok = verify_power(&w, k, &r, &p);
            if common.json {
                writeln!(out, "{}", json!({"schema": SCHEMA, "valid": ok}))?;
            } else {
                writeln!(out, "{}", if ok { "valid" } else { "invalid" })?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_NOT_POWER })
        }
    }
}

fn classify_cmd(
    common: &Common,
    words: &[String],
    root_only: bool,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let n = common.n as usize;
    let budget = common.budget();
    let mut code = EXIT_OK;
    for (line, text) in gather(words, input)? {
        let w = match BraidWord::parse(n, &text) {
            Ok(w) => w,
            Err(e) => {
                report_error(out, err, common.json, line, &e.to_string())?;
                code = worse(code, EXIT_INPUT);
                continue;
            }
        };
        let c = classify_with(&w, &budget);
        code = worse(code, exit_for(&c));
        if common.json {
            writeln!(out, "{}", classification_json(&w, &c))?;
        } else if root_only {
            match &c {
                Classification::Power { root, .. } => writeln!(out, "{root}")?,
                other => writeln!(out, "- {}", classification_text(other))?,
            }
        } else {
            writeln!(out, "{}", classification_text(&c))?;
        }
    }
    Ok(code)
}
