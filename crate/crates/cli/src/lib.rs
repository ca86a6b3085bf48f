//! Command-line front end: argument parsing, dispatch and output.
//!
//! Exit codes: 0 success, 1 malformed input (including bad arguments and
//! the size cap), 2 domain rejection such as an inadmissible pair, 3 a
//! `verify` run with at least one failing property.

pub mod args;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::Parser;
use serde::Serialize;

use dyckperm::poset::{hasse_dot, upper_covers};
use dyckperm::{
    is_admissible, kreweras, leq, lprime, nu, Corpus, DyckPath, Error, PathPair, Pattern,
    Permutation,
};

use args::{Cli, Command, Global};
use output::*;

pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug)]
enum Failure {
    Malformed(String),
    Rejected(String),
    Verify,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAdmissible => Failure::Rejected("not admissible".into()),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parse `argv` (program name first) and run it, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{}", text)
            } else {
                write!(out, "{}", text)
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Malformed(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_MALFORMED
        }
        Err(Failure::Rejected(msg)) => {
            let _ = writeln!(err, "{}", msg);
            EXIT_REJECTED
        }
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        // a closed pipe is not worth a complaint
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_MALFORMED
        }
    }
}

fn parse_perm(words: &[String]) -> Result<Permutation, Failure> {
    Ok(words.join(" ").parse::<Permutation>()?)
}

fn parse_path(text: &str) -> Result<DyckPath, Failure> {
    Ok(text.parse::<DyckPath>()?)
}

fn parse_pair(p: &str, q: &str) -> Result<PathPair, Failure> {
    Ok(PathPair::new(parse_path(p)?, parse_path(q)?)?)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value)
        .map_err(|e| Failure::Malformed(format!("serialization failed: {}", e)))?;
    writeln!(out, "{}", text)?;
    Ok(())
}

fn show(g: &Global, path: &DyckPath) -> String {
    if g.code {
        path.to_code().to_string()
    } else {
        path.to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let g = &cli.global;
    let corpus = Corpus::with_cap(g.max_n);
    match &cli.command {
        Command::Map { perm } => {
            let sigma = parse_perm(perm)?;
            let pair = nu(&sigma);
            if g.json {
                json_line(out, &PairRecord::new(Some(&sigma), &pair))?;
            } else {
                writeln!(out, "{}\n{}", show(g, &pair.first), show(g, &pair.second))?;
            }
        }
        Command::Unmap { path_p, path_q } => {
            let pair = parse_pair(path_p, path_q)?;
            let pre = dyckperm::bijection::nu_inv_detailed(&pair)?;
            if g.json {
                json_line(out, &PairRecord::with_preimage(&pair, &pre))?;
            } else {
                writeln!(out, "{}", pre.alpha)?;
            }
        }
        Command::Admissible { path_p, path_q } => {
            let pair = parse_pair(path_p, path_q)?;
            let ok = is_admissible(&pair)?;
            if g.json {
                let alpha = if ok {
                    Some(dyckperm::nu_inv(&pair)?)
                } else {
                    None
                };
                let mut rec = PairRecord::new(alpha.as_ref(), &pair);
                rec.admissible = Some(ok);
                json_line(out, &rec)?;
            } else {
                writeln!(out, "{}", yes_no(ok))?;
            }
        }
        Command::Canon { perm } => {
            let sigma = parse_perm(perm)?;
            let canon = sigma.canonical_representative();
            if g.json {
                let mut rec = PairRecord::new(Some(&canon), &nu(&canon));
                rec.input = Some(sigma.to_string());
                json_line(out, &rec)?;
            } else {
                writeln!(out, "{}", canon)?;
            }
        }
        Command::Lprime { path } | Command::Kreweras { path } => {
            let p = parse_path(path)?;
            let image = match cli.command {
                Command::Lprime { .. } => lprime(&p),
                _ => kreweras(&p),
            };
            if g.json {
                json_line(
                    out,
                    &ImageRecord {
                        input: PathRecord::of(&p),
                        output: PathRecord::of(&image),
                    },
                )?;
            } else {
                writeln!(out, "{}", show(g, &image))?;
            }
        }
        Command::Leq { path_p, path_q } => {
            let p = parse_path(path_p)?;
            let q = parse_path(path_q)?;
            let result = leq(&p, &q)?;
            if g.json {
                json_line(
                    out,
                    &LeqRecord {
                        path_p: p.to_string(),
                        path_q: q.to_string(),
                        leq: result,
                    },
                )?;
            } else {
                writeln!(out, "{}", yes_no(result))?;
            }
        }
        Command::Covers { list, dot, n } => match (list, n) {
            (Some(path), _) => {
                let p = parse_path(path)?;
                let covers = upper_covers(&p);
                if g.json {
                    json_line(
                        out,
                        &CoversRecord {
                            path: p.to_string(),
                            covers: covers.iter().map(ToString::to_string).collect(),
                        },
                    )?;
                } else {
                    for q in &covers {
                        writeln!(out, "{}", show(g, q))?;
                    }
                }
            }
            (None, Some(n)) if *dot => {
                let paths: Vec<DyckPath> = corpus.dyck_paths(*n)?.collect();
                let text = hasse_dot(&paths);
                if g.json {
                    json_line(out, &DotRecord { n: *n, dot: text })?;
                } else {
                    write!(out, "{}", text)?;
                }
            }
            _ => {
                return Err(Failure::Malformed(
                    "covers needs either --list <path> or --dot --n <N>".into(),
                ))
            }
        },
        Command::Enumerate { n, avoid, paths } => {
            if *paths {
                for p in corpus.dyck_paths(*n)? {
                    if g.json {
                        json_line(out, &PathRecord::of(&p))?;
                    } else {
                        writeln!(out, "{}", show(g, &p))?;
                    }
                }
            } else {
                let perms = match avoid {
                    Some(a) => corpus.avoiding(*n, Pattern::from(*a))?,
                    None => corpus.permutations(*n)?,
                };
                for s in perms {
                    if g.json {
                        json_line(
                            out,
                            &PermRecord {
                                perm: s.to_string(),
                            },
                        )?;
                    } else {
                        writeln!(out, "{}", s)?;
                    }
                }
            }
        }
        Command::Count { n, avoid, paths } => {
            let (objects, count) = if *paths {
                ("dyck paths".to_string(), corpus.count_dyck(*n)?)
            } else {
                match avoid {
                    Some(a) => {
                        let pattern = Pattern::from(*a);
                        (
                            format!("{}-avoiders", pattern),
                            corpus.count_avoiding(*n, pattern)?,
                        )
                    }
                    None => (
                        "permutations".to_string(),
                        corpus.permutations(*n)?.count() as u64,
                    ),
                }
            };
            if g.json {
                json_line(
                    out,
                    &CountRecord {
                        n: *n,
                        objects,
                        count,
                    },
                )?;
            } else {
                writeln!(out, "{}", count)?;
            }
        }
        Command::Render { path } => {
            let p = parse_path(path)?;
            let ascii = p.render_ascii();
            if g.json {
                json_line(
                    out,
                    &RenderRecord {
                        path: p.to_string(),
                        code: p.to_code().to_string(),
                        ascii,
                    },
                )?;
            } else {
                write!(out, "{}", ascii)?;
            }
        }
        Command::Verify {
            n,
            suite,
            jobs,
            seed,
        } => {
            if *n == 0 {
                return Err(Failure::Malformed("verify needs --n of at least 1".into()));
            }
            let config = verify::Config {
                n_max: *n,
                suites: suite.clone(),
                jobs: *jobs,
                seed: *seed,
                cap: g.max_n,
            };
            let outcomes = verify::run(&config)?;
            let mut all_passed = true;
            for o in &outcomes {
                all_passed &= o.passed;
                if g.json {
                    json_line(out, o)?;
                } else {
                    writeln!(out, "{}", o)?;
                }
            }
            if !all_passed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}
