//! `stanley`: command-line front end for Stanley symmetric functions,
//! transition trees, James-Peel trees and pattern scans.
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 usage
//! error, 3 resource or budget limit.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use stanley_core::edelman_greene::{eg_tableaux_with, stanley_via_eg};
use stanley_core::jp::{jp_tree_with_budget, reduce_tree, skeleton_pattern, witness_pattern};
use stanley_core::ls::{
    eg_number, ls_tree_with_budget, stanley_via_ls_with_budget, DEFAULT_NODE_BUDGET,
};
use stanley_core::monomial::stanley_via_monomials;
use stanley_core::perm::DEFAULT_WORD_CAP;
use stanley_core::{Diagram, Execution, Permutation, SchurExpansion};
use stanley_lab::{classify_all, scan_minimal, LabError, PredicateSpec, ScanConfig, Suite};

const BUDGET_ENV: &str = "STANLEY_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "stanley",
    version,
    about = "Stanley symmetric functions, transition trees and pattern scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Node budget for tree construction (overrides STANLEY_BUDGET).
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Args, Debug)]
struct Perm {
    /// Permutation in one-line notation, e.g. 316524 or "10 2 3 1 4 5 6 7 8 9".
    #[arg(value_parser = parse_perm)]
    w: Permutation,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schur expansion of F_w.
    Fw {
        #[command(flatten)]
        perm: Perm,
        #[arg(long, value_enum, default_value_t = Method::Ls)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Edelman-Greene tableaux of w.
    EgTableaux {
        #[command(flatten)]
        perm: Perm,
        /// Cap on reduced words inserted.
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Reduced words of w, one per line.
    Redwords {
        #[command(flatten)]
        perm: Perm,
        /// Print only the number of reduced words.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Lascoux-Schutzenberger transition tree.
    Lstree {
        #[command(flatten)]
        perm: Perm,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// James-Peel tree of D(w).
    Jptree {
        #[command(flatten)]
        perm: Perm,
        /// Contract edges whose moves do not change the diagram class.
        #[arg(long)]
        reduced: bool,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Rothe diagram of w.
    Diagram {
        #[command(flatten)]
        perm: Perm,
        #[arg(long, group = "view")]
        essential: bool,
        #[arg(long, group = "view")]
        dmin: bool,
        #[arg(long, group = "view")]
        dmax: bool,
        #[arg(long)]
        json: bool,
    },
    /// EG number, smallest k, multiplicity bound and class flags.
    Classify {
        #[command(flatten)]
        perm: Perm,
        #[arg(long)]
        json: bool,
    },
    /// Pattern of w read off its reduced James-Peel tree, with the same EG number.
    Skeleton {
        #[command(flatten)]
        perm: Perm,
    },
    /// Pattern of w on at most 4k letters with EG > k.
    Witness {
        #[command(flatten)]
        perm: Perm,
        #[arg(long)]
        k: u64,
    },
    /// Count permutations satisfying a predicate in S_1..S_N.
    Scan {
        /// vexillary, kvex(k), multfree, multbound(k), forest, essential3, esspath2.
        #[arg(long, value_parser = parse_pred)]
        pred: PredicateSpec,
        #[arg(long)]
        max_n: usize,
        /// Also mine minimal forbidden patterns.
        #[arg(long)]
        minimal: bool,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Print per-size timings to stderr.
        #[arg(long)]
        timing: bool,
    },
    /// Check a shipped pattern list or the code-pattern properties.
    Verify {
        /// vexillary, kvex(2), kvex(3), forest, essential3, esspath2, code-patterns.
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Ls,
    Eg,
    Oracle,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: stanley_core::Error| e.to_string())
}

fn parse_pred(s: &str) -> Result<PredicateSpec, String> {
    s.parse().map_err(|e: LabError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: LabError| e.to_string())
}

enum Failure {
    Domain(String),
    Resource(String),
    Usage(String),
}

impl From<stanley_core::Error> for Failure {
    fn from(e: stanley_core::Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn budget(cli: &Cli) -> Result<usize, Failure> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV}={v} is not a node count"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn expansion(w: &Permutation, method: Method, budget: usize) -> Result<SchurExpansion, Failure> {
    Ok(match method {
        Method::Ls => stanley_via_ls_with_budget(w, budget)?,
        Method::Eg => stanley_via_eg(w)?,
        Method::Oracle => stanley_via_monomials(w)?,
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let budget = budget(cli)?;
    let exec = Execution::parallel(cli.workers);
    let scan_cfg = ScanConfig {
        exec: exec.clone(),
        ..ScanConfig::default()
    };
    let out = match &cli.command {
        Command::Fw { perm, method, json } => {
            let f = expansion(&perm.w, *method, budget)?;
            if *json {
                pretty(&f.to_json())
            } else {
                format!("{f}\n")
            }
        }
        Command::EgTableaux { perm, cap, json } => {
            let tabs = eg_tableaux_with(&perm.w, *cap, &exec)?;
            if *json {
                let rows: Vec<_> = tabs.iter().map(|t| t.rows().to_vec()).collect();
                pretty(&json!(rows))
            } else {
                tabs.iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::Redwords { perm, count, cap } => {
            if *count {
                format!("{}\n", perm.w.count_reduced_words())
            } else {
                let mut s = String::new();
                for word in perm.w.reduced_words(*cap)? {
                    let letters: Vec<String> = word.iter().map(|a| a.to_string()).collect();
                    s.push_str(&letters.join(" "));
                    s.push('\n');
                }
                s
            }
        }
        Command::Lstree { perm, json, dot } => {
            let t = ls_tree_with_budget(&perm.w, budget)?;
            if *json {
                pretty(&t.to_json())
            } else if *dot {
                t.to_dot()
            } else {
                t.to_text()
            }
        }
        Command::Jptree {
            perm,
            reduced,
            json,
            dot,
        } => {
            let mut t = jp_tree_with_budget(&perm.w, budget)?;
            if *reduced {
                t = reduce_tree(&t);
            }
            if *json {
                pretty(&t.to_json())
            } else if *dot {
                t.to_dot()
            } else {
                t.to_text()
            }
        }
        Command::Diagram {
            perm,
            essential,
            dmin,
            dmax,
            json,
        } => {
            let d = Diagram::rothe(&perm.w);
            if *essential {
                let cells: Vec<(usize, usize)> = d.essential_set().into_iter().collect();
                if *json {
                    pretty(&json!(cells))
                } else {
                    cells.iter().map(|(r, c)| format!("({r},{c})\n")).collect()
                }
            } else if *dmin || *dmax {
                let p = if *dmin { d.d_min() } else { d.d_max() };
                if *json {
                    pretty(&json!(p.parts()))
                } else {
                    format!("{p}\n")
                }
            } else if *json {
                pretty(&d.to_json())
            } else {
                d.to_ascii()
            }
        }
        Command::Classify { perm, json } => {
            let w = &perm.w;
            let eg = eg_number(w)?;
            let f = stanley_via_ls_with_budget(w, budget)?;
            let mult = f.max_multiplicity();
            let vex = w.is_vexillary();
            let forest = Diagram::rothe(w).graph_is_forest();
            let essential3 = PredicateSpec::Essential3.eval(w)?;
            if *json {
                pretty(&json!({
                    "perm": w.to_string(),
                    "eg": eg,
                    "min_k": eg,
                    "mult_bound": mult,
                    "multiplicity_free": mult <= 1,
                    "vexillary": vex,
                    "forest": forest,
                    "essential3": essential3,
                }))
            } else {
                format!(
                    "EG={eg}\nmin-k={eg}\nmult-bound={mult}\nvexillary={vex}\nforest={forest}\nessential3={essential3}\n"
                )
            }
        }
        Command::Skeleton { perm } => format!("{}\n", skeleton_pattern(&perm.w)?),
        Command::Witness { perm, k } => match witness_pattern(&perm.w, *k)? {
            Some(v) => format!("{v}\n"),
            None => format!("none: EG({}) <= {k}\n", perm.w),
        },
        Command::Scan {
            pred,
            max_n,
            minimal,
            json,
            csv,
            timing,
        } => {
            let report = if *minimal {
                scan_minimal(*max_n, *pred, &scan_cfg)?
            } else {
                classify_all(*max_n, *pred, &scan_cfg)?
            };
            if *timing {
                eprint!("{}", report.timing_text());
            }
            if *json {
                report.to_json()
            } else if *csv {
                report.to_csv()
            } else {
                report.to_text()
            }
        }
        Command::Verify { suite, max_n, json } => {
            let report = suite.run(*max_n, &scan_cfg)?;
            let text = if *json {
                report.to_json()
            } else {
                report.to_text()
            };
            if !report.holds() {
                print_out(&text);
                return Err(Failure::Domain(format!("suite {suite} failed")));
            }
            text
        }
    };
    Ok(out)
}

fn print_out(s: &str) {
    if s.ends_with('\n') {
        print!("{s}");
    } else {
        println!("{s}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print_out(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
