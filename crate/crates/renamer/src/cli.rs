//! Command-line front end.  Machine-readable verdicts go to stdout,
//! diagnostics to stderr; the exit code encodes the verdict (0 member /
//! renamable / satisfiable, 1 negative verdict, 2 usage or input error,
//! 3 resource limit).

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use renamer_core::clause::{apply_renaming, check_membership, ClassTag, ClauseSet, Renaming};
use renamer_core::encode::encode;
use renamer_core::engine::{enumerate_models, extract_model, EngineError};
use renamer_core::oracle::reduce_cnf_to_pvd;
use renamer_core::prop::PropClauseSet;

use crate::dimacs::{emit_dimacs, parse_dimacs};
use crate::syntax::{parse_clause_set, serialize_clause_set};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_RESOURCE_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "renamer",
    about = "Test clause sets for membership in and renamability to Horn, OCC1N and PVD"
)]
pub struct Cli {
    /// Ceiling on clauses stored during saturation.
    #[arg(long, global = true, default_value_t = renamer_core::DEFAULT_CLAUSE_LIMIT)]
    pub max_clauses: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Class {
    Horn,
    Occ1n,
    Pvd,
}

impl From<Class> for ClassTag {
    fn from(c: Class) -> ClassTag {
        match c {
            Class::Horn => ClassTag::Horn,
            Class::Occ1n => ClassTag::Occ1n,
            Class::Pvd => ClassTag::Pvd,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassArg {
    /// Target class.
    #[arg(long, value_enum)]
    pub class: Class,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check membership; with --rename, decide renamability and print a
    /// verified renaming.
    Check {
        #[command(flatten)]
        class: ClassArg,
        /// Search for a renaming into the class instead of plain membership.
        #[arg(long)]
        rename: bool,
        file: PathBuf,
    },
    /// List every renaming moving the clause set into the class.
    Enumerate {
        #[command(flatten)]
        class: ClassArg,
        /// Maximum number of renamings to print (0 = unbounded).
        #[arg(long, default_value_t = 100)]
        limit: usize,
        file: PathBuf,
    },
    /// Print the propositional renamability encoding as DIMACS CNF.
    Encode {
        #[command(flatten)]
        class: ClassArg,
        file: PathBuf,
    },
    /// Decide satisfiability of a DIMACS CNF by hyper-resolution.
    Solve {
        /// Also print a satisfying assignment.
        #[arg(long)]
        model: bool,
        file: PathBuf,
    },
    /// Translate a DIMACS CNF into a clause set that is renamable to PVD
    /// iff the CNF is satisfiable.
    Reduce { file: PathBuf },
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Check { class, rename, file } => {
            cmd_check(class.class.into(), rename, &file, cli.max_clauses)
        }
        Command::Enumerate { class, limit, file } => {
            cmd_enumerate(class.class.into(), limit, &file)
        }
        Command::Encode { class, file } => cmd_encode(class.class.into(), &file),
        Command::Solve { model, file } => cmd_solve(model, &file, cli.max_clauses),
        Command::Reduce { file } => cmd_reduce(&file),
    }
}

fn load_clause_set(file: &PathBuf) -> Result<ClauseSet, i32> {
    let text = fs::read_to_string(file).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        EXIT_INPUT_ERROR
    })?;
    parse_clause_set(&text).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        EXIT_INPUT_ERROR
    })
}

fn load_cnf(file: &PathBuf) -> Result<PropClauseSet, i32> {
    let text = fs::read_to_string(file).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        EXIT_INPUT_ERROR
    })?;
    parse_dimacs(&text).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        EXIT_INPUT_ERROR
    })
}

fn report_engine_error(e: &EngineError) -> i32 {
    eprintln!("{e}");
    match e {
        EngineError::ResourceLimit { .. } => EXIT_RESOURCE_LIMIT,
        _ => EXIT_INPUT_ERROR,
    }
}

fn print_violations(set: &ClauseSet, verdict: &renamer_core::Verdict) {
    for v in &verdict.violations {
        eprintln!(
            "clause {}: {} ({})",
            v.clause_index + 1,
            v.kind,
            set.clauses()[v.clause_index]
                .literals()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" | ")
        );
    }
}

fn cmd_check(class: ClassTag, rename: bool, file: &PathBuf, max_clauses: usize) -> i32 {
    let set = match load_clause_set(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let verdict = check_membership(&set, class);
    if !rename {
        if verdict.member {
            println!("MEMBER");
            return EXIT_POSITIVE;
        }
        println!("NOT_MEMBER");
        print_violations(&set, &verdict);
        return EXIT_NEGATIVE;
    }
    if verdict.member {
        println!("MEMBER");
        return EXIT_POSITIVE;
    }
    let encoding = encode(&set, class);
    let extraction = match extract_model(&encoding, max_clauses) {
        Ok(e) => e,
        Err(e) => return report_engine_error(&e),
    };
    match extraction.model {
        None => {
            println!("NOT_RENAMABLE");
            EXIT_NEGATIVE
        }
        Some(model) => {
            let renaming = model.to_renaming();
            if !verify_renaming(&set, class, &renaming) {
                eprintln!("internal error: extracted renaming failed re-verification");
                return EXIT_INPUT_ERROR;
            }
            println!("RENAMABLE {renaming}");
            EXIT_POSITIVE
        }
    }
}

fn verify_renaming(set: &ClauseSet, class: ClassTag, renaming: &Renaming) -> bool {
    apply_renaming(renaming, set)
        .map(|renamed| check_membership(&renamed, class).member)
        .unwrap_or(false)
}

fn cmd_enumerate(class: ClassTag, limit: usize, file: &PathBuf) -> i32 {
    let set = match load_clause_set(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let encoding = encode(&set, class);
    let universe = set.predicate_names();
    let limit = if limit == 0 { None } else { Some(limit) };
    let (models, truncated) = match enumerate_models(&encoding, &universe, limit) {
        Ok(r) => r,
        Err(e) => return report_engine_error(&e),
    };
    let mut any = false;
    for model in &models {
        let renaming = model.to_renaming();
        if !verify_renaming(&set, class, &renaming) {
            eprintln!("internal error: enumerated renaming failed re-verification");
            return EXIT_INPUT_ERROR;
        }
        println!("{renaming}");
        any = true;
    }
    if truncated {
        println!("TRUNCATED");
    }
    if any {
        EXIT_POSITIVE
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_encode(class: ClassTag, file: &PathBuf) -> i32 {
    let set = match load_clause_set(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let (_, text) = emit_dimacs(&encode(&set, class));
    print!("{text}");
    EXIT_POSITIVE
}

fn cmd_solve(model: bool, file: &PathBuf, max_clauses: usize) -> i32 {
    let cnf = match load_cnf(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let extraction = match extract_model(&cnf, max_clauses) {
        Ok(e) => e,
        Err(e) => return report_engine_error(&e),
    };
    match extraction.model {
        None => {
            println!("UNSAT");
            EXIT_NEGATIVE
        }
        Some(m) => {
            println!("SAT");
            if model {
                let assignment: Vec<String> = m
                    .universe()
                    .iter()
                    .map(|v| if m.is_true(v) { v.clone() } else { format!("-{v}") })
                    .collect();
                println!("v {}", assignment.join(" "));
            }
            EXIT_POSITIVE
        }
    }
}

fn is_ident(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn cmd_reduce(file: &PathBuf) -> i32 {
    let cnf = match load_cnf(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    for v in cnf.universe() {
        if !is_ident(v) {
            eprintln!("variable name '{v}' is not a valid predicate identifier");
            return EXIT_INPUT_ERROR;
        }
    }
    print!("{}", serialize_clause_set(&reduce_cnf_to_pvd(&cnf)));
    EXIT_POSITIVE
}
