mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use permgroup::{
    blichfeldt_check, classify_report, default_corpus, maillet_check, moments_direct,
    moments_recursive, Error, Filter, GroupEngine, DEFAULT_LATTICE_CAP,
};
use serde::Serialize;

use input::GroupInput;
use report::{
    CheckDocument, ClassifyDocument, CorpusDocument, CorpusRow, MomentRow, MomentsDocument,
    OrderDocument,
};

#[derive(Parser)]
#[command(
    name = "permgroup",
    version,
    about = "Fixed-point divisibility checks for permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the group order
    Order {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long)]
        json: bool,
    },
    /// Test whether |G| divides the product over a fixed-point spectrum
    Check {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Largest group whose subgroup lattice may be built
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate the fixed-point moments F_0..F_K
    Moments {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Structural classification report
    Classify {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long)]
        json: bool,
    },
    /// Run every check over the built-in corpus
    Corpus {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FilterArg {
    All,
    PrimePower,
    Prime,
    Subgroups,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Filter {
        match f {
            FilterArg::All => Filter::AllNontrivialElements,
            FilterArg::PrimePower => Filter::PrimePowerOrder,
            FilterArg::Prime => Filter::PrimeOrder,
            FilterArg::Subgroups => Filter::AllNontrivialSubgroups,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Direct,
    Recursive,
    Both,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::OrderMismatch { .. } => 3,
        Error::CapExceeded { .. } => 4,
        Error::NonIntegral { .. } => 5,
        _ => 2,
    }
}

fn emit<T: Serialize>(json: bool, doc: &T, text: impl FnOnce(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("documents serialize")
        );
    } else {
        print!("{}", text(doc));
    }
}

fn order(input: &GroupInput, json: bool) -> permgroup::Result<u8> {
    let g = input.load()?;
    let doc = OrderDocument {
        degree: g.degree(),
        order: g.order().to_string(),
    };
    emit(json, &doc, |d| format!("{}\n", d.order));
    Ok(0)
}

fn check(
    input: &GroupInput,
    filter: Filter,
    lattice_cap: usize,
    json: bool,
) -> permgroup::Result<u8> {
    let g = input.load()?;
    let report = match filter {
        Filter::AllNontrivialSubgroups => maillet_check(&g, lattice_cap)?,
        _ => blichfeldt_check(&g, filter)?,
    };
    let doc = CheckDocument::new(&report);
    emit(json, &doc, CheckDocument::render_text);
    Ok(if doc.divides { 0 } else { 1 })
}

fn moments(input: &GroupInput, max_k: u32, method: Method, json: bool) -> permgroup::Result<u8> {
    let g = input.load()?;
    let direct = match method {
        Method::Direct | Method::Both => Some(moments_direct(&g, max_k)?),
        Method::Recursive => None,
    };
    let recursive = match method {
        Method::Recursive | Method::Both => Some(moments_recursive(&g, max_k)),
        Method::Direct => None,
    };
    let agree = match (&direct, &recursive) {
        (Some(d), Some(r)) => Some(d == r),
        _ => None,
    };
    let cell = |col: &Option<Vec<permgroup::MomentValue>>, k: u32| {
        col.as_ref().map(|v| v[k as usize].value.to_string())
    };
    let doc = MomentsDocument {
        degree: g.degree(),
        order: g.order().to_string(),
        method: format!("{method:?}").to_lowercase(),
        moments: (0..=max_k)
            .map(|k| MomentRow {
                k,
                direct: cell(&direct, k),
                recursive: cell(&recursive, k),
            })
            .collect(),
        agree,
    };
    emit(json, &doc, MomentsDocument::render_text);
    Ok(if agree == Some(false) { 5 } else { 0 })
}

fn classify(input: &GroupInput, json: bool) -> permgroup::Result<u8> {
    let g = input.load()?;
    let doc = ClassifyDocument::new(&classify_report(&g));
    emit(json, &doc, ClassifyDocument::render_text);
    Ok(0)
}

fn orbit_stabilizer_holds(g: &GroupEngine) -> bool {
    (1..=g.degree()).all(|p| {
        let orbit = g.orbit(p).map(|o| o.len()).unwrap_or(0);
        g.point_stabilizer(p)
            .is_ok_and(|s| BigUint::from(orbit) * s.order() == g.order())
    })
}

fn corpus_row(name: String, g: &GroupEngine, note: Option<&str>) -> CorpusRow {
    let report = classify_report(g);
    let blichfeldt = report.blichfeldt.as_ref();
    let moments_agree = moments_direct(g, 6).is_ok_and(|d| d == moments_recursive(g, 6));
    CorpusRow {
        name,
        degree: g.degree(),
        order: g.order().to_string(),
        spectrum: blichfeldt
            .map(|b| b.spectrum.values.clone())
            .unwrap_or_default(),
        product: blichfeldt
            .map(|b| b.product.to_string())
            .unwrap_or_default(),
        divides: blichfeldt.is_some_and(|b| b.divides),
        sharp: blichfeldt.is_some_and(|b| b.is_sharp),
        tags: report.tags(),
        moments_agree,
        orbit_stabilizer: orbit_stabilizer_holds(g),
        note: note.map(String::from),
    }
}

fn corpus(json: bool) -> permgroup::Result<u8> {
    let groups: Vec<CorpusRow> = default_corpus()?
        .into_iter()
        .map(|e| corpus_row(e.name, &e.engine, e.note))
        .collect();
    let all_invariants_hold = groups.iter().all(CorpusRow::holds);
    let doc = CorpusDocument {
        groups,
        all_invariants_hold,
    };
    emit(json, &doc, CorpusDocument::render_text);
    Ok(if all_invariants_hold { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Order { input, json } => order(input, *json),
        Command::Check {
            input,
            filter,
            lattice_cap,
            json,
        } => check(input, (*filter).into(), *lattice_cap, *json),
        Command::Moments {
            input,
            max_k,
            method,
            json,
        } => moments(input, *max_k, *method, *json),
        Command::Classify { input, json } => classify(input, *json),
        Command::Corpus { json } => corpus(*json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
