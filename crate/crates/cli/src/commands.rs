use std::collections::BTreeMap;
use std::time::Instant;

use nmsa_core::{
    approx_msa, approx_nmsa2, brute_force_optimum, classify_matrix, dist_a, dist_n_with,
    eail_check, eail_to_rip, heuristic_n, score, score_sp_array, solve_exact, solve_exact_array,
    Criterion, EailOutcome, EnumerationBudget, ExactOptions, KSequence, MatrixClassReport,
    Objective, Rational,
};

use crate::args::{AlignArgs, ClassifyArgs, EailArgs, Method, OracleArgs, ScoreArgs};
use crate::error::{CliError, CliResult};
use crate::input::{load_alignment, load_matrix, load_scoring, load_sequences, Scoring};
use crate::report::{rows_of, EailReport, ResultDocument, ScoreReport, Stats, ValueDoc};

/// Raw outcome of one solver call before it becomes a document.
struct Solved {
    value: Rational,
    alignment: nmsa_core::Alignment,
    cells: Option<u64>,
    enumerated: Option<u64>,
    guarantee: Option<String>,
    center: Option<usize>,
}

impl Solved {
    fn new(value: Rational, alignment: nmsa_core::Alignment) -> Solved {
        Solved {
            value,
            alignment,
            cells: None,
            enumerated: None,
            guarantee: None,
            center: None,
        }
    }
}

fn unsupported(criterion: Criterion, method: Method, why: &str) -> CliError {
    CliError::Unsupported(format!(
        "criterion {criterion} with method {}: {why}",
        method.name()
    ))
}

fn oracle(
    seqs: &KSequence,
    scoring: &Scoring,
    criterion: Criterion,
    budget: EnumerationBudget,
) -> CliResult<Solved> {
    let objective = match (scoring, criterion) {
        (Scoring::Single(g), c) => Objective::Score(c, g),
        (Scoring::Array(arr), Criterion::Sp) => Objective::SpArray(arr),
        (Scoring::Array(_), c) => {
            return Err(unsupported(
                c,
                Method::Oracle,
                "a matrix array only scores sp",
            ))
        }
    };
    let r = brute_force_optimum(seqs, objective, budget)?;
    Ok(Solved {
        enumerated: Some(r.alignments_enumerated),
        ..Solved::new(r.value, r.alignment)
    })
}

fn check_arity(seqs: &KSequence, criterion: Criterion) -> CliResult<()> {
    if criterion.is_pairwise() && seqs.k() != 2 {
        return Err(CliError::Input(format!(
            "criterion {criterion} needs exactly 2 sequences, the input has {}",
            seqs.k()
        )));
    }
    Ok(())
}

fn solve(
    seqs: &KSequence,
    scoring: &Scoring,
    criterion: Criterion,
    method: Method,
    opts: &ExactOptions,
) -> CliResult<Solved> {
    use Criterion as C;
    check_arity(seqs, criterion)?;
    if method == Method::Oracle {
        return oracle(seqs, scoring, criterion, EnumerationBudget::default());
    }
    let g = match scoring {
        Scoring::Single(g) => g,
        Scoring::Array(arr) => {
            return match (criterion, method) {
                (C::Sp, Method::Exact) => {
                    let r = solve_exact_array(seqs, arr, opts)?;
                    Ok(Solved {
                        cells: Some(r.cells),
                        ..Solved::new(r.value, r.alignment)
                    })
                }
                _ => Err(unsupported(
                    criterion,
                    method,
                    "a matrix array supports sp with exact or oracle",
                )),
            };
        }
    };
    let s = |i: usize| seqs.get(i);
    match (criterion, method) {
        (C::A, Method::Exact) => {
            let r = dist_a(s(0), s(1), g)?;
            Ok(Solved {
                cells: Some(r.cells),
                ..Solved::new(r.value, r.alignment)
            })
        }
        (C::N, Method::Exact) => {
            let r = dist_n_with(s(0), s(1), g, opts)?;
            Ok(Solved {
                cells: Some(r.cells),
                ..Solved::new(r.value, r.alignment)
            })
        }
        (C::N, Method::Heuristic) => {
            let r = heuristic_n(s(0), s(1), g)?;
            Ok(Solved {
                cells: Some(r.cells),
                guarantee: Some("2".into()),
                ..Solved::new(r.value, r.alignment)
            })
        }
        (C::Sp | C::V1 | C::V2 | C::V3, Method::Exact) => {
            let r = solve_exact(criterion, seqs, g, opts)?;
            Ok(Solved {
                cells: Some(r.cells),
                ..Solved::new(r.value, r.alignment)
            })
        }
        (C::Sp | C::V2, Method::Star) => {
            let r = if criterion == C::Sp {
                approx_msa(seqs, g)?
            } else {
                approx_nmsa2(seqs, g)?
            };
            Ok(Solved {
                guarantee: Some(r.guarantee.tag().to_string()),
                center: Some(r.center + 1),
                ..Solved::new(r.value, r.alignment)
            })
        }
        (_, Method::Star) => Err(unsupported(
            criterion,
            method,
            "star is offered for sp and v2",
        )),
        (_, Method::Heuristic) => Err(unsupported(criterion, method, "heuristic is offered for n")),
        (_, Method::Oracle) => unreachable!("oracle returns early"),
    }
}

fn document(
    criterion: Criterion,
    method: Method,
    solved: Solved,
    start: Instant,
    decimals: u32,
) -> ResultDocument {
    ResultDocument {
        criterion,
        method,
        value: ValueDoc::new(solved.value, decimals),
        alignment: rows_of(&solved.alignment),
        guarantee: solved.guarantee,
        center: solved.center,
        stats: Stats {
            cells: solved.cells,
            alignments_enumerated: solved.enumerated,
            wall_ms: start.elapsed().as_millis() as u64,
        },
    }
}

pub fn align(args: &AlignArgs) -> CliResult<ResultDocument> {
    let seqs = load_sequences(&args.input.input)?;
    let scoring = load_scoring(&args.input, seqs.k())?;
    let criterion = Criterion::from(args.criterion);
    let opts = ExactOptions::with_max_cells(args.max_cells);
    let start = Instant::now();
    let solved = solve(&seqs, &scoring, criterion, args.method, &opts)?;
    Ok(document(
        criterion,
        args.method,
        solved,
        start,
        args.output.decimals,
    ))
}

pub fn run_oracle(args: &OracleArgs) -> CliResult<ResultDocument> {
    let seqs = load_sequences(&args.input.input)?;
    let scoring = load_scoring(&args.input, seqs.k())?;
    let criterion = Criterion::from(args.criterion);
    check_arity(&seqs, criterion)?;
    let budget = EnumerationBudget {
        max_alignments: args.max_alignments,
        ..EnumerationBudget::default()
    };
    let start = Instant::now();
    let solved = oracle(&seqs, &scoring, criterion, budget)?;
    Ok(document(
        criterion,
        Method::Oracle,
        solved,
        start,
        args.output.decimals,
    ))
}

pub fn score_alignment(args: &ScoreArgs) -> CliResult<ScoreReport> {
    let seqs = load_sequences(&args.input.input)?;
    let scoring = load_scoring(&args.input, seqs.k())?;
    let a = load_alignment(&args.alignment, &seqs)?;
    let d = args.output.decimals;
    let mut scores = BTreeMap::new();
    match &scoring {
        Scoring::Array(arr) => {
            scores.insert("sp".to_string(), ValueDoc::new(score_sp_array(arr, &a)?, d));
        }
        Scoring::Single(g) => {
            for c in Criterion::ALL {
                if !c.is_pairwise() || seqs.k() == 2 {
                    scores.insert(c.name().to_string(), ValueDoc::new(score(c, g, &a)?, d));
                }
            }
        }
    }
    Ok(ScoreReport {
        k: a.k(),
        width: a.width(),
        scores,
    })
}

pub fn classify(args: &ClassifyArgs) -> CliResult<MatrixClassReport> {
    Ok(classify_matrix(&load_matrix(&args.matrix)?))
}

pub fn eail(args: &EailArgs) -> CliResult<EailReport> {
    let opts = ExactOptions::with_max_cells(args.max_cells);
    let outcome = eail_check(&args.n, &args.lengths, &opts)?;
    let rip = eail_to_rip(&args.n, &args.lengths)?;
    let witness = match outcome {
        EailOutcome::Yes(cols) => Some(
            cols.iter()
                .map(|b| b.to_bits().iter().map(|&x| char::from(b'0' + x)).collect())
                .collect(),
        ),
        EailOutcome::No => None,
    };
    Ok(EailReport {
        n: args.n.clone(),
        lengths: args.lengths.clone(),
        exists: witness.is_some(),
        witness,
        rip,
    })
}
