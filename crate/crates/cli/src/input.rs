//! File readers. Sequence and matrix symbols are folded to uppercase.

use std::fs;
use std::path::{Path, PathBuf};

use nmsa_core::sequence::{pair_count, pairs};
use nmsa_core::{validate_alignment, Alignment, KSequence, MatrixArray, ScoringMatrix, Sequence};

use crate::args::InputArgs;
use crate::error::{CliError, CliResult};
use crate::report::ResultDocument;

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn at(path: &Path) -> impl Fn(nmsa_core::Error) -> CliError + '_ {
    move |source| CliError::File {
        path: path.to_path_buf(),
        source,
    }
}

/// `>`-headed records. Lines before the first header must be blank.
/// Whitespace inside sequence lines is dropped.
pub fn parse_fasta(text: &str) -> nmsa_core::Result<Vec<(String, Vec<u8>)>> {
    let mut records: Vec<(String, Vec<u8>)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if let Some(name) = line.strip_prefix('>') {
            records.push((name.trim().to_string(), Vec::new()));
        } else if let Some((_, body)) = records.last_mut() {
            body.extend(
                line.bytes()
                    .filter(|b| !b.is_ascii_whitespace())
                    .map(|b| b.to_ascii_uppercase()),
            );
        } else if !line.trim().is_empty() {
            return Err(nmsa_core::Error::Parse {
                line: n + 1,
                message: "sequence data before the first `>` header".into(),
            });
        }
    }
    if records.is_empty() {
        return Err(nmsa_core::Error::Parse {
            line: 1,
            message: "no FASTA records".into(),
        });
    }
    Ok(records)
}

pub fn load_sequences(path: &Path) -> CliResult<KSequence> {
    let records = parse_fasta(&read(path)?).map_err(at(path))?;
    let seqs = records
        .into_iter()
        .map(|(_, body)| Sequence::new(body))
        .collect::<nmsa_core::Result<Vec<_>>>()
        .map_err(at(path))?;
    KSequence::new(seqs).map_err(at(path))
}

pub fn load_matrix(path: &Path) -> CliResult<ScoringMatrix> {
    ScoringMatrix::parse_tsv(&read(path)?.to_ascii_uppercase()).map_err(at(path))
}

/// Lines of `h i path` with `1 <= h < i <= k`; relative paths resolve
/// against the manifest's directory.
pub fn load_manifest(
    path: &Path,
    k: usize,
    fallback: Option<&ScoringMatrix>,
) -> CliResult<MatrixArray> {
    let text = read(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut slots: Vec<Option<ScoringMatrix>> = vec![None; pair_count(k)];
    let bad = |line: usize, message: String| CliError::File {
        path: path.to_path_buf(),
        source: nmsa_core::Error::Parse { line, message },
    };
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [h, i, file] = fields[..] else {
            return Err(bad(n + 1, "expected `h i path`".into()));
        };
        let (h, i): (usize, usize) = match (h.parse(), i.parse()) {
            (Ok(h), Ok(i)) if 1 <= h && h < i && i <= k => (h, i),
            _ => {
                return Err(bad(
                    n + 1,
                    format!("pair ({h}, {i}) is not 1 <= h < i <= {k}"),
                ))
            }
        };
        let p = pairs(k)
            .position(|pair| pair == (h - 1, i - 1))
            .expect("pair in range");
        if slots[p].is_some() {
            return Err(bad(n + 1, format!("pair ({h}, {i}) listed twice")));
        }
        let file = PathBuf::from(file);
        let file = if file.is_absolute() {
            file
        } else {
            dir.join(file)
        };
        slots[p] = Some(load_matrix(&file)?);
    }
    let matrices = slots
        .into_iter()
        .zip(pairs(k))
        .map(|(m, (h, i))| {
            m.or_else(|| fallback.cloned()).ok_or_else(|| {
                CliError::Input(format!(
                    "pair ({}, {}) has no matrix and no --matrix fallback",
                    h + 1,
                    i + 1
                ))
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    MatrixArray::new(k, matrices).map_err(at(path))
}

/// The scoring set-up: a single matrix, or a per-pair array.
pub enum Scoring {
    Single(ScoringMatrix),
    Array(MatrixArray),
}

pub fn load_scoring(args: &InputArgs, k: usize) -> CliResult<Scoring> {
    let single = args.matrix.as_deref().map(load_matrix).transpose()?;
    match (&args.matrix_array, single) {
        (Some(manifest), single) => {
            Ok(Scoring::Array(load_manifest(manifest, k, single.as_ref())?))
        }
        (None, Some(m)) => Ok(Scoring::Single(m)),
        (None, None) => Err(CliError::Input(
            "one of --matrix or --matrix-array is required".into(),
        )),
    }
}

/// Aligned FASTA, `#k width` text, or the JSON document `align` writes.
pub fn load_alignment(path: &Path, seqs: &KSequence) -> CliResult<Alignment> {
    let text = read(path)?;
    let trimmed = text.trim_start();
    let rows: Vec<Vec<u8>> = if trimmed.starts_with('{') {
        let doc: ResultDocument = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        doc.alignment
            .into_iter()
            .map(|r| r.to_ascii_uppercase().into_bytes())
            .collect()
    } else if trimmed.starts_with('>') {
        parse_fasta(&text)
            .map_err(at(path))?
            .into_iter()
            .map(|(_, body)| body)
            .collect()
    } else {
        Alignment::parse_text(&text.to_ascii_uppercase())
            .map_err(at(path))?
            .rows()
            .to_vec()
    };
    validate_alignment(rows, seqs).map_err(at(path))
}
