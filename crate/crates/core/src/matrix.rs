//! Scoring matrices and per-pair matrix arrays.
//!
//! A matrix is stored canonically as non-negative integers together with a
//! positive `unit`: the cost of substituting `a` by `b` is `entry / unit`.
//! Rational input is cleared to integers with the least common multiple of
//! its denominators, which keeps every dynamic program in integer arithmetic
//! while scores still come out in the caller's units.

use std::fmt::Write as _;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::{pair_count, pair_index, Alphabet, KSequence, GAP};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoringMatrix {
    alphabet: Alphabet,
    entries: Vec<i64>,
    unit: i64,
}

impl ScoringMatrix {
    /// Integer costs over `alphabet ∪ {-}`; the gap is the last row and
    /// column. The `(-,-)` entry is ignored and stored as 0.
    pub fn new(alphabet: Alphabet, table: &[Vec<i64>]) -> Result<Self> {
        let size = alphabet.len() + 1;
        check_shape(table.len(), table.iter().map(Vec::len), size)?;
        let mut entries = Vec::with_capacity(size * size);
        for (r, row) in table.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let gap_gap = r == size - 1 && c == size - 1;
                if v < 0 && !gap_gap {
                    return Err(negative(&alphabet, r, c));
                }
                entries.push(if gap_gap { 0 } else { v });
            }
        }
        Ok(ScoringMatrix {
            alphabet,
            entries,
            unit: 1,
        })
    }

    /// Rational costs; `None` marks the undefined `(-,-)` cell.
    pub fn from_rationals(alphabet: Alphabet, table: &[Vec<Option<Rational>>]) -> Result<Self> {
        let size = alphabet.len() + 1;
        check_shape(table.len(), table.iter().map(Vec::len), size)?;
        let mut unit: i128 = 1;
        for (r, row) in table.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    if v.numer() < 0 {
                        return Err(negative(&alphabet, r, c));
                    }
                    unit = unit.lcm(&v.denom());
                }
            }
        }
        let unit_i64 = i64::try_from(unit).map_err(|_| Error::Overflow("clearing denominators"))?;
        let mut entries = Vec::with_capacity(size * size);
        for row in table {
            for v in row {
                let value = v.map_or(0, |v| v.numer() * (unit / v.denom()));
                entries.push(
                    i64::try_from(value).map_err(|_| Error::Overflow("clearing denominators"))?,
                );
            }
        }
        entries[size * size - 1] = 0;
        Ok(ScoringMatrix {
            alphabet,
            entries,
            unit: unit_i64,
        })
    }

    /// 0 on the diagonal, `mismatch` between distinct symbols and `gap` for
    /// indels.
    pub fn uniform(alphabet: Alphabet, mismatch: i64, gap: i64) -> Result<Self> {
        let size = alphabet.len() + 1;
        let table: Vec<Vec<i64>> = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| match (r == size - 1 || c == size - 1, r == c) {
                        (_, true) => 0,
                        (true, false) => gap,
                        (false, false) => mismatch,
                    })
                    .collect()
            })
            .collect();
        ScoringMatrix::new(alphabet, &table)
    }

    /// Unit cost for every substitution and indel.
    pub fn levenshtein(alphabet: Alphabet) -> Self {
        ScoringMatrix::uniform(alphabet, 1, 1).expect("unit costs are valid")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Rows/columns in the table: alphabet size plus the gap.
    pub fn size(&self) -> usize {
        self.alphabet.len() + 1
    }

    pub fn gap_index(&self) -> usize {
        self.alphabet.len()
    }

    pub fn unit(&self) -> i64 {
        self.unit
    }

    /// Integer cost between table indices (gap is [`Self::gap_index`]).
    #[inline]
    pub fn cost_idx(&self, a: usize, b: usize) -> i64 {
        self.entries[a * self.size() + b]
    }

    /// Integer cost between symbols, gap included; `(-,-)` reads 0.
    ///
    /// Panics on symbols outside the alphabet.
    pub fn cost(&self, a: u8, b: u8) -> i64 {
        let idx = |s: u8| {
            self.alphabet
                .index_of(s)
                .unwrap_or_else(|| panic!("symbol {:?} not in alphabet", s as char))
        };
        self.cost_idx(idx(a), idx(b))
    }

    /// Cost between symbols in the caller's units.
    pub fn entry(&self, a: u8, b: u8) -> Rational {
        Rational::new(self.cost(a, b) as i128, self.unit as i128).expect("unit is positive")
    }

    /// Integer table, gap last.
    pub fn table(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.size())
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// Largest indel cost, in integer units.
    pub fn q_max(&self) -> i64 {
        let g = self.gap_index();
        (0..g)
            .flat_map(|a| [self.cost_idx(a, g), self.cost_idx(g, a)])
            .max()
            .unwrap_or(0)
    }

    /// Multiplies every entry by `c > 0` and re-canonicalizes.
    pub fn scale(&self, c: Rational) -> Result<ScoringMatrix> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        let unit = Rational::from_integer(self.unit as i128);
        let size = self.size();
        let table: Vec<Vec<Option<Rational>>> = (0..size)
            .map(|r| {
                (0..size)
                    .map(|col| {
                        (r != size - 1 || col != size - 1).then(|| {
                            Rational::from_integer(self.cost_idx(r, col) as i128) / unit * c
                        })
                    })
                    .collect()
            })
            .collect();
        ScoringMatrix::from_rationals(self.alphabet.clone(), &table)
    }

    /// Same matrix read in a coarser unit: `entry / (unit * factor)`.
    pub(crate) fn divided_by(&self, factor: i64) -> Result<ScoringMatrix> {
        let unit = self
            .unit
            .checked_mul(factor)
            .ok_or(Error::Overflow("dividing a matrix"))?;
        Ok(ScoringMatrix {
            alphabet: self.alphabet.clone(),
            entries: self.entries.clone(),
            unit,
        })
    }

    pub(crate) fn zero_like(&self) -> ScoringMatrix {
        ScoringMatrix {
            alphabet: self.alphabet.clone(),
            entries: vec![0; self.entries.len()],
            unit: 1,
        }
    }

    /// Maps each sequence to table indices; fails on foreign symbols.
    pub fn encode(&self, seqs: &KSequence) -> Result<Vec<Vec<u8>>> {
        seqs.check_alphabet(&self.alphabet)?;
        Ok(seqs
            .sequences()
            .iter()
            .map(|s| {
                s.as_bytes()
                    .iter()
                    .map(|&b| self.alphabet.index_of(b).expect("checked") as u8)
                    .collect()
            })
            .collect())
    }

    /// Parses the whitespace-separated matrix format.
    ///
    /// ```text
    /// a b c
    /// 0 9 9 10
    /// 9 0 9 10
    /// 9 9 0 10
    /// 10 10 10 *
    /// ```
    ///
    /// Line 1 lists the alphabet; the following lines form the square table
    /// over the alphabet plus a final gap row/column. Entries are integers or
    /// `p/q`; the `(-,-)` cell must be `*`. A row may start with its symbol
    /// as a label. Blank lines and lines starting with `#` are skipped.
    pub fn parse_tsv(text: &str) -> Result<ScoringMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty matrix file"))?;
        let mut symbols = Vec::new();
        for tok in header.split_whitespace() {
            match tok.as_bytes() {
                [b] => symbols.push(*b),
                _ => return Err(Error::parse(hline, format!("bad alphabet symbol {tok:?}"))),
            }
        }
        let alphabet = Alphabet::new(&symbols).map_err(|e| Error::parse(hline, e.to_string()))?;
        let size = alphabet.len() + 1;
        let labels: Vec<u8> = symbols.iter().copied().chain([GAP]).collect();
        let mut table = Vec::with_capacity(size);
        for (n, line) in lines {
            let r = table.len();
            if r == size {
                return Err(Error::parse(n, "too many table rows"));
            }
            let mut toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() == size + 1 {
                if toks[0].as_bytes() != [labels[r]] {
                    return Err(Error::parse(
                        n,
                        format!("row label {:?}, expected {:?}", toks[0], labels[r] as char),
                    ));
                }
                toks.remove(0);
            }
            if toks.len() != size {
                return Err(Error::parse(
                    n,
                    format!("row has {} entries, expected {size}", toks.len()),
                ));
            }
            let mut row = Vec::with_capacity(size);
            for (c, tok) in toks.iter().enumerate() {
                let gap_gap = r == size - 1 && c == size - 1;
                if gap_gap {
                    if *tok != "*" {
                        return Err(Error::parse(n, "the (-,-) cell must be `*`"));
                    }
                    row.push(None);
                } else {
                    let v: Rational = tok
                        .parse()
                        .map_err(|_| Error::parse(n, format!("bad entry {tok:?}")))?;
                    row.push(Some(v));
                }
            }
            table.push(row);
        }
        if table.len() != size {
            return Err(Error::parse(
                text.lines().count(),
                format!("expected {size} table rows, found {}", table.len()),
            ));
        }
        ScoringMatrix::from_rationals(alphabet, &table)
    }

    /// Renders in the format [`Self::parse_tsv`] reads, entries as `p/q`
    /// where not integral.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let syms: Vec<String> = self
            .alphabet
            .symbols()
            .iter()
            .map(|&b| (b as char).to_string())
            .collect();
        out.push_str(&syms.join("\t"));
        out.push('\n');
        let size = self.size();
        for r in 0..size {
            let cells: Vec<String> = (0..size)
                .map(|c| {
                    if r == size - 1 && c == size - 1 {
                        "*".to_string()
                    } else {
                        let v = Rational::new(self.cost_idx(r, c) as i128, self.unit as i128)
                            .expect("unit is positive");
                        v.to_string()
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }
}

fn check_shape(rows: usize, lens: impl Iterator<Item = usize>, size: usize) -> Result<()> {
    if rows != size {
        return Err(Error::DimensionMismatch {
            expected: size,
            got: rows,
        });
    }
    for len in lens {
        if len != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: len,
            });
        }
    }
    Ok(())
}

fn negative(alphabet: &Alphabet, r: usize, c: usize) -> Error {
    let label = |i: usize| alphabet.symbols().get(i).map_or('-', |&b| b as char);
    Error::NegativeEntry {
        row: label(r),
        col: label(c),
    }
}

/// One scoring matrix per pair `h < i` of a k-sequence, in the order
/// `(1,2), (1,3), .., (1,k), (2,3), .., (k-1,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixArray {
    k: usize,
    matrices: Vec<ScoringMatrix>,
}

impl MatrixArray {
    pub fn new(k: usize, matrices: Vec<ScoringMatrix>) -> Result<Self> {
        let expected = pair_count(k);
        if matrices.len() != expected {
            return Err(Error::ArityMismatch {
                k,
                expected,
                got: matrices.len(),
            });
        }
        if let Some(first) = matrices.first() {
            if matrices.iter().any(|m| m.alphabet != first.alphabet) {
                return Err(Error::MixedAlphabets);
            }
        }
        Ok(MatrixArray { k, matrices })
    }

    /// The same matrix for every pair.
    pub fn uniform(gamma: &ScoringMatrix, k: usize) -> Self {
        MatrixArray {
            k,
            matrices: vec![gamma.clone(); pair_count(k)],
        }
    }

    /// `γ × L`: pair `(h,i)` scores with `γ / L_hi`.
    ///
    /// A pair with `L_hi = 0` has no columns to score; it gets a zero matrix.
    pub fn scaled_by_lengths(gamma: &ScoringMatrix, lengths: &[usize]) -> Result<Self> {
        let matrices = lengths
            .iter()
            .map(|&l| {
                if l == 0 {
                    Ok(gamma.zero_like())
                } else {
                    let l = i64::try_from(l).map_err(|_| Error::Overflow("scaling by length"))?;
                    gamma.divided_by(l)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let k = k_for_pairs(lengths.len()).ok_or_else(|| {
            Error::LengthVectorOutOfRange(format!("{} entries is not a pair count", lengths.len()))
        })?;
        MatrixArray::new(k, matrices)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrices(&self) -> &[ScoringMatrix] {
        &self.matrices
    }

    /// The matrix for pair `(h, i)`, 0-based, `h < i`.
    pub fn get(&self, h: usize, i: usize) -> &ScoringMatrix {
        &self.matrices[pair_index(h, i, self.k)]
    }

    pub fn alphabet(&self) -> Option<&Alphabet> {
        self.matrices.first().map(ScoringMatrix::alphabet)
    }

    /// Least common multiple of the pair units, with each pair's integer
    /// multiplier onto it.
    pub(crate) fn common_unit(&self) -> Result<(i64, Vec<i64>)> {
        let mut unit: i64 = 1;
        for m in &self.matrices {
            unit = checked_lcm(unit, m.unit).ok_or(Error::Overflow("combining matrix units"))?;
        }
        Ok((unit, self.matrices.iter().map(|m| unit / m.unit).collect()))
    }
}

/// `k` with `k(k-1)/2 = pairs`.
pub(crate) fn k_for_pairs(pairs: usize) -> Option<usize> {
    (1..=pairs + 1).find(|&k| pair_count(k) == pairs)
}

pub(crate) fn checked_lcm(a: i64, b: i64) -> Option<i64> {
    (a / a.gcd(&b)).checked_mul(b)
}
