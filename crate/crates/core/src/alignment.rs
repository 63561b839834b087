//! Alignments of k-sequences and their column bit-vector encoding.
//!
//! Internally rows and columns are 0-based. Error messages and the plain-text
//! format use 1-based positions.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kvec::{BitVector, IndexVector, MAX_K};
use crate::sequence::{check_index_set, KSequence, Sequence, GAP};

/// A gap-padded matrix of `k` rows with equal width and no all-gap column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alignment {
    rows: Vec<Vec<u8>>,
    width: usize,
}

/// Serialized as the list of row strings.
impl Serialize for Alignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<String> = (0..self.k()).map(|i| self.row_str(i)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Alignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<String>::deserialize(d)?;
        Alignment::from_rows(rows.into_iter().map(String::into_bytes).collect())
            .map_err(serde::de::Error::custom)
    }
}

impl Alignment {
    /// Checks the structural conditions: at least one row, equal row
    /// lengths, no all-gap column and only printable symbols.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::NoRows);
        };
        let width = first.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::UnequalRowLengths {
                    row: r + 1,
                    len: row.len(),
                    expected: width,
                });
            }
            if let Some(&bad) = row.iter().find(|b| !b.is_ascii_graphic()) {
                return Err(Error::InvalidSymbol {
                    symbol: bad as char,
                });
            }
        }
        for j in 0..width {
            if rows.iter().all(|row| row[j] == GAP) {
                return Err(Error::AllGapColumn { column: j + 1 });
            }
        }
        Ok(Alignment { rows, width })
    }

    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.as_bytes().to_vec()).collect())
    }

    /// The unique alignment of `k` empty sequences.
    pub fn empty(k: usize) -> Self {
        Alignment {
            rows: vec![Vec::new(); k],
            width: 0,
        }
    }

    /// Rows that are known to satisfy every invariant.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u8>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        debug_assert!(Alignment::from_rows(rows.clone()).is_ok());
        Alignment { rows, width }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// `|A|`, the number of columns.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i]
    }

    pub fn row_str(&self, i: usize) -> String {
        String::from_utf8_lossy(&self.rows[i]).into_owned()
    }

    /// Column `j` (0-based).
    pub fn column(&self, j: usize) -> Vec<u8> {
        self.rows.iter().map(|row| row[j]).collect()
    }

    /// Row `i` with its gaps removed.
    pub fn degapped(&self, i: usize) -> Sequence {
        Sequence::new(
            self.rows[i]
                .iter()
                .copied()
                .filter(|&b| b != GAP)
                .collect::<Vec<_>>(),
        )
        .expect("alignment rows hold only symbols and gaps")
    }

    /// The sequences this alignment aligns.
    pub fn sequences(&self) -> KSequence {
        KSequence::new((0..self.k()).map(|i| self.degapped(i)).collect())
            .expect("alignment has at least one row")
    }

    /// Checks that row `i` degaps to `s_i` for every `i`.
    pub fn check_sequences(&self, seqs: &KSequence) -> Result<()> {
        if self.k() != seqs.k() {
            return Err(Error::RowCountMismatch {
                rows: self.k(),
                k: seqs.k(),
            });
        }
        for i in 0..self.k() {
            let degapped = self.rows[i].iter().filter(|&&b| b != GAP);
            if !degapped.eq(seqs.get(i).as_bytes().iter()) {
                return Err(Error::RowMismatchesSequence { row: i + 1 });
            }
        }
        Ok(())
    }

    /// `A_I` for 0-based, strictly increasing indices: keep the rows in `I`
    /// and drop the columns that became all-gap.
    pub fn induced(&self, indices: &[usize]) -> Result<Alignment> {
        check_index_set(indices, self.k())?;
        let keep: Vec<usize> = (0..self.width)
            .filter(|&j| indices.iter().any(|&i| self.rows[i][j] != GAP))
            .collect();
        let rows = indices
            .iter()
            .map(|&i| keep.iter().map(|&j| self.rows[i][j]).collect())
            .collect();
        Ok(Alignment::from_rows_unchecked(rows))
    }

    /// Width of the induced pairwise alignment `A_{h,i}` without building it.
    pub fn induced_pair_width(&self, h: usize, i: usize) -> usize {
        let (a, b) = (&self.rows[h], &self.rows[i]);
        a.iter()
            .zip(b)
            .filter(|&(&x, &y)| x != GAP || y != GAP)
            .count()
    }

    /// The bit vectors defining each column, in column order.
    pub fn column_bits(&self) -> Vec<BitVector> {
        assert!(self.k() <= MAX_K);
        (0..self.width)
            .map(|j| {
                let mask = self
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(_, row)| row[j] != GAP)
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                BitVector::from_mask(mask, self.k())
            })
            .collect()
    }

    /// Plain-text form: a `#k width` header followed by one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("#{} {}\n", self.k(), self.width);
        for row in &self.rows {
            out.push_str(&String::from_utf8_lossy(row));
            out.push('\n');
        }
        out
    }

    /// Parses [`Alignment::to_text`] output. Blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Alignment> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `#k width` header"))?;
        let fields: Vec<&str> = header
            .strip_prefix('#')
            .ok_or_else(|| Error::parse(hline, "header must start with `#`"))?
            .split_whitespace()
            .collect();
        let [k, width] = fields[..] else {
            return Err(Error::parse(hline, "header must be `#k width`"));
        };
        let k: usize = k
            .parse()
            .map_err(|_| Error::parse(hline, format!("bad row count {k:?}")))?;
        let width: usize = width
            .parse()
            .map_err(|_| Error::parse(hline, format!("bad width {width:?}")))?;
        if k == 0 {
            return Err(Error::parse(hline, "row count must be positive"));
        }
        let mut rows = Vec::with_capacity(k);
        for (n, line) in lines {
            if rows.len() == k {
                return Err(Error::parse(n, "more rows than the header declares"));
            }
            if line.len() != width {
                return Err(Error::parse(
                    n,
                    format!("row has width {}, header says {width}", line.len()),
                ));
            }
            rows.push(line.as_bytes().to_vec());
        }
        if width == 0 {
            // Empty rows vanish as blank lines.
            rows.resize(k, Vec::new());
        }
        if rows.len() != k {
            return Err(Error::parse(
                text.lines().count(),
                format!("expected {k} rows, found {}", rows.len()),
            ));
        }
        Alignment::from_rows(rows)
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(&String::from_utf8_lossy(row))?;
        }
        Ok(())
    }
}

/// Validates gapped rows as an alignment of `seqs`.
pub fn validate_alignment(rows: Vec<Vec<u8>>, seqs: &KSequence) -> Result<Alignment> {
    if rows.len() != seqs.k() {
        return Err(Error::RowCountMismatch {
            rows: rows.len(),
            k: seqs.k(),
        });
    }
    let a = Alignment::from_rows(rows)?;
    a.check_sequences(seqs)?;
    let n = seqs.lengths();
    debug_assert!(n.iter().copied().max().unwrap_or(0) <= a.width());
    debug_assert!(a.width() <= n.iter().sum());
    Ok(a)
}

/// `A_I` for 0-based indices; see [`Alignment::induced`].
pub fn induced_alignment(a: &Alignment, indices: &[usize]) -> Result<Alignment> {
    a.induced(indices)
}

/// The column `b . S(j)`: entry `i` is `s_i(j_i)` when `b_i = 1`, else a gap.
pub fn column_from_bits(seqs: &KSequence, j: &IndexVector, b: &BitVector) -> Result<Vec<u8>> {
    if j.k() != seqs.k() || b.k() != seqs.k() {
        return Err(Error::DimensionMismatch {
            expected: seqs.k(),
            got: if j.k() != seqs.k() { j.k() } else { b.k() },
        });
    }
    (0..seqs.k())
        .map(|i| {
            if !b.get(i) {
                return Ok(GAP);
            }
            let ji = j.0[i];
            if ji == 0 || ji > seqs.get(i).len() {
                return Err(Error::BitExceedsIndex { position: i + 1 });
            }
            Ok(seqs.get(i).at(ji))
        })
        .collect()
}

/// Rebuilds the alignment whose columns are defined by `bits`, left to right.
pub fn alignment_from_bitvectors(seqs: &KSequence, bits: &[BitVector]) -> Result<Alignment> {
    let k = seqs.k();
    let n = seqs.lengths();
    let mut sums = vec![0usize; k];
    for (col, b) in bits.iter().enumerate() {
        if b.k() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: b.k(),
            });
        }
        if b.is_zero() {
            return Err(Error::ZeroColumn { column: col + 1 });
        }
        for (i, s) in sums.iter_mut().enumerate() {
            *s += b.get(i) as usize;
        }
    }
    if sums != n {
        return Err(Error::BitSumMismatch {
            expected: n,
            got: sums,
        });
    }
    let mut cursor = IndexVector::zeros(k);
    let mut rows = vec![Vec::with_capacity(bits.len()); k];
    for b in bits {
        for i in 0..k {
            cursor.0[i] += b.get(i) as usize;
        }
        let column = column_from_bits(seqs, &cursor, b)?;
        for (row, x) in rows.iter_mut().zip(column) {
            row.push(x);
        }
    }
    Ok(Alignment::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_seqs() -> KSequence {
        KSequence::from_strs(&["abc", "bca", "bba", "aaaaa", "c"]).unwrap()
    }

    fn sample_rows() -> Vec<Vec<u8>> {
        ["abc--", "-bca-", "b-b-a", "aaaaa", "c----"]
            .iter()
            .map(|r| r.as_bytes().to_vec())
            .collect()
    }

    fn bv(bits: &[u8]) -> BitVector {
        BitVector::from_bits(bits).unwrap()
    }

    #[test]
    fn validates_the_five_row_example() {
        let a = validate_alignment(sample_rows(), &sample_seqs()).unwrap();
        assert_eq!(a.width(), 5);
    }

    #[test]
    fn validation_errors() {
        let s = KSequence::from_strs(&["a", "b"]).unwrap();
        let rows = |r: &[&str]| r.iter().map(|x| x.as_bytes().to_vec()).collect();
        assert_eq!(
            validate_alignment(rows(&["a-", "b-"]), &s),
            Err(Error::AllGapColumn { column: 2 })
        );
        assert!(matches!(
            validate_alignment(rows(&["a-", "b"]), &s),
            Err(Error::UnequalRowLengths { row: 2, .. })
        ));
        assert_eq!(
            validate_alignment(rows(&["a", "c"]), &s),
            Err(Error::RowMismatchesSequence { row: 2 })
        );
        let empty = KSequence::from_strs(&["", ""]).unwrap();
        let a = validate_alignment(rows(&["", ""]), &empty).unwrap();
        assert_eq!(a.width(), 0);
    }

    #[test]
    fn induced_alignments() {
        let a = Alignment::from_strs(&["aaa-", "ab--", "-cac"]).unwrap();
        assert_eq!(
            a.induced(&[0, 1]).unwrap(),
            Alignment::from_strs(&["aaa", "ab-"]).unwrap()
        );
        assert_eq!(a.induced(&[0, 1, 2]).unwrap(), a);
        let f1 = Alignment::from_rows(sample_rows()).unwrap();
        assert_eq!(
            f1.induced(&[3, 4]).unwrap(),
            Alignment::from_strs(&["aaaaa", "c----"]).unwrap()
        );
        assert_eq!(a.induced(&[]), Err(Error::EmptyIndexSet));
        assert!(matches!(
            a.induced(&[0, 3]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn columns_from_bits() {
        let s = sample_seqs();
        let col = column_from_bits(&s, &IndexVector(vec![3, 3, 3, 5, 1]), &bv(&[0, 0, 1, 1, 0]));
        assert_eq!(col.unwrap(), b"--aa-".to_vec());
        let col = column_from_bits(&s, &IndexVector(vec![1, 2, 1, 2, 1]), &bv(&[1, 1, 0, 1, 0]));
        assert_eq!(col.unwrap(), b"ac-a-".to_vec());
        let col = column_from_bits(&s, &IndexVector(s.lengths()), &BitVector::ones(5));
        assert_eq!(col.unwrap(), b"caaac".to_vec());
        let err = column_from_bits(&s, &IndexVector(vec![0, 1, 1, 1, 1]), &BitVector::ones(5));
        assert_eq!(err, Err(Error::BitExceedsIndex { position: 1 }));
    }

    #[test]
    fn rebuilds_from_bitvectors() {
        let bits = [
            bv(&[1, 0, 1, 1, 1]),
            bv(&[1, 1, 0, 1, 0]),
            bv(&[1, 1, 1, 1, 0]),
            bv(&[0, 1, 0, 1, 0]),
            bv(&[0, 0, 1, 1, 0]),
        ];
        let a = alignment_from_bitvectors(&sample_seqs(), &bits).unwrap();
        assert_eq!(a, Alignment::from_rows(sample_rows()).unwrap());
        assert_eq!(a.column_bits(), bits.to_vec());

        let one = KSequence::from_strs(&["abc"]).unwrap();
        let a = alignment_from_bitvectors(&one, &[bv(&[1]); 3]).unwrap();
        assert_eq!(a.row(0), b"abc");

        assert!(matches!(
            alignment_from_bitvectors(&sample_seqs(), &bits[..4]),
            Err(Error::BitSumMismatch { .. })
        ));
        assert_eq!(
            alignment_from_bitvectors(&one, &[bv(&[1]), bv(&[0]), bv(&[1]), bv(&[1])]),
            Err(Error::ZeroColumn { column: 2 })
        );
    }

    #[test]
    fn text_format_round_trip() {
        let a = Alignment::from_rows(sample_rows()).unwrap();
        let text = a.to_text();
        assert!(text.starts_with("#5 5\n"));
        assert_eq!(Alignment::parse_text(&text).unwrap(), a);
        let empty = Alignment::empty(3);
        assert_eq!(Alignment::parse_text(&empty.to_text()).unwrap(), empty);
        assert!(Alignment::parse_text("#2 3\nab-\n").is_err());
        assert!(Alignment::parse_text("2 3\nab-\n-ba\n").is_err());
        assert!(Alignment::parse_text("#2 3\nab-\n-b\n").is_err());
    }
}
