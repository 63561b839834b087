//! Output documents and their json/tsv/text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nmsa_core::{Alignment, Criterion, MatrixClass, MatrixClassReport, Rational, Rounding};
use serde::{Deserialize, Serialize};

use crate::args::{Format, Method};

/// An exact value with a presentation-only decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub num: i128,
    pub den: i128,
    pub decimal: String,
}

impl ValueDoc {
    pub fn new(value: Rational, decimals: u32) -> ValueDoc {
        ValueDoc {
            num: value.numer(),
            den: value.denom(),
            decimal: value.to_decimal(decimals, Rounding::HalfEven),
        }
    }

    pub fn rational(&self) -> Option<Rational> {
        Rational::new(self.num, self.den).ok()
    }

    fn fraction(&self) -> String {
        if self.den == 1 {
            self.num.to_string()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alignments_enumerated: Option<u64>,
    pub wall_ms: u64,
}

/// What `align` and `oracle` print.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub criterion: Criterion,
    pub method: Method,
    pub value: ValueDoc,
    pub alignment: Vec<String>,
    /// Approximation factor tag: "2", "6", "12" or "none".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guarantee: Option<String>,
    /// 1-based center of the star, for star results.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    pub stats: Stats,
}

pub fn rows_of(a: &Alignment) -> Vec<String> {
    (0..a.k()).map(|i| a.row_str(i)).collect()
}

/// What `score` prints: every applicable criterion for one alignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub k: usize,
    pub width: usize,
    pub scores: BTreeMap<String, ValueDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EailReport {
    pub n: Vec<usize>,
    pub lengths: Vec<usize>,
    pub exists: bool,
    /// Witness columns as 0/1 strings, one character per sequence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub rip: Vec<Vec<i64>>,
}

pub trait Render: Serialize {
    fn tsv(&self) -> String;
    fn text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv(),
            Format::Text => self.text(),
        }
    }
}

impl Render for ResultDocument {
    fn tsv(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| writeln!(out, "{k}\t{v}").unwrap();
        kv("criterion", self.criterion.to_string());
        kv("method", self.method.name().to_string());
        kv("num", self.value.num.to_string());
        kv("den", self.value.den.to_string());
        kv("decimal", self.value.decimal.clone());
        if let Some(g) = &self.guarantee {
            kv("guarantee", g.clone());
        }
        if let Some(c) = self.center {
            kv("center", c.to_string());
        }
        if let Some(c) = self.stats.cells {
            kv("cells", c.to_string());
        }
        if let Some(c) = self.stats.alignments_enumerated {
            kv("alignments_enumerated", c.to_string());
        }
        kv("wall_ms", self.stats.wall_ms.to_string());
        for (i, row) in self.alignment.iter().enumerate() {
            kv("row", format!("{}\t{row}", i + 1));
        }
        out
    }

    fn text(&self) -> String {
        let mut out = format!(
            "{} ({}): {} = {}\n",
            self.criterion,
            self.method.name(),
            self.value.fraction(),
            self.value.decimal
        );
        if let Some(g) = &self.guarantee {
            writeln!(out, "guarantee: {g}").unwrap();
        }
        if let Some(c) = self.center {
            writeln!(out, "center: {c}").unwrap();
        }
        for row in &self.alignment {
            writeln!(out, "{row}").unwrap();
        }
        out
    }
}

impl Render for ScoreReport {
    fn tsv(&self) -> String {
        let mut out = String::new();
        for (c, v) in &self.scores {
            writeln!(out, "{c}\t{}\t{}\t{}", v.num, v.den, v.decimal).unwrap();
        }
        out
    }

    fn text(&self) -> String {
        let mut out = format!("{} rows, width {}\n", self.k, self.width);
        for (c, v) in &self.scores {
            writeln!(out, "{c}: {} = {}", v.fraction(), v.decimal).unwrap();
        }
        out
    }
}

impl Render for MatrixClassReport {
    fn tsv(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "MC\t{}\nMW\t{}\nMN\t{}\n",
            yn(self.in_mc),
            yn(self.in_mw),
            yn(self.in_mn)
        );
        for v in &self.violations {
            let w: String = v.witness.iter().collect();
            let class = match v.class {
                MatrixClass::C => "MC",
                MatrixClass::W => "MW",
                MatrixClass::N => "MN",
            };
            writeln!(out, "violation\t{class}\t{}\t{w}", v.condition).unwrap();
        }
        out
    }

    fn text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "M^C: {}\nM^W: {}\nM^N: {}\n",
            yn(self.in_mc),
            yn(self.in_mw),
            yn(self.in_mn)
        );
        for v in &self.violations {
            writeln!(out, "{v}").unwrap();
        }
        out
    }
}

impl Render for EailReport {
    fn tsv(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut out = format!(
            "n\t{}\nL\t{}\nexists\t{}\n",
            join(&self.n),
            join(&self.lengths),
            if self.exists { "yes" } else { "no" }
        );
        for col in self.witness.iter().flatten() {
            writeln!(out, "column\t{col}").unwrap();
        }
        for row in &self.rip {
            let r: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(out, "rip\t{}", r.join("\t")).unwrap();
        }
        out
    }

    fn text(&self) -> String {
        let mut out = format!("{}\n", if self.exists { "Yes" } else { "No" });
        if let Some(cols) = &self.witness {
            writeln!(out, "witness columns: {}", cols.join(" ")).unwrap();
        }
        out.push_str("RIP matrix:\n");
        for row in &self.rip {
            let r: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(out, "  {}", r.join(" ")).unwrap();
        }
        out
    }
}
