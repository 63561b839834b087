//! Membership tests for the matrix classes M^C, M^W and M^N.

use std::fmt;

use serde::Serialize;

use crate::matrix::ScoringMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MatrixClass {
    #[serde(rename = "MC")]
    C,
    #[serde(rename = "MW")]
    W,
    #[serde(rename = "MN")]
    N,
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixClass::C => "M^C",
            MatrixClass::W => "M^W",
            MatrixClass::N => "M^N",
        })
    }
}

/// A failed class condition and the symbols that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub class: MatrixClass,
    /// Condition letter, `a`..`e`.
    pub condition: char,
    pub witness: Vec<char>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(char::to_string).collect();
        write!(
            f,
            "{} ({}) fails at ({})",
            self.class,
            self.condition,
            w.join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixClassReport {
    pub in_mc: bool,
    pub in_mw: bool,
    pub in_mn: bool,
    pub violations: Vec<Violation>,
}

impl MatrixClassReport {
    pub fn contains(&self, class: MatrixClass) -> bool {
        match class {
            MatrixClass::C => self.in_mc,
            MatrixClass::W => self.in_mw,
            MatrixClass::N => self.in_mn,
        }
    }
}

/// Checks every class condition and collects all violations.
///
/// The `(-,-)` entry reads as 0 in the M^C conditions.
pub fn classify_matrix(gamma: &ScoringMatrix) -> MatrixClassReport {
    let g = gamma.gap_index();
    let size = gamma.size();
    let c = |a: usize, b: usize| gamma.cost_idx(a, b);
    let label = |i: usize| {
        gamma
            .alphabet()
            .symbols()
            .get(i)
            .map_or('-', |&b| b as char)
    };
    let mut violations = Vec::new();
    let mut push = |class, condition, idx: &[usize]| {
        violations.push(Violation {
            class,
            condition,
            witness: idx.iter().map(|&i| label(i)).collect(),
        })
    };

    let mut in_mc = true;
    for a in 0..size {
        for b in 0..size {
            if (a == b) != (c(a, b) == 0) {
                in_mc = false;
                push(MatrixClass::C, 'a', &[a, b]);
            }
            if a < b && c(a, b) != c(b, a) {
                in_mc = false;
                push(MatrixClass::C, 'b', &[a, b]);
            }
            for m in 0..size {
                if c(a, b) > c(a, m) + c(m, b) {
                    in_mc = false;
                    push(MatrixClass::C, 'c', &[a, m, b]);
                }
            }
        }
    }

    let mut in_mw = true;
    for a in 0..g {
        if c(a, g) != c(g, a) || c(a, g) == 0 {
            in_mw = false;
            push(MatrixClass::W, 'a', &[a]);
        }
        for b in 0..g {
            if (a == b) != (c(a, b) == 0) {
                in_mw = false;
                push(MatrixClass::W, 'b', &[a, b]);
            }
            if c(a, b) < c(a, g) + c(g, b) && c(a, b) != c(b, a) {
                in_mw = false;
                push(MatrixClass::W, 'c', &[a, b]);
            }
            if c(a, g) > c(a, b) + c(b, g) {
                in_mw = false;
                push(MatrixClass::W, 'd', &[a, b]);
            }
            for m in 0..g {
                if c(a, m).min(c(a, g) + c(g, m)) > c(a, b) + c(b, m) {
                    in_mw = false;
                    push(MatrixClass::W, 'e', &[a, b, m]);
                }
            }
        }
    }

    let mut gap_ratio_ok = true;
    for a in 0..g {
        for b in 0..g {
            if c(a, g) > 2 * c(b, g) {
                gap_ratio_ok = false;
                push(MatrixClass::N, 'b', &[a, b]);
            }
        }
    }

    MatrixClassReport {
        in_mc,
        in_mw,
        in_mn: in_mw && gap_ratio_ok,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::new(b"ab").unwrap()
    }

    #[test]
    fn levenshtein_is_in_every_class() {
        let r = classify_matrix(&ScoringMatrix::levenshtein(Alphabet::new(b"acgt").unwrap()));
        assert!(r.in_mc && r.in_mw && r.in_mn, "{:?}", r.violations);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn trio_matrix() {
        let r = classify_matrix(
            &ScoringMatrix::uniform(Alphabet::new(b"abc").unwrap(), 9, 10).unwrap(),
        );
        assert!(r.in_mc && r.in_mn);
    }

    #[test]
    fn gap_ratio_violation() {
        let m = ScoringMatrix::new(ab(), &[vec![0, 2, 1], vec![2, 0, 3], vec![1, 3, 0]]).unwrap();
        let r = classify_matrix(&m);
        assert!(r.in_mw, "{:?}", r.violations);
        assert!(!r.in_mn);
        assert!(r.violations.contains(&Violation {
            class: MatrixClass::N,
            condition: 'b',
            witness: vec!['b', 'a'],
        }));
    }

    #[test]
    fn weak_but_not_common() {
        // asymmetric substitution that never beats two indels
        let m = ScoringMatrix::new(ab(), &[vec![0, 2, 1], vec![3, 0, 1], vec![1, 1, 0]]).unwrap();
        let r = classify_matrix(&m);
        assert!(r.in_mw, "{:?}", r.violations);
        assert!(!r.in_mc);
        assert!(r
            .violations
            .iter()
            .any(|v| v.class == MatrixClass::C && v.condition == 'b'));
    }

    #[test]
    fn zero_gap_cost_fails_everything() {
        let m = ScoringMatrix::new(ab(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]).unwrap();
        let r = classify_matrix(&m);
        assert!(!r.in_mc && !r.in_mw && !r.in_mn);
    }

    #[test]
    fn triangle_violation_has_witness() {
        let m = ScoringMatrix::new(ab(), &[vec![0, 5, 1], vec![5, 0, 1], vec![1, 1, 0]]).unwrap();
        let r = classify_matrix(&m);
        assert!(!r.in_mc);
        assert!(r.violations.contains(&Violation {
            class: MatrixClass::C,
            condition: 'c',
            witness: vec!['a', '-', 'b'],
        }));
        // M^W tolerates substitutions dearer than two indels
        assert!(r.in_mw);
    }
}
