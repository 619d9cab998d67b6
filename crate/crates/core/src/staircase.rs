//! Staircase pictures of monomial ideals in two variables.
//!
//! Cells are exponent pairs `(a, b)` with `x1` to the right and `x2` up:
//! `#` lies in `I`, `*` is a docle element, `+` lies strictly below the
//! docle, and `.` is outside `I` but below no docle element.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    InIdeal,
    Docle,
    BelowDocle,
    Outside,
}

impl Cell {
    fn glyph(self) -> char {
        match self {
            Cell::InIdeal => '#',
            Cell::Docle => '*',
            Cell::BelowDocle => '+',
            Cell::Outside => '.',
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Cell::InIdeal => "#9e9e9e",
            Cell::Docle => "#d62728",
            Cell::BelowDocle => "#f4b6b6",
            Cell::Outside => "#ffffff",
        }
    }
}

/// Cell grid, rows from `x2 = height−1` down to `x2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    rows: Vec<Vec<Cell>>,
}

impl Staircase {
    /// The window extends one step past every generator and docle element.
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.dim() != 2 {
            return Err(Error::domain(format!(
                "staircase needs 2 variables, got {}",
                ideal.dim()
            )));
        }
        let docle = ideal.docle_raw();
        let reach = ideal.gens().iter().chain(docle.elems());
        let width = reach.clone().map(|g| g.get(0)).max().unwrap_or(0) + 2;
        let height = reach.map(|g| g.get(1)).max().unwrap_or(0) + 2;
        let rows = (0..height)
            .rev()
            .map(|b| {
                (0..width)
                    .map(|a| {
                        let m = ExponentVector::from([a, b]);
                        if ideal.has(&m) {
                            Cell::InIdeal
                        } else if docle.contains(&m) {
                            Cell::Docle
                        } else if docle.below(&m) {
                            Cell::BelowDocle
                        } else {
                            Cell::Outside
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Staircase { rows })
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.extend(row.iter().map(|c| c.glyph()));
            out.push('\n');
        }
        out
    }

    pub fn to_svg(&self, cell: u32) -> String {
        let height = self.rows.len() as u32;
        let width = self.rows.first().map_or(0, Vec::len) as u32;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
            width * cell,
            height * cell
        );
        for (r, row) in self.rows.iter().enumerate() {
            for (c, kind) in row.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  <rect x=\"{}\" y=\"{}\" width=\"{cell}\" height=\"{cell}\" fill=\"{}\" stroke=\"#444\"/>",
                    c as u32 * cell,
                    r as u32 * cell,
                    kind.fill()
                );
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(2, gens.iter().map(|&g| ExponentVector::from(g))).unwrap()
    }

    #[test]
    fn zero_dimensional_picture() {
        let s = Staircase::new(&ideal(&[[3, 0], [0, 2]])).unwrap();
        assert_eq!(s.to_ascii(), "#####\n#####\n++*##\n+++##\n");
    }

    #[test]
    fn mixed_picture() {
        let s = Staircase::new(&ideal(&[[2, 0], [1, 1]])).unwrap();
        assert_eq!(s.to_ascii(), ".###\n.###\n+*##\n");
        assert!(s.to_svg(10).contains("#d62728"));
    }

    #[test]
    fn rejects_other_dimensions() {
        assert!(Staircase::new(&MonomialIdeal::power_ideal(3, 2)).is_err());
    }
}
