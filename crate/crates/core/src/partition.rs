//! Integer partitions and their Young diagrams.
//!
//! A [`Partition`] stores its parts weakly decreasing with no zeros. Cells
//! are addressed `(row, col)`, 0-based, rows counted from the top (English
//! convention), so cell `(i, j)` belongs to the diagram iff `j < parts[i]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abacus::BetaSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other ordering violation is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::NotDecreasing { index: i + 1, prev: w[0], value: w[1] });
            }
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition, discarding zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i`, or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.col < self.part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell { row, col }))
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            // rows are sorted, so column j is the prefix of rows longer than j
            cols.push(self.parts.partition_point(|&p| p > j));
        }
        Partition { parts: cols }
    }

    /// Young-diagram containment: `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.parts[cell.row] - cell.col - 1)
    }

    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        let below = &self.parts[cell.row + 1..];
        Ok(below.partition_point(|&p| p > cell.col))
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    /// All hook lengths, row-major, computed from the conjugate in one pass.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| (len - j - 1) + (conj.parts[j] - i - 1) + 1).collect())
            .collect()
    }

    /// True iff some cell has hook length exactly `h`.
    pub fn has_hook_of_length(&self, h: usize) -> bool {
        self.hook_lengths().iter().flatten().any(|&x| x == h)
    }

    /// `{λ_i + r - i}` for 1-based `i`, where `r` is the number of parts.
    pub fn first_column_hooks(&self) -> BetaSet {
        let r = self.len();
        BetaSet::from_iter_unchecked(self.parts.iter().enumerate().map(|(i, &p)| p + r - 1 - i))
    }

    /// Removes the rim hook belonging to `cell`. The result is smaller by
    /// `hook_length(cell)`.
    ///
    /// Works directly on rows: with `leg = L`, rows `i..i+L` each take the
    /// length of the row below minus one, and row `i+L` is cut to `col`.
    pub fn remove_rim_hook(&self, cell: Cell) -> Result<Partition> {
        let leg = self.leg(cell)?;
        let mut parts = self.parts.clone();
        let last = cell.row + leg;
        for r in cell.row..last {
            parts[r] = self.parts[r + 1] - 1;
        }
        parts[last] = cell.col;
        Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
    }

    /// Formats in exponential notation, e.g. `(8,6,5^2,3,2^3,1)`.
    pub fn to_exponential(&self) -> String {
        let mut out = String::from("(");
        let mut i = 0;
        while i < self.parts.len() {
            let base = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == base).count();
            if i > 0 {
                out.push(',');
            }
            out.push_str(&base.to_string());
            if run > 1 {
                out.push('^');
                out.push_str(&run.to_string());
            }
            i += run;
        }
        out.push(')');
        out
    }

    pub fn parse_exponential(text: &str) -> Result<Partition> {
        ExpParser { src: text.as_bytes(), pos: 0 }.parse()
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfDiagram { row: cell.row, col: cell.col })
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exponential())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse_exponential(s)
    }
}

struct ExpParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExpParser<'_> {
    fn parse(mut self) -> Result<Partition> {
        self.skip_ws();
        self.expect(b'(')?;
        self.skip_ws();
        let mut parts: Vec<usize> = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
        } else {
            loop {
                self.skip_ws();
                let at = self.pos;
                let base = self.number()?;
                if base == 0 {
                    return Err(self.error_at(at, "parts must be positive"));
                }
                if let Some(&prev) = parts.last() {
                    if base > prev {
                        return Err(self.error_at(at, &format!("part {base} exceeds preceding part {prev}")));
                    }
                }
                self.skip_ws();
                let mut exp = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let exp_at = self.pos;
                    exp = self.number()?;
                    if exp == 0 {
                        return Err(self.error_at(exp_at, "exponent must be at least 1"));
                    }
                    self.skip_ws();
                }
                parts.extend(std::iter::repeat_n(base, exp));
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ')'")),
                }
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.error("trailing characters"));
        }
        Ok(Partition::from_sorted_unchecked(parts))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn error(&self, msg: &str) -> Error {
        self.error_at(self.pos, msg)
    }

    fn error_at(&self, pos: usize, msg: &str) -> Error {
        Error::Parse { pos, msg: msg.to_string() }
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> PartitionsOf {
    PartitionsOf { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // successor: find the last part > 1, decrement it, and refill the
        // freed amount greedily with parts no larger than the new value
        let mut succ = current.clone();
        let mut freed = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            freed += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let p = freed.min(cap);
                succ.push(p);
                freed -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_sorted_unchecked(current))
    }
}
