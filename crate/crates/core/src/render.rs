//! Plain-text renderings of diagrams, abaci and region labelings.

use crate::abacus::TAbacus;
use crate::bijection::{Region, RegionLabeling};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub const EMPTY_DIAGRAM: &str = "(empty)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderConfig {
    /// glyphs for Part 1, Part 2, Part 3
    pub glyphs: [char; 3],
    /// glyph for unlabeled diagrams
    pub cell: char,
    pub cell_width: usize,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig { glyphs: ['o', '.', '*'], cell: '#', cell_width: 2 }
    }
}

impl RenderConfig {
    pub fn unicode() -> Self {
        RenderConfig { glyphs: ['•', '.', '*'], cell: '■', cell_width: 2 }
    }

    pub fn validate(&self) -> Result<()> {
        let [a, b, c] = self.glyphs;
        if a == b || b == c || a == c {
            return Err(Error::Inconsistent("region glyphs must be distinct".into()));
        }
        if self.cell_width == 0 {
            return Err(Error::Inconsistent("cell width must be at least 1".into()));
        }
        Ok(())
    }

    pub fn glyph(&self, region: Region) -> char {
        self.glyphs[region.index()]
    }

    fn row(&self, glyph: char, len: usize) -> String {
        let mut line = String::new();
        for _ in 0..len {
            line.push(glyph);
            line.extend(std::iter::repeat_n(' ', self.cell_width - 1));
        }
        line.truncate(line.trim_end().len());
        line
    }
}

/// One line per row, largest part first.
pub fn young_diagram(lambda: &Partition, cfg: &RenderConfig) -> String {
    if lambda.is_empty() {
        return format!("{EMPTY_DIAGRAM}\n");
    }
    lambda.parts().iter().map(|&len| cfg.row(cfg.cell, len) + "\n").collect()
}

/// Each row drawn with the glyph of its region.
pub fn labeled_diagram(lambda: &Partition, labeling: &RegionLabeling, cfg: &RenderConfig) -> Result<String> {
    if labeling.labels.len() != lambda.len() {
        return Err(Error::Inconsistent(format!("{} labels for {} rows", labeling.labels.len(), lambda.len())));
    }
    if lambda.is_empty() {
        return Ok(format!("{EMPTY_DIAGRAM}\n"));
    }
    Ok(lambda
        .parts()
        .iter()
        .zip(&labeling.labels)
        .map(|(&len, &region)| cfg.row(cfg.glyph(region), len) + "\n")
        .collect())
}

/// Position numbers laid out on the runners, highest row first, beads in
/// brackets. Each column is right-aligned to its widest entry and columns
/// are separated by one space.
pub fn abacus_grid(abacus: &TAbacus) -> String {
    let t = abacus.t();
    let rows = abacus.num_rows();
    let token = |runner: usize, row: usize| {
        let p = abacus.position(runner, row);
        if abacus.is_bead(runner, row) {
            format!("[{p}]")
        } else {
            p.to_string()
        }
    };
    let widths: Vec<usize> =
        (0..t).map(|runner| (0..rows).map(|row| token(runner, row).len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in (0..rows).rev() {
        let cells: Vec<String> = (0..t).map(|runner| format!("{:>w$}", token(runner, row), w = widths[runner])).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// One line per runner: `runner 0: (3,2,1)`.
pub fn quotient_listing(quotient: &[Partition]) -> String {
    quotient.iter().enumerate().map(|(i, q)| format!("runner {i}: {}\n", q.to_exponential())).collect()
}
