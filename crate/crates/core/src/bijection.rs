//! A cell-by-cell bijection between `k` copies of the staircase half-quotient
//! `Q = (τ_{k-1}, ..., τ_1, τ_0)` and the triple core `κ(2k-1, 2k, 2k+1)`.
//!
//! The `k` copies split three ways:
//!
//! * Part 1: the `τ_{k-1}` slot of copies `2..=k`;
//! * Part 2: all of copy 1;
//! * Part 3: the remaining slots of copies `2..=k`, which form `k-1` copies
//!   of the half-quotient for `k-1`.
//!
//! Rows of the triple core carry matching region tags. Part 3 is mapped by
//! recursion into the rows that reproduce the triple core for `k-1`. Every
//! other square row `a²` is cut into `τ_a` and `τ_{a-1}`; Part 2 fills one
//! row of every other square size, and Part 1 fills the rest after its
//! small staircases are regrouped into blocks of `T(k-1)` cells.
//!
//! Where the counting argument leaves freedom the choices are fixed: rows are
//! matched top to bottom, a square row is read as an `a × a` block in
//! row-major order, and blocks are packed largest staircase first.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::catalan::{kappa_triple, staircase, triangular};
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    #[serde(rename = "P1")]
    Part1,
    #[serde(rename = "P2")]
    Part2,
    #[serde(rename = "P3")]
    Part3,
}

impl Region {
    pub const ALL: [Region; 3] = [Region::Part1, Region::Part2, Region::Part3];

    pub fn index(self) -> usize {
        match self {
            Region::Part1 => 0,
            Region::Part2 => 1,
            Region::Part3 => 2,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Region::Part1 => "P1",
            Region::Part2 => "P2",
            Region::Part3 => "P3",
        }
    }

    /// Region a source cell belongs to, by copy (1-based) and slot.
    pub fn of_source(copy: usize, slot: usize) -> Region {
        if copy == 1 {
            Region::Part2
        } else if slot == 0 {
            Region::Part1
        } else {
            Region::Part3
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidK { k, min: 1 })
    } else {
        Ok(())
    }
}

/// `(τ_{k-1}, ..., τ_1, τ_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientHalf {
    pub k: usize,
    pub partitions: Vec<Partition>,
}

impl QuotientHalf {
    pub fn size(&self) -> usize {
        self.partitions.iter().map(Partition::size).sum()
    }

    /// Staircase held in `slot`.
    pub fn slot(&self, slot: usize) -> &Partition {
        &self.partitions[slot]
    }
}

pub fn q_half(k: usize) -> Result<QuotientHalf> {
    check_k(k)?;
    Ok(QuotientHalf { k, partitions: (0..k).rev().map(staircase).collect() })
}

/// Part sizes of the three-way split, each list weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartsSplit {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
    pub part3: Vec<usize>,
}

impl PartsSplit {
    pub fn sizes(&self) -> [usize; 3] {
        [self.part1.iter().sum(), self.part2.iter().sum(), self.part3.iter().sum()]
    }
}

pub fn split_parts(k: usize) -> Result<PartsSplit> {
    check_k(k)?;
    let top = triangular(k - 1);
    let part1 = if top == 0 { Vec::new() } else { vec![top; k - 1] };
    let part2 = (1..k).rev().map(triangular).collect();
    let part3 = (1..k.saturating_sub(1)).rev().flat_map(|j| std::iter::repeat_n(triangular(j), k - 1)).collect();
    Ok(PartsSplit { part1, part2, part3 })
}

/// One region tag per row of the triple core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionLabeling {
    pub k: usize,
    pub labels: Vec<Region>,
}

impl RegionLabeling {
    pub fn rows(&self, region: Region) -> Vec<usize> {
        self.labels.iter().enumerate().filter(|(_, &r)| r == region).map(|(i, _)| i).collect()
    }
}

/// Tags the rows of the triple core. Among the `2m` rows of size `(k-m)²`,
/// `2(m-1)` belong to Part 3; the other two are one Part 2 row and one
/// Part 1 row when `m` is odd and two Part 1 rows when `m` is even. Within
/// a size, Part 2 comes first and Part 3 last.
pub fn label_rows(k: usize) -> Result<RegionLabeling> {
    check_k(k)?;
    let mut labels = Vec::new();
    for m in 1..k {
        if m % 2 == 1 {
            labels.extend([Region::Part2, Region::Part1]);
        } else {
            labels.extend([Region::Part1, Region::Part1]);
        }
        labels.extend(std::iter::repeat_n(Region::Part3, 2 * (m - 1)));
    }
    let labeling = RegionLabeling { k, labels };

    let triple = kappa_triple(k)?;
    if labeling.labels.len() != triple.len() {
        return Err(Error::Inconsistent(format!("{} labels for {} rows", labeling.labels.len(), triple.len())));
    }
    let part3: Vec<usize> = labeling.rows(Region::Part3).iter().map(|&r| triple.part(r)).collect();
    let inner = if k > 1 { kappa_triple(k - 1)?.into_parts() } else { Vec::new() };
    if part3 != inner {
        return Err(Error::Inconsistent(format!("Part 3 rows {part3:?} differ from {inner:?}")));
    }
    Ok(labeling)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SquarePiece {
    /// cells with `i + j <= m-1`, a copy of `τ_m`
    Upper,
    /// cells with `i + j >= m`, a copy of `τ_{m-1}`
    Lower,
}

/// An `m × m` block cut along its anti-diagonal into `τ_m` and `τ_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSplit {
    m: usize,
}

impl SquareSplit {
    pub fn side(&self) -> usize {
        self.m
    }

    pub fn piece(&self, i: usize, j: usize) -> SquarePiece {
        if i + j < self.m {
            SquarePiece::Upper
        } else {
            SquarePiece::Lower
        }
    }

    pub fn grid(&self) -> Vec<Vec<SquarePiece>> {
        (0..self.m).map(|i| (0..self.m).map(|j| self.piece(i, j)).collect()).collect()
    }

    /// Block cell holding cell `c` of `τ_m`.
    pub fn upper_cell(&self, c: Cell) -> Cell {
        c
    }

    /// Block cell holding cell `c` of `τ_{m-1}`: the staircase turned
    /// through 180 degrees into the lower-right corner.
    pub fn lower_cell(&self, c: Cell) -> Cell {
        Cell::new(self.m - 1 - c.row, self.m - 1 - c.col)
    }

    pub fn piece_sizes(&self) -> (usize, usize) {
        let grid = self.grid();
        let upper = grid.iter().flatten().filter(|&&p| p == SquarePiece::Upper).count();
        (upper, self.m * self.m - upper)
    }
}

pub fn square_split(m: usize) -> Result<SquareSplit> {
    if m == 0 {
        return Err(Error::InvalidSide);
    }
    Ok(SquareSplit { m })
}

/// One cell of one of the three copies of `τ_j` in the repacking pool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoolCell {
    pub j: usize,
    pub copy: usize,
    pub cell: Cell,
}

/// Three copies of each of `τ_1, ..., τ_{k-2}` regrouped into `k-2` blocks
/// of `T(k-1)` cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Repacking {
    pub k: usize,
    pub blocks: Vec<Vec<PoolCell>>,
}

/// Lays the pool out largest staircase first (copies in order, cells
/// row-major) and cuts it into consecutive blocks of `T(k-1)` cells. A
/// staircase may straddle two blocks.
pub fn repack_prop2(k: usize) -> Result<Repacking> {
    check_k(k)?;
    if k <= 2 {
        return Ok(Repacking { k, blocks: Vec::new() });
    }
    let pool: Vec<PoolCell> = (1..=k - 2)
        .rev()
        .flat_map(|j| {
            (0..3).flat_map(move |copy| staircase(j).cells().collect::<Vec<_>>().into_iter().map(move |cell| PoolCell { j, copy, cell }))
        })
        .collect();
    let block = triangular(k - 1);
    if pool.len() != (k - 2) * block {
        return Err(Error::Inconsistent(format!("pool of {} cells does not fill {} blocks of {block}", pool.len(), k - 2)));
    }
    Ok(Repacking { k, blocks: pool.chunks(block).map(<[PoolCell]>::to_vec).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Source {
    /// 1-based copy number
    pub copy: usize,
    /// position in `(τ_{k-1}, ..., τ_0)`
    pub slot: usize,
    pub row: usize,
    pub col: usize,
}

impl Source {
    fn at(copy: usize, slot: usize, c: Cell) -> Self {
        Source { copy, slot, row: c.row, col: c.col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellMapEntry {
    pub src: Source,
    pub dst: Cell,
    pub region: Region,
}

/// Entries sorted by target, row-major. Serializes as the bare entry list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellMap {
    pub entries: Vec<CellMapEntry>,
}

impl CellMap {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Every source cell of `k` copies of the half-quotient.
pub fn source_cells(k: usize) -> Vec<Source> {
    let mut out = Vec::new();
    for copy in 1..=k {
        for slot in 0..k {
            out.extend(staircase(k - 1 - slot).cells().map(|c| Source::at(copy, slot, c)));
        }
    }
    out
}

pub fn build_bijection(k: usize) -> Result<CellMap> {
    check_k(k)?;
    let mut entries = build_entries(k)?;
    entries.sort_by_key(|e| (e.dst.row, e.dst.col));
    Ok(CellMap { entries })
}

fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

fn square_side(triple: &Partition, row: usize) -> Result<usize> {
    isqrt(triple.part(row)).ok_or_else(|| Error::Inconsistent(format!("row {row} is not a square")))
}

fn build_entries(k: usize) -> Result<Vec<CellMapEntry>> {
    if k == 1 {
        return Ok(Vec::new());
    }
    let triple = kappa_triple(k)?;
    let labeling = label_rows(k)?;
    let mut entries = Vec::with_capacity(triple.size());

    // Part 3: copies 2..=k, slots 1.. are the half-quotients for k-1
    let part3_rows = labeling.rows(Region::Part3);
    for e in build_entries(k - 1)? {
        entries.push(CellMapEntry {
            src: Source { copy: e.src.copy + 1, slot: e.src.slot + 1, ..e.src },
            dst: Cell::new(part3_rows[e.dst.row], e.dst.col),
            region: Region::Part3,
        });
    }

    // Part 2: copy 1; the square a² takes τ_a and τ_{a-1}
    for row in labeling.rows(Region::Part2) {
        let a = square_side(&triple, row)?;
        let split = square_split(a)?;
        let (big_slot, small_slot) = (k - 1 - a, k - a);
        for c in staircase(a).cells() {
            entries.push(place(Source::at(1, big_slot, c), row, &split, split.upper_cell(c), Region::Part2));
        }
        for c in staircase(a - 1).cells() {
            entries.push(place(Source::at(1, small_slot, c), row, &split, split.lower_cell(c), Region::Part2));
        }
    }

    // Part 1: copy 2 fills the τ_{k-1} half of the first square; every other
    // half-square goes to the pool, which is regrouped into blocks for
    // copies 3..=k
    let part1_rows = labeling.rows(Region::Part1);
    let mut pool: Vec<(usize, Vec<Cell>)> = Vec::new();
    for (n, &row) in part1_rows.iter().enumerate() {
        let a = square_side(&triple, row)?;
        let split = square_split(a)?;
        let flat = |c: Cell| Cell::new(row, c.row * a + c.col);
        if n == 0 {
            if a != k - 1 {
                return Err(Error::Inconsistent(format!("first Part 1 row has side {a}, expected {}", k - 1)));
            }
            for c in staircase(a).cells() {
                entries.push(place(Source::at(2, 0, c), row, &split, split.upper_cell(c), Region::Part1));
            }
        } else {
            pool.push((a, staircase(a).cells().map(|c| flat(split.upper_cell(c))).collect()));
        }
        if a > 1 {
            pool.push((a - 1, staircase(a - 1).cells().map(|c| flat(split.lower_cell(c))).collect()));
        }
    }
    let mut seen = vec![0usize; k];
    let mut targets = std::collections::HashMap::new();
    for (j, cells) in pool {
        let copy = seen[j];
        seen[j] += 1;
        targets.insert((j, copy), cells);
    }
    if (1..k - 1).any(|j| seen[j] != 3) || seen[k - 1] != 0 {
        return Err(Error::Inconsistent(format!("pool multiplicities {seen:?}")));
    }
    let top = staircase(k - 1);
    for (b, block) in repack_prop2(k)?.blocks.iter().enumerate() {
        let copy = 3 + b;
        for (c, pc) in top.cells().zip(block) {
            let local = Cell::new(pc.cell.row, pc.cell.col);
            let j_cells = &targets[&(pc.j, pc.copy)];
            let idx = staircase(pc.j).cells().position(|x| x == local).expect("pool cell in its staircase");
            entries.push(CellMapEntry { src: Source::at(copy, 0, c), dst: j_cells[idx], region: Region::Part1 });
        }
    }
    Ok(entries)
}

fn place(src: Source, row: usize, split: &SquareSplit, block: Cell, region: Region) -> CellMapEntry {
    CellMapEntry { src, dst: Cell::new(row, block.row * split.side() + block.col), region }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub k: usize,
    pub entries: usize,
    /// every source cell is mapped exactly once and nothing else is
    pub total: bool,
    pub injective: bool,
    pub surjective: bool,
    /// target row tag and source part both agree with the entry's region
    pub region_consistent: bool,
    /// entries per region, in `P1, P2, P3` order
    pub region_counts: [usize; 3],
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.total && self.injective && self.surjective && self.region_consistent
    }
}

pub fn verify_bijection(map: &CellMap, k: usize) -> VerifyReport {
    let mut region_counts = [0; 3];
    for e in &map.entries {
        region_counts[e.region.index()] += 1;
    }
    let (triple, labeling) = match (kappa_triple(k), label_rows(k)) {
        (Ok(t), Ok(l)) if k >= 1 => (t, l),
        _ => {
            return VerifyReport {
                k,
                entries: map.len(),
                total: false,
                injective: false,
                surjective: false,
                region_consistent: false,
                region_counts,
            }
        }
    };

    let expected: HashSet<Source> = source_cells(k).into_iter().collect();
    let mut sources = HashSet::with_capacity(map.len());
    let sources_unique = map.entries.iter().all(|e| sources.insert(e.src));
    let total = sources_unique && sources == expected;

    let mut targets = HashSet::with_capacity(map.len());
    let injective = map.entries.iter().all(|e| targets.insert(e.dst));
    let surjective = targets.len() == triple.size() && targets.iter().all(|&c| triple.contains_cell(c));

    let region_consistent = map.entries.iter().all(|e| {
        labeling.labels.get(e.dst.row) == Some(&e.region) && Region::of_source(e.src.copy, e.src.slot) == e.region
    });

    VerifyReport { k, entries: map.len(), total, injective, surjective, region_consistent, region_counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Region::*;

    #[test]
    fn half_quotient() {
        let q = q_half(4).unwrap();
        assert_eq!(q.partitions, vec![staircase(3), staircase(2), staircase(1), Partition::empty()]);
        assert_eq!(q.size(), 10);
        assert_eq!(q_half(1).unwrap().size(), 0);
        let q5 = q_half(5).unwrap();
        assert_eq!(q5.size(), 20);
        assert_eq!(5 * q5.size(), kappa_triple(5).unwrap().size());
        assert!(q_half(0).is_err());
    }

    #[test]
    fn parts_split_examples() {
        let s = split_parts(4).unwrap();
        assert_eq!(s.part1, vec![6, 6, 6]);
        assert_eq!(s.part2, vec![6, 3, 1]);
        assert_eq!(s.part3, vec![3, 3, 3, 1, 1, 1]);
        let s = split_parts(1).unwrap();
        assert!(s.part1.is_empty() && s.part2.is_empty() && s.part3.is_empty());
        let s = split_parts(2).unwrap();
        assert_eq!((s.part1, s.part2, s.part3), (vec![1], vec![1], vec![]));
    }

    #[test]
    fn labels_small_k() {
        assert_eq!(label_rows(4).unwrap().labels, vec![Part2, Part1, Part1, Part1, Part3, Part3, Part2, Part1, Part3, Part3, Part3, Part3]);
        assert_eq!(
            label_rows(5).unwrap().labels,
            vec![
                Part2, Part1, Part1, Part1, Part3, Part3, Part2, Part1, Part3, Part3, Part3, Part3, Part1, Part1, Part3,
                Part3, Part3, Part3, Part3, Part3
            ]
        );
        assert_eq!(label_rows(2).unwrap().labels, vec![Part2, Part1]);
        assert!(label_rows(1).unwrap().labels.is_empty());
    }

    #[test]
    fn square_split_examples() {
        let s = square_split(5).unwrap();
        assert_eq!(s.piece_sizes(), (15, 10));
        let pattern: Vec<String> = s
            .grid()
            .iter()
            .map(|row| row.iter().map(|p| if *p == SquarePiece::Upper { 'o' } else { '*' }).collect())
            .collect();
        assert_eq!(pattern, vec!["ooooo", "oooo*", "ooo**", "oo***", "o****"]);
        assert_eq!(square_split(1).unwrap().piece_sizes(), (1, 0));
        assert_eq!(square_split(3).unwrap().piece_sizes(), (6, 3));
        assert_eq!(square_split(0), Err(Error::InvalidSide));
    }

    #[test]
    fn staircase_embeddings_land_on_their_piece() {
        for m in 1..=9 {
            let s = square_split(m).unwrap();
            assert!(staircase(m).cells().all(|c| { let b = s.upper_cell(c); s.piece(b.row, b.col) == SquarePiece::Upper }));
            assert!(staircase(m - 1).cells().all(|c| { let b = s.lower_cell(c); s.piece(b.row, b.col) == SquarePiece::Lower }));
        }
    }

    #[test]
    fn repack_examples() {
        let r = repack_prop2(4).unwrap();
        assert_eq!(r.blocks.len(), 2);
        assert!(r.blocks.iter().all(|b| b.len() == 6));
        assert_eq!(repack_prop2(3).unwrap().blocks, vec![(0..3).map(|copy| PoolCell { j: 1, copy, cell: Cell::new(0, 0) }).collect::<Vec<_>>()]);
        let r = repack_prop2(5).unwrap();
        assert_eq!(r.blocks.len(), 3);
        assert!(r.blocks.iter().all(|b| b.len() == 10));
        assert!(repack_prop2(2).unwrap().blocks.is_empty());
        assert!(repack_prop2(0).is_err());
    }

    #[test]
    fn bijection_small_cases() {
        assert!(build_bijection(1).unwrap().is_empty());
        let m2 = build_bijection(2).unwrap();
        assert_eq!(m2.len(), 2);
        assert_eq!(m2.entries[0].region, Part2);
        assert_eq!(m2.entries[0].dst, Cell::new(0, 0));
        assert_eq!(m2.entries[1].region, Part1);
        assert_eq!(m2.entries[1].dst, Cell::new(1, 0));
        let m4 = build_bijection(4).unwrap();
        let rep = verify_bijection(&m4, 4);
        assert!(rep.ok(), "{rep:?}");
        assert_eq!(rep.entries, 40);
        assert_eq!(rep.region_counts, [18, 10, 12]);
    }

    #[test]
    fn mutations_are_caught() {
        let map = build_bijection(5).unwrap();
        assert!(verify_bijection(&map, 5).ok());

        let mut dropped = map.clone();
        dropped.entries.pop();
        let rep = verify_bijection(&dropped, 5);
        assert!(!rep.total && !rep.surjective);

        let mut collide = map.clone();
        collide.entries[1].dst = collide.entries[0].dst;
        let rep = verify_bijection(&collide, 5);
        assert!(!rep.injective && rep.total);

        let mut relabel = map.clone();
        relabel.entries[0].region = Part3;
        assert!(!verify_bijection(&relabel, 5).region_consistent);

        let mut dup_src = map.clone();
        dup_src.entries[1].src = dup_src.entries[0].src;
        assert!(!verify_bijection(&dup_src, 5).total);

        assert!(!verify_bijection(&map, 0).ok());
        assert!(!verify_bijection(&map, 4).ok());
    }

    #[test]
    fn trace_json_shape() {
        let json = serde_json::to_string(&build_bijection(2).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"[{"src":{"copy":1,"slot":0,"row":0,"col":0},"dst":{"row":0,"col":0},"region":"P2"},{"src":{"copy":2,"slot":0,"row":0,"col":0},"dst":{"row":1,"col":0},"region":"P1"}]"#
        );
        assert_eq!(serde_json::to_string(&build_bijection(1).unwrap()).unwrap(), "[]");
    }
}
