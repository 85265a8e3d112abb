//! β-sets and t-abaci: core and quotient extraction, and reconstruction of
//! a partition from its core and quotient.
//!
//! The abacus of a partition places a bead on each first-column hook length.
//! Folding positions `0, 1, 2, ...` into `t` columns gives the t-abacus:
//! position `p` sits on runner `p % t`, row `p / t`.
//!
//! Quotients are read after padding the bead set at the bottom to a multiple
//! of `t` beads. With that normalization, `(core, quotient)` determines the
//! partition uniquely; without it, partitions whose bead counts differ modulo
//! `t` can share a quotient up to a cyclic shift of the runners.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite set of distinct nonnegative bead positions, stored ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct BetaSet {
    beads: Vec<usize>,
}

impl BetaSet {
    pub fn new(beads: impl IntoIterator<Item = usize>) -> Self {
        let mut beads: Vec<usize> = beads.into_iter().collect();
        beads.sort_unstable();
        beads.dedup();
        BetaSet { beads }
    }

    /// Caller guarantees distinct positions; order is normalized here.
    pub(crate) fn from_iter_unchecked(beads: impl IntoIterator<Item = usize>) -> Self {
        let mut beads: Vec<usize> = beads.into_iter().collect();
        beads.sort_unstable();
        debug_assert!(beads.windows(2).all(|w| w[0] < w[1]));
        BetaSet { beads }
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.beads.clone()
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.beads.binary_search(&p).is_ok()
    }

    /// Adds `n` beads at `0..n` and shifts the rest up by `n`. Leaves the
    /// partition unchanged.
    pub fn padded(&self, n: usize) -> BetaSet {
        BetaSet { beads: (0..n).chain(self.beads.iter().map(|&b| b + n)).collect() }
    }

    /// Each bead at `p` with `b` beads below it contributes the part `p - b`;
    /// zero parts are dropped.
    pub fn to_partition(&self) -> Partition {
        let parts: Vec<usize> = self
            .beads
            .iter()
            .enumerate()
            .rev()
            .map(|(below, &p)| p - below)
            .filter(|&part| part > 0)
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// True iff some bead can slide down by `h` onto a spacer, i.e. the
    /// partition has a hook of length `h`.
    pub fn has_hook_of_length(&self, h: usize) -> bool {
        h > 0 && self.beads.iter().any(|&b| b >= h && !self.contains(b - h))
    }
}

impl From<Vec<usize>> for BetaSet {
    fn from(beads: Vec<usize>) -> Self {
        BetaSet::new(beads)
    }
}

impl From<BetaSet> for Vec<usize> {
    fn from(b: BetaSet) -> Self {
        b.beads
    }
}

/// Bead positions viewed on `t` runners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TAbacus {
    t: usize,
    beads: BetaSet,
}

impl TAbacus {
    pub fn new(t: usize, beads: BetaSet) -> Result<Self> {
        check_runners(t)?;
        Ok(TAbacus { t, beads })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn beads(&self) -> &BetaSet {
        &self.beads
    }

    pub fn runner_of(&self, p: usize) -> usize {
        p % self.t
    }

    pub fn row_of(&self, p: usize) -> usize {
        p / self.t
    }

    pub fn position(&self, runner: usize, row: usize) -> usize {
        row * self.t + runner
    }

    /// Rows needed to show every bead; 0 for an empty abacus.
    pub fn num_rows(&self) -> usize {
        self.beads.beads().last().map_or(0, |&p| p / self.t + 1)
    }

    pub fn is_bead(&self, runner: usize, row: usize) -> bool {
        self.beads.contains(self.position(runner, row))
    }

    /// Rows occupied on one runner, ascending.
    pub fn runner_rows(&self, runner: usize) -> Vec<usize> {
        self.beads
            .beads()
            .iter()
            .filter(|&&p| p % self.t == runner)
            .map(|&p| p / self.t)
            .collect()
    }

    /// No runner has a spacer below a bead.
    pub fn is_flush(&self) -> bool {
        (0..self.t).all(|r| self.runner_rows(r).iter().enumerate().all(|(i, &row)| i == row))
    }

    /// Slides every bead as far down its runner as it will go.
    pub fn pushed_down(&self) -> TAbacus {
        let mut counts = vec![0usize; self.t];
        for &p in self.beads.beads() {
            counts[p % self.t] += 1;
        }
        let beads = counts
            .iter()
            .enumerate()
            .flat_map(|(runner, &m)| (0..m).map(move |row| row * self.t + runner));
        TAbacus { t: self.t, beads: BetaSet::new(beads) }
    }

    pub fn to_partition(&self) -> Partition {
        self.beads.to_partition()
    }
}

/// A partition split into its t-core and t-quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDecomposition {
    pub t: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl QuotientDecomposition {
    pub fn of(lambda: &Partition, t: usize) -> Result<Self> {
        Ok(QuotientDecomposition { t, core: t_core(lambda, t)?, quotient: t_quotient(lambda, t)? })
    }

    pub fn reconstruct(&self) -> Result<Partition> {
        reconstruct(&self.core, &self.quotient, self.t)
    }

    /// `|core| + t * Σ |quotient[γ]|`.
    pub fn weighted_size(&self) -> usize {
        self.core.size() + self.t * self.quotient.iter().map(Partition::size).sum::<usize>()
    }
}

fn check_runners(t: usize) -> Result<()> {
    if t < 2 {
        Err(Error::InvalidRunners(t))
    } else {
        Ok(())
    }
}

pub fn to_t_abacus(lambda: &Partition, t: usize) -> Result<TAbacus> {
    TAbacus::new(t, lambda.first_column_hooks())
}

pub fn t_core(lambda: &Partition, t: usize) -> Result<Partition> {
    Ok(to_t_abacus(lambda, t)?.pushed_down().to_partition())
}

pub fn t_quotient(lambda: &Partition, t: usize) -> Result<Vec<Partition>> {
    check_runners(t)?;
    let beta = lambda.first_column_hooks();
    let padding = (t - beta.len() % t) % t;
    let abacus = TAbacus { t, beads: beta.padded(padding) };
    Ok((0..t).map(|runner| BetaSet::from_iter_unchecked(abacus.runner_rows(runner)).to_partition()).collect())
}

/// Inverse of `(t_core, t_quotient)`.
///
/// The core's bead set is padded to a multiple of `t`, with enough extra
/// rows that every runner holds at least as many beads as its quotient
/// partition has parts; each runner is then refilled with the quotient's
/// bead set padded to that runner's bead count.
pub fn reconstruct(core: &Partition, quotient: &[Partition], t: usize) -> Result<Partition> {
    check_runners(t)?;
    if quotient.len() != t {
        return Err(Error::QuotientArity { expected: t, found: quotient.len() });
    }
    let core_beta = core.first_column_hooks();
    if core_beta.has_hook_of_length(t) {
        return Err(Error::NotACore { t });
    }
    let mut n = core_beta.len().div_ceil(t) * t;
    let counts = loop {
        let mut counts = vec![0usize; t];
        for &p in core_beta.padded(n - core_beta.len()).beads() {
            counts[p % t] += 1;
        }
        if counts.iter().zip(quotient).all(|(&m, q)| m >= q.len()) {
            break counts;
        }
        n += t;
    };
    let mut beads = Vec::with_capacity(n);
    for (runner, (q, &m)) in quotient.iter().zip(&counts).enumerate() {
        let rows = q.first_column_hooks().padded(m - q.len());
        beads.extend(rows.beads().iter().map(|&row| row * t + runner));
    }
    Ok(BetaSet::new(beads).to_partition())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tau(j: usize) -> Partition {
        Partition::new((1..=j).rev().collect()).unwrap()
    }

    #[test]
    fn beta_round_trip_small() {
        for n in 0..=10 {
            for lam in crate::partition::partitions_of(n) {
                assert_eq!(lam.first_column_hooks().to_partition(), lam);
                assert_eq!(lam.first_column_hooks().padded(3).to_partition(), lam);
            }
        }
    }

    #[test]
    fn abacus_geometry() {
        let ab = to_t_abacus(&p(&[9, 9, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1]), 8).unwrap();
        assert_eq!(ab.beads().to_vec(), vec![1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 19, 20]);
        assert_eq!(ab.num_rows(), 3);
        assert_eq!((ab.runner_of(19), ab.row_of(19)), (3, 2));
        assert!(ab.is_bead(4, 2));
        assert!(!ab.is_bead(2, 2));
        assert_eq!(ab.runner_rows(3), vec![0, 1, 2]);
        assert!(to_t_abacus(&Partition::empty(), 5).unwrap().beads().is_empty());
    }

    #[test]
    fn invalid_runner_count() {
        assert_eq!(to_t_abacus(&p(&[1]), 1), Err(Error::InvalidRunners(1)));
        assert_eq!(t_core(&p(&[1]), 0), Err(Error::InvalidRunners(0)));
        assert_eq!(t_quotient(&p(&[1]), 1), Err(Error::InvalidRunners(1)));
    }

    #[test]
    fn core_examples() {
        assert_eq!(t_core(&p(&[2, 2]), 2).unwrap(), Partition::empty());
        assert_eq!(t_core(&p(&[4, 2, 1, 1]), 3).unwrap(), p(&[4, 2, 1, 1]));
        assert_eq!(t_core(&p(&[3]), 2).unwrap(), p(&[1]));
    }

    #[test]
    fn quotient_of_a_core_is_empty() {
        let q = t_quotient(&tau(4), 2).unwrap();
        assert!(q.iter().all(Partition::is_empty));
    }

    #[test]
    fn two_quotients_of_size_two() {
        // (2) and (1,1) have bead counts of different parity; the padded
        // reading separates them
        assert_eq!(t_quotient(&p(&[2]), 2).unwrap(), vec![Partition::empty(), p(&[1])]);
        assert_eq!(t_quotient(&p(&[1, 1]), 2).unwrap(), vec![p(&[1]), Partition::empty()]);
    }

    #[test]
    fn reconstruct_examples() {
        let q = vec![Partition::empty(), p(&[1])];
        let lam = reconstruct(&Partition::empty(), &q, 2).unwrap();
        assert_eq!(lam.size(), 2);
        assert_eq!(t_quotient(&lam, 2).unwrap(), q);
        // oracle: search all partitions of 2
        let hits: Vec<_> =
            crate::partition::partitions_of(2).filter(|m| t_quotient(m, 2).unwrap() == q).collect();
        assert_eq!(hits, vec![lam]);

        let core = p(&[4, 2, 1, 1]);
        assert_eq!(reconstruct(&core, &vec![Partition::empty(); 3], 3).unwrap(), core);
    }

    #[test]
    fn reconstruct_errors() {
        assert_eq!(
            reconstruct(&p(&[2]), &[Partition::empty(), Partition::empty()], 2),
            Err(Error::NotACore { t: 2 })
        );
        assert_eq!(
            reconstruct(&Partition::empty(), &[Partition::empty()], 2),
            Err(Error::QuotientArity { expected: 2, found: 1 })
        );
    }

    #[test]
    fn reconstruct_grows_runners_when_needed() {
        let q = vec![p(&[1, 1, 1]), Partition::empty(), p(&[2])];
        let lam = reconstruct(&p(&[1]), &q, 3).unwrap();
        assert_eq!(t_core(&lam, 3).unwrap(), p(&[1]));
        assert_eq!(t_quotient(&lam, 3).unwrap(), q);
        assert_eq!(lam.size(), 1 + 3 * 5);
    }

    #[test]
    fn flush_matches_hook_scan_exhaustively() {
        for n in 0..=12 {
            for lam in crate::partition::partitions_of(n) {
                for t in 2..=6 {
                    let flush = to_t_abacus(&lam, t).unwrap().is_flush();
                    assert_eq!(flush, !lam.has_hook_of_length(t), "{lam} t={t}");
                    assert_eq!(lam.first_column_hooks().has_hook_of_length(t), lam.has_hook_of_length(t));
                }
            }
        }
    }

    #[test]
    fn removing_a_rim_hook_slides_one_bead() {
        let lam = p(&[5, 3, 3, 1]);
        let beta = lam.first_column_hooks();
        for cell in lam.cells() {
            let h = lam.hook_length(cell).unwrap();
            let smaller = lam.remove_rim_hook(cell).unwrap();
            assert_eq!(smaller.size() + h, lam.size());
            let b = beta.beads()[lam.len() - 1 - cell.row];
            let moved = BetaSet::new(beta.beads().iter().map(|&x| if x == b { b - h } else { x }));
            assert_eq!(moved.to_partition(), smaller, "{cell:?}");
        }
    }

    #[test]
    fn abacus_json_shape() {
        let ab = TAbacus::new(8, BetaSet::new([3, 1, 2])).unwrap();
        assert_eq!(serde_json::to_string(&ab).unwrap(), r#"{"t":8,"beads":[1,2,3]}"#);
    }
}
