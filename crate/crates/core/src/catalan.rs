//! The two maximal-core families indexed by `k`: the pair cores
//! `κ(2k-1, 2k+1)` and the triple cores `κ(2k-1, 2k, 2k+1)`, together with
//! the `2k`-abacus of the triple core and its row-by-row growth in `k`.

use serde::{Deserialize, Serialize};

use crate::abacus::{reconstruct, BetaSet, TAbacus};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `T(j) = j(j+1)/2`.
pub const fn triangular(j: usize) -> usize {
    j * (j + 1) / 2
}

/// The staircase `(j, j-1, ..., 1)`; empty for `j = 0`.
pub fn staircase(j: usize) -> Partition {
    Partition::from_sorted_unchecked((1..=j).rev().collect())
}

/// `4k²(k+1)(k-1)/6`.
pub fn pair_size_formula(k: usize) -> usize {
    4 * k * k * (k + 1) * (k.saturating_sub(1)) / 6
}

/// `k²(k+1)(k-1)/6`, also `k * binomial(k+1, 3)`.
pub fn triple_size_formula(k: usize) -> usize {
    k * k * (k + 1) * (k.saturating_sub(1)) / 6
}

fn check_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        Err(Error::InvalidK { k, min })
    } else {
        Ok(())
    }
}

/// The `2k`-abacus of the triple core: rows `0..=k-2`, where row `j` holds
/// `j+1` spacers, then `2k - 2(j+1)` beads, then `j+1` spacers.
pub fn kappa_bar_abacus(k: usize) -> Result<TAbacus> {
    check_k(k, 1)?;
    let t = 2 * k;
    let beads = (0..k.saturating_sub(1)).flat_map(|j| (t * j + j + 1)..(t * j + t - j - 1));
    TAbacus::new(t, BetaSet::new(beads))
}

/// Triple core in closed form: part `(k-m)²` repeated `2m` times for
/// `m = 1..k-1`.
pub fn kappa_triple(k: usize) -> Result<Partition> {
    check_k(k, 1)?;
    let parts = (1..k).flat_map(|m| std::iter::repeat_n((k - m) * (k - m), 2 * m)).collect();
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Grows the `2(k-1)`-abacus of the triple core into the `2k`-abacus: add an
/// empty runner on each side, add a row below with one spacer, `2k-2` beads
/// and one spacer, then renumber.
pub fn append_step(prev: &TAbacus) -> Result<TAbacus> {
    let t = prev.t();
    if !t.is_multiple_of(2) {
        return Err(Error::ShapeMismatch(format!("odd runner count {t}")));
    }
    let prev_k = t / 2;
    if *prev != kappa_bar_abacus(prev_k)? {
        return Err(Error::ShapeMismatch(format!("not the {t}-abacus of the triple core")));
    }
    let new_t = t + 2;
    let shifted = prev.beads().beads().iter().map(|&p| {
        let (runner, row) = (prev.runner_of(p), prev.row_of(p));
        (row + 1) * new_t + runner + 1
    });
    let bottom = 1..=t;
    TAbacus::new(new_t, BetaSet::new(shifted.chain(bottom)))
}

/// The palindromic `2k`-quotient `τ_{k-1}, ..., τ_0, τ_0, ..., τ_{k-1}`.
pub fn pair_quotient(k: usize) -> Vec<Partition> {
    (0..k).rev().chain(0..k).map(staircase).collect()
}

/// Pair core rebuilt from an empty `2k`-core and the staircase quotient.
pub fn kappa_pair(k: usize) -> Result<Partition> {
    check_k(k, 1)?;
    reconstruct(&Partition::empty(), &pair_quotient(k), 2 * k)
}

/// Compares `|κ(2k-1,2k+1)|` with `4|κ(2k-1,2k,2k+1)|` using the built
/// partitions, and both sizes with their closed forms.
pub fn theorem3_check(k: usize) -> Result<bool> {
    let pair = kappa_pair(k)?.size();
    let triple = kappa_triple(k)?.size();
    Ok(pair == 4 * triple && pair == pair_size_formula(k) && triple == triple_size_formula(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalanCorePair {
    pub k: usize,
    pub kappa_pair: Partition,
    pub kappa_triple: Partition,
    pub abacus_triple: TAbacus,
}

impl CatalanCorePair {
    pub fn new(k: usize) -> Result<Self> {
        Ok(CatalanCorePair {
            k,
            kappa_pair: kappa_pair(k)?,
            kappa_triple: kappa_triple(k)?,
            abacus_triple: kappa_bar_abacus(k)?,
        })
    }
}
