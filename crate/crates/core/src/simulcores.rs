//! Simultaneous cores: predicates, exhaustive enumeration, maximal cores of
//! coprime pairs, and the gcd finiteness criterion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::abacus::BetaSet;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::Partition;

pub const DEFAULT_MAX_BOUND: usize = 250;

/// A set of moduli `s_1, s_2, ...`, each at least 2, stored sorted with
/// duplicates collapsed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CoreFamilySpec {
    moduli: Vec<usize>,
}

impl CoreFamilySpec {
    pub fn new(moduli: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = moduli.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyModuli);
        }
        if let Some(&m) = set.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidModulus(m));
        }
        Ok(CoreFamilySpec { moduli: set.into_iter().collect() })
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn gcd(&self) -> usize {
        self.moduli.iter().fold(0, |g, &m| gcd(g, m))
    }

    pub fn min_modulus(&self) -> usize {
        self.moduli[0]
    }

    /// Size bound used by [`enumerate_cores`]: the smallest
    /// `(s²-1)(t²-1)/24` over coprime pairs in the family. Families with
    /// gcd 1 but no coprime pair fall back to the sum of the gaps of the
    /// generated semigroup, which bounds `Σ β` for any simultaneous core.
    pub fn enumeration_bound(&self) -> Result<usize> {
        let d = self.gcd();
        if d != 1 {
            return Err(Error::InfiniteFamily { gcd: d });
        }
        let pair_bound = self
            .moduli
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| self.moduli[i + 1..].iter().map(move |&t| (s, t)))
            .filter(|&(s, t)| gcd(s, t) == 1)
            .map(|(s, t)| maximal_core_size(s, t))
            .min();
        match pair_bound {
            Some(b) => Ok(b),
            None => Ok(semigroup_gaps(&self.moduli)?.iter().sum()),
        }
    }
}

impl TryFrom<Vec<usize>> for CoreFamilySpec {
    type Error = Error;

    fn try_from(moduli: Vec<usize>) -> Result<Self> {
        CoreFamilySpec::new(moduli)
    }
}

impl From<CoreFamilySpec> for Vec<usize> {
    fn from(spec: CoreFamilySpec) -> Self {
        spec.moduli
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_bound: usize,
    pub execution: Execution,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { max_bound: DEFAULT_MAX_BOUND, execution: Execution::default() }
    }
}

/// JSON export of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub moduli: Vec<usize>,
    pub count: usize,
    pub max_size: usize,
    pub cores: Vec<Partition>,
}

impl EnumerationReport {
    pub fn new(spec: &CoreFamilySpec, cores: Vec<Partition>) -> Self {
        EnumerationReport {
            moduli: spec.moduli().to_vec(),
            count: cores.len(),
            max_size: cores.iter().map(Partition::size).max().unwrap_or(0),
            cores,
        }
    }

    pub fn maximal(&self) -> impl Iterator<Item = &Partition> {
        self.cores.iter().filter(move |c| c.size() == self.max_size)
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_t_core(lambda: &Partition, t: usize) -> Result<bool> {
    if t < 2 {
        return Err(Error::InvalidRunners(t));
    }
    Ok(!lambda.first_column_hooks().has_hook_of_length(t))
}

pub fn is_simultaneous_core(lambda: &Partition, spec: &CoreFamilySpec) -> bool {
    let beta = lambda.first_column_hooks();
    spec.moduli.iter().all(|&m| !beta.has_hook_of_length(m))
}

pub fn has_finitely_many(spec: &CoreFamilySpec) -> bool {
    spec.gcd() == 1
}

/// Every simultaneous core of the family, sorted by size and then by parts.
///
/// Partitions are grown one row at a time from the bottom. Deleting the top
/// row of a diagram leaves the hooks of every other cell untouched, so each
/// bottom segment of a simultaneous core is itself one, and a branch can be
/// cut as soon as its new top row creates a forbidden hook. The search is
/// exhaustive up to [`CoreFamilySpec::enumeration_bound`].
pub fn enumerate_cores(spec: &CoreFamilySpec, config: &EnumConfig) -> Result<Vec<Partition>> {
    let bound = spec.enumeration_bound()?;
    if bound > config.max_bound {
        return Err(Error::BoundExceeded { bound, ceiling: config.max_bound });
    }
    let moduli = spec.moduli();
    let first_rows = bound.min(spec.min_modulus() - 1);
    let mut cores = config.execution.flat_map_range(1, first_rows + 1, |bottom| {
        let mut search = CoreSearch { moduli, bound, rows: Vec::new(), cols: Vec::new(), size: 0, out: Vec::new() };
        if search.try_push(bottom) {
            search.grow();
        }
        search.out
    });
    cores.push(Partition::empty());
    cores.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    Ok(cores)
}

struct CoreSearch<'a> {
    moduli: &'a [usize],
    bound: usize,
    /// bottom row first
    rows: Vec<usize>,
    cols: Vec<usize>,
    size: usize,
    out: Vec<Partition>,
}

impl CoreSearch<'_> {
    /// Pushes `a` as the new top row if none of its hooks is a modulus.
    fn try_push(&mut self, a: usize) -> bool {
        let ok = (0..a).all(|j| {
            let h = a - j + self.cols.get(j).copied().unwrap_or(0);
            !self.moduli.contains(&h)
        });
        if !ok {
            return false;
        }
        if self.cols.len() < a {
            self.cols.resize(a, 0);
        }
        for c in &mut self.cols[..a] {
            *c += 1;
        }
        self.rows.push(a);
        self.size += a;
        self.out.push(Partition::from_sorted_unchecked(self.rows.iter().rev().copied().collect()));
        true
    }

    fn pop(&mut self) {
        let a = self.rows.pop().expect("pop on empty search");
        for c in &mut self.cols[..a] {
            *c -= 1;
        }
        while self.cols.last() == Some(&0) {
            self.cols.pop();
        }
        self.size -= a;
    }

    fn grow(&mut self) {
        let top = *self.rows.last().expect("grow needs a row");
        // cells right of the current top row have hooks 1..=a-top
        let hi = (top + self.moduli[0] - 1).min(self.bound - self.size);
        for a in top..=hi {
            if self.try_push(a) {
                self.grow();
                self.pop();
            }
        }
    }
}

/// `binomial(s+t, s) / (s+t)`, the number of simultaneous (s,t)-cores.
pub fn count_st_cores(s: usize, t: usize) -> Result<u128> {
    check_coprime_pair(s, t)?;
    let n = (s + t) as u128;
    let mut c: u128 = 1;
    for i in 0..s as u128 {
        c = c * (n - i) / (i + 1);
    }
    Ok(c / n)
}

pub fn maximal_core_size(s: usize, t: usize) -> usize {
    (s * s - 1) * (t * t - 1) / 24
}

/// The partition whose β-set is the gap set of the semigroup `⟨s, t⟩`.
pub fn maximal_core(s: usize, t: usize) -> Result<Partition> {
    check_coprime_pair(s, t)?;
    Ok(BetaSet::new(semigroup_gaps(&[s, t])?).to_partition())
}

fn check_coprime_pair(s: usize, t: usize) -> Result<()> {
    for m in [s, t] {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
    }
    if gcd(s, t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    Ok(())
}

/// Positive integers not expressible as nonnegative combinations of `gens`.
pub fn semigroup_gaps(gens: &[usize]) -> Result<Vec<usize>> {
    let d = gens.iter().fold(0, |g, &m| gcd(g, m));
    if d != 1 {
        return Err(Error::InfiniteFamily { gcd: d });
    }
    let min = *gens.iter().min().expect("gcd 1 implies non-empty");
    let mut reachable = vec![true];
    let mut gaps = Vec::new();
    let mut run = 1;
    let mut n = 0;
    // once `min` consecutive integers are reachable, everything above is
    while run < min {
        n += 1;
        let r = gens.iter().any(|&g| g <= n && reachable[n - g]);
        reachable.push(r);
        if r {
            run += 1;
        } else {
            run = 0;
            gaps.push(n);
        }
    }
    Ok(gaps)
}

/// `((d-1)n, (d-1)(n-1), ..., d-1)` for `d = gcd(moduli) > 1`. Its β-set is
/// `{jd - 1 : 1 <= j <= n}`, a flush column on runner `d-1` of the d-abacus,
/// so it is a core for every multiple of `d`.
pub fn infinite_witness(spec: &CoreFamilySpec, n: usize) -> Result<Partition> {
    let d = spec.gcd();
    if d == 1 {
        return Err(Error::FiniteFamily);
    }
    Ok(Partition::from_sorted_unchecked((1..=n).rev().map(|i| (d - 1) * i).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn spec(m: &[usize]) -> CoreFamilySpec {
        CoreFamilySpec::new(m.iter().copied()).unwrap()
    }

    fn brute_force(spec: &CoreFamilySpec, bound: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=bound)
            .flat_map(partitions_of)
            .filter(|lam| spec.moduli().iter().all(|&m| !lam.has_hook_of_length(m)))
            .collect();
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn spec_validation() {
        assert_eq!(spec(&[5, 3, 5]).moduli(), &[3, 5]);
        assert_eq!(CoreFamilySpec::new([]), Err(Error::EmptyModuli));
        assert_eq!(CoreFamilySpec::new([1, 3]), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn t_core_predicate() {
        let tau5 = p(&[5, 4, 3, 2, 1]);
        assert_eq!(is_t_core(&tau5, 2), Ok(true));
        assert_eq!(is_t_core(&p(&[2, 2]), 2), Ok(false));
        let k789 = p(&[9, 9, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1]);
        for t in 7..=9 {
            assert_eq!(is_t_core(&k789, t), Ok(true));
        }
        assert_eq!(is_t_core(&tau5, 1), Err(Error::InvalidRunners(1)));
    }

    #[test]
    fn simultaneous_predicate() {
        assert!(is_simultaneous_core(&p(&[1, 1]), &spec(&[3, 4, 5])));
        assert!(is_simultaneous_core(&Partition::empty(), &spec(&[2, 9])));
        assert!(is_simultaneous_core(&p(&[4, 2, 1, 1]), &spec(&[3, 5])));
        assert!(!is_simultaneous_core(&p(&[2]), &spec(&[2, 3, 4, 5])));
    }

    #[test]
    fn enumeration_examples() {
        let cfg = EnumConfig::default();
        assert_eq!(enumerate_cores(&spec(&[2, 3]), &cfg).unwrap(), vec![Partition::empty(), p(&[1])]);
        let c34 = enumerate_cores(&spec(&[3, 4]), &cfg).unwrap();
        assert_eq!(c34.len(), 5);
        assert_eq!(c34.iter().map(Partition::size).max(), Some(5));
        assert_eq!(enumerate_cores(&spec(&[3, 5]), &cfg).unwrap().len(), 7);
    }

    #[test]
    fn pruned_search_matches_generate_and_filter() {
        let cfg = EnumConfig::default();
        for m in [&[2, 3][..], &[3, 4], &[3, 5], &[4, 5], &[2, 7], &[3, 7], &[4, 7], &[3, 4, 5], &[5, 6, 7], &[6, 10, 15]] {
            let sp = spec(m);
            let bound = sp.enumeration_bound().unwrap();
            if bound > 40 {
                continue;
            }
            assert_eq!(enumerate_cores(&sp, &cfg).unwrap(), brute_force(&sp, bound), "{m:?}");
        }
    }

    #[test]
    fn sequential_and_parallel_enumerations_agree() {
        let sp = spec(&[5, 7]);
        let seq = enumerate_cores(&sp, &EnumConfig { execution: Execution::Sequential, ..Default::default() });
        let par = enumerate_cores(&sp, &EnumConfig { execution: Execution::Parallel, ..Default::default() });
        assert_eq!(seq, par);
    }

    #[test]
    fn enumeration_errors() {
        let cfg = EnumConfig::default();
        assert_eq!(enumerate_cores(&spec(&[4, 6]), &cfg), Err(Error::InfiniteFamily { gcd: 2 }));
        let tight = EnumConfig { max_bound: 10, ..Default::default() };
        assert_eq!(enumerate_cores(&spec(&[4, 5]), &tight), Err(Error::BoundExceeded { bound: 15, ceiling: 10 }));
    }

    #[test]
    fn family_without_coprime_pair_uses_gap_sum() {
        let sp = spec(&[6, 10, 15]);
        let gaps = semigroup_gaps(sp.moduli()).unwrap();
        assert_eq!(sp.enumeration_bound().unwrap(), gaps.iter().sum::<usize>());
    }

    #[test]
    fn anderson_counts() {
        assert_eq!(count_st_cores(2, 3), Ok(2));
        assert_eq!(count_st_cores(3, 4), Ok(5));
        assert_eq!(count_st_cores(3, 5), Ok(7));
        assert_eq!(count_st_cores(4, 6), Err(Error::NotCoprime { s: 4, t: 6 }));
        assert_eq!(count_st_cores(1, 6), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn maximal_core_examples() {
        assert_eq!(maximal_core(3, 4).unwrap(), p(&[3, 1, 1]));
        assert_eq!(maximal_core(3, 5).unwrap(), p(&[4, 2, 1, 1]));
        assert_eq!(maximal_core(2, 3).unwrap(), p(&[1]));
        assert_eq!(maximal_core(4, 4), Err(Error::NotCoprime { s: 4, t: 4 }));
        assert_eq!(semigroup_gaps(&[3, 5]).unwrap(), vec![1, 2, 4, 7]);
    }

    #[test]
    fn finiteness() {
        assert!(has_finitely_many(&spec(&[3, 4, 5])));
        assert!(!has_finitely_many(&spec(&[4, 6])));
        assert!(!has_finitely_many(&spec(&[7])));
    }

    #[test]
    fn witnesses() {
        let w = infinite_witness(&spec(&[4, 6]), 3).unwrap();
        assert_eq!(w, p(&[3, 2, 1]));
        assert!(!w.has_hook_of_length(4) && !w.has_hook_of_length(6));
        let w = infinite_witness(&spec(&[3, 6]), 2).unwrap();
        assert_eq!(w, p(&[4, 2]));
        assert_eq!(w.first_column_hooks().to_vec(), vec![2, 5]);
        assert!(!w.has_hook_of_length(3) && !w.has_hook_of_length(6));
        assert_eq!(infinite_witness(&spec(&[9, 12]), 1).unwrap(), p(&[2]));
        assert_eq!(infinite_witness(&spec(&[3, 4]), 1), Err(Error::FiniteFamily));
    }

    #[test]
    fn report_json() {
        let sp = spec(&[3, 4]);
        let cores = enumerate_cores(&sp, &EnumConfig::default()).unwrap();
        let rep = EnumerationReport::new(&sp, cores);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.starts_with(r#"{"moduli":[3,4],"count":5,"max_size":5,"cores":[[],"#));
        assert_eq!(serde_json::from_str::<EnumerationReport>(&json).unwrap(), rep);
        assert_eq!(rep.maximal().collect::<Vec<_>>(), vec![&p(&[3, 1, 1])]);
    }
}
