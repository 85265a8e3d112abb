//! Verification sweeps shared by the `verify` command and the benches.

use std::fmt;
use std::str::FromStr;

use crate::abacus::{reconstruct, t_core, t_quotient};
use crate::bijection::{build_bijection, verify_bijection};
use crate::catalan::{
    append_step, kappa_bar_abacus, kappa_pair, kappa_triple, pair_quotient, theorem3_check, triangular,
    triple_size_formula,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::Partition;
use crate::random::{seeded_rng, strip_random_hooks, PartitionSampler};
use crate::simulcores::{enumerate_cores, maximal_core, CoreFamilySpec, EnumConfig, EnumerationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Theorem3,
    Theorem6,
    Remarks,
    Bijection,
    Eq1,
    Maximal,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Theorem3, Suite::Theorem6, Suite::Remarks, Suite::Bijection, Suite::Eq1, Suite::Maximal];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem3 => "theorem3",
            Suite::Theorem6 => "theorem6",
            Suite::Remarks => "remarks",
            Suite::Bijection => "bijection",
            Suite::Eq1 => "eq1",
            Suite::Maximal => "maximal",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    fn from_checks(suite: Suite, checks: Vec<std::result::Result<(), String>>) -> Self {
        let total = checks.len();
        let failures: Vec<String> = checks.into_iter().filter_map(|c| c.err()).collect();
        SuiteOutcome { suite, passed: total - failures.len(), total, failures }
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{}: {}/{} {}", self.suite, self.passed, self.total, verdict)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub k_max: usize,
    pub seed: u64,
    pub execution: Execution,
}

/// Largest `k` for which the triple family is brute-forced in the
/// `maximal` suite.
pub const BRUTE_FORCE_K: usize = 4;

pub const EQ1_TRIALS: usize = 1000;
pub const EQ1_MAX_SIZE: usize = 200;
pub const UNIQUENESS_TRIALS: usize = 200;
pub const UNIQUENESS_MAX_SIZE: usize = 60;
pub const UNIQUENESS_ORDERS: usize = 20;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e: Error| e.to_string())
}

pub fn run(suite: Suite, cfg: &SweepConfig) -> Result<SuiteOutcome> {
    if cfg.k_max == 0 {
        return Err(Error::InvalidK { k: 0, min: 1 });
    }
    let per_k = |f: fn(usize) -> Check| cfg.execution.map_range(1, cfg.k_max + 1, f);
    let checks = match suite {
        Suite::Theorem3 => per_k(check_theorem3),
        Suite::Theorem6 => per_k(check_theorem6),
        Suite::Remarks => per_k(check_remarks),
        Suite::Bijection => per_k(check_bijection),
        Suite::Maximal => per_k(check_maximal),
        Suite::Eq1 => eq1_checks(cfg.seed, cfg.execution),
    };
    Ok(SuiteOutcome::from_checks(suite, checks))
}

fn check_theorem3(k: usize) -> Check {
    ensure(lift(theorem3_check(k))?, || format!("k={k}: size identity fails"))
}

fn check_theorem6(k: usize) -> Check {
    let abacus = lift(kappa_bar_abacus(k))?;
    let from_abacus = abacus.to_partition().to_exponential();
    let closed = lift(kappa_triple(k))?.to_exponential();
    ensure(from_abacus == closed, || format!("k={k}: abacus gives {from_abacus}, closed form {closed}"))?;
    if k >= 2 {
        let grown = lift(append_step(&lift(kappa_bar_abacus(k - 1))?))?;
        ensure(grown == abacus, || format!("k={k}: append step disagrees"))?;
    }
    Ok(())
}

fn check_remarks(k: usize) -> Check {
    let pair = lift(kappa_pair(k))?;
    let t = 2 * k;
    ensure(lift(t_core(&pair, t))?.is_empty(), || format!("k={k}: {t}-core not empty"))?;
    ensure(lift(t_quotient(&pair, t))? == pair_quotient(k), || format!("k={k}: {t}-quotient is not the staircase sequence"))?;
    let weighted = t * (0..k).map(|j| 2 * triangular(j)).sum::<usize>();
    ensure(pair.size() == weighted, || format!("k={k}: size {} != {weighted}", pair.size()))
}

fn check_bijection(k: usize) -> Check {
    let map = lift(build_bijection(k))?;
    let report = verify_bijection(&map, k);
    ensure(report.ok(), || format!("k={k}: {report:?}"))?;
    let expected = [
        (k - 1) * triangular(k - 1),
        (1..k).map(triangular).sum(),
        triple_size_formula(k - 1),
    ];
    ensure(report.region_counts == expected, || format!("k={k}: region counts {:?} != {expected:?}", report.region_counts))
}

fn check_maximal(k: usize) -> Check {
    let pair = lift(kappa_pair(k))?;
    if k == 1 {
        return ensure(pair.is_empty() && lift(kappa_triple(1))?.is_empty(), || "k=1: cores not empty".into());
    }
    ensure(pair == lift(maximal_core(2 * k - 1, 2 * k + 1))?, || format!("k={k}: pair core differs from gap construction"))?;
    if k > BRUTE_FORCE_K {
        return Ok(());
    }
    let cfg = EnumConfig { execution: Execution::Sequential, ..Default::default() };
    let pair_spec = lift(CoreFamilySpec::new([2 * k - 1, 2 * k + 1]))?;
    let pairs = EnumerationReport::new(&pair_spec, lift(enumerate_cores(&pair_spec, &cfg))?);
    let pair_max: Vec<&Partition> = pairs.maximal().collect();
    ensure(pair_max == vec![&pair], || format!("k={k}: brute-force pair maxima {pair_max:?}"))?;
    ensure(pairs.cores.iter().all(|c| pair.contains(c)), || format!("k={k}: pair core does not contain all cores"))?;

    let triple = lift(kappa_triple(k))?;
    let triple_spec = lift(CoreFamilySpec::new([2 * k - 1, 2 * k, 2 * k + 1]))?;
    let triples = EnumerationReport::new(&triple_spec, lift(enumerate_cores(&triple_spec, &cfg))?);
    let triple_max: Vec<&Partition> = triples.maximal().collect();
    ensure(triples.max_size == triple.size(), || format!("k={k}: brute-force triple max size {}", triples.max_size))?;
    ensure(
        triple_max.len() == 2 && triple_max.contains(&&triple) && triple_max.contains(&&triple.conjugate()),
        || format!("k={k}: triple maxima {triple_max:?}"),
    )?;
    ensure(triple.len() > triple.conjugate().len(), || format!("k={k}: triple core is not the one with more parts"))
}

fn eq1_checks(seed: u64, exec: Execution) -> Vec<Check> {
    let sampler = PartitionSampler::new(EQ1_MAX_SIZE);
    let mut rng = seeded_rng(seed);
    use rand::Rng;
    let cases: Vec<(Partition, usize)> = (0..EQ1_TRIALS)
        .map(|_| (sampler.sample_up_to(&mut rng, EQ1_MAX_SIZE), rng.gen_range(2..=12)))
        .collect();
    let mut checks = exec.map(&cases, |(lam, t)| check_eq1(lam, *t));

    let uniq: Vec<(Partition, usize, u64)> = (0..UNIQUENESS_TRIALS)
        .map(|_| (sampler.sample_up_to(&mut rng, UNIQUENESS_MAX_SIZE), rng.gen_range(2..=9), rng.gen()))
        .collect();
    checks.extend(exec.map(&uniq, |(lam, t, s)| check_core_uniqueness(lam, *t, *s)));
    checks
}

pub fn check_eq1(lam: &Partition, t: usize) -> Check {
    let core = lift(t_core(lam, t))?;
    let quotient = lift(t_quotient(lam, t))?;
    let weighted = core.size() + t * quotient.iter().map(Partition::size).sum::<usize>();
    ensure(weighted == lam.size(), || format!("{lam} t={t}: weighted size {weighted}"))?;
    let back = lift(reconstruct(&core, &quotient, t))?;
    ensure(&back == lam, || format!("{lam} t={t}: reconstructed {back}"))
}

pub fn check_core_uniqueness(lam: &Partition, t: usize, seed: u64) -> Check {
    let core = lift(t_core(lam, t))?;
    let mut rng = seeded_rng(seed);
    for order in 0..UNIQUENESS_ORDERS {
        let stripped = strip_random_hooks(&mut rng, lam, t);
        ensure(stripped == core, || format!("{lam} t={t}: order {order} ends at {stripped}, abacus gives {core}"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = SweepConfig { k_max: 5, seed: 3, execution: Execution::default() };
        for suite in [Suite::Theorem3, Suite::Theorem6, Suite::Remarks, Suite::Bijection] {
            let out = run(suite, &cfg).unwrap();
            assert!(out.ok(), "{out} {:?}", out.failures);
            assert_eq!(out.total, 5);
        }
        assert_eq!(run(Suite::Theorem3, &cfg).unwrap().to_string(), "theorem3: 5/5 PASS");
    }

    #[test]
    fn zero_k_max_is_rejected() {
        let cfg = SweepConfig { k_max: 0, seed: 3, execution: Execution::Sequential };
        assert!(run(Suite::Theorem3, &cfg).is_err());
    }
}
