//! Exhaustive classification of initialized ACM bundles on `G/P_k`.
//!
//! An initialized ACM bundle satisfies `M <= dim G/P_k`: `T` has only `dim`
//! entries, so a longer run `1..=M` of integers cannot be covered. Every
//! entry of `T` is an affine form in the `a_i` with nonnegative coefficients,
//! so the candidates form a finite down-closed set of lattice points and are
//! walked in lexicographic order with budget pruning.

use num_integer::Integer;
use rayon::prelude::*;

use crate::bott;
use crate::fixtures::{Fixture, FixtureKind};
use crate::parabolic::{BundleSpec, Certificate, ParabolicData};
use crate::rootsys::{DynkinType, RootSystem, WeightCoeffs};
use crate::{Error, Rational, Result};

pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;
pub const DEFAULT_PAD: u32 = 2;

/// Entries of `T` scaled by a common denominator so that the budget test
/// `entry(a) <= dim` runs in integer arithmetic.
#[derive(Clone, Debug)]
struct ScaledForms {
    constants: Vec<i64>,
    /// `coeffs[root][node]`
    coeffs: Vec<Vec<i64>>,
    bound: i64,
}

impl ScaledForms {
    fn new(pd: &ParabolicData) -> Self {
        let denom = pd
            .roots()
            .iter()
            .flat_map(|r| std::iter::once(&r.form.constant).chain(&r.form.coeffs))
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let scale = |q: &Rational| (q * Rational::from_integer(denom)).to_integer();
        Self {
            constants: pd.roots().iter().map(|r| scale(&r.form.constant)).collect(),
            coeffs: pd
                .roots()
                .iter()
                .map(|r| r.form.coeffs.iter().map(scale).collect())
                .collect(),
            bound: pd.dim() as i64 * denom,
        }
    }

    fn within_budget(&self, a: &[i64]) -> bool {
        self.constants
            .iter()
            .zip(&self.coeffs)
            .all(|(c, row)| c + row.iter().zip(a).map(|(x, y)| x * y).sum::<i64>() <= self.bound)
    }
}

/// Lexicographic walk over `{a : a_k = 0, a_i >= 0, M(a) <= dim}`.
pub struct Candidates {
    dynkin: DynkinType,
    forms: ScaledForms,
    free: Vec<usize>,
    current: Vec<i64>,
    started: bool,
    done: bool,
}

impl Candidates {
    pub fn new(pd: &ParabolicData) -> Self {
        let rank = pd.root_system().rank();
        let forms = ScaledForms::new(pd);
        let current = vec![0; rank];
        let done = !forms.within_budget(&current);
        Self {
            dynkin: pd.root_system().dynkin(),
            forms,
            free: (0..rank).filter(|&i| i + 1 != pd.k()).collect(),
            current,
            started: false,
            done,
        }
    }

    fn advance(&mut self) -> bool {
        // Increment the last free coordinate that can grow, zeroing those after it.
        for pos in (0..self.free.len()).rev() {
            let i = self.free[pos];
            self.current[i] += 1;
            if self.forms.within_budget(&self.current) {
                return true;
            }
            self.current[i] = 0;
        }
        false
    }
}

impl Iterator for Candidates {
    type Item = WeightCoeffs;

    fn next(&mut self) -> Option<WeightCoeffs> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(WeightCoeffs::new(self.dynkin, self.current.clone()).expect("length matches rank"))
    }
}

/// Streams candidate weights after checking the size guard.
pub fn enumerate_candidates(
    pd: &ParabolicData,
    max_candidates: u64,
    force: bool,
) -> Result<Candidates> {
    let estimated = count_candidates(pd);
    if !force && estimated > u128::from(max_candidates) {
        return Err(Error::CandidateGuard {
            estimated,
            limit: max_candidates,
        });
    }
    Ok(Candidates::new(pd))
}

/// Number of candidates, counted without enumerating them.
///
/// With the affine form of `M` the candidate set is the lattice simplex
/// `sum w_i a_i <= dim - M(0)` over the free nodes, counted by a
/// coin-change style recurrence. Saturates at `u128::MAX`.
pub fn count_candidates(pd: &ParabolicData) -> u128 {
    let Some(form) = pd.m_form() else {
        return Candidates::new(pd).count() as u128;
    };
    let free: Vec<Rational> = form
        .coeffs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i + 1 != pd.k())
        .map(|(_, c)| *c)
        .collect();
    let budget = Rational::from_integer(pd.dim() as i64) - form.constant;
    if budget < Rational::from_integer(0) {
        return 0;
    }
    if free.iter().any(|w| *w <= Rational::from_integer(0)) {
        return u128::MAX;
    }
    let denom = free
        .iter()
        .chain(std::iter::once(&budget))
        .fold(1i64, |acc, q| acc.lcm(q.denom()));
    let scale = |q: &Rational| (q * Rational::from_integer(denom)).floor().to_integer() as usize;
    let cap = scale(&budget);
    let mut ways = vec![0u128; cap + 1];
    ways[0] = 1;
    for w in free.iter().map(scale) {
        for b in w..=cap {
            ways[b] = ways[b].saturating_add(ways[b - w]);
        }
    }
    ways.iter().fold(0u128, |acc, &x| acc.saturating_add(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// `None` selects the default: oracle on for rank <= 6.
    pub use_oracle: Option<bool>,
    pub pad: u32,
    pub max_candidates: u64,
    pub force: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            use_oracle: None,
            pad: DEFAULT_PAD,
            max_candidates: DEFAULT_MAX_CANDIDATES,
            force: false,
            workers: None,
        }
    }
}

impl ClassifyOptions {
    pub fn oracle_enabled(&self, rank: usize) -> bool {
        self.use_oracle.unwrap_or(rank <= 6)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub dynkin: DynkinType,
    pub k: usize,
    /// Sorted lexicographically by coefficients.
    pub acm_weights: Vec<WeightCoeffs>,
    pub candidates_scanned: usize,
    /// `dim G/P_k`, the bound on `M`.
    pub bound_used: usize,
    pub oracle_used: bool,
}

fn evaluate(
    pd: &ParabolicData,
    w: WeightCoeffs,
    oracle: bool,
    pad: u32,
) -> Result<Option<WeightCoeffs>> {
    let verdict = BundleSpec::new(pd, w.clone())?.is_acm();
    if oracle {
        let report = bott::acm_oracle(pd, &w, pad)?;
        if report.acm != verdict.acm {
            return Err(Error::Disagreement {
                weight: w.coeffs().to_vec(),
                criterion: verdict.acm,
                oracle: report.acm,
            });
        }
    }
    Ok(verdict.acm.then_some(w))
}

/// All initialized irreducible homogeneous ACM bundles on `G/P_k`, as
/// highest weights with `a_k = 0`.
pub fn classify_acm(pd: &ParabolicData, opts: &ClassifyOptions) -> Result<ClassificationResult> {
    let candidates: Vec<WeightCoeffs> =
        enumerate_candidates(pd, opts.max_candidates, opts.force)?.collect();
    let oracle = opts.oracle_enabled(pd.root_system().rank());

    let run = || -> Result<Vec<WeightCoeffs>> {
        let found: Vec<Option<WeightCoeffs>> = candidates
            .par_iter()
            .map(|w| evaluate(pd, w.clone(), oracle, opts.pad))
            .collect::<Result<_>>()?;
        Ok(found.into_iter().flatten().collect())
    };
    let mut acm_weights = match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run)?,
        None => run()?,
    };
    acm_weights.sort();
    acm_weights.dedup();

    Ok(ClassificationResult {
        dynkin: pd.root_system().dynkin(),
        k: pd.k(),
        acm_weights,
        candidates_scanned: candidates.len(),
        bound_used: pd.dim(),
        oracle_used: oracle,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    /// Expected but not produced (weights or failed checks).
    pub missing: Vec<String>,
    /// Produced but not expected.
    pub unexpected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub outcomes: Vec<FixtureOutcome>,
}

impl FixtureReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

fn fmt_weight(a: &[i64]) -> String {
    let parts: Vec<String> = a.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn check_fixture(fixture: &Fixture) -> Result<FixtureOutcome> {
    let dynkin: DynkinType = fixture.dynkin.parse()?;
    let pd = ParabolicData::new(RootSystem::new(dynkin), fixture.k)?;
    let mut missing = Vec::new();
    let mut unexpected = Vec::new();
    match &fixture.kind {
        FixtureKind::Classification { expected } => {
            let opts = ClassifyOptions {
                use_oracle: Some(true),
                ..ClassifyOptions::default()
            };
            let got: Vec<Vec<i64>> = classify_acm(&pd, &opts)?
                .acm_weights
                .iter()
                .map(|w| w.coeffs().to_vec())
                .collect();
            let mut want = expected.clone();
            want.sort();
            missing.extend(
                want.iter()
                    .filter(|w| !got.contains(w))
                    .map(|w| fmt_weight(w)),
            );
            unexpected.extend(
                got.iter()
                    .filter(|w| !want.contains(w))
                    .map(|w| fmt_weight(w)),
            );
        }
        FixtureKind::Profiles(cases) => {
            for case in cases {
                let tag = fmt_weight(&case.weight);
                let spec = BundleSpec::new(&pd, WeightCoeffs::new(dynkin, case.weight.clone())?)?;
                let profile = spec.t_profile()?;
                let cells = pd.display_matrix();
                let show = |q: Option<Rational>| q.map_or("-".to_string(), |q| q.to_string());
                for (i, row) in case.matrix.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        let want = cell.map(|(n, d)| Rational::new(n, d));
                        let got = cells
                            .and_then(|c| c[i][j])
                            .map(|idx| profile.entries[idx].value);
                        if want != got {
                            missing.push(format!(
                                "{tag} cell ({},{}) = {}",
                                i + 1,
                                j + 1,
                                show(want)
                            ));
                            unexpected.push(format!(
                                "{tag} cell ({},{}) = {}",
                                i + 1,
                                j + 1,
                                show(got)
                            ));
                        }
                    }
                }
                if profile.m_max != Rational::from_integer(case.m_max) {
                    missing.push(format!("{tag} M = {}", case.m_max));
                    unexpected.push(format!("{tag} M = {}", profile.m_max));
                }
                let verdict = spec.is_acm();
                if verdict.acm != case.acm {
                    missing.push(format!("{tag} acm = {}", case.acm));
                    unexpected.push(format!("{tag} acm = {}", verdict.acm));
                }
                if let Some(l) = case.missing_l {
                    if verdict.certificate != Certificate::Missing(l) {
                        missing.push(format!("{tag} least missing l = {l}"));
                        unexpected.push(format!("{tag} certificate {:?}", verdict.certificate));
                    }
                }
            }
        }
    }
    Ok(FixtureOutcome {
        name: fixture.name.clone(),
        passed: missing.is_empty() && unexpected.is_empty(),
        missing,
        unexpected,
    })
}

/// Runs every fixture and reports per-fixture pass/fail with a weight-level
/// diff. Errors raised while evaluating a fixture count as a failure.
pub fn verify(fixtures: &[Fixture]) -> FixtureReport {
    let outcomes = fixtures
        .iter()
        .map(|f| {
            check_fixture(f).unwrap_or_else(|e| FixtureOutcome {
                name: f.name.clone(),
                passed: false,
                missing: vec![],
                unexpected: vec![format!("error: {e}")],
            })
        })
        .collect();
    FixtureReport { outcomes }
}

/// Verifies the built-in reference data.
pub fn verify_fixtures() -> FixtureReport {
    verify(&crate::fixtures::builtin())
}
