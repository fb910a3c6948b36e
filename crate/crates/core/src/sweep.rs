//! Exhaustive and randomized sweeps over octal function spaces, comparing the gbent routes, and
//! randomized verification of the transform and correlation identities.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{characterize_spectra, component_spectra, is_gbent_direct, tuples_spectra};
use crate::correlation::{corr_identity_check, gbent_by_autocorr, IdentityCheck, IdentityReport};
use crate::cyclotomic::QuadNorm;
use crate::error::{Error, Result};
use crate::function::OctalFunction;
use crate::random::{random_octal, seeded};
use crate::transform::{gwht_butterfly, gwht_fast, gwht_naive, inverse_gwht, inverse_wht, wht_fast, wht_naive};

/// Samples per independently seeded block; fixed so results do not depend on the worker count.
const BLOCK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: u32,
    pub mode: Mode,
    /// Random mode only.
    pub samples: u64,
    /// `None` uses every available core.
    pub workers: Option<usize>,
    pub seed: u64,
    /// Where to write gbent truth tables as CSV, if anywhere.
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    pub fn exhaustive(n: u32) -> Self {
        Self {
            n,
            mode: Mode::Exhaustive,
            samples: 1,
            workers: None,
            seed: 0,
            output: None,
        }
    }

    pub fn random(n: u32, samples: u64, seed: u64) -> Self {
        Self {
            n,
            mode: Mode::Random,
            samples,
            workers: None,
            seed,
            output: None,
        }
    }

    /// Number of functions the sweep visits.
    pub fn size(&self) -> u64 {
        match self.mode {
            Mode::Exhaustive => 1u64 << (3 << self.n),
            Mode::Random => self.samples,
        }
    }

    pub fn validate(&self) -> Result<()> {
        crate::function::check_arity(self.n)?;
        match self.mode {
            // 8^(2^n) <= 2^32
            Mode::Exhaustive if 3u64 << self.n > 32 => Err(Error::InfeasibleSweep(format!(
                "exhaustive sweep over 8^(2^{}) functions",
                self.n
            ))),
            Mode::Random if self.samples == 0 => {
                Err(Error::InfeasibleSweep("sample count must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }
}

/// The `index`-th octal function on `n` variables: value at `x` is octal digit `x` of `index`.
pub fn octal_function_at(n: u32, index: u64) -> OctalFunction {
    OctalFunction::from_fn_mod8(n, |x| (index >> (3 * x) & 7) as i64).expect("arity validated")
}

/// Per-function outcome of all three gbent tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RouteVerdicts {
    pub direct: bool,
    pub characterized: bool,
    pub tuples: bool,
}

pub fn route_verdicts(f: &OctalFunction) -> RouteVerdicts {
    let cs = component_spectra(f);
    RouteVerdicts {
        direct: is_gbent_direct(f).is_gbent(),
        characterized: characterize_spectra(&cs).is_gbent(),
        tuples: tuples_spectra(&cs).is_gbent(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerateSummary {
    pub n: u32,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub examined: u64,
    pub gbent_direct: u64,
    pub gbent_characterized: u64,
    /// Functions on which the direct and characterization routes agree.
    pub agree: u64,
    /// Characterization says gbent, direct says not.
    pub characterized_only: u64,
    /// Direct says gbent, characterization says not.
    pub direct_only: u64,
    /// Sweep position of the first disagreement.
    pub first_disagreement: Option<u64>,
    pub first_disagreement_function: Option<String>,
    /// Functions on which the direct and admissible-tuple routes agree.
    pub tuple_agree: u64,
    /// Gbent functions (direct route) whose component tuples are not all admissible.
    pub tuple_violations: u64,
    #[serde(skip)]
    pub gbent_functions: Vec<(u64, String)>,
}

impl EnumerateSummary {
    fn empty(cfg: &SweepConfig) -> Self {
        Self {
            n: cfg.n,
            mode: cfg.mode,
            seed: (cfg.mode == Mode::Random).then_some(cfg.seed),
            examined: 0,
            gbent_direct: 0,
            gbent_characterized: 0,
            agree: 0,
            characterized_only: 0,
            direct_only: 0,
            first_disagreement: None,
            first_disagreement_function: None,
            tuple_agree: 0,
            tuple_violations: 0,
            gbent_functions: Vec::new(),
        }
    }

    /// Direct and characterization routes agree on every visited function.
    pub fn routes_agree(&self) -> bool {
        self.agree == self.examined
    }

    pub fn tuple_route_agrees(&self) -> bool {
        self.tuple_agree == self.examined
    }

    fn record(&mut self, pos: u64, f: &OctalFunction, v: RouteVerdicts, keep: bool) {
        self.examined += 1;
        self.gbent_direct += u64::from(v.direct);
        self.gbent_characterized += u64::from(v.characterized);
        if v.direct == v.characterized {
            self.agree += 1;
        } else {
            if v.characterized {
                self.characterized_only += 1;
            } else {
                self.direct_only += 1;
            }
            if self.first_disagreement.is_none_or(|p| pos < p) {
                self.first_disagreement = Some(pos);
                self.first_disagreement_function = Some(f.to_string());
            }
        }
        self.tuple_agree += u64::from(v.direct == v.tuples);
        self.tuple_violations += u64::from(v.direct && !v.tuples);
        if keep && v.direct {
            self.gbent_functions.push((pos, f.to_string()));
        }
    }

    /// Order-independent merge.
    fn merge(mut self, other: Self) -> Self {
        self.examined += other.examined;
        self.gbent_direct += other.gbent_direct;
        self.gbent_characterized += other.gbent_characterized;
        self.agree += other.agree;
        self.characterized_only += other.characterized_only;
        self.direct_only += other.direct_only;
        if let Some(p) = other.first_disagreement {
            if self.first_disagreement.is_none_or(|q| p < q) {
                self.first_disagreement = Some(p);
                self.first_disagreement_function = other.first_disagreement_function;
            }
        }
        self.tuple_agree += other.tuple_agree;
        self.tuple_violations += other.tuple_violations;
        self.gbent_functions.extend(other.gbent_functions);
        self
    }
}

fn in_pool<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map(|pool| pool.install(job))
            .map_err(|e| Error::InfeasibleSweep(e.to_string())),
    }
}

/// Runs both gbent routes (and the admissible-tuple route) over the configured function space.
///
/// Exhaustive mode visits functions in index order; random mode draws block `k` of samples from
/// the seed `seed + k`, so results depend only on the seed.
pub fn enumerate(cfg: &SweepConfig) -> Result<EnumerateSummary> {
    cfg.validate()?;
    let keep = cfg.output.is_some();
    let total = cfg.size();
    let blocks = total.div_ceil(BLOCK);
    let mut summary = in_pool(cfg.workers, || {
        (0..blocks)
            .into_par_iter()
            .map(|block| {
                let mut acc = EnumerateSummary::empty(cfg);
                let start = block * BLOCK;
                let end = (start + BLOCK).min(total);
                match cfg.mode {
                    Mode::Exhaustive => {
                        for idx in start..end {
                            let f = octal_function_at(cfg.n, idx);
                            acc.record(idx, &f, route_verdicts(&f), keep);
                        }
                    }
                    Mode::Random => {
                        let mut rng = seeded(cfg.seed.wrapping_add(block));
                        for pos in start..end {
                            let f = random_octal(cfg.n, &mut rng).expect("arity validated");
                            acc.record(pos, &f, route_verdicts(&f), keep);
                        }
                    }
                }
                acc
            })
            .reduce(|| EnumerateSummary::empty(cfg), EnumerateSummary::merge)
    })?;
    summary.gbent_functions.sort_unstable();
    if let Some(path) = &cfg.output {
        write_csv(path, &summary.gbent_functions).map_err(|e| Error::InfeasibleSweep(e.to_string()))?;
    }
    Ok(summary)
}

fn write_csv(path: &PathBuf, rows: &[(u64, String)]) -> std::io::Result<()> {
    use std::io::Write;
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(w, "position,function")?;
    for (pos, f) in rows {
        writeln!(w, "{pos},{f}")?;
    }
    w.flush()
}

/// Every identity this crate can check on one function (and a partner for the pairwise ones).
pub fn identity_suite(f: &OctalFunction, g: &OctalFunction) -> Result<IdentityReport> {
    let n = f.n();
    let full = 1i64 << (2 * n);
    let h = gwht_butterfly(f);
    let a0 = f.a0();
    let w = wht_fast(a0);

    let mut checks = vec![
        IdentityCheck::flag("inverse-gwht", inverse_gwht(&h).as_ref() == Ok(f)),
        IdentityCheck::flag("inverse-wht", inverse_wht(&w).as_ref() == Ok(a0)),
        IdentityCheck::flag("parseval", w.parseval_sum() == full),
        IdentityCheck::flag("generalized-parseval", h.parseval_sum() == QuadNorm::from_int(full)),
        IdentityCheck::flag(
            "gbent-iff-delta-autocorrelation",
            gbent_by_autocorr(f) == is_gbent_direct(f).is_gbent(),
        ),
        IdentityCheck::flag("gwht-fast-matches-butterfly", gwht_fast(f) == h),
    ];
    if n <= 10 {
        checks.push(IdentityCheck::flag("gwht-naive-matches-butterfly", gwht_naive(f) == h));
        checks.push(IdentityCheck::flag("wht-naive-matches-fast", wht_naive(a0) == w));
    }
    checks.extend(corr_identity_check(f, g)?.checks);
    Ok(IdentityReport { checks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityTally {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub trials: u64,
    pub seed: u64,
    pub identities: Vec<IdentityTally>,
    pub passed: bool,
}

/// Largest arity accepted by [`verify_identities`]; correlations are summed directly.
pub const VERIFY_MAX_VARS: u32 = 12;

/// Runs [`identity_suite`] on `trials` random pairs drawn from `seed`.
pub fn verify_identities(n: u32, trials: u64, seed: u64) -> Result<VerifyReport> {
    if n > VERIFY_MAX_VARS {
        return Err(Error::InfeasibleSweep(format!(
            "identity verification is limited to {VERIFY_MAX_VARS} variables"
        )));
    }
    crate::function::check_arity(n)?;
    let mut rng = seeded(seed);
    let mut tallies: Vec<IdentityTally> = Vec::new();
    for _ in 0..trials {
        let f = random_octal(n, &mut rng)?;
        let g = random_octal(n, &mut rng)?;
        tally(&mut tallies, &identity_suite(&f, &g)?);
    }
    Ok(finish(n, trials, seed, tallies))
}

/// Runs [`identity_suite`] on explicit functions, each paired with itself.
pub fn verify_functions(fs: &[OctalFunction]) -> Result<VerifyReport> {
    let mut tallies = Vec::new();
    for f in fs {
        tally(&mut tallies, &identity_suite(f, f)?);
    }
    let n = fs.first().map_or(0, OctalFunction::n);
    Ok(finish(n, fs.len() as u64, 0, tallies))
}

fn tally(tallies: &mut Vec<IdentityTally>, report: &IdentityReport) {
    for c in &report.checks {
        let t = match tallies.iter_mut().find(|t| t.name == c.name) {
            Some(t) => t,
            None => {
                tallies.push(IdentityTally {
                    name: c.name,
                    passed: 0,
                    failed: 0,
                });
                tallies.last_mut().unwrap()
            }
        };
        if c.passed {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }
}

fn finish(n: u32, trials: u64, seed: u64, identities: Vec<IdentityTally>) -> VerifyReport {
    let passed = identities.iter().all(|t| t.failed == 0);
    VerifyReport {
        n,
        trials,
        seed,
        identities,
        passed,
    }
}
