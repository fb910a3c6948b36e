// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
//
// GBENT_ACCEPTANCE_SAMPLES=<k> replaces the exhaustive 3-variable sweep by k seeded samples.

use std::time::{Duration, Instant};

use octal_gbent::classify::is_gbent_direct;
use octal_gbent::construct::{
    bent_functions, build_one_var, build_two_var_signed, find_twisted_triple_exhaustive,
};
use octal_gbent::correlation::gbent_by_autocorr;
use octal_gbent::function::{BooleanFunction, OctalFunction};
use octal_gbent::random::{random_boolean, random_octal, seeded};
use octal_gbent::sweep::{enumerate, identity_suite, octal_function_at, EnumerateSummary, SweepConfig};
use octal_gbent::transform::{component_functions, component_wht, COMPONENT_WEIGHTS};
use octal_gbent::{gwht_fast, gwht_naive, is_bent, wht_fast, wht_naive, CycZ8, Epsilon, Kind};
use rand::Rng;

const GB2_BUDGET: Duration = Duration::from_secs(5);
const GB3_BUDGET: Duration = Duration::from_secs(30 * 60);
const FALLBACK_SEED: u64 = 0x0067_6265_6e74;
const FOUR_SPECTRA_TRIALS: usize = 100;
const IDENTITY_TRIALS: usize = 100;
const SUBSET_TRIALS: usize = 50;
const FAST_NAIVE_TRIALS: usize = 100;
const LARGE_WHT_VARS: u32 = 20;
const LARGE_WHT_BUDGET: Duration = Duration::from_secs(1);
const CYCLOTOMIC_PAIRS: usize = 10_000;
const CYCLOTOMIC_COEFF: i64 = 64;
const FLOAT_TOL: f64 = 1e-9;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn sweeps() -> (EnumerateSummary, Duration, EnumerateSummary, Duration) {
    let t = Instant::now();
    let two = enumerate(&SweepConfig::exhaustive(2)).unwrap();
    let t2 = t.elapsed();
    let cfg = match std::env::var("GBENT_ACCEPTANCE_SAMPLES").ok().and_then(|s| s.parse().ok()) {
        Some(k) => SweepConfig::random(3, k, FALLBACK_SEED),
        None => SweepConfig::exhaustive(3),
    };
    let t = Instant::now();
    let three = enumerate(&cfg).unwrap();
    (two, t2, three, t.elapsed())
}

fn sweep_line(s: &EnumerateSummary, took: Duration) -> String {
    format!(
        "n={} {:?}: agree {}/{}, gbent {} direct vs {} characterized, first disagreement {:?} ({}), {:.1?}",
        s.n,
        s.mode,
        s.agree,
        s.examined,
        s.gbent_direct,
        s.gbent_characterized,
        s.first_disagreement,
        s.first_disagreement_function.as_deref().unwrap_or("-"),
        took
    )
}

fn criterion_1(two: &EnumerateSummary, t2: Duration, three: &EnumerateSummary, t3: Duration) -> Outcome {
    let passed = two.routes_agree() && three.routes_agree() && t2 < GB2_BUDGET && t3 < GB3_BUDGET;
    outcome(passed, format!("{}; {}", sweep_line(two, t2), sweep_line(three, t3)))
}

fn criterion_2(two: &EnumerateSummary, three: &EnumerateSummary) -> Outcome {
    let violations = two.tuple_violations + three.tuple_violations;
    outcome(
        violations == 0,
        format!(
            "{} gbent functions checked, {violations} tuple violations",
            two.gbent_direct + three.gbent_direct
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = seeded(3);
    let mut bad = 0;
    for n in 1..=6 {
        for _ in 0..FOUR_SPECTRA_TRIALS {
            let f = random_octal(n, &mut rng).unwrap();
            let spectra = component_functions(&f).map(|g| wht_fast(&g));
            let direct = gwht_naive(&f);
            for u in 0..f.len() {
                let combo: CycZ8 = COMPONENT_WEIGHTS.iter().zip(&spectra).map(|(a, s)| a.scale(s[u])).sum();
                bad += usize::from(combo != direct[u].scale(4));
            }
        }
    }
    outcome(bad == 0, format!("{} functions over n=1..6, {bad} mismatching points", 6 * FOUR_SPECTRA_TRIALS))
}

fn criterion_4() -> Outcome {
    let mut rng = seeded(4);
    let mut failures = Vec::new();
    let mut runs = 0;
    for n in 1..=8 {
        for _ in 0..IDENTITY_TRIALS {
            let f = random_octal(n, &mut rng).unwrap();
            let g = random_octal(n, &mut rng).unwrap();
            let report = identity_suite(&f, &g).unwrap();
            runs += 1;
            failures.extend(report.failures().map(|c| format!("{}@n={n}", c.name)));
        }
    }
    let mut autocorr_bad = 0;
    for k in 0..4096 {
        let f = octal_function_at(2, k);
        autocorr_bad += usize::from(gbent_by_autocorr(&f) != is_gbent_direct(&f).is_gbent());
    }
    outcome(
        failures.is_empty() && autocorr_bad == 0,
        format!(
            "{runs} random pairs over n=1..8, failures {:?}; delta-autocorrelation over GB_2^8: {autocorr_bad} mismatches",
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn q_valued(f: &OctalFunction, q: u32) -> OctalFunction {
    let h = q.trailing_zeros() as usize;
    OctalFunction::from_fn_mod8(f.n(), |x| {
        let v: i64 = f.planes()[..h].iter().enumerate().map(|(i, p)| i64::from(p.get(x)) << i).sum();
        v * i64::from(8 / q)
    })
    .unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = seeded(5);
    let mut bad = 0;
    for n in 1..=6 {
        for _ in 0..SUBSET_TRIALS {
            let f = random_octal(n, &mut rng).unwrap();
            for q in [2u32, 4, 8] {
                let h = q.trailing_zeros() as usize;
                let direct = gwht_naive(&q_valued(&f, q));
                for u in 0..f.len() {
                    bad += usize::from(component_wht(&f.planes()[..h], q, u).unwrap() != direct[u]);
                }
            }
        }
    }
    outcome(bad == 0, format!("{} functions x q in {{2,4,8}}, {bad} mismatching points", 6 * SUBSET_TRIALS))
}

fn criterion_6() -> Outcome {
    // (a) ε = -1, a = b affine, c bent, base n in {2, 4}
    let (mut minus_gbent, mut plus_gbent, mut cases) = (0, 0, 0);
    for n in [2u32, 4] {
        let cs = bent_functions(n).unwrap();
        let step = if n == 2 { 1 } else { 28 };
        for c in cs.iter().step_by(step) {
            for u in 0..1usize << n {
                for k in [false, true] {
                    let a = BooleanFunction::linear(n, u, k).unwrap();
                    cases += 1;
                    let gb = |e| is_gbent_direct(&build_two_var_signed(&a, &a, c, e).unwrap()).is_gbent();
                    minus_gbent += usize::from(gb(Epsilon::Minus));
                    plus_gbent += usize::from(gb(Epsilon::Plus));
                }
            }
        }
    }
    let a_ok = minus_gbent == cases;

    // (b) full and plain one-variable variants as biconditionals over all pairs on two variables
    let all: Vec<_> = (0..16).map(|t| BooleanFunction::from_u64(2, t).unwrap()).collect();
    let bent = |f: &BooleanFunction| is_bent(f).unwrap();
    let mut b_bad = 0;
    for a in &all {
        for c in &all {
            for e in [Epsilon::Plus, Epsilon::Minus] {
                let full = is_gbent_direct(&build_one_var(Kind::OneVarFull, a, c, e).unwrap()).is_gbent();
                let plain = is_gbent_direct(&build_one_var(Kind::OneVarPlain, a, c, e).unwrap()).is_gbent();
                b_bad += usize::from(full != (bent(a) && bent(c)));
                b_bad += usize::from(plain != (bent(c) && bent(&a.xor(c).unwrap())));
            }
        }
    }

    // (c) every triple found on two variables gives a gbent output
    let search = find_twisted_triple_exhaustive(2).unwrap();
    let c_ok = search.triple.as_ref().is_none_or(|[a, b, c]| {
        is_gbent_direct(&octal_gbent::construct::build_two_var_twisted(a, b, c).unwrap()).is_gbent()
    });

    outcome(
        a_ok && b_bad == 0 && c_ok,
        format!(
            "(a) ε=-1: {minus_gbent}/{cases} gbent (ε=+1: {plus_gbent}/{cases}); (b) {b_bad} biconditional failures over 512 cases; \
             (c) triple found: {}, examined {}, all-bent misses {}",
            search.triple.is_some(),
            search.examined,
            search.near_misses
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = seeded(7);
    let mut bad = 0;
    for n in 1..=8 {
        for _ in 0..FAST_NAIVE_TRIALS {
            let f = random_boolean(n, &mut rng).unwrap();
            bad += usize::from(wht_fast(&f) != wht_naive(&f));
            let g = random_octal(n, &mut rng).unwrap();
            bad += usize::from(gwht_fast(&g) != gwht_naive(&g));
        }
    }
    let big = random_boolean(LARGE_WHT_VARS, &mut rng).unwrap();
    let t = Instant::now();
    let s = wht_fast(&big);
    let took = t.elapsed();
    let parseval = s.parseval_sum() == 1i64 << (2 * LARGE_WHT_VARS);
    outcome(
        bad == 0 && parseval && took < LARGE_WHT_BUDGET,
        format!("{bad} fast/naive mismatches over n=1..8; n=20 transform {took:.1?} (Parseval {parseval})"),
    )
}

fn random_cyc<R: Rng>(rng: &mut R) -> CycZ8 {
    CycZ8(std::array::from_fn(|_| rng.gen_range(-CYCLOTOMIC_COEFF..=CYCLOTOMIC_COEFF)))
}

fn criterion_8() -> Outcome {
    let mut rng = seeded(8);
    let (mut algebra_bad, mut worst) = (0, 0f64);
    for _ in 0..CYCLOTOMIC_PAIRS {
        let (x, y) = (random_cyc(&mut rng), random_cyc(&mut rng));
        let xy = x * y;
        algebra_bad += usize::from(xy.norm_sq() != x.norm_sq() * y.norm_sq());
        algebra_bad += usize::from(xy.conj() != x.conj() * y.conj());
        algebra_bad += usize::from(x.conj().conj() != x);
        algebra_bad += usize::from(x.conj().norm_sq() != x.norm_sq());
        algebra_bad += usize::from(x * x.conj() != x.norm_sq().to_cyc());
        for z in [x, y, xy] {
            let (re, im) = z.to_complex();
            worst = worst.max((z.norm_sq().to_f64() - (re * re + im * im)).abs() / (1.0 + re * re + im * im));
        }
        let ((a, b), (c, d)) = (x.to_complex(), y.to_complex());
        let (re, im) = xy.to_complex();
        let scale = 1.0 + re.abs() + im.abs();
        worst = worst.max(((a * c - b * d) - re).abs() / scale).max(((a * d + b * c) - im).abs() / scale);
    }
    outcome(
        algebra_bad == 0 && worst <= FLOAT_TOL,
        format!("{CYCLOTOMIC_PAIRS} pairs, {algebra_bad} exact failures, worst relative float deviation {worst:.2e}"),
    )
}

fn main() {
    let (two, t2, three, t3) = sweeps();
    let results = [
        ("1 characterization equivalence on GB_2^8 and GB_3^8", criterion_1(&two, t2, &three, t3)),
        ("2 admissible tuples for every gbent function", criterion_2(&two, &three)),
        ("3 four-spectrum identity", criterion_3()),
        ("4 generalized transform and correlation identities", criterion_4()),
        ("5 bit-plane subset formula for q in {2,4,8}", criterion_5()),
        ("6 constructions", criterion_6()),
        ("7 transform correctness and speed", criterion_7()),
        ("8 cyclotomic soundness", criterion_8()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        println!("{} criterion {name}: {}", if r.passed { "PASS" } else { "FAIL" }, r.detail);
        failed += usize::from(!r.passed);
    }
    println!(
        "note: admissible-tuple route agrees with the direct route on {}/{} (n=2) and {}/{} (n=3)",
        two.tuple_agree, two.examined, three.tuple_agree, three.examined
    );
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
