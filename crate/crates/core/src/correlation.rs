//! Crosscorrelation and autocorrelation of Boolean and octal functions, and checkers for the
//! identities tying them to the spectra.

use serde::Serialize;

use crate::cyclotomic::CycZ8;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, OctalFunction};
use crate::transform::{fwht_in_place, gwht_butterfly, wht_fast};

/// Scale factor relating unnormalized spectra to correlations.
///
/// Each unnormalized transform carries a factor `2^(n/2)`, so a product of two of them carries
/// `2^n`. With `C` a correlation vector and `S_f`, `S_g` unnormalized spectra:
///
/// * `sum_u C(u) (-1)^(u.x) = S_f(x) conj(S_g(x))` (no factor), and
/// * `2^n C(u) = sum_x S_f(x) conj(S_g(x)) (-1)^(u.x)`.
///
/// Every checker in this module uses exactly these two forms.
pub fn spectral_scale(n: u32) -> i64 {
    1i64 << n
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrelationVector<T> {
    n: u32,
    #[serde(rename = "correlation")]
    values: Vec<T>,
}

impl<T> CorrelationVector<T> {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

impl<T> std::ops::Index<usize> for CorrelationVector<T> {
    type Output = T;
    fn index(&self, z: usize) -> &T {
        &self.values[z]
    }
}

fn same_arity(l: u32, r: u32) -> Result<()> {
    if l == r {
        Ok(())
    } else {
        Err(Error::ArityMismatch { left: l, right: r })
    }
}

/// `C_{f,g}(z) = sum_x (-1)^(f(x) xor g(x xor z))`, by direct summation.
pub fn crosscorr_bool(f: &BooleanFunction, g: &BooleanFunction) -> Result<CorrelationVector<i64>> {
    same_arity(f.n(), g.n())?;
    let len = f.len();
    let values = (0..len)
        .map(|z| (0..len).map(|x| if f.get(x) ^ g.get(x ^ z) { -1 } else { 1 }).sum())
        .collect();
    Ok(CorrelationVector { n: f.n(), values })
}

pub fn autocorr_bool(f: &BooleanFunction) -> CorrelationVector<i64> {
    crosscorr_bool(f, f).expect("same function")
}

/// `C_{f,g}(z) = sum_x ζ^(f(x) - g(x xor z))`, by direct summation.
pub fn crosscorr_gen(f: &OctalFunction, g: &OctalFunction) -> Result<CorrelationVector<CycZ8>> {
    same_arity(f.n(), g.n())?;
    let len = f.len();
    let fv = f.values();
    let gv = g.values();
    let values = (0..len)
        .map(|z| {
            (0..len)
                .map(|x| CycZ8::zeta_pow(i64::from(fv[x]) - i64::from(gv[x ^ z])))
                .sum()
        })
        .collect();
    Ok(CorrelationVector { n: f.n(), values })
}

pub fn autocorr_gen(f: &OctalFunction) -> CorrelationVector<CycZ8> {
    crosscorr_gen(f, f).expect("same function")
}

/// Outcome of a single identity, with the first index where the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    fn compare<T: PartialEq>(name: &'static str, lhs: &[T], rhs: &[T]) -> Self {
        let first_mismatch = lhs.iter().zip(rhs).position(|(l, r)| l != r);
        Self {
            name,
            passed: first_mismatch.is_none() && lhs.len() == rhs.len(),
            first_mismatch,
        }
    }

    pub(crate) fn flag(name: &'static str, passed: bool) -> Self {
        Self {
            name,
            passed,
            first_mismatch: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks the correlation/spectrum duality for a pair of octal functions, plus conjugate
/// symmetry and the autocorrelation-from-norms form for `f`. Both sides of each identity are
/// computed independently: correlations by direct summation, spectra by butterfly.
pub fn corr_identity_check(f: &OctalFunction, g: &OctalFunction) -> Result<IdentityReport> {
    same_arity(f.n(), g.n())?;
    let scale = spectral_scale(f.n());
    let cfg = crosscorr_gen(f, g)?;
    let cgf = crosscorr_gen(g, f)?;
    let cff = autocorr_gen(f);
    let hf = gwht_butterfly(f);
    let hg = gwht_butterfly(g);

    let products: Vec<CycZ8> = hf
        .values()
        .iter()
        .zip(hg.values())
        .map(|(a, b)| *a * b.conj())
        .collect();

    let mut transformed_corr = cfg.values.clone();
    fwht_in_place(&mut transformed_corr);

    let mut corr_from_spectra = products.clone();
    fwht_in_place(&mut corr_from_spectra);
    let scaled_cfg: Vec<CycZ8> = cfg.values.iter().map(|c| c.scale(scale)).collect();

    let conj_cgf: Vec<CycZ8> = cgf.values.iter().map(CycZ8::conj).collect();

    let mut auto_from_norms: Vec<CycZ8> = hf.values().iter().map(|h| h.norm_sq().to_cyc()).collect();
    fwht_in_place(&mut auto_from_norms);
    let scaled_cff: Vec<CycZ8> = cff.values.iter().map(|c| c.scale(scale)).collect();

    Ok(IdentityReport {
        checks: vec![
            IdentityCheck::compare("transform-of-crosscorrelation", &transformed_corr, &products),
            IdentityCheck::compare("crosscorrelation-from-spectra", &scaled_cfg, &corr_from_spectra),
            IdentityCheck::compare("conjugate-symmetry", &cfg.values, &conj_cgf),
            IdentityCheck::compare("autocorrelation-from-norms", &scaled_cff, &auto_from_norms),
            IdentityCheck::flag("autocorrelation-real", cff.values.iter().all(CycZ8::is_real)),
        ],
    })
}

/// Boolean counterpart of [`corr_identity_check`].
pub fn bool_corr_identity_check(f: &BooleanFunction, g: &BooleanFunction) -> Result<IdentityReport> {
    same_arity(f.n(), g.n())?;
    let scale = spectral_scale(f.n());
    let cfg = crosscorr_bool(f, g)?;
    let cff = autocorr_bool(f);
    let wf = wht_fast(f);
    let wg = wht_fast(g);

    let products: Vec<i64> = wf.values().iter().zip(wg.values()).map(|(a, b)| a * b).collect();
    let mut transformed_corr = cfg.values.clone();
    fwht_in_place(&mut transformed_corr);

    let mut corr_from_spectra = products.clone();
    fwht_in_place(&mut corr_from_spectra);
    let scaled_cfg: Vec<i64> = cfg.values.iter().map(|c| c * scale).collect();

    let mut auto_from_squares: Vec<i64> = wf.values().iter().map(|w| w * w).collect();
    fwht_in_place(&mut auto_from_squares);
    let scaled_cff: Vec<i64> = cff.values.iter().map(|c| c * scale).collect();

    Ok(IdentityReport {
        checks: vec![
            IdentityCheck::compare("transform-of-crosscorrelation", &transformed_corr, &products),
            IdentityCheck::compare("crosscorrelation-from-spectra", &scaled_cfg, &corr_from_spectra),
            IdentityCheck::compare("autocorrelation-from-squares", &scaled_cff, &auto_from_squares),
        ],
    })
}

/// True iff the autocorrelation is `2^n` at `0` and vanishes elsewhere.
pub fn gbent_by_autocorr(f: &OctalFunction) -> bool {
    let c = autocorr_gen(f);
    c.values[0] == CycZ8::from_int(spectral_scale(f.n())) && c.values[1..].iter().all(CycZ8::is_zero)
}

/// Boolean analogue of [`gbent_by_autocorr`]: true iff `C_f(z) = 0` for all `z != 0`.
pub fn bent_by_autocorr(f: &BooleanFunction) -> bool {
    autocorr_bool(f).values[1..].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BooleanFunction {
        s.parse().unwrap()
    }

    fn o(s: &str) -> OctalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn crosscorr_bool_examples() {
        let zero = b("0000");
        assert_eq!(crosscorr_bool(&zero, &zero).unwrap().values(), &[4, 4, 4, 4]);
        let and = b("0001");
        let c = autocorr_bool(&and);
        assert_eq!(c[0], 4);
        assert!(c.values()[1..].iter().all(|&v| v == 0));
        assert!(crosscorr_bool(&and, &b("01")).is_err());
    }

    #[test]
    fn crosscorr_gen_examples() {
        let f = o("35170246");
        assert_eq!(autocorr_gen(&f)[0], CycZ8::from_int(8));
        assert_eq!(autocorr_gen(&o("02"))[1], CycZ8::ZERO);
        assert_eq!(crosscorr_gen(&o("00"), &o("04")).unwrap()[0], CycZ8::ZERO);
        assert!(crosscorr_gen(&o("00"), &o("0000")).is_err());
    }

    #[test]
    fn identity_check_examples() {
        assert!(corr_identity_check(&o("35170246"), &o("70112354")).unwrap().passed());
        let f = o("1234567012345670");
        assert!(corr_identity_check(&f, &f).unwrap().passed());
        let zero = o("0000");
        let report = corr_identity_check(&zero, &zero).unwrap();
        assert!(report.passed());
        // C_0(z) = 4 everywhere; 2^n C = 16 everywhere; sum_x |H(x)|^2 (-1)^(u.x) with H = 4 δ
        assert_eq!(autocorr_gen(&zero).values(), &[CycZ8::from_int(4); 4]);
    }

    #[test]
    fn bool_identity_check_exhaustive_n2() {
        for s in 0..16u64 {
            for t in 0..16u64 {
                let f = BooleanFunction::from_u64(2, s).unwrap();
                let g = BooleanFunction::from_u64(2, t).unwrap();
                assert!(bool_corr_identity_check(&f, &g).unwrap().passed());
            }
        }
    }

    #[test]
    fn gbent_by_autocorr_examples() {
        assert!(gbent_by_autocorr(&o("02")));
        assert!(!gbent_by_autocorr(&o("0000")));
        assert!(!gbent_by_autocorr(&o("00")));
        assert!(gbent_by_autocorr(&o("0004")));
    }
}
