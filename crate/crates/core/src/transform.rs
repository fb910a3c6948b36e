//! Classical and generalized Walsh-Hadamard transforms in unnormalized exact form.
//!
//! [`Spectrum`] entry `u` holds `sum_x (-1)^(f(x) xor u.x)`, which is `2^(n/2)` times the
//! normalized transform. [`GSpectrum`] entry `u` holds `sum_x ζ^f(x) (-1)^(u.x)` in `Z[ζ8]`.
//! Keeping the scale factor out makes every value an exact integer for both parities of `n`.

use std::ops::{Add, Sub};

use serde::Serialize;

use crate::cyclotomic::{CycZ8, QuadNorm};
use crate::error::{Error, Result};
use crate::function::{check_arity, dot, BooleanFunction, OctalFunction};

/// Unnormalized Walsh-Hadamard spectrum of a Boolean function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    n: u32,
    #[serde(rename = "spectrum")]
    values: Vec<i64>,
}

/// Unnormalized generalized Walsh-Hadamard spectrum of an octal function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GSpectrum {
    n: u32,
    #[serde(rename = "spectrum")]
    values: Vec<CycZ8>,
}

impl Spectrum {
    pub fn new(n: u32, values: Vec<i64>) -> Result<Self> {
        check_arity(n)?;
        if values.len() != 1 << n {
            return Err(Error::BadLength {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    /// `sum_u W(u)^2`, which is `2^(2n)` for every Boolean function.
    pub fn parseval_sum(&self) -> i64 {
        self.values.iter().map(|v| v * v).sum()
    }
}

impl std::ops::Index<usize> for Spectrum {
    type Output = i64;
    fn index(&self, u: usize) -> &i64 {
        &self.values[u]
    }
}

impl GSpectrum {
    pub fn new(n: u32, values: Vec<CycZ8>) -> Result<Self> {
        check_arity(n)?;
        if values.len() != 1 << n {
            return Err(Error::BadLength {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[CycZ8] {
        &self.values
    }

    /// `sum_u |H(u)|^2`, which is `2^(2n)` for every octal function.
    pub fn parseval_sum(&self) -> QuadNorm {
        self.values.iter().map(CycZ8::norm_sq).sum()
    }
}

impl std::ops::Index<usize> for GSpectrum {
    type Output = CycZ8;
    fn index(&self, u: usize) -> &CycZ8 {
        &self.values[u]
    }
}

/// In-place unnormalized Walsh-Hadamard butterfly over any additive group. `data.len()` must be a
/// power of two.
pub fn fwht_in_place<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = data.len();
    assert!(len.is_power_of_two(), "butterfly length {len} is not a power of two");
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half <<= 1;
    }
}

/// Direct `O(4^n)` evaluation of the definition.
pub fn wht_naive(f: &BooleanFunction) -> Spectrum {
    let len = f.len();
    let values = (0..len)
        .map(|u| {
            (0..len)
                .map(|x| if f.get(x) ^ dot(u, x) { -1 } else { 1 })
                .sum()
        })
        .collect();
    Spectrum { n: f.n(), values }
}

/// Butterfly evaluation in `O(n 2^n)`.
pub fn wht_fast(f: &BooleanFunction) -> Spectrum {
    let mut values: Vec<i64> = Vec::with_capacity(f.len());
    let len = f.len();
    for (i, &w) in f.words().iter().enumerate() {
        let take = (len - 64 * i).min(64);
        values.extend((0..take).map(|b| 1 - 2 * ((w >> b) & 1) as i64));
    }
    fwht_in_place(&mut values);
    Spectrum { n: f.n(), values }
}

/// Recovers `f` from its spectrum via `(-1)^f(y) = 2^-n sum_u W(u) (-1)^(u.y)`.
pub fn inverse_wht(s: &Spectrum) -> Result<BooleanFunction> {
    let mut vals = s.values.clone();
    fwht_in_place(&mut vals);
    let full = 1i64 << s.n;
    if let Some(point) = vals.iter().position(|&v| v != full && v != -full) {
        return Err(Error::NotRealizable { point });
    }
    BooleanFunction::from_fn(s.n, |y| vals[y] < 0)
}

/// Direct `O(4^n)` evaluation of the generalized transform.
pub fn gwht_naive(f: &OctalFunction) -> GSpectrum {
    let len = f.len();
    let roots: Vec<CycZ8> = (0..len).map(|x| CycZ8::zeta_pow(f.value(x).into())).collect();
    let values = (0..len)
        .map(|u| {
            let mut acc = CycZ8::ZERO;
            for (x, r) in roots.iter().enumerate() {
                if dot(u, x) {
                    acc -= *r;
                } else {
                    acc += *r;
                }
            }
            acc
        })
        .collect();
    GSpectrum { n: f.n(), values }
}

/// Generalized transform by a butterfly carried out directly in `Z[ζ8]`.
///
/// This path never looks at the bit-plane decomposition, so it is an independent check on
/// [`gwht_fast`].
pub fn gwht_butterfly(f: &OctalFunction) -> GSpectrum {
    let mut values: Vec<CycZ8> = (0..f.len())
        .map(|x| CycZ8::zeta_pow(f.value(x).into()))
        .collect();
    fwht_in_place(&mut values);
    GSpectrum { n: f.n(), values }
}

/// Weights `α0..α3` in `Z[ζ8]` attached to the classical spectra of `a2`, `a0^a2`, `a1^a2` and
/// `a0^a1^a2` when assembling `4 H_f`.
///
/// Over `C` they are `1 + (1+√2)i`, `1 + (1-√2)i`, `1 + √2 - i` and `1 - √2 - i`; expanding with
/// `√2 = ζ - ζ³` and `i = ζ²` gives the integer coordinates below.
pub const COMPONENT_WEIGHTS: [CycZ8; 4] = [
    CycZ8::new(1, 1, 1, 1),
    CycZ8::new(1, -1, 1, -1),
    CycZ8::new(1, 1, -1, -1),
    CycZ8::new(1, -1, -1, 1),
];

/// The four Boolean functions `a2`, `a0^a2`, `a1^a2`, `a0^a1^a2` of an octal function.
pub fn component_functions(f: &OctalFunction) -> [BooleanFunction; 4] {
    let [a0, a1, a2] = f.planes();
    let x = a0.xor(a2).expect("planes share arity");
    let y = a1.xor(a2).expect("planes share arity");
    let z = x.xor(a1).expect("planes share arity");
    [a2.clone(), x, y, z]
}

/// Generalized transform assembled from four classical butterflies and [`COMPONENT_WEIGHTS`].
pub fn gwht_fast(f: &OctalFunction) -> GSpectrum {
    let [w, x, y, z] = component_functions(f).map(|g| wht_fast(&g));
    let values = (0..f.len())
        .map(|u| {
            let four_h = COMPONENT_WEIGHTS[0] * w[u]
                + COMPONENT_WEIGHTS[1] * x[u]
                + COMPONENT_WEIGHTS[2] * y[u]
                + COMPONENT_WEIGHTS[3] * z[u];
            four_h
                .exact_div(4)
                .unwrap_or_else(|| panic!("4H({u}) = {four_h} is not divisible by 4"))
        })
        .collect();
    GSpectrum { n: f.n(), values }
}

/// Recovers `f` from its generalized spectrum via `ζ^f(y) = 2^-n sum_u H(u) (-1)^(u.y)`.
pub fn inverse_gwht(s: &GSpectrum) -> Result<OctalFunction> {
    let mut vals = s.values.clone();
    fwht_in_place(&mut vals);
    let full = 1i64 << s.n;
    let mut out = Vec::with_capacity(vals.len());
    for (point, v) in vals.iter().enumerate() {
        let k = (0..8u8)
            .find(|&k| *v == CycZ8::zeta_pow(k.into()) * full)
            .ok_or(Error::NotRealizable { point })?;
        out.push(k);
    }
    OctalFunction::from_octal_values(s.n, &out)
}

fn bits_for_modulus(q: u32) -> Result<usize> {
    match q {
        2 => Ok(1),
        4 => Ok(2),
        8 => Ok(3),
        _ => Err(Error::UnsupportedModulus(q)),
    }
}

/// Classical spectra of every XOR combination of the planes, indexed by the subset bitmask.
struct SubsetSpectra {
    h: usize,
    q: u32,
    spectra: Vec<Spectrum>,
}

impl SubsetSpectra {
    fn new(planes: &[BooleanFunction], q: u32) -> Result<Self> {
        let h = bits_for_modulus(q)?;
        if planes.len() != h {
            return Err(Error::BadLength {
                expected: h,
                got: planes.len(),
            });
        }
        let n = planes[0].n();
        for p in planes {
            if p.n() != n {
                return Err(Error::ArityMismatch { left: n, right: p.n() });
            }
        }
        let spectra = (0..1usize << h)
            .map(|mask| {
                let mut g = BooleanFunction::zero(n).expect("arity already validated");
                for (l, p) in planes.iter().enumerate() {
                    if mask >> l & 1 == 1 {
                        g = g.xor(p).expect("arity already validated");
                    }
                }
                wht_fast(&g)
            })
            .collect();
        Ok(Self { h, q, spectra })
    }

    /// `2^h H(u) = sum_I ζ_q^(sum_{i in I} 2^i) sum_{J ⊆ I, K ⊆ I^c} (-1)^|J| W_{xor of J ∪ K}(u)`.
    fn eval(&self, u: usize) -> CycZ8 {
        let full = (1usize << self.h) - 1;
        let root_step = i64::from(8 / self.q);
        let mut acc = CycZ8::ZERO;
        for set in 0..=full {
            let rest = full & !set;
            let mut inner = 0i64;
            for j in submasks(set) {
                let sign = if j.count_ones() % 2 == 0 { 1 } else { -1 };
                for k in submasks(rest) {
                    inner += sign * self.spectra[j | k][u];
                }
            }
            // Σ_{i∈I} 2^i is the bitmask itself.
            acc += CycZ8::zeta_pow(set as i64 * root_step) * inner;
        }
        let scale = 1i64 << self.h;
        acc.exact_div(scale)
            .unwrap_or_else(|| panic!("2^h H({u}) = {acc} is not divisible by {scale}"))
    }
}

/// All submasks of `mask`, including `0` and `mask`.
fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Generalized transform at `u` of `f = sum_i 2^i planes[i]` with values in `Z_q`, built from
/// classical transforms of the plane combinations. `q` must be 2, 4 or 8 and `planes.len()` must
/// be `log2 q`.
pub fn component_wht(planes: &[BooleanFunction], q: u32, u: usize) -> Result<CycZ8> {
    let cache = SubsetSpectra::new(planes, q)?;
    let len = planes[0].len();
    if u >= len {
        return Err(Error::IndexOutOfRange { index: u, len });
    }
    Ok(cache.eval(u))
}

/// Full-spectrum variant of [`component_wht`].
pub fn component_wht_spectrum(planes: &[BooleanFunction], q: u32) -> Result<GSpectrum> {
    let cache = SubsetSpectra::new(planes, q)?;
    let n = planes[0].n();
    Ok(GSpectrum {
        n,
        values: (0..1usize << n).map(|u| cache.eval(u)).collect(),
    })
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

    fn reals(v: &[i64]) -> Vec<CycZ8> {
        v.iter().map(|&x| CycZ8::from_int(x)).collect()
    }

    #[test]
    fn wht_examples() {
        for wht in [wht_naive, wht_fast] {
            assert_eq!(wht(&b("0000")).values(), &[4, 0, 0, 0]);
            assert_eq!(wht(&b("0001")).values(), &[2, 2, 2, -2]);
            let lin = BooleanFunction::linear(2, 3, false).unwrap();
            assert_eq!(wht(&lin).values(), &[0, 0, 0, 4]);
        }
    }

    #[test]
    fn linear_functions_are_orthogonal() {
        for n in 1..=5u32 {
            for u in 0..1usize << n {
                let s = wht_fast(&BooleanFunction::linear(n, u, false).unwrap());
                for (v, &val) in s.values().iter().enumerate() {
                    assert_eq!(val, if v == u { 1 << n } else { 0 });
                }
            }
        }
    }

    #[test]
    fn inverse_wht_examples() {
        let s = Spectrum::new(2, vec![4, 0, 0, 0]).unwrap();
        assert_eq!(inverse_wht(&s).unwrap(), b("0000"));
        assert_eq!(inverse_wht(&wht_fast(&b("0001"))).unwrap(), b("0001"));
        let bad = Spectrum::new(2, vec![2, 2, 2, 2]).unwrap();
        assert!(matches!(inverse_wht(&bad), Err(Error::NotRealizable { .. })));
    }

    #[test]
    fn gwht_examples() {
        for gwht in [gwht_naive, gwht_fast, gwht_butterfly] {
            assert_eq!(gwht(&o("00")).values(), reals(&[2, 0]).as_slice());
            assert_eq!(
                gwht(&o("02")).values(),
                &[CycZ8::new(1, 0, 1, 0), CycZ8::new(1, 0, -1, 0)]
            );
            assert_eq!(gwht(&o("0004")).values(), reals(&[2, 2, 2, -2]).as_slice());
        }
    }

    #[test]
    fn component_weights_match_complex_values() {
        let s2 = std::f64::consts::SQRT_2;
        let expected = [(1.0, 1.0 + s2), (1.0, 1.0 - s2), (1.0 + s2, -1.0), (1.0 - s2, -1.0)];
        for (w, (re, im)) in COMPONENT_WEIGHTS.iter().zip(expected) {
            let (r, i) = w.to_complex();
            assert!((r - re).abs() < 1e-12 && (i - im).abs() < 1e-12, "{w} vs {re}+{im}i");
        }
    }

    #[test]
    fn inverse_gwht_examples() {
        assert_eq!(inverse_gwht(&gwht_naive(&o("02"))).unwrap(), o("02"));
        let zero = GSpectrum::new(2, vec![CycZ8::ZERO; 4]).unwrap();
        assert_eq!(inverse_gwht(&zero), Err(Error::NotRealizable { point: 0 }));
    }

    #[test]
    fn component_wht_single_plane_is_classical() {
        let f = b("01101011");
        let s = component_wht_spectrum(std::slice::from_ref(&f), 2).unwrap();
        assert_eq!(s.values(), reals(wht_fast(&f).values()).as_slice());
    }

    #[test]
    fn component_wht_rejects_bad_modulus() {
        let f = b("0110");
        assert_eq!(
            component_wht(&[f.clone(), f.clone(), f], 6, 0),
            Err(Error::UnsupportedModulus(6))
        );
        assert!(component_wht(&[b("01")], 4, 0).is_err());
    }

    #[test]
    fn submask_enumeration() {
        let mut m: Vec<_> = submasks(0b101).collect();
        m.sort();
        assert_eq!(m, vec![0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn spectrum_rejects_bad_length() {
        assert!(Spectrum::new(2, vec![0; 3]).is_err());
        assert!(GSpectrum::new(1, vec![CycZ8::ZERO; 4]).is_err());
    }
}
