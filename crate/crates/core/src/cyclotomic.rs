//! Exact arithmetic in `Z[ζ]`, `ζ = e^{2πi/8}`.
//!
//! Elements are integer vectors on the basis `1, ζ, ζ², ζ³` with `ζ⁴ = -1`. Squared moduli land
//! in `Z + Z√2` (see [`QuadNorm`]) since `√2 = ζ - ζ³`.
//!
//! Coordinates are `i64`. A generalized spectrum value on `n <= 24` variables has coordinates of
//! magnitude at most `2^24`, its squared modulus is below `4 * 2^48`, and the intermediate
//! products of one multiplication stay below `2^62`. Every multiplication and addition is
//! nevertheless overflow-checked and panics rather than wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

#[inline]
fn ck(v: Option<i64>) -> i64 {
    v.expect("Z[ζ8] coefficient overflow")
}

/// An element `c0 + c1 ζ + c2 ζ² + c3 ζ³` of `Z[ζ8]`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycZ8(pub [i64; 4]);

impl CycZ8 {
    pub const ZERO: CycZ8 = CycZ8([0; 4]);
    pub const ONE: CycZ8 = CycZ8([1, 0, 0, 0]);
    pub const ZETA: CycZ8 = CycZ8([0, 1, 0, 0]);
    /// `i = ζ²`.
    pub const I: CycZ8 = CycZ8([0, 0, 1, 0]);
    /// `√2 = ζ - ζ³`.
    pub const SQRT2: CycZ8 = CycZ8([0, 1, 0, -1]);

    pub const fn new(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        CycZ8([c0, c1, c2, c3])
    }

    pub const fn from_int(v: i64) -> Self {
        CycZ8([v, 0, 0, 0])
    }

    #[inline]
    pub fn coeffs(&self) -> [i64; 4] {
        self.0
    }

    /// `ζ^k` for any integer `k`, reduced mod 8.
    #[inline]
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        CycZ8(c)
    }

    /// Complex conjugation, the automorphism `ζ -> ζ⁻¹ = -ζ³`.
    #[inline]
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.0;
        CycZ8([a, -d, -c, -b])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// True when the value lies in `Z`.
    pub fn is_rational_integer(&self) -> bool {
        self.0[1] == 0 && self.0[2] == 0 && self.0[3] == 0
    }

    /// True when the value equals its complex conjugate, i.e. lies in `Z[√2]`.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let mut acc = [0i64; 4];
        for (i, &x) in self.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in rhs.0.iter().enumerate() {
                let p = x.checked_mul(y)?;
                let k = i + j;
                if k < 4 {
                    acc[k] = acc[k].checked_add(p)?;
                } else {
                    acc[k - 4] = acc[k - 4].checked_sub(p)?;
                }
            }
        }
        Some(CycZ8(acc))
    }

    pub fn scale(&self, k: i64) -> Self {
        CycZ8(self.0.map(|c| ck(c.checked_mul(k))))
    }

    /// Exact division by a rational integer, or `None` if some coordinate is not divisible.
    pub fn exact_div(&self, k: i64) -> Option<Self> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(CycZ8(self.0.map(|c| c / k)))
    }

    /// Squared complex modulus as an exact element of `Z + Z√2`.
    ///
    /// Computed as `z · conj(z)`, which must lie in the span of `1` and `ζ - ζ³`.
    pub fn norm_sq(&self) -> QuadNorm {
        let p = *self * self.conj();
        let [a, b, c, d] = p.0;
        assert!(
            c == 0 && b == -d,
            "z·conj(z) = {p} escaped Z + Z√2; reduction bug"
        );
        QuadNorm { a, b }
    }

    /// Floating-point value as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = self.0.map(|v| v as f64);
        (a + h * (b - d), h * (b + d) + c)
    }
}

impl Add for CycZ8 {
    type Output = CycZ8;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        CycZ8([
            ck(self.0[0].checked_add(rhs.0[0])),
            ck(self.0[1].checked_add(rhs.0[1])),
            ck(self.0[2].checked_add(rhs.0[2])),
            ck(self.0[3].checked_add(rhs.0[3])),
        ])
    }
}

impl Sub for CycZ8 {
    type Output = CycZ8;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        CycZ8([
            ck(self.0[0].checked_sub(rhs.0[0])),
            ck(self.0[1].checked_sub(rhs.0[1])),
            ck(self.0[2].checked_sub(rhs.0[2])),
            ck(self.0[3].checked_sub(rhs.0[3])),
        ])
    }
}

impl Neg for CycZ8 {
    type Output = CycZ8;
    fn neg(self) -> Self {
        CycZ8(self.0.map(|c| ck(c.checked_neg())))
    }
}

impl AddAssign for CycZ8 {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for CycZ8 {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Mul for CycZ8 {
    type Output = CycZ8;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("Z[ζ8] coefficient overflow")
    }
}

impl Mul<i64> for CycZ8 {
    type Output = CycZ8;
    fn mul(self, rhs: i64) -> Self {
        self.scale(rhs)
    }
}

impl From<i64> for CycZ8 {
    fn from(v: i64) -> Self {
        CycZ8::from_int(v)
    }
}

impl std::iter::Sum for CycZ8 {
    fn sum<I: Iterator<Item = CycZ8>>(iter: I) -> Self {
        iter.fold(CycZ8::ZERO, Add::add)
    }
}

impl fmt::Display for CycZ8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}")?;
        for (k, unit) in [(b, "ζ"), (c, "ζ²"), (d, "ζ³")] {
            let sign = if k < 0 { '-' } else { '+' };
            write!(f, " {sign} {}·{unit}", k.unsigned_abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycZ8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An exact real number `a + b√2` with integer `a`, `b`.
///
/// Because `√2` is irrational the pair is a unique representation, so equality and zero tests
/// are done on the coordinates.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadNorm {
    pub a: i64,
    pub b: i64,
}

impl QuadNorm {
    pub const ZERO: QuadNorm = QuadNorm { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        QuadNorm { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        QuadNorm { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Multiplication by `√2`: `(a + b√2)√2 = 2b + a√2`.
    pub fn times_sqrt2(&self) -> Self {
        QuadNorm {
            a: ck(self.b.checked_mul(2)),
            b: self.a,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        QuadNorm {
            a: ck(self.a.checked_mul(k)),
            b: ck(self.b.checked_mul(k)),
        }
    }

    /// The same number as an element of `Z[ζ8]`.
    pub fn to_cyc(&self) -> CycZ8 {
        CycZ8([self.a, self.b, 0, -self.b])
    }

    pub fn to_f64(&self) -> f64 {
        self.a as f64 + self.b as f64 * std::f64::consts::SQRT_2
    }
}

impl Add for QuadNorm {
    type Output = QuadNorm;
    fn add(self, rhs: Self) -> Self {
        QuadNorm {
            a: ck(self.a.checked_add(rhs.a)),
            b: ck(self.b.checked_add(rhs.b)),
        }
    }
}

impl Sub for QuadNorm {
    type Output = QuadNorm;
    fn sub(self, rhs: Self) -> Self {
        QuadNorm {
            a: ck(self.a.checked_sub(rhs.a)),
            b: ck(self.b.checked_sub(rhs.b)),
        }
    }
}

impl Mul for QuadNorm {
    type Output = QuadNorm;
    fn mul(self, rhs: Self) -> Self {
        let m = |x: i64, y: i64| ck(x.checked_mul(y));
        QuadNorm {
            a: ck(m(self.a, rhs.a).checked_add(m(2, m(self.b, rhs.b)))),
            b: ck(m(self.a, rhs.b).checked_add(m(rhs.a, self.b))),
        }
    }
}

impl std::iter::Sum for QuadNorm {
    fn sum<I: Iterator<Item = QuadNorm>>(iter: I) -> Self {
        iter.fold(QuadNorm::ZERO, Add::add)
    }
}

impl fmt::Display for QuadNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(f, "{} {sign} {}·√2", self.a, self.b.unsigned_abs())
    }
}

impl fmt::Debug for QuadNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}√2)", self.a, self.b)
    }
}
