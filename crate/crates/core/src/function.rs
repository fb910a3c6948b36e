//! Packed truth tables for Boolean functions `Z2^n -> Z2` and octal functions `Z2^n -> Z8`.
//!
//! A point `x = (x_n, ..., x_1)` is stored at index `i = sum x_k 2^(k-1)`, so `x_1` is the least
//! significant bit and the inner product `u . x` is the parity of `u & x`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported variable count.
pub const MAX_VARS: u32 = 24;

pub(crate) fn check_arity(n: u32) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidArity(n))
    }
}

/// Parity of the inner product `u . x` over Z2.
#[inline]
pub fn dot(u: usize, x: usize) -> bool {
    (u & x).count_ones() & 1 == 1
}

/// Parses a table length into its variable count.
fn arity_of_len(len: usize) -> Result<u32> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::BadLength {
            expected: len.next_power_of_two().max(2),
            got: len,
        });
    }
    let n = len.trailing_zeros();
    check_arity(n)?;
    Ok(n)
}

/// Truth table of a Boolean function on `n` variables, bit-packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

impl BooleanFunction {
    pub fn zero(n: u32) -> Result<Self> {
        check_arity(n)?;
        let len = 1usize << n;
        Ok(Self {
            n,
            words: vec![0; len.div_ceil(64)],
        })
    }

    pub fn constant(n: u32, bit: bool) -> Result<Self> {
        if bit {
            Self::from_fn(n, |_| true)
        } else {
            Self::zero(n)
        }
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for x in 0..out.len() {
            if f(x) {
                out.words[x >> 6] |= 1 << (x & 63);
            }
        }
        Ok(out)
    }

    /// Builds a function from its evaluations in index order.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let n = arity_of_len(bits.len())?;
        Self::from_fn(n, |x| bits[x])
    }

    /// The affine function `x -> (u . x) xor c`.
    pub fn linear(n: u32, u: usize, c: bool) -> Result<Self> {
        check_arity(n)?;
        let len = 1usize << n;
        if u >= len {
            return Err(Error::IndexOutOfRange { index: u, len });
        }
        Self::from_fn(n, |x| dot(u, x) ^ c)
    }

    /// Builds the function whose table is the low `2^n` bits of `table`; handy for `n <= 6`.
    pub fn from_u64(n: u32, table: u64) -> Result<Self> {
        check_arity(n)?;
        if n > 6 {
            return Err(Error::InvalidArity(n));
        }
        Self::from_fn(n, |x| (table >> x) & 1 == 1)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of points, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    /// Always false: every function has at least two points.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Unchecked lookup. Panics if `x >= 2^n`.
    #[inline]
    pub fn get(&self, x: usize) -> bool {
        assert!(x < self.len(), "point {x} out of range");
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    pub fn eval(&self, x: usize) -> Result<bool> {
        if x < self.len() {
            Ok(self.get(x))
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.len(),
            })
        }
    }

    /// `(-1)^f(x)`.
    #[inline]
    pub fn sign(&self, x: usize) -> i64 {
        if self.get(x) {
            -1
        } else {
            1
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.get(x))
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        if self.n < 6 {
            out.words[0] &= (1u64 << self.len()) - 1;
        }
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self)
    }
}

impl FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(Error::Parse { position, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }
}

/// A function `Z2^n -> Z8` held as its three bit-planes, `f = a0 + 2 a1 + 4 a2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OctalFunction {
    planes: [BooleanFunction; 3],
}

impl OctalFunction {
    pub fn from_planes(a0: BooleanFunction, a1: BooleanFunction, a2: BooleanFunction) -> Result<Self> {
        for p in [&a1, &a2] {
            if p.n != a0.n {
                return Err(Error::ArityMismatch {
                    left: a0.n,
                    right: p.n,
                });
            }
        }
        Ok(Self {
            planes: [a0, a1, a2],
        })
    }

    pub fn from_octal_values(n: u32, values: &[u8]) -> Result<Self> {
        check_arity(n)?;
        let len = 1usize << n;
        if values.len() != len {
            return Err(Error::BadLength {
                expected: len,
                got: values.len(),
            });
        }
        if let Some((position, &value)) = values.iter().enumerate().find(|(_, &v)| v >= 8) {
            return Err(Error::BadValue { position, value });
        }
        Self::from_planes(
            BooleanFunction::from_fn(n, |x| values[x] & 1 != 0)?,
            BooleanFunction::from_fn(n, |x| values[x] & 2 != 0)?,
            BooleanFunction::from_fn(n, |x| values[x] & 4 != 0)?,
        )
    }

    /// Evaluates an integer-valued formula pointwise and reduces it mod 8.
    pub fn from_fn_mod8(n: u32, mut f: impl FnMut(usize) -> i64) -> Result<Self> {
        check_arity(n)?;
        let values: Vec<u8> = (0..1usize << n).map(|x| f(x).rem_euclid(8) as u8).collect();
        Self::from_octal_values(n, &values)
    }

    pub fn constant(n: u32, value: u8) -> Result<Self> {
        check_arity(n)?;
        Self::from_octal_values(n, &vec![value; 1 << n])
    }

    /// Embeds a Boolean function as `4 g`, whose generalized spectrum is the classical one.
    pub fn from_boolean_times4(g: &BooleanFunction) -> Self {
        let zero = BooleanFunction::zero(g.n).expect("arity already validated");
        Self {
            planes: [zero.clone(), zero, g.clone()],
        }
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.planes[0].n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.planes[0].len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn planes(&self) -> &[BooleanFunction; 3] {
        &self.planes
    }

    pub fn a0(&self) -> &BooleanFunction {
        &self.planes[0]
    }

    pub fn a1(&self) -> &BooleanFunction {
        &self.planes[1]
    }

    pub fn a2(&self) -> &BooleanFunction {
        &self.planes[2]
    }

    /// Unchecked lookup. Panics if `x >= 2^n`.
    #[inline]
    pub fn value(&self, x: usize) -> u8 {
        u8::from(self.planes[0].get(x)) | u8::from(self.planes[1].get(x)) << 1 | u8::from(self.planes[2].get(x)) << 2
    }

    pub fn eval(&self, x: usize) -> Result<u8> {
        if x < self.len() {
            Ok(self.value(x))
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.len(),
            })
        }
    }

    pub fn values(&self) -> Vec<u8> {
        (0..self.len()).map(|x| self.value(x)).collect()
    }
}

impl fmt::Display for OctalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.len() {
            write!(f, "{}", self.value(x))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OctalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OctalFunction(n={}, {})", self.n(), self)
    }
}

impl FromStr for OctalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0'..='7' => Ok(c as u8 - b'0'),
                found => Err(Error::Parse { position, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        let n = arity_of_len(values.len())?;
        Self::from_octal_values(n, &values)
    }
}
