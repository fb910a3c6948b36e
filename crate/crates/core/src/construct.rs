//! Gbent constructions on `n + 2` and `n + 1` variables from Boolean ingredients on even `n`,
//! with public hypothesis checkers and ingredient searchers.
//!
//! Output layout: the base point `x` occupies index bits `0..n`, the new variable `y` is bit `n`
//! and (for the two-variable constructions) `z` is bit `n + 1`. Formulas are evaluated over the
//! integers pointwise and reduced mod 8.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::classify::{bent_magnitude, spectrum_is_bent};
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, OctalFunction};
use crate::random::{random_boolean, random_permutation};
use crate::transform::{wht_fast, Spectrum};

/// `ε ∈ {+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn value(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

impl TryFrom<i64> for Epsilon {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Epsilon::Plus),
            -1 => Ok(Epsilon::Minus),
            other => Err(Error::InvalidEpsilon(other)),
        }
    }
}

impl FromStr for Epsilon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Epsilon::Plus),
            "-1" | "-" => Ok(Epsilon::Minus),
            other => Err(Error::InvalidEpsilon(other.parse().unwrap_or(0))),
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
        })
    }
}

/// Why a recipe's hypotheses fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HypothesisFailure {
    NotBent { ingredient: &'static str, u: usize, value: i64 },
    Identity { u: usize, lhs: i64, rhs: i64 },
    MissingIngredient { ingredient: &'static str },
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisFailure::NotBent { ingredient, u, value } => {
                write!(f, "{ingredient} is not bent (W({u}) = {value})")
            }
            HypothesisFailure::Identity { u, lhs, rhs } => {
                write!(f, "spectral identity fails at u = {u}: {lhs} != {rhs}")
            }
            HypothesisFailure::MissingIngredient { ingredient } => {
                write!(f, "ingredient {ingredient} is required")
            }
        }
    }
}

fn fail(h: HypothesisFailure) -> Error {
    Error::Hypothesis(h)
}

/// Which construction a recipe uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    /// `4c + (4a+2c+1) y + (4b+2c+1) z - 2yz` on `n + 2` variables.
    TwoVarTwisted,
    /// `4c + (4a+1) y + (4b+1) z + 2ε yz` on `n + 2` variables.
    TwoVarSigned,
    /// `4c + (4a+4c+2ε) y` on `n + 1` variables; gbent iff `a`, `c` bent.
    OneVarFull,
    /// `4c + (4a+2c+2ε) y` on `n + 1` variables. With `c` bent this is gbent only when
    /// `W_a = W_{a^c}`, which forces `c = 0`; the checker therefore never accepts.
    OneVarHalf,
    /// `4c + (4a+2ε) y` on `n + 1` variables; gbent iff `c`, `a^c` bent.
    OneVarPlain,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::TwoVarTwisted,
        Kind::TwoVarSigned,
        Kind::OneVarFull,
        Kind::OneVarHalf,
        Kind::OneVarPlain,
    ];

    /// Name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Kind::TwoVarTwisted => "thm5",
            Kind::TwoVarSigned => "thm6",
            Kind::OneVarFull => "thm7f",
            Kind::OneVarHalf => "thm7g",
            Kind::OneVarPlain => "thm7h",
        }
    }

    pub fn extra_vars(self) -> u32 {
        match self {
            Kind::TwoVarTwisted | Kind::TwoVarSigned => 2,
            _ => 1,
        }
    }

    pub fn needs_b(self) -> bool {
        self.extra_vars() == 2
    }

    pub fn needs_epsilon(self) -> bool {
        self != Kind::TwoVarTwisted
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.cli_name() == s)
            .ok_or_else(|| format!("unknown construction kind {s:?}"))
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// Common arity of the ingredients, which must be even.
fn ingredient_arity(fs: &[&BooleanFunction]) -> Result<u32> {
    let n = fs[0].n();
    for f in fs {
        if f.n() != n {
            return Err(Error::ArityMismatch { left: n, right: f.n() });
        }
    }
    bent_magnitude(n)?;
    Ok(n)
}

/// Spectrum of the ingredient `name`, failing if it is not bent.
fn bent_spectrum(name: &'static str, f: &BooleanFunction) -> Result<Spectrum> {
    let s = wht_fast(f);
    let m = bent_magnitude(f.n())?;
    match s.values().iter().position(|v| v.abs() != m) {
        None => Ok(s),
        Some(u) => Err(fail(HypothesisFailure::NotBent {
            ingredient: name,
            u,
            value: s[u],
        })),
    }
}

fn xor(f: &BooleanFunction, g: &BooleanFunction) -> BooleanFunction {
    f.xor(g).expect("arity checked")
}

/// Checks that `a, b, c, a^c, b^c, a^b` are bent and
/// `W_a W_b + W_{a^c} W_{b^c} = -2 W_{a^b} W_c` pointwise (unnormalized; both sides carry `2^n`).
///
/// No triple on 2 or 4 variables passes; see [`find_twisted_triple_exhaustive`].
pub fn check_two_var_twisted(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> Result<()> {
    ingredient_arity(&[a, b, c])?;
    let wa = bent_spectrum("a", a)?;
    let wb = bent_spectrum("b", b)?;
    let wc = bent_spectrum("c", c)?;
    let wac = bent_spectrum("a^c", &xor(a, c))?;
    let wbc = bent_spectrum("b^c", &xor(b, c))?;
    let wab = bent_spectrum("a^b", &xor(a, b))?;
    for u in 0..a.len() {
        let lhs = wa[u] * wb[u] + wac[u] * wbc[u];
        let rhs = -2 * wab[u] * wc[u];
        if lhs != rhs {
            return Err(fail(HypothesisFailure::Identity { u, lhs, rhs }));
        }
    }
    Ok(())
}

/// Checks that `c, a^c, b^c, a^b^c` are bent and `W_{a^c} W_{b^c} - ε W_c W_{a^b^c} = 0`
/// pointwise.
///
/// With the cross term `+2ε yz`, `2H(u,v,w) = P + ζ Q` where `P = W_c - ε (-1)^(v+w) W_{a^b^c}`
/// and `Q = (-1)^v W_{a^c} + (-1)^w W_{b^c}`, so `|2H|² = P² + Q² + √2 PQ` and gbentness needs
/// exactly one of `P`, `Q` to vanish for each sign of `(-1)^(v+w)`. That is the condition above;
/// the variant with `+ ε` holds for `a = b` affine at `ε = -1`, where the output is not gbent.
pub fn check_two_var_signed(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    epsilon: Epsilon,
) -> Result<()> {
    ingredient_arity(&[a, b, c])?;
    let wc = bent_spectrum("c", c)?;
    let wac = bent_spectrum("a^c", &xor(a, c))?;
    let wbc = bent_spectrum("b^c", &xor(b, c))?;
    let wabc = bent_spectrum("a^b^c", &xor(&xor(a, b), c))?;
    for u in 0..a.len() {
        let lhs = wac[u] * wbc[u] - epsilon.value() * wc[u] * wabc[u];
        if lhs != 0 {
            return Err(fail(HypothesisFailure::Identity { u, lhs, rhs: 0 }));
        }
    }
    Ok(())
}

/// Hypotheses of the one-variable constructions: `a, c` bent (full); `c, a^c` bent (plain);
/// `a, c, a^c` bent with `W_a = W_{a^c}` (half, never satisfiable).
pub fn check_one_var(kind: Kind, a: &BooleanFunction, c: &BooleanFunction) -> Result<()> {
    ingredient_arity(&[a, c])?;
    match kind {
        Kind::OneVarFull => {
            bent_spectrum("a", a)?;
            bent_spectrum("c", c)?;
        }
        Kind::OneVarHalf => {
            // sqrt2 H(u,v) = W_c + ε(-1)^v ((W_a - W_{a^c}) + i (W_a + W_{a^c})) / 2, so the cross
            // term 2 ε (-1)^v W_c (W_a - W_{a^c}) / 2 has to vanish at every u.
            let wa = bent_spectrum("a", a)?;
            bent_spectrum("c", c)?;
            let wac = bent_spectrum("a^c", &xor(a, c))?;
            if let Some(u) = (0..a.len()).find(|&u| wa[u] != wac[u]) {
                return Err(fail(HypothesisFailure::Identity { u, lhs: wa[u], rhs: wac[u] }));
            }
        }
        Kind::OneVarPlain => {
            bent_spectrum("c", c)?;
            bent_spectrum("a^c", &xor(a, c))?;
        }
        other => panic!("{other} is not a one-variable construction"),
    }
    Ok(())
}

fn bit(f: &BooleanFunction, x: usize) -> i64 {
    i64::from(f.get(x))
}

/// Evaluates the two-variable twisted formula without checking hypotheses.
pub fn build_two_var_twisted(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> Result<OctalFunction> {
    ingredient_arity(&[a, b, c])?;
    let n = a.n();
    let mask = a.len() - 1;
    OctalFunction::from_fn_mod8(n + 2, |p| {
        let x = p & mask;
        let y = (p >> n & 1) as i64;
        let z = (p >> (n + 1) & 1) as i64;
        let (a, b, c) = (bit(a, x), bit(b, x), bit(c, x));
        4 * c + (4 * a + 2 * c + 1) * y + (4 * b + 2 * c + 1) * z - 2 * y * z
    })
}

/// Evaluates the two-variable signed formula without checking hypotheses.
pub fn build_two_var_signed(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    epsilon: Epsilon,
) -> Result<OctalFunction> {
    ingredient_arity(&[a, b, c])?;
    let n = a.n();
    let mask = a.len() - 1;
    let e = epsilon.value();
    OctalFunction::from_fn_mod8(n + 2, |p| {
        let x = p & mask;
        let y = (p >> n & 1) as i64;
        let z = (p >> (n + 1) & 1) as i64;
        let (a, b, c) = (bit(a, x), bit(b, x), bit(c, x));
        4 * c + (4 * a + 1) * y + (4 * b + 1) * z + 2 * e * y * z
    })
}

/// Evaluates a one-variable formula without checking hypotheses.
pub fn build_one_var(kind: Kind, a: &BooleanFunction, c: &BooleanFunction, epsilon: Epsilon) -> Result<OctalFunction> {
    ingredient_arity(&[a, c])?;
    let c_weight = match kind {
        Kind::OneVarFull => 4,
        Kind::OneVarHalf => 2,
        Kind::OneVarPlain => 0,
        other => panic!("{other} is not a one-variable construction"),
    };
    let n = a.n();
    let mask = a.len() - 1;
    let e = epsilon.value();
    OctalFunction::from_fn_mod8(n + 1, |p| {
        let x = p & mask;
        let y = (p >> n & 1) as i64;
        let (a, c) = (bit(a, x), bit(c, x));
        4 * c + (4 * a + c_weight * c + 2 * e) * y
    })
}

/// A fully specified construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub kind: Kind,
    pub a: BooleanFunction,
    pub b: Option<BooleanFunction>,
    pub c: BooleanFunction,
    pub epsilon: Option<Epsilon>,
}

impl ConstructionRecipe {
    pub fn new(
        kind: Kind,
        a: BooleanFunction,
        b: Option<BooleanFunction>,
        c: BooleanFunction,
        epsilon: Option<Epsilon>,
    ) -> Result<Self> {
        if kind.needs_b() && b.is_none() {
            return Err(fail(HypothesisFailure::MissingIngredient { ingredient: "b" }));
        }
        if kind.needs_epsilon() && epsilon.is_none() {
            return Err(fail(HypothesisFailure::MissingIngredient { ingredient: "epsilon" }));
        }
        let b = if kind.needs_b() { b } else { None };
        let epsilon = if kind.needs_epsilon() { epsilon } else { None };
        for f in [Some(&c), b.as_ref()].into_iter().flatten() {
            if f.n() != a.n() {
                return Err(Error::ArityMismatch { left: a.n(), right: f.n() });
            }
        }
        Ok(Self { kind, a, b, c, epsilon })
    }

    pub fn output_arity(&self) -> u32 {
        self.a.n() + self.kind.extra_vars()
    }

    fn b(&self) -> &BooleanFunction {
        self.b.as_ref().expect("validated in new")
    }

    fn eps(&self) -> Epsilon {
        self.epsilon.expect("validated in new")
    }

    pub fn check_hypotheses(&self) -> Result<()> {
        match self.kind {
            Kind::TwoVarTwisted => check_two_var_twisted(&self.a, self.b(), &self.c),
            Kind::TwoVarSigned => check_two_var_signed(&self.a, self.b(), &self.c, self.eps()),
            k => check_one_var(k, &self.a, &self.c),
        }
    }

    /// The formula's output, whether or not the hypotheses hold.
    pub fn build(&self) -> Result<OctalFunction> {
        match self.kind {
            Kind::TwoVarTwisted => build_two_var_twisted(&self.a, self.b(), &self.c),
            Kind::TwoVarSigned => build_two_var_signed(&self.a, self.b(), &self.c, self.eps()),
            k => build_one_var(k, &self.a, &self.c, self.eps()),
        }
    }

    /// Checks the hypotheses, then builds.
    pub fn construct(&self) -> Result<OctalFunction> {
        self.check_hypotheses()?;
        self.build()
    }
}

pub fn construct_two_var_twisted(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> Result<OctalFunction> {
    check_two_var_twisted(a, b, c)?;
    build_two_var_twisted(a, b, c)
}

pub fn construct_two_var_signed(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    epsilon: Epsilon,
) -> Result<OctalFunction> {
    check_two_var_signed(a, b, c, epsilon)?;
    build_two_var_signed(a, b, c, epsilon)
}

/// All sixteen sign patterns `(W_a, W_b, W_{a^c}, W_{b^c}, W_{a^b}, W_c)` (normalized) that
/// satisfy the twisted construction's spectral identity.
pub const TWISTED_SIGN_PATTERNS: [[i64; 6]; 16] = [
    [-1, -1, -1, -1, -1, 1],
    [-1, -1, -1, -1, 1, -1],
    [-1, -1, 1, 1, -1, 1],
    [-1, -1, 1, 1, 1, -1],
    [-1, 1, -1, 1, -1, -1],
    [-1, 1, -1, 1, 1, 1],
    [-1, 1, 1, -1, -1, -1],
    [-1, 1, 1, -1, 1, 1],
    [1, -1, -1, 1, -1, -1],
    [1, -1, -1, 1, 1, 1],
    [1, -1, 1, -1, -1, -1],
    [1, -1, 1, -1, 1, 1],
    [1, 1, -1, -1, -1, 1],
    [1, 1, -1, -1, 1, -1],
    [1, 1, 1, 1, -1, 1],
    [1, 1, 1, 1, 1, -1],
];

/// Normalized `(W_a, W_b, W_{a^c}, W_{b^c}, W_{a^b}, W_c)(u)`; `None` if a value is not `±2^(n/2)`.
pub fn twisted_sign_tuple(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    u: usize,
) -> Result<Option<[i64; 6]>> {
    ingredient_arity(&[a, b, c])?;
    let m = bent_magnitude(a.n())?;
    let fs = [a.clone(), b.clone(), xor(a, c), xor(b, c), xor(a, b), c.clone()];
    let vals = fs.map(|f| wht_fast(&f)[u]);
    Ok(vals.iter().all(|v| v.abs() == m).then(|| vals.map(|v| v / m)))
}

/// All bent functions on `n <= 4` variables, in increasing truth-table order.
pub fn bent_functions(n: u32) -> Result<Vec<BooleanFunction>> {
    bent_magnitude(n)?;
    if n > 4 {
        return Err(Error::InfeasibleSweep(format!(
            "enumerating all Boolean functions on {n} variables"
        )));
    }
    let len = 1u64 << n;
    Ok((0..1u64 << len)
        .map(|t| BooleanFunction::from_u64(n, t).expect("n <= 4"))
        .filter(|f| spectrum_is_bent(&wht_fast(f)).expect("even n"))
        .collect())
}

/// Outcome of an ingredient search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub triple: Option<[BooleanFunction; 3]>,
    pub examined: u64,
    /// Triples whose six functions are all bent but whose spectral identity fails.
    pub near_misses: u64,
}

fn classify_triple(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> (bool, bool) {
    match check_two_var_twisted(a, b, c) {
        Ok(()) => (true, false),
        Err(Error::Hypothesis(HypothesisFailure::Identity { .. })) => (false, true),
        Err(_) => (false, false),
    }
}

fn table_u64(f: &BooleanFunction) -> u64 {
    f.bits().enumerate().map(|(x, bit)| u64::from(bit) << x).sum()
}

/// Exhaustive search over ordered triples of bent functions on `n ∈ {2, 4}` variables (512 and
/// 896³ triples) for ingredients of the twisted construction. Scans everything so the counts are
/// complete; returns the first passing triple in truth-table order.
///
/// Each bent function is reduced to the sign mask of its spectrum, so the identity becomes
/// `sa^sb == sac^sbc == !(sab^sc)` on masks.
pub fn find_twisted_triple_exhaustive(n: u32) -> Result<SearchOutcome> {
    if n != 2 && n != 4 {
        return Err(Error::InfeasibleSweep(format!(
            "exhaustive triple search is limited to 2 or 4 variables, got {n}"
        )));
    }
    let bents = bent_functions(n)?;
    let full: u16 = if n == 4 { u16::MAX } else { 0xf };
    let mut sign = vec![None::<u16>; 1 << (1 << n)];
    for f in &bents {
        let s = wht_fast(f);
        let mask = (0..f.len()).filter(|&u| s[u] < 0).map(|u| 1u16 << u).sum();
        sign[table_u64(f) as usize] = Some(mask);
    }
    let tables: Vec<usize> = bents.iter().map(|f| table_u64(f) as usize).collect();
    let mut out = SearchOutcome {
        triple: None,
        examined: (tables.len() as u64).pow(3),
        near_misses: 0,
    };
    for (ia, &a) in tables.iter().enumerate() {
        for (ib, &b) in tables.iter().enumerate() {
            let Some(sab) = sign[a ^ b] else { continue };
            let lhs = sign[a].unwrap() ^ sign[b].unwrap();
            for (ic, &c) in tables.iter().enumerate() {
                let (Some(sac), Some(sbc)) = (sign[a ^ c], sign[b ^ c]) else { continue };
                if sac ^ sbc == lhs && lhs == !(sab ^ sign[c].unwrap()) & full {
                    if out.triple.is_none() {
                        let triple = [bents[ia].clone(), bents[ib].clone(), bents[ic].clone()];
                        debug_assert!(classify_triple(&triple[0], &triple[1], &triple[2]).0);
                        out.triple = Some(triple);
                    }
                } else {
                    out.near_misses += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Random Maiorana-McFarland bent function on `n` variables.
pub fn random_mm_bent<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<BooleanFunction> {
    bent_magnitude(n)?;
    let half = n / 2;
    let pi = random_permutation(1 << half, rng);
    let g = random_boolean(half, rng)?;
    mm_bent(&pi, &g)
}

/// Randomized search for twisted-construction ingredients among Maiorana-McFarland functions.
pub fn find_twisted_triple_mm<R: Rng + ?Sized>(n: u32, attempts: u64, rng: &mut R) -> Result<SearchOutcome> {
    let mut out = SearchOutcome {
        triple: None,
        examined: 0,
        near_misses: 0,
    };
    for _ in 0..attempts {
        let a = random_mm_bent(n, rng)?;
        let b = random_mm_bent(n, rng)?;
        let c = random_mm_bent(n, rng)?;
        out.examined += 1;
        let (ok, near) = classify_triple(&a, &b, &c);
        out.near_misses += u64::from(near);
        if ok {
            out.triple = Some([a, b, c]);
            break;
        }
    }
    Ok(out)
}

/// Maiorana-McFarland function `f(x, y) = x . pi(y) xor g(y)` on `2m` variables, where `g` has
/// `m` variables, `x` is the low half of the index and `y` the high half.
pub fn mm_bent(pi: &[usize], g: &BooleanFunction) -> Result<BooleanFunction> {
    let m = g.n();
    let half_len = g.len();
    if pi.len() != half_len {
        return Err(Error::BadLength {
            expected: half_len,
            got: pi.len(),
        });
    }
    let mut seen = vec![false; half_len];
    for &v in pi {
        if v >= half_len {
            return Err(Error::IndexOutOfRange { index: v, len: half_len });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotBijective(v));
        }
    }
    BooleanFunction::from_fn(2 * m, |p| {
        let x = p & (half_len - 1);
        let y = p >> m;
        crate::function::dot(x, pi[y]) ^ g.get(y)
    })
}
