//! Bent, semibent and gbent decisions.
//!
//! Two independent routes decide gbentness of an octal function `f = a0 + 2 a1 + 4 a2`:
//!
//! * **direct**: compute the generalized spectrum in `Z[ζ8]` and require `|H(u)|² = 2^n` exactly;
//! * **characterization**: compute the classical spectra `W, X, Y, Z` of `a2`, `a0^a2`, `a1^a2`,
//!   `a0^a1^a2` and require all four bent (even `n`) or semibent (odd `n`) together with the
//!   product condition `X(u) Y(u) = W(u) Z(u)`.
//!
//! For odd `n` the characterization is necessary but not sufficient (the constant function on one
//! variable passes it). [`is_gbent_by_tuples`] is the sharpened component test: at every `u` the
//! normalized tuple `(X, Y, W, Z)` must be one of the eight admissible patterns.

use serde::Serialize;

use crate::cyclotomic::QuadNorm;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, OctalFunction};
use crate::transform::{component_functions, gwht_butterfly, wht_fast, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Bent,
    Semibent,
    Gbent,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Direct,
    Characterization,
    SolutionTuples,
}

/// Names of the four component functions, in `W, X, Y, Z` order.
pub const COMPONENT_NAMES: [&str; 4] = ["a2", "a0^a2", "a1^a2", "a0^a1^a2"];

/// First point at which a classification fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `|H(u)|²` differs from `2^n`.
    Norm { u: usize, norm: QuadNorm },
    /// A component spectrum value outside the bent/semibent value set.
    Component {
        u: usize,
        component: &'static str,
        value: i64,
    },
    /// `X(u) Y(u) != W(u) Z(u)`.
    Star { u: usize, lhs: i64, rhs: i64 },
    /// `(X, Y, W, Z)(u)` is not an admissible pattern.
    Tuple { u: usize, tuple: [i64; 4] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub verdict: Verdict,
    pub route: Route,
    pub witness: Option<Witness>,
}

impl ClassifyReport {
    fn gbent(route: Route, witness: Option<Witness>) -> Self {
        Self {
            verdict: if witness.is_none() { Verdict::Gbent } else { Verdict::None },
            route,
            witness,
        }
    }

    pub fn is_gbent(&self) -> bool {
        self.verdict == Verdict::Gbent
    }

    /// Verdict name as used in JSON output.
    pub fn verdict_name(&self) -> &'static str {
        match self.verdict {
            Verdict::Bent => "bent",
            Verdict::Semibent => "semibent",
            Verdict::Gbent => "gbent",
            Verdict::None => "none",
        }
    }
}

/// `|W(u)|` for a bent function on even `n`.
pub fn bent_magnitude(n: u32) -> Result<i64> {
    if n.is_multiple_of(2) {
        Ok(1 << (n / 2))
    } else {
        Err(Error::OddArity(n))
    }
}

/// Nonzero `|W(u)|` for a semibent function, or `None` for even `n` where it is not an integer.
pub fn semibent_magnitude(n: u32) -> Option<i64> {
    (n % 2 == 1).then(|| 1 << n.div_ceil(2))
}

fn first_non_bent(s: &Spectrum) -> Result<Option<usize>> {
    let m = bent_magnitude(s.n())?;
    Ok(s.values().iter().position(|v| v.abs() != m))
}

fn first_non_semibent(s: &Spectrum) -> Option<usize> {
    let m = semibent_magnitude(s.n());
    s.values()
        .iter()
        .position(|&v| v != 0 && Some(v.abs()) != m)
}

pub fn spectrum_is_bent(s: &Spectrum) -> Result<bool> {
    Ok(first_non_bent(s)?.is_none())
}

pub fn spectrum_is_semibent(s: &Spectrum) -> bool {
    first_non_semibent(s).is_none()
}

/// `|W(u)| = 2^(n/2)` for all `u`. Errors on odd `n`.
pub fn is_bent(f: &BooleanFunction) -> Result<bool> {
    spectrum_is_bent(&wht_fast(f))
}

/// `W(u) ∈ {0, ±2^((n+1)/2)}` for all `u`. For even `n` only `0` is an integer in that set, so
/// no function qualifies.
pub fn is_semibent(f: &BooleanFunction) -> bool {
    spectrum_is_semibent(&wht_fast(f))
}

/// Gbent test on the generalized spectrum: `|H(u)|² = 2^n` as an exact `Z + Z√2` value.
pub fn is_gbent_direct(f: &OctalFunction) -> ClassifyReport {
    let target = QuadNorm::from_int(1 << f.n());
    let witness = gwht_butterfly(f)
        .values()
        .iter()
        .enumerate()
        .map(|(u, h)| (u, h.norm_sq()))
        .find(|(_, norm)| *norm != target)
        .map(|(u, norm)| Witness::Norm { u, norm });
    ClassifyReport::gbent(Route::Direct, witness)
}

/// Classical spectra of `a2`, `a0^a2`, `a1^a2`, `a0^a1^a2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSpectra {
    pub w: Spectrum,
    pub x: Spectrum,
    pub y: Spectrum,
    pub z: Spectrum,
}

impl ComponentSpectra {
    pub fn n(&self) -> u32 {
        self.w.n()
    }

    pub fn len(&self) -> usize {
        self.w.values().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The spectra in `W, X, Y, Z` order.
    pub fn as_array(&self) -> [&Spectrum; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// `(X, Y, W, Z)` at `u`, the ordering of the admissible-pattern lists.
    pub fn xywz(&self, u: usize) -> [i64; 4] {
        [self.x[u], self.y[u], self.w[u], self.z[u]]
    }
}

pub fn component_spectra(f: &OctalFunction) -> ComponentSpectra {
    let [w, x, y, z] = component_functions(f).map(|g| wht_fast(&g));
    ComponentSpectra { w, x, y, z }
}

/// Checks `X(u) Y(u) = W(u) Z(u)` for every `u`, returning the first violation.
pub fn star_condition(cs: &ComponentSpectra) -> std::result::Result<(), Witness> {
    for u in 0..cs.len() {
        let lhs = cs.x[u] * cs.y[u];
        let rhs = cs.w[u] * cs.z[u];
        if lhs != rhs {
            return Err(Witness::Star { u, lhs, rhs });
        }
    }
    Ok(())
}

/// Component-characterization route: four bent (even `n`) or semibent (odd `n`) components plus
/// [`star_condition`].
pub fn is_gbent_characterized(f: &OctalFunction) -> ClassifyReport {
    characterize_spectra(&component_spectra(f))
}

/// [`is_gbent_characterized`] on precomputed component spectra.
pub fn characterize_spectra(cs: &ComponentSpectra) -> ClassifyReport {
    let even = cs.n().is_multiple_of(2);
    for (s, component) in cs.as_array().into_iter().zip(COMPONENT_NAMES) {
        let bad = if even {
            first_non_bent(s).expect("even arity")
        } else {
            first_non_semibent(s)
        };
        if let Some(u) = bad {
            return ClassifyReport::gbent(
                Route::Characterization,
                Some(Witness::Component {
                    u,
                    component,
                    value: s[u],
                }),
            );
        }
    }
    ClassifyReport::gbent(Route::Characterization, star_condition(cs).err())
}

/// `4√2 |H(u)|²` from the component values:
/// `W² - X² + 2XY + Y² - 2WZ - Z² + √2 (W² + X² + Y² + Z²)`.
///
/// Fed unnormalized spectra it returns `4√2` times the unnormalized squared modulus.
pub fn norm_from_components(cs: &ComponentSpectra, u: usize) -> QuadNorm {
    let (w, x, y, z) = (cs.w[u], cs.x[u], cs.y[u], cs.z[u]);
    QuadNorm::new(
        w * w - x * x + 2 * x * y + y * y - 2 * w * z - z * z,
        w * w + x * x + y * y + z * z,
    )
}

/// Admissible `(X, Y, W, Z)` patterns for even `n`, in units of `2^(n/2)`.
pub const EVEN_SOLUTIONS: [[i64; 4]; 8] = [
    [-1, -1, -1, -1],
    [1, 1, -1, -1],
    [-1, -1, 1, 1],
    [-1, 1, -1, 1],
    [1, -1, -1, 1],
    [-1, 1, 1, -1],
    [1, -1, 1, -1],
    [1, 1, 1, 1],
];

/// Admissible `(X, Y, W, Z)` patterns for odd `n`, in units of `2^((n+1)/2)`.
pub const ODD_SOLUTIONS: [[i64; 4]; 8] = [
    [0, 1, 0, 1],
    [0, 1, 0, -1],
    [0, -1, 0, 1],
    [0, -1, 0, -1],
    [1, 0, 1, 0],
    [1, 0, -1, 0],
    [-1, 0, 1, 0],
    [-1, 0, -1, 0],
];

/// Unit in which the admissible patterns for `n` variables are written.
pub fn solution_unit(n: u32) -> i64 {
    1 << n.div_ceil(2)
}

/// Whether a tuple, already divided by [`solution_unit`], is admissible for the parity of `n`.
pub fn tuple_is_admissible(n: u32, tuple: [i64; 4]) -> bool {
    let list = if n.is_multiple_of(2) { &EVEN_SOLUTIONS } else { &ODD_SOLUTIONS };
    list.contains(&tuple)
}

/// `(X, Y, W, Z)(u)` in units of [`solution_unit`], or `None` when a value is not a multiple.
pub fn normalized_tuple(cs: &ComponentSpectra, u: usize) -> Option<[i64; 4]> {
    let unit = solution_unit(cs.n());
    let raw = cs.xywz(u);
    if raw.iter().any(|v| v % unit != 0) {
        return None;
    }
    Some(raw.map(|v| v / unit))
}

/// First `u` whose normalized tuple is not admissible.
pub fn first_tuple_violation(cs: &ComponentSpectra) -> Option<usize> {
    (0..cs.len()).find(|&u| {
        !normalized_tuple(cs, u).is_some_and(|t| tuple_is_admissible(cs.n(), t))
    })
}

/// True when every `u` carries an admissible `(X, Y, W, Z)` pattern.
pub fn solution_tuple_check(cs: &ComponentSpectra) -> bool {
    first_tuple_violation(cs).is_none()
}

/// Component route sharpened to the admissible patterns; agrees with [`is_gbent_direct`] for both
/// parities of `n`.
pub fn is_gbent_by_tuples(f: &OctalFunction) -> ClassifyReport {
    tuples_spectra(&component_spectra(f))
}

/// [`is_gbent_by_tuples`] on precomputed component spectra.
pub fn tuples_spectra(cs: &ComponentSpectra) -> ClassifyReport {
    let witness = first_tuple_violation(cs).map(|u| Witness::Tuple {
        u,
        tuple: cs.xywz(u),
    });
    ClassifyReport::gbent(Route::SolutionTuples, witness)
}

/// Bent/semibent status of a Boolean function, as reported by the `classify` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BooleanClassification {
    pub n: u32,
    /// `None` for odd `n`, where bentness is undefined.
    pub bent: Option<bool>,
    pub semibent: bool,
}

pub fn classify_boolean(f: &BooleanFunction) -> BooleanClassification {
    let s = wht_fast(f);
    BooleanClassification {
        n: f.n(),
        bent: spectrum_is_bent(&s).ok(),
        semibent: spectrum_is_semibent(&s),
    }
}
