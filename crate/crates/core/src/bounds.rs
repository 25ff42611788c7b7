//! Bound formulas in the log domain, λ, and per-forest bound reports.
//!
//! Every bound is returned as its natural logarithm so that values around
//! 10^29 and beyond stay representable. Verdicts against exact counts use
//! integer arithmetic wherever the bound is a power of an integer or a
//! rational (`√5^γ`, `(2/5)√5^γ` and the conjectured total-domination
//! bound); everything else is compared as `ln Γ ≤ ln B + ε` with
//! `ε = 1e-9 · max(1, |ln B|)`.

use crate::dp::{count, ln_count, Mode};
use crate::error::{Error, Result};
use crate::forest::Forest;
use num_bigint::BigUint;
use std::fmt;

/// Relative tolerance for log-domain comparisons.
pub const LOG_TOLERANCE: f64 = 1e-9;

pub fn log_tolerance(ln_bound: f64) -> f64 {
    LOG_TOLERANCE * ln_bound.abs().max(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    /// `√5^γ`
    Sqrt5,
    /// `(2/5)·√5^γ`, attained from above by the extremal families.
    TwoFifthsSqrt5,
    /// `((1+√13)/2)^γ`
    Edwards,
    /// `r^γ` with `r` the largest root of `x³ − x² − 4x + 1`.
    AlvaradoRootPow,
    /// Minimum of the three Henning–Mohr–Rautenbach bounds below.
    HenningMin,
    /// `(8√e)^{γ_t} · ((n − γ_t/2)/(γ_t/2))^{γ_t/2}`
    HenningGamma,
    /// `(1+√2)^{n−γ_t}`
    HenningGap,
    /// `1.4865^n`
    HenningOrder,
    /// `((n − γ_t/2)/(γ_t/2))^{γ_t/2}`
    Conjecture2,
    /// `95^{n/13}` (minimal dominating sets of trees).
    RoteN,
    /// `γ·2^γ / ln γ`, an O(·) expression with no stated constant.
    Conjecture1Comparator,
}

impl BoundName {
    pub const ALL: [BoundName; 11] = [
        BoundName::Sqrt5,
        BoundName::TwoFifthsSqrt5,
        BoundName::Edwards,
        BoundName::AlvaradoRootPow,
        BoundName::HenningMin,
        BoundName::HenningGamma,
        BoundName::HenningGap,
        BoundName::HenningOrder,
        BoundName::Conjecture2,
        BoundName::RoteN,
        BoundName::Conjecture1Comparator,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::Sqrt5 => "sqrt5",
            BoundName::TwoFifthsSqrt5 => "two_fifths_sqrt5",
            BoundName::Edwards => "edwards",
            BoundName::AlvaradoRootPow => "alvarado_root_pow",
            BoundName::HenningMin => "henning_min",
            BoundName::HenningGamma => "henning_gamma",
            BoundName::HenningGap => "henning_gap",
            BoundName::HenningOrder => "henning_order",
            BoundName::Conjecture2 => "conjecture2",
            BoundName::RoteN => "rote_n",
            BoundName::Conjecture1Comparator => "conjecture1_comparator",
        }
    }

    pub fn parse(s: &str) -> Option<BoundName> {
        BoundName::ALL.into_iter().find(|b| b.as_str() == s)
    }

    pub fn kind(&self) -> BoundKind {
        match self {
            BoundName::Sqrt5
            | BoundName::Edwards
            | BoundName::AlvaradoRootPow
            | BoundName::HenningMin
            | BoundName::HenningGamma
            | BoundName::HenningGap
            | BoundName::HenningOrder => BoundKind::ProvenUpper,
            BoundName::Conjecture2 => BoundKind::ConjecturedUpper,
            BoundName::TwoFifthsSqrt5 => BoundKind::Lower,
            BoundName::RoteN | BoundName::Conjecture1Comparator => BoundKind::DisplayOnly,
        }
    }

    /// Which count the bound speaks about.
    pub fn mode(&self) -> Mode {
        match self {
            BoundName::HenningMin
            | BoundName::HenningGamma
            | BoundName::HenningGap
            | BoundName::HenningOrder
            | BoundName::Conjecture2 => Mode::Total,
            _ => Mode::Domination,
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// A theorem: a failing verdict is a defect.
    ProvenUpper,
    /// Conjectured upper bound: a failing verdict is a counterexample.
    ConjecturedUpper,
    /// Passes when the count strictly exceeds the value.
    Lower,
    /// Shown for comparison; never judged.
    DisplayOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    DisplayOnly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::DisplayOnly => "display-only",
        })
    }
}

fn check_gamma(gamma: usize, min: usize) -> Result<f64> {
    if gamma < min {
        return Err(Error::Domain(format!("needs gamma >= {min}, got {gamma}")));
    }
    Ok(gamma as f64)
}

fn check_order(n: usize, gamma: usize) -> Result<f64> {
    if n < gamma {
        return Err(Error::Domain(format!(
            "needs n >= gamma, got n={n} gamma={gamma}"
        )));
    }
    Ok(n as f64)
}

/// `ln((n − g/2) / (g/2))`
fn ln_ratio(n: f64, g: f64) -> f64 {
    ((n - g / 2.0) / (g / 2.0)).ln()
}

/// Natural logarithm of the named bound. `gamma` is γ or γ_t depending on
/// the bound.
pub fn bound_value(name: BoundName, n: usize, gamma: usize) -> Result<f64> {
    let ln5 = 5f64.ln();
    Ok(match name {
        BoundName::Sqrt5 => check_gamma(gamma, 1)? / 2.0 * ln5,
        BoundName::TwoFifthsSqrt5 => 0.4f64.ln() + check_gamma(gamma, 1)? / 2.0 * ln5,
        BoundName::Edwards => check_gamma(gamma, 1)? * ((1.0 + 13f64.sqrt()) / 2.0).ln(),
        BoundName::AlvaradoRootPow => check_gamma(gamma, 1)? * alvarado_root().ln(),
        BoundName::HenningGamma => {
            let g = check_gamma(gamma, 1)?;
            let n = check_order(n, gamma)?;
            g * (8.0f64.ln() + 0.5) + g / 2.0 * ln_ratio(n, g)
        }
        BoundName::HenningGap => {
            check_gamma(gamma, 1)?;
            let n = check_order(n, gamma)?;
            (n - gamma as f64) * (1.0 + 2f64.sqrt()).ln()
        }
        BoundName::HenningOrder => {
            check_gamma(gamma, 1)?;
            check_order(n, gamma)? * 1.4865f64.ln()
        }
        BoundName::HenningMin => [
            BoundName::HenningGamma,
            BoundName::HenningGap,
            BoundName::HenningOrder,
        ]
        .into_iter()
        .map(|b| bound_value(b, n, gamma))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min),
        BoundName::Conjecture2 => {
            let g = check_gamma(gamma, 1)?;
            let n = check_order(n, gamma)?;
            g / 2.0 * ln_ratio(n, g)
        }
        BoundName::RoteN => n as f64 / 13.0 * 95f64.ln(),
        BoundName::Conjecture1Comparator => {
            let g = check_gamma(gamma, 2)?;
            g.ln() + g * 2f64.ln() - g.ln().ln()
        }
    })
}

/// Largest real root of `x³ − x² − 4x + 1`, bracketed in `[2, 3]`.
pub fn alvarado_root() -> f64 {
    let p = |x: f64| ((x - 1.0) * x - 4.0) * x + 1.0;
    let dp = |x: f64| (3.0 * x - 2.0) * x - 4.0;
    let (mut lo, mut hi) = (2.0f64, 3.0f64);
    debug_assert!(p(lo) < 0.0 && p(hi) > 0.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..3 {
        x -= p(x) / dp(x);
    }
    x
}

/// `ln λ` for a forest with `n` vertices, total domination number
/// `gamma_t` and `ln Γ_t = ln_count`.
pub fn ln_lambda_from_counts(n: usize, gamma_t: usize, ln_count: f64) -> Result<f64> {
    let g = check_gamma(gamma_t, 1)?;
    let n = check_order(n, gamma_t)?;
    Ok(ln_count / g - 0.5 * ln_ratio(n, g))
}

/// λ = Γ_t^{1/γ_t} · ((n − γ_t/2)/(γ_t/2))^{−1/2}. Values above 1 are
/// counterexamples to the conjectured bound.
pub fn lambda(f: &Forest) -> Result<f64> {
    let c = count(f, Mode::Total)?;
    Ok(ln_lambda_from_counts(f.vertex_count(), c.size, ln_count(&c.count))?.exp())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundEntry {
    pub name: BoundName,
    pub kind: BoundKind,
    pub ln_value: f64,
    pub verdict: Verdict,
    /// The verdict came from exact integer arithmetic.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub mode: Mode,
    pub n: usize,
    /// γ or γ_t.
    pub size: usize,
    pub actual: BigUint,
    pub ln_actual: f64,
    pub bounds: Vec<BoundEntry>,
    /// Only in total mode.
    pub lambda: Option<f64>,
}

impl BoundReport {
    pub fn verdict(&self, name: BoundName) -> Option<Verdict> {
        self.bounds
            .iter()
            .find(|b| b.name == name)
            .map(|b| b.verdict)
    }

    /// True unless a proven upper bound failed.
    pub fn theorems_hold(&self) -> bool {
        self.bounds
            .iter()
            .all(|b| b.kind != BoundKind::ProvenUpper || b.verdict == Verdict::Pass)
    }
}

/// Which bounds a report shows for each mode.
pub fn bounds_for(mode: Mode) -> &'static [BoundName] {
    match mode {
        Mode::Domination => &[
            BoundName::Sqrt5,
            BoundName::TwoFifthsSqrt5,
            BoundName::Edwards,
            BoundName::AlvaradoRootPow,
            BoundName::RoteN,
            BoundName::Conjecture1Comparator,
        ],
        Mode::Total => &[
            BoundName::HenningMin,
            BoundName::HenningGamma,
            BoundName::HenningGap,
            BoundName::HenningOrder,
            BoundName::Conjecture2,
        ],
    }
}

/// Judges `actual` against one bound.
pub fn judge(name: BoundName, n: usize, size: usize, actual: &BigUint) -> Result<BoundEntry> {
    let ln_value = bound_value(name, n, size)?;
    let kind = name.kind();
    let big = |x: usize| BigUint::from(x);
    let square = actual * actual;
    let (verdict, exact) = match name {
        // Γ² ≤ 5^γ
        BoundName::Sqrt5 => (square <= big(5).pow(size as u32), true),
        // 25·Γ² > 4·5^γ
        BoundName::TwoFifthsSqrt5 => (square * 25u32 > big(5).pow(size as u32) * 4u32, true),
        // Γ²·γ^γ ≤ (2n − γ)^γ
        BoundName::Conjecture2 => (
            square * big(size).pow(size as u32) <= big(2 * n - size).pow(size as u32),
            true,
        ),
        _ => (
            ln_count(actual) <= ln_value + log_tolerance(ln_value),
            false,
        ),
    };
    let verdict = match (kind, verdict) {
        (BoundKind::DisplayOnly, _) => Verdict::DisplayOnly,
        (_, true) => Verdict::Pass,
        (_, false) => Verdict::Fail,
    };
    Ok(BoundEntry {
        name,
        kind,
        ln_value,
        verdict,
        exact: exact && kind != BoundKind::DisplayOnly,
    })
}

pub fn bound_report(f: &Forest, mode: Mode) -> Result<BoundReport> {
    let c = count(f, mode)?;
    let n = f.vertex_count();
    let bounds = bounds_for(mode)
        .iter()
        .filter_map(|&name| match judge(name, n, c.size, &c.count) {
            Ok(entry) => Some(Ok(entry)),
            // e.g. the γ·2^γ/ln γ comparator at γ = 1
            Err(Error::Domain(_)) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<Vec<_>>>()?;
    let ln_actual = ln_count(&c.count);
    let lambda = match mode {
        Mode::Total => Some(ln_lambda_from_counts(n, c.size, ln_actual)?.exp()),
        Mode::Domination => None,
    };
    Ok(BoundReport {
        mode,
        n,
        size: c.size,
        actual: c.count,
        ln_actual,
        bounds,
        lambda,
    })
}
