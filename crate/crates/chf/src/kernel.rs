//! Gamma-family primitives and the Pochhammer symbol.
//!
//! Gamma is computed by a Stirling series after shifting the argument up by
//! recurrence, with the reflection formula for arguments below 1/2. Poles at
//! non-positive integers are represented as values ([`GammaValue::Pole`]),
//! not errors, so that reciprocal-gamma factors vanish cleanly in the
//! Tricomi combination formulas.

use crate::error::{EvalError, Result};
use crate::param::ExactParam;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Stirling coefficients B_{2n} / (2n (2n-1)) for ln Gamma, n = 1..8.
const LN_GAMMA_STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    7.0 / 1092.0,
    -3617.0 / 122400.0,
];

/// B_{2n} / (2n) for the digamma asymptotic series, n = 1..8.
const DIGAMMA_STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// n! for n = 0..=20 (exact in f64 up to 18!).
const FACTORIAL: [f64; 21] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
];

const STIRLING_SHIFT: f64 = 12.0;

/// A gamma value that may be a pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaKind {
    Finite(f64),
    Pole,
}

/// Result of [`gamma`]: the value (or pole marker) plus the reciprocal,
/// which is finite for every real argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaValue {
    pub kind: GammaKind,
    pub reciprocal: f64,
}

impl GammaValue {
    pub fn is_pole(&self) -> bool {
        matches!(self.kind, GammaKind::Pole)
    }

    pub fn finite(&self) -> Option<f64> {
        match self.kind {
            GammaKind::Finite(v) => Some(v),
            GammaKind::Pole => None,
        }
    }
}

/// sin(pi x) with exact range reduction on the integer part.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (std::f64::consts::PI * r).sin();
    if (n as i64) & 1 == 0 {
        s
    } else {
        -s
    }
}

/// cos(pi x) with exact range reduction on the integer part.
pub fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let c = (std::f64::consts::PI * r).cos();
    if (n as i64) & 1 == 0 {
        c
    } else {
        -c
    }
}

/// ln Gamma(x) for x > 0 via Stirling series after shifting to x >= 12.
fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut shift = 0.0f64;
    let mut y = x;
    while y < STIRLING_SHIFT {
        shift += y.ln();
        y += 1.0;
    }
    let mut series = 0.0;
    let inv2 = 1.0 / (y * y);
    let mut pow = 1.0 / y;
    for c in LN_GAMMA_STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    (y - 0.5) * y.ln() - y + 0.5 * (2.0 * std::f64::consts::PI).ln() + series - shift
}

/// Gamma(x) for x > 0. Shifts into the Stirling region by dividing the
/// recurrence product out of Gamma(x + k), which keeps relative error at the
/// few-ulp level instead of exponentiating an absolute log error.
fn gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x == x.floor() && x <= 20.0 {
        return FACTORIAL[(x as usize) - 1];
    }
    let mut prod = 1.0f64;
    let mut y = x;
    while y < STIRLING_SHIFT {
        prod *= y;
        y += 1.0;
    }
    let mut series = 0.0;
    let inv2 = 1.0 / (y * y);
    let mut pow = 1.0 / y;
    for c in LN_GAMMA_STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    let core = (2.0 * std::f64::consts::PI / y).sqrt() * (y / std::f64::consts::E).powf(y);
    core * series.exp() / prod
}

/// Gamma as a plain f64: +/-inf at non-positive integer poles.
pub fn gamma_f(x: f64) -> f64 {
    if x >= 0.5 {
        gamma_pos(x)
    } else {
        if x == x.floor() {
            return f64::INFINITY;
        }
        // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
        std::f64::consts::PI / (sin_pi(x) * gamma_pos(1.0 - x))
    }
}

/// Reciprocal gamma 1/Gamma(x); entire, exactly 0 at non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if x >= 0.5 {
        1.0 / gamma_pos(x)
    } else if x == x.floor() {
        0.0
    } else {
        sin_pi(x) * gamma_pos(1.0 - x) / std::f64::consts::PI
    }
}

/// (sign, ln |Gamma(x)|) for non-pole x.
pub fn sign_ln_gamma(x: f64) -> (f64, f64) {
    if x > 0.0 {
        (1.0, ln_gamma_pos(x))
    } else {
        // |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x)); sign alternates per unit
        // interval below zero.
        let s = sin_pi(x);
        let ln_abs = std::f64::consts::PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x);
        (s.signum(), ln_abs)
    }
}

/// Gamma on an exact-tagged argument. A tagged non-positive integer (or an
/// untagged value that is exactly a non-positive integer float) is a pole.
pub fn gamma(x: ExactParam) -> GammaValue {
    let v = x.value();
    let pole = x.is_nonpositive_integer() || (v <= 0.0 && v == v.floor());
    if pole {
        GammaValue {
            kind: GammaKind::Pole,
            reciprocal: 0.0,
        }
    } else {
        let g = gamma_f(v);
        GammaValue {
            kind: GammaKind::Finite(g),
            reciprocal: rgamma(v),
        }
    }
}

/// Digamma psi(x) = Gamma'(x)/Gamma(x).
///
/// Shifts to x >= 10 via psi(x+1) = psi(x) + 1/x, then sums the Bernoulli
/// asymptotic series; negative arguments go through the reflection
/// psi(x) = psi(1-x) - pi cot(pi x).
pub fn digamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.floor() {
        return Err(EvalError::PoleArgument(x));
    }
    Ok(digamma_unchecked(x))
}

pub(crate) fn digamma_unchecked(x: f64) -> f64 {
    if x < 0.0 {
        let cot = cos_pi(x) / sin_pi(x);
        return digamma_unchecked(1.0 - x) - std::f64::consts::PI * cot;
    }
    let mut result = 0.0;
    let mut y = x;
    while y < 10.0 {
        result -= 1.0 / y;
        y += 1.0;
    }
    result += y.ln() - 0.5 / y;
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    for c in DIGAMMA_STIRLING {
        result -= c * pow;
        pow *= inv2;
    }
    result
}

/// Pochhammer symbol (a)_s = a (a+1) ... (a+s-1).
///
/// The product definition is total: it is exactly 0 when a = -m is a
/// non-positive integer and s >= m+1, and never 0 otherwise. Large s goes
/// through log-gamma differences with explicit sign tracking.
pub fn pochhammer(a: ExactParam, s: usize) -> f64 {
    let av = a.value();
    if let Some(k) = a.as_integer() {
        if k <= 0 && s as i64 >= 1 - k {
            return 0.0;
        }
    }
    if s <= 64 {
        let mut p = 1.0f64;
        for i in 0..s {
            p *= av + i as f64;
        }
        return p;
    }
    // a + i = 0 for some 0 <= i < s only if a is a non-positive integer float
    if av <= 0.0 && av == av.floor() && -av < s as f64 {
        return 0.0;
    }
    let (s1, l1) = sign_ln_gamma(av + s as f64);
    let (s0, l0) = sign_ln_gamma(av);
    s1 * s0 * (l1 - l0).exp()
}

/// Pochhammer of a plain f64 starting point (no exact-zero tag handling
/// beyond the product itself hitting an exact zero factor).
pub fn pochhammer_f(a: f64, s: usize) -> f64 {
    let mut p = 1.0f64;
    for i in 0..s {
        p *= a + i as f64;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_small_integers() {
        // Gamma(n) = (n-1)!
        assert_eq!(gamma(ExactParam::integer(5)).finite(), Some(24.0));
        assert_eq!(gamma(ExactParam::integer(1)).finite(), Some(1.0));
    }

    #[test]
    fn gamma_pole_at_nonpositive_integers() {
        let g = gamma(ExactParam::integer(0));
        assert!(g.is_pole());
        assert_eq!(g.reciprocal, 0.0);
        let g = gamma(ExactParam::integer(-7));
        assert!(g.is_pole());
        // untagged exact non-positive integer float is also treated as a pole
        assert!(gamma(ExactParam::non_integer(-2.0)).is_pole());
    }

    #[test]
    fn gamma_half_matches_sqrt_pi() {
        // Frozen from the 50-digit oracle (see oracle module tests):
        // Gamma(1/2) = 1.7724538509055160272981674833411451827975494561224...
        let g = gamma(ExactParam::non_integer(0.5)).finite().unwrap();
        assert_relative_eq!(g, 1.772_453_850_905_516_0, max_relative = 1e-14);
    }

    #[test]
    fn gamma_accuracy_across_range() {
        // spot values frozen from the extended-precision oracle
        let cases = [
            (0.5, 1.7724538509055160273),
            (1.5, 0.88622692545275801365),
            (4.3, 8.8553433604540349144),
            (10.2, 570499.02784103506001),
            (25.7, 5.8809109644501848739e24),
            (49.5, 8.6676018431352723453e61),
            (-0.5, -3.5449077018110320546),
            (-2.5, -0.94530872048294188123),
            (-6.3, -0.0030542314729989004814),
            (-15.2, 2.3593501009064371911e-12),
        ];
        for (x, want) in cases {
            let got = gamma_f(x);
            assert_relative_eq!(got, want, max_relative = 1e-13);
        }
    }

    #[test]
    fn reflection_identity() {
        // Gamma(u) Gamma(1-u) sin(pi u) / pi = 1
        let mut u = -9.7;
        while u <= 9.7 {
            if (u - u.round()).abs() > 1e-3 {
                let lhs = gamma_f(u) * gamma_f(1.0 - u) * sin_pi(u) / std::f64::consts::PI;
                assert_relative_eq!(lhs, 1.0, max_relative = 1e-11);
            }
            u += 0.37;
        }
    }

    #[test]
    fn rgamma_is_entire() {
        for k in -30..0 {
            assert_eq!(rgamma(k as f64), 0.0);
        }
        assert_relative_eq!(rgamma(3.0), 0.5, max_relative = 1e-14);
        assert_relative_eq!(
            rgamma(-1.5),
            1.0 / gamma_f(-1.5),
            max_relative = 1e-13
        );
    }

    #[test]
    fn digamma_values() {
        // psi(1) = -gamma, frozen from the Euler-Maclaurin oracle
        assert_relative_eq!(digamma(1.0).unwrap(), -EULER_GAMMA, max_relative = 1e-13);
        // psi(2) = 1 - gamma by the recurrence
        assert_relative_eq!(
            digamma(2.0).unwrap(),
            1.0 - EULER_GAMMA,
            max_relative = 1e-13
        );
        assert_eq!(digamma(0.0), Err(EvalError::PoleArgument(0.0)));
        assert_eq!(digamma(-4.0), Err(EvalError::PoleArgument(-4.0)));
    }

    #[test]
    fn digamma_recurrence() {
        let mut x = 0.1;
        while x < 40.0 {
            let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
            assert!(lhs.abs() < 1e-12 * (1.0 + digamma(x + 1.0).unwrap().abs()));
            x += 0.613;
        }
    }

    #[test]
    fn digamma_negative_reflection() {
        // psi(-0.5) = 2 - gamma - 2 ln 2 + ... frozen reference value
        assert_relative_eq!(
            digamma(-0.5).unwrap(),
            0.036489973978576520559,
            max_relative = 1e-12
        );
    }

    #[test]
    fn pochhammer_rules() {
        // (a)_0 = 1 for any a
        assert_eq!(pochhammer(ExactParam::non_integer(0.37), 0), 1.0);
        assert_eq!(pochhammer(ExactParam::integer(-5), 0), 1.0);
        // rule 3: (-m)_s = 0 for s >= m+1
        assert_eq!(pochhammer(ExactParam::integer(-2), 3), 0.0);
        assert_eq!(pochhammer(ExactParam::integer(-2), 100), 0.0);
        // direct products
        assert_eq!(pochhammer(ExactParam::integer(3), 2), 12.0);
        assert_eq!(pochhammer(ExactParam::integer(-3), 2), 6.0);
        // never zero off the non-positive integers
        assert!(pochhammer(ExactParam::non_integer(-2.5), 10) != 0.0);
    }

    #[test]
    fn pochhammer_recurrence_and_gamma_consistency() {
        let params = [-3.5, -2.0, -0.3, 0.5, 1.0, 2.7, 6.0];
        for &av in &params {
            let a = if av == av.floor() {
                ExactParam::integer(av as i64)
            } else {
                ExactParam::non_integer(av)
            };
            for s in 0..=30 {
                let lhs = pochhammer(a, s + 1);
                let rhs = pochhammer(a, s) * (av + s as f64);
                let scale = lhs.abs().max(rhs.abs()).max(1e-300);
                assert!(
                    (lhs - rhs).abs() <= 1e-14 * scale,
                    "recurrence failed at a={av}, s={s}"
                );
            }
            if !a.is_nonpositive_integer() && !(av <= 0.0 && av == av.floor()) {
                for s in 0..=20 {
                    let lhs = pochhammer(a, s) * gamma_f(av);
                    let rhs = gamma_f(av + s as f64);
                    if lhs.is_finite() && rhs.is_finite() {
                        assert_relative_eq!(lhs, rhs, max_relative = 1e-11);
                    }
                }
            }
        }
    }

    #[test]
    fn pochhammer_large_s_log_path() {
        let a = ExactParam::non_integer(0.5);
        // (0.5)_100 = Gamma(100.5)/Gamma(0.5)
        let direct = {
            let mut p = 1.0f64;
            for i in 0..100 {
                p *= 0.5 + i as f64;
            }
            p
        };
        assert_relative_eq!(pochhammer(a, 100), direct, max_relative = 1e-11);
    }
}
