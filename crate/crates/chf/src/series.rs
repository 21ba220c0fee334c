//! The two power-series solutions of Kummer's equation:
//! M(a,b,z) (Frobenius exponent 0) and M-tilde(a,b,z) = z^{1-b} M(1+a-b, 2-b, z)
//! (Frobenius exponent 1-b).

use crate::error::{EvalError, Result};
use crate::jet::Jet;
use crate::param::{EvalConfig, ExactParam};

/// How a series evaluation terminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Converged,
    /// The series truncated exactly because a is a non-positive integer.
    PolynomialExact,
    MaxTermsHit,
}

/// A numeric value with a truncation-error estimate.
#[derive(Debug, Clone, Copy)]
pub struct SeriesEval {
    pub value: f64,
    /// Upper estimate of the absolute truncation error; at least the
    /// magnitude of the first neglected term when converged.
    pub abs_error_est: f64,
    pub terms_used: usize,
    pub terminated: Termination,
}

/// Internal jet + bookkeeping result shared by all series evaluators.
#[derive(Debug, Clone, Copy)]
pub(crate) struct JetEval {
    pub jet: Jet,
    pub abs_error_est: f64,
    pub terms_used: usize,
    pub terminated: Termination,
    /// Largest |partial sum| seen while summing; the ratio to the final
    /// value measures cancellation.
    pub max_partial: f64,
}

impl JetEval {
    pub fn to_series_eval(self) -> SeriesEval {
        SeriesEval {
            value: self.jet.f,
            abs_error_est: self.abs_error_est,
            terms_used: self.terms_used,
            terminated: self.terminated,
        }
    }
}

fn undefined_m(b: &ExactParam) -> EvalError {
    EvalError::UndefinedFunction(format!(
        "M(a,b,z) is not defined for b = {b} (non-positive integer)"
    ))
}

/// Is b unusable for M? Tagged non-positive integers, plus untagged floats
/// that are exactly non-positive integers (the series would divide by an
/// exact zero Pochhammer factor either way).
fn m_undefined_for(b: &ExactParam) -> bool {
    b.is_nonpositive_integer() || (b.value() <= 0.0 && b.value() == b.value().floor())
}

/// Raw ascending-series sum of M(a,b,z) with term-wise differentiated
/// derivatives. Assumes b is usable; no Kummer transformation applied.
pub(crate) fn kummer_m_series_raw(
    av: f64,
    bv: f64,
    poly_degree: Option<usize>,
    z: f64,
    cfg: &EvalConfig,
) -> Result<JetEval> {
    if z == 0.0 {
        return Ok(JetEval {
            jet: Jet {
                f: 1.0,
                df: av / bv,
                d2f: av * (av + 1.0) / (bv * (bv + 1.0)),
            },
            abs_error_est: 0.0,
            terms_used: 1,
            terminated: poly_degree
                .map(|_| Termination::PolynomialExact)
                .unwrap_or(Termination::Converged),
            max_partial: 1.0,
        });
    }

    let mut term = 1.0f64; // (a)_s / (b)_s z^s / s!
    let mut sum = Jet::ZERO;
    let mut max_partial = 0.0f64;
    let inv_z = 1.0 / z;
    let inv_z2 = inv_z * inv_z;

    // Exact polynomial: a = -m truncates after m+1 terms.
    if let Some(m) = poly_degree {
        for s in 0..=m {
            let sf = s as f64;
            sum = sum
                + Jet {
                    f: term,
                    df: sf * term * inv_z,
                    d2f: sf * (sf - 1.0) * term * inv_z2,
                };
            max_partial = max_partial.max(sum.f.abs());
            term *= (av + sf) / (bv + sf) * z / (sf + 1.0);
        }
        return Ok(JetEval {
            jet: sum,
            abs_error_est: 0.0,
            terms_used: m + 1,
            terminated: Termination::PolynomialExact,
            max_partial,
        });
    }

    let mut prev_small = false;
    for s in 0..cfg.max_terms {
        let sf = s as f64;
        sum = sum
            + Jet {
                f: term,
                df: sf * term * inv_z,
                d2f: sf * (sf - 1.0) * term * inv_z2,
            };
        max_partial = max_partial.max(sum.f.abs());
        let next = term * (av + sf) / (bv + sf) * z / (sf + 1.0);
        let threshold = cfg.tolerance * max_partial.max(1.0);
        let small = next.abs() < threshold && term.abs() < threshold;
        if small && prev_small {
            return Ok(JetEval {
                jet: sum,
                abs_error_est: 2.0 * next.abs().max(f64::MIN_POSITIVE),
                terms_used: s + 1,
                terminated: Termination::Converged,
                max_partial,
            });
        }
        prev_small = small;
        term = next;
        if !term.is_finite() {
            return Err(EvalError::NonConvergence(format!(
                "M series overflowed at term {s} (a={av}, b={bv}, z={z})"
            )));
        }
    }
    Err(EvalError::NonConvergence(format!(
        "M series hit the {}-term cap with error estimate {:.3e} (a={av}, b={bv}, z={z})",
        cfg.max_terms,
        term.abs()
    )))
}

fn poly_degree_of(a: &ExactParam) -> Option<usize> {
    if let Some(k) = a.as_integer() {
        if k <= 0 {
            return Some((-k) as usize);
        }
    }
    // untagged float that is exactly a non-positive integer still truncates
    let v = a.value();
    if v <= 0.0 && v == v.floor() && -v < 1e9 {
        return Some(-v as usize);
    }
    None
}

/// Jet of M(a,b,z).
///
/// For z < -12 (and a not a polynomial case) the first Kummer
/// transformation M(a,b,z) = e^z M(b-a,b,-z) is applied before summing, so
/// the alternating series is never summed in its cancellation regime.
pub(crate) fn kummer_m_jet(
    a: &ExactParam,
    b: &ExactParam,
    z: f64,
    cfg: &EvalConfig,
) -> Result<JetEval> {
    if m_undefined_for(b) {
        return Err(undefined_m(b));
    }
    let poly = poly_degree_of(a);
    if z < -12.0 && poly.is_none() {
        // e^z M(b-a, b, -z), summed at -z > 0
        let b_minus_a = ExactParam::one_plus_a_minus_b(b, a).shift(-1);
        let inner = kummer_m_series_raw(
            b_minus_a.value(),
            b.value(),
            poly_degree_of(&b_minus_a),
            -z,
            cfg,
        )?;
        let jet = Jet::exp_scaled(z, 1.0) * inner.jet.reflect_argument();
        let scale = z.exp();
        return Ok(JetEval {
            jet,
            abs_error_est: inner.abs_error_est * scale,
            terms_used: inner.terms_used,
            terminated: inner.terminated,
            max_partial: inner.max_partial * scale,
        });
    }
    kummer_m_series_raw(a.value(), b.value(), poly, z, cfg)
}

/// Kummer function M(a,b,z).
///
/// Not defined for b a non-positive integer. Exact polynomial of degree m
/// when a = -m is a non-positive integer.
pub fn kummer_m(a: &ExactParam, b: &ExactParam, z: f64, cfg: &EvalConfig) -> Result<SeriesEval> {
    kummer_m_jet(a, b, z, cfg).map(JetEval::to_series_eval)
}

fn undefined_mtilde(b: &ExactParam) -> EvalError {
    EvalError::UndefinedFunction(format!(
        "M-tilde(a,b,z) is not defined for b = {b} (integer >= 2)"
    ))
}

/// Jet of M-tilde(a,b,z) = z^{1-b} M(1+a-b, 2-b, z).
pub(crate) fn m_tilde_jet(
    a: &ExactParam,
    b: &ExactParam,
    z: f64,
    cfg: &EvalConfig,
) -> Result<JetEval> {
    if b.is_integer_ge2() || (b.value() >= 2.0 && b.value() == b.value().floor()) {
        return Err(undefined_mtilde(b));
    }
    if z <= 0.0 {
        return Err(EvalError::DomainError(format!(
            "M-tilde requires z > 0 (z^(1-b) principal branch), got z = {z}"
        )));
    }
    let a2 = ExactParam::one_plus_a_minus_b(a, b);
    let b2 = b.sub_from(2);
    let inner = kummer_m_jet(&a2, &b2, z, cfg)?;
    let pw = Jet::power(z, 1.0 - b.value());
    Ok(JetEval {
        jet: pw * inner.jet,
        abs_error_est: inner.abs_error_est * pw.f.abs(),
        terms_used: inner.terms_used,
        terminated: inner.terminated,
        max_partial: inner.max_partial * pw.f.abs(),
    })
}

/// Second power-series solution M-tilde(a,b,z) = z^{1-b} M(1+a-b, 2-b, z).
///
/// Not defined for b an integer >= 2; requires z > 0. Equals M(a,b,z)
/// exactly when b = 1.
pub fn m_tilde(a: &ExactParam, b: &ExactParam, z: f64, cfg: &EvalConfig) -> Result<SeriesEval> {
    m_tilde_jet(a, b, z, cfg).map(JetEval::to_series_eval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn m_at_zero_is_one() {
        let r = kummer_m(
            &ExactParam::non_integer(0.37),
            &ExactParam::non_integer(1.9),
            0.0,
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn m_two_term_polynomial() {
        // M(-1, 2, 2) = 1 - z/b = 1 - 2/2 = 0
        let r = kummer_m(
            &ExactParam::integer(-1),
            &ExactParam::integer(2),
            2.0,
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.terminated, Termination::PolynomialExact);
        assert_eq!(r.terms_used, 2);
    }

    #[test]
    fn m_undefined_for_nonpositive_integer_b() {
        let err = kummer_m(
            &ExactParam::non_integer(0.5),
            &ExactParam::integer(-1),
            1.0,
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, EvalError::UndefinedFunction(_)));
    }

    #[test]
    fn polynomial_matches_horner() {
        // Independent Horner evaluation of the truncated series for a = -m.
        let m = 5usize;
        let a = ExactParam::integer(-(m as i64));
        let b = ExactParam::non_integer(1.3);
        let z = 2.7;
        let mut coeffs = vec![0.0f64; m + 1];
        let mut c = 1.0;
        for (s, slot) in coeffs.iter_mut().enumerate() {
            *slot = c;
            c *= (-(m as f64) + s as f64) / (1.3 + s as f64) / (s as f64 + 1.0);
        }
        let mut horner = 0.0;
        for &cs in coeffs.iter().rev() {
            horner = horner * z + cs;
        }
        let r = kummer_m(&a, &b, z, &cfg()).unwrap();
        assert_eq!(r.terms_used, m + 1);
        assert_eq!(r.value, horner);
    }

    #[test]
    fn first_kummer_transformation() {
        // M(a,b,z) = e^z M(b-a, b, -z); both sides through this evaluator.
        let a = ExactParam::non_integer(0.3);
        let b = ExactParam::non_integer(1.7);
        let lhs = kummer_m(&a, &b, 0.5, &cfg()).unwrap().value;
        let rhs = 0.5f64.exp()
            * kummer_m(&ExactParam::non_integer(1.4), &b, -0.5, &cfg())
                .unwrap()
                .value;
        assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
    }

    #[test]
    fn negative_z_transform_avoids_cancellation() {
        // M(0.4, 1.9, -25): the raw alternating sum would lose ~10 digits.
        let a = ExactParam::non_integer(0.4);
        let b = ExactParam::non_integer(1.9);
        let r = kummer_m(&a, &b, -25.0, &cfg()).unwrap();
        // reference frozen from the extended-precision oracle (see oracle tests)
        assert_relative_eq!(r.value, 0.29703556536337126205, max_relative = 1e-11);
    }

    #[test]
    fn m_tilde_equals_m_at_b_one() {
        let a = ExactParam::non_integer(0.42);
        let b = ExactParam::integer(1);
        let z = 1.37;
        let lhs = m_tilde(&a, &b, z, &cfg()).unwrap().value;
        let rhs = kummer_m(&a, &b, z, &cfg()).unwrap().value;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn m_tilde_undefined_for_b_ge_2() {
        let err = m_tilde(
            &ExactParam::non_integer(0.5),
            &ExactParam::integer(3),
            1.0,
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, EvalError::UndefinedFunction(_)));
    }

    #[test]
    fn m_tilde_small_z_leading_power() {
        // b = 0.5: M-tilde ~ z^{0.5} (1 + O(z))
        let a = ExactParam::non_integer(0.5);
        let b = ExactParam::non_integer(0.5);
        for z in [1e-6, 1e-8] {
            let v = m_tilde(&a, &b, z, &cfg()).unwrap().value;
            assert_relative_eq!(v, z.sqrt(), max_relative = 1e-5);
        }
    }

    #[test]
    fn m_tilde_rejects_nonpositive_z() {
        let err = m_tilde(
            &ExactParam::non_integer(0.5),
            &ExactParam::non_integer(0.6),
            -1.0,
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, EvalError::DomainError(_)));
    }
}
