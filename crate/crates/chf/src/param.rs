//! Exact-tagged real parameters.
//!
//! The classification of solutions of Kummer's equation is discrete: it
//! depends on whether `a`, `b` and `a - b` are integers, not on their
//! floating-point values being close to integers. An [`ExactParam`] carries
//! that information explicitly so that set-membership tests (integer,
//! non-positive integer, ...) never go through a floating comparison.

use serde::{Deserialize, Serialize};

/// Integer tag of a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntegerTag {
    NotInteger,
    Integer(i64),
}

/// A real parameter together with its exact integer tag.
///
/// Invariant: if the tag is `Integer(k)` then `value == k as f64` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExactParam {
    value: f64,
    tag: IntegerTag,
}

impl ExactParam {
    /// A parameter known to be the integer `k`.
    pub fn integer(k: i64) -> Self {
        ExactParam {
            value: k as f64,
            tag: IntegerTag::Integer(k),
        }
    }

    /// A parameter asserted not to be an integer. The float value is taken
    /// as-is; no snapping is performed.
    pub fn non_integer(x: f64) -> Self {
        ExactParam {
            value: x,
            tag: IntegerTag::NotInteger,
        }
    }

    /// Tag a float, snapping to the nearest integer when within `tol`.
    /// Returns the parameter and whether a snap occurred (value moved or
    /// the tag was promoted to `Integer`).
    pub fn from_f64_snapped(x: f64, tol: f64) -> (Self, bool) {
        let nearest = x.round();
        if (x - nearest).abs() <= tol && nearest.abs() < 9.0e15 {
            (ExactParam::integer(nearest as i64), true)
        } else {
            (ExactParam::non_integer(x), false)
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn tag(&self) -> IntegerTag {
        self.tag
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.tag {
            IntegerTag::Integer(k) => Some(k),
            IntegerTag::NotInteger => None,
        }
    }

    /// Is the parameter in Z (decided from the tag only)?
    pub fn is_integer(&self) -> bool {
        matches!(self.tag, IntegerTag::Integer(_))
    }

    /// Is the parameter in Z^{<=0}?
    pub fn is_nonpositive_integer(&self) -> bool {
        matches!(self.tag, IntegerTag::Integer(k) if k <= 0)
    }

    /// Is the parameter in Z^{>0}?
    pub fn is_positive_integer(&self) -> bool {
        matches!(self.tag, IntegerTag::Integer(k) if k > 0)
    }

    /// Is the parameter in Z^{>=2}?
    pub fn is_integer_ge2(&self) -> bool {
        matches!(self.tag, IntegerTag::Integer(k) if k >= 2)
    }

    /// `self + d` with exact tag arithmetic.
    pub fn shift(&self, d: i64) -> Self {
        match self.tag {
            IntegerTag::Integer(k) => ExactParam::integer(k + d),
            IntegerTag::NotInteger => ExactParam::non_integer(self.value + d as f64),
        }
    }

    /// `d - self` with exact tag arithmetic.
    pub fn sub_from(&self, d: i64) -> Self {
        match self.tag {
            IntegerTag::Integer(k) => ExactParam::integer(d - k),
            IntegerTag::NotInteger => ExactParam::non_integer(d as f64 - self.value),
        }
    }

    /// `1 + a - b` with exact tag arithmetic where possible.
    ///
    /// When both parameters are tagged integers the result is a tagged
    /// integer. When both are `NotInteger` but the float difference is
    /// exactly integral (e.g. a = 0.5, b = 1.5), the difference is integral
    /// as a relation between the two values and the result is tagged. A
    /// mixed integer/non-integer pair can never have an integral difference.
    pub fn one_plus_a_minus_b(a: &ExactParam, b: &ExactParam) -> Self {
        match (a.tag, b.tag) {
            (IntegerTag::Integer(ka), IntegerTag::Integer(kb)) => ExactParam::integer(1 + ka - kb),
            (IntegerTag::NotInteger, IntegerTag::NotInteger) => {
                let d = a.value - b.value;
                if d.fract() == 0.0 && d.abs() < 9.0e15 {
                    ExactParam::integer(1 + d as i64)
                } else {
                    ExactParam::non_integer(1.0 + d)
                }
            }
            _ => ExactParam::non_integer(1.0 + a.value - b.value),
        }
    }
}

impl std::fmt::Display for ExactParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.tag {
            IntegerTag::Integer(k) => write!(f, "{k}"),
            IntegerTag::NotInteger => write!(f, "{}", self.value),
        }
    }
}

/// Evaluation configuration for all series paths.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Hybrid absolute/relative stopping tolerance.
    pub tolerance: f64,
    /// Hard cap on series terms.
    pub max_terms: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            tolerance: 1e-12,
            max_terms: 2000,
        }
    }
}
