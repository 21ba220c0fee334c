//! Second-order jets: a value together with its first two derivatives at a
//! point. Every solution evaluator in this crate returns a [`Jet`], built by
//! term-wise differentiation of the defining series, so ODE residuals and
//! Wronskians use analytic derivatives rather than finite differences.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub f: f64,
    pub df: f64,
    pub d2f: f64,
}

impl Jet {
    pub const ZERO: Jet = Jet {
        f: 0.0,
        df: 0.0,
        d2f: 0.0,
    };

    pub fn constant(c: f64) -> Jet {
        Jet {
            f: c,
            df: 0.0,
            d2f: 0.0,
        }
    }

    /// The jet of z^p at the point z (> 0 for non-integer p).
    pub fn power(z: f64, p: f64) -> Jet {
        if p == 0.0 {
            return Jet::constant(1.0);
        }
        let f = z.powf(p);
        Jet {
            f,
            df: p * f / z,
            d2f: p * (p - 1.0) * f / (z * z),
        }
    }

    /// The jet of ln z at z > 0.
    pub fn ln(z: f64) -> Jet {
        Jet {
            f: z.ln(),
            df: 1.0 / z,
            d2f: -1.0 / (z * z),
        }
    }

    /// The jet of e^{c z} at z.
    pub fn exp_scaled(z: f64, c: f64) -> Jet {
        let e = (c * z).exp();
        Jet {
            f: e,
            df: c * e,
            d2f: c * c * e,
        }
    }

    pub fn scale(self, c: f64) -> Jet {
        Jet {
            f: c * self.f,
            df: c * self.df,
            d2f: c * self.d2f,
        }
    }

    /// Jet of w(z) = g(-z) given the jet of g at -z.
    pub fn reflect_argument(self) -> Jet {
        Jet {
            f: self.f,
            df: -self.df,
            d2f: self.d2f,
        }
    }

    /// Residual of Kummer's equation z w'' + (b - z) w' - a w at z.
    pub fn kummer_residual(&self, a: f64, b: f64, z: f64) -> f64 {
        z * self.d2f + (b - z) * self.df - a * self.f
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            f: self.f + rhs.f,
            df: self.df + rhs.df,
            d2f: self.d2f + rhs.d2f,
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        Jet {
            f: self.f - rhs.f,
            df: self.df - rhs.df,
            d2f: self.d2f - rhs.d2f,
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        Jet {
            f: self.f * rhs.f,
            df: self.df * rhs.f + self.f * rhs.df,
            d2f: self.d2f * rhs.f + 2.0 * self.df * rhs.df + self.f * rhs.d2f,
        }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}
