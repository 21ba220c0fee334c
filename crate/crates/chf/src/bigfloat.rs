//! Software floating point with configurable mantissa width.
//!
//! This is the substrate for the verification oracle: series summation,
//! gamma by Stirling's series with exact Bernoulli coefficients, exp/ln by
//! argument reduction, and pi by Machin's formula. Values are
//! sign * mantissa * 2^exp with the mantissa kept at `prec` bits; rounding
//! is by truncation, which the generous guard precision absorbs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct BigFloat {
    sign: i8, // -1, 0, +1
    mant: BigUint,
    exp: i64,
    prec: u32,
}

/// Working precision for a decimal-digit target, with guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64
}

/// Bernoulli numbers B_2 .. B_40 as (numerator, denominator).
const BERNOULLI: [(i128, i128); 20] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
    (-7709321041217, 510),
    (2577687858367, 6),
    (-26315271553053477373, 1919190),
    (2929993913841559, 6),
    (-261082718496449122051, 13530),
];

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat {
            sign: 0,
            mant: BigUint::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_i64(k: i64, prec: u32) -> Self {
        if k == 0 {
            return Self::zero(prec);
        }
        let sign = if k < 0 { -1 } else { 1 };
        let mant = BigUint::from(k.unsigned_abs());
        BigFloat {
            sign,
            mant,
            exp: 0,
            prec,
        }
        .normalized()
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 requires finite input");
        if x == 0.0 {
            return Self::zero(prec);
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & 0xf_ffff_ffff_ffff;
        let (mant_u, exp) = if biased == 0 {
            (frac, -1074i64) // subnormal
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        BigFloat {
            sign,
            mant: BigUint::from(mant_u),
            exp,
            prec,
        }
        .normalized()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign < 0
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.sign = 0;
            self.exp = 0;
            return self;
        }
        let bits = self.mant.bits() as i64;
        let want = self.prec as i64;
        if bits > want {
            let shift = (bits - want) as u64;
            self.mant >>= shift;
            self.exp += shift as i64;
        } else if bits < want {
            let shift = (want - bits) as u64;
            self.mant <<= shift;
            self.exp -= shift as i64;
        }
        self
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        r.sign = -r.sign;
        r
    }

    pub fn abs(&self) -> Self {
        let mut r = self.clone();
        if r.sign != 0 {
            r.sign = 1;
        }
        r
    }

    /// Exact scaling by 2^k.
    pub fn scale2(&self, k: i64) -> Self {
        let mut r = self.clone();
        if r.sign != 0 {
            r.exp += k;
        }
        r
    }

    fn cmp_abs(&self, other: &Self) -> std::cmp::Ordering {
        if self.is_zero() || other.is_zero() {
            return self.mant.cmp(&other.mant);
        }
        let ea = self.exp + self.mant.bits() as i64;
        let eb = other.exp + other.mant.bits() as i64;
        ea.cmp(&eb).then_with(|| {
            // align and compare mantissas
            let shift = (self.exp - other.exp).unsigned_abs();
            if self.exp >= other.exp {
                (self.mant.clone() << shift).cmp(&other.mant)
            } else {
                self.mant.cmp(&(other.mant.clone() << shift))
            }
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            let mut r = other.clone();
            r.prec = prec;
            return r.normalized();
        }
        if other.is_zero() {
            let mut r = self.clone();
            r.prec = prec;
            return r.normalized();
        }
        // order by exponent so `hi.exp >= lo.exp`
        let (hi, lo) = if self.exp >= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let shift = (hi.exp - lo.exp) as u64;
        // if lo is negligible at this precision, return hi
        if shift > prec as u64 + lo.mant.bits() + 4 {
            let mut r = hi.clone();
            r.prec = prec;
            return r.normalized();
        }
        let hi_m = hi.mant.clone() << shift;
        let (sign, mant) = if hi.sign == lo.sign {
            (hi.sign, hi_m + &lo.mant)
        } else if hi_m >= lo.mant {
            (hi.sign, hi_m - &lo.mant)
        } else {
            (lo.sign, &lo.mant - hi_m)
        };
        BigFloat {
            sign,
            mant,
            exp: lo.exp,
            prec,
        }
        .normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        if self.is_zero() || other.is_zero() {
            return Self::zero(prec);
        }
        BigFloat {
            sign: self.sign * other.sign,
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
            prec,
        }
        .normalized()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self.mul(&Self::from_i64(k, self.prec))
    }

    pub fn div(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero(prec);
        }
        let extra = prec as u64 + 4;
        let num = self.mant.clone() << extra;
        let mant = num / &other.mant;
        BigFloat {
            sign: self.sign * other.sign,
            mant,
            exp: self.exp - other.exp - extra as i64,
            prec,
        }
        .normalized()
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self.div(&Self::from_i64(k, self.prec))
    }

    pub fn recip(&self) -> Self {
        Self::from_i64(1, self.prec).div(self)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        // take top 64 bits of the mantissa
        let (top, dropped) = if bits > 64 {
            let shift = bits - 64;
            let top: BigUint = self.mant.clone() >> shift;
            (top.iter_u64_digits().next().unwrap_or(0), shift as i64)
        } else {
            (self.mant.iter_u64_digits().next().unwrap_or(0), 0)
        };
        let v = top as f64 * 2f64.powi((self.exp + dropped).clamp(-2000, 2000) as i32);
        self.sign as f64 * v
    }

    /// Decimal string with `digits` significant digits, round-to-nearest.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // magnitude estimate: log10 |v| = (exp + bits) log10(2)
        let bexp = self.exp + self.mant.bits() as i64;
        let e10 = (bexp as f64 * std::f64::consts::LOG10_2).floor() as i64;
        // want round(|v| * 10^(digits-1-e10)) as an integer with `digits` digits
        let mut k = digits as i64 - 1 - e10;
        let mut int_digits = Self::scaled_decimal(&self.mant, self.exp, k);
        // correct the estimate if we landed one digit short or long
        let want_len = digits as usize;
        loop {
            let len = int_digits.to_string().len();
            if len == want_len {
                break;
            }
            if len < want_len {
                k += 1;
            } else {
                k -= 1;
            }
            int_digits = Self::scaled_decimal(&self.mant, self.exp, k);
        }
        let s = int_digits.to_string();
        let exp10 = digits as i64 - 1 - k;
        let mantissa = format!("{}.{}", &s[..1], &s[1..]);
        let sign = if self.sign < 0 { "-" } else { "" };
        format!("{sign}{mantissa}e{exp10}")
    }

    /// round(mant * 2^exp * 10^k) as a BigUint.
    fn scaled_decimal(mant: &BigUint, exp: i64, k: i64) -> BigUint {
        let ten = BigUint::from(10u32);
        let mut num = mant.clone();
        let mut den = BigUint::one();
        if k >= 0 {
            num *= ten.pow(k as u32);
        } else {
            den *= ten.pow((-k) as u32);
        }
        if exp >= 0 {
            num <<= exp as u64;
        } else {
            den <<= (-exp) as u64;
        }
        // round to nearest
        (num + (&den >> 1u32)) / den
    }

    // ---- elementary functions ----

    pub fn pi(prec: u32) -> Self {
        let wp = prec + 16;
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        let a = Self::atan_recip(5, wp).mul_i64(16);
        let b = Self::atan_recip(239, wp).mul_i64(4);
        let mut r = a.sub(&b);
        r.prec = prec;
        r.normalized()
    }

    fn atan_recip(q: u64, prec: u32) -> Self {
        // atan(1/q) = sum (-1)^j / ((2j+1) q^(2j+1))
        let q2 = Self::from_i64((q * q) as i64, prec);
        let mut term = Self::from_i64(q as i64, prec).recip();
        let mut sum = Self::zero(prec);
        let mut j = 0i64;
        loop {
            let contrib = term.div_i64(2 * j + 1);
            if contrib.is_zero() || contrib.exp + (contrib.mant.bits() as i64) < -(prec as i64 + 8)
            {
                break;
            }
            sum = if j % 2 == 0 {
                sum.add(&contrib)
            } else {
                sum.sub(&contrib)
            };
            term = term.div(&q2);
            j += 1;
        }
        sum
    }

    pub fn ln2(prec: u32) -> Self {
        // ln 2 = 2 atanh(1/3) = 2 sum (1/3)^(2j+1)/(2j+1)
        let wp = prec + 16;
        let nine = Self::from_i64(9, wp);
        let mut term = Self::from_i64(3, wp).recip();
        let mut sum = Self::zero(wp);
        let mut j = 0i64;
        loop {
            let contrib = term.div_i64(2 * j + 1);
            if contrib.is_zero() || contrib.exp + (contrib.mant.bits() as i64) < -(wp as i64 + 8) {
                break;
            }
            sum = sum.add(&contrib);
            term = term.div(&nine);
            j += 1;
        }
        let mut r = sum.mul_i64(2);
        r.prec = prec;
        r.normalized()
    }

    /// Natural logarithm; requires a positive value.
    pub fn ln(&self) -> Self {
        assert!(self.sign > 0, "BigFloat::ln requires a positive argument");
        let prec = self.prec;
        let wp = prec + 16;
        // self = m * 2^k with m in [1, 2)
        let bits = self.mant.bits() as i64;
        let k = self.exp + bits - 1;
        let m = BigFloat {
            sign: 1,
            mant: self.mant.clone(),
            exp: -(bits - 1),
            prec: wp,
        };
        // ln m = 2 atanh(t), t = (m-1)/(m+1) in [0, 1/3)
        let one = Self::from_i64(1, wp);
        let t = m.sub(&one).div(&m.add(&one));
        let t2 = t.mul(&t);
        let mut term = t.clone();
        let mut sum = Self::zero(wp);
        let mut j = 0i64;
        loop {
            let contrib = term.div_i64(2 * j + 1);
            if contrib.is_zero() || contrib.exp + (contrib.mant.bits() as i64) < -(wp as i64 + 8) {
                break;
            }
            sum = sum.add(&contrib);
            term = term.mul(&t2);
            j += 1;
        }
        let ln_m = sum.mul_i64(2);
        let mut r = ln_m.add(&Self::ln2(wp).mul_i64(k));
        r.prec = prec;
        r.normalized()
    }

    /// Exponential.
    pub fn exp(&self) -> Self {
        let prec = self.prec;
        let wp = prec + 32;
        if self.is_zero() {
            return Self::from_i64(1, prec);
        }
        let x64 = self.to_f64();
        assert!(
            x64.abs() < 700_000.0,
            "BigFloat::exp argument out of supported range"
        );
        let k = (x64 / std::f64::consts::LN_2).round() as i64;
        let mut wide = self.clone();
        wide.prec = wp;
        let r = wide.normalized().sub(&Self::ln2(wp).mul_i64(k));
        // halve J times, Taylor, then square J times
        const J: i64 = 6;
        let small = r.scale2(-J);
        let mut term = Self::from_i64(1, wp);
        let mut sum = Self::from_i64(1, wp);
        let mut j = 1i64;
        loop {
            term = term.mul(&small).div_i64(j);
            if term.is_zero() || term.exp + (term.mant.bits() as i64) < -(wp as i64 + 8) {
                break;
            }
            sum = sum.add(&term);
            j += 1;
        }
        let mut e = sum;
        for _ in 0..J {
            e = e.mul(&e);
        }
        let mut out = e.scale2(k);
        out.prec = prec;
        out.normalized()
    }

    /// x^p for x > 0 and real p.
    pub fn pow(&self, p: &Self) -> Self {
        self.ln().mul(p).exp()
    }

    /// sin on |x| <= about 2 (used after range reduction only).
    fn sin_small(&self) -> Self {
        let wp = self.prec + 16;
        let mut x = self.clone();
        x.prec = wp;
        let x = x.normalized();
        let x2 = x.mul(&x);
        let mut term = x.clone();
        let mut sum = x.clone();
        let mut j = 1i64;
        loop {
            term = term.mul(&x2).div_i64(2 * j).div_i64(2 * j + 1).neg();
            if term.is_zero() || term.exp + (term.mant.bits() as i64) < -(wp as i64 + 8) {
                break;
            }
            sum = sum.add(&term);
            j += 1;
        }
        sum.prec = self.prec;
        sum.normalized()
    }

    /// sin(pi x) where x = n + frac exactly, |frac| <= 1/2.
    pub fn sin_pi_split(n: i64, frac: &Self) -> Self {
        let prec = frac.prec;
        let s = Self::pi(prec + 16).mul(frac).sin_small();
        let mut s = if n & 1 == 0 { s } else { s.neg() };
        s.prec = prec;
        s.normalized()
    }

    /// Gamma function for a non-pole argument.
    ///
    /// Stirling's series after shifting the argument above a cutoff chosen
    /// from the working precision, with the reflection formula below 1/2.
    pub fn gamma(&self) -> Self {
        let prec = self.prec;
        let wp = prec + 32;
        let x64 = self.to_f64();
        if self.sign <= 0 || x64 < 0.5 {
            // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
            let n = x64.round();
            assert!(
                !(self.is_zero()
                    || (Self::from_f64(n, wp).sub(self).is_zero() && n <= 0.0)),
                "BigFloat::gamma at a non-positive integer pole"
            );
            let mut wide = self.clone();
            wide.prec = wp;
            let wide = wide.normalized();
            let frac = wide.sub(&Self::from_f64(n, wp));
            let sin = Self::sin_pi_split(n as i64, &frac);
            let one_minus = Self::from_i64(1, wp).sub(&wide);
            let mut r = Self::pi(wp).div(&sin.mul(&one_minus.gamma_pos_internal(wp)));
            r.prec = prec;
            return r.normalized();
        }
        let mut wide = self.clone();
        wide.prec = wp;
        let mut r = wide.normalized().gamma_pos_internal(wp);
        r.prec = prec;
        r.normalized()
    }

    fn gamma_pos_internal(&self, wp: u32) -> Self {
        // shift so the Stirling truncation (after B_40) is below 2^-wp
        let digits = wp as f64 * std::f64::consts::LOG10_2;
        let target = 10f64.powf((digits + 18.5) / 39.0).ceil().max(40.0);
        let x64 = self.to_f64();
        let shift = if x64 < target {
            (target - x64).ceil() as i64
        } else {
            0
        };
        let mut prod = Self::from_i64(1, wp);
        for i in 0..shift {
            prod = prod.mul(&self.add(&Self::from_i64(i, wp)));
        }
        let w = self.add(&Self::from_i64(shift, wp));
        // ln Gamma(w) = (w - 1/2) ln w - w + ln(2 pi)/2 + sum c_n / w^(2n-1)
        let ln_w = w.ln();
        let half = Self::from_i64(1, wp).scale2(-1);
        let mut acc = w.sub(&half).mul(&ln_w).sub(&w);
        let two_pi = Self::pi(wp).mul_i64(2);
        acc = acc.add(&two_pi.ln().scale2(-1));
        let w2 = w.mul(&w);
        let mut wpow = w.recip();
        for (n, (num, den)) in BERNOULLI.iter().enumerate() {
            let n1 = (n + 1) as i64;
            let c = Self::from_i128(*num, wp)
                .div(&Self::from_i128(*den, wp))
                .div_i64(2 * n1)
                .div_i64(2 * n1 - 1);
            acc = acc.add(&c.mul(&wpow));
            wpow = wpow.div(&w2);
        }
        acc.exp().div(&prod)
    }

    fn from_i128(k: i128, prec: u32) -> Self {
        if k == 0 {
            return Self::zero(prec);
        }
        let sign = if k < 0 { -1 } else { 1 };
        BigFloat {
            sign,
            mant: BigUint::from(k.unsigned_abs()),
            exp: 0,
            prec,
        }
        .normalized()
    }
}
