//! Double-double arithmetic: an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`,
//! about 32 significant digits. Used only by the oracles.

use std::cmp::Ordering;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PrecisionScalar {
    pub hi: f64,
    pub lo: f64,
}

pub type Dd = PrecisionScalar;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

// B_{2k} as (numerator, denominator), k = 1..12
const BERNOULLI: [(f64, f64); 12] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174_611.0, 330.0),
    (854_513.0, 138.0),
    (-236_364_091.0, 2730.0),
];

impl PrecisionScalar {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };

    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn scale2(self, k: i32) -> Self {
        let f = 2f64.powi(k);
        Dd::new(self.hi * f, self.lo * f)
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Dd::ZERO } else { Dd::new(f64::NAN, 0.0) };
        }
        let x = 1.0 / self.hi.sqrt();
        let y = self.hi * x;
        let yy = Dd::from(y);
        yy + Dd::from((self - yy * yy).hi * x * 0.5)
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / Dd::LN2.hi).round();
        let r = (self - Dd::LN2 * k).scale2(-10);
        // expm1(r) by Taylor, |r| < 4e-4
        let mut term = r;
        let mut s = r;
        for n in 2..30 {
            term = term * r / n as f64;
            s += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            s = s.scale2(1) + s * s;
        }
        (s + 1.0).scale2(k as i32)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::new(f64::NAN, 0.0);
        }
        let mut y = Dd::from(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - 1.0;
        }
        y
    }

    pub fn powf(self, p: Dd) -> Self {
        if p.hi == 0.0 && p.lo == 0.0 {
            return Dd::ONE;
        }
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        (p * self.ln()).exp()
    }

    fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
        let r2 = r * r;
        let mut s = r;
        let mut t = r;
        let mut n = 1.0;
        loop {
            t = -t * r2 / ((n + 1.0) * (n + 2.0));
            s += t;
            n += 2.0;
            if t.hi.abs() < 1e-36 || n > 60.0 {
                break;
            }
        }
        let mut c = Dd::ONE;
        let mut t = Dd::ONE;
        let mut n = 0.0;
        loop {
            t = -t * r2 / ((n + 1.0) * (n + 2.0));
            c += t;
            n += 2.0;
            if t.hi.abs() < 1e-36 || n > 60.0 {
                break;
            }
        }
        (s, c)
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.hi / Dd::FRAC_PI_2.hi).round();
        let r = self - Dd::FRAC_PI_2 * k;
        let (s, c) = Dd::sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    /// `sin(pi x)` with exact zeros at integers of the f64 lattice.
    pub fn sin_pi(self) -> Self {
        let n = (self.hi / 2.0).round() * 2.0;
        let r = self - n;
        if r.hi == 0.0 && r.lo == 0.0 {
            return Dd::ZERO;
        }
        (r * Dd::PI).sin()
    }

    pub fn cos_pi(self) -> Self {
        (self + 0.5).sin_pi()
    }

    fn stirling(y: Dd) -> Dd {
        let half_ln_2pi = (Dd::PI.scale2(1)).ln().scale2(-1);
        let mut s = (y - 0.5) * y.ln() - y + half_ln_2pi;
        let r = (y * y).recip();
        let mut p = y.recip();
        for (k, (num, den)) in BERNOULLI.iter().enumerate() {
            let m = 2.0 * (k + 1) as f64;
            s += p * (Dd::from(*num) / (*den * m * (m - 1.0)));
            p *= r;
        }
        s
    }

    fn is_nonpositive_integer(self) -> bool {
        self.hi <= 0.0 && self.lo == 0.0 && self.hi == self.hi.floor()
    }

    /// `ln|Γ(x)|`.
    pub fn lgamma(self) -> Self {
        if self.is_nonpositive_integer() {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.hi < 0.5 {
            let s = self.sin_pi().abs();
            return Dd::PI.ln() - s.ln() - (Dd::ONE - self).lgamma();
        }
        let mut y = self;
        let mut prod = Dd::ONE;
        while y.hi < 40.0 {
            prod *= y;
            y += 1.0;
        }
        Dd::stirling(y) - prod.ln()
    }

    pub fn gamma(self) -> Self {
        if self.is_nonpositive_integer() {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.hi < 0.5 {
            return Dd::PI / (self.sin_pi() * (Dd::ONE - self).gamma());
        }
        if self.hi == self.hi.floor() && self.lo == 0.0 && self.hi <= 30.0 {
            let mut f = Dd::ONE;
            let mut k = 2.0;
            while k < self.hi {
                f *= k;
                k += 1.0;
            }
            return f;
        }
        let mut y = self;
        let mut prod = Dd::ONE;
        while y.hi < 40.0 {
            prod *= y;
            y += 1.0;
        }
        Dd::stirling(y).exp() / prod
    }

    /// `1/Γ(x)`, zero at the non-positive integers.
    pub fn rgamma(self) -> Self {
        if self.is_nonpositive_integer() {
            return Dd::ZERO;
        }
        if self.hi < 0.5 {
            return self.sin_pi() * (Dd::ONE - self).gamma() / Dd::PI;
        }
        self.gamma().recip()
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }
}

impl From<i64> for Dd {
    fn from(v: i64) -> Self {
        let hi = v as f64;
        let lo = (v - hi as i64) as f64;
        Dd::from_sum(hi, lo)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd::new(-self.hi, -self.lo)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    fn add(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, b: f64) -> Dd {
        self / Dd::from(b)
    }
}

impl Add<Dd> for f64 {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        b + self
    }
}

impl Sub<Dd> for f64 {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        -b + self
    }
}

impl Mul<Dd> for f64 {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        b * self
    }
}

impl Div<Dd> for f64 {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        Dd::from(self) / b
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl AddAssign<f64> for Dd {
    fn add_assign(&mut self, b: f64) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

impl MulAssign<f64> for Dd {
    fn mul_assign(&mut self, b: f64) {
        *self = *self * b;
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl std::iter::Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        ((a - b).abs().to_f64()) <= tol * b.abs().to_f64().max(1e-300)
    }

    #[test]
    fn arithmetic_beyond_double() {
        let third = Dd::ONE / 3.0;
        let back = third * 3.0;
        assert!((back - 1.0).abs().to_f64() < 1e-31);
        let s = Dd::from(2.0).sqrt();
        assert!(((s * s) - 2.0).abs().to_f64() < 1e-31);
    }

    #[test]
    fn transcendental_round_trips() {
        for &v in &[0.1, 1.0, 2.5, 17.0, -3.25] {
            let x = Dd::from(v);
            assert!(close(x.exp().ln(), x, 1e-30), "exp/ln at {v}");
            let (s, c) = x.sin_cos();
            assert!(((s * s + c * c) - 1.0).abs().to_f64() < 1e-30);
        }
        assert!(close(Dd::from(1.0).exp(), Dd::new(std::f64::consts::E, 1.445_646_891_729_250_2e-16), 1e-31));
        assert!((Dd::from(0.5).sin_pi() - 1.0).abs().to_f64() < 1e-31);
    }

    #[test]
    fn gamma_values() {
        assert!(close(Dd::from(0.5).gamma(), Dd::PI.sqrt(), 1e-28));
        assert!(close(Dd::from(10.0).gamma(), Dd::from(362_880.0), 0.0));
        assert!(close(Dd::from(10.5).lgamma().exp(), Dd::from(10.5).gamma(), 1e-28));
        let mut f = Dd::ONE;
        for k in 2..45 {
            f *= k as f64;
        }
        assert!(close(Dd::from(45.0).lgamma(), f.ln(), 1e-30));
        assert!(close(Dd::from(-1.5).gamma(), Dd::PI.sqrt() * 4.0 / 3.0, 1e-28));
        assert_eq!(Dd::from(-2.0).rgamma().to_f64(), 0.0);
    }
}
