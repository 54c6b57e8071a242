//! Double-double arithmetic: an unevaluated sum of two `f64` giving ~32
//! significant decimal digits. Algorithms follow Dekker and the QD library.

use crate::fmath::Float;

/// Extended-precision real: `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Machine epsilon of the double-double format, about 4.93e-32.
pub const DD_EPS: f64 = 4.93038065763132e-32;

pub const DD_LN2: Dd = Dd {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};

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

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn from_i64(x: i64) -> Dd {
        // i64 up to 2^53 is exact in one limb; split larger values
        let hi = x as f64;
        let lo = (x - hi as i64) as f64;
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * x);
        Dd { hi, lo }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        let e = self.sub(Dd::from_f64(s).mul(Dd::from_f64(s))).hi / (2.0 * s);
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    /// exp(x) by range reduction against ln 2 and a scaled Taylor series.
    pub fn exp(self) -> Dd {
        if self.hi > 700.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -740.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / DD_LN2.hi).round();
        let r = self.sub(DD_LN2.mul_f64(k));
        // e^r = (e^{r/512})^512, |r/512| <= 7e-4: 8 Taylor terms suffice
        let u = r.mul_f64(1.0 / 512.0);
        let mut term = u;
        let mut sum = Dd::ONE.add(u);
        for n in 2..12 {
            term = term.mul(u).mul_f64(1.0 / n as f64);
            sum = sum.add(term);
            if term.hi.abs() < DD_EPS {
                break;
            }
        }
        for _ in 0..9 {
            sum = sum.mul(sum);
        }
        // scale by 2^k exactly
        let scale = libm_exp2(k);
        Dd {
            hi: sum.hi * scale,
            lo: sum.lo * scale,
        }
    }

    /// Natural log via one Newton refinement of the f64 estimate.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = Dd::from_f64(self.hi.ln());
        // y1 = y0 + x*exp(-y0) - 1, iterated twice
        let mut y = y0;
        for _ in 0..2 {
            y = y.add(self.mul(y.neg().exp())).sub(Dd::ONE);
        }
        y
    }

    /// x^a for positive x.
    pub fn pow(self, a: Dd) -> Dd {
        self.ln().mul(a).exp()
    }
}

#[inline]
fn libm_exp2(k: f64) -> f64 {
    // k is an integer-valued f64 within exp range
    let mut bits = ((k as i64) + 1023) << 52;
    if bits <= 0 {
        return 0.0;
    }
    if bits >= (2047 << 52) {
        bits = 2046 << 52;
    }
    f64::from_bits(bits as u64)
}

/// Complex double-double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DdC {
    pub re: Dd,
    pub im: Dd,
}

impl DdC {
    pub const ZERO: DdC = DdC {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: DdC = DdC {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn new(re: f64, im: f64) -> DdC {
        DdC {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    #[inline]
    pub fn add(self, o: DdC) -> DdC {
        DdC {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    #[inline]
    pub fn sub(self, o: DdC) -> DdC {
        DdC {
            re: self.re.sub(o.re),
            im: self.im.sub(o.im),
        }
    }

    #[inline]
    pub fn mul(self, o: DdC) -> DdC {
        DdC {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn div(self, o: DdC) -> DdC {
        let d = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(o.conj());
        DdC {
            re: num.re.div(d),
            im: num.im.div(d),
        }
    }

    #[inline]
    pub fn conj(self) -> DdC {
        DdC {
            re: self.re,
            im: self.im.neg(),
        }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> DdC {
        DdC {
            re: self.re.add(Dd::from_f64(x)),
            im: self.im,
        }
    }

    #[inline]
    pub fn mul_dd(self, x: Dd) -> DdC {
        DdC {
            re: self.re.mul(x),
            im: self.im.mul(x),
        }
    }

    /// Cheap magnitude estimate (f64 accuracy is enough for tests and bounds).
    #[inline]
    pub fn abs_est(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    #[inline]
    pub fn to_c64(self) -> crate::Complex {
        crate::Complex::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_mul_div_roundtrip() {
        let a = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let b = a.mul_f64(3.0);
        assert!((b.hi - 1.0).abs() < 1e-30 && b.lo.abs() < 1e-30);
        let c = Dd::from_f64(2.0).sqrt();
        let d = c.mul(c).sub(Dd::from_f64(2.0));
        assert!(d.hi.abs() < 1e-30);
    }

    #[test]
    fn exp_ln_consistency() {
        for &x in &[0.3, -1.7, 12.5, -35.0, 3.9e-3] {
            let e = Dd::from_f64(x).exp();
            let back = e.ln();
            assert!(
                (back.hi - x).abs() < 1e-29 + 1e-29 * x.abs(),
                "x={x} back={}",
                back.hi
            );
        }
        // exp(1) against the known constant
        let e1 = Dd::from_f64(1.0).exp();
        assert!((e1.hi - core::f64::consts::E).abs() < 1e-15);
        assert!((e1.to_f64() - core::f64::consts::E).abs() < 1e-15);
        // 30-digit check: e = 2.718281828459045235360287471353
        assert!((e1.lo - (2.718281828459045235360287471353_f64 - e1.hi)).abs() < 1e-28);
    }

    #[test]
    fn pow_matches_f64_for_moderate_args() {
        let v = Dd::from_f64(1.7).pow(Dd::from_f64(-2.3));
        assert!((v.to_f64() - 1.7f64.powf(-2.3)).abs() < 1e-15);
    }

    #[test]
    fn complex_division() {
        let a = DdC::new(1.3, -0.7);
        let b = DdC::new(-0.2, 2.1);
        let q = a.div(b);
        let back = q.mul(b);
        assert!((back.re.to_f64() - 1.3).abs() < 1e-30);
        assert!((back.im.to_f64() + 0.7).abs() < 1e-30);
    }
}
