//! Outward-rounded interval arithmetic on binary fixed-point numbers.
//!
//! An [`Interval`] at precision `p` is a pair of integers `lo <= hi`
//! standing for the real interval `[lo / 2^p, hi / 2^p]`. Every operation
//! rounds `lo` down and `hi` up, so the exact real result of the operation
//! applied to any points of the inputs lies inside the output. Additions
//! are exact, which makes sums independent of association order.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn floor_shr(a: &BigInt, bits: u32) -> BigInt {
    floor_div(a, &(BigInt::one() << bits))
}

fn ceil_shr(a: &BigInt, bits: u32) -> BigInt {
    ceil_div(a, &(BigInt::one() << bits))
}

impl Interval {
    pub fn from_integer(n: &BigInt, prec: u32) -> Self {
        let v = n << prec;
        Interval {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_integer(&BigInt::one(), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_integer(&BigInt::zero(), prec)
    }

    /// Raw endpoints, both scaled by `2^prec`.
    pub fn from_raw(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi, prec }
    }

    pub fn lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi(&self) -> &BigInt {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Upper bound on `|x|` over the interval, in units of `2^-prec`.
    pub fn mag(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn add(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        let (lo, hi) = if self.lo.sign() != Sign::Minus && other.lo.sign() != Sign::Minus {
            (&self.lo * &other.lo, &self.hi * &other.hi)
        } else {
            let c = [
                &self.lo * &other.lo,
                &self.lo * &other.hi,
                &self.hi * &other.lo,
                &self.hi * &other.hi,
            ];
            let lo = c.iter().min().cloned().unwrap();
            let hi = c.iter().max().cloned().unwrap();
            (lo, hi)
        };
        Interval {
            lo: floor_shr(&lo, self.prec),
            hi: ceil_shr(&hi, self.prec),
            prec: self.prec,
        }
    }

    /// Multiplication by an exact integer; no rounding.
    pub fn scale(&self, k: &BigInt) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        let (lo, hi) = if k.is_negative() { (b, a) } else { (a, b) };
        Interval {
            lo,
            hi,
            prec: self.prec,
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: &BigInt) -> Interval {
        assert!(k.is_positive(), "division by non-positive integer");
        Interval {
            lo: floor_div(&self.lo, k),
            hi: ceil_div(&self.hi, k),
            prec: self.prec,
        }
    }

    /// `1/x`, or `None` if the interval is not strictly positive.
    pub fn recip(&self) -> Option<Interval> {
        if !self.is_positive() {
            return None;
        }
        let num = BigInt::one() << (2 * self.prec);
        Some(Interval {
            lo: floor_div(&num, &self.hi),
            hi: ceil_div(&num, &self.lo),
            prec: self.prec,
        })
    }

    pub fn pow(&self, exp: u32) -> Interval {
        let mut acc = Interval::one(self.prec);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Widens both ends by `ulps` units of the last place.
    pub fn widen(&self, ulps: &BigInt) -> Interval {
        Interval {
            lo: &self.lo - ulps,
            hi: &self.hi + ulps,
            prec: self.prec,
        }
    }
}

/// Enclosure of `atan(1/k)` for an integer `k >= 2`.
fn atan_inv(k: u64, prec: u32) -> Interval {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    // power = floor(2^prec / k^(2i+1)), exact floor at each step
    let mut power = floor_div(&(BigInt::one() << prec), &k);
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut i = 0u64;
    loop {
        let term = floor_div(&power, &BigInt::from(2 * i + 1));
        if term.is_zero() {
            break;
        }
        if i.is_multiple_of(2) {
            sum += &term;
        } else {
            sum -= &term;
        }
        terms += 1;
        i += 1;
        power = floor_div(&power, &k2);
    }
    // each kept term is off by < 1 ulp; the alternating tail is bounded by
    // the first dropped term, which is < 1 ulp
    let err = BigInt::from(terms + 1);
    Interval::from_raw(&sum - &err, &sum + &err, prec)
}

/// Enclosure of π (Machin's formula).
pub fn pi(prec: u32) -> Interval {
    let a = atan_inv(5, prec).scale(&BigInt::from(16));
    let b = atan_inv(239, prec).scale(&BigInt::from(4));
    a.sub(&b)
}

/// Enclosure of `sin(x)` for `x` inside `[0, 2]`.
///
/// The Taylor series is alternating with decreasing terms on that range, so
/// the first omitted term bounds the truncation error.
pub fn sin(x: &Interval) -> Interval {
    let prec = x.prec();
    debug_assert!(x.hi <= BigInt::from(2) << prec);
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut sum = Interval::zero(prec);
    let mut k: u64 = 0;
    let one_ulp = BigInt::one();
    loop {
        if term.mag() <= one_ulp && k > 0 {
            return sum.widen(&term.mag());
        }
        sum = if k.is_multiple_of(2) {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };
        let denom = BigInt::from((2 * k + 2) * (2 * k + 3));
        term = term.mul(&x2).div_int(&denom);
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_f64_mid(iv: &Interval) -> f64 {
        let mid: BigInt = (iv.lo() + iv.hi()) / 2;
        let scale = 2f64.powi(iv.prec() as i32);
        mid.to_string().parse::<f64>().unwrap() / scale
    }

    fn width(iv: &Interval) -> BigInt {
        iv.hi() - iv.lo()
    }

    #[test]
    fn pi_encloses_known_digits() {
        for prec in [32, 64, 200] {
            let p = pi(prec);
            assert!((to_f64_mid(&p) - std::f64::consts::PI).abs() < 1e-9);
            assert!(width(&p) < BigInt::from(2000));
        }
        // 3.14159265358979323846264338327950288 scaled by 2^128
        let p = pi(128);
        let digits: BigInt = "314159265358979323846264338327950288".parse().unwrap();
        let ten35 = BigInt::from(10).pow(35);
        let lo_scaled = p.lo() * &ten35;
        let hi_scaled = p.hi() * &ten35;
        let target = &digits << 128u32;
        let slack = BigInt::one() << 128u32; // one unit in the 35th decimal
        assert!(lo_scaled <= &target + &slack);
        assert!(hi_scaled >= &target - &slack);
    }

    #[test]
    fn sin_matches_f64() {
        let prec = 80;
        let pi = pi(prec);
        for (d, n) in [(1u32, 3u32), (1, 6), (2, 5), (1, 2), (1, 12), (5, 12)] {
            let x = pi.scale(&BigInt::from(d)).div_int(&BigInt::from(n));
            let s = sin(&x);
            let expected = (std::f64::consts::PI * d as f64 / n as f64).sin();
            assert!((to_f64_mid(&s) - expected).abs() < 1e-12, "{d}/{n}");
            assert!(s.lo() <= s.hi());
        }
    }

    #[test]
    fn sin_of_sixth_of_pi_contains_half() {
        let prec = 100;
        let x = pi(prec).div_int(&BigInt::from(6));
        let s = sin(&x);
        let half = BigInt::one() << (prec - 1);
        assert!(s.lo() <= &half && &half <= s.hi());
    }

    #[test]
    fn arithmetic_is_outward() {
        let prec = 10;
        let third = Interval::one(prec).div_int(&BigInt::from(3));
        let back = third.scale(&BigInt::from(3));
        let one = BigInt::one() << prec;
        assert!(back.lo() <= &one && &one <= back.hi());
        let r = Interval::from_integer(&BigInt::from(3), prec).recip().unwrap();
        assert!(r.lo() < r.hi());
        assert!(Interval::zero(prec).recip().is_none());
        let neg = Interval::from_raw(BigInt::from(-5), BigInt::from(3), prec);
        let sq = neg.mul(&neg);
        assert!(sq.lo() <= &BigInt::zero());
        assert!(sq.hi() >= &BigInt::zero());
    }
}
