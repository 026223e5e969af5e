use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::ParseError;

/// An element `re + i·im` of the Gaussian rationals ℚ(i).
///
/// Both parts are normalized arbitrary-precision rationals, so equality is
/// structural and there is no tolerance anywhere.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub const ZERO: Self = GaussianRational {
        re: Rational::ZERO,
        im: Rational::ZERO,
    };
    pub const ONE: Self = GaussianRational {
        re: Rational::ONE,
        im: Rational::ZERO,
    };
    pub const I: Self = GaussianRational {
        re: Rational::ZERO,
        im: Rational::ONE,
    };

    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::ZERO,
        }
    }

    /// `a + b i` from machine integers.
    pub fn int(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from(re),
            im: Rational::from(im),
        }
    }

    /// `(p/q) + (r/s) i`; panics on a zero denominator.
    pub fn frac(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "zero denominator");
        GaussianRational {
            re: Rational::from_signeds(p, q),
            im: Rational::from_signeds(r, s),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re == Rational::ZERO && self.im == Rational::ZERO
    }

    pub fn is_real(&self) -> bool {
        self.im == Rational::ZERO
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// |z|², always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr().reciprocal();
        Some(GaussianRational {
            re: &self.re * &n,
            im: -(&self.im * &n),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// `self * i`
    pub fn times_i(&self) -> Self {
        GaussianRational {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn half(&self) -> Self {
        self.scale(&Rational::from_signeds(1, 2))
    }

    /// Positive real part and zero imaginary part.
    pub fn is_positive_real(&self) -> bool {
        self.is_real() && self.re > Rational::ZERO
    }

    pub fn is_negative_real(&self) -> bool {
        self.is_real() && self.re < Rational::ZERO
    }

    /// Renders a rational in the `p/q` wire form (denominator always written).
    pub fn rational_literal(r: &Rational) -> String {
        let sign = if *r < Rational::ZERO { "-" } else { "" };
        format!("{sign}{}/{}", r.numerator_ref(), r.denominator_ref())
    }

    /// Parses `p/q` or a bare integer `p`.
    pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
        let s = s.trim();
        let bad = || ParseError::Scalar(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p = Integer::from_str(p.trim()).map_err(|_| bad())?;
                let q = Natural::from_str(q.trim()).map_err(|_| bad())?;
                if q == Natural::ZERO {
                    return Err(bad());
                }
                Ok(Rational::from_integers(p, Integer::from(q)))
            }
            None => Ok(Rational::from(Integer::from_str(s).map_err(|_| bad())?)),
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::int(v, 0)
    }
}

impl From<Rational> for GaussianRational {
    fn from(v: Rational) -> Self {
        GaussianRational::from_real(v)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Rational::ZERO;
        match (self.re == zero, self.im == zero) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im, false),
            (false, false) => {
                write!(f, "{}", self.re)?;
                write_imag(f, &self.im, true)
            }
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &Rational, signed: bool) -> fmt::Result {
    let negative = *im < Rational::ZERO;
    let abs = if negative { -im } else { im.clone() };
    let sign = match (negative, signed) {
        (true, _) => "-",
        (false, true) => "+",
        (false, false) => "",
    };
    if abs == Rational::ONE {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{abs}i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});
forward_binop!(Sub, sub, |a, b| GaussianRational {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});
forward_binop!(Mul, mul, |a, b| {
    if a.im == Rational::ZERO && b.im == Rational::ZERO {
        return GaussianRational::from_real(&a.re * &b.re);
    }
    GaussianRational {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
});
forward_binop!(Div, div, |a, b| {
    a * &b.inv().expect("division by zero in ℚ(i)")
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: GaussianRational) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::ZERO, |mut acc, x| {
            acc += x;
            acc
        })
    }
}
