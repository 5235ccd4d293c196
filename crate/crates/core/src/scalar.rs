use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::cyclotomic::Cyclotomic;

/// Exact arithmetic switches to floats once the joint cyclotomic order would exceed this.
pub const MAX_EXACT_ORDER: u32 = 2400;

/// A complex quantity: exact cyclotomic, or a float approximation.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Cyclotomic),
    Float(Complex64),
}

impl Scalar {
    pub fn int(k: i64) -> Self {
        Scalar::Exact(Cyclotomic::integer(1, k))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn zeta(order: u32, k: i64) -> Self {
        Scalar::Exact(Cyclotomic::zeta_pow(order, k))
    }

    pub fn sqrt_int(m: u64) -> Self {
        Scalar::Exact(Cyclotomic::sqrt_int(m))
    }

    pub fn float(re: f64, im: f64) -> Self {
        Scalar::Float(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Exact(c) => c.to_complex(),
            Scalar::Float(z) => *z,
        }
    }

    pub fn to_float(&self) -> Self {
        Scalar::Float(self.to_c64())
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact(c) => Scalar::Exact(c.conj()),
            Scalar::Float(z) => Scalar::Float(z.conj()),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match self {
            Scalar::Exact(c) => c.inverse().map(Scalar::Exact),
            Scalar::Float(z) => (z.norm() > 0.0).then(|| Scalar::Float(z.inv())),
        }
    }

    /// Exact zero test for exact scalars; `|z| < tol` otherwise.
    pub fn is_zero(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Float(z) => z.norm() < tol,
        }
    }

    /// Exact equality when both sides are exact, tolerance comparison otherwise.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self.to_c64() - other.to_c64()).norm() < tol,
        }
    }

    /// Integer value: exact for exact scalars, rounded within `tol` for floats.
    pub fn to_integer(&self, tol: f64) -> Option<i64> {
        match self {
            Scalar::Exact(c) => c.as_integer().and_then(|k| i64::try_from(k).ok()),
            Scalar::Float(z) => {
                let r = z.re.round();
                ((z.re - r).abs() < tol && z.im.abs() < tol).then_some(r as i64)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            Scalar::Exact(c) => Scalar::Exact(c.pow(e)),
            Scalar::Float(z) => Scalar::Float(z.powu(e)),
        }
    }

    fn binary(
        a: &Scalar,
        b: &Scalar,
        exact: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
        float: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Scalar {
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) if x.joint_order(y) <= MAX_EXACT_ORDER => {
                Scalar::Exact(exact(x, y))
            }
            _ => Scalar::Float(float(a.to_c64(), b.to_c64())),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Float(z)
    }
}

impl From<Cyclotomic> for Scalar {
    fn from(c: Cyclotomic) -> Self {
        Scalar::Exact(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::binary(self, rhs, |x, y| x + y, |x, y| x + y)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::binary(self, rhs, |x, y| x - y, |x, y| x - y)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::binary(self, rhs, |x, y| x * y, |x, y| x * y)
    }
}

/// Division; panics on an exact zero divisor, yields inf/NaN for a float one.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        match rhs {
            Scalar::Exact(c) => {
                let inv = c.inverse().expect("division by exact zero");
                self * &Scalar::Exact(inv)
            }
            Scalar::Float(z) => Scalar::Float(self.to_c64() / z),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(-c),
            Scalar::Float(z) => Scalar::Float(-z),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(c) => write!(f, "{c}"),
            Scalar::Float(z) if z.im.abs() < 1e-12 => write!(f, "{:.10}", z.re),
            Scalar::Float(z) => write!(f, "{:.10}{:+.10}i", z.re, z.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_stays_exact() {
        let a = Scalar::sqrt_int(2);
        let b = &a * &a;
        assert!(b.is_exact());
        assert_eq!(b.to_integer(0.0), Some(2));
        let c = &Scalar::one() / &a;
        assert!(c.approx_eq(&Scalar::float(std::f64::consts::FRAC_1_SQRT_2, 0.0), 1e-12));
    }

    #[test]
    fn large_orders_fall_back_to_float() {
        let a = Scalar::zeta(2401, 1);
        let b = Scalar::zeta(3, 1);
        let c = &a * &b;
        assert!(!c.is_exact());
        let expected = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (1.0 / 2401.0 + 1.0 / 3.0));
        assert!((c.to_c64() - expected).norm() < 1e-12);
    }

    #[test]
    fn float_rounding_respects_tolerance() {
        assert_eq!(Scalar::float(2.0 + 1e-8, 0.0).to_integer(1e-6), Some(2));
        assert_eq!(Scalar::float(2.1, 0.0).to_integer(1e-6), None);
        assert_eq!(Scalar::float(2.0, 0.5).to_integer(1e-6), None);
    }
}
