//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored in the power basis `1, z, ..., z^(phi(N)-1)` where `z = exp(2 pi i / N)`,
//! i.e. as a rational polynomial reduced modulo the cyclotomic polynomial `Phi_N`. Elements of
//! different orders are compared and combined by embedding both into `Q(zeta_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (ascending) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = exact_div(&num, &den);
        }
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd]; // den is monic
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of `Q(zeta_order)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic { order, coeffs: vec![BigRational::zero(); totient(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::rational(order, BigRational::one())
    }

    pub fn rational(order: u32, q: BigRational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = q;
        c
    }

    pub fn integer(order: u32, k: i64) -> Self {
        Self::rational(order, BigRational::from_integer(BigInt::from(k)))
    }

    /// `zeta_order^k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut dense = vec![BigRational::zero(); order as usize];
        dense[e] = BigRational::one();
        Self::from_dense(order, dense)
    }

    /// Builds an element from a dense coefficient vector over `1, z, ..., z^(len-1)`.
    pub fn from_dense(order: u32, dense: Vec<BigRational>) -> Self {
        Cyclotomic { order, coeffs: reduce(dense, order) }
    }

    /// The element `sum_i coeffs[i] z^i`, where `coeffs` is already in reduced form.
    pub fn from_reduced(order: u32, coeffs: Vec<BigRational>) -> Option<Self> {
        (coeffs.len() == totient(order)).then_some(Cyclotomic { order, coeffs })
    }

    /// Positive square root of a positive integer, via quadratic Gauss sums.
    pub fn sqrt_int(m: u64) -> Self {
        assert!(m > 0, "sqrt_int needs a positive integer");
        let mut square = 1u64;
        let mut free = 1u64;
        let mut rest = m;
        let mut p = 2u64;
        while p * p <= rest {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
            p += 1;
        }
        free *= rest;
        let scale = Self::integer(1, square as i64);
        let two_part = free % 2 == 0;
        let odd = if two_part { free / 2 } else { free };
        let mut root = scale;
        if odd > 1 {
            let t = odd as u32;
            let order = 4 * t;
            let mut g = Self::zero(order);
            for k in 0..t as i64 {
                g = &g + &Self::zeta_pow(order, 4 * (k * k));
            }
            if t % 4 == 3 {
                // g = i sqrt(t)
                g = &g * &Self::zeta_pow(4, 3);
            }
            root = &root * &g;
        }
        if two_part {
            let s2 = &Self::zeta_pow(8, 1) + &Self::zeta_pow(8, 7);
            root = &root * &s2;
        }
        root
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Re-expresses the element in `Q(zeta_target)`; `target` must be a multiple of the order.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target % self.order == 0, "cannot embed Q(zeta_{}) into Q(zeta_{target})", self.order);
        if target == self.order {
            return self.clone();
        }
        let f = (target / self.order) as usize;
        let mut dense = vec![BigRational::zero(); (self.coeffs.len() - 1) * f + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * f] = c.clone();
        }
        Self::from_dense(target, dense)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = lcm(a.order, b.order);
        (a.embed(m), b.embed(m))
    }

    /// Order of the field both operands would be combined in.
    pub fn joint_order(&self, other: &Self) -> u32 {
        lcm(self.order, other.order)
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut dense = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(n - i) % n] += c.clone();
        }
        Self::from_dense(self.order, dense)
    }

    /// Multiplicative inverse by solving the linear system of the multiplication map.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.coeffs.len();
        // column j = self * z^j
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        let z = Self::zeta_pow(self.order, 1);
        for _ in 0..d {
            cols.push(cur.coeffs.clone());
            cur = &cur * &z;
        }
        let mut a: Vec<Vec<BigRational>> =
            (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            rhs.swap(col, piv);
            let inv = a[col][col].recip();
            for j in col..d {
                a[col][j] = &a[col][j] * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..d {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                    }
                    let t = &f * &rhs[col];
                    rhs[r] -= t;
                }
            }
        }
        Some(Cyclotomic { order: self.order, coeffs: rhs })
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn reduce(mut dense: Vec<BigRational>, order: u32) -> Vec<BigRational> {
    let phi = cyclotomic_poly(order);
    let d = phi.len() - 1;
    if dense.len() > d {
        for i in (d..dense.len()).rev() {
            let c = std::mem::take(&mut dense[i]);
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate().take(d) {
                if pj != 0 {
                    dense[i - d + j] -= &c * BigRational::from_integer(BigInt::from(pj));
                }
            }
        }
        dense.truncate(d);
    } else {
        dense.resize(d, BigRational::zero());
    }
    dense
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        let d = a.coeffs.len();
        let mut dense = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_dense(a.order, dense)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z{}^{i}", self.order)?,
                _ => write!(f, "{mag}*z{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(24), 8);
        assert_eq!(totient(105), 48);
        // first cyclotomic polynomial with a coefficient of absolute value 2
        assert!(cyclotomic_poly(105).iter().any(|&c| c == -2));
    }

    #[test]
    fn zeta_powers_wrap() {
        let z = Cyclotomic::zeta_pow(5, 1);
        assert_eq!(z.pow(5), Cyclotomic::one(5));
        let s: Cyclotomic = (0..5).fold(Cyclotomic::zero(5), |acc, k| &acc + &Cyclotomic::zeta_pow(5, k));
        assert!(s.is_zero());
    }

    #[test]
    fn square_roots() {
        for m in 1..40u64 {
            let r = Cyclotomic::sqrt_int(m);
            assert_eq!(&r * &r, Cyclotomic::integer(1, m as i64), "sqrt({m})");
            assert!(approx(r.to_complex(), Complex64::new((m as f64).sqrt(), 0.0)), "sign of sqrt({m})");
        }
    }

    #[test]
    fn embedding_and_mixed_orders() {
        let i4 = Cyclotomic::zeta_pow(4, 1);
        let z8 = Cyclotomic::zeta_pow(8, 2);
        assert_eq!(i4, z8);
        let w = &Cyclotomic::zeta_pow(3, 1) * &Cyclotomic::zeta_pow(4, 1);
        assert_eq!(w.order(), 12);
        assert_eq!(w, Cyclotomic::zeta_pow(12, 7));
    }

    #[test]
    fn inverse_and_conjugate() {
        let a = &Cyclotomic::sqrt_int(3) + &Cyclotomic::zeta_pow(12, 5);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Cyclotomic::one(12));
        let norm = &a * &a.conj();
        assert!(norm.to_complex().im.abs() < 1e-12);
        assert!(Cyclotomic::zero(7).inverse().is_none());
    }

    #[test]
    fn display_is_readable() {
        let a = &Cyclotomic::integer(5, 2) - &Cyclotomic::zeta_pow(5, 3);
        assert_eq!(a.to_string(), "2 - z5^3");
    }
}
