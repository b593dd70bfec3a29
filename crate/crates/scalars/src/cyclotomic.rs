//! Elements of Q(ζ_N) stored on the power basis of Q[x]/Φ_N(x).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::rational::Rational;
use crate::ScalarError;

type Coeffs = SmallVec<[Rational; 2]>;

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of Φ_n, lowest degree first. Cached.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_poly(d);
            num = exact_div(&num, &div);
        }
    }
    let p = Arc::new(num);
    poly_cache().write().unwrap().insert(n, p.clone());
    p
}

// Division of integer polynomials by a monic divisor, remainder must vanish.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

// Reduce a dense polynomial mod Φ_n into canonical coefficients.
fn reduce(mut poly: Vec<Rational>, n: u32) -> Coeffs {
    let phi = euler_phi(n) as usize;
    if poly.len() > phi {
        let modulus = cyclotomic_poly(n);
        for deg in (phi..poly.len()).rev() {
            let c = std::mem::take(&mut poly[deg]);
            if c.is_zero() {
                continue;
            }
            for (i, &m) in modulus[..phi].iter().enumerate() {
                if m != 0 {
                    let t = c.mul_int(m);
                    poly[deg - phi + i] = &poly[deg - phi + i] - &t;
                }
            }
        }
        poly.truncate(phi);
    }
    poly.resize(phi, Rational::zero());
    poly.into_iter().collect()
}

/// An exact element of the cyclotomic field Q(ζ_N).
#[derive(Clone)]
pub struct CyclotomicScalar {
    order: u32,
    coeffs: Coeffs,
}

/// Shorthand used throughout the workspace.
pub type Scalar = CyclotomicScalar;

impl CyclotomicScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        CyclotomicScalar { order: 1, coeffs: smallvec![q] }
    }

    /// Builds a scalar from power-basis coefficients, reducing mod Φ_order.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CyclotomicScalar { order, coeffs: reduce(coeffs, order) }
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "cyclotomic order must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Self::from_coeffs(n, poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// Returns the rational value if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the scalar in Q(ζ_target); `order` must divide `target`.
    pub fn promote(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(target % self.order == 0, "order {} does not divide {}", self.order, target);
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Self::from_coeffs(target, poly)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let l = a.order.lcm(&b.order);
        (a.promote(l), b.promote(l))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(CyclotomicScalar { order: self.order, coeffs: smallvec![self.coeffs[0].recip()?] });
        }
        // Solve self * w = 1 through the multiplication-by-self matrix.
        let phi = self.coeffs.len();
        let mut cols: Vec<Coeffs> = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut poly = vec![Rational::zero(); phi + j];
            for (i, c) in self.coeffs.iter().enumerate() {
                poly[i + j] = c.clone();
            }
            cols.push(reduce(poly, self.order));
        }
        let mut m: Vec<Vec<Rational>> =
            (0..phi).map(|r| (0..phi).map(|c| cols[c][r].clone()).collect()).collect();
        let mut rhs: Vec<Rational> = (0..phi).map(|r| if r == 0 { Rational::one() } else { Rational::zero() }).collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(ScalarError::DivisionByZero)?;
            m.swap(col, piv);
            rhs.swap(col, piv);
            let inv = m[col][col].recip()?;
            for c in col..phi {
                m[col][c] = &m[col][c] * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..phi {
                        let t = &f * &m[col][c];
                        m[r][c] = &m[r][c] - &t;
                    }
                    let t = &f * &rhs[col];
                    rhs[r] = &rhs[r] - &t;
                }
            }
        }
        Ok(CyclotomicScalar { order: self.order, coeffs: rhs.into_iter().collect() })
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut poly = vec![Rational::zero(); n.max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = (n - i) % n;
            poly[j] = &poly[j] + c;
        }
        Self::from_coeffs(self.order, poly)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }
}

impl Default for CyclotomicScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CyclotomicScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CyclotomicScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicScalar {}

impl<'a> Add<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn add(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.order != rhs.order {
            let (a, b) = CyclotomicScalar::aligned(self, rhs);
            return &a + &b;
        }
        let coeffs = self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(x, y)| x + y).collect();
        CyclotomicScalar { order: self.order, coeffs }
    }
}

impl<'a> Sub<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.order != rhs.order {
            let (a, b) = CyclotomicScalar::aligned(self, rhs);
            return &a - &b;
        }
        let coeffs = self.coeffs.iter().zip(rhs.coeffs.iter()).map(|(x, y)| x - y).collect();
        CyclotomicScalar { order: self.order, coeffs }
    }
}

impl<'a> Mul<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn mul(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.coeffs.len() == 1 && rhs.coeffs.len() == 1 {
            let order = if self.order == rhs.order { self.order } else { self.order.lcm(&rhs.order) };
            if euler_phi(order) == 1 {
                return CyclotomicScalar { order, coeffs: smallvec![&self.coeffs[0] * &rhs.coeffs[0]] };
            }
        }
        if self.order != rhs.order {
            let (a, b) = CyclotomicScalar::aligned(self, rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut poly = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] = &poly[i + j] + &(x * y);
                }
            }
        }
        CyclotomicScalar { order: self.order, coeffs: reduce(poly, self.order) }
    }
}

impl<'a> Div<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    /// Panics on division by zero; use [`CyclotomicScalar::checked_div`] to recover.
    fn div(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        -&self
    }
}

impl AddAssign<&CyclotomicScalar> for CyclotomicScalar {
    fn add_assign(&mut self, rhs: &CyclotomicScalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                if !y.is_zero() {
                    *x = &*x + y;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<CyclotomicScalar> for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $f(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z{}", self.order)?,
                _ => write!(f, "({c})z{}^{i}", self.order)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for CyclotomicScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { order: self.order, coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs: Vec<Rational> =
            w.coeffs.iter().map(|c| c.parse()).collect::<Result<_, _>>().map_err(D::Error::custom)?;
        if coeffs.len() != euler_phi(w.order) as usize {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for order {}",
                euler_phi(w.order),
                w.order
            )));
        }
        Ok(CyclotomicScalar::from_coeffs(w.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn roots_of_unity() {
        let z2 = Scalar::zeta(2, 1);
        assert_eq!(&z2 * &z2, Scalar::one());
        assert_eq!(z2, Scalar::from_int(-1));
        let i = Scalar::zeta(4, 1);
        let i3 = Scalar::zeta(4, 3);
        assert!((&i + &i3).is_zero());
        assert_eq!(Scalar::zeta(4, 2), Scalar::from_int(-1));
        assert_eq!(Scalar::zeta(6, 2), Scalar::zeta(3, 1));
        assert_eq!(Scalar::zeta(5, 5), Scalar::one());
    }

    #[test]
    fn mixed_orders_promote() {
        let w = Scalar::zeta(3, 1);
        let i = Scalar::zeta(4, 1);
        let p = &w * &i;
        assert_eq!(p.order(), 12);
        assert_eq!(p, Scalar::zeta(12, 7));
        assert_eq!(&(&w + &i) - &i, w);
    }

    #[test]
    fn inverse_roundtrip() {
        let x = Scalar::from_coeffs(5, vec![q(1, 2), q(-3, 1), q(0, 1), q(7, 4)]);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn conj_of_zeta() {
        let w = Scalar::zeta(7, 2);
        assert_eq!(w.conj(), Scalar::zeta(7, 5));
        assert_eq!(&w * &w.conj(), Scalar::one());
    }

    #[test]
    fn json_roundtrip() {
        let x = Scalar::from_coeffs(3, vec![q(1, 2), q(1, 1)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"order":3,"coeffs":["1/2","1"]}"#);
        let y: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert!(serde_json::from_str::<Scalar>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }
}
