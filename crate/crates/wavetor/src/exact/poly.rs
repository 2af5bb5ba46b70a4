//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Small and purpose-built: the resonant-identity verification only needs
//! addition, multiplication, substitution of variables by polynomials, and
//! a zero test, over a handful of variables with modest degrees. Coefficients
//! are `BigRational` so no overflow or rounding can occur.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector; index = variable, value = power.
pub type Monomial = Vec<u32>;

/// A sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The variable with the given index.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0u32; i + 1];
        m[i] = 1;
        let mut p = Poly::default();
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    fn insert(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::constant(1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
    }

    /// True when every monomial has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Substitute variable `i` by `images[i]` for every variable
    /// simultaneously. `images` must cover every variable that appears.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::from_rational(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Exact evaluation at rational points.
    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Floating-point evaluation (for cross-checks against the f64 symbol
    /// catalog; not used in the exact verification path).
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let num = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let den = c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let mut v = num / den;
            for (i, &e) in m.iter().enumerate() {
                v *= point[i].powi(e as i32);
            }
            total += v;
        }
        total
    }

    /// Largest absolute coefficient value, as a rough residual magnitude.
    pub fn max_abs_coeff(&self) -> BigRational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = vec![0u32; ma.len().max(mb.len())];
                for (i, &e) in ma.iter().enumerate() {
                    m[i] += e;
                }
                for (i, &e) in mb.iter().enumerate() {
                    m[i] += e;
                }
                out.insert(m, ca * cb);
            }
        }
        out
    }
}

// owned-value conveniences so table code can chain arithmetic naturally
impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}
impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}
impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    write!(f, "*v{}", i)?;
                } else if e > 1 {
                    write!(f, "*v{}^{}", i, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn ring_axioms_on_samples() {
        let p = x(0) + x(1) * Poly::constant(2);
        let q = x(0) * x(0) - Poly::constant(3);
        let lhs = (p.clone() + q.clone()) * (p.clone() - q.clone());
        let rhs = p.clone() * p.clone() - q.clone() * q.clone();
        assert_eq!(lhs, rhs);
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn substitution_composes() {
        // p(x0, x1) = x0^2 - x1, substitute x0 -> x1 + 1, x1 -> x1^2 + 2 x1 + 1
        let p = x(0).pow(2) - x(1);
        let images = vec![
            x(1) + Poly::constant(1),
            x(1).pow(2) + Poly::constant(2) * x(1) + Poly::constant(1),
        ];
        let q = p.substitute(&images);
        // (x1+1)^2 - (x1+1)^2 = 0
        assert!(q.is_zero());
    }

    #[test]
    fn homogeneity_detection() {
        assert!((x(0) * x(1) - x(2).pow(2)).is_homogeneous());
        assert!(!(x(0) * x(1) - x(2)).is_homogeneous());
        assert!(Poly::zero().is_homogeneous());
    }

    #[test]
    fn exact_evaluation() {
        use num_bigint::BigInt;
        let p = x(0).pow(3) - Poly::constant(2) * x(1);
        let pt = vec![
            BigRational::from_integer(BigInt::from(3)),
            BigRational::from_integer(BigInt::from(5)),
        ];
        assert_eq!(
            p.eval_rational(&pt),
            BigRational::from_integer(BigInt::from(17))
        );
        assert!((p.eval_f64(&[3.0, 5.0]) - 17.0).abs() < 1e-12);
    }
}
