//! Single-variable series truncated at a fixed order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in t with integer coefficients, known to be correct up to
/// and including t^order. Absent exponents are zero; nothing is stored
/// beyond the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries {
    order: usize,
    coeffs: BTreeMap<usize, BigInt>,
}

impl UniSeries {
    pub fn zero(order: usize) -> Self {
        UniSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::from(1))
    }

    /// The single term c·t^n (dropped entirely if n exceeds the order).
    pub fn monomial(order: usize, n: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        s.insert(n, c);
        s
    }

    pub fn from_terms<I, C>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (n, c) in terms {
            let c = c.into();
            let prev = s.coeff(n);
            s.insert(n, prev + c);
        }
        s
    }

    fn insert(&mut self, n: usize, c: BigInt) {
        if n > self.order || c.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, c);
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(&n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in &self.coeffs {
            if *n <= order {
                s.coeffs.insert(*n, c.clone());
            }
        }
        s
    }

    /// Coefficientwise sum; the result is reliable only up to the smaller
    /// order, so that is its order.
    pub fn add(&self, rhs: &UniSeries) -> UniSeries {
        let order = self.order.min(rhs.order);
        let mut s = Self::zero(order);
        for (n, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if *n <= order {
                let prev = s.coeff(*n);
                s.insert(*n, prev + c);
            }
        }
        s
    }

    pub fn neg(&self) -> UniSeries {
        let mut s = self.clone();
        for c in s.coeffs.values_mut() {
            *c = -c.clone();
        }
        s
    }

    pub fn sub(&self, rhs: &UniSeries) -> UniSeries {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &BigInt) -> UniSeries {
        let mut s = Self::zero(self.order);
        if c.is_zero() {
            return s;
        }
        for (n, a) in &self.coeffs {
            s.coeffs.insert(*n, a * c);
        }
        s
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &UniSeries) -> UniSeries {
        let order = self.order.min(rhs.order);
        let mut s = Self::zero(order);
        for (n, a) in &self.coeffs {
            for (m, b) in &rhs.coeffs {
                if n + m <= order {
                    let prev = s.coeff(n + m);
                    s.insert(n + m, prev + a * b);
                }
            }
        }
        s
    }

    /// Multiplication by t^j; terms pushed past the order fall off.
    pub fn shift_up(&self, j: usize) -> UniSeries {
        let mut s = Self::zero(self.order);
        for (n, c) in &self.coeffs {
            s.insert(n + j, c.clone());
        }
        s
    }

    /// Exact division by t^j: requires every coefficient below t^j to be
    /// zero. The result is reliable (and truncated) to order − j.
    pub fn shift_down_exact(&self, j: usize) -> Result<UniSeries> {
        if j > self.order {
            return Err(Error::InvalidParameter(format!(
                "cannot divide an order-{} series by t^{j}",
                self.order
            )));
        }
        let mut s = Self::zero(self.order - j);
        for (n, c) in &self.coeffs {
            if *n < j {
                return Err(Error::NonIntegralQuotient { exponent: *n });
            }
            s.insert(n - j, c.clone());
        }
        Ok(s)
    }

    /// True if every coefficient is ≥ 0.
    pub fn assert_nonnegative(&self) -> Result<()> {
        for (n, c) in &self.coeffs {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient {
                    degree: format!("t^{n}"),
                    value: c.to_string(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (n, c)) in self.coeffs.iter().enumerate() {
            let a = if pos == 0 {
                c.clone()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            match n {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*t")?,
                _ => write!(f, "{a}*t^{n}")?,
            }
        }
        Ok(())
    }
}

/// Expands numerator / Π factors as a truncated series. The numerator is
/// treated as an exact polynomial; each denominator factor is a polynomial
/// given by ascending coefficients and must have a nonzero constant term.
/// Every division step must be exact in integers.
pub fn uni_rational_eval(
    numerator: &UniSeries,
    denominator_factors: &[Vec<BigInt>],
    order: usize,
) -> Result<UniSeries> {
    let mut acc = numerator.truncate(order);
    for factor in denominator_factors {
        acc = divide_by_poly(&acc, factor)?;
    }
    Ok(acc)
}

/// Long division of a truncated series by a polynomial with nonzero
/// constant term, solving p_0·c_n = a_n − Σ_{j≥1} p_j·c_{n−j} exactly.
fn divide_by_poly(num: &UniSeries, p: &[BigInt]) -> Result<UniSeries> {
    let p0 = p.first().cloned().unwrap_or_else(BigInt::zero);
    if p0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let order = num.order;
    let mut q = UniSeries::zero(order);
    for n in 0..=order {
        let mut rhs = num.coeff(n);
        for (j, pj) in p.iter().enumerate().skip(1) {
            if j > n {
                break;
            }
            rhs -= pj * q.coeff(n - j);
        }
        if rhs.is_zero() {
            continue;
        }
        let (c, rem) = num_integer::div_rem(rhs, p0.clone());
        if !rem.is_zero() {
            return Err(Error::NonIntegralQuotient { exponent: n });
        }
        q.insert(n, c);
    }
    Ok(q)
}
