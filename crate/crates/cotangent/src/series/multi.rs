//! Series over the cone monoid Λ, truncated by height.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{ConeContext, MultiDegree};
use crate::series::UniSeries;

/// An element of the semigroup ring of Λ, reliable up to and including the
/// stored height cut. Every stored degree lies in Λ; within a height slice
/// the support is automatically finite (0 ≤ i ≤ d·k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    ctx: ConeContext,
    height_cut: i64,
    coeffs: BTreeMap<MultiDegree, BigInt>,
}

impl MultiSeries {
    pub fn zero(ctx: ConeContext, height_cut: i64) -> Self {
        MultiSeries {
            ctx,
            height_cut,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ctx: ConeContext, height_cut: i64) -> Self {
        let mut s = Self::zero(ctx, height_cut);
        s.coeffs.insert(MultiDegree::ZERO, BigInt::from(1));
        s
    }

    /// The single term c·x^R. Degrees outside Λ are rejected; degrees above
    /// the cut are silently dropped (they are beyond the reliable range).
    pub fn monomial(ctx: ConeContext, height_cut: i64, r: MultiDegree, c: BigInt) -> Result<Self> {
        let mut s = Self::zero(ctx, height_cut);
        s.insert(r, c)?;
        Ok(s)
    }

    pub fn from_terms<I, C>(ctx: ConeContext, height_cut: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiDegree, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(ctx, height_cut);
        for (r, c) in terms {
            let prev = s.coeff(r);
            s.insert(r, prev + c.into())?;
        }
        Ok(s)
    }

    fn insert(&mut self, r: MultiDegree, c: BigInt) -> Result<()> {
        if c.is_zero() || r.ht() > self.height_cut {
            self.coeffs.remove(&r);
            return Ok(());
        }
        if !self.ctx.in_lambda(r) {
            return Err(Error::SupportViolation {
                degree: r.to_string(),
                reason: "degree lies outside the cone monoid".into(),
            });
        }
        self.coeffs.insert(r, c);
        Ok(())
    }

    pub fn ctx(&self) -> ConeContext {
        self.ctx
    }

    pub fn height_cut(&self) -> i64 {
        self.height_cut
    }

    pub fn coeff(&self, r: MultiDegree) -> BigInt {
        self.coeffs.get(&r).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiDegree, &BigInt)> {
        self.coeffs.iter().map(|(r, c)| (*r, c))
    }

    /// All terms of one height, as (first coordinate, coefficient) pairs in
    /// increasing order of the first coordinate.
    pub fn slice(&self, k: i64) -> Vec<(i64, BigInt)> {
        self.coeffs
            .range(MultiDegree::new(i64::MIN, k)..=MultiDegree::new(i64::MAX, k))
            .map(|(r, c)| (r.i, c.clone()))
            .collect()
    }

    /// One height slice as a dense polynomial in the first coordinate,
    /// ascending, trailing zeros trimmed.
    fn slice_poly(&self, k: i64) -> Vec<BigInt> {
        let terms = self.slice(k);
        let deg = terms.last().map(|(i, _)| *i).unwrap_or(-1);
        let mut poly = vec![BigInt::zero(); (deg + 1).max(0) as usize];
        for (i, c) in terms {
            poly[i as usize] = c;
        }
        poly
    }

    fn check_ctx(&self, rhs: &MultiSeries) -> Result<()> {
        if self.ctx.d() == rhs.ctx.d() {
            Ok(())
        } else {
            Err(Error::MismatchedContext(self.ctx.d(), rhs.ctx.d()))
        }
    }

    pub fn add(&self, rhs: &MultiSeries) -> Result<MultiSeries> {
        self.check_ctx(rhs)?;
        let cut = self.height_cut.min(rhs.height_cut);
        let mut s = Self::zero(self.ctx, cut);
        for (r, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            let prev = s.coeff(*r);
            s.insert(*r, prev + c)?;
        }
        Ok(s)
    }

    pub fn neg(&self) -> MultiSeries {
        let mut s = self.clone();
        for c in s.coeffs.values_mut() {
            *c = -c.clone();
        }
        s
    }

    pub fn sub(&self, rhs: &MultiSeries) -> Result<MultiSeries> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &BigInt) -> MultiSeries {
        let mut s = Self::zero(self.ctx, self.height_cut);
        if c.is_zero() {
            return s;
        }
        for (r, a) in &self.coeffs {
            s.coeffs.insert(*r, a * c);
        }
        s
    }

    /// Cauchy product truncated to the smaller height cut. Λ is a monoid,
    /// so the support constraint is preserved automatically.
    pub fn mul(&self, rhs: &MultiSeries) -> Result<MultiSeries> {
        self.check_ctx(rhs)?;
        let cut = self.height_cut.min(rhs.height_cut);
        let mut s = Self::zero(self.ctx, cut);
        for (r, a) in &self.coeffs {
            for (q, b) in &rhs.coeffs {
                let sum = *r + *q;
                if sum.ht() <= cut {
                    let prev = s.coeff(sum);
                    s.insert(sum, prev + a * b)?;
                }
            }
        }
        Ok(s)
    }

    /// Substitutes x^R ↦ t^{ht(R)}: a ring homomorphism onto single-variable
    /// series with order equal to the height cut.
    pub fn heightize(&self) -> UniSeries {
        UniSeries::from_terms(
            self.height_cut.max(0) as usize,
            self.coeffs
                .iter()
                .map(|(r, c)| (r.ht() as usize, c.clone())),
        )
    }

    pub fn assert_nonnegative(&self) -> Result<()> {
        for (r, c) in &self.coeffs {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient {
                    degree: r.to_string(),
                    value: c.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Checks that every term lies strictly inside the cone monoid.
    pub fn assert_support_interior(&self) -> Result<()> {
        for r in self.coeffs.keys() {
            if !self.ctx.in_interior_lambda(*r) {
                return Err(Error::SupportViolation {
                    degree: r.to_string(),
                    reason: "term lies on the boundary of the cone monoid".into(),
                });
            }
        }
        Ok(())
    }

    /// Exact division of every height slice by (x^{[1,0]} − 1)^j, with a
    /// mandatory zero remainder. Height-zero denominators are never expanded
    /// geometrically; this is the only way they are handled.
    pub fn exact_divide_height_zero(&self, j: u32) -> Result<MultiSeries> {
        let divisor = pow_u_minus_one(j);
        self.exact_divide_slices(&divisor)
    }

    /// Exact slicewise division by an arbitrary height-zero polynomial in
    /// x^{[1,0]} (ascending coefficients, leading coefficient ±1).
    pub fn exact_divide_slices(&self, divisor: &[BigInt]) -> Result<MultiSeries> {
        let deg = match divisor.iter().rposition(|c| !c.is_zero()) {
            Some(p) => p,
            None => {
                return Err(Error::InvalidParameter(
                    "division by the zero polynomial".into(),
                ))
            }
        };
        let lead = &divisor[deg];
        assert!(
            (lead.clone().abs()) == BigInt::from(1),
            "slicewise division expects a monic (up to sign) divisor"
        );
        let mut s = Self::zero(self.ctx, self.height_cut);
        for k in 0..=self.height_cut {
            let num = self.slice_poly(k);
            let quot = poly_div_exact(&num, &divisor[..=deg])
                .ok_or(Error::NonzeroRemainder { height: k })?;
            for (i, c) in quot.into_iter().enumerate() {
                s.insert(MultiDegree::new(i as i64, k), c)?;
            }
        }
        Ok(s)
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (r, c)) in self.coeffs.iter().enumerate() {
            let a = if pos == 0 {
                c.clone()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if r.is_zero() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*x^{r}")?;
            }
        }
        Ok(())
    }
}

/// Σ_{j≥0} (−1)^j x^{jR}, the geometric inverse of (1 + x^R), truncated at
/// the height cut. R must lie in Λ with height ≥ 1 so that the expansion is
/// height-graded.
pub fn expand_inverse_one_plus(
    ctx: ConeContext,
    r: MultiDegree,
    height_cut: i64,
) -> Result<MultiSeries> {
    if r.ht() < 1 {
        return Err(Error::InvalidParameter(format!(
            "geometric expansion needs ht(R) >= 1, got R = {r}"
        )));
    }
    if !ctx.in_lambda(r) {
        return Err(Error::SupportViolation {
            degree: r.to_string(),
            reason: "expansion degree lies outside the cone monoid".into(),
        });
    }
    let mut s = MultiSeries::zero(ctx, height_cut);
    let mut j = 0i64;
    while j * r.ht() <= height_cut {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        s.insert(r * j, BigInt::from(sign))?;
        j += 1;
    }
    Ok(s)
}

/// Ascending coefficients of (u − 1)^j.
fn pow_u_minus_one(j: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(1)];
    for _ in 0..j {
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] -= c;
            next[i + 1] += c;
        }
        p = next;
    }
    p
}

/// Ordinary polynomial long division, ascending-coefficient inputs,
/// divisor leading coefficient ±1. None on a nonzero remainder.
fn poly_div_exact(num: &[BigInt], div: &[BigInt]) -> Option<Vec<BigInt>> {
    let ndeg = match num.iter().rposition(|c| !c.is_zero()) {
        Some(p) => p,
        None => return Some(Vec::new()),
    };
    let ddeg = div.len() - 1;
    if ndeg < ddeg {
        return None;
    }
    let mut rem: Vec<BigInt> = num[..=ndeg].to_vec();
    let mut quot = vec![BigInt::zero(); ndeg - ddeg + 1];
    let lead = &div[ddeg];
    for top in (ddeg..=ndeg).rev() {
        let c = rem[top].clone();
        if c.is_zero() {
            continue;
        }
        let q = &c / lead;
        quot[top - ddeg] = q.clone();
        for (i, dc) in div.iter().enumerate() {
            let idx = top - ddeg + i;
            rem[idx] = &rem[idx] - &q * dc;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(d: i64) -> ConeContext {
        ConeContext::new(d).unwrap()
    }

    fn deg(i: i64, k: i64) -> MultiDegree {
        MultiDegree::new(i, k)
    }

    fn series(d: i64, cut: i64, terms: &[(i64, i64, i64)]) -> MultiSeries {
        MultiSeries::from_terms(ctx(d), cut, terms.iter().map(|&(i, k, c)| (deg(i, k), c))).unwrap()
    }

    #[test]
    fn addition_merges_and_cancels() {
        let x11 = series(3, 3, &[(1, 1, 1)]);
        assert_eq!(x11.add(&x11).unwrap(), series(3, 3, &[(1, 1, 2)]));
        let zero = MultiSeries::zero(ctx(3), 3);
        assert_eq!(x11.add(&zero).unwrap(), x11);
        let a = series(3, 3, &[(1, 1, 1), (2, 1, -1)]);
        let b = series(3, 3, &[(2, 1, 1)]);
        assert_eq!(a.add(&b).unwrap(), x11);
    }

    #[test]
    fn mismatched_contexts_rejected() {
        let a = series(3, 2, &[(1, 1, 1)]);
        let b = series(4, 2, &[(1, 1, 1)]);
        assert_eq!(a.add(&b), Err(Error::MismatchedContext(3, 4)));
    }

    #[test]
    fn products_of_monomials_and_binomials() {
        let a = series(5, 4, &[(1, 1, 1)]);
        let b = series(5, 4, &[(2, 1, 1)]);
        assert_eq!(a.mul(&b).unwrap(), series(5, 4, &[(3, 2, 1)]));

        let s = series(5, 4, &[(1, 1, 1), (2, 1, 1)]);
        assert_eq!(
            s.mul(&s).unwrap(),
            series(5, 4, &[(2, 2, 1), (3, 2, 2), (4, 2, 1)])
        );
        let one = MultiSeries::one(ctx(5), 4);
        assert_eq!(s.mul(&one).unwrap(), s);
    }

    #[test]
    fn support_outside_lambda_rejected() {
        let err = MultiSeries::monomial(ctx(3), 2, deg(4, 1), BigInt::from(1));
        assert!(matches!(err, Err(Error::SupportViolation { .. })));
    }

    #[test]
    fn geometric_expansion_examples() {
        let got = expand_inverse_one_plus(ctx(3), deg(0, 1), 3).unwrap();
        assert_eq!(
            got,
            series(3, 3, &[(0, 0, 1), (0, 1, -1), (0, 2, 1), (0, 3, -1)])
        );
        let got = expand_inverse_one_plus(ctx(3), deg(3, 1), 2).unwrap();
        assert_eq!(got, series(3, 2, &[(0, 0, 1), (3, 1, -1), (6, 2, 1)]));

        let one_plus = series(3, 3, &[(0, 0, 1), (0, 1, 1)]);
        let inv = expand_inverse_one_plus(ctx(3), deg(0, 1), 3).unwrap();
        assert_eq!(one_plus.mul(&inv).unwrap(), MultiSeries::one(ctx(3), 3));
    }

    #[test]
    fn expansion_rejects_height_zero() {
        assert!(expand_inverse_one_plus(ctx(3), deg(1, 0), 3).is_err());
    }

    #[test]
    fn telescoping_divisions() {
        let num = series(3, 2, &[(3, 1, 1), (1, 1, -1)]);
        assert_eq!(
            num.exact_divide_height_zero(1).unwrap(),
            series(3, 2, &[(1, 1, 1), (2, 1, 1)])
        );

        let num = series(4, 2, &[(4, 1, 1), (1, 1, -1)]);
        assert_eq!(
            num.exact_divide_height_zero(1).unwrap(),
            series(4, 2, &[(1, 1, 1), (2, 1, 1), (3, 1, 1)])
        );

        let num = series(4, 2, &[(2, 1, 1), (1, 1, -1)]);
        assert_eq!(
            num.exact_divide_height_zero(2),
            Err(Error::NonzeroRemainder { height: 1 })
        );
    }

    #[test]
    fn heightize_examples() {
        let s = series(3, 2, &[(1, 1, 1), (2, 1, 1)]);
        assert_eq!(s.heightize(), UniSeries::from_terms(2, [(1usize, 2)]));
        let s = series(3, 2, &[(3, 2, 1)]);
        assert_eq!(s.heightize(), UniSeries::from_terms(2, [(2usize, 1)]));
        assert_eq!(MultiSeries::zero(ctx(3), 2).heightize(), UniSeries::zero(2));
    }

    fn arb_series(d: i64, cut: i64) -> impl Strategy<Value = MultiSeries> {
        arb_round_trip_series(d, cut, 0)
    }

    /// Random series whose slice degrees stay `margin` below the Λ bound,
    /// so multiplying by a height-zero polynomial of that degree is safe.
    fn arb_round_trip_series(d: i64, cut: i64, margin: i64) -> impl Strategy<Value = MultiSeries> {
        let degs: Vec<MultiDegree> = (0..=cut)
            .flat_map(|k| (0..=(d * k - margin)).map(move |i| deg(i, k)))
            .collect();
        let len = degs.len();
        proptest::collection::vec(-9i64..=9, len).prop_map(move |cs| {
            MultiSeries::from_terms(ctx(d), cut, degs.iter().cloned().zip(cs)).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms((a, b, c) in (arb_series(3, 3), arb_series(3, 3), arb_series(3, 3))) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn geometric_inverse_property(i in 0i64..=4, k in 1i64..=2) {
            let d = 4;
            prop_assume!(i <= d * k);
            let r = deg(i, k);
            let inv = expand_inverse_one_plus(ctx(d), r, 4).unwrap();
            let one_plus = MultiSeries::one(ctx(d), 4)
                .add(&MultiSeries::monomial(ctx(d), 4, r, BigInt::from(1)).unwrap())
                .unwrap();
            prop_assert_eq!(one_plus.mul(&inv).unwrap(), MultiSeries::one(ctx(d), 4));
        }

        #[test]
        fn division_round_trips(p in arb_round_trip_series(3, 3, 2), j in 1u32..=2) {
            // x^{[1,0]} lies outside Λ, so the product p·(u−1)^j is formed
            // slice by slice; the generator keeps slice degrees low enough
            // for the product to stay inside Λ.
            let divisor = pow_u_minus_one(j);
            let mut product = MultiSeries::zero(ctx(3), 3);
            for (r, c) in p.terms() {
                for (e, dc) in divisor.iter().enumerate() {
                    let shifted = deg(r.i + e as i64, r.k);
                    let prev = product.coeff(shifted);
                    product.insert(shifted, prev + c * dc).unwrap();
                }
            }
            prop_assert_eq!(product.exact_divide_height_zero(j).unwrap(), p);
        }

        #[test]
        fn heightize_is_multiplicative(a in arb_series(3, 3), b in arb_series(3, 3)) {
            let lhs = a.mul(&b).unwrap().heightize();
            let rhs = a.heightize().mul(&b.heightize());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
