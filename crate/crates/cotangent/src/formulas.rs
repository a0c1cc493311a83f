//! Closed-form dimension formulas and Poincaré-series constructions:
//! fat-point Harrison dimensions, their multigraded refinement by Möbius
//! inversion, the toric T⁰/T¹/T² tables, the multigraded and forgetful
//! series of the cone over the rational normal curve, partition-curve and
//! quotient-singularity series, and the hyperplane-section relation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{divisors_of_degree, moebius, ConeContext, MultiDegree};
use crate::series::{expand_inverse_one_plus, uni_rational_eval, MultiSeries, UniSeries};

/// c_n = (1/n) Σ_{e|n} (−1)^{n+n/e} μ(e) m^{n/e}: the dimension of the
/// degree-n component of the space of shuffle-vanishing functions on an
/// m-letter alphabet (equivalently, of the free graded Lie algebra on m
/// generators of degree −1). Integrality and nonnegativity are asserted.
pub fn fat_point_harrison_dim(m: i64, n: usize) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "fat point needs an embedding dimension m >= 2, got {m}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "Harrison dimensions start at n = 1".into(),
        ));
    }
    let n = n as i64;
    let mut sum = BigInt::zero();
    for e in 1..=n {
        if n % e != 0 {
            continue;
        }
        let mu = moebius(e)?;
        if mu == 0 {
            continue;
        }
        let q = n / e;
        let sign = if (n + q) % 2 == 0 { 1 } else { -1 };
        sum += BigInt::from(sign * mu) * BigInt::from(m).pow(q as u32);
    }
    let (c, rem) = sum.div_rem(&BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::ConsistencyCheck(format!(
            "c_{n}(m={m}) is not an integer: {sum}/{n}"
        )));
    }
    if c.is_negative() {
        return Err(Error::ConsistencyCheck(format!(
            "c_{n}(m={m}) is negative: {c}"
        )));
    }
    Ok(c)
}

/// Q_Z(t) = Σ_{n=1}^{order} c_n tⁿ for the fat point with socle dimension m.
pub fn q_fat_point(m: i64, order: usize) -> Result<UniSeries> {
    let mut terms = Vec::with_capacity(order);
    for n in 1..=order {
        terms.push((n, fat_point_harrison_dim(m, n)?));
    }
    Ok(UniSeries::from_terms(order, terms))
}

/// #{(v_1,…,v_parts) ∈ [1,top]^parts : Σ v_j = total}.
fn bounded_composition_count(top: i64, total: i64, parts: i64) -> BigInt {
    if parts == 0 {
        return BigInt::from((total == 0) as i64);
    }
    if top < 1 || total < parts || total > parts * top {
        return BigInt::zero();
    }
    let width = (parts * top + 1) as usize;
    let mut row = vec![BigInt::zero(); width];
    row[0] = BigInt::from(1);
    for _ in 0..parts {
        let mut next = vec![BigInt::zero(); width];
        for (s, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for v in 1..=top {
                let t = s + v as usize;
                if t < width {
                    next[t] += c;
                }
            }
        }
        row = next;
    }
    row[total as usize].clone()
}

/// a_R = (−1)^{ht R} · #{(v_1,…,v_n) ∈ [1,d−1]^n : Σ v_j = R_1}, n = ht(R):
/// the coefficient of x^R in (−1)^n (x^[1,1]+…+x^[d−1,1])^n.
fn tensor_weight_count(ctx: ConeContext, r: MultiDegree) -> BigInt {
    let count = bounded_composition_count(ctx.d() - 1, r.i, r.k);
    if r.k % 2 == 0 {
        count
    } else {
        -count
    }
}

/// c_R by scalar Möbius inversion, without the reconstruction check.
fn moebius_inverted_dim(ctx: ConeContext, r: MultiDegree) -> Result<BigInt> {
    let g = r.i.gcd(&r.k);
    let mut sum = BigInt::zero();
    for k in 1..=g {
        if g % k != 0 {
            continue;
        }
        let mu = moebius(k)?;
        if mu == 0 {
            continue;
        }
        sum += BigInt::from(mu) * tensor_weight_count(ctx, MultiDegree::new(r.i / k, r.k / k));
    }
    if r.k % 2 != 0 {
        sum = -sum;
    }
    let (c, rem) = sum.div_rem(&BigInt::from(r.k));
    if !rem.is_zero() {
        return Err(Error::ConsistencyCheck(format!(
            "Möbius inversion at {r} is not integral"
        )));
    }
    if c.is_negative() {
        return Err(Error::ConsistencyCheck(format!(
            "Möbius inversion at {r} gives a negative dimension {c}"
        )));
    }
    Ok(c)
}

/// c_R = dim of the height-graded shuffle-vanishing subspace in multidegree
/// R, for the fat point on d−1 generators of weights [1,1],…,[d−1,1].
/// Zero outside the support cone; the divisor-sum reconstruction
/// Σ_{R′|R} (−1)^{ht R′} ht(R′) c_{R′} = a_R is asserted on every call.
pub fn multigraded_harrison_dim(ctx: ConeContext, r: MultiDegree) -> Result<BigInt> {
    if r.is_zero() {
        return Err(Error::ZeroDegree);
    }
    if !ctx.in_support_cone(r) {
        return Ok(BigInt::zero());
    }
    let c = moebius_inverted_dim(ctx, r)?;
    let mut reconstructed = BigInt::zero();
    for (_, rp) in divisors_of_degree(r)? {
        let sign = if rp.ht() % 2 == 0 { 1 } else { -1 };
        reconstructed += BigInt::from(sign * rp.ht()) * moebius_inverted_dim(ctx, rp)?;
    }
    if reconstructed != tensor_weight_count(ctx, r) {
        return Err(Error::ConsistencyCheck(format!(
            "divisor-sum reconstruction fails at {r}"
        )));
    }
    Ok(c)
}

/// Q̃_Z(x) = Σ_{ht(R) ≤ height_cut} c_R x^R. Every height slice must sum to
/// the forgetful dimension c_n; this is asserted.
pub fn q_tilde_fat_point(ctx: ConeContext, height_cut: i64) -> Result<MultiSeries> {
    let mut series = MultiSeries::zero(ctx, height_cut);
    for k in 1..=height_cut.max(0) {
        let mut slice_total = BigInt::zero();
        for i in k..=(ctx.d() - 1) * k {
            let r = MultiDegree::new(i, k);
            let c = multigraded_harrison_dim(ctx, r)?;
            if !c.is_zero() {
                slice_total += &c;
                series = series.add(&MultiSeries::monomial(ctx, height_cut, r, c)?)?;
            }
        }
        if slice_total != fat_point_harrison_dim(ctx.d() - 1, k as usize)? {
            return Err(Error::ConsistencyCheck(format!(
                "height-{k} slice of the multigraded series does not sum to c_{k}"
            )));
        }
    }
    Ok(series)
}

/// Q̃_Y(x) = Q̃_Z(x) + x^[0,1] + x^[d,1]: the cone algebra adds the two
/// Noether-normalisation coordinates in the boundary degrees.
pub fn q_tilde_cone(ctx: ConeContext, height_cut: i64) -> Result<MultiSeries> {
    let one = BigInt::from(1);
    q_tilde_fat_point(ctx, height_cut)?
        .add(&MultiSeries::monomial(
            ctx,
            height_cut,
            MultiDegree::new(0, 1),
            one.clone(),
        )?)?
        .add(&MultiSeries::monomial(
            ctx,
            height_cut,
            MultiDegree::new(ctx.d(), 1),
            one,
        )?)
}

/// dim T⁰(−R): 2 where R is nonpositive on both rays, 1 where it is
/// nonpositive on one ray and exactly 1 on the other, 0 otherwise.
pub fn t0_dim(ctx: ConeContext, r: MultiDegree) -> i64 {
    let a = ctx.on_first_ray(r);
    let b = ctx.on_second_ray(r);
    if a <= 0 && b <= 0 {
        2
    } else if (a <= 0 && b == 1) || (b <= 0 && a == 1) {
        1
    } else {
        0
    }
}

/// dim T¹(−R): supported in height 1, with value 1 at [1,1] and [d−1,1]
/// and 2 at the degrees in between. Total 2d−4.
pub fn t1_dim(ctx: ConeContext, r: MultiDegree) -> i64 {
    if r.k != 1 {
        return 0;
    }
    match r.i {
        i if i == 1 || i == ctx.d() - 1 => 1,
        i if 2 <= i && i <= ctx.d() - 2 => 2,
        _ => 0,
    }
}

/// dim T²(−R): supported in height 2, with the closed table
/// k−2 (2 ≤ k ≤ d−1), d−3 (k = d), 2d−k−2 (d+1 ≤ k ≤ 2d−2).
/// Total (d−1)(d−3).
pub fn t2_dim(ctx: ConeContext, r: MultiDegree) -> i64 {
    if r.k != 2 {
        return 0;
    }
    let d = ctx.d();
    match r.i {
        i if 2 <= i && i < d => i - 2,
        i if i == d => d - 3,
        i if d < i && i <= 2 * d - 2 => 2 * d - i - 2,
        _ => 0,
    }
}

/// The multigraded Poincaré series of T^{≥1} of the cone:
/// P̃(x) = F·(Q̃_Y+2) / ((x^[0,1]+1)(x^[d,1]+1))
///         − x^[1,1]/(x^[0,1]+1) − x^[d−1,1]/(x^[d,1]+1)
/// with F = Σ_{v=1}^{d−1} x^[v,1] − x^[d,2]. The result is asserted
/// coefficientwise nonnegative with support in the interior of Λ.
pub fn p_tilde_cone(ctx: ConeContext, height_cut: i64) -> Result<MultiSeries> {
    let d = ctx.d();
    let cut = height_cut;
    let mono = |r: MultiDegree| MultiSeries::monomial(ctx, cut, r, BigInt::from(1));

    let mut f = MultiSeries::zero(ctx, cut);
    for v in 1..d {
        f = f.add(&mono(MultiDegree::new(v, 1))?)?;
    }
    f = f.sub(&mono(MultiDegree::new(d, 2))?)?;

    let q_y_plus_2 =
        q_tilde_cone(ctx, cut)?.add(&MultiSeries::one(ctx, cut).scale(&BigInt::from(2)))?;
    let inv0 = expand_inverse_one_plus(ctx, MultiDegree::new(0, 1), cut)?;
    let invd = expand_inverse_one_plus(ctx, MultiDegree::new(d, 1), cut)?;

    let term1 = f.mul(&q_y_plus_2)?.mul(&inv0)?.mul(&invd)?;
    let term2 = mono(MultiDegree::new(1, 1))?.mul(&inv0)?;
    let term3 = mono(MultiDegree::new(d - 1, 1))?.mul(&invd)?;

    let p = term1.sub(&term2)?.sub(&term3)?;
    p.assert_nonnegative()?;
    p.assert_support_interior()?;
    Ok(p)
}

/// The forgetful Poincaré series of the cone:
/// P(t) = (Q_Y+2)·((d−1)t − t²)/(t+1)² − 2t/(t+1),
/// where Q_Y(t) = Q_Z(t) + 2t.
pub fn p_cone(d: i64, order: usize) -> Result<UniSeries> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "the cone needs d >= 3, got {d}"
        )));
    }
    let q_y = q_fat_point(d - 1, order)?.add(&UniSeries::monomial(order, 1, BigInt::from(2)));
    let q_y_plus_2 = q_y.add(&UniSeries::monomial(order, 0, BigInt::from(2)));
    let numerator = q_y_plus_2.mul(&UniSeries::from_terms(
        order,
        [(1usize, d - 1), (2usize, -1)],
    ));
    let one_plus_t = vec![BigInt::from(1), BigInt::from(1)];
    let term1 = uni_rational_eval(&numerator, &[one_plus_t.clone(), one_plus_t.clone()], order)?;
    let term2 = uni_rational_eval(
        &UniSeries::monomial(order, 1, BigInt::from(2)),
        &[one_plus_t],
        order,
    )?;
    let p = term1.sub(&term2);
    p.assert_nonnegative()?;
    Ok(p)
}

/// The module-valued fat-point series
/// P_Z(t) = m² + Σ_{n≥1} (m·c_{n+1} − c_n) tⁿ = ((m−t)/t)·Q_Z(t),
/// computed by the exact shift route and cross-checked coefficientwise
/// against the explicit formula.
pub fn p_fat_point(m: i64, order: usize) -> Result<UniSeries> {
    let q = q_fat_point(m, order + 1)?;
    let shifted = q.shift_down_exact(1)?;
    let p = shifted.scale(&BigInt::from(m)).sub(&q);
    for n in 0..=order {
        let expected = if n == 0 {
            BigInt::from(m * m)
        } else {
            BigInt::from(m) * fat_point_harrison_dim(m, n + 1)? - fat_point_harrison_dim(m, n)?
        };
        if p.coeff(n) != expected {
            return Err(Error::ConsistencyCheck(format!(
                "fat-point module series mismatch at t^{n}"
            )));
        }
    }
    p.assert_nonnegative()?;
    Ok(p)
}

/// A partition curve of total multiplicity d with user-supplied dim T¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionCurveSpec {
    d: i64,
    tau_h: i64,
}

impl PartitionCurveSpec {
    pub fn new(d: i64, tau_h: i64) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidParameter(format!(
                "partition curve needs total multiplicity d >= 3, got {d}"
            )));
        }
        if tau_h < 0 {
            return Err(Error::InvalidParameter(format!(
                "dim T¹ must be nonnegative, got {tau_h}"
            )));
        }
        Ok(PartitionCurveSpec { d, tau_h })
    }

    pub fn d(self) -> i64 {
        self.d
    }

    pub fn tau_h(self) -> i64 {
        self.tau_h
    }
}

/// A quotient-type rational surface singularity of multiplicity d with
/// user-supplied dim T¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientSpec {
    d: i64,
    tau: i64,
}

impl QuotientSpec {
    pub fn new(d: i64, tau: i64) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidParameter(format!(
                "quotient singularity needs multiplicity d >= 3, got {d}"
            )));
        }
        if tau < 0 {
            return Err(Error::InvalidParameter(format!(
                "dim T¹ must be nonnegative, got {tau}"
            )));
        }
        Ok(QuotientSpec { d, tau })
    }

    pub fn d(self) -> i64 {
        self.d
    }

    pub fn tau(self) -> i64 {
        self.tau
    }
}

/// P_H(t) = ((d−1−t)/(t+1))·Q_Z(t) + τ_H·t − (d−1)²·t. The t¹ coefficient
/// is exactly τ_H; everything above is independent of τ_H.
pub fn p_partition_curve(spec: PartitionCurveSpec, order: usize) -> Result<UniSeries> {
    if order < 1 {
        return Err(Error::InvalidParameter(
            "partition-curve series need order >= 1".into(),
        ));
    }
    let d = spec.d;
    let q = q_fat_point(d - 1, order)?;
    let numerator = q.mul(&UniSeries::from_terms(
        order,
        [(0usize, d - 1), (1usize, -1)],
    ));
    let base = uni_rational_eval(&numerator, &[vec![BigInt::from(1), BigInt::from(1)]], order)?;
    let correction = spec.tau_h - (d - 1) * (d - 1);
    let p = base.add(&UniSeries::monomial(order, 1, BigInt::from(correction)));
    if p.coeff(1) != BigInt::from(spec.tau_h) {
        return Err(Error::ConsistencyCheck(
            "partition-curve series lost its t¹ = τ_H normalisation".into(),
        ));
    }
    p.assert_nonnegative()?;
    Ok(p)
}

/// P(t) for the quotient singularity: p_cone with the t¹ coefficient moved
/// from 2d−4 to τ (the correction term (τ−(2d−4))·t is added, making
/// coefficient t¹ equal τ; asserted).
pub fn p_quotient(spec: QuotientSpec, order: usize) -> Result<UniSeries> {
    if order < 1 {
        return Err(Error::InvalidParameter(
            "quotient series need order >= 1".into(),
        ));
    }
    let correction = spec.tau - (2 * spec.d - 4);
    let p = p_cone(spec.d, order)?.add(&UniSeries::monomial(order, 1, BigInt::from(correction)));
    if p.coeff(1) != BigInt::from(spec.tau) {
        return Err(Error::ConsistencyCheck(
            "quotient series lost its t¹ = τ normalisation".into(),
        ));
    }
    p.assert_nonnegative()?;
    Ok(p)
}

/// P_H(t) = (1 + 1/t)·P_Y(t) − τ_Y·(t+1) + e·t for a hyperplane section.
/// Requires zero constant term and t¹ coefficient τ_Y in the input; the
/// 1/t shift consumes one coefficient, so the output order drops by one.
/// The underlying vanishing hypothesis (multiplication by the section
/// equation kills T^{≥2}) is the caller's responsibility.
pub fn hyperplane_section_series(p_y: &UniSeries, tau_y: i64, e: i64) -> Result<UniSeries> {
    if !p_y.coeff(0).is_zero() {
        return Err(Error::InvalidParameter(
            "hyperplane section needs a series with zero constant term".into(),
        ));
    }
    if p_y.coeff(1) != BigInt::from(tau_y) {
        return Err(Error::InvalidParameter(format!(
            "t¹ coefficient {} does not match the declared dim T¹ = {tau_y}",
            p_y.coeff(1)
        )));
    }
    if p_y.order() == 0 {
        return Err(Error::InvalidParameter(
            "hyperplane section needs input order >= 1".into(),
        ));
    }
    let out_order = p_y.order() - 1;
    let shifted = p_y.shift_down_exact(1)?;
    let affine = UniSeries::from_terms(out_order, [(0usize, -tau_y), (1usize, e - tau_y)]);
    Ok(p_y.truncate(out_order).add(&shifted).add(&affine))
}

/// The height-2 slice of Q̃_Z in closed form: ½(A² + B) with
/// A = Σ_{v=1}^{d−1} x^[v,1] and B = Σ_{v=1}^{d−1} x^[2v,2].
pub fn q_tilde_ht2_closed(ctx: ConeContext, height_cut: i64) -> Result<MultiSeries> {
    let d = ctx.d();
    let mut series = MultiSeries::zero(ctx, height_cut);
    for w in 2..=2 * (d - 1) {
        let pairs = bounded_composition_count(d - 1, w, 2);
        let diagonal = BigInt::from((w % 2 == 0) as i64);
        let (half, rem) = (pairs + diagonal).div_rem(&BigInt::from(2));
        if !rem.is_zero() {
            return Err(Error::ConsistencyCheck(format!(
                "height-2 closed form is not integral at [{w},2]"
            )));
        }
        series = series.add(&MultiSeries::monomial(
            ctx,
            height_cut,
            MultiDegree::new(w, 2),
            half,
        )?)?;
    }
    Ok(series)
}

/// The height-3 slice of P̃ in closed form:
/// (x^[d,1]−x^[1,1])(x^[d−1,1]−x^[2,1])(x^[d,1]−x^[2,1])
///   / ((x^[1,0]−1)²(x^[2,0]−1)),
/// the height-zero denominator divided out slicewise and exactly.
pub fn t3_closed_form(ctx: ConeContext) -> Result<MultiSeries> {
    let d = ctx.d();
    let cut = 3;
    let mono = |r: MultiDegree| MultiSeries::monomial(ctx, cut, r, BigInt::from(1));
    let f1 = mono(MultiDegree::new(d, 1))?.sub(&mono(MultiDegree::new(1, 1))?)?;
    let f2 = mono(MultiDegree::new(d - 1, 1))?.sub(&mono(MultiDegree::new(2, 1))?)?;
    let f3 = mono(MultiDegree::new(d, 1))?.sub(&mono(MultiDegree::new(2, 1))?)?;
    let numerator = f1.mul(&f2)?.mul(&f3)?;
    // (u−1)²(u²−1), ascending in the height-zero variable u = x^[1,0].
    let divisor: Vec<BigInt> = [-1, 2, 0, -2, 1].map(BigInt::from).to_vec();
    numerator.exact_divide_slices(&divisor)
}

/// The symmetric even-d form of the height-3 slice: A·C·D with
/// A = Σ_{v=1}^{d−1} x^[v,1], C = Σ_{v=2}^{d−2} x^[v,1],
/// D = Σ_{v even, 2 ≤ v ≤ d−2} x^[v,1].
pub fn t3_even_product(ctx: ConeContext) -> Result<MultiSeries> {
    let d = ctx.d();
    if d % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "the symmetric triple product needs even d, got {d}"
        )));
    }
    let cut = 3;
    let mut a = MultiSeries::zero(ctx, cut);
    let mut c = MultiSeries::zero(ctx, cut);
    let mut e = MultiSeries::zero(ctx, cut);
    for v in 1..d {
        let m = MultiSeries::monomial(ctx, cut, MultiDegree::new(v, 1), BigInt::from(1))?;
        a = a.add(&m)?;
        if 2 <= v && v <= d - 2 {
            c = c.add(&m)?;
            if v % 2 == 0 {
                e = e.add(&m)?;
            }
        }
    }
    a.mul(&c)?.mul(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: i64) -> ConeContext {
        ConeContext::new(d).unwrap()
    }

    fn deg(i: i64, k: i64) -> MultiDegree {
        MultiDegree::new(i, k)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn harrison_dims_match_frozen_values() {
        for m in [2, 3, 4] {
            assert_eq!(fat_point_harrison_dim(m, 1).unwrap(), big(m));
        }
        let expect = |m: i64, values: &[i64]| {
            for (idx, v) in values.iter().enumerate() {
                assert_eq!(
                    fat_point_harrison_dim(m, idx + 1).unwrap(),
                    big(*v),
                    "c_{}(m={m})",
                    idx + 1
                );
            }
        };
        expect(2, &[2, 3, 2, 3, 6, 11]);
        expect(3, &[3, 6, 8, 18]);
        expect(4, &[4, 10, 20, 60]);
    }

    #[test]
    fn harrison_dim_rejects_degenerate_input() {
        assert!(fat_point_harrison_dim(1, 2).is_err());
        assert!(fat_point_harrison_dim(3, 0).is_err());
    }

    #[test]
    fn fat_point_series_examples() {
        assert_eq!(
            q_fat_point(3, 4).unwrap(),
            UniSeries::from_terms(4, [(1usize, 3), (2, 6), (3, 8), (4, 18)])
        );
        assert_eq!(
            q_fat_point(2, 2).unwrap(),
            UniSeries::from_terms(2, [(1usize, 2), (2, 3)])
        );
        assert!(q_fat_point(5, 0).unwrap().is_zero());
    }

    #[test]
    fn multigraded_height_one_is_one() {
        for d in [3, 4, 5] {
            for v in 1..d {
                assert_eq!(multigraded_harrison_dim(ctx(d), deg(v, 1)).unwrap(), big(1));
            }
        }
    }

    #[test]
    fn multigraded_height_two_values() {
        // d = 3: one tuple for each of [2,2], [3,2], [4,2].
        for i in [2, 3, 4] {
            assert_eq!(multigraded_harrison_dim(ctx(3), deg(i, 2)).unwrap(), big(1));
        }
        // d = 4: 1, 1, 2, 1, 1 across the slice.
        let expected = [(2, 1), (3, 1), (4, 2), (5, 1), (6, 1)];
        for (i, c) in expected {
            assert_eq!(multigraded_harrison_dim(ctx(4), deg(i, 2)).unwrap(), big(c));
        }
    }

    #[test]
    fn multigraded_vanishes_outside_support() {
        assert_eq!(multigraded_harrison_dim(ctx(3), deg(5, 2)).unwrap(), big(0));
        assert_eq!(multigraded_harrison_dim(ctx(3), deg(1, 2)).unwrap(), big(0));
        assert_eq!(
            multigraded_harrison_dim(ctx(4), deg(2, -1)).unwrap(),
            big(0)
        );
        assert!(multigraded_harrison_dim(ctx(3), deg(0, 0)).is_err());
    }

    #[test]
    fn q_tilde_fat_point_small_cuts() {
        let s1 = q_tilde_fat_point(ctx(3), 1).unwrap();
        assert_eq!(
            s1.terms().map(|(r, c)| (r, c.clone())).collect::<Vec<_>>(),
            vec![(deg(1, 1), big(1)), (deg(2, 1), big(1))]
        );
        let s2 = q_tilde_fat_point(ctx(3), 2).unwrap();
        assert_eq!(
            s2.terms().map(|(r, c)| (r, c.clone())).collect::<Vec<_>>(),
            vec![
                (deg(1, 1), big(1)),
                (deg(2, 1), big(1)),
                (deg(2, 2), big(1)),
                (deg(3, 2), big(1)),
                (deg(4, 2), big(1)),
            ]
        );
    }

    #[test]
    fn q_tilde_heightizes_to_forgetful_series() {
        for d in [3, 4, 5] {
            let cut = 4;
            assert_eq!(
                q_tilde_fat_point(ctx(d), cut).unwrap().heightize(),
                q_fat_point(d - 1, cut as usize).unwrap()
            );
        }
    }

    #[test]
    fn q_tilde_cone_adds_boundary_degrees() {
        let s = q_tilde_cone(ctx(3), 1).unwrap();
        assert_eq!(
            s.terms().map(|(r, c)| (r, c.clone())).collect::<Vec<_>>(),
            vec![
                (deg(0, 1), big(1)),
                (deg(1, 1), big(1)),
                (deg(2, 1), big(1)),
                (deg(3, 1), big(1)),
            ]
        );
        assert!(q_tilde_cone(ctx(4), 0).unwrap().is_zero());
        // Heightized: Q_Y = Q_Z + 2t.
        let q_y = q_tilde_cone(ctx(4), 3).unwrap().heightize();
        let q_z = q_fat_point(3, 3).unwrap();
        assert_eq!(q_y, q_z.add(&UniSeries::monomial(3, 1, big(2))));
    }

    #[test]
    fn t0_examples() {
        assert_eq!(t0_dim(ctx(3), deg(0, 0)), 2);
        assert_eq!(t0_dim(ctx(3), deg(1, 0)), 1);
        assert_eq!(t0_dim(ctx(3), deg(0, 1)), 0);
        assert_eq!(t0_dim(ctx(3), deg(-2, -1)), 2);
    }

    #[test]
    fn t1_table() {
        assert_eq!(t1_dim(ctx(5), deg(1, 1)), 1);
        assert_eq!(t1_dim(ctx(5), deg(3, 1)), 2);
        assert_eq!(t1_dim(ctx(5), deg(4, 1)), 1);
        assert_eq!(t1_dim(ctx(5), deg(3, 2)), 0);
        for d in 3..=8 {
            let total: i64 = (0..=d).map(|i| t1_dim(ctx(d), deg(i, 1))).sum();
            assert_eq!(total, 2 * d - 4);
        }
    }

    #[test]
    fn t2_table() {
        assert_eq!(t2_dim(ctx(5), deg(5, 2)), 2);
        assert_eq!(t2_dim(ctx(5), deg(7, 2)), 1);
        assert_eq!(t2_dim(ctx(5), deg(3, 1)), 0);
        for d in 3..=8 {
            let total: i64 = (0..=2 * d).map(|i| t2_dim(ctx(d), deg(i, 2))).sum();
            assert_eq!(total, (d - 1) * (d - 3));
        }
    }

    #[test]
    fn p_tilde_cone_height_one_slice_is_t1() {
        for d in [3, 4, 5, 6] {
            let p = p_tilde_cone(ctx(d), 1).unwrap();
            for i in 0..=d {
                assert_eq!(
                    p.coeff(deg(i, 1)),
                    big(t1_dim(ctx(d), deg(i, 1))),
                    "d={d}, degree [{i},1]"
                );
            }
        }
    }

    #[test]
    fn p_tilde_cone_heightizes_to_frozen_example() {
        let p = p_tilde_cone(ctx(4), 4).unwrap().heightize();
        assert_eq!(
            p,
            UniSeries::from_terms(4, [(1usize, 4), (2, 3), (3, 3), (4, 9)])
        );
    }

    #[test]
    fn p_cone_examples() {
        assert_eq!(
            p_cone(4, 4).unwrap(),
            UniSeries::from_terms(4, [(1usize, 4), (2, 3), (3, 3), (4, 9)])
        );
        for d in [3, 4, 5, 6] {
            assert_eq!(
                p_cone(d, 1).unwrap(),
                UniSeries::monomial(1, 1, big(2 * d - 4))
            );
        }
        assert_eq!(p_cone(3, 2).unwrap(), UniSeries::monomial(2, 1, big(2)));
        assert!(p_cone(2, 3).is_err());
    }

    #[test]
    fn p_fat_point_examples() {
        assert_eq!(
            p_fat_point(3, 3).unwrap(),
            UniSeries::from_terms(3, [(0usize, 9), (1, 15), (2, 18), (3, 46)])
        );
        assert_eq!(
            p_fat_point(2, 1).unwrap(),
            UniSeries::from_terms(1, [(0usize, 4), (1, 4)])
        );
        for m in 2..=6 {
            assert!(p_fat_point(m, 10).unwrap().assert_nonnegative().is_ok());
        }
    }

    #[test]
    fn partition_curve_examples() {
        let p = p_partition_curve(PartitionCurveSpec::new(4, 7).unwrap(), 3).unwrap();
        assert_eq!(p, UniSeries::from_terms(3, [(1usize, 7), (2, 6), (3, 12)]));
        let p3 = p_partition_curve(PartitionCurveSpec::new(3, 5).unwrap(), 3).unwrap();
        assert_eq!(p3, UniSeries::from_terms(3, [(1usize, 5), (3, 1)]));
        // Higher coefficients do not depend on τ_H.
        for order in [2, 4, 5] {
            let a = p_partition_curve(PartitionCurveSpec::new(5, 0).unwrap(), order).unwrap();
            let b = p_partition_curve(PartitionCurveSpec::new(5, 9).unwrap(), order).unwrap();
            for n in 2..=order {
                assert_eq!(a.coeff(n), b.coeff(n));
            }
        }
        assert!(PartitionCurveSpec::new(2, 1).is_err());
        assert!(PartitionCurveSpec::new(4, -1).is_err());
    }

    #[test]
    fn quotient_examples() {
        let base = p_quotient(QuotientSpec::new(4, 4).unwrap(), 3).unwrap();
        assert_eq!(base, p_cone(4, 3).unwrap());
        let shifted = p_quotient(QuotientSpec::new(4, 9).unwrap(), 2).unwrap();
        assert_eq!(shifted, UniSeries::from_terms(2, [(1usize, 9), (2, 3)]));
        for n in 2..=4 {
            assert_eq!(
                p_quotient(QuotientSpec::new(5, 11).unwrap(), 4)
                    .unwrap()
                    .coeff(n),
                p_cone(5, 4).unwrap().coeff(n)
            );
        }
    }

    #[test]
    fn hyperplane_section_reproduces_partition_series() {
        let tau_h = 11;
        let section = hyperplane_section_series(&p_cone(4, 4).unwrap(), 4, tau_h - 3).unwrap();
        assert_eq!(
            section,
            p_partition_curve(PartitionCurveSpec::new(4, tau_h).unwrap(), 3).unwrap()
        );
    }

    #[test]
    fn hyperplane_section_degenerate_and_invalid_inputs() {
        let zero = UniSeries::zero(3);
        assert!(hyperplane_section_series(&zero, 0, 0).unwrap().is_zero());
        let with_constant = UniSeries::one(3);
        assert!(hyperplane_section_series(&with_constant, 0, 0).is_err());
        let p = UniSeries::from_terms(3, [(1usize, 4)]);
        assert!(hyperplane_section_series(&p, 5, 0).is_err());
    }

    #[test]
    fn height_two_closed_form_matches_moebius_route() {
        for d in [3, 4, 5, 6] {
            let closed = q_tilde_ht2_closed(ctx(d), 2).unwrap();
            let inverted = q_tilde_fat_point(ctx(d), 2).unwrap();
            for i in 2..=2 * (d - 1) {
                assert_eq!(
                    closed.coeff(deg(i, 2)),
                    inverted.coeff(deg(i, 2)),
                    "d={d}, [{i},2]"
                );
            }
        }
    }

    #[test]
    fn height_three_closed_form() {
        assert!(t3_closed_form(ctx(3)).unwrap().is_zero());
        let d4 = t3_closed_form(ctx(4)).unwrap();
        assert_eq!(
            d4.terms().map(|(r, c)| (r, c.clone())).collect::<Vec<_>>(),
            vec![
                (deg(5, 3), big(1)),
                (deg(6, 3), big(1)),
                (deg(7, 3), big(1)),
            ]
        );
        assert_eq!(t3_even_product(ctx(4)).unwrap(), d4);
        assert!(t3_even_product(ctx(5)).is_err());
    }
}
