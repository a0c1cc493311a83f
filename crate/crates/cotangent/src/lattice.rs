//! Degree arithmetic for the two-dimensional cone σ spanned by (1,0) and (−1,d).
//!
//! Degrees live in the dual lattice Z² and are written `[i,k]`; they pair
//! with the ray generators as ⟨[i,k],(1,0)⟩ = i and ⟨[i,k],(−1,d)⟩ = d·k − i.
//! The monoid Λ collects the degrees nonnegative on σ, its interior the ones
//! strictly positive on σ∖{0}. The second coordinate k is the height: the
//! grading that remains when the two-dimensional degree is forgotten.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A lattice degree `[i,k]`. The height of `[i,k]` is `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultiDegree {
    pub i: i64,
    pub k: i64,
}

impl MultiDegree {
    pub const ZERO: MultiDegree = MultiDegree { i: 0, k: 0 };

    pub fn new(i: i64, k: i64) -> Self {
        MultiDegree { i, k }
    }

    /// The height of the degree (its second coordinate).
    pub fn ht(self) -> i64 {
        self.k
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

/// Degrees are ordered by (height, first coordinate); this is the canonical
/// term order of every series and every enumerated basis in the crate.
impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.i).cmp(&(other.k, other.i))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for MultiDegree {
    type Output = MultiDegree;
    fn add(self, rhs: Self) -> Self {
        MultiDegree::new(self.i + rhs.i, self.k + rhs.k)
    }
}

impl Sub for MultiDegree {
    type Output = MultiDegree;
    fn sub(self, rhs: Self) -> Self {
        MultiDegree::new(self.i - rhs.i, self.k - rhs.k)
    }
}

impl Neg for MultiDegree {
    type Output = MultiDegree;
    fn neg(self) -> Self {
        MultiDegree::new(-self.i, -self.k)
    }
}

impl Mul<i64> for MultiDegree {
    type Output = MultiDegree;
    fn mul(self, rhs: i64) -> Self {
        MultiDegree::new(self.i * rhs, self.k * rhs)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.k)
    }
}

/// Parses the CLI form `i,k` (optionally with surrounding whitespace).
impl FromStr for MultiDegree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(',');
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse(format!(
                    "expected a degree of the form i,k, got {s:?}"
                )))
            }
        };
        let i = a
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad first coordinate {a:?}: {e}")))?;
        let k = b
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad height {b:?}: {e}")))?;
        Ok(MultiDegree::new(i, k))
    }
}

/// The fixed cone parameter d ≥ 3: degree of the rational normal curve,
/// equivalently the multiplicity of the singularities under study.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeContext {
    d: i64,
}

impl ConeContext {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 3 {
            Ok(ConeContext { d })
        } else {
            Err(Error::InvalidParameter(format!("d must be >= 3, got {d}")))
        }
    }

    pub fn d(self) -> i64 {
        self.d
    }

    /// Value of the degree on the ray generator (1,0).
    pub fn on_first_ray(self, r: MultiDegree) -> i64 {
        r.i
    }

    /// Value of the degree on the ray generator (−1,d).
    pub fn on_second_ray(self, r: MultiDegree) -> i64 {
        self.d * r.k - r.i
    }

    /// Membership in Λ: nonnegative on both rays.
    pub fn in_lambda(self, r: MultiDegree) -> bool {
        self.on_first_ray(r) >= 0 && self.on_second_ray(r) >= 0
    }

    /// Membership in int Λ: strictly positive on both rays, which by
    /// linearity is strict positivity on all of σ∖{0}.
    pub fn in_interior_lambda(self, r: MultiDegree) -> bool {
        self.on_first_ray(r) > 0 && self.on_second_ray(r) > 0
    }

    /// Membership in the rational cone spanned by [1,1] and [d−1,1], i.e.
    /// ht(r) ≤ i ≤ (d−1)·ht(r). This is the saturation of the semigroup
    /// generated by those two degrees and carries the support of every
    /// fat-point Harrison series: a height-n coefficient comes from tuples
    /// of n generator weights, each between 1 and d−1.
    pub fn in_support_cone(self, r: MultiDegree) -> bool {
        r.k >= 0 && r.k <= r.i && r.i <= (self.d - 1) * r.k
    }

    /// Membership in K_R = {r ∈ Z²∖{0} | r ∈ Λ, R − r ∈ int Λ}.
    pub fn in_k_set(self, big_r: MultiDegree, r: MultiDegree) -> bool {
        !r.is_zero() && self.in_lambda(r) && self.in_interior_lambda(big_r - r)
    }

    /// Enumerates K_R in the canonical (height, first coordinate) order.
    ///
    /// The scan bounds b ∈ [0, R_2], a ∈ [0, min(d·b, R_1 − 1)] follow from
    /// the defining inequalities; the remaining strictness condition is
    /// checked per point. Empty whenever R is not in int Λ.
    pub fn enumerate_k_set(self, big_r: MultiDegree) -> Vec<MultiDegree> {
        let mut points = Vec::new();
        for b in 0..=big_r.k.max(0) {
            let a_max = (self.d * b).min(big_r.i - 1);
            for a in 0..=a_max.max(-1) {
                let r = MultiDegree::new(a, b);
                if self.in_k_set(big_r, r) {
                    points.push(r);
                }
            }
        }
        points
    }
}

/// The classical Möbius function. Rejects n ≤ 0.
pub fn moebius(n: i64) -> Result<i64> {
    if n <= 0 {
        return Err(Error::InvalidParameter(format!(
            "moebius needs n >= 1, got {n}"
        )));
    }
    let mut rest = n;
    let mut prime_count = 0u32;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return Ok(0);
            }
            prime_count += 1;
        }
        p += 1;
    }
    if rest > 1 {
        prime_count += 1;
    }
    Ok(if prime_count.is_multiple_of(2) { 1 } else { -1 })
}

/// All pairs (k, R/k) with k ≥ 1 dividing both coordinates, ordered by
/// increasing k. R = [0,0] is rejected: it has infinitely many divisors.
pub fn divisors_of_degree(r: MultiDegree) -> Result<Vec<(i64, MultiDegree)>> {
    if r.is_zero() {
        return Err(Error::ZeroDegree);
    }
    let g = r.i.abs().gcd(&r.k.abs());
    let mut pairs: Vec<(i64, MultiDegree)> = divisors(g)
        .into_iter()
        .map(|k| (k, MultiDegree::new(r.i / k, r.k / k)))
        .collect();
    pairs.sort_by_key(|(k, _)| *k);
    Ok(pairs)
}

/// Positive divisors of g ≥ 1, unordered pair harvest then sorted by caller.
fn divisors(g: i64) -> Vec<i64> {
    debug_assert!(g >= 1);
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= g {
        if g % k == 0 {
            out.push(k);
            if k != g / k {
                out.push(g / k);
            }
        }
        k += 1;
    }
    out
}
