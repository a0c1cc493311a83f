//! Cochain complexes on lattice-degree tuples and their cohomology.
//!
//! Two variants share the tuple/shuffle machinery: the inhomogeneous
//! complex C^•(K_R) whose cohomology gives the toric T^n(−R), and the
//! homogeneous split complex V^•(−r) whose differential keeps only the
//! merge terms and whose cohomology is concentrated in slot ht(r).

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{ConeContext, MultiDegree};
use crate::oracle::shuffle::{shuffle_invariant_subspace, ShuffleInvariantBasis};
use crate::oracle::RationalMatrix;

/// One slot of a tuple complex: the admissible tuples, the shuffle
/// relations, and a basis of the shuffle-invariant function subspace.
pub struct ToricComplexSlice {
    pub n: usize,
    pub tuples: Vec<Vec<MultiDegree>>,
    pub basis: RationalMatrix,
    pub relations: RationalMatrix,
}

impl ToricComplexSlice {
    pub fn invariant_dim(&self) -> usize {
        self.basis.cols()
    }
}

/// The complex C^•(K_R): slot n carries the shuffle-invariant functions on
/// {(λ_1,…,λ_n) ∈ K_R^n | Σλ_v ∈ K_R}. Slices are stored for n = 1,…,top;
/// every slot at or above ht(R) is empty because heights add.
pub struct ToricComplex {
    pub ctx: ConeContext,
    pub r: MultiDegree,
    pub k_set: Vec<MultiDegree>,
    /// slices[j] is slot n = j+1.
    pub slices: Vec<ToricComplexSlice>,
    /// differentials[j]: functions on slot j+1 → functions on slot j+2,
    /// acting on full coordinate spaces (restrict via the slice bases).
    pub differentials: Vec<RationalMatrix>,
}

impl ToricComplex {
    pub fn slice(&self, n: usize) -> Option<&ToricComplexSlice> {
        n.checked_sub(1).and_then(|j| self.slices.get(j))
    }

    pub fn differential(&self, n: usize) -> Option<&RationalMatrix> {
        n.checked_sub(1).and_then(|j| self.differentials.get(j))
    }

    /// rank of d restricted to the shuffle-invariant subspace of slot n.
    pub fn restricted_rank(&self, n: usize) -> usize {
        match (self.slice(n), self.differential(n)) {
            (Some(slice), Some(d)) => d.mul(&slice.basis).rank(),
            _ => 0,
        }
    }

    /// dim HA^n: cohomology of the invariant subcomplex at slot n ≥ 1.
    pub fn cohomology_dim(&self, n: usize) -> usize {
        let Some(slice) = self.slice(n) else { return 0 };
        slice.invariant_dim() - self.restricted_rank(n) - self.restricted_rank(n - 1)
    }
}

/// Enumerates the admissible tuples of slot n in lexicographic order of
/// K_R indices: entries from K_R whose total lies again in K_R.
fn admissible_tuples(
    ctx: ConeContext,
    big_r: MultiDegree,
    k_set: &[MultiDegree],
    n: usize,
) -> Vec<Vec<MultiDegree>> {
    let mut out = Vec::new();
    let mut current: Vec<MultiDegree> = Vec::with_capacity(n);
    fn recurse(
        ctx: ConeContext,
        big_r: MultiDegree,
        k_set: &[MultiDegree],
        n: usize,
        current: &mut Vec<MultiDegree>,
        total: MultiDegree,
        out: &mut Vec<Vec<MultiDegree>>,
    ) {
        if current.len() == n {
            if ctx.in_k_set(big_r, total) {
                out.push(current.clone());
            }
            return;
        }
        let slots_left = (n - current.len()) as i64;
        for &lambda in k_set {
            // Entries have height ≥ 1 and the total must stay strictly
            // below ht(R); k_set ascends by height, so prune by break.
            if total.ht() + lambda.ht() + (slots_left - 1) > big_r.ht() - 1 {
                break;
            }
            current.push(lambda);
            recurse(ctx, big_r, k_set, n, current, total + lambda, out);
            current.pop();
        }
    }
    recurse(
        ctx,
        big_r,
        k_set,
        n,
        &mut current,
        MultiDegree::ZERO,
        &mut out,
    );
    out
}

/// Builds C^•(K_R) with slices 1,…,top and the differentials between the
/// stored slots (the map out of the top stored slot goes to zero).
pub fn build_toric_complex(
    ctx: ConeContext,
    big_r: MultiDegree,
    top: usize,
) -> Result<ToricComplex> {
    let k_set = ctx.enumerate_k_set(big_r);
    let mut slices = Vec::new();
    for n in 1..=top {
        let tuples = admissible_tuples(ctx, big_r, &k_set, n);
        let ShuffleInvariantBasis { basis, relations } = shuffle_invariant_subspace(&tuples);
        slices.push(ToricComplexSlice {
            n,
            tuples,
            basis,
            relations,
        });
    }
    let mut differentials = Vec::new();
    for j in 0..slices.len() {
        let source = &slices[j];
        let empty = Vec::new();
        let target_tuples = if j + 1 < slices.len() {
            &slices[j + 1].tuples
        } else {
            &empty
        };
        differentials.push(inhomogeneous_differential(
            &source.tuples,
            target_tuples,
            source.n,
        )?);
    }
    let complex = ToricComplex {
        ctx,
        r: big_r,
        k_set,
        slices,
        differentials,
    };
    complex.check_consistency()?;
    Ok(complex)
}

/// (dφ)(λ_0,…,λ_n) = φ(λ_1,…,λ_n) + Σ_v (−1)^v φ(…,λ_{v−1}+λ_v,…)
///                  + (−1)^{n+1} φ(λ_0,…,λ_{n−1});
/// matrix rows = target tuples (length n+1), columns = source tuples.
fn inhomogeneous_differential(
    source: &[Vec<MultiDegree>],
    target: &[Vec<MultiDegree>],
    n: usize,
) -> Result<RationalMatrix> {
    let index: BTreeMap<&[MultiDegree], usize> = source
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut mat = RationalMatrix::zero(target.len(), source.len());
    let look = |face: &[MultiDegree]| -> Result<usize> {
        index.get(face).copied().ok_or_else(|| {
            Error::ConsistencyCheck(format!(
                "differential produced an inadmissible face {face:?}"
            ))
        })
    };
    for (row, t) in target.iter().enumerate() {
        // Leading face: drop λ_0.
        let col = look(&t[1..])?;
        mat.add_to(row, col, &BigRational::from_integer(1.into()));
        // Merge faces.
        for v in 1..=n {
            let mut face = Vec::with_capacity(n);
            face.extend_from_slice(&t[..v - 1]);
            face.push(t[v - 1] + t[v]);
            face.extend_from_slice(&t[v + 1..]);
            let col = look(&face)?;
            let sign = if v % 2 == 0 { 1 } else { -1 };
            mat.add_to(row, col, &BigRational::from_integer(sign.into()));
        }
        // Trailing face: drop λ_n.
        let col = look(&t[..n])?;
        let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
        mat.add_to(row, col, &BigRational::from_integer(sign.into()));
    }
    Ok(mat)
}

impl ToricComplex {
    /// d∘d = 0 and d(invariant subspace) ⊆ invariant subspace, on every
    /// stored slot.
    fn check_consistency(&self) -> Result<()> {
        for j in 0..self.differentials.len() {
            if j + 1 < self.differentials.len() {
                let dd = self.differentials[j + 1].mul(&self.differentials[j]);
                if !dd.is_zero() {
                    return Err(Error::ConsistencyCheck(format!(
                        "d∘d ≠ 0 out of slot {} at R = {}",
                        j + 1,
                        self.r
                    )));
                }
            }
            let image = self.differentials[j].mul(&self.slices[j].basis);
            if j + 1 < self.slices.len() {
                let violated = self.slices[j + 1].relations.mul(&image);
                if !violated.is_zero() {
                    return Err(Error::ConsistencyCheck(format!(
                        "differential leaves the shuffle-invariant subspace at slot {} for R = {}",
                        j + 1,
                        self.r
                    )));
                }
            }
        }
        Ok(())
    }
}

/// dim T^n(−R) by brute force: HA^{n−1}(K_R) for n ≥ 3, and for n = 2 the
/// codimension-corrected HA¹(K_R) minus the dimension of the linear span
/// of K_R. Slots n ≤ 1 are outside this route.
pub fn toric_t_dim(ctx: ConeContext, big_r: MultiDegree, n: usize) -> Result<usize> {
    if n <= 1 {
        return Err(Error::InvalidParameter(
            "the brute-force route covers n >= 2 only".into(),
        ));
    }
    let top = n.max(2);
    let complex = build_toric_complex(ctx, big_r, top)?;
    if n >= 3 {
        return Ok(complex.cohomology_dim(n - 1));
    }
    let ha1 = complex.cohomology_dim(1);
    let span = span_dim(&complex.k_set);
    Ok(ha1 - span)
}

/// Dimension of the linear span of a set of lattice vectors (0, 1, or 2).
fn span_dim(vectors: &[MultiDegree]) -> usize {
    let Some(first) = vectors.iter().find(|v| !v.is_zero()) else {
        return 0;
    };
    for v in vectors {
        if first.i * v.k - first.k * v.i != 0 {
            return 2;
        }
    }
    1
}

/// Cohomology of the homogeneous split complex V^•(−r) at slot n: tuples in
/// Λ_+ with total exactly r, differential keeping only the merge terms.
/// Must be multigraded-concentrated: nonzero only for n = ht(r).
pub fn homogeneous_split_dims(ctx: ConeContext, r: MultiDegree, n: usize) -> Result<usize> {
    if !ctx.in_lambda(r) || r.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "split complex needs r in the pointed cone monoid, got {r}"
        )));
    }
    if n == 0 || n as i64 > r.ht() {
        return Ok(0);
    }
    let top = (r.ht() as usize).min(n + 1);
    let mut slot_tuples: Vec<Vec<Vec<MultiDegree>>> = Vec::new();
    for slot in 1..=top {
        slot_tuples.push(split_tuples(ctx, r, slot));
    }
    let mut bases = Vec::new();
    let mut relation_mats = Vec::new();
    for tuples in &slot_tuples {
        let ShuffleInvariantBasis { basis, relations } = shuffle_invariant_subspace(tuples);
        bases.push(basis);
        relation_mats.push(relations);
    }
    let mut differentials = Vec::new();
    for j in 0..top {
        let empty = Vec::new();
        let target = if j + 1 < top {
            &slot_tuples[j + 1]
        } else {
            &empty
        };
        differentials.push(homogeneous_differential(&slot_tuples[j], target, j + 1)?);
    }
    // The same sanity checks as for the inhomogeneous complex.
    for j in 0..top {
        if j + 1 < top {
            let dd = differentials[j + 1].mul(&differentials[j]);
            if !dd.is_zero() {
                return Err(Error::ConsistencyCheck(format!(
                    "homogeneous d∘d ≠ 0 out of slot {} at r = {r}",
                    j + 1
                )));
            }
            let image = differentials[j].mul(&bases[j]);
            if !relation_mats[j + 1].mul(&image).is_zero() {
                return Err(Error::ConsistencyCheck(format!(
                    "homogeneous differential leaves the invariant subspace at slot {} for r = {r}",
                    j + 1
                )));
            }
        }
    }
    let rank_at = |j: usize| -> usize {
        if j == 0 || j > top {
            return 0;
        }
        differentials[j - 1].mul(&bases[j - 1]).rank()
    };
    Ok(bases[n - 1].cols() - rank_at(n) - rank_at(n - 1))
}

/// Tuples (λ_1,…,λ_n) ∈ Λ_+^n with Σλ_v = r, in lexicographic order of the
/// canonical degree order.
fn split_tuples(ctx: ConeContext, r: MultiDegree, n: usize) -> Vec<Vec<MultiDegree>> {
    // Candidate entries: Λ_+ elements fitting under r by height.
    let mut candidates = Vec::new();
    for k in 1..=r.k {
        for i in 0..=ctx.d() * k {
            let lambda = MultiDegree::new(i, k);
            debug_assert!(ctx.in_lambda(lambda));
            candidates.push(lambda);
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn recurse(
        candidates: &[MultiDegree],
        r: MultiDegree,
        n: usize,
        current: &mut Vec<MultiDegree>,
        total: MultiDegree,
        out: &mut Vec<Vec<MultiDegree>>,
    ) {
        if current.len() == n {
            if total == r {
                out.push(current.clone());
            }
            return;
        }
        let slots_left = (n - current.len()) as i64;
        for &lambda in candidates {
            let next = total + lambda;
            if next.ht() + slots_left - 1 > r.k {
                break;
            }
            if next.i > r.i || next.k > r.k {
                continue;
            }
            current.push(lambda);
            recurse(candidates, r, n, current, next, out);
            current.pop();
        }
    }
    recurse(&candidates, r, n, &mut current, MultiDegree::ZERO, &mut out);
    out
}

/// (d′φ)(λ_0,…,λ_n) = Σ_{v=1}^n (−1)^v φ(λ_0,…,λ_{v−1}+λ_v,…,λ_n).
fn homogeneous_differential(
    source: &[Vec<MultiDegree>],
    target: &[Vec<MultiDegree>],
    n: usize,
) -> Result<RationalMatrix> {
    let index: BTreeMap<&[MultiDegree], usize> = source
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut mat = RationalMatrix::zero(target.len(), source.len());
    for (row, t) in target.iter().enumerate() {
        for v in 1..=n {
            let mut face = Vec::with_capacity(n);
            face.extend_from_slice(&t[..v - 1]);
            face.push(t[v - 1] + t[v]);
            face.extend_from_slice(&t[v + 1..]);
            let col = index.get(face.as_slice()).copied().ok_or_else(|| {
                Error::ConsistencyCheck(format!(
                    "homogeneous differential produced an unknown face {face:?}"
                ))
            })?;
            let sign = if v % 2 == 0 { 1 } else { -1 };
            mat.add_to(row, col, &BigRational::from_integer(sign.into()));
        }
    }
    Ok(mat)
}
