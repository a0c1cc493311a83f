//! Brute-force cohomology of the fat point A = C ⊕ V, V·V = 0, with
//! coefficients in A itself.
//!
//! On the reduced complex Hom(V^⊗n, A) the merge terms of the differential
//! die with V·V = 0, so δ only reads the scalar component of a cochain and
//! only writes vector components:
//!     (δf)(a_0,…,a_n) = a_0·f_C(a_1,…,a_n) + (−1)^{n+1} f_C(a_0,…,a_{n−1})·a_n.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::oracle::shuffle::{
    all_tuples, fat_point_harrison_dim_oracle, shuffle_invariant_subspace, ShuffleInvariantBasis,
};
use crate::oracle::RationalMatrix;

/// The coordinate matrix of δ_n on scalar cochains, split by the output
/// vector coordinate j: index j holds the m^{n+1} × m^n block mapping a
/// scalar function on n-tuples to the e_j-component on (n+1)-tuples.
fn delta_blocks(m: usize, n: usize) -> Vec<RationalMatrix> {
    let source = all_tuples(m, n);
    let target = all_tuples(m, n + 1);
    let source_index =
        |t: &[usize]| -> usize { t.iter().fold(0usize, |acc, &letter| acc * m + letter) };
    let trailing_sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
    let mut blocks: Vec<RationalMatrix> = (0..m)
        .map(|_| RationalMatrix::zero(target.len(), source.len()))
        .collect();
    for (row, w) in target.iter().enumerate() {
        let leading = source_index(&w[1..]);
        blocks[w[0]].add_to(row, leading, &BigRational::from_integer(1.into()));
        let trailing = source_index(&w[..n]);
        blocks[w[n]].add_to(
            row,
            trailing,
            &BigRational::from_integer(trailing_sign.into()),
        );
    }
    blocks
}

/// dim Harr^n(A/C, A) for n = 1,…,n_max, where A is the fat point with an
/// m-dimensional socle. Computed from the shuffle-restricted complex and
/// cross-checked against the long-exact-sequence route
/// (m² at n = 1, m·c_n − c_{n−1} for n ≥ 2, with c_n the scalar Harrison
/// dimension); any disagreement is a ConsistencyCheck error.
pub fn fat_point_harrison_a_dims(m: usize, n_max: usize) -> Result<Vec<usize>> {
    if m == 0 || n_max == 0 {
        return Err(Error::InvalidParameter(
            "fat point oracle needs m >= 1 and n_max >= 1".into(),
        ));
    }
    // Invariant data per slot 1..=n_max+1 (slot n_max+1 only for the
    // preservation check of the last differential).
    let mut bases: Vec<RationalMatrix> = Vec::new();
    let mut relations: Vec<RationalMatrix> = Vec::new();
    let mut scalar_dims: Vec<usize> = Vec::new();
    for n in 1..=n_max + 1 {
        let tuples = all_tuples(m, n);
        let ShuffleInvariantBasis {
            basis,
            relations: rel,
        } = shuffle_invariant_subspace(&tuples);
        let c_n = basis.cols();
        if c_n != fat_point_harrison_dim_oracle(m, n) {
            return Err(Error::ConsistencyCheck(format!(
                "scalar relation route and operator-rank route disagree at m = {m}, n = {n}"
            )));
        }
        bases.push(basis);
        relations.push(rel);
        scalar_dims.push(c_n);
    }
    // Restricted differential ranks, with subspace preservation per output
    // coordinate: the e_j-component of δg must again satisfy the shuffle
    // relations of the longer tuples.
    let mut restricted_ranks: Vec<usize> = vec![0]; // rank of δ_0 is 0
    for n in 1..=n_max {
        let blocks = delta_blocks(m, n);
        let mut stacked: Option<RationalMatrix> = None;
        for (j, block) in blocks.iter().enumerate() {
            let image = block.mul(&bases[n - 1]);
            if !relations[n].mul(&image).is_zero() {
                return Err(Error::ConsistencyCheck(format!(
                    "δ leaves the shuffle-restricted subspace at m = {m}, n = {n}, coordinate {j}"
                )));
            }
            stacked = Some(match stacked {
                None => image,
                Some(prev) => prev.vstack(&image),
            });
        }
        restricted_ranks.push(stacked.expect("m >= 1").rank());
    }
    let mut dims = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let dim = (m + 1) * scalar_dims[n - 1] - restricted_ranks[n] - restricted_ranks[n - 1];
        let expected = if n == 1 {
            m * m
        } else {
            m * scalar_dims[n - 1] - scalar_dims[n - 2]
        };
        if dim != expected {
            return Err(Error::ConsistencyCheck(format!(
                "cochain route gives {dim} but the coefficient sequence route gives {expected} \
                 at m = {m}, n = {n}"
            )));
        }
        dims.push(dim);
    }
    Ok(dims)
}

/// The Hochschild companion: the same complex without the shuffle
/// restriction. For m ≥ 2 the dimensions are m² at n = 1 and
/// m^{n+1} − m^{n−1} for n ≥ 2.
pub fn hochschild_module_dims(m: usize, n_max: usize) -> Result<Vec<usize>> {
    if m == 0 || n_max == 0 {
        return Err(Error::InvalidParameter(
            "Hochschild oracle needs m >= 1 and n_max >= 1".into(),
        ));
    }
    let mut ranks: Vec<usize> = vec![0];
    for n in 1..=n_max {
        let blocks = delta_blocks(m, n);
        let mut stacked: Option<RationalMatrix> = None;
        for block in &blocks {
            stacked = Some(match stacked {
                None => block.clone(),
                Some(prev) => prev.vstack(block),
            });
        }
        ranks.push(stacked.expect("m >= 1").rank());
    }
    Ok((1..=n_max)
        .map(|n| (m + 1) * m.pow(n as u32) - ranks[n] - ranks[n - 1])
        .collect())
}
