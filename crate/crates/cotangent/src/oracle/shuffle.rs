//! Shuffle permutations, the shuffle operator, and the shuffle-invariant
//! subspace of a function space on tuples.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::lattice::{ConeContext, MultiDegree};
use crate::oracle::RationalMatrix;

/// All (p,q)-shuffles of {0,…,p+q−1} with their signs. A shuffle is encoded
/// as perm with perm[l] = target position of letter l; it is increasing on
/// the first p letters and on the last q.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, i64)> {
    let n = p + q;
    let mut out = Vec::new();
    for first_block in (0..n).combinations(p) {
        let mut taken = vec![false; n];
        for &pos in &first_block {
            taken[pos] = true;
        }
        let mut perm = vec![0usize; n];
        for (l, &pos) in first_block.iter().enumerate() {
            perm[l] = pos;
        }
        let rest = (0..n).filter(|&pos| !taken[pos]);
        for (l, pos) in rest.enumerate() {
            perm[p + l] = pos;
        }
        out.push((perm.clone(), permutation_sign(&perm)));
    }
    out
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Applies a permutation to a tuple: letter l lands at position perm[l].
pub fn apply_perm<T: Clone>(perm: &[usize], tuple: &[T]) -> Vec<T> {
    let mut out = tuple.to_vec();
    for (l, &pos) in perm.iter().enumerate() {
        out[pos] = tuple[l].clone();
    }
    out
}

/// The rank of the total shuffle operator sh = Σ_{p=1}^{n−1} sh_{p,n−p} on
/// the n-th tensor power of an m-dimensional space. The operator permutes
/// tensor factors, so it is block-diagonal over letter multisets; the rank
/// is the sum of the block ranks.
pub fn shuffle_operator_rank(m: usize, n: usize) -> usize {
    orbit_blocks(&all_tuples(m, n))
        .values()
        .map(|block| shuffle_block_rank(block))
        .sum()
}

/// Harrison dimension by brute force: the shuffle-vanishing condition cuts
/// out a subspace of functionals of dimension m^n − rank(sh).
pub fn fat_point_harrison_dim_oracle(m: usize, n: usize) -> usize {
    m.pow(n as u32) - shuffle_operator_rank(m, n)
}

/// Weight-graded variant: generators are z_1,…,z_{d−1} with weights [v,1].
/// Returns (dimension of the weight-R slice of the tensor power, Harrison
/// dimension of that slice), i.e. slice dim minus the shuffle rank on it.
pub fn weighted_shuffle_dim(ctx: ConeContext, r: MultiDegree, n: usize) -> (usize, usize) {
    if r.ht() != n as i64 || n == 0 {
        return (0, 0);
    }
    let m = (ctx.d() - 1) as usize;
    let slice: Vec<Vec<usize>> = all_tuples(m, n)
        .into_iter()
        .filter(|t| t.iter().map(|&v| v as i64 + 1).sum::<i64>() == r.i)
        .collect();
    let dim = slice.len();
    let rank: usize = orbit_blocks(&slice)
        .values()
        .map(|block| shuffle_block_rank(block))
        .sum();
    (dim, dim - rank)
}

pub(crate) fn all_tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|_| 0..m).multi_cartesian_product().collect()
}

/// Groups tuples by their sorted letter multiset; every shuffle permutation
/// stays inside a group.
fn orbit_blocks<T: Ord + Clone>(tuples: &[Vec<T>]) -> BTreeMap<Vec<T>, Vec<Vec<T>>> {
    let mut blocks: BTreeMap<Vec<T>, Vec<Vec<T>>> = BTreeMap::new();
    for t in tuples {
        let mut key = t.clone();
        key.sort();
        blocks.entry(key).or_default().push(t.clone());
    }
    blocks
}

fn shuffle_block_rank<T: Ord + Clone>(block: &[Vec<T>]) -> usize {
    let n = block.first().map_or(0, |t| t.len());
    if n < 2 {
        return 0;
    }
    let index: BTreeMap<&[T], usize> = block
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut mat = RationalMatrix::zero(block.len(), block.len());
    for (col, t) in block.iter().enumerate() {
        for p in 1..n {
            for (perm, sign) in shuffles(p, n - p) {
                let image = apply_perm(&perm, t);
                let row = index[image.as_slice()];
                mat.add_to(
                    row,
                    col,
                    &num_rational::BigRational::from_integer(sign.into()),
                );
            }
        }
    }
    mat.rank()
}

/// The shuffle-invariant subspace of the function space on a tuple list:
/// functions vanishing on every signed (p,q)-shuffle sum of every tuple.
pub struct ShuffleInvariantBasis {
    /// Columns span the subspace inside the coordinate space R^{tuples}.
    pub basis: RationalMatrix,
    /// The defining relation rows, stacked over all tuples and splits.
    pub relations: RationalMatrix,
}

/// Computes the subspace basis orbit by orbit (the relations are
/// block-diagonal over letter multisets), but returns global matrices with
/// rows indexed by the given tuple order.
pub fn shuffle_invariant_subspace<T: Ord + Clone>(tuples: &[Vec<T>]) -> ShuffleInvariantBasis {
    let count = tuples.len();
    let n = tuples.first().map_or(0, |t| t.len());
    let index: BTreeMap<&[T], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    if n < 2 || count == 0 {
        return ShuffleInvariantBasis {
            basis: RationalMatrix::identity(count),
            relations: RationalMatrix::zero(0, count),
        };
    }

    // Orbits as index lists, in order of their smallest global index.
    let mut orbit_of: BTreeMap<Vec<T>, Vec<usize>> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        let mut key = t.clone();
        key.sort();
        orbit_of.entry(key).or_default().push(i);
    }
    let mut orbits: Vec<Vec<usize>> = orbit_of.into_values().collect();
    orbits.sort_by_key(|o| o[0]);

    let mut basis_columns: Vec<Vec<(usize, num_rational::BigRational)>> = Vec::new();
    let mut relation_rows: Vec<Vec<(usize, i64)>> = Vec::new();
    for orbit in &orbits {
        let local_index: BTreeMap<usize, usize> =
            orbit.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let mut local = RationalMatrix::zero(orbit.len() * (n - 1), orbit.len());
        let mut local_row = 0usize;
        for &g in orbit {
            for p in 1..n {
                let mut row_entries: BTreeMap<usize, i64> = BTreeMap::new();
                for (perm, sign) in shuffles(p, n - p) {
                    let image = apply_perm(&perm, &tuples[g]);
                    let gi = index[image.as_slice()];
                    *row_entries.entry(gi).or_insert(0) += sign;
                }
                for (&gi, &c) in &row_entries {
                    if c != 0 {
                        local.set_int(local_row, local_index[&gi], c);
                    }
                }
                relation_rows.push(row_entries.into_iter().filter(|&(_, c)| c != 0).collect());
                local_row += 1;
            }
        }
        let local_basis = local.null_space();
        for col in 0..local_basis.cols() {
            let column: Vec<(usize, num_rational::BigRational)> = (0..orbit.len())
                .filter_map(|l| {
                    let v = local_basis.get(l, col);
                    if num_traits::Zero::is_zero(&v) {
                        None
                    } else {
                        Some((orbit[l], v))
                    }
                })
                .collect();
            basis_columns.push(column);
        }
    }

    let mut basis = RationalMatrix::zero(count, basis_columns.len());
    for (j, column) in basis_columns.iter().enumerate() {
        for (i, v) in column {
            basis.set(*i, j, v.clone());
        }
    }
    let mut relations = RationalMatrix::zero(relation_rows.len(), count);
    for (i, row) in relation_rows.iter().enumerate() {
        for &(j, c) in row {
            relations.set_int(i, j, c);
        }
    }
    ShuffleInvariantBasis { basis, relations }
}
