//! Cross-route identities tying the closed formulas, the oracle complexes,
//! and the serialization layer together on ranges wider than the unit tests.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use cotangent::formulas::{
    hyperplane_section_series, multigraded_harrison_dim, p_cone, p_fat_point, p_partition_curve,
    p_quotient, p_tilde_cone, q_tilde_cone, PartitionCurveSpec, QuotientSpec,
};
use cotangent::lattice::{ConeContext, MultiDegree};
use cotangent::oracle::{hochschild_module_dims, homogeneous_split_dims, weighted_shuffle_dim};
use cotangent::series::{SeriesJson, UniSeries};

fn ctx(d: i64) -> ConeContext {
    ConeContext::new(d).unwrap()
}

fn deg(i: i64, k: i64) -> MultiDegree {
    MultiDegree::new(i, k)
}

#[test]
fn weighted_shuffle_slices_match_the_moebius_route() {
    for d in [3, 4, 5i64] {
        let c = ctx(d);
        let m = (d - 1) as usize;
        for k in 1..=5i64 {
            let mut tensor_total = 0usize;
            for i in 0..=d * k {
                let r = deg(i, k);
                let (slice_dim, harrison) = weighted_shuffle_dim(c, r, k as usize);
                tensor_total += slice_dim;
                assert_eq!(
                    BigInt::from(harrison),
                    multigraded_harrison_dim(c, r).unwrap(),
                    "d={d}, R={r}"
                );
            }
            assert_eq!(tensor_total, m.pow(k as u32), "d={d}, height {k}");
        }
    }
}

#[test]
fn split_complex_matches_the_cone_series_coefficients() {
    for d in [3, 4i64] {
        let c = ctx(d);
        let q_y = q_tilde_cone(c, 3).unwrap();
        for k in 1..=3i64 {
            for i in 0..=d * k {
                let r = deg(i, k);
                for n in 1..=3usize {
                    let split = homogeneous_split_dims(c, r, n).unwrap();
                    let expected = if n as i64 == k {
                        q_y.coeff(r)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(BigInt::from(split), expected, "d={d}, R={r}, n={n}");
                }
            }
        }
    }
}

#[test]
fn hochschild_companion_dims_are_the_closed_ones() {
    for m in [2, 3usize] {
        let dims = hochschild_module_dims(m, 4).unwrap();
        assert_eq!(dims[0], m * m);
        for n in 2..=4usize {
            assert_eq!(
                dims[n - 1],
                m.pow(n as u32 + 1) - m.pow(n as u32 - 1),
                "m={m}, n={n}"
            );
        }
    }
}

#[test]
fn sectioning_the_partition_curve_recovers_the_fat_point_module_series() {
    for d in [3, 4, 5i64] {
        let m = d - 1;
        for tau in [0, 3, 7i64] {
            for order in [2, 4usize] {
                let partition =
                    p_partition_curve(PartitionCurveSpec::new(d, tau).unwrap(), order).unwrap();
                let section =
                    hyperplane_section_series(&partition, tau, (d - 1) * (d - 1)).unwrap();
                let expected = p_fat_point(m, order - 1).unwrap().sub(&UniSeries::monomial(
                    order - 1,
                    0,
                    BigInt::from(m * m),
                ));
                assert_eq!(section, expected, "d={d}, tau={tau}, order {order}");
            }
        }
    }
}

#[test]
fn computed_series_round_trip_through_canonical_json() {
    let multi = p_tilde_cone(ctx(4), 3).unwrap();
    let text = SeriesJson::from_multi(&multi)
        .unwrap()
        .to_canonical_string();
    assert_eq!(SeriesJson::parse(&text).unwrap().to_multi().unwrap(), multi);

    let uni = p_fat_point(3, 4).unwrap();
    let text = SeriesJson::from_uni(&uni).unwrap().to_canonical_string();
    assert_eq!(SeriesJson::parse(&text).unwrap().to_uni().unwrap(), uni);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_series_only_moves_the_linear_coefficient(
        d in 3..=6i64,
        tau in 0..=15i64,
        order in 1..=5usize,
    ) {
        let q = p_quotient(QuotientSpec::new(d, tau).unwrap(), order).unwrap();
        let cone = p_cone(d, order).unwrap();
        prop_assert_eq!(q.coeff(1), BigInt::from(tau));
        for n in 2..=order {
            prop_assert_eq!(q.coeff(n), cone.coeff(n));
        }
    }

    #[test]
    fn partition_series_above_the_linear_term_ignores_tau(
        d in 3..=6i64,
        tau_a in 0..=12i64,
        tau_b in 0..=12i64,
        order in 1..=5usize,
    ) {
        let a = p_partition_curve(PartitionCurveSpec::new(d, tau_a).unwrap(), order).unwrap();
        let b = p_partition_curve(PartitionCurveSpec::new(d, tau_b).unwrap(), order).unwrap();
        for n in 2..=order {
            prop_assert_eq!(a.coeff(n), b.coeff(n));
        }
    }
}
