mod common;

use common::{dims, kh};
use kkh_core::cube::build_complex;
use kkh_core::homology::{poincare_polynomial, rank_exact, SparseRationalMatrix};
use kkh_core::{parse_pd, GradedDims, LinkDiagram};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Textbook dense Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
fn dense_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot;
                for c in col..cols {
                    let v = &a[rank][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn to_sparse(a: &[Vec<BigRational>], cols: usize) -> SparseRationalMatrix {
    let triplets = a
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
    SparseRationalMatrix::from_triplets(a.len(), cols, triplets)
}

fn rational() -> impl Strategy<Value = BigRational> {
    // mostly zeros so that rank deficiency is common
    prop_oneof![
        3 => Just(BigRational::zero()),
        2 => (-9i64..10, 1i64..7).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = (usize, Vec<Vec<BigRational>>)> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        (Just(c), prop::collection::vec(prop::collection::vec(rational(), c), r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_dense_oracle((cols, a) in matrix(20)) {
        prop_assert_eq!(rank_exact(&to_sparse(&a, cols)), dense_rank(a));
    }

    #[test]
    fn rank_of_products_and_stacks((cols, a) in matrix(8)) {
        // duplicating every row leaves the rank unchanged
        let mut doubled = a.clone();
        doubled.extend(a.iter().map(|row| row.iter().map(|v| v * BigRational::from_integer(3.into())).collect()));
        prop_assert_eq!(rank_exact(&to_sparse(&doubled, cols)), rank_exact(&to_sparse(&a, cols)));
    }
}

#[test]
fn rank_examples() {
    assert_eq!(rank_exact(&SparseRationalMatrix::zeros(4, 6)), 0);
    assert_eq!(rank_exact(&SparseRationalMatrix::identity(5)), 5);
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    // full 20x20 Hilbert matrix is invertible
    let h: Vec<Vec<BigRational>> = (0..20).map(|r| (0..20).map(|c| q(1, r + c + 1)).collect()).collect();
    assert_eq!(rank_exact(&to_sparse(&h, 20)), 20);
    assert_eq!(dense_rank(h), 20);
    let ones = vec![vec![BigRational::one(); 7]; 7];
    assert_eq!(rank_exact(&to_sparse(&ones, 7)), 1);
}

#[test]
fn homology_examples() {
    let unknot = dims(&[((0, 1), 1), ((0, -1), 1)]);
    assert_eq!(kh(&LinkDiagram::unknot()), unknot);
    assert_eq!(kh(&parse_pd("X(1,1,2,2)").unwrap()), unknot);
    assert_eq!(kh(&parse_pd("X(1,2,2,1)").unwrap()), unknot);
    assert_eq!(
        kh(&parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap()),
        dims(&[((0, 0), 1), ((0, -2), 1), ((-2, -4), 1), ((-2, -6), 1)])
    );
}

/// Unreduced rational Khovanov homology from published tables.
#[test]
fn published_tables() {
    let by_name = |name: &str| {
        common::corpus().into_iter().find(|e| e.name == name).unwrap().diagram
    };
    let cases: Vec<(&str, GradedDims)> = vec![
        ("trefoil_left", dims(&[((0, -1), 1), ((0, -3), 1), ((-2, -5), 1), ((-3, -9), 1)])),
        ("trefoil_right", dims(&[((0, 1), 1), ((0, 3), 1), ((2, 5), 1), ((3, 9), 1)])),
        (
            "figure_eight",
            dims(&[((-2, -5), 1), ((-1, -1), 1), ((0, -1), 1), ((0, 1), 1), ((1, 1), 1), ((2, 5), 1)]),
        ),
        (
            "torus_3_4",
            dims(&[
                ((0, 5), 1),
                ((0, 7), 1),
                ((2, 9), 1),
                ((3, 13), 1),
                ((4, 11), 1),
                ((4, 13), 1),
                ((5, 15), 1),
                ((5, 17), 1),
            ]),
        ),
    ];
    for (name, want) in cases {
        assert_eq!(kh(&by_name(name)), want, "{name}");
    }
}

#[test]
fn poincare_examples() {
    assert_eq!(poincare_polynomial(&GradedDims::new()).to_string(), "0");
    assert_eq!(poincare_polynomial(&kh(&LinkDiagram::unknot())).to_string(), "q + q^-1");
    let hopf = kh(&parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap());
    assert_eq!(poincare_polynomial(&hopf).to_string(), "1 + q^-2 + t^-2q^-4 + t^-2q^-6");
}

#[test]
fn rank_nullity_in_every_block() {
    for e in common::corpus() {
        let c = build_complex(&e.diagram).unwrap();
        for (_, d) in c.differentials() {
            let rank = rank_exact(d);
            assert!(rank <= d.cols().min(d.rows()));
            // kernel dimension computed independently on the transpose-free dense form
            let dense: Vec<Vec<BigRational>> =
                (0..d.rows()).map(|r| (0..d.cols()).map(|k| d.get(r, k)).collect()).collect();
            if d.rows() * d.cols() <= 4096 {
                assert_eq!(rank, dense_rank(dense), "{}", e.name);
            }
        }
    }
}
