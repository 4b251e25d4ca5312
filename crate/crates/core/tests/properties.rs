use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qmatroid::amplitude::{fourier_duality_sides, vacuum_fa, Propagator, Space};
use qmatroid::catalog::{catalog, lookup, uniform_catalog};
use qmatroid::identities::{dual_chi, theorem2_contraction_rhs, theorem2_restriction_rhs};
use qmatroid::kontsevich::{
    basis_sum, brute_force_zero_count, chevalley_zero_count, lemma_chi, nowhere_zero_kernel_count, theorem1,
    theorem1_rhs, w_star, weighted_laplacian, AlphaVector, Theorem1Options, WStarStrategy,
};
use qmatroid::matroid::{char_poly, same_rank_function};
use qmatroid::{Budget, Field, FieldElement, FqMatrix, Matroid, Multigraph, RepMatroid, Subset};

fn budget() -> Budget {
    Budget::default()
}

/// A random matrix over GF(p) with up to 3 rows and 5 columns.
fn rep_matroid() -> impl Strategy<Value = RepMatroid> {
    (prop::sample::select(vec![3u64, 5, 7]), 1usize..=3, 1usize..=5).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p as i64, r * c).prop_map(move |v| {
            let field = Field::prime(p).unwrap();
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|row| row.to_vec()).collect();
            RepMatroid::from_ints(&field, &rows, None).unwrap()
        })
    })
}

fn multigraph() -> impl Strategy<Value = Multigraph> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 1..=5).prop_map(move |e| Multigraph::from_edges(n, &e).unwrap())
    })
}

fn alpha_for(m: &RepMatroid, seeds: &[u64]) -> AlphaVector {
    let nz: Vec<FieldElement> = m.field().nonzero_elements().collect();
    let vals = (0..m.len()).map(|i| nz[(seeds[i] as usize) % nz.len()].clone()).collect();
    AlphaVector::new(vals).unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_rank_formula(m in rep_matroid(), bits in any::<u64>()) {
        let d = m.dual();
        let e = m.ground();
        let a = Subset::from_bits(bits & e.bits());
        prop_assert_eq!(d.rank(a) + m.full_rank(), a.len() + m.rank(e.minus(a)));
        prop_assert!(same_rank_function(&d.dual(), &m));
    }

    #[test]
    fn dual_of_restriction_is_contraction_of_dual(m in rep_matroid(), bits in any::<u64>()) {
        let e = m.ground();
        let a = Subset::from_bits(bits & e.bits());
        let lhs = m.restrict(a).dual();
        let rhs = m.dual().contract(e.minus(a));
        prop_assert!(same_rank_function(&lhs, &rhs));
    }

    #[test]
    fn laplacian_determinant_is_basis_sum(m in rep_matroid(), seeds in prop::collection::vec(any::<u64>(), 5)) {
        let alpha = alpha_for(&m, &seeds);
        let l = weighted_laplacian(&m, &alpha).unwrap();
        prop_assert!(l.is_symmetric());
        prop_assert_eq!(l.det().unwrap(), basis_sum(&m, &alpha).unwrap());
    }

    #[test]
    fn w_star_strategies_agree(m in rep_matroid(), seeds in prop::collection::vec(any::<u64>(), 5)) {
        let alpha = alpha_for(&m, &seeds);
        let a = w_star(&m, &alpha, WStarStrategy::LaplacianRank).unwrap();
        let b = w_star(&m, &alpha, WStarStrategy::SubsetSearch).unwrap();
        prop_assert_eq!(a.r_star, b.r_star);
        prop_assert_eq!(a.minor.quadratic_character(), b.minor.quadratic_character());
    }

    #[test]
    fn four_way_agreement(m in rep_matroid()) {
        let q = m.field().order();
        let expected = BigRational::from(char_poly(&m.dual(), budget()).unwrap().eval_int(&BigInt::from(q)));
        prop_assert_eq!(&theorem1_rhs(&m, budget()).unwrap(), &expected);
        prop_assert_eq!(int(nowhere_zero_kernel_count(&m, budget()).unwrap() as i64), expected.clone());
        prop_assert_eq!(lemma_chi(&m, 1, budget()).unwrap(), expected);
    }

    #[test]
    fn chevalley_matches_brute_force(p in prop::sample::select(vec![3u64, 5, 7]), n in 1usize..=3,
                                     v in prop::collection::vec(0i64..7, 9)) {
        let field = Field::prime(p).unwrap();
        let mut b = FqMatrix::zeros(&field, n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                let x = field.from_int(v[k]);
                k += 1;
                b.set(i, j, &x).unwrap();
                b.set(j, i, &x).unwrap();
            }
        }
        prop_assert_eq!(chevalley_zero_count(&b).unwrap(), BigInt::from(brute_force_zero_count(&b, budget()).unwrap()));
    }

    #[test]
    fn alpha_sum_survives_row_operations(m in rep_matroid(), c in 1i64..7, i in 0usize..3, j in 0usize..3) {
        let mat = m.matrix();
        let (r, n) = (mat.rows(), mat.cols());
        prop_assume!(r >= 2 && i % r != j % r);
        let (i, j) = (i % r, j % r);
        let field = m.field();
        let c = field.from_int(c);
        let mut moved = mat.clone();
        for col in 0..n {
            let v = &mat.get(j, col) + &(&c * &mat.get(i, col));
            moved.set(j, col, &v).unwrap();
        }
        let m2 = RepMatroid::new(moved, Some(m.labels().to_vec())).unwrap();
        prop_assert!(same_rank_function(&m, &m2));
        prop_assert_eq!(theorem1_rhs(&m, budget()).unwrap(), theorem1_rhs(&m2, budget()).unwrap());
    }

    #[test]
    fn census_survives_square_column_scaling(m in rep_matroid(), c in 1i64..7, col in 0usize..5) {
        let field = m.field().clone();
        let c = field.from_int(c);
        prop_assume!(!c.is_zero());
        let col = col % m.len();
        let mut scaled = m.matrix().clone();
        let sq = &c * &c;
        for row in 0..scaled.rows() {
            let v = &scaled.get(row, col) * &sq;
            scaled.set(row, col, &v).unwrap();
        }
        let m2 = RepMatroid::new(scaled, Some(m.labels().to_vec())).unwrap();
        let opts = Theorem1Options::default();
        let a = theorem1(&m, opts).unwrap();
        let b = theorem1(&m2, opts).unwrap();
        prop_assert_eq!(a.histogram, b.histogram);
        prop_assert_eq!(a.total, b.total);
    }

    #[test]
    fn amplitude_invariants(g in multigraph(), p in prop::sample::select(vec![3u64, 5]),
                            a in -3i64..=3, b in -3i64..=3, e in 0usize..5) {
        let field = Field::prime(p).unwrap();
        let prop = Propagator::from_ints(a, b);
        let (lhs, rhs) = fourier_duality_sides(&g, &field, &prop, budget()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let r = g.reverse_edge(e % g.edge_count());
        for space in [Space::Coordinate, Space::Momentum] {
            prop_assert_eq!(
                vacuum_fa(&g, &field, &prop, space, budget()).unwrap(),
                vacuum_fa(&r, &field, &prop, space, budget()).unwrap()
            );
        }
        let norm = Propagator::norm();
        prop_assert_eq!(
            vacuum_fa(&g, &field, &norm, Space::Coordinate, budget()).unwrap(),
            int(g.count_proper_colorings(p, budget()).unwrap() as i64)
        );
        prop_assert_eq!(
            vacuum_fa(&g, &field, &norm, Space::Momentum, budget()).unwrap(),
            int(g.count_nowhere_zero_flows(p, budget()).unwrap() as i64)
        );
    }

    #[test]
    fn restriction_and_contraction_sums(idx in 0usize..64, q in 2i64..40) {
        let mut entries = catalog();
        entries.extend(uniform_catalog().into_iter().filter(|e| e.ground_size() <= 5));
        let entry = &entries[idx % entries.len()];
        let m = entry.rank_oracle();
        let chi = dual_chi(&m, q, budget()).unwrap();
        prop_assert_eq!(&theorem2_restriction_rhs(&m, q, budget()).unwrap(), &chi);
        prop_assert_eq!(&theorem2_contraction_rhs(&m, q, budget()).unwrap(), &chi);
    }
}

/// Visits every `α ∈ (F_q^*)^n`.
fn each_alpha(field: &Field, n: usize, mut f: impl FnMut(&AlphaVector)) {
    let nz: Vec<FieldElement> = field.nonzero_elements().collect();
    let mut idx = vec![0usize; n];
    loop {
        f(&AlphaVector::new(idx.iter().map(|&i| nz[i].clone()).collect()).unwrap());
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            idx[k] += 1;
            if idx[k] < nz.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn laplacian_determinant_exhaustive() {
    for (name, q) in [("U24", 5u64), ("U24", 7), ("K4", 3), ("theta", 5), ("K3-bridge", 3)] {
        let field = Field::with_order(q).unwrap();
        let m = lookup(name).unwrap().represent(&field).unwrap();
        let mut n = 0;
        each_alpha(&field, m.len(), |alpha| {
            let l = weighted_laplacian(&m, alpha).unwrap();
            assert_eq!(l.det().unwrap(), basis_sum(&m, alpha).unwrap(), "{name} at {:?}", alpha.values());
            n += 1;
        });
        assert_eq!(n, (q - 1).pow(m.len() as u32));
    }
}
