use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use ufna_core::exactla::{in_span, polymat_resolvent, sparse_rank, IntMatrix, IntPoly, SparseVec};

const PRIMES: [u64; 3] = [2_147_483_647, 4_294_967_291, 3_221_225_473];

fn matrix(max_rows: usize, max_cols: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-range..=range, c), r)
            .prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn square(max: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max).prop_flat_map(move |k| {
        prop::collection::vec(prop::collection::vec(-range..=range, k), k).prop_map(move |rows| {
            if k == 0 {
                IntMatrix::zeros(0, 0)
            } else {
                IntMatrix::from_rows(&rows)
            }
        })
    })
}

fn columns_sparse(m: &IntMatrix) -> Vec<SparseVec> {
    (0..m.cols())
        .map(|j| SparseVec::from_entries(m.column(j).into_iter().enumerate()))
        .collect()
}

/// `det(I - tM)` evaluated at an integer point, via Bareiss on a constant matrix.
fn det_at(m: &IntMatrix, t: i64) -> BigInt {
    let k = m.rows();
    let mut a = IntMatrix::identity(k);
    for i in 0..k {
        for j in 0..k {
            let v = a.get(i, j) - m.get(i, j) * BigInt::from(t);
            a.set(i, j, v);
        }
    }
    a.determinant().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Bareiss rank agrees with the rank modulo large primes (which can only
    /// drop below the rational rank) and with the sparse echelon route.
    #[test]
    fn ranks_agree(m in matrix(7, 7, 9)) {
        let rank = m.rank_exact();
        let modular = PRIMES.iter().map(|&p| m.rank_mod_p(p)).max().unwrap();
        prop_assert_eq!(rank, modular);
        prop_assert!(PRIMES.iter().all(|&p| m.rank_mod_p(p) <= rank));
        prop_assert_eq!(rank, sparse_rank(columns_sparse(&m).iter()));
        prop_assert_eq!(rank, m.transpose().rank_exact());
    }

    #[test]
    fn span_membership_agrees(m in matrix(6, 5, 4), coeffs in prop::collection::vec(-3i64..=3, 5), junk in prop::collection::vec(-3i64..=3, 6)) {
        let mut basis = ufna_core::exactla::SpanBasis::new();
        for c in columns_sparse(&m) {
            basis.insert(&c);
        }
        // A combination of the columns is always inside.
        let mut v = vec![BigInt::zero(); m.rows()];
        for (j, c) in coeffs.iter().take(m.cols()).enumerate() {
            for (i, x) in m.column(j).iter().enumerate() {
                v[i] += x * BigInt::from(*c);
            }
        }
        prop_assert!(in_span(&v, &m).unwrap());
        prop_assert!(basis.contains(&SparseVec::from_entries(v.into_iter().enumerate())));
        // An arbitrary vector: both routes give the same answer.
        let w: Vec<BigInt> = junk.iter().take(m.rows()).map(|&x| BigInt::from(x)).collect();
        prop_assert_eq!(
            in_span(&w, &m).unwrap(),
            basis.contains(&SparseVec::from_entries(w.into_iter().enumerate()))
        );
    }

    /// det(I - tM) * sum_n (1^T M^n 1) t^n = 1^T adj(I - tM) 1, up to the
    /// degree where the adjugate sum lives.
    #[test]
    fn resolvent_identity(m in square(5, 3)) {
        let k = m.rows();
        let r = polymat_resolvent(&m).unwrap();
        prop_assert_eq!(r.det.coeff(0), BigInt::one());
        prop_assert!(r.det.degree().unwrap_or(0) <= k);

        let mut series = Vec::new();
        let mut power = IntMatrix::identity(k);
        for _ in 0..=k + 2 {
            series.push(power.entry_sum());
            power = power.mul(&m).unwrap();
        }
        let lhs = (&r.det * &IntPoly::new(series)).truncate(k + 3);
        prop_assert_eq!(lhs, r.adj_sum.clone());

        for t in -2..=3 {
            prop_assert_eq!(r.det.eval(&BigInt::from(t)), det_at(&m, t));
        }
    }

    #[test]
    fn poly_gcd_divides(a in prop::collection::vec(-5i64..=5, 1..5), b in prop::collection::vec(-5i64..=5, 1..5), c in prop::collection::vec(-5i64..=5, 1..4)) {
        let (a, b, c) = (IntPoly::from_i64s(&a), IntPoly::from_i64s(&b), IntPoly::from_i64s(&c));
        prop_assume!(!c.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        if !ac.is_zero() {
            prop_assert!(ac.div_exact(&g).is_some());
        }
        if !bc.is_zero() {
            prop_assert!(bc.div_exact(&g).is_some());
        }
        // c divides both, so it divides the gcd (over Q; primitive parts over Z).
        prop_assert!(g.is_zero() || g.div_exact(&c.primitive_part()).is_some());
    }
}
