use num_bigint::BigInt;
use proptest::prelude::*;
use uturn_core::bijection::{big_psi, big_psi_inv, psi, psi_inv};
use uturn_core::combinat::{add_staircase, conjugate, diagonal_profile, remove_staircase, Partition, StrictPartition};
use uturn_core::tableaux::{generate_shifted, ShiftedTableau};
use uturn_core::uasm::{brute_force_uasms, phi, phi_inv, validate_uasm, MuUasm, Sign, SignatureMatrix};
use uturn_core::Poly;

const RANK: usize = 2;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2, 0u32..=3), 0..5).prop_map(|terms| {
        let parts: Vec<Poly> =
            terms.into_iter().map(|(c, a, b, t)| Poly::monomial(RANK, &[a, b], t, BigInt::from(c))).collect();
        Poly::sum(RANK, &parts)
    })
}

fn unit() -> impl Strategy<Value = BigInt> {
    prop_oneof![Just(BigInt::from(1)), Just(BigInt::from(-1))]
}

fn shapes() -> Vec<StrictPartition> {
    (1..=3).flat_map(|n| StrictPartition::all_with(n, 4)).collect()
}

fn any_tableau() -> impl Strategy<Value = ShiftedTableau> {
    let all: Vec<ShiftedTableau> = shapes().into_iter().flat_map(|mu| generate_shifted(&mu, mu.len()).unwrap()).collect();
    prop::sample::select(all)
}

fn any_uasm() -> impl Strategy<Value = MuUasm> {
    let all: Vec<MuUasm> = shapes().into_iter().flat_map(|mu| brute_force_uasms(&mu, mu.len()).unwrap()).collect();
    prop::sample::select(all)
}

fn any_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..6, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), a in unit(), b in unit(), t in -3i64..=3) {
        let xs = [a, b];
        let t = BigInt::from(t);
        let ev = |f: &Poly| f.eval(&xs, t.clone()).unwrap();
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&p.at_x_one()), p.eval(&[BigInt::from(1), BigInt::from(1)], t.clone()).unwrap());
    }

    #[test]
    fn poly_records_round_trip(p in poly()) {
        prop_assert_eq!(Poly::from_records(RANK, &p.to_records()).unwrap(), p);
    }

    #[test]
    fn staircase_round_trip(lam in any_partition(), extra in 0usize..3) {
        let n = lam.len() + extra;
        let mu = add_staircase(&lam, n).unwrap();
        prop_assert_eq!(mu.len(), n);
        prop_assert_eq!(remove_staircase(&mu), lam.clone());
        prop_assert_eq!(conjugate(&conjugate(&lam)), lam);
        prop_assert!(diagonal_profile(&mu).satisfies_step_rule(&mu));
    }

    #[test]
    fn tableaux_survive_every_round_trip(st in any_tableau()) {
        let n = st.n();
        prop_assert_eq!(psi_inv(&psi(&st), n).unwrap(), st.clone());
        let ua = big_psi(&st).unwrap();
        prop_assert_eq!(big_psi_inv(&ua).unwrap(), st.clone());
        let json = serde_json::to_string(&st).unwrap();
        prop_assert_eq!(serde_json::from_str::<ShiftedTableau>(&json).unwrap(), st.clone());
        for strip in st.strips() {
            prop_assert!(strip.has_distinct_diagonals());
        }
    }

    #[test]
    fn uasm_rows_and_columns_alternate(ua in any_uasm()) {
        let cells = ua.cells();
        let alternates = |seq: Vec<i8>| {
            let nz: Vec<i8> = seq.into_iter().filter(|&a| a != 0).collect();
            nz.iter().enumerate().all(|(i, &a)| a == if i % 2 == 0 { 1 } else { -1 })
        };
        for row in cells {
            prop_assert!(alternates(row.iter().rev().copied().collect()));
        }
        for q in 0..ua.m() {
            prop_assert!(alternates(cells.iter().rev().map(|r| r[q]).collect()));
        }
        let s = ua.stats();
        prop_assert_eq!(s.neg, cells.iter().flatten().filter(|&&a| a == -1).count());
        prop_assert_eq!(s.bar, s.m_bar.iter().sum::<usize>());
        prop_assert!(s.m.iter().zip(&s.m_bar).all(|(a, b)| a + b <= 2 * ua.m()));
        prop_assert_eq!(phi_inv(&phi(&ua)), cells.to_vec());
    }

    #[test]
    fn changing_one_cell_breaks_a_uasm(ua in any_uasm(), pick in any::<prop::sample::Index>(), delta in 1i8..=2) {
        let mut cells = ua.cells().to_vec();
        let (rows, cols) = (cells.len(), ua.m());
        let k = pick.index(rows * cols);
        let cell = &mut cells[k / cols][k % cols];
        *cell = (*cell + 1 + delta) % 3 - 1;
        prop_assert!(!validate_uasm(&cells, ua.mu(), ua.n()).is_valid());
    }

    #[test]
    fn psi_inv_is_a_left_inverse_where_defined(
        n in 1usize..=3,
        m in 1usize..=4,
        bits in prop::collection::vec(any::<bool>(), 24),
    ) {
        let cells: Vec<Vec<Sign>> = (0..2 * n)
            .map(|r| (0..m).map(|q| if bits[r * 4 + q] { Sign::Plus } else { Sign::Minus }).collect())
            .collect();
        let sm = SignatureMatrix { cells };
        if let Ok(st) = psi_inv(&sm, n) {
            prop_assert!(st.validate().is_valid());
            prop_assert_eq!(psi(&st), sm);
        }
    }
}
