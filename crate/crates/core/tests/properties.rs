//! Property tests for the exact linear-algebra substrate: canonical forms,
//! the dimension formula, and the modular law at subspace level.

use proptest::prelude::*;

use lielat::matrix::Matrix;
use lielat::rat::{rat, Rat};
use lielat::subspace::Subspace;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn matrix_strategy(max_rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(rat_strategy(), cols), 1..=max_rows)
        .prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

fn subspace_strategy(cols: usize) -> impl Strategy<Value = Subspace> {
    matrix_strategy(4, cols).prop_map(|m| Subspace::row_space(&m))
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix_strategy(5, 4)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r);
    }

    /// Scaled and re-ordered spanning sets give identical representations.
    #[test]
    fn canonical_across_spanning_sets(m in matrix_strategy(4, 4), seed in 0u64..1000) {
        let s = Subspace::row_space(&m);
        let mut rows = m.row_vecs();
        // mix rows deterministically from the seed
        let k = rows.len();
        for i in 0..k {
            let j = ((seed as usize) + i * 7) % k;
            rows.swap(i, j);
            let scale = rat(1 + ((seed as i64 + i as i64) % 3), 1 + ((seed as i64) % 2));
            for x in rows[i].iter_mut() {
                *x *= &scale;
            }
        }
        // add a redundant combination of the first two rows
        if k >= 2 {
            let extra: Vec<Rat> =
                rows[0].iter().zip(&rows[1]).map(|(a, b)| a.clone() + b).collect();
            rows.push(extra);
        }
        prop_assert_eq!(Subspace::span(4, rows), s);
    }

    #[test]
    fn dimension_formula(a in subspace_strategy(4), b in subspace_strategy(4)) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(a.leq(&sum).unwrap() && b.leq(&sum).unwrap());
        prop_assert!(meet.leq(&a).unwrap() && meet.leq(&b).unwrap());
    }

    /// For subspaces A <= B and any C: B meet (A + C) = A + (B meet C).
    #[test]
    fn modular_law(inner in subspace_strategy(4), outer in subspace_strategy(4), c in subspace_strategy(4)) {
        let a = inner.intersect(&outer).unwrap(); // force A <= B
        let b = outer;
        let lhs = b.intersect(&a.sum(&c).unwrap()).unwrap();
        let rhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_involutes(a in subspace_strategy(5)) {
        prop_assert_eq!(a.annihilator().annihilator(), a.clone());
        prop_assert_eq!(a.annihilator().dim(), 5 - a.dim());
    }

    #[test]
    fn kernel_dimension(m in matrix_strategy(4, 5)) {
        let k = Subspace::kernel_of(&m);
        prop_assert_eq!(k.dim(), 5 - m.rank());
        for row in k.basis_rows() {
            let image = m.apply(row).unwrap();
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }
}
