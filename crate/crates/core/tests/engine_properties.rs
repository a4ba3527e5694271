use diffca_core::{evolve, make_symmetric, max_state, step, InputExpression, Row};
use proptest::prelude::*;

fn row_strategy(max_value: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..=max_value, 2..=128)
}

fn row(cells: Vec<u64>) -> Row {
    Row::new(cells).unwrap()
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn length_contracts(cells in row_strategy(u64::MAX)) {
        let r = row(cells);
        prop_assert_eq!(step(&r).unwrap().len(), r.len() - 1);
    }

    #[test]
    fn maximum_never_grows(cells in row_strategy(u64::MAX)) {
        let r = row(cells);
        prop_assert!(max_state(&step(&r).unwrap()) <= max_state(&r));
    }

    #[test]
    fn translation_invariant(cells in row_strategy(1 << 40), c in 0u64..(1 << 40)) {
        let shifted = row(cells.iter().map(|x| x + c).collect());
        prop_assert_eq!(step(&shifted).unwrap(), step(&row(cells)).unwrap());
    }

    #[test]
    fn homogeneous(cells in row_strategy(1 << 20), k in 0u64..(1 << 20)) {
        let scaled = row(cells.iter().map(|x| x * k).collect());
        let expected: Vec<u64> = step(&row(cells)).unwrap().iter().map(|x| x * k).collect();
        let got = step(&scaled).unwrap();
        prop_assert_eq!(got.cells(), &expected[..]);
    }

    #[test]
    fn reversal_equivariant(cells in row_strategy(u64::MAX)) {
        let r = row(cells);
        prop_assert_eq!(step(&r.reversed()).unwrap(), step(&r).unwrap().reversed());
    }

    #[test]
    fn binary_rows_step_by_xor(cells in row_strategy(1)) {
        let r = row(cells);
        let next = step(&r).unwrap();
        prop_assert!(next.is_binary());
        for (i, &v) in next.iter().enumerate() {
            prop_assert_eq!(v, r[i] ^ r[i + 1]);
        }
    }

    #[test]
    fn symmetric_inputs_give_palindromes(cells in prop::collection::vec(0u64..=1_000_000, 1..=64)) {
        let p = make_symmetric(&InputExpression::from_row(row(cells)));
        for r in evolve(p.terms()).rows() {
            prop_assert!(r.is_palindrome());
        }
    }

    #[test]
    fn palindromes_stay_palindromes(half in prop::collection::vec(0u64..100, 1..=32), odd in any::<bool>()) {
        let mut cells = half.clone();
        let skip = usize::from(odd);
        cells.extend(half.iter().rev().skip(skip));
        let r = row(cells);
        prop_assume!(r.len() >= 2);
        prop_assert!(step(&r).unwrap().is_palindrome());
    }

    #[test]
    fn evolve_satisfies_recurrence(cells in prop::collection::vec(0u64..1000, 1..=64)) {
        let p = evolve(&row(cells.clone()));
        prop_assert_eq!(p.height(), cells.len());
        prop_assert_eq!(p.input().cells(), &cells[..]);
        for t in 0..p.height() - 1 {
            let (cur, next) = (&p.rows()[t], &p.rows()[t + 1]);
            prop_assert_eq!(next.len(), cur.len() - 1);
            for i in 0..next.len() {
                prop_assert_eq!(next[i], cur[i].abs_diff(cur[i + 1]));
            }
        }
    }
}
