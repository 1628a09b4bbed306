use std::collections::BTreeSet;

use delcode_core::words::{
    burst_deletion_ball, confusable, deletion_ball, insertion_ball, runs, BinaryWord, Limits, QaryWord, Word,
};
use proptest::prelude::*;

fn all_binary(n: usize) -> Vec<BinaryWord> {
    BinaryWord::all(n, &Limits::default()).unwrap().collect()
}

/// Deletion ball by deleting each position in turn, no run shortcut.
fn naive_single_deletions<W: Word>(w: &W) -> BTreeSet<W> {
    (0..w.len())
        .map(|i| {
            let mut s = w.symbols().to_vec();
            s.remove(i);
            w.rebuild(s)
        })
        .collect()
}

#[test]
fn single_deletion_ball_size_is_run_count() {
    for n in 1..=12 {
        for w in all_binary(n) {
            let ball = deletion_ball(&w, 1).unwrap();
            assert_eq!(ball.len(), runs(&w).len(), "{w}");
            if n <= 8 {
                assert_eq!(ball, naive_single_deletions(&w));
            }
        }
    }
}

#[test]
fn deletion_balls_compose() {
    for n in 0..=8 {
        for w in all_binary(n) {
            for e in 1..=2.min(n) {
                let direct = deletion_ball(&w, e).unwrap();
                let stepped: BTreeSet<BinaryWord> = deletion_ball(&w, 1)
                    .unwrap()
                    .iter()
                    .flat_map(|v| deletion_ball(v, e - 1).unwrap())
                    .collect();
                assert_eq!(direct, stepped, "{w} e={e}");
            }
        }
    }
}

#[test]
fn binary_insertion_ball_has_n_plus_two_words() {
    for n in 0..=10 {
        for w in all_binary(n) {
            assert_eq!(insertion_ball(&w, 1).unwrap().len(), n + 2, "{w}");
        }
    }
}

fn check_duality<W: Word>(longer: &[W], shorter: &[W]) {
    // v in D_1(w)  <=>  w in I_1(v), checked from both sides.
    let shorter_set: BTreeSet<&W> = shorter.iter().collect();
    let longer_set: BTreeSet<&W> = longer.iter().collect();
    let ins: Vec<BTreeSet<W>> = shorter.iter().map(|v| insertion_ball(v, 1).unwrap()).collect();
    for w in longer {
        for v in deletion_ball(w, 1).unwrap() {
            assert!(shorter_set.contains(&v));
            let idx = shorter.binary_search(&v).unwrap();
            assert!(ins[idx].contains(w), "{w:?} from {v:?}");
        }
    }
    for (v, ball) in shorter.iter().zip(&ins) {
        for w in ball {
            assert!(longer_set.contains(w));
            assert!(deletion_ball(w, 1).unwrap().contains(v));
        }
    }
}

#[test]
fn deletion_and_insertion_are_dual() {
    let limits = Limits::default();
    for n in 1..=8 {
        let mut longer = all_binary(n);
        let mut shorter = all_binary(n - 1);
        longer.sort();
        shorter.sort();
        check_duality(&longer, &shorter);

        let longer: Vec<QaryWord> = QaryWord::all(n, 3, &limits).unwrap().collect();
        let shorter: Vec<QaryWord> = QaryWord::all(n - 1, 3, &limits).unwrap().collect();
        check_duality(&longer, &shorter);
    }
}

#[test]
fn qary_insertion_example() {
    let w = QaryWord::parse("00", 3).unwrap();
    let got: Vec<String> = insertion_ball(&w, 1).unwrap().iter().map(|w| w.to_string()).collect();
    assert_eq!(got, ["000", "001", "002", "010", "020", "100", "200"]);
}

#[test]
fn burst_ball_of_full_length_is_empty_word() {
    for w in all_binary(5) {
        let ball = burst_deletion_ball(&w, 5).unwrap();
        assert_eq!(ball.into_iter().collect::<Vec<_>>(), vec![BinaryWord::zeros(0)]);
    }
}

fn binary_word(max_len: usize) -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(0u8..2, 0..=max_len).prop_map(|bits| BinaryWord::new(bits).unwrap())
}

proptest! {
    #[test]
    fn confusable_is_symmetric_and_reflexive(
        (u, v) in (1usize..=10).prop_flat_map(|n| (
            prop::collection::vec(0u8..2, n), prop::collection::vec(0u8..2, n)
        )),
        e in 1usize..=2,
    ) {
        let u = BinaryWord::new(u).unwrap();
        let v = BinaryWord::new(v).unwrap();
        let e = e.min(u.len());
        prop_assert_eq!(confusable(&u, &v, e).unwrap(), confusable(&v, &u, e).unwrap());
        prop_assert!(confusable(&u, &u, e).unwrap());
    }

    #[test]
    fn binary_text_round_trip(w in binary_word(40)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<BinaryWord>().unwrap(), w);
    }

    #[test]
    fn qary_text_round_trip(q in 2u32..40, symbols in prop::collection::vec(0u32..1000, 0..20)) {
        let w = QaryWord::new(symbols.into_iter().map(|s| s % q).collect(), q).unwrap();
        let text = w.to_string();
        prop_assert_eq!(QaryWord::parse(&text, q).unwrap(), w);
    }

    #[test]
    fn runs_cover_the_word(w in binary_word(30)) {
        let r = runs(&w);
        let total: usize = r.iter().map(|run| run.len).sum();
        prop_assert_eq!(total, w.len());
        for pair in r.as_slice().windows(2) {
            prop_assert_ne!(pair[0].symbol, pair[1].symbol);
            prop_assert_eq!(pair[0].end() + 1, pair[1].start);
        }
    }
}
