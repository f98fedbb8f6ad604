use meyer::cocycle::tau_sp;
use meyer::exact::{int, rank, Rational, SymmetricForm};
use meyer::fibered::{geography_invert, total_signature};
use meyer::genus1::{dedekind_sum, dedekind_sum_euclid, phi1, SL2Element};
use meyer::symplectic::is_symplectic;
use meyer::{
    geography_convert, random_symplectic, transvection, FiberGerm, FibrationDescription, HomologyClass, Presentation,
    Word,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn sym_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |upper| {
        let mut m = vec![vec![0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m[i][j] = upper[k];
                m[j][i] = upper[k];
                k += 1;
            }
        }
        m
    })
}

fn to_q(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

// leading principal minors by Bareiss elimination, without pivoting
fn leading_minors(m: &[Vec<i64>]) -> Option<Vec<BigInt>> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut minors = Vec::new();
    for k in 0..n {
        if a[k][k].is_zero() {
            return None;
        }
        minors.push(a[k][k].clone());
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Some(minors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn signature_matches_jacobi_rule(m in (1usize..=5).prop_flat_map(sym_matrix)) {
        if let Some(minors) = leading_minors(&m) {
            let mut changes = 0;
            let mut last = BigInt::from(1);
            for d in &minors {
                if (d.is_negative()) != (last.is_negative()) {
                    changes += 1;
                }
                last = d.clone();
            }
            let s = SymmetricForm::from_integers(&m).unwrap().signature();
            prop_assert_eq!(s.negative, changes);
            prop_assert_eq!(s.positive, m.len() - changes);
            prop_assert_eq!(s.null, 0);
        }
    }

    #[test]
    fn signature_congruence_invariant(
        m in sym_matrix(4),
        p in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 4),
    ) {
        let pq = to_q(&p);
        prop_assume!(rank(&pq, 4) == 4);
        let form = SymmetricForm::from_integers(&m).unwrap();
        prop_assert_eq!(form.congruent(&pq).unwrap().signature(), form.signature());
    }

    #[test]
    fn signature_additive(a in sym_matrix(3), b in sym_matrix(2)) {
        let fa = SymmetricForm::from_integers(&a).unwrap();
        let fb = SymmetricForm::from_integers(&b).unwrap();
        prop_assert_eq!(fa.direct_sum(&fb).signature(), fa.signature() + fb.signature());
    }

    #[test]
    fn tau_symmetric_and_bounded(g in 1usize..=3, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = random_symplectic(g, 10, s1);
        let b = random_symplectic(g, 10, s2);
        let t = tau_sp(&a, &b).unwrap();
        prop_assert_eq!(t, tau_sp(&b, &a).unwrap());
        prop_assert!(t.unsigned_abs() as usize <= 4 * g);
    }

    #[test]
    fn random_elements_are_symplectic(g in 1usize..=4, len in 0usize..30, seed in any::<u64>()) {
        let a = random_symplectic(g, len, seed);
        prop_assert!(is_symplectic(a.matrix(), g).unwrap());
        prop_assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn transvections_preserve_pairing(v in proptest::collection::vec(-3i64..=3, 4), x in proptest::collection::vec(-5i64..=5, 4), y in proptest::collection::vec(-5i64..=5, 4)) {
        let v = HomologyClass::from_i64(&v).unwrap();
        prop_assume!(!v.is_zero());
        let t = transvection(&v).unwrap();
        let x = HomologyClass::from_i64(&x).unwrap();
        let y = HomologyClass::from_i64(&y).unwrap();
        prop_assert_eq!(x.image(&t).pairing(&y.image(&t)), x.pairing(&y));
        prop_assert!(is_symplectic(t.matrix(), 2).unwrap());
    }

    #[test]
    fn dedekind_fast_path_agrees(a in -300i64..300, c in (-300i64..300).prop_filter("nonzero", |c| *c != 0)) {
        let (a, c) = (BigInt::from(a), BigInt::from(c));
        prop_assert_eq!(dedekind_sum_euclid(&a, &c).unwrap(), dedekind_sum(&a, &c).unwrap());
    }

    #[test]
    fn phi1_class_function(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = SL2Element::try_from(random_symplectic(1, 12, s1)).unwrap();
        let c = SL2Element::try_from(random_symplectic(1, 12, s2)).unwrap();
        let conj = &(&c * &a) * &c.inverse();
        prop_assert_eq!(phi1(&conj).unwrap(), phi1(&a).unwrap());
        prop_assert_eq!(phi1(&a.inverse()).unwrap(), -phi1(&a).unwrap());
    }

    #[test]
    fn word_format_round_trip(letters in proptest::collection::vec((0usize..5, any::<bool>()), 0..30)) {
        let p = Presentation::genus2();
        let w = Word::from_letters(letters.into_iter().map(|(g, i)| meyer::presentations::Letter::new(g, i)).collect());
        prop_assert_eq!(p.parse_word(&p.format_word(&w)).unwrap(), w.clone());
        let q = Presentation::sl2z();
        let w1 = Word::from_letters(w.letters().iter().map(|l| meyer::presentations::Letter::new(l.generator % 2, l.inverse)).collect());
        prop_assert_eq!(q.parse_word(&q.format_word(&w1)).unwrap(), w1);
    }

    #[test]
    fn free_reduce_idempotent(letters in proptest::collection::vec((0usize..2, any::<bool>()), 0..40)) {
        let w = Word::from_letters(letters.into_iter().map(|(g, i)| meyer::presentations::Letter::new(g, i)).collect());
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn doubled_germs_cancel(letters in proptest::collection::vec((0usize..2, any::<bool>()), 1..6), n in 1usize..4) {
        let p = Presentation::sl2z();
        let mut words = Vec::new();
        for k in 0..n {
            let rot: Vec<_> = letters.iter().cycle().skip(k).take(letters.len()).map(|&(g, i)| meyer::presentations::Letter::new(g, i)).collect();
            words.push(Word::from_letters(rot));
        }
        let mut germs: Vec<FiberGerm> = words.iter().map(|w| FiberGerm::new(w.clone(), 0, "")).collect();
        germs.extend(words.iter().rev().map(|w| FiberGerm::new(w.inverse(), 0, "")));
        let fd = FibrationDescription { genus: 1, base_genus: 0, germs };
        prop_assert!(p.evaluate(&fd.monodromy_product()).unwrap().is_identity());
        prop_assert_eq!(total_signature(&fd).unwrap(), BigInt::zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn geography_round_trip(k in -10_000i64..10_000, chi in -10_000i64..10_000) {
        let g = geography_convert(&int(k), &int(chi));
        prop_assert_eq!(geography_invert(&g), (int(k), int(chi)));
    }
}
