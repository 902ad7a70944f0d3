mod common;

use proptest::prelude::*;

use bqfare::biquandle::{verify, FiniteBiquandle};
use bqfare::diagram::LinkDiagram;
use bqfare::fare::{self, FareKind, FareTable};
use bqfare::homset::{brute_force_colorings, enumerate_colorings};
use bqfare::zmodlinalg::{howell_form, in_subgroup_sum, kernel, CoeffGroup, GroupElement, IntMatrixModM};

use common::*;

fn small_biquandle() -> impl Strategy<Value = FiniteBiquandle> {
    prop_oneof![
        Just(trefoil_bq()),
        Just(z2_bq()),
        Just(klein_bq()),
        Just(two_bq()),
        Just(FiniteBiquandle::from_fn(3, |x, y| (2 * y + 3 - x) % 3, |x, _| x)),
    ]
}

/// A random diagram on 1–3 crossings: in-slots 1..2k, out-slots permuted.
fn small_diagram() -> impl Strategy<Value = LinkDiagram> {
    (1usize..=3)
        .prop_flat_map(|k| (Just(k), Just((1..=2 * k).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), k)))
        .prop_map(|(k, outs, signs)| {
            let cs: Vec<_> = (0..k)
                .map(|i| (if signs[i] { 1 } else { -1 }, 2 * i + 1, 2 * i + 2, outs[2 * i], outs[2 * i + 1]))
                .collect();
            LinkDiagram::from_crossings(&cs, &[]).unwrap()
        })
}

fn system() -> impl Strategy<Value = (u64, usize, Vec<Vec<i64>>)> {
    (prop_oneof![Just(2u64), Just(4), Just(5), Just(6), Just(12)], 1usize..=5, 0usize..=5)
        .prop_flat_map(|(m, cols, rows)| (Just(m), Just(cols), prop::collection::vec(prop::collection::vec(-20i64..20, cols), rows)))
}

fn brute_kernel(a: &IntMatrixModM) -> Vec<Vec<u64>> {
    let (c, m) = (a.cols(), a.modulus() as usize);
    let mut out = Vec::new();
    for mut k in 0..m.pow(c as u32) {
        let mut x = vec![0u64; c];
        for v in x.iter_mut() {
            *v = (k % m) as u64;
            k /= m;
        }
        if a.apply(&x).iter().all(|&v| v == 0) {
            out.push(x);
        }
    }
    out.sort();
    out
}

proptest! {
    #[test]
    fn kernel_matches_brute_force((m, cols, rows) in system()) {
        let a = IntMatrixModM::from_rows(&rows, cols, m);
        let k = kernel(&a);
        let mut fast: Vec<_> = k.iter().collect();
        fast.sort();
        prop_assert_eq!(fast.len() as u128, k.size());
        prop_assert_eq!(fast, brute_kernel(&a));
    }

    #[test]
    fn howell_form_is_idempotent((m, cols, rows) in system()) {
        let h = howell_form(&IntMatrixModM::from_rows(&rows, cols, m));
        prop_assert_eq!(howell_form(&h), h);
    }

    #[test]
    fn sum_of_members_is_in_subgroup_sum((m, cols, rows) in system(), (_, _, rows2) in system(), c1 in any::<u64>(), c2 in any::<u64>()) {
        let rows2: Vec<Vec<i64>> = rows2.into_iter().map(|mut r| { r.resize(cols, 0); r }).collect();
        let k1 = kernel(&IntMatrixModM::from_rows(&rows, cols, m));
        let k2 = kernel(&IntMatrixModM::from_rows(&rows2, cols, m));
        let a = k1.iter().nth((c1 % k1.size() as u64) as usize).unwrap();
        let b = k2.iter().nth((c2 % k2.size() as u64) as usize).unwrap();
        let t: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % m).collect();
        prop_assert!(in_subgroup_sum(&t, &k1, &k2));
    }

    #[test]
    fn homset_matches_brute_force(d in small_diagram(), b in small_biquandle()) {
        prop_assert!(verify(&b).valid());
        prop_assert_eq!(enumerate_colorings(&d, &b).unwrap().colorings, brute_force_colorings(&d, &b));
    }

    #[test]
    fn enumerated_fares_solve_their_system(b in small_biquandle(), pick in 0usize..4, skip in 0usize..50) {
        let (order, kind) = [(1, FareKind::Plain), (2, FareKind::Complete), (2, FareKind::Through), (2, FareKind::Crooked)][pick];
        let g = CoeffGroup::cyclic(5);
        for f in fare::enumerate_fares(&b, order, kind, &g).unwrap().skip(skip).take(20) {
            prop_assert!(fare::is_fare(&b, &f).unwrap());
        }
    }

    #[test]
    fn fare_files_round_trip(vals in prop::collection::vec((0u64..4, 0u64..6), 9), pick in 0usize..3) {
        let kind = [FareKind::Complete, FareKind::Through, FareKind::Crooked][pick];
        let g: CoeffGroup = "4x6".parse().unwrap();
        let f = FareTable::new(2, kind, g, 3, vals.into_iter().map(|(a, b)| GroupElement(vec![a, b])).collect()).unwrap();
        prop_assert_eq!(FareTable::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn diagram_text_round_trips(d in small_diagram()) {
        prop_assert_eq!(LinkDiagram::parse(&d.to_text()).unwrap().to_text(), d.to_text());
    }
}

#[test]
fn group_constructions_are_biquandles() {
    use bqfare::biquandle::{alexander_biquandle, conjugation_biquandle, wada_biquandle, GroupTable};
    for (m, t, s) in [(5, 2, 3), (6, 5, 1), (7, 3, 3), (4, 3, 1)] {
        assert!(verify(&alexander_biquandle(m, t, s).unwrap()).valid(), "alexander {} {} {}", m, t, s);
    }
    for g in [GroupTable::cyclic(5), GroupTable::symmetric(3)] {
        for k in -2..=2 {
            assert!(verify(&conjugation_biquandle(&g, k)).valid());
        }
        assert!(verify(&wada_biquandle(&g)).valid());
    }
}
