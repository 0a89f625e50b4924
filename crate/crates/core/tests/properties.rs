use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use schurweyl_core::ergodic::{
    free_paired, sample_word, tail_estimate, youngize, youngize_with_tableau, BernoulliSpec,
};
use schurweyl_core::graph::{decode_sw2, encode_sw2, path_to_word, word_to_path};
use schurweyl_core::rsk::{rsk, rsk_mixed, rsk_mixed_star, rsk_star};
use schurweyl_core::tableau::{alphabet, partitions};
use schurweyl_core::young::{
    dim_frobenius, dim_hook, dim_paths, dim_ratio_shapes, hook_schur, schur, thoma_cylinder, ThomaParams,
};
use schurweyl_core::{InsertionRule, Tableau, TableauKind, Word, YoungDiagram};

fn word(k: u32, l: u32, max_len: usize) -> impl Strategy<Value = Word> {
    let letters = alphabet(k, l);
    prop::collection::vec(0..letters.len(), 0..=max_len)
        .prop_map(move |idx| Word::new(k, l, idx.iter().map(|&i| letters[i]).collect()).unwrap())
}

fn diagram(max_size: usize) -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(0usize..=max_size, 0..=max_size).prop_filter_map("too large", move |mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        let d = YoungDiagram::new(rows).ok()?;
        (d.size() <= max_size).then_some(d)
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (0i64..20, 1i64..10).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn row_insertion_round_trips(u in word(3, 0, 8), s in 1u32..=3) {
        let t = rsk(&u).unwrap().p;
        let sym = schurweyl_core::Symbol::row(s);
        let (grown, cell) = t.insert_row(sym).unwrap();
        prop_assert!(grown.is_valid_as(TableauKind::Semistandard));
        prop_assert!(t.shape().is_covered_by(&grown.shape()));
        let (back, out) = grown.reverse_insert_row(cell).unwrap();
        prop_assert_eq!(back, t);
        prop_assert_eq!(out, sym);
    }

    #[test]
    fn mixed_insertion_round_trips(u in word(2, 2, 8), v in word(2, 2, 1)) {
        prop_assume!(!v.is_empty());
        let s = v.symbols()[0];
        let t = rsk_mixed(&u).p;
        let (grown, cell) = t.insert_mixed(s);
        prop_assert!(grown.is_valid_as(TableauKind::Hook));
        prop_assert!(t.shape().is_covered_by(&grown.shape()));
        let (back, out) = grown.reverse_insert(cell, InsertionRule::Mixed).unwrap();
        prop_assert_eq!(back, t);
        prop_assert_eq!(out, s);
    }

    #[test]
    fn transpose_and_evacuation_are_involutions(u in word(3, 0, 8)) {
        let pair = rsk(&u).unwrap();
        prop_assert_eq!(pair.p.transpose().transpose(), pair.p.clone());
        let e = pair.q.evacuation().unwrap();
        prop_assert!(e.is_valid_as(TableauKind::Standard));
        prop_assert_eq!(e.evacuation().unwrap(), pair.q);
    }

    #[test]
    fn rsk_outputs_are_valid(u in word(3, 0, 12)) {
        let pair = rsk(&u).unwrap();
        prop_assert!(pair.p.is_valid_as(TableauKind::Semistandard));
        prop_assert!(pair.q.is_valid_as(TableauKind::Standard));
        prop_assert_eq!(pair.p.shape(), pair.q.shape());
        prop_assert_eq!(pair.p.size(), u.len());
    }

    #[test]
    fn duality_pure(u in word(4, 0, 9)) {
        let r = rsk(&u).unwrap();
        let d = rsk_star(&u.rev()).unwrap();
        prop_assert_eq!(d.p, r.p.transpose());
        prop_assert_eq!(d.q, r.q.transpose().evacuation().unwrap());
    }

    #[test]
    fn dagger_transposes_q(u in word(3, 3, 9)) {
        prop_assert_eq!(rsk_mixed(&u.dagger()).q, rsk_mixed(&u).q.transpose());
        let d = rsk_mixed_star(&u.rev());
        prop_assert_eq!(d.p, rsk_mixed(&u).p.transpose());
    }

    #[test]
    fn recording_tableau_grows_by_one_cell(u in word(2, 1, 10)) {
        for n in 1..=u.len() {
            let before = rsk_mixed(&u.prefix(n - 1)).q;
            let after = rsk_mixed(&u.prefix(n)).q;
            prop_assert!(before.shape().is_covered_by(&after.shape()));
            let new_cells: Vec<_> = after.shape().cells().filter(|c| !before.shape().contains_cell(*c)).collect();
            prop_assert_eq!(new_cells.len(), 1);
            prop_assert_eq!(after.get(new_cells[0]).unwrap().index() as usize, n);
        }
    }

    #[test]
    fn text_forms_round_trip(u in word(3, 2, 10)) {
        let back: Word = u.to_string().parse().unwrap();
        prop_assert_eq!(back.symbols(), u.symbols());
        let p = rsk_mixed(&u).p;
        prop_assert_eq!(Tableau::parse(&p.to_string(), TableauKind::Hook).unwrap(), p);
    }

    #[test]
    fn paths_and_words_correspond(u in word(2, 1, 8)) {
        prop_assert_eq!(path_to_word(&word_to_path(&u), 2, 1).unwrap(), u);
    }

    #[test]
    fn dimensions_agree(d in diagram(14)) {
        let h = dim_hook(&d);
        prop_assert_eq!(&h, &dim_frobenius(&d));
        prop_assert_eq!(&h, &dim_paths(&d));
        prop_assert_eq!(d.frobenius().to_diagram(), d);
    }

    #[test]
    fn corner_ratios_sum_to_one(d in diagram(14)) {
        prop_assume!(!d.is_empty());
        let total: BigRational = d
            .corners()
            .into_iter()
            .map(|c| dim_ratio_shapes(&d, &d.remove_corner(c).unwrap()).unwrap())
            .sum();
        prop_assert_eq!(total, BigRational::one());
        prop_assert_eq!(dim_ratio_shapes(&d, &d).unwrap(), BigRational::one());
    }

    #[test]
    fn schur_is_symmetric(d in diagram(5), mut x in prop::collection::vec(rational(), 3), seed in 0usize..6) {
        prop_assume!(d.num_rows() <= 3);
        let before = schur(&d, &x);
        x.rotate_left(seed % 3);
        if seed >= 3 {
            x.swap(0, 1);
        }
        prop_assert_eq!(before, schur(&d, &x));
    }

    #[test]
    fn thoma_level_sums_to_one(a in prop::collection::vec(1i64..6, 1..=2), b in prop::collection::vec(1i64..6, 0..=2), n in 0usize..=6) {
        let total: i64 = a.iter().chain(&b).sum();
        let to_q = |v: &[i64]| v.iter().map(|&x| BigRational::new(BigInt::from(x), BigInt::from(total))).collect();
        let params = ThomaParams::from_frequencies(to_q(&a), to_q(&b)).unwrap();
        let level: BigRational = partitions(n, n).iter().map(|l| thoma_cylinder(l, &params)).sum();
        prop_assert_eq!(level, BigRational::one());
        if b.is_empty() {
            for l in partitions(n, n) {
                prop_assert_eq!(hook_schur(&l, params.alpha(), &[]), schur(&l, params.alpha()));
            }
        }
    }

    #[test]
    fn tail_estimates_are_probability_vectors(u in word(2, 1, 9), m in 0usize..=3) {
        prop_assume!(m <= u.len());
        let e = tail_estimate(&u, u.len(), m).unwrap();
        prop_assert_eq!(e.total(), BigRational::one());
        prop_assert!(e.estimates.iter().all(|(_, x)| *x >= BigRational::zero()));
    }

    #[test]
    fn youngization_matches_rsk(u in word(2, 2, 60)) {
        let (stats, p) = youngize_with_tableau(&u, None);
        let pair = rsk_mixed(&u);
        prop_assert_eq!(p, pair.p);
        prop_assert_eq!(stats.recording_tableau(), pair.q);
    }

    #[test]
    fn bracketing_counts_second_row(u in word(2, 0, 40)) {
        let fp = free_paired(&u).unwrap();
        prop_assert_eq!(fp.pairs.len(), youngize(&u, None).shape().row(2));
        prop_assert_eq!(fp.free.len() + 2 * fp.pairs.len(), u.len());
    }

    #[test]
    fn sw2_codes_round_trip(u in word(2, 0, 12)) {
        let t = rsk(&u).unwrap().p;
        prop_assert_eq!(decode_sw2(&encode_sw2(&t).unwrap()), t);
    }

    #[test]
    fn sampling_is_reproducible(seed in any::<u64>()) {
        let s = BernoulliSpec::from_floats(&[0.5, 0.25], &[0.25], seed).unwrap();
        prop_assert_eq!(sample_word(&s, 64), sample_word(&s, 64));
    }
}

/// Median density deviation over many seeds falls at each doubling of `n`.
#[test]
fn density_deviation_shrinks_with_n() {
    use schurweyl_core::ergodic::{check_density_theorem, Sampler};
    let spec = BernoulliSpec::from_floats(&[0.6, 0.4], &[], 0).unwrap();
    let seeds: Vec<u64> = (1..=41).collect();
    let medians: Vec<f64> = [1000, 2000, 4000, 8000, 16000]
        .iter()
        .map(|&n| {
            let r = check_density_theorem(&spec, n, &seeds, 1.0, &Sampler);
            let mut devs: Vec<f64> = r.seeds.iter().map(|s| s.row_deviation).collect();
            devs.sort_by(f64::total_cmp);
            devs[devs.len() / 2]
        })
        .collect();
    assert!(medians.windows(2).all(|w| w[1] < w[0]), "{medians:?}");
}
