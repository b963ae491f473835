mod common;

use std::collections::BTreeMap;

use common::*;
use hyperladder::operators::apply_word;
use hyperladder::rational::{int, rat};
use hyperladder::spectra::{explore, so42_vacuum};
use hyperladder::{
    apply, apply_hamiltonian, bound_spectrum, enumerate_lattice, gram_rank, ground_full, inner, normalize, states_at,
    vertex_energy, Algebra, FunExpr, LabeledState, OperatorName, OperatorWord, ParamPoint, Rational, SpectrumReport,
};
use proptest::prelude::*;

/// Admissible su(2,1) vertices `(l0, 0, l2)` with a small lattice.
fn vertex() -> impl Strategy<Value = ParamPoint> {
    (0i64..=4, -12i64..=-6).prop_map(|(a, s)| {
        let l0 = rat(a, 2);
        let l2 = rat(s, 2) - &l0;
        ParamPoint::new(l0, int(0), l2)
    })
}

fn normalizable(st: &LabeledState) -> bool {
    matches!(inner(&st.expr, &st.expr), Ok(v) if v > 0.0)
}

/// Minimal depth of every label reachable by nonzero, normalizable raising
/// words, by brute force over all words.
fn brute_force_depths(vertex: &ParamPoint, algebra: Algebra, max_depth: usize) -> BTreeMap<ParamPoint, usize> {
    let root = algebra.vertex_state(vertex).unwrap();
    let mut seen = BTreeMap::from([(vertex.clone(), 0)]);
    let mut layer = vec![root];
    for d in 1..=max_depth {
        let mut next = Vec::new();
        for st in &layer {
            for &op in algebra.raising() {
                let img = apply(op, st);
                if !img.is_zero() && normalizable(&img) {
                    seen.entry(img.label.clone()).or_insert(d);
                    next.push(img);
                }
            }
        }
        layer = next;
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn generated_states_are_exact_eigenstates(v in vertex()) {
        let energy = vertex_energy(&v.l0, &v.l2);
        let lattice = explore(&v, Algebra::Su21, 3, &|_| true).unwrap();
        for node in &lattice.nodes {
            for w in &node.states {
                let h = apply_hamiltonian(&w.state);
                prop_assert_eq!(h, w.state.expr.scale(&energy));
            }
        }
    }

    #[test]
    fn energy_depends_on_vertex_sum_only(v in vertex(), op in prop::sample::select(OperatorName::SU21_RAISING.to_vec())) {
        // shifting l0 up and l2 down keeps the sum; the raised state at the
        // other vertex must carry the same eigenvalue
        let w = ParamPoint::new(&v.l0 + int(1), int(0), &v.l2 - int(1));
        let e = |p: &ParamPoint| {
            let st = apply(op, &ground_full(&p.l0, &p.l2).unwrap());
            if st.is_zero() {
                return None;
            }
            apply_hamiltonian(&st).ratio_to(&st.expr)
        };
        let (a, b) = (e(&v), e(&w));
        if let (Some(a), Some(b)) = (a, b) {
            prop_assert_eq!(a.clone(), b);
            prop_assert!(a < int(0));
        }
    }

    #[test]
    fn gram_rank_is_scale_invariant(v in vertex(), c in nonzero_coeff()) {
        let target = ParamPoint::new(&v.l0 - int(1), int(0), &v.l2 - int(1));
        let mut states = states_at(&v, &target, Algebra::Su21).unwrap();
        let before = gram_rank(&states).unwrap();
        if let Some(first) = states.first_mut() {
            *first = first.scale(&c);
        }
        prop_assert_eq!(gram_rank(&states).unwrap(), before);
    }

    #[test]
    fn depths_are_minimal_word_lengths(v in vertex()) {
        let depth = 3;
        let points = enumerate_lattice(&v, Algebra::Su21, depth).unwrap();
        let brute = brute_force_depths(&v, Algebra::Su21, depth);
        prop_assert_eq!(points.len(), brute.len());
        for p in points {
            prop_assert_eq!(Some(&p.depth), brute.get(&p.label), "{}", p.label);
        }
    }
}

#[test]
fn su2_chain_has_l0_plus_l1_plus_one_states() {
    for l0 in 0..4 {
        for l1 in 0..4 {
            let f = FunExpr::term(int(1), rat(2 * l0 + 1, 2), rat(2 * l1 + 1, 2), int(-9), int(1));
            let mut st = LabeledState::new(ParamPoint::ints(l0, l1, -9), f);
            let mut count = 0;
            while !st.is_zero() {
                count += 1;
                assert!(count <= 20, "chain does not terminate");
                st = apply(OperatorName::APlus, &st);
            }
            assert_eq!(count, l0 + l1 + 1, "(l0, l1) = ({l0}, {l1})");
        }
    }
}

#[test]
fn gram_rank_matches_exact_rank() {
    let cases = [
        (ParamPoint::ints(1, 0, -4), ParamPoint::ints(0, 0, -5)),
        (ParamPoint::ints(2, 0, -5), ParamPoint::ints(0, 0, -7)),
        (ParamPoint::ints(1, 0, -6), ParamPoint::ints(0, 0, -7)),
    ];
    for (v, t) in cases {
        // every raising word of the right length, without any deduplication
        let root = ground_full(&v.l0, &v.l2).unwrap();
        let mut raw = Vec::new();
        let mut words = vec![OperatorWord::empty()];
        for _ in 0..4 {
            words = words
                .iter()
                .flat_map(|w| OperatorName::SU21_RAISING.iter().map(move |&op| w.then(op)))
                .chain(words.iter().cloned())
                .collect();
            words.sort_by_key(|w| w.0.clone());
            words.dedup();
        }
        for w in &words {
            let st = apply_word(w, &root);
            if st.label == t && !st.is_zero() {
                raw.push(st);
            }
        }
        let exprs: Vec<FunExpr> = raw.iter().map(|s| s.expr.clone()).collect();
        let exact = exact_rank(&exprs);
        assert_eq!(gram_rank(&raw).unwrap(), exact, "{v} -> {t}");
        assert_eq!(states_at(&v, &t, Algebra::Su21).unwrap().len(), exact, "{v} -> {t}");
    }
}

#[test]
fn normalization_matches_quadrature() {
    let st = ground_full(&int(0), &int(-3)).unwrap();
    let n = normalize(&st).unwrap();
    let want = 1.0 / quad_inner(&st.expr, &st.expr).sqrt();
    assert!((n.constant - want).abs() < 1e-8 * want, "{} vs {want}", n.constant);
    let unit = inner(&n.state.expr, &n.state.expr).unwrap() * n.constant * n.constant;
    assert!((unit - 1.0).abs() < 1e-12);
    assert!(normalize(&st.scale(&int(0))).is_err());
}

#[test]
fn so42_vacuum_is_the_l0_zero_ground_state() {
    let v = so42_vacuum(&int(-3)).unwrap();
    assert_eq!(v, ground_full(&int(0), &int(-3)).unwrap());
    assert!(so42_vacuum(&rat(-5, 2)).is_err());
}

fn check_report(r: &SpectrumReport) {
    assert!(!r.levels.is_empty());
    assert_eq!(r.levels.len(), r.normalizations.len());
    for w in r.levels.windows(2) {
        assert!(w[0].energy < w[1].energy);
    }
    for (level, norms) in r.levels.iter().zip(&r.normalizations) {
        assert!(level.energy < Rational::from_integer(0.into()));
        assert!(level.degeneracy >= 1);
        assert_eq!(level.energy, vertex_energy(&level.vertex.l0, &level.vertex.l2));
        assert_eq!(norms.len(), level.witnesses.len());
        assert!(norms.iter().all(|c| c.is_finite() && *c > 0.0));
        let root = ground_full(&level.vertex.l0, &level.vertex.l2).unwrap();
        let states: Vec<_> = level.witnesses.iter().map(|w| apply_word(w, &root)).collect();
        assert!(states.iter().all(|s| s.label == r.target));
        assert_eq!(gram_rank(&states).unwrap(), level.degeneracy);
    }
}

#[test]
fn bound_spectra_are_consistent() {
    for t in [
        ParamPoint::ints(0, 0, -5),
        ParamPoint::ints(0, 0, -7),
        ParamPoint::ints(1, 1, -6),
        ParamPoint::new(rat(1, 2), int(0), rat(-11, 2)),
    ] {
        let r = bound_spectrum(&t).unwrap();
        check_report(&r);
        let json = serde_json::to_string(&r).unwrap();
        let back: SpectrumReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn seven_target_supports_shell_counting() {
    let r = bound_spectrum(&ParamPoint::ints(0, 0, -7)).unwrap();
    let got: Vec<(Rational, usize)> = r.levels.iter().map(|l| (l.energy.clone(), l.degeneracy)).collect();
    assert_eq!(got, vec![(rat(-99, 4), 1), (rat(-35, 4), 2), (rat(-3, 4), 3)]);
    assert!(r.levels.iter().all(|l| l.check.equals_shell_plus_one == Some(true)));
}
