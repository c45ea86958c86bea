use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wpl_core::arquiver;
use wpl_core::homspaces::{dim_s, ext1_dim, hom_dim};
use wpl_core::ladder::{
    cosyzygy, hom, in_nil, is_isomorphic, lambda, random_graded_module, random_nil_rep, strip_projectives, syzygy, LadderRep,
};
use wpl_core::lgroup::{LElt, TauPattern, WeightTriple};

fn elt() -> impl Strategy<Value = LElt> {
    (2i64..=9, -5i64..=5, -5i64..=5, -9i64..=9, -3i64..=3)
        .prop_map(|(p, a, b, c, m)| LElt::normalize(WeightTriple::two_three(p).unwrap(), [a, b, c], m))
}

fn pair() -> impl Strategy<Value = (LElt, LElt)> {
    (elt(), -5i64..=5, -5i64..=5, -9i64..=9, -3i64..=3).prop_map(|(x, a, b, c, m)| (x, LElt::normalize(x.weights(), [a, b, c], m)))
}

fn rep(seed: u64, p: usize) -> LadderRep {
    random_nil_rep(p, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #[test]
    fn normal_form_is_confluent(p in 2i64..=9, a in -20i64..=20, b in -20i64..=20, c in -20i64..=20, m in -5i64..=5) {
        let w = WeightTriple::two_three(p).unwrap();
        let x = LElt::normalize(w, [a, b, c], m);
        let stepwise = LElt::x(w, 1).smul(a) + LElt::x(w, 2).smul(b) + LElt::x(w, 3).smul(c) + LElt::c(w).smul(m);
        prop_assert_eq!(x, stepwise);
        prop_assert_eq!(LElt::normalize(w, x.n(), x.m()), x);
        let n = x.n();
        prop_assert!((0..2).contains(&n[0]) && (0..3).contains(&n[1]) && (0..p).contains(&n[2]));
    }

    #[test]
    fn delta_is_additive((x, y) in pair()) {
        prop_assert_eq!((x + y).delta().unwrap(), x.delta().unwrap() + y.delta().unwrap());
        prop_assert_eq!((-x).delta().unwrap(), -x.delta().unwrap());
    }

    #[test]
    fn nonneg_iff_s_nonzero(x in elt()) {
        prop_assert_eq!(x.is_nonneg(), dim_s(x) > 0);
    }

    #[test]
    fn tau_patterns_rotate_the_base(x in elt()) {
        let t = x.tau_pattern().unwrap();
        let k = t.rotation_of_base();
        prop_assert!(k.is_some());
        prop_assert_eq!(TauPattern::BASE.rotate(k.unwrap()), t);
    }

    #[test]
    fn hom_is_translation_invariant((x, y) in pair(), z in -4i64..=4) {
        let s = LElt::x(x.weights(), 3).smul(z) + LElt::x(x.weights(), 1);
        prop_assert_eq!(hom_dim(x + s, y + s), hom_dim(x, y));
        prop_assert_eq!(ext1_dim(x + s, y + s), ext1_dim(x, y));
    }

    #[test]
    fn serre_duality((x, y) in pair()) {
        let w = LElt::omega(x.weights());
        prop_assert_eq!(ext1_dim(x, y), hom_dim(y, x + w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hom_is_additive(p in 2usize..=4, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (rep(a, p), rep(b, p), rep(c, p));
        prop_assert_eq!(hom(&x.direct_sum(&y), &z).dim(), hom(&x, &z).dim() + hom(&y, &z).dim());
        prop_assert_eq!(hom(&z, &x.direct_sum(&y)).dim(), hom(&z, &x).dim() + hom(&z, &y).dim());
    }

    #[test]
    fn hom_is_shift_invariant(p in 2usize..=4, a in any::<u64>(), b in any::<u64>(), k in -3i64..=3) {
        let (x, y) = (rep(a, p), rep(b, p));
        prop_assert_eq!(hom(&x.shift_s(k), &y.shift_s(k)).dim(), hom(&x, &y).dim());
    }

    #[test]
    fn syzygy_round_trip(p in 2usize..=5, a in any::<u64>()) {
        let x = rep(a, p);
        let om = syzygy(&x);
        prop_assert!(in_nil(&om));
        prop_assert!(is_isomorphic(&cosyzygy(&om).unwrap(), &strip_projectives(&x)));
        prop_assert!(is_isomorphic(&syzygy(&cosyzygy(&x).unwrap()), &strip_projectives(&x)));
    }

    #[test]
    fn lambda_is_additive_and_shifts(p in 2usize..=4, a in any::<u64>(), b in any::<u64>(), k in -2i64..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(a ^ b.rotate_left(17));
        let (n, m) = (random_graded_module(p, &mut rng), random_graded_module(p, &mut rng));
        let sum = lambda(&n.direct_sum(&m), p).unwrap();
        prop_assert!(is_isomorphic(&sum, &lambda(&n, p).unwrap().direct_sum(&lambda(&m, p).unwrap())));
        prop_assert!(is_isomorphic(&lambda(&n.shift(k), p).unwrap(), &lambda(&n, p).unwrap().shift_s(k)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn quiver_windows_satisfy_meshes(p in 2usize..=9, start in -6i64..=6, len in 2i64..=8) {
        let q = arquiver::build(p, start..start + len).unwrap();
        prop_assert!(q.mesh_failures().is_empty());
        prop_assert!(q.rank_failures().is_empty());
        let m = arquiver::mark(&q).unwrap();
        let d = arquiver::delete_fading(&m);
        prop_assert_eq!(d.vertices.len() + m.count(arquiver::Mark::Fading), m.vertices.len());
    }
}

mod more {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;
    use proptest::sample::subsequence;
    use wpl_core::algebras::{bprime_poset, canonical_cartan, cartan_nakayama, cartan_poset, coxeter, coxpoly, rectangle_poset};
    use wpl_core::arquiver::Mark;
    use wpl_core::grothendieck::K0Lattice;
    use wpl_core::homspaces::euler_form;
    use wpl_core::ladder::{cokernel, image, projective, stable_hom, Bar};
    use wpl_core::lgroup::{quotient, structure};
    use wpl_core::{IntMatrix, Q};

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    proptest! {
        #[test]
        fn delta_of_c(p in 2i64..=12) {
            let w = WeightTriple::two_three(p).unwrap();
            prop_assert_eq!(LElt::c(w).delta().unwrap(), 6 * p / gcd(6, p));
        }

        #[test]
        fn two_persistent_per_orbit(x in elt()) {
            prop_assert_eq!(x.tau_pattern().unwrap().plus_count(), 2);
        }

        #[test]
        fn torsion_matches_minor_gcds(a in 2i64..=12, b in 2i64..=12, c in 2i64..=12) {
            let d1 = gcd(gcd(a, b), c);
            let d2 = gcd(gcd(a * b, a * c), b * c) / d1;
            let expected: Vec<i64> = [d1, d2].into_iter().filter(|&d| d > 1).collect();
            let s = structure(WeightTriple::new(a, b, c).unwrap());
            prop_assert_eq!(s.free_rank, 1);
            prop_assert_eq!(s.torsion, expected);
        }

        #[test]
        fn s_grows_by_one_along_c(x in elt()) {
            let c = LElt::c(x.weights());
            if x.m() < 0 {
                prop_assert_eq!(dim_s(x), 0);
            }
            if x.is_nonneg() {
                prop_assert_eq!(dim_s(x + c), dim_s(x) + 1);
            }
        }

        #[test]
        fn gram_pairing_is_the_euler_form((x, y) in pair()) {
            let k = K0Lattice::new(x.weights().p(3)).unwrap();
            prop_assert_eq!(k.pair(&k.class_of(x), &k.class_of(y)), euler_form(x, y));
        }

        #[test]
        fn coxpoly_is_conjugation_invariant(p in 2usize..=7, seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for poset in [rectangle_poset(p), bprime_poset(p)] {
                let mut perm: Vec<usize> = (0..poset.len()).collect();
                perm.shuffle(&mut rng);
                prop_assert_eq!(coxpoly(&cartan_poset(&poset)).unwrap(), coxpoly(&cartan_poset(&poset.reorder(&perm))).unwrap());
            }
            let c = cartan_nakayama(2 * (p - 1), 3);
            let n = c.rows();
            let rev = IntMatrix::from_fn(n, n, |i, j| c.get(n - 1 - i, n - 1 - j).clone());
            prop_assert_eq!(coxpoly(&c).unwrap(), coxpoly(&rev).unwrap());
        }

        #[test]
        fn cartan_matrices_are_unimodular(p in 2usize..=9, n in 1usize..=12, l in 1usize..=5) {
            for c in [cartan_nakayama(n, l), cartan_poset(&rectangle_poset(p)), cartan_poset(&bprime_poset(p)), canonical_cartan(p as i64).unwrap()] {
                prop_assert_eq!(c.det().abs(), BigInt::from(1));
                let d = coxeter(&c).unwrap();
                prop_assert_eq!(d.coxpoly.coeffs()[0].abs(), BigInt::from(1));
            }
        }

        #[test]
        fn quotient_by_x3(p in 2i64..=12) {
            let w = WeightTriple::two_three(p).unwrap();
            let q = quotient(LElt::x(w, 3)).unwrap();
            prop_assert_eq!(q.len(), 6);
            let om = LElt::omega(w);
            let orbit: std::collections::BTreeSet<String> = (0..6).map(|k| wpl_core::lgroup::coset_rep(om.smul(k), LElt::x(w, 3)).unwrap().to_string()).collect();
            prop_assert_eq!(orbit.len(), 6);
        }

        #[test]
        fn persistent_third_of_each_orbit(p in 2usize..=5, start in -6i64..=6, periods in 1i64..=2) {
            let m = arquiver::mark(&arquiver::build_domestic(p, start..start + 6 * periods).unwrap()).unwrap();
            for &(orbit, _) in &m.line_orbits {
                let line: Vec<_> = m.vertices.iter().filter(|v| v.orbit == orbit).collect();
                let kept = line.iter().filter(|v| v.mark == Mark::Persistent).count();
                prop_assert_eq!(kept * 3, line.len());
                prop_assert!(line.iter().all(|v| v.mark != Mark::NonLine));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn projectives_vanish_stably(p in 2usize..=4, a in any::<u64>(), n in -2i64..=2, lower in any::<bool>()) {
            let x = rep(a, p);
            let pr = projective(if lower { Bar::Lower } else { Bar::Upper }, n, p);
            prop_assert_eq!(stable_hom(&pr, &x).dim(), 0);
            prop_assert_eq!(stable_hom(&x, &pr).dim(), 0);
        }

        #[test]
        fn lambda_is_exact_in_dimension(p in 2usize..=4, a in any::<u64>(), picks in subsequence((0..8usize).collect::<Vec<_>>(), 0..3)) {
            let mut rng = ChaCha8Rng::seed_from_u64(a);
            let m = random_graded_module(p, &mut rng);
            let big = LadderRep::upper(p, m.clone());
            let src = LadderRep::sum_all(p, &(0..picks.len()).map(|i| projective(Bar::Upper, i as i64 - 1, p)).collect::<Vec<_>>());
            let h = hom(&src, &big);
            let coeffs: Vec<Q> = (0..h.dim()).map(|i| Q::from_integer(BigInt::from((picks.iter().sum::<usize>() + i) as i64 % 3 - 1))).collect();
            let f = h.combination(&coeffs);
            let (sub, _) = image(&f, &src, &big);
            let (quo, _) = cokernel(&f, &src, &big);
            let d = |n: &LadderRep| lambda(n.ambient(), p).unwrap().total_dim();
            prop_assert_eq!(d(&big), d(&sub) + d(&quo));
        }
    }
}
