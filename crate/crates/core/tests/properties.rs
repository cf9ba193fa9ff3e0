use std::sync::LazyLock;

use parahoric::checks::{adjoint, admissible_oracle, gl, sp4, subword_lower_set};
use parahoric::{AffineRoot, CorootVec, Coweight, Family, RootDatum, Side, SphericalSubset, TieBreak};
use proptest::prelude::*;

static B3: LazyLock<RootDatum> = LazyLock::new(|| adjoint(Family::B, 3));
static A3: LazyLock<RootDatum> = LazyLock::new(|| adjoint(Family::A, 3));
static G2: LazyLock<RootDatum> = LazyLock::new(|| adjoint(Family::G, 2));
static C2: LazyLock<RootDatum> = LazyLock::new(|| adjoint(Family::C, 2));
static GL3: LazyLock<RootDatum> = LazyLock::new(|| gl(3));
static SP4: LazyLock<RootDatum> = LazyLock::new(sp4);

fn finite(i: usize) -> &'static RootDatum {
    [&*B3, &*A3, &*G2][i]
}

fn affine(i: usize) -> &'static RootDatum {
    [&*C2, &*G2, &*GL3, &*SP4][i]
}

fn finite_word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=rank, 0..14)
}

fn affine_word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=rank, 0..10)
}

fn finite_case() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, Vec<usize>)> {
    (0usize..3).prop_flat_map(|i| {
        let r = finite(i).rank();
        (Just(i), finite_word(r), finite_word(r), finite_word(r))
    })
}

fn affine_case() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, Vec<usize>)> {
    (0usize..4).prop_flat_map(|i| {
        let r = affine(i).rank();
        (Just(i), affine_word(r), affine_word(r), affine_word(r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(96) })]

    #[test]
    fn words_and_lengths((i, a, b, _) in finite_case()) {
        let d = finite(i);
        let x = d.from_word(&a);
        let n = d.length(&x);
        prop_assert!(n <= a.len());
        prop_assert_eq!(n % 2, a.len() % 2);
        let w = d.word(&x);
        prop_assert_eq!(w.len(), n);
        prop_assert_eq!(d.from_word(&w), x.clone());
        prop_assert_eq!(d.parse_word(&d.word_string(&x)).unwrap(), x.clone());
        let y = d.from_word(&b);
        let xy = d.compose(&x, &y);
        prop_assert!(d.length(&xy) <= n + d.length(&y));
        prop_assert_eq!(d.length(&d.inverse(&x)), n);
        prop_assert!(d.is_identity(&d.compose(&x, &d.inverse(&x))));
        for j in 1..=d.rank() {
            let up = d.length(&d.mul_simple_right(&x, j)) > n;
            prop_assert_eq!(up, !d.is_right_descent(&x, j));
        }
    }

    #[test]
    fn group_laws((i, a, b, c) in finite_case()) {
        let d = finite(i);
        let (x, y, z) = (d.from_word(&a), d.from_word(&b), d.from_word(&c));
        prop_assert_eq!(d.compose(&d.compose(&x, &y), &z), d.compose(&x, &d.compose(&y, &z)));
        let lam = Coweight((0..d.dim()).map(|k| k as i64 - 1).collect());
        let mu = Coweight(vec![1; d.dim()]);
        prop_assert_eq!(
            d.act_coweight(&x, &lam.add(&mu)),
            d.act_coweight(&x, &lam).add(&d.act_coweight(&x, &mu))
        );
        prop_assert_eq!(d.act_coweight(&d.compose(&x, &y), &lam), d.act_coweight(&x, &d.act_coweight(&y, &lam)));
        let dz = d.demazure(&d.demazure(&x, &y), &z);
        prop_assert_eq!(dz.clone(), d.demazure(&x, &d.demazure(&y, &z)));
        prop_assert!(d.bruhat_leq(&d.compose(&x, &y), &d.demazure(&x, &y)));
    }

    #[test]
    fn bruhat_matches_subwords((i, a, b, _) in finite_case()) {
        let d = finite(i);
        let (x, y) = (d.from_word(&a), d.from_word(&b));
        let word = d.word(&y);
        let mut below = vec![d.identity()];
        for &j in &word {
            let more: Vec<_> = below.iter().map(|u| d.mul_simple_right(u, j)).collect();
            below.extend(more);
        }
        prop_assert_eq!(d.bruhat_leq(&x, &y), below.contains(&x));
        let j = d.finite_subset(&[1]).unwrap();
        let m = d.coset_min(&y, j, Side::Right);
        prop_assert!(d.bruhat_leq(&m, &y));
        prop_assert!(!d.is_right_descent(&m, 1));
    }

    #[test]
    fn quantum_weights((i, a, b, c) in finite_case()) {
        let d = finite(i);
        let (x, y, z) = (d.from_word(&a), d.from_word(&b), d.from_word(&c));
        prop_assert!(d.wt(&x, &x).unwrap().0.iter().all(|&v| v == 0));
        let xz = d.wt(&x, &z).unwrap();
        let through = d.wt(&x, &y).unwrap().add(&d.wt(&y, &z).unwrap());
        prop_assert!(xz.leq(&through));
        prop_assert_eq!(d.wt_by_recursion(&x, &y).unwrap(), d.wt(&x, &y).unwrap());
        prop_assert_eq!(d.wt(&x, &y).unwrap().0.iter().all(|&v| v == 0), d.bruhat_leq(&x, &y));
    }

    #[test]
    fn greedy_z_gamma(i in 0usize..3, g in prop::collection::vec(0i64..4, 3)) {
        let d = finite(i);
        let gamma = CorootVec(g[..d.rank()].to_vec());
        let z = d.z_gamma(&gamma).unwrap();
        prop_assert_eq!(d.z_gamma_with(&gamma, TieBreak::LexMax).unwrap(), z.clone());
        let w0 = d.longest_element();
        let dual = d.act_coroot(&w0, &gamma);
        let dual = CorootVec(dual.0.iter().map(|v| -v).collect());
        let zd = d.z_gamma(&dual).unwrap();
        prop_assert_eq!(zd, d.compose(&d.compose(&w0, &d.inverse(&z)), &w0));
    }

    #[test]
    fn affine_words((i, a, b, _) in affine_case()) {
        let d = affine(i);
        let x = d.aff_from_word(&a);
        let n = d.aff_length(&x);
        prop_assert!(n <= a.len());
        prop_assert_eq!(n, d.affine_inversions(&x).len());
        let (w, tau) = d.aff_word(&x);
        prop_assert_eq!(w.len(), n);
        prop_assert_eq!(d.aff_length(&tau), 0);
        prop_assert_eq!(d.aff_compose(&d.aff_from_word(&w), &tau), x.clone());
        prop_assert_eq!(d.parse_affine(&d.aff_word_string(&x)).unwrap(), x.clone());
        let y = d.aff_from_word(&b);
        prop_assert!(d.aff_length(&d.aff_compose(&x, &y)) <= n + d.aff_length(&y));
        prop_assert_eq!(d.aff_length(&d.aff_inverse(&x)), n);
        for j in 0..=d.rank() {
            let up = d.aff_length(&d.aff_mul_simple_right(&x, j)) > n;
            prop_assert_eq!(up, !d.aff_is_right_descent(&x, j));
        }
    }

    #[test]
    fn affine_action((i, a, b, c) in affine_case(), root in 0usize..8, level in -3i64..4) {
        let d = affine(i);
        let (x, y, z) = (d.aff_from_word(&a), d.aff_from_word(&b), d.aff_from_word(&c));
        prop_assert_eq!(
            d.aff_compose(&d.aff_compose(&x, &y), &z),
            d.aff_compose(&x, &d.aff_compose(&y, &z))
        );
        let ar = AffineRoot { root: root % d.num_roots(), level };
        let lhs = d.act_affine(&d.aff_compose(&x, &y), ar).unwrap();
        let rhs = d.act_affine(&x, d.act_affine(&y, ar).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let below = subword_lower_set(d, &y);
        let x_in = below.contains(&x);
        prop_assert_eq!(d.aff_bruhat_leq(&x, &y), x_in);
    }

    #[test]
    fn affine_cosets((i, a, _, _) in affine_case(), bits in 0u32..8) {
        let d = affine(i);
        let x = d.aff_from_word(&a);
        let full = (1u32 << (d.rank() + 1)) - 1;
        let mut k = SphericalSubset::from_bits(bits & full);
        if k.bits() == full {
            k = SphericalSubset::from_bits(full & !1);
        }
        let lo = d.aff_coset_min(&x, k, Side::Right);
        let hi = d.aff_coset_max(&x, k, Side::Right);
        prop_assert!(d.is_min_right(&lo, k));
        prop_assert!(d.aff_bruhat_leq(&lo, &x));
        prop_assert!(d.aff_bruhat_leq(&x, &hi));
        let wk = d.aff_longest(k);
        prop_assert_eq!(d.aff_length(&hi), d.aff_length(&lo) + d.aff_length(&wk));
        prop_assert_eq!(d.aff_compose(&lo, &wk), hi);
    }
}

fn dominant_conjugate(d: &RootDatum, v: &[i64]) -> Coweight {
    let lam = Coweight(v[..d.dim()].to_vec());
    d.orbit(&lam).unwrap().into_iter().find(|m| d.is_dominant(m)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(12) })]

    #[test]
    fn admissible_matches_oracle(i in 0usize..4, seed in prop::collection::vec(-2i64..3, 3)) {
        let d = [&*C2, &*GL3, &*SP4, adjoint_a2()][i];
        let mu = dominant_conjugate(d, &seed);
        let adm = d.admissible_set(&mu).unwrap();
        let oracle = admissible_oracle(d, &mu).unwrap();
        prop_assert_eq!(adm.len(), oracle.len());
        prop_assert!(adm.iter().all(|x| oracle.contains(x)));
    }

    #[test]
    fn sp4_admissible_lower_closed(seed in prop::collection::vec(-2i64..3, 2)) {
        let d = &*SP4;
        let mu = dominant_conjugate(d, &seed);
        let adm = d.admissible_set(&mu).unwrap();
        for x in adm.iter() {
            for y in d.cocovers(x) {
                prop_assert!(adm.contains(&y));
            }
        }
    }
}

fn adjoint_a2() -> &'static RootDatum {
    static A2: LazyLock<RootDatum> = LazyLock::new(|| adjoint(Family::A, 2));
    &A2
}
