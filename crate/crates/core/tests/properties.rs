mod common;

use std::collections::BTreeSet;

use delzant::characters::{decompose, expand, verify_product_orbits, weyl_character, GCharacter};
use delzant::counting::{count_points, Region};
use delzant::desingularize::{facet_normals, shift_desingularization, Shift};
use delzant::lattice::{frac, q, RationalVector};
use delzant::polyhedra::{ExcessDecomposition, FaceLattice};
use delzant::random;
use delzant::roots::{RootSystem, RootType};
use delzant::subdivision::{dual_subdivision, euler_check};
use proptest::prelude::*;

fn rank2() -> impl Strategy<Value = RootType> {
    prop_oneof![Just(RootType::A2), Just(RootType::B2), Just(RootType::G2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn excess_is_upper_semicontinuous(seed in any::<u64>(), dim in 1usize..=3) {
        let p = random::lattice_polytope(&mut random::rng(seed), dim).unwrap();
        let l = FaceLattice::new(&p).unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                if l.le(a, b) {
                    prop_assert!(l.excess(a) >= l.excess(b));
                }
            }
        }
    }

    #[test]
    fn auto_shift_keeps_normals(seed in any::<u64>()) {
        let p = random::lattice_polytope(&mut random::rng(seed), 3).unwrap();
        let s = shift_desingularization(&p, &Shift::Auto).unwrap();
        let l = FaceLattice::new(&s).unwrap();
        prop_assert!(ExcessDecomposition::new(&l).is_constant());
        let originals: BTreeSet<_> = p.labels().iter().map(|l| l.v.clone()).collect();
        for n in facet_normals(&s).unwrap() {
            prop_assert!(originals.contains(&n));
        }
    }

    #[test]
    fn dilation_commutes_with_counting(seed in any::<u64>(), dim in 1usize..=3, m in 0i64..=4) {
        let p = random::lattice_polytope(&mut random::rng(seed), dim).unwrap();
        let direct = count_points(&p, m, Region::Closed).unwrap();
        let dilated = count_points(&p.dilate(&q(m)), 1, Region::Closed).unwrap();
        prop_assert_eq!(direct, dilated);
        let brute = common::brute_points(&p, m, 3, false).len() as u64;
        prop_assert_eq!(direct, brute);
    }

    #[test]
    fn euler_identity_for_dual_subdivisions(
        ty in rank2(),
        a in 1i64..=9, b in 2i64..=9, c in 1i64..=9, d in 2i64..=9,
        seed in any::<u64>(),
    ) {
        let r = RootSystem::new(ty);
        let s = dual_subdivision(&r, &RationalVector(vec![frac(a, b), frac(c, d)])).unwrap().subdivision().unwrap();
        let report = euler_check(&s, 40, seed);
        prop_assert!(report.holds(), "{:?}", report.failures);
    }

    #[test]
    fn decompose_inverts_expand(
        ty in rank2(),
        terms in prop::collection::vec(((0i64..=3, 0i64..=3), -3i64..=3), 0..=5),
    ) {
        let r = RootSystem::new(ty);
        let mut g = GCharacter::new();
        for ((x, y), c) in terms {
            g.add_term(vec![x, y], c).unwrap();
        }
        prop_assert_eq!(decompose(&r, &expand(&r, &g).unwrap()).unwrap(), g);
    }

    #[test]
    fn induction_is_alternating(ty in rank2(), x in -6i64..=6, y in -6i64..=6) {
        let r = RootSystem::new(ty);
        let mu = vec![x, y];
        let base = r.induce(&mu);
        for w in &r.elements {
            let moved = r.affine_action(w, &mu);
            let expected = base.clone().map(|(s, nu)| (s * w.sign(), nu));
            prop_assert_eq!(r.induce(&moved), expected);
        }
    }

    #[test]
    fn affine_action_is_an_action(ty in rank2(), x in -6i64..=6, y in -6i64..=6) {
        let r = RootSystem::new(ty);
        let mu = vec![x, y];
        for i in 0..r.order() {
            for j in 0..r.order() {
                let ij = r.compose(i, j);
                let lhs = r.affine_action(&r.elements[i], &r.affine_action(&r.elements[j], &mu));
                prop_assert_eq!(lhs, r.affine_action(&r.elements[ij], &mu));
            }
        }
    }

    #[test]
    fn characters_match_dimension_and_are_invariant(ty in rank2(), x in 0i64..=4, y in 0i64..=4) {
        let r = RootSystem::new(ty);
        let chi = weyl_character(&r, &[x, y]).unwrap();
        prop_assert_eq!(q(chi.total()), r.weyl_dimension(&[x, y]));
        for w in &r.elements {
            for (e, c) in chi.iter() {
                prop_assert_eq!(chi.coeff(&w.apply(e)), *c);
            }
        }
    }

    #[test]
    fn product_orbits_are_multiplicity_free(l in 0i64..=12, n in 0i64..=12) {
        prop_assert!(verify_product_orbits(l, n).unwrap().passed());
    }
}
