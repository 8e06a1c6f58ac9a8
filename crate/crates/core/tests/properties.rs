//! Randomized invariants over families, quotients, derivations and cochains.

use proptest::prelude::*;

use pointed_hopf::catalog::{build_braided, build_family_at, derived_constraints, lifted_families, FamilyId, Tag};
use pointed_hopf::charp::{ad_power, derivation_is_p_idempotent, jacobson_correction, pth_power_defect, DerivationSpec};
use pointed_hopf::cobar::{audit_d_squared, truncated_polynomial, FiniteCoalgebra, DEFAULT_CAP};
use pointed_hopf::hopf::HopfPresentation;
use pointed_hopf::ncalg::{Alphabet, NCPoly, Word};
use pointed_hopf::par::Parallelism;
use pointed_hopf::rewrite::RewriteSystem;
use pointed_hopf::scalars::{vanishing_locus_capped, Fp, DEFAULT_ENUM_CAP};

const PRIMES: [u32; 3] = [2, 3, 5];

/// A constraint-satisfying point of some lifted family, chosen by two seeds.
fn admissible_point(p: u32, fam: usize, pick: usize) -> Option<(FamilyId, Vec<u32>)> {
    let fams = lifted_families(p);
    let id = fams[fam % fams.len()];
    let space = id.param_space();
    let locus = vanishing_locus_capped(&derived_constraints(&id, Parallelism::Sequential).ok()?, &space, DEFAULT_ENUM_CAP, Parallelism::Sequential).ok()?;
    let pt = locus.points.iter().nth(pick % locus.len().max(1))?.clone();
    Some((id, pt))
}

/// `Σ c_i w_i` over the letters, then two-letter words, in normal form.
fn random_poly(h: &HopfPresentation<Fp>, coeffs: &[u32]) -> NCPoly<Fp> {
    let alph = h.rs.alphabet();
    let p = h.rs.one().p();
    let letters: Vec<_> = alph.letters().collect();
    let mut f = NCPoly::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        let a = letters[i % letters.len()];
        let b = letters[(i / letters.len()) % letters.len()];
        let w = if i < letters.len() { alph.single(a) } else { alph.word(&[a, b]) };
        f.add_term(w, Fp::new(c as i64, p));
    }
    h.rs.reduce(&f)
}

fn words(alph: &Alphabet, ls: &[u8]) -> Word {
    let n = alph.len() as u8;
    alph.word(&ls.iter().map(|l| l % n).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(pi in 0usize..3, a in 0i64..100, b in 1i64..100) {
        let p = PRIMES[pi];
        let (x, y) = (Fp::new(a, p), Fp::new(b, p));
        prop_assert_eq!(x + y - y, x);
        if !y.is_zero() {
            prop_assert_eq!(x * y * y.inv().unwrap(), x);
        }
        prop_assert_eq!(x.pow(p as u64), x);
    }

    #[test]
    fn word_order_is_multiplicative(a in prop::collection::vec(0u8..3, 0..5), b in prop::collection::vec(0u8..3, 0..5), c in prop::collection::vec(0u8..3, 0..4)) {
        let alph = Alphabet::new(&["g", "y", "x"], &["g"]).unwrap();
        let (u, v, w) = (words(&alph, &a), words(&alph, &b), words(&alph, &c));
        prop_assert_eq!(u.cmp(&v), u.concat(&w).cmp(&v.concat(&w)));
        prop_assert_eq!(u.cmp(&v), w.concat(&u).cmp(&w.concat(&v)));
    }

    #[test]
    fn admissible_points_have_dimension_p_cubed(pi in 0usize..2, fam in 0usize..64, pick in 0usize..1000) {
        let p = PRIMES[pi];
        if let Some((id, pt)) = admissible_point(p, fam, pick) {
            let h = build_family_at(&id, &pt).unwrap();
            prop_assert!(h.rs.is_confluent(Parallelism::Sequential));
            prop_assert_eq!(h.rs.enumerate_basis().unwrap().len(), (p as usize).pow(3));
            prop_assert!(h.audit().all_pass(), "{} {:?}", id, pt);
        }
    }

    #[test]
    fn reduction_is_linear_and_idempotent(fam in 0usize..64, pick in 0usize..1000, c1 in prop::collection::vec(0u32..3, 1..10), c2 in prop::collection::vec(0u32..3, 1..10)) {
        if let Some((id, pt)) = admissible_point(3, fam, pick) {
            let h = build_family_at(&id, &pt).unwrap();
            let (f, g) = (random_poly(&h, &c1), random_poly(&h, &c2));
            let fg = f.mul(&g);
            prop_assert_eq!(h.rs.reduce(&h.rs.reduce(&fg)), h.rs.reduce(&fg));
            prop_assert_eq!(h.rs.reduce(&f.add(&g)), h.rs.reduce(&f).add(&h.rs.reduce(&g)));
        }
    }

    #[test]
    fn jacobson_in_random_quotients(pi in 0usize..2, fam in 0usize..64, pick in 0usize..1000, c1 in prop::collection::vec(0u32..5, 1..6), c2 in prop::collection::vec(0u32..5, 1..6)) {
        let p = PRIMES[pi];
        if let Some((id, pt)) = admissible_point(p, fam, pick) {
            let h = build_family_at(&id, &pt).unwrap();
            let (x, y) = (random_poly(&h, &c1), random_poly(&h, &c2));
            prop_assert_eq!(jacobson_correction(&x, &y, p, Some(&h.rs)), pth_power_defect(&x, &y, p, Some(&h.rs)), "{} {:?}", id, pt);
        }
    }

    #[test]
    fn ad_power_is_bracket_with_pth_power(pi in 0usize..2, fam in 0usize..64, pick in 0usize..1000, c1 in prop::collection::vec(0u32..5, 1..6), c2 in prop::collection::vec(0u32..5, 1..6)) {
        let p = PRIMES[pi];
        if let Some((id, pt)) = admissible_point(p, fam, pick) {
            let h = build_family_at(&id, &pt).unwrap();
            let one = *h.rs.one();
            let (a, b) = (random_poly(&h, &c1), random_poly(&h, &c2));
            let bp = h.rs.reduce(&b.pow(p as usize, &one));
            prop_assert_eq!(h.rs.reduce(&a.commutator(&bp)), ad_power(&a, &b, p as usize, Some(&h.rs)));
        }
    }

    #[test]
    fn cyclic_derivations_are_p_idempotent(pi in 0usize..3, u in 0u32..5) {
        let p = PRIMES[pi];
        prop_assert!(derivation_is_p_idempotent(&DerivationSpec::cyclic(p, p, u % p).unwrap()));
        if p * p <= 25 {
            prop_assert!(derivation_is_p_idempotent(&DerivationSpec::cyclic(p, p * p, 1).unwrap()));
        }
    }

    #[test]
    fn two_generator_derivations_are_p_idempotent(pi in 0usize..3, tau in 0u32..5) {
        let p = PRIMES[pi];
        let tau = (tau % p) as i64;
        let spec = DerivationSpec::new(p, vec![p, p], vec![vec![(vec![1, 0], 1), (vec![2 % p, 0], -1)], vec![(vec![0, 1], tau), (vec![1, 1], -tau)]]).unwrap();
        prop_assert!(spec.well_defined());
        prop_assert!(derivation_is_p_idempotent(&spec));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn first_cohomology_is_primitive_space(fam in 0usize..64, pick in 0usize..1000) {
        if let Some((id, pt)) = admissible_point(2, fam, pick) {
            let h = build_family_at(&id, &pt).unwrap();
            let b = FiniteCoalgebra::from_hopf(&h, None).unwrap();
            prop_assert_eq!(b.cohomology_dim(1, DEFAULT_CAP).unwrap(), h.primitive_dim().unwrap(), "{} {:?}", id, pt);
            prop_assert_eq!(b.cohomology_dim(0, DEFAULT_CAP).unwrap(), 1);
            prop_assert!(audit_d_squared(&b.build_complex(2, DEFAULT_CAP).unwrap()));
        }
    }

    #[test]
    fn differential_squares_to_zero_on_random_cochains(pi in 0usize..3, coeffs in prop::collection::vec(0u32..5, 1..40)) {
        let p = PRIMES[pi];
        let b = truncated_polynomial(p).unwrap();
        let n = b.plus_dim();
        let v: Vec<Fp> = (0..n * n).map(|i| Fp::new(*coeffs.get(i % coeffs.len()).unwrap() as i64 * (i as i64 + 1), p)).collect();
        let c = b.plus_tensor(2, &v);
        let dd = b.differential(&b.differential(&c).unwrap()).unwrap();
        prop_assert!(b.coords(&dd).unwrap().iter().all(|x| x.is_zero()));
    }
}

#[test]
fn graded_pieces_sum_to_total() {
    for p in PRIMES {
        let b = truncated_polynomial(p).unwrap();
        for n in 0..=2 {
            let total = b.cohomology_dim(n, DEFAULT_CAP).unwrap();
            let sum: usize = match b.adams_range(n) {
                Some((lo, hi)) => (lo..=hi).map(|j| b.graded_cohomology_dim(n, j, DEFAULT_CAP).unwrap()).sum(),
                None => 0,
            };
            assert_eq!(sum, total, "p={} n={}", p, n);
        }
    }
    for eps in [0, 1] {
        let r = build_braided(&FamilyId::new(Tag::RC, 3, eps).unwrap()).unwrap();
        let b = FiniteCoalgebra::from_braided(&r, Some(&[("a", 1), ("b", 3)])).unwrap();
        for n in 1..=2 {
            let (lo, hi) = b.adams_range(n).unwrap();
            let sum: usize = (lo..=hi).map(|j| b.graded_cohomology_dim(n, j, DEFAULT_CAP).unwrap()).sum();
            assert_eq!(sum, b.cohomology_dim(n, DEFAULT_CAP).unwrap(), "eps={} n={}", eps, n);
        }
    }
}

#[test]
fn idempotence_needs_the_cyclic_hypotheses() {
    // On C_25 with δ(g) = g − g^6, δ^5(g) = g − g^26 = 0 since C(5,k) ≡ 0 for 0 < k < 5.
    let spec = DerivationSpec::cyclic(5, 25, 5).unwrap();
    assert!(!derivation_is_p_idempotent(&spec));
}

#[test]
fn parallel_map_preserves_order() {
    let xs: Vec<u64> = (0..1000).collect();
    let f = |x: &u64| x * x % 97;
    assert_eq!(Parallelism::Parallel.map(&xs, f), Parallelism::Sequential.map(&xs, f));
}

#[test]
fn non_confluent_systems_are_detected() {
    // The overlap y.x.x forces xy = y, so yx = 0 and the quotient is spanned by 1, x, y.
    let alph = Alphabet::new(&["y", "x"], &[]).unwrap();
    let rs = RewriteSystem::from_text(alph, Fp::one(3), &["x^2 = x", "y^2", "y.x = x.y - y"], &|_| None).unwrap();
    assert!(!rs.is_confluent(Parallelism::Sequential));
    let completed = rs.complete(8, Parallelism::Sequential).unwrap();
    assert!(completed.is_confluent(Parallelism::Sequential));
    assert_eq!(completed.enumerate_basis().unwrap().len(), 3);
}
