use cyclohecke::cocenter::commutator_subspace;
use cyclohecke::group::{
    bm_normal_form, check_certificate, conjugacy_invariant, dc_normal_form, length, reduce_to_minimal, GroupElement,
    GroupParams,
};
use cyclohecke::hecke::{Hecke, HeckeElement};
use cyclohecke::rings::{Cyclotomic, Laurent, RatFunc, Rational, Ring};
use cyclohecke::tableaux::enumerate_multipartitions;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;

fn element(max_r: u32, max_n: usize) -> impl Strategy<Value = GroupElement> {
    (1..=max_r, 1..=max_n).prop_flat_map(|(r, n)| {
        (prop::collection::vec(0..r, n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(move |(c, p)| GroupElement::new(r, c, p).unwrap())
    })
}

fn pair(r: u32, n: usize) -> impl Strategy<Value = (GroupElement, GroupElement)> {
    let one = move || {
        (prop::collection::vec(0..r, n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(move |(c, p)| GroupElement::new(r, c, p).unwrap())
    };
    (one(), one())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !Ring::is_zero(q))
}

fn laurent(nvars: usize) -> impl Strategy<Value = Laurent> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, nvars), -5i64..=5), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Laurent::zero(nvars), |acc, (e, c)| {
            acc.add(&Laurent::monomial(nvars, e, BigInt::from(c)))
        })
    })
}

fn cyclotomic(e: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), e as usize).prop_map(move |cs| {
        let z = Cyclotomic::zeta(e);
        cs.into_iter()
            .enumerate()
            .fold(z.from_rational(Rational::from_integer(BigInt::from(0))), |acc, (k, c)| acc.add(&z.zeta_pow(k as i64).mul(&z.from_rational(c))))
    })
}

fn h23() -> &'static Hecke<Rational> {
    static H: OnceLock<Hecke<Rational>> = OnceLock::new();
    H.get_or_init(|| Hecke::default_semisimple(GroupParams::new(2, 3).unwrap()))
}

fn hecke_element(dim: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..dim, -4i64..=4), 1..6)
}

fn build<R: Ring>(h: &Hecke<R>, terms: &[(usize, i64)]) -> HeckeElement<R> {
    let mut x = h.zero();
    for &(j, c) in terms {
        x.add_scaled(&h.basis(j), &h.one_coeff().int_like(c));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_two_sided(w in element(4, 5)) {
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert!(w.inverse().mul(&w).is_identity());
        if w.r <= 2 {
            prop_assert_eq!(length(&w), length(&w.inverse()));
        }
    }

    #[test]
    fn bm_word_is_reduced_and_evaluates(w in element(4, 5)) {
        let word = bm_normal_form(&w).word();
        prop_assert_eq!(word.len(), length(&w));
        prop_assert_eq!(w.params().eval_word(&word).unwrap(), w);
    }

    #[test]
    fn double_coset_form_reconstructs(w in element(4, 5)) {
        prop_assume!(w.n() >= 2);
        prop_assert_eq!(dc_normal_form(&w).unwrap().reconstruct(), w);
    }

    #[test]
    fn length_is_subadditive((x, y) in pair(3, 4)) {
        prop_assert!(length(&x.mul(&y)) <= length(&x) + length(&y));
        prop_assert_eq!(x.mul(&y).inverse(), y.inverse().mul(&x.inverse()));
    }

    #[test]
    fn conjugacy_invariant_is_a_class_function((x, g) in pair(3, 5)) {
        prop_assert_eq!(conjugacy_invariant(&x.conjugate_by(&g)), conjugacy_invariant(&x));
    }

    #[test]
    fn reduction_reaches_a_minimal_conjugate(w in element(3, 4)) {
        let c = reduce_to_minimal(&w).unwrap();
        prop_assert!(check_certificate(&c).is_ok());
        prop_assert!(length(&c.beta_element) <= length(&w));
        prop_assert_eq!(conjugacy_invariant(&c.beta_element), conjugacy_invariant(&w));
    }

    #[test]
    fn laurent_evaluation_is_a_ring_map(
        a in laurent(2), b in laurent(2), x in nonzero_rational(), y in nonzero_rational()
    ) {
        let v = [x, y];
        let (ea, eb) = (a.evaluate(&v).unwrap(), b.evaluate(&v).unwrap());
        prop_assert_eq!(a.mul(&b).evaluate(&v).unwrap(), &ea * &eb);
        prop_assert_eq!(a.sub(&b).evaluate(&v).unwrap(), ea - eb);
    }

    #[test]
    fn rational_functions_divide_exactly(a in laurent(2), b in laurent(2)) {
        prop_assume!(!b.is_zero());
        let (fa, fb) = (RatFunc::from_laurent(a), RatFunc::from_laurent(b));
        let q = fa.try_div(&fb).unwrap();
        prop_assert_eq!(q.mul(&fb), fa);
    }

    #[test]
    fn cyclotomic_inverse(x in (2u32..=7).prop_flat_map(cyclotomic)) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.try_inv().unwrap()).is_one());
    }

    #[test]
    fn hecke_trace_is_symmetric(a in hecke_element(48), b in hecke_element(48)) {
        let h = h23();
        let (x, y) = (build(h, &a), build(h, &b));
        prop_assert_eq!(h.tau(&h.mul(&x, &y)), h.tau(&h.mul(&y, &x)));
    }

    #[test]
    fn star_is_an_anti_involution(a in hecke_element(48), b in hecke_element(48)) {
        let h = h23();
        let (x, y) = (build(h, &a), build(h, &b));
        prop_assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&y), &h.star(&x)));
        prop_assert_eq!(h.star(&h.star(&x)), x);
    }

    #[test]
    fn length_additive_products((x, y) in pair(2, 3)) {
        prop_assume!(length(&x.mul(&y)) == length(&x) + length(&y));
        let h = h23();
        prop_assert_eq!(h.mul(&h.t_element(&x), &h.t_element(&y)), h.t_element(&x.mul(&y)));
    }

    #[test]
    fn specialization_commutes_with_products(
        a in hecke_element(8), b in hecke_element(8), xi in 2i64..=7, q1 in -5i64..=5, q2 in -5i64..=5
    ) {
        let p = GroupParams::new(2, 2).unwrap();
        let generic = Hecke::<Laurent>::generic(p);
        prop_assume!(q1 != 0 && q2 != 0);
        let special = Hecke::rational(p, xi, &[q1, q2]).unwrap();
        let values: Vec<Rational> = [xi, q1, q2].iter().map(|&v| Rational::from_integer(v.into())).collect();
        let prod = generic.mul(&build(&generic, &a), &build(&generic, &b));
        let lhs = prod.map(|c| c.evaluate(&values).unwrap());
        let rhs = special.mul(&build(&special, &a), &build(&special, &b));
        prop_assert_eq!(lhs.to_dense(8, &Rational::from_integer(0.into())), rhs.to_dense(8, &Rational::from_integer(0.into())));
    }
}

#[test]
fn tableau_counts_sum_to_dimension() {
    for r in 1..=3usize {
        for n in 1..=4usize {
            let total: usize = enumerate_multipartitions(r, n)
                .iter()
                .map(|l| l.std_tableaux().len().pow(2))
                .sum();
            let order = GroupParams::new(r as u32, n).unwrap().order();
            assert_eq!(total as u128, order, "r={r} n={n}");
        }
    }
}

#[test]
fn conjugation_is_an_involution_on_multipartitions() {
    for l in enumerate_multipartitions(3, 4) {
        assert_eq!(l.conjugate().conjugate(), l);
    }
}

#[test]
fn trace_vanishes_on_commutators() {
    for (r, n) in [(1, 3), (2, 2), (2, 3)] {
        let h = Hecke::default_semisimple(GroupParams::new(r, n).unwrap());
        let comm = commutator_subspace(&h).unwrap();
        assert!(comm.dim() > 0);
        for x in &comm.basis {
            assert!(Ring::is_zero(&h.tau(x)));
        }
    }
}
