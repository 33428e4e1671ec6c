use super::*;
use crate::group::{enumerate_group, parse_word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn random_element(h: &Hecke<Rational>, rng: &mut ChaCha8Rng, terms: usize) -> HeckeElement<Rational> {
    let mut x = HeckeElement::zero();
    for _ in 0..terms {
        x.add_term(rng.gen_range(0..h.dim()), &rat(rng.gen_range(-3..=3)));
    }
    x
}

#[test]
fn relations_hold_symbolically() {
    for (r, n) in [(2, 2), (3, 2), (2, 3)] {
        let h = Hecke::generic(GroupParams::new(r, n).unwrap());
        for (name, ok) in h.relation_checks() {
            assert!(ok, "{name} fails at ({r},{n})");
        }
    }
}

#[test]
fn relations_hold_specialized() {
    for (r, n) in [(2, 4), (3, 3), (1, 4)] {
        let h = Hecke::default_semisimple(GroupParams::new(r, n).unwrap());
        assert!(h.relation_checks().iter().all(|(_, ok)| *ok));
    }
}

#[test]
fn jm_words_match_basis_elements() {
    for (r, n) in [(2, 3), (3, 3)] {
        let h = Hecke::generic(GroupParams::new(r, n).unwrap());
        for m in 1..=n {
            assert_eq!(h.jm_word_product(m), h.jm(m));
        }
        for m in 1..=n {
            for k in 1..=n {
                assert_eq!(h.mul(&h.jm(m), &h.jm(k)), h.mul(&h.jm(k), &h.jm(m)));
            }
        }
    }
}

#[test]
fn quadratic_and_cyclotomic_examples() {
    let h = Hecke::generic(GroupParams::new(2, 2).unwrap());
    let (t0, t1) = (h.generator(0), h.generator(1));
    let xi = h.xi.clone();
    let one = h.one_coeff();
    let expected = t1.scale(&xi.sub(&one)).add(&h.scalar(xi.clone()));
    assert_eq!(h.mul(&t1, &t1), expected);
    let (q1, q2) = (h.q[0].clone(), h.q[1].clone());
    let expected = t0.scale(&q1.add(&q2)).sub(&h.scalar(q1.mul(&q2)));
    assert_eq!(h.mul(&t0, &t0), expected);
    let a = h.word_product(&[1, 0, 1]);
    assert_eq!(h.mul(&a, &t0), h.mul(&t0, &a));
}

#[test]
fn jm_one_is_t0() {
    let h = Hecke::generic(GroupParams::new(3, 3).unwrap());
    assert_eq!(h.jm(1), h.generator(0));
    assert_eq!(h.word_product(&[0]), h.generator(0));
}

#[test]
fn mul_matches_word_products() {
    let h = Hecke::default_semisimple(GroupParams::new(2, 3).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let len = rng.gen_range(0..8);
        let w1: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
        let w2: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
        let mut both = w1.clone();
        both.extend(&w2);
        assert_eq!(h.mul(&h.word_product(&w1), &h.word_product(&w2)), h.word_product(&both));
    }
}

#[test]
fn associativity_on_random_triples() {
    let h = Hecke::default_semisimple(GroupParams::new(2, 3).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let x = random_element(&h, &mut rng, 3);
        let y = random_element(&h, &mut rng, 3);
        let z = random_element(&h, &mut rng, 3);
        assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
    }
}

#[test]
fn tau_is_a_trace() {
    let h = Hecke::default_semisimple(GroupParams::new(2, 3).unwrap());
    assert_eq!(h.tau(&h.one()), rat(1));
    assert_eq!(h.tau(&h.generator(1)), rat(0));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let x = random_element(&h, &mut rng, 4);
        let y = random_element(&h, &mut rng, 4);
        assert_eq!(h.tau(&h.mul(&x, &y)), h.tau(&h.mul(&y, &x)));
    }
}

#[test]
fn star_is_an_anti_involution() {
    let h = Hecke::default_semisimple(GroupParams::new(3, 2).unwrap());
    for g in 0..2 {
        assert_eq!(h.star(&h.generator(g)), h.generator(g));
    }
    assert_eq!(h.star(&h.jm(2)), h.jm(2));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let x = random_element(&h, &mut rng, 3);
        let y = random_element(&h, &mut rng, 3);
        assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&y), &h.star(&x)));
        assert_eq!(h.star(&h.star(&x)), x);
    }
}

#[test]
fn right_multiplication_table() {
    let h = Hecke::default_semisimple(GroupParams::new(2, 3).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let x = random_element(&h, &mut rng, 5);
        for g in 0..3 {
            assert_eq!(h.mul_by_generator_right(&x, g), h.mul(&x, &h.generator(g)));
        }
    }
}

#[test]
fn symmetric_jm_polynomials_are_central() {
    let h = Hecke::generic(GroupParams::new(2, 3).unwrap());
    for k in 1..=3 {
        let e = h.elementary_jm(k);
        for g in 0..3 {
            assert!(h.commutator(&e, &h.generator(g)).is_zero());
        }
    }
}

#[test]
fn t_basis_is_injective_on_the_group() {
    // Braid-equivalent words give equal products.
    let h = Hecke::generic(GroupParams::new(2, 2).unwrap());
    let p = h.params;
    let a = h.gen_word_product(&parse_word("t s1 t s1").unwrap());
    let b = h.gen_word_product(&parse_word("s1 t s1 t").unwrap());
    assert_eq!(a, b);
    let table = enumerate_group(p, 1000).unwrap();
    let tws: Vec<_> = table.elements.iter().map(|w| h.t_element(w)).collect();
    for (i, x) in tws.iter().enumerate() {
        for y in &tws[i + 1..] {
            assert_ne!(x, y);
        }
    }
}
