use pbw_core::assoc::{
    b_p_oracle, ch_log, e_inverse, lie_project, straighten, AssocElement, SymElement, SymMonomial,
};
use pbw_core::bipart::{b_p_formula, b_p_formula_sym, special_bipartitions};
use pbw_core::freelie::{lyndon_words, Alphabet, Generator};
use pbw_core::Error;

#[test]
fn every_multilinear_ch_coefficient_is_primitive() {
    for n in 1..5u32 {
        for m in 1..=(5 - n) {
            let alphabet = Alphabet::new(n, m);
            let z = ch_log(alphabet, n + m).unwrap();
            for (tag, coeff) in z.iter() {
                lie_project(coeff).unwrap_or_else(|e| panic!("tag {tag:?}: {e}"));
            }
        }
    }
}

#[test]
fn ch_log_rejects_a_short_cap() {
    assert!(matches!(
        ch_log(Alphabet::new(2, 2), 3),
        Err(Error::CapTooSmall { .. })
    ));
}

#[test]
fn e_inverse_respects_the_filtration() {
    // A word of k letters maps into S^{<=k}, with top part the commutative
    // product of its letters.
    let gens = Alphabet::new(2, 1).generators();
    let letters: Vec<_> = (1..=2).flat_map(|d| lyndon_words(&gens, d)).collect();
    for a in &letters {
        for b in &letters {
            for c in &letters {
                let word = pbw_core::assoc::AssocWord(vec![a.clone(), b.clone(), c.clone()]);
                let s = e_inverse(&AssocElement::word(word));
                assert!(s.max_degree().unwrap_or(0) <= 3);
                let top =
                    SymElement::monomial(SymMonomial::new(vec![a.clone(), b.clone(), c.clone()]));
                assert_eq!(s.component(3), top);
            }
        }
    }
}

#[test]
fn straightening_is_idempotent() {
    let u = &AssocElement::generator_word(&[Generator::y(1), Generator::x(2), Generator::x(1)])
        - &AssocElement::generator_word(&[Generator::x(1), Generator::y(1)]);
    let s = straighten(&u);
    assert_eq!(straighten(&s), s);
    assert!(s.terms().all(|(w, _)| w.is_sorted()));
}

#[test]
fn b_p_is_homogeneous_on_repeated_and_bracket_letters() {
    let x: SymElement = "x1·x1·[x1,y1]".parse().unwrap();
    let y: SymElement = "y1·y1".parse().unwrap();
    for p in 0..=5 {
        let b = b_p_oracle(&x, &y, p);
        assert!(b.is_homogeneous(5 - p), "p={p}: {b}");
    }
    assert!(b_p_oracle(&x, &y, 6).is_zero());
}

#[test]
fn formula_extends_multilinearly() {
    let cases = [("x1·x1", "y1"), ("x1·[x1,y1]", "y1·x2"), ("x1", "y1·y1·y1")];
    for (a, b) in cases {
        let x: SymElement = a.parse().unwrap();
        let y: SymElement = b.parse().unwrap();
        for p in 0..4 {
            assert_eq!(
                b_p_formula_sym(&x, &y, p),
                b_p_oracle(&x, &y, p),
                "{a} {b} p={p}"
            );
        }
    }
}

#[test]
fn bipartition_counts() {
    assert_eq!(special_bipartitions(1, 1, 2).len(), 1);
    assert_eq!(special_bipartitions(1, 1, 1).len(), 1);
    assert_eq!(special_bipartitions(2, 1, 2).len(), 2);
    for n in 1..4 {
        for m in 1..4 {
            assert_eq!(special_bipartitions(n, m, (n + m) as usize).len(), 1);
            for size in 1..=(n + m) as usize {
                for b in special_bipartitions(n, m, size) {
                    assert!(b.is_special() && b.is_bipartition_of(n, m));
                    assert_eq!(b.len(), size);
                }
            }
        }
    }
}

#[test]
fn formula_terms_are_multilinear() {
    for p in 0..5 {
        for (mono, _) in b_p_formula(3, 2, p).terms() {
            let mut gens: Vec<Generator> = mono
                .factors()
                .iter()
                .flat_map(|w| w.letters().to_vec())
                .collect();
            gens.sort();
            assert_eq!(gens, Alphabet::new(3, 2).generators(), "p={p}");
            assert_eq!(mono.degree(), 5 - p);
        }
    }
}
