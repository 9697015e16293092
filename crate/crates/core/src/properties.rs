//! Seeded randomized checks of the algebraic identities the engine relies on.
//!
//! Every check draws its samples from a ChaCha stream derived from one seed,
//! so a report is reproducible from `(seed, samples)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    right_nested_bracket, star, super_bracket, AlgebraElement, GeneratorSet, Word,
};
use crate::forms::{form_monomials, FormElement, FormMonomial, PhiMap};
use crate::lcs::{compute_lcs, exhaustion_failures, DEFAULT_BUDGET};
use crate::linalg::{rat, ratio, Rational};

pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub seed: u64,
    pub samples: usize,
    /// Rendered counterexamples (at most a handful are kept).
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

fn run<F>(name: &str, seed: u64, samples: usize, mut sample: F) -> PropertyReport
where
    F: FnMut(&mut ChaCha8Rng) -> Option<String>,
{
    // each check gets its own stream so adding a check does not shift the others
    let mut tag = 0u64;
    for b in name.bytes() {
        tag = tag.wrapping_mul(31).wrapping_add(b as u64);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ tag);
    let mut failures = Vec::new();
    let mut failure_count = 0;
    for _ in 0..samples {
        if let Some(f) = sample(&mut rng) {
            failure_count += 1;
            if failures.len() < 5 {
                failures.push(f);
            }
        }
    }
    PropertyReport {
        name: name.into(),
        seed,
        samples,
        failures,
        failure_count,
    }
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-3..=3);
        if num != 0 {
            return ratio(num, rng.gen_range(1..=2));
        }
    }
}

fn random_gens(rng: &mut ChaCha8Rng) -> GeneratorSet {
    let choices = [(1, 1), (2, 1), (1, 2), (0, 2), (2, 0), (2, 2)];
    let (m, n) = *choices.choose(rng).expect("nonempty");
    GeneratorSet::new(m, n).expect("nonempty generator set")
}

fn random_word(rng: &mut ChaCha8Rng, gens: &GeneratorSet, len: usize) -> Word {
    Word(
        (0..len)
            .map(|_| rng.gen_range(0..gens.len()) as u8)
            .collect(),
    )
}

/// A few rearrangements of one random word, with random coefficients: a
/// multidegree-homogeneous element.
fn random_element(rng: &mut ChaCha8Rng, gens: &GeneratorSet, max_len: usize) -> AlgebraElement {
    let len = rng.gen_range(1..=max_len);
    let base = random_word(rng, gens, len);
    let mut acc = AlgebraElement::zero(*gens);
    for _ in 0..rng.gen_range(1..=3) {
        let mut letters = base.0.clone();
        letters.shuffle(rng);
        acc = &acc + &AlgebraElement::monomial(*gens, Word(letters), random_coefficient(rng));
    }
    acc
}

fn random_even_element(
    rng: &mut ChaCha8Rng,
    gens: &GeneratorSet,
    max_len: usize,
) -> AlgebraElement {
    loop {
        let a = random_element(rng, gens, max_len);
        if a.parity() == Some(0) {
            return a;
        }
    }
}

fn sign(odd: bool) -> Rational {
    if odd {
        rat(-1)
    } else {
        rat(1)
    }
}

fn parity(a: &AlgebraElement) -> u8 {
    a.parity().unwrap_or(0)
}

/// `[a, b] = -(-1)^{|a||b|} [b, a]`.
pub fn check_skew_symmetry(seed: u64, samples: usize) -> PropertyReport {
    run("super skew-symmetry", seed, samples, |rng| {
        let gens = random_gens(rng);
        let a = random_element(rng, &gens, 3);
        let b = random_element(rng, &gens, 3);
        let lhs = super_bracket(&a, &b).expect("homogeneous");
        let rhs = super_bracket(&b, &a)
            .expect("homogeneous")
            .scale(&-sign(parity(&a) & parity(&b) == 1));
        (lhs != rhs).then(|| format!("a = {a}, b = {b}"))
    })
}

/// `[a, [b, c]] = [[a, b], c] + (-1)^{|a||b|} [b, [a, c]]`.
pub fn check_jacobi(seed: u64, samples: usize) -> PropertyReport {
    run("super Jacobi", seed, samples, |rng| {
        let gens = random_gens(rng);
        let a = random_element(rng, &gens, 2);
        let b = random_element(rng, &gens, 2);
        let c = random_element(rng, &gens, 2);
        let br = |x: &AlgebraElement, y: &AlgebraElement| super_bracket(x, y).expect("homogeneous");
        let lhs = br(&a, &br(&b, &c));
        let rhs =
            &br(&br(&a, &b), &c) + &br(&b, &br(&a, &c)).scale(&sign(parity(&a) & parity(&b) == 1));
        (lhs != rhs).then(|| format!("a = {a}, b = {b}, c = {c}"))
    })
}

fn permutations3() -> [([usize; 3], i64); 6] {
    [
        ([0, 1, 2], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ]
}

/// `Alt_G` applied to a function of `(x, y, z, u, v)`, with
/// `G = Sym{x,y,z} × Sym{u,v}`.
fn alternate<F>(vals: &[AlgebraElement; 5], f: F) -> AlgebraElement
where
    F: Fn(
        &AlgebraElement,
        &AlgebraElement,
        &AlgebraElement,
        &AlgebraElement,
        &AlgebraElement,
    ) -> AlgebraElement,
{
    let mut acc = AlgebraElement::zero(vals[0].gens());
    for (s, sgn_s) in permutations3() {
        for (t, sgn_t) in [([3, 4], 1), ([4, 3], -1)] {
            let term = f(
                &vals[s[0]],
                &vals[s[1]],
                &vals[s[2]],
                &vals[t[0]],
                &vals[t[1]],
            );
            acc = &acc + &term.scale(&rat(sgn_s * sgn_t));
        }
    }
    acc
}

/// `Alt_G [x ⋆ [y, z, u], v] = Alt_G [u, x, y, z ⋆ v]` for even `x, y, z, u, v`.
/// Half the samples use distinct single generators of `A_5`, the rest
/// random even elements of small superalgebras.
pub fn check_alt_g(seed: u64, samples: usize) -> PropertyReport {
    run("Alt_G identity", seed, samples, |rng| {
        let vals: [AlgebraElement; 5] = if rng.gen_bool(0.5) {
            let gens = GeneratorSet::new(rng.gen_range(5..=6), 0).expect("nonempty");
            let mut letters: Vec<u8> = (0..gens.len() as u8).collect();
            letters.shuffle(rng);
            std::array::from_fn(|i| gens.generator(letters[i]))
        } else {
            let gens = random_gens(rng);
            std::array::from_fn(|_| random_even_element(rng, &gens, 2))
        };
        let nb = |items: &[AlgebraElement]| right_nested_bracket(items).expect("homogeneous");
        let lhs = alternate(&vals, |x, y, z, u, v| {
            nb(&[star(x, &nb(&[y.clone(), z.clone(), u.clone()])), v.clone()])
        });
        let rhs = alternate(&vals, |x, y, z, u, v| {
            nb(&[u.clone(), x.clone(), y.clone(), star(z, v)])
        });
        (lhs != rhs).then(|| format!("values {vals:?}"))
    })
}

fn random_form_monomial(rng: &mut ChaCha8Rng, gens: &GeneratorSet) -> FormMonomial {
    let mut m = FormMonomial::one(gens);
    for e in m.x_exps.iter_mut() {
        *e = rng.gen_range(0..=2);
    }
    for e in m.dy_exps.iter_mut() {
        *e = rng.gen_range(0..=2);
    }
    m.y_set = rng.gen_range(0..(1u64 << gens.odd()));
    m.dx_set = rng.gen_range(0..(1u64 << gens.even()));
    m
}

fn mono(gens: &GeneratorSet, m: FormMonomial) -> FormElement {
    FormElement::monomial(*gens, m, rat(1))
}

/// A random combination of monomials sharing one multidegree.
fn random_form(rng: &mut ChaCha8Rng, gens: &GeneratorSet) -> FormElement {
    let degree = random_form_monomial(rng, gens).degree();
    let all = form_monomials(gens, None, &degree);
    let mut acc = FormElement::zero(*gens);
    for _ in 0..rng.gen_range(1..=3) {
        let m = all.choose(rng).expect("nonempty basis").clone();
        acc = &acc + &FormElement::monomial(*gens, m, random_coefficient(rng));
    }
    acc
}

pub fn check_d_squared(seed: u64, samples: usize) -> PropertyReport {
    run("d∘d = 0", seed, samples, |rng| {
        let gens = random_gens(rng);
        let a = mono(&gens, random_form_monomial(rng, &gens));
        (!a.d().d().is_zero()).then(|| format!("a = {a}"))
    })
}

/// `d(α∧β) = dα∧β + (-1)^{κ(α)} α∧dβ`.
pub fn check_leibniz(seed: u64, samples: usize) -> PropertyReport {
    run("graded Leibniz", seed, samples, |rng| {
        let gens = random_gens(rng);
        let ma = random_form_monomial(rng, &gens);
        let kappa = ma.kappa();
        let a = mono(&gens, ma);
        let b = mono(&gens, random_form_monomial(rng, &gens));
        let lhs = a.wedge(&b).d();
        let rhs = &a.d().wedge(&b) + &a.wedge(&b.d()).scale(&sign(kappa == 1));
        (lhs != rhs).then(|| format!("a = {a}, b = {b}"))
    })
}

/// `α∧β = (-1)^{κ(α)κ(β)} β∧α`.
pub fn check_koszul_commutativity(seed: u64, samples: usize) -> PropertyReport {
    run("Koszul commutativity", seed, samples, |rng| {
        let gens = random_gens(rng);
        let ma = random_form_monomial(rng, &gens);
        let mb = random_form_monomial(rng, &gens);
        let s = sign(ma.kappa() & mb.kappa() == 1);
        let (a, b) = (mono(&gens, ma), mono(&gens, mb));
        (a.wedge(&b) != b.wedge(&a).scale(&s)).then(|| format!("a = {a}, b = {b}"))
    })
}

pub fn check_fedosov_associativity(seed: u64, samples: usize) -> PropertyReport {
    run("Fedosov associativity", seed, samples, |rng| {
        let gens = random_gens(rng);
        let a = random_form(rng, &gens);
        let b = random_form(rng, &gens);
        let c = random_form(rng, &gens);
        let lhs = a.fedosov(&b).fedosov(&c);
        let rhs = a.fedosov(&b.fedosov(&c));
        (lhs != rhs).then(|| format!("a = {a}, b = {b}, c = {c}"))
    })
}

/// `φ(ab) = φ(a) ∗ φ(b)` on random words.
pub fn check_phi_multiplicative(seed: u64, samples: usize) -> PropertyReport {
    run("phi multiplicativity", seed, samples, |rng| {
        let gens = random_gens(rng);
        let mut phi = PhiMap::new(gens);
        let (la, lb) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let wa = random_word(rng, &gens, la);
        let wb = random_word(rng, &gens, lb);
        let lhs = phi.word(&wa.concat(&wb));
        let rhs = phi.word(&wa).fedosov(&phi.word(&wb));
        (lhs != rhs).then(|| format!("a = {}, b = {}", wa.render(&gens), wb.render(&gens)))
    })
}

/// `Σ_k dim B_k[d] = dim A[d]`; each sample is one random component of a
/// random small algebra.
pub fn check_exhaustion(seed: u64, samples: usize) -> PropertyReport {
    let configs = [
        (1usize, 0usize, 7usize),
        (2, 0, 6),
        (0, 1, 7),
        (0, 2, 6),
        (1, 1, 6),
        (3, 0, 5),
        (2, 1, 5),
    ];
    let mut tables = Vec::new();
    for &(m, n, d) in &configs {
        let gens = GeneratorSet::new(m, n).expect("nonempty");
        let lie = compute_lcs(gens, d, d + 1, DEFAULT_BUDGET).expect("within budget");
        let bad = exhaustion_failures(&lie).expect("depth covers every degree");
        tables.push((gens, d, bad));
    }
    run("filtration exhaustion", seed, samples, |rng| {
        let (gens, d, bad) = tables.choose(rng).expect("nonempty");
        let degrees = gens.degrees_up_to(*d);
        let deg = degrees.choose(rng).expect("nonempty");
        bad.contains(deg)
            .then(|| format!("({}|{}) at {deg}", gens.even(), gens.odd()))
    })
}

/// All property checks with the same seed and sample count.
pub fn run_all(seed: u64, samples: usize) -> Vec<PropertyReport> {
    vec![
        check_skew_symmetry(seed, samples),
        check_jacobi(seed, samples),
        check_alt_g(seed, samples),
        check_d_squared(seed, samples),
        check_leibniz(seed, samples),
        check_koszul_commutativity(seed, samples),
        check_fedosov_associativity(seed, samples),
        check_phi_multiplicative(seed, samples),
        check_exhaustion(seed, samples),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_properties_hold() {
        for r in run_all(7, 60) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn reports_are_reproducible() {
        assert_eq!(
            check_fedosov_associativity(3, 20),
            check_fedosov_associativity(3, 20)
        );
    }

    #[test]
    fn broken_identity_is_caught() {
        // the plain commutator violates the super skew rule on odd elements
        let r = run("control", 1, 50, |rng| {
            let gens = GeneratorSet::new(0, 2).unwrap();
            let a = random_element(rng, &gens, 1);
            let b = random_element(rng, &gens, 1);
            let plain = |x: &AlgebraElement, y: &AlgebraElement| &(x * y) - &(y * x);
            (plain(&a, &b) != plain(&b, &a)).then(String::new)
        });
        assert!(!r.passed());
    }
}
