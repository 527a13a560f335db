//! Fields and codes used throughout the tests, the acceptance suite and the CLI demos.

use crate::error::Result;
use crate::gf::{Fe, FieldSpec, GaloisField};
use crate::ring4::{RElem, RingR};
use crate::skewpoly::{mixed_generator_assemble, SkewPoly};
use crate::codes::SkewCode;

/// `F_9 = F_3[a]`, `a² + 1 = 0`, `θ(x) = x³`.
pub fn f9() -> GaloisField {
    GaloisField::new(FieldSpec::new(3, 2, vec![1, 0, 1], 1)).expect("valid field")
}

/// `F_25 = F_5[a]`, `a² + a + 1 = 0`, `θ(x) = x⁵`.
pub fn f25() -> GaloisField {
    GaloisField::new(FieldSpec::new(5, 2, vec![1, 1, 1], 1)).expect("valid field")
}

/// `F_27 = F_3[a]`, `a³ + 2a + 2 = 0`, `θ(x) = x³` of order 3.
pub fn f27() -> GaloisField {
    GaloisField::new(FieldSpec::new(3, 3, vec![2, 2, 0, 1], 1)).expect("valid field")
}

/// `F_49 = F_7[a]`, `a² - a + 3 = 0`, `θ(x) = x⁷`.
pub fn f49() -> GaloisField {
    GaloisField::new(FieldSpec::new(7, 2, vec![3, 6, 1], 1)).expect("valid field")
}

fn el(field: &GaloisField, digits: &[u64]) -> Fe {
    field.from_digits(digits).expect("digits below p")
}

/// Skew cyclic code of length 4 over `F_25`, every component generated by `x + a + 1`.
pub fn example_f25() -> Result<SkewCode> {
    let f = f25();
    let g = SkewPoly::new(vec![el(&f, &[1, 1]), f.from_int(1)]);
    let one = RingR::new(f.clone()).from_ints(1, 0, 0, 0);
    SkewCode::build(f, 4, one, [g.clone(), g.clone(), g.clone(), g])
}

/// The two component generators of the length-6 skew cyclic code over `F_9`.
pub fn example_f9_generators() -> (SkewPoly<Fe>, SkewPoly<Fe>) {
    let f = f9();
    let (z, one, two) = (Fe::default(), f.from_int(1), f.from_int(2));
    let a = f.root();
    let f1 = SkewPoly::new(vec![two, a, z, el(&f, &[0, 2]), one]);
    let f4 = SkewPoly::new(vec![two, one, el(&f, &[1, 2]), one]);
    (f1, f4)
}

/// Skew cyclic code of length 6 over `F_9` with component dimensions 2, 2, 2, 3.
pub fn example_f9() -> Result<SkewCode> {
    let f = f9();
    let (f1, f4) = example_f9_generators();
    let one = RingR::new(f.clone()).from_ints(1, 0, 0, 0);
    SkewCode::build(f, 6, one, [f1.clone(), f1.clone(), f1, f4])
}

/// Skew `(1 - 2uv)`-constacyclic code of length 4 over `F_49`.
pub fn example_f49() -> Result<SkewCode> {
    let f = f49();
    let ring = RingR::new(f.clone());
    let g = SkewPoly::new(vec![f.from_int(1), f.from_int(1)]);
    let g4 = SkewPoly::new(vec![f.from_int(1), f.from_int(4), f.from_int(1)]);
    SkewCode::build(f, 4, ring.from_ints(1, 0, 0, -2), [g.clone(), g.clone(), g, g4])
}

/// `1 - 2v - 2uv` over `F_9`; its fourth CRT component is `0`.
pub fn example_n7_constant() -> RElem {
    RingR::new(f9()).from_ints(1, 0, -2, -2)
}

/// `x⁶ + (1-2v)x⁵ + x⁴ + (1-2v)x³ + x² + (1-2v)x + 1` over `R` with `F_9` coefficients.
pub fn example_n7_generator() -> SkewPoly<RElem> {
    let ring = RingR::new(f9());
    let one = ring.from_ints(1, 0, 0, 0);
    let w = ring.from_ints(1, 0, -2, 0);
    SkewPoly::new(vec![one, w, one, w, one, w, one])
}

/// The left submodule generated by [`example_n7_generator`] modulo `x⁷ - (1 - 2v - 2uv)`.
pub fn example_n7() -> Result<SkewCode> {
    SkewCode::from_generator(f9(), 7, example_n7_constant(), &example_n7_generator())
}

/// `(1-uv)(x+1) + uv(x²+4x+1)` over `F_49`, the assembled generator of [`example_f49`].
pub fn example_f49_generator() -> SkewPoly<RElem> {
    let f = f49();
    let ring = RingR::new(f.clone());
    let g = SkewPoly::new(vec![f.from_int(1), f.from_int(1)]);
    let g4 = SkewPoly::new(vec![f.from_int(1), f.from_int(4), f.from_int(1)]);
    mixed_generator_assemble(&ring, [&g, &g, &g, &g4])
}

/// A displayed product of skew polynomials and whether it multiplies out to its target.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FactorizationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// The displayed factorizations of `x⁴ - 1` over `F_25`, `x⁶ - 1` over `F_9` and `x⁴ + 1` over `F_49`.
pub fn factorization_identities() -> Vec<FactorizationCheck> {
    use crate::skewpoly::SkewPolyRing;
    let mut out = Vec::new();

    let f = f25();
    let sp = SkewPolyRing::new(f.clone());
    let one = f.from_int(1);
    let lin = |c: Fe| SkewPoly::new(vec![c, one]);
    let (x2, x3) = (lin(f.from_int(2)), lin(f.from_int(3)));
    let (xa, xa1) = (lin(f.root()), lin(el(&f, &[1, 1])));
    let target = sp.from_ints(&[-1, 0, 0, 0, 1]);
    out.push(FactorizationCheck {
        name: "F25: x^4-1 = (x+2)(x+3)(x+a)(x+a+1)",
        holds: sp.mul_all(&[x2.clone(), x3.clone(), xa.clone(), xa1.clone()]) == target,
    });
    out.push(FactorizationCheck {
        name: "F25: x^4-1 = (x+2)(x+3)(x+a+1)(x+a)",
        holds: sp.mul_all(&[x2, x3, xa1, xa]) == target,
    });

    let f = f9();
    let sp = SkewPolyRing::new(f.clone());
    let (f1, f4) = example_f9_generators();
    let target = sp.from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
    let one = f.from_int(1);
    let h4 = SkewPoly::new(vec![one, one, el(&f, &[2, 2]), one]);
    out.push(FactorizationCheck {
        name: "F9: x^6-1 = (x^3+(1+2a)x^2+x+2)(x^3+(2+2a)x^2+x+1)",
        holds: sp.mul(&f4, &h4) == target,
    });
    let h1 = SkewPoly::new(vec![one, f.root(), one]);
    out.push(FactorizationCheck {
        name: "F9: x^6-1 = (x^4+2ax^3+ax+2)(x^2+ax+1)",
        holds: sp.mul(&f1, &h1) == target,
    });

    let sp = SkewPolyRing::new(f49());
    out.push(FactorizationCheck {
        name: "F49: x^4+1 = (x^2+3x+1)(x^2+4x+1)",
        holds: sp.mul(&sp.from_ints(&[1, 3, 1]), &sp.from_ints(&[1, 4, 1])) == sp.from_ints(&[1, 0, 0, 0, 1]),
    });
    out
}
