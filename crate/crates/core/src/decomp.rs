//! Decomposition `C = e1 C1 ⊕ e2 C2 ⊕ e3 C3 ⊕ e4 C4` and the theorems built on it.

use num_bigint::BigUint;
use serde::Serialize;

use crate::codes::{apply_shift, embed_component, split_word, canonical_generator, ShiftKind, SkewCode};
use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::linalg::Subspace;
use crate::ring4::{RElem, RingR};
use crate::skewpoly::{ModulusSpec, SkewPoly, SkewPolyRing};

/// A component code `⟨g⟩ ⊂ F_q[x;θ]/⟨x^n - constant⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCode {
    pub n: usize,
    pub constant: Fe,
    pub generator: SkewPoly<Fe>,
}

/// Four component codes sharing a field and a length.
#[derive(Clone, Debug)]
pub struct ComponentQuadruple {
    field: GaloisField,
    components: [ComponentCode; 4],
}

impl ComponentQuadruple {
    pub fn new(field: GaloisField, components: [ComponentCode; 4]) -> Result<Self> {
        let n = components[0].n;
        if let Some(bad) = components.iter().position(|c| c.n != n) {
            return Err(Error::Inconsistent(format!(
                "component {} has length {}, component 1 has length {n}",
                bad + 1,
                components[bad].n
            )));
        }
        Ok(ComponentQuadruple { field, components })
    }

    pub fn from_code(code: &SkewCode) -> Self {
        let consts = code.component_constants();
        let components = std::array::from_fn(|i| ComponentCode {
            n: code.n(),
            constant: consts[i],
            generator: code.gens()[i].clone(),
        });
        ComponentQuadruple { field: code.field().clone(), components }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.components[0].n
    }
    pub fn components(&self) -> &[ComponentCode; 4] {
        &self.components
    }
    pub fn components_mut(&mut self) -> &mut [ComponentCode; 4] {
        &mut self.components
    }

    /// The `R`-constant whose CRT components are the four component constants.
    pub fn shift_constant(&self) -> RElem {
        RingR::new(self.field.clone()).crt_join(self.components.each_ref().map(|c| c.constant))
    }

    /// Rows `x^j * g`, `j = 0..n-deg g`, without reduction.
    pub fn component_rows(&self, i: usize) -> Vec<Vec<Fe>> {
        let sp = SkewPolyRing::new(self.field.clone());
        let c = &self.components[i];
        let Some(d) = c.generator.degree() else {
            return Vec::new();
        };
        (0..c.n.saturating_sub(d))
            .map(|j| {
                let xj = SkewPoly::monomial(self.field.from_int(1), j);
                sp.mul(&xj, &c.generator).to_vector(c.n).expect("degree below n")
            })
            .collect()
    }

    pub fn component_span(&self, i: usize) -> Subspace {
        Subspace::span(&self.field, self.n(), self.component_rows(i))
    }

    /// `Π |C_i|` over the spans of the component rows.
    pub fn cardinality(&self) -> BigUint {
        let dim: usize = (0..4).map(|i| self.component_span(i).dim()).sum();
        BigUint::from(self.field.order()).pow(dim as u32)
    }
}

pub fn assemble(quad: &ComponentQuadruple) -> Result<SkewCode> {
    let gens = quad.components.each_ref().map(|c| c.generator.clone());
    SkewCode::build(quad.field.clone(), quad.n(), quad.shift_constant(), gens)
}

/// The spans of the CRT components of a set of `R`-words.
pub fn extract_components(field: &GaloisField, n: usize, words: &[Vec<RElem>]) -> Result<[Subspace; 4]> {
    let ring = RingR::new(field.clone());
    let mut spans: [Subspace; 4] = std::array::from_fn(|_| Subspace::zero(n));
    for w in words {
        if w.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: w.len() });
        }
        for (span, part) in spans.iter_mut().zip(split_word(&ring, w)) {
            span.insert(field, &part);
        }
    }
    Ok(spans)
}

/// Canonical generators for four spans under the CRT components of `alpha`.
pub fn quadruple_from_spans(field: &GaloisField, n: usize, alpha: RElem, spans: &[Subspace; 4]) -> ComponentQuadruple {
    let ring = RingR::new(field.clone());
    let sp = SkewPolyRing::new(field.clone());
    let consts = ring.crt_split(alpha);
    let components = std::array::from_fn(|i| {
        let m = ModulusSpec::new(n, consts[i]);
        ComponentCode { n, constant: consts[i], generator: canonical_generator(&sp, &spans[i], &m) }
    });
    ComponentQuadruple { field: field.clone(), components }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub index: usize,
    pub constant: Fe,
    pub closed: bool,
    pub divides: bool,
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    /// `τ_α`-closure of the `R`-code spanned by the words `e_i (x^j * g_i)`.
    pub closed: bool,
    pub components: Vec<ComponentVerdict>,
    /// `closed` agrees with "every component is closed".
    pub consistent: bool,
    /// 1-based indices of components that are not closed.
    pub failing: Vec<usize>,
    pub hypothesis_notes: Vec<String>,
}

/// Checks `C` closed under `τ_α` ⟺ each `C_i` closed under `τ_{α_i}` on the raw component rows.
///
/// The `R`-side shift is applied to `R`-words; only membership is tested componentwise.
pub fn verify_quadruple(quad: &ComponentQuadruple) -> Result<DecompositionReport> {
    let field = &quad.field;
    let ring = RingR::new(field.clone());
    let sp = SkewPolyRing::new(field.clone());
    let alpha = quad.shift_constant();
    let spans: Vec<Subspace> = (0..4).map(|i| quad.component_span(i)).collect();

    let mut components = Vec::with_capacity(4);
    for (i, c) in quad.components.iter().enumerate() {
        let kind = ShiftKind::Tau(c.constant);
        let mut closed = true;
        for row in quad.component_rows(i) {
            if !spans[i].contains(field, &apply_shift(field, &kind, &row)?) {
                closed = false;
                break;
            }
        }
        let divides = match c.generator.degree() {
            Some(_) if sp.is_monic(&c.generator) => sp.is_right_divisor(&c.generator, &ModulusSpec::new(c.n, c.constant))?,
            _ => false,
        };
        components.push(ComponentVerdict {
            index: i + 1,
            constant: c.constant,
            closed,
            divides,
            degree: c.generator.degree(),
        });
    }

    let mut closed = true;
    'outer: for i in 0..4 {
        for row in quad.component_rows(i) {
            let word = embed_component(&ring, i, &row);
            let image = apply_shift(&ring, &ShiftKind::Tau(alpha), &word)?;
            for (j, part) in split_word(&ring, &image).iter().enumerate() {
                if !spans[j].contains(field, part) {
                    closed = false;
                    break 'outer;
                }
            }
        }
    }

    let failing: Vec<usize> = components.iter().filter(|c| !c.closed).map(|c| c.index).collect();
    let mut hypothesis_notes = Vec::new();
    if !ring.is_unit(alpha) {
        hypothesis_notes.push(format!("shift constant {} is not a unit", ring.format(alpha)));
    }
    Ok(DecompositionReport {
        closed,
        consistent: closed == failing.is_empty(),
        components,
        failing,
        hypothesis_notes,
    })
}

pub fn verify_decomposition_theorem(code: &SkewCode) -> Result<DecompositionReport> {
    verify_quadruple(&ComponentQuadruple::from_code(code))
}

/// `α^{-1}`, the shift constant of the dual code.
pub fn dual_constant(ring: &RingR, alpha: RElem) -> Result<RElem> {
    ring.inv(alpha)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualTheoremReport {
    /// `C⊥`'s component `i` equals the classical dual of `C_i`.
    pub components_match: [bool; 4],
    pub cardinality_product_ok: bool,
    /// Whether `k | n`, under which the constant of `C⊥` is asserted.
    pub hypothesis_met: bool,
    pub dual_constant: Option<RElem>,
    /// `τ_{α^{-1}}`-closure of `C⊥`, checked only when the hypothesis holds.
    pub constacyclic_under_inverse: Option<bool>,
    pub hypothesis_notes: Vec<String>,
}

pub fn verify_dual_theorem(code: &SkewCode) -> Result<DualTheoremReport> {
    let field = code.field();
    let dual = code.dual()?;
    let components_match = std::array::from_fn(|i| dual.component_span(i).same_as(field, &code.component_span(i).dual(field)));
    let total = BigUint::from(field.order()).pow((4 * code.n()) as u32);
    let hypothesis_met = code.n().is_multiple_of(field.k());
    let mut notes = Vec::new();
    let (constant, closed) = if hypothesis_met {
        let inv = dual_constant(code.ring(), code.alpha())?;
        (Some(inv), Some(dual.is_closed_under(&ShiftKind::Tau(inv))?))
    } else {
        notes.push(format!(
            "k = {} does not divide n = {}; the constant of the dual is not asserted",
            field.k(),
            code.n()
        ));
        (None, None)
    };
    Ok(DualTheoremReport {
        components_match,
        cardinality_product_ok: code.cardinality() * dual.cardinality() == total,
        hypothesis_met,
        dual_constant: constant,
        constacyclic_under_inverse: closed,
        hypothesis_notes: notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{example_f25, example_f49, example_f9, f9};

    fn full_quad(field: &GaloisField, n: usize, generator: SkewPoly<Fe>) -> ComponentQuadruple {
        let one = field.from_int(1);
        let c = ComponentCode { n, constant: one, generator };
        ComponentQuadruple::new(field.clone(), [c.clone(), c.clone(), c.clone(), c]).unwrap()
    }

    #[test]
    fn assemble_extremes() {
        let f = f9();
        let sp = SkewPolyRing::new(f.clone());
        let whole = assemble(&full_quad(&f, 3, sp.one())).unwrap();
        assert_eq!(whole.cardinality(), BigUint::from(9u32).pow(12));
        let zero_gen = sp.modulus_poly(&ModulusSpec::new(3, f.from_int(1)));
        let zero = assemble(&full_quad(&f, 3, zero_gen)).unwrap();
        assert_eq!(zero.cardinality(), BigUint::from(1u32));
    }

    #[test]
    fn example_f9_round_trip() {
        let c = example_f9().unwrap();
        let quad = ComponentQuadruple::from_code(&c);
        let again = assemble(&quad).unwrap();
        assert_eq!(again.cardinality(), BigUint::from(9u32).pow(2 + 2 + 2 + 3));
        assert_eq!(quad.cardinality(), again.cardinality());
        let spans = extract_components(c.field(), 6, &c.basis()).unwrap();
        for i in 0..4 {
            assert!(spans[i].same_as(c.field(), &c.component_span(i)));
        }
        let rebuilt = assemble(&quadruple_from_spans(c.field(), 6, c.alpha(), &spans)).unwrap();
        assert_eq!(rebuilt.gens(), c.gens());
    }

    #[test]
    fn extract_simple_cases() {
        let f = f9();
        let rr = RingR::new(f.clone());
        let spans = extract_components(&f, 2, &[]).unwrap();
        assert!(spans.iter().all(|s| s.dim() == 0));
        let g = [f.from_int(1), f.from_int(2)];
        let w: Vec<RElem> = g.iter().map(|&x| rr.mul(rr.u(), rr.scalar(x))).collect();
        let spans = extract_components(&f, 2, &[w]).unwrap();
        assert_eq!(spans.each_ref().map(|s| s.dim()), [0, 1, 0, 1]);
        assert!(spans[1].contains(&f, &g));
        assert!(spans[3].contains(&f, &g));
    }

    #[test]
    fn decomposition_reports() {
        let r = verify_decomposition_theorem(&example_f25().unwrap()).unwrap();
        assert!(r.closed && r.consistent && r.failing.is_empty());

        let c = example_f49().unwrap();
        let r = verify_decomposition_theorem(&c).unwrap();
        assert!(r.closed && r.consistent);
        let f = c.field();
        let consts: Vec<Fe> = r.components.iter().map(|v| v.constant).collect();
        assert_eq!(consts, vec![f.from_int(1), f.from_int(1), f.from_int(1), f.from_int(-1)]);

        let mut quad = ComponentQuadruple::from_code(&c);
        quad.components_mut()[1].generator = SkewPolyRing::new(f.clone()).from_ints(&[1, 1, 1]);
        let r = verify_quadruple(&quad).unwrap();
        assert!(!r.closed);
        assert!(r.consistent);
        assert_eq!(r.failing, vec![2]);
        assert!(!r.components[1].divides);
    }

    #[test]
    fn inconsistent_lengths() {
        let f = f9();
        let sp = SkewPolyRing::new(f.clone());
        let a = ComponentCode { n: 3, constant: f.from_int(1), generator: sp.one() };
        let b = ComponentCode { n: 4, ..a.clone() };
        assert!(matches!(
            ComponentQuadruple::new(f, [a.clone(), a.clone(), b, a]),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn dual_constants() {
        let rr = RingR::new(f9());
        assert_eq!(dual_constant(&rr, rr.one()).unwrap(), rr.one());
        assert_eq!(dual_constant(&rr, rr.from_int(-1)).unwrap(), rr.from_int(-1));
        let a = rr.from_ints(1, 0, 0, -2);
        assert_eq!(dual_constant(&rr, a).unwrap(), a);
        assert_eq!(dual_constant(&rr, rr.uv()), Err(Error::NotAUnit));
    }

    #[test]
    fn dual_theorem_on_examples() {
        for c in [example_f25().unwrap(), example_f9().unwrap(), example_f49().unwrap()] {
            let r = verify_dual_theorem(&c).unwrap();
            assert_eq!(r.components_match, [true; 4]);
            assert!(r.cardinality_product_ok);
            assert!(r.hypothesis_met);
            assert_eq!(r.constacyclic_under_inverse, Some(true));
        }
        let f = f9();
        let rr = RingR::new(f.clone());
        let sp = SkewPolyRing::new(f.clone());
        let g = sp.from_ints(&[-1, 1]);
        let c = SkewCode::build(f, 3, rr.one(), [g.clone(), g.clone(), g.clone(), g]).unwrap();
        let r = verify_dual_theorem(&c).unwrap();
        assert!(!r.hypothesis_met);
        assert_eq!(r.constacyclic_under_inverse, None);
        assert_eq!(r.hypothesis_notes.len(), 1);
        assert_eq!(r.components_match, [true; 4]);
    }
}
