//! Skew constacyclic codes over `R`, stored by their four CRT component generators.
//!
//! A code `C = e1 C1 ⊕ e2 C2 ⊕ e3 C3 ⊕ e4 C4` is determined by monic
//! `f_i ∈ F_q[x;θ]` with `f_i` right-dividing `x^n - α_i`, where
//! `(α_1, …, α_4)` is the CRT split of the shift constant `α ∈ R`.

pub mod distance;
pub mod shift;

use num_bigint::BigUint;
use serde::Serialize;

use crate::algebra::CoeffRing;
use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::linalg::{dot, Subspace};
use crate::ring4::{RElem, RingR};
use crate::skewpoly::{mixed_generator_assemble, ModulusSpec, SkewPoly, SkewPolyRing};

pub use distance::{min_distance, DistanceMethod, DistanceReport, DEFAULT_DISTANCE_BUDGET};
pub use shift::{apply_shift, mu_permute, ShiftKind};

#[derive(Clone, Debug)]
pub struct SkewCode {
    ring: RingR,
    n: usize,
    alpha: RElem,
    gens: [SkewPoly<Fe>; 4],
    warnings: Vec<String>,
}

/// Self-duality verdict with the component evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualReport {
    pub self_dual: bool,
    pub n: usize,
    pub component_dims: [usize; 4],
    pub components_self_orthogonal: [bool; 4],
    pub components_self_dual: [bool; 4],
}

impl SkewCode {
    /// Validates the four component generators against their moduli.
    ///
    /// Component indices in errors are 1-based. A non-unit `alpha` is accepted with a warning.
    pub fn build(field: GaloisField, n: usize, alpha: RElem, gens: [SkewPoly<Fe>; 4]) -> Result<Self> {
        if n == 0 {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        }
        let ring = RingR::new(field.clone());
        let sp = SkewPolyRing::new(field);
        let consts = ring.crt_split(alpha);
        for (i, g) in gens.iter().enumerate() {
            if !sp.is_monic(g) {
                return Err(Error::NotMonic(i + 1));
            }
            let d = g.degree().expect("monic");
            if d > n {
                return Err(Error::LengthMismatch { expected: n, got: d });
            }
            if !sp.is_right_divisor(g, &ModulusSpec::new(n, consts[i]))? {
                return Err(Error::NotADivisor(i + 1));
            }
        }
        let mut warnings = Vec::new();
        let report = ring.unit_report(alpha);
        if !report.is_unit {
            let zeros: Vec<String> = (0..4)
                .filter(|&i| report.components[i].value() == 0)
                .map(|i| (i + 1).to_string())
                .collect();
            warnings.push(format!(
                "shift constant {} is not a unit (CRT component {} is zero)",
                ring.format(alpha),
                zeros.join(", ")
            ));
        }
        Ok(SkewCode { ring, n, alpha, gens, warnings })
    }

    /// The left submodule generated by an arbitrary `f ∈ R[x;θ]`, reduced to
    /// canonical component generators (least-degree monic element of each component).
    pub fn from_generator(field: GaloisField, n: usize, alpha: RElem, f: &SkewPoly<RElem>) -> Result<Self> {
        let ring = RingR::new(field.clone());
        let sp = SkewPolyRing::new(field.clone());
        let consts = ring.crt_split(alpha);
        let parts = crate::skewpoly::split_components(&ring, f);
        let gens: [SkewPoly<Fe>; 4] = std::array::from_fn(|i| {
            let m = ModulusSpec::new(n, consts[i]);
            canonical_generator(&sp, &sp.module_span(&parts[i], &m), &m)
        });
        Self::build(field, n, alpha, gens)
    }

    pub fn ring(&self) -> &RingR {
        &self.ring
    }
    pub fn field(&self) -> &GaloisField {
        self.ring.field()
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn alpha(&self) -> RElem {
        self.alpha
    }
    pub fn gens(&self) -> &[SkewPoly<Fe>; 4] {
        &self.gens
    }
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `(α_1, α_1+α_2, α_1+α_3, α_1+α_2+α_3+α_4)`.
    pub fn component_constants(&self) -> [Fe; 4] {
        self.ring.crt_split(self.alpha)
    }

    pub fn component_modulus(&self, i: usize) -> ModulusSpec<Fe> {
        ModulusSpec::new(self.n, self.component_constants()[i])
    }

    pub fn component_degrees(&self) -> [usize; 4] {
        std::array::from_fn(|i| self.gens[i].degree().expect("monic"))
    }

    /// `F_q`-dimensions `n - deg f_i`.
    pub fn component_dims(&self) -> [usize; 4] {
        self.component_degrees().map(|d| self.n - d)
    }

    /// `F_q`-dimension of `C`, which is also the dimension of its Gray image.
    pub fn dimension(&self) -> usize {
        self.component_dims().iter().sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.field().order()).pow(self.dimension() as u32)
    }

    /// `e1 f1 + e2 f2 + e3 f3 + e4 f4`.
    pub fn generator(&self) -> SkewPoly<RElem> {
        let [a, b, c, d] = &self.gens;
        mixed_generator_assemble(&self.ring, [a, b, c, d])
    }

    fn skew_field_ring(&self) -> SkewPolyRing<GaloisField> {
        SkewPolyRing::new(self.field().clone())
    }

    /// Rows `x^j * f_i`, `j = 0..n-deg f_i`, as vectors of length `n`.
    pub fn component_basis(&self, i: usize) -> Vec<Vec<Fe>> {
        let sp = self.skew_field_ring();
        let g = &self.gens[i];
        (0..self.n - g.degree().expect("monic"))
            .map(|j| {
                let xj = SkewPoly::monomial(self.field().from_int(1), j);
                sp.mul(&xj, g).to_vector(self.n).expect("degree below n")
            })
            .collect()
    }

    pub fn component_span(&self, i: usize) -> Subspace {
        Subspace::span(self.field(), self.n, self.component_basis(i))
    }

    /// The `R`-words `e_i · (x^j * f_i)` in component order; an `F_q`-basis of `C`.
    pub fn basis(&self) -> Vec<Vec<RElem>> {
        let mut out = Vec::with_capacity(self.dimension());
        for i in 0..4 {
            for row in self.component_basis(i) {
                out.push(embed_component(&self.ring, i, &row));
            }
        }
        out
    }

    /// Whether the polynomial with coefficient vector `v` lies in `C_i`.
    pub fn component_contains(&self, i: usize, v: &[Fe]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        let sp = self.skew_field_ring();
        let (_, r) = sp.right_divmod(&SkewPoly::new(v.to_vec()), &self.gens[i])?;
        Ok(r.is_zero())
    }

    pub fn contains(&self, w: &[RElem]) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: w.len() });
        }
        let parts = split_word(&self.ring, w);
        for (i, part) in parts.iter().enumerate() {
            if !self.component_contains(i, part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Applies the shift to every basis word and tests membership of the image.
    pub fn is_closed_under(&self, kind: &ShiftKind<RElem>) -> Result<bool> {
        for w in self.basis() {
            let image = apply_shift(&self.ring, kind, &w)?;
            if !self.contains(&image)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Shift closure of the component code `C_i` over `F_q`.
    pub fn component_closed_under(&self, i: usize, kind: &ShiftKind<Fe>) -> Result<bool> {
        for w in self.component_basis(i) {
            let image = apply_shift(self.field(), kind, &w)?;
            if !self.component_contains(i, &image)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `C⊥` under `Σ x_i y_i`, a skew `α^{-1}`-constacyclic code.
    ///
    /// Component `i` is generated by the monic form of `ĥ_i`, where `x^n - α_i = h_i * f_i`.
    /// When `k ∤ n` and some `α_i` is not fixed by `θ`, `ĥ_i` need not generate the dual;
    /// those components are generated canonically from the orthogonal complement instead.
    pub fn dual(&self) -> Result<SkewCode> {
        let inv = self.ring.inv(self.alpha)?;
        let sp = self.skew_field_ring();
        let field = self.field();
        let consts = self.component_constants();
        let inv_consts = self.ring.crt_split(inv);
        let k_divides = self.n.is_multiple_of(field.k());
        let mut gens: Vec<SkewPoly<Fe>> = Vec::with_capacity(4);
        for i in 0..4 {
            let m = ModulusSpec::new(self.n, consts[i]);
            let dm = ModulusSpec::new(self.n, inv_consts[i]);
            if k_divides || field.frobenius(consts[i], 1) == consts[i] {
                let h = sp.right_cofactor(&self.gens[i], &m)?;
                gens.push(sp.monic(&sp.dual_generator_hhat(&h)?)?);
            } else {
                let complement = self.component_span(i).dual(field);
                gens.push(canonical_generator(&sp, &complement, &dm));
            }
        }
        let gens: [SkewPoly<Fe>; 4] = gens.try_into().expect("four components");
        SkewCode::build(field.clone(), self.n, inv, gens)
    }

    /// Each component code equals its own dual: dimension `n/2` and self-orthogonal.
    pub fn self_dual_report(&self) -> SelfDualReport {
        let field = self.field();
        let dims = self.component_dims();
        let ortho: [bool; 4] = std::array::from_fn(|i| {
            let rows = self.component_basis(i);
            rows.iter().all(|x| rows.iter().all(|y| dot(field, x, y).value() == 0))
        });
        let comps: [bool; 4] = std::array::from_fn(|i| ortho[i] && 2 * dims[i] == self.n);
        SelfDualReport {
            self_dual: comps.iter().all(|&b| b),
            n: self.n,
            component_dims: dims,
            components_self_orthogonal: ortho,
            components_self_dual: comps,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual_report().self_dual
    }
}

/// Least-degree monic polynomial in a closed subspace, or `x^n - α` for the zero space.
pub fn canonical_generator(sp: &SkewPolyRing<GaloisField>, span: &Subspace, m: &ModulusSpec<Fe>) -> SkewPoly<Fe> {
    sp.min_degree_element(span).unwrap_or_else(|| sp.modulus_poly(m))
}

/// The `R`-word whose `i`-th CRT component is `v` and whose other components vanish.
pub fn embed_component(ring: &RingR, i: usize, v: &[Fe]) -> Vec<RElem> {
    v.iter()
        .map(|&x| {
            let mut parts = [Fe::default(); 4];
            parts[i] = x;
            ring.crt_join(parts)
        })
        .collect()
}

/// The four CRT component vectors of an `R`-word.
pub fn split_word(ring: &RingR, w: &[RElem]) -> [Vec<Fe>; 4] {
    let parts: Vec<[Fe; 4]> = w.iter().map(|&r| ring.crt_split(r)).collect();
    std::array::from_fn(|i| parts.iter().map(|p| p[i]).collect())
}

/// The sixteen constants for which self-dual skew constacyclic codes are possible,
/// as listed in closed form.
pub fn self_dual_constant_list(ring: &RingR) -> Vec<RElem> {
    const LIST: [(i64, i64, i64, i64); 16] = [
        (1, 0, 0, 0),
        (-1, 0, 0, 0),
        (1, -2, 0, 0),
        (1, 0, -2, 0),
        (1, 0, 0, -2),
        (-1, 2, 0, 0),
        (-1, 0, 2, 0),
        (-1, 0, 0, 2),
        (1, -2, 0, 2),
        (1, 0, -2, 2),
        (-1, 2, 0, -2),
        (-1, 0, 2, -2),
        (1, -2, -2, 2),
        (-1, 2, 2, -2),
        (1, -2, -2, 4),
        (-1, 2, 2, -4),
    ];
    LIST.iter().map(|&(a, b, c, d)| ring.from_ints(a, b, c, d)).collect()
}

/// Whether every CRT component of `alpha` is `±1`, cross-checked against the closed-form list.
pub fn self_dual_constant_check(ring: &RingR, alpha: RElem) -> Result<bool> {
    if !ring.is_unit(alpha) {
        return Err(Error::NotAUnit);
    }
    let field = ring.field();
    let pm1 = [field.from_int(1), field.from_int(-1)];
    let by_components = ring.crt_split(alpha).iter().all(|c| pm1.contains(c));
    let by_list = self_dual_constant_list(ring).contains(&alpha);
    if by_components != by_list {
        return Err(Error::Inconsistent(format!(
            "constant {} classified differently by components and by list",
            ring.format(alpha)
        )));
    }
    Ok(by_components)
}

/// `f(x) ↦ f(αx) mod (x^n - α)` for odd `n` and `α² = 1`.
pub fn rho_map<C: CoeffRing>(
    sp: &SkewPolyRing<C>,
    f: &SkewPoly<C::Elem>,
    alpha: C::Elem,
    n: usize,
) -> Result<SkewPoly<C::Elem>> {
    let base = sp.base();
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength);
    }
    if !base.is_unit(alpha) {
        return Err(Error::NotAUnit);
    }
    if base.mul(alpha, alpha) != base.one() {
        return Err(Error::HypothesisViolated("ρ needs α² = 1".into()));
    }
    Ok(sp.reduce(&sp.scale_variable(f, alpha), &ModulusSpec::new(n, alpha)))
}
