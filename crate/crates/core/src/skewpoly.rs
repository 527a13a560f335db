//! Skew polynomials `Σ a_i x^i` with the multiplication rule
//! `(a x^i) * (b x^j) = a θ^i(b) x^{i+j}`.
//!
//! Division is always on the right: `f = quot * g + rem`, which is the form
//! in which generators of left submodules of `A[x;θ]/⟨x^n - α⟩` right-divide
//! the modulus.

use crate::algebra::{CoeffRing, Untwisted};
use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::linalg::Subspace;
use crate::ring4::{RElem, RingR};

/// Coefficient vector, index `i` is the coefficient of `x^i`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq + Default> SkewPoly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| *c == E::default()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: E) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: E, i: usize) -> Self {
        let mut v = vec![E::default(); i + 1];
        v[i] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    /// Coefficients padded to length `n`; fails if the degree is `≥ n`.
    pub fn to_vector(&self, n: usize) -> Result<Vec<E>> {
        if self.coeffs.len() > n {
            return Err(Error::LengthMismatch { expected: n, got: self.coeffs.len() });
        }
        let mut v = self.coeffs.clone();
        v.resize(n, E::default());
        Ok(v)
    }
}

/// The modulus `x^n - α` of the quotient module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModulusSpec<E> {
    pub n: usize,
    pub alpha: E,
}

impl<E> ModulusSpec<E> {
    pub fn new(n: usize, alpha: E) -> Self {
        ModulusSpec { n, alpha }
    }
}

/// `C[x; θ]` over a coefficient ring.
#[derive(Clone, Debug)]
pub struct SkewPolyRing<C> {
    base: C,
}

pub const DEFAULT_SEARCH_BUDGET: u128 = 10_000_000;

impl<C: CoeffRing> SkewPolyRing<C> {
    pub fn new(base: C) -> Self {
        SkewPolyRing { base }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn add(&self, f: &SkewPoly<C::Elem>, g: &SkewPoly<C::Elem>) -> SkewPoly<C::Elem> {
        let n = f.coeffs.len().max(g.coeffs.len());
        SkewPoly::new((0..n).map(|i| self.base.add(f.coeff(i), g.coeff(i))).collect())
    }

    pub fn neg(&self, f: &SkewPoly<C::Elem>) -> SkewPoly<C::Elem> {
        SkewPoly::new(f.coeffs.iter().map(|&c| self.base.neg(c)).collect())
    }

    pub fn sub(&self, f: &SkewPoly<C::Elem>, g: &SkewPoly<C::Elem>) -> SkewPoly<C::Elem> {
        self.add(f, &self.neg(g))
    }

    /// `c * f`, scalar on the left (no twist involved).
    pub fn scale_left(&self, c: C::Elem, f: &SkewPoly<C::Elem>) -> SkewPoly<C::Elem> {
        SkewPoly::new(f.coeffs.iter().map(|&a| self.base.mul(c, a)).collect())
    }

    pub fn one(&self) -> SkewPoly<C::Elem> {
        SkewPoly::constant(self.base.one())
    }

    pub fn x(&self) -> SkewPoly<C::Elem> {
        SkewPoly::monomial(self.base.one(), 1)
    }

    /// Builds a polynomial from integer coefficients in the prime field.
    pub fn from_ints(&self, coeffs: &[i64]) -> SkewPoly<C::Elem> {
        SkewPoly::new(coeffs.iter().map(|&c| self.base.from_int(c)).collect())
    }

    pub fn mul(&self, f: &SkewPoly<C::Elem>, g: &SkewPoly<C::Elem>) -> SkewPoly<C::Elem> {
        if f.is_zero() || g.is_zero() {
            return SkewPoly::zero();
        }
        let b = &self.base;
        let mut out = vec![b.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if b.is_zero(a) {
                continue;
            }
            for (j, &c) in g.coeffs.iter().enumerate() {
                out[i + j] = b.add(out[i + j], b.mul(a, b.twist(c, i)));
            }
        }
        SkewPoly::new(out)
    }

    pub fn mul_all(&self, factors: &[SkewPoly<C::Elem>]) -> SkewPoly<C::Elem> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `x^n - α`.
    pub fn modulus_poly(&self, m: &ModulusSpec<C::Elem>) -> SkewPoly<C::Elem> {
        let mut v = vec![self.base.zero(); m.n + 1];
        v[0] = self.base.neg(m.alpha);
        v[m.n] = self.base.one();
        SkewPoly::new(v)
    }

    pub fn is_monic(&self, f: &SkewPoly<C::Elem>) -> bool {
        f.leading() == Some(self.base.one())
    }

    /// Right division: `f = quot * g + rem` with `deg rem < deg g`.
    pub fn right_divmod(
        &self,
        f: &SkewPoly<C::Elem>,
        g: &SkewPoly<C::Elem>,
    ) -> Result<(SkewPoly<C::Elem>, SkewPoly<C::Elem>)> {
        let b = &self.base;
        let dg = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead = g.leading().expect("nonzero");
        if !b.is_unit(lead) {
            return Err(Error::NonUnitLeadingCoeff);
        }
        let mut rem = f.coeffs.clone();
        let mut quot = vec![b.zero(); f.coeffs.len().saturating_sub(dg).max(1)];
        while rem.len() > dg {
            let dr = rem.len() - 1;
            let top = rem[dr];
            if !b.is_zero(top) {
                let e = dr - dg;
                // (s x^e) * (lead x^dg) = s θ^e(lead) x^dr
                let s = b.mul(top, b.inv(b.twist(lead, e)).expect("units stay units under θ"));
                quot[e] = b.add(quot[e], s);
                for (j, &c) in g.coeffs.iter().enumerate() {
                    rem[e + j] = b.sub(rem[e + j], b.mul(s, b.twist(c, e)));
                }
            }
            rem.pop();
        }
        Ok((SkewPoly::new(quot), SkewPoly::new(rem)))
    }

    /// Right remainder modulo `x^n - α`; the canonical representative of degree `< n`.
    pub fn reduce(&self, f: &SkewPoly<C::Elem>, m: &ModulusSpec<C::Elem>) -> SkewPoly<C::Elem> {
        if f.coeffs.len() <= m.n {
            return f.clone();
        }
        self.right_divmod(f, &self.modulus_poly(m)).expect("monic modulus").1
    }

    /// `(f * g) mod (x^n - α)`.
    pub fn mul_mod(
        &self,
        f: &SkewPoly<C::Elem>,
        g: &SkewPoly<C::Elem>,
        m: &ModulusSpec<C::Elem>,
    ) -> SkewPoly<C::Elem> {
        self.reduce(&self.mul(f, g), m)
    }

    pub fn is_right_divisor(&self, g: &SkewPoly<C::Elem>, m: &ModulusSpec<C::Elem>) -> Result<bool> {
        let (_, r) = self.right_divmod(&self.modulus_poly(m), g)?;
        Ok(r.is_zero())
    }

    /// The left cofactor `h` with `x^n - α = h * g`.
    pub fn right_cofactor(&self, g: &SkewPoly<C::Elem>, m: &ModulusSpec<C::Elem>) -> Result<SkewPoly<C::Elem>> {
        let (h, r) = self.right_divmod(&self.modulus_poly(m), g)?;
        if r.is_zero() {
            Ok(h)
        } else {
            Err(Error::NotADivisor(0))
        }
    }

    /// All monic right divisors of `x^n - α` of the given degree, in lexicographic
    /// order of `(c_0, c_1, …, c_{d-1})` under the ring's element enumeration.
    pub fn right_divisor_search(
        &self,
        m: &ModulusSpec<C::Elem>,
        degree: usize,
        budget: u128,
    ) -> Result<Vec<SkewPoly<C::Elem>>> {
        let b = &self.base;
        let size = b.size() as u128;
        let needed = size
            .checked_pow(degree as u32)
            .ok_or(Error::BudgetExceeded { needed: u128::MAX, budget })?;
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        if degree > m.n {
            return Ok(Vec::new());
        }
        let target = self.modulus_poly(m);
        let mut found = Vec::new();
        let mut digits = vec![0u64; degree];
        for _ in 0..needed {
            let mut coeffs: Vec<C::Elem> = digits.iter().map(|&d| b.element(d)).collect();
            coeffs.push(b.one());
            let g = SkewPoly::new(coeffs);
            if self.right_divmod(&target, &g)?.1.is_zero() {
                found.push(g);
            }
            // odometer with c_{d-1} fastest
            for d in digits.iter_mut().rev() {
                *d += 1;
                if (*d as u128) < size {
                    break;
                }
                *d = 0;
            }
        }
        Ok(found)
    }

    /// `ĥ(x) = Σ θ^i(h_{deg h - i}) x^i`, the generator of the dual of `⟨f⟩` when
    /// `x^n - α = h * f`.
    pub fn dual_generator_hhat(&self, h: &SkewPoly<C::Elem>) -> Result<SkewPoly<C::Elem>> {
        let d = h.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(SkewPoly::new(
            (0..=d).map(|i| self.base.twist(h.coeff(d - i), i)).collect(),
        ))
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self, f: &SkewPoly<C::Elem>) -> Result<SkewPoly<C::Elem>> {
        let lead = f.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = self.base.inv(lead).ok_or(Error::NonUnitLeadingCoeff)?;
        Ok(self.scale_left(inv, f))
    }

    /// Substitutes `c·x` for `x` coefficientwise: `Σ f_i c^i x^i`.
    pub fn scale_variable(&self, f: &SkewPoly<C::Elem>, c: C::Elem) -> SkewPoly<C::Elem> {
        let mut pw = self.base.one();
        let mut out = Vec::with_capacity(f.coeffs.len());
        for &a in &f.coeffs {
            out.push(self.base.mul(a, pw));
            pw = self.base.mul(pw, c);
        }
        SkewPoly::new(out)
    }
}

impl SkewPolyRing<GaloisField> {
    pub fn field(&self) -> &GaloisField {
        &self.base
    }

    /// The left submodule generated by `f` in `F_q[x;θ]/⟨x^n - α⟩`, as a subspace of `F_q^n`.
    ///
    /// Iterates `v ↦ x * v mod (x^n - α)` from `f` until the span stops growing;
    /// the map is θ-semilinear so a stable span is closed.
    pub fn module_span(&self, f: &SkewPoly<Fe>, m: &ModulusSpec<Fe>) -> Subspace {
        let field = &self.base;
        let mut span = Subspace::zero(m.n);
        let x = self.x();
        let mut cur = self.reduce(f, m);
        for _ in 0..=m.n {
            let v = cur.to_vector(m.n).expect("reduced");
            if !span.insert(field, &v) {
                break;
            }
            cur = self.mul_mod(&x, &cur, m);
        }
        span
    }

    /// Idempotent generator `e` of `⟨f⟩ ⊂ F_q[x;θ]/⟨x^n - α⟩`.
    ///
    /// Needs `gcd(n, k) = 1`, `p ∤ n` and `α` a nonzero element fixed by `θ`. Under
    /// these conditions the code is an ordinary constacyclic code, so `e = a·f` from
    /// the commutative Bézout identity `a·f + b·h = 1` with `x^n - α = h·f`. The
    /// result is then checked in the skew ring: `e * e ≡ e` and `⟨e⟩ = ⟨f⟩`.
    pub fn idempotent_generator(&self, f: &SkewPoly<Fe>, m: &ModulusSpec<Fe>) -> Result<SkewPoly<Fe>> {
        let field = &self.base;
        let k = field.k();
        if gcd(m.n, k) != 1 {
            return Err(Error::HypothesisViolated(format!("gcd(n, k) = gcd({}, {k}) ≠ 1", m.n)));
        }
        if (m.n as u64).is_multiple_of(field.characteristic()) {
            return Err(Error::HypothesisViolated(format!(
                "gcd(n, q) ≠ 1 for n = {} and p = {}",
                m.n,
                field.characteristic()
            )));
        }
        if m.alpha.value() == 0 || field.frobenius(m.alpha, 1) != m.alpha {
            return Err(Error::HypothesisViolated("shift constant must be a nonzero θ-fixed element".into()));
        }
        if !self.is_monic(f) || !self.is_right_divisor(f, m)? {
            return Err(Error::NotADivisor(0));
        }

        let comm = SkewPolyRing::new(Untwisted(field.clone()));
        let big = comm.modulus_poly(m);
        let (h, r) = comm.right_divmod(&big, f)?;
        if !r.is_zero() {
            return Err(Error::HypothesisViolated("generator does not divide x^n - α commutatively".into()));
        }
        let (g, a, _b) = comm.ext_gcd(f, &h);
        if g.degree() != Some(0) {
            return Err(Error::HypothesisViolated("x^n - α is not squarefree".into()));
        }
        let g_inv = field.inv(g.coeff(0))?;
        let a = comm.scale_left(g_inv, &a);
        let e = comm.reduce(&comm.mul(&a, f), m);

        if self.mul_mod(&e, &e, m) != e {
            return Err(Error::HypothesisViolated("commutative idempotent is not skew-idempotent".into()));
        }
        if !self.module_span(&e, m).same_as(field, &self.module_span(f, m)) {
            return Err(Error::HypothesisViolated("idempotent generates a different module".into()));
        }
        Ok(e)
    }

    /// `1 - e(x^{-1})` in `F_q[x;θ]/⟨x^n - α^{-1}⟩`, using `x^{-i} = α x^{n-i}` there.
    pub fn dual_idempotent(&self, e: &SkewPoly<Fe>, m: &ModulusSpec<Fe>) -> Result<SkewPoly<Fe>> {
        let field = &self.base;
        let n = m.n;
        let mut out = vec![Fe::default(); n];
        out[0] = field.sub(field.from_int(1), e.coeff(0));
        for i in 1..n {
            out[n - i] = field.neg(field.mul(m.alpha, e.coeff(i)));
        }
        if e.coeffs.len() > n {
            return Err(Error::LengthMismatch { expected: n, got: e.coeffs.len() });
        }
        Ok(SkewPoly::new(out))
    }

    /// Monic element of least degree in a subspace read as polynomials of degree `< n`.
    pub fn min_degree_element(&self, span: &Subspace) -> Option<SkewPoly<Fe>> {
        let field = &self.base;
        let n = span.len();
        let reversed: Vec<Vec<Fe>> = span.rows().iter().map(|r| r.iter().rev().copied().collect()).collect();
        let rev = Subspace::span(field, n, &reversed);
        let last = rev.rows().last()?;
        let poly: Vec<Fe> = last.iter().rev().copied().collect();
        Some(SkewPoly::new(poly))
    }
}

impl<C: CoeffRing> SkewPolyRing<Untwisted<C>> {
    /// Extended Euclid in the commutative ring: returns `(g, a, b)` with `a·f + b·h = g`.
    pub fn ext_gcd(
        &self,
        f: &SkewPoly<C::Elem>,
        h: &SkewPoly<C::Elem>,
    ) -> (SkewPoly<C::Elem>, SkewPoly<C::Elem>, SkewPoly<C::Elem>) {
        let (mut r0, mut r1) = (f.clone(), h.clone());
        let (mut a0, mut a1) = (self.one(), SkewPoly::zero());
        let (mut b0, mut b1) = (SkewPoly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.right_divmod(&r0, &r1).expect("field coefficients");
            let a2 = self.sub(&a0, &self.mul(&q, &a1));
            let b2 = self.sub(&b0, &self.mul(&q, &b1));
            r0 = std::mem::replace(&mut r1, r);
            a0 = std::mem::replace(&mut a1, a2);
            b0 = std::mem::replace(&mut b1, b2);
        }
        (r0, a0, b0)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The `R`-polynomial whose CRT components are `f1..f4` coefficientwise,
/// i.e. `e1 f1 + e2 f2 + e3 f3 + e4 f4`.
pub fn mixed_generator_assemble(ring: &RingR, gens: [&SkewPoly<Fe>; 4]) -> SkewPoly<RElem> {
    let len = gens.iter().map(|g| g.coeffs().len()).max().unwrap_or(0);
    SkewPoly::new(
        (0..len)
            .map(|i| ring.crt_join([gens[0].coeff(i), gens[1].coeff(i), gens[2].coeff(i), gens[3].coeff(i)]))
            .collect(),
    )
}

/// The four CRT component polynomials of an `R`-polynomial.
pub fn split_components(ring: &RingR, f: &SkewPoly<RElem>) -> [SkewPoly<Fe>; 4] {
    let parts: Vec<[Fe; 4]> = f.coeffs().iter().map(|&c| ring.crt_split(c)).collect();
    std::array::from_fn(|i| SkewPoly::new(parts.iter().map(|p| p[i]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::tests::{f25, f49, f9};

    fn el(f: &GaloisField, digits: &[u64]) -> Fe {
        f.from_digits(digits).unwrap()
    }

    #[test]
    fn f25_factorisation_both_orders() {
        let f = f25();
        let ring = SkewPolyRing::new(f.clone());
        let a = f.root();
        let one = f.from_int(1);
        let lin = |c: Fe| SkewPoly::new(vec![c, one]);
        let x2 = lin(f.from_int(2));
        let x3 = lin(f.from_int(3));
        let xa = lin(a);
        let xa1 = lin(f.add(a, one));
        let target = ring.from_ints(&[-1, 0, 0, 0, 1]);
        assert_eq!(ring.mul_all(&[x2.clone(), x3.clone(), xa.clone(), xa1.clone()]), target);
        assert_eq!(ring.mul_all(&[x2, x3, xa1, xa]), target);
    }

    #[test]
    fn f9_factorisations() {
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        let a = f.root();
        let (z, one, two) = (Fe::default(), f.from_int(1), f.from_int(2));
        let target = ring.from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
        let h = SkewPoly::new(vec![two, a, z, f.mul(two, a), one]);
        let g = SkewPoly::new(vec![one, a, one]);
        assert_eq!(ring.mul(&h, &g), target);
        let f1 = SkewPoly::new(vec![two, one, el(&f, &[1, 2]), one]);
        let f2 = SkewPoly::new(vec![one, one, el(&f, &[2, 2]), one]);
        assert_eq!(ring.mul(&f1, &f2), target);
    }

    #[test]
    fn f49_negacyclic_factorisation() {
        let f = f49();
        let ring = SkewPolyRing::new(f);
        let prod = ring.mul(&ring.from_ints(&[1, 3, 1]), &ring.from_ints(&[1, 4, 1]));
        assert_eq!(prod, ring.from_ints(&[1, 0, 0, 0, 1]));
        let m = ModulusSpec::new(4, ring.base().from_int(-1));
        assert!(ring.is_right_divisor(&ring.from_ints(&[1, 4, 1]), &m).unwrap());
    }

    #[test]
    fn non_commutativity_witness() {
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        let a = f.root();
        let ax = SkewPoly::monomial(a, 1);
        let b = SkewPoly::constant(a);
        assert_ne!(ring.mul(&ax, &b), ring.mul(&b, &ax));
    }

    #[test]
    fn division_examples() {
        let f = f25();
        let ring = SkewPolyRing::new(f.clone());
        let a = f.root();
        let one = f.from_int(1);
        let target = ring.from_ints(&[-1, 0, 0, 0, 1]);
        let (_, r) = ring.right_divmod(&target, &SkewPoly::new(vec![f.add(a, one), one])).unwrap();
        assert!(r.is_zero());
        let (q, r) = ring.right_divmod(&target, &ring.one()).unwrap();
        assert_eq!((q, r), (target.clone(), SkewPoly::zero()));
        assert_eq!(ring.right_divmod(&target, &SkewPoly::zero()), Err(Error::DivisionByZeroPoly));

        let f9 = f9();
        let ring = SkewPolyRing::new(f9.clone());
        let a = f9.root();
        let (z, one, two) = (Fe::default(), f9.from_int(1), f9.from_int(2));
        let (q, r) = ring
            .right_divmod(&ring.from_ints(&[-1, 0, 0, 0, 0, 0, 1]), &SkewPoly::new(vec![one, a, one]))
            .unwrap();
        assert!(r.is_zero());
        assert_eq!(q, SkewPoly::new(vec![two, a, z, f9.mul(two, a), one]));
    }

    #[test]
    fn non_unit_leading_coefficient_rejected() {
        let rr = RingR::new(f9());
        let ring = SkewPolyRing::new(rr.clone());
        let g = SkewPoly::new(vec![rr.one(), rr.u()]);
        assert_eq!(
            ring.right_divmod(&ring.from_ints(&[1, 0, 1]), &g),
            Err(Error::NonUnitLeadingCoeff)
        );
    }

    #[test]
    fn divisor_of_x_minus_one_always() {
        for f in [f9(), f25(), f49()] {
            let ring = SkewPolyRing::new(f.clone());
            for n in 1..7 {
                let m = ModulusSpec::new(n, f.from_int(1));
                assert!(ring.is_right_divisor(&ring.from_ints(&[-1, 1]), &m).unwrap());
            }
        }
    }

    #[test]
    fn search_examples() {
        let f = f25();
        let ring = SkewPolyRing::new(f.clone());
        let m = ModulusSpec::new(4, f.from_int(1));
        let found = ring.right_divisor_search(&m, 1, DEFAULT_SEARCH_BUDGET).unwrap();
        let a = f.root();
        let one = f.from_int(1);
        for c in [f.from_int(2), f.from_int(3), a, f.add(a, one)] {
            assert!(found.contains(&SkewPoly::new(vec![c, one])));
        }
        assert_eq!(ring.right_divisor_search(&m, 0, 10).unwrap(), vec![ring.one()]);
        assert!(matches!(
            ring.right_divisor_search(&m, 3, 1000),
            Err(Error::BudgetExceeded { needed: 15625, budget: 1000 })
        ));

        let f = f49();
        let ring = SkewPolyRing::new(f.clone());
        let m = ModulusSpec::new(4, f.from_int(-1));
        let found = ring.right_divisor_search(&m, 2, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(found.contains(&ring.from_ints(&[1, 3, 1])));
        assert!(found.contains(&ring.from_ints(&[1, 4, 1])));
        // lexicographic order
        let keys: Vec<Vec<Fe>> = found.iter().map(|g| g.coeffs().to_vec()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn skew_divisors_divide_commutatively_when_coprime() {
        // gcd(7, 2) = 1 over F_9
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        let comm = SkewPolyRing::new(Untwisted(f.clone()));
        for alpha in [1, -1] {
            let m = ModulusSpec::new(7, f.from_int(alpha));
            for d in 1..=3 {
                for g in ring.right_divisor_search(&m, d, DEFAULT_SEARCH_BUDGET).unwrap() {
                    let (_, r) = comm.right_divmod(&comm.modulus_poly(&m), &g).unwrap();
                    assert!(r.is_zero(), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn hhat_examples() {
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        let a = f.root();
        let one = f.from_int(1);
        let h = SkewPoly::new(vec![one, a, one]);
        assert_eq!(
            ring.dual_generator_hhat(&h).unwrap(),
            SkewPoly::new(vec![one, f.frobenius(a, 1), one])
        );
        assert_eq!(ring.dual_generator_hhat(&h).unwrap().coeff(1), el(&f, &[0, 2]));
        let plain = ring.from_ints(&[1, 2, 0, 1]);
        assert_eq!(ring.dual_generator_hhat(&plain).unwrap(), ring.from_ints(&[1, 0, 2, 1]));
        assert_eq!(ring.dual_generator_hhat(&SkewPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn idempotent_trivial_cases() {
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        let m = ModulusSpec::new(5, f.from_int(1));
        assert_eq!(ring.idempotent_generator(&ring.one(), &m).unwrap(), ring.one());
        let full = ring.modulus_poly(&m);
        assert_eq!(ring.idempotent_generator(&full, &m).unwrap(), SkewPoly::zero());
        let bad = ModulusSpec::new(4, f.from_int(1));
        assert!(matches!(
            ring.idempotent_generator(&ring.one(), &bad),
            Err(Error::HypothesisViolated(_))
        ));
        let bad = ModulusSpec::new(3, f.from_int(1));
        assert!(matches!(
            ring.idempotent_generator(&ring.one(), &bad),
            Err(Error::HypothesisViolated(_))
        ));
        assert_eq!(
            ring.idempotent_generator(&ring.from_ints(&[1, 1]), &m),
            Err(Error::NotADivisor(0))
        );
    }

    #[test]
    fn idempotent_x_minus_one_f9_n5() {
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        let m = ModulusSpec::new(5, f.from_int(1));
        let g = ring.from_ints(&[-1, 1]);
        let e = ring.idempotent_generator(&g, &m).unwrap();
        // 1 - (1+x+…+x^4)/5 with 1/5 = 2 in F_3
        assert_eq!(e, ring.from_ints(&[2, 1, 1, 1, 1]));
        assert_eq!(ring.mul_mod(&e, &e, &m), e);
        let span_e = ring.module_span(&e, &m);
        assert_eq!(span_e.dim(), 4);
        assert!(span_e.same_as(&f, &ring.module_span(&g, &m)));
        let dual_e = ring.dual_idempotent(&e, &m).unwrap();
        assert!(ring.module_span(&dual_e, &m).same_as(&f, &span_e.dual(&f)));
    }

    #[test]
    fn idempotents_match_duals_across_divisors() {
        // every divisor of x^n ∓ 1 over F_9 for n in {5, 7}
        let f = f9();
        let ring = SkewPolyRing::new(f.clone());
        for n in [5usize, 7] {
            for alpha in [1i64, -1] {
                let m = ModulusSpec::new(n, f.from_int(alpha));
                let dual_m = ModulusSpec::new(n, f.inv(f.from_int(alpha)).unwrap());
                for d in 0..=3 {
                    for g in ring.right_divisor_search(&m, d, DEFAULT_SEARCH_BUDGET).unwrap() {
                        let e = ring.idempotent_generator(&g, &m).unwrap();
                        let code = ring.module_span(&g, &m);
                        let de = ring.dual_idempotent(&e, &m).unwrap();
                        let dual_span = ring.module_span(&de, &dual_m);
                        assert!(dual_span.same_as(&f, &code.dual(&f)), "n={n} α={alpha} g={g:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_assembly_examples() {
        let f = f49();
        let rr = RingR::new(f.clone());
        let ring = SkewPolyRing::new(f.clone());
        let g = ring.from_ints(&[1, 1]);
        let same = mixed_generator_assemble(&rr, [&g, &g, &g, &g]);
        assert_eq!(same, SkewPoly::new(vec![rr.one(), rr.one()]));

        let f4 = ring.from_ints(&[1, 4, 1]);
        let mixed = mixed_generator_assemble(&rr, [&g, &g, &g, &f4]);
        // (1 - uv)(x + 1) + uv(x² + 4x + 1)
        let expected = SkewPoly::new(vec![rr.one(), rr.from_ints(1, 0, 0, 3), rr.uv()]);
        assert_eq!(mixed, expected);
        assert_eq!(split_components(&rr, &mixed), [g.clone(), g.clone(), g, f4]);
    }

    #[test]
    fn mixed_assembly_f9_example() {
        let f = f9();
        let rr = RingR::new(f.clone());
        let a = f.root();
        let (z, one, two) = (Fe::default(), f.from_int(1), f.from_int(2));
        let f1 = SkewPoly::new(vec![two, a, z, f.mul(two, a), one]);
        let f4 = SkewPoly::new(vec![two, one, el(&f, &[1, 2]), one]);
        let mixed = mixed_generator_assemble(&rr, [&f1, &f1, &f1, &f4]);
        // (1 - uv) f1 + uv f4, coefficientwise
        let one_minus_uv = rr.from_ints(1, 0, 0, -1);
        let uv = rr.uv();
        for i in 0..5 {
            let expected = rr.add(
                rr.mul(one_minus_uv, rr.scalar(f1.coeff(i))),
                rr.mul(uv, rr.scalar(f4.coeff(i))),
            );
            assert_eq!(mixed.coeff(i), expected);
        }
    }

    #[test]
    fn ring_r_divisor_componentwise() {
        // g = x - 1 divides x^n - 1 over R as well
        let rr = RingR::new(f9());
        let ring = SkewPolyRing::new(rr.clone());
        let m = ModulusSpec::new(4, rr.one());
        assert!(ring.is_right_divisor(&ring.from_ints(&[-1, 1]), &m).unwrap());
    }

    #[test]
    fn identity_twist_is_commutative_product() {
        let f = GaloisField::new(crate::gf::FieldSpec::new(3, 2, vec![1, 0, 1], 2)).unwrap();
        let ring = SkewPolyRing::new(f.clone());
        let comm = SkewPolyRing::new(Untwisted(f.clone()));
        let a = f.root();
        let p = SkewPoly::new(vec![a, f.from_int(1), a]);
        let q = SkewPoly::new(vec![f.from_int(2), a]);
        assert_eq!(ring.mul(&p, &q), comm.mul(&p, &q));
        assert_eq!(ring.mul(&p, &q), ring.mul(&q, &p));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(q: u32, max_len: usize) -> impl Strategy<Value = SkewPoly<Fe>> {
            proptest::collection::vec(0..q, 0..max_len).prop_map(|v| SkewPoly::new(v.into_iter().map(Fe).collect()))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn division_contract(f in poly(25, 9), g in poly(25, 5)) {
                prop_assume!(!g.is_zero());
                let ring = SkewPolyRing::new(f25());
                let (q, r) = ring.right_divmod(&f, &g).unwrap();
                prop_assert_eq!(ring.add(&ring.mul(&q, &g), &r), f);
                prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
            }

            #[test]
            fn associativity_and_distributivity(a in poly(9, 5), b in poly(9, 5), c in poly(9, 5)) {
                let ring = SkewPolyRing::new(f9());
                prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
                prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
                prop_assert_eq!(ring.mul(&ring.add(&a, &b), &c), ring.add(&ring.mul(&a, &c), &ring.mul(&b, &c)));
            }
        }
    }
}
