//! The ring `R = F_q + uF_q + vF_q + uvF_q` with `u² = u`, `v² = v`, `uv = vu`.
//!
//! Elements are kept in the standard basis `a + ub + vc + uvd`. The orthogonal
//! idempotents
//!
//! ```text
//! e1 = 1 - u - v + uv,  e2 = u - uv,  e3 = v - uv,  e4 = uv
//! ```
//!
//! split `R ≅ F_q⁴` via `r ↦ (a, a+b, a+c, a+b+c+d)`. Multiplication, inversion
//! and the unit test all run through that split.

use serde::{Deserialize, Serialize};

use crate::algebra::CoeffRing;
use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};

/// `a + ub + vc + uvd`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RElem {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: Fe,
}

impl RElem {
    pub fn new(a: Fe, b: Fe, c: Fe, d: Fe) -> Self {
        RElem { a, b, c, d }
    }
}

/// Result of the unit test together with the four CRT components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitReport {
    pub is_unit: bool,
    pub components: [Fe; 4],
}

/// `R` over a fixed field. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingR {
    field: GaloisField,
}

impl RingR {
    pub fn new(field: GaloisField) -> Self {
        RingR { field }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    /// Embeds `x ∈ F_q` as `x + 0u + 0v + 0uv`.
    pub fn scalar(&self, x: Fe) -> RElem {
        RElem { a: x, ..Default::default() }
    }

    /// Builds `a + ub + vc + uvd` from integer coefficients in the prime field.
    pub fn from_ints(&self, a: i64, b: i64, c: i64, d: i64) -> RElem {
        let f = &self.field;
        RElem::new(f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d))
    }

    pub fn one(&self) -> RElem {
        self.from_ints(1, 0, 0, 0)
    }

    pub fn from_int(&self, c: i64) -> RElem {
        self.from_ints(c, 0, 0, 0)
    }

    pub fn u(&self) -> RElem {
        self.from_ints(0, 1, 0, 0)
    }
    pub fn v(&self) -> RElem {
        self.from_ints(0, 0, 1, 0)
    }
    pub fn uv(&self) -> RElem {
        self.from_ints(0, 0, 0, 1)
    }

    /// The CRT idempotent `e_i`, `i ∈ 1..=4`.
    pub fn idempotent(&self, i: usize) -> RElem {
        match i {
            1 => self.from_ints(1, -1, -1, 1),
            2 => self.from_ints(0, 1, 0, -1),
            3 => self.from_ints(0, 0, 1, -1),
            4 => self.from_ints(0, 0, 0, 1),
            _ => panic!("idempotent index {i} out of range 1..=4"),
        }
    }

    /// `(a, a+b, a+c, a+b+c+d)`.
    pub fn crt_split(&self, r: RElem) -> [Fe; 4] {
        let f = &self.field;
        let ab = f.add(r.a, r.b);
        [r.a, ab, f.add(r.a, r.c), f.add(ab, f.add(r.c, r.d))]
    }

    /// Inverse of [`crt_split`](Self::crt_split).
    pub fn crt_join(&self, r: [Fe; 4]) -> RElem {
        let f = &self.field;
        let [r1, r2, r3, r4] = r;
        RElem {
            a: r1,
            b: f.sub(r2, r1),
            c: f.sub(r3, r1),
            d: f.add(f.sub(f.sub(r4, r2), r3), r1),
        }
    }

    pub fn add(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d))
    }

    pub fn neg(&self, x: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.neg(x.a), f.neg(x.b), f.neg(x.c), f.neg(x.d))
    }

    pub fn sub(&self, x: RElem, y: RElem) -> RElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        let (xs, ys) = (self.crt_split(x), self.crt_split(y));
        self.crt_join([
            f.mul(xs[0], ys[0]),
            f.mul(xs[1], ys[1]),
            f.mul(xs[2], ys[2]),
            f.mul(xs[3], ys[3]),
        ])
    }

    /// Scalar multiplication by an element of `F_q`.
    pub fn scale(&self, s: Fe, x: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c), f.mul(s, x.d))
    }

    pub fn unit_report(&self, r: RElem) -> UnitReport {
        let components = self.crt_split(r);
        UnitReport {
            is_unit: components.iter().all(|c| c.value() != 0),
            components,
        }
    }

    pub fn is_unit(&self, r: RElem) -> bool {
        self.unit_report(r).is_unit
    }

    pub fn inv(&self, r: RElem) -> Result<RElem> {
        let f = &self.field;
        let s = self.crt_split(r);
        let mut out = [Fe::default(); 4];
        for i in 0..4 {
            out[i] = f.inv(s[i]).map_err(|_| Error::NotAUnit)?;
        }
        Ok(self.crt_join(out))
    }

    /// `θ_t^i` applied to each standard-basis coordinate.
    pub fn theta(&self, r: RElem, i: usize) -> RElem {
        let f = &self.field;
        RElem::new(
            f.frobenius(r.a, i),
            f.frobenius(r.b, i),
            f.frobenius(r.c, i),
            f.frobenius(r.d, i),
        )
    }

    /// `x^e` for `e ≥ 0`.
    pub fn pow(&self, x: RElem, e: u64) -> RElem {
        CoeffRing::pow(self, x, e)
    }

    /// Signed power, negative exponents need a unit.
    pub fn pow_signed(&self, x: RElem, e: i64) -> Result<RElem> {
        if e >= 0 {
            Ok(self.pow(x, e as u64))
        } else {
            Ok(self.pow(self.inv(x)?, e.unsigned_abs()))
        }
    }

    /// Readable form such as `1+2uv` over the root `a` of the field modulus.
    pub fn format(&self, r: RElem) -> String {
        let f = &self.field;
        let mut parts = Vec::new();
        for (coef, label) in [(r.a, ""), (r.b, "u"), (r.c, "v"), (r.d, "uv")] {
            if coef.value() == 0 {
                continue;
            }
            let c = f.format(coef);
            let term = match (c.as_str(), label) {
                (c, "") => c.to_string(),
                ("1", l) => l.to_string(),
                (c, l) if c.contains('+') => format!("({c}){l}"),
                (c, l) => format!("{c}{l}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl CoeffRing for RingR {
    type Elem = RElem;

    fn one(&self) -> RElem {
        RingR::one(self)
    }
    fn add(&self, x: RElem, y: RElem) -> RElem {
        RingR::add(self, x, y)
    }
    fn neg(&self, x: RElem) -> RElem {
        RingR::neg(self, x)
    }
    fn mul(&self, x: RElem, y: RElem) -> RElem {
        RingR::mul(self, x, y)
    }
    fn inv(&self, x: RElem) -> Option<RElem> {
        RingR::inv(self, x).ok()
    }
    fn twist(&self, x: RElem, i: usize) -> RElem {
        self.theta(x, i)
    }
    fn twist_order(&self) -> usize {
        self.field.k()
    }
    fn from_int(&self, c: i64) -> RElem {
        RingR::from_int(self, c)
    }
    fn size(&self) -> u64 {
        self.field.order().pow(4)
    }
    fn element(&self, idx: u64) -> RElem {
        let q = self.field.order();
        let f = &self.field;
        let e = |j: u32| f.elem(idx / q.pow(j) % q).unwrap();
        RElem::new(e(0), e(1), e(2), e(3))
    }
}
