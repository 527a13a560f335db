//! Serde-facing forms of fields, elements, polynomials and code specifications.
//!
//! Field elements are integers `Σ digit_i p^i` over the power basis. Ring elements
//! are `{a,b,c,d}`, `{crt:[..]}` or a bare field element (a scalar). Polynomials
//! list coefficients in ascending powers.

use serde::{Deserialize, Serialize};

use crate::codes::SkewCode;
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldSpec, GaloisField};
use crate::ring4::{RElem, RingR};
use crate::skewpoly::SkewPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingElemJson {
    Scalar(u64),
    Crt { crt: [u64; 4] },
    Std { a: u64, b: u64, c: u64, d: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "fq")]
    Fq,
    #[serde(rename = "R")]
    R,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub ring: RingTag,
    pub coeffs: Vec<RingElemJson>,
}

/// `{field, n, alpha, gens:[4 polys]}` or `{field, n, alpha, generator: poly}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecJson {
    pub field: FieldSpec,
    pub n: usize,
    pub alpha: RingElemJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<PolyJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<PolyJson>,
}

pub fn decode_field(spec: &FieldSpec) -> Result<GaloisField> {
    GaloisField::new(spec.clone())
}

pub fn decode_elem(field: &GaloisField, v: &RingElemJson) -> Result<Fe> {
    match v {
        RingElemJson::Scalar(x) => field.elem(*x),
        _ => Err(Error::Inconsistent("expected a field element".into())),
    }
}

pub fn decode_relem(ring: &RingR, v: &RingElemJson) -> Result<RElem> {
    let f = ring.field();
    match v {
        RingElemJson::Scalar(x) => Ok(ring.scalar(f.elem(*x)?)),
        RingElemJson::Crt { crt } => {
            let parts = [f.elem(crt[0])?, f.elem(crt[1])?, f.elem(crt[2])?, f.elem(crt[3])?];
            Ok(ring.crt_join(parts))
        }
        RingElemJson::Std { a, b, c, d } => Ok(RElem::new(f.elem(*a)?, f.elem(*b)?, f.elem(*c)?, f.elem(*d)?)),
    }
}

pub fn encode_relem(r: RElem) -> RingElemJson {
    RingElemJson::Std {
        a: r.a.value() as u64,
        b: r.b.value() as u64,
        c: r.c.value() as u64,
        d: r.d.value() as u64,
    }
}

pub fn decode_fq_poly(field: &GaloisField, p: &PolyJson) -> Result<SkewPoly<Fe>> {
    if p.ring != RingTag::Fq {
        return Err(Error::MixedRings);
    }
    Ok(SkewPoly::new(p.coeffs.iter().map(|c| decode_elem(field, c)).collect::<Result<_>>()?))
}

/// Accepts both tags; an `fq` polynomial is embedded as scalars.
pub fn decode_r_poly(ring: &RingR, p: &PolyJson) -> Result<SkewPoly<RElem>> {
    Ok(SkewPoly::new(p.coeffs.iter().map(|c| decode_relem(ring, c)).collect::<Result<_>>()?))
}

pub fn encode_fq_poly(f: &SkewPoly<Fe>) -> PolyJson {
    PolyJson {
        ring: RingTag::Fq,
        coeffs: f.coeffs().iter().map(|c| RingElemJson::Scalar(c.value() as u64)).collect(),
    }
}

pub fn encode_r_poly(f: &SkewPoly<RElem>) -> PolyJson {
    PolyJson { ring: RingTag::R, coeffs: f.coeffs().iter().map(|&c| encode_relem(c)).collect() }
}

impl CodeSpecJson {
    pub fn build(&self) -> Result<SkewCode> {
        let field = decode_field(&self.field)?;
        let ring = RingR::new(field.clone());
        let alpha = decode_relem(&ring, &self.alpha)?;
        match (&self.gens, &self.generator) {
            (Some(gens), None) => {
                if gens.len() != 4 {
                    return Err(Error::LengthMismatch { expected: 4, got: gens.len() });
                }
                let polys = gens.iter().map(|g| decode_fq_poly(&field, g)).collect::<Result<Vec<_>>>()?;
                let polys: [SkewPoly<Fe>; 4] = polys.try_into().expect("length checked");
                SkewCode::build(field, self.n, alpha, polys)
            }
            (None, Some(g)) => {
                let g = decode_r_poly(&ring, g)?;
                SkewCode::from_generator(field, self.n, alpha, &g)
            }
            _ => Err(Error::Inconsistent("give exactly one of `gens` and `generator`".into())),
        }
    }

    pub fn from_code(code: &SkewCode) -> Self {
        CodeSpecJson {
            field: code.field().spec().clone(),
            n: code.n(),
            alpha: encode_relem(code.alpha()),
            gens: Some(code.gens().iter().map(encode_fq_poly).collect()),
            generator: None,
        }
    }
}
