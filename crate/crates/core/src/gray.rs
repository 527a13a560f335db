//! The Gray map `Ψ(a + ub + vc + uvd) = (a, a+b, a+c, a+b+c+d)` and its permuted form.
//!
//! On words of length `n` the image is laid out in four blocks of length `n`,
//! which are exactly the four CRT component vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::{apply_shift, ShiftKind, SkewCode};
use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::ring4::{RElem, RingR};

pub fn gray(ring: &RingR, w: &[RElem]) -> Vec<Fe> {
    let n = w.len();
    let mut out = vec![Fe::default(); 4 * n];
    for (i, &r) in w.iter().enumerate() {
        for (b, x) in ring.crt_split(r).into_iter().enumerate() {
            out[b * n + i] = x;
        }
    }
    out
}

pub fn gray_inverse(ring: &RingR, v: &[Fe]) -> Result<Vec<RElem>> {
    if !v.len().is_multiple_of(4) {
        return Err(Error::BadIndex(4));
    }
    let n = v.len() / 4;
    Ok((0..n)
        .map(|i| ring.crt_join([v[i], v[n + i], v[2 * n + i], v[3 * n + i]]))
        .collect())
}

/// Coordinate `i` contributes `Ψ(w_i)` at positions `4i..4i+4`.
pub fn gray_permuted(ring: &RingR, w: &[RElem]) -> Vec<Fe> {
    w.iter().flat_map(|&r| ring.crt_split(r)).collect()
}

pub fn lee_weight(ring: &RingR, r: RElem) -> usize {
    ring.crt_split(r).iter().filter(|x| x.value() != 0).count()
}

pub fn lee_weight_word(ring: &RingR, w: &[RElem]) -> usize {
    w.iter().map(|&r| lee_weight(ring, r)).sum()
}

/// Generator matrix of `Ψ(C)` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrayImage {
    pub length: usize,
    pub rows: Vec<Vec<Fe>>,
}

impl GrayImage {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }
}

/// `Ψ` of each basis word of the code, in basis order.
pub fn gray_image_code(code: &SkewCode) -> GrayImage {
    GrayImage {
        length: 4 * code.n(),
        rows: code.basis().iter().map(|w| gray(code.ring(), w)).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `Ψ σ = π_4 Ψ`.
    SigmaPi4,
    /// `Ψ τ_α = ω_4 Ψ`, with the blocks of `ω_4` using the CRT components of `α`.
    TauOmega4,
    /// `Ψ_π σ = σ⁴ Ψ_π`, valid when `θ` has order 3.
    PermutedSigma4,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::SigmaPi4 => "sigma_pi4",
            Identity::TauOmega4 => "tau_omega4",
            Identity::PermutedSigma4 => "permuted_sigma4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub identity: Identity,
    pub n: usize,
    pub alpha: RElem,
    pub trials: usize,
    pub pass: bool,
    pub counterexample: Option<Vec<RElem>>,
}

fn random_word(rng: &mut ChaCha8Rng, q: u32, n: usize) -> Vec<RElem> {
    (0..n)
        .map(|_| {
            let mut e = || Fe(rng.gen_range(0..q));
            RElem::new(e(), e(), e(), e())
        })
        .collect()
}

/// Tests the operator identity on `trials` words drawn from a seeded generator.
pub fn check_commutation(
    which: Identity,
    field: &GaloisField,
    n: usize,
    alpha: RElem,
    trials: usize,
    seed: u64,
) -> Result<CommutationReport> {
    let ring = RingR::new(field.clone());
    if which == Identity::PermutedSigma4 && field.k() != 3 {
        return Err(Error::HypothesisViolated(format!("θ has order {}, the identity needs 3", field.k())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order() as u32;
    let mut counterexample = None;
    for _ in 0..trials {
        let w = random_word(&mut rng, q, n);
        let (lhs, rhs) = match which {
            Identity::SigmaPi4 => (
                gray(&ring, &apply_shift(&ring, &ShiftKind::Sigma, &w)?),
                apply_shift(field, &ShiftKind::Pi(4), &gray(&ring, &w))?,
            ),
            Identity::TauOmega4 => (
                gray(&ring, &apply_shift(&ring, &ShiftKind::Tau(alpha), &w)?),
                apply_shift(field, &ShiftKind::Omega(omega_constants(&ring, alpha)), &gray(&ring, &w))?,
            ),
            Identity::PermutedSigma4 => {
                let mut image = gray_permuted(&ring, &w);
                for _ in 0..4 {
                    image = apply_shift(field, &ShiftKind::Sigma, &image)?;
                }
                (gray_permuted(&ring, &apply_shift(&ring, &ShiftKind::Sigma, &w)?), image)
            }
        };
        if lhs != rhs {
            counterexample = Some(w);
            break;
        }
    }
    Ok(CommutationReport {
        identity: which,
        n,
        alpha,
        trials,
        pass: counterexample.is_none(),
        counterexample,
    })
}

/// Whether the span of `rows` is closed under an `F_q` shift.
pub fn rows_closed_under(field: &GaloisField, length: usize, rows: &[Vec<Fe>], kind: &ShiftKind<Fe>) -> Result<bool> {
    let span = crate::linalg::Subspace::span(field, length, rows);
    for r in rows {
        if !span.contains(field, &apply_shift(field, kind, r)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Block constants of the `ω_4` that matches `τ_α` under `Ψ`.
pub fn omega_constants(ring: &RingR, alpha: RElem) -> Vec<Fe> {
    ring.crt_split(alpha).to_vec()
}
