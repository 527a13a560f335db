//! Minimum Hamming distance of a linear code over `F_q`.
//!
//! Small codes are enumerated message by message. Larger ones are handled by a
//! weight sweep: every word of weight `w = 1, 2, …` is tested against the
//! parity-check matrix until a codeword turns up, which certifies both the
//! absence of lighter words and the exact distance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, GaloisField};
use crate::linalg::Subspace;

pub const DEFAULT_DISTANCE_BUDGET: u128 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    Enumeration,
    WeightSweep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    /// Exact distance when certified.
    pub exact: Option<usize>,
    /// `[lo, hi]`; equal to `[d, d]` when exact.
    pub bounds: [usize; 2],
    pub method: DistanceMethod,
    /// A codeword of weight `bounds[1]`, lexicographically least among those the method visits first.
    pub witness: Option<Vec<Fe>>,
    /// Words examined. For the sweep: all words of weight `1..d` (the absence certificate).
    pub candidates: u128,
}

pub fn hamming_weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| x.value() != 0).count()
}

/// `Σ_{w=1}^{upto} C(len, w) (q-1)^w`.
pub fn sweep_size(len: usize, q: u64, upto: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    let mut pw = 1u128;
    for w in 1..=upto.min(len) {
        binom = binom * (len - w + 1) as u128 / w as u128;
        pw *= (q - 1) as u128;
        total += binom * pw;
    }
    total
}

/// Minimum distance of the code spanned by `rows` (length `len`).
pub fn min_distance(field: &GaloisField, len: usize, rows: &[Vec<Fe>], budget: u128) -> Result<DistanceReport> {
    let code = Subspace::span(field, len, rows);
    if code.is_empty() {
        return Err(Error::ZeroCode);
    }
    let q = field.order() as u128;
    let messages = q.checked_pow(code.dim() as u32);
    match messages {
        Some(m) if m <= budget => Ok(enumerate(field, &code)),
        _ => Ok(sweep(field, &code, budget)),
    }
}

fn enumerate(field: &GaloisField, code: &Subspace) -> DistanceReport {
    let q = field.order();
    let len = code.len();
    let rows = code.rows();
    let elems: Vec<Fe> = field.elements().collect();
    let mut digits = vec![0u64; rows.len()];
    let mut word = vec![Fe::default(); len];
    let mut best: Option<(usize, Vec<Fe>)> = None;
    let mut count = 0u128;
    'outer: loop {
        // odometer step, keeping `word = Σ digit_i · row_i`
        let mut i = rows.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            let old = elems[digits[i] as usize];
            digits[i] = (digits[i] + 1) % q;
            let delta = field.sub(elems[digits[i] as usize], old);
            for (x, &r) in word.iter_mut().zip(&rows[i]) {
                *x = field.add(*x, field.mul(delta, r));
            }
            if digits[i] != 0 {
                break;
            }
        }
        count += 1;
        let w = hamming_weight(&word);
        if w > 0 && best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w, word.clone()));
        }
    }
    let (d, witness) = best.expect("nonzero code");
    DistanceReport {
        exact: Some(d),
        bounds: [d, d],
        method: DistanceMethod::Enumeration,
        witness: Some(witness),
        candidates: count,
    }
}

struct Sweep<'a> {
    field: &'a GaloisField,
    /// `scaled[j][λ-1] = λ · H[:, j]` for the nonzero elements `λ` in encoding order.
    scaled: Vec<Vec<Vec<Fe>>>,
    nonzero: Vec<Fe>,
    len: usize,
    count: u128,
    budget: u128,
    support: Vec<(usize, Fe)>,
}

enum Outcome {
    Found(Vec<(usize, Fe)>),
    Exhausted,
    OutOfBudget,
}

impl Sweep<'_> {
    fn search(&mut self, start: usize, left: usize, syndrome: &[Fe]) -> Outcome {
        if left == 0 {
            self.count += 1;
            if syndrome.iter().all(|s| s.value() == 0) {
                return Outcome::Found(self.support.clone());
            }
            return Outcome::Exhausted;
        }
        if self.count > self.budget {
            return Outcome::OutOfBudget;
        }
        for j in start..=self.len - left {
            for li in 0..self.nonzero.len() {
                let next: Vec<Fe> = syndrome
                    .iter()
                    .zip(&self.scaled[j][li])
                    .map(|(&s, &c)| self.field.add(s, c))
                    .collect();
                self.support.push((j, self.nonzero[li]));
                let r = self.search(j + 1, left - 1, &next);
                self.support.pop();
                match r {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }
        Outcome::Exhausted
    }
}

fn sweep(field: &GaloisField, code: &Subspace, budget: u128) -> DistanceReport {
    let len = code.len();
    let h = code.parity_check(field);
    let nonzero: Vec<Fe> = field.elements().skip(1).collect();
    let scaled = (0..len)
        .map(|j| {
            nonzero
                .iter()
                .map(|&l| h.iter().map(|row| field.mul(l, row[j])).collect())
                .collect()
        })
        .collect();
    let upper_rows = code.rows().iter().map(|r| hamming_weight(r)).min().unwrap_or(len);
    let upper = upper_rows.min(len - code.dim() + 1);
    let mut s = Sweep {
        field,
        scaled,
        nonzero,
        len,
        count: 0,
        budget,
        support: Vec::new(),
    };
    let zero = vec![Fe::default(); h.len()];
    let mut absent = 0u128;
    for w in 1..=len {
        match s.search(0, w, &zero) {
            Outcome::Found(support) => {
                let mut word = vec![Fe::default(); len];
                for (j, v) in support {
                    word[j] = v;
                }
                return DistanceReport {
                    exact: Some(w),
                    bounds: [w, w],
                    method: DistanceMethod::WeightSweep,
                    witness: Some(word),
                    candidates: absent,
                };
            }
            Outcome::Exhausted => absent = s.count,
            Outcome::OutOfBudget => {
                return DistanceReport {
                    exact: None,
                    bounds: [w, upper.max(w)],
                    method: DistanceMethod::WeightSweep,
                    witness: None,
                    candidates: absent,
                };
            }
        }
    }
    unreachable!("a nonzero code has a codeword of weight at most its length")
}
