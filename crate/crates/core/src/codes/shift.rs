//! Shift operators on words over a coefficient ring.

use serde::{Deserialize, Serialize};

use crate::algebra::CoeffRing;
use crate::error::{Error, Result};

/// A coordinate shift on `A^len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftKind<E> {
    /// `(c_0..c_{n-1}) ↦ (θ(c_{n-1}), θ(c_0), …, θ(c_{n-2}))`.
    Sigma,
    /// `(c_0..c_{n-1}) ↦ (α θ(c_{n-1}), θ(c_0), …, θ(c_{n-2}))`.
    Tau(E),
    /// `σ` applied to each of `l` consecutive blocks of equal length.
    Pi(usize),
    /// `τ` applied blockwise, one constant per block.
    Omega(Vec<E>),
    /// `(c_0..c_{n-1}) ↦ (α c_{n-1}, c_0, …, c_{n-2})`, no automorphism.
    Constacyclic(E),
    /// Cyclic shift by `l` positions, wrapped entries scaled by `α`, no automorphism.
    QuasiTwist { l: usize, alpha: E },
}

fn twisted_rotate<C: CoeffRing>(ring: &C, alpha: C::Elem, w: &[C::Elem]) -> Vec<C::Elem> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(ring.mul(alpha, ring.twist(w[n - 1], 1)));
    out.extend(w[..n - 1].iter().map(|&c| ring.twist(c, 1)));
    out
}

fn blockwise<C: CoeffRing>(
    ring: &C,
    w: &[C::Elem],
    consts: impl ExactSizeIterator<Item = C::Elem>,
) -> Result<Vec<C::Elem>> {
    let l = consts.len();
    if l == 0 || w.len() % l != 0 {
        return Err(Error::BadIndex(l));
    }
    let size = w.len() / l;
    let mut out = Vec::with_capacity(w.len());
    for (block, alpha) in w.chunks(size.max(1)).zip(consts) {
        out.extend(twisted_rotate(ring, alpha, block));
    }
    Ok(out)
}

/// Image of `w` under the shift.
pub fn apply_shift<C: CoeffRing>(ring: &C, kind: &ShiftKind<C::Elem>, w: &[C::Elem]) -> Result<Vec<C::Elem>> {
    let n = w.len();
    match kind {
        ShiftKind::Sigma => Ok(twisted_rotate(ring, ring.one(), w)),
        ShiftKind::Tau(alpha) => Ok(twisted_rotate(ring, *alpha, w)),
        ShiftKind::Pi(l) => blockwise(ring, w, std::iter::repeat_n(ring.one(), *l)),
        ShiftKind::Omega(consts) => blockwise(ring, w, consts.iter().copied()),
        ShiftKind::Constacyclic(alpha) => {
            apply_shift(ring, &ShiftKind::QuasiTwist { l: 1, alpha: *alpha }, w)
        }
        ShiftKind::QuasiTwist { l, alpha } => {
            let l = *l;
            if l == 0 || n % l != 0 {
                return Err(Error::BadIndex(l));
            }
            let mut out = Vec::with_capacity(n);
            out.extend(w[n - l..].iter().map(|&c| ring.mul(*alpha, c)));
            out.extend_from_slice(&w[..n - l]);
            Ok(out)
        }
    }
}

/// `(c_0, …, c_{n-1}) ↦ (c_0, α c_1, …, α^{n-1} c_{n-1})`.
pub fn mu_permute<C: CoeffRing>(ring: &C, w: &[C::Elem], alpha: C::Elem) -> Result<Vec<C::Elem>> {
    if !ring.is_unit(alpha) {
        return Err(Error::NotAUnit);
    }
    let mut pw = ring.one();
    Ok(w.iter()
        .map(|&c| {
            let out = ring.mul(pw, c);
            pw = ring.mul(pw, alpha);
            out
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::tests::f9;
    use crate::gf::Fe;
    use crate::ring4::RingR;
    use proptest::prelude::*;

    #[test]
    fn sigma_example_f9() {
        let f = f9();
        let a = f.root();
        let w = [a, f.from_int(1), Fe::default()];
        let out = apply_shift(&f, &ShiftKind::Sigma, &w).unwrap();
        assert_eq!(out, vec![Fe::default(), f.mul(f.from_int(2), a), f.from_int(1)]);
    }

    #[test]
    fn quasi_twist_and_errors() {
        let f = f9();
        let w: Vec<Fe> = (1..=6).map(|i| f.from_int(i)).collect();
        let m1 = f.from_int(-1);
        let out = apply_shift(&f, &ShiftKind::QuasiTwist { l: 2, alpha: m1 }, &w).unwrap();
        let expect: Vec<Fe> = [-5, -6, 1, 2, 3, 4].iter().map(|&i| f.from_int(i)).collect();
        assert_eq!(out, expect);
        assert_eq!(apply_shift(&f, &ShiftKind::Pi(4), &w), Err(Error::BadIndex(4)));
        assert_eq!(
            apply_shift(&f, &ShiftKind::QuasiTwist { l: 4, alpha: m1 }, &w),
            Err(Error::BadIndex(4))
        );
        assert_eq!(apply_shift(&f, &ShiftKind::Omega(vec![]), &w), Err(Error::BadIndex(0)));
    }

    #[test]
    fn mu_examples() {
        let f = f9();
        let one = f.from_int(1);
        let m1 = f.from_int(-1);
        assert_eq!(mu_permute(&f, &[one, one, one], m1).unwrap(), vec![one, m1, one]);
        assert_eq!(mu_permute(&f, &[one, m1, one], one).unwrap(), vec![one, m1, one]);
        assert_eq!(mu_permute(&f, &[one], Fe::default()), Err(Error::NotAUnit));
    }

    fn fvec(len: usize) -> impl Strategy<Value = Vec<Fe>> {
        proptest::collection::vec((0u32..9).prop_map(Fe), len)
    }

    proptest! {
        #[test]
        fn tau_one_is_sigma(w in fvec(7)) {
            let f = f9();
            prop_assert_eq!(
                apply_shift(&f, &ShiftKind::Tau(f.from_int(1)), &w).unwrap(),
                apply_shift(&f, &ShiftKind::Sigma, &w).unwrap()
            );
        }

        #[test]
        fn omega_single_block_is_tau(w in fvec(5), a in 1u32..9) {
            let f = f9();
            prop_assert_eq!(
                apply_shift(&f, &ShiftKind::Omega(vec![Fe(a)]), &w).unwrap(),
                apply_shift(&f, &ShiftKind::Tau(Fe(a)), &w).unwrap()
            );
        }

        #[test]
        fn omega_acts_per_block(w in fvec(12), a in 1u32..9) {
            let f = f9();
            let consts = vec![Fe(a), f.from_int(1), f.from_int(-1), Fe(a)];
            let out = apply_shift(&f, &ShiftKind::Omega(consts.clone()), &w).unwrap();
            for (i, c) in consts.into_iter().enumerate() {
                let block = apply_shift(&f, &ShiftKind::Tau(c), &w[3 * i..3 * i + 3]).unwrap();
                prop_assert_eq!(&out[3 * i..3 * i + 3], &block[..]);
            }
        }

        #[test]
        fn sigma_on_r_is_componentwise(raw in proptest::collection::vec((0u32..9, 0u32..9, 0u32..9, 0u32..9), 4)) {
            let rr = RingR::new(f9());
            let w: Vec<_> = raw.iter().map(|&(a, b, c, d)| crate::ring4::RElem::new(Fe(a), Fe(b), Fe(c), Fe(d))).collect();
            let out = apply_shift(&rr, &ShiftKind::Sigma, &w).unwrap();
            for i in 0..4 {
                let comp: Vec<Fe> = w.iter().map(|&r| rr.crt_split(r)[i]).collect();
                let shifted: Vec<Fe> = out.iter().map(|&r| rr.crt_split(r)[i]).collect();
                prop_assert_eq!(shifted, apply_shift(rr.field(), &ShiftKind::Sigma, &comp).unwrap());
            }
        }
    }
}
