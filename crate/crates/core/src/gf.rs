//! Arithmetic in `F_{p^m}` with the Frobenius twist `θ_t: x ↦ x^{p^t}`.
//!
//! Elements are stored in the power basis of a root of a user-supplied monic
//! irreducible modulus. The integer encoding of an element is `Σ digit_i · p^i`,
//! where `digit_0` is the constant coefficient. Multiplication goes through
//! discrete log / antilog tables built once per field; addition uses a full
//! table for small fields and digit-wise arithmetic above that.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::CoeffRing;
use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 20;
const ADD_TABLE_MAX: u64 = 1024;

/// Parameters of a finite field `F_{p^m}` and of its twist `θ_t`.
///
/// `modulus` lists coefficients in ascending powers, `modulus[m] = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u64>,
    pub t: usize,
}

impl FieldSpec {
    pub fn new(p: u64, m: usize, modulus: Vec<u64>, t: usize) -> Self {
        FieldSpec { p, m, modulus, t }
    }
}

/// An element of `F_q` in its integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    // frob[i][x] = x^(p^(t*i)), i in 0..k
    frob: Vec<Vec<u32>>,
}

/// A validated finite field. Cloning is cheap; tables are shared.
#[derive(Clone)]
pub struct GaloisField {
    spec: FieldSpec,
    q: u64,
    k: usize,
    tables: Arc<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.spec.p)
            .field("m", &self.spec.m)
            .field("modulus", &self.spec.modulus)
            .field("t", &self.spec.t)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for GaloisField {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, ascending coefficients, trimmed.
mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        let mut acc = 1;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            let shift = dr - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        rem(&out, f, p)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }
}

fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
    let m = modulus.len() - 1;
    if m == 1 {
        return true;
    }
    if m <= 3 {
        return (0..p).all(|a| fp::eval(modulus, a, p) != 0);
    }
    // gcd(x^(p^d) - x, f) = 1 for every d <= m/2
    let x = vec![0, 1];
    let mut power = x.clone();
    for _ in 1..=m / 2 {
        let mut next = vec![1u64];
        let mut base = power.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                next = fp::mul_mod(&next, &base, modulus, p);
            }
            base = fp::mul_mod(&base, &base, modulus, p);
            e >>= 1;
        }
        power = next;
        let mut diff = power.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = fp::gcd(modulus, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl GaloisField {
    /// Validates `spec` and builds the arithmetic tables.
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let FieldSpec { p, m, ref modulus, t } = spec;
        if p == 2 || !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m == 0 || modulus.len() != m + 1 || modulus[m] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus(m));
        }
        if t == 0 || m % t != 0 {
            return Err(Error::BadTwist { t, m });
        }
        let q = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let q = q as u64;
        if !is_irreducible(p, modulus) {
            return Err(Error::ReducibleModulus(p));
        }

        let encode = |digits: &[u64]| -> u32 {
            digits.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
        };
        let decode = |mut v: u64| -> Vec<u64> {
            let mut d = Vec::with_capacity(m);
            for _ in 0..m {
                d.push(v % p);
                v /= p;
            }
            fp::trim(d)
        };

        // Find a primitive element by walking its powers.
        let mut exp = Vec::new();
        for g in 1..q {
            let gd = decode(g);
            exp.clear();
            let mut cur = vec![1u64];
            let mut ok = true;
            for i in 0..(q - 1) {
                let e = encode(&cur);
                if i > 0 && e == 1 {
                    ok = false;
                    break;
                }
                exp.push(e);
                cur = fp::mul_mod(&cur, &gd, modulus, p);
            }
            if ok {
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }

        let add_digits = |x: u64, y: u64| -> u32 {
            let (mut x, mut y) = (x, y);
            let mut out = 0u64;
            let mut scale = 1u64;
            for _ in 0..m {
                out += ((x % p + y % p) % p) * scale;
                x /= p;
                y /= p;
                scale *= p;
            }
            out as u32
        };
        let neg: Vec<u32> = (0..q)
            .map(|x| {
                let d = decode(x);
                let nd: Vec<u64> = d.iter().map(|&c| (p - c) % p).collect();
                encode(&nd)
            })
            .collect();
        let add = if q <= ADD_TABLE_MAX {
            let mut tab = vec![0u32; (q * q) as usize];
            for x in 0..q {
                for y in 0..q {
                    tab[(x * q + y) as usize] = add_digits(x, y);
                }
            }
            Some(tab)
        } else {
            None
        };

        let k = m / t;
        let pt = p.pow(t as u32);
        let mut frob = vec![(0..q as u32).collect::<Vec<u32>>()];
        for i in 1..k {
            let prev = &frob[i - 1];
            let row: Vec<u32> = (0..q as usize)
                .map(|x| {
                    let y = prev[x];
                    if y == 0 {
                        0
                    } else {
                        let l = (log[y as usize] as u64 * pt) % (q - 1);
                        exp[l as usize]
                    }
                })
                .collect();
            frob.push(row);
        }

        Ok(GaloisField {
            spec,
            q,
            k,
            tables: Arc::new(Tables { exp, log, neg, add, frob }),
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn order(&self) -> u64 {
        self.q
    }
    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }
    pub fn degree(&self) -> usize {
        self.spec.m
    }
    pub fn t(&self) -> usize {
        self.spec.t
    }
    /// Order `k = m/t` of `θ_t`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Checked conversion from the integer encoding.
    pub fn elem(&self, v: u64) -> Result<Fe> {
        if v < self.q {
            Ok(Fe(v as u32))
        } else {
            Err(Error::BadElement(v))
        }
    }

    /// The root of the modulus (the power-basis generator).
    pub fn root(&self) -> Fe {
        if self.spec.m == 1 {
            // x - c = 0 gives root -c
            Fe(((self.spec.p - self.spec.modulus[0]) % self.spec.p) as u32)
        } else {
            Fe(self.spec.p as u32)
        }
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Fe> {
        if digits.len() > self.spec.m {
            return Err(Error::BadElement(digits.len() as u64));
        }
        let p = self.spec.p;
        let v = digits.iter().rev().fold(0u64, |acc, &d| acc * p + d % p);
        Ok(Fe(v as u32))
    }

    pub fn digits(&self, x: Fe) -> Vec<u64> {
        let p = self.spec.p;
        let mut v = x.0 as u64;
        (0..self.spec.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q as u32).map(Fe)
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        match &self.tables.add {
            Some(tab) => Fe(tab[x.0 as usize * self.q as usize + y.0 as usize]),
            None => {
                let p = self.spec.p;
                let (mut a, mut b) = (x.0 as u64, y.0 as u64);
                let mut out = 0u64;
                let mut scale = 1u64;
                while a > 0 || b > 0 {
                    out += ((a % p + b % p) % p) * scale;
                    a /= p;
                    b /= p;
                    scale *= p;
                }
                Fe(out as u32)
            }
        }
    }

    #[inline]
    pub fn neg(&self, x: Fe) -> Fe {
        Fe(self.tables.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        if x.0 == 0 || y.0 == 0 {
            return Fe(0);
        }
        let t = &self.tables;
        let l = (t.log[x.0 as usize] as u64 + t.log[y.0 as usize] as u64) % (self.q - 1);
        Fe(t.exp[l as usize])
    }

    pub fn inv(&self, x: Fe) -> Result<Fe> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &self.tables;
        let l = (self.q - 1 - t.log[x.0 as usize] as u64) % (self.q - 1);
        Ok(Fe(t.exp[l as usize]))
    }

    pub fn div(&self, x: Fe, y: Fe) -> Result<Fe> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` for a signed exponent; negative exponents need `x ≠ 0`.
    pub fn pow(&self, x: Fe, e: i64) -> Result<Fe> {
        if x.0 == 0 {
            return match e {
                0 => Ok(Fe(1)),
                e if e > 0 => Ok(Fe(0)),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.q - 1) as i64;
        let l = (self.tables.log[x.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Ok(Fe(self.tables.exp[l as usize]))
    }

    /// `θ_t^i(x) = x^{p^{t·i}}`.
    #[inline]
    pub fn frobenius(&self, x: Fe, i: usize) -> Fe {
        Fe(self.tables.frob[i % self.k][x.0 as usize])
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> Fe {
        Fe(c.rem_euclid(self.spec.p as i64) as u32)
    }

    /// Human-readable form in terms of the root `a`, e.g. `2a+1`.
    pub fn format(&self, x: Fe) -> String {
        let d = self.digits(x);
        let mut terms = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl CoeffRing for GaloisField {
    type Elem = Fe;

    fn one(&self) -> Fe {
        Fe(1)
    }
    fn add(&self, x: Fe, y: Fe) -> Fe {
        GaloisField::add(self, x, y)
    }
    fn neg(&self, x: Fe) -> Fe {
        GaloisField::neg(self, x)
    }
    fn mul(&self, x: Fe, y: Fe) -> Fe {
        GaloisField::mul(self, x, y)
    }
    fn inv(&self, x: Fe) -> Option<Fe> {
        GaloisField::inv(self, x).ok()
    }
    fn twist(&self, x: Fe, i: usize) -> Fe {
        self.frobenius(x, i)
    }
    fn twist_order(&self) -> usize {
        self.k
    }
    fn from_int(&self, c: i64) -> Fe {
        GaloisField::from_int(self, c)
    }
    fn size(&self) -> u64 {
        self.q
    }
    fn element(&self, idx: u64) -> Fe {
        Fe(idx as u32)
    }
}
