//! The coefficient-ring abstraction shared by `F_q` and `R`.

use std::fmt::Debug;
use std::hash::Hash;

/// A finite commutative ring equipped with an automorphism `θ` of finite order.
///
/// Elements are small `Copy` values; `Default::default()` must be the zero element.
/// All arithmetic goes through the ring object, which owns the lookup tables.
pub trait CoeffRing: Clone {
    type Elem: Copy + Eq + Hash + Debug + Default;

    fn zero(&self) -> Self::Elem {
        Self::Elem::default()
    }
    fn one(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn neg(&self, x: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self, x: Self::Elem) -> Option<Self::Elem>;
    /// `θ^i(x)`.
    fn twist(&self, x: Self::Elem, i: usize) -> Self::Elem;
    /// Order of `θ`.
    fn twist_order(&self) -> usize;
    /// Image of an integer under `Z -> ring`.
    fn from_int(&self, c: i64) -> Self::Elem;
    /// Number of elements.
    fn size(&self) -> u64;
    /// The `idx`-th element in the canonical enumeration, `idx < size()`.
    fn element(&self, idx: u64) -> Self::Elem;

    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.add(x, self.neg(y))
    }
    fn is_zero(&self, x: Self::Elem) -> bool {
        x == Self::Elem::default()
    }
    fn is_unit(&self, x: Self::Elem) -> bool {
        self.inv(x).is_some()
    }
    fn pow(&self, x: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// The same ring with `θ` replaced by the identity; gives commutative polynomial rings.
#[derive(Clone, Debug)]
pub struct Untwisted<C>(pub C);

impl<C: CoeffRing> CoeffRing for Untwisted<C> {
    type Elem = C::Elem;

    fn one(&self) -> Self::Elem {
        self.0.one()
    }
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.0.add(x, y)
    }
    fn neg(&self, x: Self::Elem) -> Self::Elem {
        self.0.neg(x)
    }
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.0.mul(x, y)
    }
    fn inv(&self, x: Self::Elem) -> Option<Self::Elem> {
        self.0.inv(x)
    }
    fn twist(&self, x: Self::Elem, _i: usize) -> Self::Elem {
        x
    }
    fn twist_order(&self) -> usize {
        1
    }
    fn from_int(&self, c: i64) -> Self::Elem {
        self.0.from_int(c)
    }
    fn size(&self) -> u64 {
        self.0.size()
    }
    fn element(&self, idx: u64) -> Self::Elem {
        self.0.element(idx)
    }
}
