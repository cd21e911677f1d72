//! 2x2 matrices and affine maps over GF(q).

use serde::Serialize;

use crate::gf::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// A vector of GF(q)^2 as `(x, y)`.
pub type Point = (FieldElement, FieldElement);

/// Row-major `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Matrix2x2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Matrix2x2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Matrix2x2 { a, b, c, d }
    }

    pub fn identity(s: &FieldSpec) -> Self {
        Self::scalar(s.one(), s)
    }

    pub fn scalar(k: FieldElement, s: &FieldSpec) -> Self {
        Matrix2x2 {
            a: k,
            b: s.zero(),
            c: s.zero(),
            d: k,
        }
    }

    /// Matrix with the given entry codes, row-major.
    pub fn from_codes(codes: [u32; 4], s: &FieldSpec) -> Result<Self> {
        Ok(Matrix2x2 {
            a: s.element(codes[0])?,
            b: s.element(codes[1])?,
            c: s.element(codes[2])?,
            d: s.element(codes[3])?,
        })
    }

    pub fn codes(&self) -> [u32; 4] {
        [self.a.code(), self.b.code(), self.c.code(), self.d.code()]
    }

    pub fn mul(&self, o: &Matrix2x2, s: &FieldSpec) -> Matrix2x2 {
        let dot = |x: FieldElement, y: FieldElement, z: FieldElement, w: FieldElement| {
            s.add_unchecked(s.mul_unchecked(x, y), s.mul_unchecked(z, w))
        };
        Matrix2x2 {
            a: dot(self.a, o.a, self.b, o.c),
            b: dot(self.a, o.b, self.b, o.d),
            c: dot(self.c, o.a, self.d, o.c),
            d: dot(self.c, o.b, self.d, o.d),
        }
    }

    pub fn det(&self, s: &FieldSpec) -> FieldElement {
        let ad = s.mul_unchecked(self.a, self.d);
        let bc = s.mul_unchecked(self.b, self.c);
        s.add_unchecked(ad, s.neg_unchecked(bc))
    }

    pub fn is_invertible(&self, s: &FieldSpec) -> bool {
        !self.det(s).is_zero()
    }

    pub fn pow(&self, mut e: u64, s: &FieldSpec) -> Matrix2x2 {
        let mut acc = Matrix2x2::identity(s);
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, s);
            }
            base = base.mul(&base, s);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order by repeated multiplication; `None` when singular.
    pub fn order(&self, s: &FieldSpec) -> Option<u64> {
        if !self.is_invertible(s) {
            return None;
        }
        let id = Matrix2x2::identity(s);
        let mut x = *self;
        let mut m = 1;
        while x != id {
            x = x.mul(self, s);
            m += 1;
        }
        Some(m)
    }

    pub fn apply(&self, v: Point, s: &FieldSpec) -> Point {
        let x = s.add_unchecked(s.mul_unchecked(self.a, v.0), s.mul_unchecked(self.b, v.1));
        let y = s.add_unchecked(s.mul_unchecked(self.c, v.0), s.mul_unchecked(self.d, v.1));
        (x, y)
    }
}

/// The affine transformation `v -> A v + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMap {
    pub b: Point,
    pub a: Matrix2x2,
}

impl AffineMap {
    pub fn new(b: Point, a: Matrix2x2, s: &FieldSpec) -> Result<Self> {
        if !a.is_invertible(s) {
            return Err(Error::SingularMatrix);
        }
        Ok(AffineMap { b, a })
    }

    pub fn translation(b: Point, s: &FieldSpec) -> Self {
        AffineMap {
            b,
            a: Matrix2x2::identity(s),
        }
    }

    pub fn linear(a: Matrix2x2, s: &FieldSpec) -> Result<Self> {
        Self::new((s.zero(), s.zero()), a, s)
    }

    pub fn apply(&self, v: Point, s: &FieldSpec) -> Point {
        let (x, y) = self.a.apply(v, s);
        (s.add_unchecked(x, self.b.0), s.add_unchecked(y, self.b.1))
    }

    /// Functional product `(a, A)(b, B) = (a + A b, A B)`: `other` acts first.
    pub fn mul(&self, other: &AffineMap, s: &FieldSpec) -> AffineMap {
        let ab = self.a.apply(other.b, s);
        AffineMap {
            b: (
                s.add_unchecked(self.b.0, ab.0),
                s.add_unchecked(self.b.1, ab.1),
            ),
            a: self.a.mul(&other.a, s),
        }
    }

    /// `self` first, then `other`; matches permutation composition.
    pub fn then(&self, other: &AffineMap, s: &FieldSpec) -> AffineMap {
        other.mul(self, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn matrix_basics() {
        let s = make_field(3, 1).unwrap();
        let m = Matrix2x2::from_codes([0, 1, 1, 2], &s).unwrap();
        assert_eq!(m.order(&s), Some(8));
        assert_eq!(m.pow(8, &s), Matrix2x2::identity(&s));
        let singular = Matrix2x2::from_codes([1, 2, 2, 1], &s).unwrap();
        assert_eq!(singular.order(&s), None);
        assert!(matches!(
            AffineMap::linear(singular, &s),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn affine_product_is_functional_composition() {
        let s = make_field(2, 2).unwrap();
        let e = |c| s.element(c).unwrap();
        let m1 = AffineMap::new(
            (e(1), e(2)),
            Matrix2x2::from_codes([0, 1, 1, 1], &s).unwrap(),
            &s,
        )
        .unwrap();
        let m2 = AffineMap::new(
            (e(3), e(0)),
            Matrix2x2::from_codes([2, 0, 1, 3], &s).unwrap(),
            &s,
        )
        .unwrap();
        for x in s.elements() {
            for y in s.elements() {
                let v = (x, y);
                assert_eq!(m1.mul(&m2, &s).apply(v, &s), m1.apply(m2.apply(v, &s), &s));
                assert_eq!(m1.then(&m2, &s).apply(v, &s), m2.apply(m1.apply(v, &s), &s));
            }
        }
    }
}
