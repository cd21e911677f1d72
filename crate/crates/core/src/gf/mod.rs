//! Exact arithmetic in GF(p^k).
//!
//! Elements are stored by their canonical code `a_0 + a_1 p + ... + a_{k-1} p^(k-1)`
//! where `a_0 + a_1 x + ...` is the polynomial representative modulo the
//! field's defining polynomial. The code order is the canonical element order
//! used for line indexing and reports.

mod poly;

pub use poly::{find_primitive_poly2, is_irreducible, Poly2};

use serde::Serialize;

use crate::{Error, Result};

/// Default upper bound on `p^k`.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Arithmetic context for GF(p^k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    /// Monic defining polynomial, lowest coefficient first (`k + 1` entries).
    modulus: Vec<u32>,
    #[serde(skip)]
    q: u32,
}

pub fn is_prime(n: u64) -> bool {
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

/// Builds GF(p^k) with the lexicographically smallest monic irreducible
/// modulus, ordered by `(a_{k-1}, ..., a_0)`.
pub fn make_field(p: u64, k: u32) -> Result<FieldSpec> {
    FieldSpec::with_cap(p, k, DEFAULT_FIELD_CAP)
}

impl FieldSpec {
    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let q = (p as u128).checked_pow(k).filter(|&q| q <= cap as u128);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, k, cap });
        };
        let p = p as u32;
        let q = q as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            poly::smallest_irreducible(p, k as usize)
        };
        Ok(FieldSpec { p, k, modulus, q })
    }

    /// Prime-power field of size `q`, if `q` is a prime power within the cap.
    pub fn of_order(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .expect("q >= 2 has a divisor");
        let mut k = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            k += 1;
        }
        if r != 1 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        make_field(p, k)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code < self.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.q })
        }
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    /// Polynomial coefficients `a_0..a_{k-1}` of an element.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut c = a.0;
        (0..self.k)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameter(format!(
                "coefficients {coeffs:?} do not describe an element of GF({}^{})",
                self.p, self.k
            )));
        }
        Ok(FieldElement(self.encode(coeffs)))
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if a.0 < self.q {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                code: a.0,
                q: self.q,
            })
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, self.neg_unchecked(b)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.neg_unchecked(a))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> Result<FieldElement> {
        self.check(a)?;
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(acc, base);
            }
            base = self.mul_unchecked(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroNotInvertible);
        }
        self.pow(a, self.q as u64 - 2)
    }

    /// Least `m >= 1` with `a^m = 1`, by repeated multiplication.
    pub fn element_order(&self, a: FieldElement) -> Result<u64> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroNotInvertible);
        }
        let mut x = a;
        let mut m = 1;
        while x != self.one() {
            x = self.mul_unchecked(x, a);
            m += 1;
        }
        Ok(m)
    }

    /// Some element of order `q - 1` (the smallest by code).
    pub fn primitive_element(&self) -> FieldElement {
        self.nonzero_elements()
            .find(|&a| self.element_order(a).ok() == Some(self.q as u64 - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    pub(crate) fn add_unchecked(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub(crate) fn neg_unchecked(&self, a: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let c: Vec<u32> = self
            .coeffs(a)
            .into_iter()
            .map(|d| (self.p - d) % self.p)
            .collect();
        FieldElement(self.encode(&c))
    }

    pub(crate) fn mul_unchecked(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p as u64;
        if self.k == 1 {
            return FieldElement((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        let k = self.k as usize;
        let x = self.coeffs(a);
        let y = self.coeffs(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        // modulus is monic: x^k = -(a_0 + ... + a_{k-1} x^{k-1})
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let t = d - k + i;
                prod[t] = (prod[t] + (p - c) * m as u64) % p;
            }
        }
        let low: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        FieldElement(self.encode(&low))
    }
}
