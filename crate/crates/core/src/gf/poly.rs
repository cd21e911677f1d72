//! Irreducibility tests over GF(p) and the search for primitive quadratics
//! over GF(q).

use serde::Serialize;

use super::{FieldElement, FieldSpec};
use crate::constructions::Matrix2x2;

/// Monic `x^2 + c1 x + c0` over GF(q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Poly2 {
    pub c1: FieldElement,
    pub c0: FieldElement,
}

impl Poly2 {
    /// Companion matrix `[[0, -c0], [1, -c1]]`.
    pub fn companion(&self, s: &FieldSpec) -> Matrix2x2 {
        Matrix2x2::new(
            s.zero(),
            s.neg_unchecked(self.c0),
            s.one(),
            s.neg_unchecked(self.c1),
        )
    }
}

/// Remainder of `num` modulo the monic `den` over GF(p); coefficient vectors
/// are lowest-degree first.
fn rem_monic(p: u32, num: &[u32], den: &[u32]) -> Vec<u32> {
    let p = p as u64;
    let dd = den.len() - 1;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    if r.len() <= dd {
        return num.to_vec();
    }
    for d in (dd..r.len()).rev() {
        let c = r[d] % p;
        if c == 0 {
            continue;
        }
        for (i, &m) in den.iter().enumerate() {
            let t = d - dd + i;
            r[t] = (r[t] + (p - c) * m as u64) % p;
        }
    }
    r.truncate(dd);
    r.into_iter().map(|c| c as u32).collect()
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `index`.
fn monic_from_index(p: u32, deg: usize, mut index: u64) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        c.push((index % p as u64) as u32);
        index /= p as u64;
    }
    c.push(1);
    c
}

/// Irreducibility of a monic polynomial over GF(p) (lowest coefficient
/// first). Degrees 2 and 3 use the root test; higher degrees use trial
/// division by every monic polynomial of degree at most half.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    if poly[0] == 0 {
        return false;
    }
    if deg <= 3 {
        return !(0..p).any(|x| {
            poly.iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64)
                == 0
        });
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let f = monic_from_index(p, d, idx);
            if rem_monic(p, poly, &f).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

pub(super) fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    // Index order over the low coefficients read as (a_{k-1}, ..., a_0) is
    // exactly the base-p value with a_{k-1} most significant.
    let count = (p as u64).pow(k as u32);
    (0..count)
        .map(|idx| monic_from_index(p, k, idx))
        .find(|f| is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}

/// Smallest (by `(c1, c0)` codes) monic quadratic over GF(q) whose companion
/// matrix has multiplicative order `q^2 - 1`.
pub fn find_primitive_poly2(s: &FieldSpec) -> Poly2 {
    let target = (s.q() as u64).pow(2) - 1;
    for c1 in s.elements() {
        for c0 in s.nonzero_elements() {
            let poly = Poly2 { c1, c0 };
            if poly.companion(s).order(s) == Some(target) {
                return poly;
            }
        }
    }
    unreachable!("GF(q^2)* is cyclic, so a primitive quadratic exists")
}
