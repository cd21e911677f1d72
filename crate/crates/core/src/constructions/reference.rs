//! Small standard groups used as comparison points.

use crate::gf::is_prime;
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Permutation> {
    Permutation::from_images((0..n).map(|i| f(i) as u32).collect())
}

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// Symmetries of the regular n-gon, order 2n.
pub fn build_dihedral(n: usize) -> Result<PermGroup> {
    need(n >= 3, "dihedral groups need n >= 3")?;
    let r = from_fn(n, |i| (i + 1) % n)?;
    let s = from_fn(n, |i| (n - i) % n)?;
    PermGroup::generate(&[r, s], format!("D{}", 2 * n), 2 * n)
}

pub fn build_symmetric(n: usize, cap: usize) -> Result<PermGroup> {
    need(n >= 1, "n must be positive")?;
    if n == 1 {
        return PermGroup::generate(&[Permutation::identity(1)], "Sym(1)", cap);
    }
    let c = from_fn(n, |i| (i + 1) % n)?;
    let t = from_fn(n, |i| [1, 0].get(i).copied().unwrap_or(i))?;
    PermGroup::generate(&[c, t], format!("Sym({n})"), cap)
}

pub fn build_alternating(n: usize, cap: usize) -> Result<PermGroup> {
    need(n >= 3, "alternating groups need n >= 3")?;
    let three = from_fn(n, |i| [1, 2, 0].get(i).copied().unwrap_or(i))?;
    let long = if n % 2 == 1 {
        from_fn(n, |i| (i + 1) % n)?
    } else {
        from_fn(n, |i| if i == 0 { 0 } else { i % (n - 1) + 1 })?
    };
    PermGroup::generate(&[long, three], format!("Alt({n})"), cap)
}

/// `C_p wr C_2` on two blocks `{1..p}` and `{p+1..2p}`, order `2p^2`.
pub fn build_cyclic_wreath_c2(p: usize) -> Result<PermGroup> {
    need(p >= 2, "p must be at least 2")?;
    let n = 2 * p;
    let c = from_fn(n, |i| if i < p { (i + 1) % p } else { i })?;
    let swap = from_fn(n, |i| (i + p) % n)?;
    PermGroup::generate(&[c, swap], format!("C{p}wrC2"), 2 * p * p)
}

fn projective(p: usize, projective_general: bool, cap: usize) -> Result<PermGroup> {
    need(p >= 3 && is_prime(p as u64), "p must be an odd prime")?;
    let inf = p;
    let n = p + 1;
    let inv = |x: usize| {
        (1..p)
            .find(|y| x * y % p == 1)
            .expect("nonzero residue is invertible")
    };
    let translate = from_fn(n, |x| if x == inf { inf } else { (x + 1) % p })?;
    let flip = from_fn(n, |x| match x {
        x if x == inf => 0,
        0 => inf,
        x => (p - inv(x)) % p,
    })?;
    let generator = (2..p)
        .find(|&g| (1..p - 1).all(|e| (0..e).fold(1, |a, _| a * g % p) != 1))
        .unwrap_or(1);
    let k = if projective_general {
        generator
    } else {
        generator * generator % p
    };
    let scale = from_fn(n, |x| if x == inf { inf } else { x * k % p })?;
    let name = if projective_general {
        format!("PGL(2,{p})")
    } else {
        format!("PSL(2,{p})")
    };
    PermGroup::generate(&[translate, scale, flip], name, cap)
}

/// `PSL(2,p)` on the `p+1` points of the projective line, `p` an odd prime.
pub fn build_psl2(p: usize, cap: usize) -> Result<PermGroup> {
    projective(p, false, cap)
}

/// `PGL(2,p)` on the `p+1` points of the projective line.
pub fn build_pgl2(p: usize, cap: usize) -> Result<PermGroup> {
    projective(p, true, cap)
}
