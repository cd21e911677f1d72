//! `G_q(A)`, its kernel `M_q` on the parallel classes, and `AGL(2,q)`, all
//! acting on the lines of AG(2,q).

use std::collections::{HashSet, VecDeque};

use super::affine::{AffineMap, Matrix2x2, Point};
use super::lines::affine_to_line_perm;
use crate::gf::{find_primitive_poly2, FieldSpec};
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// Companion matrix of the smallest primitive quadratic: a Singer cycle of
/// GL(2,q).
pub fn build_singer(s: &FieldSpec) -> Matrix2x2 {
    find_primitive_poly2(s).companion(s)
}

/// Orbit of `v` under the cyclic group generated by `a`.
pub fn vector_orbit(a: &Matrix2x2, v: Point, s: &FieldSpec) -> Vec<Point> {
    let mut out = vec![v];
    let mut x = a.apply(v, s);
    while x != v {
        out.push(x);
        x = a.apply(x, s);
    }
    out
}

/// Translations by the GF(p)-basis vectors `(p^i, 0)` and `(0, p^i)`.
fn basis_translations(s: &FieldSpec) -> Vec<AffineMap> {
    let mut out = vec![];
    let mut code = 1;
    for _ in 0..s.k() {
        let e = s.element(code).expect("basis code below q");
        out.push(AffineMap::translation((e, s.zero()), s));
        out.push(AffineMap::translation((s.zero(), e), s));
        code *= s.p();
    }
    out
}

fn check_order(g: &PermGroup, expected: u64) -> Result<()> {
    if g.order() as u64 != expected {
        return Err(Error::Internal(format!(
            "{} has order {}, expected {expected}",
            g.name(),
            g.order()
        )));
    }
    Ok(())
}

/// `G_q(A) = {(b, B) : B in <A>}` on the `q(q+1)` lines, generated by the
/// Singer cycle and the two unit translations.
pub fn build_gq(s: &FieldSpec, cap: usize) -> Result<PermGroup> {
    let q = s.q() as u64;
    let a = build_singer(s);
    let gens = [
        AffineMap::linear(a, s)?,
        AffineMap::translation((s.one(), s.zero()), s),
        AffineMap::translation((s.zero(), s.one()), s),
    ];
    let perms = gens
        .iter()
        .map(|m| affine_to_line_perm(m, s))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::generate(&perms, format!("G_{q}(A)"), cap)?;
    check_order(&g, q * q * (q * q - 1))?;
    Ok(g)
}

/// The maps `(b, kI)` for all `b` and nonzero `k`, in `(k, b)` code order.
pub fn mq_maps(s: &FieldSpec) -> Vec<AffineMap> {
    let mut out = vec![];
    for k in s.nonzero_elements() {
        for x in s.elements() {
            for y in s.elements() {
                out.push(AffineMap {
                    b: (x, y),
                    a: Matrix2x2::scalar(k, s),
                });
            }
        }
    }
    out
}

/// `M_q = {(b, kI)}` on the lines, order `q^2 (q-1)`.
pub fn build_mq(s: &FieldSpec) -> Result<PermGroup> {
    let q = s.q() as u64;
    let mut gens = basis_translations(s);
    gens.push(AffineMap::linear(
        Matrix2x2::scalar(s.primitive_element(), s),
        s,
    )?);
    let perms = gens
        .iter()
        .map(|m| affine_to_line_perm(m, s))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::generate(&perms, format!("M_{q}"), usize::MAX)?;
    check_order(&g, q * q * (q - 1))?;
    Ok(g)
}

fn gl2_closure(gens: &[Matrix2x2], s: &FieldSpec) -> HashSet<Matrix2x2> {
    let id = Matrix2x2::identity(s);
    let mut set = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g, s);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// Generators of GL(2,q): the Singer cycle followed by the first matrices in
/// row-major code order that enlarge the generated subgroup.
pub fn gl2_generators(s: &FieldSpec) -> Vec<Matrix2x2> {
    let q = s.q() as u64;
    let full = ((q * q - 1) * (q * q - q)) as usize;
    let mut gens = vec![build_singer(s)];
    let mut closure = gl2_closure(&gens, s);
    let all = (0..q.pow(4)).map(|i| {
        let c = [(i / q.pow(3)) % q, (i / q.pow(2)) % q, (i / q) % q, i % q];
        Matrix2x2::from_codes(c.map(|x| x as u32), s).expect("codes below q")
    });
    for m in all {
        if closure.len() == full {
            break;
        }
        if m.is_invertible(s) && !closure.contains(&m) {
            gens.push(m);
            closure = gl2_closure(&gens, s);
        }
    }
    gens
}

/// `AGL(2,q)` on the lines, order `q^2 (q^2-1)(q^2-q)`.
pub fn build_agl2(s: &FieldSpec, cap: usize) -> Result<PermGroup> {
    let q = s.q() as u64;
    let expected = q * q * (q * q - 1) * (q * q - q);
    if expected > cap as u64 {
        return Err(Error::OrderCapExceeded { cap, reached: 0 });
    }
    let mut maps = basis_translations(s);
    for m in gl2_generators(s) {
        maps.push(AffineMap::linear(m, s)?);
    }
    let perms: Vec<Permutation> = maps
        .iter()
        .map(|m| affine_to_line_perm(m, s))
        .collect::<Result<_>>()?;
    let g = PermGroup::generate(&perms, format!("AGL(2,{q})"), cap)?;
    check_order(&g, expected)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lines::{enumerate_lines, LineIndex};
    use crate::gf::make_field;

    #[test]
    fn singer_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(build_singer(&f2).codes(), [0, 1, 1, 1]);
        assert_eq!(build_singer(&f2).order(&f2), Some(3));
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(build_singer(&f3).codes(), [0, 1, 1, 2]);
        assert_eq!(build_singer(&f3).order(&f3), Some(8));
    }

    #[test]
    fn singer_acts_regularly_on_nonzero_vectors() {
        for q in [2u64, 3, 4, 5, 7, 8] {
            let s = FieldSpec::of_order(q).unwrap();
            let a = build_singer(&s);
            assert_eq!(a.pow(q * q - 1, &s), Matrix2x2::identity(&s));
            let orbit = vector_orbit(&a, (s.one(), s.zero()), &s);
            assert_eq!(orbit.len() as u64, q * q - 1);
            assert!(!orbit.contains(&(s.zero(), s.zero())));
        }
    }

    #[test]
    fn gq_orders() {
        for (q, order) in [(2u64, 12usize), (3, 72), (4, 240)] {
            let s = FieldSpec::of_order(q).unwrap();
            let g = build_gq(&s, 1 << 20).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.degree() as u64, q * (q + 1));
            assert!(g.is_transitive());
        }
    }

    #[test]
    fn mq_matches_explicit_enumeration() {
        for q in [2u64, 3, 4, 5] {
            let s = FieldSpec::of_order(q).unwrap();
            let m = build_mq(&s).unwrap();
            let mut listed: Vec<_> = mq_maps(&s)
                .iter()
                .map(|x| affine_to_line_perm(x, &s).unwrap())
                .collect();
            listed.sort();
            listed.dedup();
            assert_eq!(listed, m.elements());
            assert!(m.elements().iter().all(Permutation::has_fixed_point));
        }
    }

    #[test]
    fn line_action_is_a_homomorphism() {
        for q in [2u64, 3, 4] {
            let s = FieldSpec::of_order(q).unwrap();
            let maps = mq_maps(&s);
            let a = AffineMap::linear(build_singer(&s), &s).unwrap();
            let mut sample: Vec<AffineMap> = maps.iter().step_by(3).copied().collect();
            sample.push(a);
            sample.push(a.mul(&maps[maps.len() - 1], &s));
            for m1 in &sample {
                for m2 in &sample {
                    let p1 = affine_to_line_perm(m1, &s).unwrap();
                    let p2 = affine_to_line_perm(m2, &s).unwrap();
                    let left_to_right = affine_to_line_perm(&m1.then(m2, &s), &s).unwrap();
                    assert_eq!(left_to_right, p1.compose(&p2).unwrap());
                    let functional = affine_to_line_perm(&m1.mul(m2, &s), &s).unwrap();
                    assert_eq!(functional, p2.compose(&p1).unwrap());
                }
            }
        }
    }

    #[test]
    fn scalar_maps_fix_the_predicted_line() {
        // (b, kI) with k != 1 fixes l + (1-k)^{-1} b for every direction l
        for q in [3u64, 4, 5, 7] {
            let s = FieldSpec::of_order(q).unwrap();
            let lines = enumerate_lines(&s);
            for m in mq_maps(&s) {
                let k = m.a.a;
                if k == s.one() {
                    continue;
                }
                let perm = affine_to_line_perm(&m, &s).unwrap();
                let w = s.inv(s.sub(s.one(), k).unwrap()).unwrap();
                let beta = (s.mul(w, m.b.0).unwrap(), s.mul(w, m.b.1).unwrap());
                for dir in 0..=s.q() {
                    let through_beta = lines
                        .iter()
                        .find(|l| l.index.dir == dir && l.points.contains(&beta))
                        .unwrap();
                    let i = through_beta.index.flat(s.q());
                    assert_eq!(perm.image(i), i);
                }
                assert_eq!(perm.fixed_points().len() as u64, q + 1);
            }
        }
    }

    #[test]
    fn parallel_classes_are_blocks_of_gq() {
        for q in [2u64, 3, 4] {
            let s = FieldSpec::of_order(q).unwrap();
            let g = build_gq(&s, 1 << 20).unwrap();
            for x in g.elements() {
                for dir in 0..=s.q() {
                    let images: HashSet<u32> = (0..s.q())
                        .map(|off| {
                            LineIndex::from_flat(x.image(LineIndex { dir, off }.flat(s.q())), s.q())
                                .dir
                        })
                        .collect();
                    assert_eq!(images.len(), 1);
                }
            }
        }
    }

    #[test]
    fn agl2_orders() {
        let s = make_field(2, 1).unwrap();
        assert_eq!(build_agl2(&s, 1 << 20).unwrap().order(), 24);
        let s = make_field(3, 1).unwrap();
        let g = build_agl2(&s, 1 << 20).unwrap();
        assert_eq!(g.order(), 432);
        assert_eq!(g.rank_on_pairs(1 << 20).unwrap(), 3);
        assert!(matches!(
            build_agl2(&s, 100),
            Err(Error::OrderCapExceeded { .. })
        ));
    }
}
