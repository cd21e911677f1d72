//! Group families acting on explicit point sets.

mod affine;
mod affine_groups;
mod fourell;
mod lines;
mod reference;

pub use affine::{AffineMap, Matrix2x2, Point};
pub use affine_groups::{
    build_agl2, build_gq, build_mq, build_singer, gl2_generators, mq_maps, vector_orbit,
};
pub use fourell::{build_fourell, FourEll};
pub use lines::{
    affine_to_line_perm, enumerate_lines, line_points, line_through, lines_csv, Line, LineIndex,
};
pub use reference::{
    build_alternating, build_cyclic_wreath_c2, build_dihedral, build_pgl2, build_psl2,
    build_symmetric,
};

use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// `<(1 2)(3 4), (3 4)(5 6), (1 3 5)(2 4 6)>`, order 12 on six points.
pub fn build_example6() -> PermGroup {
    let gens = [
        Permutation::from_cycles(6, &[&[1, 2], &[3, 4]]),
        Permutation::from_cycles(6, &[&[3, 4], &[5, 6]]),
        Permutation::from_cycles(6, &[&[1, 3, 5], &[2, 4, 6]]),
    ]
    .map(|p| p.expect("valid cycles"));
    PermGroup::generate(&gens, "example6", 12).expect("order 12")
}

/// `<(1 2 .. n)>` acting regularly.
pub fn build_cyclic_regular(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let c = Permutation::from_images(images)?;
    PermGroup::generate(&[c], format!("C{n}"), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example6_basics() {
        let g = build_example6();
        assert_eq!(g.order(), 12);
        for w in 0..6 {
            assert_eq!(g.point_stabilizer(w).unwrap().order(), 2);
        }
    }

    #[test]
    fn cyclic_basics() {
        assert_eq!(build_cyclic_regular(1).unwrap().order(), 1);
        assert_eq!(build_cyclic_regular(6).unwrap().order(), 6);
        assert!(build_cyclic_regular(6).unwrap().is_transitive());
        assert!(build_cyclic_regular(0).is_err());
    }
}
