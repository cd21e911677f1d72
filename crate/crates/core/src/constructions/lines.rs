//! Lines of AG(2,q) in canonical order and the induced action of affine maps.
//!
//! Directions are `(1, s)` for `s` in code order followed by the vertical
//! direction `(0, 1)`. A line with direction `(1, s)` and offset `c` is
//! `{(x, s x + c)}`; a vertical line with offset `c` is `{(c, y)}`. The flat
//! index of a line is `dir * q + off`.

use std::fmt::Write as _;

use serde::Serialize;

use super::affine::{AffineMap, Point};
use crate::gf::FieldSpec;
use crate::perm::Permutation;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LineIndex {
    pub dir: u32,
    pub off: u32,
}

impl LineIndex {
    pub fn flat(&self, q: u32) -> usize {
        (self.dir * q + self.off) as usize
    }

    pub fn from_flat(i: usize, q: u32) -> Self {
        LineIndex {
            dir: i as u32 / q,
            off: i as u32 % q,
        }
    }

    pub fn is_vertical(&self, q: u32) -> bool {
        self.dir == q
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    pub index: LineIndex,
    pub points: Vec<Point>,
}

pub fn line_points(idx: LineIndex, s: &FieldSpec) -> Vec<Point> {
    let q = s.q();
    let c = s.element(idx.off).expect("offset below q");
    if idx.is_vertical(q) {
        s.elements().map(|y| (c, y)).collect()
    } else {
        let slope = s.element(idx.dir).expect("direction below q");
        s.elements()
            .map(|x| (x, s.add_unchecked(s.mul_unchecked(slope, x), c)))
            .collect()
    }
}

/// All `q(q+1)` lines in flat-index order.
pub fn enumerate_lines(s: &FieldSpec) -> Vec<Line> {
    let q = s.q();
    (0..(q * (q + 1)) as usize)
        .map(|i| {
            let index = LineIndex::from_flat(i, q);
            Line {
                index,
                points: line_points(index, s),
            }
        })
        .collect()
}

/// The line through two distinct points.
pub fn line_through(p0: Point, p1: Point, s: &FieldSpec) -> Result<LineIndex> {
    let dx = s.sub(p1.0, p0.0)?;
    let dy = s.sub(p1.1, p0.1)?;
    if dx.is_zero() {
        if dy.is_zero() {
            return Err(Error::InvalidParameter("points coincide".into()));
        }
        return Ok(LineIndex {
            dir: s.q(),
            off: p0.0.code(),
        });
    }
    let slope = s.mul(dy, s.inv(dx)?)?;
    let off = s.sub(p0.1, s.mul(slope, p0.0)?)?;
    Ok(LineIndex {
        dir: slope.code(),
        off: off.code(),
    })
}

fn on_line(idx: LineIndex, v: Point, s: &FieldSpec) -> bool {
    if idx.is_vertical(s.q()) {
        v.0.code() == idx.off
    } else {
        let slope = s.element(idx.dir).expect("direction below q");
        s.add_unchecked(
            s.mul_unchecked(slope, v.0),
            s.element(idx.off).expect("offset below q"),
        ) == v.1
    }
}

/// Permutation of the line indices induced by `m`.
pub fn affine_to_line_perm(m: &AffineMap, s: &FieldSpec) -> Result<Permutation> {
    if !m.a.is_invertible(s) {
        return Err(Error::SingularMatrix);
    }
    let q = s.q();
    let count = (q * (q + 1)) as usize;
    let mut images = Vec::with_capacity(count);
    for i in 0..count {
        let pts = line_points(LineIndex::from_flat(i, q), s);
        let imgs: Vec<Point> = pts.iter().map(|&v| m.apply(v, s)).collect();
        let target = line_through(imgs[0], imgs[1], s)?;
        if !imgs.iter().all(|&v| on_line(target, v, s)) {
            return Err(Error::Internal(format!("image of line {i} is not a line")));
        }
        images.push(target.flat(q) as u32);
    }
    Permutation::from_images(images)
        .map_err(|_| Error::Internal("line images are not a bijection".into()))
}

/// CSV line table: `flat_index,dir,off,points` with points written as
/// space-separated `x:y` element codes.
pub fn lines_csv(s: &FieldSpec) -> String {
    let mut out = String::from("flat_index,dir,off,points\n");
    for line in enumerate_lines(s) {
        let pts: Vec<String> = line
            .points
            .iter()
            .map(|(x, y)| format!("{}:{}", x.code(), y.code()))
            .collect();
        writeln!(
            out,
            "{},{},{},{}",
            line.index.flat(s.q()),
            line.index.dir,
            line.index.off,
            pts.join(" ")
        )
        .expect("writing to a String");
    }
    out
}
