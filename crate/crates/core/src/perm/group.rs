use std::collections::{HashMap, HashSet, VecDeque};

use super::Permutation;
use crate::{Error, Result};

/// A finite permutation group held extensionally: every element is stored,
/// sorted by image vector, so the identity is always element 0.
#[derive(Clone)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// Closure state shared by group generation and subgroup generation.
struct Closure {
    degree: usize,
    gens: Vec<Permutation>,
    set: HashSet<Permutation>,
    list: Vec<Permutation>,
    cap: usize,
}

impl Closure {
    fn new(degree: usize, cap: usize) -> Self {
        let id = Permutation::identity(degree);
        Closure {
            degree,
            gens: vec![],
            set: HashSet::from([id.clone()]),
            list: vec![id],
            cap,
        }
    }

    /// Adds `g` as a generator (unless already contained) and closes again.
    fn extend(&mut self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        if self.set.contains(g) {
            return Ok(());
        }
        self.gens.push(g.clone());
        let mut queue: VecDeque<Permutation> = self.list.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for s in &self.gens {
                let y = x.then(s);
                if !self.set.contains(&y) {
                    if self.list.len() >= self.cap {
                        return Err(Error::OrderCapExceeded {
                            cap: self.cap,
                            reached: self.list.len(),
                        });
                    }
                    self.set.insert(y.clone());
                    self.list.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(())
    }
}

impl PermGroup {
    /// Breadth-first closure of `gens`. Generators equal to an element
    /// already generated are still recorded as generators.
    pub fn generate(gens: &[Permutation], name: impl Into<String>, cap: usize) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::InvalidParameter(
                "at least one generator is required".into(),
            ));
        };
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let id = Permutation::identity(degree);
        let mut set = HashSet::from([id.clone()]);
        let mut list = vec![id];
        let mut head = 0;
        while head < list.len() {
            let x = list[head].clone();
            head += 1;
            for s in gens {
                let y = x.then(s);
                if set.insert(y.clone()) {
                    if list.len() >= cap {
                        return Err(Error::OrderCapExceeded {
                            cap,
                            reached: list.len(),
                        });
                    }
                    list.push(y);
                }
            }
        }
        Ok(Self::from_parts(name.into(), degree, gens.to_vec(), list))
    }

    /// Subgroup generated by `candidates`, keeping only those candidates that
    /// enlarge the group as generators.
    pub fn generate_incremental<'a>(
        degree: usize,
        candidates: impl IntoIterator<Item = &'a Permutation>,
        name: impl Into<String>,
        cap: usize,
    ) -> Result<Self> {
        let mut c = Closure::new(degree, cap);
        for g in candidates {
            c.extend(g)?;
        }
        Ok(Self::from_parts(name.into(), degree, c.gens, c.list))
    }

    fn from_parts(
        name: String,
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        PermGroup {
            name,
            degree,
            generators,
            elements,
            index,
        }
    }

    /// A subset of this group already known to be closed, with a greedily
    /// chosen generating set.
    fn closed_subset(&self, name: String, members: Vec<Permutation>) -> PermGroup {
        let mut c = Closure::new(self.degree, usize::MAX);
        for g in &members {
            c.extend(g)
                .expect("uncapped closure inside a group cannot fail");
        }
        debug_assert_eq!(c.list.len(), members.len());
        Self::from_parts(name, self.degree, c.gens, members)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|x| g.contains(x))
    }

    /// Orbits of the points in `points` (all points when `None`), each sorted,
    /// listed by least point.
    pub fn orbits(&self, points: Option<&[usize]>) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let starts: Vec<usize> = match points {
            Some(p) => p.to_vec(),
            None => (0..n).collect(),
        };
        let mut out = vec![];
        for s in starts {
            if s >= n || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &self.generators {
                    let y = g.image(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out.sort();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbits(Some(&[0]))[0].len() == self.degree
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::InvalidParameter(format!(
                "point {} outside 1..={}",
                point + 1,
                self.degree
            )));
        }
        let members = self
            .elements
            .iter()
            .filter(|x| x.image(point) == point)
            .cloned()
            .collect();
        Ok(self.closed_subset(format!("{}_{}", self.name, point + 1), members))
    }

    /// Largest point-stabilizer size over all points.
    pub fn max_stabilizer_size(&self) -> usize {
        (0..self.degree)
            .map(|w| self.elements.iter().filter(|x| x.image(w) == w).count())
            .max()
            .unwrap_or(0)
    }

    /// The subgroup generated by all elements with a fixed point.
    pub fn fix_subgroup(&self) -> Result<PermGroup> {
        let members = self.elements.iter().filter(|x| x.has_fixed_point());
        let f = PermGroup::generate_incremental(
            self.degree,
            members,
            format!("Fix({})", self.name),
            self.order(),
        )?;
        Ok(f)
    }

    /// Subgroup consisting of the listed elements; fails if they are not
    /// closed under composition.
    pub fn subgroup_from_elements(
        &self,
        name: impl Into<String>,
        members: Vec<Permutation>,
    ) -> Result<PermGroup> {
        let set: HashSet<&Permutation> = members.iter().collect();
        if !members.iter().all(|x| self.contains(x)) {
            return Err(Error::NotSubgroup(
                "element outside the ambient group".into(),
            ));
        }
        if !set.contains(&Permutation::identity(self.degree)) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for a in &members {
            for b in &members {
                if !set.contains(&a.then(b)) {
                    return Err(Error::NotSubgroup("not closed under composition".into()));
                }
            }
        }
        let members: Vec<_> = set.into_iter().cloned().collect();
        Ok(self.closed_subset(name.into(), members))
    }

    /// `h` is normal in `self`: conjugating each generator of `h` by each
    /// generator of `self` lands in `h`.
    pub fn is_normal(&self, h: &PermGroup) -> Result<bool> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup(format!(
                "{} is not contained in {}",
                h.name, self.name
            )));
        }
        for x in &self.generators {
            for y in &h.generators {
                if !h.contains(&y.conjugate_by(x)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Number of orbits on ordered pairs of points.
    pub fn rank_on_pairs(&self, max_pairs: usize) -> Result<usize> {
        let n = self.degree;
        if n * n > max_pairs {
            return Err(Error::CapExceeded {
                what: "number of point pairs",
                cap: max_pairs,
            });
        }
        let mut seen = vec![false; n * n];
        let mut rank = 0;
        let mut stack = vec![];
        for start in 0..n * n {
            if seen[start] {
                continue;
            }
            rank += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(pair) = stack.pop() {
                let (a, b) = (pair / n, pair % n);
                for g in &self.generators {
                    let img = g.image(a) * n + g.image(b);
                    if !seen[img] {
                        seen[img] = true;
                        stack.push(img);
                    }
                }
            }
        }
        Ok(rank)
    }

    /// Exhaustive (or, above 2000 elements, sampled) closure check.
    pub fn check_closure(&self, samples: usize, seed: u64) -> bool {
        let n = self.order();
        if !self.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        if self.elements.iter().any(|x| !self.contains(&x.inverse())) {
            return false;
        }
        if n <= 2000 {
            return self
                .elements
                .iter()
                .all(|a| self.elements.iter().all(|b| self.contains(&a.then(b))));
        }
        // xorshift sampling keeps this check dependency-free
        let mut state = seed | 1;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        (0..samples).all(|_| {
            let (i, j) = (next(), next());
            self.contains(&self.elements[i].then(&self.elements[j]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Caps;

    fn cyc(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let c: Vec<u32> = (1..=n as u32).collect();
        PermGroup::generate(
            &[cyc(n, &[&c]), cyc(n, &[&[1, 2]])],
            format!("Sym({n})"),
            1 << 20,
        )
        .unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<u32> = (1..=n as u32).collect();
        PermGroup::generate(&[cyc(n, &[&c])], format!("C{n}"), 1 << 20).unwrap()
    }

    #[test]
    fn generation_examples() {
        let g = PermGroup::generate(
            &[
                cyc(6, &[&[1, 2], &[3, 4]]),
                cyc(6, &[&[3, 4], &[5, 6]]),
                cyc(6, &[&[1, 3, 5], &[2, 4, 6]]),
            ],
            "ex6",
            1000,
        )
        .unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.element(0).is_identity());
        assert!(g.check_closure(0, 1));
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(sym(5).order(), 120);
    }

    #[test]
    fn generation_errors() {
        assert!(matches!(
            PermGroup::generate(&[cyc(3, &[&[1, 2]]), cyc(4, &[&[1, 2]])], "bad", 10),
            Err(Error::DegreeMismatch(3, 4))
        ));
        let c: Vec<u32> = (1..=6).collect();
        assert!(matches!(
            PermGroup::generate(&[cyc(6, &[&c]), cyc(6, &[&[1, 2]])], "S6", 100),
            Err(Error::OrderCapExceeded { cap: 100, .. })
        ));
        assert!(PermGroup::generate(&[], "empty", 10).is_err());
    }

    #[test]
    fn orbits_and_stabilizers() {
        let trivial = PermGroup::generate(&[Permutation::identity(4)], "1", 10).unwrap();
        assert_eq!(
            trivial.orbits(None),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert!(!trivial.is_transitive());
        let s3 = sym(3);
        let st = s3.point_stabilizer(2).unwrap();
        assert_eq!(
            st.elements(),
            &[Permutation::identity(3), cyc(3, &[&[1, 2]])]
        );
        for n in 2..=5 {
            let s = sym(n);
            for w in 0..n {
                assert_eq!(s.order(), n * s.point_stabilizer(w).unwrap().order());
            }
        }
        assert!(s3.point_stabilizer(3).is_err());
    }

    #[test]
    fn fix_subgroup_of_prime_cyclic_is_trivial() {
        for p in [2, 3, 5, 7] {
            assert_eq!(cyclic(p).fix_subgroup().unwrap().order(), 1);
        }
        assert_eq!(sym(4).fix_subgroup().unwrap().order(), 24);
    }

    #[test]
    fn normality() {
        let s3 = sym(3);
        let t = s3
            .subgroup_from_elements(
                "<(1 2)>",
                vec![Permutation::identity(3), cyc(3, &[&[1, 2]])],
            )
            .unwrap();
        assert!(!s3.is_normal(&t).unwrap());
        let a3 = s3
            .subgroup_from_elements(
                "A3",
                vec![
                    Permutation::identity(3),
                    cyc(3, &[&[1, 2, 3]]),
                    cyc(3, &[&[1, 3, 2]]),
                ],
            )
            .unwrap();
        assert!(s3.is_normal(&a3).unwrap());
        let c4 = cyclic(4);
        assert!(matches!(s3.is_normal(&c4), Err(Error::NotSubgroup(_))));
        assert!(s3
            .subgroup_from_elements("x", vec![Permutation::identity(3), cyc(3, &[&[1, 2, 3]])])
            .is_err());
    }

    #[test]
    fn rank_examples() {
        let caps = Caps::default();
        assert_eq!(sym(4).rank_on_pairs(caps.max_pairs).unwrap(), 2);
        assert_eq!(cyclic(6).rank_on_pairs(caps.max_pairs).unwrap(), 6);
        assert!(sym(4).rank_on_pairs(10).is_err());
    }
}
