//! The degree `4l` groups `G = H ⋊ <tau, c>` for odd `l >= 3`, where `H` is
//! an elementary abelian 2-group of order `2^(l-1)` and `<tau, c>` is
//! dihedral of order `2l`.
//!
//! Point labels follow 1-based arithmetic throughout. Conjugation `x^g`
//! relabels the cycles of `x` through `g`; in left-to-right composition that
//! is `g^-1 x g`, which is what the relation checks below use.

use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct FourEll {
    pub ell: usize,
    pub degree: usize,
    /// `sigma_i = (i i+1)(i+2 i+3)` for `i = 1, 5, .., 4l-3`.
    pub sigmas: Vec<Permutation>,
    /// `pi_i = sigma_i sigma_{4l-3}`, same indexing; the last one is the identity.
    pub pis: Vec<Permutation>,
    /// `A_1..A_4`, the step-4 `l`-cycles starting at 1, 2, 3, 4.
    pub a_cycles: [Permutation; 4],
    pub c: Permutation,
    pub tau: Permutation,
    pub h: PermGroup,
    pub dihedral: PermGroup,
    pub group: PermGroup,
}

fn perm(n: usize, cycles: &[Vec<u32>]) -> Result<Permutation> {
    let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(n, &refs)
        .map_err(|_| Error::Internal(format!("overlapping cycles in {cycles:?}")))
}

pub fn build_fourell(ell: usize, cap: usize) -> Result<FourEll> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "ℓ must be odd and at least 3, got {ell}"
        )));
    }
    let n = 4 * ell;
    let l = ell as u32;
    let sigma = |i: u32| perm(n, &[vec![i, i + 1], vec![i + 2, i + 3]]);
    let starts: Vec<u32> = (0..l).map(|k| 4 * k + 1).collect();
    let sigmas = starts
        .iter()
        .map(|&i| sigma(i))
        .collect::<Result<Vec<_>>>()?;
    let last = sigmas.last().expect("l >= 3").clone();
    let pis: Vec<Permutation> = sigmas.iter().map(|s| s.then(&last)).collect();

    let a_cycle = |i: u32| perm(n, &[(0..l).map(|k| i + 4 * k).collect()]);
    let a_cycles = [a_cycle(1)?, a_cycle(2)?, a_cycle(3)?, a_cycle(4)?];
    let c = perm(
        n,
        &(1..=4)
            .map(|i| (0..l).map(|k| i + 4 * k).collect())
            .collect::<Vec<_>>(),
    )?;

    let mut tau_cycles = vec![vec![1, 3], vec![2, 4]];
    for i in 1..l {
        tau_cycles.push(vec![1 + 4 * i, 3 + 4 * (l - i)]);
        tau_cycles.push(vec![2 + 4 * i, 4 + 4 * (l - i)]);
    }
    let tau = perm(n, &tau_cycles)?;

    let h = PermGroup::generate(&pis, format!("H({ell})"), cap)?;
    let dihedral = PermGroup::generate(&[tau.clone(), c.clone()], format!("D({ell})"), cap)?;
    let mut gens = pis.clone();
    gens.push(c.clone());
    gens.push(tau.clone());
    let group = PermGroup::generate(&gens, format!("G_4l({ell})"), cap)?;
    Ok(FourEll {
        ell,
        degree: n,
        sigmas,
        pis,
        a_cycles,
        c,
        tau,
        h,
        dihedral,
        group,
    })
}

impl FourEll {
    /// `sigma_i` for a 1-based start `i ≡ 1 (mod 4)`, indices taken mod `4l`.
    pub fn sigma(&self, i: usize) -> &Permutation {
        let i = (i - 1) % self.degree;
        &self.sigmas[i / 4]
    }

    /// Named relations of the construction, each with its truth value.
    pub fn relation_checks(&self) -> Result<Vec<(String, bool)>> {
        let mut out = vec![];
        let a = &self.a_cycles;
        // tau A_1 tau^-1 = A_3^-1 and its cyclic companions
        for (i, j) in [(0usize, 2usize), (1, 3), (2, 0), (3, 1)] {
            let lhs = a[i].conjugate_by(&self.tau)?;
            out.push((
                format!("tau A{} tau^-1 = A{}^-1", i + 1, j + 1),
                lhs == a[j].inverse(),
            ));
        }
        out.push((
            "tau c tau^-1 = c^-1".into(),
            self.c.conjugate_by(&self.tau)? == self.c.inverse(),
        ));
        out.push(("tau is a derangement".into(), self.tau.is_derangement()));
        out.push(("tau is an involution".into(), self.tau.order() == 2));
        out.push(("c has order l".into(), self.c.order() == self.ell as u64));
        out.push((
            "sigmas are involutions".into(),
            self.sigmas.iter().all(|s| s.order() == 2),
        ));
        out.push((
            "pi_{4l-3} = id".into(),
            self.pis.last().is_some_and(Permutation::is_identity),
        ));

        let n = self.degree;
        let mut nu_ok = true;
        let mut mu_ok = true;
        for (k, pi) in self.pis.iter().enumerate() {
            let i = 4 * k + 1;
            if i != n - 3 {
                let expected = self.sigma(i + 4).then(self.sigma(1));
                nu_ok &= pi.conjugate_by(&self.c)? == expected;
            }
            let t = self.tau.image(i + 1) + 1; // tau(i + 2), 1-based
            let expected = self.sigma(t).then(self.sigma(5));
            mu_ok &= pi.conjugate_by(&self.tau)? == expected;
        }
        out.push(("c pi_i c^-1 = sigma_{i+4} sigma_1".into(), nu_ok));
        out.push(("tau pi_i tau^-1 = sigma_{tau(i+2)} sigma_5".into(), mu_ok));

        let h_normal_c = self
            .h
            .elements()
            .iter()
            .all(|x| x.conjugate_by(&self.c).is_ok_and(|y| self.h.contains(&y)));
        let h_normal_tau = self
            .h
            .elements()
            .iter()
            .all(|x| x.conjugate_by(&self.tau).is_ok_and(|y| self.h.contains(&y)));
        out.push(("c H c^-1 = H".into(), h_normal_c));
        out.push(("tau H tau^-1 = H".into(), h_normal_tau));
        let meet = self
            .dihedral
            .elements()
            .iter()
            .filter(|x| self.h.contains(x))
            .count();
        out.push(("H ∩ <tau, c> = {id}".into(), meet == 1));
        out.push((
            "|G| = |H| * 2l".into(),
            self.group.order() == self.h.order() * 2 * self.ell
                && self.dihedral.order() == 2 * self.ell,
        ));
        out.push((
            "every element of H fixes at least 4 points".into(),
            self.h
                .elements()
                .iter()
                .all(|x| x.fixed_points().len() >= 4),
        ));
        Ok(out)
    }
}
