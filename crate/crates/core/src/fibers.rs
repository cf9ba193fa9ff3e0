//! Fibers of the level-changing maps between parahoric levels `K1 ⊆ K2`.
//!
//! The fiber over the stratum `w` is indexed by
//! `{x in W_K2 : w x x1 in Adm(mu) for some x1 in W_K1}`, a right
//! `W_K1`-stable set; it is a single Schubert variety exactly when this set
//! is the Bruhat interval below its maximum.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finite_weyl::{FiniteSubset, Side, WeylElement};
use crate::iwahori_weyl::{AffineElement, SphericalSubset};
use crate::qbg::unique_max;
use crate::root_datum::{Coweight, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberDescriptor {
    pub stratum: AffineElement,
    /// Sorted by length, then canonical word.
    pub member_set: Vec<AffineElement>,
    pub x_max: AffineElement,
    /// Minimal element of `x_max W_K1`.
    pub min_rep: AffineElement,
    pub dimension: usize,
}

/// Result of sweeping the fibers from the Iwahori to the hyperspecial level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertSweep {
    pub indices: Vec<WeylElement>,
    pub regular: bool,
}

impl RootDatum {
    fn check_nested(&self, k1: SphericalSubset, k2: SphericalSubset) -> Result<()> {
        self.check_spherical(k1)?;
        self.check_spherical(k2)?;
        if !k1.is_subset(k2) {
            return Err(Error::NotNested(k1.labels(), k2.labels()));
        }
        Ok(())
    }

    /// Elements of `Adm(mu)` minimal in `W_K1 w W_K2`.
    pub fn strata(&self, mu: &Coweight, k1: SphericalSubset, k2: SphericalSubset) -> Result<Vec<AffineElement>> {
        self.check_nested(k1, k2)?;
        let adm = self.admissible_set(mu)?;
        let out: Vec<AffineElement> = adm
            .elements
            .iter()
            .filter(|x| self.is_min_left(x, k1) && self.is_min_right(x, k2))
            .cloned()
            .collect();
        let ak = self.admissible_k(mu, k2)?;
        let wide: HashSet<&AffineElement> = ak
            .elements
            .iter()
            .filter(|x| self.is_min_left(x, k1) && self.is_min_right(x, k2))
            .collect();
        if wide != out.iter().collect::<HashSet<_>>() {
            return Err(Error::CertificateFailed(format!(
                "strata for K1={k1:?}, K2={k2:?} depend on saturating by W_K2"
            )));
        }
        Ok(out)
    }

    /// `max {u in W_K : w u in Adm(mu)}`, certified unique.
    pub fn max_in_coset(&self, w: &AffineElement, k: SphericalSubset, mu: &Coweight) -> Result<AffineElement> {
        self.check_spherical(k)?;
        let adm = self.admissible_set(mu)?;
        if !adm.contains(w) {
            return Err(Error::NotAdmissible(self.aff_word_string(w)));
        }
        let group = self.parahoric_group(k);
        let members: Vec<&AffineElement> = group.iter().filter(|u| adm.contains(&self.aff_compose(w, u))).collect();
        unique_max(&members, |a, b| self.aff_bruhat_leq(a, b))
            .ok_or_else(|| Error::NotUnique(format!("w W_K ∩ Adm for w = {}", self.aff_word_string(w))))
    }

    pub fn fiber(
        &self,
        mu: &Coweight,
        k1: SphericalSubset,
        k2: SphericalSubset,
        w: &AffineElement,
    ) -> Result<FiberDescriptor> {
        self.check_nested(k1, k2)?;
        let adm = self.admissible_set(mu)?;
        if !(adm.contains(w) && self.is_min_left(w, k1) && self.is_min_right(w, k2)) {
            return Err(Error::NotAStratum(self.aff_word_string(w)));
        }
        let small = self.parahoric_group(k1);
        let member_set: Vec<AffineElement> = self
            .parahoric_group(k2)
            .into_iter()
            .filter(|x| {
                let wx = self.aff_compose(w, x);
                small.iter().any(|x1| adm.contains(&self.aff_compose(&wx, x1)))
            })
            .collect();
        let refs: Vec<&AffineElement> = member_set.iter().collect();
        let x_max = unique_max(&refs, |a, b| self.aff_bruhat_leq(a, b))
            .ok_or_else(|| Error::NotUnique(format!("fiber over {}", self.aff_word_string(w))))?;
        let min_rep = self.aff_coset_min(&x_max, k1, Side::Right);
        let lk1 = self.aff_length(&self.aff_longest(k1));
        let dimension = self.aff_length(&x_max) - lk1;
        if self.aff_length(&min_rep) != dimension {
            return Err(Error::CertificateFailed(format!(
                "fiber maximum over {} is not maximal in its W_K1-coset",
                self.aff_word_string(w)
            )));
        }
        Ok(FiberDescriptor {
            stratum: w.clone(),
            member_set,
            x_max,
            min_rep,
            dimension,
        })
    }

    /// Fibers over every stratum.
    pub fn fibers(&self, mu: &Coweight, k1: SphericalSubset, k2: SphericalSubset) -> Result<Vec<FiberDescriptor>> {
        self.strata(mu, k1, k2)?
            .iter()
            .map(|w| self.fiber(mu, k1, k2, w))
            .collect()
    }

    /// `max {x in W_0 : x w in Adm(mu)}` for `w = t^lam y` minimal in
    /// `W_0 w`, without enumerating `Adm(mu)`.
    pub fn hyperspecial_max_fast(&self, mu: &Coweight, w: &AffineElement) -> Result<WeylElement> {
        self.check_dominant(mu)?;
        self.check_coweight(&w.lam)?;
        let lam = &w.lam;
        if !self.is_dominant(lam) {
            return Err(Error::PreconditionViolated(format!("{lam} is not dominant")));
        }
        let il = self.finite_subset(&self.stabilizer_labels(lam))?;
        if self.coset_min(&w.w, il, Side::Left) != w.w {
            return Err(Error::PreconditionViolated(
                "finite part is not minimal in its left I(lambda)-coset".into(),
            ));
        }
        if !self.dominance_leq(lam, mu)? {
            return Err(Error::PreconditionViolated(format!("{lam} is not below {mu}")));
        }
        let gamma = self
            .coweight_to_coroot(&mu.sub(lam))
            .expect("dominance implies coroot-lattice difference");
        let v = self.inverse(&w.w);
        let base = self.z_gamma(&gamma)?;
        Ok(self.word(&v).iter().rev().fold(base, |x, &i| {
            let sx = self.mul_simple_left(i, &x);
            if self.length(&sx) > self.length(&x) {
                sx
            } else {
                x
            }
        }))
    }

    /// `max {x in W_0 : x w in Adm(mu)}` by scanning the coset `w^{-1} W_0`
    /// in `Adm(-w_0 mu)` and inverting.
    pub fn hyperspecial_max_brute(&self, mu: &Coweight, w: &AffineElement) -> Result<WeylElement> {
        let w0 = self.longest_element();
        let mu_star = self.act_coweight(&w0, mu).neg();
        let s0 = SphericalSubset::from_bits(FiniteSubset::full(self.rank()).bits());
        let u = self.max_in_coset(&self.aff_inverse(w), s0, &mu_star)?;
        Ok(self.inverse(&u.w))
    }

    /// The set of fiber indices for the map from the Iwahori level to the
    /// hyperspecial level.
    pub fn schubert_sweep(&self, mu: &Coweight) -> Result<SchubertSweep> {
        self.check_dominant(mu)?;
        let k2 = SphericalSubset::from_bits(FiniteSubset::full(self.rank()).bits());
        let mut seen: HashSet<WeylElement> = HashSet::new();
        for f in self.fibers(mu, SphericalSubset::empty(), k2)? {
            seen.insert(f.min_rep.w);
        }
        let mut indices: Vec<WeylElement> = seen.into_iter().collect();
        self.sort_elements(&mut indices);
        Ok(SchubertSweep {
            indices,
            regular: self.stabilizer_labels(mu).is_empty(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{CartanSpec, Family, LatticeKind};

    fn a1() -> RootDatum {
        RootDatum::new(CartanSpec::adjoint(Family::A, 1)).unwrap()
    }

    #[test]
    fn strata_and_fibers_a1() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let k1 = SphericalSubset::empty();
        let k2 = d.spherical(&[1]).unwrap();
        let st = d.strata(&mu, k1, k2).unwrap();
        let words: Vec<String> = st.iter().map(|x| d.aff_word_string(x)).collect();
        assert_eq!(words, vec!["e", "0", "10"]);
        let dims: Vec<usize> = st.iter().map(|w| d.fiber(&mu, k1, k2, w).unwrap().dimension).collect();
        assert_eq!(dims, vec![1, 1, 0]);
        let f = d.fiber(&mu, k1, k2, &st[0]).unwrap();
        assert_eq!(d.aff_word_string(&f.x_max), "1");
        assert_eq!(d.strata(&mu, k1, k1).unwrap().len(), 5);
        assert!(matches!(d.strata(&mu, k2, k1), Err(Error::NotNested(_, _))));
        assert!(matches!(
            d.fiber(&mu, k1, k2, &d.aff_from_word(&[0, 1])),
            Err(Error::NotAStratum(_))
        ));
    }

    #[test]
    fn equal_levels_give_points() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let k = d.spherical(&[1]).unwrap();
        for f in d.fibers(&mu, k, k).unwrap() {
            assert_eq!(f.dimension, 0);
            assert_eq!(f.x_max, d.aff_longest(k));
        }
    }

    #[test]
    fn coset_maxima_a1() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let k = d.spherical(&[1]).unwrap();
        let m = |w: &[usize]| d.aff_word_string(&d.max_in_coset(&d.aff_from_word(w), k, &mu).unwrap());
        assert_eq!(m(&[0]), "1");
        assert_eq!(m(&[1, 0]), "e");
        assert_eq!(m(&[]), "1");
        assert!(matches!(
            d.max_in_coset(&d.aff_from_word(&[1, 0, 1]), k, &mu),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn fast_route_a1() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let t = d.translation(&mu).unwrap();
        assert!(d.is_identity(&d.hyperspecial_max_fast(&mu, &t).unwrap()));
        let s0 = d.aff_simple(0);
        assert_eq!(d.hyperspecial_max_fast(&mu, &s0).unwrap(), d.simple_reflection(1));
        assert_eq!(d.hyperspecial_max_brute(&mu, &s0).unwrap(), d.simple_reflection(1));
        assert!(matches!(
            d.hyperspecial_max_fast(&mu, &d.translation(&Coweight(vec![-1])).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn sweeps() {
        let d = a1();
        assert_eq!(d.schubert_sweep(&Coweight(vec![1])).unwrap().indices.len(), 2);
        assert_eq!(d.schubert_sweep(&Coweight(vec![2])).unwrap().indices.len(), 2);
        let g = RootDatum::new(CartanSpec::new(Family::A, 2, LatticeKind::Gl)).unwrap();
        let s = g.schubert_sweep(&Coweight(vec![2, 1, 0])).unwrap();
        assert!(s.regular);
        assert_eq!(s.indices.len(), 6);
    }
}
