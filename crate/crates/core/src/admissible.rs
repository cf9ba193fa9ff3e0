//! `mu`-admissible sets and their parahoric variants.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_weyl::Side;
use crate::iwahori_weyl::{AffineElement, SphericalSubset};
use crate::root_datum::{Coweight, RootDatum};

/// The Bruhat lower set of the translations `t^{x(mu)}`, `x` in `W_0`.
#[derive(Debug, Clone)]
pub struct AdmissibleSet {
    pub mu: Coweight,
    /// Sorted by length, then canonical word.
    pub elements: Vec<AffineElement>,
    pub maximal_translations: Vec<AffineElement>,
    members: HashSet<AffineElement>,
}

impl AdmissibleSet {
    pub fn contains(&self, x: &AffineElement) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &AffineElement> {
        self.elements.iter()
    }
}

/// `W_K Adm(mu) W_K` together with its elements minimal in both cosets.
#[derive(Debug, Clone)]
pub struct AdmissibleK {
    pub elements: Vec<AffineElement>,
    pub double_min: Vec<AffineElement>,
}

impl RootDatum {
    pub(crate) fn check_dominant(&self, mu: &Coweight) -> Result<()> {
        self.check_coweight(mu)?;
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(mu.0.clone()));
        }
        Ok(())
    }

    /// The `W_0`-orbit of `lam`, sorted.
    pub fn orbit(&self, lam: &Coweight) -> Result<Vec<Coweight>> {
        self.check_coweight(lam)?;
        let mut seen: HashSet<Coweight> = HashSet::from([lam.clone()]);
        let mut queue = VecDeque::from([lam.clone()]);
        while let Some(v) = queue.pop_front() {
            for i in 1..=self.rank() {
                let n = self.act_coweight(&self.simple_reflection(i), &v);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        let mut out: Vec<Coweight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Elements covered by `x` in Bruhat order.
    pub fn cocovers(&self, x: &AffineElement) -> Vec<AffineElement> {
        let l = self.aff_length(x);
        let mut out: Vec<AffineElement> = self
            .separating_roots(x)
            .into_iter()
            .map(|ar| self.aff_compose(&self.affine_reflection(ar), x))
            .filter(|y| self.aff_length(y) + 1 == l)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `Adm(mu)`, cached per datum.
    pub fn admissible_set(&self, mu: &Coweight) -> Result<Arc<AdmissibleSet>> {
        self.check_dominant(mu)?;
        if let Some(a) = self.adm_cache.lock().unwrap().get(mu) {
            return Ok(a.clone());
        }
        let maximal: Vec<AffineElement> = self
            .orbit(mu)?
            .iter()
            .map(|l| self.translation(l))
            .collect::<Result<_>>()?;
        let mut members: HashSet<AffineElement> = maximal.iter().cloned().collect();
        let mut queue: VecDeque<AffineElement> = maximal.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for y in self.cocovers(&x) {
                if members.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<AffineElement> = members.iter().cloned().collect();
        self.sort_affine(&mut elements);
        let mut maximal_translations = maximal;
        self.sort_affine(&mut maximal_translations);
        let a = Arc::new(AdmissibleSet {
            mu: mu.clone(),
            elements,
            maximal_translations,
            members,
        });
        self.adm_cache.lock().unwrap().insert(mu.clone(), a.clone());
        Ok(a)
    }

    /// `W_K Adm(mu) W_K`, checking that its right-`W_K`-minimal elements are
    /// exactly those of `Adm(mu)`.
    pub fn admissible_k(&self, mu: &Coweight, k: SphericalSubset) -> Result<AdmissibleK> {
        let adm = self.admissible_set(mu)?;
        let gens: Vec<AffineElement> = k.labels().iter().map(|&i| self.aff_simple(i)).collect();
        let mut members: HashSet<AffineElement> = adm.elements.iter().cloned().collect();
        let mut queue: VecDeque<AffineElement> = adm.elements.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                for y in [self.aff_compose(g, &x), self.aff_compose(&x, g)] {
                    if members.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut elements: Vec<AffineElement> = members.into_iter().collect();
        self.sort_affine(&mut elements);

        let lhs: HashSet<&AffineElement> = elements.iter().filter(|x| self.is_min_right(x, k)).collect();
        let rhs: HashSet<&AffineElement> = adm.elements.iter().filter(|x| self.is_min_right(x, k)).collect();
        if lhs != rhs {
            return Err(Error::CertificateFailed(format!(
                "Adm_K and Adm disagree on minimal coset representatives for K={k:?}"
            )));
        }
        let double_min = elements
            .iter()
            .filter(|x| self.is_min_right(x, k) && self.is_min_left(x, k))
            .cloned()
            .collect();
        Ok(AdmissibleK { elements, double_min })
    }

    /// Bruhat-maximal elements of `Adm(mu)` minimal in their right
    /// `W_K`-cosets, checked against the translations `t^{x(mu)}` passing the
    /// pairing test.
    pub fn max_elements_min_reps(&self, mu: &Coweight, k: SphericalSubset) -> Result<Vec<AffineElement>> {
        let adm = self.admissible_set(mu)?;
        let slice: Vec<&AffineElement> = adm.elements.iter().filter(|x| self.is_min_right(x, k)).collect();
        let maxima: Vec<AffineElement> = slice
            .iter()
            .filter(|&&x| !slice.iter().any(|&y| y != x && self.aff_bruhat_leq(x, y)))
            .map(|&x| x.clone())
            .collect();
        let expected: HashSet<AffineElement> = adm
            .maximal_translations
            .iter()
            .filter(|t| self.is_translation_min_rep(&t.lam, k))
            .cloned()
            .collect();
        if maxima.iter().cloned().collect::<HashSet<_>>() != expected {
            return Err(Error::CertificateFailed(format!(
                "maximal elements of the K={k:?} slice are not the expected translations"
            )));
        }
        Ok(maxima)
    }

    /// `Adm(mu) ∩ W_0 t^lam W_0`, via path weights in the quantum Bruhat graph.
    pub fn stratum(&self, mu: &Coweight, lam: &Coweight) -> Result<Vec<AffineElement>> {
        self.check_dominant(mu)?;
        self.check_dominant(lam)?;
        if !self.dominance_leq(lam, mu)? {
            return Ok(Vec::new());
        }
        let gamma = self
            .coweight_to_coroot(&mu.sub(lam))
            .expect("dominance implies coroot-lattice difference");
        let il = self.finite_subset(&self.stabilizer_labels(lam))?;
        let els = self.enumerate()?;
        let mut out = Vec::new();
        for y in els.iter().filter(|y| self.coset_min(y, il, Side::Left) == **y) {
            let yinv = self.inverse(y);
            for x in &els {
                if self.wt(x, &yinv)?.leq(&gamma) {
                    out.push(AffineElement {
                        lam: self.act_coweight(x, lam),
                        w: self.compose(x, y),
                    });
                }
            }
        }
        self.sort_affine(&mut out);
        Ok(out)
    }

    /// Dominant `lam <= mu` (in the class of `mu`) with `t^lam` admissible.
    pub fn dominant_strata_labels(&self, mu: &Coweight) -> Result<Vec<Coweight>> {
        let adm = self.admissible_set(mu)?;
        let mut out: Vec<Coweight> = adm
            .elements
            .iter()
            .filter(|x| self.is_identity(&x.w) && self.is_dominant(&x.lam))
            .map(|x| x.lam.clone())
            .collect();
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{CartanSpec, Family, LatticeKind};

    fn a1() -> RootDatum {
        RootDatum::new(CartanSpec::adjoint(Family::A, 1)).unwrap()
    }

    fn gl3() -> RootDatum {
        RootDatum::new(CartanSpec::new(Family::A, 2, LatticeKind::Gl)).unwrap()
    }

    #[test]
    fn sizes() {
        let d = a1();
        let adm = d.admissible_set(&Coweight(vec![1])).unwrap();
        let words: Vec<String> = adm.elements.iter().map(|x| d.aff_word_string(x)).collect();
        assert_eq!(words, vec!["e", "0", "1", "01", "10"]);
        let g = gl3();
        assert_eq!(g.admissible_set(&Coweight(vec![1, 0, 0])).unwrap().len(), 7);
        assert_eq!(g.admissible_set(&Coweight(vec![1, 1, 1])).unwrap().len(), 1);
        assert!(matches!(
            d.admissible_set(&Coweight(vec![-1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn parahoric_variant_a1() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let k = d.spherical(&[1]).unwrap();
        let ak = d.admissible_k(&mu, k).unwrap();
        assert_eq!(ak.elements.len(), 6);
        let mins: Vec<String> = ak
            .elements
            .iter()
            .filter(|x| d.is_min_right(x, k))
            .map(|x| d.aff_word_string(x))
            .collect();
        assert_eq!(mins, vec!["e", "0", "10"]);
        let empty = d.admissible_k(&mu, SphericalSubset::empty()).unwrap();
        assert_eq!(empty.elements.len(), 5);
    }

    #[test]
    fn maxima_a1() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let k = d.spherical(&[1]).unwrap();
        assert_eq!(
            d.max_elements_min_reps(&mu, k).unwrap(),
            vec![d.translation(&Coweight(vec![-1])).unwrap()]
        );
        assert_eq!(d.max_elements_min_reps(&mu, SphericalSubset::empty()).unwrap().len(), 2);
    }

    #[test]
    fn strata_a1() {
        let d = a1();
        let mu = Coweight(vec![1]);
        let top: Vec<String> = d
            .stratum(&mu, &mu)
            .unwrap()
            .iter()
            .map(|x| d.aff_word_string(x))
            .collect();
        assert_eq!(top, vec!["0", "01", "10"]);
        let bottom: Vec<String> = d
            .stratum(&mu, &Coweight(vec![0]))
            .unwrap()
            .iter()
            .map(|x| d.aff_word_string(x))
            .collect();
        assert_eq!(bottom, vec!["e", "1"]);
        assert!(d.stratum(&Coweight(vec![0]), &mu).unwrap().is_empty());
    }
}
