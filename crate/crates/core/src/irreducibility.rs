//! Irreducible components of the parahoric admissible locus, the
//! short-root test for irreducibility, and the support classification.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finite_weyl::{FiniteSubset, Side, WeylElement};
use crate::iwahori_weyl::{AffineElement, SphericalSubset};
use crate::root_datum::{Coweight, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Minimal representative `x` of a double coset `W_pr(K) x W_I(mu)`.
    pub rep: WeylElement,
    /// `t^{x(mu)}` conjugated into the right-`W_K`-minimal elements.
    pub translation: AffineElement,
    /// `ell(max W_K t W_K) - ell(w_K)`.
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub mu: Coweight,
    pub k: SphericalSubset,
    pub components: Vec<Component>,
    pub count: usize,
    pub irreducible: bool,
    pub central: bool,
}

/// Outcome of both irreducibility tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// Double-coset count equals one.
    pub by_count: bool,
    /// The short-root criterion; `None` for central `mu`.
    pub by_short_roots: Option<bool>,
}

impl RootDatum {
    pub(crate) fn check_spherical(&self, k: SphericalSubset) -> Result<()> {
        let r = self.rank();
        if k.labels().iter().any(|&i| i > r) || k.len() == r + 1 {
            return Err(Error::NotSpherical(k.labels()));
        }
        Ok(())
    }

    pub fn pr_group(&self, k: SphericalSubset) -> Vec<WeylElement> {
        self.subgroup(&self.pr_subgroup(k))
    }

    /// `W_pr(K) = W_0`.
    pub fn is_special(&self, k: SphericalSubset) -> Result<bool> {
        self.check_spherical(k)?;
        Ok(self.pr_group(k).len() == self.weyl_order()?)
    }

    /// Maximal element of `W_K x W_K`.
    pub fn aff_double_coset_max(&self, x: &AffineElement, k: SphericalSubset) -> AffineElement {
        let mut x = x.clone();
        loop {
            let left = k.labels().into_iter().find(|&i| !self.aff_is_left_descent(&x, i));
            if let Some(i) = left {
                x = self.aff_mul_simple_left(i, &x);
                continue;
            }
            let right = k.labels().into_iter().find(|&i| !self.aff_is_right_descent(&x, i));
            match right {
                Some(i) => x = self.aff_mul_simple_right(&x, i),
                None => return x,
            }
        }
    }

    pub fn component_reps(&self, mu: &Coweight, k: SphericalSubset) -> Result<ComponentReport> {
        self.check_dominant(mu)?;
        self.check_spherical(k)?;
        let im = self.finite_subset(&self.stabilizer_labels(mu))?;
        let reps = self.double_coset_reps(&self.pr_subgroup(k), im)?;
        let lk = self.aff_length(&self.aff_longest(k));
        let mut components = Vec::with_capacity(reps.len());
        for x in reps {
            let lam = self.act_coweight(&x, mu);
            let translation = self.unique_conjugate_in_min_reps(&lam, k)?;
            let top = self.aff_double_coset_max(&translation, k);
            components.push(Component {
                rep: x,
                translation,
                dimension: self.aff_length(&top) - lk,
            });
        }
        let count = components.len();
        Ok(ComponentReport {
            mu: mu.clone(),
            k,
            components,
            count,
            irreducible: count == 1,
            central: self.is_central(mu),
        })
    }

    /// Subgroup generated by the short simple reflections.
    pub fn w_short(&self) -> Vec<WeylElement> {
        self.parabolic_subgroup(FiniteSubset::from_labels(&self.short_simple_set()))
    }

    /// Dynkin type of `W_short`, with its order.
    pub fn w_short_type(&self) -> (String, usize) {
        let j = FiniteSubset::from_labels(&self.short_simple_set());
        (self.dynkin_type(j), self.w_short().len())
    }

    /// Dynkin type of the parabolic subsystem on `j`, e.g. `"A2"` or `"A1xB2"`.
    pub fn dynkin_type(&self, j: FiniteSubset) -> String {
        let nodes = j.labels();
        if nodes.is_empty() {
            return "trivial".into();
        }
        let a = &self.cartan;
        let adjacent = |x: usize, y: usize| x != y && a[x - 1][y - 1] != 0;
        let mut seen: HashSet<usize> = HashSet::new();
        let mut parts = Vec::new();
        for &start in &nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &v in &nodes {
                    if adjacent(u, v) && seen.insert(v) {
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort();
            parts.push(self.component_type(&comp));
        }
        parts.sort();
        parts.join("x")
    }

    fn component_type(&self, comp: &[usize]) -> String {
        let a = &self.cartan;
        let m = comp.len();
        let mut edges = Vec::new();
        for (p, &u) in comp.iter().enumerate() {
            for &v in &comp[p + 1..] {
                let bond = a[u - 1][v - 1] * a[v - 1][u - 1];
                if bond != 0 {
                    edges.push((u, v, bond));
                }
            }
        }
        let degree = |u: usize| edges.iter().filter(|e| e.0 == u || e.1 == u).count();
        if let Some(&(u, v, bond)) = edges.iter().find(|e| e.2 > 1) {
            if bond == 3 {
                return "G2".into();
            }
            if m == 2 {
                return "B2".into();
            }
            let end = if degree(u) == 1 {
                Some(u)
            } else if degree(v) == 1 {
                Some(v)
            } else {
                None
            };
            return match end {
                None => format!("F{m}"),
                Some(e) => {
                    let other = if e == u { v } else { u };
                    if self.sym[e - 1] < self.sym[other - 1] {
                        format!("B{m}")
                    } else {
                        format!("C{m}")
                    }
                }
            };
        }
        let branch = comp.iter().copied().find(|&u| degree(u) == 3);
        match branch {
            None => format!("A{m}"),
            Some(b) => {
                let mut arms: Vec<usize> = Vec::new();
                for &(u, v, _) in edges.iter().filter(|e| e.0 == b || e.1 == b) {
                    let mut prev = b;
                    let mut cur = if u == b { v } else { u };
                    let mut len = 1;
                    loop {
                        let next = edges
                            .iter()
                            .filter(|e| e.0 == cur || e.1 == cur)
                            .map(|e| if e.0 == cur { e.1 } else { e.0 })
                            .find(|&n| n != prev);
                        match next {
                            Some(n) => {
                                prev = cur;
                                cur = n;
                                len += 1;
                            }
                            None => break,
                        }
                    }
                    arms.push(len);
                }
                arms.sort();
                if arms[0] == 1 && arms[1] == 1 {
                    format!("D{m}")
                } else {
                    format!("E{m}")
                }
            }
        }
    }

    /// Both irreducibility tests; they must agree for noncentral `mu`.
    pub fn is_irreducible(&self, mu: &Coweight, k: SphericalSubset) -> Result<Irreducibility> {
        let report = self.component_reps(mu, k)?;
        let by_count = report.count == 1;
        if report.central {
            return Ok(Irreducibility {
                irreducible: by_count,
                by_count,
                by_short_roots: None,
            });
        }
        let route2 = self.is_special(k)? || {
            let shorts = self.short_simple_set();
            let fixes = shorts
                .iter()
                .all(|&i| self.act_coweight(&self.simple_reflection(i), mu) == *mu);
            fixes && self.product_covers_w0(&self.pr_group(k), &self.w_short())?
        };
        if route2 != by_count {
            return Err(Error::RouteDisagreement {
                mu: mu.0.clone(),
                k: k.labels(),
            });
        }
        Ok(Irreducibility {
            irreducible: by_count,
            by_count,
            by_short_roots: Some(route2),
        })
    }

    /// `A * B = W_0` as sets of products.
    pub fn product_covers_w0(&self, a: &[WeylElement], b: &[WeylElement]) -> Result<bool> {
        let mut prod: HashSet<WeylElement> = HashSet::new();
        for x in a {
            for y in b {
                prod.insert(self.compose(x, y));
            }
        }
        Ok(prod.len() == self.weyl_order()?)
    }

    /// Minimal representatives of the cosets `W_pr(K) w`.
    pub fn pr_min_reps(&self, k: SphericalSubset) -> Result<Vec<WeylElement>> {
        self.check_spherical(k)?;
        let t = self.weyl_table()?;
        let group = self.pr_group(k);
        let mut seen = vec![false; t.len()];
        let mut reps = Vec::new();
        for (i, w) in t.elements.iter().enumerate() {
            if seen[i] {
                continue;
            }
            reps.push(w.clone());
            for u in &group {
                seen[t.id(&self.compose(u, w))] = true;
            }
        }
        Ok(reps)
    }

    /// Union of supports of the minimal representatives of `W_pr(K) \ W_0`.
    pub fn supp_min_reps(&self, k: SphericalSubset) -> Result<FiniteSubset> {
        Ok(self
            .pr_min_reps(k)?
            .iter()
            .fold(FiniteSubset::empty(), |acc, w| acc.union(self.support(w))))
    }

    /// Non-special spherical `K` whose minimal representatives have proper
    /// support, with that support.
    pub fn classify(&self) -> Result<Vec<(SphericalSubset, FiniteSubset)>> {
        let full = FiniteSubset::full(self.rank());
        let mut out = Vec::new();
        for k in self.spherical_subsets() {
            if self.is_special(k)? {
                continue;
            }
            let supp = self.supp_min_reps(k)?;
            if supp != full {
                out.push((k, supp));
            }
        }
        Ok(out)
    }

    /// Brute-force count of Bruhat-maximal classes in `W_K \ Adm_K / W_K`.
    pub fn maximal_double_classes(&self, mu: &Coweight, k: SphericalSubset) -> Result<Vec<AffineElement>> {
        let ak = self.admissible_k(mu, k)?;
        let mut tops: Vec<AffineElement> = ak
            .elements
            .iter()
            .map(|x| self.aff_double_coset_max(x, k))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        self.sort_affine(&mut tops);
        let maximal: Vec<AffineElement> = tops
            .iter()
            .filter(|x| !tops.iter().any(|y| y != *x && self.aff_bruhat_leq(x, y)))
            .cloned()
            .collect();
        Ok(maximal)
    }

    /// Minimal element of `W_K x W_K`.
    pub fn aff_double_coset_min(&self, x: &AffineElement, k: SphericalSubset) -> AffineElement {
        let l = self.aff_coset_min(x, k, Side::Left);
        let r = self.aff_coset_min(&l, k, Side::Right);
        if r == l {
            r
        } else {
            self.aff_double_coset_min(&r, k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{CartanSpec, Family, LatticeKind};

    fn rd(f: Family, n: usize) -> RootDatum {
        RootDatum::new(CartanSpec::adjoint(f, n)).unwrap()
    }

    fn c2eps() -> RootDatum {
        let basis = vec![vec![1, 1], vec![0, 1]];
        RootDatum::new(CartanSpec::new(
            Family::C,
            2,
            LatticeKind::Custom { basis, denominator: 1 },
        ))
        .unwrap()
    }

    #[test]
    fn components_a1() {
        let d = rd(Family::A, 1);
        let rep = d.component_reps(&Coweight(vec![1]), SphericalSubset::empty()).unwrap();
        assert_eq!(rep.count, 2);
        let lams: Vec<Vec<i64>> = rep.components.iter().map(|c| c.translation.lam.0.clone()).collect();
        assert_eq!(lams, vec![vec![1], vec![-1]]);
        assert!(rep.components.iter().all(|c| c.dimension == 2));
        let k = d.spherical(&[1]).unwrap();
        let rep = d.component_reps(&Coweight(vec![1]), k).unwrap();
        assert_eq!(rep.count, 1);
        assert_eq!(rep.components[0].dimension, 2);
    }

    #[test]
    fn siegel_and_non_siegel() {
        let d = c2eps();
        let k = d.spherical(&[0, 2]).unwrap();
        let yes = d.is_irreducible(&Coweight(vec![1, 1]), k).unwrap();
        assert!(yes.irreducible);
        assert_eq!(yes.by_short_roots, Some(true));
        let no = d.is_irreducible(&Coweight(vec![1, 0]), k).unwrap();
        assert!(!no.irreducible);
        assert_eq!(d.component_reps(&Coweight(vec![1, 0]), k).unwrap().count, 2);
        let g = RootDatum::new(CartanSpec::new(Family::A, 2, LatticeKind::Gl)).unwrap();
        let sp = g.spherical(&[1, 2]).unwrap();
        assert!(g.is_irreducible(&Coweight(vec![1, 0, 0]), sp).unwrap().irreducible);
    }

    #[test]
    fn supports() {
        let b2 = rd(Family::B, 2);
        assert_eq!(b2.supp_min_reps(b2.complement_of(2)).unwrap().labels(), vec![2]);
        let c2 = rd(Family::C, 2);
        assert_eq!(c2.supp_min_reps(c2.complement_of(1)).unwrap().labels(), vec![1]);
        assert!(c2.supp_min_reps(c2.complement_of(0)).unwrap().is_empty());
    }

    #[test]
    fn classification_small() {
        assert!(rd(Family::A, 3).classify().unwrap().is_empty());
        let g2 = rd(Family::G, 2);
        let c = g2.classify().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].0, g2.complement_of(1));
        assert_eq!(c[0].1.labels(), vec![1]);
    }

    #[test]
    fn dynkin_types() {
        assert_eq!(rd(Family::C, 4).w_short_type(), ("A3".to_string(), 24));
        assert_eq!(rd(Family::B, 3).w_short_type(), ("A1".to_string(), 2));
        assert_eq!(rd(Family::F, 4).w_short_type(), ("A2".to_string(), 6));
        assert_eq!(rd(Family::D, 4).w_short_type(), ("trivial".to_string(), 1));
        let e6 = rd(Family::E, 6);
        assert_eq!(e6.dynkin_type(FiniteSubset::full(6)), "E6");
        let d5 = rd(Family::D, 5);
        assert_eq!(d5.dynkin_type(FiniteSubset::full(5)), "D5");
        assert_eq!(d5.dynkin_type(FiniteSubset::from_labels(&[1, 3])), "A1xA1");
        assert_eq!(rd(Family::B, 3).dynkin_type(FiniteSubset::full(3)), "B3");
        assert_eq!(rd(Family::C, 3).dynkin_type(FiniteSubset::full(3)), "C3");
        assert_eq!(rd(Family::F, 4).dynkin_type(FiniteSubset::full(4)), "F4");
    }
}
