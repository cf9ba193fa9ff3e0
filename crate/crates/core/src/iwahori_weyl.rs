//! The Iwahori-Weyl group `X ⋊ W_0`.
//!
//! `t^lambda w` acts on `V` by `v -> lambda + w(v)` and on affine roots by
//! `(alpha, k) -> (w alpha, k - <lambda, w alpha>)`. An affine root
//! `(alpha, k)` is the function `v -> <v, alpha> + k`; it is positive when
//! `k >= 0` for positive `alpha` and `k >= 1` for negative `alpha`, so the base
//! alcove lies in the dominant chamber. The affine simple root is
//! `(-theta, 1)` and `s_0 = t^{theta^vee} s_theta`.
//!
//! Other references use the opposite sign for the level; converting means
//! replacing `(alpha, k)` by `(alpha, -k)` throughout.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::finite_weyl::{FiniteSubset, Side, WeylElement};
use crate::root_datum::{join, Coweight, RootDatum};

/// The element `t^lam w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineElement {
    pub lam: Coweight,
    pub w: WeylElement,
}

/// The affine root `(root, level)`; `root` indexes `RootDatum::roots`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineRoot {
    pub root: usize,
    pub level: i64,
}

/// A subset of the affine simple reflections; label 0 is the affine node.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SphericalSubset(u32);

impl SphericalSubset {
    pub fn empty() -> Self {
        SphericalSubset(0)
    }

    pub fn from_bits(bits: u32) -> Self {
        SphericalSubset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn labels(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, o: SphericalSubset) -> bool {
        self.0 & !o.0 == 0
    }

    /// The labels lying in `S_0`.
    pub fn finite_part(self) -> FiniteSubset {
        FiniteSubset::from_bits(self.0)
    }
}

impl fmt::Debug for SphericalSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels())
    }
}

impl RootDatum {
    /// Validates labels in `0..=rank` and finiteness of `W_K`.
    pub fn spherical(&self, labels: &[usize]) -> Result<SphericalSubset> {
        let r = self.rank();
        if labels.iter().any(|&i| i > r) {
            return Err(Error::NotSpherical(labels.to_vec()));
        }
        let k = SphericalSubset(labels.iter().fold(0, |m, &i| m | (1 << i)));
        if k.len() == r + 1 {
            return Err(Error::NotSpherical(k.labels()));
        }
        Ok(k)
    }

    /// All spherical subsets, in increasing bit order.
    pub fn spherical_subsets(&self) -> Vec<SphericalSubset> {
        let full = (1u32 << (self.rank() + 1)) - 1;
        (0..full).map(SphericalSubset).collect()
    }

    /// `S~` minus one label.
    pub fn complement_of(&self, i: usize) -> SphericalSubset {
        let full = (1u32 << (self.rank() + 1)) - 1;
        SphericalSubset(full & !(1 << i))
    }

    pub fn aff_identity(&self) -> AffineElement {
        AffineElement {
            lam: Coweight::zero(self.dim()),
            w: self.identity(),
        }
    }

    pub fn translation(&self, lam: &Coweight) -> Result<AffineElement> {
        self.check_coweight(lam)?;
        Ok(AffineElement {
            lam: lam.clone(),
            w: self.identity(),
        })
    }

    pub fn aff_from_parts(&self, lam: Coweight, w: WeylElement) -> AffineElement {
        AffineElement { lam, w }
    }

    pub fn aff_from_finite(&self, w: &WeylElement) -> AffineElement {
        AffineElement {
            lam: Coweight::zero(self.dim()),
            w: w.clone(),
        }
    }

    pub fn aff_compose(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        AffineElement {
            lam: a.lam.add(&self.act_coweight(&a.w, &b.lam)),
            w: self.compose(&a.w, &b.w),
        }
    }

    pub fn aff_inverse(&self, a: &AffineElement) -> AffineElement {
        let wi = self.inverse(&a.w);
        AffineElement {
            lam: self.act_coweight(&wi, &a.lam).neg(),
            w: wi,
        }
    }

    pub fn pr(&self, x: &AffineElement) -> WeylElement {
        x.w.clone()
    }

    pub fn affine_root_is_positive(&self, ar: AffineRoot) -> bool {
        let delta = i64::from(!self.is_positive_index(ar.root));
        ar.level >= delta
    }

    pub fn act_affine(&self, x: &AffineElement, ar: AffineRoot) -> Result<AffineRoot> {
        self.check_coweight(&x.lam)?;
        if ar.root >= self.num_roots() || x.w.num_roots() != self.num_roots() {
            return Err(Error::DatumMismatch("affine root or element from another datum".into()));
        }
        Ok(self.act_affine_unchecked(x, ar))
    }

    pub(crate) fn act_affine_unchecked(&self, x: &AffineElement, ar: AffineRoot) -> AffineRoot {
        let img = x.w.apply(ar.root);
        AffineRoot {
            root: img,
            level: ar.level - self.pair_index(&x.lam, img),
        }
    }

    /// `(alpha_i, 0)` for `i` in `S_0`, `(-theta, 1)` for `i = 0`.
    pub fn simple_affine_root(&self, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot {
                root: self.neg_index(self.highest_root_index()),
                level: 1,
            }
        } else {
            AffineRoot {
                root: self.simple_root_index(i),
                level: 0,
            }
        }
    }

    /// The reflection in the affine root `(alpha, k)`, which is
    /// `t^{-k alpha^vee} s_alpha`.
    pub fn affine_reflection(&self, ar: AffineRoot) -> AffineElement {
        let cv = self.coroot(ar.root);
        AffineElement {
            lam: Coweight(cv.0.iter().map(|x| -ar.level * x).collect()),
            w: self.reflection(ar.root),
        }
    }

    pub fn aff_simple(&self, i: usize) -> AffineElement {
        self.affine_reflection(self.simple_affine_root(i))
    }

    /// `ell(t^lam y)` by the closed formula.
    pub fn aff_length(&self, x: &AffineElement) -> usize {
        let q = self.simple_pairings(&x.lam);
        let yinv = self.inverse(&x.w);
        let mut total = 0i64;
        for (g, rt) in self.positive_roots().iter().enumerate() {
            let p: i64 = q.iter().zip(&rt.coords).map(|(a, b)| a * b).sum();
            if self.is_positive_index(yinv.apply(g)) {
                total += p.abs();
            } else {
                total += (p - 1).abs();
            }
        }
        total as usize
    }

    /// Positive affine roots sent to negative ones by `x`.
    pub fn affine_inversions(&self, x: &AffineElement) -> Vec<AffineRoot> {
        let q = self.simple_pairings(&x.lam);
        let mut out = Vec::new();
        for a in 0..self.num_roots() {
            let img = x.w.apply(a);
            let p: i64 = q.iter().zip(&self.roots[img].coords).map(|(u, v)| u * v).sum();
            let lo = i64::from(!self.is_positive_index(a));
            let hi = p + i64::from(!self.is_positive_index(img)) - 1;
            for k in lo..=hi {
                out.push(AffineRoot { root: a, level: k });
            }
        }
        out
    }

    /// Positive affine roots whose hyperplanes separate the base alcove from
    /// `x` applied to it.
    pub fn separating_roots(&self, x: &AffineElement) -> Vec<AffineRoot> {
        let h = self.coxeter_number();
        let q = self.simple_pairings(&x.lam);
        let yinv = self.inverse(&x.w);
        let mut out = Vec::new();
        for a in 0..self.num_roots() {
            let v = h * q.iter().zip(&self.roots[a].coords).map(|(u, w)| u * w).sum::<i64>()
                + self.root_height(yinv.apply(a));
            let lo = i64::from(!self.is_positive_index(a));
            let mut k = lo;
            while h * k + v < 0 {
                out.push(AffineRoot { root: a, level: k });
                k += 1;
            }
        }
        out
    }

    pub fn omega_class_of(&self, x: &AffineElement) -> Vec<i64> {
        self.omega_class(&x.lam)
    }

    pub fn same_omega_class(&self, x: &AffineElement, y: &AffineElement) -> bool {
        self.omega_class(&x.lam) == self.omega_class(&y.lam)
    }

    /// `x s_i < x`.
    pub fn aff_is_right_descent(&self, x: &AffineElement, i: usize) -> bool {
        let img = self.act_affine_unchecked(x, self.simple_affine_root(i));
        !self.affine_root_is_positive(img)
    }

    /// `s_i x < x`.
    pub fn aff_is_left_descent(&self, x: &AffineElement, i: usize) -> bool {
        let xi = self.aff_inverse(x);
        self.aff_is_right_descent(&xi, i)
    }

    pub fn aff_mul_simple_left(&self, i: usize, x: &AffineElement) -> AffineElement {
        self.aff_compose(&self.aff_simple(i), x)
    }

    pub fn aff_mul_simple_right(&self, x: &AffineElement, i: usize) -> AffineElement {
        self.aff_compose(x, &self.aff_simple(i))
    }

    pub fn aff_from_word(&self, word: &[usize]) -> AffineElement {
        word.iter()
            .fold(self.aff_identity(), |x, &i| self.aff_mul_simple_right(&x, i))
    }

    /// Canonical decomposition `x = s_{i_1} ... s_{i_m} tau` with the
    /// lexicographically smallest reduced word and `tau` of length zero.
    pub fn aff_word(&self, x: &AffineElement) -> (Vec<usize>, AffineElement) {
        let mut cur = x.clone();
        let mut word = Vec::new();
        let mut len = self.aff_length(x);
        while len > 0 {
            let i = (0..=self.rank()).find(|&i| self.aff_is_left_descent(&cur, i)).unwrap();
            word.push(i);
            cur = self.aff_mul_simple_left(i, &cur);
            len -= 1;
        }
        (word, cur)
    }

    /// Digits of the canonical word; elements outside the affine Weyl group
    /// carry a suffix `|t(lambda)w<word>` naming the length-zero part.
    pub fn aff_word_string(&self, x: &AffineElement) -> String {
        let (word, tau) = self.aff_word(x);
        let head = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| i.to_string()).collect()
        };
        if tau == self.aff_identity() {
            head
        } else {
            format!("{}|t({})w{}", head, join(&tau.lam.0), self.word_string(&tau.w))
        }
    }

    /// Parses `"010"`, `"e"`, `"t(1,0,0)w21"` or a word with a `|t(..)w..`
    /// suffix.
    pub fn parse_affine(&self, s: &str) -> Result<AffineElement> {
        let s = s.trim();
        let (head, tail) = match s.split_once('|') {
            Some((h, t)) => (h, Some(t)),
            None if s.starts_with("t(") => ("e", Some(s)),
            None => (s, None),
        };
        let mut word = Vec::new();
        if head != "e" && !head.is_empty() {
            for c in head.chars() {
                match c.to_digit(10) {
                    Some(d) if (d as usize) <= self.rank() => word.push(d as usize),
                    _ => return Err(Error::Parse(format!("bad letter '{c}' in '{s}'"))),
                }
            }
        }
        let mut x = self.aff_from_word(&word);
        if let Some(t) = tail {
            let t = t
                .strip_prefix("t(")
                .ok_or_else(|| Error::Parse(format!("expected t(..) in '{s}'")))?;
            let (lam, fin) = t
                .split_once(")w")
                .ok_or_else(|| Error::Parse(format!("expected )w in '{s}'")))?;
            let lam = parse_ints(lam)?;
            let lam = Coweight(lam);
            self.check_coweight(&lam)?;
            let tau = AffineElement {
                lam,
                w: self.parse_word(fin)?,
            };
            x = self.aff_compose(&x, &tau);
        }
        Ok(x)
    }

    /// Bruhat order; elements in different components are incomparable.
    pub fn aff_bruhat_leq(&self, x: &AffineElement, y: &AffineElement) -> bool {
        if !self.same_omega_class(x, y) {
            return false;
        }
        let mut x = x.clone();
        let mut y = y.clone();
        let mut lx = self.aff_length(&x);
        let mut ly = self.aff_length(&y);
        loop {
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            let i = (0..=self.rank()).find(|&i| self.aff_is_left_descent(&y, i)).unwrap();
            if self.aff_is_left_descent(&x, i) {
                x = self.aff_mul_simple_left(i, &x);
                lx -= 1;
            }
            y = self.aff_mul_simple_left(i, &y);
            ly -= 1;
        }
    }

    /// The finite group `W_K`, sorted by length and canonical word.
    pub fn parahoric_group(&self, k: SphericalSubset) -> Vec<AffineElement> {
        let gens: Vec<AffineElement> = k.labels().iter().map(|&i| self.aff_simple(i)).collect();
        let mut seen: HashSet<AffineElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.aff_identity());
        queue.push_back(self.aff_identity());
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let n = self.aff_compose(&x, g);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        let mut v: Vec<AffineElement> = seen.into_iter().collect();
        self.sort_affine(&mut v);
        v
    }

    pub fn sort_affine(&self, v: &mut [AffineElement]) {
        v.sort_by_cached_key(|x| {
            let (w, t) = self.aff_word(x);
            (self.aff_length(x), w, t)
        });
    }

    /// Longest element of `W_K`.
    pub fn aff_longest(&self, k: SphericalSubset) -> AffineElement {
        let mut x = self.aff_identity();
        loop {
            match k.labels().into_iter().find(|&i| !self.aff_is_right_descent(&x, i)) {
                Some(i) => x = self.aff_mul_simple_right(&x, i),
                None => return x,
            }
        }
    }

    /// Minimal element of `W_K x` (left) or `x W_K` (right).
    pub fn aff_coset_min(&self, x: &AffineElement, k: SphericalSubset, side: Side) -> AffineElement {
        let mut x = x.clone();
        loop {
            let d = k.labels().into_iter().find(|&i| match side {
                Side::Left => self.aff_is_left_descent(&x, i),
                Side::Right => self.aff_is_right_descent(&x, i),
            });
            match d {
                Some(i) => {
                    x = match side {
                        Side::Left => self.aff_mul_simple_left(i, &x),
                        Side::Right => self.aff_mul_simple_right(&x, i),
                    }
                }
                None => return x,
            }
        }
    }

    /// Maximal element of `W_K x` (left) or `x W_K` (right).
    pub fn aff_coset_max(&self, x: &AffineElement, k: SphericalSubset, side: Side) -> AffineElement {
        let mut x = x.clone();
        loop {
            let d = k.labels().into_iter().find(|&i| match side {
                Side::Left => !self.aff_is_left_descent(&x, i),
                Side::Right => !self.aff_is_right_descent(&x, i),
            });
            match d {
                Some(i) => {
                    x = match side {
                        Side::Left => self.aff_mul_simple_left(i, &x),
                        Side::Right => self.aff_mul_simple_right(&x, i),
                    }
                }
                None => return x,
            }
        }
    }

    /// `x` is minimal in `x W_K`.
    pub fn is_min_right(&self, x: &AffineElement, k: SphericalSubset) -> bool {
        k.labels().iter().all(|&i| !self.aff_is_right_descent(x, i))
    }

    /// `x` is minimal in `W_K x`.
    pub fn is_min_left(&self, x: &AffineElement, k: SphericalSubset) -> bool {
        k.labels().iter().all(|&i| !self.aff_is_left_descent(x, i))
    }

    /// `<lambda, alpha_i> <= 0` for all `i` in `K`, with `alpha_0 = -theta`.
    pub fn is_translation_min_rep(&self, lam: &Coweight, k: SphericalSubset) -> bool {
        let q = self.simple_pairings(lam);
        k.labels().iter().all(|&i| {
            if i == 0 {
                -self.pair_index(lam, self.highest_root_index()) <= 0
            } else {
                q[i - 1] <= 0
            }
        })
    }

    /// Generators `pr(s_i)`, `i` in `K`, of `W_pr(K)`.
    pub fn pr_subgroup(&self, k: SphericalSubset) -> Vec<WeylElement> {
        k.labels().iter().map(|&i| self.aff_simple(i).w).collect()
    }

    /// The unique `W_K`-conjugate of `t^lambda` that is minimal in its right
    /// `W_K`-coset.
    pub fn unique_conjugate_in_min_reps(&self, lam: &Coweight, k: SphericalSubset) -> Result<AffineElement> {
        self.check_coweight(lam)?;
        let group = self.subgroup(&self.pr_subgroup(k));
        let mut found: Vec<Coweight> = group
            .iter()
            .map(|u| self.act_coweight(u, lam))
            .filter(|c| self.is_translation_min_rep(c, k))
            .collect();
        found.sort();
        found.dedup();
        match found.len() {
            1 => self.translation(&found[0]),
            _ => Err(Error::NotUnique(format!(
                "W_K-conjugates of t^{lam} minimal in their cosets: {found:?}"
            ))),
        }
    }

    /// Whether `x(base alcove)` lies in the acute cone in direction `z`.
    pub fn in_acute_cone(&self, x: &AffineElement, z: &WeylElement) -> bool {
        let h = self.coxeter_number();
        let q = self.simple_pairings(&x.lam);
        let yinv = self.inverse(&x.w);
        let zinv = self.inverse(z);
        self.separating_roots(x).into_iter().all(|ar| {
            let (a, k) = if self.is_positive_index(zinv.apply(ar.root)) {
                (ar.root, ar.level)
            } else {
                (self.neg_index(ar.root), -ar.level)
            };
            let v = h * q.iter().zip(&self.roots[a].coords).map(|(u, w)| u * w).sum::<i64>()
                + self.root_height(yinv.apply(a));
            v + h * k > 0
        })
    }

    pub fn acute_directions(&self, x: &AffineElement) -> Result<Vec<WeylElement>> {
        Ok(self
            .enumerate()?
            .into_iter()
            .filter(|z| self.in_acute_cone(x, z))
            .collect())
    }
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("'{p}' is not an integer")))
        })
        .collect()
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
    fn translations_in_a1() {
        let d = a1();
        let t = d.translation(&Coweight(vec![1])).unwrap();
        let tm = d.translation(&Coweight(vec![-1])).unwrap();
        assert_eq!(d.aff_compose(&t, &tm), d.aff_identity());
        assert_eq!(d.aff_length(&d.aff_identity()), 0);
        assert_eq!(d.aff_length(&t), 2);
        assert_eq!(d.aff_from_word(&[0, 1]), t);
        assert_eq!(d.aff_word_string(&t), "01");
        assert_eq!(
            d.aff_simple(0),
            d.aff_compose(&t, &d.aff_from_finite(&d.simple_reflection(1)))
        );
    }

    #[test]
    fn affine_root_action() {
        let d = a1();
        let t = d.translation(&Coweight(vec![1])).unwrap();
        let a = AffineRoot { root: 0, level: 0 };
        assert_eq!(d.act_affine(&t, a).unwrap(), AffineRoot { root: 0, level: -2 });
        assert_eq!(d.act_affine(&d.aff_identity(), a).unwrap(), a);
        let s1 = d.aff_simple(1);
        let img = d.act_affine(&s1, a).unwrap();
        assert_eq!(img, AffineRoot { root: 1, level: 0 });
        assert!(!d.affine_root_is_positive(img));
    }

    #[test]
    fn lengths_match_inversion_counts() {
        let g = gl3();
        let t = g.translation(&Coweight(vec![1, 0, 0])).unwrap();
        assert_eq!(g.aff_length(&t), 2);
        for w in g.enumerate().unwrap() {
            for lam in [[1, 0, 0], [2, -1, 0], [0, 0, 3], [-1, 2, 1]] {
                let x = g.aff_from_parts(Coweight(lam.to_vec()), w.clone());
                assert_eq!(g.aff_length(&x), g.affine_inversions(&x).len());
                let mut sep = g.separating_roots(&x);
                let mut inv = g.affine_inversions(&g.aff_inverse(&x));
                sep.sort();
                inv.sort();
                assert_eq!(sep, inv);
            }
        }
    }

    #[test]
    fn simple_affine_roots() {
        let a2 = RootDatum::new(CartanSpec::adjoint(Family::A, 2)).unwrap();
        let r0 = a2.simple_affine_root(0);
        assert_eq!(a2.root(r0.root).coords, vec![-1, -1]);
        assert_eq!(r0.level, 1);
        let c2 = RootDatum::new(CartanSpec::adjoint(Family::C, 2)).unwrap();
        assert_eq!(c2.root(c2.simple_affine_root(0).root).coords, vec![-2, -1]);
        assert_eq!(
            c2.simple_affine_root(2),
            AffineRoot {
                root: c2.simple_root_index(2),
                level: 0
            }
        );
    }

    #[test]
    fn bruhat_examples() {
        let d = a1();
        let e = d.aff_identity();
        let s1 = d.aff_from_word(&[1]);
        let s01 = d.aff_from_word(&[0, 1]);
        let s10 = d.aff_from_word(&[1, 0]);
        assert!(d.aff_bruhat_leq(&e, &s01));
        assert!(d.aff_bruhat_leq(&s1, &s01));
        assert!(!d.aff_bruhat_leq(&s01, &s10));
        let g = gl3();
        let t1 = g.translation(&Coweight(vec![1, 0, 0])).unwrap();
        let t2 = g.translation(&Coweight(vec![0, 1, 0])).unwrap();
        assert!(g.same_omega_class(&t1, &t2));
        assert!(!g.aff_bruhat_leq(&t1, &t2));
        assert!(!g.aff_bruhat_leq(&g.aff_identity(), &t1));
    }

    #[test]
    fn translation_min_reps() {
        let d = a1();
        let k = d.spherical(&[1]).unwrap();
        assert!(d.is_translation_min_rep(&Coweight(vec![5]), SphericalSubset::empty()));
        assert!(!d.is_translation_min_rep(&Coweight(vec![1]), k));
        assert!(d.is_translation_min_rep(&Coweight(vec![-1]), k));
        assert_eq!(
            d.unique_conjugate_in_min_reps(&Coweight(vec![1]), k).unwrap(),
            d.translation(&Coweight(vec![-1])).unwrap()
        );
        let a2 = RootDatum::new(CartanSpec::adjoint(Family::A, 2)).unwrap();
        let k12 = a2.spherical(&[1, 2]).unwrap();
        assert_eq!(
            a2.unique_conjugate_in_min_reps(&Coweight(vec![1, 1]), k12).unwrap().lam,
            Coweight(vec![-1, -1])
        );
        assert_eq!(
            a2.unique_conjugate_in_min_reps(&Coweight(vec![0, 0]), k12).unwrap(),
            a2.aff_identity()
        );
    }

    #[test]
    fn projections() {
        let d = a1();
        assert!(d.is_identity(&d.pr(&d.translation(&Coweight(vec![3])).unwrap())));
        assert_eq!(d.pr(&d.aff_simple(0)), d.simple_reflection(1));
        let c2 = RootDatum::new(CartanSpec::adjoint(Family::C, 2)).unwrap();
        let k = c2.spherical(&[0, 2]).unwrap();
        assert_eq!(c2.subgroup(&c2.pr_subgroup(k)).len(), 4);
        assert!(c2.spherical(&[0, 1, 2]).is_err());
        assert!(c2.spherical(&[3]).is_err());
    }

    #[test]
    fn acute_cones_a1() {
        let d = a1();
        let t = d.translation(&Coweight(vec![1])).unwrap();
        assert!(d.in_acute_cone(&t, &d.identity()));
        assert!(!d.in_acute_cone(&t, &d.simple_reflection(1)));
        assert_eq!(d.acute_directions(&d.aff_identity()).unwrap().len(), 2);
    }

    #[test]
    fn word_strings_round_trip() {
        let g = gl3();
        for lam in [[1, 0, 0], [0, 1, 0], [2, 1, 0], [0, 0, 0]] {
            for w in g.enumerate().unwrap() {
                let x = g.aff_from_parts(Coweight(lam.to_vec()), w);
                let s = g.aff_word_string(&x);
                assert_eq!(g.parse_affine(&s).unwrap(), x, "{s}");
            }
        }
    }
}
