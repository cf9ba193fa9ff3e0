//! The finite Weyl group `W_0`.
//!
//! An element is stored as the permutation it induces on the root system,
//! which makes equality, hashing and the root action constant-time lookups.
//! Reduced words are derived on demand; the canonical word is the
//! lexicographically smallest one.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::intmat;
use crate::root_datum::{CorootVec, Coweight, RootDatum};

/// Groups larger than this are never enumerated.
pub const ENUMERATION_LIMIT: usize = 60_000;
/// Groups up to this size get a precomputed Bruhat-order bitset.
const BRUHAT_TABLE_LIMIT: usize = 6_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Box<[u16]>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.perm)
    }
}

impl WeylElement {
    /// Image of the root with index `idx`.
    pub fn apply(&self, idx: usize) -> usize {
        self.perm[idx] as usize
    }

    pub fn num_roots(&self) -> usize {
        self.perm.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A subset of the finite simple reflections, by label `1..=rank`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FiniteSubset(u32);

impl FiniteSubset {
    pub fn empty() -> Self {
        FiniteSubset(0)
    }

    pub fn full(rank: usize) -> Self {
        FiniteSubset(((1u32 << rank) - 1) << 1)
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        FiniteSubset(labels.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn from_bits(bits: u32) -> Self {
        FiniteSubset(bits & !1)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn labels(self) -> Vec<usize> {
        (1..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, o: FiniteSubset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn union(self, o: FiniteSubset) -> FiniteSubset {
        FiniteSubset(self.0 | o.0)
    }
}

impl fmt::Debug for FiniteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels())
    }
}

/// Enumerated `W_0` with multiplication tables by simple reflections.
pub struct WeylTable {
    pub elements: Vec<WeylElement>,
    pub ids: HashMap<WeylElement, u32>,
    pub lengths: Vec<u32>,
    pub words: Vec<Vec<u8>>,
    /// `left[i - 1][x]` is the id of `s_i x`.
    pub left: Vec<Vec<u32>>,
    /// `right[i - 1][x]` is the id of `x s_i`.
    pub right: Vec<Vec<u32>>,
    pub inverse: Vec<u32>,
    bruhat: OnceLock<Option<Vec<Vec<u64>>>>,
}

impl WeylTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn id(&self, w: &WeylElement) -> usize {
        self.ids[w] as usize
    }

    fn bruhat_rows(&self) -> Option<&Vec<Vec<u64>>> {
        self.bruhat
            .get_or_init(|| {
                let n = self.len();
                if n > BRUHAT_TABLE_LIMIT {
                    return None;
                }
                let words = n.div_ceil(64);
                let mut rows: Vec<Vec<u64>> = vec![Vec::new(); n];
                for y in 0..n {
                    let mut row = vec![0u64; words];
                    if y == 0 {
                        row[0] = 1;
                    } else {
                        let s = self.words[y][0] as usize - 1;
                        let yp = self.left[s][y] as usize;
                        let prev = rows[yp].clone();
                        for (k, &w) in prev.iter().enumerate() {
                            row[k] |= w;
                            let mut bits = w;
                            while bits != 0 {
                                let b = bits.trailing_zeros() as usize;
                                bits &= bits - 1;
                                let z = self.left[s][k * 64 + b] as usize;
                                row[z / 64] |= 1 << (z % 64);
                            }
                        }
                    }
                    rows[y] = row;
                }
                Some(rows)
            })
            .as_ref()
    }

    /// Bruhat comparison by element ids, when a bitset is available.
    pub fn bruhat_leq_ids(&self, x: usize, y: usize) -> Option<bool> {
        self.bruhat_rows().map(|r| r[y][x / 64] & (1 << (x % 64)) != 0)
    }
}

impl RootDatum {
    pub fn identity(&self) -> WeylElement {
        WeylElement {
            perm: (0..self.num_roots() as u16).collect(),
        }
    }

    /// The reflection in a root (either sign).
    pub fn reflection(&self, idx: usize) -> WeylElement {
        let p = if idx < self.n_pos { idx } else { self.neg_index(idx) };
        WeylElement {
            perm: self.reflections[p].clone(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.reflection(self.simple_root_index(i))
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        WeylElement {
            perm: b.perm.iter().map(|&i| a.perm[i as usize]).collect(),
        }
    }

    pub fn inverse(&self, a: &WeylElement) -> WeylElement {
        let mut p = vec![0u16; a.perm.len()];
        for (i, &j) in a.perm.iter().enumerate() {
            p[j as usize] = i as u16;
        }
        WeylElement { perm: p.into() }
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.perm[..self.n_pos]
            .iter()
            .filter(|&&j| j as usize >= self.n_pos)
            .count()
    }

    pub fn is_identity(&self, w: &WeylElement) -> bool {
        w.perm.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        w.apply(self.simple_root_index(i)) >= self.n_pos
    }

    /// `w^{-1}(alpha_i) < 0`.
    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        let t = self.simple_root_index(i) as u16;
        let pre = w.perm.iter().position(|&j| j == t).unwrap();
        pre >= self.n_pos
    }

    pub fn descents(&self, w: &WeylElement, side: Side) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| match side {
                Side::Right => self.is_right_descent(w, i),
                Side::Left => self.is_left_descent(w, i),
            })
            .collect()
    }

    pub fn mul_simple_left(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.compose(&self.simple_reflection(i), w)
    }

    pub fn mul_simple_right(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.compose(w, &self.simple_reflection(i))
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.identity(), |w, &i| self.mul_simple_right(&w, i))
    }

    /// Parses a digit string such as `"121"`; `"e"` or `""` is the identity.
    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if d >= 1 && (d as usize) <= self.rank() => word.push(d as usize),
                _ => return Err(Error::Parse(format!("bad letter '{c}' in word '{s}'"))),
            }
        }
        Ok(self.from_word(&word))
    }

    /// The lexicographically minimal reduced word.
    pub fn word(&self, w: &WeylElement) -> Vec<usize> {
        let mut out = Vec::new();
        let mut inv = self.inverse(w);
        let mut len = self.length(w);
        while len > 0 {
            let i = (1..=self.rank()).find(|&i| self.is_right_descent(&inv, i)).unwrap();
            out.push(i);
            inv = self.mul_simple_right(&inv, i);
            len -= 1;
        }
        out
    }

    pub fn word_string(&self, w: &WeylElement) -> String {
        word_to_string(&self.word(w))
    }

    pub fn support(&self, w: &WeylElement) -> FiniteSubset {
        FiniteSubset::from_labels(&self.word(w))
    }

    pub fn finite_subset(&self, labels: &[usize]) -> Result<FiniteSubset> {
        let bad: Vec<usize> = labels.iter().copied().filter(|&i| i == 0 || i > self.rank()).collect();
        if !bad.is_empty() {
            return Err(Error::NotFinite(labels.to_vec()));
        }
        Ok(FiniteSubset::from_labels(labels))
    }

    pub fn bruhat_leq(&self, x: &WeylElement, y: &WeylElement) -> bool {
        if let Some(Ok(t)) = self.table.get() {
            if let Some(b) = t.bruhat_leq_ids(t.id(x), t.id(y)) {
                return b;
            }
        }
        self.bruhat_leq_rec(x, y)
    }

    fn bruhat_leq_rec(&self, x: &WeylElement, y: &WeylElement) -> bool {
        let mut x = x.clone();
        let mut y = y.clone();
        loop {
            let lx = self.length(&x);
            let ly = self.length(&y);
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            if lx == 0 {
                return true;
            }
            let i = (1..=self.rank()).find(|&i| self.is_left_descent(&y, i)).unwrap();
            if self.is_left_descent(&x, i) {
                x = self.mul_simple_left(i, &x);
            }
            y = self.mul_simple_left(i, &y);
        }
    }

    /// Minimal element of `W_J w` (left) or `w W_J` (right).
    pub fn coset_min(&self, w: &WeylElement, j: FiniteSubset, side: Side) -> WeylElement {
        let mut w = w.clone();
        loop {
            let d = j.labels().into_iter().find(|&i| match side {
                Side::Left => self.is_left_descent(&w, i),
                Side::Right => self.is_right_descent(&w, i),
            });
            match d {
                Some(i) => {
                    w = match side {
                        Side::Left => self.mul_simple_left(i, &w),
                        Side::Right => self.mul_simple_right(&w, i),
                    }
                }
                None => return w,
            }
        }
    }

    /// Longest element of the parabolic subgroup `W_J`.
    pub fn longest(&self, j: FiniteSubset) -> WeylElement {
        let mut w = self.identity();
        loop {
            match j.labels().into_iter().find(|&i| !self.is_right_descent(&w, i)) {
                Some(i) => w = self.mul_simple_right(&w, i),
                None => return w,
            }
        }
    }

    pub fn longest_element(&self) -> WeylElement {
        self.longest(FiniteSubset::full(self.rank()))
    }

    /// `w(lambda)` for `lambda` in `X`.
    pub fn act_coweight(&self, w: &WeylElement, lam: &Coweight) -> Coweight {
        let q = self.simple_pairings(lam);
        let winv = self.inverse(w);
        let mut diff = vec![0i64; self.rank()];
        for j in 0..self.rank() {
            let img = winv.apply(self.simple_root_index(j + 1));
            let p: i64 = q.iter().zip(&self.roots[img].coords).map(|(a, b)| a * b).sum();
            diff[j] = q[j] - p;
        }
        let num = intmat::vec_mat(&diff, &self.cartan_adj);
        let c: Vec<i64> = num
            .iter()
            .map(|x| {
                debug_assert_eq!(x % self.cartan_det, 0);
                x / self.cartan_det
            })
            .collect();
        lam.sub(&self.coroot_to_coweight(&CorootVec(c)))
    }

    /// `w` applied to a combination of simple coroots.
    pub fn act_coroot(&self, w: &WeylElement, c: &CorootVec) -> CorootVec {
        let mut out = vec![0i64; self.rank()];
        for (i, &ci) in c.0.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            let img = w.apply(self.simple_root_index(i + 1));
            for (o, x) in out.iter_mut().zip(&self.coroots[img]) {
                *o += ci * x;
            }
        }
        CorootVec(out)
    }

    /// Enumerated group table, built on first use.
    pub fn weyl_table(&self) -> Result<&WeylTable> {
        self.table
            .get_or_init(|| self.build_table())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn build_table(&self) -> std::result::Result<WeylTable, Error> {
        let r = self.rank();
        let gens: Vec<WeylElement> = (1..=r).map(|i| self.simple_reflection(i)).collect();
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut queue = VecDeque::new();
        let e = self.identity();
        seen.insert(e.clone());
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let n = self.compose(&w, g);
                if seen.insert(n.clone()) {
                    if seen.len() > ENUMERATION_LIMIT {
                        return Err(Error::TooLarge(ENUMERATION_LIMIT as u64));
                    }
                    queue.push_back(n);
                }
            }
        }
        let items: Vec<(usize, Vec<usize>, WeylElement)> =
            seen.into_iter().map(|w| (self.length(&w), self.word(&w), w)).collect();
        Ok(self.table_from_items(items))
    }

    fn table_from_items(&self, mut items: Vec<(usize, Vec<usize>, WeylElement)>) -> WeylTable {
        let gens: Vec<WeylElement> = (1..=self.rank()).map(|i| self.simple_reflection(i)).collect();
        items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let elements: Vec<WeylElement> = items.iter().map(|t| t.2.clone()).collect();
        let ids: HashMap<WeylElement, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let lengths = items.iter().map(|t| t.0 as u32).collect();
        let words = items.iter().map(|t| t.1.iter().map(|&i| i as u8).collect()).collect();
        let left = gens
            .iter()
            .map(|g| elements.iter().map(|w| ids[&self.compose(g, w)]).collect())
            .collect();
        let right = gens
            .iter()
            .map(|g| elements.iter().map(|w| ids[&self.compose(w, g)]).collect())
            .collect();
        let inverse = elements.iter().map(|w| ids[&self.inverse(w)]).collect();
        WeylTable {
            elements,
            ids,
            lengths,
            words,
            left,
            right,
            inverse,
            bruhat: OnceLock::new(),
        }
    }

    /// Installs a group table from canonical words and lengths, e.g. read
    /// from a cache. Every entry is re-derived and the set is checked to be
    /// closed under the simple reflections. Returns `false` when a table was
    /// already present.
    pub fn seed_weyl_table(&self, words: &[Vec<usize>], lengths: &[usize]) -> Result<bool> {
        if self.table.get().is_some() {
            return Ok(false);
        }
        if words.len() != lengths.len() || words.len() > ENUMERATION_LIMIT {
            return Err(Error::CertificateFailed("malformed element list".into()));
        }
        let mut items = Vec::with_capacity(words.len());
        let mut seen: HashSet<WeylElement> = HashSet::new();
        for (word, &len) in words.iter().zip(lengths) {
            if word.iter().any(|&i| i == 0 || i > self.rank()) {
                return Err(Error::CertificateFailed(format!("bad letter in {word:?}")));
            }
            let w = self.from_word(word);
            if self.length(&w) != len || self.word(&w) != *word {
                return Err(Error::CertificateFailed(format!("{word:?} is not canonical")));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::CertificateFailed(format!("{word:?} repeated")));
            }
            items.push((len, word.clone(), w));
        }
        let closed = items
            .iter()
            .all(|(_, _, w)| (1..=self.rank()).all(|i| seen.contains(&self.mul_simple_right(w, i))));
        if !closed || !seen.contains(&self.identity()) {
            return Err(Error::CertificateFailed("element list is not the whole group".into()));
        }
        let table = self.table_from_items(items);
        Ok(self.table.set(Ok(table)).is_ok())
    }

    /// All elements, ordered by length and then canonical word.
    pub fn enumerate(&self) -> Result<Vec<WeylElement>> {
        Ok(self.weyl_table()?.elements.clone())
    }

    pub fn weyl_order(&self) -> Result<usize> {
        Ok(self.weyl_table()?.len())
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[WeylElement]) -> Vec<WeylElement> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for g in gens {
                let n = self.compose(&w, g);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        let mut v: Vec<WeylElement> = seen.into_iter().collect();
        self.sort_elements(&mut v);
        v
    }

    pub fn parabolic_subgroup(&self, j: FiniteSubset) -> Vec<WeylElement> {
        let gens: Vec<WeylElement> = j.labels().iter().map(|&i| self.simple_reflection(i)).collect();
        self.subgroup(&gens)
    }

    /// Sorts by length and then canonical word.
    pub fn sort_elements(&self, v: &mut [WeylElement]) {
        v.sort_by_cached_key(|w| (self.length(w), self.word(w)));
    }

    /// One minimal representative per double coset `<left_gens> \ W_0 / W_J`,
    /// in length-then-word order.
    pub fn double_coset_reps(&self, left_gens: &[WeylElement], j: FiniteSubset) -> Result<Vec<WeylElement>> {
        let t = self.weyl_table()?;
        let right: Vec<WeylElement> = j.labels().iter().map(|&i| self.simple_reflection(i)).collect();
        let mut seen = vec![false; t.len()];
        let mut reps = Vec::new();
        for start in 0..t.len() {
            if seen[start] {
                continue;
            }
            reps.push(t.elements[start].clone());
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let w = &t.elements[x];
                let nbrs = left_gens
                    .iter()
                    .map(|g| self.compose(g, w))
                    .chain(right.iter().map(|g| self.compose(w, g)));
                for n in nbrs {
                    let id = t.id(&n);
                    if !seen[id] {
                        seen[id] = true;
                        stack.push(id);
                    }
                }
            }
        }
        Ok(reps)
    }
}

pub fn word_to_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| i.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{CartanSpec, Family};

    fn rd(f: Family, n: usize) -> RootDatum {
        RootDatum::new(CartanSpec::adjoint(f, n)).unwrap()
    }

    #[test]
    fn seeded_table_matches_enumeration() {
        let a = rd(Family::B, 2);
        let t = a.weyl_table().unwrap();
        let words: Vec<Vec<usize>> = t
            .words
            .iter()
            .map(|w| w.iter().map(|&i| i as usize).collect())
            .collect();
        let lengths: Vec<usize> = t.lengths.iter().map(|&l| l as usize).collect();

        let b = rd(Family::B, 2);
        assert!(b.seed_weyl_table(&words, &lengths).unwrap());
        assert!(!b.seed_weyl_table(&words, &lengths).unwrap());
        assert_eq!(b.enumerate().unwrap(), a.enumerate().unwrap());

        let c = rd(Family::B, 2);
        assert!(c.seed_weyl_table(&words[..7], &lengths[..7]).is_err());
        let mut bad = words.clone();
        bad[1] = vec![2, 2];
        assert!(c.seed_weyl_table(&bad, &lengths).is_err());
        let mut bad = lengths.clone();
        bad[2] += 1;
        assert!(c.seed_weyl_table(&words, &bad).is_err());
        assert_eq!(c.weyl_order().unwrap(), 8);
    }

    #[test]
    fn basic_operations_a2() {
        let a2 = rd(Family::A, 2);
        let s1 = a2.simple_reflection(1);
        assert!(a2.is_identity(&a2.compose(&s1, &s1)));
        let w = a2.from_word(&[1, 2, 1]);
        assert_eq!(a2.length(&w), 3);
        assert_eq!(a2.word(&w), vec![1, 2, 1]);
        assert_eq!(a2.from_word(&[2, 1, 2]), w);
        let s12 = a2.from_word(&[1, 2]);
        assert_eq!(a2.descents(&s12, Side::Right), vec![2]);
        assert_eq!(a2.descents(&s12, Side::Left), vec![1]);
        assert_eq!(a2.word_string(&a2.identity()), "e");
    }

    #[test]
    fn bruhat_examples() {
        let a2 = rd(Family::A, 2);
        let e = a2.identity();
        let s1 = a2.from_word(&[1]);
        let s21 = a2.from_word(&[2, 1]);
        let s12 = a2.from_word(&[1, 2]);
        assert!(a2.bruhat_leq(&e, &s21));
        assert!(a2.bruhat_leq(&s1, &s21));
        assert!(!a2.bruhat_leq(&s12, &s21));
        a2.weyl_table().unwrap();
        assert!(a2.bruhat_leq(&s1, &s21));
        assert!(!a2.bruhat_leq(&s12, &s21));
    }

    #[test]
    fn cosets_and_longest() {
        let a2 = rd(Family::A, 2);
        let j = FiniteSubset::from_labels(&[1]);
        assert!(a2.is_identity(&a2.coset_min(&a2.simple_reflection(1), j, Side::Left)));
        assert_eq!(a2.coset_min(&a2.from_word(&[1, 2]), j, Side::Left), a2.from_word(&[2]));
        let w0 = a2.longest_element();
        assert_eq!(a2.coset_min(&w0, j, Side::Right), a2.from_word(&[1, 2]));
        assert_eq!(a2.length(&w0), 3);
        assert_eq!(a2.support(&w0).labels(), vec![1, 2]);
        assert!(a2.support(&a2.identity()).is_empty());
    }

    #[test]
    fn group_orders() {
        for (f, n, o) in [
            (Family::A, 1, 2),
            (Family::A, 3, 24),
            (Family::B, 3, 48),
            (Family::C, 2, 8),
            (Family::D, 4, 192),
            (Family::G, 2, 12),
            (Family::F, 4, 1152),
        ] {
            assert_eq!(rd(f, n).weyl_order().unwrap(), o);
        }
        assert!(matches!(rd(Family::E, 8).weyl_order(), Err(Error::TooLarge(_))));
    }

    #[test]
    fn double_cosets_c2() {
        let c2 = rd(Family::C, 2);
        let a1 = rd(Family::A, 1);
        assert_eq!(a1.double_coset_reps(&[], FiniteSubset::empty()).unwrap().len(), 2);
        let gens = vec![c2.from_word(&[1, 2, 1]), c2.simple_reflection(2)];
        assert_eq!(c2.subgroup(&gens).len(), 4);
        assert_eq!(
            c2.double_coset_reps(&gens, FiniteSubset::from_labels(&[1]))
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            c2.double_coset_reps(&gens, FiniteSubset::from_labels(&[2]))
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn coweight_action() {
        let gl = RootDatum::new(CartanSpec::new(Family::A, 2, crate::root_datum::LatticeKind::Gl)).unwrap();
        let s1 = gl.simple_reflection(1);
        assert_eq!(gl.act_coweight(&s1, &Coweight(vec![3, 1, 0])), Coweight(vec![1, 3, 0]));
        let w0 = gl.longest_element();
        assert_eq!(gl.act_coweight(&w0, &Coweight(vec![2, 1, 0])), Coweight(vec![0, 1, 2]));
        let c2 = rd(Family::C, 2);
        for w in c2.enumerate().unwrap() {
            let lam = Coweight(vec![1, 2]);
            let c = c2.coweight_to_coroot(&lam).unwrap();
            assert_eq!(c2.coroot_to_coweight(&c2.act_coroot(&w, &c)), c2.act_coweight(&w, &lam));
        }
    }
}
