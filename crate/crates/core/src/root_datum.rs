//! Root systems of types A-G with a choice of coweight lattice.
//!
//! Roots are stored in simple-root coordinates. The lattice `X` is `Z^d` with
//! a pairing matrix `P` (`P[k][j] = <b_k, alpha_j>`) and the simple coroots
//! written in the basis of `X` (`C`, one row per coroot). `C * P` is the
//! Cartan matrix `A[i][j] = <alpha_i^vee, alpha_j>`.
//!
//! Simple reflections are labelled `1..=rank` (Bourbaki numbering); label `0`
//! is reserved for the affine node.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::admissible::AdmissibleSet;
use crate::error::{Error, Result};
use crate::finite_weyl::WeylTable;
use crate::intmat;
use crate::qbg::QuantumBruhatGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// `X = Q^vee`, coordinates in the simple coroots.
    Adjoint,
    /// `X = P^vee`, coordinates in the fundamental coweights.
    Coweight,
    /// `X = Z^n` for type `A_{n-1}`.
    Gl,
    /// Basis vectors given in simple-coroot coordinates, each divided by
    /// `denominator`.
    Custom { basis: Vec<Vec<i64>>, denominator: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanSpec {
    pub family: Family,
    pub rank: usize,
    pub lattice: LatticeKind,
}

impl CartanSpec {
    pub fn new(family: Family, rank: usize, lattice: LatticeKind) -> Self {
        CartanSpec { family, rank, lattice }
    }

    pub fn adjoint(family: Family, rank: usize) -> Self {
        Self::new(family, rank, LatticeKind::Adjoint)
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.rank;
        let ok = match self.family {
            Family::A => r >= 1,
            Family::B | Family::C => r >= 2,
            Family::D => r >= 4,
            Family::E => (6..=8).contains(&r),
            Family::F => r == 4,
            Family::G => r == 2,
        };
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "rank {} is not valid for family {}",
                r,
                self.family.letter()
            )));
        }
        match &self.lattice {
            LatticeKind::Gl if self.family != Family::A => {
                Err(Error::InvalidSpec("the gl lattice is only available for type A".into()))
            }
            LatticeKind::Custom { basis, denominator } => {
                if *denominator <= 0 {
                    return Err(Error::InvalidSpec("denominator must be positive".into()));
                }
                if basis.len() != r || basis.iter().any(|b| b.len() != r) {
                    return Err(Error::InvalidSpec(format!(
                        "custom basis must consist of {r} vectors of length {r}"
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
    pub positive: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// An element of the lattice `X`, in the coordinates of its chosen basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(dim: usize) -> Self {
        Coweight(vec![0; dim])
    }

    pub fn add(&self, o: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// A combination of simple coroots, in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorootVec(pub Vec<i64>);

impl CorootVec {
    pub fn zero(rank: usize) -> Self {
        CorootVec(vec![0; rank])
    }

    pub fn add(&self, o: &CorootVec) -> CorootVec {
        CorootVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &CorootVec) -> CorootVec {
        CorootVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Dominance order: `o - self` is a nonnegative sum of simple coroots.
    pub fn leq(&self, o: &CorootVec) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for CorootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

pub(crate) fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Dynkin edges (0-based) and root-length symmetrizer for a family.
fn dynkin(family: Family, n: usize) -> (Vec<(usize, usize)>, Vec<i64>) {
    let path = |m: usize| (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match family {
        Family::A => (path(n), vec![1; n]),
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (path(n), d)
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (path(n), d)
        }
        Family::D => {
            let mut e = path(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![1; n])
        }
        Family::E => {
            let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            let e = all.iter().copied().filter(|&(a, b)| a < n && b < n).collect();
            (e, vec![1; n])
        }
        Family::F => (path(4), vec![2, 2, 1, 1]),
        Family::G => (path(2), vec![1, 3]),
    }
}

/// Cartan matrix `A[i][j] = <alpha_i^vee, alpha_j>` and symmetrizer.
pub fn cartan_matrix(family: Family, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let (edges, d) = dynkin(family, n);
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        let m = d[i].max(d[j]);
        a[i][j] = -m / d[i];
        a[j][i] = -m / d[j];
    }
    (a, d)
}

/// A reduced irreducible root system together with a coweight lattice.
pub struct RootDatum {
    pub(crate) spec: CartanSpec,
    pub(crate) cartan: Vec<Vec<i64>>,
    pub(crate) cartan_det: i64,
    pub(crate) cartan_adj: Vec<Vec<i64>>,
    pub(crate) sym: Vec<i64>,
    pub(crate) pairing: Vec<Vec<i64>>,
    pub(crate) coroot_basis: Vec<Vec<i64>>,
    pub(crate) omega_hnf: Vec<Vec<i64>>,
    pub(crate) roots: Vec<Root>,
    pub(crate) index: HashMap<Vec<i64>, usize>,
    pub(crate) coroots: Vec<Vec<i64>>,
    pub(crate) n_pos: usize,
    pub(crate) simple: Vec<usize>,
    pub(crate) highest: usize,
    pub(crate) reflections: Vec<Box<[u16]>>,
    pub(crate) table: OnceLock<std::result::Result<WeylTable, Error>>,
    pub(crate) qbg: OnceLock<std::result::Result<QuantumBruhatGraph, Error>>,
    pub(crate) adm_cache: Mutex<HashMap<Coweight, Arc<AdmissibleSet>>>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("spec", &self.spec)
            .field("positive_roots", &self.n_pos)
            .finish()
    }
}

/// Builds the root datum for a Cartan spec.
pub fn build_root_datum(spec: CartanSpec) -> Result<RootDatum> {
    RootDatum::new(spec)
}

impl RootDatum {
    pub fn new(spec: CartanSpec) -> Result<Self> {
        spec.validate()?;
        let r = spec.rank;
        let (cartan, sym) = cartan_matrix(spec.family, r);
        let cartan_det = intmat::det(&cartan);
        let cartan_adj = intmat::adjugate(&cartan);

        let (pairing, coroot_basis) = match &spec.lattice {
            LatticeKind::Adjoint => {
                let id: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
                (cartan.clone(), id)
            }
            LatticeKind::Coweight => {
                let id: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
                (id, cartan.clone())
            }
            LatticeKind::Gl => {
                let n = r + 1;
                let p: Vec<Vec<i64>> = (0..n)
                    .map(|k| (0..r).map(|j| i64::from(k == j) - i64::from(k == j + 1)).collect())
                    .collect();
                let c: Vec<Vec<i64>> = (0..r)
                    .map(|i| (0..n).map(|k| i64::from(k == i) - i64::from(k == i + 1)).collect())
                    .collect();
                (p, c)
            }
            LatticeKind::Custom { basis, denominator } => {
                let den = *denominator;
                let bd = intmat::det(basis);
                if bd == 0 {
                    return Err(Error::InvalidSpec("custom basis is degenerate".into()));
                }
                let raw = intmat::mat_mul(basis, &cartan);
                if raw.iter().flatten().any(|x| x % den != 0) {
                    return Err(Error::NonIntegralLattice(
                        "a basis vector pairs non-integrally with a simple root".into(),
                    ));
                }
                let p: Vec<Vec<i64>> = raw.iter().map(|row| row.iter().map(|x| x / den).collect()).collect();
                let adj = intmat::adjugate(basis);
                if adj.iter().flatten().any(|x| (x * den) % bd != 0) {
                    return Err(Error::NonIntegralLattice(
                        "the lattice does not contain every simple coroot".into(),
                    ));
                }
                let c: Vec<Vec<i64>> = adj
                    .iter()
                    .map(|row| row.iter().map(|x| x * den / bd).collect())
                    .collect();
                (p, c)
            }
        };
        debug_assert_eq!(intmat::mat_mul(&coroot_basis, &pairing), cartan);

        // Close the simple roots under the simple reflections.
        let unit = |i: usize| (0..r).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let u = unit(i);
            seen.insert(u.clone(), ());
            queue.push_back(u);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..r {
                let c: i64 = (0..r).map(|j| cartan[i][j] * b[j]).sum();
                let mut nb = b.clone();
                nb[i] -= c;
                if !seen.contains_key(&nb) {
                    seen.insert(nb.clone(), ());
                    queue.push_back(nb);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_keys().filter(|b| b.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = pos.len();
        let mut roots: Vec<Root> = pos
            .iter()
            .map(|c| Root {
                coords: c.clone(),
                positive: true,
            })
            .collect();
        roots.extend(pos.iter().map(|c| Root {
            coords: c.iter().map(|x| -x).collect(),
            positive: false,
        }));
        let index: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(i, rt)| (rt.coords.clone(), i)).collect();
        let simple: Vec<usize> = (0..r).map(|i| index[&unit(i)]).collect();

        let norm = |b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..r {
                for j in 0..r {
                    s += b[i] * b[j] * sym[i] * cartan[i][j];
                }
            }
            s / 2
        };
        let coroots: Vec<Vec<i64>> = roots
            .iter()
            .map(|rt| {
                let db = norm(&rt.coords);
                rt.coords
                    .iter()
                    .zip(&sym)
                    .map(|(b, d)| {
                        debug_assert_eq!((b * d) % db, 0);
                        b * d / db
                    })
                    .collect()
            })
            .collect();

        let highest = n_pos - 1;
        for p in 0..n_pos {
            let diff: Vec<i64> = roots[highest]
                .coords
                .iter()
                .zip(&roots[p].coords)
                .map(|(a, b)| a - b)
                .collect();
            if diff.iter().any(|&x| x < 0) {
                return Err(Error::InvalidSpec("root system has no unique highest root".into()));
            }
        }

        let nroots = roots.len();
        let mut reflections = Vec::with_capacity(n_pos);
        for b in 0..n_pos {
            let cv = &coroots[b];
            let perm: Box<[u16]> = (0..nroots)
                .map(|g| {
                    let gc = &roots[g].coords;
                    let mut pairing_val = 0;
                    for i in 0..r {
                        if cv[i] != 0 {
                            pairing_val += cv[i] * (0..r).map(|j| cartan[i][j] * gc[j]).sum::<i64>();
                        }
                    }
                    let img: Vec<i64> = gc
                        .iter()
                        .zip(&roots[b].coords)
                        .map(|(x, y)| x - pairing_val * y)
                        .collect();
                    index[&img] as u16
                })
                .collect();
            reflections.push(perm);
        }

        let omega_hnf = intmat::hermite_rows(&coroot_basis);

        Ok(RootDatum {
            spec,
            cartan,
            cartan_det,
            cartan_adj,
            sym,
            pairing,
            coroot_basis,
            omega_hnf,
            roots,
            index,
            coroots,
            n_pos,
            simple,
            highest,
            reflections,
            table: OnceLock::new(),
            qbg: OnceLock::new(),
            adm_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    /// Dimension of the ambient lattice `X`.
    pub fn dim(&self) -> usize {
        self.pairing.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// All roots: positive ones first (by height), then their negatives in
    /// the same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the negated root.
    pub fn neg_index(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    /// Root index of the simple root `alpha_i`, `i` in `1..=rank`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple[i - 1]
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    /// Root index of the highest root.
    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn coxeter_number(&self) -> i64 {
        self.roots[self.highest].height() + 1
    }

    /// `2 rho` in simple-root coordinates.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        for rt in self.positive_roots() {
            for (a, b) in v.iter_mut().zip(&rt.coords) {
                *a += b;
            }
        }
        v
    }

    /// Simple-coroot coordinates of the coroot of a root.
    pub fn coroot_coords(&self, idx: usize) -> CorootVec {
        CorootVec(self.coroots[idx].clone())
    }

    /// Height of the coroot `beta^vee`, which is half of `<beta^vee, 2 rho>`.
    pub fn coroot_height(&self, idx: usize) -> i64 {
        self.coroots[idx].iter().sum()
    }

    /// The coroot of a root as an element of `X`.
    pub fn coroot(&self, idx: usize) -> Coweight {
        self.coroot_to_coweight(&CorootVec(self.coroots[idx].clone()))
    }

    pub fn simple_coroots(&self) -> Vec<Coweight> {
        self.coroot_basis.iter().map(|c| Coweight(c.clone())).collect()
    }

    /// Labels `i` (1-based) of the short simple roots; empty when simply laced.
    pub fn short_simple_set(&self) -> Vec<usize> {
        let lo = *self.sym.iter().min().unwrap();
        let hi = *self.sym.iter().max().unwrap();
        if lo == hi {
            return Vec::new();
        }
        (0..self.rank()).filter(|&i| self.sym[i] == lo).map(|i| i + 1).collect()
    }

    /// Squared-length class of each simple root (short roots have 1).
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn root_height(&self, idx: usize) -> i64 {
        self.roots[idx].height()
    }

    /// `<lambda, alpha_j>` for every simple root.
    pub fn simple_pairings(&self, lam: &Coweight) -> Vec<i64> {
        intmat::vec_mat(&lam.0, &self.pairing)
    }

    /// `<lambda, beta>` for a root given by index.
    pub fn pair_index(&self, lam: &Coweight, idx: usize) -> i64 {
        let q = self.simple_pairings(lam);
        dot(&q, &self.roots[idx].coords)
    }

    pub(crate) fn check_coweight(&self, lam: &Coweight) -> Result<()> {
        if lam.0.len() != self.dim() {
            return Err(Error::DatumMismatch(format!(
                "coweight {} has dimension {}, lattice has dimension {}",
                lam,
                lam.0.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// The natural pairing `<cw, r>`.
    pub fn pair(&self, cw: &Coweight, r: &Root) -> Result<i64> {
        self.check_coweight(cw)?;
        if r.coords.len() != self.rank() {
            return Err(Error::DatumMismatch("root has the wrong rank".into()));
        }
        Ok(dot(&self.simple_pairings(cw), &r.coords))
    }

    pub fn coroot_to_coweight(&self, c: &CorootVec) -> Coweight {
        Coweight(intmat::vec_mat(&c.0, &self.coroot_basis))
    }

    /// Simple-coroot coordinates of `lam`, if it lies in the coroot lattice.
    pub fn coweight_to_coroot(&self, lam: &Coweight) -> Option<CorootVec> {
        let q = self.simple_pairings(lam);
        let num = intmat::vec_mat(&q, &self.cartan_adj);
        if num.iter().any(|x| x % self.cartan_det != 0) {
            return None;
        }
        let c = CorootVec(num.iter().map(|x| x / self.cartan_det).collect());
        if self.coroot_to_coweight(&c) == *lam {
            Some(c)
        } else {
            None
        }
    }

    /// `g1 <= g2` in dominance order.
    pub fn dominance_leq(&self, g1: &Coweight, g2: &Coweight) -> Result<bool> {
        self.check_coweight(g1)?;
        self.check_coweight(g2)?;
        Ok(self.coweight_to_coroot(&g2.sub(g1)).is_some_and(|c| c.is_nonnegative()))
    }

    pub fn is_dominant(&self, lam: &Coweight) -> bool {
        self.simple_pairings(lam).iter().all(|&x| x >= 0)
    }

    pub fn is_central(&self, lam: &Coweight) -> bool {
        self.simple_pairings(lam).iter().all(|&x| x == 0)
    }

    /// `I(lambda)`: labels of simple roots orthogonal to `lambda`.
    pub fn stabilizer_labels(&self, lam: &Coweight) -> Vec<usize> {
        self.simple_pairings(lam)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Canonical representative of `lambda` modulo the coroot lattice.
    pub fn omega_class(&self, lam: &Coweight) -> Vec<i64> {
        intmat::reduce_mod(&lam.0, &self.omega_hnf)
    }

    /// Root-poset order on roots given by index.
    pub fn root_leq(&self, a: usize, b: usize) -> bool {
        self.roots[a]
            .coords
            .iter()
            .zip(&self.roots[b].coords)
            .all(|(x, y)| x <= y)
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
