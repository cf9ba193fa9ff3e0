//! The quantum Bruhat graph of `W_0`, its path weights, the Demazure
//! product, greedy decompositions and the elements `z_gamma`.
//!
//! Weights and the bound `gamma` are combinations of simple coroots, given in
//! simple-coroot coordinates.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::finite_weyl::WeylElement;
use crate::root_datum::{CorootVec, RootDatum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QBGEdge {
    pub source: WeylElement,
    pub target: WeylElement,
    pub kind: EdgeKind,
    /// Index of the positive root `beta` with `target = source * s_beta`.
    pub root: usize,
    pub weight: CorootVec,
}

/// Shortest-path data from one source vertex.
#[derive(Debug)]
pub struct WtRow {
    pub dist: Vec<u32>,
    pub weight: Vec<CorootVec>,
}

/// Adjacency of the graph over element ids of the `W_0` table.
pub struct QuantumBruhatGraph {
    adj: Vec<Vec<(u32, u16, EdgeKind)>>,
    rows: Mutex<HashMap<u32, Arc<WtRow>>>,
}

impl QuantumBruhatGraph {
    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    /// Outgoing edges of a vertex id as `(target id, root index, kind)`.
    pub fn out_edges(&self, v: usize) -> &[(u32, u16, EdgeKind)] {
        &self.adj[v]
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.adj.iter().flatten().filter(|e| e.2 == kind).count()
    }
}

/// Tie-break among incomparable maximal roots in a greedy step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest simple-root coordinate vector first.
    LexMin,
    LexMax,
}

impl RootDatum {
    pub fn qbg(&self) -> Result<&QuantumBruhatGraph> {
        self.qbg.get_or_init(|| self.build_qbg()).as_ref().map_err(Clone::clone)
    }

    fn build_qbg(&self) -> std::result::Result<QuantumBruhatGraph, Error> {
        let t = self.weyl_table()?;
        let mut adj = Vec::with_capacity(t.len());
        for (xi, x) in t.elements.iter().enumerate() {
            let lx = t.lengths[xi] as i64;
            let mut out = Vec::new();
            for b in 0..self.num_positive_roots() {
                let y = self.compose(x, &self.reflection(b));
                let yi = t.id(&y);
                let ly = t.lengths[yi] as i64;
                if ly == lx + 1 {
                    out.push((yi as u32, b as u16, EdgeKind::Bruhat));
                } else if ly == lx + 1 - 2 * self.coroot_height(b) {
                    out.push((yi as u32, b as u16, EdgeKind::Quantum));
                }
            }
            adj.push(out);
        }
        Ok(QuantumBruhatGraph {
            adj,
            rows: Mutex::new(HashMap::new()),
        })
    }

    /// All edges of the graph, grouped by source in table order.
    pub fn qbg_edges(&self) -> Result<Vec<QBGEdge>> {
        let t = self.weyl_table()?;
        let g = self.qbg()?;
        let mut out = Vec::new();
        for (s, edges) in g.adj.iter().enumerate() {
            for &(d, b, kind) in edges {
                out.push(QBGEdge {
                    source: t.elements[s].clone(),
                    target: t.elements[d as usize].clone(),
                    kind,
                    root: b as usize,
                    weight: self.edge_weight(b as usize, kind),
                });
            }
        }
        Ok(out)
    }

    pub(crate) fn edge_weight(&self, root: usize, kind: EdgeKind) -> CorootVec {
        match kind {
            EdgeKind::Bruhat => CorootVec::zero(self.rank()),
            EdgeKind::Quantum => self.coroot_coords(root),
        }
    }

    /// Breadth-first distances and path weights from vertex id `src`.
    pub fn wt_row(&self, src: usize) -> Result<Arc<WtRow>> {
        let g = self.qbg()?;
        if let Some(r) = g.rows.lock().unwrap().get(&(src as u32)) {
            return Ok(r.clone());
        }
        let n = g.num_vertices();
        let mut dist = vec![u32::MAX; n];
        let mut weight = vec![CorootVec::zero(self.rank()); n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &(v, b, kind) in &g.adj[u] {
                let v = v as usize;
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    weight[v] = weight[u].add(&self.edge_weight(b as usize, kind));
                    queue.push_back(v);
                }
            }
        }
        let row = Arc::new(WtRow { dist, weight });
        g.rows.lock().unwrap().insert(src as u32, row.clone());
        Ok(row)
    }

    /// Weight of any shortest path from `x` to `y`.
    pub fn wt(&self, x: &WeylElement, y: &WeylElement) -> Result<CorootVec> {
        let t = self.weyl_table()?;
        let row = self.wt_row(t.id(x))?;
        Ok(row.weight[t.id(y)].clone())
    }

    pub fn qbg_distance(&self, x: &WeylElement, y: &WeylElement) -> Result<usize> {
        let t = self.weyl_table()?;
        let row = self.wt_row(t.id(x))?;
        Ok(row.dist[t.id(y)] as usize)
    }

    /// `wt(x, v)` by peeling left descents off `v` down to `v = e`.
    pub fn wt_by_recursion(&self, x: &WeylElement, v: &WeylElement) -> Result<CorootVec> {
        let mut x = x.clone();
        let mut v = v.clone();
        while let Some(i) = (1..=self.rank()).find(|&i| self.is_left_descent(&v, i)) {
            let sx = self.mul_simple_left(i, &x);
            if self.length(&sx) < self.length(&x) {
                x = sx;
            }
            v = self.mul_simple_left(i, &v);
        }
        self.wt(&x, &self.identity())
    }

    /// The Demazure product `u * v`.
    pub fn demazure(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        self.word(v).into_iter().fold(u.clone(), |w, i| {
            if self.is_right_descent(&w, i) {
                w
            } else {
                self.mul_simple_right(&w, i)
            }
        })
    }

    pub fn greedy_decomposition(&self, gamma: &CorootVec) -> Result<Vec<usize>> {
        self.greedy_decomposition_with(gamma, TieBreak::LexMin)
    }

    /// Repeatedly removes the coroot of a maximal positive root lying below
    /// the remainder. Returns root indices in the order they are removed.
    pub fn greedy_decomposition_with(&self, gamma: &CorootVec, tie: TieBreak) -> Result<Vec<usize>> {
        if gamma.0.len() != self.rank() {
            return Err(Error::DatumMismatch("gamma has the wrong rank".into()));
        }
        if !gamma.is_nonnegative() {
            return Err(Error::NotNonnegative(gamma.0.clone()));
        }
        let mut rest = gamma.clone();
        let mut out = Vec::new();
        while rest.0.iter().any(|&c| c != 0) {
            let cands: Vec<usize> = (0..self.num_positive_roots())
                .filter(|&b| self.coroot_coords(b).leq(&rest))
                .collect();
            let maximal = cands
                .iter()
                .copied()
                .filter(|&b| !cands.iter().any(|&c| c != b && self.root_leq(b, c)));
            let pick = match tie {
                TieBreak::LexMin => maximal.min_by(|&a, &b| self.root(a).coords.cmp(&self.root(b).coords)),
                TieBreak::LexMax => maximal.max_by(|&a, &b| self.root(a).coords.cmp(&self.root(b).coords)),
            }
            .expect("a simple coroot always fits");
            rest = rest.sub(&self.coroot_coords(pick));
            out.push(pick);
        }
        Ok(out)
    }

    /// `z_gamma`, folding Demazure products over the greedy decomposition.
    pub fn z_gamma(&self, gamma: &CorootVec) -> Result<WeylElement> {
        self.z_gamma_with(gamma, TieBreak::LexMin)
    }

    pub fn z_gamma_with(&self, gamma: &CorootVec, tie: TieBreak) -> Result<WeylElement> {
        let seq = self.greedy_decomposition_with(gamma, tie)?;
        Ok(seq
            .iter()
            .rev()
            .fold(self.identity(), |z, &b| self.demazure(&z, &self.reflection(b))))
    }

    /// `max {x : wt(x, v) <= gamma}` by scanning `W_0`, with a check that the
    /// maximum dominates every member.
    pub fn max_wt_leq_oracle(&self, gamma: &CorootVec, v: &WeylElement) -> Result<WeylElement> {
        if !gamma.is_nonnegative() {
            return Err(Error::NotNonnegative(gamma.0.clone()));
        }
        let t = self.weyl_table()?;
        let members: Vec<&WeylElement> = t
            .elements
            .iter()
            .map(|x| Ok((x, self.wt(x, v)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, w)| w.leq(gamma))
            .map(|(x, _)| x)
            .collect();
        unique_max(&members, |a, b| self.bruhat_leq(a, b))
            .ok_or_else(|| Error::NotUnique(format!("{{x : wt(x, {}) <= {}}}", self.word_string(v), gamma)))
    }
}

/// The element dominating all others, if there is one.
pub(crate) fn unique_max<T: Clone>(items: &[&T], leq: impl Fn(&T, &T) -> bool) -> Option<T> {
    let mut best: Option<&T> = None;
    for &x in items {
        best = match best {
            None => Some(x),
            Some(b) if leq(b, x) => Some(x),
            Some(b) => Some(b),
        };
    }
    let b = best?;
    items.iter().all(|&x| leq(x, b)).then(|| b.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{CartanSpec, Family};

    fn rd(f: Family, n: usize) -> RootDatum {
        RootDatum::new(CartanSpec::adjoint(f, n)).unwrap()
    }

    #[test]
    fn edge_counts() {
        let a2 = rd(Family::A, 2);
        let g = a2.qbg().unwrap();
        assert_eq!(g.count(EdgeKind::Bruhat), 8);
        assert_eq!(g.count(EdgeKind::Quantum), 7);
        let a1 = rd(Family::A, 1);
        let edges = a1.qbg_edges().unwrap();
        assert_eq!(edges.len(), 2);
        let q: Vec<&QBGEdge> = edges.iter().filter(|e| e.kind == EdgeKind::Quantum).collect();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].source, a1.simple_reflection(1));
        assert_eq!(q[0].weight, CorootVec(vec![1]));
    }

    #[test]
    fn weights() {
        let a2 = rd(Family::A, 2);
        let e = a2.identity();
        let w0 = a2.longest_element();
        assert_eq!(a2.wt(&w0, &e).unwrap(), CorootVec(vec![1, 1]));
        assert_eq!(a2.wt(&e, &a2.simple_reflection(1)).unwrap(), CorootVec(vec![0, 0]));
        assert_eq!(a2.wt(&w0, &w0).unwrap(), CorootVec(vec![0, 0]));
    }

    #[test]
    fn demazure_examples() {
        let a2 = rd(Family::A, 2);
        let s1 = a2.simple_reflection(1);
        let s2 = a2.simple_reflection(2);
        let w = a2.from_word(&[1, 2, 1]);
        assert_eq!(a2.demazure(&a2.identity(), &w), w);
        assert_eq!(a2.demazure(&s1, &s1), s1);
        assert_eq!(a2.demazure(&s2, &w), w);
    }

    #[test]
    fn greedy_and_z_gamma() {
        let a2 = rd(Family::A, 2);
        let seq = a2.greedy_decomposition(&CorootVec(vec![1, 2])).unwrap();
        let roots: Vec<Vec<i64>> = seq.iter().map(|&b| a2.root(b).coords.clone()).collect();
        assert_eq!(roots, vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(a2.word_string(&a2.z_gamma(&CorootVec(vec![1, 2])).unwrap()), "121");
        let c2 = rd(Family::C, 2);
        let seq = c2.greedy_decomposition(&CorootVec(vec![1, 2])).unwrap();
        let roots: Vec<Vec<i64>> = seq.iter().map(|&b| c2.root(b).coords.clone()).collect();
        assert_eq!(roots, vec![vec![2, 1], vec![0, 1]]);
        assert_eq!(c2.word_string(&c2.z_gamma(&CorootVec(vec![1, 2])).unwrap()), "1212");
        assert_eq!(c2.z_gamma(&CorootVec(vec![1, 2])).unwrap(), c2.from_word(&[2, 1, 2, 1]));
        assert!(a2.is_identity(&a2.z_gamma(&CorootVec(vec![0, 0])).unwrap()));
        let one = a2.greedy_decomposition(&CorootVec(vec![1, 0])).unwrap();
        assert_eq!(one, vec![a2.simple_root_index(1)]);
        assert!(matches!(
            a2.z_gamma(&CorootVec(vec![-1, 0])),
            Err(Error::NotNonnegative(_))
        ));
    }

    #[test]
    fn oracle_examples() {
        let a2 = rd(Family::A, 2);
        let e = a2.identity();
        assert_eq!(a2.max_wt_leq_oracle(&CorootVec(vec![0, 0]), &e).unwrap(), e);
        assert_eq!(
            a2.max_wt_leq_oracle(&CorootVec(vec![1, 2]), &e).unwrap(),
            a2.from_word(&[1, 2, 1])
        );
        let a1 = rd(Family::A, 1);
        assert_eq!(
            a1.max_wt_leq_oracle(&CorootVec(vec![1]), &a1.identity()).unwrap(),
            a1.simple_reflection(1)
        );
    }

    #[test]
    fn recursion_matches_bfs_b3() {
        let b3 = rd(Family::B, 3);
        let els = b3.enumerate().unwrap();
        for x in &els {
            for v in els.iter().step_by(5) {
                assert_eq!(b3.wt_by_recursion(x, v).unwrap(), b3.wt(x, v).unwrap());
            }
        }
    }
}
