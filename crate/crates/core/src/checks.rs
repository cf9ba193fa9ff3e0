//! Property suites behind `verify`: the acceptance criteria and per-datum
//! invariants, each checked against brute-force oracles.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::finite_weyl::{FiniteSubset, Side, WeylElement};
use crate::iwahori_weyl::{AffineElement, AffineRoot, SphericalSubset};
use crate::qbg::EdgeKind;
use crate::root_datum::{CartanSpec, CorootVec, Coweight, Family, LatticeKind, RootDatum};

pub const SEED: u64 = 0x5eed_2024;
pub const RANK3_SAMPLES: usize = 500;
/// Affine elements up to this length are swept exhaustively at rank <= 2.
pub const AFFINE_BALL: usize = 8;
const PAIRWISE_LIMIT: usize = 1_200;
const SUBWORD_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

impl From<Error> for String {
    fn from(e: Error) -> String {
        e.to_string()
    }
}

macro_rules! ensure {
    ($c:expr, $($arg:tt)*) => {
        if !$c {
            return Err(format!($($arg)*));
        }
    };
}

fn run(name: &str, f: impl FnOnce() -> Check) -> CheckOutcome {
    match f() {
        Ok(detail) => CheckOutcome {
            name: name.into(),
            passed: true,
            detail,
        },
        Err(detail) => CheckOutcome {
            name: name.into(),
            passed: false,
            detail,
        },
    }
}

pub fn adjoint(f: Family, n: usize) -> RootDatum {
    RootDatum::new(CartanSpec::adjoint(f, n)).expect("standard Cartan type")
}

pub fn gl(n: usize) -> RootDatum {
    RootDatum::new(CartanSpec::new(Family::A, n - 1, LatticeKind::Gl)).expect("gl lattice")
}

/// `Sp_4` cocharacters in the coordinates `e_1, e_2`.
pub fn sp4() -> RootDatum {
    let basis = vec![vec![1, 1], vec![0, 1]];
    RootDatum::new(CartanSpec::new(
        Family::C,
        2,
        LatticeKind::Custom { basis, denominator: 1 },
    ))
    .expect("symplectic lattice")
}

pub struct SuiteCase {
    pub name: String,
    pub datum: Arc<RootDatum>,
    pub mu: Coweight,
}

/// The standard `(datum, mu)` pairs used by the exhaustive checks.
pub fn standard_suite() -> Vec<SuiteCase> {
    let a1 = Arc::new(adjoint(Family::A, 1));
    let gl3 = Arc::new(gl(3));
    let c2 = Arc::new(sp4());
    let g2 = Arc::new(adjoint(Family::G, 2));
    let qm = g2.coroot(g2.highest_root_index());
    let case = |name: &str, d: &Arc<RootDatum>, mu: Vec<i64>| SuiteCase {
        name: name.into(),
        datum: d.clone(),
        mu: Coweight(mu),
    };
    vec![
        case("A1 mu=(1)", &a1, vec![1]),
        case("A1 mu=(2)", &a1, vec![2]),
        case("gl3 mu=(1,0,0)", &gl3, vec![1, 0, 0]),
        case("gl3 mu=(2,1,0)", &gl3, vec![2, 1, 0]),
        case("Sp4 mu=(1,0)", &c2, vec![1, 0]),
        case("Sp4 mu=(1,1)", &c2, vec![1, 1]),
        SuiteCase {
            name: format!("G2 mu={qm}"),
            datum: g2,
            mu: qm,
        },
    ]
}

pub const CRITERIA: [&str; 11] = [
    "classification of non-special levels with proper support",
    "type of the short-root subgroup",
    "z_gamma examples and oracle agreement",
    "unique maximum of w W_K within Adm(mu)",
    "parahoric admissible sets and their maximal elements",
    "every fiber is a single Schubert variety",
    "all Schubert varieties occur over the hyperspecial level",
    "quantum Bruhat graph structure",
    "admissible set sizes against the lower-set oracle",
    "acute cones bound admissible elements",
    "both irreducibility routes agree",
];

/// Runs acceptance criterion `n` (1-based).
pub fn criterion(n: usize) -> CheckOutcome {
    let name = format!("criterion {n}: {}", CRITERIA[n - 1]);
    run(
        &name,
        match n {
            1 => classification,
            2 => short_subgroups,
            3 => z_gamma_examples,
            4 => unique_maxima,
            5 => parahoric_admissible,
            6 => single_schubert_fibers,
            7 => schubert_sweeps,
            8 => qbg_structure,
            9 => admissible_sizes,
            10 => acute_cone_bounds,
            11 => irreducibility_routes,
            _ => unreachable!("there are 11 criteria"),
        },
    )
}

pub fn acceptance() -> Vec<CheckOutcome> {
    (1..=CRITERIA.len()).map(criterion).collect()
}

fn all_but(rank: usize, i: usize) -> Vec<usize> {
    (0..=rank).filter(|&j| j != i).collect()
}

type Expected = Vec<(Vec<usize>, Vec<usize>)>;

fn classification() -> Check {
    let cases: Vec<(Family, usize, Expected)> = vec![
        (Family::B, 2, vec![(all_but(2, 2), vec![2])]),
        (Family::B, 3, vec![(all_but(3, 3), vec![3])]),
        (Family::C, 2, vec![(all_but(2, 1), vec![1])]),
        (Family::C, 3, (1..3).map(|i| (all_but(3, i), vec![1, 2])).collect()),
        (Family::C, 4, (1..4).map(|i| (all_but(4, i), vec![1, 2, 3])).collect()),
        (Family::F, 4, vec![(all_but(4, 4), vec![3, 4])]),
        (Family::G, 2, vec![(all_but(2, 1), vec![1])]),
        (Family::A, 2, vec![]),
        (Family::A, 3, vec![]),
        (Family::D, 4, vec![]),
    ];
    for (f, n, mut want) in cases {
        let d = adjoint(f, n);
        let mut got: Vec<(Vec<usize>, Vec<usize>)> = d
            .classify()?
            .into_iter()
            .map(|(k, s)| (k.labels(), s.labels()))
            .collect();
        got.sort();
        want.sort();
        ensure!(got == want, "{}{n}: got {got:?}, expected {want:?}", f.letter());
        let short = d.short_simple_set();
        ensure!(
            got.iter().all(|(_, s)| *s == short),
            "{}{n}: supports differ from the short simple roots {short:?}",
            f.letter()
        );
    }
    Ok("10 types match".into())
}

fn short_subgroups() -> Check {
    let cases = [
        (Family::B, 2, "A1", 2),
        (Family::B, 3, "A1", 2),
        (Family::C, 2, "A1", 2),
        (Family::C, 3, "A2", 6),
        (Family::C, 4, "A3", 24),
        (Family::F, 4, "A2", 6),
        (Family::G, 2, "A1", 2),
        (Family::A, 2, "trivial", 1),
        (Family::A, 3, "trivial", 1),
        (Family::D, 4, "trivial", 1),
    ];
    for (f, n, ty, order) in cases {
        let got = adjoint(f, n).w_short_type();
        ensure!(
            got == (ty.to_string(), order),
            "{}{n}: got {got:?}, expected ({ty}, {order})",
            f.letter()
        );
    }
    Ok(format!("{} types match", cases.len()))
}

fn gamma_box(rank: usize, bound: i64) -> Vec<CorootVec> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(CorootVec).collect()
}

fn small_types() -> Vec<RootDatum> {
    [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::G, 2),
    ]
    .into_iter()
    .map(|(f, n)| adjoint(f, n))
    .collect()
}

fn z_gamma_examples() -> Check {
    let a2 = adjoint(Family::A, 2);
    let z = a2.z_gamma(&CorootVec(vec![1, 2]))?;
    ensure!(z == a2.from_word(&[1, 2, 1]), "A2: z = {}", a2.word_string(&z));
    let c2 = adjoint(Family::C, 2);
    let z = c2.z_gamma(&CorootVec(vec![1, 2]))?;
    ensure!(z == c2.from_word(&[2, 1, 2, 1]), "C2: z = {}", c2.word_string(&z));
    let mut n = 0;
    for d in small_types() {
        let e = d.identity();
        for g in gamma_box(d.rank(), 3) {
            let fast = d.z_gamma(&g)?;
            let slow = d.max_wt_leq_oracle(&g, &e)?;
            ensure!(
                fast == slow,
                "{}: gamma={g}: greedy {} vs oracle {}",
                d.spec(),
                d.word_string(&fast),
                d.word_string(&slow)
            );
            n += 1;
        }
    }
    Ok(format!("2 examples, {n} oracle comparisons"))
}

fn unique_maxima() -> Check {
    let mut n = 0;
    for c in standard_suite() {
        let d = &c.datum;
        let adm = d.admissible_set(&c.mu)?;
        for k in d.spherical_subsets() {
            for w in adm.iter() {
                d.max_in_coset(w, k, &c.mu).map_err(|e| format!("{}: {e}", c.name))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} cosets certified"))
}

fn parahoric_admissible() -> Check {
    let mut n = 0;
    for c in standard_suite() {
        let d = &c.datum;
        for k in d.spherical_subsets() {
            d.admissible_k(&c.mu, k).map_err(|e| format!("{}: {e}", c.name))?;
            d.max_elements_min_reps(&c.mu, k)
                .map_err(|e| format!("{}: {e}", c.name))?;
            n += 1;
        }
    }
    Ok(format!("{n} levels"))
}

/// Checks every fiber for every nested pair of levels.
fn fibers_are_schubert(d: &RootDatum, mu: &Coweight) -> std::result::Result<usize, String> {
    let mut n = 0;
    for k2 in d.spherical_subsets() {
        let big = d.parahoric_group(k2);
        for k1 in d.spherical_subsets().into_iter().filter(|k| k.is_subset(k2)) {
            for f in d.fibers(mu, k1, k2)? {
                let w = d.aff_word_string(&f.stratum);
                let members: HashSet<&AffineElement> = f.member_set.iter().collect();
                let lower: HashSet<&AffineElement> = big.iter().filter(|u| d.aff_bruhat_leq(u, &f.x_max)).collect();
                ensure!(members == lower, "K1={k1:?} K2={k2:?} w={w}: not a lower set");
                for x in &f.member_set {
                    for i in k1.labels() {
                        ensure!(
                            members.contains(&d.aff_mul_simple_right(x, i)),
                            "K1={k1:?} K2={k2:?} w={w}: not W_K1-stable"
                        );
                    }
                }
                ensure!(
                    d.aff_coset_max(&f.x_max, k1, Side::Right) == f.x_max,
                    "K1={k1:?} K2={k2:?} w={w}: maximum not maximal in its coset"
                );
                n += 1;
            }
        }
    }
    Ok(n)
}

fn single_schubert_fibers() -> Check {
    let a1 = adjoint(Family::A, 1);
    let mu = Coweight(vec![1]);
    let k2 = a1.spherical(&[1])?;
    let mut dims = Vec::new();
    for f in a1.fibers(&mu, SphericalSubset::empty(), k2)? {
        dims.push((a1.aff_word_string(&f.stratum), f.dimension));
    }
    let want = vec![("e".to_string(), 1), ("0".to_string(), 1), ("10".to_string(), 0)];
    ensure!(dims == want, "A1 fibers: {dims:?}");
    let mut n = 0;
    for c in standard_suite() {
        n += fibers_are_schubert(&c.datum, &c.mu).map_err(|e| format!("{}: {e}", c.name))?;
    }
    Ok(format!("{n} fibers"))
}

fn hyperspecial_agreement(d: &RootDatum, mu: &Coweight) -> std::result::Result<usize, String> {
    let s0 = SphericalSubset::from_bits(FiniteSubset::full(d.rank()).bits());
    let mut n = 0;
    for w in d.admissible_set(mu)?.iter().filter(|w| d.is_min_left(w, s0)) {
        let fast = d.hyperspecial_max_fast(mu, w)?;
        let slow = d.hyperspecial_max_brute(mu, w)?;
        ensure!(
            fast == slow,
            "w={}: fast {} vs brute {}",
            d.aff_word_string(w),
            d.word_string(&fast),
            d.word_string(&slow)
        );
        n += 1;
    }
    Ok(n)
}

fn schubert_sweeps() -> Check {
    let g = gl(3);
    let s = g.schubert_sweep(&Coweight(vec![2, 1, 0]))?;
    ensure!(s.regular, "(2,1,0) reported non-regular");
    ensure!(s.indices.len() == 6, "gl3: {} indices", s.indices.len());
    let a1 = adjoint(Family::A, 1);
    for m in [1, 2] {
        let s = a1.schubert_sweep(&Coweight(vec![m]))?;
        ensure!(s.indices.len() == 2, "A1 mu=({m}): {} indices", s.indices.len());
    }
    let mut n = 0;
    for c in standard_suite() {
        n += hyperspecial_agreement(&c.datum, &c.mu).map_err(|e| format!("{}: {e}", c.name))?;
    }
    Ok(format!("sweeps complete, fast route agrees on {n} elements"))
}

/// The set of weights of all paths from `src` to each vertex using exactly
/// `steps` edges.
fn path_weights(d: &RootDatum, src: usize, steps: usize, only_shortest: bool) -> Vec<HashSet<CorootVec>> {
    let g = d.qbg().expect("graph");
    let row = d.wt_row(src).expect("row");
    let n = g.num_vertices();
    let mut layer: Vec<HashSet<CorootVec>> = vec![HashSet::new(); n];
    layer[src].insert(CorootVec::zero(d.rank()));
    let mut all: Vec<HashSet<CorootVec>> = layer.clone();
    for _ in 0..steps {
        let mut next: Vec<HashSet<CorootVec>> = vec![HashSet::new(); n];
        for (u, here) in layer.iter().enumerate() {
            if here.is_empty() {
                continue;
            }
            for &(v, b, kind) in g.out_edges(u) {
                let v = v as usize;
                if only_shortest && row.dist[v] != row.dist[u] + 1 {
                    continue;
                }
                let add = match kind {
                    EdgeKind::Bruhat => CorootVec::zero(d.rank()),
                    EdgeKind::Quantum => d.coroot_coords(b as usize),
                };
                for w in &layer[u] {
                    next[v].insert(w.add(&add));
                }
            }
        }
        for (a, b) in all.iter_mut().zip(&next) {
            a.extend(b.iter().cloned());
        }
        layer = next;
    }
    all
}

/// Quantum Bruhat graph and Demazure product properties for one datum,
/// exhaustive or sampled.
pub fn qbg_properties(d: &RootDatum, exhaustive: bool, rng: &mut StdRng) -> Check {
    let els = d.enumerate()?;
    let t = d.weyl_table()?;
    let n = els.len();
    let pick = |rng: &mut StdRng| rng.random_range(0..n);
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
    } else {
        (0..RANK3_SAMPLES).map(|_| (pick(rng), pick(rng))).collect()
    };
    let triples: Vec<(usize, usize, usize)> = if exhaustive {
        (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .collect()
    } else {
        (0..RANK3_SAMPLES).map(|_| (pick(rng), pick(rng), pick(rng))).collect()
    };
    let mut by_src: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in &pairs {
        by_src.entry(a).or_default().push(b);
    }
    for (&a, targets) in &by_src {
        let row = d.wt_row(a)?;
        let max_d = targets.iter().map(|&b| row.dist[b] as usize).max().unwrap_or(0);
        let shortest = path_weights(d, a, max_d, true);
        let longer = path_weights(d, a, max_d + 2, false);
        for &b in targets {
            let (x, y) = (&els[a], &els[b]);
            let wt = &row.weight[b];
            let dist = row.dist[b] as usize;
            let sp: Vec<&CorootVec> = shortest[b].iter().collect();
            ensure!(
                sp.len() == 1 && sp[0] == wt,
                "shortest paths {}->{} carry weights {sp:?}",
                d.word_string(x),
                d.word_string(y)
            );
            ensure!(
                longer[b].iter().all(|p| wt.leq(p)),
                "a path {}->{} of length <= {} has weight below {wt}",
                d.word_string(x),
                d.word_string(y),
                dist + 2
            );
            ensure!(
                wt.0.iter().all(|&c| c == 0) == d.bruhat_leq(x, y),
                "zero weight does not match Bruhat order at ({}, {})",
                d.word_string(x),
                d.word_string(y)
            );
        }
    }
    for &(a, b, c) in &triples {
        let lhs = d.wt(&els[a], &els[c])?;
        let rhs = d.wt(&els[a], &els[b])?.add(&d.wt(&els[b], &els[c])?);
        ensure!(lhs.leq(&rhs), "triangle inequality fails at ids ({a},{b},{c})");
        let (u, v, w) = (&els[a], &els[b], &els[c]);
        ensure!(
            d.demazure(&d.demazure(u, v), w) == d.demazure(u, &d.demazure(v, w)),
            "Demazure product not associative at ids ({a},{b},{c})"
        );
    }
    for x in &els {
        for v in &els {
            ensure!(d.wt_by_recursion(x, v)? == d.wt(x, v)?, "recursion differs from BFS");
        }
        for b in 0..d.num_positive_roots() {
            let top = d.demazure(x, &d.reflection(b));
            ensure!(
                d.wt(&top, x)?.leq(&d.coroot_coords(b)),
                "wt(z * s_beta, z) exceeds beta^vee for z={}",
                d.word_string(x)
            );
        }
    }
    let g = d.qbg()?;
    let e = t.id(&d.identity());
    for (s, x) in els.iter().enumerate() {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &(v, _, kind) in g.out_edges(u) {
                if kind == EdgeKind::Quantum && dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u] + 1;
                    q.push_back(v as usize);
                }
            }
        }
        ensure!(
            dist[e] == d.qbg_distance(x, &d.identity())?,
            "no purely quantum shortest path from {}",
            d.word_string(x)
        );
    }
    for &(a, b) in &pairs {
        let (u, v) = (&els[a], &els[b]);
        let uv = d.compose(u, v);
        if d.length(&uv) == d.length(u) + d.length(v) {
            ensure!(d.demazure(u, v) == uv, "Demazure product ignores a reduced product");
        }
        for i in 1..=d.rank() {
            if d.is_left_descent(v, i) {
                ensure!(
                    d.demazure(&d.simple_reflection(i), v) == *v,
                    "s_i * v != v for a descent"
                );
            }
        }
    }
    if exhaustive {
        for u in &els {
            for v in &els {
                let want = els
                    .iter()
                    .filter(|a| d.bruhat_leq(a, u))
                    .flat_map(|a| els.iter().filter(|b| d.bruhat_leq(b, v)).map(move |b| (a, b)))
                    .map(|(a, b)| d.compose(a, b))
                    .max_by_key(|w| d.length(w))
                    .unwrap();
                ensure!(
                    d.demazure(u, v) == want,
                    "Demazure product is not the maximum of products"
                );
            }
        }
    }
    for g in gamma_box(d.rank(), 3) {
        let z = d.z_gamma(&g)?;
        ensure!(d.is_identity(&d.compose(&z, &z)), "z_gamma is not an involution at {g}");
        ensure!(
            z == d.z_gamma_with(&g, crate::qbg::TieBreak::LexMax)?,
            "z_gamma depends on the tie-break at {g}"
        );
        let seq = d.greedy_decomposition(&g)?;
        for &a in &seq {
            for &b in &seq {
                let (ra, rb) = (d.reflection(a), d.reflection(b));
                ensure!(
                    d.demazure(&ra, &rb) == d.demazure(&rb, &ra),
                    "greedy reflections fail to commute at {g}"
                );
            }
        }
    }
    Ok(format!("{} pairs, {} triples", pairs.len(), triples.len()))
}

fn qbg_structure() -> Check {
    let a2 = adjoint(Family::A, 2);
    let g = a2.qbg()?;
    let (b, q) = (g.count(EdgeKind::Bruhat), g.count(EdgeKind::Quantum));
    ensure!((b, q) == (8, 7), "A2 has {b} Bruhat and {q} quantum edges");
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut parts = Vec::new();
    for d in small_types() {
        let exhaustive = d.rank() <= 2;
        let r = qbg_properties(&d, exhaustive, &mut rng).map_err(|e| format!("{}: {e}", d.spec()))?;
        parts.push(format!("{}: {r}", d.spec()));
    }
    Ok(parts.join("; "))
}

/// Every element of `W_af` of length at most `max_len`.
pub fn affine_ball(d: &RootDatum, max_len: usize) -> Vec<AffineElement> {
    let mut seen: HashSet<AffineElement> = HashSet::from([d.aff_identity()]);
    let mut frontier = vec![d.aff_identity()];
    for len in 0..max_len {
        let mut next = Vec::new();
        for x in &frontier {
            for i in 0..=d.rank() {
                let y = d.aff_mul_simple_right(x, i);
                if d.aff_length(&y) == len + 1 && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<AffineElement> = seen.into_iter().collect();
    d.sort_affine(&mut out);
    out
}

/// The Bruhat lower set of `y`, as all products of subwords of a reduced
/// word of `y`.
pub fn subword_lower_set(d: &RootDatum, y: &AffineElement) -> HashSet<AffineElement> {
    let (word, tau) = d.aff_word(y);
    let mut set: HashSet<AffineElement> = HashSet::from([d.aff_identity()]);
    for &i in &word {
        let more: Vec<AffineElement> = set.iter().map(|x| d.aff_mul_simple_right(x, i)).collect();
        set.extend(more);
    }
    set.into_iter().map(|x| d.aff_compose(&x, &tau)).collect()
}

/// `Adm(mu)` as the union of subword lower sets of the translations.
pub fn admissible_oracle(d: &RootDatum, mu: &Coweight) -> std::result::Result<HashSet<AffineElement>, String> {
    let mut out = HashSet::new();
    for lam in d.orbit(mu)? {
        out.extend(subword_lower_set(d, &d.translation(&lam)?));
    }
    Ok(out)
}

fn admissible_sizes() -> Check {
    let a1 = adjoint(Family::A, 1);
    let n1 = admissible_oracle(&a1, &Coweight(vec![1]))?.len();
    ensure!(n1 == 5, "A1 oracle: {n1}");
    let g = gl(3);
    let n2 = admissible_oracle(&g, &Coweight(vec![1, 0, 0]))?.len();
    ensure!(n2 == 7, "gl3 oracle: {n2}");
    ensure!(a1.admissible_set(&Coweight(vec![1]))?.len() == 5, "A1 closure size");
    ensure!(
        g.admissible_set(&Coweight(vec![1, 0, 0]))?.len() == 7,
        "gl3 closure size"
    );
    let mut sizes = Vec::new();
    for c in standard_suite() {
        let oracle = admissible_oracle(&c.datum, &c.mu)?;
        let adm = c.datum.admissible_set(&c.mu)?;
        let got: HashSet<AffineElement> = adm.iter().cloned().collect();
        ensure!(got == oracle, "{}: closure and oracle differ", c.name);
        sizes.push(format!("{}: {}", c.name, adm.len()));
    }
    Ok(sizes.join(", "))
}

fn acute_cone_bounds() -> Check {
    let mut n = 0;
    for c in standard_suite() {
        let d = &c.datum;
        for w in d.admissible_set(&c.mu)?.iter() {
            let dirs = d.acute_directions(w)?;
            ensure!(
                !dirs.is_empty(),
                "{}: no acute cone contains {}",
                c.name,
                d.aff_word_string(w)
            );
            for z in dirs {
                let t = d.translation(&d.act_coweight(&z, &c.mu))?;
                ensure!(
                    d.aff_bruhat_leq(w, &t),
                    "{}: {} is not below t^{{z(mu)}} for z={}",
                    c.name,
                    d.aff_word_string(w),
                    d.word_string(&z)
                );
                n += 1;
            }
        }
    }
    Ok(format!("{n} (w, z) pairs"))
}

fn irreducibility_routes() -> Check {
    let c2 = sp4();
    let k = c2.spherical(&[0, 2])?;
    let yes = c2.is_irreducible(&Coweight(vec![1, 1]), k)?;
    ensure!(yes.irreducible && yes.by_short_roots == Some(true), "(1,1): {yes:?}");
    let no = c2.component_reps(&Coweight(vec![1, 0]), k)?;
    ensure!(no.count == 2, "(1,0): {} components", no.count);
    let b2 = Arc::new(adjoint(Family::B, 2));
    let c2a = Arc::new(adjoint(Family::C, 2));
    let mut cases: Vec<(String, Arc<RootDatum>, Coweight)> = standard_suite()
        .into_iter()
        .filter(|c| !matches!(c.datum.spec().lattice, LatticeKind::Gl))
        .map(|c| (c.name, c.datum, c.mu))
        .collect();
    for d in [b2, c2a] {
        for b in 0..d.num_positive_roots() {
            let mu = d.coroot(b);
            if d.is_dominant(&mu) {
                cases.push((format!("{} mu={mu}", d.spec()), d.clone(), mu));
            }
        }
    }
    let mut n = 0;
    for (name, d, mu) in cases {
        if d.is_central(&mu) {
            continue;
        }
        for k in d.spherical_subsets() {
            let r = d.is_irreducible(&mu, k).map_err(|e| format!("{name}: {e}"))?;
            ensure!(r.by_short_roots == Some(r.by_count), "{name} K={k:?}: {r:?}");
            n += 1;
        }
    }
    Ok(format!("Siegel cases match, routes agree on {n} levels"))
}

/// Invariant suites for one datum, and for one `mu` when given.
pub fn invariants(d: &RootDatum, mu: Option<&Coweight>) -> Vec<CheckOutcome> {
    let mut out = vec![
        run("reflections permute roots", || reflections(d)),
        run("simple coroots pair to 2 with 2rho", || two_rho(d)),
        run("dominance is a partial order", || dominance_order(d)),
    ];
    let small = d.weyl_order().is_ok_and(|n| n <= PAIRWISE_LIMIT);
    if small {
        out.push(run("Bruhat order matches the subword oracle", || subword_bruhat(d)));
        out.push(run("lengths complement under w0", || w0_complement(d)));
        out.push(run("parabolic factorizations are length-additive", || parabolic(d)));
        out.push(run("support is independent of the reduced word", || supports(d)));
        let mut rng = StdRng::seed_from_u64(SEED);
        out.push(run("quantum Bruhat graph properties", || {
            qbg_properties(d, d.rank() <= 2, &mut rng)
        }));
    }
    if d.rank() <= 2 {
        let ball = affine_ball(d, AFFINE_BALL);
        out.push(run("affine action is compatible with composition", || {
            action_compat(d, &ball)
        }));
        out.push(run("affine lengths and descents", || affine_descents(d, &ball)));
        out.push(run("translation minimality pairing test", || translation_min(d)));
        out.push(run("acute cones cover and are gallery-stable", || {
            acute_cones(d, &ball)
        }));
    }
    if small && d.rank() <= 3 {
        out.push(run("support sweep and coset products agree", || support_lemma(d)));
    }
    if let Some(mu) = mu {
        out.push(run("admissible set is a lower set", || admissible_lower(d, mu)));
        out.push(run("strata partition the admissible set", || stratification(d, mu)));
        out.push(run("component translations classify double cosets", || {
            components(d, mu)
        }));
        out.push(run("fibers are single Schubert varieties", || {
            fibers_are_schubert(d, mu).map(|n| format!("{n} fibers"))
        }));
        out.push(run("fast hyperspecial maxima", || {
            hyperspecial_agreement(d, mu).map(|n| format!("{n} elements"))
        }));
    }
    out
}

fn reflections(d: &RootDatum) -> Check {
    let np = d.num_positive_roots();
    for b in 0..d.num_roots() {
        let s = d.reflection(b);
        ensure!(d.is_identity(&d.compose(&s, &s)), "reflection {b} is not an involution");
        for a in 0..d.num_roots() {
            ensure!(
                s.apply(d.neg_index(a)) == d.neg_index(s.apply(a)),
                "reflection {b} is not linear"
            );
        }
    }
    for i in 1..=d.rank() {
        let b = d.simple_root_index(i);
        let s = d.reflection(b);
        for a in (0..np).filter(|&a| a != b) {
            ensure!(d.is_positive_index(s.apply(a)), "s_{i} sends a positive root negative");
        }
    }
    Ok(format!("{} reflections", d.num_roots()))
}

fn two_rho(d: &RootDatum) -> Check {
    let tr = d.two_rho();
    for i in 0..d.rank() {
        let v: i64 = (0..d.rank()).map(|j| d.cartan()[i][j] * tr[j]).sum();
        ensure!(v == 2, "<alpha_{}^vee, 2rho> = {v}", i + 1);
    }
    Ok(String::new())
}

fn dominance_order(d: &RootDatum) -> Check {
    let dim = d.dim();
    let mut pts: Vec<Coweight> = vec![Coweight(vec![])];
    for _ in 0..dim {
        pts = pts
            .into_iter()
            .flat_map(|c| {
                (-1..=1).map(move |x| {
                    let mut v = c.0.clone();
                    v.push(x);
                    Coweight(v)
                })
            })
            .collect();
    }
    pts.truncate(40);
    let leq: Vec<Vec<bool>> = pts
        .iter()
        .map(|a| pts.iter().map(|b| d.dominance_leq(a, b)).collect::<crate::Result<_>>())
        .collect::<crate::Result<_>>()?;
    for a in 0..pts.len() {
        ensure!(leq[a][a], "not reflexive at {}", pts[a]);
        for b in 0..pts.len() {
            ensure!(!(a != b && leq[a][b] && leq[b][a]), "not antisymmetric");
            for c in 0..pts.len() {
                ensure!(!(leq[a][b] && leq[b][c]) || leq[a][c], "not transitive");
            }
        }
    }
    Ok(format!("{} coweights", pts.len()))
}

fn finite_lower(d: &RootDatum, y: &WeylElement) -> HashSet<WeylElement> {
    let mut set: HashSet<WeylElement> = HashSet::from([d.identity()]);
    for i in d.word(y) {
        let more: Vec<WeylElement> = set.iter().map(|x| d.mul_simple_right(x, i)).collect();
        set.extend(more);
    }
    set
}

fn subword_bruhat(d: &RootDatum) -> Check {
    let els = d.enumerate()?;
    if d.length(&d.longest_element()) > SUBWORD_LIMIT {
        return Ok("skipped: longest element too long".into());
    }
    for y in &els {
        let lower = finite_lower(d, y);
        for x in &els {
            ensure!(
                d.bruhat_leq(x, y) == lower.contains(x),
                "disagreement at ({}, {})",
                d.word_string(x),
                d.word_string(y)
            );
        }
    }
    Ok(format!("{} pairs", els.len() * els.len()))
}

fn w0_complement(d: &RootDatum) -> Check {
    let w0 = d.longest_element();
    let l0 = d.length(&w0);
    for w in d.enumerate()? {
        ensure!(
            d.length(&w) + d.length(&d.compose(&w, &w0)) == l0,
            "fails at {}",
            d.word_string(&w)
        );
    }
    Ok(String::new())
}

fn parabolic(d: &RootDatum) -> Check {
    let els = d.enumerate()?;
    for bits in 0..(1u32 << d.rank()) {
        let j = FiniteSubset::from_bits(bits << 1);
        for w in &els {
            let m = d.coset_min(w, j, Side::Right);
            let u = d.compose(&d.inverse(&m), w);
            ensure!(d.support(&u).is_subset(j), "right factor leaves W_J");
            ensure!(
                d.length(w) == d.length(&m) + d.length(&u),
                "right factorization not additive"
            );
            let m = d.coset_min(w, j, Side::Left);
            let u = d.compose(w, &d.inverse(&m));
            ensure!(d.support(&u).is_subset(j), "left factor leaves W_J");
            ensure!(
                d.length(w) == d.length(&m) + d.length(&u),
                "left factorization not additive"
            );
        }
    }
    Ok(String::new())
}

fn supports(d: &RootDatum) -> Check {
    for w in d.enumerate()? {
        let mut words = vec![d.word(&w)];
        for pick_last in [false, true] {
            let mut cur = w.clone();
            let mut word = Vec::new();
            while !d.is_identity(&cur) {
                let ds = d.descents(&cur, Side::Right);
                let i = if pick_last { *ds.last().unwrap() } else { ds[0] };
                word.push(i);
                cur = d.mul_simple_right(&cur, i);
            }
            word.reverse();
            ensure!(d.from_word(&word) == w, "peeled word does not spell the element");
            words.push(word);
        }
        let sets: Vec<FiniteSubset> = words.iter().map(|v| FiniteSubset::from_labels(v)).collect();
        ensure!(
            sets.iter().all(|s| *s == sets[0]),
            "support varies at {}",
            d.word_string(&w)
        );
    }
    Ok(String::new())
}

fn action_compat(d: &RootDatum, ball: &[AffineElement]) -> Check {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RANK3_SAMPLES {
        let a = &ball[rng.random_range(0..ball.len())];
        let b = &ball[rng.random_range(0..ball.len())];
        let ar = AffineRoot {
            root: rng.random_range(0..d.num_roots()),
            level: rng.random_range(-3..=3),
        };
        let lhs = d.act_affine(&d.aff_compose(a, b), ar)?;
        let rhs = d.act_affine(a, d.act_affine(b, ar)?)?;
        ensure!(lhs == rhs, "action not compatible");
    }
    Ok(format!("{RANK3_SAMPLES} samples"))
}

fn affine_descents(d: &RootDatum, ball: &[AffineElement]) -> Check {
    for w in ball {
        let l = d.aff_length(w);
        ensure!(
            d.affine_inversions(w).len() == l,
            "inversion count differs at {}",
            d.aff_word_string(w)
        );
        for i in 0..=d.rank() {
            let up = d.aff_length(&d.aff_mul_simple_right(w, i));
            let pos = d.affine_root_is_positive(d.act_affine(w, d.simple_affine_root(i))?);
            ensure!(up == l + 1 || up + 1 == l, "length jumps by more than one");
            ensure!(
                (up == l + 1) == pos,
                "descent criterion fails at {} s_{i}",
                d.aff_word_string(w)
            );
        }
    }
    Ok(format!("{} elements", ball.len()))
}

fn translation_min(d: &RootDatum) -> Check {
    let dim = d.dim();
    let mut lams: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        lams = lams
            .into_iter()
            .flat_map(|c| {
                (-3..=3).map(move |x| {
                    let mut v = c.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    for k in d.spherical_subsets() {
        for l in &lams {
            let lam = Coweight(l.clone());
            let t = d.translation(&lam)?;
            ensure!(
                d.is_translation_min_rep(&lam, k) == (d.aff_coset_min(&t, k, Side::Right) == t),
                "pairing test fails for {lam}, K={k:?}"
            );
        }
    }
    Ok(format!("{} coweights", lams.len()))
}

fn acute_cones(d: &RootDatum, ball: &[AffineElement]) -> Check {
    for w in ball {
        let dirs = d.acute_directions(w)?;
        ensure!(!dirs.is_empty(), "{} lies in no acute cone", d.aff_word_string(w));
        for i in (0..=d.rank()).filter(|&i| d.aff_is_right_descent(w, i)) {
            let v = d.aff_mul_simple_right(w, i);
            for z in &dirs {
                ensure!(
                    d.in_acute_cone(&v, z),
                    "cone not inherited from {} to {}",
                    d.aff_word_string(w),
                    d.aff_word_string(&v)
                );
            }
        }
    }
    Ok(format!("{} elements", ball.len()))
}

fn support_lemma(d: &RootDatum) -> Check {
    let full = FiniteSubset::full(d.rank());
    let subsets = d.spherical_subsets();
    let supp: HashMap<u32, FiniteSubset> = subsets
        .iter()
        .map(|&k| Ok((k.bits(), d.supp_min_reps(k)?)))
        .collect::<crate::Result<_>>()?;
    for &k in &subsets {
        if supp[&k.bits()] == full {
            for &k2 in subsets.iter().filter(|k2| k2.is_subset(k)) {
                ensure!(
                    supp[&k2.bits()] == full,
                    "full support not inherited by {k2:?} from {k:?}"
                );
            }
        }
        let group = d.pr_group(k);
        for bits in 0..full.bits() >> 1 {
            let j = FiniteSubset::from_bits(bits << 1);
            let covers = d.product_covers_w0(&group, &d.parabolic_subgroup(j))?;
            ensure!(covers == supp[&k.bits()].is_subset(j), "K={k:?}, J={j:?}");
        }
    }
    Ok(format!("{} levels", subsets.len()))
}

fn admissible_lower(d: &RootDatum, mu: &Coweight) -> Check {
    let adm = d.admissible_set(mu)?;
    for w in adm.iter() {
        for v in d.cocovers(w) {
            ensure!(adm.contains(&v), "cocover of {} missing", d.aff_word_string(w));
        }
    }
    let oracle = admissible_oracle(d, mu)?;
    ensure!(
        oracle == adm.iter().cloned().collect(),
        "differs from the subword oracle"
    );
    Ok(format!("{} elements", adm.len()))
}

fn stratification(d: &RootDatum, mu: &Coweight) -> Check {
    let adm = d.admissible_set(mu)?;
    let mut seen: HashSet<AffineElement> = HashSet::new();
    for lam in d.dominant_strata_labels(mu)? {
        for x in d.stratum(mu, &lam)? {
            ensure!(
                adm.contains(&x),
                "stratum element {} not admissible",
                d.aff_word_string(&x)
            );
            ensure!(seen.insert(x), "strata overlap");
        }
    }
    ensure!(seen.len() == adm.len(), "strata cover {} of {}", seen.len(), adm.len());
    Ok(String::new())
}

fn components(d: &RootDatum, mu: &Coweight) -> Check {
    let els = d.enumerate()?;
    let stab = d.parabolic_subgroup(d.finite_subset(&d.stabilizer_labels(mu))?);
    for k in d.spherical_subsets() {
        let pr = d.pr_group(k);
        let mut class_of: HashMap<WeylElement, AffineElement> = HashMap::new();
        let mut by_class: HashMap<WeylElement, AffineElement> = HashMap::new();
        for x in &els {
            let mut orbit: Vec<WeylElement> = pr
                .iter()
                .flat_map(|u| stab.iter().map(move |v| (u, v)))
                .map(|(u, v)| d.compose(&d.compose(u, x), v))
                .collect();
            d.sort_elements(&mut orbit);
            let t = d.unique_conjugate_in_min_reps(&d.act_coweight(x, mu), k)?;
            if let Some(prev) = by_class.insert(orbit[0].clone(), t.clone()) {
                ensure!(prev == t, "translations differ within a double coset, K={k:?}");
            }
            class_of.insert(x.clone(), t);
        }
        let distinct: HashSet<&AffineElement> = by_class.values().collect();
        ensure!(
            distinct.len() == by_class.len(),
            "two double cosets share a translation, K={k:?}"
        );
        let count = d.component_reps(mu, k)?.count;
        let brute = d.maximal_double_classes(mu, k)?.len();
        ensure!(
            count == by_class.len() && count == brute,
            "K={k:?}: {count} components, {} double cosets, {brute} maximal classes",
            by_class.len()
        );
    }
    Ok(String::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_on_a1() {
        let d = adjoint(Family::A, 1);
        assert_eq!(admissible_oracle(&d, &Coweight(vec![1])).unwrap().len(), 5);
        assert_eq!(affine_ball(&d, 2).len(), 5);
    }

    #[test]
    fn failures_are_reported() {
        let c = run("x", || Err("boom".into()));
        assert!(!c.passed);
        assert_eq!(c.detail, "boom");
    }

    #[test]
    fn invariants_pass_on_a2() {
        let d = adjoint(Family::A, 2);
        for c in invariants(&d, Some(&Coweight(vec![1, 1]))) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
