//! JSON shapes printed by the command line.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fibers::FiberDescriptor;
use crate::finite_weyl::{FiniteSubset, WeylElement};
use crate::irreducibility::ComponentReport;
use crate::iwahori_weyl::SphericalSubset;
use crate::qbg::{EdgeKind, TieBreak};
use crate::root_datum::{CorootVec, Coweight, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub rep: String,
    pub translation: Vec<i64>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReportJson {
    pub mu: Vec<i64>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub count: usize,
    pub irreducible: bool,
    pub components: Vec<ComponentJson>,
}

impl ComponentReportJson {
    pub fn new(d: &RootDatum, r: &ComponentReport) -> Self {
        ComponentReportJson {
            mu: r.mu.0.clone(),
            k: r.k.labels(),
            count: r.count,
            irreducible: r.irreducible,
            components: r
                .components
                .iter()
                .map(|c| ComponentJson {
                    rep: d.word_string(&c.rep),
                    translation: c.translation.lam.0.clone(),
                    dimension: c.dimension,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberJson {
    pub stratum: String,
    pub x_max: String,
    pub min_rep: String,
    pub dimension: usize,
}

impl FiberJson {
    pub fn new(d: &RootDatum, f: &FiberDescriptor) -> Self {
        FiberJson {
            stratum: d.aff_word_string(&f.stratum),
            x_max: d.aff_word_string(&f.x_max),
            min_rep: d.aff_word_string(&f.min_rep),
            dimension: f.dimension,
        }
    }

    pub fn all(d: &RootDatum, mu: &Coweight, k1: SphericalSubset, k2: SphericalSubset) -> Result<Vec<Self>> {
        Ok(d.fibers(mu, k1, k2)?.iter().map(|f| FiberJson::new(d, f)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub supp: Vec<usize>,
}

impl ClassJson {
    pub fn new(k: SphericalSubset, supp: FiniteSubset) -> Self {
        ClassJson {
            k: k.labels(),
            supp: supp.labels(),
        }
    }

    pub fn all(d: &RootDatum) -> Result<Vec<Self>> {
        Ok(d.classify()?.into_iter().map(|(k, s)| ClassJson::new(k, s)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmJson {
    pub mu: Vec<i64>,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none", default)]
    pub k: Option<Vec<usize>>,
    pub size: usize,
    pub elements: Vec<String>,
}

impl AdmJson {
    /// `Adm(mu)`, or its `W_K`-double-coset minimal representatives.
    pub fn new(d: &RootDatum, mu: &Coweight, k: Option<SphericalSubset>) -> Result<Self> {
        let elements: Vec<String> = match k {
            None => d.admissible_set(mu)?.iter().map(|x| d.aff_word_string(x)).collect(),
            Some(k) => d
                .admissible_k(mu, k)?
                .double_min
                .iter()
                .map(|x| d.aff_word_string(x))
                .collect(),
        };
        Ok(AdmJson {
            mu: mu.0.clone(),
            k: k.map(|k| k.labels()),
            size: elements.len(),
            elements,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QbgJson {
    pub vertices: usize,
    pub bruhat_edges: usize,
    pub quantum_edges: usize,
}

impl QbgJson {
    pub fn new(d: &RootDatum) -> Result<Self> {
        let g = d.qbg()?;
        Ok(QbgJson {
            vertices: g.num_vertices(),
            bruhat_edges: g.count(EdgeKind::Bruhat),
            quantum_edges: g.count(EdgeKind::Quantum),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZGammaJson {
    pub gamma: Vec<i64>,
    pub word: String,
    pub length: usize,
    /// Roots removed by the greedy decomposition, in simple-root coordinates.
    pub sequence: Vec<Vec<i64>>,
}

impl ZGammaJson {
    pub fn new(d: &RootDatum, gamma: &CorootVec, tie: TieBreak) -> Result<Self> {
        let seq = d.greedy_decomposition_with(gamma, tie)?;
        let z = d.z_gamma_with(gamma, tie)?;
        Ok(ZGammaJson {
            gamma: gamma.0.clone(),
            word: d.word_string(&z),
            length: d.length(&z),
            sequence: seq.iter().map(|&b| d.root(b).coords.clone()).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WtJson {
    pub x: String,
    pub y: String,
    pub weight: Vec<i64>,
    pub distance: usize,
}

impl WtJson {
    pub fn new(d: &RootDatum, x: &WeylElement, y: &WeylElement) -> Result<Self> {
        Ok(WtJson {
            x: d.word_string(x),
            y: d.word_string(y),
            weight: d.wt(x, y)?.0,
            distance: d.qbg_distance(x, y)?,
        })
    }
}
