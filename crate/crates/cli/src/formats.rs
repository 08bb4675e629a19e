//! JSON documents read and written by the CLI.

use gallery_core::complex::{ChamberGraph, Provenance};
use gallery_core::connectivity::{Certificate, PathFamily};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"rank": n, "m": [[...]]}`, with `0` for an infinite order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterJson {
    pub rank: usize,
    pub m: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dimension: usize,
    pub chambers: Vec<Vec<u32>>,
}

/// `[a, b]` or `[a, b, label]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeJson {
    Labelled(usize, usize, u32),
    Plain(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeJson>,
    pub complete: bool,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl GraphJson {
    pub fn from_graph(g: &ChamberGraph, seed: Option<u64>) -> Self {
        let edges = g
            .edges()
            .iter()
            .map(|e| match e.label {
                Some(l) => EdgeJson::Labelled(e.a, e.b, l),
                None => EdgeJson::Plain(e.a, e.b),
            })
            .collect();
        GraphJson {
            vertices: (0..g.vertex_count()).collect(),
            edges,
            complete: g.is_complete(),
            provenance: g.provenance().as_str().into(),
            names: g.names().to_vec(),
            seed,
        }
    }

    /// Vertices are renumbered by their position in `vertices`.
    pub fn to_graph(&self) -> Result<ChamberGraph, CliError> {
        let position = |id: usize| {
            self.vertices
                .iter()
                .position(|&v| v == id)
                .ok_or_else(|| CliError::Parse(format!("edge refers to unknown vertex {id}")))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let (a, b, label) = match *e {
                EdgeJson::Labelled(a, b, l) => (a, b, Some(l)),
                EdgeJson::Plain(a, b) => (a, b, None),
            };
            edges.push((position(a)?, position(b)?, label));
        }
        let provenance = Provenance::parse(&self.provenance)
            .ok_or_else(|| CliError::Parse(format!("unknown provenance {:?}", self.provenance)))?;
        let mut g = ChamberGraph::from_edges(self.vertices.len(), edges, provenance)?
            .with_complete_flag(self.complete);
        if !self.names.is_empty() {
            g = g.with_names(self.names.clone())?;
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamilyJson {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Vec<usize>>,
    pub provenance: String,
}

impl From<&PathFamily> for PathFamilyJson {
    fn from(f: &PathFamily) -> Self {
        PathFamilyJson {
            source: f.source,
            target: f.target,
            paths: f.paths.clone(),
            provenance: f.provenance.clone(),
        }
    }
}

impl PathFamilyJson {
    pub fn to_family(&self) -> PathFamily {
        PathFamily::new(self.source, self.target, self.paths.clone(), &self.provenance)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub accepted: bool,
    pub paths: usize,
    pub interior_vertices: usize,
}

impl From<Certificate> for CertificateJson {
    fn from(c: Certificate) -> Self {
        CertificateJson {
            accepted: true,
            paths: c.paths,
            interior_vertices: c.interior_vertices,
        }
    }
}

/// A family together with its certificate, as emitted by `paths`. Readers
/// of path families ignore the extra fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathsOutput {
    #[serde(flatten)]
    pub family: PathFamilyJson,
    pub names: Vec<Vec<String>>,
    pub certificate: CertificateJson,
    pub seed: u64,
}

/// `{"elements": N, "rank": [...], "covers": [[a, b], ...]}` with the
/// bottom at id 0 and the top at id `N - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub elements: usize,
    pub rank: Vec<usize>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

/// Column matroid of a matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatsJson {
    pub p: u32,
    pub matrix: Vec<Vec<u32>>,
}

/// `{"n": n, "p": p}`, optionally with every chamber as a list of basis
/// matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildingJson {
    pub n: usize,
    pub p: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Vec<Vec<Vec<u32>>>>,
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
