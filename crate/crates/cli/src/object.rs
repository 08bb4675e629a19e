//! Object flags on the command line and the objects they build.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use gallery_core::building::{flag_building, FlagBuilding};
use gallery_core::complex::{chamber_graph_from_complex, ChamberGraph, PureComplex};
use gallery_core::coxeter::{cayley_ball, CayleyBall, CoxeterMatrix, ReducedWord};
use gallery_core::lattice::{
    boolean_lattice, flats_lattice, lattice_chamber_graph, partition_lattice, subspace_lattice, FinitePoset,
    GeometricLattice, LatticeChambers,
};
use gallery_core::Limits;
use serde::de::DeserializeOwned;

use crate::error::CliError;
use crate::formats::{BuildingJson, ComplexJson, CoxeterJson, FlatsJson, GraphJson, LatticeJson};

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ObjectChoice {
    /// Coxeter matrix as JSON: {"rank": n, "m": [[...]]}, 0 for infinity
    #[arg(long, value_name = "FILE")]
    pub coxeter: Option<PathBuf>,
    /// Type-A building of F_p^n, written n,p
    #[arg(long, value_name = "N,P")]
    pub building: Option<String>,
    /// boolean:N, partition:N, subspace:N,P, flats:FILE or file:FILE
    #[arg(long, value_name = "KIND:ARGS")]
    pub lattice: Option<String>,
    /// Pure complex as JSON: {"dimension": d, "chambers": [[...]]}
    #[arg(long, value_name = "FILE")]
    pub complex: Option<PathBuf>,
    /// Chamber graph as JSON
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BallArgs {
    /// Radius of the Cayley ball; the whole group when omitted
    #[arg(long)]
    pub radius: Option<usize>,
}

pub enum Object {
    Coxeter { system: CoxeterMatrix, ball: CayleyBall },
    Building(FlagBuilding),
    Lattice { lattice: GeometricLattice, chambers: LatticeChambers },
    Graph(ChamberGraph),
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn numbers(text: &str, expected: usize, what: &str) -> Result<Vec<usize>, CliError> {
    let parts: Result<Vec<usize>, _> = text.split(',').map(|s| s.trim().parse()).collect();
    match parts {
        Ok(v) if v.len() == expected => Ok(v),
        _ => Err(CliError::Parse(format!("expected {expected} comma-separated integers for {what}, got {text:?}"))),
    }
}

pub fn coxeter_from_json(doc: &CoxeterJson) -> Result<CoxeterMatrix, CliError> {
    if doc.m.len() != doc.rank {
        return Err(CliError::Parse(format!("rank {} but {} matrix rows", doc.rank, doc.m.len())));
    }
    Ok(CoxeterMatrix::from_rows(&doc.m)?)
}

/// Finite Coxeter groups are exactly those whose cosine form
/// `B(s,t) = -cos(pi / m(s,t))` is positive definite; checked by Cholesky.
pub fn is_finite_group(system: &CoxeterMatrix) -> bool {
    let n = system.rank();
    let form = |i: usize, j: usize| match system.order(i, j) {
        Some(m) => -(std::f64::consts::PI / m as f64).cos(),
        None => -1.0,
    };
    let mut l = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let dot: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let pivot = form(i, i) - dot;
                if pivot <= 1e-9 {
                    return false;
                }
                l[i][i] = pivot.sqrt();
            } else {
                l[i][j] = (form(i, j) - dot) / l[j][j];
            }
        }
    }
    true
}

pub fn lattice_from_json(doc: &LatticeJson, limits: &Limits) -> Result<GeometricLattice, CliError> {
    let covers: Vec<(usize, usize)> = doc.covers.iter().map(|&[a, b]| (a, b)).collect();
    let mut poset = FinitePoset::from_covers(doc.elements, &covers)?;
    if !doc.labels.is_empty() {
        poset = poset.with_labels(doc.labels.clone())?;
    }
    let lattice = GeometricLattice::new(poset, limits)?;
    if lattice.bottom() != 0 || lattice.top() + 1 != doc.elements {
        return Err(CliError::Parse("bottom must have id 0 and top id N-1".into()));
    }
    if lattice.ranks() != doc.rank.as_slice() {
        return Err(CliError::Parse("rank list does not match the cover relations".into()));
    }
    Ok(lattice)
}

pub fn lattice_to_json(lattice: &GeometricLattice) -> LatticeJson {
    LatticeJson {
        elements: lattice.len(),
        rank: lattice.ranks().to_vec(),
        covers: lattice.poset().covers().into_iter().map(|(a, b)| [a, b]).collect(),
        labels: (0..lattice.len()).map(|x| lattice.label(x).to_string()).collect(),
    }
}

fn lattice_from_text(text: &str, limits: &Limits) -> Result<GeometricLattice, CliError> {
    let (kind, arg) = text
        .split_once(':')
        .ok_or_else(|| CliError::Parse(format!("lattice {text:?} has no ':'")))?;
    let lattice = match kind {
        "boolean" => boolean_lattice(numbers(arg, 1, "boolean")?[0], limits)?,
        "partition" => partition_lattice(numbers(arg, 1, "partition")?[0], limits)?,
        "subspace" => {
            let v = numbers(arg, 2, "subspace")?;
            subspace_lattice(v[0], v[1] as u32, limits)?
        }
        "flats" => {
            let doc: FlatsJson = read_json(Path::new(arg))?;
            flats_lattice(&doc.matrix, doc.p, limits)?
        }
        "file" => lattice_from_json(&read_json(Path::new(arg))?, limits)?,
        _ => return Err(CliError::Parse(format!("unknown lattice kind {kind:?}"))),
    };
    Ok(lattice)
}

impl Object {
    pub fn load(choice: &ObjectChoice, ball: &BallArgs, limits: &Limits) -> Result<Object, CliError> {
        if let Some(path) = &choice.coxeter {
            let system = coxeter_from_json(&read_json(path)?)?;
            let radius = match ball.radius {
                Some(r) => r,
                None if is_finite_group(&system) => usize::MAX,
                None => return Err(CliError::Other("the group is infinite; pass --radius".into())),
            };
            let ball = cayley_ball(&system, radius, limits.max_vertices)?;
            return Ok(Object::Coxeter { system, ball });
        }
        if let Some(text) = &choice.building {
            let v = numbers(text, 2, "--building")?;
            return Ok(Object::Building(flag_building(v[0], v[1] as u32, limits)?));
        }
        if let Some(text) = &choice.lattice {
            let lattice = lattice_from_text(text, limits)?;
            let chambers = lattice_chamber_graph(&lattice, limits)?;
            return Ok(Object::Lattice { lattice, chambers });
        }
        if let Some(path) = &choice.complex {
            let doc: ComplexJson = read_json(path)?;
            let complex = PureComplex::new(doc.dimension, doc.chambers)?;
            if complex.chambers().len() > limits.max_chambers {
                return Err(CliError::Cap(format!(
                    "complex has {} chambers, cap {}",
                    complex.chambers().len(),
                    limits.max_chambers
                )));
            }
            return Ok(Object::Graph(chamber_graph_from_complex(&complex, None)?));
        }
        if let Some(path) = &choice.graph {
            let doc: GraphJson = read_json(path)?;
            if doc.vertices.len() > limits.max_vertices {
                return Err(CliError::Cap(format!(
                    "graph has {} vertices, cap {}",
                    doc.vertices.len(),
                    limits.max_vertices
                )));
            }
            return Ok(Object::Graph(doc.to_graph()?));
        }
        unreachable!("clap requires one object flag")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::Coxeter { .. } => "coxeter",
            Object::Building(_) => "building",
            Object::Lattice { .. } => "lattice",
            Object::Graph(_) => "graph",
        }
    }

    pub fn graph(&self) -> &ChamberGraph {
        match self {
            Object::Coxeter { ball, .. } => &ball.graph,
            Object::Building(b) => b.graph(),
            Object::Lattice { chambers, .. } => &chambers.graph,
            Object::Graph(g) => g,
        }
    }

    /// Display name of a vertex: its stored name, or its id.
    pub fn vertex_name(&self, v: usize) -> String {
        self.graph().name(v).map_or_else(|| v.to_string(), str::to_string)
    }

    /// Resolves a vertex given as an id, a stored name, a Coxeter word or
    /// (for buildings) a JSON list of basis matrices.
    pub fn resolve_vertex(&self, text: &str) -> Result<usize, CliError> {
        let g = self.graph();
        let text = text.trim();
        if let Ok(id) = text.parse::<usize>() {
            return if id < g.vertex_count() {
                Ok(id)
            } else {
                Err(CliError::Other(format!("vertex {id} out of range")))
            };
        }
        if let Some(v) = g.names().iter().position(|n| n == text) {
            return Ok(v);
        }
        match self {
            Object::Coxeter { system, ball } => {
                let word: ReducedWord = system.normalize(&ReducedWord::parse_letters(text)?)?;
                ball.id(&word)
                    .ok_or_else(|| CliError::Other(format!("{word} lies outside the ball")))
            }
            Object::Building(b) if text.starts_with('[') => {
                let levels: Vec<Vec<Vec<u32>>> = serde_json::from_str(text)?;
                Ok(b.chamber_of_matrices(&levels)?)
            }
            _ => Err(CliError::Other(format!("no vertex named {text:?}"))),
        }
    }

    /// The object itself as a JSON document.
    pub fn descriptor(&self) -> serde_json::Value {
        match self {
            Object::Coxeter { system, .. } => serde_json::to_value(CoxeterJson {
                rank: system.rank(),
                m: system.rows(),
            }),
            Object::Building(b) => serde_json::to_value(BuildingJson {
                n: b.dimension(),
                p: b.field().order(),
                flags: (0..b.chamber_count()).map(|c| b.flag_matrices(c)).collect(),
            }),
            Object::Lattice { lattice, .. } => serde_json::to_value(lattice_to_json(lattice)),
            Object::Graph(g) => serde_json::to_value(GraphJson::from_graph(g, None)),
        }
        .expect("documents serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finiteness_by_cosine_form() {
        assert!(is_finite_group(&CoxeterMatrix::type_a(4)));
        assert!(is_finite_group(&CoxeterMatrix::type_b(4)));
        assert!(is_finite_group(&CoxeterMatrix::dihedral(Some(7))));
        assert!(!is_finite_group(&CoxeterMatrix::dihedral(None)));
        assert!(!is_finite_group(&CoxeterMatrix::affine_a(2)));
        // the (2,3,7) triangle group is hyperbolic
        let tri = CoxeterMatrix::from_rows(&[vec![1, 2, 3], vec![2, 1, 7], vec![3, 7, 1]]).unwrap();
        assert!(!is_finite_group(&tri));
    }

    #[test]
    fn lattice_text_parsing() {
        let limits = Limits::default();
        assert_eq!(lattice_from_text("boolean:3", &limits).unwrap().len(), 8);
        assert!(matches!(lattice_from_text("boolean", &limits), Err(CliError::Parse(_))));
        assert!(matches!(lattice_from_text("cube:3", &limits), Err(CliError::Parse(_))));
        assert!(matches!(numbers("3,x", 2, "t"), Err(CliError::Parse(_))));
    }

    #[test]
    fn lattice_document_round_trip() {
        let limits = Limits::default();
        let l = subspace_lattice(3, 2, &limits).unwrap();
        let doc = lattice_to_json(&l);
        assert_eq!(doc.rank.first(), Some(&0));
        let back = lattice_from_json(&doc, &limits).unwrap();
        assert_eq!(lattice_to_json(&back), doc);
    }
}
