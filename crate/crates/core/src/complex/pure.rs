use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{ChamberGraph, Provenance};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("facet {index} has {size} distinct vertices, expected {expected}")]
    NotPure {
        index: usize,
        size: usize,
        expected: usize,
    },
    #[error("complex has no proper {colors}-colouring of its vertices")]
    NotBalanced { colors: usize },
    #[error("labeling does not colour chamber {0} with distinct colours")]
    InvalidLabeling(usize),
}

/// A pure simplicial complex given by its facets.
///
/// Chambers are stored as sorted vertex tuples in lexicographic order; the
/// position in that order is the chamber id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureComplex {
    dimension: usize,
    chambers: Vec<Vec<u32>>,
}

impl PureComplex {
    pub fn new(dimension: usize, facets: Vec<Vec<u32>>) -> Result<Self, ComplexError> {
        let expected = dimension + 1;
        let mut chambers = BTreeSet::new();
        for (index, mut facet) in facets.into_iter().enumerate() {
            facet.sort_unstable();
            facet.dedup();
            if facet.len() != expected {
                return Err(ComplexError::NotPure {
                    index,
                    size: facet.len(),
                    expected,
                });
            }
            chambers.insert(facet);
        }
        Ok(PureComplex {
            dimension,
            chambers: chambers.into_iter().collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn chambers(&self) -> &[Vec<u32>] {
        &self.chambers
    }

    pub fn vertices(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.chambers.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    fn walls(&self) -> BTreeMap<Vec<u32>, Vec<usize>> {
        let mut walls: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (id, chamber) in self.chambers.iter().enumerate() {
            for skip in 0..chamber.len() {
                let wall: Vec<u32> = chamber
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                walls.entry(wall).or_default().push(id);
            }
        }
        walls
    }
}

/// A colouring of the vertices with colours `1..=d+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeLabeling {
    colors: BTreeMap<u32, u32>,
}

impl TypeLabeling {
    pub fn new(colors: BTreeMap<u32, u32>) -> Self {
        TypeLabeling { colors }
    }

    pub fn color(&self, vertex: u32) -> Option<u32> {
        self.colors.get(&vertex).copied()
    }

    pub fn colors(&self) -> &BTreeMap<u32, u32> {
        &self.colors
    }

    /// Checks that every chamber of `complex` receives distinct colours in
    /// `1..=d+1`.
    pub fn validate(&self, complex: &PureComplex) -> Result<(), ComplexError> {
        let top = complex.dimension as u32 + 1;
        for (id, chamber) in complex.chambers.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for v in chamber {
                match self.color(*v) {
                    Some(c) if (1..=top).contains(&c) && seen.insert(c) => {}
                    _ => return Err(ComplexError::InvalidLabeling(id)),
                }
            }
        }
        Ok(())
    }
}

/// Dual graph of a pure complex: chambers are adjacent when they share a wall.
///
/// With a labeling, each edge carries the colour missing from the shared wall.
pub fn chamber_graph_from_complex(
    complex: &PureComplex,
    labeling: Option<&TypeLabeling>,
) -> Result<ChamberGraph, ComplexError> {
    if let Some(l) = labeling {
        l.validate(complex)?;
    }
    let mut edges = Vec::new();
    for (wall, incident) in complex.walls() {
        for (i, &c) in incident.iter().enumerate() {
            for &d in &incident[i + 1..] {
                let label = labeling.map(|l| {
                    let apex = complex.chambers[c]
                        .iter()
                        .find(|v| wall.binary_search(v).is_err())
                        .expect("chamber has one vertex off the wall");
                    l.color(*apex).expect("validated labeling")
                });
                edges.push((c, d, label));
            }
        }
    }
    let names = complex
        .chambers
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().map(|v| format!("{v}")).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let graph = ChamberGraph::from_edges(complex.chambers.len(), edges, Provenance::Generic)
        .expect("distinct chambers share at most one wall")
        .with_names(names)
        .expect("one name per chamber");
    Ok(graph)
}

/// Finds a proper `(d+1)`-colouring of the vertices such that every chamber
/// is rainbow. Vertices are visited breadth-first from the least id and
/// colours are tried in increasing order, so the result is deterministic.
pub fn balanced_type_labeling(complex: &PureComplex) -> Result<TypeLabeling, ComplexError> {
    let colors = complex.dimension + 1;
    let vertices = complex.vertices();
    let index: BTreeMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut neighbours: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertices.len()];
    for chamber in &complex.chambers {
        for &a in chamber {
            for &b in chamber {
                if a != b {
                    neighbours[index[&a]].insert(index[&b]);
                }
            }
        }
    }

    let mut order = Vec::with_capacity(vertices.len());
    let mut seen = vec![false; vertices.len()];
    for start in 0..vertices.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &neighbours[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut assigned = vec![0u32; vertices.len()];
    if !color_from(0, &order, &neighbours, colors as u32, &mut assigned) {
        return Err(ComplexError::NotBalanced { colors });
    }
    let map = vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, assigned[i]))
        .collect();
    Ok(TypeLabeling::new(map))
}

fn color_from(
    pos: usize,
    order: &[usize],
    neighbours: &[BTreeSet<usize>],
    colors: u32,
    assigned: &mut [u32],
) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    for c in 1..=colors {
        if neighbours[v].iter().all(|&w| assigned[w] != c) {
            assigned[v] = c;
            if color_from(pos + 1, order, neighbours, colors, assigned) {
                return true;
            }
        }
    }
    assigned[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex_boundary() -> PureComplex {
        PureComplex::new(2, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap()
    }

    // Antipodal pairs (0,1), (2,3), (4,5).
    fn octahedron() -> PureComplex {
        let mut facets = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        PureComplex::new(2, facets).unwrap()
    }

    #[test]
    fn simplex_boundary_is_k4() {
        let g = chamber_graph_from_complex(&simplex_boundary(), None).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn octahedron_is_cube_graph() {
        let g = chamber_graph_from_complex(&octahedron(), None).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_bipartite());
    }

    #[test]
    fn impure_input_rejected() {
        let err = PureComplex::new(2, vec![vec![0, 1, 2], vec![3, 4]]).unwrap_err();
        assert_eq!(
            err,
            ComplexError::NotPure {
                index: 1,
                size: 2,
                expected: 3
            }
        );
        let err = PureComplex::new(1, vec![vec![5, 5]]).unwrap_err();
        assert!(matches!(err, ComplexError::NotPure { size: 1, .. }));
    }

    #[test]
    fn simplex_boundary_not_balanced() {
        assert_eq!(
            balanced_type_labeling(&simplex_boundary()),
            Err(ComplexError::NotBalanced { colors: 3 })
        );
    }

    #[test]
    fn octahedron_colours_antipodes_alike() {
        let labeling = balanced_type_labeling(&octahedron()).unwrap();
        for (a, b) in [(0, 1), (2, 3), (4, 5)] {
            assert_eq!(labeling.color(a), labeling.color(b));
        }
        let distinct: BTreeSet<u32> = labeling.colors().values().copied().collect();
        assert_eq!(distinct.len(), 3);
        let g = chamber_graph_from_complex(&octahedron(), Some(&labeling)).unwrap();
        // every chamber has exactly one neighbour per colour
        for v in 0..g.vertex_count() {
            let labels: BTreeSet<u32> =
                g.neighbors(v).iter().map(|&w| g.label(v, w).unwrap()).collect();
            assert_eq!(labels.len(), 3);
        }
    }

    #[test]
    fn edge_label_is_missing_wall_colour() {
        // two triangles glued along {1,2}; apex colours differ from the wall
        let k = PureComplex::new(2, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let l = balanced_type_labeling(&k).unwrap();
        let g = chamber_graph_from_complex(&k, Some(&l)).unwrap();
        assert_eq!(g.label(0, 1), l.color(0));
        assert_eq!(l.color(0), l.color(3));
    }

    #[test]
    fn invalid_labeling_rejected() {
        let k = PureComplex::new(1, vec![vec![0, 1]]).unwrap();
        let l = TypeLabeling::new([(0, 1), (1, 1)].into_iter().collect());
        assert_eq!(
            chamber_graph_from_complex(&k, Some(&l)),
            Err(ComplexError::InvalidLabeling(0))
        );
    }
}
