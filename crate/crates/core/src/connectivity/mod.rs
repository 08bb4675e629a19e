//! Ground-truth connectivity: Menger flows on the vertex-split digraph,
//! Liu's distance-two criterion, exact vertex connectivity and certificates
//! for families of internally disjoint paths.

mod flow;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::ChamberGraph;
use flow::SplitNetwork;

/// A set of paths between two vertices, as emitted by one of the
/// constructors or by the flow engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Vec<usize>>,
    pub provenance: String,
}

impl PathFamily {
    pub fn new(source: usize, target: usize, paths: Vec<Vec<usize>>, provenance: &str) -> Self {
        PathFamily {
            source,
            target,
            paths,
            provenance: provenance.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Edge counts of the paths, sorted.
    pub fn edge_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.paths.iter().map(|p| p.len().saturating_sub(1)).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub paths: usize,
    pub interior_vertices: usize,
}

/// First defect found in a path family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SameEndpoints,
    VertexOutOfRange { path: usize, vertex: usize },
    EmptyPath { path: usize },
    WrongEndpoints { path: usize },
    NotAnEdge { path: usize, from: usize, to: usize },
    RepeatedVertex { path: usize, vertex: usize },
    SharedInterior { first: usize, second: usize, vertex: usize },
    DuplicateDirectEdge { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SameEndpoints => write!(f, "source equals target"),
            Violation::VertexOutOfRange { path, vertex } => {
                write!(f, "path {path}: vertex {vertex} not in graph")
            }
            Violation::EmptyPath { path } => write!(f, "path {path} is empty"),
            Violation::WrongEndpoints { path } => {
                write!(f, "path {path} does not join source to target")
            }
            Violation::NotAnEdge { path, from, to } => {
                write!(f, "path {path}: {from} -> {to} is not an edge")
            }
            Violation::RepeatedVertex { path, vertex } => {
                write!(f, "path {path} visits vertex {vertex} twice")
            }
            Violation::SharedInterior {
                first,
                second,
                vertex,
            } => write!(f, "paths {first} and {second} share interior vertex {vertex}"),
            Violation::DuplicateDirectEdge { first, second } => {
                write!(f, "paths {first} and {second} are both the direct edge")
            }
        }
    }
}

/// Checks that `family` consists of genuine source-target paths of `graph`
/// whose interiors are pairwise disjoint.
pub fn verify_disjoint_family(
    graph: &ChamberGraph,
    family: &PathFamily,
) -> Result<Certificate, Violation> {
    let n = graph.vertex_count();
    let (s, t) = (family.source, family.target);
    if s == t {
        return Err(Violation::SameEndpoints);
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut direct: Option<usize> = None;
    let mut interior = 0;
    for (i, path) in family.paths.iter().enumerate() {
        if let Some(&vertex) = path.iter().find(|&&x| x >= n) {
            return Err(Violation::VertexOutOfRange { path: i, vertex });
        }
        if path.is_empty() {
            return Err(Violation::EmptyPath { path: i });
        }
        if path[0] != s || path[path.len() - 1] != t {
            return Err(Violation::WrongEndpoints { path: i });
        }
        for w in path.windows(2) {
            if !graph.has_edge(w[0], w[1]) {
                return Err(Violation::NotAnEdge {
                    path: i,
                    from: w[0],
                    to: w[1],
                });
            }
        }
        let inner = &path[1..path.len() - 1];
        if inner.is_empty() {
            if let Some(first) = direct {
                return Err(Violation::DuplicateDirectEdge { first, second: i });
            }
            direct = Some(i);
        }
        for &x in inner {
            if x == s || x == t {
                return Err(Violation::RepeatedVertex { path: i, vertex: x });
            }
            match owner[x] {
                Some(j) if j == i => return Err(Violation::RepeatedVertex { path: i, vertex: x }),
                Some(j) => {
                    return Err(Violation::SharedInterior {
                        first: j,
                        second: i,
                        vertex: x,
                    })
                }
                None => owner[x] = Some(i),
            }
            interior += 1;
        }
    }
    Ok(Certificate {
        paths: family.paths.len(),
        interior_vertices: interior,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectivityError {
    #[error("source and target coincide")]
    SameVertex,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph is a truncated ball; pass allow_incomplete to accept lower bounds")]
    IncompleteGraph,
    #[error("vertex {0} is too close to the boundary of the ball")]
    NotInterior(usize),
    #[error("graph has {vertices} vertices, needs more than {k}")]
    TooFewVertices { vertices: usize, k: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

/// Whether a reported value is exact for the ambient object or only a lower
/// bound (truncated balls of infinite groups).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact,
    LowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalOptions {
    pub allow_incomplete: bool,
    /// Required distance between the boundary of a ball and the vertices
    /// used, when `allow_incomplete` is set.
    pub margin: usize,
}

impl Default for LocalOptions {
    fn default() -> Self {
        LocalOptions {
            allow_incomplete: false,
            margin: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalConnectivity {
    pub count: usize,
    /// An extremal family read off the maximum flow.
    pub family: PathFamily,
    /// Minimum set of vertices separating the endpoints (together with the
    /// direct edge, when there is one).
    pub cut: Vec<usize>,
    pub direct_edge: bool,
    pub bound: Bound,
}

impl LocalConnectivity {
    pub fn cut_size(&self) -> usize {
        self.cut.len() + usize::from(self.direct_edge)
    }
}

fn check_pair(graph: &ChamberGraph, u: usize, v: usize) -> Result<(), ConnectivityError> {
    let n = graph.vertex_count();
    if u >= n {
        return Err(ConnectivityError::VertexOutOfRange(u));
    }
    if v >= n {
        return Err(ConnectivityError::VertexOutOfRange(v));
    }
    if u == v {
        return Err(ConnectivityError::SameVertex);
    }
    Ok(())
}

fn bound_for(
    graph: &ChamberGraph,
    opts: LocalOptions,
    vertices: &[usize],
) -> Result<Bound, ConnectivityError> {
    if graph.is_complete() {
        return Ok(Bound::Exact);
    }
    if !opts.allow_incomplete {
        return Err(ConnectivityError::IncompleteGraph);
    }
    let deep = graph.deep_interior(opts.margin);
    if let Some(&bad) = vertices.iter().find(|&&x| !deep[x]) {
        return Err(ConnectivityError::NotInterior(bad));
    }
    Ok(Bound::LowerBound)
}

/// Maximum number of internally disjoint `u`-`v` paths, with an extremal
/// family and a matching minimum cut.
pub fn local_connectivity(
    graph: &ChamberGraph,
    u: usize,
    v: usize,
) -> Result<LocalConnectivity, ConnectivityError> {
    local_connectivity_with(graph, u, v, LocalOptions::default())
}

pub fn local_connectivity_with(
    graph: &ChamberGraph,
    u: usize,
    v: usize,
    opts: LocalOptions,
) -> Result<LocalConnectivity, ConnectivityError> {
    check_pair(graph, u, v)?;
    let bound = bound_for(graph, opts, &[u, v])?;
    let mut net = SplitNetwork::new(graph, u, v);
    net.run(usize::MAX);
    let result = net.finish(u, v);
    Ok(LocalConnectivity {
        count: result.value,
        family: PathFamily::new(u, v, result.paths, "max-flow"),
        cut: result.cut,
        direct_edge: result.direct_edge,
        bound,
    })
}

/// Flow value between `u` and `v`, stopping early once `cap` is reached.
/// No completeness checks; the caller owns the semantics.
pub fn local_connectivity_count(graph: &ChamberGraph, u: usize, v: usize, cap: usize) -> usize {
    let mut net = SplitNetwork::new(graph, u, v);
    net.run(cap)
}

/// All unordered pairs at distance exactly two, sorted.
pub fn distance_two_pairs(graph: &ChamberGraph) -> Vec<(usize, usize)> {
    let n = graph.vertex_count();
    let mut stamp = vec![usize::MAX; n];
    let mut pairs = Vec::new();
    for u in 0..n {
        stamp[u] = u;
        for &w in graph.neighbors(u) {
            stamp[w] = u;
        }
        let mut found = Vec::new();
        for &w in graph.neighbors(u) {
            for &x in graph.neighbors(w) {
                if x > u && stamp[x] != u {
                    stamp[x] = u;
                    found.push(x);
                }
            }
        }
        found.sort_unstable();
        pairs.extend(found.into_iter().map(|x| (u, x)));
    }
    pairs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Liu,
    Exact,
    Local,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Liu => "liu",
            Method::Exact => "exact",
            Method::Local => "local",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailingPair {
    pub u: usize,
    pub v: usize,
    pub paths: usize,
}

/// Outcome of a connectivity computation.
///
/// `lower..=upper` brackets the vertex connectivity; `passed` is set for
/// threshold checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub method: Method,
    pub lower: usize,
    pub upper: usize,
    pub bound: Bound,
    pub threshold: Option<usize>,
    pub passed: Option<bool>,
    pub separating_set: Option<Vec<usize>>,
    pub failing_pair: Option<FailingPair>,
    pub pairs_checked: usize,
}

impl ConnectivityReport {
    /// The exact connectivity when the bracket is tight.
    pub fn kappa(&self) -> Option<usize> {
        (self.lower == self.upper && self.bound == Bound::Exact).then_some(self.lower)
    }
}

/// Validates the preconditions of Liu's criterion and returns the
/// distance-two pairs it has to inspect.
pub fn liu_pairs(
    graph: &ChamberGraph,
    k: usize,
    opts: LocalOptions,
) -> Result<(Vec<(usize, usize)>, Bound), ConnectivityError> {
    let n = graph.vertex_count();
    if n <= k {
        return Err(ConnectivityError::TooFewVertices { vertices: n, k });
    }
    if !graph.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    let mut pairs = distance_two_pairs(graph);
    let bound = if graph.is_complete() {
        Bound::Exact
    } else if opts.allow_incomplete {
        let deep = graph.deep_interior(opts.margin);
        pairs.retain(|&(u, v)| deep[u] && deep[v]);
        Bound::LowerBound
    } else {
        return Err(ConnectivityError::IncompleteGraph);
    };
    Ok((pairs, bound))
}

/// Assembles a Liu report from per-pair flow values computed elsewhere
/// (`counts[i]` belongs to `pairs[i]`, capped at `k`).
pub fn liu_report(
    graph: &ChamberGraph,
    k: usize,
    bound: Bound,
    pairs: &[(usize, usize)],
    counts: &[usize],
) -> ConnectivityReport {
    let failure = pairs
        .iter()
        .zip(counts)
        .position(|(_, &c)| c < k);
    let min_degree = graph.min_degree();
    match failure {
        None => ConnectivityReport {
            method: Method::Liu,
            lower: k,
            upper: min_degree.max(k),
            bound,
            threshold: Some(k),
            passed: Some(true),
            separating_set: None,
            failing_pair: None,
            pairs_checked: pairs.len(),
        },
        Some(i) => {
            let (u, v) = pairs[i];
            let paths = counts[i];
            ConnectivityReport {
                method: Method::Liu,
                lower: usize::from(graph.vertex_count() > 1),
                upper: paths,
                bound,
                threshold: Some(k),
                passed: Some(false),
                separating_set: None,
                failing_pair: Some(FailingPair { u, v, paths }),
                pairs_checked: i + 1,
            }
        }
    }
}

/// Liu's criterion: a connected graph with more than `k` vertices is
/// `k`-connected as soon as every distance-two pair is joined by `k`
/// internally disjoint paths.
pub fn liu_check(graph: &ChamberGraph, k: usize) -> Result<ConnectivityReport, ConnectivityError> {
    liu_check_with(graph, k, LocalOptions::default())
}

pub fn liu_check_with(
    graph: &ChamberGraph,
    k: usize,
    opts: LocalOptions,
) -> Result<ConnectivityReport, ConnectivityError> {
    let (pairs, bound) = liu_pairs(graph, k, opts)?;
    let mut counts = Vec::with_capacity(pairs.len());
    for &(u, v) in &pairs {
        let c = local_connectivity_count(graph, u, v, k);
        counts.push(c);
        if c < k {
            break;
        }
    }
    Ok(liu_report(graph, k, bound, &pairs[..counts.len()], &counts))
}

/// Exact vertex connectivity with a minimum separating set.
///
/// Fix a vertex `x` of minimum degree. Every minimum separator either misses
/// `x`, and then splits it from some non-neighbour, or contains it, and then
/// splits two non-adjacent neighbours of `x`.
pub fn vertex_connectivity(graph: &ChamberGraph) -> Result<ConnectivityReport, ConnectivityError> {
    let n = graph.vertex_count();
    if n < 2 {
        return Err(ConnectivityError::TooFewVertices { vertices: n, k: 1 });
    }
    if !graph.is_complete() {
        return Err(ConnectivityError::IncompleteGraph);
    }
    let exact = |kappa: usize, cut: Option<Vec<usize>>, pairs: usize| ConnectivityReport {
        method: Method::Exact,
        lower: kappa,
        upper: kappa,
        bound: Bound::Exact,
        threshold: None,
        passed: None,
        separating_set: cut,
        failing_pair: None,
        pairs_checked: pairs,
    };
    if !graph.is_connected() {
        return Ok(exact(0, Some(Vec::new()), 0));
    }
    if graph.edge_count() == n * (n - 1) / 2 {
        return Ok(exact(n - 1, None, 0));
    }

    let x = (0..n).min_by_key(|&v| graph.degree(v)).unwrap();
    let mut candidates = Vec::new();
    let mut is_nb = vec![false; n];
    for &w in graph.neighbors(x) {
        is_nb[w] = true;
    }
    for w in 0..n {
        if w != x && !is_nb[w] {
            candidates.push((x, w));
        }
    }
    let nbs = graph.neighbors(x);
    for (i, &a) in nbs.iter().enumerate() {
        for &b in &nbs[i + 1..] {
            if !graph.has_edge(a, b) {
                candidates.push((a, b));
            }
        }
    }

    let mut best = n - 1;
    let mut best_pair = None;
    for &(a, b) in &candidates {
        let c = local_connectivity_count(graph, a, b, best);
        if c < best {
            best = c;
            best_pair = Some((a, b));
        }
    }
    let (a, b) = best_pair.expect("a non-complete graph has a non-adjacent pair");
    let local = local_connectivity(graph, a, b).expect("valid pair");
    debug_assert_eq!(local.count, best);
    assert!(
        !graph.is_connected_without(&local.cut),
        "minimum cut must separate the graph"
    );
    Ok(exact(best, Some(local.cut), candidates.len()))
}
