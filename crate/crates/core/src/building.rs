//! Type-A buildings realised as complete flags of `F_p^n`.
//!
//! Chambers are identified by ids `0..N`, assigned in lexicographic order of
//! their subspace ids, which in turn follow (dimension, RREF basis). Wall
//! types are `1..n`, the type `s` wall of a flag being the flag with `X_s`
//! removed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{ChamberGraph, Provenance};
use crate::connectivity::{verify_disjoint_family, PathFamily, Violation};
use crate::coxeter::{dihedral_path, CoxeterMatrix};
use crate::field::{gaussian_binomial, subspaces_of_dim, FieldError, PrimeField, Subspace};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildingError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("ambient dimension must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("{what} count {count} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        count: u128,
        cap: usize,
    },
    #[error("chamber {0} out of range")]
    ChamberOutOfRange(usize),
    #[error("wall type {0} out of range")]
    TypeOutOfRange(usize),
    #[error("chamber {chamber} is not a type {s} neighbour of {base}")]
    InvalidAdjacency { base: usize, chamber: usize, s: usize },
    #[error("chambers are at distance {0:?}, expected 2")]
    NotDistanceTwo(Option<usize>),
    #[error("wall type {s} has {first} and {second} neighbours at different chambers")]
    NonUniform { s: usize, first: usize, second: usize },
    #[error("not a complete flag: {0}")]
    InvalidFlag(&'static str),
    #[error("constructed paths overlap: {0}")]
    Overlap(Violation),
}

/// A complete flag `X_1 < ... < X_{n-1}`, as ids into the building's
/// subspace arena.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag(Vec<usize>);

impl Flag {
    pub fn levels(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct FlagBuilding {
    n: usize,
    field: PrimeField,
    subspaces: Vec<Subspace>,
    subspace_index: BTreeMap<Subspace, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    chambers: Vec<Flag>,
    chamber_index: BTreeMap<Flag, usize>,
    graph: ChamberGraph,
}

/// Number of complete flags of `F_p^n`.
pub fn flag_count(n: usize, p: u64) -> u128 {
    (1..=n).map(|k| gaussian_binomial(k, 1, p)).product()
}

pub fn flag_building(n: usize, p: u32, limits: &Limits) -> Result<FlagBuilding, BuildingError> {
    let field = PrimeField::new(p)?;
    if n < 2 {
        return Err(BuildingError::RankTooSmall(n));
    }
    let chambers = flag_count(n, p as u64);
    if chambers > limits.max_chambers as u128 {
        return Err(BuildingError::TooLarge {
            what: "chamber",
            count: chambers,
            cap: limits.max_chambers,
        });
    }
    let subspace_total: u128 = (0..=n).map(|k| gaussian_binomial(n, k, p as u64)).sum();
    if subspace_total > limits.max_elements as u128 {
        return Err(BuildingError::TooLarge {
            what: "subspace",
            count: subspace_total,
            cap: limits.max_elements,
        });
    }

    let mut subspaces = Vec::new();
    let mut dim_start = Vec::new();
    for k in 0..=n {
        dim_start.push(subspaces.len());
        subspaces.extend(subspaces_of_dim(field, n, k));
    }
    dim_start.push(subspaces.len());
    let subspace_index: BTreeMap<Subspace, usize> =
        subspaces.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();

    let mut up = vec![Vec::new(); subspaces.len()];
    let mut down = vec![Vec::new(); subspaces.len()];
    for k in 0..n {
        for a in dim_start[k]..dim_start[k + 1] {
            for b in dim_start[k + 1]..dim_start[k + 2] {
                if subspaces[b].contains(field, &subspaces[a]) {
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
    }

    let mut flags = Vec::new();
    let mut chain = Vec::new();
    extend_chain(&up, 0, n - 1, &mut chain, &mut flags);
    let chamber_index: BTreeMap<Flag, usize> =
        flags.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();

    let mut building = FlagBuilding {
        n,
        field,
        subspaces,
        subspace_index,
        up,
        down,
        chambers: flags,
        chamber_index,
        graph: ChamberGraph::from_edges(0, [], Provenance::Building).expect("empty graph"),
    };
    let mut edges = Vec::new();
    for c in 0..building.chambers.len() {
        for s in 1..n {
            for d in building.panel(c, s) {
                if c < d {
                    edges.push((c, d, Some(s as u32)));
                }
            }
        }
    }
    building.graph = ChamberGraph::from_edges(building.chambers.len(), edges, Provenance::Building)
        .expect("panels give simple edges");
    Ok(building)
}

fn extend_chain(
    up: &[Vec<usize>],
    from: usize,
    remaining: usize,
    chain: &mut Vec<usize>,
    out: &mut Vec<Flag>,
) {
    if remaining == 0 {
        out.push(Flag(chain.clone()));
        return;
    }
    for &next in &up[from] {
        chain.push(next);
        extend_chain(up, next, remaining - 1, chain, out);
        chain.pop();
    }
}

impl FlagBuilding {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn chamber_count(&self) -> usize {
        self.chambers.len()
    }

    pub fn graph(&self) -> &ChamberGraph {
        &self.graph
    }

    pub fn types(&self) -> core::ops::Range<usize> {
        1..self.n
    }

    pub fn flag(&self, c: usize) -> &Flag {
        &self.chambers[c]
    }

    pub fn subspace(&self, id: usize) -> &Subspace {
        &self.subspaces[id]
    }

    /// Basis matrices of `X_1, ..., X_{n-1}`.
    pub fn flag_matrices(&self, c: usize) -> Vec<Vec<Vec<u32>>> {
        self.chambers[c]
            .0
            .iter()
            .map(|&id| self.subspaces[id].rows().to_vec())
            .collect()
    }

    /// Chamber id of the flag spanned by the given bases.
    pub fn chamber_of_matrices(&self, levels: &[Vec<Vec<u32>>]) -> Result<usize, BuildingError> {
        if levels.len() != self.n - 1 {
            return Err(BuildingError::InvalidFlag("wrong number of subspaces"));
        }
        let mut ids = Vec::new();
        for (k, basis) in levels.iter().enumerate() {
            let s = Subspace::span(self.field, self.n, basis)?;
            if s.dim() != k + 1 {
                return Err(BuildingError::InvalidFlag("subspace of the wrong dimension"));
            }
            ids.push(self.subspace_index[&s]);
        }
        self.chamber_index
            .get(&Flag(ids))
            .copied()
            .ok_or(BuildingError::InvalidFlag("subspaces are not nested"))
    }

    fn check_chamber(&self, c: usize) -> Result<(), BuildingError> {
        if c < self.chambers.len() {
            Ok(())
        } else {
            Err(BuildingError::ChamberOutOfRange(c))
        }
    }

    fn check_type(&self, s: usize) -> Result<(), BuildingError> {
        if (1..self.n).contains(&s) {
            Ok(())
        } else {
            Err(BuildingError::TypeOutOfRange(s))
        }
    }

    /// Subspace id at level `k` of chamber `c`, with the zero space at level
    /// 0 and the whole space at level `n`.
    fn level(&self, c: usize, k: usize) -> usize {
        match k {
            0 => 0,
            k if k == self.n => self.subspaces.len() - 1,
            k => self.chambers[c].0[k - 1],
        }
    }

    /// All chambers sharing the type `s` wall of `c`, including `c`.
    fn panel(&self, c: usize, s: usize) -> Vec<usize> {
        let below = self.level(c, s - 1);
        let above = self.level(c, s + 1);
        let mut out = Vec::new();
        for &z in &self.up[below] {
            if self.down[above].binary_search(&z).is_ok() {
                let mut f = self.chambers[c].clone();
                f.0[s - 1] = z;
                out.push(self.chamber_index[&f]);
            }
        }
        out.sort_unstable();
        out
    }

    /// `N(c, s)`: the chambers other than `c` on its type `s` wall, sorted.
    pub fn neighbors_of_type(&self, c: usize, s: usize) -> Result<Vec<usize>, BuildingError> {
        self.check_chamber(c)?;
        self.check_type(s)?;
        Ok(self.panel(c, s).into_iter().filter(|&d| d != c).collect())
    }

    fn chamber_of_lines(&self, frame: &[Vec<u32>], order: &[usize]) -> usize {
        let mut ids = Vec::with_capacity(self.n - 1);
        let mut span = Vec::new();
        for &line in &order[..self.n - 1] {
            span.push(frame[line].clone());
            let s = Subspace::span(self.field, self.n, &span).expect("frame vectors have length n");
            ids.push(self.subspace_index[&s]);
        }
        self.chamber_index[&Flag(ids)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildingParameters {
    /// `q[s - 1]` is `q_s`.
    pub q: Vec<usize>,
    pub total: usize,
}

pub fn building_parameters(building: &FlagBuilding) -> Result<BuildingParameters, BuildingError> {
    let mut q = Vec::new();
    for s in building.types() {
        let first = building.neighbors_of_type(0, s)?.len();
        for c in 1..building.chamber_count() {
            let here = building.neighbors_of_type(c, s)?.len();
            if here != first {
                return Err(BuildingError::NonUniform {
                    s,
                    first,
                    second: here,
                });
            }
        }
        q.push(first);
    }
    let total = q.iter().sum();
    Ok(BuildingParameters { q, total })
}

/// The `n!` chambers spanned by orderings of a frame of lines. The frame is
/// stored so that the identity ordering gives the base chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Apartment {
    frame: Vec<Vec<u32>>,
    chambers: BTreeMap<Vec<usize>, usize>,
    members: BTreeSet<usize>,
    base: usize,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).expect("exists");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

impl Apartment {
    fn from_frame(building: &FlagBuilding, frame: Vec<Vec<u32>>) -> Self {
        let mut chambers = BTreeMap::new();
        for order in permutations(building.n) {
            let c = building.chamber_of_lines(&frame, &order);
            chambers.insert(order, c);
        }
        let members = chambers.values().copied().collect();
        let base = chambers[&(0..building.n).collect::<Vec<_>>()];
        Apartment {
            frame,
            chambers,
            members,
            base,
        }
    }

    pub fn frame(&self) -> &[Vec<u32>] {
        &self.frame
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    /// Chamber ids, sorted.
    pub fn chambers(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.members.contains(&c)
    }

    /// The chamber of a line ordering, in one-line notation.
    pub fn chamber_of_ordering(&self, order: &[usize]) -> Option<usize> {
        self.chambers.get(order).copied()
    }

    fn ordering_of(&self, c: usize) -> Option<&Vec<usize>> {
        self.chambers.iter().find(|(_, &d)| d == c).map(|(o, _)| o)
    }

    /// The chamber reached from the base by a word in the generators
    /// `0..n-1`; generator `g` crosses the wall of type `g + 1`.
    pub fn chamber_of_word(&self, word: &[u16]) -> usize {
        let mut order: Vec<usize> = (0..self.frame.len()).collect();
        for &g in word {
            order.swap(g as usize, g as usize + 1);
        }
        self.chambers[&order]
    }

    /// The same apartment with the frame reordered so that `c` is the base.
    pub fn rebased(&self, c: usize) -> Option<Apartment> {
        let order = self.ordering_of(c)?;
        let frame: Vec<Vec<u32>> = order.iter().map(|&i| self.frame[i].clone()).collect();
        let chambers = self
            .chambers
            .iter()
            .map(|(o, &d)| {
                // position k of the new frame holds old line order[k]
                let inv_pos = |line: usize| order.iter().position(|&x| x == line).expect("perm");
                (o.iter().map(|&line| inv_pos(line)).collect(), d)
            })
            .collect();
        Some(Apartment {
            frame,
            chambers,
            members: self.members.clone(),
            base: c,
        })
    }

    /// Checks that the chambers form a thin copy of the `S_n` Cayley graph:
    /// `n!` distinct chambers, and crossing wall `g + 1` swaps positions
    /// `g, g + 1` of the ordering along an edge of that type.
    pub fn is_coxeter_complex(&self, building: &FlagBuilding) -> bool {
        let n = self.frame.len();
        if self.members.len() != self.chambers.len() || self.chambers.len() != permutations(n).len()
        {
            return false;
        }
        self.chambers.iter().all(|(order, &c)| {
            (0..n - 1).all(|g| {
                let mut o = order.clone();
                o.swap(g, g + 1);
                let d = self.chambers[&o];
                building.graph.label(c, d) == Some(g as u32 + 1)
            })
        })
    }
}

/// An apartment containing both chambers, from a Jordan-Hölder refinement
/// of the two flags. The result is based at `c`.
pub fn common_apartment(
    building: &FlagBuilding,
    c: usize,
    d: usize,
) -> Result<Apartment, BuildingError> {
    building.check_chamber(c)?;
    building.check_chamber(d)?;
    let f = building.field;
    let n = building.n;
    let x = |i: usize| &building.subspaces[building.level(c, i)];
    let y = |j: usize| &building.subspaces[building.level(d, j)];
    let mut frame = Vec::with_capacity(n);
    for i in 1..=n {
        // the unique j where X_i adds a dimension over X_{i-1} inside Y_j
        let j = (1..=n)
            .find(|&j| x(i).intersection(f, y(j)).dim() > x(i - 1).intersection(f, y(j)).dim())
            .expect("X_i is reached at Y_n");
        let cell = x(i).intersection(f, y(j));
        let lower = x(i - 1).intersection(f, y(j)).sum(f, &x(i).intersection(f, y(j - 1)));
        let v = cell
            .elements(f)
            .into_iter()
            .find(|v| !lower.contains_vector(f, v))
            .expect("jump cell is larger than its lower part");
        frame.push(v);
    }
    let apartment = Apartment::from_frame(building, frame);
    debug_assert_eq!(apartment.base, c);
    debug_assert!(apartment.contains(d));
    Ok(apartment)
}

/// Paths from `center` to every chamber of `N(base, t)`, sharing only
/// `center` and avoiding `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFan {
    pub base: usize,
    pub center: usize,
    pub s: usize,
    pub t: usize,
    /// `paths[k]` ends at `targets[k]`; targets are sorted.
    pub targets: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl PathFan {
    pub fn edge_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.paths.iter().map(|p| p.len() - 1).collect();
        v.sort_unstable();
        v
    }

    pub fn path_to(&self, target: usize) -> Option<&[usize]> {
        let k = self.targets.binary_search(&target).ok()?;
        Some(&self.paths[k])
    }
}

/// The `s`-`t` dihedral gallery of an apartment based at the base chamber.
fn apartment_dihedral(building: &FlagBuilding, apartment: &Apartment, s: usize, t: usize) -> Vec<usize> {
    let system = CoxeterMatrix::type_a(building.n - 1);
    let path = dihedral_path(&system, s - 1, t - 1).expect("distinct in-range types");
    path.vertices
        .iter()
        .map(|w| apartment.chamber_of_word(w.letters()))
        .collect()
}

pub fn path_fan(
    building: &FlagBuilding,
    base: usize,
    center: usize,
    s: usize,
    t: usize,
) -> Result<PathFan, BuildingError> {
    pinned_fan(building, base, center, s, t, None)
}

/// `path_fan`, optionally forcing the non-commuting matching to pair
/// `pin.0 ∈ N(B,t)` with `pin.1 ∈ N(C,t)`; the rest is matched in id order.
fn pinned_fan(
    building: &FlagBuilding,
    base: usize,
    center: usize,
    s: usize,
    t: usize,
    pin: Option<(usize, usize)>,
) -> Result<PathFan, BuildingError> {
    building.check_chamber(base)?;
    building.check_chamber(center)?;
    building.check_type(s)?;
    building.check_type(t)?;
    if building.graph.label(base, center) != Some(s as u32) {
        return Err(BuildingError::InvalidAdjacency {
            base,
            chamber: center,
            s,
        });
    }
    let targets = building.neighbors_of_type(base, t)?;
    let mut paths = Vec::with_capacity(targets.len());
    if s == t {
        for &d in &targets {
            paths.push(if d == center { vec![center] } else { vec![center, d] });
        }
    } else if s.abs_diff(t) >= 2 {
        for &d in &targets {
            let apartment = common_apartment(building, center, d)?
                .rebased(base)
                .expect("apartments are convex");
            paths.push(apartment_dihedral(building, &apartment, s, t));
        }
    } else {
        // match N(B,t) with N(C,t) in id order; E - C - B - D is a minimal
        // gallery, so an apartment through E and D holds all four
        let mut partners = building.neighbors_of_type(center, t)?;
        if let Some((d, e)) = pin {
            let k = targets.binary_search(&d).expect("pinned target in N(B,t)");
            let from = partners.iter().position(|&x| x == e).expect("pinned partner in N(C,t)");
            let e = partners.remove(from);
            partners.insert(k, e);
        }
        for (&d, &e) in targets.iter().zip(&partners) {
            let apartment = common_apartment(building, e, d)?
                .rebased(base)
                .expect("apartments are convex");
            let path = apartment_dihedral(building, &apartment, s, t);
            debug_assert_eq!(path[1], e);
            paths.push(path);
        }
    }
    let fan = PathFan {
        base,
        center,
        s,
        t,
        targets,
        paths,
    };
    check_fan(building, &fan)?;
    Ok(fan)
}

/// Runtime check of the fan property: genuine galleries, disjoint away from
/// the center, never through the base.
fn check_fan(building: &FlagBuilding, fan: &PathFan) -> Result<(), BuildingError> {
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, path) in fan.paths.iter().enumerate() {
        for w in path.windows(2) {
            if !building.graph.has_edge(w[0], w[1]) {
                return Err(BuildingError::Overlap(Violation::NotAnEdge {
                    path: k,
                    from: w[0],
                    to: w[1],
                }));
            }
        }
        for &x in &path[1..] {
            if x == fan.base || x == fan.center {
                return Err(BuildingError::Overlap(Violation::RepeatedVertex { path: k, vertex: x }));
            }
            if let Some(first) = owner.insert(x, k) {
                return Err(BuildingError::Overlap(Violation::SharedInterior {
                    first,
                    second: k,
                    vertex: x,
                }));
            }
        }
    }
    Ok(())
}

/// The least common neighbour of two chambers at distance two.
pub fn least_common_neighbor(
    building: &FlagBuilding,
    c: usize,
    d: usize,
) -> Result<usize, BuildingError> {
    building.check_chamber(c)?;
    building.check_chamber(d)?;
    let g = &building.graph;
    if c == d || g.has_edge(c, d) {
        return Err(BuildingError::NotDistanceTwo(g.distance(c, d)));
    }
    g.neighbors(c)
        .iter()
        .copied()
        .find(|&b| g.has_edge(b, d))
        .ok_or_else(|| BuildingError::NotDistanceTwo(g.distance(c, d)))
}

/// `q(Δ)` internally disjoint galleries between chambers at distance two:
/// for each type `s`, the fans from the common neighbour `B` towards `c`
/// and `d` are glued at each chamber of `N(B, s)`, except at `c` itself,
/// where the path is `c - B - d`.
pub fn building_disjoint_paths(
    building: &FlagBuilding,
    c: usize,
    d: usize,
) -> Result<PathFamily, BuildingError> {
    let b = least_common_neighbor(building, c, d)?;
    let sc = building.graph.label(b, c).expect("labelled") as usize;
    let sd = building.graph.label(b, d).expect("labelled") as usize;
    // When the two types do not commute, the c-side path to d runs through
    // some F0 in N(d, sc). The d-side fan of type sc must spend F0 on its
    // path to c, which is the one replaced by c - B - d below.
    let pin = if sc.abs_diff(sd) == 1 {
        let to_d = path_fan(building, b, c, sc, sd)?;
        let path = to_d.path_to(d).expect("d is in N(B, sd)");
        Some((c, path[path.len() - 2]))
    } else {
        None
    };
    let mut paths = Vec::new();
    for s in building.types() {
        let from_c = path_fan(building, b, c, sc, s)?;
        let from_d = pinned_fan(building, b, d, sd, s, if s == sc { pin } else { None })?;
        for (k, &e) in from_c.targets.iter().enumerate() {
            if e == c {
                // gluing here would retrace the D-side fan of type `sd`;
                // this slot is the only one left for the neighbour B
                paths.push(vec![c, b, d]);
                continue;
            }
            let mut path = from_c.paths[k].clone();
            let back = from_d.path_to(e).expect("both fans cover N(B, s)");
            path.extend(back.iter().rev().skip(1));
            paths.push(path);
        }
    }
    let family = PathFamily::new(c, d, paths, "building-fans");
    verify_disjoint_family(&building.graph, &family).map_err(BuildingError::Overlap)?;
    Ok(family)
}
