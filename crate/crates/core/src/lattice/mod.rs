//! Finite posets, geometric lattices, their chamber graphs and the local
//! width `q(P)`.

mod paths;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ChamberGraph, Provenance};
use crate::field::{subspaces_of_dim, FieldError, PrimeField, Subspace};
use crate::Limits;

pub use paths::{distance2_witness, lattice_disjoint_paths, DistanceTwoWitness, LatticePaths};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("cover relation {0} < {1} is not a cover")]
    NotACover(usize, usize),
    #[error("cover relations contain a cycle")]
    Cyclic,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("not a geometric lattice: {0}")]
    NotGeometric(GeometricFailure),
    #[error("{what} count {count} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        count: usize,
        cap: usize,
    },
    #[error("lattice rank {0} is below 2")]
    RankTooSmall(usize),
    #[error("matrix rows have different lengths")]
    RaggedMatrix,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("chains are not at distance two")]
    NotDistanceTwo,
    #[error("chamber {0} out of range")]
    ChamberOutOfRange(usize),
    #[error("rank-{rank} construction found {found} of {needed} disjoint paths")]
    InternalOverlap {
        rank: usize,
        found: usize,
        needed: usize,
    },
}

/// Fixed-width bit set over element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// A finite poset given by its cover relations.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<Bits>,
    below: Vec<Bits>,
    /// Length of the longest chain down to a minimal element.
    height: Vec<usize>,
    labels: Vec<String>,
}

impl FinitePoset {
    pub fn from_covers(len: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &(a, b) in covers {
            for x in [a, b] {
                if x >= len {
                    return Err(LatticeError::ElementOutOfRange(x));
                }
            }
            if a == b {
                return Err(LatticeError::Cyclic);
            }
            up[a].push(b);
            down[b].push(a);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        // Kahn's algorithm from the minimal elements
        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..len).filter(|&x| indegree[x] == 0).collect();
        let mut order = Vec::with_capacity(len);
        let mut height = vec![0usize; len];
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &up[x] {
                height[y] = height[y].max(height[x] + 1);
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != len {
            return Err(LatticeError::Cyclic);
        }
        let mut above: Vec<Bits> = (0..len).map(|_| Bits::new(len)).collect();
        for &x in order.iter().rev() {
            above[x].set(x);
            for &y in &up[x] {
                let (lo, hi) = if x < y {
                    let (l, h) = above.split_at_mut(y);
                    (&mut l[x], &h[0])
                } else {
                    let (l, h) = above.split_at_mut(x);
                    (&mut h[0], &l[y])
                };
                lo.union_with(hi);
            }
        }
        let mut below: Vec<Bits> = (0..len).map(|_| Bits::new(len)).collect();
        for x in 0..len {
            for y in above[x].ones() {
                below[y].set(x);
            }
        }
        // a cover a < b must not be implied by a longer chain
        for (a, ups) in up.iter().enumerate() {
            for &b in ups {
                if ups.iter().any(|&c| c != b && above[c].get(b)) {
                    return Err(LatticeError::NotACover(a, b));
                }
            }
        }
        Ok(FinitePoset {
            up,
            down,
            above,
            below,
            height,
            labels: (0..len).map(|i| i.to_string()).collect(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, LatticeError> {
        if labels.len() != self.len() {
            return Err(LatticeError::LabelCount {
                expected: self.len(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].get(b)
    }

    pub fn covers_up(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn covers_down(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// All cover pairs `(a, b)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b)))
            .collect()
    }

    /// Least upper bound, if there is one.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.above[a].and(&self.above[b]);
        let least = common.ones().min_by_key(|&u| (self.height[u], u))?;
        common.is_subset(&self.above[least]).then_some(least)
    }

    /// Greatest lower bound, if there is one.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.below[a].and(&self.below[b]);
        let greatest = common.ones().max_by_key(|&u| (self.height[u], u))?;
        common.is_subset(&self.below[greatest]).then_some(greatest)
    }

    fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }
}

/// The first property found to fail, with a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricFailure {
    Empty,
    NoUniqueBottom,
    NoUniqueTop,
    NotGraded { lower: usize, upper: usize },
    NoJoin { a: usize, b: usize },
    NotSemimodular { element: usize, atom: usize },
    NotAtomistic { element: usize },
}

impl fmt::Display for GeometricFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometricFailure::Empty => write!(f, "poset is empty"),
            GeometricFailure::NoUniqueBottom => write!(f, "no unique minimal element"),
            GeometricFailure::NoUniqueTop => write!(f, "no unique maximal element"),
            GeometricFailure::NotGraded { lower, upper } => {
                write!(f, "cover {lower} < {upper} skips a rank")
            }
            GeometricFailure::NoJoin { a, b } => write!(f, "{a} and {b} have no join"),
            GeometricFailure::NotSemimodular { element, atom } => {
                write!(f, "{element} is not covered by its join with atom {atom}")
            }
            GeometricFailure::NotAtomistic { element } => {
                write!(f, "{element} is not a join of atoms")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricReport {
    pub graded: bool,
    pub lattice: bool,
    pub semimodular: bool,
    pub atomistic: bool,
    pub failure: Option<GeometricFailure>,
}

impl GeometricReport {
    pub fn is_geometric(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exhaustive check of gradedness, the lattice property, semimodularity and
/// atomisticity.
pub fn validate_geometric(poset: &FinitePoset) -> GeometricReport {
    let mut failures = Vec::new();
    if poset.is_empty() {
        return GeometricReport {
            graded: false,
            lattice: false,
            semimodular: false,
            atomistic: false,
            failure: Some(GeometricFailure::Empty),
        };
    }
    let (bottoms, tops) = (poset.minimal(), poset.maximal());
    if bottoms.len() != 1 {
        failures.push(GeometricFailure::NoUniqueBottom);
    }
    if tops.len() != 1 {
        failures.push(GeometricFailure::NoUniqueTop);
    }
    let skip = poset
        .covers()
        .into_iter()
        .find(|&(a, b)| poset.height[b] != poset.height[a] + 1);
    let graded = skip.is_none() && tops.len() == 1 && bottoms.len() == 1;
    if let Some((lower, upper)) = skip {
        failures.push(GeometricFailure::NotGraded { lower, upper });
    }

    let n = poset.len();
    let mut no_join = None;
    'pairs: for a in 0..n {
        for b in a + 1..n {
            if poset.join(a, b).is_none() {
                no_join = Some((a, b));
                break 'pairs;
            }
        }
    }
    let lattice = no_join.is_none() && bottoms.len() == 1;
    if let Some((a, b)) = no_join {
        failures.push(GeometricFailure::NoJoin { a, b });
    }

    let mut semimodular = lattice && graded;
    let mut atomistic = lattice;
    if lattice {
        let bottom = bottoms[0];
        let atoms = poset.up[bottom].clone();
        'outer: for x in 0..n {
            for &a in &atoms {
                if !poset.leq(a, x) {
                    let j = poset.join(x, a).expect("lattice");
                    if poset.height[j] != poset.height[x] + 1 {
                        semimodular = false;
                        failures.push(GeometricFailure::NotSemimodular { element: x, atom: a });
                        break 'outer;
                    }
                }
            }
        }
        for x in 0..n {
            let joined = atoms
                .iter()
                .filter(|&&a| poset.leq(a, x))
                .fold(bottom, |acc, &a| poset.join(acc, a).expect("lattice"));
            if joined != x {
                atomistic = false;
                failures.push(GeometricFailure::NotAtomistic { element: x });
                break;
            }
        }
    }
    // report in the order: bounds, grading, joins, semimodularity, atoms
    GeometricReport {
        graded,
        lattice,
        semimodular,
        atomistic,
        failure: failures.into_iter().next(),
    }
}

/// A validated geometric lattice with a join table.
#[derive(Debug, Clone)]
pub struct GeometricLattice {
    poset: FinitePoset,
    rank: Vec<usize>,
    bottom: usize,
    top: usize,
    atoms: Vec<usize>,
    join: Vec<u32>,
}

impl GeometricLattice {
    pub fn new(poset: FinitePoset, limits: &Limits) -> Result<Self, LatticeError> {
        let n = poset.len();
        if n > limits.max_lattice_elements {
            return Err(LatticeError::TooLarge {
                what: "lattice element",
                count: n,
                cap: limits.max_lattice_elements,
            });
        }
        let report = validate_geometric(&poset);
        if let Some(f) = report.failure {
            return Err(LatticeError::NotGeometric(f));
        }
        let bottom = poset.minimal()[0];
        let top = poset.maximal()[0];
        let atoms = poset.up[bottom].clone();
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let j = poset.join(a, b).expect("validated") as u32;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        Ok(GeometricLattice {
            rank: poset.height.clone(),
            poset,
            bottom,
            top,
            atoms,
            join,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.poset.meet(a, b).expect("finite bounded lattice")
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    /// Elements `z` with `lo < z < hi` and `z` covering `lo` and covered by
    /// `hi`, in id order. Meant for intervals of length two.
    pub fn open_interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.poset.up[lo]
            .iter()
            .copied()
            .filter(|&z| self.poset.down[hi].binary_search(&z).is_ok())
            .collect()
    }

    pub fn covers(&self, lo: usize, hi: usize) -> bool {
        self.poset.up[lo].binary_search(&hi).is_ok()
    }
}

fn lattice_from_parts(
    labels: Vec<String>,
    covers: &[(usize, usize)],
    limits: &Limits,
) -> Result<GeometricLattice, LatticeError> {
    let poset = FinitePoset::from_covers(labels.len(), covers)?.with_labels(labels)?;
    GeometricLattice::new(poset, limits)
}

fn check_size(count: usize, limits: &Limits) -> Result<(), LatticeError> {
    if count > limits.max_lattice_elements {
        Err(LatticeError::TooLarge {
            what: "lattice element",
            count,
            cap: limits.max_lattice_elements,
        })
    } else {
        Ok(())
    }
}

fn set_label(items: impl Iterator<Item = usize>) -> String {
    let inner: Vec<String> = items.map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Subsets of `{1..n}` ordered by inclusion.
pub fn boolean_lattice(n: usize, limits: &Limits) -> Result<GeometricLattice, LatticeError> {
    if n >= 32 {
        return Err(LatticeError::TooLarge {
            what: "lattice element",
            count: usize::MAX,
            cap: limits.max_lattice_elements,
        });
    }
    check_size(1 << n, limits)?;
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let id: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for i in 0..n {
            if m & (1 << i) == 0 {
                covers.push((id[&m], id[&(m | 1 << i)]));
            }
        }
    }
    let labels = masks
        .iter()
        .map(|&m| set_label((0..n).filter(|i| m >> i & 1 == 1)))
        .collect();
    lattice_from_parts(labels, &covers, limits)
}

/// Set partitions of `{1..n}` ordered by refinement; rank is `n` minus the
/// number of blocks.
pub fn partition_lattice(n: usize, limits: &Limits) -> Result<GeometricLattice, LatticeError> {
    // restricted growth strings
    let mut all: Vec<Vec<u8>> = Vec::new();
    let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
    while let Some(rgs) = stack.pop() {
        if rgs.len() == n {
            all.push(rgs);
            check_size(all.len(), limits)?;
            continue;
        }
        let max = rgs.iter().copied().max().map_or(0, |m| m + 1);
        for b in (0..=max).rev() {
            let mut next = rgs.clone();
            next.push(b);
            stack.push(next);
        }
    }
    let blocks = |rgs: &[u8]| rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
    all.sort_by_key(|rgs| (n - blocks(rgs), rgs.clone()));
    let id: BTreeMap<Vec<u8>, usize> = all.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let canonical = |raw: &[u8]| -> Vec<u8> {
        let mut map: BTreeMap<u8, u8> = BTreeMap::new();
        raw.iter()
            .map(|b| {
                let next = map.len() as u8;
                *map.entry(*b).or_insert(next)
            })
            .collect()
    };
    let mut covers = Vec::new();
    for rgs in &all {
        let k = blocks(rgs) as u8;
        for a in 0..k {
            for b in a + 1..k {
                let merged: Vec<u8> = rgs.iter().map(|&x| if x == b { a } else { x }).collect();
                covers.push((id[rgs], id[&canonical(&merged)]));
            }
        }
    }
    let labels = all
        .iter()
        .map(|rgs| {
            let sep = if n >= 10 { "," } else { "" };
            (0..blocks(rgs) as u8)
                .map(|b| {
                    let members: Vec<String> = (0..n)
                        .filter(|&i| rgs[i] == b)
                        .map(|i| (i + 1).to_string())
                        .collect();
                    members.join(sep)
                })
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    lattice_from_parts(labels, &covers, limits)
}

fn subspace_label(s: &Subspace) -> String {
    if s.dim() == 0 {
        return "0".into();
    }
    let rows: Vec<String> = s
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
        .collect();
    rows.join(",")
}

/// All subspaces of `F_p^n` ordered by inclusion.
pub fn subspace_lattice(n: usize, p: u32, limits: &Limits) -> Result<GeometricLattice, LatticeError> {
    let field = PrimeField::new(p)?;
    let total: u128 = (0..=n)
        .map(|k| crate::field::gaussian_binomial(n, k, p as u64))
        .sum();
    if total > limits.max_lattice_elements as u128 {
        return Err(LatticeError::TooLarge {
            what: "lattice element",
            count: usize::try_from(total).unwrap_or(usize::MAX),
            cap: limits.max_lattice_elements,
        });
    }
    let mut elements = Vec::new();
    let mut start = Vec::new();
    for k in 0..=n {
        start.push(elements.len());
        elements.extend(subspaces_of_dim(field, n, k));
    }
    start.push(elements.len());
    let mut covers = Vec::new();
    for k in 0..n {
        for a in start[k]..start[k + 1] {
            for b in start[k + 1]..start[k + 2] {
                if elements[b].contains(field, &elements[a]) {
                    covers.push((a, b));
                }
            }
        }
    }
    let labels = elements.iter().map(subspace_label).collect();
    lattice_from_parts(labels, &covers, limits)
}

/// Flats of the column matroid of a matrix over `F_p`, ordered by
/// inclusion. Columns are numbered from 1 in labels.
pub fn flats_lattice(
    matrix: &[Vec<u32>],
    p: u32,
    limits: &Limits,
) -> Result<GeometricLattice, LatticeError> {
    let field = PrimeField::new(p)?;
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(LatticeError::RaggedMatrix);
    }
    if cols > 64 {
        return Err(LatticeError::TooLarge {
            what: "matrix column",
            count: cols,
            cap: 64,
        });
    }
    let column = |j: usize| -> Vec<u32> { (0..rows).map(|i| matrix[i][j] % p).collect() };
    let columns: Vec<Vec<u32>> = (0..cols).map(column).collect();
    let span_of = |mask: u64| -> Subspace {
        let vs: Vec<Vec<u32>> = (0..cols).filter(|j| mask >> j & 1 == 1).map(|j| columns[j].clone()).collect();
        Subspace::span(field, rows, &vs).expect("columns have matching length")
    };
    let closure = |mask: u64| -> (u64, usize) {
        let s = span_of(mask);
        let closed = (0..cols)
            .filter(|&j| s.contains_vector(field, &columns[j]))
            .fold(0u64, |m, j| m | 1 << j);
        (closed, s.dim())
    };
    let (first, _) = closure(0);
    let mut rank_of: BTreeMap<u64, usize> = BTreeMap::new();
    rank_of.insert(first, 0);
    let mut queue = VecDeque::from([first]);
    let mut cover_masks: BTreeSet<(u64, u64)> = BTreeSet::new();
    while let Some(f) = queue.pop_front() {
        for j in 0..cols {
            if f >> j & 1 == 0 {
                let (g, r) = closure(f | 1 << j);
                cover_masks.insert((f, g));
                if let alloc::collections::btree_map::Entry::Vacant(slot) = rank_of.entry(g) {
                    slot.insert(r);
                    check_size(rank_of.len(), limits)?;
                    queue.push_back(g);
                }
            }
        }
    }
    let members = |m: u64| -> Vec<usize> { (0..cols).filter(|j| m >> j & 1 == 1).collect() };
    let mut flats: Vec<u64> = rank_of.keys().copied().collect();
    flats.sort_by_key(|&m| (rank_of[&m], members(m)));
    let id: BTreeMap<u64, usize> = flats.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let covers: Vec<(usize, usize)> = cover_masks.iter().map(|(f, g)| (id[f], id[g])).collect();
    let labels = flats.iter().map(|&m| set_label(members(m).into_iter())).collect();
    lattice_from_parts(labels, &covers, limits)
}

/// `q(P)` from rank-2 elements, alongside the minimum over every interval
/// of length two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalWidthReport {
    pub q: usize,
    /// A rank-2 element with exactly `q + 1` atoms below it.
    pub witness: usize,
    /// Minimum size of `(x, y)` over all `x < y` with `r(y) = r(x) + 2`.
    pub full_min: usize,
    pub full_witness: (usize, usize),
}

impl LocalWidthReport {
    pub fn rank_two_suffices(&self) -> bool {
        self.q + 1 == self.full_min
    }
}

pub fn q_of_lattice(lattice: &GeometricLattice) -> Result<LocalWidthReport, LatticeError> {
    if lattice.rank() < 2 {
        return Err(LatticeError::RankTooSmall(lattice.rank()));
    }
    let n = lattice.len();
    let (witness, low) = (0..n)
        .filter(|&x| lattice.rank_of(x) == 2)
        .map(|x| (x, lattice.open_interval(lattice.bottom(), x).len()))
        .min_by_key(|&(x, c)| (c, x))
        .expect("rank >= 2 has rank-2 elements");
    let mut full = (usize::MAX, (0, 0));
    for x in 0..n {
        for &m in lattice.poset.covers_up(x) {
            for &y in lattice.poset.covers_up(m) {
                let size = lattice.open_interval(x, y).len();
                if (size, (x, y)) < full {
                    full = (size, (x, y));
                }
            }
        }
    }
    Ok(LocalWidthReport {
        q: low - 1,
        witness,
        full_min: full.0,
        full_witness: full.1,
    })
}

/// For every interval `(x, y)` of length two, picks atoms `a`, `b` with
/// `x < x ∨ a < x ∨ a ∨ b = y` and checks that `c ↦ x ∨ c` maps the atoms
/// below `a ∨ b` injectively into `(x, y)`. Returns the number of intervals
/// checked, or the first failing interval.
pub fn check_atom_injection(lattice: &GeometricLattice) -> Result<usize, (usize, usize)> {
    let mut checked = 0;
    for x in 0..lattice.len() {
        let mids: BTreeSet<usize> = lattice.poset.covers_up(x).iter().copied().collect();
        let tops: BTreeSet<usize> = mids
            .iter()
            .flat_map(|&m| lattice.poset.covers_up(m).iter().copied())
            .collect();
        for y in tops {
            let below_y: Vec<usize> = lattice.atoms().iter().copied().filter(|&a| lattice.leq(a, y)).collect();
            let pick = below_y.iter().find_map(|&a| {
                let xa = lattice.join(x, a);
                if !lattice.covers(x, xa) {
                    return None;
                }
                below_y
                    .iter()
                    .find(|&&b| lattice.join(xa, b) == y && lattice.covers(xa, y))
                    .map(|&b| (a, b))
            });
            let Some((a, b)) = pick else {
                return Err((x, y));
            };
            let ab = lattice.join(a, b);
            let mut images = BTreeSet::new();
            for c in lattice.open_interval(lattice.bottom(), ab) {
                let image = lattice.join(x, c);
                if !(lattice.covers(x, image) && lattice.covers(image, y)) || !images.insert(image) {
                    return Err((x, y));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Maximal chains of the proper part and the chamber graph on them.
#[derive(Debug, Clone)]
pub struct LatticeChambers {
    pub graph: ChamberGraph,
    /// `chains[c][k]` is the rank `k + 1` element of chamber `c`.
    pub chains: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl LatticeChambers {
    pub fn id(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain).copied()
    }
}

pub fn lattice_chamber_graph(
    lattice: &GeometricLattice,
    limits: &Limits,
) -> Result<LatticeChambers, LatticeError> {
    let n = lattice.rank();
    let mut chains = Vec::new();
    let mut current = Vec::new();
    collect_chains(lattice, lattice.bottom(), n.saturating_sub(1), &mut current, &mut chains, limits)?;
    chains.sort();
    let index: BTreeMap<Vec<usize>, usize> =
        chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (id, chain) in chains.iter().enumerate() {
        for k in 0..chain.len() {
            let lo = if k == 0 { lattice.bottom() } else { chain[k - 1] };
            let hi = if k + 1 == chain.len() { lattice.top() } else { chain[k + 1] };
            for z in lattice.open_interval(lo, hi) {
                if z > chain[k] {
                    let mut other = chain.clone();
                    other[k] = z;
                    edges.push((id, index[&other], Some(k as u32 + 1)));
                }
            }
        }
    }
    let names = chains
        .iter()
        .map(|c| {
            c.iter()
                .map(|&x| lattice.label(x))
                .collect::<Vec<_>>()
                .join(" < ")
        })
        .collect();
    let graph = ChamberGraph::from_edges(chains.len(), edges, Provenance::Lattice)
        .expect("chain swaps give simple edges")
        .with_names(names)
        .expect("one name per chain");
    Ok(LatticeChambers {
        graph,
        chains,
        index,
    })
}

fn collect_chains(
    lattice: &GeometricLattice,
    from: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limits: &Limits,
) -> Result<(), LatticeError> {
    if remaining == 0 {
        out.push(current.clone());
        if out.len() > limits.max_chambers {
            return Err(LatticeError::TooLarge {
                what: "chamber",
                count: out.len(),
                cap: limits.max_chambers,
            });
        }
        return Ok(());
    }
    for &next in lattice.poset.covers_up(from) {
        current.push(next);
        collect_chains(lattice, next, remaining - 1, current, out, limits)?;
        current.pop();
    }
    Ok(())
}
