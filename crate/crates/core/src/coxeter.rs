//! Coxeter systems, their word problem and Cayley graphs, the dihedral
//! galleries `s, st, sts, ..., ts, t` and the disjoint fan between two
//! group elements at distance two.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::complex::{ChamberGraph, Provenance};
use crate::connectivity::PathFamily;

pub type Generator = u16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("generators must differ")]
    SameGenerator,
    #[error("s{}s{} has infinite order", .0 + 1, .1 + 1)]
    InfiniteOrder(usize, usize),
    #[error("Coxeter system is not 2-finite")]
    NotTwoFinite,
    #[error("elements are not at distance two (distance {0})")]
    NotDistanceTwo(usize),
    #[error("ball exceeds the cap of {0} vertices")]
    TooManyVertices(usize),
    #[error("cannot parse word {0:?}")]
    BadWord(String),
}

/// Symmetric matrix of orders `m(s,t)` of products of generators; `None`
/// stands for infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    orders: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    /// Builds a matrix from rows, with `0` encoding infinity. The diagonal
    /// must be `1`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, CoxeterError> {
        let rank = rows.len();
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("rank must be at least 1".into()));
        }
        if rank > Generator::MAX as usize {
            return Err(CoxeterError::InvalidMatrix("rank too large".into()));
        }
        let mut orders = vec![None; rank * rank];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j {
                    if m != 1 {
                        return Err(CoxeterError::InvalidMatrix(format!(
                            "diagonal entry ({i},{i}) is {m}, expected 1"
                        )));
                    }
                    orders[i * rank + j] = Some(1);
                } else {
                    if m == 1 {
                        return Err(CoxeterError::InvalidMatrix(format!(
                            "off-diagonal entry ({i},{j}) is 1"
                        )));
                    }
                    if rows[j][i] != m {
                        return Err(CoxeterError::InvalidMatrix(format!(
                            "entries ({i},{j}) and ({j},{i}) differ"
                        )));
                    }
                    orders[i * rank + j] = (m != 0).then_some(m);
                }
            }
        }
        Ok(CoxeterMatrix { rank, orders })
    }

    fn from_fn(rank: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let rows: Vec<Vec<u32>> = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { 1 } else { f(i.min(j), i.max(j)) }).collect())
            .collect();
        Self::from_rows(&rows).expect("well-formed by construction")
    }

    /// `A_n`, the symmetric group on `n + 1` letters.
    pub fn type_a(n: usize) -> Self {
        Self::from_fn(n, |i, j| if j == i + 1 { 3 } else { 2 })
    }

    /// `B_n`, the signed permutations; the last bond has order 4.
    pub fn type_b(n: usize) -> Self {
        Self::from_fn(n, |i, j| match (j == i + 1, j + 1 == n) {
            (true, true) => 4,
            (true, false) => 3,
            _ => 2,
        })
    }

    /// `I_2(m)`, dihedral of order `2m`; `None` gives the infinite dihedral
    /// group.
    pub fn dihedral(m: Option<u32>) -> Self {
        let m = m.unwrap_or(0);
        Self::from_rows(&[vec![1, m], vec![m, 1]]).expect("dihedral order must be >= 2")
    }

    /// Affine `Ã_n` for `n >= 2`: a cycle of `n + 1` generators with bonds of
    /// order 3.
    pub fn affine_a(n: usize) -> Self {
        assert!(n >= 2);
        let r = n + 1;
        Self::from_fn(r, |i, j| if j == i + 1 || (i == 0 && j == r - 1) { 3 } else { 2 })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self, s: usize, t: usize) -> Option<u32> {
        self.orders[s * self.rank + t]
    }

    /// Rows with `0` for infinity.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.order(i, j).unwrap_or(0)).collect())
            .collect()
    }

    pub fn is_two_finite(&self) -> bool {
        self.orders.iter().all(Option::is_some)
    }

    fn check_generator(&self, s: usize) -> Result<Generator, CoxeterError> {
        if s < self.rank {
            Ok(s as Generator)
        } else {
            Err(CoxeterError::GeneratorOutOfRange(s))
        }
    }
}

/// A group element in ShortLex normal form: the lexicographically least
/// among its reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord(Vec<Generator>);

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `e`, `s1s2s1`, or whitespace/comma separated `s1 s2`.
    /// Generators are numbered from 1. The result is not normalized.
    pub fn parse_letters(text: &str) -> Result<Vec<usize>, CoxeterError> {
        let bad = || CoxeterError::BadWord(text.into());
        let trimmed = text.trim();
        if trimmed == "e" || trimmed.is_empty() {
            return Ok(Vec::new());
        }
        let mut letters = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            rest = rest.trim_start_matches([' ', ',', '.', '*']);
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix('s').ok_or_else(bad)?;
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            if digits == 0 {
                return Err(bad());
            }
            let n: usize = rest[..digits].parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            letters.push(n - 1);
            rest = &rest[digits..];
        }
        Ok(letters)
    }
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for s in &self.0 {
            write!(f, "s{}", s + 1)?;
        }
        Ok(())
    }
}

/// Closure of a word under braid moves. Either the full class of an
/// equal-length word set (all reduced), or a word of the class containing
/// two equal adjacent letters together with the position of the pair.
enum BraidClosure {
    Reduced(BTreeSet<Vec<Generator>>),
    Cancels(Vec<Generator>, usize),
}

impl CoxeterMatrix {
    fn braid_closure(&self, word: &[Generator]) -> BraidClosure {
        let mut seen: BTreeSet<Vec<Generator>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                return BraidClosure::Cancels(w, i);
            }
            for i in 0..w.len().saturating_sub(1) {
                let (s, t) = (w[i], w[i + 1]);
                let Some(m) = self.order(s as usize, t as usize) else {
                    continue;
                };
                let m = m as usize;
                if i + m > w.len() {
                    continue;
                }
                let alternates = (0..m).all(|k| w[i + k] == if k % 2 == 0 { s } else { t });
                if !alternates {
                    continue;
                }
                let mut next = w.clone();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { t } else { s };
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        BraidClosure::Reduced(seen)
    }

    /// Right multiplication of a normal form by one generator.
    fn times_generator(&self, word: &ReducedWord, s: Generator) -> ReducedWord {
        let mut w = word.0.clone();
        w.push(s);
        match self.braid_closure(&w) {
            BraidClosure::Reduced(class) => ReducedWord(class.into_iter().next().unwrap()),
            BraidClosure::Cancels(mut v, i) => {
                // exchange condition: dropping the pair leaves a reduced word
                v.drain(i..i + 2);
                match self.braid_closure(&v) {
                    BraidClosure::Reduced(class) => ReducedWord(class.into_iter().next().unwrap()),
                    BraidClosure::Cancels(..) => unreachable!("length drops by exactly one"),
                }
            }
        }
    }

    /// ShortLex normal form of the element represented by `word`.
    pub fn normalize(&self, word: &[usize]) -> Result<ReducedWord, CoxeterError> {
        let mut current = ReducedWord::identity();
        for &s in word {
            let s = self.check_generator(s)?;
            current = self.times_generator(&current, s);
        }
        Ok(current)
    }

    /// All reduced words of the element, in lexicographic order.
    pub fn reduced_words(&self, w: &ReducedWord) -> Vec<Vec<Generator>> {
        match self.braid_closure(&w.0) {
            BraidClosure::Reduced(class) => class.into_iter().collect(),
            BraidClosure::Cancels(..) => unreachable!("normal forms are reduced"),
        }
    }

    pub fn multiply(&self, u: &ReducedWord, v: &ReducedWord) -> ReducedWord {
        v.0.iter()
            .fold(u.clone(), |acc, &s| self.times_generator(&acc, s))
    }

    pub fn inverse(&self, w: &ReducedWord) -> ReducedWord {
        let rev: Vec<usize> = w.0.iter().rev().map(|&s| s as usize).collect();
        self.normalize(&rev).expect("letters are valid generators")
    }

    pub fn generator(&self, s: usize) -> Result<ReducedWord, CoxeterError> {
        Ok(ReducedWord(vec![self.check_generator(s)?]))
    }

    /// Gallery distance `l(u^{-1} v)` in the Cayley graph.
    pub fn distance(&self, u: &ReducedWord, v: &ReducedWord) -> usize {
        self.multiply(&self.inverse(u), v).len()
    }
}

/// Finite ball around the identity in the Cayley graph.
#[derive(Debug, Clone)]
pub struct CayleyBall {
    pub graph: ChamberGraph,
    pub words: Vec<ReducedWord>,
    index: BTreeMap<ReducedWord, usize>,
    pub radius: usize,
}

impl CayleyBall {
    pub fn id(&self, w: &ReducedWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn word(&self, id: usize) -> &ReducedWord {
        &self.words[id]
    }
}

/// All elements of length at most `radius`, with edges `{w, ws}` labelled
/// by `s`. Vertex ids follow ShortLex order. The graph is complete exactly
/// when no element of length `radius` has a longer neighbour.
pub fn cayley_ball(
    system: &CoxeterMatrix,
    radius: usize,
    cap: usize,
) -> Result<CayleyBall, CoxeterError> {
    let rank = system.rank();
    let mut levels: Vec<Vec<ReducedWord>> = vec![vec![ReducedWord::identity()]];
    // neighbour table, filled level by level: (word, s) -> ws
    let mut products: BTreeMap<(ReducedWord, Generator), ReducedWord> = BTreeMap::new();
    let mut total = 1;
    let mut escapes = BTreeSet::new();
    for len in 0..=radius {
        let mut next = BTreeSet::new();
        for w in &levels[len] {
            for s in 0..rank as Generator {
                let ws = system.times_generator(w, s);
                if ws.len() > len {
                    if len == radius {
                        escapes.insert(w.clone());
                    } else {
                        next.insert(ws.clone());
                    }
                }
                products.insert((w.clone(), s), ws);
            }
        }
        if len == radius {
            break;
        }
        total += next.len();
        if total > cap {
            return Err(CoxeterError::TooManyVertices(cap));
        }
        if next.is_empty() {
            break;
        }
        levels.push(next.into_iter().collect());
    }

    let words: Vec<ReducedWord> = levels.into_iter().flatten().collect();
    let index: BTreeMap<ReducedWord, usize> =
        words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for ((w, s), ws) in &products {
        let a = index[w];
        if let Some(&b) = index.get(ws) {
            if a < b {
                edges.push((a, b, Some(*s as u32)));
            }
        }
    }
    let boundary = words.iter().map(|w| escapes.contains(w)).collect();
    let names = words.iter().map(|w| format!("{w}")).collect();
    let graph = ChamberGraph::from_edges(words.len(), edges, Provenance::Coxeter)
        .expect("Cayley graph of a Coxeter system is simple")
        .with_names(names)
        .expect("one name per element")
        .truncated(boundary);
    Ok(CayleyBall {
        graph,
        words,
        index,
        radius,
    })
}

/// The gallery `s, st, sts, ..., tst, ts, t` with `2m - 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralPath {
    pub s: usize,
    pub t: usize,
    pub vertices: Vec<ReducedWord>,
}

impl DihedralPath {
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }
}

fn alternating(s: usize, t: usize, len: usize) -> Vec<usize> {
    (0..len).map(|k| if k % 2 == 0 { s } else { t }).collect()
}

pub fn dihedral_path(
    system: &CoxeterMatrix,
    s: usize,
    t: usize,
) -> Result<DihedralPath, CoxeterError> {
    system.check_generator(s)?;
    system.check_generator(t)?;
    if s == t {
        return Err(CoxeterError::SameGenerator);
    }
    let m = system
        .order(s, t)
        .ok_or(CoxeterError::InfiniteOrder(s, t))? as usize;
    let mut vertices = Vec::with_capacity(2 * m - 1);
    for len in 1..=m {
        vertices.push(system.normalize(&alternating(s, t, len))?);
    }
    for len in (1..m).rev() {
        vertices.push(system.normalize(&alternating(t, s, len))?);
    }
    Ok(DihedralPath { s, t, vertices })
}

/// Disjoint galleries between two elements at distance two, as words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordFamily {
    pub source: ReducedWord,
    pub target: ReducedWord,
    /// Common neighbour used to translate the family.
    pub center: ReducedWord,
    pub paths: Vec<Vec<ReducedWord>>,
}

impl WordFamily {
    /// Maps the family into a Cayley ball; `None` if a vertex lies outside.
    pub fn to_path_family(&self, ball: &CayleyBall) -> Option<PathFamily> {
        let paths = self
            .paths
            .iter()
            .map(|p| p.iter().map(|w| ball.id(w)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(PathFamily::new(
            ball.id(&self.source)?,
            ball.id(&self.target)?,
            paths,
            "coxeter-fan",
        ))
    }

    pub fn edge_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.paths.iter().map(|p| p.len() - 1).collect();
        v.sort_unstable();
        v
    }
}

/// `|S|` internally disjoint galleries from `w` to `w2`.
///
/// With the common neighbour `c` (ShortLex-least if there are two) moved to
/// the identity, the endpoints become generators `s` and `t`; the family is
/// `s - e - t`, `P(s,t)`, and `P(s,u) . P(u,t)` for every other generator
/// `u`, translated back by `c`.
pub fn coxeter_disjoint_fan(
    system: &CoxeterMatrix,
    w: &ReducedWord,
    w2: &ReducedWord,
) -> Result<WordFamily, CoxeterError> {
    if !system.is_two_finite() {
        return Err(CoxeterError::NotTwoFinite);
    }
    for x in [w, w2] {
        if let Some(&s) = x.letters().iter().find(|&&s| s as usize >= system.rank()) {
            return Err(CoxeterError::GeneratorOutOfRange(s as usize));
        }
    }
    let between = system.multiply(&system.inverse(w), w2);
    if between.len() != 2 {
        return Err(CoxeterError::NotDistanceTwo(between.len()));
    }
    let center = system
        .reduced_words(&between)
        .into_iter()
        .map(|word| system.times_generator(w, word[0]))
        .min()
        .expect("a length-two element has a reduced word");
    let back = system.inverse(&center);
    let s = system.multiply(&back, w).letters()[0] as usize;
    let t = system.multiply(&back, w2).letters()[0] as usize;

    let mut local: Vec<Vec<ReducedWord>> = Vec::with_capacity(system.rank());
    local.push(vec![
        system.generator(s)?,
        ReducedWord::identity(),
        system.generator(t)?,
    ]);
    local.push(dihedral_path(system, s, t)?.vertices);
    for u in (0..system.rank()).filter(|&u| u != s && u != t) {
        let mut p = dihedral_path(system, s, u)?.vertices;
        let q = dihedral_path(system, u, t)?.vertices;
        p.extend(q.into_iter().skip(1));
        local.push(p);
    }
    let paths = local
        .into_iter()
        .map(|p| p.iter().map(|x| system.multiply(&center, x)).collect())
        .collect();
    Ok(WordFamily {
        source: w.clone(),
        target: w2.clone(),
        center,
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(sys: &CoxeterMatrix, letters: &[usize]) -> ReducedWord {
        sys.normalize(letters).unwrap()
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(CoxeterMatrix::from_rows(&[vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![1, 3]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[]).is_err());
        let inf = CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(inf.order(0, 1), None);
        assert!(!inf.is_two_finite());
    }

    #[test]
    fn normal_forms_in_s4() {
        let a3 = CoxeterMatrix::type_a(3);
        assert_eq!(word(&a3, &[0, 0]), ReducedWord::identity());
        assert_eq!(word(&a3, &[0, 2, 0]).letters(), &[2]);
        assert_eq!(word(&a3, &[1, 0, 1]).letters(), &[0, 1, 0]);
        assert_eq!(word(&a3, &[2, 0]).letters(), &[0, 2]);
        assert!(matches!(
            a3.normalize(&[3]),
            Err(CoxeterError::GeneratorOutOfRange(3))
        ));
    }

    #[test]
    fn infinite_dihedral_words_never_shrink_by_braids() {
        let d = CoxeterMatrix::dihedral(None);
        let w = word(&d, &[0, 1, 0, 1, 0, 1]);
        assert_eq!(w.len(), 6);
        assert_eq!(word(&d, &[0, 1, 1, 0]), ReducedWord::identity());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ReducedWord::parse_letters("e").unwrap(), Vec::<usize>::new());
        assert_eq!(ReducedWord::parse_letters("s1s2s10").unwrap(), vec![0, 1, 9]);
        assert_eq!(ReducedWord::parse_letters("s1 s3").unwrap(), vec![0, 2]);
        assert!(ReducedWord::parse_letters("s0").is_err());
        assert!(ReducedWord::parse_letters("t1").is_err());
        let a3 = CoxeterMatrix::type_a(3);
        assert_eq!(format!("{}", word(&a3, &[1, 0, 1])), "s1s2s1");
        assert_eq!(format!("{}", ReducedWord::identity()), "e");
    }

    #[test]
    fn shortlex_order() {
        let a = ReducedWord(vec![1]);
        let b = ReducedWord(vec![0, 1]);
        assert!(a < b);
        assert!(ReducedWord(vec![0, 2]) < ReducedWord(vec![1, 0]));
    }

    #[test]
    fn s4_ball() {
        let ball = cayley_ball(&CoxeterMatrix::type_a(3), 6, 1000).unwrap();
        assert_eq!(ball.graph.vertex_count(), 24);
        assert_eq!(ball.graph.edge_count(), 36);
        assert_eq!(ball.graph.regular_degree(), Some(3));
        assert!(ball.graph.is_complete());
        let partial = cayley_ball(&CoxeterMatrix::type_a(3), 5, 1000).unwrap();
        assert_eq!(partial.graph.vertex_count(), 23);
        assert!(!partial.graph.is_complete());
    }

    #[test]
    fn ball_cap() {
        assert_eq!(
            cayley_ball(&CoxeterMatrix::affine_a(2), 10, 50).unwrap_err(),
            CoxeterError::TooManyVertices(50)
        );
    }

    #[test]
    fn affine_ball_radius_two() {
        let ball = cayley_ball(&CoxeterMatrix::affine_a(2), 2, 1000).unwrap();
        assert_eq!(ball.graph.vertex_count(), 10);
        assert!(!ball.graph.is_complete());
    }

    #[test]
    fn infinite_dihedral_ball_is_path() {
        let ball = cayley_ball(&CoxeterMatrix::dihedral(None), 3, 1000).unwrap();
        let g = &ball.graph;
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_connected());
        assert_eq!(g.max_degree(), 2);
        assert!(!g.is_complete());
    }

    #[test]
    fn dihedral_paths() {
        let a3 = CoxeterMatrix::type_a(3);
        let p = dihedral_path(&a3, 0, 1).unwrap();
        let shown: Vec<String> = p.vertices.iter().map(|w| format!("{w}")).collect();
        assert_eq!(shown, ["s1", "s1s2", "s1s2s1", "s2s1", "s2"]);
        assert_eq!(p.edge_count(), 4);
        let p = dihedral_path(&a3, 0, 2).unwrap();
        let shown: Vec<String> = p.vertices.iter().map(|w| format!("{w}")).collect();
        assert_eq!(shown, ["s1", "s1s3", "s3"]);
        assert_eq!(
            dihedral_path(&CoxeterMatrix::dihedral(None), 0, 1),
            Err(CoxeterError::InfiniteOrder(0, 1))
        );
        assert_eq!(dihedral_path(&a3, 1, 1), Err(CoxeterError::SameGenerator));
    }

    #[test]
    fn fan_lengths() {
        let a3 = CoxeterMatrix::type_a(3);
        let s1 = word(&a3, &[0]);
        let s2 = word(&a3, &[1]);
        let s3 = word(&a3, &[2]);
        assert_eq!(coxeter_disjoint_fan(&a3, &s1, &s2).unwrap().edge_lengths(), [2, 4, 6]);
        assert_eq!(coxeter_disjoint_fan(&a3, &s1, &s3).unwrap().edge_lengths(), [2, 2, 8]);
        let i4 = CoxeterMatrix::dihedral(Some(4));
        let f = coxeter_disjoint_fan(&i4, &word(&i4, &[0]), &word(&i4, &[1])).unwrap();
        assert_eq!(f.edge_lengths(), [2, 6]);
    }

    #[test]
    fn fan_errors() {
        let a3 = CoxeterMatrix::type_a(3);
        let e = ReducedWord::identity();
        let s1 = word(&a3, &[0]);
        assert_eq!(
            coxeter_disjoint_fan(&a3, &e, &s1),
            Err(CoxeterError::NotDistanceTwo(1))
        );
        let far = word(&a3, &[0, 1, 2]);
        assert_eq!(
            coxeter_disjoint_fan(&a3, &e, &far),
            Err(CoxeterError::NotDistanceTwo(3))
        );
        let d = CoxeterMatrix::dihedral(None);
        assert_eq!(
            coxeter_disjoint_fan(&d, &word(&d, &[0]), &word(&d, &[1])),
            Err(CoxeterError::NotTwoFinite)
        );
    }

    #[test]
    fn fan_translates_by_least_common_neighbour() {
        let a3 = CoxeterMatrix::type_a(3);
        // s1s3 and e are both adjacent to s1 and s3; e is ShortLex-least
        let f = coxeter_disjoint_fan(&a3, &word(&a3, &[0]), &word(&a3, &[2])).unwrap();
        assert_eq!(f.center, ReducedWord::identity());
        let w = word(&a3, &[1, 0]);
        let w2 = word(&a3, &[1, 2]);
        let f = coxeter_disjoint_fan(&a3, &w, &w2).unwrap();
        assert_eq!(f.center, word(&a3, &[1]));
        for p in &f.paths {
            assert_eq!(p[0], w);
            assert_eq!(p[p.len() - 1], w2);
        }
    }
}
