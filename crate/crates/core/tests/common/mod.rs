//! Independent brute-force models used to check the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use gallery_core::complex::{ChamberGraph, Provenance};
use rand::Rng;

// ---- permutation models of Coxeter groups ----

/// One-line notation after applying the swaps of `word` to the identity
/// sequence of length `n`, i.e. right multiplication by adjacent swaps.
pub fn perm_of_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for &g in word {
        p.swap(g, g + 1);
    }
    p
}

/// Signed permutations of `n` letters: generators `0..n-1` swap adjacent
/// positions, generator `n - 1` negates the last entry.
pub fn signed_perm_of_word(n: usize, word: &[usize]) -> Vec<i64> {
    let mut p: Vec<i64> = (1..=n as i64).collect();
    for &g in word {
        if g + 1 < n {
            p.swap(g, g + 1);
        } else {
            p[n - 1] = -p[n - 1];
        }
    }
    p
}

pub fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

// ---- graphs ----

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> ChamberGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                edges.push((a, b, None));
            }
        }
    }
    ChamberGraph::from_edges(n, edges, Provenance::Generic).unwrap()
}

fn adjacency_masks(g: &ChamberGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Interiors (as bitmasks) of all induced `u`-`v` paths with at least one
/// interior vertex. Chords through the edge `uv` itself are ignored.
fn induced_path_interiors(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut path = vec![u];
    fn extend(adj: &[u64], v: usize, path: &mut Vec<usize>, out: &mut Vec<u64>) {
        let last = *path.last().unwrap();
        let on_path = path.iter().fold(0u64, |m, &x| m | 1 << x);
        let earlier = on_path & !(1 << last);
        for w in 0..adj.len() {
            if adj[last] >> w & 1 == 0 || on_path >> w & 1 == 1 {
                continue;
            }
            // w may only touch `last`, except that v may touch u
            let mut chords = adj[w] & earlier;
            if w == v {
                chords &= !(1 << path[0]);
            }
            if chords != 0 {
                continue;
            }
            if w == v {
                if path.len() > 1 {
                    out.push(on_path & !(1 << path[0]));
                }
            } else {
                path.push(w);
                extend(adj, v, path, out);
                path.pop();
            }
        }
    }
    extend(adj, v, &mut path, &mut out);
    out
}

/// Maximum number of internally disjoint `u`-`v` paths by exhaustive
/// packing. Any path can be shortened to an induced one on a subset of its
/// vertices, so packing induced paths loses nothing.
pub fn brute_disjoint_paths(g: &ChamberGraph, u: usize, v: usize) -> usize {
    let adj = adjacency_masks(g);
    let mut interiors = induced_path_interiors(&adj, u, v);
    interiors.sort_by_key(|m| m.count_ones());
    interiors.dedup();
    fn pack(paths: &[u64], start: usize, used: u64, count: usize, best: &mut usize, bound: usize) {
        *best = (*best).max(count);
        if *best == bound {
            return;
        }
        for i in start..paths.len() {
            if paths[i] & used == 0 {
                pack(paths, i + 1, used | paths[i], count + 1, best, bound);
            }
        }
    }
    let bound = g.degree(u).min(g.degree(v));
    let direct = usize::from(g.has_edge(u, v));
    let mut best = 0;
    pack(&interiors, 0, 0, 0, &mut best, bound - direct);
    best + direct
}

/// Smallest vertex set (plus the edge `uv`, counted as one) separating `u`
/// from `v`, by enumerating subsets in order of size.
pub fn brute_min_cut(g: &ChamberGraph, u: usize, v: usize) -> usize {
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let direct = usize::from(g.has_edge(u, v));
    let mut best = others.len();
    for mask in 0u32..(1 << others.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut removed = vec![false; n];
        for (i, &x) in others.iter().enumerate() {
            removed[x] = mask >> i & 1 == 1;
        }
        if !reaches_without_edge(g, u, v, &removed) {
            best = size;
        }
    }
    best + direct
}

/// Whether `v` is reachable from `u` avoiding `removed` and the edge `uv`.
pub fn reaches_without_edge(g: &ChamberGraph, u: usize, v: usize, removed: &[bool]) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if (x == u && y == v) || removed[y] || seen[y] {
                continue;
            }
            if y == v {
                return true;
            }
            seen[y] = true;
            queue.push_back(y);
        }
    }
    false
}

/// Whether every geodesic between two members of `set` stays inside it.
pub fn is_convex(g: &ChamberGraph, set: &BTreeSet<usize>) -> bool {
    let dist: BTreeMap<usize, Vec<Option<usize>>> =
        set.iter().map(|&a| (a, g.distances(a))).collect();
    for &a in set {
        for &b in set {
            let Some(dab) = dist[&a][b] else { return false };
            for x in 0..g.vertex_count() {
                let on_geodesic = match (dist[&a][x], dist[&b][x]) {
                    (Some(p), Some(q)) => p + q == dab,
                    _ => false,
                };
                if on_geodesic && !set.contains(&x) {
                    return false;
                }
            }
        }
    }
    true
}

// ---- finite fields and flags, via explicit vector sets ----

pub type VectorSet = BTreeSet<Vec<u32>>;

pub fn all_vectors(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// The set of all linear combinations of `gens`.
pub fn span_set(gens: &[Vec<u32>], n: usize, p: u32) -> VectorSet {
    let mut set: VectorSet = [vec![0; n]].into_iter().collect();
    for g in gens {
        let mut next = VectorSet::new();
        for v in &set {
            for c in 0..p {
                next.insert(v.iter().zip(g).map(|(a, b)| (a + c * b) % p).collect());
            }
        }
        set = next;
    }
    set
}

/// Complete flags of `F_p^n` as chains of vector sets, from all ordered
/// bases.
pub fn enumerate_flags(n: usize, p: u32) -> BTreeSet<Vec<VectorSet>> {
    let vectors = all_vectors(n, p);
    let mut flags = BTreeSet::new();
    let mut stack: Vec<(Vec<Vec<u32>>, Vec<VectorSet>)> = vec![(vec![], vec![])];
    while let Some((basis, chain)) = stack.pop() {
        if basis.len() + 1 == n {
            flags.insert(chain);
            continue;
        }
        let current = span_set(&basis, n, p);
        // one representative per next subspace keeps the search small
        let mut seen: BTreeSet<VectorSet> = BTreeSet::new();
        for v in &vectors {
            if current.contains(v) {
                continue;
            }
            let mut b = basis.clone();
            b.push(v.clone());
            let next = span_set(&b, n, p);
            if seen.insert(next.clone()) {
                let mut c = chain.clone();
                c.push(next);
                stack.push((b, c));
            }
        }
    }
    flags
}

// ---- explicit posets for local widths ----

/// Minimum of `|(x, y)| - 1` over all `x < y` with rank difference two.
pub fn min_length_two_width<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool, rank: impl Fn(&T) -> usize) -> usize {
    let mut best = usize::MAX;
    for x in elements {
        for y in elements {
            if rank(y) == rank(x) + 2 && leq(x, y) {
                let inside = elements
                    .iter()
                    .filter(|z| rank(z) == rank(x) + 1 && leq(x, z) && leq(z, y))
                    .count();
                best = best.min(inside - 1);
            }
        }
    }
    best
}

/// Set partitions of `0..n` as sorted lists of sorted blocks.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for x in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// `a` refines `b`.
pub fn refines(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    a.iter().all(|block| b.iter().any(|big| block.iter().all(|x| big.contains(x))))
}

/// All subspaces of `F_p^n` as vector sets.
pub fn all_subspaces(n: usize, p: u32) -> Vec<VectorSet> {
    let vectors = all_vectors(n, p);
    let mut found: BTreeSet<VectorSet> = BTreeSet::new();
    let mut frontier = vec![span_set(&[], n, p)];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if s.contains(v) {
                continue;
            }
            let gens: Vec<Vec<u32>> = s.iter().cloned().chain([v.clone()]).collect();
            let t = span_set(&gens, n, p);
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    found.into_iter().collect()
}

pub fn dim_of(s: &VectorSet, p: u32) -> usize {
    let mut d = 0;
    while (p as usize).pow(d as u32) < s.len() {
        d += 1;
    }
    d
}
