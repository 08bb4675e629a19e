//! Internally disjoint galleries between maximal chains at distance two.
//!
//! Chains are handled here with both ends attached: `x[0]` is the bottom,
//! `x[n]` the top, and `x[k]` the rank `k` element. For every rank `r` the
//! construction lists candidate galleries whose first step changes rank `r`
//! and which only ever touch ranks `r`, `i1`, `i2`, in a fixed canonical
//! order. The first `q` candidates that are valid galleries and avoid every
//! chamber already used are kept.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{GeometricLattice, LatticeChambers, LatticeError};
use crate::connectivity::{verify_disjoint_family, PathFamily};

/// Where two chains at distance two differ, and their common neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTwoWitness {
    pub i1: usize,
    pub i2: usize,
    /// Chamber id of the common neighbour that differs from the (possibly
    /// swapped) first chain at rank `i1`.
    pub b: usize,
    /// True when the roles of the two chains had to be exchanged.
    pub swapped: bool,
}

type Chain = Vec<usize>;

fn full_chain(lattice: &GeometricLattice, proper: &[usize]) -> Chain {
    let mut c = Vec::with_capacity(proper.len() + 2);
    c.push(lattice.bottom());
    c.extend_from_slice(proper);
    c.push(lattice.top());
    c
}

fn is_chain(lattice: &GeometricLattice, c: &[usize]) -> bool {
    c.windows(2).all(|w| lattice.covers(w[0], w[1]))
}

pub fn distance2_witness(
    lattice: &GeometricLattice,
    chambers: &LatticeChambers,
    c: usize,
    d: usize,
) -> Result<DistanceTwoWitness, LatticeError> {
    for id in [c, d] {
        if id >= chambers.chains.len() {
            return Err(LatticeError::ChamberOutOfRange(id));
        }
    }
    let x = full_chain(lattice, &chambers.chains[c]);
    let y = full_chain(lattice, &chambers.chains[d]);
    let diff: Vec<usize> = (1..x.len() - 1).filter(|&k| x[k] != y[k]).collect();
    let [i1, i2] = diff[..] else {
        return Err(LatticeError::NotDistanceTwo);
    };
    let mut b = x.clone();
    b[i1] = y[i1];
    if is_chain(lattice, &b) {
        let b = chambers.id(&b[1..b.len() - 1]).expect("valid chain");
        return Ok(DistanceTwoWitness {
            i1,
            i2,
            b,
            swapped: false,
        });
    }
    let mut b = y.clone();
    b[i1] = x[i1];
    if is_chain(lattice, &b) {
        let b = chambers.id(&b[1..b.len() - 1]).expect("valid chain");
        return Ok(DistanceTwoWitness {
            i1,
            i2,
            b,
            swapped: true,
        });
    }
    Err(LatticeError::NotDistanceTwo)
}

/// The constructed family, grouped by the rank changed on the first step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePaths {
    pub family: PathFamily,
    /// `first_rank[k]` labels the edge of path `k` leaving the chain the
    /// construction starts from: the source, or the target when
    /// `witness.swapped` is set.
    pub first_rank: Vec<usize>,
    pub q: usize,
    pub witness: DistanceTwoWitness,
    /// Whether some path passes through the common neighbour.
    pub uses_b: bool,
}

struct Builder<'a> {
    l: &'a GeometricLattice,
    x: Chain,
    y: Chain,
    i1: usize,
    i2: usize,
}

impl Builder<'_> {
    /// `C` with the listed ranks replaced.
    fn c(&self, changes: &[(usize, usize)]) -> Chain {
        let mut c = self.x.clone();
        for &(k, e) in changes {
            c[k] = e;
        }
        c
    }

    fn d(&self) -> Chain {
        self.y.clone()
    }

    fn iv(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.l.open_interval(lo, hi)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.l.join(a, b)
    }

    fn candidates(&self, r: usize) -> Vec<Vec<Chain>> {
        let (x, y, i1, i2) = (&self.x, &self.y, self.i1, self.i2);
        let (x1, y1, x2, y2) = (x[i1], y[i1], x[i2], y[i2]);
        let cc = self.c(&[]);
        let dd = self.d();
        let mut out = Vec::new();
        if r + 1 < i1 || (r > i1 + 1 && r + 1 < i2) || r > i2 + 1 {
            // far from both differences
            for z in self.iv(x[r - 1], x[r + 1]) {
                if z != x[r] {
                    out.push(vec![
                        cc.clone(),
                        self.c(&[(r, z)]),
                        self.c(&[(r, z), (i1, y1)]),
                        self.c(&[(r, z), (i1, y1), (i2, y2)]),
                        dd.clone(),
                    ]);
                }
            }
        } else if r + 1 == i1 {
            for z in self.iv(x[r - 1], x1) {
                for w in self.iv(x[r - 1], y1) {
                    if z == x[r] || w == x[r] {
                        continue;
                    }
                    let zw = self.join(z, w);
                    out.push(vec![
                        cc.clone(),
                        self.c(&[(r, z)]),
                        self.c(&[(r, z), (i1, zw)]),
                        self.c(&[(r, w), (i1, zw)]),
                        self.c(&[(r, w), (i1, y1)]),
                        self.c(&[(r, w), (i1, y1), (i2, y2)]),
                        dd.clone(),
                    ]);
                }
            }
        } else if r == i1 {
            out.push(vec![cc.clone(), self.c(&[(i1, y1)]), dd.clone()]);
            if i2 > i1 + 1 {
                for z in self.iv(x[r - 1], x[r + 1]) {
                    if z != x1 && z != y1 {
                        out.push(vec![
                            cc.clone(),
                            self.c(&[(r, z)]),
                            self.c(&[(r, z), (i2, y2)]),
                            dd.clone(),
                        ]);
                    }
                }
            } else {
                // i2 = i1 + 1: detour through a second element m above y1
                for z in self.iv(x[i1 - 1], x2) {
                    if z == x1 || z == y1 {
                        continue;
                    }
                    for m in self.iv(y1, x[i2 + 1]) {
                        if m == x2 || m == y2 {
                            continue;
                        }
                        for v in self.iv(x[i1 - 1], m) {
                            if v == y1 {
                                continue;
                            }
                            let zv = self.join(z, v);
                            out.push(vec![
                                cc.clone(),
                                self.c(&[(i1, z)]),
                                self.c(&[(i1, z), (i2, zv)]),
                                self.c(&[(i1, v), (i2, zv)]),
                                self.c(&[(i1, v), (i2, m)]),
                                self.c(&[(i1, y1), (i2, m)]),
                                dd.clone(),
                            ]);
                        }
                    }
                }
            }
        } else if r == i1 + 1 && r + 1 == i2 {
            let xi = x[r];
            for z in self.iv(x1, x2) {
                if z == xi {
                    continue;
                }
                for t in self.iv(x[i1 - 1], z) {
                    if t == x1 {
                        continue;
                    }
                    let a = self.join(t, y1);
                    for w in self.iv(y1, y2) {
                        if w == xi {
                            continue;
                        }
                        let m = self.join(a, w);
                        out.push(vec![
                            cc.clone(),
                            self.c(&[(r, z)]),
                            self.c(&[(i1, t), (r, z)]),
                            self.c(&[(i1, t), (r, a)]),
                            self.c(&[(i1, y1), (r, a)]),
                            self.c(&[(i1, y1), (r, a), (i2, m)]),
                            self.c(&[(i1, y1), (r, w), (i2, m)]),
                            self.c(&[(i1, y1), (r, w), (i2, y2)]),
                            dd.clone(),
                        ]);
                    }
                }
            }
            // second template, tried only if the first runs short
            for w in self.iv(y1, y2) {
                for z in self.iv(x1, x2) {
                    if w == xi || z == xi {
                        continue;
                    }
                    for u in self.iv(x[i1 - 1], w) {
                        if u == y1 {
                            continue;
                        }
                        let a = self.join(x1, u);
                        let zu = self.join(z, u);
                        out.push(vec![
                            cc.clone(),
                            self.c(&[(r, z)]),
                            self.c(&[(r, z), (i2, zu)]),
                            self.c(&[(r, a), (i2, zu)]),
                            self.c(&[(i1, u), (r, a), (i2, zu)]),
                            self.c(&[(i1, u), (r, a), (i2, y2)]),
                            self.c(&[(i1, u), (r, w), (i2, y2)]),
                            self.c(&[(i1, y1), (r, w), (i2, y2)]),
                            dd.clone(),
                        ]);
                    }
                }
            }
        } else if r == i2 && r == i1 + 1 {
            for w in self.iv(x[i1 - 1], y2) {
                if w == y1 {
                    continue;
                }
                let xw = self.join(x1, w);
                out.push(vec![
                    cc.clone(),
                    self.c(&[(i2, xw)]),
                    self.c(&[(i1, w), (i2, xw)]),
                    self.c(&[(i1, w), (i2, y2)]),
                    dd.clone(),
                ]);
            }
        } else if r == i1 + 1 {
            // r + 1 < i2: pivot through a third element t at rank i1
            for &t in self.l.poset().covers_up(x[i1 - 1]) {
                if t == x1 || t == y1 || !self.l.leq(t, x[r + 1]) {
                    continue;
                }
                let z = self.join(x1, t);
                let w = self.join(t, y1);
                out.push(vec![
                    cc.clone(),
                    self.c(&[(r, z)]),
                    self.c(&[(i1, t), (r, z)]),
                    self.c(&[(i1, t), (r, w)]),
                    self.c(&[(i1, y1), (r, w)]),
                    self.c(&[(i1, y1), (r, w), (i2, y2)]),
                    dd.clone(),
                ]);
            }
        } else if r + 1 == i2 {
            // i1 + 1 < r
            let xi = x[r];
            for z in self.iv(x[r - 1], x2) {
                for w in self.iv(x[r - 1], y2) {
                    if z == xi || w == xi {
                        continue;
                    }
                    let zw = self.join(z, w);
                    out.push(vec![
                        cc.clone(),
                        self.c(&[(r, z)]),
                        self.c(&[(r, z), (i2, zw)]),
                        self.c(&[(r, w), (i2, zw)]),
                        self.c(&[(r, w), (i2, y2)]),
                        self.c(&[(r, w), (i2, y2), (i1, y1)]),
                        dd.clone(),
                    ]);
                }
            }
        } else if r == i2 + 1 {
            // pivot through a third element t at rank i2 above y[i2 - 1]
            for &t in self.l.poset().covers_up(y[i2 - 1]) {
                if t == x2 || t == y2 || !self.l.leq(t, x[r + 1]) {
                    continue;
                }
                let z = self.join(x2, t);
                let w = self.join(t, y2);
                out.push(vec![
                    cc.clone(),
                    self.c(&[(r, z)]),
                    self.c(&[(i1, y1), (r, z)]),
                    self.c(&[(i1, y1), (i2, t), (r, z)]),
                    self.c(&[(i1, y1), (i2, t), (r, w)]),
                    self.c(&[(i1, y1), (i2, y2), (r, w)]),
                    dd.clone(),
                ]);
            }
        } else {
            // r = i2 > i1 + 1
            out.push(vec![cc.clone(), self.c(&[(i2, y2)]), dd.clone()]);
            for z in self.iv(x[i2 - 1], x[i2 + 1]) {
                if z != x2 && z != y2 {
                    out.push(vec![
                        cc.clone(),
                        self.c(&[(i2, z)]),
                        self.c(&[(i2, z), (i1, y1)]),
                        dd.clone(),
                    ]);
                }
            }
        }
        out
    }

    /// A candidate is usable if it is a gallery of maximal chains starting
    /// with a rank `r` step, never repeats a chamber, changes only ranks in
    /// `{r, i1, i2}`, and misses every chamber in `used`.
    fn usable(&self, r: usize, path: &[Chain], used: &BTreeSet<Chain>) -> bool {
        let allowed = |k: usize| k == r || k == self.i1 || k == self.i2;
        if path.iter().any(|c| !is_chain(self.l, c)) {
            return false;
        }
        for (step, w) in path.windows(2).enumerate() {
            let changed: Vec<usize> = (1..w[0].len() - 1).filter(|&k| w[0][k] != w[1][k]).collect();
            if changed.len() != 1 || (step == 0 && changed[0] != r) {
                return false;
            }
        }
        let inner = &path[1..path.len() - 1];
        let mut seen = BTreeSet::new();
        inner.iter().all(|c| {
            *c != self.x
                && *c != self.y
                && !used.contains(c)
                && seen.insert(c.clone())
                && (1..c.len() - 1).all(|k| c[k] == self.x[k] || allowed(k))
        })
    }
}

/// `q(n - 1)` internally disjoint galleries between two chambers at
/// distance two, `q` for each rank changed first.
pub fn lattice_disjoint_paths(
    lattice: &GeometricLattice,
    chambers: &LatticeChambers,
    c: usize,
    d: usize,
) -> Result<LatticePaths, LatticeError> {
    let q = super::q_of_lattice(lattice)?.q;
    let witness = distance2_witness(lattice, chambers, c, d)?;
    let (from, to) = if witness.swapped { (d, c) } else { (c, d) };
    let builder = Builder {
        l: lattice,
        x: full_chain(lattice, &chambers.chains[from]),
        y: full_chain(lattice, &chambers.chains[to]),
        i1: witness.i1,
        i2: witness.i2,
    };
    let n = lattice.rank();
    let mut used: BTreeSet<Chain> = BTreeSet::new();
    let mut paths = Vec::new();
    let mut first_rank = Vec::new();
    for r in 1..n {
        let mut found = 0;
        for candidate in builder.candidates(r) {
            if found == q {
                break;
            }
            if builder.usable(r, &candidate, &used) {
                used.extend(candidate[1..candidate.len() - 1].iter().cloned());
                let mut ids: Vec<usize> = candidate
                    .iter()
                    .map(|ch| chambers.id(&ch[1..ch.len() - 1]).expect("validated chain"))
                    .collect();
                if witness.swapped {
                    ids.reverse();
                }
                paths.push(ids);
                first_rank.push(r);
                found += 1;
            }
        }
        if found < q {
            return Err(LatticeError::InternalOverlap {
                rank: r,
                found,
                needed: q,
            });
        }
    }
    let family = PathFamily::new(c, d, paths, "lattice-cases");
    if verify_disjoint_family(&chambers.graph, &family).is_err() {
        return Err(LatticeError::InternalOverlap {
            rank: 0,
            found: family.len(),
            needed: q * (n - 1),
        });
    }
    let uses_b = family.paths.iter().any(|p| p[1..p.len() - 1].contains(&witness.b));
    Ok(LatticePaths {
        family,
        first_rank,
        q,
        witness,
        uses_b,
    })
}
