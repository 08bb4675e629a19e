//! Arithmetic in prime fields and subspaces of `F_p^n` in reduced
//! row-echelon form.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("vector has length {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Primality by trial division; fields here are tiny.
    pub fn new(p: u32) -> Result<Self, FieldError> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(PrimeField { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn order(self) -> u32 {
        self.p
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        // a^(p-2)
        let mut result = 1u32;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Every vector of `F_p^n`, in lexicographic order.
    pub fn vectors(self, n: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; n]];
        for pos in 0..n {
            let mut next = Vec::with_capacity(out.len() * self.p as usize);
            for v in &out {
                for x in 0..self.p {
                    let mut w = v.clone();
                    w[pos] = x;
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }
}

/// Reduced row-echelon form of the row space of `rows`, zero rows dropped.
pub fn rref(field: PrimeField, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(pivot_row, found);
        let inv = field.inv(m[pivot_row][col]);
        for x in m[pivot_row].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..m.len() {
            if r != pivot_row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..cols {
                    let sub = field.mul(factor, m[pivot_row][c]);
                    m[r][c] = field.sub(m[r][c], sub);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}

/// A subspace of `F_p^n`, stored by its canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self, FieldError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(FieldError::Dimension {
                expected: ambient,
                got: v.len(),
            });
        }
        let reduced: Vec<Vec<u32>> = vectors.iter().map(|v| v.iter().map(|&x| x % field.order()).collect()).collect();
        Ok(Subspace {
            ambient,
            rows: rref(field, &reduced),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| u32::from(i == j)).collect())
            .collect();
        Subspace { ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn contains_vector(&self, field: PrimeField, v: &[u32]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(field, &rows).len() == self.rows.len()
    }

    pub fn contains(&self, field: PrimeField, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains_vector(field, v))
    }

    pub fn sum(&self, field: PrimeField, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace {
            ambient: self.ambient,
            rows: rref(field, &rows),
        }
    }

    /// Zassenhaus: row-reduce `[A | A ; B | 0]`; rows with a zero left half
    /// span the intersection.
    pub fn intersection(&self, field: PrimeField, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut block = Vec::new();
        for r in &self.rows {
            let mut row = r.clone();
            row.extend(r.iter().copied());
            block.push(row);
        }
        for r in &other.rows {
            let mut row = r.clone();
            row.extend(core::iter::repeat_n(0, n));
            block.push(row);
        }
        let reduced = rref(field, &block);
        let rows: Vec<Vec<u32>> = reduced
            .into_iter()
            .filter(|row| row[..n].iter().all(|&x| x == 0))
            .map(|row| row[n..].to_vec())
            .collect();
        Subspace {
            ambient: n,
            rows: rref(field, &rows),
        }
    }

    /// All vectors of the subspace, in lexicographic order.
    pub fn elements(&self, field: PrimeField) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for coeffs in field.vectors(self.dim()) {
            let mut v = vec![0u32; self.ambient];
            for (c, row) in coeffs.iter().zip(&self.rows) {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = field.add(*x, field.mul(*c, *r));
                }
            }
            out.push(v);
        }
        out.sort();
        out
    }
}

/// Number of `k`-dimensional subspaces of `F_p^n` (Gaussian binomial).
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (p as u128).pow((n - i) as u32) - 1;
        den *= (p as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All subspaces of `F_p^n` of dimension `k`, by direct RREF enumeration,
/// sorted by their basis matrices.
pub fn subspaces_of_dim(field: PrimeField, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    choose_pivots(n, k, 0, &mut pivots, &mut |pivots| {
        // free cells: row i, column c > pivots[i], c not a pivot
        let cells: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                (pivots[i] + 1..n)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        for values in field.vectors(cells.len()) {
            let mut rows = vec![vec![0u32; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (&(i, c), &x) in cells.iter().zip(&values) {
                rows[i][c] = x;
            }
            out.push(Subspace { ambient: n, rows });
        }
    });
    out.sort();
    out
}

fn choose_pivots(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if current.len() == k {
        emit(current);
        return;
    }
    for c in start..n {
        current.push(c);
        choose_pivots(n, k, c + 1, current, emit);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn primality() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(4), Err(FieldError::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(0), Err(FieldError::NotPrime(0)));
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    // brute force: spans of all k-tuples of vectors
    fn brute_subspaces(field: PrimeField, n: usize, k: usize) -> BTreeSet<Subspace> {
        let vs = field.vectors(n);
        let mut out = BTreeSet::new();
        let mut stack: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for basis in &stack {
                for v in &vs {
                    let mut b = basis.clone();
                    b.push(v.clone());
                    next.push(b);
                }
            }
            stack = next;
        }
        for b in stack {
            let s = Subspace::span(field, n, &b).unwrap();
            if s.dim() == k {
                out.insert(s);
            }
        }
        out
    }

    #[test]
    fn rref_enumeration_matches_spans() {
        for (n, p) in [(3, 2), (3, 3), (4, 2)] {
            let f = PrimeField::new(p).unwrap();
            for k in 0..=n {
                let listed = subspaces_of_dim(f, n, k);
                assert_eq!(listed.len() as u128, gaussian_binomial(n, k, p as u64));
                if n * k <= 8 {
                    let set: BTreeSet<Subspace> = listed.into_iter().collect();
                    assert_eq!(set, brute_subspaces(f, n, k));
                }
            }
        }
    }

    #[test]
    fn intersection_and_sum_dimensions() {
        let f = PrimeField::new(3).unwrap();
        let a = Subspace::span(f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let b = Subspace::span(f, 4, &[vec![0, 1, 0, 0], vec![0, 0, 1, 1], vec![0, 0, 0, 1]]).unwrap();
        let i = a.intersection(f, &b);
        let s = a.sum(f, &b);
        assert_eq!(i.dim() + s.dim(), a.dim() + b.dim());
        assert_eq!(i.dim(), 2);
        assert!(a.contains(f, &i) && b.contains(f, &i));
        // brute-force oracle for the intersection
        let ea: BTreeSet<_> = a.elements(f).into_iter().collect();
        let eb: BTreeSet<_> = b.elements(f).into_iter().collect();
        let common: Vec<_> = ea.intersection(&eb).cloned().collect();
        assert_eq!(i.elements(f), common);
    }
}
