//! Dense matrices and nullspaces over `Q[t]/(h)` with branch splitting.

use std::fmt::Debug;

use super::{Inversion, ModulusBranch, Poly, QuotientRing, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + Debug> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix rows");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: E) {
        self.data[r * self.cols + c] = e;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<F: Clone + Debug>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn permute_rows(&self, order: &[usize]) -> Matrix<E> {
        Matrix::from_fn(order.len(), self.cols, |r, c| self.get(order[r], c).clone())
    }

    pub fn mul_vec<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect()
    }
}

/// Nullspace data valid on every root of `branch`'s modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullspaceBranch {
    pub branch: ModulusBranch,
    pub rank: usize,
    pub dim: usize,
    /// Reduced representatives of a basis of the kernel.
    pub basis: Vec<Vec<Poly>>,
}

enum Elimination {
    Done { rank: usize, basis: Vec<Vec<Poly>> },
    Split(ModulusBranch, ModulusBranch),
}

/// Row reduction over `ring`, pivoting on the first nonzero entry of each
/// column (columns left to right, rows top to bottom).
fn eliminate(ring: &QuotientRing, m: &Matrix<Poly>) -> Elimination {
    let mut a = m.map(|e| ring.reduce(e));
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots: Vec<usize> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let Some(r) = (prow..rows).find(|&r| !ring.is_zero(a.get(r, col))) else {
            continue;
        };
        let inv = match ring.invert(a.get(r, col)) {
            Ok(Inversion::Inverse(inv)) => inv,
            Ok(Inversion::Split(x, y)) => return Elimination::Split(x, y),
            Err(_) => unreachable!("pivot was tested nonzero"),
        };
        if r != prow {
            for c in 0..cols {
                a.data.swap(r * cols + c, prow * cols + c);
            }
        }
        for c in col..cols {
            let v = ring.mul(a.get(prow, c), &inv);
            a.set(prow, c, v);
        }
        for rr in 0..rows {
            if rr == prow || ring.is_zero(a.get(rr, col)) {
                continue;
            }
            let factor = a.get(rr, col).clone();
            for c in col..cols {
                let v = ring.sub(a.get(rr, c), &ring.mul(&factor, a.get(prow, c)));
                a.set(rr, c, v);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Poly::zero(); cols];
            v[f] = Poly::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a.get(i, f);
            }
            v
        })
        .collect();
    Elimination::Done {
        rank: pivots.len(),
        basis,
    }
}

/// Kernel of `m` over `ring`, forking whenever a pivot is a zero divisor.
/// Results are sorted by modulus so the output is deterministic.
pub fn nullspace(ring: &QuotientRing, m: &Matrix<Poly>) -> Vec<NullspaceBranch> {
    let mut out = Vec::new();
    let mut work = vec![ring.clone()];
    while let Some(r) = work.pop() {
        match eliminate(&r, m) {
            Elimination::Done { rank, basis } => out.push(NullspaceBranch {
                branch: r.branch().clone(),
                rank,
                dim: m.cols() - rank,
                basis,
            }),
            Elimination::Split(a, b) => {
                work.push(r.restrict(&b));
                work.push(r.restrict(&a));
            }
        }
    }
    out.sort_by(|a, b| a.branch.modulus().canonical_cmp(b.branch.modulus()));
    out
}
