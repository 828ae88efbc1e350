//! Finite-dimensional F_p[C_p]-modules given by the matrix of a generator
//! `t`: Jordan decomposition, cohomology of C_p, diagonal tensor products,
//! and the permutation-module test.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Fp, NotPrime};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error(transparent)]
    NotPrime(#[from] NotPrime),
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("the action does not satisfy t^p = 1")]
    NotOrderP,
    #[error("modules over different primes ({0} and {1})")]
    PrimeMismatch(u32, u32),
    #[error("a block of size {size} does not exist for p = {p}")]
    BlockSize { size: usize, p: u32 },
}

/// A dense square matrix over F_p, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    field: Fp,
    n: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(field: Fp, n: usize) -> Self {
        FpMatrix {
            field,
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced mod p; negative entries are allowed.
    pub fn from_rows(field: Fp, rows: &[Vec<i64>]) -> Result<Self, ModuleError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(ModuleError::NotSquare { rows: n, row, cols: r.len() });
            }
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Ok(FpMatrix { field, n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let f = self.field;
        let mut out = Self::zero(f, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != 0 {
                        let o = &mut out.data[i * n + j];
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        FpMatrix { field: f, n: self.n, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        FpMatrix { field: f, n: self.n, data }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut out = Self::identity(self.field, self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn rank(&self) -> usize {
        let f = self.field;
        let n = self.n;
        let mut a = self.data.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| a[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                a.swap(rank * n + j, piv * n + j);
            }
            let inv = f.inv(a[rank * n + col]);
            for j in 0..n {
                a[rank * n + j] = f.mul(a[rank * n + j], inv);
            }
            for r in 0..n {
                let c = a[r * n + col];
                if r != rank && c != 0 {
                    for j in 0..n {
                        let v = f.mul(c, a[rank * n + j]);
                        a[r * n + j] = f.sub(a[r * n + j], v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Option<Self> {
        let f = self.field;
        let n = self.n;
        let w = 2 * n;
        let mut a = vec![0u32; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(&self.data[i * n..(i + 1) * n]);
            a[i * w + n + i] = 1;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * w + col] != 0)?;
            for j in 0..w {
                a.swap(col * w + j, piv * w + j);
            }
            let inv = f.inv(a[col * w + col]);
            for j in 0..w {
                a[col * w + j] = f.mul(a[col * w + j], inv);
            }
            for r in 0..n {
                let c = a[r * w + col];
                if r != col && c != 0 {
                    for j in 0..w {
                        let v = f.mul(c, a[col * w + j]);
                        a[r * w + j] = f.sub(a[r * w + j], v);
                    }
                }
            }
        }
        let mut out = Self::zero(f, n);
        for i in 0..n {
            out.data[i * n..(i + 1) * n].copy_from_slice(&a[i * w + n..(i + 1) * w]);
        }
        Some(out)
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let f = self.field;
        let (n, m) = (self.n, other.n);
        let size = n * m;
        let mut out = Self::zero(f, size);
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                if a == 0 {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * size + j * m + l] = f.mul(a, other.data[k * m + l]);
                    }
                }
            }
        }
        out
    }

    pub fn block_diagonal(&self, other: &Self) -> Self {
        let (n, m) = (self.n, other.n);
        let size = n + m;
        let mut out = Self::zero(self.field, size);
        for i in 0..n {
            out.data[i * size..i * size + n].copy_from_slice(&self.data[i * n..(i + 1) * n]);
        }
        for i in 0..m {
            let row = (n + i) * size + n;
            out.data[row..row + m].copy_from_slice(&other.data[i * m..(i + 1) * m]);
        }
        out
    }
}

/// An F_p[C_p]-module: an F_p vector space with the action of a generator
/// `t` satisfying `t^p = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpModule {
    action: FpMatrix,
}

impl CpModule {
    pub fn new(action: FpMatrix) -> Result<Self, ModuleError> {
        let p = action.field.characteristic() as u64;
        if action.pow(p) != FpMatrix::identity(action.field, action.n) {
            return Err(ModuleError::NotOrderP);
        }
        Ok(CpModule { action })
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self, ModuleError> {
        Self::new(FpMatrix::from_rows(Fp::new(p as u64)?, rows)?)
    }

    pub fn trivial(p: u32, dim: usize) -> Result<Self, ModuleError> {
        Ok(CpModule {
            action: FpMatrix::identity(Fp::new(p as u64)?, dim),
        })
    }

    /// The regular representation: `t` cyclically permutes a basis of size p.
    pub fn regular(p: u32) -> Result<Self, ModuleError> {
        let f = Fp::new(p as u64)?;
        let n = p as usize;
        let mut m = FpMatrix::zero(f, n);
        for i in 0..n {
            m.data[((i + 1) % n) * n + i] = 1;
        }
        Ok(CpModule { action: m })
    }

    /// Free of the given rank.
    pub fn free(p: u32, rank: usize) -> Result<Self, ModuleError> {
        let mut out = Self::trivial(p, 0)?;
        for _ in 0..rank {
            out = out.direct_sum(&Self::regular(p)?)?;
        }
        Ok(out)
    }

    /// The indecomposable module with a single Jordan block of size `size`.
    pub fn jordan_block(p: u32, size: usize) -> Result<Self, ModuleError> {
        if size == 0 || size > p as usize {
            return Err(ModuleError::BlockSize { size, p });
        }
        let f = Fp::new(p as u64)?;
        let mut m = FpMatrix::identity(f, size);
        for i in 0..size - 1 {
            m.data[i * size + i + 1] = 1;
        }
        Ok(CpModule { action: m })
    }

    pub fn p(&self) -> u32 {
        self.action.field.characteristic()
    }

    pub fn dim(&self) -> usize {
        self.action.n
    }

    pub fn action(&self) -> &FpMatrix {
        &self.action
    }

    fn same_prime(&self, other: &Self) -> Result<(), ModuleError> {
        if self.p() != other.p() {
            return Err(ModuleError::PrimeMismatch(self.p(), other.p()));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModuleError> {
        self.same_prime(other)?;
        Ok(CpModule {
            action: self.action.block_diagonal(&other.action),
        })
    }

    /// The same module in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &FpMatrix) -> Option<Self> {
        let inv = basis.inverse()?;
        Some(CpModule {
            action: inv.mul(&self.action).mul(basis),
        })
    }

    /// `t - 1`.
    pub fn augmentation(&self) -> FpMatrix {
        self.action.sub(&FpMatrix::identity(self.action.field, self.dim()))
    }

    /// The trace map `N = 1 + t + ... + t^(p-1)`.
    pub fn norm(&self) -> FpMatrix {
        let f = self.action.field;
        let mut acc = FpMatrix::zero(f, self.dim());
        let mut power = FpMatrix::identity(f, self.dim());
        for _ in 0..self.p() {
            acc = acc.add(&power);
            power = power.mul(&self.action);
        }
        acc
    }
}

impl fmt::Display for CpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[C_{}]-module of dimension {}", self.p(), self.p(), self.dim())
    }
}

/// Jordan structure of `t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    p: u32,
    /// `counts[k - 1]` blocks of size `k`, for `k = 1..=p`.
    counts: Vec<usize>,
}

impl Decomposition {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn count(&self, size: usize) -> usize {
        if size == 0 {
            return 0;
        }
        self.counts.get(size - 1).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Block sizes, largest first.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for size in (1..=self.counts.len()).rev() {
            out.extend(core::iter::repeat_n(size, self.counts[size - 1]));
        }
        out
    }

    pub fn free_rank(&self) -> usize {
        self.count(self.p as usize)
    }

    pub fn trivial_rank(&self) -> usize {
        self.count(1)
    }

    pub fn dim(&self) -> usize {
        self.counts.iter().enumerate().map(|(k, c)| (k + 1) * c).sum()
    }
}

/// Block sizes from `r_k = rank (t-1)^k`: there are `r_{k-1} - r_k` blocks of
/// size at least `k`.
pub fn decompose(m: &CpModule) -> Decomposition {
    let p = m.p() as usize;
    let a = m.augmentation();
    let mut ranks = Vec::with_capacity(p + 2);
    let mut power = FpMatrix::identity(a.field, m.dim());
    for _ in 0..=p + 1 {
        ranks.push(power.rank());
        power = power.mul(&a);
    }
    let at_least: Vec<usize> = (1..=p + 1).map(|k| ranks[k - 1] - ranks[k]).collect();
    let counts = (0..p).map(|k| at_least[k] - at_least[k + 1]).collect();
    Decomposition { p: m.p(), counts }
}

/// `dim H^i(BC_p; M)` for `i = 0..=max_degree`.
pub fn cohomology_dims(m: &CpModule, max_degree: usize) -> Vec<usize> {
    let n = m.dim();
    let rank_a = m.augmentation().rank();
    let rank_n = m.norm().rank();
    let ker_a = n - rank_a;
    let ker_n = n - rank_n;
    (0..=max_degree)
        .map(|i| match i {
            0 => ker_a,
            i if i % 2 == 1 => ker_n - rank_a,
            _ => ker_a - rank_n,
        })
        .collect()
}

/// `M1 (x) M2` with `t` acting diagonally.
pub fn tensor_diagonal(m1: &CpModule, m2: &CpModule) -> Result<CpModule, ModuleError> {
    m1.same_prime(m2)?;
    Ok(CpModule {
        action: m1.action.kronecker(&m2.action),
    })
}

/// All Jordan blocks have size 1 or p, i.e. the module is a sum of trivial and
/// free summands.
pub fn is_permutation_module(m: &CpModule) -> bool {
    let d = decompose(m);
    (2..m.p() as usize).all(|k| d.count(k) == 0)
}
