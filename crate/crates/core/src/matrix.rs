//! Small dense integer matrices for exact group arithmetic on lattices.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Square integer matrix acting on column vectors, row-major storage.
///
/// Weyl group elements are stored as their matrix action on the coweight
/// lattice in the fundamental-coweight basis, so equality and hashing of
/// group elements reduce to equality and hashing of these matrices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat {
    n: usize,
    a: Vec<i64>,
}

impl IntMat {
    pub fn zero(n: usize) -> Self {
        IntMat { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut m = IntMat::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.a[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMat {
            n,
            a: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.a[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.a
            .iter()
            .enumerate()
            .all(|(k, &v)| v == i64::from(k / self.n == k % self.n))
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n, "matrix dimensions must agree");
        let n = self.n;
        let mut out = IntMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let lik = self.a[i * n + k];
                if lik == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += lik * rhs.a[k * n + j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, v.len(), "vector dimension must agree");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Computes `self^T * v` without materializing the transpose.
    pub fn transpose_mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, v.len(), "vector dimension must agree");
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            let vi = v[i];
            if vi == 0 {
                continue;
            }
            for j in 0..self.n {
                out[j] += self.get(i, j) * vi;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn pow(&self, mut e: u64) -> IntMat {
        let mut base = self.clone();
        let mut acc = IntMat::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> i128 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<i128> = self.a.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k * n + k] == 0 {
                let Some(r) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                    return 0;
                };
                for c in 0..n {
                    m.swap(k * n + c, r * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
                }
                m[i * n + k] = 0;
            }
            prev = m[k * n + k];
        }
        sign * m[(n - 1) * n + (n - 1)]
    }

    /// Adjugate matrix, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> IntMat {
        let n = self.n;
        if n == 0 {
            return IntMat::zero(0);
        }
        if n == 1 {
            return IntMat::identity(1);
        }
        let minor_det = |row: usize, col: usize| -> i128 {
            let sub = IntMat::from_fn(n - 1, |i, j| {
                let si = if i < row { i } else { i + 1 };
                let sj = if j < col { j } else { j + 1 };
                self.get(si, sj)
            });
            sub.det()
        };
        IntMat::from_fn(n, |i, j| {
            let sign = if (i + j) % 2 == 0 { 1i128 } else { -1i128 };
            let v = sign * minor_det(j, i);
            i64::try_from(v).expect("adjugate entry exceeds i64")
        })
    }

    /// Exact inverse for matrices with determinant `+/-1`.
    pub fn inverse_unimodular(&self) -> Option<IntMat> {
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let adj = self.adjugate();
        let s = d as i64;
        Some(IntMat::from_fn(self.n, |i, j| s * adj.get(i, j)))
    }

    /// Characteristic polynomial coefficients `c_0..=c_n` (ascending powers,
    /// monic) via the Faddeev-LeVerrier recursion; all divisions are exact.
    pub fn char_poly(&self) -> Vec<i128> {
        let n = self.n;
        let mut coeffs = vec![0i128; n + 1];
        coeffs[n] = 1;
        let a: Vec<i128> = self.a.iter().map(|&x| x as i128).collect();
        let mul128 = |x: &[i128], y: &[i128]| -> Vec<i128> {
            let mut out = vec![0i128; n * n];
            for i in 0..n {
                for k in 0..n {
                    let xik = x[i * n + k];
                    if xik == 0 {
                        continue;
                    }
                    for j in 0..n {
                        out[i * n + j] += xik * y[k * n + j];
                    }
                }
            }
            out
        };
        let mut m = a.clone();
        for step in 1..=n {
            let tr: i128 = (0..n).map(|i| m[i * n + i]).sum();
            let c = -tr / step as i128;
            coeffs[n - step] = c;
            if step == n {
                break;
            }
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[i * n + i] += c;
            }
            m = mul128(&a, &shifted);
        }
        coeffs
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat{:?}", self.rows())
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            writeln!(f, "{:?}", &self.a[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl Serialize for IntMat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(D::Error::custom("matrix must be square"));
        }
        Ok(IntMat::from_rows(&rows))
    }
}
