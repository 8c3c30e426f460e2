//! Dense square matrices over Z/p with cheap hashing.

use exactring::{Matrix, Ring, RingElement};

use crate::error::ShaError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    n: usize,
    p: u32,
    data: Vec<u32>,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

impl ModMatrix {
    pub fn identity(n: usize, p: u32) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % p;
        }
        ModMatrix { n, p, data }
    }

    pub fn from_entries(n: usize, p: u32, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n, "entry count");
        let data = entries.iter().map(|&e| e.rem_euclid(p as i64) as u32).collect();
        ModMatrix { n, p, data }
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self, ShaError> {
        let p = m.ring().modulus().ok_or_else(|| ShaError::Invalid(format!("ring {} is not Z/p", m.ring())))?;
        let n = m.rows();
        let data = m
            .entries()
            .iter()
            .map(|e| e.as_residue().map(|r| r as u32).ok_or(ShaError::NotModular(p)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ModMatrix { n, p: p as u32, data })
    }

    pub fn to_matrix(&self, ring: &Ring) -> Matrix {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| RingElement::from_int(ring, self.get(i, j) as i64)).collect())
            .collect();
        Matrix::from_rows(ring, rows).expect("square rows")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == ModMatrix::identity(self.n, self.p)
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        let n = self.n;
        let p = self.p as u64;
        let mut data = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    data[idx] = ((data[idx] as u64 + a * o.data[k * n + j] as u64) % p) as u32;
                }
            }
        }
        ModMatrix { n, p: self.p, data }
    }

    pub fn sub_identity(&self) -> ModMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let idx = i * self.n + i;
            out.data[idx] = (out.data[idx] + self.p - 1) % self.p;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn trace(&self) -> u32 {
        ((0..self.n).map(|i| self.get(i, i) as u64).sum::<u64>() % self.p as u64) as u32
    }

    /// Scale so the first nonzero entry in row-major order is 1.
    pub fn projective_canonical(&self) -> ModMatrix {
        let Some(&lead) = self.data.iter().find(|&&x| x != 0) else {
            return self.clone();
        };
        let s = inv_mod(lead, self.p) as u64;
        let p = self.p as u64;
        let data = self.data.iter().map(|&x| (x as u64 * s % p) as u32).collect();
        ModMatrix { n: self.n, p: self.p, data }
    }

    pub fn canonical(&self, projective: bool) -> ModMatrix {
        if projective {
            self.projective_canonical()
        } else {
            self.clone()
        }
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<ModMatrix> {
        let n = self.n;
        let p = self.p as u64;
        let mut a: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = (0..n).map(|j| self.get(i, j) as u64).collect();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, pivot);
            let s = inv_mod(a[col][col] as u32, self.p) as u64;
            for x in a[col].iter_mut() {
                *x = *x * s % p;
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..2 * n {
                        a[r][c] = (a[r][c] + p * p - f * a[col][c]) % p;
                    }
                }
            }
        }
        let data = a.iter().flat_map(|row| row[n..].iter().map(|&x| x as u32)).collect();
        Some(ModMatrix { n, p: self.p, data })
    }
}
