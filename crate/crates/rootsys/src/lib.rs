//! Root systems of types A1, A2, B2 and G2, stored in the simple-root basis.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("roots belong to different systems")]
    SystemMismatch,
    #[error("{0:?} is not a root of {1}")]
    NotARoot(Vec<i32>, SystemType),
    #[error("root string is undefined for proportional roots")]
    Proportional,
    #[error("unknown system {0}")]
    UnknownSystem(String),
    #[error("cannot parse root {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SystemType {
    A1,
    A2,
    B2,
    G2,
}

impl SystemType {
    pub const ALL: [SystemType; 4] = [SystemType::A1, SystemType::A2, SystemType::B2, SystemType::G2];

    pub fn rank(self) -> usize {
        match self {
            SystemType::A1 => 1,
            _ => 2,
        }
    }

    /// Cartan matrix with `C[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        match self {
            SystemType::A1 => vec![vec![2]],
            SystemType::A2 => vec![vec![2, -1], vec![-1, 2]],
            SystemType::B2 => vec![vec![2, -2], vec![-1, 2]],
            SystemType::G2 => vec![vec![2, -3], vec![-1, 2]],
        }
    }

    /// Squared lengths of the simple roots, normalized so the shortest is 1.
    fn simple_lengths(self) -> Vec<i32> {
        match self {
            SystemType::A1 => vec![1],
            SystemType::A2 => vec![1, 1],
            SystemType::B2 => vec![2, 1],
            SystemType::G2 => vec![3, 1],
        }
    }

    fn positive_coords(self) -> Vec<Vec<i32>> {
        match self {
            SystemType::A1 => vec![vec![1]],
            SystemType::A2 => vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            SystemType::B2 => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]],
            SystemType::G2 => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 3]],
        }
    }

    /// Symmetric bilinear form on the root lattice.
    pub fn inner(self, x: &[i32], y: &[i32]) -> i32 {
        let c = self.cartan_matrix();
        let d = self.simple_lengths();
        let mut acc = 0;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                acc += x[i] * y[j] * c[i][j] * d[j];
            }
        }
        acc
    }

    pub fn positive_roots(self) -> Vec<Root> {
        self.positive_coords().into_iter().map(|c| Root::new_unchecked(self, c)).collect()
    }

    /// Positive roots in canonical order followed by their negatives.
    pub fn roots(self) -> Vec<Root> {
        let pos = self.positive_roots();
        let neg: Vec<Root> = pos.iter().map(|r| r.neg()).collect();
        pos.into_iter().chain(neg).collect()
    }

    pub fn simple_roots(self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn simple_root(self, i: usize) -> Root {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        Root::new_unchecked(self, c)
    }

    pub fn is_root(self, coords: &[i32]) -> bool {
        coords.len() == self.rank()
            && self.positive_coords().iter().any(|p| p == coords || p.iter().zip(coords).all(|(a, b)| *a == -*b))
    }

    pub fn root(self, coords: &[i32]) -> Result<Root, RootError> {
        if self.is_root(coords) {
            Ok(Root::new_unchecked(self, coords.to_vec()))
        } else {
            Err(RootError::NotARoot(coords.to_vec(), self))
        }
    }

    /// Parse a root from an alias (`a`, `a+2b`, `-a1-a2`, ...) or a coordinate list (`(1,2)`, `-(1,1)`).
    pub fn parse_root(self, text: &str) -> Result<Root, RootError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || RootError::Parse(text.to_string());
        if t.is_empty() {
            return Err(err());
        }
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) if rest.starts_with('(') => (-1, rest.to_string()),
            _ => (1, t.clone()),
        };
        let coords: Vec<i32> = if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            inner
                .split(',')
                .map(|x| x.parse::<i32>().map(|v| v * sign))
                .collect::<Result<_, _>>()
                .map_err(|_| err())?
        } else {
            self.parse_alias(&t).ok_or_else(err)?
        };
        self.root(&coords)
    }

    fn parse_alias(self, t: &str) -> Option<Vec<i32>> {
        let names: &[&str] = match self {
            SystemType::A1 => &["a"],
            SystemType::A2 => &["a1", "a2"],
            SystemType::B2 | SystemType::G2 => &["a", "b"],
        };
        let mut coords = vec![0; self.rank()];
        let chars: Vec<char> = t.chars().collect();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                sign = if chars[i] == '-' { -1 } else { 1 };
                i += 1;
            } else if !first {
                return None;
            }
            first = false;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i32 = if i > start { chars[start..i].iter().collect::<String>().parse().ok()? } else { 1 };
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let k = names.iter().position(|n| *n == name)?;
            coords[k] += sign * coef;
        }
        Some(coords)
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SystemType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(SystemType::A1),
            "A2" => Ok(SystemType::A2),
            "B2" => Ok(SystemType::B2),
            "G2" => Ok(SystemType::G2),
            _ => Err(RootError::UnknownSystem(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    system: SystemType,
    coords: Vec<i32>,
}

impl Root {
    fn new_unchecked(system: SystemType, coords: Vec<i32>) -> Root {
        Root { system, coords }
    }

    pub fn system(&self) -> SystemType {
        self.system
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn neg(&self) -> Root {
        Root::new_unchecked(self.system, self.coords.iter().map(|c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_simple(&self) -> bool {
        self.is_positive() && self.coords.iter().sum::<i32>() == 1
    }

    /// Sum of coordinates.
    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn length_class(&self) -> LengthClass {
        let max = self.system.positive_roots().iter().map(|r| self.system.inner(&r.coords, &r.coords)).max().unwrap_or(0);
        if self.system.inner(&self.coords, &self.coords) == max {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    /// Positive representative of `±self`.
    pub fn abs(&self) -> Root {
        if self.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Index in the canonical positive-root order of `±self`.
    pub fn positive_index(&self) -> usize {
        let a = self.abs();
        self.system.positive_roots().iter().position(|r| *r == a).expect("root of its own system")
    }

    /// `self + other` when it is a root.
    pub fn add(&self, other: &Root) -> Option<Root> {
        let c: Vec<i32> = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.system.root(&c).ok()
    }

    /// `i*self + j*other` when it is a root.
    pub fn combo(&self, i: i32, other: &Root, j: i32) -> Option<Root> {
        let c: Vec<i32> = self.coords.iter().zip(&other.coords).map(|(a, b)| i * a + j * b).collect();
        self.system.root(&c).ok()
    }

    /// Name in the alias syntax, e.g. `a+2b` or `-a1-a2`.
    pub fn alias(&self) -> String {
        let names: &[&str] = match self.system {
            SystemType::A1 => &["a"],
            SystemType::A2 => &["a1", "a2"],
            _ => &["a", "b"],
        };
        let mut s = String::new();
        for (c, n) in self.coords.iter().zip(names) {
            if *c == 0 {
                continue;
            }
            if *c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(n);
        }
        s
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alias())
    }
}

fn same_system(a: &Root, b: &Root) -> Result<(), RootError> {
    if a.system == b.system {
        Ok(())
    } else {
        Err(RootError::SystemMismatch)
    }
}

/// `<beta, alpha^vee>`.
pub fn cartan_integer(beta: &Root, alpha: &Root) -> Result<i32, RootError> {
    same_system(beta, alpha)?;
    let s = beta.system;
    Ok(2 * s.inner(&beta.coords, &alpha.coords) / s.inner(&alpha.coords, &alpha.coords))
}

/// `<v, alpha_j^vee>` for an arbitrary lattice vector `v`.
pub fn pairing_with_simple(system: SystemType, v: &[i32], j: usize) -> i32 {
    let c = system.cartan_matrix();
    v.iter().enumerate().map(|(i, x)| x * c[i][j]).sum()
}

/// Reflection of `gamma` in the hyperplane orthogonal to `alpha`.
pub fn reflect(gamma: &Root, alpha: &Root) -> Result<Root, RootError> {
    let k = cartan_integer(gamma, alpha)?;
    let c: Vec<i32> = gamma.coords.iter().zip(&alpha.coords).map(|(g, a)| g - k * a).collect();
    gamma.system.root(&c)
}

/// `(p, q)`: the `alpha`-string through `beta` is `beta - p*alpha, ..., beta + q*alpha`.
pub fn root_string(alpha: &Root, beta: &Root) -> Result<(i32, i32), RootError> {
    same_system(alpha, beta)?;
    if *alpha == *beta || *alpha == beta.neg() {
        return Err(RootError::Proportional);
    }
    let mut p = 0;
    while beta.combo(1, alpha, -(p + 1)).is_some() {
        p += 1;
    }
    let mut q = 0;
    while beta.combo(1, alpha, q + 1).is_some() {
        q += 1;
    }
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_values() {
        let g = SystemType::G2;
        let (a, b) = (g.simple_root(0), g.simple_root(1));
        assert_eq!(cartan_integer(&a, &b).unwrap(), -3);
        assert_eq!(cartan_integer(&b, &a).unwrap(), -1);
        let a2 = SystemType::A2;
        assert_eq!(cartan_integer(&a2.simple_root(0), &a2.simple_root(1)).unwrap(), -1);
    }

    #[test]
    fn aliases_roundtrip() {
        for s in SystemType::ALL {
            for r in s.roots() {
                assert_eq!(s.parse_root(&r.alias()).unwrap(), r);
            }
        }
        assert_eq!(SystemType::G2.parse_root("-(2,3)").unwrap().alias(), "-2a-3b");
        assert!(SystemType::A1.parse_root("c").is_err());
    }
}
