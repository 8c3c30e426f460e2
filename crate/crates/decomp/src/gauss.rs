//! Gauss decomposition `T U V U` for A1 in the a1std realization over `Z/p^k`.

use chevgroup::{ChevalleyGroup, GroupWord, Letter, Realization};
use exactring::{Expr, Matrix, RingElement, RingKind};
use rootsys::SystemType;

use crate::error::DecompError;

/// `M = t1(t) x_a(a) x_{-a}(b) x_a(c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussFactorization {
    pub t: RingElement,
    pub a: RingElement,
    pub b: RingElement,
    pub c: RingElement,
}

impl GaussFactorization {
    pub fn torus(&self) -> GroupWord {
        GroupWord::new(SystemType::A1, vec![Letter::T(1, Expr::from_element(&self.t))])
    }

    pub fn u1(&self) -> GroupWord {
        let a = SystemType::A1.simple_root(0);
        GroupWord::x(&a, Expr::from_element(&self.a))
    }

    pub fn v(&self) -> GroupWord {
        let a = SystemType::A1.simple_root(0);
        GroupWord::x(&a.neg(), Expr::from_element(&self.b))
    }

    pub fn u2(&self) -> GroupWord {
        let a = SystemType::A1.simple_root(0);
        GroupWord::x(&a, Expr::from_element(&self.c))
    }

    /// `torus u1 v u2` as one word.
    pub fn word(&self) -> GroupWord {
        self.torus().then(&self.u1()).then(&self.v()).then(&self.u2())
    }
}

/// Solve `M = t1(t) x_a(a) x_{-a}(b) x_a(c)` over a residue ring `Z/n` with `n` odd.
///
/// The shift `a` is the first residue `0, 1, 2, ...` that makes the (1,1) entry of
/// `x_a(-t a) M` a unit; the remaining parameters are then read off the entries.
pub fn gauss_decompose_a1(m: &Matrix) -> Result<GaussFactorization, DecompError> {
    let ring = m.ring().clone();
    let n = match (ring.kind(), ring.modulus()) {
        (RingKind::Modular, Some(n)) if n % 2 == 1 => n,
        _ => return Err(DecompError::Unsupported(format!("Gauss decomposition over {ring}"))),
    };
    if m.rows() != 3 || m.cols() != 3 {
        return Err(DecompError::Unsupported("a1std matrices are 3x3".into()));
    }
    let g = ChevalleyGroup::new(SystemType::A1, Realization::A1Std)?;
    let alpha = SystemType::A1.simple_root(0);
    let two_inv = RingElement::from_int(&ring, 2).invert()?;
    for shift in 0..n.min(64) {
        let s = RingElement::from_int(&ring, shift as i64);
        let nm = g.root_element(&alpha, &-&s)?.try_mul(m)?;
        let Ok(tinv) = nm.get(0, 0).invert() else { continue };
        let t = nm.get(0, 0).clone();
        let b = nm.get(2, 0).clone();
        let c = &(nm.get(0, 2) * &two_inv) * &tinv;
        let a = &s * &tinv;
        let f = GaussFactorization { t, a, b, c };
        let back = g.evaluate_word(&f.word(), &ring)?;
        if back == *m {
            return Ok(f);
        }
        return Err(DecompError::NoFactorization("entries are inconsistent with the A1 group".into()));
    }
    Err(DecompError::NoFactorization("no shift makes the leading entry a unit".into()))
}
