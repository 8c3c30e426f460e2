//! Rank-one identities and factorization checks.

use chevgroup::{pgl3_equal, ChevalleyGroup, GroupWord, Letter, Realization};
use exactring::{Expr, Matrix, Ring, RingElement};
use rootsys::Root;

use crate::error::DecompError;

/// `x_g(v/(1+uv)) h_g((1+uv)^{-1}) x_{-g}(u/(1+uv))`, equal to `x_{-g}(u) x_g(v)`.
pub fn rank_one_factor(g: &Root, u: &RingElement, v: &RingElement) -> Result<GroupWord, DecompError> {
    let d = &RingElement::one(u.ring()) + &(u * v);
    let dinv = d.invert()?;
    let e = Expr::from_element;
    Ok(GroupWord::new(
        g.system(),
        vec![
            Letter::X(g.clone(), e(&(v * &dinv))),
            Letter::H(g.clone(), e(&dinv)),
            Letter::X(g.neg(), e(&(u * &dinv))),
        ],
    ))
}

/// `h_g(1-u) x_g(1+u) x_{-g}(u)`, equal to `x_{-g}(u) x_g(1)` when `u^2 = 0`.
pub fn nilpotent_commute(g: &Root, u: &RingElement) -> Result<GroupWord, DecompError> {
    if !(u * u).is_zero() {
        return Err(DecompError::MissingRule(u.ring().to_string(), u.to_string()));
    }
    let one = RingElement::one(u.ring());
    let e = Expr::from_element;
    Ok(GroupWord::new(
        g.system(),
        vec![
            Letter::H(g.clone(), e(&(&one - u))),
            Letter::X(g.clone(), e(&(&one + u))),
            Letter::X(g.neg(), e(u)),
        ],
    ))
}

/// Outcome of comparing two matrices entrywise.
#[derive(Clone, Debug)]
pub struct Verification {
    pub holds: bool,
    /// `target - claim`, in normal form.
    pub residual: Matrix,
}

impl Verification {
    /// Nonzero residual entries as `(row, col, value)`, 1-based.
    pub fn nonzero(&self) -> Vec<(usize, usize, String)> {
        self.residual.nonzero_entries().into_iter().map(|(i, j, v)| (i + 1, j + 1, v.to_string())).collect()
    }
}

/// Entrywise comparison; with `projective` over a field, equality up to a unit scalar.
pub fn verify_matrices(target: &Matrix, claim: &Matrix, projective: bool) -> Result<Verification, DecompError> {
    let residual = target.try_sub(claim)?;
    let holds = residual.is_zero() || (projective && target.ring().is_field() && pgl3_equal(target, claim)?);
    Ok(Verification { holds, residual })
}

/// Evaluate both words in `ring` and compare.
pub fn verify_factorization(
    group: &ChevalleyGroup,
    target: &GroupWord,
    claim: &GroupWord,
    ring: &Ring,
) -> Result<Verification, DecompError> {
    let t = group.evaluate_word(target, ring)?;
    let c = group.evaluate_word(claim, ring)?;
    verify_matrices(&t, &c, group.realization() == Realization::Pgl3)
}
