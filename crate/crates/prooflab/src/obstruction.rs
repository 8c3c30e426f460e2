//! Small computations behind non-conjugacy arguments: the transvection criterion,
//! scalar-conjugacy obstructions, the symmetric difference of a trace polynomial,
//! and short-root coordinates of commutators.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use chevgroup::{GroupWord, Letter, Realization, SystemType};
use decomp::verify_matrices;
use exactring::{BigInt, BigRational, Expr, Matrix, Ring, RingElement, RingSpec};

use crate::error::ProofError;
use crate::record::{cached_group, summarize, Report, Verdict};

/// `u = x_{a1}(u1) x_{a2}(u2) x_{a1+a2}(u3)` in the 3x3 model of A2.
pub fn transvection_element(u1: &RingElement, u2: &RingElement, u3: &RingElement) -> Result<Matrix, ProofError> {
    let group = cached_group(SystemType::A2, Realization::Pgl3)?;
    let sys = SystemType::A2;
    let mut m = Matrix::identity(u1.ring(), 3);
    for (r, t) in [(sys.parse_root("a1")?, u1), (sys.parse_root("a2")?, u2), (sys.parse_root("a1+a2")?, u3)] {
        m = m.try_mul(&group.root_element(&r, t)?)?;
    }
    Ok(m)
}

/// `(u - I)^2` for the element above.
pub fn transvection_square(u1: &RingElement, u2: &RingElement, u3: &RingElement) -> Result<Matrix, ProofError> {
    let u = transvection_element(u1, u2, u3)?;
    Ok(u.try_sub(&Matrix::identity(u1.ring(), 3))?.pow(2))
}

/// Whether `(u - I)^2 = 0`, i.e. `u` is a transvection or the identity.
pub fn transvection_criterion(u1: &RingElement, u2: &RingElement, u3: &RingElement) -> Result<bool, ProofError> {
    Ok(transvection_square(u1, u2, u3)?.is_zero())
}

/// Outcome of the necessary conditions for `M = lambda g N g^{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub enum Obstruction {
    Possible { lambda: RingElement },
    Impossible { witness: String },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Possible { lambda } => write!(f, "POSSIBLE (lambda = {lambda})"),
            Obstruction::Impossible { witness } => write!(f, "IMPOSSIBLE: {witness}"),
        }
    }
}

fn rational_cube_root(c: &BigRational) -> Option<BigRational> {
    let root = |n: &BigInt| {
        let r = n.cbrt();
        (&r * &r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(c.numer())?, root(c.denom())?))
}

/// Solutions of `lambda^3 = c` in the field.
fn cube_roots(c: &RingElement) -> Result<Vec<RingElement>, ProofError> {
    let ring = c.ring();
    if let Some(p) = ring.modulus() {
        return Ok((1..p as i64)
            .map(|k| RingElement::from_int(ring, k))
            .filter(|l| l.pow(3) == *c)
            .collect());
    }
    let q = c.as_rational().ok_or_else(|| ProofError::Unsupported(format!("{c} is not a field constant")))?;
    rational_cube_root(&q).map(|r| RingElement::from_rational(ring, &r)).transpose().map(|r| r.into_iter().collect()).map_err(Into::into)
}

/// First of the three conditions violated by `lambda`, if any.
fn violated(
    lambda: &RingElement,
    det: (&RingElement, &RingElement),
    tr: (&RingElement, &RingElement),
    tr_inv: (&RingElement, &RingElement),
) -> Result<Option<String>, ProofError> {
    let lhs = lambda.pow(3).try_mul(det.1)?;
    if lhs != *det.0 {
        return Ok(Some(format!(
            "determinant: det(M) = {} but lambda^3 det(N) = {lhs} for lambda = {lambda} (lambda^3 = {})",
            det.0,
            lambda.pow(3)
        )));
    }
    let lhs = lambda.try_mul(tr.1)?;
    if lhs != *tr.0 {
        return Ok(Some(format!("trace: tr(M) = {} but lambda tr(N) = {lhs} for lambda = {lambda}", tr.0)));
    }
    let lhs = lambda.invert()?.try_mul(tr_inv.1)?;
    if lhs != *tr_inv.0 {
        return Ok(Some(format!("inverse trace: tr(M^-1) = {} but tr(N^-1)/lambda = {lhs} for lambda = {lambda}", tr_inv.0)));
    }
    Ok(None)
}

/// IMPOSSIBLE iff no field element `lambda` satisfies `det M = lambda^3 det N`,
/// `tr M = lambda tr N` and `tr M^{-1} = lambda^{-1} tr N^{-1}`.
pub fn scalar_conjugacy_obstruction(m: &Matrix, n: &Matrix) -> Result<Obstruction, ProofError> {
    let ring = m.ring();
    if !ring.is_field() || ring.nvars() > 0 {
        return Err(ProofError::Unsupported(format!("obstruction needs a field of constants, got {ring}")));
    }
    let (mi, ni) = (m.inverse()?, n.inverse()?);
    let (dm, dn) = (m.det()?, n.det()?);
    let (tm, tn) = (m.trace(), n.trace());
    let (im, inn) = (mi.trace(), ni.trace());
    let candidates: Vec<RingElement> = if !tn.is_zero() {
        vec![tm.try_mul(&tn.invert()?)?]
    } else if !tm.is_zero() {
        return Ok(Obstruction::Impossible { witness: format!("trace: tr(N) = 0 but tr(M) = {tm}") });
    } else if !im.is_zero() {
        if inn.is_zero() {
            return Ok(Obstruction::Impossible { witness: format!("inverse trace: tr(N^-1) = 0 but tr(M^-1) = {im}") });
        }
        vec![inn.try_mul(&im.invert()?)?]
    } else if !inn.is_zero() {
        return Ok(Obstruction::Impossible { witness: format!("inverse trace: tr(M^-1) = 0 but tr(N^-1) = {inn}") });
    } else {
        let roots = cube_roots(&dm.try_mul(&dn.invert()?)?)?;
        if roots.is_empty() {
            return Ok(Obstruction::Impossible {
                witness: format!("determinant: det(M)/det(N) = {} has no cube root", dm.try_mul(&dn.invert()?)?),
            });
        }
        roots
    };
    let mut witness = String::new();
    for lambda in candidates {
        if lambda.is_zero() {
            witness = "trace: the forced lambda is 0".into();
            continue;
        }
        match violated(&lambda, (&dm, &dn), (&tm, &tn), (&im, &inn))? {
            None => return Ok(Obstruction::Possible { lambda }),
            Some(w) => witness = w,
        }
    }
    Ok(Obstruction::Impossible { witness })
}

/// `[F(t+1) + F(-t-1)] - [F(t) + F(-t)]` for `F` in a one-variable ring.
pub fn symmetric_difference(f: &RingElement) -> Result<RingElement, ProofError> {
    let ring = f.ring();
    let [v] = ring.variables() else {
        return Err(ProofError::Unsupported(format!("expected a univariate ring, got {ring}")));
    };
    let t = RingElement::var(ring, v)?;
    let one = RingElement::one(ring);
    let at = |x: RingElement| f.substitute(&HashMap::from([(v.clone(), x)]), ring);
    let shifted = t.try_add(&one)?;
    let a = at(shifted.clone())?.try_add(&at(shifted.neg())?)?;
    let b = at(t.clone())?.try_add(&at(t.neg())?)?;
    Ok(a.try_sub(&b)?)
}

/// Root whose coordinate in `[x_a(1), x_b(s)]` carries the extracted power of `s`.
fn designated(system: SystemType) -> Result<(&'static str, u32), ProofError> {
    match system {
        SystemType::B2 => Ok(("a+2b", 2)),
        SystemType::G2 => Ok(("a+3b", 3)),
        _ => Err(ProofError::Unsupported(format!("short-root squares are defined for B2 and G2, not {system}"))),
    }
}

/// The designated coordinate of `[x_a(1), x_b(s)]` as read from the commutator relation.
pub fn short_root_coordinate(system: SystemType) -> Result<RingElement, ProofError> {
    let (alias, _) = designated(system)?;
    let group = cached_group(system, Realization::Adjoint)?;
    let rel = group.commutator_relation(&system.parse_root("a")?, &system.parse_root("b")?)?;
    let target = system.parse_root(alias)?;
    let f = rel.factors.iter().find(|f| f.root == target).ok_or_else(|| ProofError::Unsupported(format!("no {alias} factor")))?;
    let param = f.param("t", "s").substitute(&HashMap::from([("t".to_string(), Expr::int(1))]));
    Ok(param.eval(&RingSpec::polynomial(&["s"])?)?)
}

/// Verify that `[x_a(1), x_b(s)]` factors as the relation predicts and that the
/// designated coordinate is a unit times `s^2` (B2) or `s^3` (G2).
pub fn short_root_squares(system: SystemType) -> Result<Report, ProofError> {
    let start = Instant::now();
    let name = format!("{system}-short-root-squares");
    let (alias, power) = designated(system)?;
    let group = cached_group(system, Realization::Adjoint)?;
    let ring: Ring = RingSpec::polynomial(&["s"])?;
    let rel = group.commutator_relation(&system.parse_root("a")?, &system.parse_root("b")?)?;
    let (a, b) = (system.parse_root("a")?, system.parse_root("b")?);
    let s = Expr::var("s");
    let lhs = GroupWord::new(
        system,
        vec![Letter::X(a.clone(), Expr::int(1)), Letter::X(b.clone(), s.clone()), Letter::X(a, Expr::int(-1)), Letter::X(b, -s)],
    );
    let rhs = rel.rhs_word("t", "s").substitute(&HashMap::from([("t".to_string(), Expr::int(1))]));
    let v = verify_matrices(&group.evaluate_word(&lhs, &ring)?, &group.evaluate_word(&rhs, &ring)?, false)?;
    if !v.holds {
        return Ok(Report::new(&name, Verdict::Fail, summarize(&v.residual), start));
    }
    let coord = short_root_coordinate(system)?;
    let p = coord.as_poly().expect("polynomial");
    let single = p.len() == 1 && p.terms().all(|(m, c)| m[0] == power && (c.numer().magnitude() == c.denom().magnitude()));
    let msg = format!("x({alias}) coordinate = {coord}");
    Ok(Report::new(&name, if single { Verdict::Pass } else { Verdict::Fail }, msg, start))
}
