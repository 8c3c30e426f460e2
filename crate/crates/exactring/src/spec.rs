use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::RingError;
use crate::poly::{monomial_cmp, Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Poly,
    Quotient,
    Fraction,
    Modular,
}

/// `lhs -> rhs`, oriented so that `lhs` exceeds every monomial of `rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    kind: RingKind,
    variables: Vec<String>,
    weights: Vec<u32>,
    rules: Vec<RewriteRule>,
    modulus: u64,
}

/// Shared handle to a ring description.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    fn check_variables(variables: &[String]) -> Result<(), RingError> {
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(RingError::InvalidSpec("empty variable name".into()));
            }
            if variables[..i].contains(v) {
                return Err(RingError::InvalidSpec(format!("duplicate variable {v}")));
            }
        }
        Ok(())
    }

    fn owned(vars: &[&str]) -> Vec<String> {
        vars.iter().map(|s| s.to_string()).collect()
    }

    /// The rationals, i.e. the polynomial ring in no variables.
    pub fn rationals() -> Ring {
        Arc::new(RingSpec {
            kind: RingKind::Poly,
            variables: vec![],
            weights: vec![],
            rules: vec![],
            modulus: 0,
        })
    }

    pub fn polynomial(vars: &[&str]) -> Result<Ring, RingError> {
        let variables = Self::owned(vars);
        Self::check_variables(&variables)?;
        Ok(Arc::new(RingSpec {
            kind: RingKind::Poly,
            weights: vec![1; variables.len()],
            variables,
            rules: vec![],
            modulus: 0,
        }))
    }

    pub fn fraction(vars: &[&str]) -> Result<Ring, RingError> {
        let variables = Self::owned(vars);
        Self::check_variables(&variables)?;
        Ok(Arc::new(RingSpec {
            kind: RingKind::Fraction,
            weights: vec![1; variables.len()],
            variables,
            rules: vec![],
            modulus: 0,
        }))
    }

    pub fn modular(modulus: u64) -> Result<Ring, RingError> {
        if modulus < 2 {
            return Err(RingError::InvalidSpec(format!("modulus {modulus} < 2")));
        }
        Ok(Arc::new(RingSpec {
            kind: RingKind::Modular,
            variables: vec![],
            weights: vec![],
            rules: vec![],
            modulus,
        }))
    }

    /// Quotient with the plain degree-lexicographic order.
    pub fn quotient(vars: &[&str], rules: Vec<RewriteRule>) -> Result<Ring, RingError> {
        Self::quotient_weighted(vars, &vec![1; vars.len()], rules)
    }

    /// Quotient with per-variable weights for the degree part of the order.
    pub fn quotient_weighted(
        vars: &[&str],
        weights: &[u32],
        rules: Vec<RewriteRule>,
    ) -> Result<Ring, RingError> {
        let variables = Self::owned(vars);
        Self::check_variables(&variables)?;
        if weights.len() != variables.len() || weights.iter().any(|&w| w == 0) {
            return Err(RingError::InvalidSpec("weights must be positive, one per variable".into()));
        }
        for r in &rules {
            Self::check_rule(r, variables.len(), weights)?;
        }
        Ok(Arc::new(RingSpec {
            kind: RingKind::Quotient,
            variables,
            weights: weights.to_vec(),
            rules,
            modulus: 0,
        }))
    }

    fn check_rule(r: &RewriteRule, n: usize, weights: &[u32]) -> Result<(), RingError> {
        if r.lhs.len() != n || r.rhs.nvars() != n {
            return Err(RingError::InvalidSpec("rule arity mismatch".into()));
        }
        if r.lhs.iter().all(|&e| e == 0) {
            return Err(RingError::InvalidSpec("rule with constant left side".into()));
        }
        for (m, _) in r.rhs.terms() {
            if monomial_cmp(&r.lhs, m, weights) != std::cmp::Ordering::Greater {
                return Err(RingError::InvalidSpec(format!(
                    "rule {:?} does not decrease the monomial order",
                    r.lhs
                )));
            }
        }
        Ok(())
    }

    /// A copy of this quotient (or polynomial ring) with extra rules appended.
    pub fn with_rules(&self, extra: Vec<RewriteRule>) -> Result<Ring, RingError> {
        if !matches!(self.kind, RingKind::Poly | RingKind::Quotient) {
            return Err(RingError::InvalidSpec("rules need a polynomial ring".into()));
        }
        let vars: Vec<&str> = self.variables.iter().map(|s| s.as_str()).collect();
        let mut rules = self.rules.clone();
        rules.extend(extra);
        Self::quotient_weighted(&vars, &self.weights, rules)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn modulus(&self) -> Option<u64> {
        (self.kind == RingKind::Modular).then_some(self.modulus)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn has_rules(&self) -> bool {
        !self.rules.is_empty()
    }

    /// True for rings in which every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        match self.kind {
            RingKind::Fraction => true,
            RingKind::Poly => self.variables.is_empty(),
            RingKind::Modular => is_prime(self.modulus),
            RingKind::Quotient => false,
        }
    }

    /// Reduce a polynomial to normal form under the rewrite rules.
    pub fn reduce(&self, p: Poly) -> Poly {
        if self.rules.is_empty() || p.is_zero() {
            return p;
        }
        use std::collections::BTreeMap;
        let w = &self.weights;
        let key = |m: &Monomial| (crate::poly::weighted_degree(m, w), m.clone());
        let mut work: BTreeMap<(u64, Monomial), BigRational> = BTreeMap::new();
        for (m, c) in p.into_terms() {
            work.insert(key(&m), c);
        }
        let mut out = Poly::zero(self.nvars());
        while let Some(((_, m), c)) = work.pop_last() {
            match self.rules.iter().find(|r| crate::poly::divides(&r.lhs, &m)) {
                None => out.add_term(m, c),
                Some(r) => {
                    let q: Monomial = m.iter().zip(&r.lhs).map(|(a, b)| a - b).collect();
                    for (rm, rc) in r.rhs.terms() {
                        let nm: Monomial = q.iter().zip(rm).map(|(a, b)| a + b).collect();
                        let k = key(&nm);
                        let nc = &c * rc;
                        let vanished = {
                            let slot = work.entry(k.clone()).or_insert_with(num_traits::Zero::zero);
                            *slot += nc;
                            num_traits::Zero::is_zero(slot)
                        };
                        if vanished {
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Modular => write!(f, "Z/{}", self.modulus),
            RingKind::Poly => write!(f, "Q[{}]", self.variables.join(",")),
            RingKind::Fraction => write!(f, "Q({})", self.variables.join(",")),
            RingKind::Quotient => {
                let rules: Vec<String> = self
                    .rules
                    .iter()
                    .map(|r| {
                        let lhs = Poly::term(r.lhs.clone(), num_traits::One::one());
                        format!(
                            "{}->{}",
                            lhs.display_with(&self.variables, &self.weights),
                            r.rhs.display_with(&self.variables, &self.weights)
                        )
                    })
                    .collect();
                write!(f, "Q[{}]/({})", self.variables.join(","), rules.join(", "))
            }
        }
    }
}

/// Serialized form: polynomials are lists of `[coefficient, exponents]` pairs.
#[derive(Serialize, Deserialize)]
struct RingSpecRepr {
    kind: RingKind,
    variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<u32>>,
    #[serde(default)]
    rules: Vec<RuleRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct RuleRepr {
    lhs_monomial: Vec<u32>,
    rhs_poly: Vec<(String, Vec<u32>)>,
}

pub fn poly_to_repr(p: &Poly) -> Vec<(String, Vec<u32>)> {
    p.terms().map(|(m, c)| (c.to_string(), m.clone())).collect()
}

pub fn poly_from_repr(nvars: usize, terms: &[(String, Vec<u32>)]) -> Result<Poly, RingError> {
    let mut p = Poly::zero(nvars);
    for (c, m) in terms {
        if m.len() != nvars {
            return Err(RingError::Parse(format!("exponent vector {m:?} has wrong length")));
        }
        let c: BigRational = c.parse().map_err(|_| RingError::Parse(format!("bad coefficient {c}")))?;
        p.add_term(m.clone(), c);
    }
    Ok(p)
}

impl Serialize for RingSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = RingSpecRepr {
            kind: self.kind,
            variables: self.variables.clone(),
            weights: (self.weights.iter().any(|&w| w != 1)).then(|| self.weights.clone()),
            rules: self
                .rules
                .iter()
                .map(|r| RuleRepr { lhs_monomial: r.lhs.clone(), rhs_poly: poly_to_repr(&r.rhs) })
                .collect(),
            modulus: self.modulus(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = RingSpecRepr::deserialize(d)?;
        let vars: Vec<&str> = repr.variables.iter().map(|s| s.as_str()).collect();
        let ring = match repr.kind {
            RingKind::Poly => RingSpec::polynomial(&vars),
            RingKind::Fraction => RingSpec::fraction(&vars),
            RingKind::Modular => RingSpec::modular(repr.modulus.ok_or_else(|| D::Error::custom("missing modulus"))?),
            RingKind::Quotient => {
                let n = vars.len();
                let mut rules = Vec::new();
                for r in &repr.rules {
                    rules.push(RewriteRule {
                        lhs: r.lhs_monomial.clone(),
                        rhs: poly_from_repr(n, &r.rhs_poly).map_err(D::Error::custom)?,
                    });
                }
                let weights = repr.weights.clone().unwrap_or_else(|| vec![1; n]);
                RingSpec::quotient_weighted(&vars, &weights, rules)
            }
        }
        .map_err(D::Error::custom)?;
        Ok((*ring).clone())
    }
}
