use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::RingError;
use crate::poly::Poly;
use crate::spec::{Ring, RingKind, RingSpec};

#[derive(Clone, Debug)]
enum Value {
    Poly(Poly),
    Frac { num: Poly, den: Poly },
    Mod(u64),
}

/// An exact element of a ring described by a [`RingSpec`].
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Ring,
    value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&BigInt::from(m)).to_u64()
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Reduce a rational to a residue modulo `m`.
pub fn rational_mod(c: &BigRational, m: u64) -> Result<u64, RingError> {
    let mb = BigInt::from(m);
    let n = c.numer().mod_floor(&mb).to_u64().unwrap_or(0);
    let d = c.denom().mod_floor(&mb).to_u64().unwrap_or(0);
    let dinv = mod_inverse(d, m).ok_or_else(|| RingError::DenominatorNotInvertible {
        denominator: c.denom().to_string(),
        modulus: m,
    })?;
    Ok(mod_mul(n, dinv, m))
}

impl RingElement {
    fn from_poly(ring: &Ring, p: Poly) -> Self {
        let value = match ring.kind() {
            RingKind::Fraction => Value::Frac { num: p, den: Poly::one(ring.nvars()) },
            RingKind::Quotient => Value::Poly(ring.reduce(p)),
            _ => Value::Poly(p),
        };
        RingElement { ring: ring.clone(), value }
    }

    /// Wrap a polynomial in the variables of `ring` (not allowed for modular rings).
    pub fn poly(ring: &Ring, p: Poly) -> Result<Self, RingError> {
        if ring.kind() == RingKind::Modular {
            return Err(RingError::Unsupported(ring.to_string()));
        }
        if p.nvars() != ring.nvars() {
            return Err(RingError::SpecMismatch);
        }
        Ok(Self::from_poly(ring, p))
    }

    pub fn fraction(ring: &Ring, num: Poly, den: Poly) -> Result<Self, RingError> {
        if ring.kind() != RingKind::Fraction {
            return Err(RingError::Unsupported(ring.to_string()));
        }
        if den.is_zero() {
            return Err(RingError::NotAUnit("0".into()));
        }
        Ok(RingElement { ring: ring.clone(), value: make_frac(num, den) })
    }

    pub fn zero(ring: &Ring) -> Self {
        match ring.kind() {
            RingKind::Modular => RingElement { ring: ring.clone(), value: Value::Mod(0) },
            _ => Self::from_poly(ring, Poly::zero(ring.nvars())),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::from_rational(ring, &BigRational::from_integer(BigInt::from(n)))
            .expect("integers map into every ring")
    }

    pub fn from_bigint(ring: &Ring, n: &BigInt) -> Self {
        Self::from_rational(ring, &BigRational::from_integer(n.clone())).expect("integers map into every ring")
    }

    pub fn from_rational(ring: &Ring, c: &BigRational) -> Result<Self, RingError> {
        match ring.kind() {
            RingKind::Modular => {
                let m = ring.modulus().expect("modular ring");
                Ok(RingElement { ring: ring.clone(), value: Value::Mod(rational_mod(c, m)?) })
            }
            _ => Ok(Self::from_poly(ring, Poly::constant(ring.nvars(), c.clone()))),
        }
    }

    pub fn residue(ring: &Ring, r: i64) -> Result<Self, RingError> {
        let m = ring.modulus().ok_or_else(|| RingError::Unsupported(ring.to_string()))?;
        Ok(RingElement { ring: ring.clone(), value: Value::Mod(r.rem_euclid(m as i64) as u64) })
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, RingError> {
        let i = ring.var_index(name).ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        Ok(Self::from_poly(ring, Poly::var(ring.nvars(), i)))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn spec(&self) -> &RingSpec {
        &self.ring
    }

    fn check(&self, other: &RingElement) -> Result<(), RingError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(RingError::SpecMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Poly(p) => p.is_zero(),
            Value::Frac { num, .. } => num.is_zero(),
            Value::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Poly(p) => p.as_constant().is_some_and(|c| c.is_one()),
            Value::Frac { num, den } => num == den,
            Value::Mod(r) => *r == 1,
        }
    }

    /// Polynomial representative for polynomial and quotient rings.
    pub fn as_poly(&self) -> Option<&Poly> {
        match &self.value {
            Value::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn numerator(&self) -> Option<&Poly> {
        match &self.value {
            Value::Poly(p) => Some(p),
            Value::Frac { num, .. } => Some(num),
            Value::Mod(_) => None,
        }
    }

    pub fn denominator(&self) -> Option<&Poly> {
        match &self.value {
            Value::Frac { den, .. } => Some(den),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Mod(r) => Some(*r),
            _ => None,
        }
    }

    /// The constant value when the element is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.value {
            Value::Poly(p) => p.as_constant(),
            Value::Frac { num, den } => Some(num.as_constant()? / den.as_constant()?),
            Value::Mod(_) => None,
        }
    }

    pub fn arith(op: ArithOp, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        a.check(b)?;
        let ring = &a.ring;
        let value = match (&a.value, &b.value) {
            (Value::Mod(x), Value::Mod(y)) => {
                let m = ring.modulus().expect("modular ring");
                Value::Mod(match op {
                    ArithOp::Add => ((*x as u128 + *y as u128) % m as u128) as u64,
                    ArithOp::Sub => ((*x as u128 + m as u128 - *y as u128) % m as u128) as u64,
                    ArithOp::Mul => mod_mul(*x, *y, m),
                })
            }
            (Value::Poly(x), Value::Poly(y)) => {
                let p = match op {
                    ArithOp::Add => x.add(y),
                    ArithOp::Sub => x.sub(y),
                    ArithOp::Mul => x.mul(y),
                };
                if op == ArithOp::Mul && ring.kind() == RingKind::Quotient {
                    Value::Poly(ring.reduce(p))
                } else {
                    Value::Poly(p)
                }
            }
            (Value::Frac { num: an, den: ad }, Value::Frac { num: bn, den: bd }) => match op {
                ArithOp::Mul => frac_mul(an, ad, bn, bd),
                ArithOp::Add => frac_add(an, ad, bn, bd),
                ArithOp::Sub => frac_add(an, ad, &bn.neg(), bd),
            },
            _ => return Err(RingError::SpecMismatch),
        };
        Ok(RingElement { ring: ring.clone(), value })
    }

    pub fn try_add(&self, o: &RingElement) -> Result<RingElement, RingError> {
        Self::arith(ArithOp::Add, self, o)
    }

    pub fn try_sub(&self, o: &RingElement) -> Result<RingElement, RingError> {
        Self::arith(ArithOp::Sub, self, o)
    }

    pub fn try_mul(&self, o: &RingElement) -> Result<RingElement, RingError> {
        Self::arith(ArithOp::Mul, self, o)
    }

    pub fn neg(&self) -> RingElement {
        let value = match &self.value {
            Value::Poly(p) => Value::Poly(p.neg()),
            Value::Frac { num, den } => Value::Frac { num: num.neg(), den: den.clone() },
            Value::Mod(r) => {
                let m = self.ring.modulus().expect("modular ring");
                Value::Mod((m - r) % m)
            }
        };
        RingElement { ring: self.ring.clone(), value }
    }

    pub fn pow(&self, mut e: u32) -> RingElement {
        let mut base = self.clone();
        let mut r = RingElement::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        r
    }

    /// Integer power; negative exponents require a unit.
    pub fn powi(&self, e: i64) -> Result<RingElement, RingError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.invert()?.pow((-e) as u32))
        }
    }

    pub fn scale(&self, c: &BigRational) -> Result<RingElement, RingError> {
        Ok(self * &RingElement::from_rational(&self.ring, c)?)
    }

    /// Normal form. Elements are kept normalized, so this is a canonicalizing copy.
    pub fn normal_form(&self) -> RingElement {
        match &self.value {
            Value::Poly(p) if self.ring.kind() == RingKind::Quotient => {
                RingElement { ring: self.ring.clone(), value: Value::Poly(self.ring.reduce(p.clone())) }
            }
            _ => self.clone(),
        }
    }

    pub fn invert(&self) -> Result<RingElement, RingError> {
        let not_unit = || RingError::NotAUnit(self.to_string());
        let value = match &self.value {
            Value::Mod(r) => {
                let m = self.ring.modulus().expect("modular ring");
                Value::Mod(mod_inverse(*r, m).ok_or_else(not_unit)?)
            }
            Value::Frac { num, den } => {
                if num.is_zero() {
                    return Err(not_unit());
                }
                make_frac(den.clone(), num.clone())
            }
            Value::Poly(p) => {
                if let Some(c) = p.as_constant() {
                    if c.is_zero() {
                        return Err(not_unit());
                    }
                    Value::Poly(Poly::constant(p.nvars(), c.recip()))
                } else if self.ring.kind() == RingKind::Quotient {
                    return self.invert_nilpotent_perturbation().ok_or_else(not_unit);
                } else {
                    return Err(not_unit());
                }
            }
        };
        Ok(RingElement { ring: self.ring.clone(), value })
    }

    /// In a quotient, `c(1 - n)` with `n` nilpotent is a unit with inverse `c^{-1} Σ n^k`.
    fn invert_nilpotent_perturbation(&self) -> Option<RingElement> {
        const MAX_NILPOTENCY: u32 = 64;
        let p = self.as_poly()?;
        let c = p.constant_term();
        if c.is_zero() {
            return None;
        }
        let cinv = RingElement::from_rational(&self.ring, &c.recip()).ok()?;
        let n = &RingElement::one(&self.ring) - &(self * &cinv);
        let mut sum = RingElement::one(&self.ring);
        let mut power = n.clone();
        for _ in 0..MAX_NILPOTENCY {
            if power.is_zero() {
                return Some(&sum * &cinv);
            }
            sum = &sum + &power;
            power = &power * &n;
        }
        None
    }

    /// Substitute ring elements for variables. Variables without a binding map to the
    /// same-named variable of the target ring.
    pub fn substitute(&self, bindings: &HashMap<String, RingElement>, target: &Ring) -> Result<RingElement, RingError> {
        for b in bindings.values() {
            if !same_ring(b.ring(), target) {
                return Err(RingError::SpecMismatch);
            }
        }
        let images: Vec<RingElement> = self
            .ring
            .variables()
            .iter()
            .map(|v| match bindings.get(v) {
                Some(e) => Ok(e.clone()),
                None => RingElement::var(target, v).map_err(|_| RingError::UnboundVariable(v.clone())),
            })
            .collect::<Result<_, _>>()?;
        match &self.value {
            Value::Mod(_) => {
                if same_ring(&self.ring, target) {
                    Ok(self.clone())
                } else {
                    Err(RingError::SpecMismatch)
                }
            }
            Value::Poly(p) => eval_poly(p, &images, target),
            Value::Frac { num, den } => {
                let n = eval_poly(num, &images, target)?;
                let d = eval_poly(den, &images, target)?;
                Ok(&n * &d.invert()?)
            }
        }
    }

    /// Evaluate at residues modulo `p` for every variable.
    pub fn map_to_modular(&self, p: u64, bindings: &HashMap<String, i64>) -> Result<RingElement, RingError> {
        let target = RingSpec::modular(p)?;
        let vals: Vec<u64> = self
            .ring
            .variables()
            .iter()
            .map(|v| {
                bindings
                    .get(v)
                    .map(|&x| x.rem_euclid(p as i64) as u64)
                    .ok_or_else(|| RingError::UnboundVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let eval = |q: &Poly| -> Result<u64, RingError> {
            let mut acc: u64 = 0;
            for (m, c) in q.terms() {
                let mut t = rational_mod(c, p)?;
                for (e, v) in m.iter().zip(&vals) {
                    for _ in 0..*e {
                        t = mod_mul(t, *v, p);
                    }
                }
                acc = (acc + t) % p;
            }
            Ok(acc)
        };
        let r = match &self.value {
            Value::Mod(r) => {
                let m = self.ring.modulus().expect("modular ring");
                if m % p != 0 {
                    return Err(RingError::SpecMismatch);
                }
                r % p
            }
            Value::Poly(q) => eval(q)?,
            Value::Frac { num, den } => {
                let n = eval(num)?;
                let d = eval(den)?;
                let dinv = mod_inverse(d, p).ok_or_else(|| RingError::DenominatorNotInvertible {
                    denominator: den.to_string(),
                    modulus: p,
                })?;
                mod_mul(n, dinv, p)
            }
        };
        RingElement::residue(&target, r as i64)
    }

    /// Every coefficient denominator divides a power of a product of `primes`.
    pub fn denominators_supported_by(&self, primes: &[u64]) -> bool {
        let ok = |q: &Poly| {
            q.terms().all(|(_, c)| {
                let mut d = c.denom().abs();
                for &p in primes {
                    let pb = BigInt::from(p);
                    while (&d % &pb).is_zero() {
                        d /= &pb;
                    }
                }
                d.is_one()
            })
        };
        match &self.value {
            Value::Mod(_) => true,
            Value::Poly(p) => ok(p),
            Value::Frac { num, den } => ok(num) && ok(den),
        }
    }

    /// Render using the ring's variable names.
    pub fn render(&self) -> String {
        let names = self.ring.variables();
        let w = self.ring.weights();
        match &self.value {
            Value::Mod(r) => r.to_string(),
            Value::Poly(p) => p.display_with(names, w),
            Value::Frac { num, den } => {
                if den.as_constant().is_some_and(|c| c.is_one()) {
                    num.display_with(names, w)
                } else {
                    format!("({})/({})", num.display_with(names, w), den.display_with(names, w))
                }
            }
        }
    }
}

fn eval_poly(p: &Poly, images: &[RingElement], target: &Ring) -> Result<RingElement, RingError> {
    let mut acc = RingElement::zero(target);
    for (m, c) in p.terms() {
        let mut t = RingElement::from_rational(target, c)?;
        for (e, img) in m.iter().zip(images) {
            if *e > 0 {
                t = &t * &img.pow(*e);
            }
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

/// Canonical-ish fraction: denominator with leading coefficient one, exact
/// cancellation when the denominator divides the numerator, and common monomial
/// factors removed.
fn make_frac(num: Poly, den: Poly) -> Value {
    let n = num.nvars();
    if num.is_zero() {
        return Value::Frac { num, den: Poly::one(n) };
    }
    if let Some(c) = den.as_constant() {
        return Value::Frac { num: num.scale(&c.recip()), den: Poly::one(n) };
    }
    if let Some(q) = num.div_exact(&den) {
        return Value::Frac { num: q, den: Poly::one(n) };
    }
    let g: Vec<u32> = num.monomial_content().iter().zip(den.monomial_content()).map(|(a, b)| (*a).min(b)).collect();
    let (num, den) = if g.iter().any(|&e| e > 0) {
        (num.div_monomial(&g), den.div_monomial(&g))
    } else {
        (num, den)
    };
    let lc = den.lex_leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
    let inv = lc.recip();
    Value::Frac { num: num.scale(&inv), den: den.scale(&inv) }
}

fn frac_mul(an: &Poly, ad: &Poly, bn: &Poly, bd: &Poly) -> Value {
    if an.is_zero() || bn.is_zero() {
        return Value::Frac { num: Poly::zero(an.nvars()), den: Poly::one(an.nvars()) };
    }
    let (an, bd) = cancel(an, bd);
    let (bn, ad) = cancel(bn, ad);
    make_frac(an.mul(&bn), ad.mul(&bd))
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.is_constant() {
        return (n.clone(), d.clone());
    }
    if let Some(q) = n.div_exact(d) {
        return (q, Poly::one(n.nvars()));
    }
    (n.clone(), d.clone())
}

fn frac_add(an: &Poly, ad: &Poly, bn: &Poly, bd: &Poly) -> Value {
    if an.is_zero() {
        return Value::Frac { num: bn.clone(), den: bd.clone() };
    }
    if bn.is_zero() {
        return Value::Frac { num: an.clone(), den: ad.clone() };
    }
    if ad == bd {
        return make_frac(an.add(bn), ad.clone());
    }
    if let Some(q) = bd.div_exact(ad) {
        return make_frac(an.mul(&q).add(bn), bd.clone());
    }
    if let Some(q) = ad.div_exact(bd) {
        return make_frac(an.add(&bn.mul(&q)), ad.clone());
    }
    make_frac(an.mul(bd).add(&bn.mul(ad)), ad.mul(bd))
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        if !same_ring(&self.ring, &other.ring) {
            return false;
        }
        match (&self.value, &other.value) {
            (Value::Poly(a), Value::Poly(b)) => a == b,
            (Value::Mod(a), Value::Mod(b)) => a == b,
            (Value::Frac { num: an, den: ad }, Value::Frac { num: bn, den: bd }) => {
                (an == bn && ad == bd) || an.mul(bd) == bn.mul(ad)
            }
            _ => false,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:expr) => {
        impl std::ops::$tr<&RingElement> for &RingElement {
            type Output = RingElement;
            /// Panics when the operands live in different rings.
            fn $m(self, rhs: &RingElement) -> RingElement {
                RingElement::arith($op, self, rhs).expect("ring mismatch")
            }
        }
        impl std::ops::$tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $m(self, rhs: RingElement) -> RingElement {
                RingElement::arith($op, &self, &rhs).expect("ring mismatch")
            }
        }
    };
}
binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(self)
    }
}

impl std::ops::Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(&self)
    }
}
