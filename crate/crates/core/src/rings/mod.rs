//! Ring instances and the capability tower.
//!
//! A [`Ring`] names a concrete instance (ℤ, ℚ, 𝔽_p or a polynomial ring over
//! one of those) and carries all arithmetic for its [`Element`]s. What a ring
//! can do is described by its [`Capability`] set, which is a function of the
//! ring's kind alone:
//!
//! | ring        | gcd | bezout | bound-witness | field |
//! |-------------|-----|--------|---------------|-------|
//! | ℤ           | yes | yes    | yes           | no    |
//! | ℚ, 𝔽_p      | yes | yes    | yes           | yes   |
//! | k\[X\]      | yes | yes    | yes           | no    |
//! | ℤ\[X\]      | yes | no     | yes           | no    |
//!
//! Every instance has discrete equality, recognizable units, decidable
//! divisibility and a characteristic. ℤ\[X\] deliberately lacks Bézout: the
//! pair `(2, X)` has gcd 1 but no relation `s·2 + t·X = 1`.

mod element;
mod integer;
pub(crate) mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use element::Element;

use crate::error::{AlgebraError, Result};
use crate::factorization::polygcd;

/// A prime modulus below 2⁶³, verified by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p >= 1 << 63 || !integer::is_prime_u64(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Capability {
    DiscreteEquality,
    RecognizableUnits,
    Gcd,
    Bezout,
    DecidableDivisibility,
    BoundWitness,
    Field,
    Characteristic,
}

impl Capability {
    pub fn name(self) -> &'static str {
        match self {
            Capability::DiscreteEquality => "discrete-equality",
            Capability::RecognizableUnits => "recognizable-units",
            Capability::Gcd => "gcd",
            Capability::Bezout => "bezout",
            Capability::DecidableDivisibility => "decidable-divisibility",
            Capability::BoundWitness => "bound-witness",
            Capability::Field => "field",
            Capability::Characteristic => "characteristic",
        }
    }
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(g, s, t)` with `s·a + t·b = g`, `g | a`, `g | b` and `g`
/// associate-canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: Element,
    pub s: Element,
    pub t: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(Prime),
    /// Univariate polynomials. Constructed through [`Ring::poly`], which
    /// refuses a polynomial base.
    Poly(Box<Ring>),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("ZZ"),
            Ring::Rationals => f.write_str("QQ"),
            Ring::PrimeField(p) => write!(f, "Fp:{}", p.0),
            Ring::Poly(base) => write!(f, "poly:{base}"),
        }
    }
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        Ok(Ring::PrimeField(Prime::new(p)?))
    }

    pub fn poly(base: Ring) -> Result<Ring> {
        if let Ring::Poly(_) = base {
            return Err(AlgebraError::UnsupportedRing(format!(
                "poly:{base} (polynomial rings nest only once)"
            )));
        }
        Ok(Ring::Poly(Box::new(base)))
    }

    /// Coefficient ring of a polynomial ring.
    pub fn base(&self) -> Option<&Ring> {
        match self {
            Ring::Poly(base) => Some(base),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Ring::Rationals | Ring::PrimeField(_))
    }

    pub fn capabilities(&self) -> Vec<Capability> {
        use Capability::*;
        let mut caps = vec![
            DiscreteEquality,
            RecognizableUnits,
            DecidableDivisibility,
            Characteristic,
        ];
        match self {
            Ring::Integers => caps.extend([Gcd, Bezout, BoundWitness]),
            Ring::Rationals | Ring::PrimeField(_) => caps.extend([Gcd, Bezout, BoundWitness, Field]),
            Ring::Poly(base) => {
                if base.has(Gcd) {
                    caps.push(Gcd);
                }
                if base.has(BoundWitness) {
                    caps.push(BoundWitness);
                }
                if base.is_field() {
                    caps.push(Bezout);
                }
            }
        }
        caps.sort();
        caps
    }

    pub fn has(&self, capability: Capability) -> bool {
        self.capabilities().contains(&capability)
    }

    pub fn require(&self, capability: Capability) -> Result<()> {
        if self.has(capability) {
            Ok(())
        } else {
            Err(AlgebraError::CapabilityMissing {
                ring: self.to_string(),
                capability,
            })
        }
    }

    /// Bézout domain with a bound witness: ℤ, any field, or k\[X\].
    pub fn require_pid(&self) -> Result<()> {
        self.require(Capability::Bezout)?;
        self.require(Capability::BoundWitness)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::Integers | Ring::Rationals => 0,
            Ring::PrimeField(p) => p.0,
            Ring::Poly(base) => base.characteristic(),
        }
    }

    /// Whether `a` is a canonical payload of this ring.
    pub fn contains(&self, a: &Element) -> bool {
        match (self, a) {
            (Ring::Integers, Element::Int(_)) | (Ring::Rationals, Element::Rat(_)) => true,
            (Ring::PrimeField(p), Element::Residue(r)) => *r < p.0,
            (Ring::Poly(base), Element::Poly(c)) => {
                c.iter().all(|x| base.contains(x)) && c.last().is_none_or(|x| !base.is_zero(x))
            }
            _ => false,
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            Ring::Integers => Element::Int(BigInt::zero()),
            Ring::Rationals => Element::Rat(BigRational::zero()),
            Ring::PrimeField(_) => Element::Residue(0),
            Ring::Poly(_) => Element::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> Element {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Element {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_u64(&self, n: u64) -> Element {
        self.from_bigint(&BigInt::from(n))
    }

    /// Image of an integer under the canonical map ℤ → R.
    pub fn from_bigint(&self, n: &BigInt) -> Element {
        match self {
            Ring::Integers => Element::Int(n.clone()),
            Ring::Rationals => Element::Rat(BigRational::from_integer(n.clone())),
            Ring::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p.0));
                Element::Residue(u64::try_from(r).expect("residue fits in u64"))
            }
            Ring::Poly(base) => Element::Poly(poly::constant(base, base.from_bigint(n))),
        }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        match a {
            Element::Int(n) => n.is_zero(),
            Element::Rat(q) => q.is_zero(),
            Element::Residue(r) => *r == 0,
            Element::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Element) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x + y),
            (Ring::Rationals, Element::Rat(x), Element::Rat(y)) => Element::Rat(x + y),
            (Ring::PrimeField(p), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(((*x as u128 + *y as u128) % p.0 as u128) as u64)
            }
            (Ring::Poly(base), Element::Poly(x), Element::Poly(y)) => Element::Poly(poly::add(base, x, y)),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        match (self, a) {
            (Ring::Integers, Element::Int(x)) => Element::Int(-x),
            (Ring::Rationals, Element::Rat(x)) => Element::Rat(-x),
            (Ring::PrimeField(p), Element::Residue(x)) => Element::Residue(if *x == 0 { 0 } else { p.0 - x }),
            (Ring::Poly(base), Element::Poly(x)) => Element::Poly(poly::neg(base, x)),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x * y),
            (Ring::Rationals, Element::Rat(x), Element::Rat(y)) => Element::Rat(x * y),
            (Ring::PrimeField(p), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(((*x as u128 * *y as u128) % p.0 as u128) as u64)
            }
            (Ring::Poly(base), Element::Poly(x), Element::Poly(y)) => Element::Poly(poly::mul(base, x, y)),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn pow(&self, a: &Element, mut exp: u64) -> Element {
        let mut acc = self.one();
        let mut square = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &square);
            }
            exp >>= 1;
            if exp > 0 {
                square = self.mul(&square, &square);
            }
        }
        acc
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Element {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// The inverse of `a` when `a` is a unit.
    pub fn is_unit(&self, a: &Element) -> Option<Element> {
        match (self, a) {
            (Ring::Integers, Element::Int(x)) => (x.abs().is_one()).then(|| a.clone()),
            (Ring::Rationals, Element::Rat(x)) => (!x.is_zero()).then(|| Element::Rat(x.recip())),
            (Ring::PrimeField(p), Element::Residue(x)) => {
                (*x != 0).then(|| Element::Residue(integer::inverse_mod(*x, p.0)))
            }
            (Ring::Poly(base), Element::Poly(c)) if c.len() == 1 => {
                base.is_unit(&c[0]).map(|inv| Element::Poly(vec![inv]))
            }
            (Ring::Poly(_), Element::Poly(_)) => None,
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// The quotient `q` with `a·q = b` when `a` divides `b`. Zero divides only
    /// zero.
    pub fn divides(&self, a: &Element, b: &Element) -> Option<Element> {
        if self.is_zero(a) {
            return self.is_zero(b).then(|| self.zero());
        }
        match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => {
                let (q, r) = y.div_rem(x);
                r.is_zero().then_some(Element::Int(q))
            }
            (Ring::Rationals | Ring::PrimeField(_), _, _) => {
                let inv = self.is_unit(a).expect("nonzero field element");
                Some(self.mul(b, &inv))
            }
            (Ring::Poly(base), Element::Poly(x), Element::Poly(y)) => poly::div_exact(base, y, x).map(Element::Poly),
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// `(canonical, unit)` with `canonical·unit = a`.
    ///
    /// Canonical representatives: nonnegative integers, `0` or `1` in a
    /// field, monic polynomials over a field, polynomials with positive
    /// leading coefficient over ℤ.
    pub fn normalize_associate(&self, a: &Element) -> (Element, Element) {
        if self.is_zero(a) {
            return (a.clone(), self.one());
        }
        match (self, a) {
            (Ring::Integers, Element::Int(x)) => {
                if x.is_negative() {
                    (Element::Int(-x), self.from_i64(-1))
                } else {
                    (a.clone(), self.one())
                }
            }
            (Ring::Rationals | Ring::PrimeField(_), _) => (self.one(), a.clone()),
            (Ring::Poly(base), Element::Poly(c)) => {
                let lead = c.last().unwrap();
                let (_, unit) = base.normalize_associate(lead);
                let unit_inv = base.is_unit(&unit).expect("normalizing factor is a unit");
                let canonical = Element::Poly(poly::scale(base, c, &unit_inv));
                (canonical, Element::Poly(vec![unit]))
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn normalize(&self, a: &Element) -> Element {
        self.normalize_associate(a).0
    }

    pub fn are_associates(&self, a: &Element, b: &Element) -> bool {
        self.normalize(a) == self.normalize(b)
    }

    /// Greatest common divisor in canonical form; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Element, b: &Element) -> Result<Element> {
        self.require(Capability::Gcd)?;
        Ok(match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x.gcd(y)),
            (Ring::Rationals | Ring::PrimeField(_), _, _) => {
                if self.is_zero(a) && self.is_zero(b) {
                    self.zero()
                } else {
                    self.one()
                }
            }
            (Ring::Poly(base), Element::Poly(x), Element::Poly(y)) => Element::Poly(polygcd::gcd(base, x, y)?),
            _ => panic!("element does not belong to {self}"),
        })
    }

    /// Least common multiple in canonical form.
    pub fn lcm(&self, a: &Element, b: &Element) -> Result<Element> {
        let g = self.gcd(a, b)?;
        if self.is_zero(&g) {
            return Ok(self.zero());
        }
        let q = self.divides(&g, a).expect("gcd divides its arguments");
        Ok(self.normalize(&self.mul(&q, b)))
    }

    pub fn bezout(&self, a: &Element, b: &Element) -> Result<BezoutCertificate> {
        self.require(Capability::Bezout)?;
        if self.is_zero(a) && self.is_zero(b) {
            return Ok(BezoutCertificate {
                g: self.zero(),
                s: self.zero(),
                t: self.zero(),
            });
        }
        Ok(match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => {
                let (g, s, t) = integer::extended_gcd(x, y);
                BezoutCertificate {
                    g: Element::Int(g),
                    s: Element::Int(s),
                    t: Element::Int(t),
                }
            }
            (Ring::Rationals | Ring::PrimeField(_), _, _) => {
                if let Some(inv) = self.is_unit(a) {
                    BezoutCertificate {
                        g: self.one(),
                        s: inv,
                        t: self.zero(),
                    }
                } else {
                    let inv = self.is_unit(b).expect("nonzero field element");
                    BezoutCertificate {
                        g: self.one(),
                        s: self.zero(),
                        t: inv,
                    }
                }
            }
            (Ring::Poly(base), Element::Poly(x), Element::Poly(y)) => {
                let (g, s, t) = polygcd::extended_gcd_field(base, x, y);
                BezoutCertificate {
                    g: Element::Poly(g),
                    s: Element::Poly(s),
                    t: Element::Poly(t),
                }
            }
            _ => panic!("element does not belong to {self}"),
        })
    }

    /// Human-readable rendering.
    pub fn display(&self, a: &Element) -> String {
        match (self, a) {
            (Ring::Integers, Element::Int(x)) => x.to_string(),
            (Ring::Rationals, Element::Rat(x)) => x.to_string(),
            (Ring::PrimeField(_), Element::Residue(x)) => x.to_string(),
            (Ring::Poly(base), Element::Poly(c)) => display_poly(base, c),
            _ => panic!("element does not belong to {self}"),
        }
    }
}

fn display_poly(base: &Ring, c: &[Element]) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (k, coeff) in c.iter().enumerate().rev() {
        if base.is_zero(coeff) {
            continue;
        }
        let mut cs = base.display(coeff);
        if cs.contains('/') {
            cs = format!("({cs})");
        }
        let term = match (k, cs.as_str()) {
            (0, _) => cs,
            (_, "1") => monomial_name(k),
            (_, "-1") => format!("-{}", monomial_name(k)),
            _ => format!("{cs}*{}", monomial_name(k)),
        };
        terms.push(term);
    }
    terms.join(" + ").replace("+ -", "- ")
}

fn monomial_name(k: usize) -> String {
    if k == 1 {
        "X".into()
    } else {
        format!("X^{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(n: i64) -> Element {
        Element::int(n)
    }

    fn qx(coeffs: &[i64]) -> Element {
        Element::Poly(
            coeffs
                .iter()
                .map(|&c| Element::Rat(BigRational::from_integer(c.into())))
                .collect(),
        )
    }

    fn zx(coeffs: &[i64]) -> Element {
        Element::Poly(coeffs.iter().map(|&c| zz(c)).collect())
    }

    #[test]
    fn capability_table() {
        let zx = Ring::poly(Ring::Integers).unwrap();
        let qx = Ring::poly(Ring::Rationals).unwrap();
        assert!(Ring::Integers.has(Capability::Bezout));
        assert!(!Ring::Integers.has(Capability::Field));
        assert!(qx.has(Capability::Bezout) && qx.has(Capability::Gcd) && qx.has(Capability::BoundWitness));
        assert!(zx.has(Capability::Gcd) && zx.has(Capability::DecidableDivisibility));
        assert!(!zx.has(Capability::Bezout));
        assert!(Ring::prime_field(7).unwrap().has(Capability::Field));
    }

    #[test]
    fn prime_field_construction() {
        assert!(Ring::prime_field(5).is_ok());
        assert_eq!(Ring::prime_field(6), Err(AlgebraError::NotPrime(6)));
        assert_eq!(Ring::prime_field(1), Err(AlgebraError::NotPrime(1)));
        assert!(Ring::prime_field(1_000_000_007).is_ok());
        assert!(Ring::poly(Ring::poly(Ring::Integers).unwrap()).is_err());
    }

    #[test]
    fn units() {
        assert_eq!(Ring::Integers.is_unit(&zz(1)), Some(zz(1)));
        assert_eq!(Ring::Integers.is_unit(&zz(-1)), Some(zz(-1)));
        assert_eq!(Ring::Integers.is_unit(&zz(2)), None);
        let f5 = Ring::prime_field(5).unwrap();
        assert_eq!(f5.is_unit(&Element::Residue(2)), Some(Element::Residue(3)));
        assert_eq!(f5.is_unit(&Element::Residue(0)), None);
        let zxr = Ring::poly(Ring::Integers).unwrap();
        assert_eq!(zxr.is_unit(&zx(&[-1])), Some(zx(&[-1])));
        assert_eq!(zxr.is_unit(&zx(&[2])), None);
        assert_eq!(zxr.is_unit(&zx(&[1, 1])), None);
        let qxr = Ring::poly(Ring::Rationals).unwrap();
        assert!(qxr.is_unit(&qx(&[3])).is_some());
    }

    #[test]
    fn units_of_f5_match_multiplication_table() {
        let f5 = Ring::prime_field(5).unwrap();
        for a in 1..5u64 {
            let inv = (1..5u64).find(|b| a * b % 5 == 1).unwrap();
            assert_eq!(f5.is_unit(&Element::Residue(a)), Some(Element::Residue(inv)));
        }
    }

    #[test]
    fn gcd_examples() {
        let z = Ring::Integers;
        assert_eq!(z.gcd(&zz(0), &zz(0)).unwrap(), zz(0));
        assert_eq!(z.gcd(&zz(12), &zz(18)).unwrap(), zz(6));
        assert_eq!(z.gcd(&zz(-12), &zz(18)).unwrap(), zz(6));
        let q = Ring::poly(Ring::Rationals).unwrap();
        assert_eq!(q.gcd(&qx(&[-1, 0, 1]), &qx(&[1, -2, 1])).unwrap(), qx(&[-1, 1]));
    }

    #[test]
    fn bezout_examples() {
        let z = Ring::Integers;
        let c = z.bezout(&zz(12), &zz(18)).unwrap();
        assert_eq!(c.g, zz(6));
        assert_eq!(z.add(&z.mul(&c.s, &zz(12)), &z.mul(&c.t, &zz(18))), zz(6));
        let c = z.bezout(&zz(-7), &zz(0)).unwrap();
        assert_eq!((c.g, c.s, c.t), (zz(7), zz(-1), zz(0)));
        let c = z.bezout(&zz(0), &zz(0)).unwrap();
        assert_eq!((c.g, c.s, c.t), (zz(0), zz(0), zz(0)));
        let zxr = Ring::poly(Ring::Integers).unwrap();
        assert!(matches!(
            zxr.bezout(&zx(&[2]), &zx(&[0, 1])),
            Err(AlgebraError::CapabilityMissing {
                capability: Capability::Bezout,
                ..
            })
        ));
    }

    #[test]
    fn divides_examples() {
        let z = Ring::Integers;
        assert_eq!(z.divides(&zz(3), &zz(12)), Some(zz(4)));
        assert_eq!(z.divides(&zz(5), &zz(12)), None);
        assert_eq!(z.divides(&zz(0), &zz(0)), Some(zz(0)));
        assert_eq!(z.divides(&zz(0), &zz(3)), None);
        let zxr = Ring::poly(Ring::Integers).unwrap();
        assert_eq!(zxr.divides(&zx(&[1, 1]), &zx(&[-1, 0, 1])), Some(zx(&[-1, 1])));
        assert_eq!(zxr.divides(&zx(&[2]), &zx(&[1, 1])), None);
        assert_eq!(zxr.divides(&zx(&[1, 2]), &zx(&[1, 1])), None);
    }

    #[test]
    fn normalize_examples() {
        let z = Ring::Integers;
        assert_eq!(z.normalize_associate(&zz(-6)), (zz(6), zz(-1)));
        let q = Ring::poly(Ring::Rationals).unwrap();
        assert_eq!(q.normalize_associate(&qx(&[2, 2])), (qx(&[1, 1]), qx(&[2])));
        let f5 = Ring::prime_field(5).unwrap();
        assert_eq!(
            f5.normalize_associate(&Element::Residue(3)),
            (Element::Residue(1), Element::Residue(3))
        );
        let zxr = Ring::poly(Ring::Integers).unwrap();
        assert_eq!(zxr.normalize_associate(&zx(&[2, -4])), (zx(&[-2, 4]), zx(&[-1])));
        assert_eq!(zxr.normalize_associate(&zx(&[])), (zx(&[]), zx(&[1])));
    }

    #[test]
    fn characteristics() {
        assert_eq!(Ring::Rationals.characteristic(), 0);
        assert_eq!(Ring::prime_field(7).unwrap().characteristic(), 7);
        assert_eq!(Ring::poly(Ring::prime_field(2).unwrap()).unwrap().characteristic(), 2);
        assert_eq!(Ring::poly(Ring::Integers).unwrap().characteristic(), 0);
    }

    #[test]
    fn display_polynomials() {
        let q = Ring::poly(Ring::Rationals).unwrap();
        assert_eq!(q.display(&qx(&[-1, 0, 1])), "X^2 - 1");
        let zxr = Ring::poly(Ring::Integers).unwrap();
        assert_eq!(zxr.display(&zx(&[3, -1, 2])), "2*X^2 - X + 3");
        assert_eq!(zxr.display(&zx(&[])), "0");
    }
}
