use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Ground field descriptor: characteristic 0 means Q, otherwise the prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldCtx {
    characteristic: u64,
}

impl TryFrom<u64> for FieldCtx {
    type Error = LinalgError;
    fn try_from(c: u64) -> Result<Self, Self::Error> {
        FieldCtx::new(c)
    }
}

impl From<FieldCtx> for u64 {
    fn from(c: FieldCtx) -> u64 {
        c.characteristic
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    pub const RATIONALS: FieldCtx = FieldCtx { characteristic: 0 };

    /// Characteristic 0 or an odd prime; 2 and composites are rejected.
    pub fn new(characteristic: u64) -> Result<Self, LinalgError> {
        if characteristic == 0 {
            return Ok(Self::RATIONALS);
        }
        if characteristic == 2 || !is_prime(characteristic) || characteristic > u32::MAX as u64 {
            return Err(LinalgError::InvalidCharacteristic(characteristic));
        }
        Ok(FieldCtx { characteristic })
    }

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p == 0 {
            return Err(LinalgError::InvalidCharacteristic(0));
        }
        Self::new(p)
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_char_zero(&self) -> bool {
        self.characteristic == 0
    }

    /// True when the integer `n` vanishes in the field (p | n, or n = 0 over Q).
    pub fn divides(&self, n: i64) -> bool {
        if self.characteristic == 0 {
            n == 0
        } else {
            n.rem_euclid(self.characteristic as i64) == 0
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        if self.characteristic == 0 {
            Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = self.characteristic;
            Scalar::Mod(ModP { v: n.rem_euclid(p as i64) as u64, p })
        }
    }

    pub fn bigint(&self, n: &BigInt) -> Scalar {
        if self.characteristic == 0 {
            Scalar::Rat(BigRational::from_integer(n.clone()))
        } else {
            let p = BigInt::from(self.characteristic);
            let r = n.mod_floor(&p);
            Scalar::Mod(ModP { v: r.to_u64().expect("residue fits"), p: self.characteristic })
        }
    }

    /// The image of num/den; fails when den vanishes in the field.
    pub fn frac(&self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        self.big_frac(&BigInt::from(num), &BigInt::from(den))
    }

    pub fn big_frac(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, LinalgError> {
        let d = self.bigint(den);
        if d.is_zero() {
            return Err(LinalgError::NotInvertible(format!("{}/{} in characteristic {}", num, den, self.characteristic)));
        }
        Ok(&self.bigint(num) * &d.inv().expect("nonzero"))
    }

    pub fn rational(&self, q: &BigRational) -> Result<Scalar, LinalgError> {
        self.big_frac(q.numer(), q.denom())
    }

    /// Parses "n", "-n" or "n/d".
    pub fn parse(&self, s: &str) -> Result<Scalar, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                self.big_frac(&n, &d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.bigint(&n))
            }
        }
    }

    /// Binomial coefficient C(n, k) as a field element; zero for k < 0 or k > n.
    pub fn binom(&self, n: i64, k: i64) -> Scalar {
        self.bigint(&binom_int(n, k))
    }
}

/// Integer binomial C(n, k) for n >= 0; zero outside 0 <= k <= n.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Residue class modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP {
    v: u64,
    p: u64,
}

impl ModP {
    pub fn value(&self) -> u64 {
        self.v
    }
}

/// Exact field element over Q (reduced fraction) or F_p (canonical residue).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(ModP),
}

impl Scalar {
    pub fn ctx(&self) -> FieldCtx {
        match self {
            Scalar::Rat(_) => FieldCtx::RATIONALS,
            Scalar::Mod(m) => FieldCtx { characteristic: m.p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod(m) => m.v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod(m) => m.v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod(m) => Scalar::Mod(ModP { v: pow_mod(m.v, m.p - 2, m.p), p: m.p }),
        })
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut acc = self.ctx().one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerator and positive denominator; residues are reported as v/1 with 0 <= v < p.
    pub fn to_fraction(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rat(q) => (q.numer().clone(), q.denom().clone()),
            Scalar::Mod(m) => (BigInt::from(m.v), BigInt::one()),
        }
    }

    /// Some square root inside the prime field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().sqrt();
                let d = q.denom().sqrt();
                if &n * &n == *q.numer() && &d * &d == *q.denom() {
                    Some(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    None
                }
            }
            Scalar::Mod(m) => (0..m.p).find(|x| x * x % m.p == m.v).map(|v| Scalar::Mod(ModP { v, p: m.p })),
        }
    }

    fn check(&self, other: &Scalar) {
        debug_assert_eq!(self.ctx(), other.ctx(), "scalar field mismatch");
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod(m) => write!(f, "{}", m.v),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(ModP { v: (a.v + b.v) % a.p, p: a.p }),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(ModP { v: (a.v + a.p - b.v) % a.p, p: a.p }),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.check(o);
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(ModP { v: a.v * b.v % a.p, p: a.p }),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a) => Scalar::Mod(ModP { v: (a.p - a.v) % a.p, p: a.p }),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_char_two_and_composites() {
        assert!(FieldCtx::new(2).is_err());
        assert!(FieldCtx::new(9).is_err());
        assert!(FieldCtx::new(7).is_ok());
    }

    #[test]
    fn fractions_reduce() {
        let q = FieldCtx::rationals();
        assert_eq!(q.frac(4, -6).unwrap().to_string(), "-2/3");
        let f5 = FieldCtx::new(5).unwrap();
        assert_eq!(f5.frac(1, 2).unwrap(), f5.int(3));
        assert!(f5.frac(1, 5).is_err());
    }

    #[test]
    fn parse_and_binomials() {
        let f3 = FieldCtx::new(3).unwrap();
        assert_eq!(f3.parse("-1/2").unwrap(), f3.int(1));
        assert_eq!(f3.binom(3, 1), f3.zero());
        assert_eq!(binom_int(10, 3), BigInt::from(120));
        assert_eq!(binom_int(3, 5), BigInt::zero());
    }

    #[test]
    fn square_roots() {
        let q = FieldCtx::rationals();
        assert_eq!(q.frac(9, 4).unwrap().sqrt(), Some(q.frac(3, 2).unwrap()));
        assert_eq!(q.frac(1, 2).unwrap().sqrt(), None);
        let f7 = FieldCtx::new(7).unwrap();
        let r = f7.int(2).sqrt().unwrap();
        assert_eq!(&r * &r, f7.int(2));
        assert_eq!(f7.int(3).sqrt(), None);
    }
}
