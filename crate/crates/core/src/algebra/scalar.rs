//! Exact coefficient fields: prime fields `F_p` with `p < 2^31` and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// `Z/pZ` for a prime `p < 2^31`.
    Prime(u32),
    /// The rational numbers.
    Rational,
}

impl Field {
    /// Checked constructor for a prime field.
    pub fn prime(p: u32) -> Result<Field> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Prime(p) => Scalar::Mod(n.rem_euclid(p as i64) as u32, p),
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    /// `num / den` in the field; fails when `den` vanishes in the field.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match *self {
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &pm) + &pm) % &pm;
                    u32::try_from(r).expect("residue fits in u32")
                };
                let d = Scalar::Mod(reduce(den), p);
                Scalar::Mod(reduce(num), p).div(&d)
            }
            Field::Rational => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rat(Box::new(BigRational::new(num.clone(), den.clone()))))
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            Field::Prime(p) => p,
            Field::Rational => 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "QQ"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form: the least nonnegative residue, or a
/// reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u32, u32),
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod(_, p) => Field::Prime(*p),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(v, _) => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(v, _) => *v == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                debug_assert_eq!(p, q);
                let s = *a as u64 + *b as u64;
                Scalar::Mod((s % *p as u64) as u32, *p)
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() + b.as_ref())),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Mod(a, p) => Scalar::Mod(if *a == 0 { 0 } else { p - a }, *p),
            Scalar::Rat(a) => Scalar::Rat(Box::new(-a.as_ref().clone())),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                debug_assert_eq!(p, q);
                Scalar::Mod(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() * b.as_ref())),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod(a, p) => Scalar::Mod(pow_mod(*a as u64, *p as u64 - 2, *p as u64) as u32, *p),
            Scalar::Rat(a) => Scalar::Rat(Box::new(a.recip())),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // symmetric residues read better in printed polynomials
            Scalar::Mod(v, p) => {
                if *v > p / 2 {
                    write!(f, "-{}", p - v)
                } else {
                    write!(f, "{v}")
                }
            }
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", -q.numer(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}
