//! Exact scalar arithmetic: arbitrary-precision rationals and prime-field residues.
//!
//! Every value is self-contained: a rational knows it is rational, a residue
//! carries its modulus. Mixing values of different fields is a programming
//! error and panics. All arithmetic is exact; there are no tolerances
//! anywhere in this crate.
//!
//! Rationals that happen to be machine-size integers are stored inline:
//! structure constants are overwhelmingly 0 and ±1, and keeping those off
//! the heap is what makes dense zero-heavy tensors cheap. The invariant is
//! that the big-rational variant never holds a value the inline variant
//! could represent, so derived equality and hashing stay correct.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::KernelError;

/// The ground field: the rationals, or the integers modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    /// Prime-field constructor; rejects composite or oversized moduli.
    pub fn fp(p: u64) -> Result<Field, KernelError> {
        if !(2..(1 << 31)).contains(&p) {
            return Err(KernelError::Shape(format!(
                "prime field modulus {p} out of range (2 <= p < 2^31)"
            )));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(KernelError::Shape(format!("{p} is not prime")));
            }
            d += 1;
        }
        Ok(Field::Fp(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Int(0),
            Field::Fp(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Int(1),
            Field::Fp(p) => Scalar::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Int(n),
            Field::Fp(p) => {
                let p = *p as i64;
                Scalar::Fp {
                    v: n.rem_euclid(p) as u64,
                    p: p as u64,
                }
            }
        }
    }

    /// Parses "n", "-n" or "n/d". Over F_p, "n/d" means n * d^{-1}.
    pub fn parse(&self, s: &str) -> Result<Scalar, KernelError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num)
            .map_err(|_| KernelError::Shape(format!("bad scalar literal {s:?}")))?;
        let den = match den {
            Some(d) => BigInt::from_str(d)
                .map_err(|_| KernelError::Shape(format!("bad scalar literal {s:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(KernelError::Shape(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Q => Ok(normalize(BigRational::new(num, den))),
            Field::Fp(p) => {
                let pb = BigInt::from(*p);
                let red = |x: &BigInt| -> u64 {
                    let m = ((x % &pb) + &pb) % &pb;
                    let (_, digits) = m.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                };
                let n = Scalar::Fp { v: red(&num), p: *p };
                let d = Scalar::Fp { v: red(&den), p: *p };
                if d.is_zero() {
                    return Err(KernelError::Shape(format!(
                        "denominator of {s:?} vanishes mod {p}"
                    )));
                }
                Ok(&n * &d.inv()?)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element. `Int` and `Q` are both rationals over Q; the
/// `Q` variant never holds a value representable as `Int`. Residues
/// satisfy 0 <= v < p.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(i64),
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

/// Demotes an exact rational to the inline variant when possible.
fn normalize(r: BigRational) -> Scalar {
    if r.denom().is_one() {
        if let Some(n) = r.numer().to_i64() {
            return Scalar::Int(n);
        }
    }
    Scalar::Q(r)
}

fn to_ratio(s: &Scalar) -> BigRational {
    match s {
        Scalar::Int(n) => BigRational::from_integer(BigInt::from(*n)),
        Scalar::Q(r) => r.clone(),
        Scalar::Fp { .. } => panic!("residue used as a rational"),
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Int(_) | Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => *n == 0,
            Scalar::Q(_) => false, // a normalized big rational is never 0
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => *n == 1,
            Scalar::Q(_) => false,
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(n) => match n.checked_neg() {
                Some(m) => Scalar::Int(m),
                None => normalize(-to_ratio(self)),
            },
            Scalar::Q(r) => normalize(-r),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Scalar, KernelError> {
        if self.is_zero() {
            return Err(KernelError::Shape("division by zero".into()));
        }
        match self {
            Scalar::Int(n) if *n == 1 || *n == -1 => Ok(Scalar::Int(*n)),
            Scalar::Int(_) | Scalar::Q(_) => Ok(normalize(to_ratio(self).recip())),
            Scalar::Fp { v, p } => Ok(Scalar::Fp {
                v: mod_inv(*v, *p),
                p: *p,
            }),
        }
    }

    /// Canonical textual form: "n" or "n/d" over Q, the residue over F_p.
    /// `Field::parse` round-trips this exactly.
    pub fn canonical_string(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    fn check_same(&self, other: &Scalar) {
        let (a, b) = (self.field(), other.field());
        assert!(a == b, "scalar field mismatch: {a} vs {b}");
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime, a != 0 mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not invertible mod p");
    t0.rem_euclid(p as i128) as u64
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => match a.checked_add(*b) {
                Some(c) => Scalar::Int(c),
                None => normalize(to_ratio(self) + to_ratio(rhs)),
            },
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => normalize(to_ratio(self) + to_ratio(rhs)),
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)] // a - b = a + (-b)
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        if self.is_zero() {
            return self.clone();
        }
        if rhs.is_zero() {
            return rhs.clone();
        }
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => match a.checked_mul(*b) {
                Some(c) => Scalar::Int(c),
                None => normalize(to_ratio(self) * to_ratio(rhs)),
            },
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => normalize(to_ratio(self) * to_ratio(rhs)),
        }
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(_) | Scalar::Q(_) => write!(f, "{}", self.canonical_string()),
            Scalar::Fp { v, p } => write!(f, "{v} (mod {p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_roundtrip() {
        let f = Field::Q;
        for s in ["0", "-7", "3/4", "-22/7", "10/5"] {
            let x = f.parse(s).unwrap();
            let again = f.parse(&x.canonical_string()).unwrap();
            assert_eq!(x, again);
        }
        // reduction and positive denominator
        assert_eq!(f.parse("10/5").unwrap().canonical_string(), "2");
        assert_eq!(f.parse("1/-2").unwrap().canonical_string(), "-1/2");
    }

    #[test]
    fn integer_values_normalize_to_the_inline_variant() {
        let f = Field::Q;
        // 1/2 + 1/2 = 1 must come back as the inline integer
        let half = f.parse("1/2").unwrap();
        assert_eq!(&half + &half, Scalar::Int(1));
        assert_eq!(f.parse("4/2").unwrap(), Scalar::Int(2));
        // 1 / (1/2) = 2, again inline
        assert_eq!(half.inv().unwrap(), Scalar::Int(2));
        // equality across construction paths
        assert_eq!(f.parse("3").unwrap(), f.from_i64(3));
    }

    #[test]
    fn overflow_promotes_to_big_rationals() {
        let f = Field::Q;
        let big = f.from_i64(i64::MAX);
        let sum = &big + &f.one();
        assert!(matches!(sum, Scalar::Q(_)));
        assert_eq!(&sum - &f.one(), big);
        let neg_min = f.from_i64(i64::MIN).neg();
        assert_eq!(neg_min.canonical_string(), "9223372036854775808");
    }

    #[test]
    fn fp_arithmetic() {
        let f = Field::fp(7).unwrap();
        let a = f.from_i64(-3); // 4 mod 7
        assert_eq!(a, Scalar::Fp { v: 4, p: 7 });
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(f.parse("3/4").unwrap(), &f.from_i64(3) * &f.from_i64(4).inv().unwrap());
    }

    #[test]
    fn fp_rejects_composite() {
        assert!(Field::fp(6).is_err());
        assert!(Field::fp(1).is_err());
        assert!(Field::fp(2).is_ok());
    }

    #[test]
    fn exact_inverses() {
        let f = Field::Q;
        let a = f.parse("-355/113").unwrap();
        assert!((&a + &a.neg()).is_zero());
        assert!((&a * &a.inv().unwrap()).is_one());
    }
}
