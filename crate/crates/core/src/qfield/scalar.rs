//! The coefficient field Q(q): reduced fractions of integer polynomials in `q`.
//!
//! Every value is kept in a canonical form so that structural equality is
//! value equality: the denominator is nonzero with positive leading
//! coefficient, numerator and denominator share no content or polynomial
//! factor, and zero is always `0/1`. All higher layers rely on this.

use super::poly::ZPoly;
use super::QFieldError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

thread_local! {
    static WORK: Cell<u64> = const { Cell::new(0) };
}

/// Thread-local count of scalar multiplications/divisions performed so far.
/// Deterministic for a fixed computation, so reports can quote it as a
/// machine-independent cost measure.
pub fn work_counter() -> u64 {
    WORK.with(|w| w.get())
}

fn bump_work() {
    WORK.with(|w| w.set(w.get() + 1));
}

/// An element of Q(q) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: ZPoly,
    den: ZPoly,
}

impl Scalar {
    fn normalized(num: ZPoly, den: ZPoly) -> Result<Scalar, QFieldError> {
        if den.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar {
                num: ZPoly::zero(),
                den: ZPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(Scalar { num, den })
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar {
            num: ZPoly::from_int(n),
            den: ZPoly::one(),
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Scalar, QFieldError> {
        Scalar::normalized(ZPoly::from_int(num), ZPoly::from_int(den))
    }

    pub fn from_rational(r: &BigRational) -> Scalar {
        Scalar::normalized(
            ZPoly::from_bigint(r.numer().clone()),
            ZPoly::from_bigint(r.denom().clone()),
        )
        .expect("rational denominator nonzero")
    }

    pub fn from_polys(num: ZPoly, den: ZPoly) -> Result<Scalar, QFieldError> {
        Scalar::normalized(num, den)
    }

    /// The generator `q`.
    pub fn q() -> Scalar {
        Scalar {
            num: ZPoly::monomial(BigInt::one(), 1),
            den: ZPoly::one(),
        }
    }

    /// `q^k` for any integer `k`; negative powers are fractions `1/q^|k|`.
    pub fn q_pow(k: i64) -> Scalar {
        if k >= 0 {
            Scalar {
                num: ZPoly::monomial(BigInt::one(), k as usize),
                den: ZPoly::one(),
            }
        } else {
            Scalar {
                num: ZPoly::one(),
                den: ZPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<Scalar, QFieldError> {
        Scalar::normalized(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, QFieldError> {
        bump_work();
        Scalar::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar, QFieldError> {
        if e >= 0 {
            Ok(Scalar {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            })
        } else {
            if self.is_zero() {
                return Err(QFieldError::DivisionByZero);
            }
            Ok(Scalar::normalized(
                self.den.pow((-e) as u32),
                self.num.pow((-e) as u32),
            )?)
        }
    }

    /// Exact evaluation at a rational point `q = q0`. The excluded values
    /// -1, 0, 1 are rejected, as is any point where the denominator vanishes;
    /// the error names the offending factor.
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational, QFieldError> {
        let minus_one = -BigRational::one();
        if q0.is_zero() || q0.is_one() || *q0 == minus_one {
            return Err(QFieldError::ExcludedPoint { point: q0.to_string() });
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QFieldError::PoleAtPoint {
                point: q0.to_string(),
                factor: self.den.to_string(),
            });
        }
        Ok(self.num.eval(q0) / d)
    }

    /// For constants (numerator and denominator of degree 0), the value as an
    /// exact rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(
            self.num.as_constant()?,
            self.den.as_constant()?,
        ))
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Pivot-selection key: prefer small denominators, then small numerators.
    pub fn complexity(&self) -> (usize, usize) {
        (
            self.den.degree().map_or(0, |d| d + 1),
            self.num.degree().map_or(0, |d| d + 1),
        )
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::normalized(num, den).expect("nonzero denominators")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::normalized(num, den).expect("nonzero denominators")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        bump_work();
        // Cross-reduce first to keep intermediate products small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::normalized(&n1 * &n2, &d1 * &d2).expect("nonzero denominators")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `num` when the denominator is 1, otherwise
    /// `(num)/(den)`. Parsed back bit-exactly by [`super::parse_scalar`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Scalar, D::Error> {
        let s = String::deserialize(deserializer)?;
        super::parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}
