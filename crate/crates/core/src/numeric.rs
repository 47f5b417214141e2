//! Exact rational scalars.
//!
//! [`Rational`] is the only scalar type used by the kernel. It wraps an
//! arbitrary-precision fraction that is always kept in lowest terms with a
//! positive denominator, so structural equality is numeric equality.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidLiteral(String),
}

/// An exact fraction `numer / denom` with `denom > 0` and `gcd(|numer|, denom) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, NumericError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literals. Panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator in Rational::frac")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.cmp(&Rational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, NumericError> {
        Rational::one().checked_div(self)
    }

    pub fn min(self, other: Rational) -> Rational {
        core::cmp::min(self, other)
    }

    pub fn max(self, other: Rational) -> Rational {
        core::cmp::max(self, other)
    }

    /// Integer value, if this is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    /// Positional decimal rendering rounded (half away from zero) to at most
    /// `significant` significant digits, with trailing zeros removed.
    ///
    /// This is lossy and is only meant for output formats that cannot carry
    /// fractions.
    pub fn to_decimal_string(&self, significant: u32) -> String {
        assert!(significant > 0, "need at least one significant digit");
        if self.is_zero() {
            return "0".to_string();
        }
        let negative = self.is_negative();
        let num = self.numer().abs();
        let den = self.denom().clone();
        let ten = BigInt::from(10u8);

        // Find exponent e with 10^e <= |x| < 10^(e+1).
        let int_part = &num / &den;
        let mut exp: i64 = if int_part.is_zero() {
            let mut e = 0i64;
            let mut scaled = num.clone();
            while scaled < den {
                scaled *= &ten;
                e -= 1;
            }
            e
        } else {
            int_part.to_string().len() as i64 - 1
        };

        // Scale so the rounded integer has exactly `significant` digits.
        let mut rounded = scaled_round(&num, &den, significant as i64 - 1 - exp);
        if rounded.to_string().len() as i64 > significant as i64 {
            // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
            exp += 1;
            rounded = scaled_round(&num, &den, significant as i64 - 1 - exp);
        }
        let shift = significant as i64 - 1 - exp; // value = rounded / 10^shift
        let digits = rounded.to_string();
        let mut out = if shift <= 0 {
            let mut s = digits;
            for _ in 0..(-shift) {
                s.push('0');
            }
            s
        } else {
            let shift = shift as usize;
            let (int_digits, frac_digits) = if digits.len() > shift {
                let split = digits.len() - shift;
                (digits[..split].to_string(), digits[split..].to_string())
            } else {
                let mut frac = String::new();
                for _ in 0..(shift - digits.len()) {
                    frac.push('0');
                }
                frac.push_str(&digits);
                ("0".to_string(), frac)
            };
            let frac_digits = frac_digits.trim_end_matches('0');
            if frac_digits.is_empty() {
                int_digits
            } else {
                let mut s = int_digits;
                s.push('.');
                s.push_str(frac_digits);
                s
            }
        };
        if negative && out != "0" {
            out.insert(0, '-');
        }
        out
    }
}

/// round(num/den * 10^shift), half away from zero, for non-negative num.
fn scaled_round(num: &BigInt, den: &BigInt, shift: i64) -> BigInt {
    let ten = BigInt::from(10u8);
    let (n, d) = if shift >= 0 {
        (num * num_traits::pow(ten, shift as usize), den.clone())
    } else {
        (num.clone(), den * num_traits::pow(ten, (-shift) as usize))
    };
    let (q, r) = n.div_rem(&d);
    if r * 2 >= d {
        q + 1
    } else {
        q
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

impl FromStr for Rational {
    type Err = NumericError;

    /// Accepts `p`, `p/q` and exact decimals such as `-0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let bad = || NumericError::InvalidLiteral(s.to_string());
        if let Some((num, den)) = text.split_once('/') {
            let num = parse_int(num.trim()).ok_or_else(bad)?;
            let den = den.trim();
            if den.starts_with(['-', '+']) {
                return Err(bad());
            }
            let den = parse_int(den).ok_or_else(bad)?;
            return Rational::new(num, den);
        }
        if let Some((int, frac)) = text.split_once('.') {
            let negative = int.starts_with('-');
            let int_digits = int.strip_prefix(['-', '+']).unwrap_or(int);
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let mut all = String::from(if int_digits.is_empty() { "0" } else { int_digits });
            all.push_str(frac);
            let magnitude = BigInt::parse_bytes(all.as_bytes(), 10).ok_or_else(bad)?;
            let scale = num_traits::pow(BigInt::from(10u8), frac.len());
            let numer = if negative { -magnitude } else { magnitude };
            return Rational::new(numer, scale);
        }
        parse_int(text).map(Rational::from_integer).ok_or_else(bad)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                self.0.$assign_method(rhs.0);
            }
        }
        impl<'a> $assign_trait<&'a Rational> for Rational {
            fn $assign_method(&mut self, rhs: &'a Rational) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

// Operator division panics on a zero divisor, like integer division.
// Fallible callers use `checked_div`.
impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(&rhs).expect("Rational division by zero")
    }
}

impl<'a> Div<&'a Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("Rational division by zero")
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("Rational division by zero")
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(&rhs).expect("Rational division by zero")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl From<Rational> for BigRational {
    fn from(r: Rational) -> BigRational {
        r.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Rational {
        Rational(r)
    }
}
