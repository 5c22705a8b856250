use num::{BigInt, BigRational};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `"p/q"`, or `"p"` for integers.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}
