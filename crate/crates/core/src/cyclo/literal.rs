//! JSON literal syntax for cyclotomic values:
//! `{"n": 9, "terms": [[4, -1], [5, -1]]}` with optional third entry as the
//! denominator, or a bare integer for a rational integer constant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use super::{Cyclotomic, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("expected an integer or a {{\"n\", \"terms\"}} object, found {0}")]
    Shape(String),
    #[error("root order must be a positive integer")]
    BadOrder,
    #[error("term {0} must be [exponent, numerator] or [exponent, numerator, denominator]")]
    BadTerm(usize),
    #[error("zero denominator in term {0}")]
    ZeroDenominator(usize),
}

fn big_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn int_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(i) => json!(i),
        Err(_) => Value::String(n.to_string()),
    }
}

impl Cyclotomic {
    pub fn from_literal(v: &Value) -> Result<Self, LiteralError> {
        if let Some(n) = big_int(v) {
            return Ok(Cyclotomic::from_rational(Rational::from_integer(n)));
        }
        let obj = v
            .as_object()
            .ok_or_else(|| LiteralError::Shape(v.to_string()))?;
        let order = obj
            .get("n")
            .and_then(Value::as_u64)
            .filter(|&n| n >= 1)
            .ok_or(LiteralError::BadOrder)?;
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| LiteralError::Shape(v.to_string()))?;
        let mut out = Vec::with_capacity(terms.len());
        for (i, t) in terms.iter().enumerate() {
            let parts = t.as_array().ok_or(LiteralError::BadTerm(i))?;
            if !(2..=3).contains(&parts.len()) {
                return Err(LiteralError::BadTerm(i));
            }
            let e = parts[0].as_i64().ok_or(LiteralError::BadTerm(i))?;
            let num = big_int(&parts[1]).ok_or(LiteralError::BadTerm(i))?;
            let den = match parts.get(2) {
                Some(d) => big_int(d).ok_or(LiteralError::BadTerm(i))?,
                None => BigInt::one(),
            };
            if den.is_zero() {
                return Err(LiteralError::ZeroDenominator(i));
            }
            out.push((e, Rational::new(num, den)));
        }
        Ok(Cyclotomic::new(order, out))
    }

    /// Inverse of [`Cyclotomic::from_literal`]; rational integers are written
    /// as bare integers.
    pub fn to_literal(&self) -> Value {
        if let Some(q) = self.to_rational() {
            if q.is_integer() {
                return int_value(q.numer());
            }
        }
        let terms: Vec<Value> = self
            .terms()
            .map(|(e, c)| {
                if c.is_integer() {
                    json!([e, int_value(c.numer())])
                } else {
                    json!([e, int_value(c.numer()), int_value(c.denom())])
                }
            })
            .collect();
        json!({ "n": self.order(), "terms": terms })
    }
}

/// `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let d = Cyclotomic::from_literal(&json!({"n": 9, "terms": [[4, -1], [5, -1]]})).unwrap();
        assert_eq!(d, Cyclotomic::from_int_terms(9, &[(4, -1), (5, -1)]));
        assert_eq!(Cyclotomic::from_literal(&json!(-2)).unwrap(), Cyclotomic::from_integer(-2));
        let half = Cyclotomic::from_literal(&json!({"n": 1, "terms": [[0, 1, 2]]})).unwrap();
        assert_eq!(
            half.to_rational().unwrap(),
            Rational::new(1.into(), 2.into())
        );
        let big = Cyclotomic::from_literal(&json!("123456789012345678901234567890")).unwrap();
        assert_eq!(big.to_literal(), json!("123456789012345678901234567890"));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Cyclotomic::from_literal(&json!({"n": 0, "terms": []})),
            Err(LiteralError::BadOrder)
        );
        assert_eq!(
            Cyclotomic::from_literal(&json!({"n": 3, "terms": [[1]]})),
            Err(LiteralError::BadTerm(0))
        );
        assert_eq!(
            Cyclotomic::from_literal(&json!({"n": 3, "terms": [[1, 1, 0]]})),
            Err(LiteralError::ZeroDenominator(0))
        );
        assert!(matches!(
            Cyclotomic::from_literal(&json!([1, 2])),
            Err(LiteralError::Shape(_))
        ));
    }

    #[test]
    fn literal_round_trip() {
        let x = Cyclotomic::new(
            8,
            [
                (0, Rational::from_integer(1.into())),
                (3, Rational::new((-3).into(), 4.into())),
            ],
        );
        assert_eq!(Cyclotomic::from_literal(&x.to_literal()).unwrap(), x);
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&Rational::new(6.into(), 3.into())), "2");
        assert_eq!(format_rational(&Rational::new((-1).into(), 6.into())), "-1/6");
    }
}
