//! Scalar traits for distance weights and certainty degrees.
//!
//! Weights must be totally ordered so that ties between candidate
//! interpretations are detected exactly; floating point types therefore do
//! not implement [`Weight`]. Certainty degrees only need a partial order and
//! are available as floats or exact rationals.

use std::fmt::{Debug, Display};
use std::ops::Add;

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Non-negative, totally ordered, additive weight.
pub trait Weight: Clone + Ord + Zero + Add<Output = Self> + Debug + Display {}

impl<T> Weight for T where T: Clone + Ord + Zero + Add<Output = T> + Debug + Display {}

/// A degree in `[0, 1]`.
pub trait Certainty: Clone + PartialOrd + Zero + One + Debug + Display {
    /// Parses a decimal (`0.9`) or a fraction (`9/10`).
    fn parse_value(text: &str) -> Option<Self>;
}

macro_rules! impl_float_certainty {
    ($($t:ty),*) => {$(
        impl Certainty for $t {
            fn parse_value(text: &str) -> Option<Self> {
                let text = text.trim();
                match text.split_once('/') {
                    Some((n, d)) => {
                        let n: $t = n.trim().parse().ok()?;
                        let d: $t = d.trim().parse().ok()?;
                        (d != 0.0).then(|| n / d)
                    }
                    None => text.parse().ok(),
                }
            }
        }
    )*};
}

macro_rules! impl_ratio_certainty {
    ($($t:ty),*) => {$(
        impl Certainty for Ratio<$t> {
            fn parse_value(text: &str) -> Option<Self> {
                let text = text.trim();
                if let Some((n, d)) = text.split_once('/') {
                    let n: $t = n.trim().parse().ok()?;
                    let d: $t = d.trim().parse().ok()?;
                    return (d != 0).then(|| Ratio::new(n, d));
                }
                let (int, frac) = text.split_once('.').unwrap_or((text, ""));
                if !frac.chars().all(|c| c.is_ascii_digit()) {
                    return None;
                }
                let negative = int.starts_with('-');
                let int: $t = if int.is_empty() || int == "-" { 0 } else { int.parse().ok()? };
                let mut denom: $t = 1;
                let mut numer: $t = 0;
                for c in frac.chars() {
                    denom = denom.checked_mul(10)?;
                    numer = numer.checked_mul(10)?.checked_add(c.to_digit(10)? as $t)?;
                }
                let whole = int.checked_mul(denom)?;
                let numer = if negative { whole.checked_sub(numer)? } else { whole.checked_add(numer)? };
                Some(Ratio::new(numer, denom))
            }
        }
    )*};
}

impl_float_certainty!(f32, f64);
impl_ratio_certainty!(i32, i64);

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn rational_parsing() {
        assert_eq!(Rational64::parse_value("0.9"), Some(Rational64::new(9, 10)));
        assert_eq!(Rational64::parse_value("1/2"), Some(Rational64::new(1, 2)));
        assert_eq!(Rational64::parse_value("1"), Some(Rational64::new(1, 1)));
        assert_eq!(Rational64::parse_value(" .25 "), Some(Rational64::new(1, 4)));
        assert_eq!(Rational64::parse_value("1/0"), None);
        assert_eq!(Rational64::parse_value("x"), None);
    }

    #[test]
    fn float_parsing() {
        assert_eq!(f64::parse_value("3/4"), Some(0.75));
        assert_eq!(f64::parse_value("0.5"), Some(0.5));
    }
}
