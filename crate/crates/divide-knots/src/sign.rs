use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

/// A sign in `{+1, -1}`.
///
/// Used for the `delta` and `epsilon` parameter slots and for exponent signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The numeric value, `+1` or `-1`.
    pub fn val(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Sign of an integer with the convention `sgn(0) = +1`.
    pub fn sgn(t: i64) -> Sign {
        if t < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.val() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("expected +1 or -1, got {other}")),
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = String;

    fn try_from(v: i64) -> Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("expected +1 or -1, got {other}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sgn_of_zero_is_plus() {
        assert_eq!(Sign::sgn(0), Sign::Plus);
        assert_eq!(Sign::sgn(7), Sign::Plus);
        assert_eq!(Sign::sgn(-3), Sign::Minus);
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!((-Sign::Plus).val(), -1);
    }
}
