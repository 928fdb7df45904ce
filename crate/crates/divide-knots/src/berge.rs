//! Parameter calculus for Berge's doubly-primitive knots of Types III-VI.
//!
//! A knot in these families is indexed by a type tag and integers
//! `(delta, epsilon, A, k, t)` with `delta, epsilon` signs, `k >= 0` and
//! `t` arbitrary. [`derive`] produces the dependent quantities `a`, `l`,
//! `B`, `b` and the lens-space surgery coefficient `b*B + delta*A`, and
//! [`berge_braid`] the braid word `W(B)^b W(A+1-a)^delta` whose closure is
//! the knot.

use thiserror::Error;

use crate::braid::{w_word, BraidWord};
use crate::sign::Sign;

/// Tag for the four parameter families handled by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum BergeType {
    III,
    IV,
    V,
    VI,
}

impl BergeType {
    pub const ALL: [BergeType; 4] = [BergeType::III, BergeType::IV, BergeType::V, BergeType::VI];

    /// The offset `a` in the braid `W(B)^b W(A+1-a)^delta`: 0 for III and VI,
    /// 1 for IV and V.
    pub fn small_a(self) -> i64 {
        match self {
            BergeType::III | BergeType::VI => 0,
            BergeType::IV | BergeType::V => 1,
        }
    }
}

impl std::fmt::Display for BergeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BergeType::III => "III",
            BergeType::IV => "IV",
            BergeType::V => "V",
            BergeType::VI => "VI",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for BergeType {
    type Err = BergeError;

    fn from_str(s: &str) -> Result<Self, BergeError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "III" | "3" => Ok(BergeType::III),
            "IV" | "4" => Ok(BergeType::IV),
            "V" | "5" => Ok(BergeType::V),
            "VI" | "6" => Ok(BergeType::VI),
            other => Err(BergeError::UnknownType(other.to_string())),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BergeError {
    #[error("unknown type tag {0:?} (expected III, IV, V or VI)")]
    UnknownType(String),
    #[error("Type {knot_type} requires A {requirement}, got A = {big_a}")]
    InvalidA {
        knot_type: BergeType,
        requirement: &'static str,
        big_a: i64,
    },
    #[error("k must be non-negative, got k = {0}")]
    NegativeK(i64),
    #[error("derived B = {big_b} must satisfy 2A < B (2A = {two_a})")]
    SmallB { big_b: i64, two_a: i64 },
    #[error("Type IV requires A*l - epsilon even, got A = {big_a}, l = {l}")]
    OddHalf { big_a: i64, l: i64 },
    #[error("translation forbids epsilon*p = {0} here")]
    ForbiddenTranslation(i64),
    #[error("Type VI translation requires epsilon = -1 and p = 0, got epsilon = {epsilon}, p = {p}")]
    BadViTranslation { epsilon: Sign, p: i64 },
    #[error("translation produced an out-of-range pair (A = {big_a}, k = {k})")]
    TranslationRange { big_a: i64, k: i64 },
    #[error("integer overflow in parameter arithmetic")]
    Overflow,
}

fn narrow(v: i128) -> Result<i64, BergeError> {
    i64::try_from(v).map_err(|_| BergeError::Overflow)
}

/// A validated parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct BergeParams {
    pub knot_type: BergeType,
    pub delta: Sign,
    pub epsilon: Sign,
    pub big_a: i64,
    pub k: i64,
    pub t: i64,
    /// True when Type VI input arrived with `(epsilon, k) != (-1, 0)` and was
    /// normalized to the forced values.
    pub vi_normalized: bool,
}

/// A parameter tuple together with every derived quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct BergeRecord {
    pub params: BergeParams,
    /// 0 for Types III and VI, 1 for IV and V.
    pub small_a: i64,
    pub l: i64,
    pub big_b: i64,
    pub b: i64,
    /// Surgery coefficient `b*B + delta*A`.
    pub coef: i64,
}

/// Validate a raw parameter tuple.
///
/// Type VI inputs with `(epsilon, k) != (-1, 0)` are normalized to the forced
/// values and flagged via [`BergeParams::vi_normalized`].
pub fn validate(
    knot_type: BergeType,
    delta: Sign,
    epsilon: Sign,
    big_a: i64,
    k: i64,
    t: i64,
) -> Result<BergeParams, BergeError> {
    if k < 0 {
        return Err(BergeError::NegativeK(k));
    }
    let bad = |requirement| BergeError::InvalidA {
        knot_type,
        requirement,
        big_a,
    };
    match knot_type {
        BergeType::III => {
            if big_a < 2 {
                return Err(bad(">= 2"));
            }
        }
        BergeType::IV => {
            if big_a < 5 || big_a % 2 == 0 {
                return Err(bad("odd and >= 5"));
            }
        }
        BergeType::V => {
            if big_a < 3 || big_a % 2 == 0 {
                return Err(bad("odd and >= 3"));
            }
        }
        BergeType::VI => {
            if big_a < 4 || big_a % 2 != 0 {
                return Err(bad("even and >= 4"));
            }
        }
    }
    let (epsilon, k, vi_normalized) = if knot_type == BergeType::VI {
        (Sign::Minus, 0, epsilon != Sign::Minus || k != 0)
    } else {
        (epsilon, k, false)
    };
    let params = BergeParams {
        knot_type,
        delta,
        epsilon,
        big_a,
        k,
        t,
        vi_normalized,
    };
    let record = derive(&params)?;
    debug_assert!(2 * params.big_a < record.big_b);
    Ok(params)
}

/// The multiplier `l` appearing in `B`.
fn l_of(knot_type: BergeType, epsilon: Sign, k: i64) -> i64 {
    match (knot_type, epsilon) {
        (BergeType::III, _) => 3 + 2 * k,
        (BergeType::IV, _) => 5 + 2 * k,
        (BergeType::V, Sign::Plus) => 2 + k,
        (BergeType::V, Sign::Minus) => 3 + k,
        (BergeType::VI, _) => 2,
    }
}

/// Populate every derived field of the record.
pub fn derive(params: &BergeParams) -> Result<BergeRecord, BergeError> {
    let BergeParams {
        knot_type,
        delta,
        epsilon,
        big_a,
        k,
        t,
        ..
    } = *params;
    let a128 = big_a as i128;
    let eps = epsilon.val() as i128;
    let del = delta.val() as i128;
    let l = l_of(knot_type, epsilon, k);
    let big_b = match knot_type {
        BergeType::III => a128 * l as i128 - eps,
        BergeType::IV => {
            let num = a128 * l as i128 - eps;
            if num % 2 != 0 {
                return Err(BergeError::OddHalf { big_a, l });
            }
            num / 2
        }
        BergeType::V => a128 * l as i128 + eps,
        BergeType::VI => 2 * a128 + 1,
    };
    if 2 * a128 >= big_b {
        return Err(BergeError::SmallB {
            big_b: narrow(big_b)?,
            two_a: narrow(2 * a128)?,
        });
    }
    let b = match knot_type {
        BergeType::III => -del * eps * (2 * a128 + t as i128 * big_b),
        BergeType::IV | BergeType::V => -del * eps * (a128 + t as i128 * big_b),
        BergeType::VI => del * (a128 - 1 + t as i128 * big_b),
    };
    let coef = b
        .checked_mul(big_b)
        .and_then(|v| v.checked_add(del * a128))
        .ok_or(BergeError::Overflow)?;
    Ok(BergeRecord {
        params: *params,
        small_a: knot_type.small_a(),
        l,
        big_b: narrow(big_b)?,
        b: narrow(b)?,
        coef: narrow(coef)?,
    })
}

/// Validate and derive in one step.
pub fn record_for(
    knot_type: BergeType,
    delta: Sign,
    epsilon: Sign,
    big_a: i64,
    k: i64,
    t: i64,
) -> Result<BergeRecord, BergeError> {
    derive(&validate(knot_type, delta, epsilon, big_a, k, t)?)
}

/// The surgery coefficient recomputed from the per-type closed form,
/// independent of `b*B + delta*A`.
pub fn coef_closed_form(record: &BergeRecord) -> Result<i64, BergeError> {
    let p = &record.params;
    let a = p.big_a as i128;
    let eps = p.epsilon.val() as i128;
    let del = p.delta.val() as i128;
    let k = p.k as i128;
    let t = p.t as i128;
    let b2 = (record.big_b as i128) * (record.big_b as i128);
    let value = match p.knot_type {
        BergeType::III => -del * eps * (6 * a * a - 3 * eps * a + k * (2 * a) * (2 * a) + t * b2),
        BergeType::IV => -del * eps * ((5 * a * a - 3 * eps * a) / 2 + k * a * a + t * b2),
        BergeType::V => match p.epsilon {
            Sign::Plus => -del * (2 * a * a + k * a * a + t * b2),
            Sign::Minus => del * (3 * a * a + k * a * a + t * b2),
        },
        BergeType::VI => del * (2 * a * a - 1 + t * b2),
    };
    narrow(value)
}

/// The canonical sign choice `delta = -epsilon * sgn(t)` (with `sgn(0) = +1`)
/// that makes the surgery coefficient positive.
pub fn delta_choice(epsilon: Sign, t: i64) -> Sign {
    -(epsilon * Sign::sgn(t))
}

/// Translate the `(n, p)` parameters used elsewhere in the literature into
/// this crate's `(A, k)`.
///
/// For Type VI the translation involves no `p`; it must be passed as 0.
pub fn translate_np(
    knot_type: BergeType,
    epsilon: Sign,
    n: i64,
    p: i64,
) -> Result<(i64, i64), BergeError> {
    let ep = epsilon.val() * p;
    let (big_a, k) = match knot_type {
        BergeType::III => {
            if ep == -1 || ep == 0 {
                return Err(BergeError::ForbiddenTranslation(ep));
            }
            let k = if epsilon.is_positive() { p - 1 } else { p - 2 };
            (n + 1, k)
        }
        BergeType::IV | BergeType::V => {
            if (-2..=1).contains(&ep) {
                return Err(BergeError::ForbiddenTranslation(ep));
            }
            let k = if epsilon.is_positive() { p - 2 } else { p - 3 };
            let big_a = if knot_type == BergeType::IV {
                2 * n + 1
            } else {
                2 * n + 3
            };
            (big_a, k)
        }
        BergeType::VI => {
            if epsilon != Sign::Minus || p != 0 {
                return Err(BergeError::BadViTranslation { epsilon, p });
            }
            (2 * n + 2, 0)
        }
    };
    if big_a < 2 || k < 0 {
        return Err(BergeError::TranslationRange { big_a, k });
    }
    Ok((big_a, k))
}

/// Inverse of [`translate_np`]: recover `(n, p)` from `(A, k)`.
pub fn translate_np_inv(
    knot_type: BergeType,
    epsilon: Sign,
    big_a: i64,
    k: i64,
) -> Result<(i64, i64), BergeError> {
    if k < 0 {
        return Err(BergeError::NegativeK(k));
    }
    match knot_type {
        BergeType::III => {
            let p = if epsilon.is_positive() { k + 1 } else { k + 2 };
            Ok((big_a - 1, p))
        }
        BergeType::IV | BergeType::V => {
            let p = if epsilon.is_positive() { k + 2 } else { k + 3 };
            let off = if knot_type == BergeType::IV { 1 } else { 3 };
            if (big_a - off) % 2 != 0 {
                return Err(BergeError::InvalidA {
                    knot_type,
                    requirement: "odd",
                    big_a,
                });
            }
            Ok(((big_a - off) / 2, p))
        }
        BergeType::VI => {
            if epsilon != Sign::Minus || k != 0 {
                return Err(BergeError::BadViTranslation { epsilon, p: k });
            }
            if big_a % 2 != 0 {
                return Err(BergeError::InvalidA {
                    knot_type,
                    requirement: "even",
                    big_a,
                });
            }
            Ok(((big_a - 2) / 2, 0))
        }
    }
}

/// The braid word `W(B)^b W(A+1-a)^delta` of index `B` whose closure is the
/// knot. Negative exponents emit inverse letters.
pub fn berge_braid(record: &BergeRecord) -> BraidWord {
    let index = record.big_b as usize;
    let m = (record.params.big_a + 1 - record.small_a) as usize;
    let mut word = w_word(index, index).pow(record.b);
    word.extend(&w_word(m, index).pow(record.params.delta.val()));
    word
}
