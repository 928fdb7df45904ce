//! Knot invariants computed from braid words: the Alexander polynomial via
//! the reduced Burau representation, an independent Seifert-matrix route for
//! positive words, the torus closed form, and genus bookkeeping.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::braid::{closure_components, BraidError, BraidWord};
use crate::laurent::{laurent_det, LaurentError, LaurentPoly};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InvarError {
    #[error("closure has {0} components; this invariant needs a knot")]
    MultiComponent(usize),
    #[error("operation defined for positive braid words only")]
    NonPositiveWord,
    #[error("torus parameters ({0}, {1}) are not coprime")]
    NonCoprime(i64, i64),
    #[error("Seifert pairing is not unimodular; not a valid surface basis")]
    NotUnimodular,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// Size limits for the polynomial computations; sweeps skip the Alexander
/// polynomial beyond them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlexanderCaps {
    pub max_index: usize,
    pub max_len: usize,
}

impl Default for AlexanderCaps {
    fn default() -> Self {
        AlexanderCaps {
            max_index: 20,
            max_len: 400,
        }
    }
}

impl AlexanderCaps {
    pub fn allows(&self, w: &BraidWord) -> bool {
        w.index() <= self.max_index && w.len() <= self.max_len
    }
}

/// The reduced Burau matrix of a word, built by right-multiplying per-letter
/// column operations on the identity.
fn reduced_burau(w: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let n = w.index();
    let size = n - 1;
    let mut cols: Vec<Vec<LaurentPoly>> = (0..size)
        .map(|j| {
            let mut col = vec![LaurentPoly::zero(); size];
            col[j] = LaurentPoly::one();
            col
        })
        .collect();
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(-1, 1);
    let add_scaled = |dst: &mut Vec<LaurentPoly>, src: &[LaurentPoly], s: Option<&LaurentPoly>| {
        for (d, c) in dst.iter_mut().zip(src) {
            *d = match s {
                Some(s) => &*d + &(c * s),
                None => &*d + c,
            };
        }
    };
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize - 1;
        let ck: Vec<LaurentPoly> = cols[k].clone();
        if l > 0 {
            if k > 0 {
                add_scaled(&mut cols[k - 1], &ck, Some(&t));
            }
            if k + 1 < size {
                add_scaled(&mut cols[k + 1], &ck, None);
            }
            for (i, c) in ck.iter().enumerate() {
                cols[k][i] = -&(c * &t);
            }
        } else {
            if k > 0 {
                add_scaled(&mut cols[k - 1], &ck, None);
            }
            if k + 1 < size {
                add_scaled(&mut cols[k + 1], &ck, Some(&t_inv));
            }
            for (i, c) in ck.iter().enumerate() {
                cols[k][i] = -&(c * &t_inv);
            }
        }
    }
    // Transpose the column store into row-major form.
    (0..size)
        .map(|i| (0..size).map(|j| cols[j][i].clone()).collect())
        .collect()
}

/// The one-variable Alexander polynomial of the closure of any braid word,
/// normalized to lowest degree zero with a positive constant term. Works
/// for links as well as knots.
pub fn alexander_link(w: &BraidWord) -> Result<LaurentPoly, InvarError> {
    let n = w.index();
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let mut m = reduced_burau(w);
    let one = LaurentPoly::one();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &one;
    }
    let det = laurent_det(m)?;
    let num = &det * &LaurentPoly::t_pow_minus_one(1);
    let alex = num.exact_div(&LaurentPoly::t_pow_minus_one(n as i64))?;
    Ok(alex.normalized())
}

/// The Alexander polynomial of the closure knot.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly, InvarError> {
    let comps = closure_components(w);
    if comps != 1 {
        return Err(InvarError::MultiComponent(comps));
    }
    let alex = alexander_link(w)?;
    debug_assert!(alex.eval(1).abs().is_one(), "Alexander(1) must be a unit");
    Ok(alex)
}

/// A generator of the first homology of the Seifert surface of a positive
/// braid: two consecutive crossings in one column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Brick {
    col: usize,
    top: usize,
    bottom: usize,
}

fn bricks_of(w: &BraidWord) -> Result<Vec<Brick>, InvarError> {
    if !w.is_positive() {
        return Err(InvarError::NonPositiveWord);
    }
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); w.index()];
    for (pos, &l) in w.letters().iter().enumerate() {
        columns[l as usize - 1].push(pos);
    }
    let mut bricks = Vec::new();
    for (col, positions) in columns.iter().enumerate() {
        for pair in positions.windows(2) {
            bricks.push(Brick {
                col,
                top: pair[0],
                bottom: pair[1],
            });
        }
    }
    Ok(bricks)
}

#[derive(Clone, Copy, Debug)]
struct BrickPairing {
    stack_lower_first: bool,
    interleave_up: (bool, i64),
    interleave_down: (bool, i64),
}

const BRICK_PAIRING: BrickPairing = BrickPairing {
    stack_lower_first: true,
    interleave_up: (true, 1),
    interleave_down: (false, -1),
};

fn seifert_matrix_with(
    w: &BraidWord,
    pairing: BrickPairing,
) -> Result<Vec<Vec<i64>>, InvarError> {
    let comps = closure_components(w);
    if comps != 1 {
        return Err(InvarError::MultiComponent(comps));
    }
    let bricks = bricks_of(w)?;
    let m = bricks.len();
    let mut v = vec![vec![0i64; m]; m];
    let set = |xy: bool, x: usize, y: usize, val: i64, v: &mut Vec<Vec<i64>>| {
        if xy {
            v[x][y] = val;
        } else {
            v[y][x] = val;
        }
    };
    for (x, bx) in bricks.iter().enumerate() {
        v[x][x] = -1;
        for (y, by) in bricks.iter().enumerate() {
            if by.col == bx.col && bx.bottom == by.top {
                set(pairing.stack_lower_first, x, y, 1, &mut v);
            }
            if by.col == bx.col + 1 {
                if bx.top < by.top && by.top < bx.bottom && bx.bottom < by.bottom {
                    let (xy, s) = pairing.interleave_up;
                    set(xy, x, y, s, &mut v);
                }
                if by.top < bx.top && bx.top < by.bottom && by.bottom < bx.bottom {
                    let (xy, s) = pairing.interleave_down;
                    set(xy, x, y, s, &mut v);
                }
            }
        }
    }
    Ok(v)
}

/// The Seifert matrix of the closure of a positive braid word, in the brick
/// basis of its fiber surface.
pub fn seifert_matrix(w: &BraidWord) -> Result<Vec<Vec<i64>>, InvarError> {
    seifert_matrix_with(w, BRICK_PAIRING)
}

/// The Alexander polynomial through the Seifert matrix: `det(V - t V^T)`,
/// normalized. Checks that `V - V^T` is unimodular first.
pub fn alexander_seifert(w: &BraidWord) -> Result<LaurentPoly, InvarError> {
    alexander_seifert_with(w, BRICK_PAIRING)
}

fn alexander_seifert_with(
    w: &BraidWord,
    pairing: BrickPairing,
) -> Result<LaurentPoly, InvarError> {
    let v = seifert_matrix_with(w, pairing)?;
    let m = v.len();
    let as_poly = |scale: &dyn Fn(usize, usize) -> i64| {
        (0..m)
            .map(|i| (0..m).map(|j| LaurentPoly::constant(scale(i, j))).collect())
            .collect::<Vec<Vec<LaurentPoly>>>()
    };
    let skew = laurent_det(as_poly(&|i, j| v[i][j] - v[j][i]))?;
    if !skew.eval(1).abs().is_one() {
        return Err(InvarError::NotUnimodular);
    }
    let t = LaurentPoly::t();
    let entries: Vec<Vec<LaurentPoly>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    &LaurentPoly::constant(v[i][j]) - &(&LaurentPoly::constant(v[j][i]) * &t)
                })
                .collect()
        })
        .collect();
    Ok(laurent_det(entries)?.normalized())
}

/// Alexander polynomial computed along both routes for a positive knot
/// word, failing loudly when the Burau and Seifert answers differ.
pub fn alexander_cross_checked(w: &BraidWord) -> Result<LaurentPoly, InvarError> {
    let by_burau = alexander(w)?;
    let by_seifert = alexander_seifert(w)?;
    assert_eq!(
        by_burau, by_seifert,
        "Burau and Seifert Alexander polynomials disagree for {w}"
    );
    Ok(by_burau)
}

/// The closed form for the torus knot `T(p, q)`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly, InvarError> {
    if p < 1 || q < 1 || num_integer::gcd(p, q) != 1 {
        return Err(InvarError::NonCoprime(p, q));
    }
    if p == 1 || q == 1 {
        return Ok(LaurentPoly::one());
    }
    let num = &LaurentPoly::t_pow_minus_one(p * q) * &LaurentPoly::t_pow_minus_one(1);
    let den = &LaurentPoly::t_pow_minus_one(p) * &LaurentPoly::t_pow_minus_one(q);
    Ok(num.exact_div(&den)?.normalized())
}

/// The genus of the closure of a positive knot word, read off the word:
/// `(length - index + 1) / 2`.
pub fn bennequin_genus(w: &BraidWord) -> Result<i64, InvarError> {
    if !w.is_positive() {
        return Err(InvarError::NonPositiveWord);
    }
    let comps = closure_components(w);
    if comps != 1 {
        return Err(InvarError::MultiComponent(comps));
    }
    let g2 = w.len() as i64 - w.index() as i64 + 1;
    debug_assert!(g2 % 2 == 0);
    Ok(g2 / 2)
}

/// The comparable invariants of a knot given by a braid word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotProfile {
    pub genus: i64,
    pub alexander: LaurentPoly,
    pub determinant: BigInt,
    pub positive_braid: bool,
}

/// Compute genus, Alexander polynomial and determinant of the closure.
/// The genus is the Seifert-surface genus, read off the word for positive
/// words and off the polynomial degree (the closures here are all fibered)
/// otherwise; multi-component closures are profiled the same way.
pub fn profile(w: &BraidWord) -> Result<KnotProfile, InvarError> {
    let alexander = alexander_link(w)?;
    let positive_braid = w.is_positive();
    let comps = closure_components(w) as i64;
    let genus = if positive_braid {
        let g = (w.len() as i64 - w.index() as i64 + 2 - comps) / 2;
        debug_assert_eq!(g, (alexander.span() + 1 - comps) / 2);
        g
    } else {
        ((alexander.span() + 1 - comps) / 2).max(0)
    };
    let determinant = alexander.eval(-1).abs();
    debug_assert!(if comps % 2 == 1 {
        alexander.is_palindromic()
    } else {
        alexander.is_anti_palindromic()
    });
    Ok(KnotProfile {
        genus,
        alexander,
        determinant,
        positive_braid,
    })
}

/// Whether two braid words close to links with identical genus, Alexander
/// polynomial and determinant. (Positivity of the presentations is not
/// compared.)
pub fn same_profile(w1: &BraidWord, w2: &BraidWord) -> Result<bool, InvarError> {
    let p1 = profile(w1)?;
    let p2 = profile(w2)?;
    Ok(p1.genus == p2.genus
        && p1.alexander == p2.alexander
        && p1.determinant == p2.determinant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::cp_braid;
    use crate::lshape::LRegion;

    fn word(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn poly(coef: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64_coeffs(0, coef)
    }

    #[test]
    fn unknot_presentations() {
        assert_eq!(alexander(&word("s1")).unwrap(), LaurentPoly::one());
        assert_eq!(alexander(&word("s2 s1")).unwrap(), LaurentPoly::one());
        assert_eq!(
            alexander(&BraidWord::empty(1)).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn trefoil_from_both_index_two_and_three() {
        let expected = poly(&[1, -1, 1]);
        assert_eq!(alexander(&word("W(2)^3")).unwrap(), expected);
        assert_eq!(alexander(&word("W(3)^2")).unwrap(), expected);
    }

    #[test]
    fn figure_eight_uses_burau_inverses() {
        assert_eq!(alexander(&word("s1 S2 s1 S2")).unwrap(), poly(&[1, -3, 1]));
    }

    #[test]
    fn multi_component_closures_are_rejected_by_the_knot_route() {
        assert!(matches!(
            alexander(&word("W(2)^2")),
            Err(InvarError::MultiComponent(2))
        ));
        assert_eq!(alexander_link(&word("W(2)^2")).unwrap(), poly(&[1, -1]));
    }

    #[test]
    fn torus_battery_matches_closed_form() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, 9)] {
            let w = crate::braid::w_word(q as usize, q as usize).pow(p);
            let direct = alexander(&w).unwrap();
            let closed = torus_alexander(p, q).unwrap();
            assert_eq!(direct, closed, "T({p},{q})");
            assert_eq!(torus_alexander(q, p).unwrap(), closed);
        }
        assert!(torus_alexander(4, 6).is_err());
        assert_eq!(torus_alexander(1, 5).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn seifert_route_agrees_on_the_battery() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
            let w = crate::braid::w_word(q as usize, q as usize).pow(p);
            assert_eq!(
                alexander_seifert(&w).unwrap(),
                torus_alexander(p, q).unwrap(),
                "T({p},{q})"
            );
        }
        let pretzel = cp_braid(&LRegion::new(3, 5, 3, 4).unwrap());
        assert_eq!(
            alexander_cross_checked(&pretzel).unwrap(),
            alexander(&pretzel).unwrap()
        );
    }

    #[test]
    fn pretzel_polynomial_matches_the_known_value() {
        let w = cp_braid(&LRegion::new(3, 5, 3, 4).unwrap());
        let expected = poly(&[1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1]);
        assert_eq!(alexander(&w).unwrap(), expected);
        assert_eq!(alexander_seifert(&w).unwrap(), expected);
        let p = profile(&w).unwrap();
        assert_eq!(p.genus, 5);
        assert_eq!(p.determinant, BigInt::from(1));
        assert!(p.positive_braid);
    }

    #[test]
    fn bennequin_examples() {
        assert_eq!(bennequin_genus(&word("W(2)^3")).unwrap(), 1);
        assert_eq!(bennequin_genus(&word("W(5)^3 W(3)")).unwrap(), 5);
        let big = cp_braid(&LRegion::new(11, 13, 16, 17).unwrap());
        assert_eq!(bennequin_genus(&big).unwrap(), 95);
        assert!(bennequin_genus(&word("S1")).is_err());
    }

    #[test]
    fn alexander_is_a_conjugation_and_stabilization_invariant() {
        let w = word("W(5)^3 W(3)");
        let conj = {
            let u = word("s2 s4 s1").embed(5).unwrap();
            let mut x = u.clone();
            x.extend(&w);
            x.extend(&u.inverse());
            x
        };
        assert_eq!(alexander(&conj).unwrap(), alexander(&w).unwrap());
        let stab = {
            let mut x = w.embed(6).unwrap();
            x.push(5).unwrap();
            x
        };
        assert_eq!(alexander(&stab).unwrap(), alexander(&w).unwrap());
    }

    #[test]
    fn profiles_distinguish_and_identify() {
        let trefoil = word("W(2)^3");
        let cinquefoil = word("W(2)^5");
        assert!(!same_profile(&trefoil, &cinquefoil).unwrap());
        let knot_pair_a = word("W(5)^4 W(3)^-1");
        let knot_pair_b = cp_braid(&LRegion::new(3, 5, 3, 4).unwrap());
        assert_eq!(closure_components(&knot_pair_a), 1);
        assert!(same_profile(&knot_pair_a, &knot_pair_b).unwrap());
        let link_pair_a = word("W(7)^4 W(3)^-1");
        let link_pair_b = word("W(7)^3 W(5)");
        assert_eq!(closure_components(&link_pair_a), 3);
        assert!(same_profile(&link_pair_a, &link_pair_b).unwrap());
        let pa = profile(&link_pair_a).unwrap();
        assert!(!pa.positive_braid);
        assert_eq!(pa.genus, profile(&link_pair_b).unwrap().genus);
    }

    #[test]
    fn caps_gate_on_size() {
        let caps = AlexanderCaps::default();
        assert!(caps.allows(&word("W(5)^3 W(3)")));
        assert!(!caps.allows(&crate::braid::w_word(21, 21)));
        assert!(!caps.allows(&crate::braid::w_word(5, 5).pow(200)));
    }
}
