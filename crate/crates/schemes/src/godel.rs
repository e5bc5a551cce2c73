//! Gödel numbering of a two-sorted expression grammar, decoded with a
//! comutumorphism.
//!
//! Expressions and terms are encoded into arbitrary-precision integers by
//! prime-power packing:
//!
//! ```text
//! enc_e(Add(e, t))   = 2^enc_e(e) * 3^enc_t(t)
//! enc_e(Minus(e, t)) = 5^enc_e(e) * 7^enc_t(t)
//! enc_e(FromT(t))    = 11^enc_t(t)
//! enc_t(Lit(n))      = 2^enc_lit(n)
//! enc_t(Neg(t))      = 3^enc_t(t)
//! enc_t(Paren(e))    = 5^enc_e(e)
//! enc_lit(n)         = 2n+1 if n >= 0, else -2n
//! ```
//!
//! Encoding is plain recursion and serves as the independent oracle; decoding
//! unfolds the number back into the two mutually recursive sorts with
//! [`comutu`], branching on which prime exponents are present. Decoding is
//! defined only on images of the encoder; anything else is a [`DecodeError`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::extra::{comutu, observe1, observe2, Nu1, Nu2};
use crate::functors::{ExprF, ExprSig, TermF, TermSig};

/// A two-sorted arithmetic expression (the first sort).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Add(Box<Expr>, Box<Term>),
    Minus(Box<Expr>, Box<Term>),
    FromT(Box<Term>),
}

/// A term in the expression grammar (the second sort).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Lit(i64),
    Neg(Box<Term>),
    Paren(Box<Expr>),
}

/// Failure to interpret a number as the encoding of an expression or term.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("not a valid encoding: residual factor {0} after stripping primes 2,3,5,7,11")]
    ResidualFactor(BigUint),
    #[error("not a valid encoding: unexpected exponent pattern {0:?} for sort {1}")]
    BadShape((u64, u64, u64, u64, u64), &'static str),
    #[error("not a valid encoding: exponent too large to decode")]
    ExponentOverflow,
}

/// Bound on any single prime exponent we are willing to decode. Encodings are
/// nested exponent towers, so any practical value is far below this.
const MAX_EXPONENT: u64 = 1 << 22;

/// Literal payload encoding: odd numbers are non-negative, even are negative.
pub fn enc_lit(n: i64) -> BigUint {
    if n >= 0 {
        BigUint::from(2 * n as u64 + 1)
    } else {
        BigUint::from(2 * n.unsigned_abs())
    }
}

fn dec_lit(e: &BigUint) -> Result<i64, DecodeError> {
    let e: u64 = small(e)?;
    if e == 0 {
        return Err(DecodeError::BadShape((e, 0, 0, 0, 0), "literal"));
    }
    if e % 2 == 1 {
        Ok(((e - 1) / 2) as i64)
    } else {
        Ok(-((e / 2) as i64))
    }
}

fn small(e: &BigUint) -> Result<u64, DecodeError> {
    u64::try_from(e)
        .ok()
        .filter(|&v| v <= MAX_EXPONENT)
        .ok_or(DecodeError::ExponentOverflow)
}

/// Encode an expression; the independent oracle for [`decode_expr`].
pub fn encode_expr(e: &Expr) -> BigUint {
    match e {
        Expr::Add(e, t) => pow_big(2u32, &encode_expr(e)) * pow_big(3u32, &encode_term(t)),
        Expr::Minus(e, t) => pow_big(5u32, &encode_expr(e)) * pow_big(7u32, &encode_term(t)),
        Expr::FromT(t) => pow_big(11u32, &encode_term(t)),
    }
}

/// Encode a term; the independent oracle for [`decode_term`].
pub fn encode_term(t: &Term) -> BigUint {
    match t {
        Term::Lit(n) => pow_big(2u32, &enc_lit(*n)),
        Term::Neg(t) => pow_big(3u32, &encode_term(t)),
        Term::Paren(e) => pow_big(5u32, &encode_expr(e)),
    }
}

fn pow_big(base: u32, exp: &BigUint) -> BigUint {
    let e: u32 = u32::try_from(exp).expect("encoder exponents must stay small; use the checked encoders for untrusted trees");
    BigUint::from(base).pow(e)
}

/// Default ceiling on encoded size: roughly 10^4000.
pub const DEFAULT_MAX_BITS: u64 = 14_000;

/// The tree's encoding would exceed the requested size bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("encoding exceeds the size bound")]
pub struct EncodingTooBig;

fn checked_pow(base: u32, exp: &BigUint, max_bits: u64) -> Result<BigUint, EncodingTooBig> {
    // The exponent is itself an encoding; reject it early if the resulting
    // power could not possibly fit.
    let e = u64::try_from(exp).map_err(|_| EncodingTooBig)?;
    let bits_per_unit = (base as f64).log2();
    if (e as f64) * bits_per_unit > max_bits as f64 {
        return Err(EncodingTooBig);
    }
    Ok(BigUint::from(base).pow(u32::try_from(e).map_err(|_| EncodingTooBig)?))
}

/// [`encode_expr`] with a bit-size ceiling, for generator use: towers that
/// would blow past `max_bits` are rejected instead of computed.
pub fn encode_expr_checked(e: &Expr, max_bits: u64) -> Result<BigUint, EncodingTooBig> {
    let n = match e {
        Expr::Add(e, t) => {
            checked_pow(2, &encode_expr_checked(e, max_bits)?, max_bits)?
                * checked_pow(3, &encode_term_checked(t, max_bits)?, max_bits)?
        }
        Expr::Minus(e, t) => {
            checked_pow(5, &encode_expr_checked(e, max_bits)?, max_bits)?
                * checked_pow(7, &encode_term_checked(t, max_bits)?, max_bits)?
        }
        Expr::FromT(t) => checked_pow(11, &encode_term_checked(t, max_bits)?, max_bits)?,
    };
    if n.bits() > max_bits {
        return Err(EncodingTooBig);
    }
    Ok(n)
}

/// [`encode_term`] with a bit-size ceiling; see [`encode_expr_checked`].
pub fn encode_term_checked(t: &Term, max_bits: u64) -> Result<BigUint, EncodingTooBig> {
    let n = match t {
        Term::Lit(n) => checked_pow(2, &enc_lit(*n), max_bits)?,
        Term::Neg(t) => checked_pow(3, &encode_term_checked(t, max_bits)?, max_bits)?,
        Term::Paren(e) => checked_pow(5, &encode_expr_checked(e, max_bits)?, max_bits)?,
    };
    if n.bits() > max_bits {
        return Err(EncodingTooBig);
    }
    Ok(n)
}

/// Exponents of (2, 3, 5, 7, 11) in `n`; fails if any other prime divides it.
pub fn factorise11(n: &BigUint) -> Result<(BigUint, BigUint, BigUint, BigUint, BigUint), DecodeError> {
    let mut rest = n.clone();
    let mut exps = [BigUint::zero(), BigUint::zero(), BigUint::zero(), BigUint::zero(), BigUint::zero()];
    for (slot, p) in [2u32, 3, 5, 7, 11].iter().enumerate() {
        let p = BigUint::from(*p);
        while (&rest % &p).is_zero() && !rest.is_zero() {
            rest /= &p;
            exps[slot] += 1u32;
        }
    }
    if rest.is_one() {
        let [e2, e3, e5, e7, e11] = exps;
        Ok((e2, e3, e5, e7, e11))
    } else {
        Err(DecodeError::ResidualFactor(rest))
    }
}

fn shape(t: &(BigUint, BigUint, BigUint, BigUint, BigUint)) -> (u64, u64, u64, u64, u64) {
    let s = |b: &BigUint| u64::try_from(b).unwrap_or(u64::MAX);
    (s(&t.0), s(&t.1), s(&t.2), s(&t.3), s(&t.4))
}

/// Check that `n` is the encoding of some expression.
pub fn validate_expr(n: &BigUint) -> Result<(), DecodeError> {
    let f = factorise11(n)?;
    let (e2, e3, e5, e7, e11) = &f;
    if !e2.is_zero() || !e3.is_zero() {
        if !(e5.is_zero() && e7.is_zero() && e11.is_zero()) || e2.is_zero() || e3.is_zero() {
            return Err(DecodeError::BadShape(shape(&f), "expr"));
        }
        validate_expr(e2)?;
        validate_term(e3)
    } else if !e5.is_zero() || !e7.is_zero() {
        if !e11.is_zero() || e5.is_zero() || e7.is_zero() {
            return Err(DecodeError::BadShape(shape(&f), "expr"));
        }
        validate_expr(e5)?;
        validate_term(e7)
    } else if !e11.is_zero() {
        validate_term(e11)
    } else {
        Err(DecodeError::BadShape(shape(&f), "expr"))
    }
}

/// Check that `n` is the encoding of some term.
pub fn validate_term(n: &BigUint) -> Result<(), DecodeError> {
    let f = factorise11(n)?;
    let (e2, e3, e5, e7, e11) = &f;
    if !e7.is_zero() || !e11.is_zero() {
        return Err(DecodeError::BadShape(shape(&f), "term"));
    }
    if !e2.is_zero() {
        if !e3.is_zero() || !e5.is_zero() {
            return Err(DecodeError::BadShape(shape(&f), "term"));
        }
        dec_lit(e2).map(|_| ())
    } else if !e3.is_zero() {
        if !e5.is_zero() {
            return Err(DecodeError::BadShape(shape(&f), "term"));
        }
        validate_term(e3)
    } else if !e5.is_zero() {
        validate_expr(e5)
    } else {
        Err(DecodeError::BadShape(shape(&f), "term"))
    }
}

/// The coalgebra pair driving the decoding unfold. Inputs are assumed
/// pre-validated; a malformed number falls back to a `Lit(0)` leaf rather
/// than diverging.
fn gen_expr(n: BigUint) -> ExprF<BigUint, BigUint> {
    match factorise11(&n) {
        Ok((e2, e3, e5, e7, e11)) => {
            if !e2.is_zero() || !e3.is_zero() {
                ExprF::Add(e2, e3)
            } else if !e5.is_zero() || !e7.is_zero() {
                ExprF::Minus(e5, e7)
            } else {
                ExprF::FromT(e11)
            }
        }
        Err(_) => ExprF::FromT(BigUint::from(2u32)),
    }
}

fn gen_term(n: BigUint) -> TermF<BigUint, BigUint> {
    match factorise11(&n) {
        Ok((e2, e3, e5, _e7, _e11)) => {
            if !e2.is_zero() {
                TermF::Lit(dec_lit(&e2).unwrap_or(0))
            } else if !e3.is_zero() {
                TermF::Neg(e3)
            } else {
                TermF::Paren(e5)
            }
        }
        Err(_) => TermF::Lit(0),
    }
}

/// The decoder's codata pair: both sorts unfolded from one number.
pub fn decode_codata(n: BigUint) -> (Nu1<ExprSig, TermSig>, Nu2<ExprSig, TermSig>) {
    comutu::<ExprSig, TermSig, BigUint>(gen_expr, gen_term, n)
}

fn expr_of_nu(n: &Nu1<ExprSig, TermSig>) -> Expr {
    match observe1(n) {
        ExprF::Add(e, t) => Expr::Add(Box::new(expr_of_nu(&e)), Box::new(term_of_nu(&t))),
        ExprF::Minus(e, t) => Expr::Minus(Box::new(expr_of_nu(&e)), Box::new(term_of_nu(&t))),
        ExprF::FromT(t) => Expr::FromT(Box::new(term_of_nu(&t))),
    }
}

fn term_of_nu(n: &Nu2<ExprSig, TermSig>) -> Term {
    match observe2(n) {
        TermF::Lit(v) => Term::Lit(v),
        TermF::Neg(t) => Term::Neg(Box::new(term_of_nu(&t))),
        TermF::Paren(e) => Term::Paren(Box::new(expr_of_nu(&e))),
    }
}

/// Decode a number back into an expression. Defined only on images of
/// [`encode_expr`]; anything else reports a [`DecodeError`].
pub fn decode_expr(n: &BigUint) -> Result<Expr, DecodeError> {
    validate_expr(n)?;
    let (nu_e, _) = decode_codata(n.clone());
    Ok(expr_of_nu(&nu_e))
}

/// Decode a number back into a term; the [`Term`]-sort dual of
/// [`decode_expr`].
pub fn decode_term(n: &BigUint) -> Result<Term, DecodeError> {
    validate_term(n)?;
    let (_, nu_t) = decode_codata(n.clone());
    Ok(term_of_nu(&nu_t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_t_lit_roundtrip() {
        let e = Expr::FromT(Box::new(Term::Lit(3)));
        let n = encode_expr(&e);
        // 11^(2^enc_lit(3)) = 11^(2^7) = 11^128
        assert_eq!(n, BigUint::from(11u32).pow(128));
        assert_eq!(decode_expr(&n).unwrap(), e);
    }

    #[test]
    fn smallest_expr_encoding() {
        // 11^(2^enc_lit(0)) = 11^2 = 121 decodes to FromT(Lit 0).
        let n = BigUint::from(121u32);
        assert_eq!(
            decode_expr(&n).unwrap(),
            Expr::FromT(Box::new(Term::Lit(0)))
        );
    }

    #[test]
    fn negative_literal_roundtrip() {
        let t = Term::Neg(Box::new(Term::Lit(-2)));
        let n = encode_term(&t);
        assert_eq!(decode_term(&n).unwrap(), t);
    }

    #[test]
    fn nested_roundtrip() {
        // Encodings are exponent towers, so deeper tests must stick to the
        // smallest literals to stay within a few thousand digits.
        let e = Expr::Minus(
            Box::new(Expr::FromT(Box::new(Term::Lit(0)))),
            Box::new(Term::Neg(Box::new(Term::Lit(0)))),
        );
        let n = encode_expr_checked(&e, DEFAULT_MAX_BITS).unwrap();
        assert_eq!(decode_expr(&n).unwrap(), e);

        let e2 = Expr::Add(
            Box::new(Expr::FromT(Box::new(Term::Lit(0)))),
            Box::new(Term::Lit(2)),
        );
        let n2 = encode_expr_checked(&e2, DEFAULT_MAX_BITS).unwrap();
        assert_eq!(decode_expr(&n2).unwrap(), e2);
    }

    #[test]
    fn checked_encoder_rejects_towers() {
        // Neg(Neg(Neg(Lit 4))) is a triple exponent tower: far beyond bounds.
        let t = Term::Neg(Box::new(Term::Neg(Box::new(Term::Neg(Box::new(
            Term::Lit(4),
        ))))));
        assert_eq!(encode_term_checked(&t, DEFAULT_MAX_BITS), Err(EncodingTooBig));
    }

    #[test]
    fn invalid_encodings_are_rejected() {
        // 13 carries a foreign prime factor.
        assert!(matches!(
            decode_expr(&BigUint::from(13u32)),
            Err(DecodeError::ResidualFactor(_))
        ));
        // 1 has no exponents at all.
        assert!(matches!(
            decode_expr(&BigUint::from(1u32)),
            Err(DecodeError::BadShape(_, _))
        ));
        // 2^1 alone is a term (Lit 0), not an expression... but as an Add it
        // is missing its 3-exponent, so the expr decoder must reject it.
        assert!(decode_expr(&BigUint::from(2u32)).is_err());
        assert!(decode_term(&BigUint::from(2u32)).is_ok());
    }
}
