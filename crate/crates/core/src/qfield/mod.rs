//! Exact arithmetic in the rational-function field Q(q).
//!
//! The field is the coefficient domain for everything else in this crate:
//! scalars are reduced fractions of integer polynomials in `q`, `q^-1` is the
//! honest field inverse `1/q`, and canonical forms make structural equality
//! coincide with field equality. Rational specialization `q -> q0` is an
//! optional fast mode; identities are stated and checked for symbolic `q`.

mod parse;
mod poly;
mod qcomb;
mod scalar;

pub use parse::parse_scalar;
pub use poly::ZPoly;
pub use qcomb::{q_binomial, q_factorial, q_integer};
pub use scalar::{work_counter, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QFieldError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("q-binomial index out of range: n = {n}, k = {k}")]
    BinomialRange { n: u32, k: u32 },
    #[error("specialization point {point} is excluded (q must avoid -1, 0, 1)")]
    ExcludedPoint { point: String },
    #[error("denominator factor {factor} vanishes at q = {point}")]
    PoleAtPoint { point: String, factor: String },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    #[test]
    fn q_times_q_inverse_is_one() {
        let prod = &Scalar::q() * &Scalar::q_pow(-1);
        assert!(prod.is_one());
    }

    #[test]
    fn zero_is_additive_identity() {
        let x = parse_scalar("(q^3 - 2)/(q + 5)").unwrap();
        assert_eq!(&Scalar::zero() + &x, x);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().try_div(&Scalar::zero()),
            Err(QFieldError::DivisionByZero)
        );
    }

    #[test]
    fn specialize_simple() {
        let two = BigRational::from_integer(2.into());
        let x = parse_scalar("q + 1").unwrap();
        assert_eq!(x.specialize(&two).unwrap(), BigRational::from_integer(3.into()));
        // [3]_q at q = 2 is 21/4
        let v = q_integer(3).specialize(&two).unwrap();
        assert_eq!(v, BigRational::new(21.into(), 4.into()));
    }

    #[test]
    fn specialize_rejects_poles_and_excluded_points() {
        let x = parse_scalar("1/(q - 1)").unwrap();
        let one = BigRational::one();
        assert!(matches!(
            x.specialize(&one),
            Err(QFieldError::ExcludedPoint { .. })
        ));
        let three = BigRational::from_integer(3.into());
        let y = parse_scalar("1/(q - 3)").unwrap();
        match y.specialize(&three) {
            Err(QFieldError::PoleAtPoint { factor, .. }) => assert_eq!(factor, "q - 3"),
            other => panic!("expected pole error, got {:?}", other),
        }
    }

    // Random small scalars for the field-axiom properties.
    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (
            prop::collection::vec(-4i64..=4, 0..3),
            prop::collection::vec(-4i64..=4, 0..3),
        )
            .prop_map(|(nv, dv)| {
                let num = nv
                    .iter()
                    .enumerate()
                    .fold(Scalar::zero(), |acc, (k, &c)| {
                        &acc + &(&Scalar::from_int(c) * &Scalar::q_pow(k as i64))
                    });
                let den = dv
                    .iter()
                    .enumerate()
                    .fold(Scalar::zero(), |acc, (k, &c)| {
                        &acc + &(&Scalar::from_int(c) * &Scalar::q_pow(k as i64))
                    });
                if den.is_zero() {
                    num
                } else {
                    num.try_div(&den).unwrap()
                }
            })
    }

    proptest! {
        #[test]
        fn addition_associates(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn multiplication_distributes(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn canonical_forms_are_equal_as_data(a in small_scalar(), b in small_scalar()) {
            // (a + b) - b recovers a with identical stored representation
            let back = &(&a + &b) - &b;
            prop_assert_eq!(back.to_string(), a.to_string());
            prop_assert_eq!(back, a);
        }

        #[test]
        fn specialize_is_a_ring_homomorphism(a in small_scalar(), b in small_scalar()) {
            let q0 = BigRational::new(7.into(), 3.into());
            let ok = |x: &Scalar| x.specialize(&q0);
            if let (Ok(va), Ok(vb)) = (ok(&a), ok(&b)) {
                prop_assert_eq!(ok(&(&a + &b)).unwrap(), &va + &vb);
                prop_assert_eq!(ok(&(&a * &b)).unwrap(), &va * &vb);
            }
        }
    }
}
