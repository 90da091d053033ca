//! Balanced q-integers, q-factorials, and Gaussian binomial coefficients.

use super::{QFieldError, Scalar};

/// Balanced q-integer `[n] = (q^n - q^-n)/(q - q^-1)`. Defined for every
/// integer; `[0] = 0` and `[-n] = -[n]`.
pub fn q_integer(n: i64) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    let num = &Scalar::q_pow(n) - &Scalar::q_pow(-n);
    let den = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    num.try_div(&den).expect("q - q^-1 is nonzero")
}

/// Balanced q-factorial `[n]! = [n][n-1]...[1]`.
pub fn q_factorial(n: u32) -> Scalar {
    let mut acc = Scalar::one();
    for k in 1..=n {
        acc = &acc * &q_integer(k as i64);
    }
    acc
}

/// Balanced Gaussian binomial coefficient, computed by the q-Pascal
/// recurrence `[n,k] = q^-k [n-1,k] + q^(n-k) [n-1,k-1]`. Out-of-range `k`
/// is an error. The product formula `[n]!/([k]![n-k]!)` is kept as a test
/// oracle, deliberately off this code path.
pub fn q_binomial(n: u32, k: u32) -> Result<Scalar, QFieldError> {
    if k > n {
        return Err(QFieldError::BinomialRange { n, k });
    }
    // row-by-row triangle, balanced weights
    let mut row: Vec<Scalar> = vec![Scalar::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=m {
            let mut v = Scalar::zero();
            if j < row.len() {
                v = &v + &(&Scalar::q_pow(-(j as i64)) * &row[j]);
            }
            if j >= 1 {
                v = &v + &(&Scalar::q_pow((m - j) as i64) * &row[j - 1]);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integer_small_values() {
        assert!(q_integer(0).is_zero());
        assert!(q_integer(1).is_one());
        // [2] = (q^2+1)/q, expanded from the defining fraction
        let expected = super::super::parse_scalar("(q^2 + 1)/(q)").unwrap();
        assert_eq!(q_integer(2), expected);
        assert_eq!(q_integer(-2), -&expected);
    }

    #[test]
    fn q_binomial_edges() {
        assert!(q_binomial(4, 0).unwrap().is_one());
        assert!(q_binomial(4, 4).unwrap().is_one());
        assert!(q_binomial(4, 5).is_err());
        assert_eq!(q_binomial(2, 1).unwrap(), q_integer(2));
    }

    #[test]
    fn q_binomial_4_2_matches_product_formula() {
        // independent oracle: [4][3]/([2][1])
        let oracle = (&q_integer(4) * &q_integer(3))
            .try_div(&(&q_integer(2) * &q_integer(1)))
            .unwrap();
        assert_eq!(q_binomial(4, 2).unwrap(), oracle);
    }

    #[test]
    fn symmetry_up_to_8() {
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k).unwrap(),
                    q_binomial(n, n - k).unwrap(),
                    "symmetry failed at ({}, {})",
                    n,
                    k
                );
            }
        }
    }
}
