//! Exact integer and rational arithmetic plus the combinatorial helpers the
//! counting formulas need. Backed by `num-bigint`/`num-rational`; rationals
//! are always stored reduced with a positive denominator.

use num_traits::{One, Zero};

use crate::{Error, Result};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational. `Display` renders `num/den`, or just `num`
/// when the denominator is 1 (so `-1/21`, `30`, ...).
pub type BigRat = num_rational::BigRational;

/// Shorthand `BigInt` constructor.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Shorthand reduced rational; panics if `den == 0` (test/fixture helper —
/// use [`try_div`] for data-dependent denominators).
pub fn rat(num: i64, den: i64) -> BigRat {
    assert!(den != 0, "rat() requires a nonzero denominator");
    BigRat::new(int(num), int(den))
}

/// Rational division that reports a zero divisor instead of panicking.
pub fn try_div(a: &BigRat, b: &BigRat) -> Result<BigRat> {
    if b.is_zero() {
        return Err(Error::DivisionByZero(format!("{a} / 0")));
    }
    Ok(a / b)
}

/// Parse `num` or `num/den` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let bad = |_| Error::InvalidArgument(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRat::from(s.trim().parse::<BigInt>().map_err(bad)?)),
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().map_err(bad)?;
            let den: BigInt = d.trim().parse().map_err(bad)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero(format!("parsed denominator 0 in {s:?}")));
            }
            Ok(BigRat::new(num, den))
        }
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= j;
    }
    acc
}

/// The falling product `prod_{j=k+1}^{n} (a - j)`; empty (= 1) when `n == k`.
///
/// Requires `n >= k`. `a` may be any integer, so factors may vanish or go
/// negative; callers relying on positivity must stay in range themselves.
pub fn falling_product(a: &BigInt, k: u64, n: u64) -> BigInt {
    assert!(n >= k, "falling_product requires n >= k (got k={k}, n={n})");
    let mut acc = BigInt::one();
    for j in (k + 1)..=n {
        acc *= a - int(j as i64);
    }
    acc
}

/// Binomial coefficient; 0 whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: the running value is binomial(n, i+1).
        acc = acc * int(n - i as i64) / int(i as i64 + 1);
    }
    acc
}

/// Render a rational for reports: `num/den`, or plain `num` when integral.
pub fn rat_str(x: &BigRat) -> String {
    x.to_string()
}

/// True when `x` is a (possibly negative) integer.
pub fn is_integer(x: &BigRat) -> bool {
    x.denom().is_one()
}

/// Exact integer quotient; panics when the division is not exact. Used where
/// divisibility is guaranteed (orbit-stabilizer, q-binomials) so a remainder
/// means a bug, not bad input.
pub fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    use num_integer::Integer;
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "exact_div: {num} not divisible by {den}");
    q
}

/// Sign helper: `(-1)^n` as a rational.
pub fn neg_one_pow(n: u64) -> BigRat {
    if n.is_multiple_of(2) {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(10), int(3_628_800));
    }

    #[test]
    fn factorial_recurrence() {
        for n in 1..=30u64 {
            assert_eq!(factorial(n), factorial(n - 1) * int(n as i64));
        }
    }

    #[test]
    fn falling_product_examples() {
        // Empty product.
        assert_eq!(falling_product(&int(4), 2, 2), int(1));
        // Single factor 4 - 3 = 1.
        assert_eq!(falling_product(&int(4), 2, 3), int(1));
        // (9-3)(9-4) = 30.
        assert_eq!(falling_product(&int(9), 2, 4), int(30));
    }

    #[test]
    fn falling_product_extension_step() {
        for a in 0..12i64 {
            for k in 0..6u64 {
                for n in k..8u64 {
                    let lhs = falling_product(&int(a), k, n + 1);
                    let rhs = falling_product(&int(a), k, n) * (int(a) - int(n as i64 + 1));
                    assert_eq!(lhs, rhs, "a={a} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "n >= k")]
    fn falling_product_rejects_reversed_range() {
        falling_product(&int(4), 3, 2);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, 0), int(1));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(12, 5), int(792));
    }

    #[test]
    fn binomial_pascal() {
        for n in 1..=20i64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn rational_display_and_parse() {
        assert_eq!(rat(-1, 21).to_string(), "-1/21");
        assert_eq!(rat(2, -42).to_string(), "-1/21");
        assert_eq!(rat(30, 1).to_string(), "30");
        assert_eq!(parse_rat("-1/21").unwrap(), rat(1, -21));
        assert_eq!(parse_rat("30").unwrap(), rat(30, 1));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = BigRat::zero();
        match try_div(&rat(1, 2), &z) {
            Err(Error::DivisionByZero(_)) => {}
            other => panic!("expected DivisionByZero, got {other:?}"),
        }
        assert_eq!(try_div(&rat(1, 2), &rat(1, 4)).unwrap(), rat(2, 1));
    }

    #[test]
    fn exact_div_happy_path() {
        assert_eq!(exact_div(&int(5040), &int(168)), int(30));
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn exact_div_rejects_remainder() {
        exact_div(&int(7), &int(2));
    }

    fn arb_rat() -> impl Strategy<Value = BigRat> {
        (any::<i32>(), 1..=u16::MAX).prop_map(|(n, d)| rat(n as i64, d as i64))
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_denominator_positive(x in arb_rat()) {
            prop_assert_eq!(x.reduced(), x.clone());
            prop_assert!(x.denom().is_positive());
        }

        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + (-&a), BigRat::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), BigRat::one());
            }
        }

        #[test]
        fn display_roundtrips(x in arb_rat()) {
            prop_assert_eq!(parse_rat(&x.to_string()).unwrap(), x);
        }
    }
}
