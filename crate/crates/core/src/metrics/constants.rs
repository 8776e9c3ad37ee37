use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::{GeomError, Result};

/// Exact rational values of the table, as decimal or `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactConstants {
    pub a_n: String,
    pub b_n: String,
    pub bhat_n: String,
    pub d_n: String,
    pub b_prime: String,
}

/// Explicit constants in dimension `n`:
///
/// - `a_n = 2^{-n/2-1} n^{-3n/4-3/2}`, `b_n = 1/a_n` (sandwich `a_n E ⊂ K ⊂ b_n E`),
/// - `b_prime = 1 + 5n b_n/a_n`,
/// - `bhat_n = (3n+1) b_prime b_n`,
/// - `d_n = 4n (b_n/a_n) b_prime`,
/// - `c_n = c_universal · n^{2n²}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsTable {
    pub n: u32,
    pub a_n: f64,
    pub b_n: f64,
    pub b_prime: f64,
    pub bhat_n: f64,
    pub d_n: f64,
    pub c_universal: f64,
    pub c_n: f64,
    /// Present when `a_n` is rational.
    pub exact: Option<ExactConstants>,
}

pub fn constants_table(n: u32, c_universal: f64) -> Result<ConstantsTable> {
    if n < 2 {
        return Err(GeomError::InvalidArgument(format!("dimension {n} < 2")));
    }
    let nf = n as f64;
    let a = 2f64.powf(-(nf / 2.0 + 1.0)) * nf.powf(-(3.0 * nf / 4.0 + 1.5));
    let b = 1.0 / a;
    let b_prime = 1.0 + 5.0 * nf * b / a;
    let exact = exact_a(n).map(|a| {
        let b = a.recip();
        let nr = BigRational::from_integer(BigInt::from(n));
        let five = BigRational::from_integer(BigInt::from(5));
        let ratio = &b / &a;
        let bp = BigRational::one() + five * &nr * &ratio;
        let bhat = BigRational::from_integer(BigInt::from(3 * n + 1)) * &bp * &b;
        let d = BigRational::from_integer(BigInt::from(4)) * nr * ratio * &bp;
        (a, b, bp, bhat, d)
    });
    let (a_n, b_n, b_prime, bhat_n, d_n, exact) = match exact {
        Some((a, b, bp, bhat, d)) => (
            to_f64(&a),
            to_f64(&b),
            to_f64(&bp),
            to_f64(&bhat),
            to_f64(&d),
            Some(ExactConstants {
                a_n: a.to_string(),
                b_n: b.to_string(),
                bhat_n: bhat.to_string(),
                d_n: d.to_string(),
                b_prime: bp.to_string(),
            }),
        ),
        None => (
            a,
            b,
            b_prime,
            (3.0 * nf + 1.0) * b_prime * b,
            4.0 * nf * (b / a) * b_prime,
            None,
        ),
    };
    Ok(ConstantsTable {
        n,
        a_n,
        b_n,
        b_prime,
        bhat_n,
        d_n,
        c_universal,
        c_n: c_universal * nf.powf(2.0 * nf * nf),
        exact,
    })
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `a_n` as an exact rational when it is one.
///
/// `a_n = 2^{-(n+2)/2} n^{-(3n+6)/4}`. When `n = 2^k` the whole value is a
/// power of two; otherwise both factors must be rational separately.
fn exact_a(n: u32) -> Option<BigRational> {
    let two = BigInt::from(2);
    if n.is_power_of_two() {
        let k = n.trailing_zeros() as u64;
        // total exponent of 2, times 4
        let e4 = 2 * (n as u64 + 2) + k * (3 * n as u64 + 6);
        if e4 % 4 != 0 {
            return None;
        }
        let den: BigInt = Pow::pow(&two, e4 / 4);
        return Some(BigRational::new(BigInt::one(), den));
    }
    if n % 2 != 0 {
        return None;
    }
    let two_pow: BigInt = Pow::pow(&two, (n as u64 + 2) / 2);
    // n^{(3n+6)/4}: reduce the exponent p/q and take an exact q-th root.
    let (mut p, mut q) = (3 * n as u64 + 6, 4u64);
    let g = gcd(p, q);
    p /= g;
    q /= g;
    let root = exact_root(n as u64, q as u32)?;
    let n_pow: BigInt = Pow::pow(&BigInt::from(root), p);
    Some(BigRational::new(BigInt::one(), two_pow * n_pow))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn exact_root(n: u64, q: u32) -> Option<u64> {
    let r = (n as f64).powf(1.0 / q as f64).round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|c| c.checked_pow(q) == Some(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_two_is_exact() {
        let t = constants_table(2, 1.0).unwrap();
        let e = t.exact.unwrap();
        assert_eq!(e.a_n, "1/32");
        assert_eq!(e.b_n, "32");
        assert_eq!(e.b_prime, "10241");
        assert_eq!(e.d_n, "83894272");
        assert_eq!(e.bhat_n, "2293984");
        assert_eq!(t.c_n, 256.0);
    }

    #[test]
    fn floats_agree_with_exact_path() {
        for n in [2u32, 4, 6, 8, 16] {
            let t = constants_table(n, 1.0).unwrap();
            let nf = n as f64;
            let a = 2f64.powf(-(nf / 2.0 + 1.0)) * nf.powf(-(3.0 * nf / 4.0 + 1.5));
            assert!(((t.a_n - a) / a).abs() < 1e-12, "n = {n}");
        }
        assert!(constants_table(3, 1.0).unwrap().exact.is_none());
        assert!(constants_table(4, 1.0).unwrap().exact.is_some());
    }

    #[test]
    fn rejects_dimension_one() {
        assert!(constants_table(1, 1.0).is_err());
    }
}
