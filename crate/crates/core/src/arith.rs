//! Base-`p` digit arithmetic used by the composition-factor and form criteria.
//!
//! "`a` contains `b` to base `p`" means every base-`p` digit of `b` is either
//! zero or equal to the corresponding digit of `a`.

use crate::error::{input, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    Ok(())
}

/// Base-`p` digits of `value`, least significant first.
pub fn digits(mut value: u64, p: u64) -> Result<Vec<u64>> {
    if p < 2 {
        return input(format!("base {p} is too small"));
    }
    let mut out = Vec::new();
    while value > 0 {
        out.push(value % p);
        value /= p;
    }
    Ok(out)
}

pub fn contains_to_base_p(a: u64, b: u64, p: u64) -> Result<bool> {
    check_prime(p)?;
    let (mut a, mut b) = (a, b);
    while b > 0 {
        let db = b % p;
        if db != 0 && db != a % p {
            return Ok(false);
        }
        a /= p;
        b /= p;
    }
    Ok(true)
}

/// The exponent of `p` in `a`.
pub fn nu_p(a: u64, p: u64) -> Result<u32> {
    check_prime(p)?;
    if a == 0 {
        return input("the p-adic valuation of 0 is undefined");
    }
    let mut a = a;
    let mut v = 0;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    Ok(v)
}

/// The exponent of `p` in `C(x, y)`, counted as the carries in `y + (x - y)`.
pub fn binom_nu_p(x: u64, y: u64, p: u64) -> Result<u32> {
    check_prime(p)?;
    if y > x {
        return input(format!("binomial C({x}, {y}) has y > x"));
    }
    let (mut a, mut b) = (y, x - y);
    let mut carry = 0;
    let mut carries = 0u32;
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = if s >= p { 1 } else { 0 };
        carries += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(carries)
}

/// The `t` with `x ≡ 2^i + t (mod 2^{i+1})` and `0 ≤ t < 2^i`, if it exists.
pub fn dyadic_offset(x: u64, i: u32) -> Option<u64> {
    let r = x % (1u64 << (i + 1));
    r.checked_sub(1u64 << i)
}

/// Whether `x mod 2^{i+2}` lies in `[3·2^i, 2^{i+2})`, that is
/// `x ≡ 2^{i+1} + 2^i + t (mod 2^{i+2})` for some `0 ≤ t < 2^i`.
pub fn upper_quarter(x: u64, i: u32) -> bool {
    x % (1u64 << (i + 2)) >= 3 * (1u64 << i)
}

/// `Some(i)` when `r = 2^i`.
pub fn log2_exact(r: u64) -> Option<u32> {
    if r.is_power_of_two() {
        Some(r.trailing_zeros())
    } else {
        None
    }
}

/// Whether `4` divides `C(l - t, 2^i)`, given `l + 1 ≡ 2^i + t (mod 2^{i+1})`
/// with `0 ≤ t < 2^i` and `l - t ≥ 2^i`.
pub fn binom_div4_criterion(l: u64, i: u32, t: u64) -> Result<bool> {
    if i >= 62 {
        return input("exponent too large");
    }
    let k = 1u64 << i;
    if dyadic_offset(l + 1, i) != Some(t) {
        return input(format!("l + 1 = {} is not 2^{i} + {t} mod 2^{}", l + 1, i + 1));
    }
    if l < t || l - t < k {
        return input(format!("l - t = {} is below 2^{i}", l as i64 - t as i64));
    }
    Ok(binom_nu_p(l - t, k, 2)? >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment_examples() {
        assert!(contains_to_base_p(3, 1, 2).unwrap());
        assert!(!contains_to_base_p(4, 1, 2).unwrap());
        assert!(contains_to_base_p(7, 0, 2).unwrap());
        assert!(contains_to_base_p(17, 8, 3).unwrap());
        assert!(!contains_to_base_p(17, 7, 3).unwrap());
        assert!(contains_to_base_p(5, 1, 4).is_err());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(nu_p(8, 2).unwrap(), 3);
        assert_eq!(nu_p(12, 2).unwrap(), 2);
        assert_eq!(nu_p(7, 2).unwrap(), 0);
        assert_eq!(nu_p(18, 3).unwrap(), 2);
        assert!(nu_p(0, 2).is_err());
    }

    #[test]
    fn binomial_valuation_examples() {
        assert_eq!(binom_nu_p(2, 1, 2).unwrap(), 1);
        assert_eq!(binom_nu_p(4, 2, 2).unwrap(), 1);
        assert_eq!(binom_nu_p(4, 1, 2).unwrap(), 2);
        assert_eq!(binom_nu_p(9, 3, 3).unwrap(), 1);
        assert!(binom_nu_p(1, 2, 2).is_err());
    }

    #[test]
    fn div4_examples() {
        assert!(!binom_div4_criterion(2, 0, 0).unwrap());
        assert!(binom_div4_criterion(4, 0, 0).unwrap());
        assert!(!binom_div4_criterion(6, 0, 0).unwrap());
        assert!(binom_div4_criterion(3, 0, 0).is_err());
        assert!(binom_div4_criterion(1, 1, 0).is_err());
    }

    #[test]
    fn offsets() {
        assert_eq!(dyadic_offset(7, 1), Some(1));
        assert_eq!(dyadic_offset(4, 1), None);
        assert!(upper_quarter(7, 0));
        assert!(upper_quarter(14, 1));
        assert!(!upper_quarter(5, 0));
    }
}
