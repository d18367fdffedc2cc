//! Jacobi and Legendre symbols and the character mod 4.

use crate::error::{Error, Result};

/// Jacobi symbol `(a/n)` for odd `n`, by binary reciprocity.
///
/// Factors of two are stripped with a `n mod 8` sign rule and the odd
/// parts are reduced by subtraction after a reciprocity swap, so the loop
/// needs one initial division only.
pub fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n & 1 == 1, "jacobi needs an odd modulus");
    let mut a = a % n;
    let mut n = n;
    let mut sign = 1i8;
    loop {
        if a == 0 {
            return if n == 1 { sign } else { 0 };
        }
        let twos = a.trailing_zeros();
        a >>= twos;
        // (2/n) = -1 iff n = 3, 5 (mod 8)
        if twos & 1 == 1 && matches!(n & 7, 3 | 5) {
            sign = -sign;
        }
        if a < n {
            std::mem::swap(&mut a, &mut n);
            if a & n & 3 == 3 {
                sign = -sign;
            }
        }
        // both odd, a >= n
        a -= n;
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
///
/// `p` is not primality-tested here (callers hold a
/// [`ClassifiedPrime`](super::ClassifiedPrime) or an enumerated prime);
/// even or too-small moduli are rejected.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    if p < 3 || p & 1 == 0 {
        return Err(Error::domain(format!(
            "Legendre symbol needs an odd prime modulus, got {p}"
        )));
    }
    Ok(jacobi(a.rem_euclid(p as i64) as u64, p))
}

/// The non-principal character mod 4: `(-1)^((n-1)/2)` on odd `n`, else 0.
pub fn chi4(n: i64) -> i8 {
    match n.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}
