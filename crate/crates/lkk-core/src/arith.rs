//! Integer helpers: primality testing and factorization of the moduli that
//! show up in annihilator and torsion computations.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deterministic Miller-Rabin for `n < 3.3e24` (the usual 13-base set).
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    // Schoolbook double-and-add; operands stay below 2^127 for our inputs.
    if let (Some(prod), true) = (a.checked_mul(b), m > 0) {
        return prod % m;
    }
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn pollard_rho(n: u128, seed: u128) -> u128 {
    let f = |x: u128| (mul_mod(x, x, n) + seed) % n;
    let mut x = 2u128;
    let mut y = 2u128;
    let mut d = 1u128;
    while d == 1 {
        x = f(x);
        y = f(f(y));
        let diff = x.abs_diff(y);
        d = gcd_u128(diff, n);
    }
    d
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factors of `n` (no multiplicities), ascending. `None` if `n` does not
/// fit in `u128` or a composite cofactor resists factoring.
pub fn prime_factors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u128()?;
    if n <= 1 {
        return Some(Vec::new());
    }
    let mut stack = alloc::vec![n];
    let mut primes = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u128(m) {
            let p = u64::try_from(m).ok()?;
            if !primes.contains(&p) {
                primes.push(p);
            }
            continue;
        }
        let mut d = 0u128;
        for small in 2u128..=61 {
            if m % small == 0 {
                d = small;
                break;
            }
        }
        if d == 0 {
            for seed in 1..=16 {
                let c = pollard_rho(m, seed);
                if c != m && c != 1 {
                    d = c;
                    break;
                }
            }
        }
        if d == 0 {
            return None;
        }
        stack.push(d);
        stack.push(m / d);
    }
    primes.sort_unstable();
    Some(primes)
}

/// gcd normalized to be nonnegative; gcd(0, 0) = 0.
pub fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns (g, x, y) with a·x + b·y = g ≥ 0.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let x2 = &x0 - &q * &x1;
        let y2 = &y0 - &q * &y1;
        r0 = r1;
        r1 = r2;
        x0 = x1;
        x1 = x2;
        y0 = y1;
        y1 = y2;
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn primality_small() {
        let primes: Vec<u128> = (0..60).filter(|&n| is_prime_u128(n)).collect();
        assert_eq!(
            primes,
            alloc::vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn factors_composite() {
        let n = BigInt::from_u64(2 * 2 * 3 * 49 * 101).unwrap();
        assert_eq!(prime_factors(&n), Some(alloc::vec![2, 3, 7, 101]));
        assert_eq!(prime_factors(&BigInt::one()), Some(alloc::vec![]));
        assert_eq!(prime_factors(&(-BigInt::from_u64(30).unwrap())), Some(alloc::vec![2, 3, 5]));
    }

    #[test]
    fn xgcd_identity() {
        let a = BigInt::from_u64(240).unwrap();
        let b = BigInt::from_u64(46).unwrap();
        let (g, x, y) = xgcd(&a, &b);
        assert_eq!(g, BigInt::from_u64(2).unwrap());
        assert_eq!(&a * &x + &b * &y, g);
    }
}
