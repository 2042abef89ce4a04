//! Small integer arithmetic shared across the crate: deterministic primality
//! by trial division, modular exponentiation, gcd, and factorization of
//! machine-sized integers.

/// Deterministic primality test by trial division.
///
/// Inputs at desk scale are tiny (the battery runs over `ℓ < 100`), so trial
/// division up to `√n` is exact and fast enough for any `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 7u64;
    // wheel over 6k ± 1
    let mut step = 4u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += step;
        step = 6 - step;
    }
    true
}

/// Primes in the closed interval `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| is_prime(n)).collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `m`.
///
/// Panics if `a ≡ 0 (mod m)`; callers check invertibility first.
pub fn inv_mod(a: u64, m: u64) -> u64 {
    let a = a % m;
    assert!(a != 0, "zero has no inverse mod {m}");
    pow_mod(a, m - 2, m)
}

/// Prime factorization `n = ∏ p^e` as ascending `(p, e)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        if *n % p == 0 {
            let mut e = 0;
            while *n % p == 0 {
                *n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    let mut step = 2u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        d += step;
        step = 6 - step;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Exponent of `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// True when `n` is `ℓ^k` for some `k ≥ 0`.
pub fn is_power_of(mut n: u64, ell: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % ell == 0 {
        n /= ell;
    }
    n == 1
}
