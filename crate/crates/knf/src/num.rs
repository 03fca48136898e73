//! Integer helpers: primality, factoring, Euler phi, prime-power splitting.

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These bases are a known deterministic set for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
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

fn pollard_rho(n: u64) -> u64 {
    // Brent's cycle variant; n is odd, composite, not a prime power of 2.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Factor `n` by trial division up to 10^6 then Pollard rho.
/// Returns (prime, exponent) pairs in ascending prime order.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    let mut d = 2u64;
    while d <= 1_000_000 && d * d <= n {
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Remaining cofactor: peel with Pollard rho.
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(m, &mut out);
            continue;
        }
        let f = pollard_rho(m);
        stack.push(f);
        stack.push(m / f);
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factor(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Split q into (p, m) with q = p^m, p prime. None if q is not a prime power.
pub fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Multiplicative order of a modulo n (n prime in this crate's usage).
pub fn order_mod(a: u64, n: u64) -> u64 {
    let group = euler_phi(n);
    let mut e = group;
    for (p, _) in factor(group) {
        while e % p == 0 && pow_mod(a % n, e / p, n) == 1 {
            e /= p;
        }
    }
    e
}

/// Distinct prime factors of n as usize.
pub fn prime_factors_usize(n: usize) -> Vec<usize> {
    factor(n as u64).into_iter().map(|(p, _)| p as usize).collect()
}
