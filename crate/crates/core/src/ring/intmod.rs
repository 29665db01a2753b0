//! Word-sized modular arithmetic for `Z/m`.

pub(crate) fn add(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub(crate) fn sub(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + m as u128 - b as u128) % m as u128) as u64
}

pub(crate) fn mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn neg(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

pub(crate) fn pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, m);
        }
        base = mul(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn inv(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Product of the distinct prime factors of `m`.
pub(crate) fn radical(mut m: u64) -> u64 {
    let mut rad = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            rad *= p;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        rad *= m;
    }
    rad
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(inv(2, 5), Some(3));
        assert_eq!(inv(3, 15), None);
        assert_eq!(inv(2, 15), Some(8));
        for a in 1..97 {
            assert_eq!(mul(a, inv(a, 97).unwrap(), 97), 1);
        }
    }

    #[test]
    fn primality_and_radical() {
        let small: [u64; 10] = [2, 3, 5, 7, 11, 13, 97, 7919, 1_000_003, 4_294_967_291];
        for p in small {
            assert!(is_prime(p), "{p}");
        }
        for c in [1u64, 9, 15, 561, 1_000_001, 3_215_031_751] {
            assert!(!is_prime(c), "{c}");
        }
        assert_eq!(radical(45), 15);
        assert_eq!(radical(97), 97);
        assert_eq!(radical(1), 1);
    }
}
