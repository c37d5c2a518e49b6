//! Fixed-width primality testing and factor finding for values below 2^127.
//!
//! Everything here is deterministic: fixed witness schedules for
//! Miller-Rabin and a fixed parameter schedule for Brent's cycle finder.

use std::sync::OnceLock;

const MASK64: u128 = (1u128 << 64) - 1;

/// Full 256-bit product of two u128 values, returned as (hi, lo).
#[inline]
fn umul256(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = (a >> 64, a & MASK64);
    let (b1, b0) = (b >> 64, b & MASK64);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let (mid, mid_carry) = p01.overflowing_add(p10);
    let (lo, lo_carry) = p00.overflowing_add(mid << 64);
    let mut hi = p11 + (mid >> 64) + lo_carry as u128;
    if mid_carry {
        hi += 1u128 << 64;
    }
    (hi, lo)
}

/// Montgomery arithmetic modulo an odd n < 2^127.
#[derive(Clone, Copy)]
struct Mont {
    n: u128,
    /// -n^{-1} mod 2^128
    np: u128,
    /// 2^128 mod n
    one: u128,
    /// 2^256 mod n
    r2: u128,
}

impl Mont {
    fn new(n: u128) -> Mont {
        debug_assert!(n & 1 == 1 && n > 1 && n < (1u128 << 127));
        // Newton iteration: doubles the number of correct low bits each step.
        let mut inv: u128 = 1;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let np = inv.wrapping_neg();
        let one = (u128::MAX % n + 1) % n;
        let mut r2 = one;
        for _ in 0..128 {
            r2 = add_mod(r2, r2, n);
        }
        Mont { n, np, one, r2 }
    }

    /// REDC(a*b) for a, b in Montgomery form.
    #[inline]
    fn mul(&self, a: u128, b: u128) -> u128 {
        let (thi, tlo) = umul256(a, b);
        let m = tlo.wrapping_mul(self.np);
        let (mhi, mlo) = umul256(m, self.n);
        let (_, carry) = tlo.overflowing_add(mlo);
        let (t, c1) = thi.overflowing_add(mhi);
        let (t, c2) = t.overflowing_add(carry as u128);
        if c1 || c2 || t >= self.n {
            t.wrapping_sub(self.n)
        } else {
            t
        }
    }

    #[inline]
    fn to_mont(&self, x: u128) -> u128 {
        self.mul(x % self.n, self.r2)
    }

    #[inline]
    fn from_mont(&self, x: u128) -> u128 {
        self.mul(x, 1)
    }

    fn pow(&self, base_mont: u128, mut e: u128) -> u128 {
        let mut acc = self.one;
        let mut b = base_mont;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

#[inline]
fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    // a, b < n < 2^127, so a + b cannot overflow u128.
    let s = a + b;
    if s >= n {
        s - n
    } else {
        s
    }
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Witnesses proving Miller-Rabin deterministic below 3.317e24 (Sorenson-Webster).
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
/// Additional fixed witnesses applied above the proven range.
const MR_EXTRA: [u128; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Deterministic Miller-Rabin for n < 2^127.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mt = Mont::new(n);
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    let n_minus_1 = n - 1;
    let check = |a: u128| -> bool {
        let a = a % n;
        if a == 0 {
            return true;
        }
        let mut x = mt.pow(mt.to_mont(a), d);
        let one = mt.one;
        let minus_one = mt.to_mont(n_minus_1);
        if x == one || x == minus_one {
            return true;
        }
        for _ in 1..s {
            x = mt.mul(x, x);
            if x == minus_one {
                return true;
            }
        }
        false
    };
    for &a in &MR_BASES {
        if !check(a) {
            return false;
        }
    }
    if n >= 3_317_044_064_679_887_385_961_981u128 {
        for &a in &MR_EXTRA {
            if !check(a) {
                return false;
            }
        }
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime_u128(n as u128)
}

/// Brent's variant of Pollard rho with batched gcds.
///
/// Returns a nontrivial factor of composite odd `n`, or None if the
/// iteration limit was exhausted with parameter `c`.
fn brent_rho(n: u128, c: u128, max_iter: u64) -> Option<u128> {
    let mt = Mont::new(n);
    let c_m = mt.to_mont(c);
    let step = |x: u128| add_mod(mt.mul(x, x), c_m, n);
    let mut y = mt.to_mont(2);
    let mut r: u64 = 1;
    let mut q = mt.one;
    let mut g: u128 = 1;
    let mut x = y;
    let mut ys = y;
    let batch: u64 = 128;
    let mut used: u64 = 0;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k: u64 = 0;
        while k < r && g == 1 {
            ys = y;
            let m = batch.min(r - k);
            for _ in 0..m {
                y = step(y);
                q = mt.mul(q, x.abs_diff(y));
            }
            g = gcd_u128(mt.from_mont(q), n);
            if g == 1 && q == 0 {
                // the product collapsed to 0; restart from the saved point
                g = n;
            }
            k += m;
            used += m;
            if used > max_iter {
                return None;
            }
        }
        r *= 2;
    }
    if g == n {
        // backtrack one step at a time
        loop {
            ys = step(ys);
            g = gcd_u128(mt.from_mont(x.abs_diff(ys)), n);
            if g > 1 {
                break;
            }
            used += 1;
            if used > max_iter {
                return None;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

/// Deterministic schedule of rho parameters: (c, per-attempt iteration cap).
const RHO_SCHEDULE: [(u128, u64); 8] = [
    (1, 1 << 18),
    (3, 1 << 19),
    (5, 1 << 21),
    (7, 1 << 23),
    (11, 1 << 25),
    (13, 1 << 26),
    (17, 1 << 27),
    (19, 1 << 27),
];

/// Finds a nontrivial factor of odd composite n, spending at most `budget`
/// rho iterations. Decrements the budget by the work actually done.
pub fn find_factor_u128(n: u128, budget: &mut u64) -> Option<u128> {
    debug_assert!(n > 1 && n & 1 == 1 && !is_prime_u128(n));
    // perfect powers first: rho converges slowly on p^2
    for k in [2u32, 3, 5, 7] {
        if let Some(r) = iroot_u128(n, k) {
            if pow_check(r, k, n) {
                return Some(r);
            }
        }
    }
    for &(c, cap) in &RHO_SCHEDULE {
        let cap = cap.min(*budget);
        if cap == 0 {
            return None;
        }
        let before = cap;
        if let Some(f) = brent_rho(n, c, cap) {
            *budget = budget.saturating_sub(before / 4);
            return Some(f);
        }
        *budget = budget.saturating_sub(before);
        if *budget == 0 {
            return None;
        }
    }
    None
}

fn pow_check(base: u128, k: u32, n: u128) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..k {
        match acc.checked_mul(base) {
            Some(v) if v <= n => acc = v,
            _ => return false,
        }
    }
    acc == n
}

/// Integer k-th root candidate (floor), or None when base would be < 2.
fn iroot_u128(n: u128, k: u32) -> Option<u128> {
    if n < 4 {
        return None;
    }
    let bits = 128 - n.leading_zeros();
    let mut hi: u128 = 1u128 << (bits / k + 1);
    let mut lo: u128 = 1;
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        let mut acc: u128 = 1;
        let mut over = false;
        for _ in 0..k {
            match acc.checked_mul(mid) {
                Some(v) => acc = v,
                None => {
                    over = true;
                    break;
                }
            }
        }
        if !over && acc <= n {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    if lo >= 2 {
        Some(lo)
    } else {
        None
    }
}

static SMALL_PRIMES: OnceLock<Vec<u32>> = OnceLock::new();

/// Primes below 100_000, for trial division.
pub fn small_primes() -> &'static [u32] {
    SMALL_PRIMES.get_or_init(|| {
        let limit = 100_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < limit {
            if sieve[i] {
                let mut j = i * i;
                while j < limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (2..limit).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn umul256_matches_bigint() {
        let cases = [
            (0u128, 0u128),
            (1, u128::MAX),
            (u128::MAX, u128::MAX),
            (0x1234_5678_9abc_def0_u128, 0xfedc_ba98_7654_3210_u128),
            ((1 << 127) - 1, (1 << 100) + 12345,),
        ];
        for &(a, b) in &cases {
            let (hi, lo) = umul256(a, b);
            let big = BigUint::from(a) * BigUint::from(b);
            let expect = (BigUint::from(hi) << 128) + BigUint::from(lo);
            assert_eq!(big, expect, "a={a} b={b}");
        }
    }

    #[test]
    fn montgomery_mul_matches_bigint() {
        let moduli = [
            3u128,
            104729,
            (1u128 << 61) - 1,
            ((1u128 << 89) - 1),
            170141183460469231731687303715884105727u128 / 7 * 7 - 4, // odd < 2^127
        ];
        for &n in &moduli {
            let n = if n & 1 == 0 { n + 1 } else { n };
            let mt = Mont::new(n);
            let samples = [1u128, 2, 3, n - 1, n / 2, n / 3 + 1, 0xdead_beef % n];
            for &a in &samples {
                for &b in &samples {
                    let am = mt.to_mont(a);
                    let bm = mt.to_mont(b);
                    let got = mt.from_mont(mt.mul(am, bm));
                    let expect = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(n);
                    assert_eq!(BigUint::from(got), expect, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn prime_classification_small() {
        let primes = [2u128, 3, 5, 7, 97, 104729, 131071, 524287, 2147483647];
        for &p in &primes {
            assert!(is_prime_u128(p), "{p} should be prime");
        }
        let comps = [1u128, 4, 9, 561, 1729, 25326001, 3215031751, 3825123056546413051];
        for &c in &comps {
            assert!(!is_prime_u128(c), "{c} should be composite");
        }
    }

    #[test]
    fn prime_classification_large() {
        // 2^89 - 1 is a Mersenne prime
        assert!(is_prime_u128((1u128 << 89) - 1));
        // 2^101 - 1 = 7432339208719 * 341117531003194129
        assert!(!is_prime_u128((1u128 << 101) - 1));
    }

    #[test]
    fn rho_splits_semiprimes() {
        let pairs = [
            (1000003u128, 1000033u128),
            (179424673, 179424691),
            (2147483647, 2147483629),
        ];
        for &(p, q) in &pairs {
            let n = p * q;
            let mut budget = u64::MAX;
            let f = find_factor_u128(n, &mut budget).expect("factor");
            assert!(f == p || f == q, "n={n} got {f}");
        }
    }

    #[test]
    fn rho_handles_prime_squares() {
        let p = 1000000007u128;
        let mut budget = u64::MAX;
        let f = find_factor_u128(p * p, &mut budget).expect("factor");
        assert_eq!(f, p);
    }
}
