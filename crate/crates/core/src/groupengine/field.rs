//! Table-driven arithmetic for the small finite fields needed by the
//! projective-line constructions (q <= 32).

use super::EngineError;

/// F_q with full addition and multiplication tables. Elements are 0..q-1;
/// for q = p^e > p they are polynomials over F_p in base-p digit encoding.
pub struct Gf {
    pub q: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// Irreducible polynomials x^e + ... over F_p for the prime powers up to 32,
/// given as the coefficients of the non-leading terms (degree 0 upward).
fn modulus_poly(p: u16, e: u32) -> Option<Vec<u16>> {
    Some(match (p, e) {
        (2, 2) => vec![1, 1],          // x^2 + x + 1
        (2, 3) => vec![1, 1, 0],       // x^3 + x + 1
        (2, 4) => vec![1, 1, 0, 0],    // x^4 + x + 1
        (2, 5) => vec![1, 0, 1, 0, 0], // x^5 + x^2 + 1
        (3, 2) => vec![1, 0],          // x^2 + 1
        (3, 3) => vec![1, 2, 0],       // x^3 + 2x + 1
        (5, 2) => vec![1, 1],          // x^2 + x + 1
        _ => return None,
    })
}

impl Gf {
    pub fn new(q: u16) -> Result<Gf, EngineError> {
        let (p, e) = crate::lieorders::prime_power(q as u64)
            .ok_or_else(|| EngineError::Domain(format!("{q} is not a prime power")))?;
        let p = p as u16;
        if e == 1 {
            let mut add = vec![0u16; (q as usize) * (q as usize)];
            let mut mul = vec![0u16; (q as usize) * (q as usize)];
            for a in 0..q {
                for b in 0..q {
                    add[(a as usize) * q as usize + b as usize] = (a + b) % q;
                    mul[(a as usize) * q as usize + b as usize] =
                        ((a as u32 * b as u32) % q as u32) as u16;
                }
            }
            return Ok(Gf { q, add, mul });
        }
        let poly = modulus_poly(p, e).ok_or_else(|| {
            EngineError::Domain(format!("no modulus polynomial registered for q = {q}"))
        })?;
        let digits = |mut x: u16| -> Vec<u16> {
            let mut d = vec![0u16; e as usize];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let pack = |d: &[u16]| -> u16 {
            let mut x = 0u16;
            for &c in d.iter().rev() {
                x = x * p + c;
            }
            x
        };
        let mut add = vec![0u16; (q as usize) * (q as usize)];
        let mut mul = vec![0u16; (q as usize) * (q as usize)];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u16> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a as usize) * q as usize + b as usize] = pack(&sum);
                // polynomial product reduced mod the modulus polynomial
                let mut prod = vec![0u16; 2 * e as usize - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (e as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (j, &m) in poly.iter().enumerate() {
                        // x^e ≡ -poly, so x^k ≡ -poly * x^{k-e}
                        let idx = k - e as usize + j;
                        prod[idx] = (prod[idx] + (p - m % p) * c) % p;
                    }
                }
                mul[(a as usize) * q as usize + b as usize] = pack(&prod[..e as usize]);
            }
        }
        Ok(Gf { q, add, mul })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[(a as usize) * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[(a as usize) * self.q as usize + b as usize]
    }

    #[cfg(test)]
    pub fn neg(&self, a: u16) -> u16 {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("negation")
    }

    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0);
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("inverse")
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u16 {
        'outer: for g in 2..self.q {
            let mut x = g;
            for _ in 1..self.q - 1 {
                if x == 1 {
                    continue 'outer;
                }
                x = self.mul(x, g);
            }
            if x == 1 {
                return g;
            }
        }
        // q = 2 or 3: 1 generates the trivial/2-element group... q >= 2
        if self.q <= 3 {
            return self.q - 1;
        }
        unreachable!("multiplicative group of a finite field is cyclic")
    }
}
