//! Small finite fields GF(q) for q up to 9.
//!
//! Prime fields are plain modular arithmetic; the prime-power fields use a
//! fixed irreducible polynomial each (q = 4: x^2+x+1, q = 8: x^3+x+1,
//! q = 9: x^2+1). Elements are encoded as 0..q-1 through base-p digits,
//! and the full addition and multiplication tables are built up front.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GaloisField {
    pub q: u32,
    pub p: u32,
    pub r: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// Irreducible polynomial coefficients (constant first, no leading 1).
fn modulus_for(q: u32) -> Result<(u32, u32, Vec<u32>)> {
    Ok(match q {
        2 | 3 | 5 | 7 => (q, 1, vec![]),
        4 => (2, 2, vec![1, 1]),     // x^2 + x + 1
        8 => (2, 3, vec![1, 1, 0]),  // x^3 + x + 1
        9 => (3, 2, vec![1, 0]),     // x^2 + 1
        _ => {
            return Err(Error::Parameter(format!(
                "unsupported field size {q} (supported: 2,3,4,5,7,8,9)"
            )))
        }
    })
}

fn digits(value: u32, p: u32, r: u32) -> Vec<u32> {
    let mut v = value;
    (0..r)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, r, modulus) = modulus_for(q)?;
        let mut add = vec![0u32; (q * q) as usize];
        let mut mul = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a, p, r);
                let db = digits(b, p, r);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum, p);
                // polynomial product reduced by the modulus
                let mut prod = vec![0u32; (2 * r - 1) as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (r as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c != 0 {
                        prod[k] = 0;
                        for (offset, &m) in modulus.iter().enumerate() {
                            let idx = k - r as usize + offset;
                            prod[idx] = (prod[idx] + (p - m % p) * c) % p;
                        }
                    }
                }
                mul[(a * q + b) as usize] = encode(&prod[..r as usize], p);
            }
        }
        Ok(GaloisField { q, p, r, add, mul })
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }
}
