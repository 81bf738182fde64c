//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! An element is stored as a coefficient vector over the power basis
//! `1, z, ..., z^(phi(m)-1)` of `Q[x]/(Phi_m(x))`, where `Phi_m` is the m-th
//! cyclotomic polynomial and `z = zeta_m = exp(2*pi*i/m)`. Reduction modulo
//! `Phi_m` makes the representation canonical at a fixed conductor, so
//! equality at equal conductors is coefficient-wise; across conductors both
//! sides are embedded into the lcm first. Conductors are lowered
//! opportunistically (rational collapse and an exponent-gcd descent), which
//! keeps arithmetic small but is not required for correctness.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Euler totient of `m`.
pub fn phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(m: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=m).filter(|k| m % k == 0).collect();
    d.sort_unstable();
    d
}

/// Monic cyclotomic polynomial Phi_m as integer coefficients, index = degree.
///
/// Computed as (x^m - 1) divided by the product of Phi_d over proper
/// divisors d | m, with results cached process-wide.
fn cyclotomic_poly(m: u64) -> std::sync::Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, std::sync::Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^m - 1
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        for d in divisors(m) {
            if d == m {
                continue;
            }
            let phi_d = cyclotomic_poly(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
        num
    };
    let arc = std::sync::Arc::new(poly);
    cache.lock().unwrap().insert(m, arc.clone());
    arc
}

/// Exact division of integer polynomials; `div` must be monic and divide `num`.
fn int_poly_div_exact(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = div.len() - 1;
    assert!(div[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &div[j] * &c;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Reduce a dense rational polynomial modulo Phi_m, returning exactly
/// phi(m) coefficients.
fn reduce_mod_phi(m: u64, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let phi_m = phi(m) as usize;
    let modulus = cyclotomic_poly(m);
    let dd = modulus.len() - 1; // == phi_m
    while coeffs.len() > dd {
        let top = coeffs.pop().unwrap();
        if !top.is_zero() {
            let k = coeffs.len() - dd;
            for j in 0..dd {
                let t = BigRational::from(modulus[j].clone()) * &top;
                coeffs[k + j] -= t;
            }
        }
    }
    coeffs.resize(phi_m, BigRational::zero());
    coeffs
}

/// Precomputed dense arithmetic data for one conductor: the reduced form
/// of every power zeta^e as integer coordinates over the power basis.
struct FieldData {
    m: u64,
    phi: usize,
    /// rows[e] = coordinates of zeta^e, for e in 0..m.
    rows: Vec<Vec<BigInt>>,
    /// Same rows in machine integers when they fit.
    rows_int: Option<Vec<Vec<i64>>>,
}

fn build_field_data(m: u64) -> FieldData {
    let phi_m = phi(m) as usize;
    let modulus = cyclotomic_poly(m);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); phi_m];
    if phi_m > 0 {
        cur[0] = BigInt::one();
    }
    for _ in 0..m {
        rows.push(cur.clone());
        // multiply by x and fold the top coefficient through the modulus
        let top = cur[phi_m - 1].clone();
        for k in (1..phi_m).rev() {
            cur[k] = cur[k - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for k in 0..phi_m {
                cur[k] -= &modulus[k] * &top;
            }
        }
    }
    let rows_int: Option<Vec<Vec<i64>>> = rows
        .iter()
        .map(|row| row.iter().map(|v| v.to_i64()).collect::<Option<Vec<_>>>())
        .collect();
    FieldData { m, phi: phi_m, rows, rows_int }
}

fn field_data(m: u64) -> std::sync::Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, std::sync::Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&m) {
        return f.clone();
    }
    let data = std::sync::Arc::new(build_field_data(m));
    // large conductors are built on demand but not retained
    if m <= 512 {
        cache.lock().unwrap().insert(m, data.clone());
    }
    data
}

/// Batched arithmetic in a fixed Q(zeta_m): dense coordinate vectors with
/// products folded through precomputed power rows and one canonicalization
/// at the end. This is the hot path for character inner products.
pub struct FieldOps {
    data: std::sync::Arc<FieldData>,
}

impl FieldOps {
    pub fn new(m: u64) -> FieldOps {
        FieldOps { data: field_data(m.max(1)) }
    }

    pub fn conductor(&self) -> u64 {
        self.data.m
    }

    /// Coordinates of a value embedded into this field; the value's
    /// conductor must divide m.
    pub fn to_dense(&self, v: &Cyclotomic) -> Result<Vec<BigRational>> {
        let m = self.data.m;
        if m % v.conductor != 0 {
            return Err(Error::Parameter(format!(
                "cannot embed conductor {} into {m}",
                v.conductor
            )));
        }
        let scale = m / v.conductor;
        let mut out = vec![BigRational::zero(); self.data.phi];
        for (k, c) in v.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.data.rows[((k as u64 * scale) % m) as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * BigRational::from(r.clone());
                }
            }
        }
        Ok(out)
    }

    /// Complex conjugate of a dense vector.
    pub fn conj_dense(&self, a: &[BigRational]) -> Vec<BigRational> {
        let m = self.data.m;
        let mut out = vec![BigRational::zero(); self.data.phi];
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.data.rows[((m - k as u64 % m) % m) as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * BigRational::from(r.clone());
                }
            }
        }
        out
    }

    /// acc += weight * a * b, all dense at this conductor.
    pub fn mul_add_into(
        &self,
        a: &[BigRational],
        b: &[BigRational],
        weight: &BigRational,
        acc: &mut [BigRational],
    ) {
        let m = self.data.m as usize;
        // accumulate the raw convolution in exponent space mod m
        let mut exp_acc = vec![BigRational::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let wx = weight * x;
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    exp_acc[(i + j) % m] += &wx * y;
                }
            }
        }
        for (e, c) in exp_acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.data.rows[e];
            for (o, r) in acc.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += &c * BigRational::from(r.clone());
                }
            }
        }
    }

    /// Canonicalize dense coordinates back into a value.
    pub fn make(&self, coeffs: Vec<BigRational>) -> Cyclotomic {
        Cyclotomic { conductor: self.data.m, coeffs }.canonicalized()
    }

    /// Machine-integer coordinates of a value, when the embedding and all
    /// coefficients fit; `None` requests the exact big-number path.
    pub fn to_dense_int(&self, v: &Cyclotomic) -> Option<Vec<i128>> {
        let rows = self.data.rows_int.as_ref()?;
        let m = self.data.m;
        if m % v.conductor != 0 {
            return None;
        }
        let scale = m / v.conductor;
        let mut out = vec![0i128; self.data.phi];
        for (k, c) in v.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.denom().is_one() {
                return None;
            }
            let ci = c.numer().to_i128()?;
            let row = &rows[((k as u64 * scale) % m) as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                *o = o.checked_add(ci.checked_mul(r as i128)?)?;
            }
        }
        Some(out)
    }

    pub fn conj_dense_int(&self, a: &[i128]) -> Option<Vec<i128>> {
        let rows = self.data.rows_int.as_ref()?;
        let m = self.data.m;
        let mut out = vec![0i128; self.data.phi];
        for (k, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &rows[((m - k as u64 % m) % m) as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                *o = o.checked_add(c.checked_mul(r as i128)?)?;
            }
        }
        Some(out)
    }

    /// exp_acc[(i+j) % m] += weight * a[i] * b[j]: the raw convolution in
    /// exponent space, foldable later in one pass.
    pub fn conv_exp_int(
        &self,
        a: &[i128],
        b: &[i128],
        weight: i128,
        exp_acc: &mut [i128],
    ) -> Option<()> {
        let m = self.data.m as usize;
        debug_assert_eq!(exp_acc.len(), m);
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let wx = weight.checked_mul(x)?;
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let idx = (i + j) % m;
                    exp_acc[idx] = exp_acc[idx].checked_add(wx.checked_mul(y)?)?;
                }
            }
        }
        Some(())
    }

    /// Fold exponent-space coordinates down to the power basis.
    pub fn fold_exp_int(&self, exp_acc: &[i128]) -> Option<Vec<i128>> {
        let rows = self.data.rows_int.as_ref()?;
        let mut out = vec![0i128; self.data.phi];
        for (e, &c) in exp_acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &rows[e];
            for (o, &r) in out.iter_mut().zip(row) {
                *o = o.checked_add(c.checked_mul(r as i128)?)?;
            }
        }
        Some(out)
    }

    /// acc += weight * a * b over machine integers; `None` on overflow.
    pub fn mul_add_into_int(
        &self,
        a: &[i128],
        b: &[i128],
        weight: i128,
        acc: &mut [i128],
    ) -> Option<()> {
        let mut exp_acc = vec![0i128; self.data.m as usize];
        self.conv_exp_int(a, b, weight, &mut exp_acc)?;
        let folded = self.fold_exp_int(&exp_acc)?;
        for (o, f) in acc.iter_mut().zip(folded) {
            *o = o.checked_add(f)?;
        }
        Some(())
    }

    pub fn exponent_space_len(&self) -> usize {
        self.data.m as usize
    }

    /// Dense integer coordinates divided by `den`, canonicalized.
    pub fn make_int(&self, coeffs: Vec<i128>, den: u64) -> Cyclotomic {
        let den = BigInt::from(den);
        let coeffs = coeffs
            .into_iter()
            .map(|c| BigRational::new(BigInt::from(c), den.clone()))
            .collect();
        Cyclotomic { conductor: self.data.m, coeffs }.canonicalized()
    }
}

/// An exact element of a cyclotomic field.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    /// Coefficient of zeta^k at index k; length phi(conductor).
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![BigRational::one()] }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// zeta_m^k.
    pub fn root_of_unity(m: u64, k: u64) -> Self {
        assert!(m >= 1);
        Self::from_terms(m, [(k % m, BigRational::one())])
    }

    /// Build from (exponent, coefficient) terms in Q(zeta_m); exponents are
    /// taken modulo m and the result is canonicalized.
    pub fn from_terms<I>(m: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        assert!(m >= 1);
        let mut dense = vec![BigRational::zero(); m as usize];
        for (e, c) in terms {
            dense[(e % m) as usize] += c;
        }
        let coeffs = reduce_mod_phi(m, dense);
        Cyclotomic { conductor: m, coeffs }.canonicalized()
    }

    fn canonicalized(mut self) -> Self {
        loop {
            if self.conductor == 1 {
                return self;
            }
            if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
                let c0 = self.coeffs[0].clone();
                return Cyclotomic { conductor: 1, coeffs: vec![c0] };
            }
            // exponent-gcd descent: if every exponent in the support shares a
            // factor d with m, the element lives in Q(zeta_{m/d}).
            let mut g = self.conductor;
            for (k, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() && k > 0 {
                    g = g.gcd(&(k as u64));
                }
            }
            if g <= 1 {
                return self;
            }
            let new_m = self.conductor / g;
            let terms: Vec<(u64, BigRational)> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| ((k as u64) / g, c.clone()))
                .collect();
            let mut dense = vec![BigRational::zero(); new_m as usize];
            for (e, c) in terms {
                dense[(e % new_m) as usize] += c;
            }
            self = Cyclotomic { conductor: new_m, coeffs: reduce_mod_phi(new_m, dense) };
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1 || self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Coefficients after embedding into Q(zeta_m); `m` must be a multiple
    /// of the stored conductor.
    pub fn embedded_coeffs(&self, m: u64) -> Result<Vec<BigRational>> {
        if m % self.conductor != 0 {
            return Err(Error::Parameter(format!(
                "cannot embed conductor {} into {}",
                self.conductor, m
            )));
        }
        let scale = m / self.conductor;
        let mut dense = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[((k as u64 * scale) % m) as usize] += c.clone();
            }
        }
        Ok(reduce_mod_phi(m, dense))
    }

    fn binary_op(&self, other: &Self, f: impl Fn(&[BigRational], &[BigRational], u64) -> Vec<(u64, BigRational)>) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.embedded_coeffs(m).expect("lcm embed");
        let b = other.embedded_coeffs(m).expect("lcm embed");
        Self::from_terms(m, f(&a, &b, m))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binary_op(other, |a, b, _| {
            a.iter()
                .zip(b)
                .enumerate()
                .map(|(k, (x, y))| (k as u64, x + y))
                .collect()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.binary_op(other, |a, b, _| {
            a.iter()
                .zip(b)
                .enumerate()
                .map(|(k, (x, y))| (k as u64, x - y))
                .collect()
        })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // fast paths keep table arithmetic cheap: most values are rational
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        self.binary_op(other, |a, b, _m| {
            let mut prod: Vec<BigRational> = vec![BigRational::zero(); a.len() + b.len()];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        prod[i + j] += x * y;
                    }
                }
            }
            prod.into_iter().enumerate().map(|(k, c)| (k as u64, c)).collect()
        })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
        .canonicalized()
    }

    /// Complex conjugation: zeta^k -> zeta^(m-k).
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let m = self.conductor;
        Self::from_terms(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| ((m - k as u64) % m, c.clone())),
        )
    }

    /// `self * conj(self)`; rational and nonnegative for any element.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Floating-point value, for the numerical verifier.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().expect("rational out of f64 range");
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / m;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    /// Render using `z` for zeta_m with the given conductor (`m` must be a
    /// multiple of the element's conductor). Used by the table JSON format.
    pub fn to_string_in(&self, m: u64) -> Result<String> {
        let coeffs = self.embedded_coeffs(m)?;
        let mut out = String::new();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_str = format_rational(&mag);
            if k == 0 {
                out.push_str(&coeff_str);
            } else {
                if !mag.is_one() {
                    out.push_str(&coeff_str);
                    out.push('*');
                }
                if k == 1 {
                    out.push('z');
                } else {
                    out.push_str(&format!("z^{k}"));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        Ok(out)
    }

    /// Parse a value string over `z = zeta_m`: sums/differences of terms,
    /// each a rational, `z^k`, or `coeff*z^k`.
    pub fn parse(s: &str, m: u64) -> Result<Self> {
        let mut terms: Vec<(u64, BigRational)> = Vec::new();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic value".into()));
        }
        // split into signed chunks
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        let mut started = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && started && !cur.is_empty() {
                chunks.push((sign, std::mem::take(&mut cur)));
                sign = ch == '-';
            } else if (ch == '+' || ch == '-') && !started {
                sign = ch == '-';
            } else {
                cur.push(ch);
            }
            if ch != '+' && ch != '-' {
                started = true;
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in '{s}'")));
        }
        chunks.push((sign, cur));
        for (neg, chunk) in chunks {
            let (coeff_part, exp) = match chunk.find('z') {
                None => (chunk.as_str(), None),
                Some(pos) => {
                    let before = chunk[..pos].trim_end_matches('*');
                    let after = &chunk[pos + 1..];
                    let exp = if after.is_empty() {
                        1u64
                    } else if let Some(e) = after.strip_prefix('^') {
                        e.parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in '{chunk}'")))?
                    } else {
                        return Err(Error::Parse(format!("bad term '{chunk}'")));
                    };
                    (before, Some(exp))
                }
            };
            let mut coeff = if coeff_part.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coeff_part)?
            };
            if neg {
                coeff = -coeff;
            }
            terms.push((exp.unwrap_or(0), coeff));
        }
        Ok(Self::from_terms(m, terms))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.conductor.lcm(&other.conductor);
        self.embedded_coeffs(m).unwrap() == other.embedded_coeffs(m).unwrap()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in(self.conductor).map_err(|_| fmt::Error)?)
    }
}

/// Parse "n", "-n" or "n/d" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(BigRational::new(n, d))
}

/// Render a rational as "n" or "n/d", never as a decimal.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
