//! Finite fields F_{p^n} with dense element codes.
//!
//! An element is stored as an integer code in `[0, q)`; its base-p digits
//! (least significant first) are the coordinates in the polynomial basis
//! `{1, x, ..., x^{n-1}}` modulo the field's irreducible modulus. Codes 0 and
//! 1 are the additive and multiplicative identities. Multiplication, inverse
//! and powers go through discrete-log tables built once at construction;
//! addition is digit arithmetic.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// Default cap on the field order; the algorithms here are dense over `[0, q)`.
pub const DEFAULT_MAX_Q: u64 = 1 << 20;

/// A field element, identified by its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct FieldData {
    p: u64,
    n: u32,
    q: u64,
    /// Monic irreducible modulus over F_p, coefficients ascending, length n+1.
    modulus: Vec<u64>,
    generator: Elem,
    /// exp[i] = code of generator^i for i in 0..q-1.
    exp: Vec<u32>,
    /// log[code] = i with generator^i = code; log[0] is a sentinel.
    log: Vec<u32>,
    /// Distinct prime factors of q - 1.
    q1_factors: Vec<u64>,
}

/// Immutable description of F_{p^n}. Cheap to clone and share across workers.
#[derive(Clone)]
pub struct FieldContext {
    inner: Arc<FieldData>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldContext(q = {}^{})", self.inner.p, self.inner.n)
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.n == other.inner.n
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldContext {}

pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Returns (gcd(r, o), inverse of r/gcd modulo o/gcd).
fn ext_gcd_inverse(r: u64, o: u64) -> (u64, u64) {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let d = gcd(r, o);
    let (rr, oo) = (r / d, o / d);
    // extended Euclid for rr^{-1} mod oo
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut rem, mut new_rem): (i128, i128) = (oo as i128, rr as i128);
    while new_rem != 0 {
        let quot = rem / new_rem;
        (t, new_t) = (new_t, t - quot * new_t);
        (rem, new_rem) = (new_rem, rem - quot * new_rem);
    }
    let inv = ((t % oo as i128) + oo as i128) % oo.max(1) as i128;
    (d, inv as u64)
}

/// All divisors, ascending.
pub fn divisors_of(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d != m / d {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

// --- bootstrap polynomial arithmetic over F_p (digit vectors, ascending) ---

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    fp_rem(&mut prod, m, p);
    prod
}

fn fp_rem(v: &mut Vec<u64>, m: &[u64], p: u64) {
    let dm = m.len() - 1;
    while v.len() > dm {
        let lead = *v.last().unwrap();
        let shift = v.len() - 1 - dm;
        if lead != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let idx = shift + j;
                v[idx] = (v[idx] + (p - lead % p) * mj) % p;
            }
        }
        v.pop();
    }
    fp_trim(v);
}

fn fp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = fp_inv_scalar(*b.last().unwrap(), p);
        let db = b.len() - 1;
        while a.len() > db {
            let lead = *a.last().unwrap();
            if lead != 0 {
                let c = lead * lead_inv % p;
                let shift = a.len() - 1 - db;
                for (j, &bj) in b.iter().enumerate() {
                    a[shift + j] = (a[shift + j] + (p - c * bj % p)) % p;
                }
            }
            a.pop();
            fp_trim(&mut a);
            if a.len() <= db {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn fp_inv_scalar(a: u64, p: u64) -> u64 {
    // p is small and prime
    let mut t = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            t = t * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    t
}

/// x^(p^k) mod m, over F_p.
fn fp_frob_power_of_x(k: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut x = vec![0u64, 1];
    fp_rem(&mut x, m, p);
    let mut acc = x;
    for _ in 0..k {
        // acc = acc^p mod m
        let mut e = p;
        let mut result = vec![1u64];
        let mut base = acc.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = fp_mulmod(&result, &base, m, p);
            }
            base = fp_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        acc = result;
    }
    acc
}

/// Monic degree-n polynomial over F_p irreducible?
fn fp_irreducible(m: &[u64], p: u64) -> bool {
    let n = (m.len() - 1) as u32;
    if n == 1 {
        return true;
    }
    // x^(p^n) == x mod m
    let xq = fp_frob_power_of_x(n, m, p);
    let mut x = vec![0u64, 1];
    fp_rem(&mut x, m, p);
    if xq != x {
        return false;
    }
    // gcd(x^(p^(n/l)) - x, m) trivial for every prime l | n
    for l in prime_factors(n as u64) {
        let mut d = fp_frob_power_of_x(n / l as u32, m, p);
        // d -= x
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        fp_trim(&mut d);
        let g = fp_gcd(d, m.to_vec(), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl FieldContext {
    /// Build F_{p^n}. When `modulus` is omitted, picks the lexicographically
    /// smallest monic irreducible (coefficients compared from the constant
    /// term up) and the smallest generator code, so equal inputs always give
    /// identical contexts.
    pub fn new(p: u64, n: u32, modulus: Option<Vec<u64>>) -> Result<FieldContext> {
        Self::with_cap(p, n, modulus, DEFAULT_MAX_Q)
    }

    /// Same as [`FieldContext::new`] with an explicit cap on q.
    pub fn with_cap(p: u64, n: u32, modulus: Option<Vec<u64>>, cap: u64) -> Result<FieldContext> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::BadParams("extension degree must be at least 1".into()));
        }
        let q128 = (p as u128).checked_pow(n).ok_or(Error::Overflow {
            q: u128::MAX,
            cap,
        })?;
        if q128 > cap as u128 {
            return Err(Error::Overflow { q: q128, cap });
        }
        let q = q128 as u64;

        let modulus = match modulus {
            Some(mut m) => {
                fp_trim(&mut m);
                if m.len() != n as usize + 1 || *m.last().unwrap() != 1 {
                    return Err(Error::BadParams(
                        "modulus must be monic of degree n".into(),
                    ));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::BadParams(
                        "modulus coefficients must be reduced mod p".into(),
                    ));
                }
                if !fp_irreducible(&m, p) {
                    return Err(Error::NotIrreducible(p));
                }
                m
            }
            None => Self::default_modulus(p, n, q)?,
        };

        let mut data = FieldData {
            p,
            n,
            q,
            modulus,
            generator: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            q1_factors: prime_factors(q - 1),
        };
        data.generator = Elem(data.find_generator());
        data.build_tables();
        Ok(FieldContext {
            inner: Arc::new(data),
        })
    }

    fn default_modulus(p: u64, n: u32, q: u64) -> Result<Vec<u64>> {
        // Enumerate monic degree-n candidates in lexicographic order of
        // (c_0, c_1, ..., c_{n-1}); the last coordinate moves fastest.
        for t in 0..q {
            let mut coeffs = vec![0u64; n as usize + 1];
            coeffs[n as usize] = 1;
            let mut rem = t;
            for i in (0..n as usize).rev() {
                coeffs[i] = rem % p;
                rem /= p;
            }
            if fp_irreducible(&coeffs, p) {
                return Ok(coeffs);
            }
        }
        Err(Error::NotIrreducible(p))
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn n(&self) -> u32 {
        self.inner.n
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn generator(&self) -> Elem {
        self.inner.generator
    }

    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.inner.q {
            Ok(Elem(code))
        } else {
            Err(Error::CodeOutOfRange {
                code,
                q: self.inner.q,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += (x % p + y % p) % p * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            let d = x % p;
            if d != 0 {
                out += (p - d) * place;
            }
            place *= p;
            x /= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let d = &self.inner;
        let o = d.q - 1;
        let i = (d.log[a.0 as usize] as u64 + d.log[b.0 as usize] as u64) % o;
        Elem(d.exp[i as usize] as u64)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = &self.inner;
        let o = d.q - 1;
        let i = (o - d.log[a.0 as usize] as u64) % o;
        Ok(Elem(d.exp[i as usize] as u64))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e, with 0^0 = 1.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a.0 == 0 {
            return if e == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let d = &self.inner;
        let o = d.q - 1;
        let i = (d.log[a.0 as usize] as u128 * (e % o) as u128 % o as u128) as usize;
        Elem(d.exp[i] as u64)
    }

    /// a^(p^k); F_p-linear in a, and the identity map when k = n.
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let d = &self.inner;
        let o = d.q - 1;
        // p^k mod (q - 1), via modular exponentiation
        let mut e: u128 = 1;
        let mut base = d.p as u128 % o as u128;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                e = e * base % o as u128;
            }
            base = base * base % o as u128;
            k >>= 1;
        }
        self.pow(a, e as u64)
    }

    /// Inverse of the k-fold Frobenius.
    pub fn frobenius_inv(&self, a: Elem, k: u32) -> Elem {
        let n = self.inner.n;
        self.frobenius(a, (n - (k % n)) % n)
    }

    /// The unique p-th root (F_q is perfect): a^(q/p).
    pub fn pth_root(&self, a: Elem) -> Elem {
        self.frobenius_inv(a, 1)
    }

    /// All elements of the subfield F_{p^e}, sorted by code. Requires e | n.
    pub fn subfield_elements(&self, e: u32) -> Result<Vec<Elem>> {
        let n = self.inner.n;
        if e == 0 || n % e != 0 {
            return Err(Error::NotDivisor { e, n });
        }
        Ok(self
            .elements()
            .filter(|&a| self.frobenius(a, e) == a)
            .collect())
    }

    /// Image of an integer in the prime subfield.
    pub fn scalar(&self, m: u64) -> Elem {
        Elem(m % self.inner.p)
    }

    /// Discrete log base the context generator; `None` for zero.
    pub fn discrete_log(&self, a: Elem) -> Option<u64> {
        if a.0 == 0 {
            None
        } else {
            Some(self.inner.log[a.0 as usize] as u64)
        }
    }

    /// Some x with x^r = a, when one exists.
    pub fn rth_root(&self, a: Elem, r: u64) -> Option<Elem> {
        if a.0 == 0 {
            return Some(Elem::ZERO);
        }
        let o = self.inner.q - 1;
        let r = r % o;
        if r == 0 {
            return (a == Elem::ONE).then_some(Elem::ONE);
        }
        let l = self.inner.log[a.0 as usize] as u64;
        let (d, inv) = ext_gcd_inverse(r, o);
        if l % d != 0 {
            return None;
        }
        let y = (l / d) % (o / d) * inv % (o / d);
        Some(Elem(self.inner.exp[y as usize] as u64))
    }

    /// Smallest t >= 1 with a^t = 1; divides q - 1.
    pub fn mult_order(&self, a: Elem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let mut t = self.inner.q - 1;
        for &l in &self.inner.q1_factors {
            while t % l == 0 && self.pow(a, t / l) == Elem::ONE {
                t /= l;
            }
        }
        Ok(t)
    }
}

impl FieldData {
    fn code_to_digits(&self, code: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.n as usize);
        let mut c = code;
        for _ in 0..self.n {
            v.push(c % self.p);
            c /= self.p;
        }
        v
    }

    fn digits_to_code(&self, v: &[u64]) -> u64 {
        let mut code = 0;
        for &d in v.iter().rev() {
            code = code * self.p + d;
        }
        code
    }

    fn raw_mul(&self, a: u64, b: u64) -> u64 {
        let da = self.code_to_digits(a);
        let db = self.code_to_digits(b);
        let prod = fp_mulmod(&da, &db, &self.modulus, self.p);
        let mut padded = prod;
        padded.resize(self.n as usize, 0);
        self.digits_to_code(&padded)
    }

    fn raw_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> u64 {
        let o = self.q - 1;
        'outer: for g in 1..self.q {
            for &l in &self.q1_factors {
                if self.raw_pow(g, o / l) == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("a cyclic group of order q - 1 always has a generator")
    }

    fn build_tables(&mut self) {
        let o = (self.q - 1) as usize;
        self.exp = vec![0u32; o.max(1)];
        self.log = vec![0u32; self.q as usize];
        let mut acc = 1u64;
        for i in 0..o.max(1) {
            self.exp[i] = acc as u32;
            self.log[acc as usize] = i as u32;
            acc = self.raw_mul(acc, self.generator.0);
        }
    }
}

/// Parse a field spec string: `p^n`, plain `p`, or `p^n/c0,c1,...,cn` with
/// the modulus coefficients ascending from the constant term.
pub fn parse_field_spec(s: &str) -> Result<FieldContext> {
    let s = s.trim();
    let (head, modulus) = match s.split_once('/') {
        Some((h, m)) => {
            let coeffs = m
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse {
                            pos: 0,
                            msg: format!("bad modulus coefficient '{}'", c.trim()),
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            (h, Some(coeffs))
        }
        None => (s, None),
    };
    let (p, n) = match head.split_once('^') {
        Some((ps, ns)) => {
            let p = ps.trim().parse::<u64>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad characteristic '{}'", ps.trim()),
            })?;
            let n = ns.trim().parse::<u32>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad extension degree '{}'", ns.trim()),
            })?;
            (p, n)
        }
        None => {
            let p = head.trim().parse::<u64>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad field spec '{head}'"),
            })?;
            (p, 1)
        }
    };
    FieldContext::new(p, n, modulus)
}

/// Parse an element: decimal code, `0`, `g`, or `g^k`.
pub fn parse_elem(ctx: &FieldContext, s: &str) -> Result<Elem> {
    let s = s.trim();
    if s == "g" {
        return Ok(ctx.generator());
    }
    if let Some(ks) = s.strip_prefix("g^") {
        let k = ks.trim().parse::<u64>().map_err(|_| Error::Parse {
            pos: 2,
            msg: format!("bad generator exponent '{ks}'"),
        })?;
        return Ok(ctx.pow(ctx.generator(), k));
    }
    let code = s.parse::<u64>().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("bad element '{s}'"),
    })?;
    ctx.elem(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_moduli_are_lex_first() {
        // F_4: the only irreducible quadratic over F_2
        assert_eq!(FieldContext::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        // prime field: modulus x
        assert_eq!(FieldContext::new(3, 1, None).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldContext::new(2, 3, None).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FieldContext::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    /// Independent oracle for the F_81 default modulus: scan monic quartics in
    /// lexicographic coefficient order and test irreducibility by checking
    /// that the polynomial divides x^(3^4) - x but shares no factor with
    /// x^(3^i) - x for i < 4, using a standalone gcd on digit vectors.
    #[test]
    fn default_modulus_3_4_matches_brute_force() {
        let p = 3u64;
        let naive_mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
            if a.is_empty() || b.is_empty() {
                return Vec::new();
            }
            let mut out = vec![0u64; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] = (out[i + j] + x * y) % p;
                }
            }
            out
        };
        let rem = |mut a: Vec<u64>, b: &[u64]| -> Vec<u64> {
            let db = b.len() - 1;
            let inv = [0u64, 1, 2][*b.last().unwrap() as usize]; // inverse mod 3
            while a.len() > db {
                let lead = *a.last().unwrap() % p;
                if lead != 0 {
                    let c = lead * inv % p;
                    let s = a.len() - 1 - db;
                    for (j, &bj) in b.iter().enumerate() {
                        a[s + j] = (a[s + j] + (p - c * bj % p)) % p;
                    }
                }
                a.pop();
                while a.last() == Some(&0) {
                    a.pop();
                }
            }
            a
        };
        let gcd = |mut a: Vec<u64>, mut b: Vec<u64>| -> Vec<u64> {
            while !b.is_empty() {
                let r = rem(a, &b);
                a = b;
                b = r;
            }
            a
        };
        // x^(3^i) mod m by repeated naive cubing
        let frob = |i: u32, m: &[u64]| -> Vec<u64> {
            let mut acc = vec![0u64, 1];
            for _ in 0..i {
                let sq = naive_mul(&acc, &acc);
                let cube = naive_mul(&sq, &acc);
                acc = rem(cube, m);
            }
            acc
        };
        let mut found = None;
        'scan: for t in 0..81u64 {
            let digits = [t / 27 % 3, t / 9 % 3, t / 3 % 3, t % 3];
            // digits are (c0, c1, c2, c3) with c3 moving fastest
            let m = vec![digits[0], digits[1], digits[2], digits[3], 1];
            // irreducible iff x^(3^4) == x mod m and gcd(x^(3^i) - x, m) = 1 for i in {1, 2}
            let x4 = frob(4, &m);
            let mut xx = vec![0u64, 1];
            if x4 != xx {
                continue;
            }
            for i in [1u32, 2] {
                let mut d = frob(i, &m);
                if d.len() < 2 {
                    d.resize(2, 0);
                }
                d[1] = (d[1] + p - 1) % p;
                while d.last() == Some(&0) {
                    d.pop();
                }
                xx = gcd(d, m.clone());
                if xx.len() > 1 {
                    continue 'scan;
                }
            }
            found = Some(m);
            break;
        }
        let expected = found.expect("an irreducible quartic exists over F_3");
        assert_eq!(FieldContext::new(3, 4, None).unwrap().modulus(), &expected[..]);
        // frozen value from the oracle: x^4 + x^3 + x^2 + 1
        assert_eq!(expected, vec![1, 0, 1, 1, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f4 = FieldContext::new(2, 2, None).unwrap();
        // x * x = x + 1
        assert_eq!(f4.mul(Elem(2), Elem(2)), Elem(3));
        for a in f4.elements() {
            assert_eq!(f4.add(a, f4.neg(a)), Elem::ZERO);
        }
        let f9 = FieldContext::new(3, 2, None).unwrap();
        let g = f9.generator();
        assert_eq!(f9.pow(g, 8), Elem::ONE);
        assert_eq!(f9.mult_order(g).unwrap(), 8);
        assert_eq!(f9.mult_order(Elem::ONE).unwrap(), 1);
        assert_eq!(f9.mult_order(f9.mul(g, g)).unwrap(), 4);
        assert!(matches!(f9.inv(Elem::ZERO), Err(Error::DivisionByZero)));
        assert!(matches!(f9.mult_order(Elem::ZERO), Err(Error::ZeroElement)));
    }

    #[test]
    fn frobenius_examples() {
        let f4 = FieldContext::new(2, 2, None).unwrap();
        assert_eq!(f4.frobenius(Elem(2), 1), Elem(3));
        let f9 = FieldContext::new(3, 2, None).unwrap();
        for a in [Elem(0), Elem(1), Elem(2)] {
            assert_eq!(f9.frobenius(a, 1), a); // prime subfield is fixed
        }
        for a in f9.elements() {
            assert_eq!(f9.frobenius(a, 2), a);
            assert_eq!(f9.frobenius(f9.pth_root(a), 1), a);
        }
    }

    #[test]
    fn frobenius_is_a_ring_map() {
        let ctx = FieldContext::new(3, 4, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = Elem(rng.random_range(0..ctx.q()));
            let b = Elem(rng.random_range(0..ctx.q()));
            let k = rng.random_range(0..8u32);
            assert_eq!(
                ctx.frobenius(ctx.mul(a, b), k),
                ctx.mul(ctx.frobenius(a, k), ctx.frobenius(b, k))
            );
            assert_eq!(
                ctx.frobenius(ctx.add(a, b), k),
                ctx.add(ctx.frobenius(a, k), ctx.frobenius(b, k))
            );
        }
    }

    #[test]
    fn subfields() {
        let f4 = FieldContext::new(2, 2, None).unwrap();
        assert_eq!(f4.subfield_elements(1).unwrap(), vec![Elem(0), Elem(1)]);
        let f9 = FieldContext::new(3, 2, None).unwrap();
        assert_eq!(f9.subfield_elements(2).unwrap().len(), 9);
        let f81 = FieldContext::new(3, 4, None).unwrap();
        let sub = f81.subfield_elements(2).unwrap();
        assert_eq!(sub.len(), 9);
        // closed under add, mul, nonzero inverse; contains 0 and 1
        assert!(sub.contains(&Elem::ZERO) && sub.contains(&Elem::ONE));
        for &a in &sub {
            for &b in &sub {
                assert!(sub.binary_search(&f81.mul(a, b)).is_ok());
                assert!(sub.binary_search(&f81.add(a, b)).is_ok());
            }
            if !a.is_zero() {
                assert!(sub.binary_search(&f81.inv(a).unwrap()).is_ok());
            }
        }
        assert!(matches!(
            f81.subfield_elements(3),
            Err(Error::NotDivisor { e: 3, n: 4 })
        ));
    }

    #[test]
    fn order_divisor_property() {
        let ctx = FieldContext::new(2, 4, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = Elem(rng.random_range(1..ctx.q()));
            let t = ctx.mult_order(a).unwrap();
            assert_eq!(ctx.pow(a, t), Elem::ONE);
            assert_eq!((ctx.q() - 1) % t, 0);
            for d in divisors_of(t) {
                if d < t {
                    assert_ne!(ctx.pow(a, d), Elem::ONE, "order must be minimal");
                }
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = FieldContext::new(3, 4, None).unwrap();
        let b = FieldContext::new(3, 4, None).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator(), b.generator());
        assert_eq!(a, b);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FieldContext::new(4, 1, None), Err(Error::NotPrime(4))));
        assert!(matches!(
            FieldContext::new(2, 21, None),
            Err(Error::Overflow { .. })
        ));
        // x^2 + 2x + 1 = (x + 1)^2 is reducible over F_3
        assert!(matches!(
            FieldContext::new(3, 2, Some(vec![1, 2, 1])),
            Err(Error::NotIrreducible(3))
        ));
    }

    #[test]
    fn field_spec_and_element_io() {
        let ctx = parse_field_spec("3^2").unwrap();
        assert_eq!(ctx.q(), 9);
        let ctx2 = parse_field_spec("3^2/1,0,1").unwrap();
        assert_eq!(ctx2.modulus(), &[1, 0, 1]);
        let ctx3 = parse_field_spec("7").unwrap();
        assert_eq!((ctx3.p(), ctx3.n()), (7, 1));
        assert_eq!(parse_elem(&ctx, "0").unwrap(), Elem::ZERO);
        assert_eq!(parse_elem(&ctx, "5").unwrap(), Elem(5));
        assert_eq!(parse_elem(&ctx, "g").unwrap(), ctx.generator());
        assert_eq!(
            parse_elem(&ctx, "g^2").unwrap(),
            ctx.mul(ctx.generator(), ctx.generator())
        );
        assert!(parse_elem(&ctx, "9").is_err());
        assert!(parse_field_spec("abc").is_err());
    }
}
