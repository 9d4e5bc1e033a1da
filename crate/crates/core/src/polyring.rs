//! Dense univariate polynomials over a [`FieldContext`].
//!
//! Coefficients are stored ascending with no trailing zeros; the zero
//! polynomial has an empty list and `degree()` of `None`. Values are
//! immutable and safe to share across workers.
//!
//! The text format used by the CLI and fixtures is a sum of terms
//! `c*x^e`, `x^e`, `x`, or a bare constant, with coefficients in the
//! element I/O format (`17`, `g^3`, `0`). Parse-then-print is canonical:
//! descending exponents, no zero terms, decimal coefficient codes.

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldContext};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldContext,
    coeffs: Vec<Elem>,
}

fn normalize(coeffs: &mut Vec<Elem>) {
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

impl Poly {
    pub fn zero(ctx: &FieldContext) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldContext) -> Poly {
        Poly::constant(ctx, Elem::ONE)
    }

    pub fn x(ctx: &FieldContext) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: vec![Elem::ZERO, Elem::ONE],
        }
    }

    pub fn constant(ctx: &FieldContext, c: Elem) -> Poly {
        let mut coeffs = vec![c];
        normalize(&mut coeffs);
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn monomial(ctx: &FieldContext, c: Elem, e: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(ctx);
        }
        let mut coeffs = vec![Elem::ZERO; e + 1];
        coeffs[e] = c;
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn from_elems(ctx: &FieldContext, mut coeffs: Vec<Elem>) -> Poly {
        normalize(&mut coeffs);
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn from_codes(ctx: &FieldContext, codes: &[u64]) -> Result<Poly> {
        let coeffs = codes
            .iter()
            .map(|&c| ctx.elem(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_elems(ctx, coeffs))
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, e: usize) -> Elem {
        self.coeffs.get(e).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    fn assert_ctx(&self, rhs: &Poly) {
        assert!(
            self.ctx == rhs.ctx,
            "polynomial operands belong to different field contexts"
        );
    }

    pub fn same_ctx(&self, rhs: &Poly) -> Result<()> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        self.assert_ctx(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.ctx.add(self.coeff(i), rhs.coeff(i)));
        }
        Poly::from_elems(&self.ctx, out)
    }

    pub fn neg(&self) -> Poly {
        let out = self.coeffs.iter().map(|&c| self.ctx.neg(c)).collect();
        Poly {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        self.assert_ctx(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = self.ctx.add(out[i + j], self.ctx.mul(a, b));
            }
        }
        Poly::from_elems(&self.ctx, out)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let out = self.coeffs.iter().map(|&a| self.ctx.mul(a, c)).collect();
        Poly {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![Elem::ZERO; k];
        out.extend_from_slice(&self.coeffs);
        Poly {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    pub fn try_add(&self, rhs: &Poly) -> Result<Poly> {
        self.same_ctx(rhs)?;
        Ok(self.add(rhs))
    }

    pub fn try_sub(&self, rhs: &Poly) -> Result<Poly> {
        self.same_ctx(rhs)?;
        Ok(self.sub(rhs))
    }

    pub fn try_mul(&self, rhs: &Poly) -> Result<Poly> {
        self.same_ctx(rhs)?;
        Ok(self.mul(rhs))
    }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_ctx(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let lead_inv = self.ctx.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let f = self.ctx.mul(c, lead_inv);
            quot[i - dd] = f;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = self.ctx.sub(rem[idx], self.ctx.mul(f, dj));
            }
        }
        rem.truncate(dd);
        Ok((
            Poly::from_elems(&self.ctx, quot),
            Poly::from_elems(&self.ctx, rem),
        ))
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn pow(&self, e: u64) -> Poly {
        let mut acc = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// f^(p^e) via the Frobenius: coefficients to the p^e and exponents
    /// spread by p^e. Much cheaper than repeated squaring.
    pub fn pow_p_power(&self, e: u32) -> Poly {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let p = self.ctx.p() as usize;
        let mut out = self.clone();
        for _ in 0..e {
            let mut next = vec![Elem::ZERO; (out.coeffs.len() - 1) * p + 1];
            for (i, &c) in out.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    next[i * p] = out.ctx.frobenius(c, 1);
                }
            }
            out = Poly::from_elems(&self.ctx, next);
        }
        out
    }

    pub fn eval(&self, a: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = self.ctx.add(self.ctx.mul(acc, a), c);
        }
        acc
    }

    /// Formal derivative; terms with exponent divisible by p vanish.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(self.ctx.mul(c, self.ctx.scalar(i as u64)));
        }
        Poly::from_elems(&self.ctx, out)
    }

    /// Monic gcd; errors when both inputs are zero.
    pub fn gcd(&self, rhs: &Poly) -> Result<Poly> {
        self.same_ctx(rhs)?;
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l == Elem::ONE => self.clone(),
            Some(l) => self.scale(self.ctx.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    /// f(g(x)), by Horner in the polynomial ring.
    pub fn compose(&self, g: &Poly) -> Poly {
        self.assert_ctx(g);
        let mut acc = Poly::zero(&self.ctx);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(g);
            acc = acc.add(&Poly::constant(&self.ctx, c));
        }
        acc
    }

    /// Exact p-th root when every exponent is divisible by p (F_q is perfect).
    pub fn pth_root(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let p = self.ctx.p() as usize;
        let mut out = vec![Elem::ZERO; (self.coeffs.len() - 1) / p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % p != 0 {
                return None;
            }
            out[i / p] = self.ctx.pth_root(c);
        }
        Some(Poly::from_elems(&self.ctx, out))
    }

    /// Squarefree decomposition of a nonzero polynomial: pairs of (monic
    /// squarefree factor, multiplicity), multiplicities strictly increasing.
    /// The leading coefficient is dropped.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, u64)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        sqfree_into(&self.monic(), 1, &mut out)?;
        out.sort_by_key(|&(_, m)| m);
        Ok(out)
    }

    /// Monic squarefree part: each distinct irreducible factor once.
    pub fn radical(&self) -> Result<Poly> {
        let parts = self.squarefree_decomposition()?;
        let mut out = Poly::one(&self.ctx);
        for (f, _) in parts {
            out = out.mul(&f);
        }
        Ok(out)
    }

    /// Is `self` of the form a * g(x)^r with a in F_q? True iff every
    /// multiplicity in the squarefree decomposition is divisible by r.
    pub fn is_unit_times_power(&self, r: u64) -> Result<bool> {
        Ok(self
            .squarefree_decomposition()?
            .iter()
            .all(|&(_, m)| m % r == 0))
    }

    /// Exact r-th root: some g with g^r = self, when one exists over F_q.
    pub fn exact_root(&self, r: u64) -> Option<Poly> {
        if r == 1 || self.is_zero() {
            return Some(self.clone());
        }
        let lead = self.leading().unwrap();
        let lead_root = self.ctx.rth_root(lead, r)?;
        let mut g = Poly::constant(&self.ctx, lead_root);
        for (f, m) in self.squarefree_decomposition().ok()? {
            if m % r != 0 {
                return None;
            }
            g = g.mul(&f.pow(m / r));
        }
        (g.pow(r) == *self).then_some(g)
    }
}

fn sqfree_into(f: &Poly, mult: u64, out: &mut Vec<(Poly, u64)>) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let d = f.derivative();
    if d.is_zero() {
        let root = f.pth_root().ok_or_else(|| {
            Error::InternalConsistency("zero derivative but no p-th root".into())
        })?;
        return sqfree_into(&root.monic(), mult * f.ctx().p(), out);
    }
    let g = f.gcd(&d)?;
    let mut w = f.div_exact(&g).expect("gcd divides f");
    let mut g = g;
    let mut i = 1u64;
    while !w.is_constant() {
        let y = w.gcd(&g)?;
        let z = w.div_exact(&y).expect("gcd divides w");
        if !z.is_constant() {
            out.push((z.monic(), mult * i));
        }
        g = g.div_exact(&y).expect("gcd divides g");
        w = y;
        i += 1;
    }
    if !g.is_constant() {
        let root = g
            .pth_root()
            .ok_or_else(|| Error::InternalConsistency("residual part is not a p-th power".into()))?;
        sqfree_into(&root.monic(), mult * f.ctx().p(), out)?;
    }
    Ok(())
}

/// x^q - x as a dense polynomial. Prefer the fast paths below for large q.
pub fn vanishing_poly(ctx: &FieldContext) -> Poly {
    let q = ctx.q() as usize;
    let mut coeffs = vec![Elem::ZERO; q + 1];
    coeffs[1] = ctx.neg(Elem::ONE);
    coeffs[q] = Elem::ONE;
    Poly::from_elems(ctx, coeffs)
}

/// (x^q - x) * f without materializing x^q - x.
pub fn times_vanishing(f: &Poly) -> Poly {
    let q = f.ctx().q() as usize;
    f.shift(q).sub(&f.shift(1))
}

/// x^e mod g by square-and-multiply; g must be nonconstant.
pub fn x_pow_mod(ctx: &FieldContext, e: u64, g: &Poly) -> Result<Poly> {
    if g.is_constant() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = Poly::one(ctx);
    let mut base = Poly::x(ctx).divrem(g)?.1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).divrem(g)?.1;
        }
        base = base.mul(&base).divrem(g)?.1;
        e >>= 1;
    }
    Ok(acc)
}

/// gcd(f, x^q - x) without materializing x^q - x.
pub fn gcd_with_vanishing(f: &Poly) -> Result<Poly> {
    let ctx = f.ctx();
    if f.is_constant() {
        // gcd(const, x^q - x) is 1 for nonzero constants, x^q - x for zero
        return if f.is_zero() {
            Ok(vanishing_poly(ctx).monic())
        } else {
            Ok(Poly::one(ctx))
        };
    }
    let xq = x_pow_mod(ctx, ctx.q(), f)?;
    let r = xq.sub(&Poly::x(ctx).divrem(f)?.1);
    f.gcd(&r)
}

/// Report of the degree inequality check for a + b = c with pairwise coprime
/// parts whose derivatives do not all vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasonStothersReport {
    pub holds: bool,
    pub lhs: u64,
    pub rhs: i64,
}

pub fn mason_stothers_check(a: &Poly, b: &Poly, c: &Poly) -> Result<MasonStothersReport> {
    a.same_ctx(b)?;
    a.same_ctx(c)?;
    if a.add(b) != *c {
        return Err(Error::SumMismatch);
    }
    if a.derivative().is_zero() && b.derivative().is_zero() && c.derivative().is_zero() {
        return Err(Error::AllDerivativesZero);
    }
    for (x, y) in [(a, b), (a, c), (b, c)] {
        if x.is_zero() || y.is_zero() || x.gcd(y)?.degree() != Some(0) {
            return Err(Error::CommonFactor);
        }
    }
    let lhs = [a, b, c]
        .iter()
        .map(|f| f.degree().unwrap() as u64)
        .max()
        .unwrap();
    let rad = a.mul(b).mul(c).radical()?;
    let rhs = rad.degree().unwrap() as i64 - 1;
    Ok(MasonStothersReport {
        holds: (lhs as i64) <= rhs,
        lhs,
        rhs,
    })
}

// --- text format -----------------------------------------------------------

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[e];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c == Elem::ONE, e) {
                (_, 0) => write!(f, "{}", c.code())?,
                (true, 1) => write!(f, "x")?,
                (true, _) => write!(f, "x^{e}")?,
                (false, 1) => write!(f, "{}*x", c.code())?,
                (false, _) => write!(f, "{}*x^{e}", c.code())?,
            }
        }
        Ok(())
    }
}

/// Largest exponent the parser accepts; dense storage above this would be
/// unreasonable.
const MAX_EXPONENT: u64 = 1 << 22;

struct Parser<'a> {
    ctx: &'a FieldContext,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .or_else(|_| self.err("number out of range"))
    }

    /// `x`, `x^e`, or nothing (exponent 0 handled by caller).
    fn x_part(&mut self) -> Result<u64> {
        self.pos += 1; // consume 'x'
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.number()?;
            if e > MAX_EXPONENT {
                return self.err(format!("exponent {e} too large"));
            }
            Ok(e)
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(Elem, u64)> {
        match self.peek() {
            Some(b'x') => Ok((Elem::ONE, self.x_part()?)),
            Some(b'g') => {
                self.pos += 1;
                let mut coef = self.ctx.generator();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    coef = self.ctx.pow(coef, self.number()?);
                }
                self.after_coefficient(coef)
            }
            Some(c) if c.is_ascii_digit() => {
                let code = self.number()?;
                let coef = self.ctx.elem(code).map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: format!("element code {code} out of range"),
                })?;
                self.after_coefficient(coef)
            }
            _ => self.err("expected a term"),
        }
    }

    fn after_coefficient(&mut self, coef: Elem) -> Result<(Elem, u64)> {
        if self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b'x') {
                return self.err("expected x after '*'");
            }
            Ok((coef, self.x_part()?))
        } else {
            Ok((coef, 0))
        }
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ctx);
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let (c, e) = self.term()?;
            let c = if negate { self.ctx.neg(c) } else { c };
            acc = acc.add(&Poly::monomial(self.ctx, c, e as usize));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                None => return Ok(acc),
                Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
            }
        }
    }
}

pub fn parse_poly(ctx: &FieldContext, s: &str) -> Result<Poly> {
    let mut p = Parser {
        ctx,
        bytes: s.as_bytes(),
        pos: 0,
    };
    p.poly()
}
