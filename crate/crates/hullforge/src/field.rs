//! Construction of GF(p^h) with a fixed modulus polynomial, plus all
//! element-level arithmetic: Frobenius powers, discrete logs, norm-equation
//! solving, and the number-theoretic helpers used by the constructions.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// One residue of GF(p^h), canonically encoded as an integer in [0, q):
/// the base-p digits of the value (little-endian) are the coefficients of
/// the residue polynomial in the root of the modulus.
pub type FieldElement = u32;

/// Discrete-log tables are built only up to this field size; larger fields
/// fall back to polynomial arithmetic and square-and-multiply.
pub const LOG_TABLE_LIMIT: u64 = 1 << 20;

struct FieldInner {
    p: u32,
    h: u32,
    q: u32,
    /// Monic modulus, little-endian coefficients, length h+1.
    modulus: Vec<u32>,
    /// The class of x (h >= 2) or the root of the linear modulus (h = 1);
    /// primitive by construction.
    omega: FieldElement,
    /// `log[a]` = discrete log of a base omega (a != 0); empty when untabled.
    log: Vec<u32>,
    /// `antilog[j]` = omega^j for 0 <= j < q-1; empty when untabled.
    antilog: Vec<u32>,
}

/// A concrete GF(p^h). Cheap to clone (internally shared), immutable after
/// construction, and safe to use from concurrent tasks.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.h == other.0.h && self.0.modulus == other.0.modulus
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {})", self.0.p, self.0.h, self.modulus_string())
    }
}

// ---------------------------------------------------------------------------
// number-theoretic helpers

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of n.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd on signed 128-bit integers: returns (g, x, y) with
/// a*x + b*y = g.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

// ---------------------------------------------------------------------------
// polynomial arithmetic over GF(p) (little-endian coefficient slices)

fn ptrim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pmul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
    ptrim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial m.
fn pmod(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    ptrim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = i + shift;
                let sub = (lead as u64 * mi as u64) % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
        ptrim(&mut r);
    }
    r
}

/// x^exp mod m over GF(p), by square and multiply.
fn ppow_x_mod(p: u32, mut exp: u64, m: &[u32]) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut base = pmod(p, &[0, 1], m);
    while exp > 0 {
        if exp & 1 == 1 {
            result = pmod(p, &pmul(p, &result, &base), m);
        }
        base = pmod(p, &pmul(p, &base, &base), m);
        exp >>= 1;
    }
    result
}

fn pgcd(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        // Make b monic before reducing so pmod's monic requirement holds.
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = mod_inv_prime(p, lead);
            for c in b.iter_mut() {
                *c = ((*c as u64 * inv as u64) % p as u64) as u32;
            }
        }
        let r = pmod(p, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn mod_inv_prime(p: u32, a: u32) -> u32 {
    // Fermat inverse in the prime field.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// Rabin irreducibility test for a monic polynomial of degree h over GF(p).
fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let h = (m.len() - 1) as u32;
    if h == 1 {
        return true;
    }
    // x^(p^h) == x mod m
    let ph = (p as u64).pow(h);
    let xq = ppow_x_mod(p, ph, m);
    let x = pmod(p, &[0, 1], m);
    if xq != x {
        return false;
    }
    // gcd(x^(p^(h/r)) - x, m) must be 1 for every prime r | h.
    for r in prime_factors(h as u64) {
        let e = (p as u64).pow(h / r as u32);
        let mut diff = ppow_x_mod(p, e, m);
        // diff -= x
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(&mut diff);
        let g = pgcd(p, &diff, m);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// field construction

impl Field {
    /// Build GF(p^h). With no modulus, the monic irreducible polynomial of
    /// degree h whose root is primitive and whose integer encoding is
    /// smallest is selected, making every downstream result reproducible.
    /// An explicit modulus (little-endian coefficients, length h+1, monic)
    /// is validated for irreducibility and primitivity of its root.
    pub fn new(p: u32, h: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if h < 1 {
            return Err(Error::BadArgs(String::from("h must be >= 1")));
        }
        let q = (p as u64)
            .checked_pow(h)
            .filter(|&q| q <= (1 << 31))
            .ok_or_else(|| Error::BadArgs(String::from("p^h too large (limit 2^31)")))?;

        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != h as usize + 1 || m[h as usize] != 1 {
                    return Err(Error::BadArgs(String::from(
                        "modulus must be monic of degree h (little-endian, length h+1)",
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::BadArgs(String::from("modulus coefficients must lie in [0, p)")));
                }
                if !is_irreducible(p, m) {
                    return Err(Error::Reducible);
                }
                if !root_is_primitive(p, h, q, m) {
                    return Err(Error::NotPrimitive);
                }
                m.to_vec()
            }
            None => default_modulus(p, h, q)?,
        };

        let omega = if h == 1 {
            (p - modulus[0] % p) % p
        } else {
            p // digits (0, 1, 0, ...): the class of x
        };

        let mut inner = FieldInner {
            p,
            h,
            q: q as u32,
            modulus,
            omega,
            log: Vec::new(),
            antilog: Vec::new(),
        };
        if q <= LOG_TABLE_LIMIT {
            build_tables(&mut inner)?;
        }
        Ok(Field(Arc::new(inner)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn h(&self) -> u32 {
        self.0.h
    }
    pub fn q(&self) -> u32 {
        self.0.q
    }
    /// Little-endian coefficients of the monic modulus, length h+1.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }
    /// The fixed primitive element: the class of x (or the root of the
    /// linear modulus when h = 1).
    pub fn omega(&self) -> FieldElement {
        self.0.omega
    }
    pub fn has_tables(&self) -> bool {
        !self.0.antilog.is_empty()
    }
    /// sqrt(q) when h is even.
    pub fn sqrt_q(&self) -> Option<u32> {
        if self.0.h % 2 == 0 {
            Some((self.0.p as u64).pow(self.0.h / 2) as u32)
        } else {
            None
        }
    }

    /// Integer encoding of the modulus: coefficient digits base p, leading
    /// term included (so GF(9) with x^2+x+2 encodes as 2 + 1*3 + 1*9 = 14).
    pub fn modulus_encoding(&self) -> u64 {
        let p = self.0.p as u64;
        let mut enc = 0u64;
        let mut pw = 1u64;
        for &c in &self.0.modulus {
            enc += c as u64 * pw;
            pw *= p;
        }
        enc
    }

    /// Human-readable modulus, e.g. "x^2 + 2x + 2".
    pub fn modulus_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.0.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => String::from("x"),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" + ")
        }
    }

    // -- digit helpers -----------------------------------------------------

    fn digits(&self, x: FieldElement) -> Vec<u32> {
        let p = self.0.p;
        let mut v = x;
        let mut out = Vec::with_capacity(self.0.h as usize);
        for _ in 0..self.0.h {
            out.push(v % p);
            v /= p;
        }
        out
    }

    fn from_digits(&self, d: &[u32]) -> FieldElement {
        let p = self.0.p as u64;
        let mut acc = 0u64;
        for &c in d.iter().rev() {
            acc = acc * p + c as u64;
        }
        acc as u32
    }

    // -- arithmetic --------------------------------------------------------

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        let mut res = 0u64;
        let mut pw = 1u64;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.0.h {
            let s = (a % p + b % p) % p;
            res += s as u64 * pw;
            pw *= p as u64;
            a /= p;
            b /= p;
        }
        res as u32
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        let mut res = 0u64;
        let mut pw = 1u64;
        let mut a = a;
        for _ in 0..self.0.h {
            let s = (p - a % p) % p;
            res += s as u64 * pw;
            pw *= p as u64;
            a /= p;
        }
        res as u32
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Product in the polynomial basis (used to build tables and as the
    /// fallback when no tables exist).
    fn mul_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = pmul(self.0.p, &self.digits(a), &self.digits(b));
        let red = pmod(self.0.p, &prod, &self.0.modulus);
        self.from_digits(&red)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.has_tables() {
            let n = self.0.q as u64 - 1;
            let j = (self.0.log[a as usize] as u64 + self.0.log[b as usize] as u64) % n;
            self.0.antilog[j as usize]
        } else {
            self.mul_raw(a, b)
        }
    }

    /// Multiplicative inverse. Panics on zero (division by zero is a caller
    /// bug, mirroring integer division).
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a != 0, "inverse of zero");
        if self.has_tables() {
            let n = self.0.q as u64 - 1;
            let j = (n - self.0.log[a as usize] as u64) % n;
            self.0.antilog[j as usize]
        } else {
            self.pow(a, self.0.q as u64 - 2)
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, exp: u64) -> FieldElement {
        if a == 0 {
            return if exp == 0 { 1 } else { 0 };
        }
        let n = self.0.q as u64 - 1;
        let e = exp % n;
        if self.has_tables() {
            let j = self.0.log[a as usize] as u64 * e % n;
            return self.0.antilog[j as usize];
        }
        let mut result = 1u32;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_raw(result, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        result
    }

    /// sigma^e(x) = x^(p^e), the e-th Frobenius power. e = h is allowed and
    /// acts as the identity.
    pub fn frob(&self, x: FieldElement, e: u32) -> Result<FieldElement> {
        if e > self.0.h {
            return Err(Error::EOutOfRange { e, max: self.0.h });
        }
        Ok(self.pow(x, (self.0.p as u64).pow(e)))
    }

    /// Discrete log base omega. Panics on zero.
    pub fn log(&self, x: FieldElement) -> u32 {
        assert!(x != 0, "log of zero");
        if self.has_tables() {
            return self.0.log[x as usize];
        }
        // Linear scan fallback for untabled fields: exact but O(q).
        let mut acc = 1u32;
        for j in 0..self.0.q - 1 {
            if acc == x {
                return j;
            }
            acc = self.mul_raw(acc, self.0.omega);
        }
        unreachable!("omega is primitive, every nonzero element has a log")
    }

    /// omega^j (j arbitrary; reduced mod q-1).
    pub fn w(&self, j: u64) -> FieldElement {
        self.pow(self.0.omega, j)
    }

    /// Deterministic solution v of v^(sqrt(q)+1) = x for x in the subfield
    /// GF(sqrt(q))*: v = omega^t with the smallest nonnegative t solving
    /// t*(sqrt(q)+1) = log(x) mod (q-1).
    pub fn norm_root(&self, x: FieldElement) -> Result<FieldElement> {
        if self.0.h % 2 != 0 {
            return Err(Error::OddExtension(self.0.h));
        }
        if x == 0 {
            return Err(Error::Zero);
        }
        let sq = self.sqrt_q().unwrap() as u64;
        if self.pow(x, sq - 1) != 1 {
            return Err(Error::NotInSubfield(x));
        }
        // x in GF(sqrt(q))* means (sq+1) | log(x); the smallest t is the
        // exact quotient.
        let lx = self.log(x) as u64;
        debug_assert_eq!(lx % (sq + 1), 0);
        let t = lx / (sq + 1);
        Ok(self.w(t))
    }

    // -- literals ----------------------------------------------------------

    /// Parse an element literal: `0`, a decimal encoding in [0, q), `w`,
    /// `w^j`, or the compact `wj`. Exponents are reduced mod q-1.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::BadArgs(String::from("empty element literal")));
        }
        if let Some(rest) = s.strip_prefix('w') {
            let rest = rest.strip_prefix('^').unwrap_or(rest);
            if rest.is_empty() {
                return Ok(self.0.omega);
            }
            let j: u64 = rest
                .parse()
                .map_err(|_| Error::BadArgs(format!("bad exponent in element literal '{s}'")))?;
            return Ok(self.w(j));
        }
        let v: u64 = s
            .parse()
            .map_err(|_| Error::BadArgs(format!("bad element literal '{s}'")))?;
        if v >= self.0.q as u64 {
            return Err(Error::BadArgs(format!(
                "element {v} out of range for GF({})",
                self.0.q
            )));
        }
        Ok(v as u32)
    }

    /// Canonical literal: `0` for zero, the decimal encoding for prime-field
    /// elements (value < p), otherwise `w^j` (just `w` when j = 1).
    pub fn format(&self, x: FieldElement) -> String {
        if x == 0 {
            return String::from("0");
        }
        if x < self.0.p {
            return format!("{x}");
        }
        let j = self.log(x);
        if j == 1 {
            String::from("w")
        } else {
            format!("w^{j}")
        }
    }
}

fn root_is_primitive(p: u32, h: u32, q: u64, m: &[u32]) -> bool {
    if m[0] == 0 {
        return false; // root would be zero
    }
    let n = q - 1;
    if h == 1 {
        let root = (p - m[0] % p) % p;
        if root == 0 {
            return false;
        }
        return prime_factors(n).into_iter().all(|r| {
            // root^(n/r) mod p != 1
            let mut acc = 1u64;
            let mut base = root as u64;
            let mut e = n / r;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % p as u64;
                }
                base = base * base % p as u64;
                e >>= 1;
            }
            acc != 1
        });
    }
    prime_factors(n).into_iter().all(|r| {
        let pw = ppow_x_mod(p, n / r, m);
        pw != vec![1u32]
    })
}

fn default_modulus(p: u32, h: u32, q: u64) -> Result<Vec<u32>> {
    // Scan monic degree-h polynomials in increasing integer encoding; the
    // first irreducible one with a primitive root wins.
    let mut low = vec![0u32; h as usize];
    loop {
        let mut m = low.clone();
        m.push(1);
        if is_irreducible(p, &m) && root_is_primitive(p, h, q, &m) {
            return Ok(m);
        }
        // increment the low-coefficient odometer
        let mut i = 0;
        loop {
            if i == low.len() {
                return Err(Error::BadArgs(String::from(
                    "no primitive irreducible modulus found (unreachable for prime p)",
                )));
            }
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
        }
    }
}

fn build_tables(inner: &mut FieldInner) -> Result<()> {
    let q = inner.q as usize;
    let mut antilog = Vec::with_capacity(q - 1);
    let mut log = vec![u32::MAX; q];
    // temporary Field-free raw multiply
    let mul_raw = |a: u32, b: u32| -> u32 {
        let digits = |mut x: u32| -> Vec<u32> {
            let mut out = Vec::with_capacity(inner.h as usize);
            for _ in 0..inner.h {
                out.push(x % inner.p);
                x /= inner.p;
            }
            out
        };
        let prod = pmul(inner.p, &digits(a), &digits(b));
        let red = pmod(inner.p, &prod, &inner.modulus);
        let mut acc = 0u64;
        for &c in red.iter().rev() {
            acc = acc * inner.p as u64 + c as u64;
        }
        acc as u32
    };
    let mut acc = 1u32;
    for j in 0..q - 1 {
        if log[acc as usize] != u32::MAX {
            return Err(Error::NotPrimitive);
        }
        log[acc as usize] = j as u32;
        antilog.push(acc);
        acc = mul_raw(acc, inner.omega);
    }
    if acc != 1 {
        return Err(Error::NotPrimitive);
    }
    inner.log = log;
    inner.antilog = antilog;
    Ok(())
}

// ---------------------------------------------------------------------------
// number-theoretic operations used by the extension machinery

/// Closed form for gcd(p^r + 1, p^s - 1) with g = gcd(r, s):
/// 1 when s/g is odd and p is even; 2 when s/g is odd and p is odd;
/// p^g + 1 when s/g is even. The value is cross-checked against the direct
/// Euclidean gcd; a mismatch is a library defect and panics.
pub fn galois_gcd_formula(p: u64, r: u32, s: u32) -> Result<u64> {
    if s < 1 || p < 2 {
        return Err(Error::BadArgs(String::from("need s >= 1 and p > 1")));
    }
    let g = if r == 0 { s as u64 } else { gcd_u64(r as u64, s as u64) };
    let value = if (s as u64 / g) % 2 == 1 {
        if p % 2 == 0 {
            1
        } else {
            2
        }
    } else {
        p.checked_pow(g as u32)
            .and_then(|x| x.checked_add(1))
            .ok_or_else(|| Error::BadArgs(String::from("p^gcd(r,s) overflows")))?
    };
    // Exact cross-check whenever the powers fit in u128.
    if let (Some(pr), Some(ps)) = (
        (p as u128).checked_pow(r),
        (p as u128).checked_pow(s),
    ) {
        let mut a = pr + 1;
        let mut b = ps - 1;
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        assert_eq!(
            a, value as u128,
            "closed-form gcd disagrees with Euclid for p={p}, r={r}, s={s}"
        );
    }
    Ok(value)
}

/// Smallest nonnegative t with t*(p^e + 1) = (q-1)/2 mod (q-1), i.e.
/// omega^(t*(p^e+1)) = -1. Exists iff gcd(p^e+1, q-1) divides (q-1)/2;
/// returns None otherwise. Odd characteristic only.
pub fn solve_t0(field: &Field, e: u32) -> Result<Option<u64>> {
    if field.p() % 2 == 0 {
        return Err(Error::EvenCharacteristic);
    }
    if e >= field.h() {
        return Err(Error::EOutOfRange { e, max: field.h() - 1 });
    }
    let n = field.q() as u64 - 1;
    let a = (field.p() as u64).pow(e) + 1;
    let target = n / 2;
    let g = gcd_u64(a, n);
    if target % g != 0 {
        return Ok(None);
    }
    let (gg, x, _) = ext_gcd(a as i128, n as i128);
    debug_assert_eq!(gg as u64, g);
    let step = (n / g) as i128;
    let t = ((target / g) as i128 * x).rem_euclid(step);
    debug_assert_eq!((t as u64 * a) % n, target % n);
    Ok(Some(t as u64))
}
