//! Generalized Reed-Solomon codes and the two Hermitian self-orthogonal
//! MDS families built from them: one over a union of multiplicative cosets,
//! one over a direct product of two cyclic subgroups. Both produce GRS
//! specs whose multipliers are norm roots of the classical u-values.

use alloc::format;
use alloc::string::String;

use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::{gram, Matrix};

/// A generalized Reed-Solomon code: k, distinct locators a, and nonzero
/// column multipliers v. The code it generates is always MDS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    field: Field,
    pub locators: Vec<FieldElement>,
    pub multipliers: Vec<FieldElement>,
    pub k: usize,
}

impl GrsSpec {
    pub fn new(
        field: Field,
        locators: Vec<FieldElement>,
        multipliers: Vec<FieldElement>,
        k: usize,
    ) -> Result<GrsSpec> {
        let n = locators.len();
        if n == 0 || n > field.q() as usize {
            return Err(Error::BadArgs(format!(
                "need 1 <= n <= q, got n = {n} over GF({})",
                field.q()
            )));
        }
        if multipliers.len() != n {
            return Err(Error::BadArgs(String::from(
                "locators and multipliers must have equal length",
            )));
        }
        if k < 1 || k > n {
            return Err(Error::BadArgs(format!("need 1 <= k <= n, got k = {k}")));
        }
        for i in 0..n {
            for j in i + 1..n {
                if locators[i] == locators[j] {
                    return Err(Error::DuplicateLocators);
                }
            }
        }
        if multipliers.iter().any(|&v| v == 0) {
            return Err(Error::ZeroMultiplier);
        }
        Ok(GrsSpec {
            field,
            locators,
            multipliers,
            k,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.locators.len()
    }

    /// The k x n generator with rows (v_j * a_j^r), r = 0..k-1.
    pub fn generator_matrix(&self) -> Matrix {
        let mut g = Matrix::zero(self.k, self.n());
        for (j, (&a, &v)) in self.locators.iter().zip(&self.multipliers).enumerate() {
            let mut power = 1u32;
            for r in 0..self.k {
                g.set(r, j, self.field.mul(v, power));
                power = self.field.mul(power, a);
            }
        }
        g
    }
}

/// The code generated by a GRS spec.
pub fn grs_generator(spec: &GrsSpec) -> Result<LinearCode> {
    LinearCode::new(spec.field.clone(), &spec.generator_matrix())
}

/// The classical interpolation constants u_i = prod_{j != i} (a_i - a_j)^-1.
pub fn u_vector(field: &Field, locators: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let n = locators.len();
    let mut u = Vec::with_capacity(n);
    for i in 0..n {
        let mut prod = 1u32;
        for j in 0..n {
            if i == j {
                continue;
            }
            let diff = field.sub(locators[i], locators[j]);
            if diff == 0 {
                return Err(Error::DuplicateLocators);
            }
            prod = field.mul(prod, diff);
        }
        u.push(field.inv(prod));
    }
    Ok(u)
}

fn poly_degree(coeffs: &[FieldElement]) -> Option<usize> {
    coeffs.iter().rposition(|&c| c != 0)
}

fn poly_eval(field: &Field, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    let mut acc = 0u32;
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

/// Decide whether the codeword (v_i * f(a_i)) lies in the Hermitian dual of
/// the GRS code: true iff lambda * u_i * h(a_i) = v_i^(sqrt(q)+1) at every
/// locator and deg(h) + sqrt(q) * deg(f) <= n - k - 1 (vacuous for f = 0).
pub fn hermitian_membership(
    spec: &GrsSpec,
    f: &[FieldElement],
    hpoly: &[FieldElement],
    lambda: FieldElement,
) -> Result<bool> {
    let field = &spec.field;
    if field.h() % 2 != 0 {
        return Err(Error::OddExtension(field.h()));
    }
    if lambda == 0 {
        return Err(Error::Zero);
    }
    let sq = field.sqrt_q().unwrap() as u64;
    let u = u_vector(field, &spec.locators)?;
    for i in 0..spec.n() {
        let lhs = field.mul(lambda, field.mul(u[i], poly_eval(field, hpoly, spec.locators[i])));
        let rhs = field.pow(spec.multipliers[i], sq + 1);
        if lhs != rhs {
            return Ok(false);
        }
    }
    match poly_degree(f) {
        None => Ok(true),
        Some(df) => {
            let dh = poly_degree(hpoly).unwrap_or(0) as u64;
            let bound = (spec.n() as i128) - (spec.k as i128) - 1;
            Ok(dh as i128 + sq as i128 * df as i128 <= bound)
        }
    }
}

// ---------------------------------------------------------------------------
// family 1: union of multiplicative cosets

/// Locator set assembled from t cosets of the order-n' subgroup, all inside
/// the subgroup generated by omega^((sqrt(q)+1)/n2).
#[derive(Clone, Debug)]
pub struct CosetFamily {
    pub field: Field,
    pub nprime: usize,
    pub t: usize,
    pub n1: usize,
    pub n2: usize,
    /// Representatives of the chosen cosets, in scan order.
    pub reps: Vec<FieldElement>,
}

impl CosetFamily {
    pub fn new(field: &Field, nprime: usize, t: usize) -> Result<CosetFamily> {
        if field.h() % 2 != 0 {
            return Err(Error::OddExtension(field.h()));
        }
        let q1 = field.q() as u64 - 1;
        if nprime == 0 || q1 % nprime as u64 != 0 {
            return Err(Error::BadDivisor { nprime });
        }
        let sq = field.sqrt_q().unwrap() as u64;
        let n2 = gcd_u64(nprime as u64, sq + 1) as usize;
        let n1 = nprime / n2;
        let tmax = (n2 as u64 * (sq - 1) / nprime as u64) as usize;
        if t == 0 || t > tmax {
            return Err(Error::TOutOfRange { t, max: tmax });
        }
        // Scan omega^(j*(sqrt(q)+1)/n2) in increasing j, keeping each value
        // that lies in a fresh coset of the order-n' subgroup.
        let step = (sq + 1) / n2 as u64;
        let mut reps: Vec<FieldElement> = Vec::with_capacity(t);
        let mut j = 0u64;
        let scan_limit = n2 as u64 * (sq - 1);
        while reps.len() < t && j < scan_limit {
            let cand = field.w(j * step);
            let fresh = reps
                .iter()
                .all(|&r| field.pow(field.div(cand, r), nprime as u64) != 1);
            if fresh {
                reps.push(cand);
            }
            j += 1;
        }
        if reps.len() < t {
            return Err(Error::CosetOverlap);
        }
        let family = CosetFamily {
            field: field.clone(),
            nprime,
            t,
            n1,
            n2,
            reps,
        };
        // The union must be disjoint; a repeat means the coset scan is broken.
        let locs = family.locators();
        for i in 0..locs.len() {
            for j in i + 1..locs.len() {
                if locs[i] == locs[j] {
                    return Err(Error::CosetOverlap);
                }
            }
        }
        Ok(family)
    }

    /// All n = t * n' locators: coset by coset, each coset listed as
    /// rep * theta^l with theta the fixed order-n' generator.
    pub fn locators(&self) -> Vec<FieldElement> {
        let q1 = self.field.q() as u64 - 1;
        let theta = self.field.w(q1 / self.nprime as u64);
        let mut out = Vec::with_capacity(self.t * self.nprime);
        for &rep in &self.reps {
            let mut cur = rep;
            for _ in 0..self.nprime {
                out.push(cur);
                cur = self.field.mul(cur, theta);
            }
        }
        out
    }

    /// Closed form for the u-values over the coset union:
    /// u_i = n'^-1 * a_i * rep_b^-n' * prod_{s != b} (rep_b^n' - rep_s^n')^-1
    /// with b the coset index of locator i.
    pub fn u_closed_form(&self) -> Vec<FieldElement> {
        let f = &self.field;
        let np = self.nprime as u64;
        let inv_np = f.inv((np % f.p() as u64) as u32);
        let rep_pows: Vec<FieldElement> =
            self.reps.iter().map(|&r| f.pow(r, np)).collect();
        let locs = self.locators();
        let mut out = Vec::with_capacity(locs.len());
        for (i, &a) in locs.iter().enumerate() {
            let b = i / self.nprime;
            let mut prod = 1u32;
            for s in 0..self.t {
                if s == b {
                    continue;
                }
                prod = f.mul(prod, f.sub(rep_pows[b], rep_pows[s]));
            }
            let val = f.mul(
                f.mul(inv_np, a),
                f.mul(f.inv(rep_pows[b]), f.inv(prod)),
            );
            out.push(val);
        }
        out
    }

    /// Largest dimension the family supports for this (n', t).
    pub fn kmax(&self) -> usize {
        let sq = self.field.sqrt_q().unwrap() as u64;
        ((sq + self.nprime as u64 * (self.t as u64 - 1)) / (sq + 1)) as usize
    }
}

/// Build the Hermitian self-orthogonal MDS GRS spec over a coset-union
/// locator set: multipliers solve v^(sqrt(q)+1) = u_i * a_i^(n'-1).
pub fn hso_mds_coset(field: &Field, nprime: usize, t: usize, k: usize) -> Result<GrsSpec> {
    let family = CosetFamily::new(field, nprime, t)?;
    let kmax = family.kmax();
    if k == 0 || k > kmax {
        return Err(Error::KOutOfRange { k, max: kmax });
    }
    let locators = family.locators();
    let u = u_vector(field, &locators)?;
    debug_assert_eq!(u, family.u_closed_form());
    let mut v = Vec::with_capacity(locators.len());
    for (i, &a) in locators.iter().enumerate() {
        let target = field.mul(u[i], field.pow(a, family.nprime as u64 - 1));
        v.push(field.norm_root(target)?);
    }
    let spec = GrsSpec::new(field.clone(), locators, v, k)?;
    debug_assert!(gram(field, &spec.generator_matrix(), field.h() / 2)
        .unwrap()
        .is_zero());
    Ok(spec)
}

// ---------------------------------------------------------------------------
// family 2: direct product of two cyclic subgroups

/// Locator set beta1^i * <beta2>, i = 1..n1, where beta1 = omega^x1 and
/// beta2 = omega^x2. Requires odd q with (q-1) | lcm(x1, x2) and
/// gcd(x2, q-1) | x1 * (sqrt(q) - 1).
#[derive(Clone, Debug)]
pub struct ProductFamily {
    pub field: Field,
    pub x1: u64,
    pub x2: u64,
    pub n1: usize,
    pub n2: usize,
    pub beta1: FieldElement,
    pub beta2: FieldElement,
}

impl ProductFamily {
    pub fn new(field: &Field, x1: u64, x2: u64, n1: usize) -> Result<ProductFamily> {
        if field.h() % 2 != 0 {
            return Err(Error::OddExtension(field.h()));
        }
        if field.p() == 2 {
            return Err(Error::ConditionViolated(String::from(
                "the product family requires odd q",
            )));
        }
        if x1 == 0 || x2 == 0 {
            return Err(Error::ConditionViolated(String::from(
                "x1 and x2 must be positive",
            )));
        }
        let q1 = field.q() as u64 - 1;
        let sq = field.sqrt_q().unwrap() as u64;
        let l = lcm_u64(x1, x2);
        if l % q1 != 0 {
            return Err(Error::ConditionViolated(format!(
                "(q-1) = {q1} must divide lcm(x1, x2) = {l}"
            )));
        }
        let g2 = gcd_u64(x2, q1);
        if (x1 * (sq - 1)) % g2 != 0 {
            return Err(Error::ConditionViolated(format!(
                "gcd(x2, q-1) = {g2} must divide x1*(sqrt(q)-1) = {}",
                x1 * (sq - 1)
            )));
        }
        let n2 = (q1 / g2) as usize;
        let ord1 = (q1 / gcd_u64(x1, q1)) as usize;
        if n1 == 0 || n1 > ord1 {
            return Err(Error::ConditionViolated(format!(
                "need 1 <= n1 <= ord(beta1) = {ord1}, got {n1}"
            )));
        }
        let family = ProductFamily {
            field: field.clone(),
            x1,
            x2,
            n1,
            n2,
            beta1: field.w(x1),
            beta2: field.w(x2),
        };
        let locs = family.locators();
        for i in 0..locs.len() {
            for j in i + 1..locs.len() {
                if locs[i] == locs[j] {
                    return Err(Error::Overlap);
                }
            }
        }
        Ok(family)
    }

    /// All n = n1 * n2 locators: beta1^i * beta2^j for i = 1..n1 (outer)
    /// and j = 1..n2 (inner).
    pub fn locators(&self) -> Vec<FieldElement> {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.n1 * self.n2);
        let mut b1 = self.beta1;
        for _ in 1..=self.n1 {
            let mut cur = f.mul(b1, self.beta2);
            for _ in 1..=self.n2 {
                out.push(cur);
                cur = f.mul(cur, self.beta2);
            }
            b1 = f.mul(b1, self.beta1);
        }
        out
    }

    /// Closed form for the u-values over the product set:
    /// u_i = a_i * beta1^(-s*n2) * n2^-1 * prod_{s' != s}
    ///       (beta1^(s*n2) - beta1^(s'*n2))^-1, s the outer index (1-based).
    pub fn u_closed_form(&self) -> Vec<FieldElement> {
        let f = &self.field;
        let n2 = self.n2 as u64;
        let inv_n2 = f.inv((n2 % f.p() as u64) as u32);
        let b1_pows: Vec<FieldElement> = (1..=self.n1 as u64)
            .map(|s| f.pow(self.beta1, s * n2))
            .collect();
        let locs = self.locators();
        let mut out = Vec::with_capacity(locs.len());
        for (i, &a) in locs.iter().enumerate() {
            let s = i / self.n2; // 0-based outer index
            let mut prod = 1u32;
            for sp in 0..self.n1 {
                if sp == s {
                    continue;
                }
                prod = f.mul(prod, f.sub(b1_pows[s], b1_pows[sp]));
            }
            let val = f.mul(
                f.mul(a, f.inv(b1_pows[s])),
                f.mul(inv_n2, f.inv(prod)),
            );
            out.push(val);
        }
        out
    }

    pub fn kmax(&self) -> usize {
        let sq = self.field.sqrt_q().unwrap() as u64;
        ((sq + self.n2 as u64 * (self.n1 as u64 - 1)) / (sq + 1)) as usize
    }
}

/// Build the Hermitian self-orthogonal MDS GRS spec over a product locator
/// set: multipliers solve v^(sqrt(q)+1) = u_i * a_i^(n2-1).
pub fn hso_mds_product(
    field: &Field,
    x1: u64,
    x2: u64,
    n1: usize,
    k: usize,
) -> Result<GrsSpec> {
    let family = ProductFamily::new(field, x1, x2, n1)?;
    let kmax = family.kmax();
    if k == 0 || k > kmax {
        return Err(Error::KOutOfRange { k, max: kmax });
    }
    let locators = family.locators();
    let u = u_vector(field, &locators)?;
    debug_assert_eq!(u, family.u_closed_form());
    let mut v = Vec::with_capacity(locators.len());
    for (i, &a) in locators.iter().enumerate() {
        let target = field.mul(u[i], field.pow(a, family.n2 as u64 - 1));
        v.push(field.norm_root(target)?);
    }
    let spec = GrsSpec::new(field.clone(), locators, v, k)?;
    debug_assert!(gram(field, &spec.generator_matrix(), field.h() / 2)
        .unwrap()
        .is_zero());
    Ok(spec)
}

/// Append the single column (0, ..., 0, gamma) to a self-orthogonal GRS
/// code: the result is an [n+1, k, d+1] MDS code with hull dimension k-1.
pub fn extend_grs_one(spec: &GrsSpec, e: u32, gamma: FieldElement) -> Result<LinearCode> {
    let field = &spec.field;
    if e >= field.h() {
        return Err(Error::EOutOfRange { e, max: field.h() - 1 });
    }
    if gamma == 0 {
        return Err(Error::Zero);
    }
    let g = spec.generator_matrix();
    if !gram(field, &g, e)?.is_zero() {
        return Err(Error::NotSelfOrthogonal);
    }
    let mut col = Matrix::zero(spec.k, 1);
    col.set(spec.k - 1, 0, gamma);
    let extended = g.hstack(&col);
    let out = LinearCode::new(field.clone(), &extended)?;
    debug_assert_eq!(out.hull_dimension(e).unwrap(), spec.k - 1);
    Ok(out)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}
