//! Length extensions of Galois self-orthogonal codes: existence conditions
//! and search for the column constants, the i-column extension that keeps a
//! code self-orthogonal, the one-column extension with a prescribed hull
//! dimension, and hull-dimension reduction by diagonal column scaling.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{solve_t0, Field, FieldElement};
use crate::matrix::Matrix;

/// Default number of candidate tuples the exhaustive search will examine.
pub const ALPHA_SEARCH_BUDGET: u64 = 1_000_000;

/// Column constants for the self-orthogonality-preserving extension: all
/// nonzero, with the (p^e+1)-th powers summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTuple {
    pub e: u32,
    pub values: Vec<FieldElement>,
}

impl AlphaTuple {
    /// Validate and build a tuple. The empty tuple is legal (it drives the
    /// trivial zero-column extension).
    pub fn new(field: &Field, e: u32, values: Vec<FieldElement>) -> Result<AlphaTuple> {
        check_e(field, e)?;
        let tuple = AlphaTuple { e, values };
        tuple.validate(field)?;
        Ok(tuple)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn validate(&self, field: &Field) -> Result<()> {
        let a = power_exponent(field, self.e);
        let mut sum = 0u32;
        for &v in &self.values {
            if v == 0 {
                return Err(Error::BadAlphaTuple);
            }
            sum = field.add(sum, field.pow(v, a));
        }
        if sum != 0 {
            return Err(Error::BadAlphaTuple);
        }
        Ok(())
    }
}

/// Which of the three sufficient existence conditions for a column-constant
/// pair applies, in the order they are tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaCase {
    /// Even characteristic: x + x = 0 makes (1, 1) work.
    PEven,
    /// Odd p, h/gcd(e,h) odd, (q-1)/2 even.
    OddCase2,
    /// Odd p, h/gcd(e,h) even, (p^gcd(e,h)+1) divides (q-1)/2.
    OddCase3,
    /// No condition holds; no pair construction is guaranteed.
    None,
}

/// Full existence report for one (field, e): the matching case, the
/// congruence solution t0 when the characteristic is odd, and a
/// power-sum-zero triple when one exists within the search budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub case: AlphaCase,
    pub t0: Option<u64>,
    pub triple: Option<[FieldElement; 3]>,
}

fn check_e(field: &Field, e: u32) -> Result<()> {
    if e >= field.h() {
        return Err(Error::EOutOfRange { e, max: field.h() - 1 });
    }
    Ok(())
}

/// p^e + 1, the exponent whose power sums govern every construction here.
fn power_exponent(field: &Field, e: u32) -> u64 {
    (field.p() as u64).pow(e) + 1
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Determine which sufficient condition (if any) guarantees a pair, solve
/// the sign congruence for odd characteristic, and search for a triple.
pub fn alpha_conditions(field: &Field, e: u32) -> Result<ConditionReport> {
    check_e(field, e)?;
    let p = field.p();
    let h = field.h();
    let g = if e == 0 { h } else { gcd_u32(e, h) };
    let case = if p % 2 == 0 {
        AlphaCase::PEven
    } else {
        let half = (field.q() as u64 - 1) / 2;
        let tower_odd = (h / g) % 2 == 1;
        let pg1 = (p as u64).pow(g) + 1;
        if tower_odd && half % 2 == 0 {
            AlphaCase::OddCase2
        } else if !tower_odd && half % pg1 == 0 {
            AlphaCase::OddCase3
        } else {
            AlphaCase::None
        }
    };
    let t0 = if p % 2 == 1 { solve_t0(field, e)? } else { None };
    let triple = search_tuple(field, e, 3, ALPHA_SEARCH_BUDGET)
        .map(|v| [v.values[0], v.values[1], v.values[2]]);
    // A matching case must come with a constructible pair.
    debug_assert!(
        case == AlphaCase::None || closed_form_pair(field, e)?.is_some(),
        "existence case claims a pair that the closed form cannot build"
    );
    Ok(ConditionReport { case, t0, triple })
}

/// The closed-form pair: (1, 1) in even characteristic, (omega^t0, 1) in
/// odd characteristic when the sign congruence is solvable; None otherwise.
pub fn closed_form_pair(field: &Field, e: u32) -> Result<Option<(FieldElement, FieldElement)>> {
    check_e(field, e)?;
    if field.p() % 2 == 0 {
        return Ok(Some((1, 1)));
    }
    Ok(solve_t0(field, e)?.map(|t| (field.w(t), 1)))
}

/// Exhaustive lexicographic search over omega-exponent tuples (last index
/// fastest) for i nonzero values whose (p^e+1)-th powers sum to zero.
/// Examines at most `budget` candidates.
fn search_tuple(field: &Field, e: u32, i: usize, budget: u64) -> Option<AlphaTuple> {
    let a = power_exponent(field, e);
    let m = (field.q() - 1) as usize;
    // power_of[j] = (omega^j)^(p^e+1)
    let power_of: Vec<FieldElement> = (0..m).map(|j| field.w(j as u64 * a)).collect();
    let mut exps = vec![0usize; i];
    let mut examined = 0u64;
    loop {
        examined += 1;
        if examined > budget {
            return None;
        }
        let mut sum = 0u32;
        for &j in &exps {
            sum = field.add(sum, power_of[j]);
        }
        if sum == 0 {
            let values = exps.iter().map(|&j| field.w(j as u64)).collect();
            return Some(AlphaTuple { e, values });
        }
        // advance the odometer, last position fastest
        let mut pos = i;
        loop {
            if pos == 0 {
                return None; // exhausted the whole space
            }
            pos -= 1;
            exps[pos] += 1;
            if exps[pos] < m {
                break;
            }
            exps[pos] = 0;
        }
    }
}

/// Find i column constants with zero power sum, preferring the closed-form
/// constructions (pair repetitions for even i, a triple plus pairs for odd
/// i) and falling back to bounded exhaustive search. None when nothing is
/// found within the budget.
pub fn find_alpha_tuple(field: &Field, e: u32, i: usize) -> Result<Option<AlphaTuple>> {
    find_alpha_tuple_with_budget(field, e, i, ALPHA_SEARCH_BUDGET)
}

pub fn find_alpha_tuple_with_budget(
    field: &Field,
    e: u32,
    i: usize,
    budget: u64,
) -> Result<Option<AlphaTuple>> {
    check_e(field, e)?;
    if i < 2 {
        return Err(Error::BadLength(i));
    }
    let pair = closed_form_pair(field, e)?;
    if i % 2 == 0 {
        if let Some((a1, a2)) = pair {
            let mut values = Vec::with_capacity(i);
            for _ in 0..i / 2 {
                values.push(a1);
                values.push(a2);
            }
            let tuple = AlphaTuple { e, values };
            debug_assert!(tuple.validate(field).is_ok());
            return Ok(Some(tuple));
        }
        return Ok(search_tuple(field, e, i, budget));
    }
    // odd i: a triple plus (i-3)/2 pairs
    if let Some(triple) = search_tuple(field, e, 3, budget) {
        if i == 3 {
            return Ok(Some(triple));
        }
        if let Some((a1, a2)) = pair {
            let mut values = triple.values;
            for _ in 0..(i - 3) / 2 {
                values.push(a1);
                values.push(a2);
            }
            let tuple = AlphaTuple { e, values };
            debug_assert!(tuple.validate(field).is_ok());
            return Ok(Some(tuple));
        }
    }
    Ok(search_tuple(field, e, i, budget))
}

fn require_self_orthogonal(code: &LinearCode, e: u32) -> Result<()> {
    if !code.gram(e)?.is_zero() {
        return Err(Error::NotSelfOrthogonal);
    }
    Ok(())
}

/// Append i constant columns to a self-orthogonal code in standard form,
/// scaling the identity block by beta: the result is an [n+i, k] code that
/// is again self-orthogonal for the same twist. i = 1 never preserves
/// self-orthogonality and is rejected; i = 0 (empty tuple) is the identity
/// extension.
pub fn extend_self_orthogonal(
    code: &LinearCode,
    e: u32,
    alphas: &AlphaTuple,
    beta: FieldElement,
) -> Result<LinearCode> {
    let field = code.field().clone();
    check_e(&field, e)?;
    if alphas.len() == 1 {
        return Err(Error::LengthOne);
    }
    if alphas.e != e {
        return Err(Error::BadAlphaTuple);
    }
    alphas.validate(&field)?;
    require_self_orthogonal(code, e)?;
    let a = power_exponent(&field, e);
    if beta == 0 || field.pow(beta, a) != 1 {
        return Err(Error::BadBeta);
    }
    if alphas.is_empty() {
        return Ok(code.clone());
    }

    let k = code.k();
    let n = code.n();
    let i = alphas.len();
    let (amat, _perm) = code.standard_form();
    let mut g = Matrix::zero(k, n + i);
    for r in 0..k {
        g.set(r, r, beta);
        for j in 0..n - k {
            g.set(r, k + j, amat.get(r, j));
        }
        for (s, &alpha) in alphas.values.iter().enumerate() {
            g.set(r, n + s, alpha);
        }
    }
    let out = LinearCode::new(field, &g)?;
    debug_assert!(out.gram(e).unwrap().is_zero());
    Ok(out)
}

/// The closed-form determinant governing the one-column extension: the
/// extension achieves hull dimension exactly l iff
/// (beta^a - 1)^(k-l-1) * ((k-l)*alpha^a + beta^a - 1) is nonzero,
/// where a = p^e + 1 and (k-l) is reduced into the prime subfield.
pub fn hull_extension_determinant(
    field: &Field,
    e: u32,
    k: usize,
    l: usize,
    alpha: FieldElement,
    beta: FieldElement,
) -> Result<FieldElement> {
    check_e(field, e)?;
    if l >= k {
        return Err(Error::HullTargetOutOfRange { l, max: k - 1 });
    }
    let a = power_exponent(field, e);
    let ba = field.pow(beta, a);
    let aa = field.pow(alpha, a);
    let scalar = ((k - l) as u64 % field.p() as u64) as u32;
    let factor = field.sub(ba, 1);
    let term = field.sub(field.add(field.mul(scalar, aa), ba), 1);
    Ok(field.mul(field.pow(factor, (k - l - 1) as u64), term))
}

/// Extend a self-orthogonal code by one column so the result has hull
/// dimension exactly l: the first k-l systematic columns are scaled by
/// beta and receive the alpha entry, the rest are scaled by lambda (a
/// (p^e+1)-th root of unity) and receive zero.
pub fn extend_one_with_hull(
    code: &LinearCode,
    e: u32,
    l: usize,
    alpha: FieldElement,
    beta: FieldElement,
    lambda: FieldElement,
) -> Result<LinearCode> {
    let field = code.field().clone();
    check_e(&field, e)?;
    require_self_orthogonal(code, e)?;
    let k = code.k();
    let n = code.n();
    if l >= k {
        return Err(Error::HullTargetOutOfRange { l, max: k - 1 });
    }
    if alpha == 0 || beta == 0 || lambda == 0 {
        return Err(Error::BadArgs(String::from(
            "alpha, beta, lambda must all be nonzero",
        )));
    }
    let a = power_exponent(&field, e);
    if field.pow(lambda, a) != 1 {
        return Err(Error::BadArgs(String::from(
            "lambda must be a (p^e+1)-th root of unity",
        )));
    }
    let det = hull_extension_determinant(&field, e, k, l, alpha, beta)?;
    // Cross-check the closed form against the explicitly built block
    // (beta^a - 1) I + alpha^a J of size k-l.
    let ba = field.pow(beta, a);
    let aa = field.pow(alpha, a);
    let mut block = Matrix::zero(k - l, k - l);
    for r in 0..k - l {
        for t in 0..k - l {
            let mut v = aa;
            if r == t {
                v = field.add(v, field.sub(ba, 1));
            }
            block.set(r, t, v);
        }
    }
    let explicit = block.det(&field);
    if explicit != det {
        return Err(Error::InternalMismatch(String::from(
            "closed-form hull-extension determinant disagrees with the explicit block",
        )));
    }
    if det == 0 {
        return Err(Error::DeterminantCondition);
    }

    let (amat, _perm) = code.standard_form();
    let mut g = Matrix::zero(k, n + 1);
    for r in 0..k {
        g.set(r, r, if r < k - l { beta } else { lambda });
        for j in 0..n - k {
            g.set(r, k + j, amat.get(r, j));
        }
        if r < k - l {
            g.set(r, n, alpha);
        }
    }
    let out = LinearCode::new(field, &g)?;
    debug_assert_eq!(out.hull_dimension(e).unwrap(), l);
    Ok(out)
}

/// Reduce the hull dimension of a self-orthogonal code from k to exactly l
/// by scaling its first k-l systematic columns with the fixed scaling
/// element omega (legal whenever omega^(p^e+1) != 1). The result is
/// monomially equivalent: same length, dimension, and distance.
pub fn reduce_hull_dim(code: &LinearCode, e: u32, l: usize) -> Result<LinearCode> {
    let field = code.field().clone();
    check_e(&field, e)?;
    require_self_orthogonal(code, e)?;
    let k = code.k();
    let n = code.n();
    if l > k {
        return Err(Error::HullTargetOutOfRange { l, max: k });
    }
    if l == k {
        return Ok(code.clone());
    }
    let a = power_exponent(&field, e);
    let gamma = field.omega();
    if field.pow(gamma, a) == 1 {
        return Err(Error::NoScalingElement);
    }
    let (amat, _perm) = code.standard_form();
    let mut g = Matrix::zero(k, n);
    for r in 0..k {
        g.set(r, r, if r < k - l { gamma } else { 1 });
        for j in 0..n - k {
            g.set(r, k + j, amat.get(r, j));
        }
    }
    let out = LinearCode::new(field, &g)?;
    debug_assert_eq!(out.hull_dimension(e).unwrap(), l);
    Ok(out)
}

/// The scaling element reduce_hull_dim would use, when one exists.
pub fn scaling_element(field: &Field, e: u32) -> Result<FieldElement> {
    check_e(field, e)?;
    let a = power_exponent(field, e);
    let gamma = field.omega();
    if field.pow(gamma, a) == 1 {
        return Err(Error::NoScalingElement);
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, h: u32) -> Field {
        Field::new(p, h, None).unwrap()
    }

    fn code(field: Field, rows: &[Vec<u32>]) -> LinearCode {
        LinearCode::new(field, &Matrix::from_rows(rows)).unwrap()
    }

    fn binary_pair() -> LinearCode {
        code(gf(2, 1), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]])
    }

    fn quaternary_pair() -> LinearCode {
        // (1,0,1,0)/(0,1,0,1) over GF(4): Hermitian self-orthogonal.
        code(gf(2, 2), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]])
    }

    #[test]
    fn condition_cases() {
        let f9 = gf(3, 2);
        assert_eq!(alpha_conditions(&f9, 0).unwrap().case, AlphaCase::OddCase2);
        assert_eq!(alpha_conditions(&f9, 1).unwrap().case, AlphaCase::OddCase3);
        let f81 = gf(3, 4);
        assert_eq!(alpha_conditions(&f81, 0).unwrap().case, AlphaCase::OddCase2);
        assert_eq!(alpha_conditions(&f81, 2).unwrap().case, AlphaCase::OddCase3);
        assert_eq!(alpha_conditions(&gf(2, 3), 1).unwrap().case, AlphaCase::PEven);
        let f27 = gf(3, 3);
        for e in 0..3 {
            let rep = alpha_conditions(&f27, e).unwrap();
            assert_eq!(rep.case, AlphaCase::None);
            assert_eq!(rep.t0, None);
            assert_eq!(rep.triple, Some([1, 1, 1]));
        }
        let f3 = gf(3, 1);
        let rep = alpha_conditions(&f3, 0).unwrap();
        assert_eq!(rep.case, AlphaCase::None);
        assert_eq!(rep.triple, Some([1, 1, 1]));
    }

    #[test]
    fn tuple_search_frozen_results() {
        let f64_ = gf(2, 6);
        let w = |j: u64| f64_.w(j);
        assert_eq!(
            find_alpha_tuple(&f64_, 0, 2).unwrap().unwrap().values,
            vec![1, 1]
        );
        assert_eq!(
            find_alpha_tuple(&f64_, 0, 3).unwrap().unwrap().values,
            vec![1, w(1), w(6)]
        );
        assert_eq!(
            find_alpha_tuple(&f64_, 1, 3).unwrap().unwrap().values,
            vec![1, w(3), w(15)]
        );
        let f8 = gf(2, 3);
        let w8 = |j: u64| f8.w(j);
        assert_eq!(
            find_alpha_tuple(&f8, 0, 3).unwrap().unwrap().values,
            vec![1, w8(1), w8(3)]
        );
        assert_eq!(
            find_alpha_tuple(&f8, 1, 3).unwrap().unwrap().values,
            vec![1, w8(1), w8(5)]
        );
        assert_eq!(
            find_alpha_tuple(&f8, 2, 3).unwrap().unwrap().values,
            vec![1, w8(1), w8(5)]
        );
        assert_eq!(
            find_alpha_tuple(&f8, 0, 4).unwrap().unwrap().values,
            vec![1, 1, 1, 1]
        );
        let f25 = gf(5, 2);
        assert_eq!(
            find_alpha_tuple(&f25, 0, 2).unwrap().unwrap().values,
            vec![2, 1]
        );
        assert_eq!(
            find_alpha_tuple(&f25, 1, 2).unwrap().unwrap().values,
            vec![f25.w(2), 1]
        );
        assert_eq!(
            find_alpha_tuple(&f25, 0, 3).unwrap().unwrap().values,
            vec![1, 1, f25.w(9)]
        );
        let f9 = gf(3, 2);
        assert_eq!(
            find_alpha_tuple(&f9, 0, 2).unwrap().unwrap().values,
            vec![f9.w(2), 1]
        );
        assert_eq!(
            find_alpha_tuple(&f9, 1, 2).unwrap().unwrap().values,
            vec![f9.w(1), 1]
        );
        assert_eq!(
            find_alpha_tuple(&f9, 0, 3).unwrap().unwrap().values,
            vec![1, 1, 1]
        );
        let f4 = gf(2, 2);
        assert_eq!(
            find_alpha_tuple(&f4, 0, 3).unwrap().unwrap().values,
            vec![1, f4.w(1), f4.w(2)]
        );
        assert_eq!(find_alpha_tuple(&f4, 1, 3).unwrap(), None);
        assert_eq!(find_alpha_tuple(&gf(2, 4), 1, 3).unwrap(), None);
        let f27 = gf(3, 3);
        for e in 0..3 {
            assert_eq!(find_alpha_tuple(&f27, e, 2).unwrap(), None);
            assert_eq!(
                find_alpha_tuple(&f27, e, 3).unwrap().unwrap().values,
                vec![1, 1, 1]
            );
        }
        assert_eq!(
            find_alpha_tuple(&f27, 0, 4).unwrap().unwrap().values,
            vec![1, 1, f27.w(2), f27.w(10)]
        );
        assert_eq!(
            find_alpha_tuple(&f27, 1, 4).unwrap().unwrap().values,
            vec![1, 1, f27.w(1), f27.w(5)]
        );
        assert_eq!(find_alpha_tuple(&f27, 0, 1), Err(Error::BadLength(1)));
    }

    #[test]
    fn every_returned_tuple_has_zero_power_sum() {
        for (p, h) in [(2u32, 2u32), (2, 3), (3, 2), (5, 2), (3, 3)] {
            let f = gf(p, h);
            for e in 0..h {
                for i in 2..=5 {
                    if let Some(t) = find_alpha_tuple(&f, e, i).unwrap() {
                        assert_eq!(t.len(), i);
                        assert!(t.validate(&f).is_ok(), "GF({p}^{h}) e={e} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn binary_extension_reaches_length_six() {
        let c = binary_pair();
        let t = AlphaTuple::new(c.field(), 0, vec![1, 1]).unwrap();
        let ext = extend_self_orthogonal(&c, 0, &t, 1).unwrap();
        assert_eq!((ext.n(), ext.k()), (6, 2));
        assert_eq!(ext.min_distance(None).unwrap().d, 4);
        let cls = ext.classify(0).unwrap();
        assert!(cls.self_orthogonal);
        let sp = ext.singleton_profile(4, ext.dual_distance(None).unwrap().d);
        assert_eq!((sp.defect, sp.dual_defect, sp.m_mds), (1, 1, Some(1)));
    }

    #[test]
    fn quaternary_hermitian_extension() {
        let c = quaternary_pair();
        let w = c.field().omega();
        let t = AlphaTuple::new(c.field(), 1, vec![w, w]).unwrap();
        let ext = extend_self_orthogonal(&c, 1, &t, 1).unwrap();
        assert_eq!((ext.n(), ext.k()), (6, 2));
        assert_eq!(ext.min_distance(None).unwrap().d, 4);
        assert!(ext.classify(1).unwrap().self_orthogonal);
    }

    #[test]
    fn zero_column_extension_is_identity() {
        let c = binary_pair();
        let t = AlphaTuple::new(c.field(), 0, vec![]).unwrap();
        let ext = extend_self_orthogonal(&c, 0, &t, 1).unwrap();
        assert_eq!(ext, c);
    }

    #[test]
    fn extension_rejects_bad_inputs() {
        let c = binary_pair();
        let single = AlphaTuple { e: 0, values: vec![1] };
        assert_eq!(
            extend_self_orthogonal(&c, 0, &single, 1),
            Err(Error::LengthOne)
        );
        let bad_sum = AlphaTuple { e: 0, values: vec![1, 1, 1] };
        assert_eq!(
            extend_self_orthogonal(&c, 0, &bad_sum, 1),
            Err(Error::BadAlphaTuple)
        );
        let good = AlphaTuple::new(c.field(), 0, vec![1, 1]).unwrap();
        assert_eq!(
            extend_self_orthogonal(&c, 0, &good, 0),
            Err(Error::BadBeta)
        );
        let not_so = code(gf(2, 1), &[vec![1, 0, 0], vec![0, 1, 0]]);
        let t2 = AlphaTuple::new(not_so.field(), 0, vec![1, 1]).unwrap();
        assert_eq!(
            extend_self_orthogonal(&not_so, 0, &t2, 1),
            Err(Error::NotSelfOrthogonal)
        );
        assert_eq!(AlphaTuple::new(c.field(), 0, vec![1, 0]), Err(Error::BadAlphaTuple));
    }

    #[test]
    fn one_column_extension_hits_requested_hull() {
        // Binary: l = 1 works with alpha = beta = 1; l = 0 is impossible
        // because (beta^2 - 1) vanishes for the only nonzero beta.
        let c = binary_pair();
        let ext = extend_one_with_hull(&c, 0, 1, 1, 1, 1).unwrap();
        assert_eq!((ext.n(), ext.k()), (5, 2));
        assert_eq!(ext.hull_dimension(0).unwrap(), 1);
        assert_eq!(
            extend_one_with_hull(&c, 0, 0, 1, 1, 1),
            Err(Error::DeterminantCondition)
        );
        assert_eq!(
            extend_one_with_hull(&c, 0, 2, 1, 1, 1),
            Err(Error::HullTargetOutOfRange { l: 2, max: 1 })
        );
        // Hermitian over GF(4): l = 1 works, l = 0 cannot (beta^3 = 1 always).
        let c4 = quaternary_pair();
        let ext4 = extend_one_with_hull(&c4, 1, 1, 1, 1, 1).unwrap();
        assert_eq!(ext4.hull_dimension(1).unwrap(), 1);
        assert_eq!(
            extend_one_with_hull(&c4, 1, 0, 1, 1, 1),
            Err(Error::DeterminantCondition)
        );
    }

    #[test]
    fn one_column_extension_over_gf9() {
        // (1,0,w^2,0)/(0,1,0,w^2) is Euclidean self-orthogonal in GF(9)
        // because (w^2)^2 = -1.
        let f = gf(3, 2);
        let w2 = f.w(2);
        let c = code(f.clone(), &[vec![1, 0, w2, 0], vec![0, 1, 0, w2]]);
        assert!(c.classify(0).unwrap().self_orthogonal);
        for l in 0..2 {
            // search the small parameter space like the propagation driver
            let mut done = false;
            'outer: for bj in 0..8 {
                for aj in 0..8 {
                    let (alpha, beta) = (f.w(aj), f.w(bj));
                    match extend_one_with_hull(&c, 0, l, alpha, beta, 1) {
                        Ok(ext) => {
                            assert_eq!(ext.hull_dimension(0).unwrap(), l);
                            assert_eq!((ext.n(), ext.k()), (5, 2));
                            done = true;
                            break 'outer;
                        }
                        Err(Error::DeterminantCondition) => continue,
                        Err(other) => panic!("unexpected error: {other:?}"),
                    }
                }
            }
            assert!(done, "no (alpha, beta) achieved hull dimension {l}");
        }
    }

    #[test]
    fn hull_reduction() {
        let f = gf(3, 2);
        let w2 = f.w(2);
        let c = code(f, &[vec![1, 0, w2, 0], vec![0, 1, 0, w2]]);
        for l in 0..=2 {
            let red = reduce_hull_dim(&c, 0, l).unwrap();
            assert_eq!((red.n(), red.k()), (4, 2));
            assert_eq!(red.hull_dimension(0).unwrap(), l);
            assert_eq!(red.min_distance(None).unwrap().d, c.min_distance(None).unwrap().d);
        }
        assert_eq!(reduce_hull_dim(&c, 0, 2).unwrap(), c);
        // Hermitian GF(4): every gamma has gamma^3 = 1, so reduction below
        // the full hull is impossible.
        let c4 = quaternary_pair();
        assert_eq!(reduce_hull_dim(&c4, 1, 2).unwrap(), c4);
        assert_eq!(reduce_hull_dim(&c4, 1, 0), Err(Error::NoScalingElement));
        assert_eq!(scaling_element(c4.field(), 1), Err(Error::NoScalingElement));
        // Euclidean GF(4) does have one (omega^2 != 1).
        assert_eq!(scaling_element(c4.field(), 0).unwrap(), c4.field().omega());
    }

    #[test]
    fn determinant_closed_form_cases() {
        let f = gf(3, 2);
        // l = k-1 leaves only the single-entry term alpha^a + beta^a - 1.
        let d = hull_extension_determinant(&f, 0, 4, 3, f.w(6), f.w(1)).unwrap();
        let expect = f.sub(f.add(f.pow(f.w(6), 2), f.pow(f.w(1), 2)), 1);
        assert_eq!(d, expect);
        assert!(matches!(
            hull_extension_determinant(&f, 0, 3, 3, 1, 1),
            Err(Error::HullTargetOutOfRange { .. })
        ));
    }
}
