//! Built-in verification suite: every check recomputes a frozen expected
//! result — hull dimensions of the embedded fixture codes, extension and
//! reduction outcomes, GRS family shapes, quantum parameter derivations,
//! and the CSV datasets — and fails loudly on any deviation. The fixture
//! codes are embedded at compile time so the binary verifies itself
//! without touching the filesystem.

use hullforge::{
    alpha_conditions, derive_eaqecc, ea_singleton_check, extend_grs_one, extend_one_with_hull,
    extend_self_orthogonal, find_alpha_tuple, galois_gcd_formula, grs_generator,
    hso_mds_coset, hso_mds_product, hull_extension_determinant, propagate, rates,
    reduce_hull_dim, scaling_element, solve_t0, u_vector, AlphaCase, AlphaTuple, CosetFamily,
    EaqeccParams, Error, Field, FieldElement, GrsSpec, LinearCode, ProductFamily, Target,
};
use num_rational::Ratio;

use crate::codefile::{parse_code_file, serialize_code, CliError};
use crate::tables::{emit_table, expected_table_csv};

/// Generator matrices embedded at compile time, in the text code format.
pub mod fixtures {
    pub const GF2_4_2: &str = include_str!("../fixtures/gf2_4_2.code");
    pub const GF2_6_3: &str = include_str!("../fixtures/gf2_6_3.code");
    pub const GF4_4_2: &str = include_str!("../fixtures/gf4_4_2.code");
    pub const GF4_11_5: &str = include_str!("../fixtures/gf4_11_5.code");
    pub const GF8_8_5: &str = include_str!("../fixtures/gf8_8_5.code");
    pub const GF8_10_4: &str = include_str!("../fixtures/gf8_10_4.code");
    pub const GF9_13_2: &str = include_str!("../fixtures/gf9_13_2.code");
    pub const GF9_14_4: &str = include_str!("../fixtures/gf9_14_4.code");
    pub const GF64_18_6: &str = include_str!("../fixtures/gf64_18_6.code");
    pub const GF81_12_6: &str = include_str!("../fixtures/gf81_12_6.code");
    pub const GF81_17_3: &str = include_str!("../fixtures/gf81_17_3.code");
    pub const GF169_11_4: &str = include_str!("../fixtures/gf169_11_4.code");

    pub const ALL: &[(&str, &str)] = &[
        ("gf2_4_2", GF2_4_2),
        ("gf2_6_3", GF2_6_3),
        ("gf4_4_2", GF4_4_2),
        ("gf4_11_5", GF4_11_5),
        ("gf8_8_5", GF8_8_5),
        ("gf8_10_4", GF8_10_4),
        ("gf9_13_2", GF9_13_2),
        ("gf9_14_4", GF9_14_4),
        ("gf64_18_6", GF64_18_6),
        ("gf81_12_6", GF81_12_6),
        ("gf81_17_3", GF81_17_3),
        ("gf169_11_4", GF169_11_4),
    ];
}

type CheckResult = Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> CheckResult,
}

fn ensure(cond: bool, msg: impl Into<String>) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fx(text: &str) -> Result<LinearCode, String> {
    parse_code_file(text).map_err(|e| format!("fixture parse failed: {e}"))
}

fn gf(p: u32, h: u32) -> Result<Field, String> {
    Field::new(p, h, None).map_err(|e| format!("GF({p}^{h}) construction failed: {e}"))
}

fn gfm(p: u32, h: u32, modulus: &[u32]) -> Result<Field, String> {
    Field::new(p, h, Some(modulus))
        .map_err(|e| format!("GF({p}^{h}) with pinned modulus failed: {e}"))
}

/// Exact minimum distance or an error message.
fn dist(code: &LinearCode) -> Result<usize, String> {
    let r = code.min_distance(None).map_err(|e| format!("distance: {e}"))?;
    ensure(r.exact, format!("distance search inexact (got >= {})", r.d))?;
    Ok(r.d)
}

fn expect_dims(code: &LinearCode, want: &[usize]) -> CheckResult {
    for (e, &w) in want.iter().enumerate() {
        let got = code
            .hull_dimension(e as u32)
            .map_err(|err| format!("hull at e={e}: {err}"))?;
        ensure(got == w, format!("hull dim at e={e}: got {got}, want {w}"))?;
    }
    Ok(())
}

fn expect_params(
    label: &str,
    got: &EaqeccParams,
    alphabet: u32,
    n: usize,
    k: usize,
    d: usize,
    c: usize,
) -> CheckResult {
    ensure(
        got.alphabet == alphabet && got.n == n && got.k == k && got.d == d && got.c == c,
        format!("{label}: got {got}, want [[{n},{k},{d};{c}]]_{alphabet}"),
    )?;
    ensure(got.exact, format!("{label}: distance marked inexact"))
}

fn mk_params(alphabet: u32, n: usize, k: usize, d: usize, c: usize) -> EaqeccParams {
    EaqeccParams {
        alphabet,
        n,
        k,
        d,
        c,
        mds: false,
        exact: true,
        provenance: String::new(),
    }
}

// ---------------------------------------------------------------------------
// hulls of the fixture codes

pub fn check_hull_dims_gf8_8_5() -> CheckResult {
    let code = fx(fixtures::GF8_8_5)?;
    expect_dims(&code, &[0, 1, 1])?;
    let cls = code.classify(0).map_err(|e| e.to_string())?;
    ensure(cls.lcd, "expected complementary-dual at e=0")?;
    ensure(!cls.self_orthogonal, "must not be self-orthogonal at e=0")
}

pub fn check_dual_hull_match_gf8_8_5() -> CheckResult {
    let code = fx(fixtures::GF8_8_5)?;
    let h = code.field().h();
    for e in 0..h {
        let hull = code.hull(e).map_err(|err| err.to_string())?;
        let dual_hull = code
            .dual(e)
            .and_then(|d| d.hull((h - e) % h))
            .map_err(|err| err.to_string())?;
        ensure(
            hull == dual_hull,
            format!("hull at e={e} differs from the mirrored hull of the e-dual"),
        )?;
    }
    Ok(())
}

pub fn check_hull_dims_gf8_10_4() -> CheckResult {
    let code = fx(fixtures::GF8_10_4)?;
    expect_dims(&code, &[2, 0, 0])?;
    for e in [1, 2] {
        let cls = code.classify(e).map_err(|err| err.to_string())?;
        ensure(cls.lcd, format!("expected complementary-dual at e={e}"))?;
    }
    Ok(())
}

pub fn check_self_dual_gf81_12_6() -> CheckResult {
    let code = fx(fixtures::GF81_12_6)?;
    for e in [1u32, 3] {
        let cls = code.classify(e).map_err(|err| err.to_string())?;
        ensure(cls.self_dual, format!("expected self-dual at e={e}"))?;
        ensure(
            code.gram(e).map_err(|err| err.to_string())?.is_zero(),
            format!("generator Gram must vanish at e={e}"),
        )?;
        let dual = code.dual(e).map_err(|err| err.to_string())?;
        ensure(
            dual.gram(e).map_err(|err| err.to_string())?.is_zero(),
            format!("dual generator Gram must vanish at e={e}"),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// self-orthogonality-preserving extensions

fn checked_extension(
    code: &LinearCode,
    e: u32,
    tuple: &AlphaTuple,
    n: usize,
    k: usize,
    d: usize,
) -> CheckResult {
    let ext = extend_self_orthogonal(code, e, tuple, 1).map_err(|err| err.to_string())?;
    ensure(
        ext.n() == n && ext.k() == k,
        format!("extension shape: got [{},{}], want [{n},{k}]", ext.n(), ext.k()),
    )?;
    ensure(
        ext.gram(e).map_err(|err| err.to_string())?.is_zero(),
        "extension lost self-orthogonality",
    )?;
    ensure(
        ext.hull_dimension(e).map_err(|err| err.to_string())? == k,
        "extension hull must stay full",
    )?;
    let got = dist(&ext)?;
    ensure(got == d, format!("extension distance: got {got}, want {d}"))
}

pub fn check_extend_gf2_4_2() -> CheckResult {
    let code = fx(fixtures::GF2_4_2)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 0, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no column pair found over GF(2)")?;
    ensure(tuple.values == vec![1, 1], "GF(2) pair must be (1, 1)")?;
    checked_extension(&code, 0, &tuple, 6, 2, 4)
}

pub fn check_extend_gf2_6_3() -> CheckResult {
    let code = fx(fixtures::GF2_6_3)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 0, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no column pair found over GF(2)")?;
    checked_extension(&code, 0, &tuple, 8, 3, 4)
}

pub fn check_extend_gf4_4_2_both_pairs() -> CheckResult {
    let code = fx(fixtures::GF4_4_2)?;
    let f = code.field().clone();
    let w = f.w(1);
    let ones = AlphaTuple::new(&f, 1, vec![1, 1]).map_err(|e| e.to_string())?;
    let omegas = AlphaTuple::new(&f, 1, vec![w, w]).map_err(|e| e.to_string())?;
    checked_extension(&code, 1, &ones, 6, 2, 4)?;
    checked_extension(&code, 1, &omegas, 6, 2, 4)
}

pub fn check_extend_gf4_11_5() -> CheckResult {
    let code = fx(fixtures::GF4_11_5)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 1, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no conjugate-pair constants over GF(4)")?;
    checked_extension(&code, 1, &tuple, 13, 5, 6)
}

pub fn check_extend_gf9_13_2() -> CheckResult {
    let code = fx(fixtures::GF9_13_2)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 1, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no conjugate-pair constants over GF(9)")?;
    ensure(
        tuple.values == vec![f.w(1), 1],
        "GF(9) conjugate pair must be (w, 1)",
    )?;
    checked_extension(&code, 1, &tuple, 15, 2, 13)
}

pub fn check_extend_gf64_two_columns() -> CheckResult {
    let code = fx(fixtures::GF64_18_6)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 1, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no pair over GF(64)")?;
    ensure(tuple.values == vec![1, 1], "GF(64) pair must be (1, 1)")?;
    checked_extension(&code, 1, &tuple, 20, 6, 5)
}

pub fn check_extend_gf64_three_columns() -> CheckResult {
    let code = fx(fixtures::GF64_18_6)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 1, 3)
        .map_err(|e| e.to_string())?
        .ok_or("no triple over GF(64)")?;
    ensure(
        tuple.values == vec![1, f.w(3), f.w(15)],
        "search must find the first triple (1, w^3, w^15)",
    )?;
    checked_extension(&code, 1, &tuple, 21, 6, 6)
}

pub fn check_extend_gf64_reference_triple() -> CheckResult {
    let code = fx(fixtures::GF64_18_6)?;
    let f = code.field().clone();
    let tuple = AlphaTuple::new(&f, 1, vec![f.w(50), f.w(36), f.w(22)])
        .map_err(|e| format!("reference triple rejected: {e}"))?;
    checked_extension(&code, 1, &tuple, 21, 6, 6)
}

pub fn check_extend_gf81_12_6() -> CheckResult {
    let code = fx(fixtures::GF81_12_6)?;
    let f = code.field().clone();
    let tuple = find_alpha_tuple(&f, 1, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no pair over GF(81)")?;
    ensure(
        tuple.values == vec![f.w(10), 1],
        "GF(81) pair at e=1 must be (w^10, 1)",
    )?;
    checked_extension(&code, 1, &tuple, 14, 6, 4)?;
    // The lengthened code stays self-orthogonal at the mirror twist too.
    let ext = extend_self_orthogonal(&code, 1, &tuple, 1).map_err(|e| e.to_string())?;
    ensure(
        ext.gram(3).map_err(|e| e.to_string())?.is_zero(),
        "extension must be self-orthogonal at e=3 as well",
    )
}

// ---------------------------------------------------------------------------
// one-column extension with prescribed hull

pub fn check_extend_one_gf9_14_4() -> CheckResult {
    let code = fx(fixtures::GF9_14_4)?;
    let f = code.field().clone();
    let (alpha, beta) = (f.w(6), f.w(1));
    // a = p^0 + 1 = 2; (k - l) = 3 vanishes in characteristic 3, so the
    // pivotal quantity collapses to beta^2, which must differ from 1.
    let quantity = f.add(f.mul(0, f.pow(alpha, 2)), f.pow(beta, 2));
    ensure(quantity == f.w(2), "pivotal quantity must equal w^2")?;
    ensure(quantity != 1, "pivotal quantity must differ from 1")?;
    let det = hull_extension_determinant(&f, 0, 4, 1, alpha, beta).map_err(|e| e.to_string())?;
    ensure(det != 0, "extension determinant must be nonzero")?;
    let ext = extend_one_with_hull(&code, 0, 1, alpha, beta, 1).map_err(|e| e.to_string())?;
    ensure(ext.n() == 15 && ext.k() == 4, "expected a [15,4] code")?;
    ensure(
        ext.hull_dimension(0).map_err(|e| e.to_string())? == 1,
        "hull dimension must be exactly 1",
    )?;
    let d = dist(&ext)?;
    ensure(d == 10, format!("distance: got {d}, want 10"))
}

pub fn check_extend_one_gf169_11_4() -> CheckResult {
    let code = fx(fixtures::GF169_11_4)?;
    let f = code.field().clone();
    let ext = extend_one_with_hull(&code, 0, 1, f.w(19), 4, 1).map_err(|e| e.to_string())?;
    ensure(ext.n() == 12 && ext.k() == 4, "expected a [12,4] code")?;
    ensure(
        ext.hull_dimension(0).map_err(|e| e.to_string())? == 1,
        "hull dimension must be exactly 1",
    )?;
    let d = dist(&ext)?;
    ensure(d == 7, format!("distance: got {d}, want 7"))
}

pub fn check_extend_one_target_range() -> CheckResult {
    let code = fx(fixtures::GF9_14_4)?;
    let f = code.field().clone();
    match extend_one_with_hull(&code, 0, 4, f.w(6), f.w(1), 1) {
        Err(Error::HullTargetOutOfRange { l: 4, max: 3 }) => Ok(()),
        other => Err(format!(
            "l = k must be rejected with the target-range error, got {other:?}"
        )),
    }
}

// ---------------------------------------------------------------------------
// hull-dimension reduction

fn gf4_extension() -> Result<LinearCode, String> {
    let code = fx(fixtures::GF4_4_2)?;
    let f = code.field().clone();
    let tuple = AlphaTuple::new(&f, 1, vec![1, 1]).map_err(|e| e.to_string())?;
    extend_self_orthogonal(&code, 1, &tuple, 1).map_err(|e| e.to_string())
}

pub fn check_reduce_gf4_no_scaling_element() -> CheckResult {
    let ext = gf4_extension()?;
    let f = ext.field().clone();
    let same = reduce_hull_dim(&ext, 1, 2).map_err(|e| e.to_string())?;
    ensure(same == ext, "reduction to the current hull dim must be the identity")?;
    ensure(
        matches!(scaling_element(&f, 1), Err(Error::NoScalingElement)),
        "GF(4) conjugate form admits no scaling element",
    )?;
    ensure(
        matches!(reduce_hull_dim(&ext, 1, 0), Err(Error::NoScalingElement)),
        "reduction over GF(4) at the conjugate twist must fail",
    )
}

pub fn check_reduce_grs_14() -> CheckResult {
    let f = gf(3, 4)?;
    let spec = hso_mds_coset(&f, 2, 7, 2).map_err(|e| e.to_string())?;
    let code = grs_generator(&spec).map_err(|e| e.to_string())?;
    ensure(code.n() == 14 && code.k() == 2, "expected a [14,2] code")?;
    ensure(
        code.hull_dimension(2).map_err(|e| e.to_string())? == 2,
        "conjugate hull must start full",
    )?;
    let red = reduce_hull_dim(&code, 2, 1).map_err(|e| e.to_string())?;
    ensure(
        red.hull_dimension(2).map_err(|e| e.to_string())? == 1,
        "reduced hull must be exactly 1",
    )?;
    let d = dist(&red)?;
    ensure(d == 13, format!("reduction must preserve d = 13, got {d}"))
}

pub fn check_extend_grs_one() -> CheckResult {
    let f = gf(3, 4)?;
    let spec = hso_mds_coset(&f, 2, 7, 2).map_err(|e| e.to_string())?;
    for gamma in [1, f.w(1)] {
        let ext = extend_grs_one(&spec, 2, gamma).map_err(|e| e.to_string())?;
        ensure(ext.n() == 15 && ext.k() == 2, "expected a [15,2] code")?;
        ensure(
            ext.hull_dimension(2).map_err(|e| e.to_string())? == 1,
            "lengthened code must have hull dimension 1",
        )?;
        ensure(
            ext.mds_certificate(1_000_000).map_err(|e| e.to_string())?,
            "lengthened code must certify as MDS",
        )?;
        let d = dist(&ext)?;
        ensure(d == 14, format!("distance: got {d}, want 14"))?;
    }
    ensure(
        matches!(extend_grs_one(&spec, 2, 0), Err(Error::Zero)),
        "zero column scalar must be rejected",
    )
}

// ---------------------------------------------------------------------------
// coset-union locator family

pub fn check_coset_shape_2_7() -> CheckResult {
    let f = gf(3, 4)?;
    let fam = CosetFamily::new(&f, 2, 7).map_err(|e| e.to_string())?;
    ensure(fam.n1 == 1 && fam.n2 == 2, "expected n1 = 1, n2 = 2")?;
    ensure(fam.locators().len() == 14, "expected 14 locators")?;
    ensure(fam.kmax() == 2, "expected kmax = 2")
}

pub fn check_coset_full_orbit() -> CheckResult {
    let f = gf(3, 4)?;
    let fam = CosetFamily::new(&f, 10, 8).map_err(|e| e.to_string())?;
    let mut locs = fam.locators();
    locs.sort_unstable();
    let all: Vec<FieldElement> = (1..=80).collect();
    ensure(locs == all, "n' = 10, t = 8 must cover every nonzero element")?;
    ensure(fam.kmax() == 7, "expected kmax = 7")
}

pub fn check_coset_rejections() -> CheckResult {
    let f = gf(3, 4)?;
    ensure(
        matches!(
            CosetFamily::new(&f, 7, 1),
            Err(Error::BadDivisor { nprime: 7 })
        ),
        "n' = 7 does not divide q - 1 = 80 and must be rejected",
    )?;
    ensure(
        matches!(
            CosetFamily::new(&f, 10, 9),
            Err(Error::TOutOfRange { t: 9, max: 8 })
        ),
        "t = 9 exceeds the coset budget for n' = 10",
    )?;
    let f27 = gf(3, 3)?;
    ensure(
        matches!(CosetFamily::new(&f27, 2, 1), Err(Error::OddExtension(3))),
        "odd extension degree admits no conjugate form",
    )
}

pub fn check_coset_u_closed_form() -> CheckResult {
    let f = gf(3, 4)?;
    for (nprime, t) in [(2usize, 7usize), (5, 8), (10, 5)] {
        let fam = CosetFamily::new(&f, nprime, t).map_err(|e| e.to_string())?;
        let direct = u_vector(&f, &fam.locators()).map_err(|e| e.to_string())?;
        ensure(
            fam.u_closed_form() == direct,
            format!("closed-form u disagrees with direct evaluation for (n'={nprime}, t={t})"),
        )?;
    }
    Ok(())
}

pub fn check_hso_coset_40() -> CheckResult {
    let f = gf(3, 4)?;
    let spec = hso_mds_coset(&f, 5, 8, 4).map_err(|e| e.to_string())?;
    let code = grs_generator(&spec).map_err(|e| e.to_string())?;
    ensure(code.n() == 40 && code.k() == 4, "expected a [40,4] code")?;
    ensure(
        code.gram(2).map_err(|e| e.to_string())?.is_zero(),
        "conjugate Gram must vanish",
    )?;
    ensure(
        code.mds_certificate(1_000_000).map_err(|e| e.to_string())?,
        "the [40,4] code must certify as MDS",
    )?;
    ensure(
        matches!(
            hso_mds_coset(&f, 5, 8, 5),
            Err(Error::KOutOfRange { k: 5, max: 4 })
        ),
        "k = 5 exceeds kmax = 4 for (n'=5, t=8)",
    )
}

pub fn check_hso_coset_70() -> CheckResult {
    let f = gf(3, 4)?;
    let spec = hso_mds_coset(&f, 10, 7, 6).map_err(|e| e.to_string())?;
    let code = grs_generator(&spec).map_err(|e| e.to_string())?;
    ensure(code.n() == 70 && code.k() == 6, "expected a [70,6] code")?;
    ensure(
        code.gram(2).map_err(|e| e.to_string())?.is_zero(),
        "conjugate Gram must vanish",
    )
}

// ---------------------------------------------------------------------------
// product locator family

pub fn check_product_shape_169() -> CheckResult {
    let f = gf(13, 2)?;
    let fam = ProductFamily::new(&f, 14, 24, 5).map_err(|e| e.to_string())?;
    ensure(fam.n2 == 7, "expected n2 = 7")?;
    ensure(fam.locators().len() == 35, "expected 35 locators")?;
    ensure(fam.kmax() == 2, "expected kmax = 2")?;
    let direct = u_vector(&f, &fam.locators()).map_err(|e| e.to_string())?;
    ensure(
        fam.u_closed_form() == direct,
        "closed-form u disagrees with direct evaluation",
    )
}

pub fn check_product_rejections() -> CheckResult {
    let f = gf(13, 2)?;
    ensure(
        matches!(
            ProductFamily::new(&f, 5, 24, 5),
            Err(Error::ConditionViolated(_))
        ),
        "(q-1) does not divide lcm(5, 24) and must be rejected",
    )?;
    ensure(
        matches!(
            ProductFamily::new(&f, 14, 24, 13),
            Err(Error::ConditionViolated(_))
        ),
        "n1 = 13 exceeds the order of the first generator",
    )?;
    let f16 = gf(2, 4)?;
    ensure(
        matches!(
            ProductFamily::new(&f16, 3, 5, 2),
            Err(Error::ConditionViolated(_))
        ),
        "even-characteristic fields must be rejected",
    )?;
    let f529 = gf(23, 2)?;
    ensure(
        matches!(
            hso_mds_product(&f529, 48, 11, 10, 19),
            Err(Error::KOutOfRange { k: 19, max: 18 })
        ),
        "k = 19 exceeds kmax = 18 for (x1=48, x2=11, n1=10)",
    )
}

pub fn check_hso_product_35() -> CheckResult {
    let f = gf(13, 2)?;
    let spec = hso_mds_product(&f, 14, 24, 5, 2).map_err(|e| e.to_string())?;
    let code = grs_generator(&spec).map_err(|e| e.to_string())?;
    ensure(code.n() == 35 && code.k() == 2, "expected a [35,2] code")?;
    ensure(
        code.gram(1).map_err(|e| e.to_string())?.is_zero(),
        "conjugate Gram must vanish",
    )?;
    ensure(
        code.mds_certificate(1_000_000).map_err(|e| e.to_string())?,
        "the [35,2] code must certify as MDS",
    )?;
    ensure(
        matches!(
            hso_mds_product(&f, 14, 24, 5, 3),
            Err(Error::KOutOfRange { k: 3, max: 2 })
        ),
        "k = 3 exceeds kmax = 2 for (x1=14, x2=24, n1=5)",
    )
}

// ---------------------------------------------------------------------------
// column-constant existence conditions

pub fn check_alpha_cases_present() -> CheckResult {
    let table: &[(u32, u32)] = &[
        (3, 2),
        (3, 4),
        (5, 1),
        (5, 2),
        (5, 3),
        (5, 4),
        (13, 1),
        (13, 2),
        (13, 3),
        (13, 4),
    ];
    for &(p, h) in table {
        let f = gf(p, h)?;
        for e in 0..h {
            let rep = alpha_conditions(&f, e).map_err(|err| err.to_string())?;
            ensure(
                rep.case != AlphaCase::None,
                format!("GF({p}^{h}) at e={e}: expected a matching existence case"),
            )?;
        }
    }
    Ok(())
}

pub fn check_alpha_cases_absent() -> CheckResult {
    for (p, h) in [(3u32, 1u32), (3, 3)] {
        let f = gf(p, h)?;
        for e in 0..h {
            let rep = alpha_conditions(&f, e).map_err(|err| err.to_string())?;
            ensure(
                rep.case == AlphaCase::None,
                format!("GF({p}^{h}) at e={e}: no existence case may match"),
            )?;
        }
    }
    Ok(())
}

pub fn check_alpha_triples_char3() -> CheckResult {
    let rows: &[(u32, u32)] = &[
        (1, 0),
        (2, 0),
        (2, 1),
        (3, 0),
        (3, 1),
        (3, 2),
        (4, 0),
        (4, 1),
        (4, 2),
        (4, 3),
    ];
    for &(h, e) in rows {
        let f = gf(3, h)?;
        let tuple = find_alpha_tuple(&f, e, 3)
            .map_err(|err| err.to_string())?
            .ok_or(format!("GF(3^{h}) at e={e}: triple search came up empty"))?;
        ensure(
            tuple.values == vec![1, 1, 1],
            format!("GF(3^{h}) at e={e}: search must find (1, 1, 1) first"),
        )?;
    }
    Ok(())
}

pub fn check_reference_triples() -> CheckResult {
    let f3 = gf(3, 1)?;
    AlphaTuple::new(&f3, 0, vec![1, 1, 1]).map_err(|e| format!("GF(3): {e}"))?;
    let f9 = gf(3, 2)?;
    AlphaTuple::new(&f9, 0, vec![2, 1, 1]).map_err(|e| format!("GF(9) e=0: {e}"))?;
    AlphaTuple::new(&f9, 1, vec![1, 2, f9.w(6)]).map_err(|e| format!("GF(9) e=1: {e}"))?;
    let f27 = gf(3, 3)?;
    AlphaTuple::new(&f27, 0, vec![1, 2, 1]).map_err(|e| format!("GF(27) e=0: {e}"))?;
    AlphaTuple::new(&f27, 1, vec![f27.w(2), f27.w(7), 1])
        .map_err(|e| format!("GF(27) e=1: {e}"))?;
    AlphaTuple::new(&f27, 2, vec![f27.w(5), f27.w(11), 1])
        .map_err(|e| format!("GF(27) e=2: {e}"))?;
    let f81 = gf(3, 4)?;
    AlphaTuple::new(&f81, 1, vec![f81.w(42), f81.w(22), f81.w(2)])
        .map_err(|e| format!("GF(81) e=1: {e}"))?;
    AlphaTuple::new(&f81, 3, vec![f81.w(21), f81.w(41), f81.w(1)])
        .map_err(|e| format!("GF(81) e=3: {e}"))?;
    let f81p = gfm(3, 4, &[2, 0, 0, 2, 1])?;
    AlphaTuple::new(&f81p, 0, vec![f81p.w(6), f81p.w(54), f81p.w(5)])
        .map_err(|e| format!("GF(81) pinned e=0: {e}"))?;
    AlphaTuple::new(&f81p, 2, vec![f81p.w(1), f81p.w(6), 1])
        .map_err(|e| format!("GF(81) pinned e=2: {e}"))?;
    Ok(())
}

pub fn check_gf8_four_column_tuples() -> CheckResult {
    let f = gfm(2, 3, &[1, 1, 0, 1])?;
    let tuples: &[(u32, [u64; 4])] = &[
        (0, [0, 1, 6, 4]),
        (1, [0, 5, 2, 6]),
        (2, [6, 0, 1, 3]),
    ];
    for &(e, exps) in tuples {
        let values: Vec<FieldElement> = exps.iter().map(|&j| f.w(j)).collect();
        AlphaTuple::new(&f, e, values).map_err(|err| format!("GF(8) e={e}: {err}"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// arithmetic closed forms

pub fn check_gcd_examples() -> CheckResult {
    let cases: &[(u64, u32, u32, u64)] = &[(2, 1, 3, 1), (3, 1, 2, 4), (3, 2, 2, 2)];
    for &(p, r, s, want) in cases {
        let got = galois_gcd_formula(p, r, s).map_err(|e| e.to_string())?;
        ensure(
            got == want,
            format!("gcd(p^r+1, p^s-1) for p={p}, r={r}, s={s}: got {got}, want {want}"),
        )?;
    }
    Ok(())
}

pub fn check_sign_congruence_solutions() -> CheckResult {
    let cases: &[(u32, u32, u32, Option<u64>)] = &[
        (3, 2, 0, Some(2)),
        (3, 2, 1, Some(1)),
        (3, 4, 0, Some(20)),
        (3, 4, 1, Some(10)),
        (3, 4, 2, Some(4)),
        (3, 4, 3, Some(10)),
        (3, 3, 0, None),
        (3, 3, 1, None),
        (3, 3, 2, None),
        (5, 2, 0, Some(6)),
        (5, 2, 1, Some(2)),
        (13, 2, 0, Some(42)),
        (13, 2, 1, Some(6)),
        (3, 1, 0, None),
    ];
    for &(p, h, e, want) in cases {
        let f = gf(p, h)?;
        let got = solve_t0(&f, e).map_err(|err| err.to_string())?;
        ensure(
            got == want,
            format!("sign congruence for GF({p}^{h}) at e={e}: got {got:?}, want {want:?}"),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// quantum parameter derivation

pub fn check_eaqecc_gf4_extension() -> CheckResult {
    let ext = gf4_extension()?;
    let (q, qd) = derive_eaqecc(&ext, 1, Target::Subfield, None).map_err(|e| e.to_string())?;
    expect_params("primal", &q, 2, 6, 0, 4, 2)?;
    expect_params("dual side", &qd, 2, 6, 2, 2, 0)?;
    ensure(q.to_string() == "[[6,0,4;2]]_2", "primal display form")?;
    ensure(qd.to_string() == "[[6,2,2;0]]_2", "dual display form")?;
    ensure(
        matches!(
            derive_eaqecc(&ext, 0, Target::Subfield, None),
            Err(Error::SubfieldUnavailable)
        ),
        "subfield alphabet requires the conjugate twist",
    )
}

pub fn check_eaqecc_grs_40() -> CheckResult {
    let f = gf(3, 4)?;
    let spec = hso_mds_coset(&f, 5, 8, 4).map_err(|e| e.to_string())?;
    let code = grs_generator(&spec).map_err(|e| e.to_string())?;
    let (q, qd) = derive_eaqecc(&code, 2, Target::Subfield, None).map_err(|e| e.to_string())?;
    expect_params("dual side", &qd, 9, 40, 32, 5, 0)?;
    ensure(qd.mds, "the [[40,32,5;0]] code must meet the bound with equality")?;
    expect_params("primal", &q, 9, 40, 0, 37, 32)
}

pub fn check_eaqecc_complementary_dual_pair() -> CheckResult {
    let f = gf(2, 2)?;
    let gen = hullforge::Matrix::from_rows(&[vec![1, f.w(1)]]);
    let code = LinearCode::new(f, &gen).map_err(|e| e.to_string())?;
    // At the conjugate twist every doubly-nonzero vector of length 2 is
    // self-orthogonal over GF(4); the complementary-dual pair lives at e=0.
    ensure(
        code.classify(0).map_err(|e| e.to_string())?.lcd,
        "the seed [2,1] code must be complementary-dual at e=0",
    )?;
    let (q, qd) = derive_eaqecc(&code, 0, Target::SameField, None).map_err(|e| e.to_string())?;
    expect_params("primal", &q, 4, 2, 1, 2, 1)?;
    expect_params("dual side", &qd, 4, 2, 1, 2, 1)?;
    ensure(q.mds, "[[2,1,2;1]] meets the bound with equality")?;
    let r = rates(&q).map_err(|e| e.to_string())?;
    ensure(r.rate == Ratio::new(1, 2), "rate must be exactly 1/2")?;
    ensure(r.net_rate == Ratio::new(0, 1), "net rate must be exactly 0")?;
    ensure(r.rate_at_least_half, "rate >= 1/2 must hold")?;
    ensure(!r.net_rate_positive, "net rate must not count as positive")
}

pub fn check_ea_singleton_examples() -> CheckResult {
    let cases: &[(EaqeccParams, bool, bool)] = &[
        (mk_params(9, 40, 32, 5, 0), true, true),
        (mk_params(5, 7, 7, 1, 0), true, true),
        (mk_params(2, 6, 2, 4, 4), true, false),
        (mk_params(3, 15, 0, 13, 11), true, false),
    ];
    for (p, bound_ok, mds) in cases {
        let rep = ea_singleton_check(p);
        ensure(
            rep.bound_ok == *bound_ok && rep.mds == *mds,
            format!(
                "{p}: got bound_ok={}, mds={}; want bound_ok={bound_ok}, mds={mds}",
                rep.bound_ok, rep.mds
            ),
        )?;
    }
    Ok(())
}

pub fn check_rate_examples() -> CheckResult {
    let good = rates(&mk_params(2, 6, 4, 2, 2)).map_err(|e| e.to_string())?;
    ensure(good.rate == Ratio::new(2, 3), "rate of [[6,4,2;2]] must be 2/3")?;
    ensure(good.net_rate == Ratio::new(1, 3), "net rate must be 1/3")?;
    ensure(
        good.rate_at_least_half && good.net_rate_positive,
        "both rate predicates must hold for [[6,4,2;2]]",
    )?;
    let poor = rates(&mk_params(3, 5, 0, 3, 2)).map_err(|e| e.to_string())?;
    ensure(poor.rate == Ratio::new(0, 1), "rate of [[5,0,3;2]] must be 0")?;
    ensure(poor.net_rate == Ratio::new(-2, 5), "net rate must be -2/5")?;
    ensure(
        !poor.rate_at_least_half && !poor.net_rate_positive,
        "both rate predicates must fail for [[5,0,3;2]]",
    )
}

// ---------------------------------------------------------------------------
// frozen parameter lists

pub fn check_parameter_list_gf4() -> CheckResult {
    // Over GF(4) the conjugate twist has no scaling element, so the smaller
    // hull dimensions are not reachable by column scaling; the parameter
    // list follows from the derivation template applied to the base
    // [6,2,4] code with dual distance 2 and full hull.
    let ext = gf4_extension()?;
    ensure(
        ext.hull_dimension(1).map_err(|e| e.to_string())? == 2,
        "base hull must be full",
    )?;
    ensure(dist(&ext)? == 4, "base distance must be 4")?;
    ensure(
        dist(&ext.dual(1).map_err(|e| e.to_string())?)? == 2,
        "base dual distance must be 2",
    )?;
    ensure(
        matches!(reduce_hull_dim(&ext, 1, 1), Err(Error::NoScalingElement)),
        "hull reduction over GF(4) must be impossible",
    )?;
    let expected: &[(usize, [usize; 4], [usize; 4])] = &[
        (2, [6, 0, 4, 2], [6, 2, 2, 0]),
        (1, [6, 1, 4, 3], [6, 3, 2, 1]),
        (0, [6, 2, 4, 4], [6, 4, 2, 2]),
    ];
    for &(l, [n, k, d, c], [dn, dk, dd, dc]) in expected {
        let q = mk_params(2, n, k, d, c);
        let qd = mk_params(2, dn, dk, dd, dc);
        ensure(
            k == 2 - l && c == 4 - l && dk == 4 - l && dc == 2 - l,
            format!("template arithmetic broken at hull dim {l}"),
        )?;
        ensure(
            ea_singleton_check(&q).bound_ok && ea_singleton_check(&qd).bound_ok,
            format!("bound must hold for the hull-{l} pair"),
        )?;
    }
    Ok(())
}

pub fn check_parameter_list_length_13() -> CheckResult {
    let so9 = fx(fixtures::GF9_13_2)?;
    for l in [2usize, 1, 0] {
        let v = propagate(&so9, 1, 0, l, Target::Subfield, None).map_err(|e| e.to_string())?;
        ensure(v.len() == 2, "propagation must yield both quantum codes")?;
        expect_params(
            &format!("length-13 primal at hull {l}"),
            &v[0],
            3,
            13,
            2 - l,
            11,
            11 - l,
        )?;
        expect_params(
            &format!("length-13 dual at hull {l}"),
            &v[1],
            3,
            13,
            11 - l,
            2,
            2 - l,
        )?;
    }
    Ok(())
}

pub fn check_parameter_list_length_15() -> CheckResult {
    let so9 = fx(fixtures::GF9_13_2)?;
    for l in [2usize, 1, 0] {
        let v = propagate(&so9, 1, 2, l, Target::Subfield, None).map_err(|e| e.to_string())?;
        ensure(v.len() == 2, "propagation must yield both quantum codes")?;
        expect_params(
            &format!("length-15 primal at hull {l}"),
            &v[0],
            3,
            15,
            2 - l,
            13,
            13 - l,
        )?;
        expect_params(
            &format!("length-15 dual at hull {l}"),
            &v[1],
            3,
            15,
            13 - l,
            2,
            2 - l,
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// datasets

pub fn check_dataset_3() -> CheckResult {
    dataset_matches(3)
}
pub fn check_dataset_6() -> CheckResult {
    dataset_matches(6)
}
pub fn check_dataset_7() -> CheckResult {
    dataset_matches(7)?;
    let csv = emit_table(7).map_err(|e| e.to_string())?;
    ensure(
        csv.starts_with("q,n',t,n,k,d,c\n3^4,5,8,40,32,5,0\n"),
        "first derived row must be the [[40,32,5;0]] code over GF(9)",
    )
}
pub fn check_dataset_8() -> CheckResult {
    dataset_matches(8)
}

fn dataset_matches(id: u32) -> CheckResult {
    let got = emit_table(id).map_err(|e| e.to_string())?;
    let want = expected_table_csv(id).map_err(|e| e.to_string())?;
    if got != want {
        for (g, w) in got.lines().zip(want.lines()) {
            if g != w {
                return Err(format!("dataset {id}: derived row `{g}` != frozen row `{w}`"));
            }
        }
        return Err(format!(
            "dataset {id}: line counts differ (derived {}, frozen {})",
            got.lines().count(),
            want.lines().count()
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// file format

pub fn check_codefile_roundtrip() -> CheckResult {
    for &(name, text) in fixtures::ALL {
        let code = parse_code_file(text).map_err(|e| format!("{name}: {e}"))?;
        let back = serialize_code(&code);
        ensure(back == text, format!("{name}: serialize(parse(t)) != t"))?;
    }
    Ok(())
}

pub fn check_codefile_variants() -> CheckResult {
    // Omitting the modulus selects the canonical one.
    let bare = "p=2 h=1 n=4 k=2\n1 0 1 0\n0 1 0 1\n";
    let a = parse_code_file(bare).map_err(|e| e.to_string())?;
    let b = fx(fixtures::GF2_4_2)?;
    ensure(a == b, "canonical-modulus shorthand must parse to the same code")?;
    // Exponents reduce modulo the multiplicative order.
    let wrapped = "p=2 h=3 modulus=1,1,0,1 n=2 k=1\nw^9 w^2\n";
    let plain = "p=2 h=3 modulus=1,1,0,1 n=2 k=1\nw^2 w^2\n";
    let aw = parse_code_file(wrapped).map_err(|e| e.to_string())?;
    let bw = parse_code_file(plain).map_err(|e| e.to_string())?;
    ensure(aw == bw, "w^9 must reduce to w^2 over GF(8)")?;
    // Missing rows are reported with a location.
    let short = "p=2 h=1 n=4 k=2\n1 0 1 0\n";
    match parse_code_file(short) {
        Err(CliError::Parse { line: 3, .. }) => Ok(()),
        other => Err(format!(
            "missing generator row must be a parse error at line 3, got {other:?}"
        )),
    }
}

// ---------------------------------------------------------------------------
// GRS basics retained as spot checks

pub fn check_grs_membership_shape() -> CheckResult {
    let f = gf(3, 4)?;
    let spec = hso_mds_coset(&f, 2, 7, 2).map_err(|e| e.to_string())?;
    let g = GrsSpec::new(
        spec.field().clone(),
        spec.locators.clone(),
        spec.multipliers.clone(),
        2,
    )
    .map_err(|e| e.to_string())?;
    ensure(g.n() == 14, "spec length must be 14")?;
    let code = grs_generator(&g).map_err(|e| e.to_string())?;
    ensure(code.n() == 14 && code.k() == 2, "generated code must be [14,2]")
}

pub fn all_checks() -> Vec<Check> {
    macro_rules! checks {
        ($(($name:literal, $f:ident)),+ $(,)?) => {
            vec![$(Check { name: $name, run: $f }),+]
        };
    }
    checks![
        ("hull-dims-gf8-8-5", check_hull_dims_gf8_8_5),
        ("dual-hull-match-gf8-8-5", check_dual_hull_match_gf8_8_5),
        ("hull-dims-gf8-10-4", check_hull_dims_gf8_10_4),
        ("self-dual-gf81-12-6", check_self_dual_gf81_12_6),
        ("extend-gf2-4-2", check_extend_gf2_4_2),
        ("extend-gf2-6-3", check_extend_gf2_6_3),
        ("extend-gf4-4-2-both-pairs", check_extend_gf4_4_2_both_pairs),
        ("extend-gf4-11-5", check_extend_gf4_11_5),
        ("extend-gf9-13-2", check_extend_gf9_13_2),
        ("extend-gf64-two-columns", check_extend_gf64_two_columns),
        ("extend-gf64-three-columns", check_extend_gf64_three_columns),
        ("extend-gf64-reference-triple", check_extend_gf64_reference_triple),
        ("extend-gf81-12-6", check_extend_gf81_12_6),
        ("extend-one-gf9-14-4", check_extend_one_gf9_14_4),
        ("extend-one-gf169-11-4", check_extend_one_gf169_11_4),
        ("extend-one-target-range", check_extend_one_target_range),
        ("reduce-gf4-no-scaling-element", check_reduce_gf4_no_scaling_element),
        ("reduce-grs-14", check_reduce_grs_14),
        ("extend-grs-one", check_extend_grs_one),
        ("coset-shape-2-7", check_coset_shape_2_7),
        ("coset-full-orbit", check_coset_full_orbit),
        ("coset-rejections", check_coset_rejections),
        ("coset-u-closed-form", check_coset_u_closed_form),
        ("hso-coset-40", check_hso_coset_40),
        ("hso-coset-70", check_hso_coset_70),
        ("product-shape-169", check_product_shape_169),
        ("product-rejections", check_product_rejections),
        ("hso-product-35", check_hso_product_35),
        ("alpha-cases-present", check_alpha_cases_present),
        ("alpha-cases-absent", check_alpha_cases_absent),
        ("alpha-triples-char3", check_alpha_triples_char3),
        ("reference-triples", check_reference_triples),
        ("gf8-four-column-tuples", check_gf8_four_column_tuples),
        ("gcd-examples", check_gcd_examples),
        ("sign-congruence-solutions", check_sign_congruence_solutions),
        ("eaqecc-gf4-extension", check_eaqecc_gf4_extension),
        ("eaqecc-grs-40", check_eaqecc_grs_40),
        ("eaqecc-complementary-dual-pair", check_eaqecc_complementary_dual_pair),
        ("ea-singleton-examples", check_ea_singleton_examples),
        ("rate-examples", check_rate_examples),
        ("parameter-list-gf4", check_parameter_list_gf4),
        ("parameter-list-length-13", check_parameter_list_length_13),
        ("parameter-list-length-15", check_parameter_list_length_15),
        ("dataset-3", check_dataset_3),
        ("dataset-6", check_dataset_6),
        ("dataset-7", check_dataset_7),
        ("dataset-8", check_dataset_8),
        ("codefile-roundtrip", check_codefile_roundtrip),
        ("codefile-variants", check_codefile_variants),
        ("grs-membership-shape", check_grs_membership_shape),
    ]
}

/// Run every check; returns (exit code, full report).
pub fn run_verify() -> (i32, String) {
    let mut out = String::new();
    let mut failed = 0usize;
    let checks = all_checks();
    for check in &checks {
        match (check.run)() {
            Ok(()) => out.push_str(&format!("ok {}\n", check.name)),
            Err(msg) => {
                failed += 1;
                out.push_str(&format!("FAIL {}: {msg}\n", check.name));
            }
        }
    }
    out.push_str(&format!("verify: {} checks, {failed} failed\n", checks.len()));
    (if failed > 0 { 1 } else { 0 }, out)
}
