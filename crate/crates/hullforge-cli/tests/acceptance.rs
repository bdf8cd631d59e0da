//! Acceptance gate: one test per headline capability, each delegating to
//! the built-in verification checks plus extra recomputation, and each
//! bounded by a wall-clock sanity limit. The tests share a lock so the
//! elapsed times are honest solo measurements on any machine.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hullforge::{
    ea_singleton_check, grs_generator, hso_mds_coset, hso_mds_product, galois_gcd_formula,
    hull_extension_determinant, u_vector, CosetFamily, EaqeccParams, Field, LinearCode, Matrix,
    ProductFamily,
};
use hullforge_cli::tables::{
    factor_prime_power, TABLE3_Q, TABLE3_ROWS, TABLE6_ROWS, TABLE7_ROWS, TABLE8_ROWS,
};
use hullforge_cli::verify;

static LOCK: Mutex<()> = Mutex::new(());

fn finish(name: &str, started: Instant, limit: Duration, result: Result<(), String>) {
    if let Err(msg) = result {
        panic!("{name}: {msg}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < limit,
        "{name}: took {elapsed:?}, exceeding the {limit:?} sanity limit"
    );
}

fn run_all(checks: &[fn() -> Result<(), String>]) -> Result<(), String> {
    for check in checks {
        check()?;
    }
    Ok(())
}

fn binomial_capped(n: usize, k: usize, cap: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap {
            return cap + 1;
        }
    }
    acc
}

#[test]
fn criterion_1_hull_fixtures_and_duality_classes() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = run_all(&[
        verify::check_hull_dims_gf8_8_5,
        verify::check_dual_hull_match_gf8_8_5,
        verify::check_hull_dims_gf8_10_4,
        verify::check_self_dual_gf81_12_6,
    ]);
    finish("hull fixtures", t0, Duration::from_secs(30), result);
}

#[test]
fn criterion_2_self_orthogonal_extensions_reproduce_reference_codes() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = run_all(&[
        verify::check_alpha_cases_present,
        verify::check_alpha_cases_absent,
        verify::check_alpha_triples_char3,
        verify::check_reference_triples,
        verify::check_gf8_four_column_tuples,
        verify::check_extend_gf2_4_2,
        verify::check_extend_gf2_6_3,
        verify::check_extend_gf4_4_2_both_pairs,
        verify::check_extend_gf4_11_5,
        verify::check_extend_gf9_13_2,
        verify::check_extend_gf64_two_columns,
        verify::check_extend_gf64_three_columns,
        verify::check_extend_gf64_reference_triple,
        verify::check_extend_gf81_12_6,
    ]);
    finish("length extensions", t0, Duration::from_secs(60), result);
}

#[test]
fn criterion_3_prescribed_hull_extension_and_reduction() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = run_all(&[
        verify::check_extend_one_gf9_14_4,
        verify::check_extend_one_gf169_11_4,
        verify::check_extend_one_target_range,
        verify::check_reduce_gf4_no_scaling_element,
        verify::check_reduce_grs_14,
    ]);
    finish("prescribed-hull operations", t0, Duration::from_secs(30), result);
}

#[test]
fn criterion_4_grs_family_constructions() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = run_all(&[
        verify::check_coset_shape_2_7,
        verify::check_coset_full_orbit,
        verify::check_coset_rejections,
        verify::check_coset_u_closed_form,
        verify::check_hso_coset_40,
        verify::check_hso_coset_70,
        verify::check_product_shape_169,
        verify::check_product_rejections,
        verify::check_hso_product_35,
        verify::check_extend_grs_one,
        verify::check_grs_membership_shape,
    ]);
    finish("GRS constructions", t0, Duration::from_secs(60), result);
}

#[test]
fn criterion_5_family_tables_kmax_and_mds_certificates() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = criterion_5_impl();
    finish("family tables", t0, Duration::from_secs(300), result);
}

fn criterion_5_impl() -> Result<(), String> {
    const CERT_BUDGET: u64 = 1_000_000;
    let f81 = Field::new(3, 4, None).map_err(|e| e.to_string())?;
    assert_eq!(TABLE3_Q, 81);
    for &(nprime, t, kmax) in TABLE3_ROWS {
        let fam = CosetFamily::new(&f81, nprime, t)
            .map_err(|e| format!("coset family (n'={nprime}, t={t}): {e}"))?;
        if fam.kmax() != kmax {
            return Err(format!(
                "coset (n'={nprime}, t={t}): kmax {} != frozen {kmax}",
                fam.kmax()
            ));
        }
        let n = nprime * t;
        cert_family_code(&f81, n, kmax, CERT_BUDGET, |k| {
            hso_mds_coset(&f81, nprime, t, k).map_err(|e| e.to_string())
        })?;
    }
    for &(q, x1, x2, n1, kmax) in TABLE6_ROWS {
        let field = Field::new(factor_prime_power(q).unwrap().0, factor_prime_power(q).unwrap().1, None)
            .map_err(|e| e.to_string())?;
        let fam = ProductFamily::new(&field, x1, x2, n1)
            .map_err(|e| format!("product family over GF({q}): {e}"))?;
        if fam.kmax() != kmax {
            return Err(format!(
                "product (q={q}, n1={n1}): kmax {} != frozen {kmax}",
                fam.kmax()
            ));
        }
        let n = n1 * fam.n2;
        // Certify the smaller lengths fully; for the longest codes the
        // subset count at any useful k exceeds the certification budget.
        if n <= 143 {
            cert_family_code(&field, n, kmax, CERT_BUDGET, |k| {
                hso_mds_product(&field, x1, x2, n1, k).map_err(|e| e.to_string())
            })?;
        } else {
            let spec = hso_mds_product(&field, x1, x2, n1, kmax).map_err(|e| e.to_string())?;
            let code = grs_generator(&spec).map_err(|e| e.to_string())?;
            let e = field.h() / 2;
            if !code.gram(e).map_err(|e| e.to_string())?.is_zero() {
                return Err(format!("product code over GF({q}) lost self-orthogonality"));
            }
        }
    }
    Ok(())
}

/// Build the family code at its largest dimension, verify conjugate
/// self-orthogonality, then certify the MDS property at the largest
/// dimension whose subset count fits the budget.
fn cert_family_code(
    field: &Field,
    n: usize,
    kmax: usize,
    budget: u64,
    build: impl Fn(usize) -> Result<hullforge::GrsSpec, String>,
) -> Result<(), String> {
    let e = field.h() / 2;
    let spec = build(kmax)?;
    let code = grs_generator(&spec).map_err(|e| e.to_string())?;
    if code.n() != n || code.k() != kmax {
        return Err(format!(
            "family code is [{},{}], expected [{n},{kmax}]",
            code.n(),
            code.k()
        ));
    }
    if !code.gram(e).map_err(|e| e.to_string())?.is_zero() {
        return Err(String::from("family code lost conjugate self-orthogonality"));
    }
    let mut kcert = 0usize;
    for k in (1..=kmax).rev() {
        if binomial_capped(n, k, budget as u128) <= budget as u128 {
            kcert = k;
            break;
        }
    }
    if kcert == 0 {
        return Err(format!("no certifiable dimension for n={n}"));
    }
    let code = grs_generator(&build(kcert)?).map_err(|e| e.to_string())?;
    match code.mds_certificate(budget) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("[{n},{kcert}] family code failed the MDS certificate")),
        Err(e) => Err(format!("MDS certificate: {e}")),
    }
}

#[test]
fn criterion_6_quantum_parameter_tables_and_example_lists() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = run_all(&[
        verify::check_dataset_3,
        verify::check_dataset_6,
        verify::check_dataset_7,
        verify::check_dataset_8,
        criterion_6_singleton_recheck,
        verify::check_eaqecc_gf4_extension,
        verify::check_eaqecc_grs_40,
        verify::check_eaqecc_complementary_dual_pair,
        verify::check_ea_singleton_examples,
        verify::check_rate_examples,
        verify::check_parameter_list_gf4,
        verify::check_parameter_list_length_13,
        verify::check_parameter_list_length_15,
    ]);
    finish("quantum parameter tables", t0, Duration::from_secs(300), result);
}

/// Every frozen quantum MDS row must meet the EA-Singleton bound with
/// equality when rebuilt directly from its columns.
fn criterion_6_singleton_recheck() -> Result<(), String> {
    let mk = |q: u32, [n, k, d, c]: [usize; 4]| -> Result<EaqeccParams, String> {
        let (p, h) = factor_prime_power(q).ok_or("bad q")?;
        Ok(EaqeccParams {
            alphabet: p.pow(h / 2),
            n,
            k,
            d,
            c,
            mds: false,
            exact: true,
            provenance: String::new(),
        })
    };
    for &(q, _, _, _, quad) in TABLE7_ROWS {
        let p = mk(q, quad)?;
        let rep = ea_singleton_check(&p);
        if !rep.mds {
            return Err(format!("{p} must meet the bound with equality"));
        }
    }
    for &(q, _, _, _, _, quad) in TABLE8_ROWS {
        let p = mk(q, quad)?;
        let rep = ea_singleton_check(&p);
        if !rep.mds {
            return Err(format!("{p} must meet the bound with equality"));
        }
    }
    Ok(())
}

#[test]
fn criterion_7_randomized_hull_invariants() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = criterion_7_impl();
    finish("randomized invariants", t0, Duration::from_secs(300), result);
}

fn criterion_7_impl() -> Result<(), String> {
    const CODES_PER_FIELD: usize = 500;
    const DIST_STATES: u64 = 20_000;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let fields = [
        (2u32, 1u32),
        (3, 1),
        (2, 2),
        (2, 3),
        (3, 2),
        (2, 4),
        (5, 2),
        (3, 3),
    ];
    for (p, h) in fields {
        let f = Field::new(p, h, None).map_err(|e| e.to_string())?;
        let q = f.q() as u64;
        for trial in 0..CODES_PER_FIELD {
            let n = rng.gen_range(1..=12usize);
            let rows = rng.gen_range(1..=n);
            let mut gen = Matrix::zero(rows, n);
            for r in 0..rows {
                for c in 0..n {
                    gen.set(r, c, rng.gen_range(0..q as u32));
                }
            }
            let code = LinearCode::from_row_space(f.clone(), &gen);
            if code.k() == 0 {
                continue;
            }
            check_code_invariants(&f, &code, q, DIST_STATES)
                .map_err(|msg| format!("GF({p}^{h}) trial {trial}: {msg}"))?;
        }
    }
    Ok(())
}

fn check_code_invariants(
    f: &Field,
    code: &LinearCode,
    q: u64,
    dist_states: u64,
) -> Result<(), String> {
    let h = f.h();
    let n = code.n();
    let k = code.k();
    for e in 0..h {
        let mirror = (h - e) % h;
        // hull() internally cross-checks the intersection dimension against
        // three rank formulas and errors on any disagreement.
        let hull = code.hull(e).map_err(|err| format!("hull e={e}: {err}"))?;
        let l = hull.k();
        let explicit = k - code
            .gram(e)
            .map_err(|err| err.to_string())?
            .rank(f);
        if l != explicit {
            return Err(format!("hull dim {l} != k - rank(gram) = {explicit} at e={e}"));
        }
        let l_mirror = code
            .hull_dimension(mirror)
            .map_err(|err| err.to_string())?;
        if l != l_mirror {
            return Err(format!("hull dims differ between twists {e} and {mirror}"));
        }
        let dual = code.dual(e).map_err(|err| err.to_string())?;
        let dual_hull = dual.hull(mirror).map_err(|err| err.to_string())?;
        if hull != dual_hull {
            return Err(format!("hull at e={e} differs from the mirrored dual hull"));
        }
        let back = dual.dual(mirror).map_err(|err| err.to_string())?;
        if &back != code {
            return Err(format!("double dual at twists ({e}, {mirror}) changed the code"));
        }
        let cls = code.classify(e).map_err(|err| err.to_string())?;
        if cls.self_orthogonal != (l == k)
            || cls.lcd != (l == 0)
            || cls.self_dual != (l == k && 2 * k == n)
        {
            return Err(format!("classification flags disagree with hull dim {l} at e={e}"));
        }
    }
    // Two independent distance strategies must agree exactly.
    if k < n && q.pow(k as u32) <= dist_states {
        let a = code
            .min_distance_enumerate(dist_states)
            .map_err(|err| err.to_string())?;
        let b = code
            .min_distance_subsets(dist_states)
            .map_err(|err| err.to_string())?;
        if !(a.exact && b.exact && a.d == b.d) {
            return Err(format!(
                "distance strategies disagree: {} (exact {}) vs {} (exact {})",
                a.d, a.exact, b.d, b.exact
            ));
        }
        if a.d > n - k + 1 {
            return Err(format!("distance {} violates the Singleton bound", a.d));
        }
    }
    Ok(())
}

#[test]
fn criterion_8_closed_form_cross_checks() {
    let _g = LOCK.lock().unwrap();
    let t0 = Instant::now();
    let result = run_all(&[
        verify::check_gcd_examples,
        verify::check_sign_congruence_solutions,
        criterion_8_gcd_exhaustive,
        criterion_8_u_closed_forms,
        criterion_8_determinants,
    ]);
    finish("closed-form cross-checks", t0, Duration::from_secs(60), result);
}

fn criterion_8_gcd_exhaustive() -> Result<(), String> {
    for p in [2u64, 3, 5, 7, 13] {
        for r in 1..=8u32 {
            for s in 1..=8u32 {
                let formula = galois_gcd_formula(p, r, s).map_err(|e| e.to_string())?;
                let a = p.pow(r) as u128 + 1;
                let b = p.pow(s) as u128 - 1;
                let (mut x, mut y) = (a, b);
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                if formula as u128 != x {
                    return Err(format!(
                        "gcd formula for p={p}, r={r}, s={s}: {formula} != {x}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn criterion_8_u_closed_forms() -> Result<(), String> {
    let f81 = Field::new(3, 4, None).map_err(|e| e.to_string())?;
    for &(nprime, t, _) in TABLE3_ROWS {
        let fam = CosetFamily::new(&f81, nprime, t).map_err(|e| e.to_string())?;
        let direct = u_vector(&f81, &fam.locators()).map_err(|e| e.to_string())?;
        if fam.u_closed_form() != direct {
            return Err(format!("coset u closed form differs for (n'={nprime}, t={t})"));
        }
    }
    for &(q, x1, x2, n1, _) in TABLE6_ROWS {
        let (p, h) = factor_prime_power(q).unwrap();
        let f = Field::new(p, h, None).map_err(|e| e.to_string())?;
        let fam = ProductFamily::new(&f, x1, x2, n1).map_err(|e| e.to_string())?;
        let direct = u_vector(&f, &fam.locators()).map_err(|e| e.to_string())?;
        if fam.u_closed_form() != direct {
            return Err(format!("product u closed form differs for q={q}, n1={n1}"));
        }
    }
    Ok(())
}

fn criterion_8_determinants() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let fields = [(3u32, 2u32), (5, 2), (13, 1), (7, 1)];
    for trial in 0..200 {
        let (p, h) = fields[trial % fields.len()];
        let f = Field::new(p, h, None).map_err(|e| e.to_string())?;
        let e = rng.gen_range(0..h);
        let k = rng.gen_range(2..=8usize);
        let l = rng.gen_range(0..k);
        let alpha = rng.gen_range(1..f.q());
        let beta = rng.gen_range(1..f.q());
        let closed = hull_extension_determinant(&f, e, k, l, alpha, beta)
            .map_err(|err| err.to_string())?;
        // Explicit determinant of (beta^a - 1) I + alpha^a J, size k-l.
        let a = (p as u64).pow(e) + 1;
        let ba = f.pow(beta, a);
        let aa = f.pow(alpha, a);
        let m = k - l;
        let mut block = Matrix::zero(m, m);
        for r in 0..m {
            for c in 0..m {
                let mut v = aa;
                if r == c {
                    v = f.add(v, f.sub(ba, 1));
                }
                block.set(r, c, v);
            }
        }
        let explicit = block.det(&f);
        if closed != explicit {
            return Err(format!(
                "determinant mismatch over GF({p}^{h}) at e={e}, k={k}, l={l}: \
                 closed {closed} vs explicit {explicit}"
            ));
        }
    }
    Ok(())
}
