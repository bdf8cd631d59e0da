//! Command-line companion to the `hullforge` library: a text file format
//! for linear codes, the frozen datasets with re-deriving CSV emitters,
//! a built-in verification suite, and the `hullforge` binary itself.

pub mod codefile;
pub mod tables;
pub mod verify;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use codefile::{parse_code_file, serialize_code, CliError, CliResult};
use hullforge::{
    alpha_conditions, closed_form_pair, derive_eaqecc, extend_one_with_hull,
    extend_self_orthogonal, find_alpha_tuple, grs_generator, hso_mds_coset, hso_mds_product,
    propagate, rates, reduce_hull_dim, AlphaCase, AlphaTuple, CosetFamily, EaqeccParams, Field,
    FieldElement, LinearCode, ProductFamily, Target,
};

/// Environment variable supplying the default distance-search budget.
pub const BUDGET_ENV: &str = "HULLFORGE_BUDGET";

#[derive(Parser)]
#[command(
    name = "hullforge",
    about = "Galois hulls of linear codes, self-orthogonal length extensions, \
             conjugate self-orthogonal MDS constructions, and entanglement-assisted \
             quantum code parameters — all in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe GF(p^h): modulus, generator, subfield structure
    FieldInfo { p: u32, h: u32 },
    /// Analyze a code file: distances, hull dimensions, duality classes
    Analyze {
        file: PathBuf,
        /// Restrict the duality-class report to one twist
        #[arg(long)]
        e: Option<u32>,
        /// Search budget for the distance computations
        #[arg(long)]
        dist_budget: Option<u64>,
    },
    /// Append i constant columns, preserving self-orthogonality
    Extend {
        file: PathBuf,
        #[arg(long)]
        e: u32,
        /// Number of columns to append
        #[arg(long)]
        i: usize,
        /// Comma-separated column constants (found automatically if omitted)
        #[arg(long)]
        alphas: Option<String>,
        /// Scaling applied to the pivot columns; must satisfy beta^(p^e+1) = 1
        #[arg(long, default_value = "1")]
        beta: String,
    },
    /// Append one column, prescribing the resulting hull dimension
    ExtendOne {
        file: PathBuf,
        #[arg(long)]
        e: u32,
        /// Target hull dimension (at most k-1)
        #[arg(long)]
        l: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "1")]
        lambda: String,
    },
    /// Scale pivot columns of a self-orthogonal code to shrink its hull to l
    ReduceHull {
        file: PathBuf,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        l: usize,
    },
    /// Conjugate self-orthogonal MDS code on a union of multiplicative cosets
    HsoCoset {
        q: u32,
        nprime: usize,
        t: usize,
        k: usize,
    },
    /// Conjugate self-orthogonal MDS code on a product of two cyclic groups
    HsoProduct {
        q: u32,
        x1: u64,
        x2: u64,
        n1: usize,
        k: usize,
    },
    /// Derive both entanglement-assisted quantum codes from a code's hull
    Eaqecc {
        file: PathBuf,
        #[arg(long)]
        e: u32,
        /// Emit parameters over the quadratic subfield (conjugate twist only)
        #[arg(long)]
        subfield: bool,
    },
    /// Extend by i columns, reduce the hull to l, and derive quantum codes
    Propagate {
        file: PathBuf,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        subfield: bool,
    },
    /// Emit one of the bundled datasets (3, 6, 7, 8) as CSV, re-derived
    Table { id: u32 },
    /// Existence report for the extension column constants over GF(p^h)
    Alphas { p: u32, h: u32, e: u32, i: usize },
    /// Run the built-in verification suite
    Verify,
}

/// Run one command line (without argv[0]); returns (exit code, output).
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let full = std::iter::once(OsString::from("hullforge"))
        .chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    if matches!(cli.cmd, Cmd::Verify) {
        return verify::run_verify();
    }
    match dispatch(cli.cmd) {
        Ok(out) => (0, out),
        Err(err) => (err.exit_code(), format!("error: {err}\n")),
    }
}

fn dispatch(cmd: Cmd) -> CliResult<String> {
    match cmd {
        Cmd::FieldInfo { p, h } => cmd_field_info(p, h),
        Cmd::Analyze { file, e, dist_budget } => cmd_analyze(&file, e, dist_budget),
        Cmd::Extend { file, e, i, alphas, beta } => cmd_extend(&file, e, i, alphas.as_deref(), &beta),
        Cmd::ExtendOne { file, e, l, alpha, beta, lambda } => {
            cmd_extend_one(&file, e, l, &alpha, &beta, &lambda)
        }
        Cmd::ReduceHull { file, e, l } => cmd_reduce_hull(&file, e, l),
        Cmd::HsoCoset { q, nprime, t, k } => cmd_hso_coset(q, nprime, t, k),
        Cmd::HsoProduct { q, x1, x2, n1, k } => cmd_hso_product(q, x1, x2, n1, k),
        Cmd::Eaqecc { file, e, subfield } => cmd_eaqecc(&file, e, subfield),
        Cmd::Propagate { file, e, i, l, subfield } => cmd_propagate(&file, e, i, l, subfield),
        Cmd::Table { id } => tables::emit_table(id),
        Cmd::Alphas { p, h, e, i } => cmd_alphas(p, h, e, i),
        // Handled in run_command so a failing report is printed verbatim.
        Cmd::Verify => {
            let (_, out) = verify::run_verify();
            Ok(out)
        }
    }
}

fn load(path: &Path) -> CliResult<LinearCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_code_file(&text)
}

fn resolve_budget(flag: Option<u64>) -> CliResult<Option<u64>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse::<u64>().map(Some).map_err(|_| {
            CliError::Usage(format!("{BUDGET_ENV} must be an unsigned integer, got '{s}'"))
        }),
        Err(_) => Ok(None),
    }
}

fn parse_element(field: &Field, what: &str, s: &str) -> CliResult<FieldElement> {
    field
        .parse(s.trim())
        .map_err(|e| CliError::Usage(format!("bad {what} literal '{s}': {e}")))
}

fn fmt_seq(field: &Field, values: &[FieldElement]) -> String {
    values
        .iter()
        .map(|&v| field.format(v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn field_label(f: &Field) -> String {
    if f.h() == 1 {
        format!("GF({})", f.p())
    } else {
        format!("GF({}^{})", f.p(), f.h())
    }
}

fn cmd_field_info(p: u32, h: u32) -> CliResult<String> {
    let f = Field::new(p, h, None)?;
    let mut out = format!("{}: q={}\n", field_label(&f), f.q());
    out.push_str(&format!(
        "modulus: {} (encoding {})\n",
        f.modulus_string(),
        f.modulus_encoding()
    ));
    out.push_str(&format!(
        "generator: {} (order {})\n",
        f.format(f.omega()),
        f.q() - 1
    ));
    if let Some(sq) = f.sqrt_q() {
        out.push_str(&format!("sqrt(q): {sq}\n"));
    }
    out.push_str(&format!(
        "log tables: {}\n",
        if f.has_tables() { "yes" } else { "no" }
    ));
    Ok(out)
}

fn class_label(cls: &hullforge::Classification) -> &'static str {
    if cls.self_dual {
        "self-dual"
    } else if cls.self_orthogonal {
        "self-orthogonal"
    } else if cls.lcd {
        "LCD"
    } else {
        "-"
    }
}

fn cmd_analyze(path: &Path, only_e: Option<u32>, budget_flag: Option<u64>) -> CliResult<String> {
    let code = load(path)?;
    let budget = resolve_budget(budget_flag)?;
    let f = code.field().clone();
    let h = f.h();
    if let Some(e) = only_e {
        if e >= h {
            return Err(CliError::Usage(format!(
                "twist e={e} out of range for extension degree h={h}"
            )));
        }
    }
    let d = code.min_distance(budget)?;
    let dual_d = code.dual_distance(budget)?;

    let mut out = String::new();
    let d_str = if d.exact {
        format!("{}", d.d)
    } else {
        format!(">={}", d.d)
    };
    out.push_str(&format!(
        "code: [{},{},{}]_{} over {}, modulus {}\n",
        code.n(),
        code.k(),
        d_str,
        f.q(),
        field_label(&f),
        f.modulus_string()
    ));
    for (label, r) in [("distance", &d), ("dual distance", &dual_d)] {
        if r.exact {
            out.push_str(&format!("{label}: {} (exact)\n", r.d));
        } else {
            out.push_str(&format!(
                "{label}: >= {} (lower bound; budget exhausted)\n",
                r.d
            ));
        }
    }
    let dims: Vec<String> = (0..h)
        .map(|e| code.hull_dimension(e).map(|l| format!("e={e}:{l}")))
        .collect::<Result<_, _>>()?;
    out.push_str(&format!("hull dims: {}\n", dims.join(", ")));
    let twists: Vec<u32> = match only_e {
        Some(e) => vec![e],
        None => (0..h).collect(),
    };
    for e in twists {
        let cls = code.classify(e)?;
        out.push_str(&format!("e={e}: {}\n", class_label(&cls)));
    }
    if d.exact && dual_d.exact {
        let prof = code.singleton_profile(d.d, dual_d.d);
        let m = prof
            .m_mds
            .map_or_else(|| String::from("-"), |m| m.to_string());
        out.push_str(&format!(
            "singleton defect: {}, dual defect: {}, m-mds: {}\n",
            prof.defect, prof.dual_defect, m
        ));
    }
    Ok(out)
}

fn cmd_extend(
    path: &Path,
    e: u32,
    i: usize,
    alphas: Option<&str>,
    beta: &str,
) -> CliResult<String> {
    let code = load(path)?;
    let f = code.field().clone();
    let tuple = match alphas {
        Some(s) => {
            let values: Vec<FieldElement> = s
                .split(',')
                .map(|tok| parse_element(&f, "column constant", tok))
                .collect::<CliResult<_>>()?;
            if values.len() != i {
                return Err(CliError::Usage(format!(
                    "--alphas lists {} constants but --i is {i}",
                    values.len()
                )));
            }
            AlphaTuple::new(&f, e, values)?
        }
        None => find_alpha_tuple(&f, e, i)?.ok_or(hullforge::Error::NoAlphaTuple)?,
    };
    let beta_v = parse_element(&f, "beta", beta)?;
    let ext = extend_self_orthogonal(&code, e, &tuple, beta_v)?;
    let mut out = format!(
        "# extended [{},{}] by {} columns at twist e={}: now [{},{}]\n",
        code.n(),
        code.k(),
        tuple.len(),
        e,
        ext.n(),
        ext.k()
    );
    out.push_str(&format!(
        "# alphas: ({}), beta: {}\n",
        fmt_seq(&f, &tuple.values),
        f.format(beta_v)
    ));
    out.push_str(&serialize_code(&ext));
    Ok(out)
}

fn cmd_extend_one(
    path: &Path,
    e: u32,
    l: usize,
    alpha: &str,
    beta: &str,
    lambda: &str,
) -> CliResult<String> {
    let code = load(path)?;
    let f = code.field().clone();
    let alpha_v = parse_element(&f, "alpha", alpha)?;
    let beta_v = parse_element(&f, "beta", beta)?;
    let lambda_v = parse_element(&f, "lambda", lambda)?;
    let ext = extend_one_with_hull(&code, e, l, alpha_v, beta_v, lambda_v)?;
    let got = ext.hull_dimension(e)?;
    let mut out = format!(
        "# lengthened [{},{}] to [{},{}] at twist e={}\n",
        code.n(),
        code.k(),
        ext.n(),
        ext.k(),
        e
    );
    out.push_str(&format!(
        "# alpha: {}, beta: {}, lambda: {}\n",
        f.format(alpha_v),
        f.format(beta_v),
        f.format(lambda_v)
    ));
    out.push_str(&format!("# hull dimension at e={e}: {got}\n"));
    out.push_str(&serialize_code(&ext));
    Ok(out)
}

fn cmd_reduce_hull(path: &Path, e: u32, l: usize) -> CliResult<String> {
    let code = load(path)?;
    let red = reduce_hull_dim(&code, e, l)?;
    let got = red.hull_dimension(e)?;
    let mut out = format!(
        "# scaled pivot columns of [{},{}] at twist e={}\n",
        code.n(),
        code.k(),
        e
    );
    out.push_str(&format!("# hull dimension at e={e}: {got}\n"));
    out.push_str(&serialize_code(&red));
    Ok(out)
}

fn cmd_hso_coset(q: u32, nprime: usize, t: usize, k: usize) -> CliResult<String> {
    let f = tables::field_for(q)?;
    let fam = CosetFamily::new(&f, nprime, t)?;
    let spec = hso_mds_coset(&f, nprime, t, k)?;
    let code = grs_generator(&spec)?;
    let mut out = format!(
        "# conjugate self-orthogonal MDS code over GF({q}): [{},{},{}] (d = n-k+1 \
         guaranteed by the generalized Reed-Solomon structure)\n",
        code.n(),
        code.k(),
        code.n() - code.k() + 1
    );
    out.push_str(&format!(
        "# coset family: n'={nprime}, t={t}, n1={}, n2={}, kmax={}\n",
        fam.n1,
        fam.n2,
        fam.kmax()
    ));
    out.push_str(&serialize_code(&code));
    Ok(out)
}

fn cmd_hso_product(q: u32, x1: u64, x2: u64, n1: usize, k: usize) -> CliResult<String> {
    let f = tables::field_for(q)?;
    let fam = ProductFamily::new(&f, x1, x2, n1)?;
    let spec = hso_mds_product(&f, x1, x2, n1, k)?;
    let code = grs_generator(&spec)?;
    let mut out = format!(
        "# conjugate self-orthogonal MDS code over GF({q}): [{},{},{}] (d = n-k+1 \
         guaranteed by the generalized Reed-Solomon structure)\n",
        code.n(),
        code.k(),
        code.n() - code.k() + 1
    );
    out.push_str(&format!(
        "# product family: x1={x1}, x2={x2}, n1={}, n2={}, kmax={}\n",
        fam.n1,
        fam.n2,
        fam.kmax()
    ));
    out.push_str(&serialize_code(&code));
    Ok(out)
}

fn params_line(label: &str, p: &EaqeccParams) -> CliResult<String> {
    let r = rates(p)?;
    Ok(format!(
        "{label} {p} mds={} rate={} (>=1/2: {}) net-rate={} (>0: {})\n",
        if p.mds { "yes" } else { "no" },
        r.rate,
        if r.rate_at_least_half { "yes" } else { "no" },
        r.net_rate,
        if r.net_rate_positive { "yes" } else { "no" },
    ))
}

fn cmd_eaqecc(path: &Path, e: u32, subfield: bool) -> CliResult<String> {
    let code = load(path)?;
    let budget = resolve_budget(None)?;
    let target = if subfield { Target::Subfield } else { Target::SameField };
    let (q, q_dual) = derive_eaqecc(&code, e, target, budget)?;
    let mut out = params_line("Q:    ", &q)?;
    out.push_str(&params_line("Qdual:", &q_dual)?);
    Ok(out)
}

fn cmd_propagate(path: &Path, e: u32, i: usize, l: usize, subfield: bool) -> CliResult<String> {
    let code = load(path)?;
    let budget = resolve_budget(None)?;
    let target = if subfield { Target::Subfield } else { Target::SameField };
    let derived = propagate(&code, e, i, l, target, budget)?;
    let mut out = String::new();
    for p in &derived {
        out.push_str(&format!("{p}\n"));
    }
    Ok(out)
}

fn cmd_alphas(p: u32, h: u32, e: u32, i: usize) -> CliResult<String> {
    let f = Field::new(p, h, None)?;
    let rep = alpha_conditions(&f, e)?;
    let mut out = format!("{}, modulus {}\n", field_label(&f), f.modulus_string());
    let case = match rep.case {
        AlphaCase::PEven => "even-characteristic",
        AlphaCase::OddCase2 => "odd-case-2",
        AlphaCase::OddCase3 => "odd-case-3",
        AlphaCase::None => "none",
    };
    out.push_str(&format!("case: {case}\n"));
    out.push_str(&format!(
        "t0: {}\n",
        rep.t0.map_or_else(|| String::from("none"), |t| t.to_string())
    ));
    out.push_str(&format!(
        "pair: {}\n",
        match closed_form_pair(&f, e)? {
            Some((a, b)) => format!("({}, {})", f.format(a), f.format(b)),
            None => String::from("none"),
        }
    ));
    out.push_str(&format!(
        "triple: {}\n",
        match rep.triple {
            Some(t) => format!("({})", fmt_seq(&f, &t)),
            None => String::from("none"),
        }
    ));
    out.push_str(&format!(
        "tuple(i={i}): {}\n",
        match find_alpha_tuple(&f, e, i)? {
            Some(t) => format!("({})", fmt_seq(&f, &t.values)),
            None => String::from("none"),
        }
    ));
    Ok(out)
}
