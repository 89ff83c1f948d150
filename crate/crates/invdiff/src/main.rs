use clap::{Args, Parser, Subcommand, ValueEnum};
use invdiff::arith::{factor_int, is_prime_u64, Int, Rat};
use invdiff::classgrp::{class_group, sqrt_inverse_different, DISC_CAP};
use invdiff::densities::census_mod_p2;
use invdiff::enumerate::{classify_forms, forms_below, summarize};
use invdiff::etale::{AlgebraElement, RfOrder};
use invdiff::ffcensus::{enumerate_orbits, enumerate_orbits_normal_form, orthogonal_group};
use invdiff::forms::{discriminant, height, real_signature, BinaryForm};
use invdiff::localfield::{classify_local, global_sqrt_criterion, is_maximal};
use invdiff::orbits::{
    check_conditions, construct_pair, det_pencil, equivalence_witness, realized_sign, recover_datum, trivial_datum,
};
use invdiff::suites::{self, SUITES};
use invdiff::Error;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "invdiff", version, about = "Rings of binary forms, square roots of the inverse different, and their verification suites")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, global = true, default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct FormArg {
    /// Coefficients f_0,…,f_n, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    form: Vec<i64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exhaustive density census of forms modulo p²
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// ν_p(f_0): 0, 1, or 2 (meaning ≥ 2)
        #[arg(long, default_value_t = 0)]
        nu: u32,
    },
    /// Canonical representatives with H(F) < X, classified
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f0: i64,
        /// Height bound, an exact rational such as 7/2
        #[arg(long)]
        height: String,
        /// Compute #Cl[2] and the square-root count (n = 3)
        #[arg(long)]
        cl2: bool,
        #[arg(long, default_value_t = DISC_CAP)]
        disc_cap: u64,
    },
    /// Signature, height, maximality and local flags of one form
    Classify {
        #[command(flatten)]
        form: FormArg,
        /// Primes for the local classification (default: primes with p² | disc or p | f_0)
        #[arg(long, value_delimiter = ',')]
        p: Vec<u64>,
    },
    /// The symmetric pair attached to the canonical datum, optionally rescaled
    Construct {
        #[command(flatten)]
        form: FormArg,
        /// κ in R_F coordinates; the datum becomes (κI, κ²α)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        kappa: Vec<i64>,
    },
    /// Class group of R_F for a cubic form and the square-root count
    Classgroup {
        #[command(flatten)]
        form: FormArg,
        #[arg(long, default_value_t = DISC_CAP)]
        disc_cap: u64,
    },
    /// SL₃(𝔽_p)-orbits of pairs with a given monic cubic determinant
    FfOrbits {
        /// c_1,c_2,c_3 of x³ + c_1x²z + c_2xz² + c_3z³
        #[arg(long, value_delimiter = ',', required = true)]
        form: Vec<u64>,
        #[arg(long)]
        p: u64,
        /// Square class of r (1 or a non-residue)
        #[arg(long, default_value_t = 1)]
        r: u64,
    },
    /// Run one acceptance suite, or `all`
    Verify { suite: String },
}

/// Exit 2 for bad input, 1 for failures.
enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidInput(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn form_of(c: &[i64]) -> Result<BinaryForm, Failure> {
    if c.len() < 3 {
        return Err(usage("a form needs degree at least 2"));
    }
    if c[0] == 0 {
        return Err(usage("f_0 must be nonzero"));
    }
    Ok(BinaryForm::from_i64(c))
}

fn odd_prime(p: u64) -> Result<u64, Failure> {
    if p < 3 || !is_prime_u64(p) {
        return Err(usage(format!("p = {p} must be an odd prime")));
    }
    Ok(p)
}

fn strs(v: &[Int]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(vec![]);
    let io = |e: csv::Error| Failure::Run(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Run(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Run(e.to_string()))
}

/// Output text and whether every reported criterion held.
type Report = (String, bool);

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn census(n: usize, p: u64, nu: u32, fmt: Format) -> Result<Report, Failure> {
    odd_prime(p)?;
    if nu > 2 {
        return Err(usage("--nu takes 0, 1 or 2 (2 meaning ≥ 2)"));
    }
    let rep = census_mod_p2(n, p, nu)?;
    let text = match fmt {
        Format::Json => json_text(&rep.to_json()),
        Format::Csv => rep.to_csv()?,
    };
    Ok((text, rep.all_pass()))
}

fn enumerate(n: usize, f0: i64, height_s: &str, cl2: bool, cap: u64, fmt: Format) -> Result<Report, Failure> {
    if f0 <= 0 || f0 % 2 == 0 {
        return Err(usage("--f0 must be a positive odd integer"));
    }
    let x: Rat = height_s.parse().map_err(|_| usage(format!("--height {height_s} is not a rational")))?;
    if !x.is_positive() {
        return Err(usage("--height must be positive"));
    }
    let forms = forms_below(n, f0, &x)?;
    let rows = classify_forms(&forms, cl2, cap)?;
    let summary = summarize(forms.len(), &rows);
    let text = match fmt {
        Format::Json => json_text(&json!({
            "n": n.to_string(),
            "f0": f0.to_string(),
            "height": x.to_string(),
            "forms": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "summary": summary.to_json(n, f0),
        })),
        Format::Csv => {
            eprintln!("{}", serde_json::to_string(&summary.to_json(n, f0)).expect("serializable"));
            let opt = |x: Option<u64>| x.map(|c| c.to_string()).unwrap_or_default();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        strs(&r.form.coeffs).join(" "),
                        r.b.to_string(),
                        r.r1.to_string(),
                        r.r2.to_string(),
                        r.maximal.to_string(),
                        r.irreducible.to_string(),
                        r.squareful.to_string(),
                        opt(r.cl2),
                        opt(r.sqrt_count),
                    ]
                })
                .collect();
            csv_text(&["form", "b", "r1", "r2", "maximal", "irreducible", "squareful", "cl2", "sqrt_count"], &body)?
        }
    };
    Ok((text, true))
}

fn default_primes(f: &BinaryForm) -> Vec<u64> {
    let mut ps = Vec::new();
    let d = discriminant(f);
    for (p, e) in factor_int(&d, 1_000_000).unwrap_or_default() {
        if e >= 2 && p > 2 {
            ps.push(p);
        }
    }
    for (p, _) in factor_int(f.f0(), 1_000_000).unwrap_or_default() {
        if p > 2 && !ps.contains(&p) {
            ps.push(p);
        }
    }
    ps.sort_unstable();
    ps
}

fn classify(c: &[i64], primes: &[u64], fmt: Format) -> Result<Report, Failure> {
    let f = form_of(c)?;
    if !f.is_separable() {
        return Err(usage("form is not separable"));
    }
    let primes = if primes.is_empty() { default_primes(&f) } else { primes.to_vec() };
    for &p in &primes {
        odd_prime(p)?;
    }
    let sig = real_signature(&f)?;
    let h = height(&f)?;
    let maximal = is_maximal(&f)?;
    let verdict = if f.degree() % 2 == 1 && f.is_primitive() { Some(global_sqrt_criterion(&f)?) } else { None };
    let local: Vec<(u64, _)> = primes.iter().map(|&p| (p, classify_local(&f, p))).collect();
    let (i, hv) = h.max_term();
    let text = match fmt {
        Format::Json => json_text(&json!({
            "form": strs(&f.coeffs),
            "disc": discriminant(&f).to_string(),
            "signature": [sig.r1.to_string(), sig.r2.to_string()],
            "height_term": {"i": i.to_string(), "abs_value": hv.abs().to_string()},
            "maximal": maximal,
            "sqrt_criterion": verdict.map(|v| format!("{v:?}").to_lowercase()),
            "local": local.iter().map(|(p, c)| json!({
                "p": p.to_string(),
                "primitive": c.primitive,
                "maximal": c.maximal,
                "squareful": c.squareful,
                "evenly_ramified": c.evenly_ramified,
                "e1": c.e1.to_string(),
                "nu": c.nu.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let body: Vec<Vec<String>> = local
                .iter()
                .map(|(p, c)| {
                    vec![
                        strs(&f.coeffs).join(" "),
                        p.to_string(),
                        c.maximal.to_string(),
                        c.squareful.to_string(),
                        c.evenly_ramified.to_string(),
                        c.e1.to_string(),
                        c.nu.to_string(),
                    ]
                })
                .collect();
            csv_text(&["form", "p", "maximal", "squareful", "evenly_ramified", "e1", "nu"], &body)?
        }
    };
    Ok((text, true))
}

fn construct(c: &[i64], kappa: &[i64], fmt: Format) -> Result<Report, Failure> {
    let f = form_of(c)?;
    let ord = RfOrder::new(&f)?;
    let mut d = trivial_datum(&ord)?;
    if !kappa.is_empty() {
        if kappa.len() != ord.n {
            return Err(usage(format!("--kappa needs {} coordinates", ord.n)));
        }
        let k = AlgebraElement::from_ints(kappa);
        if ord.norm(&k).is_zero() {
            return Err(usage("κ is a zero divisor"));
        }
        d = d.rescale(&ord, &k);
    }
    let pair = construct_pair(&ord, &d)?;
    let conditions = check_conditions(&pair, f.f0())?;
    let back = recover_datum(&pair, &f)?;
    let round_trip = equivalence_witness(&ord, &d, &back).is_some();
    let ok = conditions && round_trip;
    let m = |a: &Vec<Vec<Int>>| a.iter().map(|r| strs(r)).collect::<Vec<_>>();
    let text = match fmt {
        Format::Json => json_text(&json!({
            "form": strs(&f.coeffs),
            "A": m(&pair.a),
            "B": m(&pair.b),
            "det_pencil": strs(&det_pencil(&pair)),
            "realized_sign": realized_sign(&pair, &d.r).to_string(),
            "integrality_conditions": conditions,
            "round_trip": round_trip,
        })),
        Format::Csv => {
            let mut body = Vec::new();
            for (name, mat) in [("A", &pair.a), ("B", &pair.b)] {
                for (i, row) in mat.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        body.push(vec![name.to_string(), i.to_string(), j.to_string(), x.to_string()]);
                    }
                }
            }
            csv_text(&["matrix", "row", "col", "entry"], &body)?
        }
    };
    Ok((text, ok))
}

fn classgroup(c: &[i64], cap: u64, fmt: Format) -> Result<Report, Failure> {
    let f = form_of(c)?;
    let data = class_group(&f, cap)?;
    let s = sqrt_inverse_different(&data)?;
    let text = match fmt {
        Format::Json => json_text(&data.to_json(Some(s))),
        Format::Csv => csv_text(
            &["form", "disc", "maximal", "group", "class_number", "two_torsion", "sqrt_count", "hecke"],
            &[vec![
                strs(&f.coeffs).join(" "),
                data.disc.to_string(),
                data.maximal.to_string(),
                strs(&data.group).join(" "),
                data.class_number.to_string(),
                data.two_torsion_size.to_string(),
                s.to_string(),
                (s > 0).to_string(),
            ]],
        )?,
    };
    Ok((text, true))
}

fn ff_orbits(c: &[u64], p: u64, r: u64, fmt: Format) -> Result<Report, Failure> {
    odd_prime(p)?;
    if c.len() != 3 {
        return Err(usage("--form takes c_1,c_2,c_3"));
    }
    let form = [1, c[0] % p, c[1] % p, c[2] % p];
    let table = if p == 3 {
        enumerate_orbits(&form, p, r % p)?
    } else {
        enumerate_orbits_normal_form(&form, p, r % p, &orthogonal_group(p, r % p))?
    };
    let ok = table.mass_identity();
    let text = match fmt {
        Format::Json => json_text(&table.to_json()),
        Format::Csv => {
            let flat = |m: &[[u64; 3]; 3]| m.iter().flatten().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let body: Vec<Vec<String>> = table
                .orbits
                .iter()
                .map(|o| vec![flat(&o.a), flat(&o.b), o.size.to_string(), o.stabilizer.to_string()])
                .collect();
            csv_text(&["A", "B", "size", "stabilizer"], &body)?
        }
    };
    Ok((text, ok))
}

fn verify(name: &str, seed: u64, fmt: Format) -> Result<Report, Failure> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else {
        vec![suites::canonical_name(name).ok_or_else(|| usage(format!("unknown suite {name}; try one of {}", SUITES.join(", "))))?]
    };
    let mut results = Vec::new();
    for n in names {
        let r = suites::run(n, seed)?;
        eprintln!("{} {} [{:.1}s]", if r.failed() { "FAIL" } else if r.informational { "INFO" } else { "PASS" }, r.name, r.seconds);
        results.push(r);
    }
    let ok = results.iter().all(|r| !r.failed());
    let text = match fmt {
        Format::Json => json_text(&json!({"pass": ok, "suites": results.iter().map(|r| r.to_json()).collect::<Vec<_>>()})),
        Format::Csv => {
            let body: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        r.pass.to_string(),
                        r.informational.to_string(),
                        format!("{:.3}", r.seconds),
                        r.detail.clone(),
                    ]
                })
                .collect();
            csv_text(&["suite", "pass", "informational", "seconds", "detail"], &body)?
        }
    };
    Ok((text, ok))
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Census { n, p, nu } => census(*n, *p, *nu, fmt),
        Cmd::Enumerate { n, f0, height, cl2, disc_cap } => enumerate(*n, *f0, height, *cl2, *disc_cap, fmt),
        Cmd::Classify { form, p } => classify(&form.form, p, fmt),
        Cmd::Construct { form, kappa } => construct(&form.form, kappa, fmt),
        Cmd::Classgroup { form, disc_cap } => classgroup(&form.form, *disc_cap, fmt),
        Cmd::FfOrbits { form, p, r } => ff_orbits(form, *p, *r, fmt),
        Cmd::Verify { suite } => verify(suite, cli.seed, fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
