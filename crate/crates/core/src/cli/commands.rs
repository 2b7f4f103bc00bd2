//! Command implementations behind the `qsh` subcommands. Each returns the
//! rendered output and an exit code; library errors surface as `Err` and
//! map to exit code 2 in the binary.

use std::path::Path;
use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::hopf::{antipode_for, coproduct};
use crate::mzv::{
    cyclic_sum, interp_sum_rhs, sum_theorem_indices, tau, totally_odd_indices, totally_odd_rhs,
    two_one_pair, Index,
};
use crate::psimaps::psi;
use crate::qsalg::{product, Alphabet, LinComb, Product};
use crate::scalars::{Rat, Var};
use crate::symsum::{key_label, symmetric_sum_sides, zeta_symsum_report, zeta_symsum_rhs_symbolic};
use crate::zeval::{
    airy_repeated_poly, airy_zeta_poly, zerostream_eval, EvalConfig, Evaluator, TailMode, ValueKind,
    ZeroStream, KAPPA,
};

use super::parse::{parse_lincomb, parse_series, parse_signed_keys, parse_word};
use super::render::{lincomb_json, poly_json, render_lincomb, render_tensor, word_json, Format};
use super::suites::{run_suite, SuiteConfig, TOL};

/// Output text and process exit code.
pub type Output = (String, i32);

fn ok(s: String) -> Result<Output> {
    Ok((s, 0))
}

/// Parses a linear combination, accepting a bare index such as `3,1,2`.
pub fn parse_input(text: &str, alphabet: &Alphabet) -> Result<LinComb> {
    let t = text.trim();
    let indexish = !t.is_empty() && t.chars().all(|c| c.is_ascii_digit() || matches!(c, ',' | ':' | '-' | ' '));
    if indexish || t.is_empty() {
        return LinComb::word(alphabet, parse_word(t, alphabet)?);
    }
    parse_lincomb(t, alphabet)
}

fn index_of(text: &str, alphabet: &Alphabet) -> Result<Index> {
    Index::from_word(alphabet, &parse_word(text, alphabet)?)
}

pub fn mul(alphabet: &Alphabet, kind: &Product, u: &str, v: &str, format: Format) -> Result<Output> {
    let x = product(kind, &parse_input(u, alphabet)?, &parse_input(v, alphabet)?)?;
    ok(render_lincomb(&x, format))
}

pub fn psi_cmd(alphabet: &Alphabet, series: &str, r: Option<&Rat>, x: &str, format: Format) -> Result<Output> {
    let x = parse_input(x, alphabet)?;
    let depth = x.terms().map(|(w, _)| w.len()).max().unwrap_or(0);
    let f = parse_series(series, depth, r)?;
    ok(render_lincomb(&psi(&f, &x)?, format))
}

pub fn coproduct_cmd(alphabet: &Alphabet, x: &str, format: Format) -> Result<Output> {
    ok(render_tensor(&coproduct(&parse_input(x, alphabet)?), format))
}

pub fn antipode_cmd(alphabet: &Alphabet, kind: &Product, x: &str, format: Format) -> Result<Output> {
    if *kind == Product::Shuffle {
        // the shuffle antipode is the quasi-shuffle one without contractions
        return Err(Error::InvalidArgument("antipode supports qsh, star and interp".into()));
    }
    ok(render_lincomb(&antipode_for(&parse_input(x, alphabet)?, kind), format))
}

fn index_text(idx: &Index, format: Format) -> String {
    match format {
        Format::Text => idx.to_string(),
        Format::Json => word_json(&idx.alphabet(), &idx.to_word()).to_string(),
    }
}

pub fn dual(index: &str, format: Format) -> Result<Output> {
    let a = Alphabet::Mzv;
    let idx = index_of(index, &a)?;
    if !idx.is_admissible() {
        return Err(Error::Inadmissible(idx.to_string()));
    }
    let d = Index::from_word(&a, &tau(&idx.to_word())?)?;
    ok(index_text(&d, format))
}

pub fn cyclic_sum_cmd(index: &str, format: Format) -> Result<Output> {
    let w = parse_word(index, &Alphabet::Mzv)?;
    ok(render_lincomb(&cyclic_sum(&w)?, format))
}

pub fn sum_indices(n: u32, l: u32, odd: bool, format: Format) -> Result<Output> {
    let (ix, rhs_text, rhs_json) = if odd {
        let c = totally_odd_rhs(n, l)?;
        (totally_odd_indices(n, l)?, format!("ζ^(1/2) sum = {c}·ζ({n})"), json!(c.to_string()))
    } else {
        let c = interp_sum_rhs(n, l)?;
        (sum_theorem_indices(n, l)?, format!("ζ^r sum = ({c})·ζ({n})"), poly_json(&c))
    };
    match format {
        Format::Text => {
            let mut lines: Vec<String> = ix.iter().map(|i| i.to_string()).collect();
            lines.push(rhs_text);
            ok(lines.join("\n"))
        }
        Format::Json => {
            let ws: Vec<_> = ix.iter().map(|i| word_json(&Alphabet::Mzv, &i.to_word())).collect();
            ok(json!({ "indices": ws, "coefficient": rhs_json }).to_string())
        }
    }
}

pub fn two_one(j: &[u32], format: Format) -> Result<Output> {
    let (left, right) = two_one_pair(j)?;
    let a = Alphabet::Mzv;
    let (l, r) = (Index::from_word(&a, &left)?, Index::from_word(&a, &right)?);
    let scale = 1u64 << j.len();
    match format {
        Format::Text => ok(format!("ζ*{l} = {scale}·ζ^(1/2){r}")),
        Format::Json => ok(json!({
            "star": word_json(&a, &left),
            "half": word_json(&a, &right),
            "factor": scale,
        })
        .to_string()),
    }
}

fn render_eval(r: &crate::zeval::EvalResult, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Json => r.to_json().to_string(),
    }
}

pub struct EvalArgs<'a> {
    pub kind: &'a str,
    pub level: u32,
    pub r: Option<Rat>,
    pub terms: Option<usize>,
    pub tail: TailMode,
}

pub fn eval(args: &EvalArgs<'_>, index: &str, format: Format) -> Result<Output> {
    let (alphabet, kind) = match args.kind {
        "zeta" => (Alphabet::Mzv, ValueKind::Zeta),
        "t" => (Alphabet::Mzv, ValueKind::TValue),
        "euler" => (Alphabet::euler(args.level)?, ValueKind::Euler(args.level)),
        other => return Err(Error::InvalidArgument(format!("unknown kind '{other}'"))),
    };
    let cfg = EvalConfig::new(args.terms.unwrap_or_else(EvalConfig::default_terms), kind)?.with_tail(args.tail);
    let idx = index_of(index, &alphabet)?;
    let mut ev = Evaluator::new(cfg);
    let res = match &args.r {
        Some(r) => ev.interp(&idx, r)?,
        None => ev.strict(&idx)?,
    };
    ok(render_eval(&res, format))
}

pub fn eval_airy(k: Option<u32>, repeated: Option<u32>, n: Option<u32>, format: Format) -> Result<Output> {
    let p = match (k, repeated, n) {
        (Some(k), None, None) => airy_zeta_poly(k)?,
        (None, Some(m), Some(n)) => airy_repeated_poly(m, n)?,
        _ => return Err(Error::InvalidArgument("use either --k K or --repeated M --n N".into())),
    };
    debug_assert_eq!(p.var(), Var::Kappa);
    match format {
        Format::Text => ok(format!("{p}  (≈ {:.12} at κ = {KAPPA})", p.eval_f64(KAPPA))),
        Format::Json => ok(poly_json(&p).to_string()),
    }
}

pub fn eval_g(zeros_file: &Path, terms: Option<usize>, index: &str, format: Format) -> Result<Output> {
    let zs = Arc::new(ZeroStream::from_file(zeros_file)?);
    let idx = index_of(index, &Alphabet::Mzv)?;
    let n = terms.unwrap_or(zs.len());
    ok(render_eval(&zerostream_eval(&idx, zs, n)?, format))
}

pub fn symsum(keys: &str, r: Option<&Rat>, terms: Option<usize>, symbolic: bool, format: Format) -> Result<Output> {
    let keys = parse_signed_keys(keys)?;
    if symbolic {
        let barred = keys.iter().any(|k| k.is_barred());
        let alphabet = if barred { Alphabet::Euler(2) } else { Alphabet::Mzv };
        let letters = keys
            .iter()
            .map(|k| match alphabet {
                Alphabet::Mzv => alphabet.z(k.magnitude()),
                _ => alphabet.colored(k.magnitude(), i64::from(k.is_barred())),
            })
            .collect::<Result<Vec<_>>>()?;
        let (lhs, rhs) = symmetric_sum_sides(&alphabet, &letters)?;
        let holds = lhs == rhs;
        let image = zeta_symsum_rhs_symbolic(&keys)?;
        let code = if holds { 0 } else { 1 };
        return match format {
            Format::Text => {
                let terms: Vec<String> = image
                    .iter()
                    .map(|(k, c)| {
                        let zs: Vec<String> = k.iter().map(|x| format!("ζ({})", key_label(&[*x]))).collect();
                        if c.is_one() {
                            zs.join("")
                        } else {
                            format!("({c})·{}", zs.join(""))
                        }
                    })
                    .collect();
                Ok((
                    format!(
                        "lhs: {lhs}\nrhs: {rhs}\nholds: {holds}\nΣ_σ ζ^r({}) = {}",
                        key_label(&keys),
                        terms.join(" + ")
                    ),
                    code,
                ))
            }
            Format::Json => {
                let img: Vec<_> = image
                    .iter()
                    .map(|(k, c)| json!({ "keys": k.iter().map(|x| x.value()).collect::<Vec<_>>(), "coeff": poly_json(c) }))
                    .collect();
                Ok((
                    json!({ "lhs": lincomb_json(&lhs), "rhs": lincomb_json(&rhs), "holds": holds, "zeta_image": img }).to_string(),
                    code,
                ))
            }
        };
    }
    let r = r.ok_or_else(|| Error::InvalidArgument("numeric symsum needs --r p/q (or pass --symbolic)".into()))?;
    let rep = zeta_symsum_report(&keys, r, terms.unwrap_or_else(EvalConfig::default_terms))?;
    let code = if rep.agrees(TOL) { 0 } else { 3 };
    let text = match format {
        Format::Text => rep.to_string(),
        Format::Json => json!({
            "keys": rep.keys.iter().map(|k| k.value()).collect::<Vec<_>>(),
            "r": rep.r.to_string(),
            "lhs": rep.lhs,
            "rhs": rep.rhs,
            "difference": rep.difference,
            "tail": rep.tail,
        })
        .to_string(),
    };
    Ok((text, code))
}

pub fn verify(suite: &str, cfg: &SuiteConfig, format: Format) -> Result<Output> {
    let rep = run_suite(suite, cfg)?;
    let code = rep.exit_code();
    Ok((rep.render(format).trim_end().to_string(), code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_text() {
        let (s, code) = mul(&Alphabet::Mzv, &Product::QuasiShuffle, "1", "2", Format::Text).unwrap();
        assert_eq!((s.as_str(), code), ("z1z2 + z2z1 + z3", 0));
    }

    #[test]
    fn dual_and_two_one() {
        assert_eq!(dual("3,1,2", Format::Text).unwrap().0, "(2,3,1)");
        assert!(matches!(dual("1,2", Format::Text), Err(Error::Inadmissible(_))));
        assert_eq!(two_one(&[1], Format::Text).unwrap().0, "ζ*(2,1) = 2·ζ^(1/2)(3)");
    }

    #[test]
    fn airy_json() {
        let (s, _) = eval_airy(Some(2), None, None, Format::Json).unwrap();
        assert_eq!(s, r#"{"poly":{"coeffs":["0","0","1"],"var":"kappa"}}"#);
        assert!(eval_airy(Some(2), Some(2), None, Format::Json).is_err());
    }

    #[test]
    fn symbolic_symsum_holds() {
        let (s, code) = symsum("-1,2,-3", None, None, true, Format::Text).unwrap();
        assert_eq!(code, 0);
        assert!(s.contains("holds: true"));
    }
}
