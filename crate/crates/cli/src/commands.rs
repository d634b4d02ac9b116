//! One function per subcommand.

use std::time::Instant;

use qshuffle::identities::{verify_conj_window, verify_lm, verify_partial_fractions};
use qshuffle::{CartanData, Orientation, ShuffleAlgebra, WheelOutcome, Window};
use serde_json::{json, Map, Value};

use crate::input::{check_word, parse_word};
use crate::{exit, report, CliError, VERSION};

/// Options shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// The tag or path as given.
    pub cartan_spec: String,
    pub cartan: CartanData,
    pub orientation: Orientation,
    pub window: Window,
    pub seed: u64,
    /// Omit wall-clock fields so reruns are byte-identical.
    pub timing: bool,
}

impl RunConfig {
    pub fn algebra(&self) -> ShuffleAlgebra {
        ShuffleAlgebra::new(self.cartan.clone(), self.orientation)
    }
}

/// JSON report plus process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub exit: i32,
}

fn header(cfg: &RunConfig, command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    m.insert("version".into(), VERSION.into());
    m.insert("orientation".into(), cfg.orientation.name().into());
    m.insert("cartan".into(), cfg.cartan_spec.clone().into());
    m
}

pub fn cmd_product(cfg: &RunConfig, word: &str) -> Result<Outcome, CliError> {
    let w = parse_word(word)?;
    check_word(&w, &cfg.cartan)?;
    let alg = cfg.algebra();
    let f = alg.pi_word(&w)?;
    let mut out = header(cfg, "product");
    out.insert("word".into(), w.to_string().into());
    out.insert("element".into(), report::element(&alg, &f));
    Ok(Outcome {
        json: Value::Object(out),
        exit: exit::OK,
    })
}

pub fn cmd_serre(
    cfg: &RunConfig,
    alpha: usize,
    beta: usize,
    modes: &[i32],
    s: i32,
) -> Result<Outcome, CliError> {
    let alg = cfg.algebra();
    let img = alg.serre_image(alpha, beta, modes, s)?;
    let mut out = header(cfg, "serre");
    out.insert("alpha".into(), alpha.into());
    out.insert("beta".into(), beta.into());
    out.insert("modes".into(), json!(modes));
    out.insert("s".into(), s.into());
    out.insert("is_zero".into(), img.is_zero().into());
    if !img.is_zero() {
        out.insert("element".into(), report::element(&alg, &img));
    }
    let code = if img.is_zero() {
        exit::OK
    } else {
        exit::SERRE_NONZERO
    };
    Ok(Outcome {
        json: Value::Object(out),
        exit: code,
    })
}

pub fn cmd_wheel(cfg: &RunConfig, word: &str) -> Result<Outcome, CliError> {
    let w = parse_word(word)?;
    check_word(&w, &cfg.cartan)?;
    let alg = cfg.algebra();
    let f = alg.pi_word(&w)?;
    let r = cfg.cartan.rank();
    let mut pairs = Vec::new();
    let mut violated = false;
    for a in 1..=r {
        for b in 1..=r {
            if a == b {
                continue;
            }
            let o = alg.wheel_check(&f, a, b)?;
            violated |= o == WheelOutcome::Violated;
            pairs.push(json!({
                "alpha": a,
                "beta": b,
                "vacuous": o == WheelOutcome::Vacuous,
                "holds": o.holds(),
            }));
        }
    }
    let mut out = header(cfg, "wheel");
    out.insert("word".into(), w.to_string().into());
    out.insert("degree".into(), json!(f.degree().0));
    out.insert("pairs".into(), Value::Array(pairs));
    let code = if violated {
        exit::WHEEL_VIOLATED
    } else {
        exit::OK
    };
    Ok(Outcome {
        json: Value::Object(out),
        exit: code,
    })
}

pub fn cmd_identities(cfg: &RunConfig, m: u32, window_check: bool) -> Result<Outcome, CliError> {
    if m == 0 {
        return Err(CliError::Usage("m must be at least 1".into()));
    }
    let mut reports = Vec::new();
    let mut all_zero = true;
    for q_inverted in [false, true] {
        eprintln!("identities: m = {m}, q_inverted = {q_inverted}");
        let t = Instant::now();
        let r = verify_lm(m, q_inverted);
        all_zero &= r.zero;
        let mut o = Map::new();
        o.insert("m".into(), m.into());
        o.insert("q_inverted".into(), q_inverted.into());
        o.insert("zero".into(), r.zero.into());
        o.insert("term_count".into(), r.term_count.into());
        if cfg.timing {
            o.insert("elapsed_ms".into(), (t.elapsed().as_millis() as u64).into());
        }
        if let Some(w) = r.witness {
            o.insert(
                "witness".into(),
                json!({ "monomial": w.monomial, "coeff": w.coefficient }),
            );
        }
        reports.push(Value::Object(o));
    }
    let mut out = header(cfg, "identities");
    out.insert("m".into(), m.into());
    out.insert("reports".into(), Value::Array(reports));
    let fractions = verify_partial_fractions();
    out.insert("partial_fractions".into(), fractions.into());
    if window_check {
        if !(1..=2).contains(&m) {
            return Err(CliError::Usage(
                "the windowed check supports m = 1 or 2".into(),
            ));
        }
        eprintln!("identities: windowed check on {}", cfg.window);
        let w = verify_conj_window(m, cfg.window)?;
        out.insert(
            "window_check".into(),
            json!({
                "window": [w.window.lo, w.window.hi],
                "lhs_terms": w.lhs_terms,
                "matches": w.matches.iter().map(|r| r.name()).collect::<Vec<_>>(),
                "unique": w.unique_match().map(|r| r.name()),
            }),
        );
    }
    // only m <= 2 is a theorem; larger m is reported as an experiment
    let proven = m <= 2;
    let exit = if proven && !(all_zero && fractions) {
        exit::FAILURE
    } else {
        exit::OK
    };
    Ok(Outcome {
        json: Value::Object(out),
        exit,
    })
}
