//! Parsing of Cartan tags and files, words, windows and mode lists.

use std::path::Path;

use qshuffle::{CartanData, FreeWord, Orientation, Series, Window};
use serde::Deserialize;

use crate::CliError;

fn parse_err(what: &'static str, detail: impl Into<String>) -> CliError {
    CliError::Parse {
        what,
        detail: detail.into(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CartanFile {
    rank: usize,
    matrix: Vec<Vec<i32>>,
    symmetrizers: Vec<u32>,
}

/// `A2`, `B3`, `G2`, `A1xA1`, ... or a path to a Cartan JSON file.
pub fn parse_cartan(spec: &str) -> Result<CartanData, CliError> {
    if let Some(c) = parse_tag(spec) {
        return c;
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(parse_err(
            "Cartan type",
            format!("`{spec}` is neither a known tag nor a file"),
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: spec.into(),
        source,
    })?;
    parse_cartan_json(&text)
}

pub fn parse_cartan_json(text: &str) -> Result<CartanData, CliError> {
    let f: CartanFile =
        serde_json::from_str(text).map_err(|e| parse_err("Cartan file", e.to_string()))?;
    if f.rank != f.matrix.len() {
        return Err(parse_err(
            "Cartan file",
            format!("rank {} but {} matrix rows", f.rank, f.matrix.len()),
        ));
    }
    Ok(CartanData::new(f.matrix, f.symmetrizers)?)
}

fn parse_tag(spec: &str) -> Option<Result<CartanData, CliError>> {
    let mut acc: Option<CartanData> = None;
    for part in spec.split(['x', 'X']) {
        let mut chars = part.chars();
        let series = Series::from_letter(chars.next()?)?;
        let rank: usize = chars.as_str().parse().ok()?;
        let c = match CartanData::builtin(series, rank) {
            Ok(c) => c,
            Err(e) => return Some(Err(e.into())),
        };
        acc = Some(match acc {
            None => c,
            Some(a) => a.direct_sum(&c),
        });
    }
    acc.map(Ok)
}

/// Whitespace-separated `a<color>:<mode>` letters; the empty string is the empty word.
pub fn parse_word(text: &str) -> Result<FreeWord, CliError> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let bad = || {
            parse_err(
                "word",
                format!("bad letter `{tok}`, expected a<color>:<mode>"),
            )
        };
        let rest = tok.strip_prefix('a').ok_or_else(bad)?;
        let (c, m) = rest.split_once(':').ok_or_else(bad)?;
        if c.is_empty() || !c.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let color: usize = c.parse().map_err(|_| bad())?;
        let mode: i32 = m.parse().map_err(|_| bad())?;
        letters.push((color, mode));
    }
    Ok(FreeWord(letters))
}

/// Checks every letter's color against the rank.
pub fn check_word(word: &FreeWord, cartan: &CartanData) -> Result<(), CliError> {
    for &(c, _) in &word.0 {
        if c == 0 || c > cartan.rank() {
            return Err(parse_err(
                "word",
                format!("color {c} outside 1..={}", cartan.rank()),
            ));
        }
    }
    Ok(())
}

/// `lo:hi`.
pub fn parse_window(text: &str) -> Result<Window, CliError> {
    let bad = || parse_err("window", format!("`{text}`, expected lo:hi"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: i32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i32 = hi.trim().parse().map_err(|_| bad())?;
    Window::new(lo, hi).map_err(|_| bad())
}

pub fn parse_orientation(text: &str) -> Result<Orientation, CliError> {
    match text {
        "default" => Ok(Orientation::ProductCompatible),
        "printed" => Ok(Orientation::AsPrinted),
        _ => Err(parse_err(
            "orientation",
            format!("`{text}`, expected default or printed"),
        )),
    }
}
