//! Text and JSON rendering with deterministic ordering.

use serde_json::{json, Value as Json};

use crate::hopf::TensorComb;
use crate::qsalg::{Alphabet, Letter, LinComb, Word};
use crate::scalars::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(crate::Error::InvalidArgument(format!("unknown format '{s}'"))),
        }
    }
}

/// `{"poly": {"var": "r", "coeffs": ["1", "-2"]}}`
pub fn poly_json(p: &Poly) -> Json {
    json!({ "poly": p })
}

fn letter_json(alphabet: &Alphabet, l: &Letter) -> Json {
    match l {
        Letter::Z(i) => json!(i),
        Letter::Colored { .. } => json!(alphabet.letter_token(l)),
        Letter::Multiset(g) => {
            let names = alphabet.generator_names();
            Json::Array(g.iter().map(|&i| json!(names[i as usize])).collect())
        }
    }
}

pub fn word_json(alphabet: &Alphabet, w: &Word) -> Json {
    Json::Array(w.letters().iter().map(|l| letter_json(alphabet, l)).collect())
}

/// `{"alphabet": …, "terms": [{"word": […], "coeff": {"poly": …}}]}`
pub fn lincomb_json(x: &LinComb) -> Json {
    let a = x.alphabet();
    let terms: Vec<Json> = x
        .terms()
        .map(|(w, c)| json!({ "word": word_json(a, w), "coeff": poly_json(c) }))
        .collect();
    json!({ "alphabet": a.to_string(), "terms": terms })
}

/// Tensors as `{"left": […], "right": […], "coeff": …}` entries.
pub fn tensor_json(t: &TensorComb) -> Json {
    let a = t.alphabet();
    let terms: Vec<Json> = t
        .terms()
        .map(|(u, v, c)| json!({ "left": word_json(a, u), "right": word_json(a, v), "coeff": poly_json(c) }))
        .collect();
    json!({ "alphabet": a.to_string(), "terms": terms })
}

/// Renders a linear combination.
pub fn render_lincomb(x: &LinComb, format: Format) -> String {
    match format {
        Format::Text => x.to_string(),
        Format::Json => lincomb_json(x).to_string(),
    }
}

pub fn render_tensor(t: &TensorComb, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Json => tensor_json(t).to_string(),
    }
}
