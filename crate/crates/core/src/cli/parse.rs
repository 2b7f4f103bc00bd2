//! Text parsers for words, linear combinations, rationals and series.
//!
//! Index syntax: MZV `3,1,2`; Euler `m:j` entries with `-m` for `m:1` at
//! level 2; free alphabets `[g1][g1 g2]`. Letter syntax, as printed by
//! [`LinComb`]'s `Display`: `z3z1`, `z{3,1}`, `[g1 g2]`.

use crate::error::{Error, Result};
use crate::mzv::SignedInt;
use crate::psimaps::SeriesPrefix;
use crate::qsalg::{Alphabet, Letter, LinComb, Product, Word};
use crate::scalars::{Poly, Rat, Var};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Parses a word in index syntax, or in letter syntax when the text
/// starts with `z` or `[`. An empty text is the empty word.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let t = text.trim();
    let offset = text.len() - text.trim_start().len();
    if t.is_empty() {
        return Ok(Word::empty());
    }
    if t.starts_with('z') || t.starts_with('[') {
        let mut p = Parser::new(t, offset);
        let w = p.word(alphabet)?;
        p.skip_ws();
        if !p.at_end() {
            return Err(err(p.abs(), "unexpected trailing input"));
        }
        return Ok(w);
    }
    let mut letters = Vec::new();
    let mut pos = offset;
    for tok in t.split(',') {
        let lead = tok.len() - tok.trim_start().len();
        letters.push(index_letter(tok.trim(), pos + lead, alphabet)?);
        pos += tok.len() + 1;
    }
    Ok(Word::new(letters))
}

fn parse_u32(tok: &str, pos: usize, what: &str) -> Result<u32> {
    tok.parse::<u32>()
        .map_err(|_| err(pos, format!("expected {what}, found '{tok}'")))
}

fn index_letter(tok: &str, pos: usize, alphabet: &Alphabet) -> Result<Letter> {
    if tok.is_empty() {
        return Err(err(pos, "empty entry"));
    }
    let weight_of = |s: &str, p: usize| -> Result<u32> {
        let w = parse_u32(s, p, "a weight")?;
        if w == 0 {
            return Err(err(p, "weights must be >= 1"));
        }
        Ok(w)
    };
    match alphabet {
        Alphabet::Mzv => alphabet.z(weight_of(tok, pos)?),
        Alphabet::Euler(level) => {
            if let Some(m) = tok.strip_prefix('-') {
                if *level != 2 {
                    return Err(err(pos, "'-m' shorthand needs level 2"));
                }
                return alphabet.colored(weight_of(m.trim(), pos + 1)?, 1);
            }
            match tok.split_once(':') {
                Some((m, j)) => {
                    let w = weight_of(m.trim(), pos)?;
                    let jpos = pos + m.len() + 1;
                    let c = j
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| err(jpos, format!("expected a color, found '{j}'")))?;
                    alphabet.colored(w, c)
                }
                None => alphabet.colored(weight_of(tok, pos)?, 0),
            }
        }
        Alphabet::Free(_) => Err(err(pos, "free alphabets use the [g1 g2] syntax")),
    }
}

/// Comma-separated signed keys such as `-1,2,-3`.
pub fn parse_signed_keys(text: &str) -> Result<Vec<SignedInt>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in text.split(',') {
        let t = tok.trim();
        let v: i64 = t
            .parse()
            .map_err(|_| err(pos, format!("expected a nonzero integer, found '{t}'")))?;
        out.push(SignedInt::new(v).map_err(|_| err(pos, "entries must be nonzero"))?);
        pos += tok.len() + 1;
    }
    Ok(out)
}

/// Comma-separated positive integers.
pub fn parse_u32_list(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in text.split(',') {
        out.push(parse_u32(tok.trim(), pos, "a nonnegative integer")?);
        pos += tok.len() + 1;
    }
    Ok(out)
}

/// A rational `p/q` or an integer.
pub fn parse_rat(text: &str) -> Result<Rat> {
    text.trim()
        .parse::<Rat>()
        .map_err(|_| err(0, format!("invalid rational '{}'", text.trim())))
}

/// `--r` values: a rational or `sym` for the symbolic parameter.
pub fn parse_r(text: &str) -> Result<Option<Rat>> {
    match text.trim() {
        "sym" | "symbolic" => Ok(None),
        t => parse_rat(t).map(Some),
    }
}

/// `qsh`, `sh`, `star` or `interp`; the interpolated product takes `r`
/// (symbolic when `None`).
pub fn parse_product(text: &str, r: Option<&Rat>) -> Result<Product> {
    match text.trim() {
        "qsh" => Ok(Product::QuasiShuffle),
        "sh" => Ok(Product::Shuffle),
        "star" => Ok(Product::Star),
        "interp" => Ok(match r {
            Some(r) => Product::interpolated_at(r.clone()),
            None => Product::interpolated(),
        }),
        other => Err(Error::InvalidArgument(format!("unknown product '{other}'"))),
    }
}

/// Named series (`id`, `neg`, `sigma`, `sigma-inv`, `sigma-r`, `exp`,
/// `log`) or an explicit `c1,c2,...` list of rationals.
pub fn parse_series(text: &str, depth: usize, r: Option<&Rat>) -> Result<SeriesPrefix> {
    let depth = depth.max(1);
    let s = match text.trim() {
        "id" => SeriesPrefix::identity(depth),
        "neg" => SeriesPrefix::neg(depth),
        "sigma" => SeriesPrefix::sigma(depth),
        "sigma-inv" => SeriesPrefix::sigma_inv(depth),
        "sigma-r" => {
            let s = SeriesPrefix::sigma_r(depth);
            match r {
                Some(r) => s.specialize(r),
                None => s,
            }
        }
        "exp" => SeriesPrefix::exp(depth),
        "log" => SeriesPrefix::log(depth),
        list => {
            let mut coeffs = Vec::new();
            let mut pos = 0;
            for tok in list.split(',') {
                let c = tok
                    .trim()
                    .parse::<Rat>()
                    .map_err(|_| err(pos, format!("unknown series or coefficient '{}'", tok.trim())))?;
                coeffs.push(c);
                pos += tok.len() + 1;
            }
            SeriesPrefix::from_rats(&coeffs)?
        }
    };
    Ok(s)
}

/// Parses the text form printed by `LinComb`'s `Display`, e.g.
/// `2 + z1z2 - 3/2*z2z1 + (1 - 2r)*z3`.
pub fn parse_lincomb(text: &str, alphabet: &Alphabet) -> Result<LinComb> {
    let mut p = Parser::new(text, 0);
    let x = p.lincomb(alphabet)?;
    p.skip_ws();
    if !p.at_end() {
        return Err(err(p.abs(), "unexpected trailing input"));
    }
    Ok(x)
}

/// Parses a polynomial such as `1 - 2r + 4r^2` or `-1/3kappa`.
pub fn parse_poly(text: &str, var: Var) -> Result<Poly> {
    let mut p = Parser::new(text, 0);
    let x = p.poly(var)?;
    p.skip_ws();
    if !p.at_end() {
        return Err(err(p.abs(), "unexpected trailing input"));
    }
    Ok(x)
}

struct Parser<'a> {
    s: &'a [u8],
    src: &'a str,
    i: usize,
    offset: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, offset: usize) -> Self {
        Parser {
            s: src.as_bytes(),
            src,
            i: 0,
            offset,
        }
    }

    fn abs(&self) -> usize {
        self.offset + self.i
    }

    fn at_end(&self) -> bool {
        self.i >= self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n')) {
            self.i += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.abs(), format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.i;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.i += 1;
        }
        (self.i > start).then(|| &self.src[start..self.i])
    }

    fn uint(&mut self) -> Result<u32> {
        let pos = self.abs();
        let d = self.digits().ok_or_else(|| err(pos, "expected a number"))?;
        d.parse().map_err(|_| err(pos, "number out of range"))
    }

    /// `p` or `p/q`.
    fn rational(&mut self) -> Result<Option<Rat>> {
        let start = self.i;
        if self.digits().is_none() {
            return Ok(None);
        }
        if self.peek() == Some(b'/') && matches!(self.s.get(self.i + 1), Some(b'0'..=b'9')) {
            self.i += 1;
            self.digits();
        }
        let pos = self.offset + start;
        self.src[start..self.i]
            .parse::<Rat>()
            .map(Some)
            .map_err(|_| err(pos, "invalid rational"))
    }

    fn letter(&mut self, alphabet: &Alphabet) -> Result<Letter> {
        let pos = self.abs();
        match self.peek() {
            Some(b'z') => {
                self.i += 1;
                if self.eat(b'{') {
                    let w = self.uint()?;
                    self.expect(b',')?;
                    let neg = self.eat(b'-');
                    let c = self.uint()? as i64;
                    self.expect(b'}')?;
                    alphabet
                        .colored(w, if neg { -c } else { c })
                        .map_err(|e| err(pos, e.to_string()))
                } else {
                    let w = self.uint()?;
                    alphabet.z(w).map_err(|e| err(pos, e.to_string()))
                }
            }
            Some(b'[') => {
                self.i += 1;
                let names = alphabet.generator_names();
                let mut gens = Vec::new();
                loop {
                    self.skip_ws();
                    if self.eat(b']') {
                        break;
                    }
                    let start = self.i;
                    while matches!(self.peek(), Some(c) if c != b' ' && c != b']') {
                        self.i += 1;
                    }
                    if self.i == start {
                        return Err(err(self.abs(), "unterminated multiset letter"));
                    }
                    let name = &self.src[start..self.i];
                    let idx = names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| err(self.offset + start, format!("unknown generator '{name}'")))?;
                    gens.push(idx as u32);
                }
                alphabet.multiset(gens).map_err(|e| err(pos, e.to_string()))
            }
            _ => Err(err(pos, "expected a letter")),
        }
    }

    /// Sequence of letters, or `1` for the empty word.
    fn word(&mut self, alphabet: &Alphabet) -> Result<Word> {
        if self.peek() == Some(b'1') {
            self.i += 1;
            return Ok(Word::empty());
        }
        let mut letters = vec![self.letter(alphabet)?];
        while matches!(self.peek(), Some(b'z' | b'[')) {
            letters.push(self.letter(alphabet)?);
        }
        Ok(Word::new(letters))
    }

    fn poly(&mut self, var: Var) -> Result<Poly> {
        let sym = var.symbol().as_bytes();
        let mut acc = Poly::zero(var);
        let mut first = true;
        loop {
            self.skip_ws();
            let mut neg = false;
            if self.eat(b'-') {
                neg = true;
            } else if !first && !self.eat(b'+') {
                break;
            } else if first {
                self.eat(b'+');
            }
            self.skip_ws();
            let pos = self.abs();
            let c = self.rational()?;
            let has_var = self.s[self.i..].starts_with(sym);
            if c.is_none() && !has_var {
                return Err(err(pos, "expected a coefficient or the indeterminate"));
            }
            let mut deg = 0;
            if has_var {
                self.i += sym.len();
                deg = 1;
                if self.eat(b'^') {
                    deg = self.uint()? as usize;
                }
            }
            let mut c = c.unwrap_or_else(Rat::one);
            if neg {
                c = -c;
            }
            let mut coeffs = vec![Rat::zero(); deg + 1];
            coeffs[deg] = c;
            acc += &Poly::from_coeffs(var, coeffs);
            first = false;
        }
        Ok(acc)
    }

    fn lincomb(&mut self, alphabet: &Alphabet) -> Result<LinComb> {
        let mut acc = LinComb::zero(alphabet);
        let mut first = true;
        loop {
            self.skip_ws();
            if self.at_end() {
                if first {
                    return Err(err(self.abs(), "empty expression"));
                }
                break;
            }
            let mut neg = false;
            if self.eat(b'-') {
                neg = true;
            } else if self.eat(b'+') {
                if first {
                    return Err(err(self.abs() - 1, "leading '+'"));
                }
            } else if !first {
                return Err(err(self.abs(), "expected '+' or '-'"));
            }
            self.skip_ws();
            let (coeff, word) = self.term(alphabet)?;
            let coeff = if neg { -coeff } else { coeff };
            acc = acc.checked_add(&LinComb::monomial(alphabet, word, coeff)?)?;
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self, alphabet: &Alphabet) -> Result<(Poly, Word)> {
        if self.eat(b'(') {
            let c = self.poly(Var::R)?;
            self.skip_ws();
            self.expect(b')')?;
            if self.eat(b'*') {
                return Ok((c, self.word(alphabet)?));
            }
            return Ok((c, Word::empty()));
        }
        if let Some(c) = self.rational()? {
            let c = Poly::constant(Var::R, c);
            if self.eat(b'*') {
                return Ok((c, self.word(alphabet)?));
            }
            return Ok((c, Word::empty()));
        }
        Ok((Poly::one(Var::R), self.word(alphabet)?))
    }
}
