//! Query expressions.
//!
//! ```text
//! query    := command arg (';' arg)*
//! arg      := element | '[' coords ']' | integer
//! element  := factor+            product, left to right
//! factor   := 'e' | 'w0' | ('s' digits)+ | 't[' coords ']'
//! coords   := rational (',' rational)*      pairing coordinates
//! ```
//! `s0` is the affine simple reflection. Positions are 1-based characters.

use adlv_core::weyl::longest_element;
use adlv_core::{AffineElt, AffineWeyl, Coweight, RootSystem};
use num_rational::Rational64;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Trans(Vec<Rational64>),
    List(Vec<Rational64>),
    Int(i64),
    Semi,
}

#[derive(Clone, Debug)]
struct Lexeme {
    tok: Tok,
    text: String,
    pos: usize,
}

fn parse_coords(body: &str, start: usize) -> CliResult<Vec<Rational64>> {
    let mut out = Vec::new();
    let mut offset = start;
    for piece in body.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        let value = trimmed
            .parse::<Rational64>()
            .map_err(|_| CliError::parse(trimmed, offset + lead, "expected an integer or p/q"))?;
        out.push(value);
        offset += piece.chars().count() + 1;
    }
    Ok(out)
}

fn lex(input: &str) -> CliResult<Vec<Lexeme>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let bracket = |open: usize| -> CliResult<(usize, String)> {
        let close = chars[open..]
            .iter()
            .position(|&c| c == ']')
            .map(|k| open + k)
            .ok_or_else(|| CliError::parse(chars[open..].iter().collect::<String>(), open + 1, "unclosed '['"))?;
        Ok((close, chars[open + 1..close].iter().collect()))
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == ';' {
            out.push(Lexeme { tok: Tok::Semi, text: ";".into(), pos });
            i += 1;
        } else if c == '[' {
            let (close, body) = bracket(i)?;
            let coords = parse_coords(&body, pos + 1)?;
            out.push(Lexeme { tok: Tok::List(coords), text: chars[i..=close].iter().collect(), pos });
            i = close + 1;
        } else if c == 't' && chars.get(i + 1) == Some(&'[') {
            let (close, body) = bracket(i + 1)?;
            let coords = parse_coords(&body, pos + 2)?;
            out.push(Lexeme { tok: Tok::Trans(coords), text: chars[i..=close].iter().collect(), pos });
            i = close + 1;
        } else if c.is_alphanumeric() || c == '_' || c == '-' {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let tok = match text.parse::<i64>() {
                Ok(k) => Tok::Int(k),
                Err(_) if c == '-' => return Err(CliError::parse(text, pos, "expected an integer")),
                Err(_) => Tok::Word(text.clone()),
            };
            out.push(Lexeme { tok, text, pos });
        } else {
            return Err(CliError::parse(c.to_string(), pos, "unexpected character"));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ArgKind {
    Element(AffineElt),
    Coweight(Coweight),
    Int(i64),
}

#[derive(Clone, Debug)]
pub struct Arg {
    pub kind: ArgKind,
    pub text: String,
    pub pos: usize,
}

#[derive(Clone, Debug)]
pub struct Query {
    pub command: String,
    pub command_pos: usize,
    pub args: Vec<Arg>,
}

fn factor(rs: &RootSystem, aw: &AffineWeyl, lx: &Lexeme) -> CliResult<AffineElt> {
    let n = rs.rank();
    match &lx.tok {
        Tok::Word(w) if w == "e" => Ok(AffineElt::identity(n)),
        Tok::Word(w) if w == "w0" => Ok(AffineElt::from_finite(longest_element(rs))),
        Tok::Word(w) if w.starts_with('s') => {
            // A run such as `s1s2s1` is read as a product of generators.
            let mut out = AffineElt::identity(n);
            for piece in w[1..].split('s') {
                match piece.parse::<usize>() {
                    Ok(i) if i <= n => out = out.mul(&aw.simple(i)),
                    _ => return Err(CliError::parse(w, lx.pos, format!("no generator 's{piece}' in rank {n}; use s0..s{n}"))),
                }
            }
            Ok(out)
        }
        Tok::Trans(c) => {
            if c.len() != n {
                return Err(CliError::parse(&lx.text, lx.pos, format!("expected {n} coordinates, found {}", c.len())));
            }
            let ints = Coweight(c.clone())
                .to_ints()
                .ok_or_else(|| CliError::parse(&lx.text, lx.pos, "translation coordinates must be integers"))?;
            Ok(AffineElt::translation(ints))
        }
        _ => Err(CliError::parse(&lx.text, lx.pos, "expected e, w0, s<i> or t[...]")),
    }
}

fn arg(rs: &RootSystem, aw: &AffineWeyl, group: &[Lexeme]) -> CliResult<Arg> {
    let text = group.iter().map(|l| l.text.as_str()).collect::<Vec<_>>().join(" ");
    let pos = group[0].pos;
    let kind = match &group[0].tok {
        Tok::List(c) if group.len() == 1 => {
            if c.len() != rs.rank() {
                return Err(CliError::parse(&text, pos, format!("expected {} coordinates, found {}", rs.rank(), c.len())));
            }
            ArgKind::Coweight(Coweight(c.clone()))
        }
        Tok::Int(k) if group.len() == 1 => ArgKind::Int(*k),
        _ => {
            let mut w = AffineElt::identity(rs.rank());
            for lx in group {
                w = w.mul(&factor(rs, aw, lx)?);
            }
            ArgKind::Element(w)
        }
    };
    Ok(Arg { kind, text, pos })
}

pub fn parse_query(rs: &RootSystem, input: &str) -> CliResult<Query> {
    let lexemes = lex(input)?;
    let Some(first) = lexemes.first() else {
        return Err(CliError::parse("", 1, "empty query"));
    };
    let Tok::Word(command) = &first.tok else {
        return Err(CliError::parse(&first.text, first.pos, "expected a command"));
    };
    let aw = AffineWeyl::new(rs);
    let mut args = Vec::new();
    let mut group: Vec<Lexeme> = Vec::new();
    let rest = &lexemes[1..];
    for (k, lx) in rest.iter().enumerate() {
        if lx.tok == Tok::Semi {
            if group.is_empty() {
                return Err(CliError::parse(";", lx.pos, "empty argument"));
            }
            args.push(arg(rs, &aw, &group)?);
            group.clear();
            if k + 1 == rest.len() {
                return Err(CliError::parse(";", lx.pos, "trailing ';'"));
            }
        } else {
            group.push(lx.clone());
        }
    }
    if !group.is_empty() {
        args.push(arg(rs, &aw, &group)?);
    }
    Ok(Query {
        command: command.clone(),
        command_pos: first.pos,
        args,
    })
}
