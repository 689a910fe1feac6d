//! Haskell `show`-compatible rendering of [`Value`]s.
//!
//! Constructor arguments are shown at application precedence: nested
//! constructor applications and negative numbers get parentheses
//! (`Just (-0.5)`, `MyF (Just 1)`), while list and tuple elements never do
//! (`[-1,2]`). Floats use the shortest round-trip digits, in fixed notation
//! for magnitudes in `[0.1, 10^7)` and `d.ddde<n>` otherwise.

use std::fmt::{self, Write};

use crate::value::{Multi, Value};

const APP_PREC: u8 = 10;

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        shows_prec(self, 0, f)
    }
}

/// `show v`.
pub fn render(v: &Value) -> String {
    v.to_string()
}

fn shows_prec<W: Write>(v: &Value, prec: u8, out: &mut W) -> fmt::Result {
    match v {
        Value::Int(n) => signed(&n.to_string(), *n < 0, prec, out),
        Value::Float(x) => signed(&show_float(*x), x.is_sign_negative() && !x.is_nan(), prec, out),
        Value::Bool(b) => out.write_str(if *b { "True" } else { "False" }),
        Value::Str(s) => show_string(s, out),
        Value::List(items) => seq('[', ']', items.iter(), out),
        Value::Tuple(items) => seq('(', ')', items.iter(), out),
        Value::Maybe(None) => out.write_str("Nothing"),
        Value::Maybe(Some(x)) => constructor("Just", x, prec, out),
        Value::Wrap(x) => constructor("MyF", x, prec, out),
        Value::Multi(Multi::F1(x)) => constructor("F1", x, prec, out),
        Value::Multi(Multi::F2(xs)) => {
            paren(prec > APP_PREC, out, |out| {
                out.write_str("F2 ")?;
                seq('[', ']', xs.iter(), out)
            })
        }
        Value::Multi(Multi::F3(a, b)) => {
            paren(prec > APP_PREC, out, |out| {
                out.write_str("F3 ")?;
                seq('(', ')', [a.as_ref(), b.as_ref()].into_iter(), out)
            })
        }
        Value::Multi(Multi::F4(x)) => constructor("F4", x, prec, out),
    }
}

fn paren<W: Write>(wrap: bool, out: &mut W, body: impl FnOnce(&mut W) -> fmt::Result) -> fmt::Result {
    if wrap {
        out.write_char('(')?;
    }
    body(out)?;
    if wrap {
        out.write_char(')')?;
    }
    Ok(())
}

fn signed<W: Write>(text: &str, negative: bool, prec: u8, out: &mut W) -> fmt::Result {
    // showsPrec wraps negative literals above precedence 6.
    paren(negative && prec > 6, out, |out| out.write_str(text))
}

fn constructor<W: Write>(name: &str, arg: &Value, prec: u8, out: &mut W) -> fmt::Result {
    paren(prec > APP_PREC, out, |out| {
        out.write_str(name)?;
        out.write_char(' ')?;
        shows_prec(arg, APP_PREC + 1, out)
    })
}

fn seq<'a, W: Write>(open: char, close: char, items: impl Iterator<Item = &'a Value>, out: &mut W) -> fmt::Result {
    out.write_char(open)?;
    for (i, v) in items.enumerate() {
        if i > 0 {
            out.write_char(',')?;
        }
        shows_prec(v, 0, out)?;
    }
    out.write_char(close)
}

fn show_string<W: Write>(s: &str, out: &mut W) -> fmt::Result {
    out.write_char('"')?;
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' => out.write_str("\\\"")?,
            '\\' => out.write_str("\\\\")?,
            '\n' => out.write_str("\\n")?,
            '\t' => out.write_str("\\t")?,
            '\r' => out.write_str("\\r")?,
            c if (' '..='~').contains(&c) => out.write_char(c)?,
            c => {
                write!(out, "\\{}", c as u32)?;
                // A following digit would extend the numeric escape.
                if chars.peek().is_some_and(|n| n.is_ascii_digit()) {
                    out.write_str("\\&")?;
                }
            }
        }
    }
    out.write_char('"')
}

/// Haskell's `show` for `Double`, built from Rust's shortest round-trip digits.
pub fn show_float(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "Infinity" } else { "-Infinity" }.into();
    }
    let sign = if x.is_sign_negative() { "-" } else { "" };
    if x == 0.0 {
        return format!("{sign}0.0");
    }
    let sci = format!("{:e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("{:e} output has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if (-1..7).contains(&exp) {
        if exp == -1 {
            format!("0.{digits}")
        } else {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{}{}.0", digits, "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        }
    } else {
        let (head, tail) = digits.split_at(1);
        let tail = if tail.is_empty() { "0" } else { tail };
        format!("{head}.{tail}e{exp}")
    };
    format!("{sign}{body}")
}
