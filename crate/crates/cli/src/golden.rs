//! Transcript comparison: byte-exact except for floating-point numbers.

/// Absolute tolerance for float tokens.
pub const FLOAT_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Text(&'a str),
    Number(&'a str),
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let bytes = line.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut text_start = 0;
    while i < bytes.len() {
        let starts_number = bytes[i].is_ascii_digit()
            || (bytes[i] == b'-' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit));
        if !starts_number {
            i += 1;
            continue;
        }
        if text_start < i {
            tokens.push(Token::Text(&line[text_start..i]));
        }
        let start = i;
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'e' {
                let mut j = i + 1;
                if j < bytes.len() && bytes[j] == b'-' {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
        }
        tokens.push(Token::Number(&line[start..i]));
        text_start = i;
    }
    if text_start < bytes.len() {
        tokens.push(Token::Text(&line[text_start..]));
    }
    tokens
}

fn is_float(token: &str) -> bool {
    token.contains('.')
}

/// Whether two lines match: identical text, or identical apart from float
/// tokens that agree within `tol`. Integers must match exactly.
pub fn lines_match(expected: &str, actual: &str, tol: f64) -> bool {
    if expected == actual {
        return true;
    }
    let (e, a) = (tokenize(expected), tokenize(actual));
    e.len() == a.len()
        && e.iter().zip(&a).all(|pair| match pair {
            (Token::Text(x), Token::Text(y)) => x == y,
            (Token::Number(x), Token::Number(y)) if is_float(x) && is_float(y) => {
                match (x.parse::<f64>(), y.parse::<f64>()) {
                    (Ok(p), Ok(q)) => (p - q).abs() <= tol,
                    _ => false,
                }
            }
            (Token::Number(x), Token::Number(y)) => x == y,
            _ => false,
        })
}

/// Compares whole transcripts line by line; the error names the first mismatch.
pub fn compare(expected: &str, actual: &str, tol: f64) -> Result<(), String> {
    let e: Vec<&str> = expected.lines().collect();
    let a: Vec<&str> = actual.lines().collect();
    for (i, (x, y)) in e.iter().zip(&a).enumerate() {
        if !lines_match(x, y, tol) {
            return Err(format!("line {}: expected {x:?}, got {y:?}", i + 1));
        }
    }
    if e.len() != a.len() {
        return Err(format!("expected {} lines, got {}", e.len(), a.len()));
    }
    if expected.ends_with('\n') != actual.ends_with('\n') {
        return Err("trailing newline differs".into());
    }
    Ok(())
}
