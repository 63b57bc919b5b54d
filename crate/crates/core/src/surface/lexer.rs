use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Underscore,
    Nat(u32),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Colon,
    Comma,
    Semi,
    Slash,
    Hash,
    Quote,
    Turnstile,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Underscore => "`_`".into(),
            Tok::Nat(n) => format!("`{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Hash => "`#`".into(),
            Tok::Quote => "`'`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits `text` into tokens. `--` starts a comment running to end of line.
pub fn lex(text: &str, first_line: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut line_start = 0;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = Pos {
            line,
            col: text[line_start..i].chars().count() + 1,
            offset: i,
        };
        let single = |tok| Token { tok, pos };
        match c {
            b'\n' => {
                line += 1;
                i += 1;
                line_start = i;
            }
            b' ' | b'\t' | b'\r' => i += 1,
            b'-' if bytes.get(i + 1) == Some(&b'-') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                out.push(single(Tok::Turnstile));
                i += 2;
            }
            b'(' | b')' | b'[' | b']' | b':' | b',' | b';' | b'/' | b'#' | b'\'' => {
                out.push(single(match c {
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'[' => Tok::LBrack,
                    b']' => Tok::RBrack,
                    b':' => Tok::Colon,
                    b',' => Tok::Comma,
                    b';' => Tok::Semi,
                    b'/' => Tok::Slash,
                    b'#' => Tok::Hash,
                    _ => Tok::Quote,
                }));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse::<u32>().map_err(|_| ParseError {
                    line: pos.line,
                    col: pos.col,
                    message: format!("number `{}` out of range", &text[start..i]),
                })?;
                out.push(single(Tok::Nat(n)));
            }
            b'_' if !bytes
                .get(i + 1)
                .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') =>
            {
                out.push(single(Tok::Underscore));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(single(Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    line: pos.line,
                    col: pos.col,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    let pos = Pos {
        line,
        col: text[line_start..].chars().count() + 1,
        offset: text.len(),
    };
    out.push(Token { tok: Tok::Eof, pos });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s, 1).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn basic_tokens() {
        assert_eq!(
            toks("[a'2:D(bot)] _ |- -- comment\n x"),
            vec![
                Tok::LBrack,
                Tok::Ident("a".into()),
                Tok::Quote,
                Tok::Nat(2),
                Tok::Colon,
                Tok::Ident("D".into()),
                Tok::LParen,
                Tok::Ident("bot".into()),
                Tok::RParen,
                Tok::RBrack,
                Tok::Underscore,
                Tok::Turnstile,
                Tok::Ident("x".into()),
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn positions_and_errors() {
        let ts = lex("a\n  b", 1).unwrap();
        assert_eq!((ts[1].pos.line, ts[1].pos.col), (2, 3));
        let err = lex("a ⊃ b", 1).unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
    }

    #[test]
    fn underscore_prefixed_names_are_rejected() {
        assert!(lex("_x", 1).is_err());
    }
}
