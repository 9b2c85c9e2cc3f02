use std::fmt;

use thiserror::Error;

use super::Formula;

/// Malformed formula text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Bottom,
    Top,
    Ident(String),
    Not,
    And,
    Or,
    Arrow,
    Iff,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Bottom => f.write_str("`F`"),
            Tok::Top => f.write_str("`T`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Not => f.write_str("`~`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Iff => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

const OPERAND: &[&str] = &["`F`", "`T`", "identifier", "`~`", "`(`"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => {
                i += 1;
                Tok::Not
            }
            b'&' => {
                i += 1;
                Tok::And
            }
            b'|' => {
                i += 1;
                Tok::Or
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 3;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                match &text[start..i] {
                    "F" => Tok::Bottom,
                    "T" => Tok::Top,
                    name => Tok::Ident(name.to_string()),
                }
            }
            _ => {
                let found = text[start..].chars().next().map(|c| format!("`{c}`")).unwrap_or_default();
                return Err(ParseError {
                    offset: start,
                    expected: vec!["`F`", "`T`", "identifier", "`~`", "`&`", "`|`", "`->`", "`<->`", "`(`", "`)`"],
                    found,
                });
            }
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError { offset: *offset, expected: expected.to_vec(), found: tok.to_string() }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let left = self.implication()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let right = self.iff()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let right = self.implication()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let right = self.conjunction()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Bottom => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(_) => match self.bump() {
                Tok::Ident(name) => Ok(Formula::atom(&name)),
                _ => unreachable!(),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`)`", "`&`", "`|`", "`->`", "`<->`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(OPERAND)),
        }
    }
}

/// Parse the ASCII formula syntax.
///
/// `F` and `T` are the constants, identifiers are atoms, and the connectives
/// bind in the order `~`, `&`, `|`, `->`, `<->` (tightest first). `&` and
/// `|` associate to the left, `->` and `<->` to the right.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser { toks: lex(text)?, pos: 0 };
    let f = parser.iff()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]));
    }
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn negation_is_sugar() {
        assert_eq!(parse("~p").unwrap(), Formula::implies(a("p"), Formula::Bottom));
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse("p -> q -> r").unwrap(),
            Formula::implies(a("p"), Formula::implies(a("q"), a("r")))
        );
    }

    #[test]
    fn biconditional_expands() {
        assert_eq!(
            parse("p <-> q").unwrap(),
            Formula::and(Formula::implies(a("p"), a("q")), Formula::implies(a("q"), a("p")))
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse("~p & q | r -> s").unwrap(),
            Formula::implies(
                Formula::or(Formula::and(Formula::not(a("p")), a("q")), a("r")),
                a("s")
            )
        );
        assert_eq!(parse("p & q & r").unwrap(), Formula::and(Formula::and(a("p"), a("q")), a("r")));
    }

    #[test]
    fn errors_carry_offset_and_expectation() {
        let err = parse("p & ").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.expected.contains(&"identifier"));
        let err = parse("(p | q").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(err.expected.contains(&"`)`"));
        let err = parse("p $ q").unwrap_err();
        assert_eq!(err.offset, 2);
        let err = parse("p q").unwrap_err();
        assert_eq!(err.offset, 2);
        assert_eq!(err.found, "`q`");
    }
}
