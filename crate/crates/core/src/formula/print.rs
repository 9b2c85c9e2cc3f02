use std::fmt;

use super::Formula;

const IMPLIES: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Bottom | Formula::Top | Formula::Atom(_) => UNARY,
        Formula::Implies(_, r) if **r == Formula::Bottom => UNARY,
        Formula::And(..) => AND,
        Formula::Or(..) => OR,
        Formula::Implies(..) => IMPLIES,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(f) < min {
        out.write_str("(")?;
        write_bare(f, out)?;
        out.write_str(")")
    } else {
        write_bare(f, out)
    }
}

fn write_bare(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Bottom => out.write_str("F"),
        Formula::Top => out.write_str("T"),
        Formula::Atom(a) => out.write_str(a.name()),
        Formula::Implies(inner, r) if **r == Formula::Bottom => {
            out.write_str("~")?;
            write_at(inner, UNARY, out)
        }
        Formula::And(l, r) => {
            write_at(l, AND, out)?;
            out.write_str(" & ")?;
            write_at(r, AND + 1, out)
        }
        Formula::Or(l, r) => {
            write_at(l, OR, out)?;
            out.write_str(" | ")?;
            write_at(r, OR + 1, out)
        }
        Formula::Implies(l, r) => {
            write_at(l, IMPLIES + 1, out)?;
            out.write_str(" -> ")?;
            write_at(r, IMPLIES, out)
        }
    }
}

/// Minimal-parenthesis rendering in the same syntax [`super::parse`] reads.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bare(self, f)
    }
}

/// Render a formula as text; `parse(&print(f))` is structurally `f`.
pub fn print(f: &Formula) -> String {
    f.to_string()
}
