use std::sync::Arc;

use thiserror::Error;

use super::{parse, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LibraryError {
    #[error("unknown library formula `{0}`")]
    UnknownName(String),
}

/// Which of the two interleaved Rieger-Nishimura sequences to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RnKind {
    Alpha,
    Beta,
}

/// The `n`-th Rieger-Nishimura formula in `p`, for `n >= 1`:
/// `beta(1) = p`, `alpha(1) = ~p`, `beta(n+1) = alpha(n) | beta(n)` and
/// `alpha(n+1) = alpha(n) -> beta(n)`.
///
/// # Panics
/// If `n == 0`.
pub fn rieger_nishimura(kind: RnKind, n: usize) -> Formula {
    assert!(n >= 1, "Rieger-Nishimura formulas are indexed from 1");
    let mut beta = Arc::new(Formula::atom("p"));
    let mut alpha = Arc::new(Formula::not(Formula::atom("p")));
    for _ in 1..n {
        let next_beta = Arc::new(Formula::Or(alpha.clone(), beta.clone()));
        let next_alpha = Arc::new(Formula::Implies(alpha, beta));
        alpha = next_alpha;
        beta = next_beta;
    }
    let out = match kind {
        RnKind::Alpha => alpha,
        RnKind::Beta => beta,
    };
    Arc::try_unwrap(out).unwrap_or_else(|shared| (*shared).clone())
}

pub const LIBRARY_NAMES: &[&str] = &[
    "WEM", "LC", "KP", "FIX_BOT", "FIX_P", "FIX_NEG", "FIX_DNEG", "FIX_EM", "FIX_TOP", "ALPHA3",
];

/// Named formulas: the weak excluded middle, Goedel-Dummett and
/// Kreisel-Putnam axioms, the six canonical univariate fixpoints, and the
/// closed form of the third alpha formula.
pub fn library(name: &str) -> Result<Formula, LibraryError> {
    let text = match name {
        "WEM" => "~p | ~~p",
        "LC" => "(p -> q) | (q -> p)",
        "KP" => "(~p -> q | r) -> (~p -> q) | (~p -> r)",
        "FIX_BOT" => "F",
        "FIX_P" => "p",
        "FIX_NEG" => "~p",
        "FIX_DNEG" => "~~p",
        "FIX_EM" => "p | ~p",
        "FIX_TOP" => "T",
        "ALPHA3" => "~~p -> p",
        other => return Err(LibraryError::UnknownName(other.to_string())),
    };
    Ok(parse(text).expect("library formulas are well formed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursion_base_cases() {
        assert_eq!(rieger_nishimura(RnKind::Beta, 1), parse("p").unwrap());
        assert_eq!(rieger_nishimura(RnKind::Alpha, 1), parse("~p").unwrap());
        assert_eq!(rieger_nishimura(RnKind::Beta, 2), parse("~p | p").unwrap());
        assert_eq!(rieger_nishimura(RnKind::Alpha, 2), parse("~p -> p").unwrap());
        assert_eq!(rieger_nishimura(RnKind::Alpha, 3), parse("(~p -> p) -> ~p | p").unwrap());
    }

    #[test]
    fn named_formulas() {
        assert_eq!(library("WEM").unwrap(), parse("~p | ~~p").unwrap());
        assert_eq!(library("LC").unwrap(), parse("(p -> q) | (q -> p)").unwrap());
        assert_eq!(library("FIX_EM").unwrap(), parse("p | ~p").unwrap());
        for name in LIBRARY_NAMES {
            assert!(library(name).is_ok());
        }
        assert_eq!(library("XYZ"), Err(LibraryError::UnknownName("XYZ".into())));
    }
}
