use super::order::CircuitOrder;
use crate::error::TutteError;
use crate::symbol::GeneratorSymbol;

/// A generator with a sign, or the identity element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedSymbol {
    Identity,
    Term { sign: i8, symbol: GeneratorSymbol },
}

impl SignedSymbol {
    fn paren(sign: i8, idx: [usize; 4]) -> Self {
        SignedSymbol::Term {
            sign,
            symbol: GeneratorSymbol::paren(idx),
        }
    }

    pub fn negated(&self) -> Self {
        match self {
            SignedSymbol::Identity => SignedSymbol::Identity,
            SignedSymbol::Term { sign, symbol } => SignedSymbol::Term {
                sign: -sign,
                symbol: symbol.clone(),
            },
        }
    }
}

/// The bracket `<d1 d2|d3 d4>` written in paren generators of the small
/// presentation: each pair is sorted, the pair with the smaller leading
/// index goes first, and every pair reversal costs a sign.
pub fn bracket_normalize(
    order: &CircuitOrder<'_>,
    [d1, d2, d3, d4]: [usize; 4],
) -> Result<SignedSymbol, TutteError> {
    if [d1, d2, d3, d4].iter().any(|&d| d >= order.len()) {
        return Err(TutteError::InvalidConfiguration(format!(
            "circuit index out of range in <{d1} {d2}|{d3} {d4}>"
        )));
    }
    if d1 == d3 || d1 == d4 || d2 == d3 || d2 == d4 {
        return Err(TutteError::InvalidConfiguration(format!(
            "pairs of <{d1} {d2}|{d3} {d4}> share a circuit"
        )));
    }
    if order.dim(&[d1, d2, d3, d4]) != 1 {
        return Err(TutteError::InvalidConfiguration(format!(
            "circuits of <{d1} {d2}|{d3} {d4}> do not span a line"
        )));
    }
    if d1 == d2 || d3 == d4 {
        return Ok(SignedSymbol::Identity);
    }
    let s = match (d1 < d2, d3 < d4) {
        (true, true) if d1 < d3 => SignedSymbol::paren(1, [d1, d2, d3, d4]),
        (true, true) => SignedSymbol::paren(1, [d3, d4, d1, d2]),
        (true, false) if d1 < d4 => SignedSymbol::paren(-1, [d1, d2, d4, d3]),
        (true, false) => SignedSymbol::paren(-1, [d4, d3, d1, d2]),
        (false, true) if d2 < d3 => SignedSymbol::paren(-1, [d2, d1, d3, d4]),
        (false, true) => SignedSymbol::paren(-1, [d3, d4, d2, d1]),
        (false, false) if d2 < d4 => SignedSymbol::paren(1, [d2, d1, d4, d3]),
        (false, false) => SignedSymbol::paren(1, [d4, d3, d2, d1]),
    };
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn nine_cases_on_u24() {
        let m = catalog::uniform(2, 4);
        let o = CircuitOrder::canonical(&m);
        let b = |d| bracket_normalize(&o, d).unwrap();
        assert_eq!(b([0, 1, 2, 2]), SignedSymbol::Identity);
        assert_eq!(b([3, 3, 0, 1]), SignedSymbol::Identity);
        assert_eq!(b([0, 1, 2, 3]), SignedSymbol::paren(1, [0, 1, 2, 3]));
        assert_eq!(b([2, 3, 0, 1]), SignedSymbol::paren(1, [0, 1, 2, 3]));
        assert_eq!(b([0, 1, 3, 2]), SignedSymbol::paren(-1, [0, 1, 2, 3]));
        assert_eq!(b([2, 3, 1, 0]), SignedSymbol::paren(-1, [0, 1, 2, 3]));
        assert_eq!(b([1, 0, 2, 3]), SignedSymbol::paren(-1, [0, 1, 2, 3]));
        assert_eq!(b([3, 2, 0, 1]), SignedSymbol::paren(-1, [0, 1, 2, 3]));
        assert_eq!(b([1, 0, 3, 2]), SignedSymbol::paren(1, [0, 1, 2, 3]));
        assert_eq!(b([3, 2, 1, 0]), SignedSymbol::paren(1, [0, 1, 2, 3]));
    }

    #[test]
    fn rejects_bad_configurations() {
        let m = catalog::uniform(2, 4);
        let o = CircuitOrder::canonical(&m);
        assert!(bracket_normalize(&o, [0, 1, 1, 2]).is_err());
        assert!(bracket_normalize(&o, [0, 1, 2, 9]).is_err());
        let k4 = catalog::complete_graph_k4();
        let o = CircuitOrder::canonical(&k4);
        // Four triangles of K4 span the whole plane.
        assert!(matches!(
            bracket_normalize(&o, [0, 1, 2, 3]),
            Err(TutteError::InvalidConfiguration(_))
        ));
    }
}
