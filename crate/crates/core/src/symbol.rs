use std::fmt;

/// Which bracket a four-circuit symbol uses: `[..|..]` generators of the
/// large presentation or `(..|..)` generators of the small one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadKind {
    Square,
    Paren,
}

/// Name of a presentation generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSymbol {
    Epsilon,
    Xi,
    Eta,
    /// `C(x)`: circuit index and one of its elements.
    CircuitElem {
        circuit: usize,
        element: usize,
    },
    /// `D(y)`: cocircuit index and one of its elements.
    CocircuitElem {
        cocircuit: usize,
        element: usize,
    },
    /// Four circuit indices (positions in a circuit order).
    Quad {
        idx: [usize; 4],
        kind: QuadKind,
    },
    /// Anonymous generator, e.g. a kernel basis vector.
    Basis(usize),
}

impl GeneratorSymbol {
    pub fn square(idx: [usize; 4]) -> Self {
        GeneratorSymbol::Quad {
            idx,
            kind: QuadKind::Square,
        }
    }

    pub fn paren(idx: [usize; 4]) -> Self {
        GeneratorSymbol::Quad {
            idx,
            kind: QuadKind::Paren,
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSymbol::Epsilon => write!(f, "eps"),
            GeneratorSymbol::Xi => write!(f, "xi"),
            GeneratorSymbol::Eta => write!(f, "eta"),
            GeneratorSymbol::CircuitElem { circuit, element } => write!(f, "C{circuit}({element})"),
            GeneratorSymbol::CocircuitElem { cocircuit, element } => {
                write!(f, "D{cocircuit}({element})")
            }
            GeneratorSymbol::Quad {
                idx: [a, b, c, d],
                kind,
            } => match kind {
                QuadKind::Square => write!(f, "[{a} {b}|{c} {d}]"),
                QuadKind::Paren => write!(f, "({a} {b}|{c} {d})"),
            },
            GeneratorSymbol::Basis(i) => write!(f, "b{i}"),
        }
    }
}

/// Where a relation came from: a family name plus the indices that
/// instantiate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTag {
    pub family: &'static str,
    pub args: Vec<usize>,
}

impl RelationTag {
    pub fn new(family: &'static str, args: impl Into<Vec<usize>>) -> Self {
        RelationTag {
            family,
            args: args.into(),
        }
    }
}

impl fmt::Display for RelationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.args.is_empty() {
            let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", args.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(
            GeneratorSymbol::square([0, 1, 2, 3]).to_string(),
            "[0 1|2 3]"
        );
        assert_eq!(
            GeneratorSymbol::paren([0, 1, 2, 3]).to_string(),
            "(0 1|2 3)"
        );
        assert_eq!(
            GeneratorSymbol::CircuitElem {
                circuit: 2,
                element: 5
            }
            .to_string(),
            "C2(5)"
        );
        assert_eq!(
            RelationTag::new("R5", [0, 1, 2, 3, 4]).to_string(),
            "R5(0,1,2,3,4)"
        );
        assert_eq!(RelationTag::new("S1", []).to_string(), "S1");
    }
}
