//! Plain-text graph files.
//!
//! ```text
//! P            # kind: P (permutation) or C (circular)
//! 11           # n
//! 5 3 10 ...   # Π[1..=n], whitespace separated
//! N B N ...    # chord types, kind C only
//! ```
//!
//! `#` starts a comment; blank lines are skipped. Errors carry the 1-based
//! line number.

use crate::core::Permutation;
use crate::cpgraph::{parse_types, validate, ChordType};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Permutation,
    Circular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub pi_inv: Permutation,
    /// `Some` exactly for circular graphs.
    pub types: Option<Vec<ChordType>>,
}

impl GraphFile {
    pub fn permutation(pi_inv: Permutation) -> Self {
        GraphFile { pi_inv, types: None }
    }

    pub fn circular(pi_inv: Permutation, types: Vec<ChordType>) -> Self {
        GraphFile { pi_inv, types: Some(types) }
    }

    pub fn kind(&self) -> GraphKind {
        if self.types.is_some() {
            GraphKind::Circular
        } else {
            GraphKind::Permutation
        }
    }

    pub fn n(&self) -> usize {
        self.pi_inv.len()
    }
}

fn at_line(line: usize, msg: impl fmt::Display) -> Error {
    Error::Format(format!("line {line}: {msg}"))
}

impl FromStr for GraphFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, kind) = lines.next().ok_or_else(|| at_line(1, "empty file"))?;
        let kind = match kind {
            "P" => GraphKind::Permutation,
            "C" => GraphKind::Circular,
            k => return Err(at_line(ln, format!("unknown kind {k:?}, expected P or C"))),
        };
        let (ln, n) = lines.next().ok_or_else(|| at_line(ln + 1, "missing n"))?;
        let n: usize = n.parse().map_err(|_| at_line(ln, format!("bad n {n:?}")))?;
        let mut vals = Vec::with_capacity(n);
        let mut last = ln;
        if n > 0 {
            let (ln, row) = lines.next().ok_or_else(|| at_line(ln + 1, "missing permutation line"))?;
            last = ln;
            for tok in row.split_whitespace() {
                vals.push(tok.parse::<usize>().map_err(|_| at_line(ln, format!("bad value {tok:?}")))?);
            }
            if vals.len() != n {
                return Err(at_line(ln, format!("expected {n} values, found {}", vals.len())));
            }
        }
        let pi_inv = Permutation::new(vals).map_err(|e| at_line(last, e))?;
        let types = match kind {
            GraphKind::Permutation => None,
            GraphKind::Circular => {
                let t = if n == 0 {
                    Vec::new()
                } else {
                    let (ln, row) = lines.next().ok_or_else(|| at_line(last + 1, "missing types line"))?;
                    last = ln;
                    let t = parse_types(row).map_err(|e| at_line(ln, e))?;
                    if t.len() != n {
                        return Err(at_line(ln, format!("expected {n} types, found {}", t.len())));
                    }
                    t
                };
                validate(&pi_inv, &t).map_err(|e| at_line(last, e))?;
                Some(t)
            }
        };
        if let Some((ln, _)) = lines.next() {
            return Err(at_line(ln, "trailing content"));
        }
        Ok(GraphFile { pi_inv, types })
    }
}

impl fmt::Display for GraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
        writeln!(f, "{}", if self.types.is_some() { "C" } else { "P" })?;
        writeln!(f, "{}", self.n())?;
        if self.n() > 0 {
            writeln!(f, "{}", join(&mut self.pi_inv.values().iter().map(|v| v.to_string())))?;
            if let Some(t) = &self.types {
                writeln!(f, "{}", join(&mut t.iter().map(|c| c.as_char().to_string())))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_circular, random_permutation};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_examples() {
        let g: GraphFile = "P\n3\n2 3 1\n".parse().unwrap();
        assert_eq!(g.pi_inv.values(), &[2, 3, 1]);
        assert_eq!(g.kind(), GraphKind::Permutation);
        let c: GraphFile = "# fig\nC\n7\n2 5 4 1 7 3 6\nN B N N N N N\n".parse().unwrap();
        assert_eq!(c.kind(), GraphKind::Circular);
        let e = "C\n2\n2 1\nF N\n".parse::<GraphFile>().unwrap_err().to_string();
        assert!(e.contains("line 4") && e.contains("rule 1"), "{e}");
        let e = "P\n3\n1 1 2\n".parse::<GraphFile>().unwrap_err().to_string();
        assert!(e.contains("line 3"), "{e}");
        assert!("Q\n1\n1\n".parse::<GraphFile>().unwrap_err().to_string().contains("line 1"));
        assert!("P\n2\n1 2\nextra\n".parse::<GraphFile>().is_err());
        assert_eq!("P\n0\n".parse::<GraphFile>().unwrap().n(), 0);
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(seed in any::<u64>(), n in 0usize..40, circ in any::<bool>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = if circ {
                let (p, t) = random_circular(&mut rng, n, 0.4);
                GraphFile::circular(p, t)
            } else {
                GraphFile::permutation(random_permutation(&mut rng, n))
            };
            prop_assert_eq!(g.to_string().parse::<GraphFile>().unwrap(), g);
        }
    }
}
