//! The JSON description of a matroid accepted on the command line.
//!
//! ```json
//! {"type": "linear", "field": 3, "matrix": [[1, 0, 1], [0, 1, 1]]}
//! {"type": "graphic", "edges": [[0, 1], [1, 2], [2, 0]]}
//! {"type": "circuits", "n": 4, "circuits": [[0, 1, 2, 3]]}
//! {"type": "name", "name": "Q9"}
//! {"type": "dual_of", "of": {"type": "name", "name": "F7"}}
//! {"type": "two_sum", "left": ..., "left_basepoint": 4, "right": ..., "right_basepoint": 4}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::constructions::{two_sum, Catalog, TwoSumSpec};
use crate::error::{Error, Result};
use crate::gf::{FieldMatrix, Prime};
use crate::matroid::Matroid;

pub const MAX_DEPTH: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Linear {
        field: u32,
        matrix: Vec<Vec<i64>>,
    },
    Graphic {
        edges: Vec<(usize, usize)>,
    },
    Circuits {
        n: usize,
        circuits: Vec<Vec<usize>>,
    },
    Name {
        name: String,
    },
    DualOf {
        of: Box<MatroidSpec>,
    },
    TwoSum {
        left: Box<MatroidSpec>,
        left_basepoint: usize,
        right: Box<MatroidSpec>,
        right_basepoint: usize,
    },
}

impl MatroidSpec {
    pub fn name(name: &str) -> Self {
        MatroidSpec::Name { name: name.to_string() }
    }

    /// Nesting depth; leaves have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            MatroidSpec::DualOf { of } => 1 + of.depth(),
            MatroidSpec::TwoSum { left, right, .. } => 1 + left.depth().max(right.depth()),
            _ => 1,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let spec: MatroidSpec = serde_json::from_str(text)?;
        if spec.depth() > MAX_DEPTH {
            return Err(Error::Spec(format!(
                "nesting depth {} exceeds {MAX_DEPTH}",
                spec.depth()
            )));
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialises")
    }

    /// Describes `m` by its circuits, which every matroid has.
    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidSpec::Circuits {
            n: m.n(),
            circuits: m.circuits().to_lists(),
        }
    }

    /// Describes a matrix by its entries; labels are dropped.
    pub fn from_matrix(m: &FieldMatrix) -> Self {
        MatroidSpec::Linear {
            field: m.prime().get() as u32,
            matrix: m.to_signed_grid(),
        }
    }

    pub fn build(&self, cat: &Catalog) -> Result<Matroid> {
        if self.depth() > MAX_DEPTH {
            return Err(Error::Spec(format!("nesting depth {} exceeds {MAX_DEPTH}", self.depth())));
        }
        match self {
            MatroidSpec::Linear { field, matrix } => {
                let m = FieldMatrix::from_literal(Prime::new(*field)?, matrix)?;
                Matroid::from_matrix(&m)
            }
            MatroidSpec::Graphic { edges } => Matroid::from_graph(edges),
            MatroidSpec::Circuits { n, circuits } => {
                if *n > bits::MAX_ELEMENTS {
                    return Err(Error::Capacity(format!(
                        "{n} elements; at most {} are supported",
                        bits::MAX_ELEMENTS
                    )));
                }
                let masks = circuits
                    .iter()
                    .map(|c| {
                        if let Some(&e) = c.iter().find(|&&e| e >= *n) {
                            return Err(Error::Spec(format!("circuit element {e} is not below n = {n}")));
                        }
                        Ok(bits::mask_of(c.iter().copied()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_circuits(*n, &masks)
            }
            MatroidSpec::Name { name } => cat.matroid(name).cloned(),
            MatroidSpec::DualOf { of } => Ok(of.build(cat)?.dual()),
            MatroidSpec::TwoSum {
                left,
                left_basepoint,
                right,
                right_basepoint,
            } => two_sum(&TwoSumSpec {
                left: left.build(cat)?,
                left_basepoint: *left_basepoint,
                right: right.build(cat)?,
                right_basepoint: *right_basepoint,
            }),
        }
    }
}

/// Reads a command-line matroid argument: `name:X`, a path to a spec file,
/// or a bare catalog name.
pub fn load(arg: &str, cat: &Catalog) -> Result<Matroid> {
    resolve(arg, cat)?.build(cat)
}

pub fn resolve(arg: &str, cat: &Catalog) -> Result<MatroidSpec> {
    if let Some(name) = arg.strip_prefix("name:") {
        return Ok(MatroidSpec::name(name));
    }
    let path = Path::new(arg);
    if path.is_file() {
        return MatroidSpec::parse(&std::fs::read_to_string(path)?);
    }
    if cat.get(arg).is_some() {
        return Ok(MatroidSpec::name(arg));
    }
    Err(Error::Spec(format!("`{arg}` is neither a spec file nor a catalog name")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    #[test]
    fn parse_each_kind() {
        let cat = catalog();
        let fano = MatroidSpec::parse(r#"{"type":"name","name":"f7"}"#).unwrap();
        assert_eq!(fano.build(&cat).unwrap().n(), 7);
        let tri = MatroidSpec::parse(r#"{"type":"graphic","edges":[[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(tri.build(&cat).unwrap(), Matroid::uniform(2, 3).unwrap());
        let lin = MatroidSpec::parse(r#"{"type":"linear","field":2,"matrix":[[1,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(lin.build(&cat).unwrap(), Matroid::uniform(2, 3).unwrap());
        let dual = MatroidSpec::parse(r#"{"type":"dual_of","of":{"type":"circuits","n":3,"circuits":[[0,1,2]]}}"#).unwrap();
        assert_eq!(dual.build(&cat).unwrap(), Matroid::uniform(1, 3).unwrap());
        let h = MatroidSpec::parse(
            r#"{"type":"two_sum","left":{"type":"name","name":"O7"},"left_basepoint":4,
                "right":{"type":"name","name":"O7"},"right_basepoint":4}"#,
        )
        .unwrap();
        assert_eq!(h.build(&cat).unwrap(), *cat.matroid("H12").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let cat = catalog();
        assert!(MatroidSpec::parse(r#"{"type":"linear","field":2}"#).is_err());
        assert!(MatroidSpec::parse(r#"{"type":"sphere"}"#).is_err());
        let deep = r#"{"type":"dual_of","of":{"type":"dual_of","of":{"type":"dual_of","of":{"type":"dual_of","of":{"type":"name","name":"F7"}}}}}"#;
        assert!(matches!(MatroidSpec::parse(deep), Err(Error::Spec(_))));
        let bad = MatroidSpec::parse(r#"{"type":"circuits","n":2,"circuits":[[0,5]]}"#).unwrap();
        assert!(bad.build(&cat).is_err());
        let big = MatroidSpec::Linear {
            field: 2,
            matrix: vec![vec![1; 17]],
        };
        assert!(matches!(big.build(&cat), Err(Error::Capacity(_))));
        assert!(resolve("no-such-thing", &cat).is_err());
    }

    #[test]
    fn round_trip_catalog() {
        let cat = catalog();
        for e in cat.entries() {
            let spec = MatroidSpec::from_matroid(&e.matroid);
            let again = MatroidSpec::parse(&spec.to_json()).unwrap();
            assert_eq!(again.build(&cat).unwrap(), e.matroid, "{}", e.name);
        }
    }
}
