use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    /// Determinantal semi-invariant `J_{i,j}`.
    J,
    /// `J'_{i,j}` after the first elementary-transformation step.
    JPrime,
    /// `J''_{i,j}` after the third step.
    JDoublePrime,
    /// `y_i`.
    LowerY,
    /// `Y_{i,j}`.
    UpperY,
}

/// Names one generator. `j` is absent exactly for `y_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantId {
    pub kind: InvariantKind,
    pub i: usize,
    pub j: Option<usize>,
}

impl InvariantId {
    pub fn j(i: usize, j: usize) -> Self {
        InvariantId {
            kind: InvariantKind::J,
            i,
            j: Some(j),
        }
    }

    pub fn j_prime(i: usize, j: usize) -> Self {
        InvariantId {
            kind: InvariantKind::JPrime,
            i,
            j: Some(j),
        }
    }

    pub fn j_double_prime(i: usize, j: usize) -> Self {
        InvariantId {
            kind: InvariantKind::JDoublePrime,
            i,
            j: Some(j),
        }
    }

    pub fn lower_y(i: usize) -> Self {
        InvariantId {
            kind: InvariantKind::LowerY,
            i,
            j: None,
        }
    }

    pub fn upper_y(i: usize, j: usize) -> Self {
        InvariantId {
            kind: InvariantKind::UpperY,
            i,
            j: Some(j),
        }
    }

    /// Second index; zero for `y_i`.
    pub fn second(&self) -> usize {
        self.j.unwrap_or(0)
    }

    /// Checks the index ranges of this generator for dimension `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let i = self.i;
        let ok = match (self.kind, self.j) {
            (InvariantKind::J | InvariantKind::JPrime, Some(j)) => (1..=n).contains(&i) && j < i,
            (InvariantKind::JDoublePrime | InvariantKind::UpperY, Some(j)) => (2..=n).contains(&i) && j + 2 <= i,
            (InvariantKind::LowerY, None) => (1..=n).contains(&i),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} for n = {n}")))
        }
    }
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            InvariantKind::J => "J",
            InvariantKind::JPrime => "J'",
            InvariantKind::JDoublePrime => "J''",
            InvariantKind::LowerY => "y",
            InvariantKind::UpperY => "Y",
        };
        match self.j {
            Some(j) => write!(f, "{prefix}:{},{j}", self.i),
            None => write!(f, "{prefix}:{}", self.i),
        }
    }
}

impl FromStr for InvariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "malformed invariant id `{s}` (expected J:i,j, J':i,j, J'':i,j, y:i or Y:i,j)"
            ))
        };
        let (prefix, indices) = s.trim().split_once(':').ok_or_else(bad)?;
        let kind = match prefix {
            "J" => InvariantKind::J,
            "J'" => InvariantKind::JPrime,
            "J''" => InvariantKind::JDoublePrime,
            "y" => InvariantKind::LowerY,
            "Y" => InvariantKind::UpperY,
            _ => return Err(bad()),
        };
        let parts = indices
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (kind, parts.as_slice()) {
            (InvariantKind::LowerY, [i]) => Ok(InvariantId::lower_y(*i)),
            (InvariantKind::LowerY, _) => Err(bad()),
            (_, [i, j]) => Ok(InvariantId {
                kind,
                i: *i,
                j: Some(*j),
            }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for InvariantId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InvariantId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Stages of the elementary-transformation chain, starting from the `J` system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    /// `{J_{i,j}}`, the unitriangular generators.
    Base,
    /// `{J'_{i,j}}`.
    Prime,
    /// `{y_i, J'_{i,j}: j <= i-2}`.
    Y,
    /// `{y_i, J''_{i,j}: j <= i-2}`.
    DoublePrime,
    /// `{y_i, Y_{i,j}}`.
    Final,
}

impl Stage {
    pub const ALL: [Stage; 5] = [Stage::Base, Stage::Prime, Stage::Y, Stage::DoublePrime, Stage::Final];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Base => "base",
            Stage::Prime => "prime",
            Stage::Y => "y",
            Stage::DoublePrime => "doubleprime",
            Stage::Final => "final",
        }
    }

    /// The generator occupying table slot `(i, j)` at this stage.
    pub fn id_at(self, i: usize, j: usize) -> InvariantId {
        let bottom = j + 1 == i;
        match self {
            Stage::Base => InvariantId::j(i, j),
            Stage::Prime => InvariantId::j_prime(i, j),
            _ if bottom => InvariantId::lower_y(i),
            Stage::Y => InvariantId::j_prime(i, j),
            Stage::DoublePrime => InvariantId::j_double_prime(i, j),
            Stage::Final => InvariantId::upper_y(i, j),
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" | "J" => Ok(Stage::Base),
            "prime" => Ok(Stage::Prime),
            "y" => Ok(Stage::Y),
            "doubleprime" => Ok(Stage::DoublePrime),
            "final" | "Yfinal" => Ok(Stage::Final),
            _ => Err(Error::Unknown {
                kind: "stage",
                name: s.to_string(),
            }),
        }
    }
}
