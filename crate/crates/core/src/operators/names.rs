use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The fifteen so(4,2) generators acting on labeled states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OperatorName {
    APlus,
    AMinus,
    ATildePlus,
    ATildeMinus,
    BPlus,
    BMinus,
    BTildePlus,
    BTildeMinus,
    CPlus,
    CMinus,
    CTildePlus,
    CTildeMinus,
    L0,
    L1,
    L2,
}

use OperatorName::*;

impl OperatorName {
    pub const ALL: [OperatorName; 15] = [
        APlus,
        AMinus,
        ATildePlus,
        ATildeMinus,
        BPlus,
        BMinus,
        BTildePlus,
        BTildeMinus,
        CPlus,
        CMinus,
        CTildePlus,
        CTildeMinus,
        L0,
        L1,
        L2,
    ];

    pub const LADDERS: [OperatorName; 12] = [
        APlus,
        AMinus,
        ATildePlus,
        ATildeMinus,
        BPlus,
        BMinus,
        BTildePlus,
        BTildeMinus,
        CPlus,
        CMinus,
        CTildePlus,
        CTildeMinus,
    ];

    /// Raising operators of su(2,1).
    pub const SU21_RAISING: [OperatorName; 3] = [APlus, BPlus, CPlus];

    /// Raising operators of so(4,2).
    pub const SO42_RAISING: [OperatorName; 6] = [APlus, ATildePlus, BPlus, BTildePlus, CPlus, CTildePlus];

    /// Label shift produced by the operator.
    pub fn shift(self) -> [i64; 3] {
        match self {
            APlus => [-1, -1, 0],
            AMinus => [1, 1, 0],
            ATildePlus => [1, -1, 0],
            ATildeMinus => [-1, 1, 0],
            BPlus => [-1, 0, -1],
            BMinus => [1, 0, 1],
            BTildePlus => [1, 0, -1],
            BTildeMinus => [-1, 0, 1],
            CPlus => [0, 1, -1],
            CMinus => [0, -1, 1],
            CTildePlus => [0, -1, -1],
            CTildeMinus => [0, 1, 1],
            L0 | L1 | L2 => [0, 0, 0],
        }
    }

    pub fn is_ladder(self) -> bool {
        !matches!(self, L0 | L1 | L2)
    }

    pub fn is_tilde(self) -> bool {
        matches!(
            self,
            ATildePlus | ATildeMinus | BTildePlus | BTildeMinus | CTildePlus | CTildeMinus
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            APlus => "A+",
            AMinus => "A-",
            ATildePlus => "Atilde+",
            ATildeMinus => "Atilde-",
            BPlus => "B+",
            BMinus => "B-",
            BTildePlus => "Btilde+",
            BTildeMinus => "Btilde-",
            CPlus => "C+",
            CMinus => "C-",
            CTildePlus => "Ctilde+",
            CTildeMinus => "Ctilde-",
            L0 => "L0",
            L1 => "L1",
            L2 => "L2",
        }
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        OperatorName::ALL
            .into_iter()
            .find(|op| op.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "operator name",
                input: s.to_string(),
            })
    }
}

/// A product of generators, applied right to left as written:
/// `"C+ A+"` means `C+ (A+ ψ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorWord(pub Vec<OperatorName>);

impl OperatorWord {
    pub fn empty() -> Self {
        OperatorWord(Vec::new())
    }

    /// Generators in application order (rightmost first).
    pub fn application_order(&self) -> impl Iterator<Item = OperatorName> + '_ {
        self.0.iter().rev().copied()
    }

    /// `op · self`.
    pub fn then(&self, op: OperatorName) -> OperatorWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(op);
        v.extend_from_slice(&self.0);
        OperatorWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_shift(&self) -> [i64; 3] {
        self.0.iter().fold([0; 3], |acc, op| {
            let s = op.shift();
            [acc[0] + s[0], acc[1] + s[1], acc[2] + s[2]]
        })
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self.0.iter().map(|o| o.as_str()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(OperatorWord::empty());
        }
        s.split(|c: char| c.is_whitespace() || c == '*' || c == '·')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(OperatorWord)
    }
}

impl Serialize for OperatorWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OperatorWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
