use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A structural family, or a resource family with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyLabel {
    Mon,
    Fin,
    Nil,
    Comb,
    Def,
    Suf,
    Ord,
    Comm,
    Circ,
    Nc,
    Ps,
    Uf,
    Reg,
    /// At most `n` non-terminals.
    RlV(usize),
    /// At most `n` rules.
    RlP(usize),
    /// At most `n` states.
    RegZ(usize),
}

impl FamilyLabel {
    /// The twelve structural families, in the order reports list them.
    pub const STRUCTURAL: [FamilyLabel; 12] = [
        FamilyLabel::Mon,
        FamilyLabel::Fin,
        FamilyLabel::Nil,
        FamilyLabel::Comb,
        FamilyLabel::Def,
        FamilyLabel::Suf,
        FamilyLabel::Ord,
        FamilyLabel::Comm,
        FamilyLabel::Circ,
        FamilyLabel::Nc,
        FamilyLabel::Ps,
        FamilyLabel::Uf,
    ];

    pub fn is_structural(&self) -> bool {
        !self.is_resource()
    }

    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            FamilyLabel::RlV(_) | FamilyLabel::RlP(_) | FamilyLabel::RegZ(_)
        )
    }

    pub fn parameter(&self) -> Option<usize> {
        match *self {
            FamilyLabel::RlV(n) | FamilyLabel::RlP(n) | FamilyLabel::RegZ(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyLabel::Mon => "MON",
            FamilyLabel::Fin => "FIN",
            FamilyLabel::Nil => "NIL",
            FamilyLabel::Comb => "COMB",
            FamilyLabel::Def => "DEF",
            FamilyLabel::Suf => "SUF",
            FamilyLabel::Ord => "ORD",
            FamilyLabel::Comm => "COMM",
            FamilyLabel::Circ => "CIRC",
            FamilyLabel::Nc => "NC",
            FamilyLabel::Ps => "PS",
            FamilyLabel::Uf => "UF",
            FamilyLabel::Reg => "REG",
            FamilyLabel::RlV(n) => return write!(f, "RL_V({n})"),
            FamilyLabel::RlP(n) => return write!(f, "RL_P({n})"),
            FamilyLabel::RegZ(n) => return write!(f, "REG_Z({n})"),
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyLabel {
    type Err = Error;

    /// Accepts the display form (`RL_V(2)`) and the short forms `V2`, `P2`,
    /// `Z2`; case is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let up = s.trim().to_ascii_uppercase();
        let plain = match up.as_str() {
            "MON" => Some(FamilyLabel::Mon),
            "FIN" => Some(FamilyLabel::Fin),
            "NIL" => Some(FamilyLabel::Nil),
            "COMB" => Some(FamilyLabel::Comb),
            "DEF" => Some(FamilyLabel::Def),
            "SUF" => Some(FamilyLabel::Suf),
            "ORD" => Some(FamilyLabel::Ord),
            "COMM" => Some(FamilyLabel::Comm),
            "CIRC" => Some(FamilyLabel::Circ),
            "NC" => Some(FamilyLabel::Nc),
            "PS" => Some(FamilyLabel::Ps),
            "UF" => Some(FamilyLabel::Uf),
            "REG" => Some(FamilyLabel::Reg),
            _ => None,
        };
        if let Some(l) = plain {
            return Ok(l);
        }
        let bad = || Error::InvalidArgument(format!("unknown family `{s}`"));
        let (kind, rest) = if let Some(r) = up.strip_prefix("RL_V") {
            ('V', r)
        } else if let Some(r) = up.strip_prefix("RL_P") {
            ('P', r)
        } else if let Some(r) = up.strip_prefix("REG_Z") {
            ('Z', r)
        } else if let Some(r) = up.strip_prefix('V') {
            ('V', r)
        } else if let Some(r) = up.strip_prefix('P') {
            ('P', r)
        } else if let Some(r) = up.strip_prefix('Z') {
            ('Z', r)
        } else {
            return Err(bad());
        };
        let digits = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        let n: usize = digits.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(Error::InvalidArgument(format!("family `{s}` needs n >= 1")));
        }
        Ok(match kind {
            'V' => FamilyLabel::RlV(n),
            'P' => FamilyLabel::RlP(n),
            _ => FamilyLabel::RegZ(n),
        })
    }
}

impl Serialize for FamilyLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilyLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The implications between families drawn as arrows in the subregular
/// hierarchy. An arrow `X -> Y` means every language in `X` is in `Y`.
pub fn subregular_edges() -> Vec<(FamilyLabel, FamilyLabel)> {
    use FamilyLabel::*;
    vec![
        (Fin, Nil),
        (Mon, RegZ(1)),
        (RegZ(1), Nil),
        (RegZ(1), Suf),
        (RegZ(1), Comm),
        (RegZ(1), Uf),
        (RegZ(1), RegZ(2)),
        (RlP(1), Fin),
        (RlP(1), Uf),
        (RlP(1), RlP(2)),
        (RlP(2), RlP(3)),
        (RlP(2), RlV(1)),
        (RlP(3), RlP(4)),
        (RlP(4), RlV(2)),
        (RlV(1), RlV(2)),
        (RegZ(2), RlV(2)),
        (Nil, Def),
        (Nil, RlV(1)),
        (Comb, Def),
        (Comb, RlV(1)),
        (Comb, RegZ(2)),
        (Def, Ord),
        (Def, RlV(2)),
        (Ord, Nc),
        (Nc, Ps),
        (Ps, Reg),
        (Suf, Ps),
        (Comm, Circ),
        (Circ, Reg),
        (Uf, Reg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        for l in FamilyLabel::STRUCTURAL.into_iter().chain([
            FamilyLabel::Reg,
            FamilyLabel::RlV(3),
            FamilyLabel::RlP(2),
            FamilyLabel::RegZ(1),
        ]) {
            assert_eq!(l.to_string().parse::<FamilyLabel>().unwrap(), l);
        }
        assert_eq!("v1".parse::<FamilyLabel>().unwrap(), FamilyLabel::RlV(1));
        assert_eq!("Z2".parse::<FamilyLabel>().unwrap(), FamilyLabel::RegZ(2));
        assert!("Z0".parse::<FamilyLabel>().is_err());
        assert!("XYZ".parse::<FamilyLabel>().is_err());
    }

    #[test]
    fn serde_as_strings() {
        let j = serde_json::to_string(&FamilyLabel::RlP(2)).unwrap();
        assert_eq!(j, "\"RL_P(2)\"");
        assert_eq!(
            serde_json::from_str::<FamilyLabel>(&j).unwrap(),
            FamilyLabel::RlP(2)
        );
    }
}
