use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::root_datum::{CartanSpec, Family, LatticeKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub family: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeJson {
    Named(String),
    Custom {
        basis: Vec<Vec<i64>>,
        #[serde(default = "one")]
        denominator: i64,
    },
}

fn one() -> i64 {
    1
}

/// On-disk description of a root datum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumFile {
    pub cartan: CartanJson,
    #[serde(default = "adjoint")]
    pub lattice: LatticeJson,
}

fn adjoint() -> LatticeJson {
    LatticeJson::Named("adjoint".into())
}

impl DatumFile {
    pub fn read(path: &Path) -> Result<DatumFile, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        DatumFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<DatumFile, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn to_spec(&self) -> Result<CartanSpec, String> {
        let mut letters = self.cartan.family.chars();
        let family = match (letters.next(), letters.next()) {
            (Some(c), None) => Family::from_letter(c.to_ascii_uppercase()),
            _ => None,
        }
        .ok_or_else(|| format!("unknown family '{}'", self.cartan.family))?;
        let lattice = match &self.lattice {
            LatticeJson::Named(n) => match n.as_str() {
                "adjoint" => LatticeKind::Adjoint,
                "coweight" | "simply_connected" => LatticeKind::Coweight,
                "gl" => LatticeKind::Gl,
                other => return Err(format!("unknown lattice '{other}'")),
            },
            LatticeJson::Custom { basis, denominator } => LatticeKind::Custom {
                basis: basis.clone(),
                denominator: *denominator,
            },
        };
        Ok(CartanSpec::new(family, self.cartan.rank, lattice))
    }

    /// Serialization used for content hashing.
    pub fn canonical(&self) -> String {
        let mut d = self.clone();
        d.cartan.family = d.cartan.family.to_ascii_uppercase();
        serde_json::to_string(&d).expect("datum serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_lattice_forms() {
        let d: DatumFile = serde_json::from_str(r#"{"cartan":{"family":"C","rank":2},"lattice":"adjoint"}"#).unwrap();
        assert_eq!(d.to_spec().unwrap(), CartanSpec::adjoint(Family::C, 2));
        let c: DatumFile =
            serde_json::from_str(r#"{"cartan":{"family":"c","rank":2},"lattice":{"basis":[[1,1],[0,1]]}}"#).unwrap();
        assert!(matches!(
            c.to_spec().unwrap().lattice,
            LatticeKind::Custom { denominator: 1, .. }
        ));
        let bare: DatumFile = serde_json::from_str(r#"{"cartan":{"family":"G","rank":2}}"#).unwrap();
        assert_eq!(bare.lattice, adjoint());
        assert!(bare.canonical().contains("\"G\""));
    }

    #[test]
    fn rejects_unknown_names() {
        let d: DatumFile = serde_json::from_str(r#"{"cartan":{"family":"Q","rank":2}}"#).unwrap();
        assert!(d.to_spec().is_err());
        let d: DatumFile = serde_json::from_str(r#"{"cartan":{"family":"A","rank":2},"lattice":"spin"}"#).unwrap();
        assert!(d.to_spec().is_err());
    }
}
