//! Shipped data files, embedded at build time and overridable from a directory.

use std::fs;
use std::path::Path;

use crate::error::Result;
use crate::fibered::KodairaTable;
use crate::presentations::Presentation;

pub const SL2Z_FILE: &str = "sl2z.json";
pub const GENUS2_FILE: &str = "genus2.json";
pub const KODAIRA_FILE: &str = "kodaira.json";

pub(crate) const KODAIRA_JSON: &str = include_str!("../data/kodaira.json");

/// The presentations of `M_1`, `M_2` and the Kodaira monodromy table.
#[derive(Debug, Clone)]
pub struct DataSet {
    pub sl2z: Presentation,
    pub genus2: Presentation,
    pub kodaira: KodairaTable,
}

impl DataSet {
    pub fn embedded() -> Self {
        let sl2z = Presentation::sl2z();
        let kodaira = KodairaTable::from_json(KODAIRA_JSON, &sl2z).expect("shipped Kodaira table is valid");
        Self {
            sl2z,
            genus2: Presentation::genus2(),
            kodaira,
        }
    }

    /// Loads whichever of the three files exist in `dir`, falling back to the
    /// embedded copy for the rest. Every file is validated on load.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let load = |name: &str| -> Result<Option<String>> {
            let path = dir.join(name);
            if path.exists() {
                Ok(Some(fs::read_to_string(path)?))
            } else {
                Ok(None)
            }
        };
        let sl2z = match load(SL2Z_FILE)? {
            Some(text) => Presentation::from_json(&text)?,
            None => Presentation::sl2z(),
        };
        let genus2 = match load(GENUS2_FILE)? {
            Some(text) => Presentation::from_json(&text)?,
            None => Presentation::genus2(),
        };
        let kodaira = match load(KODAIRA_FILE)? {
            Some(text) => KodairaTable::from_json(&text, &sl2z)?,
            None => KodairaTable::from_json(KODAIRA_JSON, &sl2z)?,
        };
        Ok(Self { sl2z, genus2, kodaira })
    }

    /// Presentation used for genus `g` words, if one ships.
    pub fn presentation(&self, genus: usize) -> Option<&Presentation> {
        match genus {
            1 => Some(&self.sl2z),
            2 => Some(&self.genus2),
            _ => None,
        }
    }
}

impl Default for DataSet {
    fn default() -> Self {
        Self::embedded()
    }
}
