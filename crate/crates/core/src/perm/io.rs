//! JSON group files: `{format, name, degree, generators, elements?}` with
//! 1-based image lists.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{PermGroup, Permutation};
use crate::{Error, Result, FORMAT_VERSION};

fn default_format() -> u32 {
    FORMAT_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default = "default_format")]
    pub format: u32,
    pub name: String,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Vec<u32>>>,
}

impl GroupFile {
    pub fn from_group(g: &PermGroup, with_elements: bool) -> Self {
        GroupFile {
            format: FORMAT_VERSION,
            name: g.name().to_string(),
            degree: g.degree(),
            order: Some(g.order()),
            generators: g.generators().iter().map(Permutation::one_based).collect(),
            elements: with_elements
                .then(|| g.elements().iter().map(Permutation::one_based).collect()),
        }
    }

    fn parse_perms(&self, lists: &[Vec<u32>]) -> Result<Vec<Permutation>> {
        lists
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(Error::InvalidGroupFile(format!(
                        "image list of length {} in a degree-{} file",
                        imgs.len(),
                        self.degree
                    )));
                }
                Permutation::from_one_based(imgs)
                    .map_err(|e| Error::InvalidGroupFile(e.to_string()))
            })
            .collect()
    }

    /// Generates the group; when elements are listed they must coincide with
    /// the closure of the generators.
    pub fn to_group(&self, cap: usize) -> Result<PermGroup> {
        if self.format != FORMAT_VERSION {
            return Err(Error::InvalidGroupFile(format!(
                "unsupported format {}",
                self.format
            )));
        }
        if self.degree == 0 {
            return Err(Error::InvalidGroupFile("degree must be positive".into()));
        }
        let mut gens = self.parse_perms(&self.generators)?;
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        let g = PermGroup::generate(&gens, self.name.clone(), cap)?;
        if let Some(order) = self.order {
            if order != g.order() {
                return Err(Error::InvalidGroupFile(format!(
                    "declared order {order}, generated {}",
                    g.order()
                )));
            }
        }
        if let Some(elements) = &self.elements {
            let mut listed = self.parse_perms(elements)?;
            listed.sort();
            listed.dedup();
            if listed != g.elements() {
                return Err(Error::InvalidGroupFile(
                    "listed elements differ from the generated group".into(),
                ));
            }
        }
        Ok(g)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("group files always serialize");
        s.push('\n');
        s
    }
}
