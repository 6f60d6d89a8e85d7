//! The on-disk group file format.
//!
//! A group file is a JSON document in one of two shapes:
//!
//! - a named family: `{"family": "cyclic", "n": 8}` (or `"dihedral"`, whose
//!   `n` counts rotations, so the group has `2n` elements);
//! - an explicit table: `{"table": [[0,1],[1,0]], "labels": ["1","a"]}`,
//!   where row `a`, column `b` holds the index of `a∘b` and row order is
//!   element index order.
//!
//! Writing a group always uses the explicit-table shape, so a written file
//! reloads to an identical operation table regardless of how the group was
//! first constructed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

/// Parsed contents of a group file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Named { family: String, n: usize },
    Table {
        table: Vec<Vec<usize>>,
        labels: Vec<String>,
    },
}

#[derive(Debug, Error)]
pub enum GroupFileError {
    #[error("group file is not valid JSON in either accepted shape: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown group family {0:?} (expected \"cyclic\" or \"dihedral\")")]
    UnknownFamily(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl GroupFile {
    /// Capture a group as an explicit table document.
    pub fn from_group(group: &FiniteGroup) -> GroupFile {
        let n = group.order();
        GroupFile::Table {
            table: (0..n)
                .map(|a| (0..n).map(|b| group.mul(a, b)).collect())
                .collect(),
            labels: group.labels().to_vec(),
        }
    }

    /// Parse a JSON document in either accepted shape.
    pub fn parse(text: &str) -> Result<GroupFile, GroupFileError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Render as JSON (pretty-printed, trailing newline).
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }

    /// Realize the described group, validating tables eagerly.
    pub fn to_group(&self) -> Result<FiniteGroup, GroupFileError> {
        match self {
            GroupFile::Named { family, n } => match family.as_str() {
                "cyclic" => Ok(FiniteGroup::cyclic(*n)?),
                "dihedral" => Ok(FiniteGroup::dihedral(*n)?),
                other => Err(GroupFileError::UnknownFamily(other.to_string())),
            },
            GroupFile::Table { table, labels } => {
                Ok(FiniteGroup::from_table(table.clone(), Some(labels.clone()))?)
            }
        }
    }
}
