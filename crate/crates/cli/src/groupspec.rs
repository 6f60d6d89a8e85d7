//! Group specification parsing: `cyclic:N`, `dihedral:N`, or a path to a
//! group file, supplied either positionally or via `--group`.

use clap::Args;
use rough_cayley::group::{ElementSet, FiniteGroup};
use rough_cayley::groupfile::GroupFile;

#[derive(Args, Debug)]
pub struct GroupArg {
    /// Group: `cyclic:N`, `dihedral:N`, or a group-file path.
    #[arg(value_name = "GROUP")]
    positional: Option<String>,

    /// Group spec or file path (alternative to the positional argument).
    #[arg(long = "group", value_name = "SPEC")]
    flag: Option<String>,
}

impl GroupArg {
    pub fn spec(&self) -> Result<&str, String> {
        match (&self.positional, &self.flag) {
            (Some(_), Some(_)) => {
                Err("give the group either positionally or via --group, not both".to_string())
            }
            (Some(spec), None) | (None, Some(spec)) => Ok(spec),
            (None, None) => Err("no group given (positional or --group)".to_string()),
        }
    }

    pub fn load(&self) -> Result<(String, FiniteGroup), String> {
        let spec = self.spec()?;
        Ok((spec.to_string(), load_spec(spec)?))
    }
}

pub fn load_spec(spec: &str) -> Result<FiniteGroup, String> {
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        let n: usize = rest
            .parse()
            .map_err(|_| format!("invalid cyclic order {rest:?}"))?;
        return FiniteGroup::cyclic(n).map_err(|err| err.to_string());
    }
    if let Some(rest) = spec.strip_prefix("dihedral:") {
        let n: usize = rest
            .parse()
            .map_err(|_| format!("invalid dihedral rotation count {rest:?}"))?;
        return FiniteGroup::dihedral(n).map_err(|err| err.to_string());
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|err| format!("cannot read group file {spec:?}: {err}"))?;
    GroupFile::parse(&text)
        .and_then(|file| file.to_group())
        .map_err(|err| err.to_string())
}

/// Parse a comma-separated list of element labels into a set. An empty or
/// missing argument is the empty set.
pub fn parse_labels(group: &FiniteGroup, text: Option<&str>) -> Result<ElementSet, String> {
    let Some(text) = text else {
        return Ok(ElementSet::EMPTY);
    };
    let labels: Vec<&str> = text
        .split(',')
        .map(str::trim)
        .filter(|token| !token.is_empty())
        .collect();
    group.set_from_labels(labels).map_err(|err| err.to_string())
}
