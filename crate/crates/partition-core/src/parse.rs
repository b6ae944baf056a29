use crate::{Multipartition, Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("cannot read part {0:?}")]
    BadToken(String),
    #[error(transparent)]
    Shape(#[from] PartitionError),
}

impl std::str::FromStr for Partition {
    type Err = ParseError;

    /// `"4,3,2"`, `"2,1^3"`; the empty string, `"-"` and `"∅"` are empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let bad = || ParseError::BadToken(tok.to_string());
            match tok.split_once('^') {
                Some((w, k)) => {
                    let w: u32 = w.trim().parse().map_err(|_| bad())?;
                    let k: usize = k.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(w, k));
                }
                None => parts.push(tok.parse().map_err(|_| bad())?),
            }
        }
        Ok(Partition::new(parts)?)
    }
}

impl std::str::FromStr for Multipartition {
    type Err = ParseError;

    /// Components separated by `|`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let comps = s.split('|').map(str::parse).collect::<Result<Vec<Partition>, _>>()?;
        Ok(Multipartition::new(comps)?)
    }
}
