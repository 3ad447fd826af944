//! Integer parameter lists on the command line: `5`, `3..30` (inclusive),
//! `3..=30`, or a comma-separated mix such as `2,4,10..12`.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RangeError {
    #[error("empty value list")]
    Empty,
    #[error("`{0}` is not a non-negative integer")]
    NotAnInteger(String),
    #[error("range {lo}..{hi} is empty")]
    Reversed { lo: usize, hi: usize },
}

fn number(text: &str) -> Result<usize, RangeError> {
    text.trim().parse().map_err(|_| RangeError::NotAnInteger(text.trim().to_string()))
}

pub fn parse_values(text: &str) -> Result<Vec<usize>, RangeError> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo = number(lo)?;
                let hi = number(hi.strip_prefix('=').unwrap_or(hi))?;
                if hi < lo {
                    return Err(RangeError::Reversed { lo, hi });
                }
                out.extend(lo..=hi);
            }
            None => out.push(number(part)?),
        }
    }
    if out.is_empty() {
        return Err(RangeError::Empty);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_values("5").unwrap(), vec![5]);
        assert_eq!(parse_values("3..6").unwrap(), vec![3, 4, 5, 6]);
        assert_eq!(parse_values("3..=4").unwrap(), vec![3, 4]);
        assert_eq!(parse_values("2,7..8").unwrap(), vec![2, 7, 8]);
        assert_eq!(parse_values("6..3"), Err(RangeError::Reversed { lo: 6, hi: 3 }));
        assert_eq!(parse_values(""), Err(RangeError::Empty));
        assert!(matches!(parse_values("x"), Err(RangeError::NotAnInteger(_))));
    }
}
