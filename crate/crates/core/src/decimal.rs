//! Serde adapters writing arbitrary-precision numbers as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {text:?}")))
    }
}

pub mod bigint_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|t| t.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {t:?}"))))
            .collect()
    }
}

pub mod bigint_opt {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {t:?}"))))
            .transpose()
    }
}

/// `p/q` in lowest terms, or just `p` for integers.
pub mod bigrational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        let bad = || D::Error::custom(format!("not a rational number: {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, q)) => (n.parse::<BigInt>().map_err(|_| bad())?, q.parse::<BigInt>().map_err(|_| bad())?),
            None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
        };
        if den == BigInt::from(0) {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use serde::{Deserialize, Serialize};

    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Sample {
        #[serde(with = "bigint")]
        a: BigInt,
        #[serde(with = "bigint_vec")]
        v: Vec<BigInt>,
        #[serde(with = "bigrational")]
        r: BigRational,
        #[serde(with = "bigint_opt")]
        o: Option<BigInt>,
    }

    #[test]
    fn round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let sample = Sample {
            a: -big.clone(),
            v: vec![big.clone(), BigInt::from(7)],
            r: BigRational::new(BigInt::from(6), BigInt::from(-4)),
            o: None,
        };
        let text = serde_json::to_string(&sample).unwrap();
        assert_eq!(
            text,
            r#"{"a":"-123456789012345678901234567890","v":["123456789012345678901234567890","7"],"r":"-3/2","o":null}"#
        );
        assert_eq!(serde_json::from_str::<Sample>(&text).unwrap(), sample);
        assert!(serde_json::from_str::<Sample>(r#"{"a":"x","v":[],"r":"1","o":null}"#).is_err());
    }
}
