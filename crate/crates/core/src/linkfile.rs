//! JSON link files.
//!
//! ```json
//! {"name": "L7a2", "components": 2,
//!  "seifert": [[0, 1], [0, 0]],
//!  "linking_numbers": {"1,2": -2}}
//! ```
//!
//! Integers outside the 64-bit range are written as decimal strings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::matrix::Matrix;
use crate::seifert::{LinkingNumbers, SeifertMatrix};
use crate::{Error, Result};

/// Arbitrary-precision integer that serializes as a JSON number when it fits
/// in an `i64` and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(JsonInt)
                    .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkFile {
    pub name: String,
    pub components: usize,
    pub seifert: Vec<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking_numbers: Option<BTreeMap<String, JsonInt>>,
}

fn parse_key(key: &str, r: usize) -> Result<(usize, usize)> {
    let bad = |reason: &str| Error::LinkingKey {
        key: key.to_string(),
        reason: reason.to_string(),
    };
    let (i, j) = key.split_once(',').ok_or_else(|| bad("expected \"i,j\""))?;
    let i: usize = i.trim().parse().map_err(|_| bad("not an integer pair"))?;
    let j: usize = j.trim().parse().map_err(|_| bad("not an integer pair"))?;
    if !(1 <= i && i < j && j <= r) {
        return Err(bad(&format!("need 1 <= i < j <= {r}")));
    }
    Ok((i, j))
}

impl LinkFile {
    pub fn validate(&self) -> Result<()> {
        if self.components == 0 {
            return Err(Error::ZeroComponents);
        }
        let n = self.seifert.len();
        for (row, r) in self.seifert.iter().enumerate() {
            if r.len() != n {
                return Err(
                    if self
                        .seifert
                        .iter()
                        .all(|r| r.len() == self.seifert[0].len())
                    {
                        Error::NotSquare {
                            rows: n,
                            cols: r.len(),
                        }
                    } else {
                        Error::RaggedRows {
                            row,
                            expected: n,
                            found: r.len(),
                        }
                    },
                );
            }
        }
        self.linking()?;
        Ok(())
    }

    pub fn seifert_matrix(&self) -> Result<SeifertMatrix> {
        let rows = self
            .seifert
            .iter()
            .map(|r| r.iter().map(|x| x.0.clone()).collect())
            .collect();
        Ok(SeifertMatrix::new(Matrix::from_rows(rows)?, self.components)?.with_name(&self.name))
    }

    /// Linking numbers keyed by 1-based pairs, when present.
    pub fn linking(&self) -> Result<Option<LinkingNumbers>> {
        self.linking_numbers
            .as_ref()
            .map(|m| {
                m.iter()
                    .map(|(k, v)| Ok((parse_key(k, self.components)?, v.0.clone())))
                    .collect::<Result<LinkingNumbers>>()
            })
            .transpose()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("link files serialize")
    }
}

/// Parses and validates a link file.
pub fn parse_link_file(text: &str) -> Result<LinkFile> {
    let file: LinkFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()?;
    Ok(file)
}
