//! Reference tables, shipped as JSON data files with a SHA-256
//! manifest.
//!
//! The files are compiled into the crate. Setting [`FIXTURE_DIR_ENV`] makes
//! [`Fixtures::load`] read them from that directory instead; the directory
//! must hold its own `manifest.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::cohomology::SymbolicCount;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::weyl::HighestWeight;

pub const FIXTURE_DIR_ENV: &str = "SP4COH_FIXTURE_DIR";

pub const FILES: [&str; 6] = [
    "weyl_group.json",
    "centralizers.json",
    "euler_sym.json",
    "euler_weight.json",
    "cuspidal.json",
    "h_total.json",
];

const MANIFEST: &str = "manifest.json";

const EMBEDDED: [(&str, &str); 7] = [
    ("weyl_group.json", include_str!("../data/weyl_group.json")),
    ("centralizers.json", include_str!("../data/centralizers.json")),
    ("euler_sym.json", include_str!("../data/euler_sym.json")),
    ("euler_weight.json", include_str!("../data/euler_weight.json")),
    ("cuspidal.json", include_str!("../data/cuspidal.json")),
    ("h_total.json", include_str!("../data/h_total.json")),
    (MANIFEST, include_str!("../data/manifest.json")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureSource {
    Embedded,
    Directory(PathBuf),
}

#[derive(Clone, Debug, Deserialize)]
pub struct WeylRow {
    pub label: String,
    pub word: Vec<String>,
    pub length: usize,
    /// `[c_m1, c_m2, c]` for the first epsilon coordinate of `w . lambda`.
    pub a: [i64; 3],
    pub b: [i64; 3],
}

#[derive(Clone, Debug, Deserialize)]
pub struct KostantSets {
    #[serde(rename = "P1")]
    pub p1: Vec<String>,
    #[serde(rename = "P2")]
    pub p2: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct WeylTable {
    pub rows: Vec<WeylRow>,
    pub kostant: KostantSets,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CaseRow {
    pub case: String,
    pub ids: Vec<usize>,
    pub chi: Rat,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FamilyRow {
    pub family: String,
    pub ids: Vec<usize>,
    pub chi: Rat,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CentralizerTable {
    pub cases: Vec<CaseRow>,
    pub families: Vec<FamilyRow>,
}

#[derive(Deserialize)]
struct SymFile {
    rows: Vec<Vec<i64>>,
}

/// A table value: an integer, or a string `z`, `z-2`, `z+1` where
/// `z = 2 zeta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCount(pub SymbolicCount);

impl TableCount {
    pub fn parse(text: &str) -> Option<SymbolicCount> {
        let text = text.trim();
        match text.strip_prefix('z') {
            Some("") => Some(SymbolicCount::zeta(2)),
            Some(rest) => {
                let rest = rest.strip_prefix('+').unwrap_or(rest);
                rest.parse::<i64>().ok().map(|c| SymbolicCount::new(c, 2))
            }
            None => text.parse::<i64>().ok().map(SymbolicCount::constant),
        }
    }
}

impl<'de> Deserialize<'de> for TableCount {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(TableCount(SymbolicCount::constant(v))),
            Raw::Text(s) => TableCount::parse(&s)
                .map(TableCount)
                .ok_or_else(|| serde::de::Error::custom(format!("bad table entry {s:?}"))),
        }
    }
}

/// Rows indexed by `m1`, columns by `m2`.
#[derive(Clone, Debug, Deserialize)]
pub struct Grid<T> {
    pub m1: Vec<u64>,
    pub m2: Vec<u64>,
    pub rows: Vec<Vec<T>>,
}

impl<T> Grid<T> {
    pub fn cells(&self) -> impl Iterator<Item = (HighestWeight, &T)> {
        self.rows.iter().zip(&self.m1).flat_map(move |(row, &m1)| {
            row.iter().zip(&self.m2).map(move |(v, &m2)| (HighestWeight::new(m1, m2), v))
        })
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check_shape(&self, name: &str) -> Result<()> {
        let ok = self.rows.len() == self.m1.len() && self.rows.iter().all(|r| r.len() == self.m2.len());
        if ok {
            Ok(())
        } else {
            Err(Error::Fixture {
                name: name.into(),
                detail: "row or column count disagrees with the axis labels".into(),
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fixtures {
    pub source: FixtureSource,
    pub weyl: WeylTable,
    pub centralizers: CentralizerTable,
    /// `chi_h(Sym^{2k} V)` indexed by `k`.
    pub euler_sym: Vec<i64>,
    pub euler_weight: Grid<i64>,
    pub cuspidal: Grid<TableCount>,
    pub h_total: Grid<TableCount>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Deserialize)]
struct Manifest {
    files: std::collections::BTreeMap<String, String>,
}

fn parse<T: DeserializeOwned>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Fixture {
        name: name.into(),
        detail: e.to_string(),
    })
}

impl Fixtures {
    /// Embedded data, or the directory named by [`FIXTURE_DIR_ENV`] if set.
    pub fn load() -> Result<Self> {
        match std::env::var_os(FIXTURE_DIR_ENV) {
            Some(dir) => Self::from_dir(dir),
            None => Self::embedded(),
        }
    }

    pub fn embedded() -> Result<Self> {
        let read = |name: &str| -> Result<String> {
            EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| Error::Fixture {
                    name: name.into(),
                    detail: "not embedded".into(),
                })
        };
        Self::build(FixtureSource::Embedded, read)
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        let read = |name: &str| -> Result<String> { Ok(fs::read_to_string(dir.join(name))?) };
        Self::build(FixtureSource::Directory(dir.clone()), read)
    }

    fn build(source: FixtureSource, read: impl Fn(&str) -> Result<String>) -> Result<Self> {
        let manifest: Manifest = parse(MANIFEST, &read(MANIFEST)?)?;
        let mut texts = Vec::with_capacity(FILES.len());
        for name in FILES {
            let text = read(name)?;
            let expected = manifest.files.get(name).ok_or_else(|| Error::Fixture {
                name: name.into(),
                detail: "missing from manifest".into(),
            })?;
            let actual = sha256_hex(text.as_bytes());
            if &actual != expected {
                return Err(Error::Fixture {
                    name: name.into(),
                    detail: format!("checksum {actual} does not match manifest {expected}"),
                });
            }
            texts.push(text);
        }
        let sym: SymFile = parse(FILES[2], &texts[2])?;
        let fixtures = Fixtures {
            source,
            weyl: parse(FILES[0], &texts[0])?,
            centralizers: parse(FILES[1], &texts[1])?,
            euler_sym: sym.rows.into_iter().flatten().collect(),
            euler_weight: parse(FILES[3], &texts[3])?,
            cuspidal: parse(FILES[4], &texts[4])?,
            h_total: parse(FILES[5], &texts[5])?,
        };
        fixtures.euler_weight.check_shape(FILES[3])?;
        fixtures.cuspidal.check_shape(FILES[4])?;
        fixtures.h_total.check_shape(FILES[5])?;
        Ok(fixtures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_have_expected_shapes() {
        let f = Fixtures::embedded().unwrap();
        assert_eq!(f.weyl.rows.len(), 8);
        assert_eq!(f.centralizers.cases.len(), 15);
        assert_eq!(f.centralizers.families.len(), 12);
        assert_eq!(f.euler_sym.len(), 150);
        assert_eq!(f.euler_weight.len(), 16 * 15);
        assert_eq!(f.cuspidal.len(), 15 * 15);
        assert_eq!(f.h_total.len(), 15 * 15);
        assert_eq!(f.euler_sym[14], -9);
    }

    #[test]
    fn case_ids_partition_the_classes() {
        let f = Fixtures::embedded().unwrap();
        let mut ids: Vec<usize> = f.centralizers.cases.iter().flat_map(|c| c.ids.clone()).collect();
        ids.sort_unstable();
        assert_eq!(ids, (1..=56).collect::<Vec<_>>());
    }

    #[test]
    fn table_entries_parse() {
        assert_eq!(TableCount::parse("z"), Some(SymbolicCount::zeta(2)));
        assert_eq!(TableCount::parse("z-4"), Some(SymbolicCount::new(-4, 2)));
        assert_eq!(TableCount::parse("z+1"), Some(SymbolicCount::new(1, 2)));
        assert_eq!(TableCount::parse("12"), Some(SymbolicCount::constant(12)));
        assert_eq!(TableCount::parse("q"), None);
    }

    #[test]
    fn tampered_directory_is_rejected() {
        let dir = std::env::temp_dir().join(format!("sp4coh-fixtures-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        for (name, text) in EMBEDDED {
            fs::write(dir.join(name), text).unwrap();
        }
        assert!(Fixtures::from_dir(&dir).is_ok());
        let edited = EMBEDDED[2].1.replacen("-1", "-2", 1);
        fs::write(dir.join(EMBEDDED[2].0), edited).unwrap();
        let err = Fixtures::from_dir(&dir).unwrap_err();
        assert!(matches!(err, Error::Fixture { ref name, .. } if name == "euler_sym.json"));
        fs::remove_dir_all(&dir).unwrap();
    }
}
