//! JSON records. Field names are part of the interface; keep them stable.

use serde::Serialize;

use dyckperm::bijection::Preimage;
use dyckperm::{DyckPath, PathPair, Permutation};

#[derive(Debug, Serialize)]
pub struct Codes {
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
}

#[derive(Debug, Serialize)]
pub struct Extrema {
    pub values: Vec<usize>,
    pub positions: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Profiles {
    pub ltr_minima: Extrema,
    pub rtl_maxima: Extrema,
}

impl Profiles {
    pub fn of(perm: &Permutation) -> Self {
        let min = perm.ltr_minima();
        let max = perm.rtl_maxima();
        Profiles {
            ltr_minima: Extrema {
                values: min.values,
                positions: min.positions,
            },
            rtl_maxima: Extrema {
                values: max.values,
                positions: max.positions,
            },
        }
    }
}

/// Shared shape of `map`, `unmap`, `admissible` and `canon`.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairRecord {
    pub perm: Option<String>,
    pub path_p: String,
    pub path_q: String,
    pub codes: Codes,
    pub profiles: Option<Profiles>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible: Option<bool>,
}

impl PairRecord {
    pub fn new(perm: Option<&Permutation>, pair: &PathPair) -> Self {
        PairRecord {
            perm: perm.map(ToString::to_string),
            path_p: pair.first.to_string(),
            path_q: pair.second.to_string(),
            codes: Codes {
                p: pair.first.to_code().to_string(),
                q: pair.second.to_code().to_string(),
            },
            profiles: perm.map(Profiles::of),
            input: None,
            sigma: None,
            tau: None,
            admissible: None,
        }
    }

    pub fn with_preimage(pair: &PathPair, pre: &Preimage) -> Self {
        PairRecord {
            sigma: Some(pre.sigma.to_string()),
            tau: Some(pre.tau.to_string()),
            ..PairRecord::new(Some(&pre.alpha), pair)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PathRecord {
    pub path: String,
    pub code: String,
}

impl PathRecord {
    pub fn of(path: &DyckPath) -> Self {
        PathRecord {
            path: path.to_string(),
            code: path.to_code().to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ImageRecord {
    pub input: PathRecord,
    pub output: PathRecord,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LeqRecord {
    pub path_p: String,
    pub path_q: String,
    pub leq: bool,
}

#[derive(Debug, Serialize)]
pub struct CoversRecord {
    pub path: String,
    pub covers: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct DotRecord {
    pub n: usize,
    pub dot: String,
}

#[derive(Debug, Serialize)]
pub struct PermRecord {
    pub perm: String,
}

#[derive(Debug, Serialize)]
pub struct CountRecord {
    pub n: usize,
    pub objects: String,
    pub count: u64,
}

#[derive(Debug, Serialize)]
pub struct RenderRecord {
    pub path: String,
    pub code: String,
    pub ascii: String,
}
