//! JSON input for complexes, canonical hashing and the report envelope.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};

/// The on-disk form of a complex: `m` plus exactly one of `facets` or
/// `missing_faces`. `"facets": []` denotes `{∅}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    m: usize,
    #[serde(default)]
    facets: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    missing_faces: Option<Vec<Vec<u32>>>,
}

/// Canonical serialized form: facets sorted as stored.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComplexDoc {
    pub m: usize,
    pub facets: Vec<Vec<u32>>,
}

impl From<&SimplicialComplex> for ComplexDoc {
    fn from(k: &SimplicialComplex) -> Self {
        let facets = if k.facets() == [FaceSet::empty()] {
            Vec::new()
        } else {
            k.facets().iter().map(|f| f.as_slice().to_vec()).collect()
        };
        ComplexDoc { m: k.m(), facets }
    }
}

fn as_malformed(e: Error) -> Error {
    match e {
        Error::Domain(msg) => Error::Malformed(msg),
        other => other,
    }
}

fn face_list(sets: Vec<Vec<u32>>) -> Result<Vec<FaceSet>> {
    sets.into_iter()
        .map(|s| {
            let f = FaceSet::new(s.iter().copied());
            if f.len() != s.len() {
                Err(Error::malformed(format!("{s:?} repeats a vertex")))
            } else {
                Ok(f)
            }
        })
        .collect()
}

/// Parses a complex from its JSON description.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = serde_json::from_str(text)
        .map_err(|e| Error::malformed(format!("bad complex JSON: {e}")))?;
    if file.m == 0 {
        return Err(Error::malformed("m must be positive"));
    }
    match (file.facets, file.missing_faces) {
        (Some(f), None) => {
            SimplicialComplex::from_facets(file.m, face_list(f)?).map_err(as_malformed)
        }
        (None, Some(mf)) => SimplicialComplex::from_missing_faces(file.m, face_list(mf)?),
        _ => Err(Error::malformed(
            "give exactly one of \"facets\" and \"missing_faces\"",
        )),
    }
}

/// The canonical JSON text of a complex, used for hashing and caching.
pub fn canonical_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexDoc::from(k)).expect("plain data serializes")
}

/// `sha256:<hex>` of [`canonical_json`]. Two descriptions of the same
/// complex hash identically.
pub fn canonical_hash(k: &SimplicialComplex) -> String {
    let digest = Sha256::digest(canonical_json(k).as_bytes());
    format!("sha256:{}", hex::encode(digest))
}

/// Every report produced by the command-line tool.
#[derive(Clone, Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Present whenever the command reads a complex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<ComplexDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_hash: Option<String>,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, input: Option<&SimplicialComplex>, result: T) -> Self {
        Report {
            tool: "arrcoh",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input: input.map(ComplexDoc::from),
            input_hash: input.map(canonical_hash),
            result,
        }
    }
}
