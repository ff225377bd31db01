//! JSON file formats: posets as element/cover/zeta documents, simplicial
//! complexes as vertex/facet documents, and subdivision pairs with their
//! carrier maps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex};
use crate::poset::{Poset, PosetError, PosetSpec};
use crate::rat::{parse_rat, render_rat};

/// A failure while reading or writing a document.
#[derive(Debug, Error)]
pub enum IoError {
    /// The text is not valid JSON for the expected document shape.
    #[error("invalid JSON: {0}")]
    Json(String),
    /// A zeta value string is not a valid rational.
    #[error("invalid rational: {0}")]
    Rational(String),
    /// The document parsed but does not describe a valid poset.
    #[error(transparent)]
    Poset(#[from] PosetError),
    /// The document parsed but does not describe a valid complex.
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Serialize, Deserialize)]
struct ElementEntry {
    id: String,
    rank: i64,
}

#[derive(Serialize, Deserialize)]
struct ZetaEntry {
    from: String,
    to: String,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    elements: Vec<ElementEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    relations: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    top: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    zeta: Vec<ZetaEntry>,
}

/// Reads a poset document: `elements` with ids and ranks, `covers` or
/// `relations` pairs generating the order, optional `bottom`/`top` ids, and
/// `zeta` overrides with `"p/q"` values.
pub fn parse_poset_file(text: &str) -> Result<Poset, IoError> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    let mut relations = file.covers;
    relations.extend(file.relations);
    let mut zeta = Vec::with_capacity(file.zeta.len());
    for entry in file.zeta {
        let value = parse_rat(&entry.value).map_err(IoError::Rational)?;
        zeta.push((entry.from, entry.to, value));
    }
    let spec = PosetSpec {
        elements: file.elements.into_iter().map(|e| (e.id, e.rank)).collect(),
        relations,
        bottom: file.bottom,
        top: file.top,
        zeta,
    };
    Ok(spec.build()?)
}

/// Writes a poset as a canonical document: elements in internal order,
/// cover relations only, and explicit zeta overrides. The output re-ingests
/// to a poset identical to the input.
pub fn render_poset_file(p: &Poset) -> String {
    let elements = (0..p.len())
        .map(|i| ElementEntry {
            id: p.id(i).to_string(),
            rank: p.rank(i),
        })
        .collect();
    let covers = p
        .covers()
        .into_iter()
        .map(|(i, j)| (p.id(i).to_string(), p.id(j).to_string()))
        .collect();
    let mut zeta: Vec<ZetaEntry> = p
        .zeta_overrides()
        .map(|(i, j, value)| ZetaEntry {
            from: p.id(i).to_string(),
            to: p.id(j).to_string(),
            value: render_rat(value),
        })
        .collect();
    zeta.sort_by(|a, b| (&a.from, &a.to).cmp(&(&b.from, &b.to)));
    let file = PosetFile {
        elements,
        covers,
        relations: Vec::new(),
        bottom: p.bottom().map(|i| p.id(i).to_string()),
        top: p.top().map(|i| p.id(i).to_string()),
        zeta,
    };
    let mut out = serde_json::to_string_pretty(&file).expect("poset documents serialize");
    out.push('\n');
    out
}

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    #[serde(default)]
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

/// Reads a complex document: `facets` as vertex-name lists, plus optional
/// declared `vertices`; a declared vertex in no facet becomes a singleton
/// facet of its own.
pub fn parse_complex_file(text: &str) -> Result<SimplicialComplex, IoError> {
    let file: ComplexFile =
        serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    Ok(complex_from_file(file)?)
}

fn complex_from_file(file: ComplexFile) -> Result<SimplicialComplex, ComplexError> {
    let mut facets: Vec<Face> = file
        .facets
        .into_iter()
        .map(|f| f.into_iter().collect())
        .collect();
    for vertex in file.vertices {
        if !facets.iter().any(|f| f.contains(&vertex)) {
            facets.push(Face::from([vertex]));
        }
    }
    SimplicialComplex::new(facets)
}

#[derive(Serialize, Deserialize)]
struct PairFile {
    gamma: ComplexFile,
    lambda: ComplexFile,
    #[serde(default)]
    carrier: BTreeMap<String, String>,
}

/// Reads a subdivision-pair document: a coarse complex `gamma`, a
/// subdivision `lambda`, and a `carrier` map from lambda faces to gamma
/// faces, both written as comma-joined vertex names.
pub fn parse_pair_file(
    text: &str,
) -> Result<(SimplicialComplex, SimplicialComplex, BTreeMap<Face, Face>), IoError> {
    let file: PairFile = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    let gamma = complex_from_file(file.gamma)?;
    let lambda = complex_from_file(file.lambda)?;
    let carrier = file
        .carrier
        .into_iter()
        .map(|(from, to)| (parse_face_text(&from), parse_face_text(&to)))
        .collect();
    Ok((gamma, lambda, carrier))
}

/// Splits a comma-joined vertex list into a face; empty text is the empty
/// face.
pub fn parse_face_text(text: &str) -> Face {
    text.split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(str::to_string)
        .collect()
}
