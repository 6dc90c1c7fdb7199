//! JSON documents for colorings, labeled factorizations and bound
//! certificates.
//!
//! Serialization is canonical: keys sorted, edges sorted, two-space
//! indentation, one edge or matching edge list per line and a trailing
//! newline, so writing a parsed document reproduces it byte for byte.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::bounds::{BoundCertificate, FilterKind};
use crate::coloring::{EdgeColoring, ShiftVector};
use crate::equivalence::{Label, LabeledFactorization, LabeledMatching};
use crate::error::{Error, Result};
use crate::graph::{Edge, PairedOrdering, PerfectMatching};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredEdge {
    pub a: usize,
    pub b: usize,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift_vector: Option<Vec<u32>>,
}

/// Fields are declared in key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub edges: Vec<ColoredEdge>,
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub n: usize,
    pub t: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelField(pub Label);

impl Serialize for LabelField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Label::Free => s.serialize_str("free"),
            Label::Split(i) => s.serialize_u64(i as u64),
        }
    }
}

impl<'de> Deserialize<'de> for LabelField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = LabelField;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("\"free\" or a positive split index")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<LabelField, E> {
                if s == "free" {
                    Ok(LabelField(Label::Free))
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(s), &self))
                }
            }

            fn visit_u64<E: de::Error>(self, i: u64) -> std::result::Result<LabelField, E> {
                if i == 0 {
                    Err(E::invalid_value(de::Unexpected::Unsigned(0), &self))
                } else {
                    Ok(LabelField(Label::Split(i as usize)))
                }
            }

            fn visit_i64<E: de::Error>(self, i: i64) -> std::result::Result<LabelField, E> {
                if i <= 0 {
                    Err(E::invalid_value(de::Unexpected::Signed(i), &self))
                } else {
                    self.visit_u64(i as u64)
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchingEntry {
    pub edges: Vec<[usize; 2]>,
    pub label: LabelField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationDocument {
    pub format_version: u32,
    pub matchings: Vec<MatchingEntry>,
    pub n: usize,
    /// Vertex sequence `u_1 v_1 u_2 v_2 ...`; identity when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub claimed_bound: Option<u32>,
    pub examined: u64,
    pub filters: Vec<String>,
    pub format_version: u32,
    pub n: usize,
    pub survivors: Vec<Vec<u32>>,
    pub total: u32,
    pub verdict: String,
}

fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents always serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(o) => o.values().all(|x| !x.is_array() && !x.is_object()),
        _ => true,
    }
}

/// Containers of scalars go on one line, everything else is indented.
fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Object(o) if o.is_empty() => out.push_str("{}"),
        Value::Array(a) if is_flat(v) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", items.join(", ")));
        }
        Value::Object(o) if is_flat(v) => {
            let items: Vec<String> = o.iter().map(|(k, x)| format!("{}: {x}", Value::from(k.as_str()))).collect();
            out.push_str(&format!("{{{}}}", items.join(", ")));
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(o) => {
            out.push_str("{\n");
            for (i, (k, x)) in o.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Document(format!("{what}: {e}")))
}

fn check_version(v: u32) -> Result<()> {
    if v != FORMAT_VERSION {
        return Err(Error::Document(format!(
            "format_version: unsupported version {v}, expected {FORMAT_VERSION}"
        )));
    }
    Ok(())
}

impl ColoringDocument {
    pub fn from_coloring(c: &EdgeColoring, metadata: Option<Metadata>) -> Self {
        ColoringDocument {
            edges: c
                .entries()
                .map(|(e, color)| ColoredEdge { a: e.a(), b: e.b(), color })
                .collect(),
            format_version: FORMAT_VERSION,
            metadata,
            n: c.n(),
            t: c.t(),
        }
    }

    /// The coloring, with every problem reported against its field.
    pub fn to_coloring(&self) -> Result<EdgeColoring> {
        check_version(self.format_version)?;
        if self.n == 0 {
            return Err(Error::Document("n: must be at least 1".into()));
        }
        let v = 2 * self.n;
        for (k, e) in self.edges.iter().enumerate() {
            if e.a >= v || e.b >= v || e.a == e.b {
                return Err(Error::Document(format!(
                    "edges[{k}]: {{a: {}, b: {}}} is not an edge of K_{v}",
                    e.a, e.b
                )));
            }
            if e.color == 0 || e.color > self.t {
                return Err(Error::Document(format!(
                    "edges[{k}].color: {} outside 1..={}",
                    e.color, self.t
                )));
            }
        }
        EdgeColoring::from_entries(self.n, self.t, self.edges.iter().map(|e| (e.a, e.b, e.color)))
            .map_err(|e| Error::Document(format!("edges: {e}")))
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = parse(text, "coloring document")?;
        check_version(doc.format_version)?;
        Ok(doc)
    }
}

impl FactorizationDocument {
    pub fn from_factorization(f: &LabeledFactorization) -> Self {
        FactorizationDocument {
            format_version: FORMAT_VERSION,
            matchings: f
                .matchings()
                .iter()
                .map(|m| MatchingEntry {
                    edges: m.matching.edges().iter().map(|e| [e.a(), e.b()]).collect(),
                    label: LabelField(m.label),
                })
                .collect(),
            n: f.n(),
            ordering: (!f.ordering().is_identity()).then(|| f.ordering().sequence().to_vec()),
        }
    }

    pub fn to_factorization(&self) -> Result<LabeledFactorization> {
        check_version(self.format_version)?;
        let n = self.n;
        if n == 0 {
            return Err(Error::Document("n: must be at least 1".into()));
        }
        let ordering = match &self.ordering {
            None => PairedOrdering::identity(n),
            Some(seq) => PairedOrdering::from_sequence(seq.clone())
                .map_err(|e| Error::Document(format!("ordering: {e}")))?,
        };
        let mut matchings = Vec::with_capacity(self.matchings.len());
        for (k, m) in self.matchings.iter().enumerate() {
            let mut edges = Vec::with_capacity(m.edges.len());
            for (j, &[a, b]) in m.edges.iter().enumerate() {
                edges.push(
                    Edge::try_new(a, b, n)
                        .map_err(|e| Error::Document(format!("matchings[{k}].edges[{j}]: {e}")))?,
                );
            }
            let matching = PerfectMatching::from_edges(n, edges)
                .map_err(|e| Error::Document(format!("matchings[{k}].edges: {e}")))?;
            matchings.push(LabeledMatching { matching, label: m.label.0 });
        }
        LabeledFactorization::new(n, ordering, matchings).map_err(|e| Error::Document(format!("matchings: {e}")))
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = parse(text, "factorization document")?;
        check_version(doc.format_version)?;
        Ok(doc)
    }
}

impl CertificateDocument {
    pub fn from_certificate(c: &BoundCertificate) -> Self {
        CertificateDocument {
            claimed_bound: c.claimed_bound,
            examined: c.examined,
            filters: c.filters.iter().map(|f| f.name().to_string()).collect(),
            format_version: FORMAT_VERSION,
            n: c.n,
            survivors: c.survivors.iter().map(|v| v.as_slice().to_vec()).collect(),
            total: c.total,
            verdict: if c.is_empty() { "empty" } else { "nonempty" }.into(),
        }
    }

    pub fn to_certificate(&self) -> Result<BoundCertificate> {
        check_version(self.format_version)?;
        let filters = self
            .filters
            .iter()
            .enumerate()
            .map(|(k, s)| s.parse::<FilterKind>().map_err(|e| Error::Document(format!("filters[{k}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let expected = if self.survivors.is_empty() { "empty" } else { "nonempty" };
        if self.verdict != expected {
            return Err(Error::Document(format!(
                "verdict: {:?} but {} survivors listed",
                self.verdict,
                self.survivors.len()
            )));
        }
        Ok(BoundCertificate {
            n: self.n,
            total: self.total,
            filters,
            examined: self.examined,
            survivors: self.survivors.iter().cloned().map(ShiftVector::new).collect(),
            claimed_bound: self.claimed_bound,
        })
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = parse(text, "certificate document")?;
        check_version(doc.format_version)?;
        Ok(doc)
    }
}

/// Any document, told apart by its keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Coloring(ColoringDocument),
    Factorization(FactorizationDocument),
    Certificate(CertificateDocument),
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = parse(text, "document")?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Document("document: expected a JSON object at line 1".into()))?;
        if obj.contains_key("edges") {
            ColoringDocument::from_json(text).map(Document::Coloring)
        } else if obj.contains_key("matchings") {
            FactorizationDocument::from_json(text).map(Document::Factorization)
        } else if obj.contains_key("verdict") {
            CertificateDocument::from_json(text).map(Document::Certificate)
        } else {
            Err(Error::Document(
                "document: no \"edges\", \"matchings\" or \"verdict\" field".into(),
            ))
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Coloring(d) => d.to_json(),
            Document::Factorization(d) => d.to_json(),
            Document::Certificate(d) => d.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_three_five;
    use crate::equivalence::factorization_to_coloring;

    #[test]
    fn coloring_round_trip_is_byte_identical() {
        let c = factorization_to_coloring(&construct_three_five(4).unwrap());
        let doc = ColoringDocument::from_coloring(
            &c,
            Some(Metadata {
                method: Some("three-five".into()),
                shift_vector: Some(vec![1, 2, 1]),
            }),
        );
        let text = doc.to_json();
        let back = ColoringDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_coloring().unwrap(), c);
        let keys: Vec<_> = text.lines().filter(|l| l.starts_with("  \"")).collect();
        assert_eq!(keys.len(), 5);
        assert!(keys[0].contains("edges") && keys[4].contains("\"t\""));
    }

    #[test]
    fn factorization_round_trip() {
        let f = construct_three_five(5).unwrap().reversed();
        let doc = FactorizationDocument::from_factorization(&f);
        assert!(doc.ordering.is_some());
        let text = doc.to_json();
        assert!(text.contains("\"free\""));
        let back = FactorizationDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_factorization().unwrap(), f);
    }

    #[test]
    fn errors_name_the_field() {
        let c = factorization_to_coloring(&construct_three_five(2).unwrap());
        let mut doc = ColoringDocument::from_coloring(&c, None);
        doc.edges[2].color = 9;
        let e = doc.to_coloring().unwrap_err().to_string();
        assert!(e.contains("edges[2].color"), "{e}");

        let e = ColoringDocument::from_json("{\n  \"edges\": [],\n  \"n\": 2\n}").unwrap_err().to_string();
        assert!(e.contains("line"), "{e}");
        let e = Document::from_json("{\"matchings\": [{\"edges\": [], \"label\": \"tagged\"}], \"n\": 1, \"format_version\": 1}")
            .unwrap_err()
            .to_string();
        assert!(e.contains("free") && e.contains("line 1"), "{e}");
    }

    #[test]
    fn version_is_checked() {
        let c = factorization_to_coloring(&construct_three_five(2).unwrap());
        let text = ColoringDocument::from_coloring(&c, None).to_json().replace("\"format_version\": 1", "\"format_version\": 2");
        assert!(ColoringDocument::from_json(&text).unwrap_err().to_string().contains("format_version"));
    }

    #[test]
    fn certificate_round_trip() {
        let cert = crate::bounds::certify(7, 9);
        let doc = CertificateDocument::from_certificate(&cert);
        let text = doc.to_json();
        let back = match Document::from_json(&text).unwrap() {
            Document::Certificate(d) => d,
            other => panic!("{other:?}"),
        };
        assert_eq!(back.to_certificate().unwrap(), cert);
        assert_eq!(back.to_json(), text);
    }
}
