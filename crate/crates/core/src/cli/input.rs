use std::fmt;

use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::exactlinalg::{format_rat, parse_rat, Int, Rat};
use crate::framework::{Flat, IncidenceSpec, KFramework, PlanarFramework, PlanarVertex};

/// An exact integer: a JSON integer, or a string of decimal digits for values
/// beyond 64 bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntValue(pub Int);

/// An exact rational: a JSON integer or a `"p/q"` string with `q > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatValue(pub Rat);

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = IntValue;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<IntValue, E> {
        Ok(IntValue(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<IntValue, E> {
        Ok(IntValue(v.into()))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<IntValue, E> {
        Err(E::custom(format!("{v} is not an integer")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<IntValue, E> {
        v.parse::<Int>().map(IntValue).map_err(|_| E::custom(format!("`{v}` is not an integer")))
    }
}

impl<'de> Deserialize<'de> for IntValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

impl Serialize for IntValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = RatValue;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string with q > 0")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatValue, E> {
        Ok(RatValue(Rat::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatValue, E> {
        Ok(RatValue(Rat::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<RatValue, E> {
        Err(E::custom(format!("{v} is a float; write rationals as \"p/q\"")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatValue, E> {
        parse_rat(v).map(RatValue).ok_or_else(|| E::custom(format!("`{v}` is not a rational \"p/q\" with q > 0")))
    }
}

impl<'de> Deserialize<'de> for RatValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

impl Serialize for RatValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match (self.0.is_integer(), self.0.to_integer().to_i64()) {
            (true, Some(v)) => s.serialize_i64(v),
            _ => s.serialize_str(&format_rat(&self.0)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    pub xy: [IntValue; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanarDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlatDoc {
    pub id: String,
    pub point: Vec<RatValue>,
    pub dirs: Vec<Vec<IntValue>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceDoc {
    pub edge: String,
    pub face: String,
    pub sample: Vec<RatValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal: Option<Vec<IntValue>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralDoc {
    pub dim: usize,
    pub k: usize,
    pub edges: Vec<FlatDoc>,
    pub faces: Vec<FlatDoc>,
    pub incidences: Vec<IncidenceDoc>,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum InputDocument {
    Planar(PlanarDoc),
    General(GeneralDoc),
}

/// Parse failure with the JSON path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)?;
        if !self.path.is_empty() && self.path != "." {
            write!(f, ", at `{}`", self.path)?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Deserialize)]
struct TypeTag {
    #[serde(rename = "type")]
    kind: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanarWire {
    #[serde(rename = "type")]
    _kind: String,
    vertices: Vec<VertexDoc>,
    edges: Vec<[String; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneralWire {
    #[serde(rename = "type")]
    _kind: String,
    dim: usize,
    k: usize,
    edges: Vec<FlatDoc>,
    faces: Vec<FlatDoc>,
    incidences: Vec<IncidenceDoc>,
}

fn streaming<'a, T: Deserialize<'a>>(text: &'a str) -> std::result::Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut *de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ParseError { path, line: inner.line(), column: inner.column(), message: strip_position(&inner.to_string()) }
    })?;
    de.end().map_err(|e| ParseError { path: String::new(), line: e.line(), column: e.column(), message: strip_position(&e.to_string()) })?;
    Ok(value)
}

/// Parses an input document. The body is deserialized straight from the text
/// so that every error carries its line, column and field path.
pub fn parse(text: &str) -> std::result::Result<InputDocument, ParseError> {
    let tag: TypeTag = serde_json::from_str(text).map_err(|e| ParseError {
        path: String::new(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    match tag.kind.as_str() {
        "planar" => {
            let w: PlanarWire = streaming(text)?;
            Ok(InputDocument::Planar(PlanarDoc { vertices: w.vertices, edges: w.edges }))
        }
        "general" => {
            let w: GeneralWire = streaming(text)?;
            Ok(InputDocument::General(GeneralDoc { dim: w.dim, k: w.k, edges: w.edges, faces: w.faces, incidences: w.incidences }))
        }
        other => Err(ParseError {
            path: "type".into(),
            line: 1,
            column: 1,
            message: format!("unknown document type `{other}`, expected `planar` or `general`"),
        }),
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn to_json(doc: &InputDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialize")
}

fn ints(v: &[IntValue]) -> Vec<Int> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn rats(v: &[RatValue]) -> Vec<Rat> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn flat(f: &FlatDoc) -> Flat {
    Flat { id: f.id.clone(), point: rats(&f.point), dirs: f.dirs.iter().map(|d| ints(d)).collect() }
}

fn flat_doc(f: &Flat) -> FlatDoc {
    FlatDoc {
        id: f.id.clone(),
        point: f.point.iter().cloned().map(RatValue).collect(),
        dirs: f.dirs.iter().map(|d| d.iter().cloned().map(IntValue).collect()).collect(),
    }
}

impl PlanarDoc {
    pub fn to_framework(&self) -> Result<PlanarFramework> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| PlanarVertex { id: v.id.clone(), point: [v.xy[0].0.clone(), v.xy[1].0.clone()] })
            .collect();
        PlanarFramework::new(vertices, self.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect())
    }

    pub fn from_framework(fw: &PlanarFramework) -> Self {
        let vertices = fw
            .vertices()
            .iter()
            .map(|v| VertexDoc { id: v.id.clone(), xy: [IntValue(v.point[0].clone()), IntValue(v.point[1].clone())] })
            .collect();
        let ids = |i: usize| fw.vertices()[i].id.clone();
        Self { vertices, edges: fw.edges().iter().map(|&(a, b)| [ids(a), ids(b)]).collect() }
    }
}

impl GeneralDoc {
    pub fn to_framework(&self) -> Result<KFramework> {
        let incidences = self
            .incidences
            .iter()
            .map(|i| IncidenceSpec {
                edge: i.edge.clone(),
                face: i.face.clone(),
                sample: rats(&i.sample),
                normal: i.normal.as_deref().map(ints),
            })
            .collect();
        KFramework::new(self.dim, self.k, self.edges.iter().map(flat).collect(), self.faces.iter().map(flat).collect(), incidences)
    }

    pub fn from_framework(fw: &KFramework) -> Self {
        Self {
            dim: fw.dim(),
            k: fw.k(),
            edges: fw.edges().iter().map(flat_doc).collect(),
            faces: fw.faces().iter().map(flat_doc).collect(),
            incidences: fw
                .incidence_specs()
                .into_iter()
                .map(|s| IncidenceDoc {
                    edge: s.edge,
                    face: s.face,
                    sample: s.sample.into_iter().map(RatValue).collect(),
                    normal: s.normal.map(|n| n.into_iter().map(IntValue).collect()),
                })
                .collect(),
        }
    }
}
