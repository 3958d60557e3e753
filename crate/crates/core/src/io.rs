//! JSON documents: signatures, algebras, direct and inverse systems,
//! morphisms and identity lists. The kind of a document is read off its
//! top-level fields. Output is pretty-printed with numeric arrays kept on
//! one line, so writing a document that was just read reproduces its bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{ElementMap, FiniteAlgebra};
use crate::plonka::DirectSystem;
use crate::semilattice::Semilattice;
use crate::systems::{DirectSystemMorphism, InverseSystem, InverseSystemMorphism};
use crate::terms::{parse_identity, Identity, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("document does not match any known kind")]
    UnknownKind,
    #[error("expected a {expected} document, found a {found} document")]
    WrongKind { expected: Kind, found: Kind },
    #[error("{0}")]
    Schema(String),
    /// Well-formed document whose payload fails its validator.
    #[error("invalid {kind}: {message}")]
    Invalid { kind: Kind, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Signature,
    Algebra,
    System,
    InverseSystem,
    Morphism,
    IdentityList,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Signature => "signature",
            Kind::Algebra => "algebra",
            Kind::System => "system",
            Kind::InverseSystem => "inverse-system",
            Kind::Morphism => "morphism",
            Kind::IdentityList => "identity-list",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureDoc {
    pub ops: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub signature: SignatureDoc,
    pub size: usize,
    pub names: Vec<String>,
    pub tables: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemilatticeDoc {
    pub elements: Vec<String>,
    pub join: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionDoc {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub semilattice: SemilatticeDoc,
    pub fibers: Vec<AlgebraDoc>,
    pub transitions: Vec<TransitionDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InverseSystemDoc {
    pub semilattice: SemilatticeDoc,
    pub objects: Vec<usize>,
    pub transitions: Vec<TransitionDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub map: Vec<usize>,
}

/// A morphism of either system kind; which one is decided by the command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub phi: Vec<usize>,
    pub components: Vec<ComponentDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityListDoc {
    pub identities: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Signature(Signature),
    Algebra(FiniteAlgebra),
    System(DirectSystem),
    InverseSystem(InverseSystem),
    Morphism(MorphismDoc),
    IdentityList(IdentityListDoc),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Signature(_) => Kind::Signature,
            Document::Algebra(_) => Kind::Algebra,
            Document::System(_) => Kind::System,
            Document::InverseSystem(_) => Kind::InverseSystem,
            Document::Morphism(_) => Kind::Morphism,
            Document::IdentityList(_) => Kind::IdentityList,
        }
    }

    pub fn to_value(&self) -> Value {
        let value = match self {
            Document::Signature(s) => serde_json::to_value(signature_doc(s)),
            Document::Algebra(a) => serde_json::to_value(algebra_doc(a)),
            Document::System(s) => serde_json::to_value(system_doc(s)),
            Document::InverseSystem(s) => serde_json::to_value(inverse_system_doc(s)),
            Document::Morphism(m) => serde_json::to_value(m),
            Document::IdentityList(l) => serde_json::to_value(l),
        };
        value.expect("documents serialize")
    }

    pub fn to_json(&self) -> String {
        render(&self.to_value())
    }
}

/// Kind of a parsed JSON value, by its top-level fields.
pub fn detect_kind(value: &Value) -> Result<Kind, IoError> {
    let obj = value.as_object().ok_or(IoError::UnknownKind)?;
    let has = |k: &str| obj.contains_key(k);
    Ok(if has("ops") {
        Kind::Signature
    } else if has("tables") {
        Kind::Algebra
    } else if has("semilattice") && has("fibers") {
        Kind::System
    } else if has("semilattice") && has("objects") {
        Kind::InverseSystem
    } else if has("phi") {
        Kind::Morphism
    } else if has("identities") {
        Kind::IdentityList
    } else {
        return Err(IoError::UnknownKind);
    })
}

fn schema<T: for<'de> Deserialize<'de>>(value: Value) -> Result<T, IoError> {
    serde_json::from_value(value).map_err(|e| IoError::Schema(e.to_string()))
}

pub fn parse_document(text: &str) -> Result<Document, IoError> {
    let value: Value = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    let kind = detect_kind(&value)?;
    let invalid = |message: String| IoError::Invalid { kind, message };
    Ok(match kind {
        Kind::Signature => Document::Signature(signature_from(&schema(value)?)?),
        Kind::Algebra => Document::Algebra(algebra_from(&schema(value)?)?),
        Kind::System => Document::System(system_from(&schema(value)?)?),
        Kind::InverseSystem => Document::InverseSystem(inverse_system_from(&schema(value)?)?),
        Kind::Morphism => Document::Morphism(schema(value)?),
        Kind::IdentityList => {
            let doc: IdentityListDoc = schema(value)?;
            for id in &doc.identities {
                if !id.contains('=') {
                    return Err(invalid(format!("{id:?} is not an identity")));
                }
            }
            Document::IdentityList(doc)
        }
    })
}

pub fn read_document(path: &Path) -> Result<Document, IoError> {
    let text = std::fs::read_to_string(path).map_err(|e| IoError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_document(&text)
}

macro_rules! expect_kind {
    ($name:ident, $variant:ident, $ty:ty) => {
        pub fn $name(doc: Document) -> Result<$ty, IoError> {
            match doc {
                Document::$variant(x) => Ok(x),
                other => Err(IoError::WrongKind {
                    expected: Kind::$variant,
                    found: other.kind(),
                }),
            }
        }
    };
}

expect_kind!(expect_signature, Signature, Signature);
expect_kind!(expect_algebra, Algebra, FiniteAlgebra);
expect_kind!(expect_system, System, DirectSystem);
expect_kind!(expect_inverse_system, InverseSystem, InverseSystem);
expect_kind!(expect_morphism, Morphism, MorphismDoc);
expect_kind!(expect_identity_list, IdentityList, IdentityListDoc);

/// Parses every identity of a list against `sig`.
pub fn identities_of(doc: &IdentityListDoc, sig: &Signature) -> Result<Vec<Identity>, IoError> {
    doc.identities
        .iter()
        .map(|s| {
            parse_identity(s, sig).map_err(|e| IoError::Invalid {
                kind: Kind::IdentityList,
                message: format!("{s:?}: {e}"),
            })
        })
        .collect()
}

pub fn signature_doc(sig: &Signature) -> SignatureDoc {
    SignatureDoc {
        ops: sig.ops().map(|(k, a)| (k.to_string(), a)).collect(),
    }
}

fn signature_from(doc: &SignatureDoc) -> Result<Signature, IoError> {
    Signature::new(doc.ops.iter().map(|(k, &a)| (k.as_str(), a))).map_err(|e| IoError::Invalid {
        kind: Kind::Signature,
        message: e.to_string(),
    })
}

fn nest(flat: &[usize], n: usize, arity: usize) -> Value {
    if arity == 0 {
        return Value::from(flat[0]);
    }
    let stride = n.pow(arity as u32 - 1);
    if arity == 1 {
        return Value::from(flat.to_vec());
    }
    Value::Array(flat.chunks(stride).map(|c| nest(c, n, arity - 1)).collect())
}

/// Flattens a `k`-nested table, checking every level has `n` entries.
fn flatten(v: &Value, n: usize, arity: usize, out: &mut Vec<usize>) -> Result<(), String> {
    if arity == 0 {
        let x = v
            .as_u64()
            .ok_or_else(|| format!("expected an element index, found {v}"))?;
        out.push(x as usize);
        return Ok(());
    }
    let items = v
        .as_array()
        .ok_or_else(|| format!("expected an array, found {v}"))?;
    if items.len() != n {
        return Err(format!("expected {n} entries, found {}", items.len()));
    }
    items.iter().try_for_each(|item| flatten(item, n, arity - 1, out))
}

pub fn algebra_doc(a: &FiniteAlgebra) -> AlgebraDoc {
    let n = a.size();
    let tables = (0..a.op_count())
        .map(|op| (a.op_name(op).to_string(), nest(a.table(op), n, a.arity_of(op))))
        .collect();
    AlgebraDoc {
        signature: signature_doc(a.signature()),
        size: n,
        names: a.names().to_vec(),
        tables,
    }
}

fn algebra_from(doc: &AlgebraDoc) -> Result<FiniteAlgebra, IoError> {
    let invalid = |message: String| IoError::Invalid {
        kind: Kind::Algebra,
        message,
    };
    let sig = signature_from(&doc.signature)?;
    if doc.names.len() != doc.size {
        return Err(invalid(format!(
            "size is {} but {} names are given",
            doc.size,
            doc.names.len()
        )));
    }
    let mut tables = BTreeMap::new();
    for (op, value) in &doc.tables {
        let arity = sig
            .arity(op)
            .ok_or_else(|| invalid(format!("table for {op:?}, which is not in the signature")))?;
        let mut flat = Vec::new();
        flatten(value, doc.size, arity, &mut flat).map_err(|m| invalid(format!("table {op:?}: {m}")))?;
        tables.insert(op.clone(), flat);
    }
    FiniteAlgebra::new(sig, doc.names.clone(), tables).map_err(|e| invalid(e.to_string()))
}

fn semilattice_doc(s: &Semilattice) -> SemilatticeDoc {
    SemilatticeDoc {
        elements: s.names().to_vec(),
        join: s.rows(),
    }
}

fn semilattice_from(doc: &SemilatticeDoc, kind: Kind) -> Result<Semilattice, IoError> {
    Semilattice::new(doc.elements.clone(), &doc.join).map_err(|e| IoError::Invalid {
        kind,
        message: e.to_string(),
    })
}

fn transitions_from(
    docs: &[TransitionDoc],
    kind: Kind,
) -> Result<BTreeMap<(usize, usize), ElementMap>, IoError> {
    let mut out = BTreeMap::new();
    for t in docs {
        if out
            .insert((t.from, t.to), ElementMap::new(t.map.clone()))
            .is_some()
        {
            return Err(IoError::Invalid {
                kind,
                message: format!("transition {} -> {} listed twice", t.from, t.to),
            });
        }
    }
    Ok(out)
}

fn transition_docs(tr: &BTreeMap<(usize, usize), ElementMap>) -> Vec<TransitionDoc> {
    tr.iter()
        .map(|(&(from, to), m)| TransitionDoc {
            from,
            to,
            map: m.map.clone(),
        })
        .collect()
}

pub fn system_doc(sys: &DirectSystem) -> SystemDoc {
    SystemDoc {
        semilattice: semilattice_doc(sys.index()),
        fibers: sys.fibers().iter().map(algebra_doc).collect(),
        transitions: transition_docs(sys.transitions()),
    }
}

fn system_from(doc: &SystemDoc) -> Result<DirectSystem, IoError> {
    let index = semilattice_from(&doc.semilattice, Kind::System)?;
    let fibers = doc
        .fibers
        .iter()
        .map(algebra_from)
        .collect::<Result<Vec<_>, _>>()?;
    if fibers.is_empty() {
        return Err(IoError::Invalid {
            kind: Kind::System,
            message: "no fibers".into(),
        });
    }
    let transitions = transitions_from(&doc.transitions, Kind::System)?;
    DirectSystem::new(index, fibers, transitions).map_err(|e| IoError::Invalid {
        kind: Kind::System,
        message: e.to_string(),
    })
}

pub fn inverse_system_doc(sys: &InverseSystem) -> InverseSystemDoc {
    InverseSystemDoc {
        semilattice: semilattice_doc(sys.index()),
        objects: sys.objects().to_vec(),
        transitions: transition_docs(sys.transitions()),
    }
}

fn inverse_system_from(doc: &InverseSystemDoc) -> Result<InverseSystem, IoError> {
    let index = semilattice_from(&doc.semilattice, Kind::InverseSystem)?;
    let transitions = transitions_from(&doc.transitions, Kind::InverseSystem)?;
    InverseSystem::new(index, doc.objects.clone(), transitions).map_err(|e| IoError::Invalid {
        kind: Kind::InverseSystem,
        message: e.to_string(),
    })
}

fn morphism_doc(phi: &[usize], components: &[ElementMap]) -> MorphismDoc {
    MorphismDoc {
        phi: phi.to_vec(),
        components: components
            .iter()
            .map(|c| ComponentDoc { map: c.map.clone() })
            .collect(),
    }
}

impl From<&DirectSystemMorphism> for MorphismDoc {
    fn from(m: &DirectSystemMorphism) -> Self {
        morphism_doc(&m.phi, &m.components)
    }
}

impl From<&InverseSystemMorphism> for MorphismDoc {
    fn from(m: &InverseSystemMorphism) -> Self {
        morphism_doc(&m.phi, &m.components)
    }
}

impl MorphismDoc {
    fn parts(&self) -> (Vec<usize>, Vec<ElementMap>) {
        let components = self
            .components
            .iter()
            .map(|c| ElementMap::new(c.map.clone()))
            .collect();
        (self.phi.clone(), components)
    }

    /// Unvalidated; check with `validate_direct_morphism`.
    pub fn direct(&self) -> DirectSystemMorphism {
        let (phi, components) = self.parts();
        DirectSystemMorphism { phi, components }
    }

    /// Unvalidated; check with `validate_inverse_morphism`.
    pub fn inverse(&self) -> InverseSystemMorphism {
        let (phi, components) = self.parts();
        InverseSystemMorphism { phi, components }
    }
}

/// Pretty JSON with every array of scalars on a single line, plus a final
/// newline.
pub fn render(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|v| !v.is_array() && !v.is_object())
}

fn write_value(value: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match value {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::from(key.as_str()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
