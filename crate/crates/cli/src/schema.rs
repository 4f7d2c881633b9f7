//! The JSON exchange format.
//!
//! One envelope type carries every payload kind; serialization is
//! canonical (sorted keys through `serde_json::Value`, stable cell order
//! from the library's deterministic constructions), so equal values
//! serialize to identical bytes.

use prosset::arith::IntMat;
use prosset::groups::FinGroup;
use prosset::lifting::CellComplexCertificate;
use prosset::pro::{CofinitePoset, LevelMap, ProObject, SSetCat};
use prosset::simplicial::local_system::{FinAb, FinAbHom, LocalSystem};
use prosset::simplicial::{SSetMap, TruncatedSSet};
use prosset::verdict::Verdict;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Payload {
    Sset(TruncatedSSet),
    SsetMap(SSetMap),
    Poset(CofinitePoset),
    ProSpace(ProSpaceDto),
    LevelMap(LevelMapDto),
    LocalSystem(LocalSystemDto),
    Certificate(CertificateDto),
    Report(serde_json::Value),
    Group(FinGroup),
}

/// A pro-space with explicit structure maps.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProSpaceDto {
    pub index: CofinitePoset,
    pub fibers: Vec<TruncatedSSet>,
    /// Triples (higher, lower, map).
    pub structure: Vec<(usize, usize, SSetMap)>,
}

impl ProSpaceDto {
    pub fn from_pro(x: &ProObject<SSetCat>) -> Self {
        ProSpaceDto {
            index: x.index.clone(),
            fibers: x.fibers.clone(),
            structure: x
                .structure
                .iter()
                .map(|(&(t, s), m)| (t, s, m.clone()))
                .collect(),
        }
    }

    pub fn into_pro(self) -> Result<ProObject<SSetCat>, String> {
        let structure = self
            .structure
            .into_iter()
            .map(|(t, s, m)| ((t, s), m))
            .collect();
        ProObject::new(self.index, self.fibers, structure)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelMapDto {
    pub source: ProSpaceDto,
    pub target: ProSpaceDto,
    pub components: Vec<SSetMap>,
}

impl LevelMapDto {
    pub fn from_level(f: &LevelMap<SSetCat>) -> Self {
        LevelMapDto {
            source: ProSpaceDto::from_pro(&f.source),
            target: ProSpaceDto::from_pro(&f.target),
            components: f.components.clone(),
        }
    }

    pub fn into_level(self) -> Result<LevelMap<SSetCat>, String> {
        LevelMap::new(
            self.source.into_pro()?,
            self.target.into_pro()?,
            self.components,
        )
    }
}

/// A local system with explicit group tables and edge-action matrices,
/// represented at one level of a pro-space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalSystemDto {
    pub level: usize,
    /// Cyclic moduli per π₀-component.
    pub groups: Vec<Vec<i128>>,
    /// Row-major automorphism matrix per nondegenerate edge.
    pub edge_actions: Vec<Vec<Vec<i128>>>,
}

impl LocalSystemDto {
    pub fn from_system(level: usize, l: &LocalSystem) -> Self {
        LocalSystemDto {
            level,
            groups: l.groups.iter().map(|g| g.moduli.clone()).collect(),
            edge_actions: l
                .edge_action
                .iter()
                .map(|h| {
                    (0..h.matrix.nrows())
                        .map(|i| (0..h.matrix.ncols()).map(|j| h.matrix[(i, j)]).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn into_system(self) -> Result<(usize, LocalSystem), String> {
        let groups: Vec<FinAb> = self.groups.into_iter().map(FinAb::new).collect();
        let edge_action = self
            .edge_actions
            .into_iter()
            .map(|rows| {
                if rows.is_empty() {
                    return Ok(FinAbHom {
                        matrix: IntMat::zero(0, 0),
                    });
                }
                Ok(FinAbHom {
                    matrix: IntMat::from_rows(rows),
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok((
            self.level,
            LocalSystem {
                groups,
                edge_action,
            },
        ))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDto {
    pub certificate: CellComplexCertificate,
    /// The claimed composite the certificate replays to.
    pub composite: SSetMap,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictDto {
    Holds,
    Fails { witness: String },
    Unknown { reason: String },
}

impl From<&Verdict> for VerdictDto {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Holds => VerdictDto::Holds,
            Verdict::Fails { witness } => VerdictDto::Fails {
                witness: witness.clone(),
            },
            Verdict::Unknown { reason } => VerdictDto::Unknown {
                reason: reason.clone(),
            },
        }
    }
}

/// Canonical serialization: sorted keys, two-space indentation, trailing
/// newline.
pub fn serialize(doc: &Document) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values print");
    out.push('\n');
    out
}

/// Parse and semantically validate a document.
pub fn parse(text: &str) -> Result<Document, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        format!(
            "parse error at line {}, column {}: {}",
            e.line(),
            e.column(),
            e
        )
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(format!(
            "unsupported schema version {} (this build reads {SCHEMA_VERSION})",
            doc.schema_version
        ));
    }
    validate(&doc)?;
    Ok(doc)
}

fn validate(doc: &Document) -> Result<(), String> {
    match &doc.payload {
        Payload::Sset(x) => x.validate(),
        Payload::SsetMap(f) => {
            f.source.validate()?;
            f.target.validate()?;
            f.validate()
        }
        Payload::Poset(p) => p.validate(),
        Payload::ProSpace(dto) => dto.clone().into_pro().map(|_| ()),
        Payload::LevelMap(dto) => dto.clone().into_level().map(|_| ()),
        Payload::LocalSystem(dto) => dto.clone().into_system().map(|_| ()),
        Payload::Certificate(c) => c.certificate.verify(&c.composite),
        Payload::Report(_) => Ok(()),
        Payload::Group(g) => g.validate(),
    }
}

pub fn doc(payload: Payload) -> Document {
    Document {
        schema_version: SCHEMA_VERSION,
        payload,
    }
}
