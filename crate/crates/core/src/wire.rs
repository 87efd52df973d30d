//! JSON descriptors. Numbers are written as decimal strings; on input both
//! strings and JSON integers are accepted.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kseq::KSeq;
use crate::poly::Poly;
use crate::reversal::BiRecSeq;
use crate::ring::RingSpec;
use crate::seq::{LinRecSeq, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Num::Int(v) => Ok(BigInt::from(*v)),
            Num::Text(s) => s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        }
    }

    fn from_bigint(v: &BigInt) -> Self {
        Num::Text(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Num>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyJson {
    Coeffs { coeffs: Vec<Num> },
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Scalar(Num),
    Vector(Vec<Num>),
}

/// One-dimensional sequence, or a bisequence when `indexing` is `"Z"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: RingJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indexing: Option<String>,
    pub charpoly: PolyJson,
    pub init: Vec<ValueJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSeqJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: RingJson,
    pub elem: Vec<PolyJson>,
    pub values: Vec<ValueJson>,
}

impl RingJson {
    pub fn to_ring(&self) -> Result<RingSpec> {
        match self.kind.as_str() {
            "int" => Ok(RingSpec::integers()),
            "mod" => {
                let m = self
                    .modulus
                    .as_ref()
                    .ok_or_else(|| Error::Parse("ring kind \"mod\" needs a modulus".into()))?;
                RingSpec::modulo(m.to_bigint()?)
            }
            other => Err(Error::Parse(format!("unknown ring kind {other:?}"))),
        }
    }

    pub fn from_ring(ring: &RingSpec) -> Self {
        match ring.modulus() {
            None => RingJson { kind: "int".into(), modulus: None },
            Some(m) => RingJson { kind: "mod".into(), modulus: Some(Num::from_bigint(m)) },
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self, ring: &RingSpec) -> Result<Poly> {
        match self {
            PolyJson::Coeffs { coeffs } => {
                let c = coeffs.iter().map(Num::to_bigint).collect::<Result<Vec<_>>>()?;
                Ok(Poly::new(ring.clone(), c))
            }
            PolyJson::Text(s) => Poly::parse(s, ring),
        }
    }

    pub fn from_poly(p: &Poly) -> Self {
        PolyJson::Coeffs { coeffs: p.coeffs().iter().map(Num::from_bigint).collect() }
    }
}

impl ValueJson {
    fn to_value(&self) -> Result<Value> {
        match self {
            ValueJson::Scalar(n) => Ok(vec![n.to_bigint()?]),
            ValueJson::Vector(v) => v.iter().map(Num::to_bigint).collect(),
        }
    }

    fn from_value(v: &Value) -> Self {
        ValueJson::Vector(v.iter().map(Num::from_bigint).collect())
    }
}

fn values_in(vs: &[ValueJson], dim: Option<usize>) -> Result<Vec<Value>> {
    let out = vs.iter().map(ValueJson::to_value).collect::<Result<Vec<_>>>()?;
    if let Some(d) = dim {
        if let Some(v) = out.iter().find(|v| v.len() != d) {
            return Err(Error::DimMismatch(d, v.len()));
        }
    }
    Ok(out)
}

impl SeqJson {
    pub fn is_bisequence(&self) -> bool {
        self.indexing.as_deref() == Some("Z")
    }

    fn check_indexing(&self) -> Result<()> {
        match self.indexing.as_deref() {
            None | Some("N") | Some("Z") => Ok(()),
            Some(other) => Err(Error::Parse(format!("unknown indexing {other:?}"))),
        }
    }

    pub fn to_seq(&self) -> Result<LinRecSeq> {
        self.check_indexing()?;
        let ring = self.ring.to_ring()?;
        LinRecSeq::new(self.charpoly.to_poly(&ring)?, values_in(&self.init, self.dim)?)
    }

    pub fn to_bi(&self) -> Result<BiRecSeq> {
        self.check_indexing()?;
        let ring = self.ring.to_ring()?;
        BiRecSeq::new(self.charpoly.to_poly(&ring)?, values_in(&self.init, self.dim)?)
    }

    pub fn from_seq(u: &LinRecSeq, name: Option<String>) -> Self {
        SeqJson {
            name,
            ring: RingJson::from_ring(u.ring()),
            dim: Some(u.dim()),
            indexing: None,
            charpoly: PolyJson::from_poly(u.charpoly()),
            init: u.init().iter().map(ValueJson::from_value).collect(),
        }
    }

    pub fn from_bi(w: &BiRecSeq, name: Option<String>) -> Self {
        SeqJson {
            name,
            ring: RingJson::from_ring(w.ring()),
            dim: Some(w.dim()),
            indexing: Some("Z".into()),
            charpoly: PolyJson::from_poly(w.charpoly()),
            init: w.init().iter().map(ValueJson::from_value).collect(),
        }
    }
}

impl KSeqJson {
    pub fn to_kseq(&self) -> Result<KSeq> {
        let ring = self.ring.to_ring()?;
        let elem = self.elem.iter().map(|p| p.to_poly(&ring)).collect::<Result<Vec<_>>>()?;
        KSeq::new(elem, values_in(&self.values, None)?)
    }

    pub fn from_kseq(w: &KSeq, name: Option<String>) -> Self {
        KSeqJson {
            name,
            ring: RingJson::from_ring(w.ring()),
            elem: w.elem().iter().map(PolyJson::from_poly).collect(),
            values: w.values().iter().map(ValueJson::from_value).collect(),
        }
    }
}

/// Any descriptor, distinguished by its fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Seq { name: Option<String>, seq: LinRecSeq },
    Bi { name: Option<String>, seq: BiRecSeq },
    K { name: Option<String>, seq: KSeq },
}

impl Descriptor {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.get("elem").is_some() {
            let j: KSeqJson = serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?;
            return Ok(Descriptor::K { seq: j.to_kseq()?, name: j.name });
        }
        let j: SeqJson = serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?;
        if j.is_bisequence() {
            Ok(Descriptor::Bi { seq: j.to_bi()?, name: j.name })
        } else {
            Ok(Descriptor::Seq { seq: j.to_seq()?, name: j.name })
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Descriptor::Seq { name, .. } | Descriptor::Bi { name, .. } | Descriptor::K { name, .. } => {
                name.as_deref()
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let v = match self {
            Descriptor::Seq { name, seq } => serde_json::to_value(SeqJson::from_seq(seq, name.clone())),
            Descriptor::Bi { name, seq } => serde_json::to_value(SeqJson::from_bi(seq, name.clone())),
            Descriptor::K { name, seq } => serde_json::to_value(KSeqJson::from_kseq(seq, name.clone())),
        };
        v.expect("descriptor serializes")
    }
}
