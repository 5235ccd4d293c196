//! JSON formats `ring.v1`, `mtc.v1` and `bundle.v1`.
//!
//! Keys are emitted in a fixed order and floats with 17 significant digits, so
//! emit, parse, emit is byte-identical.

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::basering::{BasedRing, DimVector, Subring};
use crate::condensation::{Ambient, CondensableAlgebra, CondensationBundle};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::modulardata::ModularData;
use crate::scalar::Scalar;

pub const RING_V1: &str = "ring.v1";
pub const MTC_V1: &str = "mtc.v1";
pub const BUNDLE_V1: &str = "bundle.v1";

/// An `f64` written as `{:.16e}`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Fixed(f64);

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom("non-finite float"));
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fixed {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(d).map(Fixed)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingV1 {
    schema: String,
    rank: usize,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    fusion: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclotomicV1 {
    order: u32,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarV1 {
    Exact { cyclotomic: CyclotomicV1 },
    Float { re: Fixed, im: Fixed },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MtcV1 {
    schema: String,
    rank: usize,
    labels: Vec<String>,
    dual: Vec<usize>,
    s_matrix: Vec<Vec<ScalarV1>>,
    twists: Vec<ScalarV1>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightedV1 {
    labels: Vec<String>,
    dual: Vec<usize>,
    dims: Vec<Fixed>,
    twists: Vec<ScalarV1>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum AmbientV1 {
    Mtc(MtcV1),
    Weighted(WeightedV1),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleV1 {
    schema: String,
    ambient: AmbientV1,
    mult: Vec<u32>,
    module_ring: RingV1,
    #[serde(rename = "dA", default, skip_serializing_if = "Option::is_none")]
    d_a: Option<Vec<Fixed>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    induction: Option<Vec<Vec<u32>>>,
    local: Vec<usize>,
}

fn expect_schema(found: &str, want: &str) -> Result<()> {
    if found == want {
        Ok(())
    } else {
        Err(Error::Parse(format!("expected schema {want:?}, found {found:?}")))
    }
}

fn ring_dto(ring: &BasedRing) -> RingV1 {
    RingV1 {
        schema: RING_V1.into(),
        rank: ring.rank(),
        labels: ring.names(),
        unit: 0,
        dual: ring.duals().to_vec(),
        fusion: ring.fusion().to_vec(),
    }
}

fn ring_from_dto(dto: RingV1) -> Result<BasedRing> {
    expect_schema(&dto.schema, RING_V1)?;
    if dto.unit != 0 {
        return Err(Error::Parse(format!("unit must be label 0, found {}", dto.unit)));
    }
    if dto.labels.len() != dto.rank {
        return Err(Error::Structural(format!("rank {} but {} labels", dto.rank, dto.labels.len())));
    }
    BasedRing::new(dto.labels, dto.fusion, dto.dual)
}

fn scalar_dto(x: &Scalar) -> ScalarV1 {
    match x {
        Scalar::Exact(c) => ScalarV1::Exact {
            cyclotomic: CyclotomicV1 { order: c.order(), coeffs: c.coeffs().iter().map(|q| q.to_string()).collect() },
        },
        Scalar::Float(z) => ScalarV1::Float { re: Fixed(z.re), im: Fixed(z.im) },
    }
}

fn scalar_from_dto(dto: ScalarV1) -> Result<Scalar> {
    match dto {
        ScalarV1::Exact { cyclotomic } => {
            if cyclotomic.order == 0 {
                return Err(Error::Parse("cyclotomic order must be positive".into()));
            }
            let coeffs = cyclotomic
                .coeffs
                .iter()
                .map(|s| s.parse::<BigRational>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            let c = Cyclotomic::from_reduced(cyclotomic.order, coeffs).ok_or_else(|| {
                Error::Parse(format!("coefficient count does not match totient of {}", cyclotomic.order))
            })?;
            Ok(Scalar::Exact(c))
        }
        ScalarV1::Float { re, im } => Ok(Scalar::float(re.0, im.0)),
    }
}

fn mtc_dto(md: &ModularData) -> MtcV1 {
    MtcV1 {
        schema: MTC_V1.into(),
        rank: md.rank(),
        labels: md.labels().to_vec(),
        dual: md.duals().to_vec(),
        s_matrix: md.s_matrix().iter().map(|row| row.iter().map(scalar_dto).collect()).collect(),
        twists: md.twists().iter().map(scalar_dto).collect(),
    }
}

fn mtc_from_dto(dto: MtcV1) -> Result<ModularData> {
    expect_schema(&dto.schema, MTC_V1)?;
    if dto.labels.len() != dto.rank {
        return Err(Error::Structural(format!("rank {} but {} labels", dto.rank, dto.labels.len())));
    }
    let s = dto
        .s_matrix
        .into_iter()
        .map(|row| row.into_iter().map(scalar_from_dto).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let t = dto.twists.into_iter().map(scalar_from_dto).collect::<Result<Vec<_>>>()?;
    ModularData::new(dto.labels, dto.dual, s, t)
}

fn to_text<T: Serialize>(dto: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(dto)?;
    s.push('\n');
    Ok(s)
}

pub fn ring_to_json(ring: &BasedRing) -> Result<String> {
    to_text(&ring_dto(ring))
}

pub fn ring_from_json(text: &str) -> Result<BasedRing> {
    ring_from_dto(serde_json::from_str(text)?)
}

pub fn mtc_to_json(md: &ModularData) -> Result<String> {
    to_text(&mtc_dto(md))
}

pub fn mtc_from_json(text: &str) -> Result<ModularData> {
    mtc_from_dto(serde_json::from_str(text)?)
}

pub fn bundle_to_json(b: &CondensationBundle) -> Result<String> {
    let ambient = match b.ambient() {
        Ambient::Modular { md, .. } => AmbientV1::Mtc(mtc_dto(md)),
        Ambient::Weighted { labels, dual, dims, twists } => AmbientV1::Weighted(WeightedV1 {
            labels: labels.clone(),
            dual: dual.clone(),
            dims: dims.iter().map(|&d| Fixed(d)).collect(),
            twists: twists.iter().map(scalar_dto).collect(),
        }),
    };
    to_text(&BundleV1 {
        schema: BUNDLE_V1.into(),
        ambient,
        mult: b.algebra().mult().to_vec(),
        module_ring: ring_dto(b.module_ring()),
        d_a: Some(b.d_a().values.iter().map(|&d| Fixed(d)).collect()),
        induction: b.induction().map(|m| m.to_vec()),
        local: b.local().members.clone(),
    })
}

pub fn bundle_from_json(text: &str) -> Result<CondensationBundle> {
    let dto: BundleV1 = serde_json::from_str(text)?;
    expect_schema(&dto.schema, BUNDLE_V1)?;
    let ambient = match dto.ambient {
        AmbientV1::Mtc(m) => Ambient::modular(mtc_from_dto(m)?)?,
        AmbientV1::Weighted(w) => {
            let twists = w.twists.into_iter().map(scalar_from_dto).collect::<Result<Vec<_>>>()?;
            Ambient::weighted(w.labels, w.dual, w.dims.iter().map(|d| d.0).collect(), twists)?
        }
    };
    let alg = CondensableAlgebra::new(ambient, dto.mult)?;
    let ring = ring_from_dto(dto.module_ring)?;
    let d_a = dto.d_a.map(|v| DimVector::supplied(v.iter().map(|d| d.0).collect()));
    let local = Subring::new(dto.local);
    CondensationBundle::new(alg, ring, d_a, dto.induction, local)
}

/// Any of the three document kinds, dispatched on the `schema` field.
#[derive(Clone, Debug)]
pub enum Document {
    Ring(BasedRing),
    Mtc(ModularData),
    Bundle(Box<CondensationBundle>),
}

#[derive(Deserialize)]
struct Probe {
    schema: Option<String>,
}

pub fn parse_document(text: &str) -> Result<Document> {
    let probe: Probe = serde_json::from_str(text)?;
    match probe.schema.as_deref() {
        Some(RING_V1) => ring_from_json(text).map(Document::Ring),
        Some(MTC_V1) => mtc_from_json(text).map(Document::Mtc),
        Some(BUNDLE_V1) => bundle_from_json(text).map(|b| Document::Bundle(Box::new(b))),
        Some(other) => Err(Error::Parse(format!("unknown schema {other:?}"))),
        None => Err(Error::Parse("missing \"schema\" field".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{build, ising, ExampleSpec};

    #[test]
    fn ring_round_trip() {
        let ring = crate::groups::FiniteGroup::symmetric(3).group_ring();
        let text = ring_to_json(&ring).unwrap();
        assert!(text.contains("\"schema\": \"ring.v1\""));
        assert_eq!(ring_from_json(&text).unwrap(), ring);
    }

    #[test]
    fn mtc_round_trip_is_byte_identical() {
        let text = mtc_to_json(&ising()).unwrap();
        let again = mtc_to_json(&mtc_from_json(&text).unwrap()).unwrap();
        assert_eq!(text, again);
        let float = mtc_to_json(&ising().to_float()).unwrap();
        assert!(float.contains("\"re\": 1.41421356237309"));
        assert_eq!(mtc_to_json(&mtc_from_json(&float).unwrap()).unwrap(), float);
    }

    #[test]
    fn bundle_round_trip_is_byte_identical() {
        for spec in [ExampleSpec::ToricCode, ExampleSpec::A2n(1), ExampleSpec::A2nPlus1(1)] {
            let text = bundle_to_json(&build(&spec).unwrap()).unwrap();
            let again = bundle_to_json(&bundle_from_json(&text).unwrap()).unwrap();
            assert_eq!(text, again, "{spec:?}");
        }
    }

    #[test]
    fn schema_dispatch_and_errors() {
        let text = ring_to_json(&BasedRing::trivial()).unwrap();
        assert!(matches!(parse_document(&text).unwrap(), Document::Ring(_)));
        assert!(matches!(parse_document("{}"), Err(Error::Parse(_))));
        assert!(matches!(parse_document("{\"schema\": \"x.v9\"}"), Err(Error::Parse(_))));
        assert!(matches!(parse_document("not json"), Err(Error::Parse(_))));
        assert!(matches!(mtc_from_json(&text), Err(Error::Parse(_))));
    }
}
