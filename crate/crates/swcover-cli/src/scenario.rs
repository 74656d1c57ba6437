//! The JSON scenario document format.
//!
//! All numbers in the payload are decimal-string integers; bare JSON number
//! tokens are rejected so no floating point value can leak into the exact
//! pipeline. Unknown keys are rejected. The document is versioned with a
//! top-level `"schema": 1` tag.

use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use swcover::constraints::{
    BasicClass, CuspEntry, FourManifold, Handedness, Rp2Entry, Scenario, SphereEntry, Surfaces,
};

/// Errors carrying the JSON path of the offending key where possible.
#[derive(Debug)]
pub struct ScenarioError(pub String);

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed scenario: {}", self.0)
    }
}

impl std::error::Error for ScenarioError {}

struct StrIntVisitor<T>(std::marker::PhantomData<T>);

impl<'de, T> Visitor<'de> for StrIntVisitor<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an integer written as a decimal string, e.g. \"-4\"")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
        v.parse::<T>()
            .map_err(|e| E::custom(format!("bad integer string {v:?}: {e}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<T, E> {
        Err(E::custom(format!(
            "numbers must be decimal strings (write \"{v}\" instead of {v})"
        )))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<T, E> {
        Err(E::custom(format!(
            "numbers must be decimal strings (write \"{v}\" instead of {v})"
        )))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<T, E> {
        Err(E::custom(format!(
            "floating point is not allowed anywhere in a scenario (got {v})"
        )))
    }
}

fn de_int<'de, D, T>(d: D) -> Result<T, D::Error>
where
    D: Deserializer<'de>,
    T: FromStr,
    T::Err: fmt::Display,
{
    d.deserialize_str(StrIntVisitor(std::marker::PhantomData))
}

fn de_vec_int<'de, D, T>(d: D) -> Result<Vec<T>, D::Error>
where
    D: Deserializer<'de>,
    T: FromStr,
    T::Err: fmt::Display,
{
    struct VecVisitor<T>(std::marker::PhantomData<T>);
    impl<'de, T> Visitor<'de> for VecVisitor<T>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        type Value = Vec<T>;
        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            write!(f, "a list of decimal-string integers")
        }
        fn visit_seq<A: de::SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<T>, A::Error> {
            let mut out = Vec::new();
            while let Some(item) = seq.next_element::<StrInt<T>>()? {
                out.push(item.0);
            }
            Ok(out)
        }
    }
    d.deserialize_seq(VecVisitor(std::marker::PhantomData))
}

fn de_opt_int<'de, D, T>(d: D) -> Result<Option<T>, D::Error>
where
    D: Deserializer<'de>,
    T: FromStr,
    T::Err: fmt::Display,
{
    Ok(Some(de_int(d)?))
}

fn de_opt_vec_int<'de, D, T>(d: D) -> Result<Option<Vec<T>>, D::Error>
where
    D: Deserializer<'de>,
    T: FromStr,
    T::Err: fmt::Display,
{
    Ok(Some(de_vec_int(d)?))
}

/// Wrapper so sequences of string integers can reuse the visitor.
struct StrInt<T>(T);

impl<'de, T> Deserialize<'de> for StrInt<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        de_int(d).map(StrInt)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDoc {
    pub schema: u32,
    pub manifold: ManifoldDoc,
    pub surfaces: SurfacesDoc,
    #[serde(default)]
    pub cover: Option<CoverDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDoc {
    #[serde(deserialize_with = "de_int")]
    pub b_plus: i64,
    #[serde(deserialize_with = "de_int")]
    pub sigma: i64,
    pub simple_type: bool,
    #[serde(default, deserialize_with = "de_vec_int")]
    pub h1_coprime: Vec<u64>,
    #[serde(default)]
    pub basic_classes: Vec<BasicClassDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasicClassDoc {
    #[serde(deserialize_with = "de_vec_int")]
    pub pairings: Vec<i64>,
    #[serde(deserialize_with = "de_int")]
    pub sw_mod_p: u64,
    #[serde(default, deserialize_with = "de_opt_vec_int")]
    pub sw_family: Option<Vec<u64>>,
    #[serde(default, deserialize_with = "de_opt_int")]
    pub d: Option<i64>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", content = "entries", rename_all = "lowercase", deny_unknown_fields)]
pub enum SurfacesDoc {
    Spheres(Vec<SphereDoc>),
    Rp2(Vec<Rp2Doc>),
    Cusps(Vec<CuspDoc>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereDoc {
    #[serde(deserialize_with = "de_int")]
    pub self_intersection: i64,
    #[serde(deserialize_with = "de_vec_int")]
    pub class_mod_p: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rp2Doc {
    #[serde(deserialize_with = "de_int")]
    pub euler: i64,
    #[serde(deserialize_with = "de_vec_int")]
    pub class_mod_2: Vec<i64>,
    #[serde(default, deserialize_with = "de_opt_int")]
    pub eps: Option<i64>,
    #[serde(default)]
    pub is_w2: bool,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HandednessDoc {
    Left,
    Right,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspDoc {
    pub handedness: HandednessDoc,
    #[serde(deserialize_with = "de_int")]
    pub self_intersection: i64,
    #[serde(deserialize_with = "de_vec_int")]
    pub class_mod_2: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    #[serde(deserialize_with = "de_int")]
    pub p: u64,
    #[serde(default, deserialize_with = "de_opt_vec_int")]
    pub weights: Option<Vec<u64>>,
}

impl ScenarioDoc {
    pub fn into_scenario(self) -> Result<Scenario, ScenarioError> {
        if self.schema != 1 {
            return Err(ScenarioError(format!(
                "schema: unsupported version {} (expected 1)",
                self.schema
            )));
        }
        let cover_p = self.cover.as_ref().map(|c| c.p);
        let weights = self.cover.as_ref().and_then(|c| c.weights.clone());
        let surfaces = match self.surfaces {
            SurfacesDoc::Spheres(entries) => {
                if let Some(w) = &weights {
                    if w.len() != entries.len() {
                        return Err(ScenarioError(format!(
                            "cover.weights: {} weights for {} spheres",
                            w.len(),
                            entries.len()
                        )));
                    }
                }
                let spheres = entries
                    .into_iter()
                    .enumerate()
                    .map(|(i, e)| {
                        if e.self_intersection >= 0 {
                            return Err(ScenarioError(format!(
                                "surfaces.entries[{i}].self_intersection: must be negative, got {}",
                                e.self_intersection
                            )));
                        }
                        Ok(SphereEntry {
                            n: (-e.self_intersection) as u64,
                            class_mod_p: e.class_mod_p,
                            weight: weights.as_ref().map_or(1, |w| w[i]),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Surfaces::Spheres(spheres)
            }
            SurfacesDoc::Rp2(entries) => Surfaces::Rp2(
                entries
                    .into_iter()
                    .map(|e| Rp2Entry {
                        euler: e.euler,
                        class_mod_2: e.class_mod_2,
                        eps: e.eps,
                        is_w2: e.is_w2,
                    })
                    .collect(),
            ),
            SurfacesDoc::Cusps(entries) => Surfaces::Cusps(
                entries
                    .into_iter()
                    .map(|e| CuspEntry {
                        handedness: match e.handedness {
                            HandednessDoc::Left => Handedness::Left,
                            HandednessDoc::Right => Handedness::Right,
                        },
                        self_intersection: e.self_intersection,
                        class_mod_2: e.class_mod_2,
                    })
                    .collect(),
            ),
        };
        let manifold = FourManifold {
            b_plus: self.manifold.b_plus,
            sigma: self.manifold.sigma,
            simple_type: self.manifold.simple_type,
            h1_coprime: self.manifold.h1_coprime.into_iter().collect(),
        };
        let sw = self
            .manifold
            .basic_classes
            .into_iter()
            .map(|c| BasicClass {
                pairings: c.pairings,
                sw_mod_p: c.sw_mod_p,
                sw_family: c.sw_family,
                d: c.d.unwrap_or(0),
            })
            .collect();
        Scenario::new(manifold, surfaces, sw, cover_p)
            .map_err(|e| ScenarioError(e.to_string()))
    }
}

/// Loads and validates a scenario file, reporting the JSON path of any
/// offending key.
pub fn load_scenario(path: &Path) -> Result<Scenario, ScenarioError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ScenarioError(format!("{}: {e}", path.display())))?;
    let mut de = serde_json::Deserializer::from_str(&text);
    let doc: ScenarioDoc = serde_path_to_error::deserialize(&mut de)
        .map_err(|e| ScenarioError(format!("at {}: {}", e.path(), e.inner())))?;
    doc.into_scenario()
}
