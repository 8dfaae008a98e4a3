//! JSON algebra descriptions.
//!
//! ```json
//! {"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"},
//!  "quotient": ["x^3"], "pmap": {"x": "0", "y": "0"}}
//! ```
//!
//! Alternatively `{"catalog": "classical2", "p": 3, "params": {"n": 2}}` names
//! a catalog entry, ignoring `vars`, `bracket`, `quotient` and `pmap`. In both
//! forms `shift` maps basis monomials to central values that are added to the
//! p-map as a semilinear correction.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use rpoisson::algebra::{MonomialIdeal, PrimeChar};
use rpoisson::lie::{catalog, default_prime, Params};
use rpoisson::poisson::{parse_monomial, PoissonAlgebra};
use rpoisson::restricted::{add_semilinear_shift, JacobsonCheck, RestrictedPoissonAlgebra};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub p: Option<i64>,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub bracket: BTreeMap<String, String>,
    #[serde(default)]
    pub quotient: Vec<String>,
    pub pmap: Option<BTreeMap<String, String>>,
    pub catalog: Option<String>,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub shift: BTreeMap<String, String>,
}

/// A parsed algebra, with its p-map when the description provides one.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub label: String,
    pub base: Arc<PoissonAlgebra>,
    pub restricted: Option<RestrictedPoissonAlgebra>,
}

impl Loaded {
    pub fn restricted(&self) -> Result<&RestrictedPoissonAlgebra, CliError> {
        self.restricted.as_ref().ok_or_else(|| {
            let first = self.base.vars().first().cloned().unwrap_or_default();
            CliError::at("pmap", rpoisson::Error::MissingGenerator(first))
        })
    }

    pub fn prime(&self) -> PrimeChar {
        self.base.prime()
    }
}

fn prime(p: Option<i64>, fallback: Option<u32>) -> Result<PrimeChar, CliError> {
    let p = match (p, fallback) {
        (Some(p), _) => p,
        (None, Some(f)) => f as i64,
        (None, None) => return Err(CliError::Usage("field p is required".into())),
    };
    let p = u32::try_from(p).unwrap_or(0);
    PrimeChar::new(p).map_err(CliError::field("p"))
}

impl SpecFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn catalog(name: &str, p: Option<i64>, params: Params) -> Self {
        SpecFile {
            catalog: Some(name.into()),
            p,
            params,
            ..Self::default()
        }
    }

    /// Builds the algebra. Generator images are checked against the Jacobson
    /// condition according to `check`.
    pub fn load(&self, label: impl Into<String>, check: JacobsonCheck) -> Result<Loaded, CliError> {
        let label = label.into();
        let loaded = match &self.catalog {
            Some(name) => {
                let p = prime(self.p, default_prime(name))?;
                let a = catalog(name, p, &self.params).map_err(CliError::field("catalog"))?;
                Loaded {
                    label,
                    base: a.base_arc().clone(),
                    restricted: Some(a),
                }
            }
            None => self.load_explicit(label, check)?,
        };
        self.apply_shift(loaded)
    }

    fn load_explicit(&self, label: String, check: JacobsonCheck) -> Result<Loaded, CliError> {
        let p = prime(self.p, None)?;
        let vars = &self.vars;
        let index = |field: &str, name: &str| {
            vars.iter().position(|v| v == name.trim()).ok_or_else(|| {
                CliError::at(
                    field,
                    rpoisson::Error::Parse {
                        offset: 0,
                        message: format!("unknown variable {:?}", name.trim()),
                    },
                )
            })
        };
        let mut table = Vec::new();
        for (key, value) in &self.bracket {
            let field = format!("bracket.{key:?}");
            let (u, v) = key.split_once(',').ok_or_else(|| {
                CliError::at(
                    &field,
                    rpoisson::Error::Parse {
                        offset: 0,
                        message: "expected a key of the form \"x,y\"".into(),
                    },
                )
            })?;
            let (i, j) = (index(&field, u)?, index(&field, v)?);
            let poly =
                rpoisson::algebra::Poly::parse(p, vars, value).map_err(CliError::field(&field))?;
            table.push(((i, j), poly));
        }
        let quotient = if self.quotient.is_empty() {
            None
        } else {
            let gens = self
                .quotient
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    parse_monomial(p, vars, s).map_err(CliError::field(format!("quotient[{k}]")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Some(MonomialIdeal::new(gens))
        };
        let base = Arc::new(
            PoissonAlgebra::new(p, vars.clone(), table, quotient)
                .map_err(CliError::field("bracket"))?,
        );
        let restricted = match &self.pmap {
            None => None,
            Some(images) => {
                if let Some(unknown) = images.keys().find(|k| !vars.contains(k)) {
                    return Err(CliError::at(
                        &format!("pmap.{unknown}"),
                        rpoisson::Error::Parse {
                            offset: 0,
                            message: format!("unknown variable {unknown:?}"),
                        },
                    ));
                }
                let gamma = vars
                    .iter()
                    .map(|v| {
                        let s = images.get(v).ok_or_else(|| {
                            CliError::at("pmap", rpoisson::Error::MissingGenerator(v.clone()))
                        })?;
                        base.parse(s).map_err(CliError::field(format!("pmap.{v}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Some(
                    RestrictedPoissonAlgebra::from_generators(base.clone(), gamma, check)
                        .map_err(CliError::field("pmap"))?,
                )
            }
        };
        Ok(Loaded {
            label,
            base,
            restricted,
        })
    }

    fn apply_shift(&self, mut loaded: Loaded) -> Result<Loaded, CliError> {
        if self.shift.is_empty() {
            return Ok(loaded);
        }
        let a = loaded.restricted()?;
        let alg = a.base();
        let values = self
            .shift
            .iter()
            .map(|(m, z)| {
                let field = format!("shift.{m:?}");
                let m =
                    parse_monomial(alg.prime(), alg.vars(), m).map_err(CliError::field(&field))?;
                let z = alg.parse(z).map_err(CliError::field(&field))?;
                Ok((m, z))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let shifted = add_semilinear_shift(a, values).map_err(CliError::field("shift"))?;
        loaded.restricted = Some(shifted);
        Ok(loaded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> SpecFile {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn explicit_spec_loads() {
        let spec = parse(
            r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0", "y": "0"}}"#,
        );
        let l = spec.load("t", JacobsonCheck::default()).unwrap();
        let a = l.restricted().unwrap();
        assert_eq!(
            a.pp(&l.base.parse("x*y").unwrap()),
            l.base.parse("x y").unwrap()
        );
    }

    #[test]
    fn missing_generator_is_named() {
        let spec =
            parse(r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0"}}"#);
        let err = spec.load("t", JacobsonCheck::default()).unwrap_err();
        assert!(err.to_string().contains("generator y"), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn even_prime_is_rejected() {
        let err = parse(r#"{"p": 4, "vars": ["x"]}"#)
            .load("t", JacobsonCheck::Off)
            .unwrap_err();
        assert!(err.to_string().contains("p must be an odd prime"));
    }

    #[test]
    fn unknown_fields_report_a_location() {
        let path = Path::new("inline");
        let err = serde_json::from_str::<SpecFile>("{\n \"p\": 3,\n \"brackets\": {}\n}")
            .map_err(|source| CliError::Json {
                path: path.into(),
                source,
            })
            .unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn catalog_defaults_its_prime() {
        let l = SpecFile::catalog("classical2-p5", None, Params::new())
            .load("c", JacobsonCheck::Off)
            .unwrap();
        assert_eq!(l.prime().get(), 5);
    }
}
