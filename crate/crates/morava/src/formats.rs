//! JSON input formats.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use morava_core::cp_module::CpModule;
use morava_core::dsl::RelationTemplate;
use morava_core::field::Fp;
use morava_core::group::{ConjugationRule, GeneratorDecl, GroupSource, GroupSpec, PowerRule, Word};
use morava_core::poly::{CoefficientSpec, MonomialOrder, PolyRing, Polynomial, Variable};
use morava_core::verifier::{GradedVariable, ImplicitDefinition, RingPresentation};

use crate::error::CliError;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationJson {
    pub acted: String,
    pub actor: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerJson {
    pub generator: String,
    pub word: String,
}

/// A group description, tagged by `"type"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupJson {
    Polycyclic {
        generators: Vec<GeneratorJson>,
        #[serde(default)]
        conjugations: Vec<ConjugationJson>,
        #[serde(default)]
        powers: Vec<PowerJson>,
    },
    Family {
        n: u32,
        matrix: [u64; 4],
    },
    Cyclic {
        order: u32,
    },
    Product {
        factors: Vec<GroupJson>,
    },
}

impl GroupJson {
    pub fn to_source(&self) -> Result<GroupSource, CliError> {
        Ok(match self {
            GroupJson::Polycyclic {
                generators,
                conjugations,
                powers,
            } => {
                let mut spec = GroupSpec::new();
                spec.generators = generators
                    .iter()
                    .map(|g| GeneratorDecl {
                        name: g.name.clone(),
                        order: g.order,
                    })
                    .collect();
                for c in conjugations {
                    spec.conjugations.push(ConjugationRule {
                        acted: c.acted.clone(),
                        actor: c.actor.clone(),
                        image: Word::parse(&c.image)?,
                    });
                }
                for p in powers {
                    spec.powers.push(PowerRule {
                        generator: p.generator.clone(),
                        word: Word::parse(&p.word)?,
                    });
                }
                spec.validate()?;
                GroupSource::Polycyclic(spec)
            }
            GroupJson::Family { n, matrix } => GroupSource::Family { n: *n, matrix: *matrix },
            GroupJson::Cyclic { order } => GroupSource::Cyclic { order: *order },
            GroupJson::Product { factors } => {
                GroupSource::Product(factors.iter().map(|f| f.to_source()).collect::<Result<_, _>>()?)
            }
        })
    }

    pub fn from_source(src: &GroupSource) -> Self {
        match src {
            GroupSource::Polycyclic(spec) => GroupJson::Polycyclic {
                generators: spec
                    .generators
                    .iter()
                    .map(|g| GeneratorJson {
                        name: g.name.clone(),
                        order: g.order,
                    })
                    .collect(),
                conjugations: spec
                    .conjugations
                    .iter()
                    .map(|c| ConjugationJson {
                        acted: c.acted.clone(),
                        actor: c.actor.clone(),
                        image: c.image.to_string(),
                    })
                    .collect(),
                powers: spec
                    .powers
                    .iter()
                    .map(|p| PowerJson {
                        generator: p.generator.clone(),
                        word: p.word.to_string(),
                    })
                    .collect(),
            },
            GroupSource::Family { n, matrix } => GroupJson::Family { n: *n, matrix: *matrix },
            GroupSource::Cyclic { order } => GroupJson::Cyclic { order: *order },
            GroupSource::Product(f) => GroupJson::Product {
                factors: f.iter().map(GroupJson::from_source).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VariableJson {
    Name(String),
    Graded { name: String, degree: i64 },
}

impl VariableJson {
    fn name(&self) -> &str {
        match self {
            VariableJson::Name(n) => n,
            VariableJson::Graded { name, .. } => name,
        }
    }

    /// Bare names have degree 1.
    fn degree(&self) -> i64 {
        match self {
            VariableJson::Name(_) => 1,
            VariableJson::Graded { degree, .. } => *degree,
        }
    }
}

/// `{"p": 2, "variables": ["x", "y"], "generators": ["x^2 + y", "y^2"]}`.
/// Generators are relation-language expressions; `s` (default 2) is
/// available to them as a parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub p: u64,
    pub variables: Vec<VariableJson>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub s: Option<u32>,
}

impl IdealJson {
    pub fn to_polynomials(&self, order: MonomialOrder) -> Result<(PolyRing, Vec<Polynomial>), CliError> {
        let field = Fp::new(self.p).map_err(|e| CliError::Input(e.to_string()))?;
        let vars = self
            .variables
            .iter()
            .map(|v| Variable::new(v.name(), v.degree()))
            .collect();
        let ring = PolyRing::new(field, vars, order)?;
        let spec = CoefficientSpec::new(self.p, self.s.unwrap_or(2))?;
        let gens = self
            .generators
            .iter()
            .map(|g| Ok(RelationTemplate::parse(g)?.instantiate(&spec, &ring)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok((ring, gens))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedVariableJson {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicitJson {
    pub var: String,
    pub equation: String,
}

/// A ring presentation file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    #[serde(default)]
    pub name: Option<String>,
    pub p: u32,
    pub variables: Vec<GradedVariableJson>,
    pub relations: Vec<String>,
    #[serde(default)]
    pub implicit: Vec<ImplicitJson>,
    #[serde(default)]
    pub reducers: Option<Vec<usize>>,
    #[serde(default)]
    pub extra_relations: Vec<String>,
    #[serde(default)]
    pub group: Option<GroupJson>,
}

impl PresentationJson {
    pub fn to_presentation(&self, default_name: &str) -> Result<RingPresentation, CliError> {
        let pres = RingPresentation {
            name: self.name.clone().unwrap_or_else(|| default_name.to_string()),
            p: self.p,
            variables: self
                .variables
                .iter()
                .map(|v| GradedVariable {
                    name: v.name.clone(),
                    degree: v.degree,
                })
                .collect(),
            relations: self.relations.clone(),
            implicit: self
                .implicit
                .iter()
                .map(|d| ImplicitDefinition {
                    var: d.var.clone(),
                    equation: d.equation.clone(),
                })
                .collect(),
            reducers: self.reducers.clone(),
            extra_relations: self.extra_relations.clone(),
            group: self.group.as_ref().map(|g| g.to_source()).transpose()?,
        };
        pres.validate()?;
        Ok(pres)
    }

    pub fn from_presentation(pres: &RingPresentation) -> Self {
        PresentationJson {
            name: Some(pres.name.clone()),
            p: pres.p,
            variables: pres
                .variables
                .iter()
                .map(|v| GradedVariableJson {
                    name: v.name.clone(),
                    degree: v.degree,
                })
                .collect(),
            relations: pres.relations.clone(),
            implicit: pres
                .implicit
                .iter()
                .map(|d| ImplicitJson {
                    var: d.var.clone(),
                    equation: d.equation.clone(),
                })
                .collect(),
            reducers: pres.reducers.clone(),
            extra_relations: pres.extra_relations.clone(),
            group: pres.group.as_ref().map(GroupJson::from_source),
        }
    }
}

/// `{"p": 2, "matrix": [[0, 1], [1, 0]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub p: u32,
    pub matrix: Vec<Vec<i64>>,
}

impl MatrixJson {
    pub fn to_module(&self) -> Result<CpModule, CliError> {
        Ok(CpModule::from_rows(self.p, &self.matrix)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use morava_core::group::{build_source, GroupConfig};
    use morava_core::verifier::g36_presentation;

    #[test]
    fn group_json_variants() {
        let text = r#"{"type":"polycyclic","generators":[{"name":"a","order":4},{"name":"c","order":2}],
                       "conjugations":[{"acted":"a","actor":"c","image":"a^3"}]}"#;
        let g: GroupJson = serde_json::from_str(text).unwrap();
        let grp = build_source(&g.to_source().unwrap(), &GroupConfig::default()).unwrap();
        assert_eq!(grp.order(), 8);

        let text = r#"{"type":"product","factors":[{"type":"cyclic","order":2},{"type":"family","n":1,"matrix":[1,0,0,1]}]}"#;
        let g: GroupJson = serde_json::from_str(text).unwrap();
        let grp = build_source(&g.to_source().unwrap(), &GroupConfig::default()).unwrap();
        assert_eq!(grp.order(), 16);
    }

    #[test]
    fn bad_word_is_an_input_error() {
        let text = r#"{"type":"polycyclic","generators":[{"name":"a","order":4},{"name":"c","order":2}],
                       "conjugations":[{"acted":"a","actor":"c","image":"a^x"}]}"#;
        let g: GroupJson = serde_json::from_str(text).unwrap();
        assert!(matches!(g.to_source(), Err(CliError::Input(_))));
    }

    #[test]
    fn presentation_roundtrip() {
        let pres = g36_presentation();
        let json = serde_json::to_string(&PresentationJson::from_presentation(&pres)).unwrap();
        let back: PresentationJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_presentation("x").unwrap(), pres);
    }

    #[test]
    fn ideal_file() {
        let text = r#"{"p":2,"variables":["x",{"name":"y","degree":1}],"generators":["x^2 + y","y^2"]}"#;
        let i: IdealJson = serde_json::from_str(text).unwrap();
        let (ring, gens) = i.to_polynomials(MonomialOrder::Grevlex).unwrap();
        assert_eq!(ring.to_string(&gens[0]), "x^2 + y");
    }
}
