//! Component type blueprints and the append-only type registry.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{validate_name, ModelError};
use crate::value::{PayloadType, Value};

/// A declared property: name, type, and the value instances start with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertySpec {
    pub name: String,
    #[serde(rename = "type")]
    pub ty: PayloadType,
    pub default: Value,
}

/// A declared sink (input method) or source (output event).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PortSpec {
    pub name: String,
    #[serde(rename = "type")]
    pub ty: PayloadType,
}

/// The blueprint of a bean: properties, input sinks, output sources, and
/// the behavior kind that animates instances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentType {
    pub name: String,
    #[serde(default)]
    pub properties: Vec<PropertySpec>,
    #[serde(default)]
    pub sinks: Vec<PortSpec>,
    #[serde(default)]
    pub sources: Vec<PortSpec>,
    pub behavior: String,
}

impl ComponentType {
    pub fn sink(&self, name: &str) -> Option<&PortSpec> {
        self.sinks.iter().find(|p| p.name == name)
    }

    pub fn source(&self, name: &str) -> Option<&PortSpec> {
        self.sources.iter().find(|p| p.name == name)
    }

    pub fn property(&self, name: &str) -> Option<&PropertySpec> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn default_properties(&self) -> BTreeMap<String, Value> {
        self.properties
            .iter()
            .map(|p| (p.name.clone(), p.default.clone()))
            .collect()
    }

    fn validate(&self) -> Result<(), ModelError> {
        validate_name(&self.name)?;
        let mut check = |names: &mut Vec<String>, name: &str| -> Result<(), ModelError> {
            validate_name(name)?;
            if names.iter().any(|n| n == name) {
                return Err(ModelError::DuplicatePortName {
                    type_name: self.name.clone(),
                    name: name.to_string(),
                });
            }
            names.push(name.to_string());
            Ok(())
        };
        let mut sinks = Vec::new();
        for p in &self.sinks {
            check(&mut sinks, &p.name)?;
        }
        let mut sources = Vec::new();
        for p in &self.sources {
            check(&mut sources, &p.name)?;
        }
        let mut props = Vec::new();
        for p in &self.properties {
            check(&mut props, &p.name)?;
            if p.default.payload_type() != p.ty {
                return Err(ModelError::PropertyTypeMismatch {
                    owner: self.name.clone(),
                    property: p.name.clone(),
                    expected: p.ty,
                    got: p.default.payload_type(),
                });
            }
        }
        Ok(())
    }
}

/// Append-only registry of component types; no redefinition within a run.
#[derive(Debug, Default, Clone)]
pub struct TypeRegistry {
    types: BTreeMap<String, Arc<ComponentType>>,
}

impl TypeRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a type. `is_behavior` reports whether a behavior kind
    /// name is known to the hosting runtime.
    pub fn define(
        &mut self,
        spec: ComponentType,
        is_behavior: impl Fn(&str) -> bool,
    ) -> Result<Arc<ComponentType>, ModelError> {
        spec.validate()?;
        if self.types.contains_key(&spec.name) {
            return Err(ModelError::DuplicateTypeName(spec.name));
        }
        if !is_behavior(&spec.behavior) {
            return Err(ModelError::UnknownBehaviorKind {
                type_name: spec.name.clone(),
                behavior: spec.behavior.clone(),
            });
        }
        let ty = Arc::new(spec);
        self.types.insert(ty.name.clone(), Arc::clone(&ty));
        Ok(ty)
    }

    pub fn get(&self, name: &str) -> Option<&Arc<ComponentType>> {
        self.types.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.types.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.types.keys().map(|s| s.as_str())
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gate_type() -> ComponentType {
        ComponentType {
            name: "Gate".into(),
            properties: vec![PropertySpec {
                name: "expected".into(),
                ty: PayloadType::String,
                default: Value::string(""),
            }],
            sinks: vec![PortSpec {
                name: "input".into(),
                ty: PayloadType::String,
            }],
            sources: vec![
                PortSpec {
                    name: "pass".into(),
                    ty: PayloadType::String,
                },
                PortSpec {
                    name: "fail".into(),
                    ty: PayloadType::String,
                },
            ],
            behavior: "Gate".into(),
        }
    }

    #[test]
    fn registers_and_retrieves() {
        let mut reg = TypeRegistry::new();
        reg.define(gate_type(), |b| b == "Gate").unwrap();
        assert!(reg.get("Gate").is_some());
        assert_eq!(reg.get("Gate").unwrap().sources.len(), 2);
    }

    #[test]
    fn duplicate_type_name_rejected() {
        let mut reg = TypeRegistry::new();
        reg.define(gate_type(), |_| true).unwrap();
        assert_eq!(
            reg.define(gate_type(), |_| true),
            Err(ModelError::DuplicateTypeName("Gate".into()))
        );
    }

    #[test]
    fn duplicate_port_name_rejected() {
        let mut ty = gate_type();
        ty.sinks.push(PortSpec {
            name: "input".into(),
            ty: PayloadType::String,
        });
        let mut reg = TypeRegistry::new();
        let err = reg.define(ty, |_| true).unwrap_err();
        assert!(matches!(err, ModelError::DuplicatePortName { .. }));
    }

    #[test]
    fn sink_and_source_may_share_a_name() {
        let mut ty = gate_type();
        ty.sources.push(PortSpec {
            name: "input".into(),
            ty: PayloadType::String,
        });
        let mut reg = TypeRegistry::new();
        assert!(reg.define(ty, |_| true).is_ok());
    }

    #[test]
    fn unknown_behavior_rejected() {
        let mut reg = TypeRegistry::new();
        let err = reg.define(gate_type(), |b| b == "Relay").unwrap_err();
        assert!(matches!(err, ModelError::UnknownBehaviorKind { .. }));
    }

    #[test]
    fn bad_default_type_rejected() {
        let mut ty = gate_type();
        ty.properties[0].default = Value::Integer(5);
        let mut reg = TypeRegistry::new();
        let err = reg.define(ty, |_| true).unwrap_err();
        assert!(matches!(err, ModelError::PropertyTypeMismatch { .. }));
    }
}
