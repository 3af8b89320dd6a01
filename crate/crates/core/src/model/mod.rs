//! The component (bean) blueprint/instance model and the assembly graph.

mod assembly;
mod types;

pub use assembly::{
    Assembly, Binding, ComponentInstance, DetachReport, Endpoint, InstanceState, Origin,
};
pub use types::{ComponentType, PortSpec, PropertySpec, TypeRegistry};

use thiserror::Error;

use crate::value::PayloadType;

/// Unique, never reused within a container run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InstanceId(pub u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BindingId(pub u64);

impl std::fmt::Display for InstanceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "i{}", self.0)
    }
}

impl std::fmt::Display for BindingId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "b{}", self.0)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("component type `{0}` is already registered")]
    DuplicateTypeName(String),
    #[error("type `{type_name}` references unknown behavior kind `{behavior}`")]
    UnknownBehaviorKind { type_name: String, behavior: String },
    #[error("type `{type_name}` declares port or property name `{name}` more than once")]
    DuplicatePortName { type_name: String, name: String },
    #[error("unknown component type `{0}`")]
    UnknownType(String),
    #[error("instance name `{0}` is already in use")]
    DuplicateInstanceName(String),
    #[error("property `{property}` on `{owner}` expects {expected}, got {got}")]
    PropertyTypeMismatch {
        owner: String,
        property: String,
        expected: PayloadType,
        got: PayloadType,
    },
    #[error("`{owner}` declares no property `{property}`")]
    UnknownProperty { owner: String, property: String },
    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
    #[error("unknown endpoint `{0}`")]
    UnknownEndpoint(String),
    #[error("payload type mismatch at {context}: expected {expected}, got {got}")]
    PayloadTypeMismatch {
        context: String,
        expected: PayloadType,
        got: PayloadType,
    },
    #[error("binding {from} -> {to} already exists")]
    DuplicateBinding { from: String, to: String },
    #[error("unknown binding id b{0}")]
    UnknownBinding(u64),
    #[error("invalid name `{0}` (names must be non-empty and contain no whitespace or quotes)")]
    InvalidName(String),
}

pub(crate) fn validate_name(name: &str) -> Result<(), ModelError> {
    let ok = !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || c == '"');
    if ok {
        Ok(())
    } else {
        Err(ModelError::InvalidName(name.to_string()))
    }
}
