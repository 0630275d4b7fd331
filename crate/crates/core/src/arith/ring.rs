use std::collections::HashSet;
use std::sync::Arc;

use super::{ArithError, Field, MonomialOrder, PowerProduct};

/// A polynomial ring `K[x1, ..., xn]` together with its active monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        field: Field,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>, ArithError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(ArithError::NoVariables);
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(ArithError::EmptyVariableName);
            }
            if !seen.insert(v.as_str()) {
                return Err(ArithError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// The same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { order, ..self.clone() })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn one_pp(&self) -> PowerProduct {
        PowerProduct::one(self.nvars())
    }
}
