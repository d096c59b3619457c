use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// A polynomial ring `k[x_1, ..., x_n]` with a default monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl RingSpec {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<RingSpec>> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_VARS} variables are supported, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidArgument("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(RingSpec { field, vars, order }))
    }

    /// Convenience constructor from string slices.
    pub fn with_vars(field: Field, vars: &[&str], order: MonomialOrder) -> Result<Arc<RingSpec>> {
        RingSpec::new(field, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn width(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same ring with another field and/or default order.
    pub fn with_field(&self, field: Field) -> Arc<RingSpec> {
        Arc::new(RingSpec {
            field,
            vars: self.vars.clone(),
            order: self.order,
        })
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<RingSpec> {
        Arc::new(RingSpec {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    /// A ring whose variable `perm[i]` is this ring's variable `i`.
    pub(crate) fn permuted(&self, perm: &[usize], order: MonomialOrder) -> Arc<RingSpec> {
        let mut vars = vec![String::new(); self.vars.len()];
        for (i, &j) in perm.iter().enumerate() {
            vars[j] = self.vars[i].clone();
        }
        Arc::new(RingSpec {
            field: self.field,
            vars,
            order,
        })
    }

    /// Prepends `extra` fresh variables (named `_t0`, `_t1`, ...).
    pub(crate) fn with_leading_vars(&self, extra: usize, order: MonomialOrder) -> Result<Arc<RingSpec>> {
        let mut vars: Vec<String> = (0..extra).map(|i| format!("_t{i}")).collect();
        vars.extend(self.vars.iter().cloned());
        RingSpec::new(self.field, vars, order)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] {}", self.field, self.vars.join(","), self.order)
    }
}
