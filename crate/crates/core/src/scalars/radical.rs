//! Append-only registry of formal square roots adjoined to the base field.

use super::ratfunc::RatFunc;
use super::{FieldElement, ScalarError};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Debug)]
struct RadicalDef {
    name: String,
    square: RatFunc,
}

#[derive(Default)]
struct Registry {
    defs: Vec<RadicalDef>,
    by_name: HashMap<String, u32>,
}

fn registry() -> &'static RwLock<Registry> {
    static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();
    REGISTRY.get_or_init(|| RwLock::new(Registry::default()))
}

/// Handle to a registered square root `rho` with `rho^2 = square`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadicalSymbol(pub(crate) u32);

impl RadicalSymbol {
    pub fn name(&self) -> String {
        registry().read().expect("radical registry poisoned").defs[self.0 as usize]
            .name
            .clone()
    }

    pub fn square(&self) -> FieldElement {
        FieldElement::from_ratfunc(square_of(self.0))
    }

    pub fn lookup(name: &str) -> Option<RadicalSymbol> {
        registry()
            .read()
            .expect("radical registry poisoned")
            .by_name
            .get(name)
            .copied()
            .map(RadicalSymbol)
    }

    /// The element `rho` itself.
    pub fn element(&self) -> FieldElement {
        FieldElement::from_radical(*self)
    }
}

pub(crate) fn square_of(id: u32) -> RatFunc {
    registry().read().expect("radical registry poisoned").defs[id as usize]
        .square
        .clone()
}

/// Registers `name` with `name^2 = square`. Re-registering the same pair is a no-op.
pub fn adjoin_radical(name: &str, square: &FieldElement) -> Result<RadicalSymbol, ScalarError> {
    let sq = square
        .as_ratfunc()
        .ok_or_else(|| ScalarError::InvalidRadical(name.to_string(), "square carries radicals".into()))?;
    if sq.is_zero() {
        return Err(ScalarError::InvalidRadical(name.to_string(), "square is zero".into()));
    }
    if is_syntactic_square(&sq) {
        return Err(ScalarError::InvalidRadical(name.to_string(), "square is already a perfect square".into()));
    }
    if let Some(existing) = RadicalSymbol::lookup(name) {
        return check_same(existing, name, &sq);
    }
    let mut reg = registry().write().expect("radical registry poisoned");
    // another writer may have won the race
    if let Some(&id) = reg.by_name.get(name) {
        drop(reg);
        return check_same(RadicalSymbol(id), name, &sq);
    }
    let id = reg.defs.len() as u32;
    reg.defs.push(RadicalDef {
        name: name.to_string(),
        square: sq,
    });
    reg.by_name.insert(name.to_string(), id);
    Ok(RadicalSymbol(id))
}

fn check_same(sym: RadicalSymbol, name: &str, sq: &RatFunc) -> Result<RadicalSymbol, ScalarError> {
    if &square_of(sym.0) == sq {
        Ok(sym)
    } else {
        Err(ScalarError::ConflictingDefinition(name.to_string()))
    }
}

/// `c * var^(2k)` with `c` a rational square.
fn is_syntactic_square(sq: &RatFunc) -> bool {
    if !sq.is_monomial() || sq.shift() % 2 != 0 {
        return false;
    }
    let c = sq.num().leading();
    super::rational_sqrt(&c).is_some()
}
