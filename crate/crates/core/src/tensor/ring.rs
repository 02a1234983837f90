use crate::ncalg::{NCPolynomial, RewriteSystem};
use crate::scalars::{FieldElement, VarStyle};
use std::fmt::Debug;

/// Arithmetic context for matrix entries. Algebra products need the rewrite
/// system, so the context is a value rather than a trait on the entry type.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &FieldElement) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_scalar(&self, c: &FieldElement) -> Self::Elem {
        self.scale(&self.one(), c)
    }
}

/// The coefficient field itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Field {
    pub style: VarStyle,
}

impl Field {
    pub const Q: Field = Field { style: VarStyle::Q };
    pub const H: Field = Field { style: VarStyle::H };
}

impl Ring for Field {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement::zero()
    }
    fn one(&self) -> FieldElement {
        FieldElement::one()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a
    }
    fn scale(&self, a: &FieldElement, c: &FieldElement) -> FieldElement {
        a * c
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &FieldElement) -> String {
        a.render(self.style)
    }
}

impl Ring for RewriteSystem {
    type Elem = NCPolynomial;

    fn zero(&self) -> NCPolynomial {
        NCPolynomial::zero()
    }
    fn one(&self) -> NCPolynomial {
        NCPolynomial::one()
    }
    fn add(&self, a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
        a.add(b)
    }
    fn mul(&self, a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
        RewriteSystem::mul(self, a, b)
    }
    fn neg(&self, a: &NCPolynomial) -> NCPolynomial {
        a.neg()
    }
    fn scale(&self, a: &NCPolynomial, c: &FieldElement) -> NCPolynomial {
        a.scale(c)
    }
    fn is_zero(&self, a: &NCPolynomial) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &NCPolynomial) -> String {
        RewriteSystem::render(self, a)
    }
}
