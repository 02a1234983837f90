use super::ring::Ring;
use crate::ncalg::{render_terms, NCPolynomial, RewriteSystem, Word};
use crate::scalars::FieldElement;
use std::collections::BTreeMap;

/// Linear combination of pure tensors `w_1 (x) ... (x) w_n` of normal words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TensorElement {
    terms: BTreeMap<Vec<Word>, FieldElement>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &FieldElement)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&-FieldElement::one())
    }

    pub fn scale(&self, c: &FieldElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// `p` as a one-slot tensor.
    pub fn lift(p: &NCPolynomial) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in p.terms() {
            out.add_term(vec![w.clone()], c.clone());
        }
        out
    }

    /// `p_1 (x) ... (x) p_n`, expanded multilinearly.
    pub fn pure(parts: &[NCPolynomial]) -> TensorElement {
        parts.iter().fold(TensorElement::scalar_unit(0), |acc, p| acc.outer(&TensorElement::lift(p)))
    }

    /// `1 (x) ... (x) 1` with `slots` factors.
    pub fn scalar_unit(slots: usize) -> TensorElement {
        let mut out = TensorElement::zero();
        out.add_term(vec![Word::empty(); slots], FieldElement::one());
        out
    }

    /// Juxtaposes slots: `(u (x) v).outer(w) = u (x) v (x) w`.
    pub fn outer(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Reverses the slot order; on two slots this is the flip `u (x) v -> v (x) u`.
    pub fn flip(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().rev().cloned().collect(), c.clone());
        }
        out
    }

    pub fn slot_count(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.len())
    }
}

/// Tensor product of algebras; multiplication is slotwise.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    slots: Vec<RewriteSystem>,
}

impl TensorAlgebra {
    pub fn new(slots: Vec<RewriteSystem>) -> Self {
        TensorAlgebra { slots }
    }

    /// `n` copies of `rs`.
    pub fn power(rs: &RewriteSystem, n: usize) -> Self {
        TensorAlgebra {
            slots: vec![rs.clone(); n],
        }
    }

    pub fn slots(&self) -> &[RewriteSystem] {
        &self.slots
    }

    /// Pure tensor of polynomials, each normalized in its slot.
    pub fn pure(&self, parts: &[NCPolynomial]) -> TensorElement {
        let normal: Vec<NCPolynomial> = parts.iter().zip(&self.slots).map(|(p, rs)| rs.reduce(p)).collect();
        TensorElement::pure(&normal)
    }

    /// Renormalizes every slot.
    pub fn normalize(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in t.terms() {
            let parts: Vec<NCPolynomial> = w.iter().map(|x| NCPolynomial::monomial(x.clone(), FieldElement::one())).collect();
            out = out.add(&self.pure(&parts).scale(c));
        }
        out
    }
}

impl Ring for TensorAlgebra {
    type Elem = TensorElement;

    fn zero(&self) -> TensorElement {
        TensorElement::zero()
    }
    fn one(&self) -> TensorElement {
        TensorElement::scalar_unit(self.slots.len())
    }
    fn add(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.add(b)
    }
    fn mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                let parts: Vec<NCPolynomial> = w1
                    .iter()
                    .zip(w2)
                    .map(|(x, y)| NCPolynomial::monomial(x.concat(y), FieldElement::one()))
                    .collect();
                out = out.add(&self.pure(&parts).scale(&(c1 * c2)));
            }
        }
        out
    }
    fn neg(&self, a: &TensorElement) -> TensorElement {
        a.neg()
    }
    fn scale(&self, a: &TensorElement, c: &FieldElement) -> TensorElement {
        a.scale(c)
    }
    fn is_zero(&self, a: &TensorElement) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &TensorElement) -> String {
        let style = self.slots.first().map(|r| r.style()).unwrap_or_default();
        render_terms(a.terms().map(|(w, c)| (w, false, c)), style, |w: &&Vec<Word>| {
            w.iter()
                .zip(&self.slots)
                .map(|(x, rs)| rs.render_word(x))
                .collect::<Vec<_>>()
                .join(" (x) ")
        })
    }
}
