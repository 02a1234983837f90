use crate::scalars::FieldElement;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A finite sequence of generator indices. Ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u8) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Linear combination of words with field coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, FieldElement>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial::default()
    }

    pub fn one() -> Self {
        NCPolynomial::scalar(FieldElement::one())
    }

    pub fn scalar(c: FieldElement) -> Self {
        NCPolynomial::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: FieldElement) -> Self {
        let mut p = NCPolynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: &[u8]) -> Self {
        NCPolynomial::monomial(Word(w.to_vec()), FieldElement::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &FieldElement)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, FieldElement)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> FieldElement {
        self.terms.get(w).cloned().unwrap_or_else(FieldElement::zero)
    }

    /// The scalar when the polynomial has no word of positive length.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(FieldElement::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NCPolynomial {
        NCPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> NCPolynomial {
        if c.is_zero() {
            return NCPolynomial::zero();
        }
        NCPolynomial {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Product in the free algebra (concatenation), without any rewriting.
    pub fn free_mul(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn map_coefficients<E>(
        &self,
        mut f: impl FnMut(&FieldElement) -> Result<FieldElement, E>,
    ) -> Result<NCPolynomial, E> {
        let mut out = NCPolynomial::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }
}
