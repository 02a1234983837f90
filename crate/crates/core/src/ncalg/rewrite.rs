use super::poly::{NCPolynomial, Word};
use super::NcError;
use crate::scalars::{FieldElement, ScalarError, VarStyle};
use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::OnceLock;

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Position in the normal order.
    pub precedence: usize,
}

/// A defining relation `lhs = rhs`, used by the coproduct homomorphism check.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: NCPolynomial,
    pub rhs: NCPolynomial,
    /// Holds only in the quotient by `det = 1`.
    pub modulo_det: bool,
}

/// A determinant that is set to one in the `SL(2)` quotient.
#[derive(Clone, Debug)]
pub struct DetQuotient {
    pub det: NCPolynomial,
}

/// Which redex a reduction step rewrites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Ordered alphabet plus pair rules `g g' -> replacement`.
///
/// Words are compared by length, then total generator weight, then
/// lexicographically by precedence. Every rule must strictly decrease its pair
/// under this order, which makes reduction terminate.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    name: String,
    generators: Vec<Generator>,
    weights: Vec<u32>,
    rules: Vec<Option<NCPolynomial>>,
    relations: Vec<Relation>,
    det: Option<DetQuotient>,
    style: VarStyle,
    budget: usize,
    quotient: OnceLock<Box<RewriteSystem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct OrderKey {
    len: usize,
    weight: u32,
    word: Word,
}

impl RewriteSystem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn style(&self) -> VarStyle {
        self.style
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn det(&self) -> Option<&DetQuotient> {
        self.det.as_ref()
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self.quotient = OnceLock::new();
        self
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    /// The generator `name` as a polynomial.
    pub fn gen(&self, name: &str) -> Result<NCPolynomial, NcError> {
        self.index_of(name)
            .map(|i| NCPolynomial::word(&[i]))
            .ok_or_else(|| NcError::UnknownGenerator(name.to_string()))
    }

    /// Product of generators by name, e.g. `["A", "D"]`.
    pub fn monomial(&self, names: &[&str]) -> Result<NCPolynomial, NcError> {
        let mut w = Vec::with_capacity(names.len());
        for n in names {
            w.push(self.index_of(n).ok_or_else(|| NcError::UnknownGenerator(n.to_string()))?);
        }
        Ok(NCPolynomial::word(&w))
    }

    /// Rule for the adjacent pair `(a, b)`.
    pub fn rule(&self, a: u8, b: u8) -> Option<&NCPolynomial> {
        self.rules[a as usize * self.generators.len() + b as usize].as_ref()
    }

    /// All rules as `(pair, replacement)`.
    pub fn rules(&self) -> impl Iterator<Item = ((u8, u8), &NCPolynomial)> {
        let n = self.generators.len();
        self.rules
            .iter()
            .enumerate()
            .filter_map(move |(i, r)| r.as_ref().map(|r| (((i / n) as u8, (i % n) as u8), r)))
    }

    fn key(&self, w: &Word) -> OrderKey {
        OrderKey {
            len: w.len(),
            weight: w.letters().iter().map(|&g| self.weights[g as usize]).sum(),
            word: w.clone(),
        }
    }

    /// Compares two words under the termination order.
    pub fn compare_words(&self, a: &Word, b: &Word) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    fn find_redex(&self, w: &Word, strategy: Strategy) -> Option<usize> {
        let l = w.letters();
        if l.len() < 2 {
            return None;
        }
        let hit = |i: &usize| self.rule(l[*i], l[*i + 1]).is_some();
        match strategy {
            Strategy::Leftmost => (0..l.len() - 1).find(hit),
            Strategy::Rightmost => (0..l.len() - 1).rev().find(hit),
        }
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_redex(w, Strategy::Leftmost).is_none()
    }

    fn check_alphabet(&self, p: &NCPolynomial) -> Result<(), NcError> {
        match p.max_letter() {
            Some(g) if g as usize >= self.generators.len() => Err(NcError::UnknownGenerator(format!("#{g}"))),
            _ => Ok(()),
        }
    }

    pub fn normal_form(&self, p: &NCPolynomial) -> Result<NCPolynomial, NcError> {
        self.normal_form_with(p, Strategy::Leftmost)
    }

    /// Fully reduces `p`. Pending words are processed largest first, so like
    /// terms merge before they are rewritten again.
    pub fn normal_form_with(&self, p: &NCPolynomial, strategy: Strategy) -> Result<NCPolynomial, NcError> {
        self.check_alphabet(p)?;
        let mut pending: BTreeMap<OrderKey, FieldElement> = BTreeMap::new();
        for (w, c) in p.terms() {
            pending.insert(self.key(w), c.clone());
        }
        let mut out = NCPolynomial::zero();
        let mut steps = 0usize;
        while let Some((key, c)) = pending.pop_last() {
            let w = key.word;
            let Some(i) = self.find_redex(&w, strategy) else {
                out.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > self.budget {
                return Err(NcError::NonTerminating { steps: self.budget });
            }
            let l = w.letters();
            let rep = self.rule(l[i], l[i + 1]).expect("redex has a rule");
            for (rw, rc) in rep.terms() {
                let mut nw = Vec::with_capacity(l.len() + rw.len());
                nw.extend_from_slice(&l[..i]);
                nw.extend_from_slice(rw.letters());
                nw.extend_from_slice(&l[i + 2..]);
                let k = self.key(&Word(nw));
                let coeff = &c * rc;
                match pending.entry(k) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(coeff);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &coeff;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form for inputs built from this system's own generators; such
    /// inputs cannot fail for a validated system.
    pub fn reduce(&self, p: &NCPolynomial) -> NCPolynomial {
        self.normal_form(p)
            .unwrap_or_else(|e| panic!("rewrite system {} failed on internal input: {e}", self.name))
    }

    /// Normal form of the product `p * r`.
    pub fn mul(&self, p: &NCPolynomial, r: &NCPolynomial) -> NCPolynomial {
        self.reduce(&p.free_mul(r))
    }

    pub fn commutator(&self, p: &NCPolynomial, r: &NCPolynomial) -> Result<NCPolynomial, NcError> {
        self.normal_form(&p.free_mul(r).sub(&r.free_mul(p)))
    }

    /// The system with `det = 1` added as a rule on the leading word of `det`.
    pub fn quotient(&self) -> Result<&RewriteSystem, NcError> {
        if let Some(q) = self.quotient.get() {
            return Ok(q);
        }
        let q = self.build_quotient()?;
        Ok(self.quotient.get_or_init(|| Box::new(q)))
    }

    fn build_quotient(&self) -> Result<RewriteSystem, NcError> {
        let Some(det) = &self.det else {
            return Ok(self.clone());
        };
        let (lead, c) = det
            .det
            .terms()
            .max_by(|x, y| self.compare_words(x.0, y.0))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or_else(|| NcError::BadDeterminant("zero".into()))?;
        let l = lead.letters();
        if l.len() != 2 || self.rule(l[0], l[1]).is_some() {
            return Err(NcError::BadDeterminant(self.render(&det.det)));
        }
        // det = c*lead + rest = 1
        let rest = det.det.sub(&NCPolynomial::monomial(lead.clone(), c.clone()));
        let inv = c.inv().map_err(NcError::Scalar)?;
        let rhs = NCPolynomial::one().sub(&rest).scale(&inv);
        let mut out = self.clone();
        out.name = format!("{}/det", self.name);
        out.det = None;
        out.quotient = OnceLock::new();
        out.rules[l[0] as usize * self.generators.len() + l[1] as usize] = Some(rhs);
        out.validate()?;
        Ok(out)
    }

    /// Normal form in the quotient by `det = 1`.
    pub fn impose_det(&self, p: &NCPolynomial) -> Result<NCPolynomial, NcError> {
        self.quotient()?.normal_form(p)
    }

    /// Applies `f` to every rule, relation and determinant coefficient.
    pub fn map_coefficients(
        &self,
        name: &str,
        f: impl Fn(&FieldElement) -> Result<FieldElement, ScalarError>,
    ) -> Result<RewriteSystem, NcError> {
        let map = |p: &NCPolynomial| p.map_coefficients(&f).map_err(NcError::Scalar);
        let mut out = self.clone();
        out.name = name.to_string();
        for r in out.rules.iter_mut().flatten() {
            *r = map(r)?;
        }
        for rel in &mut out.relations {
            rel.lhs = map(&rel.lhs)?;
            rel.rhs = map(&rel.rhs)?;
        }
        if let Some(d) = &mut out.det {
            d.det = map(&d.det)?;
        }
        out.quotient = OnceLock::new();
        out.validate()?;
        Ok(out)
    }

    /// Specializes the deformation parameter to a rational value.
    pub fn specialize(&self, name: &str, point: &BigRational) -> Result<RewriteSystem, NcError> {
        self.map_coefficients(name, |c| c.specialize(point))
    }

    /// Union of two systems whose generators commute with each other; `self`'s
    /// generators precede `other`'s.
    pub fn commuting_union(&self, other: &RewriteSystem, name: &str) -> Result<RewriteSystem, NcError> {
        let off = self.generators.len() as u8;
        let shift = |p: &NCPolynomial| {
            let mut out = NCPolynomial::zero();
            for (w, c) in p.terms() {
                out.add_term(Word(w.letters().iter().map(|g| g + off).collect()), c.clone());
            }
            out
        };
        let mut b = RewriteSystemBuilder::new(
            name,
            &self
                .generators
                .iter()
                .chain(other.generators.iter())
                .map(|g| g.name.as_str())
                .collect::<Vec<_>>(),
        )
        .style(self.style)
        .weights(&self.weights.iter().chain(other.weights.iter()).copied().collect::<Vec<_>>());
        for ((x, y), r) in self.rules() {
            b = b.rule_idx(x, y, r.clone());
        }
        for ((x, y), r) in other.rules() {
            b = b.rule_idx(x + off, y + off, shift(r));
        }
        for g in 0..other.generators.len() as u8 {
            for t in 0..off {
                b = b.rule_idx(g + off, t, NCPolynomial::word(&[t, g + off]));
            }
        }
        for rel in &self.relations {
            b = b.relation_poly(&rel.name, rel.lhs.clone(), rel.rhs.clone(), rel.modulo_det);
        }
        for rel in &other.relations {
            b = b.relation_poly(&rel.name, shift(&rel.lhs), shift(&rel.rhs), rel.modulo_det);
        }
        if let Some(d) = &self.det {
            b = b.det_quotient(d.clone());
        }
        b.build()
    }

    fn validate(&self) -> Result<(), NcError> {
        let n = self.generators.len();
        for ((a, b), r) in self.rules() {
            let pair = Word(vec![a, b]);
            for (w, _) in r.terms() {
                if w.letters().iter().any(|&g| g as usize >= n) {
                    return Err(NcError::UnknownGenerator(format!("#{}", w.letters().iter().max().unwrap())));
                }
                if self.compare_words(w, &pair) != Ordering::Less {
                    return Err(NcError::RuleNotDecreasing(format!(
                        "{} -> {}",
                        self.render_word(&pair),
                        self.render(r)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Renders in ascending (degree, lex) order, e.g. `A*D - (q - q^-1)*B*C`.
    pub fn render(&self, p: &NCPolynomial) -> String {
        render_poly(p, self.style, |w| self.render_word(w))
    }
}

/// Shared renderer: `word` prints a non-empty basis word.
pub(crate) fn render_poly(p: &NCPolynomial, style: VarStyle, word: impl Fn(&Word) -> String) -> String {
    render_terms(p.terms().map(|(w, c)| (w, w.is_empty(), c)), style, |w: &&Word| word(w))
}

pub(crate) fn render_terms<'a, K>(
    terms: impl Iterator<Item = (K, bool, &'a FieldElement)>,
    style: VarStyle,
    basis: impl Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (k, is_unit, c) in terms {
        let (neg, body) = if is_unit {
            let s = c.render(style);
            match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            }
        } else {
            let b = basis(&k);
            let neg = c.leading_is_negative();
            let abs = if neg { -c } else { c.clone() };
            if abs.is_one() {
                (neg, b)
            } else if abs.is_monomial() {
                (neg, format!("{}*{b}", abs.render(style)))
            } else {
                (neg, format!("({})*{b}", abs.render(style)))
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Incremental construction of a [`RewriteSystem`].
pub struct RewriteSystemBuilder {
    name: String,
    generators: Vec<Generator>,
    weights: Vec<u32>,
    rules: Vec<Option<NCPolynomial>>,
    relations: Vec<Relation>,
    det: Option<DetQuotient>,
    style: VarStyle,
    complete: bool,
    error: Option<NcError>,
}

impl RewriteSystemBuilder {
    pub fn new(name: &str, names: &[&str]) -> Self {
        let mut error = None;
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                error = Some(NcError::DuplicateGenerator(n.to_string()));
            }
        }
        if names.len() > u8::MAX as usize {
            error = Some(NcError::TooManyGenerators(names.len()));
        }
        RewriteSystemBuilder {
            name: name.to_string(),
            generators: names
                .iter()
                .enumerate()
                .map(|(i, n)| Generator {
                    name: n.to_string(),
                    precedence: i,
                })
                .collect(),
            weights: vec![1; names.len()],
            rules: vec![None; names.len() * names.len()],
            relations: Vec::new(),
            det: None,
            style: VarStyle::Q,
            complete: true,
            error,
        }
    }

    pub fn style(mut self, style: VarStyle) -> Self {
        self.style = style;
        self
    }

    pub fn weights(mut self, w: &[u32]) -> Self {
        if w.len() == self.generators.len() {
            self.weights = w.to_vec();
        }
        self
    }

    /// Allows out-of-order pairs without rules (e.g. the free algebra).
    pub fn allow_incomplete(mut self) -> Self {
        self.complete = false;
        self
    }

    fn idx(&mut self, name: &str) -> u8 {
        match self.generators.iter().position(|g| g.name == name) {
            Some(i) => i as u8,
            None => {
                self.error.get_or_insert(NcError::UnknownGenerator(name.to_string()));
                0
            }
        }
    }

    /// Polynomial from `(coefficient, word)` terms written with generator names.
    pub fn poly(&mut self, terms: &[(FieldElement, &[&str])]) -> NCPolynomial {
        let mut p = NCPolynomial::zero();
        for (c, names) in terms {
            let w: Vec<u8> = names.iter().map(|n| self.idx(n)).collect();
            p.add_term(Word(w), c.clone());
        }
        p
    }

    pub fn rule(mut self, a: &str, b: &str, replacement: &[(FieldElement, &[&str])]) -> Self {
        let (x, y) = (self.idx(a), self.idx(b));
        let r = self.poly(replacement);
        self.rule_idx(x, y, r)
    }

    pub fn rule_idx(mut self, a: u8, b: u8, replacement: NCPolynomial) -> Self {
        let n = self.generators.len();
        self.rules[a as usize * n + b as usize] = Some(replacement);
        self
    }

    pub fn relation(mut self, name: &str, lhs: &[(FieldElement, &[&str])], rhs: &[(FieldElement, &[&str])]) -> Self {
        let l = self.poly(lhs);
        let r = self.poly(rhs);
        self.relation_poly(name, l, r, false)
    }

    /// A relation that holds only once `det = 1` is imposed.
    pub fn det_relation(mut self, name: &str, lhs: &[(FieldElement, &[&str])], rhs: &[(FieldElement, &[&str])]) -> Self {
        let l = self.poly(lhs);
        let r = self.poly(rhs);
        self.relation_poly(name, l, r, true)
    }

    pub fn relation_poly(mut self, name: &str, lhs: NCPolynomial, rhs: NCPolynomial, modulo_det: bool) -> Self {
        self.relations.push(Relation {
            name: name.to_string(),
            lhs,
            rhs,
            modulo_det,
        });
        self
    }

    /// Registers a determinant to be set to one in the quotient.
    pub fn det(mut self, det: &[(FieldElement, &[&str])]) -> Self {
        let det = self.poly(det);
        self.det = Some(DetQuotient { det });
        self
    }

    pub fn det_quotient(mut self, d: DetQuotient) -> Self {
        self.det = Some(d);
        self
    }

    pub fn build(self) -> Result<RewriteSystem, NcError> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let n = self.generators.len();
        if self.complete {
            for a in 0..n {
                for b in 0..a {
                    if self.rules[a * n + b].is_none() {
                        return Err(NcError::MissingRule(format!(
                            "{}*{}",
                            self.generators[a].name, self.generators[b].name
                        )));
                    }
                }
            }
        }
        let rs = RewriteSystem {
            name: self.name,
            generators: self.generators,
            weights: self.weights,
            rules: self.rules,
            relations: self.relations,
            det: self.det,
            style: self.style,
            budget: DEFAULT_STEP_BUDGET,
            quotient: OnceLock::new(),
        };
        rs.validate()?;
        Ok(rs)
    }
}
