use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Zero};

use super::{CoefficientModule, ModuleVector};
use crate::kernel::{binomial, format_coefficient, int, Rational};
use crate::{Error, Result};

/// `Q_λ = U(𝔞_r) / I`, `I` the left ideal generated by `d̄_i − λ_i`, `i ∈ S`.
///
/// Basis: ordered monomials `d̄_{u_1} ⋯ d̄_{u_k} · vac` with every `u_j` in
/// the complement `{0, …, r} \ S` and `u_1 ≤ u_2 ≤ … ≤ u_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QLambdaDescriptor {
    pub r: usize,
    pub s: BTreeSet<usize>,
    /// `λ_i` for `i ∈ S`; missing entries are zero.
    pub lambda: BTreeMap<usize, Rational>,
}

/// Nondecreasing list of generator indices; the empty list is `vac`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<usize>);

impl Monomial {
    pub fn vac() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Element of `Q_λ` in the ordered-monomial basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QVec {
    terms: BTreeMap<Monomial, Rational>,
}

impl QVec {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vac() -> Self {
        Self::term(Monomial::vac(), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    fn add_scaled(&mut self, other: &QVec, c: &Rational) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let run = self.0[i..].iter().take_while(|&&h| h == g).count();
            if run == 1 {
                write!(f, "d{g}·")?;
            } else {
                write!(f, "d{g}^{run}·")?;
            }
            i += run;
        }
        write!(f, "vac")
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", format_coefficient(c), m)?;
        }
        Ok(())
    }
}

impl ModuleVector for QVec {
    type Basis = Monomial;

    fn is_zero_vector(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_vector(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }
    fn terms(&self) -> Vec<(Monomial, Rational)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }
    fn basis_degree(m: &Monomial) -> usize {
        m.len()
    }
}

impl QLambdaDescriptor {
    pub fn new<S, L>(r: usize, s: S, lambda: L) -> Self
    where
        S: IntoIterator<Item = usize>,
        L: IntoIterator<Item = (usize, Rational)>,
    {
        Self {
            r,
            s: s.into_iter().collect(),
            lambda: lambda.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn lambda(&self, i: usize) -> Rational {
        self.lambda.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Generators that survive in the basis: `{0, …, r} \ S`.
    pub fn complement(&self) -> Vec<usize> {
        (0..=self.r).filter(|i| !self.s.contains(i)).collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.r {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.r,
            })
        } else {
            Ok(())
        }
    }

    /// `d̄_i` applied to a single basis monomial, straightened.
    ///
    /// Moving `d̄_i` one place right past `d̄_u` costs a bracket term
    /// `(u − i) d̄_{i+u}` of strictly shorter length; a generator from `S`
    /// reaching `vac` becomes `λ_i`.
    fn act_monomial(&self, i: usize, mono: &[usize]) -> QVec {
        let Some((&u, rest)) = mono.split_first() else {
            return if self.s.contains(&i) {
                QVec::term(Monomial::vac(), self.lambda(i))
            } else {
                QVec::term(Monomial(vec![i]), Rational::one())
            };
        };
        if !self.s.contains(&i) && i <= u {
            let mut m = Vec::with_capacity(mono.len() + 1);
            m.push(i);
            m.extend_from_slice(mono);
            return QVec::term(Monomial(m), Rational::one());
        }
        // d̄_i d̄_u R = d̄_u (d̄_i R) + (u − i) d̄_{i+u} R
        let mut out = QVec::zero();
        let inner = self.act_monomial(i, rest);
        for (m, c) in inner.iter() {
            out.add_scaled(&self.act_monomial(u, &m.0), c);
        }
        if i + u <= self.r && i != u {
            let bracket = self.act_monomial(i + u, rest);
            out.add_scaled(&bracket, &int(u as i64 - i as i64));
        }
        out
    }

    /// Image of `d̄_{w_1} ⋯ d̄_{w_k} · vac` in the canonical basis.
    pub fn straighten(&self, word: &[usize]) -> Result<QVec> {
        let mut v = QVec::vac();
        for &i in word.iter().rev() {
            v = self.act(i, &v)?;
        }
        Ok(v)
    }
}

/// Normal form of a word applied to the cyclic vector of `Q_λ`.
pub fn q_lambda_straighten(desc: &QLambdaDescriptor, word: &[usize]) -> Result<QVec> {
    desc.straighten(word)
}

impl CoefficientModule for QLambdaDescriptor {
    type Vector = QVec;

    fn rank(&self) -> usize {
        self.r
    }

    fn family(&self) -> &'static str {
        "qlambda"
    }

    fn zero(&self) -> QVec {
        QVec::zero()
    }

    fn unit(&self) -> QVec {
        QVec::vac()
    }

    fn filtration_dim(&self, degree: usize) -> usize {
        // multisets of size ≤ degree drawn from the complement
        let c = self.complement().len() as u64;
        (0..=degree as u64)
            .map(|k| {
                binomial(c + k - 1, k)
                    .to_integer()
                    .try_into()
                    .unwrap_or(usize::MAX)
            })
            .fold(0usize, usize::saturating_add)
    }

    fn act(&self, i: usize, v: &QVec) -> Result<QVec> {
        self.check_index(i)?;
        let mut out = QVec::zero();
        for (m, c) in v.iter() {
            out.add_scaled(&self.act_monomial(i, &m.0), c);
        }
        Ok(out)
    }

    fn check_member(&self, v: &QVec) -> Result<()> {
        for (m, _) in v.iter() {
            for &i in &m.0 {
                self.check_index(i)?;
                if self.s.contains(&i) {
                    return Err(Error::Precondition(format!(
                        "monomial {:?} uses generator d{i} from S",
                        m.0
                    )));
                }
            }
            if m.0.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Precondition(format!(
                    "monomial {:?} is not ordered",
                    m.0
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> QLambdaDescriptor {
        QLambdaDescriptor::new(3, [2, 3], [(2, int(0)), (3, int(1))])
    }

    #[test]
    fn already_normal() {
        let q = small();
        assert_eq!(
            q.straighten(&[1]).unwrap(),
            QVec::term(Monomial(vec![1]), int(1))
        );
    }

    #[test]
    fn single_commutation() {
        // d̄₂d̄₁ = d̄₁d̄₂ − d̄₃, and d̄₂ vac = 0, d̄₃ vac = vac.
        let q = small();
        assert_eq!(
            q_lambda_straighten(&q, &[2, 1]).unwrap(),
            QVec::vac().scale(&int(-1))
        );
        let d1 = q.straighten(&[1]).unwrap();
        assert_eq!(q.act(2, &d1).unwrap(), QVec::vac().scale(&int(-1)));
    }

    #[test]
    fn generator_in_s_on_vac() {
        assert_eq!(small().straighten(&[3]).unwrap(), QVec::vac());
    }

    #[test]
    fn ordering_is_enforced() {
        let q = small();
        let v = q.straighten(&[1, 0]).unwrap();
        // d̄₁d̄₀ = d̄₀d̄₁ − d̄₁
        let mut expect = QVec::term(Monomial(vec![0, 1]), int(1));
        expect.add_term(Monomial(vec![1]), int(-1));
        assert_eq!(v, expect);
        assert!(q.check_member(&v).is_ok());
        assert!(q
            .check_member(&QVec::term(Monomial(vec![1, 0]), int(1)))
            .is_err());
        assert!(q.straighten(&[4]).is_err());
    }
}
