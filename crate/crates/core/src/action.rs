//! Virasoro actions on `N(M, α) = M ⊗ ℂ[t^{±1}]`.
//!
//! For an `𝔞_r`-module `M` and `α ∈ ℚ`:
//!
//! ```text
//! d_m (v ⊗ tⁿ) = ((α + n) v + Σ_{i=0}^{r} m^{i+1}/(i+1)! · d̄_i v) ⊗ t^{n+m}
//! c (v ⊗ tⁿ)   = 0
//! ```
//!
//! On `N(M, 0)` the Laurent generators act by `t^k (v ⊗ tⁿ) = v ⊗ t^{n+k}`,
//! and a Laurent polynomial `β` twists the action to `d_n ∘ w = d_n w + β tⁿ w`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::coeff::{CoefficientModule, ModuleVector};
use crate::kernel::{binomial, factorial, int, LaurentPoly, Rational};
use crate::Result;

/// Element of `M ⊗ ℂ[t^{±1}]`: finitely many components `v_n ⊗ tⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector<V> {
    components: BTreeMap<i64, V>,
}

impl<V> Default for WeightVector<V> {
    fn default() -> Self {
        Self {
            components: BTreeMap::new(),
        }
    }
}

impl<V: ModuleVector> WeightVector<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `v ⊗ t^grade`.
    pub fn single(grade: i64, v: V) -> Self {
        let mut w = Self::zero();
        w.add_component(grade, &v);
        w
    }

    pub fn from_components<I: IntoIterator<Item = (i64, V)>>(parts: I) -> Self {
        let mut w = Self::zero();
        for (n, v) in parts {
            w.add_component(n, &v);
        }
        w
    }

    pub fn add_component(&mut self, grade: i64, v: &V) {
        if v.is_zero_vector() {
            return;
        }
        let sum = match self.components.get(&grade) {
            Some(old) => old.add_vector(v),
            None => v.clone(),
        };
        if sum.is_zero_vector() {
            self.components.remove(&grade);
        } else {
            self.components.insert(grade, sum);
        }
    }

    pub fn component(&self, grade: i64) -> Option<&V> {
        self.components.get(&grade)
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &V)> {
        self.components.iter().map(|(n, v)| (*n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn grades(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, v) in other.components() {
            out.add_component(n, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Self::zero();
        }
        Self {
            components: self
                .components
                .iter()
                .map(|(n, v)| (*n, v.scale(c)))
                .collect(),
        }
    }

    /// `t^k`: every grade moves by `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            components: self
                .components
                .iter()
                .map(|(n, v)| (n + k, v.clone()))
                .collect(),
        }
    }

    /// Largest filtration degree among all components.
    pub fn max_degree(&self) -> Option<usize> {
        self.components
            .values()
            .filter_map(|v| v.max_degree())
            .max()
    }

    /// Coordinates `((grade, basis), coefficient)` in increasing order.
    pub fn coordinates(&self) -> Vec<((i64, V::Basis), Rational)> {
        self.components
            .iter()
            .flat_map(|(n, v)| v.terms().into_iter().map(move |(b, c)| ((*n, b), c)))
            .collect()
    }
}

impl<V: ModuleVector + fmt::Display> fmt::Display for WeightVector<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, v)) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            if v.terms().len() > 1 {
                write!(f, "[{v}] @ grade {n}")?;
            } else {
                write!(f, "{v} @ grade {n}")?;
            }
        }
        Ok(())
    }
}

pub type WeightVectorOf<M> = WeightVector<<M as CoefficientModule>::Vector>;

/// Anything that lets `d_m` act on weight vectors over a coefficient module.
///
/// Implemented by [`ModuleInstance`] and [`TwistedInstance`]; the oracles are
/// generic over it so that mutated actions can be checked as negative controls.
pub trait VirasoroAction {
    type Coeff: CoefficientModule;

    fn coeff(&self) -> &Self::Coeff;
    fn d(&self, m: i64, w: &WeightVectorOf<Self::Coeff>) -> Result<WeightVectorOf<Self::Coeff>>;
    fn describe(&self) -> String;

    fn check_member(&self, w: &WeightVectorOf<Self::Coeff>) -> Result<()> {
        for (_, v) in w.components() {
            self.coeff().check_member(v)?;
        }
        Ok(())
    }
}

/// `N(M, α)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleInstance<M> {
    pub coeff: M,
    pub alpha: Rational,
}

/// `N(M, β)`: the action of `N(M, 0)` twisted by a Laurent polynomial `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedInstance<M> {
    pub coeff: M,
    pub beta: LaurentPoly,
}

/// `m^{i+1} / (i+1)!` for `i = 0..=r`.
pub(crate) fn action_coefficients(m: i64, r: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(r + 1);
    let mut pow = int(m);
    for i in 0..=r {
        out.push(&pow / Rational::from_integer(factorial(i as u64 + 1)));
        pow *= int(m);
    }
    out
}

impl<M: CoefficientModule> ModuleInstance<M> {
    pub fn new(coeff: M, alpha: Rational) -> Self {
        Self { coeff, alpha }
    }

    pub fn rank(&self) -> usize {
        self.coeff.rank()
    }
}

impl<M: CoefficientModule> VirasoroAction for ModuleInstance<M> {
    type Coeff = M;

    fn coeff(&self) -> &M {
        &self.coeff
    }

    fn d(&self, m: i64, w: &WeightVectorOf<M>) -> Result<WeightVectorOf<M>> {
        d_act(self, m, w)
    }

    fn describe(&self) -> String {
        format!("N({}, alpha={})", self.coeff.family(), self.alpha)
    }
}

impl<M: CoefficientModule> TwistedInstance<M> {
    pub fn new(coeff: M, beta: LaurentPoly) -> Self {
        Self { coeff, beta }
    }

    pub fn rank(&self) -> usize {
        self.coeff.rank()
    }
}

impl<M: CoefficientModule + Clone> VirasoroAction for TwistedInstance<M> {
    type Coeff = M;

    fn coeff(&self) -> &M {
        &self.coeff
    }

    fn d(&self, n: i64, w: &WeightVectorOf<M>) -> Result<WeightVectorOf<M>> {
        twisted_d_act(self, n, w)
    }

    fn describe(&self) -> String {
        format!("N({}, beta={})", self.coeff.family(), self.beta)
    }
}

/// `d_m` on `N(M, α)`.
pub fn d_act<M: CoefficientModule>(
    inst: &ModuleInstance<M>,
    m: i64,
    w: &WeightVectorOf<M>,
) -> Result<WeightVectorOf<M>> {
    d_act_with(&inst.coeff, &inst.alpha, m, w)
}

pub(crate) fn d_act_with<M: CoefficientModule>(
    coeff: &M,
    alpha: &Rational,
    m: i64,
    w: &WeightVectorOf<M>,
) -> Result<WeightVectorOf<M>> {
    let r = coeff.rank();
    let coeffs = if m == 0 {
        Vec::new()
    } else {
        action_coefficients(m, r)
    };
    let mut out = WeightVector::zero();
    for (n, v) in w.components() {
        coeff.check_member(v)?;
        let mut acc = v.scale(&(alpha + int(n)));
        for (i, c) in coeffs.iter().enumerate() {
            acc = acc.add_vector(&coeff.act(i, v)?.scale(c));
        }
        out.add_component(n + m, &acc);
    }
    Ok(out)
}

/// The central element acts as zero.
pub fn c_act<V: ModuleVector>(_w: &WeightVector<V>) -> WeightVector<V> {
    WeightVector::zero()
}

/// `t^k (v ⊗ tⁿ) = v ⊗ t^{n+k}`.
pub fn t_act<V: ModuleVector>(k: i64, w: &WeightVector<V>) -> WeightVector<V> {
    w.shift(k)
}

/// `d_n ∘ w = d_n w + β tⁿ w`, with `d_n` taken at `α = 0`.
pub fn twisted_d_act<M: CoefficientModule>(
    inst: &TwistedInstance<M>,
    n: i64,
    w: &WeightVectorOf<M>,
) -> Result<WeightVectorOf<M>> {
    let mut out = d_act_with(&inst.coeff, &Rational::zero(), n, w)?;
    for (k, b) in inst.beta.terms() {
        out = out.add(&t_act(n + k, w).scale(b));
    }
    Ok(out)
}

/// `ω^{(s)}_{l,m} = Σ_{i=0}^{s} C(s,i) (−1)^{s−i} d_{l−m−i} d_{m+i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaSpec {
    pub l: i64,
    pub m: i64,
    pub s: u32,
}

impl OmegaSpec {
    pub fn new(l: i64, m: i64, s: u32) -> Self {
        Self { l, m, s }
    }

    /// `(coefficient, outer index, inner index)` for each of the `s + 1` terms.
    pub fn expansion(&self) -> Vec<(Rational, i64, i64)> {
        (0..=self.s)
            .map(|i| {
                let sign = if (self.s - i).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                let c = binomial(self.s as u64, i as u64) * int(sign);
                let i = i as i64;
                (c, self.l - self.m - i, self.m + i)
            })
            .collect()
    }
}

/// `ω^{(s)}_{l,m} w`, by literal composition of the given action.
pub fn omega_apply<A: VirasoroAction>(
    spec: OmegaSpec,
    w: &WeightVectorOf<A::Coeff>,
    action: &A,
) -> Result<WeightVectorOf<A::Coeff>> {
    let mut out = WeightVector::zero();
    for (c, outer, inner) in spec.expansion() {
        let term = action.d(outer, &action.d(inner, w)?)?;
        out = out.add(&term.scale(&c));
    }
    Ok(out)
}

/// `ω^{(s)}_{l,m} w` for every `s = 0..=s_max` at once: the composites
/// `d_{l−j} d_j w` for `j = m..=m+s_max` are computed once and then
/// differenced in `j`.
pub fn omega_ladder<A: VirasoroAction>(
    l: i64,
    m: i64,
    s_max: u32,
    w: &WeightVectorOf<A::Coeff>,
    action: &A,
) -> Result<Vec<WeightVectorOf<A::Coeff>>> {
    let mut row: Vec<WeightVectorOf<A::Coeff>> = (0..=s_max as i64)
        .map(|i| action.d(l - m - i, &action.d(m + i, w)?))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(s_max as usize + 1);
    out.push(row[0].clone());
    for _ in 0..s_max {
        row = row.windows(2).map(|p| p[1].sub(&p[0])).collect();
        out.push(row[0].clone());
    }
    Ok(out)
}

/// `Σ_i d̄_r² v_i ⊗ t^{i+l}`.
pub fn dr_squared_shift<M: CoefficientModule>(
    inst: &ModuleInstance<M>,
    l: i64,
    w: &WeightVectorOf<M>,
) -> Result<WeightVectorOf<M>> {
    let r = inst.coeff.rank();
    let mut out = WeightVector::zero();
    for (n, v) in w.components() {
        inst.coeff.check_member(v)?;
        let sq = inst.coeff.act(r, &inst.coeff.act(r, v)?)?;
        out.add_component(n + l, &sq);
    }
    Ok(out)
}
