use std::fmt;

use num::Zero;

use super::{
    CoefficientModule, GammaDescriptor, ModuleVector, Monomial, OneDimDescriptor,
    QLambdaDescriptor, QVec,
};
use crate::kernel::{format_coefficient, Rational, UniPoly};
use crate::{Error, Result};

/// Any of the concrete coefficient modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    OneDim(OneDimDescriptor),
    Gamma(GammaDescriptor),
    QLambda(QLambdaDescriptor),
}

/// A vector of whichever family the descriptor belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AVector {
    OneDim(Rational),
    Gamma(UniPoly),
    QLambda(QVec),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AKey {
    Unit,
    Power(usize),
    Mono(Monomial),
}

impl AVector {
    pub fn family(&self) -> &'static str {
        match self {
            AVector::OneDim(_) => "onedim",
            AVector::Gamma(_) => "gamma",
            AVector::QLambda(_) => "qlambda",
        }
    }
}

fn mismatch(a: &AVector, b: &AVector) -> ! {
    panic!(
        "mixing {} and {} vectors in one linear combination",
        a.family(),
        b.family()
    )
}

impl fmt::Display for AVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AVector::OneDim(c) if c.is_zero() => write!(f, "0"),
            AVector::OneDim(c) => write!(f, "{}·1", format_coefficient(c)),
            AVector::Gamma(p) => write!(f, "{p}"),
            AVector::QLambda(v) => write!(f, "{v}"),
        }
    }
}

impl ModuleVector for AVector {
    type Basis = AKey;

    fn is_zero_vector(&self) -> bool {
        match self {
            AVector::OneDim(c) => c.is_zero(),
            AVector::Gamma(f) => f.is_zero(),
            AVector::QLambda(v) => v.is_zero(),
        }
    }

    fn add_vector(&self, other: &Self) -> Self {
        match (self, other) {
            (AVector::OneDim(a), AVector::OneDim(b)) => AVector::OneDim(a + b),
            (AVector::Gamma(a), AVector::Gamma(b)) => AVector::Gamma(a + b),
            (AVector::QLambda(a), AVector::QLambda(b)) => AVector::QLambda(a.add_vector(b)),
            _ => mismatch(self, other),
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        match self {
            AVector::OneDim(a) => AVector::OneDim(a * c),
            AVector::Gamma(f) => AVector::Gamma(f.scale(c)),
            AVector::QLambda(v) => AVector::QLambda(v.scale(c)),
        }
    }

    fn terms(&self) -> Vec<(AKey, Rational)> {
        match self {
            AVector::OneDim(a) => a
                .terms()
                .into_iter()
                .map(|(_, c)| (AKey::Unit, c))
                .collect(),
            AVector::Gamma(f) => ModuleVector::terms(f)
                .into_iter()
                .map(|(k, c)| (AKey::Power(k), c))
                .collect(),
            AVector::QLambda(v) => v
                .terms()
                .into_iter()
                .map(|(m, c)| (AKey::Mono(m), c))
                .collect(),
        }
    }

    fn basis_degree(b: &AKey) -> usize {
        match b {
            AKey::Unit => 0,
            AKey::Power(k) => *k,
            AKey::Mono(m) => m.len(),
        }
    }
}

impl Descriptor {
    pub fn as_gamma(&self) -> Option<&GammaDescriptor> {
        match self {
            Descriptor::Gamma(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_qlambda(&self) -> Option<&QLambdaDescriptor> {
        match self {
            Descriptor::QLambda(q) => Some(q),
            _ => None,
        }
    }
}

impl From<OneDimDescriptor> for Descriptor {
    fn from(d: OneDimDescriptor) -> Self {
        Descriptor::OneDim(d)
    }
}

impl From<GammaDescriptor> for Descriptor {
    fn from(d: GammaDescriptor) -> Self {
        Descriptor::Gamma(d)
    }
}

impl From<QLambdaDescriptor> for Descriptor {
    fn from(d: QLambdaDescriptor) -> Self {
        Descriptor::QLambda(d)
    }
}

impl CoefficientModule for Descriptor {
    type Vector = AVector;

    fn rank(&self) -> usize {
        match self {
            Descriptor::OneDim(d) => d.rank(),
            Descriptor::Gamma(d) => d.rank(),
            Descriptor::QLambda(d) => d.rank(),
        }
    }

    fn family(&self) -> &'static str {
        match self {
            Descriptor::OneDim(d) => d.family(),
            Descriptor::Gamma(d) => d.family(),
            Descriptor::QLambda(d) => d.family(),
        }
    }

    fn zero(&self) -> AVector {
        match self {
            Descriptor::OneDim(d) => AVector::OneDim(d.zero()),
            Descriptor::Gamma(d) => AVector::Gamma(d.zero()),
            Descriptor::QLambda(d) => AVector::QLambda(d.zero()),
        }
    }

    fn unit(&self) -> AVector {
        match self {
            Descriptor::OneDim(d) => AVector::OneDim(d.unit()),
            Descriptor::Gamma(d) => AVector::Gamma(d.unit()),
            Descriptor::QLambda(d) => AVector::QLambda(d.unit()),
        }
    }

    fn filtration_dim(&self, degree: usize) -> usize {
        match self {
            Descriptor::OneDim(d) => d.filtration_dim(degree),
            Descriptor::Gamma(d) => d.filtration_dim(degree),
            Descriptor::QLambda(d) => d.filtration_dim(degree),
        }
    }

    fn act(&self, i: usize, v: &AVector) -> Result<AVector> {
        match (self, v) {
            (Descriptor::OneDim(d), AVector::OneDim(x)) => d.act(i, x).map(AVector::OneDim),
            (Descriptor::Gamma(d), AVector::Gamma(x)) => d.act(i, x).map(AVector::Gamma),
            (Descriptor::QLambda(d), AVector::QLambda(x)) => d.act(i, x).map(AVector::QLambda),
            _ => Err(Error::FamilyMismatch {
                expected: self.family(),
                found: v.family(),
            }),
        }
    }

    fn check_member(&self, v: &AVector) -> Result<()> {
        match (self, v) {
            (Descriptor::QLambda(d), AVector::QLambda(x)) => d.check_member(x),
            _ if self.family() == v.family() => Ok(()),
            _ => Err(Error::FamilyMismatch {
                expected: self.family(),
                found: v.family(),
            }),
        }
    }
}

/// A broken descriptor invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Γ needs λ₁ or λ₂ nonzero.
    GammaLambdasZero,
    /// Q_λ needs `r ≥ 3`.
    RankTooSmall(usize),
    /// An element of `S` outside `{1, …, r}`.
    SOutOfRange(usize),
    /// A λ given for an index not in `S`.
    LambdaOutsideS(usize),
    /// (I): `r ∈ S` and `λ_r ≠ 0`.
    ConditionI,
    /// (II): distinct `i, j ∈ S` with `i + j ∈ S` but `λ_{i+j} ≠ 0`.
    ConditionII { i: usize, j: usize },
    /// (III): `j ∉ S` but `r − j ∉ S`.
    ConditionIII { j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::GammaLambdasZero => write!(f, "gamma: lambda1 and lambda2 are both zero"),
            Violation::RankTooSmall(r) => write!(f, "qlambda: rank r = {r} must be at least 3"),
            Violation::SOutOfRange(i) => write!(f, "qlambda: S element {i} not in 1..=r"),
            Violation::LambdaOutsideS(i) => write!(f, "qlambda: lambda_{i} given but {i} not in S"),
            Violation::ConditionI => write!(f, "condition (I): r must lie in S with lambda_r != 0"),
            Violation::ConditionII { i, j } => write!(
                f,
                "condition (II): {i} + {j} = {} in S but lambda_{} != 0",
                i + j,
                i + j
            ),
            Violation::ConditionIII { j } => {
                write!(f, "condition (III): {j} not in S and r - {j} not in S")
            }
        }
    }
}

/// Every broken invariant of the descriptor; empty iff valid.
pub fn validate_descriptor(desc: &Descriptor) -> Vec<Violation> {
    let mut out = Vec::new();
    match desc {
        Descriptor::OneDim(_) => {}
        Descriptor::Gamma(g) => {
            if g.lambda1.is_zero() && g.lambda2.is_zero() {
                out.push(Violation::GammaLambdasZero);
            }
        }
        Descriptor::QLambda(q) => {
            let r = q.r;
            if r < 3 {
                out.push(Violation::RankTooSmall(r));
            }
            for &i in &q.s {
                if i == 0 || i > r {
                    out.push(Violation::SOutOfRange(i));
                }
            }
            for &i in q.lambda.keys() {
                if !q.s.contains(&i) {
                    out.push(Violation::LambdaOutsideS(i));
                }
            }
            if !q.s.contains(&r) || q.lambda(r).is_zero() {
                out.push(Violation::ConditionI);
            }
            for &i in &q.s {
                for &j in &q.s {
                    if i < j && q.s.contains(&(i + j)) && !q.lambda(i + j).is_zero() {
                        out.push(Violation::ConditionII { i, j });
                    }
                }
            }
            for j in 1..=r {
                if !q.s.contains(&j) && !q.s.contains(&(r - j)) {
                    out.push(Violation::ConditionIII { j });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    fn q(r: usize, s: &[usize], lambda: &[(usize, i64)]) -> Descriptor {
        QLambdaDescriptor::new(
            r,
            s.iter().copied(),
            lambda.iter().map(|&(i, c)| (i, int(c))),
        )
        .into()
    }

    #[test]
    fn known_valid_descriptors() {
        assert!(validate_descriptor(&q(5, &[2, 4, 5], &[(5, 1)])).is_empty());
        assert!(validate_descriptor(&q(8, &[3, 4, 6, 7, 8], &[(8, 1), (7, 0)])).is_empty());
        assert!(validate_descriptor(&q(3, &[2, 3], &[(3, 1)])).is_empty());
    }

    #[test]
    fn condition_violations() {
        assert_eq!(
            validate_descriptor(&q(5, &[2, 4, 5], &[(5, 0)])),
            vec![Violation::ConditionI]
        );
        assert_eq!(
            validate_descriptor(&q(8, &[3, 4, 6, 7, 8], &[(8, 1), (7, 2)])),
            vec![Violation::ConditionII { i: 3, j: 4 }]
        );
        // 1 ∉ S and 4 ∉ S
        assert!(validate_descriptor(&q(5, &[2, 3, 5], &[(5, 1)]))
            .contains(&Violation::ConditionIII { j: 1 }));
        let g = GammaDescriptor::new(int(0), int(0), int(0)).into();
        assert_eq!(validate_descriptor(&g), vec![Violation::GammaLambdasZero]);
    }

    #[test]
    fn family_mismatch_is_an_error() {
        let d: Descriptor = OneDimDescriptor::new(int(1)).into();
        let v = AVector::Gamma(UniPoly::one());
        assert!(matches!(d.act(0, &v), Err(Error::FamilyMismatch { .. })));
    }
}
