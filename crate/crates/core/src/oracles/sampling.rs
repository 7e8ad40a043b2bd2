use std::collections::BTreeSet;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{WeightVector, WeightVectorOf};
use crate::coeff::{
    AVector, CoefficientModule, Descriptor, GammaDescriptor, Monomial, OneDimDescriptor,
    QLambdaDescriptor, QVec,
};
use crate::kernel::{rat, Rational, UniPoly};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational `p/q`, `|p| ≤ 9`, `1 ≤ q ≤ 5`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Coefficient modules that can produce random nonzero vectors of bounded
/// filtration degree.
pub trait RandomVector: CoefficientModule {
    fn random_vector<R: Rng>(&self, rng: &mut R, degree: usize) -> Self::Vector;
}

impl RandomVector for OneDimDescriptor {
    fn random_vector<R: Rng>(&self, rng: &mut R, _degree: usize) -> Rational {
        random_nonzero_rational(rng)
    }
}

impl RandomVector for GammaDescriptor {
    fn random_vector<R: Rng>(&self, rng: &mut R, degree: usize) -> UniPoly {
        let deg = rng.gen_range(0..=degree);
        let mut cs: Vec<Rational> = (0..deg).map(|_| random_rational(rng)).collect();
        cs.push(random_nonzero_rational(rng));
        UniPoly::new(cs)
    }
}

impl RandomVector for QLambdaDescriptor {
    fn random_vector<R: Rng>(&self, rng: &mut R, degree: usize) -> QVec {
        let gens = self.complement();
        let nterms = rng.gen_range(1..=3);
        let mut monos = BTreeSet::new();
        for _ in 0..nterms {
            let len = rng.gen_range(0..=degree);
            let mut m: Vec<usize> = (0..len)
                .map(|_| gens[rng.gen_range(0..gens.len())])
                .collect();
            m.sort_unstable();
            monos.insert(Monomial(m));
        }
        let mut v = QVec::zero();
        for m in monos {
            v.add_term(m, random_nonzero_rational(rng));
        }
        v
    }
}

impl RandomVector for Descriptor {
    fn random_vector<R: Rng>(&self, rng: &mut R, degree: usize) -> AVector {
        match self {
            Descriptor::OneDim(d) => AVector::OneDim(d.random_vector(rng, degree)),
            Descriptor::Gamma(d) => AVector::Gamma(d.random_vector(rng, degree)),
            Descriptor::QLambda(d) => AVector::QLambda(d.random_vector(rng, degree)),
        }
    }
}

/// A random nonzero weight vector with one to three components in grades
/// `-3..=3`.
pub fn random_weight_vector<M: RandomVector, R: Rng>(
    coeff: &M,
    rng: &mut R,
    degree: usize,
) -> WeightVectorOf<M> {
    let ncomp = rng.gen_range(1..=3);
    let mut w = WeightVector::zero();
    for _ in 0..ncomp {
        let grade = rng.gen_range(-3..=3);
        if w.component(grade).is_none() {
            w.add_component(grade, &coeff.random_vector(rng, degree));
        }
    }
    w
}

/// How a suite draws its samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub samples: usize,
    pub seed: u64,
    /// `(l, m)` range `-lm_window..=lm_window`.
    pub lm_window: i64,
    pub degree: usize,
}

impl Default for SampleSpec {
    fn default() -> Self {
        Self {
            samples: 20,
            seed: 0,
            lm_window: 3,
            degree: 4,
        }
    }
}
