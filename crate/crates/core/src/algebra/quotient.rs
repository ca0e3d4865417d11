//! `Q[t]/(h)` for square-free `h`, with dynamic evaluation: inverting a
//! zero divisor splits the modulus into coprime factors instead of failing.

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Poly, Rational, Ring};

/// One split step: `parent = factor * cofactor`, and the branch followed `factor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitRecord {
    pub parent: Poly,
    pub cofactor: Poly,
}

/// A monic square-free modulus together with how it was reached from the
/// root modulus of a computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusBranch {
    modulus: Poly,
    lineage: Vec<SplitRecord>,
}

impl ModulusBranch {
    pub fn new(modulus: &Poly) -> Result<Self, AlgebraError> {
        if modulus.degree().unwrap_or(0) == 0 || !modulus.is_squarefree() {
            return Err(AlgebraError::BadModulus(modulus.to_string()));
        }
        Ok(ModulusBranch {
            modulus: modulus.monic(),
            lineage: Vec::new(),
        })
    }

    /// `Q[t]/(t)`, which is just `Q`.
    pub fn rationals() -> Self {
        ModulusBranch {
            modulus: Poly::x(),
            lineage: Vec::new(),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn lineage(&self) -> &[SplitRecord] {
        &self.lineage
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Child branch for a monic factor of the modulus.
    pub fn child(&self, factor: &Poly) -> ModulusBranch {
        let factor = factor.monic();
        let cofactor = self.modulus.exact_div(&factor);
        let mut lineage = self.lineage.clone();
        lineage.push(SplitRecord {
            parent: self.modulus.clone(),
            cofactor,
        });
        ModulusBranch {
            modulus: factor,
            lineage,
        }
    }

    /// True when `self` descends from (or equals) `ancestor`.
    pub fn refines(&self, ancestor: &ModulusBranch) -> bool {
        self.modulus.divides(&ancestor.modulus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inversion {
    Inverse(Poly),
    /// The element vanishes on the first modulus and is a unit on the second.
    Split(ModulusBranch, ModulusBranch),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    branch: Arc<ModulusBranch>,
}

impl QuotientRing {
    pub fn new(branch: ModulusBranch) -> Self {
        QuotientRing {
            branch: Arc::new(branch),
        }
    }

    pub fn branch(&self) -> &ModulusBranch {
        &self.branch
    }

    pub fn modulus(&self) -> &Poly {
        &self.branch.modulus
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        p.rem(&self.branch.modulus)
    }

    /// The residue class of `t`.
    pub fn generator(&self) -> Poly {
        self.reduce(&Poly::x())
    }

    /// Extended-Euclid inverse, or the split `(gcd, cofactor)` when the
    /// element is a zero divisor.
    pub fn invert(&self, e: &Poly) -> Result<Inversion, AlgebraError> {
        let e = self.reduce(e);
        if e.is_zero() {
            return Err(AlgebraError::ZeroElement);
        }
        let (g, s, _) = e.ext_gcd(&self.branch.modulus)?;
        if g.is_constant() {
            return Ok(Inversion::Inverse(self.reduce(&s)));
        }
        let cofactor = self.branch.modulus.exact_div(&g);
        Ok(Inversion::Split(self.branch.child(&g), self.branch.child(&cofactor)))
    }

    /// Inverse of an element known to be a unit (e.g. `t` when `gcd(h, t) = 1`).
    pub fn unit_inverse(&self, e: &Poly) -> Option<Poly> {
        match self.invert(e) {
            Ok(Inversion::Inverse(inv)) => Some(inv),
            _ => None,
        }
    }

    /// The same ring reduced to a child branch.
    pub fn restrict(&self, child: &ModulusBranch) -> QuotientRing {
        QuotientRing::new(child.clone())
    }
}

impl Ring for QuotientRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        self.reduce(&Poly::one())
    }
    fn from_rational(&self, c: &Rational) -> Poly {
        self.reduce(&Poly::constant(c.clone()))
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        self.reduce(&(a * b))
    }
    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
    fn is_zero(&self, a: &Poly) -> bool {
        self.reduce(a).coeffs().iter().all(Zero::is_zero)
    }
}
