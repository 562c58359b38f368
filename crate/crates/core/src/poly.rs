//! Sparse multivariate (Laurent) polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rational::{fmt_q, Q};

/// Exponent vector. Negative entries are allowed (Laurent variables).
pub type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    pub fn monomial(exps: Exponent, c: Q) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, exps: Exponent, c: Q) {
        assert_eq!(exps.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &MultiPoly, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Q) -> MultiPoly {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiply by a monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.is_constant() {
            Some(self.coeff(&vec![0; self.nvars]))
        } else {
            None
        }
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    /// Total degree of the highest term (ignores sign of exponents).
    pub fn total_degree(&self) -> i32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                if x.is_zero() && k < 0 {
                    return Err(Error::Precondition(
                        "Laurent polynomial evaluated at zero".into(),
                    ));
                }
                let base = if k < 0 { Q::one() / x } else { x.clone() };
                for _ in 0..k.unsigned_abs() {
                    term *= &base;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut factors = Vec::new();
            for (k, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(names[k].clone()),
                    _ => factors.push(format!("{}^{}", names[k], x)),
                }
            }
            let coeff = fmt_q(c);
            if factors.is_empty() {
                parts.push(coeff);
            } else if c.is_one() {
                parts.push(factors.join("*"));
            } else if (-c.clone()).is_one() {
                parts.push(format!("-{}", factors.join("*")));
            } else {
                parts.push(format!("{}*{}", coeff, factors.join("*")));
            }
        }
        parts.join(" + ")
    }

    fn default_names(&self) -> Vec<String> {
        (1..=self.nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&self.default_names()))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&self.default_names()))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Coefficient-exact span of a family of polynomials.
///
/// Every polynomial becomes a coefficient vector over the union of the
/// monomials that occur; the span is then an ordinary [`Subspace`].
pub struct PolySpan {
    monomials: BTreeMap<Exponent, usize>,
    space: Subspace,
}

impl PolySpan {
    pub fn new(polys: &[MultiPoly]) -> Self {
        let mut monomials = BTreeMap::new();
        for p in polys {
            for (e, _) in p.terms() {
                let n = monomials.len();
                monomials.entry(e.clone()).or_insert(n);
            }
        }
        let n = monomials.len();
        let vectors = polys.iter().map(|p| coefficients(p, &monomials, n)).collect();
        PolySpan {
            space: Subspace::span(n, vectors),
            monomials,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Whether `p` lies in the span. Monomials foreign to the span mean no.
    pub fn contains(&self, p: &MultiPoly) -> bool {
        if p.terms().any(|(e, _)| !self.monomials.contains_key(e)) {
            return false;
        }
        self.space
            .contains(&coefficients(p, &self.monomials, self.monomials.len()))
    }

    /// Echelon basis of the span, as polynomials.
    pub fn basis(&self, nvars: usize) -> Vec<MultiPoly> {
        let by_index: BTreeMap<usize, &Exponent> =
            self.monomials.iter().map(|(e, &i)| (i, e)).collect();
        self.space
            .basis()
            .iter()
            .map(|v| {
                let mut p = MultiPoly::zero(nvars);
                for (i, c) in v.iter().enumerate() {
                    p.add_term(by_index[&i].clone(), c.clone());
                }
                p
            })
            .collect()
    }
}

fn coefficients(p: &MultiPoly, index: &BTreeMap<Exponent, usize>, n: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for (e, c) in p.terms() {
        v[index[e]] = c.clone();
    }
    v
}

/// Rank of the linear span of `polys`.
pub fn span_dim(polys: &[MultiPoly]) -> usize {
    PolySpan::new(polys).dim()
}

/// Dimension of the kernel of `coeffs ↦ Σ coeffs_i polys_i`.
pub fn relation_dim(polys: &[MultiPoly]) -> usize {
    polys.len() - span_dim(polys)
}
