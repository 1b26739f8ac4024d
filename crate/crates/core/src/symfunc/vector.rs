use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;

/// A finite integer combination of Schur functions. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurVec<S: Scalar> {
    coeffs: BTreeMap<Partition, S>,
}

impl<S: Scalar> Default for SchurVec<S> {
    fn default() -> Self {
        SchurVec {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> SchurVec<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single basis element `s_λ`.
    pub fn basis(lambda: Partition) -> Self {
        let mut v = Self::new();
        v.add_term(lambda, S::one());
        v
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> S {
        self.coeffs.get(lambda).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &S)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Terms in listing order (dominance-descending, ties lexicographically descending).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &S)> {
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        terms
    }

    pub fn scaled(&self, k: &S) -> Self {
        let mut out = Self::new();
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }

    /// Convert the coefficient type.
    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SchurVec<T> {
        let mut out = SchurVec::new();
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// JSON object `{"4":1,"2,2":1}` in listing order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (l, c) in self.sorted_terms() {
            map.insert(l.to_string(), scalar_to_json(c));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Unknown(format!("expected a JSON object, got {value}")))?;
        let mut out = Self::new();
        for (k, v) in obj {
            let lambda: Partition = k.parse()?;
            out.add_term(lambda, scalar_from_json(v)?);
        }
        Ok(out)
    }
}

impl<S: Scalar> FromIterator<(Partition, S)> for SchurVec<S> {
    fn from_iter<I: IntoIterator<Item = (Partition, S)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (l, c) in iter {
            out.add_term(l, c);
        }
        out
    }
}

impl<S: Scalar> fmt::Display for SchurVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            write!(f, "s({l})")?;
        }
        Ok(())
    }
}

pub(crate) fn scalar_to_json<S: Scalar>(c: &S) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

pub(crate) fn scalar_from_json<S: Scalar>(v: &Value) -> Result<S> {
    let bad = || Error::Unknown(format!("not an integer: {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(S::from_int).ok_or_else(bad),
        Value::String(s) => S::from_str_radix(s, 10).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// A finite rational combination of power-sum functions `p_ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumVec<S: Scalar> {
    coeffs: BTreeMap<Partition, Ratio<S>>,
}

impl<S: Scalar> Default for PowerSumVec<S> {
    fn default() -> Self {
        PowerSumVec {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> PowerSumVec<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The constant `1 = p_∅`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(rho: Partition) -> Self {
        let mut v = Self::new();
        v.add_term(rho, Ratio::from_integer(S::one()));
        v
    }

    pub fn add_term(&mut self, rho: Partition, coeff: Ratio<S>) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(rho.clone())
            .or_insert_with(|| Ratio::from_integer(S::zero()));
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&rho);
        }
    }

    pub fn coefficient(&self, rho: &Partition) -> Ratio<S> {
        self.coeffs
            .get(rho)
            .cloned()
            .unwrap_or_else(|| Ratio::from_integer(S::zero()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Ratio<S>)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Ring product: `p_α · p_β = p_{α ∪ β}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a.union(b), x.clone() * y.clone());
            }
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.coeffs {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &Ratio<S>) -> Self {
        let mut out = Self::new();
        for (r, c) in &self.coeffs {
            out.add_term(r.clone(), c.clone() * k.clone());
        }
        out
    }
}
