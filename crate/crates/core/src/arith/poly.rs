//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so iteration order, printing and leading-term
//! selection are all deterministic. No zero coefficient is ever stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{ArithError, Rational, SymbolId, SymbolTable};

/// Exponent vector with fixed arity equal to the symbol-table size.
/// Ordered by total degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; `None` when some exponent would go negative.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over [`Rational`] in the symbols of one
/// [`SymbolTable`].
#[derive(Debug, Clone)]
pub struct Poly {
    table: Arc<SymbolTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(table: &Arc<SymbolTable>) -> Poly {
        Poly {
            table: Arc::clone(table),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &Arc<SymbolTable>, value: Rational) -> Poly {
        let mut p = Poly::zero(table);
        if !value.is_zero() {
            p.terms.insert(Monomial(vec![0; table.len()]), value);
        }
        p
    }

    pub fn int(table: &Arc<SymbolTable>, value: i64) -> Poly {
        Poly::constant(table, Rational::from_integer(value.into()))
    }

    pub fn symbol(table: &Arc<SymbolTable>, id: SymbolId) -> Poly {
        Poly::symbol_pow(table, id, 1)
    }

    pub fn symbol_pow(table: &Arc<SymbolTable>, id: SymbolId, exp: u32) -> Poly {
        let mut exps = vec![0; table.len()];
        exps[id.index()] = exp;
        let mut p = Poly::zero(table);
        if exp == 0 {
            return Poly::constant(table, Rational::one());
        }
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value when the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: SymbolId) -> u32 {
        self.terms.keys().map(|m| m.0[s.index()]).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn same_table(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || *self.table == *other.table
    }

    fn check_table(&self, other: &Poly) -> Result<(), ArithError> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(ArithError::SymbolTableMismatch)
        }
    }

    fn insert(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_table(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert(&mut terms, m.clone(), c.clone());
        }
        Ok(Poly {
            table: Arc::clone(&self.table),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.checked_add(&other.negated())
    }

    pub fn negated(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Poly {
            table: Arc::clone(&self.table),
            terms,
        }
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero(&self.table);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        Poly {
            table: Arc::clone(&self.table),
            terms,
        }
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_table(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Ok(Poly {
            table: Arc::clone(&self.table),
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::constant(&self.table, Rational::one());
        for _ in 0..exp {
            out = out.checked_mul(self).expect("same table");
        }
        out
    }

    /// Exact division: returns `r` with `r * divisor == self`.
    ///
    /// Repeated leading-term reduction under the graded-lex order; the first
    /// step at which the leading monomial fails to divide raises
    /// [`ArithError::NotDivisible`] — callers treat a remainder as a
    /// structural failure, so no partial quotient is returned.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        self.check_table(divisor)?;
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&(Rational::one() / c)));
        }
        let mut rem = self.clone();
        let mut quo = Poly::zero(&self.table);
        let (dm, dc) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        while !rem.is_zero() {
            let (rm, rc) = rem
                .terms
                .iter()
                .next_back()
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            let Some(tm) = rm.div(&dm) else {
                return Err(ArithError::NotDivisible {
                    context: format!(
                        "leading term of remainder `{rem}` not reducible by `{divisor}`"
                    ),
                });
            };
            let tc = rc / &dc;
            let mut t = Poly::zero(&self.table);
            t.terms.insert(tm, tc);
            rem = rem.checked_sub(&t.checked_mul(divisor)?)?;
            quo = quo.checked_add(&t)?;
        }
        Ok(quo)
    }

    /// Replaces every occurrence of symbol `s` by the polynomial `value`.
    pub fn subst(&self, s: SymbolId, value: &Poly) -> Result<Poly, ArithError> {
        self.check_table(value)?;
        let idx = s.index();
        let mut powers: HashMap<u32, Poly> = HashMap::new();
        let mut out = Poly::zero(&self.table);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut stripped = m.clone();
            stripped.0[idx] = 0;
            let mut base = Poly::zero(&self.table);
            base.terms.insert(stripped, c.clone());
            if e == 0 {
                out = out.checked_add(&base)?;
            } else {
                let vp = powers.entry(e).or_insert_with(|| value.pow(e)).clone();
                out = out.checked_add(&base.checked_mul(&vp)?)?;
            }
        }
        Ok(out)
    }

    /// Exact evaluation. The assignment must cover every symbol that occurs
    /// with a nonzero exponent.
    pub fn eval(&self, assignment: &HashMap<SymbolId, Rational>) -> Result<Rational, ArithError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let id = SymbolId(i as u32);
                let v = assignment
                    .get(&id)
                    .ok_or_else(|| ArithError::MissingSymbol {
                        name: self.table.name(id).to_string(),
                    })?;
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Groups terms by the power of `s`: returns `(exponent, coefficient)`
    /// pairs with the coefficient polynomials free of `s`, ascending in the
    /// exponent. Zero coefficients are omitted.
    pub fn collect_by(&self, s: SymbolId) -> Vec<(u32, Poly)> {
        let idx = s.index();
        let mut buckets: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut stripped = m.clone();
            stripped.0[idx] = 0;
            let slot = buckets.entry(e).or_insert_with(|| Poly::zero(&self.table));
            Self::insert(&mut slot.terms, stripped, c.clone());
        }
        buckets.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }

    /// Re-embeds the polynomial into another table, matching symbols by name.
    /// Every symbol that actually occurs must exist in the target.
    pub fn reembed(&self, target: &Arc<SymbolTable>) -> Result<Poly, ArithError> {
        let mut mapping: Vec<Option<usize>> = Vec::with_capacity(self.table.len());
        for id in self.table.symbols() {
            mapping.push(target.id(self.table.name(id)).map(SymbolId::index));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match mapping[i] {
                    Some(j) => exps[j] += e,
                    None => {
                        return Err(ArithError::UnknownSymbol {
                            name: self.table.name(SymbolId(i as u32)).to_string(),
                        })
                    }
                }
            }
            Self::insert(&mut terms, Monomial(exps), c.clone());
        }
        Ok(Poly {
            table: Arc::clone(target),
            terms,
        })
    }
}

// Operator forms assume both operands share a table and panic otherwise;
// use the checked_* methods when the tables are not pinned by construction.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("same symbol table")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("same symbol table")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("same symbol table")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.negated()
    }
}

/// Terms in ascending graded-lex order, explicit signs, `^` for powers:
/// `-c^2 - c^3`, `2*c - a1`, `1/2*a1*c^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut vars = String::new();
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(self.table.name(SymbolId(j as u32)));
                if e > 1 {
                    vars.push('^');
                    vars.push_str(&e.to_string());
                }
            }
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{abs}*{vars}")?;
            }
        }
        Ok(())
    }
}
