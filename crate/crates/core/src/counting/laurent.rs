use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// A finite Laurent polynomial `Σ c_μ z^μ` with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentCharacter {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: Vec<i64>, coeff: i64) -> Self {
        let mut c = Self::new();
        c.add_term(exponent, coeff);
        c
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, exponent: &[i64]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `z = 1`: the sum of the coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = Self::new();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Convolution of exponent maps.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(s, t)| s + t).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Largest exponent in lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<i64>, &i64)> {
        self.terms.iter().next_back()
    }
}

impl FromIterator<(Vec<i64>, i64)> for LaurentCharacter {
    fn from_iter<I: IntoIterator<Item = (Vec<i64>, i64)>>(iter: I) -> Self {
        let mut c = Self::new();
        for (e, x) in iter {
            c.add_term(e, x);
        }
        c
    }
}

/// One term per line: `<coeff>\t<e1> <e2> ...`, exponents ascending.
impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.terms {
            let exps: Vec<String> = e.iter().map(ToString::to_string).collect();
            writeln!(f, "{c}\t{}", exps.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut c = LaurentCharacter::monomial(vec![1], 2);
        c.add_term(vec![0], 1);
        c.add_term(vec![1], -2);
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(&[1]), 0);
        assert_eq!(c.total(), 1);
    }

    #[test]
    fn product_and_display() {
        let a: LaurentCharacter = [(vec![0], 1), (vec![1], 1)].into_iter().collect();
        let sq = a.multiply(&a);
        assert_eq!(sq.to_string(), "1\t0\n2\t1\n1\t2\n");
    }
}
