//! Virtual characters of the torus and of the group, and checks of the
//! multiplicity formulas on toric and coadjoint-orbit inputs.

mod fixed_point;
mod verify;

pub use fixed_point::{toric_fixed_point_data, vertex_multiplicity, weight_polytope, Bundle, FixedPointDatum, WeightPolytope};
pub use verify::{
    quantum_dh_check, verify_decomposition_toric, verify_dual_toric, verify_product_orbits,
    verify_vergne, DecompositionReport, DualReport, ProductOrbitsReport, QuantumDhReport,
    VergneReport,
};

use std::collections::BTreeMap;
use std::fmt;

use crate::counting::LaurentCharacter;
use crate::error::{Error, Result};
use crate::roots::{format_weight, RootSystem, Weight};

/// A torus character: weight ↦ multiplicity.
pub type TCharacter = LaurentCharacter;

/// A virtual group character `Σ N(μ) χ_μ` over dominant weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl GCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn irreducible(mu: Weight) -> Result<Self> {
        let mut g = Self::new();
        g.add_term(mu, 1)?;
        Ok(g)
    }

    pub fn add_term(&mut self, mu: Weight, coeff: i64) -> Result<()> {
        if !RootSystem::is_dominant(&mu) {
            return Err(Error::NotDominant(format_weight(&mu)));
        }
        let c = self.terms.entry(mu.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&mu);
        }
        Ok(())
    }

    pub fn coeff(&self, mu: &[i64]) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
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
}

/// One term per line: `chi\t<coeff>\t<e1> <e2> ...`.
impl fmt::Display for GCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, c) in &self.terms {
            let e: Vec<String> = mu.iter().map(ToString::to_string).collect();
            writeln!(f, "chi\t{c}\t{}", e.join(" "))?;
        }
        Ok(())
    }
}

/// Alternating sum `Σ_w (−1)^{l(w)} z^{w μ}`.
fn alternant(r: &RootSystem, mu: &[i64]) -> LaurentCharacter {
    r.elements.iter().map(|w| (w.apply(mu), w.sign())).collect()
}

/// Exact division in the Laurent ring, lexicographic term order.
fn divide(num: &LaurentCharacter, den: &LaurentCharacter) -> Result<LaurentCharacter> {
    let (lead_e, lead_c) = den.leading().ok_or_else(|| Error::Invalid("division by zero".into()))?;
    let (lead_e, lead_c) = (lead_e.clone(), *lead_c);
    let mut rem = num.clone();
    let mut quotient = LaurentCharacter::new();
    let mut steps = 0usize;
    while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), *c)) {
        if c % lead_c != 0 || steps > 1_000_000 {
            return Err(Error::Invalid("inexact character division".into()));
        }
        let qe: Vec<i64> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
        let term = LaurentCharacter::monomial(qe.clone(), c / lead_c);
        rem = rem.sub(&term.multiply(den));
        quotient.add_term(qe, c / lead_c);
        steps += 1;
    }
    Ok(quotient)
}

/// `χ_μ` as a weight-multiplicity map, by dividing alternants.
pub fn weyl_character(r: &RootSystem, mu: &[i64]) -> Result<TCharacter> {
    r.check_weight(mu)?;
    if !RootSystem::is_dominant(mu) {
        return Err(Error::NotDominant(format_weight(mu)));
    }
    let shifted: Weight = mu.iter().map(|x| x + 1).collect();
    let chi = divide(&alternant(r, &shifted), &alternant(r, &r.rho()))?;
    assert_eq!(
        crate::lattice::q(chi.total()),
        r.weyl_dimension(mu),
        "character dimension disagrees with the dimension formula"
    );
    Ok(chi)
}

/// `Σ c_μ Ind(ζ_μ)`.
pub fn decompose(r: &RootSystem, chi: &TCharacter) -> Result<GCharacter> {
    let mut g = GCharacter::new();
    for (mu, c) in chi.iter() {
        r.check_weight(mu)?;
        if let Some((sign, nu)) = r.induce(mu) {
            g.add_term(nu, sign * c)?;
        }
    }
    Ok(g)
}

/// `Σ N(μ) χ_μ` as a torus character.
pub fn expand(r: &RootSystem, g: &GCharacter) -> Result<TCharacter> {
    let mut out = TCharacter::new();
    for (mu, c) in g.iter() {
        out = out.add(&weyl_character(r, mu)?.scale(*c));
    }
    Ok(out)
}

pub fn multiply(a: &TCharacter, b: &TCharacter) -> TCharacter {
    a.multiply(b)
}

/// Tensor product of group characters.
pub fn multiply_g(r: &RootSystem, a: &GCharacter, b: &GCharacter) -> Result<GCharacter> {
    decompose(r, &expand(r, a)?.multiply(&expand(r, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootType;

    fn t(terms: &[(&[i64], i64)]) -> TCharacter {
        terms.iter().map(|(e, c)| (e.to_vec(), *c)).collect()
    }

    #[test]
    fn a1_spin_one() {
        let a1 = RootSystem::new(RootType::A1);
        assert_eq!(weyl_character(&a1, &[2]).unwrap(), t(&[(&[2], 1), (&[0], 1), (&[-2], 1)]));
        assert_eq!(weyl_character(&a1, &[0]).unwrap(), t(&[(&[0], 1)]));
    }

    #[test]
    fn a2_standard() {
        let a2 = RootSystem::new(RootType::A2);
        let chi = weyl_character(&a2, &[1, 0]).unwrap();
        assert_eq!(chi.len(), 3);
        assert!(chi.iter().all(|(_, c)| *c == 1));
        assert!(matches!(weyl_character(&a2, &[-1, 0]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn decompose_examples() {
        let a1 = RootSystem::new(RootType::A1);
        let g = decompose(&a1, &t(&[(&[1], 1), (&[0], 1), (&[-1], 1)])).unwrap();
        assert_eq!(g.to_string(), "chi\t1\t0\nchi\t1\t1\n");
        let chi3 = weyl_character(&a1, &[3]).unwrap();
        assert_eq!(decompose(&a1, &chi3).unwrap(), GCharacter::irreducible(vec![3]).unwrap());
        let a2 = RootSystem::new(RootType::A2);
        assert!(decompose(&a2, &t(&[(&[-1, -1], 1)])).unwrap().is_zero());
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = RootSystem::new(RootType::A1);
        let one = GCharacter::irreducible(vec![1]).unwrap();
        let prod = multiply_g(&a1, &one, &one).unwrap();
        assert_eq!(prod.to_string(), "chi\t1\t0\nchi\t1\t2\n");
        let a2 = RootSystem::new(RootType::A2);
        let p = multiply_g(
            &a2,
            &GCharacter::irreducible(vec![1, 0]).unwrap(),
            &GCharacter::irreducible(vec![0, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(p.coeff(&[1, 1]), 1);
        assert_eq!(p.coeff(&[0, 0]), 1);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn unit_for_product() {
        let a2 = RootSystem::new(RootType::A2);
        let chi = weyl_character(&a2, &[2, 1]).unwrap();
        assert_eq!(multiply(&chi, &t(&[(&[0, 0], 1)])), chi);
    }

    #[test]
    fn characters_are_weyl_invariant() {
        for ty in [RootType::A2, RootType::B2, RootType::G2] {
            let r = RootSystem::new(ty);
            let chi = weyl_character(&r, &[1, 1]).unwrap();
            for w in &r.elements {
                let moved: TCharacter = chi.iter().map(|(e, c)| (w.apply(e), *c)).collect();
                assert_eq!(moved, chi);
            }
        }
    }
}
