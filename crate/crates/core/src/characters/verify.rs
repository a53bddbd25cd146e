use super::{decompose, multiply_g, GCharacter, TCharacter};
use crate::counting::{
    count_points, ehrhart_fit, fit_quasi_polynomial, polytope_dim, required_samples, sign_pow,
    toric_rr, vertex_denominator_lcm, QuasiPolynomial, Region,
};
use crate::error::{Error, Result};
use crate::lattice::{q, RationalVector};
use crate::polyhedra::{catalog, FaceLattice, LabelledPolyhedron};
use crate::roots::{RootSystem, RootType};

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub m: i64,
    pub character: TCharacter,
    pub support_in_polytope: bool,
    pub multiplicity_free: bool,
    pub count_matches: bool,
    /// Multiplicity of the zero weight equals `1` exactly when `0 ∈ mP`.
    pub zero_weight_ok: bool,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.support_in_polytope && self.multiplicity_free && self.count_matches && self.zero_weight_ok
    }
}

/// Every weight of the `m`-th toric character lies in `mP` with multiplicity one.
pub fn verify_decomposition_toric(p: &LabelledPolyhedron, m: i64) -> Result<DecompositionReport> {
    if m < 0 {
        return Err(Error::Invalid(format!("power {m} is negative")));
    }
    let character = toric_rr(p, m)?;
    let mp = p.dilate(&q(m));
    let support_in_polytope = character.iter().all(|(e, _)| mp.contains(&RationalVector::from_ints(e)));
    let multiplicity_free = character.iter().all(|(_, c)| *c == 1);
    let count_matches = character.len() as u64 == count_points(p, m, Region::Closed)?;
    let zero = vec![0; p.dim()];
    let zero_in = mp.contains(&RationalVector::zeros(p.dim()));
    let zero_weight_ok = character.coeff(&zero) == i64::from(zero_in);
    Ok(DecompositionReport { m, character, support_in_polytope, multiplicity_free, count_matches, zero_weight_ok })
}

#[derive(Clone, Debug)]
pub struct DualReport {
    pub m: i64,
    pub character: TCharacter,
    /// `(−1)^{dim P}`.
    pub sign: i64,
    pub support_in_negative_interior: bool,
    pub coefficients_ok: bool,
    pub count_matches: bool,
}

impl DualReport {
    pub fn passed(&self) -> bool {
        self.support_in_negative_interior && self.coefficients_ok && self.count_matches
    }
}

/// The character of the `−m`-th power is supported on `−int(mP)` with every
/// coefficient `(−1)^{dim P}`.
pub fn verify_dual_toric(p: &LabelledPolyhedron, m: i64) -> Result<DualReport> {
    if m < 1 {
        return Err(Error::Invalid(format!("power {m} must be positive")));
    }
    let character = toric_rr(p, -m)?;
    let sign = sign_pow(polytope_dim(p)?);
    let mp = p.dilate(&q(m));
    let lattice = FaceLattice::new(&mp)?;
    let top = lattice.top().ok_or(Error::EmptyPolyhedron)?;
    let support_in_negative_interior = character.iter().all(|(e, _)| {
        let x = -&RationalVector::from_ints(e);
        lattice.face_containing(&x) == Some(top)
    });
    let coefficients_ok = character.iter().all(|(_, c)| *c == sign);
    let count_matches = character.len() as u64 == count_points(p, m, Region::Interior)?;
    Ok(DualReport { m, character, sign, support_in_negative_interior, coefficients_ok, count_matches })
}

#[derive(Clone, Debug)]
pub struct ProductOrbitsReport {
    pub lambda: i64,
    pub nu: i64,
    pub product: GCharacter,
    pub multiplicity_free: bool,
    pub support_in_polytope: bool,
    /// Support is exactly `{λ+ν, λ+ν−2, …, |λ−ν|}`.
    pub support_exact: bool,
}

impl ProductOrbitsReport {
    pub fn passed(&self) -> bool {
        self.multiplicity_free && self.support_in_polytope && self.support_exact
    }
}

/// Tensor product `χ_λ · χ_ν` in type A1 against the moment interval
/// `[|λ − ν|, λ + ν]` of the product of the two orbits.
pub fn verify_product_orbits(lambda: i64, nu: i64) -> Result<ProductOrbitsReport> {
    if lambda < 0 || nu < 0 {
        return Err(Error::NotDominant(format!("{lambda}, {nu}")));
    }
    let a1 = RootSystem::new(RootType::A1);
    let product = multiply_g(&a1, &GCharacter::irreducible(vec![lambda])?, &GCharacter::irreducible(vec![nu])?)?;
    let (lo, hi) = ((lambda - nu).abs(), lambda + nu);
    let multiplicity_free = product.iter().all(|(_, c)| *c == 0 || *c == 1);
    let support: Vec<i64> = product.iter().map(|(mu, _)| mu[0]).collect();
    let support_in_polytope = support.iter().all(|&x| lo <= x && x <= hi);
    let expected: Vec<i64> = (lo..=hi).filter(|x| (hi - x) % 2 == 0).collect();
    let support_exact = support == expected;
    Ok(ProductOrbitsReport { lambda, nu, product, multiplicity_free, support_in_polytope, support_exact })
}

#[derive(Clone, Debug)]
pub struct VergneReport {
    /// Character of the inverse bundle on the toric segment `[0, 2]`.
    pub toric_character: TCharacter,
    pub toric_total: i64,
    /// The same character transported to the weight lattice of A1.
    pub transported: TCharacter,
    pub from_toric: GCharacter,
    /// Induction of `−2ρ`.
    pub from_induction: GCharacter,
    /// `(−1)^{dim} χ` at `w ⊙ (−λ) = λ* − 2(ρ − ρ_σ*)`.
    pub from_reflection: GCharacter,
}

impl VergneReport {
    pub fn expected() -> GCharacter {
        let mut g = GCharacter::new();
        g.add_term(vec![0], -1).expect("zero is dominant");
        g
    }

    pub fn passed(&self) -> bool {
        let e = Self::expected();
        self.toric_total == -1 && self.from_toric == e && self.from_induction == e && self.from_reflection == e
    }
}

/// The coadjoint orbit of `2ρ` in type A1 with the inverse of its
/// prequantum bundle, computed torically and from the group side.
pub fn verify_vergne() -> Result<VergneReport> {
    let a1 = RootSystem::new(RootType::A1);
    let seg = catalog::interval(q(0), q(2));
    let toric_character = toric_rr(&seg, -1)?;
    let toric_total = toric_character.total();
    // the orbit maps [0, 2] onto [−2, 2] by x ↦ 2x − 2; the inverse bundle
    // carries the negated weights
    let transported: TCharacter = toric_character.iter().map(|(e, c)| (vec![2 * e[0] + 2], *c)).collect();
    let from_toric = decompose(&a1, &transported)?;

    let lambda = vec![2];
    let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
    let mut from_induction = GCharacter::new();
    if let Some((s, mu)) = a1.induce(&neg) {
        from_induction.add_term(mu, s)?;
    }
    let mut from_reflection = GCharacter::new();
    if let Some((_, mu)) = a1.reflect(&lambda)? {
        from_reflection.add_term(mu, sign_pow(a1.positive_roots.len()))?;
    }
    Ok(VergneReport { toric_character, toric_total, transported, from_toric, from_induction, from_reflection })
}

#[derive(Clone, Debug)]
pub struct QuantumDhReport {
    pub quasi_polynomial: QuasiPolynomial,
    pub dim: usize,
    /// Least common multiple of vertex denominators.
    pub l: i64,
    /// Fit of `m ↦ [z^{mμ}]` of the `m`-th toric character.
    pub ray: QuasiPolynomial,
    pub reproduces_counts: bool,
}

impl QuantumDhReport {
    pub fn degree_ok(&self) -> bool {
        self.quasi_polynomial.degree <= self.dim && self.ray.degree <= self.dim
    }

    pub fn period_ok(&self) -> bool {
        self.l % self.quasi_polynomial.period as i64 == 0 && self.l % self.ray.period as i64 == 0
    }

    pub fn passed(&self) -> bool {
        self.degree_ok() && self.period_ok() && self.reproduces_counts
    }
}

/// Quasi-polynomiality of the dilation count and of the multiplicity along
/// the ray through a lattice point `μ ∈ P`.
pub fn quantum_dh_check(p: &LabelledPolyhedron, mu: &[i64], m_max: i64) -> Result<QuantumDhReport> {
    if mu.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: mu.len() });
    }
    if !p.contains(&RationalVector::from_ints(mu)) {
        return Err(Error::Invalid("the ray point lies outside the polytope".into()));
    }
    let dim = polytope_dim(p)?;
    let l = vertex_denominator_lcm(p)?;
    let samples = required_samples(dim, l).max(m_max);
    let quasi_polynomial = ehrhart_fit(p, samples)?;
    let reproduces_counts = (0..=m_max).try_fold(true, |ok, m| {
        Ok::<_, Error>(ok && quasi_polynomial.eval(m) == q(count_points(p, m, Region::Closed)? as i64))
    })?;
    let ray_values: Vec<i64> = (0..=samples)
        .map(|m| {
            let e: Vec<i64> = mu.iter().map(|x| x * m).collect();
            Ok(toric_rr(p, m)?.coeff(&e))
        })
        .collect::<Result<_>>()?;
    let ray = fit_quasi_polynomial(&ray_values, dim, l)?;
    Ok(QuantumDhReport { quasi_polynomial, dim, l, ray, reproduces_counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_examples() {
        let r = verify_decomposition_toric(&catalog::unit_square(), 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.character.len(), 16);
        assert!(verify_decomposition_toric(&catalog::egyptian_pyramid(), 2).unwrap().passed());
        let r = verify_decomposition_toric(&catalog::half_interval(), 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.character, TCharacter::monomial(vec![0], 1));
    }

    #[test]
    fn dual_examples() {
        let r = verify_dual_toric(&catalog::interval(q(0), q(2)), 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.character, TCharacter::monomial(vec![-1], -1));
        let r = verify_dual_toric(&catalog::unit_square(), 1).unwrap();
        assert!(r.passed() && r.character.is_zero());
        let r = verify_dual_toric(&catalog::unit_square(), 2).unwrap();
        assert_eq!(r.character, TCharacter::monomial(vec![-1, -1], 1));
    }

    #[test]
    fn product_orbit_examples() {
        let r = verify_product_orbits(1, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.product.to_string(), "chi\t1\t0\nchi\t1\t2\n");
        assert_eq!(verify_product_orbits(3, 0).unwrap().product, GCharacter::irreducible(vec![3]).unwrap());
        let r = verify_product_orbits(2, 1).unwrap();
        assert_eq!(r.product.to_string(), "chi\t1\t1\nchi\t1\t3\n");
    }

    #[test]
    fn vergne() {
        let r = verify_vergne().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.transported, TCharacter::monomial(vec![0], -1));
    }

    #[test]
    fn quantum_dh_examples() {
        let r = quantum_dh_check(&catalog::half_interval(), &[0], 12).unwrap();
        assert!(r.passed());
        assert_eq!(r.quasi_polynomial.period, 2);
        let r = quantum_dh_check(&catalog::unit_square(), &[1, 1], 6).unwrap();
        assert_eq!((r.quasi_polynomial.degree, r.quasi_polynomial.period), (2, 1));
        let r = quantum_dh_check(&catalog::weighted_triangle(), &[0, 0], 12).unwrap();
        assert!(r.passed());
        assert_eq!(r.quasi_polynomial.degree, 2);
        assert!(quantum_dh_check(&catalog::half_interval(), &[1], 4).is_err());
    }
}
