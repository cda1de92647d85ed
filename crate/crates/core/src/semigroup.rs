//! Numerical semigroups of multiplicity 2N arising from cyclic covers of
//! hyperelliptic curves: standard bases, gap vectors, feasible sets,
//! realizability predicates, witness verification, and weight statistics.

use thiserror::Error;

use crate::curve::HyperellipticCurve;
use crate::jacobian::{self, MumfordDivisor};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SemigroupError {
    #[error("g = {g} violates g >= (2N-1)*gamma = {bound}")]
    GenusTooSmall { g: i64, bound: i64 },
    #[error("d = ((2g-2) - N(2 gamma - 2)) / (N(N-1)) = {0} is not a positive integer")]
    InvalidDegree(String),
    #[error("a-vector {0:?} lies outside the feasible box")]
    InfeasibleAVector(Vec<i64>),
    #[error("standard basis violates closure: e_{i} + e_{j} < e_{k}")]
    NotClosed { i: usize, j: usize, k: usize },
    #[error("basis element e_{i} = {e} is not congruent to {i} mod {m}")]
    BadResidue { i: usize, e: i64, m: i64 },
    #[error("realizability dichotomy is only available for N = 3")]
    WrongN,
    #[error("curve genus {curve} does not match cover target genus {cover}")]
    CurveGenusMismatch { curve: usize, cover: usize },
    #[error("expected {expected} witness divisors, got {got}")]
    WrongWitnessCount { expected: usize, got: usize },
    #[error("N and gamma must be even and nonzero for the staircase family")]
    BadParity,
    #[error("t = {t} is below the staircase bound 2*gamma + 3 = {bound}")]
    TTooSmall { t: i64, bound: i64 },
}

/// Numerical data of a degree-N cyclic cover of a genus-gamma hyperelliptic
/// curve with reduced branch divisor and source genus g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverParams {
    pub n: usize,
    pub gamma: usize,
    pub g: i64,
    d: i64,
}

impl CoverParams {
    pub fn new(n: usize, gamma: usize, g: i64) -> Result<Self, SemigroupError> {
        assert!(n >= 2, "N must be at least 2");
        assert!(gamma >= 1, "gamma must be at least 1");
        let bound = (2 * n as i64 - 1) * gamma as i64;
        if g < bound {
            return Err(SemigroupError::GenusTooSmall { g, bound });
        }
        let num = (2 * g - 2) - (n as i64) * (2 * gamma as i64 - 2);
        let den = (n * (n - 1)) as i64;
        if num % den != 0 || num / den <= 0 {
            return Err(SemigroupError::InvalidDegree(format!("{num}/{den}")));
        }
        Ok(CoverParams {
            n,
            gamma,
            g,
            d: num / den,
        })
    }

    /// d_{g, gamma, N}, the degree of the line bundle underlying the cover.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// Genus from (N, gamma, d) via Riemann-Hurwitz; inverse of `d()`.
    pub fn from_degree(n: usize, gamma: usize, d: i64) -> Result<Self, SemigroupError> {
        let g = 1 + (n as i64) * (gamma as i64 - 1) + (n * (n - 1)) as i64 * d / 2;
        CoverParams::new(n, gamma, g)
    }
}

/// (a_1, ..., a_{N-1}); the semigroup indexed by it has
/// min(e_{N-j}, e_{2N-j}) = N a_j - j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AVector(pub Vec<i64>);

impl AVector {
    pub fn eps(&self, params: &CoverParams) -> Vec<i64> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &a)| a - (i as i64 + 1) * params.d())
            .collect()
    }
}

/// A numerical semigroup given by its standard basis modulo M: e_0 = M and
/// e_i the least element congruent to i. Membership: 0, and m >= e_{m mod M}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    modulus: i64,
    basis: Vec<i64>,
}

impl NumericalSemigroup {
    pub fn from_basis(basis: Vec<i64>) -> Result<Self, SemigroupError> {
        let m = basis[0];
        assert!(m >= 1 && basis.len() == m as usize, "basis must list e_0..e_{{M-1}}");
        for (i, &e) in basis.iter().enumerate() {
            let want = i as i64 % m;
            if e.rem_euclid(m) != want || e < 1 {
                return Err(SemigroupError::BadResidue { i, e, m });
            }
        }
        let s = NumericalSemigroup { modulus: m, basis };
        s.check_closure()?;
        Ok(s)
    }

    fn check_closure(&self) -> Result<(), SemigroupError> {
        let m = self.modulus as usize;
        for i in 0..m {
            for j in i..m {
                let k = (i + j) % m;
                if self.basis[i] + self.basis[j] < self.basis[k] {
                    return Err(SemigroupError::NotClosed { i, j, k });
                }
            }
        }
        Ok(())
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn basis(&self) -> &[i64] {
        &self.basis
    }

    pub fn contains(&self, m: i64) -> bool {
        if m == 0 {
            return true;
        }
        if m < 0 {
            return false;
        }
        m >= self.basis[(m % self.modulus) as usize]
    }

    /// All gaps, ascending; every gap is below max(basis).
    pub fn gaps(&self) -> Vec<i64> {
        let top = *self.basis.iter().max().unwrap();
        (1..top).filter(|&m| !self.contains(m)).collect()
    }

    pub fn genus(&self) -> i64 {
        self.gaps().len() as i64
    }

    /// Gap vector (v_0, ..., v_{M-1}): v_i = floor(e_i / M) counts gaps in
    /// residue class i.
    pub fn gap_vector(&self) -> Vec<i64> {
        self.basis.iter().map(|&e| e / self.modulus).collect()
    }

    /// Minimal generators: positive elements not expressible as a sum of two
    /// positive elements. They all occur among the standard basis entries.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let mut gens: Vec<i64> = self
            .basis
            .iter()
            .copied()
            .filter(|&e| {
                let mut s = self.modulus.min(e - 1);
                // scan positive elements below e
                let mut decomposable = false;
                while s >= 1 {
                    if self.contains(s) && self.contains(e - s) && e - s >= 1 {
                        decomposable = true;
                        break;
                    }
                    s -= 1;
                }
                // the scan above starts at min(M, e-1) and walks down; elements
                // of S are >= multiplicity, so every decomposition has a part
                // <= e/2 and the scan is complete once s covers 1..e-1
                if !decomposable {
                    let mut t = self.modulus + 1;
                    while t <= e - 1 {
                        if self.contains(t) && self.contains(e - t) {
                            decomposable = true;
                            break;
                        }
                        t += 1;
                    }
                }
                !decomposable
            })
            .collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    /// Effective weight: pairs (a, b) with a a minimal generator, b a gap,
    /// a < b.
    pub fn ewt(&self) -> i64 {
        let gens = self.minimal_generators();
        self.gaps()
            .iter()
            .map(|&b| gens.iter().filter(|&&a| a < b).count() as i64)
            .sum()
    }

    /// Weight: pairs (a, b) with a in S, b a gap, 0 < a < b.
    pub fn wt(&self) -> i64 {
        self.gaps()
            .iter()
            .map(|&b| (1..b).filter(|&a| self.contains(a)).count() as i64)
            .sum()
    }
}

/// Builds the 2N-semigroup indexed by an a-vector: e_0 = 2N,
/// e_N = (2 gamma + 1) N, and for each j the pair {e_j, e_{j+N}} is pinned by
/// min(e_j, e_{j+N}) = N a_{N-j} - (N-j) together with the sum constraint
/// e_j + e_{j+N} = 2(N-j) N d + (2 gamma + 1) N - 2(N-j), elements assigned to
/// residues by congruence mod 2N.
pub fn semigroup_from_avector(
    params: &CoverParams,
    a: &AVector,
) -> Result<NumericalSemigroup, SemigroupError> {
    let n = params.n as i64;
    let gamma = params.gamma as i64;
    let d = params.d();
    if a.0.len() != params.n - 1 {
        return Err(SemigroupError::InfeasibleAVector(a.0.clone()));
    }
    for (i, &ai) in a.0.iter().enumerate() {
        let j = i as i64 + 1;
        if ai < j * d || ai > j * d + gamma {
            return Err(SemigroupError::InfeasibleAVector(a.0.clone()));
        }
    }
    let m = 2 * n;
    let mut basis = vec![0i64; m as usize];
    basis[0] = m;
    basis[params.n] = (2 * gamma + 1) * n;
    for j in 1..params.n {
        let jj = j as i64;
        let a_nj = a.0[params.n - j - 1]; // a_{N-j}
        let min_elt = n * a_nj - (n - jj);
        let sum = 2 * (n - jj) * n * d + (2 * gamma + 1) * n - 2 * (n - jj);
        let max_elt = sum - min_elt;
        if min_elt.rem_euclid(m) == jj {
            basis[j] = min_elt;
            basis[j + params.n] = max_elt;
        } else {
            basis[j] = max_elt;
            basis[j + params.n] = min_elt;
        }
    }
    NumericalSemigroup::from_basis(basis)
}

/// Verifies the gap-vector theorem against brute-force gap enumeration:
/// the number of gaps congruent to -a mod N must equal
/// gamma - 1 + delta(a = 0) + a d, and the gap total must equal g.
pub fn gap_vector_check(s: &NumericalSemigroup, params: &CoverParams) -> bool {
    let n = params.n as i64;
    let gaps = s.gaps();
    if gaps.len() as i64 != params.g {
        return false;
    }
    for a in 0..n {
        let r = (-a).rem_euclid(n);
        let count = gaps.iter().filter(|&&m| m % n == r).count() as i64;
        let expected = params.gamma as i64 - 1 + i64::from(a == 0) + a * params.d();
        if count != expected {
            return false;
        }
    }
    true
}

/// The box F~(N) and the feasible set F(N) (box intersected with
/// subadditivity a_{i+j} <= a_i + a_j).
pub fn feasible_sets(params: &CoverParams) -> (Vec<AVector>, Vec<AVector>) {
    let d = params.d();
    let gamma = params.gamma as i64;
    let k = params.n - 1;
    let mut box_vectors: Vec<Vec<i64>> = vec![Vec::new()];
    for j in 1..=k {
        let lo = j as i64 * d;
        let mut next = Vec::new();
        for v in &box_vectors {
            for a in lo..=lo + gamma {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        box_vectors = next;
    }
    let f_tilde: Vec<AVector> = box_vectors.into_iter().map(AVector).collect();
    let f: Vec<AVector> = f_tilde
        .iter()
        .filter(|v| {
            for i in 1..=k {
                for j in i..=k {
                    if i + j <= k && v.0[i + j - 1] > v.0[i - 1] + v.0[j - 1] {
                        return false;
                    }
                }
            }
            true
        })
        .cloned()
        .collect();
    (f_tilde, f)
}

/// The N = 3 classification: realizable iff (a_1, a_2) lies in F(3) and
/// either a_2 is even, or a_2 is odd with
/// 4d + 2 gamma - 2 a_1 + 1 <= a_2 <= 2 a_1.
pub fn realizable_n3(params: &CoverParams, a1: i64, a2: i64) -> Result<bool, SemigroupError> {
    if params.n != 3 {
        return Err(SemigroupError::WrongN);
    }
    let d = params.d();
    let gamma = params.gamma as i64;
    let in_f3 = (d..=d + gamma).contains(&a1)
        && (2 * d..=2 * d + gamma).contains(&a2)
        && a2 <= 2 * a1;
    if !in_f3 {
        return Ok(false);
    }
    if a2 % 2 == 0 {
        return Ok(true);
    }
    Ok(4 * d + 2 * gamma - 2 * a1 + 1 <= a2 && a2 <= 2 * a1)
}

/// Three-valued realizability for general N, per the proven cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realizability {
    Realizable,
    NotRealizable,
    Unknown,
}

/// Labels an a-vector using only the proven results: the N <= 3
/// classifications, the always-realizable families (trivial, constant-gamma,
/// and multiples of d + k for k <= gamma/(N-1)), and the necessary conditions
/// on eps-vectors.
pub fn realizability_label(params: &CoverParams, a: &AVector) -> Realizability {
    let gamma = params.gamma as i64;
    let k = params.n - 1;
    let d = params.d();
    // outside the box or subadditivity: not a candidate at all
    for (i, &ai) in a.0.iter().enumerate() {
        let j = i as i64 + 1;
        if ai < j * d || ai > j * d + gamma {
            return Realizability::NotRealizable;
        }
    }
    for i in 1..=k {
        for j in i..=k {
            if i + j <= k && a.0[i + j - 1] > a.0[i - 1] + a.0[j - 1] {
                return Realizability::NotRealizable;
            }
        }
    }
    if params.n == 2 {
        return Realizability::Realizable;
    }
    if params.n == 3 {
        return match realizable_n3(params, a.0[0], a.0[1]) {
            Ok(true) => Realizability::Realizable,
            Ok(false) => Realizability::NotRealizable,
            Err(_) => Realizability::Unknown,
        };
    }
    let eps = a.eps(params);
    if eps_vector_violates_necessary(&eps, gamma) {
        return Realizability::NotRealizable;
    }
    // proven realizable families
    if eps.iter().all(|&e| e == gamma) {
        return Realizability::Realizable;
    }
    if eps.iter().all(|&e| e == 0) {
        return Realizability::Realizable; // Carvalho-Torres type
    }
    for kk in 1..=gamma / (k as i64) {
        if eps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == (i as i64 + 1) * kk)
        {
            return Realizability::Realizable;
        }
    }
    Realizability::Unknown
}

/// Necessary conditions on truncated eps-vectors of realizable semigroups.
fn eps_vector_violates_necessary(eps: &[i64], gamma: i64) -> bool {
    let k = eps.len();
    // zero set must be the multiples of its least element n, with period n
    if let Some(pos) = eps.iter().position(|&e| e == 0) {
        let n = pos + 1;
        for (i, &e) in eps.iter().enumerate() {
            let j = i + 1;
            if j % n == 0 && e != 0 {
                return true;
            }
            if j > n && e != eps[j - n - 1] {
                return true;
            }
        }
        // eps_i = 0 forces the symmetry eps_j = eps_{i-j}
        for j in 1..n {
            if eps[j - 1] != eps[n - j - 1] {
                return true;
            }
        }
    }
    if gamma > 1 && k >= 2 && eps[0] == 1 {
        // eps_2, eps_3 != 1 unless (1, 0, 1)
        if eps[1] == 1 {
            return true;
        }
        if k >= 3 && eps[2] == 1 && !(eps[1] == 0) {
            return true;
        }
        // eps_j != 0 for j <= 2 gamma unless j even with eps_2 = 0
        for (i, &e) in eps.iter().enumerate() {
            let j = i as i64 + 1;
            if j <= 2 * gamma && e == 0 && !(j % 2 == 0 && eps.get(1) == Some(&0)) {
                return true;
            }
        }
    }
    false
}

/// Verifies a realizability witness: raw Mumford pairs (E_j presented by
/// (u_j, v_j)) such that each E_j - (deg E_j) q is q-reduced and
/// j (E_1 - a_1 q) ~ E_j - a_j q, checked through the Jacobian group law.
pub fn verify_witness(
    curve: &HyperellipticCurve,
    params: &CoverParams,
    pairs: &[(Poly, Poly)],
) -> Result<bool, SemigroupError> {
    if curve.gamma() != params.gamma {
        return Err(SemigroupError::CurveGenusMismatch {
            curve: curve.gamma(),
            cover: params.gamma,
        });
    }
    if pairs.len() != params.n - 1 {
        return Err(SemigroupError::WrongWitnessCount {
            expected: params.n - 1,
            got: pairs.len(),
        });
    }
    let mut divisors = Vec::with_capacity(pairs.len());
    for (u, v) in pairs {
        match MumfordDivisor::new(curve, u.clone(), v.clone()) {
            Ok(div) => {
                if !jacobian::is_reduced(curve, &div) {
                    return Ok(false);
                }
                divisors.push(div);
            }
            Err(_) => return Ok(false), // not semi-reduced / not a valid presentation
        }
    }
    let d1 = &divisors[0];
    let mut acc = d1.clone();
    for (idx, dj) in divisors.iter().enumerate().skip(1) {
        acc = match jacobian::add(curve, &acc, d1) {
            Ok(x) => x,
            Err(_) => return Ok(false),
        };
        let _ = idx;
        if &acc != dj {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The staircase 2N-semigroup S_N of the profile
/// (1, 2, ..., gamma, ..., gamma, ..., 2, 1, 0), with g = C(N,2) t +
/// N(gamma - 1) + 1; standard basis per the closed-form table for both
/// parities of t.
pub fn staircase_semigroup(
    n: usize,
    gamma: usize,
    t: i64,
) -> Result<(CoverParams, NumericalSemigroup), SemigroupError> {
    if n == 0 || gamma == 0 || n % 2 != 0 || gamma % 2 != 0 {
        return Err(SemigroupError::BadParity);
    }
    let bound = 2 * gamma as i64 + 3;
    if t < bound {
        return Err(SemigroupError::TTooSmall { t, bound });
    }
    let g = (n * (n - 1) / 2) as i64 * t + n as i64 * (gamma as i64 - 1) + 1;
    let params = CoverParams::new(n, gamma, g)?;
    debug_assert_eq!(params.d(), t);
    let nn = n as i64;
    let gg = gamma as i64;
    let m = 2 * n;
    let mut basis = vec![0i64; m];
    basis[0] = 2 * nn;
    basis[n] = (2 * gg + 1) * nn;
    let t_odd = t % 2 != 0;
    for j in 1..n {
        let jj = j as i64;
        let (e_2n_j, e_n_j): (i64, i64) = if jj <= gg {
            let x = nn * (t + 1) * jj - jj;
            let y = nn * (t - 1) * jj - jj + (2 * gg + 1) * nn;
            if t_odd || jj % 2 == 0 {
                (x, y) // e_{2N-j} = N(t+1)j - j
            } else {
                (y, x)
            }
        } else if jj <= nn - gg {
            let x = nn * t * jj + nn * gg - jj;
            let y = nn * t * jj + (gg + 1) * nn - jj;
            if !t_odd || jj % 2 == 0 {
                (x, y) // e_{2N-j} = Ntj + N gamma - j
            } else {
                (y, x)
            }
        } else {
            let x = nn * (t - 1) * jj + nn * nn - jj;
            let y = nn * jj * (t + 1) + (2 * gg + 1 - nn) * nn - jj;
            if t_odd || jj % 2 == 0 {
                (x, y) // e_{2N-j} = N(t-1)j + N^2 - j
            } else {
                (y, x)
            }
        };
        basis[(2 * n - j) % m] = e_2n_j;
        basis[n - j] = e_n_j;
    }
    let s = NumericalSemigroup::from_basis(basis)?;
    Ok((params, s))
}

/// Minimal generators of the staircase semigroup as displayed in closed form
/// (t odd): {2N, (2g+1)N, N(t+1)-1} plus three j-indexed blocks.
pub fn staircase_min_generators_closed_form(n: usize, gamma: usize, t: i64) -> Vec<i64> {
    let nn = n as i64;
    let gg = gamma as i64;
    let mut gens = vec![2 * nn, (2 * gg + 1) * nn, nn * (t + 1) - 1];
    for j in 1..=gg {
        gens.push(nn * (t - 1) * j - j + (2 * gg + 1) * nn);
    }
    for j in (gg + 1)..=(nn - gg) {
        gens.push(nn * t * j + nn * gg - j);
    }
    for j in (nn - gg + 1)..=(nn - 1) {
        gens.push(nn * (t - 1) * j + nn * nn - j);
    }
    gens.sort_unstable();
    gens
}

/// Carvalho-Torres effective weight (N-1)(2t + gamma - 6) + 3 C(N-1, 2) + 1.
pub fn ct_ewt_closed_form(n: usize, gamma: usize, t: i64) -> i64 {
    let nn = n as i64;
    let gg = gamma as i64;
    (nn - 1) * (2 * t + gg - 6) + 3 * (nn - 1) * (nn - 2) / 2 + 1
}

/// Staircase effective weight, the 1/12-polynomial closed form (t odd).
pub fn staircase_ewt_closed_form(n: usize, gamma: usize, t: i64) -> i64 {
    let nn = n as i64;
    let gg = gamma as i64;
    let total = nn * nn * nn * (2 * t - 1)
        + 3 * nn * nn * (-6 - gg + 2 * t * (2 + gg))
        + nn * (-110 + 18 * gg - 9 * gg * gg + t * (10 - 6 * gg * gg))
        - 48
        - 8 * gg
        + 39 * gg * gg
        - 4 * gg * gg * gg
        + t * (36 - 20 * gg + 3 * gg * gg + 2 * gg * gg * gg);
    debug_assert_eq!(total % 12, 0);
    total / 12
}

/// The Carvalho-Torres a-vector a_j = j d (all eps_j = 0).
pub fn ct_avector(params: &CoverParams) -> AVector {
    AVector((1..params.n as i64).map(|j| j * params.d()).collect())
}

/// The staircase a-vector a_j = j d + min(j, gamma, N - j).
pub fn staircase_avector(params: &CoverParams) -> AVector {
    let gg = params.gamma as i64;
    let nn = params.n as i64;
    AVector(
        (1..nn)
            .map(|j| j * params.d() + j.min(gg).min(nn - j))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn p3_2_16() -> CoverParams {
        CoverParams::new(3, 2, 16).unwrap()
    }

    #[test]
    fn cover_params_degree() {
        let p = p3_2_16();
        assert_eq!(p.d(), 4);
        assert!(CoverParams::new(3, 2, 17).is_err()); // d not integral
        assert!(CoverParams::new(3, 2, 9).is_err()); // below (2N-1) gamma
    }

    #[test]
    fn sanity_semigroup_basis() {
        // N=3, gamma=2, g=16, a = (4, 8): min elements (Nd-1)(N-j) = (22, 11),
        // full standard basis (6, 37, 26, 15, 22, 11)
        let p = p3_2_16();
        let s = semigroup_from_avector(&p, &AVector(vec![4, 8])).unwrap();
        assert_eq!(s.basis(), &[6, 37, 26, 15, 22, 11]);
        assert_eq!(s.gap_vector().iter().sum::<i64>(), 16);
        assert_eq!(s.genus(), 16);
    }

    #[test]
    fn infeasible_avector_rejected() {
        let p = p3_2_16();
        assert!(matches!(
            semigroup_from_avector(&p, &AVector(vec![3, 8])),
            Err(SemigroupError::InfeasibleAVector(_))
        ));
    }

    #[test]
    fn gap_vector_theorem_on_sanity_example() {
        // counts per N-residue (a = 0, 1, 2) are (2, 5, 9), summing to 16
        let p = p3_2_16();
        let s = semigroup_from_avector(&p, &AVector(vec![4, 8])).unwrap();
        assert!(gap_vector_check(&s, &p));
        let gaps = s.gaps();
        let count = |r: i64| gaps.iter().filter(|&&m| m % 3 == r).count();
        assert_eq!((count(0), count(2), count(1)), (2, 5, 9));
    }

    #[test]
    fn feasible_sets_n2_and_n3() {
        // N=2: F(2) = F~(2) has gamma + 1 elements
        let p2 = CoverParams::from_degree(2, 3, 5).unwrap();
        let (ft, f) = feasible_sets(&p2);
        assert_eq!(ft.len(), 4);
        assert_eq!(f.len(), 4);
        // N=3, gamma=2, d=4: F(3) = box cap {a_2 <= 2 a_1}, 7 points
        let p3 = p3_2_16();
        let (ft3, f3) = feasible_sets(&p3);
        assert_eq!(ft3.len(), 9);
        assert_eq!(f3.len(), 7);
        assert!(f3.iter().all(|v| v.0[1] <= 2 * v.0[0]));
    }

    #[test]
    fn degenerate_gamma_box() {
        // gamma = 1 shrinks the box to two points per coordinate
        let p = CoverParams::from_degree(2, 1, 7).unwrap();
        let (ft, _) = feasible_sets(&p);
        assert_eq!(ft.len(), 2);
    }

    #[test]
    fn n3_realizability_dichotomy() {
        let p = p3_2_16();
        assert!(realizable_n3(&p, 4, 8).unwrap()); // even case
        assert!(realizable_n3(&p, 6, 9).unwrap()); // odd, bound tight: 4d+2g-2a1+1 = 9
        assert!(!realizable_n3(&p, 5, 9).unwrap()); // odd, a_1 below d + gamma - m
        let p2 = CoverParams::from_degree(2, 2, 6).unwrap();
        assert_eq!(realizable_n3(&p2, 4, 8), Err(SemigroupError::WrongN));
    }

    #[test]
    fn ewt_of_small_semigroup() {
        // <2, 3>: gaps {1}, generators {2, 3}; no generator below the gap
        let s = NumericalSemigroup::from_basis(vec![2, 3]).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        assert_eq!(s.minimal_generators(), vec![2, 3]);
        assert_eq!(s.ewt(), 0);
        assert_eq!(s.wt(), 0);
    }

    #[test]
    fn wt_dominates_ewt() {
        let p = p3_2_16();
        let (_, f) = feasible_sets(&p);
        for a in &f {
            let s = semigroup_from_avector(&p, a).unwrap();
            assert!(s.wt() >= s.ewt(), "wt < ewt at {:?}", a.0);
        }
    }

    #[test]
    fn staircase_matches_avector_construction_both_parities() {
        for (n, gamma, t) in [(4usize, 2usize, 7i64), (4, 2, 8), (6, 2, 7), (6, 2, 10)] {
            let (params, s) = staircase_semigroup(n, gamma, t).unwrap();
            let via_avector = semigroup_from_avector(&params, &staircase_avector(&params)).unwrap();
            assert_eq!(s, via_avector, "N={n}, gamma={gamma}, t={t}");
            assert!(gap_vector_check(&s, &params));
        }
    }

    #[test]
    fn staircase_table_row_and_generators() {
        // N=6, gamma=2, t=7 (odd): e_{2N-j} = N(t+1)j - j for 1 <= j <= gamma
        let (params, s) = staircase_semigroup(6, 2, 7).unwrap();
        let m = s.modulus();
        for j in 1..=2i64 {
            let e = 6 * 8 * j - j;
            assert_eq!(s.basis()[(e % m) as usize], e);
        }
        // minimal generators include 2N, (2 gamma + 1) N, N(t+1) - 1
        let gens = s.minimal_generators();
        for want in [12, 30, 47] {
            assert!(gens.contains(&want), "missing generator {want}");
        }
        // closed-form generator list matches the brute-force oracle
        assert_eq!(gens, staircase_min_generators_closed_form(6, 2, 7));
        // block count 3 + gamma + (N - 2 gamma) + (gamma - 1)
        assert_eq!(gens.len(), 3 + 2 + (6 - 4) + 1);
        let _ = params;
    }

    #[test]
    fn staircase_parameter_validation() {
        assert!(matches!(
            staircase_semigroup(5, 2, 11),
            Err(SemigroupError::BadParity)
        ));
        assert!(matches!(
            staircase_semigroup(6, 2, 6),
            Err(SemigroupError::TTooSmall { .. })
        ));
    }

    #[test]
    fn witness_verification_gamma1_two_torsion() {
        // gamma = 1, E_1 = [p - q] with p 2-torsion, N = 4: certifies (1, 0, 1)
        let ctx = FieldCtx::rational();
        let f = Poly::from_i64(ctx, &[0, -1, 0, 1]); // x^3 - x
        let c = HyperellipticCurve::new(1, f).unwrap();
        let params = CoverParams::from_degree(4, 1, 2).unwrap();
        let e1 = (Poly::from_i64(ctx, &[-1, 1]), Poly::zero(ctx));
        let e2 = (Poly::one(ctx), Poly::zero(ctx));
        let e3 = e1.clone();
        assert!(verify_witness(&c, &params, &[e1.clone(), e2, e3]).unwrap());
        // wrong middle divisor fails
        let bad = (Poly::from_i64(ctx, &[0, 1]), Poly::zero(ctx));
        let e2b = bad;
        assert!(!verify_witness(&c, &params, &[e1.clone(), e2b, e1]).unwrap());
    }

    #[test]
    fn witness_rejects_invalid_pairs() {
        let ctx = FieldCtx::rational();
        let f = Poly::from_i64(ctx, &[0, -1, 0, 1]);
        let c = HyperellipticCurve::new(1, f).unwrap();
        let params = CoverParams::from_degree(2, 1, 2).unwrap();
        // u | f - v^2 fails: u = x - 5, v = 0 but f(5) != 0
        let pair = (Poly::from_i64(ctx, &[-5, 1]), Poly::zero(ctx));
        assert!(!verify_witness(&c, &params, &[pair]).unwrap());
        // genus mismatch errors
        let p_bad = CoverParams::from_degree(2, 2, 6).unwrap();
        let pair2 = (Poly::from_i64(ctx, &[-1, 1]), Poly::zero(ctx));
        assert!(verify_witness(&c, &p_bad, &[pair2]).is_err());
    }

    #[test]
    fn realizability_labels_general_n() {
        let p = CoverParams::from_degree(4, 2, 4).unwrap();
        // trivial vector: CT type, realizable
        assert_eq!(
            realizability_label(&p, &ct_avector(&p)),
            Realizability::Realizable
        );
        // all-gamma vector realizable
        let all_g = AVector((1..4).map(|j| j * 4 + 2).collect());
        assert_eq!(realizability_label(&p, &all_g), Realizability::Realizable);
        // eps = (1, 1, 0): zero at 3 with eps_1 = 1 violates the order rules
        let bad = AVector(vec![5, 9, 12]);
        assert_eq!(realizability_label(&p, &bad), Realizability::NotRealizable);
        // eps = (1, 2, 2): no proven construction or obstruction recorded
        let unknown = AVector(vec![5, 10, 14]);
        assert_eq!(realizability_label(&p, &unknown), Realizability::Unknown);
    }
}
