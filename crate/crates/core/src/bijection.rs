//! The maps `λ`, `μ` and `ν = (λ, μ)` from permutations to Dyck paths, their
//! inverses on 123-avoiders, and the inverse of `ν` on admissible pairs.

use std::fmt;

use crate::dyckpath::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::involution::lprime;
use crate::permutation::{assemble, MaxProfile, MinProfile, Permutation};
use crate::poset::leq;

/// An ordered pair of Dyck paths of equal semilength.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPair {
    pub first: DyckPath,
    pub second: DyckPath,
}

impl PathPair {
    pub fn new(first: DyckPath, second: DyckPath) -> Result<Self> {
        if first.semilength() != second.semilength() {
            return Err(Error::LengthMismatch {
                left: first.semilength(),
                right: second.semilength(),
            });
        }
        Ok(PathPair { first, second })
    }

    pub fn semilength(&self) -> usize {
        self.first.semilength()
    }

    pub fn swapped(&self) -> PathPair {
        PathPair {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Both paths mirrored in a vertical line.
    pub fn reversed(&self) -> PathPair {
        PathPair {
            first: self.first.reverse(),
            second: self.second.reverse(),
        }
    }
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// `λ(σ)`: reading left to right, each LTR minimum `m_i` gives
/// `U^{m_{i-1} - m_i} D` (with `m_0 = n + 1`) and every other entry one `D`.
pub fn lambda_map(sigma: &Permutation) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * sigma.len());
    let mut current = sigma.len() + 1;
    for &x in sigma.values() {
        if x < current {
            steps.extend(std::iter::repeat_n(Step::Up, current - x));
            current = x;
        }
        steps.push(Step::Down);
    }
    DyckPath::from_steps_unchecked(steps)
}

/// `μ(σ)`: reading right to left, each RTL maximum `M_i` gives
/// `U^{M_i - M_{i-1}} D` (with `M_0 = 0`) and every other entry one `D`.
pub fn mu_map(sigma: &Permutation) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * sigma.len());
    let mut current = 0;
    for &x in sigma.values().iter().rev() {
        if x > current {
            steps.extend(std::iter::repeat_n(Step::Up, x - current));
            current = x;
        }
        steps.push(Step::Down);
    }
    DyckPath::from_steps_unchecked(steps)
}

pub fn nu(sigma: &Permutation) -> PathPair {
    PathPair {
        first: lambda_map(sigma),
        second: mu_map(sigma),
    }
}

/// Minima profile encoded by a path through `λ`:
/// `m_i = n + 1 - A_i`, `m_k = 1`, `p_1 = 1`, `p_{i+1} = D_i + 1`.
pub fn min_profile_of(path: &DyckPath) -> MinProfile {
    let n = path.semilength();
    let code = path.to_code();
    if n == 0 {
        return MinProfile::default();
    }
    MinProfile {
        values: code
            .ascents()
            .iter()
            .map(|a| n + 1 - a)
            .chain([1])
            .collect(),
        positions: [1]
            .into_iter()
            .chain(code.descents().iter().map(|d| d + 1))
            .collect(),
    }
}

/// Maxima profile encoded by a path through `μ`:
/// `M_i = A*_i`, `M_h = n`, `P_1 = n`, `P_{i+1} = n - D*_i`.
pub fn max_profile_of(path: &DyckPath) -> MaxProfile {
    let n = path.semilength();
    let code = path.to_code();
    if n == 0 {
        return MaxProfile::default();
    }
    MaxProfile {
        values: code.ascents().iter().copied().chain([n]).collect(),
        positions: [n]
            .into_iter()
            .chain(code.descents().iter().map(|d| n - d))
            .collect(),
    }
}

/// The unique 123-avoiding `σ` with `λ(σ) = path`.
pub fn lambda_inv_123(path: &DyckPath) -> Permutation {
    assemble(
        path.semilength(),
        &min_profile_of(path),
        &MaxProfile::default(),
    )
    .expect("every Dyck path encodes a consistent minima profile")
}

/// The unique 123-avoiding `σ` with `μ(σ) = path`.
pub fn mu_inv_123(path: &DyckPath) -> Permutation {
    assemble(
        path.semilength(),
        &MinProfile::default(),
        &max_profile_of(path),
    )
    .expect("every Dyck path encodes a consistent maxima profile")
}

/// `P ≥ L′(Q)` and `Q ≥ L′(P)`.
pub fn is_admissible(pair: &PathPair) -> Result<bool> {
    let (p, q) = (&pair.first, &pair.second);
    if p.semilength() != q.semilength() {
        return Err(Error::LengthMismatch {
            left: p.semilength(),
            right: q.semilength(),
        });
    }
    Ok(leq(&lprime(q), p)? && leq(&lprime(p), q)?)
}

/// Result of inverting `ν`, together with the two 123-avoiders it is built
/// from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preimage {
    pub alpha: Permutation,
    /// `ν⁻¹((P, L′(P)))`
    pub sigma: Permutation,
    /// `ν⁻¹((L′(Q), Q))`
    pub tau: Permutation,
}

/// The 1234-avoider `α` with `ν(α) = pair`.
///
/// Irreducible components are handled one at a time: the i-th component of
/// `P` pairs with the i-th component of `Q` counted from the right, and the
/// pieces are reassembled as a skew sum.
pub fn nu_inv(pair: &PathPair) -> Result<Permutation> {
    nu_inv_detailed(pair).map(|pre| pre.alpha)
}

pub fn nu_inv_detailed(pair: &PathPair) -> Result<Preimage> {
    if !is_admissible(pair)? {
        return Err(Error::NotAdmissible);
    }
    let ps = pair.first.irreducible_components();
    let qs = pair.second.irreducible_components();
    let mut pieces = Vec::with_capacity(ps.len());
    for (p, q) in ps.iter().zip(qs.iter().rev()) {
        pieces.push(merge(p, q)?);
    }
    let alpha = Permutation::skew_sum(&pieces);
    finish(pair, alpha)
}

/// Same as [`nu_inv`] but runs the merge once on the whole pair.
pub fn nu_inv_global(pair: &PathPair) -> Result<Permutation> {
    if !is_admissible(pair)? {
        return Err(Error::NotAdmissible);
    }
    let alpha = merge(&pair.first, &pair.second)?;
    finish(pair, alpha).map(|pre| pre.alpha)
}

/// `α` takes `σ`'s values on `pmin(σ)`, `τ`'s values on `pmax(τ)`, and the
/// leftover values in decreasing order on the leftover positions.
fn merge(p: &DyckPath, q: &DyckPath) -> Result<Permutation> {
    let sigma = lambda_inv_123(p);
    let tau = mu_inv_123(q);
    let min = sigma.ltr_minima();
    let max = tau.rtl_maxima();
    assemble(sigma.len(), &min, &max).ok_or_else(|| {
        Error::InternalConsistency(format!(
            "minima of {} and maxima of {} disagree on a shared position",
            sigma, tau
        ))
    })
}

fn finish(pair: &PathPair, alpha: Permutation) -> Result<Preimage> {
    let sigma = lambda_inv_123(&pair.first);
    let tau = mu_inv_123(&pair.second);
    let fail = |what: &str| {
        Err(Error::InternalConsistency(format!(
            "{} for α = {}",
            what, alpha
        )))
    };
    if !alpha.avoids_1234() {
        return fail("α contains 1234");
    }
    if alpha.ltr_minima() != sigma.ltr_minima() {
        return fail("LTR minima differ from σ");
    }
    if alpha.rtl_maxima() != tau.rtl_maxima() {
        return fail("RTL maxima differ from τ");
    }
    if &nu(&alpha) != pair {
        return fail("ν(α) differs from the input pair");
    }
    Ok(Preimage { alpha, sigma, tau })
}

/// `ν(σ^rc)` is `ν(σ)` with the paths swapped.
pub fn rc_symmetry_holds(sigma: &Permutation) -> bool {
    nu(&sigma.reverse_complement()) == nu(sigma).swapped()
}

/// `ν(σ⁻¹)` is `ν(σ)` with both paths mirrored.
pub fn inverse_symmetry_holds(sigma: &Permutation) -> bool {
    nu(&sigma.inverse()) == nu(sigma).reversed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyckpath::AscentDescentCode;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn code(n: usize, a: &[usize], d: &[usize]) -> DyckPath {
        DyckPath::from_code(&AscentDescentCode::new(n, a.to_vec(), d.to_vec()).unwrap())
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_map(&p("6 2 3 1 7 5 4")), code(7, &[2, 6], &[1, 3]));
        assert_eq!(lambda_map(&Permutation::decreasing(4)), DyckPath::zigzag(4));
        assert_eq!(
            lambda_map(&p("4 9 8 2 7 1 6 5 3")),
            code(9, &[6, 8], &[3, 5])
        );
        assert_eq!(lambda_map(&Permutation::identity(0)), DyckPath::empty());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_map(&p("6 2 3 1 7 5 4")), code(7, &[4, 5], &[1, 2]));
        assert_eq!(mu_map(&p("7 5 9 4 3 2 8 1 6")), code(9, &[6, 8], &[2, 6]));
        assert_eq!(mu_map(&Permutation::identity(5)), DyckPath::pyramid(5));
    }

    #[test]
    fn nu_examples() {
        let pair = nu(&p("6 2 3 1 7 5 4"));
        assert_eq!(pair.first, code(7, &[2, 6], &[1, 3]));
        assert_eq!(pair.second, code(7, &[4, 5], &[1, 2]));
        let unit = nu(&p("1"));
        assert_eq!(
            (unit.first.to_string(), unit.second.to_string()),
            ("UD".into(), "UD".into())
        );
        let pair = nu(&p("4 7 9 2 5 1 8 3 6"));
        assert_eq!(pair.first, code(9, &[6, 8], &[3, 5]));
        assert_eq!(pair.second, code(9, &[6, 8], &[2, 6]));
    }

    #[test]
    fn inverses_on_123_avoiders() {
        assert_eq!(
            lambda_inv_123(&code(9, &[6, 8], &[3, 5])),
            p("4 9 8 2 7 1 6 5 3")
        );
        assert_eq!(
            mu_inv_123(&code(9, &[6, 8], &[2, 6])),
            p("7 5 9 4 3 2 8 1 6")
        );
        let s = lambda_inv_123(&DyckPath::pyramid(5));
        assert_eq!(s, p("1 5 4 3 2"));
        assert_eq!(lambda_map(&s), DyckPath::pyramid(5));
        assert_eq!(mu_inv_123(&DyckPath::pyramid(5)), p("4 3 2 1 5"));
        assert_eq!(lambda_inv_123(&DyckPath::empty()), Permutation::identity(0));
    }

    #[test]
    fn admissibility() {
        let pair = PathPair::new(code(9, &[6, 8], &[3, 5]), code(9, &[6, 8], &[2, 6])).unwrap();
        assert!(is_admissible(&pair).unwrap());
        let bad = PathPair::new(DyckPath::zigzag(2), DyckPath::pyramid(2)).unwrap();
        assert!(!is_admissible(&bad).unwrap());
        assert!(PathPair::new(DyckPath::zigzag(2), DyckPath::pyramid(3)).is_err());
    }

    #[test]
    fn worked_inverse() {
        let pair = PathPair::new(code(9, &[6, 8], &[3, 5]), code(9, &[6, 8], &[2, 6])).unwrap();
        let pre = nu_inv_detailed(&pair).unwrap();
        assert_eq!(pre.alpha, p("4 7 9 2 5 1 8 3 6"));
        assert_eq!(pre.sigma, p("4 9 8 2 7 1 6 5 3"));
        assert_eq!(pre.tau, p("7 5 9 4 3 2 8 1 6"));
        assert_eq!(nu_inv_global(&pair).unwrap(), pre.alpha);
    }

    #[test]
    fn inverse_of_pyramid_pair() {
        let pair = PathPair::new(DyckPath::pyramid(5), DyckPath::pyramid(5)).unwrap();
        let alpha = nu_inv(&pair).unwrap();
        // minima {1}@1, maxima {5}@5, rest decreasing
        assert_eq!(alpha, p("1 4 3 2 5"));
        assert_eq!(nu(&alpha), pair);
    }

    #[test]
    fn inverse_rejects_inadmissible() {
        let pair = PathPair::new(DyckPath::pyramid(2), DyckPath::zigzag(2)).unwrap();
        assert_eq!(nu_inv(&pair), Err(Error::NotAdmissible));
    }

    #[test]
    fn reducible_pairs_mirror_components() {
        let alpha = p("2 3 1");
        let pair = nu(&alpha);
        assert_eq!(pair.first.to_string(), "UUDDUD");
        assert_eq!(pair.second.to_string(), "UDUUDD");
        assert_eq!(nu_inv(&pair).unwrap(), alpha);
    }

    #[test]
    fn symmetries_on_worked_example() {
        let s = p("6 2 3 1 7 5 4");
        assert!(rc_symmetry_holds(&s));
        assert!(inverse_symmetry_holds(&s));
        assert_eq!(nu(&s.reverse_complement()), nu(&s).swapped());
    }
}
