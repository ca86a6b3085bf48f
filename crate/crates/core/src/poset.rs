//! The order `≤` on Dyck paths of a fixed semilength.
//!
//! On irreducible paths, `Q` covers `P` when the code of `Q` is obtained
//! from the code of `P` by deleting one ascent entry `A_i` and one descent
//! entry `D_j` with `j ≥ i`; `≤` is the transitive closure. Arbitrary paths
//! compare componentwise and only when their irreducible components have
//! the same semilengths.
//!
//! [`leq`] decides the closure directly: `P ≤ Q` iff `A(Q) ⊆ A(P)`,
//! `D(Q) ⊆ D(P)`, the same number `r` of entries is removed from both lists,
//! and the removed code indices `i_1 < ... < i_r`, `j_1 < ... < j_r` satisfy
//! `i_t ≤ j_t`. [`leq_oracle`] walks the covering relation instead.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write;

use crate::dyckpath::{AscentDescentCode, DyckPath};
use crate::error::{Error, Result};

/// How removed ascent and descent indices are matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Matching {
    /// `i_t ≤ j_t`; agrees with the covering closure.
    Weak,
    /// `i_t < j_t`; kept to show that it does not.
    Strict,
}

fn check_semilength(p: &DyckPath, q: &DyckPath) -> Result<()> {
    if p.semilength() != q.semilength() {
        return Err(Error::LengthMismatch {
            left: p.semilength(),
            right: q.semilength(),
        });
    }
    Ok(())
}

/// Whether `q` covers `p`. Both paths must be irreducible.
pub fn covers(q: &DyckPath, p: &DyckPath) -> Result<bool> {
    check_semilength(p, q)?;
    for path in [p, q] {
        if !path.is_irreducible() {
            return Err(Error::Reducible(path.to_string()));
        }
    }
    Ok(irreducible_covers(p).contains(q))
}

fn irreducible_covers(p: &DyckPath) -> Vec<DyckPath> {
    let code = p.to_code();
    let (a, d) = (code.ascents(), code.descents());
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in i..d.len() {
            let mut ascents = a.to_vec();
            let mut descents = d.to_vec();
            ascents.remove(i);
            descents.remove(j);
            let c = AscentDescentCode::new(code.semilength(), ascents, descents)
                .expect("removing A_i and D_j with j >= i keeps the code valid");
            out.push(DyckPath::from_code(&c));
        }
    }
    out
}

/// All paths covering `p`, one component at a time, in sorted order.
pub fn upper_covers(p: &DyckPath) -> Vec<DyckPath> {
    let comps = p.irreducible_components();
    let mut out = BTreeSet::new();
    for (k, comp) in comps.iter().enumerate() {
        for cover in irreducible_covers(comp) {
            let mut parts = comps.clone();
            parts[k] = cover;
            out.insert(DyckPath::concat_all(&parts));
        }
    }
    out.into_iter().collect()
}

fn direct_irreducible(p: &DyckPath, q: &DyckPath, matching: Matching) -> bool {
    let (cp, cq) = (p.to_code(), q.to_code());
    let removed = |from: &[usize], keep: &[usize]| -> Option<Vec<usize>> {
        let keep: BTreeSet<_> = keep.iter().collect();
        if !keep.iter().all(|x| from.contains(x)) {
            return None;
        }
        Some(
            (0..from.len())
                .filter(|&i| !keep.contains(&from[i]))
                .collect(),
        )
    };
    let (Some(ri), Some(rj)) = (
        removed(cp.ascents(), cq.ascents()),
        removed(cp.descents(), cq.descents()),
    ) else {
        return false;
    };
    ri.len() == rj.len()
        && ri.iter().zip(&rj).all(|(i, j)| match matching {
            Matching::Weak => i <= j,
            Matching::Strict => i < j,
        })
}

fn paired_components(p: &DyckPath, q: &DyckPath) -> Option<Vec<(DyckPath, DyckPath)>> {
    let (a, b) = (p.irreducible_components(), q.irreducible_components());
    if a.len() != b.len()
        || a.iter()
            .zip(&b)
            .any(|(x, y)| x.semilength() != y.semilength())
    {
        return None;
    }
    Some(a.into_iter().zip(b).collect())
}

pub fn leq(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    leq_with(p, q, Matching::Weak)
}

pub fn leq_with(p: &DyckPath, q: &DyckPath, matching: Matching) -> Result<bool> {
    check_semilength(p, q)?;
    Ok(paired_components(p, q).is_some_and(|pairs| {
        pairs
            .iter()
            .all(|(x, y)| direct_irreducible(x, y, matching))
    }))
}

/// Reachability through single covers, component by component.
pub fn leq_oracle(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    check_semilength(p, q)?;
    let Some(pairs) = paired_components(p, q) else {
        return Ok(false);
    };
    Ok(pairs.iter().all(|(x, y)| reachable(x, y)))
}

fn reachable(from: &DyckPath, to: &DyckPath) -> bool {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(from.clone());
    queue.push_back(from.clone());
    while let Some(cur) = queue.pop_front() {
        if &cur == to {
            return true;
        }
        for next in irreducible_covers(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Hasse diagram of the given paths (normally one full semilength class) in
/// DOT format, with an edge from each path to each of its upper covers.
pub fn hasse_dot(paths: &[DyckPath]) -> String {
    let mut out = String::from("digraph dyck_poset {\n    rankdir=BT;\n");
    for p in paths {
        let _ = writeln!(out, "    \"{}\";", p);
    }
    let members: HashSet<&DyckPath> = paths.iter().collect();
    for p in paths {
        for q in upper_covers(p) {
            if members.contains(&q) {
                let _ = writeln!(out, "    \"{}\" -> \"{}\";", p, q);
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, a: &[usize], d: &[usize]) -> DyckPath {
        DyckPath::from_code(&AscentDescentCode::new(n, a.to_vec(), d.to_vec()).unwrap())
    }

    #[test]
    fn covering() {
        let p = code(7, &[2, 6], &[1, 3]);
        let q = code(7, &[6], &[3]);
        assert!(covers(&q, &p).unwrap());
        assert!(!covers(&p, &q).unwrap());
        assert!(!covers(&p, &p).unwrap());
        let pyramid = DyckPath::pyramid(7);
        assert!(!covers(&q, &pyramid).unwrap());
        assert!(covers(&pyramid, &q).unwrap());
        assert!(matches!(
            covers(&DyckPath::zigzag(2), &DyckPath::pyramid(2)),
            Err(Error::Reducible(_))
        ));
        assert!(covers(&DyckPath::pyramid(3), &DyckPath::pyramid(2)).is_err());
    }

    #[test]
    fn upper_covers_examples() {
        assert!(upper_covers(&DyckPath::pyramid(5)).is_empty());
        assert!(upper_covers(&DyckPath::zigzag(3)).is_empty());
        let p = code(7, &[2, 6], &[1, 3]);
        // (i, j) in {(1,1), (1,2), (2,2)}
        assert_eq!(upper_covers(&p), {
            let mut v = vec![
                code(7, &[6], &[3]),
                code(7, &[6], &[1]),
                code(7, &[2], &[1]),
            ];
            v.sort();
            v
        });
    }

    #[test]
    fn direct_comparison() {
        let p = code(9, &[4, 7, 8], &[3, 4, 7]);
        let q = code(9, &[7, 8], &[3, 7]);
        assert!(leq(&p, &q).unwrap());
        assert!(leq_oracle(&p, &q).unwrap());
        assert!(!leq(&q, &p).unwrap());
        assert!(leq(&p, &p).unwrap());

        let p = code(9, &[3, 5, 6, 7, 8], &[1, 3, 4, 5, 7]);
        let q = code(9, &[6, 8], &[2, 6]);
        assert!(!leq(&p, &q).unwrap());
        assert!(!leq_oracle(&p, &q).unwrap());

        assert!(!leq(&DyckPath::zigzag(2), &DyckPath::pyramid(2)).unwrap());
        assert!(leq(&DyckPath::pyramid(2), &DyckPath::pyramid(3)).is_err());
    }

    #[test]
    fn strict_matching_misses_single_covers() {
        // removing A_1 and D_1 is a cover, which strict matching rejects
        let p = code(7, &[2, 6], &[1, 3]);
        let q = code(7, &[6], &[3]);
        assert!(leq_with(&p, &q, Matching::Weak).unwrap());
        assert!(!leq_with(&p, &q, Matching::Strict).unwrap());
    }

    #[test]
    fn dot_output() {
        let paths = vec![DyckPath::pyramid(3), "UUDUDD".parse().unwrap()];
        let dot = hasse_dot(&paths);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("\"UUDUDD\" -> \"UUUDDD\";"));
    }
}
