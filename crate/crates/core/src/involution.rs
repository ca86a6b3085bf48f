//! The Kreweras involution `L` and its variant `L′`.
//!
//! `L′` flips a path in a vertical line and then applies `L` inside every
//! irreducible component `U P_i D`. Because of the flip, the components of
//! `L′(P)` appear in the reverse order of those of `P`.
//!
//! The production path works on ascent-descent codes. For an irreducible
//! path of semilength `n` with code `(A, D)`:
//!
//! * `Â = [n-2] \ {A_i - 1}` listed decreasingly, `A′_i = n - Â_i`;
//! * `D̂ = [n-2] \ {D_i}` listed decreasingly, `D′_i = n - 1 - D̂_i`.
//!
//! `L` itself is recovered from `L′` through `L(X) = inner(L′(U·rev(X)·D))`.
//! The valley-marking construction of `L` lives in [`oracle`].

use crate::dyckpath::{AscentDescentCode, DyckPath};

/// `L′` on a single irreducible path, by the code formula.
fn lprime_irreducible(path: &DyckPath) -> DyckPath {
    let n = path.semilength();
    if n <= 1 {
        return path.clone();
    }
    let code = path.to_code();
    let shifted: Vec<usize> = code.ascents().iter().map(|a| a - 1).collect();
    let ascents = (1..n - 1)
        .rev()
        .filter(|x| !shifted.contains(x))
        .map(|x| n - x)
        .collect();
    let descents = (1..n - 1)
        .rev()
        .filter(|x| !code.descents().contains(x))
        .map(|x| n - 1 - x)
        .collect();
    let image = AscentDescentCode::new(n, ascents, descents)
        .expect("L′ code formula yields a valid code on irreducible paths");
    DyckPath::from_code(&image)
}

pub fn lprime(path: &DyckPath) -> DyckPath {
    let images: Vec<DyckPath> = path
        .irreducible_components()
        .iter()
        .rev()
        .map(lprime_irreducible)
        .collect();
    DyckPath::concat_all(&images)
}

/// The Kreweras (Lalanne–Kreweras) involution.
pub fn kreweras(path: &DyckPath) -> DyckPath {
    lprime(&path.reverse().lift())
        .unlift()
        .expect("L′ maps irreducible paths to irreducible paths")
}

/// Geometric constructions, kept independent of the code formula and used to
/// cross-check it.
pub mod oracle {
    use crate::dyckpath::{DyckPath, Step};

    /// `L` by marking valleys.
    ///
    /// The path is reflected in the x-axis. From the midpoint of every double
    /// descent of the reflection a ray of slope +1 goes up to the right, from
    /// every double ascent a ray of slope -1 goes up to the left. The i-th
    /// rays of each kind (left to right) meet at the i-th valley of `L(P)`.
    /// Returns `None` if the marked points do not describe a Dyck path.
    pub fn kreweras(path: &DyckPath) -> Option<DyckPath> {
        let steps = path.steps();
        let n = path.semilength();
        if n == 0 {
            return Some(DyckPath::empty());
        }
        let heights = path.heights();
        // double ascents of P are the double descents of its reflection
        let midpoints = |s: Step| -> Vec<(i64, i64)> {
            (1..steps.len())
                .filter(|&x| steps[x - 1] == s && steps[x] == s)
                .map(|x| (x as i64, -heights[x]))
                .collect()
        };
        let rising_right = midpoints(Step::Up);
        let rising_left = midpoints(Step::Down);
        if rising_right.len() != rising_left.len() {
            return None;
        }

        let mut valleys = Vec::with_capacity(rising_right.len());
        for (&(x1, y1), &(x2, y2)) in rising_right.iter().zip(&rising_left) {
            // (x1 + t, y1 + t) = (x2 - s, y2 + s)
            let twice_t = (x2 - x1) + (y2 - y1);
            if twice_t < 0 || twice_t % 2 != 0 {
                return None;
            }
            let t = twice_t / 2;
            valleys.push((x1 + t, y1 + t));
        }
        valleys.sort_unstable();

        let corners = std::iter::once((0, 0))
            .chain(valleys.iter().copied())
            .chain(std::iter::once((2 * n as i64, 0)));
        let corners: Vec<(i64, i64)> = corners.collect();
        let mut out = Vec::with_capacity(2 * n);
        for w in corners.windows(2) {
            let ((xa, ya), (xb, yb)) = (w[0], w[1]);
            let (width, rise) = (xb - xa, yb - ya);
            if (width + rise) % 2 != 0 {
                return None;
            }
            let ups = (width + rise) / 2;
            let downs = (width - rise) / 2;
            if ups < 1 || downs < 1 {
                return None;
            }
            out.extend(std::iter::repeat_n(Step::Up, ups as usize));
            out.extend(std::iter::repeat_n(Step::Down, downs as usize));
        }
        DyckPath::new(out).ok()
    }

    /// `L′` from its definition: flip the whole path, then replace every
    /// irreducible component `U X D` with `U L(X) D`.
    pub fn lprime(path: &DyckPath) -> Option<DyckPath> {
        let mut parts = Vec::new();
        for comp in path.reverse().irreducible_components() {
            parts.push(kreweras(&comp.unlift()?)?.lift());
        }
        Some(DyckPath::concat_all(&parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, a: &[usize], d: &[usize]) -> DyckPath {
        DyckPath::from_code(&AscentDescentCode::new(n, a.to_vec(), d.to_vec()).unwrap())
    }

    #[test]
    fn lprime_code_examples() {
        assert_eq!(
            lprime(&code(9, &[6, 8], &[3, 5])),
            code(9, &[3, 5, 6, 7, 8], &[1, 2, 4, 6, 7])
        );
        assert_eq!(
            lprime(&code(9, &[6, 8], &[2, 6])),
            code(9, &[3, 5, 6, 7, 8], &[1, 3, 4, 5, 7])
        );
        assert_eq!(lprime(&code(4, &[2], &[1])), code(4, &[2], &[1]));
        assert_eq!(lprime(&DyckPath::empty()), DyckPath::empty());
        assert_eq!(lprime(&DyckPath::pyramid(1)), DyckPath::pyramid(1));
        assert_eq!(lprime(&DyckPath::pyramid(2)), DyckPath::pyramid(2));
    }

    #[test]
    fn lprime_reverses_component_order() {
        let p: DyckPath = "UUDDUD".parse().unwrap();
        assert_eq!(lprime(&p).to_string(), "UDUUDD");
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(kreweras(&DyckPath::empty()), DyckPath::empty());
        assert_eq!(kreweras(&DyckPath::pyramid(1)), DyckPath::pyramid(1));
        assert_eq!(kreweras(&DyckPath::pyramid(2)), DyckPath::zigzag(2));
        assert_eq!(kreweras(&DyckPath::pyramid(5)), DyckPath::zigzag(5));
        assert_eq!(
            oracle::kreweras(&DyckPath::pyramid(2)),
            Some(DyckPath::zigzag(2))
        );
        assert_eq!(
            oracle::kreweras(&DyckPath::zigzag(3)),
            Some(DyckPath::pyramid(3))
        );
    }
}
