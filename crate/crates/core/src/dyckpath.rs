//! Dyck paths, their ascent-descent codes and irreducible decomposition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A lattice path of `U` and `D` steps from `(0, 0)` to `(2n, 0)` that never
/// goes below the x-axis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        let mut ups = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => {
                    height += 1;
                    ups += 1;
                }
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(Error::BelowAxis { step: i + 1 });
            }
        }
        if height != 0 {
            return Err(Error::Unbalanced {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    /// `U^n D^n`
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::Up; n];
        steps.extend(std::iter::repeat_n(Step::Down, n));
        DyckPath { steps }
    }

    /// `(UD)^n`
    pub fn zigzag(n: usize) -> Self {
        DyckPath {
            steps: [Step::Up, Step::Down].repeat(n),
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights of the lattice points, starting with the origin.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut y = 0;
        for s in &self.steps {
            y += if *s == Step::Up { 1 } else { -1 };
            h.push(y);
        }
        h
    }

    pub fn to_code(&self) -> AscentDescentCode {
        let mut ascents = Vec::new();
        let mut descents = Vec::new();
        let (mut ups, mut downs) = (0, 0);
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => ups += 1,
                Step::Down => {
                    downs += 1;
                    if self.steps.get(i + 1) == Some(&Step::Up) {
                        ascents.push(ups);
                        descents.push(downs);
                    }
                }
            }
        }
        AscentDescentCode {
            n: self.semilength(),
            ascents,
            descents,
        }
    }

    pub fn from_code(code: &AscentDescentCode) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * code.n);
        let (mut a_prev, mut d_prev) = (0, 0);
        let n = code.n;
        let ascents = code.ascents.iter().copied().chain((n > 0).then_some(n));
        let descents = code.descents.iter().copied().chain((n > 0).then_some(n));
        for (a, d) in ascents.zip(descents) {
            steps.extend(std::iter::repeat_n(Step::Up, a - a_prev));
            steps.extend(std::iter::repeat_n(Step::Down, d - d_prev));
            a_prev = a;
            d_prev = d;
        }
        DyckPath::from_steps_unchecked(steps)
    }

    /// 1-indexed step numbers of the down steps that end on the x-axis.
    pub fn returns(&self) -> Vec<usize> {
        self.heights()
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &h)| h == 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.returns().len() == 1
    }

    pub fn irreducible_components(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut start = 0;
        for r in self.returns() {
            out.push(DyckPath {
                steps: self.steps[start..r].to_vec(),
            });
            start = r;
        }
        out
    }

    /// Semilengths of the irreducible components, left to right.
    pub fn component_profile(&self) -> Vec<usize> {
        self.irreducible_components()
            .iter()
            .map(DyckPath::semilength)
            .collect()
    }

    /// Mirror image in a vertical line: reversed order, `U` and `D` swapped.
    pub fn reverse(&self) -> DyckPath {
        DyckPath {
            steps: self.steps.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a DyckPath>) -> DyckPath {
        DyckPath {
            steps: parts
                .into_iter()
                .flat_map(|p| p.steps.iter().copied())
                .collect(),
        }
    }

    /// `U · self · D`
    pub fn lift(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        DyckPath { steps }
    }

    /// Inverse of [`DyckPath::lift`] for an irreducible path.
    pub fn unlift(&self) -> Option<DyckPath> {
        if !self.is_irreducible() {
            return None;
        }
        Some(DyckPath {
            steps: self.steps[1..self.steps.len() - 1].to_vec(),
        })
    }

    /// Draws the path on a character grid with `/` for up steps and `\` for
    /// down steps, highest row first. The empty path renders as an empty
    /// string.
    pub fn render_ascii(&self) -> String {
        let heights = self.heights();
        let rows = heights.iter().copied().max().unwrap_or(0) as usize;
        let mut grid = vec![vec![' '; self.steps.len()]; rows];
        for (x, s) in self.steps.iter().enumerate() {
            let (row, ch) = match s {
                Step::Up => (heights[x] as usize, '/'),
                Step::Down => (heights[x + 1] as usize, '\\'),
            };
            grid[row][x] = ch;
        }
        let mut out = String::new();
        for row in grid.iter().rev() {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Accepts either a step string over `{U, D}` or a code literal such as
/// `n=7;A=2,6;D=1,3`.
impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('=') {
            let code: AscentDescentCode = s.parse()?;
            return Ok(DyckPath::from_code(&code));
        }
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::InvalidStep(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Cumulative ascent and descent lengths of a Dyck path, with the final
/// total `n` omitted from both lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AscentDescentCode {
    n: usize,
    ascents: Vec<usize>,
    descents: Vec<usize>,
}

impl AscentDescentCode {
    /// Checks the validity conditions: equal lengths, both lists strictly
    /// increasing inside `1..=n-1`, and `A_i >= D_i`.
    pub fn new(n: usize, ascents: Vec<usize>, descents: Vec<usize>) -> Result<Self> {
        if ascents.len() != descents.len() {
            return Err(Error::CodeLengthMismatch {
                ascents: ascents.len(),
                descents: descents.len(),
            });
        }
        if let Some(i) = first_non_increasing(&ascents) {
            return Err(Error::AscentsNotIncreasing { index: i + 1 });
        }
        if let Some(i) = first_non_increasing(&descents) {
            return Err(Error::DescentsNotIncreasing { index: i + 1 });
        }
        let max = n.saturating_sub(1);
        if let Some(&value) = ascents
            .iter()
            .chain(&descents)
            .find(|&&v| v == 0 || v > max)
        {
            return Err(Error::CodeOutOfRange { value, max });
        }
        for (i, (&a, &d)) in ascents.iter().zip(&descents).enumerate() {
            if a < d {
                return Err(Error::AscentBelowDescent {
                    index: i + 1,
                    ascent: a,
                    descent: d,
                });
            }
        }
        Ok(AscentDescentCode {
            n,
            ascents,
            descents,
        })
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    pub fn ascents(&self) -> &[usize] {
        &self.ascents
    }

    pub fn descents(&self) -> &[usize] {
        &self.descents
    }

    /// Number of code entries, one less than the number of peaks.
    pub fn len(&self) -> usize {
        self.ascents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ascents.is_empty()
    }
}

fn first_non_increasing(xs: &[usize]) -> Option<usize> {
    xs.windows(2).position(|w| w[0] >= w[1]).map(|i| i + 1)
}

impl fmt::Display for AscentDescentCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "n={};A={};D={}",
            self.n,
            join(&self.ascents),
            join(&self.descents)
        )
    }
}

impl FromStr for AscentDescentCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedCode(s.to_string());
        let mut n = None;
        let mut ascents = None;
        let mut descents = None;
        for field in s.split(';') {
            let (key, value) = field.split_once('=').ok_or_else(malformed)?;
            let list = || -> Result<Vec<usize>> {
                value
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| Error::ParseInt(t.to_string())))
                    .collect()
            };
            match key.trim() {
                "n" => n = Some(value.trim().parse().map_err(|_| malformed())?),
                "A" => ascents = Some(list()?),
                "D" => descents = Some(list()?),
                _ => return Err(malformed()),
            }
        }
        let n = n.ok_or_else(malformed)?;
        AscentDescentCode::new(n, ascents.unwrap_or_default(), descents.unwrap_or_default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn code(n: usize, a: &[usize], d: &[usize]) -> AscentDescentCode {
        AscentDescentCode::new(n, a.to_vec(), d.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            DyckPath::new(vec![Step::Down, Step::Up]),
            Err(Error::BelowAxis { step: 1 })
        );
        assert_eq!(
            "UUD".parse::<DyckPath>(),
            Err(Error::Unbalanced { ups: 2, downs: 1 })
        );
        assert_eq!("UXD".parse::<DyckPath>(), Err(Error::InvalidStep('X')));
        assert_eq!("".parse::<DyckPath>(), Ok(DyckPath::empty()));
    }

    #[test]
    fn code_examples() {
        // ascent lengths 3,3,1 and descent lengths 2,1,4
        let p = path("UUUDDUUUDUDDDD");
        assert_eq!(p.to_code(), code(7, &[3, 6], &[2, 3]));

        assert!(DyckPath::pyramid(5).to_code().is_empty());
        assert_eq!(path("UUDUUDDD").to_code(), code(4, &[2], &[1]));
        assert_eq!(DyckPath::from_code(&code(4, &[2], &[1])), path("UUDUUDDD"));

        assert_eq!(
            DyckPath::from_code(&code(7, &[2, 6], &[1, 3])),
            path("UUDUUUUDDUDDDD")
        );
        assert_eq!(DyckPath::from_code(&code(3, &[], &[])), path("UUUDDD"));
        assert_eq!(DyckPath::from_code(&code(0, &[], &[])), DyckPath::empty());
        assert_eq!(
            DyckPath::zigzag(4).to_code(),
            code(4, &[1, 2, 3], &[1, 2, 3])
        );
    }

    #[test]
    fn code_rejections() {
        assert_eq!(
            AscentDescentCode::new(5, vec![2, 3], vec![3, 4]),
            Err(Error::AscentBelowDescent {
                index: 1,
                ascent: 2,
                descent: 3
            })
        );
        assert_eq!(
            AscentDescentCode::new(5, vec![3, 2], vec![1, 2]),
            Err(Error::AscentsNotIncreasing { index: 2 })
        );
        assert_eq!(
            AscentDescentCode::new(5, vec![2, 3], vec![2, 2]),
            Err(Error::DescentsNotIncreasing { index: 2 })
        );
        assert_eq!(
            AscentDescentCode::new(5, vec![5], vec![1]),
            Err(Error::CodeOutOfRange { value: 5, max: 4 })
        );
        assert_eq!(
            AscentDescentCode::new(5, vec![0], vec![0]),
            Err(Error::CodeOutOfRange { value: 0, max: 4 })
        );
        assert_eq!(
            AscentDescentCode::new(5, vec![2], vec![]),
            Err(Error::CodeLengthMismatch {
                ascents: 1,
                descents: 0
            })
        );
        assert!(AscentDescentCode::new(0, vec![1], vec![1]).is_err());
        assert!(AscentDescentCode::new(1, vec![], vec![]).is_ok());
    }

    #[test]
    fn code_literals() {
        let c: AscentDescentCode = "n=7;A=2,6;D=1,3".parse().unwrap();
        assert_eq!(c, code(7, &[2, 6], &[1, 3]));
        assert_eq!(c.to_string(), "n=7;A=2,6;D=1,3");
        assert_eq!(
            "n=3;A=;D=".parse::<AscentDescentCode>().unwrap(),
            code(3, &[], &[])
        );
        assert_eq!(code(3, &[], &[]).to_string(), "n=3;A=;D=");
        assert_eq!(
            "n=7;A=2,6;D=1,3".parse::<DyckPath>().unwrap(),
            path("UUDUUUUDDUDDDD")
        );
        assert!(matches!(
            "n=7;B=1".parse::<AscentDescentCode>(),
            Err(Error::MalformedCode(_))
        ));
        assert!(matches!(
            "A=1;D=1".parse::<AscentDescentCode>(),
            Err(Error::MalformedCode(_))
        ));
    }

    #[test]
    fn returns_and_components() {
        let p = path("UUUDDDUD");
        assert_eq!(p.returns(), vec![6, 8]);
        assert_eq!(p.irreducible_components(), vec![path("UUUDDD"), path("UD")]);
        assert!(!p.is_irreducible());
        assert_eq!(p.to_code(), code(4, &[3], &[3]));

        assert!(DyckPath::from_code(&code(7, &[3, 6], &[2, 3])).is_irreducible());
        assert!(path("UD").is_irreducible());
        assert!(DyckPath::empty().irreducible_components().is_empty());
        assert_eq!(path("UUDDUD").component_profile(), vec![2, 1]);
    }

    #[test]
    fn reverse_concat_lift() {
        assert_eq!(path("UUDDUD").reverse(), path("UDUUDD"));
        assert_eq!(DyckPath::pyramid(4).reverse(), DyckPath::pyramid(4));
        assert_eq!(path("UD").concat(&path("UUDD")), path("UDUUDD"));
        assert_eq!(path("UUDD").concat(&DyckPath::empty()), path("UUDD"));
        assert_eq!(path("UD").lift(), path("UUDD"));
        assert_eq!(path("UUDD").unlift(), Some(path("UD")));
        assert_eq!(path("UDUD").unlift(), None);
    }

    #[test]
    fn ascii_rendering() {
        assert_eq!(path("UUDD").render_ascii(), " /\\\n/  \\\n");
        assert_eq!(path("UDUD").render_ascii(), "/\\/\\\n");
        assert_eq!(DyckPath::empty().render_ascii(), "");
    }
}
