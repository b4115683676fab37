//! Permutations in one-line notation and their Rothe diagrams.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::ExpVec;

/// An element of the symmetric group S_n, stored as the one-line word
/// `w(1) w(2) ... w(n)` with values `1..=n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates and wraps a one-line word.
    pub fn from_one_line(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::MalformedPermutation("empty word".into()));
        }
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v > n {
                return Err(Error::MalformedPermutation(format!(
                    "entry {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::MalformedPermutation(format!("entry {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree("degree must be at least 1".into()));
        }
        Ok(Permutation {
            word: (1..=n).collect(),
        })
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest_element(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree("degree must be at least 1".into()));
        }
        Ok(Permutation {
            word: (1..=n).rev().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Entry `i` counts the `j > i` with `w(j) < w(i)`; width `n`.
    pub fn lehmer_code(&self) -> ExpVec {
        let n = self.n();
        let mut code = vec![0u32; n];
        for i in 0..n {
            code[i] = self.word[i + 1..]
                .iter()
                .filter(|&&v| v < self.word[i])
                .count() as u32;
        }
        ExpVec::new(code)
    }

    /// 1-based positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.word[i - 1] < self.word[i])
    }

    /// `w * s_i`: swaps positions `i` and `i+1` of the word (1-based).
    pub fn right_multiply_adjacent(&self, i: usize) -> Result<Self> {
        if i < 1 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n().saturating_sub(1),
            });
        }
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Ok(Permutation { word })
    }

    /// The image of `w` under `S_n -> S_m`, appending fixed points.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.n() {
            return Err(Error::InvalidDegree(format!(
                "cannot embed S_{} into S_{m}",
                self.n()
            )));
        }
        let mut word = self.word.clone();
        word.extend(self.n() + 1..=m);
        Ok(Permutation { word })
    }

    /// Cells `(i, j)` with `w(i) > j` and `w^{-1}(j) > i`.
    pub fn rothe_diagram(&self) -> Diagram {
        let n = self.n();
        let inv = self.inverse();
        let mut cells = BTreeSet::new();
        for i in 1..=n {
            for j in 1..self.at(i) {
                if inv.at(j) > i {
                    cells.insert((i, j));
                }
            }
        }
        Diagram { n, cells }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts the comma-free digit form `"143562"` (n <= 9) and the
    /// comma-separated form `"1,4,3,5,6,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::MalformedPermutation("empty input".into()));
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::MalformedPermutation(format!("bad entry {p:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .map(|d| d as usize)
                        .ok_or_else(|| {
                            Error::MalformedPermutation(format!("bad character {c:?}"))
                        })
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(word)
    }
}

/// Lexicographic stream over all of S_n.
pub fn iterate_sn(n: usize) -> Sn {
    Sn {
        next: if n == 0 {
            None
        } else {
            Some((1..=n).collect())
        },
    }
}

pub struct Sn {
    next: Option<Vec<usize>>,
}

impl Iterator for Sn {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.next.take()?;
        let mut succ = word.clone();
        self.next = next_permutation(&mut succ).then_some(succ);
        Some(Permutation { word })
    }
}

/// Advances to the lexicographic successor in place; false once exhausted.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(k) = (0..a.len() - 1).rev().find(|&k| a[k] < a[k + 1]) else {
        return false;
    };
    let l = (k + 1..a.len()).rev().find(|&l| a[l] > a[k]).unwrap();
    a.swap(k, l);
    a[k + 1..].reverse();
    true
}

/// A finite set of matrix cells `(row, col)` inside an `n x n` box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    n: usize,
    cells: BTreeSet<(usize, usize)>,
}

impl Diagram {
    pub fn from_cells(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        for &(r, c) in &cells {
            if r < 1 || c < 1 || r > n || c > n {
                return Err(Error::IndexOutOfRange {
                    index: r.max(c),
                    bound: n,
                });
            }
        }
        Ok(Diagram { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&(row, col))
    }

    /// Fills every column upward: `(i, j)` is present when some `(i', j)`
    /// with `i' >= i` is. Idempotent and contains `self`.
    pub fn north_closure(&self) -> Diagram {
        let mut cells = BTreeSet::new();
        let mut deepest = vec![0usize; self.n + 1];
        for &(r, c) in &self.cells {
            deepest[c] = deepest[c].max(r);
        }
        for (c, &depth) in deepest.iter().enumerate() {
            for r in 1..=depth {
                cells.insert((r, c));
            }
        }
        Diagram { n: self.n, cells }
    }

    /// Row-count vector of width `n`.
    pub fn weight(&self) -> ExpVec {
        let mut rows = vec![0u32; self.n];
        for &(r, _) in &self.cells {
            rows[r - 1] += 1;
        }
        ExpVec::new(rows)
    }
}
