//! Permutations of `{1..m}` under the right-action convention.
//!
//! Figures are 1-based at the public surface. Composition reads left to
//! right: `j^(p*q) = (j^p)^q`, so [`Permutation::compose`] applies `p` first.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; images[j] is the image of figure j + 1, minus one.
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m as u32).collect(),
        }
    }

    /// Builds a permutation from its one-line form, 1-based.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &img in images {
            if img == 0 || img > m {
                return Err(Error::NotAPermutation(format!(
                    "image {img} outside 1..={m}"
                )));
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotAPermutation(format!("image {img} repeated")));
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `m` from disjoint cycles over `1..=m`.
    /// Figures not mentioned are fixed.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..m as u32).collect();
        let mut used = vec![false; m];
        for cycle in cycles {
            for (idx, &fig) in cycle.iter().enumerate() {
                if fig == 0 || fig > m {
                    return Err(Error::NotAPermutation(format!(
                        "figure {fig} outside 1..={m}"
                    )));
                }
                if std::mem::replace(&mut used[fig - 1], true) {
                    return Err(Error::NotAPermutation(format!(
                        "figure {fig} appears in more than one cycle position"
                    )));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                images[fig - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i as u32 == v)
        });
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of figure `j` (1-based).
    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, j: usize) -> usize {
        self.images[j] as usize
    }

    pub(crate) fn zero_based(&self) -> &[u32] {
        &self.images
    }

    /// One-line form, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `j^result = (j^self)^other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: self
                .images
                .iter()
                .map(|&j| other.images[j as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `s⁻¹ · self · s`, so that `(j^s)^result = (j^self)^s`.
    pub fn conjugate(&self, s: &Permutation) -> Result<Permutation> {
        self.check_degree(s)?;
        let mut out = vec![0u32; self.degree()];
        for (j, &pj) in self.images.iter().enumerate() {
            out[s.images[j] as usize] = s.images[pj as usize];
        }
        Ok(Permutation { images: out })
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// figure, sorted by that figure.
    pub fn cycle_decomposition(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut cycles = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycle_decomposition().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u128 {
        self.cycle_decomposition()
            .iter()
            .fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }

    pub fn power(&self, k: u64) -> Permutation {
        // Walk each cycle once; the k-th successor of position i is i + k mod len.
        let mut out = vec![0u32; self.degree()];
        for cycle in self.cycle_decomposition() {
            let len = cycle.len();
            let shift = (k % len as u64) as usize;
            for (i, &fig) in cycle.iter().enumerate() {
                out[fig - 1] = (cycle[(i + shift) % len] - 1) as u32;
            }
        }
        Permutation { images: out }
    }

    /// Embeds into degree `m` by fixing every figure above the current degree.
    pub fn extend_to(&self, m: usize) -> Permutation {
        assert!(m >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..m as u32);
        Permutation { images }
    }

    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycle_decomposition() {
            if cycle.len() < 2 {
                continue;
            }
            out.push('(');
            let figs: Vec<String> = cycle.iter().map(usize::to_string).collect();
            out.push_str(&figs.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    pub fn to_one_line(&self) -> String {
        let figs: Vec<String> = self.images().iter().map(usize::to_string).collect();
        figs.join(" ")
    }

    /// Parses cycle notation. Degree is explicit since cycles omit fixed points.
    pub fn parse_cycles(m: usize, s: &str) -> Result<Permutation> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation: {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad figure {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(m, &cycles)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]", self.to_one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line())
    }
}

/// Parses one-line notation such as `"2 1 4 5 3"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad image {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Permutation::from_images(&images)
    }
}

/// Lexicographic enumeration of `Σ_m` in one-line form.
pub struct SymmetricGroup {
    next: Option<Vec<u32>>,
}

impl SymmetricGroup {
    pub fn new(m: usize) -> Self {
        SymmetricGroup {
            next: Some((0..m as u32).collect()),
        }
    }
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lex(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
