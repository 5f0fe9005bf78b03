//! Conjugacy classes of `Σ_m` by cycle type: class sizes, centralizer
//! orders and the class power map.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A conjugacy class of `Σ_m`, stored sparsely as `(cycle length, count)`
/// pairs with increasing length and nonzero count.
///
/// Ordering is lexicographic on the dense r-tuple `(r_1, …, r_m)`,
/// descending, so the identity class comes first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    m: usize,
    parts: Vec<(u32, u32)>,
}

impl CycleType {
    /// From a dense r-tuple; the degree is its length.
    pub fn from_r(r: &[usize]) -> Result<Self> {
        let m = r.len();
        let total: usize = r.iter().enumerate().map(|(i, &c)| (i + 1) * c).sum();
        if total != m {
            return Err(Error::InvalidCycleType(format!(
                "sum of k*r_k is {total}, expected {m}"
            )));
        }
        let parts = r
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32 + 1, c as u32))
            .collect();
        Ok(CycleType { m, parts })
    }

    /// From a list of cycle lengths in any order.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(Error::InvalidCycleType("zero-length cycle".into()));
        }
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &l in lengths {
            *counts.entry(l as u32).or_default() += 1;
        }
        Ok(CycleType {
            m: lengths.iter().sum(),
            parts: counts.into_iter().collect(),
        })
    }

    pub fn of(p: &Permutation) -> Self {
        CycleType::from_lengths(&p.cycle_lengths()).expect("cycle lengths are positive")
    }

    pub fn identity(m: usize) -> Self {
        CycleType {
            m,
            parts: if m == 0 { vec![] } else { vec![(1, m as u32)] },
        }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// `(length, multiplicity)` pairs, increasing length.
    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// `r_k` for `k ≥ 1`.
    pub fn r(&self, k: usize) -> usize {
        self.parts
            .iter()
            .find(|&&(l, _)| l as usize == k)
            .map_or(0, |&(_, c)| c as usize)
    }

    /// Dense `(r_1, …, r_m)`.
    pub fn r_tuple(&self) -> Vec<usize> {
        let mut r = vec![0; self.m];
        for &(l, c) in &self.parts {
            r[l as usize - 1] = c as usize;
        }
        r
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&(l, _)| l == 1)
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.parts
            .iter()
            .fold(1u128, |acc, &(l, _)| acc.lcm(&(l as u128)))
    }

    /// `|C(σ)| = Π_k k^{r_k} · r_k!`.
    pub fn centralizer_order(&self) -> BigUint {
        centralizer_of_parts(&self.parts)
    }

    /// `m! / |C(σ)|`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.m) / self.centralizer_order()
    }

    /// Class of `σ^k`: a cycle of length `l` splits into `gcd(l, k)` cycles of
    /// length `l / gcd(l, k)`.
    pub fn power_type(&self, k: u64) -> CycleType {
        assert!(k >= 1, "power_type exponent must be positive");
        CycleType {
            m: self.m,
            parts: power_parts(&self.parts, k),
        }
    }

    /// Cycles filled over `1..m` in increasing length order.
    pub fn representative(&self) -> Permutation {
        let mut images: Vec<u32> = Vec::with_capacity(self.m);
        let mut next = 0u32;
        for &(l, c) in &self.parts {
            for _ in 0..c {
                for i in 0..l {
                    images.push(next + (i + 1) % l);
                }
                next += l;
            }
        }
        Permutation::from_zero_based(images)
    }

    /// Partition string with parts ascending, e.g. `1+1+3`. The empty
    /// partition of 0 prints as `0`.
    pub fn partition_string(&self) -> String {
        if self.parts.is_empty() {
            return "0".into();
        }
        let mut out = Vec::new();
        for &(l, c) in &self.parts {
            for _ in 0..c {
                out.push(l.to_string());
            }
        }
        out.join("+")
    }

    pub fn r_tuple_string(&self) -> String {
        let r: Vec<String> = self.r_tuple().iter().map(usize::to_string).collect();
        format!("({})", r.join(","))
    }

    /// Parses either a partition string (`1+1+3`) or an r-tuple (`(2,0,1)`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed r-tuple {s:?}")))?;
            let r = inner
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad r-tuple entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return CycleType::from_r(&r);
        }
        if s == "0" {
            return Ok(CycleType::identity(0));
        }
        let lengths = s
            .split('+')
            .map(str::trim)
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::from_lengths(&lengths)
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        // Descending lexicographic on the dense r-tuple.
        self.m.cmp(&other.m).then_with(|| {
            for (a, b) in self.parts.iter().zip(&other.parts) {
                let ord = match a.0.cmp(&b.0) {
                    // a has a nonzero entry where b has zero
                    Ordering::Less => Ordering::Less,
                    Ordering::Greater => Ordering::Greater,
                    Ordering::Equal => b.1.cmp(&a.1),
                };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            other.parts.len().cmp(&self.parts.len())
        })
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{}", self.r_tuple_string())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.partition_string())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CycleType::parse(s)
    }
}

pub(crate) fn power_parts(parts: &[(u32, u32)], k: u64) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(parts.len() + 1);
    for &(l, c) in parts {
        let g = (l as u64).gcd(&k) as u32;
        let len = l / g;
        let count = c * g;
        match out.iter_mut().find(|(ol, _)| *ol == len) {
            Some(entry) => entry.1 += count,
            None => out.push((len, count)),
        }
    }
    out.sort_unstable_by_key(|&(l, _)| l);
    out
}

pub(crate) fn centralizer_of_parts(parts: &[(u32, u32)]) -> BigUint {
    let mut acc = BigUint::one();
    for &(l, c) in parts {
        if l > 1 {
            acc *= BigUint::from(l).pow(c);
        }
        acc *= factorial(c as usize);
    }
    acc
}

pub fn factorial(m: usize) -> BigUint {
    (2..=m as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Every cycle type of `Σ_m`, in descending lexicographic order of r-tuple.
pub fn all_cycle_types(m: usize) -> Vec<CycleType> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_types(m, 1, m, &mut stack, &mut out);
    out
}

fn gen_types(
    m: usize,
    k: usize,
    remaining: usize,
    stack: &mut Vec<(u32, u32)>,
    out: &mut Vec<CycleType>,
) {
    if remaining == 0 {
        out.push(CycleType {
            m,
            parts: stack.clone(),
        });
        return;
    }
    if k > remaining {
        return;
    }
    // r_k from largest to smallest; the leftover must be fillable by parts > k.
    for count in (0..=remaining / k).rev() {
        let rest = remaining - count * k;
        if rest != 0 && rest < k + 1 {
            continue;
        }
        if count > 0 {
            stack.push((k as u32, count as u32));
        }
        gen_types(m, k + 1, rest, stack, out);
        if count > 0 {
            stack.pop();
        }
    }
}

/// One row of the class sum: the class, its size, its centralizer order,
/// centralizer orders of all power classes, and the fixed-transversal count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub cycle_type: CycleType,
    pub class_size: BigUint,
    pub centralizer: BigUint,
    /// `(c_{t^1}, …, c_{t^m})`.
    pub power_centralizers: Vec<BigUint>,
    pub fix_count: BigUint,
}

impl ClassRecord {
    pub fn new(t: &CycleType) -> Self {
        let m = t.degree();
        let power_centralizers: Vec<BigUint> = (1..=m as u64)
            .map(|k| t.power_type(k).centralizer_order())
            .collect();
        let fix_count = power_centralizers
            .iter()
            .enumerate()
            .fold(BigUint::one(), |acc, (i, c)| acc * c.pow(t.r(i + 1) as u32));
        let centralizer = t.centralizer_order();
        ClassRecord {
            cycle_type: t.clone(),
            class_size: factorial(m) / &centralizer,
            centralizer,
            power_centralizers,
            fix_count,
        }
    }
}
