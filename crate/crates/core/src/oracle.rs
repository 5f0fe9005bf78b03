//! Brute-force ground truth at small orders: every right quasigroup with
//! identity of order `n ≤ 5`, its orbits under relabeling by `Σ_{n-1}`, and
//! direct fixed-point counts.
//!
//! Nothing here goes through cycle types or the class sum; tables are plain
//! byte arrays and the action is applied cell by cell.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, SymmetricGroup};
use crate::quasigroup::CayleyTable;

/// Largest order enumerated without an explicit override. Order 6 already
/// has about 2.5e10 tables.
pub const DEFAULT_ORACLE_BOUND: usize = 5;

/// Orders beyond this are refused even with the override: table keys are
/// base-`n` strings of the `(n-1)^2` free cells and must fit in a `u128`.
const HARD_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub bound: usize,
    /// Skip the bound check ("I know what I am doing").
    pub force: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bound: DEFAULT_ORACLE_BOUND,
            force: false,
        }
    }
}

impl OracleConfig {
    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if n > self.bound && !self.force {
            return Err(Error::OracleBound {
                n,
                bound: self.bound,
            });
        }
        if n > HARD_LIMIT {
            return Err(Error::OracleBound {
                n,
                bound: HARD_LIMIT,
            });
        }
        Ok(())
    }
}

/// The set of all tables of one order, indexed in enumeration order:
/// columns left to right, column 1 most significant, each column's
/// permutations in lexicographic order.
#[derive(Clone, Debug)]
pub struct TableSpace {
    n: usize,
    // options[j] lists the possible rows-0..n-2 contents of column j, 0-based
    options: Vec<Vec<Vec<u8>>>,
    len: u64,
}

impl TableSpace {
    pub fn new(n: usize, config: OracleConfig) -> Result<TableSpace> {
        config.check(n)?;
        let options: Vec<Vec<Vec<u8>>> = (0..n - 1)
            .map(|j| {
                SymmetricGroup::new(n)
                    .filter(|p| p.apply0(n - 1) == j)
                    .map(|p| p.zero_based()[..n - 1].iter().map(|&v| v as u8).collect())
                    .collect()
            })
            .collect();
        let len = options.iter().map(|o| o.len() as u64).product();
        Ok(TableSpace { n, options, len })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Row-major 0-based cells of the table at `index`.
    fn cells_at(&self, mut index: u64) -> Vec<u8> {
        let n = self.n;
        let mut cells = vec![0u8; n * n];
        for j in (0..n - 1).rev() {
            let radix = self.options[j].len() as u64;
            let col = &self.options[j][(index % radix) as usize];
            index /= radix;
            for (i, &v) in col.iter().enumerate() {
                cells[i * n + j] = v;
            }
        }
        for k in 0..n {
            cells[(n - 1) * n + k] = k as u8;
            cells[k * n + (n - 1)] = k as u8;
        }
        cells
    }

    pub fn table_at(&self, index: u64) -> CayleyTable {
        let cells = self.cells_at(index).into_iter().map(u32::from).collect();
        CayleyTable::from_cells_unchecked(self.n, cells)
    }

    pub fn iter(&self) -> impl Iterator<Item = CayleyTable> + '_ {
        (0..self.len).map(move |i| self.table_at(i))
    }
}

pub fn enumerate_tables(n: usize) -> Result<TableSpace> {
    TableSpace::new(n, OracleConfig::default())
}

/// Base-`n` digit string of the free cells (rows and columns `1..n-1`).
fn key(cells: &[u8], n: usize) -> u128 {
    let mut k = 0u128;
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            k = k * n as u128 + cells[i * n + j] as u128;
        }
    }
    k
}

/// `out[i^s][j^s] = (cells[i][j])^s`, with `s` 0-based on `0..n`.
fn act(cells: &[u8], s: &[u8], n: usize, out: &mut [u8]) {
    for i in 0..n {
        for j in 0..n {
            out[s[i] as usize * n + s[j] as usize] = s[cells[i * n + j] as usize];
        }
    }
}

/// `Σ_{n-1}` embedded in `Σ_n`, as 0-based image arrays.
fn stabilizer_of_last(n: usize) -> Vec<Vec<u8>> {
    SymmetricGroup::new(n - 1)
        .map(|p| {
            let mut v: Vec<u8> = p.zero_based().iter().map(|&x| x as u8).collect();
            v.push((n - 1) as u8);
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    pub n: usize,
    pub total_structures: BigUint,
    pub orbit_count: BigUint,
    /// orbit size → number of orbits of that size
    pub orbit_sizes: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCensusJson {
    pub n: usize,
    pub total_structures: String,
    pub orbit_count: String,
    pub orbit_size_histogram: BTreeMap<String, u64>,
}

impl OrbitCensus {
    pub fn to_json(&self) -> OrbitCensusJson {
        OrbitCensusJson {
            n: self.n,
            total_structures: self.total_structures.to_string(),
            orbit_count: self.orbit_count.to_string(),
            orbit_size_histogram: self
                .orbit_sizes
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
        }
    }
}

/// Orbits of the relabeling action. A table is an orbit's representative
/// when its key is the least among all its images; each orbit has exactly
/// one, and its size is `(n-1)! / |stabilizer|`.
pub fn orbit_count_with(n: usize, config: OracleConfig) -> Result<OrbitCensus> {
    let space = TableSpace::new(n, config)?;
    let group = stabilizer_of_last(n);
    let group_order = group.len() as u64;

    let sizes = (0..space.len())
        .into_par_iter()
        .fold(BTreeMap::<u64, u64>::new, |mut hist, idx| {
            let cells = space.cells_at(idx);
            let own = key(&cells, n);
            let mut image = vec![0u8; n * n];
            let mut stabilizer = 0u64;
            let mut is_min = true;
            for s in &group {
                act(&cells, s, n, &mut image);
                let k = key(&image, n);
                if k < own {
                    is_min = false;
                    break;
                }
                if k == own {
                    stabilizer += 1;
                }
            }
            if is_min {
                *hist.entry(group_order / stabilizer).or_default() += 1;
            }
            hist
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let orbit_count: u64 = sizes.values().sum();
    Ok(OrbitCensus {
        n,
        total_structures: BigUint::from(space.len()),
        orbit_count: BigUint::from(orbit_count),
        orbit_sizes: sizes,
    })
}

pub fn orbit_count(n: usize) -> Result<OrbitCensus> {
    orbit_count_with(n, OracleConfig::default())
}

/// Number of tables of order `n` left unchanged by relabeling with `sigma`,
/// a permutation of `1..=n-1` (extended to fix `n`).
pub fn direct_fix_count_with(
    sigma: &Permutation,
    n: usize,
    config: OracleConfig,
) -> Result<BigUint> {
    let space = TableSpace::new(n, config)?;
    if sigma.degree() != n - 1 {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: n - 1,
        });
    }
    let mut s: Vec<u8> = sigma.zero_based().iter().map(|&x| x as u8).collect();
    s.push((n - 1) as u8);
    let fixed = (0..space.len())
        .into_par_iter()
        .filter(|&idx| {
            let cells = space.cells_at(idx);
            let mut image = vec![0u8; n * n];
            act(&cells, &s, n, &mut image);
            image == cells
        })
        .count();
    Ok(BigUint::from(fixed))
}

pub fn direct_fix_count(sigma: &Permutation, n: usize) -> Result<BigUint> {
    direct_fix_count_with(sigma, n, OracleConfig::default())
}
