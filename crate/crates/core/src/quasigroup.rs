//! Right quasigroups with identity as Cayley tables, and their
//! correspondence with right transversals of `Σ_{n-1}` in `Σ_n`.
//!
//! Elements are `1..=n` and the identity is always `n`. Entry `(i, j)` of a
//! table is `x_i ∘ x_j`. Every column is a permutation of `1..=n`; column `j`
//! sends `n` to `j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, SymmetricGroup};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    // row-major, 0-based entries
    cells: Vec<u32>,
}

impl CayleyTable {
    /// Checks the right-quasigroup axiom column by column, then the identity
    /// axiom, and reports the first violation.
    pub fn validate(rows: &[Vec<usize>]) -> Result<CayleyTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > n {
                    return Err(Error::EntryOutOfRange {
                        row: i + 1,
                        column: j + 1,
                        entry: e,
                        n,
                    });
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in rows {
                let e = row[j];
                if std::mem::replace(&mut seen[e - 1], true) {
                    return Err(Error::ColumnNotBijective {
                        column: j + 1,
                        entry: e,
                    });
                }
            }
        }
        for (j, &e) in rows[n - 1].iter().enumerate() {
            if e != j + 1 {
                return Err(Error::IdentityAxiom {
                    row: n,
                    column: j + 1,
                    expected: j + 1,
                    found: e,
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row[n - 1] != i + 1 {
                return Err(Error::IdentityAxiom {
                    row: i + 1,
                    column: n,
                    expected: i + 1,
                    found: row[n - 1],
                });
            }
        }
        let cells = rows.iter().flatten().map(|&e| (e - 1) as u32).collect();
        Ok(CayleyTable { n, cells })
    }

    /// Trusted constructor for 0-based row-major cells already known valid.
    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        CayleyTable { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x_i ∘ x_j`, 1-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[(i - 1) * self.n + (j - 1)] as usize + 1
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.n)
            .map(|r| r.iter().map(|&e| e as usize + 1).collect())
            .collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n;
        (1..=n).all(|a| {
            (1..=n).all(|b| {
                (1..=n).all(|c| self.get(self.get(a, b), c) == self.get(a, self.get(b, c)))
            })
        })
    }

    /// Transports the structure along `s`, a permutation of `1..=n` fixing
    /// `n`: entry `(i^s, j^s)` of the result is `(x_i ∘ x_j)^s`.
    pub fn relabel(&self, s: &Permutation) -> Result<CayleyTable> {
        let n = self.n;
        if s.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: s.degree(),
            });
        }
        if s.apply(n) != n {
            return Err(Error::NotAPermutation(
                "relabeling must fix the identity".into(),
            ));
        }
        let mut cells = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let e = self.cells[i * n + j] as usize;
                cells[s.apply0(i) * n + s.apply0(j)] = s.apply0(e) as u32;
            }
        }
        Ok(CayleyTable { n, cells })
    }

    /// Column `i` read as a permutation: `j^{σ_i} = x_j ∘ x_i`.
    pub fn column(&self, i: usize) -> Permutation {
        let n = self.n;
        Permutation::from_zero_based((0..n).map(|j| self.cells[j * n + (i - 1)]).collect())
    }

    /// The canonical transversal: `σ_i` is column `i`.
    pub fn to_transversal(&self) -> Transversal {
        Transversal {
            n: self.n,
            perms: (1..=self.n).map(|i| self.column(i)).collect(),
        }
    }

    /// Induced structure on a transversal: `x_i ∘ x_j = n^{σ_i σ_j}`.
    pub fn from_transversal(t: &Transversal) -> CayleyTable {
        let n = t.n;
        let mut cells = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = t.perms[i].compose(&t.perms[j]).expect("equal degrees");
                cells[i * n + j] = prod.apply0(n - 1) as u32;
            }
        }
        CayleyTable { n, cells }
    }

    /// Plain text: the order on the first line, then `n` rows.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<CayleyTable> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table file".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("line 1: expected the order, found {header:?}")))?;
        let rows = lines
            .enumerate()
            .map(|(i, l)| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("row {}: bad entry {t:?}", i + 1)))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        CayleyTable::validate(&rows)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            n: self.n,
            table: self.rows(),
        }
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable{:?}", self.rows())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

/// `n` coset representatives of `Σ_{n-1}` in `Σ_n` with `n^{σ_i} = i` and
/// `σ_n = id`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    n: usize,
    perms: Vec<Permutation>,
}

impl Transversal {
    pub fn new(perms: Vec<Permutation>) -> Result<Transversal> {
        let n = perms.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        for (idx, p) in perms.iter().enumerate() {
            let i = idx + 1;
            if p.degree() != n {
                return Err(Error::InvalidTransversal(format!(
                    "sigma_{i} has degree {}, expected {n}",
                    p.degree()
                )));
            }
            if p.apply(n) != i {
                return Err(Error::InvalidTransversal(format!(
                    "sigma_{i} sends {n} to {}, expected {i}",
                    p.apply(n)
                )));
            }
        }
        if !perms[n - 1].is_identity() {
            return Err(Error::InvalidTransversal(format!(
                "sigma_{n} is not the identity"
            )));
        }
        Ok(Transversal { n, perms })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// `σ_i`, 1-based.
    pub fn get(&self, i: usize) -> &Permutation {
        &self.perms[i - 1]
    }

    /// `{σ_i^s}`, re-indexed so that position `i^s` holds `σ_i^s`.
    pub fn conjugate(&self, s: &Permutation) -> Result<Transversal> {
        if s.degree() != self.n || s.apply(self.n) != self.n {
            return Err(Error::InvalidTransversal(
                "conjugating element must lie in the stabilizer of n".into(),
            ));
        }
        let mut perms = vec![Permutation::identity(self.n); self.n];
        for (idx, p) in self.perms.iter().enumerate() {
            perms[s.apply0(idx)] = p.conjugate(s)?;
        }
        Transversal::new(perms)
    }

    /// Header line `transversal n`, then one one-line permutation per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("transversal {}\n", self.n);
        for p in &self.perms {
            out.push_str(&p.to_one_line());
            out.push('\n');
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<Transversal> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty transversal file".into()))?;
        let n: usize = header
            .strip_prefix("transversal")
            .map(str::trim)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| {
                Error::Parse(format!(
                    "line 1: expected 'transversal N', found {header:?}"
                ))
            })?;
        let perms = lines
            .map(|l| {
                if l.starts_with('(') {
                    Permutation::parse_cycles(n, l)
                } else {
                    l.parse()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if perms.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} permutations, found {}",
                perms.len()
            )));
        }
        Transversal::new(perms)
    }

    pub fn to_json(&self) -> TransversalJson {
        TransversalJson {
            n: self.n,
            transversal: self.perms.iter().map(Permutation::to_one_line).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalJson {
    pub n: usize,
    pub transversal: Vec<String>,
}

/// Either file shape, recognized from content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Table(CayleyTable),
    Transversal(Transversal),
}

impl Structure {
    /// Accepts the text or JSON form of a table or a transversal.
    pub fn parse(content: &str) -> Result<Structure> {
        let trimmed = content.trim_start();
        if trimmed.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            if value.get("table").is_some() {
                let tj: TableJson =
                    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
                let t = CayleyTable::validate(&tj.table)?;
                if t.order() != tj.n {
                    return Err(Error::OrderMismatch(tj.n, t.order()));
                }
                return Ok(Structure::Table(t));
            }
            if value.get("transversal").is_some() {
                let tj: TransversalJson =
                    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
                let perms = tj
                    .transversal
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<_>>>()?;
                let t = Transversal::new(perms)?;
                if t.order() != tj.n {
                    return Err(Error::OrderMismatch(tj.n, t.order()));
                }
                return Ok(Structure::Transversal(t));
            }
            return Err(Error::Parse(
                "JSON must have a 'table' or 'transversal' field".into(),
            ));
        }
        if trimmed.starts_with("transversal") {
            return Transversal::parse_text(content).map(Structure::Transversal);
        }
        CayleyTable::parse_text(content).map(Structure::Table)
    }

    pub fn into_table(self) -> CayleyTable {
        match self {
            Structure::Table(t) => t,
            Structure::Transversal(t) => CayleyTable::from_transversal(&t),
        }
    }
}

/// A bijection `f` fixing `n` with `f(x ∘_a y) = f(x) ∘_b f(y)`, found by
/// backtracking over images of `1, 2, …` with pruning on every fully
/// assigned cell. Returns the lexicographically smallest witness.
pub fn isomorphic_by_bijection(a: &CayleyTable, b: &CayleyTable) -> Option<Permutation> {
    if a.n != b.n {
        return None;
    }
    let n = a.n;
    const UNSET: u32 = u32::MAX;
    let mut f = vec![UNSET; n];
    let mut used = vec![false; n];
    f[n - 1] = (n - 1) as u32;
    used[n - 1] = true;

    // Cells whose row, column and value are all assigned once figure k is.
    fn consistent(a: &CayleyTable, b: &CayleyTable, f: &[u32], k: usize) -> bool {
        let n = a.n;
        let assigned = |x: usize| x == n - 1 || x <= k;
        for i in (0..=k).chain(std::iter::once(n - 1)) {
            for j in (0..=k).chain(std::iter::once(n - 1)) {
                if i != k && j != k {
                    let v = a.cells[i * n + j] as usize;
                    // already checked unless the value just became assigned
                    if v != k {
                        continue;
                    }
                }
                let v = a.cells[i * n + j] as usize;
                if !assigned(v) {
                    continue;
                }
                let (fi, fj, fv) = (f[i] as usize, f[j] as usize, f[v]);
                if b.cells[fi * n + fj] != fv {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        a: &CayleyTable,
        b: &CayleyTable,
        f: &mut [u32],
        used: &mut [bool],
        k: usize,
    ) -> bool {
        let n = a.n;
        if k + 1 >= n {
            return true;
        }
        for img in 0..n - 1 {
            if used[img] {
                continue;
            }
            f[k] = img as u32;
            used[img] = true;
            if consistent(a, b, f, k) && search(a, b, f, used, k + 1) {
                return true;
            }
            used[img] = false;
        }
        f[k] = u32::MAX;
        false
    }

    // cells involving only the identity
    let e = n - 1;
    if b.cells[e * n + e] != f[a.cells[e * n + e] as usize] {
        return None;
    }
    if search(a, b, &mut f, &mut used, 0) {
        Some(Permutation::from_zero_based(f))
    } else {
        None
    }
}

/// A `σ ∈ Σ_{n-1}` (fixing `n`) with `σ⁻¹ σ_i^a σ = σ_{i^σ}^b` for every `i`,
/// where `σ^a`, `σ^b` are the canonical transversals. Scans `Σ_{n-1}` in
/// lexicographic order.
pub fn isomorphic_by_conjugation(a: &CayleyTable, b: &CayleyTable) -> Option<Permutation> {
    if a.n != b.n {
        return None;
    }
    let n = a.n;
    let ta = a.to_transversal();
    let tb = b.to_transversal();
    SymmetricGroup::new(n - 1)
        .map(|s| s.extend_to(n))
        .find(|s| {
            (1..=n).all(|i| ta.get(i).conjugate(s).expect("equal degrees") == *tb.get(s.apply(i)))
        })
}
