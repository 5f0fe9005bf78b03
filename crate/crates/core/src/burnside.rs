//! The orbit count over conjugacy classes of `Σ_{n-1}`:
//!
//! ```text
//! QG(n) = (1 / (n-1)!) · Σ_t a_t · Π_k c_{t^k}^{r_{t,k}}
//! ```
//!
//! where `t` ranges over cycle types of `Σ_{n-1}`, `a_t` is the class size,
//! and `c_{t^k}` is the centralizer order of the class of `σ^k`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycletype::{
    all_cycle_types, centralizer_of_parts, factorial, power_parts, ClassRecord, CycleType,
};
use crate::error::{Error, Result};

/// Number of `σ`-invariant transversals for any `σ` of cycle type `t`.
pub fn class_fix_count(t: &CycleType) -> BigUint {
    let mut memo = HashMap::new();
    fix_count_memo(t.parts(), &mut memo)
}

type Memo = HashMap<Vec<(u32, u32)>, BigUint>;

fn fix_count_memo(parts: &[(u32, u32)], memo: &mut Memo) -> BigUint {
    let mut acc = BigUint::one();
    for &(len, mult) in parts {
        let key = power_parts(parts, len as u64);
        let c = memo
            .entry(key)
            .or_insert_with_key(|k| centralizer_of_parts(k));
        acc *= c.pow(mult);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub n: usize,
    pub rows: Vec<ClassRecord>,
    pub total_sum: BigUint,
    pub qg: BigUint,
}

impl CensusTable {
    pub fn to_json(&self) -> CensusJson {
        CensusJson {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| RowJson {
                    partition: r.cycle_type.partition_string(),
                    r_tuple: r.cycle_type.r_tuple(),
                    representative: r.cycle_type.representative().to_cycle_string(),
                    a_t: r.class_size.to_string(),
                    c_t: r.centralizer.to_string(),
                    power_centralizers: r
                        .power_centralizers
                        .iter()
                        .map(BigUint::to_string)
                        .collect(),
                    fix_count: r.fix_count.to_string(),
                })
                .collect(),
            total_sum: self.total_sum.to_string(),
            qg: self.qg.to_string(),
        }
    }

    /// Aligned text table, one row per class, with a sum/quotient footer.
    pub fn to_text(&self) -> String {
        let header = [
            "class",
            "represent.",
            "a_t",
            "c_t",
            "r-tuple",
            "power centralizers",
            "fix",
        ];
        let body: Vec<[String; 7]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.cycle_type.partition_string(),
                    r.cycle_type.representative().to_cycle_string(),
                    r.class_size.to_string(),
                    r.centralizer.to_string(),
                    r.cycle_type.r_tuple_string(),
                    format!(
                        "({})",
                        r.power_centralizers
                            .iter()
                            .map(BigUint::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    r.fix_count.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let fmt_row = |cells: &[&str]| -> String {
            let line: Vec<String> = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            line.join(" | ").trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&fmt_row(&header));
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&rule.join("-+-"));
        out.push('\n');
        for row in &body {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            out.push_str(&fmt_row(&cells));
            out.push('\n');
        }
        out.push_str(&format!("n = {}\n", self.n));
        out.push_str(&format!("total = {}\n", self.total_sum));
        out.push_str(&format!("QG({}) = {}\n", self.n, self.qg));
        out
    }

    /// One line per class, header first.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("partition,r_tuple,representative,a_t,c_t,power_centralizers,fix_count\n");
        for r in &self.rows {
            let pc: Vec<String> = r
                .power_centralizers
                .iter()
                .map(BigUint::to_string)
                .collect();
            let rt: Vec<String> = r
                .cycle_type
                .r_tuple()
                .iter()
                .map(usize::to_string)
                .collect();
            out.push_str(&format!(
                "{},\"{}\",\"{}\",{},{},\"{}\",{}\n",
                r.cycle_type.partition_string(),
                rt.join(" "),
                r.cycle_type.representative().to_cycle_string(),
                r.class_size,
                r.centralizer,
                pc.join(" "),
                r.fix_count
            ));
        }
        out
    }
}

/// JSON shape of a [`CensusTable`]. Big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub n: usize,
    pub rows: Vec<RowJson>,
    pub total_sum: String,
    pub qg: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub partition: String,
    pub r_tuple: Vec<usize>,
    pub representative: String,
    pub a_t: String,
    pub c_t: String,
    pub power_centralizers: Vec<String>,
    pub fix_count: String,
}

/// Full per-class table for order `n`. Holds `p(n-1)` rows of `n-1`
/// big integers each, so it is meant for moderate `n`; use [`count`] for
/// the number alone.
pub fn census(n: usize) -> Result<CensusTable> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let m = n - 1;
    let rows: Vec<ClassRecord> = all_cycle_types(m)
        .par_iter()
        .map(ClassRecord::new)
        .collect();
    let total_sum: BigUint = rows.iter().map(|r| &r.class_size * &r.fix_count).sum();
    let (qg, rem) = total_sum.div_rem(&factorial(m));
    debug_assert!(rem.is_zero());
    Ok(CensusTable {
        n,
        rows,
        total_sum,
        qg,
    })
}

/// Burnside sum and quotient for order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Count {
    pub n: usize,
    pub classes: usize,
    pub total_sum: BigUint,
    pub qg: BigUint,
    /// `total_sum mod (n-1)!`; zero whenever the arithmetic is right.
    pub remainder: BigUint,
}

/// `QG(n)` without materializing the table. Classes are evaluated in
/// parallel on the current rayon pool; `progress` is called with
/// `(done, total)` as classes complete.
pub fn count_with_progress(
    n: usize,
    progress: Option<&(dyn Fn(usize, usize) + Sync)>,
) -> Result<Count> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let m = n - 1;
    let types = all_cycle_types(m);
    let total = types.len();
    let m_fact = factorial(m);
    let done = AtomicUsize::new(0);
    let step = (total / 100).max(1);

    let total_sum = types
        .par_chunks(256)
        .fold(
            || (BigUint::zero(), Memo::new()),
            |(mut acc, mut memo), chunk| {
                for t in chunk {
                    let fix = fix_count_memo(t.parts(), &mut memo);
                    let c_t = memo
                        .get(t.parts())
                        .cloned()
                        .unwrap_or_else(|| centralizer_of_parts(t.parts()));
                    acc += (&m_fact / c_t) * fix;
                }
                if let Some(cb) = progress {
                    let before = done.fetch_add(chunk.len(), Ordering::Relaxed);
                    let after = before + chunk.len();
                    if after / step != before / step || after == total {
                        cb(after, total);
                    }
                }
                (acc, memo)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(BigUint::zero, |a, b| a + b);

    let (qg, remainder) = total_sum.div_rem(&m_fact);
    Ok(Count {
        n,
        classes: total,
        total_sum,
        qg,
        remainder,
    })
}

pub fn count(n: usize) -> Result<Count> {
    count_with_progress(n, None)
}

/// `(n, QG(n))` for `n = 1..=n_max`.
pub fn sequence(n_max: usize) -> Result<Vec<(usize, BigUint)>> {
    if n_max == 0 {
        return Err(Error::ZeroOrder);
    }
    (1..=n_max).map(|n| Ok((n, count(n)?.qg))).collect()
}
