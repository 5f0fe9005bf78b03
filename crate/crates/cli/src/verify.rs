//! Oracle cross-checks behind `qgcount verify`.

use qgcount::oracle::{direct_fix_count_with, orbit_count_with, OracleConfig, TableSpace};
use qgcount::perm::SymmetricGroup;
use qgcount::{
    all_cycle_types, class_fix_count, count, isomorphic_by_bijection, isomorphic_by_conjugation,
    CayleyTable, Error, Permutation,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

const ISO_PAIRS: usize = 1000;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "passed": self.all_passed(),
            "checks": self.checks,
        })
    }
}

pub fn run(n: usize, config: OracleConfig, seed: u64) -> Result<Report, Error> {
    let space = TableSpace::new(n, config)?;
    let mut checks = Vec::new();

    let oracle = orbit_count_with(n, config)?;
    let formula = count(n)?;
    checks.push(Check {
        name: "orbit count",
        passed: oracle.orbit_count == formula.qg,
        detail: format!("oracle {} vs formula {}", oracle.orbit_count, formula.qg),
    });

    let mut mismatched = Vec::new();
    let classes = all_cycle_types(n - 1);
    for t in &classes {
        let direct = direct_fix_count_with(&t.representative(), n, config)?;
        let by_formula = class_fix_count(t);
        if direct != by_formula {
            mismatched.push(format!("{t}: direct {direct} vs formula {by_formula}"));
        }
    }
    checks.push(Check {
        name: "class fixed points",
        passed: mismatched.is_empty(),
        detail: if mismatched.is_empty() {
            format!("{} classes agree", classes.len())
        } else {
            mismatched.join("; ")
        },
    });

    let broken = (0..space.len())
        .into_par_iter()
        .filter(|&i| {
            let q = space.table_at(i);
            CayleyTable::from_transversal(&q.to_transversal()) != q
        })
        .count();
    checks.push(Check {
        name: "table/transversal round trip",
        passed: broken == 0,
        detail: format!("{} tables, {broken} mismatches", space.len()),
    });

    let mut rng = StdRng::seed_from_u64(seed);
    let group: Vec<Permutation> = SymmetricGroup::new(n - 1).map(|s| s.extend_to(n)).collect();
    let pairs: Vec<(CayleyTable, CayleyTable)> = (0..ISO_PAIRS)
        .map(|k| {
            let a = space.table_at(rng.gen_range(0..space.len()));
            let b = if k % 2 == 0 {
                let s = group.choose(&mut rng).expect("nonempty group");
                a.relabel(s).expect("stabilizer element")
            } else {
                space.table_at(rng.gen_range(0..space.len()))
            };
            (a, b)
        })
        .collect();
    let (agree, positive) = pairs
        .par_iter()
        .map(|(a, b)| {
            let by_bij = isomorphic_by_bijection(a, b);
            let by_conj = isomorphic_by_conjugation(a, b);
            let witnesses_ok = [&by_bij, &by_conj]
                .iter()
                .all(|w| w.as_ref().is_none_or(|w| a.relabel(w).as_ref() == Ok(b)));
            let ok = by_bij.is_some() == by_conj.is_some() && witnesses_ok;
            (ok as usize, by_bij.is_some() as usize)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    checks.push(Check {
        name: "isomorphism tests agree",
        passed: agree == pairs.len(),
        detail: format!("{agree}/{} pairs agree, {positive} isomorphic", pairs.len()),
    });

    Ok(Report { n, checks })
}
