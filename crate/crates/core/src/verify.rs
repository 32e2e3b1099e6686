//! Bounded verification sweep over every identity the crate implements.

use num_traits::One;

use crate::error::Result;
use crate::poly::{falling_factorial, Int, Rational};
use crate::tuenter::{apply_r, c2_closed, catalan_entry, coeff_closed, coeff_table, TuenterFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_k: usize,
    pub max_n: u64,
    /// Adds one to a single entry of the recurrence table before checking,
    /// as a negative control.
    pub inject_fault: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub checks: Vec<CheckSummary>,
    pub first_failure: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

struct Sweep {
    checks: Vec<CheckSummary>,
    first_failure: Option<String>,
}

impl Sweep {
    fn record(&mut self, name: &'static str, cases: usize, failure: Option<String>) {
        let passed = failure.is_none();
        self.checks.push(CheckSummary {
            name,
            cases,
            passed,
        });
        if self.first_failure.is_none() {
            self.first_failure = failure.map(|f| format!("{name}: {f}"));
        }
    }

    fn failed(&self) -> bool {
        self.first_failure.is_some()
    }
}

fn as_rationals(values: impl IntoIterator<Item = Int>) -> Vec<Rational> {
    values.into_iter().map(Rational::from_integer).collect()
}

/// Runs every check in order and stops after the first failing one.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let max_k = config.max_k.max(1);
    let mut sweep = Sweep {
        checks: Vec::new(),
        first_failure: None,
    };

    let mut table = coeff_table(max_k)?;
    if config.inject_fault {
        table.rows[max_k - 1].values[0] += 1;
    }

    // Theorem: closed form equals the recurrence.
    let mut cases = 0;
    let mut failure = None;
    'closed: for k in 1..=max_k {
        for j in 1..=k {
            cases += 1;
            let closed = coeff_closed(j as u64, k as u64);
            let table_value = table.get(j, k).expect("index inside table");
            match closed {
                Ok(v) if &v == table_value => {}
                Ok(v) => {
                    failure = Some(format!(
                        "c_{{{j},{k}}}: closed form {v}, recurrence {table_value}"
                    ));
                    break 'closed;
                }
                Err(e) => {
                    failure = Some(format!("c_{{{j},{k}}}: {e}"));
                    break 'closed;
                }
            }
        }
    }
    sweep.record("closed_form_equals_recurrence", cases, failure);
    if sweep.failed() {
        return Ok(sweep.finish());
    }

    let family = TuenterFamily::new();
    let mut failure = None;
    for k in 1..=max_k {
        let mut expected = vec![Int::from(0)];
        expected.extend(table.row(k).expect("row exists").values.iter().cloned());
        if family.get(k).to_falling_basis() != as_rationals(expected) {
            failure = Some(format!(
                "P_{k} falling-basis coordinates differ from row {k}"
            ));
            break;
        }
    }
    sweep.record("falling_basis_matches_table", max_k, failure);
    if sweep.failed() {
        return Ok(sweep.finish());
    }

    let c2_cases = max_k.saturating_sub(1);
    let mut failure = None;
    for k in 2..=max_k {
        let closed = c2_closed(k as u64)?;
        let table_value = table.get(2, k).expect("index inside table");
        if &closed != table_value {
            failure = Some(format!(
                "c_{{2,{k}}}: closed {closed}, recurrence {table_value}"
            ));
            break;
        }
    }
    sweep.record("c2_closed_form", c2_cases, failure);
    if sweep.failed() {
        return Ok(sweep.finish());
    }

    // Partitioned by k; results are gathered back in order.
    let witnesses: Vec<Option<String>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..=max_k)
            .map(|k| {
                let family = &family;
                s.spawn(move || {
                    (1..=config.max_n).find_map(|n| {
                        let w = family.verify_sum_identity(k, n);
                        (!w.matches).then(|| {
                            format!(
                                "k={k}, n={n}: S_{} = {}, P_k(n) n C(2n,n) = {}",
                                w.r, w.lhs, w.rhs
                            )
                        })
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let sum_cases = (max_k + 1) * config.max_n as usize;
    sweep.record(
        "sum_identity",
        sum_cases,
        witnesses.into_iter().flatten().next(),
    );
    if sweep.failed() {
        return Ok(sweep.finish());
    }

    let mut failure = None;
    for j in 0..=max_k {
        let lhs = apply_r(&falling_factorial(j));
        let sq = Rational::from_integer(Int::from(j * j));
        let next = Rational::from_integer(Int::from(j + 1));
        let rhs = falling_factorial(j).scale(&sq) + falling_factorial(j + 1).scale(&next);
        if lhs != rhs {
            failure = Some(format!("R((n)_{j}) = {lhs}, expected {rhs}"));
            break;
        }
    }
    sweep.record("operator_on_falling_factorials", max_k + 1, failure);
    if sweep.failed() {
        return Ok(sweep.finish());
    }

    let max_j = max_k as u64 + 1;
    let mut cases = 0;
    let mut failure = None;
    let mut catalan = Int::one();
    'triangle: for j in 1..=max_j {
        if j > 1 {
            // C_j = C_{j-1} * 2(2j-1) / (j+1)
            catalan = catalan * (2 * (2 * j - 1)) / (j + 1);
        }
        cases += 1;
        let b1 = catalan_entry(j, 1)?;
        if b1 != catalan {
            failure = Some(format!("B_{{{j},1}} = {b1}, Catalan number {catalan}"));
            break;
        }
        for q in 1..j {
            cases += 1;
            let lhs = catalan_entry(j, q)? * ((j - q) * (j + q));
            let rhs = catalan_entry(j - 1, q)? * ((2 * j - 1) * (2 * j - 2));
            if lhs != rhs {
                failure = Some(format!("j={j}, q={q}: {lhs} != {rhs}"));
                break 'triangle;
            }
        }
    }
    sweep.record("catalan_triangle_relation", cases, failure);

    Ok(sweep.finish())
}

impl Sweep {
    fn finish(self) -> SweepReport {
        SweepReport {
            checks: self.checks,
            first_failure: self.first_failure,
        }
    }
}
