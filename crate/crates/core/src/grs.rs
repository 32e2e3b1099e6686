//! Golay-Rudin-Shapiro sequence and the maxima of its partial sums.

use crate::error::{CoreError, Result};
use crate::tuenter::c2_closed;

/// `a(n) = (-1)^(number of "11" blocks in binary n, overlaps counted)`.
pub fn grs_term(n: u64) -> i8 {
    if (n & (n >> 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsScan {
    pub limit: u64,
    /// `s(1)..=s(limit)`; index 0 holds `s(1)`.
    pub partial_sums: Vec<i64>,
    /// Positions `n` with `s(n-1) < s(n) > s(n+1)`.
    pub strict_local_maxima: Vec<u64>,
    /// Positions `n` where `s(n)` exceeds every earlier partial sum.
    pub record_positions: Vec<u64>,
}

impl GrsScan {
    /// `s(n)` for `1 <= n <= limit`.
    pub fn sum_at(&self, n: u64) -> Option<i64> {
        let idx = usize::try_from(n.checked_sub(1)?).ok()?;
        self.partial_sums.get(idx).copied()
    }
}

fn check_limit(limit: u64) -> Result<()> {
    if limit < 3 {
        return Err(CoreError::out_of_range(
            "limit",
            format!("need limit >= 3, got {limit}"),
        ));
    }
    Ok(())
}

pub fn grs_scan(limit: u64) -> Result<GrsScan> {
    check_limit(limit)?;
    let mut partial_sums = Vec::with_capacity(limit as usize);
    let mut s = 0i64;
    for n in 1..=limit {
        s += i64::from(grs_term(n));
        partial_sums.push(s);
    }

    let strict_local_maxima = partial_sums
        .windows(3)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0] && w[1] > w[2])
        .map(|(i, _)| i as u64 + 2)
        .collect();

    let mut record_positions = Vec::new();
    let mut best: Option<i64> = None;
    for (i, &v) in partial_sums.iter().enumerate() {
        if best.is_none_or(|b| v > b) {
            record_positions.push(i as u64 + 1);
            best = Some(v);
        }
    }

    Ok(GrsScan {
        limit,
        partial_sums,
        strict_local_maxima,
        record_positions,
    })
}

/// One `c_{2,k}` value and where it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Position {
    pub k: u64,
    pub value: u64,
    pub is_local_max: bool,
    pub is_record: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2CrossCheck {
    pub scan: GrsScan,
    /// Every `c_{2,k}`, `k >= 2`, with value at most `limit - 1`.
    pub checked: Vec<C2Position>,
    pub holds: bool,
}

/// Checks that each `c_{2,k} <= limit - 1` is both a strict local maximum and
/// a record position of the partial-sum walk.
pub fn cross_check_c2(limit: u64) -> Result<C2CrossCheck> {
    let scan = grs_scan(limit)?;
    let mut checked = Vec::new();
    for k in 2u64.. {
        let value = c2_closed(k)?;
        let Ok(value) = u64::try_from(value) else {
            break;
        };
        if value > limit - 1 {
            break;
        }
        checked.push(C2Position {
            k,
            value,
            is_local_max: scan.strict_local_maxima.binary_search(&value).is_ok(),
            is_record: scan.record_positions.binary_search(&value).is_ok(),
        });
    }
    let holds = checked.iter().all(|c| c.is_local_max && c.is_record);
    Ok(C2CrossCheck {
        scan,
        checked,
        holds,
    })
}
