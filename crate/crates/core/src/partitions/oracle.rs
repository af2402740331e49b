//! Brute-force counting by explicit generation of partitions.
//!
//! Partitions are generated as multiplicity vectors `(value, multiplicity)`
//! with strictly decreasing values. Each function restricts the admissible
//! values and multiplicities, and at every generated vector counts the
//! decorations (colours, overlines) by walking through them one by one.
//! Nothing here touches the series engine.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{FunctionId, PartitionError};

/// Per-function enumeration caps.
///
/// The default caps keep the whole oracle suite well under a minute. They can
/// be raised up to a hard limit per function; anything above is refused so a
/// typo cannot start an exponential run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleCaps {
    caps: BTreeMap<FunctionId, usize>,
}

impl OracleCaps {
    pub fn default_cap(id: FunctionId) -> usize {
        use FunctionId::*;
        match id {
            Cubic | AFun | QOdd3 | OpBar | OpOdd => 22,
            P3 => 18,
            _ => 35,
        }
    }

    pub fn hard_limit(id: FunctionId) -> usize {
        use FunctionId::*;
        match id {
            Cubic | AFun | QOdd3 | OpBar | OpOdd => 40,
            P3 => 30,
            _ => 60,
        }
    }

    pub fn cap(&self, id: FunctionId) -> usize {
        self.caps
            .get(&id)
            .copied()
            .unwrap_or_else(|| Self::default_cap(id))
    }

    pub fn set(&mut self, id: FunctionId, cap: usize) -> Result<(), PartitionError> {
        let limit = Self::hard_limit(id);
        if cap > limit {
            return Err(PartitionError::CapTooLarge {
                id,
                requested: cap,
                limit,
            });
        }
        self.caps.insert(id, cap);
        Ok(())
    }

    pub fn with(mut self, id: FunctionId, cap: usize) -> Result<Self, PartitionError> {
        self.set(id, cap)?;
        Ok(self)
    }
}

/// Exact (signed) count of the objects `id` counts at `n`, by enumeration.
pub fn count_by_enumeration(
    id: FunctionId,
    n: usize,
    caps: &OracleCaps,
) -> Result<BigInt, PartitionError> {
    let cap = caps.cap(id);
    if n > cap {
        return Err(PartitionError::CapExceeded { id, n, cap });
    }
    let mut total = 0i128;
    let mut mults = Vec::new();
    walk(id, n, n, &mut mults, &mut total);
    Ok(BigInt::from(total))
}

fn part_allowed(id: FunctionId, v: usize) -> bool {
    use FunctionId::*;
    match id {
        QOdd | OpOdd | QOdd3 => v % 2 == 1,
        P2Mod4 => v % 4 == 2,
        _ => true,
    }
}

fn max_multiplicity(id: FunctionId, v: usize) -> usize {
    use FunctionId::*;
    let odd = v % 2 == 1;
    match id {
        Pod if odd => 1,
        Ped if !odd => 1,
        QDist | Qeo | QOdd => 1,
        // one slot per colour
        QOdd3 => 3,
        _ => usize::MAX,
    }
}

fn walk(
    id: FunctionId,
    remaining: usize,
    max_part: usize,
    mults: &mut Vec<(usize, usize)>,
    total: &mut i128,
) {
    if remaining == 0 {
        *total += weight(id, mults);
        return;
    }
    for v in (1..=max_part.min(remaining)).rev() {
        if !part_allowed(id, v) {
            continue;
        }
        let max_m = (remaining / v).min(max_multiplicity(id, v));
        for m in 1..=max_m {
            mults.push((v, m));
            walk(id, remaining - v * m, v - 1, mults, total);
            mults.pop();
        }
    }
}

fn sign(count: usize) -> i128 {
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ways to spread `m` copies of one part over `colours` colours.
fn colour_splits(m: usize, colours: usize) -> i128 {
    if colours == 1 {
        return 1;
    }
    (0..=m)
        .map(|first| colour_splits(m - first, colours - 1))
        .sum()
}

/// Ways to pick `m` distinct colours out of `colours`.
fn colour_subsets(m: usize, colours: usize) -> i128 {
    (0u32..1 << colours)
        .filter(|mask| mask.count_ones() as usize == m)
        .count() as i128
}

/// Ways to overline (or not) one occurrence of each of `distinct` values.
fn overline_choices(distinct: usize) -> i128 {
    (0u64..1 << distinct).count() as i128
}

fn is_eo(mults: &[(usize, usize)]) -> bool {
    let max_even = mults
        .iter()
        .filter(|(v, _)| v % 2 == 0)
        .map(|&(v, _)| v)
        .max();
    let min_odd = mults
        .iter()
        .filter(|(v, _)| v % 2 == 1)
        .map(|&(v, _)| v)
        .min();
    match (max_even, min_odd) {
        (Some(e), Some(o)) => e < o,
        _ => true,
    }
}

fn weight(id: FunctionId, mults: &[(usize, usize)]) -> i128 {
    use FunctionId::*;
    let parts: usize = mults.iter().map(|&(_, m)| m).sum();
    let odd_parts: usize = mults
        .iter()
        .filter(|(v, _)| v % 2 == 1)
        .map(|&(_, m)| m)
        .sum();
    let even_colourings = || -> i128 {
        mults
            .iter()
            .filter(|(v, _)| v % 2 == 0)
            .map(|&(_, m)| colour_splits(m, 2))
            .product()
    };
    match id {
        P | Pod | Ped | QDist | QOdd | P2Mod4 => 1,
        Peo => sign(parts),
        Qeo => sign(odd_parts),
        OpBar | OpOdd => overline_choices(mults.len()),
        AFun => sign(parts) * even_colourings(),
        Cubic => even_colourings(),
        P3 => mults.iter().map(|&(_, m)| colour_splits(m, 3)).product(),
        QOdd3 => mults.iter().map(|&(_, m)| colour_subsets(m, 3)).product(),
        Eo => i128::from(is_eo(mults)),
        EoBar => {
            let largest_even = mults
                .iter()
                .filter(|(v, _)| v % 2 == 0)
                .map(|&(v, _)| v)
                .max();
            let odd_mult: Vec<usize> = mults
                .iter()
                .filter(|(_, m)| m % 2 == 1)
                .map(|&(v, _)| v)
                .collect();
            let ok = match largest_even {
                Some(e) => odd_mult == [e],
                None => odd_mult.is_empty(),
            };
            i128::from(is_eo(mults) && ok)
        }
    }
}
