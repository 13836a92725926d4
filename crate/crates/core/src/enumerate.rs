//! Enumeration of positive functions by pairing: a positive function of `n`
//! variables is `f0` on `x_n = 0` and `f1` on `x_n = 1` with `f0 <= f1`, both
//! positive in the first `n - 1` variables.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::table::TruthTable;

pub const MAX_ENUMERATION_ARITY: usize = 6;

fn check(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ARITY {
        return Err(Error::TooManyVariables {
            what: "positive-function enumeration",
            count: n,
            limit: MAX_ENUMERATION_ARITY,
        });
    }
    Ok(())
}

/// Raw table words of every positive function, ascending.
pub fn positive_words(n: usize) -> Result<Vec<u64>> {
    check(n)?;
    let mut level = vec![0u64, 1];
    for m in 1..=n {
        let shift = 1u32 << (m - 1);
        let prev = &level;
        let mut next: Vec<u64> = prev
            .par_iter()
            .flat_map_iter(|&f0| {
                prev.iter()
                    .filter(move |&&f1| f0 & !f1 == 0)
                    .map(move |&f1| f0 | f1 << shift)
            })
            .collect();
        next.sort_unstable();
        level = next;
    }
    Ok(level)
}

/// Every positive function of `n` variables, in ascending table order.
pub fn enumerate_positive(n: usize) -> Result<Vec<TruthTable>> {
    Ok(positive_words(n)?
        .into_iter()
        .map(|w| TruthTable::from_u64(n, w).unwrap())
        .collect())
}

/// Streams the positive functions of `n` variables without materialising
/// them; only the `n - 1` level is held in memory. Order is by `f0`, then `f1`.
pub fn positive_functions(n: usize) -> Result<impl Iterator<Item = TruthTable>> {
    check(n)?;
    let (halves, shift) = if n == 0 {
        (vec![0u64], 0)
    } else {
        (positive_words(n - 1)?, 1u32 << (n - 1))
    };
    let lower = halves.clone();
    let stream = lower.into_iter().flat_map(move |f0| {
        let uppers: Vec<u64> = if n == 0 {
            vec![0, 1]
        } else {
            halves.iter().copied().filter(|&f1| f0 & !f1 == 0).collect()
        };
        uppers
            .into_iter()
            .map(move |f1| TruthTable::from_u64(n, f0 | f1 << shift).unwrap())
    });
    Ok(stream)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| positive_words(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
        assert!(positive_words(7).is_err());
    }

    #[test]
    fn stream_matches_vector() {
        for n in 0..=4 {
            let mut streamed: Vec<TruthTable> = positive_functions(n).unwrap().collect();
            streamed.sort();
            assert_eq!(streamed, enumerate_positive(n).unwrap());
        }
    }

    #[test]
    fn everything_is_positive() {
        for f in enumerate_positive(3).unwrap() {
            assert!(crate::monotone::is_positive(&f));
        }
    }
}
