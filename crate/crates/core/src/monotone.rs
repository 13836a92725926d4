//! Positive functions, their extremal points, and canalyzing variables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{Point, TruthTable};

/// Maximal zeros and minimal ones of a positive function, both sorted by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSets {
    pub maximal_zeros: Vec<Point>,
    pub minimal_ones: Vec<Point>,
    pub r: usize,
}

impl ExtremalSets {
    /// Minimal ones followed by maximal zeros.
    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.minimal_ones.iter().chain(self.maximal_zeros.iter())
    }
}

/// `f(x) = 1` and `x` below `y` imply `f(y) = 1`; checked on covering pairs.
pub fn is_positive(f: &TruthTable) -> bool {
    (0..f.arity()).all(|v| f.is_positive_in(v))
}

/// Tables marking the minimal ones and the maximal zeros of `f`.
///
/// Meaningful for positive `f` only: a one is minimal when every lower
/// neighbour is a zero, a zero is maximal when every upper neighbour is a one.
pub(crate) fn extremal_masks(f: &TruthTable) -> (TruthTable, TruthTable) {
    let mut min_ones = f.clone();
    let mut max_zeros = f.not();
    for v in 0..f.arity() {
        let neighbour = f.flip_var(v);
        let high = f.var_table(v);
        // x_v = 1 -> f(x - e_v) = 0
        min_ones = min_ones.and(&high.and(&neighbour).not());
        // x_v = 0 -> f(x + e_v) = 1
        max_zeros = max_zeros.and(&high.or(&neighbour));
    }
    (min_ones, max_zeros)
}

/// Number of extremal points of a positive function.
pub fn extremal_count(f: &TruthTable) -> Result<usize> {
    if !is_positive(f) {
        return Err(Error::NotPositive);
    }
    let (u, z) = extremal_masks(f);
    Ok((u.count_ones() + z.count_ones()) as usize)
}

pub fn extremal_sets(f: &TruthTable) -> Result<ExtremalSets> {
    if !is_positive(f) {
        return Err(Error::NotPositive);
    }
    let n = f.arity();
    let (u, z) = extremal_masks(f);
    let minimal_ones: Vec<Point> = u.ones().map(|i| Point::new_unchecked(n, i)).collect();
    let maximal_zeros: Vec<Point> = z.ones().map(|i| Point::new_unchecked(n, i)).collect();
    Ok(ExtremalSets {
        r: minimal_ones.len() + maximal_zeros.len(),
        maximal_zeros,
        minimal_ones,
    })
}

/// Fixing `x_var = input` forces the output `output`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Canalyzing {
    #[serde(with = "crate::serde_util::one_based")]
    pub var: usize,
    pub input: bool,
    pub output: bool,
}

/// First canalyzing certificate by variable, then input value 0 before 1.
///
/// For a constant function every variable canalyzes; the certificate reported
/// is `x1 = c -> c` so that positive functions always get `input == output`.
pub fn is_canalyzing(f: &TruthTable) -> Option<Canalyzing> {
    if f.arity() == 0 {
        return None;
    }
    if let Some(c) = f.constant_value() {
        return Some(Canalyzing {
            var: 0,
            input: c,
            output: c,
        });
    }
    for var in 0..f.arity() {
        for input in [false, true] {
            if let Some(output) = f.cofactor(var, input).constant_value() {
                return Some(Canalyzing { var, input, output });
            }
        }
    }
    None
}

/// Extremal points corresponding to at least one variable of `vars`: maximal
/// zeros with a 0 there, minimal ones with a 1 there. Sorted by index.
pub fn extremals_corresponding(f: &TruthTable, vars: &[usize]) -> Result<Vec<Point>> {
    if !is_positive(f) {
        return Err(Error::NotPositive);
    }
    let mut mask = 0usize;
    for &v in vars {
        if v >= f.arity() {
            return Err(Error::VariableOutOfRange {
                var: v,
                arity: f.arity(),
            });
        }
        if !f.depends_on(v) {
            return Err(Error::IrrelevantVariable(v));
        }
        mask |= 1 << v;
    }
    Ok(corresponding_by_mask(f, mask))
}

pub(crate) fn corresponding_by_mask(f: &TruthTable, mask: usize) -> Vec<Point> {
    let n = f.arity();
    let (u, z) = extremal_masks(f);
    let mut out: Vec<Point> = u
        .ones()
        .filter(|&i| i & mask != 0)
        .chain(z.ones().filter(|&i| !i & mask != 0))
        .map(|i| Point::new_unchecked(n, i))
        .collect();
    out.sort();
    out
}

/// Up-closure of a set of points: the positive function whose minimal ones
/// are the minimal elements of `points`.
pub fn up_closure(arity: usize, points: &[Point]) -> Result<TruthTable> {
    for p in points {
        if p.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: p.arity(),
            });
        }
    }
    TruthTable::from_fn(arity, |x| points.iter().any(|p| p.index() & !x == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn pts(n: usize, coords: &[&[u8]]) -> Vec<Point> {
        let mut v: Vec<Point> = coords
            .iter()
            .map(|c| Point::from_coords(c).unwrap())
            .collect();
        assert!(v.iter().all(|p| p.arity() == n));
        v.sort();
        v
    }

    #[test]
    fn positivity() {
        assert!(is_positive(&t("3:E8")));
        assert!(!is_positive(&t("2:6")));
        assert!(is_positive(&t("4:E8A8")));
        assert!(is_positive(&t("0:0")));
    }

    #[test]
    fn extremal_points_of_g3() {
        let e = extremal_sets(&t("3:E8")).unwrap();
        assert_eq!(
            e.minimal_ones,
            pts(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(
            e.maximal_zeros,
            pts(3, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
        );
        assert_eq!(e.r, 6);
    }

    #[test]
    fn extremal_points_of_f4() {
        let e = extremal_sets(&t("4:E8A8")).unwrap();
        assert_eq!(
            e.minimal_ones,
            pts(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 1, 1]])
        );
        assert_eq!(
            e.maximal_zeros,
            pts(
                4,
                &[&[0, 0, 1, 1], &[0, 1, 0, 1], &[0, 1, 1, 0], &[1, 0, 0, 1]]
            )
        );
        assert_eq!(e.r, 7);
    }

    #[test]
    fn extremal_points_of_constants() {
        let e = extremal_sets(&TruthTable::constant(3, false).unwrap()).unwrap();
        assert!(e.minimal_ones.is_empty());
        assert_eq!(e.maximal_zeros, pts(3, &[&[1, 1, 1]]));
        assert_eq!(e.r, 1);
        let e = extremal_sets(&TruthTable::constant(2, true).unwrap()).unwrap();
        assert_eq!(e.minimal_ones, pts(2, &[&[0, 0]]));
        assert_eq!(e.r, 1);
        assert_eq!(extremal_sets(&t("2:6")), Err(Error::NotPositive));
    }

    #[test]
    fn canalyzing_examples() {
        // x1 | x2 x3
        let f = TruthTable::from_fn(3, |i| i & 1 == 1 || i & 6 == 6).unwrap();
        assert_eq!(
            is_canalyzing(&f),
            Some(Canalyzing {
                var: 0,
                input: true,
                output: true
            })
        );
        assert_eq!(is_canalyzing(&t("3:E8")), None);
        assert_eq!(is_canalyzing(&t("4:E8A8")), None);
        // x1 & !x2: x1 = 0 forces 0
        let c = is_canalyzing(&t("2:2")).unwrap();
        assert_eq!((c.var, c.input, c.output), (0, false, false));
        let c = is_canalyzing(&TruthTable::constant(2, true).unwrap()).unwrap();
        assert_eq!((c.input, c.output), (true, true));
    }

    #[test]
    fn corresponding_examples() {
        let g3 = t("3:E8");
        let c = extremals_corresponding(&g3, &[0]).unwrap();
        assert_eq!(c, pts(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 0, 1], &[0, 1, 0]]));
        let all = extremals_corresponding(&g3, &[0, 1, 2]).unwrap();
        assert_eq!(all.len(), 6);
        let x1 = t("1:2");
        assert_eq!(
            extremals_corresponding(&x1, &[0]).unwrap(),
            pts(1, &[&[0], &[1]])
        );
        let f = TruthTable::from_fn(2, |i| i & 1 == 1).unwrap();
        assert_eq!(
            extremals_corresponding(&f, &[1]),
            Err(Error::IrrelevantVariable(1))
        );
    }

    #[test]
    fn up_closure_rebuilds() {
        let f4 = t("4:E8A8");
        let e = extremal_sets(&f4).unwrap();
        assert_eq!(up_closure(4, &e.minimal_ones).unwrap(), f4);
    }
}
