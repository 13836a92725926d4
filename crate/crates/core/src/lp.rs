//! Exact feasibility for small linear systems.
//!
//! Phase-one simplex on an integer-preserving (fraction-free) tableau: every
//! entry is an integer and the true value is `entry / d`, where `d` is the
//! previous pivot. Divisions in the update are exact.
//!
//! Arithmetic runs on `i64`, then `i128`, with overflow checks, and is
//! repeated on `BigInt` when both trip.
//!
//! The entering column is the most negative reduced cost while the objective
//! keeps improving; after a run of degenerate pivots the choice falls back to
//! the lowest eligible index (Bland), which cannot cycle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum VarKind {
    NonNegative,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Problem {
    kinds: Vec<VarKind>,
    constraints: Vec<Constraint>,
}

impl Problem {
    pub fn new(kinds: Vec<VarKind>) -> Self {
        Self {
            kinds,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<i64>, relation: Relation, rhs: i64) {
        debug_assert_eq!(coeffs.len(), self.kinds.len());
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    #[cfg(test)]
    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// A feasible point, or `None` if the system is infeasible.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        let form = StandardForm::build(self);
        let outcome = run::<i64>(&form)
            .or_else(|| run::<i128>(&form))
            .unwrap_or_else(|| run::<BigInt>(&form).expect("BigInt arithmetic cannot overflow"));
        let values = outcome?;
        Some(
            form.structural
                .iter()
                .map(|&(pos, neg)| match neg {
                    Some(neg) => &values[pos] - &values[neg],
                    None => values[pos].clone(),
                })
                .collect(),
        )
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }
}

/// `A x = b, x >= 0, b >= 0` with an identity starting basis.
struct StandardForm {
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
    basis: Vec<usize>,
    columns: usize,
    first_artificial: usize,
    /// Column of each original variable, plus the negative part for free variables.
    structural: Vec<(usize, Option<usize>)>,
}

impl StandardForm {
    fn build(p: &Problem) -> Self {
        let mut structural = Vec::with_capacity(p.kinds.len());
        let mut col = 0;
        for kind in &p.kinds {
            match kind {
                VarKind::NonNegative => {
                    structural.push((col, None));
                    col += 1;
                }
                VarKind::Free => {
                    structural.push((col, Some(col + 1)));
                    col += 2;
                }
            }
        }
        let m = p.constraints.len();
        let slack_count = p
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let first_slack = col;
        let first_artificial = first_slack + slack_count;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = first_slack;
        let mut artificial = first_artificial;
        let mut pending = Vec::new();
        for c in &p.constraints {
            let mut row = vec![0i64; first_artificial];
            for (j, &(pos, neg)) in structural.iter().enumerate() {
                row[pos] = c.coeffs[j];
                if let Some(neg) = neg {
                    row[neg] = -c.coeffs[j];
                }
            }
            let slack_col = match c.relation {
                Relation::Le => Some((slack, 1)),
                Relation::Ge => Some((slack, -1)),
                Relation::Eq => None,
            };
            if let Some((s, sign)) = slack_col {
                row[s] = sign;
                slack += 1;
            }
            let mut b = c.rhs;
            if b < 0 {
                row.iter_mut().for_each(|a| *a = -*a);
                b = -b;
            }
            // a slack with coefficient +1 after normalisation can start basic
            match slack_col {
                Some((s, _)) if row[s] == 1 => basis.push(s),
                _ => {
                    basis.push(artificial);
                    pending.push(rows.len());
                    artificial += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        let columns = artificial;
        for row in rows.iter_mut() {
            row.resize(columns, 0);
        }
        for (k, &r) in pending.iter().enumerate() {
            rows[r][first_artificial + k] = 1;
        }
        Self {
            rows,
            rhs,
            basis,
            columns,
            first_artificial,
            structural,
        }
    }
}

trait Exact: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn sign(&self) -> i8;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    /// `(a * p - c * r) / d`, exact.
    fn pivot(a: &Self, p: &Self, c: &Self, r: &Self, d: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn less_than(&self, other: &Self) -> bool;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn sign(&self) -> i8 {
        self.signum() as i8
    }

    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }

    fn pivot(a: &Self, p: &Self, c: &Self, r: &Self, d: &Self) -> Option<Self> {
        let num = i64::checked_mul(*a, *p)?.checked_sub(i64::checked_mul(*c, *r)?)?;
        debug_assert_eq!(num % d, 0, "fraction-free update must divide exactly");
        Some(num / d)
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn less_than(&self, other: &Self) -> bool {
        self < other
    }
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }

    fn sign(&self) -> i8 {
        self.signum() as i8
    }

    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }

    fn pivot(a: &Self, p: &Self, c: &Self, r: &Self, d: &Self) -> Option<Self> {
        let num = i128::checked_mul(*a, *p)?.checked_sub(i128::checked_mul(*c, *r)?)?;
        debug_assert_eq!(num % d, 0, "fraction-free update must divide exactly");
        Some(num / d)
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn less_than(&self, other: &Self) -> bool {
        self < other
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }

    fn pivot(a: &Self, p: &Self, c: &Self, r: &Self, d: &Self) -> Option<Self> {
        let num = a * p - c * r;
        debug_assert!(
            (&num % d).is_zero(),
            "fraction-free update must divide exactly"
        );
        Some(num / d)
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }

    fn less_than(&self, other: &Self) -> bool {
        self < other
    }
}

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const DEGENERATE_LIMIT: usize = 50;

/// Outer `None`: arithmetic overflow. Inner `None`: infeasible.
#[allow(clippy::option_option)]
fn run<T: Exact>(form: &StandardForm) -> Option<Option<Vec<BigRational>>> {
    let m = form.rows.len();
    let cols = form.columns;
    // row layout: cols entries followed by the right-hand side
    let mut tab: Vec<Vec<T>> = form
        .rows
        .iter()
        .zip(form.rhs.iter())
        .map(|(row, &b)| {
            row.iter()
                .map(|&a| T::from_i64(a))
                .chain(std::iter::once(T::from_i64(b)))
                .collect()
        })
        .collect();
    let mut basis = form.basis.clone();

    // phase-one reduced costs: minimise the sum of artificials
    let mut z = vec![0i64; cols + 1];
    for (i, &bv) in basis.iter().enumerate() {
        if bv >= form.first_artificial {
            for (zj, a) in z.iter_mut().zip(&form.rows[i]) {
                *zj -= a;
            }
            z[cols] -= form.rhs[i];
        }
    }
    for (j, zj) in z
        .iter_mut()
        .enumerate()
        .take(cols)
        .skip(form.first_artificial)
    {
        if basis.contains(&j) {
            *zj = 0;
        }
    }
    let mut z: Vec<T> = z.into_iter().map(T::from_i64).collect();
    let mut d = T::from_i64(1);
    let mut is_basic = vec![false; cols];
    basis.iter().for_each(|&b| is_basic[b] = true);

    let mut degenerate_run = 0usize;
    let mut bland = false;
    loop {
        // artificials never re-enter
        let eligible = (0..form.first_artificial).filter(|&j| !is_basic[j] && z[j].sign() < 0);
        let entering = if bland {
            eligible.into_iter().next()
        } else {
            // reduced costs share the denominator d, so integers compare directly
            let mut best: Option<usize> = None;
            for j in eligible {
                best = match best {
                    Some(b) if !z[j].less_than(&z[b]) => Some(b),
                    _ => Some(j),
                };
            }
            best
        };
        let Some(c) = entering else { break };

        let mut leaving: Option<usize> = None;
        for i in 0..m {
            if tab[i][c].sign() <= 0 {
                continue;
            }
            leaving = Some(match leaving {
                None => i,
                Some(k) => {
                    // compare rhs_i / a_ic with rhs_k / a_kc
                    let lhs = tab[i][cols].checked_mul(&tab[k][c])?;
                    let rhs = tab[k][cols].checked_mul(&tab[i][c])?;
                    let diff = T::pivot(
                        &lhs,
                        &T::from_i64(1),
                        &rhs,
                        &T::from_i64(1),
                        &T::from_i64(1),
                    )?;
                    match diff.sign() {
                        -1 => i,
                        0 if basis[i] < basis[k] => i,
                        _ => k,
                    }
                }
            });
        }
        // phase one is bounded below by zero, so some row always qualifies
        let r = leaving.expect("phase-one objective is bounded");
        if tab[r][cols].sign() == 0 {
            degenerate_run += 1;
            if degenerate_run > DEGENERATE_LIMIT {
                bland = true;
            }
        } else {
            degenerate_run = 0;
        }

        let pivot_row = tab[r].clone();
        let p = pivot_row[c].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c].clone();
            if factor.sign() == 0 {
                // (a * p - 0) / d
                for a in row.iter_mut() {
                    *a = T::pivot(a, &p, &factor, &factor, &d)?;
                }
                continue;
            }
            for (a, pr) in row.iter_mut().zip(pivot_row.iter()) {
                *a = T::pivot(a, &p, &factor, pr, &d)?;
            }
        }
        let factor = z[c].clone();
        for (a, pr) in z.iter_mut().zip(pivot_row.iter()) {
            *a = T::pivot(a, &p, &factor, pr, &d)?;
        }
        d = p;
        is_basic[basis[r]] = false;
        basis[r] = c;
        is_basic[c] = true;
    }

    if z[cols].sign() != 0 {
        return Some(None);
    }
    let denom = d.to_big();
    let mut values = vec![BigRational::zero(); cols];
    for (i, &bv) in basis.iter().enumerate() {
        values[bv] = BigRational::new(tab[i][cols].to_big(), denom.clone());
    }
    Some(Some(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn satisfies(p: &Problem, x: &[BigRational]) -> bool {
        p.constraints().iter().all(|c| {
            let lhs: BigRational = c
                .coeffs
                .iter()
                .zip(x)
                .map(|(&a, v)| v * BigRational::from_integer(a.into()))
                .sum();
            let rhs = BigRational::from_integer(c.rhs.into());
            match c.relation {
                Relation::Le => lhs <= rhs,
                Relation::Ge => lhs >= rhs,
                Relation::Eq => lhs == rhs,
            }
        }) && p
            .kinds
            .iter()
            .zip(x)
            .all(|(k, v)| *k == VarKind::Free || !v.is_negative())
    }

    #[test]
    fn feasible_box() {
        let mut p = Problem::new(vec![VarKind::NonNegative, VarKind::NonNegative]);
        p.add(vec![1, 1], Relation::Ge, 3);
        p.add(vec![1, -1], Relation::Eq, 1);
        p.add(vec![1, 0], Relation::Le, 5);
        let x = p.solve().unwrap();
        assert!(satisfies(&p, &x));
    }

    #[test]
    fn infeasible_system() {
        let mut p = Problem::new(vec![VarKind::Free]);
        p.add(vec![1], Relation::Ge, 1);
        p.add(vec![1], Relation::Le, 0);
        assert!(p.solve().is_none());
    }

    #[test]
    fn free_variables_take_negative_values() {
        let mut p = Problem::new(vec![VarKind::Free, VarKind::Free]);
        p.add(vec![1, 0], Relation::Le, -2);
        p.add(vec![2, 3], Relation::Eq, -1);
        let x = p.solve().unwrap();
        assert!(satisfies(&p, &x));
        assert!(x[0] <= q(-2, 1));
    }

    #[test]
    fn fractional_vertex() {
        let mut p = Problem::new(vec![VarKind::NonNegative]);
        p.add(vec![3], Relation::Eq, 2);
        assert_eq!(p.solve().unwrap(), vec![q(2, 3)]);
    }

    #[test]
    fn degenerate_system_terminates() {
        // many redundant constraints through the origin
        let mut p = Problem::new(vec![VarKind::NonNegative; 3]);
        for a in -2..=2 {
            for b in -2..=2 {
                p.add(vec![a, b, 1], Relation::Ge, 0);
            }
        }
        p.add(vec![1, 1, 1], Relation::Eq, 1);
        let x = p.solve().unwrap();
        assert!(satisfies(&p, &x));
    }

    #[test]
    fn bigint_fallback_matches() {
        let mut p = Problem::new(vec![VarKind::NonNegative; 2]);
        let big = 1_000_000_000_000_000_000i64;
        p.add(vec![big, big - 1], Relation::Eq, big);
        p.add(vec![big - 3, big], Relation::Eq, big - 1);
        let form = StandardForm::build(&p);
        let small = run::<i128>(&form);
        let wide = run::<BigInt>(&form).unwrap();
        if let Some(small) = small {
            assert_eq!(small, wide);
        }
        let x = p.solve().unwrap();
        assert!(satisfies(&p, &x));
    }

    #[test]
    fn empty_problem_is_feasible() {
        let p = Problem::new(vec![VarKind::Free]);
        assert_eq!(p.solve().unwrap(), vec![BigRational::zero()]);
        let mut p = Problem::new(vec![]);
        p.add(vec![], Relation::Le, 0);
        assert!(p.is_feasible());
        let mut p = Problem::new(vec![]);
        p.add(vec![], Relation::Ge, 1);
        assert!(!p.is_feasible());
        let _ = BigRational::one();
    }
}
