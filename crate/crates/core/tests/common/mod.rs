//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls a recognizer from the library. Tables are plain `u64`
//! words (bit `x` is `f(x)`, x1 is the low index bit) for `n <= 6`, and the
//! larger-arity helpers only read `TruthTable::get`.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use boolfn::threshold::{self, SummabilityWitness};
use boolfn::TruthTable;
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn bit(w: u64, x: usize) -> bool {
    w >> x & 1 == 1
}

pub fn full(n: usize) -> u64 {
    if n == 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

pub fn word(f: &TruthTable) -> u64 {
    (0..1usize << f.arity())
        .filter(|&x| f.get(x))
        .fold(0, |acc, x| acc | 1 << x)
}

pub fn table(n: usize, w: u64) -> TruthTable {
    TruthTable::from_fn(n, |x| bit(w, x)).unwrap()
}

/// `x <= y` coordinatewise implies `f(x) <= f(y)`, over all pairs.
pub fn is_positive(n: usize, w: u64) -> bool {
    for y in 0..1usize << n {
        for x in 0..1usize << n {
            if x & !y == 0 && bit(w, x) && !bit(w, y) {
                return false;
            }
        }
    }
    true
}

pub fn depends(n: usize, w: u64, v: usize) -> bool {
    (0..1usize << n).any(|x| bit(w, x) != bit(w, x ^ 1 << v))
}

pub fn relevant(n: usize, w: u64) -> Vec<usize> {
    (0..n).filter(|&v| depends(n, w, v)).collect()
}

/// Drops irrelevant variables, keeping the order of the rest.
pub fn compact(n: usize, w: u64) -> (usize, u64) {
    let rel = relevant(n, w);
    let k = rel.len();
    let mut out = 0u64;
    for y in 0..1usize << k {
        let x = (0..k).fold(0usize, |acc, j| acc | (y >> j & 1) << rel[j]);
        if bit(w, x) {
            out |= 1 << y;
        }
    }
    (k, out)
}

/// Every restriction `(bound, values)` with at least one fixed variable,
/// returned as `n`-variable words.
pub fn proper_restrictions(n: usize, w: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for bound in 1usize..1 << n {
        for values in 0usize..1 << n {
            if values & !bound != 0 {
                continue;
            }
            let mut r = 0u64;
            for x in 0..1usize << n {
                if bit(w, (x & !bound) | values) {
                    r |= 1 << x;
                }
            }
            out.push(r);
        }
    }
    out
}

/// `g(x) = f(y)` with `y_perm[j] = x_j ^ neg_j`.
pub fn transform(n: usize, w: u64, perm: &[usize], neg: usize) -> u64 {
    let mut out = 0u64;
    for x in 0..1usize << n {
        let z = x ^ neg;
        let y = (0..n).fold(0usize, |acc, j| acc | (z >> j & 1) << perm[j]);
        if bit(w, y) {
            out |= 1 << x;
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Orbit under permutation and negation of variables.
pub fn orbit(n: usize, w: u64) -> HashSet<u64> {
    let mut out = HashSet::new();
    for p in permutations(n) {
        for neg in 0..1usize << n {
            out.insert(transform(n, w, &p, neg));
        }
    }
    out
}

/// Some restriction (possibly empty) of `f`, on its relevant variables,
/// lies in the orbit of the pattern (given on exactly `k` relevant variables).
pub fn contains_up_to_equivalence(n: usize, w: u64, k: usize, orbit: &HashSet<u64>) -> bool {
    std::iter::once(w)
        .chain(proper_restrictions(n, w))
        .any(|r| {
            let (m, c) = compact(n, r);
            m == k && orbit.contains(&c)
        })
}

/// Threshold functions of `n <= 4` variables: every integer weight vector in
/// `[-bound, bound]^n` with every cut.
pub fn threshold_set(n: usize, bound: i64) -> HashSet<u64> {
    separations(n, bound).into_keys().collect()
}

/// For each threshold function, the zeros lying on some separating hyperplane
/// found among integer weights in `[-bound, bound]^n`.
pub fn separations(n: usize, bound: i64) -> HashMap<u64, u64> {
    let mut out: HashMap<u64, u64> = HashMap::new();
    let side = (2 * bound + 1) as usize;
    for code in 0..side.pow(n as u32) {
        let weights: Vec<i64> = (0..n)
            .map(|j| (code / side.pow(j as u32) % side) as i64 - bound)
            .collect();
        let sums: Vec<i64> = (0..1usize << n)
            .map(|x| (0..n).filter(|j| x >> j & 1 == 1).map(|j| weights[j]).sum())
            .collect();
        let mut cuts: Vec<i64> = sums.clone();
        cuts.push(sums.iter().min().unwrap() - 1);
        cuts.sort_unstable();
        cuts.dedup();
        for t in cuts {
            let w = (0..1usize << n)
                .filter(|&x| sums[x] > t)
                .fold(0u64, |acc, x| acc | 1 << x);
            let tight = (0..1usize << n)
                .filter(|&x| sums[x] == t)
                .fold(0u64, |acc, x| acc | 1 << x);
            *out.entry(w).or_default() |= tight;
        }
    }
    out
}

/// Points where flipping `f` stays inside the given threshold class.
pub fn brute_essential(n: usize, w: u64, class: &HashSet<u64>) -> Vec<usize> {
    (0..1usize << n)
        .filter(|&x| class.contains(&(w ^ 1 << x)))
        .collect()
}

/// Linear read-once functions of `n <= 5` variables: constants and every
/// `literal op g` chain built one fresh variable at a time.
pub fn lro_set(n: usize) -> HashSet<u64> {
    let mut by_support: Vec<HashSet<u64>> = vec![HashSet::new(); 1 << n];
    for support in 1usize..1 << n {
        let mut set = HashSet::new();
        for v in (0..n).filter(|v| support >> v & 1 == 1) {
            let lits = literals(n, v);
            let rest = support & !(1 << v);
            for lit in lits {
                if rest == 0 {
                    set.insert(lit);
                    continue;
                }
                for &g in &by_support[rest] {
                    set.insert(lit & g);
                    set.insert(lit | g);
                }
            }
        }
        by_support[support] = set;
    }
    let mut all: HashSet<u64> = by_support.into_iter().flatten().collect();
    all.insert(0);
    all.insert(full(n));
    all
}

/// Read-once functions of `n <= 4` variables: constants, literals, and `&`/`|`
/// of read-once functions on disjoint supports.
pub fn read_once_set(n: usize) -> HashSet<u64> {
    let mut by_support: Vec<HashSet<u64>> = vec![HashSet::new(); 1 << n];
    for support in 1usize..1 << n {
        let mut set = HashSet::new();
        if support.count_ones() == 1 {
            set.extend(literals(n, support.trailing_zeros() as usize));
        } else {
            let low = support & support.wrapping_neg();
            // a ranges over proper subsets containing the lowest variable
            let mut a = (support - 1) & support;
            while a > 0 {
                if a & low != 0 {
                    let b = support & !a;
                    for &f in &by_support[a] {
                        for &g in &by_support[b] {
                            set.insert(f & g);
                            set.insert(f | g);
                        }
                    }
                }
                a = (a - 1) & support;
            }
        }
        by_support[support] = set;
    }
    let mut all: HashSet<u64> = by_support.into_iter().flatten().collect();
    all.insert(0);
    all.insert(full(n));
    all
}

fn literals(n: usize, v: usize) -> [u64; 2] {
    let pos = (0..1usize << n)
        .filter(|x| x >> v & 1 == 1)
        .fold(0u64, |acc, x| acc | 1 << x);
    [pos, !pos & full(n)]
}

/// `(w_1, ..., w_n, w)`: true points with `x_i = 1`, then all true points.
pub fn chow(n: usize, w: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..n)
        .map(|v| {
            (0..1usize << n)
                .filter(|&x| bit(w, x) && x >> v & 1 == 1)
                .count() as u64
        })
        .collect();
    out.push(w.count_ones() as u64);
    out
}

/// Tables of `n <= 4` variables that are alone with their Chow parameters.
pub fn chow_unique(n: usize) -> HashSet<u64> {
    let mut buckets: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
    for w in 0..=full(n) {
        buckets.entry(chow(n, w)).or_default().push(w);
    }
    buckets
        .into_values()
        .filter(|v| v.len() == 1)
        .map(|v| v[0])
        .collect()
}

pub fn all_words(n: usize) -> impl Iterator<Item = u64> {
    0..=full(n)
}

// -- tables of any arity ------------------------------------------------------

pub fn from_fn(n: usize, f: impl Fn(&[bool]) -> bool) -> TruthTable {
    TruthTable::from_fn(n, |x| {
        let bits: Vec<bool> = (0..n).map(|j| x >> j & 1 == 1).collect();
        f(&bits)
    })
    .unwrap()
}

/// `x1 x2 | x1 x3 | ... | x1 xn | x2 ... xn`
pub fn g_n(n: usize) -> TruthTable {
    from_fn(n, |x| {
        (1..n).any(|j| x[0] && x[j]) || x[1..].iter().all(|&b| b)
    })
}

/// `x1 x2 | ... | x1 x(n-1) | x2 ... xn`
pub fn f_n(n: usize) -> TruthTable {
    from_fn(n, |x| {
        (1..n - 1).any(|j| x[0] && x[j]) || x[1..].iter().all(|&b| b)
    })
}

pub fn h1(n: usize) -> TruthTable {
    from_fn(n, |x| x.iter().all(|&b| b) || x.iter().all(|&b| !b))
}

pub fn h2(n: usize) -> TruthTable {
    from_fn(n, |x| {
        (x[0] && (x[1] || x[2..].iter().all(|&b| b))) || (x[1] && x[2..].iter().all(|&b| !b))
    })
}

pub fn h3() -> TruthTable {
    from_fn(5, |x| {
        (x[0] && (x[2] && x[3] || x[4])) || (x[1] && (x[2] || x[3] && x[4]))
    })
}

pub fn h4() -> TruthTable {
    from_fn(4, |x| (x[0] && (x[1] || x[2])) || (x[2] && x[3]))
}

pub fn g1() -> TruthTable {
    from_fn(4, |x| (x[0] || x[1]) && (x[2] || x[3]))
}

pub fn g2() -> TruthTable {
    from_fn(4, |x| (x[0] && x[1]) || (x[2] && x[3]))
}

pub fn positive_any(f: &TruthTable) -> bool {
    let n = f.arity();
    (0..n).all(|v| (0..1usize << n).all(|x| x >> v & 1 == 1 || !f.get(x) || f.get(x | 1 << v)))
}

/// Positive or negative in every variable.
pub fn unate_any(f: &TruthTable) -> bool {
    let n = f.arity();
    (0..n).all(|v| {
        let mut up = false;
        let mut down = false;
        for x in (0..1usize << n).filter(|x| x >> v & 1 == 0) {
            match (f.get(x), f.get(x | 1 << v)) {
                (false, true) => up = true,
                (true, false) => down = true,
                _ => {}
            }
        }
        !(up && down)
    })
}

pub fn canalyzing_any(f: &TruthTable) -> bool {
    let n = f.arity();
    (0..n).any(|v| {
        [0usize, 1].iter().any(|&b| {
            let vals: HashSet<bool> = (0..1usize << n)
                .filter(|x| x >> v & 1 == b)
                .map(|x| f.get(x))
                .collect();
            vals.len() == 1
        })
    })
}

/// `(minimal ones, maximal zeros)` of a positive function, as index lists.
pub fn extremal_any(f: &TruthTable) -> (Vec<usize>, Vec<usize>) {
    let n = f.arity();
    let mut ones = Vec::new();
    let mut zeros = Vec::new();
    for x in 0..1usize << n {
        if f.get(x) {
            if (0..n).all(|v| x >> v & 1 == 0 || !f.get(x ^ 1 << v)) {
                ones.push(x);
            }
        } else if (0..n).all(|v| x >> v & 1 == 1 || f.get(x | 1 << v)) {
            zeros.push(x);
        }
    }
    (ones, zeros)
}

/// A positive read-once function meets each of its prime implicates in
/// exactly one variable of each prime implicant. A minimal one and a maximal
/// zero sharing two such variables rule read-once out.
pub fn positive_non_read_once_witness(f: &TruthTable) -> Option<(usize, usize)> {
    let (ones, zeros) = extremal_any(f);
    let mask = (1usize << f.arity()) - 1;
    for &u in &ones {
        for &z in &zeros {
            if (u & !z & mask).count_ones() >= 2 {
                return Some((u, z));
            }
        }
    }
    None
}

/// Checks `f(x) = 0 <=> sum w_i x_i <= t` by direct evaluation.
pub fn check_representation(f: &TruthTable, weights: &[BigRational], t: &BigRational) -> bool {
    (0..1usize << f.arity()).all(|x| {
        let s: BigRational = (0..f.arity())
            .filter(|j| x >> j & 1 == 1)
            .map(|j| weights[j].clone())
            .sum();
        (s > *t) == f.get(x)
    })
}

pub fn check_integer_representation(f: &TruthTable, weights: &[i64], t: i64) -> bool {
    let w: Vec<BigRational> = weights
        .iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect();
    check_representation(f, &w, &BigRational::from_integer(BigInt::from(t)))
}

/// A summability witness proves non-threshold: falses and trues, at most `k`
/// each, equally many, with equal coordinate sums.
pub fn check_summability(f: &TruthTable, w: &SummabilityWitness, k: usize) -> bool {
    let n = f.arity();
    let a = &w.false_points;
    let b = &w.true_points;
    if a.is_empty() || a.len() != b.len() || a.len() > k {
        return false;
    }
    if a.iter().any(|p| f.get(p.index())) || b.iter().any(|p| !f.get(p.index())) {
        return false;
    }
    (0..n).all(|j| {
        let sa = a.iter().filter(|p| p.index() >> j & 1 == 1).count();
        let sb = b.iter().filter(|p| p.index() >> j & 1 == 1).count();
        sa == sb
    })
}

/// Per point of a threshold `f`: is the flipped function threshold?
/// Each answer is backed by a certificate checked here: binate variable or
/// summability witness for "no", a representation re-evaluated for "yes".
/// `None` when neither certificate is available.
pub fn certified_essential(f: &TruthTable) -> Option<Vec<usize>> {
    let n = f.arity();
    let mut essential = Vec::new();
    for x in 0..1usize << n {
        let g = TruthTable::from_fn(n, |y| f.get(y) != (y == x)).unwrap();
        if !unate_any(&g) {
            continue;
        }
        if let Some(rep) = threshold::is_threshold(&g) {
            if !check_representation(&g, &rep.weights, &rep.threshold) {
                return None;
            }
            essential.push(x);
            continue;
        }
        let witness = [2usize, 3]
            .into_iter()
            .filter(|&k| n <= threshold::MAX_SUMMABILITY_ARITY[k - 2])
            .find_map(|k| {
                threshold::is_k_summable(&g, k)
                    .ok()
                    .flatten()
                    .filter(|w| check_summability(&g, w, k))
            });
        witness?;
    }
    Some(essential)
}

/// Restriction that removes the fixed variables (the arity drops by
/// `|bound|`); irrelevant free variables stay.
pub fn restrict_drop(n: usize, w: u64, bound: usize, values: usize) -> (usize, u64) {
    let free: Vec<usize> = (0..n).filter(|v| bound >> v & 1 == 0).collect();
    let m = free.len();
    let mut out = 0u64;
    for y in 0..1usize << m {
        let x = (0..m).fold(values, |acc, j| acc | (y >> j & 1) << free[j]);
        if bit(w, x) {
            out |= 1 << y;
        }
    }
    (m, out)
}

/// Every `(bound, values)` pair with `bound` nonempty.
pub fn assignments(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for bound in 1usize..1 << n {
        for values in 0usize..1 << n {
            if values & !bound == 0 {
                out.push((bound, values));
            }
        }
    }
    out
}
