//! Read-once and linear read-once recognition with certificate formulas.
//!
//! Both recognizers work on same-arity cofactors so that certificate variables
//! keep their original indices.

use std::collections::HashMap;

use crate::formula::{Formula, FormulaAst};
use crate::table::TruthTable;

/// A read-once formula for `f`, or `None` when `f` is not read-once.
///
/// Decomposes `f` as `f_A & f_B` or `f_A | f_B` over a bipartition of its
/// relevant variables and recurses. Candidate blocks `A` contain the lowest
/// relevant variable and are tried by increasing size; the first valid split
/// is used. A component of a read-once function is one of its restrictions, so
/// a failing component means `f` itself is not read-once.
pub fn is_read_once(f: &TruthTable) -> Option<FormulaAst> {
    let mut memo = HashMap::new();
    let root = read_once_formula(f, &mut memo)?;
    Some(FormulaAst::new(f.arity(), root).expect("certificate variables lie within the arity"))
}

fn read_once_formula(
    f: &TruthTable,
    memo: &mut HashMap<TruthTable, Option<Formula>>,
) -> Option<Formula> {
    if let Some(hit) = memo.get(f) {
        return hit.clone();
    }
    let result = decompose(f, memo);
    memo.insert(f.clone(), result.clone());
    result
}

fn decompose(f: &TruthTable, memo: &mut HashMap<TruthTable, Option<Formula>>) -> Option<Formula> {
    if let Some(c) = f.constant_value() {
        return Some(Formula::Const(c));
    }
    let relevant = f.relevant_variables();
    if relevant.len() == 1 {
        let v = relevant[0];
        return Some(Formula::literal(v, *f == f.var_table(v)));
    }
    let (first, rest) = relevant.split_first().unwrap();
    let rest_full = (1usize << rest.len()) - 1;
    let mut subsets: Vec<usize> = (0..rest_full).collect();
    subsets.sort_by_key(|&s| (s.count_ones(), s));
    for s in subsets {
        let mut block_a = vec![*first];
        let mut block_b = Vec::new();
        for (j, &v) in rest.iter().enumerate() {
            if s >> j & 1 == 1 {
                block_a.push(v);
            } else {
                block_b.push(v);
            }
        }
        // f = (exists_B f) & (exists_A f)
        let part_a = quantify(f, &block_b, true);
        let part_b = quantify(f, &block_a, true);
        if part_a.and(&part_b) == *f {
            let left = read_once_formula(&part_a, memo)?;
            let right = read_once_formula(&part_b, memo)?;
            return Some(Formula::and([left, right]));
        }
        // f = (forall_B f) | (forall_A f)
        let part_a = quantify(f, &block_b, false);
        let part_b = quantify(f, &block_a, false);
        if part_a.or(&part_b) == *f {
            let left = read_once_formula(&part_a, memo)?;
            let right = read_once_formula(&part_b, memo)?;
            return Some(Formula::or([left, right]));
        }
    }
    None
}

/// Existential (`exists = true`) or universal projection over `vars`, same arity.
fn quantify(f: &TruthTable, vars: &[usize], exists: bool) -> TruthTable {
    vars.iter().fold(f.clone(), |acc, &v| {
        let other = acc.flip_var(v);
        if exists {
            acc.or(&other)
        } else {
            acc.and(&other)
        }
    })
}

/// A nested formula for `f`, or `None` when `f` is not linear read-once.
///
/// Peels one canalyzing variable at a time (ascending variable, input 0
/// before 1). Restrictions of lro functions are lro, so the first canalyzing
/// variable found never needs to be revisited.
pub fn is_lro(f: &TruthTable) -> Option<FormulaAst> {
    let root = lro_formula(f)?;
    Some(FormulaAst::new(f.arity(), root).expect("certificate variables lie within the arity"))
}

fn lro_formula(f: &TruthTable) -> Option<Formula> {
    if let Some(c) = f.constant_value() {
        return Some(Formula::Const(c));
    }
    for var in 0..f.arity() {
        for input in [false, true] {
            let Some(output) = f.cofactor(var, input).constant_value() else {
                continue;
            };
            let rest = lro_formula(&f.cofactor(var, !input))?;
            // f = (x_var == input) ? output : rest
            return Some(match (output, rest) {
                (true, Formula::Const(false)) => Formula::literal(var, input),
                (false, Formula::Const(true)) => Formula::literal(var, !input),
                (true, rest) => Formula::or([Formula::literal(var, input), rest]),
                (false, rest) => Formula::and([Formula::literal(var, !input), rest]),
            });
        }
    }
    None
}

/// Boolean-only lro test without building a certificate.
pub fn is_lro_fn(f: &TruthTable) -> bool {
    let mut g = f.clone();
    'peel: loop {
        if g.constant_value().is_some() {
            return true;
        }
        for var in 0..g.arity() {
            for input in [false, true] {
                if g.cofactor(var, input).constant_value().is_some() {
                    g = g.cofactor(var, !input);
                    continue 'peel;
                }
            }
        }
        return false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn read_once_examples() {
        let g1 = t("4:EEE0");
        let cert = is_read_once(&g1).unwrap();
        assert_eq!(cert.eval_to_table(), g1);
        assert!(cert.root().is_read_once());
        assert_eq!(cert.render(), "(x1 | x2) & (x3 | x4)");
        assert!(is_read_once(&t("3:E8")).is_none());
        assert!(is_read_once(&t("2:9")).is_none());
        assert!(is_read_once(&t("2:6")).is_none());
    }

    #[test]
    fn read_once_with_negations_and_dummies() {
        let f = parse("!x1 & (x3 | !x4) | x5", 6).unwrap();
        let table = f.eval_to_table();
        let cert = is_read_once(&table).unwrap();
        assert_eq!(cert.eval_to_table(), table);
        assert!(cert.root().is_read_once());
        assert!(cert
            .root()
            .occurrences()
            .iter()
            .all(|&v| table.depends_on(v)));
    }

    #[test]
    fn lro_examples() {
        let f = parse("x1 & (x2 | x3)", 3).unwrap().eval_to_table();
        assert_eq!(is_lro(&f).unwrap().render(), "x1 & (x2 | x3)");
        assert!(is_lro(&t("4:EEE0")).is_none());
        for n in 0..4 {
            let one = TruthTable::constant(n, true).unwrap();
            assert_eq!(is_lro(&one).unwrap().render(), "1");
        }
    }

    #[test]
    fn lro_with_negated_literals() {
        let f = parse("!x2 | x1 & !x3", 3).unwrap().eval_to_table();
        let cert = is_lro(&f).unwrap();
        assert_eq!(cert.eval_to_table(), f);
        assert!(cert.root().is_nested());
        assert!(is_lro_fn(&f));
    }

    #[test]
    fn positive_lro_certificates_have_no_negations() {
        let f = parse("x2 | x1 x3 (x4 | x5)", 5).unwrap().eval_to_table();
        let cert = is_lro(&f).unwrap();
        assert!(!cert.render().contains('!'));
        assert_eq!(cert.eval_to_table(), f);
    }
}
