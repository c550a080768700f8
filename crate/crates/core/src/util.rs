//! Small combinatorial helpers.

use itertools::Itertools;

/// Cartesian product of the choice lists; one empty tuple when `choices` is empty.
pub fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![vec![]];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for x in c {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// All functions `[m] -> [n]` as value lists.
pub fn functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    product(&vec![(0..n).collect::<Vec<_>>(); m])
}

/// All bijections `[n] -> [n]`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Sequences drawn from `items` (with weights) whose total weight is at most `budget`.
pub fn weighted_sequences<T: Clone>(items: &[(T, usize)], budget: usize) -> Vec<Vec<T>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn go<T: Clone>(items: &[(T, usize)], budget: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        out.push(cur.clone());
        for (x, w) in items {
            if *w <= budget {
                cur.push(x.clone());
                go(items, budget - w, cur, out);
                cur.pop();
            }
        }
    }
    go(items, budget, &mut cur, &mut out);
    out.sort_by_key(|s| s.len());
    out
}
