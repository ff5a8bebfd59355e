//! Brute-force cross-check for the chromatic number.
//!
//! Tries `k = 1, 2, ...` and enumerates assignments vertex by vertex in index
//! order, with vertex 0 fixed to color 0. No saturation ordering, clique
//! bounds, or other machinery shared with the branch-and-bound solver.

use crate::graph::Graph;

use super::InvariantError;

/// Largest order the enumeration oracles accept.
pub const ORACLE_MAX_N: usize = 10;

fn extend(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
    let v = colors.len();
    if v == g.order() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
            colors.push(c);
            if extend(g, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

pub fn oracle_chromatic_number(g: &Graph) -> Result<usize, InvariantError> {
    let n = g.order();
    if n > ORACLE_MAX_N {
        return Err(InvariantError::GuardExceeded { n, limit: ORACLE_MAX_N });
    }
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n {
        let mut colors = vec![0];
        if extend(g, k, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_chromatic_number(&Graph::cycle(5).unwrap()), Ok(3));
        assert_eq!(oracle_chromatic_number(&Graph::empty(3).unwrap()), Ok(1));
        assert_eq!(oracle_chromatic_number(&Graph::complete(4).unwrap()), Ok(4));
        assert_eq!(oracle_chromatic_number(&Graph::petersen()), Ok(3));
        assert_eq!(oracle_chromatic_number(&Graph::complete(10).unwrap()), Ok(10));
    }

    #[test]
    fn oracle_guard() {
        assert_eq!(
            oracle_chromatic_number(&Graph::empty(11).unwrap()),
            Err(InvariantError::GuardExceeded { n: 11, limit: 10 })
        );
    }
}
