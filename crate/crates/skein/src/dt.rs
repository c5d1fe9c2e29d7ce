//! Dehn–Thurston coordinates for multicurves, with twists as relative
//! coordinates, and the single fractional twist move the reduction uses.

use serde::{Deserialize, Serialize};

/// Per pants-curve intersection and twist coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MultiCurveDT {
    pub inters: Vec<i64>,
    pub twists: Vec<i64>,
}

impl MultiCurveDT {
    pub fn new(inters: Vec<i64>, twists: Vec<i64>) -> Option<MultiCurveDT> {
        if inters.len() != twists.len() {
            return None;
        }
        let m = MultiCurveDT { inters, twists };
        if m.inters.iter().any(|&i| i < 0) {
            return None;
        }
        // tw_j must be a (nonnegative) count when I_j = 0
        if m
            .inters
            .iter()
            .zip(&m.twists)
            .any(|(&i, &t)| i == 0 && t < 0)
        {
            return None;
        }
        Some(m)
    }

    /// Parity check over pants triples (indices of the three boundary curves
    /// of each pants).
    pub fn parity_ok(&self, triples: &[[usize; 3]]) -> bool {
        triples.iter().all(|t| {
            let s: i64 = t.iter().map(|&j| self.inters[j]).sum();
            s % 2 == 0
        })
    }
}

/// Fractional Dehn twist along pants curve `j`: adds `k` to the twist
/// coordinate when `I_j > 0`; the identity when `I_j = 0`.
pub fn dt_twist_move(m: &MultiCurveDT, j: usize, k: i64) -> MultiCurveDT {
    let mut out = m.clone();
    if out.inters[j] > 0 {
        out.twists[j] += k;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_move_semantics() {
        let m = MultiCurveDT::new(vec![4, 0], vec![0, 2]).unwrap();
        let m1 = dt_twist_move(&m, 0, 1);
        assert_eq!(m1.twists, vec![1, 2]);
        assert_eq!(m1.inters, m.inters);
        // k = 0 is the identity
        assert_eq!(dt_twist_move(&m, 0, 0), m);
        // k then -k is the identity
        assert_eq!(dt_twist_move(&dt_twist_move(&m, 0, 3), 0, -3), m);
        // I_j = 0: the move is the identity
        assert_eq!(dt_twist_move(&m, 1, 5), m);
    }

    #[test]
    fn validation() {
        assert!(MultiCurveDT::new(vec![-1], vec![0]).is_none());
        assert!(MultiCurveDT::new(vec![0], vec![-1]).is_none());
        let m = MultiCurveDT::new(vec![1, 1, 2], vec![0, 0, 0]).unwrap();
        assert!(m.parity_ok(&[[0, 1, 2]]));
        let m2 = MultiCurveDT::new(vec![1, 1, 1], vec![0, 0, 0]).unwrap();
        assert!(!m2.parity_ok(&[[0, 1, 2]]));
    }
}
