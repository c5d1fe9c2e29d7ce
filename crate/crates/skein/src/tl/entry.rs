//! Operator matrix-entry extraction on the dumbbell.
//!
//! Entries of a curve operator at a coloring c are recovered from exact S³
//! evaluations: λ_j(T φ_c) = Σ_x F_x λ_j(φ_{c+x}) for a family of functionals
//! λ_j given by probe insertions (meridian circles and parallel rings around
//! the handles), solved as an exact linear system over ℚ(A). The flat spine
//! evaluates to zero on many colorings, so rings — which link the handles —
//! are essential to reach full rank.

use crate::error::OpError;
use crate::graph::{dumbbell, is_admissible, Coloring};
use crate::ring::RatFunc;

use super::mor::{Pairing, TLMor};
use super::net::{encircle_mor, split_vertex, vertex_mor};
use super::rules::COMEBACK_CLASP;

/// Chirality of a ring (handle-parallel circle) crossing the stem bundle.
pub const RING_FRONT: bool = false;

fn nested_cup(n: u16) -> TLMor {
    if n == 0 {
        return TLMor::identity(0);
    }
    let mut pairs = vec![0u16; 2 * n as usize];
    for i in 0..n {
        pairs[i as usize] = 2 * n - 1 - i;
        pairs[(2 * n - 1 - i) as usize] = i;
    }
    TLMor::from_pairing(Pairing {
        dom: 0,
        cod: 2 * n,
        pairs,
    })
}

fn apply_at(st: &TLMor, at: u16, m: &TLMor) -> Result<TLMor, OpError> {
    st.then(&m.padded(at, st.cod - at - m.dom))
}

/// Slide a whole block of `k` adjacent strands starting at `from` leftwards
/// across the `w` strands to its left, preserving the block's order.
fn slide_block_left(width: u16, from: u16, k: u16, w: u16, chir: bool) -> Result<TLMor, OpError> {
    let mut m = TLMor::identity(width);
    for i in 0..k {
        // the i-th strand of the block starts at from + i and must cross w
        m = m.then(&TLMor::slide_left(width, from + i, w, chir)?)?;
        // after sliding, it sits at from + i - w; subsequent strands slide
        // across the same w strands which now start one position later
    }
    Ok(m)
}

/// Slide a block of `k` adjacent strands starting at `from` rightwards
/// across the `w` strands to its right, preserving the block's order.
fn slide_block_right(width: u16, from: u16, k: u16, w: u16, chir: bool) -> Result<TLMor, OpError> {
    let mut m = TLMor::identity(width);
    for i in 0..k {
        m = m.then(&TLMor::slide_right(width, from + k - 1 - i, w, chir)?)?;
    }
    Ok(m)
}

/// The dumbbell network with parallel rings, an optional middle arc curve,
/// an optional thread through both holes, and meridian probes, colored
/// (a0, a1, b). Exact S³ value.
///
/// Rings are handle-parallel circles (the β-curves of loop edges); `r0`/`r1`
/// count rings on each loop. The arc curve is the β-curve of the middle edge
/// with come-back clasps around the near arms. The thread is a probe circle
/// passing through both holes; it links both handles and detects colorings
/// whose flat evaluation vanishes.
pub fn dumbbell_value(
    colors: [i64; 3],
    r0: u16,
    r1: u16,
    arc: bool,
    threads: u16,
    alpha: [u32; 3],
) -> Result<RatFunc, OpError> {
    let (ct, cb) = (true, true);
    if colors.iter().any(|&c| c < 0) {
        return Err(OpError::InadmissibleVertex(colors[0], colors[1], colors[2]));
    }
    let a0 = colors[0] as u16;
    let a1 = colors[1] as u16;
    let b = colors[2] as u16;
    let m = threads;
    // --- left loop with r0 rings nested outside ---
    // blocks: [R0t: r0][A0t: a0][A0b: a0][R0b: r0]
    let mut st = nested_cup(r0 + a0);
    for _ in 0..alpha[0] {
        st = apply_at(&st, 0, &encircle_mor(r0 + a0)?)?;
    }
    let g1_off = m; // width of the upper thread block at the far left
    if m > 0 {
        // inject the thread cups between the arms; upper halves exit above,
        // lower halves below
        let at = r0 + a0;
        st = apply_at(&st, at, &nested_cup(m))?;
        let width = st.cod;
        st = apply_at(&st, 0, &slide_block_left(width, at, m, r0 + a0, ct)?)?;
        st = apply_at(&st, 0, &slide_block_right(width, at + m, m, r0 + a0, cb)?)?;
        // blocks: [G1: m][R0t][A0t][A0b][R0b][G2: m]
    }
    if arc {
        // inject the wrap cup between R0b and g2; clasp the bottom arm
        let at = g1_off + r0 + 2 * a0 + r0;
        st = apply_at(&st, at, &TLMor::cup())?;
        let width = st.cod;
        // s1 crosses R0b with a cancelling pair around the clasp
        if r0 > 0 {
            st = apply_at(&st, 0, &TLMor::slide_left(width, at, r0, true)?)?;
        }
        st = apply_at(
            &st,
            0,
            &TLMor::slide_left(width, at - r0, a0, COMEBACK_CLASP)?,
        )?;
        st = apply_at(
            &st,
            0,
            &TLMor::slide_right(width, at - r0 - a0, a0, COMEBACK_CLASP)?,
        )?;
        if r0 > 0 {
            st = apply_at(&st, 0, &TLMor::slide_right(width, at - r0, r0, false)?)?;
        }
        // blocks: [g1?][R0t][A0t][A0b][R0b][s1][s2][g2?]
    }
    // --- vertex v0 on the two arm blocks ---
    st = apply_at(&st, g1_off + r0, &vertex_mor(a0, a0, b)?)?;
    // blocks: [g1?][R0t][b][R0b][s1 s2?][g2?]
    if r0 > 0 {
        // rings close: R0b crosses the stem bundle and caps nested with R0t
        let width = st.cod;
        st = apply_at(
            &st,
            0,
            &slide_block_left(width, g1_off + r0 + b, r0, b, RING_FRONT)?,
        )?;
        // blocks: [g1?][R0t][R0b][b][s1 s2?][g2?]
        st = apply_at(&st, g1_off, &nested_cup(r0).transpose())?;
    }
    // blocks: [g1?][b][s1 s2?][g2?]
    let mid = b + if arc { 2 } else { 0 };
    for _ in 0..alpha[2] {
        st = apply_at(&st, g1_off, &encircle_mor(mid)?)?;
    }
    // --- right loop rings between the middle block and g2 ---
    if r1 > 0 {
        let at = g1_off + mid;
        st = apply_at(&st, at, &nested_cup(r1))?;
        let width = st.cod;
        // upper ring strands cross the middle cross-section leftwards
        st = apply_at(&st, 0, &slide_block_left(width, at, r1, mid, RING_FRONT)?)?;
        // blocks: [g1?][U1][b][s1 s2?][W1][g2?]
    }
    // --- split vertex v1 ---
    st = apply_at(&st, g1_off + r1, &split_vertex(b, a1, a1)?)?;
    // blocks: [g1?][U1][A1t][A1b][s1 s2?][W1][g2?]
    if arc {
        let width = st.cod;
        let s1_at = g1_off + r1 + 2 * a1;
        st = apply_at(&st, 0, &TLMor::slide_left(width, s1_at, a1, COMEBACK_CLASP)?)?;
        st = apply_at(
            &st,
            0,
            &TLMor::slide_right(width, s1_at - a1, a1, COMEBACK_CLASP)?,
        )?;
        st = apply_at(&st, s1_at, &TLMor::cap())?;
    }
    // blocks: [g1?][U1][A1t][A1b][W1][g2?]
    if m > 0 {
        let width = st.cod;
        // upper thread block crosses rings and the top arm into the hole
        st = apply_at(&st, 0, &slide_block_right(width, 0, m, r1 + a1, ct)?)?;
        // lower block crosses rings and the bottom arm into the hole
        st = apply_at(&st, 0, &slide_block_left(width, width - m, m, r1 + a1, cb)?)?;
        // blocks: [U1][A1t][G1][G2][A1b][W1]: cap the threads nested
        st = apply_at(&st, r1 + a1, &nested_cup(m).transpose())?;
    }
    for _ in 0..alpha[1] {
        st = apply_at(&st, 0, &encircle_mor(r1 + a1)?)?;
    }
    // final nested closure of [U1][A1t][A1b][W1]
    let n = st.cod;
    let mut pairs = vec![0u16; n as usize];
    for i in 0..n / 2 {
        pairs[i as usize] = n - 1 - i;
        pairs[(n - 1 - i) as usize] = i;
    }
    st = st.then(&TLMor::from_pairing(Pairing {
        dom: n,
        cod: 0,
        pairs,
    }))?;
    Ok(st.scalar())
}

/// α-eigenvalue −A^{2+2n} − A^{−2−2n}.
pub fn alpha_eigenvalue(n: i64) -> RatFunc {
    RatFunc::a_pow(2 + 2 * n)
        .neg()
        .sub(&RatFunc::a_pow(-2 - 2 * n))
}

/// Solve a square dense linear system over ℚ(A). None if singular.
pub fn solve_ratfunc(mut m: Vec<Vec<RatFunc>>, mut rhs: Vec<RatFunc>) -> Option<Vec<RatFunc>> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = m[col][col].inv().ok()?;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..n {
                let t = m[col][c].mul(&f);
                m[r][c] = m[r][c].sub(&t);
            }
            let t = rhs[col].mul(&f);
            rhs[r] = rhs[r].sub(&t);
        }
    }
    let mut out = Vec::with_capacity(n);
    for r in 0..n {
        out.push(rhs[r].div(&m[r][r]).ok()?);
    }
    Some(out)
}

/// Which curve operator to extract.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DumbbellOp {
    Alpha(u8),
    BetaLoop0,
    BetaLoop1,
    BetaArc2,
}

/// A probe: thread multiplicity, ring counts and meridian powers.
#[derive(Clone, Copy, Debug)]
struct Probe {
    threads: u16,
    r0: u16,
    r1: u16,
    alpha: [u32; 3],
}

fn probe_value(colors: [i64; 3], p: Probe) -> Result<RatFunc, OpError> {
    dumbbell_value(colors, p.r0, p.r1, false, p.threads, p.alpha)
}

fn op_value(colors: [i64; 3], op: DumbbellOp, p: Probe) -> Result<RatFunc, OpError> {
    match op {
        DumbbellOp::Alpha(e) => {
            let mut a = p.alpha;
            a[e as usize] += 1;
            dumbbell_value(colors, p.r0, p.r1, false, p.threads, a)
        }
        DumbbellOp::BetaLoop0 => dumbbell_value(colors, p.r0 + 1, p.r1, false, p.threads, p.alpha),
        DumbbellOp::BetaLoop1 => dumbbell_value(colors, p.r0, p.r1 + 1, false, p.threads, p.alpha),
        DumbbellOp::BetaArc2 => dumbbell_value(colors, p.r0, p.r1, true, p.threads, p.alpha),
    }
}

/// Extract the action column of `op` at coloring `c` on the dumbbell:
/// the admissible targets with their exact ℚ(A) coefficients.
pub fn dumbbell_oracle_action(
    op: DumbbellOp,
    c: [i64; 3],
) -> Result<Vec<([i64; 3], RatFunc)>, OpError> {
    let g = dumbbell();
    let adm = |x: [i64; 3]| is_admissible(&g, &Coloring(x.to_vec()));
    if !adm(c) {
        return Err(OpError::InadmissibleVertex(c[0], c[1], c[2]));
    }
    let shifts: Vec<[i64; 3]> = match op {
        DumbbellOp::Alpha(_) => vec![[0, 0, 0]],
        DumbbellOp::BetaLoop0 => vec![[1, 0, 0], [-1, 0, 0]],
        DumbbellOp::BetaLoop1 => vec![[0, 1, 0], [0, -1, 0]],
        DumbbellOp::BetaArc2 => vec![[0, 0, 2], [0, 0, 0], [0, 0, -2]],
    };
    let targets: Vec<[i64; 3]> = shifts
        .iter()
        .map(|x| [c[0] + x[0], c[1] + x[1], c[2] + x[2]])
        .filter(|t| adm(*t))
        .collect();
    if targets.is_empty() {
        return Ok(Vec::new());
    }
    let n = targets.len();
    // deterministic probe candidates; extend until the target matrix has
    // full rank
    let candidates: Vec<Probe> = {
        let mut v = Vec::new();
        for threads in 0..=2u16 {
            for r0 in 0..=1u16 {
                for r1 in 0..=1u16 {
                    for k0 in 0..=2u32 {
                        for k1 in 0..=2u32 {
                            for k2 in 0..=2u32 {
                                v.push(Probe {
                                    threads,
                                    r0,
                                    r1,
                                    alpha: [k0, k1, k2],
                                });
                            }
                        }
                    }
                }
            }
        }
        // cheapest first: fewer insertions, lower meridian powers
        v.sort_by_key(|p| {
            (
                p.r0 + p.r1 + p.threads,
                p.alpha[0] + p.alpha[1] + p.alpha[2],
                p.r0,
                p.alpha[0],
                p.alpha[2],
            )
        });
        v
    };
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();
    let mut rhs: Vec<RatFunc> = Vec::new();
    for p in candidates {
        let row: Vec<RatFunc> = targets
            .iter()
            .map(|t| probe_value(*t, p))
            .collect::<Result<_, _>>()?;
        if row.iter().all(|x| x.is_zero()) {
            continue;
        }
        // keep the row only if it increases the rank
        let mut trial = rows.clone();
        trial.push(row.clone());
        if rank_ratfunc(&trial) > rows.len() {
            rows.push(row);
            rhs.push(op_value(c, op, p)?);
            if rows.len() == n {
                break;
            }
        }
    }
    if rows.len() < n {
        return Err(OpError::InadmissibleArc(
            "probe family does not separate the targets".into(),
        ));
    }
    let sol = solve_ratfunc(rows, rhs)
        .ok_or_else(|| OpError::InadmissibleArc("probe system singular".into()))?;
    Ok(targets.into_iter().zip(sol).collect())
}

/// Exact rank of a list of ℚ(A)-rows.
pub fn rank_ratfunc(rows: &[Vec<RatFunc>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<RatFunc>> = rows.to_vec();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let piv = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(rank, piv);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for r in 0..m.len() {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c2 in col..ncols {
                let t = m[rank][c2].mul(&f);
                m[r][c2] = m[r][c2].sub(&t);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quantum_integer as q;

    #[test]
    fn ring_linked_values_nonzero() {
        // one ring on the left loop links it: nonzero even when the flat
        // value vanishes
        for c in [[1i64, 1, 2], [2, 2, 2], [2, 1, 2]] {
            let v = dumbbell_value(c, 0, 0, false, 1, [0, 0, 0]).unwrap();
            assert!(!v.is_zero(), "thread value at {:?}", c);
        }
    }

    #[test]
    fn alpha_action_is_diagonal() {
        for c in [[1i64, 1, 2], [2, 1, 2], [2, 2, 0]] {
            for e in 0..3u8 {
                let act = dumbbell_oracle_action(DumbbellOp::Alpha(e), c).unwrap();
                assert_eq!(act.len(), 1);
                assert_eq!(act[0].0, c);
                assert_eq!(act[0].1, alpha_eigenvalue(c[e as usize]), "α_{} at {:?}", e, c);
            }
        }
    }

    #[test]
    fn beta_loop_matches_closed_form() {
        // F₊ = 1 and F₋ = {a + b/2 + 1}{a − b/2}/({a}{a+1})
        for (a, b) in [(1i64, 0i64), (1, 2), (2, 2), (2, 0), (2, 4)] {
            let col = [a, a.max(b / 2), b];
            let action = dumbbell_oracle_action(DumbbellOp::BetaLoop0, col).unwrap();
            assert!(!action.is_empty());
            for (t, f) in &action {
                if t[0] == a + 1 {
                    assert_eq!(f, &RatFunc::one(), "F+ at {:?}", col);
                } else {
                    let expect = q(a + b / 2 + 1)
                        .mul(&q(a - b / 2))
                        .div(&q(a).mul(&q(a + 1)))
                        .unwrap();
                    assert_eq!(f, &expect, "F- at {:?}", col);
                }
            }
        }
    }
}
