#[test]
fn probe_timing() {
    use skein::tl::entry::{dumbbell_oracle_action, DumbbellOp};
    use std::time::Instant;
    for c in [[0i64,0,0],[1,1,2],[2,2,2],[3,3,2],[2,2,4],[3,3,4],[3,3,6]] {
        let t0 = Instant::now();
        let r = dumbbell_oracle_action(DumbbellOp::BetaArc2, c);
        println!("arc at {:?}: {:?} ({} targets)", c, t0.elapsed(), r.map(|v| v.len()).unwrap_or(999));
    }
}
