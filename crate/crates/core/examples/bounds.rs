//! Betti-number bounds on h, standalone and against evaluated manifolds.

use isoindex::manifolds::{bounds_check, parse_expr};
use isoindex::skewmap::bounds;
use isoindex::RingSpec;

fn main() {
    for g in 1..=4 {
        let b = bounds(2 * g, 1, 0, false, false).unwrap();
        println!("genus {g}: {} <= h <= {}", b.lo, b.hi);
    }
    for n in 2..=5u64 {
        let b = bounds(n, n * (n - 1) / 2, 0, false, true).unwrap();
        println!("T^{n}, surjective: hi = {} (surjective bound {:?})", b.hi, b.surjective_hi);
    }

    for (text, ring) in [("Sg(3)", "Q"), ("T(3)", "Q"), ("RP3", "GF(2)"), ("Sg(2) x S(1)", "Q"), ("RP3 # RP3", "GF(2)")] {
        let r = bounds_check(&parse_expr(text).unwrap(), &ring.parse::<RingSpec>().unwrap()).unwrap();
        println!(
            "{text:<14} {ring:<6} b1={} b2={} k={} lo={} hi={} h={} exception={} -> {}",
            r.b1,
            r.b2,
            r.k,
            r.bounds.lo,
            r.bounds.hi,
            r.h,
            r.bounds.exception,
            if r.pass { "pass" } else { "fail" }
        );
    }
}
