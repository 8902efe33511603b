//! Manifolds with prescribed (h, b₁).

use isoindex::manifolds::{corank, eval_structural, realize, realize_dim3_mod2};
use isoindex::RingSpec;

fn main() {
    let q = RingSpec::rationals();
    for (h, b) in [(1, 1), (1, 4), (2, 5), (3, 3), (3, 6), (0, 0)] {
        let r = realize(h, b).unwrap();
        let ev = eval_structural(&r.expr, &q).unwrap();
        println!("({h},{b}) dim {}: {}  -> h={} b1={} corank={}", r.expr.dim(), r.expr, ev.h, ev.b1, corank(&r.expr));
    }
    println!("(3,2): {}", realize(3, 2).unwrap_err());

    let f2 = RingSpec::prime_field(2).unwrap();
    for (h, b) in [(0, 2), (1, 1), (2, 3)] {
        let e = realize_dim3_mod2(h, b).unwrap();
        let ev = eval_structural(&e, &f2).unwrap();
        println!("mod 2, ({h},{b}): {e}  -> h={} b1={}", ev.h, ev.b1);
    }
}
