//! Structural evaluation of manifold expressions.

use isoindex::manifolds::{betti, eval_structural, parse_expr};
use isoindex::RingSpec;

fn main() {
    let cases = [
        ("Sg(2) x S(1)", "Z"),
        ("Sg(2) x Sg(3)", "Q"),
        ("(Sg(2) x S(1)) # (Sg(2) x S(1))", "Z"),
        ("(Sg(2) x Sg(3)) # (Sg(2) x Sg(3))", "Q"),
        ("T(4)", "Q"),
        ("RP3", "GF(2)"),
        ("RP3 # T(3)", "GF(2)"),
        ("Heis", "Q"),
        ("KT", "Z"),
    ];
    println!("{:<36} {:<6} {:>3} {:>3} {:>7}  rank set", "expression", "ring", "b1", "h", "corank");
    for (text, ring) in cases {
        let e = parse_expr(text).unwrap();
        let r: RingSpec = ring.parse().unwrap();
        let ev = eval_structural(&e, &r).unwrap();
        println!("{:<36} {:<6} {:>3} {:>3} {:>7}  {}", e.to_string(), ring, ev.b1, ev.h, ev.corank.unwrap(), ev.rank_set);
        for x in &ev.exceptions_applied {
            println!("    {x}");
        }
    }
    println!("betti(KT) = {:?}", betti(&parse_expr("KT").unwrap(), &RingSpec::rationals()).unwrap());
}
