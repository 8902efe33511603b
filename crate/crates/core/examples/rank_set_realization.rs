//! Every admissible finite set of ranks is the rank set of some manifold.

use isoindex::manifolds::{eval_structural, realize_rank_set};
use isoindex::{RankSet, RingSpec};

fn main() {
    let q = RingSpec::rationals();
    for s in [vec![0], vec![3], vec![1, 2], vec![2, 4, 5], vec![1, 3, 5]] {
        let s = RankSet::new(s).unwrap();
        let e = realize_rank_set(&s);
        println!("{s:<8} <- {e}  (evaluates to {})", eval_structural(&e, &q).unwrap().rank_set);
    }
    println!("{}", RankSet::new([0, 2]).unwrap_err());
}
