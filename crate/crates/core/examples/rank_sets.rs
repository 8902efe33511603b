//! The sum and product laws checked against brute force on random maps.

use isoindex::skewmap::random::random_map;
use isoindex::skewmap::{rank_set, rank_set_product_law, rank_set_sum_law};
use isoindex::RingSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let f3 = RingSpec::prime_field(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let limits = Default::default();
    for _ in 0..5 {
        let a = random_map(&f3, 2, 1, &mut rng);
        let b = random_map(&f3, 3, 2, &mut rng);
        let (s1, s2) = (rank_set(&a, limits).unwrap(), rank_set(&b, limits).unwrap());
        let sum = rank_set(&a.direct_sum(&b).unwrap(), limits).unwrap();
        let prod = rank_set(&a.product_map(&b).unwrap(), limits).unwrap();
        println!(
            "H1 = {s1:<6} H2 = {s2:<6} sum {sum} (law {})  product {prod} (law {})",
            rank_set_sum_law(&s1, &s2),
            rank_set_product_law(&s1, &s2, s1.max(), s2.max())
        );
    }
}
