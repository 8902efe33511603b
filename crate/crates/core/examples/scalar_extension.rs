//! Changing coefficients: h can jump under reduction mod p and never drops
//! under field extension.

use isoindex::skewmap::{isotropy_index, IsotropyOptions};
use isoindex::skewmap::random::random_map;
use isoindex::{RingSpec, SkewBilinearMap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let z = RingSpec::integers();
    let opts = IsotropyOptions::default();
    let phi = SkewBilinearMap::from_i64(&z, 2, &[vec![vec![0, 2], vec![-2, 0]]]).unwrap();
    for target in ["Q", "GF(2)", "GF(3)", "GF(5)"] {
        let ring: RingSpec = target.parse().unwrap();
        let h = isotropy_index(&phi.extend_scalars(&ring).unwrap(), &opts).h().unwrap();
        println!("[[0,2],[-2,0]] over {target:<6} h = {h}");
    }

    let f3 = RingSpec::prime_field(3).unwrap();
    let f9 = RingSpec::gf(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut equal, mut up) = (0, 0);
    for _ in 0..50 {
        let a = random_map(&f3, 4, 3, &mut rng);
        let h3 = isotropy_index(&a, &opts).h().unwrap();
        let h9 = isotropy_index(&a.extend_scalars(&f9).unwrap(), &opts).h().unwrap();
        assert!(h3 <= h9);
        if h3 == h9 { equal += 1 } else { up += 1 }
    }
    println!("GF(3) -> GF(9) on 50 random maps: {equal} unchanged, {up} increased, none decreased");
}
