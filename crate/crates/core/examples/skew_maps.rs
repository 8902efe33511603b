//! The map φ(x, y) = [[x, y], e₃] on ℚ³ and its isotropic subspaces.

use isoindex::skewmap::{enumerate_maximal_isotropic, isotropy_index, IsotropyOptions};
use isoindex::{RingSpec, SkewBilinearMap, Subspace};

fn cross_product(ring: &RingSpec) -> SkewBilinearMap {
    let mut g1 = vec![vec![0; 3]; 3];
    g1[2][0] = 1;
    g1[0][2] = -1;
    let mut g2 = vec![vec![0; 3]; 3];
    g2[2][1] = 1;
    g2[1][2] = -1;
    SkewBilinearMap::from_i64(ring, 3, &[g1, g2, vec![vec![0; 3]; 3]]).unwrap()
}

fn main() {
    let q = RingSpec::rationals();
    let phi = cross_product(&q);
    let v = |xs: [i64; 3]| xs.iter().map(|&a| q.from_i64(a)).collect::<Vec<_>>();
    let val: Vec<String> = phi.evaluate(&v([1, 2, 3]), &v([-2, 0, 5])).unwrap().iter().map(|a| q.format(a)).collect();
    println!("φ((1,2,3), (-2,0,5)) = ({})", val.join(","));
    println!("kernel: {}", phi.kernel());

    let line = Subspace::span(&q, 3, vec![v([0, 0, 1])]).unwrap();
    let plane = Subspace::span(&q, 3, vec![v([1, 0, 0]), v([0, 1, 0])]).unwrap();
    for h in [&line, &plane] {
        println!("{h}: isotropic {}, maximal {}", phi.is_isotropic(h).unwrap(), phi.is_maximal_isotropic(h).unwrap());
    }

    let r = isotropy_index(&phi, &IsotropyOptions::default());
    println!("over Q: h in [{}, {}] via {}", r.h_lower, r.h_upper, r.method);

    let f5 = RingSpec::prime_field(5).unwrap();
    let max = enumerate_maximal_isotropic(&cross_product(&f5), Default::default()).unwrap();
    println!("over GF(5): {} maximal isotropic subspaces", max.len());
    let r = isotropy_index(&cross_product(&f5), &IsotropyOptions::default());
    println!("rank set {}", r.rank_set.unwrap());

    // characteristic 2 allows φ(x, x) ≠ 0
    let f2 = RingSpec::prime_field(2).unwrap();
    let rp3 = SkewBilinearMap::from_i64(&f2, 1, &[vec![vec![1]]]).unwrap();
    println!("RP3 cup square over GF(2): rank set {}", isotropy_index(&rp3, &IsotropyOptions::default()).rank_set.unwrap());
}
