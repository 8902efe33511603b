//! Row reduction, kernels and tensors over ℚ and finite fields.

use isoindex::exactalg::{rank_one_match, tensor_pair};
use isoindex::{Matrix, RingSpec};

fn main() {
    let q = RingSpec::rationals();
    let m = Matrix::from_i64(&q, &[vec![1, 2, 3], vec![2, 4, 7], vec![1, 2, 4]]);
    let r = m.rref();
    println!("rank {} pivots {:?}", r.rank, r.pivots);
    println!("kernel basis rows: {}", m.kernel_basis().nrows());

    let f2 = RingSpec::prime_field(2).unwrap();
    let ones = Matrix::from_i64(&f2, &[vec![1, 1], vec![1, 1]]);
    println!("[[1,1],[1,1]] over GF(2): rank {}", ones.rank());

    let u: Vec<_> = [1, 2].iter().map(|&a| q.from_i64(a)).collect();
    let v: Vec<_> = [3, 4].iter().map(|&a| q.from_i64(a)).collect();
    let t: Vec<String> = tensor_pair(&q, &u, &v).iter().map(|a| q.format(a)).collect();
    println!("(1,2) ⊗ (3,4) = ({})", t.join(","));

    // x ⊗ v = u ⊗ y forces u = a x, v = a y
    let f5 = RingSpec::prime_field(5).unwrap();
    let vec5 = |xs: [i64; 2]| xs.iter().map(|&a| f5.from_i64(a)).collect::<Vec<_>>();
    let (x, y) = (vec5([1, 3]), vec5([2, 0]));
    let a = f5.from_i64(4);
    let (u, v) = (x.iter().map(|c| f5.mul(&a, c)).collect::<Vec<_>>(), y.iter().map(|c| f5.mul(&a, c)).collect::<Vec<_>>());
    let found = rank_one_match(&f5, &x, &v, &u, &y).unwrap();
    println!("rank-one match over GF(5): a = {}", found.map(|s| f5.format(&s)).unwrap_or("none".into()));

    let f9 = RingSpec::gf(3, 2).unwrap();
    println!("{} has modulus {:?} and {} elements", f9, f9.modulus().unwrap(), f9.order().unwrap());
}
