use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{JobConfig, EXIT_BUDGET, EXIT_DISAGREE, EXIT_OK};
use crate::error::{Error, Result};
use crate::exactalg::RingSpec;
use crate::manifolds::{compile, corank, eval_structural, fixtures, realize, realize_dim3_mod2, realize_rank_set, ManifoldExpr};
use crate::skewmap::random::random_map;
use crate::skewmap::{
    enumerate_maximal_isotropic, isotropy_index, map_bounds, rank_set, rank_set_product_law, rank_set_sum_law,
    RankSet,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Failed only because the enumeration budget ran out.
    pub budget: bool,
    pub detail: String,
}

#[derive(Default)]
struct Tally {
    runs: usize,
    failures: Vec<String>,
    budget: bool,
}

impl Tally {
    fn record(&mut self, what: impl FnOnce() -> String, r: Result<bool>) {
        self.runs += 1;
        match r {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e @ (Error::BudgetExceeded { .. } | Error::DimensionLimit { .. })) => {
                self.budget = true;
                self.failures.push(format!("{}: {e}", what()));
            }
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    fn finish(self, name: impl Into<String>) -> Check {
        let pass = self.failures.is_empty();
        let detail = if pass {
            format!("{} cases", self.runs)
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            format!("{} of {} failed; {}", self.failures.len(), self.runs, shown.join("; "))
        };
        Check { name: name.into(), pass, budget: self.budget && !pass, detail }
    }
}

fn references() -> Check {
    let mut t = Tally::default();
    for r in fixtures::references() {
        let e = r.parsed();
        let result = r.ring.parse::<RingSpec>().and_then(|ring| eval_structural(&e, &ring)).map(|ev| {
            ev.rank_set == r.expected() && ev.b1 == r.b1 && r.corank.is_none_or(|c| ev.corank == Some(c))
        });
        t.record(|| format!("{} over {}", r.expr, r.ring), result);
    }
    t.finish("reference manifolds")
}

fn corpus_oracle(ring: &RingSpec, config: &JobConfig) -> Check {
    let mut t = Tally::default();
    for e in fixtures::corpus() {
        let phi = match compile(&e, ring) {
            Ok(phi) => phi,
            Err(Error::UnsupportedAtom { .. }) => continue,
            Err(err) => {
                t.record(|| e.to_string(), Err(err));
                continue;
            }
        };
        if phi.dim_l() > 6 {
            continue;
        }
        let expected = eval_structural(&e, ring);
        let result = expected.and_then(|ev| {
            if ring.is_finite() {
                Ok(rank_set(&phi, config.limits())? == ev.rank_set)
            } else {
                let r = isotropy_index(&phi, &config.isotropy_options());
                Ok(r.h_lower <= ev.h && ev.h <= r.h_upper)
            }
        });
        t.record(|| e.to_string(), result);
    }
    t.finish(format!("structural vs compiled over {ring}"))
}

fn random_laws(ring: &RingSpec, config: &JobConfig, count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut t = Tally::default();
    let odd = ring.characteristic() != 2;
    for i in 0..count {
        let mut dims = || (rng.random_range(0..=2usize), rng.random_range(0..=2usize));
        let ((n1, m1), (n2, m2)) = (dims(), dims());
        let a = random_map(ring, n1, m1, &mut rng);
        let b = random_map(ring, n2, m2, &mut rng);
        let result = (|| {
            let (s1, s2) = (rank_set(&a, config.limits())?, rank_set(&b, config.limits())?);
            let sum = rank_set(&a.direct_sum(&b)?, config.limits())? == rank_set_sum_law(&s1, &s2);
            let product = !odd
                || rank_set(&a.product_map(&b)?, config.limits())?
                    == rank_set_product_law(&s1, &s2, s1.max(), s2.max());
            let k = a.kernel();
            let contains = enumerate_maximal_isotropic(&a, config.limits())?
                .iter()
                .map(|h| h.contains(&k))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|x| x);
            let upper = s1.max() <= map_bounds(&a).hi;
            Ok(sum && product && contains && upper)
        })();
        t.record(|| format!("instance {i}"), result);
    }
    let laws = if odd { "sum/product laws" } else { "sum law" };
    t.finish(format!("random maps over {ring}: {laws}, kernel containment, upper bound"))
}

fn realizations() -> Check {
    let q = RingSpec::rationals();
    let f2 = RingSpec::prime_field(2).expect("prime");
    let mut t = Tally::default();
    for b in 1..=6 {
        for h in 1..=b {
            let r = realize(h, b).and_then(|r| {
                let ev = eval_structural(&r.expr, &q)?;
                Ok(ev.h == h && ev.b1 == b && corank(&r.expr) == h)
            });
            t.record(|| format!("realize({h},{b})"), r);
        }
    }
    for b in 1..=5 {
        for h in 0..=b {
            let r = realize_dim3_mod2(h, b).and_then(|e| {
                let ev = eval_structural(&e, &f2)?;
                Ok(ev.h == h && ev.b1 == b && e.dim() == 3)
            });
            t.record(|| format!("realize_dim3_mod2({h},{b})"), r);
        }
    }
    t.finish("realizations (h, b)")
}

fn rank_set_realizations() -> Check {
    let q = RingSpec::rationals();
    let mut t = Tally::default();
    for mask in 1u32..32 {
        let s = RankSet::new((1..=5).filter(|i| mask & (1 << (i - 1)) != 0)).expect("positive");
        let e = realize_rank_set(&s);
        t.record(|| format!("{s}"), eval_structural(&e, &q).map(|ev| ev.rank_set == s));
    }
    t.record(|| "{0}".into(), eval_structural(&ManifoldExpr::sphere(3), &q).map(|ev| ev.rank_set == RankSet::singleton(0)));
    t.finish("rank-set realizations")
}

pub fn run_checks(config: &JobConfig) -> Vec<Check> {
    let rings: Vec<RingSpec> = match &config.ring {
        Some(r) => vec![r.clone()],
        None => vec![RingSpec::prime_field(2).expect("prime"), RingSpec::prime_field(3).expect("prime")],
    };
    let mut checks = vec![references()];
    for r in &rings {
        checks.push(corpus_oracle(r, config));
    }
    for r in rings.iter().filter(|r| r.is_finite()) {
        checks.push(random_laws(r, config, 40));
    }
    checks.push(realizations());
    checks.push(rank_set_realizations());
    checks
}

pub fn cmd_selftest(config: &JobConfig, out: &mut dyn Write) -> Result<i32> {
    let checks = run_checks(config);
    let failed = checks.iter().filter(|c| !c.pass).count();
    let text = if config.json {
        let list: Vec<_> = checks
            .iter()
            .map(|c| json!({ "detail": c.detail, "name": c.name, "status": if c.pass { "PASS" } else { "FAIL" } }))
            .collect();
        serde_json::to_string_pretty(&json!({ "checks": list, "failed": failed })).expect("plain JSON") + "\n"
    } else {
        let mut s: String = checks
            .iter()
            .map(|c| format!("{} {}: {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail))
            .collect();
        s += &format!("{} checks, {failed} failed\n", checks.len());
        s
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
    Ok(if failed == 0 {
        EXIT_OK
    } else if checks.iter().all(|c| c.pass || c.budget) {
        EXIT_BUDGET
    } else {
        EXIT_DISAGREE
    })
}
