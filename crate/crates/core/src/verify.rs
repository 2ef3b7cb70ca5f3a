//! Named verification suites. Every sample draws from its own seeded stream,
//! so results do not depend on scheduling and samples run in parallel.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cayley_dickson::CDNumber;
use crate::error::{Error, Result};
use crate::jordan::{DivisionAlgebra, JordanElement};
use crate::json;
use crate::poisson::{ClassicalAlgebra, LieAlgebra, LiePoisson, PolyFn};
use crate::reduction::{self as red, DualPairCase, OscillatorConfig, WMap};
use crate::report::{CheckRecord, Report};
use crate::sampling::{self, rng_for, SampleRng};
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::strata::{self, ProjPoint};
use crate::tkk::{algebra, TKKElement, TkkCase};

/// Suite names accepted by [`cmd_verify`].
pub const SUITES: [&str; 11] = [
    "all",
    "dimension-audit",
    "division-algebra",
    "jordan-identities",
    "moment-identity",
    "oscillator",
    "poisson-rank",
    "rank-identification",
    "reduction",
    "singular-locus",
    "tkk",
];

/// Table values the audits compare against.
pub const M_TABLE: [(DivisionAlgebra, usize, usize); 4] =
    [(DivisionAlgebra::R, 5, 2), (DivisionAlgebra::C, 8, 4), (DivisionAlgebra::H, 14, 8), (DivisionAlgebra::O, 26, 16)];
pub const TKK_DIMS: [(TkkCase, usize); 4] =
    [(TkkCase::Sp3, 21), (TkkCase::U33, 35), (TkkCase::So12, 66), (TkkCase::E7, 133)];
pub const CHAINS: [(DualPairCase, [usize; 3]); 3] =
    [(DualPairCase::Real, [2, 5, 8]), (DualPairCase::Complex, [5, 11, 17]), (DualPairCase::Quaternionic, [11, 23, 35])];

/// Runs `f` on samples `0..n`, each with its own generator.
fn par_samples<T: Send>(seed: u64, stream: &str, n: usize, f: impl Fn(&mut SampleRng, usize) -> T + Sync) -> Vec<T> {
    (0..n).into_par_iter().map(|i| f(&mut rng_for(seed, &format!("{stream}/{i}")), i)).collect()
}

/// A check whose samples either pass (`None`) or yield a witness.
fn sampled(
    name: &str,
    case: &str,
    seed: u64,
    n: usize,
    f: impl Fn(&mut SampleRng, usize) -> Option<Value> + Sync,
) -> CheckRecord {
    let mut rec = CheckRecord::new(name, case);
    for w in par_samples(seed, &format!("{name}/{case}"), n, f) {
        rec.record(w.is_none(), || w.expect("failure carries a witness"));
    }
    rec
}

fn fail_if(bad: bool, witness: impl FnOnce() -> Value) -> Option<Value> {
    bad.then(witness)
}

type Job = Box<dyn Fn() -> CheckRecord + Send + Sync>;

struct Plan {
    seed: u64,
    samples: Option<usize>,
    jobs: Vec<(String, String, Job)>,
}

impl Plan {
    fn n(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn add(&mut self, name: &str, case: &str, job: impl Fn() -> CheckRecord + Send + Sync + 'static) {
        if !self.jobs.iter().any(|(n, c, _)| n == name && c == case) {
            self.jobs.push((name.into(), case.into(), Box::new(job)));
        }
    }
}

fn pick<T: Copy>(all: &[T], name: impl Fn(T) -> String, case: Option<&str>) -> Vec<T> {
    match case {
        None => all.to_vec(),
        Some(c) => all.iter().copied().filter(|&t| name(t) == c).collect(),
    }
}

fn cd_json<F: Scalar>(xs: &[&CDNumber<F>]) -> Value {
    Value::Array(xs.iter().map(|x| json::cd_to_json(*x)).collect())
}

fn division_algebra(plan: &mut Plan, case: Option<&str>) {
    let n = plan.n(100);
    let seed = plan.seed;
    for alg in pick(&DivisionAlgebra::ALL, |a| a.name().into(), case) {
        let (c, l) = (alg.name(), alg.level());
        plan.add("cd.alternativity", c, move || {
            sampled("cd.alternativity", c, seed, n, |rng, _| {
                let x = sampling::cd::<Rational, _>(rng, l, 4);
                let y = sampling::cd::<Rational, _>(rng, l, 4);
                let xx = x.mul(&x);
                fail_if(xx.mul(&y) != x.mul(&x.mul(&y)) || y.mul(&xx) != y.mul(&x).mul(&x), || cd_json(&[&x, &y]))
            })
        });
        plan.add("cd.composition", c, move || {
            sampled("cd.composition", c, seed, n, |rng, _| {
                let x = sampling::cd::<Rational, _>(rng, l, 4);
                let y = sampling::cd::<Rational, _>(rng, l, 4);
                fail_if(x.mul(&y).norm() != x.norm() * y.norm(), || cd_json(&[&x, &y]))
            })
        });
        plan.add("cd.conjugation", c, move || {
            sampled("cd.conjugation", c, seed, n, |rng, _| {
                let x = sampling::cd::<Rational, _>(rng, l, 4);
                let y = sampling::cd::<Rational, _>(rng, l, 4);
                fail_if(x.mul(&y).conj() != y.conj().mul(&x.conj()), || cd_json(&[&x, &y]))
            })
        });
        // Exhaustive scan of basis triples: octonions must show a nonzero
        // associator, the lower levels none.
        plan.add("cd.associator-scan", c, move || {
            let d = 1usize << l;
            let mut rec = CheckRecord::new("cd.associator-scan", c);
            let mut found = None;
            for a in 0..d {
                for b in 0..d {
                    for e in 0..d {
                        let u = |k| CDNumber::<Rational>::unit(l, k);
                        let assoc = CDNumber::associator(&u(a), &u(b), &u(e)).expect("same level");
                        if !assoc.is_zero() && found.is_none() {
                            found = Some(json!({"triple": [a, b, e], "associator": json::cd_to_json(&assoc)}));
                        }
                    }
                }
            }
            let want = l == 3;
            rec.record(found.is_some() == want, || json!({"basis_size": d, "found": found.clone()}));
            rec.samples = d * d * d;
            rec.with_details(json!({ "witness_triple": found }))
        });
    }
}

fn jordan_checks<F: Scalar>(plan: &mut Plan, alg: DivisionAlgebra, c: &'static str, n: usize) {
    let seed = plan.seed;
    let pair = |x: &JordanElement<F>, y: &JordanElement<F>| json!([json::jordan_to_json(x), json::jordan_to_json(y)]);
    plan.add("jordan.identity", c, move || {
        sampled("jordan.identity", c, seed, n, |rng, _| {
            let x = JordanElement::<F>::random(alg, rng, 3);
            let y = JordanElement::<F>::random(alg, rng, 3);
            let x2 = x.square();
            fail_if(x2.circ(&y).circ(&x) != x2.circ(&y.circ(&x)), || pair(&x, &y))
        })
    });
    plan.add("jordan.sharp-adjugate", c, move || {
        sampled("jordan.sharp-adjugate", c, seed, n, |rng, _| {
            let x = JordanElement::<F>::random(alg, rng, 3);
            let ok = x.circ(&x.sharp()) == JordanElement::identity(alg).scale(&x.det());
            fail_if(!ok, || json::jordan_to_json(&x))
        })
    });
    plan.add("jordan.cayley-hamilton", c, move || {
        sampled("jordan.cayley-hamilton", c, seed, n, |rng, _| {
            let x = JordanElement::<F>::random(alg, rng, 3);
            let s = x.sigma();
            let x2 = x.square();
            let ch = x2
                .circ(&x)
                .sub(&x2.scale(&s.tr))
                .add(&x.scale(&s.sigma2))
                .sub(&JordanElement::identity(alg).scale(&s.det));
            fail_if(!ch.is_zero(), || json::jordan_to_json(&x))
        })
    });
    plan.add("jordan.det-quadratic", c, move || {
        sampled("jordan.det-quadratic", c, seed, n, |rng, _| {
            let a = JordanElement::<F>::random(alg, rng, 2);
            let x = JordanElement::<F>::random(alg, rng, 2);
            let u = a.quadratic_rep(&x).expect("same algebra");
            fail_if(u.det() != a.det() * a.det() * x.det(), || pair(&a, &x))
        })
    });
}

/// Cases of the Jordan suite: the four real algebras and `O ⊗ C`.
pub const JORDAN_CASES: [&str; 5] = ["R", "C", "H", "O", "O_C"];

fn jordan_identities(plan: &mut Plan, case: Option<&str>) {
    let n = plan.n(200);
    for c in pick(&JORDAN_CASES, |c| c.to_string(), case) {
        if c == "O_C" {
            jordan_checks::<Gaussian>(plan, DivisionAlgebra::O, c, n);
        } else {
            let alg = DivisionAlgebra::parse(c).expect("listed");
            jordan_checks::<Rational>(plan, alg, c, n);
        }
    }
}

const CLASSICAL: [DivisionAlgebra; 3] = [DivisionAlgebra::R, DivisionAlgebra::C, DivisionAlgebra::H];

fn rank_identification(plan: &mut Plan, case: Option<&str>) {
    let n = plan.n(500);
    let seed = plan.seed;
    for alg in pick(&CLASSICAL, |a| a.name().into(), case) {
        let c = alg.name();
        plan.add("rank.matrix-model", c, move || {
            let name = "rank.matrix-model";
            let results = par_samples(seed, &format!("{name}/{c}"), n, |rng, i| {
                // Cycle through the target ranks, and every fifth sample is unconstrained.
                let x = if i % 5 == 4 {
                    JordanElement::<Rational>::random(alg, rng, 2)
                } else {
                    strata::rank_k_sample::<Rational, _>(alg, (i % 4) as u8, rng)
                };
                let r = x.jordan_rank().get();
                (r, x.matrix_model_rank().expect("classical") == usize::from(r), x)
            });
            let mut rec = CheckRecord::new(name, c);
            let mut counts = [0usize; 4];
            for (r, ok, x) in &results {
                counts[usize::from(*r)] += 1;
                rec.record(*ok, || json::jordan_to_json(x));
            }
            rec.with_details(json!({ "rank_counts": counts }))
        });
    }
}

fn singular_locus(plan: &mut Plan, case: Option<&str>) {
    let seed = plan.seed;
    let (ng, nc) = (plan.n(100), plan.n(200));
    for alg in pick(&DivisionAlgebra::ALL, |a| a.name().into(), case) {
        let c = alg.name();
        plan.add("strata.gradient-sharp", c, move || {
            sampled("strata.gradient-sharp", c, seed, ng, |rng, _| {
                let x = JordanElement::<Rational>::random(alg, rng, 3);
                fail_if(strata::cubic_gradient(&x) != x.sharp(), || json::jordan_to_json(&x))
            })
        });
        plan.add("strata.gradient-vanishing", c, move || {
            sampled("strata.gradient-vanishing", c, seed, ng, |rng, i| {
                let x = strata::rank_k_sample::<Rational, _>(alg, (i % 4) as u8, rng);
                let vanishes = strata::cubic_gradient(&x).is_zero();
                fail_if(vanishes != (x.jordan_rank().get() <= 1), || json::jordan_to_json(&x))
            })
        });
        plan.add("strata.chord-determinant", c, move || {
            sampled("strata.chord-determinant", c, seed, nc, |rng, _| {
                let p = ProjPoint::new(strata::rank1_sample::<Rational, _>(alg, rng).0).expect("nonzero");
                let q = ProjPoint::new(strata::rank1_sample::<Rational, _>(alg, rng).0).expect("nonzero");
                let lambda: Rational = sampling::nonzero_scalar(rng, 5);
                let mu: Rational = sampling::nonzero_scalar(rng, 5);
                let witness = || json!([json::proj_to_json(&p), json::proj_to_json(&q)]);
                match strata::chord(&p, &q, &lambda, &mu) {
                    Ok(x) => fail_if(!x.representative().det().is_zero(), witness),
                    // λP + μQ = 0 only for proportional P, Q: still on the cubic.
                    Err(_) => None,
                }
            })
        });
        // A sum of three generic rank-one points leaves the cubic; up to ten
        // triples are tried.
        plan.add("strata.secant-escape", c, move || {
            let mut rng = rng_for(seed, &format!("strata.secant-escape/{c}"));
            let mut rec = CheckRecord::new("strata.secant-escape", c);
            let mut found = None;
            for _ in 0..10 {
                let mut sum = JordanElement::<Rational>::zero(alg);
                for _ in 0..3 {
                    sum = sum.add(&strata::rank1_sample::<Rational, _>(alg, &mut rng).0);
                }
                if !sum.det().is_zero() {
                    found = Some(sum);
                    break;
                }
            }
            rec.record(found.is_some(), || json!("no triple with nonzero det"));
            rec.with_details(json!({ "sum": found.as_ref().map(json::jordan_to_json) }))
        });
        m_table(plan, alg);
    }
}

fn m_table(plan: &mut Plan, alg: DivisionAlgebra) {
    let seed = plan.seed;
    let c = alg.name();
    plan.add("strata.m-table", c, move || {
        let mut rng = rng_for(seed, &format!("strata.m-table/{c}"));
        let audit = strata::closure_chain_audit(alg, &mut rng, 2);
        let (_, m, n) = *M_TABLE.iter().find(|t| t.0 == alg).expect("listed");
        let mut rec = CheckRecord::new("strata.m-table", c);
        let details = serde_json::to_value(&audit).expect("serializable");
        rec.record(audit.m == m && audit.n == n, || details.clone());
        rec.record(2 * audit.m == 3 * audit.n + 4 && audit.critical, || details.clone());
        rec.record(audit.n_jacobian == audit.n && audit.q2_dim + 1 == audit.m, || details.clone());
        rec.record(audit.rank_violations == 0, || details.clone());
        rec.with_details(details)
    });
}

fn tkk_suite(plan: &mut Plan, case: Option<&str>) {
    let seed = plan.seed;
    let n = plan.n(100);
    for tc in pick(&TkkCase::ALL, |t| t.name().into(), case) {
        let c = tc.name();
        plan.add("tkk.jacobi", c, move || {
            let alg = algebra(tc);
            sampled("tkk.jacobi", c, seed, n, |rng, _| {
                let (a, b, d) = (alg.random(rng, 2), alg.random(rng, 2), alg.random(rng, 2));
                let br = |x: &TKKElement, y: &TKKElement| alg.bracket(x, y).expect("same case");
                let ab = br(&a, &b);
                let jac = br(&ab, &d).add(&br(&br(&b, &d), &a)).add(&br(&br(&d, &a), &b));
                let anti = ab.add(&br(&b, &a));
                fail_if(!jac.is_zero() || !anti.is_zero(), || {
                    json!([json::tkk_to_json(&a), json::tkk_to_json(&b), json::tkk_to_json(&d)])
                })
            })
        });
        tkk_dimension(plan, tc);
        plan.add("tkk.h-element", c, move || {
            let alg = algebra(tc);
            let z = alg.h_element();
            let (k, p) = alg.cartan_split();
            let half = Rational::ONE / Rational::from(2);
            let mut rec = CheckRecord::new("tkk.h-element", c);
            rec.record(z.plus == JordanElement::identity(alg.jordan_algebra()).scale(&half), || json::tkk_to_json(z));
            let kres: Vec<bool> = k.par_iter().map(|kv| alg.bracket(z, kv).expect("same case").is_zero()).collect();
            for (ok, kv) in kres.iter().zip(&k) {
                rec.record(*ok, || json::tkk_to_json(kv));
            }
            let pres: Vec<bool> = p
                .par_iter()
                .map(|pv| {
                    let once = alg.bracket(z, pv).expect("same case");
                    let twice = alg.bracket(z, &once).expect("same case");
                    alg.in_p(&once) && twice == pv.scale(&-Rational::ONE)
                })
                .collect();
            for (ok, pv) in pres.iter().zip(&p) {
                rec.record(*ok, || json::tkk_to_json(pv));
            }
            rec.with_details(json!({ "k_dim": k.len(), "p_dim": p.len() }))
        });
    }
}

fn tkk_dimension(plan: &mut Plan, tc: TkkCase) {
    let c = tc.name();
    plan.add("tkk.dimension", c, move || {
        let alg = algebra(tc);
        let want = TKK_DIMS.iter().find(|t| t.0 == tc).expect("listed").1;
        let mut rec = CheckRecord::new("tkk.dimension", c);
        let details = json!({
            "jordan": alg.jordan_dim(),
            "str": alg.str_dim(),
            "der": alg.der_dim(),
            "g": alg.dim(),
            "expected_g": want,
        });
        rec.record(alg.dim() == want, || details.clone());
        rec.with_details(details)
    });
}

fn case_name(c: DualPairCase) -> String {
    c.name().into()
}

fn wmap_pair(a: &WMap, b: &WMap) -> Value {
    json!([json::wmap_to_json(a), json::wmap_to_json(b)])
}

fn moment_identity(plan: &mut Plan, case: Option<&str>) {
    let seed = plan.seed;
    let n = plan.n(20);
    for dc in pick(&DualPairCase::ALL, case_name, case) {
        let c = dc.name();
        plan.add("moment.dagger-identity", c, move || {
            sampled("moment.dagger-identity", c, seed, n, |rng, i| {
                let a = WMap::random(dc, 1 + i % 3, rng, 3);
                fail_if(red::dagger_identity_failures(&a) != 0, || json::wmap_to_json(&a))
            })
        });
        // Residual over every basis generator of h and g and a random direction.
        plan.add("moment.residual", c, move || {
            let (hb, gb) = (dc.h_basis(2), dc.g_basis());
            sampled("moment.residual", c, seed, n, |rng, _| {
                let a = WMap::random(dc, 2, rng, 3);
                let d = WMap::random(dc, 2, rng, 3);
                let h_ok = hb.iter().all(|xi| red::moment_residual_h(&a, xi, &d).expect("shape").is_zero());
                let g_ok = gb.iter().all(|eta| red::moment_residual_g(&a, eta, &d).expect("shape").is_zero());
                fail_if(!(h_ok && g_ok), || wmap_pair(&a, &d))
            })
        });
        plan.add("moment.equivariance", c, move || {
            sampled("moment.equivariance", c, seed, n, |rng, _| {
                let s = 2;
                let (x, x_inv) = red::random_h_group(dc, s, rng);
                let (y, y_inv) = red::random_g_group(dc, rng);
                let a = WMap::random(dc, s, rng, 2);
                let moved = a.act_g(&y).act_h_inv(&x_inv);
                let ok = red::mu_g(&moved) == y.mul(&red::mu_g(&a)).mul(&y_inv)
                    && red::mu_h(&moved) == x.mul(&red::mu_h(&a)).mul(&x_inv);
                fail_if(!ok, || json::wmap_to_json(&a))
            })
        });
        plan.add("moment.dual-pair-commute", c, move || {
            sampled("moment.dual-pair-commute", c, seed, n, |rng, _| {
                let a = WMap::random(dc, 2, rng, 3);
                let xi = dc.random_h(2, rng, 2);
                let eta = dc.random_g(rng, 2);
                let in_algebras = dc.in_h(&red::mu_h(&a)) && dc.in_g(&red::mu_g(&a));
                fail_if(!in_algebras || !red::actions_commute(&a, &xi, &eta), || json::wmap_to_json(&a))
            })
        });
    }
}

fn reduction_suite(plan: &mut Plan, case: Option<&str>) {
    let seed = plan.seed;
    let (nz, nl) = (plan.n(50), plan.n(100));
    for dc in pick(&DualPairCase::ALL, case_name, case) {
        let c = dc.name();
        plan.add("reduction.zero-level-stratum", c, move || {
            sampled("reduction.zero-level-stratum", c, seed, 4 * nz, |rng, i| {
                let k = i % 4;
                let a = red::zero_level_sample(dc, 3, k, rng).expect("feasible");
                let ok = red::is_zero_level(&a)
                    && red::stratum(&a).map(|s| usize::from(s.get())) == Ok(k)
                    && red::k_rank(&a) >= k;
                fail_if(!ok, || json!({"target": k, "alpha": json::wmap_to_json(&a)}))
            })
        });
        plan.add("reduction.saturation", c, move || {
            let mut rec = sampled("reduction.saturation", c, seed, nz, |rng, i| {
                let s = 4 + i % 2;
                let k = (i / 2) % 4;
                let a = red::zero_level_sample(dc, s - 1, k, rng).expect("feasible");
                let b = red::zero_level_sample(dc, s, k, rng).expect("feasible");
                let ok = red::reduced_point(&a.pad(s)) == red::reduced_point(&a)
                    && red::stratum(&b).map(|r| usize::from(r.get())) == Ok(k);
                fail_if(!ok, || wmap_pair(&a, &b))
            });
            let mut rng = rng_for(seed, &format!("reduction.saturation/{c}/cap"));
            for s in 4..=5 {
                let capped = matches!(
                    red::zero_level_sample(dc, s, red::SPLIT_RANK + 1, &mut rng),
                    Err(Error::InfeasibleRank { .. })
                );
                rec.record(capped, || json!({ "s": s, "target": red::SPLIT_RANK + 1 }));
            }
            rec
        });
        plan.add("reduction.hilbert-lift", c, move || {
            sampled("reduction.hilbert-lift", c, seed, nl, |rng, i| {
                let x = red::liftable_sample(dc, i % 3, rng).expect("liftable family");
                match red::hilbert_lift(&x, 2) {
                    Ok(a) => fail_if(!red::is_zero_level(&a) || red::reduced_point(&a).as_ref() != Ok(&x), || {
                        json::jordan_to_json(&x)
                    }),
                    Err(e) => Some(json!({"x": json::jordan_to_json(&x), "error": e.to_string()})),
                }
            })
        });
        dimension_chain(plan, dc);
    }
}

fn dimension_chain(plan: &mut Plan, dc: DualPairCase) {
    let c = dc.name();
    plan.add("reduction.dimension-chain", c, move || {
        let chain = red::dimension_chain(dc);
        let want = CHAINS.iter().find(|t| t.0 == dc).expect("listed").1;
        let mut rec = CheckRecord::new("reduction.dimension-chain", c);
        rec.record(chain == want, || json!({ "chain": chain, "expected": want }));
        rec.with_details(json!({ "chain": chain, "expected": want }))
    });
}

/// Aggregates `(stratum, rank)` samples: constant per stratum and strictly
/// increasing across strata.
fn stratum_rank_record(name: &str, c: &str, results: Vec<(usize, usize, Value)>) -> CheckRecord {
    let mut rec = CheckRecord::new(name, c);
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (k, r, w) in results {
        let expect = *first.entry(k).or_insert(r);
        seen.entry(k).or_default().insert(r);
        rec.record(r == expect, || json!({"stratum": k, "rank": r, "expected": expect, "point": w}));
    }
    let ranks: Vec<usize> = first.values().copied().collect();
    rec.record(ranks.windows(2).all(|w| w[0] < w[1]), || json!({ "ranks": ranks }));
    let table: BTreeMap<String, Vec<usize>> =
        seen.into_iter().map(|(k, v)| (k.to_string(), v.into_iter().collect())).collect();
    rec.with_details(json!({ "orbit_dims": table }))
}

/// Cases of the Poisson suite: the three dual pairs and the `e₇` TKK algebra.
pub const POISSON_CASES: [&str; 4] = ["real", "complex", "quaternionic", "e7"];

fn poisson_rank(plan: &mut Plan, case: Option<&str>) {
    let seed = plan.seed;
    let (n, ne7, nc) = (plan.n(50), plan.samples.unwrap_or(2).min(4), plan.n(50));
    for c in pick(&POISSON_CASES, |c| c.to_string(), case) {
        if c == "e7" {
            plan.add("poisson.stratum-rank", c, move || {
                let alg = algebra(TkkCase::E7);
                let lp = LiePoisson::new(alg).expect("nondegenerate form");
                let name = "poisson.stratum-rank";
                let results = par_samples(seed, &format!("{name}/{c}"), 4 * ne7, |rng, i| {
                    let k = i % 4;
                    let x = strata::rank_k_sample::<Rational, _>(DivisionAlgebra::O, k as u8, rng);
                    let r = lp.rank_at(&alg.coords(&alg.plus_element(&x))).expect("dimension");
                    (k, r, json::jordan_to_json(&x))
                });
                stratum_rank_record(name, c, results)
            });
            continue;
        }
        let dc = DualPairCase::parse(c).expect("listed");
        plan.add("poisson.stratum-rank", c, move || {
            let alg = ClassicalAlgebra::new(dc);
            let lp = LiePoisson::new(&alg).expect("nondegenerate form");
            let name = "poisson.stratum-rank";
            let results = par_samples(seed, &format!("{name}/{c}"), 4 * n, |rng, i| {
                let k = i % 4;
                let a = red::zero_level_sample(dc, 3, k, rng).expect("feasible");
                let x = alg.coords(&red::mu_g(&a)).expect("moment image lies in g");
                (k, lp.rank_at(&x).expect("dimension"), json::wmap_to_json(&a))
            });
            stratum_rank_record(name, c, results)
        });
        plan.add("poisson.casimir", c, move || {
            let alg = ClassicalAlgebra::new(dc);
            let lp = LiePoisson::new(&alg).expect("nondegenerate form");
            let cas = lp.casimir();
            sampled("poisson.casimir", c, seed, nc, |rng, _| {
                let f = PolyFn::random(alg.dim(), rng, 4, 3);
                fail_if(!lp.bracket(&cas, &f).expect("same algebra").is_zero(), || json!(f.to_string()))
            })
        });
        plan.add("poisson.linear-bracket", c, move || {
            let alg = ClassicalAlgebra::new(dc);
            let lp = LiePoisson::new(&alg).expect("nondegenerate form");
            sampled("poisson.linear-bracket", c, seed, 10, |rng, _| {
                let a: Vec<Rational> = sampling::vector(rng, alg.dim(), 2);
                let b: Vec<Rational> = sampling::vector(rng, alg.dim(), 2);
                let lhs = lp.bracket(&lp.linear_function(&a), &lp.linear_function(&b)).expect("same algebra");
                let rhs = lp.linear_function(&alg.bracket_coords(&a, &b));
                let enc = |v: &[Rational]| Value::Array(v.iter().map(json::rational_to_json).collect());
                fail_if(lhs != rhs, || json!([enc(&a), enc(&b)]))
            })
        });
    }
}

fn oscillator(plan: &mut Plan, case: Option<&str>) {
    if case.is_some_and(|c| c != "real") {
        return;
    }
    let seed = plan.seed;
    let n = plan.n(100);
    plan.add("oscillator.stratum-agreement", "real", move || {
        sampled("oscillator.stratum-agreement", "real", seed, n, |rng, i| {
            let a = red::zero_level_sample(DualPairCase::Real, 3, i % 4, rng).expect("feasible");
            let cfg = OscillatorConfig::decode(&a).expect("real case");
            let ok = red::angular_momentum(&cfg).is_zero()
                && cfg.encode().ok().as_ref() == Some(&a)
                && red::stratum(&a) == Ok(red::classify_config(&cfg));
            fail_if(!ok, || json::oscillator_to_json(&cfg))
        })
    });
}

fn dimension_audit(plan: &mut Plan, case: Option<&str>) {
    for alg in pick(&DivisionAlgebra::ALL, |a| a.name().into(), case) {
        m_table(plan, alg);
    }
    for tc in pick(&TkkCase::ALL, |t| t.name().into(), case) {
        tkk_dimension(plan, tc);
    }
    for dc in pick(&DualPairCase::ALL, case_name, case) {
        dimension_chain(plan, dc);
    }
}

fn add_suite(plan: &mut Plan, suite: &str, case: Option<&str>) -> Result<()> {
    match suite {
        "division-algebra" => division_algebra(plan, case),
        "jordan-identities" => jordan_identities(plan, case),
        "rank-identification" => rank_identification(plan, case),
        "singular-locus" => singular_locus(plan, case),
        "tkk" => tkk_suite(plan, case),
        "moment-identity" => moment_identity(plan, case),
        "reduction" => reduction_suite(plan, case),
        "poisson-rank" => poisson_rank(plan, case),
        "oscillator" => oscillator(plan, case),
        "dimension-audit" => dimension_audit(plan, case),
        "all" => {
            for s in SUITES.iter().filter(|s| **s != "all") {
                add_suite(plan, s, case)?;
            }
        }
        _ => return Err(Error::Unknown { kind: "suite", name: suite.into() }),
    }
    Ok(())
}

/// Runs a suite and returns its report, sorted by check name. Errors on an
/// unknown suite or on a case that selects no check of the suite.
pub fn cmd_verify(suite: &str, case: Option<&str>, samples: Option<usize>, seed: u64) -> Result<Report> {
    let mut plan = Plan { seed, samples, jobs: Vec::new() };
    add_suite(&mut plan, suite, case)?;
    if plan.jobs.is_empty() {
        return Err(Error::Unknown { kind: "case", name: case.unwrap_or_default().into() });
    }
    let checks: Vec<CheckRecord> = plan.jobs.par_iter().map(|(_, _, job)| job()).collect();
    let mut command = format!("verify --suite {suite}");
    if let Some(c) = case {
        command.push_str(&format!(" --case {c}"));
    }
    if let Some(n) = samples {
        command.push_str(&format!(" --samples {n}"));
    }
    let result = (suite == "dimension-audit").then(|| audit_tables(&checks));
    Ok(Report::new(command, seed, checks, result))
}

fn audit_tables(checks: &[CheckRecord]) -> Value {
    let mut tables = serde_json::Map::new();
    for c in checks {
        if let Some(d) = &c.details {
            let entry = tables.entry(c.name.clone()).or_insert_with(|| json!({}));
            entry[&c.case] = d.clone();
        }
    }
    Value::Object(tables)
}
