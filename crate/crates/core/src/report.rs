//! Deterministic reports and the command entry points behind the CLI.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::jordan::{DivisionAlgebra, JordanElement};
use crate::json;
use crate::reduction::{self, OscillatorConfig, SPLIT_RANK};
use crate::sampling::rng_for;
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::strata::{self, ProjPoint};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub case: String,
    pub samples: usize,
    pub failures: usize,
    /// Exact input of the first failure.
    pub witness: Option<Value>,
    /// Values recorded by the check (tables, per-stratum ranks, ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl CheckRecord {
    pub fn new(name: &str, case: &str) -> Self {
        CheckRecord { name: name.into(), case: case.into(), samples: 0, failures: 0, witness: None, details: None }
    }

    /// Counts one sample; the first failing sample becomes the witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Report {
    /// Sorts the checks by name (then case) and derives the verdict.
    pub fn new(command: String, seed: u64, mut checks: Vec<CheckRecord>, result: Option<Value>) -> Self {
        checks.sort_by(|a, b| (&a.name, &a.case).cmp(&(&b.name, &b.case)));
        let verdict = if checks.iter().all(CheckRecord::passed) { Verdict::Pass } else { Verdict::Fail };
        Report { command, seed, checks, verdict, result }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report is serializable")
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    /// One line per check plus the verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (seed {})", self.command, self.seed);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {} [{}] samples={} failures={}",
                if c.passed() { "PASS" } else { "FAIL" },
                c.name,
                c.case,
                c.samples,
                c.failures
            );
        }
        if let Some(r) = &self.result {
            let _ = writeln!(out, "result: {r}");
        }
        let _ = writeln!(out, "verdict: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

fn classify_over<F: Scalar>(x: &JordanElement<F>) -> (Vec<CheckRecord>, Value) {
    let alg = x.algebra().name();
    let rank = x.jordan_rank();
    let det = x.det();
    let sharp = x.sharp();
    let mut adj = CheckRecord::new("classify.sharp-adjugate", alg);
    adj.record(x.circ(&sharp) == JordanElement::identity(x.algebra()).scale(&det), || json::jordan_to_json(x));
    let mut checks = vec![adj];
    let mut result = json!({
        "stratum": rank.get(),
        "det": json::scalar_to_json(&det),
        "sharp": json::jordan_to_json(&sharp),
    });
    if x.algebra() != DivisionAlgebra::O {
        let mut agree = CheckRecord::new("classify.matrix-rank", alg);
        let model = x.matrix_model_rank().expect("classical algebra");
        agree.record(model == usize::from(rank.get()), || json::jordan_to_json(x));
        checks.push(agree);
        let f = strata::rank_factorization(x).expect("classical algebra");
        result["rank_factorization"] = json!({
            "columns": json::matrix_to_json(&f.columns),
            "rows": json::matrix_to_json(&f.rows),
        });
    }
    (checks, result)
}

/// Stratum, determinant, sharp and (classical cases) a rank factorization of
/// a Jordan element given as JSON.
pub fn cmd_classify(input: &Value) -> Result<Report> {
    let complexified = input.get("complexified").and_then(Value::as_bool).unwrap_or(false);
    let (checks, result) = if complexified {
        classify_over(&json::jordan_from_json::<Gaussian>(input, "")?)
    } else {
        classify_over(&json::jordan_from_json::<Rational>(input, "")?)
    };
    Ok(Report::new("classify".into(), 0, checks, Some(result)))
}

/// Angular momentum of an oscillator configuration and, on the zero level,
/// its reduced Jordan element with both stratum classifications.
pub fn cmd_reduce(input: &Value) -> Result<Report> {
    let config = json::oscillator_from_json(input, "")?;
    let l = config.particles();
    if l > SPLIT_RANK {
        return Err(Error::DimensionMismatch(format!(
            "{l} oscillators; the reduction is defined for at most {SPLIT_RANK}"
        )));
    }
    let j = reduction::angular_momentum(&config);
    let mut result = json!({ "angular_momentum": json::matrix_to_json(&j) });
    let mut checks = Vec::new();
    if j.is_zero() {
        // Idle oscillators change neither the angular momentum nor the span.
        let s = config.dim();
        let pad = |rows: &Vec<Vec<Rational>>| {
            let mut r = rows.clone();
            r.resize(SPLIT_RANK, vec![Rational::ZERO; s]);
            r
        };
        let full = OscillatorConfig::new(pad(&config.q), pad(&config.p))?;
        let alpha = full.encode()?;
        let x = reduction::reduced_point(&alpha)?;
        let jordan = x.jordan_rank();
        let mechanical = reduction::classify_config(&config);
        let mut agree = CheckRecord::new("reduce.stratum-agreement", "real");
        agree.record(jordan == mechanical, || json::oscillator_to_json(&config));
        checks.push(agree);
        result["zero_level"] = json!(true);
        result["reduced"] = json::jordan_to_json(&x);
        result["stratum"] = json!(jordan.get());
        result["mechanical_stratum"] = json!(mechanical.get());
    } else {
        result["zero_level"] = json!(false);
    }
    Ok(Report::new("reduce".into(), 0, checks, Some(result)))
}

/// Severi-type embeddings accepted by [`cmd_embed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbedKind {
    Veronese,
    Segre,
    Plucker,
    Octonionic,
}

impl EmbedKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "veronese" => Ok(Self::Veronese),
            "segre" => Ok(Self::Segre),
            "plucker" => Ok(Self::Plucker),
            "octonionic" => Ok(Self::Octonionic),
            _ => Err(Error::Unknown { kind: "embedding", name: s.into() }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Veronese => "veronese",
            Self::Segre => "segre",
            Self::Plucker => "plucker",
            Self::Octonionic => "octonionic",
        }
    }

    /// Number and length of the input vectors.
    fn arity(self) -> (usize, usize) {
        match self {
            Self::Veronese => (1, 3),
            Self::Segre => (2, 3),
            Self::Plucker => (2, 6),
            Self::Octonionic => (0, 0),
        }
    }
}

fn vector_from_json(v: &Value, len: usize, path: &str) -> Result<Vec<Gaussian>> {
    let a = v.as_array().ok_or_else(|| Error::Parse(format!("{path}: expected an array")))?;
    if a.len() != len {
        return Err(Error::Parse(format!("{path}: expected {len} entries, found {}", a.len())));
    }
    a.iter().enumerate().map(|(i, x)| json::scalar_from_json::<Gaussian>(x, &format!("{path}[{i}]"))).collect()
}

fn embed_checks<F: Scalar>(x: &JordanElement<F>, kind: EmbedKind) -> Result<(Vec<CheckRecord>, Value)> {
    let point = ProjPoint::new(x.clone())?;
    let case = x.algebra().name();
    let mut rank = CheckRecord::new("embed.rank-one", case);
    rank.record(point.stratum().get() == 1, || json::jordan_to_json(x));
    let mut sharp = CheckRecord::new("embed.sharp-vanishes", case);
    sharp.record(x.sharp().is_zero(), || json::jordan_to_json(x));
    let result = json!({
        "kind": kind.name(),
        "element": json::jordan_to_json(x),
        "projective": json::proj_to_json(&point),
        "stratum": point.stratum().get(),
    });
    Ok((vec![rank, sharp], result))
}

fn all_real(v: &[Gaussian]) -> Option<Vec<Rational>> {
    v.iter().map(|g| g.im.is_zero().then(|| g.re.clone())).collect()
}

/// Embeds vectors (`veronese`: one 3-vector, `segre`: two 3-vectors,
/// `plucker`: two 6-vectors) or, for `octonionic`, forms `U_A(E₁₁)` from an
/// optional invertible Albert element `A` (random from `seed` if absent).
pub fn cmd_embed(kind: EmbedKind, inputs: &[Value], seed: u64) -> Result<Report> {
    let (n, len) = kind.arity();
    if kind == EmbedKind::Octonionic {
        let a = match inputs {
            [] => {
                let mut rng = rng_for(seed, "embed/octonionic");
                strata::rank1_sample::<Rational, _>(DivisionAlgebra::O, &mut rng).1
            }
            [v] => json::jordan_from_json::<Rational>(v, "$0")?,
            _ => return Err(Error::Parse(format!("octonionic takes at most one element, got {}", inputs.len()))),
        };
        if a.algebra() != DivisionAlgebra::O || a.det().is_zero() {
            return Err(Error::Degenerate("A must be an invertible element of H3(O)".into()));
        }
        let x = a.quadratic_rep(&JordanElement::idempotent(DivisionAlgebra::O, 0))?;
        let (checks, mut result) = embed_checks(&x, kind)?;
        result["a"] = json::jordan_to_json(&a);
        return Ok(Report::new(format!("embed {}", kind.name()), seed, checks, Some(result)));
    }
    if inputs.len() != n {
        return Err(Error::Parse(format!("{} takes {n} vectors, got {}", kind.name(), inputs.len())));
    }
    let vs = inputs
        .iter()
        .enumerate()
        .map(|(i, v)| vector_from_json(v, len, &format!("${i}")))
        .collect::<Result<Vec<_>>>()?;
    let (checks, result) = match kind {
        EmbedKind::Veronese => match all_real(&vs[0]) {
            Some(r) => embed_checks(&strata::veronese(&<[Rational; 3]>::try_from(r).expect("3"))?, kind)?,
            None => embed_checks(&strata::veronese(&<[Gaussian; 3]>::try_from(vs[0].clone()).expect("3"))?, kind)?,
        },
        EmbedKind::Segre => {
            let u: [Gaussian; 3] = vs[0].clone().try_into().expect("3");
            let w: [Gaussian; 3] = vs[1].clone().try_into().expect("3");
            embed_checks(&strata::segre(&u, &w)?, kind)?
        }
        EmbedKind::Plucker => {
            let u: [Gaussian; 6] = vs[0].clone().try_into().expect("6");
            let w: [Gaussian; 6] = vs[1].clone().try_into().expect("6");
            embed_checks(&strata::plucker(&u, &w)?, kind)?
        }
        EmbedKind::Octonionic => unreachable!("handled above"),
    };
    Ok(Report::new(format!("embed {}", kind.name()), seed, checks, Some(result)))
}
