//! JSON encodings of the exact values exchanged with the command line.
//!
//! | value | encoding |
//! |---|---|
//! | rational | `[num, den]`; integers and `"a/b"` strings are accepted on input |
//! | Gaussian | `[[re_n, re_d], [im_n, im_d]]` |
//! | `CDNumber` | `{"level": k, "coeffs": [scalar; 2^k]}` |
//! | `JordanElement` | `{"algebra": "R|C|H|O", "complexified": bool, "diag": [scalar; 3], "off": [X23, X13, X12]}` |
//! | `ProjPoint` | `JordanElement` fields plus `"projective": true` |
//! | `TKKElement` | `{"case": "sp3|u33|so12|e7", "plus": J, "mid": [[scalar]], "minus": J}` |
//! | `WMap` | `{"case": "real|complex|quaternionic", "s": n, "matrix": [[CDNumber]]}` |
//! | `OscillatorConfig` | `{"q": [[scalar]], "p": [[scalar]]}`, one row per particle |
//!
//! Integers that do not fit in 64 bits are written as decimal strings.
//! Decoding errors name the JSON path of the offending value.

use dashu_int::IBig;
use serde_json::{json, Map, Value};

use crate::cayley_dickson::CDNumber;
use crate::error::{Error, Result};
use crate::jordan::{DivisionAlgebra, JordanElement};
use crate::kmatrix::KMatrix;
use crate::linalg::Matrix;
use crate::reduction::{DualPairCase, OscillatorConfig, WMap};
use crate::scalar::{BaseRing, Gaussian, Rational, Scalar};
use crate::strata::ProjPoint;
use crate::tkk::{algebra, StrOperator, TKKElement, TkkCase};

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{}: {msg}", if path.is_empty() { "$" } else { path }))
}

fn int_json(n: &IBig) -> Value {
    match i64::try_from(n.clone()) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

fn int_from(v: &Value, path: &str) -> Result<IBig> {
    match v {
        Value::Number(n) => n.as_i64().map(IBig::from).ok_or_else(|| err(path, "expected an integer")),
        Value::String(s) => s.trim().parse::<IBig>().map_err(|_| err(path, "expected an integer string")),
        _ => Err(err(path, "expected an integer")),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    json!([int_json(r.numerator()), int_json(&IBig::from(r.denominator().clone()))])
}

pub fn rational_from_json(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::Array(a) if a.len() == 2 => {
            let n = int_from(&a[0], &format!("{path}[0]"))?;
            let d = int_from(&a[1], &format!("{path}[1]"))?;
            if d == IBig::ZERO {
                return Err(err(path, "zero denominator"));
            }
            Ok(Rational::from(n) / Rational::from(d))
        }
        Value::Number(_) => Ok(Rational::from(int_from(v, path)?)),
        Value::String(s) => match s.split_once('/') {
            Some((n, d)) => rational_from_json(&json!([n, d]), path),
            None => Ok(Rational::from(int_from(v, path)?)),
        },
        _ => Err(err(path, "expected a rational [num, den]")),
    }
}

pub fn scalar_to_json<F: Scalar>(x: &F) -> Value {
    match F::RING {
        BaseRing::Rational => rational_to_json(&x.re()),
        BaseRing::Gaussian => json!([rational_to_json(&x.re()), rational_to_json(&x.im())]),
    }
}

/// Accepts a rational for either ring and a `[re, im]` pair of rationals.
pub fn scalar_from_json<F: Scalar>(v: &Value, path: &str) -> Result<F> {
    let (re, im) = match v {
        Value::Array(a) if a.len() == 2 && a.iter().all(Value::is_array) => {
            (rational_from_json(&a[0], &format!("{path}[0]"))?, rational_from_json(&a[1], &format!("{path}[1]"))?)
        }
        _ => (rational_from_json(v, path)?, Rational::ZERO),
    };
    F::from_parts(re, im).ok_or_else(|| err(path, "complex value where a rational is required"))
}

pub fn cd_to_json<F: Scalar>(x: &CDNumber<F>) -> Value {
    json!({
        "level": x.level(),
        "coeffs": x.coeffs().iter().map(scalar_to_json).collect::<Vec<_>>(),
    })
}

pub fn cd_from_json<F: Scalar>(v: &Value, path: &str) -> Result<CDNumber<F>> {
    let obj = object(v, path)?;
    let coeffs = array(field(obj, "coeffs", path)?, &format!("{path}.coeffs"))?;
    let xs = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| scalar_from_json(c, &format!("{path}.coeffs[{i}]")))
        .collect::<Result<Vec<F>>>()?;
    let x = CDNumber::new(xs).map_err(|e| err(path, e))?;
    if let Some(level) = obj.get("level") {
        let l = level.as_u64().ok_or_else(|| err(&format!("{path}.level"), "expected an integer"))?;
        if l as usize != x.level() {
            return Err(err(path, format!("level {l} but {} coefficients", x.dim())));
        }
    }
    Ok(x)
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn string<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a str> {
    field(obj, key, path)?.as_str().ok_or_else(|| err(&format!("{path}.{key}"), "expected a string"))
}

fn fixed<'a>(v: &'a Value, n: usize, path: &str) -> Result<&'a Vec<Value>> {
    let a = array(v, path)?;
    if a.len() != n {
        return Err(err(path, format!("expected {n} entries, found {}", a.len())));
    }
    Ok(a)
}

pub fn jordan_to_json<F: Scalar>(x: &JordanElement<F>) -> Value {
    json!({
        "algebra": x.algebra().name(),
        "complexified": F::RING == BaseRing::Gaussian,
        "diag": x.diag().iter().map(scalar_to_json).collect::<Vec<_>>(),
        "off": x.off().iter().map(cd_to_json).collect::<Vec<_>>(),
    })
}

/// Decodes over the requested base ring; a complexified input is rejected
/// over the rationals.
pub fn jordan_from_json<F: Scalar>(v: &Value, path: &str) -> Result<JordanElement<F>> {
    let obj = object(v, path)?;
    let alg = DivisionAlgebra::parse(string(obj, "algebra", path)?).map_err(|e| err(&format!("{path}.algebra"), e))?;
    if let Some(c) = obj.get("complexified") {
        let c = c.as_bool().ok_or_else(|| err(&format!("{path}.complexified"), "expected a boolean"))?;
        if c && F::RING == BaseRing::Rational {
            return Err(err(path, "complexified element where a real one is required"));
        }
    }
    let dp = format!("{path}.diag");
    let d = fixed(field(obj, "diag", path)?, 3, &dp)?;
    let diag = [0, 1, 2].map(|i| scalar_from_json::<F>(&d[i], &format!("{dp}[{i}]")));
    let op = format!("{path}.off");
    let o = fixed(field(obj, "off", path)?, 3, &op)?;
    let off = [0, 1, 2].map(|i| cd_from_json::<F>(&o[i], &format!("{op}[{i}]")));
    let [d0, d1, d2] = diag;
    let [o0, o1, o2] = off;
    JordanElement::new(alg, [d0?, d1?, d2?], [o0?, o1?, o2?]).map_err(|e| err(path, e))
}

/// Decodes a Jordan element over `Q(𝔦)`, accepting real inputs too.
pub fn jordan_from_json_any(v: &Value, path: &str) -> Result<JordanElement<Gaussian>> {
    jordan_from_json::<Gaussian>(v, path)
}

pub fn proj_to_json<F: Scalar>(p: &ProjPoint<F>) -> Value {
    let mut v = jordan_to_json(p.representative());
    v["projective"] = Value::Bool(true);
    v
}

pub fn proj_from_json<F: Scalar>(v: &Value, path: &str) -> Result<ProjPoint<F>> {
    ProjPoint::new(jordan_from_json(v, path)?).map_err(|e| err(path, e))
}

pub fn matrix_to_json<F: Scalar>(m: &Matrix<F>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_to_json).collect())).collect())
}

pub fn matrix_from_json<F: Scalar>(v: &Value, path: &str) -> Result<Matrix<F>> {
    let rows = rows_from_json(v, path, |x, p| scalar_from_json::<F>(x, p))?;
    Ok(Matrix::from_rows(rows))
}

fn rows_from_json<T>(v: &Value, path: &str, f: impl Fn(&Value, &str) -> Result<T>) -> Result<Vec<Vec<T>>> {
    let rows = array(v, path)?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        let row =
            array(r, &rp)?.iter().enumerate().map(|(j, x)| f(x, &format!("{rp}[{j}]"))).collect::<Result<Vec<T>>>()?;
        if out.first().is_some_and(|first: &Vec<T>| first.len() != row.len()) {
            return Err(err(&rp, "ragged rows"));
        }
        out.push(row);
    }
    Ok(out)
}

pub fn tkk_to_json(a: &TKKElement) -> Value {
    json!({
        "case": a.case.name(),
        "plus": jordan_to_json(&a.plus),
        "mid": matrix_to_json(a.mid.matrix()),
        "minus": jordan_to_json(&a.minus),
    })
}

pub fn tkk_from_json(v: &Value, path: &str) -> Result<TKKElement> {
    let obj = object(v, path)?;
    let case = TkkCase::parse(string(obj, "case", path)?).map_err(|e| err(&format!("{path}.case"), e))?;
    let plus = jordan_from_json::<Rational>(field(obj, "plus", path)?, &format!("{path}.plus"))?;
    let minus = jordan_from_json::<Rational>(field(obj, "minus", path)?, &format!("{path}.minus"))?;
    let mid = matrix_from_json::<Rational>(field(obj, "mid", path)?, &format!("{path}.mid"))?;
    let alg = algebra(case);
    let want = alg.jordan_algebra();
    if plus.algebra() != want || minus.algebra() != want {
        return Err(err(path, format!("case {case} needs H3({want}) components")));
    }
    let n = alg.jordan_dim();
    if mid.nrows() != n || mid.ncols() != n {
        return Err(err(&format!("{path}.mid"), format!("expected a {n}x{n} matrix")));
    }
    let mid = StrOperator(mid);
    if alg.str_coords(&mid).is_none() {
        return Err(err(&format!("{path}.mid"), "operator is not in the structure algebra"));
    }
    Ok(TKKElement { case, plus, mid, minus })
}

pub fn wmap_to_json(w: &WMap) -> Value {
    json!({
        "case": w.case().name(),
        "s": w.s(),
        "matrix": w
            .matrix()
            .to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(cd_to_json).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn wmap_from_json(v: &Value, path: &str) -> Result<WMap> {
    let obj = object(v, path)?;
    let case = DualPairCase::parse(string(obj, "case", path)?).map_err(|e| err(&format!("{path}.case"), e))?;
    let mp = format!("{path}.matrix");
    let rows = rows_from_json(field(obj, "matrix", path)?, &mp, cd_from_json::<Rational>)?;
    let s = rows.first().map_or(0, Vec::len);
    if let Some(sv) = obj.get("s") {
        if sv.as_u64() != Some(s as u64) {
            return Err(err(&format!("{path}.s"), format!("does not match the {s} matrix columns")));
        }
    }
    if rows.iter().flatten().any(|x| x.level() != case.level()) {
        return Err(err(&mp, format!("entries must have level {}", case.level())));
    }
    if rows.is_empty() {
        return Err(err(&mp, "empty matrix"));
    }
    WMap::new(case, KMatrix::from_rows(case.level(), rows)).map_err(|e| err(path, e))
}

pub fn oscillator_to_json(c: &OscillatorConfig) -> Value {
    let rows = |m: &Vec<Vec<Rational>>| {
        Value::Array(m.iter().map(|r| Value::Array(r.iter().map(rational_to_json).collect())).collect())
    };
    json!({"q": rows(&c.q), "p": rows(&c.p)})
}

pub fn oscillator_from_json(v: &Value, path: &str) -> Result<OscillatorConfig> {
    let obj = object(v, path)?;
    let q = rows_from_json(field(obj, "q", path)?, &format!("{path}.q"), rational_from_json)?;
    let p = rows_from_json(field(obj, "p", path)?, &format!("{path}.p"), rational_from_json)?;
    OscillatorConfig::new(q, p).map_err(|e| err(path, e))
}

/// Parses text into a JSON value, reporting the line and column of syntax errors.
pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::rng_for;
    use crate::scalar::ratio;

    #[test]
    fn rationals_accept_lenient_forms() {
        let r = ratio(-7, 3);
        assert_eq!(rational_from_json(&rational_to_json(&r), "").unwrap(), r);
        assert_eq!(rational_from_json(&json!("-7/3"), "").unwrap(), r);
        assert_eq!(rational_from_json(&json!(5), "").unwrap(), Rational::from(5));
        let big = Rational::from(IBig::from(1u8) << 80) / Rational::from(3);
        let v = rational_to_json(&big);
        assert!(v[0].is_string());
        assert_eq!(rational_from_json(&v, "").unwrap(), big);
        assert!(rational_from_json(&json!([1, 0]), "").is_err());
    }

    #[test]
    fn jordan_round_trip() {
        let mut rng = rng_for(51, "json");
        for alg in DivisionAlgebra::ALL {
            let x = JordanElement::<Rational>::random(alg, &mut rng, 5);
            assert_eq!(jordan_from_json::<Rational>(&jordan_to_json(&x), "").unwrap(), x);
            let z = JordanElement::<Gaussian>::random(alg, &mut rng, 5);
            let v = jordan_to_json(&z);
            assert_eq!(v["complexified"], json!(true));
            assert_eq!(jordan_from_json::<Gaussian>(&v, "").unwrap(), z);
            assert!(jordan_from_json::<Rational>(&v, "").is_err());
        }
    }

    #[test]
    fn errors_name_the_path() {
        let mut v = jordan_to_json(&JordanElement::<Rational>::identity(DivisionAlgebra::H));
        v["off"][1]["coeffs"][2] = json!("x");
        let e = jordan_from_json::<Rational>(&v, "").unwrap_err().to_string();
        assert!(e.contains("$.off[1].coeffs[2]") || e.contains(".off[1].coeffs[2]"), "{e}");
        let e = parse_text("{\n  \"a\": }").unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
    }

    #[test]
    fn tkk_and_wmap_round_trip() {
        let mut rng = rng_for(52, "json-tkk");
        for case in [TkkCase::Sp3, TkkCase::U33] {
            let a = algebra(case).random(&mut rng, 2);
            assert_eq!(tkk_from_json(&tkk_to_json(&a), "").unwrap(), a);
        }
        for case in DualPairCase::ALL {
            let w = WMap::random(case, 2, &mut rng, 3);
            assert_eq!(wmap_from_json(&wmap_to_json(&w), "").unwrap(), w);
        }
        let c = OscillatorConfig::new(
            vec![vec![ratio(1, 2), Rational::ZERO, Rational::ONE]],
            vec![vec![Rational::ONE, ratio(-3, 4), Rational::ZERO]],
        )
        .unwrap();
        assert_eq!(oscillator_from_json(&oscillator_to_json(&c), "").unwrap(), c);
    }
}
