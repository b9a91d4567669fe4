//! JSON element and algebra files. Rationals are written as `"p/q"` strings
//! (`"p"` when `q = 1`); integer literals are also accepted on input.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::{builtin, AlgebraElement, AlgebraKind, AlgebraSpec, GroupPoint};
use crate::cocycle::JetAlgebraElement;
use crate::error::{input, Error, Result};
use crate::exact::Matrix;
use crate::jet::{JetElement, Side};
use crate::scalar::Scalar;
use crate::tangent::{MultiIndex, TangentElement};

pub fn scalar_to_json<T: Scalar>(x: &T) -> Value {
    Value::String(x.to_string())
}

pub fn scalar_from_json<T: Scalar>(v: &Value) -> Result<T> {
    match v {
        Value::String(s) => T::parse(s).ok_or_else(|| Error::Input(format!("bad rational {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(T::from_i64(n.as_i64().unwrap())),
        other => input(format!("expected a rational string, got {other}")),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Input(format!("{what} must be a list")))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Input(format!("missing field {key:?}")))
}

fn usize_field(obj: &Value, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::Input(format!("{key:?} must be a non-negative integer")))
}

pub fn element_to_json<T: Scalar>(x: &AlgebraElement<T>) -> Value {
    Value::Array(x.coeffs().iter().map(scalar_to_json).collect())
}

pub fn element_from_json<T: Scalar>(v: &Value) -> Result<AlgebraElement<T>> {
    Ok(AlgebraElement(array(v, "element")?.iter().map(scalar_from_json).collect::<Result<_>>()?))
}

pub fn matrix_to_json<T: Scalar>(m: &Matrix<T>) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json<T: Scalar>(v: &Value) -> Result<Matrix<T>> {
    let rows = array(v, "matrix")?
        .iter()
        .map(|r| array(r, "matrix row")?.iter().map(scalar_from_json).collect())
        .collect::<Result<Vec<Vec<T>>>>()?;
    Matrix::from_rows(rows)
}

pub fn group_point_to_json<T: Scalar>(g: &GroupPoint<T>) -> Value {
    match g {
        GroupPoint::Identity => json!("identity"),
        GroupPoint::Matrix(m) => matrix_to_json(m),
        GroupPoint::Automorphism(m) => json!({ "automorphism": matrix_to_json(m) }),
    }
}

pub fn group_point_from_json<T: Scalar>(v: &Value) -> Result<GroupPoint<T>> {
    match v {
        Value::String(s) if s == "identity" => Ok(GroupPoint::Identity),
        Value::Array(_) => Ok(GroupPoint::Matrix(matrix_from_json(v)?)),
        Value::Object(o) if o.len() == 1 && o.contains_key("automorphism") => {
            Ok(GroupPoint::Automorphism(matrix_from_json(&o["automorphism"])?))
        }
        other => input(format!("bad group point {other}")),
    }
}

pub fn algebra_to_json<T: Scalar>(alg: &AlgebraSpec<T>) -> Value {
    let mut obj = Map::new();
    obj.insert("name".into(), json!(alg.name()));
    obj.insert("dim".into(), json!(alg.dim()));
    obj.insert("leibniz".into(), json!(alg.is_leibniz()));
    match alg.kind() {
        AlgebraKind::Matrix => {
            obj.insert("kind".into(), json!("matrix"));
            obj.insert("basis".into(), Value::Array(alg.basis().iter().map(matrix_to_json).collect()));
        }
        AlgebraKind::StructureConstants => {
            obj.insert("kind".into(), json!("structure_constants"));
            let rows = alg
                .structure_constants()
                .into_iter()
                .map(|(i, j, c)| json!([i, j, element_to_json(c)]))
                .collect();
            obj.insert("brackets".into(), Value::Array(rows));
        }
    }
    Value::Object(obj)
}

pub fn algebra_from_json<T: Scalar>(v: &Value) -> Result<AlgebraSpec<T>> {
    let name = v.get("name").and_then(Value::as_str).unwrap_or("custom").to_string();
    let leibniz = v.get("leibniz").and_then(Value::as_bool).unwrap_or(false);
    let kind = v.get("kind").and_then(Value::as_str);
    let alg = if let Some(basis) = v.get("basis") {
        if kind.is_some_and(|k| k != "matrix") || leibniz {
            return input("a matrix basis describes a Lie algebra of kind \"matrix\"");
        }
        let basis = array(basis, "basis")?.iter().map(matrix_from_json).collect::<Result<_>>()?;
        AlgebraSpec::from_matrix_basis(name, basis)?
    } else {
        if kind == Some("matrix") {
            return input("kind \"matrix\" needs a \"basis\"");
        }
        let dim = usize_field(v, "dim")?;
        let brackets = match v.get("brackets") {
            Some(b) => array(b, "brackets")?
                .iter()
                .map(|row| {
                    let row = array(row, "bracket row")?;
                    if row.len() != 3 {
                        return input("bracket rows are [i, j, coefficients]");
                    }
                    let idx = |x: &Value| {
                        x.as_u64().map(|n| n as usize).ok_or_else(|| Error::Input("bad bracket index".into()))
                    };
                    let coeffs = array(&row[2], "bracket coefficients")?
                        .iter()
                        .map(scalar_from_json)
                        .collect::<Result<_>>()?;
                    Ok((idx(&row[0])?, idx(&row[1])?, coeffs))
                })
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        AlgebraSpec::from_structure_constants(name, dim, leibniz, brackets)?
    };
    if let Some(dim) = v.get("dim") {
        if dim.as_u64() != Some(alg.dim() as u64) {
            return input(format!("declared dim {dim} but the algebra has dimension {}", alg.dim()));
        }
    }
    let report = alg.verify();
    if !report.passed {
        return input(report.failure.unwrap_or_else(|| "algebra axioms fail".into()));
    }
    Ok(alg)
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// A builtin name such as `sl2` or `nilpotent_upper(4)`, or a path to an
/// algebra file.
pub fn load_algebra<T: Scalar>(name_or_path: &str) -> Result<AlgebraSpec<T>> {
    let path = Path::new(name_or_path);
    if path.is_file() {
        algebra_from_json(&read_json(path)?)
    } else {
        builtin(name_or_path)
    }
}

fn side_from_json(v: &Value) -> Result<Side> {
    match v.get("side") {
        None => Ok(Side::Right),
        Some(Value::String(s)) => s.parse(),
        Some(other) => input(format!("bad side {other}")),
    }
}

fn check_declared_k(v: &Value, k: usize) -> Result<()> {
    if let Some(d) = v.get("k") {
        if d.as_u64() != Some(k as u64) {
            return input(format!("declared k = {d} but {k} components given"));
        }
    }
    Ok(())
}

pub fn jet_to_json<T: Scalar>(j: &JetElement<T>) -> Value {
    json!({
        "k": j.k(),
        "side": j.side.to_string(),
        "g": group_point_to_json(&j.g),
        "x": Value::Array(j.x.iter().map(element_to_json).collect()),
    })
}

pub fn jet_from_json<T: Scalar>(alg: &AlgebraSpec<T>, v: &Value) -> Result<JetElement<T>> {
    let x: Vec<AlgebraElement<T>> =
        array(field(v, "x")?, "x")?.iter().map(element_from_json).collect::<Result<_>>()?;
    check_declared_k(v, x.len())?;
    let g = match v.get("g") {
        Some(g) => group_point_from_json(g)?,
        None => GroupPoint::Identity,
    };
    let j = JetElement::new(g, x, side_from_json(v)?)?;
    j.validate(alg)?;
    Ok(j)
}

pub fn tangent_to_json<T: Scalar>(a: &TangentElement<T>) -> Value {
    let comps: Map<String, Value> = a
        .indices()
        .map(|alpha| (alpha.to_string(), element_to_json(a.component(alpha))))
        .collect();
    json!({
        "k": a.k(),
        "side": a.side.to_string(),
        "g": group_point_to_json(&a.g),
        "components": Value::Object(comps),
    })
}

pub fn tangent_from_json<T: Scalar>(alg: &AlgebraSpec<T>, v: &Value) -> Result<TangentElement<T>> {
    let k = usize_field(v, "k")?;
    let obj = field(v, "components")?
        .as_object()
        .ok_or_else(|| Error::Input("components must be an object".into()))?;
    let size = 1usize.checked_shl(k as u32).unwrap_or(0).saturating_sub(1);
    let mut comps: Vec<Option<AlgebraElement<T>>> = vec![None; size];
    for (key, val) in obj {
        let alpha: MultiIndex = key.parse()?;
        if alpha.max() > k {
            return input(format!("component {key} exceeds k = {k}"));
        }
        comps[alpha.0 as usize - 1] = Some(element_from_json(val)?);
    }
    let comps = comps
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| Error::Input(format!("missing component {}", MultiIndex(i as u32 + 1)))))
        .collect::<Result<_>>()?;
    let g = match v.get("g") {
        Some(g) => group_point_from_json(g)?,
        None => GroupPoint::Identity,
    };
    let a = TangentElement::new(k, g, comps, side_from_json(v)?)?;
    a.validate(alg)?;
    Ok(a)
}

pub fn jet_algebra_to_json<T: Scalar>(a: &JetAlgebraElement<T>) -> Value {
    json!({
        "k": a.k(),
        "xi": element_to_json(&a.xi),
        "x": Value::Array(a.x.iter().map(element_to_json).collect()),
    })
}

pub fn jet_algebra_from_json<T: Scalar>(alg: &AlgebraSpec<T>, v: &Value) -> Result<JetAlgebraElement<T>> {
    let xi = match v.get("xi") {
        Some(xi) => element_from_json(xi)?,
        None => alg.zero(),
    };
    let x: Vec<AlgebraElement<T>> =
        array(field(v, "x")?, "x")?.iter().map(element_from_json).collect::<Result<_>>()?;
    check_declared_k(v, x.len())?;
    alg.check_element(&xi)?;
    x.iter().try_for_each(|e| alg.check_element(e))?;
    Ok(JetAlgebraElement::new(xi, x))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Lcg;
    use crate::{Algebra, Rational};

    #[test]
    fn rationals() {
        let r: Rational = scalar_from_json(&json!("-3/6")).unwrap();
        assert_eq!(scalar_to_json(&r), json!("-1/2"));
        let n: Rational = scalar_from_json(&json!(4)).unwrap();
        assert_eq!(scalar_to_json(&n), json!("4"));
        assert!(scalar_from_json::<Rational>(&json!("1/0")).is_err());
        assert!(scalar_from_json::<Rational>(&json!(0.5)).is_err());
    }

    #[test]
    fn algebras_round_trip() {
        for name in ["abelian(2)", "heis3", "sl2", "so3", "nilpotent_upper(4)", "leibniz2"] {
            let a: Algebra = builtin(name).unwrap();
            let b: Algebra = algebra_from_json(&algebra_to_json(&a)).unwrap();
            assert_eq!(algebra_to_json(&a), algebra_to_json(&b), "{name}");
        }
    }

    #[test]
    fn rejects_non_jacobi_algebra() {
        let v = json!({"name": "bad", "kind": "structure_constants", "dim": 3, "leibniz": false,
            "brackets": [[0, 1, ["0", "0", "1"]], [1, 0, ["0", "0", "-1"]], [0, 2, ["1", "0", "0"]], [2, 0, ["-1", "0", "0"]]]});
        assert!(algebra_from_json::<Rational>(&v).is_err());
    }

    #[test]
    fn elements_round_trip() {
        let mut rng = Lcg::new(5);
        for name in ["sl2", "heis3", "leibniz2"] {
            let a: Algebra = builtin(name).unwrap();
            let with_g = !a.is_leibniz();
            for side in [Side::Right, Side::Left] {
                let j = rng.jet(&a, 3, side, with_g).unwrap();
                assert_eq!(jet_from_json(&a, &jet_to_json(&j)).unwrap(), j);
                let t = rng.tangent(&a, 3, side, with_g).unwrap();
                assert_eq!(tangent_from_json(&a, &tangent_to_json(&t)).unwrap(), t);
            }
            let x = rng.jet_algebra(&a, 2);
            assert_eq!(jet_algebra_from_json(&a, &jet_algebra_to_json(&x)).unwrap(), x);
        }
    }

    #[test]
    fn tangent_needs_every_component() {
        let a: Algebra = builtin("abelian(1)").unwrap();
        let v = json!({"k": 2, "side": "right", "g": "identity", "components": {"1": ["1"], "2": ["0"]}});
        assert!(tangent_from_json(&a, &v).is_err());
        let v = json!({"k": 1, "side": "right", "g": "identity", "components": {"1": ["1"], "2": ["0"]}});
        assert!(tangent_from_json(&a, &v).is_err());
    }

    #[test]
    fn jet_file_errors() {
        let a: Algebra = builtin("sl2").unwrap();
        assert!(jet_from_json(&a, &json!({"k": 2, "x": [["1", "0", "0"]]})).is_err());
        assert!(jet_from_json(&a, &json!({"k": 1, "x": [["1", "0"]]})).is_err());
        assert!(jet_from_json(&a, &json!({"k": 1, "side": "up", "x": [["1", "0", "0"]]})).is_err());
        let j = jet_from_json(&a, &json!({"k": 1, "x": [["1", "0", "0"]]})).unwrap();
        assert!(j.g.is_identity() && j.side == Side::Right);
    }
}
