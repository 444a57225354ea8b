//! Map spec files: `key: value` lines, `#` comments, repeated keys append.
//!
//! ```text
//! source: x, y, z
//! source_ideal: x*z - y^2
//! target: u, v
//! images: u^2, u*v, v^2
//! action: [[1, -1]]
//! ```
//!
//! `target_ideal` and `action` are optional. List values are comma separated.

use summand_lab::catalog::{build_named_example, parse_example_spec};
use summand_lab::graded::MultiGrading;
use summand_lab::groebner::Ideal;
use summand_lab::poly::{PolyRing, Polynomial};
use summand_lab::ringmap::{QuotientRing, RingMap};
use summand_lab::Error;

pub struct MapSpec {
    pub map: RingMap,
    pub action: Option<MultiGrading>,
}

const KEYS: [&str; 6] = ["source", "source_ideal", "target", "target_ideal", "images", "action"];

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect()
}

fn polys(ring: &PolyRing, items: &[String]) -> Result<Vec<Polynomial>, Error> {
    Ok(items.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>()?)
}

pub fn parse_weights(text: &str, arity: usize) -> Result<MultiGrading, Error> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("weights must be a JSON integer matrix: {e}")))?;
    Ok(MultiGrading::new(rows, arity)?)
}

pub fn parse_map_spec(text: &str) -> Result<MapSpec, Error> {
    let mut fields: Vec<(String, String)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) =
            line.split_once(':').ok_or_else(|| Error::Input(format!("line {}: expected `key: value`", n + 1)))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Input(format!("line {}: unknown key {key:?}", n + 1)));
        }
        match fields.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) if key == "action" => {
                return Err(Error::Input(format!("line {}: action given twice ({v})", n + 1)));
            }
            Some((_, v)) => {
                v.push(',');
                v.push_str(value);
            }
            None => fields.push((key.to_string(), value.to_string())),
        }
    }
    let get = |k: &str| fields.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
    let required = |k: &str| get(k).ok_or_else(|| Error::Input(format!("missing key {k:?}")));
    let source = PolyRing::new(split_list(required("source")?))?;
    let target = PolyRing::new(split_list(required("target")?))?;
    let src_ideal = Ideal::new(&source, polys(&source, &split_list(get("source_ideal").unwrap_or("")))?)?;
    let tgt_ideal = Ideal::new(&target, polys(&target, &split_list(get("target_ideal").unwrap_or("")))?)?;
    let images = polys(&target, &split_list(required("images")?))?;
    let map = RingMap::new(QuotientRing::new(src_ideal), QuotientRing::new(tgt_ideal), images)?;
    let action = get("action").map(|a| parse_weights(a, target.arity())).transpose()?;
    Ok(MapSpec { map, action })
}

/// `example:<name>(params)` selects a catalog map; anything else is a file path.
pub fn load_map(arg: &str) -> Result<MapSpec, Error> {
    if let Some(spec) = arg.strip_prefix("example:") {
        let (key, params) = parse_example_spec(spec)?;
        let ex = build_named_example(&key, &params)?;
        let map = ex.object.map().cloned().ok_or_else(|| Error::Input(format!("example {key} has no ring map")))?;
        return Ok(MapSpec { map, action: None });
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::Input(format!("cannot read {arg}: {e}")))?;
    parse_map_spec(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_veronese() {
        let spec = parse_map_spec(
            "# conic\nsource: x, y, z\nsource_ideal: x*z - y^2\ntarget: u, v\nimages: u^2, u*v\nimages: v^2\n",
        )
        .unwrap();
        assert_eq!(spec.map.images().len(), 3);
        assert!(spec.action.is_none());
    }

    #[test]
    fn action_and_errors() {
        let spec = parse_map_spec("source: y\ntarget: u, v\nimages: u*v\naction: [[1,-1]]").unwrap();
        assert_eq!(spec.action.unwrap().weights(), &[vec![1, -1]]);
        assert!(matches!(parse_map_spec("source: y\nimages: u"), Err(Error::Input(_))));
        assert!(matches!(parse_map_spec("sauce: y"), Err(Error::Input(_))));
        assert!(parse_map_spec("source: y\ntarget: u\nimages: u, u").is_err());
    }
}
