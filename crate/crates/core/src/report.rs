//! Serde helpers: exact scalars and polynomials serialize as strings.

use serde::ser::{SerializeSeq, Serializer};

use crate::poly::{Polynomial, Scalar};

pub fn ser_scalar<S: Serializer>(c: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

pub fn ser_scalars<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

pub fn ser_matrix<S: Serializer>(m: &[Vec<Scalar>], s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    serde::Serialize::serialize(&rows, s)
}

pub fn ser_poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn ser_opt_poly<S: Serializer>(p: &Option<Polynomial>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.to_string()),
        None => s.serialize_none(),
    }
}

pub fn ser_polys<S: Serializer>(v: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for p in v {
        seq.serialize_element(&p.to_string())?;
    }
    seq.end()
}
