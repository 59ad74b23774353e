//! Sparse vectors: index-sorted `(index, scalar)` pairs with no zero entries.

use crate::field::{Field, Scalar};

pub type SVec = Vec<(usize, Scalar)>;

/// Normalize an arbitrary pair list into canonical sparse form.
pub fn canon(field: &Field, mut terms: SVec) -> SVec {
    terms.sort_by_key(|(i, _)| *i);
    let mut out: SVec = Vec::with_capacity(terms.len());
    for (i, c) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = field.add(acc, &c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

pub fn get(v: &SVec, i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |(j, _)| *j)
        .ok()
        .map(|k| &v[k].1)
}

/// `a + c·b`, in canonical form. `a` and `b` must be canonical.
pub fn add_scaled(field: &Field, a: &SVec, c: &Scalar, b: &SVec) -> SVec {
    if field.is_zero(c) {
        return a.clone();
    }
    let mut out: SVec = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let s = field.mul(c, &b[j].1);
            if !field.is_zero(&s) {
                out.push((b[j].0, s));
            }
            j += 1;
        } else {
            let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !field.is_zero(&s) {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(field: &Field, v: &SVec, c: &Scalar) -> SVec {
    if field.is_zero(c) {
        return Vec::new();
    }
    v.iter()
        .map(|(i, x)| (*i, field.mul(x, c)))
        .collect()
}

pub fn neg(field: &Field, v: &SVec) -> SVec {
    v.iter().map(|(i, x)| (*i, field.neg(x))).collect()
}

pub fn to_dense(field: &Field, v: &SVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn from_dense(field: &Field, v: &[Scalar]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn unit(field: &Field, i: usize) -> SVec {
    vec![(i, field.one())]
}

/// Re-index entries through `map`; `map` must be injective on the support.
pub fn reindex(v: &SVec, map: impl Fn(usize) -> usize) -> SVec {
    let mut out: SVec = v.iter().map(|(i, c)| (map(*i), c.clone())).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}
