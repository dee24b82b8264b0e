//! Text and JSON forms of group-algebra elements.
//!
//! Text syntax: a sum of terms separated by `+`/`-`, each term either
//! `coef*label`, a bare `label` (coefficient 1) or a bare scalar (a multiple
//! of the identity). Coefficients use [`Scalar`]'s syntax, e.g.
//! `2*e + (1/2)*a - i*a^2`. Labels are matched exactly against the group's
//! element labels; whitespace is ignored.

use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalar::Scalar;

pub fn parse_element(group: &Arc<FiniteGroup>, text: &str) -> Result<AlgebraElement> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty element expression".into()));
    }
    if t == "0" {
        return Ok(AlgebraElement::zero(group));
    }
    let mut terms = Vec::new();
    for (negative, body) in split_terms(&t)? {
        let (coef, label) = match split_top_level(body, '*') {
            Some((c, l)) => (c.parse::<Scalar>()?, l),
            None => (Scalar::one(), body),
        };
        let coef = if negative { -coef } else { coef };
        match group.index_of(label) {
            Some(g) => terms.push((g, coef)),
            None if label == body => {
                // bare scalar: multiple of the identity
                let k: Scalar = body
                    .parse()
                    .map_err(|_| Error::Parse(format!("unknown element label {label:?}")))?;
                let k = if negative { -k } else { k };
                terms.push((group.identity(), k));
            }
            None => return Err(Error::Parse(format!("unknown element label {label:?}"))),
        }
    }
    AlgebraElement::from_terms(group, terms)
}

/// Splits at `+`/`-` outside parentheses. Returns (negated, term body).
fn split_terms(t: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let bytes = t.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
            }
            b'+' | b'-' if depth == 0 => {
                if i > start {
                    out.push((negative, &t[start..i]));
                } else if i > 0 {
                    return Err(Error::Parse(format!("dangling operator in {t:?}")));
                }
                negative = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    if start >= t.len() {
        return Err(Error::Parse(format!("dangling operator in {t:?}")));
    }
    out.push((negative, &t[start..]));
    Ok(out)
}

fn split_top_level(t: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&t[..i], &t[i + 1..])),
            _ => {}
        }
    }
    None
}

/// One term of the JSON element form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub elem: String,
    pub re: String,
    pub im: String,
}

/// `{"group": "<spec>", "terms": [{"elem": "<label>", "re": "p/q", "im": "p/q"}]}`,
/// terms in ascending element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub group: String,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn from_element(x: &AlgebraElement) -> Self {
        let group = x.group().spec().map(|s| s.to_string()).unwrap_or_else(|| "custom".into());
        let terms = x
            .terms()
            .map(|(g, c)| {
                let (re, im) = c.to_parts();
                TermJson { elem: x.group().label(g).to_string(), re, im }
            })
            .collect();
        ElementJson { group, terms }
    }

    /// Rebuilds the element over `group`, which must match the `group` field
    /// when that names a catalog spec.
    pub fn to_element(&self, group: &Arc<FiniteGroup>) -> Result<AlgebraElement> {
        if let Some(spec) = group.spec() {
            let named: crate::group::GroupSpec = self.group.parse()?;
            if named != spec {
                return Err(Error::GroupMismatch);
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let g = group
                .index_of(&t.elem)
                .ok_or_else(|| Error::Parse(format!("unknown element label {:?}", t.elem)))?;
            terms.push((g, Scalar::from_parts(&t.re, &t.im)?));
        }
        AlgebraElement::from_terms(group, terms)
    }
}
