//! JSON documents for schemes, parameters and polynomials.
//!
//! Rationals travel as decimal-free strings (`"5/2"`, `"-3"`); bivariate
//! Laurent polynomials as lists of `[i, j, "coefficient"]` exponent triples
//! in lexicographic order; rational functions as `{"num": [...], "den":
//! [...]}`. A scheme document carries the kind, the HK data (`mu`, `nu`,
//! `h`) or the custom deformation function `R` with an optional `phi`
//! triple, and optionally the parameters `p` and `q`.

use anyhow::{anyhow, bail, Context};
use serde::{Deserialize, Serialize};

use rpq_core::{
    parse_rational, term_triples, BivariateLaurentPoly, BivariateRationalFunction, Params,
    PhiTriple, Rational, Scheme,
};

/// A Laurent polynomial as `[i, j, "a/b"]` triples.
pub type PolyDoc = Vec<(i32, i32, String)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalFunctionDoc {
    pub num: PolyDoc,
    pub den: PolyDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<RationalFunctionDoc>,
    #[serde(default, rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<RationalFunctionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<RationalFunctionDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

fn poly_to_doc(poly: &BivariateLaurentPoly) -> PolyDoc {
    term_triples(poly)
        .into_iter()
        .map(|(i, j, c)| (i, j, rational_to_string(&c)))
        .collect()
}

fn poly_from_doc(doc: &PolyDoc) -> anyhow::Result<BivariateLaurentPoly> {
    let mut terms = Vec::with_capacity(doc.len());
    for (i, j, c) in doc {
        let coeff = parse_rational(c)
            .map_err(|e| anyhow!("bad coefficient {c:?} at exponent ({i}, {j}): {e}"))?;
        terms.push((*i, *j, coeff));
    }
    Ok(BivariateLaurentPoly::from_terms(terms))
}

fn rf_to_doc(f: &BivariateRationalFunction) -> RationalFunctionDoc {
    RationalFunctionDoc {
        num: poly_to_doc(f.num()),
        den: poly_to_doc(f.den()),
    }
}

fn rf_from_doc(doc: &RationalFunctionDoc) -> anyhow::Result<BivariateRationalFunction> {
    BivariateRationalFunction::new(poly_from_doc(&doc.num)?, poly_from_doc(&doc.den)?)
        .map_err(|e| anyhow!("bad rational function: {e}"))
}

/// Serialize a scheme (plus optional parameters) to a document.
pub fn scheme_to_doc(scheme: &Scheme, params: Option<&Params>) -> SchemeDoc {
    let mut doc = SchemeDoc {
        kind: match scheme {
            Scheme::Js => "JS",
            Scheme::Cj => "CJ",
            Scheme::Quesne => "Quesne",
            Scheme::Hk { .. } => "HK",
            Scheme::Custom { .. } => "CustomR",
        }
        .to_string(),
        mu: None,
        nu: None,
        h: None,
        r: None,
        phi: None,
        p: params.map(|par| rational_to_string(par.p())),
        q: params.map(|par| rational_to_string(par.q())),
    };
    match scheme {
        Scheme::Hk { mu, nu, h } => {
            doc.mu = Some(*mu);
            doc.nu = Some(*nu);
            doc.h = Some(rf_to_doc(h));
        }
        Scheme::Custom { r, phi } => {
            doc.r = Some(rf_to_doc(r));
            doc.phi = phi
                .as_ref()
                .map(|t| vec![rf_to_doc(&t.phi1), rf_to_doc(&t.phi2), rf_to_doc(&t.phi3)]);
        }
        _ => {}
    }
    doc
}

/// Rebuild the scheme (running the construction-time validations) and the
/// optional parameter pair from a document.
pub fn scheme_from_doc(doc: &SchemeDoc) -> anyhow::Result<(Scheme, Option<Params>)> {
    let scheme = match doc.kind.to_ascii_lowercase().as_str() {
        "js" => Scheme::Js,
        "cj" => Scheme::Cj,
        "quesne" => Scheme::Quesne,
        "hk" => {
            let mu = doc.mu.ok_or_else(|| anyhow!("HK scheme needs \"mu\""))?;
            let nu = doc.nu.ok_or_else(|| anyhow!("HK scheme needs \"nu\""))?;
            let h = match &doc.h {
                Some(h) => rf_from_doc(h)?,
                None => BivariateRationalFunction::one(),
            };
            Scheme::hk(mu, nu, h).map_err(|e| anyhow!("invalid HK scheme: {e}"))?
        }
        "customr" | "custom" => {
            let r = doc
                .r
                .as_ref()
                .ok_or_else(|| anyhow!("custom scheme needs \"R\""))?;
            let phi = match &doc.phi {
                None => None,
                Some(list) => {
                    if list.len() != 3 {
                        bail!("\"phi\" must contain exactly 3 rational functions");
                    }
                    Some(PhiTriple {
                        phi1: rf_from_doc(&list[0])?,
                        phi2: rf_from_doc(&list[1])?,
                        phi3: rf_from_doc(&list[2])?,
                    })
                }
            };
            Scheme::custom(rf_from_doc(r)?, phi).map_err(|e| anyhow!("invalid scheme: {e}"))?
        }
        other => bail!("unknown scheme kind {other:?}"),
    };
    let params = match (&doc.p, &doc.q) {
        (Some(p), Some(q)) => Some(
            Params::from_strs(p, q).map_err(|e| anyhow!("bad parameters in scheme file: {e}"))?,
        ),
        (None, None) => None,
        _ => bail!("scheme file must give both \"p\" and \"q\" or neither"),
    };
    Ok((scheme, params))
}

/// Load a scheme document from a JSON file.
pub fn load_scheme_file(path: &std::path::Path) -> anyhow::Result<(Scheme, Option<Params>)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read scheme file {}", path.display()))?;
    let doc: SchemeDoc = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse scheme file {}", path.display()))?;
    scheme_from_doc(&doc)
}

/// Load verification sample points: a JSON list of `["p", "q"]` pairs.
pub fn load_sample_points(path: &std::path::Path) -> anyhow::Result<Vec<Params>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read sample-points file {}", path.display()))?;
    let pairs: Vec<(String, String)> = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse sample-points file {}", path.display()))?;
    pairs
        .iter()
        .map(|(p, q)| {
            Params::from_strs(p, q).map_err(|e| anyhow!("bad sample point ({p}, {q}): {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rpq_core::rat_int;

    #[test]
    fn builtin_documents_round_trip() {
        let params = Params::from_strs("2", "1/3").unwrap();
        for scheme in [
            Scheme::Js,
            Scheme::Cj,
            Scheme::Quesne,
            Scheme::hk_unit(1, 2),
        ] {
            let doc = scheme_to_doc(&scheme, Some(&params));
            let json = serde_json::to_string(&doc).unwrap();
            let parsed: SchemeDoc = serde_json::from_str(&json).unwrap();
            let (back, par) = scheme_from_doc(&parsed).unwrap();
            assert_eq!(back, scheme);
            assert_eq!(par.as_ref(), Some(&params));
        }
    }

    #[test]
    fn custom_document_round_trips_with_phi() {
        let r = Scheme::Js.r_function(&Params::from_strs("3", "2").unwrap()).unwrap();
        let scheme = Scheme::custom(r, Some(Scheme::Js.phi_triple().unwrap())).unwrap();
        let doc = scheme_to_doc(&scheme, None);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let (back, none) = scheme_from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, scheme);
        assert!(none.is_none());
    }

    #[test]
    fn hk_document_example_shape() {
        // {"kind": "HK", "mu": 1, "nu": 2, "h": {...}, "p": "2", "q": "1/3"}
        let text = r#"{
            "kind": "HK", "mu": 1, "nu": 2,
            "h": {"num": [[0, 0, "1"]], "den": [[0, 0, "1"]]},
            "p": "2/1", "q": "1/3"
        }"#;
        let (scheme, params) = scheme_from_doc(&serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(scheme, Scheme::hk_unit(1, 2));
        let params = params.unwrap();
        assert_eq!(params.p(), &rat_int(2));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let missing_mu = r#"{"kind": "HK", "nu": 2}"#;
        assert!(scheme_from_doc(&serde_json::from_str(missing_mu).unwrap()).is_err());
        let bad_kind = r#"{"kind": "XYZ"}"#;
        assert!(scheme_from_doc(&serde_json::from_str(bad_kind).unwrap()).is_err());
        // R(1,1) != 0 must be caught at construction.
        let bad_r = r#"{"kind": "CustomR", "R": {"num": [[0,0,"1"]], "den": [[0,0,"1"]]}}"#;
        assert!(scheme_from_doc(&serde_json::from_str(bad_r).unwrap()).is_err());
    }
}
