//! JSON renderings of library values.

use qshuffle::poly::MonomialText;
use qshuffle::{Binomial, MultiLaurent, RatFun, ShuffleAlgebra, ShuffleElement};
use serde_json::{json, Value};

/// Terms in canonical order: `[{"coeff": "q^2 + 1", "monomial": "z[1,1]^2 z[2,1]^-1"}, ...]`.
pub fn poly(p: &MultiLaurent) -> Value {
    Value::Array(
        p.canonical_terms()
            .map(|(mono, c)| json!({ "coeff": c.to_string(), "monomial": MonomialText(&mono).to_string() }))
            .collect(),
    )
}

/// `a z_i - b z_j` with multiplicity.
pub fn binomial(b: &Binomial, mult: u32) -> Value {
    json!({
        "i": b.i.to_string(),
        "j": b.j.to_string(),
        "a": b.a.to_string(),
        "b": b.b.to_string(),
        "mult": mult,
    })
}

pub fn ratfun(r: &RatFun) -> Value {
    let den: Vec<Value> = r
        .denom()
        .iter()
        .map(|(f, &m)| binomial(&f.to_binomial(), m))
        .collect();
    json!({ "num": poly(r.numer()), "den": den })
}

/// `{degree, numerator, denominator}`.
pub fn element(alg: &ShuffleAlgebra, f: &ShuffleElement) -> Value {
    let den: Vec<Value> = alg
        .canonical_denominator(f.degree())
        .iter()
        .map(|b| binomial(b, 1))
        .collect();
    json!({
        "degree": f.degree().0,
        "numerator": poly(f.numerator()),
        "denominator": den,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use qshuffle::{CartanData, Orientation, Series};

    #[test]
    fn square_of_generator() {
        let alg = ShuffleAlgebra::new(
            CartanData::builtin(Series::A, 1).unwrap(),
            Orientation::ProductCompatible,
        );
        let g = alg.generator(1, 0).unwrap();
        let v = element(&alg, &alg.mul(&g, &g).unwrap());
        assert_eq!(
            v,
            json!({
                "degree": [2],
                "numerator": [{"coeff": "q^2 + 1", "monomial": "1"}],
                "denominator": [{"i": "z[1,1]", "j": "z[1,2]", "a": "1", "b": "q^2", "mult": 1}],
            })
        );
    }
}
