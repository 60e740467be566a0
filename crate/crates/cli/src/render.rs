//! Human and JSON rendering. All computed integers are serialized as decimal
//! strings in JSON so nothing is ever squeezed through a fixed-width number;
//! input values (n, d, r) stay plain JSON numbers.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use fano_core::invariants::{splitting_type, InvariantReport};
use fano_core::{
    fano_class, fano_degree, Classification, FanoBound, FanoClass, FanoProblem, MultiDegree,
    Partition, PsBound,
};

pub fn to_json_string(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("value serialization cannot fail")
}

fn big(value: &BigInt) -> Value {
    Value::String(value.to_string())
}

fn lambda_json(p: &Partition) -> Value {
    Value::Array(p.trimmed().iter().map(|&x| json!(x)).collect())
}

fn degrees_json(d: &MultiDegree) -> Value {
    Value::Array(d.degrees().iter().map(|&x| json!(x)).collect())
}

/// `s[3,1]`-style rendering, trailing zeros trimmed.
pub fn schubert_symbol(p: &Partition) -> String {
    let parts: Vec<String> = p.trimmed().iter().map(u32::to_string).collect();
    format!("s[{}]", parts.join(","))
}

/// The decomposition as a single line: `18 s[3,1] + 27 s[2,2]`, or `0`.
pub fn class_line(class: &FanoClass) -> String {
    if class.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = class
        .iter_display()
        .map(|(lambda, coeff)| format!("{coeff} {}", schubert_symbol(lambda)))
        .collect();
    terms.join(" + ")
}

fn class_terms_json(class: &FanoClass) -> Value {
    Value::Array(
        class
            .iter_display()
            .map(|(lambda, coeff)| {
                let mut term = Map::new();
                term.insert("lambda".to_string(), lambda_json(lambda));
                term.insert("coeff".to_string(), big(coeff));
                Value::Object(term)
            })
            .collect(),
    )
}

pub fn class_json(n: Option<u32>, d: &MultiDegree, r: u32, class: &FanoClass) -> Value {
    json!({
        "input": {
            "n": n,
            "d": degrees_json(d),
            "r": r,
        },
        "class": class_terms_json(class),
    })
}

/// Everything `report` prints, assembled once and rendered twice.
pub struct ProblemReport {
    problem: FanoProblem,
    invariants: InvariantReport,
    class: FanoClass,
    degree: Option<BigInt>,
    notes: Vec<String>,
}

impl ProblemReport {
    pub fn build(problem: &FanoProblem) -> Self {
        let invariants = InvariantReport::for_problem(problem);
        let class = fano_class(problem);
        let degree = fano_degree(problem).ok();
        let splitting = splitting_type(problem).ok();

        let mut notes = Vec::new();
        if invariants.delta.is_negative() {
            notes.push(
                "delta < 0: the scheme is empty for general X and no degree is defined"
                    .to_string(),
            );
            if !class.is_zero() {
                notes.push(
                    "the class listed is the top Chern class of the defining bundle, not \
                     the class of a scheme of expected dimension"
                        .to_string(),
                );
            }
        }
        if invariants.classification == Classification::QuadricTwoComponents {
            notes.push(format!(
                "middle-dimensional planes on a smooth quadric: two connected components, \
                 each smooth of dimension {}",
                invariants.delta
            ));
        }
        if invariants.predicates.projectively_normal.holds {
            notes.push(format!(
                "projectively normal: every equation of the scheme in the Plucker embedding \
                 has degree at least {}",
                invariants.predicates.min_equation_degree
            ));
        }
        if let Some((a, b)) = &splitting {
            notes.push(format!(
                "normal bundle of a maximal linear family restricted to a general line \
                 splits as O^{a} + O(1)^{b}"
            ));
        }

        ProblemReport {
            problem: problem.clone(),
            invariants,
            class,
            degree,
            notes,
        }
    }

    pub fn json(&self) -> Value {
        let p = &self.problem;
        let inv = &self.invariants;

        let mut predicates = Map::new();
        for (name, predicate) in inv.predicates.entries() {
            predicates.insert(
                name.to_string(),
                json!({
                    "holds": predicate.holds,
                    "bound": big(&predicate.bound),
                }),
            );
        }

        json!({
            "input": {
                "n": p.n(),
                "d": degrees_json(p.d()),
                "r": p.r(),
            },
            "invariants": {
                "delta": big(&inv.delta),
                "delta_minus": big(&inv.delta_minus),
                "classification": inv.classification.as_str(),
                "canonical_twist": big(&inv.canonical_twist),
                "fano_index": big(&inv.fano_index),
                "is_fano": inv.is_fano,
            },
            "predicates": Value::Object(predicates),
            "class": class_terms_json(&self.class),
            "degree": match &self.degree {
                Some(deg) => big(deg),
                None => Value::Null,
            },
            "notes": self.notes,
        })
    }

    pub fn human(&self) -> String {
        let p = &self.problem;
        let inv = &self.invariants;
        let mut out = String::new();

        let r = p.r();
        let n = p.n();
        let _ = writeln!(
            out,
            "F_{r}(X) in G({r}, P^{n}), X in P^{n} of multidegree {}",
            p.d()
        );
        let _ = writeln!(out);
        let grass_dim = u64::from(r + 1) * u64::from(n - r);
        let _ = writeln!(out, "  {:<28}{}", "grassmannian dimension", grass_dim);
        let _ = writeln!(out, "  {:<28}{}", "codimension", p.codimension());
        let _ = writeln!(out, "  {:<28}{}", "delta (expected dimension)", inv.delta);
        let _ = writeln!(out, "  {:<28}{}", "delta_minus", inv.delta_minus);
        let _ = writeln!(
            out,
            "  {:<28}{}",
            "classification",
            inv.classification.describe()
        );
        let _ = writeln!(out, "  {:<28}{}", "canonical twist", inv.canonical_twist);
        let _ = writeln!(out, "  {:<28}{}", "fano index", inv.fano_index);
        let _ = writeln!(
            out,
            "  {:<28}{}",
            "fano variety",
            if inv.is_fano { "yes" } else { "no" }
        );

        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "predicates (sufficient bounds only; `no` means the bound is not satisfied)"
        );
        for (name, predicate) in inv.predicates.entries() {
            let quantity = if name == "picard_rank_one" {
                "delta_minus"
            } else {
                "n"
            };
            let _ = writeln!(
                out,
                "  {:<28}{:<5}bound {quantity} >= {}",
                name,
                if predicate.holds { "yes" } else { "no" },
                predicate.bound
            );
        }

        let _ = writeln!(out);
        let _ = writeln!(out, "class in G({r}, P^{n})");
        let _ = writeln!(out, "  {}", class_line(&self.class));

        let _ = writeln!(out);
        match &self.degree {
            Some(deg) => {
                let _ = writeln!(out, "degree under the Plucker embedding: {deg}");
            }
            None => {
                let _ = writeln!(
                    out,
                    "degree under the Plucker embedding: not computed (delta < 0)"
                );
            }
        }

        if !self.notes.is_empty() {
            let _ = writeln!(out);
            for note in &self.notes {
                let _ = writeln!(out, "note: {note}");
            }
        }
        out
    }
}

fn repeated_human(repeated: &[(u32, BigInt)]) -> String {
    let total: BigInt = repeated.iter().map(|(_, c)| c).sum();
    if total <= BigInt::from(64) {
        let mut entries = Vec::new();
        for (degree, count) in repeated {
            let mut left = count.clone();
            while left.is_positive() {
                entries.push(degree.to_string());
                left -= 1;
            }
        }
        format!("({})", entries.join(","))
    } else {
        let entries: Vec<String> = repeated
            .iter()
            .map(|(degree, count)| format!("{degree}^{count}"))
            .collect();
        format!("({})", entries.join(","))
    }
}

pub fn unirat_human(bound: &FanoBound, base: &PsBound) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "unirationality bound for schemes of {}-planes, multidegree {}",
        bound.r, bound.input
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "  {:<24}r = {}, n = {}",
        "base pair of the input", base.r_of_d, base.n_of_d
    );
    let _ = writeln!(
        out,
        "  {:<24}{}",
        "D (repeated degrees)",
        repeated_human(&bound.repeated)
    );
    let _ = writeln!(out, "  {:<24}{}", "r(D)", bound.r_of_big_d);
    let _ = writeln!(out, "  {:<24}{}", "r1", bound.r1);
    let _ = writeln!(out, "  {:<24}n >= {}", "bound", bound.bound);
    for (degrees, r) in &bound.overrides_used {
        let list: Vec<String> = degrees.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "  override used: r({}) = {r}", list.join(","));
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "for n >= {}, the scheme of {}-planes on a generic complete intersection of \
         multidegree {} in P^n is unirational",
        bound.bound, bound.r, bound.input
    );
    out
}

pub fn unirat_json(bound: &FanoBound, base: &PsBound) -> Value {
    let repeated: Vec<Value> = bound
        .repeated
        .iter()
        .map(|(degree, count)| {
            json!({
                "degree": degree,
                "count": count.to_string(),
            })
        })
        .collect();
    let overrides_used: Vec<Value> = bound
        .overrides_used
        .iter()
        .map(|(degrees, r)| {
            json!({
                "d": degrees,
                "r": r.to_string(),
            })
        })
        .collect();
    json!({
        "input": {
            "d": degrees_json(&bound.input),
            "r": bound.r,
        },
        "base_pair": {
            "r_of_d": base.r_of_d.to_string(),
            "n_of_d": base.n_of_d.to_string(),
        },
        "D": repeated,
        "r_D": bound.r_of_big_d.to_string(),
        "r1": bound.r1.to_string(),
        "bound": bound.bound.to_string(),
        "overrides_used": overrides_used,
    })
}
