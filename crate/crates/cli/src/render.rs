use serde_json::{json, Value};
use stochastic_tensors::diagonal::DiagonalWitness;
use stochastic_tensors::rational::format_rational;
use stochastic_tensors::{BoundsReport, DecompositionCertificate, LatinSquare, Tensor3, VertexSet};

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

pub fn verdict(label: &str, holds: bool, json: bool) -> String {
    if json {
        json_line(json!({ label: holds }))
    } else {
        format!("{label}: {holds}\n")
    }
}

pub fn check(direct: bool, via_vec: bool, json: bool) -> String {
    if json {
        json_line(json!({ "stochastic": direct, "vec_characterization": via_vec }))
    } else {
        format!("stochastic: {direct}\nline-vec characterization: {via_vec}\n")
    }
}

pub fn line_vec(t: &Tensor3, json: bool) -> String {
    if json {
        let values: Vec<String> = t.vec_lines().values().iter().map(format_rational).collect();
        return json_line(json!({ "n": t.n(), "values": values }));
    }
    let mut out = String::new();
    for (mode, (a, b), line) in t.lines() {
        let cells: Vec<String> = line.iter().map(format_rational).collect();
        out.push_str(&format!(
            "{mode} {} {}: {}\n",
            a + 1,
            b + 1,
            cells.join(" ")
        ));
    }
    out
}

fn square_json(sq: &LatinSquare) -> Value {
    json!(sq.rows())
}

fn witness_json(t: &Tensor3, w: &DiagonalWitness) -> Value {
    let entries: Vec<Value> = w
        .selected(t)
        .map(|(i, j, k, v)| json!({ "i": i + 1, "j": j + 1, "k": k + 1, "value": format_rational(v) }))
        .collect();
    json!({ "square": square_json(&w.square), "entries": entries })
}

fn witness_text(t: &Tensor3, w: &DiagonalWitness) -> String {
    let mut out = w.square.to_string();
    for (i, j, k, v) in w.selected(t) {
        out.push_str(&format!(
            "({},{},{}) {}\n",
            i + 1,
            j + 1,
            k + 1,
            format_rational(v)
        ));
    }
    out
}

pub fn diagonals(t: &Tensor3, witnesses: &[DiagonalWitness], all: bool, json: bool) -> String {
    if json {
        let list: Vec<Value> = witnesses.iter().map(|w| witness_json(t, w)).collect();
        return json_line(if all {
            json!({ "count": witnesses.len(), "witnesses": list })
        } else {
            match list.into_iter().next() {
                Some(Value::Object(mut obj)) => {
                    obj.insert("found".into(), json!(true));
                    Value::Object(obj)
                }
                _ => json!({ "found": false }),
            }
        });
    }
    if witnesses.is_empty() {
        return "no positive diagonal\n".into();
    }
    let mut out = String::new();
    if all {
        out.push_str(&format!("positive diagonals: {}\n", witnesses.len()));
    }
    for (idx, w) in witnesses.iter().enumerate() {
        if idx > 0 {
            out.push('\n');
        }
        out.push_str("positive diagonal\n");
        out.push_str(&witness_text(t, w));
    }
    out
}

pub fn certificate(cert: &DecompositionCertificate, json: bool) -> String {
    if json {
        if !cert.feasible {
            return json_line(json!({ "feasible": false }));
        }
        let terms: Vec<Value> = cert
            .terms
            .iter()
            .map(|(sq, w)| json!({ "square": square_json(sq), "weight": format_rational(w) }))
            .collect();
        return json_line(json!({ "feasible": true, "terms": terms }));
    }
    if !cert.feasible {
        return "infeasible\n".into();
    }
    let mut out = String::from("feasible\n");
    for (sq, w) in &cert.terms {
        let rows: Vec<String> = sq
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        out.push_str(&format!("{}  {}\n", format_rational(w), rows.join(" / ")));
    }
    out
}

pub fn vertices(vs: &VertexSet, json: bool) -> String {
    let mut out = String::new();
    if json {
        for v in &vs.vertices {
            out.push_str(&v.to_compact_json());
            out.push('\n');
        }
        out.push_str(&json_line(json!({
            "summary": { "n": vs.n, "count": vs.count(), "permutation_tensors": vs.permutation_count() }
        })));
        return out;
    }
    for (idx, v) in vs.vertices.iter().enumerate() {
        out.push_str(&format!("# vertex {}\n", idx + 1));
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out.push_str(&format!(
        "count: {}\npermutation tensors: {}\n",
        vs.count(),
        vs.permutation_count()
    ));
    out
}

pub fn bounds(reports: &[BoundsReport], json: bool) -> String {
    if json {
        let rows: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "p_n": r.p_n,
                    "independent_lines": r.independent_lines,
                    "lower": format_rational(&r.lower),
                    "lower_floor": r.lower_floor().to_string(),
                    "upper": format_rational(&r.upper),
                    "upper_floor": r.upper_floor().to_string(),
                    "enumerated_count": r.enumerated_count,
                })
            })
            .collect();
        return json_line(Value::Array(rows));
    }
    let header = [
        "n",
        "p(n)",
        "3n^2-3n+1",
        "lower",
        "floor(lower)",
        "upper",
        "floor(upper)",
        "count",
    ];
    let mut table: Vec<Vec<String>> = vec![header.iter().map(ToString::to_string).collect()];
    for r in reports {
        table.push(vec![
            r.n.to_string(),
            r.p_n.to_string(),
            r.independent_lines.to_string(),
            format_rational(&r.lower),
            r.lower_floor().to_string(),
            format_rational(&r.upper),
            r.upper_floor().to_string(),
            r.enumerated_count.map_or("-".into(), |c| c.to_string()),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| table.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn latin_squares(squares: &[LatinSquare], json: bool) -> String {
    if json {
        let list: Vec<Value> = squares.iter().map(square_json).collect();
        return json_line(Value::Array(list));
    }
    squares
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}
