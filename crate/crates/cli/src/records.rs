//! Output records and their text, JSON and CSV renderings.

use std::io::{self, Write};

use equifreq::{
    APParams, BFParams, CascadeLevels, CirclePoint, NoFourTermReport, Observables, SquareIdentity,
    SquareTriple, Transition, TransitionPair,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub enum Record {
    Pair(TransitionPair),
    Identity(SquareIdentity),
    Params(BFParams),
    Verify {
        equal: bool,
        left: BigRational,
        right: BigRational,
    },
    Triple(SquareTriple),
    Circle(CirclePoint),
    Cascade(CascadeLevels),
    ApParams(APParams),
    Observe {
        transition: Transition,
        obs: Observables,
    },
    NoFourTerm(NoFourTermReport),
}

/// JSON number carrying the exact decimal digits of `x`.
fn int(x: &BigInt) -> Value {
    Value::Number(
        x.to_string()
            .parse()
            .expect("integer literal is a JSON number"),
    )
}

fn decimal(s: &str) -> Value {
    Value::Number(s.parse().expect("formatted float is a JSON number"))
}

fn object(fields: Vec<(&str, Value)>) -> Value {
    Value::Object(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

impl Record {
    pub fn kind(&self) -> &'static str {
        match self {
            Record::Pair(_) => "pair",
            Record::Identity(_) => "identity",
            Record::Params(_) => "params",
            Record::Verify { .. } => "verify",
            Record::Triple(_) => "triple",
            Record::Circle(_) => "circle",
            Record::Cascade(_) => "cascade",
            Record::ApParams(_) => "ap_params",
            Record::Observe { .. } => "observe",
            Record::NoFourTerm(_) => "no_four_term",
        }
    }

    pub fn text(&self) -> String {
        match self {
            Record::Pair(p) => p.to_string(),
            Record::Identity(id) => id.to_string(),
            Record::Params(p) => format!("params {p}"),
            Record::Verify {
                equal: true, left, ..
            } => format!("equal (delta = {left})"),
            Record::Verify { left, right, .. } => format!("not equal ({left} != {right})"),
            Record::Triple(t) => format!(
                "triple {t}: {a}^2+{c}^2=2*{b}^2",
                a = t.a(),
                b = t.b(),
                c = t.c()
            ),
            Record::Circle(pt) => format!("circle {pt}"),
            Record::Cascade(c) => format!(
                "cascade {c} (delta = {}){}",
                c.delta(),
                if c.is_primitive() { " primitive" } else { "" }
            ),
            Record::ApParams(p) => format!("params m={} n={}", p.m(), p.n()),
            Record::Observe { transition, obs } => format!(
                "{transition} delta = {} wavelength_m = {} frequency_hz = {}",
                obs.delta,
                obs.wavelength_string(),
                obs.frequency_string()
            ),
            Record::NoFourTerm(r) => format!(
                "no four-level chain with levels <= {} ({} three-level cascades checked)",
                r.max_level, r.cascades_checked
            ),
        }
    }

    /// `(column, value)` pairs shared by the JSON and CSV renderings.
    fn fields(&self) -> Vec<(&'static str, Value)> {
        let frac = |d: &BigRational| [int(d.numer()), int(d.denom())];
        match self {
            Record::Pair(p) => {
                let [dn, dd] = frac(p.delta());
                vec![
                    ("n1", int(p.t1().lower())),
                    ("N1", int(p.t1().upper())),
                    ("n2", int(p.t2().lower())),
                    ("N2", int(p.t2().upper())),
                    ("delta_num", dn),
                    ("delta_den", dd),
                ]
            }
            Record::Identity(id) => vec![
                ("side1", Value::Array(id.side1().iter().map(int).collect())),
                ("side2", Value::Array(id.side2().iter().map(int).collect())),
                ("norm", int(&id.norm())),
            ],
            Record::Params(p) => vec![
                ("r", int(&p.r)),
                ("s", int(&p.s)),
                ("u", int(&p.u)),
                ("v", int(&p.v)),
            ],
            Record::Verify { equal, left, right } => {
                let [ln, ld] = frac(left);
                let [rn, rd] = frac(right);
                vec![
                    ("equal", Value::Bool(*equal)),
                    ("delta1_num", ln),
                    ("delta1_den", ld),
                    ("delta2_num", rn),
                    ("delta2_den", rd),
                ]
            }
            Record::Triple(t) => vec![("A", int(t.a())), ("B", int(t.b())), ("C", int(t.c()))],
            Record::Circle(pt) => vec![("p", int(pt.p())), ("q", int(pt.q())), ("r", int(pt.r()))],
            Record::Cascade(c) => {
                let [x0, x1, x2] = c.levels();
                let [dn, dd] = frac(&c.delta());
                vec![
                    ("x0", int(x0)),
                    ("x1", int(x1)),
                    ("x2", int(x2)),
                    ("delta_num", dn),
                    ("delta_den", dd),
                    ("primitive", Value::Bool(c.is_primitive())),
                ]
            }
            Record::ApParams(p) => vec![("m", int(p.m())), ("n", int(p.n()))],
            Record::Observe { transition, obs } => {
                let [dn, dd] = frac(&obs.delta);
                vec![
                    ("N", int(transition.upper())),
                    ("n", int(transition.lower())),
                    ("delta_num", dn),
                    ("delta_den", dd),
                    ("wavelength_m", decimal(&obs.wavelength_string())),
                    ("frequency_hz", decimal(&obs.frequency_string())),
                ]
            }
            Record::NoFourTerm(r) => vec![
                ("max_level", json!(r.max_level)),
                ("cascades_checked", json!(r.cascades_checked)),
                ("chains_found", json!(0)),
            ],
        }
    }

    pub fn json(&self) -> Value {
        let mut fields = vec![("record", Value::String(self.kind().to_string()))];
        fields.extend(self.fields());
        object(fields)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        self.fields().into_iter().map(|(k, _)| k).collect()
    }

    fn csv_row(&self) -> Vec<String> {
        self.fields()
            .into_iter()
            .map(|(_, v)| match v {
                // Identity sides become "a b" so the column count stays fixed.
                Value::Array(xs) => xs
                    .iter()
                    .map(Value::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            })
            .collect()
    }
}

/// Writes records in the chosen format. Text and JSON emit one line per
/// record; CSV emits one header-plus-rows block per run of same-kind
/// records, blocks separated by a blank line.
pub fn write_records(out: &mut dyn Write, format: Format, records: &[Record]) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.text())?;
            }
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.json())?;
            }
        }
        Format::Csv => {
            let mut first = true;
            for block in records.chunk_by(|a, b| a.kind() == b.kind()) {
                if !first {
                    writeln!(out)?;
                }
                first = false;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(block[0].csv_header())
                    .map_err(io::Error::other)?;
                for r in block {
                    w.write_record(r.csv_row()).map_err(io::Error::other)?;
                }
                let bytes = w
                    .into_inner()
                    .map_err(|e| io::Error::other(e.to_string()))?;
                out.write_all(&bytes)?;
            }
        }
    }
    Ok(())
}
