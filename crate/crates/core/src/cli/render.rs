use std::str::FromStr;

use rug::{Integer, Rational};
use serde_json::{json, Number, Value};

use crate::cf::PeriodicCF;
use crate::exact::QuadraticSurd;

/// An exact JSON number of any size.
pub(super) fn int_json(n: &Integer) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub(super) fn surd_json(x: &QuadraticSurd) -> Value {
    json!({
        "text": x.to_string(),
        "a": int_json(x.a()),
        "b": int_json(x.b()),
        "c": int_json(x.c()),
        "delta": int_json(x.delta()),
    })
}

pub(super) fn cf_json(cf: &PeriodicCF) -> Value {
    json!({
        "text": cf.to_string(),
        "preperiod": cf.preperiod().iter().map(int_json).collect::<Vec<_>>(),
        "period": cf.period().iter().map(int_json).collect::<Vec<_>>(),
        "N": cf.n(),
        "k": cf.k(),
    })
}

/// `n` for integers, `n/d` otherwise.
pub(super) fn rational_short(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        r.to_string()
    }
}

/// Left-aligned columns separated by two spaces.
pub(super) fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

pub(super) struct Csv {
    writer: csv::Writer<Vec<u8>>,
}

impl Csv {
    pub(super) fn new<S: AsRef<[u8]>>(header: &[S]) -> Self {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        Csv { writer }
    }

    pub(super) fn row<S: AsRef<[u8]>>(&mut self, cells: &[S]) {
        self.writer.write_record(cells).expect("in-memory write");
    }

    pub(super) fn finish(self) -> String {
        let bytes = self.writer.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("utf-8 cells")
    }
}
