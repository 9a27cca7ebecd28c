use std::io::{self, Write};

use anyhow::Result;
use serde::Serialize;
use superdom::harness::{BoundEntry, Relation};
use superdom::invariants::IdentityCheck;

pub fn json<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(io::stdout().lock(), "{text}")?;
    Ok(())
}

pub fn csv_rows<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "?".to_string(), |v| v.to_string())
}

pub fn bound_line(e: &BoundEntry) -> String {
    let mark = match e.holds {
        _ if !e.applicable => "  -  ",
        Some(true) if e.tight => "tight",
        Some(true) => " ok  ",
        Some(false) => "FAIL ",
        None => "  ?  ",
    };
    let sides = if e.applicable {
        let op = match e.relation {
            Relation::Le => "≤",
            Relation::Eq => "=",
        };
        format!("{} {op} {}", opt(e.lhs), opt(e.rhs))
    } else {
        "not applicable".to_string()
    };
    format!("{mark} {:<28} {:<16} {}", e.name, sides, e.statement)
}

pub fn identity_line(c: &IdentityCheck) -> String {
    let mark = match (c.applicable, c.holds) {
        (false, _) => "  -  ",
        (true, true) => " ok  ",
        (true, false) => "FAIL ",
    };
    if c.applicable {
        format!("{mark} {:<28} {} = {}", c.name, c.lhs, c.rhs)
    } else {
        format!("{mark} {:<28} not applicable", c.name)
    }
}

/// One CSV row per bound entry.
#[derive(Serialize)]
pub struct BoundRow<'a> {
    pub graph_id: &'a str,
    pub bound: &'a str,
    pub applicable: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub holds: Option<bool>,
    pub slack: Option<i64>,
    pub tight: bool,
}

impl<'a> BoundRow<'a> {
    pub fn new(graph_id: &'a str, e: &'a BoundEntry) -> Self {
        BoundRow {
            graph_id,
            bound: e.name,
            applicable: e.applicable,
            lhs: e.lhs,
            rhs: e.rhs,
            holds: e.holds,
            slack: e.slack,
            tight: e.tight,
        }
    }

    pub fn identity(graph_id: &'a str, c: &'a IdentityCheck) -> Self {
        BoundRow {
            graph_id,
            bound: c.name,
            applicable: c.applicable,
            lhs: Some(c.lhs as i64),
            rhs: Some(c.rhs as i64),
            holds: c.applicable.then_some(c.holds),
            slack: Some(c.rhs as i64 - c.lhs as i64),
            tight: c.applicable && c.lhs == c.rhs,
        }
    }
}

/// `println!` that reports write failures instead of panicking on them.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        writeln!(std::io::stdout().lock(), $($arg)*)?;
    }};
}
