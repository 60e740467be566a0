//! The two built-in degree tables. Rows are computed independently, in
//! parallel up to the worker cap (`FANO_WORKERS`, default: available
//! parallelism); output order is fixed regardless.

use std::fmt::Write as _;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::CliError;
use fano_core::{fano_degree, FanoProblem, MultiDegree};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Lines,
    Planes,
}

/// (r, d, n) triples, in output order.
const LINES: [(u32, u32, u32); 16] = [
    (1, 3, 3),
    (1, 3, 4),
    (1, 3, 5),
    (1, 4, 4),
    (1, 4, 5),
    (1, 4, 6),
    (1, 4, 7),
    (1, 5, 4),
    (1, 5, 5),
    (1, 5, 6),
    (1, 5, 7),
    (1, 6, 5),
    (1, 6, 6),
    (1, 7, 5),
    (1, 7, 6),
    (1, 9, 6),
];

const PLANES: [(u32, u32, u32); 8] = [
    (2, 3, 6),
    (2, 3, 7),
    (2, 3, 8),
    (2, 4, 7),
    (2, 5, 9),
    (3, 3, 8),
    (3, 3, 9),
    (4, 3, 11),
];

pub struct Row {
    pub r: u32,
    pub d: u32,
    pub n: u32,
    pub dim: BigInt,
    pub deg: BigInt,
}

fn compute_row(&(r, d, n): &(u32, u32, u32)) -> Result<Row, CliError> {
    let problem = FanoProblem::new(n, MultiDegree::single(d)?, r)?;
    Ok(Row {
        r,
        d,
        n,
        dim: problem.delta(),
        deg: fano_degree(&problem)?,
    })
}

fn worker_count(rows: usize) -> usize {
    let configured = std::env::var("FANO_WORKERS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&w| w >= 1);
    configured
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .min(rows)
}

pub fn compute(which: Which) -> Result<Vec<Row>, CliError> {
    let specs: &[(u32, u32, u32)] = match which {
        Which::Lines => &LINES,
        Which::Planes => &PLANES,
    };
    let workers = worker_count(specs.len());
    if workers <= 1 {
        return specs.iter().map(compute_row).collect();
    }

    let slots: Vec<Mutex<Option<Result<Row, CliError>>>> =
        specs.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for worker in 0..workers {
            let slots = &slots;
            scope.spawn(move || {
                for index in (worker..specs.len()).step_by(workers) {
                    let row = compute_row(&specs[index]);
                    *slots[index].lock().unwrap() = Some(row);
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("every row computed"))
        .collect()
}

pub fn human(which: Which, rows: &[Row]) -> String {
    let mut out = String::new();
    match which {
        Which::Lines => {
            let _ = writeln!(out, "{:>2}  {:>2}  {:>5}  {:>11}", "d", "n", "dim F", "deg F");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:>2}  {:>2}  {:>5}  {:>11}",
                    row.d, row.n, row.dim, row.deg
                );
            }
        }
        Which::Planes => {
            let _ = writeln!(
                out,
                "{:>2}  {:>2}  {:>2}  {:>5}  {:>12}",
                "r", "d", "n", "dim F", "deg F"
            );
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:>2}  {:>2}  {:>2}  {:>5}  {:>12}",
                    row.r, row.d, row.n, row.dim, row.deg
                );
            }
        }
    }
    out
}

pub fn json(which: Which, rows: &[Row]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "r": row.r,
                "d": row.d,
                "n": row.n,
                "dim": row.dim.to_string(),
                "deg": row.deg.to_string(),
            })
        })
        .collect();
    json!({
        "table": match which {
            Which::Lines => "lines",
            Which::Planes => "planes",
        },
        "rows": rows,
    })
}
