//! The `tables` subcommand: compute rows of one family along one route and
//! export them, with per-row caching.

use descents::counting::{CountTable, Provenance, TableKind};
use descents::{Error, OracleBounds};

use crate::cache;
use crate::output::{self, RowBlock, TableBlock};
use crate::{Format, Kind, Method, TablesArgs, UsageError, EXIT_OK};

pub fn run(args: &TablesArgs) -> Result<u8, UsageError> {
    let ns = resolve_range(args.n, args.n_from, args.n_to)?;
    let kind = table_kind(args.kind);
    let provenance = provenance_for(args.kind, args.method)?;
    let bounds = bounds_for(args.kind, args.oracle_bound);

    let mut table = CountTable::new(kind, provenance)
        .map_err(|e| UsageError(e.to_string()))?;

    let cache_dir = cache::cache_dir();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in &ns {
        let k_max = args.k_max.unwrap_or(default_k_max(args.kind, n));
        let values = if args.no_cache {
            compute_values(&mut table, n, k_max, &bounds)?
        } else {
            let path = cache::row_path(&cache_dir, kind.label(), provenance.label(), n, k_max);
            match cache::load_row(&path, kind.label(), provenance.label(), n, k_max) {
                Some(values) => values,
                None => {
                    let values = compute_values(&mut table, n, k_max, &bounds)?;
                    let block = TableBlock {
                        label: kind.label().to_string(),
                        method: provenance.label().to_string(),
                        rows: vec![RowBlock {
                            n,
                            values: values.clone(),
                        }],
                    };
                    cache::store_row(&path, &block);
                    values
                }
            }
        };
        rows.push(RowBlock { n, values });
    }

    let block = TableBlock {
        label: kind.label().to_string(),
        method: provenance.label().to_string(),
        rows,
    };
    let text = match args.format {
        Format::Csv => output::to_csv(&block),
        Format::Json => output::to_json(&block),
    };
    output::emit(&text, args.out.as_deref())
        .map_err(|e| UsageError(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn compute_values(
    table: &mut CountTable,
    n: usize,
    k_max: usize,
    bounds: &OracleBounds,
) -> Result<Vec<String>, UsageError> {
    let row = table.row(n, k_max, bounds).map_err(|e| match e {
        Error::BoundExceeded { .. } => UsageError(format!(
            "{e}; raise it with --oracle-bound or use --method formula"
        )),
        other => UsageError(other.to_string()),
    })?;
    Ok(row.iter().map(|v| v.to_string()).collect())
}

pub fn resolve_range(
    n: Option<usize>,
    n_from: Option<usize>,
    n_to: Option<usize>,
) -> Result<Vec<usize>, UsageError> {
    match (n, n_from, n_to) {
        (Some(n), None, None) => Ok(vec![n]),
        (None, Some(a), Some(b)) => {
            if a > b {
                Err(UsageError(format!("bad range: --n-from {a} > --n-to {b}")))
            } else {
                Ok((a..=b).collect())
            }
        }
        (None, None, None) => Err(UsageError(
            "specify --n N or --n-from A --n-to B".to_string(),
        )),
        (None, Some(_), None) | (None, None, Some(_)) => Err(UsageError(
            "--n-from and --n-to must be given together".to_string(),
        )),
        _ => Err(UsageError(
            "--n conflicts with --n-from/--n-to".to_string(),
        )),
    }
}

fn table_kind(kind: Kind) -> TableKind {
    match kind {
        Kind::Involutions => TableKind::Involutions,
        Kind::Yamanouchi => TableKind::Yamanouchi,
        Kind::Ssyt => TableKind::Ssyt,
    }
}

fn provenance_for(kind: Kind, method: Method) -> Result<Provenance, UsageError> {
    match (kind, method) {
        (Kind::Ssyt, Method::Formula) => Ok(Provenance::ClosedFormula),
        (Kind::Ssyt, Method::Series) => Ok(Provenance::GeneratingSeries),
        (Kind::Ssyt, Method::Transform) => Ok(Provenance::DescentTransform),
        (Kind::Involutions | Kind::Yamanouchi, Method::Formula) => {
            Ok(Provenance::InverseTransform)
        }
        (_, Method::Brute) => Ok(Provenance::BruteForce),
        (Kind::Involutions | Kind::Yamanouchi, Method::Series) => Err(UsageError(
            "--method series applies only to ssyt tables".to_string(),
        )),
        (Kind::Involutions | Kind::Yamanouchi, Method::Transform) => Err(UsageError(
            "--method transform applies only to ssyt tables".to_string(),
        )),
    }
}

fn default_k_max(kind: Kind, n: usize) -> usize {
    match kind {
        // the full descent row: k = 0..=n-1 (n = 0 still has the k = 0 cell)
        Kind::Involutions | Kind::Yamanouchi => n.max(1) - 1,
        Kind::Ssyt => n,
    }
}

fn bounds_for(kind: Kind, oracle_bound: Option<usize>) -> OracleBounds {
    let mut bounds = OracleBounds::default();
    if let Some(b) = oracle_bound {
        match kind {
            Kind::Involutions => bounds.involution_len = b,
            Kind::Yamanouchi => bounds.yamanouchi_len = b,
            Kind::Ssyt => {
                bounds.ssyt_cells = b;
                bounds.ssyt_symbols = b;
            }
        }
    }
    bounds
}
