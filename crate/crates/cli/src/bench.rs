use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::Write;
use std::time::Instant;

use num_traits::Signed;
use polybell_core::exact::Rational;
use polybell_core::pbell::pbell_column;
use polybell_core::TriangleCache;

use crate::{BenchArgs, CmdResult, Failure, EXIT_OK};

fn bits(r: &Rational) -> u64 {
    r.numer().abs().bits().max(r.denom().bits())
}

/// CSV rows `backend,run,n_max,p_min,p_max,micros,max_bits,values`, where
/// `values` is a digest of the computed table and must match across
/// backends. Each run starts from an empty cache.
pub(crate) fn cmd_bench(a: &BenchArgs, out: &mut Vec<u8>) -> CmdResult {
    if a.backends.is_empty() || a.repeat == 0 {
        return Err(Failure::usage(
            "need at least one backend and --repeat >= 1",
        ));
    }
    let (p_lo, p_hi) = match (a.p, a.pmax) {
        (Some(p), _) => (p, p),
        (None, Some(pm)) => (0, pm),
        (None, None) => (0, 0),
    };
    writeln!(out, "backend,run,n_max,p_min,p_max,micros,max_bits,values")?;
    let mut reference: Option<(String, Vec<Vec<Rational>>)> = None;
    for &backend in &a.backends {
        for run in 0..a.repeat {
            let cache = TriangleCache::new();
            let start = Instant::now();
            let table: Vec<Vec<Rational>> = (p_lo..=p_hi)
                .map(|p| pbell_column(&cache, a.nmax, p, backend))
                .collect();
            let micros = start.elapsed().as_micros();
            let max_bits = table.iter().flatten().map(bits).max().unwrap_or(0);
            let mut h = DefaultHasher::new();
            table.hash(&mut h);
            let digest = format!("{:016x}", h.finish());
            writeln!(
                out,
                "{backend},{run},{},{p_lo},{p_hi},{micros},{max_bits},{digest}",
                a.nmax
            )?;
            match &reference {
                None => reference = Some((backend.to_string(), table)),
                Some((name, expected)) if *expected != table => {
                    let (p, n) = expected
                        .iter()
                        .zip(&table)
                        .enumerate()
                        .find_map(|(i, (e, t))| {
                            e.iter()
                                .zip(t)
                                .position(|(x, y)| x != y)
                                .map(|n| (p_lo + i, n))
                        })
                        .expect("tables differ");
                    return Err(Failure::check(format!(
                        "{backend} disagrees with {name} at n={n} p={p}: {} vs {}",
                        table[p - p_lo][n],
                        expected[p - p_lo][n]
                    )));
                }
                Some(_) => {}
            }
        }
    }
    Ok(EXIT_OK)
}
