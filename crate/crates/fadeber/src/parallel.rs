//! Thread-parallel drivers. Work is split into the same blocks the serial
//! estimators use and merged in block order, so results are bit-identical
//! to the serial versions for any worker count.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use fadeber_core::fading::comparison_row;
use fadeber_core::montecarlo::{
    bitlevel_block, check_bitlevel, check_semi_analytic, reduce_blocks, semi_analytic_block,
};
use fadeber_core::{ComparisonRow, Error, GaussianFit, McConfig, McEstimate, ModulationScheme};

pub fn default_workers() -> usize {
    thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

/// Evaluates `task(0..count)` on up to `workers` threads, returning results in index order.
pub fn map_indexed<T, F>(count: usize, workers: usize, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = workers.clamp(1, count.max(1));
    if workers == 1 {
        return (0..count).map(task).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<T>> = (0..count).map(|_| None).collect();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= count {
                            break;
                        }
                        done.push((i, task(i)));
                    }
                    done
                })
            })
            .collect();
        for h in handles {
            for (i, v) in h.join().expect("worker panicked") {
                slots[i] = Some(v);
            }
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("every index computed"))
        .collect()
}

pub fn semi_analytic_ber<F>(
    ber_fn: F,
    ebn0_linear: f64,
    cfg: &McConfig,
    workers: usize,
) -> Result<McEstimate, Error>
where
    F: Fn(f64) -> f64 + Sync,
{
    check_semi_analytic(ebn0_linear, cfg)?;
    let blocks = map_indexed(cfg.block_count(), workers, |b| {
        semi_analytic_block(&ber_fn, ebn0_linear, cfg, b)
    });
    Ok(reduce_blocks(blocks))
}

pub fn bitlevel_qpsk_ber(
    ebn0_linear: f64,
    cfg: &McConfig,
    workers: usize,
) -> Result<McEstimate, Error> {
    check_bitlevel(ebn0_linear, cfg)?;
    let blocks = map_indexed(cfg.block_count(), workers, |b| {
        bitlevel_block(ebn0_linear, cfg, b)
    });
    Ok(reduce_blocks(blocks))
}

pub fn compare_curves(
    s: ModulationScheme,
    fit: &GaussianFit,
    ebn0_db: &[f64],
    workers: usize,
) -> Result<Vec<ComparisonRow>, Error> {
    if ebn0_db.is_empty() {
        return Err(Error::InvalidCurve("empty Eb/N0 grid"));
    }
    map_indexed(ebn0_db.len(), workers, |i| {
        comparison_row(s, fit, ebn0_db[i])
    })
    .into_iter()
    .collect()
}
