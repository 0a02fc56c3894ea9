pub mod formats;
pub mod reproduce;
pub mod solver;

use gml_core::matroid::Matroid;
use gml_core::sibo::{find_si_ordering, is_sibo, SiboVerdict};

use std::sync::atomic::{AtomicUsize, Ordering};

/// Worker-split version of the full ordered-pair scan. Pairs are indexed
/// i * nb + j in stored basis order and the reported failure is the global
/// minimum index, so the verdict never depends on the worker count.
pub fn is_sibo_parallel(m: &Matroid, workers: usize) -> SiboVerdict {
    let nb = m.bases().len();
    let total = nb * nb;
    if workers <= 1 || total < 4 * workers {
        return is_sibo(m);
    }
    let best = AtomicUsize::new(usize::MAX);
    let chunk = total.div_ceil(workers);
    std::thread::scope(|s| {
        for w in 0..workers {
            let best = &best;
            let lo = w * chunk;
            let hi = total.min(lo + chunk);
            s.spawn(move || {
                for idx in lo..hi {
                    if best.load(Ordering::Relaxed) <= idx {
                        return;
                    }
                    let a = m.bases()[idx / nb];
                    let b = m.bases()[idx % nb];
                    let found = find_si_ordering(m, a, b)
                        .expect("scan only visits stored bases");
                    if found.is_none() {
                        best.fetch_min(idx, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    match best.load(Ordering::Relaxed) {
        usize::MAX => SiboVerdict::Pass,
        idx => SiboVerdict::Fail { a: m.bases()[idx / nb], b: m.bases()[idx % nb] },
    }
}
