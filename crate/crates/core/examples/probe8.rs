use nilsym::cartan::CartanData;
use nilsym::current::*;
use std::time::Instant;

fn main() {
    let cd = CartanData::sl(3);
    let t0 = Instant::now();
    let report = verify_current_relations(&cd, -3, 3, 3, 5, 7).unwrap();
    eprintln!("sl_3 total: {:?}, pass={}", t0.elapsed(), report.all_pass());
    let summary = report.summary();
    for (axiom, (count, fails)) in summary {
        eprintln!("  {axiom}: {count} lines, {} failures", fails.len());
    }
}
