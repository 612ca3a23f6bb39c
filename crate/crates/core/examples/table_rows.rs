//! Prints counts and timings for a range of orders:
//! `cargo run --release --example table_rows -- <chi> <min-n> <max-n>`.

use std::time::Instant;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let [chi, lo, hi] = args[..] else {
        eprintln!("usage: table_rows <chi> <min-n> <max-n>");
        std::process::exit(64);
    };
    for n in lo..=hi {
        let t = Instant::now();
        let r = hoffman_core::enumerate_hoffman(n, chi, 1e-9).expect("enumeration succeeds");
        let c = r.counts;
        println!(
            "chi={chi} n={n}: {} {} {} {}  disc={} ({:.1?})",
            c.total,
            c.regular,
            c.irregular,
            c.outperforming,
            r.disc.len(),
            t.elapsed()
        );
    }
}
