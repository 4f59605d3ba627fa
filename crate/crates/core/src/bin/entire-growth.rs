use clap::Parser;
use entire_growth::cli::{run, Args};

fn main() {
    let args = Args::parse();
    if let Some(n) = std::env::var("ENTIRE_GROWTH_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        // 0 lets rayon pick the thread count.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    std::process::exit(run(&args));
}
