//! Seeded property suites, the same ones behind `octo-moebius verify`.

use octo_moebius::sample::Subspace;
use octo_moebius::verify::{run, Config, Suite};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    for subspace in [Subspace::Octonionic, Subspace::Quaternionic] {
        let cfg = Config { seed, samples: 100, subspace, ..Config::default() };
        let report = run(Suite::All, &cfg);
        println!("{subspace:?}, seed {seed}: {}", if report.pass { "pass" } else { "FAIL" });
        for p in &report.properties {
            println!("  {:<5} {:<48} {:.2e} (tol {:.0e})", if p.pass { "ok" } else { "FAIL" }, p.name, p.residual, p.tolerance);
        }
    }
}
