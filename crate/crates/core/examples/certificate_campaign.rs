//! A seeded random campaign of division certificates, written as an NDJSON
//! report. Pass a seed as the first argument.

use banalg::campaign::{run_campaign, CampaignConfig};
use banalg::report::Report;
use banalg::scalars::{q, BanachRing};
use banalg::series::AlgebraFlavor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(0);
    let mut cfg = CampaignConfig::new(AlgebraFlavor::tate(q(1)), BanachRing::padic(2, 16)?, 8);
    cfg.trials = 20;
    cfg.seed = seed;
    let trials = run_campaign(&cfg)?;
    let mut report = Report::new("campaign-example", serde_json::to_value(&cfg)?, Some(seed), cfg.order);
    for t in &trials {
        report.push(t.ok, t);
    }
    report.write(&mut std::io::stdout().lock())?;
    eprintln!("{} of {} certificates hold", trials.iter().filter(|t| t.ok).count(), trials.len());
    Ok(())
}
