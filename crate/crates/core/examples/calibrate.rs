//! Pilot runs behind `data/pilot_manifest.txt`.
//!
//! cargo run --release -p shapekit --example calibrate -- [seed]

use shapekit::experiments::{run_experiment, ExperimentConfig, Measurement};
use shapekit::{CoreKind, FixCountRule, RegimeSpec};

fn main() -> shapekit::Result<()> {
    let seed = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("seed");
    let regimes = [
        ("fpf_involution", RegimeSpec::FpfInvolution),
        (
            "composite_fpf_half",
            RegimeSpec::Composite {
                fix_rule: FixCountRule::Fraction { p: 0.5 },
                core: CoreKind::FpfInvolution,
            },
        ),
        (
            "ncycle_theta_log",
            RegimeSpec::Composite {
                fix_rule: FixCountRule::ThetaLog { theta: 1.0 },
                core: CoreKind::NCycle,
            },
        ),
    ];
    println!("# seed {seed}, 50 trials, ladder 1000,4000,16000");
    for (name, regime) in regimes {
        let cfg = ExperimentConfig::new(regime, vec![1000, 4000, 16000], 50, seed)
            .with_measurements(&[Measurement::ShapeDistance]);
        let out = run_experiment(&cfg)?;
        for n in &cfg.n_ladder {
            let s = out.summary.get(*n, "d_n").expect("d_n summarized");
            println!("# {name} n={n} mean={:.5} sd={:.5} q95={:.5}", s.mean, s.sd, s.q95);
        }
    }
    Ok(())
}
