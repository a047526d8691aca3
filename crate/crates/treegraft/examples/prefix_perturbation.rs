//! How little the beginning matters: overwrite the sequence's early values
//! with garbage and the nested recursion still reproduces the true tail,
//! because by the time the recursion takes over, its back-references no
//! longer reach into the rewritten zone.
//!
//! Run with: cargo run --example prefix_perturbation

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treegraft::labeling::boundary_label;
use treegraft::presets::find_preset;
use treegraft::recurrence::{minimal_agreeing_prefix, perturb_prefix_check};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    for name in ["fig5", "golomb"] {
        let preset = find_preset(name).unwrap();
        let p = preset.config.seed_height();
        let np = boundary_label(&preset.config, &preset.scheme, p);
        let np1 = boundary_label(&preset.config, &preset.scheme, p + 1);
        let len = (np - 1) as usize;

        println!("== {} ==", preset.name);
        println!(
            "protected zone: values below label {np} may be rewritten; \
             the recursion starts after label {np1}"
        );

        for trial in 1..=5 {
            let junk: Vec<i64> = (0..len).map(|_| rng.random_range(0..=np as i64)).collect();
            let report =
                perturb_prefix_check(&preset.config, &preset.scheme, &junk, 10_000).unwrap();
            println!(
                "  trial {trial}: prefix {:?}... -> tail over [{}, {}] {}",
                &junk[..len.min(6)],
                report.checked_from,
                report.checked_to,
                if report.passed { "matches the true sequence" } else { "DIVERGES" }
            );
        }

        // Push further: how few honest initial values does the recursion
        // actually need before it locks onto the true sequence?
        let minimal = minimal_agreeing_prefix(&preset.config, &preset.scheme, 10_000).unwrap();
        println!("  minimal honest prefix: {minimal} value(s)");
        println!();
    }
}
