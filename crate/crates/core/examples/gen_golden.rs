//! Regenerates the golden files under crates/core/golden/ from a fresh run.
//! Run from the workspace root: cargo run -p klbasis-core --example gen_golden

use klbasis_core::cob::{crt_violations, discover_conventions, Orientation};
use klbasis_core::shapes::{all_partitions, MapVariant};
use klbasis_core::specht::c_matrix;
use klbasis_core::verify::{discovery_instances, SuiteOptions};
use klbasis_core::weyl::Family;

fn main() {
    // CRT orientations per family, reference variant, default crt ranges.
    let mut certified = Vec::new();
    for (family, shapes) in [
        (Family::A, {
            let mut v = Vec::new();
            for d in 1..=5 {
                v.extend(all_partitions(Family::A, d));
            }
            v
        }),
        (Family::B, all_partitions(Family::B, 3)),
    ] {
        let mut as_printed = true;
        let mut reversed = true;
        for shape in &shapes {
            let cm = c_matrix(shape).unwrap();
            as_printed &= crt_violations(&cm, MapVariant::InverseTop, Orientation::AsPrinted)
                .unwrap()
                .is_empty();
            reversed &= crt_violations(&cm, MapVariant::InverseTop, Orientation::Reversed)
                .unwrap()
                .is_empty();
        }
        let orientation = match (as_printed, reversed) {
            (_, true) => Some(Orientation::Reversed),
            (true, false) => Some(Orientation::AsPrinted),
            (false, false) => None,
        };
        eprintln!("{family:?}: as_printed={as_printed} reversed={reversed}");
        certified.push(serde_json::json!({
            "family": family,
            "map_variant": MapVariant::InverseTop,
            "orientation": orientation,
        }));
    }
    std::fs::write(
        "crates/core/golden/crt_orientations.json",
        serde_json::to_string_pretty(&certified).unwrap() + "\n",
    )
    .unwrap();

    let instances = discovery_instances(&SuiteOptions::default());
    eprintln!("{} discovery instances", instances.len());
    let t = std::time::Instant::now();
    let report = discover_conventions(&instances).unwrap();
    eprintln!("discovery took {:?}", t.elapsed());
    eprintln!("{}", report.summary());
    let survivors = serde_json::json!({
        "survivors": report.survivors,
        "preferred": report.preferred,
    });
    std::fs::write(
        "crates/core/golden/discovery_survivors.json",
        serde_json::to_string_pretty(&survivors).unwrap() + "\n",
    )
    .unwrap();
}
