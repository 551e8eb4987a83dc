//! Integer points of the period variety for sqrt(2) and how they sit over
//! the Pell conic -2u^2 + v^2 = -1.
//!
//! $ cargo run --example bej_scan -- 12

use rmtori::bej::{fiber_census, BejSpec};
use rmtori::cf::QuadCoeffs;

fn main() -> rmtori::Result<()> {
    let bound = std::env::args()
        .nth(1)
        .and_then(|b| b.parse().ok())
        .unwrap_or(6);
    let spec = BejSpec::new(QuadCoeffs::new(1, 0, -2)?, 2, 2)?;
    let points = spec.enumerate(bound)?;
    println!("N=2 k=2 bound={bound}: {} members", points.len());
    for p in points.iter().take(10) {
        let entries: Vec<String> = p.entries.iter().map(|e| e.to_string()).collect();
        println!(
            "  ({}) -> ({}, {})",
            entries.join(","),
            p.projection.0,
            p.projection.1
        );
    }
    for ((u, v), count) in fiber_census(&points)? {
        println!("over ({u}, {v}): {count}");
    }
    Ok(())
}
