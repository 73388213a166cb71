//! Quick tour of the library surface: construct an extremal graph,
//! score it, and run one theorem check.

use eil_core::families;
use eil_core::index;
use eil_core::verify::{self, Settings};
use eil_core::{graph6, IndexValue};

fn main() {
    let g = families::s_prime(6).unwrap();
    let aso: IndexValue = index::aso(&g).unwrap();
    let bound: IndexValue = families::unicyclic_max_bound(6).unwrap();
    println!(
        "S'_6 = {}  aso = {aso}  bound = {bound}",
        graph6::encode(&g)
    );

    let verdict = verify::verify_unicyclic_max(6, &Settings::default()).unwrap();
    println!(
        "unicyclic-max n=6: pass={} over {} classes, top witness {}",
        verdict.pass,
        verdict.scanned,
        verdict.witnesses[0].graph6.as_deref().unwrap_or("-"),
    );
}
