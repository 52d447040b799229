//! Fixtures shared by the criterion benches.

use posetsym_core::{antichain, build_box_poset, build_young_poset, PosetWindow};

/// Windows of increasing size used across benches, with labels.
pub fn windows() -> Vec<(&'static str, PosetWindow)> {
    vec![
        ("young-3-2-1", build_young_poset(&[3, 2, 1]).unwrap()),
        ("young-4-3-2", build_young_poset(&[4, 3, 2]).unwrap()),
        ("box-3x3", build_box_poset(&[3, 3]).unwrap()),
        ("box-2x2x2", build_box_poset(&[2, 2, 2]).unwrap()),
        ("antichain-6", antichain(6).unwrap()),
    ]
}
