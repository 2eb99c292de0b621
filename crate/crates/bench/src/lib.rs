//! Shared inputs for the criterion benches.

use ufna_core::Presentation;

/// Named presentations of increasing size, from the two-generator fixtures
/// up to a four-generator algebra with overlapping relations.
pub fn workloads() -> Vec<(&'static str, Presentation)> {
    vec![
        ("free2", Presentation::from_letters("xy", &[]).unwrap()),
        ("xx", Presentation::from_letters("xy", &["xx"]).unwrap()),
        ("yx", Presentation::from_letters("xy", &["yx"]).unwrap()),
        (
            "xyzw",
            Presentation::from_letters("xyzw", &["xy", "zw", "yzx", "wxw", "zzz"]).unwrap(),
        ),
    ]
}
