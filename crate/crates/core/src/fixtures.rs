//! Link files bundled with the repository (`fixtures/` at the workspace root).

use crate::linkfile::parse_link_file;
use crate::seifert::{LinkingNumbers, SeifertMatrix};

pub const HOPF_JSON: &str = include_str!("../../../fixtures/hopf.json");
pub const L5A1_JSON: &str = include_str!("../../../fixtures/l5a1.json");
pub const L7A2_JSON: &str = include_str!("../../../fixtures/l7a2.json");
pub const TREFOIL_JSON: &str = include_str!("../../../fixtures/trefoil.json");
pub const FIGURE_EIGHT_JSON: &str = include_str!("../../../fixtures/figure_eight.json");

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub seifert: SeifertMatrix,
    pub linking: Option<LinkingNumbers>,
}

fn load(text: &str) -> Fixture {
    let f = parse_link_file(text).expect("bundled fixture parses");
    Fixture {
        name: f.name.clone(),
        seifert: f.seifert_matrix().expect("bundled fixture is square"),
        linking: f.linking().expect("bundled fixture has valid keys"),
    }
}

/// Positive Hopf link on an annulus.
pub fn hopf() -> Fixture {
    load(HOPF_JSON)
}

/// Whitehead link.
pub fn l5a1() -> Fixture {
    load(L5A1_JSON)
}

pub fn l7a2() -> Fixture {
    load(L7A2_JSON)
}

pub fn trefoil() -> Fixture {
    load(TREFOIL_JSON)
}

pub fn figure_eight() -> Fixture {
    load(FIGURE_EIGHT_JSON)
}

pub fn all() -> Vec<Fixture> {
    vec![hopf(), l5a1(), l7a2(), trefoil(), figure_eight()]
}
