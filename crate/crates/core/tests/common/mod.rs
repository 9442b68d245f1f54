#![allow(dead_code)]

pub mod programs;

use skeinkit::cli::fixtures::{load_fixtures, BUNDLED};
use skeinkit::skein::SweepConfig;
use skeinkit::{parse_pd, Diagram};

pub const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

pub struct Fixture {
    pub name: String,
    pub diagram: Diagram,
    pub adequate: bool,
}

pub fn fixtures() -> Vec<Fixture> {
    load_fixtures(BUNDLED.as_bytes())
        .expect("bundled fixtures parse")
        .records
        .into_iter()
        .map(|r| Fixture {
            diagram: r.diagram().expect("declared values hold"),
            name: r.name,
            adequate: r.adequate,
        })
        .collect()
}

pub fn trefoil() -> Diagram {
    parse_pd(TREFOIL).unwrap().with_name("3_1")
}

pub fn figure_eight() -> Diagram {
    parse_pd(FIGURE_EIGHT).unwrap().with_name("4_1")
}

pub fn cfg() -> SweepConfig {
    SweepConfig::default()
}
