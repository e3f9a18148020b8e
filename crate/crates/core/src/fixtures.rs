//! The three `(SL(2) × C^*)/U^-` embeddings used throughout the tests:
//! `P^2 × P^1` (complete), `C^2 × P^1` and `P^2 × C`.
//!
//! `N = ℤ^2`, `V = N_R`, one color `D_a12` at `(1, 0)`. The `G`-stable
//! divisors of `P^2 × P^1` sit at `(-1, 0)`, `(0, 1)` and `(0, -1)`.

use crate::coloredfan::ColoredFan;
use crate::horospherical::{build_fan_input, ConeSpec, FanInput, HorosphericalDatum, RootDatum};

pub const COLOR: &str = "D_a12";

pub fn sl2_times_cstar() -> HorosphericalDatum {
    HorosphericalDatum::full(RootDatum::sl2_times_cstar())
}

/// All nine colored cones of `P^2 × P^1`.
pub fn p2xp1_cones() -> Vec<ConeSpec> {
    vec![
        ConeSpec::new(&[], &[]),
        ConeSpec::new(&[&[-1, 0]], &[]),
        ConeSpec::new(&[&[0, -1]], &[]),
        ConeSpec::new(&[&[0, 1]], &[]),
        ConeSpec::new(&[], &[COLOR]),
        ConeSpec::new(&[&[-1, 0], &[0, 1]], &[]),
        ConeSpec::new(&[&[-1, 0], &[0, -1]], &[]),
        ConeSpec::new(&[&[0, 1]], &[COLOR]),
        ConeSpec::new(&[&[0, -1]], &[COLOR]),
    ]
}

/// `P^2 × P^1` minus `D_∞`: drop every cone through `(-1, 0)`.
pub fn c2xp1_cones() -> Vec<ConeSpec> {
    vec![
        ConeSpec::new(&[], &[]),
        ConeSpec::new(&[&[0, -1]], &[]),
        ConeSpec::new(&[&[0, 1]], &[]),
        ConeSpec::new(&[], &[COLOR]),
        ConeSpec::new(&[&[0, 1]], &[COLOR]),
        ConeSpec::new(&[&[0, -1]], &[COLOR]),
    ]
}

/// `P^2 × P^1` minus `D_10`: drop every cone through `(0, 1)`.
pub fn p2xc_cones() -> Vec<ConeSpec> {
    vec![
        ConeSpec::new(&[], &[]),
        ConeSpec::new(&[&[-1, 0]], &[]),
        ConeSpec::new(&[&[0, -1]], &[]),
        ConeSpec::new(&[], &[COLOR]),
        ConeSpec::new(&[&[-1, 0], &[0, -1]], &[]),
        ConeSpec::new(&[&[0, -1]], &[COLOR]),
    ]
}

fn fan(cones: &[ConeSpec]) -> ColoredFan {
    match build_fan_input(&sl2_times_cstar(), cones).expect("fixture cones resolve") {
        FanInput::Embedding(f) => f,
        FanInput::Homogeneous => unreachable!("fixtures have cones"),
    }
}

pub fn p2xp1() -> ColoredFan {
    fan(&p2xp1_cones())
}

pub fn c2xp1() -> ColoredFan {
    fan(&c2xp1_cones())
}

pub fn p2xc() -> ColoredFan {
    fan(&p2xc_cones())
}
