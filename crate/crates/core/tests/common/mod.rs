//! Test-side reference implementations, independent of the library's kernels.
#![allow(dead_code)]

use std::f64::consts::PI;

use hodelta::CouplingStrength;

pub fn g(v: f64) -> CouplingStrength {
    CouplingStrength::new(v).unwrap()
}

/// Gamma by upward shift to x >= 20 and the Stirling series for ln Gamma.
pub fn stirling_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * stirling_gamma(1.0 - x));
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < 20.0 {
        product *= shifted;
        shifted += 1.0;
    }
    let z = shifted;
    let z2 = z * z;
    let series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2)
        - 1.0 / (1680.0 * z * z2 * z2 * z2)
        + 1.0 / (1188.0 * z * z2 * z2 * z2 * z2);
    let ln_gamma = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series;
    ln_gamma.exp() / product
}

/// `(2/sqrt(pi)) * integral of exp(-t^2)` from `z` to 9 by composite Simpson.
pub fn erfc_quadrature(z: f64) -> f64 {
    let upper = 9.0;
    if z >= upper {
        return 0.0;
    }
    let panels = 40_000;
    let h = (upper - z) / panels as f64;
    let f = |t: f64| (-t * t).exp();
    let mut sum = f(z) + f(upper);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(z + h * i as f64);
    }
    2.0 / PI.sqrt() * sum * h / 3.0
}

/// Laplace continued fraction for `exp(z^2) erfc(z)`, good for `z >= 3`.
pub fn erfcx_continued_fraction(z: f64) -> f64 {
    let mut tail = 0.0;
    for k in (1..=200).rev() {
        tail = (k as f64 / 2.0) / (z + tail);
    }
    1.0 / (PI.sqrt() * (z + tail))
}

/// Ground-state roots of the transcendental condition (mpmath, 30-digit arithmetic, 12 digits kept).
#[rustfmt::skip]
pub const EXACT_NU: [(f64, f64); 16] = [
    (-5.0, -12.9900276237),
    (-3.0, -4.97276916737),
    (-2.5, -3.58650785223),
    (-2.0, -2.44235869898),
    (-1.5, -1.53273016661),
    (-1.0, -0.842418946781),
    (-0.5, -0.344423980158),
    (0.1, 0.0542676624778),
    (0.25, 0.128104807836),
    (0.5, 0.23351755629),
    (1.0, 0.392744045309),
    (1.5, 0.503885112192),
    (2.0, 0.583898122276),
    (2.5, 0.643351705691),
    (3.0, 0.688835406714),
    (5.0, 0.796122873915),
];

/// Tabulated summary rows: g, alpha_min, nu(alpha_min), nu(exact).
pub const TABULATED_SUMMARY: [(f64, f64, f64, f64); 16] = [
    (-5.0, 0.219050, -12.989190, -12.990313),
    (-3.0, 0.362841, -4.972539, -4.972771),
    (-2.5, 0.426004, -3.586291, -3.5865066),
    (-2.0, 0.507489, -2.442049, -2.442360),
    (-1.5, 0.609289, -1.532213, -1.532729),
    (-1.0, 0.728909, -0.841664, -0.842418),
    (-0.5, 0.860948, -0.343910, -0.344424),
    (0.1, 1.023871, 0.054315, 0.054269),
    (0.25, 1.047595, 0.128397, 0.128106),
    (0.5, 1.068158, 0.234490, 0.233519),
    (1.0, 1.077488, 0.394997, 0.392743),
    (1.5, 1.072723, 0.506696, 0.503881),
    (2.0, 1.065157, 0.586734, 0.583894),
    (2.5, 1.057843, 0.645969, 0.643356),
    (3.0, 1.051491, 0.691160, 0.688831),
    (5.0, 1.034671, 0.797460, 0.796119),
];

/// Tabulated iteration snapshots for g = -0.5: four blocks of (alpha, epsilon).
pub const TABULATED_ITERATIONS: [[(f64, f64); 10]; 4] = [
    [
        (0.10, 0.7875843913490),
        (0.19, 0.6330068382654),
        (0.28, 0.4865632769097),
        (0.37, 0.3714877335918),
        (0.46, 0.2874437277571),
        (0.55, 0.2288130659022),
        (0.64, 0.1901599033527),
        (0.73, 0.1672807821995),
        (0.82, 0.1571204709131),
        (0.91, 0.1574914723433),
    ],
    [
        (0.855, 0.15611114689438),
        (0.856, 0.15610458365804),
        (0.857, 0.15609922993587),
        (0.858, 0.15609508353865),
        (0.859, 0.15609214228512),
        (0.860, 0.15609040400196),
        (0.861, 0.15608986652375),
        (0.862, 0.15609052769293),
        (0.863, 0.15609238535979),
        (0.864, 0.15609543738243),
    ],
    [
        (0.86075, 0.15608988843596),
        (0.86080, 0.15608987805867),
        (0.86085, 0.15608987067907),
        (0.86090, 0.15608986629690),
        (0.86095, 0.15608986491188),
        (0.86100, 0.15608986652375),
        (0.86105, 0.15608987113223),
        (0.86110, 0.15608987873706),
        (0.86115, 0.15608988933797),
        (0.86120, 0.15608990293470),
    ],
    [
        (0.86094750, 0.15608986490995),
        (0.86094763, 0.15608986490987),
        (0.86094776, 0.15608986490980),
        (0.86094789, 0.15608986490976),
        (0.86094802, 0.15608986490974),
        (0.86094815, 0.15608986490973),
        (0.86094828, 0.15608986490975),
        (0.86094841, 0.15608986490979),
        (0.86094854, 0.15608986490984),
        (0.86094867, 0.15608986490992),
    ],
];

/// Printed places of a tabulated decimal, e.g. 13 for 0.7875843913490.
pub fn printed_places(block: usize) -> i32 {
    if block == 0 {
        13
    } else {
        14
    }
}
