//! Special functions: Gamma (two backends), erfc and the scaled erfcx.
//!
//! The error functions use Cody's rational Chebyshev approximations on three
//! intervals (`|x| <= 0.46875`, `<= 4`, `> 4`). On the last two intervals the
//! rational form approximates `exp(x^2) erfc(x)` directly, which is what makes
//! `erfcx` free of underflow at large arguments.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};

/// Distance from a non-positive integer inside which `gamma` reports a pole.
pub const POLE_GUARD: f64 = 1e-12;

/// Polynomial coefficients `b1..b8` of `Gamma(1 + x) ~ 1 + b1 x + ... + b8 x^8`
/// on `0 <= x <= 1` (absolute error at most 3e-7).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaCoefficients {
    b: [f64; 8],
}

/// The eight-term Abramowitz & Stegun 6.1.35 coefficients.
pub const APPENDIX_B: GammaCoefficients = GammaCoefficients {
    b: [
        -0.577191652,
        0.988205891,
        -0.897056937,
        0.918206857,
        -0.756704078,
        0.482199394,
        -0.193527818,
        0.035868343,
    ],
};

/// Documented bound on the polynomial's absolute error on the base interval.
pub const APPENDIX_B_ERROR_BOUND: f64 = 3e-7;

impl GammaCoefficients {
    pub fn coefficients(&self) -> &[f64; 8] {
        &self.b
    }

    /// `Gamma(1 + x)` for `x` in `[0, 1]`.
    pub fn gamma_one_plus(&self, x: f64) -> f64 {
        let tail = self.b.iter().rev().fold(0.0, |acc, &b| acc * x + b);
        1.0 + x * tail
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GammaBackend {
    /// Eight-term polynomial on [1, 2] extended by the recurrence.
    AppendixB,
    /// Lanczos approximation, relative error near 1e-15.
    #[default]
    HighPrecision,
}

impl GammaBackend {
    pub fn gamma(self, x: f64) -> Result<f64> {
        match self {
            GammaBackend::AppendixB => gamma_appendix_b(x),
            GammaBackend::HighPrecision => gamma(x),
        }
    }

    /// `Gamma(a + 1/2) / Gamma(a)` for `a > 0`, without overflowing for large `a`.
    pub fn half_step_ratio(self, a: f64) -> Result<f64> {
        ensure_finite("gamma ratio argument", a)?;
        // Gamma overflows past ~171; pull the pair down with the recurrence.
        const DIRECT_LIMIT: f64 = 100.0;
        let mut a = a;
        let mut factor = 1.0;
        while a > DIRECT_LIMIT {
            factor *= (a - 0.5) / (a - 1.0);
            a -= 1.0;
        }
        Ok(factor * self.gamma(a + 0.5)? / self.gamma(a)?)
    }
}

impl std::str::FromStr for GammaBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "appendixB" | "appendix-b" | "polynomial" => Ok(GammaBackend::AppendixB),
            "highprec" | "high-precision" | "lanczos" => Ok(GammaBackend::HighPrecision),
            other => Err(Error::InvalidParameter(format!(
                "unknown gamma backend `{other}` (expected appendixB or highprec)"
            ))),
        }
    }
}

fn check_pole(x: f64) -> Result<()> {
    ensure_finite("gamma argument", x)?;
    if x <= POLE_GUARD && (x - x.round()).abs() < POLE_GUARD {
        return Err(Error::GammaPole {
            x,
            guard: POLE_GUARD,
        });
    }
    Ok(())
}

/// Gamma via the eight-term polynomial.
///
/// The argument is shifted into `[1, 2]` with `Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1))`
/// below the interval and `Gamma(x) = (x-1)(x-2)...(u) Gamma(u)` above it.
pub fn gamma_appendix_b(x: f64) -> Result<f64> {
    check_pole(x)?;
    let mut u = x;
    let mut scale = 1.0;
    while u > 2.0 {
        u -= 1.0;
        scale *= u;
    }
    let mut denom = 1.0;
    while u < 1.0 {
        denom *= u;
        u += 1.0;
    }
    Ok(scale * APPENDIX_B.gamma_one_plus(u - 1.0) / denom)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `sin(pi x)` with the argument reduced first, so large `|x|` keeps full accuracy.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let s = (PI * (x - n)).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

fn lanczos(x: f64) -> f64 {
    // valid for x >= 0.5
    let xm = x - 1.0;
    let sum = LANCZOS_COEFFS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_COEFFS[0], |acc, (i, &c)| acc + c / (xm + i as f64));
    let t = xm + LANCZOS_G + 0.5;
    // split the power so Gamma up to ~171 stays finite
    let half = t.powf(0.5 * (xm + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * sum
}

/// High-precision Gamma (Lanczos, with reflection below 1/2).
pub fn gamma(x: f64) -> Result<f64> {
    check_pole(x)?;
    if x == x.trunc() && (1.0..=23.0).contains(&x) {
        // (x-1)! is exact in f64 up to 22!
        return Ok((2..x as u64).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 0.5 {
        Ok(PI / (sin_pi(x) * lanczos(1.0 - x)))
    } else {
        Ok(lanczos(x))
    }
}

// Cody's coefficients, erf on |x| <= 0.46875.
const ERF_A: [f64; 5] = [
    3.161_123_743_870_565_60e0,
    1.138_641_541_510_501_56e2,
    3.774_852_376_853_020_21e2,
    3.209_377_589_138_469_47e3,
    1.857_777_061_846_031_53e-1,
];
const ERF_B: [f64; 4] = [
    2.360_129_095_234_412_09e1,
    2.440_246_379_344_441_73e2,
    1.282_616_526_077_372_28e3,
    2.844_236_833_439_170_62e3,
];
// erfcx on 0.46875 < x <= 4.
const ERFC_C: [f64; 9] = [
    5.641_884_969_886_700_89e-1,
    8.883_149_794_388_375_94e0,
    6.611_919_063_714_162_95e1,
    2.986_351_381_974_001_31e2,
    8.819_522_212_417_690_90e2,
    1.712_047_612_634_070_58e3,
    2.051_078_377_826_071_47e3,
    1.230_339_354_797_997_25e3,
    2.153_115_354_744_038_46e-8,
];
const ERFC_D: [f64; 8] = [
    1.574_492_611_070_983_47e1,
    1.176_939_508_913_124_99e2,
    5.371_811_018_620_098_58e2,
    1.621_389_574_566_690_19e3,
    3.290_799_235_733_459_63e3,
    4.362_619_090_143_247_16e3,
    3.439_367_674_143_721_64e3,
    1.230_339_354_803_749_42e3,
];
// erfcx on x > 4, in powers of 1/x^2.
const ERFC_P: [f64; 6] = [
    3.053_266_349_612_323_44e-1,
    3.603_448_999_498_044_39e-1,
    1.257_817_261_112_292_46e-1,
    1.608_378_514_874_227_66e-2,
    6.587_491_615_298_378_03e-4,
    1.631_538_713_730_209_78e-2,
];
const ERFC_Q: [f64; 5] = [
    2.568_520_192_289_822_42e0,
    1.872_952_849_923_460_47e0,
    5.279_051_029_514_284_12e-1,
    6.051_834_131_244_131_91e-2,
    2.335_204_976_268_691_85e-3,
];

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_286_95;
const ERF_SMALL_LIMIT: f64 = 0.46875;
const ERFC_UNDERFLOW: f64 = 26.543;
const ERFCX_NEG_OVERFLOW: f64 = -26.628;
const ERFCX_HUGE: f64 = 6.71e7;

fn erf_small(x: f64) -> f64 {
    let ysq = if x.abs() > 1.11e-16 { x * x } else { 0.0 };
    let mut num = ERF_A[4] * ysq;
    let mut den = ysq;
    for i in 0..3 {
        num = (num + ERF_A[i]) * ysq;
        den = (den + ERF_B[i]) * ysq;
    }
    x * (num + ERF_A[3]) / (den + ERF_B[3])
}

/// `exp(sign * y^2)` with `y^2` split so the rounding of `y*y` does not leak into the result.
fn exp_sq(y: f64, sign: f64) -> f64 {
    let head = (y * 16.0).trunc() / 16.0;
    let del = (y - head) * (y + head);
    (sign * head * head).exp() * (sign * del).exp()
}

/// erfcx for `y > 0.46875`.
fn erfcx_rational(y: f64) -> f64 {
    if y <= 4.0 {
        let mut num = ERFC_C[8] * y;
        let mut den = y;
        for i in 0..7 {
            num = (num + ERFC_C[i]) * y;
            den = (den + ERFC_D[i]) * y;
        }
        (num + ERFC_C[7]) / (den + ERFC_D[7])
    } else if y < ERFCX_HUGE {
        let ysq = 1.0 / (y * y);
        let mut num = ERFC_P[5] * ysq;
        let mut den = ysq;
        for i in 0..4 {
            num = (num + ERFC_P[i]) * ysq;
            den = (den + ERFC_Q[i]) * ysq;
        }
        let r = ysq * (num + ERFC_P[4]) / (den + ERFC_Q[4]);
        (FRAC_1_SQRT_PI - r) / y
    } else {
        FRAC_1_SQRT_PI / y
    }
}

/// Complementary error function, `(2/sqrt(pi)) * integral_z^inf exp(-t^2) dt`.
///
/// Total on finite input; NaN propagates.
pub fn erfc(z: f64) -> f64 {
    let y = z.abs();
    if y <= ERF_SMALL_LIMIT {
        return 1.0 - erf_small(z);
    }
    let upper = if y >= ERFC_UNDERFLOW {
        0.0
    } else {
        exp_sq(y, -1.0) * erfcx_rational(y)
    };
    if z < 0.0 {
        2.0 - upper
    } else {
        upper
    }
}

/// Scaled complementary error function `exp(z^2) * erfc(z)`.
///
/// Overflows to `+inf` below about -26.6.
pub fn erfcx(z: f64) -> f64 {
    let y = z.abs();
    if y <= ERF_SMALL_LIMIT {
        let ysq = if y > 1.11e-16 { y * y } else { 0.0 };
        return ysq.exp() * (1.0 - erf_small(z));
    }
    if z > 0.0 {
        return erfcx_rational(y);
    }
    if z < ERFCX_NEG_OVERFLOW {
        return f64::INFINITY;
    }
    let scale = exp_sq(y, 1.0);
    (scale + scale) - erfcx_rational(y)
}
