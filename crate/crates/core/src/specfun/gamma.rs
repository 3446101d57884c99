use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
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

/// Taylor coefficients of `1/Γ(x) = Σ_{k≥1} RGAMMA[k] x^k`.
pub(super) const RGAMMA: [f64; 31] = [
    0.0,
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
    1.714_406_321_927_337_433_4e-20,
];

/// `sin(πx)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).floor();
    if r < 0.25 {
        (PI * r).sin()
    } else if r < 0.75 {
        (PI * (r - 0.5)).cos()
    } else if r < 1.25 {
        -(PI * (r - 1.0)).sin()
    } else if r < 1.75 {
        -(PI * (r - 1.5)).cos()
    } else {
        (PI * (r - 2.0)).sin()
    }
}

/// Real Gamma function.
///
/// Taylor series of `1/Γ` with upward recurrence for `1/2 ≤ x < 12`,
/// Lanczos approximation above, reflection `Γ(x)Γ(1-x) = π/sin(πx)`
/// below. Returns [`Error::Pole`] at zero and the negative integers.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("x", x, "finite reals"));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(x));
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma_unchecked(1.0 - x));
    }
    if x < 12.0 {
        // shift into [1/2, 3/2) where the 1/Γ Taylor series is used
        let shifts = (x + 0.5).floor() - 1.0;
        let y = x - shifts;
        let mut g = 1.0 / rgamma1p(y - 1.0);
        for k in 0..shifts as usize {
            g *= y + k as f64;
        }
        return g;
    }
    let x = x - 1.0;
    let mut series = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    // split the power so that t^(x+1/2) does not overflow before e^-t shrinks it
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * series
}

/// `1/Γ(1+x)` for `|x| ≤ 1/2` from the Taylor series of `1/Γ`.
pub(super) fn rgamma1p(x: f64) -> f64 {
    RGAMMA[1..].iter().rev().fold(0.0, |acc, &c| acc * x + c)
}
