//! Thin wrappers over `libm` so the rest of the crate reads like std float code.

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// Logarithm in an arbitrary base. Base 2 and base e use the dedicated
/// libm routines.
#[inline]
pub(crate) fn log_base(x: f64, base: f64) -> f64 {
    if base == 2.0 {
        log2(x)
    } else if base == core::f64::consts::E {
        ln(x)
    } else {
        ln(x) / ln(base)
    }
}
