//! Window PSDs and their mapping onto the discrete frequency grid.

mod target;
mod window;

pub use target::{build_spectral_target, DesignParams, SpectralTarget};
pub use window::{make_window, WindowKind, WindowSpec};

/// Samples `spec` at one point per in-band bin and maps it onto the grid.
pub fn target_for_window(
    spec: &WindowSpec,
    params: &DesignParams,
) -> crate::Result<SpectralTarget> {
    let points = params.band_bins().len().max(2);
    let psd = make_window(spec, points)?;
    build_spectral_target(&psd, params)
}
