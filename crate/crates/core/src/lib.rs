//! Reconstruction of under-sampled, PSF-blurred acoustic-resolution
//! photoacoustic microscopy (AR-PAM) images.
//!
//! The library models the acquisition as blur-then-decimate: the dense image
//! is convolved with the system point spread function and every `stride`-th
//! pixel per axis is kept. Reconstruction fits an implicit neural
//! representation (multiresolution hash encoding + small MLP) through that
//! degradation operator with a jointly learned Gaussian PSF, so a single
//! sparse acquisition is enough — no paired training data.
//!
//! Module map:
//! - [`image`] — the row-major image container and coordinate conventions
//! - [`psf`] — focused-transducer field patterns and PSF kernel synthesis
//! - [`forward`] — convolution / decimation operators and their adjoints
//! - [`encoding`] — multiresolution hash encoder with exact table gradients
//! - [`mlp`] — the 2×64 ReLU / sigmoid-output perceptron, hand-derived backprop
//! - [`recon`] — the self-supervised training loop (Adam, L2 + TV loss)
//! - [`baselines`] — interpolation + Richardson–Lucy / blind deconvolution
//! - [`phantom`] — seeded vascular phantoms and experiment packaging
//! - [`metrics`] — PSNR and SSIM

pub mod baselines;
pub mod encoding;
pub mod error;
pub mod forward;
pub mod image;
pub mod metrics;
pub mod mlp;
pub mod phantom;
pub mod psf;
pub mod recon;

pub use error::{Error, Result};
pub use image::{CoordGrid, ImageGrid};
pub use psf::PsfKernel;
