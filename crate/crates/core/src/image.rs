//! The shared image container and pixel-center coordinate convention.
//!
//! `ImageGrid` is a plain row-major grid of `f64` intensities; every stage of
//! the pipeline (phantoms, degradation, reconstruction, baselines, metrics)
//! passes these around. Intensities are kept in `[0, 1]` by convention at
//! pipeline boundaries; intermediate buffers may exceed that range.
//!
//! `CoordGrid` maps pixel `(i, j)` to the normalized center coordinate
//! `((i + 0.5) / width, (j + 0.5) / height)`, so coordinates stay consistent
//! across resolutions when images are decimated by an integer stride.

use crate::error::{Error, Result};

/// 2-D row-major grid of real-valued intensities.
///
/// `data[y * width + x]` holds the pixel at column `x`, row `y`. Immutable
/// value semantics once constructed; cloning is explicit.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageGrid {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl ImageGrid {
    /// Grid of `width * height` pixels, every pixel set to `fill`.
    pub fn new(width: usize, height: usize, fill: f64) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::dimension(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if !fill.is_finite() {
            return Err(Error::data("fill value must be finite"));
        }
        Ok(Self {
            width,
            height,
            data: vec![fill; width * height],
        })
    }

    /// Wrap an existing row-major buffer. Rejects length mismatches and
    /// non-finite values.
    pub fn from_vec(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::dimension(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if data.len() != width * height {
            return Err(Error::dimension(format!(
                "data length {} does not match {width}x{height}",
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::data("image contains non-finite values"));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Pixel at column `x`, row `y`. Panics if out of bounds.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    /// Set pixel at column `x`, row `y`. Panics if out of bounds.
    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: f64) {
        self.data[y * self.width + x] = value;
    }

    pub fn mean(&self) -> f64 {
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }

    pub fn min(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.data.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// True if all values are finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// Pixel-center coordinate convention for a raster of given dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordGrid {
    width: usize,
    height: usize,
}

impl CoordGrid {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::dimension(format!(
                "coordinate grid dimensions must be positive, got {width}x{height}"
            )));
        }
        Ok(Self { width, height })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Normalized center coordinate of pixel `(i, j)`:
    /// `((i + 0.5) / width, (j + 0.5) / height)`, strictly inside `(0, 1)^2`.
    pub fn coord_of_pixel(&self, i: usize, j: usize) -> Result<(f64, f64)> {
        if i >= self.width || j >= self.height {
            return Err(Error::index(format!(
                "pixel ({i}, {j}) out of range for {}x{} grid",
                self.width, self.height
            )));
        }
        Ok(self.coord_unchecked(i, j))
    }

    /// Same mapping without the range check, for use in raster loops that
    /// iterate `0..width` x `0..height`.
    #[inline]
    pub fn coord_unchecked(&self, i: usize, j: usize) -> (f64, f64) {
        (
            (i as f64 + 0.5) / self.width as f64,
            (j as f64 + 0.5) / self.height as f64,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn new_fills_constant() {
        let g = ImageGrid::new(2, 2, 0.0).unwrap();
        assert_eq!(g.data(), &[0.0; 4]);

        let g = ImageGrid::new(1, 1, 0.5).unwrap();
        assert_eq!(g.data(), &[0.5]);

        let g = ImageGrid::new(3, 2, 1.0).unwrap();
        assert_eq!(g.len(), 6);
        assert!(g.data().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(matches!(ImageGrid::new(0, 4, 0.0), Err(Error::Dimension(_))));
        assert!(matches!(ImageGrid::new(4, 0, 0.0), Err(Error::Dimension(_))));
        assert!(matches!(CoordGrid::new(0, 1), Err(Error::Dimension(_))));
    }

    #[test]
    fn non_finite_rejected() {
        assert!(ImageGrid::new(2, 2, f64::NAN).is_err());
        assert!(ImageGrid::from_vec(2, 1, vec![0.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn from_vec_length_checked() {
        assert!(matches!(
            ImageGrid::from_vec(2, 2, vec![0.0; 3]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn pixel_center_coords() {
        let g = CoordGrid::new(2, 2).unwrap();
        assert_eq!(g.coord_of_pixel(0, 0).unwrap(), (0.25, 0.25));
        assert_eq!(g.coord_of_pixel(1, 1).unwrap(), (0.75, 0.75));

        let g = CoordGrid::new(4, 4).unwrap();
        assert_eq!(g.coord_of_pixel(2, 0).unwrap(), (0.625, 0.125));
    }

    #[test]
    fn out_of_range_pixel_is_index_error() {
        let g = CoordGrid::new(2, 2).unwrap();
        assert!(matches!(g.coord_of_pixel(2, 0), Err(Error::Index(_))));
        assert!(matches!(g.coord_of_pixel(0, 2), Err(Error::Index(_))));
    }

    #[test]
    fn row_major_layout() {
        let mut g = ImageGrid::new(3, 2, 0.0).unwrap();
        g.set(2, 1, 7.0);
        assert_eq!(g.data()[1 * 3 + 2], 7.0);
        assert_eq!(g.get(2, 1), 7.0);
    }

    proptest! {
        // Every pixel center lies strictly inside (0,1)^2 and distinct
        // pixels map to distinct coordinates.
        #[test]
        fn coords_inside_open_unit_square(w in 1usize..32, h in 1usize..32) {
            let g = CoordGrid::new(w, h).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for j in 0..h {
                for i in 0..w {
                    let (x, y) = g.coord_of_pixel(i, j).unwrap();
                    prop_assert!(x > 0.0 && x < 1.0);
                    prop_assert!(y > 0.0 && y < 1.0);
                    prop_assert!(seen.insert((x.to_bits(), y.to_bits())));
                }
            }
        }
    }
}
