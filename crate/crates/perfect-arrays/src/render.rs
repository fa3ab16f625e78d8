//! Plain-text PGM (P2) and PPM (P3) renders of two-dimensional arrays.
//!
//! Grayscale maps exponent `e` over `r` roots to `floor(e * 255 / (r - 1))`
//! (everything is 0 when `r = 1`). The hue palette walks the six edges of the
//! RGB cube in integer steps, so both palettes are bit-exact.

use std::fmt::Write;
use std::str::FromStr;

use perfect_arrays_core::ExponentArray;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Palette {
    #[default]
    Grayscale,
    Hue,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ImageFormat {
    #[default]
    Pgm,
    Ppm,
}

impl FromStr for Palette {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grayscale" | "gray" => Ok(Palette::Grayscale),
            "hue" => Ok(Palette::Hue),
            _ => Err(format!("unknown palette {s:?} (expected grayscale or hue)")),
        }
    }
}

impl FromStr for ImageFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pgm" => Ok(ImageFormat::Pgm),
            "ppm" => Ok(ImageFormat::Ppm),
            _ => Err(format!("unknown image format {s:?} (expected pgm or ppm)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub palette: Palette,
    /// Pixels per array cell along each axis.
    pub scale: usize,
    pub format: ImageFormat,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            palette: Palette::Grayscale,
            scale: 1,
            format: ImageFormat::Pgm,
        }
    }
}

pub fn gray_level(e: u32, modulus: u32) -> u8 {
    if modulus <= 1 {
        0
    } else {
        (u64::from(e) * 255 / u64::from(modulus - 1)) as u8
    }
}

pub fn hue_rgb(e: u32, modulus: u32) -> [u8; 3] {
    let pos = (u64::from(e) * 1530 / u64::from(modulus.max(1))) as u32;
    let (edge, t) = (pos / 255, (pos % 255) as u8);
    match edge {
        0 => [255, t, 0],
        1 => [255 - t, 255, 0],
        2 => [0, 255, t],
        3 => [0, 255 - t, 255],
        4 => [t, 0, 255],
        _ => [255, 0, 255 - t],
    }
}

pub fn render(a: &ExponentArray, spec: &RenderSpec) -> Result<Vec<u8>> {
    let &[rows, cols] = a.shape() else {
        return Err(Error::NotTwoDimensional(a.shape().to_vec()));
    };
    if spec.scale == 0 {
        return Err(Error::ZeroScale);
    }
    if spec.palette == Palette::Hue && spec.format == ImageFormat::Pgm {
        return Err(Error::PaletteFormat);
    }
    let (w, h) = (cols * spec.scale, rows * spec.scale);
    let r = a.modulus();
    let magic = match spec.format {
        ImageFormat::Pgm => "P2",
        ImageFormat::Ppm => "P3",
    };
    let mut out = format!("{magic}\n{w} {h}\n255\n");
    let mut line = String::new();
    for i in 0..rows {
        line.clear();
        for j in 0..cols {
            let e = a.get(&[i, j]);
            for _ in 0..spec.scale {
                if !line.is_empty() {
                    line.push(' ');
                }
                match (spec.format, spec.palette) {
                    (ImageFormat::Pgm, _) => write!(line, "{}", gray_level(e, r)),
                    (ImageFormat::Ppm, Palette::Grayscale) => {
                        let g = gray_level(e, r);
                        write!(line, "{g} {g} {g}")
                    }
                    (ImageFormat::Ppm, Palette::Hue) => {
                        let [x, y, z] = hue_rgb(e, r);
                        write!(line, "{x} {y} {z}")
                    }
                }
                .expect("writing to a string");
            }
        }
        for _ in 0..spec.scale {
            out.push_str(&line);
            out.push('\n');
        }
    }
    Ok(out.into_bytes())
}
