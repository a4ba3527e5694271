//! Plain (ASCII) Netpbm: `P1` bitmaps and `P2` graymaps.
//!
//! Output lines never exceed 70 characters. Bitmap pixels are written as bare
//! digits; graymap samples are separated by single spaces.

use thiserror::Error;

const MAX_LINE: usize = 70;

/// An 8-bit grayscale image, 0 = black, 255 = white.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl Raster {
    pub const WHITE: u8 = 255;
    pub const BLACK: u8 = 0;

    pub fn new(width: usize, height: usize) -> Self {
        Raster {
            width,
            height,
            pixels: vec![Self::WHITE; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    pub fn fill_rect(&mut self, x: usize, y: usize, w: usize, h: usize, value: u8) {
        for yy in y..(y + h).min(self.height) {
            let start = yy * self.width;
            for px in &mut self.pixels[start + x.min(self.width)..start + (x + w).min(self.width)] {
                *px = value;
            }
        }
    }

    /// Copies `other` into this raster with its top-left corner at `(x, y)`.
    pub fn blit(&mut self, other: &Raster, x: usize, y: usize) {
        for yy in 0..other.height {
            for xx in 0..other.width {
                if x + xx < self.width && y + yy < self.height {
                    self.pixels[(y + yy) * self.width + x + xx] = other.get(xx, yy);
                }
            }
        }
    }

    /// Plain bitmap; any pixel darker than mid-gray is written as black (`1`).
    pub fn to_pbm(&self) -> Vec<u8> {
        let mut out = format!("P1\n{} {}\n", self.width, self.height);
        for y in 0..self.height {
            let bits: Vec<u8> = (0..self.width)
                .map(|x| if self.get(x, y) < 128 { b'1' } else { b'0' })
                .collect();
            if bits.is_empty() {
                continue;
            }
            for chunk in bits.chunks(MAX_LINE) {
                out.push_str(std::str::from_utf8(chunk).unwrap());
                out.push('\n');
            }
        }
        out.into_bytes()
    }

    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P2\n{} {}\n255\n", self.width, self.height);
        for y in 0..self.height {
            let mut line = String::new();
            for x in 0..self.width {
                let sample = self.get(x, y).to_string();
                if !line.is_empty() && line.len() + 1 + sample.len() > MAX_LINE {
                    out.push_str(&line);
                    out.push('\n');
                    line.clear();
                }
                if !line.is_empty() {
                    line.push(' ');
                }
                line.push_str(&sample);
            }
            if !line.is_empty() {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out.into_bytes()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetpbmError {
    #[error("expected magic {expected:?}")]
    BadMagic { expected: &'static str },
    #[error("missing or malformed header field {0}")]
    BadHeader(&'static str),
    #[error("invalid sample {0:?}")]
    BadSample(String),
    #[error("expected {expected} samples, found {found}")]
    SampleCount { expected: usize, found: usize },
}

/// Splits a plain Netpbm stream into whitespace-separated tokens, dropping
/// `#` comments.
fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
}

fn header_usize<'a>(
    it: &mut impl Iterator<Item = &'a str>,
    field: &'static str,
) -> Result<usize, NetpbmError> {
    it.next()
        .and_then(|t| t.parse().ok())
        .ok_or(NetpbmError::BadHeader(field))
}

/// Decodes a plain `P1` bitmap into rows of booleans (`true` = black).
pub fn decode_pbm(bytes: &[u8]) -> Result<Vec<Vec<bool>>, NetpbmError> {
    let text = std::str::from_utf8(bytes).map_err(|_| NetpbmError::BadMagic { expected: "P1" })?;
    let mut it = tokens(text);
    if it.next() != Some("P1") {
        return Err(NetpbmError::BadMagic { expected: "P1" });
    }
    let width = header_usize(&mut it, "width")?;
    let height = header_usize(&mut it, "height")?;
    // P1 pixels may be packed without separators
    let mut bits = Vec::with_capacity(width * height);
    for tok in it {
        for ch in tok.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(NetpbmError::BadSample(tok.to_string())),
            }
        }
    }
    if bits.len() != width * height {
        return Err(NetpbmError::SampleCount {
            expected: width * height,
            found: bits.len(),
        });
    }
    if width == 0 {
        return Ok(vec![Vec::new(); height]);
    }
    Ok(bits.chunks(width).map(<[bool]>::to_vec).collect())
}

/// Decodes a plain `P2` graymap, returning `(maxval, rows)`.
pub fn decode_pgm(bytes: &[u8]) -> Result<(u16, Vec<Vec<u16>>), NetpbmError> {
    let text = std::str::from_utf8(bytes).map_err(|_| NetpbmError::BadMagic { expected: "P2" })?;
    let mut it = tokens(text);
    if it.next() != Some("P2") {
        return Err(NetpbmError::BadMagic { expected: "P2" });
    }
    let width = header_usize(&mut it, "width")?;
    let height = header_usize(&mut it, "height")?;
    let maxval = header_usize(&mut it, "maxval")?;
    let maxval = u16::try_from(maxval)
        .ok()
        .filter(|&m| m > 0)
        .ok_or(NetpbmError::BadHeader("maxval"))?;
    let samples = it
        .map(|t| {
            t.parse::<u16>()
                .ok()
                .filter(|&v| v <= maxval)
                .ok_or_else(|| NetpbmError::BadSample(t.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if samples.len() != width * height {
        return Err(NetpbmError::SampleCount {
            expected: width * height,
            found: samples.len(),
        });
    }
    if width == 0 {
        return Ok((maxval, vec![Vec::new(); height]));
    }
    Ok((maxval, samples.chunks(width).map(<[u16]>::to_vec).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pixel_bitmaps() {
        let mut r = Raster::new(1, 1);
        assert_eq!(r.to_pbm(), b"P1\n1 1\n0\n");
        r.fill_rect(0, 0, 1, 1, Raster::BLACK);
        assert_eq!(r.to_pbm(), b"P1\n1 1\n1\n");
    }

    #[test]
    fn long_rows_wrap_at_70() {
        let mut r = Raster::new(150, 2);
        r.fill_rect(0, 0, 150, 1, Raster::BLACK);
        let out = String::from_utf8(r.to_pbm()).unwrap();
        assert!(out.lines().all(|l| l.len() <= 70));
        let rows = decode_pbm(out.as_bytes()).unwrap();
        assert!(rows[0].iter().all(|&b| b));
        assert!(rows[1].iter().all(|&b| !b));

        let pgm = String::from_utf8(r.to_pgm()).unwrap();
        assert!(pgm.lines().all(|l| l.len() <= 70));
        let (maxval, gray) = decode_pgm(pgm.as_bytes()).unwrap();
        assert_eq!(maxval, 255);
        assert_eq!(gray[0][149], 0);
        assert_eq!(gray[1][0], 255);
    }

    #[test]
    fn decoder_accepts_comments_and_spacing() {
        let rows = decode_pbm(b"P1\n# a comment\n3 2\n1 0 1\n0 1 0\n").unwrap();
        assert_eq!(
            rows,
            vec![vec![true, false, true], vec![false, true, false]]
        );
    }

    #[test]
    fn decoder_errors() {
        assert_eq!(
            decode_pbm(b"P4\n1 1\n1\n"),
            Err(NetpbmError::BadMagic { expected: "P1" })
        );
        assert_eq!(
            decode_pbm(b"P1\n1\n"),
            Err(NetpbmError::BadHeader("height"))
        );
        assert_eq!(
            decode_pbm(b"P1\n2 1\n1\n"),
            Err(NetpbmError::SampleCount {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            decode_pbm(b"P1\n1 1\n2\n"),
            Err(NetpbmError::BadSample(_))
        ));
        assert!(matches!(
            decode_pgm(b"P2\n1 1\n255\n256\n"),
            Err(NetpbmError::BadSample(_))
        ));
    }

    #[test]
    fn blit_clips() {
        let mut big = Raster::new(3, 3);
        let mut small = Raster::new(2, 2);
        small.fill_rect(0, 0, 2, 2, Raster::BLACK);
        big.blit(&small, 2, 2);
        assert_eq!(big.get(2, 2), Raster::BLACK);
        assert_eq!(big.get(1, 1), Raster::WHITE);
    }
}
