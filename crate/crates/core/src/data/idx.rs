use std::fs;
use std::path::Path;

use super::{DataError, Dataset, Payload, Sample};
use crate::filtrations::GreyImage;

const IMAGES_MAGIC: u32 = 0x0000_0803;
const LABELS_MAGIC: u32 = 0x0000_0801;

fn be_u32(bytes: &[u8], at: usize, path: &str) -> Result<u32, DataError> {
    bytes
        .get(at..at + 4)
        .map(|b| u32::from_be_bytes([b[0], b[1], b[2], b[3]]))
        .ok_or_else(|| DataError::TruncatedFile {
            path: path.to_string(),
            expected: at + 4,
        })
}

fn check_magic(bytes: &[u8], expected: u32, path: &str) -> Result<(), DataError> {
    let found = be_u32(bytes, 0, path)?;
    if found != expected {
        return Err(DataError::BadMagic {
            path: path.to_string(),
            expected,
            found,
        });
    }
    Ok(())
}

/// Parses an IDX3 unsigned-byte image file. `path` is only used in errors.
pub fn read_idx_images(bytes: &[u8], path: &str) -> Result<Vec<GreyImage>, DataError> {
    check_magic(bytes, IMAGES_MAGIC, path)?;
    let count = be_u32(bytes, 4, path)? as usize;
    let rows = be_u32(bytes, 8, path)? as usize;
    let cols = be_u32(bytes, 12, path)? as usize;
    let size = rows * cols;
    let expected = 16 + count * size;
    if bytes.len() < expected {
        return Err(DataError::TruncatedFile {
            path: path.to_string(),
            expected,
        });
    }
    bytes[16..expected]
        .chunks_exact(size.max(1))
        .take(count)
        .map(|px| Ok(GreyImage::new(cols, rows, px.iter().map(|&v| v as f64).collect())?))
        .collect()
}

/// Parses an IDX1 unsigned-byte label file.
pub fn read_idx_labels(bytes: &[u8], path: &str) -> Result<Vec<u8>, DataError> {
    check_magic(bytes, LABELS_MAGIC, path)?;
    let count = be_u32(bytes, 4, path)? as usize;
    let expected = 8 + count;
    if bytes.len() < expected {
        return Err(DataError::TruncatedFile {
            path: path.to_string(),
            expected,
        });
    }
    Ok(bytes[8..expected].to_vec())
}

/// Loads an image/label IDX pair. Pixels keep their raw 0..=255 values;
/// classes are `0..=max label`.
pub fn load_idx(images_path: &Path, labels_path: &Path) -> Result<Dataset, DataError> {
    let ipath = images_path.display().to_string();
    let lpath = labels_path.display().to_string();
    let images = read_idx_images(&fs::read(images_path)?, &ipath)?;
    let labels = read_idx_labels(&fs::read(labels_path)?, &lpath)?;
    if images.len() != labels.len() {
        return Err(DataError::CountMismatch {
            images: images.len(),
            labels: labels.len(),
        });
    }
    let classes = labels.iter().copied().max().map_or(0, |m| m as usize + 1);
    let samples = images
        .into_iter()
        .zip(labels)
        .enumerate()
        .map(|(i, (img, label))| Sample {
            id: format!("img{i}"),
            label: label as usize,
            payload: Payload::Image(img),
        })
        .collect();
    Dataset::new(
        samples,
        (0..classes).map(|c| c.to_string()).collect(),
        format!("idx images={ipath} labels={lpath}"),
    )
}

/// Writes an image/label IDX pair; pixel values are rounded and clamped to
/// 0..=255. All images must share one size.
pub fn write_idx(
    images_path: &Path,
    labels_path: &Path,
    images: &[GreyImage],
    labels: &[u8],
) -> Result<(), DataError> {
    if images.len() != labels.len() {
        return Err(DataError::CountMismatch {
            images: images.len(),
            labels: labels.len(),
        });
    }
    let (rows, cols) = images.first().map_or((0, 0), |i| (i.height(), i.width()));
    let mut out = Vec::with_capacity(16 + images.len() * rows * cols);
    for v in [IMAGES_MAGIC, images.len() as u32, rows as u32, cols as u32] {
        out.extend_from_slice(&v.to_be_bytes());
    }
    for img in images {
        if (img.height(), img.width()) != (rows, cols) {
            return Err(DataError::InvalidParameter("IDX images must share one size".into()));
        }
        out.extend(img.pixels().iter().map(|&v| v.round().clamp(0.0, 255.0) as u8));
    }
    fs::write(images_path, out)?;

    let mut out = Vec::with_capacity(8 + labels.len());
    out.extend_from_slice(&LABELS_MAGIC.to_be_bytes());
    out.extend_from_slice(&(labels.len() as u32).to_be_bytes());
    out.extend_from_slice(labels);
    fs::write(labels_path, out)?;
    Ok(())
}
