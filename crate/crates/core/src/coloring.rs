use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Shape, VertexId};

/// Total assignment of a color in `1..=k` to every transversal edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    shape: Shape,
    colors: Vec<u8>,
}

/// Outcome of the spanning test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "spanning", rename_all = "snake_case")]
pub enum Spanning {
    Yes,
    /// `vertex` sees no edge of `color`.
    Missing {
        vertex: VertexId,
        color: u8,
    },
}

impl Spanning {
    pub fn holds(&self) -> bool {
        matches!(self, Spanning::Yes)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    r: usize,
    k: usize,
    parts: Vec<usize>,
    colors: Vec<u64>,
}

impl EdgeColoring {
    pub fn new(shape: Shape, colors: Vec<u8>) -> Result<Self> {
        let expected = usize::try_from(shape.edge_count())
            .map_err(|_| Error::InvalidShape("edge count exceeds address space".into()))?;
        if colors.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: colors.len(),
            });
        }
        let k = shape.k();
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c as usize > k) {
            return Err(Error::ColorOutOfRange { color: c as u64, k });
        }
        Ok(Self { shape, colors })
    }

    /// Colors every edge with `f(tuple)`, where `tuple` holds per-part indices.
    pub fn from_fn(shape: Shape, mut f: impl FnMut(&[usize]) -> u8) -> Result<Self> {
        let mut tuple = vec![0; shape.r()];
        let colors = (0..shape.edge_count())
            .map(|e| {
                shape.edge_tuple(e, &mut tuple);
                f(&tuple)
            })
            .collect();
        Self::new(shape, colors)
    }

    pub fn monochromatic(shape: Shape) -> Result<Self> {
        let n = shape.edge_count() as usize;
        Self::new(shape, vec![1; n])
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_of(&self, tuple: &[usize]) -> Result<u8> {
        Ok(self.colors[self.shape.edge_index(tuple)? as usize])
    }

    /// Applies a permutation of colors: color `c` becomes `perm[c - 1]`.
    pub fn recolor(&self, perm: &[u8]) -> Result<Self> {
        if perm.len() != self.shape.k() {
            return Err(Error::LengthMismatch {
                expected: self.shape.k(),
                actual: perm.len(),
            });
        }
        let colors = self.colors.iter().map(|&c| perm[c as usize - 1]).collect();
        Self::new(self.shape.clone(), colors)
    }

    /// `counts[v * k + (c - 1)]` is the number of color-`c` edges at global vertex `v`.
    pub fn color_degrees(&self) -> Vec<u64> {
        let k = self.shape.k();
        let mut counts = vec![0u64; self.shape.vertex_count() * k];
        let mut edge = vec![0; self.shape.r()];
        let mut it = self.shape.edges();
        while let Some(e) = it.next_into(&mut edge) {
            let c = self.colors[e as usize] as usize - 1;
            for &v in &edge {
                counts[v * k + c] += 1;
            }
        }
        counts
    }

    /// Whether every vertex sees every color; otherwise the first missing
    /// (vertex, color) pair in global vertex order.
    pub fn is_spanning(&self) -> Spanning {
        let k = self.shape.k();
        let counts = self.color_degrees();
        for (i, chunk) in counts.chunks(k).enumerate() {
            if let Some(c) = chunk.iter().position(|&n| n == 0) {
                return Spanning::Missing {
                    vertex: self.shape.vertex(i).expect("in range"),
                    color: c as u8 + 1,
                };
            }
        }
        Spanning::Yes
    }

    /// Text format: header `r k n_1 .. n_r`, then all colors on one line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}", self.shape.r(), self.shape.k());
        for n in self.shape.part_sizes() {
            out.push_str(&format!(" {n}"));
        }
        out.push('\n');
        let body: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        out.push_str(&body.join(" "));
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let nums = parse_numbers(header, "header")?;
        if nums.len() < 2 {
            return Err(Error::Parse("header needs r and k".into()));
        }
        let r = nums[0] as usize;
        let k = nums[1] as usize;
        if nums.len() != 2 + r {
            return Err(Error::Parse(format!(
                "header declares r = {r} but lists {} part sizes",
                nums.len() - 2
            )));
        }
        let parts: Vec<usize> = nums[2..].iter().map(|&n| n as usize).collect();
        let shape = Shape::new(r, k, parts)?;
        let mut colors = Vec::new();
        for line in lines {
            colors.extend(parse_numbers(line, "colors")?);
        }
        Self::from_raw(shape, colors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringJson {
            r: self.shape.r(),
            k: self.shape.k(),
            parts: self.shape.part_sizes().to_vec(),
            colors: self.colors.iter().map(|&c| c as u64).collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ColoringJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let shape = Shape::new(raw.r, raw.k, raw.parts)?;
        Self::from_raw(shape, raw.colors)
    }

    /// Accepts either format, chosen by the first non-blank character.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_text(text)
        }
    }

    fn from_raw(shape: Shape, colors: Vec<u64>) -> Result<Self> {
        let expected = shape.edge_count() as usize;
        if colors.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: colors.len(),
            });
        }
        let k = shape.k();
        let colors = colors
            .into_iter()
            .map(|c| {
                if c == 0 || c > k as u64 {
                    Err(Error::ColorOutOfRange { color: c, k })
                } else {
                    Ok(c as u8)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, colors)
    }
}

pub(crate) fn parse_numbers(line: &str, what: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {what}")))
        })
        .collect()
}
