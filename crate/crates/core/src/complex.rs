//! Filtered simplicial complexes over ℤ₂.
//!
//! A [`FilteredComplex`] stores every simplex explicitly together with the
//! scale at which it enters the filtration. All constructors in
//! [`crate::filtrations`] produce values of this type and the reduction in
//! [`crate::persistence`] consumes it.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("simplex must have at least one vertex")]
    EmptySimplex,
    #[error("simplex {0} is already present")]
    DuplicateSimplex(Simplex),
    #[error("face {face} has value {face_value} greater than {value} of coface {coface}")]
    MonotonicityViolation {
        face: Simplex,
        face_value: f64,
        coface: Simplex,
        value: f64,
    },
    #[error("face {face} of {coface} is missing")]
    MissingFace { face: Simplex, coface: Simplex },
    #[error("non-finite filtration value for {0}")]
    NonFiniteValue(Simplex),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An abstract simplex given by its strictly increasing vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Builds a simplex from arbitrary vertex ids, sorting and deduplicating them.
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Result<Self, ComplexError> {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        Ok(Simplex(v))
    }

    pub fn vertex(v: u32) -> Self {
        Simplex(vec![v])
    }

    pub fn edge(a: u32, b: u32) -> Self {
        if a < b {
            Simplex(vec![a, b])
        } else {
            Simplex(vec![b, a])
        }
    }

    /// Caller guarantees `sorted` is strictly increasing and non-empty.
    pub(crate) fn from_sorted(sorted: Vec<u32>) -> Self {
        debug_assert!(!sorted.is_empty());
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        Simplex(sorted)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-one faces, dropping vertex 0, then 1, and so on.
    /// Vertices have an empty boundary.
    pub fn boundary(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|skip| {
                Simplex(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How [`FilteredComplex::add_simplex`] treats missing faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceCompletion {
    /// Missing faces are an error.
    Require,
    /// Missing faces are inserted at the value of the new simplex.
    Insert,
}

/// A finite simplicial complex with one filtration value per simplex.
#[derive(Debug, Clone, Default)]
pub struct FilteredComplex {
    simplices: Vec<(Simplex, f64)>,
    index: HashMap<Simplex, usize>,
    vertex_count: usize,
    max_dimension: usize,
}

impl FilteredComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Number of 0-simplices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn max_dimension(&self) -> usize {
        self.max_dimension
    }

    /// Simplices in insertion order.
    pub fn simplices(&self) -> &[(Simplex, f64)] {
        &self.simplices
    }

    pub fn value_of(&self, s: &Simplex) -> Option<f64> {
        self.index.get(s).map(|&i| self.simplices[i].1)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub(crate) fn position(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Count of simplices of each dimension, indexed by dimension.
    pub fn count_by_dimension(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dimension + 1];
        for (s, _) in &self.simplices {
            counts[s.dimension()] += 1;
        }
        if self.simplices.is_empty() {
            counts.clear();
        }
        counts
    }

    pub fn add_simplex(
        &mut self,
        s: Simplex,
        value: f64,
        completion: FaceCompletion,
    ) -> Result<(), ComplexError> {
        if !value.is_finite() {
            return Err(ComplexError::NonFiniteValue(s));
        }
        if self.index.contains_key(&s) {
            return Err(ComplexError::DuplicateSimplex(s));
        }
        for face in s.boundary() {
            match self.value_of(&face) {
                Some(fv) if fv > value => {
                    return Err(ComplexError::MonotonicityViolation {
                        face,
                        face_value: fv,
                        coface: s,
                        value,
                    })
                }
                Some(_) => {}
                None => match completion {
                    FaceCompletion::Require => {
                        return Err(ComplexError::MissingFace { face, coface: s })
                    }
                    FaceCompletion::Insert => self.add_simplex(face, value, completion)?,
                },
            }
        }
        self.push_unchecked(s, value);
        Ok(())
    }

    /// Inserts without checking faces; constructors that build complexes
    /// dimension by dimension use this and are covered by `validate` tests.
    pub(crate) fn push_unchecked(&mut self, s: Simplex, value: f64) {
        let dim = s.dimension();
        if dim == 0 {
            self.vertex_count += 1;
        }
        self.max_dimension = self.max_dimension.max(dim);
        self.index.insert(s.clone(), self.simplices.len());
        self.simplices.push((s, value));
    }

    /// Checks closure, monotonicity and finiteness.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for (s, value) in &self.simplices {
            if !value.is_finite() {
                return Err(ComplexError::NonFiniteValue(s.clone()));
            }
            for face in s.boundary() {
                match self.value_of(&face) {
                    None => {
                        return Err(ComplexError::MissingFace {
                            face,
                            coface: s.clone(),
                        })
                    }
                    Some(fv) if fv > *value => {
                        return Err(ComplexError::MonotonicityViolation {
                            face,
                            face_value: fv,
                            coface: s.clone(),
                            value: *value,
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    /// Indices into [`Self::simplices`] sorted by value, then dimension, then
    /// lexicographic vertex order. Faces always precede their cofaces.
    pub fn sort_filtration(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.simplices.len()).collect();
        order.sort_by(|&a, &b| {
            let (sa, va) = &self.simplices[a];
            let (sb, vb) = &self.simplices[b];
            va.total_cmp(vb)
                .then(sa.dimension().cmp(&sb.dimension()))
                .then_with(|| sa.cmp(sb))
        });
        order
    }

    /// Writes one simplex per line as `v1 v2 ... vk value`, in filtration order.
    pub fn write_text<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for i in self.sort_filtration() {
            let (s, v) = &self.simplices[i];
            for x in s.vertices() {
                write!(w, "{x} ")?;
            }
            writeln!(w, "{v}")?;
        }
        Ok(())
    }

    /// Parses the format produced by [`Self::write_text`]. Lines must list
    /// faces before cofaces; blank lines and `#` comments are skipped.
    pub fn read_text<R: BufRead>(r: R) -> Result<Self, ComplexError> {
        let mut complex = FilteredComplex::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| ComplexError::Parse {
                line: lineno + 1,
                message,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() < 2 {
                return Err(parse_err("expected vertices followed by a value".into()));
            }
            let (verts, value) = tokens.split_at(tokens.len() - 1);
            let value: f64 = value[0]
                .parse()
                .map_err(|e| parse_err(format!("bad value: {e}")))?;
            let verts = verts
                .iter()
                .map(|t| t.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| parse_err(format!("bad vertex id: {e}")))?;
            let s = Simplex::new(verts).map_err(|e| parse_err(e.to_string()))?;
            complex
                .add_simplex(s, value, FaceCompletion::Require)
                .map_err(|e| parse_err(e.to_string()))?;
        }
        Ok(complex)
    }
}
